"""Exact arithmetic: rationals, real quadratic fields, sparse polynomials, Hilbert series.

Scalars live in Q or in Q(sqrt(n)) for a square-free radicand n > 1.  A value
tagged with one radicand never mixes with a value tagged with another; plain
rationals embed into every quadratic field.

Polynomials are immutable maps from exponent tuples to nonzero scalars over an
ordered variable list.  Text rendering lists terms in graded-lex order, which
is the canonical form printed by the command line tool.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Sequence

import numpy as np

__all__ = [
    "ExactScalar",
    "SparsePoly",
    "SeriesSpec",
    "RingMismatchError",
    "InexactDivisionError",
    "PolyParseError",
    "as_scalar",
    "poly_arith",
    "poly_gcd",
    "series_coeffs",
    "parse_poly",
]

MAX_EXPONENT = 2**63 - 1


class RingMismatchError(ValueError):
    """Operands live in different scalar rings or polynomial rings."""


class InexactDivisionError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class PolyParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at byte offset {offset})")
        self.offset = offset


def _squarefree_part(n: int) -> tuple[int, int]:
    """Return (k, m) with n = k^2 * m and m square-free."""
    k, m, f = 1, n, 2
    while f * f <= m:
        while m % (f * f) == 0:
            m //= f * f
            k *= f
        f += 1
    return k, m


def _join_radicand(r1: int | None, r2: int | None) -> int | None:
    if r1 is None:
        return r2
    if r2 is None or r1 == r2:
        return r1
    raise RingMismatchError(f"cannot mix Q(sqrt({r1})) with Q(sqrt({r2}))")


class ExactScalar:
    """The number a + b*sqrt(radicand), or the rational a when radicand is None."""

    __slots__ = ("a", "b", "radicand")

    def __init__(self, a: int | Fraction = 0, b: int | Fraction = 0, radicand: int | None = None):
        a = Fraction(a)
        b = Fraction(b)
        if radicand is not None:
            if radicand < 2 or _squarefree_part(radicand)[0] != 1:
                raise ValueError(f"radicand must be square-free and > 1, got {radicand}")
        elif b:
            raise ValueError("a nonzero radical part needs a radicand")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "radicand", radicand)

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    @classmethod
    def sqrt(cls, n: int) -> ExactScalar:
        """sqrt(n) for a positive integer n, pulling out square factors."""
        if n < 0:
            raise ValueError("only real quadratic fields are supported")
        k, m = _squarefree_part(n)
        if m == 1:
            return cls(k)
        return cls(0, k, m)

    def _coerce(self, other) -> ExactScalar | None:
        if isinstance(other, ExactScalar):
            return other
        if isinstance(other, (int, Rational)):
            return ExactScalar(Fraction(other))
        return None

    @property
    def is_rational(self) -> bool:
        return self.b == 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        _join_radicand(self.radicand, o.radicand)
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.radicand))

    def __neg__(self) -> ExactScalar:
        return ExactScalar(-self.a, -self.b, self.radicand)

    def __add__(self, other) -> ExactScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = _join_radicand(self.radicand, o.radicand)
        return ExactScalar(self.a + o.a, self.b + o.b, r)

    __radd__ = __add__

    def __sub__(self, other) -> ExactScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> ExactScalar:
        return (-self) + other

    def __mul__(self, other) -> ExactScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        r = _join_radicand(self.radicand, o.radicand)
        if self.b == 0 and o.b == 0:
            return ExactScalar(self.a * o.a, 0, r)
        return ExactScalar(self.a * o.a + self.b * o.b * r, self.a * o.b + self.b * o.a, r)

    __rmul__ = __mul__

    def conjugate(self) -> ExactScalar:
        return ExactScalar(self.a, -self.b, self.radicand)

    def norm(self) -> Fraction:
        return self.a * self.a - (self.b * self.b * self.radicand if self.b else 0)

    def inverse(self) -> ExactScalar:
        if not self:
            raise ZeroDivisionError("inverse of zero")
        n = self.norm()
        c = self.conjugate()
        return ExactScalar(c.a / n, c.b / n, self.radicand)

    def __truediv__(self, other) -> ExactScalar:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> ExactScalar:
        return self.inverse() * other

    def __pow__(self, k: int) -> ExactScalar:
        if k < 0:
            return self.inverse() ** (-k)
        result = ExactScalar(1, 0, self.radicand)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __repr__(self) -> str:
        if self.radicand is None:
            return f"ExactScalar({self.a})"
        return f"ExactScalar({self.a}, {self.b}, radicand={self.radicand})"

    def __str__(self) -> str:
        if self.b == 0:
            return str(self.a)
        rad = f"sqrt({self.radicand})"
        if self.b == 1:
            radical = rad
        elif self.b == -1:
            radical = f"-{rad}"
        else:
            radical = f"{self.b}*{rad}"
        if self.a == 0:
            return radical
        sign = "" if radical.startswith("-") else "+"
        return f"({self.a}{sign}{radical})"


def as_scalar(value) -> ExactScalar:
    if isinstance(value, ExactScalar):
        return value
    if isinstance(value, (int, Rational)):
        return ExactScalar(Fraction(value))
    raise TypeError(f"cannot interpret {value!r} as an exact scalar")


ONE = ExactScalar(1)
ZERO = ExactScalar(0)

Exponents = tuple[int, ...]


def _grlex_key(exps: Exponents) -> tuple:
    return (sum(exps), exps)


class SparsePoly:
    """Sparse multivariate polynomial with exact scalar coefficients.

    >>> s = SparsePoly.var("s")
    >>> str((s + 1) * (s - 1))
    's^2 - 1'
    """

    __slots__ = ("_vars", "_terms", "_radicand", "_hash")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Mapping[Exponents, object] | None = None,
        radicand: int | None = None,
    ):
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"repeated variable names in {variables}")
        clean: dict[Exponents, ExactScalar] = {}
        r = radicand
        for exps, c in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(variables):
                raise ValueError(f"exponent vector {exps} does not match {variables}")
            for e in exps:
                if e < 0 or e > MAX_EXPONENT:
                    raise OverflowError(f"exponent {e} outside machine-word range")
            c = as_scalar(c)
            r = _join_radicand(r, c.radicand)
            if c:
                if exps in clean:
                    c = clean[exps] + c
                    if not c:
                        del clean[exps]
                        continue
                clean[exps] = c
        self._vars = variables
        self._terms = clean
        self._radicand = r
        self._hash = None

    @classmethod
    def _raw(cls, variables: tuple[str, ...], terms: dict, radicand: int | None) -> SparsePoly:
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p._vars = variables
        p._terms = terms
        p._radicand = radicand
        p._hash = None
        return p

    @classmethod
    def zero(cls, variables: Sequence[str] = ("s",), radicand: int | None = None) -> SparsePoly:
        return cls(variables, {}, radicand)

    @classmethod
    def constant(cls, c, variables: Sequence[str] = ("s",), radicand: int | None = None) -> SparsePoly:
        return cls(variables, {(0,) * len(tuple(variables)): c}, radicand)

    @classmethod
    def var(cls, name: str, variables: Sequence[str] | None = None, radicand: int | None = None) -> SparsePoly:
        variables = tuple(variables) if variables is not None else (name,)
        exps = tuple(1 if v == name else 0 for v in variables)
        if name not in variables:
            raise ValueError(f"{name!r} is not among {variables}")
        return cls(variables, {exps: 1}, radicand)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, var: str = "s", radicand: int | None = None) -> SparsePoly:
        """Univariate polynomial from ascending coefficients."""
        return cls((var,), {(i,): c for i, c in enumerate(coeffs)}, radicand)

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def radicand(self) -> int | None:
        return self._radicand

    @property
    def terms(self) -> Mapping[Exponents, ExactScalar]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_term(self) -> ExactScalar:
        return self._terms.get((0,) * len(self._vars), ZERO)

    def coeff(self, exps: Exponents) -> ExactScalar:
        return self._terms.get(tuple(exps), ZERO)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, var: str) -> int:
        i = self._vars.index(var)
        return max((e[i] for e in self._terms), default=-1)

    def weighted_degree(self, weights: Sequence[int]) -> int:
        if len(weights) != len(self._vars):
            raise ValueError("one weight per variable required")
        if not self._terms:
            raise ValueError("weighted degree of the zero polynomial is undefined")
        return max(sum(w * e for w, e in zip(weights, exps)) for exps in self._terms)

    def used_variables(self) -> tuple[str, ...]:
        return tuple(v for i, v in enumerate(self._vars) if any(e[i] for e in self._terms))

    def leading(self) -> tuple[Exponents, ExactScalar]:
        exps = max(self._terms, key=_grlex_key)
        return exps, self._terms[exps]

    # ring plumbing

    def _check(self, other: SparsePoly) -> int | None:
        if self._vars != other._vars:
            raise RingMismatchError(f"variable lists differ: {self._vars} vs {other._vars}")
        return _join_radicand(self._radicand, other._radicand)

    def _lift(self, other) -> SparsePoly | None:
        if isinstance(other, SparsePoly):
            return other
        if isinstance(other, (int, Rational, ExactScalar)):
            return SparsePoly.constant(other, self._vars)
        return None

    def __eq__(self, other) -> bool:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        if self._vars != o._vars:
            return False
        return self._terms == o._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vars, frozenset(self._terms.items())))
        return self._hash

    def __neg__(self) -> SparsePoly:
        return SparsePoly._raw(self._vars, {e: -c for e, c in self._terms.items()}, self._radicand)

    def __add__(self, other) -> SparsePoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        r = self._check(o)
        out = dict(self._terms)
        for e, c in o._terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return SparsePoly._raw(self._vars, out, r)

    __radd__ = __add__

    def __sub__(self, other) -> SparsePoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> SparsePoly:
        return (-self) + other

    def __mul__(self, other) -> SparsePoly:
        o = self._lift(other)
        if o is None:
            return NotImplemented
        r = self._check(o)
        out: dict[Exponents, ExactScalar] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e)
                out[e] = c1 * c2 if v is None else v + c1 * c2
        out = {e: c for e, c in out.items() if c}
        for e in out:
            if max(e, default=0) > MAX_EXPONENT:
                raise OverflowError("exponent overflow in product")
        return SparsePoly._raw(self._vars, out, r)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> SparsePoly:
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers need a non-negative integer exponent")
        result = SparsePoly.constant(1, self._vars, self._radicand)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def scale(self, c) -> SparsePoly:
        c = as_scalar(c)
        r = _join_radicand(self._radicand, c.radicand)
        if not c:
            return SparsePoly._raw(self._vars, {}, r)
        return SparsePoly._raw(self._vars, {e: v * c for e, v in self._terms.items()}, r)

    def exact_div(self, other: SparsePoly) -> SparsePoly:
        """Quotient q with self == q * other; raises if other does not divide self."""
        o = self._lift(other)
        r = self._check(o)
        if o.is_zero:
            raise ZeroDivisionError("division by the zero polynomial")
        lead_e, lead_c = o.leading()
        inv = lead_c.inverse()
        rem = self
        quot: dict[Exponents, ExactScalar] = {}
        while not rem.is_zero:
            e, c = rem.leading()
            shift = tuple(a - b for a, b in zip(e, lead_e))
            if min(shift, default=0) < 0:
                raise InexactDivisionError("divisor does not divide dividend")
            q = c * inv
            quot[shift] = q
            rem = rem - SparsePoly._raw(self._vars, {shift: q}, r) * o
        return SparsePoly._raw(self._vars, quot, r)

    def diff(self, var: str) -> SparsePoly:
        i = self._vars.index(var)
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                ne = e[:i] + (e[i] - 1,) + e[i + 1 :]
                out[ne] = c * e[i]
        return SparsePoly._raw(self._vars, out, self._radicand)

    def in_ring(self, variables: Sequence[str]) -> SparsePoly:
        """Re-express over another variable list containing every used variable."""
        variables = tuple(variables)
        index = {v: i for i, v in enumerate(variables)}
        used = self.used_variables()
        for v in used:
            if v not in index:
                raise RingMismatchError(f"variable {v!r} missing from {variables}")
        out = {}
        for e, c in self._terms.items():
            ne = [0] * len(variables)
            for v, k in zip(self._vars, e):
                if k:
                    ne[index[v]] = k
            out[tuple(ne)] = c
        return SparsePoly._raw(variables, out, self._radicand)

    def compose(self, images: Mapping[str, SparsePoly], variables: Sequence[str] | None = None) -> SparsePoly:
        """Substitute polynomials for variables; unmapped variables stay themselves."""
        if variables is None:
            sample = next(iter(images.values()), None)
            variables = sample.variables if sample is not None else self._vars
        variables = tuple(variables)
        r = self._radicand
        subst = []
        for v in self._vars:
            img = images.get(v)
            if img is None:
                img = SparsePoly.var(v, variables)
            elif img.variables != variables:
                img = img.in_ring(variables)
            r = _join_radicand(r, img.radicand)
            subst.append(img)
        cache: dict[tuple[int, int], SparsePoly] = {}

        def power(i: int, k: int) -> SparsePoly:
            key = (i, k)
            if key not in cache:
                cache[key] = subst[i] ** k
            return cache[key]

        total = SparsePoly.zero(variables, r)
        for e, c in self._terms.items():
            term = SparsePoly.constant(c, variables, r)
            for i, k in enumerate(e):
                if k:
                    term = term * power(i, k)
            total = total + term
        return total

    def evaluate(self, point: Mapping[str, object]) -> ExactScalar:
        total = ZERO
        for e, c in self._terms.items():
            v = c
            for name, k in zip(self._vars, e):
                if k:
                    v = v * as_scalar(point[name]) ** k
            total = total + v
        return total

    def univariate_coeffs(self) -> list[ExactScalar]:
        """Ascending coefficient list of a polynomial in one variable."""
        if len(self._vars) != 1:
            raise ValueError(f"expected a univariate polynomial, got variables {self._vars}")
        if not self._terms:
            return []
        out = [ZERO] * (self.degree() + 1)
        for (k,), c in self._terms.items():
            out[k] = c
        return out

    def __repr__(self) -> str:
        return f"SparsePoly({self._vars}, {str(self)!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for e in sorted(self._terms, key=_grlex_key, reverse=True):
            c = self._terms[e]
            mono = "*".join(
                v if k == 1 else f"{v}^{k}" for v, k in zip(self._vars, e) if k
            )
            if c.b == 0:
                neg = c.a < 0
                mag = -c.a if neg else c.a
                if not mono:
                    body = str(mag)
                elif mag == 1:
                    body = mono
                else:
                    body = f"{mag}*{mono}"
            else:
                neg = c.a == 0 and c.b < 0
                cs = str(-c if neg else c)
                body = f"{cs}*{mono}" if mono else cs
            if not pieces:
                pieces.append(f"-{body}" if neg else body)
            else:
                pieces.append(f"- {body}" if neg else f"+ {body}")
        return " ".join(pieces)


def poly_arith(op: str, a: SparsePoly, b) -> SparsePoly:
    """Dispatch one of add, sub, mul, pow, exact_div."""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "pow":
        return a ** b
    if op == "exact_div":
        return a.exact_div(b)
    raise ValueError(f"unknown polynomial operation {op!r}")


def _trim(c: list[ExactScalar]) -> list[ExactScalar]:
    while c and not c[-1]:
        c.pop()
    return c


def _poly_mod(a: list[ExactScalar], b: list[ExactScalar]) -> list[ExactScalar]:
    a = list(a)
    inv = b[-1].inverse()
    db = len(b) - 1
    while len(a) > db:
        q = a[-1] * inv
        shift = len(a) - 1 - db
        for i, bc in enumerate(b):
            a[shift + i] = a[shift + i] - q * bc
        a.pop()
        _trim(a)
    return a


def poly_gcd(a: SparsePoly, b: SparsePoly) -> SparsePoly:
    """Monic gcd of two univariate polynomials over Q or Q(sqrt(n)).

    gcd(0, 0) is the zero polynomial.
    """
    if len(a.variables) != 1 or len(b.variables) != 1:
        raise ValueError("poly_gcd needs univariate polynomials")
    r = a._check(b)
    x = _trim(a.univariate_coeffs())
    y = _trim(b.univariate_coeffs())
    while y:
        x, y = y, _poly_mod(x, y)
    if not x:
        return SparsePoly.zero(a.variables, r)
    inv = x[-1].inverse()
    return SparsePoly(a.variables, {(i,): c * inv for i, c in enumerate(x)}, r)


@dataclass(frozen=True)
class SeriesSpec:
    """Hilbert series prod(1 - t^d_i) / prod(1 - t^w_j) truncated at order N."""

    numerators: tuple[int, ...]
    denominators: tuple[int, ...]
    order: int

    def __post_init__(self):
        object.__setattr__(self, "numerators", tuple(int(d) for d in self.numerators))
        object.__setattr__(self, "denominators", tuple(int(w) for w in self.denominators))
        if any(d <= 0 for d in self.numerators + self.denominators):
            raise ValueError("series exponents must be strictly positive")
        if self.order < 0:
            raise ValueError("truncation order must be non-negative")


def _geometric_fold(c: np.ndarray, w: int) -> np.ndarray:
    # multiply by 1/(1 - t^w): c[i] += c[i - w] for increasing i
    n = len(c)
    pad = (-n) % w
    if pad:
        c = np.concatenate([c, np.zeros(pad, dtype=c.dtype)])
    return c.reshape(-1, w).cumsum(axis=0).ravel()[:n]


def series_coeffs(spec: SeriesSpec) -> list[int]:
    """Coefficients c_0..c_N of the rational generating function of ``spec``."""
    n = spec.order + 1
    k = len(spec.denominators)
    bound = math.comb(spec.order + k, k) << len(spec.numerators)
    dtype = np.int64 if bound < 2**62 else object
    c = np.zeros(n, dtype=dtype)
    c[0] = 1
    for w in spec.denominators:
        if w < n:
            c = _geometric_fold(c, w)
        else:
            pass  # only the constant term of 1/(1 - t^w) survives truncation
    for d in spec.numerators:
        if d < n:
            c[d:] = c[d:] - c[:-d]
    return [int(x) for x in c]


# polynomial text parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    raw = text.encode()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip() == "":
                break
            offset = len(text[:pos].encode())
            while offset < len(raw) and raw[offset : offset + 1].isspace():
                offset += 1
            raise PolyParseError(f"unexpected character {text[pos:].lstrip()[:1]!r}", offset)
        start = len(text[: m.start(m.lastindex)].encode())
        if m.group(1):
            out.append(("num", m.group(1), start))
        elif m.group(2):
            out.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            out.append(("op", op, start))
        pos = m.end()
    out.append(("end", "", len(raw)))
    return out


class _Parser:
    def __init__(self, tokens, variables: tuple[str, ...]):
        self.tokens = tokens
        self.i = 0
        self.vars = variables

    def peek(self):
        return self.tokens[self.i]

    def take(self, kind=None, value=None):
        tok = self.tokens[self.i]
        if (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind
            got = tok[1] or "end of input"
            raise PolyParseError(f"expected {want!r}, found {got!r}", tok[2])
        self.i += 1
        return tok

    def expr(self) -> SparsePoly:
        acc = self.term()
        while self.peek()[0] == "op" and self.peek()[1] in "+-":
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> SparsePoly:
        acc = self.unary()
        while self.peek()[0] == "op" and self.peek()[1] in "*/":
            tok = self.take()
            rhs = self.unary()
            if tok[1] == "*":
                acc = acc * rhs
            else:
                if not rhs.is_constant or rhs.is_zero:
                    raise PolyParseError("division only by a nonzero constant", tok[2])
                acc = acc.scale(rhs.constant_term().inverse())
        return acc

    def unary(self) -> SparsePoly:
        tok = self.peek()
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            inner = self.unary()
            return -inner if tok[1] == "-" else inner
        return self.power()

    def power(self) -> SparsePoly:
        base = self.atom()
        if self.peek() == ("op", "^", self.peek()[2]):
            self.take()
            tok = self.take("num")
            base = base ** int(tok[1])
        return base

    def atom(self) -> SparsePoly:
        tok = self.peek()
        if tok[0] == "num":
            self.take()
            return SparsePoly.constant(int(tok[1]), self.vars)
        if tok[0] == "name" and tok[1] == "sqrt":
            self.take()
            self.take("op", "(")
            n = self.take("num")
            self.take("op", ")")
            return SparsePoly.constant(ExactScalar.sqrt(int(n[1])), self.vars)
        if tok[0] == "name":
            self.take()
            if tok[1] not in self.vars:
                raise PolyParseError(f"unknown variable {tok[1]!r}", tok[2])
            return SparsePoly.var(tok[1], self.vars)
        if tok == ("op", "(", tok[2]):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise PolyParseError(f"unexpected token {tok[1] or 'end of input'!r}", tok[2])


def parse_poly(text: str, variables: Iterable[str] | None = None) -> SparsePoly:
    """Parse an expression such as ``"(1+2*sqrt(3))*s^2 - s^4"``.

    Without an explicit variable list the variables are taken in order of first
    appearance, defaulting to ``s`` for constants.
    """
    tokens = _tokenize(text)
    if variables is None:
        seen: list[str] = []
        for kind, val, _ in tokens:
            if kind == "name" and val != "sqrt" and val not in seen:
                seen.append(val)
        variables = tuple(seen) or ("s",)
    parser = _Parser(tokens, tuple(variables))
    result = parser.expr()
    parser.take("end")
    return result
