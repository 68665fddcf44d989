"""Command line front end: ``singclass <subcommand> ...``.

Exit codes: 0 on success, 1 when the computation finished but a verification
came out negative (an identity fails, a derivation is not shown nilpotent, an
orbit meets the avoided point), 2 on usage errors.  ``--json`` prints one JSON
document with schema ``singclass/1`` where every integer is a decimal string.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence

from . import brieskorn, curves, hilbert, lnd, quotients
from .exactmath import ExactScalar, PolyParseError, SparsePoly, parse_poly

SCHEMA = "singclass/1"
DEFAULT_MMAX = 12

__all__ = ["CommandResult", "run", "main", "to_json", "render_text", "SCHEMA"]


@dataclass
class CommandResult:
    exit_code: int
    payload: dict[str, Any] = field(default_factory=dict)
    json_mode: bool = False
    error: str = ""

    @property
    def stdout(self) -> str:
        if self.exit_code == 2 and not self.payload:
            return ""
        return to_json(self.payload) if self.json_mode else render_text(self.payload)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# serialisation


def _plain(value: Any) -> Any:
    """Reduce a payload value to JSON-ready data; integers become strings."""
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        if value == -math.inf:
            return "-inf"
        raise TypeError(f"unexpected float {value!r} in payload")
    if isinstance(value, (Fraction, ExactScalar, SparsePoly)):
        return str(value)
    if isinstance(value, str):
        return value
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    raise TypeError(f"cannot serialise {type(value).__name__}")


def to_json(payload: dict[str, Any]) -> str:
    doc = {"schema": SCHEMA}
    doc.update(_plain(payload))
    return json.dumps(doc, ensure_ascii=False, sort_keys=False) + "\n"


# labels for text output; keys absent here print as "key: value"
LABELS = {
    "platonic_type": "Platonic type",
    "is_rational": "rational",
    "is_quotient": "quotient",
    "is_quotient_surface": "quotient",
    "quasirational_form_test": "quasirational (form test)",
    "quasirational_cross_check": "quasirational (dim A_N = 0)",
    "log_kodaira": "log Kodaira dimension",
    "admits_cplus": "admits C+ action",
    "is_gorenstein": "Gorenstein",
    "holds": "holds",
}
EQUALS_KEYS = {"N", "normal_degree"}


def text_value(value: Any) -> str:
    """Text form of a plain (already JSON-reduced) value."""
    if value is True:
        return "yes"
    if value is False:
        return "no"
    if value is None:
        return "n/a"
    if isinstance(value, list):
        return "[" + ", ".join(text_value(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {text_value(v)}" for k, v in value.items()) + "}"
    return str(value)


def _text_lines(payload: dict[str, Any], indent: str = "") -> list[str]:
    lines = []
    for key, value in payload.items():
        if key == "command":
            continue
        if isinstance(value, list) and value and all(isinstance(v, dict) for v in value):
            lines.append(f"{indent}{key}:")
            for item in value:
                lines.append(f"{indent}  -")
                lines.extend(_text_lines(item, indent + "    "))
            continue
        label = LABELS.get(key, key)
        if key in EQUALS_KEYS:
            lines.append(f"{indent}{label} = {text_value(value)}")
        elif isinstance(value, str) and "\n" in value:
            lines.append(f"{indent}{label}:")
            lines.extend(f"{indent}  {row}" for row in value.splitlines())
        else:
            lines.append(f"{indent}{label}: {text_value(value)}")
    return lines


def render_text(payload: dict[str, Any]) -> str:
    return "\n".join(_text_lines(_plain(payload))) + "\n"


# argument helpers


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError:
        raise UsageError(f"malformed integer list {text!r}") from None


def _point(text: str) -> dict[str, ExactScalar]:
    out = {}
    for item in text.split(","):
        name, eq, val = item.partition("=")
        if not eq:
            raise UsageError(f"point coordinates must look like var=value, got {item!r}")
        c = parse_poly(val)
        if not c.is_constant:
            raise UsageError(f"coordinate {name.strip()} must be a constant")
        out[name.strip()] = c.constant_term()
    return out


def _read_derivation(text: str) -> lnd.Derivation:
    if text.startswith("@"):
        with open(text[1:], encoding="utf-8") as fh:
            text = fh.read()
    return lnd.parse_derivation(text)


def _mmax(args) -> int:
    if args.mmax < 1:
        raise UsageError("--mmax must be positive")
    return args.mmax


# subcommands


def _cmd_triple(args) -> tuple[int, dict]:
    if args.sweep is not None:
        return _triple_sweep(args.sweep)
    if len(args.exponents) != 3:
        raise UsageError("triple needs exactly three exponents P Q R (or --sweep RMAX)")
    c = brieskorn.classify_triple(*args.exponents, m_max=_mmax(args))
    payload = {
        "command": "triple",
        "triple": list(c.triple),
        "platonic": c.platonic,
        "platonic_type": c.platonic_type,
        "N": c.N,
        "is_rational": c.is_rational,
        "is_quotient": c.is_quotient,
        "quasirational": c.quasirational,
        "quasirational_cross_check": c.quasirational_cross_check,
        "log_kodaira": c.log_kodaira,
        "admits_cplus": c.admits_cplus,
        "is_gorenstein": c.is_gorenstein,
        "pbar_table": list(c.pbar_table),
    }
    consistent = c.quasirational == c.quasirational_cross_check and c.platonic == (c.N < 0)
    return (0 if consistent else 1), payload


def _triple_sweep(rmax: int) -> tuple[int, dict]:
    if rmax < 2:
        raise UsageError("--sweep needs RMAX >= 2")
    count = platonic = disagreements = 0
    for p in range(2, rmax + 1):
        for q in range(p, rmax + 1):
            for r in range(q, rmax + 1):
                count += 1
                ci = brieskorn.triple_ci(p, q, r)
                n = hilbert.normal_degree(ci)
                plat = brieskorn.is_platonic(p, q, r)
                platonic += plat
                quasi = brieskorn.quasirational_conditions(p, q, r)
                if not (plat == (n < 0) and quasi == (hilbert.graded_dim(ci, n) == 0)):
                    disagreements += 1
    payload = {
        "command": "triple-sweep",
        "rmax": rmax,
        "triples": count,
        "platonic": platonic,
        "disagreements": disagreements,
    }
    return (0 if disagreements == 0 else 1), payload


def _ci_payload(r: hilbert.CIReport) -> dict:
    return {
        "weights": list(r.ci.weights),
        "degrees": list(r.ci.degrees),
        "isolated_assumed": r.ci.isolated,
        "normal_degree": r.normal_degree,
        "is_rational": r.is_rational,
        "log_kodaira": r.log_kodaira,
        "delta_table": list(r.delta_table),
        "pbar_table": list(r.pbar_table),
        "quasirational_form_test": r.quasirational_form_test,
        "is_quotient_surface": r.is_quotient_surface,
    }


def _cmd_ci(args) -> tuple[int, dict]:
    try:
        ci = hilbert.WeightedCI(tuple(_int_list(args.weights)), tuple(_int_list(args.degrees or "")))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    payload = {"command": "ci"}
    payload.update(_ci_payload(hilbert.classify_ci(ci, _mmax(args))))
    return 0, payload


def _cmd_veronese(args) -> tuple[int, dict]:
    ci = brieskorn.triple_ci(*args.exponents)
    r = hilbert.veronese_analysis(ci, args.d, _mmax(args))
    payload = {
        "command": "veronese",
        "triple": list(args.exponents),
        "order": r.order,
        "N": hilbert.normal_degree(ci),
        "delta_table": list(r.delta_table),
        "pbar_table": list(r.pbar_table),
        "is_rational": r.is_rational,
        "is_quotient": r.is_quotient,
        "log_kodaira": r.log_kodaira,
        "min_rational_order": r.min_rational_order,
    }
    return 0, payload


def _cmd_hypersurface(args) -> tuple[int, dict]:
    r = brieskorn.classify_fermat_hypersurface(_int_list(args.exponents))
    payload = {
        "command": "hypersurface",
        "exponents": list(r.exponents),
        "N": r.N,
        "is_rational": r.is_rational,
        "steinbrink_no_coprime_solutions": r.steinbrink_no_coprime_solutions,
    }
    return 0, payload


def _cmd_cone(args) -> tuple[int, dict]:
    form = None
    if args.form is not None:
        coeffs = _int_list(args.form)
        if len(coeffs) != args.D + 1:
            raise UsageError(f"--form needs {args.D + 1} coefficients for degree {args.D}")
        form = SparsePoly(("x", "y"), {(args.D - i, i): c for i, c in enumerate(coeffs)})
    r = brieskorn.classify_cone_surface(args.D, args.M, form)
    payload = {
        "command": "cone",
        "d": r.d,
        "m": r.m,
        "N": r.N,
        "quasirational": r.quasirational,
        "solutions_exist": r.solutions_exist,
        "squarefree_checked": r.squarefree_checked,
    }
    if form is not None:
        payload["form"] = form
    return (1 if r.squarefree_checked is False else 0), payload


def _identity_payload(identity: curves.WeightedFermatIdentity, rep: curves.VerificationReport) -> dict:
    return {
        "name": identity.name,
        "status": identity.status,
        "exponents": list(identity.exponents),
        "components": [[c, poly] for c, poly in identity.components],
        "holds": rep.holds,
        "first_mismatch": None if rep.first_mismatch is None else list(rep.first_mismatch),
        "degrees": list(rep.degrees),
        "pairwise_coprime": list(rep.pairwise_coprime),
    }


def _cmd_schwartz(args) -> tuple[int, dict]:
    name = args.name
    if name == "all":
        identities = curves.schwartz_catalog(range(2, 51))
    else:
        try:
            identities = [curves.identity_by_name(name)]
        except (KeyError, ValueError) as exc:
            raise UsageError(str(exc).strip("'\"")) from None
    reports = [_identity_payload(i, curves.verify_identity(i)) for i in identities]
    failed = [r["name"] for r in reports if not r["holds"]]
    payload = {
        "command": "schwartz",
        "checked": len(reports),
        "failed": failed,
        "identities": reports,
    }
    return (1 if failed else 0), payload


def _cmd_trivial(args) -> tuple[int, dict]:
    exps = _int_list(args.exponents)
    if len(exps) != 3 or min(exps) < 1:
        raise UsageError("--exponents needs three positive integers")
    f = parse_poly(args.f)
    if len(f.variables) != 1:
        raise UsageError("--f must be univariate")
    consts = [parse_poly(c).constant_term() for c in args.constants.split(",")]
    if len(consts) != 3:
        raise UsageError("--constants needs three values")
    try:
        comps = curves.build_trivial(consts, f, exps)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = curves.check_solution(comps, exps)
    payload = {
        "command": "trivial",
        "exponents": exps,
        "M": math.lcm(*exps),
        "components": [[c, poly] for c, poly in comps],
        "holds": rep.holds,
        "pairwise_coprime": list(rep.pairwise_coprime),
        "has_constant_component": rep.has_constant_component,
    }
    return (0 if rep.holds else 1), payload


def _cmd_cyclic(args) -> tuple[int, dict]:
    try:
        q = quotients.CyclicQuotientData(args.D, args.E)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    desc = quotients.descend_lnd(q)
    payload = {
        "command": "cyclic",
        "d": q.d,
        "e": q.e,
        "hj_string": quotients.hj_expansion(q),
        "generators": [list(g) for g in desc.generators],
        "generator_names": list(desc.names),
        "is_gorenstein": quotients.is_gorenstein(q),
        "derivation": str(desc.derivation),
        "relations": list(desc.relations),
        "invariance_ok": desc.invariance_ok,
        "relations_preserved": desc.relations_preserved,
    }
    ok = desc.invariance_ok and desc.relations_preserved
    return (0 if ok else 1), payload


def _cmd_lnd(args) -> tuple[int, dict]:
    if args.action == "suspend":
        p = parse_poly(args.target)
        derivation, relation = lnd.build_suspension(p)
    else:
        derivation = _read_derivation(args.target)
        relation = None
    verdict = lnd.is_locally_nilpotent(derivation, args.cap)
    payload: dict[str, Any] = {
        "command": f"lnd-{args.action}",
        "variables": list(derivation.variables),
        "derivation": str(derivation),
        "status": verdict.status,
        "steps": dict(verdict.steps),
        "cap": verdict.cap,
    }
    code = 0 if verdict.nilpotent else 1
    relations = [parse_poly(r, derivation.variables) for r in args.relation]
    if relation is not None:
        relations.insert(0, relation)
        annihilated = lnd.apply(derivation, relation).is_zero
        payload["relation"] = relation
        payload["relation_annihilated"] = annihilated
        code = code or (0 if annihilated else 1)
    if args.action in ("flow", "suspend") and verdict.nilpotent:
        flow = lnd.exp_flow(derivation, verdict.cap)
        payload["flow"] = str(flow)
        if args.start:
            start = _point(args.start)
            avoid = _point(args.avoid) if args.avoid else {v: 0 for v in derivation.variables}
            missing = set(derivation.variables) - set(start) | set(derivation.variables) - set(avoid)
            if missing:
                raise UsageError(f"points must give every variable; missing {sorted(missing)}")
            try:
                orbit = lnd.orbit_avoids(flow, relations, avoid, start)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            payload["orbit"] = {v: orbit.orbit[v] for v in derivation.variables}
            payload["on_variety"] = orbit.on_variety
            payload["avoids"] = orbit.avoids
            code = code or (0 if orbit.on_variety and orbit.avoids else 1)
    return code, payload


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="singclass", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p, mmax=False):
        p.add_argument("--json", action="store_true", help="print one JSON document")
        if mmax:
            p.add_argument("--mmax", type=int, default=DEFAULT_MMAX)

    p = sub.add_parser("triple", help="classify the Pham-Brieskorn surface x^P + y^Q + z^R = 0")
    p.add_argument("exponents", type=int, nargs="*")
    p.add_argument("--sweep", type=int, metavar="RMAX", help="check all triples up to RMAX")
    common(p, mmax=True)
    p.set_defaults(func=_cmd_triple)

    p = sub.add_parser("ci", help="classify a weighted complete intersection")
    p.add_argument("--weights", required=True)
    p.add_argument("--degrees", default="")
    common(p, mmax=True)
    p.set_defaults(func=_cmd_ci)

    p = sub.add_parser("veronese", help="quotient of V_{P,Q,R} by mu_D")
    p.add_argument("exponents", type=int, nargs=3)
    p.add_argument("--d", type=int, required=True)
    common(p, mmax=True)
    p.set_defaults(func=_cmd_veronese)

    p = sub.add_parser("hypersurface", help="Fermat hypersurface sum x_i^p_i = 0")
    p.add_argument("exponents")
    common(p)
    p.set_defaults(func=_cmd_hypersurface)

    p = sub.add_parser("cone", help="cone surface F_D(x, y) = z^M")
    p.add_argument("D", type=int)
    p.add_argument("M", type=int)
    p.add_argument("--form", help="coefficients of x^D, x^(D-1) y, ..., y^D")
    common(p)
    p.set_defaults(func=_cmd_cone)

    p = sub.add_parser("schwartz", help="verify the classical polynomial identities")
    p.add_argument("name", nargs="?", default="all")
    common(p)
    p.set_defaults(func=_cmd_schwartz)

    p = sub.add_parser("trivial", help="build and check a trivial solution")
    p.add_argument("--exponents", required=True)
    p.add_argument("--f", required=True)
    p.add_argument("--constants", default="1,1,-2")
    common(p)
    p.set_defaults(func=_cmd_trivial)

    p = sub.add_parser("cyclic", help="cyclic quotient singularity C^2 / mu_D with twist E")
    p.add_argument("D", type=int)
    p.add_argument("E", type=int)
    common(p)
    p.set_defaults(func=_cmd_cyclic)

    p = sub.add_parser("lnd", help="locally nilpotent derivations")
    p.add_argument("action", choices=("verify", "flow", "suspend"))
    p.add_argument("target", help="derivation text 'x -> expr; ...' (or @file), or p for suspend")
    p.add_argument("--cap", type=int)
    p.add_argument("--relation", action="append", default=[])
    p.add_argument("--start")
    p.add_argument("--avoid")
    common(p)
    p.set_defaults(func=_cmd_lnd)
    return parser


def run(argv: Sequence[str]) -> CommandResult:
    parser = build_parser()
    json_mode = "--json" in argv
    try:
        args = parser.parse_args(list(argv))
        if args.command is None:
            raise UsageError("missing subcommand")
        if getattr(args, "cap", None) is not None and args.cap < 1:
            raise UsageError("--cap must be positive")
        code, payload = args.func(args)
    except (UsageError, PolyParseError, ValueError, KeyError, OSError) as exc:
        return CommandResult(2, {}, json_mode, f"singclass: error: {exc}")
    return CommandResult(code, payload, json_mode)


def main(argv: Sequence[str] | None = None) -> int:
    result = run(sys.argv[1:] if argv is None else argv)
    if result.error:
        print(result.error, file=sys.stderr)
    else:
        sys.stdout.write(result.stdout)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
