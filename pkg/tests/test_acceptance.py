"""Exit criteria for the build; each test records one PASS/FAIL line in the terminal summary.

Every tolerance here is exact: identities must expand to the zero polynomial
and all integer comparisons must agree with zero disagreements.
"""

import json
import random
import time
from fractions import Fraction

import pytest

from acceptance_log import RESULTS
from oracles import continued_fraction_value, count_lattice, triple_dim
from singclass import brieskorn, curves, hilbert, lnd, quotients
from singclass.cli import run
from singclass.exactmath import SeriesSpec, SparsePoly, series_coeffs


def record(key, ok, detail):
    RESULTS[key] = (bool(ok), detail)
    assert ok, detail


def sweep_triples(top=40):
    for p in range(2, top + 1):
        for q in range(p, top + 1):
            for r in range(q, top + 1):
                yield p, q, r


def test_1_schwartz_identities():
    start = time.perf_counter()
    res = run(["schwartz", "all", "--json"])
    elapsed = time.perf_counter() - start
    doc = json.loads(res.stdout)
    by_name = {i["name"]: i for i in doc["identities"]}
    dihedral_ok = all(by_name[f"dihedral:{d}"]["holds"] for d in range(2, 51))
    tetra = by_name["tetrahedral"]["holds"]
    icosa = by_name["icosahedral"]["holds"]
    literal, variant = by_name["octahedral"], by_name["octahedral-variant"]
    # both octahedral forms evaluated; statuses are whatever exact expansion gives
    octa_reported = literal["status"] == "as-printed" and variant["status"] == "documented-variant"
    direct = curves.verify_identity(curves.octahedral()).holds, curves.verify_identity(curves.octahedral_variant()).holds
    consistent = (literal["holds"], variant["holds"]) == direct
    ok = dihedral_ok and tetra and icosa and octa_reported and consistent and elapsed < 5.0
    record(
        "1 schwartz",
        ok,
        f"dihedral 2..50={dihedral_ok} tetrahedral={tetra} icosahedral={icosa} "
        f"octahedral literal={literal['holds']} variant={variant['holds']} ({elapsed:.2f}s < 5s)",
    )


def test_2_platonic_equivalence_sweep():
    start = time.perf_counter()
    disagreements = count = 0
    for p, q, r in sweep_triples():
        count += 1
        ci = brieskorn.triple_ci(p, q, r)
        recip = Fraction(1, p) + Fraction(1, q) + Fraction(1, r) > 1
        negative = hilbert.normal_degree(ci) < 0
        deltas_vanish = all(hilbert.delta_vanishing(ci, 20))
        disagreements += not (recip == negative == deltas_vanish)
    elapsed = time.perf_counter() - start
    record(
        "2 platonic-sweep",
        disagreements == 0 and elapsed < 10.0,
        f"{count} triples, {disagreements} disagreements ({elapsed:.2f}s < 10s)",
    )


def test_3_quasirationality_equivalence():
    disagreements = count = 0
    for p, q, r in sweep_triples():
        count += 1
        n = q * r * p - q * r - p * r - p * q
        oracle = True if n < 0 else triple_dim(p, q, r, n) == 0
        disagreements += brieskorn.quasirational_conditions(p, q, r) != oracle
    record("3 quasirational-sweep", disagreements == 0, f"{count} triples, {disagreements} disagreements")


def test_4_hilbert_vs_oracle():
    rng = random.Random(20241018)
    mismatches = 0
    for _ in range(100):
        k = rng.randint(2, 4)
        weights = tuple(rng.randint(1, 25) for _ in range(k))
        degree = rng.randint(1, 100)
        coeffs = series_coeffs(SeriesSpec((degree,), weights, 200))
        for nu in range(201):
            expected = count_lattice(weights, nu) - count_lattice(weights, nu - degree)
            mismatches += coeffs[nu] != expected
    record("4 hilbert-oracle", mismatches == 0, f"100 hypersurfaces x 201 coefficients, {mismatches} mismatches")


def test_5_profile_237():
    ci = brieskorn.triple_ci(2, 3, 7)
    report = hilbert.classify_ci(ci, 6)
    c = brieskorn.classify_triple(2, 3, 7)
    # frozen from the lattice oracle
    delta_1 = sum(triple_dim(2, 3, 7, mu) for mu in range(0, 2))
    pbar_6 = triple_dim(2, 3, 7, 6)
    assert (delta_1, pbar_6) == (1, 1)
    got = (
        report.normal_degree,
        report.delta_table[0],
        report.pbar_table[5],
        report.log_kodaira,
        c.quasirational,
        report.quasirational_form_test,
        report.is_rational,
    )
    record("5 profile-237", got == (1, 1, 1, 1, True, True, False), f"(N, delta_1, pbar_6, kbar, quasirational, form test, rational) = {got}")


def test_6_veronese_example():
    res = run(["veronese", "2", "3", "7", "--d", "2", "--json"])
    doc = json.loads(res.stdout)
    got = (doc["is_rational"], doc["is_quotient"], doc["log_kodaira"])
    text = run(["veronese", "2", "3", "7", "--d", "2"]).stdout
    ok = got == (True, False, "1") and "rational: yes" in text and "quotient: no" in text
    record("6 veronese-237", ok, f"rational={got[0]} quotient={got[1]} kbar={got[2]}")


def test_7_cyclic_quotients():
    chain_bad = recon_bad = dual_bad = 0
    for d in range(2, 201):
        chain_bad += quotients.hj_expansion(quotients.CyclicQuotientData(d, d - 1)) != [2] * (d - 1)
        for e in range(1, d):
            if Fraction(e, d).denominator != d:
                continue
            string = quotients.hj_expansion(quotients.CyclicQuotientData(d, e))
            recon_bad += continued_fraction_value(string) != Fraction(d, e)
            if d <= 60:
                gens = quotients.invariant_generators(quotients.CyclicQuotientData(d, e))
                dual = quotients.hj_expansion(quotients.CyclicQuotientData(d, d - e))
                dual_bad += len(gens) != len(dual) + 2
    record(
        "7 cyclic",
        chain_bad == recon_bad == dual_bad == 0,
        f"A_(d-1) chain mismatches={chain_bad}, reconstruction mismatches={recon_bad}, duality mismatches={dual_bad}",
    )


def test_8_cone_sweep():
    bad = 0
    for d in range(2, 31):
        for m in range(2, 31):
            n = hilbert.normal_degree(hilbert.WeightedCI((m, m, d), (m * d,)))
            decision = brieskorn.classify_cone_surface(d, m).solutions_exist
            bad += (n < 0) != (d <= 2 or (d, m) == (3, 2)) or decision != (n < 0)
    record("8 cone-sweep", bad == 0, f"841 pairs (d, m), {bad} disagreements")


def _random_p(rng):
    nvars = rng.randint(1, 4)
    names = tuple(f"x{i}" for i in range(1, nvars + 1))
    terms = {}
    while not terms or all(not any(e) for e in terms):
        for _ in range(rng.randint(1, 6)):
            exps = [0] * nvars
            for _ in range(rng.randint(1, 6)):
                exps[rng.randrange(nvars)] += 1
            terms[tuple(exps)] = rng.choice([c for c in range(-9, 10) if c])
    return SparsePoly(names, terms)


def test_9_lnd_suite():
    rng = random.Random(9)
    annihilated = 0
    for _ in range(50):
        der, rel = lnd.build_suspension(_random_p(rng))
        annihilated += lnd.apply(der, rel).is_zero

    group_ok = True
    for der in (
        lnd.build_suspension(SparsePoly.var("x1") ** 2)[0],
        quotients.descend_lnd(quotients.CyclicQuotientData(3, 2)).derivation,
    ):
        flow = lnd.exp_flow(der)
        ring = der.variables + ("t", "t2")
        t, t2 = SparsePoly.var("t", ring), SparsePoly.var("t2", ring)
        outer = {v: flow.images[v].in_ring(ring) for v in der.variables}
        for v in der.variables:
            composed = flow.images[v].compose({"t": t2}, ring).compose(outer, ring)
            summed = flow.images[v].in_ring(ring).compose({"t": t + t2}, ring)
            group_ok &= composed == summed

    der, rel = lnd.build_suspension(SparsePoly.var("x1") ** 2)
    orbit = lnd.orbit_avoids(lnd.exp_flow(der), [rel], {"u": 0, "v": 0, "x1": 0}, {"u": 1, "v": 1, "x1": 1})

    desc = quotients.descend_lnd(quotients.CyclicQuotientData(3, 2))
    imgs = {k: str(v) for k, v in desc.derivation.images.items()}
    (relation,) = desc.relations
    flow = lnd.exp_flow(desc.derivation)
    descended_ok = (
        imgs == {"u": "0", "w": "u", "v": "3*w^2"}
        and lnd.apply(desc.derivation, relation).is_zero
        and flow.pullback(relation) == relation.in_ring(flow.ring)
    )
    ok = annihilated == 50 and group_ok and orbit.on_variety and orbit.avoids and descended_ok
    record(
        "9 lnd",
        ok,
        f"suspensions annihilated {annihilated}/50, group law={group_ok}, "
        f"orbit on variety={orbit.on_variety} avoids origin={orbit.avoids}, descended (3,2)={descended_ok}",
    )
