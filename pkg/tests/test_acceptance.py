"""Acceptance gate: one test per criterion, each with its runtime budget."""

import time
from contextlib import contextmanager
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from syzfermat.commands import cmd_check, cmd_delta, cmd_density
from syzfermat.density import (
    covered_count_via_subgroups,
    covered_remainders,
    exceptional_degrees,
    germainfact_check,
    prime_class_report,
    sophie_germain_primes,
    subgroup_tallies,
    window_M,
)
from syzfermat.fermat import (
    CurveElem,
    SyzygyWitness,
    delta_fermat,
    delta_fermat_oracle,
    numcrit_predicate,
    remainder_one_matrix,
    strong_semistability_scan,
    twist_degree,
    verify_witness,
)
from syzfermat.ffield import FieldCtx, element_order, is_quadratic_residue, primes_up_to
from syzfermat.fixtures import same_up_to_scalar
from syzfermat.report import PAPER_DISCREPANCY, witness_from_json

GRID_PRIMES = (2, 3, 5, 7, 11, 13)


@contextmanager
def budget(seconds):
    start = time.perf_counter()
    yield
    elapsed = time.perf_counter() - start
    assert elapsed < seconds, f"took {elapsed:.2f} s, budget {seconds} s"


def curve(d, p, *terms):
    u = None
    for x, y, z, c in terms:
        m = CurveElem.monomial(x, y, z, d, p, c)
        u = m if u is None else u + m
    return u


@pytest.mark.criterion(1, "p=7 quintic: delta 20, witness, twist -10")
def test_p7_quintic():
    with budget(1):
        rep = cmd_delta(5, 7, (14, 14, 14)).to_dict()
        res = rep["results"]
        assert res["degree"] == 20 and res["twist_degree"] == -10
        w, d, p = witness_from_json(res["witness"])
        assert verify_witness(w, d, FieldCtx(p))
        expected = SyzygyWitness(
            20,
            -curve(5, 7, (6, 0, 0, 1), (1, 5, 0, 2)),
            curve(5, 7, (5, 1, 0, 2), (0, 6, 0, 1)),
            curve(5, 7, (5, 0, 1, 1), (0, 5, 1, -1)),
            14, 14, 14,
        )
        assert verify_witness(expected, 5, FieldCtx(7))
        assert same_up_to_scalar(w, expected.components())


@pytest.mark.criterion(2, "p=3 quintic: delta 8, witness (-YZ,-XZ,XY), scan e=1 vs criterion e=3")
def test_p3_quintic():
    with budget(1):
        ctx = FieldCtx(3)
        res = delta_fermat(6, 6, 6, 5, ctx)
        assert res.degree == 8 and twist_degree(8, 6, 6, 6, 5) == -10
        expected = SyzygyWitness(
            8, curve(5, 3, (0, 1, 1, -1)), curve(5, 3, (1, 0, 1, -1)), curve(5, 3, (1, 1, 0, 1)), 6, 6, 6
        )
        assert verify_witness(expected, 5, ctx)
        assert same_up_to_scalar(res.witness, expected.components())
        v = strong_semistability_scan(5, ctx, 3)
        assert v.first_e == 1 and v.direct_e == 1 and v.criterion_e == 3
        assert [lv.criterion for lv in v.levels] == [False, False, False, True]
        assert 27 % 5 == 2


@pytest.mark.criterion(3, "p=11 quintic: remainder-one determinant 6 and rows (6,4,1)/(4,6,4)/(1,4,6)")
def test_p11_remainder_one():
    with budget(1):
        m = remainder_one_matrix(5, 2, FieldCtx(11))
        assert m.det == 6
        assert [list(map(int, row)) for row in m.matrix] == [[6, 4, 1], [4, 6, 4], [1, 4, 6]]
        assert cmd_check(5, 11, 1).to_dict()["results"]["remainder_one"][0]["det"] == 6


@pytest.mark.criterion(4, "oracle equivalence on d in {3,5,7}, 2q <= 28, p <= 13")
def test_oracle_grid():
    cells = 0
    with budget(120):
        for d in (3, 5, 7):
            for p in GRID_PRIMES:
                if d % p == 0:
                    continue
                ctx = FieldCtx(p)
                for q in range(1, 15):
                    a = 2 * q
                    fast = delta_fermat(a, a, a, d, ctx)
                    oracle = delta_fermat_oracle(a, a, a, d, ctx, fast.degree)
                    assert oracle.degree == fast.degree, (d, p, a)
                    assert verify_witness(oracle.witness, d, ctx)
                    cells += 1
    assert cells == 14 * 15


def _sweep_cases():
    return [(d, b) for d in range(1, 10) for b in range(1, 61) if numcrit_predicate(d, b) is not None]


@pytest.mark.criterion(5, "numcrit soundness sweep d <= 9, b <= 60, two or more primes per case")
def test_numcrit_sweep():
    cases = _sweep_cases()
    assert cases
    with budget(300):
        for d, b in cases:
            bound = numcrit_predicate(d, b)
            assert twist_degree(bound, b, b, b, d) < 0
            primes = [p for p in GRID_PRIMES if d % p]
            assert len(primes) >= 2
            for p in primes:
                ctx = FieldCtx(p)
                res = delta_fermat(b, b, b, d, ctx)
                assert res.degree <= bound, (d, b, p)
                assert twist_degree(res.degree, b, b, b, d) < 0
                assert verify_witness(res.witness, d, ctx)


@pytest.mark.criterion(5, "numcrit soundness sweep d <= 9, b <= 60, two or more primes per case")
@settings(max_examples=150, deadline=None)
@given(case=st.sampled_from(_sweep_cases()), p=st.sampled_from([int(x) for x in primes_up_to(400)]))
def test_numcrit_random_primes(case, p):
    d, b = case
    if d % p == 0:
        return
    ctx = FieldCtx(p)
    res = delta_fermat(b, b, b, d, ctx)
    assert res.degree <= numcrit_predicate(d, b)
    assert twist_degree(res.degree, b, b, b, d) < 0
    assert verify_witness(res.witness, d, ctx)


@pytest.mark.criterion(6, "d=31 density: 20 covered, bound 2/3 by both methods, tallies 8+8+4, discrepancy flagged")
def test_d31_density():
    with budget(1):
        rep = covered_remainders(31)
        assert rep.covered_count == 20 == covered_count_via_subgroups(31)
        assert rep.density_lower_bound == Fraction(2, 3)
        tallies = sorted(((t.order, t.generators) for t in subgroup_tallies(31)), reverse=True)
        assert tallies == [(30, 8), (15, 8), (10, 4)]
        doc = cmd_density(31).to_dict()
        assert doc["results"]["uncovered"] == rep.uncovered
        assert any(f["marker"] == PAPER_DISCREPANCY and "27" in f["detail"] for f in doc["flags"])


@pytest.mark.criterion(7, "Sophie Germain suite 5 < h <= 200, h=29 primitive set, h=83 squares")
def test_sophie_germain():
    with budget(10):
        hs = [pair.h for pair in sophie_germain_primes(200) if pair.h > 5]
        assert hs[:4] == [11, 23, 29, 41]
        for h in hs:
            g = germainfact_check(h)
            assert g.covered_count == 2 * h - 2 and g.density == 1 - Fraction(1, h), h
        assert window_M(59) == list(range(20, 30))
        assert germainfact_check(29).primitive_in_M == [23, 24]
        assert [s for s in window_M(59) if element_order(s, 59) == 58] == [23, 24]
        M = window_M(167)
        assert 64 in M and 81 in M and 83 in M
        assert is_quadratic_residue(64, 167) and is_quadratic_residue(81, 167)
        assert not is_quadratic_residue(83, 167)


@pytest.mark.criterion(8, "exceptional-degree scan to 10000 (report)")
def test_exceptional_scan():
    with budget(30):
        found = exceptional_degrees(10_000)
    assert 6 in found and 10 in found
    print(f"exceptional degrees <= 10000: {found}")


@pytest.mark.criterion(9, "prime fractions in covered classes at 10^6 (d=5: 0.50, d=31: 0.667, +-0.01)")
def test_dirichlet():
    with budget(30):
        r5 = prime_class_report(5, 10**6)
        assert r5.covered == [2, 3]
        assert abs(r5.empirical_fraction - 0.50) <= 0.01
        r31 = prime_class_report(31, 10**6)
        assert abs(r31.empirical_fraction - 0.667) <= 0.01


@pytest.mark.criterion(10, "small degrees: d=2 negative twist, d=3 minimal degree 3 with twist 0")
def test_small_degrees():
    with budget(5):
        for p in (5, 7, 11, 13):
            ctx = FieldCtx(p)
            for q in (p, p * p):
                a = 2 * q
                r2 = delta_fermat(a, a, a, 2, ctx)
                assert twist_degree(r2.degree, a, a, a, 2) < 0
                assert verify_witness(r2.witness, 2, ctx)
            r2 = delta_fermat(2, 2, 2, 2, ctx)
            assert r2.degree == 2 and twist_degree(2, 2, 2, 2, 2) < 0
            r3 = delta_fermat(2, 2, 2, 3, ctx)
            assert r3.degree == 3 and twist_degree(3, 2, 2, 2, 3) == 0
            assert delta_fermat_oracle(2, 2, 2, 3, ctx, 3).degree == 3
            for q in (p, p * p):
                a = 2 * q
                assert delta_fermat(a, a, a, 3, ctx).degree == 3 * q
