"""Acceptance suite: every criterion at full stated range, zero tolerance.

Each test prints one PASS/FAIL line (visible with ``pytest -s`` or on
failure).  All comparisons are exact rational or integer identities; no
tolerances appear anywhere.
"""

import functools
import random
from fractions import Fraction

from scrollslopes import chow
from scrollslopes.degeneration import (
    GluedBundleSketch,
    adjusted_slope,
    build_degeneration,
    combined_bound,
    component_bounds,
)
from scrollslopes.report import document_for_oracle
from scrollslopes.slopes import BundleData, slope
from scrollslopes.tetragonal import (
    curve_class,
    general_curve,
    normal_tower,
    scroll_reembedding,
    verify_filtration,
)
from scrollslopes import cli


def _criterion(n, label):
    def deco(fn):
        @functools.wraps(fn)
        def wrapper(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                print(f"ACCEPTANCE {n:02d} {label}: FAIL")
                raise
            print(f"ACCEPTANCE {n:02d} {label}: PASS")

        return wrapper

    return deco


@_criterion(1, "canonical normal bundle slope 2g+4+6/(g-2)")
def test_criterion_01_canonical_slope():
    for g in (7, 8, 20, 101):
        assert slope(BundleData(g - 2, 2 * g * g - 2)) == 2 * g + 4 + Fraction(6, g - 2)


@_criterion(2, "deg N_{C/Q} = 4g+12 via Chow product, g in 6..500")
def test_criterion_02_scroll_normal_degree():
    for g in range(6, 501):
        c = general_curve(g)
        got = chow.intersect_number(curve_class(c), chow.divisor(c.scroll, 4, -(g - 5)))
        assert got == 4 * g + 12


@_criterion(3, "quotient slope closed forms for both parities")
def test_criterion_03_quotient_slopes():
    for g in range(7, 501):
        assert Fraction(2 * g * g - 4 * g - 14, g - 4) == 2 * g + 4 + Fraction(2, g - 4)
        t = normal_tower(general_curve(g))
        assert t.quotient_q.slope == 2 * g + 4 + Fraction(2, g - 4)
    for g in range(6, 501, 2):
        assert Fraction(2 * g * g - 2 * g - 10, g - 3) == 2 * g + 4 + Fraction(2, g - 3)
        t = normal_tower(general_curve(g))
        assert t.quotient_y.slope == 2 * g + 4 + Fraction(2, g - 3)


@_criterion(4, "odd-genus filtration suite, g in 7..499")
def test_criterion_04_odd_suite():
    for g in range(7, 500, 2):
        v = verify_filtration(g)
        assert v.passed, f"g={g}: {[c.name for c in v.failed_checks()]}"
        assert v.top.slope == 2 * g + 6
        assert v.top.slope > 2 * g + 4 + Fraction(2, g - 4)
        t = normal_tower(general_curve(g))
        assert len(set(t.n_cq.degrees)) == 1  # top piece semistable
        assert v.bound == 2 * g + 2 + Fraction(4, g - 2)
        # strictness by integer cross-multiplication
        b, q = v.bound, v.quotient.slope
        assert b.numerator * q.denominator < q.numerator * b.denominator


@_criterion(5, "even-genus filtration suite, g in 6..500")
def test_criterion_05_even_suite():
    for g in range(6, 501, 2):
        v = verify_filtration(g)
        assert v.passed, f"g={g}: {[c.name for c in v.failed_checks()]}"
        assert v.top.slope == 2 * g + 8
        assert v.top.slope > 2 * g + 4 + Fraction(2, g - 3)
        b, q = v.bound, v.quotient.slope
        assert q == 2 * g + 4 + Fraction(2, g - 3)
        assert b.numerator * q.denominator < q.numerator * b.denominator


@_criterion(6, "degeneration bookkeeping and combined bound, g in 6..500")
def test_criterion_06_degeneration():
    for g in range(6, 501):
        m = build_degeneration(g)
        rational, elliptic = m.components
        assert m.total_class() == curve_class(general_curve(g))
        assert (rational.h_degree, elliptic.h_degree) == (g - 2, g)
        assert (rational.r_degree, elliptic.r_degree) == (1, 3)
        assert m.arithmetic_genus == g
        r_bound, e_bound = component_bounds(g)
        assert (r_bound, e_bound) == (g, g + 2 + Fraction(4, g - 2))
        assert combined_bound(g).bound == r_bound + e_bound == 2 * g + 2 + Fraction(4, g - 2)


@_criterion(7, "re-embedding coefficient 8c-2g+10 for all (a,b,c)")
def test_criterion_07_reembedding():
    for a in (0, 1):
        for b in (0, 1):
            for c in range(1, 101):
                rec = scroll_reembedding(a, b, c)
                g = 3 * c + a + b + 3
                assert rec.g == g
                assert rec.base_class.coefficient(2, 0) == 4
                assert rec.base_class.coefficient(1, 1) == 8 * c - 2 * g + 10


@_criterion(8, "oracle equivalence: 10^4 Chow products and 10^4 HN filtrations")
def test_criterion_08_oracles():
    doc = document_for_oracle(10_000, 42)
    for family in doc.payload["families"]:
        assert family["samples"] == 10_000
        assert family["disagreements"] == 0, family["counterexample"]


@_criterion(9, "adjusted slope: bounded, tight iff zero codims, monotone")
def test_criterion_09_adjusted_slope():
    rng = random.Random(20260810)
    for _ in range(1_000):
        rank = rng.randint(1, 8)
        degrees = (rng.randint(-40, 40), rng.randint(-40, 40))
        codims = tuple(rng.randint(0, rank) for _ in range(rng.randint(1, 12)))
        s = GluedBundleSketch(rank, degrees, codims)
        adj = adjusted_slope(s)
        assert adj <= s.slope
        assert (adj == s.slope) == all(c == 0 for c in codims)
        k = rng.randrange(len(codims))
        if codims[k] < rank:
            bumped = list(codims)
            bumped[k] += 1
            assert adjusted_slope(GluedBundleSketch(rank, degrees, tuple(bumped))) < adj


@_criterion(10, "CLI sweep contract and fault injection")
def test_criterion_10_cli(capsys):
    code = cli.main(["--verify", "--sweep", "6..100"])
    out = capsys.readouterr().out
    rows = [line for line in out.splitlines() if line.startswith("g=")]
    assert code == 0
    assert len(rows) == 95
    assert all(row.endswith(" PASS") for row in rows)

    code = cli.main(["--verify", "--sweep", "6..100", "--corrupt-degree"])
    captured = capsys.readouterr()
    assert code == 1
    assert "split_degrees_match_intersection" in captured.err
    assert "FAILED" in captured.err
