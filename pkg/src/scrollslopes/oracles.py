"""Independent cross-check routes for the two core algorithms.

These deliberately avoid the closed-form reduction used by the kernels:

* Chow products are expanded in the free commutative ring Z[H, R] as
  words of letters ("HHR" for H^2 R) and then reduced by applying the
  two rewrite rules one step at a time until nothing fires.
* Harder-Narasimhan filtrations of split bundles are found by brute
  enumeration: among all sub-multisets of summands take the one of
  maximal slope, breaking ties by maximal rank, and recurse on the
  complement.

The CLI's oracle mode and the property-test suite both run these against
the production implementations; any disagreement is a bug in one of the
two routes.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .chow import ChowClass, ScrollModel


def _word(i: int, j: int) -> str:
    return "H" * i + "R" * j


def expand_free(x: ChowClass, y: ChowClass) -> dict[str, int]:
    """Distributive expansion in Z[H, R]: no relations applied."""
    terms: dict[str, int] = {}
    for (i1, j1), a in x.items():
        for (i2, j2), b in y.items():
            w = _word(i1 + i2, j1 + j2)
            terms[w] = terms.get(w, 0) + a * b
    return {w: c for w, c in terms.items() if c}


def rewrite_step(terms: dict[str, int], rank: int, c1: int, rule_order: str) -> dict[str, int] | None:
    """Apply one rewrite to one term, or return None at normal form.

    rule_order "h_first" prefers collapsing an H-power, "r_first" prefers
    killing an R^2; confluence of the two orders is a tested property.
    """
    rules = ("h", "r") if rule_order == "h_first" else ("r", "h")
    for rule in rules:
        for w, c in sorted(terms.items()):
            h, r = w.count("H"), w.count("R")
            if rule == "r" and r >= 2:
                out = dict(terms)
                del out[w]
                return out
            if rule == "h" and h >= rank:
                out = dict(terms)
                del out[w]
                target = _word(h - 1, r + 1)
                out[target] = out.get(target, 0) + c * c1
                if not out[target]:
                    del out[target]
                return out
    return None


def reduce_words(terms: dict[str, int], rank: int, c1: int, rule_order: str = "h_first") -> dict[str, int]:
    current = dict(terms)
    while True:
        step = rewrite_step(current, rank, c1, rule_order)
        if step is None:
            return current
        current = step


def free_ring_mul(x: ChowClass, y: ChowClass, rule_order: str = "h_first") -> ChowClass:
    """Oracle product: free expansion followed by stepwise rewriting."""
    scroll: ScrollModel = x.scroll
    reduced = reduce_words(expand_free(x, y), scroll.rank, scroll.c1, rule_order)
    coeffs = {(w.count("H"), w.count("R")): c for w, c in reduced.items()}
    return ChowClass(scroll, coeffs)


def _best_submultiset(degrees: tuple[int, ...]) -> tuple[int, ...]:
    """Sub-multiset of maximal slope, ties broken by maximal rank."""
    best: tuple[int, ...] | None = None
    best_key: tuple[Fraction, int] | None = None
    seen = set()
    for size in range(1, len(degrees) + 1):
        for combo in combinations(degrees, size):
            key_id = tuple(sorted(combo))
            if key_id in seen:
                continue
            seen.add(key_id)
            key = (Fraction(sum(combo), size), size)
            if best_key is None or key > best_key:
                best_key = key
                best = key_id
    assert best is not None
    return best


def hn_enumerate(degrees) -> list[tuple[int, int]]:
    """Graded pieces (rank, degree) of the HN filtration, by brute force."""
    remaining = sorted(degrees)
    pieces: list[tuple[int, int]] = []
    while remaining:
        top = _best_submultiset(tuple(remaining))
        pieces.append((len(top), sum(top)))
        for d in top:
            remaining.remove(d)
    return pieces
