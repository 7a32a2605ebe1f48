"""Slopes, semistability, and Harder-Narasimhan data for split bundles.

Slope means degree/rank as an exact Fraction.  Floats are banned from
this module: every verdict downstream rests on strict inequalities whose
margins shrink like 2/(g-4) - 4/(g-2).

Bundles come in two flavors.  ``BundleData`` is an abstract (rank, degree)
pair, which is all the inequality suite ever needs.  ``SplitBundle`` is a
direct sum of line bundles given by its multiset of degrees; for these
the HN filtration is computed exactly by grouping equal degrees in
descending order (the maximal destabilizing subbundle of a direct sum of
line bundles is the span of the maximal-degree summands).

``BoundCertificate`` packages a slope bound together with where it came
from.  Certificates are inert data: constructing one never proves the
hypothesis it records.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .rationals import format_rational

# Provenance labels carried by certificates.
SEMISTABLE_HYPOTHESIS = "semistable_hypothesis"
QUOTIENT_OF_SEMISTABLE = "quotient_of_semistable"
COMPONENT_SUM = "component_sum"
SPECIALIZATION_TRANSFER = "specialization_transfer"

PROVENANCES = (
    SEMISTABLE_HYPOTHESIS,
    QUOTIENT_OF_SEMISTABLE,
    COMPONENT_SUM,
    SPECIALIZATION_TRANSFER,
)


@dataclass(frozen=True)
class BundleData:
    """Abstract vector bundle on a curve: just rank and degree."""

    rank: int
    degree: int

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"bundle rank must be >= 1, got {self.rank}")

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    def to_dict(self) -> dict:
        return {"rank": self.rank, "degree": self.degree, "slope": format_rational(self.slope)}


@dataclass(frozen=True)
class SplitBundle:
    """Direct sum of line bundles, as the multiset of summand degrees."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        if not self.degrees:
            raise ValueError("a split bundle needs at least one summand")
        object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    @property
    def slope(self) -> Fraction:
        return Fraction(self.degree, self.rank)

    def as_bundle(self) -> BundleData:
        return BundleData(self.rank, self.degree)

    def shift(self, t: int) -> "SplitBundle":
        return SplitBundle(tuple(d + t for d in self.degrees))


@dataclass(frozen=True)
class HNFiltration:
    """Graded quotients of a Harder-Narasimhan filtration, top slope first."""

    pieces: tuple[BundleData, ...]

    def __post_init__(self):
        if not self.pieces:
            raise ValueError("a filtration needs at least one piece")
        slopes = [p.slope for p in self.pieces]
        if any(a <= b for a, b in zip(slopes, slopes[1:])):
            raise ValueError(f"piece slopes must strictly decrease, got {slopes}")

    @property
    def rank(self) -> int:
        return sum(p.rank for p in self.pieces)

    @property
    def degree(self) -> int:
        return sum(p.degree for p in self.pieces)

    def to_dict(self) -> dict:
        return {"pieces": [p.to_dict() for p in self.pieces]}


@dataclass(frozen=True)
class BoundCertificate:
    """An upper bound on slopes of some family of subbundles.

    ``chain`` lists the reasoning steps as {"step", "justification",
    "value"} records; ``warnings`` flags data that makes the recorded
    hypothesis untenable.
    """

    bound: Fraction
    applies_to: str
    provenance: str
    chain: tuple = ()
    warnings: tuple = ()

    def __post_init__(self):
        if self.provenance not in PROVENANCES:
            raise ValueError(f"unknown provenance {self.provenance!r}")

    def to_dict(self) -> dict:
        return {
            "bound": format_rational(self.bound),
            "applies_to": self.applies_to,
            "provenance": self.provenance,
            "chain": [dict(entry) for entry in self.chain],
            "warnings": list(self.warnings),
        }


def slope(b: BundleData) -> Fraction:
    return b.slope


def hn_split(s: SplitBundle) -> HNFiltration:
    """HN filtration of a direct sum of line bundles.

    Summands of equal degree are grouped; groups are ordered by strictly
    decreasing degree, so piece i is (count_i, count_i * degree_i).
    Matches the sub-multiset enumeration oracle on every input.
    """
    pieces = []
    for d in sorted(set(s.degrees), reverse=True):
        count = s.degrees.count(d)
        pieces.append(BundleData(count, count * d))
    return HNFiltration(tuple(pieces))


def is_semistable_split(s: SplitBundle) -> bool:
    return len(set(s.degrees)) == 1


def quotient_bound(E: BundleData, quotient: BundleData | int) -> BoundCertificate:
    """Slope bound for subbundles of a quotient of a semistable bundle.

    If E is semistable and E surjects onto Q, every subbundle of Q has
    slope at most slope(E).  E's semistability is the caller's hypothesis
    and is recorded as such, never proved here.  ``quotient`` may be a
    full (rank, degree) pair or just a rank when the quotient's degree is
    unknown; the bound depends only on E either way.
    """
    q_rank = quotient if isinstance(quotient, int) else quotient.rank
    if q_rank < 1:
        raise ValueError("quotient rank must be >= 1")
    if q_rank > E.rank:
        raise ValueError(f"quotient rank {q_rank} exceeds ambient rank {E.rank}")
    warnings = []
    if isinstance(quotient, BundleData) and quotient.slope > E.slope:
        warnings.append(
            "quotient slope exceeds ambient slope: the semistability "
            "hypothesis on the ambient bundle is untenable for a genuine quotient"
        )
    return BoundCertificate(
        bound=E.slope,
        applies_to=f"subbundles of a rank-{q_rank} quotient of a semistable ({E.rank}, {E.degree}) bundle",
        provenance=QUOTIENT_OF_SEMISTABLE,
        chain=(
            {
                "step": "ambient bundle assumed semistable",
                "justification": "caller-supplied hypothesis",
                "value": format_rational(E.slope),
            },
            {
                "step": "subbundles of any quotient are bounded by the ambient slope",
                "justification": "quotient-of-semistable slope bound",
                "value": format_rational(E.slope),
            },
        ),
        warnings=tuple(warnings),
    )


@dataclass(frozen=True)
class HNAxiomReport:
    """Outcome of checking filtration axioms; falsy when a check failed."""

    ok: bool
    reasons: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return self.ok


def check_hn_axioms(pieces, ambient: BundleData) -> HNAxiomReport:
    """Do the pieces have strictly decreasing slopes and the right totals?"""
    pieces = tuple(pieces)
    reasons = []
    if not pieces:
        reasons.append("no pieces")
        return HNAxiomReport(False, tuple(reasons))
    slopes = [p.slope for p in pieces]
    for k, (a, b) in enumerate(zip(slopes, slopes[1:])):
        if a <= b:
            reasons.append(
                f"slope of piece {k} ({format_rational(a)}) does not exceed "
                f"slope of piece {k + 1} ({format_rational(b)})"
            )
    total_rank = sum(p.rank for p in pieces)
    total_degree = sum(p.degree for p in pieces)
    if total_rank != ambient.rank:
        reasons.append(f"rank total {total_rank} != ambient rank {ambient.rank}")
    if total_degree != ambient.degree:
        reasons.append(f"degree total {total_degree} != ambient degree {ambient.degree}")
    return HNAxiomReport(not reasons, tuple(reasons))
