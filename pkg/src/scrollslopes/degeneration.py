"""Nodal degeneration and the slope bound it buys.

To bound subbundle slopes of the restricted scroll normal bundle, the
canonical curve degenerates inside the scroll to a g-secant union of a
rational normal curve of degree g-2 (a hyperplane section of a divisor
of class H + R) and an elliptic normal curve of degree g.  Each
component's normal bundle surjects onto the restriction of the bundle
under study, so the classical stability of the rational normal curve
bundle and the semistability of the elliptic one bound the component
slopes by g and g+2+4/(g-2).  Slopes on the nodal curve add over
components and dominate the node-penalized adjusted slope, giving the
combined bound 2g+2+4/(g-2), which transfers from the special fiber to
the general curve.

Everything here is bookkeeping on exact numbers: component classes and
degrees are recomputed through the Chow module on every call, and the
transfer steps are recorded as certificate provenance, never re-proved.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import chow
from .chow import ChowClass, ScrollModel
from .rationals import format_rational
from .slopes import (
    COMPONENT_SUM,
    SPECIALIZATION_TRANSFER,
    BoundCertificate,
    BundleData,
    SplitBundle,
    quotient_bound,
)


@dataclass(frozen=True)
class CurveComponent:
    name: str
    genus: int
    chow_class: ChowClass
    h_degree: int
    r_degree: int
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "genus": self.genus,
            "class": self.chow_class.to_dict(),
            "h_degree": self.h_degree,
            "r_degree": self.r_degree,
            "note": self.note,
        }


@dataclass(frozen=True)
class NodalDegeneration:
    """The two-component nodal model of a genus-g tetragonal curve."""

    g: int
    scroll: ScrollModel
    components: tuple[CurveComponent, CurveComponent]
    node_count: int
    ambient_dim: int

    @property
    def arithmetic_genus(self) -> int:
        return sum(c.genus for c in self.components) + self.node_count - 1

    def total_class(self) -> ChowClass:
        first, second = self.components
        return first.chow_class + second.chow_class

    def to_dict(self) -> dict:
        return {
            "genus": self.g,
            "scroll": {"twists": list(self.scroll.twists)},
            "components": [c.to_dict() for c in self.components],
            "node_count": self.node_count,
            "ambient_dim": self.ambient_dim,
            "arithmetic_genus": self.arithmetic_genus,
        }


def build_degeneration(g: int) -> NodalDegeneration:
    """The g-secant rational-plus-elliptic union on the balanced scroll.

    All component degrees are recomputed via intersection numbers; the
    node count g is cross-validated against the arithmetic genus.
    """
    if g < 6:
        raise ValueError(f"degeneration model needs g >= 6, got {g}")
    from .tetragonal import balanced_split  # local import to avoid a cycle

    twists = balanced_split(g - 3, 3)
    if max(twists) - min(twists) > 1:
        raise ValueError("degeneration model is only built on balanced scrolls")
    scroll = chow.make_scroll(twists)

    h = chow.hyperplane(scroll)
    r = chow.fiber(scroll)
    rational_class = chow.chow_class(scroll, {(2, 0): 1, (1, 1): 1})
    elliptic_class = chow.chow_class(scroll, {(2, 0): 3, (1, 1): -(2 * g - 9)})

    rational = CurveComponent(
        name="rational",
        genus=0,
        chow_class=rational_class,
        h_degree=chow.intersect_number(rational_class, h),
        r_degree=chow.intersect_number(rational_class, r),
        note="hyperplane section of a divisor of class H+R (metadata only)",
    )
    elliptic = CurveComponent(
        name="elliptic",
        genus=1,
        chow_class=elliptic_class,
        h_degree=chow.intersect_number(elliptic_class, h),
        r_degree=chow.intersect_number(elliptic_class, r),
    )

    model = NodalDegeneration(
        g=g,
        scroll=scroll,
        components=(rational, elliptic),
        node_count=g,
        ambient_dim=g - 1,
    )
    if model.arithmetic_genus != g:
        raise ValueError(
            f"node count {model.node_count} gives arithmetic genus "
            f"{model.arithmetic_genus}, expected {g}"
        )
    expected_total = chow.chow_class(scroll, {(2, 0): 4, (1, 1): -2 * (g - 5)})
    if model.total_class() != expected_total:
        raise ValueError("component classes do not add up to the tetragonal curve class")
    return model


@dataclass(frozen=True)
class GluedBundleSketch:
    """Combinatorial shadow of a subbundle on the normalized nodal curve.

    Holds the rank, the degrees on the two components, and for each node
    the codimension (in a fiber) of the intersection of the two glued
    fibers.  The codimensions come from geometry the caller supplies;
    the adjusted slope is exact once they are given.
    """

    rank: int
    component_degrees: tuple[int, int]
    node_codims: tuple[int, ...]

    def __post_init__(self):
        if self.rank < 1:
            raise ValueError(f"rank must be >= 1, got {self.rank}")
        for c in self.node_codims:
            if not 0 <= c <= self.rank:
                raise ValueError(f"node codimension {c} outside 0..{self.rank}")

    @property
    def slope(self) -> Fraction:
        return Fraction(sum(self.component_degrees), self.rank)


def adjusted_slope(s: GluedBundleSketch) -> Fraction:
    """Slope penalized by one fiber-intersection codimension per node."""
    return Fraction(sum(s.component_degrees) - sum(s.node_codims), s.rank)


def rational_normal_bundle(n: int) -> SplitBundle:
    """Normal bundle of the degree-n rational normal curve in its span.

    Splits as n-1 line bundles of degree n+2: the restricted ambient
    tangent degree (n+1)n minus the tangent degree 2, spread over rank
    n-1 equal summands.
    """
    if n < 2:
        raise ValueError(f"rational normal curve needs degree >= 2, got {n}")
    total = (n + 1) * n - 2
    count = n - 1
    assert total == count * (n + 2)
    return SplitBundle((n + 2,) * count)


def elliptic_normal_invariants(g: int) -> BundleData:
    """(rank, degree) = (g-2, g^2) for the degree-g elliptic normal curve.

    Semistability of this bundle is an input hypothesis recorded on every
    certificate that uses it.
    """
    if g < 5:
        raise ValueError(f"elliptic normal model needs g >= 5, got {g}")
    return BundleData(g - 2, g * g)


def component_bounds(g: int) -> tuple[Fraction, Fraction]:
    """Per-component slope bounds (g, g+2+4/(g-2)) for subbundle restrictions."""
    if g < 6:
        raise ValueError(f"component bounds need g >= 6, got {g}")
    rational_cert, elliptic_cert = _component_certificates(g)
    return rational_cert.bound, elliptic_cert.bound


def _component_certificates(g: int) -> tuple[BoundCertificate, BoundCertificate]:
    quotient_rank = g - 4  # rank of the restricted scroll normal bundle
    rational = rational_normal_bundle(g - 2)
    rational_cert = quotient_bound(rational.as_bundle(), quotient_rank)
    elliptic_cert = quotient_bound(elliptic_normal_invariants(g), quotient_rank)
    return rational_cert, elliptic_cert


def combined_bound(g: int) -> BoundCertificate:
    """Bound 2g+2+4/(g-2) on adjusted slopes over the nodal special fiber."""
    rational_cert, elliptic_cert = _component_certificates(g)
    bound = rational_cert.bound + elliptic_cert.bound
    chain = (
        {
            "step": "rational component bound",
            "justification": "stable rational normal curve bundle surjects onto the restriction",
            "value": format_rational(rational_cert.bound),
        },
        {
            "step": "elliptic component bound",
            "justification": "semistable elliptic normal curve bundle surjects onto the restriction",
            "value": format_rational(elliptic_cert.bound),
        },
        {
            "step": "adjusted slope is at most the plain slope",
            "justification": "node codimension penalties are non-negative",
            "value": "mu_adj <= mu",
        },
        {
            "step": "slope on the nodal curve adds over components",
            "justification": "degree and rank add on the normalization",
            "value": format_rational(bound),
        },
    )
    return BoundCertificate(
        bound=bound,
        applies_to="subbundles of the scroll normal bundle restricted to the nodal special fiber",
        provenance=COMPONENT_SUM,
        chain=chain,
    )


def transfer_bound(c: BoundCertificate) -> BoundCertificate:
    """Relabel a special-fiber bound as a general-fiber bound.

    The move from the special to the general fiber is an input
    proposition of the whole system; this records it in the provenance
    without changing the value.
    """
    if c.provenance != COMPONENT_SUM:
        raise ValueError(
            f"only component-sum certificates transfer, got provenance {c.provenance!r}"
        )
    chain = c.chain + (
        {
            "step": "transfer to the general fiber",
            "justification": "adjusted-slope bounds persist from special to general fiber (input)",
            "value": format_rational(c.bound),
        },
    )
    return BoundCertificate(
        bound=c.bound,
        applies_to="subbundles of the scroll normal bundle restricted to the general tetragonal curve",
        provenance=SPECIALIZATION_TRANSFER,
        chain=chain,
    )
