"""Exact slope and filtration arithmetic for curves on rational normal scrolls.

The package mechanizes, over exact rationals, the intersection theory and
slope inequalities that pin down the Harder-Narasimhan filtration of the
normal bundle of a general tetragonal canonical curve: Chow classes on
3-fold scrolls, split normal bundles and their filtrations, the nodal
degeneration that bounds subbundle slopes, and a CLI that re-derives and
checks everything for any genus range.
"""

from ._backend import backend_name, have_speedups
from .chow import (
    ChowClass,
    ScrollModel,
    degree,
    intersect_number,
    make_scroll,
    mul,
    retwist,
)
from .degeneration import (
    GluedBundleSketch,
    NodalDegeneration,
    adjusted_slope,
    build_degeneration,
    combined_bound,
    component_bounds,
    elliptic_normal_invariants,
    rational_normal_bundle,
    transfer_bound,
)
from .rationals import format_rational, parse_rational
from .slopes import (
    BoundCertificate,
    BundleData,
    HNFiltration,
    SplitBundle,
    check_hn_axioms,
    hn_split,
    is_semistable_split,
    quotient_bound,
    slope,
)
from .tetragonal import (
    FiltrationVerdict,
    NormalBundleTower,
    TetragonalCurve,
    balanced_split,
    curve_class,
    custom_curve,
    general_curve,
    normal_tower,
    picard_transform,
    scroll_reembedding,
    secant_span,
    syzygy_rank,
    verify_curve,
    verify_filtration,
)

__version__ = "0.1.0"

__all__ = [
    "BoundCertificate",
    "BundleData",
    "ChowClass",
    "FiltrationVerdict",
    "GluedBundleSketch",
    "HNFiltration",
    "NodalDegeneration",
    "NormalBundleTower",
    "ScrollModel",
    "SplitBundle",
    "TetragonalCurve",
    "adjusted_slope",
    "backend_name",
    "balanced_split",
    "build_degeneration",
    "check_hn_axioms",
    "combined_bound",
    "component_bounds",
    "curve_class",
    "custom_curve",
    "degree",
    "elliptic_normal_invariants",
    "format_rational",
    "general_curve",
    "have_speedups",
    "hn_split",
    "intersect_number",
    "is_semistable_split",
    "make_scroll",
    "mul",
    "normal_tower",
    "parse_rational",
    "picard_transform",
    "quotient_bound",
    "rational_normal_bundle",
    "retwist",
    "scroll_reembedding",
    "secant_span",
    "slope",
    "syzygy_rank",
    "transfer_bound",
    "verify_curve",
    "verify_filtration",
]
