"""Exact Chow-ring arithmetic on 3-fold (and general rank) scrolls.

A scroll here is the projective bundle P(O(a_1) + ... + O(a_r)) over the
line, polarized by the tautological class H, with R the class of a fiber
of the projection to the line.  Its Chow ring is generated by H and R
subject to two rewrite rules:

    R^2 = 0            (two distinct fibers are disjoint)
    H^r = c1 H^(r-1) R (c1 = a_1 + ... + a_r)

Every class is kept in reduced normal form: an integer combination of the
2r monomials H^i R^j with 0 <= i <= r-1 and j in {0, 1}.  Coefficients
are plain integers and everything is exact; the degree map reads off the
coefficient of H^(r-1) R, normalized so a fiber's linear span meets a
general complementary linear space once.

Mixed-codimension sums are allowed (handy when composing products); the
degree map simply projects onto the top-codimension part.  Values are
immutable after construction and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _backend

Monomial = tuple[int, int]


@dataclass(frozen=True)
class ScrollModel:
    """Projective bundle over the line, described by its twist integers.

    ``twists`` is stored non-increasing.  ``ambient_dim`` is the dimension
    of the target of the minimal-degree embedding |H|; it is meaningful
    only when every twist is positive (zero and negative twists are
    accepted for change-of-basis work, where no embedding is claimed).
    """

    rank: int
    twists: tuple[int, ...]
    c1: int
    ambient_dim: int

    def __repr__(self) -> str:
        return f"ScrollModel(twists={list(self.twists)})"


def make_scroll(twists) -> ScrollModel:
    """Build a scroll from its list of twists (any order, length >= 2)."""
    ts = tuple(sorted(_check_ints(twists, "twist"), reverse=True))
    if len(ts) < 2:
        raise ValueError("scroll rank must be >= 2")
    c1 = sum(ts)
    return ScrollModel(rank=len(ts), twists=ts, c1=c1, ambient_dim=c1 + len(ts) - 1)


def _check_ints(values, what: str) -> list[int]:
    out = []
    for v in values:
        if isinstance(v, bool) or not isinstance(v, int):
            raise TypeError(f"{what} must be an integer, got {v!r}")
        out.append(v)
    return out


class ChowClass:
    """Integer combination of the scroll monomials H^i R^j in normal form."""

    __slots__ = ("scroll", "_coeffs")

    def __init__(self, scroll: ScrollModel, coeffs: dict[Monomial, int]):
        r = scroll.rank
        clean: dict[Monomial, int] = {}
        for (i, j), c in coeffs.items():
            if isinstance(c, bool) or not isinstance(c, int):
                raise TypeError(f"coefficients must be integers, got {c!r}")
            if not (0 <= i < r and 0 <= j <= 1):
                raise ValueError(f"monomial H^{i} R^{j} is not reduced on rank {r}")
            if c:
                clean[(i, j)] = c
        object.__setattr__(self, "scroll", scroll)
        object.__setattr__(self, "_coeffs", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ChowClass is immutable")

    def coefficient(self, i: int, j: int) -> int:
        return self._coeffs.get((i, j), 0)

    def items(self) -> tuple[tuple[Monomial, int], ...]:
        return tuple(sorted(self._coeffs.items()))

    def is_zero(self) -> bool:
        return not self._coeffs

    def codimensions(self) -> set[int]:
        return {i + j for (i, j) in self._coeffs}

    def is_pure_codim(self, k: int) -> bool:
        return all(i + j == k for (i, j) in self._coeffs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChowClass):
            return NotImplemented
        return self.scroll == other.scroll and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.scroll, self.items()))

    def __add__(self, other: "ChowClass") -> "ChowClass":
        _require_same_scroll(self, other, "add")
        merged = dict(self._coeffs)
        for m, c in other._coeffs.items():
            merged[m] = merged.get(m, 0) + c
        return ChowClass(self.scroll, merged)

    def __neg__(self) -> "ChowClass":
        return ChowClass(self.scroll, {m: -c for m, c in self._coeffs.items()})

    def __sub__(self, other: "ChowClass") -> "ChowClass":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, ChowClass):
            return mul(self, other)
        if isinstance(other, int) and not isinstance(other, bool):
            return ChowClass(self.scroll, {m: c * other for m, c in self._coeffs.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"ChowClass({pretty(self)!r} on {self.scroll!r})"

    def to_dense(self) -> list[int]:
        r = self.scroll.rank
        dense = [0] * (2 * r)
        for (i, j), c in self._coeffs.items():
            dense[j * r + i] = c
        return dense

    @classmethod
    def from_dense(cls, scroll: ScrollModel, dense: list[int]) -> "ChowClass":
        r = scroll.rank
        return cls(scroll, {(k % r, k // r): c for k, c in enumerate(dense) if c})

    def to_dict(self) -> dict:
        """JSON form: {"scroll": {"twists": [...]}, "coeffs": {"H^i R": n, ...}}."""
        return {
            "scroll": {"twists": list(self.scroll.twists)},
            "coeffs": {monomial_key(i, j): c for (i, j), c in self.items()},
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ChowClass":
        scroll = make_scroll(data["scroll"]["twists"])
        coeffs = {parse_monomial_key(k): v for k, v in data["coeffs"].items()}
        return cls(scroll, coeffs)


def monomial_key(i: int, j: int) -> str:
    """Wire name of H^i R^j: one of "1", "H^i", "R", "H^i R"."""
    if i == 0:
        return "R" if j else "1"
    return f"H^{i} R" if j else f"H^{i}"


def parse_monomial_key(key: str) -> Monomial:
    if key == "1":
        return (0, 0)
    if key == "R":
        return (0, 1)
    body, _, tail = key.partition(" ")
    if not body.startswith("H^") or tail not in ("", "R"):
        raise ValueError(f"bad monomial key: {key!r}")
    return (int(body[2:]), 1 if tail else 0)


def pretty(x: ChowClass) -> str:
    """Human rendering, e.g. "4H^2 - 6HR"."""
    if x.is_zero():
        return "0"
    parts = []
    for (i, j), c in sorted(x.items(), key=lambda t: (t[0][0] + t[0][1], -t[0][0])):
        name = ("H" if i == 1 else f"H^{i}" if i else "") + ("R" if j else "")
        body = name or "1"
        if c == 1 and name:
            term = body
        elif c == -1 and name:
            term = f"-{body}"
        else:
            term = f"{c}{name}" if name else f"{c}"
        parts.append(term)
    text = parts[0]
    for term in parts[1:]:
        text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
    return text


def chow_class(scroll: ScrollModel, coeffs: dict[Monomial, int]) -> ChowClass:
    return ChowClass(scroll, coeffs)


def one(scroll: ScrollModel) -> ChowClass:
    return ChowClass(scroll, {(0, 0): 1})


def hyperplane(scroll: ScrollModel) -> ChowClass:
    return ChowClass(scroll, {(1, 0): 1})


def fiber(scroll: ScrollModel) -> ChowClass:
    return ChowClass(scroll, {(0, 1): 1})


def divisor(scroll: ScrollModel, h: int, r: int) -> ChowClass:
    """The divisor class h*H + r*R."""
    return ChowClass(scroll, {(1, 0): h, (0, 1): r})


def _require_same_scroll(x: ChowClass, y: ChowClass, op: str):
    if x.scroll != y.scroll:
        raise ValueError(
            f"cannot {op} classes on different scrolls: "
            f"{x.scroll!r} vs {y.scroll!r}"
        )


def mul(x: ChowClass, y: ChowClass) -> ChowClass:
    """Product in the Chow ring, reduced to normal form."""
    _require_same_scroll(x, y, "multiply")
    r = x.scroll.rank
    dense = _backend.mul_reduce(r, x.scroll.c1, x.to_dense(), y.to_dense())
    return ChowClass.from_dense(x.scroll, dense)


def degree(x: ChowClass) -> int:
    """Coefficient of the point class H^(r-1) R (other codimensions ignored)."""
    r = x.scroll.rank
    return x.coefficient(r - 1, 1)


def intersect_number(curve_class: ChowClass, divisor_class: ChowClass) -> int:
    """degree(curve * divisor) for a curve class and a divisor class."""
    r = curve_class.scroll.rank
    if not curve_class.is_pure_codim(r - 1):
        raise ValueError(
            f"curve class {pretty(curve_class)!r} is not pure of codimension {r - 1}"
        )
    if not divisor_class.is_pure_codim(1):
        raise ValueError(
            f"divisor class {pretty(divisor_class)!r} is not pure of codimension 1"
        )
    return degree(mul(curve_class, divisor_class))


def retwist(x: ChowClass, m: int) -> ChowClass:
    """Move a class to the scroll with every twist shifted by m.

    The polarizations are related by H_old = H_new - m*R, so each H^i R^j
    becomes H^i R^j - i*m*H^(i-1) R^(j+1) after killing R^2.  This is a
    ring isomorphism onto the shifted scroll and retwist(., m) and
    retwist(., -m) are mutually inverse.
    """
    target = make_scroll([a + m for a in x.scroll.twists])
    coeffs: dict[Monomial, int] = {}
    for (i, j), c in x.items():
        coeffs[(i, j)] = coeffs.get((i, j), 0) + c
        if i >= 1 and j == 0:
            coeffs[(i - 1, 1)] = coeffs.get((i - 1, 1), 0) - i * m * c
    return ChowClass(target, coeffs)
