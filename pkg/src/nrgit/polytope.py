"""Exact arithmetic over the "sufficiently large N" domain and 2-D hull predicates.

Every stability question in this package reduces to: does the origin lie in
(the interior of) the convex hull of a small set of points whose coordinates
are a*N + b with rational a, b and N a formal parameter meant to be taken
arbitrarily large?  AffineN realizes that scalar domain with the lexicographic
order on (a, b), which agrees with evaluation at every concrete N above a
finite threshold.  All predicates are decided exactly over this ordered
domain; no floating point is used anywhere.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from enum import Enum
from typing import Iterable, NamedTuple, Union

Rational = Union[int, Fraction]


class DegreeOverflowError(ArithmeticError):
    """Product would leave the degree-one domain a*N + b."""


def _frac(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {value!r}")


@dataclass(frozen=True, slots=True)
class AffineN:
    """A value a*N + b, ordered by its sign for all sufficiently large N.

    The order is lexicographic on (n_coeff, const).  Closed under addition,
    subtraction and rational scaling; multiplying two values that both carry
    an N-part raises DegreeOverflowError.
    """

    n_coeff: Fraction
    const: Fraction

    def __init__(self, n_coeff: Rational = 0, const: Rational = 0):
        object.__setattr__(self, "n_coeff", _frac(n_coeff))
        object.__setattr__(self, "const", _frac(const))

    @staticmethod
    def of(value: "AffineN | Rational") -> "AffineN":
        if isinstance(value, AffineN):
            return value
        return AffineN(0, _frac(value))

    def _key(self):
        return (self.n_coeff, self.const)

    def __add__(self, other) -> "AffineN":
        other = AffineN.of(other)
        return AffineN(self.n_coeff + other.n_coeff, self.const + other.const)

    __radd__ = __add__

    def __neg__(self) -> "AffineN":
        return AffineN(-self.n_coeff, -self.const)

    def __sub__(self, other) -> "AffineN":
        return self + (-AffineN.of(other))

    def __rsub__(self, other) -> "AffineN":
        return AffineN.of(other) - self

    def __mul__(self, other) -> "AffineN":
        other = AffineN.of(other)
        if self.n_coeff != 0 and other.n_coeff != 0:
            raise DegreeOverflowError(
                f"({self}) * ({other}) leaves the a*N + b domain"
            )
        return AffineN(
            self.n_coeff * other.const + other.n_coeff * self.const,
            self.const * other.const,
        )

    __rmul__ = __mul__

    def __lt__(self, other):
        return self._key() < AffineN.of(other)._key()

    def __le__(self, other):
        return self._key() <= AffineN.of(other)._key()

    def __gt__(self, other):
        return self._key() > AffineN.of(other)._key()

    def __ge__(self, other):
        return self._key() >= AffineN.of(other)._key()

    def __eq__(self, other):
        if not isinstance(other, (AffineN, int, Fraction)):
            return NotImplemented
        return self._key() == AffineN.of(other)._key()

    def __hash__(self):
        return hash(self._key())

    def is_zero(self) -> bool:
        return self.n_coeff == 0 and self.const == 0

    def sign(self) -> int:
        # Sign for all sufficiently large N: leading coefficient decides.
        if self.n_coeff != 0:
            return 1 if self.n_coeff > 0 else -1
        if self.const != 0:
            return 1 if self.const > 0 else -1
        return 0

    def eval_at(self, n_value: Rational) -> Fraction:
        """Evaluate at a concrete N > 0."""
        n_value = _frac(n_value)
        if n_value <= 0:
            raise ValueError(f"n_value must be positive, got {n_value}")
        return self.n_coeff * n_value + self.const

    def __str__(self):
        if self.n_coeff == 0:
            return str(self.const)
        if self.n_coeff == 1:
            head = "N"
        elif self.n_coeff == -1:
            head = "-N"
        else:
            head = f"{self.n_coeff}N"
        if self.const == 0:
            return head
        sign = "+" if self.const > 0 else "-"
        return f"{head}{sign}{abs(self.const)}"

    def __repr__(self):
        return f"AffineN({self.n_coeff!r}, {self.const!r})"


ZERO = AffineN(0, 0)
N = AffineN(1, 0)


def cmp(a: AffineN, b: AffineN) -> int:
    """-1, 0, or +1: the eventual order of a vs b for large N."""
    return (a - b).sign()


class _Quad(NamedTuple):
    """Internal degree-2 polynomial c2*N^2 + c1*N + c0 used by sign predicates.

    Cross and dot products of AffineN pairs are quadratic in N; their eventual
    sign is the sign of the leading nonzero coefficient.  This type never
    escapes the package's public API.
    """

    c2: Fraction
    c1: Fraction
    c0: Fraction

    @staticmethod
    def mul(a: AffineN, b: AffineN) -> "_Quad":
        return _Quad(
            a.n_coeff * b.n_coeff,
            a.n_coeff * b.const + a.const * b.n_coeff,
            a.const * b.const,
        )

    def add(self, other: "_Quad") -> "_Quad":
        return _Quad(self.c2 + other.c2, self.c1 + other.c1, self.c0 + other.c0)

    def sub(self, other: "_Quad") -> "_Quad":
        return _Quad(self.c2 - other.c2, self.c1 - other.c1, self.c0 - other.c0)

    def sign(self) -> int:
        for c in (self.c2, self.c1, self.c0):
            if c != 0:
                return 1 if c > 0 else -1
        return 0

    def as_affine(self) -> AffineN:
        if self.c2 != 0:
            raise DegreeOverflowError(f"{self} is quadratic in N")
        return AffineN(self.c1, self.c0)


class Weight2(NamedTuple):
    """A character of the rank-2 torus, with AffineN components."""

    x: AffineN
    y: AffineN


def weight2(x, y) -> Weight2:
    return Weight2(AffineN.of(x), AffineN.of(y))


@dataclass(frozen=True, slots=True)
class WeightSet:
    """A finite multiset of Weight2; duplicates are irrelevant to hull tests."""

    points: tuple[Weight2, ...]

    def __init__(self, points: Iterable):
        pts = tuple(
            p if isinstance(p, Weight2) else weight2(p[0], p[1]) for p in points
        )
        object.__setattr__(self, "points", pts)

    def __iter__(self):
        return iter(self.points)

    def __len__(self):
        return len(self.points)

    def distinct(self) -> tuple[Weight2, ...]:
        seen = {}
        for p in self.points:
            seen.setdefault((p.x._key(), p.y._key()), p)
        return tuple(seen.values())


class OriginLocation(Enum):
    OUTSIDE = "Outside"
    BOUNDARY = "Boundary"
    INTERIOR = "Interior"


def _cross_sign(p: Weight2, q: Weight2) -> int:
    # sign of p.x*q.y - p.y*q.x for all large N
    return _Quad.mul(p.x, q.y).sub(_Quad.mul(p.y, q.x)).sign()


def _dot_sign(p: Weight2, q: Weight2) -> int:
    return _Quad.mul(p.x, q.x).add(_Quad.mul(p.y, q.y)).sign()


def _sub(p: Weight2, q: Weight2) -> Weight2:
    return Weight2(p.x - q.x, p.y - q.y)


def _is_origin(p: Weight2) -> bool:
    return p.x.is_zero() and p.y.is_zero()


def _hull_vertices(pts: tuple[Weight2, ...]) -> tuple[Weight2, ...]:
    # Monotone-chain extreme-point filter (exact signs, collinear points
    # dropped).  conv(vertices) = conv(pts), so membership and interiority
    # are unchanged while the Caratheodory scans below stay small.
    if len(pts) <= 2:
        return pts
    pts = sorted(pts, key=lambda p: (p.x._key(), p.y._key()))

    def chain(points):
        out = []
        for p in points:
            while len(out) >= 2 and _cross_sign(_sub(out[-1], out[-2]), _sub(p, out[-2])) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = chain(pts)
    upper = chain(list(reversed(pts)))
    return tuple(lower[:-1] + upper[:-1]) or (pts[0],)


def _origin_in_hull(pts: tuple[Weight2, ...]) -> bool:
    # Caratheodory in the plane: 0 lies in the hull iff it is a point of S,
    # lies on a segment between two points, or lies in a nondegenerate
    # triangle.  Degenerate (collinear) triples are covered by the segment
    # case and must be skipped: the sign test below would accept collinear
    # triples that merely straddle the origin's line.
    if any(_is_origin(p) for p in pts):
        return True
    for p, q in itertools.combinations(pts, 2):
        if _cross_sign(p, q) == 0 and _dot_sign(p, q) <= 0:
            return True
    for p, q, r in itertools.combinations(pts, 3):
        orient = _cross_sign(_sub(q, p), _sub(r, p))
        if orient == 0:
            continue
        neg_p = Weight2(-p.x, -p.y)
        neg_q = Weight2(-q.x, -q.y)
        neg_r = Weight2(-r.x, -r.y)
        b1 = _cross_sign(_sub(q, p), neg_p)
        b2 = _cross_sign(_sub(r, q), neg_q)
        b3 = _cross_sign(_sub(p, r), neg_r)
        if all(b >= 0 for b in (b1, b2, b3)) or all(b <= 0 for b in (b1, b2, b3)):
            return True
    return False


def _perp(p: Weight2) -> Weight2:
    return Weight2(-p.y, p.x)


def _candidate_normals(pts: tuple[Weight2, ...]) -> list[Weight2]:
    # Every supporting line of the hull at the origin is parallel to a hull
    # edge or passes through a vertex, so its normal is proportional to the
    # perpendicular of a point or of a difference of two points.  The axis
    # directions keep the degenerate all-zero case honest.
    cands = [weight2(1, 0), weight2(0, 1)]
    for p in pts:
        if not _is_origin(p):
            cands.append(_perp(p))
    for p, q in itertools.combinations(pts, 2):
        cands.append(_perp(_sub(p, q)))
    return cands


def _origin_interior(pts: tuple[Weight2, ...]) -> bool:
    # 0 is interior iff no line through 0 has all of S weakly on one side;
    # only the finitely many candidate normals can support such a line.
    for d in _candidate_normals(pts):
        signs = {_dot_sign(p, d) for p in pts}
        if 1 not in signs or -1 not in signs:
            return False
    return True


def contains_origin(S: WeightSet) -> OriginLocation:
    """Locate the origin relative to conv(S), exactly, in the large-N regime.

    INTERIOR means the topological interior inside the ambient plane, so
    lower-dimensional hulls (segments, points) are at best BOUNDARY.
    """
    pts = S.distinct()
    if not pts:
        raise ValueError("contains_origin: empty weight set")
    pts = _hull_vertices(pts)
    if not _origin_in_hull(pts):
        return OriginLocation.OUTSIDE
    if _origin_interior(pts):
        return OriginLocation.INTERIOR
    return OriginLocation.BOUNDARY


def scaled_minkowski(
    parts: Iterable[tuple], shift: Weight2 | tuple
) -> WeightSet:
    """All sums {sum_i scale_i * s_i + shift : s_i in S_i}, as a multiset.

    The hull of the output is the Minkowski sum of the scaled hulls plus the
    shift.  Scales must be nonnegative (in the AffineN order) and at most one
    part may carry an N-linear scale, otherwise products would overflow the
    degree-one domain.
    """
    if not isinstance(shift, Weight2):
        shift = weight2(shift[0], shift[1])
    prepared = []
    n_linear = 0
    for scale, part in parts:
        scale = AffineN.of(scale)
        if scale < ZERO:
            raise ValueError(f"scaled_minkowski: negative scale {scale}")
        if scale.n_coeff != 0:
            n_linear += 1
        if not isinstance(part, WeightSet):
            part = WeightSet(part)
        prepared.append((scale, part))
    if n_linear > 1:
        raise DegreeOverflowError(
            "scaled_minkowski: more than one N-linear scale"
        )
    sums = []
    for combo in itertools.product(*(p.points for _, p in prepared)):
        x = shift.x
        y = shift.y
        for (scale, _), pt in zip(prepared, combo):
            x = x + scale * pt.x
            y = y + scale * pt.y
        sums.append(Weight2(x, y))
    return WeightSet(sums)
