"""Wall-and-chamber structure in the slope parameter tau and flip data.

Stability of degree-n configurations jumps only at tau = 0, tau = n, and the
interior values 0 < tau < n with n - tau even; between consecutive walls the
classification is constant and stable = semistable.  Each regime's quotient
is reported symbolically: kind, dimension, and at interior walls the
weighted-projective exceptional loci of the flip.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .binary_forms import LinParam, Status, _all_profiles, classify_borel, classify_sl2


class WallKind(Enum):
    WALL_ZERO = "WallZero"
    INTERIOR_WALL = "InteriorWall"
    WALL_N = "WallN"
    CHAMBER = "Chamber"


@dataclass(frozen=True, slots=True)
class WallChamber:
    """A wall (value: Fraction) or an open chamber (value: (lo, hi))."""

    kind: WallKind
    value: Fraction | tuple[Fraction, Fraction]


class QuotientKind(Enum):
    GEOMETRIC_PROJECTIVE = "GeometricProjective"
    CLASSICAL_SL2_QUOTIENT = "ClassicalSL2Quotient"
    STABLE_UNION_POINT = "StableUnionPoint"
    SINGLE_POINT = "SinglePoint"
    EMPTY = "Empty"


@dataclass(frozen=True, slots=True)
class QuotientProfile:
    ss_equals_s: bool
    quotient_kind: QuotientKind
    dimension: int | None
    note: str | None = None


@dataclass(frozen=True, slots=True)
class FlipData:
    s: int
    e_plus_weights: tuple[int, ...]
    e_minus_weights: tuple[int, ...]
    slice_weights: tuple[int, ...]


def wall_values(n: int) -> list[Fraction]:
    """Sorted wall slopes: 0, n, and interior q with n - q even."""
    if n < 1:
        raise ValueError(f"degree must be positive, got {n}")
    interior = [Fraction(q) for q in range(n - 2, 0, -2)]
    return sorted([Fraction(0), *interior, Fraction(n)])


def walls(n: int) -> list[WallChamber]:
    """Walls and the open chambers interleaving them, ascending."""
    vals = wall_values(n)
    out: list[WallChamber] = []
    for i, v in enumerate(vals):
        if v == 0:
            kind = WallKind.WALL_ZERO
        elif v == n:
            kind = WallKind.WALL_N
        else:
            kind = WallKind.INTERIOR_WALL
        out.append(WallChamber(kind, v))
        if i + 1 < len(vals):
            out.append(WallChamber(WallKind.CHAMBER, (v, vals[i + 1])))
    return out


def _census_statuses(n: int, lin: LinParam) -> list[Status]:
    return [classify_borel(d, lin) for d in _all_profiles(n)]


def _lin_for(tau: Fraction) -> LinParam:
    return LinParam(tau.denominator, tau.numerator)


def chamber_profile(n: int, tau) -> QuotientProfile:
    """Symbolic description of the quotient at slope tau.

    tau = 0 gives the classical SL(2) quotient (dimension n - 3 for n >= 3);
    a chamber value gives a geometric projective quotient of dimension n - 2
    (stable = semistable is automatic away from walls); an interior wall
    adds one strictly semistable S-equivalence class to the stable part;
    tau = n collapses everything to a single point.  Empty when no
    semistable configuration exists at all (only very small n).
    """
    tau = Fraction(tau)
    if not 0 <= tau <= n:
        raise ValueError(f"tau={tau} outside [0, {n}]")
    statuses = _census_statuses(n, _lin_for(tau))
    any_ss = any(s.semistable for s in statuses)
    any_stable = any(s.stable for s in statuses)
    if not any_ss:
        return QuotientProfile(True, QuotientKind.EMPTY, None)
    vals = wall_values(n)
    if tau == 0:
        sl2_strict = any(
            classify_sl2(d) is Status.STRICTLY_SEMISTABLE for d in _all_profiles(n)
        )
        return QuotientProfile(
            not sl2_strict,
            QuotientKind.CLASSICAL_SL2_QUOTIENT,
            n - 3 if n >= 3 else None,
            "the semistable part fibers over the classical quotient; the "
            "fibration is a geometric quotient for the unipotent subgroup",
        )
    if tau == n:
        return QuotientProfile(
            False,
            QuotientKind.SINGLE_POINT,
            0,
            "every semistable configuration is S-equivalent to the one with "
            "all mass at [0:1]",
        )
    if tau in vals:
        return QuotientProfile(
            False,
            QuotientKind.STABLE_UNION_POINT,
            n - 2 if any_stable else None,
            "the stable quotient plus one extra point for the single "
            "strictly semistable S-equivalence class",
        )
    if not any_stable:
        return QuotientProfile(True, QuotientKind.EMPTY, None)
    note = None
    if n == 3:
        note = "all chamber quotients in degree 3 are isomorphic to P^1"
    return QuotientProfile(True, QuotientKind.GEOMETRIC_PROJECTIVE, n - 2, note)


def slice_weights(n: int, s: int) -> tuple[int, ...]:
    """Torus weights -2s, -2s+2, ..., -2 on the flip slice (s terms)."""
    if not 1 <= s <= n - 1:
        raise ValueError(f"s={s} out of range for n={n}")
    return tuple(range(-2 * s, 0, 2))


def flip_data(n: int, tau) -> FlipData:
    """Exceptional loci of the flip across an interior wall.

    With s = (n - tau)/2 the downward side contracts a weighted projective
    space P(1, ..., n-s) and the upward side extracts P(1, ..., s); the
    normal slice to the center carries torus weights -2s, ..., -2.  Degree 3
    is refused: its two chamber quotients are already isomorphic and no flip
    occurs.
    """
    tau = Fraction(tau)
    if n == 3:
        raise ValueError("degree 3 has no flip: both chamber quotients coincide")
    interior = [v for v in wall_values(n) if 0 < v < n]
    if tau not in interior:
        raise ValueError(f"tau={tau} is not an interior wall for n={n}")
    s = int(Fraction(n - tau, 2))
    return FlipData(
        s,
        tuple(range(1, s + 1)),
        tuple(range(1, n - s + 1)),
        slice_weights(n, s),
    )
