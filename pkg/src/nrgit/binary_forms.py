"""Degree-n point configurations on the projective line and their stability.

A configuration (an effective divisor) is recorded purely by multiplicities:
the mass at the two torus-fixed points [1:0] and [0:1] plus the multiset of
masses at anonymous generic roots.  Stability under the Borel subgroup of
SL(2), under SL(2) itself, and under the unipotent translations depends only
on this data, which makes every census finite.

The Borel classification depends on the linearisation only through the slope
tau = r/m; all threshold comparisons like "mult < (n - tau)/2" are evaluated
in cleared-denominator integer form so walls are hit exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum, IntEnum
from fractions import Fraction


class Status(IntEnum):
    """Stability class, ordered worst to best so worst-case = min."""

    UNSTABLE = 0
    STRICTLY_SEMISTABLE = 1
    STABLE = 2

    @property
    def semistable(self) -> bool:
        return self >= Status.STRICTLY_SEMISTABLE

    @property
    def stable(self) -> bool:
        return self is Status.STABLE

    @property
    def label(self) -> str:
        return {
            Status.UNSTABLE: "Unstable",
            Status.STRICTLY_SEMISTABLE: "StrictlySemistable",
            Status.STABLE: "Stable",
        }[self]

    def __str__(self):
        return self.label


def _status(stable: bool, semistable: bool) -> Status:
    if stable:
        return Status.STABLE
    if semistable:
        return Status.STRICTLY_SEMISTABLE
    return Status.UNSTABLE


@dataclass(frozen=True, slots=True)
class Divisor:
    """n points on P^1 by multiplicity: mass at [1:0], at [0:1], and generic.

    Generic entries are the multiplicities of pairwise-distinct roots away
    from both special points; their positions are anonymized and the tuple is
    kept sorted descending so equal profiles compare equal.
    """

    n: int
    mult_inf: int
    mult_zero: int
    generic: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "generic", tuple(sorted((int(g) for g in self.generic), reverse=True))
        )
        validate(self)

    def all_mults(self) -> tuple[int, ...]:
        """Multiplicities of all actual roots (positive masses only)."""
        out = [m for m in (self.mult_inf, self.mult_zero) if m > 0]
        out.extend(self.generic)
        return tuple(out)

    def max_mult(self) -> int:
        return max(self.all_mults())

    def __str__(self):
        roots = "+".join(str(g) for g in self.generic)
        return f"(n={self.n}, inf={self.mult_inf}, zero={self.mult_zero}, roots=[{roots}])"


def validate(d: Divisor) -> Divisor:
    if d.n < 1:
        raise ValueError(f"degree must be positive, got {d.n}")
    if d.mult_inf < 0 or d.mult_zero < 0:
        raise ValueError(f"negative special multiplicity in {d!r}")
    if any(g < 1 for g in d.generic):
        raise ValueError(f"nonpositive generic multiplicity in {d!r}")
    total = d.mult_inf + d.mult_zero + sum(d.generic)
    if total != d.n:
        raise ValueError(
            f"degree mismatch: multiplicities sum to {total}, expected {d.n}"
        )
    return d


@dataclass(frozen=True, slots=True)
class LinParam:
    """Rational linearisation parameter: twist r over tensor power m > 0."""

    m: int
    r: int

    def __post_init__(self):
        if self.m <= 0:
            raise ValueError(f"m must be a positive integer, got {self.m}")

    @property
    def tau(self) -> Fraction:
        return Fraction(self.r, self.m)

    def __str__(self):
        return f"(m={self.m}, r={self.r})"


def classify_borel(d: Divisor, lin: LinParam) -> Status:
    """Status of d under the Borel subgroup at slope tau = r/m.

    tau outside [0, n]: nothing is semistable.  tau = 0: semistable iff no
    root has multiplicity > n/2, never stable.  0 < tau <= n: stable iff the
    [1:0] mass is < (n - tau)/2 and every other root mass is < (n + tau)/2;
    semistable with <=.  (At tau = n the stable condition is vacuously empty
    and semistability collapses to "no root at [1:0]".)
    """
    n, m, r = d.n, lin.m, lin.r
    if r < 0 or r > n * m:
        return Status.UNSTABLE
    if r == 0:
        return _status(False, 2 * d.max_mult() <= n)
    others = [d.mult_zero] + list(d.generic)
    lo = n * m - r  # 2*mult*m vs m*(n - tau) cleared of denominators
    hi = n * m + r
    ss = 2 * d.mult_inf * m <= lo and all(2 * v * m <= hi for v in others)
    st = 2 * d.mult_inf * m < lo and all(2 * v * m < hi for v in others)
    return _status(st, ss)


def classify_sl2(d: Divisor) -> Status:
    """Classical SL(2) status: stable iff every multiplicity < n/2."""
    top = 2 * d.max_mult()
    return _status(top < d.n, top <= d.n)


def classify_unipotent(d: Divisor) -> Status:
    """Status under the unipotent translations alone.

    The stable set is where fewer than n/2 points coincide and the finitely
    generated semistable set is where at most n/2 coincide; the returned
    Status encodes that pair via .stable and .semistable.
    """
    top = 2 * d.max_mult()
    return _status(top < d.n, top <= d.n)


ZERO_SLOT = "zero"


def move_root_to_zero(d: Divisor, which) -> Divisor:
    """Apply the unipotent translation taking a chosen root to [0:1].

    `which` is an index into d.generic or the literal "zero" for the root
    already at [0:1].  The previous [0:1] mass and all other generic roots
    land at generic positions; only [1:0] is fixed by the translations, so
    moving the [1:0] slot is not a group move and is rejected.
    """
    if which == "inf":
        raise ValueError("the [1:0] slot is fixed by every translation")
    if which == ZERO_SLOT:
        return d
    if not isinstance(which, int) or not 0 <= which < len(d.generic):
        raise ValueError(f"no generic root at index {which!r}")
    chosen = d.generic[which]
    rest = list(d.generic[:which] + d.generic[which + 1 :])
    if d.mult_zero > 0:
        rest.append(d.mult_zero)
    return Divisor(d.n, d.mult_inf, chosen, tuple(rest))


class LimitDirection(Enum):
    TO_ZERO = "ToZero"
    TO_INF = "ToInf"


def torus_limit(d: Divisor, direction: LimitDirection) -> Divisor:
    """Limit configuration under the one-parameter torus.

    TO_ZERO merges all mass away from [1:0] into [0:1]; TO_INF merges all
    mass away from [0:1] into [1:0].
    """
    if direction is LimitDirection.TO_ZERO:
        return Divisor(d.n, d.mult_inf, d.n - d.mult_inf, ())
    if direction is LimitDirection.TO_INF:
        return Divisor(d.n, d.n - d.mult_zero, d.mult_zero, ())
    raise ValueError(f"unknown direction {direction!r}")


@dataclass(frozen=True, slots=True)
class MoveStep:
    op: str  # "move_root_to_zero" or "torus_limit"
    arg: object
    result: Divisor


def central_divisor(n: int, tau: Fraction) -> Divisor:
    """The unique closed-orbit configuration at an interior wall."""
    s = Fraction(n - tau, 2)
    if s.denominator != 1 or not 0 < tau < n:
        raise ValueError(f"tau={tau} is not an interior wall for n={n}")
    return Divisor(n, int(s), n - int(s), ())


def sequiv_witness(d: Divisor, lin: LinParam) -> list[MoveStep]:
    """Degeneration of a strictly semistable d to the central configuration.

    Requires tau to be an interior wall (0 < tau < n with n - tau even) and
    classify_borel(d, lin) strictly semistable.  Returns the explicit move
    sequence; every intermediate configuration stays semistable and the final
    one is ((n-tau)/2, (n+tau)/2, []).
    """
    tau = lin.tau
    if not (0 < tau < d.n and Fraction(d.n - tau, 2).denominator == 1):
        raise ValueError(f"tau={tau} is not an interior wall for n={d.n}")
    if classify_borel(d, lin) is not Status.STRICTLY_SEMISTABLE:
        raise ValueError(f"{d} is not strictly semistable at tau={tau}")
    s = int(Fraction(d.n - tau, 2))
    central = central_divisor(d.n, tau)
    if d == central:
        return []
    steps: list[MoveStep] = []
    cur = d
    if cur.mult_inf == s:
        # mass at [1:0] already saturates its bound; flowing everything else
        # to [0:1] lands on the central configuration
        cur = torus_limit(cur, LimitDirection.TO_ZERO)
        steps.append(MoveStep("torus_limit", LimitDirection.TO_ZERO, cur))
        return steps
    # otherwise some other root saturates (n + tau)/2 = n - s: bring it to
    # [0:1], then flow the rest to [1:0]
    big = cur.n - s
    if cur.mult_zero != big:
        idx = cur.generic.index(big)
        cur = move_root_to_zero(cur, idx)
        steps.append(MoveStep("move_root_to_zero", idx, cur))
    cur = torus_limit(cur, LimitDirection.TO_INF)
    steps.append(MoveStep("torus_limit", LimitDirection.TO_INF, cur))
    return steps


def _partitions(total: int) -> list[tuple[int, ...]]:
    if total == 0:
        return [()]
    out = []

    def rec(remaining, cap, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        for part in range(min(remaining, cap), 0, -1):
            acc.append(part)
            rec(remaining - part, part, acc)
            acc.pop()

    rec(total, total, [])
    return out


def _all_profiles(n: int) -> list[Divisor]:
    """Every multiplicity profile of degree n, duplicate-free."""
    out = []
    for a, b in itertools.product(range(n + 1), repeat=2):
        if a + b > n:
            continue
        for parts in _partitions(n - a - b):
            out.append(Divisor(n, a, b, parts))
    return out
