"""The projective completion P^2 x P(V) and its symbolic-N stability data.

The configuration space of n points on the line embeds into P^2 x P(V) via
x -> ([1:1:0], x); the big group SL(2) x (residual torus) acts with the
rank-2 torus weights below, and for every sufficiently large twist N of the
P^2 factor the completion computes the Borel-group quotients of the original
space.  This module holds the fixed-point weight table, the weight polytope
of an arbitrary point, the closed-form torus and group classifications, and
the report certifying that intrinsic and envelope (semi)stability agree.

Points of the completion are recorded combinatorially (EnvPoint): which of
the coordinates v0, v1, v2 are nonzero, the divisor profile, and the
multiplicity of the marked point [v1:v2] as a root.  The slots of the
divisor are read literally: [1:0] mass at mult_inf, [0:1] mass at mult_zero.
That forces coherence constraints between the v-support and the marked
multiplicity which are checked at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .binary_forms import (
    Divisor,
    LinParam,
    Status,
    _all_profiles,
    _status,
    classify_borel,
)
from .polytope import (
    N,
    AffineN,
    OriginLocation,
    Weight2,
    WeightSet,
    contains_origin,
    scaled_minkowski,
    weight2,
)

# T1 x T2 weights of the three v-coordinates under the rank-2 torus
E_WEIGHTS = {
    0: weight2(0, 0),
    1: weight2(1, -1),
    2: weight2(-1, -1),
}

_V_LABELS = {0: "[1:0:0]", 1: "[0:1:0]", 2: "[0:0:1]"}


@dataclass(frozen=True, slots=True)
class EnvParams:
    n: int
    lin: LinParam

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"degree must be positive, got {self.n}")


@dataclass(frozen=True, slots=True)
class EnvPoint:
    """A point of P^2 x P(V) by v-coordinate support and marked-root data.

    marked_mult is the multiplicity of [v1:v2] as a root of the
    configuration (0 when it is not a root); it is absent exactly when
    v1 = v2 = 0.  Coherence with the literal slot reading:

      v-support meets {1,2} in {1} only  ->  [v1:v2] = [1:0], marked = mult_inf
      v-support meets {1,2} in {2} only  ->  [v1:v2] = [0:1], marked = mult_zero
      v-support contains both 1 and 2    ->  [v1:v2] generic, marked in
                                             {0} + generic multiplicities
    """

    v_support: frozenset[int]
    divisor: Divisor
    marked_mult: int | None = None

    def __init__(self, v_support, divisor: Divisor, marked_mult=None):
        sup = frozenset(int(j) for j in v_support)
        if not sup or not sup <= {0, 1, 2}:
            raise ValueError(f"v_support must be a nonempty subset of {{0,1,2}}, got {set(v_support)}")
        object.__setattr__(self, "v_support", sup)
        object.__setattr__(self, "divisor", divisor)
        object.__setattr__(self, "marked_mult", marked_mult)
        self._check_marked()

    def _check_marked(self):
        sup, d, marked = self.v_support, self.divisor, self.marked_mult
        special = sup & {1, 2}
        if not special:
            if marked is not None:
                raise ValueError("inconsistent marked data: v1 = v2 = 0 admits no marked root")
            return
        if marked is None:
            raise ValueError("inconsistent marked data: [v1:v2] != 0 requires marked_mult")
        if special == {1}:
            if marked != d.mult_inf:
                raise ValueError(
                    f"inconsistent marked data: [v1:v2] = [1:0] has multiplicity {d.mult_inf}, got {marked}"
                )
        elif special == {2}:
            if marked != d.mult_zero:
                raise ValueError(
                    f"inconsistent marked data: [v1:v2] = [0:1] has multiplicity {d.mult_zero}, got {marked}"
                )
        else:
            if marked != 0 and marked not in d.generic:
                raise ValueError(
                    f"inconsistent marked data: generic [v1:v2] must mark 0 or a generic root, got {marked}"
                )

    def __str__(self):
        sup = "".join(str(j) for j in sorted(self.v_support))
        return f"(v:{sup}, d:{self.divisor}, marked:{self.marked_mult})"


def embed_divisor(d: Divisor) -> EnvPoint:
    """Image of a configuration under x -> ([1:1:0], x)."""
    return EnvPoint({0, 1}, d, d.mult_inf)


def fixed_point_weights(params: EnvParams) -> list[tuple[str, int, Weight2]]:
    """Weights of the 3(n+1) torus-fixed points ([e_j], [x^(n-i) y^i]).

    Emitted family-major: the v = [1:0:0] row carries (m(2i-n), r), the
    v = [0:1:0] row (N + m(2i-n), -N + r), the v = [0:0:1] row
    (-N + m(2i-n), -N + r).
    """
    n, m, r = params.n, params.lin.m, params.lin.r
    rows = []
    for j in (0, 1, 2):
        e = E_WEIGHTS[j]
        for i in range(n + 1):
            w = Weight2(N * e.x + m * (2 * i - n), N * e.y + AffineN.of(r))
            rows.append((_V_LABELS[j], i, w))
    return rows


def point_polytope(p: EnvPoint, params: EnvParams) -> WeightSet:
    """Weight multiset of p: N*(v-support weights) + m*(monomial row) + (0, r).

    The monomial support of the configuration runs over i in
    [mult_inf, n - mult_zero]; interior gaps cannot change the hull, so the
    full interval is emitted.
    """
    n, m, r = params.n, params.lin.m, params.lin.r
    d = p.divisor
    if d.n != n:
        raise ValueError(f"divisor degree {d.n} does not match params degree {n}")
    a_part = WeightSet(E_WEIGHTS[j] for j in sorted(p.v_support))
    b_part = WeightSet(
        weight2(2 * i - n, 0) for i in range(d.mult_inf, n - d.mult_zero + 1)
    )
    return scaled_minkowski(
        [(N, a_part), (Fraction(m), b_part)], weight2(0, r)
    )


def torus_case_status(p: EnvPoint, params: EnvParams) -> Status:
    """Rank-2 torus status of p, by the closed case list over v-supports.

    With a = m(2*mult_inf - n), b = m(n - 2*mult_zero) the weight polytope is
    a trapezoid between the row at height r (x in [a, b], present iff v0 != 0)
    and the row at height r - N; intersecting its edges with the x-axis gives,
    per v-support case, exact membership and interiority conditions.  Agrees
    with torus_status(point_polytope(p)) on every representable point.
    """
    n, m, r = params.n, params.lin.m, params.lin.r
    d = p.divisor
    if d.n != n:
        raise ValueError(f"divisor degree {d.n} does not match params degree {n}")
    if 0 not in p.v_support:
        # every weight sits at height r - N < 0
        return Status.UNSTABLE
    a = m * (2 * d.mult_inf - n)
    b = m * (n - 2 * d.mult_zero)
    special = p.v_support & {1, 2}
    if not special:
        # horizontal segment at height r
        return _status(False, r == 0 and a <= 0 <= b)
    if r < 0:
        return Status.UNSTABLE
    if special == {1}:
        member = a <= -r <= b
        interior = r > 0 and a < -r < b
    elif special == {2}:
        member = a <= r <= b
        interior = r > 0 and a < r < b
    else:
        member = a <= r and -r <= b
        interior = r > 0 and a < r and -r < b
    return _status(interior, member)


def group_status(p: EnvPoint, params: EnvParams) -> Status:
    """Status of p under the full group acting on the completion.

    Worst case of the torus status over all group translates, in closed form:
    unstable when tau is outside [0, n] or v0 = 0; at tau = 0 semistable iff
    no root multiplicity exceeds n/2 (never stable); for 0 < tau <= n
    semistable iff [v1:v2] != 0, the marked multiplicity is <= (n - tau)/2
    and every root multiplicity is <= (n + tau)/2, stable iff both strict.
    """
    n, m, r = params.n, params.lin.m, params.lin.r
    d = p.divisor
    if d.n != n:
        raise ValueError(f"divisor degree {d.n} does not match params degree {n}")
    if r < 0 or r > n * m:
        return Status.UNSTABLE
    if 0 not in p.v_support:
        return Status.UNSTABLE
    if r == 0:
        return _status(False, 2 * d.max_mult() <= n)
    if not p.v_support & {1, 2}:
        return Status.UNSTABLE
    marked = p.marked_mult
    top = d.max_mult()
    ss = 2 * marked * m <= n * m - r and 2 * top * m <= n * m + r
    st = 2 * marked * m < n * m - r and 2 * top * m < n * m + r
    return _status(st, ss)


def unipotent_case_status(p: EnvPoint, n: int) -> Status:
    """1-D torus status of p for the untwisted SL(2)-only linearisation.

    The relevant weights are N*alpha + (2i - n) with alpha in {0, +1, -1}
    selected by the v-support and i in the monomial interval; the status is
    read off the endpoints of that interval of AffineN values.
    """
    d = p.divisor
    if d.n != n:
        raise ValueError(f"divisor degree {d.n} does not match degree {n}")
    alphas = sorted({0: 0, 1: 1, 2: -1}[j] for j in p.v_support)
    lo = N * alphas[0] + (2 * d.mult_inf - n)
    hi = N * alphas[-1] + (n - 2 * d.mult_zero)
    zero = AffineN.of(0)
    return _status(lo < zero < hi, lo <= zero <= hi)


def unipotent_status(p: EnvPoint, n: int) -> Status:
    """Worst case of unipotent_case_status over SL(2) translates, closed form.

    Unstable when v0 = 0; otherwise governed by the largest root
    multiplicity: stable below n/2, strictly semistable at n/2.  Restricted
    to embedded configurations this is exactly classify_unipotent.
    """
    if p.divisor.n != n:
        raise ValueError(f"divisor degree {p.divisor.n} does not match degree {n}")
    if 0 not in p.v_support:
        return Status.UNSTABLE
    top = 2 * p.divisor.max_mult()
    return _status(top < n, top <= n)


def enumerate_env_points(n: int) -> list[EnvPoint]:
    """Every coherent EnvPoint of degree n, over all profiles and v-supports."""
    subsets = [
        frozenset(s)
        for s in ({0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2})
    ]
    out = []
    for d in _all_profiles(n):
        for sup in subsets:
            special = sup & {1, 2}
            if not special:
                out.append(EnvPoint(sup, d))
            elif special == {1}:
                out.append(EnvPoint(sup, d, d.mult_inf))
            elif special == {2}:
                out.append(EnvPoint(sup, d, d.mult_zero))
            else:
                for marked in sorted({0, *d.generic}):
                    out.append(EnvPoint(sup, d, marked))
    return out


@dataclass(frozen=True, slots=True)
class EnvelopeReport:
    """Census comparison of intrinsic vs completion (semi)stability."""

    n: int
    lin: LinParam
    counts_intrinsic: tuple[int, int, int]  # stable, strictly ss, unstable
    counts_envelope: tuple[int, int, int]
    stable_equal: bool
    semistable_equal: bool
    chain_ok: bool
    violations: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.stable_equal and self.semistable_equal and self.chain_ok


def strong_envelope_report(n: int, lin: LinParam) -> EnvelopeReport:
    """Verify over all degree-n profiles that the completion computes the
    intrinsic loci: completely-stable = stable, completely-semistable =
    finitely-generated-semistable, plus the weak inclusion chain
    completely-stable <= stable <= semistable <= completely-semistable.
    """
    params = EnvParams(n, lin)
    counts_i = [0, 0, 0]
    counts_e = [0, 0, 0]
    violations = []
    stable_equal = semistable_equal = chain_ok = True
    for d in _all_profiles(n):
        intrinsic = classify_borel(d, lin)
        enveloped = group_status(embed_divisor(d), params)
        counts_i[2 - intrinsic] += 1
        counts_e[2 - enveloped] += 1
        if intrinsic.stable != enveloped.stable:
            stable_equal = False
            violations.append(f"stable mismatch at {d}: {intrinsic} vs {enveloped}")
        if intrinsic.semistable != enveloped.semistable:
            semistable_equal = False
            violations.append(f"semistable mismatch at {d}: {intrinsic} vs {enveloped}")
        # weak chain, asserted independently of the equalities
        if enveloped.stable and not intrinsic.stable:
            chain_ok = False
            violations.append(f"chain break (completely-stable > stable) at {d}")
        if intrinsic.stable and not intrinsic.semistable:
            chain_ok = False
            violations.append(f"chain break (stable > semistable) at {d}")
        if intrinsic.semistable and not enveloped.semistable:
            chain_ok = False
            violations.append(f"chain break (semistable > completely-semistable) at {d}")
    return EnvelopeReport(
        n,
        lin,
        tuple(counts_i),
        tuple(counts_e),
        stable_equal,
        semistable_equal,
        chain_ok,
        tuple(violations),
    )


def concrete_torus_case_status(p: EnvPoint, params: EnvParams, n_value) -> Status:
    """Torus status with the symbolic N evaluated at a concrete value.

    Used only to study how large N must be; never feeds back into the
    symbolic predicates.
    """
    pts = [
        weight2(w.x.eval_at(n_value), w.y.eval_at(n_value))
        for w in point_polytope(p, params)
    ]
    loc = contains_origin(WeightSet(pts))
    return {
        OriginLocation.OUTSIDE: Status.UNSTABLE,
        OriginLocation.BOUNDARY: Status.STRICTLY_SEMISTABLE,
        OriginLocation.INTERIOR: Status.STABLE,
    }[loc]


def n_threshold(n: int, lin: LinParam, max_n0: int = 1 << 20) -> int:
    """Least N0 in a doubling scan 1, 2, 4, ... such that evaluating the
    twist at every integer N in [N0, 4*N0] reproduces the symbolic status for
    every degree-n point of the completion.  Exhausting the scan bound would
    mean the symbolic order is wrong somewhere and raises.
    """
    params = EnvParams(n, lin)
    census = [
        (p, torus_case_status(p, params)) for p in enumerate_env_points(n)
    ]
    n0 = 1
    while n0 <= max_n0:
        ok = True
        for n_value in range(n0, 4 * n0 + 1):
            for p, symbolic in census:
                if concrete_torus_case_status(p, params, n_value) != symbolic:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            return n0
        n0 *= 2
    raise RuntimeError(
        f"n_threshold scan exhausted at {max_n0} for n={n}, lin={lin}"
    )
