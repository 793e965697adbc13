"""Independent verification oracles shared by the test modules.

The geometry oracle here deliberately avoids the package's decision path:
it evaluates every coordinate at one concrete large value of N and answers
membership by exhaustive segment/triangle tests with Cramer determinants,
and interiority by walking the edges of a freshly computed hull polygon.
The package instead decides symbolically over the a*N + b domain, so an
agreement between the two is meaningful evidence.

Soundness of the concrete evaluation: every sign the oracle consults is a
polynomial in N of degree at most 2 whose coefficients are integers (or
fixed-denominator rationals) built from at most three multiplications of
coordinate entries.  With coordinate constants bounded by 10^3 in absolute
value and N-coefficients bounded by a few units, every such polynomial has
all real roots below ~10^7 (Cauchy bound), so the sign at N_STAR equals the
eventual sign for large N, which is what the package computes.
"""

from fractions import Fraction

from nrgit import LinParam, Status, wall_values

N_STAR = Fraction(10**7)

ORIGIN = (Fraction(0), Fraction(0))


def concrete_points(weight_set, n_value=N_STAR):
    """Distinct (Fraction, Fraction) pairs of a WeightSet at a concrete N."""
    return sorted({(w.x.eval_at(n_value), w.y.eval_at(n_value)) for w in weight_set})


def cross3(o, a, b):
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def hull_polygon(pts):
    """Convex hull of rational points, counterclockwise, collinear dropped."""
    pts = sorted(set(pts))
    if len(pts) <= 2:
        return pts
    def half(seq):
        out = []
        for p in seq:
            while len(out) >= 2 and cross3(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out
    lower = half(pts)
    upper = half(list(reversed(pts)))
    return lower[:-1] + upper[:-1]


def origin_in_hull(pts):
    """Caratheodory membership: origin is a point, on a segment, or in a
    nondegenerate triangle with all barycentric signs consistent."""
    if ORIGIN in pts:
        return True
    m = len(pts)
    for i in range(m):
        for j in range(i + 1, m):
            p, q = pts[i], pts[j]
            if cross3(ORIGIN, p, q) == 0 and p[0] * q[0] + p[1] * q[1] <= 0:
                return True
    for i in range(m):
        for j in range(i + 1, m):
            for k in range(j + 1, m):
                a, b, c = pts[i], pts[j], pts[k]
                den = cross3(a, b, c)
                if den == 0:
                    continue
                l1 = cross3(ORIGIN, b, c)
                l2 = cross3(ORIGIN, c, a)
                l3 = cross3(ORIGIN, a, b)
                if den < 0:
                    l1, l2, l3 = -l1, -l2, -l3
                if l1 >= 0 and l2 >= 0 and l3 >= 0:
                    return True
    return False


def origin_strictly_inside(pts):
    poly = hull_polygon(pts)
    if len(poly) < 3:
        return False
    return all(
        cross3(a, b, ORIGIN) > 0 for a, b in zip(poly, poly[1:] + poly[:1])
    )


def oracle_location(weight_set, n_value=N_STAR):
    """Independent Outside/Boundary/Interior verdict for a WeightSet."""
    pts = concrete_points(weight_set, n_value)
    if not origin_in_hull(pts):
        return "Outside"
    return "Interior" if origin_strictly_inside(pts) else "Boundary"


def oracle_status(weight_set, n_value=N_STAR) -> Status:
    return {
        "Outside": Status.UNSTABLE,
        "Boundary": Status.STRICTLY_SEMISTABLE,
        "Interior": Status.STABLE,
    }[oracle_location(weight_set, n_value)]


def lin_for(tau) -> LinParam:
    """Exact LinParam with slope tau."""
    tau = Fraction(tau)
    return LinParam(tau.denominator, tau.numerator)


def tau_grid(n, eps=Fraction(1, 7)):
    """Walls, walls +- eps, and chamber midpoints, sorted and distinct."""
    ws = wall_values(n)
    taus = set()
    for w in ws:
        taus.update((w, w + eps, w - eps))
    for a, b in zip(ws, ws[1:]):
        taus.add(Fraction(a + b, 2))
    return sorted(taus)
