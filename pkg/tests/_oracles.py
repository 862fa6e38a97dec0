"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written from scratch with different
algorithms than the library (gift wrapping instead of monotone chain,
dilogarithm instead of a series, divisor enumeration instead of
discriminant analysis) so that agreement is meaningful.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

import mpmath as mp
import sympy as sp

Point = tuple[Fraction, Fraction]


def cross(o: Point, a: Point, b: Point) -> Fraction:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def brute_hull(points) -> list[Point]:
    """Convex hull by gift wrapping, exact rationals.

    Returns vertices counterclockwise starting from the
    lexicographically smallest one.  Collinear non-extreme points are
    dropped.
    """
    pts = sorted({(Fraction(x), Fraction(y)) for x, y in points})
    if not pts:
        raise ValueError("no points")
    if len(pts) == 1:
        return [pts[0]]
    start = pts[0]
    hull = [start]
    current = start
    while True:
        candidate = pts[0] if pts[0] != current else pts[1]
        for p in pts:
            if p == current:
                continue
            turn = cross(current, candidate, p)
            if turn < 0:
                candidate = p
            elif turn == 0:
                # keep the farthest point on the supporting ray
                da = (candidate[0] - current[0]) ** 2 + (candidate[1] - current[1]) ** 2
                db = (p[0] - current[0]) ** 2 + (p[1] - current[1]) ** 2
                if db > da:
                    candidate = p
        if candidate == start:
            break
        hull.append(candidate)
        current = candidate
        if len(hull) > len(pts):
            raise RuntimeError("gift wrapping failed to close")
    if len(hull) == 2 and hull[0] == hull[1]:
        return [hull[0]]
    return hull


def shoelace(vertices) -> Fraction:
    """Signed area of a simple polygon given in order (positive if ccw)."""
    verts = [(Fraction(x), Fraction(y)) for x, y in vertices]
    total = Fraction(0)
    n = len(verts)
    for i in range(n):
        x0, y0 = verts[i]
        x1, y1 = verts[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return total / 2


def minkowski_sum_hull(verts_a, verts_b) -> list[Point]:
    """Brute Minkowski sum of two convex vertex sets: all pairwise sums."""
    sums = [(ax + bx, ay + by) for ax, ay in verts_a for bx, by in verts_b]
    return brute_hull(sums)


def lobachevsky_oracle(theta: float) -> float:
    """Lobachevsky function via the dilogarithm: Im(Li2(e^{2i t}))/2."""
    with mp.workdps(40):
        val = mp.polylog(2, mp.e ** (2j * mp.mpf(theta))) / 2
        return float(mp.im(val))


def ideal_tet_volume_oracle(a: float, b: float, c: float) -> float:
    return lobachevsky_oracle(a) + lobachevsky_oracle(b) + lobachevsky_oracle(c)


def seminorm_oracle(functionals, point) -> Fraction:
    """Sum of weighted absolute values of the listed functionals."""
    x, y = Fraction(point[0]), Fraction(point[1])
    total = Fraction(0)
    for q, p, weight in functionals:
        total += Fraction(weight) * abs(Fraction(q) * x + Fraction(p) * y)
    return total


def _divisors_up_to_scalar(poly: sp.Poly) -> list[sp.Poly]:
    """All monic-normalized divisors of a univariate rational polynomial."""
    content, factors = poly.factor_list()
    out = []
    choices = [range(mult + 1) for _, mult in factors]
    for exps in itertools.product(*choices):
        d = sp.Poly(1, poly.gen, domain="QQ")
        for (base, _), e in zip(factors, exps):
            for _ in range(e):
                d = d * base
        out.append(d)
    return out


def brute_quadratic_reducible(a2: sp.Expr, a1: sp.Expr, a0: sp.Expr, gen) -> bool:
    """Decide reducibility of a2*y^2 + a1*y + a0 over Q[gen, y] by
    enumerating divisor splits of the outer coefficients.

    A nontrivial factorization either shares a content polynomial in
    gen across all three coefficients, or splits into two factors of
    y-degree one: (p + q y)(r + s y) with q s = a2, p r = a0 and
    p s + q r = a1, where p, q, r, s in Q[gen].  Scalars are absorbed
    into one unknown rational alpha per divisor split and solved for.
    """
    A2 = sp.Poly(a2, gen, domain="QQ")
    A1 = sp.Poly(a1, gen, domain="QQ")
    A0 = sp.Poly(a0, gen, domain="QQ")
    if A2.is_zero or A0.is_zero:
        raise ValueError("expected a genuinely quadratic shape with nonzero ends")
    if sp.gcd(sp.gcd(A2, A1), A0).degree() > 0:
        return True
    alpha = sp.Symbol("alpha")
    for q in _divisors_up_to_scalar(A2):
        s_quo, s_rem = sp.div(A2, q)
        if not s_rem.is_zero:
            continue
        for p0 in _divisors_up_to_scalar(A0):
            r_quo, r_rem = sp.div(A0, p0)
            if not r_rem.is_zero:
                continue
            # alpha^2 * p0 * s - alpha * A1 + q * r == 0 identically
            expr = (alpha**2 * (p0 * s_quo).as_expr()
                    - alpha * A1.as_expr()
                    + (q * r_quo).as_expr())
            coeffs = sp.Poly(sp.expand(expr), gen).all_coeffs()
            g = sp.Poly(0, alpha, domain="QQ")
            for c in coeffs:
                g = sp.gcd(g, sp.Poly(c, alpha, domain="QQ"))
            if g.is_zero:
                return True
            roots = sp.roots(g, alpha)
            if any(r.is_rational and r != 0 for r in roots):
                return True
    return False


def is_parallelogram(vertices) -> bool:
    """Exact check that four ordered vertices bound a parallelogram."""
    if len(vertices) != 4:
        return False
    v = [(Fraction(x), Fraction(y)) for x, y in vertices]
    d02 = (v[1][0] - v[0][0], v[1][1] - v[0][1])
    d13 = (v[2][0] - v[3][0], v[2][1] - v[3][1])
    return d02 == d13
