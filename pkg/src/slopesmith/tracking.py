"""Numerical continuation of plane-curve branches and line integration.

A branch of {A = 0} is followed by specializing A at each waypoint of a
path in the first variable, solving the resulting univariate polynomial
with a simultaneous-iteration root finder, and picking the root nearest
the previous sample.  Ambiguity (the previous value sits near the Voronoi
boundary between two roots) triggers step halving; persistent ambiguity
is an error, never a silent branch choice.

The tracked samples support the trapezoidal line integral of the 1-form
log|a| d(arg b) - log|b| d(arg a), whose -1/2 multiple measures volume
change along the branch.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .laurent import LaurentPoly2
from .unipoly import UniPoly


class TrackingError(ValueError):
    pass


class RootSolveError(TrackingError):
    pass


class DiscriminantCollisionError(TrackingError):
    """Two candidate roots stayed ambiguously close after maximal halving."""


class RefinementNeededError(TrackingError):
    """Consecutive samples turn a coordinate argument by more than pi/2."""


@dataclass(frozen=True)
class CurvePath:
    """Ordered samples approximately on {A = 0}, with their residuals."""

    samples: tuple[tuple[complex, complex], ...]
    poly: LaurentPoly2
    residual_tol: float
    residuals: tuple[float, ...]
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if len(self.samples) != len(self.residuals):
            raise TrackingError("one residual per sample required")
        if any(r > self.residual_tol for r in self.residuals):
            raise TrackingError("a sample violates the residual tolerance")

    def reversed(self) -> "CurvePath":
        return CurvePath(
            self.samples[::-1],
            self.poly,
            self.residual_tol,
            self.residuals[::-1],
            dict(self.metadata),
        )


def _relative_residual(poly: LaurentPoly2, point: tuple[complex, complex]) -> float:
    a, b = point
    if a == 0 or b == 0:
        return math.inf
    value = 0j
    scale = 0.0
    for (i, j), c in poly.terms.items():
        mono = (a**i) * (b**j)
        value += complex(c) * mono
        scale += abs(c) * abs(a) ** i * abs(b) ** j
    return abs(value) / scale if scale > 0 else math.inf


def _coeff_functions(poly: LaurentPoly2) -> list[UniPoly]:
    """Coefficients of the second variable as polynomials in the first."""
    poly = poly.normalize()
    top = max(j for _, j in poly.terms)
    acc: list[dict[int, object]] = [dict() for _ in range(top + 1)]
    for (i, j), c in poly.terms.items():
        acc[j][i] = c
    out = []
    for cmap in acc:
        if not cmap:
            out.append(UniPoly(()))
            continue
        coeffs = [0] * (max(cmap) + 1)
        for k, v in cmap.items():
            coeffs[k] = v
        out.append(UniPoly(coeffs))
    return out


def _durand_kerner(coeffs: np.ndarray, warm: np.ndarray | None) -> np.ndarray:
    """All roots of the polynomial with the given ascending coefficients."""
    monic = coeffs / coeffs[-1]
    degree = len(monic) - 1
    if degree == 0:
        return np.array([], dtype=complex)
    if warm is not None and len(warm) == degree:
        z = warm.astype(complex).copy()
        # Collapsed warm starts stall the iteration; perturb them apart.
        for k in range(degree):
            for j in range(k):
                if abs(z[k] - z[j]) < 1e-12:
                    z[k] += (1e-6 + 1e-6j) * (k + 1)
    else:
        seed = 0.4 + 0.9j
        z = seed ** np.arange(1, degree + 1)
    poly_desc = monic[::-1]
    scale = 1.0 + np.abs(z).max()
    for _ in range(500):
        values = np.polyval(poly_desc, z)
        denom = np.ones_like(z)
        for k in range(degree):
            others = np.delete(z, k)
            denom[k] = np.prod(z[k] - others) if degree > 1 else 1.0
        step = values / denom
        z = z - step
        scale = 1.0 + np.abs(z).max()
        if np.abs(step).max() <= 1e-13 * scale:
            return z
    raise RootSolveError("root iteration did not converge in 500 steps")


def _solve_fiber(
    funcs: list[UniPoly], m: complex, warm: np.ndarray | None
) -> np.ndarray:
    coeffs = np.array([complex(f.evaluate(m)) for f in funcs])
    top = np.abs(coeffs).max()
    if top == 0.0:
        raise TrackingError(f"the curve contains the whole fiber over {m}")
    if abs(coeffs[-1]) < 1e-14 * top:
        raise DiscriminantCollisionError(
            f"leading coefficient vanishes near {m}: a root escapes to infinity"
        )
    return _durand_kerner(coeffs, warm)


def _select_root(roots: np.ndarray, previous: complex):
    dist = np.abs(roots - previous)
    pick = int(np.argmin(dist))
    if len(roots) > 1:
        gaps = np.abs(roots - roots[pick])
        gaps[pick] = math.inf
        if dist[pick] >= gaps.min() / 2.0:
            return None
    return pick


def _polish(funcs: list[UniPoly], m: complex, b: complex) -> complex:
    coeffs = [complex(f.evaluate(m)) for f in funcs]
    p = np.array(coeffs[::-1])
    dp = np.polyder(p)
    for _ in range(3):
        dv = np.polyval(dp, b)
        if dv == 0:
            break
        b = b - np.polyval(p, b) / dv
    return b


def fiber_roots(poly: LaurentPoly2, m: complex) -> list[complex]:
    """Second-coordinate values over a first coordinate, sorted by (re, im)."""
    funcs = _coeff_functions(poly)
    if len(funcs) < 2:
        raise TrackingError("the curve polynomial must involve the second variable")
    roots = _solve_fiber(funcs, complex(m), None)
    polished = [_polish(funcs, complex(m), complex(r)) for r in roots]
    return sorted(polished, key=lambda z: (round(z.real, 12), round(z.imag, 12)))


def track_curve(
    poly: LaurentPoly2,
    start: tuple[complex, complex],
    m_path,
    step: float = 0.01,
    residual_tol: float = 1e-9,
    max_halvings: int = 40,
) -> CurvePath:
    """Continue the branch of {poly = 0} through ``start`` along ``m_path``.

    ``m_path`` lists first-coordinate waypoints beginning at the start
    point's first coordinate; the path is traversed in straight segments
    with at most ``step`` between consecutive first coordinates.
    """
    if step <= 0 or residual_tol <= 0:
        raise TrackingError("step and residual tolerance must be positive")
    a0, b0 = complex(start[0]), complex(start[1])
    waypoints = [complex(w) for w in m_path]
    if not waypoints:
        raise TrackingError("empty path")
    if abs(waypoints[0] - a0) > 1e-12 * (1.0 + abs(a0)):
        raise TrackingError("path must begin at the start point's first coordinate")
    first_residual = _relative_residual(poly, (a0, b0))
    if first_residual > residual_tol:
        raise TrackingError(
            f"start point residual {first_residual:.3g} exceeds {residual_tol:.3g}"
        )

    funcs = _coeff_functions(poly)
    if len(funcs) < 2:
        raise TrackingError("the curve polynomial must involve the second variable")
    samples = [(a0, b0)]
    residuals = [first_residual]
    roots = _solve_fiber(funcs, a0, None)
    pick = _select_root(roots, b0)
    if pick is None:
        raise DiscriminantCollisionError("start point lies between two close roots")
    halvings_used = 0

    def advance(m_new: complex, b_prev: complex, warm: np.ndarray, depth: int):
        nonlocal halvings_used
        try:
            roots_new = _solve_fiber(funcs, m_new, warm)
            choice = _select_root(roots_new, b_prev)
        except DiscriminantCollisionError:
            choice, roots_new = None, None
        if choice is None:
            if depth >= max_halvings:
                raise DiscriminantCollisionError(
                    f"ambiguous branch near {m_new} after {max_halvings} halvings"
                )
            halvings_used += 1
            m_prev = samples[-1][0]
            mid = (m_prev + m_new) / 2.0
            warm = advance(mid, samples[-1][1], warm, depth + 1)
            return advance(m_new, samples[-1][1], warm, depth + 1)
        b_new = _polish(funcs, m_new, complex(roots_new[choice]))
        res = _relative_residual(poly, (m_new, b_new))
        if res > residual_tol:
            raise RootSolveError(
                f"residual {res:.3g} at {m_new} exceeds {residual_tol:.3g}"
            )
        samples.append((m_new, b_new))
        residuals.append(res)
        return roots_new

    warm = roots
    for seg_start, seg_end in zip(waypoints, waypoints[1:]):
        length = abs(seg_end - seg_start)
        n_steps = max(1, math.ceil(length / step))
        for k in range(1, n_steps + 1):
            target = seg_start + (seg_end - seg_start) * (k / n_steps)
            warm = advance(target, samples[-1][1], warm, 0)

    return CurvePath(
        tuple(samples),
        poly,
        residual_tol,
        tuple(residuals),
        {"step": step, "halvings": halvings_used, "waypoints": len(waypoints)},
    )


def integrate_volume_form(path: CurvePath) -> float:
    """Trapezoidal integral of log|a| d(arg b) - log|b| d(arg a).

    Arguments are unwrapped incrementally; a wrapped jump above pi/2 in
    either coordinate means the sampling is too coarse to identify the
    continuous branch of arg, and refinement is requested instead of
    guessing.
    """
    pts = path.samples
    if len(pts) < 2:
        return 0.0
    log_a = [math.log(abs(a)) for a, _ in pts]
    log_b = [math.log(abs(b)) for _, b in pts]
    d_arg_a = []
    d_arg_b = []
    for (a0, b0), (a1, b1) in zip(pts, pts[1:]):
        da = cmath.phase(a1 / a0)
        db = cmath.phase(b1 / b0)
        if abs(da) > math.pi / 2 or abs(db) > math.pi / 2:
            raise RefinementNeededError(
                "argument jump exceeds pi/2 between consecutive samples; "
                "refine the path"
            )
        d_arg_a.append(da)
        d_arg_b.append(db)
    total = 0.0
    for k in range(len(pts) - 1):
        total += 0.5 * (log_a[k] + log_a[k + 1]) * d_arg_b[k]
        total -= 0.5 * (log_b[k] + log_b[k + 1]) * d_arg_a[k]
    return total


def volume_change(path: CurvePath) -> float:
    """The -1/2 multiple of the integrated volume form along the path."""
    return -0.5 * integrate_volume_form(path)
