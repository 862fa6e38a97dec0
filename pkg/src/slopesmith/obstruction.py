"""Algebraic obstruction pipelines for surgery-slope questions.

Two pipelines are implemented over exact rationals.  The cyclic pipeline
builds the four-term curve tying the two eigenvalue ratios together,
checks irreducibility, reads the tangent cone and branch orders at the
origin, converts pole orders into tree-action invariants, and closes with
a root-of-unity scan of the eigenvalue constant.  The diameter pipeline
builds the two-slope curve for a reduced fraction p/q and tests its
monomial symmetries against the parity constraints.

Both verdicts are deterministic: identical inputs produce byte-identical
reports.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd

from .laurent import LaurentPoly2
from .newton import unity_order
from .unipoly import UniPoly, poly_gcd, exact_sqrt, irreducible_over_q, rational_roots


class ObstructionError(ValueError):
    pass


class SingularPointError(ObstructionError):
    pass


class NonTransverseError(ObstructionError):
    """The tangent line is a coordinate line; orders need series expansion."""


class UndeterminedRatioError(ObstructionError):
    """Every probed point kills both numerator and denominator."""


# -- curve constructors -------------------------------------------------------


def eigenvalue_ratio_curve(c) -> LaurentPoly2:
    """The curve forcing (m - 1/m) = c (b - 1/b), cleared of denominators.

    Four terms: b m^2 - b - c b^2 m + c m, in variables (m, b).
    """
    c = Fraction(c)
    if c == 0:
        raise ObstructionError("the ratio constant must be nonzero")
    return LaurentPoly2(
        {(2, 1): 1, (0, 1): -1, (1, 2): -c, (1, 0): c}, ("m", "b")
    )


def prescribed_slope_curve(p: int, q: int, c) -> LaurentPoly2:
    """m^p (l^2-1)^p (l^2 m^2 - 1)^(q-p) - c l^q (m^2-1)^q in variables (m, l)."""
    c = Fraction(c)
    if c == 0:
        raise ObstructionError("the constant must be nonzero")
    if not (0 <= p <= q) or q < 1:
        raise ObstructionError(f"need 0 <= p <= q with q >= 1, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ObstructionError(f"p and q must be coprime, got ({p}, {q})")
    vars_ = ("m", "l")
    m = LaurentPoly2.variable(0, vars_)
    l = LaurentPoly2.variable(1, vars_)
    one = LaurentPoly2.constant(1, vars_)
    first = m**p * (l * l - one) ** p * (l * l * m * m - one) ** (q - p)
    second = (l**q) * (m * m - one) ** q * c
    return first - second


# -- irreducibility ------------------------------------------------------------


@dataclass(frozen=True)
class IrreducibilityReport:
    status: str  # "irreducible" | "factors" | "inconclusive"
    witness: tuple[LaurentPoly2, LaurentPoly2] | None = None
    detail: str = ""


def _coeff_polys(poly: LaurentPoly2, main_axis: int) -> dict[int, UniPoly]:
    """View as a polynomial in the main variable with UniPoly coefficients."""
    acc: dict[int, dict[int, Fraction]] = {}
    for (i, j), coeff in poly.terms.items():
        main, other = (j, i) if main_axis == 1 else (i, j)
        acc.setdefault(main, {})[other] = coeff
    out = {}
    for main, cmap in acc.items():
        coeffs = [Fraction(0)] * (max(cmap) + 1)
        for k, v in cmap.items():
            coeffs[k] = v
        out[main] = UniPoly(coeffs)
    return out


def _from_coeff_polys(cmap: dict[int, UniPoly], main_axis: int, var_names) -> LaurentPoly2:
    terms: dict[tuple[int, int], Fraction] = {}
    for main, up in cmap.items():
        for k, coeff in enumerate(up.coeffs):
            if coeff == 0:
                continue
            key = (k, main) if main_axis == 1 else (main, k)
            terms[key] = coeff
    return LaurentPoly2(terms, var_names)


def _content(cmap: dict[int, UniPoly]) -> UniPoly:
    g = UniPoly.zero()
    for up in cmap.values():
        g = poly_gcd(g, up)
    return g


def _primitive_part(poly: LaurentPoly2, main_axis: int) -> LaurentPoly2:
    """Divide out the polynomial content of the coefficient map."""
    cmap = _coeff_polys(poly, main_axis)
    content = _content(cmap)
    if content.degree() < 1:
        return poly
    return _from_coeff_polys(
        {m: up // content for m, up in cmap.items()}, main_axis, poly.var_names
    )


def _strip_rational_content(poly: LaurentPoly2) -> LaurentPoly2:
    """Scale to coprime integer coefficients with a canonical sign."""
    if poly.is_zero():
        return poly
    from math import lcm

    den = 1
    for c in poly.terms.values():
        den = lcm(den, c.denominator)
    num = 0
    for c in poly.terms.values():
        num = gcd(num, abs(c.numerator * (den // c.denominator)))
    scale = Fraction(den, num)
    lead = poly._sorted_terms()[-1][1]
    if lead < 0:
        scale = -scale
    return poly * scale


_SPECIALIZE_SEQUENCE = (
    Fraction(2), Fraction(3), Fraction(5, 2), Fraction(7, 2), Fraction(4),
    Fraction(5, 3), Fraction(7, 3), Fraction(8, 3), Fraction(9, 2), Fraction(5),
    Fraction(11, 2), Fraction(6),
)


def irreducibility_check(poly: LaurentPoly2) -> IrreducibilityReport:
    """Exact decision up to degree 2 in a variable; one-sided beyond.

    Content factors are returned as witnesses.  In quadratic view the
    discriminant-square test decides, and a square discriminant yields an
    explicit factor pair.  Otherwise, a specialization that keeps the top
    degree and is certified irreducible modulo a small prime promotes to
    irreducibility of the whole; no certificate means "inconclusive",
    never "reducible".
    """
    poly = poly.normalize()
    if poly.num_terms() <= 1:
        raise ObstructionError("constant or single-term input")

    for main_axis in (1, 0):
        cmap = _coeff_polys(poly, main_axis)
        if len(cmap) == 1:
            # Pure power of the main variable times a univariate polynomial.
            (main, up), = cmap.items()
            raise ObstructionError("input is univariate after normalization")
        content = _content(cmap)
        if content.degree() >= 1:
            quotient = {m: up // content for m, up in cmap.items()}
            other_axis = 1 - main_axis
            f1 = _from_coeff_polys({0: content}, main_axis, poly.var_names)
            f2 = _from_coeff_polys(quotient, main_axis, poly.var_names)
            return IrreducibilityReport(
                "factors", (f1, f2), detail="nonconstant coefficient content"
            )

    deg1 = max(e[0] for e in poly.terms)
    deg2 = max(e[1] for e in poly.terms)
    if min(deg1, deg2) == 1:
        return IrreducibilityReport(
            "irreducible", detail="degree 1 in a variable with trivial content"
        )

    for main_axis in (1, 0):
        deg = deg2 if main_axis == 1 else deg1
        if deg != 2:
            continue
        cmap = _coeff_polys(poly, main_axis)
        a = cmap.get(2, UniPoly.zero())
        b = cmap.get(1, UniPoly.zero())
        c = cmap.get(0, UniPoly.zero())
        disc = b * b - UniPoly.constant(4) * a * c
        root = exact_sqrt(disc)
        if root is None:
            return IrreducibilityReport(
                "irreducible",
                detail="quadratic view: discriminant is not a polynomial square",
            )
        two_a = UniPoly.constant(2) * a
        f1 = _from_coeff_polys({1: two_a, 0: b - root}, main_axis, poly.var_names)
        f2 = _from_coeff_polys({1: two_a, 0: b + root}, main_axis, poly.var_names)
        # (2a y + b - s)(2a y + b + s) = 4a * poly, so each factor may carry
        # a polynomial content dividing 2a; strip it to get primitive parts.
        f1 = _strip_rational_content(_primitive_part(f1, main_axis))
        f2 = _strip_rational_content(_primitive_part(f2, main_axis))
        prod = f1 * f2
        lead_exp = prod._sorted_terms()[-1][0]
        scale = poly.coeff(lead_exp) / prod.coeff(lead_exp)
        assert f1 * f2 * scale == poly
        return IrreducibilityReport(
            "factors", (f1, f2), detail=f"square discriminant; scale {scale}"
        )

    # Both degrees >= 3: one-sided specialization certificates.
    for axis in (0, 1):
        main_axis = 1 - axis
        full_degree = deg2 if main_axis == 1 else deg1
        for value in _SPECIALIZE_SEQUENCE:
            u = poly.specialize(axis, value)
            if u.degree() != full_degree:
                continue  # leading coefficient vanished; try another value
            if irreducible_over_q(u) is True:
                return IrreducibilityReport(
                    "irreducible",
                    detail=(
                        f"specialization at {poly.var_names[axis]} = {value} keeps "
                        "the degree and is irreducible modulo a small prime"
                    ),
                )
    return IrreducibilityReport("inconclusive", detail="no certificate found")


# -- local geometry at the origin ---------------------------------------------


def tangent_at_origin(poly: LaurentPoly2) -> LaurentPoly2:
    """Primitive integer form of the linear part at the origin."""
    poly = poly.normalize()
    if poly.coeff((0, 0)) != 0:
        raise ObstructionError("the origin is not on the curve")
    c10, c01 = poly.coeff((1, 0)), poly.coeff((0, 1))
    if c10 == 0 and c01 == 0:
        raise SingularPointError("origin singular: the linear part vanishes")
    form = LaurentPoly2({(1, 0): c10, (0, 1): c01}, poly.var_names)
    return _canonical_sign_first(_strip_rational_content(form))


def _canonical_sign_first(form: LaurentPoly2) -> LaurentPoly2:
    c10, c01 = form.coeff((1, 0)), form.coeff((0, 1))
    if c10 < 0 or (c10 == 0 and c01 < 0):
        return -form
    return form


@dataclass(frozen=True)
class BranchData:
    point: tuple[Fraction, Fraction]
    tangent: LaurentPoly2  # primitive integer form in the displacement
    ord_first: int
    ord_second: int


def branch_orders(poly: LaurentPoly2, at) -> BranchData:
    """Vanishing orders of the coordinates along the branch at a smooth point.

    A coordinate that is nonzero at the point has order 0.  A vanishing
    coordinate has order 1 exactly when its zero line is transverse to the
    tangent; tangency to a coordinate line is refused (the order would
    need a series expansion to determine).
    """
    point = (Fraction(at[0]), Fraction(at[1]))
    poly = poly.normalize()
    if poly.evaluate(point) != 0:
        raise ObstructionError(f"point {at} is not on the curve")
    d_first = poly.derivative(0).evaluate(point)
    d_second = poly.derivative(1).evaluate(point)
    if d_first == 0 and d_second == 0:
        raise SingularPointError(f"curve is singular at {at}")
    tangent = _canonical_sign_first(
        _strip_rational_content(
            LaurentPoly2({(1, 0): d_first, (0, 1): d_second}, poly.var_names)
        )
    )
    # Branch direction spans the kernel of the gradient.
    direction = (-d_second, d_first)
    orders = []
    for axis in (0, 1):
        if point[axis] != 0:
            orders.append(0)
        elif direction[axis] == 0:
            raise NonTransverseError(
                f"tangent is the coordinate line {poly.var_names[axis]} = 0; "
                "the vanishing order exceeds 1"
            )
        else:
            orders.append(1)
    return BranchData(point, tangent, orders[0], orders[1])


@dataclass(frozen=True)
class TreeInvariants:
    translation_length: int
    boundary_components: int


def tree_invariants(pole_order: int) -> TreeInvariants:
    """Both invariants double the pole order."""
    if pole_order < 1:
        raise ObstructionError("pole order must be a positive integer")
    return TreeInvariants(2 * pole_order, 2 * pole_order)


# -- symmetries ----------------------------------------------------------------

_SYMMETRY_ACTIONS = ("negate-first", "negate-second", "negate-both")


def detect_symmetries(poly: LaurentPoly2) -> frozenset[str]:
    """Sign substitutions fixing the polynomial up to a rational scalar."""
    if poly.is_zero():
        raise ObstructionError("zero polynomial")
    found = []
    anchor = poly._sorted_terms()[0][0]
    for action in _SYMMETRY_ACTIONS:
        image = poly.substitute(action)
        scale = image.coeff(anchor) / poly.coeff(anchor)
        if scale != 0 and image == poly * scale:
            found.append(action)
    return frozenset(found)


# -- constancy of trace-function ratios -----------------------------------------


@dataclass(frozen=True)
class RatioReport:
    status: str  # "constant" | "non-constant"
    value: Fraction | None
    method: str  # "sampled+divisibility" | "symbolic"
    witnesses: tuple[str, ...] = ()


def _trace_square(poly_vars, axis: int) -> LaurentPoly2:
    """(x - 1/x)^2 for one variable as a Laurent polynomial."""
    x = LaurentPoly2.variable(axis, poly_vars)
    inv = x**-1
    return (x - inv) * (x - inv)


def _trace_square_product(poly_vars) -> LaurentPoly2:
    xy = LaurentPoly2.variable(0, poly_vars) * LaurentPoly2.variable(1, poly_vars)
    inv = xy**-1
    return (xy - inv) * (xy - inv)


def _joint_clear(u: LaurentPoly2, v: LaurentPoly2) -> tuple[LaurentPoly2, LaurentPoly2]:
    """Multiply both by one monomial so each becomes an ordinary polynomial."""
    shift0 = min(min(i for i, _ in u.terms), min(i for i, _ in v.terms), 0)
    shift1 = min(min(j for _, j in u.terms), min(j for _, j in v.terms), 0)
    mono = LaurentPoly2({(-shift0, -shift1): 1}, u.var_names)
    return u * mono, v * mono


def _pseudo_remainder(
    num: dict[int, UniPoly], den: dict[int, UniPoly]
) -> tuple[dict[int, UniPoly], int]:
    """Always-multiply pseudo-division by ``den`` in the main variable.

    Returns (remainder, s) with lc(den)^s * num = q*den + remainder.
    """
    lc_deg = max(den)
    lc = den[lc_deg]
    rem = {k: v for k, v in num.items() if not v.is_zero()}
    steps = 0
    while rem and max(rem) >= lc_deg:
        top = max(rem)
        head = rem[top]
        new: dict[int, UniPoly] = {}
        for k, v in rem.items():
            new[k] = v * lc
        for k, v in den.items():
            shifted = top - lc_deg + k
            new[shifted] = new.get(shifted, UniPoly.zero()) - head * v
        rem = {k: v for k, v in new.items() if not v.is_zero()}
        steps += 1
    return rem, steps


def _scale_coeff_map(cmap: dict[int, UniPoly], factor: UniPoly, power: int):
    for _ in range(power):
        cmap = {k: v * factor for k, v in cmap.items()}
    return cmap


def ratio_constant_check(
    curve: LaurentPoly2, which: str, p: int | None = None, q: int | None = None
) -> RatioReport:
    """Is the designated trace-function ratio constant on the curve?

    ``which`` = "cyclic" compares the squared trace deviations of the two
    variables; "diameter" compares the (p, q)-weighted product against
    the q-th power of the first variable's deviation.  The verdict is
    exact either way: a candidate constant found at a rational curve
    point (or by aligning pseudo-remainders) is verified by divisibility,
    valid because the curve polynomial is irreducible and coprime to the
    leading coefficient used in the division.
    """
    vars_ = curve.var_names
    if which == "cyclic":
        num = _trace_square(vars_, 0)
        den = _trace_square(vars_, 1)
    elif which == "diameter":
        if p is None or q is None or not (0 <= p <= q) or q < 1:
            raise ObstructionError("diameter mode needs 0 <= p <= q")
        num = _trace_square(vars_, 1) ** p * _trace_square_product(vars_) ** (q - p)
        den = _trace_square(vars_, 0) ** q
    else:
        raise ObstructionError(f"unknown mode {which!r}")

    num, den = _joint_clear(num, den)
    curve = curve.normalize()

    candidate, sample_points = _sample_ratio(curve, num, den)
    if candidate is not None and len(set(r for _, r in sample_points)) > 1:
        (pt1, r1), (pt2, r2) = _two_distinct(sample_points)
        return RatioReport(
            "non-constant",
            None,
            "sampled+divisibility",
            (f"ratio {r1} at {pt1}", f"ratio {r2} at {pt2}"),
        )

    # Pseudo-division route: divide in the variable where the curve has
    # positive degree; remainders of lower degree vanish mod the curve
    # only when identically zero.
    main_axis = 1 if max(j for _, j in curve.terms) > 0 else 0
    a_map = _coeff_polys(curve, main_axis)
    u_map = _coeff_polys(num, main_axis)
    v_map = _coeff_polys(den, main_axis)
    r_u, s_u = _pseudo_remainder(u_map, a_map)
    r_v, s_v = _pseudo_remainder(v_map, a_map)
    lc = a_map[max(a_map)]
    s = max(s_u, s_v)
    r_u = _scale_coeff_map(r_u, lc, s - s_u)
    r_v = _scale_coeff_map(r_v, lc, s - s_v)

    if not r_v:
        if not r_u:
            raise UndeterminedRatioError(
                "both trace functions vanish identically on the curve"
            )
        return RatioReport(
            "non-constant", None, "symbolic",
            ("denominator vanishes on the curve, numerator does not",),
        )

    if candidate is None:
        top = max(r_v)
        pos = r_v[top].degree()
        candidate = r_u.get(top, UniPoly.zero())[pos] / r_v[top][pos]

    consistent = _maps_proportional(r_u, r_v, candidate)
    if consistent:
        return RatioReport(
            "constant",
            candidate,
            "sampled+divisibility" if sample_points else "symbolic",
            tuple(f"ratio {r} at {pt}" for pt, r in sample_points[:2]),
        )
    witnesses = _numeric_witnesses(curve, num, den)
    return RatioReport("non-constant", None, "symbolic", witnesses)


def _maps_proportional(r_u, r_v, factor: Fraction) -> bool:
    keys = set(r_u) | set(r_v)
    for k in keys:
        lhs = r_u.get(k, UniPoly.zero())
        rhs = r_v.get(k, UniPoly.zero()) * factor
        if lhs != rhs:
            return False
    return True


def _two_distinct(samples):
    by_ratio: dict[Fraction, tuple] = {}
    for pt, r in samples:
        by_ratio.setdefault(r, (pt, r))
        if len(by_ratio) == 2:
            break
    return tuple(by_ratio.values())


def _sample_ratio(curve, num, den, attempts: int = 50):
    """Hunt rational curve points and evaluate the cleared ratio there."""
    candidate = None
    found = []
    tried = 0
    for value in _rational_probe_sequence():
        if tried >= attempts:
            break
        tried += 1
        u = curve.specialize(0, value)
        if u.is_zero() or u.degree() < 1:
            continue
        try:
            roots = rational_roots(u)
        except ValueError:
            continue
        for root in roots:
            if root == 0:
                continue
            pt = (value, root)
            n_val = num.evaluate(pt)
            d_val = den.evaluate(pt)
            if d_val == 0:
                continue
            ratio = n_val / d_val
            found.append((pt, ratio))
            if candidate is None:
                candidate = ratio
        if len(found) >= 4:
            break
    return candidate, found


def _rational_probe_sequence():
    yield from (
        Fraction(2), Fraction(3), Fraction(5, 2), Fraction(7, 2), Fraction(4),
        Fraction(1, 2), Fraction(3, 2), Fraction(5), Fraction(7, 3), Fraction(8, 3),
        Fraction(5, 4), Fraction(7, 4), Fraction(9, 4), Fraction(6), Fraction(7),
        Fraction(-2), Fraction(-3), Fraction(-5, 2), Fraction(9, 2), Fraction(11, 2),
        Fraction(10, 3), Fraction(11, 3), Fraction(8), Fraction(9), Fraction(10),
        Fraction(11, 4), Fraction(13, 4), Fraction(15, 4), Fraction(11), Fraction(12),
        Fraction(13, 2), Fraction(15, 2), Fraction(13, 3), Fraction(14, 3), Fraction(13),
        Fraction(14), Fraction(15), Fraction(16), Fraction(17, 2), Fraction(19, 2),
        Fraction(16, 3), Fraction(17, 3), Fraction(17), Fraction(18), Fraction(19),
        Fraction(21, 2), Fraction(23, 2), Fraction(19, 3), Fraction(20, 3), Fraction(20),
    )


def _numeric_witnesses(curve, num, den) -> tuple[str, ...]:
    """Two floating curve points with visibly different ratios."""
    import numpy as np

    main_axis = 1
    out = []
    for x0 in (2.0, 1.5 + 0.5j):
        cmap = _coeff_polys(curve, main_axis)
        top = max(cmap)
        coeffs = [complex(cmap.get(k, UniPoly.zero()).evaluate(x0)) for k in range(top + 1)]
        roots = np.roots(list(reversed(coeffs)))
        for r in roots:
            if abs(r) < 1e-12:
                continue
            pt = (complex(x0), complex(r))
            d_val = den.evaluate(pt)
            if abs(d_val) < 1e-10:
                continue
            ratio = num.evaluate(pt) / d_val
            out.append(f"ratio {ratio:.6g} near point ({pt[0]:.6g}, {pt[1]:.6g})")
            break
        if len(out) == 2:
            break
    return tuple(out)


# -- verdict pipelines -----------------------------------------------------------


@dataclass(frozen=True)
class EvidenceStep:
    step: str
    rule: str
    value: str


@dataclass(frozen=True)
class ObstructionReport:
    pipeline: str
    inputs: dict
    evidence: tuple[EvidenceStep, ...]
    verdict: str  # "contradiction-established" | "consistent" | "inconclusive"

    def to_dict(self) -> dict:
        return {
            "pipeline": self.pipeline,
            "inputs": dict(self.inputs),
            "evidence": [
                {"step": e.step, "rule": e.rule, "value": e.value} for e in self.evidence
            ],
            "verdict": self.verdict,
        }


def cyclic_verdict(c, bound: int = 120) -> ObstructionReport:
    """Run the eigenvalue-ratio pipeline for a rational constant."""
    c = Fraction(c)
    inputs = {"c": str(c), "bound": str(bound)}
    evidence: list[EvidenceStep] = []

    curve = eigenvalue_ratio_curve(c)
    evidence.append(EvidenceStep("construct-curve", "eigenvalue-ratio-curve", str(curve)))

    irr = irreducibility_check(curve)
    evidence.append(EvidenceStep("irreducibility", "factor-scan", irr.status))
    if irr.status == "factors":
        f1, f2 = irr.witness
        evidence.append(
            EvidenceStep("factor-witness", "factor-scan", f"({f1}) * ({f2})")
        )
        evidence.append(
            EvidenceStep(
                "conclusion", "reducible-case",
                "curve splits into lines; the pipeline draws no contradiction",
            )
        )
        return ObstructionReport("cyclic", inputs, tuple(evidence), "consistent")
    if irr.status == "inconclusive":
        evidence.append(
            EvidenceStep("conclusion", "factor-scan", "irreducibility undecided")
        )
        return ObstructionReport("cyclic", inputs, tuple(evidence), "inconclusive")

    tangent = tangent_at_origin(curve)
    evidence.append(EvidenceStep("tangent-cone", "tangent-cone", str(tangent)))

    branch = branch_orders(curve, (0, 0))
    evidence.append(
        EvidenceStep(
            "branch-orders", "simple-pole-transversality",
            f"ord_first={branch.ord_first}, ord_second={branch.ord_second}",
        )
    )

    tree = tree_invariants(branch.ord_first)
    evidence.append(
        EvidenceStep(
            "tree-invariants", "pole-order-doubling",
            f"translation_length={tree.translation_length}, "
            f"boundary_components={tree.boundary_components}",
        )
    )

    # Both the constant and its inverse are viable eigenvalue readings of
    # the contracted class; a root-of-unity order ignores the inversion.
    candidates = sorted({c, 1 / c}, key=lambda f: (f.denominator, f.numerator))
    evidence.append(
        EvidenceStep(
            "eigenvalue-candidates", "basis-inversion-ambiguity",
            "{" + ", ".join(str(v) for v in candidates) + "}",
        )
    )

    orders = unity_order(UniPoly([-c, 1]), bound)
    evidence.append(
        EvidenceStep(
            "root-of-unity-scan", "unity-order-scan",
            f"orders {orders}" if orders else f"none detected (bound={bound})",
        )
    )

    required = tree.boundary_components + 1
    if not orders:
        evidence.append(
            EvidenceStep(
                "conclusion", "boundary-count-vs-order",
                f"a surface with {tree.boundary_components} boundary components "
                f"forces an eigenvalue of finite order, at least {required} once "
                "the trivial orders are excluded; the constant is not a root of "
                "unity",
            )
        )
        return ObstructionReport(
            "cyclic", inputs, tuple(evidence), "contradiction-established"
        )
    evidence.append(
        EvidenceStep(
            "conclusion", "boundary-count-vs-order",
            f"eigenvalue has finite order {orders}; no contradiction",
        )
    )
    return ObstructionReport("cyclic", inputs, tuple(evidence), "consistent")


def diameter_verdict(p: int, q: int) -> ObstructionReport:
    """Parity and symmetry screening of a reduced slope pair (-p/q, 2-p/q)."""
    if not (0 <= p <= q) or q < 1:
        raise ObstructionError(f"need 0 <= p <= q with q >= 1, got ({p}, {q})")
    if gcd(p, q) != 1:
        raise ObstructionError(f"p and q must be coprime, got ({p}, {q})")
    inputs = {"p": str(p), "q": str(q)}
    evidence: list[EvidenceStep] = []

    evidence.append(
        EvidenceStep(
            "parity", "slope-parity",
            f"p {'even' if p % 2 == 0 else 'odd'}, q {'even' if q % 2 == 0 else 'odd'}",
        )
    )

    curve = prescribed_slope_curve(p, q, 1)
    symmetries = sorted(detect_symmetries(curve))
    evidence.append(
        EvidenceStep("symmetry-scan", "sign-substitution-scan", ", ".join(symmetries) or "none")
    )

    if q == 1:
        evidence.append(
            EvidenceStep(
                "conclusion", "integral-class-exclusion",
                "q = 1 makes the slope pair integral; excluded",
            )
        )
        return ObstructionReport(
            "diameter", inputs, tuple(evidence), "contradiction-established"
        )
    if q % 2 == 0:
        verified = "negate-second" in symmetries
        evidence.append(
            EvidenceStep(
                "conclusion", "forbidden-symmetry",
                "q even forces the second-variable sign symmetry "
                f"(verified on the curve: {verified}); that symmetry is forbidden",
            )
        )
        verdict = "contradiction-established" if verified else "inconclusive"
        return ObstructionReport("diameter", inputs, tuple(evidence), verdict)
    if p % 2 == 1:
        verified = "negate-both" in symmetries
        evidence.append(
            EvidenceStep(
                "conclusion", "forbidden-symmetry",
                "p and q both odd force the double sign symmetry "
                f"(verified on the curve: {verified}); that symmetry is forbidden",
            )
        )
        verdict = "contradiction-established" if verified else "inconclusive"
        return ObstructionReport("diameter", inputs, tuple(evidence), verdict)

    evidence.append(
        EvidenceStep(
            "conclusion", "allowed-symmetry",
            "p even with q odd, q > 1: only the first-variable sign symmetry "
            f"remains ({'present' if 'negate-first' in symmetries else 'absent'}); "
            "consistent",
        )
    )
    return ObstructionReport("diameter", inputs, tuple(evidence), "consistent")
