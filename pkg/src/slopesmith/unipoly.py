"""Dense univariate polynomials over the rationals.

Support code for edge polynomials, specializations and the root-of-unity
and irreducibility certificates.  Coefficients are ``Fraction``s stored
low degree first with trailing zeros trimmed.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import gcd as int_gcd
from typing import Iterable, Sequence, Union

CoeffLike = Union[int, str, Fraction]


class UniPoly:
    """Polynomial in one variable with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[CoeffLike] = ()):
        cs = [c if isinstance(c, Fraction) else Fraction(c) for c in coeffs]
        # Trim trailing zeros.
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def zero(cls) -> "UniPoly":
        return cls(())

    @classmethod
    def constant(cls, c: CoeffLike) -> "UniPoly":
        return cls((c,))

    @classmethod
    def x_pow(cls, n: int) -> "UniPoly":
        return cls([0] * n + [1])

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def leading(self) -> Fraction:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly([self[k] - other[k] for k in range(n)])

    def __neg__(self) -> "UniPoly":
        return UniPoly([-c for c in self.coeffs])

    def __mul__(self, other: "UniPoly | int | Fraction") -> "UniPoly":
        if isinstance(other, (int, Fraction)):
            return UniPoly([c * other for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return UniPoly(())
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly((1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        d = other.degree()
        lead = other.leading()
        if len(rem) <= d:
            return UniPoly(()), UniPoly(rem)
        quot = [Fraction(0)] * (len(rem) - d)
        for k in range(len(rem) - 1, d - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            quot[k - d] = q
            for idx in range(d + 1):
                rem[k - d + idx] -= q * other.coeffs[idx]
        return UniPoly(quot), UniPoly(rem)

    def __floordiv__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return divmod(self, other)[1]

    def divides(self, other: "UniPoly") -> bool:
        if self.is_zero():
            return other.is_zero()
        return (other % self).is_zero()

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lead = self.leading()
        return UniPoly([c / lead for c in self.coeffs])

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    def evaluate(self, x):
        total = Fraction(0) if isinstance(x, (int, Fraction)) else 0.0
        for c in reversed(self.coeffs):
            total = total * x + (c if isinstance(x, (int, Fraction)) else complex(c))
        return total

    def shift_down(self) -> tuple["UniPoly", int]:
        """Divide out the largest power of x; return (quotient, power)."""
        if self.is_zero():
            return self, 0
        k = 0
        while self.coeffs[k] == 0:
            k += 1
        return UniPoly(self.coeffs[k:]), k

    def integer_primitive(self) -> tuple["UniPoly", Fraction]:
        """Write self = content * primitive with integer coprime coefficients."""
        if self.is_zero():
            return self, Fraction(0)
        from math import lcm

        den = 1
        for c in self.coeffs:
            den = lcm(den, c.denominator)
        ints = [int(c * den) for c in self.coeffs]
        g = 0
        for v in ints:
            g = int_gcd(g, abs(v))
        if ints[-1] < 0:
            g = -g
        return UniPoly([v // g for v in ints]), Fraction(g, den)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            elif k == 1:
                body = "x" if mag == 1 else f"{mag}*x"
            else:
                body = f"x^{k}" if mag == 1 else f"{mag}*x^{k}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"UniPoly('{self}')"


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    """Monic gcd by the Euclidean algorithm."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def x_pow_minus_one(n: int) -> UniPoly:
    return UniPoly([-1] + [0] * (n - 1) + [1])


def exact_sqrt(p: UniPoly) -> UniPoly | None:
    """Return q with q*q == p, or None if p is not a square.

    Works by extracting coefficients of q from the top down; the leading
    coefficient of p must be a square of a rational.
    """
    if p.is_zero():
        return UniPoly(())
    if p.degree() % 2 != 0:
        return None
    lead = p.leading()
    if lead < 0:
        return None
    num_r = _isqrt_exact(lead.numerator)
    den_r = _isqrt_exact(lead.denominator)
    if num_r is None or den_r is None:
        return None
    h = p.degree() // 2
    q = [Fraction(0)] * (h + 1)
    q[h] = Fraction(num_r, den_r)
    # p[h+k] = sum_{i+j = h+k} q[i] q[j]; peel q[k] for k = h-1 .. 0.
    for k in range(h - 1, -1, -1):
        s = Fraction(0)
        for i in range(k + 1, h + 1):
            j = h + k - i
            if 0 <= j <= h:
                s += q[i] * q[j]
        q[k] = (p[h + k] - s) / (2 * q[h])
    cand = UniPoly(q)
    return cand if cand * cand == p else None


def _isqrt_exact(n: int) -> int | None:
    if n < 0:
        return None
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def rational_roots(p: UniPoly) -> list[Fraction]:
    """All nonzero rational roots (without multiplicity).

    Roots at x = 0 are dropped: callers work modulo monomial units, where
    a power of x is invertible.  Uses the rational root test on the
    integer-primitive part.
    """
    if p.is_zero():
        raise ValueError("zero polynomial has every root")
    q, _ = p.shift_down()
    prim, _ = q.integer_primitive()
    roots: list[Fraction] = []
    if p[0] == 0 and q is not p:
        pass  # x = 0 roots were shifted out; the torus never sees them
    a0 = int(prim.coeffs[0])
    an = int(prim.leading())
    if a0 == 0:
        return []
    for r in _divisors(abs(a0)):
        for s in _divisors(abs(an)):
            for sign in (1, -1):
                cand = Fraction(sign * r, s)
                if cand not in roots and prim.evaluate(cand) == 0:
                    roots.append(cand)
    return sorted(roots)


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


# -- modular irreducibility certificate ---------------------------------------


def _mod_p(p: UniPoly, q: int) -> list[int] | None:
    """Reduce an integer-primitive polynomial mod q; None if a denominator
    or the leading coefficient vanishes."""
    out = []
    for c in p.coeffs:
        if c.denominator % q == 0:
            return None
        inv = pow(c.denominator % q, -1, q)
        out.append((c.numerator % q) * inv % q)
    while out and out[-1] == 0:
        out.pop()
    if len(out) != len(p.coeffs):
        return None  # degree dropped mod q
    return out


def _polymulmod(a: list[int], b: list[int], mod: list[int], q: int) -> list[int]:
    res = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            res[i + j] = (res[i + j] + x * y) % q
    return _polyrem(res, mod, q)


def _polyrem(a: list[int], mod: list[int], q: int) -> list[int]:
    a = list(a)
    d = len(mod) - 1
    inv_lead = pow(mod[-1], -1, q)
    for k in range(len(a) - 1, d - 1, -1):
        c = a[k] % q
        if c == 0:
            continue
        f = c * inv_lead % q
        for idx in range(d + 1):
            a[k - d + idx] = (a[k - d + idx] - f * mod[idx]) % q
    while len(a) > d:
        a.pop()
    while a and a[-1] == 0:
        a.pop()
    return a


def _polygcd_mod(a: list[int], b: list[int], q: int) -> list[int]:
    while b:
        a, b = b, _polyrem(a, b, q)
    if a:
        inv = pow(a[-1], -1, q)
        a = [c * inv % q for c in a]
    return a


def _xpow_mod(e: int, mod: list[int], q: int) -> list[int]:
    result = [1]
    base = _polyrem([0, 1], mod, q)
    while e:
        if e & 1:
            result = _polymulmod(result, base, mod, q)
        base = _polymulmod(base, base, mod, q)
        e >>= 1
    return result


def is_irreducible_mod_p(p: UniPoly, q: int) -> bool | None:
    """Rabin's test for irreducibility over GF(q).

    Returns None when the reduction is degenerate (denominator divisible
    by q or leading coefficient vanishing), True/False otherwise.
    """
    coeffs = _mod_p(p, q)
    if coeffs is None:
        return None
    n = len(coeffs) - 1
    if n <= 0:
        return None
    if n == 1:
        return True
    # x^(q^n) == x mod (p, q), and gcd(x^(q^(n/r)) - x, p) == 1 for prime r | n.
    xq_n = _xpow_mod(q**n, coeffs, q)
    x_poly = _polyrem([0, 1], coeffs, q)
    diff = [(a - b) % q for a, b in _zip_pad(xq_n, x_poly)]
    while diff and diff[-1] == 0:
        diff.pop()
    if diff:
        return False
    for r in _prime_factors(n):
        e = n // r
        xq_e = _xpow_mod(q**e, coeffs, q)
        diff = [(a - b) % q for a, b in _zip_pad(xq_e, x_poly)]
        while diff and diff[-1] == 0:
            diff.pop()
        g = _polygcd_mod(coeffs, diff, q) if diff else list(coeffs)
        if len(g) != 1:
            return False
    return True


def _zip_pad(a: list[int], b: list[int]):
    n = max(len(a), len(b))
    for k in range(n):
        yield (a[k] if k < len(a) else 0, b[k] if k < len(b) else 0)


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


_CERT_PRIMES = (3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67)


def irreducible_over_q(p: UniPoly) -> bool | None:
    """One-sided irreducibility certificate over the rationals.

    True means certified irreducible (irreducible mod some good prime at
    full degree).  None means no certificate was found; it does not mean
    reducible.  Degree <= 1 after clearing x powers is always True.
    """
    core, _ = p.shift_down()
    prim, _ = core.integer_primitive()
    if prim.degree() <= 0:
        return None
    if prim.degree() == 1:
        return True
    for q in _CERT_PRIMES:
        res = is_irreducible_mod_p(prim, q)
        if res is True:
            return True
    return None
