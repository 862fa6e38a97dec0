"""Exact bivariate Laurent polynomials over the rationals.

A polynomial is stored sparsely as a map from integer exponent pairs
``(i, j)`` to nonzero ``Fraction`` coefficients, together with a pair of
variable names.  All arithmetic is exact.  The printer emits a canonical
form (terms ordered by total degree, ties broken by the second exponent)
which the parser accepts back unchanged.

Accepted input grammar (whitespace insignificant)::

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*'? factor)*
    factor   := atom ['^' ['-'] integer]
    atom     := rational | variable | '(' expr ')'
    rational := integer ['/' positive_integer]

Variables are single identifiers and must match the declared variable
names; juxtaposition multiplies (``3 m^2 b``), but ``mb`` is one unknown
identifier, not a product.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Union

Exponents = tuple[int, int]
CoeffLike = Union[int, str, Fraction]

# Exponents past this bound are treated as input errors: they are almost
# certainly typos and would make dense expansion or printing blow up.
MAX_EXPONENT = 10**6


class LaurentError(ValueError):
    """Base class for errors raised by this module."""


class PolyParseError(LaurentError):
    """Malformed polynomial text.  ``position`` is a 0-based text offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ExponentOverflowError(LaurentError):
    pass


class EvaluationError(LaurentError):
    pass


def _as_fraction(value: CoeffLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact rational coefficient")


class LaurentPoly2:
    """A Laurent polynomial in two variables with rational coefficients."""

    __slots__ = ("terms", "var_names")

    def __init__(
        self,
        terms: Mapping[Exponents, CoeffLike] | None = None,
        var_names: tuple[str, str] = ("m", "b"),
    ):
        if len(var_names) != 2 or var_names[0] == var_names[1]:
            raise LaurentError(f"need two distinct variable names, got {var_names!r}")
        clean: dict[Exponents, Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if abs(i) > MAX_EXPONENT or abs(j) > MAX_EXPONENT:
                raise ExponentOverflowError(f"exponent pair ({i}, {j}) out of range")
            c = _as_fraction(c)
            if c != 0:
                clean[(int(i), int(j))] = c
        self.terms = clean
        self.var_names = (str(var_names[0]), str(var_names[1]))

    # -- constructors ----------------------------------------------------

    @classmethod
    def zero(cls, var_names: tuple[str, str] = ("m", "b")) -> "LaurentPoly2":
        return cls({}, var_names)

    @classmethod
    def constant(cls, c: CoeffLike, var_names: tuple[str, str] = ("m", "b")) -> "LaurentPoly2":
        return cls({(0, 0): c}, var_names)

    @classmethod
    def monomial(
        cls,
        c: CoeffLike,
        exps: Exponents,
        var_names: tuple[str, str] = ("m", "b"),
    ) -> "LaurentPoly2":
        return cls({tuple(exps): c}, var_names)

    @classmethod
    def variable(cls, index: int, var_names: tuple[str, str] = ("m", "b")) -> "LaurentPoly2":
        return cls({(1, 0) if index == 0 else (0, 1): 1}, var_names)

    # -- basic queries ----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def support(self) -> set[Exponents]:
        return set(self.terms)

    def coeff(self, exps: Exponents) -> Fraction:
        return self.terms.get(tuple(exps), Fraction(0))

    def exponent_range(self, axis: int) -> tuple[int, int]:
        """(min, max) exponent of the given variable over the support."""
        if not self.terms:
            raise LaurentError("zero polynomial has no exponent range")
        vals = [e[axis] for e in self.terms]
        return min(vals), max(vals)

    def degree(self, axis: int) -> int:
        return self.exponent_range(axis)[1]

    def num_terms(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentPoly2):
            return NotImplemented
        return self.var_names == other.var_names and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.var_names, frozenset(self.terms.items())))

    # -- ring operations --------------------------------------------------

    def _check_compatible(self, other: "LaurentPoly2") -> None:
        if self.var_names != other.var_names:
            raise LaurentError(
                f"variable mismatch: {self.var_names} vs {other.var_names}"
            )

    def __add__(self, other: "LaurentPoly2 | int | Fraction") -> "LaurentPoly2":
        other = self._coerce(other)
        self._check_compatible(other)
        res = dict(self.terms)
        for e, c in other.terms.items():
            s = res.get(e, Fraction(0)) + c
            if s == 0:
                res.pop(e, None)
            else:
                res[e] = s
        return LaurentPoly2(res, self.var_names)

    def __sub__(self, other: "LaurentPoly2 | int | Fraction") -> "LaurentPoly2":
        return self + (-self._coerce(other))

    def __neg__(self) -> "LaurentPoly2":
        return LaurentPoly2({e: -c for e, c in self.terms.items()}, self.var_names)

    def __mul__(self, other: "LaurentPoly2 | int | Fraction") -> "LaurentPoly2":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentPoly2.zero(self.var_names)
            return LaurentPoly2(
                {e: c * other for e, c in self.terms.items()}, self.var_names
            )
        self._check_compatible(other)
        res: dict[Exponents, Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                e = (i1 + i2, j1 + j2)
                s = res.get(e, Fraction(0)) + c1 * c2
                if s == 0:
                    res.pop(e, None)
                else:
                    res[e] = s
        return LaurentPoly2(res, self.var_names)

    __radd__ = __add__
    __rmul__ = __mul__

    def __rsub__(self, other: "LaurentPoly2 | int | Fraction") -> "LaurentPoly2":
        return (-self) + self._coerce(other)

    def __pow__(self, n: int) -> "LaurentPoly2":
        if not isinstance(n, int):
            raise TypeError("polynomial powers must be integers")
        if n < 0:
            # Only monomials are units of the Laurent ring.
            if not self.is_monomial():
                raise LaurentError("negative power of a non-monomial Laurent polynomial")
            ((i, j), c), = self.terms.items()
            return LaurentPoly2({(i * n, j * n): c**n}, self.var_names)
        result = LaurentPoly2.constant(1, self.var_names)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def _coerce(self, other: "LaurentPoly2 | int | Fraction") -> "LaurentPoly2":
        if isinstance(other, LaurentPoly2):
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPoly2.constant(other, self.var_names)
        raise TypeError(f"cannot combine LaurentPoly2 with {type(other).__name__}")

    # -- normalization ----------------------------------------------------

    def normalize(self) -> "LaurentPoly2":
        """Shift by a monomial so the minimum exponent of each variable is 0."""
        if not self.terms:
            return self
        imin = min(i for i, _ in self.terms)
        jmin = min(j for _, j in self.terms)
        if imin == 0 and jmin == 0:
            return self
        return LaurentPoly2(
            {(i - imin, j - jmin): c for (i, j), c in self.terms.items()},
            self.var_names,
        )

    def is_normalized(self) -> bool:
        if not self.terms:
            return True
        return (
            min(i for i, _ in self.terms) == 0 and min(j for _, j in self.terms) == 0
        )

    # -- monomial substitutions -------------------------------------------

    def substitute(self, action: str, scale: CoeffLike | None = None) -> "LaurentPoly2":
        """Apply one of the monomial substitutions.

        Supported actions: ``negate-first`` (x -> -x), ``negate-second``,
        ``negate-both``, ``invert-first`` (x -> 1/x), ``invert-second``,
        ``invert-both`` and ``scale-first`` (x -> c*x, c a nonzero rational
        passed via ``scale``).  "first"/"second" refer to the variable order
        of ``var_names``.
        """
        t = self.terms
        if action == "negate-first":
            new = {(i, j): c if i % 2 == 0 else -c for (i, j), c in t.items()}
        elif action == "negate-second":
            new = {(i, j): c if j % 2 == 0 else -c for (i, j), c in t.items()}
        elif action == "negate-both":
            new = {(i, j): c if (i + j) % 2 == 0 else -c for (i, j), c in t.items()}
        elif action == "invert-first":
            new = {(-i, j): c for (i, j), c in t.items()}
        elif action == "invert-second":
            new = {(i, -j): c for (i, j), c in t.items()}
        elif action == "invert-both":
            new = {(-i, -j): c for (i, j), c in t.items()}
        elif action == "scale-first":
            if scale is None:
                raise LaurentError("scale-first needs a rational scale factor")
            s = _as_fraction(scale)
            if s == 0:
                raise LaurentError("scale factor must be nonzero")
            new = {(i, j): c * s**i for (i, j), c in t.items()}
        else:
            raise LaurentError(f"unknown substitution action {action!r}")
        return LaurentPoly2(new, self.var_names)

    def derivative(self, axis: int) -> "LaurentPoly2":
        """Partial derivative with respect to one variable (0 or 1)."""
        if axis not in (0, 1):
            raise LaurentError("axis must be 0 or 1")
        new: dict[Exponents, Fraction] = {}
        for (i, j), c in self.terms.items():
            e = (i, j)[axis]
            if e == 0:
                continue
            key = (i - 1, j) if axis == 0 else (i, j - 1)
            new[key] = c * e
        return LaurentPoly2(new, self.var_names)

    # -- evaluation and specialization --------------------------------------

    def evaluate(self, point):
        """Evaluate at ``point`` = (x, y).

        Exact for Fraction/int inputs, floating for complex/float inputs.
        A zero coordinate is only allowed when the polynomial has no
        negative powers of that variable.
        """
        x, y = point
        exact = isinstance(x, (int, Fraction)) and isinstance(y, (int, Fraction))
        total = Fraction(0) if exact else 0j
        for (i, j), c in self.terms.items():
            if x == 0 and i < 0:
                raise EvaluationError(
                    f"negative power of {self.var_names[0]} at a zero coordinate"
                )
            if y == 0 and j < 0:
                raise EvaluationError(
                    f"negative power of {self.var_names[1]} at a zero coordinate"
                )
            xv = x**i if x != 0 or i == 0 else x * 0
            if x == 0 and i > 0:
                continue
            yv = y**j if y != 0 or j == 0 else y * 0
            if y == 0 and j > 0:
                continue
            total = total + (c if exact else complex(c)) * xv * yv
        return total

    def specialize(self, axis: int, value: CoeffLike):
        """Substitute an exact rational for one variable.

        Returns a :class:`slopesmith.unipoly.UniPoly` in the remaining
        variable.  If the remaining variable occurs with negative powers the
        result is shifted by the smallest power, so the lowest retained
        power becomes the constant term; zero sets in the torus do not see
        the shift.
        """
        from .unipoly import UniPoly

        value = _as_fraction(value)
        if axis not in (0, 1):
            raise LaurentError("axis must be 0 or 1")
        acc: dict[int, Fraction] = {}
        for (i, j), c in self.terms.items():
            fixed, kept = (i, j) if axis == 0 else (j, i)
            if value == 0 and fixed < 0:
                raise EvaluationError("negative power at a zero specialization value")
            if value == 0 and fixed > 0:
                continue
            contrib = c * value**fixed
            acc[kept] = acc.get(kept, Fraction(0)) + contrib
        acc = {k: v for k, v in acc.items() if v != 0}
        if not acc:
            return UniPoly(())
        low = min(acc)
        shift = min(low, 0)
        coeffs = [Fraction(0)] * (max(acc) - shift + 1)
        for k, v in acc.items():
            coeffs[k - shift] = v
        return UniPoly(coeffs)

    # -- canonical printing -------------------------------------------------

    def _sorted_terms(self) -> list[tuple[Exponents, Fraction]]:
        # Graded order on (i, j), ties broken by j.  Total and reproducible.
        return sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][1]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        v1, v2 = self.var_names
        parts: list[str] = []
        for (i, j), c in self._sorted_terms():
            factors = []
            if i != 0:
                factors.append(v1 if i == 1 else f"{v1}^{i}")
            if j != 0:
                factors.append(v2 if j == 1 else f"{v2}^{j}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"LaurentPoly2('{self}', vars={self.var_names})"


# -- parsing ----------------------------------------------------------------


class _Tokenizer:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> tuple[str, str, int]:
        """Return (kind, value, position) without consuming."""
        self._skip_ws()
        if self.pos >= len(self.text):
            return ("end", "", self.pos)
        ch = self.text[self.pos]
        if ch.isdigit():
            end = self.pos
            while end < len(self.text) and self.text[end].isdigit():
                end += 1
            return ("int", self.text[self.pos : end], self.pos)
        if ch.isalpha() or ch == "_":
            end = self.pos
            while end < len(self.text) and (self.text[end].isalnum() or self.text[end] == "_"):
                end += 1
            return ("name", self.text[self.pos : end], self.pos)
        if ch in "+-*/^()":
            return (ch, ch, self.pos)
        raise PolyParseError(f"unexpected character {ch!r}", self.pos)

    def next(self) -> tuple[str, str, int]:
        kind, value, pos = self.peek()
        if kind != "end":
            self.pos = pos + len(value)
        return (kind, value, pos)


class _Parser:
    def __init__(self, text: str, var_names: tuple[str, str]):
        self.toks = _Tokenizer(text)
        self.var_names = var_names

    def parse(self) -> LaurentPoly2:
        result = self._expr()
        kind, value, pos = self.toks.peek()
        if kind != "end":
            raise PolyParseError(f"unexpected {value!r}", pos)
        return result

    def _expr(self) -> LaurentPoly2:
        kind, _, _ = self.toks.peek()
        sign = 1
        if kind in ("+", "-"):
            self.toks.next()
            sign = -1 if kind == "-" else 1
        total = self._term() * sign
        while True:
            kind, _, _ = self.toks.peek()
            if kind == "+":
                self.toks.next()
                total = total + self._term()
            elif kind == "-":
                self.toks.next()
                total = total - self._term()
            else:
                return total

    def _term(self) -> LaurentPoly2:
        product = self._factor()
        while True:
            kind, _, _ = self.toks.peek()
            if kind == "*":
                self.toks.next()
                product = product * self._factor()
            elif kind in ("int", "name", "("):
                # juxtaposition, e.g. "3 m^2 b"
                product = product * self._factor()
            else:
                return product

    def _factor(self) -> LaurentPoly2:
        base = self._atom()
        kind, _, _ = self.toks.peek()
        if kind != "^":
            return base
        self.toks.next()
        kind, value, pos = self.toks.next()
        negative = False
        if kind == "-":
            negative = True
            kind, value, pos = self.toks.next()
        if kind != "int":
            raise PolyParseError("exponent must be an integer", pos)
        exp = int(value)
        if exp > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {value} out of range")
        if negative:
            exp = -exp
        try:
            return base**exp
        except LaurentError as err:
            raise PolyParseError(str(err), pos) from err

    def _atom(self) -> LaurentPoly2:
        kind, value, pos = self.toks.next()
        if kind == "int":
            num = int(value)
            nk, _, _ = self.toks.peek()
            if nk == "/":
                self.toks.next()
                dk, dval, dpos = self.toks.next()
                if dk != "int" or int(dval) == 0:
                    raise PolyParseError("denominator must be a positive integer", dpos)
                return LaurentPoly2.constant(Fraction(num, int(dval)), self.var_names)
            return LaurentPoly2.constant(num, self.var_names)
        if kind == "name":
            if value == self.var_names[0]:
                return LaurentPoly2.variable(0, self.var_names)
            if value == self.var_names[1]:
                return LaurentPoly2.variable(1, self.var_names)
            raise PolyParseError(f"unknown variable {value!r}", pos)
        if kind == "(":
            inner = self._expr()
            ck, _, cpos = self.toks.next()
            if ck != ")":
                raise PolyParseError("expected ')'", cpos)
            return inner
        raise PolyParseError(
            "expected a coefficient, variable or parenthesized group"
            if kind != "end"
            else "unexpected end of input",
            pos,
        )


def parse_poly(text: str, var_names: tuple[str, str] = ("m", "b")) -> LaurentPoly2:
    """Parse polynomial text in the module grammar (see module docstring)."""
    return _Parser(text, tuple(var_names)).parse()
