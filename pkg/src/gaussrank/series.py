"""Exact rationals and truncated power series over them.

Every scalar in this package is an arbitrary-precision rational; nothing
is ever rounded.  A :class:`TruncatedSeries` represents a power series in
one variable known exactly modulo ``y**precision``: it stores exactly
``precision`` coefficients.  Binary operations between series of
different precision truncate to the smaller one, so precision bookkeeping
follows the data automatically.

Multiplication is the hot path (the whole pipeline is built out of Cauchy
products), so it runs over a cached integer form of each series: one
common denominator plus integer numerators.  That trades thousands of
per-operation gcd reductions for a single normalization per output
coefficient.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import ZeroConstantTerm

try:
    from gmpy2 import lcm as _lcm
    from gmpy2 import mpq as _mpq
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from math import lcm as _lcm

    _mpq = Fraction
    _mpz = int

#: The scalar type used everywhere.  Always stored in lowest terms with a
#: positive denominator (both gmpy2.mpq and fractions.Fraction guarantee
#: this).
Rational = type(_mpq(1))

_ZERO = _mpq(0)
_ONE = _mpq(1)


def rational(numerator, denominator=1):
    """Build an exact rational from integers (or an integer pair)."""
    return _mpq(numerator, denominator)


def as_rational(value):
    """Coerce ``value`` to a Rational.

    Accepts Rationals, ints, fractions.Fraction and strings like
    ``"-3/4"``.  Floats are rejected: silently converting one would
    smuggle a rounding error into an exact computation.
    """
    if isinstance(value, Rational):
        return value
    if isinstance(value, float):
        raise TypeError("refusing to coerce float %r to an exact rational" % value)
    return _mpq(value)


class TruncatedSeries:
    """A power series known exactly modulo ``y**precision``."""

    __slots__ = ("coefficients", "precision", "_intform")

    def __init__(self, coefficients, precision):
        precision = int(precision)
        if precision < 1:
            raise ValueError("precision must be a positive integer")
        coeffs = [as_rational(c) for c in list(coefficients)[:precision]]
        if len(coeffs) < precision:
            coeffs.extend([_ZERO] * (precision - len(coeffs)))
        object.__setattr__(self, "coefficients", tuple(coeffs))
        object.__setattr__(self, "precision", precision)
        object.__setattr__(self, "_intform", None)

    def __setattr__(self, name, value):
        raise AttributeError("TruncatedSeries is immutable")

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, precision):
        return cls((), precision)

    @classmethod
    def constant(cls, value, precision):
        return cls((as_rational(value),), precision)

    @classmethod
    def one(cls, precision):
        return cls.constant(_ONE, precision)

    @classmethod
    def monomial(cls, exponent, precision, coefficient=1):
        """The series ``coefficient * y**exponent``."""
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        coeffs = [_ZERO] * min(exponent, precision)
        if exponent < precision:
            coeffs.append(as_rational(coefficient))
        return cls(coeffs, precision)

    # -- helpers ------------------------------------------------------

    def _integer_form(self):
        """Common denominator and integer numerators, cached."""
        cached = self._intform
        if cached is None:
            den = _mpz(1)
            for c in self.coefficients:
                if c:
                    den = _lcm(den, c.denominator)
            nums = tuple(
                _mpz(c.numerator) * (den // c.denominator) if c else _mpz(0)
                for c in self.coefficients
            )
            cached = (den, nums)
            object.__setattr__(self, "_intform", cached)
        return cached

    def truncated(self, precision):
        """This series modulo ``y**precision`` (precision may only drop)."""
        if precision >= self.precision:
            if precision == self.precision:
                return self
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coefficients[:precision], precision)

    def is_zero(self):
        """True when every stored coefficient vanishes (zero *to precision*;
        truncation makes genuine vanishing undecidable)."""
        return not any(self.coefficients)

    def vanishing_order(self):
        """Index of the first nonzero coefficient, or None when the series
        is zero to its precision."""
        for i, c in enumerate(self.coefficients):
            if c:
                return i
        return None

    def leading_coefficient(self):
        """Coefficient at the vanishing order, or None for a zero series."""
        order = self.vanishing_order()
        return None if order is None else self.coefficients[order]

    # -- ring operations ----------------------------------------------

    def __add__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        a, b = self.coefficients, other.coefficients
        return TruncatedSeries([a[i] + b[i] for i in range(n)], n)

    def __sub__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        n = min(self.precision, other.precision)
        a, b = self.coefficients, other.coefficients
        return TruncatedSeries([a[i] - b[i] for i in range(n)], n)

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coefficients], self.precision)

    def scaled(self, scalar):
        """Multiply every coefficient by an exact scalar."""
        s = as_rational(scalar)
        if not s:
            return TruncatedSeries.zero(self.precision)
        return TruncatedSeries([s * c for c in self.coefficients], self.precision)

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            try:
                return self.scaled(other)
            except TypeError:
                return NotImplemented
        n = min(self.precision, other.precision)
        da, na = self._integer_form()
        db, nb = other._integer_form()
        out = [_mpz(0)] * n
        for i in range(n):
            ai = na[i]
            if ai:
                for j in range(n - i):
                    bj = nb[j]
                    if bj:
                        out[i + j] += ai * bj
        den = da * db
        return TruncatedSeries([_mpq(v, den) if v else _ZERO for v in out], n)

    def __rmul__(self, scalar):
        try:
            return self.scaled(scalar)
        except TypeError:
            return NotImplemented

    def __pow__(self, exponent):
        exponent = int(exponent)
        if exponent < 0:
            raise ValueError("negative powers are not defined; invert first")
        result = TruncatedSeries.one(self.precision)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def inverse(self):
        """The reciprocal series, by the standard convolution recurrence.

        Requires a unit (nonzero constant term); raises ZeroConstantTerm
        otherwise, which signals a pole at the expansion point.
        """
        a = self.coefficients
        if not a[0]:
            raise ZeroConstantTerm("series has zero constant term, cannot invert")
        n = self.precision
        inv0 = _ONE / a[0]
        out = [inv0]
        for k in range(1, n):
            acc = _ZERO
            for j in range(1, k + 1):
                aj = a[j]
                if aj and out[k - j]:
                    acc += aj * out[k - j]
            out.append(-inv0 * acc)
        return TruncatedSeries(out, n)

    def derivative(self):
        """Termwise derivative; the precision drops by one."""
        if self.precision < 2:
            raise ValueError("cannot differentiate a series known modulo y**1")
        a = self.coefficients
        return TruncatedSeries(
            [(i + 1) * a[i + 1] for i in range(self.precision - 1)],
            self.precision - 1,
        )

    def shifted(self, k):
        """Multiply by ``y**k`` at unchanged precision (top terms fall off)."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if k == 0:
            return self
        n = self.precision
        return TruncatedSeries((_ZERO,) * min(k, n) + self.coefficients[: n - k], n)

    # -- comparison / display -----------------------------------------

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.precision == other.precision and self.coefficients == other.coefficients

    def __hash__(self):
        return hash((self.precision, self.coefficients))

    def __repr__(self):
        terms = []
        for i, c in enumerate(self.coefficients):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("%s*y" % c)
            else:
                terms.append("%s*y^%d" % (c, i))
            if len(terms) == 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return "TruncatedSeries(%s + O(y^%d))" % (body, self.precision)
