"""Cyclic monodromy data for branched covers of the line.

A datum ``(m, (a_1, ..., a_r))`` encodes a Z/m Galois cover of the
projective line branched over r points: the loop around the i-th branch
point maps to the residue ``a_i``.  Validity means the residues multiply
to the identity (their sum is 0 mod m), generate Z/m, and none is zero.

This module also enumerates, for a genus g and a quotient genus g', the
Hurwitz classes of Z/4 data whose degree-2 intermediate quotient is a
genus-g' (hyper)elliptic curve: order-4 residues split as s_1 ones and
s_3 threes with ``s_1 + s_3 = 2g' + 2``, the order-2 residues number
``r_2 = g - 3g'``, and consistency forces ``s_1 = g + 1 (mod 2)``.
Classes are taken up to entry permutation and unit multiplication, which
swaps the residues 1 and 3, so representatives are normalized to
``s_1 >= s_3``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd

from .errors import EmptyLocus, MonodromyParseError, NonIntegralGenus, NoTotallyRamifiedPoint
from .series import Rational, rational


@dataclass(frozen=True)
class MonodromyDatum:
    """Group order m and the tuple of branch residues."""

    m: int
    a: tuple

    def __post_init__(self):
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "a", tuple(int(x) for x in self.a))
        if self.m < 2:
            raise ValueError("group order must be at least 2")
        if not self.a:
            raise ValueError("datum needs at least one branch residue")

    @property
    def r(self):
        """Number of branch points."""
        return len(self.a)

    def local_orders(self):
        """Order of each local monodromy: m / gcd(a_i, m)."""
        return tuple(self.m // gcd(ai, self.m) for ai in self.a)

    def to_string(self):
        """Canonical ``m=4;a=1^2,3^2,2^2`` form (consecutive runs grouped)."""
        return "m=%d;a=%s" % (self.m, _format_runs(self.a, ","))

    def label(self):
        """Compact bracket form ``[1^2:3^2:2^2]``."""
        return "[%s]" % _format_runs(self.a, ":")

    def __str__(self):
        return self.to_string()


def _format_runs(entries, sep):
    parts = []
    i = 0
    while i < len(entries):
        j = i
        while j < len(entries) and entries[j] == entries[i]:
            j += 1
        count = j - i
        parts.append(str(entries[i]) if count == 1 else "%d^%d" % (entries[i], count))
        i = j
    return sep.join(parts)


def validate(datum):
    """Check the datum invariants; returns a list of violations (empty = ok).

    Violations are reported rather than raised so callers can decide how
    severe each one is.
    """
    violations = []
    m, a = datum.m, datum.a
    for i, ai in enumerate(a):
        if ai % m == 0:
            violations.append("entry a_%d = %d is 0 mod %d" % (i + 1, ai, m))
        elif not 1 <= ai <= m - 1:
            violations.append(
                "entry a_%d = %d is outside the residue range 1..%d" % (i + 1, ai, m - 1)
            )
    total = sum(a) % m
    if total != 0:
        violations.append("residues sum to %d != 0 mod %d" % (total, m))
    g = gcd(m, *a) if a else m
    if g != 1:
        violations.append("gcd(a_1..a_r, m) = %d != 1, not an epimorphism" % g)
    return violations


def is_valid(datum):
    return not validate(datum)


def genus(datum):
    """Genus of the total space via Riemann-Hurwitz over a genus-0 base.

    2g - 2 = m * (-2 + sum_i (1 - 1/m_i)) with m_i = m / gcd(a_i, m).
    Raises NonIntegralGenus when the count is not a nonnegative integer,
    which signals an inconsistent datum.
    """
    m = datum.m
    # m * (1 - 1/m_i) = m - gcd(a_i, m), so everything stays integral.
    total = -2 * m + sum(m - gcd(ai, m) for ai in datum.a)
    if total % 2 != 0 or total < -2:
        raise NonIntegralGenus("Riemann-Hurwitz gives 2g-2 = %d" % total)
    return total // 2 + 1


def eigenspace_dimensions(datum):
    """Dimensions (d_1, ..., d_{m-1}) of the character eigenspaces of the
    deck action on holomorphic one-forms.

    d_n = -1 + sum_i <-n*a_i/m> with <.> the fractional part; the sum of
    all d_n equals the genus.
    """
    m, a = datum.m, datum.a
    dims = []
    for n in range(1, m):
        total = sum((-n * ai) % m for ai in a)
        if total % m != 0:
            raise NonIntegralGenus("character sum is not integral; invalid datum")
        dims.append(total // m - 1)
    return tuple(dims)


def normalize(datum):
    """Hurwitz-equivalent datum with first entry 1.

    Multiplies every entry by the inverse of the first entry coprime to m
    and swaps that entry to the front.  Raises NoTotallyRamifiedPoint when
    no entry is coprime to m: the expansion trick needs a point where the
    fiber coordinate is a local coordinate.
    """
    m = datum.m
    idx = next((i for i, ai in enumerate(datum.a) if gcd(ai, m) == 1), None)
    if idx is None:
        raise NoTotallyRamifiedPoint(
            "no entry of %s is coprime to %d" % (datum.label(), m)
        )
    inv = pow(datum.a[idx], -1, m)
    scaled = [(ai * inv) % m for ai in datum.a]
    scaled[0], scaled[idx] = scaled[idx], scaled[0]
    return MonodromyDatum(m, tuple(scaled))


def permute(datum, permutation):
    """Entry permutation (a Hurwitz move)."""
    perm = tuple(permutation)
    if sorted(perm) != list(range(datum.r)):
        raise ValueError("not a permutation of 0..r-1")
    return MonodromyDatum(datum.m, tuple(datum.a[i] for i in perm))


def multiply_unit(datum, unit):
    """Multiply all entries by a unit mod m (a Hurwitz move)."""
    if gcd(unit, datum.m) != 1:
        raise ValueError("%d is not a unit mod %d" % (unit, datum.m))
    return MonodromyDatum(datum.m, tuple((ai * unit) % datum.m for ai in datum.a))


@dataclass(frozen=True)
class GaloisFamilyClass:
    """One Hurwitz class of Z/4 covers factoring through a genus-g' curve."""

    g: int
    gprime: int
    s1: int
    s3: int
    r2: int
    representative: MonodromyDatum

    def label(self):
        return self.representative.label()


def enumerate_galois(g, gprime):
    """All Hurwitz classes of Z/4 data with total genus g and degree-2
    quotient genus gprime, ordered by decreasing count of residue 1.

    Raises EmptyLocus when g < 3*gprime (the order-2 branch count would
    be negative).
    """
    g, gprime = int(g), int(gprime)
    if gprime < 1:
        raise ValueError("quotient genus must be at least 1")
    r2 = g - 3 * gprime
    if r2 < 0:
        raise EmptyLocus(
            "no such covers: genus %d is below 3*g' = %d" % (g, 3 * gprime)
        )
    r4 = 2 * gprime + 2
    classes = []
    for s1 in range(r4, (r4 - 1) // 2, -1):
        s3 = r4 - s1
        if s1 % 2 != (g + 1) % 2:
            continue
        rep = MonodromyDatum(4, (1,) * s1 + (3,) * s3 + (2,) * r2)
        if genus(rep) != g:
            raise NonIntegralGenus(
                "representative %s has genus %d, expected %d" % (rep.label(), genus(rep), g)
            )
        classes.append(GaloisFamilyClass(g, gprime, s1, s3, r2, rep))
    return classes


def survey_monodromy(g, gprime=1):
    """The component used for the batch rank survey at genus g: the class
    with the most residue-1 entries (for quotient genus 1 this is the
    (1^4, 2^(g-3)) family for odd g and the unique family for even g)."""
    return enumerate_galois(g, gprime)[0].representative


def default_branch_points(r):
    """The standard branch points (0, 1, -1, 2, -2, 3, ...) of length r."""
    r = int(r)
    if r < 3:
        raise ValueError("need at least 3 branch points, got %d" % r)
    points = [rational(0)]
    k = 1
    while len(points) < r:
        points.append(rational(k))
        if len(points) < r:
            points.append(rational(-k))
        k += 1
    return tuple(points)


_RUN_RE = re.compile(r"(\d+)(?:\^(\d+))?$")


def _parse_runs(text, sep, offset):
    entries = []
    pos = offset
    for chunk in text.split(sep):
        match = _RUN_RE.match(chunk.strip())
        if match is None:
            raise MonodromyParseError(
                "expected residue or residue^count, got %r" % chunk, pos
            )
        residue = int(match.group(1))
        count = int(match.group(2)) if match.group(2) else 1
        if count < 1:
            raise MonodromyParseError("count must be positive in %r" % chunk, pos)
        entries.extend([residue] * count)
        pos += len(chunk) + 1
    return entries


def parse_monodromy(text):
    """Parse ``m=<int>;a=<res>^<count>,...`` or the bracket shorthand
    ``[1^4:2^2]`` (bracket form defaults to m = 4)."""
    s = text.strip()
    if not s:
        raise MonodromyParseError("empty monodromy string", 0)
    if s.startswith("["):
        if not s.endswith("]"):
            raise MonodromyParseError("unterminated '['", len(s) - 1)
        entries = _parse_runs(s[1:-1], ":", 1)
        return MonodromyDatum(4, tuple(entries))
    m_match = re.match(r"m\s*=\s*(\d+)\s*;", s)
    if m_match is None:
        raise MonodromyParseError("expected 'm=<int>;' prefix", 0)
    m = int(m_match.group(1))
    rest = s[m_match.end() :]
    a_match = re.match(r"\s*a\s*=\s*", rest)
    if a_match is None:
        raise MonodromyParseError("expected 'a=' after group order", m_match.end())
    body = rest[a_match.end() :]
    if not body.strip():
        raise MonodromyParseError("empty residue list", m_match.end() + a_match.end())
    entries = _parse_runs(body, ",", m_match.end() + a_match.end())
    return MonodromyDatum(m, tuple(entries))


def parse_branch_points(text):
    """Parse a comma-separated list of exact rationals like ``0,1,-1,5/2``."""
    points = []
    pos = 0
    for chunk in text.split(","):
        piece = chunk.strip()
        try:
            points.append(rational(piece))
        except (ValueError, ZeroDivisionError):
            raise MonodromyParseError("bad branch point %r" % piece, pos) from None
        pos += len(chunk) + 1
    return tuple(points)
