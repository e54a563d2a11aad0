"""Local analytic model of a cyclic cover at a totally ramified point.

The cover is the normalization of ``y**m = g(x)`` with
``g(x) = prod_i (x - t_i)**a_i``.  For a normalized datum (first residue
1, first branch point 0) the equation reads ``y**m = x * h(x)`` with
``h(0) != 0``, so ``x = phi(y)`` is solved by the fixed-point iteration

    x  <-  y**m / h(x)

which gains m correct orders per round in the y-adic metric.  The
canonical basis of holomorphic one-forms is then written down in the
local coordinate y:

    f[n, nu] = m * y**(n-1) * phi**nu * prod_i (phi - t_i)**(l(i,n) + a_i)
               / g'(phi)

for n = 1..m-1 and nu = 0..d_n - 1, where l(i, n) = floor(-n * a_i / m)
and d_n are the eigenspace dimensions.  The deck generator scales
f[n, nu] * dy by the n-th power of a primitive m-th root of unity, which
concretely means the series is supported on exponents = n - 1 (mod m).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import ceil, floor

from . import monodromy
from .errors import NotNormalized, PrecisionTooLow, RepeatedBranchPoints
from .monodromy import MonodromyDatum, eigenspace_dimensions
from .series import TruncatedSeries, as_rational


def default_precision(g):
    """Working precision used when none is requested: max(150, 12*g).

    The relevant vanishing orders grow like 4g, so the 12g floor keeps
    small-precision corner cases away while 150 matches the survey scale.
    """
    return max(150, 12 * int(g))


def exponent_table(datum):
    """The exponents l(i, n) = floor(-n * a_i / m), as a tuple of rows
    indexed by branch point i, columns n = 1..m-1.

    Always in [-a_i, -1], and l(i, n) + a_i >= 0.
    """
    m = datum.m
    return tuple(
        tuple(floor(-n * ai / m) for n in range(1, m)) for ai in datum.a
    )


@dataclass(frozen=True)
class CoverModel:
    """A solved local model: the datum, its branch points, and the series
    phi with g'(phi) (a unit series) at the stated precision."""

    datum: MonodromyDatum
    branch_points: tuple
    precision: int
    phi: TruncatedSeries
    gprime_at_phi: TruncatedSeries

    @property
    def genus(self):
        return monodromy.genus(self.datum)

    def point_shifts(self):
        """The series (phi - t_i) for every branch point."""
        return tuple(
            self.phi - TruncatedSeries.constant(t, self.precision)
            for t in self.branch_points
        )


def branch_solve(datum, branch_points=None, precision=None):
    """Solve the cover equation at the point over the first branch point.

    Requires a normalized datum (first entry 1) with first branch point 0
    and pairwise distinct branch points.  The defining identity
    ``g(phi) = y**m (mod y**precision)`` is verified before returning.
    """
    if branch_points is None:
        branch_points = monodromy.default_branch_points(datum.r)
    t = tuple(as_rational(p) for p in branch_points)
    if len(t) != datum.r:
        raise ValueError(
            "%d branch points for %d residues" % (len(t), datum.r)
        )
    if len(set(t)) != len(t):
        raise RepeatedBranchPoints("branch points must be pairwise distinct")
    if datum.a[0] != 1:
        raise NotNormalized("first residue must be 1 (use normalize())")
    if t[0] != 0:
        raise NotNormalized("first branch point must be 0")
    if precision is None:
        precision = default_precision(monodromy.genus(datum))
    prec = int(precision)
    if prec < 2:
        raise ValueError("precision must be at least 2")

    m = datum.m
    y_m = TruncatedSeries.monomial(m, prec)
    x = TruncatedSeries.zero(prec)
    for _ in range(ceil(prec / m) + 1):
        h = _eval_tail_product(datum, t, x)
        new_x = y_m * h.inverse()
        if new_x == x:
            break
        x = new_x

    g_at_phi = x * _eval_tail_product(datum, t, x)
    if g_at_phi != y_m:
        raise PrecisionTooLow(
            "fixed-point solve did not reach the defining identity at precision %d" % prec
        )
    gp = _eval_derivative(datum, t, x)
    if not gp.coefficients[0]:
        raise PrecisionTooLow("g'(phi) is not a unit series; branch data degenerate")
    return CoverModel(datum, t, prec, x, gp)


def _eval_tail_product(datum, t, x):
    """h(x) = prod_{i >= 2} (x - t_i)**a_i evaluated on a series."""
    prec = x.precision
    acc = TruncatedSeries.one(prec)
    for ti, ai in zip(t[1:], datum.a[1:]):
        acc = acc * (x - TruncatedSeries.constant(ti, prec)) ** ai
    return acc


def _eval_derivative(datum, t, x):
    """g'(x) evaluated on a series, by the product rule.

    Suffix products keep this at about 3r series multiplications.
    """
    prec = x.precision
    r = datum.r
    shifts = [x - TruncatedSeries.constant(ti, prec) for ti in t]
    powers = [shifts[i] ** datum.a[i] for i in range(r)]
    suffix = [TruncatedSeries.one(prec)] * (r + 1)
    for i in range(r - 1, -1, -1):
        suffix[i] = powers[i] * suffix[i + 1]
    total = TruncatedSeries.zero(prec)
    prefix = TruncatedSeries.one(prec)
    for i in range(r):
        term = prefix * (shifts[i] ** (datum.a[i] - 1)) * suffix[i + 1]
        total = total + term.scaled(datum.a[i])
        prefix = prefix * powers[i]
    return total


@dataclass(frozen=True)
class FormBasis:
    """Canonical basis of holomorphic one-forms in the local coordinate.

    ``series[k]`` is the local function of the k-th form (the form is
    series[k] * dy); ``labels[k] = (n, nu)`` records its character n and
    its power of x.  Ordering is n-major, then nu, so the full basis is
    f[1,0], ..., f[1,d_1-1], f[2,0], ..., f[m-1,d_{m-1}-1].
    """

    cover: CoverModel
    labels: tuple
    series: tuple

    @property
    def genus(self):
        return len(self.series)

    @property
    def precision(self):
        return self.cover.precision

    def dims(self):
        return eigenspace_dimensions(self.cover.datum)

    def index(self, n, nu):
        """Position of the form with character n and x-power nu."""
        return self.labels.index((n, nu))

    def form(self, n, nu):
        return self.series[self.index(n, nu)]


def canonical_form_basis(cover):
    """Build the full basis of holomorphic one-forms for a solved cover.

    Raises PrecisionTooLow if any form vanishes identically to the
    working precision (the basis would be degenerate).
    """
    datum = cover.datum
    m, prec = datum.m, cover.precision
    dims = eigenspace_dimensions(datum)
    table = exponent_table(datum)
    shifts = cover.point_shifts()
    inv_gp = cover.gprime_at_phi.inverse()

    labels = []
    series = []
    for n in range(1, m):
        prod = TruncatedSeries.constant(m, prec)
        for i in range(datum.r):
            exp = table[i][n - 1] + datum.a[i]
            if exp:
                prod = prod * shifts[i] ** exp
        base = (prod * inv_gp).shifted(n - 1)
        f = base
        for nu in range(dims[n - 1]):
            if f.is_zero():
                raise PrecisionTooLow(
                    "form (n=%d, nu=%d) is zero to precision %d" % (n, nu, prec)
                )
            labels.append((n, nu))
            series.append(f)
            f = f * cover.phi
    basis = FormBasis(cover, tuple(labels), tuple(series))
    if basis.genus != monodromy.genus(datum):
        raise PrecisionTooLow(
            "form count %d does not match genus %d" % (basis.genus, monodromy.genus(datum))
        )
    return basis
