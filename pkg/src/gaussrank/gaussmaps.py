"""Multiplication map, quadric space and Gaussian map ranks.

All computations happen in the local coordinate at the totally ramified
point, so every rank reported here is a certified lower bound for the
actual rank (truncating Taylor series can only drop rank, never raise
it), and exact arithmetic makes each bound certain.

Conventions.  The basis forms are f_1, ..., f_g (local functions); the
symmetric index set runs over pairs (i, j) with i <= j, i-major.  A
quadric is a coefficient vector Q over that index set, contracted as

    sum_{i <= j} Q[i,j] * f_i * f_j        (multiplication map)
    sum_{i <= j} Q[i,j] * f_i' * f_j'      (second Gaussian map)

so the kernel vectors coming out of the nullspace are used verbatim.
Products of derivatives live one order lower, precision - 1.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from . import monodromy
from .cover import branch_solve, canonical_form_basis, default_precision
from .errors import DegenerateWitness, NotAQuadric, SubspaceTooSmall
from .linalg import RationalMatrix
from .series import TruncatedSeries, rational


def symmetric_pairs(g):
    """The (i, j), i <= j index list in the row order used throughout."""
    return tuple((i, j) for i in range(g) for j in range(i, g))


def multiplication_matrix(basis):
    """Coefficient matrix of the multiplication map.

    One row per unordered pair (i, j): the coefficient vector of
    f_i * f_j up to the working precision.
    """
    fs = basis.series
    return RationalMatrix(
        [(fs[i] * fs[j]).coefficients for i, j in symmetric_pairs(basis.genus)]
    )


@dataclass(frozen=True)
class QuadricSpace:
    """Exact basis of the kernel of the multiplication map, indexed over
    symmetric pairs of basis forms."""

    pairs: tuple
    basis_vectors: tuple

    @property
    def dimension(self):
        return len(self.basis_vectors)


def contract_with_products(basis, vector):
    """sum Q[i,j] * f_i * f_j for a symmetric coefficient vector."""
    fs = basis.series
    acc = TruncatedSeries.zero(basis.precision)
    for q, (i, j) in zip(vector, symmetric_pairs(basis.genus)):
        if q:
            acc = acc + (fs[i] * fs[j]).scaled(q)
    return acc


def quadric_space(basis):
    """Kernel of the multiplication map as symmetric coefficient vectors.

    The nullspace is taken on the transposed coefficient matrix (pairs as
    columns) and every returned vector is re-verified to contract to the
    zero series.
    """
    mat = multiplication_matrix(basis)
    vectors = mat.transpose().nullspace()
    for v in vectors:
        if not contract_with_products(basis, v).is_zero():
            raise AssertionError("nullspace vector fails kernel membership")
    return QuadricSpace(symmetric_pairs(basis.genus), tuple(vectors))


def _derivatives(basis):
    return [f.derivative() for f in basis.series]


def _mu2_series(basis, vector, ders=None):
    if ders is None:
        ders = _derivatives(basis)
    acc = TruncatedSeries.zero(basis.precision - 1)
    for q, (i, j) in zip(vector, symmetric_pairs(basis.genus)):
        if q:
            acc = acc + (ders[i] * ders[j]).scaled(q)
    return acc


def mu2_of_quadric(basis, vector):
    """Local section of the second Gaussian map on one quadric.

    Checks kernel membership first (NotAQuadric on failure); the zero
    vector is a member and maps to the zero series.
    """
    vector = tuple(vector)
    if len(vector) != len(symmetric_pairs(basis.genus)):
        raise ValueError("coefficient vector has the wrong length")
    if not contract_with_products(basis, vector).is_zero():
        raise NotAQuadric("vector is not in the kernel of the multiplication map")
    return _mu2_series(basis, vector)


def mu2_rank(basis, qspace):
    """Exact rank of the second Gaussian map restricted to the computed
    quadric space: a certified lower bound for its actual rank."""
    if qspace.dimension == 0:
        return 0
    ders = _derivatives(basis)
    rows = [_mu2_series(basis, v, ders).coefficients for v in qspace.basis_vectors]
    return RationalMatrix(rows).rank()


def quadric_character(basis, vector):
    """Deck character of a symmetric coefficient vector.

    Returns c when every nonzero entry couples forms whose characters sum
    to c mod m (c == 0 means invariance under the whole deck group), and
    None when the characters are mixed.  The zero vector counts as
    character 0.
    """
    m = basis.cover.datum.m
    character = None
    for q, (i, j) in zip(vector, symmetric_pairs(basis.genus)):
        if not q:
            continue
        c = (basis.labels[i][0] + basis.labels[j][0]) % m
        if character is None:
            character = c
        elif character != c:
            return None
    return 0 if character is None else character


def mu1_series(basis, label_u, label_v):
    """Local section of the first Gaussian map on a wedge of two forms:
    u' * v - u * v', one order below the working precision."""
    u = basis.form(*label_u)
    v = basis.form(*label_v)
    n = basis.precision - 1
    return u.derivative() * v.truncated(n) - u.truncated(n) * v.derivative()


_SELECTORS = ("wedge-W1", "wedge-W3", "W1-tensor-W3", "full")


def _weight_blocks(basis):
    """The sub-bases W1 and W3: forms of character 1 and 3 divisible by x
    (nu >= 1), the concrete model of the adjoint system of the degree-4
    pencil on order-4 cyclic data."""
    if basis.cover.datum.m != 4:
        raise ValueError("weight blocks are defined for order-4 cyclic data only")
    w1 = [lab for lab in basis.labels if lab[0] == 1 and lab[1] >= 1]
    w3 = [lab for lab in basis.labels if lab[0] == 3 and lab[1] >= 1]
    return w1, w3


def mu1_restricted_rank(basis, selector):
    """Exact rank of the first Gaussian map on a block of the weight
    decomposition: 'wedge-W1', 'wedge-W3', 'W1-tensor-W3' or 'full'.

    A wedge block over a single form is empty and has rank 0; an empty
    block raises SubspaceTooSmall.
    """
    if selector not in _SELECTORS:
        raise ValueError("unknown selector %r; expected one of %s" % (selector, (_SELECTORS,)))
    w1, w3 = _weight_blocks(basis)
    pairs = []
    if selector in ("wedge-W1", "full"):
        if not w1 and selector != "full":
            raise SubspaceTooSmall("W1 block is empty")
        pairs.extend((u, v) for k, u in enumerate(w1) for v in w1[k + 1 :])
    if selector in ("wedge-W3", "full"):
        if not w3 and selector != "full":
            raise SubspaceTooSmall("W3 block is empty")
        pairs.extend((u, v) for k, u in enumerate(w3) for v in w3[k + 1 :])
    if selector in ("W1-tensor-W3", "full"):
        if (not w1 or not w3) and selector != "full":
            raise SubspaceTooSmall("mixed block needs both W1 and W3 nonempty")
        pairs.extend((u, v) for u in w1 for v in w3)
    if selector == "full" and len(w1) + len(w3) < 2:
        raise SubspaceTooSmall("weight blocks carry fewer than two forms")
    if not pairs:
        return 0
    rows = [mu1_series(basis, u, v).coefficients for u, v in pairs]
    return RationalMatrix(rows).rank()


# -- precision policies and the pipeline report ------------------------


@dataclass(frozen=True)
class FixedPrecision:
    """Run the pipeline once at the stated precision."""

    precision: int

    def sequence(self, g):
        yield max(2, int(self.precision))

    def describe(self):
        return "fixed:%d" % self.precision


@dataclass(frozen=True)
class EscalatingPrecision:
    """Recompute at growing precision until the rank repeats or the cap
    is hit.  start=None means the default precision for the genus."""

    start: int = None
    factor: int = 2
    maximum: int = 600

    def sequence(self, g):
        prec = int(self.start) if self.start else default_precision(g)
        while True:
            yield min(prec, self.maximum)
            if prec >= self.maximum:
                return
            prec *= int(self.factor)

    def describe(self):
        start = self.start if self.start else "default"
        return "escalate:%s:%d:%d" % (start, self.factor, self.maximum)


@dataclass(frozen=True)
class RankReport:
    """Everything one pipeline run certifies about a datum."""

    datum: monodromy.MonodromyDatum
    branch_points: tuple
    precision_used: int
    mult_rank: int
    i2_dim: int
    mu2_rank_lower_bound: int
    stable: bool
    elapsed: float

    @property
    def genus(self):
        return monodromy.genus(self.datum)

    def max_possible_rank(self, bielliptic=None):
        """min(dim I2, 5g-5) on the bielliptic locus, min(dim I2, 7g-7)
        otherwise."""
        g = self.genus
        cap = 5 * g - 5 if bielliptic else 7 * g - 7
        return min(self.i2_dim, cap)

    def to_dict(self):
        return {
            "m": self.datum.m,
            "a": list(self.datum.a),
            "branch_points": [str(t) for t in self.branch_points],
            "precision_used": self.precision_used,
            "mult_rank": self.mult_rank,
            "i2_dim": self.i2_dim,
            "mu2_rank_lower_bound": self.mu2_rank_lower_bound,
            "stable": self.stable,
            "elapsed": self.elapsed,
        }

    @classmethod
    def from_dict(cls, record):
        return cls(
            datum=monodromy.MonodromyDatum(record["m"], tuple(record["a"])),
            branch_points=tuple(rational(t) for t in record["branch_points"]),
            precision_used=int(record["precision_used"]),
            mult_rank=int(record["mult_rank"]),
            i2_dim=int(record["i2_dim"]),
            mu2_rank_lower_bound=int(record["mu2_rank_lower_bound"]),
            stable=bool(record["stable"]),
            elapsed=float(record["elapsed"]),
        )


def build_basis(datum, branch_points=None, precision=None):
    """branch_solve + canonical_form_basis in one call."""
    return canonical_form_basis(branch_solve(datum, branch_points, precision))


def stable_rank(datum, branch_points=None, policy=None):
    """Run the full pipeline under a precision policy and report.

    The report's stable flag is set when the rank saturates the quadric
    space (it cannot grow further, so the bound is exact) or when two
    consecutive precision levels agree.  The reported value is a valid
    lower bound either way.
    """
    start = time.perf_counter()
    g = monodromy.genus(datum)
    if policy is None:
        policy = FixedPrecision(default_precision(g))
    previous = None
    report = None
    for prec in policy.sequence(g):
        basis = build_basis(datum, branch_points, prec)
        qspace = quadric_space(basis)
        npairs = g * (g + 1) // 2
        i2_dim = qspace.dimension
        mult_rank = npairs - i2_dim
        rank = mu2_rank(basis, qspace)
        saturated = rank == i2_dim
        stable = saturated or (previous is not None and rank == previous)
        report = RankReport(
            datum=datum,
            branch_points=basis.cover.branch_points,
            precision_used=prec,
            mult_rank=mult_rank,
            i2_dim=i2_dim,
            mu2_rank_lower_bound=rank,
            stable=stable,
            elapsed=time.perf_counter() - start,
        )
        if stable:
            break
        previous = rank
    return report


# -- witness quadrics ---------------------------------------------------


@dataclass(frozen=True)
class WitnessReport:
    """An invariant quadric with a nonzero second Gaussian image, the
    certificate that the family is not totally geodesic."""

    datum: monodromy.MonodromyDatum
    gprime: int
    precision: int
    construction: str
    terms: tuple  # ((coefficient, (n,nu), (n,nu)), ...)
    character: int
    membership_verified: bool
    mu2_vanishing_order: int
    mu2_leading_coefficient: object

    def quadric_label(self):
        parts = []
        for coeff, lab_u, lab_v in self.terms:
            sign = "+" if coeff > 0 else "-"
            parts.append(
                "%s f[%d,%d]*f[%d,%d]" % (sign, lab_u[0], lab_u[1], lab_v[0], lab_v[1])
            )
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text

    def to_dict(self):
        return {
            "m": self.datum.m,
            "a": list(self.datum.a),
            "gprime": self.gprime,
            "precision": self.precision,
            "construction": self.construction,
            "quadric": self.quadric_label(),
            "character": self.character,
            "membership_verified": self.membership_verified,
            "mu2_vanishing_order": self.mu2_vanishing_order,
            "mu2_leading_coefficient": str(self.mu2_leading_coefficient),
        }


def _witness_terms(basis):
    """Choose the invariant quadric for this component.

    Preference order:
      * quotient-differential quadric from the character-2 eigenspace
        (needs d_2 >= 3; fully invariant),
      * the rank-4 pencil quadric mixing characters 1 and 3 (needs
        d_1 >= 3 and d_3 >= 2; fully invariant),
      * the character-1 square quadric (needs d_1 >= 3; invariant under
        the involution subgroup only).
    """
    if basis.cover.datum.m != 4:
        raise DegenerateWitness("witness quadrics are defined for order-4 cyclic data")
    dims = basis.dims()
    d1, d2, d3 = dims[0], dims[1], dims[2]
    if d2 >= 3:
        return (
            "quotient-eigenspace",
            ((rational(1), (2, 0), (2, 2)), (rational(-1), (2, 1), (2, 1))),
        )
    if d1 < 3:
        raise DegenerateWitness(
            "component has d_1 = %d < 3 (and d_2 = %d < 3); pick another component"
            % (d1, d2)
        )
    if d3 >= 2:
        return (
            "pencil-rank-4",
            ((rational(1), (1, 0), (3, 1)), (rational(-1), (1, 1), (3, 0))),
        )
    return (
        "involution-invariant",
        ((rational(1), (1, 0), (1, 2)), (rational(-1), (1, 1), (1, 1))),
    )


def witness_vector(basis, terms):
    """Symmetric coefficient vector with the given (coeff, label, label)
    entries."""
    pairs = symmetric_pairs(basis.genus)
    position = {p: k for k, p in enumerate(pairs)}
    vector = [rational(0)] * len(pairs)
    for coeff, lab_u, lab_v in terms:
        i, j = basis.index(*lab_u), basis.index(*lab_v)
        vector[position[(min(i, j), max(i, j))]] += coeff
    return tuple(vector)


def compute_witness(datum, gprime, branch_points=None, precision=None, max_precision=600):
    """Build and verify a witness quadric for a normalized datum.

    Verifies kernel membership exactly, records the deck character, and
    requires the second Gaussian image to be nonzero to precision; a
    zero-to-precision image escalates the precision before giving up.
    """
    g = monodromy.genus(datum)
    prec = int(precision) if precision else default_precision(g)
    while True:
        basis = build_basis(datum, branch_points, prec)
        construction, terms = _witness_terms(basis)
        vector = witness_vector(basis, terms)
        image = mu2_of_quadric(basis, vector)  # raises NotAQuadric on failure
        order = image.vanishing_order()
        if order is not None:
            character = quadric_character(basis, vector)
            return WitnessReport(
                datum=datum,
                gprime=gprime,
                precision=prec,
                construction=construction,
                terms=terms,
                character=character,
                membership_verified=True,
                mu2_vanishing_order=order,
                mu2_leading_coefficient=image.coefficients[order],
            )
        if prec >= max_precision:
            raise DegenerateWitness(
                "second Gaussian image is zero to precision %d" % prec
            )
        prec = min(2 * prec, max_precision)
