"""Exact rank and nullspace of dense matrices over the rationals.

Elimination is fraction-free (Bareiss): each row is first scaled to a
primitive integer row (clearing denominators changes neither rank nor
kernel), then the one-step determinant update

    m[r][c] <- (pivot * m[r][c] - m[r][col] * m[piv][c]) // prev_pivot

keeps every intermediate entry an integer minor of the input, which is
what controls coefficient blow-up on the huge rationals this package
produces.  Pivoting always takes the first nonzero entry in column
order, so echelon forms - and therefore nullspace bases - are
reproducible bit for bit.
"""

from __future__ import annotations

from .series import Rational, as_rational, rational

try:
    from gmpy2 import gcd as _gcd
    from gmpy2 import lcm as _lcm
    from gmpy2 import mpz as _mpz
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from math import gcd as _gcd
    from math import lcm as _lcm

    _mpz = int

_QZERO = rational(0)
_QONE = rational(1)


class RationalMatrix:
    """Dense matrix of exact rationals."""

    __slots__ = ("_rows", "rows", "cols")

    def __init__(self, rows):
        data = [tuple(as_rational(x) for x in row) for row in rows]
        if data:
            width = len(data[0])
            for row in data:
                if len(row) != width:
                    raise ValueError("ragged rows in matrix input")
        else:
            width = 0
        object.__setattr__(self, "_rows", tuple(data))
        object.__setattr__(self, "rows", len(data))
        object.__setattr__(self, "cols", width)

    def __setattr__(self, name, value):
        raise AttributeError("RationalMatrix is immutable")

    @classmethod
    def identity(cls, n):
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zero(cls, rows, cols):
        return cls([[0] * cols for _ in range(rows)])

    @classmethod
    def from_entries(cls, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ValueError("entry count does not match shape")
        return cls([entries[i * cols : (i + 1) * cols] for i in range(rows)])

    @property
    def entries(self):
        """Row-major flat tuple of all entries."""
        return tuple(x for row in self._rows for x in row)

    def row(self, i):
        return self._rows[i]

    def __getitem__(self, index):
        i, j = index
        return self._rows[i][j]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self):
        return hash(self._rows)

    def __repr__(self):
        return "RationalMatrix(%d x %d)" % (self.rows, self.cols)

    def transpose(self):
        return RationalMatrix(list(zip(*self._rows)) if self._rows else [])

    def mul_vector(self, vector):
        """Matrix-vector product as a tuple of rationals."""
        vec = [as_rational(v) for v in vector]
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        out = []
        for row in self._rows:
            acc = _QZERO
            for x, v in zip(row, vec):
                if x and v:
                    acc += x * v
            out.append(acc)
        return tuple(out)

    # -- elimination ---------------------------------------------------

    def _primitive_integer_rows(self):
        """Each row scaled by a positive rational to a primitive integer row."""
        out = []
        for row in self._rows:
            den = _mpz(1)
            for x in row:
                if x:
                    den = _lcm(den, x.denominator)
            ints = [
                _mpz(x.numerator) * (den // x.denominator) if x else _mpz(0)
                for x in row
            ]
            content = _mpz(0)
            for v in ints:
                if v:
                    content = _gcd(content, v)
                    if content == 1:
                        break
            if content > 1:
                ints = [v // content for v in ints]
            out.append(ints)
        return out

    def _echelon(self):
        """Fraction-free forward elimination.

        Returns (echelon_rows, pivot_cols); echelon_rows are integer rows,
        row k having its pivot in column pivot_cols[k].
        """
        m = self._primitive_integer_rows()
        nrows, ncols = self.rows, self.cols
        pivot_cols = []
        piv = 0
        prev = _mpz(1)
        for col in range(ncols):
            pr = None
            for r in range(piv, nrows):
                if m[r][col]:
                    pr = r
                    break
            if pr is None:
                continue
            if pr != piv:
                m[piv], m[pr] = m[pr], m[piv]
            prow = m[piv]
            p = prow[col]
            for r in range(piv + 1, nrows):
                row = m[r]
                f = row[col]
                if f:
                    for c in range(col + 1, ncols):
                        row[c] = (p * row[c] - f * prow[c]) // prev
                    row[col] = _mpz(0)
                else:
                    # The determinant update must touch every row below the
                    # pivot, or later exact divisions break.
                    for c in range(col + 1, ncols):
                        if row[c]:
                            row[c] = (p * row[c]) // prev
            pivot_cols.append(col)
            prev = p
            piv += 1
            if piv == nrows:
                break
        return m, pivot_cols

    def rank(self):
        """Exact rank over the rationals."""
        if self.rows == 0 or self.cols == 0:
            return 0
        return len(self._echelon()[1])

    def nullspace(self):
        """Deterministic kernel basis.

        Returns ``cols - rank`` vectors (tuples of rationals), one per free
        column, the standard echelon basis: the free coordinate is 1, all
        other free coordinates 0, pivot coordinates solved exactly by back
        substitution.
        """
        ncols = self.cols
        if ncols == 0:
            return []
        if self.rows == 0:
            ech, pivot_cols = [], []
        else:
            ech, pivot_cols = self._echelon()
        pivot_set = set(pivot_cols)
        basis = []
        for free in range(ncols):
            if free in pivot_set:
                continue
            v = [_QZERO] * ncols
            v[free] = _QONE
            for k in range(len(pivot_cols) - 1, -1, -1):
                pc = pivot_cols[k]
                row = ech[k]
                acc = _QZERO
                for c in range(pc + 1, ncols):
                    rc = row[c]
                    if rc and v[c]:
                        acc += rational(rc) * v[c]
                v[pc] = -acc / rational(row[pc])
            basis.append(tuple(v))
        return basis
