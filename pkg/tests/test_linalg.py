"""Exact rank and nullspace, cross-checked against an independent
fraction Gauss-Jordan oracle on randomized inputs."""

import random
from fractions import Fraction

from gaussrank import RationalMatrix, rational


def rref_rank_oracle(rows):
    """Plain Gauss-Jordan over Fraction; independent of the package."""
    m = [[Fraction(int(x.numerator), int(x.denominator)) for x in row] for row in rows]
    if not m:
        return 0
    ncols = len(m[0])
    piv = 0
    for c in range(ncols):
        pr = next((r for r in range(piv, len(m)) if m[r][c]), None)
        if pr is None:
            continue
        m[piv], m[pr] = m[pr], m[piv]
        pv = m[piv][c]
        m[piv] = [x / pv for x in m[piv]]
        for r in range(len(m)):
            if r != piv and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[piv])]
        piv += 1
        if piv == len(m):
            break
    return piv


def random_matrix(rng, rows, cols, low_rank=False):
    def q():
        return rational(rng.randint(-6, 6), rng.randint(1, 4))

    if low_rank and rows > 1 and cols > 1:
        k = rng.randint(1, min(rows, cols) - 1)
        left = [[q() for _ in range(k)] for _ in range(rows)]
        right = [[q() for _ in range(cols)] for _ in range(k)]
        data = [
            [sum(left[i][t] * right[t][j] for t in range(k)) for j in range(cols)]
            for i in range(rows)
        ]
        return RationalMatrix(data)
    return RationalMatrix([[q() for _ in range(cols)] for _ in range(rows)])


def test_rank_identity():
    assert RationalMatrix.identity(3).rank() == 3


def test_rank_zero_matrix():
    assert RationalMatrix.zero(4, 2).rank() == 0


def test_nullspace_identity_empty():
    assert RationalMatrix.identity(3).nullspace() == []


def test_nullspace_one_one():
    vecs = RationalMatrix([[1, 1]]).nullspace()
    assert len(vecs) == 1
    v = vecs[0]
    # proportional to (1, -1); the echelon normalization puts 1 last
    assert v == (rational(-1), rational(1))


def test_shape_and_entries():
    m = RationalMatrix([[1, 2], [3, 4], [5, 6]])
    assert (m.rows, m.cols) == (3, 2)
    assert m.entries == tuple(rational(k) for k in (1, 2, 3, 4, 5, 6))
    assert m[2, 1] == rational(6)
    assert m.transpose().rows == 2


def test_from_entries_roundtrip():
    m = RationalMatrix.from_entries(2, 2, [1, 2, 3, 4])
    assert m == RationalMatrix([[1, 2], [3, 4]])


def test_known_rank_two():
    m = RationalMatrix([[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert m.rank() == 2
    vecs = m.nullspace()
    assert len(vecs) == 1
    assert m.mul_vector(vecs[0]) == (rational(0),) * 3


def test_rank_matches_oracle_randomized():
    rng = random.Random(20240811)
    for case in range(120):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = random_matrix(rng, rows, cols, low_rank=case % 2 == 0)
        rows = [m.row(i) for i in range(m.rows)]
        assert m.rank() == rref_rank_oracle(rows), rows


def test_nullspace_membership_and_count_randomized():
    rng = random.Random(77)
    for case in range(120):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        m = random_matrix(rng, rows, cols, low_rank=case % 3 == 0)
        vecs = m.nullspace()
        assert len(vecs) == m.cols - m.rank()
        zero = (rational(0),) * m.rows
        for v in vecs:
            assert m.mul_vector(v) == zero


def test_rank_invariant_under_permutation_and_scaling():
    rng = random.Random(4242)
    for _ in range(120):
        rows = rng.randint(2, 6)
        cols = rng.randint(2, 6)
        m = random_matrix(rng, rows, cols, low_rank=True)
        r = m.rank()
        perm = list(range(rows))
        rng.shuffle(perm)
        scaled = []
        for i in perm:
            c = rational(rng.choice([1, 2, 3, -1, -2]), rng.choice([1, 2]))
            scaled.append([c * x for x in m.row(i)])
        shuffled = RationalMatrix(scaled)
        assert shuffled.rank() == r
        cperm = list(range(cols))
        rng.shuffle(cperm)
        colperm = RationalMatrix([[m.row(i)[j] for j in cperm] for i in range(rows)])
        assert colperm.rank() == r


def test_rank_monotone_in_column_prefix():
    # adding columns can only keep or raise the rank
    rng = random.Random(9090)
    for _ in range(120):
        rows = rng.randint(1, 6)
        cols = rng.randint(2, 7)
        m = random_matrix(rng, rows, cols, low_rank=True)
        ranks = [
            RationalMatrix([m.row(i)[:k] for i in range(rows)]).rank()
            for k in range(1, cols + 1)
        ]
        assert all(a <= b for a, b in zip(ranks, ranks[1:]))
        assert ranks[-1] == m.rank()


def test_rank_equals_transpose_rank():
    rng = random.Random(1312)
    for _ in range(100):
        m = random_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
        assert m.rank() == m.transpose().rank()


def test_nullspace_deterministic():
    rng = random.Random(5150)
    m = random_matrix(rng, 5, 7, low_rank=True)
    first = m.nullspace()
    second = RationalMatrix([m.row(i) for i in range(m.rows)]).nullspace()
    assert first == second


def test_huge_entries_stay_exact():
    big = 10 ** 40
    m = RationalMatrix(
        [
            [rational(big, 7), rational(big + 1, 7)],
            [rational(2 * big, 7), rational(2 * big + 2, 7)],
        ]
    )
    assert m.rank() == 2
    singular = RationalMatrix(
        [
            [rational(big, 3), rational(big, 5)],
            [rational(2 * big, 3), rational(2 * big, 5)],
        ]
    )
    assert singular.rank() == 1
    v = singular.nullspace()[0]
    assert singular.mul_vector(v) == (rational(0), rational(0))
