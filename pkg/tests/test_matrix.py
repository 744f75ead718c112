import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from walkpowers.graph import degree_vector
from walkpowers.matrix import (
    MatrixFormatError,
    SymMatrix,
    abs_row_sums,
    adjacency_matrix,
    grand_sum_power,
    parse_matrix,
    random_symmetric_matrix,
    serialize_matrix,
    verify_matrix_inequality,
)
from walkpowers.walks import total_walks
from tests.conftest import graphs

K2 = "2\n0 1\n1 0"
MIXED = "2\n1 -1\n-1 0"


def dense_grand_sum(m, k):
    """Grand sum of A^k by explicit matrix multiplication."""
    n = m.n
    p = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(k):
        p = [[sum(p[i][t] * m.entries[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
    return sum(sum(row) for row in p)


@st.composite
def sym_matrices(draw, max_n=6):
    n = draw(st.integers(1, max_n))
    frac = st.builds(Fraction, st.integers(-3, 3), st.integers(1, 3))
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            rows[i][j] = rows[j][i] = draw(frac)
    return SymMatrix.from_rows(rows)


def test_parse_examples():
    m = parse_matrix(K2)
    assert m.entries == ((0, 1), (1, 0))
    m = parse_matrix(b"# mixed\n" + MIXED.encode())
    assert m.entries == ((1, -1), (-1, 0))


def test_parse_reduces_fractions():
    m = parse_matrix("2\n2/4 -3/6\n-1/2 7")
    assert m.entries[0] == (Fraction(1, 2), Fraction(-1, 2))
    assert m.entries[0][0].denominator == 2


@pytest.mark.parametrize(
    "text, fragment",
    [
        ("2\n0 1\n2 0", "not symmetric at (0,1)/(1,0)"),
        ("2\n0 1/0\n1/0 0", "zero denominator"),
        ("2\n0 a\na 0", "malformed entry"),
        ("2\n0 1\n1", "expected 2 entries"),
        ("2\n0 1", "expected 2 rows"),
        ("x", "malformed dimension"),
        ("", "empty"),
    ],
)
def test_parse_errors(text, fragment):
    with pytest.raises(MatrixFormatError, match=fragment.replace("(", r"\(").replace(")", r"\)")):
        parse_matrix(text)


def test_symmatrix_rejects_asymmetric():
    with pytest.raises(ValueError):
        SymMatrix.from_rows([[0, 1], [2, 0]])


def test_abs_row_sums():
    assert abs_row_sums(parse_matrix(K2)) == [1, 1]
    assert abs_row_sums(parse_matrix(MIXED)) == [2, 1]
    assert abs_row_sums(SymMatrix.from_rows([[0] * 3] * 3)) == [0, 0, 0]


def test_grand_sum_power():
    assert grand_sum_power(parse_matrix(K2), 2) == 2
    assert grand_sum_power(parse_matrix(MIXED), 2) == 1
    assert grand_sum_power(parse_matrix(MIXED), 0) == 2


def test_verify_examples():
    recs = verify_matrix_inequality(parse_matrix(MIXED), 2)
    # k=1 grand sum is 1 - 1 - 1 + 0.
    assert [(r.k, r.grand_sum, r.degree_power_sum, r.holds) for r in recs] == [(1, -1, 3, True), (2, 1, 5, True)]
    recs = verify_matrix_inequality(parse_matrix(K2), 3)
    assert all(r.grand_sum == r.degree_power_sum == 2 and r.equality for r in recs)
    recs = verify_matrix_inequality(SymMatrix.from_rows([[0] * 3] * 3), 4)
    assert all(r.grand_sum == r.degree_power_sum == 0 and r.holds for r in recs)
    with pytest.raises(ValueError):
        verify_matrix_inequality(parse_matrix(K2), 0)


@settings(max_examples=150, deadline=None)
@given(sym_matrices())
def test_generalized_inequality(m):
    d = abs_row_sums(m)
    for rec in verify_matrix_inequality(m, 8):
        assert rec.grand_sum == dense_grand_sum(m, rec.k)
        assert rec.degree_power_sum == sum(x**rec.k for x in d)
        assert rec.holds
    k1 = verify_matrix_inequality(m, 1)[0]
    assert k1.equality == all(x >= 0 for row in m.entries for x in row)


@given(graphs())
def test_adjacency_consistency(g):
    m = adjacency_matrix(g)
    assert abs_row_sums(m) == degree_vector(g)
    for k in range(7):
        assert grand_sum_power(m, k) == total_walks(g, k)


@given(sym_matrices())
def test_serialize_round_trip(m):
    assert parse_matrix(serialize_matrix(m)) == m


def test_random_symmetric_matrix_ranges():
    rng = random.Random(3)
    for _ in range(50):
        m = random_symmetric_matrix(4, rng)
        for row in m.entries:
            for x in row:
                assert abs(x) <= 3 and x.denominator <= 3
