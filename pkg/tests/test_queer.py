import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oddtrace.queer import (
    EndElement,
    QueerElement,
    end_mul,
    even_trace,
    odd_trace,
    q1_functional_solution_space,
    queer_mul,
    random_homogeneous_end,
    random_homogeneous_queer,
    supertrace,
)

F = Fraction


# ---------------------------------------------------------------------------
# Oracle: full 2n x 2n block-matrix arithmetic, independent of queer_mul.
# ---------------------------------------------------------------------------

def to_block(e: QueerElement):
    n = e.n
    return [[(e.x[i][j] if j < n else e.y[i][j - n]) if i < n
             else (e.y[i - n][j] if j < n else e.x[i - n][j - n])
             for j in range(2 * n)] for i in range(2 * n)]


def block_mul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


# ---------------------------------------------------------------------------
# queer_mul
# ---------------------------------------------------------------------------

def test_identity_is_two_sided_unit():
    rng = random.Random(7)
    e = random_homogeneous_queer(3, rng)
    one = QueerElement.identity(3)
    assert queer_mul(one, e) == e
    assert queer_mul(e, one) == e


def test_theta_squares_to_identity():
    th = QueerElement.theta(1)
    assert queer_mul(th, th) == QueerElement.identity(1)


def test_queer_mul_matches_block_matrix_oracle():
    rng = random.Random(11)
    for _ in range(20):
        a = random_homogeneous_queer(2, rng)
        b = random_homogeneous_queer(2, rng)
        c = random_homogeneous_queer(2, rng)
        assert to_block(queer_mul(a, b)) == block_mul(to_block(a), to_block(b))
        lhs = queer_mul(queer_mul(a, b), c)
        rhs = queer_mul(a, queer_mul(b, c))
        assert lhs == rhs


def test_queer_mul_size_mismatch():
    with pytest.raises(ValueError):
        queer_mul(QueerElement.identity(2), QueerElement.identity(3))


# ---------------------------------------------------------------------------
# odd_trace
# ---------------------------------------------------------------------------

def test_odd_trace_basic_values():
    assert odd_trace(QueerElement.identity(4)) == 0
    assert odd_trace(QueerElement.theta(1)) == 1


def test_odd_trace_vanishes_on_even_elements():
    rng = random.Random(3)
    for _ in range(20):
        e = random_homogeneous_queer(3, rng)
        if e.is_even:
            assert odd_trace(e) == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4), st.integers(0, 10 ** 6))
def test_odd_trace_supersymmetry(n, seed):
    rng = random.Random(seed)
    a = random_homogeneous_queer(n, rng)
    b = random_homogeneous_queer(n, rng)
    sgn = (-1) ** (a.parity * b.parity)
    assert odd_trace(queer_mul(a, b)) == sgn * odd_trace(queer_mul(b, a))


# ---------------------------------------------------------------------------
# supertrace
# ---------------------------------------------------------------------------

def test_supertrace_identity_2_3():
    assert supertrace(EndElement.identity(2, 3)) == -1


def test_supertrace_vanishes_on_odd_elements():
    rng = random.Random(5)
    for _ in range(30):
        e = random_homogeneous_end(2, 2, rng)
        if e.is_odd:
            assert supertrace(e) == 0


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6))
def test_supertrace_supersymmetry(seed):
    rng = random.Random(seed)
    a = random_homogeneous_end(2, 2, rng)
    b = random_homogeneous_end(2, 2, rng)
    sgn = (-1) ** (a.parity * b.parity)
    assert supertrace(end_mul(a, b)) == sgn * supertrace(end_mul(b, a))


def test_end_blocks_validated():
    with pytest.raises(ValueError):
        EndElement.from_lists(2, 1, [[1, 0], [0, 1]], [[1], [1]], [[1]], [[1]])


# ---------------------------------------------------------------------------
# uniqueness probe on Q_1
# ---------------------------------------------------------------------------

def test_q1_solution_space_is_odd_trace_line():
    rng = random.Random(2024)
    pairs = [(random_homogeneous_queer(1, rng), random_homogeneous_queer(1, rng))
             for _ in range(50)]
    basis = q1_functional_solution_space(pairs)
    assert basis == [(F(0), F(1))]


def test_q1_probe_with_no_constraints_is_full_space():
    assert len(q1_functional_solution_space([])) == 2


def test_even_trace_alone_is_not_supersymmetric():
    th = QueerElement.theta(1)
    # [theta, theta] constraint: tr X(theta^2) - (-1) tr X(theta^2) = 2 != 0
    rows = q1_functional_solution_space([(th, th)])
    assert all(alpha == 0 for alpha, _ in rows)
