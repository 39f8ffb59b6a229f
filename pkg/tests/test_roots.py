from fractions import Fraction

import numpy
import pytest

from kronroot import Matrix, Shape, kron, kron_power
from kronroot import roots
from kronroot.errors import CharacteristicException, DimensionException, FieldException
from kronroot.rankone import is_symmetric, rank
from kronroot.rearrange import rearrange_r, rearrange_sum
from kronroot.roots import (CHARACTERISTIC_OBSTRUCTION, FOUND, FOUND_COMPLEX_ONLY,
                            NO_ROOT_IN_FIELD, NOT_A_KRONECKER_POWER, SIGN_PAIR, UNIQUE,
                            ZERO_MATRIX, ambiguity_for, check_power, check_square,
                            check_sum_rank, factor_ranks, kth_root, roots_of_unity, square_root,
                            verify_power)
from kronroot.scalars import COMPLEX, RATIONAL, REAL, gf
from . import (all_matrices, kronecker_squares, random_matrix, random_nonzero_matrix)


def unit(rows, cols, i, j, field=RATIONAL):
    data = numpy.zeros((rows, cols), dtype=int)
    data[i, j] = 1
    return Matrix(data, field)


def test_check_square_of_a_square(sample_square):
    certificate = check_square(sample_square, 2, 2)
    assert certificate.symmetric
    assert certificate.rank == 1
    assert certificate.trace == 30
    assert certificate.sum_rank == 1
    assert certificate.holds


def test_check_square_of_a_negated_square(sample_square):
    certificate = check_square(-sample_square.convert(REAL), 2, 2)
    assert certificate.symmetric
    assert certificate.rank == 1
    assert certificate.trace.value == pytest.approx(-30)


def test_check_square_of_unit_matrices():
    # the unit matrix at (0, 3) is E_01 (x) E_01
    certificate = check_square(unit(4, 4, 0, 3), 2, 2)
    assert certificate.symmetric
    assert certificate.rank == 1
    certificate = check_square(unit(4, 4, 0, 1), 2, 2)
    assert not certificate.symmetric
    assert certificate.rank == 1
    assert certificate.sum_rank == 2
    assert not certificate.holds


def test_check_square_leaves_out_the_sum_in_characteristic_two():
    A = Matrix([[1, 0], [1, 1]], gf(2))
    certificate = check_square(kron(A, A), 2, 2)
    assert certificate.holds
    assert certificate.sum_rank is None


def test_check_square_checks_dimensions(sample):
    with pytest.raises(DimensionException):
        check_square(sample, 2, 2)


def test_square_root_over_the_rationals(sample, sample_square):
    outcome = square_root(sample_square, 2, 2)
    assert outcome.status == FOUND
    assert outcome.found
    assert outcome.root in (sample, -sample)
    assert outcome.ambiguity == SIGN_PAIR
    assert set(outcome.roots) == {sample, -sample}


def test_square_root_of_the_identity():
    outcome = square_root(Matrix.identity(4), 2, 2)
    assert outcome.status == FOUND
    assert outcome.root in (Matrix.identity(2), -Matrix.identity(2))
    assert outcome.certificate.trace == 2


def test_square_root_of_a_rectangular_square():
    A = Matrix([[1, Fraction(1, 2), 0], [-2, 3, 5]])
    outcome = square_root(kron(A, A), 2, 3)
    assert outcome.status == FOUND
    assert outcome.root in (A, -A)


def test_square_root_of_zero():
    outcome = square_root(Matrix.zeros(4, 9), 2, 3)
    assert outcome.status == ZERO_MATRIX
    assert outcome.root == Matrix.zeros(2, 3)
    assert outcome.ambiguity == UNIQUE
    assert outcome.roots == [outcome.root]


def test_square_root_needs_a_rational_scale(sample_square):
    outcome = square_root(sample_square * 2, 2, 2)
    assert outcome.status == NO_ROOT_IN_FIELD
    assert outcome.root is None
    assert outcome.roots == []


def test_square_root_of_a_negated_rational_square(sample_square):
    outcome = square_root(-sample_square, 2, 2)
    assert outcome.status == NO_ROOT_IN_FIELD
    assert outcome.certificate.trace == -30


def test_square_root_of_a_negated_real_square_is_complex(sample, sample_square):
    M = -sample_square.convert(REAL)
    outcome = square_root(M, 2, 2)
    assert outcome.status == FOUND_COMPLEX_ONLY
    assert outcome.root.field == COMPLEX
    assert verify_power(M, outcome.root, 2)
    expected = sample.convert(COMPLEX) * 1j
    assert outcome.root.equals(expected) or outcome.root.equals(-expected)


def test_square_root_refuses_non_squares():
    A = Matrix([[1, 2], [3, 4]])
    B = Matrix([[0, 1], [1, 0]])
    outcome = square_root(kron(A, B), 2, 2)
    assert outcome.status == NOT_A_KRONECKER_POWER
    assert outcome.root is None
    assert not outcome.certificate.symmetric


def test_square_root_over_gf5():
    A = Matrix([[1, 2], [3, 4]], gf(5))
    outcome = square_root(kron(A, A) * 4, 2, 2)
    assert outcome.status == FOUND
    assert outcome.root in (A * 2, A * 3)
    assert square_root(kron(A, A) * 2, 2, 2).status == NO_ROOT_IN_FIELD


def test_square_root_from_the_sum(sample, sample_square):
    outcome = square_root(sample_square, 2, 2, use_sum=True)
    assert outcome.status == FOUND
    assert outcome.root in (sample, -sample)
    mixed = kron(sample, Matrix([[0, 1], [1, 0]]))
    assert square_root(mixed, 2, 2, use_sum=True).status == NOT_A_KRONECKER_POWER


def test_square_root_from_the_sum_verifies_its_candidate():
    # R^sum has rank one although R is not symmetric
    M = Matrix([[1, 1, -1, 0]])
    assert check_sum_rank(M, Shape(1, 2, 2)) == (1, True)
    assert not check_square(M, 1, 2).symmetric
    assert square_root(M, 1, 2, use_sum=True).status == NOT_A_KRONECKER_POWER
    assert square_root(M, 1, 2).status == NOT_A_KRONECKER_POWER


def test_square_root_from_the_sum_in_characteristic_two():
    A = Matrix([[1, 1], [0, 1]], gf(2))
    outcome = square_root(kron(A, A), 2, 2, use_sum=True)
    assert outcome.status == CHARACTERISTIC_OBSTRUCTION
    assert square_root(kron(A, A), 2, 2).status == FOUND


def test_every_found_root_is_verified(mocker, sample_square):
    spy = mocker.spy(roots, "verify_power")
    outcome = square_root(sample_square, 2, 2)
    assert outcome.status == FOUND
    spy.assert_called_once_with(sample_square, outcome.root, 2, roots.DEFAULT_TOLERANCE)
    spy.reset_mock()
    outcome = kth_root(kron_power(Matrix([[1, 2]]), 3), Shape(1, 2, 3))
    assert outcome.status == FOUND
    assert spy.call_count == 1


def test_kth_root_of_a_cube():
    A = Matrix([[1, 2]])
    outcome = kth_root(kron_power(A, 3), Shape(1, 2, 3))
    assert outcome.status == FOUND
    assert outcome.root == A
    assert outcome.ambiguity == UNIQUE
    assert outcome.certificate.rank == 1
    assert outcome.certificate.sum_rank == 1


def test_kth_root_of_the_remark_matrix(remark):
    shape = Shape(1, 2, 3)
    assert check_sum_rank(remark, shape) == (1, True)
    assert factor_ranks(remark, shape) == [1, 2, 2]
    outcome = kth_root(remark, shape)
    assert outcome.status == NOT_A_KRONECKER_POWER
    assert outcome.root is None
    outcome = kth_root(remark, shape, require_sum_rank=True)
    assert outcome.status == NOT_A_KRONECKER_POWER


def test_kth_root_with_k_one(sample):
    outcome = kth_root(sample, Shape(2, 2, 1))
    assert outcome.status == FOUND
    assert outcome.root == sample
    assert outcome.roots == [sample]


def test_kth_root_of_a_one_by_one_power_of_high_order():
    outcome = kth_root(Matrix([[4]]), Shape(1, 1, 40))
    assert outcome.status == NO_ROOT_IN_FIELD
    outcome = kth_root(Matrix([[1]]), Shape(1, 1, 40))
    assert outcome.status == FOUND
    assert outcome.root == Matrix([[1]])
    assert outcome.ambiguity == SIGN_PAIR
    assert outcome.certificate.sum_rank == 1


def test_kth_root_of_zero():
    outcome = kth_root(Matrix.zeros(8, 1), Shape(2, 1, 3))
    assert outcome.status == ZERO_MATRIX
    assert outcome.root == Matrix.zeros(2, 1)


def test_kth_root_of_a_negated_real_cube(sample):
    A = sample.convert(REAL)
    outcome = kth_root(-kron_power(A, 3), Shape(2, 2, 3))
    assert outcome.status == FOUND
    assert outcome.root.equals(-A)
    assert outcome.ambiguity == UNIQUE


def test_kth_root_of_a_negated_real_fourth_power():
    A = Matrix([[1.0, -0.5]], REAL)
    M = -kron_power(A, 4)
    outcome = kth_root(M, Shape(1, 2, 4))
    assert outcome.status == FOUND_COMPLEX_ONLY
    assert verify_power(M, outcome.root, 4)
    assert outcome.ambiguity == roots_of_unity(4)


def test_kth_root_over_the_complex_numbers(rng):
    A = random_nonzero_matrix(rng, 2, 2, COMPLEX)
    M = kron_power(A, 3)
    outcome = kth_root(M, Shape(2, 2, 3))
    assert outcome.status == FOUND
    assert outcome.ambiguity == roots_of_unity(3)
    assert len(outcome.roots) == 3
    for root in outcome.roots:
        assert verify_power(M, root, 3)


def test_kth_root_over_gf2_uses_the_first_rearrangement():
    A = Matrix([[1, 1], [0, 1]], gf(2))
    M = kron(A, A)
    assert rearrange_sum(M, Shape(2, 2, 2)).is_zero()
    outcome = kth_root(M, Shape(2, 2, 2))
    assert outcome.status == FOUND
    assert outcome.root == A


def test_kth_root_filter_in_dividing_characteristic():
    A = Matrix([[1, 2]], gf(3))
    M = kron_power(A, 3)
    assert kth_root(M, Shape(1, 2, 3)).status == FOUND
    outcome = kth_root(M, Shape(1, 2, 3), require_sum_rank=True)
    assert outcome.status == CHARACTERISTIC_OBSTRUCTION
    assert outcome.certificate.sum_rank is None


def test_kth_root_filter_refuses_high_sum_rank(sample):
    M = kron(sample, Matrix([[0, 1], [1, 0]]))
    outcome = kth_root(M, Shape(2, 2, 2), require_sum_rank=True)
    assert outcome.status == NOT_A_KRONECKER_POWER
    assert outcome.certificate.sum_rank == 2


def test_check_sum_rank_of_a_product_of_different_factors(sample):
    assert check_sum_rank(kron(sample, Matrix([[0, 1], [1, 0]])), Shape(2, 2, 2)) == (2, False)


def test_check_sum_rank_in_characteristic_two():
    A = Matrix([[1, 0], [1, 1]], gf(2))
    with pytest.raises(CharacteristicException) as e:
        check_sum_rank(kron(A, A), Shape(2, 2, 2))
    assert str(e.value) == ("Message: The characteristic 2 of the gf 2 field divides k=2 "
                            "Code: None")


def test_check_power(remark):
    certificate = check_power(remark, Shape(1, 2, 3))
    assert certificate.rank == 1
    assert certificate.sum_rank == 1
    assert certificate.rearr.tolist() == [[1, -1, 1, 0], [0, 0, 0, 0]]


def test_verify_power(sample, sample_square):
    assert verify_power(sample_square, sample, 2)
    assert verify_power(sample_square, -sample, 2)
    assert not verify_power(sample_square, sample * 2, 2)


def test_verify_power_checks_dimensions_and_fields(sample, sample_square):
    with pytest.raises(DimensionException):
        verify_power(sample_square, sample, 3)
    with pytest.raises(FieldException):
        verify_power(sample_square, sample.convert(gf(5)), 2)
    assert verify_power(sample_square.convert(REAL), sample.convert(COMPLEX), 2)


def test_ambiguity_classes():
    assert ambiguity_for(RATIONAL, 2) == SIGN_PAIR
    assert ambiguity_for(REAL, 3) == UNIQUE
    assert ambiguity_for(REAL, 4) == SIGN_PAIR
    assert ambiguity_for(COMPLEX, 2) == SIGN_PAIR
    assert ambiguity_for(COMPLEX, 3) == roots_of_unity(3)
    assert ambiguity_for(COMPLEX, 1) == UNIQUE
    assert ambiguity_for(gf(2), 2) == UNIQUE
    assert ambiguity_for(gf(5), 2) == SIGN_PAIR
    assert ambiguity_for(gf(7), 3) == roots_of_unity(3)
    assert ambiguity_for(gf(5), 3) == UNIQUE
    assert str(roots_of_unity(3)) == "roots-of-unity-3"
    assert str(SIGN_PAIR) == "sign"


def test_sum_rearrangement_of_powers_has_rank_one(rng):
    count = 0
    for field in (RATIONAL, gf(5)):
        for m, n in ((2, 2), (1, 3)):
            for k in (2, 3):
                shape = Shape(m, n, k)
                for _ in range(50):
                    A = random_nonzero_matrix(rng, m, n, field)
                    assert check_sum_rank(kron_power(A, k), shape) == (1, True)
                    assert factor_ranks(kron_power(A, k), shape) == [1] * k
                    count += 1
    assert count >= 200


def test_symmetric_rank_one_and_sum_rank_agree(rng):
    shape = Shape(2, 2, 2)
    for field in (RATIONAL, gf(3)):
        for i in range(200):
            if i % 2:
                A = random_nonzero_matrix(rng, 2, 2, field)
                M = kron(A, A)
            else:
                M = random_matrix(rng, 4, 4, field)
            if M.is_zero():
                continue
            R = rearrange_r(M, 2, 2)
            characterized = is_symmetric(R) and rank(R) == 1
            sum_rank, rank_one = check_sum_rank(M, shape)
            if characterized:
                assert rank_one
            if is_symmetric(R):
                assert characterized == rank_one
            if i % 2:
                assert characterized and rank_one


def test_complex_square_roots_recover_the_factor(rng):
    for _ in range(100):
        A = random_nonzero_matrix(rng, 2, 2, COMPLEX)
        M = kron(A, A)
        outcome = square_root(M, 2, 2)
        assert outcome.status == FOUND
        assert outcome.root.equals(A, 1e-8) or outcome.root.equals(-A, 1e-8)
        again = square_root(M, 2, 2)
        assert again.root == outcome.root


def test_real_squares_follow_the_trace_criterion(rng):
    for _ in range(100):
        A = random_nonzero_matrix(rng, 2, 2, REAL)
        M = kron(A, A)
        outcome = square_root(M, 2, 2)
        assert outcome.status == FOUND
        assert outcome.certificate.trace.value > 0

        outcome = square_root(-M, 2, 2)
        assert outcome.status == FOUND_COMPLEX_ONLY
        assert outcome.certificate.trace.value < 0
        assert verify_power((-M).convert(COMPLEX), outcome.root, 2, 1e-8)


def test_gf2_squares_need_the_first_rearrangement():
    shape = Shape(2, 2, 2)
    for A in all_matrices(gf(2), 2, 2):
        M = kron(A, A)
        assert rearrange_sum(M, shape).is_zero()
        with pytest.raises(CharacteristicException):
            check_sum_rank(M, shape)
        outcome = square_root(M, 2, 2)
        assert outcome.status in (FOUND, ZERO_MATRIX)
        assert verify_power(M, outcome.root, 2)


@pytest.mark.parametrize("p", [2, 3])
@pytest.mark.parametrize("m,n", [(1, 2), (2, 2)])
def test_root_decisions_match_exhaustive_search(rng, p, m, n):
    field = gf(p)
    shape = Shape(m, n, 2)
    squares = kronecker_squares(field, m, n)
    candidates = list(squares)
    candidates.extend(random_matrix(rng, shape.rows, shape.cols, field) for _ in range(500))
    for M in candidates:
        expected = M in squares
        for outcome in (kth_root(M, shape), square_root(M, m, n)):
            assert (outcome.status in (FOUND, ZERO_MATRIX)) == expected
            if outcome.status == FOUND:
                assert kron(outcome.root, outcome.root) == M
