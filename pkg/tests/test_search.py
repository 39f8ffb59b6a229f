import pytest

from kronroot import Matrix, RootSearch, kron, kron_power
from kronroot import search
from kronroot.errors import DimensionException, KronRootException
from kronroot.roots import (CHARACTERISTIC_OBSTRUCTION, FOUND, FOUND_COMPLEX_ONLY,
                            NOT_A_KRONECKER_POWER, SquareRootCertificate)
from kronroot.scalars import REAL, gf


def test_we_need_a_shape_before_searching(sample_square):
    with pytest.raises(DimensionException) as e:
        RootSearch(sample_square).search()
    assert str(e.value) == "Message: Call shape() before search() Code: None"


def test_search_methods_chain(sample_square):
    query = RootSearch(sample_square)
    assert query.shape(2, 2) is query
    assert query.tolerance(1e-6) is query
    assert query.require_sum_rank() is query


def test_we_can_search_for_a_square_root(sample, sample_square):
    outcome = RootSearch(sample_square).shape(2, 2).search()
    assert outcome.status == FOUND
    assert outcome.root in (sample, -sample)
    assert isinstance(outcome.certificate, SquareRootCertificate)


def test_square_searches_go_to_square_root(mocker, sample_square):
    spy = mocker.spy(search, "square_root")
    RootSearch(sample_square).shape(2, 2).require_sum_rank().search()
    spy.assert_called_once_with(sample_square, 2, 2, search.DEFAULT_TOLERANCE, use_sum=True)


def test_higher_order_searches_go_to_kth_root(mocker, remark):
    spy = mocker.spy(search, "kth_root")
    outcome = RootSearch(remark).shape(1, 2, 3).search()
    assert outcome.status == NOT_A_KRONECKER_POWER
    assert spy.call_count == 1


def test_we_can_search_for_a_cube_root():
    A = Matrix([[2, -1], [0, 3]], gf(7))
    outcome = RootSearch(kron_power(A, 3)).shape(2, 2, 3).search()
    assert outcome.status == FOUND
    assert kron_power(outcome.root, 3) == kron_power(A, 3)


def test_sum_rank_requirement_over_gf2():
    A = Matrix([[1, 0], [1, 1]], gf(2))
    outcome = RootSearch(kron(A, A)).shape(2, 2).require_sum_rank().search()
    assert outcome.status == CHARACTERISTIC_OBSTRUCTION
    outcome = RootSearch(kron(A, A)).shape(2, 2).require_sum_rank(False).search()
    assert outcome.status == FOUND


def test_tolerance_is_passed_on(sample_square):
    M = -sample_square.convert(REAL)
    outcome = RootSearch(M).shape(2, 2).tolerance(1e-8).search()
    assert outcome.status == FOUND_COMPLEX_ONLY


def test_negative_tolerance_is_refused(sample_square):
    with pytest.raises(KronRootException) as e:
        RootSearch(sample_square).tolerance(-1)
    assert str(e.value) == "Message: The tolerance must not be negative, not -1 Code: None"
