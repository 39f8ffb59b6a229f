import logging
from fractions import Fraction
from math import gcd

import numpy

from .errors import CharacteristicException, DimensionException, FieldException
from .matrix import Matrix, Shape, kron_power, unvec
from .rankone import is_symmetric, rank, rank_one_factor
from .rearrange import rearrange_j, rearrange_r, rearrange_sum
from .scalars import COMPLEX, DEFAULT_TOLERANCE, REAL, FieldElement, char_divides, kth_root_scalar

log = logging.getLogger(__name__)

FOUND = "found"
FOUND_COMPLEX_ONLY = "found_complex_only"
NOT_A_KRONECKER_POWER = "not_a_kronecker_power"
NO_ROOT_IN_FIELD = "no_root_in_field"
CHARACTERISTIC_OBSTRUCTION = "characteristic_obstruction"
ZERO_MATRIX = "zero_matrix"

STATUSES = [FOUND, FOUND_COMPLEX_ONLY, NOT_A_KRONECKER_POWER, NO_ROOT_IN_FIELD,
            CHARACTERISTIC_OBSTRUCTION, ZERO_MATRIX]


class Ambiguity(object):
    """
        How far an extracted root is determined: uniquely, up to sign, or up
        to multiplication by one of ``count`` roots of unity.
    """

    def __init__(self, kind, count):
        self._kind = kind
        self._count = count

    @property
    def kind(self):
        return self._kind

    @property
    def count(self):
        return self._count

    def __eq__(self, other):
        if not isinstance(other, Ambiguity):
            return NotImplemented
        return (self._kind, self._count) == (other.kind, other.count)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._kind, self._count))

    def __repr__(self):
        return "Ambiguity('{0}', {1})".format(self._kind, self._count)

    def __str__(self):
        if self._kind == "roots_of_unity":
            return "roots-of-unity-{0}".format(self._count)
        return self._kind


UNIQUE = Ambiguity("unique", 1)
SIGN_PAIR = Ambiguity("sign", 2)


def roots_of_unity(count):
    return Ambiguity("roots_of_unity", count)


def ambiguity_for(field, k):
    """
        The ambiguity class of a k-th Kronecker root over ``field``.

        Over GF(p) the class has gcd(k, p - 1) members.
    """
    if k == 1:
        return UNIQUE
    if field.is_ordered:
        return SIGN_PAIR if k % 2 == 0 else UNIQUE
    count = k if field.name == "complex" else gcd(k, field.modulus - 1)
    if count == 1:
        return UNIQUE
    if count == 2:
        return SIGN_PAIR
    return roots_of_unity(count)


class SquareRootCertificate(object):
    """
        The quantities a Kronecker square root decision rests on: R(M), its
        symmetry, rank and trace, plus the rank of R^sum(M) when the field
        characteristic is not 2.
    """

    def __init__(self, rearr, symmetric, rank, trace, sum_rank=None):
        self._certificate = {
            "rearr": rearr,
            "symmetric": symmetric,
            "rank": rank,
            "trace": trace,
            "sum_rank": sum_rank,
        }

    @property
    def rearr(self):
        return self._certificate["rearr"]

    @property
    def symmetric(self):
        return self._certificate["symmetric"]

    @property
    def rank(self):
        return self._certificate["rank"]

    @property
    def trace(self):
        return self._certificate["trace"]

    @property
    def sum_rank(self):
        return self._certificate["sum_rank"]

    @property
    def holds(self):
        """
            True when R(M) is symmetric and has rank one.
        """
        return self.symmetric and self.rank == 1

    def __repr__(self):
        return ("SquareRootCertificate(symmetric={0}, rank={1}, trace={2}, sum_rank={3})"
                .format(self.symmetric, self.rank, self.trace, self.sum_rank))


class PowerCertificate(object):
    """
        Rank of R^(1)(M) and, when the field characteristic does not divide
        k, rank of R^sum(M).
    """

    def __init__(self, rearr, rank, sum_rank=None):
        self._certificate = {"rearr": rearr, "rank": rank, "sum_rank": sum_rank}

    @property
    def rearr(self):
        return self._certificate["rearr"]

    @property
    def rank(self):
        return self._certificate["rank"]

    @property
    def sum_rank(self):
        return self._certificate["sum_rank"]

    def __repr__(self):
        return "PowerCertificate(rank={0}, sum_rank={1})".format(self.rank, self.sum_rank)


class RootOutcome(object):
    """
        Result of a Kronecker root extraction.

        >>> A = Matrix([[1, 2]])
        >>> outcome = kth_root(kron_power(A, 3), Shape(1, 2, 3))
        >>> outcome.status
        'found'
        >>> outcome.root == A
        True
        >>> outcome.roots == [A]
        True
    """

    def __init__(self, **kwargs):
        kwargs.setdefault("root", None)
        kwargs.setdefault("ambiguity", None)
        kwargs.setdefault("certificate", None)
        self._outcome = kwargs

    @property
    def status(self):
        return self._outcome["status"]

    @property
    def k(self):
        return self._outcome["k"]

    @property
    def root(self):
        """
            The extracted root; a complex matrix for FOUND_COMPLEX_ONLY and
            the zero matrix for ZERO_MATRIX. None for refusals.
        """
        return self._outcome["root"]

    @property
    def ambiguity(self):
        return self._outcome["ambiguity"]

    @property
    def certificate(self):
        return self._outcome["certificate"]

    @property
    def found(self):
        return self.status == FOUND

    @property
    def roots(self):
        """
            Every member of the ambiguity class of the root: root * w for
            each w with w^k = 1 in the root's field.
        """
        if self.root is None:
            return []
        if self.status == ZERO_MATRIX:
            return [self.root]
        units = kth_root_scalar(FieldElement(self.root.field, 1), self.k)
        return [self.root * unit for unit in units]

    def __repr__(self):
        return "RootOutcome(status='{0}', k={1}, ambiguity={2})".format(self.status, self.k,
                                                                       self.ambiguity)


def verify_power(M, A, k, tol=DEFAULT_TOLERANCE):
    """
        True iff A (x) ... (x) A (k factors) equals M, exactly for exact
        fields and within tol * max(1, max|M|) for floating ones. A real
        matrix and a complex one are compared as complex matrices.
    """
    if k < 1:
        raise DimensionException("k must be a positive integer, not {0}".format(k))
    if M.shape != (A.rows ** k, A.cols ** k):
        raise DimensionException("A {0}x{1} matrix cannot be a power {2} of a {3}x{4} matrix"
                                 .format(M.rows, M.cols, k, A.rows, A.cols))
    if M.field != A.field:
        if not (M.field.is_floating and A.field.is_floating):
            raise FieldException("Cannot compare a {0} matrix with a power of a {1} matrix"
                                 .format(M.field, A.field))
        M = M.convert(COMPLEX)
        A = A.convert(COMPLEX)
    return kron_power(A, k).equals(M, tol)


def check_square(M, m, n, tol=DEFAULT_TOLERANCE):
    """
        Report R(M), whether it is symmetric, its rank and its trace. No
        decision is taken.

        :param M: m^2 x n^2 :class:`kronroot.matrix.Matrix`
    """
    shape = Shape(m, n, 2)
    shape.check(M)
    rearranged = rearrange_r(M, m, n)
    sum_rank = None
    if not char_divides(M.field, 2):
        sum_rank = rank(rearrange_sum(M, shape), tol)
    return SquareRootCertificate(rearr=rearranged,
                                 symmetric=is_symmetric(rearranged, tol),
                                 rank=rank(rearranged, tol),
                                 trace=rearranged.trace(),
                                 sum_rank=sum_rank)


def check_power(M, shape, tol=DEFAULT_TOLERANCE):
    """
        Report the rank of R^(1)(M) and, when the characteristic does not
        divide k, the rank of R^sum(M).
    """
    shape.check(M)
    rearranged = rearrange_j(M, shape, 1)
    sum_rank = None
    if not char_divides(M.field, shape.k):
        sum_rank = rank(rearrange_sum(M, shape), tol)
    return PowerCertificate(rearr=rearranged, rank=rank(rearranged, tol), sum_rank=sum_rank)


def check_sum_rank(M, shape, tol=DEFAULT_TOLERANCE):
    """
        Rank of R^sum(M) and whether it is one. A nonzero k-th Kronecker
        power always has a rank one R^sum(M) when the characteristic does
        not divide k.

        :returns: (rank, rank_one)

        Raises a CharacteristicException when the characteristic divides k.
    """
    shape.check(M)
    if char_divides(M.field, shape.k):
        raise CharacteristicException("The characteristic {0} of the {1} field divides k={2}"
                                      .format(M.field.characteristic, M.field, shape.k))
    sum_rank = rank(rearrange_sum(M, shape), tol)
    return sum_rank, sum_rank == 1


def factor_ranks(M, shape, tol=DEFAULT_TOLERANCE):
    """
        [rank R^(1)(M), ..., rank R^(k)(M)].
    """
    return [rank(rearrange_j(M, shape, j), tol) for j in range(1, shape.k + 1)]


def _reference_scale(M, power, tol):
    # first entry of the power, row-major, that is not zero
    field = M.field
    threshold = 0 if field.is_exact else tol * power.max_norm()
    for index, value in numpy.ndenumerate(power.array):
        if not field.is_zero(value, threshold):
            return field.div(M.array[index], value)
    return None


def _root_from_scale(M, shape, candidate, scale, tol, certificate):
    # M = scale * (x)^k candidate; look for mu with mu^k = scale
    field = M.field
    k = shape.k
    mus = kth_root_scalar(FieldElement(field, scale), k)
    if mus:
        root = candidate * mus[0]
        if verify_power(M, root, k, tol):
            return RootOutcome(status=FOUND, k=k, root=root,
                               ambiguity=ambiguity_for(field, k), certificate=certificate)
        if field.is_floating:
            log.warning("A root extracted over the %s field failed verification", field)
        else:
            log.debug("candidate root over the %s field does not reproduce M", field)
        return RootOutcome(status=NOT_A_KRONECKER_POWER, k=k, certificate=certificate)

    if field == REAL:
        mu = kth_root_scalar(FieldElement(COMPLEX, scale), k)[0]
        root = candidate.convert(COMPLEX) * mu
        if verify_power(M, root, k, tol):
            log.debug("no real %d-th root of %s, complex root found", k, scale)
            return RootOutcome(status=FOUND_COMPLEX_ONLY, k=k, root=root,
                               ambiguity=ambiguity_for(COMPLEX, k), certificate=certificate)
        log.warning("A complex root extracted from a real matrix failed verification")
        return RootOutcome(status=NOT_A_KRONECKER_POWER, k=k, certificate=certificate)

    log.debug("%s has no %d-th root in the %s field", scale, k, field)
    return RootOutcome(status=NO_ROOT_IN_FIELD, k=k, certificate=certificate)


def square_root(M, m, n, tol=DEFAULT_TOLERANCE, use_sum=False):
    """
        Decide whether M = A (x) A for an m x n matrix A over the field of
        M and extract A.

        :param M: m^2 x n^2 :class:`kronroot.matrix.Matrix`
        :param tol: relative tolerance for floating fields
        :param use_sum: decide with rank R^sum(M) = 1 and take
                        R(M) = R^sum(M) / 2, which needs characteristic != 2.
                        A rank one R^sum(M) does not force R(M) to be
                        symmetric, so the candidate is still verified
        :returns: :class:`RootOutcome` carrying a :class:`SquareRootCertificate`

        R(M) must be symmetric with rank one, R(M) = c vec(A*) vec(A*)^T, and
        the root is sqrt(c) A*. A real M whose R(M) has negative trace only
        has complex roots (FOUND_COMPLEX_ONLY); a rational M needs c to be a
        rational square, a GF(p) matrix needs c to be a square mod p.

        >>> A = Matrix([[1, 2], [3, 4]])
        >>> outcome = square_root(kron(A, A), 2, 2)
        >>> outcome.root in (A, -A)
        True
    """
    shape = Shape(m, n, 2)
    shape.check(M)
    certificate = check_square(M, m, n, tol)
    if M.is_zero():
        return RootOutcome(status=ZERO_MATRIX, k=2, root=Matrix.zeros(m, n, M.field),
                           ambiguity=UNIQUE, certificate=certificate)

    if use_sum:
        if char_divides(M.field, 2):
            return RootOutcome(status=CHARACTERISTIC_OBSTRUCTION, k=2, certificate=certificate)
        holds = certificate.sum_rank == 1
        rearranged = rearrange_sum(M, shape) * Fraction(1, 2)
    else:
        holds = certificate.holds
        rearranged = certificate.rearr
    if not holds:
        log.debug("not a Kronecker square: %r", certificate)
        return RootOutcome(status=NOT_A_KRONECKER_POWER, k=2, certificate=certificate)

    # R = u v^T with u[lead] = 1 and v = c u by symmetry
    factor = rank_one_factor(rearranged, tol)
    scale = factor.v.array[factor.lead, 0]
    candidate = unvec(factor.u, m, n)
    return _root_from_scale(M, shape, candidate, scale, tol, certificate)


def kth_root(M, shape, tol=DEFAULT_TOLERANCE, require_sum_rank=False):
    """
        Decide whether M = A (x) ... (x) A (k factors) for an m x n matrix A
        and extract A.

        :param M: m^k x n^k :class:`kronroot.matrix.Matrix`
        :param shape: :class:`kronroot.matrix.Shape` (m, n, k)
        :param tol: relative tolerance for floating fields
        :param require_sum_rank: refuse matrices whose R^sum is not rank
                                 one before extracting. Gives
                                 CHARACTERISTIC_OBSTRUCTION when the
                                 characteristic divides k
        :returns: :class:`RootOutcome` carrying a :class:`PowerCertificate`

        R^(1)(M) is factored as u v^T, A0 = unvec(u) and M is compared with
        s (x)^k A0. A rank one R^(1)(M) or R^sum(M) does not make M a
        Kronecker power when k >= 3, so the comparison is always made.
    """
    shape.check(M)
    k = shape.k
    field = M.field
    certificate = check_power(M, shape, tol)
    if k == 1:
        return RootOutcome(status=FOUND, k=1, root=M, ambiguity=UNIQUE,
                           certificate=certificate)
    if M.is_zero():
        return RootOutcome(status=ZERO_MATRIX, k=k, root=Matrix.zeros(shape.m, shape.n, field),
                           ambiguity=UNIQUE, certificate=certificate)

    if require_sum_rank:
        if char_divides(field, k):
            return RootOutcome(status=CHARACTERISTIC_OBSTRUCTION, k=k, certificate=certificate)
        if certificate.sum_rank != 1:
            log.debug("R^sum has rank %d", certificate.sum_rank)
            return RootOutcome(status=NOT_A_KRONECKER_POWER, k=k, certificate=certificate)

    factor = rank_one_factor(certificate.rearr, tol)
    if factor.rank != 1:
        return RootOutcome(status=NOT_A_KRONECKER_POWER, k=k, certificate=certificate)

    candidate = unvec(factor.u, shape.m, shape.n)
    power = kron_power(candidate, k)
    scale = _reference_scale(M, power, tol)
    if scale is None or not (power * scale).equals(M, tol):
        log.debug("R^(1) has rank one but M is not a multiple of a Kronecker power")
        return RootOutcome(status=NOT_A_KRONECKER_POWER, k=k, certificate=certificate)
    return _root_from_scale(M, shape, candidate, scale, tol, certificate)
