import logging

import numpy

from .errors import DimensionException
from .matrix import Matrix
from .scalars import DEFAULT_TOLERANCE

log = logging.getLogger(__name__)


class RankOneFactorization(object):
    """
        Outcome of a rank-one analysis. When the rank is 1, ``u`` and ``v``
        are columns with M = u v^T, u having 1 as its first nonzero entry
        (at index ``lead``) and v carrying the scale. Otherwise only the rank
        is known.

        >>> factor = rank_one_factor(Matrix([[2, 4], [3, 6]]))
        >>> [str(x) for x in factor.u.array.ravel()]
        ['1', '3/2']
    """

    def __init__(self, rank, u=None, v=None, lead=None):
        self._rank = rank
        self._u = u
        self._v = v
        self._lead = lead

    @property
    def rank(self):
        return self._rank

    @property
    def u(self):
        return self._u

    @property
    def v(self):
        return self._v

    @property
    def lead(self):
        return self._lead

    @property
    def present(self):
        return self._u is not None

    def product(self):
        return outer(self._u, self._v)

    def __repr__(self):
        return "RankOneFactorization(rank={0}, u={1!r}, v={2!r})".format(self._rank, self._u,
                                                                         self._v)


def outer(u, v):
    return u @ v.T


def _echelon_rank(M):
    field = M.field
    rows = M.tolist()
    rank = 0
    for col in range(M.cols):
        pivot = None
        for i in range(rank, M.rows):
            if rows[i][col] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inverse = field.inverse(rows[rank][col])
        for i in range(rank + 1, M.rows):
            if rows[i][col] != 0:
                factor = field.mul(rows[i][col], inverse)
                rows[i] = [field.sub(a, field.mul(factor, b))
                           for a, b in zip(rows[i], rows[rank])]
        rank += 1
        if rank == M.rows:
            break
    return rank


def rank(M, tol=DEFAULT_TOLERANCE):
    """
        Rank of M. Exact fields use Gaussian elimination; floating fields
        count the singular values above tol times the largest one.

        :param M: :class:`kronroot.matrix.Matrix`
        :param tol: relative tolerance, ignored for exact fields
    """
    if M.field.is_exact:
        return _echelon_rank(M)
    if M.is_zero():
        return 0
    singular_values = numpy.linalg.svd(M.array, compute_uv=False)
    return int(numpy.count_nonzero(singular_values > tol * singular_values[0]))


def rank_one_factor(M, tol=DEFAULT_TOLERANCE):
    """
        Factor M = u v^T when its rank is at most one.

        Exact fields cross at the first nonzero entry in row-major order;
        floating fields cross at the largest entry M[i, j], taking
        u = M[:, j] / M[i, j] and v = M[i, :]^T. Either way u is then scaled
        so that its first nonzero entry is 1.
    """
    r = rank(M, tol)
    log.debug("rank %d for a %dx%d %s matrix", r, M.rows, M.cols, M.field)
    if r != 1:
        return RankOneFactorization(r)

    field = M.field
    data = M.array
    if field.is_exact:
        i, j = numpy.argwhere(data != 0)[0]
        threshold = 0
    else:
        i, j = numpy.unravel_index(numpy.argmax(numpy.abs(data)), data.shape)
        threshold = tol

    pivot = data[i, j]
    u = [field.div(x, pivot) for x in data[:, j]]
    v = list(data[i, :])
    lead = next(index for index, x in enumerate(u) if not field.is_zero(x, threshold))
    scale = u[lead]
    u = [field.div(x, scale) for x in u]
    u[lead] = field.one
    v = [field.mul(x, scale) for x in v]
    return RankOneFactorization(1, Matrix.column(u, field), Matrix.column(v, field), lead)


def is_symmetric(M, tol=DEFAULT_TOLERANCE):
    """
        M == M^T, exactly for exact fields and within
        tol * max(1, max|M|) for floating fields.
    """
    if M.rows != M.cols:
        raise DimensionException("A symmetry test needs a square matrix, got {0}x{1}"
                                 .format(M.rows, M.cols))
    return M.equals(M.T, tol)
