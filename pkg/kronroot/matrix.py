import logging
import numbers

import numpy

from .errors import DimensionException, FieldException, SizeLimitException
from .scalars import DEFAULT_TOLERANCE, RATIONAL, FieldElement

log = logging.getLogger(__name__)

MAX_ENTRIES = 2 ** 24


def check_size(rows, cols):
    """
        Refuse a rows x cols matrix when it would hold more than MAX_ENTRIES
        entries.
    """
    if rows * cols > MAX_ENTRIES:
        raise SizeLimitException("A {0}x{1} matrix exceeds the cap of {2} entries"
                                 .format(rows, cols, MAX_ENTRIES))


class Matrix(object):
    """
        A dense matrix over one field. Matrices are values: they cannot be
        changed after construction and every operation returns a new one.

        Indices are 0-based, ``matrix[i, j]`` returns a
        :class:`kronroot.scalars.FieldElement`.

        >>> A = Matrix([[1, 2], [3, 4]])
        >>> str(A.trace())
        '5'
        >>> Matrix([["1/2", "0"], ["0", "1"]], RATIONAL).rows
        2
    """

    def __init__(self, rows, field=RATIONAL):
        """
            :param rows: a list of rows (each a list of scalars or scalar
                         text) or a 2-D numpy array
            :param field: :class:`kronroot.scalars.FieldKind` of the entries.
                          Defaults to the rationals
        """
        if isinstance(rows, numpy.ndarray):
            data = rows
        else:
            data = numpy.array(rows, dtype=object)
        if data.ndim != 2:
            raise DimensionException("A matrix needs a rectangular list of rows")
        if data.shape[0] < 1 or data.shape[1] < 1:
            raise DimensionException("A matrix needs at least one row and one column")
        check_size(*data.shape)
        self._field = field
        self._data = field.normalize(data)
        self._data.flags.writeable = False

    @classmethod
    def zeros(cls, rows, cols, field=RATIONAL):
        check_size(rows, cols)
        return cls(numpy.zeros((rows, cols), dtype=int), field)

    @classmethod
    def identity(cls, size, field=RATIONAL):
        check_size(size, size)
        return cls(numpy.eye(size, dtype=int), field)

    @classmethod
    def column(cls, values, field=RATIONAL):
        return cls([[value] for value in values], field)

    @property
    def field(self):
        return self._field

    @property
    def rows(self):
        return self._data.shape[0]

    @property
    def cols(self):
        return self._data.shape[1]

    @property
    def shape(self):
        return self._data.shape

    @property
    def array(self):
        """
            The read-only numpy array behind this matrix.
        """
        return self._data

    def __getitem__(self, index):
        if not (isinstance(index, tuple) and len(index) == 2
                and all(isinstance(i, numbers.Integral) for i in index)):
            raise DimensionException("A matrix entry is indexed by (row, column), not {0!r}"
                                     .format(index))
        return FieldElement(self._field, self._data[index])

    def tolist(self):
        return self._data.tolist()

    def _check_conformable(self, other, action):
        if self._field != other.field:
            raise FieldException("Cannot {0} a {1} matrix and a {2} matrix"
                                 .format(action, self._field, other.field))
        if self.shape != other.shape:
            raise DimensionException("Cannot {0} a {1}x{2} matrix and a {3}x{4} matrix"
                                     .format(action, self.rows, self.cols,
                                             other.rows, other.cols))

    def __add__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_conformable(other, "add")
        return Matrix(self._data + other.array, self._field)

    def __sub__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        self._check_conformable(other, "subtract")
        return Matrix(self._data - other.array, self._field)

    def __neg__(self):
        return Matrix(-self._data, self._field)

    def __mul__(self, scalar):
        if not isinstance(scalar, (FieldElement, numbers.Number)):
            return NotImplemented
        return Matrix(self._data * self._field.coerce(scalar), self._field)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self._field != other.field:
            raise FieldException("Cannot multiply a {0} matrix and a {1} matrix"
                                 .format(self._field, other.field))
        if self.cols != other.rows:
            raise DimensionException("Cannot multiply a {0}x{1} matrix by a {2}x{3} matrix"
                                     .format(self.rows, self.cols, other.rows, other.cols))
        return Matrix(numpy.dot(self._data, other.array), self._field)

    def transpose(self):
        return Matrix(self._data.T, self._field)

    @property
    def T(self):
        return self.transpose()

    def trace(self):
        if self.rows != self.cols:
            raise DimensionException("The trace needs a square matrix, got {0}x{1}"
                                     .format(self.rows, self.cols))
        return FieldElement(self._field, numpy.trace(self._data))

    def is_zero(self):
        """
            True when every entry is exactly zero.
        """
        return bool(numpy.all(self._data == 0))

    def max_norm(self):
        """
            The largest entry magnitude. Over GF(p) this is the largest
            residue, which only says whether the matrix is zero.
        """
        return float(numpy.max(numpy.abs(self._data)))

    def equals(self, other, tol=DEFAULT_TOLERANCE):
        """
            Entrywise equality. Exact fields compare exactly, floating fields
            accept max|self - other| <= tol * max(1, max|self|).
        """
        if self._field != other.field or self.shape != other.shape:
            return False
        if self._field.is_exact:
            return bool(numpy.array_equal(self._data, other.array))
        difference = float(numpy.max(numpy.abs(self._data - other.array)))
        return difference <= tol * max(1.0, self.max_norm())

    def convert(self, field):
        """
            The same entries read in another field, e.g. a real matrix as a
            complex one. Values that do not fit raise a FieldException.
        """
        if field == self._field:
            return self
        return Matrix(self._data, field)

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (self._field == other.field and self.shape == other.shape and
                bool(numpy.array_equal(self._data, other.array)))

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._field, self.shape, tuple(self._data.ravel().tolist())))

    def __repr__(self):
        rows = ["[" + ", ".join(self._field.format(x) for x in row) + "]"
                for row in self._data]
        return "Matrix({0}, {1}x{2}, [{3}])".format(self._field, self.rows, self.cols,
                                                    ", ".join(rows))


class Shape(object):
    """
        The shape (m, n, k) of a k-fold Kronecker power of m x n factors.
        Such a matrix has m^k rows and n^k columns.

        >>> Shape(2, 3, 2).rows, Shape(2, 3, 2).cols
        (4, 9)
    """

    def __init__(self, m, n, k=2):
        for name, value in (("m", m), ("n", n), ("k", k)):
            if isinstance(value, bool) or not isinstance(value, numbers.Integral) or value < 1:
                raise DimensionException("{0} must be a positive integer, not {1!r}"
                                         .format(name, value))
        self._m = int(m)
        self._n = int(n)
        self._k = int(k)

    @property
    def m(self):
        return self._m

    @property
    def n(self):
        return self._n

    @property
    def k(self):
        return self._k

    @property
    def rows(self):
        return self._m ** self._k

    @property
    def cols(self):
        return self._n ** self._k

    @property
    def rearranged(self):
        """
            Shape (mn, (mn)^(k-1)) of every rearrangement of such a matrix.
        """
        size = self._m * self._n
        return size, size ** (self._k - 1)

    def check(self, matrix):
        if matrix.shape != (self.rows, self.cols):
            raise DimensionException(
                "Expected a {0}x{1} matrix for {2}x{3} factors and k={4}, got {5}x{6}"
                .format(self.rows, self.cols, self._m, self._n, self._k,
                        matrix.rows, matrix.cols))

    def check_rearranged(self, matrix):
        if matrix.shape != self.rearranged:
            rows, cols = self.rearranged
            raise DimensionException(
                "Expected a {0}x{1} rearranged matrix for {2}x{3} factors and k={4}, got {5}x{6}"
                .format(rows, cols, self._m, self._n, self._k, matrix.rows, matrix.cols))

    def __eq__(self, other):
        if not isinstance(other, Shape):
            return NotImplemented
        return (self._m, self._n, self._k) == (other.m, other.n, other.k)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._m, self._n, self._k))

    def __repr__(self):
        return "Shape(m={0}, n={1}, k={2})".format(self._m, self._n, self._k)


def kron(A, B):
    """
        The Kronecker product A (x) B, with
        (A (x) B)[i*s + p, j*t + q] = A[i, j] * B[p, q] for an s x t matrix B.
    """
    if A.field != B.field:
        raise FieldException("Cannot take the Kronecker product of a {0} matrix and a {1} matrix"
                             .format(A.field, B.field))
    check_size(A.rows * B.rows, A.cols * B.cols)
    return Matrix(numpy.kron(A.array, B.array), A.field)


def kron_power(A, k):
    """
        The k-th Kronecker power A (x) ... (x) A, folded from the left.
        The size cap is checked before anything is built.
    """
    if isinstance(k, bool) or not isinstance(k, numbers.Integral) or k < 1:
        raise DimensionException("k must be a positive integer, not {0!r}".format(k))
    check_size(A.rows ** k, A.cols ** k)
    log.debug("power %d of a %dx%d %s matrix", k, A.rows, A.cols, A.field)
    result = A
    for _ in range(k - 1):
        result = kron(result, A)
    return result


def vec(A):
    """
        Stack the columns of A into one mn x 1 column, so that
        vec(A)[i + j*m] = A[i, j].
    """
    return Matrix(A.array.reshape(-1, 1, order="F"), A.field)


def unvec(v, m, n):
    """
        The m x n matrix whose vec is the column v.
    """
    if v.cols != 1 or v.rows != m * n:
        raise DimensionException("Cannot unvec a {0}x{1} matrix into {2}x{3}"
                                 .format(v.rows, v.cols, m, n))
    return Matrix(v.array.reshape(m, n, order="F"), v.field)
