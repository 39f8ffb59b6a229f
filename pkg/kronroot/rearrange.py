"""
Rearrangement operators.

An m^k x n^k matrix M is read as a k-fold tensor of m x n factors. Row r
splits into base-m digits (r_1, ..., r_k) and column c into base-n digits
(c_1, ..., c_k), factor 1 being the most significant digit, which matches
the index formula of :func:`kronroot.matrix.kron`.

R^(j) sends A_1 (x) ... (x) A_k to vec(A_j) vec(A_1 (x) .. A_{j-1} (x) A_{j+1} .. (x) A_k)^T,
R is R^(1) for k = 2, and R^sum is the sum of all R^(j).
"""
from fractions import Fraction

import numpy

from .errors import CharacteristicException, DimensionException
from .matrix import Matrix, Shape
from .scalars import char_divides


def _digits(index, base, count):
    digits = []
    for _ in range(count):
        index, digit = divmod(index, base)
        digits.append(digit)
    return digits[::-1]


def _compose(digits, base):
    index = 0
    for digit in digits:
        index = index * base + digit
    return index


class FactorIndexMap(object):
    """
        The bijection between entry positions of an m^k x n^k matrix and
        entry positions of its j-th rearrangement, an mn x (mn)^(k-1)
        matrix. Positions are 0-based.

        >>> FactorIndexMap(Shape(1, 2, 3), 2).target(0, 1)
        (0, 1)
    """

    def __init__(self, shape, j):
        if not 1 <= j <= shape.k:
            raise DimensionException("j must lie in 1..{0}, not {1}".format(shape.k, j))
        self._shape = shape
        self._j = j

    @property
    def shape(self):
        return self._shape

    @property
    def j(self):
        return self._j

    @property
    def _rest(self):
        return [i for i in range(self._shape.k) if i != self._j - 1]

    @property
    def axes(self):
        """
            Axis permutation taking the (r_1..r_k, c_1..c_k) view of M to
            the (c_j, r_j, remaining c digits, remaining r digits) view whose
            row-major flattening is the rearranged matrix.
        """
        k = self._shape.k
        rest = self._rest
        return [k + self._j - 1, self._j - 1] + [k + i for i in rest] + rest

    def target(self, r, c):
        """
            Position (rho, gamma) in R^(j)(M) of the entry M[r, c].
        """
        m, n, k = self._shape.m, self._shape.n, self._shape.k
        if not (0 <= r < self._shape.rows and 0 <= c < self._shape.cols):
            raise DimensionException("({0}, {1}) is outside a {2}x{3} matrix"
                                     .format(r, c, self._shape.rows, self._shape.cols))
        row_digits = _digits(r, m, k)
        col_digits = _digits(c, n, k)
        jj = self._j - 1
        rho = row_digits[jj] + col_digits[jj] * m
        rest_row = _compose([row_digits[i] for i in self._rest], m)
        rest_col = _compose([col_digits[i] for i in self._rest], n)
        return rho, rest_row + rest_col * m ** (k - 1)

    def source(self, rho, gamma):
        """
            Position (r, c) in M of the entry R^(j)(M)[rho, gamma].
        """
        m, n, k = self._shape.m, self._shape.n, self._shape.k
        rows, cols = self._shape.rearranged
        if not (0 <= rho < rows and 0 <= gamma < cols):
            raise DimensionException("({0}, {1}) is outside a {2}x{3} matrix"
                                     .format(rho, gamma, rows, cols))
        col_j, row_j = divmod(rho, m)
        rest_col, rest_row = divmod(gamma, m ** (k - 1))
        row_digits = _digits(rest_row, m, k - 1)
        col_digits = _digits(rest_col, n, k - 1)
        row_digits.insert(self._j - 1, row_j)
        col_digits.insert(self._j - 1, col_j)
        return _compose(row_digits, m), _compose(col_digits, n)

    def _blocked(self):
        # unit axes are left out; numpy allows at most 64 axes and m = n = 1 allows any k
        m, n, k = self._shape.m, self._shape.n, self._shape.k
        sizes = (m,) * k + (n,) * k
        kept = [axis for axis in self.axes if sizes[axis] != 1]
        order = sorted(kept)
        position = dict((axis, i) for i, axis in enumerate(order))
        return [sizes[axis] for axis in order], [position[axis] for axis in kept]

    def apply(self, data):
        sizes, perm = self._blocked()
        if not perm:
            return data.reshape(self._shape.rearranged)
        blocked = data.reshape(sizes)
        return blocked.transpose(perm).reshape(self._shape.rearranged)

    def invert(self, data):
        sizes, perm = self._blocked()
        if not perm:
            return data.reshape(self._shape.rows, self._shape.cols)
        blocked = data.reshape([sizes[i] for i in perm])
        return blocked.transpose(numpy.argsort(perm)).reshape(self._shape.rows,
                                                              self._shape.cols)


def rearrange_j(M, shape, j):
    """
        The j-th rearrangement R^(j)(M) of an m^k x n^k matrix, j in 1..k.

        :param M: :class:`kronroot.matrix.Matrix` of shape m^k x n^k
        :param shape: :class:`kronroot.matrix.Shape` (m, n, k)
        :param j: factor position, 1-based
        :returns: mn x (mn)^(k-1) :class:`kronroot.matrix.Matrix`
    """
    shape.check(M)
    return Matrix(FactorIndexMap(shape, j).apply(M.array), M.field)


def rearrange_r(M, m, n):
    """
        R(M) for an m^2 x n^2 matrix; R(A (x) B) = vec(A) vec(B)^T.
    """
    return rearrange_j(M, Shape(m, n, 2), 1)


def rearrange_sum(M, shape):
    """
        R^sum(M), the sum of R^(j)(M) over j = 1..k.
    """
    shape.check(M)
    total = sum(FactorIndexMap(shape, j).apply(M.array) for j in range(1, shape.k + 1))
    return Matrix(total, M.field)


def inverse_rearrange_j(N, shape, j):
    """
        The unique M with R^(j)(M) = N.
    """
    shape.check_rearranged(N)
    return Matrix(FactorIndexMap(shape, j).invert(N.array), N.field)


def lift_from_sum(N, shape):
    """
        For N = R^(1)(alpha (x)^k A) return (alpha / k) (x)^k A, the matrix
        of the same cone that R^sum sends to N.

        Raises a CharacteristicException when the field characteristic
        divides k.
    """
    if char_divides(N.field, shape.k):
        raise CharacteristicException("The characteristic {0} divides k={1}"
                                      .format(N.field.characteristic, shape.k))
    return inverse_rearrange_j(N, shape, 1) * Fraction(1, shape.k)
