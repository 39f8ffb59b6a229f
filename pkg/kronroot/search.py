from .errors import DimensionException, KronRootException
from .matrix import Shape
from .roots import kth_root, square_root
from .scalars import DEFAULT_TOLERANCE


class RootSearch(object):
    """
        This allows asking for a Kronecker root of a matrix
    """
    def __init__(self, matrix):
        """
            Initialises the search object

            :param matrix: :class:`kronroot.matrix.Matrix` to take a root of.
        """
        self._matrix = matrix
        self._shape = None
        self._tol = DEFAULT_TOLERANCE
        self._require_sum_rank = False

    def shape(self, m, n, k=2):
        r"""
            The factor size m x n and the Kronecker order k. Required.

            :returns: :class:`RootSearch`

            >>> RootSearch(M).shape(2, 2, 3)
        """
        self._shape = Shape(m, n, k)
        return self

    def tolerance(self, tol):
        r"""
            Relative tolerance for rank and equality decisions over the
            floating fields. Defaults to 1e-10 and is ignored for exact
            fields.

            :returns: :class:`RootSearch`
        """
        if tol < 0:
            raise KronRootException("The tolerance must not be negative, not {0}".format(tol))
        self._tol = tol
        return self

    def require_sum_rank(self, required=True):
        r"""
            Refuse matrices whose sum rearrangement R^sum is not rank one
            before extracting. For k = 2 this also takes R(M) as R^sum(M) / 2.
            Over a field whose characteristic divides k the search then
            reports a characteristic obstruction.

            :returns: :class:`RootSearch`
        """
        self._require_sum_rank = required
        return self

    def search(self):
        r"""
            Run the extraction described by the other methods and return a
            :class:`kronroot.roots.RootOutcome`.

            >>> outcome = RootSearch(M)\
            ...               .shape(2, 2, 2)\
            ...               .require_sum_rank()\
            ...               .search()
        """
        if self._shape is None:
            raise DimensionException("Call shape() before search()")
        shape = self._shape
        if shape.k == 2:
            return square_root(self._matrix, shape.m, shape.n, self._tol,
                               use_sum=self._require_sum_rank)
        return kth_root(self._matrix, shape, self._tol,
                        require_sum_rank=self._require_sum_rank)
