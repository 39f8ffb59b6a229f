import logging

import kronroot

# kronroot logs every rank decision and refusal reason at DEBUG level.
logging.basicConfig()
logging.getLogger("kronroot").setLevel(logging.DEBUG)
# End of debug code

A = kronroot.Matrix([[1, 1], [0, 1]], kronroot.gf(2))
M = kronroot.kron(A, A)

# R^sum vanishes in characteristic 2, so only the plain route works here.
print(kronroot.RootSearch(M).shape(2, 2).require_sum_rank().search())
print(kronroot.RootSearch(M).shape(2, 2).search().root)
