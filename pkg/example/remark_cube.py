#!/usr/bin/env python

import kronroot

# R^sum of this matrix has rank one, yet it is not a Kronecker cube.
M = kronroot.Matrix([[1, -1, 1, 0, 0, 0, 0, 0]])
shape = kronroot.Shape(1, 2, 3)

print(kronroot.rearrange_sum(M, shape))
print(kronroot.check_sum_rank(M, shape))

outcome = kronroot.RootSearch(M)\
    .shape(1, 2, 3)\
    .require_sum_rank()\
    .search()
print(outcome.status, outcome.certificate)
