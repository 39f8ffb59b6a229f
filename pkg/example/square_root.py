#!/usr/bin/env python

import kronroot

A = kronroot.Matrix([[1, 2], [3, 4]])
M = kronroot.kron(A, A)

outcome = kronroot.square_root(M, 2, 2)
print(outcome.status, outcome.ambiguity)
for root in outcome.roots:
    print(root)

# Over the reals -M only has complex square roots, i*A and -i*A.
outcome = kronroot.square_root(-M.convert(kronroot.REAL), 2, 2)
print(outcome.status, outcome.certificate.trace)
print(outcome.root)
