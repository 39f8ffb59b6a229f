import itertools
from fractions import Fraction

from kronroot import Matrix, kron


def random_matrix(rng, rows, cols, field):
    if field.name == "gf":
        data = rng.integers(0, field.modulus, size=(rows, cols))
        return Matrix(data.tolist(), field)
    if field.name == "rational":
        numerators = rng.integers(-5, 6, size=(rows, cols))
        denominators = rng.integers(1, 4, size=(rows, cols))
        return Matrix([[Fraction(int(a), int(b)) for a, b in zip(row_a, row_b)]
                       for row_a, row_b in zip(numerators, denominators)], field)
    if field.name == "real":
        return Matrix(rng.standard_normal((rows, cols)), field)
    return Matrix(rng.standard_normal((rows, cols)) + 1j * rng.standard_normal((rows, cols)),
                  field)


def random_nonzero_matrix(rng, rows, cols, field):
    while True:
        A = random_matrix(rng, rows, cols, field)
        if not A.is_zero():
            return A


def all_matrices(field, rows, cols):
    for values in itertools.product(field.elements(), repeat=rows * cols):
        yield Matrix([list(values[i * cols:(i + 1) * cols]) for i in range(rows)], field)


def kronecker_squares(field, rows, cols):
    return set(kron(A, A) for A in all_matrices(field, rows, cols))
