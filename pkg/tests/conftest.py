import numpy
import pytest

from kronroot import Matrix, kron


@pytest.fixture
def sample():
    return Matrix([[1, 2], [3, 4]])


@pytest.fixture
def sample_square(sample):
    return kron(sample, sample)


@pytest.fixture
def remark():
    # R^sum of this 1x8 matrix has rank one but it is not a Kronecker cube
    return Matrix([[1, -1, 1, 0, 0, 0, 0, 0]])


@pytest.fixture
def rng():
    return numpy.random.default_rng(20150423)


@pytest.fixture
def matrix_file(tmp_path):
    def write(text, name="m.txt"):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return write
