from .errors import *  # noqa
from .matrix import Matrix, Shape, kron, kron_power, unvec, vec  # noqa
from .matrixfile import MatrixFile  # noqa
from .rankone import RankOneFactorization, is_symmetric, rank, rank_one_factor  # noqa
from .rearrange import (FactorIndexMap, inverse_rearrange_j, lift_from_sum,  # noqa
                        rearrange_j, rearrange_r, rearrange_sum)
from .roots import (RootOutcome, SquareRootCertificate, check_square,  # noqa
                    check_sum_rank, kth_root, square_root, verify_power)
from .scalars import (COMPLEX, RATIONAL, REAL, FieldElement, FieldKind,  # noqa
                      char_divides, gf, kth_root_scalar)
from .search import RootSearch  # noqa
