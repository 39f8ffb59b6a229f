"""
Command line front-end.

Exit codes: 0 for an affirmative answer, 1 for a negative mathematical
answer, 2 for usage and input errors.
"""
import argparse
import logging
import sys

from .errors import CharacteristicException, DimensionException, KronRootException
from .matrix import Shape, kron, kron_power
from .matrixfile import MatrixFile, dumps, load
from .rearrange import rearrange_j, rearrange_r, rearrange_sum
from .roots import (CHARACTERISTIC_OBSTRUCTION, FOUND, FOUND_COMPLEX_ONLY,
                    NO_ROOT_IN_FIELD, NOT_A_KRONECKER_POWER, ZERO_MATRIX,
                    SquareRootCertificate, check_power, check_square)
from .scalars import DEFAULT_TOLERANCE, char_divides
from .search import RootSearch

log = logging.getLogger(__name__)

EXIT_AFFIRMATIVE = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2

STATUS_LABELS = {
    FOUND: "FOUND",
    FOUND_COMPLEX_ONLY: "COMPLEX_ROOT_EXISTS",
    NOT_A_KRONECKER_POWER: "NOT_A_KRONECKER_POWER",
    NO_ROOT_IN_FIELD: "NO_ROOT_IN_FIELD",
    CHARACTERISTIC_OBSTRUCTION: "CHARACTERISTIC_OBSTRUCTION",
    ZERO_MATRIX: "ZERO_MATRIX",
}


def _flag(value):
    return "true" if value else "false"


def _optional(value):
    return "n/a" if value is None else str(value)


def _emit(matrix, out):
    if out:
        MatrixFile(matrix).write(out)
    else:
        sys.stdout.write(dumps(matrix))


def _tolerance(args, field):
    if args.tol is None:
        return DEFAULT_TOLERANCE
    if field.is_exact:
        raise KronRootException("--tol only applies to real and complex matrices")
    if args.tol < 0:
        raise KronRootException("--tol must not be negative")
    return args.tol


def certificate_fields(certificate):
    if isinstance(certificate, SquareRootCertificate):
        return ["symmetric={0}".format(_flag(certificate.symmetric)),
                "rank={0}".format(certificate.rank),
                "trace={0}".format(certificate.trace)]
    return ["rank={0}".format(certificate.rank),
            "sum_rank={0}".format(_optional(certificate.sum_rank))]


def status_line(outcome):
    """
        One line naming the outcome, the ambiguity of a found root and the
        certificate the decision rests on.
    """
    parts = [STATUS_LABELS[outcome.status]]
    if outcome.status in (FOUND, ZERO_MATRIX):
        parts.append("ambiguity={0}".format(outcome.ambiguity))
    if outcome.certificate is not None:
        parts.extend(certificate_fields(outcome.certificate))
    return " ".join(parts)


def cmd_kron(args):
    _emit(kron(load(args.file_a), load(args.file_b)), args.out)
    return EXIT_AFFIRMATIVE


def cmd_power(args):
    _emit(kron_power(load(args.file), args.k), args.out)
    return EXIT_AFFIRMATIVE


def cmd_rearrange(args):
    matrix = load(args.file)
    shape = Shape(args.m, args.n, args.k)
    if args.mode == "r":
        if args.k != 2:
            raise DimensionException("--mode r needs k=2, not {0}".format(args.k))
        result = rearrange_r(matrix, args.m, args.n)
    elif args.mode == "j":
        result = rearrange_j(matrix, shape, args.j)
    else:
        if char_divides(matrix.field, args.k):
            raise CharacteristicException("The characteristic {0} divides k={1}"
                                          .format(matrix.field.characteristic, args.k))
        result = rearrange_sum(matrix, shape)
    _emit(result, args.out)
    return EXIT_AFFIRMATIVE


def cmd_root(args):
    matrix = load(args.file)
    search = RootSearch(matrix).shape(args.m, args.n, args.k)\
                               .tolerance(_tolerance(args, matrix.field))\
                               .require_sum_rank(args.require_sum_rank)
    outcome = search.search()
    sys.stdout.write(status_line(outcome) + "\n")
    if outcome.status in (FOUND, ZERO_MATRIX):
        _emit(outcome.root, args.out)
        return EXIT_AFFIRMATIVE
    return EXIT_NEGATIVE


def cmd_check(args):
    matrix = load(args.file)
    shape = Shape(args.m, args.n, args.k)
    tol = _tolerance(args, matrix.field)
    if args.k == 2:
        certificate = check_square(matrix, args.m, args.n, tol)
        symmetric = _flag(certificate.symmetric)
        trace = str(certificate.trace)
        holds = certificate.holds
    else:
        certificate = check_power(matrix, shape, tol)
        symmetric = trace = "n/a"
        if certificate.sum_rank is None:
            holds = certificate.rank == 1
        else:
            holds = certificate.sum_rank == 1
    sys.stdout.write("symmetric={0} rank={1} sum_rank={2} trace={3}\n"
                     .format(symmetric, certificate.rank, _optional(certificate.sum_rank),
                             trace))
    return EXIT_AFFIRMATIVE if holds else EXIT_NEGATIVE


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="store_true",
                        help="log decisions to the error stream")

    factors = argparse.ArgumentParser(add_help=False)
    factors.add_argument("--m", type=int, required=True, help="factor row count")
    factors.add_argument("--n", type=int, required=True, help="factor column count")
    factors.add_argument("--k", type=int, default=2, help="Kronecker order (default 2)")

    parser = argparse.ArgumentParser(
        prog="kronroot",
        description="Kronecker products, rearrangements and Kronecker roots of matrices "
                    "over the reals, complex numbers, rationals and GF(p).")
    subparsers = parser.add_subparsers(dest="command", metavar="COMMAND")
    subparsers.required = True

    sub = subparsers.add_parser("kron", parents=[common], help="Kronecker product of two files")
    sub.add_argument("file_a")
    sub.add_argument("file_b")
    sub.add_argument("--out", help="output file (default: stdout)")
    sub.set_defaults(func=cmd_kron)

    sub = subparsers.add_parser("power", parents=[common], help="k-th Kronecker power")
    sub.add_argument("file")
    sub.add_argument("--k", type=int, required=True, help="Kronecker order")
    sub.add_argument("--out", help="output file (default: stdout)")
    sub.set_defaults(func=cmd_power)

    sub = subparsers.add_parser("rearrange", parents=[common, factors],
                                help="apply R, R^(j) or R^sum")
    sub.add_argument("file")
    sub.add_argument("--mode", choices=["r", "j", "sum"], default="r",
                     help="r: R (k=2), j: R^(j), sum: R^sum")
    sub.add_argument("--j", type=int, default=1, help="factor position for --mode j")
    sub.add_argument("--out", help="output file (default: stdout)")
    sub.set_defaults(func=cmd_rearrange)

    sub = subparsers.add_parser("root", parents=[common, factors], help="extract a Kronecker root")
    sub.add_argument("file")
    sub.add_argument("--tol", type=float, help="relative tolerance for real/complex input")
    sub.add_argument("--require-sum-rank", action="store_true",
                     help="refuse matrices whose R^sum is not rank one")
    sub.add_argument("--out", help="root output file (default: stdout)")
    sub.set_defaults(func=cmd_root)

    sub = subparsers.add_parser("check", parents=[common, factors],
                                help="report symmetry, ranks and trace of the rearrangements")
    sub.add_argument("file")
    sub.add_argument("--tol", type=float, help="relative tolerance for real/complex input")
    sub.set_defaults(func=cmd_check)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    logging.basicConfig(stream=sys.stderr,
                        level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(levelname)s: %(message)s")
    try:
        log.debug("running %s", args.command)
        return args.func(args)
    except KronRootException as e:
        sys.stderr.write("kronroot: error: {0}\n".format(e))
    except EnvironmentError as e:
        sys.stderr.write("kronroot: error: {0}\n".format(e))
    return EXIT_USAGE
