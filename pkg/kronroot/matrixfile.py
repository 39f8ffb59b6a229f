"""
Text format for matrices::

    field <real|complex|rational|gf> [p] rows <m> cols <n>
    <n whitespace separated scalars>      (m lines)

Blank lines and lines starting with ``#`` are skipped.
"""
import io

from . import matrix as matrix_module
from .errors import FieldException, ParseException
from .matrix import Matrix
from .scalars import KINDS, FieldKind


def _positive(token):
    return token.isdigit() and int(token) > 0


def parse_header(line, number=1):
    """
        Read a header line and return (field, rows, cols).
    """
    tokens = line.split()
    if len(tokens) < 2 or tokens[0] != "field":
        raise ParseException("The header must start with 'field <kind>'", number)
    kind = tokens[1]
    if kind not in KINDS:
        raise ParseException("Unknown field kind '{0}'".format(kind), number)

    rest = tokens[2:]
    modulus = None
    if kind == "gf":
        if not rest or not rest[0].isdigit():
            raise ParseException("The gf field needs a modulus", number)
        modulus = int(rest[0])
        rest = rest[1:]
    elif rest and rest[0].isdigit():
        raise ParseException("The {0} field does not take a modulus".format(kind), number)

    if (len(rest) != 4 or rest[0] != "rows" or rest[2] != "cols" or
            not _positive(rest[1]) or not _positive(rest[3])):
        raise ParseException("The header must end with 'rows <m> cols <n>'", number)
    try:
        field = FieldKind(kind, modulus)
    except FieldException as e:
        raise ParseException(e.msg, number)

    rows, cols = int(rest[1]), int(rest[3])
    if rows * cols > matrix_module.MAX_ENTRIES:
        raise ParseException("A {0}x{1} matrix exceeds the cap of {2} entries"
                             .format(rows, cols, matrix_module.MAX_ENTRIES), number)
    return field, rows, cols


class MatrixFile(object):
    """
        A matrix together with its text form.

        >>> MatrixFile(Matrix([[1, 2], [3, 4]])).to_text()
        'field rational rows 2 cols 2\\n1 2\\n3 4\\n'
    """

    def __init__(self, matrix):
        self._matrix = matrix

    @property
    def matrix(self):
        return self._matrix

    @property
    def header(self):
        return "field {0} rows {1} cols {2}".format(self._matrix.field, self._matrix.rows,
                                                   self._matrix.cols)

    def to_text(self):
        field = self._matrix.field
        lines = [self.header]
        for row in self._matrix.array:
            lines.append(" ".join(field.format(value) for value in row))
        return "\n".join(lines) + "\n"

    def write(self, path):
        with io.open(path, "w", encoding="utf-8") as handle:
            handle.write(self.to_text())

    @classmethod
    def from_text(cls, text):
        """
            Parse the text form. Any problem raises a ParseException naming
            the line.
        """
        lines = []
        for number, line in enumerate(text.splitlines(), 1):
            stripped = line.strip()
            if stripped and not stripped.startswith("#"):
                lines.append((number, stripped))
        if not lines:
            raise ParseException("The matrix file is empty")

        number, header = lines[0]
        field, rows, cols = parse_header(header, number)
        body = lines[1:]
        if len(body) != rows:
            raise ParseException("Expected {0} rows, found {1}".format(rows, len(body)),
                                 body[-1][0] if body else number)

        entries = []
        for number, line in body:
            tokens = line.split()
            if len(tokens) != cols:
                raise ParseException("Expected {0} entries, found {1}".format(cols, len(tokens)),
                                     number)
            entries.append([field.parse(token, number) for token in tokens])
        return cls(Matrix(entries, field))

    @classmethod
    def read(cls, path):
        with io.open(path, "rb") as handle:
            content = handle.read()
        try:
            text = content.decode("utf-8")
        except UnicodeDecodeError as e:
            raise ParseException("The file is not valid UTF-8",
                                 content[:e.start].count(b"\n") + 1)
        return cls.from_text(text)


def loads(text):
    return MatrixFile.from_text(text).matrix


def dumps(matrix):
    return MatrixFile(matrix).to_text()


def load(path):
    return MatrixFile.read(path).matrix


def dump(matrix, path):
    MatrixFile(matrix).write(path)
