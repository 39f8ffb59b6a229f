import cmath
import logging
import math
import numbers
import re
from fractions import Fraction

import numpy
import six
from sympy import integer_nthroot, isprime

from .errors import DimensionException, FieldException, ParseException

log = logging.getLogger(__name__)

DEFAULT_TOLERANCE = 1e-10
MAX_MODULUS = 2 ** 16

KINDS = ["real", "complex", "rational", "gf"]
FLOATING_KINDS = ["real", "complex"]

_DECIMAL = r'(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?'
_REAL_RE = re.compile(r'^[+-]?' + _DECIMAL + r'$')
_COMPLEX_RE = re.compile(r'^([+-]?' + _DECIMAL + r')([+-]' + _DECIMAL + r')i$')
_RATIONAL_RE = re.compile(r'^[+-]?\d+(?:/\d+)?$')
_INTEGER_RE = re.compile(r'^[+-]?\d+$')


class FieldKind(object):
    """
        One of the four scalar fields kronroot computes over: floating real,
        floating complex, exact rational and GF(p) for a prime p < 2^16.

        Values handed around inside matrices are the raw representations
        (float, complex, Fraction, int residue); :class:`FieldElement` wraps
        one of them together with its field.

        >>> gf(5).characteristic
        5
        >>> RATIONAL.parse("6/8")
        Fraction(3, 4)
    """

    def __init__(self, name, modulus=None):
        if name not in KINDS:
            raise FieldException("Unknown field kind '{0}'".format(name))
        if name == "gf":
            if modulus is None:
                raise FieldException("The gf field needs a prime modulus")
            if isinstance(modulus, bool) or not isinstance(modulus, numbers.Integral):
                raise FieldException("The gf modulus must be an integer")
            modulus = int(modulus)
            if not 2 <= modulus < MAX_MODULUS or not isprime(modulus):
                raise FieldException("{0} is not a prime below {1}".format(modulus,
                                                                          MAX_MODULUS))
        elif modulus is not None:
            raise FieldException("The {0} field does not take a modulus".format(name))
        self._name = name
        self._modulus = modulus

    @property
    def name(self):
        return self._name

    @property
    def modulus(self):
        return self._modulus

    @property
    def characteristic(self):
        """
            0 for real, complex and rational; p for GF(p).
        """
        return self._modulus if self._name == "gf" else 0

    @property
    def is_exact(self):
        return self._name not in FLOATING_KINDS

    @property
    def is_floating(self):
        return self._name in FLOATING_KINDS

    @property
    def is_ordered(self):
        return self._name in ("real", "rational")

    @property
    def dtype(self):
        if self._name == "real":
            return numpy.float64
        if self._name == "complex":
            return numpy.complex128
        return object

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def __eq__(self, other):
        if not isinstance(other, FieldKind):
            return NotImplemented
        return (self._name, self._modulus) == (other._name, other._modulus)

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __hash__(self):
        return hash((self._name, self._modulus))

    def __repr__(self):
        if self._modulus is None:
            return "FieldKind('{0}')".format(self._name)
        return "FieldKind('{0}', {1})".format(self._name, self._modulus)

    def __str__(self):
        if self._modulus is None:
            return self._name
        return "{0} {1}".format(self._name, self._modulus)

    def coerce(self, value):
        """
            Turn a Python number, a numpy scalar, scalar text or a
            :class:`FieldElement` of this field into this field's raw
            representation.

            :param value: the value to convert
            :returns: float, complex, Fraction or int residue

            Floats are refused by the exact fields and non-real values by
            the real field; a FieldException is raised for those.
        """
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldException("Cannot mix {0} and {1} scalars".format(value.field, self))
            return value.value
        if isinstance(value, six.string_types):
            return self.parse(value)

        name = self._name
        if name == "real":
            if isinstance(value, numbers.Real):
                return float(value)
            if isinstance(value, numbers.Complex) and value.imag == 0:
                return float(value.real)
        elif name == "complex":
            if isinstance(value, numbers.Complex):
                return complex(value)
        elif name == "rational":
            if isinstance(value, Fraction):
                return value
            if isinstance(value, numbers.Integral):
                return Fraction(int(value))
            if isinstance(value, numbers.Rational):
                return Fraction(int(value.numerator), int(value.denominator))
        else:
            p = self._modulus
            if isinstance(value, numbers.Integral):
                return int(value) % p
            if isinstance(value, numbers.Rational):
                denominator = int(value.denominator) % p
                if denominator == 0:
                    raise FieldException("{0} has no image in GF({1})".format(value, p))
                return int(value.numerator) * pow(denominator, -1, p) % p
        raise FieldException("Cannot represent {0!r} in the {1} field".format(value, self))

    def _reduce(self, value):
        if self._name == "gf":
            return value % self._modulus
        return value

    def add(self, a, b):
        return self._reduce(a + b)

    def sub(self, a, b):
        return self._reduce(a - b)

    def mul(self, a, b):
        return self._reduce(a * b)

    def neg(self, a):
        return self._reduce(-a)

    def inverse(self, a):
        if a == 0:
            raise FieldException("Zero has no multiplicative inverse")
        if self._name == "gf":
            return pow(a, -1, self._modulus)
        if self._name == "rational":
            return 1 / a
        return 1.0 / a

    def div(self, a, b):
        return self.mul(a, self.inverse(b))

    def power(self, a, k):
        if k < 0:
            return self.power(self.inverse(a), -k)
        if self._name == "gf":
            return pow(a, k, self._modulus)
        return a ** k

    def is_zero(self, value, tol=0.0):
        """
            Exact fields test value == 0; floating fields test |value| <= tol.
        """
        if self.is_exact:
            return value == 0
        return abs(value) <= tol

    def elements(self):
        """
            Every element of a finite field, in residue order.
        """
        if self._name != "gf":
            raise FieldException("The {0} field cannot be enumerated".format(self))
        return range(self._modulus)

    def normalize(self, data):
        """
            Return a numpy array holding ``data`` in this field's storage
            dtype with canonical values (reduced fractions, residues in
            [0, p)).
        """
        data = numpy.asarray(data)
        if self._name == "real":
            if data.dtype.kind == "c":
                if numpy.any(data.imag != 0):
                    raise FieldException("Complex entries cannot live in the real field")
                data = data.real
            if data.dtype.kind not in "biuf":
                data = numpy.frompyfunc(self.coerce, 1, 1)(data)
            return numpy.array(data, dtype=numpy.float64)
        if self._name == "complex":
            if data.dtype.kind not in "biufc":
                data = numpy.frompyfunc(self.coerce, 1, 1)(data)
            return numpy.array(data, dtype=numpy.complex128)
        out = numpy.empty(data.shape, dtype=object)
        out[...] = numpy.frompyfunc(self.coerce, 1, 1)(data)
        return out

    def parse(self, text, line=None):
        """
            Read one scalar in the text syntax: real ``-1.25``, complex
            ``1+0i`` / ``2-3.5i`` (both parts required), rational ``3/4``
            or ``-2``, GF(p) as a decimal integer reduced modulo p.

            :param text: the token to read
            :param line: line number reported in a ParseException
        """
        token = text.strip()
        name = self._name
        if name == "real" and _REAL_RE.match(token):
            return float(token)
        if name == "complex":
            match = _COMPLEX_RE.match(token)
            if match:
                return complex(float(match.group(1)), float(match.group(2)))
        if name == "rational" and _RATIONAL_RE.match(token):
            try:
                return Fraction(token)
            except ZeroDivisionError:
                raise ParseException("'{0}' has a zero denominator".format(token), line)
        if name == "gf" and _INTEGER_RE.match(token):
            return int(token) % self._modulus
        raise ParseException("'{0}' is not a valid {1} scalar".format(token, name), line)

    def format(self, value):
        """
            Print one raw value in the text syntax. Floating kinds use 17
            significant digits so that parsing the text gives the same value.
        """
        if self._name == "real":
            return "%.17g" % value
        if self._name == "complex":
            return "%.17g%+.17gi" % (value.real, value.imag)
        return str(value)


REAL = FieldKind("real")
COMPLEX = FieldKind("complex")
RATIONAL = FieldKind("rational")


def gf(p):
    """
        The prime field GF(p).

        >>> gf(7).modulus
        7
    """
    return FieldKind("gf", p)


class FieldElement(object):
    """
        A scalar together with the field it belongs to.

        >>> a = FieldElement(RATIONAL, "1/2")
        >>> str(a + 1)
        '3/2'
        >>> FieldElement(gf(5), 3) * 2 == 1
        True
    """
    __slots__ = ("_field", "_value")

    def __init__(self, field, value):
        self._field = field
        self._value = field.coerce(value)

    @property
    def field(self):
        return self._field

    @property
    def value(self):
        """
            The raw representation: float, complex, Fraction or int residue.
        """
        return self._value

    def _operand(self, other):
        if isinstance(other, FieldElement) and other.field != self._field:
            raise FieldException("Cannot mix {0} and {1} scalars".format(self._field,
                                                                        other.field))
        return self._field.coerce(other)

    def _wrap(self, value):
        return FieldElement(self._field, value)

    def __add__(self, other):
        return self._wrap(self._field.add(self._value, self._operand(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return self._wrap(self._field.sub(self._value, self._operand(other)))

    def __rsub__(self, other):
        return self._wrap(self._field.sub(self._operand(other), self._value))

    def __mul__(self, other):
        return self._wrap(self._field.mul(self._value, self._operand(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self._wrap(self._field.div(self._value, self._operand(other)))

    def __rtruediv__(self, other):
        return self._wrap(self._field.div(self._operand(other), self._value))

    def __neg__(self):
        return self._wrap(self._field.neg(self._value))

    def __pow__(self, k):
        return self._wrap(self._field.power(self._value, k))

    def __abs__(self):
        if self._field.name == "gf":
            raise FieldException("GF({0}) has no absolute value".format(self._field.modulus))
        return abs(self._value)

    def __complex__(self):
        if self._field.name == "gf":
            raise FieldException("GF({0}) does not embed in the complex numbers"
                                 .format(self._field.modulus))
        return complex(self._value)

    def __eq__(self, other):
        try:
            return self._value == self._operand(other)
        except (FieldException, ParseException):
            return False

    def __ne__(self, other):
        return not self.__eq__(other)

    def __hash__(self):
        return hash((self._field, self._value))

    def __repr__(self):
        return "FieldElement({0}, {1})".format(self._field, self)

    def __str__(self):
        return self._field.format(self._value)

    def inverse(self):
        return self._wrap(self._field.inverse(self._value))

    def is_zero(self, tol=0.0):
        return self._field.is_zero(self._value, tol)

    def sign(self):
        """
            -1, 0 or 1 for real and rational scalars.
        """
        if not self._field.is_ordered:
            raise FieldException("The {0} field is not ordered".format(self._field))
        return (self._value > 0) - (self._value < 0)


def parse_scalar(field, text, line=None):
    return FieldElement(field, field.parse(text, line))


def format_scalar(field, value):
    if isinstance(value, FieldElement):
        return str(value)
    return field.format(field.coerce(value))


def char_divides(kind, k):
    """
        True iff the characteristic of ``kind`` is positive and divides k.

        >>> char_divides(gf(3), 6)
        True
        >>> char_divides(REAL, 3)
        False
    """
    if k < 1:
        raise DimensionException("k must be a positive integer, not {0}".format(k))
    p = kind.characteristic
    return p > 0 and k % p == 0


def kth_root_scalar(s, k):
    """
        Every x in the field of ``s`` with x^k = s.

        :param s: a :class:`FieldElement`
        :param k: a positive integer
        :returns: list of :class:`FieldElement`, empty when no root exists

        Real roots come positive first, complex roots start at the
        principal branch and go round counter-clockwise, rational roots are
        returned only when exact, GF(p) roots are found by trying every
        residue and come in residue order.

        >>> [str(x) for x in kth_root_scalar(FieldElement(REAL, 4), 2)]
        ['2', '-2']
    """
    if k < 1:
        raise DimensionException("k must be a positive integer, not {0}".format(k))
    field = s.field
    x = s.value
    if x == 0:
        return [FieldElement(field, 0)]

    name = field.name
    if name == "real":
        r = abs(x) ** (1.0 / k)
        if x > 0:
            roots = [r, -r] if k % 2 == 0 else [r]
        else:
            roots = [] if k % 2 == 0 else [-r]
    elif name == "complex":
        modulus, phase = cmath.polar(x)
        base = modulus ** (1.0 / k)
        roots = [cmath.rect(base, (phase + 2 * math.pi * j) / k) for j in range(k)]
    elif name == "rational":
        roots = []
        if x > 0 or k % 2 == 1:
            numerator, exact_numerator = integer_nthroot(abs(x.numerator), k)
            denominator, exact_denominator = integer_nthroot(x.denominator, k)
            if exact_numerator and exact_denominator:
                r = Fraction(int(numerator), int(denominator))
                if x < 0:
                    r = -r
                roots = [r, -r] if k % 2 == 0 else [r]
    else:
        p = field.modulus
        roots = [y for y in range(p) if pow(y, k, p) == x]

    log.debug("%d-th roots of %s over %s: %d found", k, s, field, len(roots))
    return [FieldElement(field, r) for r in roots]
