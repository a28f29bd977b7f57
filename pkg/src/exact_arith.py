"""
Exact Arithmetic - Rationals, Gaussian rationals, exact angles and pi-valued quantities
"""
import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple, Union

from .exceptions import GeometryError, LiteralSyntaxError

# Comparison tolerance for unit-scale floating-point quantities
TOLERANCE = 1e-12
# Tolerance where irrational coordinates (sqrt(3), cube roots of unity) enter
IRRATIONAL_TOLERANCE = 1e-9


class GaussianRational:
    """Exact complex scalar a + bi with rational a and b"""

    __slots__ = ('_re', '_im')

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        if isinstance(re, float) or isinstance(im, float):
            raise TypeError("GaussianRational components must be exact, got a float")
        self._re = Fraction(re)
        self._im = Fraction(im)

    @property
    def re(self) -> Fraction:
        return self._re

    @property
    def im(self) -> Fraction:
        return self._im

    # complex-compatible names so exact and inexact scalars share code paths
    real = re
    imag = im

    @classmethod
    def coerce(cls, value) -> 'GaussianRational':
        """Convert an int, Fraction or GaussianRational into a GaussianRational"""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value, 0)
        raise TypeError(f"cannot convert {type(value).__name__} to GaussianRational")

    def conjugate(self) -> 'GaussianRational':
        return GaussianRational(self._re, -self._im)

    def norm(self) -> Fraction:
        """z * conj(z), a nonnegative rational"""
        return self._re * self._re + self._im * self._im

    def is_gaussian_integer(self) -> bool:
        return self._re.denominator == 1 and self._im.denominator == 1

    def __complex__(self) -> complex:
        return complex(float(self._re), float(self._im))

    def __bool__(self) -> bool:
        return bool(self._re) or bool(self._im)

    def __hash__(self) -> int:
        if self._im == 0:
            return hash(self._re)
        return hash((self._re, self._im))

    def __eq__(self, other) -> bool:
        if isinstance(other, GaussianRational):
            return self._re == other._re and self._im == other._im
        if isinstance(other, (int, Fraction)):
            return self._im == 0 and self._re == other
        if isinstance(other, (float, complex)):
            return complex(self) == other
        return NotImplemented

    def __neg__(self) -> 'GaussianRational':
        return GaussianRational(-self._re, -self._im)

    def __pos__(self) -> 'GaussianRational':
        return self

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = GaussianRational.coerce(other)
            return GaussianRational(self._re + other._re, self._im + other._im)
        if isinstance(other, (float, complex)):
            return complex(self) + other
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = GaussianRational.coerce(other)
            return GaussianRational(self._re - other._re, self._im - other._im)
        if isinstance(other, (float, complex)):
            return complex(self) - other
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = GaussianRational.coerce(other)
            return GaussianRational(
                self._re * other._re - self._im * other._im,
                self._re * other._im + self._im * other._re,
            )
        if isinstance(other, (float, complex)):
            return complex(self) * other
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            other = GaussianRational.coerce(other)
            denominator = other.norm()
            if denominator == 0:
                raise ZeroDivisionError("division by the Gaussian rational zero")
            numerator = self * other.conjugate()
            return GaussianRational(numerator._re / denominator, numerator._im / denominator)
        if isinstance(other, (float, complex)):
            return complex(self) / other
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other) / self
        if isinstance(other, (float, complex)):
            return other / complex(self)
        return NotImplemented

    def __pow__(self, exponent: int) -> 'GaussianRational':
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return GaussianRational(1) / (self ** -exponent)
        result = GaussianRational(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __repr__(self) -> str:
        return f"GaussianRational({self._re!s}, {self._im!s})"

    def __str__(self) -> str:
        return format_scalar(self)


I = GaussianRational(0, 1)

Scalar = Union[GaussianRational, complex]


def is_exact_scalar(value) -> bool:
    return isinstance(value, (int, Fraction, GaussianRational))


def gaussian_field_ops(a: GaussianRational, b: GaussianRational) -> dict:
    """
    Evaluate every field operation on a pair of Gaussian rationals

    Args:
        a: First operand
        b: Second operand

    Returns:
        Dictionary with add, sub, mul, div (None when b is zero), conj and norm of a
    """
    return {
        'add': a + b,
        'sub': a - b,
        'mul': a * b,
        'div': a / b if b else None,
        'conj': a.conjugate(),
        'norm': a.norm(),
    }


@dataclass(frozen=True)
class Angle:
    """Exact rational multiple of pi in (-1, 1], or an approximate radian value in (-pi, pi]"""

    coefficient: Optional[Fraction] = None
    radians: Optional[float] = None

    @classmethod
    def exact(cls, coefficient: Union[int, Fraction]) -> 'Angle':
        reduced = Fraction(coefficient) % 2
        if reduced > 1:
            reduced -= 2
        return cls(coefficient=reduced)

    @classmethod
    def approx(cls, radians: float) -> 'Angle':
        value = math.remainder(float(radians), 2 * math.pi)
        if value <= -math.pi:
            value += 2 * math.pi
        return cls(radians=value)

    @property
    def kind(self) -> str:
        return 'ExactPi' if self.coefficient is not None else 'Approx'

    @property
    def is_exact(self) -> bool:
        return self.coefficient is not None

    def to_radians(self) -> float:
        if self.coefficient is not None:
            return float(self.coefficient) * math.pi
        return self.radians

    def as_value(self) -> 'PiValue':
        """The angle as an unwrapped pi-valued quantity of degree one"""
        if self.coefficient is not None:
            return PiValue.exact(self.coefficient, 1)
        return PiValue.inexact(self.radians, 1)

    def __neg__(self) -> 'Angle':
        if self.coefficient is not None:
            return Angle.exact(-self.coefficient)
        return Angle.approx(-self.radians)

    def __add__(self, other: 'Angle') -> 'Angle':
        if not isinstance(other, Angle):
            return NotImplemented
        if self.is_exact and other.is_exact:
            return Angle.exact(self.coefficient + other.coefficient)
        return Angle.approx(self.to_radians() + other.to_radians())

    def __sub__(self, other: 'Angle') -> 'Angle':
        return self + (-other)

    def __mul__(self, factor: int) -> 'Angle':
        if not isinstance(factor, int):
            return NotImplemented
        if self.coefficient is not None:
            return Angle.exact(self.coefficient * factor)
        return Angle.approx(self.radians * factor)

    __rmul__ = __mul__

    def close_to(self, other: 'Angle', tolerance: float = TOLERANCE) -> bool:
        difference = abs(math.remainder(self.to_radians() - other.to_radians(), 2 * math.pi))
        return difference <= tolerance

    def __str__(self) -> str:
        if self.coefficient is not None:
            return f"{self.coefficient}*pi"
        return f"{self.radians:.12f}"


@dataclass(frozen=True)
class NotExact:
    """Returned by exact_arg when the argument is not a multiple of pi/4"""

    approx: Angle


_DIAGONAL_ARGS = {
    (1, 1): Fraction(1, 4),
    (-1, 1): Fraction(3, 4),
    (-1, -1): Fraction(-3, 4),
    (1, -1): Fraction(-1, 4),
}


def _sign(value) -> int:
    return (value > 0) - (value < 0)


def exact_arg(z: GaussianRational) -> Union[Angle, NotExact]:
    """
    Argument of a nonzero Gaussian rational in (-pi, pi]

    Exact only on the coordinate axes and the diagonals; any other argument
    comes back as NotExact carrying the atan2 value.

    Raises:
        GeometryError: if z is zero
    """
    z = GaussianRational.coerce(z)
    if not z:
        raise GeometryError("arg(0) is undefined")
    if z.im == 0:
        return Angle.exact(0 if z.re > 0 else 1)
    if z.re == 0:
        return Angle.exact(Fraction(1, 2) if z.im > 0 else Fraction(-1, 2))
    if abs(z.re) == abs(z.im):
        return Angle.exact(_DIAGONAL_ARGS[(_sign(z.re), _sign(z.im))])
    return NotExact(Angle.approx(math.atan2(float(z.im), float(z.re))))


def arg(z: Scalar) -> Angle:
    """Exact argument when available, approximate otherwise"""
    if is_exact_scalar(z):
        result = exact_arg(z)
        return result.approx if isinstance(result, NotExact) else result
    if z == 0:
        raise GeometryError("arg(0) is undefined")
    return Angle.approx(cmath.phase(z))


@dataclass(frozen=True)
class PiValue:
    """
    A real quantity of the form q * pi**degree

    Exact values store the rational q; inexact values store the full real
    number and keep the degree for bookkeeping.
    """

    degree: int
    coefficient: Optional[Fraction] = None
    approx: Optional[float] = None

    @classmethod
    def exact(cls, coefficient: Union[int, Fraction], degree: int) -> 'PiValue':
        return cls(degree=degree, coefficient=Fraction(coefficient))

    @classmethod
    def inexact(cls, value: float, degree: int) -> 'PiValue':
        value = float(value)
        if not math.isfinite(value):
            raise GeometryError(f"non-finite value {value}")
        return cls(degree=degree, approx=value)

    @classmethod
    def zero(cls, degree: int) -> 'PiValue':
        return cls.exact(0, degree)

    @property
    def is_exact(self) -> bool:
        return self.coefficient is not None

    def is_zero(self) -> bool:
        if self.coefficient is not None:
            return self.coefficient == 0
        return self.approx == 0.0

    def __float__(self) -> float:
        if self.coefficient is not None:
            return float(self.coefficient) * math.pi ** self.degree
        return self.approx

    def _aligned(self, other: 'PiValue') -> Tuple['PiValue', 'PiValue']:
        if self.degree == other.degree:
            return self, other
        if self.coefficient == 0:
            return PiValue.zero(other.degree), other
        if other.coefficient == 0:
            return self, PiValue.zero(self.degree)
        raise TypeError(f"cannot add pi-degree {self.degree} to pi-degree {other.degree}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)) and other == 0:
            return self
        if not isinstance(other, PiValue):
            return NotImplemented
        left, right = self._aligned(other)
        if left.is_exact and right.is_exact:
            return PiValue.exact(left.coefficient + right.coefficient, left.degree)
        return PiValue.inexact(float(left) + float(right), left.degree)

    __radd__ = __add__

    def __neg__(self) -> 'PiValue':
        if self.coefficient is not None:
            return PiValue.exact(-self.coefficient, self.degree)
        return PiValue.inexact(-self.approx, self.degree)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, PiValue)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PiValue):
            degree = self.degree + other.degree
            if self.is_exact and other.is_exact:
                return PiValue.exact(self.coefficient * other.coefficient, degree)
            return PiValue.inexact(float(self) * float(other), degree)
        if isinstance(other, (int, Fraction)):
            if self.coefficient is not None:
                return PiValue.exact(self.coefficient * other, self.degree)
            return PiValue.inexact(self.approx * float(other), self.degree)
        if isinstance(other, float):
            return PiValue.inexact(float(self) * other, self.degree)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __abs__(self) -> 'PiValue':
        if self.coefficient is not None:
            return -self if self.coefficient < 0 else self
        return -self if self.approx < 0 else self

    def close_to(self, other: 'PiValue', tolerance: float = TOLERANCE) -> bool:
        return abs(float(self) - float(other)) <= tolerance

    def __str__(self) -> str:
        if self.coefficient is None:
            return f"{self.approx:.12f}"
        if self.degree == 0:
            return f"{self.coefficient}"
        if self.degree == 1:
            return f"{self.coefficient}*pi"
        return f"{self.coefficient}*pi^{self.degree}"


def _parse_unsigned_rational(text: str, pos: int, source: str, offset: int) -> Tuple[Optional[Fraction], int]:
    start = pos
    while pos < len(text) and text[pos].isdigit():
        pos += 1
    if pos == start:
        return None, pos
    numerator = int(text[start:pos])
    if pos < len(text) and text[pos] == '/':
        pos += 1
        den_start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if pos == den_start:
            raise LiteralSyntaxError("expected a denominator", source, offset + pos)
        denominator = int(text[den_start:pos])
        if denominator == 0:
            raise LiteralSyntaxError("denominator must be positive", source, offset + den_start)
        return Fraction(numerator, denominator), pos
    return Fraction(numerator), pos


def _parse_term(text: str, pos: int, source: str, offset: int) -> Tuple[GaussianRational, int]:
    value, pos = _parse_unsigned_rational(text, pos, source, offset)
    if pos < len(text) and text[pos] == 'i':
        return GaussianRational(0, 1 if value is None else value), pos + 1
    if value is None:
        raise LiteralSyntaxError("expected a rational or 'i'", source, offset + pos)
    return GaussianRational(value), pos


def parse_scalar(source: str) -> GaussianRational:
    """
    Parse an exact complex scalar such as "1", "-1/2+3/4i", "i", "-i"

    Grammar: scalar := term (('+'|'-') term)? ; term := rational | rational? 'i'

    Raises:
        LiteralSyntaxError: annotated with the offending column
    """
    text = source.strip()
    offset = len(source) - len(source.lstrip())
    if not text:
        raise LiteralSyntaxError("empty scalar", source, offset)
    pos = 0
    negative = False
    if text[pos] in '+-':
        negative = text[pos] == '-'
        pos += 1
    value, pos = _parse_term(text, pos, source, offset)
    if negative:
        value = -value
    if pos < len(text):
        if text[pos] not in '+-':
            raise LiteralSyntaxError(f"unexpected character {text[pos]!r}", source, offset + pos)
        negative = text[pos] == '-'
        second, pos = _parse_term(text, pos + 1, source, offset)
        value = value - second if negative else value + second
    if pos != len(text):
        raise LiteralSyntaxError(f"unexpected character {text[pos]!r}", source, offset + pos)
    return value


def _imaginary_term(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}i"


def format_scalar(z: Scalar) -> str:
    """Render a scalar in the literal grammar (inexact scalars get 12 significant digits)"""
    if not is_exact_scalar(z):
        z = complex(z)
        return f"{z.real:.12g}{z.imag:+.12g}i"
    z = GaussianRational.coerce(z)
    if z.im == 0:
        return str(z.re)
    if z.re == 0:
        return _imaginary_term(z.im)
    imaginary = _imaginary_term(abs(z.im))
    return f"{z.re}{'+' if z.im > 0 else '-'}{imaginary}"
