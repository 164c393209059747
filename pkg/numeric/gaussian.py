"""
Gaussian rational scalars: complex numbers whose real and imaginary parts are rationals.
"""
from fractions import Fraction
from typing import Union

from utils.exceptions import InputError

Rational = Fraction

ScalarLike = Union["GaussianRational", Fraction, int, str, complex]


def parse_rational(text: Union[str, int, Fraction]) -> Fraction:
    """
    Parse "p/q", an integer shorthand such as "2", or an exact decimal such as "0.25".

    Args:
        text: Serialized rational

    Returns:
        Fraction in canonical form (gcd 1, positive denominator)
    """
    if isinstance(text, Fraction):
        return text
    if isinstance(text, bool):
        raise InputError(f"Not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    s = str(text).strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(num.strip()) / Fraction(den.strip())
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as e:
        raise InputError(f"Not a rational: {text!r}") from e


def format_rational(value: Fraction) -> str:
    """Render a rational as "p/q", or "p" when the denominator is 1."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class GaussianRational:
    """Immutable complex number with exact rational components."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[Fraction, int, str] = 0, im: Union[Fraction, int, str] = 0):
        object.__setattr__(self, "re", parse_rational(re))
        object.__setattr__(self, "im", parse_rational(im))

    def __setattr__(self, key, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (GaussianRational, (self.re, self.im))

    @classmethod
    def coerce(cls, value: ScalarLike) -> "GaussianRational":
        """
        Convert ints, Fractions, rational strings and integral complex numbers.

        Args:
            value: Scalar to convert

        Returns:
            GaussianRational
        """
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, complex):
            if not (value.real.is_integer() and value.imag.is_integer()):
                raise InputError(f"Complex literal {value!r} is not a Gaussian integer")
            return cls(int(value.real), int(value.imag))
        if isinstance(value, float):
            raise InputError(f"Float {value!r} is not an exact scalar; pass a string")
        if isinstance(value, str):
            return cls.parse(value)
        return cls(value, 0)

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm_squared(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __add__(self, other: ScalarLike) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: ScalarLike) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other: ScalarLike) -> "GaussianRational":
        return GaussianRational.coerce(other) - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other: ScalarLike) -> "GaussianRational":
        other = GaussianRational.coerce(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.norm_squared()
        if n == 0:
            raise ZeroDivisionError("GaussianRational division by zero")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other: ScalarLike) -> "GaussianRational":
        return self * GaussianRational.coerce(other).inverse()

    def __rtruediv__(self, other: ScalarLike) -> "GaussianRational":
        return GaussianRational.coerce(other) * self.inverse()

    def __eq__(self, other) -> bool:
        try:
            other = GaussianRational.coerce(other)
        except InputError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def to_json(self) -> dict:
        return {"re": format_rational(self.re), "im": format_rational(self.im)}

    @classmethod
    def from_json(cls, data) -> "GaussianRational":
        """
        Decode {"re": "p/q", "im": "p/q"}; a bare number or string is a real scalar.

        Args:
            data: Decoded JSON value

        Returns:
            GaussianRational
        """
        if isinstance(data, dict):
            unknown = set(data) - {"re", "im"}
            if unknown:
                raise InputError(f"Unexpected scalar keys: {sorted(unknown)}")
            return cls(data.get("re", 0), data.get("im", 0))
        if isinstance(data, (list, tuple)) and len(data) == 2:
            return cls(data[0], data[1])
        if isinstance(data, str):
            return cls.parse(data)
        if isinstance(data, int) and not isinstance(data, bool):
            return cls(data, 0)
        raise InputError(f"Cannot decode scalar from {data!r}")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        """
        Parse "p/q", "2", "0.25", or complex literals such as "1+1j", "4-2i", "-i", "1/2j".

        Args:
            text: Scalar literal

        Returns:
            GaussianRational
        """
        s = text.strip().replace(" ", "").replace("i", "j")
        if not s.endswith("j"):
            return cls(parse_rational(s), 0)
        body = s[:-1]
        split = max(body.rfind("+"), body.rfind("-"))
        if split <= 0:
            re_text, im_text = "0", body
        else:
            re_text, im_text = body[:split], body[split:]
        if im_text in ("", "+", "-"):
            im_text += "1"
        return cls(parse_rational(re_text), parse_rational(im_text))

    def __repr__(self) -> str:
        if self.im == 0:
            return format_rational(self.re)
        sign = "+" if self.im > 0 else "-"
        im = abs(self.im)
        im_text = "" if im == 1 else format_rational(im)
        if self.re == 0:
            return f"{'-' if sign == '-' else ''}{im_text}i"
        return f"{format_rational(self.re)}{sign}{im_text}i"


ZERO = GaussianRational(0, 0)
ONE = GaussianRational(1, 0)
I = GaussianRational(0, 1)


def gr(re: Union[int, str, Fraction] = 0, im: Union[int, str, Fraction] = 0) -> GaussianRational:
    """Shorthand constructor."""
    return GaussianRational(re, im)
