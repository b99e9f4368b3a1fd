from fractions import Fraction

from sympy.polys.domains import QQ


def to_ground(value):
    """Converts an int, Fraction or "p/q" string into an element of sympy's QQ."""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_ground(value):
    return Fraction(int(value.numerator), int(value.denominator))


def parse_rational(text):
    try:
        return Fraction(str(text).strip())
    except (ValueError, ZeroDivisionError):
        error = "Invalid rational number: {0!r}. Expected 'p/q' or an integer.".format(text)
        raise ValueError(error)


def format_rational(value):
    # Fraction prints without the denominator when it is 1.
    return str(Fraction(value))


def fractional_part(value):
    """Reduces a rational number into [0, 1)."""
    value = Fraction(value)
    return value - (value.numerator // value.denominator)
