import logging
from fractions import Fraction

from sympy import Poly, Symbol, SympifyError, fraction, sympify, together
from sympy.polys.domains import QQ
from sympy.polys.polyerrors import BasePolynomialError

from .exceptions import DivergentAtInfinityError, DivisionByZeroError, PoleAtPointError, ZeroDenominatorError
from .polynomial import RING, X, Polynomial, cofactors
from .rationals import from_ground, to_ground

logger = logging.getLogger('dworkpf.algebra.rational_function')


def _canonical(num, den):
    """Reduced form of num/den with a monic denominator. Both arguments are elements of RING."""
    if not den:
        raise ZeroDenominatorError("Denominator of a rational function must be nonzero")
    if not num:
        return RING.zero, RING.one
    if den.is_ground:
        return num.quo_ground(den.LC), RING.one
    _, num, den = cofactors(num, den)
    lc = den.LC
    if lc != QQ.one:
        num = num.quo_ground(lc)
        den = den.quo_ground(lc)
    return num, den


class RationalFunction(object):
    """Quotient of two polynomials in one variable, always kept in canonical form.

    The denominator is monic and shares no factor with the numerator, so equality of two
    rational functions is structural.
    """
    __slots__ = ('_num', '_den')

    def __init__(self, num=0, den=1):
        num, den = _as_element(num), _as_element(den)
        self._num, self._den = _canonical(num, den)

    @classmethod
    def _raw(cls, num, den):
        rf = cls.__new__(cls)
        rf._num = num
        rf._den = den
        return rf

    @classmethod
    def _from_elements(cls, num, den):
        return cls._raw(*_canonical(num, den))

    @classmethod
    def variable(cls):
        return cls._raw(X, RING.one)

    @classmethod
    def constant(cls, value):
        return cls._raw(RING(to_ground(value)), RING.one)

    @classmethod
    def parse(cls, text, variable='x'):
        """Parses an expression such as "-x**2/(18*(x**6 - 1))" in the named variable."""
        symbol = Symbol(variable)
        try:
            expression = together(sympify(str(text), locals={variable: symbol}))
            num_expr, den_expr = fraction(expression)
            num = Poly(num_expr, symbol, domain=QQ).as_dict(native=True)
            den = Poly(den_expr, symbol, domain=QQ).as_dict(native=True)
        except (SympifyError, BasePolynomialError, TypeError, SyntaxError) as e:
            error = "Cannot parse {0!r} as a rational function of {1}: {2}".format(text, variable, e)
            raise ValueError(error)
        return cls._from_elements(RING.from_dict(num), RING.from_dict(den))

    @property
    def num(self):
        return Polynomial._wrap(self._num)

    @property
    def den(self):
        return Polynomial._wrap(self._den)

    @property
    def is_zero(self):
        return not self._num

    @property
    def is_constant(self):
        return self._num.is_ground and self._den.is_ground

    @property
    def constant_value(self):
        if not self.is_constant:
            raise ValueError("{0!r} depends on the variable".format(self))
        if not self._num:
            return Fraction(0)
        return from_ground(self._num.LC)

    def derivative(self):
        num = self._num.diff(X) * self._den - self._num * self._den.diff(X)
        return RationalFunction._from_elements(num, self._den ** 2)

    def evaluate(self, point):
        ground = to_ground(point)
        den = self._den.evaluate(X, ground)
        if not den:
            raise PoleAtPointError(Fraction(point))
        return from_ground(self._num.evaluate(X, ground)) / from_ground(den)

    __call__ = evaluate

    def limit_at_infinity(self):
        if not self._num:
            return Fraction(0)
        num_degree, den_degree = self._num.degree(), self._den.degree()
        if num_degree > den_degree:
            raise DivergentAtInfinityError("{0} diverges at infinity".format(self))
        if num_degree < den_degree:
            return Fraction(0)
        return from_ground(self._num.LC) / from_ground(self._den.LC)

    def scale(self, factor):
        return RationalFunction._raw(self._num * to_ground(factor), self._den) if factor else RationalFunction()

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._num:
            return self
        if not self._num:
            return other
        if self._den == other._den:
            return RationalFunction._from_elements(self._num + other._num, self._den)
        return RationalFunction._from_elements(self._num * other._den + other._num * self._den,
                                               self._den * other._den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction._raw(-self._num, self._den)

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not self._num or not other._num:
            return RationalFunction()
        return RationalFunction._from_elements(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        if not other._num:
            raise DivisionByZeroError("Division of {0} by the zero rational function".format(self))
        return RationalFunction._from_elements(self._num * other._den, self._den * other._num)

    def __rtruediv__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return other / self

    def __pow__(self, exponent):
        if exponent < 0:
            return RationalFunction.constant(1) / (self ** -exponent)
        return RationalFunction._raw(self._num ** exponent, self._den ** exponent)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._num == other._num and self._den == other._den

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self.num, self.den))

    def __bool__(self):
        return bool(self._num)

    def to_string(self, variable='x'):
        symbol = Symbol(variable)
        num = str(self._num.as_expr(symbol))
        if self._den == RING.one:
            return num
        return "({0}) / ({1})".format(num, self._den.as_expr(symbol))

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "<RationalFunction {0}>".format(self.to_string())

    def __reduce__(self):
        return RationalFunction.parse, (self.to_string(), 'x')


def _as_element(value):
    if isinstance(value, Polynomial):
        return value.element
    return RING(to_ground(value))


def _coerce(value):
    if isinstance(value, RationalFunction):
        return value
    if isinstance(value, Polynomial):
        return RationalFunction._raw(value.element, RING.one)
    try:
        return RationalFunction.constant(value)
    except (TypeError, ValueError):
        return NotImplemented


def rf_normalize(num, den):
    return RationalFunction(num, den)


def rf_arith(op, a, b):
    operations = {
        'add': lambda: a + b,
        'sub': lambda: a - b,
        'mul': lambda: a * b,
        'div': lambda: a / b,
    }
    if op not in operations:
        raise ValueError("Unknown operation {0!r}. Expected one of {1}".format(op, sorted(operations)))
    return operations[op]()


def rf_eval(f, point):
    return f.evaluate(point)


def limit_at_infinity(f):
    return f.limit_at_infinity()
