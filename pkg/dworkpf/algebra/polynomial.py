from sympy import Symbol
from sympy.polys.densebasic import dup_from_dict, dup_to_dict
from sympy.polys.domains import QQ
from sympy.polys.euclidtools import dup_inner_gcd
from sympy.polys.rings import ring

from .exceptions import DivisionByZeroError
from .rationals import from_ground, to_ground

# Single polynomial variable throughout; the lambda -> z renaming is only a display name.
RING, X = ring('x', QQ)


def cofactors(a, b):
    """Returns (h, a / h, b / h) for elements a, b of RING, where h is their gcd.

    Runs on the dense representation: heuristic gcd first, subresultant PRS when the heuristic gives up.
    """
    h, cff, cfg = dup_inner_gcd(dup_from_dict(dict(a), QQ), dup_from_dict(dict(b), QQ), QQ)
    return tuple(RING.from_dict(dup_to_dict(f, QQ)) for f in (h, cff, cfg))


class Polynomial(object):
    """Univariate polynomial over the rationals.

    Backed by an element of sympy's sparse ring QQ[x]. Coefficient lists are indexed by degree,
    lowest degree first.
    """
    __slots__ = ('_element',)

    def __init__(self, coefficients=()):
        terms = dict(((degree,), to_ground(c)) for degree, c in enumerate(coefficients))
        self._element = RING.from_dict(terms)

    @classmethod
    def _wrap(cls, element):
        polynomial = cls.__new__(cls)
        polynomial._element = element
        return polynomial

    @property
    def element(self):
        return self._element

    @property
    def is_zero(self):
        return not self._element

    @property
    def degree(self):
        if not self._element:
            return -1
        return self._element.degree()

    @property
    def coefficients(self):
        if not self._element:
            return []
        zero = QQ.zero
        return [from_ground(self._element.get((k,), zero)) for k in range(self.degree + 1)]

    @property
    def leading_coefficient(self):
        return from_ground(self._element.LC)

    def exponents(self):
        return sorted(k for (k,) in self._element.keys())

    def __call__(self, point):
        return from_ground(self._element.evaluate(X, to_ground(point)))

    def derivative(self):
        return Polynomial._wrap(self._element.diff(X))

    def gcd(self, other):
        """Monic greatest common divisor."""
        h, _, _ = cofactors(self._element, _coerce(other)._element)
        return Polynomial._wrap(h.monic())

    def lcm(self, other):
        """Monic least common multiple."""
        other = _coerce(other)
        if not self._element or not other._element:
            return Polynomial()
        _, cff, _ = cofactors(self._element, other._element)
        return Polynomial._wrap((cff * other._element).monic())

    def exquo(self, other):
        return Polynomial._wrap(self._element.exquo(_coerce(other)._element))

    def __divmod__(self, other):
        other = _coerce(other)
        if other.is_zero:
            raise DivisionByZeroError("Polynomial division by zero")
        quotient, remainder = self._element.div(other._element)
        return Polynomial._wrap(quotient), Polynomial._wrap(remainder)

    def substitute_power(self, n):
        """Rewrites p(x) = q(x**n) as q(x). Returns None when some exponent is not a multiple of n."""
        if any(k % n for k in self.exponents()):
            return None
        return Polynomial._wrap(RING.from_dict(dict(((k // n,), c) for (k,), c in self._element.items())))

    def __add__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(self._element + other._element)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(self._element - other._element)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(other._element - self._element)

    def __mul__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return Polynomial._wrap(self._element * other._element)

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial._wrap(-self._element)

    def __pow__(self, exponent):
        return Polynomial._wrap(self._element ** exponent)

    def __eq__(self, other):
        other = _coerce(other)
        if other is NotImplemented:
            return other
        return self._element == other._element

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(tuple(self.coefficients))

    def to_string(self, variable='x'):
        return str(self._element.as_expr(Symbol(variable)))

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "<Polynomial {0}>".format(self.to_string())


def _coerce(value):
    if isinstance(value, Polynomial):
        return value
    try:
        return Polynomial._wrap(RING(to_ground(value)))
    except (TypeError, ValueError):
        return NotImplemented
