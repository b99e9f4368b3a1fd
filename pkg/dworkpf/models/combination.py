from ..algebra import RationalFunction
from .exceptions import DegreeMismatchError, NotBasisMonomialError
from .monomial import Monomial


class Term(object):
    def __init__(self, coeff, mono):
        coeff = coeff if isinstance(coeff, RationalFunction) else RationalFunction.constant(coeff)
        if not coeff:
            raise ValueError("A term must have a nonzero coefficient, got 0 for {0}".format(mono))
        self._coeff = coeff
        self._mono = Monomial.coerce(mono)

    @property
    def coeff(self):
        return self._coeff

    @property
    def mono(self):
        return self._mono

    def __eq__(self, other):
        if not isinstance(other, Term):
            return NotImplemented
        return self._coeff == other._coeff and self._mono == other._mono

    def __hash__(self):
        return hash((self._coeff, self._mono))

    def __repr__(self):
        return "<Term ({0})*[{1}]>".format(self._coeff, self._mono)


class Combination(object):
    """Linear combination of basis monomials with rational function coefficients.

    Terms with equal monomials are merged and zero terms are dropped as they are added.
    """

    def __init__(self, n, terms=None):
        self._n = n
        self._coefficients = dict()
        for coeff, mono in terms or ():
            self.add_term(coeff, mono)

    @property
    def n(self):
        return self._n

    def add_term(self, coeff, mono):
        mono = Monomial.coerce(mono)
        if mono.n != self._n:
            raise DegreeMismatchError("Monomial {0} does not have {1} exponents".format(mono, self._n))
        if not mono.is_basis:
            raise NotBasisMonomialError(mono)
        total = self._coefficients.get(mono, RationalFunction()) + coeff
        if total:
            self._coefficients[mono] = total
        else:
            self._coefficients.pop(mono, None)
        return self

    def coefficient(self, mono):
        return self._coefficients.get(Monomial.coerce(mono), RationalFunction())

    def monomials(self):
        return sorted(self._coefficients)

    @property
    def terms(self):
        return [Term(self._coefficients[mono], mono) for mono in self.monomials()]

    def scale(self, factor):
        return Combination(self._n, [(coeff * factor, mono) for mono, coeff in self._coefficients.items()])

    def __add__(self, other):
        if self._n != other._n:
            raise DegreeMismatchError("Cannot add combinations for n = {0} and n = {1}".format(self._n, other._n))
        result = Combination(self._n, [(coeff, mono) for mono, coeff in self._coefficients.items()])
        for mono, coeff in other._coefficients.items():
            result.add_term(coeff, mono)
        return result

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __len__(self):
        return len(self._coefficients)

    def __iter__(self):
        return iter(self.terms)

    def __bool__(self):
        return bool(self._coefficients)

    def __eq__(self, other):
        if not isinstance(other, Combination):
            return NotImplemented
        return self._n == other._n and self._coefficients == other._coefficients

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def to_json(self, variable='lam'):
        return [{'coeff': term.coeff.to_string(variable), 'monomial': str(term.mono)} for term in self.terms]

    @classmethod
    def from_json(cls, n, document, variable='lam'):
        return cls(n, [(RationalFunction.parse(item['coeff'], variable), Monomial.parse(item['monomial']))
                       for item in document])

    def to_string(self, variable='lam'):
        if not self._coefficients:
            return '0'
        return ' + '.join('({0})*[{1}]'.format(term.coeff.to_string(variable), term.mono) for term in self.terms)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return "<Combination {0}>".format(self.to_string())
