import logging

from ..models import DegreeMismatchError, Monomial, NotBasisMonomialError
from ..models.property_decorators import property_is_enum, property_is_int, property_not_nullable
from . import combinatorics
from .connection import Connection
from .parameters import Parameters
from .reduction import Reduction

logger = logging.getLogger('dworkpf.family')


class DworkFamily(object):
    """The family x1^n + ... + xn^n - n lam x1...xn = 0 for one degree n.

    Owns the reduction memo shared by its components, so repeated queries on the same family reuse every
    monomial already reduced.
    """

    class Pivot:
        FirstIndex = 'first-index'
        LargestEntry = 'largest-entry'

    def __init__(self, n, pivot=Pivot.FirstIndex):
        self.n = n
        self.pivot = pivot

        self.reduction = Reduction(self)
        self.connection = Connection(self)
        self.parameters = Parameters(self)

    @property
    def n(self):
        return self._n

    @n.setter
    @property_is_int((2, None))
    def n(self, value):
        self._n = value

    @property
    def pivot(self):
        return self._pivot

    @pivot.setter
    @property_not_nullable
    @property_is_enum(Pivot)
    def pivot(self, value):
        self._pivot = value

    def monomial(self, w):
        w = Monomial.coerce(w)
        if w.n != self.n:
            error = "Monomial {0} has {1} exponents, but this family has degree {2}".format(w, w.n, self.n)
            raise DegreeMismatchError(error)
        return w

    def assert_basis_monomial(self, w):
        w = self.monomial(w)
        if not w.is_basis:
            raise NotBasisMonomialError(w)
        return w

    def dimension(self):
        return combinatorics.dimension(self.n)

    def basis_monomials(self):
        return combinatorics.basis_monomials(self.n)

    def orbit(self, w):
        return combinatorics.orbit(self.assert_basis_monomial(w))

    def eigenspaces(self):
        return combinatorics.eigenspaces(self.n)

    def representatives(self, distinct=True):
        return combinatorics.basis_representatives(self.n, distinct)

    def __repr__(self):
        return "<DworkFamily n={0} pivot={1}>".format(self.n, self.pivot)
