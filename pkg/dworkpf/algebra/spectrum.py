import logging
from fractions import Fraction
from itertools import product

from sympy.ntheory import divisors
from sympy.polys.domains import QQ

from .exceptions import DimensionMismatchError, NonRationalSpectrumError
from .polynomial import X, Polynomial
from .rationals import from_ground, to_ground

logger = logging.getLogger('dworkpf.algebra.spectrum')


def char_poly(a):
    """Monic characteristic polynomial det(xI - a) of a constant square matrix."""
    if not a.is_square:
        raise DimensionMismatchError('char_poly', a.shape, (a.rows, a.rows))
    # Raises NonConstantEntriesError for entries depending on the variable.
    coefficients = a.to_domain_matrix().charpoly()
    return Polynomial([from_ground(c) for c in reversed(coefficients)])


def _candidates(element):
    _, cleared = element.clear_denoms()
    lead = abs(from_ground(cleared.LC).numerator)
    constant = abs(from_ground(cleared.get((0,), QQ.zero)).numerator)
    ratios = set(Fraction(p, q) for p, q in product(divisors(constant), divisors(lead)))
    return sorted(ratios | set(-r for r in ratios))


def rational_roots(p):
    """All roots of p with multiplicity, ascending.

    Zero roots are deflated first, then candidates p/q from the divisors of the cleared constant and
    leading coefficients are tried and deflated for as long as they keep vanishing.
    """
    if p.is_zero:
        raise ValueError("The zero polynomial has no finite root multiset")
    element = p.element
    roots = []
    while element.degree() > 0 and not element.get((0,), QQ.zero):
        element = element.exquo(X)
        roots.append(Fraction(0))

    if element.degree() > 0:
        for candidate in _candidates(element):
            ground = to_ground(candidate)
            while element.degree() > 0 and not element.evaluate(X, ground):
                element = element.exquo(X - ground)
                roots.append(candidate)
            if element.degree() == 0:
                break

    if element.degree() > 0:
        raise NonRationalSpectrumError(Polynomial._wrap(element))
    logger.debug('Found {0} rational roots of {1}'.format(len(roots), p))
    return sorted(roots)


def eigenvalues(a):
    return rational_roots(char_poly(a))
