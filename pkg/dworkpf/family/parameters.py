import logging
from collections import Counter
from fractions import Fraction

from ..algebra import RationalFunction, eigenvalues, fractional_part
from ..models import HGParams, Monomial, NotBasisMonomialError
from .component import Component, basis_monomial_required
from .exceptions import AmbiguousUnitBetaError, InsufficientOrderError, MissingUnitBetaError
from .series import hg_series

logger = logging.getLogger('dworkpf.family.parameters')


def _into_unit_interval(value):
    """Reduces a rational into (0, 1]."""
    reduced = fractional_part(value)
    return reduced if reduced else Fraction(1)


def katz_oracle(w):
    """Parameters predicted by cancelling the exponents of w against 0, 1, ..., n-1.

    Surviving exponents give the alphas as w_j/n. Surviving residues k != 0 give the betas as k/n; the residue 0
    always survives and stands for the omitted denominator parameter 1.
    """
    w = Monomial.coerce(w)
    if not w.is_basis:
        raise NotBasisMonomialError(w)
    n = w.n
    residues = Counter(range(n))
    surviving = []
    for e in w:
        if residues[e]:
            residues[e] -= 1
        else:
            surviving.append(e)
    return HGParams([Fraction(e, n) for e in surviving],
                    [Fraction(k, n) for k in residues.elements() if k])


def params_from_residues(residue_zero, residue_infinity):
    alphas = [fractional_part(e) for e in eigenvalues(residue_infinity)]
    betas = [1 - e for e in eigenvalues(residue_zero)]
    if 1 not in betas:
        raise MissingUnitBetaError("Residue at 0 has no eigenvalue 0, so there is no holomorphic solution")
    betas.remove(1)
    betas = [_into_unit_interval(b) for b in betas]
    if 1 in betas:
        raise AmbiguousUnitBetaError("Residue at 0 has the eigenvalue 0 (mod 1) more than once")
    return HGParams(alphas, betas)


class Parameters(Component):
    @basis_monomial_required
    def extract(self, w):
        pipeline = self.parent_family.connection.pipeline(w)
        params = params_from_residues(pipeline.residue_zero, pipeline.residue_infinity)
        logger.info('Extracted {0} for {1}'.format(params, w))
        return params

    @basis_monomial_required
    def oracle(self, w):
        return katz_oracle(w)

    @basis_monomial_required
    def local_exponents(self, w):
        """Eigenvalues of the residues at 0, 1 and infinity."""
        pipeline = self.parent_family.connection.pipeline(w)
        return {
            '0': eigenvalues(pipeline.residue_zero),
            '1': eigenvalues(pipeline.residue_one),
            'infinity': eigenvalues(pipeline.residue_infinity),
        }

    @basis_monomial_required
    def verify_annihilation(self, w, N, params=None):
        """Checks that F(lam^n) solves the scalar equation read off the companion system of w.

        F is the hypergeometric series of params (the extracted parameters by default) truncated at N // n.
        The equation y^(k) = sum_j c_j y^(j) is multiplied by the lcm D of the denominators of the c_j and
        the residual must vanish through order N - deg D - k.
        """
        n = self.n
        pipeline = self.parent_family.connection.pipeline(w)
        k = pipeline.size
        if N < (k + 1) * n:
            raise InsufficientOrderError("Order {0} is below (k + 1) n = {1} for {2}".format(N, (k + 1) * n, w))
        if params is None:
            params = self.extract(w)

        last_row = pipeline.companion.row(k - 1)
        D = last_row[0].den
        for c in last_row[1:]:
            D = D.lcm(c.den)
        bound = N - D.degree - k
        if bound < 0:
            raise InsufficientOrderError("Order {0} leaves no checkable terms after clearing degree {1}".format(
                N, D.degree))
        cleared = [(c * RationalFunction(D)).num for c in last_row]

        y = hg_series(params, N // n).compose_power(n, N)
        derivatives = [y]
        for _ in range(k):
            derivatives.append(derivatives[-1].derivative())
        residual = derivatives[k].multiply(D)
        for j, polynomial in enumerate(cleared):
            residual = residual - derivatives[j].multiply(polynomial)

        first = residual.leading_order()
        verified = first is None or first > bound
        logger.debug('Residual for {0} with {1} vanishes through order {2}: {3}'.format(w, params, bound, verified))
        return verified
