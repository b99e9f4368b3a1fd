import logging
from fractions import Fraction
from math import comb

from ..algebra import RationalFunction
from ..models import Combination, InvalidMonomialError, Monomial
from .component import Component, basis_monomial_required
from .exceptions import ReductionOverflowError

logger = logging.getLogger('dworkpf.family.reduction')

_LAMBDA = RationalFunction.variable()


def _scaled_into(target, expression, factor):
    """target += factor * expression, dropping terms that cancel."""
    for mono, coeff in expression.items():
        total = target.get(mono)
        total = coeff * factor if total is None else total + coeff * factor
        if total:
            target[mono] = total
        else:
            target.pop(mono, None)


class Reduction(Component):
    """Rewrites monomials with an exponent of at least n in the basis of the module.

    A pivot exponent m_i >= n is lowered with the relation

        x^m = ((n - m_i)/n) x^(m - n e_i) + lam x^(m - n e_i + (1,...,1))

    The second term keeps the exponent sum and the first lowers it by n. Following the second term from a
    monomial gives a chain that ends at a basis monomial, an already reduced monomial, or runs into a cycle of
    length L which is solved by dividing by 1 - lam^L. Every monomial met is memoised per family.
    """

    def __init__(self, parent_family):
        super(Reduction, self).__init__(parent_family)
        self._memo = dict()

    @property
    def memo_size(self):
        return len(self._memo)

    def clear(self):
        self._memo.clear()

    def _pivot(self, m):
        n = self.n
        if self.parent_family.pivot == self.parent_family.Pivot.LargestEntry:
            return m.index(max(m))
        return next(i for i, e in enumerate(m) if e >= n)

    def _is_reduced(self, m):
        n = self.n
        return all(e < n for e in m)

    def _lowered(self, m):
        n = self.n
        i = self._pivot(m)
        return m[:i] + (m[i] - n,) + m[i + 1:], Fraction(n - m[i], n)

    def _successor(self, m):
        lowered, _ = self._lowered(m)
        return tuple(e + 1 for e in lowered)

    def _known(self, m):
        """The expression of m if it is reduced or memoised, else None."""
        if self._is_reduced(m):
            return {m: RationalFunction.constant(1)}
        return self._memo.get(m)

    def _local(self, m):
        """The exponent-lowering part of the rewrite of m. Its weight vanishes exactly when a zero exponent appears."""
        lowered, weight = self._lowered(m)
        local = dict()
        if weight:
            _scaled_into(local, self._known(lowered), weight)
        return local

    def _walk(self, start):
        """Follows successors from start. Returns the chain, the known monomial ending it and the cycle start."""
        n = self.n
        limit = max(max(start) * n * (len(self._memo) + 1), comb(sum(start) - 1, n - 1))
        chain = []
        positions = dict()
        node = start
        while self._known(node) is None:
            if node in positions:
                return chain, None, positions[node]
            if len(chain) >= limit:
                raise ReductionOverflowError(Monomial(start), limit)
            positions[node] = len(chain)
            chain.append(node)
            node = self._successor(node)
        return chain, node, None

    def _close(self, chain, end, cycle_start):
        """Memoises every monomial of a chain whose lowered terms are all known."""
        locals_ = [self._local(m) for m in chain]

        if cycle_start is None:
            tail = self._known(end)
        else:
            length = len(chain) - cycle_start
            accumulated = dict()
            for k in range(len(chain) - 1, cycle_start - 1, -1):
                shifted = dict()
                _scaled_into(shifted, accumulated, _LAMBDA)
                _scaled_into(shifted, locals_[k], 1)
                accumulated = shifted
            tail = dict()
            _scaled_into(tail, accumulated, 1 / (1 - _LAMBDA ** length))
            logger.debug('Closed a cycle of length {0} at {1}'.format(length, chain[cycle_start]))

        expression = tail
        for k in range(len(chain) - 1, -1, -1):
            current = dict()
            _scaled_into(current, expression, _LAMBDA)
            _scaled_into(current, locals_[k], 1)
            expression = current
            self._memo[chain[k]] = expression
        logger.debug('Reduced a chain of {0} monomials from {1}; memo holds {2}'.format(len(chain), chain[0],
                                                                                       len(self._memo)))

    def _express(self, start):
        known = self._known(start)
        if known is not None:
            return known

        # Lowered terms have exponent sum n less than their chain, so the worklist only grows downwards.
        pending = [start]
        while pending:
            top = pending[-1]
            if self._known(top) is not None:
                pending.pop()
                continue
            chain, end, cycle_start = self._walk(top)
            missing = [lowered for lowered, weight in map(self._lowered, chain)
                       if weight and self._known(lowered) is None]
            if missing:
                pending.extend(missing)
                continue
            self._close(chain, end, cycle_start)
            pending.pop()
        return self._memo[start]

    def reduce(self, c, w):
        """Expresses c * x^w as a combination of basis monomials.

        Every exponent of w must be at least 1. Monomials with a zero exponent lie outside the module this
        reduction works in and raise InvalidMonomialError.
        """
        w = self.parent_family.monomial(w)
        if w.has_zero_exponent:
            raise InvalidMonomialError("Cannot reduce {0}: every exponent must be at least 1".format(w))
        c = c if isinstance(c, RationalFunction) else RationalFunction.constant(c)
        result = Combination(self.n)
        if not c:
            return result
        for exponents, coeff in self._express(w.exponents).items():
            result.add_term(coeff * c, Monomial(exponents))
        return result

    @basis_monomial_required
    def nabla(self, w):
        """Derivative of x^w in the parameter: the reduction of -n x^(w + (1,...,1))."""
        return self.reduce(-self.n, w.plus_ones())

    def nabla_combination(self, combination):
        """Product rule: the derivative of f x^w is f' x^w + f times the derivative of x^w."""
        result = Combination(self.n)
        for term in combination:
            result.add_term(term.coeff.derivative(), term.mono)
            result = result + self.nabla(term.mono).scale(term.coeff)
        return result
