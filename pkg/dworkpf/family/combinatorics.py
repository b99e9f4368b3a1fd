import logging
from itertools import product

from sympy.utilities.iterables import partitions as _sympy_partitions

from ..models import EigenspaceBasis, Monomial, NotBasisMonomialError

logger = logging.getLogger('dworkpf.family.combinatorics')


def is_basis_monomial(w):
    return Monomial.coerce(w).is_basis


def dimension(n):
    """Rank of the module: (n-1)^(n-1) - (n-1)^(n-2) + ... + (-1)^(n) (n-1), alternating from the top."""
    if n < 2:
        raise ValueError("The degree n must be at least 2, got {0}".format(n))
    return sum((-1) ** (n - 1 - j) * (n - 1) ** j for j in range(1, n))


def basis_monomials(n):
    """All basis monomials for degree n in lexicographic order."""
    return [Monomial(e) for e in product(range(1, n), repeat=n) if sum(e) % n == 0]


def orbit(w):
    w = Monomial.coerce(w)
    if not w.is_basis:
        raise NotBasisMonomialError(w)
    members = [w.shifted(m) for m in range(w.n) if not w.excludes_shift(m)]
    return EigenspaceBasis(w.n, members)


def eigenspaces(n):
    """Distinct eigenspaces covering every basis monomial, ordered by their smallest member."""
    seen = set()
    spaces = []
    for w in basis_monomials(n):
        if w in seen:
            continue
        space = orbit(w)
        seen.update(space.members)
        spaces.append(space)
    logger.debug('Degree {0} splits into {1} eigenspaces'.format(n, len(spaces)))
    return spaces


def _descending(partition):
    return tuple(part for part, count in sorted(partition.items(), reverse=True) for _ in range(count))


def partitions(m):
    """All partitions of m as descending tuples."""
    if m < 1:
        raise ValueError("Can only partition a positive integer, got {0}".format(m))
    # sympy reuses the yielded dict, so each one is converted immediately.
    return [_descending(p) for p in _sympy_partitions(m)]


def restricted_partitions(m, c):
    """Partitions of m into exactly c parts, each part at most c - 1."""
    if m < 1 or c < 1:
        raise ValueError("Both m and c must be positive, got m={0}, c={1}".format(m, c))
    if c < 2:
        return []
    result = []
    for p in _sympy_partitions(m, m=c, k=c - 1):
        if sum(p.values()) == c and sum(part * count for part, count in p.items()) == m:
            result.append(_descending(p))
    return result


def representative_candidates(n):
    """Monomials from partitions of n*k into n parts below n that contain a 1, for k up to ceil((n-1)/2).

    Ordered by exponent sum, then lexicographically on the ascending part sequence.
    """
    candidates = []
    for k in range(1, n // 2 + 1):
        level = [p for p in restricted_partitions(n * k, n) if 1 in p]
        candidates.extend(sorted(level, key=lambda p: tuple(reversed(p))))
    return [Monomial(p) for p in candidates]


def basis_representatives(n, distinct=True):
    """Representatives of the eigenspaces up to permutation of the variables.

    With distinct=False every candidate is returned. Otherwise a candidate is skipped when a permutation of
    it already lies in the eigenspace of an earlier representative.
    """
    if n < 2:
        raise ValueError("The degree n must be at least 2, got {0}".format(n))
    candidates = representative_candidates(n)
    if not distinct:
        return candidates
    covered = set()
    representatives = []
    for w in candidates:
        if w.sorted_key() in covered:
            continue
        representatives.append(w)
        covered.update(member.sorted_key() for member in orbit(w))
    logger.debug('Kept {0} of {1} candidate representatives for n = {2}'.format(len(representatives),
                                                                               len(candidates), n))
    return representatives
