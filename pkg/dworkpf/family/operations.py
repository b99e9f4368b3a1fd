"""Monomial-level entry points. Each one runs on a shared family for the monomial's degree."""
from functools import lru_cache

from ..models import Monomial
from .family import DworkFamily


@lru_cache(maxsize=8)
def family_of_degree(n, pivot=DworkFamily.Pivot.FirstIndex):
    """Shared family for (n, pivot). The least recently used families are dropped together with their reduction
    memo and pipelines once more than eight are alive. Call family_of_degree.cache_clear() to release all of them.
    """
    return DworkFamily(n, pivot)


def _family(w, pivot=DworkFamily.Pivot.FirstIndex):
    w = Monomial.coerce(w)
    return family_of_degree(w.n, pivot), w


def reduce(c, w, pivot=DworkFamily.Pivot.FirstIndex):
    family, w = _family(w, pivot)
    return family.reduction.reduce(c, w)


def nabla(w):
    family, w = _family(w)
    return family.reduction.nabla(w)


def nabla_combination(combination):
    return family_of_degree(combination.n).reduction.nabla_combination(combination)


def connection_block(w):
    family, w = _family(w)
    return family.connection.block(w)


def pipeline(w):
    family, w = _family(w)
    return family.connection.pipeline(w)


def extract_params(w):
    family, w = _family(w)
    return family.parameters.extract(w)


def local_exponents(w):
    family, w = _family(w)
    return family.parameters.local_exponents(w)


def verify_annihilation(w, N, params=None):
    family, w = _family(w)
    return family.parameters.verify_annihilation(w, N, params)
