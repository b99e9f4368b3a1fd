from functools import wraps


class Component(object):
    def __init__(self, parent_family):
        self.parent_family = parent_family

    @property
    def n(self):
        return self.parent_family.n


def basis_monomial_required(func):
    """Coerce the first argument into a basis monomial of the parent family.

    Accepts a Monomial, an exponent sequence or comma-separated text. It will raise an exception if
    the monomial has the wrong number of exponents or an exponent outside [1, n-1].

    Raises:
        InvalidMonomialError, DegreeMismatchError, NotBasisMonomialError

    Example:
    >>> @basis_monomial_required
    >>> def block(self, w):
    >>>     ...
    """
    @wraps(func)
    def wrapper(self, w, *args, **kwargs):
        w = self.parent_family.assert_basis_monomial(w)
        return func(self, w, *args, **kwargs)
    return wrapper
