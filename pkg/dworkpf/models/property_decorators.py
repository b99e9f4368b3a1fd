from fractions import Fraction
from functools import wraps

from .exceptions import InvalidMonomialError


def _enum_values(enum_type):
    return [v for k, v in vars(enum_type).items() if not k.startswith('_')]


def property_is_enum(enum_type):
    def property_type_decorator(func):
        @wraps(func)
        def wrapper(self, value):
            if value is not None and value not in _enum_values(enum_type):
                error = "Invalid value: {0}. {1} must be one of {2}.".format(value, func.__name__,
                                                                             sorted(_enum_values(enum_type)))
                raise ValueError(error)
            return func(self, value)

        return wrapper

    return property_type_decorator


def property_is_boolean(func):
    @wraps(func)
    def wrapper(self, value):
        if not isinstance(value, bool):
            error = "Boolean expected for {0} flag.".format(func.__name__)
            raise ValueError(error)
        return func(self, value)

    return wrapper


def property_not_nullable(func):
    @wraps(func)
    def wrapper(self, value):
        if value is None:
            error = "{0} must be defined.".format(func.__name__)
            raise ValueError(error)
        return func(self, value)

    return wrapper


def property_is_int(range, allowed=None):
    '''Takes a range of ints and a list of exemptions to check against
    when setting a property on a model. The range is a tuple of (min, max), either end may be None
    for an open bound, and the allowed list (empty by default) allows values outside that range.

    Example: the family degree needs n >= 2 but has no upper bound, so it uses (2, None).
    '''

    if allowed is None:
        allowed = ()  # Empty tuple for fast no-op testing.

    def property_type_decorator(func):
        @wraps(func)
        def wrapper(self, value):
            error = "Invalid {0} defined: {1}.".format(func.__name__, value)

            if isinstance(value, bool) or not isinstance(value, int):
                if value in allowed:
                    return func(self, value)
                raise ValueError(error)

            if range is not None:
                min, max = range
                too_small = min is not None and value < min
                too_large = max is not None and value > max
                if (too_small or too_large) and (value not in allowed):
                    raise ValueError(error)

            return func(self, value)
        return wrapper
    return property_type_decorator


def property_is_rational_list(func):
    """Takes a list of ints, Fractions or "p/q" strings and turns it into a sorted tuple of Fractions.

    Parameter multisets are compared after sorting, so they are stored sorted.
    """

    @wraps(func)
    def wrapper(self, value):
        if value is None or isinstance(value, str):
            raise ValueError("Cannot convert {0!r} into a list of rationals, cannot update {1}".format(value,
                                                                                                    func.__name__))
        try:
            rationals = tuple(sorted(Fraction(str(v)) if isinstance(v, str) else Fraction(v) for v in value))
        except (TypeError, ValueError, ZeroDivisionError) as e:
            raise ValueError("Invalid rational in {0}: {1}".format(func.__name__, e))
        return func(self, rationals)
    return wrapper


def property_is_exponents(func):
    """Validates an exponent tuple: at least two non-negative ints whose sum is divisible by their count."""

    @wraps(func)
    def wrapper(self, value):
        try:
            exponents = tuple(value)
        except TypeError:
            raise InvalidMonomialError("Exponents must be a sequence of integers, got {0!r}".format(value))
        if len(exponents) < 2:
            raise InvalidMonomialError("A monomial needs at least 2 exponents, got {0}".format(len(exponents)))
        if any(isinstance(e, bool) or not isinstance(e, int) or e < 0 for e in exponents):
            raise InvalidMonomialError("Exponents must be non-negative integers, got {0!r}".format(exponents))
        n = len(exponents)
        if sum(exponents) % n:
            error = "Exponent sum {0} of {1!r} is not divisible by n = {2}".format(sum(exponents), exponents, n)
            raise InvalidMonomialError(error)
        return func(self, exponents)
    return wrapper
