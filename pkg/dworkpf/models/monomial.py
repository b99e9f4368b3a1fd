from .exceptions import InvalidMonomialError
from .property_decorators import property_is_exponents


class Monomial(object):
    """Exponent tuple of x1^w1 ... xn^wn. The degree n of the family is the tuple length."""

    def __init__(self, exponents):
        self._set_exponents(exponents)

    @property_is_exponents
    def _set_exponents(self, value):
        self._exponents = value

    @classmethod
    def parse(cls, text):
        """Parses comma-separated exponents such as "1,1,1,2,2,5"."""
        try:
            exponents = [int(part) for part in str(text).split(',')]
        except ValueError:
            error = "Invalid monomial: {0!r}. Expected comma-separated integers such as '1,1,1,2,2,5'.".format(text)
            raise InvalidMonomialError(error)
        return cls(exponents)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, Monomial):
            return value
        if isinstance(value, str):
            return cls.parse(value)
        return cls(value)

    @property
    def exponents(self):
        return self._exponents

    @property
    def n(self):
        return len(self._exponents)

    @property
    def degree(self):
        return sum(self._exponents)

    @property
    def is_basis(self):
        n = self.n
        return all(1 <= e <= n - 1 for e in self._exponents)

    @property
    def has_zero_exponent(self):
        return 0 in self._exponents

    def plus_ones(self, m=1):
        """w + m*(1,...,1) without reduction."""
        return Monomial(e + m for e in self._exponents)

    def shifted(self, m):
        """w + m*(1,...,1) with every exponent reduced mod n."""
        n = self.n
        return Monomial((e + m) % n for e in self._exponents)

    def excludes_shift(self, m):
        n = self.n
        return any((e + m) % n == 0 for e in self._exponents)

    def sorted_key(self):
        """Descending exponents: identical for monomials that differ by a permutation of the variables."""
        return tuple(sorted(self._exponents, reverse=True))

    def __len__(self):
        return len(self._exponents)

    def __iter__(self):
        return iter(self._exponents)

    def __getitem__(self, index):
        return self._exponents[index]

    def __eq__(self, other):
        if not isinstance(other, Monomial):
            return NotImplemented
        return self._exponents == other._exponents

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __lt__(self, other):
        return self._exponents < other._exponents

    def __hash__(self):
        return hash(self._exponents)

    def to_json(self):
        return str(self)

    def __str__(self):
        return ','.join(str(e) for e in self._exponents)

    def __repr__(self):
        return "<Monomial ({0})>".format(self)
