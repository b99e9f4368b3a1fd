from .exceptions import DegreeMismatchError, NotBasisMonomialError
from .monomial import Monomial


class EigenspaceBasis(object):
    """Ordered basis of one eigenspace: the admissible shifts w + m*(1,...,1) mod n by ascending m."""

    def __init__(self, n, members):
        members = tuple(Monomial.coerce(m) for m in members)
        if not members:
            raise ValueError("An eigenspace basis needs at least one member")
        for member in members:
            if member.n != n:
                raise DegreeMismatchError("Member {0} does not have {1} exponents".format(member, n))
            if not member.is_basis:
                raise NotBasisMonomialError(member)
        if len(set(members)) != len(members):
            raise ValueError("Eigenspace members must be pairwise distinct: {0}".format(
                ', '.join(str(m) for m in members)))
        self._n = n
        self._members = members
        self._positions = dict((member, i) for i, member in enumerate(members))

    @property
    def n(self):
        return self._n

    @property
    def members(self):
        return self._members

    @property
    def representative(self):
        return self._members[0]

    @property
    def size(self):
        return len(self._members)

    def index(self, mono):
        """Position of a monomial in the basis, or None when it lies outside this eigenspace."""
        return self._positions.get(Monomial.coerce(mono))

    def key(self):
        return frozenset(self._members)

    def __contains__(self, mono):
        return self.index(mono) is not None

    def __len__(self):
        return len(self._members)

    def __iter__(self):
        return iter(self._members)

    def __getitem__(self, index):
        return self._members[index]

    def __eq__(self, other):
        if not isinstance(other, EigenspaceBasis):
            return NotImplemented
        return self._members == other._members

    def __hash__(self):
        return hash(self._members)

    def to_json(self):
        return [str(member) for member in self._members]

    def __repr__(self):
        return "<EigenspaceBasis [{0}]>".format('; '.join(str(m) for m in self._members))
