from ..algebra import format_rational
from .property_decorators import property_is_rational_list


class HGParams(object):
    """Numerator parameters alphas and denominator parameters betas of a hypergeometric equation.

    Both are multisets, stored sorted ascending. The denominator parameter 1 is implicit and never listed.
    """

    def __init__(self, alphas, betas):
        self.alphas = alphas
        self.betas = betas

    @property
    def alphas(self):
        return self._alphas

    @alphas.setter
    @property_is_rational_list
    def alphas(self, value):
        self._alphas = value

    @property
    def betas(self):
        return self._betas

    @betas.setter
    @property_is_rational_list
    def betas(self, value):
        self._betas = value

    @property
    def order(self):
        return len(self._alphas)

    @property
    def is_nondegenerate(self):
        return not set(self._alphas) & set(self._betas)

    def to_json(self):
        return {
            'alphas': [format_rational(a) for a in self._alphas],
            'betas': [format_rational(b) for b in self._betas],
        }

    @classmethod
    def from_json(cls, document):
        return cls(document['alphas'], document['betas'])

    def __eq__(self, other):
        if not isinstance(other, HGParams):
            return NotImplemented
        return self._alphas == other._alphas and self._betas == other._betas

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash((self._alphas, self._betas))

    def __str__(self):
        return "D({0}; {1})".format(', '.join(format_rational(a) for a in self._alphas),
                                    ', '.join(format_rational(b) for b in self._betas))

    def __repr__(self):
        return "<HGParams {0}>".format(self)
