class InvalidMonomialError(ValueError):
    pass


class NotBasisMonomialError(ValueError):
    def __init__(self, monomial):
        self.monomial = monomial
        super(NotBasisMonomialError, self).__init__(str(self))

    def __str__(self):
        return "{0} is not a basis monomial: every exponent must lie in [1, {1}]".format(self.monomial,
                                                                                      self.monomial.n - 1)

    def __reduce__(self):
        return self.__class__, (self.monomial,)


class DegreeMismatchError(ValueError):
    pass
