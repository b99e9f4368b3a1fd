class ExactAlgebraError(Exception):
    pass


class ZeroDenominatorError(ExactAlgebraError):
    pass


class DivisionByZeroError(ExactAlgebraError, ZeroDivisionError):
    pass


class DimensionMismatchError(ExactAlgebraError):
    def __init__(self, operation, left, right):
        self.operation = operation
        self.left = left
        self.right = right
        super(DimensionMismatchError, self).__init__(str(self))

    def __str__(self):
        return "Dimension mismatch in {0}: {1[0]}x{1[1]} against {2[0]}x{2[1]}".format(self.operation, self.left,
                                                                                       self.right)

    def __reduce__(self):
        return self.__class__, (self.operation, self.left, self.right)


class SingularMatrixError(ExactAlgebraError):
    pass


class NonConstantEntriesError(ExactAlgebraError):
    pass


class NonRationalSpectrumError(ExactAlgebraError):
    def __init__(self, remainder):
        self.remainder = remainder
        super(NonRationalSpectrumError, self).__init__(str(self))

    def __str__(self):
        return "Factor {0} has no rational roots".format(self.remainder)

    def __reduce__(self):
        return self.__class__, (self.remainder,)


class DivergentAtInfinityError(ExactAlgebraError):
    pass


class PoleAtPointError(ExactAlgebraError):
    def __init__(self, point):
        self.point = point
        super(PoleAtPointError, self).__init__(str(self))

    def __str__(self):
        return "Rational function has a pole at {0}".format(self.point)

    def __reduce__(self):
        return self.__class__, (self.point,)
