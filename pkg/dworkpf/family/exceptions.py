class FamilyError(Exception):
    pass


class ReductionOverflowError(FamilyError):
    def __init__(self, monomial, limit):
        self.monomial = monomial
        self.limit = limit
        super(ReductionOverflowError, self).__init__(str(self))

    def __str__(self):
        return "Reduction of {0} exceeded {1} steps without closing".format(self.monomial, self.limit)

    def __reduce__(self):
        return self.__class__, (self.monomial, self.limit)


class OrbitClosureError(FamilyError):
    pass


class CyclicVectorError(FamilyError):
    pass


class CompanionShapeError(FamilyError):
    pass


class StillSingularError(FamilyError):
    pass


class NotPowerCompatibleError(FamilyError):
    pass


class HigherOrderPoleError(FamilyError):
    pass


class MissingUnitBetaError(FamilyError):
    pass


class AmbiguousUnitBetaError(FamilyError):
    pass


class ZeroDenominatorInRecurrenceError(FamilyError):
    pass


class InsufficientOrderError(FamilyError):
    pass
