from fractions import Fraction

from ..models import PowerSeries
from .exceptions import ZeroDenominatorInRecurrenceError


def pochhammer(x, k):
    """Rising factorial x (x + 1) ... (x + k - 1)."""
    if k < 0:
        raise ValueError("Pochhammer symbol needs k >= 0, got {0}".format(k))
    result = Fraction(1)
    x = Fraction(x)
    for i in range(k):
        result *= x + i
    return result


def hg_series(params, N):
    """Coefficients of the hypergeometric series with the given parameters through order N."""
    if N < 0:
        raise ValueError("Truncation order must be non-negative, got {0}".format(N))
    coefficients = [Fraction(1)]
    for m in range(N):
        numerator = Fraction(1)
        for alpha in params.alphas:
            numerator *= alpha + m
        denominator = Fraction(m + 1)
        for beta in params.betas:
            denominator *= beta + m
        if not denominator:
            raise ZeroDenominatorInRecurrenceError("Denominator parameter hits zero at step {0}: {1}".format(
                m, ', '.join(str(b) for b in params.betas)))
        coefficients.append(coefficients[-1] * numerator / denominator)
    return PowerSeries(coefficients)
