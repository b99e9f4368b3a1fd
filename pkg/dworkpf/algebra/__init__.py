from .exceptions import ExactAlgebraError, ZeroDenominatorError, DivisionByZeroError, DimensionMismatchError, \
    SingularMatrixError, NonConstantEntriesError, NonRationalSpectrumError, DivergentAtInfinityError, PoleAtPointError
from .rationals import parse_rational, format_rational, fractional_part
from .polynomial import Polynomial
from .rational_function import RationalFunction, rf_normalize, rf_arith, rf_eval, limit_at_infinity
from .matrix import RFMatrix, mat_mul, mat_inverse, mat_derivative
from .spectrum import char_poly, rational_roots, eigenvalues
