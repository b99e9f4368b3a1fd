from .algebra import ExactAlgebraError, ZeroDenominatorError, DivisionByZeroError, DimensionMismatchError, \
    SingularMatrixError, NonConstantEntriesError, NonRationalSpectrumError, DivergentAtInfinityError, \
    PoleAtPointError, Polynomial, RationalFunction, RFMatrix, rf_normalize, rf_arith, rf_eval, limit_at_infinity, \
    mat_mul, mat_inverse, mat_derivative, char_poly, rational_roots, eigenvalues, parse_rational, format_rational
from .models import InvalidMonomialError, NotBasisMonomialError, DegreeMismatchError, Monomial, Term, Combination, \
    EigenspaceBasis, ConnectionBlock, SystemMatrix, RegularizedSystem, SystemPipeline, HGParams, PowerSeries, \
    TableRow, CommandRequest
from .family import FamilyError, ReductionOverflowError, OrbitClosureError, CyclicVectorError, \
    CompanionShapeError, StillSingularError, NotPowerCompatibleError, HigherOrderPoleError, MissingUnitBetaError, \
    AmbiguousUnitBetaError, ZeroDenominatorInRecurrenceError, InsufficientOrderError, DworkFamily, \
    is_basis_monomial, dimension, basis_monomials, orbit, eigenspaces, partitions, restricted_partitions, \
    basis_representatives, system_matrix, cyclic_change_of_basis, companion_system, regularize, change_variable, \
    residue_zero, residue_one, residue_infinity, pochhammer, hg_series, katz_oracle, reduce, nabla, \
    nabla_combination, connection_block, pipeline, extract_params, local_exponents, verify_annihilation
from ._version import __version__
__VERSION__ = __version__
