from .exceptions import FamilyError, ReductionOverflowError, OrbitClosureError, CyclicVectorError, \
    CompanionShapeError, StillSingularError, NotPowerCompatibleError, HigherOrderPoleError, MissingUnitBetaError, \
    AmbiguousUnitBetaError, ZeroDenominatorInRecurrenceError, InsufficientOrderError
from .combinatorics import is_basis_monomial, dimension, basis_monomials, orbit, eigenspaces, partitions, \
    restricted_partitions, representative_candidates, basis_representatives
from .connection import system_matrix, cyclic_change_of_basis, companion_system, regularize, change_variable, \
    residue_zero, residue_one, residue_infinity
from .series import pochhammer, hg_series
from .parameters import katz_oracle, params_from_residues
from .family import DworkFamily
from .operations import family_of_degree, reduce, nabla, nabla_combination, connection_block, pipeline, \
    extract_params, local_exponents, verify_annihilation
