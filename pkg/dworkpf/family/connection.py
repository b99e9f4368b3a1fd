import logging

from ..algebra import PoleAtPointError, RationalFunction, RFMatrix
from ..models import ConnectionBlock, RegularizedSystem, SystemMatrix, SystemPipeline
from .combinatorics import orbit
from .component import Component, basis_monomial_required
from .exceptions import CompanionShapeError, CyclicVectorError, HigherOrderPoleError, NotPowerCompatibleError, \
    OrbitClosureError, StillSingularError

logger = logging.getLogger('dworkpf.family.connection')

_VAR = RationalFunction.variable()


def _matrix_of(a):
    if isinstance(a, SystemMatrix):
        return a.mat
    if isinstance(a, RegularizedSystem):
        return a.N
    return a


def system_matrix(block):
    return SystemMatrix.from_block(block)


def cyclic_change_of_basis(a, vector=None):
    """Rows of S are a starting row vector and its successive derivatives along dy/dvar = a y.

    Row m + 1 is d(row m)/dvar + row m * a. The default start is the first coordinate (1, 0, ..., 0).
    """
    a = _matrix_of(a)
    k = a.rows
    if vector is None:
        vector = [1] + [0] * (k - 1)
    if len(vector) != k:
        raise ValueError("Starting vector needs {0} entries, got {1}".format(k, len(vector)))
    row = RFMatrix([vector])
    rows = [row.row(0)]
    for _ in range(1, k):
        row = row.derivative() + row * a
        rows.append(row.row(0))
    s = RFMatrix(rows)
    if not s.determinant():
        raise CyclicVectorError("Starting vector {0} is not cyclic: its derivatives are linearly dependent".format(
            [str(v) for v in rows[0]]))
    return s


def companion_system(a, s):
    """Gauge transform a_s = s a s^-1 + s' s^-1 of dy/dvar = a y, which is in companion form for a cyclic s."""
    a = _matrix_of(a)
    a_s = (s * a + s.derivative()) * s.inverse()
    if not a_s.is_companion():
        raise CompanionShapeError("Transformed system is not in companion form: {0!r}".format(a_s))
    return a_s


def regularize(a_s, n):
    """N with entry (i, j) = var^(i-j+1) a_s(i, j), plus i on the diagonal (0-based), so dy/dvar = N y / var."""
    if not a_s.is_companion():
        raise CompanionShapeError("Only companion systems can be regularized")
    N = a_s.map(lambda entry, i, j: (entry * _VAR ** (i - j + 1) if entry else entry) + (i if i == j else 0))
    for (i, j), entry in _entries(N):
        if not entry.den(0):
            raise StillSingularError("Entry ({0}, {1}) = {2} keeps a pole at 0".format(i + 1, j + 1, entry))
    return RegularizedSystem(N, RegularizedSystem.Variable.Lambda, n)


def change_variable(r, n=None):
    """Substitutes z = lam^n and divides by n: dy/dz = N_z(z) y / z."""
    n = n if n is not None else r.n

    def substitute(entry, i, j):
        num, den = entry.num.substitute_power(n), entry.den.substitute_power(n)
        if num is None or den is None:
            error = "Entry ({0}, {1}) = {2} is not a function of lam^{3}".format(i + 1, j + 1,
                                                                                 entry.to_string('lam'), n)
            raise NotPowerCompatibleError(error)
        return RationalFunction(num, den) / n

    return RegularizedSystem(r.N.map(substitute), RegularizedSystem.Variable.Z, n)


def residue_zero(r):
    return r.N.map(lambda entry, i, j: entry.evaluate(0))


def residue_infinity(r):
    """Residue at zeta = 0 after zeta = 1/z, which is minus the value of N_z at infinity."""
    return r.N.map(lambda entry, i, j: -entry.limit_at_infinity())


def residue_one(r):
    """Residue at z = 1 of N_z(z) / z."""
    factor = (_VAR - 1) / _VAR

    def residue(entry, i, j):
        try:
            return (entry * factor).evaluate(1)
        except PoleAtPointError:
            raise HigherOrderPoleError("Entry ({0}, {1}) = {2} has a pole of order above one at z = 1".format(
                i + 1, j + 1, entry.to_string('z')))

    return r.N.map(residue)


def _entries(mat):
    for i in range(mat.rows):
        for j in range(mat.cols):
            yield (i, j), mat[i, j]


class Connection(Component):
    """Connection blocks of the family and the transformations that read off their residues."""

    def __init__(self, parent_family):
        super(Connection, self).__init__(parent_family)
        self._pipelines = dict()

    @basis_monomial_required
    def block(self, w):
        basis = orbit(w)
        k = len(basis)
        columns = []
        for member in basis:
            image = self.parent_family.reduction.nabla(member)
            column = [RationalFunction()] * k
            for term in image:
                i = basis.index(term.mono)
                if i is None:
                    raise OrbitClosureError("Derivative of {0} leaves the eigenspace of {1} at {2}".format(
                        member, w, term.mono))
                column[i] = term.coeff
            columns.append(column)
        mat = RFMatrix([[columns[j][i] for j in range(k)] for i in range(k)])
        logger.info('Computed the {0}x{0} connection block of {1}'.format(k, w))
        return ConnectionBlock(basis, mat)

    @basis_monomial_required
    def system(self, w):
        return system_matrix(self.block(w))

    @basis_monomial_required
    def pipeline(self, w):
        """Every stage from the connection block of w to the three residues. Cached per monomial."""
        if w in self._pipelines:
            return self._pipelines[w]
        n = self.n
        block = self.block(w)
        system = system_matrix(block)
        s = cyclic_change_of_basis(system)
        companion = companion_system(system, s)
        regularized = regularize(companion, n)
        z_system = change_variable(regularized, n)
        pipeline = SystemPipeline(w, block, system, s, companion, regularized, z_system,
                                  residue_zero(z_system), residue_one(z_system), residue_infinity(z_system))
        self._pipelines[w] = pipeline
        logger.debug('Pipeline of {0} complete'.format(w))
        return pipeline
