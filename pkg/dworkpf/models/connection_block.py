class ConnectionBlock(object):
    """Block of the connection for one eigenspace.

    Column j holds the coordinates of the derivative of basis[j], so entry (i, j) is the coefficient
    of basis[i].
    """

    def __init__(self, basis, mat):
        if mat.shape != (len(basis), len(basis)):
            error = "A block for {0} basis members must be {0}x{0}, got {1[0]}x{1[1]}".format(len(basis), mat.shape)
            raise ValueError(error)
        self._basis = basis
        self._mat = mat

    @property
    def basis(self):
        return self._basis

    @property
    def mat(self):
        return self._mat

    @property
    def size(self):
        return len(self._basis)

    def to_json(self, variable='lam'):
        document = self._mat.to_json(variable)
        document['basis'] = self._basis.to_json()
        return document


class SystemMatrix(object):
    """First order system dy/dvar = mat * y for the coordinate column vector y."""

    def __init__(self, mat):
        if not mat.is_square:
            raise ValueError("A system matrix must be square, got {0[0]}x{0[1]}".format(mat.shape))
        self._mat = mat

    @classmethod
    def from_block(cls, block):
        return cls(block.mat.transpose())

    @property
    def mat(self):
        return self._mat

    @property
    def size(self):
        return self._mat.rows

    def to_json(self, variable='lam'):
        return self._mat.to_json(variable)


class RegularizedSystem(object):
    """System dy/dvar = (1/var) * N(var) * y with N finite at the origin."""

    class Variable:
        Lambda = 'lam'
        Z = 'z'

    def __init__(self, N, variable, n):
        if variable not in (RegularizedSystem.Variable.Lambda, RegularizedSystem.Variable.Z):
            raise ValueError("Invalid variable: {0}. Expected 'lam' or 'z'.".format(variable))
        self._N = N
        self._variable = variable
        self._n = n

    @property
    def N(self):
        return self._N

    @property
    def variable(self):
        return self._variable

    @property
    def n(self):
        return self._n

    @property
    def size(self):
        return self._N.rows

    def to_json(self):
        return self._N.to_json(self._variable)


class SystemPipeline(object):
    """Every stage computed for one eigenspace, from the connection block to the residues."""

    stages = ('block', 'system', 'change_of_basis', 'companion', 'regularized', 'z_system',
              'residue_zero', 'residue_one', 'residue_infinity')

    def __init__(self, monomial, block, system, change_of_basis, companion, regularized, z_system,
                 residue_zero, residue_one, residue_infinity):
        self.monomial = monomial
        self.block = block
        self.system = system
        self.change_of_basis = change_of_basis
        self.companion = companion
        self.regularized = regularized
        self.z_system = z_system
        self.residue_zero = residue_zero
        self.residue_one = residue_one
        self.residue_infinity = residue_infinity

    @property
    def size(self):
        return self.block.size

    def to_json(self):
        lam, z = RegularizedSystem.Variable.Lambda, RegularizedSystem.Variable.Z
        return {
            'monomial': str(self.monomial),
            'block': self.block.to_json(lam),
            'system': self.system.to_json(lam),
            'change_of_basis': self.change_of_basis.to_json(lam),
            'companion': self.companion.to_json(lam),
            'regularized': self.regularized.to_json(),
            'z_system': self.z_system.to_json(),
            'residue_zero': self.residue_zero.to_json(z),
            'residue_one': self.residue_one.to_json(z),
            'residue_infinity': self.residue_infinity.to_json(z),
        }