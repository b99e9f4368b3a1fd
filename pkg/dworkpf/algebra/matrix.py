from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from .exceptions import DimensionMismatchError, NonConstantEntriesError, SingularMatrixError
from .rational_function import RationalFunction, _coerce
from .rationals import to_ground


def _entry(value):
    entry = _coerce(value)
    if entry is NotImplemented:
        raise TypeError("Cannot use {0!r} as a rational function".format(value))
    return entry


class RFMatrix(object):
    """Dense matrix over the field of rational functions in one variable."""

    def __init__(self, grid):
        grid = [list(row) for row in grid]
        cols = len(grid[0]) if grid else 0
        if any(len(row) != cols for row in grid):
            raise ValueError("Matrix rows must all have {0} entries".format(cols))
        self._rows = len(grid)
        self._cols = cols
        self._entries = tuple(tuple(_entry(v) for v in row) for row in grid)

    @classmethod
    def identity(cls, k):
        return cls([[1 if i == j else 0 for j in range(k)] for i in range(k)])

    @property
    def rows(self):
        return self._rows

    @property
    def cols(self):
        return self._cols

    @property
    def shape(self):
        return self._rows, self._cols

    @property
    def is_square(self):
        return self._rows == self._cols

    @property
    def entries(self):
        return self._entries

    def row(self, i):
        return list(self._entries[i])

    def __getitem__(self, index):
        i, j = index
        return self._entries[i][j]

    def map(self, func):
        return RFMatrix([[func(self._entries[i][j], i, j) for j in range(self._cols)] for i in range(self._rows)])

    def transpose(self):
        return RFMatrix([[self._entries[i][j] for i in range(self._rows)] for j in range(self._cols)])

    def derivative(self):
        return self.map(lambda entry, i, j: entry.derivative())

    def __add__(self, other):
        if self.shape != other.shape:
            raise DimensionMismatchError('add', self.shape, other.shape)
        return self.map(lambda entry, i, j: entry + other[i, j])

    def __neg__(self):
        return self.map(lambda entry, i, j: -entry)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, RFMatrix):
            factor = _entry(other)
            return self.map(lambda entry, i, j: entry * factor)
        if self._cols != other._rows:
            raise DimensionMismatchError('multiply', self.shape, other.shape)
        grid = []
        for i in range(self._rows):
            row = []
            for j in range(other._cols):
                total = RationalFunction()
                for k in range(self._cols):
                    left = self._entries[i][k]
                    if left:
                        right = other._entries[k][j]
                        if right:
                            total = total + left * right
                row.append(total)
            grid.append(row)
        return RFMatrix(grid)

    def __rmul__(self, other):
        return self * other

    def _eliminate(self, augment=None):
        """Gauss-Jordan elimination. Returns (determinant, reduced augment)."""
        if not self.is_square:
            raise DimensionMismatchError('inverse', self.shape, (self._rows, self._rows))
        k = self._rows
        work = [list(row) for row in self._entries]
        extra = [list(row) for row in augment._entries] if augment is not None else [[] for _ in range(k)]
        determinant = RationalFunction.constant(1)
        for col in range(k):
            candidates = [r for r in range(col, k) if work[r][col]]
            if not candidates:
                return RationalFunction(), None
            # Simplest pivot keeps intermediate degrees down.
            pivot = min(candidates, key=lambda r: work[r][col].num.degree + work[r][col].den.degree)
            if pivot != col:
                work[col], work[pivot] = work[pivot], work[col]
                extra[col], extra[pivot] = extra[pivot], extra[col]
                determinant = -determinant
            head = work[col][col]
            determinant = determinant * head
            inverse = 1 / head
            work[col] = [entry * inverse for entry in work[col]]
            extra[col] = [entry * inverse for entry in extra[col]]
            for r in range(k):
                factor = work[r][col]
                if r == col or not factor:
                    continue
                work[r] = [a - factor * b for a, b in zip(work[r], work[col])]
                extra[r] = [a - factor * b for a, b in zip(extra[r], extra[col])]
        return determinant, extra

    def determinant(self):
        determinant, _ = self._eliminate()
        return determinant

    def inverse(self):
        determinant, extra = self._eliminate(RFMatrix.identity(self._rows))
        if extra is None:
            raise SingularMatrixError("Matrix is singular over the rational function field")
        return RFMatrix(extra)

    def is_constant(self):
        return all(entry.is_constant for row in self._entries for entry in row)

    def constant_entries(self):
        if not self.is_constant():
            raise NonConstantEntriesError("Matrix has entries depending on the variable")
        return [[entry.constant_value for entry in row] for row in self._entries]

    def to_domain_matrix(self):
        grid = [[to_ground(v) for v in row] for row in self.constant_entries()]
        return DomainMatrix(grid, self.shape, QQ)

    def rank(self):
        return self.to_domain_matrix().rank()

    def trace(self):
        total = RationalFunction()
        for i in range(min(self.shape)):
            total = total + self._entries[i][i]
        return total

    def is_companion(self):
        """True for a square matrix with ones on the superdiagonal and zeros elsewhere above the last row."""
        if not self.is_square:
            return False
        k = self._rows
        for i in range(k - 1):
            for j in range(k):
                expected = 1 if j == i + 1 else 0
                if self._entries[i][j] != expected:
                    return False
        return True

    def is_zero(self):
        return not any(entry for row in self._entries for entry in row)

    def __eq__(self, other):
        if not isinstance(other, RFMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self._entries)

    def to_strings(self, variable='x'):
        return [[entry.to_string(variable) for entry in row] for row in self._entries]

    def to_json(self, variable='x'):
        return {'variable': variable, 'rows': self.to_strings(variable)}

    @classmethod
    def from_json(cls, document):
        variable = document.get('variable', 'x')
        return cls([[RationalFunction.parse(text, variable) for text in row] for row in document['rows']])

    def __repr__(self):
        return "<RFMatrix {0}x{1} {2}>".format(self._rows, self._cols, self.to_strings())


def mat_mul(a, b):
    return a * b


def mat_inverse(a):
    return a.inverse()


def mat_derivative(a):
    return a.derivative()
