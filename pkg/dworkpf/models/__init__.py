from .exceptions import InvalidMonomialError, NotBasisMonomialError, DegreeMismatchError
from .monomial import Monomial
from .combination import Term, Combination
from .eigenspace_basis import EigenspaceBasis
from .connection_block import ConnectionBlock, SystemMatrix, RegularizedSystem, SystemPipeline
from .hg_params import HGParams
from .power_series import PowerSeries
from .table_row import TableRow
from .command_request import CommandRequest
