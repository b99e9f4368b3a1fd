from fractions import Fraction

from .exceptions import DegreeMismatchError
from .monomial import Monomial
from .property_decorators import property_is_boolean, property_is_enum, property_is_int, property_not_nullable


class CommandRequest(object):
    class Command:
        Dim = 'dim'
        Orbit = 'orbit'
        Reduce = 'reduce'
        Block = 'block'
        System = 'system'
        Params = 'params'
        Oracle = 'oracle'
        Verify = 'verify'
        Table = 'table'

    class Format:
        Text = 'text'
        Json = 'json'

    DEFAULT_ORDER = 60

    _without_monomial = (Command.Dim, Command.Table)

    def __init__(self, command, n=None, monomial=None, order=None, format=Format.Text, strict_oracle=False,
                 jobs=1, all_candidates=False, coefficient=None):
        self.command = command
        self.monomial = Monomial.coerce(monomial) if monomial is not None else None
        self.n = n if n is not None else self._infer_n()
        self.order = order if order is not None else CommandRequest.DEFAULT_ORDER
        self.format = format
        self.strict_oracle = strict_oracle
        self.jobs = jobs
        self.all_candidates = all_candidates
        self.coefficient = Fraction(1) if coefficient is None else Fraction(coefficient)
        self._validate()

    def _infer_n(self):
        if self.monomial is None:
            raise ValueError("The degree n is required for {0}".format(self.command))
        return self.monomial.n

    def _validate(self):
        if self.command not in CommandRequest._without_monomial and self.monomial is None:
            raise ValueError("A monomial (-w) is required for {0}".format(self.command))
        if self.monomial is not None and self.monomial.n != self.n:
            error = "Monomial {0} has {1} exponents but n = {2}".format(self.monomial, self.monomial.n, self.n)
            raise DegreeMismatchError(error)

    @property
    def command(self):
        return self._command

    @command.setter
    @property_not_nullable
    @property_is_enum(Command)
    def command(self, value):
        self._command = value

    @property
    def n(self):
        return self._n

    @n.setter
    @property_is_int((2, None))
    def n(self, value):
        self._n = value

    @property
    def order(self):
        return self._order

    @order.setter
    @property_is_int((0, None))
    def order(self, value):
        self._order = value

    @property
    def format(self):
        return self._format

    @format.setter
    @property_not_nullable
    @property_is_enum(Format)
    def format(self, value):
        self._format = value

    @property
    def strict_oracle(self):
        return self._strict_oracle

    @strict_oracle.setter
    @property_is_boolean
    def strict_oracle(self, value):
        self._strict_oracle = value

    @property
    def jobs(self):
        return self._jobs

    @jobs.setter
    @property_is_int((1, None))
    def jobs(self, value):
        self._jobs = value

    @property
    def all_candidates(self):
        return self._all_candidates

    @all_candidates.setter
    @property_is_boolean
    def all_candidates(self, value):
        self._all_candidates = value
