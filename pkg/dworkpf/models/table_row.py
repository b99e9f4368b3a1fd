from .hg_params import HGParams
from .monomial import Monomial


class TableRow(object):
    """One row of a parameter table: the extracted parameters of a representative and the oracle verdict.

    A row whose computation failed carries the error record and no parameters.
    """

    def __init__(self, monomial, params=None, oracle=None, error=None):
        self._monomial = Monomial.coerce(monomial)
        self._params = params
        self._oracle = oracle
        self._error = error

    @classmethod
    def failed(cls, monomial, error):
        return cls(monomial, error=error)

    @property
    def monomial(self):
        return self._monomial

    @property
    def params(self):
        return self._params

    @property
    def alphas(self):
        return self._params.alphas if self._params is not None else ()

    @property
    def betas(self):
        return self._params.betas if self._params is not None else ()

    @property
    def oracle(self):
        return self._oracle

    @property
    def error(self):
        return self._error

    @property
    def oracle_match(self):
        return self._params is not None and self._params == self._oracle

    def to_json(self):
        document = {'monomial': str(self._monomial)}
        if self._params is not None:
            document.update(self._params.to_json())
        else:
            document.update({'alphas': [], 'betas': []})
        document['oracle_match'] = self.oracle_match
        if self._error is not None:
            document['error'] = self._error
        return document

    @classmethod
    def from_json(cls, document):
        if 'error' in document:
            return cls.failed(document['monomial'], document['error'])
        params = HGParams.from_json(document)
        # Serialised rows only keep the verdict, so a matching oracle is the parameters themselves.
        oracle = params if document.get('oracle_match') else None
        return cls(document['monomial'], params, oracle)

    def __eq__(self, other):
        if not isinstance(other, TableRow):
            return NotImplemented
        return (self._monomial, self._params, self.oracle_match, self._error) == \
            (other._monomial, other._params, other.oracle_match, other._error)

    def __repr__(self):
        return "<TableRow {0} {1} match={2}>".format(self._monomial, self._params, self.oracle_match)
