####
# Command line surface: per-monomial queries, parameter tables and annihilation checks.
#
# Examples:
#   dworkpf dim -n 6
#   dworkpf params -n 6 -w 1,1,1,2,2,5 --format json
#   dworkpf table -n 6 --jobs 4 --strict-oracle
####

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor

from .algebra import ExactAlgebraError, format_rational
from .family import FamilyError, dimension, family_of_degree, katz_oracle
from .models import CommandRequest, NotBasisMonomialError, TableRow
from .models.exceptions import InvalidMonomialError

logger = logging.getLogger('dworkpf.cli')

EXIT_OK = 0
EXIT_MODULE_ERROR = 1
EXIT_PARSE_ERROR = 2
EXIT_ORACLE_MISMATCH = 3

_MODULE_ERRORS = (ExactAlgebraError, FamilyError, NotBasisMonomialError, InvalidMonomialError)

_LAMBDA = 'lam'


def _dumps(document):
    return json.dumps(document, separators=(',', ':'))


def error_record(error, monomial=None):
    return {
        'error': type(error).__name__,
        'message': str(error),
        'monomial': str(monomial) if monomial is not None else None,
    }


def _format_rationals(values):
    return ', '.join(format_rational(v) for v in values)


def _format_matrix(mat, variable=_LAMBDA):
    return '\n'.join('[{0}]'.format(', '.join(row)) for row in mat.to_strings(variable))


def format_table(rows, format=CommandRequest.Format.Text):
    if format == CommandRequest.Format.Json:
        return _dumps([row.to_json() for row in rows])
    header = ('monomial', 'alphas', 'betas', 'match')
    cells = [header]
    for row in rows:
        if row.error is not None:
            cells.append((str(row.monomial), row.error['error'], row.error['message'], 'false'))
        else:
            cells.append((str(row.monomial), '[{0}]'.format(_format_rationals(row.alphas)),
                          '[{0}]'.format(_format_rationals(row.betas)), 'true' if row.oracle_match else 'false'))
    widths = [max(len(line[i]) for line in cells) for i in range(len(header))]
    return '\n'.join(' | '.join(cell.ljust(width) for cell, width in zip(line, widths)).rstrip() for line in cells)


def parse_table(text):
    return [TableRow.from_json(document) for document in json.loads(text)]


def table_row(n, monomial):
    """Computes one table row. Errors are captured in the row so a pool worker never raises."""
    family = family_of_degree(n)
    try:
        params = family.parameters.extract(monomial)
    except _MODULE_ERRORS as e:
        logger.error('Row {0} failed: {1}'.format(monomial, e))
        return TableRow.failed(monomial, error_record(e, monomial))
    row = TableRow(monomial, params, katz_oracle(monomial))
    logger.info('Table row {0} done, oracle match: {1}'.format(monomial, row.oracle_match))
    return row


def _table_row_task(task):
    n, monomial = task
    return table_row(n, monomial)


def table_rows(n, jobs=1, all_candidates=False):
    family = family_of_degree(n)
    tasks = [(n, str(w)) for w in family.representatives(distinct=not all_candidates)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            # map keeps the enumeration order whatever the completion order.
            return list(executor.map(_table_row_task, tasks))
    return [_table_row_task(task) for task in tasks]


def _params_output(params, request):
    if request.format == CommandRequest.Format.Json:
        return _dumps(params.to_json())
    return 'alphas: [{0}]\nbetas: [{1}]'.format(_format_rationals(params.alphas), _format_rationals(params.betas))


def _run_dim(request):
    return str(dimension(request.n)), EXIT_OK


def _run_orbit(request):
    basis = family_of_degree(request.n).orbit(request.monomial)
    if request.format == CommandRequest.Format.Json:
        return _dumps(basis.to_json()), EXIT_OK
    return '\n'.join(basis.to_json()), EXIT_OK


def _run_reduce(request):
    combination = family_of_degree(request.n).reduction.reduce(request.coefficient, request.monomial)
    if request.format == CommandRequest.Format.Json:
        return _dumps(combination.to_json(_LAMBDA)), EXIT_OK
    return combination.to_string(_LAMBDA), EXIT_OK


def _run_block(request):
    block = family_of_degree(request.n).connection.block(request.monomial)
    if request.format == CommandRequest.Format.Json:
        return _dumps(block.to_json(_LAMBDA)), EXIT_OK
    return _format_matrix(block.mat), EXIT_OK


def _run_system(request):
    system = family_of_degree(request.n).connection.system(request.monomial)
    if request.format == CommandRequest.Format.Json:
        return _dumps(system.to_json(_LAMBDA)), EXIT_OK
    return _format_matrix(system.mat), EXIT_OK


def _run_params(request):
    return _params_output(family_of_degree(request.n).parameters.extract(request.monomial), request), EXIT_OK


def _run_oracle(request):
    return _params_output(family_of_degree(request.n).parameters.oracle(request.monomial), request), EXIT_OK


def _run_verify(request):
    verified = family_of_degree(request.n).parameters.verify_annihilation(request.monomial, request.order)
    if request.format == CommandRequest.Format.Json:
        return _dumps({'monomial': str(request.monomial), 'order': request.order, 'verified': verified}), EXIT_OK
    return 'true' if verified else 'false', EXIT_OK


def _run_table(request):
    rows = table_rows(request.n, request.jobs, request.all_candidates)
    status = EXIT_OK
    if request.strict_oracle and not all(row.oracle_match for row in rows):
        status = EXIT_ORACLE_MISMATCH
    return format_table(rows, request.format), status


_HANDLERS = {
    CommandRequest.Command.Dim: _run_dim,
    CommandRequest.Command.Orbit: _run_orbit,
    CommandRequest.Command.Reduce: _run_reduce,
    CommandRequest.Command.Block: _run_block,
    CommandRequest.Command.System: _run_system,
    CommandRequest.Command.Params: _run_params,
    CommandRequest.Command.Oracle: _run_oracle,
    CommandRequest.Command.Verify: _run_verify,
    CommandRequest.Command.Table: _run_table,
}


def run(request):
    """Dispatches a request. Returns the output text and the exit status.

    On a module error the output is the JSON error record and the status is 1.
    """
    try:
        return _HANDLERS[request.command](request)
    except _MODULE_ERRORS as e:
        logger.error('{0} failed for {1}: {2}'.format(request.command, request.monomial, e))
        return _dumps(error_record(e, request.monomial)), EXIT_MODULE_ERROR


def build_parser():
    parser = argparse.ArgumentParser(prog='dworkpf',
                                     description='Connection blocks and hypergeometric parameters of the Dwork family')
    parser.add_argument('command', choices=sorted(_HANDLERS))
    parser.add_argument('-n', type=int, default=None, help='degree of the family (inferred from -w when omitted)')
    parser.add_argument('-w', '--monomial', default=None, help='comma-separated exponents, e.g. 1,1,1,2,2,5')
    parser.add_argument('--order', type=int, default=CommandRequest.DEFAULT_ORDER,
                        help='series truncation order for verify (60 by default)')
    parser.add_argument('--format', choices=['text', 'json'], default='text', help='output format')
    parser.add_argument('--strict-oracle', action='store_true',
                        help='make table exit with status 3 when a row disagrees with the oracle')
    parser.add_argument('--jobs', '-j', type=int, default=1, help='worker processes for table rows')
    parser.add_argument('--all-candidates', action='store_true',
                        help='tabulate every candidate representative, including repeated eigenspaces')
    parser.add_argument('--coefficient', default=None, help='rational coefficient c for reduce, e.g. -6 or 1/2')
    parser.add_argument('--logging-level', '-l', choices=['debug', 'info', 'error'], default='error',
                        help='desired logging level (set to error by default)')
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)

    # Set logging level based on user input, or error by default
    logging_level = getattr(logging, args.logging_level.upper())
    logging.basicConfig(level=logging_level)

    try:
        request = CommandRequest(args.command, n=args.n, monomial=args.monomial, order=args.order,
                                 format=args.format, strict_oracle=args.strict_oracle, jobs=args.jobs,
                                 all_candidates=args.all_candidates, coefficient=args.coefficient)
    except (ValueError, ZeroDivisionError) as e:
        sys.stderr.write(_dumps(error_record(e, args.monomial)) + '\n')
        return EXIT_PARSE_ERROR

    output, status = run(request)
    stream = sys.stderr if status == EXIT_MODULE_ERROR else sys.stdout
    stream.write(output + '\n')
    return status


if __name__ == '__main__':
    sys.exit(main())
