####
# This script tabulates the hypergeometric parameters of every eigenspace
# representative for one degree and checks them against the cancellation rule.
#
# Rows are computed in worker processes when --jobs is above 1.
####

import argparse
import logging
import sys

from dworkpf import CommandRequest
from dworkpf.cli import format_table, table_rows


def main():
    parser = argparse.ArgumentParser(description='Tabulate the parameters of the eigenspace representatives')
    parser.add_argument('-n', type=int, default=6, help='degree of the family')
    parser.add_argument('--jobs', '-j', type=int, default=1, help='worker processes')
    parser.add_argument('--json', action='store_true', help='print a JSON array instead of aligned columns')
    parser.add_argument('--logging-level', '-l', choices=['debug', 'info', 'error'], default='error',
                        help='desired logging level (set to error by default)')

    args = parser.parse_args()

    # Set logging level based on user input, or error by default
    logging_level = getattr(logging, args.logging_level.upper())
    logging.basicConfig(level=logging_level)

    rows = table_rows(args.n, args.jobs)
    output_format = CommandRequest.Format.Json if args.json else CommandRequest.Format.Text
    print(format_table(rows, output_format))

    mismatches = [row for row in rows if not row.oracle_match]
    for row in mismatches:
        print('Mismatch for {0}'.format(row.monomial), file=sys.stderr)
    return 1 if mismatches else 0


if __name__ == '__main__':
    sys.exit(main())
