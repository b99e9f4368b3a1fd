####
# This script walks one eigenspace through every stage: the connection block, the
# first order system, the cyclic change of basis, the companion and regularized forms,
# the z = lam^n system and its residues, and finally the hypergeometric parameters.
#
# Defaults to the eigenspace of x1 x2 x3 x4^2 x5^2 x6^5 for n = 6.
####

import argparse
import logging

import dworkpf as DPF


def print_matrix(title, mat, variable):
    print(title)
    for row in mat.to_strings(variable):
        print('  [{0}]'.format(', '.join(row)))


def main():
    parser = argparse.ArgumentParser(description='Print every stage of the parameter computation for one monomial')
    parser.add_argument('--monomial', '-w', default='1,1,1,2,2,5', help='comma-separated exponents')
    parser.add_argument('--order', type=int, default=60, help='series order used to check the solution')
    parser.add_argument('--logging-level', '-l', choices=['debug', 'info', 'error'], default='error',
                        help='desired logging level (set to error by default)')

    args = parser.parse_args()

    # Set logging level based on user input, or error by default
    logging_level = getattr(logging, args.logging_level.upper())
    logging.basicConfig(level=logging_level)

    pipeline = DPF.pipeline(args.monomial)
    print('Eigenspace basis: {0}'.format('; '.join(pipeline.block.basis.to_json())))

    print_matrix('Connection block:', pipeline.block.mat, 'lam')
    print_matrix('System matrix:', pipeline.system.mat, 'lam')
    print_matrix('Change of basis:', pipeline.change_of_basis, 'lam')
    print_matrix('Companion form:', pipeline.companion, 'lam')
    print_matrix('Regularized at 0:', pipeline.regularized.N, 'lam')
    print_matrix('In z = lam^n:', pipeline.z_system.N, 'z')
    print_matrix('Residue at 0:', pipeline.residue_zero, 'z')
    print_matrix('Residue at 1:', pipeline.residue_one, 'z')
    print_matrix('Residue at infinity:', pipeline.residue_infinity, 'z')

    params = DPF.extract_params(args.monomial)
    print('Parameters: {0}'.format(params))
    print('Predicted by cancellation: {0}'.format(DPF.katz_oracle(args.monomial)))
    print('Series solves the equation through order {0}: {1}'.format(
        args.order, DPF.verify_annihilation(args.monomial, args.order)))


if __name__ == '__main__':
    main()
