import unittest

import dworkpf as DPF
from dworkpf.algebra import RationalFunction, RFMatrix
from dworkpf.family import family_of_degree

from ._utils import read_json_asset


def lam(text):
    return RationalFunction.parse(text, 'lam')


def stage_matrix(pipeline, stage):
    value = getattr(pipeline, stage)
    if isinstance(value, DPF.ConnectionBlock) or isinstance(value, DPF.SystemMatrix):
        return value.mat
    if isinstance(value, DPF.RegularizedSystem):
        return value.N
    return value


def orbits_to_check():
    """Every eigenspace for n = 3, 4 and every candidate representative for n = 5, 6."""
    for n in (3, 4):
        for space in DPF.eigenspaces(n):
            yield space.representative
    for n in (5, 6):
        for w in DPF.basis_representatives(n, distinct=False):
            yield w


class WorkedExampleTests(unittest.TestCase):
    def setUp(self):
        self.expected = read_json_asset('worked_example.json')
        self.pipeline = DPF.pipeline(self.expected['monomial'])

    def test_every_stage(self):
        for stage in DPF.SystemPipeline.stages:
            expected = RFMatrix.from_json(self.expected[stage])
            self.assertEqual(expected, stage_matrix(self.pipeline, stage), 'stage {0} differs'.format(stage))

    def test_block_basis(self):
        self.assertEqual(self.expected['orbit'], self.pipeline.block.basis.to_json())
        self.assertEqual(3, self.pipeline.size)

    def test_connection_block_operation(self):
        block = DPF.connection_block('1,1,1,2,2,5')
        self.assertEqual(RFMatrix.from_json(self.expected['block']), block.mat)
        self.assertEqual(block.mat.transpose(), DPF.system_matrix(block).mat)

    def test_stage_by_stage(self):
        system = DPF.system_matrix(DPF.connection_block('1,1,1,2,2,5'))
        s = DPF.cyclic_change_of_basis(system)
        self.assertEqual(RFMatrix.from_json(self.expected['change_of_basis']), s)
        companion = DPF.companion_system(system, s)
        regularized = DPF.regularize(companion, 6)
        self.assertEqual(DPF.RegularizedSystem.Variable.Lambda, regularized.variable)
        z_system = DPF.change_variable(regularized)
        self.assertEqual(DPF.RegularizedSystem.Variable.Z, z_system.variable)
        self.assertEqual(RFMatrix.from_json(self.expected['z_system']), z_system.N)
        self.assertEqual(RFMatrix.from_json(self.expected['residue_zero']), DPF.residue_zero(z_system))
        self.assertEqual(RFMatrix.from_json(self.expected['residue_one']), DPF.residue_one(z_system))
        self.assertEqual(RFMatrix.from_json(self.expected['residue_infinity']), DPF.residue_infinity(z_system))

    def test_residue_eigenvalues(self):
        self.assertEqual([DPF.parse_rational(e) for e in self.expected['eigenvalues_zero']],
                         DPF.eigenvalues(self.pipeline.residue_zero))
        self.assertEqual([DPF.parse_rational(e) for e in self.expected['eigenvalues_infinity']],
                         DPF.eigenvalues(self.pipeline.residue_infinity))

    def test_pipeline_is_cached(self):
        self.assertIs(self.pipeline, DPF.pipeline('1,1,1,2,2,5'))

    def test_json(self):
        document = self.pipeline.to_json()
        self.assertEqual('1,1,1,2,2,5', document['monomial'])
        self.assertEqual(set(DPF.SystemPipeline.stages) | {'monomial'}, set(document))
        self.assertEqual(self.expected['orbit'], document['block']['basis'])
        self.assertEqual('z', document['z_system']['variable'])
        self.assertEqual(RFMatrix.from_json(self.expected['companion']), RFMatrix.from_json(document['companion']))


class SingletonOrbitTests(unittest.TestCase):
    def test_one_by_one_block(self):
        w = '5,4,3,3,2,1'
        block = DPF.connection_block(w)
        self.assertEqual((1, 1), block.mat.shape)
        coefficient = DPF.nabla(w).coefficient(w)
        self.assertEqual(coefficient, block.mat[0, 0])

    def test_pipeline_of_one_by_one_block(self):
        pipeline = DPF.pipeline('5,4,3,3,2,1')
        self.assertEqual(RFMatrix.identity(1), pipeline.change_of_basis)
        self.assertEqual(pipeline.system.mat, pipeline.companion)
        self.assertEqual(pipeline.system.mat, pipeline.block.mat)
        self.assertEqual(pipeline.z_system.N[0, 0].evaluate(0), pipeline.residue_zero[0, 0].constant_value)


class ConnectionStageErrorTests(unittest.TestCase):
    def test_non_cyclic_vector(self):
        system = DPF.SystemMatrix(RFMatrix([[0, 0], [0, 0]]))
        self.assertRaises(DPF.CyclicVectorError, DPF.cyclic_change_of_basis, system)
        self.assertRaises(ValueError, DPF.cyclic_change_of_basis, system, [1, 0, 0])

    def test_supplied_cyclic_vector(self):
        system = DPF.SystemMatrix(RFMatrix([[0, 1], [1, 0]]))
        self.assertRaises(DPF.CyclicVectorError, DPF.cyclic_change_of_basis, system, [1, 1])
        s = DPF.cyclic_change_of_basis(system, [0, 1])
        self.assertEqual(RFMatrix([[0, 1], [1, 0]]), s)
        self.assertEqual(RFMatrix([[0, 1], [1, 0]]), DPF.companion_system(system, s))

    def test_not_companion(self):
        a = RFMatrix([[1, 0], [0, 2]])
        self.assertRaises(DPF.CompanionShapeError, DPF.companion_system, a, RFMatrix.identity(2))
        self.assertRaises(DPF.CompanionShapeError, DPF.regularize, a, 6)

    def test_still_singular(self):
        companion = RFMatrix([[0, 1], [lam('1/lam**3'), 0]])
        self.assertRaises(DPF.StillSingularError, DPF.regularize, companion, 6)

    def test_not_power_compatible(self):
        regularized = DPF.RegularizedSystem(RFMatrix([[lam('lam')]]), DPF.RegularizedSystem.Variable.Lambda, 6)
        self.assertRaises(DPF.NotPowerCompatibleError, DPF.change_variable, regularized)

    def test_higher_order_pole(self):
        z_system = DPF.RegularizedSystem(RFMatrix([[lam('1/(1 - lam)**2')]]), DPF.RegularizedSystem.Variable.Z, 6)
        self.assertRaises(DPF.HigherOrderPoleError, DPF.residue_one, z_system)

    def test_residue_infinity_of_constant(self):
        z_system = DPF.RegularizedSystem(RFMatrix([[lam('3/4'), 0], [0, lam('3/4')]]),
                                         DPF.RegularizedSystem.Variable.Z, 6)
        self.assertEqual(RFMatrix([[lam('-3/4'), 0], [0, lam('-3/4')]]), DPF.residue_infinity(z_system))

    def test_block_requires_basis_monomial(self):
        self.assertRaises(DPF.NotBasisMonomialError, DPF.connection_block, '2,2,2,3,3,6')
        self.assertRaises(DPF.DegreeMismatchError, family_of_degree(6).connection.block, '1,1,1')


class ConnectionPropertyTests(unittest.TestCase):
    def test_residues_sum_to_zero(self):
        for w in orbits_to_check():
            pipeline = DPF.pipeline(w)
            total = pipeline.residue_zero + pipeline.residue_one + pipeline.residue_infinity
            self.assertTrue(total.is_zero(), 'residues of {0} do not sum to zero'.format(w))

    def test_residue_one_has_rank_one(self):
        for w in orbits_to_check():
            pipeline = DPF.pipeline(w)
            if pipeline.size >= 2:
                self.assertEqual(1, pipeline.residue_one.rank(), 'rank of the residue at 1 for {0}'.format(w))

    def test_companion_shape(self):
        for w in orbits_to_check():
            self.assertTrue(DPF.pipeline(w).companion.is_companion())

    def test_residue_zero_first_column(self):
        for w in orbits_to_check():
            residue = DPF.pipeline(w).residue_zero
            for i in range(residue.rows):
                self.assertEqual(0, residue[i, 0], 'residue at 0 of {0}'.format(w))

    def test_block_columns_follow_orbit(self):
        for w in orbits_to_check():
            block = DPF.connection_block(w)
            self.assertEqual(DPF.orbit(w), block.basis)
            self.assertEqual((block.size, block.size), block.mat.shape)
