import pickle
import unittest
from fractions import Fraction

import dworkpf as DPF
from dworkpf.algebra import RationalFunction, Polynomial


def rf(text, variable='x'):
    return RationalFunction.parse(text, variable)


class PolynomialTests(unittest.TestCase):
    def test_coefficients_lowest_degree_first(self):
        p = Polynomial([1, 0, Fraction(-1, 2)])
        self.assertEqual(2, p.degree)
        self.assertEqual([1, 0, Fraction(-1, 2)], p.coefficients)
        self.assertEqual(Fraction(-1, 2), p.leading_coefficient)

    def test_zero_polynomial(self):
        self.assertTrue(Polynomial().is_zero)
        self.assertTrue(Polynomial([0]).is_zero)
        self.assertEqual(-1, Polynomial([0, 0]).degree)
        self.assertEqual([], Polynomial([0]).coefficients)

    def test_evaluate(self):
        p = Polynomial([1, 2, 3])
        self.assertEqual(Fraction(1 + 1 + Fraction(3, 4)), p(Fraction(1, 2)))

    def test_gcd_and_lcm(self):
        a = Polynomial([-1, 0, 1])
        b = Polynomial([1, 2, 1])
        self.assertEqual(Polynomial([1, 1]), a.gcd(b))
        self.assertEqual(a * b.exquo(Polynomial([1, 1])), a.lcm(b))

    def test_gcd_is_monic(self):
        sextic = Polynomial([-1, 0, 0, 0, 0, 0, 1])
        a = sextic * Polynomial([3, 0, 6])
        b = sextic * Polynomial([-6, 2]) * Polynomial([1, 1])
        self.assertEqual(sextic, a.gcd(b))
        self.assertEqual(Polynomial([Fraction(1, 2), 0, 1]), Polynomial([1, 0, 2]).gcd(Polynomial()))
        self.assertEqual(Polynomial(), a.lcm(Polynomial()))

    def test_divmod(self):
        quotient, remainder = divmod(Polynomial([1, 0, 1]), Polynomial([1, 1]))
        self.assertEqual(Polynomial([-1, 1]), quotient)
        self.assertEqual(Polynomial([2]), remainder)
        with self.assertRaises(DPF.DivisionByZeroError):
            divmod(Polynomial([1]), Polynomial())

    def test_substitute_power(self):
        p = Polynomial([1, 0, 0, 0, 0, 0, 5, 0, 0, 0, 0, 0, -2])
        self.assertEqual(Polynomial([1, 5, -2]), p.substitute_power(6))
        self.assertIsNone(Polynomial([0, 1]).substitute_power(6))


class RationalFunctionTests(unittest.TestCase):
    def test_normalize_cancels_gcd(self):
        result = DPF.rf_normalize(Polynomial([-1, 0, 1]), Polynomial([-1, 1]))
        self.assertEqual(Polynomial([1, 1]), result.num)
        self.assertEqual(Polynomial([1]), result.den)

    def test_normalize_zero_numerator(self):
        result = DPF.rf_normalize(Polynomial([0]), Polynomial([7]))
        self.assertTrue(result.is_zero)
        self.assertEqual(Polynomial([1]), result.den)

    def test_normalize_makes_denominator_monic(self):
        result = DPF.rf_normalize(Polynomial([0, 2]), Polynomial([4]))
        self.assertEqual(Polynomial([0, Fraction(1, 2)]), result.num)
        self.assertEqual(Polynomial([1]), result.den)

    def test_normalize_zero_denominator(self):
        self.assertRaises(DPF.ZeroDenominatorError, DPF.rf_normalize, Polynomial([1]), Polynomial([0]))

    def test_canonical_form(self):
        result = rf('(6*x**2 - 6)/(3*x**3 + 3*x**2)')
        self.assertEqual(1, result.den.leading_coefficient)
        self.assertEqual(Polynomial([1]), result.num.gcd(result.den))
        self.assertEqual(rf('(2*x - 2)/x**2'), result)

    def test_arith_add(self):
        self.assertEqual(rf('1/(1 - x)'), DPF.rf_arith('add', rf('x/(1 - x)'), rf('1')))

    def test_arith_mul_by_zero(self):
        self.assertTrue(DPF.rf_arith('mul', rf('x/(1 - x)'), rf('0')).is_zero)

    def test_arith_exact_quotient(self):
        self.assertEqual(rf('x - 1'), DPF.rf_arith('div', rf('x**2 - 1'), rf('x + 1')))

    def test_arith_sub(self):
        self.assertEqual(rf('1/(x*(x + 1))'), DPF.rf_arith('sub', rf('1/x'), rf('1/(x + 1)')))

    def test_arith_division_by_zero(self):
        self.assertRaises(DPF.DivisionByZeroError, DPF.rf_arith, 'div', rf('x'), rf('0'))
        with self.assertRaises(ZeroDivisionError):
            rf('x') / 0

    def test_arith_unknown_operation(self):
        self.assertRaises(ValueError, DPF.rf_arith, 'pow', rf('x'), rf('2'))

    def test_results_are_already_canonical(self):
        a, b = rf('(x**2 + 1)/(2*x - 4)'), rf('(3*x)/(x**2 - 4)')
        for op in ('add', 'sub', 'mul', 'div'):
            result = DPF.rf_arith(op, a, b)
            self.assertEqual(result, DPF.rf_normalize(result.num, result.den))
            self.assertEqual(1, result.den.leading_coefficient)

    def test_eval(self):
        self.assertEqual(Fraction(2, 3), DPF.rf_eval(rf('(5*z + 4)/(6*(1 - z))', 'z'), 0))
        self.assertEqual(Fraction(-1, 3), DPF.rf_eval(rf('(5*z - 1)/(3*(1 - z))', 'z'), 0))

    def test_eval_at_pole(self):
        with self.assertRaises(DPF.PoleAtPointError) as context:
            DPF.rf_eval(rf('(5*z + 4)/(6*(1 - z))', 'z'), 1)
        self.assertEqual(1, context.exception.point)

    def test_limit_at_infinity(self):
        self.assertEqual(Fraction(-1, 3), DPF.limit_at_infinity(rf('z/(3*(1 - z))', 'z')))
        self.assertEqual(Fraction(1, 6), DPF.limit_at_infinity(rf('1/6')))
        self.assertEqual(0, DPF.limit_at_infinity(rf('1/(x - 1)')))
        self.assertRaises(DPF.DivergentAtInfinityError, DPF.limit_at_infinity, rf('z**2/(1 - z)', 'z'))

    def test_limit_matches_value_of_inverted_argument(self):
        f = rf('(2*x**2 + 1)/(x**2 - 3)')
        inverted = rf('(2 + y**2)/(1 - 3*y**2)', 'y')
        self.assertEqual(DPF.rf_eval(inverted, 0), DPF.limit_at_infinity(f))

    def test_derivative(self):
        self.assertEqual(rf('1/(1 - x)**2'), rf('1/(1 - x)').derivative())
        self.assertTrue(rf('5/7').derivative().is_zero)

    def test_constant_value(self):
        self.assertEqual(Fraction(-5, 3), rf('-5/3').constant_value)
        self.assertRaises(ValueError, lambda: rf('x').constant_value)

    def test_parse_rejects_garbage(self):
        self.assertRaises(ValueError, RationalFunction.parse, 'x +* 2')
        self.assertRaises(ValueError, RationalFunction.parse, 'sin(x)')

    def test_string_round_trip(self):
        f = rf('-x**2/(18*(x**6 - 1))')
        self.assertEqual(f, RationalFunction.parse(f.to_string('lam'), 'lam'))
        self.assertEqual(f, pickle.loads(pickle.dumps(f)))

    def test_equality_with_numbers(self):
        self.assertEqual(rf('6/3'), 2)
        self.assertNotEqual(rf('x'), 0)
        self.assertEqual(hash(rf('2*x/2')), hash(rf('x')))
