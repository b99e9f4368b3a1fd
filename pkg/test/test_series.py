import math
import unittest
from fractions import Fraction

import dworkpf as DPF
from dworkpf.algebra import Polynomial


class PochhammerTests(unittest.TestCase):
    def test_empty_product(self):
        self.assertEqual(1, DPF.pochhammer(Fraction(2, 7), 0))

    def test_half(self):
        self.assertEqual(Fraction(15, 8), DPF.pochhammer(Fraction(1, 2), 3))

    def test_factorial(self):
        for k in range(8):
            self.assertEqual(math.factorial(k), DPF.pochhammer(1, k))

    def test_negative_length(self):
        self.assertRaises(ValueError, DPF.pochhammer, 1, -1)


class HypergeometricSeriesTests(unittest.TestCase):
    def test_geometric_series(self):
        series = DPF.hg_series(DPF.HGParams([1], []), 4)
        self.assertEqual([1, 1, 1, 1, 1], series.coefficients)
        self.assertEqual(4, series.truncation_order)

    def test_first_step(self):
        series = DPF.hg_series(DPF.HGParams(['1/6', '1/6', '1/3'], ['1/2', '2/3']), 3)
        self.assertEqual(1, series[0])
        self.assertEqual(Fraction(1, 36), series[1])

    def test_closed_form(self):
        params = DPF.HGParams(['1/6', '1/6', '1/2', '1/2'], ['1/3', '2/3', '5/6'])
        series = DPF.hg_series(params, 12)
        for k, c in enumerate(series.coefficients):
            numerator = Fraction(1)
            for alpha in params.alphas:
                numerator *= DPF.pochhammer(alpha, k)
            denominator = Fraction(math.factorial(k))
            for beta in params.betas:
                denominator *= DPF.pochhammer(beta, k)
            self.assertEqual(numerator / denominator, c)

    def test_zero_denominator(self):
        params = DPF.HGParams(['1/2'], [-1])
        self.assertEqual([1, Fraction(-1, 2)], DPF.hg_series(params, 1).coefficients)
        self.assertRaises(DPF.ZeroDenominatorInRecurrenceError, DPF.hg_series, params, 2)

    def test_negative_order(self):
        self.assertRaises(ValueError, DPF.hg_series, DPF.HGParams([1], []), -1)


class PowerSeriesTests(unittest.TestCase):
    def test_compose_power(self):
        series = DPF.PowerSeries([1, 2, 3]).compose_power(3, 7)
        self.assertEqual([1, 0, 0, 2, 0, 0, 3, 0], series.coefficients)
        self.assertEqual([1, 0, 0, 2], DPF.PowerSeries([1, 2, 3]).compose_power(3, 3).coefficients)

    def test_derivative(self):
        self.assertEqual(DPF.PowerSeries([2, 6, 12]), DPF.PowerSeries([1, 2, 3, 4]).derivative())
        self.assertRaises(ValueError, DPF.PowerSeries([1]).derivative)

    def test_multiply_keeps_order(self):
        geometric = DPF.PowerSeries([1] * 6)
        self.assertEqual(DPF.PowerSeries([1, 0, 0, 0, 0, 0]), geometric.multiply(Polynomial([1, -1])))

    def test_difference_and_leading_order(self):
        a = DPF.PowerSeries([1, 2, 3, 4])
        b = DPF.PowerSeries([1, 2, 5])
        difference = a - b
        self.assertEqual(2, difference.truncation_order)
        self.assertEqual(2, difference.leading_order())
        self.assertIsNone((a - a).leading_order())

    def test_needs_constant_term(self):
        self.assertRaises(ValueError, DPF.PowerSeries, [])
