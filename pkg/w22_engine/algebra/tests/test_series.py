from fractions import Fraction

from django.test import SimpleTestCase

from algebra.series import (
    QSeries, SeriesOffsetError, binomial_geometric, eta, eta_power,
    euler_product, inv_product, tensor_character,
)
from core.exceptions import DomainError, ParseError, TruncationError


def partition_pairs_without_ones(n):
    """Independent count of pairs of partitions with parts ≥ 2 summing to n"""
    def count(total, largest):
        if total == 0:
            return 1
        return sum(count(total - part, part)
                   for part in range(2, min(total, largest) + 1))
    return sum(count(d, d) * count(n - d, n - d) for d in range(n + 1))


class SeriesArithmeticTestSuite(SimpleTestCase):
    def test_telescoping_product(self):
        one_minus_q = QSeries.from_polynomial([1, -1], 10)
        geometric = binomial_geometric(0, 10)
        product = one_minus_q * geometric
        self.assertEqual(product.coeffs, tuple([1] + [0] * 10))

    def test_offsets_add_under_multiplication(self):
        up = QSeries.constant(1, 5, offset=Fraction(1, 24))
        down = QSeries.constant(1, 5, offset=Fraction(-1, 24))
        product = up * down
        self.assertEqual(product.offset, 0)
        self.assertEqual(product.coeffs, tuple([1] + [0] * 5))

    def test_product_keeps_the_smaller_order(self):
        product = inv_product(1, 1, 10) * inv_product(1, 1, 4)
        self.assertEqual(product.order, 4)

    def test_coefficient_past_the_order_is_unknown(self):
        series = inv_product(1, 1, 5)
        with self.assertRaises(TruncationError) as context:
            series.coefficient(6)
        self.assertEqual(context.exception.details(), {'index': 6, 'order': 5})

    def test_truncate(self):
        series = inv_product(1, 1, 10).shift(Fraction(-1, 24))
        head = series.truncate(4)
        self.assertEqual(head.coeffs, (1, 1, 2, 3, 5))
        self.assertEqual(head.offset, Fraction(-1, 24))
        self.assertEqual(series.truncate(10), series)
        with self.assertRaises(TruncationError):
            series.truncate(11)

    def test_addition_aligns_integral_offsets(self):
        shifted = QSeries(1, (1, 1, 1))
        total = QSeries(0, (1, 1, 1, 1)) + shifted
        self.assertEqual(total.offset, 0)
        self.assertEqual(total.coeffs, (1, 2, 2, 2))

    def test_addition_rejects_different_cosets(self):
        with self.assertRaises(SeriesOffsetError):
            QSeries(0, (1,)) + QSeries(Fraction(1, 2), (1,))

    def test_multiplication_is_associative_and_commutative(self):
        a = inv_product(2, 1, 12)
        b = eta(12)
        c = binomial_geometric(3, 12)
        self.assertEqual((a * b) * c, a * (b * c))
        self.assertEqual(a * b, b * a)

    def test_scalar_multiple_and_subtraction(self):
        series = inv_product(1, 1, 5)
        self.assertEqual((series * 3 - series).coeffs,
                         tuple(2 * value for value in series.coeffs))

    def test_powers(self):
        self.assertEqual(inv_product(1, 1, 8) ** 2, inv_product(1, 2, 8))
        with self.assertRaises(DomainError):
            inv_product(1, 1, 8) ** -1

    def test_dominated_by(self):
        self.assertTrue(inv_product(2, 1, 20).dominated_by(inv_product(1, 1, 20)))
        self.assertFalse(inv_product(1, 1, 20).dominated_by(inv_product(2, 1, 20)))

    def test_record_round_trip(self):
        series = eta(6)
        self.assertEqual(QSeries.from_record(series.to_record()), series)
        self.assertEqual(series.to_record()['offset'], '1/24')

    def test_malformed_record(self):
        with self.assertRaises(ParseError):
            QSeries.from_record({'offset': '0/1'})
        with self.assertRaises(ParseError):
            QSeries.from_record({'offset': '0.5', 'coeffs': ['1/1']})


class SeriesBuildersTestSuite(SimpleTestCase):
    def test_inv_product_examples(self):
        self.assertEqual(inv_product(2, 2, 5).coeffs, (1, 0, 2, 2, 5, 6))
        self.assertEqual(inv_product(1, 1, 5).coeffs, (1, 1, 2, 3, 5, 7))
        self.assertEqual(inv_product(2, 1, 1).coeffs, (1, 0))

    def test_inv_product_counts_partition_pairs(self):
        series = inv_product(2, 2, 14)
        for n in range(15):
            self.assertEqual(series.coefficient(n), partition_pairs_without_ones(n))

    def test_inv_product_is_a_nonnegative_integer_series(self):
        self.assertTrue(all(value >= 0 for value in
                            inv_product(3, 2, 40).integer_coefficients()))

    def test_eta(self):
        series = eta(7)
        self.assertEqual(series.offset, Fraction(1, 24))
        self.assertEqual(series.coeffs, (1, -1, -1, 0, 0, 1, 0, 1))
        self.assertEqual(eta(0).coeffs, (1,))

    def test_eta_inverts_the_partition_series(self):
        product = eta(30) * inv_product(1, 1, 30)
        self.assertEqual(product.offset, Fraction(1, 24))
        self.assertEqual(product.coeffs, tuple([1] + [0] * 30))

    def test_eta_power(self):
        self.assertEqual(eta_power(0, 4).coeffs, (1, 0, 0, 0, 0))
        self.assertEqual(eta_power(2, 10), eta(10) * eta(10))
        self.assertEqual(eta_power(2, 10).offset, Fraction(1, 12))
        with self.assertRaises(DomainError):
            eta_power(-1, 4)

    def test_binomial_geometric(self):
        self.assertEqual(binomial_geometric(0, 5).coeffs, (1,) * 6)
        self.assertEqual(binomial_geometric(2, 4).coeffs, (1, 3, 6, 10, 15))

    def test_binomial_geometric_is_a_power_of_the_geometric_series(self):
        one_minus_q = QSeries.from_polynomial(euler_product(1).coeffs, 12)
        inverse = binomial_geometric(0, 12)
        self.assertEqual((one_minus_q * inverse).coeffs, tuple([1] + [0] * 12))
        self.assertEqual(inverse ** 4, binomial_geometric(3, 12))

    def test_tensor_character(self):
        ising = inv_product(2, 1, 10)
        self.assertEqual(tensor_character(ising, ising), inv_product(2, 2, 10))
        with self.assertRaises(DomainError):
            tensor_character()
