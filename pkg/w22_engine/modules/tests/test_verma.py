import warnings
from fractions import Fraction
from itertools import chain

from django.test import SimpleTestCase

from algebra.lie import C, L, W, bracket
from algebra.series import inv_product
from core.exceptions import DomainError
from factories.factories import HighestWeightFactory
from modules.verma import (
    VACUUM, BasisMonomial, ModuleVector, VermaModule, apply, apply_word,
    basis, graded_dim,
)


def monomial_vector(weight, w_parts=(), l_parts=(), exclude_ones=False):
    return ModuleVector.monomial(
        weight, BasisMonomial(w_parts, l_parts), exclude_ones)


def apply_combination(combination, vector):
    result = ModuleVector(vector.weight, {}, vector.exclude_ones)
    for generator, coefficient in combination.items():
        result = result + apply(generator, vector) * coefficient
    return result


class BasisTestSuite(SimpleTestCase):
    def test_vacuum_level_one_is_empty(self):
        self.assertEqual(basis(1, exclude_ones=True), ())

    def test_vacuum_level_four(self):
        self.assertEqual(basis(4, exclude_ones=True), (
            BasisMonomial((4,)),
            BasisMonomial((2, 2)),
            BasisMonomial((2,), (2,)),
            BasisMonomial((), (4,)),
            BasisMonomial((), (2, 2)),
        ))

    def test_verma_level_one(self):
        self.assertEqual(basis(1), (BasisMonomial((1,)), BasisMonomial((), (1,))))

    def test_blocks_of_equal_w_degree_are_contiguous(self):
        degrees = [monomial.w_degree for monomial in basis(7)]
        self.assertEqual(degrees, sorted(degrees, reverse=True))

    def test_graded_dimensions(self):
        self.assertEqual([graded_dim(n, True) for n in range(6)], [1, 0, 2, 2, 5, 6])
        self.assertEqual(graded_dim(3), 10)

    def test_graded_dimension_counts_the_basis(self):
        vacuum_series = inv_product(2, 2, 10)
        verma_series = inv_product(1, 2, 10)
        for n in range(11):
            self.assertEqual(graded_dim(n, True), len(basis(n, True)))
            self.assertEqual(graded_dim(n), len(basis(n)))
            self.assertEqual(graded_dim(n, True), vacuum_series.coefficient(n))
            self.assertEqual(graded_dim(n), verma_series.coefficient(n))

    def test_graded_dimension_uses_no_deprecated_counts(self):
        with warnings.catch_warnings():
            warnings.simplefilter('error')
            self.assertEqual(graded_dim(6, True), 13)

    def test_monomial_parts_must_be_partitions(self):
        with self.assertRaises(DomainError):
            BasisMonomial((2, 3))
        with self.assertRaises(DomainError):
            BasisMonomial((), (0,))

    def test_rendering(self):
        self.assertEqual(str(BasisMonomial((2,), (2,))), 'W(-2)L(-2)·1')
        self.assertEqual(BasisMonomial((3, 2), (2,)).to_record(),
                         {'w': [3, 2], 'l': [2]})


class ActionTestSuite(SimpleTestCase):
    def setUp(self):
        self.weight = HighestWeightFactory()
        self.vacuum = ModuleVector.highest_weight_vector(self.weight)

    def test_raising_on_lowering(self):
        vector = monomial_vector(self.weight, (), (1,))
        self.assertEqual(apply(L(1), vector), self.vacuum * (2 * self.weight.h1))

    def test_w_modes_commute_on_the_vacuum(self):
        vector = monomial_vector(self.weight, (1,))
        self.assertTrue(apply(W(1), vector).is_zero)

    def test_virasoro_on_w_monomial_differentiates(self):
        weight = HighestWeightFactory(c=Fraction(7, 3), h2=Fraction(-2, 5))
        vector = monomial_vector(weight, (2, 2))
        factor = Fraction(2 ** 3 - 2, 12) * weight.c + 4 * weight.h2
        self.assertEqual(apply(L(2), vector),
                         monomial_vector(weight, (2,)) * (2 * factor))

    def test_zero_modes_and_center_on_the_vacuum(self):
        self.assertEqual(apply(L(0), self.vacuum), self.vacuum * self.weight.h1)
        self.assertEqual(apply(W(0), self.vacuum), self.vacuum * self.weight.h2)
        self.assertEqual(apply(C, self.vacuum), self.vacuum * self.weight.c)
        self.assertTrue(apply(L(3), self.vacuum).is_zero)

    def test_lowering_letters_are_sorted_into_the_monomial(self):
        vector = apply_word((L(-2), W(-3), W(-1)), self.vacuum)
        self.assertEqual(vector,
                         monomial_vector(self.weight, (3, 1), (2,))
                         - monomial_vector(self.weight, (3, 3))
                         + monomial_vector(self.weight, (5, 1)))

    def test_l0_grades_the_module(self):
        for monomial in chain.from_iterable(basis(n) for n in range(5)):
            vector = ModuleVector.monomial(self.weight, monomial)
            self.assertEqual(apply(L(0), vector),
                             vector * (self.weight.h1 + monomial.level))

    def test_action_respects_brackets(self):
        generators = [L(m) for m in range(-3, 4)] + [W(m) for m in range(-3, 4)]
        for weight, exclude_ones in ((self.weight, False),
                                     (HighestWeightFactory(vacuum=True), True)):
            vectors = [ModuleVector.monomial(weight, monomial, exclude_ones)
                       for n in range(6) for monomial in basis(n, exclude_ones)]
            for x in generators:
                for y in generators:
                    for v in vectors:
                        self.assertEqual(
                            apply(x, apply(y, v)) - apply(y, apply(x, v)),
                            apply_combination(bracket(x, y), v),
                            msg='{x} {y} {v}'.format(x=x, y=y, v=v))


class VacuumQuotientTestSuite(SimpleTestCase):
    def setUp(self):
        self.weight = HighestWeightFactory(vacuum=True)
        self.vacuum = ModuleVector.highest_weight_vector(self.weight, True)

    def test_mode_minus_one_kills_the_vacuum(self):
        self.assertTrue(apply(L(-1), self.vacuum).is_zero)
        self.assertTrue(apply(W(-1), self.vacuum).is_zero)

    def test_mode_minus_one_is_commuted_to_the_vacuum(self):
        vector = monomial_vector(self.weight, (), (2,), exclude_ones=True)
        self.assertEqual(apply(W(-1), vector),
                         monomial_vector(self.weight, (3,), exclude_ones=True))
        self.assertEqual(apply(L(-1), vector),
                         monomial_vector(self.weight, (), (3,), exclude_ones=True))

    def test_quotient_needs_a_vacuum_weight(self):
        with self.assertRaises(DomainError):
            VermaModule(HighestWeightFactory(), exclude_ones=True)

    def test_monomials_with_ones_are_rejected(self):
        with self.assertRaises(DomainError):
            monomial_vector(self.weight, (1,), exclude_ones=True)

    def test_central_charge_zero_is_flagged(self):
        with self.assertLogs('modules.verma', level='WARNING'):
            module = VermaModule(HighestWeightFactory(vacuum=True, c=0), True)
        self.assertTrue(module.degenerate_vacuum)
        self.assertFalse(VermaModule(self.weight, True).degenerate_vacuum)

    def test_vectors_of_different_modules_do_not_mix(self):
        with self.assertRaises(DomainError):
            self.vacuum + ModuleVector.highest_weight_vector(self.weight)

    def test_highest_weight_vector_is_the_empty_monomial(self):
        self.assertEqual(list(self.vacuum), [VACUUM])
        self.assertEqual(self.vacuum.level, 0)
