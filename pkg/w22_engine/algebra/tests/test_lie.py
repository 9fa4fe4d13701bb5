from fractions import Fraction

from django.test import SimpleTestCase

from algebra.lie import (
    C, L, W, GeneratorMode, LieCombination, adjoint, adjoint_combination,
    bracket, generators_in_window, jacobiator, parse_generator,
)
from core.exceptions import DomainError, ParseError


class BracketTestSuite(SimpleTestCase):
    def test_virasoro_bracket_with_central_term(self):
        self.assertEqual(bracket(L(2), L(-2)),
                         LieCombination({L(0): 4, C: Fraction(1, 2)}))

    def test_w_modes_commute(self):
        self.assertEqual(bracket(W(3), W(-3)), LieCombination())

    def test_mixed_bracket(self):
        self.assertEqual(bracket(L(1), W(-1)), LieCombination({W(0): 2}))
        self.assertEqual(bracket(W(-1), L(1)), LieCombination({W(0): -2}))
        self.assertEqual(bracket(L(3), W(-3)),
                         LieCombination({W(0): 6, C: 2}))

    def test_central_element_is_central(self):
        for generator in generators_in_window(2):
            self.assertEqual(len(bracket(C, generator)), 0)

    def test_antisymmetry(self):
        window = generators_in_window(4)
        for a in window:
            for b in window:
                self.assertEqual(bracket(b, a), -bracket(a, b))

    def test_jacobi_identity(self):
        window = generators_in_window(6)
        for a in window:
            for b in window:
                for c in window:
                    self.assertEqual(len(jacobiator(a, b, c)), 0,
                                     msg='{a} {b} {c}'.format(a=a, b=b, c=c))

    def test_adjoint_is_an_anti_involution(self):
        window = generators_in_window(6)
        for a in window:
            self.assertEqual(adjoint(adjoint(a)), a)
            for b in window:
                self.assertEqual(bracket(adjoint(b), adjoint(a)),
                                 adjoint_combination(bracket(a, b)))


class GeneratorTestSuite(SimpleTestCase):
    def test_adjoint_examples(self):
        self.assertEqual(adjoint(L(-5)), L(5))
        self.assertEqual(adjoint(C), C)

    def test_rendering_and_parsing(self):
        for generator in (L(-2), W(3), C, L(0)):
            self.assertEqual(parse_generator(str(generator)), generator)
        self.assertEqual(str(W(-2)), 'W(-2)')

    def test_bad_generators(self):
        for text in ('X(1)', 'L1', 'W(a)', ''):
            with self.assertRaises(ParseError):
                parse_generator(text)
        with self.assertRaises(DomainError):
            GeneratorMode('C', 2)

    def test_combination_has_no_zero_terms(self):
        combination = LieCombination({L(1): 1}) - LieCombination({L(1): 1})
        self.assertEqual(len(combination), 0)
        self.assertEqual(str(combination), '0')
