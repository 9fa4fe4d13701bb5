"""
Two-dimensional commutative associative algebras with identity and an
invariant symmetric form: the weight-2 Griess algebra V₂ with ab = a₁b.

Elements are coordinate pairs over the declared basis. With the identity u
and any v independent of it, v² = pu + qv and the algebra is
Q[t]/(t² − qt − p); everything below follows from D = q² + 4p.
"""
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from core.exceptions import DomainError, ParseError
from core.linalg import determinant, solve
from core.rationals import format_rational, parse_rational, rational_sqrt


BASIS = (0, 1)


class GriessAxiomError(DomainError):
    def __init__(self, axiom, message):
        super(GriessAxiomError, self).__init__(
            '{axiom} fails: {message}'.format(axiom=axiom, message=message))
        self.axiom = axiom

    def details(self):
        return {'axiom': self.axiom}


class IrrationalSplittingError(DomainError):
    def __init__(self, discriminant):
        super(IrrationalSplittingError, self).__init__(
            'the idempotents need the square root of {d}, which is not '
            'rational'.format(d=format_rational(discriminant)))
        self.discriminant = discriminant

    def details(self):
        return {'discriminant': format_rational(self.discriminant)}


def _vector(values):
    return tuple(Fraction(value) for value in values)


def _combine(*scaled):
    """Σ k·x over (k, x) pairs"""
    return tuple(sum((k * x[i] for k, x in scaled), Fraction(0)) for i in BASIS)


class CommAlgebra2:
    """
    Structure constants e_i·e_j = products[i, j] (stored for i ≤ j only)
    and the Gram matrix of the form on the basis.

    The constructor refuses data that is not associative, has no identity,
    or whose form is not symmetric and invariant, naming the failing axiom.
    """

    def __init__(self, labels, products, form):
        self.labels = tuple(str(label) for label in labels)
        if len(self.labels) != 2 or self.labels[0] == self.labels[1]:
            raise ParseError('a Griess algebra here has exactly two distinct basis labels')
        self._products = {
            (i, j): _vector(products[i, j]) for i, j in product(BASIS, repeat=2) if i <= j
        }
        self.form = tuple(_vector(row) for row in form)
        self._check_axioms()
        self.unit = self._solve_unit()

    def structure(self, i, j):
        return self._products[min(i, j), max(i, j)]

    def basis_vector(self, i):
        return tuple(Fraction(int(i == k)) for k in BASIS)

    def multiply(self, x, y):
        return _combine(*((x[i] * y[j], self.structure(i, j))
                          for i, j in product(BASIS, repeat=2)))

    def pairing(self, x, y):
        return sum((x[i] * self.form[i][j] * y[j] for i, j in product(BASIS, repeat=2)),
                   Fraction(0))

    def form_determinant(self):
        return determinant([list(row) for row in self.form])

    def _check_axioms(self):
        if self.form[0][1] != self.form[1][0]:
            raise GriessAxiomError('form symmetry', '(e1,e2) != (e2,e1)')
        for i, j, k in product(BASIS, repeat=3):
            left = self.multiply(self.structure(i, j), self.basis_vector(k))
            right = self.multiply(self.basis_vector(i), self.structure(j, k))
            if left != right:
                raise GriessAxiomError('associativity', '({a}{b}){c} != {a}({b}{c})'.format(
                    a=self.labels[i], b=self.labels[j], c=self.labels[k]))
            left = self.pairing(self.structure(i, j), self.basis_vector(k))
            right = self.pairing(self.basis_vector(i), self.structure(j, k))
            if left != right:
                raise GriessAxiomError('invariant form', '({a}{b},{c}) != ({a},{b}{c})'.format(
                    a=self.labels[i], b=self.labels[j], c=self.labels[k]))

    def _solve_unit(self):
        rows, rhs = [], []
        for j in BASIS:
            for r in BASIS:
                rows.append([self.structure(i, j)[r] for i in BASIS])
                rhs.append(Fraction(int(j == r)))
        unit = solve(rows, rhs)
        if unit is None:
            raise GriessAxiomError('identity', 'no element u with u·x = x')
        return tuple(unit)

    def coordinates(self, x):
        """(a, b) with x = a·e1 + b·e2, rendered as "p/q" strings"""
        return [format_rational(value) for value in x]

    @classmethod
    def from_record(cls, record):
        """
        Reads {"basis": [a, b], "products": {"a*a": [..], "a*b": [..],
        "b*b": [..]}, "form": [[..], [..]]} with rationals as "p/q".
        """
        try:
            labels = [str(label) for label in record['basis']]
            raw_products = record['products']
            raw_form = record['form']
        except (KeyError, TypeError) as error:
            raise ParseError('Griess record is missing {key}'.format(key=error))
        if len(labels) != 2:
            raise ParseError('a Griess algebra here has exactly two basis labels')
        products = {}
        for i, j in product(BASIS, repeat=2):
            key = '{a}*{b}'.format(a=labels[i], b=labels[j])
            if key not in raw_products:
                continue
            value = _read_pair(raw_products[key], key)
            if (i, j) in products and products[i, j] != value:
                raise GriessAxiomError('commutativity', '{a}{b} != {b}{a}'.format(
                    a=labels[i], b=labels[j]))
            products[i, j] = products[j, i] = value
        for i, j in product(BASIS, repeat=2):
            if (i, j) not in products:
                raise ParseError('Griess record has no product {a}*{b}'.format(
                    a=labels[i], b=labels[j]))
        if not isinstance(raw_form, list) or len(raw_form) != 2:
            raise ParseError('the form must be a 2×2 matrix')
        form = [_read_pair(row, 'form') for row in raw_form]
        return cls(labels, products, form)

    def to_record(self):
        return {
            'basis': list(self.labels),
            'products': {
                '{a}*{b}'.format(a=self.labels[i], b=self.labels[j]):
                    self.coordinates(self._products[i, j])
                for i, j in sorted(self._products)
            },
            'form': [self.coordinates(row) for row in self.form],
        }


def _read_pair(values, where):
    if not isinstance(values, list) or len(values) != 2:
        raise ParseError('{where} must be a pair of rationals'.format(where=where))
    return tuple(parse_rational(value) for value in values)


@dataclass(frozen=True)
class Radical:
    """The nilpotent ideal: dimension 0, or 1 spanned by `vector`"""
    dimension: int
    vector: tuple = None

    def to_record(self):
        return {
            'dimension': self.dimension,
            'vector': [format_rational(value) for value in self.vector]
            if self.vector is not None else None,
        }


def _generator(algebra):
    """First basis vector independent of the identity"""
    unit = algebra.unit
    for i in BASIS:
        vector = algebra.basis_vector(i)
        if unit[0] * vector[1] - unit[1] * vector[0] != 0:
            return vector
    raise GriessAxiomError('identity', 'the identity spans no proper line')


def minimal_equation(algebra):
    """(v, p, q) with v² = p·u + q·v for the generator v"""
    v = _generator(algebra)
    square = algebra.multiply(v, v)
    p, q = solve([[algebra.unit[r], v[r]] for r in BASIS], list(square))
    return v, p, q


def discriminant(algebra):
    _, p, q = minimal_equation(algebra)
    return q * q + 4 * p


def radical(algebra):
    v, p, q = minimal_equation(algebra)
    if q * q + 4 * p != 0:
        return Radical(0)
    return Radical(1, _combine((1, v), (-q / 2, algebra.unit)))


def idempotent_decomposition(algebra):
    """
    Primitive idempotents (p₁, p₂) with p₁ + p₂ = u and p₁p₂ = 0, from the
    rational roots r₁ > r₂ of t² − qt − p: pᵢ = ±(v − r_j u)/(r₁ − r₂).
    """
    v, p, q = minimal_equation(algebra)
    disc = q * q + 4 * p
    if disc == 0:
        raise DomainError('the algebra has a radical; it has no idempotent splitting')
    root = rational_sqrt(disc)
    if root is None:
        raise IrrationalSplittingError(disc)
    high, low = (q + root) / 2, (q - root) / 2
    first = _combine((1 / root, v), (-low / root, algebra.unit))
    second = _combine((-1 / root, v), (high / root, algebra.unit))
    return first, second
