"""
Shapovalov form, Gram matrices and irreducibility of W(2,2) Verma modules.

The form is the symmetric bilinear form with (1, 1) = 1 for which the
generators act with adjoints L_m† = L_{−m}, W_m† = W_{−m}. For a monomial
x·u' (x its first letter) the value is computed as

    (x·u', v) = (u', x†·v)

and memoised per pair of monomials, so a whole Gram matrix reuses the
pairings of every lower level.
"""
import logging
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from algebra.lie import L, W, adjoint
from core.exceptions import DomainError
from core.linalg import determinant, kernel, rank
from core.rationals import format_rational, rational_sqrt
from modules.verma import (ModuleVector, basis, graded_dim, verma_module)


logger = logging.getLogger(__name__)

ANNIHILATORS = (L(1), L(2), W(1), W(2))


class ShapovalovForm(object):
    def __init__(self, weight, exclude_ones=False):
        self.module = verma_module(weight, exclude_ones)
        self._pairings = {}

    def pair_monomials(self, u, v):
        if u.level != v.level:
            return Fraction(0)
        if u.is_vacuum:
            return Fraction(1)
        key = (u, v)
        if key not in self._pairings:
            first, rest = u.split()
            value = Fraction(0)
            for w, coefficient in self.module.act(adjoint(first), v).items():
                value += coefficient * self.pair_monomials(rest, w)
            self._pairings[key] = value
        return self._pairings[key]


@lru_cache(maxsize=128)
def shapovalov_form(weight, exclude_ones=False):
    return ShapovalovForm(weight, exclude_ones)


def pair(u, v):
    """(u, v) for two vectors of the same module"""
    if u.weight != v.weight or u.exclude_ones != v.exclude_ones:
        raise DomainError('vectors belong to different modules')
    form = shapovalov_form(u.weight, u.exclude_ones)
    value = Fraction(0)
    for x, alpha in u.items():
        for y, beta in v.items():
            if x.level == y.level:
                value += alpha * beta * form.pair_monomials(x, y)
    return value


@dataclass(frozen=True)
class GramMatrix:
    weight: object
    level: int
    basis: tuple
    entries: tuple
    exclude_ones: bool = False

    @property
    def size(self):
        return len(self.basis)

    def rows(self):
        return [list(row) for row in self.entries]

    def to_record(self):
        return {
            'weight': self.weight.to_record(),
            'level': self.level,
            'exclude_ones': self.exclude_ones,
            'basis': [monomial.to_record() for monomial in self.basis],
            'entries': [[format_rational(value) for value in row]
                        for row in self.entries],
        }


def _gram_rows(weight, level, exclude_ones, row_indices):
    """Upper-triangle rows of one Gram matrix; runs inside worker processes"""
    form = shapovalov_form(weight, exclude_ones)
    monomials = basis(level, exclude_ones)
    return {
        i: [form.pair_monomials(monomials[i], monomials[j])
            for j in range(i, len(monomials))]
        for i in row_indices
    }


def _chunks(indices, count):
    return [indices[start::count] for start in range(count) if indices[start::count]]


def gram(weight, level, exclude_ones=False, jobs=1):
    """Gram matrix of the Shapovalov form on the level-n basis"""
    if level < 0:
        raise DomainError('level must be nonnegative')
    verma_module(weight, exclude_ones)
    monomials = basis(level, exclude_ones)
    size = len(monomials)
    indices = list(range(size))
    if jobs > 1 and size > 1:
        logger.debug('Gram matrix at level %s: %s rows on %s workers',
                    level, size, jobs)
        rows = {}
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            futures = [
                executor.submit(_gram_rows, weight, level, exclude_ones, chunk)
                for chunk in _chunks(indices, jobs)
            ]
            for future in futures:
                rows.update(future.result())
    else:
        rows = _gram_rows(weight, level, exclude_ones, indices)
    entries = [[Fraction(0)] * size for _ in range(size)]
    for i in indices:
        for offset, value in enumerate(rows[i]):
            entries[i][i + offset] = value
            entries[i + offset][i] = value
    return GramMatrix(weight, level, monomials,
                      tuple(tuple(row) for row in entries), exclude_ones)


def det_gram(matrix):
    return determinant(matrix.rows())


def radical_basis(matrix):
    """Basis of the radical of the form at one level, as module vectors"""
    return [
        ModuleVector(matrix.weight,
                     dict(zip(matrix.basis, vector)),
                     matrix.exclude_ones)
        for vector in kernel(matrix.rows())
    ]


def is_singular(vector):
    """A nonzero homogeneous vector of positive level killed by L₁, L₂, W₁, W₂"""
    if vector.is_zero or vector.level == 0:
        raise DomainError('singularity is tested on nonzero vectors of positive level')
    module = verma_module(vector.weight, vector.exclude_ones)
    return all(module.apply(g, vector).is_zero for g in ANNIHILATORS)


def singular_vectors(weight, level, exclude_ones=False):
    """Basis of the singular vectors at one level.

    Stacks the matrices of L₁, L₂, W₁, W₂ from level n to levels n−1 and
    n−2 and returns their common kernel.
    """
    if level < 1:
        raise DomainError('singular vectors live at positive levels')
    module = verma_module(weight, exclude_ones)
    source = basis(level, exclude_ones)
    if not source:
        return []
    rows = []
    for generator in ANNIHILATORS:
        target = basis(level - generator.mode, exclude_ones) if level >= generator.mode else ()
        images = [module.act(generator, monomial) for monomial in source]
        for monomial in target:
            rows.append([image.get(monomial, Fraction(0)) for image in images])
    if not rows:
        rows = [[Fraction(0)] * len(source)]
    return [ModuleVector(weight, dict(zip(source, vector)), exclude_ones)
            for vector in kernel(rows)]


@dataclass(frozen=True)
class IrreducibilityDecision:
    irreducible: bool
    witness_m: int = None
    trivial_quotient: bool = False

    def to_record(self):
        return {
            'irreducible': self.irreducible,
            'witness_m': self.witness_m,
            'trivial_quotient': self.trivial_quotient,
        }


def verma_irreducible(weight):
    """
    Decides irreducibility of V(c, h₁, h₂).

    For c ≠ 0 the module is reducible exactly when (c − 24h₂)/c is the
    square of an integer m ≥ 1, and the first singular vector then lives at
    level m. For c = 0 it is reducible exactly when h₂ = 0.
    """
    trivial = weight.c == 0 and weight.h1 == 0 and weight.h2 == 0
    if weight.c == 0:
        if weight.h2 == 0:
            return IrreducibilityDecision(False, 1, trivial)
        return IrreducibilityDecision(True)
    ratio = (weight.c - 24 * weight.h2) / weight.c
    root = rational_sqrt(ratio)
    if root is not None and root.denominator == 1 and root >= 1:
        return IrreducibilityDecision(False, int(root))
    return IrreducibilityDecision(True)


def first_singular_level(weight):
    decision = verma_irreducible(weight)
    return None if decision.irreducible else decision.witness_m


def degree_blocks(matrix):
    """
    Gram matrix cut into blocks by W-degree of the row monomial and
    L-degree of the column monomial.

    Returns an OrderedDict (d, e) ↦ rows of the block. At the vacuum the
    blocks with d > e vanish and the diagonal blocks are nonsingular.
    """
    rows_by_degree = OrderedDict()
    columns_by_degree = OrderedDict()
    for index, monomial in enumerate(matrix.basis):
        rows_by_degree.setdefault(monomial.w_degree, []).append(index)
        columns_by_degree.setdefault(monomial.l_degree, []).append(index)
    blocks = OrderedDict()
    for d in sorted(rows_by_degree):
        for e in sorted(columns_by_degree):
            blocks[(d, e)] = [
                [matrix.entries[i][j] for j in columns_by_degree[e]]
                for i in rows_by_degree[d]
            ]
    return blocks


def block_triangular(matrix):
    """True when every block (d, e) with d > e is zero and every square
    diagonal block is nonsingular."""
    for (d, e), rows in degree_blocks(matrix).items():
        if d > e and any(value for row in rows for value in row):
            return False
        if d == e and len(rows) == len(rows[0]) and determinant(rows) == 0:
            return False
    return True


def dimension_profile(weight, top_level, exclude_ones=False):
    """(level, graded dimension, Gram rank) for levels 0..top_level"""
    profile = []
    for level in range(top_level + 1):
        matrix = gram(weight, level, exclude_ones)
        profile.append((level, graded_dim(level, exclude_ones),
                        rank(matrix.rows()) if matrix.size else 0))
    return profile
