"""
Exact linear algebra over the rationals.

Matrices are plain row lists of Fractions at the boundary; the work is done by
sympy's DomainMatrix over QQ (fraction-free Bareiss determinant, reduced row
echelon form with first-nonzero pivoting).
"""
from fractions import Fraction

from sympy import QQ
from sympy.polys.matrices import DomainMatrix


def _to_domain_matrix(rows, columns=None):
    columns = len(rows[0]) if columns is None else columns
    elements = [
        [QQ(Fraction(entry).numerator, Fraction(entry).denominator)
         for entry in row]
        for row in rows
    ]
    return DomainMatrix(elements, (len(rows), columns), QQ)


def _to_fraction(element):
    value = QQ.to_sympy(element)
    return Fraction(int(value.p), int(value.q))


def _reduced_rows(rows):
    echelon, pivots = _to_domain_matrix(rows).rref()
    reduced = [
        [Fraction(int(entry.p), int(entry.q)) for entry in row]
        for row in echelon.to_Matrix().tolist()
    ]
    return reduced, tuple(pivots)


def determinant(rows):
    if not rows:
        return Fraction(1)
    return _to_fraction(_to_domain_matrix(rows).det())


def kernel(rows):
    """Basis of the right kernel, one vector per free column.

    The vector for free column f carries 1 at f and minus the reduced
    entries of f at the pivot positions.
    """
    if not rows:
        return []
    columns = len(rows[0])
    reduced, pivots = _reduced_rows(rows)
    basis = []
    for free in range(columns):
        if free in pivots:
            continue
        vector = [Fraction(0)] * columns
        vector[free] = Fraction(1)
        for row_index, pivot in enumerate(pivots):
            vector[pivot] = -reduced[row_index][free]
        basis.append(tuple(vector))
    return basis


def solve(rows, rhs):
    """One solution x of rows·x = rhs (free variables set to 0), or None"""
    columns = len(rows[0])
    augmented = [list(row) + [value] for row, value in zip(rows, rhs)]
    reduced, pivots = _reduced_rows(augmented)
    if columns in pivots:
        return None
    solution = [Fraction(0)] * columns
    for row_index, pivot in enumerate(pivots):
        solution[pivot] = reduced[row_index][columns]
    return tuple(solution)


def rank(rows):
    if not rows:
        return 0
    return len(_reduced_rows(rows)[1])
