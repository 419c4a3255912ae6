# -*- coding: utf-8 -*-
"""
Exact linear algebra over the rationals.

Vectors are plain lists of `fractions.Fraction`, matrices are lists of rows.
The heavy lifting (row reduction) is delegated to sympy's DomainMatrix
over the field QQ which does a fraction-free Gauss-Jordan elimination
with the first nonzero entry in column order taken as a pivot.
"""

from __future__ import unicode_literals, print_function, division

from fractions import Fraction

from six.moves import range
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from pysullivan.utils.iter import expand_generator
from pysullivan.utils.other import get_named_logger

LOG = get_named_logger(__name__, __file__)

ZERO = Fraction(0)
ONE = Fraction(1)


def to_qq(value):
    """Convert an integer or Fraction to the element of QQ domain"""
    value = Fraction(value)
    return QQ(value.numerator, value.denominator)


def from_qq(value):
    """Convert the element of QQ domain back to the Fraction"""
    return Fraction(int(value.numerator), int(value.denominator))


def zero_vector(size):
    """The list of `size` zeros"""
    return [ZERO] * size


def is_zero_vector(vector):
    """Whether all the coordinates are zero"""
    return not any(vector)


def add_scaled(target, vector, scale=ONE):
    """target += scale * vector (in-place), returns the target"""
    if scale:
        for i, value in enumerate(vector):
            if value:
                target[i] += scale * value
    return target


def linear_combination(coefficients, vectors, size):
    """Sum of c_i * v_i"""
    result = zero_vector(size)
    for coefficient, vector in zip(coefficients, vectors):
        add_scaled(result, vector, coefficient)
    return result


def transpose(rows, n_columns):
    """Transpose the matrix given by its rows"""
    return [[row[j] for row in rows] for j in range(n_columns)]


def _domain_matrix(rows, n_columns):
    return DomainMatrix(
        [[to_qq(value) for value in row] for row in rows],
        (len(rows), n_columns), QQ)


def rref(rows, n_columns):
    """
    Reduced row echelon form of the matrix.

    Return the pair (nonzero rows of RREF, pivot columns).
    """
    if not rows or not n_columns:
        return [], ()

    matrix = _domain_matrix(rows, n_columns)
    reduced, pivots = matrix.rref(method='FF')
    reduced_rows = [[from_qq(value) for value in row] for row in reduced.to_list()]

    pivots = tuple(pivots)
    LOG.debug('RREF of %dx%d matrix: rank %d', len(rows), n_columns, len(pivots))
    return reduced_rows[:len(pivots)], pivots


def rank(rows, n_columns):
    """The rank of the matrix given by rows"""
    return len(rref(rows, n_columns)[1])


@expand_generator
def kernel(rows, n_columns):
    """
    Basis of the null space {x | M x = 0} for a matrix M
    given by its rows (each row has the `n_columns` size).

    The basis is canonical: every vector has 1 in its own free column
    and zeros in all the other free columns.
    """
    reduced, pivots = rref(rows, n_columns)
    pivot_set = set(pivots)

    for free in range(n_columns):
        if free in pivot_set:
            continue

        vector = zero_vector(n_columns)
        vector[free] = ONE
        for row, pivot in zip(reduced, pivots):
            vector[pivot] = -row[free]
        yield vector


def span_basis(vectors, size):
    """Canonical (RREF) basis of the space spanned by vectors"""
    return rref(list(vectors), size)[0]


def independent_subset(base, candidates, size):
    """
    Greedily choose the candidates that are linearly independent
    modulo the span of `base` and of the previously chosen candidates.

    Return the indexes of the chosen candidates.
    """
    candidates = list(candidates)
    if not candidates:
        return []

    base = list(base)

    # the columns of the matrix are the base vectors followed by candidates,
    # so the pivot columns in RREF show the greedy choice
    columns = base + candidates
    __, pivots = rref(transpose(columns, size), len(columns)) \
        if size else ([], ())

    offset = len(base)
    return [pivot - offset for pivot in pivots if pivot >= offset]


def solve(vectors, target, size):
    """
    Find the coefficients c such that sum(c_i * vectors[i]) == target.
    The vectors should be linearly independent.

    Return None if the target does not lie in the span.
    """
    vectors = list(vectors)
    if is_zero_vector(target):
        return zero_vector(len(vectors))

    if not vectors:
        return None

    n_vectors = len(vectors)
    augmented = [[vector[i] for vector in vectors] + [target[i]] for i in range(size)]
    reduced, pivots = rref(augmented, n_vectors + 1)

    if n_vectors in pivots:
        return None

    if len(pivots) != n_vectors:
        raise ValueError('The vectors are not linearly independent')

    coefficients = zero_vector(n_vectors)
    for row, pivot in zip(reduced, pivots):
        coefficients[pivot] = row[n_vectors]
    return coefficients


def intersection(first, second, size):
    """Basis of the intersection of two subspaces given by spanning vectors"""
    first, second = list(first), list(second)
    if not first or not second:
        return []

    # a_1 * f_1 + ... = b_1 * s_1 + ...
    columns = first + [[-value for value in vector] for vector in second]
    relations = kernel(transpose(columns, size), len(columns))

    vectors = [linear_combination(relation[:len(first)], first, size)
               for relation in relations]
    return span_basis(vectors, size)


class Quotient(object):
    """
    Quotient space of a subspace `numerator` by its subspace `denominator`,
    both given by spanning sets of vectors in the coordinate space of `size`.

    The quotient basis is chosen greedily among the numerator vectors
    (in their order), so it is deterministic.
    """

    def __init__(self, numerator, denominator, size):
        self.size = size
        self.denominator = span_basis(denominator, size)
        numerator = span_basis(numerator, size)

        chosen = independent_subset(self.denominator, numerator, size)
        self.representatives = [numerator[i] for i in chosen]

    @property
    def dimension(self):
        """The dimension of the quotient space"""
        return len(self.representatives)

    def coordinates(self, vector):
        """
        Coordinates of the class of the vector in the basis of representatives.
        Return None if the vector does not lie in the numerator.
        """
        coefficients = solve(self.representatives + self.denominator, vector, self.size)
        if coefficients is None:
            return None

        return coefficients[:self.dimension]

    def lift(self, coordinates):
        """Representative vector for the class with given coordinates"""
        return linear_combination(coordinates, self.representatives, self.size)

    def is_zero_class(self, vector):
        """Whether the vector lies in the denominator"""
        coordinates = self.coordinates(vector)
        return coordinates is not None and is_zero_vector(coordinates)
