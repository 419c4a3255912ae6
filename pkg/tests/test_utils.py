# -*- coding: utf-8 -*-

from __future__ import unicode_literals, print_function

import logging
import random
from fractions import Fraction

import pytest
from six.moves import StringIO

from pysullivan.utils.iter import (
    expand_generator,
    weighted_compositions,
)
from pysullivan.utils.linalg import (
    Quotient,
    independent_subset,
    intersection,
    kernel,
    rank,
    rref,
    solve,
    span_basis,
)
from pysullivan.utils.other import (
    log_level,
    setup_logs,
)
from .oracle import (
    matrix_vector,
    naive_rank,
)


def random_matrix(n_rows, n_columns, low=-3, high=3):
    return [[random.randint(low, high) for _ in range(n_columns)] for _ in range(n_rows)]


class TestExpandGenerator(object):
    def test_list(self):
        @expand_generator
        def squares(n):
            for i in range(n):
                yield i * i

        assert squares(4) == [0, 1, 4, 9]

    def test_tuple(self):
        @expand_generator(type_=tuple)
        def letters():
            yield 'a'
            yield 'b'

        assert letters() == ('a', 'b')


class TestWeightedCompositions(object):
    def test_odd_capped(self):
        assert list(weighted_compositions(6, [2, 3], caps=[None, 1])) == [(3, 0)]
        assert list(weighted_compositions(6, [2, 3])) == [(3, 0), (0, 2)]

    def test_zero_total(self):
        assert list(weighted_compositions(0, [2, 3, 5])) == [(0, 0, 0)]

    def test_negative_total(self):
        assert list(weighted_compositions(-1, [1])) == []

    def test_no_weights(self):
        assert list(weighted_compositions(0, [])) == [()]
        assert list(weighted_compositions(3, [])) == []

    def test_bad_weight(self):
        with pytest.raises(ValueError, match='Bad weight'):
            list(weighted_compositions(3, [0, 1]))

    def test_caps_size(self):
        with pytest.raises(ValueError, match='sizes are different'):
            list(weighted_compositions(3, [1, 2], caps=[1]))

    def test_random(self):
        for _ in range(20):
            weights = [random.randint(1, 5) for _ in range(random.randint(1, 4))]
            total = random.randint(0, 12)

            vectors = list(weighted_compositions(total, weights))
            assert len(set(vectors)) == len(vectors)
            for vector in vectors:
                assert sum(e * w for e, w in zip(vector, weights)) == total

            assert vectors == sorted(vectors, reverse=True)


class TestLinearAlgebra(object):
    def test_rref_empty(self):
        assert rref([], 3) == ([], ())
        assert rank([[0, 0], [0, 0]], 2) == 0

    def test_rref(self):
        rows, pivots = rref([[2, 4, 0], [1, 2, 1]], 3)
        assert pivots == (0, 2)
        assert rows == [[1, 2, 0], [0, 0, 1]]
        assert all(isinstance(value, Fraction) for row in rows for value in row)

    def test_rank_random(self):
        for _ in range(30):
            n_rows, n_columns = random.randint(1, 6), random.randint(1, 6)
            matrix = random_matrix(n_rows, n_columns, -2, 2)
            assert rank(matrix, n_columns) == naive_rank(matrix)

    def test_kernel_random(self):
        for _ in range(30):
            n_rows, n_columns = random.randint(1, 5), random.randint(1, 6)
            matrix = random_matrix(n_rows, n_columns, -2, 2)

            basis = kernel(matrix, n_columns)
            assert len(basis) == n_columns - naive_rank(matrix)
            for vector in basis:
                assert not any(matrix_vector(matrix, vector))

    def test_kernel_of_no_rows(self):
        assert kernel([], 2) == [[1, 0], [0, 1]]

    def test_solve(self):
        vectors = [[1, 0, 1], [0, 1, 1]]
        assert solve(vectors, [2, 3, 5], 3) == [2, 3]
        assert solve(vectors, [0, 0, 1], 3) is None
        assert solve([], [0, 0, 0], 3) == []
        assert solve([], [1, 0, 0], 3) is None

    def test_solve_dependent(self):
        with pytest.raises(ValueError, match='not linearly independent'):
            solve([[1, 1], [2, 2]], [1, 1], 2)

    def test_independent_subset(self):
        base = [[1, 0, 0]]
        candidates = [[2, 0, 0], [0, 1, 0], [1, 1, 0], [0, 0, 1]]
        assert independent_subset(base, candidates, 3) == [1, 3]
        assert independent_subset([], [], 3) == []

    def test_intersection(self):
        first = [[1, 0, 0], [0, 1, 0]]
        second = [[0, 1, 0], [0, 0, 1]]
        assert intersection(first, second, 3) == [[0, 1, 0]]
        assert intersection(first, [], 3) == []

    def test_span_basis(self):
        assert span_basis([[1, 1], [2, 2], [0, 0]], 2) == [[1, 1]]


class TestQuotient(object):
    def test_simple(self):
        quotient = Quotient([[1, 0, 0], [0, 1, 0]], [[1, 1, 0]], 3)
        assert quotient.dimension == 1
        assert quotient.representatives == [[1, 0, 0]]

        assert quotient.coordinates([0, 1, 0]) == [-1]
        assert quotient.coordinates([0, 0, 1]) is None

        assert quotient.is_zero_class([2, 2, 0])
        assert not quotient.is_zero_class([0, 0, 1])
        assert not quotient.is_zero_class([1, 0, 0])

    def test_lift(self):
        quotient = Quotient([[1, 0], [0, 1]], [], 2)
        assert quotient.lift([3, Fraction(1, 2)]) == [3, Fraction(1, 2)]

    def test_random(self):
        size = 5
        for _ in range(20):
            numerator = random_matrix(3, size, -2, 2)
            denominator = [
                [a + b for a, b in zip(numerator[0], numerator[1])]]

            quotient = Quotient(numerator, denominator, size)
            expected = naive_rank(numerator) - naive_rank(denominator)
            assert quotient.dimension == expected

            for vector in numerator:
                assert quotient.coordinates(vector) is not None


class TestLogging(object):
    def test_levels(self):
        assert log_level(None) == logging.ERROR
        assert log_level(0) == logging.ERROR
        assert log_level(1) == logging.WARNING
        assert log_level(2) == logging.INFO
        assert log_level(5) == logging.DEBUG

    def test_handlers_do_not_pile_up(self):
        root = logging.getLogger('')
        old_level = root.level

        stream = StringIO()
        try:
            setup_logs(logging.INFO, stream=stream)
            handler = setup_logs(logging.INFO, stream=stream)

            ours = [h for h in root.handlers if getattr(h, '_pysullivan', False)]
            assert ours == [handler]

            logging.getLogger('pysullivan.test').info('hello from %s', 'test')
            assert 'hello from test' in stream.getvalue()
        finally:
            for h in list(root.handlers):
                if getattr(h, '_pysullivan', False):
                    root.removeHandler(h)
            root.setLevel(old_level)
