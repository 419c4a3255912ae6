# -*- coding: utf-8 -*-

from __future__ import unicode_literals, print_function

import random
from fractions import Fraction

import pytest

from pysullivan.core.algebra import (
    UNIT,
    GradedAlgebra,
    Polynomial,
    apply_derivation,
    coordinates,
    from_coordinates,
    monomial_basis,
    multiply,
    substitute,
)
from pysullivan.core.common import (
    AlgebraMismatchError,
    ParseError,
    UnknownGeneratorError,
)
from . import oracle
from .cases import LAW_CASES


@pytest.fixture
def algebra():
    return GradedAlgebra([('x2', 2), ('y3', 3), ('a1', 1), ('b3', 3)])


def random_homogeneous(algebra, degree, n_terms=3):
    basis = algebra.monomial_basis(degree)
    if not basis:
        return algebra.zero()

    return Polynomial(algebra, dict(
        (random.choice(basis), random.randint(-3, 3)) for _ in range(n_terms)))


class TestGradedAlgebra(object):
    def test_generators(self, algebra):
        assert algebra.names == ('x2', 'y3', 'a1', 'b3')
        assert algebra.degrees == (2, 3, 1, 3)
        assert algebra.generator('a1').index == 2
        assert algebra.generator('a1').is_odd
        assert not algebra.generator('x2').is_odd
        assert 'b3' in algebra
        assert 'z5' not in algebra
        assert algebra.max_degree == 3

    def test_unknown_generator(self, algebra):
        with pytest.raises(UnknownGeneratorError, match="'z5'"):
            algebra.gen('z5')

    def test_bad_generators(self):
        with pytest.raises(ParseError, match='Bad generator name'):
            GradedAlgebra([('2x', 2)])

        with pytest.raises(ParseError, match='should be positive'):
            GradedAlgebra([('x0', 0)])

        with pytest.raises(ParseError, match='not an integer'):
            GradedAlgebra([('x', '2')])

        with pytest.raises(ParseError, match='Duplicate'):
            GradedAlgebra([('x', 2), ('x', 3)])

        with pytest.raises(ParseError, match='no .degree. field'):
            GradedAlgebra([{'name': 'x'}])

    def test_equality(self):
        first = GradedAlgebra([('x', 2), {'name': 'y', 'degree': 3}])
        second = GradedAlgebra([('x', 2), ('y', 3)])
        assert first == second
        assert hash(first) == hash(second)
        assert first != GradedAlgebra([('x', 2), ('y', 5)])

    def test_extend(self):
        small = GradedAlgebra([('x', 2)])
        big = small.extend([('y', 3)])
        assert big.names == ('x', 'y')
        assert small.is_subalgebra_of(big)
        assert not big.is_subalgebra_of(small)

    def test_monomial_basis(self):
        algebra = GradedAlgebra([('x2', 2), ('y3', 3)])
        assert algebra.monomial_basis(0) == [UNIT]
        assert algebra.monomial_basis(1) == []
        assert algebra.monomial_basis(4) == [((0, 2),)]
        assert algebra.monomial_basis(5) == [((0, 1), (1, 1))]
        # the odd generator squares to zero
        assert algebra.monomial_basis(6) == [((0, 3),)]
        assert monomial_basis(algebra, -1) == []

    def test_dimensions_agree_with_poincare_series(self):
        for _ in range(10):
            degrees = [random.randint(1, 5) for _ in range(random.randint(1, 4))]
            algebra = GradedAlgebra(
                ('g{}'.format(i), degree) for i, degree in enumerate(degrees))

            counts = algebra.poincare_counts(12)
            assert counts == [algebra.dimension(degree) for degree in range(13)]


class TestPolynomial(object):
    def test_koszul_signs(self, algebra):
        x2, y3, a1, b3 = [algebra.gen(name) for name in algebra.names]

        assert y3 * b3 == -(b3 * y3)
        assert a1 * y3 == -(y3 * a1)
        assert x2 * y3 == y3 * x2
        assert b3 * b3 == 0
        assert a1 * a1 == 0
        assert (y3 * a1) * b3 == -(b3 * a1 * y3)

    def test_associativity(self, algebra):
        for _ in range(LAW_CASES):
            first, second, third = [
                random_homogeneous(algebra, random.randint(0, 6)) for _ in range(3)]
            assert (first * second) * third == first * (second * third)

    def test_graded_commutativity(self, algebra):
        for _ in range(LAW_CASES):
            deg_a, deg_b = random.randint(1, 6), random.randint(1, 6)
            first = random_homogeneous(algebra, deg_a)
            second = random_homogeneous(algebra, deg_b)

            sign = -1 if deg_a * deg_b % 2 else 1
            assert first * second == (second * first).scale(sign)

    def test_product_agrees_with_rearranging(self, algebra):
        size = len(algebra.degrees)
        for _ in range(200):
            first = random_homogeneous(algebra, random.randint(0, 6))
            second = random_homogeneous(algebra, random.randint(0, 6))

            expected = oracle.multiply(
                oracle.dense(first, size), oracle.dense(second, size), algebra.degrees)
            assert oracle.dense(first * second, size) == expected

    def test_arithmetic(self, algebra):
        x2, y3 = algebra.gen('x2'), algebra.gen('y3')
        poly = x2 ** 2 + 3 * x2 - 1

        assert poly.degrees() == [0, 2, 4]
        assert poly.degree is None
        assert not poly.is_homogeneous
        assert poly.constant_term() == -1
        assert poly.degree_component(2) == 3 * x2
        assert list(poly.components()) == [0, 2, 4]
        assert poly.linear_part() == {0: 3}
        assert (poly - poly) == 0
        assert (x2 / 2).coefficient(((0, 1),)) == Fraction(1, 2)
        assert (y3 * 2 - y3) == y3
        assert (1 - x2) == -(x2 - 1)
        assert poly.generators_used() == {0}

    def test_zero(self, algebra):
        zero = algebra.zero()
        assert not zero
        assert zero.degree is None
        assert zero.is_homogeneous
        assert str(zero) == '0'

    def test_str(self, algebra):
        x2, y3, a1 = algebra.gen('x2'), algebra.gen('y3'), algebra.gen('a1')
        assert str(y3 - a1 * x2) == 'y3 - x2*a1'
        assert str(x2.scale(Fraction(1, 2))) == '1/2*x2'
        assert str(-x2 ** 3 + 2) == '2 - x2^3'

    def test_bad_power(self, algebra):
        with pytest.raises(ValueError, match='non-negative integer'):
            algebra.gen('x2') ** -1

    def test_different_algebras(self, algebra):
        other = GradedAlgebra([('x2', 2)])
        with pytest.raises(AlgebraMismatchError):
            multiply(algebra.gen('x2'), other.gen('x2'))

        with pytest.raises(AlgebraMismatchError):
            algebra.gen('x2') + other.gen('x2')

        assert algebra.gen('x2') != other.gen('x2')

    def test_embed(self, algebra):
        small = GradedAlgebra([('x2', 2)])
        poly = small.gen('x2') ** 2
        assert poly.embed(algebra) == algebra.gen('x2') ** 2

        with pytest.raises(AlgebraMismatchError, match='Cannot embed'):
            algebra.gen('y3').embed(small)

    def test_coordinates(self, algebra):
        basis = algebra.monomial_basis(4)
        poly = random_homogeneous(algebra, 4)
        vector = coordinates(poly, basis)
        assert from_coordinates(algebra, vector, basis) == poly


class TestSubstitute(object):
    def test_homomorphism(self, algebra):
        images = [
            algebra.gen('x2') + algebra.gen('a1') * algebra.gen('a1'),
            algebra.gen('y3') + algebra.gen('x2') * algebra.gen('a1'),
            algebra.gen('a1'),
            algebra.gen('b3') - algebra.gen('y3'),
        ]

        for _ in range(20):
            first = random_homogeneous(algebra, random.randint(0, 5))
            second = random_homogeneous(algebra, random.randint(0, 5))

            assert substitute(first * second, images, algebra) == \
                substitute(first, images, algebra) * substitute(second, images, algebra)


class TestLeibniz(object):
    def test_rule(self, algebra):
        for case in range(LAW_CASES):
            # the map lowers degrees by `parity`
            parity = case % 2
            values = [random_homogeneous(algebra, degree - parity) for degree in algebra.degrees]
            _value = values.__getitem__

            deg_a = random.randint(0, 5)
            first = random_homogeneous(algebra, deg_a)
            second = random_homogeneous(algebra, random.randint(0, 5))

            sign = -1 if parity * deg_a % 2 else 1
            expected = \
                apply_derivation(first, _value, parity) * second + \
                (first * apply_derivation(second, _value, parity)).scale(sign)

            assert apply_derivation(first * second, _value, parity) == expected

    def test_agrees_with_factorwise_expansion(self, algebra):
        size = len(algebra.degrees)
        for case in range(200):
            parity = case % 2
            values = [random_homogeneous(algebra, degree - parity) for degree in algebra.degrees]
            poly = random_homogeneous(algebra, random.randint(0, 6))

            expected = oracle.leibniz(
                [oracle.dense(value, size) for value in values], parity,
                oracle.dense(poly, size), algebra.degrees)
            result = apply_derivation(poly, values.__getitem__, parity)
            assert oracle.dense(result, size) == expected
