# -*- coding: utf-8 -*-
"""
Free graded-commutative algebras over the rationals.

The monomial is a tuple of pairs (generator index, exponent)
sorted by the index. Odd generators never have the exponent greater than 1.
The empty tuple stands for the unit.

The polynomial is a sparse mapping monomial --> nonzero Fraction.
"""

from __future__ import unicode_literals, print_function, division

import re
from collections import namedtuple, OrderedDict
from fractions import Fraction
from numbers import Rational

from memoized import memoized
from six import (
    integer_types, string_types,
    iteritems,
    python_2_unicode_compatible,
)

from pysullivan.core.common import (
    AlgebraMismatchError,
    ParseError,
    UnknownGeneratorError,
)
from pysullivan.utils.iter import weighted_compositions
from pysullivan.utils.other import get_named_logger

LOG = get_named_logger(__name__, __file__)

UNIT = ()

NAME_RE = re.compile(r'^[A-Za-z_][A-Za-z0-9_]*$')


class Generator(namedtuple('Generator', 'name degree index')):
    """
    The element of the graded vector space V
    that freely generates the algebra
    """
    __slots__ = ()

    @property
    def is_odd(self):
        """Odd generators anticommute and square to zero"""
        return self.degree % 2 == 1

    def to_dict(self):
        """The generator in the model file format"""
        return OrderedDict([('name', self.name), ('degree', self.degree)])


@python_2_unicode_compatible
class GradedAlgebra(object):
    """
    The free graded-commutative algebra on a finite list of generators.
    The declaration order of generators defines the monomial order.
    """

    def __init__(self, generators=()):
        generators = list(generators)

        self.generators = tuple(self._make_generators(generators))
        self._by_name = dict((gen.name, gen) for gen in self.generators)
        self.degrees = tuple(gen.degree for gen in self.generators)

    @classmethod
    def _make_generators(cls, generators):
        names = set()
        for index, gen in enumerate(generators):
            if isinstance(gen, Generator):
                name, degree = gen.name, gen.degree
            elif isinstance(gen, dict):
                try:
                    name, degree = gen['name'], gen['degree']
                except KeyError as ex:
                    raise ParseError('The generator {!r} has no {} field'.format(gen, ex))
            else:
                name, degree = gen

            if not isinstance(name, string_types) or not NAME_RE.match(name):
                raise ParseError('Bad generator name: {!r}'.format(name))

            if isinstance(degree, bool) or not isinstance(degree, integer_types):
                raise ParseError('The degree of {!r} is not an integer: {!r}'.format(
                    name, degree))

            if degree < 1:
                raise ParseError(
                    'The degree of {!r} should be positive: {}'.format(name, degree))

            if name in names:
                raise ParseError('Duplicate generator: {!r}'.format(name))
            names.add(name)

            yield Generator(name, degree, index)

    @property
    def names(self):
        """Names of the generators in declaration order"""
        return tuple(gen.name for gen in self.generators)

    def __len__(self):
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def _key(self):
        return tuple((gen.name, gen.degree) for gen in self.generators)

    def __eq__(self, other):
        if self is other:
            return True

        if not isinstance(other, GradedAlgebra):
            return False

        return self._key() == other._key()

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self._key())

    def __str__(self):
        return '∧({})'.format(', '.join(
            '{}[{}]'.format(gen.name, gen.degree) for gen in self.generators))

    def __repr__(self):
        return '{}({!r})'.format(self.__class__.__name__, list(self._key()))

    def generator(self, name):
        """Find the generator by name"""
        try:
            return self._by_name[name]
        except KeyError:
            raise UnknownGeneratorError(name, self)

    def __contains__(self, name):
        return name in self._by_name

    @property
    def max_degree(self):
        """The maximal degree of generators (0 for the ground field)"""
        return max(self.degrees) if self.degrees else 0

    def monomial_degree(self, monomial):
        """Total degree of the monomial"""
        return sum(self.degrees[index] * exp for index, exp in monomial)

    def monomial_basis(self, degree):
        """All the monomials of given degree"""
        return monomial_basis(self, degree)

    def dimension(self, degree):
        """The dimension of the homogeneous component"""
        return len(self.monomial_basis(degree))

    def poincare_counts(self, max_degree):
        """
        The dimensions of components up to the given degree
        computed from the generating function
        Π_even 1/(1 - t^|g|) * Π_odd (1 + t^|g|)
        """
        counts = [1] + [0] * max_degree
        for degree in self.degrees:
            if degree % 2:
                for total in range(max_degree, degree - 1, -1):
                    counts[total] += counts[total - degree]
            else:
                for total in range(degree, max_degree + 1):
                    counts[total] += counts[total - degree]

        return counts

    def extend(self, generators):
        """
        The new algebra with additional generators
        appended after the existing ones
        """
        return GradedAlgebra(list(self.generators) + [
            gen if not isinstance(gen, Generator) else (gen.name, gen.degree)
            for gen in generators])

    def is_subalgebra_of(self, other):
        """Whether the generators of the algebra form a prefix of other's"""
        return self._key() == other._key()[:len(self)]

    def zero(self):
        """The zero of the algebra"""
        return Polynomial(self)

    def one(self):
        """The unit of the algebra"""
        return Polynomial(self, {UNIT: 1})

    def gen(self, name):
        """The polynomial consisting of a single generator"""
        return Polynomial(self, {((self.generator(name).index, 1),): 1})

    def monomial(self, monomial, coefficient=1):
        """The polynomial consisting of a single monomial"""
        return Polynomial(self, {monomial: coefficient})


@memoized
def _monomial_basis(degrees, degree):
    caps = [1 if gen_degree % 2 else None for gen_degree in degrees]

    return tuple(
        tuple((index, exp) for index, exp in enumerate(exponents) if exp)
        for exponents in weighted_compositions(degree, degrees, caps))


def monomial_basis(algebra, degree):
    """
    All the canonical monomials of given total degree.
    The first generator's exponent decreases the slowest.
    """
    if degree < 0:
        return []

    return list(_monomial_basis(algebra.degrees, degree))


@memoized
def _monomial_product(first, second, degrees):
    """
    Return the pair (sign, monomial).
    The zero sign means the product vanishes.
    """
    exponents = dict(first)
    for index, exp in second:
        if index in exponents and degrees[index] % 2:
            return 0, UNIT
        exponents[index] = exponents.get(index, 0) + exp

    odd_first = [index for index, _ in first if degrees[index] % 2]
    odd_second = [index for index, _ in second if degrees[index] % 2]

    # each odd generator from the second monomial jumps over
    # the odd generators of the first one with bigger indexes
    transpositions = sum(1 for a in odd_first for b in odd_second if a > b)

    sign = -1 if transpositions % 2 else 1
    return sign, tuple(sorted(iteritems(exponents)))


def multiply_monomials(algebra, first, second):
    """Product of two monomials as a pair (sign, monomial)"""
    return _monomial_product(first, second, algebra.degrees)


def word_length(monomial):
    """The number of generators in the monomial (with multiplicity)"""
    return sum(exp for _, exp in monomial)


def monomial_indexes(monomial):
    """The set of generator indexes occurring in the monomial"""
    return frozenset(index for index, _ in monomial)


@python_2_unicode_compatible
class Polynomial(object):
    """
    The element of a free graded-commutative algebra.
    Should not be mutated after the creation.
    """

    def __init__(self, algebra, terms=None):
        self.algebra = algebra

        clean = dict()
        if terms:
            for monomial, coefficient in iteritems(terms):
                coefficient = Fraction(coefficient)
                if coefficient:
                    clean[monomial] = coefficient

        self._terms = clean

    @classmethod
    def _accumulate(cls, algebra, pairs):
        terms = dict()
        for monomial, coefficient in pairs:
            terms[monomial] = terms.get(monomial, 0) + coefficient

        return cls(algebra, terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    __nonzero__ = __bool__

    def _sort_key(self, monomial):
        return self.algebra.monomial_degree(monomial), word_length(monomial), monomial

    def items(self):
        """The pairs (monomial, coefficient) in a deterministic order"""
        return [(monomial, self._terms[monomial])
                for monomial in sorted(self._terms, key=self._sort_key)]

    def monomials(self):
        """The monomials with nonzero coefficients"""
        return [monomial for monomial, _ in self.items()]

    def coefficient(self, monomial):
        """The coefficient of given monomial"""
        return self._terms.get(monomial, Fraction(0))

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.algebra != self.algebra:
                raise AlgebraMismatchError(
                    'Operands belong to different algebras: {} and {}'.format(
                        self.algebra, other.algebra))
            return other

        if isinstance(other, (Rational,) + integer_types):
            return Polynomial(self.algebra, {UNIT: other})

        raise TypeError('Cannot combine polynomial with {!r}'.format(other))

    def __eq__(self, other):
        try:
            other = self._coerce(other)
        except (TypeError, AlgebraMismatchError):
            return False

        return self._terms == other._terms

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.algebra, frozenset(iteritems(self._terms))))

    def __add__(self, other):
        other = self._coerce(other)

        terms = dict(self._terms)
        for monomial, coefficient in iteritems(other._terms):
            terms[monomial] = terms.get(monomial, 0) + coefficient

        return Polynomial(self.algebra, terms)

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def scale(self, factor):
        """Multiply by the rational number"""
        factor = Fraction(factor)
        if not factor:
            return Polynomial(self.algebra)

        return Polynomial(self.algebra, dict(
            (monomial, coefficient * factor)
            for monomial, coefficient in iteritems(self._terms)))

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            if isinstance(other, (Rational,) + integer_types):
                return self.scale(other)
            return NotImplemented

        return multiply(self, other)

    def __rmul__(self, other):
        if isinstance(other, (Rational,) + integer_types):
            return self.scale(other)
        return NotImplemented

    def __truediv__(self, other):
        return self.scale(Fraction(1) / Fraction(other))

    __div__ = __truediv__

    def __pow__(self, power):
        if not isinstance(power, integer_types) or power < 0:
            raise ValueError('Only non-negative integer powers allowed: {!r}'.format(power))

        result = self.algebra.one()
        for _ in range(power):
            result = multiply(result, self)
        return result

    def degrees(self):
        """All the degrees of the terms"""
        return sorted(set(self.algebra.monomial_degree(monomial) for monomial in self._terms))

    @property
    def is_homogeneous(self):
        """Zero is homogeneous of any degree"""
        return len(self.degrees()) <= 1

    @property
    def degree(self):
        """
        The degree of homogeneous polynomial,
        None for zero or non-homogeneous one
        """
        degrees = self.degrees()
        if len(degrees) == 1:
            return degrees[0]
        return None

    def degree_component(self, degree):
        """The sum of terms of given total degree"""
        return degree_component(self, degree)

    def components(self):
        """Mapping degree --> homogeneous component"""
        return OrderedDict((degree, self.degree_component(degree)) for degree in self.degrees())

    def filter(self, predicate):
        """The sum of the terms whose monomials satisfy the predicate"""
        return Polynomial(self.algebra, dict(
            (monomial, coefficient) for monomial, coefficient in iteritems(self._terms)
            if predicate(monomial)))

    def linear_part(self):
        """Mapping generator index --> coefficient for the word length 1 terms"""
        return dict(
            (monomial[0][0], coefficient) for monomial, coefficient in iteritems(self._terms)
            if word_length(monomial) == 1)

    def constant_term(self):
        """The coefficient of the unit"""
        return self.coefficient(UNIT)

    def generators_used(self):
        """The set of generator indexes that occur in the polynomial"""
        indexes = set()
        for monomial in self._terms:
            indexes.update(monomial_indexes(monomial))
        return indexes

    def embed(self, algebra):
        """
        The same polynomial inside the bigger algebra
        which extends the current one
        """
        if algebra == self.algebra:
            return self

        if not self.algebra.is_subalgebra_of(algebra):
            raise AlgebraMismatchError('Cannot embed {} into {}'.format(self.algebra, algebra))

        return Polynomial(algebra, self._terms)

    def _format_monomial(self, monomial):
        factors = []
        for index, exp in monomial:
            name = self.algebra.generators[index].name
            if exp > 1:
                name = '{}^{}'.format(name, exp)
            factors.append(name)
        return '*'.join(factors)

    def __str__(self):
        if not self._terms:
            return '0'

        res = []
        for monomial, coefficient in self.items():
            sign = '-' if coefficient < 0 else '+'
            coefficient = abs(coefficient)
            if monomial == UNIT:
                term = str(coefficient)
            elif coefficient == 1:
                term = self._format_monomial(monomial)
            else:
                term = '{}*{}'.format(coefficient, self._format_monomial(monomial))

            if res:
                res.append(' {} {}'.format(sign, term))
            else:
                res.append(term if sign == '+' else '-' + term)

        return ''.join(res)

    def __repr__(self):
        return 'Polynomial({!r})'.format(str(self))


def _check_same_algebra(first, second):
    if first.algebra != second.algebra:
        raise AlgebraMismatchError(
            'Operands belong to different algebras: {} and {}'.format(
                first.algebra, second.algebra))


def multiply(first, second):
    """
    The graded-commutative product.
    Reordering of odd generators gives the Koszul sign.
    """
    _check_same_algebra(first, second)

    algebra = first.algebra
    pairs = []
    # pylint: disable=protected-access
    for monomial_a, coef_a in iteritems(first._terms):
        for monomial_b, coef_b in iteritems(second._terms):
            sign, monomial = multiply_monomials(algebra, monomial_a, monomial_b)
            if sign:
                pairs.append((monomial, sign * coef_a * coef_b))

    return Polynomial._accumulate(algebra, pairs)


def degree_component(poly, degree):
    """The sum of terms of total degree exactly `degree`"""
    algebra = poly.algebra
    return poly.filter(lambda monomial: algebra.monomial_degree(monomial) == degree)


def product(polynomials, algebra):
    """The product of all the polynomials (the unit for empty sequence)"""
    result = algebra.one()
    for poly in polynomials:
        result = multiply(result, poly)
    return result


def substitute(poly, images, target):
    """
    Apply the algebra homomorphism defined by the images of generators.

    :param images: sequence of polynomials in the `target` algebra
    indexed by the generator index of the `poly`'s algebra
    """
    powers = dict()

    def _power(index, exp):
        key = (index, exp)
        if key not in powers:
            powers[key] = images[index] ** exp
        return powers[key]

    result = target.zero()
    for monomial, coefficient in poly.items():
        value = product((_power(index, exp) for index, exp in monomial), target)
        result += value.scale(coefficient)

    return result


def sum_polynomials(polynomials, algebra):
    """Sum of the polynomials, zero for the empty sequence"""
    terms = dict()
    for poly in polynomials:
        # pylint: disable=protected-access
        for monomial, coefficient in iteritems(poly._terms):
            terms[monomial] = terms.get(monomial, 0) + coefficient
    return Polynomial(algebra, terms)


def coordinates(poly, basis):
    """
    Coordinates of the homogeneous polynomial in the monomial basis.
    Monomials outside of the basis are ignored.
    """
    return [poly.coefficient(monomial) for monomial in basis]


def from_coordinates(algebra, vector, basis):
    """The polynomial with given coordinates in the monomial basis"""
    return Polynomial(algebra, dict(
        (monomial, value) for monomial, value in zip(basis, vector) if value))


def apply_derivation(poly, generator_value, parity, images=None, target=None, cache=None):
    """
    Extend a map given on generators to the whole algebra by the graded Leibniz rule

        θ(ab) = θ(a)φ(b) + (-1)^(parity * |a|) φ(a)θ(b)

    :param generator_value: callable index --> value on that generator
    (polynomial in the `target` algebra)
    :param parity: the degree of the map modulo 2
    :param images: the images of generators under φ (identity if None)
    :param target: the algebra where the values live (the source algebra if None)
    :param cache: optional `Cache` to memoize the values on monomials
    """
    source = poly.algebra
    if target is None:
        target = source

    if images is None:
        images = [target.monomial(((index, 1),)) for index in range(len(source))]

    def _on_monomial(monomial):
        factors = [index for index, exp in monomial for _ in range(exp)]

        result = target.zero()
        prefix_degree = 0
        for pos, index in enumerate(factors):
            value = generator_value(index)
            if value:
                left = product((images[i] for i in factors[:pos]), target)
                right = product((images[i] for i in factors[pos + 1:]), target)
                term = multiply(multiply(left, value), right)
                if parity * prefix_degree % 2:
                    term = -term
                result += term

            prefix_degree += source.degrees[index]

        return result

    pairs = []
    for monomial, coefficient in poly.items():
        if cache is None:
            value = _on_monomial(monomial)
        else:
            value = cache.get_or_compute(monomial, _on_monomial)

        pairs.append(value.scale(coefficient))

    return sum_polynomials(pairs, target)
