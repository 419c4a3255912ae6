# -*- coding: utf-8 -*-
"""
Derivations of a relative model that vanish on the base: Der_{∧V}(∧V ⊗ ∧W).

The derivation θ of degree n lowers degrees by n and is determined
by its values on the generators of W. It is extended to the whole
algebra by the graded Leibniz rule

    θ(ab) = θ(a)φ(b) + (-1)^(n|a|) φ(a)θ(b)

where φ is the identity for the ordinary derivations and the morphism
A_f: ∧V ⊗ ∧W --> ∧V' ⊗ ∧W' for the φ-derivations
(those take values in the target of the morphism).
The same sign is used for both kinds.
"""

from __future__ import unicode_literals, print_function

from collections import OrderedDict
from fractions import Fraction
from numbers import Rational

from six import (
    integer_types,
    iteritems,
    string_types,
    python_2_unicode_compatible,
)

from pysullivan.core.algebra import (
    Polynomial,
    apply_derivation,
    from_coordinates,
)
from pysullivan.core.common import (
    AlgebraMismatchError,
    PreconditionError,
    UnsupportedOperationError,
)
from pysullivan.utils.cache import Cache
from pysullivan.utils.other import get_named_logger

LOG = get_named_logger(__name__, __file__)


def _koszul(*degrees):
    """(-1)^(product of degrees)"""
    result = 1
    for degree in degrees:
        result *= degree
    return -1 if result % 2 else 1


@python_2_unicode_compatible
class Derivation(object):
    """
    The derivation θ of degree n (lowering degrees by n)
    that vanishes on the base subalgebra ∧V.
    """

    def __init__(self, model, degree, values=None, morphism=None):
        """
        :param model: the source relative model
        :param degree: how much the derivation lowers degrees
        :param values: mapping fibre generator (name or index) --> polynomial
        :param morphism: DGMorphism for the φ-derivations
        """
        self.model = model
        self.degree = degree
        self.morphism = morphism

        target_algebra = self.target.total
        fibre = model.fibre_generators
        own = [target_algebra.zero() for _ in fibre]

        for key, value in iteritems(values or {}):
            if isinstance(key, string_types):
                gen = model.total.generator(key)
            else:
                gen = model.total.generators[key]

            if model.is_base_index(gen.index):
                raise PreconditionError(
                    'The derivation should vanish on the base generator {!r}'.format(gen.name))

            if not isinstance(value, Polynomial):
                raise PreconditionError('The value on {!r} is not a polynomial: {!r}'.format(
                    gen.name, value))

            value = value.embed(target_algebra)
            if value and value.degree != gen.degree - degree:
                raise PreconditionError(
                    'The value on {!r} should have degree {}: {}'.format(
                        gen.name, gen.degree - degree, value))

            own[gen.index - model.base_size] = value

        self.values = tuple(own)
        self._cache = Cache()

    @property
    def target(self):
        """The model where the values live"""
        if self.morphism is None:
            return self.model
        return self.morphism.target

    @property
    def is_phi_derivation(self):
        """Whether the derivation is taken along a morphism"""
        return self.morphism is not None

    def value_at(self, index):
        """The value on the generator with given index of the total algebra"""
        if self.model.is_base_index(index):
            return self.target.total.zero()
        return self.values[index - self.model.base_size]

    def value(self, name):
        """The value on the named generator"""
        return self.value_at(self.model.total.generator(name).index)

    def items(self):
        """Pairs (fibre generator, value)"""
        return list(zip(self.model.fibre_generators, self.values))

    def __call__(self, poly):
        return apply(self, poly)

    def _same_space(self, other):
        if not isinstance(other, Derivation):
            raise TypeError('Cannot combine derivation with {!r}'.format(other))

        if (other.model is not self.model and other.model.total != self.model.total) or \
                other.degree != self.degree or \
                other.target.total != self.target.total:
            raise AlgebraMismatchError('Derivations live in different spaces')

    def _new(self, values):
        values = OrderedDict(
            (gen.index, value) for gen, value in zip(self.model.fibre_generators, values))
        return Derivation(self.model, self.degree, values, morphism=self.morphism)

    def __add__(self, other):
        self._same_space(other)
        return self._new([a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other):
        self._same_space(other)
        return self._new([a - b for a, b in zip(self.values, other.values)])

    def __neg__(self):
        return self.scale(-1)

    def scale(self, factor):
        """Multiply by the rational number"""
        factor = Fraction(factor)
        return self._new([value.scale(factor) for value in self.values])

    def __mul__(self, other):
        if isinstance(other, (Rational,) + integer_types):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __bool__(self):
        return any(self.values)

    __nonzero__ = __bool__

    def __eq__(self, other):
        if not isinstance(other, Derivation):
            return False

        if other.degree != self.degree and (self or other):
            return False

        return self.values == other.values

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash((self.degree, self.values))

    def to_dict(self):
        """The derivation text form: only nonzero values are listed"""
        return OrderedDict([
            ('degree', self.degree),
            ('values', OrderedDict(
                (gen.name, str(value)) for gen, value in self.items() if value)),
        ])

    def __str__(self):
        values = ['{} -> {}'.format(gen.name, value) for gen, value in self.items() if value]
        return '[{}] {}'.format(self.degree, ', '.join(values) or '0')

    def __repr__(self):
        return 'Derivation({})'.format(self)


def zero_derivation(model, degree, morphism=None):
    """The zero of Der^n"""
    return Derivation(model, degree, morphism=morphism)


def apply(theta, poly):  # pylint: disable=redefined-builtin
    """
    Apply the derivation to the polynomial of the source model
    extending it from the generators by the Leibniz rule.
    """
    if not poly.algebra.is_subalgebra_of(theta.model.total):
        raise AlgebraMismatchError('The polynomial {} does not belong to {}'.format(
            poly, theta.model.total))

    poly = poly.embed(theta.model.total)
    images = theta.morphism.images if theta.morphism is not None else None
    return apply_derivation(
        poly, theta.value_at, theta.degree % 2,
        images=images, target=theta.target.total,
        cache=theta._cache)  # pylint: disable=protected-access


def differential(theta):
    """
    The differential 𝒟(θ) = D∘θ - (-1)^n θ∘D
    as a derivation of degree n - 1
    """
    source, target = theta.model, theta.target
    sign = _koszul(theta.degree)

    values = OrderedDict()
    for gen, value in theta.items():
        result = target.D(value)
        image = apply(theta, source.values[gen.index])
        if sign > 0:
            result -= image
        else:
            result += image
        values[gen.index] = result

    return Derivation(source, theta.degree - 1, values, morphism=theta.morphism)


def _check_bracket(first, second):
    if first.is_phi_derivation or second.is_phi_derivation:
        raise UnsupportedOperationError(
            'The derivations along a morphism do not form a Lie algebra')

    if first.model is not second.model and first.model.total != second.model.total:
        raise AlgebraMismatchError('Derivations of different models')


def compose(first, second, poly):
    """The value first(second(poly))"""
    return apply(first, apply(second, poly))


def bracket(first, second):
    """
    The commutator [θ1, θ2] = θ1∘θ2 - (-1)^(n1*n2) θ2∘θ1
    of degree n1 + n2
    """
    _check_bracket(first, second)

    sign = _koszul(first.degree, second.degree)
    values = OrderedDict()
    for gen, _ in first.items():
        generator = first.model.total.gen(gen.name)
        result = compose(first, second, generator)
        back = compose(second, first, generator)
        values[gen.index] = result - back if sign > 0 else result + back

    return Derivation(first.model, first.degree + second.degree, values)


@python_2_unicode_compatible
class DerivationSpace(object):
    """
    The finite basis of Der^n consisting of elementary derivations:
    w --> monomial of degree |w| - n, zero on all the other generators.
    The order is the order of W, then the monomial order.

    The optional `restrict` predicate filters the allowed value monomials
    (it is used to build subcomplexes).
    """

    def __init__(self, model, degree, morphism=None, restrict=None, name=None):
        self.model = model
        self.degree = degree
        self.morphism = morphism
        self.name = name

        target = self.target.total
        basis = []
        for gen in model.fibre_generators:
            for monomial in target.monomial_basis(gen.degree - degree):
                if restrict is None or restrict(monomial):
                    basis.append((gen, monomial))

        self.basis = basis
        self._positions = dict(
            ((gen.index, monomial), i) for i, (gen, monomial) in enumerate(basis))

        self._monomials = OrderedDict()
        for gen in model.fibre_generators:
            self._monomials[gen.index] = [
                monomial for gen_, monomial in basis if gen_.index == gen.index]

    @property
    def target(self):
        """The model where the values live"""
        if self.morphism is None:
            return self.model
        return self.morphism.target

    @property
    def dimension(self):
        """The number of basis elements"""
        return len(self.basis)

    def __len__(self):
        return self.dimension

    def element(self, position):
        """The elementary derivation"""
        gen, monomial = self.basis[position]
        return Derivation(self.model, self.degree, {
            gen.index: self.target.total.monomial(monomial)}, morphism=self.morphism)

    def elements(self):
        """All the basis derivations"""
        return [self.element(i) for i in range(self.dimension)]

    def zero(self):
        """The zero element"""
        return zero_derivation(self.model, self.degree, morphism=self.morphism)

    def coordinates(self, theta):
        """
        The coordinates of the derivation in the basis.
        Raise an error if it does not lie in the space.
        """
        if theta.degree != self.degree and theta:
            raise AlgebraMismatchError('Expected degree {}, got {}'.format(
                self.degree, theta.degree))

        vector = [Fraction(0)] * self.dimension
        for gen, value in theta.items():
            for monomial, coefficient in value.items():
                try:
                    position = self._positions[(gen.index, monomial)]
                except KeyError:
                    raise PreconditionError(
                        'The derivation {} does not belong to the space {}'.format(theta, self))
                vector[position] = coefficient

        return vector

    def from_coordinates(self, vector):
        """The derivation with given coordinates"""
        algebra = self.target.total
        values = OrderedDict()
        start = 0
        for gen_index, monomials in iteritems(self._monomials):
            chunk = vector[start:start + len(monomials)]
            start += len(monomials)
            values[gen_index] = from_coordinates(algebra, chunk, monomials)

        return Derivation(self.model, self.degree, values, morphism=self.morphism)

    def __str__(self):
        return '{}^{} (dim {})'.format(self.name or 'Der', self.degree, self.dimension)


def derivation_space(model, degree, morphism=None, restrict=None):
    """
    The basis of Der^n_{∧V}(∧V ⊗ ∧W) (or of the φ-derivations
    along the morphism when it is given)
    """
    space = DerivationSpace(model, degree, morphism=morphism, restrict=restrict)
    LOG.debug('Derivation space of degree %d: dimension %d', degree, space.dimension)
    return space


def differential_matrix(source_space, target_space):
    """
    The matrix of 𝒟: source_space --> target_space.
    Rows are indexed by the target basis, columns by the source basis.
    """
    columns = [target_space.coordinates(differential(theta))
               for theta in source_space.elements()]

    return [[column[row] for column in columns] for row in range(target_space.dimension)]
