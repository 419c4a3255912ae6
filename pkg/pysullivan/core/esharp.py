# -*- coding: utf-8 -*-
"""
The rationalized group of ♯-self-equivalences of a fibration
as the space H_0(Der_♯) = coker(𝒟: Der^1 --> Der^0_♯)
with the group law given by the Baker-Campbell-Hausdorff product.

The degree 0 derivation θ is a ♯-derivation when it is a cycle and
its linear part respects the split W = W0 ⊕ W1 (see `WSplit`):
the W-component of the linear part kills W0 and takes W into W0.
"""

from __future__ import unicode_literals, print_function, division

from collections import OrderedDict
from fractions import Fraction

from six import (
    iteritems,
    python_2_unicode_compatible,
)
from six.moves import range

from pysullivan.core.algebra import word_length
from pysullivan.core.common import (
    AlgebraMismatchError,
    NilpotencyError,
    PreconditionError,
)
from pysullivan.core.derivations import (
    Derivation,
    apply,
    bracket,
    differential,
)
from pysullivan.core.homology import (
    BracketConstant,
    DerivationComplex,
)
from pysullivan.core.sullivan import (
    DGMorphism,
    ensure_valid,
    linear_part_split,
    validate_morphism,
)
from pysullivan.utils.linalg import (
    Quotient,
    intersection,
    is_zero_vector,
    kernel,
    span_basis,
)
from pysullivan.utils.other import get_named_logger

LOG = get_named_logger(__name__, __file__)

# the highest order of the truncated BCH series
BCH_SERIES_ORDER = 3


@python_2_unicode_compatible
class ESharpElement(object):
    """
    The class of a ♯-derivation modulo the boundaries
    given by its coordinates in the fixed basis of the group
    """

    def __init__(self, group, coordinates):
        self.group = group
        self.coordinates = tuple(Fraction(value) for value in coordinates)

        if len(self.coordinates) != group.dimension:
            raise PreconditionError('Expected {} coordinates, got {}'.format(
                group.dimension, len(self.coordinates)))

    @property
    def representative(self):
        """The canonical ♯-derivation representing the class"""
        return self.group.lift(self.coordinates)

    @property
    def is_identity(self):
        """The neutral element of the group"""
        return not any(self.coordinates)

    def _check_group(self, other):
        if not isinstance(other, ESharpElement) or other.group is not self.group:
            raise AlgebraMismatchError('The elements belong to different groups')

    def __mul__(self, other):
        self._check_group(other)
        return bch_product(self, other)

    def __invert__(self):
        return inverse(self)

    def __eq__(self, other):
        if not isinstance(other, ESharpElement):
            return False
        return other.group is self.group and other.coordinates == self.coordinates

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.coordinates)

    def to_list(self):
        """The coordinates as exact rational strings"""
        return [str(value) for value in self.coordinates]

    def __str__(self):
        return '({})'.format(', '.join(self.to_list()))

    def __repr__(self):
        return 'ESharpElement{}'.format(self)


class SharpAutomorphism(DGMorphism):
    """
    The automorphism of ∧V ⊗ ∧W which is the identity on ∧V
    and whose linear part φ0 satisfies (φ0 - 1)(W0) ⊂ V, (φ0 - 1)(W1) ⊂ V ⊕ W0
    """

    def __init__(self, model, values):
        super(SharpAutomorphism, self).__init__(model, model, values)


class ESharpGroup(object):
    """
    H_0(Der_♯): the ♯-cycles of degree 0 modulo the boundaries of Der^1
    """

    def __init__(self, model):
        ensure_valid(model)

        self.model = model
        self.split = linear_part_split(model)
        self.complex = DerivationComplex(model, name='Der_#')
        self.space = self.complex.space(0)

        self.sharp_rows = self._sharp_rows()
        constraints = [list(row) for row in self.complex.matrix(0)] + self.sharp_rows
        self.sharp_cycles = kernel(
            [row for row in constraints if not is_zero_vector(row)], self.space.dimension)
        boundaries = span_basis(self.complex.boundaries(0), self.space.dimension)
        sharp_boundaries = intersection(boundaries, self.sharp_cycles, self.space.dimension)

        if len(sharp_boundaries) < len(boundaries):
            LOG.warning('%d of %d boundaries are not ♯-derivations',
                        len(boundaries) - len(sharp_boundaries), len(boundaries))

        self.boundaries = sharp_boundaries
        self.quotient = Quotient(self.sharp_cycles, sharp_boundaries, self.space.dimension)

        LOG.info('H_0(Der_#) of %s: dimension %d (♯-cycles %d, boundaries %d)',
                 model.name or 'model', self.dimension,
                 len(self.sharp_cycles), len(sharp_boundaries))

    def _linear_positions(self):
        """Mapping (fibre generator index, linear W generator index) --> position in Der^0"""
        positions = dict()
        for position, (gen, monomial) in enumerate(self.space.basis):
            if len(monomial) == 1 and monomial[0][1] == 1:
                index = monomial[0][0]
                if not self.model.is_base_index(index):
                    positions[(gen.index, index)] = position
        return positions

    def _sharp_rows(self):
        """
        The rows of linear functionals on Der^0 expressing
        L_W(W0) = 0 and D0∘L_W = 0 for the W-component L_W of the linear part
        """
        size = self.space.dimension
        rows = []
        positions = self._linear_positions()

        split = self.split
        for degree, gens in iteritems(split.generators):
            # L_W vanishes on every vector of W0
            for vector in split.w0[degree]:
                for target in gens:
                    row = [Fraction(0)] * size
                    for coefficient, source in zip(vector, gens):
                        if coefficient:
                            row[positions[(source.index, target.index)]] += coefficient
                    rows.append(row)

            # the image of L_W lies in W0 = ker D0
            for d0_row in split.d0[degree]:
                for source in gens:
                    row = [Fraction(0)] * size
                    for coefficient, target in zip(d0_row, gens):
                        if coefficient:
                            row[positions[(source.index, target.index)]] += coefficient
                    rows.append(row)

        return [row for row in rows if not is_zero_vector(row)]

    @property
    def dimension(self):
        """The dimension of H_0(Der_♯)"""
        return self.quotient.dimension

    def identity(self):
        """The neutral element"""
        return ESharpElement(self, [0] * self.dimension)

    def basis(self):
        """The elements with unit coordinates"""
        return [ESharpElement(self, [1 if i == j else 0 for j in range(self.dimension)])
                for i in range(self.dimension)]

    def lift(self, coordinates):
        """The canonical representative for the class coordinates"""
        return self.space.from_coordinates(self.quotient.lift(coordinates))

    def is_sharp(self, theta):
        """Whether the degree 0 derivation is a ♯-cycle"""
        if theta.degree != 0 and theta:
            return False

        vector = self.space.coordinates(theta)
        return self.quotient.coordinates(vector) is not None

    def require_sharp(self, theta):
        """Raise the precondition error if the derivation is not a ♯-cycle"""
        if theta.is_phi_derivation or theta.model.total != self.model.total:
            raise PreconditionError('The derivation {} is not over the model'.format(theta))

        if theta.degree != 0 and theta:
            raise PreconditionError('The ♯-derivation should have degree 0: {}'.format(theta))

        if differential(theta):
            raise PreconditionError('The derivation {} is not a cycle'.format(theta))

        if not self.is_sharp(theta):
            raise PreconditionError(
                'The linear part of {} does not respect W0 ⊕ W1'.format(theta))

    def class_of(self, theta):
        """The group element represented by the ♯-derivation"""
        self.require_sharp(theta)
        coordinates = self.quotient.coordinates(self.space.coordinates(theta))
        if coordinates is None:
            raise PreconditionError(
                'The derivation {} is not a ♯-cycle'.format(theta))
        return ESharpElement(self, coordinates)

    def degree_cap(self, degree):
        """
        The number of iterations after which every nilpotent operator
        on the component of given degree vanishes
        """
        return self.model.total.dimension(degree) + 1

    def to_dict(self):
        """Structured form"""
        return OrderedDict([
            ('dimension', self.dimension),
            ('split', self.split.to_dict()),
            ('basis', [self.lift(element.coordinates).to_dict() for element in self.basis()]),
        ])


def h0_sharp(model):
    """Build the group H_0(Der_♯) of the relatively minimal model"""
    return ESharpGroup(model)


def _exponent_series(theta, generator, cap):
    """Σ θ^k(g) / k!"""
    result = generator
    term = generator
    for k in range(1, cap + 1):
        term = apply(theta, term).scale(Fraction(1, k))
        if not term:
            return result
        result += term

    raise NilpotencyError('The exponent of {} does not terminate on {}'.format(theta, generator))


def exp_automorphism(group, theta):
    """
    The automorphism e^θ = Σ θ^k / k! of the ♯-derivation
    (the identity on ∧V)
    """
    group.require_sharp(theta)

    model = group.model
    values = OrderedDict()
    for gen in model.total.generators:
        generator = model.total.gen(gen.name)
        if model.is_base_index(gen.index):
            values[gen.name] = generator
        else:
            values[gen.name] = _exponent_series(
                theta, generator, group.degree_cap(gen.degree))

    return SharpAutomorphism(model, values)


def _linear_fibre_part(model, poly):
    return poly.filter(
        lambda monomial: word_length(monomial) == 1 and not model.is_base_index(monomial[0][0]))


def _check_automorphism(group, morphism):
    model = group.model
    if morphism.source.total != model.total or morphism.target.total != model.total:
        raise PreconditionError('The automorphism should act on the model itself')

    report = validate_morphism(morphism)
    if not report.ok:
        raise PreconditionError('The map is not a DG morphism: {}'.format(
            ', '.join(report.failed_checks)))

    for gen, image in zip(model.base_generators, morphism.images[:model.base_size]):
        if image != model.total.gen(gen.name):
            raise PreconditionError(
                'The automorphism should be the identity on the base: {} -> {}'.format(
                    gen.name, image))

    # (φ0 - 1) should satisfy the same linear conditions as the ♯-derivations
    shift = Derivation(model, 0, OrderedDict(
        (gen.index, _linear_fibre_part(model, image - model.total.gen(gen.name)))
        for gen, image in zip(model.fibre_generators, morphism.images[model.base_size:])))

    vector = group.space.coordinates(shift)
    for row in group.sharp_rows:
        if sum(a * b for a, b in zip(row, vector)):
            raise PreconditionError(
                'The linear part of the automorphism does not respect W0 ⊕ W1')


def _logarithm_series(morphism, generator, cap):
    """Σ (-1)^(k+1) (φ - 1)^k(g) / k"""
    result = generator.algebra.zero()
    term = generator
    for k in range(1, cap + 1):
        term = morphism(term) - term
        if not term:
            return result
        sign = 1 if k % 2 else -1
        result += term.scale(Fraction(sign, k))

    raise NilpotencyError('The logarithm does not terminate on {}'.format(generator))


def log_automorphism(group, morphism):
    """
    The ♯-derivation log(φ) = Σ (-1)^(k+1) (φ - 1)^k / k
    of the ♯-automorphism
    """
    _check_automorphism(group, morphism)

    model = group.model
    values = OrderedDict()
    for gen in model.fibre_generators:
        values[gen.index] = _logarithm_series(
            morphism, model.total.gen(gen.name), group.degree_cap(gen.degree))

    theta = Derivation(model, 0, values)
    group.require_sharp(theta)
    return theta


def bch_product(first, second):
    """
    The group law: the class of log(e^θ ∘ e^φ)
    computed on the canonical representatives
    """
    group = first.group
    if second.group is not group:
        raise AlgebraMismatchError('The elements belong to different groups')

    if first.is_identity:
        return second
    if second.is_identity:
        return first

    composition = exp_automorphism(group, first.representative).compose(
        exp_automorphism(group, second.representative))
    return group.class_of(log_automorphism(group, composition))


def inverse(element):
    """The class of -θ: e^(-θ) is the inverse of e^θ"""
    return ESharpElement(element.group, [-value for value in element.coordinates])


def commutator(first, second):
    """a * b * a^-1 * b^-1"""
    return bch_product(bch_product(first, second), bch_product(inverse(first), inverse(second)))


def bch_series(theta, phi, order=BCH_SERIES_ORDER):
    """
    The truncated Baker-Campbell-Hausdorff sum
    θ + φ + 1/2[θ,φ] + 1/12([θ,[θ,φ]] + [φ,[φ,θ]])
    """
    if not 1 <= order <= BCH_SERIES_ORDER:
        raise PreconditionError('The order should be between 1 and {}: {}'.format(
            BCH_SERIES_ORDER, order))

    result = theta + phi
    if order >= 2:
        first = bracket(theta, phi)
        result += first.scale(Fraction(1, 2))

        if order >= 3:
            result += (bracket(theta, first) + bracket(phi, bracket(phi, theta))).scale(
                Fraction(1, 12))

    return result


def induced_lie_bracket(group):
    """The constants of the commutator bracket on the basis of H_0(Der_♯)"""
    basis = group.basis()
    constants = []
    for i, first in enumerate(basis):
        for j, second in enumerate(basis):
            result = group.class_of(bracket(first.representative, second.representative))
            for k, value in enumerate(result.coordinates):
                if value:
                    constants.append(BracketConstant(i, j, k, value))
    return constants


def _nilpotency_class(group, combine):
    """
    Iterate the spans C_1 = everything, C_{k+1} = <combine(e_i, c) | c ∈ C_k>
    and return the first k such that C_{k+1} = 0
    """
    size = group.dimension
    if not size:
        return 0

    basis = group.basis()
    current = [list(element.coordinates) for element in basis]
    for length in range(1, size + 2):
        produced = []
        for element in basis:
            for coordinates in current:
                produced.append(list(combine(element, ESharpElement(group, coordinates))))

        current = span_basis(produced, size)
        if not current:
            return length

    raise NilpotencyError('The lower central series does not terminate')


def group_profile(group):
    """
    The dimension, BCH multiplication table on the basis,
    nilpotency class and flags of the group
    """
    basis = group.basis()
    table = [[(first * second).to_list() for second in basis] for first in basis]

    group_class = _nilpotency_class(
        group, lambda a, b: commutator(a, b).coordinates)

    def _lie(first, second):
        return group.class_of(bracket(first.representative, second.representative)).coordinates

    lie_class = _nilpotency_class(group, _lie)

    if group_class != lie_class:
        LOG.warning('Group nilpotency class %d differs from the Lie algebra class %d',
                    group_class, lie_class)

    return OrderedDict([
        ('dimension', group.dimension),
        ('basis', [group.lift(element.coordinates).to_dict() for element in basis]),
        ('multiplication', table),
        ('lie_bracket', [[const.i, const.j, const.k, str(const.value)]
                         for const in induced_lie_bracket(group)]),
        ('nilpotency_class', group_class),
        ('lie_nilpotency_class', lie_class),
        ('infinite_order', group.dimension >= 1),
        ('abelian', group_class <= 1),
    ])
