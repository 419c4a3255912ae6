# -*- coding: utf-8 -*-
"""
Sullivan algebras, relative Sullivan models of fibrations
and the morphisms between them.

The relative model (∧V, d) --> (∧V ⊗ ∧W, D) keeps all of its
polynomials in the total algebra ∧(V ⊕ W) where the generators
of V go first. So the base algebra is a prefix of the total one
and the base polynomials can be embedded without reindexing.
"""

from __future__ import unicode_literals, print_function

from collections import OrderedDict

from six import (
    iteritems,
    string_types,
    python_2_unicode_compatible,
)

from pysullivan.core.algebra import (
    GradedAlgebra,
    Polynomial,
    apply_derivation,
    substitute,
)
from pysullivan.core.common import (
    ModelValidationError,
    ParseError,
)
from pysullivan.utils.cache import Cache
from pysullivan.utils.iter import expand_generator
from pysullivan.utils.linalg import (
    ONE,
    independent_subset,
    kernel,
    zero_vector,
)
from pysullivan.utils.other import get_named_logger

LOG = get_named_logger(__name__, __file__)


def _values_by_index(algebra, values):
    """
    Convert the mapping (generator name or index) --> polynomial
    to the tuple indexed by generator index (missing are zeros)
    """
    result = [algebra.zero() for _ in algebra.generators]
    for key, poly in iteritems(values or {}):
        if isinstance(key, string_types):
            index = algebra.generator(key).index
        else:
            index = key

        if not isinstance(poly, Polynomial):
            raise ParseError('The differential of {!r} is not a polynomial: {!r}'.format(
                key, poly))

        result[index] = poly.embed(algebra)
    return tuple(result)


@python_2_unicode_compatible
class SullivanAlgebra(object):
    """
    Free graded-commutative algebra with
    a differential of degree +1 given on generators
    """

    def __init__(self, algebra, differential=None):
        if not isinstance(algebra, GradedAlgebra):
            algebra = GradedAlgebra(algebra)

        self.algebra = algebra
        self.values = _values_by_index(algebra, differential)
        self._cache = Cache()

    def differential_of(self, name):
        """The value of the differential on the generator"""
        return self.values[self.algebra.generator(name).index]

    def d(self, poly):
        """Apply the differential to an arbitrary polynomial"""
        poly = poly.embed(self.algebra)
        return apply_derivation(poly, self.values.__getitem__, 1, cache=self._cache)

    __call__ = d

    def items(self):
        """Pairs (generator, differential value)"""
        return list(zip(self.algebra.generators, self.values))

    @property
    def is_minimal(self):
        """The differential has no linear part"""
        return not any(value.linear_part() for value in self.values)

    def __str__(self):
        parts = ['d({}) = {}'.format(gen.name, value)
                 for gen, value in self.items() if value]
        return '({}, {})'.format(self.algebra, '; '.join(parts) or 'd = 0')


@python_2_unicode_compatible
class ValidationReport(object):
    """
    The list of named checks with results
    and the human readable details of failures
    """

    # the model is not a relative Sullivan model at all if these fail
    STRUCTURAL = ('degree', 'square_zero', 'triangularity', 'chain_map', 'base_compatibility')

    def __init__(self, subject=None):
        self.subject = subject
        self.checks = OrderedDict()

    def add(self, name, failures=()):
        """Record the check result. The check passes when no failures given."""
        self.checks[name] = list(failures)

    def passed(self, name):
        """Whether the check has passed (the missing check counts as passed)"""
        return not self.checks.get(name)

    @property
    def failed_checks(self):
        """Names of the failed checks"""
        return [name for name, failures in iteritems(self.checks) if failures]

    @property
    def is_valid(self):
        """All the structural checks are passed"""
        return all(self.passed(name) for name in self.STRUCTURAL)

    @property
    def ok(self):
        """All the checks are passed"""
        return not self.failed_checks

    def to_dict(self):
        """Structured form of the report"""
        return OrderedDict([
            ('subject', self.subject),
            ('ok', self.ok),
            ('checks', OrderedDict(
                (name, OrderedDict([('passed', not failures), ('failures', failures)]))
                for name, failures in iteritems(self.checks))),
        ])

    def __str__(self):
        lines = []
        if self.subject:
            lines.append(self.subject)
        for name, failures in iteritems(self.checks):
            lines.append('  {:<20} {}'.format(name, 'FAIL' if failures else 'ok'))
            for failure in failures:
                lines.append('      {}'.format(failure))
        return '\n'.join(lines)


@python_2_unicode_compatible
class RelativeModel(object):
    """
    The relative Sullivan model of a fibration: (∧V, d) --> (∧V ⊗ ∧W, D)
    """

    def __init__(self, base, fibre_generators, fibre_differential=None, name=None):
        """
        :param base: SullivanAlgebra on the generators V
        :param fibre_generators: the list of (name, degree) for W
        :param fibre_differential: mapping W-generator --> polynomial over ∧(V ⊕ W)
        """
        if not isinstance(base, SullivanAlgebra):
            base = SullivanAlgebra(base)

        self.base = base
        self.name = name
        total = base.algebra.extend(fibre_generators)

        values = OrderedDict(
            (gen.index, value) for gen, value in base.items() if value)

        for key, value in iteritems(fibre_differential or {}):
            if isinstance(key, string_types):
                index = total.generator(key).index
            else:
                index = key

            if index < self.base_size:
                raise ParseError(
                    'The differential of base generator {!r} is defined by the base'.format(
                        total.generators[index].name))
            values[index] = value

        self.total_algebra = SullivanAlgebra(total, values)

    @property
    def total(self):
        """The total algebra ∧(V ⊕ W)"""
        return self.total_algebra.algebra

    @property
    def base_size(self):
        """The number of base generators"""
        return len(self.base.algebra)

    @property
    def base_generators(self):
        """Generators of V (in the total algebra)"""
        return self.total.generators[:self.base_size]

    @property
    def fibre_generators(self):
        """Generators of W (in the total algebra)"""
        return self.total.generators[self.base_size:]

    def is_base_index(self, index):
        """Whether the generator belongs to V"""
        return index < self.base_size

    def D(self, poly):  # pylint: disable=invalid-name
        """The total differential"""
        return self.total_algebra.d(poly)

    def differential_of(self, name):
        """The value of D on the generator"""
        return self.total_algebra.differential_of(name)

    @property
    def values(self):
        """The values of D on all the generators (indexed as the total algebra)"""
        return self.total_algebra.values

    def fibre_degrees(self):
        """Sorted distinct degrees of W"""
        return sorted(set(gen.degree for gen in self.fibre_generators))

    @property
    def max_degree(self):
        """The maximal degree of all generators"""
        return self.total.max_degree

    def __str__(self):
        parts = ['D({}) = {}'.format(gen.name, value)
                 for gen, value in self.total_algebra.items() if value]
        return '{}: {} --> {} ({})'.format(
            self.name or 'model', self.base.algebra, self.total, '; '.join(parts) or 'D = 0')


def _check_generators(sullivan_algebra, base_size=0):
    """Run the generic checks for the differential given on generators"""
    algebra = sullivan_algebra.algebra

    degree_failures = []
    square_failures = []
    order_failures = []
    minimality_failures = []
    relative_failures = []

    for gen, value in sullivan_algebra.items():
        if value and value.degree != gen.degree + 1:
            degree_failures.append('deg D({}) = {} != {}'.format(
                gen.name, ','.join(map(str, value.degrees())), gen.degree + 1))

        square = sullivan_algebra.d(value)
        if square:
            square_failures.append('D(D({})) = {}'.format(gen.name, square))

        later = sorted(index for index in value.generators_used() if index >= gen.index)
        if later:
            order_failures.append('D({}) depends on {}'.format(
                gen.name, ', '.join(algebra.generators[index].name for index in later)))

        linear = value.linear_part()
        if linear:
            linear_names = [algebra.generators[index].name for index in sorted(linear)]
            if gen.index < base_size:
                minimality_failures.append('d({}) has linear part in {}'.format(
                    gen.name, ', '.join(linear_names)))
            else:
                bad = [algebra.generators[index].name for index in sorted(linear)
                       if index >= base_size]
                if bad:
                    relative_failures.append('D({}) has linear part in W: {}'.format(
                        gen.name, ', '.join(bad)))

    return (degree_failures, square_failures, order_failures,
            minimality_failures, relative_failures)


def validate_sullivan_algebra(sullivan_algebra):
    """Check the conditions for (∧V, d) to be a (minimal) Sullivan algebra"""
    report = ValidationReport('Sullivan algebra {}'.format(sullivan_algebra.algebra))
    degree, square, order, minimality, _ = _check_generators(sullivan_algebra)
    report.add('degree', degree)
    report.add('square_zero', square)
    report.add('triangularity', order)
    report.add('base_minimality', minimality)
    return report


def validate_relative_model(model):
    """
    Check that D raises degree by 1, D∘D = 0, the declaration order
    witnesses the triangularity and the model is (relatively) minimal.
    """
    report = ValidationReport('Relative model {}'.format(model.name or model.total))
    degree, square, order, minimality, relative = _check_generators(
        model.total_algebra, base_size=model.base_size)

    report.add('degree', degree)
    report.add('square_zero', square)
    report.add('triangularity', order)
    report.add('relative_minimality', relative)
    report.add('base_minimality', minimality)

    LOG.info('Validation of %s: %s', model.name or 'model',
             'ok' if report.ok else 'failed: {}'.format(', '.join(report.failed_checks)))
    return report


def ensure_valid(model, minimal=True):
    """
    Validate the model and raise an error if it cannot be used.
    When the `minimal` is False, the minimality failures only produce warnings.
    """
    report = validate_relative_model(model)
    if not report.is_valid:
        raise ModelValidationError(
            'The model is not valid: {}'.format(', '.join(report.failed_checks)), report)

    if not report.ok:
        if minimal:
            raise ModelValidationError(
                'The model is not minimal: {}'.format(', '.join(report.failed_checks)), report)

        LOG.warning('The model is not minimal (%s)', ', '.join(report.failed_checks))

    return report


class WSplit(object):
    """
    Decomposition W = W0 ⊕ W1 where W0 = ker(D0)
    and D0: W --> V is the linear part of D.

    The vectors are the coordinates over the generators
    of W of the given degree (see `generators`).
    """

    def __init__(self, model):
        self.model = model
        self.generators = OrderedDict()
        self.d0 = OrderedDict()
        self.w0 = OrderedDict()
        self.w1 = OrderedDict()

        for degree in model.fibre_degrees():
            self._split_degree(degree)

    def _split_degree(self, degree):
        model = self.model
        fibre = [gen for gen in model.fibre_generators if gen.degree == degree]
        base = [gen for gen in model.base_generators if gen.degree == degree + 1]

        linear_parts = [model.values[gen.index].linear_part() for gen in fibre]
        # rows are indexed by V^{n+1}, columns by W^n
        matrix = [[linear.get(v_gen.index, 0) for linear in linear_parts] for v_gen in base]

        w0_basis = kernel(matrix, len(fibre))

        units = [self._unit(i, len(fibre)) for i in range(len(fibre))]
        chosen = independent_subset(w0_basis, units, len(fibre))

        self.generators[degree] = fibre
        self.d0[degree] = matrix
        self.w0[degree] = w0_basis
        self.w1[degree] = [fibre[i] for i in chosen]

        LOG.debug('Degree %d: dim W = %d, dim W0 = %d, dim W1 = %d',
                  degree, len(fibre), len(w0_basis), len(chosen))

    @classmethod
    def _unit(cls, index, size):
        vector = zero_vector(size)
        vector[index] = ONE
        return vector

    def rank(self, degree):
        """The rank of D0 on W^n"""
        return len(self.generators.get(degree, ())) - len(self.w0.get(degree, ()))

    @expand_generator
    def w0_elements(self):
        """The basis of W0 as linear polynomials"""
        algebra = self.model.total
        for degree, vectors in iteritems(self.w0):
            gens = self.generators[degree]
            for vector in vectors:
                yield Polynomial(algebra, dict(
                    (((gen.index, 1),), value) for gen, value in zip(gens, vector) if value))

    @expand_generator
    def w1_elements(self):
        """The basis of W1 (always consists of generators)"""
        algebra = self.model.total
        for gens in self.w1.values():
            for gen in gens:
                yield algebra.gen(gen.name)

    def to_dict(self):
        """Structured form of the split"""
        return OrderedDict([
            ('W0', [str(poly) for poly in self.w0_elements()]),
            ('W1', [str(poly) for poly in self.w1_elements()]),
            ('D0_rank', OrderedDict(
                (str(degree), self.rank(degree)) for degree in self.generators)),
        ])


def linear_part_split(model):
    """Compute the W = W0 ⊕ W1 split of the (relatively minimal) model"""
    return WSplit(model)


@python_2_unicode_compatible
class DGMorphism(object):
    """
    The map of relative models given by the values on all the generators
    of the source total algebra (as polynomials in the target total algebra).
    """

    def __init__(self, source, target, values=None):
        self.source = source
        self.target = target

        values = dict(values or {})
        images = []
        for gen in source.total.generators:
            image = values.pop(gen.name, None)
            if image is None:
                if source.total != target.total:
                    raise ParseError(
                        'The morphism should define the image of {!r}'.format(gen.name))
                image = target.total.gen(gen.name)

            if not isinstance(image, Polynomial):
                raise ParseError('The image of {!r} is not a polynomial: {!r}'.format(
                    gen.name, image))

            images.append(image.embed(target.total))

        if values:
            raise ParseError('Unknown source generators: {}'.format(', '.join(sorted(values))))

        self.images = tuple(images)

    @classmethod
    def identity(cls, model):
        """The identity map of the model"""
        return cls(model, model)

    @property
    def is_endomorphism(self):
        """The source and the target have the same total algebra"""
        return self.source.total == self.target.total

    def __call__(self, poly):
        return substitute(poly.embed(self.source.total), self.images, self.target.total)

    def image_of(self, name):
        """The image of the generator"""
        return self.images[self.source.total.generator(name).index]

    def compose(self, other):
        """The morphism self ∘ other"""
        return DGMorphism(other.source, self.target, OrderedDict(
            (gen.name, self(image))
            for gen, image in zip(other.source.total.generators, other.images)))

    def __eq__(self, other):
        if not isinstance(other, DGMorphism):
            return False
        return self.images == other.images

    def __ne__(self, other):
        return not self == other

    def __hash__(self):
        return hash(self.images)

    def to_dict(self):
        """Mapping generator name --> image (in text form)"""
        generators = self.source.total.generators
        return OrderedDict(
            (gen.name, str(image)) for gen, image in zip(generators, self.images))

    def __str__(self):
        return ', '.join(
            '{} -> {}'.format(name, image) for name, image in iteritems(self.to_dict()))


def validate_morphism(morphism):
    """Check degrees, chain map identity and base compatibility"""
    report = ValidationReport('Morphism {} --> {}'.format(
        morphism.source.name or morphism.source.total,
        morphism.target.name or morphism.target.total))

    source, target = morphism.source, morphism.target

    degree_failures = []
    chain_failures = []
    base_failures = []
    for gen, image in zip(source.total.generators, morphism.images):
        if image and image.degree != gen.degree:
            degree_failures.append('deg A({}) = {} != {}'.format(
                gen.name, ','.join(map(str, image.degrees())), gen.degree))

        diff = morphism(source.values[gen.index]) - target.D(image)
        if diff:
            chain_failures.append('A(D({0})) - D(A({0})) = {1}'.format(gen.name, diff))

        if source.is_base_index(gen.index):
            outside = sorted(
                index for index in image.generators_used() if not target.is_base_index(index))
            if outside:
                base_failures.append('A({}) depends on fibre generators {}'.format(
                    gen.name, ', '.join(target.total.generators[i].name for i in outside)))

    report.add('degree', degree_failures)
    report.add('chain_map', chain_failures)
    report.add('base_compatibility', base_failures)

    if not report.ok:
        LOG.info('Morphism validation failed: %s', ', '.join(report.failed_checks))
    return report


def fibre_model(model):
    """
    The Sullivan algebra (∧W, D̄) of the fibre
    obtained by killing the base generators
    """
    fibre = GradedAlgebra((gen.name, gen.degree) for gen in model.fibre_generators)

    images = [fibre.zero()] * model.base_size + [
        fibre.gen(gen.name) for gen in model.fibre_generators]

    values = OrderedDict(
        (gen.name, substitute(model.values[gen.index], images, fibre))
        for gen in model.fibre_generators)

    return SullivanAlgebra(fibre, values)


def is_fibre_minimal(model):
    """Whether the induced differential on ∧W has no linear part"""
    return fibre_model(model).is_minimal
