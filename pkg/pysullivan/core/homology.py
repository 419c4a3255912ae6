# -*- coding: utf-8 -*-
"""
Homology of the derivation complexes

    ... --> Der^{n+1} --𝒟--> Der^n --𝒟--> Der^{n-1} --> ...

computed exactly over the rationals, with representative cycles
and the bracket induced on homology by the commutator of derivations.
"""

from __future__ import unicode_literals, print_function

from collections import namedtuple, OrderedDict

from six import (
    iteritems, itervalues,
    python_2_unicode_compatible,
)
from six.moves import range

from pysullivan.core.algebra import coordinates
from pysullivan.core.common import (
    ModelValidationError,
    PreconditionError,
    UnsupportedOperationError,
)
from pysullivan.core.derivations import (
    bracket,
    derivation_space,
    differential_matrix,
)
from pysullivan.core.sullivan import (
    ensure_valid,
    validate_morphism,
)
from pysullivan.utils.cache import Cache
from pysullivan.utils.linalg import (
    Quotient,
    kernel,
    rank,
    transpose,
)
from pysullivan.utils.other import get_named_logger

LOG = get_named_logger(__name__, __file__)


class DegreeWindow(namedtuple('DegreeWindow', 'lo hi')):
    """The closed range of degrees [lo, hi] to compute the homology in"""
    __slots__ = ()

    def __new__(cls, lo, hi):
        if lo < 1:
            raise PreconditionError(
                'The window should start from degree 1 or above: {}'.format(lo))

        if hi < lo:
            raise PreconditionError('Empty window [{}, {}]'.format(lo, hi))

        return super(DegreeWindow, cls).__new__(cls, lo, hi)

    @classmethod
    def default(cls, model):
        """[1, 2 * max generator degree]"""
        return cls(1, max(1, 2 * model.max_degree))

    @classmethod
    def from_string(cls, value):
        """Parse the 'LO:HI' form"""
        try:
            lo, hi = value.split(':')
            return cls(int(lo), int(hi))
        except ValueError as ex:
            if isinstance(ex, PreconditionError):
                raise
            raise PreconditionError('Bad window {!r}: expected LO:HI'.format(value))

    def degrees(self):
        """All the degrees inside the window"""
        return list(range(self.lo, self.hi + 1))

    def __contains__(self, degree):
        return self.lo <= degree <= self.hi

    def __str__(self):
        return '{}:{}'.format(self.lo, self.hi)


def _contains_base_generator(model):
    base_size = model.base_size

    def _predicate(monomial):
        return any(index < base_size for index, _ in monomial)

    return _predicate


class DerivationComplex(object):
    """
    Lazily built derivation spaces and the matrices of 𝒟 between them
    """

    def __init__(self, model, morphism=None, restrict=None, name='Der'):
        self.model = model
        self.morphism = morphism
        self.restrict = restrict
        self.name = name

        self._spaces = Cache()
        self._matrices = Cache()
        self._quotients = Cache()

    def space(self, degree):
        """The basis of Der^n"""
        return self._spaces.get_or_compute(degree, self._make_space)

    def _make_space(self, degree):
        space = derivation_space(
            self.model, degree, morphism=self.morphism, restrict=self.restrict)
        space.name = self.name
        return space

    def matrix(self, degree):
        """The matrix of 𝒟: Der^n --> Der^{n-1}"""
        return self._matrices.get_or_compute(degree, self._make_matrix)

    def _make_matrix(self, degree):
        matrix = differential_matrix(self.space(degree), self.space(degree - 1))
        LOG.debug('%s: matrix of the differential from degree %d: %dx%d',
                  self.name, degree, len(matrix), self.space(degree).dimension)
        return matrix

    def cycles(self, degree):
        """The basis of the cycles in Der^n (as coordinate vectors)"""
        return kernel(self.matrix(degree), self.space(degree).dimension)

    def boundaries(self, degree):
        """The vectors spanning 𝒟(Der^{n+1}) in the coordinates of Der^n"""
        upper = self.space(degree + 1)
        if not upper.dimension or not self.space(degree).dimension:
            return []
        return transpose(self.matrix(degree + 1), upper.dimension)

    def quotient(self, degree):
        """The homology H_n as the quotient of cycles by boundaries"""
        return self._quotients.get_or_compute(degree, self._make_quotient)

    def _make_quotient(self, degree):
        space = self.space(degree)
        return Quotient(self.cycles(degree), self.boundaries(degree), space.dimension)

    def homology_at(self, degree):
        """All the data about the homology in given degree"""
        space = self.space(degree)
        quotient = self.quotient(degree)
        cycles_dim = space.dimension - rank(self.matrix(degree), space.dimension)
        boundaries_dim = len(quotient.denominator)

        return HomologyDegree(
            degree, space,
            cycles_dim=cycles_dim,
            boundaries_dim=boundaries_dim,
            quotient=quotient)

    def class_coordinates(self, theta):
        """
        The coordinates of the homology class of the cycle
        in the basis of representatives
        """
        quotient = self.quotient(theta.degree)
        vector = self.space(theta.degree).coordinates(theta)
        result = quotient.coordinates(vector)
        if result is None:
            raise PreconditionError('{} is not a cycle'.format(theta))
        return result


class HomologyDegree(object):
    """The homology of the derivation complex in a single degree"""

    def __init__(self, degree, space, cycles_dim, boundaries_dim, quotient):
        self.degree = degree
        self.space = space
        self.cycles_dim = cycles_dim
        self.boundaries_dim = boundaries_dim
        self.quotient = quotient

    @property
    def chain_dim(self):
        """The dimension of Der^n"""
        return self.space.dimension

    @property
    def dimension(self):
        """dim H_n = dim ker 𝒟_n - rank 𝒟_{n+1}"""
        return self.cycles_dim - self.boundaries_dim

    @property
    def representatives(self):
        """The cycles whose classes form the basis of H_n"""
        return [self.space.from_coordinates(vector) for vector in self.quotient.representatives]

    def to_dict(self):
        """Structured form"""
        return OrderedDict([
            ('dimension', self.dimension),
            ('chains', self.chain_dim),
            ('cycles', self.cycles_dim),
            ('boundaries', self.boundaries_dim),
            ('representatives', [theta.to_dict() for theta in self.representatives]),
        ])


BracketConstant = namedtuple('BracketConstant', 'i j k value')


@python_2_unicode_compatible
class HomologyReport(object):
    """
    Per-degree homology of a derivation complex inside the window
    and (for the endomorphism case) the bracket structure constants
    on the global basis of representatives enumerated by degree.
    """

    def __init__(self, complex_, window):
        self.complex = complex_
        self.window = window
        self.degrees = OrderedDict(
            (degree, complex_.homology_at(degree)) for degree in window.degrees())

        self.brackets = None
        self.notes = []

        if 1 in self.degrees:
            self.notes.append('degree 1 is determined only up to rank')

    @property
    def model(self):
        """The source model"""
        return self.complex.model

    @property
    def is_phi(self):
        """Whether the report is about the φ-derivations"""
        return self.complex.morphism is not None

    def dims(self):
        """Mapping degree --> dim H_n"""
        return OrderedDict(
            (degree, data.dimension) for degree, data in iteritems(self.degrees))

    def nonzero_dims(self):
        """Mapping degree --> dim H_n for nonzero dimensions only"""
        return OrderedDict((degree, dim) for degree, dim in iteritems(self.dims()) if dim)

    @property
    def total_dimension(self):
        """The dimension of the whole homology inside the window"""
        return sum(itervalues(self.dims()))

    def basis(self):
        """Pairs (degree, representative) ordered by degree"""
        return [(degree, theta)
                for degree, data in iteritems(self.degrees)
                for theta in data.representatives]

    def global_index(self, degree, local):
        """The index of the representative in the whole basis"""
        index = 0
        for deg, data in iteritems(self.degrees):
            if deg == degree:
                return index + local
            index += data.dimension
        raise KeyError(degree)

    def bracket_table(self):
        """Mapping (i, j) --> {k: value}"""
        table = OrderedDict()
        for const in self.brackets or ():
            table.setdefault((const.i, const.j), OrderedDict())[const.k] = const.value
        return table

    @property
    def is_abelian(self):
        """All the bracket constants vanish"""
        return not self.brackets

    def to_dict(self):
        """Structured form of the report"""
        res = OrderedDict([
            ('complex', self.complex.name),
            ('window', [self.window.lo, self.window.hi]),
            ('dimensions', OrderedDict(
                (str(degree), dim) for degree, dim in iteritems(self.dims()))),
            ('degrees', OrderedDict(
                (str(degree), data.to_dict()) for degree, data in iteritems(self.degrees))),
        ])

        if self.brackets is not None:
            res['brackets'] = [[const.i, const.j, const.k, str(const.value)]
                               for const in self.brackets]

        res['notes'] = list(self.notes)
        return res

    def __str__(self):
        return '{} over {}: {}'.format(
            self.complex.name, self.window,
            ', '.join('H_{}={}'.format(degree, dim) for degree, dim in iteritems(self.dims())))


def _prepare(model, morphism):
    if morphism is None:
        ensure_valid(model)
        return

    ensure_valid(morphism.source)
    ensure_valid(morphism.target, minimal=False)
    report = validate_morphism(morphism)
    if not report.ok:
        raise ModelValidationError(
            'The morphism is not valid: {}'.format(', '.join(report.failed_checks)), report)


def homology(model, window=None, morphism=None, with_brackets=True):
    """
    The homology of Der_{∧V}(∧V ⊗ ∧W) (or of the φ-derivations when the
    morphism is given) for every degree of the window.
    """
    if window is None:
        window = DegreeWindow.default(model)

    if morphism is not None:
        model = morphism.source

    _prepare(model, morphism)

    complex_ = DerivationComplex(model, morphism=morphism)
    report = HomologyReport(complex_, window)

    LOG.info('Homology of %s over %s: %s', model.name or 'model', window, dict(report.dims()))
    if with_brackets and morphism is None:
        induced_bracket(report)
    return report


def autF_homology(model, window=None, with_brackets=True):  # pylint: disable=invalid-name
    """
    The homology of the subcomplex of derivations that take
    the fibre generators into the ideal ∧⁺V ⊗ ∧W
    """
    if window is None:
        window = DegreeWindow.default(model)

    ensure_valid(model)
    complex_ = DerivationComplex(
        model, restrict=_contains_base_generator(model), name='Der^F')
    report = HomologyReport(complex_, window)

    LOG.info('Aut^F homology of %s over %s: %s',
             model.name or 'model', window, dict(report.dims()))
    if with_brackets:
        induced_bracket(report)
    return report


def induced_bracket(report):
    """
    Compute the constants c such that [a_i, a_j] = Σ c^k_ij a_k in homology.
    The brackets landing above the window are dropped
    (with a note when the complex does not vanish there).
    """
    if report.is_phi:
        raise UnsupportedOperationError(
            'The derivations along a morphism do not have a bracket')

    complex_ = report.complex
    basis = report.basis()

    truncated = set()
    constants = []
    for i, (degree_i, theta_i) in enumerate(basis):
        for j, (degree_j, theta_j) in enumerate(basis):
            degree = degree_i + degree_j
            if degree not in report.window:
                if complex_.space(degree).dimension:
                    truncated.add(degree)
                continue

            class_coords = complex_.class_coordinates(bracket(theta_i, theta_j))
            for local, value in enumerate(class_coords):
                if value:
                    constants.append(BracketConstant(
                        i, j, report.global_index(degree, local), value))

    if truncated:
        note = 'brackets landing in degrees {} are above the window'.format(
            ', '.join(map(str, sorted(truncated))))
        LOG.warning('%s: %s', complex_.name, note)
        report.notes.append(note)

    report.brackets = constants
    return constants


def pi1_rank(model, morphism=None):
    """
    The rank of the fundamental group of the mapping space:
    the dimension of H_1 of the (φ-)derivation complex
    """
    report = homology(model, DegreeWindow(1, 1), morphism=morphism, with_brackets=False)
    return report.dims()[1]


def base_cohomology(sullivan_algebra, max_degree):
    """
    The cohomology of (∧V, d) computed directly from
    the finite degree components: mapping degree --> dim H^k
    """
    algebra = sullivan_algebra.algebra

    def _d_matrix(degree):
        # d: (∧V)^k --> (∧V)^{k+1}, rows are indexed by the target basis
        source = algebra.monomial_basis(degree)
        target = algebra.monomial_basis(degree + 1)
        columns = [coordinates(sullivan_algebra.d(algebra.monomial(monomial)), target)
                   for monomial in source]
        return transpose(columns, len(target)) if columns else [], len(source)

    ranks = dict()
    for degree in range(-1, max_degree + 1):
        if degree < 0:
            ranks[degree] = 0
            continue
        matrix, size = _d_matrix(degree)
        ranks[degree] = rank(matrix, size)

    result = OrderedDict()
    for degree in range(max_degree + 1):
        dim = algebra.dimension(degree)
        result[degree] = dim - ranks[degree] - ranks[degree - 1]

    LOG.debug('Cohomology of %s: %s', algebra, dict(result))
    return result


def total_cohomology(model, max_degree):
    """The cohomology of the total algebra (∧V ⊗ ∧W, D)"""
    return base_cohomology(model.total_algebra, max_degree)
