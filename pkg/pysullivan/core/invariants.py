# -*- coding: utf-8 -*-
"""
Derived quantities: the Samelson Lie algebra of the identity component,
the nilpotency bounds and the predicted dimensions
for odd-sphere fibres and path-space fibrations.
"""

from __future__ import unicode_literals, print_function

from collections import namedtuple, OrderedDict

from six import iteritems

from pysullivan.core.homology import (
    DegreeWindow,
    base_cohomology,
    homology,
)
from pysullivan.core.sullivan import is_fibre_minimal
from pysullivan.utils.linalg import (
    span_basis,
    zero_vector,
)
from pysullivan.utils.other import get_named_logger

LOG = get_named_logger(__name__, __file__)


class SamelsonReport(object):
    """
    The homology of Der_{∧V}(∧V ⊗ ∧W) with the induced bracket
    and the nilpotency analysis inside the window
    """

    def __init__(self, report):
        self.homology = report
        self.nilpotency_lower_bound = nilpotency_within_window(report)

    @property
    def model(self):
        """The analyzed model"""
        return self.homology.model

    @property
    def window(self):
        """The degrees of the homology"""
        return self.homology.window

    @property
    def rationally_homotopy_abelian_within_window(self):
        """All the brackets inside the window vanish"""
        return self.homology.is_abelian

    @property
    def is_exact(self):
        """
        The window covers all the nonzero derivation spaces,
        so the nilpotency bound is the exact value
        """
        degrees = self.model.fibre_degrees()
        return not degrees or self.window.hi >= max(degrees)

    def to_dict(self):
        """Structured form"""
        res = self.homology.to_dict()
        res['nilpotency_lower_bound'] = self.nilpotency_lower_bound
        res['nilpotency_exact'] = self.is_exact
        res['abelian_within_window'] = self.rationally_homotopy_abelian_within_window
        return res


def samelson_lie_algebra(model, window=None):
    """
    The rational homotopy Lie algebra of Aut(p)_∘ with the Samelson bracket
    as the homology of derivations with the commutator bracket
    """
    return SamelsonReport(homology(model, window))


def _lower_central_series(report):
    """
    The dimensions of L^1 = L, L^(k+1) = [L, L^k]
    (over the homology basis in the window)
    """
    size = report.total_dimension
    table = report.bracket_table()

    def _bracket_with(i, vector):
        result = zero_vector(size)
        for j, coefficient in enumerate(vector):
            if coefficient:
                for k, value in iteritems(table.get((i, j), {})):
                    result[k] += coefficient * value
        return result

    current = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    dims = []
    while current:
        dims.append(len(current))
        if len(dims) > size:
            break

        current = span_basis(
            [_bracket_with(i, vector) for i in range(size) for vector in current], size)

    return dims


def nilpotency_within_window(report):
    """
    The length of the longest nonvanishing iterated bracket
    of the homology classes inside the window
    (0 for the zero homology, 1 for the abelian one)
    """
    if isinstance(report, SamelsonReport):
        report = report.homology

    if report.brackets is None:
        raise ValueError('The report does not contain the bracket data')

    return len(_lower_central_series(report))


FibreBound = namedtuple('FibreBound', 'bound fibre_minimal')


def fibre_bound(model):
    """
    The number of distinct degrees of W together with the flag
    whether W is the minimal model of the fibre (the bound is only valid then)
    """
    return FibreBound(len(model.fibre_degrees()), is_fibre_minimal(model))


def hnil_fibre_bound(model):
    """
    The number of distinct degrees of W: the upper bound
    for the homotopical nilpotency of Aut(p)_∘
    when W is the minimal model of the fibre
    """
    bound, fibre_minimal = fibre_bound(model)
    if not fibre_minimal:
        LOG.warning('The fibre part of the model is not minimal: the bound may be wrong')

    return bound


def odd_sphere_prediction(entry, window):
    """
    For the fibre S^(2n+1): dim π_q ⊗ Q = dim H^(2n+1-q)(B; Q)
    """
    half = entry.odd_sphere_fibre
    if half is None:
        return None

    top = 2 * half + 1
    cohomology = base_cohomology(entry.model.base, top)
    return OrderedDict(
        (degree, cohomology.get(top - degree, 0) if degree <= top else 0)
        for degree in window.degrees())


def path_space_prediction(entry, window):
    """
    For the path-space fibration over B:
    dim π_q(ΩB) ⊗ Q = the number of base generators of degree q + 1
    """
    if not entry.is_path_space:
        return None

    degrees = [gen.degree for gen in entry.model.base_generators]
    return OrderedDict(
        (degree, degrees.count(degree + 1)) for degree in window.degrees())


def invariants_report(entry, window=None):
    """
    The Samelson report, the bounds and the predictions (for catalog entries)
    with the flags whether they agree with the computations
    """
    model = entry.model
    if window is None:
        window = DegreeWindow.default(model)

    samelson = samelson_lie_algebra(model, window)
    dims = samelson.homology.dims()
    bound, fibre_minimal = fibre_bound(model)

    res = OrderedDict([
        ('model', model.name),
        ('window', [window.lo, window.hi]),
        ('dimensions', OrderedDict((str(degree), dim) for degree, dim in iteritems(dims))),
        ('abelian_within_window', samelson.rationally_homotopy_abelian_within_window),
        ('nilpotency_lower_bound', samelson.nilpotency_lower_bound),
        ('nilpotency_exact', samelson.is_exact),
        ('hnil_fibre_bound', bound),
        ('fibre_minimal', fibre_minimal),
        ('bound_holds', not fibre_minimal or samelson.nilpotency_lower_bound <= bound),
    ])

    flags = getattr(entry, 'flags', {})
    if flags:
        res['flags'] = flags

    predictions = OrderedDict()
    if flags.get('injective_i_sharp'):
        predictions['odd_sphere'] = odd_sphere_prediction(entry, window)
    if flags.get('path_space'):
        predictions['path_space'] = path_space_prediction(entry, window)

    for name, predicted in iteritems(predictions):
        if predicted is not None:
            res['{}_prediction'.format(name)] = OrderedDict(
                (str(degree), dim) for degree, dim in iteritems(predicted))
            res['{}_prediction_holds'.format(name)] = predicted == dims

    return res
