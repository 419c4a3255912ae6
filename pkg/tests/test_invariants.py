# -*- coding: utf-8 -*-

from __future__ import unicode_literals, print_function

import pytest

from pysullivan.core import catalog
from pysullivan.core.algebra import GradedAlgebra
from pysullivan.core.homology import (
    DegreeWindow,
    homology,
)
from pysullivan.core.invariants import (
    fibre_bound,
    hnil_fibre_bound,
    invariants_report,
    nilpotency_within_window,
    odd_sphere_prediction,
    path_space_prediction,
    samelson_lie_algebra,
)
from pysullivan.core.sullivan import (
    RelativeModel,
    SullivanAlgebra,
)
from .cases import NILPOTENCY_CASES


class TestNilpotency(object):
    @pytest.mark.parametrize('key, nilpotency, bound', NILPOTENCY_CASES)
    def test_cases(self, key, nilpotency, bound):
        model = catalog.build(key).model
        samelson = samelson_lie_algebra(model)

        assert samelson.nilpotency_lower_bound == nilpotency
        assert hnil_fibre_bound(model) == bound
        assert samelson.nilpotency_lower_bound <= bound

    def test_path_space(self):
        samelson = samelson_lie_algebra(catalog.pathspace_s2().model, DegreeWindow(1, 4))
        assert not samelson.rationally_homotopy_abelian_within_window
        assert samelson.is_exact

        data = samelson.to_dict()
        assert data['nilpotency_lower_bound'] == 2
        assert data['nilpotency_exact'] is True
        assert data['abelian_within_window'] is False

    def test_narrow_window(self):
        samelson = samelson_lie_algebra(catalog.pathspace_s2().model, DegreeWindow(1, 1))
        assert samelson.nilpotency_lower_bound == 1
        assert not samelson.is_exact

    def test_zero_homology(self):
        samelson = samelson_lie_algebra(catalog.build('sphere:2').model, DegreeWindow(1, 4))
        assert samelson.nilpotency_lower_bound == 0
        assert samelson.is_exact

    def test_no_brackets(self):
        report = homology(catalog.pathspace_s2().model, DegreeWindow(1, 4), with_brackets=False)
        with pytest.raises(ValueError, match='bracket data'):
            nilpotency_within_window(report)


class TestPredictions(object):
    def test_odd_sphere(self):
        entry = catalog.build('product:sphere2/sphere3')
        window = DegreeWindow(1, 6)
        assert odd_sphere_prediction(entry, window) == {1: 1, 2: 0, 3: 1, 4: 0, 5: 0, 6: 0}
        assert path_space_prediction(entry, window) is None

    def test_path_space(self):
        entry = catalog.pathspace_s2()
        window = DegreeWindow(1, 4)
        assert path_space_prediction(entry, window) == {1: 1, 2: 1, 3: 0, 4: 0}
        assert odd_sphere_prediction(entry, window) is None

    @pytest.mark.parametrize('key', [
        'product:sphere2/sphere3',
        'product:cpn2/sphere5',
        'product:sphere4/sphere3',
    ])
    def test_odd_sphere_holds(self, key):
        report = invariants_report(catalog.build(key))
        assert report['odd_sphere_prediction_holds'] is True
        assert report['bound_holds'] is True

    @pytest.mark.parametrize('key', [
        'pathspace_s2',
        'pathspace_odd_sphere:3',
        'pathspace_odd_sphere:5',
    ])
    def test_path_space_holds(self, key):
        report = invariants_report(catalog.build(key))
        assert report['path_space_prediction_holds'] is True
        assert 'odd_sphere_prediction' not in report

    def test_report(self):
        report = invariants_report(catalog.hopf_s7s3_s4(), DegreeWindow(1, 6))
        assert report['model'] == 'hopf_s7s3_s4'
        assert report['window'] == [1, 6]
        assert report['dimensions']['3'] == 2
        assert report['abelian_within_window'] is True
        assert report['hnil_fibre_bound'] == 1
        assert report['fibre_minimal'] is True
        assert not any(key.endswith('_prediction') for key in report)


class TestCatalogBound(object):
    def test_nilpotency_below_fibre_bound(self):
        for entry in catalog.list_entries():
            if not entry.flags['fibre_minimal_W']:
                continue

            samelson = samelson_lie_algebra(entry.model)
            assert samelson.nilpotency_lower_bound <= hnil_fibre_bound(entry.model), entry.key


class TestFibreBound(object):
    def test_minimal_fibre(self):
        assert fibre_bound(catalog.hopf_s7s3_s4().model) == (1, True)
        assert fibre_bound(catalog.pathspace_s2().model) == (2, True)

    def test_fibre_with_linear_part(self):
        total = GradedAlgebra([('a3', 3), ('b2', 2)])
        model = RelativeModel(SullivanAlgebra([]), [('a3', 3), ('b2', 2)], {
            'b2': total.gen('a3'),
        }, name='linear')

        bound = fibre_bound(model)
        assert bound.bound == 2
        assert not bound.fibre_minimal
        assert hnil_fibre_bound(model) == 2
