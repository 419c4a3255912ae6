# -*- coding: utf-8 -*-

from __future__ import unicode_literals, print_function

from fractions import Fraction

import pytest

from pysullivan.core import catalog
from pysullivan.core.algebra import GradedAlgebra
from pysullivan.core.common import (
    ModelValidationError,
    PreconditionError,
    UnsupportedOperationError,
)
from pysullivan.core.derivations import Derivation
from pysullivan.core.esharp import h0_sharp
from pysullivan.core.homology import (
    BracketConstant,
    DegreeWindow,
    autF_homology,
    base_cohomology,
    homology,
    induced_bracket,
    pi1_rank,
    total_cohomology,
)
from pysullivan.core.sullivan import (
    DGMorphism,
    RelativeModel,
    SullivanAlgebra,
)
from pysullivan.reader import (
    read_model,
    read_morphism,
)
from . import oracle
from .cases import (
    AUTF_CASES,
    HOMOLOGY_CASES,
)


def reordered_hopf():
    """The Hopf model with w3p declared before w3"""
    algebra = GradedAlgebra([('v4', 4), ('v7', 7)])
    base = SullivanAlgebra(algebra, {'v7': algebra.gen('v4') ** 2})
    return RelativeModel(base, [('w3p', 3), ('w3', 3)], {
        'w3p': algebra.gen('v4'),
    }, name='hopf_reordered')


class TestDegreeWindow(object):
    def test_default(self):
        model = catalog.hopf_s7s3_s4().model
        assert DegreeWindow.default(model) == (1, 14)
        assert DegreeWindow.default(catalog.build('point').model) == (1, 1)

    def test_parse(self):
        window = DegreeWindow.from_string('2:5')
        assert window == (2, 5)
        assert window.degrees() == [2, 3, 4, 5]
        assert 3 in window
        assert 6 not in window
        assert str(window) == '2:5'

    def test_bad(self):
        with pytest.raises(PreconditionError, match='degree 1 or above'):
            DegreeWindow(0, 3)

        with pytest.raises(PreconditionError, match='Empty window'):
            DegreeWindow.from_string('3:1')

        with pytest.raises(PreconditionError, match='expected LO:HI'):
            DegreeWindow.from_string('3')

        with pytest.raises(PreconditionError, match='expected LO:HI'):
            DegreeWindow.from_string('a:b')


class TestHomology(object):
    @pytest.mark.parametrize('key, window, expected, origin', HOMOLOGY_CASES)
    def test_cases(self, key, window, expected, origin):
        model = catalog.build(key).model
        report = homology(model, DegreeWindow(*window))
        assert dict(report.dims()) == expected, origin

    @pytest.mark.parametrize('key', catalog.SAMPLE_KEYS)
    def test_oracle(self, key):
        model = catalog.build(key).model
        window = DegreeWindow.default(model)
        report = homology(model, window, with_brackets=False)
        assert dict(report.dims()) == oracle.homology_dims(model, window.degrees())

    @pytest.mark.parametrize('key, window, expected, origin', HOMOLOGY_CASES)
    def test_oracle_agrees_with_cases(self, key, window, expected, origin):
        model = catalog.build(key).model
        assert oracle.homology_dims(model, range(window[0], window[1] + 1)) == expected, origin

    def test_file_model(self):
        report = homology(read_model('s2_over_point'), DegreeWindow(1, 6))
        assert report.nonzero_dims() == {3: 1}
        assert report.total_dimension == 1
        assert [str(theta) for _, theta in report.basis()] == ['[3] y3 -> 1']
        assert report.is_abelian

    def test_degree_data(self):
        model = catalog.build('product:point/sphere2').model
        report = homology(model, DegreeWindow(1, 3))

        first = report.degrees[1]
        assert first.chain_dim == 1
        assert first.cycles_dim == 1
        assert first.boundaries_dim == 1
        assert first.dimension == 0

        data = report.to_dict()
        assert data['complex'] == 'Der'
        assert data['window'] == [1, 3]
        assert data['dimensions'] == {'1': 0, '2': 0, '3': 1}
        assert data['degrees']['3']['representatives'] == [
            {'degree': 3, 'values': {'y3p': '1'}}]
        assert data['brackets'] == []
        assert data['notes'] == ['degree 1 is determined only up to rank']

    def test_not_minimal(self):
        with pytest.raises(ModelValidationError):
            homology(read_model('bad_square'))

    def test_str(self):
        report = homology(catalog.build('product:sphere2/sphere3').model, DegreeWindow(1, 3))
        assert str(report) == 'Der over 1:3: H_1=1, H_2=0, H_3=1'

    def test_generator_order(self):
        model, reordered = catalog.hopf_s7s3_s4().model, reordered_hopf()
        window = DegreeWindow.default(model)

        report = homology(model, window)
        other = homology(reordered, window)
        assert other.dims() == report.dims()
        assert len(other.brackets) == len(report.brackets)
        assert oracle.homology_dims(reordered, window.degrees()) == dict(report.dims())

        assert h0_sharp(reordered).dimension == h0_sharp(model).dimension == 1
        total = reordered.total
        shift = Derivation(reordered, 0, {'w3p': total.gen('w3')})
        assert not h0_sharp(reordered).class_of(shift).is_identity


class TestBracket(object):
    def test_pathspace(self):
        report = homology(catalog.pathspace_s2().model, DegreeWindow(1, 4))

        assert [str(theta) for _, theta in report.basis()] == [
            '[1] xbar1 -> 1, ybar2 -> xbar1',
            '[2] ybar2 -> 1',
        ]
        assert report.brackets == [BracketConstant(0, 0, 1, Fraction(2))]
        assert report.bracket_table() == {(0, 0): {1: 2}}
        assert not report.is_abelian
        assert report.global_index(2, 0) == 1

    def test_truncated(self):
        report = homology(catalog.pathspace_s2().model, DegreeWindow(1, 1))
        assert report.brackets == []
        assert 'brackets landing in degrees 2 are above the window' in report.notes

    def test_abelian_products(self):
        for key in ('product:sphere2/sphere3', 'product:cpn2/sphere5', 'hopf_s7s3_s4'):
            report = homology(catalog.build(key).model, DegreeWindow(1, 6))
            assert report.is_abelian, key

    def test_class_of_non_cycle(self):
        model = catalog.pathspace_s2().model
        report = homology(model, DegreeWindow(1, 2))
        theta = Derivation(model, 1, {'xbar1': model.total.one()})

        with pytest.raises(PreconditionError, match='is not a cycle'):
            report.complex.class_coordinates(theta)


class TestMappingSpace(object):
    def test_automorphism(self):
        morphism = read_morphism('hopf_automorphism')
        report = homology(morphism.source, DegreeWindow(1, 4), morphism=morphism)

        assert report.is_phi
        assert report.brackets is None
        assert dict(report.dims()) == {1: 0, 2: 0, 3: 2, 4: 0}
        assert pi1_rank(morphism.source, morphism) == 0

        with pytest.raises(UnsupportedOperationError):
            induced_bracket(report)

    def test_identity_gives_the_same(self):
        model = catalog.build('product:sphere2/sphere3').model
        identity = DGMorphism.identity(model)
        window = DegreeWindow(1, 4)
        assert homology(model, window, morphism=identity).dims() == homology(model, window).dims()

    def test_broken_morphism(self):
        morphism = read_morphism('hopf_broken_morphism')
        with pytest.raises(ModelValidationError, match='chain_map'):
            homology(morphism.source, morphism=morphism)

    def test_pi1(self):
        assert pi1_rank(catalog.build('product:sphere2/sphere3').model) == 1
        assert pi1_rank(catalog.hopf_s7s3_s4().model) == 0


class TestAutF(object):
    @pytest.mark.parametrize('key, window, expected, origin', AUTF_CASES)
    def test_cases(self, key, window, expected, origin):
        report = autF_homology(catalog.build(key).model, DegreeWindow(*window))
        assert dict(report.dims()) == expected, origin
        assert report.complex.name == 'Der^F'


class TestCohomology(object):
    def test_projective_plane(self):
        assert dict(base_cohomology(catalog.cpn(2), 6)) == {
            0: 1, 1: 0, 2: 1, 3: 0, 4: 1, 5: 0, 6: 0}

    def test_sphere(self):
        assert dict(base_cohomology(catalog.sphere(4), 8)) == {
            0: 1, 1: 0, 2: 0, 3: 0, 4: 1, 5: 0, 6: 0, 7: 0, 8: 0}

    def test_path_space_is_acyclic(self):
        cohomology = total_cohomology(catalog.pathspace_s2().model, 6)
        assert dict(cohomology) == {0: 1, 1: 0, 2: 0, 3: 0, 4: 0, 5: 0, 6: 0}

    def test_hopf_total_space(self):
        # S^7 x S^3
        cohomology = total_cohomology(catalog.hopf_s7s3_s4().model, 10)
        assert [degree for degree, dim in cohomology.items() if dim] == [0, 3, 7, 10]
