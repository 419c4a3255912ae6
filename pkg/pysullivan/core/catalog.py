# -*- coding: utf-8 -*-
"""
Built-in relative models: spheres and projective spaces
as bases, trivial products, path-space fibrations
and the twisted S^7 x S^3 --> S^4 example.

The keys look like 'hopf_s7s3_s4', 'pathspace_s2',
'pathspace_odd_sphere:3', 'sphere:2' (or 'sphere2'), 'cpn:2' (or 'cp2', 'cpn2'),
'point' and 'product:<base>/<fibre>' where base and fibre are simple keys.
"""

from __future__ import unicode_literals, print_function

import re
from collections import OrderedDict

from six import python_2_unicode_compatible

from pysullivan.core.algebra import (
    GradedAlgebra,
    substitute,
)
from pysullivan.core.common import CatalogError
from pysullivan.core.sullivan import (
    RelativeModel,
    SullivanAlgebra,
)
from pysullivan.utils.other import get_named_logger

LOG = get_named_logger(__name__, __file__)

# suffix for the names of the fibre generators in product models
FIBRE_SUFFIX = 'p'


def sphere(dimension):
    """
    The minimal model of the sphere:
    ∧(x_n) for odd n and ∧(x_n, y_{2n-1}; dy = x^2) for even n
    """
    if dimension < 1:
        raise CatalogError('Bad sphere dimension: {}'.format(dimension))

    if dimension % 2:
        return SullivanAlgebra([('x{}'.format(dimension), dimension)])

    top = 2 * dimension - 1
    algebra = GradedAlgebra([('x{}'.format(dimension), dimension), ('y{}'.format(top), top)])
    return SullivanAlgebra(algebra, {
        'y{}'.format(top): algebra.gen('x{}'.format(dimension)) ** 2})


def cpn(dimension):
    """The minimal model of CP^n: ∧(x_2, y_{2n+1}; dy = x^(n+1))"""
    if dimension < 1:
        raise CatalogError('Bad projective space dimension: {}'.format(dimension))

    top = 2 * dimension + 1
    algebra = GradedAlgebra([('x2', 2), ('y{}'.format(top), top)])
    return SullivanAlgebra(algebra, {
        'y{}'.format(top): algebra.gen('x2') ** (dimension + 1)})


def point():
    """The ground field"""
    return SullivanAlgebra([])


BASES = {
    'sphere': sphere,
    'cpn': cpn,
    'point': point,
}

_SHORT_KEY_RE = re.compile(r'^(sphere|cpn?)(\d+)$')


@python_2_unicode_compatible
class CatalogEntry(object):
    """The model with the flags describing the fibration it comes from"""

    def __init__(self, key, model, odd_sphere_fibre=None, injective_i_sharp=False,
                 fibre_minimal_w=True, path_space=False, expected=None):
        self.key = key
        self.model = model
        self.flags = OrderedDict([
            ('odd_sphere_fibre', odd_sphere_fibre),
            ('injective_i_sharp', injective_i_sharp),
            ('fibre_minimal_W', fibre_minimal_w),
            ('path_space', path_space),
        ])
        self.expected = expected or {}

    @property
    def odd_sphere_fibre(self):
        """The n such that the fibre is S^(2n+1), or None"""
        return self.flags['odd_sphere_fibre']

    @property
    def is_path_space(self):
        """The entry models the path-space fibration PB --> B"""
        return self.flags['path_space']

    def to_dict(self):
        """Structured description of the entry"""
        return OrderedDict([
            ('key', self.key),
            ('model', str(self.model)),
            ('flags', self.flags),
        ])

    def __str__(self):
        return '{}: {}'.format(self.key, self.model)


def _parse_simple(key):
    """Split the key 'name:param' (or 'sphere3') into the name and integer parameter"""
    match = _SHORT_KEY_RE.match(key)
    if match:
        name, param = match.groups()
        return ('cpn' if name.startswith('cp') else name), int(param)

    name, sep, param = key.partition(':')
    if not sep:
        return name, None

    try:
        return name, int(param)
    except ValueError:
        raise CatalogError('Bad parameter for {!r}: {!r}'.format(name, param))


def base_algebra(key):
    """The Sullivan algebra of the base space by the simple key"""
    name, param = _parse_simple(key)
    try:
        builder = BASES[name]
    except KeyError:
        raise CatalogError('Unknown space {!r}. Known: {}'.format(
            key, ', '.join(sorted(BASES))))

    if name == 'point':
        if param is not None:
            raise CatalogError('The point does not need parameters')
        return builder()

    if param is None:
        raise CatalogError('The {!r} requires the dimension parameter'.format(name))

    return builder(param)


def _odd_sphere_half(key):
    name, param = _parse_simple(key)
    if name == 'sphere' and param is not None and param % 2:
        return (param - 1) // 2
    return None


def product(base_key, fibre_key):
    """
    The trivial fibration B x F --> B: the fibre generators get
    the suffix and keep their own differential
    """
    base = base_algebra(base_key)
    fibre = base_algebra(fibre_key)

    renamed = dict((gen.name, gen.name + FIBRE_SUFFIX) for gen in fibre.algebra)
    fibre_generators = [(renamed[gen.name], gen.degree) for gen in fibre.algebra]

    total = base.algebra.extend(fibre_generators)
    images = [total.gen(renamed[gen.name]) for gen in fibre.algebra]

    differential = OrderedDict(
        (renamed[gen.name], substitute(value, images, total))
        for gen, value in fibre.items() if value)

    key = 'product:{}/{}'.format(base_key, fibre_key)
    model = RelativeModel(base, fibre_generators, differential, name=key)
    return CatalogEntry(
        key, model,
        odd_sphere_fibre=_odd_sphere_half(fibre_key),
        injective_i_sharp=True)


def hopf_s7s3_s4():
    """
    S^7 x S^3 --> S^4: the Hopf map composed with the projection,
    the fibre is S^3 x S^3
    """
    algebra = GradedAlgebra([('v4', 4), ('v7', 7)])
    base = SullivanAlgebra(algebra, {'v7': algebra.gen('v4') ** 2})

    model = RelativeModel(base, [('w3', 3), ('w3p', 3)], {
        'w3p': algebra.gen('v4'),
    }, name='hopf_s7s3_s4')

    return CatalogEntry('hopf_s7s3_s4', model, expected={
        'h0_sharp': 1,
        'hnil_fibre_bound': 1,
    })


def pathspace_s2():
    """The acyclic closure of the model of S^2"""
    base = sphere(2)
    total = base.algebra.extend([('xbar1', 1), ('ybar2', 2)])
    x2, y3, xbar = total.gen('x2'), total.gen('y3'), total.gen('xbar1')

    model = RelativeModel(base, [('xbar1', 1), ('ybar2', 2)], OrderedDict([
        ('xbar1', x2),
        ('ybar2', y3 - xbar * x2),
    ]), name='pathspace_s2')

    return CatalogEntry('pathspace_s2', model, path_space=True, expected={
        'homology': {1: 1, 2: 1},
        'nilpotency': 2,
    })


def pathspace_odd_sphere(dimension):
    """The path-space fibration over S^n for odd n: D(xbar) = x"""
    if dimension < 3 or dimension % 2 == 0:
        raise CatalogError('The odd sphere of dimension 3 or above expected: {}'.format(
            dimension))

    base = sphere(dimension)
    name = 'x{}'.format(dimension)
    bar = 'xbar{}'.format(dimension - 1)

    key = 'pathspace_odd_sphere:{}'.format(dimension)
    model = RelativeModel(base, [(bar, dimension - 1)], {
        bar: base.algebra.gen(name),
    }, name=key)

    return CatalogEntry(key, model, path_space=True, expected={
        'homology': {dimension - 1: 1},
    })


def _over_base(key):
    base = base_algebra(key)
    return CatalogEntry(key, RelativeModel(base, [], name=key))


# the keys without the parameters
ENTRIES = OrderedDict([
    ('hopf_s7s3_s4', hopf_s7s3_s4),
    ('pathspace_s2', pathspace_s2),
])

# the keys with a single integer parameter
PARAMETRIZED_ENTRIES = OrderedDict([
    ('pathspace_odd_sphere', pathspace_odd_sphere),
])

# the keys that appear in the catalog listing
SAMPLE_KEYS = (
    'hopf_s7s3_s4',
    'pathspace_s2',
    'pathspace_odd_sphere:3',
    'pathspace_odd_sphere:5',
    'point',
    'sphere:2',
    'sphere:3',
    'cpn:2',
    'product:point/sphere2',
    'product:point/sphere3',
    'product:sphere2/sphere3',
    'product:sphere3/sphere3',
    'product:sphere2/sphere2',
    'product:sphere4/sphere3',
    'product:cpn2/sphere5',
)


def build(key):
    """Construct the catalog entry by the key"""
    key = key.strip()
    if key in ENTRIES:
        return ENTRIES[key]()

    name, sep, params = key.partition(':')
    if name == 'product':
        base_key, slash, fibre_key = params.partition('/')
        if not (sep and slash and base_key and fibre_key):
            raise CatalogError('Expected product:<base>/<fibre>, got {!r}'.format(key))
        return product(base_key, fibre_key)

    if name in PARAMETRIZED_ENTRIES:
        name, param = _parse_simple(key)
        if param is None:
            raise CatalogError('The {!r} requires a parameter'.format(name))
        return PARAMETRIZED_ENTRIES[name](param)

    if _parse_simple(key)[0] not in BASES:
        raise CatalogError('Unknown catalog key {!r}. Try one of: {}'.format(
            key, ', '.join(SAMPLE_KEYS)))

    return _over_base(key)


def list_entries():
    """All the sample entries"""
    return [build(key) for key in SAMPLE_KEYS]
