# -*- coding: utf-8 -*-
"""
Defines methods to parse polynomials
and the data files with models and morphisms
"""

from __future__ import unicode_literals, print_function

import io
import json
import os
import re
from collections import OrderedDict
from fractions import Fraction

from six import (
    integer_types, string_types,
    iteritems,
)

from pysullivan.core.algebra import GradedAlgebra
from pysullivan.core.common import ParseError
from pysullivan.core.sullivan import (
    DGMorphism,
    RelativeModel,
    SullivanAlgebra,
)
from pysullivan.utils.iter import expand_generator
from pysullivan.utils.other import get_named_logger

LOG = get_named_logger(__name__, __file__)

CURRENT_DIR = os.path.dirname(os.path.abspath(__file__))

_TOKEN_RE = re.compile(r'\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))')


@expand_generator
def _tokenize(text):
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN_RE.match(text, pos)
        if not match:  # pragma: no cover
            raise ParseError('Cannot parse {!r} at {}'.format(text, pos))

        number, name, symbol = match.groups()
        if number is not None:
            yield 'number', int(number)
        elif name is not None:
            yield 'name', name
        else:
            if symbol not in '+-*/^':
                raise ParseError('Unexpected symbol {!r} in {!r}'.format(symbol, text))
            yield symbol, symbol
        pos = match.end()


class _PolynomialParser(object):
    """
    The recursive descent parser for the grammar

        expr := ['-'] term (('+'|'-') term)*
        term := rational ['*' factor ('*' factor)*] | factor ('*' factor)*
        factor := name ['^' uint]
        rational := uint ['/' uint]
    """

    def __init__(self, text, algebra):
        self.text = text
        self.algebra = algebra
        self.tokens = _tokenize(text)
        self.pos = 0

    def _peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][0]
        return None

    def _take(self, kind):
        if self._peek() != kind:
            raise ParseError('Expected {} at position {} of {!r}'.format(
                kind, self.pos, self.text))
        value = self.tokens[self.pos][1]
        self.pos += 1
        return value

    def parse(self):
        """The polynomial defined by the whole text"""
        if not self.tokens:
            raise ParseError('Empty polynomial')

        sign = 1
        if self._peek() in ('-', '+'):
            sign = -1 if self._take(self._peek()) == '-' else 1

        result = self._term().scale(sign)
        while self._peek() in ('+', '-'):
            sign = -1 if self._take(self._peek()) == '-' else 1
            result += self._term().scale(sign)

        if self._peek() is not None:
            raise ParseError('Unexpected {!r} in {!r}'.format(
                self.tokens[self.pos][1], self.text))

        return result

    def _rational(self):
        numerator = self._take('number')
        if self._peek() == '/':
            self._take('/')
            denominator = self._take('number')
            if not denominator:
                raise ParseError('Zero denominator in {!r}'.format(self.text))
            return Fraction(numerator, denominator)
        return Fraction(numerator)

    def _term(self):
        if self._peek() == 'number':
            coefficient = self._rational()
            if self._peek() != '*' and self._peek() != 'name':
                return self.algebra.one().scale(coefficient)
            if self._peek() == '*':
                self._take('*')
            result = self._factor().scale(coefficient)
        else:
            result = self._factor()

        while self._peek() == '*':
            self._take('*')
            result = result * self._factor()

        return result

    def _factor(self):
        name = self._take('name')
        result = self.algebra.gen(name)
        if self._peek() == '^':
            self._take('^')
            result = result ** self._take('number')
        return result


def parse_polynomial(text, algebra):
    """Parse the text like '-1/2 * v4 * w3 + v4^2'"""
    if not isinstance(text, string_types):
        if isinstance(text, integer_types) and not isinstance(text, bool):
            return algebra.one().scale(text)
        raise ParseError('The polynomial should be a string: {!r}'.format(text))

    return _PolynomialParser(text, algebra).parse()


def example_file(file_name=''):
    """
    Returns a path to the bundled example model files
    """
    examples_dir = os.path.join(CURRENT_DIR, 'examples')
    if not file_name:
        return examples_dir

    if os.path.isfile(file_name):
        return file_name

    file_name = os.path.join(examples_dir, file_name)
    if os.path.isfile(file_name):
        return file_name

    json_file_name = file_name + '.json'
    if os.path.isfile(json_file_name):
        return json_file_name

    # just return the original file name, don't know where is it
    return file_name


def list_examples():
    """Return names of all the local examples"""
    for __, __, file_names in os.walk(example_file()):
        return sorted(os.path.splitext(f)[0] for f in file_names if f.endswith('.json'))


def _load_json(path):
    with io.open(path, encoding='utf-8') as json_file:
        content = json_file.read()

    try:
        return json.loads(content, object_pairs_hook=OrderedDict)
    except ValueError as ex:
        raise ParseError('Bad JSON in {!r}: {}'.format(path, ex))


def _require(data, key, what):
    if not isinstance(data, dict):
        raise ParseError('The {} should be a JSON object'.format(what))

    try:
        return data[key]
    except KeyError:
        raise ParseError('The {} has no {!r} field'.format(what, key))


def parse_model(data, name=None):
    """
    Construct the relative model from the decoded model file:
    {"base_generators": [...], "fibre_generators": [...], "differential": {...}}
    """
    base_gens = _require(data, 'base_generators', 'model')
    fibre_gens = data.get('fibre_generators', [])
    differential = data.get('differential', {})

    if not isinstance(base_gens, list) or not isinstance(fibre_gens, list):
        raise ParseError('The generators should be given as lists')

    if not isinstance(differential, dict):
        raise ParseError('The differential should be a mapping')

    base = GradedAlgebra(base_gens)
    total = base.extend(fibre_gens)

    base_values = OrderedDict()
    fibre_values = OrderedDict()
    for gen_name, text in iteritems(differential):
        gen = total.generator(gen_name)
        if gen.index < len(base):
            base_values[gen_name] = parse_polynomial(text, base)
        else:
            fibre_values[gen_name] = parse_polynomial(text, total)

    model = RelativeModel(
        SullivanAlgebra(base, base_values),
        [(gen.name, gen.degree) for gen in total.generators[len(base):]],
        fibre_values,
        name=name or data.get('name'))
    return model


def read_model(path, name=None):
    """Read the model from the JSON file (or bundled example by name)"""
    path = example_file(path)
    LOG.info('Reading model from %r', path)

    data = _load_json(path)
    if name is None and not (isinstance(data, dict) and data.get('name')):
        name = os.path.splitext(os.path.basename(path))[0]
    return parse_model(data, name=name)


def parse_morphism(data, source, target):
    """The morphism from the decoded values mapping"""
    values = data.get('values', {}) if isinstance(data, dict) else None
    if not isinstance(values, dict):
        raise ParseError('The morphism values should be a mapping')

    for gen_name in values:
        source.total.generator(gen_name)

    return DGMorphism(source, target, OrderedDict(
        (gen_name, parse_polynomial(text, target.total))
        for gen_name, text in iteritems(values)))


def read_morphism(path, model_reader=read_model):
    """
    Read the morphism file:
    {"source": <path>, "target": <path>, "values": {...}}.
    The model paths are resolved relative to the morphism file.
    """
    path = example_file(path)
    LOG.info('Reading morphism from %r', path)
    data = _load_json(path)

    base_dir = os.path.dirname(os.path.abspath(path))

    def _model(key):
        model_path = _require(data, key, 'morphism')
        relative = os.path.join(base_dir, model_path)
        if os.path.isfile(relative):
            model_path = relative
        return model_reader(model_path)

    source = _model('source')
    if data.get('target', data['source']) == data['source']:
        target = source
    else:
        target = _model('target')

    return parse_morphism(data, source, target)


def export_model(model):
    """The model in the model file format"""
    values = OrderedDict(
        (gen.name, str(value)) for gen, value in model.total_algebra.items() if value)

    return OrderedDict([
        ('name', model.name),
        ('base_generators', [gen.to_dict() for gen in model.base_generators]),
        ('fibre_generators', [gen.to_dict() for gen in model.fibre_generators]),
        ('differential', values),
    ])


def dump_model(model):
    """The model file content"""
    return json.dumps(export_model(model), indent=1, separators=(',', ': '))
