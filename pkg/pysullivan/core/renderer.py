# -*- coding: utf-8 -*-
"""
Defines various renderers for the computed reports.

Every report is an ordered mapping (nested mappings, lists and scalars)
produced by the `to_dict` methods; the renderer only decides how to print it.
"""

from __future__ import unicode_literals, print_function

try:
    from abc import ABC
except ImportError:
    from abc import ABCMeta

    # https://stackoverflow.com/a/38668373
    ABC = ABCMeta(str('ABC'), (object,), {'__slots__': ()})

import codecs
import json
import logging
from collections import OrderedDict
from fractions import Fraction
from sys import stdout

from six import (
    integer_types, string_types, text_type,
    iteritems, itervalues,
    PY2,
)

_LOG_NAME = __name__
LOG = logging.getLogger(_LOG_NAME)

# bump when the structure of the reports changes
SCHEMA_VERSION = 1

# prevent "UnicodeEncodeError: 'ascii' codec can't encode character ..."
# when redirecting output
if PY2:
    stdout = codecs.getwriter('utf8')(stdout)


def _plain(value):
    """Convert the values to the JSON-compatible ones (rationals become strings)"""
    if isinstance(value, Fraction):
        return text_type(value)

    if isinstance(value, dict):
        return OrderedDict((text_type(key), _plain(item)) for key, item in iteritems(value))

    if isinstance(value, (list, tuple)):
        return [_plain(item) for item in value]

    return value


class Renderer(ABC):
    """Defines the abstract renderer for a report"""

    def __init__(self, stream=None):
        self.stream = stream or stdout

    def _print(self, *args):
        return print(*args, file=self.stream)

    def document(self, command, report):
        """The report with the standard header"""
        doc = OrderedDict([
            ('schema_version', SCHEMA_VERSION),
            ('command', command),
        ])
        doc.update(_plain(report))
        return doc

    def draw(self, command, report):
        """Print out the report of the command"""
        LOG.info('Rendering %r report with %r', command, self.__class__.__name__)
        self.render(self.document(command, report))

    def render(self, document):
        """Actually print out the document"""
        raise NotImplementedError()


class HumanRenderer(Renderer):
    """
    Renders a report as indented text lines
    """

    __rend_name__ = 'human'

    INDENT = '  '

    @classmethod
    def _is_scalar(cls, value):
        return value is None or isinstance(value, (bool, float) + integer_types + string_types)

    @classmethod
    def _scalar(cls, value):
        if value is None:
            return '-'
        if isinstance(value, bool):
            return 'yes' if value else 'no'
        return text_type(value)

    def _lines(self, value, level):
        indent = self.INDENT * level
        if isinstance(value, dict):
            for key, item in iteritems(value):
                if self._is_scalar(item):
                    yield '{}{}: {}'.format(indent, key, self._scalar(item))
                elif self._is_flat(item):
                    yield '{}{}: {}'.format(indent, key, self._flat(item))
                elif not item:
                    yield '{}{}: -'.format(indent, key)
                else:
                    yield '{}{}:'.format(indent, key)
                    for line in self._lines(item, level + 1):
                        yield line

        elif isinstance(value, list):
            for item in value:
                if self._is_scalar(item):
                    yield '{}- {}'.format(indent, self._scalar(item))
                elif self._is_flat(item):
                    yield '{}- {}'.format(indent, self._flat(item))
                else:
                    yield '{}-'.format(indent)
                    for line in self._lines(item, level + 1):
                        yield line
        else:
            yield '{}{}'.format(indent, self._scalar(value))

    def _is_flat(self, value):
        if isinstance(value, dict):
            return bool(value) and all(self._is_scalar(item) for item in itervalues(value))
        if isinstance(value, list):
            return bool(value) and all(self._is_scalar(item) for item in value)
        return False

    def _flat(self, value):
        if isinstance(value, dict):
            return ', '.join('{}={}'.format(key, self._scalar(item))
                             for key, item in iteritems(value))
        return '[{}]'.format(', '.join(self._scalar(item) for item in value))

    def render(self, document):
        for line in self._lines(document, 0):
            self._print(line)


class StructuredRenderer(Renderer):
    """
    Renders a report as a JSON document
    with the stable order of the keys
    """

    __rend_name__ = 'structured'

    def render(self, document):
        self._print(json.dumps(document, indent=1, separators=(',', ': ')))


def _register_renderers():
    res = dict()
    for obj in list(globals().values()):
        if isinstance(obj, type):
            if issubclass(obj, Renderer) and hasattr(obj, '__rend_name__'):
                res[obj.__rend_name__] = obj
    return res


RENDERERS = _register_renderers()
