# -*- coding: utf-8 -*-
"""
Here lie the utilities methods that does not depend on any domain
e.g. manipulations with collections or streams.
"""

from __future__ import unicode_literals, print_function, division

from functools import partial, wraps

from six.moves import range


def expand_generator(func=None, type_=list):
    """
    Escape the common list construction idiom by creating generator functions.
    You can also produce another iterable (e.g. tuple)

    Compare:
    def foo_list():                                  @expand_generator
        foo = []                                     def foo():
        while something:                                 while something:
            if something_more:                               if something_more:
                foo.append('X')          vs                      yield 'X'
            else:                                            else:
                foo.append('Y')                                  yield 'Y'

        return foo
    """
    if func is None:
        return partial(expand_generator, type_=type_)

    @wraps(func)
    def wrapper(*args, **kwargs):
        # noinspection PyArgumentList
        return type_(func(*args, **kwargs))

    return wrapper


def weighted_compositions(total, weights, caps=None):
    """
    Generate all the vectors of non-negative integers (e_1, ..., e_k)
    such that sum(e_i * weights[i]) == total.

    The optional `caps` limit every single e_i from above (None for no limit).
    The vectors come in the reversed lexicographic order:
    the first coordinate decreases the slowest.

    >>> list(weighted_compositions(4, [2, 3]))
    [(2, 0)]
    >>> list(weighted_compositions(5, [2, 3]))
    [(1, 1)]
    """
    if caps is None:
        caps = [None] * len(weights)

    if len(caps) != len(weights):
        raise ValueError('The caps and weights sizes are different: ({}, {})'.format(
            len(caps), len(weights)))

    if total < 0:
        return

    for vector in _compositions(total, tuple(weights), tuple(caps)):
        yield vector


def _compositions(total, weights, caps):
    if not weights:
        if total == 0:
            yield ()
        return

    weight, cap = weights[0], caps[0]
    if weight <= 0:
        raise ValueError('Bad weight: {!r}'.format(weight))

    max_exp = total // weight
    if cap is not None:
        max_exp = min(max_exp, cap)

    for exp in range(max_exp, -1, -1):
        for tail in _compositions(total - exp * weight, weights[1:], caps[1:]):
            yield (exp,) + tail