# -*- coding: utf-8 -*-

from __future__ import unicode_literals, print_function

from pysullivan.utils.cache import Cache


class TestCache(object):
    def test_basic(self):
        c = Cache()
        c.save('foo', 42)
        c.save('bar', 288)

        assert c.get('foo') == 42
        assert c.get('bar') == 288
        assert c.get('unknown') is None
        assert c.get('unknown', 'default') == 'default'

        assert 'foo' in c
        assert len(c) == 2

    def test_capacity(self):
        c = Cache(10)
        for i in range(10):
            c.save(i, i)
        assert len(c) == 10

        c.save('foo', 42)
        assert len(c) == 1
        assert c.get(0) is None
        assert c.get('foo') == 42

    def test_hit_rate(self):
        c = Cache(10)

        c.save('foo', 42)
        assert c.hit_rate == 0

        assert c.get('bar') is None
        assert c.hit_rate == 0

        c.get('foo')
        assert c.hit_rate == 0.5

        assert c.get('baz') is None
        assert c.hit_rate == 1.0 / 3

    def test_get_or_compute(self):
        calls = []

        def _square(x):
            calls.append(x)
            return x * x

        c = Cache()
        assert c.get_or_compute(3, _square) == 9
        assert c.get_or_compute(3, _square) == 9
        assert calls == [3]

    def test_none_values_are_cached(self):
        calls = []

        def _nothing(x):
            calls.append(x)

        c = Cache()
        assert c.get_or_compute('key', _nothing) is None
        assert c.get_or_compute('key', _nothing) is None
        assert calls == ['key']
