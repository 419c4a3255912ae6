# -*- coding: utf-8 -*-
"""
Enables caches for lazily extended linear maps
"""

from __future__ import unicode_literals, print_function

from pysullivan.utils.other import get_named_logger

LOG = get_named_logger(__name__, __file__)


class Cache(object):
    """
    Presents the simple dictionary
    with size limit and hit counter.
    """

    def __init__(self, max_size=10 ** 5):
        """
        :param max_size: maximum number of items that the cache can store,
        after reaching it the cache gets cleared
        """
        self._storage = dict()
        self.max_size = max_size
        self.hits = 0
        self.total_queries = 0

    def __len__(self):
        return len(self._storage)

    def __contains__(self, name):
        return name in self._storage

    def save(self, name, value):
        """Write the value to cache."""

        if len(self) >= self.max_size:
            LOG.info('Maximum size for cache reached (%s), clearing', self.max_size)
            self._storage.clear()

        self._storage[name] = value

    def get(self, name, default=None):
        """Get the value from a cache"""

        self.total_queries += 1
        try:
            value = self._storage[name]
        except KeyError:
            return default

        self.hits += 1
        return value

    def get_or_compute(self, name, func):
        """
        Return the cached value or compute it with `func(name)`
        and remember the result
        """
        value = self.get(name, self)
        if value is self:
            value = func(name)
            self.save(name, value)

        return value

    @property
    def hit_rate(self):
        """How much queries successfully reached the cache"""
        if not self.total_queries:
            return 0

        return float(self.hits) / self.total_queries