"""Contains version to use inside packages and for distribution"""
from __future__ import unicode_literals

VERSION = (0, 1, 0)

__version__ = '.'.join(map(str, VERSION))
