# -*- coding: utf-8 -*-
"""
Defines the errors raised while reading models
and computing their invariants.

Every error knows the exit code that the command line
program should finish with when the error is not handled.
"""

from __future__ import unicode_literals, print_function


class SullivanError(ValueError):
    """
    The base for all the errors of the package
    """
    exit_code = 1


class ParseError(SullivanError):
    """
    The polynomial or model file has a malformed structure
    """
    exit_code = 2


class UnknownGeneratorError(ParseError):
    """
    The polynomial refers to a generator that is not declared in the algebra
    """

    def __init__(self, name, algebra=None):
        self.name = name
        msg = 'Unknown generator {!r}'.format(name)
        if algebra is not None:
            msg += ' (known: {})'.format(', '.join(algebra.names) or 'none')
        super(UnknownGeneratorError, self).__init__(msg)


class ModelValidationError(SullivanError):
    """
    The model does not satisfy the structural conditions
    required by the requested computation
    """
    exit_code = 3

    def __init__(self, msg, report=None):
        super(ModelValidationError, self).__init__(msg)
        self.report = report


class UnsupportedOperationError(SullivanError):
    """
    The operation has no meaning for given objects
    (e.g. a bracket of derivations along a morphism)
    """
    exit_code = 4


class AlgebraMismatchError(SullivanError):
    """
    The operands belong to different algebras
    """


class PreconditionError(SullivanError):
    """
    The argument does not satisfy the precondition of an operation
    """


class NilpotencyError(SullivanError):
    """
    A series that has to terminate by nilpotence did not do that.
    Indicates the violation of an internal invariant.
    """


class CatalogError(SullivanError):
    """
    Unknown catalog key or bad parameters for the catalog entry
    """
    exit_code = 2


# the input file was not found
EXIT_CODE_NO_FILE = 5
