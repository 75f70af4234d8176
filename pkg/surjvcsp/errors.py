#
# surjvcsp/errors.py
#
"""
Exception classes raised by surjvcsp, each tied to a command line exit
code. The root class can be indexed by code or by label to get the
canonical class for it:

    raise SurjError[3]("instance too large")
    raise SurjError['parse']("bad header")
"""

from surjvcsp.utils.metaclasses import ItemizedMeta


class SurjError(Exception, metaclass=ItemizedMeta):
    """
    Base exception of the package.

    Subclasses set ``exit_code`` and ``label``; the classes registered in
    ``code_to_error`` are the canonical ones returned by item lookup.
    """

    exit_code = 1
    label = 'error'
    code_to_error = dict()

    @classmethod
    def get_from_code(cls, code):
        """
        Get the canonical exception class for an exit code, or None.
        """
        return cls.code_to_error.get(code)

    @classmethod
    def _getitem_(cls, key):
        if isinstance(key, int):
            err = cls.get_from_code(key)
            if err is not None:
                return err
        elif isinstance(key, str):
            for error in cls.code_to_error.values():
                if error.label == key:
                    return error
        raise InvalidErrorLookup("no error registered for %r" % (key, ))

    @classmethod
    def _contains_(cls, key):
        try:
            cls._getitem_(key)
        except InvalidErrorLookup:
            return False
        return True


class InvalidErrorLookup(SurjError, KeyError):
    label = 'lookup'


class ArgumentError(SurjError, ValueError):
    """An argument is outside the domain of the operation."""
    exit_code = 1
    label = 'usage'


class NoSolutionError(ArgumentError):
    """The instance has no proper nonempty subset to offer as a solution."""


class StateError(SurjError):
    """Operation called while the instance is in the wrong lambda class."""


class ApproximationError(SurjError):
    """A constructed certificate fails its own sandwich check."""


class ParseError(SurjError):
    """
    Malformed input text. Carries the 1-based line and column of the
    offending token.
    """
    exit_code = 2
    label = 'parse'

    def __init__(self, msg, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            msg = "line %d, column %d: %s" % (line, column or 1, msg)
        super().__init__(msg)


class DataError(ParseError):
    """Well formed input whose content is invalid."""


class ResourceGuardError(SurjError):
    """A size guard was exceeded; the operation would be exponential."""
    exit_code = 3
    label = 'resource'


class DisconnectedGraphError(ResourceGuardError):
    pass


class VerifyMismatch(SurjError):
    """The solver and the brute force oracle disagree."""
    exit_code = 4
    label = 'mismatch'


SurjError.code_to_error = {
    err.exit_code: err
    for err in (ArgumentError, ParseError, ResourceGuardError, VerifyMismatch)
}
