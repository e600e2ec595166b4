"""Exception types shared across the package."""


class TLDError(ValueError):
    """Base class for all errors raised by :mod:`tld`."""


class InvalidRankError(TLDError):
    pass


class InvalidGeneratorError(TLDError):
    pass


class PreconditionError(TLDError):
    """An operation was called on input outside its domain (e.g. a non-reduced word)."""


class DimensionError(TLDError):
    """Operands live on different strand counts or in different algebras."""


class ParityError(TLDError):
    pass


class ParseError(TLDError):
    pass
