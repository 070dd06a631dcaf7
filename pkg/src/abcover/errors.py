"""Exception types shared across the package."""


class StructuralError(ValueError):
    """Malformed data: mismatched dimensions, bad bits, unparseable input."""


class UnsupportedConfigurationError(Exception):
    """Well-formed input outside the range this tool models."""


class CoverDataError(Exception):
    """Branch data does not define a cover."""


class NotTwoDivisibleError(CoverDataError):
    """Some character's branch sum has an odd coefficient."""


class DegenerateCoverError(CoverDataError):
    """Some nontrivial character receives the zero class."""


class TableIntegrityError(Exception):
    """Pipeline output disagrees with the closed-form family table."""


class InternalConsistencyError(Exception):
    """An exactness tripwire fired where an integer result is forced."""
