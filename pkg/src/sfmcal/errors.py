"""Exception hierarchy shared by all sfmcal modules.

Everything raised on bad input derives from :class:`InputError` so the CLI
can map it to exit status 2; numerical failures map to exit status 3.
"""


class SfmcalError(Exception):
    """Base class for all sfmcal errors."""


class InputError(SfmcalError):
    """Invalid input data, file, or argument (CLI exit status 2)."""


class SchemaError(InputError):
    """A structured file does not match its schema (missing/extra/bad field)."""


class DomainError(InputError):
    """A value violates a domain constraint (non-positive price, bad probability...)."""


class ContinuityError(InputError):
    """Annual series has a gap or non-increasing years."""


class InsufficientDataError(InputError):
    """Too few observations for the requested operation."""


class DegenerateMomentsError(InputError):
    """Moments carry the degenerate-variance flag; calibration refuses to run."""


class SingularityError(SfmcalError):
    """A construction or elimination hits a vanishing coefficient."""


class NoRootError(SfmcalError):
    """Bracket scan found no sign change inside the search bounds."""
