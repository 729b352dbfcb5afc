"""Error taxonomy.

Every error carries a machine-readable ``category`` used by the CLI to emit
structured diagnostics on stderr; library callers can catch the base class.
"""


class CasimirOpoError(Exception):
    """Base class for all package errors."""

    category = "error"


class InvalidConfigError(CasimirOpoError):
    """A configuration value violates a structural invariant."""

    category = "invalid-config"


class ParseError(CasimirOpoError):
    """A configuration or data file could not be parsed."""

    category = "parse"


class ModelValidityError(CasimirOpoError):
    """Inputs are outside the validity region of the physical model.

    Example: crystal length too large relative to the pump wavelength for the
    thin-crystal averaging to hold. Rejection is explicit, never silent.
    """

    category = "model-validity"


class DomainError(CasimirOpoError):
    """A closed form was evaluated outside its domain (e.g. above threshold)."""

    category = "domain"


class TruncationError(CasimirOpoError):
    """The mode basis is missing a partner mode required by the drive coupling."""

    category = "truncation"


class NumericalInstabilityError(CasimirOpoError):
    """State physicality or a build-time structural assertion failed."""

    category = "numerical-instability"


class InsufficientDataError(CasimirOpoError):
    """A detector was given a series too short to classify."""

    category = "insufficient-data"


class SchemaError(CasimirOpoError):
    """A data file is missing required columns or fields."""

    category = "schema"
