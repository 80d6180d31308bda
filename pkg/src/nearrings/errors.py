"""Exception types shared across the package."""


class NearringError(Exception):
    """Base class for all errors raised by this package."""


class CatalogMissError(NearringError, LookupError):
    """Requested (order, name) is not in the built-in group catalog."""


class ValidationError(NearringError):
    """A structure failed an axiom or construction precondition.

    The message carries a witness (the offending triple/pair) whenever one
    exists, so property-test failures are directly actionable.
    """


class IndeterminateError(NearringError):
    """A non-exhaustive check was requested but no provenance is available."""


class TheoremViolationError(NearringError):
    """A brute-forced result disagrees with its predicted closed form."""
