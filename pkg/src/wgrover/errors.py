"""Exception types shared across the package.

The CLI maps these onto stable exit codes: validation problems exit 1,
I/O problems exit 2 (plain OSError), numeric problems such as a missing
peak exit 3.
"""


class DomainError(ValueError):
    """Input outside the mathematically valid domain (bad N, degenerate amplitude, ...)."""


class LabelNotFoundError(DomainError):
    """A basis label that does not exist in the distribution."""


class NoPeakError(RuntimeError):
    """Success probability never reached a local maximum within the iteration budget."""


class ConsistencyError(RuntimeError):
    """A quantity the evolution must preserve was violated (probability above 1,
    state outside span{D, e_k}); signals an internal bug rather than bad input."""
