"""Exception hierarchy shared by the library, the CLI and the HTTP server."""

from __future__ import annotations


class SteinbergError(Exception):
    """Base class for every error raised by steinberg_rs."""


class DomainError(SteinbergError, ValueError):
    """An input violates an operation's precondition."""


class ResourceLimitError(DomainError):
    """An enumeration would exceed the configured size bound."""


class NotInImageError(DomainError):
    """A triple does not come from any partial permutation."""


class InconsistentCountsError(DomainError):
    """Signed column counts do not describe any signed Young diagram."""


class InternalInconsistencyError(SteinbergError, RuntimeError):
    """A post-check that must hold by construction failed."""


class GenericityUndecidedError(SteinbergError, RuntimeError):
    """Random fiber samples did not merge into a valid generic profile."""
