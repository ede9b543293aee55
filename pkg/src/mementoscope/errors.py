"""Error types shared across the package.

Every error carries a short machine-readable ``code`` so the CLI and the
REST service can map failures onto a uniform envelope.
"""


class MementoscopeError(Exception):
    """Base class for all package errors."""

    code = "ERROR"

    def __init__(self, message: str = ""):
        super().__init__(message or self.code)
        self.message = message or self.code


class UnparseableDate(MementoscopeError):
    code = "UNPARSEABLE_DATE"


class MalformedDatestring(MementoscopeError):
    code = "MALFORMED_DATESTRING"


class NoRedirectSupport(MementoscopeError):
    code = "NO_REDIRECT_SUPPORT"


class EmptyTimeMap(MementoscopeError):
    code = "EMPTY_TIMEMAP"


class MalformedTimeMap(MementoscopeError):
    code = "MALFORMED_TIMEMAP"


class InvalidScenario(MementoscopeError):
    code = "INVALID_SCENARIO"


class RootFetchFailed(MementoscopeError):
    code = "ROOT_FETCH_FAILED"

    def __init__(self, message: str = "", cause: str | None = None):
        super().__init__(message)
        self.cause = cause


class CorruptStore(MementoscopeError):
    code = "CORRUPT_STORE"

    def __init__(self, message: str = "", offset: int | None = None):
        super().__init__(message)
        self.offset = offset


class StoreConflict(MementoscopeError):
    code = "STORE_CONFLICT"
