"""Exception hierarchy shared across the package."""


class ArgonautError(Exception):
    """Base class for all package errors."""


class UnknownSentenceError(ArgonautError):
    """An operation referenced a sentence id not present in the framework."""


class FrameworkInvariantError(ArgonautError):
    """A framework violates a structural invariant (contrary map, rule refs...)."""


class OracleBoundExceededError(ArgonautError):
    """Brute-force enumeration refused: assumption count above the configured bound."""


class MalformedGraphError(ArgonautError):
    """An argument graph violates its invariants (self-loop, dangling edge...)."""


class MalformedDocumentError(ArgonautError):
    """A document is empty or cannot be read."""


class GraphFileError(ArgonautError):
    """A graph interchange file could not be parsed or has an unsupported version."""


class TransportError(ArgonautError):
    """A remote-client request failed in transit; the call may be retried."""


class ProtocolError(ArgonautError):
    """A remote client answered with a payload that violates the wire contract."""

    def __init__(self, message: str, body_excerpt: str = ""):
        if body_excerpt:
            message = f"{message} (body: {body_excerpt[:200]!r})"
        super().__init__(message)


class ClientUnavailableError(ArgonautError):
    """A required remote client is unreachable after retries."""


class ConfigError(ArgonautError):
    """A run configuration is invalid; the message names the offending field."""
