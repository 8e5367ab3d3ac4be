"""Exception types shared across the toolkit."""


class LvacError(Exception):
    """Base class for all toolkit errors."""


class ShapeError(LvacError, ValueError):
    """Tensor shape or extent-divisibility violation."""


class ConfigError(LvacError, ValueError):
    """Invalid or inconsistent configuration."""


class DomainError(LvacError, ValueError):
    """Input value outside an operation's documented domain."""


class DecodeError(LvacError):
    """Corrupt or truncated bitstream.

    Carries the byte offset at which parsing failed, when known.
    """

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class ParameterMismatchError(DecodeError):
    """Bitstream was produced with a different model or configuration."""
