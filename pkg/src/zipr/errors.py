"""Exception types shared across the zipr package."""


class ZiprError(Exception):
    """Base class for every error raised by zipr."""


class InvalidInputError(ZiprError, ValueError):
    """Input violates an operation's precondition (empty, non-finite, ...)."""


class SymmetryError(ZiprError, ValueError):
    """Spectrum is not conjugate-symmetric: its inverse has a non-real residue."""


class UnsupportedCombinationError(ZiprError, ValueError):
    """Transform/shape combination not supported (FWHT needs power-of-two lengths)."""


class EncodeError(ZiprError):
    """Symbol stream contains a value outside the code's alphabet."""


class DecodeError(ZiprError):
    """Bit payload is truncated or does not decode under the given code."""


class ImageFormatError(ZiprError):
    """Malformed or unsupported PGM/PPM/ZVOL data."""


class ContainerError(ZiprError):
    """Container-integrity violation detected while parsing or untiling."""


class BadMagicError(ContainerError):
    """Container does not start with the ZIPR magic."""


class UnsupportedVersionError(ContainerError):
    """Container declares a format version this build does not understand."""


class TruncatedContainerError(ContainerError):
    """Container ends before its declared contents."""


class KraftViolationError(ContainerError):
    """Serialized code table does not satisfy the Kraft equality."""


class ConfigError(ZiprError):
    """Invalid command-line configuration."""
