"""Exception types shared across the package."""


class SoundTextureError(Exception):
    """Base class for all errors raised by this package."""


class AudioFormatError(SoundTextureError):
    """Unsupported, malformed, or out-of-contract audio data or WAV file."""


class ConfigError(SoundTextureError):
    """Invalid configuration value or inconsistent configuration combination."""


class FingerprintMismatchError(SoundTextureError):
    """Texture parameters were extracted under a different analysis pipeline."""
