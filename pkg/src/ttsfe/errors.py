"""Exception types shared across the frontend modules."""


class FrontendError(Exception):
    """Base class for all errors raised by this package."""


class MalformedCluster(FrontendError):
    """A Devanagari character sequence does not form valid aksharas."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class UnmappableChar(FrontendError):
    """A Devanagari codepoint has no entry in the transliteration table."""

    def __init__(self, char: str, position: int | None = None):
        super().__init__(f"no transliteration for {char!r} (U+{ord(char):04X})")
        self.char = char
        self.position = position


class UnparseableWx(FrontendError):
    """An ASCII string is not in the image grammar of the transliterator."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class MalformedLine(FrontendError):
    """A data file line could not be parsed."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class OutOfRange(FrontendError):
    """A numeric value falls outside the supported expansion range."""


class ConfigError(FrontendError):
    """Pipeline or service configuration is unusable (missing data files etc.)."""


class UnknownSpan(FrontendError):
    """A span does not identify a flagged misspelling in the report."""


class NotASuggestion(FrontendError):
    """The chosen replacement is not among the span's suggestions."""
