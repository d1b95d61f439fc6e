"""Exception types raised by the library.

CLI exit-code mapping: usage mistakes exit 1, any :class:`StopcurateError`
raised while processing data exits 2.
"""

from __future__ import annotations


class StopcurateError(Exception):
    """Base class for all data/processing errors in this package."""


class EmptyInputError(StopcurateError):
    """No usable input: zero files matched, zero words loaded, etc."""


class DecodeError(StopcurateError):
    """A file is not valid UTF-8.

    Attributes:
        failures: list of (path, byte_offset) pairs, one per bad file.
    """

    def __init__(self, failures: list[tuple[str, int]]):
        self.failures = list(failures)
        detail = "; ".join(f"{path} (byte offset {off})" for path, off in self.failures)
        super().__init__(f"invalid UTF-8 in {len(self.failures)} file(s): {detail}")


class JsonlFormatError(StopcurateError):
    """A JSONL record is malformed or missing a required field."""

    def __init__(self, path: str, line_no: int, reason: str):
        self.path = path
        self.line_no = line_no
        super().__init__(f"{path}:{line_no}: {reason}")


class EmptyVocabularyError(StopcurateError):
    """Every document tokenized to zero tokens."""


class EmptyPoolError(StopcurateError):
    """Candidate thresholds excluded every term."""


class MetricInapplicableError(StopcurateError):
    """The corpus does not meet a metric's structural requirements."""

    def __init__(self, metric: str, reason: str):
        self.metric = metric
        self.reason = reason
        super().__init__(f"metric {metric} inapplicable: {reason}")


class PoolMismatchError(StopcurateError):
    """Rankings to be fused do not cover the same candidate pool."""

    def __init__(self, symmetric_difference: int):
        self.symmetric_difference = symmetric_difference
        super().__init__(
            f"rankings cover mismatched pools ({symmetric_difference} term(s) differ)"
        )


class LanguageMismatchError(StopcurateError):
    """Operands carry different language codes."""


class RunMismatchError(StopcurateError):
    """Review sheets derive from different extraction runs."""


class StaleCandidateError(StopcurateError):
    """A candidate term does not occur in the supplied corpus."""

    def __init__(self, term: str):
        self.term = term
        super().__init__(f"candidate term {term!r} does not occur in the corpus")


class StoreVersionError(StopcurateError):
    """Optimistic version check failed when writing the curated store."""

    def __init__(self, lang: str, expected: int, found: int):
        self.lang = lang
        self.expected = expected
        self.found = found
        super().__init__(
            f"curated store for {lang!r} is at version {found}, expected {expected}"
        )
