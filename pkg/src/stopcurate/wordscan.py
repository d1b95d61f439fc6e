"""Deterministic Unicode word tokenization for corpus statistics.

Segmentation follows Unicode word-boundary behaviour for alphabetic scripts,
tailored for African orthographies: apostrophes (U+0027, U+2019, U+02BC) can
be word-internal letters, which matters for Hausa words like ``ʼyanʼuwa``.
Tokens are NFC-normalized and case-folded by default so tone-marked Yorùbá
vowels compare equal regardless of how the source text was encoded.

The per-character scan runs in a compiled kernel when the extension built
from ``_scan.pyx`` is importable, and in the pure-Python twin otherwise.
Set ``STOPCURATE_PURE=1`` to force the fallback.
"""

from __future__ import annotations

import os
import unicodedata
from dataclasses import dataclass, fields

from .chartab import SIMPLE_FOLD

if os.environ.get("STOPCURATE_PURE"):
    from . import _scan_py as _backend

    SCANNER_BACKEND = "python"
else:
    try:
        from . import _scan as _backend  # type: ignore[attr-defined]

        SCANNER_BACKEND = "c"
    except ImportError:
        from . import _scan_py as _backend

        SCANNER_BACKEND = "python"

_SEGMENTATION_RULES = ("uax29-words",)


def scanner_backend() -> str:
    """Which scan implementation is active: ``"c"`` or ``"python"``."""
    return SCANNER_BACKEND


@dataclass(frozen=True)
class TokenizerConfig:
    """Immutable tokenizer settings, recorded alongside every extraction run.

    word_segmentation: rule id; only "uax29-words" is implemented (word
        boundaries per Unicode UAX #29 for alphabetic text, plus the
        apostrophe-joining tailoring below; intra-word colon/middle-dot
        joining is intentionally not applied).
    nfc_normalize: canonical-compose every token (NFC, not NFKC).
    case_fold: single-codepoint Unicode case folding.
    keep_internal_apostrophe: U+0027 and U+2019 join when flanked by
        letters; U+02BC is kept as a consonant letter.  When false, all
        three split words.
    drop_tokens_with_digits: discard any token containing a decimal digit.
    drop_punctuation_tokens: discard tokens containing no letter or digit.
    """

    word_segmentation: str = "uax29-words"
    nfc_normalize: bool = True
    case_fold: bool = True
    keep_internal_apostrophe: bool = True
    drop_tokens_with_digits: bool = True
    drop_punctuation_tokens: bool = True

    def __post_init__(self):
        if self.word_segmentation not in _SEGMENTATION_RULES:
            raise ValueError(
                f"unknown segmentation rule {self.word_segmentation!r}; "
                f"supported: {', '.join(_SEGMENTATION_RULES)}"
            )

    def to_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    @classmethod
    def from_dict(cls, data: dict) -> "TokenizerConfig":
        known = {f.name for f in fields(cls)}
        unknown = set(data) - known
        if unknown:
            raise ValueError(f"unknown tokenizer config keys: {sorted(unknown)}")
        return cls(**data)


def _stabilize(token: str, cfg: TokenizerConfig) -> str:
    # Iterate NFC + fold to a fixpoint; one extra pass normally confirms
    # stability, and the bound keeps adversarial input deterministic.
    cur = token
    for _ in range(4):
        nxt = cur
        if cfg.nfc_normalize:
            nxt = unicodedata.normalize("NFC", nxt)
        if cfg.case_fold:
            nxt = nxt.translate(SIMPLE_FOLD)
        if nxt == cur:
            break
        cur = nxt
    return cur


def normalize_token(token: str, cfg: TokenizerConfig | None = None) -> str:
    """Normalize one token per the config; idempotent by construction."""
    if not token:
        raise ValueError("token must be nonempty")
    return _stabilize(token, cfg or TokenizerConfig())


def tokenize(text: str, cfg: TokenizerConfig | None = None) -> list[str]:
    """Segment and normalize ``text`` into word tokens, surface order kept."""
    if cfg is None:
        cfg = TokenizerConfig()
    if cfg.nfc_normalize:
        text = unicodedata.normalize("NFC", text)
    raw = _backend.scan(
        text,
        cfg.keep_internal_apostrophe,
        not cfg.drop_punctuation_tokens,
    )
    out: list[str] = []
    for token, has_letter, has_digit in raw:
        if has_digit and cfg.drop_tokens_with_digits:
            continue
        if not has_letter and not has_digit and cfg.drop_punctuation_tokens:
            continue
        out.append(_stabilize(token, cfg))
    return out
