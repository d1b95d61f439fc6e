#!/usr/bin/env python3
"""Regenerate src/stopcurate/chartab.py from the running Python's Unicode data.

The scanner backends (pure Python and the compiled kernel) both read the
generated table, so segmentation cannot drift between them.  Re-run this
script only when bumping the supported Unicode version, then commit the
result.
"""

from __future__ import annotations

import sys
import unicodedata
from pathlib import Path

OTHER, LETTER, MARK, DIGIT, CONNECTOR, APOS, SPACE = range(7)

_LETTER_CATS = frozenset({"Lu", "Ll", "Lt", "Lm", "Lo"})
_MARK_CATS = frozenset({"Mn", "Mc", "Me"})

# Only the two non-letter apostrophes; U+02BC is category Lm and stays LETTER.
_APOS_CODEPOINTS = frozenset({0x0027, 0x2019})


def classify(cp: int) -> int:
    if cp in _APOS_CODEPOINTS:
        return APOS
    ch = chr(cp)
    cat = unicodedata.category(ch)
    if cat in _LETTER_CATS:
        return LETTER
    if cat in _MARK_CATS:
        return MARK
    if cat == "Nd":
        return DIGIT
    if cat == "Pc":
        return CONNECTOR
    if ch.isspace():
        return SPACE
    return OTHER


def simple_fold(cp: int) -> str | None:
    """Single-codepoint case fold: C+S statuses, never the multi-char F maps."""
    ch = chr(cp)
    cf = ch.casefold()
    if len(cf) == 1:
        folded = cf
    else:
        lo = ch.lower()
        folded = lo if len(lo) == 1 else ch
    return folded if folded != ch else None


def build_breaks() -> list[tuple[int, int]]:
    breaks: list[tuple[int, int]] = []
    prev = -1
    for cp in range(0x110000):
        cls = classify(cp)
        if cls != prev:
            breaks.append((cp, cls))
            prev = cls
    return breaks


def build_fold_pairs() -> list[tuple[int, str]]:
    pairs = []
    for cp in range(0x110000):
        folded = simple_fold(cp)
        if folded is not None:
            pairs.append((cp, folded))
    return pairs


def emit(out: Path) -> None:
    breaks = build_breaks()
    folds = build_fold_pairs()

    starts = ",".join(str(s) for s, _ in breaks)
    classes = bytes(c for _, c in breaks)
    fold_blob = "".join(chr(cp) + repl for cp, repl in folds)

    lines = [
        '"""Character classification and case-fold tables for word scanning.',
        "",
        "Generated by tools/gen_chartab.py; do not edit by hand.",
        f"Unicode data version: {unicodedata.unidata_version}",
        '"""',
        "",
        "OTHER, LETTER, MARK, DIGIT, CONNECTOR, APOS, SPACE = range(7)",
        "",
        f"UNIDATA_VERSION = {unicodedata.unidata_version!r}",
        "",
        "_STARTS = (",
    ]
    # 16 starts per line keeps the file diffable
    start_vals = [s for s, _ in breaks]
    for i in range(0, len(start_vals), 16):
        lines.append("    " + ",".join(str(v) for v in start_vals[i : i + 16]) + ",")
    lines.append(")")
    lines.append("")
    lines.append(f"_CLASSES = {classes!r}")
    lines.append("")
    lines.append("# Alternating (source char, folded char) pairs; all maps are 1:1.")
    lines.append(f"_FOLD_BLOB = {ascii(fold_blob)}")
    lines.append("")
    lines.append(
        '''
def _build_table() -> bytes:
    table = bytearray(0x110000)
    starts = _STARTS
    classes = _CLASSES
    for i in range(len(starts) - 1):
        cls = classes[i]
        if cls:
            table[starts[i] : starts[i + 1]] = bytes([cls]) * (starts[i + 1] - starts[i])
    last = len(starts) - 1
    if classes[last]:
        table[starts[last] :] = bytes([classes[last]]) * (0x110000 - starts[last])
    return bytes(table)


WORD_CLASS_TABLE = _build_table()

SIMPLE_FOLD = {ord(src): dst for src, dst in zip(_FOLD_BLOB[::2], _FOLD_BLOB[1::2])}
'''.rstrip()
    )
    lines.append("")
    out.write_text("\n".join(lines), encoding="utf-8")
    print(f"wrote {out}: {len(breaks)} intervals, {len(folds)} fold entries")


if __name__ == "__main__":
    target = Path(__file__).resolve().parent.parent / "src" / "stopcurate" / "chartab.py"
    if len(sys.argv) > 1:
        target = Path(sys.argv[1])
    emit(target)
