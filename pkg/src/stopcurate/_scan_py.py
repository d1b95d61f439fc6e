"""Pure-Python word scanner, the fallback twin of the compiled kernel.

Must stay behaviourally identical to ``_scan.pyx``; both read the generated
class table in :mod:`stopcurate.chartab`.  Segmentation rule: a word is a
maximal run of letters, combining marks (non-initial), decimal digits and
connector punctuation, with U+0027/U+2019 joining only between letters.
U+02BC is a letter outright unless apostrophe joining is disabled.
"""

from __future__ import annotations

from .chartab import APOS, CONNECTOR, DIGIT, LETTER, MARK, SPACE, WORD_CLASS_TABLE


def scan(
    text: str,
    keep_apostrophes: bool = True,
    emit_symbols: bool = False,
) -> list[tuple[str, bool, bool]]:
    """Segment ``text`` into (token, has_letter, has_digit) triples.

    Whitespace is never emitted.  Non-word characters come back as
    single-character symbol tokens only when ``emit_symbols`` is set.
    """
    table = WORD_CLASS_TABLE
    tokens: list[tuple[str, bool, bool]] = []
    n = len(text)
    i = 0
    while i < n:
        cp = ord(text[i])
        cls = table[cp]
        if cls == LETTER and cp == 0x02BC and not keep_apostrophes:
            cls = 0  # demote the modifier apostrophe to a plain symbol
        if cls == LETTER or cls == DIGIT or cls == CONNECTOR:
            start = i
            has_letter = cls == LETTER
            has_digit = cls == DIGIT
            i += 1
            while i < n:
                cp = ord(text[i])
                c = table[cp]
                if c == LETTER:
                    if cp == 0x02BC and not keep_apostrophes:
                        break
                    has_letter = True
                elif c == DIGIT:
                    has_digit = True
                elif c == MARK or c == CONNECTOR:
                    pass
                elif (
                    c == APOS
                    and keep_apostrophes
                    and table[ord(text[i - 1])] in (LETTER, MARK)
                    and i + 1 < n
                    and table[ord(text[i + 1])] == LETTER
                ):
                    pass
                else:
                    break
                i += 1
            tokens.append((text[start:i], has_letter, has_digit))
        elif cls == SPACE:
            i += 1
        else:
            if emit_symbols:
                tokens.append((text[i], False, False))
            i += 1
    return tokens
