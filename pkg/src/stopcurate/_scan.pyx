# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled word scanner, the hot-loop twin of ``_scan_py``.

Behaviour must match the pure-Python fallback exactly; both read the
generated class table in :mod:`stopcurate.chartab`.
"""

from libc.string cimport memcpy

from .chartab import WORD_CLASS_TABLE
from . import chartab as _ct

cdef int LETTER = _ct.LETTER
cdef int MARK = _ct.MARK
cdef int DIGIT = _ct.DIGIT
cdef int CONNECTOR = _ct.CONNECTOR
cdef int APOS = _ct.APOS
cdef int SPACE = _ct.SPACE

cdef unsigned char _TABLE[0x110000]
_tbl_bytes = WORD_CLASS_TABLE
if len(_tbl_bytes) != 0x110000:
    raise ImportError("word class table has unexpected size")
memcpy(_TABLE, <const unsigned char*> _tbl_bytes, 0x110000)


def scan(unicode text, bint keep_apostrophes=True, bint emit_symbols=False):
    """Segment ``text`` into (token, has_letter, has_digit) triples."""
    cdef Py_ssize_t i = 0, start
    cdef Py_ssize_t n = len(text)
    cdef Py_UCS4 cp
    cdef int cls, c
    cdef bint has_letter, has_digit
    cdef list tokens = []
    while i < n:
        cp = text[i]
        cls = _TABLE[cp]
        if cls == LETTER and cp == 0x02BC and not keep_apostrophes:
            cls = 0
        if cls == LETTER or cls == DIGIT or cls == CONNECTOR:
            start = i
            has_letter = cls == LETTER
            has_digit = cls == DIGIT
            i += 1
            while i < n:
                cp = text[i]
                c = _TABLE[cp]
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
                    and (_TABLE[<Py_UCS4> text[i - 1]] == LETTER
                         or _TABLE[<Py_UCS4> text[i - 1]] == MARK)
                    and i + 1 < n
                    and _TABLE[<Py_UCS4> text[i + 1]] == LETTER
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
