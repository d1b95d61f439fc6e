"""Load monolingual documents into an immutable, language-tagged corpus.

Only UTF-8 is accepted, and only two layouts: plain text (one document per
file) and JSONL (one document per line).  Language identification is the
caller's job; the ``lang`` argument is asserted, never detected.
"""

from __future__ import annotations

import glob
import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path, PurePosixPath

from .errors import DecodeError, EmptyInputError, JsonlFormatError


@dataclass(frozen=True)
class Document:
    """One text unit with language, domain and source metadata."""

    id: str
    text: str
    lang: str
    domain: str
    source: str

    def __post_init__(self):
        if not self.id:
            raise ValueError("document id must be nonempty")
        if not self.text.strip():
            raise ValueError(f"document {self.id!r} has empty text")
        if not self.lang:
            raise ValueError(f"document {self.id!r} has empty lang")


@dataclass(frozen=True)
class Corpus:
    """An ordered, immutable collection of same-language documents."""

    lang: str
    documents: tuple[Document, ...]
    domains: frozenset[str] = field(init=False)

    def __post_init__(self):
        if not self.documents:
            raise ValueError("a corpus must contain at least one document")
        seen: set[str] = set()
        for doc in self.documents:
            if doc.lang != self.lang:
                raise ValueError(
                    f"document {doc.id!r} has lang {doc.lang!r}, corpus is {self.lang!r}"
                )
            if doc.id in seen:
                raise ValueError(f"duplicate document id {doc.id!r}")
            seen.add(doc.id)
        object.__setattr__(self, "domains", frozenset(d.domain for d in self.documents))

    def __len__(self) -> int:
        return len(self.documents)

    def __iter__(self):
        return iter(self.documents)

    def fingerprint(self) -> str:
        """Content hash of the document stream, stable across runs."""
        h = hashlib.sha256()
        for doc in self.documents:
            for part in (doc.id, doc.lang, doc.domain, doc.text):
                h.update(part.encode("utf-8"))
                h.update(b"\x00")
            h.update(b"\x01")
        return h.hexdigest()


def _expand_paths(paths: list[str]) -> list[str]:
    """Resolve literal paths and glob patterns, order-stable and deduplicated."""
    out: list[str] = []
    seen: set[str] = set()
    for entry in paths:
        if glob.has_magic(entry):
            matches = sorted(glob.glob(entry, recursive=True))
        else:
            matches = [entry] if os.path.exists(entry) else []
        for m in matches:
            if os.path.isfile(m):
                ap = os.path.abspath(m)
                if ap not in seen:
                    seen.add(ap)
                    out.append(ap)
    return out


def _read_utf8(path: str) -> str:
    data = Path(path).read_bytes()
    try:
        return data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise DecodeError([(path, exc.start)]) from None


def ingest_plaintext(paths: list[str], lang: str, domain: str) -> Corpus:
    """Build a corpus with one document per matched UTF-8 text file.

    Document ids are forward-slash relative paths from the common parent
    directory of all matched files, so a corpus is portable across machines.
    Files that are empty or not valid UTF-8 fail the whole ingest; decode
    failures for all files are collected and reported together.
    """
    files = _expand_paths(paths)
    if not files:
        raise EmptyInputError(f"no files matched {paths!r}")
    base = os.path.commonpath(files) if len(files) > 1 else os.path.dirname(files[0])

    decode_failures: list[tuple[str, int]] = []
    docs: list[Document] = []
    for path in files:
        try:
            text = _read_utf8(path)
        except DecodeError as exc:
            decode_failures.extend(exc.failures)
            continue
        if not text.strip():
            raise EmptyInputError(f"file {path} is empty after trimming whitespace")
        doc_id = PurePosixPath(Path(path).relative_to(base).as_posix()).as_posix()
        docs.append(Document(id=doc_id, text=text, lang=lang, domain=domain, source=path))
    if decode_failures:
        raise DecodeError(decode_failures)
    return Corpus(lang=lang, documents=tuple(docs))


def ingest_jsonl(
    path: str,
    field_map: dict[str, str],
    lang: str,
    default_domain: str,
) -> Corpus:
    """Build a corpus from a line-delimited JSON file.

    ``field_map`` must name the text field and may name id and domain fields,
    e.g. ``{"text": "body", "id": "uid", "domain": "section"}``.  Records
    without an id field get ``line-<n>`` (1-based); records without a domain
    field get ``default_domain``.
    """
    if "text" not in field_map:
        raise ValueError("field_map must map 'text' to a JSON key")
    text_key = field_map["text"]
    id_key = field_map.get("id")
    domain_key = field_map.get("domain")

    raw = _read_utf8(path)
    docs: list[Document] = []
    for line_no, line in enumerate(raw.splitlines(), start=1):
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise JsonlFormatError(path, line_no, f"malformed JSON: {exc.msg}") from None
        if not isinstance(record, dict):
            raise JsonlFormatError(path, line_no, "record is not a JSON object")
        if text_key not in record:
            raise JsonlFormatError(path, line_no, f"missing text field {text_key!r}")
        text = record[text_key]
        if not isinstance(text, str):
            raise JsonlFormatError(path, line_no, f"field {text_key!r} is not a string")
        doc_id = str(record[id_key]) if id_key and id_key in record else f"line-{line_no}"
        domain = (
            str(record[domain_key])
            if domain_key and domain_key in record
            else default_domain
        )
        try:
            docs.append(
                Document(
                    id=doc_id, text=text, lang=lang, domain=domain,
                    source=f"{os.path.abspath(path)}#L{line_no}",
                )
            )
        except ValueError as exc:
            raise JsonlFormatError(path, line_no, str(exc)) from None
    if not docs:
        raise EmptyInputError(f"{path} contains no records")
    return Corpus(lang=lang, documents=tuple(docs))


def corpus_summary(corpus: Corpus) -> dict:
    """Document count, per-domain histogram and total UTF-8 text bytes."""
    histogram: dict[str, int] = {}
    total_bytes = 0
    for doc in corpus.documents:
        histogram[doc.domain] = histogram.get(doc.domain, 0) + 1
        total_bytes += len(doc.text.encode("utf-8"))
    return {
        "doc_count": len(corpus.documents),
        "domain_histogram": dict(sorted(histogram.items())),
        "total_bytes": total_bytes,
    }


def write_corpus_jsonl(corpus: Corpus, path: str) -> None:
    """Persist a corpus as one sorted-key JSON object per line."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for doc in corpus.documents:
            record = {
                "id": doc.id,
                "text": doc.text,
                "lang": doc.lang,
                "domain": doc.domain,
                "source": doc.source,
            }
            fh.write(json.dumps(record, ensure_ascii=False, sort_keys=True))
            fh.write("\n")


def read_corpus_jsonl(path: str) -> Corpus:
    """Load a corpus previously written by :func:`write_corpus_jsonl`."""
    raw = _read_utf8(path)
    docs: list[Document] = []
    lang: str | None = None
    for line_no, line in enumerate(raw.splitlines(), start=1):
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise JsonlFormatError(path, line_no, f"malformed JSON: {exc.msg}") from None
        missing = {"id", "text", "lang", "domain", "source"} - set(record)
        if missing:
            raise JsonlFormatError(path, line_no, f"missing fields {sorted(missing)}")
        if lang is None:
            lang = record["lang"]
        docs.append(
            Document(
                id=record["id"], text=record["text"], lang=record["lang"],
                domain=record["domain"], source=record["source"],
            )
        )
    if not docs:
        raise EmptyInputError(f"{path} contains no records")
    assert lang is not None
    return Corpus(lang=lang, documents=tuple(docs))
