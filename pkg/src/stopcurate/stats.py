"""Exact term statistics over a tokenized corpus.

Counting is split into per-document partials merged by an associative,
commutative operation, which is what makes parallel counting sound; the
merge itself is exposed for callers that want to fan out.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

from .corpus import Corpus
from .errors import EmptyPoolError, EmptyVocabularyError
from .wordscan import TokenizerConfig, tokenize


@dataclass
class TermStats:
    """Aggregated counts for one corpus under one tokenizer config.

    counts[t] is the collection count, doc_counts[t][doc_id] the per-document
    count, domain_counts[t][domain] the per-domain count, domain_tokens the
    per-domain token totals and doc_freq[t] the document frequency.  Treat
    instances as immutable once built.
    """

    lang: str
    tokenizer_cfg: TokenizerConfig
    n_docs: int
    total_tokens: int
    counts: dict[str, int]
    doc_counts: dict[str, dict[str, int]]
    domain_counts: dict[str, dict[str, int]]
    domain_tokens: dict[str, int]
    doc_domains: dict[str, str]
    doc_freq: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.doc_freq:
            self.doc_freq = {t: len(d) for t, d in self.doc_counts.items()}

    @property
    def n_domains(self) -> int:
        return len(self.domain_tokens)

    @property
    def domain_docs(self) -> dict[str, int]:
        """Number of documents per domain."""
        return dict(Counter(self.doc_domains.values()))

    @property
    def vocabulary(self) -> set[str]:
        return set(self.counts)

    def validate(self) -> None:
        """Check the internal accounting identities; raises on violation."""
        if sum(self.counts.values()) != self.total_tokens:
            raise AssertionError("sum of term counts != total tokens")
        if sum(self.domain_tokens.values()) != self.total_tokens:
            raise AssertionError("sum of domain token totals != total tokens")
        if self.n_docs != len(self.doc_domains):
            raise AssertionError("doc count != number of registered documents")
        for term, count in self.counts.items():
            if sum(self.doc_counts[term].values()) != count:
                raise AssertionError(f"per-document counts of {term!r} do not sum")
            if sum(self.domain_counts[term].values()) != count:
                raise AssertionError(f"per-domain counts of {term!r} do not sum")
            df = self.doc_freq[term]
            if not 1 <= df <= self.n_docs:
                raise AssertionError(f"df({term!r}) = {df} out of range")

    def to_dict(self) -> dict:
        return {
            "schema": "stopcurate.term_stats.v1",
            "lang": self.lang,
            "tokenizer_cfg": self.tokenizer_cfg.to_dict(),
            "n_docs": self.n_docs,
            "total_tokens": self.total_tokens,
            "counts": self.counts,
            "doc_counts": self.doc_counts,
            "domain_counts": self.domain_counts,
            "domain_tokens": self.domain_tokens,
            "doc_domains": self.doc_domains,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "TermStats":
        if data.get("schema") != "stopcurate.term_stats.v1":
            raise ValueError(f"unsupported stats schema {data.get('schema')!r}")
        return cls(
            lang=data["lang"],
            tokenizer_cfg=TokenizerConfig.from_dict(data["tokenizer_cfg"]),
            n_docs=data["n_docs"],
            total_tokens=data["total_tokens"],
            counts=data["counts"],
            doc_counts=data["doc_counts"],
            domain_counts=data["domain_counts"],
            domain_tokens=data["domain_tokens"],
            doc_domains=data["doc_domains"],
        )


@dataclass(frozen=True)
class CandidatePool:
    """Terms eligible for metric scoring, with the counts used for ties."""

    terms: frozenset[str]
    min_count: int
    min_df: int
    counts: dict[str, int]


def count_terms(corpus: Corpus, cfg: TokenizerConfig | None = None) -> TermStats:
    """Tokenize every document and aggregate exact counts."""
    if cfg is None:
        cfg = TokenizerConfig()
    parts = [_count_document(doc.id, doc.domain, tokenize(doc.text, cfg), corpus.lang, cfg)
             for doc in corpus.documents]
    stats = merge_stats(parts)
    if stats.total_tokens == 0:
        raise EmptyVocabularyError(
            f"all {stats.n_docs} documents tokenized to zero tokens"
        )
    return stats


def _count_document(
    doc_id: str, domain: str, tokens: list[str], lang: str, cfg: TokenizerConfig
) -> TermStats:
    counts = Counter(tokens)
    return TermStats(
        lang=lang,
        tokenizer_cfg=cfg,
        n_docs=1,
        total_tokens=len(tokens),
        counts=dict(counts),
        doc_counts={t: {doc_id: c} for t, c in counts.items()},
        domain_counts={t: {domain: c} for t, c in counts.items()},
        domain_tokens={domain: len(tokens)},
        doc_domains={doc_id: domain},
    )


def merge_stats(parts: list[TermStats]) -> TermStats:
    """Combine partial counts; associative and commutative over partitions."""
    if not parts:
        raise ValueError("nothing to merge")
    first = parts[0]
    counts: dict[str, int] = {}
    doc_counts: dict[str, dict[str, int]] = {}
    domain_counts: dict[str, dict[str, int]] = {}
    domain_tokens: dict[str, int] = {}
    doc_domains: dict[str, str] = {}
    total = 0
    for part in parts:
        if part.lang != first.lang:
            raise ValueError("cannot merge stats across languages")
        if part.tokenizer_cfg != first.tokenizer_cfg:
            raise ValueError("cannot merge stats produced by different tokenizers")
        for doc_id in part.doc_domains:
            if doc_id in doc_domains:
                raise ValueError(f"document {doc_id!r} counted twice")
        doc_domains.update(part.doc_domains)
        total += part.total_tokens
        for term, c in part.counts.items():
            counts[term] = counts.get(term, 0) + c
        for term, per_doc in part.doc_counts.items():
            tgt = doc_counts.setdefault(term, {})
            for doc_id, c in per_doc.items():
                tgt[doc_id] = tgt.get(doc_id, 0) + c
        for term, per_dom in part.domain_counts.items():
            tgt = domain_counts.setdefault(term, {})
            for dom, c in per_dom.items():
                tgt[dom] = tgt.get(dom, 0) + c
        for dom, c in part.domain_tokens.items():
            domain_tokens[dom] = domain_tokens.get(dom, 0) + c
    return TermStats(
        lang=first.lang,
        tokenizer_cfg=first.tokenizer_cfg,
        n_docs=len(doc_domains),
        total_tokens=total,
        counts=counts,
        doc_counts=doc_counts,
        domain_counts=domain_counts,
        domain_tokens=domain_tokens,
        doc_domains=doc_domains,
    )


def candidate_pool(stats: TermStats, min_count: int = 5, min_df: int = 3) -> CandidatePool:
    """Filter the vocabulary down to terms worth scoring.

    The default thresholds stop hapaxes and near-hapaxes from reaching the
    metrics, where tiny denominators produce spuriously extreme scores.
    """
    if min_count < 1 or min_df < 1:
        raise ValueError("min_count and min_df must be >= 1")
    kept = {
        t: c
        for t, c in stats.counts.items()
        if c >= min_count and stats.doc_freq[t] >= min_df
    }
    if not kept:
        raise EmptyPoolError(
            f"no term has count >= {min_count} and document frequency >= {min_df}; "
            "lower the thresholds"
        )
    return CandidatePool(
        terms=frozenset(kept),
        min_count=min_count,
        min_df=min_df,
        counts=kept,
    )
