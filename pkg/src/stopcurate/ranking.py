"""Turn metric scores into rankings and fuse rankings into one candidate list.

Fusion is Borda-style mean rank: metric scores live on incommensurable
scales, so averaging ranks (never scores) keeps the result invariant under
any strictly increasing re-parameterization of an individual metric.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import PoolMismatchError, StopcurateError
from .jsonio import canon_dumps
from .metrics import MetricScore
from .stats import CandidatePool

DEFAULT_TOP_K = 200

CANDIDATES_SCHEMA = "stopcurate.candidates.v1"


@dataclass(frozen=True)
class RankedTerm:
    term: str
    rank: int
    score: float


@dataclass(frozen=True)
class Ranking:
    """A metric's pool terms in descending stopwordness order, ranks 1-based."""

    metric: str
    ordered: tuple[RankedTerm, ...]
    pool: CandidatePool


@dataclass(frozen=True)
class CandidateEntry:
    term: str
    fused_rank: int
    mean_rank: float
    per_metric: dict[str, tuple[int, float]]


@dataclass(frozen=True)
class CandidateList:
    """Fused, ranked stopword candidates plus the metadata to reproduce them."""

    lang: str
    entries: tuple[CandidateEntry, ...]
    run_meta: dict = field(default_factory=dict)

    def terms(self) -> list[str]:
        return [e.term for e in self.entries]

    def to_dict(self) -> dict:
        return {
            "schema": CANDIDATES_SCHEMA,
            "lang": self.lang,
            "entries": [
                {
                    "term": e.term,
                    "fused_rank": e.fused_rank,
                    "mean_rank": e.mean_rank,
                    "per_metric": {
                        m: {"rank": r, "score": s} for m, (r, s) in e.per_metric.items()
                    },
                }
                for e in self.entries
            ],
            "run_meta": self.run_meta,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CandidateList":
        if data.get("schema") != CANDIDATES_SCHEMA:
            raise ValueError(f"unsupported candidates schema {data.get('schema')!r}")
        entries = tuple(
            CandidateEntry(
                term=e["term"],
                fused_rank=e["fused_rank"],
                mean_rank=e["mean_rank"],
                per_metric={
                    m: (v["rank"], v["score"]) for m, v in e["per_metric"].items()
                },
            )
            for e in data["entries"]
        )
        return cls(lang=data["lang"], entries=entries, run_meta=data.get("run_meta", {}))

    def rank_fingerprint(self) -> bytes:
        """Canonical bytes of the ordering-relevant projection.

        Raw scores are excluded on purpose: re-parameterizing a metric
        changes its scores but must not change any rank, mean rank or the
        fused order, and this fingerprint is how tests pin that down.
        """
        proj = [
            {
                "term": e.term,
                "fused_rank": e.fused_rank,
                "mean_rank": e.mean_rank,
                "metric_ranks": {m: r for m, (r, _) in e.per_metric.items()},
            }
            for e in self.entries
        ]
        return canon_dumps({"lang": self.lang, "entries": proj}).encode("utf-8")


def rank_by_metric(score: MetricScore, pool: CandidatePool) -> Ranking:
    """Sort pool terms by descending score; ties go to the higher collection
    count, then to ascending codepoint order."""
    missing = pool.terms - set(score.scores)
    if missing:
        raise StopcurateError(
            f"metric {score.metric} lacks scores for {len(missing)} pool term(s), "
            f"e.g. {sorted(missing)[0]!r}"
        )
    counts = pool.counts
    ordered_terms = sorted(
        pool.terms, key=lambda t: (-score.scores[t], -counts[t], t)
    )
    ordered = tuple(
        RankedTerm(term=t, rank=i, score=score.scores[t])
        for i, t in enumerate(ordered_terms, start=1)
    )
    return Ranking(metric=score.metric, ordered=ordered, pool=pool)


def fuse_rankings(
    rankings: list[Ranking],
    k: int = DEFAULT_TOP_K,
    *,
    lang: str = "",
    run_meta: dict | None = None,
) -> CandidateList:
    """Mean-rank fusion of rankings over one shared pool, truncated to top-k."""
    if not rankings:
        raise ValueError("need at least one ranking to fuse")
    if k < 1:
        raise ValueError("k must be >= 1")
    seen_metrics: set[str] = set()
    for r in rankings:
        if r.metric in seen_metrics:
            raise ValueError(f"duplicate ranking for metric {r.metric}")
        seen_metrics.add(r.metric)
    base_terms = rankings[0].pool.terms
    for r in rankings[1:]:
        if r.pool.terms != base_terms:
            raise PoolMismatchError(len(r.pool.terms ^ base_terms))

    per_term: dict[str, dict[str, tuple[int, float]]] = {t: {} for t in base_terms}
    for r in rankings:
        for rt in r.ordered:
            per_term[rt.term][r.metric] = (rt.rank, rt.score)

    counts = rankings[0].pool.counts
    mean_ranks = {
        t: sum(rank for rank, _ in evidence.values()) / len(rankings)
        for t, evidence in per_term.items()
    }
    fused_order = sorted(base_terms, key=lambda t: (mean_ranks[t], -counts[t], t))
    entries = tuple(
        CandidateEntry(
            term=t,
            fused_rank=i,
            mean_rank=mean_ranks[t],
            per_metric=per_term[t],
        )
        for i, t in enumerate(fused_order[:k], start=1)
    )
    return CandidateList(lang=lang, entries=entries, run_meta=run_meta or {})


def rank_invariance_check(
    score: MetricScore,
    transform: Callable[[float], float],
    pool: CandidatePool,
) -> bool:
    """True iff re-scoring through a strictly increasing map keeps the order."""
    before = [rt.term for rt in rank_by_metric(score, pool).ordered]
    transformed = MetricScore(
        metric=score.metric,
        scores={t: float(transform(s)) for t, s in score.scores.items()},
        params=dict(score.params),
    )
    after = [rt.term for rt in rank_by_metric(transformed, pool).ordered]
    return before == after
