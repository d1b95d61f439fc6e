"""Per-term stopwordness metrics over a candidate pool.

All four scores are oriented the same way, higher = more stopword-like, so
downstream rank fusion needs no per-metric direction flags.  Natural log is
used throughout and 0·ln 0 is taken as 0.  Functional forms are pinned here
and recorded in run metadata; fusion works at the rank level, so results are
robust to monotone re-parameterizations of any of them.

  freq_spread   normalized term frequency times document-frequency rate:
                (c(t)/T) · (df(t)/N).  A frequent term present in most
                documents scores near its token share; range (0, 1].
  entropy       spread of a term's occurrences over documents, normalized
                by ln N; 1 when perfectly uniform, 0 when confined to one
                document.  Needs N >= 2.
  info_gain     1 - IG(t)/H(domains), where IG is the reduction in domain
                entropy from observing document-level presence of t.  A
                term that predicts its domain scores 0; a term carrying no
                domain signal scores 1.  Needs >= 2 domains.
  kl_div        exp(-KL(q_t || pi)) where q_t is the term's domain
                distribution and pi the background token mass per domain;
                1 iff the term distributes exactly like the background.
                Needs >= 2 domains, each with tokens.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .errors import MetricInapplicableError
from .stats import CandidatePool, TermStats

FREQ_SPREAD = "freq_spread"
ENTROPY = "entropy"
INFO_GAIN = "info_gain"
KL_DIV = "kl_div"

METRIC_IDS = (FREQ_SPREAD, ENTROPY, INFO_GAIN, KL_DIV)


@dataclass
class MetricScore:
    """Stopwordness scores for every pool term under one metric."""

    metric: str
    scores: dict[str, float]
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        for term, value in self.scores.items():
            if not math.isfinite(value):
                raise ValueError(f"{self.metric} score for {term!r} is not finite")


def _require_pool(pool: CandidatePool) -> None:
    if not pool.terms:
        raise ValueError("candidate pool is empty")


def metric_freq_spread(stats: TermStats, pool: CandidatePool) -> MetricScore:
    _require_pool(pool)
    T = stats.total_tokens
    N = stats.n_docs
    scores = {
        t: (stats.counts[t] / T) * (stats.doc_freq[t] / N) for t in pool.terms
    }
    return MetricScore(FREQ_SPREAD, scores, params={"log_base": "e"})


def metric_entropy(stats: TermStats, pool: CandidatePool) -> MetricScore:
    _require_pool(pool)
    N = stats.n_docs
    if N < 2:
        raise MetricInapplicableError(ENTROPY, "requires at least 2 documents")
    log_n = math.log(N)
    scores: dict[str, float] = {}
    for t in pool.terms:
        total = stats.counts[t]
        h = 0.0
        for c in stats.doc_counts[t].values():
            p = c / total
            h -= p * math.log(p)
        scores[t] = min(1.0, max(0.0, h / log_n))
    return MetricScore(ENTROPY, scores, params={"normalizer": "ln(n_docs)"})


def metric_information_gain(stats: TermStats, pool: CandidatePool) -> MetricScore:
    _require_pool(pool)
    if stats.n_domains < 2:
        raise MetricInapplicableError(INFO_GAIN, "requires at least 2 domains")
    N = stats.n_docs
    domain_docs = stats.domain_docs
    h_class = -sum((n / N) * math.log(n / N) for n in domain_docs.values())
    scores: dict[str, float] = {}
    for t in pool.terms:
        present_by_domain: dict[str, int] = {}
        for doc_id in stats.doc_counts[t]:
            dom = stats.doc_domains[doc_id]
            present_by_domain[dom] = present_by_domain.get(dom, 0) + 1
        n_present = stats.doc_freq[t]
        n_absent = N - n_present
        h_present = 0.0
        for n_g in present_by_domain.values():
            p = n_g / n_present
            h_present -= p * math.log(p)
        h_absent = 0.0
        if n_absent > 0:
            for dom, n_dom in domain_docs.items():
                a = n_dom - present_by_domain.get(dom, 0)
                if a > 0:
                    p = a / n_absent
                    h_absent -= p * math.log(p)
        gain = h_class - (
            (n_present / N) * h_present + (n_absent / N) * h_absent
        )
        scores[t] = min(1.0, max(0.0, 1.0 - gain / h_class))
    return MetricScore(
        INFO_GAIN, scores, params={"classes": "domains", "presence": "document-level"}
    )


def metric_kl_divergence(stats: TermStats, pool: CandidatePool) -> MetricScore:
    _require_pool(pool)
    if stats.n_domains < 2:
        raise MetricInapplicableError(KL_DIV, "requires at least 2 domains")
    for dom, toks in stats.domain_tokens.items():
        if toks == 0:
            raise MetricInapplicableError(KL_DIV, f"domain {dom!r} has no tokens")
    T = stats.total_tokens
    scores: dict[str, float] = {}
    for t in pool.terms:
        total = stats.counts[t]
        div = 0.0
        for dom, c in stats.domain_counts[t].items():
            q = c / total
            pi = stats.domain_tokens[dom] / T
            div += q * math.log(q / pi)
        # Gibbs: div >= 0 up to rounding; clamp so exp never exceeds 1
        scores[t] = math.exp(-max(0.0, div))
    return MetricScore(KL_DIV, scores, params={"background": "domain token mass"})


METRICS = {
    FREQ_SPREAD: metric_freq_spread,
    ENTROPY: metric_entropy,
    INFO_GAIN: metric_information_gain,
    KL_DIV: metric_kl_divergence,
}
