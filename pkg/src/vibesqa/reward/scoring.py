"""Answer-matching reward: extraction, fuzzy matching, bonus, clamping.

The pipeline for one completion is: extract the answer span, look up the
gold label's acceptable answers, find the best fuzzy match, then map
(similarity, weight) to a clamped score with an exact-match bonus. An
unknown gold label scores 0.0. Everything here is pure and safe for
concurrent batch scoring.

Fuzzy similarity is the indel ratio: 100 * (1 - d / (len(a) + len(b)))
where d is the insertion/deletion edit distance between the normalized
strings. This is the classic `fuzz.ratio` definition and is the variant
that reproduces the expected best-match behavior on near-miss answers
(e.g. a missing word in a long label still favors the full label over a
truncated synonym).
"""

from __future__ import annotations

import re
import statistics
from dataclasses import dataclass
from typing import ClassVar

from vibesqa.reward.vocabulary import SynonymVocabulary, normalize_text

_ANSWER_SPAN_RE = re.compile(r"<answer>(.*?)</answer>", re.DOTALL)
_THINK_SPAN_RE = re.compile(r"<think>(.*?)</think>", re.DOTALL)


@dataclass(frozen=True)
class RewardConfig:
    """Reward shaping constants. Scores always clamp to [clamp_lo, clamp_hi]."""

    beta_exact: float = 0.1
    clamp_lo: ClassVar[float] = 0.0
    clamp_hi: ClassVar[float] = 1.0

    def __post_init__(self) -> None:
        if self.beta_exact < 0:
            raise ValueError("beta_exact must be >= 0")


@dataclass(frozen=True)
class Completion:
    """A raw model completion with its extracted thought and answer."""

    raw: str
    thought: str | None
    answer: str

    @classmethod
    def from_raw(cls, raw: str) -> "Completion":
        thoughts = _THINK_SPAN_RE.findall(raw)
        return cls(
            raw=raw,
            thought=thoughts[-1].strip() if thoughts else None,
            answer=extract_answer(raw),
        )


def extract_answer(raw: str) -> str:
    """Content of the last complete <answer>...</answer> span, trimmed.

    Spans are found by a left-to-right non-overlapping scan (each opening
    tag pairs with the next closing tag). Text without any complete span
    falls back to the whole string, so extraction never fails.
    """
    spans = _ANSWER_SPAN_RE.findall(raw)
    if spans:
        return spans[-1].strip()
    return raw.strip()


def _lcs_length(a: str, b: str) -> int:
    # Allison-Dix bit-parallel LCS: one big-int update per character of `a`.
    if not a or not b:
        return 0
    match_masks: dict[str, int] = {}
    for index, char in enumerate(b):
        match_masks[char] = match_masks.get(char, 0) | (1 << index)
    row = 0
    for char in a:
        x = row | match_masks.get(char, 0)
        row = x & ~(x - ((row << 1) | 1))
    return row.bit_count()


def _indel_distance(a: str, b: str) -> int:
    # Insertions/deletions only; equals len(a) + len(b) - 2 * LCS(a, b).
    return len(a) + len(b) - 2 * _lcs_length(a, b)


def fuzzy_ratio(a: str, b: str) -> float:
    """Similarity of two strings in [0, 100] after normalization.

    Two empty strings are identical (100); comparing any string against an
    empty one yields 0.
    """
    norm_a = normalize_text(a)
    norm_b = normalize_text(b)
    total = len(norm_a) + len(norm_b)
    if total == 0:
        return 100.0
    return 100.0 * (1.0 - _indel_distance(norm_a, norm_b) / total)


def find_best_match(
    answer: str, acceptable: tuple[tuple[str, float], ...] | list[tuple[str, float]]
) -> tuple[float, str, float]:
    """Best (similarity, synonym, weight) over the acceptable-answer list.

    Updates only on strictly greater similarity, so the earliest-listed
    synonym wins ties.
    """
    if not acceptable:
        raise ValueError("acceptable-answer list must be non-empty")
    best_score = 0.0
    best_synonym = ""
    best_weight = 0.0
    for synonym, weight in acceptable:
        score = fuzzy_ratio(answer, synonym)
        if score > best_score:
            best_score = score
            best_synonym = synonym
            best_weight = weight
    return best_score, best_synonym, best_weight


def calculate_reward(
    answer: str,
    best_score: float,
    best_synonym: str,
    best_weight: float,
    beta_exact: float = 0.1,
) -> float:
    """Scaled fuzzy score times weight, plus the exact-match bonus, clamped.

    `answer` and `best_synonym` are carried for interface completeness;
    the score depends only on (best_score, best_weight, beta_exact).
    """
    reward = (best_score / 100.0) * best_weight
    if best_score == 100.0:
        reward += beta_exact
    return max(RewardConfig.clamp_lo, min(RewardConfig.clamp_hi, reward))


def reward_batch(
    completions: list[str],
    gold_answers: list[str],
    vocabulary: SynonymVocabulary | None = None,
    config: RewardConfig | None = None,
) -> list[float]:
    """Score each completion against its gold label.

    Gold labels are looked up after the same normalization used by fuzzy
    matching; a label absent from the vocabulary scores 0.0.
    """
    if len(completions) != len(gold_answers):
        raise ValueError(
            f"completions ({len(completions)}) and gold answers "
            f"({len(gold_answers)}) must have equal length"
        )
    vocabulary = vocabulary if vocabulary is not None else SynonymVocabulary.load()
    config = config if config is not None else RewardConfig()

    rewards = []
    for completion, gold in zip(completions, gold_answers):
        answer = extract_answer(completion)
        acceptable = vocabulary.lookup(gold)
        if acceptable is None:
            rewards.append(0.0)
            continue
        best_score, best_synonym, best_weight = find_best_match(answer, acceptable)
        rewards.append(
            calculate_reward(answer, best_score, best_synonym, best_weight, config.beta_exact)
        )
    return rewards


def summarize_rewards(rewards: list[float]) -> dict:
    """Mean/std summary of a reward batch."""
    if not rewards:
        return {"count": 0, "mean": None, "std": None}
    return {
        "count": len(rewards),
        "mean": statistics.fmean(rewards),
        "std": statistics.pstdev(rewards) if len(rewards) > 1 else 0.0,
    }
