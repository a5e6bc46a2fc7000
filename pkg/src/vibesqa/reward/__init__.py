"""Answer-matching reward scoring against a weighted synonym vocabulary."""

from vibesqa.reward.scoring import (
    Completion,
    RewardConfig,
    calculate_reward,
    extract_answer,
    find_best_match,
    fuzzy_ratio,
    reward_batch,
    summarize_rewards,
)
from vibesqa.reward.vocabulary import SynonymVocabulary, normalize_text

__all__ = [
    "Completion",
    "RewardConfig",
    "SynonymVocabulary",
    "calculate_reward",
    "extract_answer",
    "find_best_match",
    "fuzzy_ratio",
    "normalize_text",
    "reward_batch",
    "summarize_rewards",
]
