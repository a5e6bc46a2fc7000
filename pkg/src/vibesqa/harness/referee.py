"""External judge-model scoring over a chat-completion endpoint.

Each sample's question, gold answer, and prediction are injected into a
fixed prompt that asks the judge for one line holding exactly two scores
in 1..10: overall similarity to the gold answer, then parameter accuracy.
The rest of the reply is kept as the explanation.

An empty configuration skips judging entirely; any per-sample failure
(transport or malformed reply) is captured in that sample's result and
never aborts the batch. Requests run under bounded concurrency with
per-request timeout and capped retries.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import requests

DEFAULT_PROMPT_TEMPLATE = """Please assess the generated results for the provided vibration signal data. The first result represents the ground truth, and the second is produced by a large language model. Evaluate the second result based on its similarity to the ground truth: the closer the second result is to the ground truth, the higher the score. Additionally, if parameters are identified, assess the accuracy of these parameters, with lower deviation resulting in a higher score.

Consider the following factors in your evaluation: helpfulness, relevance, accuracy, and expertise. Each factor should contribute to the overall score, with higher similarity across these dimensions resulting in higher scores.

First, output a single line containing only two scores, separated by a space. The first score should reflect the overall similarity to the ground truth across all criteria, and the second score should reflect the accuracy of parameter identification. Afterward, provide a detailed and unbiased explanation of your evaluation, ensuring that the order of presentation does not influence your judgment. Please remember first output a single line containing only two values indicating the score from 1 to 10, which means only two values appear in the first line without words like score, respectively.

Question: {question}
First result: {gold}
Second result: {prediction}
"""

SCORE_MIN = 1.0
SCORE_MAX = 10.0


class RefereeParseError(ValueError):
    """The judge reply's first line did not hold exactly two in-range scores."""


@dataclass(frozen=True)
class RefereeConfig:
    """Connection and prompting settings for the judge model.

    An empty endpoint URL means "referee disabled". The credential is read
    from the environment variable named here and never written to reports.
    """

    endpoint_url: str = ""
    model: str = ""
    credential_env: str = ""
    prompt_template: str = DEFAULT_PROMPT_TEMPLATE
    timeout_s: float = 30.0
    max_concurrent: int = 4
    max_retries: int = 2
    retry_backoff_s: float = 0.5
    temperature: float = 0.0

    def __post_init__(self) -> None:
        if self.timeout_s <= 0:
            raise ValueError("timeout_s must be > 0")
        if self.max_concurrent < 1:
            raise ValueError("max_concurrent must be >= 1")
        if self.max_retries < 0:
            raise ValueError("max_retries must be >= 0")
        if "{gold}" not in self.prompt_template or "{prediction}" not in self.prompt_template:
            raise ValueError("prompt_template must contain {gold} and {prediction} slots")

    @property
    def is_empty(self) -> bool:
        return not self.endpoint_url


@dataclass(frozen=True)
class RefereeResult:
    status: str  # ok | error | skipped
    similarity: float | None = None
    parameter_accuracy: float | None = None
    explanation: str = ""
    error: str = ""

    def __post_init__(self) -> None:
        if self.status not in ("ok", "error", "skipped"):
            raise ValueError(f"invalid status {self.status!r}")
        has_scores = self.similarity is not None and self.parameter_accuracy is not None
        if (self.status == "ok") != has_scores:
            raise ValueError("scores must be present exactly when status is ok")


def parse_referee_reply(text: str) -> tuple[float, float, str]:
    """Extract (similarity, parameter accuracy, explanation) from a reply.

    The first non-empty line must contain exactly two numbers in 1..10
    separated by whitespace; everything after it is the explanation.
    """
    lines = text.strip().splitlines()
    if not lines:
        raise RefereeParseError("empty reply")
    first, *rest = lines
    tokens = first.split()
    if len(tokens) != 2:
        raise RefereeParseError(
            f"expected exactly two scores on the first line, got {first!r}"
        )
    try:
        similarity, parameter_accuracy = (float(t) for t in tokens)
    except ValueError:
        raise RefereeParseError(f"non-numeric score on the first line: {first!r}") from None
    for value in (similarity, parameter_accuracy):
        if not SCORE_MIN <= value <= SCORE_MAX:
            raise RefereeParseError(f"score {value} outside [{SCORE_MIN}, {SCORE_MAX}]")
    return similarity, parameter_accuracy, "\n".join(rest).strip()


def build_prompt(config: RefereeConfig, question: str, gold: str, prediction: str) -> str:
    return config.prompt_template.format(question=question, gold=gold, prediction=prediction)


def http_transport(prompt: str, config: RefereeConfig) -> str:
    """POST a chat-completion request and return the reply text."""
    headers = {"Content-Type": "application/json"}
    if config.credential_env:
        token = os.environ.get(config.credential_env, "")
        if token:
            headers["Authorization"] = f"Bearer {token}"
    payload = {
        "model": config.model,
        "messages": [{"role": "user", "content": prompt}],
        "temperature": config.temperature,
    }
    response = requests.post(
        config.endpoint_url, json=payload, headers=headers, timeout=config.timeout_s
    )
    response.raise_for_status()
    return response.json()["choices"][0]["message"]["content"]


def _judge_one(sample, config: RefereeConfig, transport) -> RefereeResult:
    prompt = build_prompt(config, sample.question, sample.gold_answer, sample.prediction)
    last_error = ""
    for attempt in range(config.max_retries + 1):
        try:
            reply = transport(prompt, config)
        except Exception as exc:  # transport failures are retryable
            last_error = f"transport error: {exc}"
            if attempt < config.max_retries:
                time.sleep(config.retry_backoff_s * (attempt + 1))
            continue
        try:
            similarity, parameter_accuracy, explanation = parse_referee_reply(reply)
        except RefereeParseError as exc:
            # A well-delivered but malformed reply is a contract violation,
            # not a transient fault; do not retry.
            return RefereeResult(status="error", error=f"parse error: {exc}")
        return RefereeResult(
            status="ok",
            similarity=similarity,
            parameter_accuracy=parameter_accuracy,
            explanation=explanation,
        )
    return RefereeResult(status="error", error=last_error)


def score_with_referee(
    samples: list,
    config: RefereeConfig | None,
    transport=None,
) -> list[RefereeResult]:
    """Judge every sample, one result each, in input order.

    `transport` is a callable `(prompt, config) -> reply text`; the default
    posts to the configured HTTP endpoint. With no or empty configuration
    every result is skipped.
    """
    if config is None or config.is_empty:
        return [RefereeResult(status="skipped") for _ in samples]
    transport = transport if transport is not None else http_transport
    if not samples:
        return []
    with ThreadPoolExecutor(max_workers=config.max_concurrent) as pool:
        return list(pool.map(lambda s: _judge_one(s, config, transport), samples))
