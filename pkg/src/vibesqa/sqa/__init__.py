"""SQA dataset construction: templated question/answer groups per signal,
deterministic train/eval splitting, and JSONL serialization.
"""

from vibesqa.sqa.dataset import (
    DATASET_FORMAT_VERSION,
    DatasetManifest,
    read_dataset,
    read_manifest,
    record_from_json,
    record_to_json,
    split_dataset,
    write_dataset,
)
from vibesqa.sqa.formatting import format_listing, format_quantity
from vibesqa.sqa.generate import GenerateSettings, generate_dataset
from vibesqa.sqa.records import MAX_QA_PAIRS, MIN_QA_PAIRS, QA_KINDS, QaPair, SqaRecord, build_sqa
from vibesqa.sqa.templates import (
    CANONICAL_TYPE_LABELS,
    CATEGORIES,
    QUESTION_VARIANTS,
    TYPE_QUESTION,
    build_qa_pairs,
    paraphrase_questions,
)

__all__ = [
    "CANONICAL_TYPE_LABELS",
    "CATEGORIES",
    "DATASET_FORMAT_VERSION",
    "DatasetManifest",
    "GenerateSettings",
    "MAX_QA_PAIRS",
    "MIN_QA_PAIRS",
    "QA_KINDS",
    "QUESTION_VARIANTS",
    "QaPair",
    "SqaRecord",
    "TYPE_QUESTION",
    "build_qa_pairs",
    "paraphrase_questions",
    "build_sqa",
    "format_listing",
    "format_quantity",
    "generate_dataset",
    "read_dataset",
    "read_manifest",
    "record_from_json",
    "record_to_json",
    "split_dataset",
    "write_dataset",
]
