import json

import pytest

from vibesqa.sqa import (
    CATEGORIES,
    QaPair,
    SqaRecord,
    TYPE_QUESTION,
    read_dataset,
    read_manifest,
    record_from_json,
    record_to_json,
    split_dataset,
    write_dataset,
)


def _make_record(category: str, index: int) -> SqaRecord:
    type_pair = QaPair(TYPE_QUESTION, f"This is a {category} example.", "signal_type")
    filler = [
        QaPair(f"Question {i}?", f"Answer {i} is 0.2{i}.", "parameter") for i in range(4)
    ]
    return SqaRecord(
        record_id=f"{category}-{index:05d}",
        image_path=f"images/{category}-{index:05d}.png",
        signal_category=category,
        type_label="Simple Harmonic Signal",
        ground_truth={"family": category, "value": index},
        qa=(type_pair, *filler),
    )


def _records(per_category: int, categories=("SH", "AM")) -> list[SqaRecord]:
    return [
        _make_record(category, index)
        for category in categories
        for index in range(per_category)
    ]


class TestSplitDataset:
    def test_exact_partition_sizes(self):
        manifest, splits = split_dataset(_records(11), {"train": 8, "eval": 3}, seed=1)
        assert len(splits["train"]) == 16
        assert len(splits["eval"]) == 6
        assert manifest.split_counts["train"] == {"SH": 8, "AM": 8}
        assert manifest.split_counts["eval"] == {"SH": 3, "AM": 3}

    def test_partitions_disjoint(self):
        _manifest, splits = split_dataset(_records(10), {"train": 6, "eval": 4}, seed=5)
        train_ids = {r.record_id for r in splits["train"]}
        eval_ids = {r.record_id for r in splits["eval"]}
        assert not train_ids & eval_ids

    def test_deterministic_under_seed(self):
        records = _records(10)
        _m1, first = split_dataset(records, {"train": 6, "eval": 4}, seed=9)
        _m2, second = split_dataset(records, {"train": 6, "eval": 4}, seed=9)
        assert [r.record_id for r in first["train"]] == [r.record_id for r in second["train"]]
        assert [r.record_id for r in first["eval"]] == [r.record_id for r in second["eval"]]

    def test_different_seed_changes_partition(self):
        records = _records(30)
        _m1, first = split_dataset(records, {"train": 15, "eval": 15}, seed=0)
        _m2, second = split_dataset(records, {"train": 15, "eval": 15}, seed=1)
        assert {r.record_id for r in first["train"]} != {r.record_id for r in second["train"]}

    def test_zero_counts_are_valid(self):
        manifest, splits = split_dataset(_records(3), {"train": 0, "eval": 0}, seed=0)
        assert splits == {"train": [], "eval": []}
        assert all(count == 0 for c in manifest.split_counts.values() for count in c.values())

    def test_insufficient_records_rejected(self):
        with pytest.raises(ValueError, match="required"):
            split_dataset(_records(5), {"train": 4, "eval": 2}, seed=0)


class TestWriteAndRead:
    def test_round_trip_identity(self, tmp_path):
        manifest, splits = split_dataset(_records(4), {"train": 3, "eval": 1}, seed=2)
        write_dataset(splits, manifest, tmp_path)
        for split_name, records in splits.items():
            loaded = read_dataset(tmp_path / f"{split_name}.jsonl")
            assert loaded == records

    def test_manifest_round_trip(self, tmp_path):
        manifest, splits = split_dataset(_records(4), {"train": 3, "eval": 1}, seed=2)
        write_dataset(splits, manifest, tmp_path)
        loaded = read_manifest(tmp_path)
        assert loaded.seed == manifest.seed
        assert loaded.split_counts == manifest.split_counts

    def test_empty_split_writes_empty_file(self, tmp_path):
        manifest, splits = split_dataset(_records(3), {"train": 3, "eval": 0}, seed=0)
        write_dataset(splits, manifest, tmp_path)
        assert (tmp_path / "eval.jsonl").read_text() == ""
        assert read_dataset(tmp_path / "eval.jsonl") == []

    def test_duplicate_record_id_rejected(self, tmp_path):
        record = _make_record("SH", 0)
        manifest, splits = split_dataset(_records(3), {"train": 3, "eval": 0}, seed=0)
        splits["train"].append(splits["train"][0])
        with pytest.raises(ValueError, match="duplicate record_id"):
            write_dataset(splits, manifest, tmp_path)

    def test_malformed_line_rejected(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text("{broken\n")
        with pytest.raises(ValueError, match="malformed JSON"):
            read_dataset(path)

    def test_eval_set_recovers_all_categories(self, tmp_path):
        records = _records(2, categories=CATEGORIES)
        manifest, splits = split_dataset(records, {"train": 1, "eval": 1}, seed=0)
        write_dataset(splits, manifest, tmp_path)
        loaded = read_dataset(tmp_path / "eval.jsonl")
        assert {r.signal_category for r in loaded} == set(CATEGORIES)
        assert len({r.signal_category for r in loaded}) == 12

    def test_conversation_pairs_image_with_first_question(self):
        record = _make_record("SH", 0)
        payload = record_to_json(record)
        conversation = payload["conversation"]
        assert conversation[0]["role"] == "user"
        assert conversation[0]["content"] == f"<image>\n{TYPE_QUESTION}"
        assert conversation[1] == {
            "role": "assistant",
            "content": record.qa[0].answer,
        }
        # Later turns carry no image placeholder.
        assert all("<image>" not in turn["content"] for turn in conversation[2:])
        assert len(conversation) == 2 * len(record.qa)

    def test_json_payload_is_line_serializable(self):
        payload = record_to_json(_make_record("SH", 1))
        line = json.dumps(payload, sort_keys=True)
        assert record_from_json(json.loads(line)) == _make_record("SH", 1)
