"""vibesqa: vibration-signal SQA dataset generation and model evaluation.

The toolkit covers four stages of a signal-analysis tuning loop:

- `waveforms`: synthetic signal families, real-recording access, spectra,
  and deterministic plot rendering;
- `sqa`: templated signal/question/answer groups and JSONL datasets;
- `reward`: fuzzy answer matching against a weighted synonym vocabulary;
- `metrics` and `harness`: the rule-based metric suite, judge-model
  scoring, hierarchical aggregation, and report emission.
"""

__version__ = "0.1.0"
