"""Statement registry, corpus and runner."""
from __future__ import annotations

from .corpus import DEFAULT, CorpusConfig, generate_corpus
from .examples import reproduce_paper_examples, summary_line
from .registry import Statement, lookup, registry
from .runner import Report, run_all, run_statement, to_json_lines, to_table

__all__ = [
    "DEFAULT", "CorpusConfig", "generate_corpus", "reproduce_paper_examples", "summary_line",
    "Statement", "lookup", "registry", "Report", "run_all", "run_statement",
    "to_json_lines", "to_table",
]
