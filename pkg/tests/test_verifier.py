"""Registry, runner, replay, examples, corpus."""
from __future__ import annotations

import json
from dataclasses import replace

import pytest

from sasmall.verifier import (
    DEFAULT,
    generate_corpus,
    lookup,
    registry,
    reproduce_paper_examples,
    run_all,
    run_statement,
    summary_line,
    to_json_lines,
    to_table,
)
from sasmall.verifier.corpus import finite_modules, invariant_factor_lists
from sasmall.verifier.runner import replay, select

SMALL = replace(DEFAULT, max_module_order=16, z_window_max=12)


def test_registry_shape():
    ids = [s.id for s in registry()]
    assert len(ids) >= 38 and len(set(ids)) == len(ids)
    for s in registry():
        assert s.anchor and s.quote and s.text
    assert lookup("Ex.converse-fails").expected_falsified
    assert lookup("Thm.finv-hollow").expected_vacuous
    with pytest.raises(KeyError):
        lookup("no-such-statement")


def test_select_strict_variants():
    assert [s.id for s in select(["T2.3.i"], strict=True)] == ["T2.3.i.strict"]
    assert [s.id for s in select(["Ex.converse-fails"], strict=True)] == ["Ex.converse-fails"]
    assert len(select(["all"])) == len(registry())


def test_examples_reproduced():
    blocks = reproduce_paper_examples()
    assert summary_line(blocks) == "8/8 paper examples reproduced"
    for b in blocks:
        assert b.checks and b.passed, b.to_json()


def test_verified_statement():
    rep = run_statement(lookup("T2.3.i"), SMALL)
    assert rep.status == "verified_on_corpus" and rep.counterexample_count == 0
    assert rep.hypothesis_hits > 0 and rep.instances_checked >= rep.hypothesis_hits


def test_converse_fails_uses_the_worked_witness():
    rep = run_statement(lookup("Ex.converse-fails"), SMALL)
    assert rep.status == "falsified" and rep.as_expected
    first = rep.counterexamples[0]
    assert first["instance"] == {"T": "2Z", "K": "4Z"}
    assert first["witness"]["witness"] == "<2>"
    assert all(c["replayed"] for c in rep.counterexamples)


def test_expected_vacuous_statement():
    rep = run_statement(lookup("Thm.finv-hollow"), SMALL)
    assert rep.status == "vacuous" and rep.as_expected


def test_replay_is_deterministic():
    st = lookup("P2.6.iv")
    rep = run_statement(st, SMALL, do_replay=False)
    assert rep.status == "falsified"
    for cex in rep.counterexamples:
        assert replay(st, cex) is True
        assert replay(st, cex) is True


def test_enlarging_bounds_keeps_falsifications():
    tiny = replace(DEFAULT, max_module_order=8, z_window_max=8)
    for sid in ("P2.6.iv", "Thm.NcapK", "Ex.converse-fails"):
        a = run_statement(lookup(sid), tiny, do_replay=False)
        b = run_statement(lookup(sid), SMALL, do_replay=False)
        if a.status == "falsified":
            assert b.status == "falsified"
            assert b.counterexample_count >= a.counterexample_count


def test_parallel_matches_serial():
    ids = ["T2.3.i", "P2.6.iv", "Note.i"]
    serial = to_json_lines(run_all(SMALL, 1, ids))
    parallel = to_json_lines(run_all(SMALL, 2, ids))
    assert serial == parallel


def test_report_rendering():
    reps = run_all(SMALL, 1, ["T2.3.i", "P2.6.iv"])
    lines = to_json_lines(reps).splitlines()
    assert len(lines) == 2
    for line in lines:
        d = json.loads(line)
        assert d["schema"] == 1 and d["status"] in ("verified_on_corpus", "falsified")
    table = to_table(reps)
    assert "P2.6.iv" in table and "(2 reports)" in table


def test_corpus_generation():
    assert invariant_factor_lists(4, 16, 3) == [(2,), (4,), (2, 2), (2, 4), (2, 2, 2), (4, 4),
                                                 (2, 2, 4)]
    mods = finite_modules(DEFAULT)
    assert mods[:3] == (("Z", "Z/6"), ("Z", "Z/8"), ("Z/8", "Z/8"))
    assert len(set(mods)) == len(mods)
    items = list(generate_corpus(SMALL))
    assert items == list(generate_corpus(SMALL))
    assert {i["kind"] for i in items} == {"module", "z_window", "hom"}
