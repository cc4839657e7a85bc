"""Run statements over the corpus, replay counterexamples, render reports."""
from __future__ import annotations

import json
import os
from contextlib import contextmanager
from dataclasses import asdict, dataclass, field

import numpy as np

from . import context
from .corpus import DEFAULT, CorpusConfig
from .registry import Statement, lookup, registry

SCHEMA = 1
MAX_COUNTEREXAMPLES = 5


@dataclass
class Report:
    id: str
    anchor: str
    quote: str
    text: str
    variant: str
    instances_checked: int = 0
    hypothesis_hits: int = 0
    holds_count: int = 0
    counterexample_count: int = 0
    counterexamples: list = field(default_factory=list)
    skipped: int = 0
    slices: int = 0
    status: str = "vacuous"
    expected_vacuous: bool = False
    expected_falsified: bool = False

    def to_json(self) -> dict:
        return {"schema": SCHEMA, **asdict(self)}

    @property
    def as_expected(self) -> bool:
        if self.expected_vacuous:
            return self.status == "vacuous"
        if self.expected_falsified:
            return self.status == "falsified"
        return True


@contextmanager
def isolated_caches():
    """Evaluate against freshly built contexts, then restore the shared cache."""
    saved = dict(context._CACHE)
    context.clear_caches()
    try:
        yield
    finally:
        context._CACHE.clear()
        context._CACHE.update(saved)


def _instance(axes, pos) -> dict:
    return {label: names[i] for (label, names), i in zip(axes, pos)}


def replay(st: Statement, cex: dict) -> bool:
    """Rebuild everything from the stored slice and re-check the instance."""
    with isolated_caches():
        r = st.evaluate(cex["slice"])
        pos = []
        for label, names in r.axes:
            pos.append(names.index(cex["instance"][label]))
        pos = tuple(pos)
        return bool(r.hyp[pos] and not r.concl[pos])


def run_statement(st: Statement, cfg: CorpusConfig = DEFAULT, *, do_replay: bool = True) -> Report:
    rep = Report(st.id, st.anchor, st.quote, st.text, st.variant,
                 expected_vacuous=st.expected_vacuous, expected_falsified=st.expected_falsified)
    for spec in st.slices(cfg):
        r = st.evaluate(spec)
        rep.slices += 1
        rep.skipped += r.skipped
        rep.instances_checked += int(r.hyp.size)
        hits = int(r.hyp.sum())
        bad = r.hyp & ~r.concl
        nbad = int(bad.sum())
        rep.hypothesis_hits += hits
        rep.counterexample_count += nbad
        if nbad and len(rep.counterexamples) < MAX_COUNTEREXAMPLES:
            for pos in np.argwhere(bad)[: MAX_COUNTEREXAMPLES - len(rep.counterexamples)]:
                pos = tuple(int(p) for p in pos)
                cex = {"slice": spec, "instance": _instance(r.axes, pos)}
                if r.witness is not None:
                    cex["witness"] = r.witness(pos)
                rep.counterexamples.append(cex)
    rep.holds_count = rep.hypothesis_hits - rep.counterexample_count
    if rep.counterexample_count:
        rep.status = "falsified"
    elif rep.hypothesis_hits:
        rep.status = "verified_on_corpus"
    else:
        rep.status = "vacuous"
    if do_replay:
        for cex in rep.counterexamples:
            cex["replayed"] = replay(st, cex)
    return rep


def _run_one(args):
    sid, cfg, do_replay = args
    return run_statement(lookup(sid), cfg, do_replay=do_replay)


def select(ids=None, strict: bool = False) -> list[Statement]:
    """Statements to run: all, or the named ones (``strict`` picks ``.strict`` variants)."""
    if not ids or ids == ["all"]:
        return registry()
    out = []
    for sid in ids:
        if strict and not sid.endswith(".strict"):
            try:
                out.append(lookup(sid + ".strict"))
                continue
            except KeyError:
                pass
        out.append(lookup(sid))
    return out


def run_all(cfg: CorpusConfig = DEFAULT, jobs: int | None = None, ids=None, *,
            strict: bool = False, do_replay: bool = True) -> list[Report]:
    """Reports in registry order, independent of ``jobs``."""
    sts = select(ids, strict)
    jobs = jobs or os.cpu_count() or 1
    if jobs <= 1 or len(sts) <= 1:
        return [run_statement(s, cfg, do_replay=do_replay) for s in sts]
    from multiprocessing import get_context as mp_context
    with mp_context("fork").Pool(jobs) as pool:
        return pool.map(_run_one, [(s.id, cfg, do_replay) for s in sts], chunksize=1)


# -- rendering ------------------------------------------------------------------------

def to_json_lines(reports) -> str:
    return "".join(json.dumps(r.to_json(), sort_keys=True, ensure_ascii=False) + "\n"
                   for r in reports)


def _short(cex: dict) -> str:
    inst = ", ".join(f"{k}={v}" for k, v in cex["instance"].items())
    sl = cex["slice"]
    where = sl.get("module") or sl.get("source", "")
    where = f"{where} over {sl['ring']}"
    if "window" in sl:
        where += f" (window {sl['window']})"
    w = cex.get("witness")
    tail = f"; witness X={w['witness']}" if w and w.get("witness") else ""
    return f"{inst} in {where}{tail}"


def to_table(reports) -> str:
    rows = [("id", "status", "instances", "hits", "cex", "first counterexample")]
    for r in reports:
        first = _short(r.counterexamples[0]) if r.counterexamples else ""
        status = r.status + ("" if r.as_expected else " (unexpected)")
        rows.append((r.id, status, str(r.instances_checked), str(r.hypothesis_hits),
                     str(r.counterexample_count), first))
    widths = [max(len(row[i]) for row in rows) for i in range(5)]
    lines = []
    for row in rows:
        cells = [row[i].ljust(widths[i]) for i in range(5)] + [row[5]]
        lines.append("  ".join(cells).rstrip())
    counts = {}
    for r in reports:
        counts[r.status] = counts.get(r.status, 0) + 1
    lines.append("")
    lines.append(", ".join(f"{k}: {counts[k]}" for k in sorted(counts)) + f" ({len(reports)} reports)")
    return "\n".join(lines) + "\n"
