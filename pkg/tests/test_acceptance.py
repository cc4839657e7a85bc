"""Acceptance criteria, one pass/fail line each (repeated in the terminal summary)."""
from __future__ import annotations

import json
import subprocess
import sys
import time

import test_properties as props
from test_oracle import run_dual_oracle

from sasmall.modules import annihilator, module_make, z_line
from sasmall.predicates import FAILS, HOLDS, is_T_sa_small, sa_small_set, small_set
from sasmall.rings import ZZ, Ideal, RingDesc
from sasmall.verifier.context import clear_caches
from sasmall.verifier.examples import reproduce_paper_examples

VERIFY = [sys.executable, "-m", "sasmall", "verify", "all", "--format", "json"]
_RUNS: list[tuple[bytes, float, int]] = []


def _verify_all():
    """Run ``verify all`` as a subprocess; runs are kept so criterion 5 reuses the first."""
    t0 = time.time()
    r = subprocess.run(VERIFY, capture_output=True)
    _RUNS.append((r.stdout, time.time() - t0, r.returncode))
    return _RUNS[-1]


def test_criterion_1_worked_examples(acceptance_log):
    clear_caches()
    t0 = time.time()
    blocks = reproduce_paper_examples()
    # spot-check the headline facts directly as well
    Z6 = module_make(ZZ, [6])
    Z = z_line()
    Z8 = module_make(RingDesc(8), [8])
    direct = [
        small_set(Z6) == [Z6.zero] and sa_small_set(Z6) == [],
        annihilator(Z6.sub([2])) == Ideal(ZZ, 3) and annihilator(Z6.sub([3])) == Ideal(ZZ, 2),
        all((Z.line(k) in sa_small_set(Z)) == (k != 1) for k in range(25)),
        is_T_sa_small(Z.zero, Z.line(2)).value == HOLDS,
        is_T_sa_small(Z.line(8), Z.line(2)).value == HOLDS,
        is_T_sa_small(module_make(ZZ, [8]).sub([4]), module_make(ZZ, [8]).sub([2])).value == FAILS,
        annihilator(Z8.sub([2])) == Ideal(RingDesc(8), 4),
    ]
    elapsed = time.time() - t0
    ok = all(b.passed for b in blocks) and all(direct) and elapsed < 1.0
    failed = [b.name for b in blocks if not b.passed]
    assert acceptance_log(1, ok, f"{sum(b.passed for b in blocks)}/{len(blocks)} example blocks, "
                                 f"{sum(direct)}/{len(direct)} direct checks, {elapsed:.2f}s"
                                 + (f"; failed {failed}" if failed else ""))


def test_criterion_2_dual_oracle(acceptance_log):
    modules, checks, mismatches, elapsed = run_dual_oracle()
    ok = modules == 114 and checks >= 10_000 and not mismatches and elapsed < 120
    assert acceptance_log(2, ok, f"{modules} modules, {checks} checks, {len(mismatches)} "
                                 f"mismatches, {elapsed:.1f}s")


def test_criterion_3_verify_all(acceptance_log):
    out, elapsed, code = _verify_all()
    reports = [json.loads(line) for line in out.decode().splitlines()]
    bad_vacuous = [r["id"] for r in reports if r["status"] == "vacuous" and not r["expected_vacuous"]]
    unexpected = [r["id"] for r in reports
                  if (r["expected_vacuous"] and r["status"] != "vacuous")
                  or (r["expected_falsified"] and r["status"] != "falsified")]
    conv = next(r for r in reports if r["id"] == "Ex.converse-fails")
    first = conv["counterexamples"][0] if conv["counterexamples"] else {}
    worked_witness = (conv["status"] == "falsified"
                     and first.get("instance") == {"T": "2Z", "K": "4Z"}
                     and first.get("witness", {}).get("witness") == "<2>"
                     and first.get("replayed") is True)
    unreplayed = [r["id"] for r in reports for c in r["counterexamples"] if not c["replayed"]]
    ok = (code == 0 and elapsed < 600 and len(reports) >= 38 and not bad_vacuous
          and not unexpected and worked_witness and not unreplayed)
    falsified = sum(r["status"] == "falsified" for r in reports)
    assert acceptance_log(3, ok, f"{len(reports)} reports in {elapsed:.0f}s, exit {code}, "
                                 f"{falsified} falsified, unexpected vacuous {bad_vacuous}, "
                                 f"converse-fails witness k=2: {worked_witness}")


SUITES = [
    props.test_definition_reduction_T_equals_M,
    props.test_T_monotone,
    props.test_N_downward_closed,
    props.test_small_ideals_are_sa_small,
    props.test_module_never_sa_small_in_itself,
    props.test_zero_sa_small_iff_annihilator_small,
    props.test_jacobson_dual_computation,
    props.test_quotient_transport_bijection,
    props.test_canonicalization_soundness,
]


def test_criterion_4_property_suites(acceptance_log):
    failed = []
    for suite in SUITES:
        try:
            suite()
        except AssertionError:
            failed.append(suite.__name__)
    ok = not failed
    assert acceptance_log(4, ok, f"{len(SUITES) - len(failed)}/{len(SUITES)} suites with zero "
                                 f"violations on {len(props.MODULES)} modules + "
                                 f"{len(props.WINDOWS)} Z windows" + (f"; failed {failed}" if failed else ""))


def test_criterion_5_determinism(acceptance_log):
    first = _RUNS[0][0] if _RUNS else _verify_all()[0]
    second = _verify_all()[0]
    ok = bool(first) and first == second
    assert acceptance_log(5, ok, f"two verify-all JSON runs byte-identical: {first == second} "
                                 f"({len(first)} bytes)")
