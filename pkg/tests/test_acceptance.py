"""Acceptance criteria at full scale, one PASS/FAIL line each.

Set QGROTH_JOBS to fan the oracle and supercharacter suites out to
worker processes (default: number of CPUs).
"""

import io
import json
import os
import time

import pytest

from qgroth.cli import run
from qgroth.verify import run_suite

JOBS = int(os.environ.get("QGROTH_JOBS", os.cpu_count() or 1))
GOLDEN = os.path.join(os.path.dirname(__file__), "golden")

ORACLE_BUDGET = 300.0
VERMA_BUDGET = 120.0


def _timed(name, **params):
    t0 = time.perf_counter()
    rep = run_suite(name, **params)
    rep["elapsed"] = time.perf_counter() - t0
    return rep


@pytest.fixture(scope="module")
def oracle():
    return _timed("oracle", max_n=3, max_entry=2, jobs=JOBS)


@pytest.fixture(scope="module")
def rings():
    return _timed("rings", max_n=6, max_entry=3, seed=0, samples=1000)


@pytest.fixture(scope="module")
def ds():
    return _timed("ds", max_n=5, max_entry=2, oracle_n=3, jobs=JOBS)


@pytest.fixture(scope="module")
def supercharacter():
    return _timed("supercharacter", max_n=4, depth=6, max_s=8, jobs=JOBS)


def crit(rep, cid):
    return next(c for c in rep["criteria"] if c["id"] == cid)


def emit(capsys, cid, ok, summary):
    with capsys.disabled():
        print(f"\n{'PASS' if ok else 'FAIL'}  criterion {cid}: {summary}")


def _summary(c, extra=""):
    s = f"{c['name']} ({c['cases']} cases, {c['failed']} failed)"
    if c["failures"]:
        s += f"; first: {c['failures'][0]}"
    return s + extra


def test_criterion_1_oracle_model_equivalence(oracle, capsys):
    c = crit(oracle, "1")
    fast = oracle["elapsed"] < ORACLE_BUDGET
    ok = c["pass"] and fast
    emit(capsys, 1, ok, _summary(c, f"; oracle suite {oracle['elapsed']:.1f}s (< {ORACLE_BUDGET:.0f}s), jobs={JOBS}"))
    assert c["pass"], c["failures"]
    assert fast


def test_criterion_2_tensor_theorem(oracle, capsys):
    c = crit(oracle, "2")
    n_dis = c["notes"]["printed_exponent_disagreements"]
    ok = c["pass"] and n_dis >= 1
    emit(capsys, 2, ok, _summary(c, f"; printed exponent disagrees on {n_dis} pairs, e.g. {c['notes']['first_disagreement']}"))
    assert ok, c["failures"]


def test_criterion_3_pi_invariance(oracle, capsys):
    c = crit(oracle, "3")
    m = crit(oracle, "3m")
    emit(capsys, 3, c["pass"], _summary(c, f"; module-level socle form: {m['failed']} of {m['cases']} failed"))
    assert c["pass"], c["failures"]


def test_criterion_4_psi_isomorphism(rings, capsys):
    c = crit(rings, "4")
    emit(capsys, 4, c["pass"], _summary(c))
    assert c["pass"], c["failures"]


def test_criterion_5_q2_table(supercharacter, capsys):
    c = crit(supercharacter, "5")
    emit(capsys, 5, c["pass"], _summary(c))
    assert c["pass"], c["failures"]


def test_criterion_6_verma_coefficients(supercharacter, capsys):
    c = crit(supercharacter, "6")
    fast = supercharacter["elapsed"] < VERMA_BUDGET
    ok = c["pass"] and fast
    emit(capsys, 6, ok, _summary(c, f"; suite {supercharacter['elapsed']:.1f}s (< {VERMA_BUDGET:.0f}s)"))
    assert c["pass"], c["failures"]
    assert fast


def test_criterion_7_ds_maps(ds, capsys):
    c = crit(ds, "7")
    emit(capsys, 7, c["pass"], _summary(c))
    assert c["pass"], c["failures"]


def test_criterion_8_grothendieck_decomposition(rings, capsys):
    c = crit(rings, "8")
    emit(capsys, 8, c["pass"], _summary(c))
    assert c["pass"], c["failures"]


def test_criterion_9_t_head_to_socle(oracle, capsys):
    c = crit(oracle, "9")
    emit(capsys, 9, c["pass"], _summary(c))
    assert c["pass"], c["failures"]


def test_criterion_10_cli_contract(capsys, monkeypatch):
    monkeypatch.chdir(GOLDEN)
    with open("cases.json", encoding="utf-8") as fh:
        cases = json.load(fh)
    bad = []
    for case in cases:
        outs = []
        for _ in range(2):
            buf = io.StringIO()
            code = run(case["argv"], out=buf)
            outs.append((code, buf.getvalue()))
        code, out = outs[0]
        same = outs[0] == outs[1]
        if case["name"].startswith("usage_"):
            good = code == case["exit"] and "error" in json.loads(out)
        else:
            good = code == case["exit"] and out == case["stdout"]
        if not (good and same):
            bad.append(case["name"])
    ok = not bad
    emit(capsys, 10, ok, f"CLI golden files ({len(cases)} cases, {len(bad)} failed){'; first: ' + bad[0] if bad else ''}")
    assert ok, bad
