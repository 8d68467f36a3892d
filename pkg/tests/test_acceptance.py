"""Acceptance criteria 1-8.

Each test records one PASS/FAIL line with its runtime and budget; the lines
are printed together at the end of the session.  Run
``pytest tests/test_acceptance.py -v`` or ``python3 tests/test_acceptance.py``.
"""

import math
import subprocess
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))
from conftest import CORPUS, PRESHEAVES  # noqa: E402
from randinst import random_instance  # noqa: E402

from fockcat import laws
from fockcat.cli import load_category, load_vector
from fockcat.coendeng import coend, coend_bruteforce, density_iso
from fockcat.fincat import Functor, terminal
from fockcat.setprof import corepresentable

RESULTS = {}


def report(num: int, title: str, ok: bool, elapsed: float, budget=None, detail: str = "") -> None:
    passed = ok and (budget is None or elapsed < budget)
    limit = f" of {budget:.0f}s" if budget is not None else ""
    line = (f"criterion {num} [{'PASS' if passed else 'FAIL'}] {title}: "
            f"{elapsed:.1f}s{limit}{'; ' + detail if detail else ''}")
    RESULTS[num] = line
    print(line)


def failures(reports) -> list:
    return [f"{r.suite}/{c.law} on {r.subject}: {c.message}"
            for r in reports for c in r.checks if not c.passed]


def corpus():
    return [load_category(n) for n in CORPUS]


def test_criterion_1_commutation():
    t0 = time.perf_counter()
    term = laws.commutation_suite(terminal(), 4)
    z2 = laws.commutation_suite(load_category("Z2"), 3)
    elapsed = time.perf_counter() - t0
    item1 = next(c for c in term.checks if c.law == "item1")
    f = math.factorial
    expected = {f"n={n}": f"{f(n + 1)}={f(n)}+{n * f(n)}" for n in range(4)}
    canonical = next(c for c in term.checks if c.law == "item1-canonical")
    z2_item1 = next(c for c in z2.checks if c.law == "item1")
    ok = (term.passed and z2.passed and item1.data == expected and canonical.witness
          and z2_item1.witness)
    report(1, "commutation relation", ok, elapsed, 30,
           ", ".join(item1.data[k] for k in sorted(item1.data)))
    assert ok, failures([term, z2])
    assert elapsed < 30


def test_criterion_2_homset():
    t0 = time.perf_counter()
    reps = [laws.homset_laws(C, 3) for C in corpus()]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reps) and all(
        c.witness for r in reps for c in r.checks if c.kind == "witness")
    report(2, "hom-set laws on the corpus at degree 3", ok, elapsed, 60,
           f"{sum(len(r.checks) for r in reps)} checks")
    assert ok, failures(reps)
    assert elapsed < 60


def test_criterion_3_coend_engine():
    t0 = time.perf_counter()
    agree, sizes = 0, []
    for seed in range(60):
        C, H = random_instance(seed, max_nodes=200)
        res = coend(C, H)
        sizes.append(len(res.nodes))
        parts = sorted(tuple(i for i, l in enumerate(res.labels) if l == k)
                       for k in range(res.classes.size))
        agree += parts == coend_bruteforce(C, H)
    dens = 0
    total = 0
    for name in PRESHEAVES:
        W = load_vector(name)
        for c in range(W.src.n_objects):
            total += 1
            dens += density_iso(W, c).validate()
    for C in corpus():
        # representable presheaves C(-, c)
        for c in range(C.n_objects):
            T = terminal()
            pick = Functor(T, C, lambda x, c=c: c, lambda f, c=c: C.identity(c), fwd=(0, 0),
                           bwd=(0, 0), name=f"pick{c}")
            P = corepresentable(pick)
            for z in range(C.n_objects):
                total += 1
                dens += density_iso(P, z).validate()
    elapsed = time.perf_counter() - t0
    ok = agree == 60 and max(sizes) <= 200 and dens == total
    report(3, "coend engine", ok, elapsed, 30,
           f"{agree}/60 random instances (max {max(sizes)} nodes), density {dens}/{total}")
    assert ok
    assert elapsed < 30


def test_criterion_4_prof_structure():
    t0 = time.perf_counter()
    reps = [laws.kronecker_suite(C) for C in corpus()] + [laws.prof_suite(C) for C in corpus()]
    reps += [laws.compat_suite(C, load_category("arrow")) for C in corpus()]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reps)
    report(4, "Kronecker, unit laws, associativity", ok, elapsed, 30,
           f"{sum(len(r.checks) for r in reps)} checks")
    assert ok, failures(reps)
    assert elapsed < 30


def test_criterion_5_bialgebra_comonad():
    t0 = time.perf_counter()
    reps = []
    for C in corpus():
        reps += [laws.bialgebra_suite(C, 3), laws.comonad_suite(C, 3), laws.interaction_suite(C, 3)]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in reps)
    report(5, "bialgebra, comonad/monad and interaction laws at degree 3", ok, elapsed, 120,
           f"{sum(len(r.checks) for r in reps)} checks")
    assert ok, failures(reps)
    assert elapsed < 120


def test_criterion_6_coherent_states():
    t0 = time.perf_counter()
    V = load_vector("v23")
    rep = laws.coherent_suite(V, 3)
    elapsed = time.perf_counter() - t0
    by = {c.law: c for c in rep.checks}
    size = by["closed-form"].data.get("V*((0,1))")
    ok = rep.passed and size == 6 and all(by[k].witness for k in ("cond1", "cond2", "cond3"))
    report(6, "coherent states", ok, elapsed, 30, f"V*((a,b)) = {size}")
    assert ok, failures([rep])
    assert elapsed < 30


def test_criterion_7_final_theorem():
    t0 = time.perf_counter()
    V = load_vector("v23")
    rep = laws.exp_suite(V, 3)
    elapsed = time.perf_counter() - t0
    by = {c.law: c for c in rep.checks}
    sizes = by["theorem"].data["sizes"]
    ok = (rep.passed and by["theorem"].witness and by["closed-form"].passed
          and sizes["(0,1)"] == 6 and sizes["()"] == 1)
    report(7, "final theorem", ok, elapsed, 60, f"sizes at (a,b) and (): {sizes['(0,1)']}, {sizes['()']}")
    assert ok, failures([rep])
    assert elapsed < 60


def test_criterion_8_determinism(tmp_path):
    t0 = time.perf_counter()
    outs = []
    for k in range(2):
        out = tmp_path / f"run{k}.json"
        cmd = [sys.executable, "-m", "fockcat.cli", "check", "--suites", "all", "--cat", "discrete2",
               "--vector", "v23", "--covector", "w12", "--degree", "3", "--format", "json",
               "--out", str(out)]
        proc = subprocess.run(cmd, capture_output=True, text=True)
        assert proc.returncode == 0, proc.stdout + proc.stderr
        outs.append(out.read_bytes())
    elapsed = time.perf_counter() - t0
    ok = outs[0] == outs[1]
    report(8, "byte-identical check reports", ok, elapsed, detail=f"{len(outs[0])} bytes")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
