"""Acceptance gate: one PASS/FAIL line per criterion, printed in the terminal summary.

Every comparison is exact (integer or rational equality); there are no
floating-point tolerances anywhere in this suite.
"""

import json
import os
import time

from turanlab import (
    DoubleStarParams,
    Pattern,
    audit_lemma,
    audit_theorem,
    count_pattern,
    decode_graph6,
    encode_graph6,
    enumerate_forbidden_free,
    ex_exhaustive,
    klikks_value,
)
from turanlab.cli import main
from turanlab.constructions import cliques_plus_remainder, complete_multipartite
from turanlab.oracle import clear_cache

import brute


def test_ac1_clique_counts_in_double_star_free_graphs(criterion):
    start = time.perf_counter()
    gaps = {}
    for a, b in ((1, 1), (1, 2)):
        p = DoubleStarParams(a, b)
        for n in range(1, 9):
            gaps[(a, b, n)] = ex_exhaustive(n, Pattern.clique(3), Pattern.double_star(a, b)).value - klikks_value(n, 3, p)
    bad = {k: v for k, v in gaps.items() if v}
    elapsed = time.perf_counter() - start
    assert criterion("AC1 clique count exact, n<=8", not bad and elapsed < 600, f"nonzero gaps={bad} time={elapsed:.1f}s")


def test_ac2_divisibility_equality(criterion):
    H, F = Pattern.double_star(1, 1), Pattern.double_star(1, 2)
    r4, r8 = ex_exhaustive(4, H, F), ex_exhaustive(8, H, F)
    two_k4 = cliques_plus_remainder(8, 4)
    has_k4 = any(brute.isomorphic(decode_graph6(w), cliques_plus_remainder(4, 4)) for w in r4.witnesses)
    has_2k4 = any(brute.isomorphic(decode_graph6(w), two_k4) for w in r8.witnesses)
    upper = [(n, ex_exhaustive(n, H, F).value) for n in range(1, 9)]
    upper_ok = all(v <= 3 * n for n, v in upper)
    ok = r4.value == 12 and r8.value == 24 and has_k4 and has_2k4 and upper_ok
    assert criterion("AC2 divisibility equality", ok, f"ex(4)={r4.value} ex(8)={r8.value} K4 witness={has_k4} 2K4 witness={has_2k4} <=3n: {upper}")


def _theorem_line(criterion, label, target, params, ns):
    report = audit_theorem(target, params, ns)
    rows = [(r.n, r.oracle_value, r.formula_value) for r in report.rows]
    ok = not report.violated and all(r.gap >= 0 for r in report.rows)
    return criterion(label, ok, f"verdict={report.verdict} threshold={report.equality_threshold} rows={rows}"), report


def test_ac3_triangle_free_threshold(criterion):
    ok, _ = _theorem_line(criterion, "AC3 triangle-free lower bound", "gyww", {"a": 1, "b": 1}, range(4, 9))
    assert ok


def test_ac4_fan_free_consistency(criterion):
    report = audit_theorem("fketto", {"a": 1, "b": 1}, range(5, 9))
    edges = audit_lemma("efgg", 8, n_min=5)
    violations = sum(r.extra["violations"] for r in edges.rows)
    ok = not report.violated and all(r.gap >= 0 for r in report.rows) and violations == 0
    rows = [(r.n, r.oracle_value, r.formula_value) for r in report.rows]
    assert criterion("AC4 2-fan-free consistency", ok, f"threshold={report.equality_threshold} rows={rows} edge-bound violations={violations}")


def test_ac5_complete_bipartite_lower_bound(criterion):
    ok, _ = _theorem_line(criterion, "AC5 K_{c,n-c} lower bound", "cnc", {"a": 1, "b": 1, "c": 2, "d": 2}, range(5, 9))
    assert ok


def test_ac6_counting_identities(criterion):
    identity = []
    for a in range(1, 4):
        for b in range(a, 4):
            got = count_pattern(complete_multipartite([a + 1, b + 1]), Pattern.double_star(a, b))
            identity.append(got == (a + 1) * (b + 1))
    violations = 0
    checked = 0
    for n in range(8):
        for g in enumerate_forbidden_free(n, None):
            for a in (1, 2):
                for b in range(a, 3):
                    checked += 1
                    kab = count_pattern(g, Pattern.complete_bipartite(a + 1, b + 1))
                    if kab > (a + 1) * (b + 1) * count_pattern(g, Pattern.double_star(a, b)):
                        violations += 1
    ok = all(identity) and violations == 0
    assert criterion("AC6 counting identities", ok, f"identities={sum(identity)}/{len(identity)} inequality checks={checked} violations={violations}")


def test_ac7_engine_cross_validation(criterion):
    import random

    rng = random.Random(20240607)
    mismatches = 0
    for i in range(200):
        g = brute.random_graph(rng.randint(1, 10), (0.2, 0.5, 0.8)[i % 3], rng)
        for a in range(1, 4):
            for b in range(a, 5 - a):
                p = Pattern.double_star(a, b)
                mismatches += count_pattern(g, p) != count_pattern(g, p, method="generic")
        for k in range(2, 6):
            p = Pattern.clique(k)
            mismatches += count_pattern(g, p) != count_pattern(g, p, method="generic")
    assert criterion("AC7 engine cross-validation", mismatches == 0, f"200 graphs, mismatches={mismatches}")


def test_ac8_lemma_audits(criterion):
    start = time.perf_counter()
    reports = {
        "ahs": audit_lemma("ahs", 7),
        "triangle_free_edges": audit_lemma("triangle_free_edges", 8),
        "vc": audit_lemma("vc", 8),
        "efgg": audit_lemma("efgg", 8),
    }
    elapsed = time.perf_counter() - start
    verdicts = {k: r.verdict for k, r in reports.items()}
    counts = {k: sum(row.extra["violations"] for row in r.rows) for k, r in reports.items()}
    ok = all(v == "pass" for v in verdicts.values()) and elapsed < 900
    detail = f"verdicts={verdicts} violations={counts} time={elapsed:.1f}s"
    if reports["ahs"].violated:
        detail += " (ceil(sqrt|E|) form fails on C_5: 5 edges, max star 2, max matching 2)"
    assert criterion("AC8 lemma audits", ok, detail)


def test_ac9_enumeration_calibration(criterion):
    K3 = Pattern.clique(3)
    counts = []
    for n in range(6):
        ours = len(list(enumerate_forbidden_free(n, K3)))
        keys = {brute.brute_canonical(g) for g in brute.labeled_graphs(n) if g.is_triangle_free()}
        counts.append((n, ours, len(keys)))
    round_trip = all(
        encode_graph6(decode_graph6(encode_graph6(g))) == encode_graph6(g) and decode_graph6(encode_graph6(g)) == g
        for n in range(9)
        for g in enumerate_forbidden_free(n, K3)
    )
    ok = all(x == y for _, x, y in counts) and round_trip
    assert criterion("AC9 enumeration calibration", ok, f"(n, classes, brute force)={counts} graph6 round trip={round_trip}")


def _values(capsys, argv):
    main(argv)
    data = json.loads(capsys.readouterr().out)
    if "rows" in data:
        return [(r["n"], r["oracle_value"], r["formula_value"], r["witnesses"]) for r in data["rows"]] + [data["verdict"]]
    return (data["value"], data["witnesses"])


def test_ac10_determinism(criterion, capsys):
    top = str(max(2, os.cpu_count() or 1))
    commands = [
        ["oracle", "--n", "8", "--H", "dstar:1,1", "--F", "clique:3"],
        ["oracle", "--n", "8", "--H", "dstar:1,2", "--F", "fan2"],
        ["oracle", "--n", "10", "--H", "dstar:1,1", "--F", "fan2", "--mode", "stochastic", "--seed", "4", "--budget", "3000"],
        ["verify", "--theorem", "gyww", "--a", "1", "--b", "1", "--nmin", "4", "--nmax", "8"],
        ["verify", "--theorem", "neww", "--a", "1", "--b", "1", "--c", "1", "--d", "2", "--nmin", "4", "--nmax", "8"],
        ["verify", "--lemma", "efgg", "--nmax", "8"],
    ]
    differing = []
    for argv in commands:
        seen = []
        for threads in ("1", top, "1"):
            clear_cache()
            seen.append(_values(capsys, argv + ["--threads", threads]))
        if any(s != seen[0] for s in seen):
            differing.append(" ".join(argv))
    assert criterion("AC10 determinism", not differing, f"{len(commands)} invocations x threads 1/{top}; differing={differing}")
