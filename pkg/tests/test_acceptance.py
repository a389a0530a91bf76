"""Acceptance criteria, one test per criterion.

Each test appends a ``PASS``/``FAIL`` line to ``RESULTS``; the conftest
hook prints them at the end of the run, and running this file as a script
prints them directly.  Every comparison is exact.
"""
from __future__ import annotations

import time

from subreg.automaton import enumerate_box, enumerate_cell
from subreg.coxeter import INF, validate_diagram
from subreg.fusion import decode_amalg, encode_amalg, path_mult_check
from subreg.jring import JElement, element, segment_product, t
from subreg.structure import classify_fusion, order_two_elements
from subreg.systems import (
    builtin_diagrams,
    chain_44,
    cycle,
    dihedral,
    path,
    star,
    thmD_triangle,
    thmE,
    triangle_334,
    triangle_456,
)
from subreg.verify import (
    suite_assoc,
    suite_basedring,
    suite_hecke,
    suite_thmA,
    suite_thmB,
    suite_thmC,
    suite_thmD,
    suite_thmE,
)

RESULTS: list[str] = []


def _report(number, title, ok, started, limit=None, note=""):
    elapsed = time.perf_counter() - started
    in_time = limit is None or elapsed < limit
    passed = bool(ok) and in_time
    budget = f" (limit {limit:g}s)" if limit is not None else ""
    extra = f" - {note}" if note else ""
    RESULTS.append(f"[{'PASS' if passed else 'FAIL'}] {number:2d}. {title}: "
                   f"{elapsed:.2f}s{budget}{extra}")
    assert ok, f"criterion {number} failed{extra}"
    assert in_time, f"criterion {number} took {elapsed:.2f}s"


def _all_pass(cases):
    return all(c.passed for c in cases)


def _first_failure(cases):
    bad = [c for c in cases if not c.passed]
    return f"{bad[0].name}: {bad[0].example}" if bad else ""


def test_01_dihedral_worked_products():
    start = time.perf_counter()
    d = dihedral(7)
    ok = (t("1212", d) * t("212", d) == element(d, {"12": 1, "1212": 1, "121212": 1})
          and t("1212", d) * t("2121", d) == element(d, {"1": 1, "121": 1, "12121": 1})
          and t("212", d) * t("212121", d) == t("2121", d))
    _report(1, "dihedral m=7 worked products", ok, start, 1)


def test_02_rank_three_worked_products():
    start = time.perf_counter()
    d = triangle_456()
    ok = (t("123", d) * t("323213", d) == element(d, {"123213": 1, "12323213": 1})
          and t("123", d) * t("3213", d) == element(d, {"13": 1, "1213": 1, "123213": 1}))
    _report(2, "(4,5,6) triangle worked products", ok, start, 1)


def test_03_chain_law():
    start = time.perf_counter()
    d = chain_44()

    def tn(n):
        return t("1", d) + t("121", d) if n == 0 else t("1" + "2321" * n, d)

    ok = all(tn(m) * tn(n) == tn(abs(m - n)) + tn(m + n)
             for m in range(1, 7) for n in range(1, 7))
    tx = t("121", d)
    ok = ok and all(tx * tn(n) == tn(n) for n in range(1, 7)) and tx * tx == t("1", d)
    _report(3, "chain_44 law t_m t_n = t_|m-n| + t_(m+n)", ok, start, 5)


def test_04_odd_triangle_presentation():
    start = time.perf_counter()
    d = triangle_334()
    x, y, z, w = (t(s, d) for s in ("1231", "1321", "12321", "13231"))
    one = t("1", d)
    ok = (x * y == one + z and y * x == one + w
          and x * w == x == z * x and y * z == y == w * y
          and w * w == one == z * z and x * y * x == 2 * x)
    _report(4, "triangle_334 presentation of J_1", ok, start)


def test_05_segment_products():
    start = time.perf_counter()
    checked = 0
    bad = []
    for name, d in builtin_diagrams().items():
        for x in enumerate_cell(d, 8):
            checked += 1
            if segment_product(x, d) != JElement({x: 1}, d):
                bad.append(f"{name}:{d.format_word(x)}")
    _report(5, "t_x equals the product of its segment elements (l <= 8)", not bad, start,
            note=f"{checked} elements over {len(builtin_diagrams())} systems"
            + (f", first failure {bad[0]}" if bad else ""))


def test_06_groupoid_isomorphism():
    start = time.perf_counter()
    cases = []
    for d in (path(4), cycle(3), cycle(4), star(4)):
        cases += suite_thmA(d, max_len=6)
    pairs = sum(c.checked for c in cases if c.name.startswith("Phi(t_x t_y)"))
    _report(6, "simply-laced systems vs groupoid algebra", _all_pass(cases), start, 60,
            note=f"{pairs} basis pairs {_first_failure(cases)}".rstrip())


def test_07_matrix_isomorphism_and_witness():
    start = time.perf_counter()
    d = triangle_334()
    cases = suite_thmB(d, max_len=6, base=d.index("1"))
    c = chain_44()
    j1 = order_two_elements(c, c.index("1"), 10)
    j2 = order_two_elements(c, c.index("2"), 10)
    ok = _all_pass(cases) and len(j1) != len(j2)
    _report(7, "Psi on triangle_334 and the chain_44 witness", ok, start,
            note=f"{cases[0].checked} pairs; order-2 counts J_1={len(j1)}, J_2={len(j2)}")


def test_08_finite_boxes():
    start = time.perf_counter()
    weight5 = validate_diagram("1234", [["1", "2", 3], ["2", "3", 5], ["3", "4", 3]])
    ok = (all(classify_fusion(d) == 3 for d in (path(3), path(4), star(4)))
          and classify_fusion(weight5) == 5
          and classify_fusion(thmD_triangle()) is None)
    cases = []
    for M in range(3, 9):
        cases += suite_thmC(dihedral(M))
    _report(8, "fusion classification and J_1 = Ver_M odd part", ok and _all_pass(cases), start,
            note=_first_failure(cases))


def test_09_unitary_word_model():
    start = time.perf_counter()
    cases = suite_thmD(thmD_triangle(), max_sum=6, max_len=12)
    _report(9, "free fusion ring on {a, b} vs J_0", _all_pass(cases), start, 60,
            note=f"{cases[0].checked} word pairs, {cases[1].checked} box elements "
            f"{_first_failure(cases)}".rstrip())


def test_10_amalgamated_word_model():
    start = time.perf_counter()
    cases = []
    for n in (2, 3):
        cases += suite_thmE(thmE(n), max_len=3)
    paths = all(path_mult_check(n, i, j, k)
                for n in range(2, 5) for i in range(1, n + 1)
                for j in range(1, n + 1) for k in range(1, n + 1))
    d = thmE(4)
    worked = {"e24": "02340", "e43": "0430", "e44": "040", "e24.e43.e44.e44": "023404304040"}
    encodings = all(d.format_word(decode_amalg(4, w, d)) == x
                    and encode_amalg(4, x, d) == tuple(w.split("."))
                    for w, x in worked.items())
    pairs = sum(c.checked for c in cases if c.name.startswith("word model"))
    _report(10, "matrix-unit fusion rings vs J_0 of the fan systems",
            _all_pass(cases) and paths and encodings, start,
            note=f"{pairs} word pairs {_first_failure(cases)}".rstrip())


def test_11_hecke_oracle():
    start = time.perf_counter()
    cases = []
    for M in (3, 4, 5, 6, 7, 8, INF):
        cases += suite_hecke(dihedral(M), max_sum=10)
    cases += suite_hecke(triangle_456(), max_sum=8)
    pairs = sum(c.checked for c in cases)
    _report(11, "J-ring constants equal the Hecke oracle's gamma", _all_pass(cases), start, 600,
            note=f"{pairs} pairs {_first_failure(cases)}".rstrip())


PROPERTY_SYSTEMS = ("dihedral7", "dihedralinf", "triangle_334", "chain_44", "triangle_456",
                    "thmD_triangle", "thmE_n3", "cycle_4")


def test_12_property_suites():
    start = time.perf_counter()
    systems = builtin_diagrams()
    cases = []
    for name in PROPERTY_SYSTEMS:
        d = systems[name]
        cases += suite_assoc(d, max_len=6, samples=1000, seed=1)
        cases += suite_basedring(d, max_len=6, samples=1000, seed=2)
    sampled = [c for c in cases if "dihedral segments" not in c.name]
    enough = all(c.checked >= 1000 for c in sampled)
    _report(12, "associativity, tau law, anti-involution and support law",
            _all_pass(cases) and enough, start,
            note=f"{len(PROPERTY_SYSTEMS)} systems x 1000 samples {_first_failure(cases)}".rstrip())


if __name__ == "__main__":
    import sys

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn()
            except AssertionError:
                failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
