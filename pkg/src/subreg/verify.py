"""Verification suites shared by the command line and the test suite.

Each suite returns a list of :class:`Case` records, one per checked law.
A case counts how many instances it looked at and keeps the first
counterexample it met.  Suites that do not apply to a diagram raise
:class:`~subreg.errors.SuiteMismatch`.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass

from .automaton import enumerate_box, enumerate_cell, is_box_finite
from .coxeter import CoxeterDiagram, reverse
from .errors import SuiteMismatch
from .fusion import (
    FreeFusionElement,
    VerlindeElement,
    _ffr_basis,
    decode_amalg,
    decode_unitary,
    encode_amalg,
    encode_unitary,
    fusion_set_U,
    fusion_set_Z,
    path_mult_check,
    unitary_to_j,
)
from .hecke import HeckeOracle
from .jring import JElement, anti_involution, mul, mul_basis, segment_product, tau, unit_JC
from .structure import (
    GroupoidElement,
    PsiMap,
    classify_fusion,
    is_oddly_connected,
    phi_simply_laced,
    spur_normalize,
    verlinde_identification,
)
from .systems import thmD_triangle, thmE


@dataclass
class Case:
    name: str
    checked: int = 0
    failures: int = 0
    example: str = ""

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, describe=None) -> None:
        self.checked += 1
        if not ok:
            self.failures += 1
            if not self.example and describe is not None:
                self.example = describe() if callable(describe) else str(describe)

    def line(self, number: int) -> str:
        head = "ok" if self.passed else "not ok"
        text = f"{head} {number} - {self.name} ({self.checked} checked"
        if self.failures:
            text += f", {self.failures} failed; first: {self.example}"
        return text + ")"


def tap_report(cases: list[Case]) -> list[str]:
    return [f"1..{len(cases)}"] + [c.line(i) for i, c in enumerate(cases, 1)]


def _basis(x, d) -> JElement:
    return JElement({x: 1}, d)


def _by_first(cell):
    out: dict = {}
    for w in cell:
        out.setdefault(w[0], []).append(w)
    return out


# ---------------------------------------------------------------------------
# ring axioms


def suite_assoc(d: CoxeterDiagram, max_len: int = 6, samples: int = 1000,
                seed: int = 0) -> list[Case]:
    rng = random.Random(seed)
    cell = enumerate_cell(d, max_len)
    starts = _by_first(cell)
    assoc = Case(f"associativity on composable basis triples (l <= {max_len})")
    positive = Case("structure constants are nonnegative")
    for _ in range(samples):
        x = rng.choice(cell)
        y = rng.choice(starts[x[-1]])
        z = rng.choice(starts[y[-1]])
        tx, ty, tz = _basis(x, d), _basis(y, d), _basis(z, d)
        xy = mul(tx, ty)
        assoc.record(mul(xy, tz) == mul(tx, mul(ty, tz)),
                     lambda: "x,y,z = " + ", ".join(map(d.format_word, (x, y, z))))
        positive.record(xy.is_nonnegative(), lambda: f"{xy.render()}")
    return [assoc, positive]


def suite_basedring(d: CoxeterDiagram, max_len: int = 6, samples: int = 1000,
                    seed: int = 0) -> list[Case]:
    rng = random.Random(seed)
    cell = enumerate_cell(d, max_len)
    starts = _by_first(cell)
    unit = unit_JC(d)
    tau_law = Case("tau(t_x t_y) = [y = x^-1]")
    anti = Case("anti-involution reverses products")
    ends = Case("t_x t_y is supported on words from first(x) to last(y)")
    nonzero = Case("t_x t_y != 0 exactly when last(x) = first(y)")
    unital = Case("sum of t_s is a two-sided unit")
    segments = Case(f"t_x equals the product of its dihedral segments (l <= {max_len})")
    for _ in range(samples):
        x = rng.choice(cell)
        roll = rng.random()
        if roll < 0.25:
            y = reverse(x)
        elif roll < 0.85:
            y = rng.choice(starts[x[-1]])
        else:
            y = rng.choice(cell)
        tx, ty = _basis(x, d), _basis(y, d)
        p = mul(tx, ty)
        pair = lambda: f"x={d.format_word(x)}, y={d.format_word(y)}"  # noqa: E731
        tau_law.record(tau(p) == (1 if y == reverse(x) else 0), pair)
        anti.record(anti_involution(p) == mul(anti_involution(ty), anti_involution(tx)), pair)
        ends.record(all(w[0] == x[0] and w[-1] == y[-1] for w in p), pair)
        nonzero.record(bool(p) == (x[-1] == y[0]), pair)
        unital.record(mul(unit, tx) == tx == mul(tx, unit), pair)
    for x in cell:
        segments.record(segment_product(x, d) == _basis(x, d), lambda: d.format_word(x))
    return [tau_law, anti, ends, nonzero, unital, segments]


# ---------------------------------------------------------------------------
# structure theorems


def suite_thmA(d: CoxeterDiagram, max_len: int = 6) -> list[Case]:
    if not d.is_simply_laced():
        raise SuiteMismatch(f"{d.name or 'diagram'} is not simply laced")
    cell = enumerate_cell(d, max_len)
    hom = Case(f"Phi(t_x t_y) = [P_x][P_y] for l(x), l(y) <= {max_len}")
    for x, y in itertools.product(cell, repeat=2):
        tx, ty = _basis(x, d), _basis(y, d)
        hom.record(phi_simply_laced(mul(tx, ty)) == phi_simply_laced(tx) * phi_simply_laced(ty),
                   lambda: f"x={d.format_word(x)}, y={d.format_word(y)}")
    # every spur-free walk with at most max_len vertices is hit exactly once
    bij = Case(f"Phi is a bijection onto spur-free walks with <= {max_len} vertices")
    image = {spur_normalize(x, d) for x in cell}
    walks = set()
    frontier = [(s,) for s in range(d.n)]
    while frontier:
        walks.update(frontier)
        frontier = [w + (u,) for w in frontier if len(w) < max_len
                    for u in d.neighbours(w[-1]) if len(w) < 2 or u != w[-2]]
    for w in walks:
        bij.record(w in image, lambda: ",".join(d.generators[i] for i in w))
    bij.record(len(image) == len(cell) == len(walks), f"{len(cell)} words, {len(walks)} walks")
    unit = Case("Phi sends the unit to the sum of trivial walks")
    unit.record(phi_simply_laced(unit_JC(d)) == GroupoidElement({(s,): 1 for s in range(d.n)}, d))
    return [hom, bij, unit]


def suite_thmB(d: CoxeterDiagram, max_len: int = 6, base: int = 0) -> list[Case]:
    if not is_oddly_connected(d):
        raise SuiteMismatch(f"{d.name or 'diagram'} is not oddly connected")
    psi = PsiMap(d, base)
    cell = enumerate_cell(d, max_len)
    images = {x: psi(_basis(x, d)) for x in cell}
    hom = Case(f"Psi(t_x t_y) = Psi(t_x) Psi(t_y) for l(x), l(y) <= {max_len}")
    for x, y in itertools.product(cell, repeat=2):
        hom.record(psi(mul(_basis(x, d), _basis(y, d))) == images[x] * images[y],
                   lambda: f"x={d.format_word(x)}, y={d.format_word(y)}")
    inv = Case("Psi sends bases to matrix units bijectively and Psi' inverts it")
    seen = set()
    for x in cell:
        m = images[x]
        entry = None
        if len(m.entries) == 1:
            (key, f), = m.entries.items()
            if len(f) == 1 and f[next(iter(f))] == 1:
                entry = (key, next(iter(f)))
        inv.record(entry is not None and entry not in seen and psi.inverse(m) == _basis(x, d),
                   lambda: d.format_word(x))
        seen.add(entry)
    unit = Case("Psi(1) is the identity matrix")
    unit.record(psi(unit_JC(d)) == psi.unit())
    return [hom, inv, unit]


def suite_thmC(d: CoxeterDiagram, base: int = 0) -> list[Case]:
    if not is_box_finite(d, base):
        raise SuiteMismatch(f"J_{d.generators[base]} is not a fusion ring")
    M = classify_fusion(d, base)
    ident = verlinde_identification(d, base)
    bij = Case(f"J_{d.generators[base]} basis matches odd L_k of Ver_{M}")
    bij.record(sorted(ident.values()) == list(range(1, int(M), 2)), str(sorted(ident.values())))
    hom = Case("identification is multiplicative")
    box = list(ident)
    for x in box:
        for y in box:
            lhs = mul(_basis(x, d), _basis(y, d))
            img = VerlindeElement({ident[w]: c for w, c in lhs.items()}, M)
            rhs = VerlindeElement({ident[x]: 1}, M) * VerlindeElement({ident[y]: 1}, M)
            hom.record(img == rhs, lambda: f"x={d.format_word(x)}, y={d.format_word(y)}")
    return [bij, hom]


def _same_system(d: CoxeterDiagram, ref: CoxeterDiagram) -> bool:
    if sorted(d.generators) != sorted(ref.generators):
        return False
    return all(d.m(d.index(a), d.index(b)) == ref.m(ref.index(a), ref.index(b))
               for a in ref.generators for b in ref.generators)


def _fusion_words(letters, max_len):
    for k in range(max_len + 1):
        yield from itertools.product(letters, repeat=k)


def suite_thmD(d: CoxeterDiagram, max_sum: int = 6, max_len: int = 12) -> list[Case]:
    if not _same_system(d, thmD_triangle()):
        raise SuiteMismatch("the unitary suite needs m(0,1) = m(0,2) = 3, m(1,2) = inf")
    U = fusion_set_U()
    words = list(_fusion_words(U.letters, max_sum))
    images = {w: _basis(decode_unitary(w, d), d) for w in words}
    hom = Case(f"word model is multiplicative for |v| + |w| <= {max_sum}")
    for v in words:
        for w in words:
            if len(v) + len(w) > max_sum:
                continue
            prod = FreeFusionElement({v: 1}, U) * FreeFusionElement({w: 1}, U)
            hom.record(unitary_to_j(prod, d) == mul(images[v], images[w]),
                       lambda: f"v={U.format(v)}, w={U.format(w)}")
    trip = Case(f"decode(encode(x)) = x on J_0 up to length {max_len}")
    zero = d.index("0")
    box = enumerate_box(d, zero, zero, max_len)
    codes = set()
    for x in box:
        code = encode_unitary(x, d)
        codes.add(code)
        trip.record(decode_unitary(code, d) == x, lambda: d.format_word(x))
    inj = Case("encode is injective on the box")
    inj.record(len(codes) == len(box))
    back = Case("encode(decode(w)) = w on fusion words")
    for w in words:
        back.record(encode_unitary(decode_unitary(w, d), d) == w, lambda: U.format(w))
    return [hom, trip, inj, back]


WORKED_ENCODINGS = (
    (("e24",), "02340"),
    (("e43",), "0430"),
    (("e44",), "040"),
    (("e24", "e43", "e44", "e44"), "023404304040"),
)


def suite_thmE(d: CoxeterDiagram, max_len: int = 3) -> list[Case]:
    n = d.n - 1
    if n < 2 or not _same_system(d, thmE(n)):
        raise SuiteMismatch("the amalgamation suite needs a fan system (W_n, S_n)")
    Z = fusion_set_Z(n)
    words = list(_fusion_words(Z.letters, max_len))
    images = {w: decode_amalg(n, w, d) for w in words}
    hom = Case(f"word model is multiplicative for |v|, |w| <= {max_len}")
    decoded = dict(images)

    def image(u):
        hit = decoded.get(u)
        if hit is None:
            hit = decoded[u] = decode_amalg(n, u, d)
        return hit

    for v in words:
        for w in words:
            prod = _ffr_basis(v, w, Z)
            lhs: dict = {}
            for u, c in prod.items():
                x = image(u)
                lhs[x] = lhs.get(x, 0) + c
            hom.record(lhs == mul_basis(images[v], images[w], d, memo=False),
                       lambda: f"v={Z.format(v)}, w={Z.format(w)}")
    trip = Case("encode(decode(w)) = w")
    for w in words:
        trip.record(encode_amalg(n, images[w], d) == w, lambda: Z.format(w))
    paths = Case(f"t_(i..j) t_(j..k) = t_(i..k) on the bottom path, n = {n}")
    for i, j, k in itertools.product(range(1, n + 1), repeat=3):
        paths.record(path_mult_check(n, i, j, k), f"(i,j,k)=({i},{j},{k})")
    cases = [hom, trip, paths]
    if n >= 4:
        worked = Case("worked encodings")
        for w, x in WORKED_ENCODINGS:
            worked.record(d.format_word(decode_amalg(n, w, d)) == x
                          and encode_amalg(n, x, d) == w, Z.format(w))
        cases.append(worked)
    return cases


def suite_hecke(d: CoxeterDiagram, max_sum: int = 8) -> list[Case]:
    oracle = HeckeOracle(d, max_sum)
    cell = enumerate_cell(d, max_sum - 1)
    agree = Case(f"gamma(x, y, z) equals the J-ring constant for l(x) + l(y) <= {max_sum}")
    for x in cell:
        for y in cell:
            if len(x) + len(y) > max_sum:
                continue
            j = mul_basis(x, y, d) if x[-1] == y[0] else {}
            agree.record(j == oracle.gamma_row(x, y),
                         lambda: f"x={d.format_word(x)}, y={d.format_word(y)}")
    return [agree]


SUITES = {
    "assoc": suite_assoc,
    "basedring": suite_basedring,
    "thmA": suite_thmA,
    "thmB": suite_thmB,
    "thmC": suite_thmC,
    "thmD": suite_thmD,
    "thmE": suite_thmE,
    "hecke": suite_hecke,
}
