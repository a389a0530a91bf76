"""The subregular J-ring J_C and its product.

A basis element ``t_x`` is indexed by the unique reduced word ``x`` of an
element of C.  Products are computed purely on words:

* ``t_x t_y = 0`` unless ``x`` ends with the letter ``y`` starts with;
* otherwise both factors are split into dihedral segments, and adjacent
  segments over the same pair of letters are multiplied with the truncated
  Clebsch-Gordan rule until no such pair is left; each remaining sequence of
  segments glues to a single basis word.
"""
from __future__ import annotations

from .coxeter import (
    INF,
    CoxeterDiagram,
    Word,
    alternating,
    dihedral_segments,
    glued_product,
    is_subregular,
    reverse,
)
from .errors import (
    BoundaryMismatch,
    DiagramMismatch,
    NotSubregular,
    SupportMismatch,
)
from .linear import Combination


def _word_key(w):
    return (len(w), w)


class JElement(Combination):
    """Integer combination of basis elements ``t_x`` over one diagram."""

    __slots__ = ()

    @property
    def diagram(self) -> CoxeterDiagram:
        return self.context

    def _check_context(self, other):
        if self.context != other.context:
            raise DiagramMismatch("elements belong to different Coxeter systems")

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, JElement):
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def words(self) -> list[Word]:
        return sorted(self._terms, key=_word_key)

    def render(self, fmt=None, key=None) -> str:
        d = self.context
        return super().render(fmt or d.format_word, key or _word_key)

    def __repr__(self):
        return f"JElement({self.render()})"


def zero(d: CoxeterDiagram) -> JElement:
    return JElement({}, d)


def t(x, d: CoxeterDiagram) -> JElement:
    """The basis element ``t_x``; ``x`` is a word or its label string."""
    w = d.parse_word(x)
    if not is_subregular(w, d):
        raise NotSubregular(f"{d.format_word(w)!r} is not in the subregular cell")
    return JElement({w: 1}, d)


def element(d: CoxeterDiagram, terms) -> JElement:
    """Build a combination from ``{word: coefficient}`` with label strings."""
    out = {}
    for x, c in dict(terms).items():
        w = d.parse_word(x)
        if not is_subregular(w, d):
            raise NotSubregular(f"{d.format_word(w)!r} is not in the subregular cell")
        out[w] = out.get(w, 0) + c
    return JElement(out, d)


def mul_dihedral(x, y, d: CoxeterDiagram) -> JElement:
    """Truncated Clebsch-Gordan product of two alternating words.

    ``x`` has length ``k`` and ends with the letter ``y`` (length ``l``)
    starts with; both alternate in the same two letters ``{s, t}`` with
    ``M = m(s, t)``.  The result is the sum of ``t_z`` over alternating
    ``z`` from ``first(x)`` to ``last(y)`` of lengths ``k + l - 1 - 2j`` for
    ``max(k + l - M, 0) <= j < min(k, l)``.
    """
    x, y = d.parse_word(x), d.parse_word(y)
    return JElement(dict.fromkeys(_dihedral_terms(x, y, d), 1), d)


def _dihedral_terms(x: Word, y: Word, d: CoxeterDiagram) -> list[Word]:
    if not x or not y:
        raise NotSubregular("dihedral factors must be nonempty")
    if x[-1] != y[0]:
        raise BoundaryMismatch(f"{x} ends with {x[-1]}, {y} starts with {y[0]}")
    letters = set(x) | set(y)
    if len(letters) > 2:
        raise SupportMismatch(f"{x} and {y} do not alternate in a common pair")
    if len(letters) == 1:
        return [x]
    for w in (x, y):
        if any(a == b for a, b in zip(w, w[1:])) or any(
                w[i] != w[i - 2] for i in range(2, len(w))):
            raise SupportMismatch(f"{w} is not alternating")
    s = x[-1]
    other = (letters - {s}).pop()
    M = d.m(s, other)
    k, l = len(x), len(y)
    if k >= M or l >= M:
        raise NotSubregular(f"alternating length exceeds m = {M}")
    u = x[0]
    u_other = other if u == s else s
    lo = 0 if M == INF else max(k + l - M, 0)
    return [alternating(u, u_other, k + l - 1 - 2 * j) for j in range(lo, min(k, l))]


def _reduce_segments(seq: tuple, d: CoxeterDiagram, cache: dict | None = None) -> dict:
    """Expand a product of glued-compatible segments into basis words."""
    if cache is None:
        cache = d._cache.setdefault("reduce", {})
    hit = cache.get(seq)
    if hit is not None:
        return hit
    # one-letter factors are absorbed by their neighbours
    if len(seq) > 1 and any(len(w) == 1 for w in seq):
        kept = tuple(w for w in seq if len(w) > 1)
        result = _reduce_segments(kept or seq[:1], d, cache)
        cache[seq] = result
        return result
    for i in range(len(seq) - 1):
        if set(seq[i]) == set(seq[i + 1]):
            result: dict = {}
            for z in _dihedral_terms(seq[i], seq[i + 1], d):
                for w, c in _reduce_segments(seq[:i] + (z,) + seq[i + 2:], d, cache).items():
                    result[w] = result.get(w, 0) + c
            break
    else:
        result = {glued_product(*seq): 1}
    cache[seq] = result
    return result


def mul_basis(x: Word, y: Word, d: CoxeterDiagram, memo: bool = True) -> dict:
    """``t_x t_y`` as a ``{word: coefficient}`` dict (no validation).

    With ``memo=False`` nothing is stored on the diagram, which keeps memory
    flat when sweeping many distinct pairs once.
    """
    if x[-1] != y[0]:
        return {}
    if not memo:
        return _reduce_segments(tuple(dihedral_segments(x)) + tuple(dihedral_segments(y)),
                                d, {})
    cache = d._cache.setdefault("mul", {})
    key = (x, y)
    hit = cache.get(key)
    if hit is None:
        seq = tuple(dihedral_segments(x)) + tuple(dihedral_segments(y))
        hit = _reduce_segments(seq, d)
        cache[key] = hit
    return hit


def mul(a: JElement, b: JElement) -> JElement:
    """Bilinear product in J_C."""
    if a.context != b.context:
        raise DiagramMismatch("elements belong to different Coxeter systems")
    d = a.context
    out: dict = {}
    for x, cx in a.items():
        for y, cy in b.items():
            if x[-1] != y[0]:
                continue
            for z, cz in mul_basis(x, y, d).items():
                out[z] = out.get(z, 0) + cx * cy * cz
    return JElement(out, d)


def product(elements, d: CoxeterDiagram | None = None) -> JElement:
    elements = list(elements)
    if not elements:
        return unit_JC(d)
    out = elements[0]
    for e in elements[1:]:
        out = mul(out, e)
    return out


def segment_product(x, d: CoxeterDiagram) -> JElement:
    """Product of the basis elements of the dihedral segments of ``x``."""
    w = d.parse_word(x)
    return product([JElement({seg: 1}, d) for seg in dihedral_segments(w)], d)


def anti_involution(a: JElement) -> JElement:
    """``t_x -> t_{x^{-1}}``: reverse every basis word."""
    return a.map_keys(reverse)


def unit_JC(d: CoxeterDiagram) -> JElement:
    return JElement({(s,): 1 for s in range(d.n)}, d)


def tau(a: JElement) -> int:
    """Sum of the coefficients on one-letter words."""
    return sum(c for w, c in a.items() if len(w) == 1)


def project_box(a: JElement, s: int, t_: int) -> JElement:
    """Keep the terms whose word starts with ``s`` and ends with ``t_``."""
    return JElement({w: c for w, c in a.items() if w[0] == s and w[-1] == t_},
                    a.context)
