"""The subregular graph D: enumerating the cell C and its boxes as walks.

Vertices of D are alternating words ``(s, t)_k`` with ``0 < k < m(s, t)``;
a walk starting at a one-letter vertex spells the element of C whose
successive trailing dihedral segments are the visited vertices.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .coxeter import (
    INF,
    CoxeterDiagram,
    Word,
    alternating,
    dihedral_segments,
    is_subregular,
)
from .errors import NotAWalk, NotIrreducible, NotSubregular

EXTEND = "a"
NEW_SEGMENT = "b"


def _canonical(word: Word) -> tuple:
    return (len(word), word)


@dataclass(frozen=True)
class SubregularGraph:
    diagram: CoxeterDiagram
    k_cap: int
    vertices: tuple[Word, ...]
    edges: dict  # tail -> tuple of (head, kind)

    def successors(self, v: Word) -> tuple:
        return self.edges.get(v, ())

    def edge_kind(self, tail: Word, head: Word) -> str | None:
        for h, kind in self.successors(tail):
            if h == head:
                return kind
        return None

    def edge_count(self, kind: str | None = None) -> int:
        return sum(1 for succ in self.edges.values() for _, k in succ
                   if kind is None or k == kind)


def _edge_kind(tail: Word, head: Word, d: CoxeterDiagram) -> str | None:
    """Kind of the edge ``tail -> head`` of D, or None if there is none."""
    if not tail or not head:
        return None
    if len(head) >= 2 and head[:-1] == tail and len(head) < d.m(head[0], head[1]):
        return EXTEND
    # a new segment starts with exactly two letters
    if (len(tail) >= 2 and len(head) == 2 and set(tail) != set(head)
            and tail[-1] == head[0] and 2 < d.m(head[0], head[1])):
        return NEW_SEGMENT
    return None


def build_graph(d: CoxeterDiagram, k_cap: int) -> SubregularGraph:
    """Subregular graph of ``d`` with alternating words cut at length ``k_cap``.

    Only type-(b) edges into two-letter vertices are kept: an edge into a
    longer vertex or a one-letter vertex would not extend the spelled word by
    the vertex's last letter.
    """
    if k_cap < 2:
        raise ValueError("k_cap must be at least 2")
    verts = {(s,) for s in range(d.n)}
    for s in range(d.n):
        for t in range(d.n):
            if s == t:
                continue
            top = min(d.m(s, t) - 1, k_cap)
            k = 2
            while k <= top:
                verts.add(alternating(s, t, k))
                k += 1
    vertices = tuple(sorted(verts, key=_canonical))
    two_letter: dict[int, list] = {}
    for v in vertices:
        if len(v) == 2:
            two_letter.setdefault(v[0], []).append(v)
    edges = {}
    for v in vertices:
        succ = []
        if len(v) == 1:
            for w in two_letter.get(v[0], []):
                succ.append((w, EXTEND))
        else:
            ext = v + (v[-2],)
            if ext in verts:
                succ.append((ext, EXTEND))
            for w in two_letter.get(v[-1], []):
                if set(w) != set(v):
                    succ.append((w, NEW_SEGMENT))
        edges[v] = tuple(sorted(succ, key=lambda e: _canonical(e[0])))
    return SubregularGraph(d, k_cap, vertices, edges)


def walk_to_word(walk, d: CoxeterDiagram | None = None) -> Word:
    """Spell the word of a walk: one letter ``T(v)`` per visited vertex.

    The walk must start at a one-letter vertex.  When ``d`` is given the
    edges are checked against the subregular graph of ``d``.
    """
    walk = [tuple(v) for v in walk]
    if not walk or len(walk[0]) != 1:
        raise NotAWalk("a walk must start at a one-letter vertex")
    if d is not None:
        for a, b in zip(walk, walk[1:]):
            if _edge_kind(a, b, d) is None:
                raise NotAWalk(f"no edge {a} -> {b}")
    return tuple(v[-1] for v in walk)


def word_to_walk(x, d: CoxeterDiagram) -> tuple[Word, ...]:
    x = tuple(x)
    if not is_subregular(x, d):
        raise NotSubregular(f"{d.format_word(x)} is not in the subregular cell")
    return tuple(dihedral_segments(x[:i])[-1] for i in range(1, len(x) + 1))


def _walk_words(d: CoxeterDiagram, starts, max_len: int):
    """Breadth-first enumeration of the words spelled by walks from ``starts``."""
    if max_len < 1:
        return []
    graph = build_graph(d, max(2, max_len + 1))
    out = []
    frontier = deque(((s,), (s,)) for s in starts)
    while frontier:
        vertex, word = frontier.popleft()
        out.append(word)
        if len(word) == max_len:
            continue
        for head, _ in graph.successors(vertex):
            frontier.append((head, word + (head[-1],)))
    return out


def enumerate_cell(d: CoxeterDiagram, max_len: int) -> list[Word]:
    """All elements of C of length at most ``max_len``, by (length, word)."""
    return sorted(_walk_words(d, range(d.n), max_len), key=_canonical)


def enumerate_box(d: CoxeterDiagram, a: int, b: int, max_len: int) -> list[Word]:
    """Elements of C whose word starts with ``a`` and ends with ``b``."""
    return sorted((w for w in _walk_words(d, [a], max_len) if w[-1] == b),
                  key=_canonical)


def is_irreducible(d: CoxeterDiagram) -> bool:
    """Connectivity of the Coxeter graph (edges with ``m >= 3``)."""
    seen = {0}
    stack = [0]
    while stack:
        s = stack.pop()
        for t in d.neighbours(s):
            if t not in seen:
                seen.add(t)
                stack.append(t)
    return len(seen) == d.n


def is_box_finite(d: CoxeterDiagram, s: int | None = None) -> bool:
    """Whether the box of words starting and ending with ``s`` is finite.

    The answer does not depend on ``s``: it holds exactly when the Coxeter
    graph is a tree without infinite edges and with at most one edge of
    weight above 3.
    """
    if not is_irreducible(d):
        raise NotIrreducible(f"diagram {d.name or d.generators} is not connected")
    edges = d.edges()
    if len(edges) != d.n - 1:
        return False
    if any(m == INF for _, _, m in edges):
        return False
    return sum(1 for _, _, m in edges if m > 3) <= 1
