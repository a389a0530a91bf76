"""Structural isomorphisms out of J_C.

* the groupoid algebra of the Coxeter graph and the map ``t_x -> [P_x]``
  for simply-laced systems;
* the odd-edge transport maps ``lambda``, ``rho``, ``phi`` and their walk
  versions, and the matrix isomorphism ``Psi: J_C -> Mat_{S x S}(J_s)``
  for oddly-connected systems;
* classification of the finite boxes ``J_s`` as odd parts of Verlinde
  algebras.
"""
from __future__ import annotations

from collections import deque

from .automaton import enumerate_box, is_box_finite
from .coxeter import INF, CoxeterDiagram, Word, alternating, is_subregular
from .errors import (
    GraphMismatch,
    NotAWalk,
    NotFusionRing,
    NotOddlyConnected,
    NotSimplyLaced,
    NotSubregular,
    WeightNotOddFinite,
)
from .jring import JElement, anti_involution, mul
from .linear import Combination

# ---------------------------------------------------------------------------
# fundamental groupoid of the Coxeter graph


def _adjacent(d: CoxeterDiagram, a: int, b: int) -> bool:
    return a != b and d.m(a, b) >= 3


def spur_normalize(walk, d: CoxeterDiagram) -> Word:
    """Unique spur-free walk homotopic to ``walk`` on the Coxeter graph."""
    walk = tuple(walk)
    if not walk:
        raise NotAWalk("a walk has at least one vertex")
    for a, b in zip(walk, walk[1:]):
        if not _adjacent(d, a, b):
            raise NotAWalk(f"{a} and {b} are not adjacent")
    stack: list[int] = []
    for v in walk:
        if len(stack) >= 2 and stack[-2] == v:
            stack.pop()
        else:
            stack.append(v)
    return tuple(stack)


def is_spur_free(walk) -> bool:
    return all(walk[i] != walk[i + 2] for i in range(len(walk) - 2))


class GroupoidElement(Combination):
    """Integer combination of walk classes (spur-free vertex tuples)."""

    __slots__ = ()

    def _check_context(self, other):
        if self.context != other.context:
            raise GraphMismatch("walk classes on different graphs")

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, GroupoidElement):
            return groupoid_mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        return NotImplemented

    def render(self, fmt=None, key=None) -> str:
        d = self.context
        return super().render(
            fmt or (lambda w: "(" + ",".join(d.generators[i] for i in w) + ")"),
            key or (lambda w: (len(w), w)))

    def __repr__(self):
        return f"GroupoidElement({self.render()})"


def walk_class(walk, d: CoxeterDiagram) -> GroupoidElement:
    return GroupoidElement({spur_normalize(d.parse_word(walk), d): 1}, d)


def groupoid_mul(p: GroupoidElement, q: GroupoidElement) -> GroupoidElement:
    if p.context != q.context:
        raise GraphMismatch("walk classes on different graphs")
    d = p.context
    out: dict = {}
    for a, ca in p.items():
        for b, cb in q.items():
            if a[-1] != b[0]:
                continue
            w = spur_normalize(a + b[1:], d)
            out[w] = out.get(w, 0) + ca * cb
    return GroupoidElement(out, d)


def groupoid_unit(d: CoxeterDiagram) -> GroupoidElement:
    return GroupoidElement({(s,): 1 for s in range(d.n)}, d)


def groupoid_inverse(p: GroupoidElement) -> GroupoidElement:
    return p.map_keys(lambda w: tuple(reversed(w)))


def phi_simply_laced(a: JElement) -> GroupoidElement:
    """``t_{s_1...s_k} -> [(s_1, ..., s_k)]`` for a simply-laced system."""
    d = a.diagram
    if not all(m in (2, 3) for row in d.weights for m in row if m != 1):
        raise NotSimplyLaced("every weight must be 2 or 3")
    return GroupoidElement(dict(a.items()), d)


def phi_simply_laced_inverse(p: GroupoidElement) -> JElement:
    d = p.context
    out = {}
    for w, c in p.items():
        if not is_subregular(w, d):
            raise NotSubregular(f"walk {w} does not spell an element of C")
        out[w] = c
    return JElement(out, d)


# ---------------------------------------------------------------------------
# odd edges


def _check_odd(d: CoxeterDiagram, s: int, t: int) -> int:
    M = d.m(s, t)
    if s == t or M == INF or M % 2 == 0:
        raise WeightNotOddFinite(
            f"m({d.generators[s]},{d.generators[t]}) = {M} is not odd and finite")
    return M


def z_word(s: int, t: int, d: CoxeterDiagram) -> Word:
    """Alternating word ``sts...t`` of length ``m(s, t) - 1``."""
    return alternating(s, t, _check_odd(d, s, t) - 1)


def lambda_edge(s: int, t: int, a: JElement) -> JElement:
    """Left multiplication by ``t_{z(ts)}``: moves words starting at s to t."""
    d = a.diagram
    return mul(JElement({z_word(t, s, d): 1}, d), a)


def rho_edge(s: int, t: int, a: JElement) -> JElement:
    """Right multiplication by ``t_{z(st)}``: moves words ending at s to t."""
    d = a.diagram
    return mul(a, JElement({z_word(s, t, d): 1}, d))


def phi_edge(s: int, t: int, a: JElement) -> JElement:
    return rho_edge(s, t, lambda_edge(s, t, a))


def _check_path(path, d: CoxeterDiagram) -> tuple:
    path = tuple(path)
    if not path:
        raise NotAWalk("empty walk")
    for a, b in zip(path, path[1:]):
        _check_odd(d, a, b)
    return path


def lambda_path(path, a: JElement) -> JElement:
    path = _check_path(path, a.diagram)
    for u, w in zip(path, path[1:]):
        a = lambda_edge(u, w, a)
    return a


def rho_path(path, a: JElement) -> JElement:
    path = _check_path(path, a.diagram)
    for u, w in zip(path, path[1:]):
        a = rho_edge(u, w, a)
    return a


def phi_path(path, a: JElement) -> JElement:
    return lambda_path(path, rho_path(path, a))


def is_oddly_connected(d: CoxeterDiagram) -> bool:
    return all(p is not None for p in odd_paths(d, 0).values())


def odd_paths(d: CoxeterDiagram, s: int) -> dict:
    """BFS walks from ``s`` along odd finite edges, smallest labels first.

    Maps each generator to its walk, or to None when it cannot be reached.
    """
    paths: dict = {s: (s,)}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        for w in range(d.n):
            if w in paths or w == u:
                continue
            M = d.m(u, w)
            if M != INF and M % 2 == 1 and M >= 3:
                paths[w] = paths[u] + (w,)
                queue.append(w)
    return {t: paths.get(t) for t in range(d.n)}


class MatrixJElement:
    """``S x S`` matrix with entries in ``J_s``, stored sparsely."""

    __slots__ = ("diagram", "base", "entries")

    def __init__(self, diagram: CoxeterDiagram, base: int, entries=None):
        self.diagram = diagram
        self.base = base
        self.entries = {}
        for key, f in dict(entries or {}).items():
            if f:
                for w in f:
                    if w[0] != base or w[-1] != base:
                        raise NotSubregular(
                            f"entry {key} has term {diagram.format_word(w)} outside J_s")
                self.entries[key] = f

    def __eq__(self, other):
        if not isinstance(other, MatrixJElement):
            return NotImplemented
        return (self.diagram == other.diagram and self.base == other.base
                and self.entries == other.entries)

    __hash__ = None

    def __add__(self, other):
        out = dict(self.entries)
        for k, f in other.entries.items():
            out[k] = out[k] + f if k in out else f
        return MatrixJElement(self.diagram, self.base, out)

    def __mul__(self, other):
        out: dict = {}
        for (a, b), f in self.entries.items():
            for (c, e), g in other.entries.items():
                if b == c:
                    fg = mul(f, g)
                    out[(a, e)] = out[(a, e)] + fg if (a, e) in out else fg
        return MatrixJElement(self.diagram, self.base, out)

    def __repr__(self):
        d = self.diagram
        inner = ", ".join(f"E[{d.generators[a]},{d.generators[b]}]({f.render()})"
                          for (a, b), f in sorted(self.entries.items()))
        return f"MatrixJElement({inner or '0'})"


class PsiMap:
    """The isomorphism ``J_C -> Mat_{S x S}(J_s)`` of an oddly-connected system."""

    def __init__(self, d: CoxeterDiagram, base: int):
        paths = odd_paths(d, base)
        if any(p is None for p in paths.values()):
            raise NotOddlyConnected("some generators are not joined by odd edges")
        self.diagram = d
        self.base = base
        self.paths = paths  # s -> t
        self.back = {t: tuple(reversed(p)) for t, p in paths.items()}  # t -> s

    def __call__(self, a: JElement) -> MatrixJElement:
        out: dict = {}
        for x, c in a.items():
            f = JElement({x: c}, self.diagram)
            f = lambda_path(self.back[x[0]], rho_path(self.back[x[-1]], f))
            key = (x[0], x[-1])
            out[key] = out[key] + f if key in out else f
        return MatrixJElement(self.diagram, self.base, out)

    def inverse(self, m: MatrixJElement) -> JElement:
        out = JElement({}, self.diagram)
        for (a, b), f in m.entries.items():
            out = out + lambda_path(self.paths[a], rho_path(self.paths[b], f))
        return out

    def unit(self) -> MatrixJElement:
        return MatrixJElement(self.diagram, self.base,
                              {(u, u): JElement({(self.base,): 1}, self.diagram)
                               for u in range(self.diagram.n)})


def psi_matrix(base: int, a: JElement) -> MatrixJElement:
    return PsiMap(a.diagram, base)(a)


def matrix_anti_involution(m: MatrixJElement) -> MatrixJElement:
    return MatrixJElement(m.diagram, m.base,
                          {(b, a): anti_involution(f) for (a, b), f in m.entries.items()})


# ---------------------------------------------------------------------------
# finite boxes


def classify_fusion(d: CoxeterDiagram, s: int = 0):
    """``M`` with ``J_s`` isomorphic to the odd part of ``Ver_M``, or None.

    Only finite boxes qualify; ``M`` is then the largest edge weight.
    """
    if not is_box_finite(d, s):
        return None
    weights = [m for _, _, m in d.edges()]
    return max(weights, default=3)


def verlinde_identification(d: CoxeterDiagram, s: int) -> dict:
    """Explicit basis bijection ``J_s -> Ver_M^odd``: ``{word: k}`` meaning ``t_x -> L_k``.

    ``t_x`` is transported along a weight-3 walk to an endpoint ``a`` of the
    heaviest edge ``{a, b}``, where it becomes an alternating word ``aba...``
    of odd length ``k``.
    """
    M = classify_fusion(d, s)
    if M is None:
        raise NotFusionRing(f"J_{d.generators[s]} is not a fusion ring")
    heavy = [(a, b) for a, b, m in d.edges() if m == M] or [(s, s)]
    a, b = heavy[0]
    walk = _tree_walk(d, s, {a, b})
    target = walk[-1]
    box = enumerate_box(d, s, s, _box_bound(d))
    out = {}
    for x in box:
        img = phi_path(walk, JElement({x: 1}, d))
        (w, c), = img.items()
        if c != 1 or len(set(w)) > 2 or w[0] != target:
            raise AssertionError(f"unexpected transport image {img.render()}")
        out[x] = len(w)
    return out


def _tree_walk(d: CoxeterDiagram, s: int, targets: set) -> tuple:
    paths: dict = {s: (s,)}
    queue = deque([s])
    while queue:
        u = queue.popleft()
        if u in targets:
            return paths[u]
        for w in d.neighbours(u):
            if w not in paths:
                paths[w] = paths[u] + (w,)
                queue.append(w)
    raise NotAWalk("no walk to the heavy edge")


def _box_bound(d: CoxeterDiagram) -> int:
    """Length bound covering a finite box: every word there walks a tree."""
    M = max([m for _, _, m in d.edges()], default=3)
    return 2 * d.n + int(M)


def order_two_elements(d: CoxeterDiagram, s: int, max_len: int) -> list[Word]:
    """Basis words ``x != s`` of ``J_s`` with ``t_x t_x = t_s``, up to ``max_len``."""
    unit = JElement({(s,): 1}, d)
    out = []
    for x in enumerate_box(d, s, s, max_len):
        if len(x) > 1:
            tx = JElement({x: 1}, d)
            if mul(tx, tx) == unit:
                out.append(x)
    return out
