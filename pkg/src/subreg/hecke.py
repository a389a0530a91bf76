"""Hecke algebra oracle on a length-bounded ball of W.

Everything here is independent of :mod:`subreg.jring`: group elements are
found by braid-move closure of reduced words, the Kazhdan-Lusztig basis is
built by the ``c_s c_y`` recursion, and ``gamma`` reads the coefficient of
``v`` in ``c_x c_y`` expressed back in the KL basis.

Normalisation: ``(T_s - v)(T_s + v^-1) = 0`` and ``c_s = T_s + v^-1``.
"""
from __future__ import annotations

from collections import deque
from typing import Iterable

from .coxeter import INF, CoxeterDiagram, Word, alternating, is_subregular
from .errors import BallOverflow, BallTooLarge, NotSubregular

DEFAULT_CAP = 20000


# ---------------------------------------------------------------------------
# Laurent polynomials in v


def _padd(acc: dict, p: dict, scale: int = 1, shift: int = 0) -> None:
    for e, c in p.items():
        e += shift
        n = acc.get(e, 0) + scale * c
        if n:
            acc[e] = n
        else:
            acc.pop(e, None)


def _pmul(p: dict, q: dict) -> dict:
    out: dict = {}
    for e1, c1 in p.items():
        for e2, c2 in q.items():
            e = e1 + e2
            n = out.get(e, 0) + c1 * c2
            if n:
                out[e] = n
            else:
                out.pop(e, None)
    return out


class LaurentPoly:
    """Element of ``Z[v, v^-1]`` stored as ``{exponent: coefficient}``."""

    __slots__ = ("_c",)

    def __init__(self, coeffs=None):
        self._c = {int(e): int(c) for e, c in dict(coeffs or {}).items() if c}

    @classmethod
    def v(cls, power: int = 1) -> "LaurentPoly":
        return cls({power: 1})

    @property
    def coeffs(self) -> dict:
        return dict(self._c)

    def coeff(self, e: int) -> int:
        return self._c.get(e, 0)

    def degree(self) -> int | None:
        return max(self._c) if self._c else None

    def low_degree(self) -> int | None:
        return min(self._c) if self._c else None

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._c.values())

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, int):
            return self._c == ({0: other} if other else {})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._c == other._c

    __hash__ = None

    def __add__(self, other):
        other = _as_poly(other)
        acc = dict(self._c)
        _padd(acc, other._c)
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({e: -c for e, c in self._c.items()})

    def __sub__(self, other):
        return self + (-_as_poly(other))

    def __rsub__(self, other):
        return _as_poly(other) - self

    def __mul__(self, other):
        return LaurentPoly(_pmul(self._c, _as_poly(other)._c))

    __rmul__ = __mul__

    def __repr__(self):
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c, reverse=True):
            c = self._c[e]
            mono = "" if e == 0 else ("v" if e == 1 else f"v^{e}")
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _as_poly(x) -> LaurentPoly:
    if isinstance(x, LaurentPoly):
        return x
    if isinstance(x, int):
        return LaurentPoly({0: x})
    raise TypeError(f"cannot treat {x!r} as a Laurent polynomial")


# ---------------------------------------------------------------------------
# the ball


def _braid_closure(word: Word, d: CoxeterDiagram) -> frozenset:
    """All words reachable from ``word`` by braid moves."""
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            s, t = w[i], w[i + 1]
            m = d.m(s, t)
            if m == INF or i + m > len(w):
                continue
            if w[i:i + m] == alternating(s, t, m):
                nw = w[:i] + alternating(t, s, m) + w[i + m:]
                if nw not in seen:
                    seen.add(nw)
                    queue.append(nw)
    return frozenset(seen)


def _is_subsequence(small: Word, big: Word) -> bool:
    it = iter(big)
    return all(letter in it for letter in small)


class Ball:
    """All elements of ``W`` of length at most ``L``.

    Elements are integers ``0..size-1`` in (length, canonical word) order;
    element 0 is the identity.  The canonical word is the lexicographically
    least reduced word.
    """

    def __init__(self, d: CoxeterDiagram, L: int, cap: int = DEFAULT_CAP):
        if L < 0:
            raise ValueError("L must be nonnegative")
        self.diagram = d
        self.L = L
        self.cap = cap
        levels: list[list[frozenset]] = [[frozenset({()})]]
        known: set = {()}
        total = 1
        for k in range(L):
            nxt = []
            for rw in levels[-1]:
                right = {w[-1] for w in rw if w}
                base = min(rw)
                for s in range(d.n):
                    if s in right:
                        continue
                    cand = base + (s,)
                    if cand in known:
                        continue
                    closure = _braid_closure(cand, d)
                    known.update(closure)
                    nxt.append(closure)
                    total += 1
                    if total > cap:
                        raise BallTooLarge(f"ball exceeds {cap} elements")
            nxt.sort(key=min)
            levels.append(nxt)
        self.reduced: list[frozenset] = [rw for lvl in levels for rw in lvl]
        self.words: list[Word] = [min(rw) for rw in self.reduced]
        self.length: list[int] = [len(w) for w in self.words]
        self.index: dict = {}
        for i, rw in enumerate(self.reduced):
            for w in rw:
                self.index[w] = i
        self.left_descents = [frozenset(w[0] for w in rw if w) for rw in self.reduced]
        self.right_descents = [frozenset(w[-1] for w in rw if w) for rw in self.reduced]
        self._lmul = [[self._left(s, i) for i in range(len(self.words))]
                      for s in range(d.n)]
        self._bruhat: dict = {}

    def __len__(self):
        return len(self.words)

    def _left(self, s: int, i: int) -> int:
        if s in self.left_descents[i]:
            w = next(w for w in self.reduced[i] if w[0] == s)
            return self.index[w[1:]]
        return self.index.get((s,) + self.words[i], -1)

    def lookup(self, word) -> int:
        """Index of the element with reduced word ``word``."""
        word = tuple(word)
        try:
            return self.index[word]
        except KeyError:
            if len(word) > self.L:
                raise BallOverflow(f"{word} is longer than {self.L}") from None
            raise KeyError(f"{word} is not a reduced word") from None

    def left_mul(self, s: int, i: int) -> int:
        j = self._lmul[s][i]
        if j < 0:
            raise BallOverflow(f"s*w leaves the ball of radius {self.L}")
        return j

    def format(self, i: int) -> str:
        return self.diagram.format_word(self.words[i])

    def bruhat_leq(self, i: int, j: int) -> bool:
        """Subword property against the canonical word of ``j``."""
        key = (i, j)
        hit = self._bruhat.get(key)
        if hit is None:
            if self.length[i] > self.length[j]:
                hit = False
            else:
                big = self.words[j]
                hit = any(_is_subsequence(w, big) for w in self.reduced[i])
            self._bruhat[key] = hit
        return hit


def build_ball(d: CoxeterDiagram, L: int, cap: int = DEFAULT_CAP) -> Ball:
    return Ball(d, L, cap)


# ---------------------------------------------------------------------------
# Hecke elements


class HeckeElement:
    """Sparse ``{ball index: LaurentPoly}`` in a fixed basis (T or KL)."""

    __slots__ = ("ball", "_c")

    def __init__(self, ball: Ball, coeffs=None):
        self.ball = ball
        self._c = {}
        for i, p in dict(coeffs or {}).items():
            p = p._c if isinstance(p, LaurentPoly) else dict(p)
            if p:
                self._c[i] = dict(p)

    def coeff(self, i: int) -> LaurentPoly:
        return LaurentPoly(self._c.get(i, {}))

    def support(self) -> list[int]:
        return sorted(self._c)

    def items(self):
        return ((i, LaurentPoly(p)) for i, p in sorted(self._c.items()))

    def __eq__(self, other):
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.ball is other.ball and self._c == other._c

    __hash__ = None

    def __repr__(self):
        if not self._c:
            return "0"
        return " + ".join(f"({LaurentPoly(p)})T_{self.ball.format(i)}"
                          for i, p in sorted(self._c.items()))


def _t_left(ball: Ball, s: int, h: dict) -> dict:
    out: dict = {}
    for w, p in h.items():
        sw = ball.left_mul(s, w)
        acc = out.setdefault(sw, {})
        _padd(acc, p)
        if not acc:
            del out[sw]
        if s in ball.left_descents[w]:
            acc = out.setdefault(w, {})
            _padd(acc, p, 1, 1)
            _padd(acc, p, -1, -1)
            if not acc:
                del out[w]
    return out


def t_mul_left(s: int, h: HeckeElement) -> HeckeElement:
    """``T_s h`` in T-coordinates."""
    return HeckeElement(h.ball, _t_left(h.ball, s, h._c))


def standard(ball: Ball, i: int) -> HeckeElement:
    return HeckeElement(ball, {i: {0: 1}})


class KLTable:
    """KL basis of every element of a ball, in T-coordinates.

    ``p[y]`` maps ``x`` to ``p_{x,y}``; positivity, triangularity and
    ``p_{y,y} = 1`` are asserted while building.
    """

    def __init__(self, ball: Ball):
        self.ball = ball
        self.p: list[dict] = []
        for y in range(len(ball)):
            self.p.append(self._build(y))

    def _build(self, y: int) -> dict:
        ball = self.ball
        if y == 0:
            return {0: {0: 1}}
        s = ball.words[y][0]
        yp = ball.left_mul(s, y)
        cy = self.p[yp]
        out = _t_left(ball, s, cy)
        for w, p in cy.items():
            acc = out.setdefault(w, {})
            _padd(acc, p, 1, -1)
            if not acc:
                del out[w]
        for z, pz in cy.items():
            if z == yp or s not in ball.left_descents[z]:
                continue
            mu = pz.get(-1, 0)
            if mu:
                for w, p in self.p[z].items():
                    acc = out.setdefault(w, {})
                    _padd(acc, p, -mu)
                    if not acc:
                        del out[w]
        assert out.get(y) == {0: 1}, "KL basis must be unitriangular"
        for x, p in out.items():
            if x != y:
                assert max(p) <= -1, f"p_{{x,y}} has degree >= 0 for {x}, {y}"
                assert all(c > 0 for c in p.values()), "negative KL coefficient"
        return out

    def mu(self, x: int, y: int) -> int:
        return self.p[y].get(x, {}).get(-1, 0)

    def poly(self, x: int, y: int) -> LaurentPoly:
        return LaurentPoly(self.p[y].get(x, {}))

    def element(self, y: int) -> HeckeElement:
        return HeckeElement(self.ball, self.p[y])


class HeckeOracle:
    """Products ``c_x c_y`` and the ``gamma`` coefficients on one ball."""

    def __init__(self, d: CoxeterDiagram, L: int, cap: int = DEFAULT_CAP):
        self.diagram = d
        self.ball = Ball(d, L, cap)
        self.kl = KLTable(self.ball)
        self._tuc_for = None
        self._tuc: dict = {}
        self._products: dict = {}

    def _t_times_cy(self, u: int, y: int) -> dict:
        if self._tuc_for != y:
            self._tuc_for = y
            self._tuc = {0: self.kl.p[y]}
        hit = self._tuc.get(u)
        if hit is None:
            s = self.ball.words[u][0]
            hit = _t_left(self.ball, s, self._t_times_cy(self.ball.left_mul(s, u), y))
            self._tuc[u] = hit
        return hit

    def to_kl(self, h: dict) -> dict:
        """Rewrite T-coordinates in the KL basis (triangular solve)."""
        ball, h = self.ball, {w: dict(p) for w, p in h.items()}
        out = {}
        while h:
            z = max(h, key=lambda w: (ball.length[w], w))
            f = dict(h[z])
            out[z] = f
            for w, p in self.kl.p[z].items():
                acc = h.setdefault(w, {})
                _padd(acc, _pmul(f, p), -1)
                if not acc:
                    del h[w]
        return out

    def c_mul(self, x: int, y: int) -> dict:
        """``{z: h_{x,y,z}}`` with ``c_x c_y = sum h_{x,y,z} c_z``."""
        key = (x, y)
        hit = self._products.get(key)
        if hit is not None:
            return hit
        ball = self.ball
        if ball.length[x] + ball.length[y] > ball.L:
            raise BallOverflow("l(x) + l(y) exceeds the ball radius")
        acc: dict = {}
        for u, pu in self.kl.p[x].items():
            for w, p in self._t_times_cy(u, y).items():
                slot = acc.setdefault(w, {})
                _padd(slot, _pmul(pu, p))
                if not slot:
                    del acc[w]
        out = self.to_kl(acc)
        for z, h in out.items():
            assert all(c > 0 for c in h.values()), "negative structure constant"
        self._products[key] = out
        return out

    def c_mul_words(self, x, y) -> dict:
        d = self.diagram
        xi = self.ball.lookup(d.parse_word(x))
        yi = self.ball.lookup(d.parse_word(y))
        return {self.ball.words[z]: LaurentPoly(h) for z, h in self.c_mul(xi, yi).items()}

    def _subregular_index(self, w) -> int:
        w = self.diagram.parse_word(w)
        if not is_subregular(w, self.diagram):
            raise NotSubregular(f"{self.diagram.format_word(w)} is not in C")
        return self.ball.lookup(w)

    def gamma(self, x, y, z) -> int:
        """Coefficient of ``v`` in ``h_{x,y,z}``: the coefficient of ``t_z`` in ``t_x t_y``."""
        xi, yi, zi = (self._subregular_index(w) for w in (x, y, z))
        return self.c_mul(xi, yi).get(zi, {}).get(1, 0)

    def gamma_row(self, x, y) -> dict:
        """All nonzero ``{z_word: gamma}`` for ``z`` in C, from one product."""
        xi, yi = self._subregular_index(x), self._subregular_index(y)
        out = {}
        for z, h in self.c_mul(xi, yi).items():
            c = h.get(1, 0)
            if c and is_subregular(self.ball.words[z], self.diagram):
                out[self.ball.words[z]] = c
        return out

    def max_degree_on_C(self, x, y) -> dict:
        """``{z_word: deg h_{x,y,z}}`` over all ``z`` in the product."""
        xi, yi = self._subregular_index(x), self._subregular_index(y)
        return {self.ball.words[z]: max(h) for z, h in self.c_mul(xi, yi).items()}

    def a_one_check(self, z, samples: Iterable | None = None) -> bool:
        """Whether the largest ``v``-degree of ``h_{x,y,z}`` over sampled pairs is 1.

        ``samples`` are ``(x, y)`` word pairs in C; by default every pair of
        subregular elements fitting in the ball is used.
        """
        d = self.diagram
        zw = d.parse_word(z)
        zi = self.ball.lookup(zw)
        if samples is None:
            cell = [w for w in self.ball.words if is_subregular(w, d)]
            samples = [(x, y) for x in cell for y in cell
                       if len(x) + len(y) <= self.ball.L]
        best = None
        for x, y in samples:
            xi = self.ball.lookup(d.parse_word(x))
            yi = self.ball.lookup(d.parse_word(y))
            h = self.c_mul(xi, yi).get(zi)
            if h:
                deg = max(h)
                best = deg if best is None else max(best, deg)
        return best == 1


def kl_basis(oracle: HeckeOracle, y) -> HeckeElement:
    """``c_y`` in T-coordinates."""
    return oracle.kl.element(oracle.ball.lookup(oracle.diagram.parse_word(y)))
