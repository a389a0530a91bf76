"""Verlinde algebras, free fusion rings and their word models inside J_0.

The two families of bijections here identify words over a fusion set with
elements of ``Gamma_0 cap Gamma_0^-1`` (words starting and ending in 0):

* ``encode_unitary`` / ``decode_unitary`` for the triangle with
  ``m(0,1) = m(0,2) = 3``, ``m(1,2) = inf`` and letters ``a, b``;
* ``encode_amalg`` / ``decode_amalg`` for the fan systems ``(W_n, S_n)``
  and the matrix-unit letters ``e_ij``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .coxeter import INF, CoxeterDiagram, Word, glued_product, is_subregular
from .errors import IndexOutOfRange, InvalidLetter, InvalidN, NotInBox
from .jring import JElement, mul
from .linear import Combination
from .systems import path, thmD_triangle, thmE

# ---------------------------------------------------------------------------
# Verlinde algebras


class VerlindeElement(Combination):
    """Combination of ``L_k``, ``1 <= k <= M - 1``; the context is ``M``."""

    __slots__ = ()

    @property
    def M(self):
        return self.context

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, VerlindeElement):
            self._check_context(other)
            out: dict = {}
            for k, a in self.items():
                for l, b in other.items():
                    for j, c in verlinde_mul(k, l, self.M).items():
                        out[j] = out.get(j, 0) + a * b * c
            return VerlindeElement(out, self.M)
        return NotImplemented

    def is_odd(self) -> bool:
        return all(k % 2 == 1 for k in self)

    def render(self, fmt=None, key=None) -> str:
        return super().render(fmt or (lambda k: f"L{k}"), key)

    def __repr__(self):
        return f"VerlindeElement(M={self.M}, {self.render()})"


def L(k: int, M) -> VerlindeElement:
    _check_index(k, M)
    return VerlindeElement({k: 1}, M)


def _check_index(k: int, M) -> None:
    if k < 1 or (M != INF and k > M - 1):
        raise IndexOutOfRange(f"L_{k} is not a basis element of Ver_{M}")


def verlinde_mul(k: int, l: int, M) -> VerlindeElement:
    """Truncated Clebsch-Gordan rule ``L_k L_l``."""
    _check_index(k, M)
    _check_index(l, M)
    lo = 0 if M == INF else max(k + l - M, 0)
    return VerlindeElement({k + l - 1 - 2 * j: 1 for j in range(lo, min(k, l))}, M)


# ---------------------------------------------------------------------------
# fusion sets and free fusion rings


@dataclass(frozen=True)
class FusionSet:
    """Letters with an involution ``bar`` and a partial fusion ``a o b``."""

    letters: tuple
    bar_map: tuple  # pairs (letter, bar(letter))
    fusion_map: tuple = ()  # triples (a, b, a o b); missing pairs fuse to nothing
    name: str = ""
    _bar: dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _fuse: dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        bar = dict(self.bar_map)
        if set(bar) != set(self.letters) or not set(bar.values()) <= set(self.letters):
            raise InvalidLetter("bar must be defined on every letter")
        if any(bar[bar[a]] != a for a in self.letters):
            raise InvalidLetter("bar is not an involution")
        self._bar.update(bar)
        for a, b, c in self.fusion_map:
            if a not in bar or b not in bar or c not in bar:
                raise InvalidLetter(f"fusion {a} o {b} = {c} uses unknown letters")
            self._fuse[(a, b)] = c

    def __hash__(self):
        return hash((self.letters, self.bar_map, self.fusion_map))

    def bar(self, letter):
        return self._bar[letter]

    def bar_word(self, w) -> tuple:
        return tuple(self._bar[a] for a in reversed(tuple(w)))

    def fuse(self, a, b):
        """``a o b`` or None when the fusion is empty."""
        return self._fuse.get((a, b))

    def parse(self, text) -> tuple:
        """Read a word: juxtaposed one-character letters or dot-separated."""
        if isinstance(text, (tuple, list)):
            word = tuple(text)
        else:
            text = str(text).strip()
            if text in ("", "1"):
                return ()
            single = all(len(a) == 1 for a in self.letters)
            word = tuple(text) if single and "." not in text else tuple(text.split("."))
        for a in word:
            if a not in self._bar:
                raise InvalidLetter(f"{a!r} is not a letter of {self.name or self.letters}")
        return word

    def format(self, w) -> str:
        if not w:
            return "1"
        single = all(len(a) == 1 for a in self.letters)
        return ("" if single else ".").join(w)


class FreeFusionElement(Combination):
    """Combination of words over a fusion set; the empty word is the unit."""

    __slots__ = ()

    @property
    def fusion_set(self) -> FusionSet:
        return self.context

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if isinstance(other, FreeFusionElement):
            self._check_context(other)
            out: dict = {}
            for v, a in self.items():
                for w, b in other.items():
                    for u, c in _ffr_basis(v, w, self.context).items():
                        out[u] = out.get(u, 0) + a * b * c
            return FreeFusionElement(out, self.context)
        return NotImplemented

    def render(self, fmt=None, key=None) -> str:
        fs = self.context
        return super().render(fmt or fs.format, key or (lambda w: (len(w), w)))

    def __repr__(self):
        return f"FreeFusionElement({self.render()})"


def fusion_word(text, fs: FusionSet) -> FreeFusionElement:
    return FreeFusionElement({fs.parse(text): 1}, fs)


def _ffr_basis(v: tuple, w: tuple, fs: FusionSet) -> dict:
    out: dict = {}
    for k in range(min(len(v), len(w)) + 1):
        x, y = v[:len(v) - k], v[len(v) - k:]
        if w[:k] != fs.bar_word(y):
            continue
        z = w[k:]
        out[x + z] = out.get(x + z, 0) + 1
        if x and z:
            f = fs.fuse(x[-1], z[0])
            if f is not None:
                u = x[:-1] + (f,) + z[1:]
                out[u] = out.get(u, 0) + 1
    return out


def ffr_mul(v, w, fs: FusionSet) -> FreeFusionElement:
    """``v . w = sum over v = xy, w = bar(y) z of  xz + x o z``."""
    return FreeFusionElement(_ffr_basis(fs.parse(v), fs.parse(w), fs), fs)


def ffr_anti_involution(a: FreeFusionElement) -> FreeFusionElement:
    return a.map_keys(a.context.bar_word)


def fusion_set_O() -> FusionSet:
    return FusionSet(("a",), (("a", "a"),), (), name="O_N+")


def fusion_set_S() -> FusionSet:
    """``{a}`` with ``a o a = a``; its ring is the odd part of ``Ver_inf``."""
    return FusionSet(("a",), (("a", "a"),), (("a", "a", "a"),), name="S_N+")


def fusion_set_U() -> FusionSet:
    return FusionSet(("a", "b"), (("a", "b"), ("b", "a")), (), name="U_N+")


def z_letter(i: int, j: int) -> str:
    return f"e{i}{j}"


@lru_cache(maxsize=None)
def fusion_set_Z(n: int) -> FusionSet:
    """Matrix units ``e_ij`` with ``bar(e_ij) = e_ji`` and ``e_ij o e_jl = e_il``."""
    if not isinstance(n, int) or n < 2 or n > 9:
        raise InvalidN(f"n must be an integer in 2..9, got {n!r}")
    idx = range(1, n + 1)
    letters = tuple(z_letter(i, j) for i in idx for j in idx)
    bar = tuple((z_letter(i, j), z_letter(j, i)) for i in idx for j in idx)
    fusion = tuple((z_letter(i, j), z_letter(j, l), z_letter(i, l))
                   for i in idx for j in idx for l in idx)
    return FusionSet(letters, bar, fusion, name=f"Z_N+(e,{n - 1})")


# ---------------------------------------------------------------------------
# U_N^+ : the triangle with an infinite bottom edge


def _unitary_labels(d: CoxeterDiagram) -> tuple[int, int, int]:
    return d.index("0"), d.index("1"), d.index("2")


def encode_unitary(x, d: CoxeterDiagram | None = None) -> tuple:
    """Word over ``{a, b}`` recording the crossings of the edge ``{1, 2}``."""
    d = d or thmD_triangle()
    zero, one, two = _unitary_labels(d)
    w = d.parse_word(x)
    if not is_subregular(w, d) or w[0] != zero or w[-1] != zero:
        raise NotInBox(f"{d.format_word(w)} does not start and end with 0 in C")
    out = []
    for p, q in zip(w, w[1:]):
        if (p, q) == (one, two):
            out.append("a")
        elif (p, q) == (two, one):
            out.append("b")
    return tuple(out)


def decode_unitary(word, d: CoxeterDiagram | None = None) -> Word:
    """Rebuild the walk from 0 to 0 whose ``{1, 2}`` crossings spell ``word``."""
    d = d or thmD_triangle()
    zero, one, two = _unitary_labels(d)
    letters = fusion_set_U().parse(word)
    if not letters:
        return (zero,)
    out = [zero] + ([one, two] if letters[0] == "a" else [two, one])
    for prev, cur in zip(letters, letters[1:]):
        if prev == "a":
            out += [zero, one, two] if cur == "a" else [one]
        else:
            out += [zero, two, one] if cur == "b" else [two]
    out.append(zero)
    return tuple(out)


# ---------------------------------------------------------------------------
# Z_N^+({e}, n-1) : the fan systems (W_n, S_n)


def _bottom_path(i: int, j: int) -> tuple:
    step = 1 if j >= i else -1
    return tuple(range(i, j + step, step))


@lru_cache(maxsize=4096)
def letter_image(n: int, i: int, j: int, d: CoxeterDiagram | None = None) -> Word:
    """Word of the walk ``0, i, ..., j, 0`` along the bottom path."""
    d = d or thmE(n)
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidLetter(f"e_{i}{j} is not a letter for n = {n}")
    return tuple(d.index(str(v)) for v in (0,) + _bottom_path(i, j) + (0,))


def _parse_z_letter(letter: str, n: int) -> tuple[int, int]:
    if len(letter) != 3 or letter[0] != "e" or not letter[1:].isdigit():
        raise InvalidLetter(f"{letter!r} is not a matrix unit")
    i, j = int(letter[1]), int(letter[2])
    if not (1 <= i <= n and 1 <= j <= n):
        raise InvalidLetter(f"{letter!r} is not a letter for n = {n}")
    return i, j


def decode_amalg(n: int, word, d: CoxeterDiagram | None = None) -> Word:
    """Glued product of the letter images; the empty word gives ``0``."""
    d = d or thmE(n)
    fs = fusion_set_Z(n)
    letters = fs.parse(word)
    if not letters:
        return (d.index("0"),)
    return glued_product(*(letter_image(n, *_parse_z_letter(a, n), d=d) for a in letters))


def encode_amalg(n: int, x, d: CoxeterDiagram | None = None) -> tuple:
    """Split at every 0 and read each ``0 i ... j 0`` piece as ``e_ij``."""
    d = d or thmE(n)
    w = d.parse_word(x)
    zero = d.index("0")
    if not is_subregular(w, d) or w[0] != zero or w[-1] != zero:
        raise NotInBox(f"{d.format_word(w)} does not start and end with 0 in C")
    cuts = [k for k, v in enumerate(w) if v == zero]
    out = []
    for a, b in zip(cuts, cuts[1:]):
        inner = tuple(int(d.generators[v]) for v in w[a + 1:b])
        if not inner or inner != _bottom_path(inner[0], inner[-1]):
            raise NotInBox(f"piece {d.format_word(w[a:b + 1])} is not a letter image")
        out.append(z_letter(inner[0], inner[-1]))
    return tuple(out)


def path_word(i: int, j: int, d: CoxeterDiagram) -> Word:
    return tuple(d.index(str(v)) for v in _bottom_path(i, j))


def path_mult_check(n: int, i: int, j: int, k: int) -> bool:
    """``t_{x_ij} t_{x_jk} == t_{x_ik}`` on the bottom path ``1 - ... - n``."""
    d = path(n)
    for v in (i, j, k):
        if not 1 <= v <= n:
            raise IndexOutOfRange(f"{v} is not in 1..{n}")
    lhs = mul(JElement({path_word(i, j, d): 1}, d), JElement({path_word(j, k, d): 1}, d))
    return lhs == JElement({path_word(i, k, d): 1}, d)


# ---------------------------------------------------------------------------
# transport of combinations


def unitary_to_j(a: FreeFusionElement, d: CoxeterDiagram | None = None) -> JElement:
    d = d or thmD_triangle()
    return JElement({decode_unitary(w, d): c for w, c in a.items()}, d)


def amalg_to_j(n: int, a: FreeFusionElement, d: CoxeterDiagram | None = None) -> JElement:
    d = d or thmE(n)
    return JElement({decode_amalg(n, w, d): c for w, c in a.items()}, d)


def orthogonal_to_j(a: FreeFusionElement, d: CoxeterDiagram) -> JElement:
    """``a^k -> t_{1_{2k+1}}`` in a dihedral system on ``{1, 2}``."""
    one, two = d.index("1"), d.index("2")
    return JElement({tuple(one if i % 2 == 0 else two for i in range(2 * len(w) + 1)): c
                     for w, c in a.items()}, d)


def verlinde_to_j(a: VerlindeElement, d: CoxeterDiagram) -> JElement:
    """``L_k -> t_{1_k}`` in a dihedral system on ``{1, 2}``."""
    one, two = d.index("1"), d.index("2")
    return JElement({tuple(one if i % 2 == 0 else two for i in range(k)): c
                     for k, c in a.items()}, d)
