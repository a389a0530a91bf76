"""Coxeter diagrams and the word combinatorics of the subregular cell.

Words are tuples of generator indices ``0..n-1``; generator labels are only
used when parsing or printing.  An infinite weight is stored as ``math.inf``
so the comparison ``k < m(s, t)`` needs no special case.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence

from .errors import (
    AsymmetricWeights,
    BoundaryMismatch,
    ConsecutiveLetter,
    DiagonalNotOne,
    DiagramParseError,
    DuplicateLabel,
    WeightBelowTwo,
)

INF = math.inf

Word = tuple  # tuple[int, ...]


def _coerce_weight(raw) -> int | float:
    if isinstance(raw, str):
        if raw.strip().lower() in ("inf", "infinity", "oo", "∞"):
            return INF
        try:
            raw = int(raw)
        except ValueError:
            raise DiagramParseError(f"cannot read weight {raw!r}") from None
    if isinstance(raw, float):
        if math.isinf(raw) and raw > 0:
            return INF
        if not raw.is_integer():
            raise DiagramParseError(f"weight {raw!r} is not an integer")
        raw = int(raw)
    if isinstance(raw, bool) or not isinstance(raw, int):
        raise DiagramParseError(f"cannot read weight {raw!r}")
    return raw


@dataclass(frozen=True)
class CoxeterDiagram:
    """Generator labels plus the symmetric Coxeter matrix ``m(s, t)``.

    Construct through :func:`validate_diagram` or the helpers in
    :mod:`subreg.systems`; the constructor itself re-checks the invariants.
    """

    generators: tuple[str, ...]
    weights: tuple[tuple[int | float, ...], ...]
    name: str = field(default="", compare=False)
    _cache: dict = field(default_factory=dict, init=False, repr=False,
                         compare=False, hash=False)

    def __post_init__(self):
        labels = tuple(str(g) for g in self.generators)
        object.__setattr__(self, "generators", labels)
        if len(set(labels)) != len(labels):
            raise DuplicateLabel(f"duplicate generator labels in {labels}")
        n = len(labels)
        if n < 1:
            raise DiagramParseError("a diagram needs at least one generator")
        rows = tuple(tuple(_coerce_weight(x) for x in row) for row in self.weights)
        if len(rows) != n or any(len(r) != n for r in rows):
            raise DiagramParseError("weight matrix must be n x n")
        for i in range(n):
            if rows[i][i] != 1:
                raise DiagonalNotOne(f"m({labels[i]},{labels[i]}) = {rows[i][i]}")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise AsymmetricWeights(
                        f"m({labels[i]},{labels[j]}) != m({labels[j]},{labels[i]})")
                if rows[i][j] < 2:
                    raise WeightBelowTwo(
                        f"m({labels[i]},{labels[j]}) = {rows[i][j]} < 2")
        object.__setattr__(self, "weights", rows)

    def __hash__(self):
        return hash((self.generators, self.weights))

    @property
    def n(self) -> int:
        return len(self.generators)

    def m(self, s: int, t: int) -> int | float:
        return self.weights[s][t]

    def index(self, label) -> int:
        label = str(label)
        try:
            return self.generators.index(label)
        except ValueError:
            raise DiagramParseError(f"unknown generator {label!r}") from None

    def edges(self) -> list[tuple[int, int, int | float]]:
        """Edges of the Coxeter graph: pairs with ``m >= 3``."""
        return [(i, j, self.weights[i][j])
                for i in range(self.n) for j in range(i + 1, self.n)
                if self.weights[i][j] >= 3]

    def neighbours(self, s: int) -> list[int]:
        return [t for t in range(self.n) if t != s and self.weights[s][t] >= 3]

    def is_simply_laced(self) -> bool:
        return all(m == 3 for _, _, m in self.edges())

    # -- surface syntax -------------------------------------------------

    @property
    def single_char_labels(self) -> bool:
        return all(len(g) == 1 for g in self.generators)

    def parse_word(self, text) -> Word:
        """Read a word written with generator labels.

        Single-character labels are juxtaposed (``"1213"``); otherwise the
        letters are dot separated (``"0.10.2"``).  Tuples of indices pass
        through after a range check.
        """
        if isinstance(text, (tuple, list)):
            word = tuple(int(i) for i in text)
            for i in word:
                if not 0 <= i < self.n:
                    raise DiagramParseError(f"index {i} out of range")
            return word
        text = str(text).strip()
        if text in ("", "e", "()"):
            return ()
        if "." in text or not self.single_char_labels:
            parts = text.split(".")
        else:
            parts = list(text)
        return tuple(self.index(p) for p in parts)

    def format_word(self, word: Sequence[int]) -> str:
        if not word:
            return "e"
        sep = "" if self.single_char_labels else "."
        return sep.join(self.generators[i] for i in word)

    # -- serialisation --------------------------------------------------

    def to_json(self) -> dict:
        entries = []
        for i, j, m in [(i, j, self.weights[i][j]) for i in range(self.n)
                        for j in range(i + 1, self.n)]:
            if m != 2:
                entries.append([self.generators[i], self.generators[j],
                                "inf" if m == INF else m])
        return {"generators": list(self.generators), "m": entries}


def validate_diagram(generators: Iterable, m=(), *, matrix=None,
                     name: str = "") -> CoxeterDiagram:
    """Build a :class:`CoxeterDiagram` from labels and weight data.

    ``m`` is a list of ``[a, b, weight]`` triples naming generators by label;
    unlisted pairs default to 2.  Alternatively pass a full ``n x n``
    ``matrix``.
    """
    labels = [str(g) for g in generators]
    if len(set(labels)) != len(labels):
        raise DuplicateLabel(f"duplicate generator labels in {labels}")
    n = len(labels)
    if matrix is not None:
        return CoxeterDiagram(tuple(labels), tuple(tuple(r) for r in matrix), name=name)
    matrix = [[1 if i == j else 2 for j in range(n)] for i in range(n)]
    seen: dict[tuple[int, int], int | float] = {}
    for entry in m:
        if not isinstance(entry, (list, tuple)) or len(entry) != 3:
            raise DiagramParseError(f"bad weight entry {entry!r}")
        a, b, w = entry
        if str(a) not in labels or str(b) not in labels:
            raise DiagramParseError(f"unknown generator in {entry!r}")
        i, j = labels.index(str(a)), labels.index(str(b))
        w = _coerce_weight(w)
        if i == j:
            if w != 1:
                raise DiagonalNotOne(f"m({a},{a}) = {w}")
            continue
        key = (min(i, j), max(i, j))
        if key in seen and seen[key] != w:
            raise AsymmetricWeights(f"conflicting weights for {{{a},{b}}}")
        seen[key] = w
        matrix[i][j] = w
        matrix[j][i] = w
    return CoxeterDiagram(tuple(labels), tuple(tuple(r) for r in matrix), name=name)


def diagram_from_json(obj) -> CoxeterDiagram:
    if not isinstance(obj, dict) or "generators" not in obj:
        raise DiagramParseError("diagram JSON needs a 'generators' list")
    gens = obj["generators"]
    if not isinstance(gens, list):
        raise DiagramParseError("'generators' must be a list")
    return validate_diagram(gens, obj.get("m", []), name=str(obj.get("name", "")))


def load_diagram(path) -> CoxeterDiagram:
    """Read a diagram file (UTF-8 JSON, see README for the format)."""
    path = Path(path)
    try:
        obj = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise DiagramParseError(f"cannot read {path}: {exc}") from exc
    d = diagram_from_json(obj)
    if not d.name:
        object.__setattr__(d, "name", path.stem)
    return d


# ---------------------------------------------------------------------------
# word combinatorics


def alternating(s: int, t: int, k: int) -> Word:
    """The alternating word ``sts...`` of length ``k``."""
    return tuple(s if i % 2 == 0 else t for i in range(k))


def support(word: Sequence[int]) -> frozenset:
    return frozenset(word)


def _check_no_repeats(w: Sequence[int]) -> None:
    for a, b in zip(w, w[1:]):
        if a == b:
            raise ConsecutiveLetter(f"letter {a} repeated in {tuple(w)}")


def dihedral_segments(w: Sequence[int]) -> list[Word]:
    """Maximal contiguous subwords of ``w`` involving two letters.

    Adjacent segments overlap in exactly one letter, so gluing them back
    together recovers ``w``.
    """
    w = tuple(w)
    _check_no_repeats(w)
    if len(w) <= 1:
        return [w] if w else []
    segments = []
    start = 0
    for i in range(2, len(w)):
        if w[i] != w[i - 2]:
            segments.append(w[start:i])
            start = i - 1
    segments.append(w[start:])
    return segments


def glued_product(*words: Sequence[int]) -> Word:
    """Concatenate words sharing boundary letters, dropping one copy each time.

    The empty word acts as a neutral element.
    """
    out: Word = ()
    for w in words:
        w = tuple(w)
        if not w:
            continue
        if not out:
            out = w
            continue
        if out[-1] != w[0]:
            raise BoundaryMismatch(f"{out} ends with {out[-1]}, {w} starts with {w[0]}")
        out = out + w[1:]
    return out


def is_subregular(w: Sequence[int], d: CoxeterDiagram) -> bool:
    """True iff ``w`` is the (unique) reduced word of an element of C."""
    w = tuple(w)
    if not w:
        return False
    if any(not 0 <= i < d.n for i in w):
        return False
    if any(a == b for a, b in zip(w, w[1:])):
        return False
    for seg in dihedral_segments(w):
        if len(seg) >= 2 and len(seg) >= d.m(seg[0], seg[1]):
            return False
    return True


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(tuple(w)))
