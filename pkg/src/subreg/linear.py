"""Finitely supported integer combinations over hashable basis keys."""
from __future__ import annotations

from typing import Callable, Iterable


class Combination:
    """An immutable ``key -> int`` map with no zero coefficients.

    Subclasses fix the meaning of the keys and usually add a product.  The
    ``context`` (a diagram, graph or fusion set) travels with the value and
    must agree for two combinations to be added.
    """

    __slots__ = ("_terms", "context")

    def __init__(self, terms=None, context=None):
        clean = {}
        if terms:
            items = terms.items() if hasattr(terms, "items") else terms
            for k, c in items:
                if c:
                    clean[k] = clean.get(k, 0) + c
            clean = {k: c for k, c in clean.items() if c}
        self._terms = clean
        self.context = context

    def _new(self, terms):
        return type(self)(terms, self.context)

    def _check_context(self, other):
        if self.context != other.context:
            raise ValueError("combinations live over different contexts")

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def keys(self):
        return self._terms.keys()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __getitem__(self, key) -> int:
        return self._terms.get(key, 0)

    def __contains__(self, key):
        return key in self._terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    __hash__ = None

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if type(other) is not type(self):
            return NotImplemented
        self._check_context(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return self._new(out)

    __radd__ = __add__

    def __neg__(self):
        return self._new({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        return self._new({k: c * v for k, v in self._terms.items()})

    def map_keys(self, fn: Callable):
        out = {}
        for k, c in self._terms.items():
            nk = fn(k)
            out[nk] = out.get(nk, 0) + c
        return self._new(out)

    def sorted_items(self, key=None):
        return sorted(self._terms.items(), key=(lambda kv: key(kv[0])) if key else None)

    def render(self, fmt: Callable = str, key=None) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"{c}*{fmt(k)}" for k, c in self.sorted_items(key))

    def is_nonnegative(self) -> bool:
        return all(c > 0 for c in self._terms.values())


def total(items: Iterable, zero):
    out = zero
    for x in items:
        out = out + x
    return out
