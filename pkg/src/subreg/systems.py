"""Ready-made Coxeter systems, including every worked example of the theory.

The same systems ship as JSON files under ``subreg/data`` so the command line
tool can load them by name.
"""
from __future__ import annotations

import json
from importlib import resources

from .coxeter import INF, CoxeterDiagram, diagram_from_json, validate_diagram


def dihedral(M) -> CoxeterDiagram:
    """Rank-two system on ``{1, 2}`` with ``m(1, 2) = M`` (``M`` may be ``inf``)."""
    tag = "inf" if M in (INF, "inf") else str(M)
    return validate_diagram(["1", "2"], [["1", "2", M]], name=f"dihedral{tag}")


def triangle_334() -> CoxeterDiagram:
    """The oddly-connected triangle: ``m(1,2)=m(1,3)=3``, ``m(2,3)=4``."""
    return validate_diagram(["1", "2", "3"],
                            [["1", "2", 3], ["1", "3", 3], ["2", "3", 4]],
                            name="triangle_334")


def chain_44() -> CoxeterDiagram:
    """Path ``1 - 2 - 3`` with both edges of weight 4 (infinite ``J_1``)."""
    return validate_diagram(["1", "2", "3"], [["1", "2", 4], ["2", "3", 4]],
                            name="chain_44")


def triangle_456() -> CoxeterDiagram:
    return validate_diagram(["1", "2", "3"],
                            [["1", "2", 4], ["1", "3", 5], ["2", "3", 6]],
                            name="triangle_456")


def thmD_triangle() -> CoxeterDiagram:
    """``m(0,1)=m(0,2)=3`` and ``m(1,2)=inf``; its ``J_0`` is the U_N^+ ring."""
    return validate_diagram(["0", "1", "2"],
                            [["0", "1", 3], ["0", "2", 3], ["1", "2", "inf"]],
                            name="thmD_triangle")


def thmE(n: int) -> CoxeterDiagram:
    """The system ``(W_n, S_n)``: a fan of infinite edges from 0 over a path.

    ``m(0, i) = inf`` for ``1 <= i <= n``, ``m(i, i+1) = 3``, all else 2.
    """
    if n < 2:
        from .errors import InvalidN
        raise InvalidN(f"n must be at least 2, got {n}")
    labels = [str(i) for i in range(n + 1)]
    entries = [["0", str(i), "inf"] for i in range(1, n + 1)]
    entries += [[str(i), str(i + 1), 3] for i in range(1, n)]
    return validate_diagram(labels, entries, name=f"thmE_n{n}")


def path(k: int, weight=3) -> CoxeterDiagram:
    labels = [str(i) for i in range(1, k + 1)]
    return validate_diagram(labels, [[labels[i], labels[i + 1], weight]
                                     for i in range(k - 1)], name=f"path_{k}")


def cycle(k: int) -> CoxeterDiagram:
    labels = [str(i) for i in range(1, k + 1)]
    return validate_diagram(labels, [[labels[i], labels[(i + 1) % k], 3]
                                     for i in range(k)], name=f"cycle_{k}")


def star(k: int) -> CoxeterDiagram:
    """Star with centre 1 and ``k - 1`` leaves, all weights 3."""
    labels = [str(i) for i in range(1, k + 1)]
    return validate_diagram(labels, [["1", labels[i], 3] for i in range(1, k)],
                            name=f"star_{k}")


def builtin_diagrams() -> dict[str, CoxeterDiagram]:
    out = {}
    for M in range(3, 9):
        out[f"dihedral{M}"] = dihedral(M)
    out["dihedralinf"] = dihedral(INF)
    out["triangle_334"] = triangle_334()
    out["chain_44"] = chain_44()
    out["triangle_456"] = triangle_456()
    out["thmD_triangle"] = thmD_triangle()
    for n in (2, 3, 4):
        out[f"thmE_n{n}"] = thmE(n)
    out["path_3"] = path(3)
    out["path_4"] = path(4)
    out["cycle_3"] = cycle(3)
    out["cycle_4"] = cycle(4)
    out["star_4"] = star(4)
    return out


def bundled_names() -> list[str]:
    files = resources.files("subreg") / "data"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".json"))


def load_bundled(name: str) -> CoxeterDiagram:
    """Load one of the diagram files shipped in ``subreg/data``."""
    path = resources.files("subreg") / "data" / f"{name}.json"
    obj = json.loads(path.read_text(encoding="utf-8"))
    d = diagram_from_json(obj)
    object.__setattr__(d, "name", name)
    return d
