"""``subreg`` command line.

    subreg enumerate DIAGRAM --max-len L [--box S T]
    subreg mul DIAGRAM X Y
    subreg verify DIAGRAM SUITE [--max-len L] [--max-sum L] [--samples N] [--seed K] [--base S]
    subreg fusion-classify DIAGRAM [--base S]
    subreg iso-matrix DIAGRAM X [--base S]

DIAGRAM is a JSON file or the name of a bundled diagram.  Exit codes:
0 success, 1 verification failure, 2 parse error, 3 bad flags,
4 domain error, 5 suite does not apply to the diagram.
"""
from __future__ import annotations

import argparse
import os
import sys

from .automaton import enumerate_box, enumerate_cell
from .coxeter import CoxeterDiagram, load_diagram
from .errors import DiagramError, InvalidLetter, SubregError, SuiteMismatch
from .jring import mul, t
from .structure import PsiMap, classify_fusion, verlinde_identification
from .systems import bundled_names, load_bundled
from .verify import SUITES, tap_report

EXIT_OK, EXIT_FAIL, EXIT_PARSE, EXIT_FLAGS, EXIT_DOMAIN, EXIT_SUITE = range(6)

ALIASES = {"counterexample": "chain_44", "odd_example": "triangle_334"}


class _FlagError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _FlagError(message)


def _nonnegative(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"{value} is negative")
    return value


def load(spec: str) -> CoxeterDiagram:
    """A diagram file path, or a bundled name such as ``triangle_456``."""
    name = ALIASES.get(spec, spec)
    if not os.path.exists(spec) and name in bundled_names():
        return load_bundled(name)
    return load_diagram(spec)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="subreg", description="Compute in the subregular J-ring J_C.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    e = sub.add_parser("enumerate", help="list the elements of C (or of one box)")
    e.add_argument("diagram")
    e.add_argument("--max-len", type=_nonnegative, required=True)
    e.add_argument("--box", nargs=2, metavar=("S", "T"))

    m = sub.add_parser("mul", help="multiply two basis elements")
    m.add_argument("diagram")
    m.add_argument("x")
    m.add_argument("y")

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("diagram")
    v.add_argument("suite", choices=sorted(SUITES))
    v.add_argument("--max-len", type=_nonnegative)
    v.add_argument("--max-sum", type=_nonnegative)
    v.add_argument("--samples", type=_nonnegative)
    v.add_argument("--seed", type=int)
    v.add_argument("--base")

    f = sub.add_parser("fusion-classify", help="identify J_s with an odd Verlinde algebra")
    f.add_argument("diagram")
    f.add_argument("--base")

    i = sub.add_parser("iso-matrix", help="print the matrix Psi(t_x)")
    i.add_argument("diagram")
    i.add_argument("x")
    i.add_argument("--base")
    return p


def _base(d: CoxeterDiagram, label) -> int:
    return 0 if label is None else d.index(label)


def cmd_enumerate(args, out) -> int:
    d = load(args.diagram)
    if args.box:
        a, b = (d.index(s) for s in args.box)
        words = enumerate_box(d, a, b, args.max_len)
    else:
        words = enumerate_cell(d, args.max_len)
    for w in words:
        print(d.format_word(w), file=out)
    return EXIT_OK


def cmd_mul(args, out) -> int:
    d = load(args.diagram)
    print(mul(t(args.x, d), t(args.y, d)).render(), file=out)
    return EXIT_OK


_SUITE_FLAGS = {
    "assoc": ("max_len", "samples", "seed"),
    "basedring": ("max_len", "samples", "seed"),
    "thmA": ("max_len",),
    "thmB": ("max_len", "base"),
    "thmC": ("base",),
    "thmD": ("max_sum", "max_len"),
    "thmE": ("max_len",),
    "hecke": ("max_sum",),
}


def cmd_verify(args, out) -> int:
    d = load(args.diagram)
    allowed = _SUITE_FLAGS[args.suite]
    kwargs = {}
    for flag in ("max_len", "max_sum", "samples", "seed", "base"):
        value = getattr(args, flag)
        if value is None:
            continue
        if flag not in allowed:
            raise _FlagError(f"--{flag.replace('_', '-')} does not apply to {args.suite}")
        kwargs[flag] = _base(d, value) if flag == "base" else value
    cases = SUITES[args.suite](d, **kwargs)
    for line in tap_report(cases):
        print(line, file=out)
    return EXIT_OK if all(c.passed for c in cases) else EXIT_FAIL


def cmd_fusion_classify(args, out) -> int:
    d = load(args.diagram)
    s = _base(d, args.base)
    M = classify_fusion(d, s)
    if M is None:
        print("none", file=out)
        return EXIT_OK
    print(f"M={M}", file=out)
    ident = verlinde_identification(d, s)
    for x, k in sorted(ident.items(), key=lambda kv: kv[1]):
        print(f"{d.format_word(x)} -> L{k}", file=out)
    return EXIT_OK


def cmd_iso_matrix(args, out) -> int:
    d = load(args.diagram)
    psi = PsiMap(d, _base(d, args.base))
    m = psi(t(args.x, d))
    for (a, b), f in sorted(m.entries.items()):
        print(f"E[{d.generators[a]},{d.generators[b]}] {f.render()}", file=out)
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "mul": cmd_mul,
    "verify": cmd_verify,
    "fusion-classify": cmd_fusion_classify,
    "iso-matrix": cmd_iso_matrix,
}


def main(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return COMMANDS[args.command](args, out)
    except _FlagError as exc:
        print(f"subreg: {exc}", file=err)
        return EXIT_FLAGS
    except SuiteMismatch as exc:
        print(f"subreg: {exc}", file=err)
        return EXIT_SUITE
    except (DiagramError, InvalidLetter) as exc:
        print(f"subreg: {exc}", file=err)
        return EXIT_PARSE
    except SubregError as exc:
        print(f"subreg: {type(exc).__name__}: {exc}", file=err)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
