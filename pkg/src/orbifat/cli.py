"""Command-line front end.

Exit codes: 0 on success or a passing check, 1 on a failing certificate
or a boundary that does not cover the target, 2 on bad input.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .certificate import check_certificate
from .fatgraph import (
    Fatgraph,
    boundary,
    census,
    covers,
    format_fatgraph,
    parse_fatgraph,
    pinch,
    spine_dot,
    surface_summary,
)
from .realization import Realization, core_graph_dot, parse_orbifold
from .stability import (
    achievable_exponents,
    attach_A_modules,
    build_disk_surface,
    build_genus_surface,
    build_Yprime_genus,
    nt_bound,
    nt_witness,
)
from .words import classify, format_word, free_reduce, parse_word


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _orbifold(path: str) -> Realization:
    try:
        return parse_orbifold(_read(path))
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _fatgraph(path: str, r: Realization | None) -> Fatgraph:
    try:
        return parse_fatgraph(_read(path), r.alphabet if r else None)
    except ValueError as exc:
        raise InputError(f"{path}: {exc}") from None


def _realization_for(f: Fatgraph, r: Realization | None) -> Realization:
    if r is not None:
        return r
    if f.order is None:
        raise InputError("fatgraph has no 'order' line; pass --orbifold")
    return Realization(f.alphabet, f.order)


def _word(text: str, r: Realization):
    return free_reduce(parse_word(text, r.alphabet), r.alphabet)


def _emit(out, text: str, dest: str | None) -> None:
    if dest:
        Path(dest).write_text(text)
    else:
        out.write(text)


# ------------------------------------------------------------ subcommands


def cmd_derive_boundary(args, out) -> int:
    r = _orbifold(args.orbifold_file)
    out.write(f"b = {format_word(r.boundary.letters)}\n")
    return 0


def cmd_classify(args, out) -> int:
    r = _orbifold(args.orbifold_file)
    w = _word(args.word, r)
    out.write(f"{classify(w, r).value}\n")
    return 0


def cmd_check(args, out) -> int:
    r = _orbifold(args.orbifold) if args.orbifold else None
    code = 0
    for path in args.files:
        f = _fatgraph(path, r)
        rep = check_certificate(f, _realization_for(f, r))
        if len(args.files) > 1:
            out.write(f"# {path}\n")
        out.write(rep.format())
        if not rep.passed:
            code = 1
    return code


def cmd_boundary(args, out) -> int:
    r = _orbifold(args.orbifold) if args.orbifold else None
    f = _fatgraph(args.fatgraph_file, r)
    rep = boundary(f)
    for line in rep.format():
        out.write(line + "\n")
    if args.target is None:
        return 0
    rr = _realization_for(f, r)
    deg = covers(rep, _word(args.target, rr))
    out.write("degree NotACover\n" if deg is None else f"degree {deg}\n")
    return 1 if deg is None else 0


def cmd_census(args, out) -> int:
    r = _orbifold(args.orbifold) if args.orbifold else None
    f = _fatgraph(args.fatgraph_file, r)
    for line in census(f).format():
        out.write(line + "\n")
    if f.is_complete():
        s = surface_summary(f)
        out.write(f"surface components={s.components} boundary={s.boundary_components} "
                  f"chi={s.euler_characteristic} genus={s.genus}\n")
    return 0


def cmd_pinch(args, out) -> int:
    r = _orbifold(args.orbifold_file)
    words = [_word(t, r) for t in args.word]
    f = pinch(words, r.alphabet, seed=args.seed)
    f = Fatgraph(f.alphabet, f.pieces, f.gluing, r.order)
    _emit(out, format_fatgraph(f), args.out)
    return 0


def _report_build(res, r, w, args, out) -> int:
    out.write(f"word {format_word(w)}\nb {format_word(r.boundary.letters)}\n")
    out.write(f"exponent {res.exponent}\nN {res.N}\ndegree {res.degree}\n")
    out.write(f"pieces {len(res.fatgraph.pieces)}\n")
    if args.out:
        Path(args.out).write_text(format_fatgraph(res.fatgraph))
    return 0


def cmd_build_disk(args, out) -> int:
    r = _orbifold(args.orbifold_file)
    w = _word(args.word, r)
    return _report_build(build_disk_surface(r, w, args.n), r, w, args, out)


def cmd_build_genus(args, out) -> int:
    r = _orbifold(args.orbifold_file)
    w = _word(args.word, r)
    if args.reproduce_fig:
        y = attach_A_modules(build_Yprime_genus(r, w, pad_b2=False), r)
        out.write(f"Y'' reads w b^{y.exponent}\n")
    res = build_genus_surface(r, w, args.n, pad_b2=not args.reproduce_fig)
    return _report_build(res, r, w, args, out)


def cmd_nt_witness(args, out) -> int:
    inst = nt_bound(args.xs)
    target = args.target if args.target is not None else inst.N + args.n * inst.g
    seq = nt_witness(inst, target)
    out.write(f"g {inst.g}\ns {inst.s}\ncoeffs {' '.join(map(str, inst.coeffs))}\nN {inst.N}\n")
    out.write(f"target {target}\nwitness {' '.join(map(str, seq))}\n")
    return 0


def cmd_achievable(args, out) -> int:
    r = _orbifold(args.orbifold_file)
    got = sorted(achievable_exponents(r, _word(args.word, r), args.up_to))
    out.write(" ".join(map(str, got)) + "\n")
    return 0


def cmd_export_dot(args, out) -> int:
    text = _read(args.file)
    first = next((ln.split("#", 1)[0].strip() for ln in text.splitlines()
                  if ln.split("#", 1)[0].strip()), "")
    if first == "orbifold":
        dot = core_graph_dot(_orbifold(args.file))
    else:
        r = _orbifold(args.orbifold) if args.orbifold else None
        dot = spine_dot(_fatgraph(args.file, r))
    _emit(out, dot, args.out)
    return 0


# ---------------------------------------------------------------- parser


def make_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="orbifat", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def orb(p):
        p.add_argument("orbifold_file")

    def word(p, required=True):
        p.add_argument("--word", required=required, help='e.g. "c0 c1^2 c2 c1"')

    def opt_orb(p):
        p.add_argument("--orbifold", help="orbifold file (needed if the fatgraph has no order line)")

    p = sub.add_parser("derive-boundary", help="print the boundary word b")
    orb(p)
    p.set_defaults(func=cmd_derive_boundary)

    p = sub.add_parser("classify", help="identity, elliptic, parabolic or hyperbolic")
    orb(p), word(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check", help="run the immersion certificate")
    p.add_argument("files", nargs="+")
    opt_orb(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("boundary", help="list boundary components")
    p.add_argument("fatgraph_file")
    opt_orb(p)
    p.add_argument("--target", help="report the covering degree over this word")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("census", help="count pieces and polygons")
    p.add_argument("fatgraph_file")
    opt_orb(p)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("pinch", help="fatgraph with the given boundary loops")
    orb(p)
    p.add_argument("--word", action="append", required=True)
    p.add_argument("--seed", type=int)
    p.add_argument("--out")
    p.set_defaults(func=cmd_pinch)

    for name, func, what in [("build-disk", cmd_build_disk, "disk"),
                             ("build-genus", cmd_build_genus, "genus")]:
        p = sub.add_parser(name, help=f"certified surface over a {what} orbifold")
        orb(p), word(p)
        p.add_argument("--n", type=int, default=0)
        p.add_argument("--out")
        if what == "genus":
            p.add_argument("--reproduce-fig", action="store_true",
                           help="skip the b^2 padding so the intermediate exponent matches the figure")
        p.set_defaults(func=func)

    p = sub.add_parser("nt-witness", help="index sequence with distinct neighbours")
    p.add_argument("--xs", type=int, nargs="+", required=True)
    g = p.add_mutually_exclusive_group()
    g.add_argument("--target", type=int)
    g.add_argument("--n", type=int, default=0, help="target N + n*g")
    p.set_defaults(func=cmd_nt_witness)

    p = sub.add_parser("achievable", help="exponents of b the builders reach")
    orb(p), word(p)
    p.add_argument("--up-to", type=int, required=True)
    p.set_defaults(func=cmd_achievable)

    p = sub.add_parser("export-dot", help="core graph of an orbifold or spine of a fatgraph")
    p.add_argument("file")
    opt_orb(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_export_dot)
    return ap


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = make_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        return args.func(args, out)
    except (InputError, ValueError) as exc:
        err.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(run())
