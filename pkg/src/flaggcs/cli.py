"""Command-line front end. Every subcommand prints one JSON document.

Exit status: 0 success, 1 a verdict came out false, 2 bad input.
"""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import jsonio
from .cells import cell_of_structure, enumerate_cells
from .errors import FlagGCSError
from .exact import parse_rational
from .integrability import build_from_theta, gcs_type, is_integrable
from .jsonio import InputError, q, root_json
from .kahler import (
    classify_pair_blocks,
    commute,
    is_almost_kahler,
    is_kahler_pair,
    kahler_global_check,
    kahler_moduli,
)
from .roots import RootSystem, WeylElement, root_system, simple_root, theta_closure, weyl_group
from .spinors import annihilator_check, annihilator_dimension, spinor_of
from .structures import InvariantGCS, is_gacs, normal_form, symplectic_representative
from .weyl_action import act, orbit

OK, FALSE, INPUT_ERROR = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError("arguments", message)


def _read(path: Optional[str]):
    if not path:
        raise InputError("--input", "this command needs --input")
    try:
        text = sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise InputError("--input", f"cannot read {path}: {exc.strerror}") from exc
    return jsonio.load_json(text, path)


def _algebra(args) -> RootSystem:
    if not args.algebra:
        raise InputError("--algebra", "this command needs --algebra")
    try:
        return root_system(args.algebra)
    except FlagGCSError as exc:
        raise InputError("--algebra", str(exc)) from exc


def _structure(args) -> InvariantGCS:
    j = jsonio.structure_from_json(_read(args.input))
    if args.algebra and root_system(args.algebra) != j.algebra:
        raise InputError("algebra", f"file describes {j.algebra.name} but --algebra is {args.algebra}")
    return j


def _list(text: Optional[str], flag: str) -> list[str]:
    if text is None or not text.strip():
        return []
    return [t.strip() for t in text.split(",")]


def _rationals(text: Optional[str], flag: str) -> list:
    out = []
    for i, t in enumerate(_list(text, flag)):
        try:
            out.append(parse_rational(t))
        except ValueError as exc:
            raise InputError(f"{flag}[{i}]", f"invalid rational {t!r}") from exc
    return out


def _simple(rs: RootSystem, name: str, flag: str):
    label = name.lower()
    label = label[1:] if label.startswith("a") else label
    try:
        return simple_root(rs, int(label))
    except (ValueError, FlagGCSError) as exc:
        raise InputError(flag, f"{name!r} is not a simple root of {rs.name}; use a1..a{rs.rank}") from exc


def _word(rs: RootSystem, text: Optional[str]) -> WeylElement:
    idx = []
    for i, t in enumerate(_list(text, "--word")):
        try:
            k = int(t)
        except ValueError as exc:
            raise InputError(f"--word[{i}]", f"not an integer: {t!r}") from exc
        if not 1 <= k <= rs.rank:
            raise InputError(f"--word[{i}]", f"reflection index {k} out of range 1..{rs.rank}")
        idx.append(k - 1)
    return WeylElement.from_word(rs, idx)


# -- subcommands --------------------------------------------------------------

def cmd_roots(args):
    rs = _algebra(args)
    out = {
        "algebra": rs.name,
        "rank": rs.rank,
        "cartan": [list(r) for r in rs.cartan],
        "d": rs.d,
        "positive_roots": [root_json(r) for r in rs.positive_roots],
        "triples": [[root_json(r) for r in t] for t in rs.triples],
    }
    if args.weyl:
        out["weyl_order"] = len(weyl_group(rs))
    return OK, out


def cmd_check(args):
    j = _structure(args)
    ok, failing = is_integrable(j)
    out = {"gacs": is_gacs(j), "integrable": ok, "type": gcs_type(j)}
    if failing:
        out["failing"] = [jsonio.verdict_json(v) for v in failing]
    return (OK if ok else FALSE), out


def cmd_normal_form(args):
    j = _structure(args)
    coords, witness = normal_form(j)
    return OK, {
        "algebra": j.algebra.name,
        "coordinates": [
            {"root": root_json(r), **jsonio.coordinate_json(c)} for r, c in zip(j.algebra.positive_roots, coords)
        ],
        "witness": [{"root": root_json(r), "b": q(b)} for r, b in zip(j.algebra.positive_roots, witness.coeffs)],
        "representative": jsonio.structure_json(symplectic_representative(j)),
    }


def cmd_build(args):
    rs = _algebra(args)
    names = _list(args.theta, "--theta")
    theta = [_simple(rs, n, f"--theta[{i}]") for i, n in enumerate(names)]
    if len(set(theta)) != len(theta):
        raise InputError("--theta", "simple roots repeat")
    xs = _rationals(args.x, "--x")
    bs = _rationals(args.b, "--b")
    if len(xs) != len(theta):
        raise InputError("--x", f"expected {len(theta)} values (one per theta root), got {len(xs)}")
    if bs and len(bs) != len(theta):
        raise InputError("--b", f"expected {len(theta)} values (one per theta root), got {len(bs)}")
    closure = set(theta_closure(rs, theta))
    complex_roots = [r for r in rs.positive_roots if r not in closure]
    signs = {}
    raw_signs = _list(args.signs, "--signs")
    if raw_signs:
        if len(raw_signs) != len(complex_roots):
            raise InputError("--signs", f"expected {len(complex_roots)} signs for roots "
                                        f"{[list(r) for r in complex_roots]}, got {len(raw_signs)}")
        for i, (r, s) in enumerate(zip(complex_roots, raw_signs)):
            if s not in ("1", "+1", "+", "-1", "-"):
                raise InputError(f"--signs[{i}]", f"sign must be +1 or -1, got {s!r}")
            signs[r] = -1 if s.startswith("-") else 1
    j = build_from_theta(rs, theta, dict(zip(theta, xs)), dict(zip(theta, bs)), signs)
    return OK, jsonio.structure_json(j)


def cmd_weyl_orbit(args):
    j = _structure(args)
    rs = j.algebra
    if args.word is not None:
        w = _word(rs, args.word)
        image = act(w, j)
        return OK, {
            "word": [i + 1 for i in w.word],
            "structure": jsonio.structure_json(image),
            "integrable": is_integrable(image)[0],
            "type": gcs_type(image),
        }
    images = orbit(j)
    base = (is_integrable(j)[0], gcs_type(j))
    preserved = all((is_integrable(i)[0], gcs_type(i)) == base for i in images)
    return OK, {
        "algebra": rs.name,
        "group_order": len(weyl_group(rs)),
        "orbit_size": len(images),
        "invariants_preserved": preserved,
        "orbit": [jsonio.structure_json(i) for i in images],
    }


def cmd_spinor(args):
    j = _structure(args)
    phi = spinor_of(j)
    out = {
        "algebra": j.algebra.name,
        "lowest_degree": phi.lowest_degree(),
        "terms": jsonio.spinor_json(phi, j.algebra),
    }
    status = OK
    if args.verify_annihilator:
        ok = annihilator_check(j, phi)
        dim = annihilator_dimension(phi, j.algebra.d)
        out["annihilator"] = {"annihilates_eigenspace": ok, "dimension": dim, "expected_dimension": 2 * j.algebra.d}
        if not ok or dim != 2 * j.algebra.d:
            status = FALSE
    return status, out


def cmd_kahler(args):
    p = jsonio.pair_from_json(_read(args.input))
    if args.algebra and root_system(args.algebra) != p.algebra:
        raise InputError("algebra", f"file describes {p.algebra.name} but --algebra is {args.algebra}")
    out = {
        "algebra": p.algebra.name,
        "mode": "almost" if args.almost else "strict",
        "commute": commute(p),
        "positive": is_almost_kahler(p),
    }
    if not args.almost:
        out["integrable"] = {"J": is_integrable(p.J)[0], "Jp": is_integrable(p.Jp)[0]}
    ok = is_kahler_pair(p, almost=args.almost)
    out["kahler"] = ok
    if out["positive"]:
        rows = classify_pair_blocks(p)
        out["rows"] = list(rows)
        out["same_side"] = kahler_global_check(p)
        out["moduli"] = [
            {
                "root": root_json(r),
                "ray": c.ray,
                "J": jsonio.coordinate_json(c.first),
                "Jp": jsonio.coordinate_json(c.second),
                "metric_x": q(c.x),
            }
            for r, c in zip(p.algebra.positive_roots, kahler_moduli(p))
        ]
    return (OK if ok else FALSE), out


def cmd_cells(args):
    rs = _algebra(args)
    dec = enumerate_cells(rs)
    out = {
        "algebra": rs.name,
        "raw_count": dec.raw_count,
        "count": dec.count,
        "weyl_classes": len(dec.weyl_classes),
        "symmetry_classes": len(dec.symmetry_classes),
        "shapes": [{"dim": d, "type": k, "cells": n} for (d, k), n in dec.shapes.items()],
        "cells": [jsonio.cell_json(c) for c in dec.cells],
    }
    if args.input:
        j = _structure(args)
        out["structure_cell"] = jsonio.cell_json(cell_of_structure(j))
    return OK, out


def cmd_oracle_check(args):
    from .oracle import numeric_integrability, realization_for, triple_residuals
    from .sampling import mixed_sample

    rs = _algebra(args) if args.algebra else None
    structures = []
    if args.input:
        j = _structure(args)
        rs = j.algebra
        structures.append(j)
    if rs is None:
        raise InputError("--algebra", "oracle-check needs --algebra or --input")
    if rs.family != "A":
        raise InputError("--algebra", f"the oracle only realizes type A, got {rs.name}")
    if args.samples is not None and args.samples < 0:
        raise InputError("--samples", "must be non-negative")
    samples = args.samples if args.samples is not None else (0 if args.input else 100)
    rng = random.Random(args.seed)
    structures += [mixed_sample(rs, rng) for _ in range(samples)]
    real = realization_for(rs)
    agreements = 0
    disagreements = []
    for j in structures:
        exact_ok, failing = is_integrable(j)
        numeric_ok = numeric_integrability(real, j, args.tol)
        if exact_ok == numeric_ok:
            agreements += 1
        else:
            disagreements.append({
                "structure": jsonio.structure_json(j),
                "exact": exact_ok,
                "numeric": numeric_ok,
                "triples": [
                    {"triple": [root_json(r) for r in t], "residual": float(f"{m:.3e}")}
                    for t, m in triple_residuals(real, j)
                ],
            })
    out = {
        "algebra": rs.name,
        "checked": len(structures),
        "tol": args.tol,
        "agreements": agreements,
        "disagreements": disagreements,
    }
    return (OK if not disagreements else FALSE), out


COMMANDS = {
    "roots": cmd_roots,
    "check": cmd_check,
    "normal-form": cmd_normal_form,
    "build": cmd_build,
    "weyl-orbit": cmd_weyl_orbit,
    "spinor": cmd_spinor,
    "kahler": cmd_kahler,
    "cells": cmd_cells,
    "oracle-check": cmd_oracle_check,
}


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="flaggcs", description="Invariant generalized complex structures on maximal flag manifolds.")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND", parser_class=_Parser)
    sub.required = True

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--algebra", help="simple type such as A2, B3, G2")
        p.add_argument("--input", help="JSON file ('-' for stdin)")
        p.add_argument("--output", help="write the JSON report here instead of stdout")
        return p

    p = add("roots", "print the root system")
    p.add_argument("--weyl", action="store_true", help="also enumerate the Weyl group and report its order")
    add("check", "gacs, integrability and type of a structure")
    add("normal-form", "moduli coordinates and B-transform witness")
    p = add("build", "integrable structure from theta data")
    p.add_argument("--theta", default="", help="simple roots, e.g. a1,a2")
    p.add_argument("--x", help="positive rationals, one per theta root")
    p.add_argument("--b", help="rationals, one per theta root (default 0)")
    p.add_argument("--signs", help="+1/-1 per complex root in root order (default all +1)")
    p = add("weyl-orbit", "orbit of a structure under the Weyl group")
    p.add_argument("--word", help="act by a single element given as 1-based reflection indices, e.g. 1,2")
    p = add("spinor", "pure spinor of a structure")
    p.add_argument("--verify-annihilator", action="store_true")
    p = add("kahler", "generalized Kähler checks for a pair {J, Jp}")
    p.add_argument("--almost", action="store_true", help="skip the integrability requirement")
    add("cells", "cell decomposition of the moduli space")
    p = add("oracle-check", "compare exact integrability with the numeric Nijenhuis oracle")
    p.add_argument("--samples", type=int, default=None, help="random structures to add (default 100 without --input)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--tol", type=float, default=1e-9)
    return parser


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        status, out = COMMANDS[args.command](args)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except FlagGCSError as exc:
        print(f"error: {exc}", file=stderr)
        return INPUT_ERROR
    text = jsonio.dumps(out)
    if args.output:
        try:
            Path(args.output).write_text(text)
        except OSError as exc:
            print(f"error: --output: cannot write {args.output}: {exc.strerror}", file=stderr)
            return INPUT_ERROR
    else:
        stdout.write(text)
    return status


def main() -> None:
    sys.exit(run())
