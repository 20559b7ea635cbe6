"""JSON encoding and validated decoding of structures, pairs, spinors and reports.

Rationals are always ``"p/q"`` strings and roots are integer arrays.
Decoding errors carry a JSON path such as ``blocks[1].x``.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import FlagGCSError
from .exact import ComplexRational, format_rational, parse_rational
from .integrability import TripleVerdict
from .roots import RootSystem, root_system
from .spinors import Spinor, generator_id, parse_generator_id
from .structures import Complex, InvariantGCS, NonComplex, SignedZero, Symplectic


class InputError(FlagGCSError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}" if path else message)
        self.path = path


def load_json(text: str, source: str = "input") -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(source, f"malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def dumps(obj: Any) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def q(value: Fraction) -> str:
    return format_rational(value)


def root_json(root) -> list:
    return [int(c) for c in root]


# -- decoding ---------------------------------------------------------------

def _rational(obj: Any, path: str) -> Fraction:
    try:
        return parse_rational(obj)
    except ValueError as exc:
        raise InputError(path, f"invalid rational {obj!r}; use an integer or a 'p/q' string") from exc


def _root(obj: Any, rs: RootSystem, path: str) -> tuple:
    if not isinstance(obj, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in obj):
        raise InputError(path, "root must be an array of integers")
    root = tuple(obj)
    if len(root) != rs.rank:
        raise InputError(path, f"root {obj} has length {len(root)}, {rs.name} has rank {rs.rank}")
    if root not in rs.positive_index:
        raise InputError(path, f"{obj} is not a positive root of {rs.name}")
    return root


def _require(obj: dict, key: str, path: str) -> Any:
    if key not in obj:
        raise InputError(path, f"missing key {key!r}")
    return obj[key]


def algebra_from(obj: Any, path: str = "") -> RootSystem:
    if not isinstance(obj, dict):
        raise InputError(path or "$", "expected a JSON object")
    name = _require(obj, "algebra", path or "$")
    if not isinstance(name, str):
        raise InputError(f"{path}.algebra" if path else "algebra", "algebra must be a string such as 'A2'")
    try:
        return root_system(name)
    except FlagGCSError as exc:
        raise InputError(f"{path}.algebra" if path else "algebra", str(exc)) from exc


def block_from_json(obj: Any, path: str):
    if not isinstance(obj, dict):
        raise InputError(path, "block must be an object")
    kind = _require(obj, "kind", path)
    if kind == "complex":
        sign = _require(obj, "sign", path)
        if sign not in (1, -1) or isinstance(sign, bool):
            raise InputError(f"{path}.sign", f"sign must be 1 or -1, got {sign!r}")
        return Complex(sign)
    if kind == "noncomplex":
        a = _rational(_require(obj, "a", path), f"{path}.a")
        x = _rational(_require(obj, "x", path), f"{path}.x")
        if x == 0:
            raise InputError(f"{path}.x", "x must be nonzero")
        if "y" in obj:
            y = _rational(obj["y"], f"{path}.y")
            if y != (a * a + 1) / x:
                raise InputError(f"{path}.y", "y must equal (a^2 + 1)/x")
        return NonComplex(a, x)
    raise InputError(f"{path}.kind", f"kind must be 'complex' or 'noncomplex', got {kind!r}")


def structure_from_json(obj: Any, path: str = "") -> InvariantGCS:
    rs = algebra_from(obj, path)
    bpath = f"{path}.blocks" if path else "blocks"
    blocks = _require(obj, "blocks", path or "$")
    if not isinstance(blocks, list):
        raise InputError(bpath, "blocks must be an array")
    found: dict = {}
    for i, item in enumerate(blocks):
        ipath = f"{bpath}[{i}]"
        if not isinstance(item, dict):
            raise InputError(ipath, "block must be an object")
        root = _root(_require(item, "root", ipath), rs, f"{ipath}.root")
        if root in found:
            raise InputError(f"{ipath}.root", f"root {list(root)} appears more than once")
        found[root] = block_from_json(item, ipath)
    missing = [list(r) for r in rs.positive_roots if r not in found]
    if missing:
        raise InputError(bpath, f"no block for positive roots {missing}")
    return InvariantGCS.from_mapping(rs, found)


def pair_from_json(obj: Any):
    from .kahler import KahlerPair

    if not isinstance(obj, dict):
        raise InputError("$", "expected an object with keys 'J' and 'Jp'")
    j = structure_from_json(_require(obj, "J", "$"), "J")
    jp = structure_from_json(_require(obj, "Jp", "$"), "Jp")
    if j.algebra != jp.algebra:
        raise InputError("Jp.algebra", f"pair members must share an algebra ({j.algebra.name} vs {jp.algebra.name})")
    return KahlerPair(j, jp)


def spinor_from_json(obj: Any, rs: RootSystem) -> Spinor:
    if not isinstance(obj, list):
        raise InputError("$", "spinor must be an array of terms")
    terms: dict = {}
    for i, t in enumerate(obj):
        path = f"[{i}]"
        if not isinstance(t, dict):
            raise InputError(path, "term must be an object")
        gens = _require(t, "generators", path)
        coeff = _require(t, "coeff", path)
        try:
            ids = [parse_generator_id(rs, g) for g in gens]
        except (ValueError, TypeError, AttributeError) as exc:
            raise InputError(f"{path}.generators", str(exc)) from exc
        if len(set(ids)) != len(ids):
            continue  # repeated generator: the term vanishes
        order = sorted(range(len(ids)), key=lambda k: ids[k])
        inversions = sum(1 for a in range(len(ids)) for b in range(a + 1, len(ids)) if ids[a] > ids[b])
        if not isinstance(coeff, dict):
            raise InputError(f"{path}.coeff", "coeff must be an object with 're' and 'im'")
        c = ComplexRational(
            _rational(coeff.get("re", 0), f"{path}.coeff.re"), _rational(coeff.get("im", 0), f"{path}.coeff.im")
        )
        mono = tuple(ids[k] for k in order)
        c = -c if inversions % 2 else c
        terms[mono] = terms.get(mono, ComplexRational()) + c
    return Spinor.from_dict(terms)


# -- encoding ---------------------------------------------------------------

def block_json(root, b) -> dict:
    if isinstance(b, Complex):
        return {"root": root_json(root), "kind": "complex", "sign": b.sign}
    return {"root": root_json(root), "kind": "noncomplex", "a": q(b.a), "x": q(b.x), "y": q(b.y)}


def structure_json(j: InvariantGCS) -> dict:
    return {"algebra": j.algebra.name, "blocks": [block_json(r, b) for r, b in j.items()]}


def pair_json(p) -> dict:
    return {"J": structure_json(p.J), "Jp": structure_json(p.Jp)}


def verdict_json(v: TripleVerdict) -> dict:
    out = {"triple": [root_json(r) for r in v.triple], "ok": v.ok, "reason": v.reason}
    if v.row is not None:
        out["row"] = v.row
    if v.failed_equations:
        out["failed"] = list(v.failed_equations)
    return out


def complex_json(c: ComplexRational) -> dict:
    return {"re": q(c.re), "im": q(c.im)}


def spinor_json(phi: Spinor, rs: RootSystem) -> list:
    return [
        {"generators": [generator_id(rs, g) for g in mono], "coeff": complex_json(c)}
        for mono, c in phi.terms
    ]


def coordinate_json(c) -> dict:
    if isinstance(c, SignedZero):
        return {"kind": "signed-zero", "value": str(c)}
    return {"kind": "symplectic", "x": q(c.x)}


def cell_json(cell) -> dict:
    return {
        "theta": [[root_json(r), s] for r, s in cell.theta],
        "closure": [[root_json(r), s] for r, s in cell.closure],
        "complex_signs": [[root_json(r), s] for r, s in cell.complex_signs],
        "dim": cell.dim,
        "type": cell.gcs_type,
        "canonical_key": cell.canonical_key,
        "standard_theta": [root_json(r) for r in cell.standard_theta],
        "word": [i + 1 for i in cell.word],
    }
