"""Curve input files and a small safe expression parser."""

from __future__ import annotations

import ast
import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from pathlib import Path

from .core.bpoly import BPoly
from .core.mpoly import MPoly
from .core.numberfield import NumberField
from .errors import InputError

_ALIASES = {"x": "X", "X": "X", "y0": "Y0", "Y0": "Y0", "y": "Y", "Y": "Y"}


def parse_scalar(v, field=None):
    """``"p/q"``, an int, or a coordinate list for a field element."""
    try:
        if isinstance(v, list):
            if field is None:
                raise InputError("coordinate list given but no number field declared")
            return field([Fraction(str(c)) for c in v])
        if isinstance(v, bool) or isinstance(v, float):
            raise InputError(f"not an exact scalar: {v!r} (use a string like \"3/4\")")
        if isinstance(v, str) and field is not None and not _is_rational_literal(v):
            return _const(parse_expr(v, field))
        c = Fraction(str(v).strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad scalar {v!r}: {exc}") from exc
    return field(c) if field is not None else c


def _is_rational_literal(s: str) -> bool:
    try:
        Fraction(s.strip())
        return True
    except (ValueError, ZeroDivisionError):
        return False


def _const(p: MPoly):
    if not p.is_const():
        raise InputError(f"expected a constant, got {p}")
    return p.const_value()


def parse_expr(text: str, field=None) -> MPoly:
    """Polynomial expression in ``x, y0, y`` (and the field generator) with exact constants."""
    try:
        tree = ast.parse(text.replace("^", "**"), mode="eval")
    except SyntaxError as exc:
        raise InputError(f"cannot parse expression {text!r}: {exc.msg}") from exc
    gen = field.name if field is not None else None

    def ev(node) -> MPoly:
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
            return MPoly.const(Fraction(node.value))
        if isinstance(node, ast.Name):
            if node.id in _ALIASES:
                return MPoly.var(_ALIASES[node.id])
            if gen is not None and node.id == gen:
                return MPoly.const(field.gen)
            raise InputError(f"unknown name {node.id!r}")
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            v = ev(node.operand)
            return -v if isinstance(node.op, ast.USub) else v
        if isinstance(node, ast.BinOp):
            a, b = ev(node.left), ev(node.right)
            if isinstance(node.op, ast.Add):
                return a + b
            if isinstance(node.op, ast.Sub):
                return a - b
            if isinstance(node.op, ast.Mult):
                return a * b
            if isinstance(node.op, ast.Div):
                c = _const(b)
                if not c:
                    raise InputError("division by zero")
                return a * (1 / c)
            if isinstance(node.op, ast.Pow):
                e = _const(b)
                if not isinstance(e, Fraction) or e.denominator != 1 or e < 0:
                    raise InputError("exponents must be non-negative integers")
                return a ** int(e)
        raise InputError(f"unsupported syntax in {text!r}")

    return ev(tree)


def expr_to_bpoly(p: MPoly, xname: str, yname: str) -> BPoly:
    terms = {}
    for mono, c in p.terms.items():
        d = dict(mono)
        if set(d) - {xname, yname}:
            raise InputError(f"unexpected variables in {p}")
        terms[(d.get(xname, 0), d.get(yname, 0))] = c
    return BPoly._raw(terms)


def parse_bivariate(v, field, yname: str) -> BPoly:
    """Coefficient matrix ``rows[i][j]`` of ``X^i Y^j`` or an expression string."""
    if isinstance(v, str):
        return expr_to_bpoly(parse_expr(v, field), "X", yname)
    if isinstance(v, list) and all(isinstance(r, list) for r in v):
        return BPoly({(i, j): parse_scalar(c, field) for i, row in enumerate(v) for j, c in enumerate(row)})
    raise InputError("polynomial must be a coefficient matrix or an expression string")


@dataclass
class CurveInput:
    field: object = None
    f: BPoly | None = None
    F0: BPoly | None = None
    seed_u: MPoly | None = None
    y_expr: MPoly | None = None
    m: int | None = None
    declared: list = dc_field(default_factory=list)
    bad_xs: list = dc_field(default_factory=list)
    rho: int | None = None
    source: str = ""


def load_curve(data) -> CurveInput:
    if isinstance(data, (str, Path)):
        path = Path(data)
        try:
            text = path.read_text()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}") from exc
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"{path}: invalid JSON: {exc}") from exc
        src = str(path)
    else:
        obj, src = data, "<dict>"
    if not isinstance(obj, dict):
        raise InputError("curve file must hold a JSON object")
    field = None
    if obj.get("field"):
        fd = obj["field"]
        try:
            mp = [Fraction(str(c)) for c in fd["minpoly"]]
        except (KeyError, ValueError, TypeError) as exc:
            raise InputError(f"bad field descriptor: {exc}") from exc
        field = NumberField(mp, fd.get("name", "a"))
    ci = CurveInput(field=field, source=src)
    if "f" in obj:
        ci.f = parse_bivariate(obj["f"], field, "Y")
    if "F0" in obj:
        ci.F0 = parse_bivariate(obj["F0"], field, "Y0")
    if ci.f is None and ci.F0 is None:
        raise InputError("curve file needs \"f\" or \"F0\"")
    for key, attr in (("seed_u", "seed_u"), ("y_expr", "y_expr")):
        if key in obj:
            v = obj[key]
            setattr(ci, attr, parse_expr(v, field) if isinstance(v, str) else
                    MPoly.from_bpoly(parse_bivariate(v, field, "Y0"), "X", "Y0"))
    if ci.F0 is not None and ci.f is None and ci.seed_u is None and ci.y_expr is None:
        raise InputError("F0 given without seed_u or y_expr")
    if "m" in obj:
        ci.m = int(obj["m"])
    ci.declared = [parse_scalar(a, field) for a in obj.get("declared_branch_points", [])]
    ci.bad_xs = [parse_scalar(a, field) for a in obj.get("bad_xs", [])]
    if obj.get("rho") is not None:
        ci.rho = int(obj["rho"])
    return ci


def dumps(obj) -> str:
    """Deterministic JSON."""
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=True) + "\n"
