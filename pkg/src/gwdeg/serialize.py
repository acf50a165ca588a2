"""Deterministic JSON serialization for every exposed value type.

Scalars travel as strings ("p/q" over the fraction fields, a residue over a
prime field) and never as floats.  Polynomials are ascending coefficient
arrays.  Elements of a field-like algebra collapse to scalar strings;
elements of a proper algebra are per-factor coefficient arrays.  The text
emitted by dumps() is byte-stable: keys are sorted and the layout is fixed.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .classify import FormInvariants, WittDecomposition
from .errors import InputSyntaxError
from .etale import AlgebraElement, EtaleAlgebra, as_algebra, make_etale_algebra
from .fields import FieldSpec, Scalar
from .gw import GrothendieckWittClass, make_gw_class
from .numbertheory import SquareClass
from .parsing import (
    parse_algebra_descriptor,
    parse_field_descriptor,
    parse_polynomial,
)
from .poly import Polynomial
from .unstable import UnstableGWClass, make_gwu


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


# ---- scalars and polynomials ----


def scalar_to_text(s: Scalar) -> str:
    return str(s.value)


def scalar_from_text(text: str, field: FieldSpec) -> Scalar:
    expr = text.strip()
    try:
        if field.uses_fractions:
            return Scalar(field, Fraction(expr))
        return Scalar(field, int(expr))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputSyntaxError(f"bad scalar literal {text!r}") from exc


def poly_to_json(f: Polynomial) -> list:
    return [scalar_to_text(c) for c in f.coeffs]


def _coeff_from_json(item, field: FieldSpec) -> Scalar:
    if isinstance(item, bool) or isinstance(item, float):
        raise InputSyntaxError("numeric literals must be strings or integers")
    if isinstance(item, int):
        return Scalar(field, item)
    if isinstance(item, str):
        return scalar_from_text(item, field)
    raise InputSyntaxError(f"bad coefficient {item!r}")


def poly_from_json(data, field: FieldSpec, var: str = "x") -> Polynomial:
    if not isinstance(data, list):
        raise InputSyntaxError("a polynomial is a list of coefficients")
    return Polynomial(field, [_coeff_from_json(c, field) for c in data], var)


# ---- algebras ----


def algebra_to_json(algebra: EtaleAlgebra) -> dict:
    return {
        "base": algebra.base.descriptor(),
        "variable": algebra.factors[0].var,
        "factors": [poly_to_json(f) for f in algebra.factors],
    }


def algebra_from_json(data) -> EtaleAlgebra:
    if isinstance(data, str):
        return parse_algebra_descriptor(data)
    if not isinstance(data, dict):
        raise InputSyntaxError("an algebra is a descriptor string or an object")
    try:
        base = parse_field_descriptor(data["base"])
        factors = data["factors"]
    except KeyError as exc:
        raise InputSyntaxError(f"algebra object is missing {exc.args[0]!r}") from exc
    var = data.get("variable", "x")
    return make_etale_algebra(base, [poly_from_json(f, base, var) for f in factors])


# ---- algebra elements and matrices ----


def element_to_json(u: AlgebraElement):
    if u.algebra.is_field_like:
        return scalar_to_text(u.as_scalar())
    return [poly_to_json(r) for r in u.residues]


def element_from_json(data, algebra: EtaleAlgebra) -> AlgebraElement:
    var = algebra.factors[0].var
    if isinstance(data, bool) or isinstance(data, float):
        raise InputSyntaxError("numeric literals must be strings or integers")
    if isinstance(data, int):
        return algebra.coerce(data)
    if isinstance(data, str):
        return algebra.coerce(parse_polynomial(data, algebra.base, variable=var))
    if isinstance(data, list):
        if data and all(isinstance(item, list) for item in data):
            if len(data) != len(algebra.factors):
                raise InputSyntaxError(
                    f"expected {len(algebra.factors)} residues, got {len(data)}"
                )
            return algebra.element(
                [poly_from_json(item, algebra.base, var) for item in data]
            )
        return algebra.coerce(poly_from_json(data, algebra.base, var))
    raise InputSyntaxError(f"bad algebra element {data!r}")


def matrix_to_json(rows) -> list:
    return [[element_to_json(e) for e in row] for row in rows]


def scalar_matrix_to_json(rows) -> list:
    return [[scalar_to_text(e) for e in row] for row in rows]


def _resolve_algebra(data: dict):
    if "algebra" in data:
        return algebra_from_json(data["algebra"])
    if "field" in data:
        return as_algebra(parse_field_descriptor(data["field"]))
    return None


def _space_key(algebra: EtaleAlgebra) -> dict:
    if algebra.is_trivial:
        return {"field": algebra.base.descriptor()}
    return {"algebra": str(algebra)}


# ---- Grothendieck-Witt classes ----


def gw_to_json(cls: GrothendieckWittClass) -> dict:
    out = _space_key(cls.algebra)
    out["gram"] = matrix_to_json(cls.get_matrix())
    return out


def gram_from_json(data, algebra):
    if isinstance(data, list):
        rows = data
    elif isinstance(data, dict):
        rows = data.get("gram")
        if rows is None:
            raise InputSyntaxError("matrix document is missing 'gram'")
        declared = _resolve_algebra(data)
        if declared is not None:
            algebra = declared
    else:
        raise InputSyntaxError("expected a matrix or an object with 'gram'")
    if algebra is None:
        raise InputSyntaxError("no field or algebra specified for the matrix")
    if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise InputSyntaxError("'gram' must be a list of rows")
    entries = [[element_from_json(e, algebra) for e in row] for row in rows]
    return entries, algebra


def gw_from_json(data, algebra=None) -> GrothendieckWittClass:
    entries, algebra = gram_from_json(data, algebra)
    return make_gw_class(entries, algebra=algebra)


# ---- unstable classes ----


def gwu_to_json(u: UnstableGWClass) -> dict:
    out = gw_to_json(u.gw)
    out["scalar"] = element_to_json(u.scalar)
    out["compatibility"] = u.compatibility
    return out


def gwu_from_json(data, algebra=None) -> UnstableGWClass:
    entries, algebra = gram_from_json(data, algebra)
    scalar = None
    if isinstance(data, dict) and "scalar" in data:
        scalar = element_from_json(data["scalar"], algebra)
    return make_gwu(entries, scalar=scalar, algebra=algebra)


# ---- classification results ----


def square_class_to_text(sc: SquareClass) -> str:
    return str(sc.signed)


def invariants_to_json(inv: FormInvariants) -> dict:
    out = {
        "field": inv.field.descriptor(),
        "rank": inv.rank,
        "discriminant": square_class_to_text(inv.discriminant),
    }
    if inv.signature is not None:
        out["signature"] = list(inv.signature)
    if inv.hasse is not None:
        out["hasse"] = {str(v): sym for v, sym in sorted(
            inv.hasse.items(), key=lambda kv: (isinstance(kv[0], int), kv[0])
        )}
    return out


def witt_to_json(w: WittDecomposition) -> dict:
    return {
        "field": w.field.descriptor(),
        "hyperbolic": w.hyperbolic_count,
        "anisotropic": [scalar_to_text(a) for a in w.anisotropic],
        "assembled": [scalar_to_text(a) for a in w.assembled_entries()],
    }
