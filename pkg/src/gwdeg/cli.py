"""Command line front end.

Subcommand tree:
    algebra {make | trace | multmatrix | traceform}
    gw      {make | add | mul | diag | transfer | classify | iso | witt}
    gwu     {make | diagonal | hyperbolic | add | iso | decompose | divsum}
    deg     {global | local | ph-check}
    selftest

Matrix and class payloads are JSON, given inline, as a file path, or as "-"
for stdin.  Every leaf takes --format text|json.  Exit codes: 0 success,
1 malformed input, 2 mathematical domain error, 3 unsupported operation.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import serialize
from .degrees import (
    check_poincare_hopf,
    global_unstable_degree,
    local_unstable_degree,
    make_pointed,
)
from .errors import (
    GwdegError,
    InputSyntaxError,
    MathDomainError,
    UnsupportedOperationError,
)
from .classify import get_invariants, get_witt_decomposition, is_isomorphic_gw
from .etale import as_algebra, multiplication_matrix, trace, trace_form
from .gw import (
    add_gw,
    get_diagonal_class,
    make_gw_class,
    multiply_gw,
    transfer_gw,
    transfer_gw_entrywise,
)
from .linalg import congruent
from .numbertheory import hilbert_symbol, rational_places, reduce_square_class
from .parsing import (
    parse_algebra_descriptor,
    parse_element,
    parse_field_descriptor,
    parse_polynomial,
    parse_scalar,
)
from .poly import Polynomial, poly_gcd, resultant
from .unstable import (
    add_gwu,
    add_gwu_divisorial,
    get_sum_decomposition_gwu,
    is_isomorphic_gwu,
    make_diagonal_unstable_form,
    make_gwu,
    make_hyperbolic_unstable_form,
)

ENTRYWISE_NOTE = (
    "note: entrywise mode traces each matrix entry separately; this is not"
    " the transfer of the form and may be degenerate"
)


class _ArgumentParser(argparse.ArgumentParser):
    """argparse that reports usage problems as InputSyntaxError (exit 1)."""

    def error(self, message):
        raise InputSyntaxError(message)


def _load_document(arg: str):
    text = arg.strip()
    if arg == "-":
        source = sys.stdin.read()
    elif text.startswith("{") or text.startswith("["):
        source = text
    else:
        try:
            with open(arg, "r", encoding="utf-8") as handle:
                source = handle.read()
        except OSError as exc:
            raise InputSyntaxError(f"cannot read {arg!r}: {exc}") from exc
    try:
        return json.loads(source)
    except json.JSONDecodeError as exc:
        raise InputSyntaxError(f"bad JSON in {arg!r}: {exc}") from exc


def _space_from_args(args):
    """The algebra selected by --field/--algebra, or None."""
    field = getattr(args, "field", None)
    algebra = getattr(args, "algebra", None)
    if field and algebra:
        raise InputSyntaxError("give either --field or --algebra, not both")
    if algebra:
        return parse_algebra_descriptor(algebra)
    if field:
        return as_algebra(parse_field_descriptor(field))
    return None


def _format_matrix(rows) -> str:
    cells = [[str(e) for e in row] for row in rows]
    width = max((len(c) for row in cells for c in row), default=1)
    return "\n".join(
        "[ " + "  ".join(c.rjust(width) for c in row) + " ]" for row in cells
    )


def _gwu_text(u) -> str:
    return f"{u}\ncompatibility: {u.compatibility}"


def _bool_text(flag: bool) -> str:
    return "true" if flag else "false"


# ---------------------------------------------------------------------------
# algebra subcommands
# ---------------------------------------------------------------------------


def _cmd_algebra_make(args):
    alg = parse_algebra_descriptor(args.descriptor)
    text = "\n".join(
        [
            str(alg),
            f"dimension: {alg.dimension}",
            f"splits completely: {_bool_text(alg.splits_completely)}",
        ]
    )
    return text, serialize.algebra_to_json(alg)


def _cmd_algebra_trace(args):
    alg = parse_algebra_descriptor(args.algebra)
    u = parse_element(args.element, alg)
    t = trace(u)
    return str(t), {"trace": serialize.scalar_to_text(t)}


def _cmd_algebra_multmatrix(args):
    alg = parse_algebra_descriptor(args.algebra)
    u = parse_element(args.element, alg)
    m = multiplication_matrix(u)
    return _format_matrix(m), {"matrix": serialize.scalar_matrix_to_json(m)}


def _cmd_algebra_traceform(args):
    alg = parse_algebra_descriptor(args.algebra)
    c = trace_form(alg)
    return str(c), serialize.gw_to_json(c)


# ---------------------------------------------------------------------------
# gw subcommands
# ---------------------------------------------------------------------------


def _load_gw(arg, args):
    return serialize.gw_from_json(_load_document(arg), _space_from_args(args))


def _cmd_gw_make(args):
    c = _load_gw(args.matrix, args)
    return str(c), serialize.gw_to_json(c)


def _cmd_gw_add(args):
    c = add_gw(_load_gw(args.a, args), _load_gw(args.b, args))
    return str(c), serialize.gw_to_json(c)


def _cmd_gw_mul(args):
    c = multiply_gw(_load_gw(args.a, args), _load_gw(args.b, args))
    return str(c), serialize.gw_to_json(c)


def _cmd_gw_diag(args):
    c = _load_gw(args.matrix, args)
    diag, witness = get_diagonal_class(c)
    entries = ", ".join(str(e) for e in diag.diagonal_entries())
    text = f"diagonal: {entries}\nwitness:\n{_format_matrix(witness)}"
    payload = {
        "diagonal": serialize.gw_to_json(diag),
        "witness": serialize.matrix_to_json(witness),
    }
    return text, payload


def _cmd_gw_transfer(args):
    beta = _load_gw(args.matrix, args)
    if args.mode == "entrywise":
        print(ENTRYWISE_NOTE, file=sys.stderr)
        c = transfer_gw_entrywise(beta)
    else:
        c = transfer_gw(beta)
    return str(c), serialize.gw_to_json(c)


def _cmd_gw_classify(args):
    inv = get_invariants(_load_gw(args.matrix, args))
    lines = [
        f"field: {inv.field.descriptor()}",
        f"rank: {inv.rank}",
        f"discriminant: {serialize.square_class_to_text(inv.discriminant)}",
    ]
    if inv.signature is not None:
        lines.append(f"signature: ({inv.signature[0]}, {inv.signature[1]})")
    if inv.hasse is not None:
        shown = " ".join(
            f"{v}:{'+1' if s > 0 else '-1'}" for v, s in _sorted_places(inv.hasse)
        )
        lines.append(f"hasse: {shown}")
    return "\n".join(lines), serialize.invariants_to_json(inv)


def _sorted_places(hasse: dict):
    return sorted(hasse.items(), key=lambda kv: (isinstance(kv[0], int), kv[0]))


def _cmd_gw_iso(args):
    flag = is_isomorphic_gw(_load_gw(args.a, args), _load_gw(args.b, args))
    return _bool_text(flag), {"isomorphic": flag}


def _cmd_gw_witt(args):
    w = get_witt_decomposition(_load_gw(args.matrix, args))
    aniso = ", ".join(str(a) for a in w.anisotropic) or "(none)"
    assembled = ", ".join(str(a) for a in w.assembled_entries())
    text = "\n".join(
        [
            f"hyperbolic planes: {w.hyperbolic_count}",
            f"anisotropic: {aniso}",
            f"assembled: {assembled}",
        ]
    )
    return text, serialize.witt_to_json(w)


# ---------------------------------------------------------------------------
# gwu subcommands
# ---------------------------------------------------------------------------


def _load_gwu(arg, args):
    return serialize.gwu_from_json(_load_document(arg), _space_from_args(args))


def _cmd_gwu_make(args):
    doc = _load_document(args.matrix)
    entries, alg = serialize.gram_from_json(doc, _space_from_args(args))
    if args.scalar is not None:
        scalar = parse_element(args.scalar, alg)
    elif isinstance(doc, dict) and "scalar" in doc:
        scalar = serialize.element_from_json(doc["scalar"], alg)
    else:
        scalar = None
    u = make_gwu(entries, scalar=scalar, algebra=alg)
    return _gwu_text(u), serialize.gwu_to_json(u)


def _cmd_gwu_diagonal(args):
    alg = _space_from_args(args)
    if alg is None:
        raise InputSyntaxError("--field or --algebra is required")
    entries = [parse_element(part, alg) for part in args.entries.split(",")]
    u = make_diagonal_unstable_form(alg, entries)
    return _gwu_text(u), serialize.gwu_to_json(u)


def _cmd_gwu_hyperbolic(args):
    alg = _space_from_args(args)
    if alg is None:
        raise InputSyntaxError("--field or --algebra is required")
    u = make_hyperbolic_unstable_form(alg, args.rank)
    return _gwu_text(u), serialize.gwu_to_json(u)


def _cmd_gwu_add(args):
    u = add_gwu(_load_gwu(args.a, args), _load_gwu(args.b, args))
    return _gwu_text(u), serialize.gwu_to_json(u)


def _cmd_gwu_iso(args):
    flag = is_isomorphic_gwu(_load_gwu(args.a, args), _load_gwu(args.b, args))
    return _bool_text(flag), {"isomorphic": flag}


def _cmd_gwu_decompose(args):
    u = get_sum_decomposition_gwu(_load_gwu(args.cls, args))
    return _gwu_text(u), serialize.gwu_to_json(u)


def _cmd_gwu_divsum(args):
    classes = [_load_gwu(arg, args) for arg in args.classes]
    base = classes[0].algebra.base
    points = [parse_scalar(part, base) for part in args.points.split(",")]
    u = add_gwu_divisorial(classes, points)
    return _gwu_text(u), serialize.gwu_to_json(u)


# ---------------------------------------------------------------------------
# deg subcommands
# ---------------------------------------------------------------------------


def _pointed_from_args(args):
    field = parse_field_descriptor(args.field)
    f = parse_polynomial(args.num, field)
    g = parse_polynomial(args.den, field)
    return make_pointed(f, g)


def _cmd_deg_global(args):
    u = global_unstable_degree(_pointed_from_args(args))
    return _gwu_text(u), serialize.gwu_to_json(u)


def _cmd_deg_local(args):
    q = _pointed_from_args(args)
    r = parse_scalar(args.point, q.field)
    u = local_unstable_degree(q, r)
    return _gwu_text(u), serialize.gwu_to_json(u)


def _cmd_deg_ph_check(args):
    q = _pointed_from_args(args)
    roots = [parse_scalar(part, q.field) for part in args.points.split(",")]
    flag = check_poincare_hopf(q, roots)
    return _bool_text(flag), {"poincare_hopf": flag}


# ---------------------------------------------------------------------------
# selftest
# ---------------------------------------------------------------------------


def _nonzero(rng, lo=-40, hi=40):
    while True:
        v = rng.randint(lo, hi)
        if v:
            return v


def _selftest_hilbert(rng, trials=60):
    from fractions import Fraction

    for _ in range(trials):
        a = Fraction(_nonzero(rng, -9999, 9999), _nonzero(rng, 1, 99))
        b = Fraction(_nonzero(rng, -9999, 9999), _nonzero(rng, 1, 99))
        places = rational_places(a, b)
        product = 1
        for v in places:
            product *= hilbert_symbol(a, b, v)
        if product != 1:
            raise MathDomainError(f"hilbert reciprocity failed for {a}, {b}")


def _selftest_square_classes(rng, trials=60):
    from fractions import Fraction
    from .fields import QQ, Scalar

    for _ in range(trials):
        a = Fraction(_nonzero(rng, -500, 500), _nonzero(rng, 1, 60))
        c = Fraction(_nonzero(rng, -60, 60), _nonzero(rng, 1, 60))
        lhs = reduce_square_class(Scalar(QQ, a * c * c))
        rhs = reduce_square_class(Scalar(QQ, a))
        if lhs != rhs:
            raise MathDomainError(f"square class reduction failed for {a}, {c}")


def _random_gw(rng, field, n):
    while True:
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                rows[i][j] = rows[j][i] = rng.randint(-4, 4)
        try:
            return make_gw_class(rows, field=field)
        except MathDomainError:
            continue


def _selftest_diagonalization(rng, trials=25):
    from .fields import QQ

    for _ in range(trials):
        c = _random_gw(rng, QQ, rng.randint(1, 4))
        diag, witness = get_diagonal_class(c)
        if congruent(witness, c.get_matrix()) != diag.get_matrix():
            raise MathDomainError("diagonalization witness check failed")


def _selftest_bezoutian(rng, trials=20):
    from .degrees import bezoutian_matrix
    from .fields import QQ
    from .linalg import det_bareiss

    for _ in range(trials):
        n = rng.randint(2, 4)
        f = Polynomial(QQ, [rng.randint(-4, 4) for _ in range(n)] + [1])
        g = Polynomial(QQ, [rng.randint(-4, 4) for _ in range(n)])
        if g.is_zero() or poly_gcd(f, g).degree != 0:
            continue
        q = make_pointed(f, g)
        bez = bezoutian_matrix(q)
        det = det_bareiss(bez)
        sign = (-1) ** (n * (n - 1) // 2)
        if det != sign * resultant(f, g):
            raise MathDomainError(f"bezoutian determinant mismatch for {f}, {g}")


def _cmd_selftest(args):
    rng = random.Random(args.seed)
    checks = [
        ("hilbert reciprocity", _selftest_hilbert),
        ("square class reduction", _selftest_square_classes),
        ("diagonalization witnesses", _selftest_diagonalization),
        ("bezoutian determinants", _selftest_bezoutian),
    ]
    lines = []
    for name, check in checks:
        check(rng)
        lines.append(f"ok - {name}")
    lines.append(f"selftest passed (seed {args.seed})")
    return "\n".join(lines), {"seed": args.seed, "passed": True}


# ---------------------------------------------------------------------------
# parser wiring
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _ArgumentParser(
        prog="gwdeg",
        description="Exact Grothendieck-Witt classes and unstable degrees.",
    )
    top = parser.add_subparsers(dest="group", required=True)

    fmt = _ArgumentParser(add_help=False)
    fmt.add_argument(
        "--format", choices=("text", "json"), default="text",
        help="output format (default text)",
    )
    space = _ArgumentParser(add_help=False)
    space.add_argument("--field", help="base field descriptor: QQ, RR, CC, GF:p")
    space.add_argument(
        "--algebra", help="algebra descriptor: BASE[x]/(f1)x(f2)..."
    )

    algebra = top.add_parser("algebra", help="etale algebra utilities")
    asub = algebra.add_subparsers(dest="command", required=True)
    p = asub.add_parser("make", parents=[fmt], help="validate a descriptor")
    p.add_argument("descriptor")
    p.set_defaults(handler=_cmd_algebra_make)
    p = asub.add_parser("trace", parents=[fmt], help="trace of an element")
    p.add_argument("--algebra", required=True)
    p.add_argument("--element", required=True)
    p.set_defaults(handler=_cmd_algebra_trace)
    p = asub.add_parser(
        "multmatrix", parents=[fmt], help="multiplication matrix of an element"
    )
    p.add_argument("--algebra", required=True)
    p.add_argument("--element", required=True)
    p.set_defaults(handler=_cmd_algebra_multmatrix)
    p = asub.add_parser(
        "traceform", parents=[fmt], help="trace form over the base field"
    )
    p.add_argument("--algebra", required=True)
    p.set_defaults(handler=_cmd_algebra_traceform)

    gw = top.add_parser("gw", help="Grothendieck-Witt classes")
    gsub = gw.add_subparsers(dest="command", required=True)
    p = gsub.add_parser("make", parents=[fmt, space], help="validate a Gram matrix")
    p.add_argument("matrix")
    p.set_defaults(handler=_cmd_gw_make)
    p = gsub.add_parser("add", parents=[fmt, space], help="direct sum")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_gw_add)
    p = gsub.add_parser("mul", parents=[fmt, space], help="tensor product")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_gw_mul)
    p = gsub.add_parser(
        "diag", parents=[fmt, space], help="diagonalize with a congruence witness"
    )
    p.add_argument("matrix")
    p.set_defaults(handler=_cmd_gw_diag)
    p = gsub.add_parser(
        "transfer", parents=[fmt, space], help="trace transfer to the base field"
    )
    p.add_argument("matrix")
    p.add_argument(
        "--mode", choices=("full", "entrywise"), default="full",
        help="full transfer (default) or per-entry traces",
    )
    p.set_defaults(handler=_cmd_gw_transfer)
    p = gsub.add_parser(
        "classify", parents=[fmt, space], help="rank, discriminant, and friends"
    )
    p.add_argument("matrix")
    p.set_defaults(handler=_cmd_gw_classify)
    p = gsub.add_parser("iso", parents=[fmt, space], help="isomorphism test")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_gw_iso)
    p = gsub.add_parser("witt", parents=[fmt, space], help="Witt decomposition")
    p.add_argument("matrix")
    p.set_defaults(handler=_cmd_gw_witt)

    gwu = top.add_parser("gwu", help="unstable classes (form, scalar)")
    usub = gwu.add_subparsers(dest="command", required=True)
    p = usub.add_parser("make", parents=[fmt, space], help="build an unstable class")
    p.add_argument("matrix")
    p.add_argument("--scalar", help="scalar part; defaults to the determinant")
    p.set_defaults(handler=_cmd_gwu_make)
    p = usub.add_parser(
        "diagonal", parents=[fmt, space], help="diagonal form, scalar = product"
    )
    p.add_argument("--entries", required=True, help="comma-separated entries")
    p.set_defaults(handler=_cmd_gwu_diagonal)
    p = usub.add_parser(
        "hyperbolic", parents=[fmt, space], help="sum of hyperbolic planes"
    )
    p.add_argument("--rank", type=int, required=True)
    p.set_defaults(handler=_cmd_gwu_hyperbolic)
    p = usub.add_parser("add", parents=[fmt, space], help="direct sum")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_gwu_add)
    p = usub.add_parser("iso", parents=[fmt, space], help="isomorphism test")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(handler=_cmd_gwu_iso)
    p = usub.add_parser(
        "decompose", parents=[fmt, space], help="Witt-decomposed representative"
    )
    p.add_argument("cls", metavar="class")
    p.set_defaults(handler=_cmd_gwu_decompose)
    p = usub.add_parser(
        "divsum", parents=[fmt, space],
        help="divisorial sum of local classes at distinct points",
    )
    p.add_argument("classes", nargs="+")
    p.add_argument("--points", required=True, help="comma-separated points")
    p.set_defaults(handler=_cmd_gwu_divsum)

    deg = top.add_parser("deg", help="unstable degrees of pointed functions")
    dsub = deg.add_subparsers(dest="command", required=True)
    for name, handler in (
        ("global", _cmd_deg_global),
        ("local", _cmd_deg_local),
        ("ph-check", _cmd_deg_ph_check),
    ):
        p = dsub.add_parser(name, parents=[fmt])
        p.add_argument("--field", required=True)
        p.add_argument("--num", required=True, help="numerator, monic")
        p.add_argument("--den", required=True, help="denominator")
        if name == "local":
            p.add_argument("--point", required=True)
        if name == "ph-check":
            p.add_argument("--points", required=True, help="comma-separated roots")
        p.set_defaults(handler=handler)

    p = top.add_parser("selftest", parents=[fmt], help="randomized smoke checks")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_selftest)

    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        text, payload = args.handler(args)
    except InputSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except UnsupportedOperationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except GwdegError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:
        code = exc.code
        return 0 if code in (None, 0) else int(code)
    if args.format == "json":
        sys.stdout.write(serialize.dumps(payload))
    else:
        print(text)
    return 0


def main() -> None:
    sys.exit(run())
