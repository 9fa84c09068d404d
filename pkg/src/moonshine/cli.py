"""Command-line surface: every subsystem as a scriptable subcommand.

All numbers are printed as exact decimals (rationals as num/den); the --json
flag switches to newline-delimited JSON objects whose integers are encoded as
strings, so consumers never face 64-bit overflow.  Exit codes: 0 success,
1 a verification returned false, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from fractions import Fraction

from . import groups, modular, monster, sl2z
from .qseries import UnknownCoefficient


def _json_safe(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    if isinstance(value, (list, tuple)):
        return [_json_safe(v) for v in value]
    if isinstance(value, dict):
        return {k: _json_safe(v) for k, v in value.items()}
    return str(value)


def _emit(args, record, human_lines):
    if args.json:
        print(json.dumps(_json_safe(record), sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _coeff_str(c):
    if isinstance(c, Fraction):
        return f"{c.numerator}/{c.denominator}"
    return str(c)


def _frac_str(v):
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


def _parse_fraction(text):
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _parse_point(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected a point as x,y with rational parts")
    x, y = (_parse_fraction(p) for p in parts)
    try:
        return sl2z.UpperHalfPoint(x, y)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _parse_complex(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected a complex number as re,im")
    return tuple(_parse_fraction(p) for p in parts)


def _parse_matrix(text):
    parts = text.split(",")
    if len(parts) != 4:
        raise argparse.ArgumentTypeError("expected a matrix as a,b,c,d")
    try:
        entries = [int(p) for p in parts]
    except ValueError as exc:
        raise argparse.ArgumentTypeError("matrix entries must be integers") from exc
    try:
        return sl2z.PSLElement(sl2z.Mat2Z(*entries))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


_GROUP_NAME = re.compile(r"^([CDAS])(\d+)$")


def _element_cap():
    cap = os.environ.get("MOONSHINE_ELEMENT_CAP")
    return int(cap) if cap else 100000


def _parse_group(name):
    m = _GROUP_NAME.match(name)
    if not m:
        raise argparse.ArgumentTypeError(
            f"unknown group {name!r}; use C<n>, D<n>, A<n> or S<n>")
    family, n = m.group(1), int(m.group(2))
    maker = {"C": groups.cyclic_group, "D": groups.dihedral_group,
             "A": groups.alternating_group, "S": groups.symmetric_group}[family]
    try:
        return maker(n, element_cap=_element_cap())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _series_lines(series, lo, hi):
    return [f"{n} {_coeff_str(series.coefficient(n))}" for n in range(lo, hi)]


def _series_record(series, lo, hi):
    return {"coefficients": {str(n): series.coefficient(n) for n in range(lo, hi)}}


def cmd_j(args):
    form = modular.j_normalized(args.order) if args.normalized else modular.j_expansion(args.order)
    lines = _series_lines(form.series, -1, args.order)
    _emit(args, {"label": form.label, **_series_record(form.series, -1, args.order)}, lines)
    return 0


def cmd_eisenstein(args):
    form = modular.eisenstein_normalized(args.weight, args.order)
    lines = _series_lines(form.series, 0, args.order)
    _emit(args, {"label": form.label, "weight": args.weight,
                 **_series_record(form.series, 0, args.order)}, lines)
    return 0


def cmd_delta(args):
    form = modular.discriminant(args.order)
    lines = _series_lines(form.series, 1, args.order)
    _emit(args, {"label": form.label, **_series_record(form.series, 1, args.order)}, lines)
    return 0


def cmd_reduce(args):
    tau_star, m, word = sl2z.reduce_to_fundamental(args.tau)
    record = {
        "tau": [tau_star.x, tau_star.y],
        "matrix": list(m.rep.entries()),
        "word": sl2z.word_to_str(word),
        "in_domain": sl2z.in_fundamental_domain(tau_star),
    }
    lines = [
        f"tau {_frac_str(tau_star.x)} {_frac_str(tau_star.y)}",
        "matrix " + " ".join(map(str, m.rep.entries())),
        f"word {sl2z.word_to_str(word)}",
    ]
    _emit(args, record, lines)
    return 0


def cmd_equiv(args):
    m = sl2z.tau_equivalent(args.tau1, args.tau2)
    if m is None:
        _emit(args, {"equivalent": False}, ["equivalent false"])
    else:
        _emit(args, {"equivalent": True, "matrix": list(m.rep.entries())},
              ["equivalent true", "matrix " + " ".join(map(str, m.rep.entries()))])
    return 0


def cmd_lattice(args):
    b1 = sl2z.LatticeBasis(args.b1[0], args.b1[1])
    b2 = sl2z.LatticeBasis(args.b2[0], args.b2[1])
    m = sl2z.lattice_same(b1, b2)
    if m is None:
        _emit(args, {"same_lattice": False}, ["same-lattice false"])
    else:
        flat = [m[0][0], m[0][1], m[1][0], m[1][1]]
        _emit(args, {"same_lattice": True, "matrix": flat},
              ["same-lattice true", "matrix " + " ".join(map(str, flat))])
    return 0


def cmd_word(args):
    word = sl2z.word_decompose(args.matrix)
    check = sl2z.evaluate_word(word) == args.matrix
    _emit(args, {"word": sl2z.word_to_str(word), "verified": check},
          [f"word {sl2z.word_to_str(word)}"])
    return 0 if check else 1


def cmd_group(args):
    g = args.name
    if args.action == "classes":
        classes = g.conjugacy_classes()
        lines = [f"{c.size} {c.representative!r}" for c in classes]
        record = {"group": g.name, "order": g.order,
                  "class_sizes": [c.size for c in classes]}
    elif args.action == "series":
        chain = g.composition_series()
        lines = ["orders " + " ".join(str(len(s)) for s in chain)]
        record = {"group": g.name, "subgroup_orders": [len(s) for s in chain]}
    else:
        factors = g.jordan_holder_factors()
        lines = [" ".join(str(d.order) for d in factors)]
        record = {"group": g.name, "factor_orders": [d.order for d in factors],
                  "abelian": [d.is_abelian for d in factors]}
    _emit(args, record, lines)
    return 0


def cmd_mckay(args):
    coeffs = monster.CoeffTable.from_resource()
    if args.irreps:
        dims = monster.IrrepDims.from_file(args.irreps)
    else:
        dims = monster.IrrepDims.from_resource()
    results = monster.mckay_identity_check(coeffs, dims)
    lines = []
    rows = []
    ok = True
    for chk in results:
        if chk.status is monster.CheckStatus.NOT_CONFIGURED:
            lines.append(f"{chk.label} not-configured (supply more irrep dimensions)")
            rows.append({"label": chk.label, "status": chk.status.value})
            continue
        ok = ok and chk.status is monster.CheckStatus.PASS
        mults = " + ".join(f"{m}*r{i + 1}" for i, m in enumerate(chk.decomposition.multiplicities) if m)
        lines.append(f"{chk.label} = {chk.coefficient} vs {mults} = "
                     f"{chk.decomposition.total}: {chk.status.value}")
        rows.append({"label": chk.label, "status": chk.status.value,
                     "coefficient": chk.coefficient, "sum": chk.decomposition.total,
                     "multiplicities": list(chk.decomposition.multiplicities)})
    _emit(args, {"checks": rows, "all_configured_pass": ok}, lines)
    return 0 if ok else 1


def cmd_knz(args):
    result = monster.knz_verify(args.order, unnormalized_c0=args.use_unnormalized_c0)
    lines = [f"equal: {'true' if result.equal else 'false'}"]
    mism = result.mismatches()
    for m, n, a, b in mism[:20]:
        lines.append(f"p^{m} q^{n}: lhs {a} rhs {b}")
    record = {"order": args.order, "equal": result.equal,
              "mismatches": [{"p": m, "q": n, "lhs": a, "rhs": b} for m, n, a, b in mism]}
    _emit(args, record, lines)
    return 0 if result.equal else 1


def cmd_facts(args):
    facts = monster.MONSTER_FACTS
    order = facts.order
    record = {
        "order": order,
        "order_digits": len(str(order)),
        "order_factorization": [[p, e] for p, e in facts.order_factorization],
        "conjugacy_classes": facts.conjugacy_class_count,
        "distinct_mckay_thompson_series": facts.distinct_mckay_thompson_series,
        "mckay_thompson_span_dimension": facts.mckay_thompson_span_dimension,
    }
    lines = [
        f"order {order}",
        f"order-digits {len(str(order))}",
        "order-factorization " + " ".join(f"{p}^{e}" if e > 1 else str(p)
                                          for p, e in facts.order_factorization),
        f"conjugacy-classes {facts.conjugacy_class_count}",
        f"distinct-mckay-thompson-series {facts.distinct_mckay_thompson_series}",
        f"mckay-thompson-span-dimension {facts.mckay_thompson_span_dimension}",
    ]
    _emit(args, record, lines)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="moonshine",
        description="Exact arithmetic for the J-invariant, the modular group, "
                    "small finite groups and moonshine numerology.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit newline-delimited JSON with string-encoded integers")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("j", parents=[common], help="coefficients of the modular invariant")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--normalized", action="store_true", help="drop the constant term 744")
    p.set_defaults(func=cmd_j)

    p = sub.add_parser("eisenstein", parents=[common], help="normalized Eisenstein series")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_eisenstein)

    p = sub.add_parser("delta", parents=[common], help="the discriminant cusp form")
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("reduce", parents=[common], help="reduce a point into the fundamental domain")
    p.add_argument("--tau", type=_parse_point, required=True, metavar="X,Y")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("equiv", parents=[common], help="test two points for orbit equivalence")
    p.add_argument("--tau1", type=_parse_point, required=True, metavar="X,Y")
    p.add_argument("--tau2", type=_parse_point, required=True, metavar="X,Y")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("lattice", parents=[common], help="test two bases for lattice equality")
    p.add_argument("--b1", type=_parse_complex, nargs=2, required=True, metavar="RE,IM")
    p.add_argument("--b2", type=_parse_complex, nargs=2, required=True, metavar="RE,IM")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("word", parents=[common], help="decompose a matrix into generator moves")
    p.add_argument("--matrix", type=_parse_matrix, required=True, metavar="A,B,C,D")
    p.set_defaults(func=cmd_word)

    p = sub.add_parser("group", parents=[common], help="structure of a named finite group")
    p.add_argument("--name", type=_parse_group, required=True, metavar="C12|D5|A5|S4")
    p.add_argument("--action", choices=["classes", "series", "factors"], required=True)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("mckay", parents=[common], help="check the decomposition identities")
    p.add_argument("--irreps", metavar="PATH",
                   help="file of 'index value' lines overriding the embedded irrep dimensions")
    p.set_defaults(func=cmd_mckay)

    p = sub.add_parser("knz", parents=[common], help="verify the two-variable product identity")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--use-unnormalized-c0", action="store_true",
                   help="negative control: use c(0) = 744 in the exponents")
    p.set_defaults(func=cmd_knz)

    p = sub.add_parser("facts", parents=[common], help="documented monster constants")
    p.set_defaults(func=cmd_facts)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (modular.DomainError, sl2z.DegenerateBasis, monster.InsufficientData,
            monster.InsufficientCoefficients, UnknownCoefficient,
            groups.CapExceeded, groups.TooManyClasses, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run():
    raise SystemExit(main())


if __name__ == "__main__":
    run()
