"""Command-line front end.

Verbs: classgroup, genus, bounds, factors, equation, classpoly, scan.
Every verb supports --json, which wraps the payload in a stable envelope
{schema_version, command, result, warnings}.  Flags can also be supplied via
environment variables with the SINGK3_ prefix (SINGK3_PRECISION,
SINGK3_BOUND, SINGK3_JSON, SINGK3_KUMMER).

Exit codes: 0 success, 2 usage error, 3 computation error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from mpmath import mp
from mpmath.libmp import dps_to_prec

from . import __version__
from .classgroup import (
    class_group,
    classes_per_genus,
    distinct_fields,
    fundamental_data,
    genus_partition,
    scan_one_class_per_genus,
    squares_subgroup,
)
from .errors import (
    InvalidDiscriminant,
    NotNegativeDiscriminant,
    NotPositiveDefinite,
    ParseError,
    SingK3Error,
)
from .forms import Form, form_sort_key
from .k3 import analyze, inose_pencil, kummer_equation, kummer_reduction
from .lattices import QuadElement, lattice_from_form, sm_factors
from .modular import class_polynomial

SCHEMA_VERSION = "1"

_USAGE_ERRORS = (ParseError, NotPositiveDefinite, NotNegativeDiscriminant, InvalidDiscriminant)

_SCAN_CAVEAT = (
    "the scan bound is a search cutoff, not a completeness proof: classically "
    "at most one further qualifying discriminant (of very large absolute value) "
    "could exist beyond any bound"
)


def parse_form(text: str) -> Form:
    """Parse 'a,b,c' into a validated form."""
    return Form.from_text(text)


def _env_default(name: str, fallback):
    raw = os.environ.get(f"SINGK3_{name}")
    if raw is None:
        return fallback
    return raw


def _env_flag(name: str) -> bool:
    return os.environ.get(f"SINGK3_{name}", "") not in ("", "0", "false", "no")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singk3",
        description="class groups, CM lattices, and field-of-definition bounds "
        "for singular K3 surfaces",
        epilog="environment overrides: SINGK3_PRECISION, SINGK3_BOUND, "
        "SINGK3_JSON, SINGK3_KUMMER",
    )
    parser.add_argument("--version", action="version", version=f"singk3 {__version__}")
    sub = parser.add_subparsers(dest="verb", required=True)

    def add_common(p):
        p.add_argument("--json", action="store_true", default=_env_flag("JSON"))
        p.add_argument(
            "--precision",
            type=int,
            default=int(_env_default("PRECISION", 128)),
            metavar="DIGITS",
            help="working precision in decimal digits (default 128)",
        )

    p = sub.add_parser("classgroup", help="reduced forms and structure of Cl(d)")
    p.add_argument("d", type=int)
    add_common(p)

    p = sub.add_parser("genus", help="genus partition and characters of Cl(d)")
    p.add_argument("d", type=int)
    add_common(p)

    p = sub.add_parser("bounds", help="field-of-definition bounds for a form")
    p.add_argument("--form", required=True, metavar="a,b,c")
    add_common(p)

    p = sub.add_parser("factors", help="CM points tau1, tau2 and their lattices")
    p.add_argument("--form", required=True, metavar="a,b,c")
    p.add_argument("--kummer", action="store_true", default=_env_flag("KUMMER"),
                   help="also report the half form when 2-divisible")
    add_common(p)

    p = sub.add_parser("equation", help="Weierstrass model of the pencil")
    p.add_argument("--form", required=True, metavar="a,b,c")
    p.add_argument("--kummer", action="store_true", default=_env_flag("KUMMER"),
                   help="emit the Kummer base change instead")
    add_common(p)

    p = sub.add_parser("classpoly", help="ring class polynomial of d")
    p.add_argument("d", type=int)
    add_common(p)

    p = sub.add_parser("scan", help="one-class-per-genus discriminant scan")
    p.add_argument("--bound", type=int, default=int(_env_default("BOUND", 10000)))
    add_common(p)

    return parser


def _form_list(forms) -> list[dict]:
    return [f.as_json() for f in sorted(forms, key=form_sort_key)]


def _nstr(x, digits: int) -> str:
    return mp.nstr(x, digits, strip_zeros=False)


def _value_json(v, digits: int) -> dict:
    if isinstance(v, Fraction):
        return {"type": "rational", "value": str(v)}
    return {"type": "complex", "re": _nstr(mp.re(v), digits), "im": _nstr(mp.im(v), digits)}


def _tau_json(tau: QuadElement) -> dict:
    return {
        "d_K": tau.field_discriminant,
        "x": [tau.x.numerator, tau.x.denominator],
        "y": [tau.y.numerator, tau.y.denominator],
    }


def _run_classgroup(args, warnings):
    g = class_group(args.d)
    return {
        "d": args.d,
        "h": g.order,
        "forms": _form_list(g.elements),
        "cyclic_decomposition": [
            {"generator": f.as_json(), "order": k} for f, k in g.generators
        ],
    }


def _run_genus(args, warnings):
    g = class_group(args.d)
    part = genus_partition(g)
    n = len(squares_subgroup(g))
    return {
        "d": args.d,
        "h": g.order,
        "g": part.genus_count,
        "n": n,
        "principal_genus": _form_list(part.principal_genus),
        "cosets": [_form_list(c) for c in part.cosets],
    }


def _run_bounds(args, warnings):
    q = parse_form(args.form)
    report = analyze(q, dps_to_prec(args.precision))
    sc = report.surface
    return {
        "form": q.as_json(),
        "d": sc.discriminant,
        "d_prime": sc.primitive_discriminant,
        "m": sc.content,
        "f": sc.conductor,
        "f_prime": sc.primitive_conductor,
        "d_K": sc.field_discriminant,
        "n": report.classes_per_genus,
        "h_upper": report.class_number_upper,
        "parity_forced": report.parity_forced,
        "exact_minimal_field": report.exact_minimal_field,
        "genus_size": report.genus_size,
        "model_field": {
            "description": report.model_field.description,
            "contained_in": report.model_field.contained_in,
            "j_tau1_normalized": _value_json(report.model_field.j_tau1_normalized, args.precision),
            "j_tau2_normalized": _value_json(report.model_field.j_tau2_normalized, args.precision),
        },
    }


def _run_factors(args, warnings):
    q = parse_form(args.form)
    pair = sm_factors(q)
    lat = lattice_from_form(q)
    result = {
        "form": q.as_json(),
        "d": pair.discriminant,
        "tau1": _tau_json(pair.tau1),
        "tau2": _tau_json(pair.tau2),
        "tau1_lattice": lat.as_json(),
    }
    if args.kummer:
        reduction = kummer_reduction(q)
        if reduction is None:
            result["kummer"] = None
            warnings.append("form is not 2-divisible; no Kummer reduction")
        else:
            half, halved = reduction
            result["kummer"] = {
                "half_form": half.as_json(),
                "tau1": _tau_json(halved.tau1),
                "tau2": _tau_json(halved.tau2),
                "d": halved.discriminant,
            }
    return result


def _run_equation(args, warnings):
    q = parse_form(args.form)
    prec = dps_to_prec(args.precision)
    model = kummer_equation(q, prec) if args.kummer else inose_pencil(q, prec)
    if not (isinstance(model.A, Fraction) and isinstance(model.B, Fraction)):
        warnings.append(
            f"coefficients not recognized as rationals; emitted numerically "
            f"at {args.precision} digits"
        )
    return {
        "form": q.as_json(),
        "kind": model.kind,
        "A": _value_json(model.A, args.precision),
        "B": _value_json(model.B, args.precision),
        "degenerate_rule_applied": model.degenerate_rule_applied,
        "equation": model.equation(),
        "a4": {str(k): _value_json(v, args.precision) for k, v in sorted(model.a4_polynomial().items())},
        "a6": {str(k): _value_json(v, args.precision) for k, v in sorted(model.a6_polynomial().items())},
    }


def _run_classpoly(args, warnings):
    poly = class_polynomial(args.d)
    return {
        "d": args.d,
        "degree": poly.degree,
        "coefficients": poly.as_json(),
        "certified": poly.certified,
    }


def _run_scan(args, warnings):
    hits = scan_one_class_per_genus(args.bound)
    fields = distinct_fields(hits)
    warnings.append(_SCAN_CAVEAT)
    records = []
    for d in hits:
        g = class_group(d)
        fd = fundamental_data(d)
        records.append(
            {
                "d": d,
                "h": g.order,
                "g": g.order // classes_per_genus(d),
                "n": classes_per_genus(d),
                "d_K": fd.field_discriminant,
                "f": fd.conductor,
            }
        )
    return {
        "bound": args.bound,
        "count": len(hits),
        "field_count": len(fields),
        "largest": hits[-1] if hits else None,
        "fields": sorted(fields, key=abs),
        "records": records,
    }


_RUNNERS = {
    "classgroup": _run_classgroup,
    "genus": _run_genus,
    "bounds": _run_bounds,
    "factors": _run_factors,
    "equation": _run_equation,
    "classpoly": _run_classpoly,
    "scan": _run_scan,
}


def _render_text(verb: str, result: dict, warnings: list[str], out) -> None:
    if verb == "classgroup":
        print(f"Cl({result['d']}): h = {result['h']}", file=out)
        for f in result["forms"]:
            print(f"  ({f['a']},{f['b']},{f['c']})", file=out)
        orders = [c["order"] for c in result["cyclic_decomposition"]]
        print(f"cyclic decomposition: {' x '.join(f'Z/{k}' for k in orders) or 'trivial'}", file=out)
    elif verb == "genus":
        print(
            f"Cl({result['d']}): h = {result['h']}, genera g = {result['g']}, "
            f"classes per genus n = {result['n']}",
            file=out,
        )
        for i, coset in enumerate(result["cosets"]):
            tag = " (principal)" if coset == result["principal_genus"] else ""
            forms = " ".join(f"({f['a']},{f['b']},{f['c']})" for f in coset)
            print(f"  genus {i}{tag}: {forms}", file=out)
    elif verb == "bounds":
        print(
            f"form ({result['form']['a']},{result['form']['b']},{result['form']['c']}): "
            f"d = {result['d']} = {result['m']}^2 * ({result['d_prime']}), "
            f"d_K = {result['d_K']}, f = {result['f']}",
            file=out,
        )
        print(
            f"  degree over K: divisible by n = {result['n']}, divides h(d) = {result['h_upper']}",
            file=out,
        )
        print(f"  degree over Q forced even: {result['parity_forced']}", file=out)
        if result["exact_minimal_field"]:
            print(f"  exact minimal field: {result['exact_minimal_field']}", file=out)
        j1 = result["model_field"]["j_tau1_normalized"]
        j2 = result["model_field"]["j_tau2_normalized"]
        print(
            f"  model over {result['model_field']['description']} "
            f"(inside {result['model_field']['contained_in']})",
            file=out,
        )
        for name, jv in (("j_n(tau1)", j1), ("j_n(tau2)", j2)):
            if jv["type"] == "rational":
                print(f"    {name} = {jv['value']}", file=out)
            else:
                print(f"    {name} = {jv['re']} + {jv['im']}*i", file=out)
    elif verb == "factors":
        print(f"d = {result['d']}", file=out)
        print(f"  tau1 = {_quad_str(result['tau1'])}", file=out)
        print(f"  tau2 = {_quad_str(result['tau2'])}", file=out)
        lat = result["tau1_lattice"]
        cf = lat["canonical_form"]
        print(
            f"  tau1 lattice: class ({cf['a']},{cf['b']},{cf['c']}), conductor {lat['conductor']}",
            file=out,
        )
        if "kummer" in result and result["kummer"]:
            km = result["kummer"]
            hf = km["half_form"]
            print(
                f"  Kummer: half form ({hf['a']},{hf['b']},{hf['c']}), "
                f"tau1 = {_quad_str(km['tau1'])}, tau2/2 = {_quad_str(km['tau2'])}",
                file=out,
            )
    elif verb == "equation":
        print(result["equation"], file=out)
        for name in ("A", "B"):
            v = result[name]
            if v["type"] == "rational":
                print(f"  {name} = {v['value']}", file=out)
            else:
                print(f"  {name} = {v['re']} + {v['im']}*i", file=out)
        if result["degenerate_rule_applied"]:
            print("  (degenerate substitution rule applied)", file=out)
    elif verb == "classpoly":
        terms = result["coefficients"]
        print(f"H_{result['d']}(x), degree {result['degree']}, certified = {result['certified']}:", file=out)
        print("  coefficients (constant first): " + " ".join(terms), file=out)
    elif verb == "scan":
        print(
            f"one class per genus, |d| <= {result['bound']}: {result['count']} discriminants, "
            f"{result['field_count']} fields, largest {result['largest']}",
            file=out,
        )
        print("  " + " ".join(str(r["d"]) for r in result["records"]), file=out)
    for w in warnings:
        print(f"warning: {w}", file=sys.stderr)


def _quad_str(t: dict) -> str:
    x = Fraction(t["x"][0], t["x"][1])
    y = Fraction(t["y"][0], t["y"][1])
    return f"({x} + {y}*sqrt({t['d_K']}))"


def run(argv: list[str], out=None) -> int:
    """Dispatch a command line; returns the exit code."""
    out = out if out is not None else sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    warnings: list[str] = []
    try:
        result = _RUNNERS[args.verb](args, warnings)
    except _USAGE_ERRORS + (ValueError,) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SingK3Error as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 3
    if args.json:
        envelope = {
            "schema_version": SCHEMA_VERSION,
            "command": {
                "verb": args.verb,
                "arguments": {
                    k: v for k, v in sorted(vars(args).items()) if k not in ("verb", "json")
                },
            },
            "result": result,
            "warnings": warnings,
        }
        print(json.dumps(envelope), file=out)
    else:
        _render_text(args.verb, result, warnings, out)
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))
