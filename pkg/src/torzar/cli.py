"""Command line surface: instance files in, reports out.

This is the only module that touches disk or terminal.  Instance files are
JSON with dim/rays/cones and named classes whose rational values are
strings ("p/q" or "p", never floats).  Reports are JSON records with a
stable instance digest; identical (instance, command, seed) inputs produce
byte-identical reports.

Exit codes: 0 every verdict holds, 1 some check fails, 2 usage or parse
error.
"""

import argparse
import hashlib
import json
import os
import re
import sys
from fractions import Fraction

from .fans import (
    FanValidationError,
    NotConvexError,
    NotPsefError,
    ToricClass,
    convex_minorant,
    newton_polytope,
    validate_fan,
)
from .positivity import (
    NotBigError,
    NotNefError,
    h0,
    h0_restricted,
    is_big,
    is_d_big,
    is_d_psef,
    is_nef,
    is_psef,
    pair,
    positive_product,
    restricted_volume,
    slope,
    vol,
    zariski,
)
from .verifier import (
    DEFAULT_SUITE_SIZES,
    RandomSpec,
    check_corollary_c,
    check_diskant,
    check_corollary_e,
    check_fujita_sections,
    check_integral_formula,
    check_morse,
    check_theorem_a,
    check_theorem_d,
    random_instance,
    run_all_suites,
)

SCHEMA_VERSION = 1


class CliError(Exception):
    """Usage or parse problem; mapped to exit code 2 with an error kind."""

    def __init__(self, kind, message):
        super().__init__(message)
        self.kind = kind


_RATIONAL_RE = re.compile(r"^-?\d+(/\d+)?$")


def parse_rational(text):
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise CliError("bad-rational", f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(x):
    return str(Fraction(x))


def parse_instance(path):
    """Validated (fan, named classes) from an instance file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = json.load(fh)
    except FileNotFoundError:
        raise CliError("io", f"no such instance file: {path}")
    except json.JSONDecodeError as e:
        raise CliError("malformed-json", f"{path}: {e}")
    for key in ("dim", "rays", "cones", "classes"):
        if key not in raw:
            raise CliError("schema", f"{path}: missing field {key!r}")
    dim = raw["dim"]
    rays = raw["rays"]
    cones = raw["cones"]
    for ci, c in enumerate(cones):
        for i in c:
            if not isinstance(i, int) or not 0 <= i < len(rays):
                raise CliError(
                    "schema", f"cone #{ci} has ray index {i} out of range")
    for r in rays:
        if len(r) != dim:
            raise CliError("schema", f"ray {r} does not have dim {dim}")
    try:
        fan = validate_fan(rays, cones)
    except FanValidationError as e:
        raise CliError("fan-validation", str(e))
    classes = {}
    for name, values in raw["classes"].items():
        if len(values) != len(rays):
            raise CliError(
                "schema",
                f"class {name!r} has {len(values)} values for {len(rays)} rays")
        classes[name] = ToricClass(fan, [parse_rational(v) for v in values])
    return fan, classes


def canonical_instance(raw):
    """Canonical JSON text of an instance structure (digest input)."""
    canon = {
        "dim": raw["dim"],
        "rays": [list(map(int, r)) for r in raw["rays"]],
        "cones": [sorted(map(int, c)) for c in raw["cones"]],
        "classes": {k: [str(Fraction(v)) for v in vs]
                    for k, vs in sorted(raw["classes"].items())},
    }
    return json.dumps(canon, sort_keys=True, separators=(",", ":"))


def emit_instance(fan, classes):
    return {
        "dim": fan.dim,
        "rays": [list(r) for r in fan.rays],
        "cones": [list(c) for c in fan.cones],
        "classes": {name: [format_rational(v) for v in cls.values]
                    for name, cls in sorted(classes.items())},
    }


def instance_digest(path):
    with open(path, "r", encoding="utf-8") as fh:
        raw = json.load(fh)
    return "sha256:" + hashlib.sha256(
        canonical_instance(raw).encode()).hexdigest()


_TERM_RE = re.compile(
    r"\s*([+-]?)\s*(\d+(?:/\d+)?)?\s*([A-Za-z_][A-Za-z0-9_]*)")


def parse_class_expression(expr, classes):
    """Rational linear combinations of named classes: 2H-E, H+1/2E, ..."""
    expr = expr.strip()
    pos = 0
    result = None
    while pos < len(expr):
        m = _TERM_RE.match(expr, pos)
        if not m:
            raise CliError("class-expression",
                           f"cannot parse {expr!r} at position {pos}")
        sign, coef, name = m.groups()
        if name not in classes:
            raise CliError("unknown-class", f"unknown class {name!r}")
        c = Fraction(coef) if coef else Fraction(1)
        if sign == "-":
            c = -c
        term = c * classes[name]
        result = term if result is None else result + term
        pos = m.end()
    if result is None:
        raise CliError("class-expression", f"empty class expression {expr!r}")
    return result


def parse_ray(arg, fan):
    """A ray given as an index or a literal vector like 1,1 or [1,1]."""
    text = arg.strip().strip("[]() ")
    if "," in text:
        try:
            vec = tuple(int(x) for x in text.split(","))
        except ValueError:
            raise CliError("ray", f"cannot parse ray {arg!r}")
        try:
            return fan.ray_index(vec)
        except KeyError:
            raise CliError("ray", f"{vec} is not a ray of the fan")
    try:
        idx = int(text)
    except ValueError:
        raise CliError("ray", f"cannot parse ray {arg!r}")
    if not 0 <= idx < len(fan.rays):
        raise CliError("ray", f"ray index {idx} out of range")
    return idx


# -- report assembly ----------------------------------------------------


def _report(args, records, status):
    return {
        "schema": SCHEMA_VERSION,
        "command": args._argv,
        "instance_digest": (instance_digest(args.instance)
                            if getattr(args, "instance", None) else None),
        "records": records,
        "status": status,
    }


def _write(args, report):
    if args.format == "table":
        lines = []
        for rec in report["records"]:
            parts = [f"{k}={v}" for k, v in sorted(rec.items())
                     if v is not None and k not in ("reports",)]
            lines.append("  ".join(parts))
        lines.append(f"status: {report['status']}")
        text = "\n".join(lines) + "\n"
    else:
        text = json.dumps(report, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _finish(args, records, all_hold):
    status = "ok" if all_hold else "fail"
    _write(args, _report(args, records, status))
    return 0 if all_hold else 1


# -- command handlers ----------------------------------------------------


def _cmd_validate(args):
    parse_instance(args.instance)
    return _finish(args, [{"check": "validate", "verdict": "holds"}], True)


def _cmd_newton(args):
    fan, classes = parse_instance(args.instance)
    cls = parse_class_expression(args.cls, classes)
    nw = newton_polytope(cls)
    verts = nw.vertices()
    rec = {
        "check": "newton",
        "empty": not verts,
        "vertices": [[format_rational(x) for x in v] for v in verts],
        "halfspaces": [{"normal": list(h.normal),
                        "bound": format_rational(h.bound)}
                       for h in nw.halfspaces],
    }
    return _finish(args, [rec], True)


def _cmd_zariski(args):
    fan, classes = parse_instance(args.instance)
    cls = parse_class_expression(args.cls, classes)
    try:
        z = zariski(cls)
    except NotPsefError as e:
        return _finish(args, [{"check": "zariski", "verdict": "fails",
                               "error": str(e)}], False)
    rec = {
        "check": "zariski",
        "positive_support": [format_rational(z.positive.support(r))
                             for r in fan.rays],
        "negative": [format_rational(c) for c in z.negative],
        "verdict": "holds",
    }
    return _finish(args, [rec], True)


def _cmd_value(name, compute):
    def handler(args):
        fan, classes = parse_instance(args.instance)
        cls = parse_class_expression(args.cls, classes)
        value = compute(cls)
        return _finish(args, [{"check": name, "value": str(value)}], True)
    return handler


def _cmd_product(args):
    fan, classes = parse_instance(args.instance)
    factors = [parse_class_expression(e, classes) for e in args.exprs]
    value = positive_product(*factors)
    return _finish(args, [{"check": "product", "value": format_rational(value)}],
                   True)


def _cmd_pair(args):
    fan, classes = parse_instance(args.instance)
    alphas = [parse_class_expression(e, classes) for e in args.exprs]
    gamma = parse_class_expression(args.cls, classes)
    value = pair(alphas, gamma)
    return _finish(args, [{"check": "pair", "value": format_rational(value)}],
                   True)


def _cmd_slope(args):
    fan, classes = parse_instance(args.instance)
    a = parse_class_expression(args.a, classes)
    b = parse_class_expression(args.b, classes)
    value = slope(a, b)
    return _finish(args, [{"check": "slope", "value": format_rational(value)}],
                   True)


def _cmd_predicate(name, pred):
    def handler(args):
        fan, classes = parse_instance(args.instance)
        cls = parse_class_expression(args.cls, classes)
        value = pred(cls)
        return _finish(args, [{"check": name, "value": bool(value)}], True)
    return handler


def _cmd_ray_predicate(name, pred):
    def handler(args):
        fan, classes = parse_instance(args.instance)
        cls = parse_class_expression(args.cls, classes)
        idx = parse_ray(args.ray, fan)
        value = pred(cls, idx)
        rec = {"check": name, "ray": list(fan.rays[idx])}
        rec["value"] = (format_rational(value)
                        if isinstance(value, Fraction) else bool(value))
        return _finish(args, [rec], True)
    return handler


def _cmd_h0(args):
    fan, classes = parse_instance(args.instance)
    cls = parse_class_expression(args.cls, classes)
    counts = {str(k): h0(cls, k) for k in range(1, args.kmax + 1)}
    rec = {"check": "h0", "counts": counts}
    if args.ray is not None:
        idx = parse_ray(args.ray, fan)
        rec["restricted"] = {str(k): h0_restricted(cls, idx, k)
                             for k in range(1, args.kmax + 1)}
    return _finish(args, [rec], True)


def _cmd_thm_a(args):
    fan, classes = parse_instance(args.instance)
    alpha = parse_class_expression(args.a, classes)
    gamma = parse_class_expression(args.b, classes)
    rep = check_theorem_a(alpha, gamma)
    return _finish(args, [rep.to_record()], rep.holds())


def _cmd_cor_c(args):
    fan, classes = parse_instance(args.instance)
    alpha = parse_class_expression(args.cls, classes)
    idx = parse_ray(args.ray, fan)
    rep = check_corollary_c(alpha, idx)
    return _finish(args, [rep.to_record()], rep.holds())


def _cmd_two_class_check(checker, with_precision=False):
    def handler(args):
        fan, classes = parse_instance(args.instance)
        a = parse_class_expression(args.a, classes)
        b = parse_class_expression(args.b, classes)
        if with_precision:
            rep = checker(a, b, args.precision)
        else:
            rep = checker(a, b)
        return _finish(args, [rep.to_record()], rep.holds())
    return handler


def _cmd_kt(args):
    fan, classes = parse_instance(args.instance)
    factors = [parse_class_expression(e, classes) for e in args.exprs]
    n = fan.dim
    if len(factors) != n:
        raise CliError("usage", f"kt needs {n} classes, got {len(factors)}")
    prod = positive_product(*factors)
    lhs = prod ** n
    rhs = Fraction(1)
    for f in factors:
        rhs *= vol(f)
    ok = lhs >= rhs
    rec = {"check": "kt", "lhs": format_rational(lhs),
           "rhs": format_rational(rhs),
           "verdict": "holds" if ok else "fails", "mode": "exact"}
    return _finish(args, [rec], ok)


def _cmd_ortho(args):
    fan, classes = parse_instance(args.instance)
    cls = parse_class_expression(args.cls, classes)
    n = fan.dim
    lhs = pair([cls] * (n - 1), cls)
    rhs = vol(cls)
    ok = lhs == rhs
    rec = {"check": "ortho", "lhs": format_rational(lhs),
           "rhs": format_rational(rhs),
           "verdict": "holds-with-equality" if ok else "fails",
           "mode": "exact"}
    return _finish(args, [rec], ok)


def _cmd_integral(args):
    fan, classes = parse_instance(args.instance)
    a = parse_class_expression(args.a, classes)
    b = parse_class_expression(args.b, classes)
    rep = check_integral_formula(a, b, precision=min(args.precision, 12))
    return _finish(args, [rep.to_record()], rep.holds())


def _cmd_fujita_sections(args):
    fan, classes = parse_instance(args.instance)
    cls = parse_class_expression(args.cls, classes)
    ray = parse_ray(args.ray, fan) if args.ray is not None else None
    rep = check_fujita_sections(cls, args.kmax, ray=ray)
    return _finish(args, [rep.to_record()], rep.holds())


def _cmd_suite(args):
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("TORZAR_SEED", "0"))
    sizes = None
    if args.quick:
        sizes = {k: max(2, v // 20) for k, v in DEFAULT_SUITE_SIZES.items()}
    results = run_all_suites(seed, sizes)
    records = []
    all_hold = True
    for r in results:
        ok = r["failures"] == 0
        all_hold = all_hold and ok
        records.append({"check": r["suite"], "dim": r.get("dim"),
                        "count": r["count"], "failures": r["failures"],
                        "seed": seed,
                        "verdict": "holds" if ok else "fails"})
    return _finish(args, records, all_hold)


def _cmd_gen(args):
    fan, classes = random_instance(RandomSpec(
        seed=args.seed or 0, dim=args.dim,
        subdivisions=args.subdivisions))
    named = {f"C{i}": c for i, c in enumerate(classes)}
    data = emit_instance(fan, named)
    text = json.dumps(data, sort_keys=True, indent=2) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _add_common(p, instance=True):
    if instance:
        p.add_argument("-i", "--instance", required=True,
                       help="instance JSON file")
    p.add_argument("--format", choices=("json", "table"), default="json")
    p.add_argument("--out", default=None, help="write the report here")


def build_parser():
    top = argparse.ArgumentParser(
        prog="torzar",
        description="Exact positivity invariants of toric divisor classes.")
    sub = top.add_subparsers(dest="command", required=True)

    def add(name, handler, **kw):
        p = sub.add_parser(name, **kw)
        p.set_defaults(handler=handler)
        return p

    p = add("validate", _cmd_validate, help="validate an instance file")
    _add_common(p)

    for name, fn in (("newton", _cmd_newton), ("zariski", _cmd_zariski)):
        p = add(name, fn)
        _add_common(p)
        p.add_argument("-c", "--class", dest="cls", required=True)

    p = add("vol", _cmd_value("vol", vol))
    _add_common(p)
    p.add_argument("-c", "--class", dest="cls", required=True)

    p = add("product", _cmd_product, help="positive intersection product")
    _add_common(p)
    p.add_argument("exprs", nargs="+", metavar="CLASS")

    p = add("pair", _cmd_pair, help="pair psef classes against -c")
    _add_common(p)
    p.add_argument("exprs", nargs="+", metavar="CLASS")
    p.add_argument("-c", "--class", dest="cls", required=True)

    p = add("slope", _cmd_slope)
    _add_common(p)
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)

    for name, pred in (("psef", is_psef), ("big", is_big), ("nef", is_nef)):
        p = add(name, _cmd_predicate(name, pred))
        _add_common(p)
        p.add_argument("-c", "--class", dest="cls", required=True)

    for name, pred in (("dpsef", is_d_psef), ("dbig", is_d_big),
                       ("restricted", restricted_volume)):
        p = add(name, _cmd_ray_predicate(name, pred))
        _add_common(p)
        p.add_argument("-c", "--class", dest="cls", required=True)
        p.add_argument("--ray", required=True,
                       help="ray index or literal vector like 1,1")

    p = add("h0", _cmd_h0, help="lattice point counts of dilates")
    _add_common(p)
    p.add_argument("-c", "--class", dest="cls", required=True)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--ray", default=None)

    p = add("thm-a", _cmd_thm_a, help="volume derivative check")
    _add_common(p)
    p.add_argument("-a", required=True, help="big base class")
    p.add_argument("-b", required=True, help="direction class")

    p = add("cor-c", _cmd_cor_c, help="derivative toward a ray divisor")
    _add_common(p)
    p.add_argument("-c", "--class", dest="cls", required=True)
    p.add_argument("--ray", required=True)

    p = add("morse", _cmd_two_class_check(check_morse))
    _add_common(p)
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)

    p = add("kt", _cmd_kt, help="power-form product inequality")
    _add_common(p)
    p.add_argument("exprs", nargs="+", metavar="CLASS")

    p = add("ortho", _cmd_ortho, help="pairing a class against itself")
    _add_common(p)
    p.add_argument("-c", "--class", dest="cls", required=True)

    p = add("diskant", _cmd_two_class_check(check_diskant, True))
    _add_common(p)
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)
    p.add_argument("--precision", type=int, default=60)

    p = add("thm-d", _cmd_two_class_check(check_theorem_d))
    _add_common(p)
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)

    p = add("cor-e", _cmd_two_class_check(check_corollary_e, True))
    _add_common(p)
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)
    p.add_argument("--precision", type=int, default=60)

    p = add("integral", _cmd_integral)
    _add_common(p)
    p.add_argument("-a", required=True)
    p.add_argument("-b", required=True)
    p.add_argument("--precision", type=int, default=9)

    p = add("fujita-sections", _cmd_fujita_sections)
    _add_common(p)
    p.add_argument("-c", "--class", dest="cls", required=True)
    p.add_argument("--kmax", type=int, default=8)
    p.add_argument("--ray", default=None)

    p = add("suite", _cmd_suite, help="run every randomized suite")
    _add_common(p, instance=False)
    p.add_argument("--seed", type=int, default=None,
                   help="default 0, or the TORZAR_SEED environment variable")
    p.add_argument("--quick", action="store_true",
                   help="1/20 of the acceptance sizes")

    p = add("gen", _cmd_gen, help="write a seeded random instance")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--subdivisions", type=int, default=0)
    p.add_argument("--out", default=None)
    return top


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    args._argv = argv
    try:
        return args.handler(args)
    except CliError as e:
        print(f"error[{e.kind}]: {e}", file=sys.stderr)
        return 2
    except (NotPsefError, NotBigError, NotNefError, NotConvexError,
            FanValidationError) as e:
        print(f"error[domain]: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
