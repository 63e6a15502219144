"""Command-line interface.

Exit codes: 0 success (uniserial, all claims certified), 1 negative result
(not uniserial, or a certificate claim failed), 2 input error, 3 refusal
because the field is imperfect.
"""

import argparse
import json
import random
import sys

from . import __version__
from .constructions import build_menti, build_pedo, build_unomas
from .cyclicgen import analyze
from .errors import (
    FieldMismatchError,
    GuardExceededError,
    ImperfectFieldError,
    NonCommutingError,
    NotFiniteFieldError,
    ShapeError,
    UniserialError,
)
from .fields import ExtensionField, element_degree
from .linalg import jordan_chevalley
from .primelt import (
    degree_profile,
    find_primitive_combination,
    find_primitive_pair,
    sweep_alpha_statistics,
)
from .textio import (
    SCHEMA_VERSION,
    ParseError,
    format_matrix,
    load_json,
    parse_element,
    parse_field,
    parse_input_document,
    parse_poly,
    report_to_dict,
    report_to_text,
)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_REFUSED = 0, 1, 2, 3
DEFAULT_SEED = 20080101


def _emit(obj, as_json, text=None, out=None):
    out = out or sys.stdout
    if as_json or text is None:
        json.dump(obj, out, indent=2, default=str)
        out.write("\n")
    else:
        out.write(text + "\n")


def cmd_analyze(args):
    doc = load_json(args.input)
    F, gens, mode, opts = parse_input_document(doc)
    if args.mode:
        mode = args.mode
    report = analyze(gens, mode=mode, field=F, n=opts.get("dim"))
    d = report_to_dict(report, F)
    _emit(d, args.json, report_to_text(d))
    return EXIT_OK if report.uniserial else EXIT_NEGATIVE


def _element_list(values, K):
    out = []
    for k, s in enumerate(values):
        for part in s.split(";"):
            if part.strip():
                out.append(parse_element(part.strip(), K, where=f"element {len(out)}"))
    return out


def cmd_primitive(args):
    if args.pedo is not None:
        inst = build_pedo(args.pedo)
        d = {"schema_version": SCHEMA_VERSION, "pedo": args.pedo, "degrees": inst.degrees,
             "failing_b": inst.certificate["failing_b"], "passed": inst.certificate.passed}
        _emit(d, True)
        return EXIT_OK
    if not args.field or not args.tower or not args.elements:
        raise ParseError("primitive needs --field, --tower and --elements (or --pedo)")
    Fq = parse_field(args.field)
    if not Fq.is_finite:
        raise NotFiniteFieldError(f"{Fq} is not finite")
    p = Fq.characteristic
    from .fields import PrimeField

    base = PrimeField(p)
    f = parse_poly(args.tower, base, var=args.var)
    try:
        K = ExtensionField(p, [int(c) for c in f.coeffs], var=args.var)
    except ValueError as e:
        raise ParseError(f"tower polynomial: {e}") from None
    xs = _element_list(args.elements, K)
    q = Fq.order
    degrees = [element_degree(x, q) for x in xs]
    d = {"schema_version": SCHEMA_VERSION, "over": Fq.name, "tower": K.name,
         "elements": [K.format(x.value) for x in xs], "degrees": degrees}
    lines = [f"K = {K.name} over {Fq.name}", f"degrees: {degrees}"]
    if len(xs) >= 2:
        x, y = xs[0], xs[1]
        prof = degree_profile(degrees[0], degrees[1])
        alpha = find_primitive_pair(x, y, Fq)
        stats = sweep_alpha_statistics(x, y, Fq)
        d["profile"] = vars(prof)
        d["alpha"] = None if alpha is None else K.format(alpha.value)
        d["failing_alphas"] = [K.format(a.value) for a in stats.failing_alphas]
        d["sweep_degrees"] = {K.format(a.value): v for a, v in stats.degrees.items()}
        lines.append("profile: " + ", ".join(f"{k}={v}" for k, v in vars(prof).items()))
        lines.append(f"alpha: {d['alpha'] if alpha is not None else 'none'}")
        lines.append(f"failing alphas: {d['failing_alphas']}")
    comb = find_primitive_combination(xs, Fq)
    d["combination"] = None if comb is None else [K.format(c.value) for c in comb]
    lines.append(f"combination: {d['combination'] if comb is not None else 'none'}")
    _emit(d, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_construct(args):
    rng = random.Random(args.seed)
    if args.kind == "unomas":
        inst = build_unomas(args.q, args.A, rng=rng, max_t=args.max_t)
    elif args.kind == "pedo":
        inst = build_pedo(args.p)
    else:
        inst = build_menti(args.p, rng=rng)
    cert = dict(inst.certificate)
    cert["passed"] = inst.certificate.passed
    _emit(cert, True)
    return EXIT_OK if inst.certificate.passed else EXIT_NEGATIVE


def cmd_jc(args):
    doc = load_json(args.input)
    F, gens, _, _ = parse_input_document(doc)
    out = {"schema_version": SCHEMA_VERSION, "field": F.name, "decompositions": []}
    lines = []
    for k, M in enumerate(gens):
        jc = jordan_chevalley(M)
        out["decompositions"].append(
            {"s": format_matrix(jc.s), "n": format_matrix(jc.n), "s_poly": jc.s_poly.format()}
        )
        lines.append(f"matrix {k}: s = h(M) with h = {jc.s_poly.format()}")
        lines += ["  s: " + " ".join(r) for r in format_matrix(jc.s)]
        lines += ["  n: " + " ".join(r) for r in format_matrix(jc.n)]
    _emit(out, args.json, "\n".join(lines))
    return EXIT_OK


def build_parser():
    ap = argparse.ArgumentParser(prog="uniserial", description="Uniserial modules and primitive elements")
    ap.add_argument("--version", action="version", version=__version__)
    ap.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for all randomized steps")
    sub = ap.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="uniseriality report for commuting matrices")
    a.add_argument("-i", "--input", required=True, help="input JSON document")
    a.add_argument("--mode", choices=["associative", "lie"], default=None)
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    p = sub.add_parser("primitive", help="primitive linear combinations in GF(q^k)")
    p.add_argument("--field", help="base field, e.g. GF(2)")
    p.add_argument("--tower", help="modulus of K over the prime field, e.g. X^6+X+1")
    p.add_argument("--var", default="X")
    p.add_argument("--elements", nargs="+", help="elements of K (separate with spaces or ';')")
    p.add_argument("--pedo", type=int, choices=[2, 3], help="run the Artin-Schreier degree sweep instead")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_primitive)

    c = sub.add_parser("construct", help="build a certified construction")
    csub = c.add_subparsers(dest="kind", required=True)
    u = csub.add_parser("unomas")
    u.add_argument("--q", type=int, required=True)
    u.add_argument("--A", type=int, required=True)
    u.add_argument("--max-t", type=int, default=1000)
    for name in ("pedo", "menti"):
        s = csub.add_parser(name)
        s.add_argument("--p", type=int, required=True)
    c.set_defaults(func=cmd_construct)

    j = sub.add_parser("jc", help="Jordan-Chevalley decomposition")
    j.add_argument("-i", "--input", required=True)
    j.add_argument("--json", action="store_true")
    j.set_defaults(func=cmd_jc)
    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except ImperfectFieldError as e:
        stage = getattr(e, "stage", None)
        where = f" (stage: {stage})" if stage else ""
        print(f"refused{where}: {e}", file=sys.stderr)
        return EXIT_REFUSED
    except (ParseError, ShapeError, NonCommutingError, FieldMismatchError, NotFiniteFieldError,
            GuardExceededError, ValueError) as e:
        stage = getattr(e, "stage", None)
        where = f" (stage: {stage})" if stage else ""
        print(f"input error{where}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except UniserialError as e:
        print(f"error (stage: {getattr(e, 'stage', '?')}): {e}", file=sys.stderr)
        return EXIT_NEGATIVE


if __name__ == "__main__":
    sys.exit(main())
