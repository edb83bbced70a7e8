"""Command-line front end: ``torusjump <subcommand> ...``.

Exit codes: 0 when every checked property passes, 1 when some property fails,
2 on usage, input or resource errors (nothing is printed to stdout in that case).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .caps import Caps
from .chaincx import (FreeComplex, GroupPresentation, dumps, fox_complex, koszul_torus, load,
                      surface, tensor_product, twist, wedge)
from .errors import TorusJumpError
from .galois import GaloisField
from .groebner import Ideal
from .jumploci import JumpLocusSet, jump_loci
from .ring import QQ, ZZ, CoefficientDomain
from .verify import (DEFAULT_PRIMES, IndexingMode, betti_bounds, duality_check, oracle_check,
                     verify_propagation)

NOTE = "generators are those of the saturated jumping ideals; varieties, not ideals, are verified"


class UsageError(Exception):
    pass


# ---------------------------------------------------------------- helpers

def _caps(args) -> Caps:
    caps = Caps.from_env()
    if args.max_degree is not None:
        caps = caps.override(f"max_degree={args.max_degree}")
    if args.max_basis is not None:
        caps = caps.override(f"max_basis={args.max_basis}")
    return caps


def _load_input(args) -> FreeComplex:
    c = load(args.input)
    if args.coeff:
        K = CoefficientDomain.parse(args.coeff)
        if K == ZZ and c.coeff != ZZ:
            raise UsageError("cannot lift a complex to integer coefficients")
        c = c.with_coeff(K)
    return c


def _emit(args, text_lines, payload) -> str:
    if args.format == "json":
        return json.dumps(payload, indent=2) + "\n"
    return "\n".join(text_lines) + "\n"


def _parse_int_list(text: str):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


# ---------------------------------------------------------------- generate

_KINDS = ("torus", "wedge", "surface", "fox", "tensor", "twist")


def _generate(spec: str, coeff: CoefficientDomain, tensor_mode: str) -> FreeComplex:
    kind, sep, arg = spec.partition(":")
    if not sep or kind not in _KINDS:
        raise UsageError(f"bad kind {spec!r}; use one of " + ", ".join(f"{k}:..." for k in _KINDS))
    if kind in ("torus", "wedge", "surface"):
        try:
            k = int(arg)
        except ValueError:
            raise UsageError(f"{kind} needs an integer, got {arg!r}") from None
        if k < 1:
            raise UsageError(f"{kind} needs a positive integer")
        return {"torus": koszul_torus, "wedge": wedge, "surface": surface}[kind](k, coeff)
    if kind == "fox":
        obj = json.loads(Path(arg).read_text())
        return fox_complex(GroupPresentation.from_json(obj), coeff)
    if kind == "tensor":
        parts = arg.split(",")
        if len(parts) != 2:
            raise UsageError("tensor needs two operands: tensor:<a>,<b>")
        a, b = (_operand(p, coeff, tensor_mode) for p in parts)
        return tensor_product(a, b, tensor_mode)
    src, sep, lam = arg.partition(",")
    if not sep:
        raise UsageError("twist needs a complex and a character: twist:<file>,<l1>,<l2>,...")
    c = _operand(src, coeff, tensor_mode)
    try:
        values = [Fraction(x) for x in lam.split(",")]
    except ValueError:
        raise UsageError(f"bad character {lam!r}") from None
    values = [int(v) if v.denominator == 1 else v for v in values]
    if any(isinstance(v, Fraction) for v in values) and c.coeff == ZZ:
        c = c.with_coeff(QQ)
    return twist(c, values)


def _operand(text, coeff, tensor_mode):
    if text.split(":", 1)[0] in _KINDS and ":" in text:
        return _generate(text, coeff, tensor_mode)
    c = load(text)
    return c if c.coeff == coeff or coeff is None else c.with_coeff(coeff)


def cmd_generate(args) -> tuple[int, str]:
    coeff = CoefficientDomain.parse(args.coeff or "zz")
    c = _generate(args.kind, coeff, args.tensor_mode)
    text = dumps(c)
    if args.output:
        Path(args.output).write_text(text)
        return 0, ""
    return 0, text


# ---------------------------------------------------------------- jumps

def _loci_lines(l: JumpLocusSet) -> list[str]:
    c = l.complex
    lines = [f"jump loci over {c.coeff}, {c.num_vars} variables, degrees {c.lo}..{c.hi}",
             f"euler characteristic: {c.euler_characteristic()}",
             f"note: {NOTE}"]
    lines += [f"note: {n}" for n in l.notes]
    for i in sorted(l.records):
        r = l.records[i]
        if r.whole_torus:
            flag = "whole torus"
        elif r.empty:
            flag = "empty"
        else:
            flag = f"dim {r.dim.dim}, codim {r.dim.codim}"
        lines.append(f"V^{i}: {flag}; ranks d^{i - 1} = {r.rank_prev}, d^{i} = {r.rank_next}, "
                     f"F^{i} = {r.rank_module}")
        gens = [str(g) for g in r.generators()]
        lines.append("  generators: " + (", ".join(gens) if gens else "0"))
    return lines


def _loci_payload(l: JumpLocusSet) -> dict:
    d = l.to_dict()
    d["note"] = NOTE
    return d


def cmd_jumps(args) -> tuple[int, str]:
    c = _load_input(args)
    l = jump_loci(c, _caps(args))
    return 0, _emit(args, _loci_lines(l), _loci_payload(l))


# ---------------------------------------------------------------- verify-propagation

def _load_components(path, ring):
    obj = json.loads(Path(path).read_text())
    if isinstance(obj, dict):
        obj = obj.get("components", [])
    if not isinstance(obj, list) or not all(isinstance(x, list) for x in obj):
        raise UsageError("components file must be a list of generator lists")
    return [Ideal(ring, [ring.parse(s) for s in gens]) for gens in obj]


def _property_lines(props) -> list[str]:
    lines = []
    for name, p in props.items():
        extra = ""
        if p.reason:
            extra = f" ({p.reason})"
        elif p.witness is not None:
            extra = f" witness {json.dumps(p.witness)}"
        lines.append(f"  ({name}) {p.status}{extra}")
    return lines


def cmd_verify_propagation(args) -> tuple[int, str]:
    c = _load_input(args)
    caps = _caps(args)
    l = jump_loci(c, caps)
    try:
        mode = IndexingMode.parse(args.mode)
        mode.top(l.complex)
    except ValueError as e:
        raise UsageError(str(e)) from None
    comps = _load_components(args.components, l.ring) if args.components else None
    report = verify_propagation(l, mode, comps)
    lines = [f"propagation check, mode {mode}, over {l.complex.coeff}"]
    lines += _property_lines(report.properties)
    ok = report.passed
    if args.n is not None:
        bounds = betti_bounds(l, args.n, args.r, mode)
        report.extra["betti_bounds"] = {"n": args.n, "r": args.r, "betti": bounds["betti"],
                                        "checks": {k: v.to_dict()
                                                   for k, v in bounds["checks"].items()}}
        b = ", ".join(f"b_{k} = {v}" for k, v in bounds["betti"].items())
        lines.append(f"betti bounds, n = {args.n}, r = {args.r}: {b}")
        lines += _property_lines(bounds["checks"])
        ok = ok and bounds["passed"]
    lines.append("result: " + ("pass" if ok else "fail"))
    payload = report.to_dict()
    payload["passed"] = ok
    return (0 if ok else 1), _emit(args, lines, payload)


# ---------------------------------------------------------------- abelian-duality

def cmd_abelian_duality(args) -> tuple[int, str]:
    c = load(args.input)
    if args.coeff and CoefficientDomain.parse(args.coeff) != ZZ:
        raise UsageError("abelian-duality works over ZZ; drop --coeff or use --coeff zz")
    if c.coeff != ZZ:
        raise UsageError(f"abelian-duality needs a complex over ZZ, got {c.coeff}")
    if args.n is None:
        raise UsageError("abelian-duality needs --n")
    primes = _parse_int_list(args.primes) if args.primes else list(DEFAULT_PRIMES)
    v = duality_check(c, args.n, primes, full=not args.partial,
                      auto_primes=not args.no_auto_primes, caps=_caps(args))
    ok = v.positive and v.cross_check_passed
    lines = [f"verdict: {v.label}"]
    if v.witness:
        lines.append(f"witness: field {v.witness['field']}, degree {v.witness['degree']}"
                     f" ({v.reason})")
    lines.append("primes tested: " + ", ".join(map(str, v.primes_tested)))
    if v.auto_primes:
        lines.append("auto-added primes: " + ", ".join(map(str, v.auto_primes)))
    for k, chk in v.cross_check.items():
        if "passed" in chk:
            lines.append(f"top-cohomology cross-check over {k}: "
                         + ("pass" if chk["passed"] else f"fail {chk['degrees']}"))
        else:
            lines.append("top-cohomology cross-check: not applicable (negative verdict)")
    lines.append(f"caveat: {v.caveat}")
    return (0 if ok else 1), _emit(args, lines, v.to_dict())


# ---------------------------------------------------------------- oracle

def _parse_points(text: str, c: FreeComplex, ext: int | None):
    pts = []
    field = None
    if ext is not None:
        if c.coeff.kind != "Fp":
            raise UsageError("--ext needs a complex over F_p (use --coeff fp:<p>)")
        field = GaloisField(c.coeff.p, ext)
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        coords = [x.strip() for x in chunk.split(",")]
        if len(coords) != c.num_vars:
            raise UsageError(f"point {chunk!r} needs {c.num_vars} coordinates")
        if field is not None:
            pts.append(tuple(field.parse(x) for x in coords))
        else:
            try:
                vals = [Fraction(x) for x in coords]
            except ValueError:
                raise UsageError(f"bad coordinate in {chunk!r}") from None
            pts.append(tuple(int(v) if v.denominator == 1 else v for v in vals))
    return pts


def cmd_oracle(args) -> tuple[int, str]:
    c = _load_input(args)
    caps = _caps(args)
    l = jump_loci(c, caps)
    fc = l.complex
    points = _parse_points(args.points, fc, args.ext) if args.points else None
    res = oracle_check(fc, l, points, count=args.samples, seed=args.seed, caps=caps)
    degs = list(fc.degrees)
    lines = [f"fiber oracle over {fc.coeff}, degrees {fc.lo}..{fc.hi}, seed {args.seed}",
             "point | field | betti | member of V^i"]
    for row in res.rows:
        betti = " ".join(f"{i}:{b}" for i, b in zip(degs, row["betti"]))
        mem = " ".join(f"{i}:{'y' if m else 'n'}" for i, m in zip(degs, row["member"]))
        lines.append(f"({', '.join(row['point'])}) | {row['field']} | {betti} | {mem}")
    s = res.summary()
    lines.append(f"points tested: {s['points_tested']}, mismatches: {s['mismatches']}, "
                 f"euler failures: {s['euler_failures']}")
    return (0 if res.passed else 1), _emit(args, lines, res.to_dict())


# ---------------------------------------------------------------- parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--coeff", help="coefficient domain: qq, zz or fp:<p>")
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--max-degree", type=int, help="cap on polynomial degrees")
    common.add_argument("--max-basis", type=int, help="cap on Groebner basis size")

    p = argparse.ArgumentParser(prog="torusjump",
                                description="Cohomology jump loci of free complexes over Laurent rings.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", parents=[common], help="write an example complex as JSON")
    g.add_argument("kind", help="torus:N | wedge:k | surface:g | fox:<file> | tensor:<a>,<b> | "
                                "twist:<file>,<l1>,...")
    g.add_argument("--tensor-mode", choices=("same", "concat"), default="concat")
    g.add_argument("-o", "--output", help="write to this file instead of stdout")
    g.set_defaults(func=cmd_generate)

    j = sub.add_parser("jumps", parents=[common], help="compute the jump loci V^i")
    j.add_argument("input")
    j.set_defaults(func=cmd_jumps)

    v = sub.add_parser("verify-propagation", parents=[common],
                       help="check the propagation properties of the loci")
    v.add_argument("input")
    v.add_argument("--mode", default="perverse", help="perverse | space:<n>")
    v.add_argument("--components", help="JSON list of generator lists (top-locus components)")
    v.add_argument("--n", type=int, help="dimension for the Betti-bound checks")
    v.add_argument("--r", type=int, default=0, help="semi-smallness defect (default 0)")
    v.set_defaults(func=cmd_verify_propagation)

    a = sub.add_parser("abelian-duality", parents=[common],
                       help="decide abelian duality over QQ and F_p for listed primes")
    a.add_argument("input")
    a.add_argument("--n", type=int, help="the candidate dimension")
    a.add_argument("--primes", help="comma-separated primes (default 2,3,5,7,11,13)")
    a.add_argument("--partial", action="store_true",
                   help="ring variables are a quotient of the abelianization")
    a.add_argument("--no-auto-primes", action="store_true",
                   help="do not add primes suggested by Smith normal forms")
    a.set_defaults(func=cmd_abelian_duality)

    o = sub.add_parser("oracle", parents=[common], help="compare loci with fiber cohomology")
    o.add_argument("input")
    o.add_argument("--points", help="explicit points, e.g. '1,1;2,3' or '1/2,3'")
    o.add_argument("--ext", type=int, help="read --points in F_{p^r} with generator 'a'")
    o.add_argument("--seed", type=int, default=0)
    o.add_argument("--samples", type=int, default=50)
    o.set_defaults(func=cmd_oracle)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = args.func(args)
    except (UsageError, TorusJumpError, ValueError, OSError, json.JSONDecodeError) as e:
        print(f"torusjump: error: {e}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
