"""Command-line front end.

Exit codes:
  0  success
  1  unexpected internal error
  2  invalid request: condition violation, metadata-only entry, P1/P2 violation, bad flags
  3  unreadable or malformed algebra file
  4  verify-tables found a failing check
"""
from __future__ import annotations

import argparse
import sys

from . import serialize as ser
from .serialize import SCHEMA_VERSION, ParseError, dumps

EXIT_OK, EXIT_INTERNAL, EXIT_INVALID, EXIT_PARSE, EXIT_FAILED = 0, 1, 2, 3, 4

CHECK_NAMES = ("closure", "center", "commutant", "class", "summands", "prolongation",
               "propertyC", "berger", "complexify")


class Invalid(Exception):
    def __init__(self, kind: str, message: str):
        super().__init__(message)
        self.kind = kind


def _report(command: str, result, args, **extra) -> dict:
    rep = {"schema_version": SCHEMA_VERSION, "command": command, "result": ser.jsonable(result)}
    if getattr(args, "seed", None) is not None:
        rep["seed"] = args.seed
    rep.update(extra)
    if getattr(args, "approx", False):
        rep["approx"] = {"non_authoritative": True, "values": ser.approx(rep["result"])}
    return rep


def _emit(text: str, path: str | None) -> None:
    if path and path != "-":
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _error(kind: str, message: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "error": {"kind": kind, "message": message}}


# -- construct ------------------------------------------------------------------

def _params(items) -> dict:
    from .repkit.catalog import parse_param
    out = {}
    for it in items or []:
        if "=" not in it:
            raise Invalid("BadParameter", f"expected key=value, got {it!r}")
        k, v = it.split("=", 1)
        out[k.strip()] = parse_param(k.strip(), v)
    return out


def cmd_construct(args) -> int:
    from .repkit.catalog import construct_entry
    h = construct_entry(args.entry, _params(args.param))
    _emit(dumps(ser.linrep_to_dict(h)), args.out)
    return EXIT_OK


# -- check ----------------------------------------------------------------------

def _one_check(name: str, h, args):
    from .liecore import (center_basis, commutant_basis, real_class, irreducible_summands,
                          complexify_alg, decompose_direct_product)
    from .prolong import first_prolongation, berger_test
    if name == "closure":
        return {"closed": h.is_closed(), "dim": h.dim, "space_dim": h.space_dim}
    if name == "center":
        z = center_basis(h)
        out = {"dim": len(z)}
        if args.emit_bases:
            out["basis"] = z
        return out
    if name == "commutant":
        c = commutant_basis(h)
        out = {"dim": len(c)}
        if args.emit_bases:
            out["basis"] = c
        return out
    if name == "class":
        return {"real_class": real_class(h, args.seed).value}
    if name == "summands":
        summ = irreducible_summands(h, args.seed)
        return {"count": len(summ), "dims": [s.dim for s in summ],
                "schur_types": [str(getattr(s.kind, "value", s.kind)) for s in summ]}
    if name == "prolongation":
        return first_prolongation(h).to_dict(args.emit_bases)
    if name == "propertyC":
        p = first_prolongation(h)
        return {"property_C": p.property_C, "dim_h1": p.dim_h1, "dim_C_of_h": p.dim_c}
    if name == "berger":
        return berger_test(h).to_dict(args.emit_bases)
    if name == "complexify":
        hc = complexify_alg(h)
        k = len(decompose_direct_product(hc, args.seed))
        return {"factors": k, "decomposable": k > 1}
    raise Invalid("BadCheck", name)


def cmd_check(args) -> int:
    from .liecore import NotTotallyReducible, NotReductive, Undetermined
    h = ser.read_linrep(args.infile)
    names = CHECK_NAMES if not args.checks else tuple(s.strip() for s in args.checks.split(",") if s.strip())
    bad = [c for c in names if c not in CHECK_NAMES]
    if bad:
        raise Invalid("BadCheck", f"unknown checks {bad}; choose from {', '.join(CHECK_NAMES)}")
    closed = h.is_closed()
    out = {}
    for c in names:
        if c != "closure" and not closed:
            out[c] = {"status": "skipped", "reason": "generators are not closed under bracket"}
            continue
        try:
            out[c] = {"status": "ok", **_one_check(c, h, args)}
        except (NotTotallyReducible, NotReductive, Undetermined) as exc:
            out[c] = {"status": type(exc).__name__, "reason": str(exc)}
    _emit(dumps(_report("check", {"name": h.name, "checks": out}, args)), args.out)
    return EXIT_OK


# -- type2 ----------------------------------------------------------------------

def _factor_list(text: str | None) -> list:
    """``I-A:1:m=1,I-B:2a:p=2:q=1,GL1R``; params may also be written ``id(k=v;k=v)``."""
    from .type2 import GL1R, parse_factor
    from .repkit.catalog import parse_param
    if not text:
        return []
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok == GL1R or "(" in tok:
            out.append(parse_factor(tok))
            continue
        parts = tok.split(":")
        lid, params = ":".join(parts[:2]), {}
        for kv in parts[2:]:
            for item in kv.split(";"):
                if "=" not in item:
                    raise Invalid("BadFactor", f"cannot parse factor {tok!r}")
                k, v = item.split("=", 1)
                params[k.strip()] = parse_param(k.strip(), v)
        out.append((lid, params))
    return out


def _coeffs(text: str | None) -> list[str]:
    return [s.strip() for s in text.split(",")] if text else []


def cmd_type2(args) -> int:
    from .type2 import Type2Spec, complex_construction, real_construction
    from .liecore import irreducible_summands, center_basis, decompose_direct_product
    from .prolong import berger_test
    try:
        spec = Type2Spec(_factor_list(args.complex_factors), _factor_list(args.real_factors),
                         _coeffs(args.lam), _coeffs(args.mu))
    except ValueError as exc:
        if type(exc).__name__ in ("P1Violated", "P2Violated", "ConditionViolated", "MetadataOnly"):
            raise
        raise Invalid("BadSpec", str(exc)) from None
    h = real_construction(spec) if spec.q else complex_construction(spec)
    if args.out_algebra:
        ser.write_linrep(h, args.out_algebra)
    summ = irreducible_summands(h, args.seed)
    res = {"spec": spec.to_dict(), "space_dim": h.space_dim, "dim": h.dim,
           "closed": h.is_closed(), "summands": len(summ), "summand_dims": [s.dim for s in summ],
           "center_dim": len(center_basis(h)),
           "indecomposable": len(decompose_direct_product(h, args.seed, over_complex=False)) == 1}
    if args.berger:
        res["berger"] = berger_test(h).to_dict()
    _emit(dumps(_report("type2", res, args)), args.out)
    return EXIT_OK


# -- classify / verify-tables -----------------------------------------------------

def cmd_classify(args) -> int:
    from .classify import classify
    h = ser.read_linrep(args.infile)
    if not h.is_closed():
        raise ParseError("generators are not closed under bracket")
    v = classify(h, args.seed, berger=not args.no_berger)
    _emit(dumps(_report("classify", v, args)), args.out)
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    from .classify import verify_tables
    res = verify_tables(args.max_dim, args.seed, timings=args.timings, workers=args.threads)
    _emit(dumps(_report("verify-tables", res, args)), args.report)
    agg = res["aggregate"]
    print(f"passed {agg['passed']}  failed {agg['failed']}  skipped {agg['skipped']}",
          file=sys.stderr)
    return EXIT_FAILED if agg["failed"] else EXIT_OK


# -- entry point ----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="holokit", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, out=True):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--approx", action="store_true", help="add non-authoritative decimal renderings")
        if out:
            p.add_argument("--out", help="output path (default stdout)")

    p = sub.add_parser("construct", help="write the matrix model of a catalog entry")
    p.add_argument("--entry", required=True)
    p.add_argument("--param", action="append", metavar="K=V")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="run structural analyses on an algebra file")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--checks", help="comma list from: " + ",".join(CHECK_NAMES))
    p.add_argument("--emit-bases", action="store_true")
    common(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("type2", help="build a Type-II algebra from factors and coefficients")
    p.add_argument("--complex-factors")
    p.add_argument("--real-factors")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--mu")
    p.add_argument("--berger", action="store_true", help="also run the Berger test")
    p.add_argument("--out-algebra", help="write the constructed algebra file here")
    common(p)
    p.set_defaults(func=cmd_type2)

    p = sub.add_parser("classify", help="match an algebra against the lists")
    p.add_argument("--in", dest="infile", required=True)
    p.add_argument("--no-berger", action="store_true")
    common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify-tables", help="check every modeled entry up to a dimension")
    p.add_argument("--max-dim", type=int, default=12)
    p.add_argument("--report", help="report path (default stdout)")
    p.add_argument("--timings", action="store_true", help="include wall-clock seconds (not reproducible)")
    p.add_argument("--threads", type=int, default=None, help="worker processes (default HOLONOMY_THREADS or 1)")
    common(p, out=False)
    p.set_defaults(func=cmd_verify_tables)
    return ap


def main(argv=None) -> int:
    from .repkit.catalog import ConditionViolated, MetadataOnly, UnknownEntry
    from .type2 import P1Violated, P2Violated, BadEntry, DimensionTooSmall
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        sys.stdout.write(dumps(_error("ParseError", str(exc))))
        print(f"holokit: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (ConditionViolated, MetadataOnly, UnknownEntry, P1Violated, P2Violated,
            BadEntry, DimensionTooSmall, Invalid) as exc:
        kind = getattr(exc, "kind", type(exc).__name__)
        sys.stdout.write(dumps(_error(kind, str(exc))))
        print(f"holokit: {kind}: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
