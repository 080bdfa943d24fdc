"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 not a twist, 3 inconclusive match,
4 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from contextlib import nullcontext
from typing import Sequence

from .arith import is_prime
from .classify import (CSV_HEADER, ClassificationError, EulerRecord, Inconclusive, NotATwist,
                       classify_prime, default_workers, estimate_z, identify_triple,
                       igusa_twist_check)
from .groups import GroupError, ZVector, candidate_table
from .jacobian import CurveSextic, JacobianError, check_good, naive_lpoly
from .moments import empirical_compare, histogram, theoretical_moments
from .tables import FORMATTERS

EXIT_OK, EXIT_USAGE, EXIT_NOT_TWIST, EXIT_INCONCLUSIVE, EXIT_INVARIANT = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _curve_arg(text: str) -> tuple[int, ...]:
    try:
        c = tuple(int(s) for s in text.replace(" ", "").split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad coefficient list {text!r}") from None
    if len(c) != 7:
        raise argparse.ArgumentTypeError("give exactly seven coefficients c0,...,c6")
    return c


def _z_arg(text: str) -> tuple[int, ...]:
    try:
        return ZVector.from_flat(int(s) for s in text.split(",")).flat()
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _emit(obj, fmt: str) -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2) + "\n")
    else:
        for k, v in obj.items():
            sys.stdout.write(f"{k}: {v}\n")


def _curve(args) -> CurveSextic:
    try:
        return CurveSextic.from_coeffs(args.curve, args.d)
    except ValueError as exc:
        raise SystemExit(_fail(EXIT_USAGE, str(exc)))


def _fail(code: int, msg: str) -> int:
    sys.stderr.write(f"error: {msg}\n")
    return code


def _require_twist(curve: CurveSextic, d: int) -> None:
    try:
        ok = igusa_twist_check(curve, d)
    except ValueError as exc:
        raise NotATwist(str(exc)) from None
    if not ok:
        raise NotATwist(f"curve {curve} is not a twist of C0_{d}")


# -- subcommands -----------------------------------------------------------------

def cmd_tables(args) -> int:
    sys.stdout.write(FORMATTERS[args.format](candidate_table(args.d)))
    return EXIT_OK


def _identify(args, sink=None):
    curve = _curve(args)
    _require_twist(curve, args.d)
    est = estimate_z(curve, args.d, args.prime_bound, args.seed, args.workers, sink)
    return curve, est, identify_triple(est, args.d)


def cmd_classify(args) -> int:
    stream = open(args.stream_csv, "w") if args.stream_csv else nullcontext()
    with stream as fh:
        sink = None
        if fh is not None:
            fh.write(CSV_HEADER + "\n")
            sink = lambda rec: fh.write(rec.csv_row() + "\n")  # noqa: E731
        curve, est, ident = _identify(args, sink)
    out = {
        "curve": list(curve.coeffs),
        "d": args.d,
        "prime_bound": args.prime_bound,
        "seed": args.seed,
        "primes_used": est.primes_used,
        "counts": est.counts,
        "z_normalized": [str(v) for v in est.normalized],
        "match": ident.record.as_dict(),
        "distance": round(ident.distance, 6),
        "runner_up": {"st_group": ident.runner_up.st_group,
                      "gal_LQ": list(ident.runner_up.group_ids[0]),
                      "distance": round(ident.runner_up_distance, 6)},
        "accepted": ident.accepted,
    }
    if args.format == "csv":
        r = ident.record
        sys.stdout.write("st_group,gal_LQ,gal_KQ,gal_LM,distance,accepted\n")
        ids = ['"<%d,%d>"' % g for g in r.group_ids]
        sys.stdout.write(f"{r.st_group},{','.join(ids)},{out['distance']},{str(ident.accepted).lower()}\n")
    elif args.format == "text":
        r = ident.record
        sys.stdout.write(f"{r.st_group}  " + "  ".join("<%d,%d>" % g for g in r.group_ids)
                         + f"  distance={out['distance']}  accepted={ident.accepted}\n")
    else:
        _emit(out, "json")
    return EXIT_OK if ident.accepted else _fail(EXIT_INCONCLUSIVE, "inconclusive match; raise --prime-bound")


def _bad_prime_reason(curve: CurveSextic, d: int, p: int) -> str | None:
    if not is_prime(p):
        return "not prime"
    if p <= 3 or p % d == 0:
        return f"must exceed 3 and be prime to d={d}"
    try:
        check_good(curve, p)
    except JacobianError as exc:
        return str(exc)
    return None


def cmd_lpoly(args) -> int:
    curve = _curve(args)
    p = args.p
    reason = _bad_prime_reason(curve, args.d, p)
    if reason is not None:
        return _fail(EXIT_USAGE, f"p={p} rejected: {reason}")
    rec = None
    if args.naive:
        a1, a2 = naive_lpoly(curve, p)
    else:
        rec = classify_prime(curve, args.d, p, args.seed)
        a1, a2 = rec.a1_hat, rec.a2_hat
    out = {"p": p, "a1_hat": a1, "a2_hat": a2}
    if rec is not None:
        out.update({"t": rec.t, "aE_hat": rec.aE_hat, "srt": list(rec.srt)})
    if args.format == "csv":
        sys.stdout.write("p,a1_hat,a2_hat\n" + f"{p},{a1},{a2}\n")
    else:
        _emit(out, args.format)
    return EXIT_OK


def _moment_lists(tab) -> dict:
    return {"M_a1": [str(v) for v in tab.m1], "M_a2": [str(v) for v in tab.m2]}


def cmd_moments(args) -> int:
    if args.z is None and args.curve is None:
        return _fail(EXIT_USAGE, "give --z or --curve")
    if args.z is not None:
        tab = theoretical_moments(args.z, args.n_max)
        out = {"z": list(args.z), "n_max": args.n_max, **_moment_lists(tab)}
    else:
        records: list[EulerRecord] = []
        curve, est, ident = _identify(args, records.append)
        z = ident.record.z
        tab = theoretical_moments(z, args.n_max)
        rep = empirical_compare(records, z, args.n_max)
        out = {
            "curve": list(curve.coeffs), "d": args.d, "prime_bound": args.prime_bound,
            "st_group": ident.record.st_group, "z": list(z.flat()), "n_max": args.n_max,
            **_moment_lists(tab),
            "empirical": {k: [round(v, 6) for v in vs] for k, vs in rep.empirical.items()},
            "deviation": {k: [round(v, 6) for v in vs] for k, vs in rep.deviation.items()},
            "ks": {k: round(v, 6) for k, v in rep.ks.items()},
        }
        if not ident.accepted:
            _emit(out, args.format if args.format != "csv" else "json")
            return _fail(EXIT_INCONCLUSIVE, "inconclusive match; moments use the nearest candidate")
    if args.format == "csv":
        sys.stdout.write("n,M_a1,M_a2\n")
        for n in range(args.n_max + 1):
            sys.stdout.write(f"{n},{tab.m1[n]},{tab.m2[n]}\n")
    else:
        _emit(out, args.format)
    return EXIT_OK


def cmd_hist(args) -> int:
    records: list[EulerRecord] = []
    _, _, ident = _identify(args, records.append)
    h = histogram(records, args.coeff, args.bins, ident.record.z)
    sys.stdout.write(h.csv())
    return EXIT_OK if ident.accepted else _fail(EXIT_INCONCLUSIVE, "inconclusive match")


def cmd_scan(args) -> int:
    from .search import search_box

    bounds = args.bounds if args.bounds is not None else (args.bound,) * 7
    found = search_box(bounds, args.d)
    if args.format == "json":
        _emit({"d": args.d, "bounds": list(bounds), "twists": [list(c) for c in found]}, "json")
    else:
        if args.format == "csv":
            sys.stdout.write("c0,c1,c2,c3,c4,c5,c6\n")
        for c in found:
            sys.stdout.write(",".join(map(str, c)) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    curve = _curve(args)
    try:
        ok = igusa_twist_check(curve, args.d)
    except ValueError as exc:
        return _fail(EXIT_NOT_TWIST, str(exc))
    if args.format == "json":
        _emit({"curve": list(curve.coeffs), "d": args.d, "twist": ok}, "json")
    else:
        sys.stdout.write(("true" if ok else "false") + "\n")
    return EXIT_OK if ok else EXIT_NOT_TWIST


# -- parser --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="satotwist", description="Sato-Tate groups of twists of y^2=x^5-x and y^2=x^6+1")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, curve=True, curve_required=True, scan_opts=False, fmt="json"):
        p.add_argument("--d", type=int, choices=(2, 3), required=True)
        p.add_argument("--format", choices=("json", "csv", "text"), default=fmt)
        if curve:
            p.add_argument("--curve", type=_curve_arg, required=curve_required,
                           help="coefficients c0,...,c6 of y^2 = c0 + c1 x + ... + c6 x^6")
        p.add_argument("--seed", type=int, default=0)
        if scan_opts:
            p.add_argument("--prime-bound", type=int, default=1 << 16)
            p.add_argument("--workers", type=int, default=None,
                           help="worker processes (default from SATOTWIST_WORKERS, else 1)")

    p = sub.add_parser("tables", help="candidate Galois triples and z-vectors")
    common(p, curve=False, fmt="text")
    p.set_defaults(func=cmd_tables)

    p = sub.add_parser("classify", help="identify the Sato-Tate group of a twist")
    common(p, scan_opts=True)
    p.add_argument("--stream-csv", metavar="PATH", help="write per-prime records here")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("lpoly", help="integer Euler factor coefficients at one prime")
    common(p)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--naive", action="store_true", help="count points over F_p and F_p^2 instead")
    p.set_defaults(func=cmd_lpoly)

    p = sub.add_parser("moments", help="exact moments from a z-vector or a curve")
    common(p, curve_required=False, scan_opts=True)
    p.add_argument("--z", type=_z_arg, help="14 comma-separated z-vector entries")
    p.add_argument("--n-max", type=int, default=4)
    p.set_defaults(func=cmd_moments)

    p = sub.add_parser("hist", help="histogram of normalized a1 or a2 as CSV")
    common(p, scan_opts=True, fmt="csv")
    p.add_argument("--coeff", choices=("a1", "a2"), default="a1")
    p.add_argument("--bins", type=int, default=32)
    p.set_defaults(func=cmd_hist)

    p = sub.add_parser("scan", help="search a coefficient box for twists")
    common(p, curve=False, fmt="text")
    p.add_argument("--bound", type=int, default=1, help="same bound for every coefficient")
    p.add_argument("--bounds", type=_curve_arg, help="per-coefficient bounds B0,...,B6")
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("verify", help="Igusa test: is the curve a twist of C0_d?")
    common(p, fmt="text")
    p.set_defaults(func=cmd_verify)
    return ap


_VALUE_FLAGS = ("--curve", "--z", "--bounds")


def _attach_values(argv: Sequence[str]) -> list[str]:
    """Turn '--curve -1,2,...' into '--curve=-1,2,...' so argparse does not read a flag."""
    out: list[str] = []
    it = iter(argv)
    for a in it:
        if a in _VALUE_FLAGS:
            nxt = next(it, None)
            out.append(a if nxt is None else f"{a}={nxt}")
        else:
            out.append(a)
    return out


def main(argv: Sequence[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    args = build_parser().parse_args(_attach_values(argv))
    if getattr(args, "workers", None) is None and hasattr(args, "workers"):
        args.workers = default_workers()
    if getattr(args, "prime_bound", 1 << 16) < 7:
        return _fail(EXIT_USAGE, "--prime-bound must be at least 7")
    try:
        return args.func(args)
    except NotATwist as exc:
        return _fail(EXIT_NOT_TWIST, f"not a twist: {exc}")
    except Inconclusive as exc:
        return _fail(EXIT_INCONCLUSIVE, str(exc))
    except (GroupError, ClassificationError, JacobianError) as exc:
        return _fail(EXIT_INVARIANT, f"invariant violation: {exc}")


if __name__ == "__main__":
    sys.exit(main())
