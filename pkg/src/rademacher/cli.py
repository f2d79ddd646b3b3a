"""Command-line entry point: ``rademacher <command> ...``.

Exit codes: 0 success, 1 usage error, 2 cross-check disagreement, 3 I/O error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import re
import sys

EXIT_OK, EXIT_USAGE, EXIT_DISAGREE, EXIT_IO = 0, 1, 2, 3

_SCI = re.compile(r"^(\d+)[eE](\d+)$")


def parse_int(text: str) -> int:
    """Nonnegative integer, plain or as ``<d>e<K>`` meaning d * 10**K exactly."""
    s = text.strip().replace("_", "")
    m = _SCI.match(s)
    if m:
        return int(m.group(1)) * 10 ** int(m.group(2))
    if not s.isdigit():
        raise argparse.ArgumentTypeError(f"not a nonnegative integer: {text!r}")
    return int(s)


def _positive(text: str) -> int:
    v = parse_int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


def _open_out(path):
    if path in (None, "-"):
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w", encoding="ascii")


def cmd_pn(args) -> int:
    from .hrr import partition_hrr

    if hasattr(sys, "set_int_max_str_digits"):
        sys.set_int_max_str_digits(0)
    res = partition_hrr(args.n)
    value = res.value
    with _open_out(args.out) as out:
        if args.mod is not None:
            body = str(value % args.mod)
            digits = None
        else:
            digits = str(value)
            body = None
        if args.json:
            rec = {"n": args.n}
            if args.mod is not None:
                rec.update(mod=args.mod, residue=int(body))
            else:
                rec["digits"] = len(digits)
                if args.head or args.tail:
                    if args.head:
                        rec["head"] = digits[: args.head]
                    if args.tail:
                        rec["tail"] = digits[-args.tail :]
                else:
                    rec["value"] = digits
            if args.stats:
                rec.update(terms=res.terms_used, residual=res.residual, seconds=res.timings.get("total", 0.0))
            print(json.dumps(rec), file=out)
            return EXIT_OK
        if body is None:
            if args.head or args.tail:
                parts = []
                if args.head:
                    parts.append(digits[: args.head])
                if args.tail:
                    parts.append(digits[-args.tail :])
                body = " ... ".join(parts)
                if args.digits:
                    body += f", {len(digits)} digits"
            elif args.digits:
                body = f"{len(digits)} digits"
            else:
                body = digits
        print(body, file=out)
        if args.stats:
            print(f"N={res.terms_used} residual={res.residual:.3e} time={res.timings.get('total', 0.0):.3f}s", file=out)
    return EXIT_OK


def cmd_vector(args) -> int:
    from .oracle import partition_vector

    vec = partition_vector(args.n, args.mod)
    with _open_out(args.out) as out:
        out.write("\n".join(map(str, vec.values)) + "\n")
    return EXIT_OK


def cmd_ak(args) -> int:
    from .expsum import ak_factor, ak_naive, ak_selberg
    from .numctx import NumericContext

    ctx = NumericContext(args.prec)
    fac = ak_factor(args.k, args.n)
    vals = {
        "naive": ak_naive(args.k, args.n, ctx),
        "selberg": ak_selberg(args.k, args.n, ctx),
        "factor": fac.evaluate(ctx),
    }
    c = ctx.mpfr
    scale = max([c.abs(v) for v in vals.values()] + [1])
    tol = c.mul_2exp(scale, -40)
    agree = all(c.abs(c.sub(v, vals["factor"])) <= tol for v in vals.values())
    if args.json:
        print(json.dumps({"k": args.k, "n": args.n, "factorization": str(fac), "agree": agree,
                          **{k: float(v) for k, v in vals.items()}}))
    else:
        for name, v in vals.items():
            print(f"{name:8s} {float(v):.17g}")
        print(f"factor   {fac}")
        print("agree" if agree else "DISAGREE")
    return EXIT_OK if agree else EXIT_DISAGREE


def cmd_bench(args) -> int:
    from .hrr import partition_hrr

    partition_hrr(1000)  # loads the compiled tail outside the timings
    rows = []
    for n in args.n:
        res = partition_hrr(n)
        total = res.timings.get("total", 0.0)
        frac = res.timings.get("first_term", 0.0) / total if total else 0.0
        rows.append({"n": n, "seconds": total, "terms": res.terms_used, "first_term_fraction": frac})
    if args.json:
        for r in rows:
            print(json.dumps(r))
    else:
        print(f"{'n':>16} {'seconds':>12} {'N':>10} {'first':>7}")
        for r in rows:
            print(f"{r['n']:>16} {r['seconds']:>12.4f} {r['terms']:>10} {r['first_term_fraction']:>7.3f}")
    return EXIT_OK


def cmd_cong_search(args) -> int:
    from .congruence import search

    n = 0
    for t in search(args.m, args.lmin, args.lmax, args.out, jobs=args.jobs):
        print(t.to_json() if args.json else str(t))
        n += 1
    print(f"# {n} tuples", file=sys.stderr)
    return EXIT_OK


def cmd_cong_verify(args) -> int:
    from .congruence import CongruenceProgression, verify_progression

    ok = verify_progression(CongruenceProgression(args.A, args.B, args.m), args.kmax)
    if args.json:
        print(json.dumps({"A": args.A, "B": args.B, "m": args.m, "kmax": args.kmax, "holds": ok}))
    else:
        print("holds" if ok else "fails")
    return EXIT_OK if ok else EXIT_DISAGREE


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="rademacher", description="Isolated values of the partition function p(n).")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pn = sub.add_parser("pn", help="p(n) from the Rademacher series")
    pn.add_argument("n", type=parse_int)
    pn.add_argument("--head", type=_positive, default=0, help="leading digits only")
    pn.add_argument("--tail", type=_positive, default=0, help="trailing digits only")
    pn.add_argument("--digits", action="store_true", help="report the digit count")
    pn.add_argument("--mod", type=_positive, help="print p(n) mod this")
    pn.add_argument("--json", action="store_true")
    pn.add_argument("--stats", action="store_true", help="also print N, residual and wall time")
    pn.add_argument("--out", help="write to this file instead of stdout")
    pn.set_defaults(func=cmd_pn)

    vec = sub.add_parser("vector", help="p(0), ..., p(n) by Euler's recurrence")
    vec.add_argument("n", type=parse_int)
    vec.add_argument("--mod", type=_positive)
    vec.add_argument("--out")
    vec.set_defaults(func=cmd_vector)

    ak = sub.add_parser("ak", help="A_k(n) by all three methods")
    ak.add_argument("k", type=_positive)
    ak.add_argument("n", type=parse_int)
    ak.add_argument("--prec", type=int, default=128, help="working precision in bits")
    ak.add_argument("--json", action="store_true")
    ak.set_defaults(func=cmd_ak)

    bench = sub.add_parser("bench", help="time p(n) for several n")
    bench.add_argument("n", type=parse_int, nargs="+")
    bench.add_argument("--json", action="store_true")
    bench.set_defaults(func=cmd_bench)

    cong = sub.add_parser("congruence", help="Weaver congruence search and checks")
    csub = cong.add_subparsers(dest="action", required=True, parser_class=_Parser)
    cs = csub.add_parser("search")
    cs.add_argument("--m", type=int, required=True)
    cs.add_argument("--lmin", type=parse_int, required=True)
    cs.add_argument("--lmax", type=parse_int, required=True)
    cs.add_argument("--out", required=True, help="checkpoint file (appended to)")
    cs.add_argument("--jobs", type=_positive, default=1)
    cs.add_argument("--json", action="store_true")
    cs.set_defaults(func=cmd_cong_search)
    cv = csub.add_parser("verify")
    cv.add_argument("--A", type=parse_int, required=True)
    cv.add_argument("--B", type=parse_int, required=True)
    cv.add_argument("--m", type=_positive, required=True)
    cv.add_argument("--kmax", type=parse_int, required=True)
    cv.add_argument("--json", action="store_true")
    cv.set_defaults(func=cmd_cong_verify)
    return ap


def main(argv: list[str] | None = None) -> int:
    from .numctx import DomainError
    from .oracle import ResourceError

    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, ResourceError, ValueError) as exc:
        print(f"rademacher: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"rademacher: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
