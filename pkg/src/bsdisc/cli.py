"""Command-line frontend.

    bsdisc disc 5 17 --mode check
    bsdisc table 29 32768 --format csv
    bsdisc htable 3000 --assert-bound
    bsdisc classify 29
    bsdisc classify --scan 1000000 --format csv --out scan.csv
    bsdisc density 1000000 --cache .cache
    bsdisc verify all

Exit status: 0 success, 1 verification failure, 2 usage error.
Worker processes for scans come from $BSDISC_THREADS (default: CPU count).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from pathlib import Path

from . import __version__
from .discriminator import disc_brute, disc_closed, disc_table
from .indices import h_universal, in_P
from .modarith import is_prime
from .primeclass import (CSV_HEADER, cached_classify_scan, classify, density_report,
                         rows_to_csv)
from .sequence import make_spec
from .verify import SUITES, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

CLASS_LABELS = (
    "+-1 mod 28, Artin, not Mirimanoff",
    "not +-1 mod 28, Artin, not Mirimanoff",
    "+-1 mod 28, Artin, Mirimanoff, not Fermat",
    "not +-1 mod 28, Artin, Mirimanoff, not Fermat",
    "+-1 mod 28, Artin, Mirimanoff, Fermat",
    "not +-1 mod 28, Artin, Mirimanoff, Fermat",
    "+-1 mod 28, not Artin",
    "not +-1 mod 28, not Artin",
)


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _json(header, rows) -> str:
    return json.dumps([dict(zip(header, row)) for row in rows], indent=2) + "\n"


def _render(fmt: str, header, rows, plain: str) -> str:
    if fmt == "csv":
        return _csv(header, rows)
    if fmt == "json":
        return _json(header, rows)
    return plain


def _range(lo: int, hi: int) -> str:
    return str(lo) if lo == hi else f"{lo}-{hi}"


def _prime_q(parser: argparse.ArgumentParser, q: int) -> None:
    if q < 5 or not is_prime(q):
        parser.error(f"q must be a prime >= 5, got {q}")


def cmd_disc(args, parser) -> tuple[str, int]:
    _prime_q(parser, args.q)
    if args.n < 1:
        parser.error("n must be >= 1")
    spec = make_spec(args.q)
    status = EXIT_OK
    if args.mode == "brute":
        value, verdict = disc_brute(spec, args.n), ""
    else:
        value = disc_closed(spec, args.n).value
        verdict = ""
        if args.mode == "check":
            brute = disc_brute(spec, args.n)
            verdict = "OK" if brute == value else f"MISMATCH brute={brute}"
            status = EXIT_OK if brute == value else EXIT_FAIL
    header = ("q", "n", "value", "mode", "verdict")
    row = (args.q, args.n, value, args.mode, verdict)
    plain = f"{value} {verdict}".rstrip() + "\n"
    return _render(args.format, header, [row], plain), status


def cmd_table(args, parser) -> tuple[str, int]:
    _prime_q(parser, args.q)
    if args.n_max < 1:
        parser.error("n_max must be >= 1")
    table = disc_table(make_spec(args.q), args.n_max)
    plain = "n | D_q(n)\n" + "".join(f"{_range(lo, hi)} | {v}\n" for lo, hi, v in table.rows)
    return _render(args.format, ("n_low", "n_high", "value"), table.rows, plain), EXIT_OK


def cmd_htable(args, parser) -> tuple[str, int]:
    rows = [(p, h_universal(p)) for p in range(5, args.p_max + 1) if is_prime(p) and in_P(p)]
    status = EXIT_OK
    notes = ""
    if args.assert_bound:
        bad = [(p, h) for p, h in rows if 31 <= p < 3000 and 2 * h > p + 1]
        if bad:
            status = EXIT_FAIL
            notes = "".join(f"bound violated: h({p}) = {h} > ({p}+1)/2\n" for p, h in bad)
    plain = "p | h(p)\n" + "".join(f"{p} | {h}\n" for p, h in rows)
    out = _render(args.format, ("p", "h"), rows, plain)
    if notes:
        print(notes, end="", file=sys.stderr)
    return out, status


def cmd_classify(args, parser) -> tuple[str, int]:
    if args.scan is not None:
        if args.scan < 1:
            parser.error("--scan needs a positive count")
        rows = cached_classify_scan(args.scan, cache_dir=args.cache, workers=args.workers)
        if args.format == "csv":
            return rows_to_csv(rows), EXIT_OK
        plain = "".join(" ".join(map(str, r)) + "\n" for r in rows)
        return _render(args.format, CSV_HEADER, rows, plain), EXIT_OK
    if args.q is None:
        parser.error("give a prime q or --scan N")
    _prime_q(parser, args.q)
    c = classify(args.q)
    yn = lambda b: "yes" if b else "no"  # noqa: E731
    plain = (
        f"q: {c.q}\n"
        f"artin: {yn(c.artin)}\n"
        f"fermat: {yn(c.fermat)}\n"
        f"mirimanoff: {yn(c.mirimanoff)}\n"
        f"+-1 mod 28: {yn(c.mod28_exceptional)}\n"
        f"class: {c.eight_class} ({CLASS_LABELS[c.eight_class - 1]})\n"
        f"case: {c.theorem_case.value}\n"
    )
    return _render(args.format, CSV_HEADER, [c.row()], plain), EXIT_OK


def cmd_density(args, parser) -> tuple[str, int]:
    if args.n < 1:
        parser.error("N must be >= 1")
    rows = cached_classify_scan(args.n, cache_dir=args.cache, workers=args.workers)
    rep = density_report(rows)
    table = [(i + 1, rep.counts[i], f"{rep.empirical[i]:.6f}", f"{rep.conjectural[i]:.6f}")
             for i in range(8)]
    header = ("class", "count", "empirical", "conjectural")
    plain = f"primes: {rep.prime_count}\nclass | count | empirical | conjectural\n"
    plain += "".join(" | ".join(map(str, r)) + "\n" for r in table)
    return _render(args.format, header, table, plain), EXIT_OK


def cmd_verify(args, parser) -> tuple[str, int]:
    results = run_suite(args.suite)
    rows = [(r.name, "PASS" if r.passed else "FAIL", r.checked, len(r.failures)) for r in results]
    plain = "".join(r.summary() + "\n" for r in results)
    if len(results) > 1:
        plain += ("PASS" if all(r.passed for r in results) else "FAIL") + "\n"
    status = EXIT_OK if all(r.passed for r in results) else EXIT_FAIL
    return _render(args.format, ("suite", "verdict", "checks", "failures"), rows, plain), status


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("plain", "csv", "json"), default="plain")
    common.add_argument("--out", type=Path, help="write output to FILE instead of stdout")

    parser = argparse.ArgumentParser(prog="bsdisc", description="Discriminators of u_q(j) = (3^j - q*(-1)^j)/4")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("disc", parents=[common], help="D_q(n)")
    p.add_argument("q", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--mode", choices=("closed", "brute", "check"), default="closed")
    p.set_defaults(func=cmd_disc, parser=p)

    p = sub.add_parser("table", parents=[common], help="run-length table of D_q(n)")
    p.add_argument("q", type=int)
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_table, parser=p)

    p = sub.add_parser("htable", parents=[common], help="h(p) for p in P")
    p.add_argument("p_max", type=int)
    p.add_argument("--assert-bound", action="store_true",
                   help="exit 1 unless h(p) <= (p+1)/2 for 31 <= p < 3000")
    p.set_defaults(func=cmd_htable, parser=p)

    scan_opts = argparse.ArgumentParser(add_help=False)
    scan_opts.add_argument("--cache", type=Path, help="directory for the classification CSV cache")
    scan_opts.add_argument("--workers", type=int, help="worker processes (overrides $BSDISC_THREADS)")

    p = sub.add_parser("classify", parents=[common, scan_opts], help="classify primes")
    p.add_argument("q", type=int, nargs="?")
    p.add_argument("--scan", type=int, metavar="N", help="classify the first N primes >= 5")
    p.set_defaults(func=cmd_classify, parser=p)

    p = sub.add_parser("density", parents=[common, scan_opts], help="eight-class densities")
    p.add_argument("n", type=int, metavar="N")
    p.set_defaults(func=cmd_density, parser=p)

    p = sub.add_parser("verify", parents=[common], help="run verification sweeps")
    p.add_argument("suite", choices=(*SUITES, "all"))
    p.set_defaults(func=cmd_verify, parser=p)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    text, status = args.func(args, args.parser)
    if args.out is not None:
        args.out.write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
