"""Command line entry point.

    schubert theta --k 1 --lambda 5,3,1
    schubert racah scan --T 51 --csv r51.csv --plot r51.gp
    schubert lockers --n 1000

Exit status is 0 on success, 1 when the input is rejected by the library
(bad partition, parameters out of range, ...) and 2 for usage errors.
Error messages go to stderr as a single line starting with ``error:``.
"""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from schubert import giambelli, lockers, partitions, racah
from schubert.cring import CPolynomial
from schubert.errors import DomainError
from schubert.partitions import KStrictPartition, Partition


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _emit_poly(poly: CPolynomial, as_json: bool, out):
    if as_json:
        out.write(json.dumps(poly.to_json()) + "\n")
    else:
        out.write(str(poly) + "\n")


# -- subcommands ---------------------------------------------------------------


def cmd_theta(args, out):
    lam = KStrictPartition(Partition.parse(args.lam), args.k)
    _emit_poly(giambelli.theta(lam, truncation=args.truncate), args.json, out)


def cmd_giambelli(args, out):
    _emit_poly(giambelli.giambelli_det(Partition.parse(args.lam), args.truncate), args.json, out)


def cmd_pfaffian(args, out):
    _emit_poly(giambelli.schur_pfaffian(Partition.parse(args.lam), args.truncate), args.json, out)


def cmd_cell(args, out):
    text = Path(args.file).read_text() if args.file and args.file != "-" else sys.stdin.read()
    pset, lam = partitions.cell_of(partitions.parse_matrix(text))
    if args.json:
        out.write(json.dumps({"m": pset.m, "n": pset.n, "pivots": list(pset.indices),
                              "partition": list(lam.parts)}) + "\n")
    else:
        out.write(f"I={pset} lambda={lam}\n")


def cmd_perms(args, out):
    perms = partitions.enumerate_grassmannian_permutations(args.m, args.n)
    if args.json:
        out.write(json.dumps([list(w) for w in perms]) + "\n")
        return
    for w in perms:
        out.write(" ".join(map(str, w)) + "\n")
    out.write(f"# count {len(perms)}\n")


def cmd_lockers(args, out):
    if args.trace is not None:
        visits = lockers.trace(args.trace)
        for student, is_open in visits:
            out.write(f"student {student}: {'open' if is_open else 'closed'}\n")
        count, is_open = lockers.divisor_parity(args.trace)
        out.write(f"locker {args.trace}: {count} divisors, {'open' if is_open else 'closed'}\n")
    out.write(f"{lockers.simulate(args.n)}\n")


def _jobs(args) -> int:
    return args.jobs if args.jobs is not None else racah.default_jobs()


def cmd_racah_eval(args, out):
    if args.real:
        value = racah.racah_real(args.k, args.n, args.T)
    else:
        if args.k.denominator != 1 or args.n.denominator != 1:
            raise DomainError("k and n must be integers (pass --real for rational parameters)")
        value = racah.racah_exact(int(args.k), int(args.n), args.T)
    if args.json:
        out.write(json.dumps({"k": str(args.k), "n": str(args.n), "T": args.T,
                              "value": racah.format_fraction(value)}) + "\n")
    else:
        out.write(racah.format_fraction(value) + "\n")


def write_scan_csv(report: racah.ScanReport, stream):
    w = csv.writer(stream, lineterminator="\n")
    w.writerow(["k", "n", "numerator", "denominator", "decimal"])
    for k, row in enumerate(report.values):
        for n, v in enumerate(row):
            w.writerow([k, n, v.numerator, v.denominator, racah.decimal_string(v)])


def gnuplot_script(csv_path: str, T: int) -> str:
    return "\n".join([
        f"# R(k,n,{T}) on the lattice 0 <= k,n <= {T - 1}; values read from {csv_path}",
        "# column 5 is the rounded display value, columns 3/4 hold the exact fraction",
        "set datafile separator ','",
        "set key off",
        "set xlabel 'k'",
        "set ylabel 'n'",
        "set zlabel 'R'",
        f"set xrange [0:{T - 1}]",
        f"set yrange [0:{T - 1}]",
        "set zrange [-1.05:1.05]",
        "set ticslevel 0",
        f"splot '{csv_path}' every ::1 using 1:2:5 with points pointtype 7 pointsize 0.4",
        "pause mouse close",
        "",
    ])


def cmd_racah_scan(args, out):
    report = racah.conjecture_scan(args.T, jobs=_jobs(args))
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            write_scan_csv(report, fh)
    if args.plot:
        if not args.csv:
            raise UsageError("--plot needs --csv for the data file")
        Path(args.plot).write_text(gnuplot_script(args.csv, args.T))
    if args.json:
        out.write(json.dumps(report.to_json()) + "\n")
        return
    f = racah.format_fraction
    out.write(f"T={report.T} points={report.T ** 2}\n")
    out.write(f"max |R| = {f(report.max_abs)} at (k,n)={report.argmax}\n")
    out.write(f"min R = {f(report.min_val)} at (k,n)={report.argmin}\n")
    out.write(f"violations: {len(report.violations)}\n")
    for k, n, v in report.violations:
        out.write(f"violation k={k} n={n} R={f(v)}\n")


def cmd_racah_grid(args, out):
    res = racah.real_grid_scan(args.T, args.step, args.lo, args.hi, jobs=_jobs(args))
    x, y = res.arg
    out.write(f"T={args.T} step={args.step} range=[{args.lo},{args.hi}] points={res.points}\n")
    out.write(f"max |R| = {racah.decimal_string(res.max_abs, 6)} at (k,n)=({x},{y})\n")
    out.write(f"exact value: {racah.format_fraction(res.value)}\n")


def cmd_racah_hodge(args, out):
    tmin = args.tmin if args.tmin is not None else args.T
    f = racah.format_fraction
    total = strict = 0
    for T in range(tmin, args.T + 1):
        for n, chk in enumerate(racah.hodge_scan(T, jobs=_jobs(args))):
            total += 1
            if chk.holds:
                strict += 1
            else:
                kind = "equality" if chk.relation == "=" else "violation"
                out.write(f"{kind} T={T} n={n} lhs={f(chk.lhs)} rhs={f(chk.rhs)}\n")
    out.write(f"checked {total} cases for T in [{tmin},{args.T}]: {strict} strict, "
              f"{total - strict} not strict\n")


def cmd_racah_ps(args, out):
    rows = racah.pfaff_saalschutz_table(args.kmax, args.tmax)
    bad = [r for r in rows if not r[2] == r[3] == r[4]]
    f = racah.format_fraction
    for k, T, lhs, rhs, r in bad:
        out.write(f"mismatch k={k} T={T} lhs={f(lhs)} rhs={f(rhs)} R={f(r)}\n")
    out.write(f"checked {len(rows)} pairs (k<={args.kmax}, T<={args.tmax}): {len(bad)} mismatches\n")
    return 1 if bad else 0


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="schubert", description=__doc__.splitlines()[0])
    p.add_argument("--debug", action="store_true", help="log intermediate raising-operator states")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def poly_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--lambda", dest="lam", required=True, help="comma-separated parts, e.g. 5,3,1")
        sp.add_argument("--truncate", type=int, default=None, metavar="B")
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)
        return sp

    sp = poly_cmd("theta", cmd_theta, "theta polynomial of a k-strict partition")
    sp.add_argument("--k", type=int, required=True)
    poly_cmd("giambelli", cmd_giambelli, "Giambelli determinant det(c_{lam_i+j-i})")
    poly_cmd("pfaffian", cmd_pfaffian, "Schur Pfaffian of a strict partition")

    sp = sub.add_parser("cell", help="Schubert cell of a full-rank matrix")
    sp.add_argument("file", nargs="?", default="-", help="matrix file, one row per line (default stdin)")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_cell)

    sp = sub.add_parser("perms", help="Grassmannian permutations with descent at m")
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_perms)

    sp = sub.add_parser("lockers", help="locker puzzle")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trace", type=int, default=None, metavar="M")
    sp.set_defaults(func=cmd_lockers)

    rp = sub.add_parser("racah", help="Racah sum R(k,n,T)")
    rsub = rp.add_subparsers(dest="racah_command", required=True, parser_class=_Parser)

    def jobs_opt(sp):
        sp.add_argument("--jobs", type=int, default=None,
                        help="worker processes (default: $SCHUBERT_JOBS or CPU count)")

    sp = rsub.add_parser("eval")
    sp.add_argument("--k", type=_fraction, required=True)
    sp.add_argument("--n", type=_fraction, required=True)
    sp.add_argument("--T", type=int, required=True)
    sp.add_argument("--real", action="store_true", help="allow rational k, n")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_racah_eval)

    sp = rsub.add_parser("scan")
    sp.add_argument("--T", type=int, required=True)
    sp.add_argument("--csv", default=None)
    sp.add_argument("--plot", default=None, help="write a gnuplot script for the CSV")
    sp.add_argument("--json", action="store_true")
    jobs_opt(sp)
    sp.set_defaults(func=cmd_racah_scan)

    sp = rsub.add_parser("grid")
    sp.add_argument("--T", type=int, required=True)
    sp.add_argument("--step", type=_fraction, required=True)
    sp.add_argument("--lo", type=_fraction, required=True)
    sp.add_argument("--hi", type=_fraction, required=True)
    jobs_opt(sp)
    sp.set_defaults(func=cmd_racah_grid)

    sp = rsub.add_parser("hodge")
    sp.add_argument("--T", type=int, required=True)
    sp.add_argument("--tmin", type=int, default=None, help="also check every T from here up")
    jobs_opt(sp)
    sp.set_defaults(func=cmd_racah_hodge)

    sp = rsub.add_parser("ps")
    sp.add_argument("--kmax", type=int, required=True)
    sp.add_argument("--tmax", type=int, required=True)
    sp.set_defaults(func=cmd_racah_ps)
    return p


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as e:
        err.write(f"error: {e}\n")
        return 2
    handler = None
    if args.debug:
        handler = logging.StreamHandler(err)
        handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
        pkg_log = logging.getLogger("schubert")
        pkg_log.addHandler(handler)
        pkg_log.setLevel(logging.DEBUG)
    try:
        return args.func(args, out) or 0
    except UsageError as e:
        err.write(f"error: {e}\n")
        return 2
    except (ValueError, ArithmeticError, LookupError, OSError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else e
        err.write(f"error: {msg}\n")
        return 1
    finally:
        if handler is not None:
            logging.getLogger("schubert").removeHandler(handler)
            logging.getLogger("schubert").setLevel(logging.NOTSET)


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
