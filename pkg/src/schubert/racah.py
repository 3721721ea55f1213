"""Exact evaluation of the alternating binomial sum

    R(k, n, T) = sum_i (-1)^i C(k,i) C(k+i,i) C(n,i) C(n+i,i) / (C(T-1,i) C(T+i,i))

together with the lattice scans used to test the bound |R| <= 1, the
Pfaff-Saalschutz closed form at n = T-1, and the harmonic-number
inequality.

Single evaluations (``racah_exact``, ``racah_real``) are direct Fraction
sums. Scans go through ``_Kernel``, which puts every term over one common
integer denominator so that each lattice point costs one integer dot
product and a single gcd. Tests compare the two routes.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence

from schubert.errors import DomainError

Point = tuple


def _check_domain(k: int, n: int, T: int):
    if T < 1 or not (0 <= k <= T - 1 and 0 <= n <= T - 1):
        raise DomainError(f"need 0 <= k, n <= T-1 with T >= 1, got k={k}, n={n}, T={T}")


def racah_exact(k: int, n: int, T: int) -> Fraction:
    _check_domain(k, n, T)
    total = Fraction(0)
    for i in range(min(k, n) + 1):
        num = math.comb(k, i) * math.comb(k + i, i) * math.comb(n, i) * math.comb(n + i, i)
        den = math.comb(T - 1, i) * math.comb(T + i, i)
        total += Fraction(-num if i % 2 else num, den)
    return total


def gbinom(x: Fraction, i: int) -> Fraction:
    """Generalized binomial x(x-1)...(x-i+1)/i!."""
    out = Fraction(1)
    for j in range(i):
        out *= x - j
    return out / math.factorial(i)


def racah_real(k, n, T: int) -> Fraction:
    """The same sum at rational k, n, taken over i = 0..T-1 with generalized binomials."""
    if T < 1:
        raise DomainError(f"T must be positive, got {T}")
    k, n = Fraction(k), Fraction(n)
    total = Fraction(0)
    for i in range(T):
        num = gbinom(k, i) * gbinom(k + i, i) * gbinom(n, i) * gbinom(n + i, i)
        if num:
            den = math.comb(T - 1, i) * math.comb(T + i, i)
            total += -num / den if i % 2 else num / den
    return total


def pfaff_saalschutz_lhs(k: int, T: int) -> Fraction:
    if T < 1 or k < 0:
        raise DomainError(f"need T >= 1 and k >= 0, got k={k}, T={T}")
    total = Fraction(0)
    for i in range(k + 1):
        term = Fraction(T * math.comb(k, i) * math.comb(k + i, i), T + i)
        total += -term if i % 2 else term
    return total


def pfaff_saalschutz_rhs(k: int, T: int) -> Fraction:
    """(1-T)(2-T)...(k-T) / ((1+T)(2+T)...(k+T))"""
    if T < 1 or k < 0:
        raise DomainError(f"need T >= 1 and k >= 0, got k={k}, T={T}")
    num = math.prod(j - T for j in range(1, k + 1))
    den = math.prod(j + T for j in range(1, k + 1))
    return Fraction(num, den)


def harmonic(k: int) -> Fraction:
    if k <= 0:
        raise DomainError(f"harmonic number needs k >= 1, got {k}")
    return sum((Fraction(1, j) for j in range(1, k + 1)), Fraction(0))


# -- scan kernel ---------------------------------------------------------------


class _Kernel:
    """Common-denominator form of the sum for fixed T and node denominator q.

    A node x = p/q contributes a_i(x) = C(x,i) C(x+i,i), the product of the
    2i consecutive factors x-i+1 .. x+i divided by i!^2. With q = 1 the
    a_i are the integers C(k,i) C(k+i,i); otherwise the integer numerators
    are kept and q^{2i} i!^2 moves into the denominator. ``general`` selects
    the second form even for q = 1, which negative nodes require.
    """

    def __init__(self, T: int, q: int = 1, general: bool = False):
        self.T, self.q = T, q
        self.general = general or q != 1
        dens = []
        for i in range(T):
            d = math.comb(T - 1, i) * math.comb(T + i, i)
            if self.general:
                d *= (q ** (2 * i) * math.factorial(i) ** 2) ** 2
            dens.append(d)
        self.lcm = math.lcm(*dens)
        self.weights = [self.lcm // d for d in dens]

    def coefficients(self, p: int) -> list[int]:
        q = self.q
        if not self.general:
            if p < 0:
                raise DomainError(f"integer kernel needs a non-negative node, got {p}")
            return [math.comb(p, i) * math.comb(p + i, i) for i in range(self.T)]
        out = [1]
        acc = 1
        for i in range(1, self.T):
            acc *= (p + i * q) * (p - (i - 1) * q)
            out.append(acc)
        return out

    def row(self, p: int, others: Sequence[int]) -> list[Fraction]:
        """Values at (p/q, o/q) for each o in ``others``."""
        b = [(-c if i % 2 else c) * w for i, (c, w) in enumerate(zip(self.coefficients(p), self.weights))]
        out = []
        for o in others:
            num = sum(x * y for x, y in zip(b, self.coefficients(o)) if x)
            out.append(Fraction(num, self.lcm))
        return out


@lru_cache(maxsize=8)
def _kernel(T: int, q: int, general: bool = False) -> _Kernel:
    return _Kernel(T, q, general)


def _rows_task(T: int, q: int, general: bool, ps: Sequence[int], others: Sequence[int]) -> list[list[Fraction]]:
    kern = _kernel(T, q, general)
    return [kern.row(p, others) for p in ps]


def _compute_rows(T: int, q: int, ps: Sequence[int], others: Sequence[int], jobs: int = 1,
                  general: bool = False) -> list[list[Fraction]]:
    """Row-major value grid; chunks are merged back in input order."""
    ps = list(ps)
    others = list(others)
    if jobs <= 1 or len(ps) < 2:
        return _rows_task(T, q, general, ps, others)
    nchunks = min(len(ps), jobs * 4)
    chunks = [ps[c::nchunks] for c in range(nchunks)]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        results = list(pool.map(_rows_task, [T] * nchunks, [q] * nchunks, [general] * nchunks,
                                chunks, [others] * nchunks))
    by_p = {}
    for chunk, rows in zip(chunks, results):
        by_p.update(zip(chunk, rows))
    return [by_p[p] for p in ps]


def racah_row(n: int, T: int) -> list[Fraction]:
    """[R(k, n, T) for k = 0..T-1]."""
    _check_domain(0, n, T)
    return _kernel(T, 1).row(n, range(T))


def default_jobs() -> int:
    env = os.environ.get("SCHUBERT_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


# -- conjecture scan -----------------------------------------------------------


@dataclass
class ScanReport:
    T: int
    max_abs: Fraction
    argmax: Point
    min_val: Fraction
    argmin: Point
    violations: list = field(default_factory=list)
    values: list = field(default_factory=list, repr=False)

    @property
    def holds(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "T": self.T,
            "max_abs": str(self.max_abs),
            "argmax": list(self.argmax),
            "min_val": str(self.min_val),
            "argmin": list(self.argmin),
            "violations": [[k, n, str(v)] for k, n, v in self.violations],
        }

    @classmethod
    def from_json(cls, data: dict) -> ScanReport:
        return cls(
            T=data["T"],
            max_abs=Fraction(data["max_abs"]),
            argmax=tuple(data["argmax"]),
            min_val=Fraction(data["min_val"]),
            argmin=tuple(data["argmin"]),
            violations=[(k, n, Fraction(v)) for k, n, v in data["violations"]],
        )


def conjecture_scan(T: int, jobs: int = 1) -> ScanReport:
    """R(k, n, T) on the whole lattice 0 <= k, n <= T-1, row-major (k outer)."""
    if T < 1:
        raise DomainError(f"T must be positive, got {T}")
    values = _compute_rows(T, 1, range(T), range(T), jobs)
    max_abs, argmax = Fraction(-1), None
    min_val, argmin = None, None
    violations = []
    for k, row in enumerate(values):
        for n, v in enumerate(row):
            if abs(v) > max_abs:
                max_abs, argmax = abs(v), (k, n)
            if min_val is None or v < min_val:
                min_val, argmin = v, (k, n)
            if abs(v) > 1:
                violations.append((k, n, v))
    return ScanReport(T, max_abs, argmax, min_val, argmin, violations, values)


class GridScan(NamedTuple):
    max_abs: Fraction
    arg: tuple
    value: Fraction
    points: int


def grid_nodes(step, lo, hi) -> list[Fraction]:
    step, lo, hi = Fraction(step), Fraction(lo), Fraction(hi)
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    if lo > hi:
        raise DomainError(f"empty range [{lo}, {hi}]")
    count = math.floor((hi - lo) / step) + 1
    return [lo + t * step for t in range(count)]


def real_grid_scan(T: int, step, lo, hi, jobs: int = 1) -> GridScan:
    """Largest |R(x, y, T)| over the square grid lo, lo+step, ... <= hi (first hit in row-major order)."""
    if T < 1:
        raise DomainError(f"T must be positive, got {T}")
    nodes = grid_nodes(step, lo, hi)
    q = math.lcm(*(x.denominator for x in nodes))
    ps = [int(x * q) for x in nodes]
    values = _compute_rows(T, q, ps, ps, jobs, general=True)
    best = GridScan(Fraction(-1), None, None, 0)
    for a, row in enumerate(values):
        for b, v in enumerate(row):
            if abs(v) > best.max_abs:
                best = GridScan(abs(v), (nodes[a], nodes[b]), v, 0)
    return best._replace(points=len(nodes) ** 2)


# -- harmonic-number inequality ------------------------------------------------


class HodgeCheck(NamedTuple):
    holds: bool
    lhs: Fraction
    rhs: Fraction

    @property
    def relation(self) -> str:
        if self.lhs < self.rhs:
            return "<"
        return "=" if self.lhs == self.rhs else ">"


def _hodge_from_row(row: Sequence[Fraction], T: int, H: Sequence[Fraction]) -> HodgeCheck:
    lhs = Fraction(0)
    for k in range(1, T):
        t = row[k] * H[k]
        lhs += t if k % 2 else -t
    rhs = sum(H[1:T], Fraction(0))
    return HodgeCheck(lhs < rhs, lhs, rhs)


def _harmonics(upto: int) -> list[Fraction]:
    H = [Fraction(0)]
    for k in range(1, upto + 1):
        H.append(H[-1] + Fraction(1, k))
    return H


def hodge_inequality_check(n: int, T: int) -> HodgeCheck:
    """Compare sum_{k=1}^{T-1} (-1)^{k+1} R(k,n,T) H_k against sum_{k=1}^{T-1} H_k."""
    if T < 2:
        raise DomainError(f"T must be at least 2, got {T}")
    _check_domain(0, n, T)
    return _hodge_from_row(racah_row(n, T), T, _harmonics(T - 1))


def hodge_scan(T: int, jobs: int = 1) -> list[HodgeCheck]:
    """hodge_inequality_check for every n = 0..T-1, sharing one value grid."""
    if T < 2:
        raise DomainError(f"T must be at least 2, got {T}")
    values = _compute_rows(T, 1, range(T), range(T), jobs)
    H = _harmonics(T - 1)
    return [_hodge_from_row(values[n], T, H) for n in range(T)]


def pfaff_saalschutz_table(kmax: int, tmax: int) -> list[tuple[int, int, Fraction, Fraction, Fraction]]:
    """(k, T, lhs, rhs, R(k, T-1, T)) for 1 <= T <= tmax and 0 <= k <= min(kmax, T-1)."""
    out = []
    for T in range(1, tmax + 1):
        row = racah_row(T - 1, T)
        for k in range(min(kmax, T - 1) + 1):
            out.append((k, T, pfaff_saalschutz_lhs(k, T), pfaff_saalschutz_rhs(k, T), row[k]))
    return out


def format_fraction(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def decimal_string(x: Fraction, digits: int = 12) -> str:
    """Display-only decimal, correctly rounded to ``digits`` places (ties away from zero)."""
    scaled = abs(x) * 10 ** digits
    q, r = divmod(scaled.numerator, scaled.denominator)
    if 2 * r >= scaled.denominator:
        q += 1
    sign = "-" if x < 0 and q else ""
    s = str(q).rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"
