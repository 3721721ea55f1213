"""Polynomial representatives of Schubert classes.

giambelli_det and schur_pfaffian build the classical determinant and
Pfaffian; theta applies the raising-operator product for k-strict
partitions. schur_alternant is an independent check on the determinant
side: it evaluates a Schur polynomial as a ratio of alternants.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from schubert.cring import CPolynomial
from schubert.errors import DomainError, ShapeError
from schubert.partitions import KStrictPartition, Partition
from schubert.raising import OperatorProduct, expand, pair_entry

SquareRingMatrix = Sequence[Sequence[CPolynomial]]


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(tuple(lam))


def det(matrix: SquareRingMatrix, truncation: Optional[int] = None) -> CPolynomial:
    """Cofactor expansion along rows, memoized on the set of used columns."""
    d = len(matrix)
    if any(len(row) != d for row in matrix):
        raise ShapeError("determinant of a non-square matrix")
    if d == 0:
        return CPolynomial.one(truncation)

    @lru_cache(maxsize=None)
    def minor(row: int, used: int) -> CPolynomial:
        if row == d:
            return CPolynomial.one(truncation)
        total = CPolynomial.zero(truncation)
        sign = 1
        for col in range(d):
            if used >> col & 1:
                continue
            entry = matrix[row][col]
            if entry:
                term = entry * minor(row + 1, used | 1 << col)
                total = total + term if sign > 0 else total - term
            sign = -sign
        return total

    return minor(0, 0)


def pfaffian(matrix: SquareRingMatrix) -> CPolynomial:
    """Pfaffian by expansion along the first remaining row."""
    d = len(matrix)
    if any(len(row) != d for row in matrix):
        raise ShapeError("Pfaffian of a non-square matrix")
    if d % 2:
        raise ShapeError(f"Pfaffian needs even size, got {d}")
    for i in range(d):
        if matrix[i][i]:
            raise ShapeError(f"diagonal entry ({i + 1},{i + 1}) is nonzero")
        for j in range(i + 1, d):
            if matrix[i][j] != -matrix[j][i]:
                raise ShapeError(f"entries ({i + 1},{j + 1}) and ({j + 1},{i + 1}) are not opposite")
    if d == 0:
        return CPolynomial.one()
    truncation = matrix[0][1].truncation

    @lru_cache(maxsize=None)
    def pf(rest: tuple) -> CPolynomial:
        if not rest:
            return CPolynomial.one(truncation)
        first, others = rest[0], rest[1:]
        total = CPolynomial.zero(truncation)
        for pos, j in enumerate(others):
            entry = matrix[first][j]
            if not entry:
                continue
            term = entry * pf(others[:pos] + others[pos + 1:])
            # pos 0 is the second remaining index, which carries a plus sign
            total = total - term if pos % 2 else total + term
        return total

    return pf(tuple(range(d)))


def giambelli_det(lam, truncation: Optional[int] = None) -> CPolynomial:
    """det(c_{lam_i + j - i}) with c_0 = 1 and c_p = 0 for p < 0."""
    lam = _as_partition(lam)
    return giambelli_det_padded(lam.parts, truncation)


def giambelli_det_padded(parts: Sequence[int], truncation: Optional[int] = None) -> CPolynomial:
    """Same determinant on an explicit (possibly zero-padded) sequence of parts."""
    d = len(parts)
    mat = [[CPolynomial.c(parts[i] + j - i, truncation) for j in range(d)] for i in range(d)]
    return det(mat, truncation)


def schur_pfaffian_matrix(lam, truncation: Optional[int] = None) -> list[list[CPolynomial]]:
    lam = _as_partition(lam)
    if not lam.is_strict():
        raise DomainError(f"{lam} is not strict")
    parts = list(lam.parts)
    if len(parts) % 2:
        parts.append(0)
    d = len(parts)
    zero = CPolynomial.zero(truncation)
    mat = [[zero] * d for _ in range(d)]
    for i in range(d):
        for j in range(i + 1, d):
            e = pair_entry(parts[i], parts[j], truncation)
            mat[i][j] = e
            mat[j][i] = -e
    return mat


def schur_pfaffian(lam, truncation: Optional[int] = None) -> CPolynomial:
    """Pf of the pair entries (1-R_12)/(1+R_12) c_(lam_i, lam_j), odd lengths padded by a zero."""
    mat = schur_pfaffian_matrix(lam, truncation)
    if not mat:
        return CPolynomial.one(truncation)
    return pfaffian(mat)


def theta_operator(lam: KStrictPartition) -> OperatorProduct:
    parts, k = lam.parts, lam.k
    ell = len(parts)
    minus, inv = [], []
    for j in range(2, ell + 1):
        for i in range(1, j):
            minus.append((i, j))
            if parts[i - 1] + parts[j - 1] > 2 * k + j - i:
                inv.append((i, j))
    return OperatorProduct.build(ell, minus, inv)


def theta(lam, k: Optional[int] = None, truncation: Optional[int] = None) -> CPolynomial:
    """Theta polynomial of a k-strict partition.

    Accepts a KStrictPartition, or a Partition together with ``k``. The
    sequence length is the number of nonzero parts.
    """
    if not isinstance(lam, KStrictPartition):
        if k is None:
            raise DomainError("theta needs k for a plain partition")
        lam = KStrictPartition(_as_partition(lam), k)
    elif k is not None and k != lam.k:
        raise DomainError(f"conflicting k: {k} vs {lam.k}")
    return expand(theta_operator(lam), lam.parts, truncation)


def _frac_det(rows: list[list[Fraction]]) -> Fraction:
    a = [list(r) for r in rows]
    n = len(a)
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            result = -result
        p = a[c][c]
        result *= p
        for r in range(c + 1, n):
            f = a[r][c] / p
            if f:
                for cc in range(c, n):
                    a[r][cc] -= f * a[c][cc]
    return result


def schur_alternant(lam, x: Sequence[Fraction | int]) -> Fraction:
    """s_lam(x) = det(x_i^{lam_j + N - j}) / det(x_i^{N - j})."""
    lam = _as_partition(lam)
    x = [Fraction(v) for v in x]
    n = len(x)
    if n < len(lam):
        raise DomainError(f"{lam} has more parts than the {n} variables")
    if len(set(x)) != n:
        raise ZeroDivisionError("alternant denominator vanishes: repeated variables")
    parts = lam.padded(n)
    num = _frac_det([[xi ** (parts[j] + n - 1 - j) for j in range(n)] for xi in x])
    den = _frac_det([[xi ** (n - 1 - j) for j in range(n)] for xi in x])
    return num / den
