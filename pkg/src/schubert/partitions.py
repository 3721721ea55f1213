"""Partitions, pivot sets and the Schubert cells of G(m, n).

Everything user-facing is 1-based: pivot columns run over 1..n and
permutations are tuples of the values 1..n.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterator, Sequence

from schubert.errors import DomainError, RankError, SizeError

MAX_PERM_N = 12


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing sequence of non-negative integers.

    Trailing zeros are stripped on construction, so ``Partition((2, 1, 0))``
    and ``Partition((2, 1))`` compare equal.
    """

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for pos, p in enumerate(parts):
            if p < 0:
                raise DomainError(f"negative part {p} at position {pos + 1}")
            if pos and p > parts[pos - 1]:
                raise DomainError(
                    f"parts must be weakly decreasing: {parts[pos - 1]} < {p} "
                    f"at position {pos + 1}"
                )
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        object.__setattr__(self, "parts", parts)

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"5,3,1"``. The empty string and ``"0"`` give the empty partition."""
        text = text.strip()
        if not text:
            return cls(())
        parts = []
        for pos, tok in enumerate(text.split(","), start=1):
            tok = tok.strip()
            try:
                parts.append(int(tok))
            except ValueError:
                raise DomainError(f"part {pos} is not an integer: {tok!r}") from None
        return cls(tuple(parts))

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def length(self) -> int:
        return len(self.parts)

    def weight(self) -> int:
        return sum(self.parts)

    def padded(self, size: int) -> tuple[int, ...]:
        if size < len(self.parts):
            raise DomainError(f"cannot pad {self} to length {size}")
        return self.parts + (0,) * (size - len(self.parts))

    def is_strict(self) -> bool:
        return all(a > b for a, b in zip(self.parts, self.parts[1:]))

    def __str__(self):
        return "(" + ",".join(map(str, self.parts)) + ")"


def is_k_strict(lam: Partition, k: int) -> bool:
    """True when no part larger than k is repeated."""
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    big = [p for p in lam.parts if p > k]
    return len(big) == len(set(big))


@dataclass(frozen=True)
class KStrictPartition:
    partition: Partition
    k: int

    def __post_init__(self):
        if not isinstance(self.partition, Partition):
            object.__setattr__(self, "partition", Partition(tuple(self.partition)))
        if not is_k_strict(self.partition, self.k):
            raise DomainError(f"{self.partition} is not {self.k}-strict")

    @property
    def parts(self) -> tuple[int, ...]:
        return self.partition.parts


@dataclass(frozen=True)
class PivotSet:
    """Strictly increasing 1-based column indices ``i_1 < ... < i_m`` in ``[1, n]``."""

    indices: tuple[int, ...]
    n: int

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        object.__setattr__(self, "indices", idx)
        if self.n < 0:
            raise DomainError(f"ambient dimension must be non-negative, got {self.n}")
        for pos, i in enumerate(idx):
            if not 1 <= i <= self.n:
                raise DomainError(f"pivot {i} at position {pos + 1} outside [1, {self.n}]")
            if pos and i <= idx[pos - 1]:
                raise DomainError(f"pivots not strictly increasing at position {pos + 1}")

    @property
    def m(self) -> int:
        return len(self.indices)

    def __str__(self):
        return "{" + ",".join(map(str, self.indices)) + "}"


def subset_to_partition(pivots: PivotSet) -> Partition:
    m, n = pivots.m, pivots.n
    return Partition(tuple(n - m + r - i for r, i in enumerate(pivots.indices, start=1)))


def partition_to_subset(lam: Partition, m: int, n: int) -> PivotSet:
    if not 0 <= m <= n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={n}")
    if len(lam) > m or (lam.parts and lam[0] > n - m):
        raise DomainError(f"{lam} does not fit in the {m} x {n - m} box")
    parts = lam.padded(m)
    return PivotSet(tuple(n - m + r - parts[r - 1] for r in range(1, m + 1)), n)


def partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    """All partitions with at most ``rows`` parts, each at most ``cols``."""

    def rec(prefix, bound, left):
        yield Partition(tuple(prefix))
        if left == 0:
            return
        for p in range(1, bound + 1):
            prefix.append(p)
            yield from rec(prefix, p, left - 1)
            prefix.pop()

    yield from rec([], cols, rows)


def strict_partitions_in_box(rows: int, cols: int) -> Iterator[Partition]:
    for size in range(rows + 1):
        for combo in combinations(range(cols, 0, -1), size):
            yield Partition(combo)


def k_strict_partitions_in_box(k: int, rows: int, cols: int) -> Iterator[KStrictPartition]:
    for lam in partitions_in_box(rows, cols):
        if is_k_strict(lam, k):
            yield KStrictPartition(lam, k)


def enumerate_grassmannian_permutations(m: int, n: int) -> list[tuple[int, ...]]:
    """Permutations of 1..n with descents only at position m, in lexicographic order.

    Built directly from the m-subset ``{w(1) < ... < w(m)}``; the complement
    fills the remaining positions in increasing order.
    """
    if not 0 <= m <= n:
        raise DomainError(f"need 0 <= m <= n, got m={m}, n={n}")
    if n > MAX_PERM_N:
        raise SizeError(f"n={n} exceeds enumeration guard {MAX_PERM_N}")
    perms = []
    values = range(1, n + 1)
    for head in combinations(values, m):
        chosen = set(head)
        perms.append(head + tuple(v for v in values if v not in chosen))
    perms.sort()
    return perms


def permutation_to_subset(w: Sequence[int], m: int) -> PivotSet:
    return PivotSet(tuple(sorted(w[:m])), len(w))


def parse_matrix(text: str) -> list[list[Fraction]]:
    """One row per line, whitespace-separated integers or ``p/q`` rationals."""
    rows = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([Fraction(tok) for tok in line.split()])
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"line {lineno}: cannot parse entries {line!r}") from None
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DomainError("matrix rows have different lengths")
    return rows


def rref(matrix: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and 0-based pivot columns, in exact arithmetic."""
    a = [[Fraction(x) for x in row] for row in matrix]
    n_rows = len(a)
    n_cols = len(a[0]) if a else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        if r == n_rows:
            break
        src = next((i for i in range(r, n_rows) if a[i][c] != 0), None)
        if src is None:
            continue
        a[r], a[src] = a[src], a[r]
        piv = a[r][c]
        a[r] = [x / piv for x in a[r]]
        for i in range(n_rows):
            f = a[i][c]
            if i != r and f != 0:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def cell_of(matrix: Sequence[Sequence]) -> tuple[PivotSet, Partition]:
    """Schubert cell of the row space of a full-rank m x n matrix."""
    if not matrix or not matrix[0]:
        raise RankError("empty matrix")
    m, n = len(matrix), len(matrix[0])
    _, pivots = rref(matrix)
    if len(pivots) < m:
        raise RankError(f"matrix has rank {len(pivots)} < {m} rows")
    pset = PivotSet(tuple(c + 1 for c in pivots), n)
    return pset, subset_to_partition(pset)
