"""Young raising operators acting on integer sequences and on c_alpha.

R_ij adds one to entry i and subtracts one from entry j (i < j). A product
of factors (1 - R_ij) and (1 + R_ij)^{-1} acts on c_alpha termwise through
``R c_alpha = c_{R(alpha)}``; the geometric series of the inverse factors
become finite because c_p vanishes for p < 0.

Positions are 1-based, as in the formulas. Sequences are plain tuples.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from schubert.cring import CPolynomial, monomial_from_seq
from schubert.errors import ShapeError

log = logging.getLogger(__name__)


class Kind(enum.Enum):
    MINUS = "1-R"  # (1 - R_ij)
    INV_PLUS = "1/(1+R)"  # (1 + R_ij)^{-1}


@dataclass(frozen=True)
class RaisingFactor:
    i: int
    j: int
    kind: Kind

    def __post_init__(self):
        if not 1 <= self.i < self.j:
            raise ShapeError(f"raising factor needs 1 <= i < j, got ({self.i}, {self.j})")

    def __str__(self):
        if self.kind is Kind.MINUS:
            return f"(1-R{self.i}{self.j})"
        return f"(1+R{self.i}{self.j})^-1"


@dataclass(frozen=True)
class OperatorProduct:
    length: int
    factors: frozenset = frozenset()

    def __post_init__(self):
        factors = frozenset(self.factors)
        object.__setattr__(self, "factors", factors)
        for f in factors:
            if f.j > self.length:
                raise ShapeError(f"factor {f} reaches past length {self.length}")

    @classmethod
    def build(cls, length: int, minus: Iterable[tuple[int, int]] = (),
              inv_plus: Iterable[tuple[int, int]] = ()) -> OperatorProduct:
        fs = [RaisingFactor(i, j, Kind.MINUS) for i, j in minus]
        fs += [RaisingFactor(i, j, Kind.INV_PLUS) for i, j in inv_plus]
        return cls(length, frozenset(fs))

    @classmethod
    def vandermonde(cls, length: int) -> OperatorProduct:
        """prod_{i<j} (1 - R_ij)"""
        pairs = [(i, j) for j in range(2, length + 1) for i in range(1, j)]
        return cls.build(length, minus=pairs)

    @classmethod
    def schur_q(cls, length: int) -> OperatorProduct:
        """prod_{i<j} (1 - R_ij) / (1 + R_ij)"""
        pairs = [(i, j) for j in range(2, length + 1) for i in range(1, j)]
        return cls.build(length, minus=pairs, inv_plus=pairs)

    def __str__(self):
        if not self.factors:
            return "1"
        return "".join(str(f) for f in sorted(self.factors, key=lambda f: (f.i, f.j, f.kind.value)))


def apply_rij(alpha: Sequence[int], i: int, j: int, m: int = 1) -> tuple[int, ...]:
    """R_ij^m (alpha)."""
    if not 1 <= i < j <= len(alpha):
        raise IndexError(f"need 1 <= i < j <= {len(alpha)}, got i={i}, j={j}")
    if m < 0:
        raise ValueError(f"power must be non-negative, got {m}")
    out = list(alpha)
    out[i - 1] += m
    out[j - 1] -= m
    return tuple(out)


def _shift(seq: tuple, i0: int, j0: int, m: int) -> tuple:
    out = list(seq)
    out[i0] += m
    out[j0] -= m
    return tuple(out)


def expand(op: OperatorProduct, alpha: Sequence[int], truncation: Optional[int] = None) -> CPolynomial:
    """Apply ``op`` to c_alpha and collect the result as a polynomial.

    Factors are processed grouped by their lower position j, from the last
    position down to 2. Position j is only ever lowered by the factors in
    its own group and the later groups never touch it, so a sequence whose
    entry j goes negative contributes nothing and is dropped on the spot.
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) != op.length:
        raise ShapeError(f"sequence of length {len(alpha)} for operator of length {op.length}")
    by_col: dict[int, list[RaisingFactor]] = {}
    for f in op.factors:
        by_col.setdefault(f.j, []).append(f)

    state: dict[tuple, int] = {alpha: 1}
    for j in range(op.length, 1, -1):
        j0 = j - 1
        for f in sorted(by_col.get(j, ()), key=lambda f: (f.i, f.kind.value)):
            i0 = f.i - 1
            nxt: dict[tuple, int] = {}
            for seq, coeff in state.items():
                if f.kind is Kind.MINUS:
                    nxt[seq] = nxt.get(seq, 0) + coeff
                    if seq[j0] >= 1:
                        s = _shift(seq, i0, j0, 1)
                        nxt[s] = nxt.get(s, 0) - coeff
                else:
                    # sum_{m>=0} (-1)^m R_ij^m, cut off once entry j < 0
                    nxt[seq] = nxt.get(seq, 0) + coeff
                    for m in range(1, seq[j0] + 1):
                        s = _shift(seq, i0, j0, m)
                        nxt[s] = nxt.get(s, 0) + (-coeff if m % 2 else coeff)
            state = {s: c for s, c in nxt.items() if c}
        state = {s: c for s, c in state.items() if s[j0] >= 0}
        if log.isEnabledFor(logging.DEBUG):
            log.debug("after column %d: %d sequences", j, len(state))
            for s, c in sorted(state.items()):
                log.debug("  %+d %s", c, s)

    out = CPolynomial.zero(truncation)
    acc: dict = {}
    for seq, coeff in state.items():
        term = monomial_from_seq(seq, truncation)
        for mono in term.terms:
            acc[mono] = acc.get(mono, 0) + coeff
    if acc:
        out = CPolynomial(acc, truncation)
    return out


def pair_entry(a: int, b: int, truncation: Optional[int] = None) -> CPolynomial:
    """(1 - R_12)/(1 + R_12) c_(a,b) = c_a c_b + 2 sum_{m=1}^{b} (-1)^m c_{a+m} c_{b-m}."""
    terms: dict[tuple, int] = {}
    for m in range(0, max(b, 0) + 1):
        coeff = 1 if m == 0 else (2 if m % 2 == 0 else -2)
        mono = monomial_from_seq((a + m, b - m), truncation)
        for key in mono.terms:
            terms[key] = terms.get(key, 0) + coeff
    return CPolynomial(terms, truncation)
