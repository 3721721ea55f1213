"""Integer polynomials in the special classes c_1, c_2, ...

A monomial is a weakly decreasing tuple of positive indices, so ``(3, 1, 1)``
stands for c_3 c_1^2. Indices equal to zero are dropped (c_0 = 1) and any
negative index kills the term. An optional truncation bound B additionally
kills every monomial containing an index above B.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from schubert.errors import TruncationError

Monomial = tuple  # weakly decreasing positive ints


def _canon(indices: Iterable[int], bound: Optional[int]) -> Optional[Monomial]:
    out = []
    for p in indices:
        if p < 0 or (bound is not None and p > bound):
            return None
        if p:
            out.append(p)
    out.sort(reverse=True)
    return tuple(out)


def _merge(a: Monomial, b: Monomial) -> Monomial:
    return tuple(sorted(a + b, reverse=True))


class CPolynomial:
    __slots__ = ("terms", "truncation", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, truncation: Optional[int] = None):
        if truncation is not None and truncation < 1:
            raise TruncationError(f"truncation bound must be positive, got {truncation}")
        clean: dict[Monomial, int] = {}
        for mono, coeff in (terms or {}).items():
            key = _canon(mono, truncation)
            if key is None or not coeff:
                continue
            clean[key] = clean.get(key, 0) + int(coeff)
        self.terms = {m: c for m, c in clean.items() if c}
        self.truncation = truncation
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict, truncation: Optional[int]) -> CPolynomial:
        # terms already canonical and nonzero
        obj = cls.__new__(cls)
        obj.terms = terms
        obj.truncation = truncation
        obj._hash = None
        return obj

    @classmethod
    def zero(cls, truncation: Optional[int] = None) -> CPolynomial:
        return cls._raw({}, truncation)

    @classmethod
    def one(cls, truncation: Optional[int] = None) -> CPolynomial:
        return cls._raw({(): 1}, truncation)

    @classmethod
    def c(cls, p: int, truncation: Optional[int] = None) -> CPolynomial:
        """The special class c_p."""
        return monomial_from_seq((p,), truncation)

    # -- ring operations ---------------------------------------------------

    def _check(self, other: CPolynomial):
        if self.truncation != other.truncation:
            raise TruncationError(
                f"cannot combine truncation {self.truncation} with {other.truncation}"
            )

    def _coerce(self, other) -> CPolynomial:
        if isinstance(other, CPolynomial):
            self._check(other)
            return other
        if isinstance(other, int):
            return CPolynomial._raw({(): other} if other else {}, self.truncation)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return CPolynomial._raw(out, self.truncation)

    __radd__ = __add__

    def __neg__(self):
        return CPolynomial._raw({m: -c for m, c in self.terms.items()}, self.truncation)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                key = _merge(m1, m2)
                out[key] = out.get(key, 0) + c1 * c2
        # merged monomials only contain indices already within the bound
        return CPolynomial._raw({m: c for m, c in out.items() if c}, self.truncation)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        out = CPolynomial.one(self.truncation)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = CPolynomial._raw({(): other} if other else {}, self.truncation)
        if not isinstance(other, CPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    # -- inspection --------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self, degree: Optional[int] = None) -> bool:
        degs = self.degrees()
        if not degs:
            return True
        if len(degs) != 1:
            return False
        return degree is None or degs == {degree}

    def indices(self) -> set[int]:
        return {p for m in self.terms for p in m}

    def truncate(self, bound: Optional[int]) -> CPolynomial:
        """Reinterpret under a new bound, dropping monomials that leave it."""
        return CPolynomial(self.terms, bound)

    def evaluate(self, assignment: Mapping[int, Fraction | int]) -> Fraction:
        return evaluate(self, assignment)

    # -- rendering ---------------------------------------------------------

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        # degree, then lexicographic on the increasing index sequence:
        # c2*c1 precedes c3, c3*c1 precedes c2^2
        return sorted(self.terms.items(), key=lambda mc: (sum(mc[0]), mc[0][::-1]))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for pos, (mono, coeff) in enumerate(self.sorted_terms()):
            body = _mono_str(mono)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if pos == 0:
                pieces.append(("-" if coeff < 0 else "") + text)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + text)
        return "".join(pieces)

    def __repr__(self):
        extra = "" if self.truncation is None else f", truncation={self.truncation}"
        return f"CPolynomial({str(self)!r}{extra})"

    def to_json(self) -> list[dict]:
        return [{"indices": list(m), "coeff": c} for m, c in self.sorted_terms()]

    @classmethod
    def from_json(cls, data: Sequence[Mapping], truncation: Optional[int] = None) -> CPolynomial:
        return cls({tuple(t["indices"]): int(t["coeff"]) for t in data}, truncation)


def _mono_str(mono: Monomial) -> str:
    counts = Counter(mono)
    factors = []
    for p in sorted(counts, reverse=True):
        e = counts[p]
        factors.append(f"c{p}" if e == 1 else f"c{p}^{e}")
    return "*".join(factors)


def monomial_from_seq(alpha: Sequence[int], truncation: Optional[int] = None) -> CPolynomial:
    """c_alpha = c_{alpha_1} c_{alpha_2} ... as a one-term polynomial (or zero)."""
    key = _canon(alpha, truncation)
    if key is None:
        return CPolynomial.zero(truncation)
    return CPolynomial._raw({key: 1}, truncation)


def evaluate(f: CPolynomial, assignment: Mapping[int, Fraction | int]) -> Fraction:
    """Substitute c_p -> assignment[p]; raises KeyError naming any missing index."""
    missing = sorted(f.indices() - set(assignment))
    if missing:
        raise KeyError(f"no value assigned to c{missing[0]}")
    total = Fraction(0)
    for mono, coeff in f.terms.items():
        term = Fraction(coeff)
        for p in mono:
            term *= assignment[p]
        total += term
    return total


def h_values(x: Sequence[Fraction | int], maxdeg: int) -> dict[int, Fraction]:
    """Complete homogeneous symmetric polynomials h_1..h_maxdeg at the point x."""
    if maxdeg < 1:
        raise ValueError(f"maxdeg must be at least 1, got {maxdeg}")
    h = [Fraction(1)] + [Fraction(0)] * maxdeg
    for xi in x:
        # multiply the series by 1/(1 - xi t), in place
        for p in range(1, maxdeg + 1):
            h[p] += xi * h[p - 1]
    return {p: h[p] for p in range(1, maxdeg + 1)}
