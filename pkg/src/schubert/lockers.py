"""The locker puzzle: student s toggles every locker whose number is a multiple of s."""

from __future__ import annotations

from math import isqrt

from schubert.errors import DomainError, SizeError

MAX_LOCKERS = 10**7


def run_passes(N: int) -> bytearray:
    """Final states after all N passes; index 0 is unused, 1 means open."""
    if N < 1:
        raise DomainError(f"need at least one locker, got {N}")
    if N > MAX_LOCKERS:
        raise SizeError(f"N={N} exceeds the simulation guard {MAX_LOCKERS}")
    state = bytearray(N + 1)
    for student in range(1, N + 1):
        for locker in range(student, N + 1, student):
            state[locker] ^= 1
    return state


def simulate(N: int) -> int:
    return sum(run_passes(N))


def closed_form(N: int) -> int:
    """Number of perfect squares in 1..N."""
    if N < 1:
        raise DomainError(f"need at least one locker, got {N}")
    return isqrt(N)


def divisors(m: int) -> list[int]:
    if m < 1:
        raise DomainError(f"locker numbers start at 1, got {m}")
    small = [d for d in range(1, isqrt(m) + 1) if m % d == 0]
    large = [m // d for d in reversed(small) if d * d != m]
    return small + large


def divisor_parity(m: int) -> tuple[int, bool]:
    """(number of divisors of m, whether locker m ends up open)."""
    count = len(divisors(m))
    return count, count % 2 == 1


def trace(m: int) -> list[tuple[int, bool]]:
    """(student, open after this student's visit) for every student touching locker m."""
    out = []
    is_open = False
    for d in divisors(m):
        is_open = not is_open
        out.append((d, is_open))
    return out
