"""Discriminator D_q(n): brute-force oracle, closed form, value sets, tables."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .indices import incongruence_index
from .modarith import is_prime
from .primeclass import TheoremCase, classify
from .sequence import SequenceSpec, term_mod

__all__ = [
    "Branch",
    "DiscriminatorResult",
    "RunLengthTable",
    "ExponentSet",
    "disc_brute",
    "disc_brute_sweep",
    "disc_closed",
    "f_exponents",
    "in_F",
    "value_set",
    "f_density_check",
    "disc_table",
    "small_n",
]


class Branch(str, Enum):
    POWER_OF_TWO = "PowerOfTwo"
    POWER_OF_Q = "PowerOfQ"
    EXCEPTIONAL_7 = "Exceptional7"


@dataclass(frozen=True)
class DiscriminatorResult:
    n: int
    value: int
    branch: Branch
    pow2_candidate: int
    powq_candidate: int | None


@dataclass(frozen=True)
class RunLengthTable:
    """Inclusive n-ranges (n_low, n_high, value) covering 1..n_max."""

    rows: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        expect = 1
        for lo, hi, _ in self.rows:
            if lo != expect or hi < lo:
                raise ValueError(f"rows do not partition the range at n={expect}")
            expect = hi + 1

    @property
    def n_max(self) -> int:
        return self.rows[-1][1] if self.rows else 0


@dataclass(frozen=True)
class ExponentSet:
    q: int
    members: tuple[int, ...]


def _discriminates(spec: SequenceSpec, n: int, m: int) -> bool:
    seen = bytearray(m)
    a = term_mod(spec, 1, m)
    seen[a] = 1
    if n == 1:
        return True
    b = term_mod(spec, 2, m)
    if seen[b]:
        return False
    seen[b] = 1
    for _ in range(n - 2):
        a, b = b, (2 * b + 3 * a) % m
        if seen[b]:
            return False
        seen[b] = 1
    return True


def disc_brute(spec: SequenceSpec, n: int) -> int:
    """Smallest m for which u_q(1..n) are pairwise incongruent, by direct search.

    Every m < n fails by pigeonhole; m = n, n+1, ... are tested in turn.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    for m in range(n, 2 * n):
        if _discriminates(spec, n, m):
            return m
    raise AssertionError(f"no modulus <= 2n-1 discriminates n={n} for q={spec.q}")


def disc_brute_sweep(spec: SequenceSpec, n_max: int) -> list[int]:
    """[D_q(1), ..., D_q(n_max)] by brute force, sharing work across n.

    m discriminates the first n terms exactly when iota_q(m) >= n, so one
    incongruence index per modulus m < 2 n_max answers every n at once.
    """
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    iota = [0] + [incongruence_index(spec, m) for m in range(1, 2 * n_max)]
    out = []
    for n in range(1, n_max + 1):
        for m in range(n, 2 * n):
            if iota[m] >= n:
                out.append(m)
                break
        else:
            raise AssertionError(f"no modulus <= 2n-1 discriminates n={n} for q={spec.q}")
    return out


def _smallest_pow2_at_least(n: int) -> int:
    return 1 << (n - 1).bit_length()


def _closed(q: int, case: TheoremCase, n: int) -> DiscriminatorResult:
    pow2 = _smallest_pow2_at_least(n)
    powq = None
    if case is TheoremCase.ARTIN_NOT_MIRIMANOFF:
        powq = q
        while powq * (q - 1) < q * n:
            powq *= q
    elif case is TheoremCase.ARTIN_MIRIMANOFF_NOT_FERMAT:
        powq = q if q >= n + 1 else None
    if n == 5 and q % 28 in (1, 27):
        return DiscriminatorResult(n, 7, Branch.EXCEPTIONAL_7, pow2, powq)
    if powq is not None and powq < pow2:
        return DiscriminatorResult(n, powq, Branch.POWER_OF_Q, pow2, powq)
    return DiscriminatorResult(n, pow2, Branch.POWER_OF_TWO, pow2, powq)


def disc_closed(spec: SequenceSpec, n: int) -> DiscriminatorResult:
    """D_q(n) from the four-case closed form with the D_q(5) = 7 exception."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _closed(spec.q, classify(spec.q).theorem_case, n)


def in_F(q: int, f: int) -> bool:
    """True iff [(q-1) q^(f-1), q^f] contains no power of two (exact integers)."""
    if f < 1:
        raise ValueError("f must be >= 1")
    hi = q**f
    lo = (q - 1) * q ** (f - 1)
    top = 1 << (hi.bit_length() - 1)  # largest power of two <= hi
    return top < lo


def f_exponents(q: int, max_f: int) -> ExponentSet:
    if max_f < 1:
        raise ValueError("max_f must be >= 1")
    members = []
    lo, hi = q - 1, q
    for f in range(1, max_f + 1):
        if (1 << (hi.bit_length() - 1)) < lo:
            members.append(f)
        lo, hi = hi * (q - 1), hi * q
    return ExponentSet(q, tuple(members))


def value_set(q: int, bound: int) -> list[int]:
    """All discriminator values D_q(n) that are <= bound, ascending."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    cls = classify(q)
    vals = set()
    p = 1
    while p <= bound:
        vals.add(p)
        p <<= 1
    if (q == 7 or cls.mod28_exceptional) and bound >= 7:
        vals.add(7)
    if cls.artin and not cls.fermat and q <= bound:
        vals.add(q)
    if cls.artin and not cls.mirimanoff:
        f, qf = 2, q * q
        while qf <= bound:
            if in_F(q, f):
                vals.add(qf)
            f, qf = f + 1, qf * q
    return sorted(vals)


def f_density_check(q: int, x: int) -> tuple[int, float]:
    """#{f in F_q : f <= x} and its asymptote x log(2(q-1)/q) / log 2."""
    if x < 1:
        raise ValueError("x must be >= 1")
    count = len(f_exponents(q, x).members)
    return count, x * math.log(2 * (q - 1) / q) / math.log(2)


def disc_table(spec: SequenceSpec, n_max: int) -> RunLengthTable:
    """Run-length encoding of n -> D_q(n) over 1..n_max."""
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    case = classify(spec.q).theorem_case
    rows: list[tuple[int, int, int]] = []
    start, current = 1, _closed(spec.q, case, 1).value
    for n in range(2, n_max + 1):
        v = _closed(spec.q, case, n).value
        if v != current:
            rows.append((start, n - 1, current))
            start, current = n, v
    rows.append((start, n_max, current))
    return RunLengthTable(tuple(rows))


def small_n(q: int, n: int) -> int:
    """D_q(n) for 1 <= n <= 6 from the small-n closed values."""
    if not 1 <= n <= 6:
        raise ValueError("n must lie in 1..6")
    if q < 5 or not is_prime(q):
        raise ValueError(f"q must be a prime >= 5, got {q}")
    if n <= 4:
        return (1, 2, 4, 4)[n - 1]
    if n == 5:
        return 7 if q == 7 or q % 28 in (1, 27) else 8
    return 7 if q == 7 else 8
