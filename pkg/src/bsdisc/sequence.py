"""The sequences u_q(j) = (3**j - q* (-1)**j) / 4 for primes q >= 5."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .modarith import is_prime

__all__ = ["SequenceSpec", "make_spec", "term_exact", "term_mod", "iter_terms_mod", "terms_mod_array"]


@dataclass(frozen=True)
class SequenceSpec:
    """A prime q >= 5 together with q* = (-1)**((q-1)/2) * q."""

    q: int
    q_star: int

    def __post_init__(self):
        if self.q_star != (self.q if self.q % 4 == 1 else -self.q):
            raise ValueError(f"inconsistent q*={self.q_star} for q={self.q}")


def make_spec(q: int) -> SequenceSpec:
    if q < 5:
        raise ValueError(f"q must be a prime >= 5, got {q}")
    if not is_prime(q):
        raise ValueError(f"q={q} is not prime")
    return SequenceSpec(q, q if q % 4 == 1 else -q)


def term_exact(spec: SequenceSpec, j: int) -> int:
    """The exact (possibly negative) integer u_q(j), j >= 1."""
    if j < 1:
        raise ValueError("index j must be >= 1")
    sign = -1 if j % 2 else 1
    num = 3**j - spec.q_star * sign
    assert num % 4 == 0
    return num // 4


def term_mod(spec: SequenceSpec, j: int, m: int) -> int:
    """u_q(j) mod m in [0, m), without big integers.

    The numerator is reduced mod 4m and then divided by 4, which works
    for even m where 4 has no inverse.
    """
    if j < 1:
        raise ValueError("index j must be >= 1")
    if m < 1:
        raise ValueError("modulus must be >= 1")
    m4 = 4 * m
    sign = -1 if j % 2 else 1
    t = (pow(3, j, m4) - spec.q_star * sign) % m4
    return t // 4


def iter_terms_mod(spec: SequenceSpec, m: int) -> Iterator[int]:
    """Yield u_q(1), u_q(2), ... mod m using u(j) = 2u(j-1) + 3u(j-2)."""
    a = term_mod(spec, 1, m)
    b = term_mod(spec, 2, m)
    yield a
    yield b
    while True:
        a, b = b, (2 * b + 3 * a) % m
        yield b


def terms_mod_array(spec: SequenceSpec, count: int, m: int) -> np.ndarray:
    """u_q(1..count) mod m as an int64 array (index 0 holds u_q(1)).

    Powers of 3 mod 4m are filled by block doubling so the work stays in
    numpy. Needs 4m < 2**31 so products fit in int64.
    """
    if count < 1:
        return np.empty(0, dtype=np.int64)
    m4 = 4 * m
    if m4 >= 1 << 31:
        it = iter_terms_mod(spec, m)
        return np.array([next(it) for _ in range(count)], dtype=np.int64)
    pw = np.empty(count, dtype=np.int64)
    pw[0] = 3 % m4
    filled = 1
    while filled < count:
        step = min(filled, count - filled)
        mult = pow(3, filled, m4)
        pw[filled : filled + step] = pw[:step] * mult % m4
        filled += step
    signs = np.where(np.arange(1, count + 1) % 2 == 1, -1, 1)
    t = (pw - spec.q_star * signs) % m4
    return t // 4
