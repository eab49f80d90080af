"""Incongruence indices of u_q and the machinery around them.

Covers iota_q(m), membership in the prime sets P (with parts P1/P2/P3)
and Q, the sets S(p; r) and the universal index h(p), the closed form of
iota_q(q^2), and a brute-force check of the character-sum bound for
A_g(p; a, b, c).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .modarith import is_prime, mult_order, primitive_root
from .sequence import SequenceSpec, iter_terms_mod

__all__ = [
    "PMembership",
    "QMembership",
    "incongruence_index",
    "p_membership",
    "in_P",
    "q_membership",
    "s_set",
    "h_universal",
    "iota_q_squared_closed",
    "charsum_verify",
]

_DENSE_LIMIT = 10**7


@dataclass(frozen=True)
class PMembership:
    in_P: bool
    part: str | None  # "P1", "P2", "P3" or None


@dataclass(frozen=True)
class QMembership:
    in_Q: bool
    alpha_q: int | None
    wieferich_like: bool


def incongruence_index(spec: SequenceSpec, m: int) -> int:
    """Largest k such that u_q(1), ..., u_q(k) are pairwise incongruent mod m."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m == 1:
        return 1
    if m <= _DENSE_LIMIT:
        seen = bytearray(m)
        for k, r in enumerate(iter_terms_mod(spec, m)):
            if seen[r]:
                return k
            seen[r] = 1
    else:
        seen_set: set[int] = set()
        for k, r in enumerate(iter_terms_mod(spec, m)):
            if r in seen_set:
                return k
            seen_set.add(r)
    raise AssertionError("unreachable: pigeonhole bounds the scan")


def _check_p(p: int) -> None:
    if p <= 3 or not is_prime(p):
        raise ValueError(f"p must be a prime > 3, got {p}")


def in_P(p: int) -> bool:
    """ord_p(9) == (p-1)/2, ignoring the p != q side condition."""
    _check_p(p)
    return mult_order(9, p) == (p - 1) // 2


def p_membership(p: int, q: int) -> PMembership:
    _check_p(p)
    if p == q:
        raise ValueError("p must differ from q")
    o3 = mult_order(3, p)
    if p % 4 == 1 and o3 == p - 1:
        return PMembership(True, "P1")
    if p % 4 == 3 and o3 == (p - 1) // 2:
        return PMembership(True, "P2")
    if p % 4 == 3 and o3 == p - 1:
        return PMembership(True, "P3")
    return PMembership(False, None)


def q_membership(q: int) -> QMembership:
    if q < 5 or not is_prime(q):
        raise ValueError(f"q must be a prime >= 5, got {q}")
    half = (q - 1) // 2
    wieferich_like = pow(3, half, q * q) == 1
    member = q > 5 and q % 4 == 3 and mult_order(3, q) == half
    alpha = (3**half - 1) // q if member else None
    return QMembership(member, alpha, wieferich_like)


def _s_grid(p: int):
    """Residues 3*9^x and 9^y as numpy arrays indexed from 1."""
    n = p + 2
    nine = np.empty(n + 1, dtype=np.int64)
    nine[0] = 1
    for i in range(1, n + 1):
        nine[i] = nine[i - 1] * 9 % p
    return 3 * nine % p, nine


def s_set(p: int, r: int) -> set[int]:
    """S(p; r) = {3*9^x - 9^y mod p : 1 <= 2x <= r, 1 <= 2y-1 <= r} | {0}."""
    if p <= 3:
        raise ValueError("p must exceed 3")
    xs = range(1, r // 2 + 1)
    ys = range(1, (r + 1) // 2 + 1)
    out = {(3 * pow(9, x, p) - pow(9, y, p)) % p for x in xs for y in ys}
    out.add(0)
    return out


def h_universal(p: int) -> int:
    """h(p) = max{r : S(p; r) != Z/pZ} for p in P.

    S(p; r) grows with r, so it is built incrementally: an even r adds the
    row x = r/2, an odd r adds the column y = (r+1)/2. The first full r
    is one past h(p).
    """
    _check_p(p)
    if not in_P(p):
        raise ValueError(f"p={p} is not in P")
    three_nine, nine = _s_grid(p)
    covered = np.zeros(p, dtype=bool)
    covered[0] = True
    count = 1
    cap = 2 * p
    for r in range(1, cap + 1):
        if r % 2 == 0:
            x = r // 2
            ny = (r + 1) // 2
            vals = (three_nine[x] - nine[1 : ny + 1]) % p
        else:
            y = (r + 1) // 2
            nx = r // 2
            vals = (three_nine[1 : nx + 1] - nine[y]) % p
        if vals.size:
            fresh = np.unique(vals[~covered[vals]])
            covered[fresh] = True
            count += fresh.size
        if count == p:
            return r - 1
    raise RuntimeError(f"S({p}; r) not full for r <= {cap}")


def _is_qr(a: int, p: int) -> bool:
    # Euler's criterion
    return pow(a % p, (p - 1) // 2, p) == 1


def iota_q_squared_closed(q: int) -> int:
    """iota_q(q^2) for q in Q with 3^((q-1)/2) != 1 mod q^2.

    Let a = alpha_q mod q. If 2a is a square mod q, take the least m with
    9^m = 2/a and return 2m - 1 + (q-1)/2; otherwise take the least m with
    9^m = -6/a and return 2m - 2 + (q-1)/2.
    """
    info = q_membership(q)
    if not info.in_Q:
        raise ValueError(f"q={q} is not in Q")
    if info.wieferich_like:
        raise ValueError(f"3^((q-1)/2) = 1 mod q^2 for q={q}; excluded case")
    half = (q - 1) // 2
    a = info.alpha_q % q
    inv_a = pow(a, -1, q)
    if _is_qr(2 * a, q):
        target, offset = 2 * inv_a % q, -1
    else:
        target, offset = -6 * inv_a % q, -2
    x = 1
    for m in range(1, half + 1):
        x = x * 9 % q
        if x == target:
            value = 2 * m + offset + half
            assert value <= 3 * half - 1
            return value
    raise RuntimeError(f"no exponent m found for q={q}")


def charsum_verify(p: int, a: int, b: int, c: int, g: int) -> tuple[int, float]:
    """Enumerate A_g(p; a, b, c) and its largest nontrivial character sum.

    A is the set of (x, y) in Z_{p-1}^2 with a g^x - b g^y = c (mod p).
    Returns |A| and max over (s, t) != (0, 0) of
    |sum_{(x, y) in A} exp(2 pi i (s x + t y) / (p - 1))|.
    """
    if (a * b * c) % p == 0:
        raise ValueError(f"p={p} divides abc")
    if p > 61:
        raise ValueError("charsum_verify is limited to p <= 61")
    if mult_order(g, p) != p - 1:
        raise ValueError(f"g={g} is not a primitive root mod {p}")
    n = p - 1
    gp = [pow(g, k, p) for k in range(n)]
    points = [(x, y) for x in range(n) for y in range(n) if (a * gp[x] - b * gp[y] - c) % p == 0]
    omega = [cmath.exp(2j * math.pi * k / n) for k in range(n)]
    best = 0.0
    for s in range(n):
        for t in range(n):
            if s == 0 and t == 0:
                continue
            total = sum(omega[(s * x + t * y) % n] for x, y in points)
            best = max(best, abs(total))
    return len(points), best


def default_charsum_root(p: int) -> int:
    return primitive_root(p)
