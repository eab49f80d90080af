"""Exact modular arithmetic on machine-sized integers.

Powering, multiplicative orders, p-adic valuations, deterministic
primality and factorization for inputs below 2**64, plus a segmented
sieve used by the prime scans.
"""

from __future__ import annotations

import math
import random
from functools import reduce

import numpy as np

__all__ = [
    "mod_pow",
    "mult_order",
    "mult_order_brute",
    "carmichael_lambda",
    "valuation",
    "lte_valuation",
    "is_prime",
    "factorize",
    "prime_divisors",
    "primitive_root",
    "primes_up_to",
    "primes_in_range",
    "first_primes_from",
]

# Deterministic Miller-Rabin witness sets (Jaeschke; Sorenson-Webster).
_MR_SMALL = (2, 3, 5, 7)
_MR_SMALL_LIMIT = 3_215_031_751
_MR_FULL = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_FULL_LIMIT = 3_317_044_064_679_887_385_961_981

_TRIAL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def mod_pow(base: int, exp: int, m: int) -> int:
    """Return base**exp reduced to [0, m)."""
    if m < 1:
        raise ValueError(f"modulus must be >= 1, got {m}")
    if exp < 0:
        raise ValueError("exponent must be non-negative")
    return pow(base, exp, m)


def valuation(p: int, n: int) -> int:
    """p-adic valuation of n; the sign of n is ignored."""
    if n == 0:
        raise ValueError("valuation of 0 is undefined")
    if p < 2:
        raise ValueError(f"p must be prime, got {p}")
    n = abs(n)
    if p == 2:
        return (n & -n).bit_length() - 1
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v


def lte_valuation(p: int, r: int, n: int) -> int:
    """nu_p(r**n - 1) via the lifting-the-exponent formula.

    Requires r = 1 (mod p), r not in {1, -1} and n >= 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if r == -1 or r == 1:
        raise ValueError("r must differ from 1 and -1")
    if (r - 1) % p:
        raise ValueError(f"r={r} is not 1 mod {p}")
    if p == 2 and n % 2 == 0:
        return valuation(2, n) + valuation(2, r * r - 1) - 1
    return valuation(p, n) + valuation(p, r - 1)


def _miller_rabin(n: int, witnesses) -> bool:
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    for a in witnesses:
        a %= n
        if a == 0:
            continue
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def is_prime(n: int) -> bool:
    """Deterministic primality test, exact for every n < 3.3e24 (so all 64-bit n)."""
    if n < 2:
        return False
    for p in _TRIAL_PRIMES:
        if n % p == 0:
            return n == p
    if n < 2209:  # 47**2
        return True
    if n < _MR_SMALL_LIMIT:
        return _miller_rabin(n, _MR_SMALL)
    if n < _MR_FULL_LIMIT:
        return _miller_rabin(n, _MR_FULL)
    raise ValueError(f"{n} exceeds the deterministic primality range")


def _pollard_brent(n: int, seed: int) -> int:
    # n is odd and composite; returns a nontrivial factor
    rng = random.Random(seed)
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int) -> dict[int, int]:
    """Complete factorization of 2 <= n < 2**64 as {prime: exponent}, keys ascending."""
    if n < 2:
        raise ValueError(f"cannot factor {n}")
    if n.bit_length() > 64:
        raise ValueError(f"{n} exceeds 64 bits")
    found: dict[int, int] = {}
    for p in _TRIAL_PRIMES:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    p = 53
    while n > 1 and p <= 1000 and p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
        p += 2
    stack = [n] if n > 1 else []
    seed = 0
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            found[m] = found.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        f = _pollard_brent(m, seed)
        seed += 1
        stack += [f, m // f]
    return dict(sorted(found.items()))


def prime_divisors(n: int) -> list[int]:
    return list(factorize(n)) if n > 1 else []


def carmichael_lambda(m: int) -> int:
    """Exponent of the unit group (Z/mZ)*."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m == 1:
        return 1
    parts = []
    for p, e in factorize(m).items():
        if p == 2:
            parts.append(1 if e == 1 else 2 if e == 2 else 1 << (e - 2))
        else:
            parts.append((p - 1) * p ** (e - 1))
    return reduce(lambda a, b: a * b // math.gcd(a, b), parts, 1)


def mult_order(a: int, m: int) -> int:
    """Multiplicative order of a modulo m.

    Starts from the group exponent lambda(m) and strips each prime
    factor while the power still equals 1.
    """
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if math.gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1")
    if m == 1:
        return 1
    a %= m
    k = carmichael_lambda(m)
    for p in prime_divisors(k):
        while k % p == 0 and pow(a, k // p, m) == 1:
            k //= p
    return k


def mult_order_brute(a: int, m: int) -> int:
    """Order by repeated multiplication; reference for tests."""
    if math.gcd(a, m) != 1:
        raise ValueError(f"gcd({a}, {m}) != 1")
    if m == 1:
        return 1
    a %= m
    x, k = a, 1
    while x != 1:
        x = x * a % m
        k += 1
    return k


def primitive_root(p: int) -> int:
    """Smallest primitive root of the prime p."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if p == 2:
        return 1
    divs = prime_divisors(p - 1)
    g = 2
    while any(pow(g, (p - 1) // r, p) == 1 for r in divs):
        g += 1
    return g


def _base_sieve(limit: int) -> np.ndarray:
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    for i in range(2, math.isqrt(limit) + 1):
        if flags[i]:
            flags[i * i :: i] = False
    return np.flatnonzero(flags)


def primes_in_range(lo: int, hi: int, segment: int = 1 << 20) -> np.ndarray:
    """All primes p with lo <= p < hi, by a segmented sieve (int64 array)."""
    lo = max(lo, 2)
    if hi <= lo:
        return np.empty(0, dtype=np.int64)
    base = _base_sieve(math.isqrt(hi - 1) + 1)
    out = []
    for start in range(lo, hi, segment):
        stop = min(start + segment, hi)
        flags = np.ones(stop - start, dtype=bool)
        for p in base:
            p = int(p)
            if p * p >= stop:
                break
            first = max(p * p, -(-start // p) * p)
            flags[first - start :: p] = False
        out.append(np.flatnonzero(flags).astype(np.int64) + start)
    return np.concatenate(out)


def primes_up_to(n: int) -> np.ndarray:
    return primes_in_range(2, n + 1)


def first_primes_from(start: int, count: int) -> np.ndarray:
    """The first `count` primes that are >= start."""
    if count < 1:
        return np.empty(0, dtype=np.int64)
    k = count + 10
    # Rosser-Schoenfeld: p_k < k (ln k + ln ln k) for k >= 6
    bound = int(k * (math.log(k) + math.log(math.log(k)))) + 100 if k >= 6 else 100
    bound += start
    while True:
        ps = primes_in_range(start, bound)
        if len(ps) >= count:
            return ps[:count]
        bound *= 2
