"""Verification sweeps behind `bsdisc verify`.

Each suite returns a SuiteResult; the CLI turns a failed suite into
exit status 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .discriminator import disc_brute_sweep, disc_closed
from .indices import (charsum_verify, h_universal, in_P, incongruence_index,
                      iota_q_squared_closed, q_membership)
from .modarith import is_prime, primitive_root
from .period import period_brute, period_closed
from .sequence import make_spec

__all__ = ["SuiteResult", "SUITES", "run_suite", "first_primes", "KNOWN_H"]

KNOWN_H = ((5, 3), (7, 5), (11, 7), (17, 11), (19, 11), (23, 12), (29, 16),
          (31, 16), (43, 21), (47, 20), (53, 20), (59, 23), (71, 25), (79, 27))


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        line = f"{self.name}: {verdict} ({self.checked} checks, {len(self.failures)} failures)"
        if self.failures:
            line += "\n  " + "\n  ".join(self.failures[:10])
        return line


def first_primes(count: int, start: int = 5) -> list[int]:
    out, n = [], start
    while len(out) < count:
        if is_prime(n):
            out.append(n)
        n += 1
    return out


def verify_oracle(n_max: int = 1024, q_count: int = 30) -> SuiteResult:
    res = SuiteResult("oracle")
    for q in first_primes(q_count):
        spec = make_spec(q)
        brute = disc_brute_sweep(spec, n_max)
        for n, b in enumerate(brute, start=1):
            res.checked += 1
            c = disc_closed(spec, n).value
            if c != b:
                res.failures.append(f"q={q} n={n}: closed={c} brute={b}")
    return res


def verify_period(d_max: int = 2000, q_count: int = 10) -> SuiteResult:
    res = SuiteResult("period")
    for q in first_primes(q_count):
        spec = make_spec(q)
        for d in range(2, d_max + 1):
            res.checked += 1
            c, b = period_closed(spec, d), period_brute(spec, d)
            if c != b:
                res.failures.append(f"q={q} d={d}: closed={c} brute={b}")
    return res


def verify_index() -> SuiteResult:
    res = SuiteResult("index")
    for p, h in KNOWN_H:
        res.checked += 1
        got = h_universal(p)
        if got != h:
            res.failures.append(f"h({p}) = {got}, expected {h}")
    for p in range(31, 3000):
        if is_prime(p) and in_P(p):
            res.checked += 1
            h = h_universal(p)
            if 2 * h > p + 1:
                res.failures.append(f"h({p}) = {h} > (p+1)/2")
    qs = first_primes(20)
    for p in range(5, 500):
        if not (is_prime(p) and in_P(p)):
            continue
        for q in qs:
            if q == p:
                continue
            res.checked += 1
            i = incongruence_index(make_spec(q), p)
            if i >= p - 1:
                res.failures.append(f"iota_{q}({p}) = {i} not < {p - 1}")
    return res


def verify_iota2(q_max: int = 200) -> SuiteResult:
    res = SuiteResult("iota2")
    for q in range(7, q_max + 1):
        if not is_prime(q):
            continue
        info = q_membership(q)
        if not info.in_Q or info.wieferich_like:
            continue
        res.checked += 1
        closed = iota_q_squared_closed(q)
        brute = incongruence_index(make_spec(q), q * q)
        if closed != brute or closed > 3 * (q - 1) // 2 - 1:
            res.failures.append(f"q={q}: closed={closed} brute={brute}")
    return res


def verify_charsum(p_max: int = 61, qs=(5, 7, 11, 13)) -> SuiteResult:
    res = SuiteResult("charsum")
    for p in range(7, p_max + 1):
        if not is_prime(p):
            continue
        g = primitive_root(p)
        for q in qs:
            c = 6 * (q if q % 4 == 1 else -q) % p
            if c == 0:
                continue
            res.checked += 1
            size, best = charsum_verify(p, 3, 1, c, g)
            if size != p - 2:
                res.failures.append(f"p={p} q={q}: |A| = {size}, expected {p - 2}")
            # strict bound; 1e-9 absorbs float error so rounding cannot decide it
            if not best < math.sqrt(p) - 1e-9:
                res.failures.append(f"p={p} q={q}: max character sum {best:.12f} not < sqrt(p) = {math.sqrt(p):.12f}")
    return res


SUITES = {
    "oracle": verify_oracle,
    "period": verify_period,
    "index": verify_index,
    "iota2": verify_iota2,
    "charsum": verify_charsum,
}


def run_suite(name: str) -> list[SuiteResult]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    return [SUITES[name]()]
