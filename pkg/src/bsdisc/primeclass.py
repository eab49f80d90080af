"""Artin, Fermat and Mirimanoff primes, the eight-class partition, densities.

The eight classes follow the row order of the classification table:

    1  q = +-1 mod 28, Artin, not Mirimanoff
    2  otherwise,      Artin, not Mirimanoff
    3  q = +-1 mod 28, Artin, Mirimanoff, not Fermat
    4  otherwise,      Artin, Mirimanoff, not Fermat
    5  q = +-1 mod 28, Artin, Mirimanoff, Fermat
    6  otherwise,      Artin, Mirimanoff, Fermat
    7  q = +-1 mod 28, not Artin
    8  otherwise,      not Artin
"""

from __future__ import annotations

import csv
import io
import logging
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

import numpy as np

from .modarith import first_primes_from, is_prime, prime_divisors, primes_up_to

__all__ = [
    "TheoremCase",
    "PrimeClassification",
    "DensityReport",
    "is_artin",
    "is_fermat",
    "is_mirimanoff",
    "classify",
    "artin_constant",
    "artin_tail_bound",
    "conjectural_densities",
    "mirimanoff_scan",
    "classify_scan",
    "density_scan",
    "rows_to_csv",
    "read_cache",
    "THREADS_ENV",
    "CSV_HEADER",
]

log = logging.getLogger(__name__)

THREADS_ENV = "BSDISC_THREADS"
CSV_HEADER = ("q", "artin", "fermat", "mirimanoff", "mod28", "class")

# 0.373955813619202288... to the precision quoted in the literature
ARTIN_CONSTANT_REFERENCE = 0.373955813619202288


class TheoremCase(str, Enum):
    ARTIN_NOT_MIRIMANOFF = "ArtinNotMirimanoff"
    ARTIN_MIRIMANOFF_NOT_FERMAT = "ArtinMirimanoffNotFermat"
    ARTIN_MIRIMANOFF_FERMAT = "ArtinMirimanoffFermat"
    NOT_ARTIN = "NotArtin"


@dataclass(frozen=True)
class PrimeClassification:
    q: int
    artin: bool
    fermat: bool
    mirimanoff: bool
    mod28_exceptional: bool
    eight_class: int
    theorem_case: TheoremCase

    def row(self) -> tuple[int, int, int, int, int, int]:
        return (self.q, int(self.artin), int(self.fermat), int(self.mirimanoff),
                int(self.mod28_exceptional), self.eight_class)


@dataclass(frozen=True)
class DensityReport:
    prime_count: int
    counts: tuple[int, ...]
    empirical: tuple[float, ...]
    conjectural: tuple[float, ...]


def _check_q(q: int) -> None:
    if q < 5 or not is_prime(q):
        raise ValueError(f"q must be a prime >= 5, got {q}")


def _artin(q: int) -> bool:
    return all(pow(3, (q - 1) // r, q) != 1 for r in prime_divisors(q - 1))


def _fermat(q: int) -> bool:
    m = q - 1
    return m > 0 and m & (m - 1) == 0


def _mirimanoff(q: int) -> bool:
    return pow(3, q - 1, q * q) == 1


def is_artin(q: int) -> bool:
    """True iff 3 is a primitive root modulo the prime q."""
    _check_q(q)
    return _artin(q)


def is_fermat(q: int) -> bool:
    if not is_prime(q):
        raise ValueError(f"{q} is not prime")
    return _fermat(q)


def is_mirimanoff(q: int) -> bool:
    """3^(q-1) = 1 (mod q^2)."""
    _check_q(q)
    if q.bit_length() > 64:
        raise OverflowError("q^2 would exceed 128 bits")
    return _mirimanoff(q)


def _eight_class(mod28: bool, artin: bool, mir: bool, fermat: bool) -> int:
    if not artin:
        base = 7
    elif not mir:
        base = 1
    elif not fermat:
        base = 3
    else:
        base = 5
    return base if mod28 else base + 1


def _case(artin: bool, mir: bool, fermat: bool) -> TheoremCase:
    if not artin:
        return TheoremCase.NOT_ARTIN
    if not mir:
        return TheoremCase.ARTIN_NOT_MIRIMANOFF
    if not fermat:
        return TheoremCase.ARTIN_MIRIMANOFF_NOT_FERMAT
    return TheoremCase.ARTIN_MIRIMANOFF_FERMAT


def _classify_unchecked(q: int) -> PrimeClassification:
    artin = _artin(q)
    fermat = _fermat(q)
    mir = _mirimanoff(q)
    mod28 = q % 28 in (1, 27)
    return PrimeClassification(q, artin, fermat, mir, mod28,
                               _eight_class(mod28, artin, mir, fermat), _case(artin, mir, fermat))


def classify(q: int) -> PrimeClassification:
    _check_q(q)
    return _classify_unchecked(q)


def artin_tail_bound(prime_bound: int) -> float:
    """Bound on |log A - log A(prime_bound)| for the truncated product."""
    return 2.0 / prime_bound


def artin_constant(prime_bound: int) -> float:
    """Truncated Euler product prod_{p <= prime_bound} (1 - 1/(p(p-1)))."""
    if prime_bound < 2:
        raise ValueError("prime_bound must be >= 2")
    ps = primes_up_to(prime_bound).astype(np.float64)
    logs = np.log1p(-1.0 / (ps * (ps - 1.0)))
    return math.exp(math.fsum(logs.tolist()))


def conjectural_densities(prime_bound: int = 10**7) -> tuple[float, ...]:
    a = artin_constant(prime_bound)
    return (32 * a / 205, 173 * a / 205, 0.0, 0.0, 0.0, 0.0,
            1 / 6 - 32 * a / 205, 5 / 6 - 173 * a / 205)


def mirimanoff_scan(bound: int) -> list[int]:
    """All primes 5 <= q <= bound with 3^(q-1) = 1 mod q^2."""
    return [int(q) for q in primes_up_to(bound) if q >= 5 and _mirimanoff(int(q))]


def _classify_chunk(qs: list[int]) -> list[tuple[int, ...]]:
    return [_classify_unchecked(q).row() for q in qs]


def _threads(workers: int | None) -> int:
    if workers is not None:
        return max(1, workers)
    env = os.environ.get(THREADS_ENV)
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def classify_scan(prime_count: int, workers: int | None = None,
                  chunk: int = 50_000) -> list[tuple[int, ...]]:
    """Classification rows for the first prime_count primes >= 5, in prime order.

    Chunks are classified independently and concatenated in order, so the
    output does not depend on the number of workers.
    """
    if prime_count < 1:
        raise ValueError("prime_count must be >= 1")
    qs = [int(q) for q in first_primes_from(5, prime_count)]
    parts = [qs[i : i + chunk] for i in range(0, len(qs), chunk)]
    n = _threads(workers)
    if n == 1 or len(parts) == 1:
        results = [_classify_chunk(p) for p in parts]
    else:
        with ProcessPoolExecutor(max_workers=n) as pool:
            results = list(pool.map(_classify_chunk, parts))
    return [row for part in results for row in part]


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    w.writerows(rows)
    return buf.getvalue()


def read_cache(path: Path) -> list[tuple[int, ...]]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        header = tuple(next(reader))
        if header != CSV_HEADER:
            raise ValueError(f"unexpected cache header {header}")
        return [tuple(int(v) for v in row) for row in reader]


def _cache_path(cache_dir: Path, prime_count: int) -> Path:
    return Path(cache_dir) / f"classify_{prime_count}.csv"


def cached_classify_scan(prime_count: int, cache_dir: Path | None = None,
                         workers: int | None = None) -> list[tuple[int, ...]]:
    if cache_dir is not None:
        path = _cache_path(cache_dir, prime_count)
        if path.exists():
            log.info("reading classification cache %s", path)
            return read_cache(path)
    rows = classify_scan(prime_count, workers=workers)
    if cache_dir is not None:
        Path(cache_dir).mkdir(parents=True, exist_ok=True)
        _cache_path(cache_dir, prime_count).write_text(rows_to_csv(rows))
    return rows


def density_report(rows, prime_bound: int = 10**7) -> DensityReport:
    counts = [0] * 8
    for row in rows:
        counts[row[5] - 1] += 1
    total = sum(counts)
    return DensityReport(total, tuple(counts), tuple(c / total for c in counts),
                         conjectural_densities(prime_bound))


def density_scan(prime_count: int, workers: int | None = None,
                 cache_dir: Path | None = None) -> DensityReport:
    """Eight-class counts and densities over the first prime_count primes >= 5."""
    rows = cached_classify_scan(prime_count, cache_dir=cache_dir, workers=workers)
    return density_report(rows)
