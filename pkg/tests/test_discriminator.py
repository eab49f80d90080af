import math

import mpmath
import pytest

from bsdisc.discriminator import (Branch, RunLengthTable, disc_brute, disc_brute_sweep,
                                  disc_closed, disc_table, f_density_check, f_exponents, in_F,
                                  small_n, value_set)
from bsdisc.indices import incongruence_index
from bsdisc.primeclass import classify, is_fermat
from bsdisc.sequence import make_spec
from bsdisc.verify import first_primes

PRIMES30 = first_primes(30)
SWEEP_N = 256


@pytest.fixture(scope="module")
def sweeps():
    return {q: disc_brute_sweep(make_spec(q), SWEEP_N) for q in PRIMES30}


def _is_power(v, base):
    while v % base == 0:
        v //= base
    return v == 1


@pytest.mark.parametrize("q,n,expected", [(5, 17, 25), (5, 1, 1), (29, 5, 7), (13, 1, 1)])
def test_brute_examples(q, n, expected):
    assert disc_brute(make_spec(q), n) == expected


@pytest.mark.parametrize("q,n,expected,branch", [
    (17, 257, 289, Branch.POWER_OF_Q),
    (7, 6, 7, Branch.POWER_OF_Q),
    (11, 1000, 1024, Branch.POWER_OF_TWO),
    (29, 5, 7, Branch.EXCEPTIONAL_7),
    (5, 17, 25, Branch.POWER_OF_Q),
])
def test_closed_examples(q, n, expected, branch):
    r = disc_closed(make_spec(q), n)
    assert (r.value, r.branch) == (expected, branch)
    assert r.pow2_candidate >= n


def test_closed_candidates():
    r = disc_closed(make_spec(1006003), 10)
    assert r.powq_candidate == 1006003 and r.value == 16
    assert disc_closed(make_spec(1006003), 1006003).powq_candidate is None
    assert disc_closed(make_spec(11), 3).powq_candidate is None


def test_rejects_bad_n():
    spec = make_spec(5)
    for fn in (disc_brute, disc_closed, disc_brute_sweep, disc_table):
        with pytest.raises(ValueError):
            fn(spec, 0)


@pytest.mark.parametrize("q", [5, 7, 13, 29])
def test_sweep_matches_direct_search(q, sweeps):
    spec = make_spec(q)
    assert sweeps[q] == [disc_brute(spec, n) for n in range(1, SWEEP_N + 1)]


def test_closed_matches_sweep(sweeps):
    for q, vals in sweeps.items():
        spec = make_spec(q)
        assert [disc_closed(spec, n).value for n in range(1, SWEEP_N + 1)] == vals, q


def test_value_shape(sweeps):
    for q, vals in sweeps.items():
        for n, v in enumerate(vals, start=1):
            assert n <= v <= 2 * n - 1
            assert v % 3 != 0
            assert _is_power(v, 2) or _is_power(v, q) or v == 7
            if v == 7 and q != 7:
                assert n == 5


@pytest.mark.parametrize("q", [5, 7, 17, 29])
def test_power_of_q_discriminates_exactly_up_to_bound(q):
    assert classify(q).artin and not classify(q).mirimanoff
    spec = make_spec(q)
    for f in range(1, 4):
        m = q**f
        i = incongruence_index(spec, m)
        # distinct for n <= i, so the criterion holds for all n <= q^f iff i is the threshold
        for n in range(1, m + 1):
            assert (n <= i) == (m * (q - 1) >= q * n), (q, f, n)


def test_in_F_examples():
    assert f_exponents(5, 6).members == (2, 3, 5, 6)
    assert {2, 3, 4} <= set(f_exponents(7, 4).members)
    assert [in_F(5, f) for f in range(1, 7)] == [False, True, True, False, True, True]
    with pytest.raises(ValueError):
        in_F(5, 0)
    with pytest.raises(ValueError):
        f_exponents(5, 0)


def test_f_one_iff_not_fermat():
    for q in first_primes(100):
        assert in_F(q, 1) == (not is_fermat(q))


def test_f_exponents_match_fractional_part_form():
    mpmath.mp.dps = 60
    for q in first_primes(30):
        if q > 100:
            break
        members = set(f_exponents(q, 50).members)
        thr = mpmath.log(mpmath.mpf(q) / (q - 1)) / mpmath.log(2)
        for f in range(1, 51):
            frac = mpmath.frac(f * mpmath.log(q) / mpmath.log(2))
            if abs(frac - thr) < mpmath.mpf(10) ** -40:
                # equality only when (q-1) q^(f-1) is itself a power of two
                assert f == 1 and is_fermat(q)
                expected = False
            else:
                expected = frac > thr
            assert (f in members) == expected, (q, f)
            assert in_F(q, f) == expected


def test_f_density():
    count, asym = f_density_check(5, 10**4)
    assert abs(count - asym) / asym < 0.02
    assert f_density_check(7, 3)[0] <= 3
    count, asym = f_density_check(1006003, 100)
    assert count in (99, 100)
    assert asym == pytest.approx(100 * (1 - 1 / (1006003 * math.log(2))), rel=1e-6)


@pytest.mark.parametrize("q,bound,expected", [
    (5, 200, [1, 2, 4, 8, 16, 25, 32, 64, 125, 128]),
    (29, 50, [1, 2, 4, 7, 8, 16, 29, 32]),
    (11, 100, [1, 2, 4, 8, 16, 32, 64]),
    (7, 60, [1, 2, 4, 7, 8, 16, 32, 49]),
])
def test_value_set_examples(q, bound, expected):
    assert value_set(q, bound) == expected


def test_value_set_matches_sweep(sweeps):
    for q, vals in sweeps.items():
        assert value_set(q, SWEEP_N) == sorted({v for v in vals if v <= SWEEP_N}), q


def test_value_set_matches_table():
    for q in PRIMES30:
        table = disc_table(make_spec(q), 32768)
        assert value_set(q, 32768) == sorted({v for _, _, v in table.rows if v <= 32768}), q


def test_table_layout():
    assert disc_table(make_spec(5), 4).rows == ((1, 1, 1), (2, 2, 2), (3, 4, 4))
    assert disc_table(make_spec(7), 16).rows == (
        (1, 1, 1), (2, 2, 2), (3, 4, 4), (5, 6, 7), (7, 8, 8), (9, 16, 16))
    t = disc_table(make_spec(29), 32768)
    assert (513, 812, 841) in t.rows
    assert t.n_max == 32768


def test_run_length_table_validates():
    with pytest.raises(ValueError):
        RunLengthTable(((1, 2, 2), (4, 5, 8)))
    assert RunLengthTable(()).n_max == 0


@pytest.mark.parametrize("q", [5, 7, 11, 13, 29, 113, 83])
def test_small_n_matches_brute(q):
    spec = make_spec(q)
    for n in range(1, 7):
        assert small_n(q, n) == disc_brute(spec, n), (q, n)
    assert small_n(q, 4) == 4


def test_small_n_examples_and_errors():
    assert small_n(13, 5) == 8
    assert small_n(29, 5) == 7
    with pytest.raises(ValueError):
        small_n(5, 7)
    with pytest.raises(ValueError):
        small_n(9, 3)
