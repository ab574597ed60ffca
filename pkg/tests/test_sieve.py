import math

import pytest

from lcmlab.oracle import naive_run
from lcmlab.polynomial import max_abs_on_range, parse_poly
from lcmlab.primes import FactorTimeout, factorize, is_probable_prime
from lcmlab.sieve import build_ledger, factor_cofactor, local_data

from conftest import TEST_POLYS

F = parse_poly("x^2+1")


def _entry_tuple(d):
    return (d.alpha, d.max_exp, d.hit_count, d.layer_counts)


class TestLocalData:
    def test_example_p5(self):
        cap = max_abs_on_range(F, 10)
        d = local_data(F, 5, 10, cap)
        assert (d.alpha, d.max_exp, d.hit_count) == (5, 2, 4)
        assert d.layer_counts == (4, 1)

    def test_example_rho_zero(self):
        cap = max_abs_on_range(F, 100)
        d = local_data(F, 3, 100, cap)
        assert (d.alpha, d.max_exp, d.hit_count) == (0, 0, 0)

    def test_example_single_large_hit(self):
        cap = max_abs_on_range(F, 10)
        d = local_data(F, 101, 10, cap)
        assert (d.alpha, d.max_exp, d.hit_count) == (1, 1, 1)

    def test_layer_identities(self, ledger_factory, test_poly):
        ledger = ledger_factory(test_poly, 300)
        for p, d in ledger.entries.items():
            assert d.alpha == sum(d.layer_counts)
            assert all(
                a >= b for a, b in zip(d.layer_counts, d.layer_counts[1:])
            )
            assert d.hit_count == d.layer_counts[0]
            assert d.max_exp == len(d.layer_counts)
            assert d.max_exp <= d.alpha <= d.hit_count * d.max_exp


class TestBuildLedger:
    def test_example_n5(self):
        led = build_ledger(F, 5)
        got = {p: (d.alpha, d.max_exp, d.hit_count) for p, d in led.entries.items()}
        assert got == {2: (3, 1, 3), 5: (2, 1, 2), 13: (1, 1, 1), 17: (1, 1, 1)}
        lcm = 1
        for p, d in led.entries.items():
            lcm *= p**d.max_exp
        assert lcm == 2210

    def test_example_n1(self):
        led = build_ledger(F, 1)
        assert {p: d.alpha for p, d in led.entries.items()} == {2: 1}

    def test_empty_product(self):
        led = build_ledger(F, 0)
        assert led.entries == {}

    def test_bound_cannot_go_below_DN(self):
        with pytest.raises(ValueError):
            build_ledger(F, 100, B=100)

    def test_oracle_equivalence(self, ledger_factory, test_poly):
        for N in list(range(1, 60)) + [150, 500]:
            led = ledger_factory(test_poly, N)
            ora = naive_run(test_poly, N)
            assert set(led.entries) == set(ora.ledger.entries), (test_poly, N)
            for p in led.entries:
                assert _entry_tuple(led.entries[p]) == _entry_tuple(
                    ora.ledger.entries[p]
                ), (test_poly, N, p)

    def test_partition_independence(self, test_poly):
        N = 400
        ledgers = [
            build_ledger(test_poly, N, segment_size=s) for s in (64, 1000, N)
        ]
        base = {p: _entry_tuple(d) for p, d in ledgers[0].entries.items()}
        for led in ledgers[1:]:
            assert {p: _entry_tuple(d) for p, d in led.entries.items()} == base

    def test_worker_independence(self, test_poly):
        serial = build_ledger(test_poly, 300, workers=1)
        parallel = build_ledger(test_poly, 300, workers=4)
        assert {p: _entry_tuple(d) for p, d in serial.entries.items()} == {
            p: _entry_tuple(d) for p, d in parallel.entries.items()
        }

    def test_zone_consistency_large_primes(self, ledger_factory, test_poly):
        d = test_poly.degree
        ledger = ledger_factory(test_poly, 300)
        for p in ledger.primes_above(ledger.B):
            data = ledger.entries[p]
            assert data.hit_count <= d and data.max_exp <= d, (p, data)

    def test_log_sum_agreement(self, ledger_factory, test_poly):
        N = 300
        ledger = ledger_factory(test_poly, N)
        from_ledger = sum(
            d.alpha * math.log(p) for p, d in ledger.entries.items()
        )
        direct = sum(math.log(abs(test_poly.eval(n))) for n in range(1, N + 1))
        assert abs(from_ledger - direct) <= 1e-6 * abs(direct)

    def test_reducible_poly_skips_zeros(self):
        g = parse_poly("x^2-1")
        led = build_ledger(g, 20)
        assert led.skipped_zero_count == 1  # g(1) = 0
        direct = sum(
            math.log(abs(g.eval(n))) for n in range(2, 21)
        )
        from_ledger = sum(d.alpha * math.log(p) for p, d in led.entries.items())
        assert abs(from_ledger - direct) <= 1e-9 * abs(direct)


class TestFactorCofactor:
    def test_examples(self):
        assert factor_cofactor(561) == [(3, 1), (11, 1), (17, 1)]
        assert factor_cofactor(101) == [(101, 1)]
        assert factor_cofactor(1000003 * 1000033) == [(1000003, 1), (1000033, 1)]

    def test_rejects_unit(self):
        with pytest.raises(ValueError):
            factor_cofactor(1)

    def test_timeout_surfaces(self):
        # absurdly small budget forces the timeout path on a hard semiprime
        n = (10**9 + 7) * (10**9 + 9)
        with pytest.raises(FactorTimeout):
            factorize(n, max_iters=2, attempts=1)

    def test_primality_agrees_with_trial_division(self):
        def trial_prime(n):
            if n < 2:
                return False
            d = 2
            while d * d <= n:
                if n % d == 0:
                    return False
                d += 1
            return True

        for n in range(2, 3000):
            assert is_probable_prime(n) == trial_prime(n), n

    def test_primality_large_values_vs_sympy(self):
        import sympy

        for n in [2**61 - 1, 2**64 + 13, 2**67 - 1, 10**18 + 9, 561, 6601]:
            assert is_probable_prime(n) == sympy.isprime(n), n
