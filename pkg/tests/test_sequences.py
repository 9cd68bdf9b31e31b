import pytest

from benfordq import qseries
from benfordq.sequences import (
    IntegerSequence,
    oracle_count,
    partition_p,
    regular_partitions_b,
    resolve_sequence,
    rg_delta,
    sequence_from_series,
)


class TestPartitionP:
    def test_base_cases(self):
        assert partition_p(0) == 1
        assert partition_p(1) == 1

    def test_p4_by_enumeration(self):
        # 4, 3+1, 2+2, 2+1+1, 1+1+1+1
        assert partition_p(4) == 5

    def test_p10(self):
        assert partition_p(10) == 42

    def test_known_large_value(self):
        assert partition_p(100) == 190569292

    def test_negative(self):
        with pytest.raises(ValueError, match="negative index"):
            partition_p(-1)

    def test_matches_series_inverse(self):
        inv = qseries.series_inverse(qseries.eta_series(501))
        for n in range(501):
            assert partition_p(n) == inv.coefficient(n)


class TestRegularPartitions:
    def test_b2_5(self):
        # 5; 3+1+1; 1+1+1+1+1
        assert regular_partitions_b(2, 5) == 3

    def test_b3_3(self):
        # 2+1; 1+1+1
        assert regular_partitions_b(3, 3) == 2

    def test_b_at_zero(self):
        assert regular_partitions_b(7, 0) == 1

    def test_s_too_small(self):
        with pytest.raises(ValueError):
            regular_partitions_b(1, 4)

    def test_euler_distinct_parts(self):
        # b_2(n) equals the number of partitions into distinct parts
        def distinct_count(n):
            def rec(remaining, max_part):
                if remaining == 0:
                    return 1
                return sum(
                    rec(remaining - p, p - 1) for p in range(min(remaining, max_part), 0, -1)
                )

            return rec(n, n)

        for n in range(41):
            assert regular_partitions_b(2, n) == distinct_count(n)


class TestRgDelta:
    def test_r15_4(self):
        # 4 = 1+1+1+1 or 4; parts ≡ ±1 mod 5: {1, 4, 6, 9, ...}
        assert rg_delta(1, 5, 4) == 2

    def test_zero(self):
        assert rg_delta(2, 7, 0) == 1

    def test_r25_7(self):
        # 7; 3+2+2
        assert rg_delta(2, 5, 7) == 2

    def test_bad_params(self):
        with pytest.raises(ValueError):
            rg_delta(3, 5, 2)

    def test_cache_growth(self):
        assert rg_delta(1, 5, 10) == rg_delta(1, 5, 10)
        big = rg_delta(1, 5, 300)
        assert big > 0


class TestOracle:
    def test_unfiltered(self):
        assert oracle_count(None, 4) == 5

    def test_odd_parts(self):
        assert oracle_count(lambda p: p % 2 == 1, 5) == 3

    def test_zero(self):
        assert oracle_count(None, 0) == 1

    def test_bound(self):
        with pytest.raises(ValueError, match="oracle bound exceeded"):
            oracle_count(None, 81)

    def test_matches_p_small(self):
        for n in range(25):
            assert oracle_count(None, n) == partition_p(n)

    def test_matches_b_and_r_small(self):
        for n in range(25):
            assert oracle_count(lambda p: p % 3 != 0, n) == regular_partitions_b(3, n)
            assert oracle_count(lambda p: p % 5 in (1, 4), n) == rg_delta(1, 5, n)


class TestSequenceObjects:
    def test_from_series(self):
        m = qseries.j_e4_cubed(10)
        seq = sequence_from_series(m, "coeffs:jE4^3")
        assert seq.term(-1) == 1
        assert seq.term(0) == 1464

    def test_from_series_zero(self):
        z = qseries.TruncatedLaurentSeries(0, (0, 0, 0), 3)
        seq = sequence_from_series(z, "zero")
        assert [seq.term(i) for i in range(3)] == [0, 0, 0]

    def test_from_series_out_of_range(self):
        seq = sequence_from_series(qseries.eta_series(5), "eta")
        with pytest.raises(ValueError, match="range exceeds precision"):
            seq.term(5)

    def test_inflated_eta_quotient_gives_b2(self):
        seq = resolve_sequence("eta_quotient:24:-1,48:1")
        for n in range(21):
            assert seq.term(24 * n) == regular_partitions_b(2, n)

    def test_determinism(self):
        a = resolve_sequence("p")
        b = resolve_sequence("p")
        assert a.terms(0, 50) == b.terms(0, 50)


class TestSelectors:
    def test_p(self):
        assert resolve_sequence("p").term(4) == 5

    def test_bs(self):
        assert resolve_sequence("b_s:2").term(5) == 3

    def test_r(self):
        assert resolve_sequence("r:2,5").term(7) == 2

    def test_rr_sum(self):
        assert resolve_sequence("rr_sum:0").terms(0, 7) == [1, 1, 1, 1, 2, 2, 3, 3]

    def test_j_e4_cubed(self):
        seq = resolve_sequence("jE4cubed")
        assert seq.first_index == -1
        assert seq.terms(-1, 2) == [1, 1464, 911844, 313589120]

    @pytest.mark.parametrize("bad", ["q", "b_s:1", "r:9,5", "rr_sum:2", "r:1;5"])
    def test_bad_selectors(self, bad):
        with pytest.raises(KeyError):
            resolve_sequence(bad)
