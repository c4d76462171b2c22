from itertools import combinations

import pytest

from skewsign import (
    Partition,
    SparsePolynomial,
    check_corollary_square,
    check_corollary_vanish,
    check_counting_identity,
    check_roundtrip,
    check_signed_sum,
    check_theorem8,
    check_theorem_inout,
    check_theorem_main,
    run_identity,
    signed_sum_fixed_positions,
)
from skewsign.verify import (
    brute_force_signed_sum,
    enumerate_triples,
    expected_pair_count,
    expected_triple_count,
)

from oracles import brute_signed_sum


class TestSparsePolynomial:
    def test_zero_coefficients_dropped(self):
        p = SparsePolynomial({(1, 0, 0): 0, (0, 0, 1): 2})
        assert p.terms == {(0, 0, 1): 2}

    def test_addition_cancels(self):
        p = SparsePolynomial({(1, 0, 0): 1})
        q = SparsePolynomial({(1, 0, 0): -1})
        assert (p + q).is_zero

    def test_binomial_expansion(self):
        q_plus_x = SparsePolynomial({(1, 0, 0): 1, (0, 0, 1): 1})
        cube = q_plus_x**3
        assert cube.terms == {
            (3, 0, 0): 1,
            (2, 0, 1): 3,
            (1, 0, 2): 3,
            (0, 0, 3): 1,
        }
        assert cube.evaluate(1, 1, 1) == 8

    def test_scalar_multiplication(self):
        p = 3 * SparsePolynomial.monomial(0, 2, 0)
        assert p.terms == {(0, 2, 0): 3}

    def test_str(self):
        p = SparsePolynomial({(1, 0, 0): 1, (0, 0, 1): 1})
        assert str(p) == "q + x"
        assert str(SparsePolynomial()) == "0"


class TestTripleEnumeration:
    def test_counts_match_formula(self):
        for alpha in [Partition(), Partition((1,)), Partition((2, 1))]:
            for n in (1, 2, 3):
                expected = expected_triple_count(alpha, n)
                assert sum(1 for _ in enumerate_triples(alpha, n)) == expected

    def test_triples_unique(self):
        triples = list(enumerate_triples(Partition((2,)), 2))
        assert len(set(triples)) == len(triples)

    def test_domain_and_image_cardinalities_agree(self):
        # the counting consequence of bijectivity, via two independent sums
        from skewsign import enumerate_partitions

        for size in range(5):
            for alpha in enumerate_partitions(size):
                for n in range(1, 5):
                    assert expected_triple_count(alpha, n) == expected_pair_count(
                        alpha, n
                    )


class TestTheoremMain:
    def test_alpha_one_n_one(self):
        report = check_theorem_main(Partition((1,)), 1)
        assert report.passed
        # one external triple (pi = 1/1) and one internal (entry in T and U)
        assert report.instances == expected_triple_count(Partition((1,)), 1) == 2
        assert report.lhs == report.rhs == expected_pair_count(Partition((1,)), 1) == 2

    def test_empty_alpha_reduces_to_full_permutations(self):
        report = check_theorem_main(Partition(), 2)
        assert report.passed
        assert report.instances == 2  # the two elements of S_2

    def test_empty_alpha_single(self):
        report = check_theorem_main(Partition(), 1)
        assert report.passed and report.instances == 1

    def test_without_ledger_checks(self):
        report = check_theorem_main(Partition((1,)), 2, check_ledgers=False)
        assert report.passed

    def test_workers_parity(self):
        serial = check_theorem_main(Partition((2,)), 3, workers=1)
        sharded = check_theorem_main(Partition((2,)), 3, workers=2)
        assert serial.passed and sharded.passed
        assert (serial.instances, serial.lhs, serial.rhs) == (
            sharded.instances,
            sharded.lhs,
            sharded.rhs,
        )


class TestRoundtrip:
    def test_small_grid(self):
        report = check_roundtrip(Partition((2,)), 2)
        assert report.passed
        # both directions: every triple plus every standard pair
        assert report.instances == 2 * expected_triple_count(Partition((2,)), 2)


class TestInOut:
    def test_alpha_one_n_two(self):
        report = check_theorem_inout(Partition((1,)), 2)
        assert report.passed
        assert report.lhs == 0 and report.rhs == 0

    def test_empty_alpha_balances(self):
        report = check_theorem_inout(Partition(), 2)
        assert report.passed
        assert report.lhs == 0

    def test_odd_n_beyond_alpha_forces_zero(self):
        report = check_theorem_inout(Partition((2, 1)), 5)
        assert report.passed
        assert report.rhs == 0 and report.lhs == 0

    def test_rejects_nonpositive_n(self):
        with pytest.raises(ValueError):
            check_theorem_inout(Partition((1,)), 0)


class TestCorollaries:
    def test_square_even(self):
        report = check_corollary_square(Partition((2,)))
        assert report.passed
        assert report.lhs == 1 and report.rhs == [1, 1]

    def test_square_odd_single_cell(self):
        report = check_corollary_square(Partition((1,)))
        assert report.passed and report.lhs == 1

    def test_square_odd_three_cells(self):
        report = check_corollary_square(Partition((2, 1)))
        assert report.passed
        assert report.lhs == 0  # the hook shape is sign-balanced

    def test_square_rejects_empty(self):
        with pytest.raises(ValueError):
            check_corollary_square(Partition())

    @pytest.mark.parametrize(
        "alpha,m",
        [((1,), 1), ((2,), 4), ((1,), 3)],
    )
    def test_vanish(self, alpha, m):
        report = check_corollary_vanish(Partition(alpha), m)
        assert report.passed and report.lhs == 0

    @pytest.mark.parametrize("alpha,m", [((2,), 3), ((2, 1), 2)])
    def test_vanish_range_rejected(self, alpha, m):
        with pytest.raises(ValueError):
            check_corollary_vanish(Partition(alpha), m)


class TestSignedSum:
    @pytest.mark.parametrize(
        "n,indices,expected",
        [(3, (1, 2), 1), (4, (1, 2, 3, 4), 1), (2, (1,), 0), (1, (), 1), (5, (2, 4), 0)],
    )
    def test_closed_form_values(self, n, indices, expected):
        assert signed_sum_fixed_positions(n, indices) == expected
        assert brute_signed_sum(n, indices) == expected

    def test_matches_independent_oracle(self):
        for n in range(1, 6):
            for k in range(n + 1):
                for subset in combinations(range(1, n + 1), k):
                    assert signed_sum_fixed_positions(n, subset) == brute_signed_sum(
                        n, subset
                    )

    def test_check_runs_all_subsets(self):
        report = check_signed_sum(4)
        assert report.passed and report.instances == 16

    def test_internal_brute_force_agrees(self):
        assert brute_force_signed_sum(3, (1, 2)) == 1
        assert brute_force_signed_sum(2, (1,)) == 0

    def test_rejects_bad_indices(self):
        with pytest.raises(ValueError):
            signed_sum_fixed_positions(3, (0,))
        with pytest.raises(ValueError):
            signed_sum_fixed_positions(0, ())


class TestTheorem8:
    def test_n_three(self):
        report = check_theorem8(3)
        assert report.passed
        assert report.lhs == "q + x"

    def test_n_zero(self):
        report = check_theorem8(0)
        assert report.passed
        assert report.lhs == "1"

    def test_n_four_signed_square_sum_vanishes(self):
        assert check_theorem8(4).passed

    def test_n_five_skips_part_b(self):
        # 5 = 1 mod 4: only the weighted-sum identity is claimed
        assert check_theorem8(5).passed

    def test_specialization_counts(self):
        for n in range(7):
            report = check_theorem8(n)
            assert report.passed


class TestCountingIdentity:
    def test_empty_shapes(self):
        report = check_counting_identity(Partition(), Partition(), 2, 2)
        assert report.passed
        assert report.lhs == report.rhs == 2

    def test_zero_sizes(self):
        same = check_counting_identity(Partition((1,)), Partition((1,)), 0, 0)
        assert same.passed and same.lhs == 1
        different = check_counting_identity(Partition((1,)), Partition((2,)), 0, 0)
        assert different.passed and different.lhs == 0

    def test_single_cells(self):
        report = check_counting_identity(Partition((1,)), Partition((1,)), 1, 1)
        assert report.passed

    def test_asymmetric_parameters(self):
        report = check_counting_identity(Partition((1,)), Partition(), 2, 1)
        assert report.passed
        assert report.lhs == report.rhs == 2

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            check_counting_identity(Partition(), Partition(), -1, 0)


class TestRunIdentity:
    def test_dispatch(self):
        report = run_identity("inout", alpha=Partition((1,)), n=2)
        assert report.identity == "inout" and report.passed

    def test_unknown_identity(self):
        with pytest.raises(ValueError, match="unknown identity"):
            run_identity("nope", n=2)

    def test_missing_parameters(self):
        with pytest.raises(ValueError, match="requires parameters"):
            run_identity("theorem-main", n=2)

    def test_report_serialization_omits_timing(self):
        report = run_identity("theorem8", n=2)
        data = report.to_dict()
        assert "wall_time" not in data
        assert data["passed"] is True
        assert "wall_time" in report.to_dict(include_timing=True)
