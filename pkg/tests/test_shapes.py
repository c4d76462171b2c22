import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skewsign import (
    Cell,
    InvalidShapeError,
    Partition,
    SkewShape,
    contains,
    enumerate_inner_subshapes,
    enumerate_outer_extensions,
    enumerate_partitions,
    fourlings,
    horizontal_dominoes,
    row_sign,
    skew,
    vertical_dominoes,
)

from oracles import (
    max_horizontal_domino_packing,
    max_square_packing,
    max_vertical_domino_packing,
    partition_count,
)


partitions_up_to = lambda n: [p for k in range(n + 1) for p in enumerate_partitions(k)]


small_partitions = st.builds(
    Partition,
    st.lists(st.integers(min_value=1, max_value=5), max_size=5).map(
        lambda xs: sorted(xs, reverse=True)
    ),
)


class TestPartition:
    def test_normal_form_strips_zeros(self):
        assert Partition((3, 1, 0, 0)).parts == (3, 1)
        assert Partition(()).parts == ()
        assert Partition((0,)).parts == ()

    def test_rejects_increasing(self):
        with pytest.raises(InvalidShapeError):
            Partition((1, 2))
        with pytest.raises(InvalidShapeError):
            Partition((3, -1))

    def test_size_and_part(self):
        p = Partition((6, 4, 2, 2, 1))
        assert p.size == 15
        assert p.part(1) == 6
        assert p.part(5) == 1
        assert p.part(6) == 0


class TestContains:
    def test_six_cell_skew_example(self):
        assert contains(Partition((4, 3, 2)), Partition((6, 4, 2, 2, 1)))

    def test_empty_in_anything(self):
        assert contains(Partition(), Partition((5, 1)))
        assert contains(Partition(), Partition())

    def test_too_wide(self):
        assert not contains(Partition((3,)), Partition((2, 2)))

    def test_le_operator(self):
        assert Partition((1, 1)) <= Partition((2, 1))
        assert not (Partition((2, 2)) <= Partition((2, 1)))


class TestSkewShape:
    def test_cells_of_worked_example(self):
        shape = skew((6, 4, 2, 2, 1), (4, 3, 2))
        assert shape.cells() == [
            Cell(1, 5),
            Cell(1, 6),
            Cell(2, 4),
            Cell(4, 1),
            Cell(4, 2),
            Cell(5, 1),
        ]
        assert shape.size == 6

    def test_identity_shape_has_no_cells(self):
        lam = Partition((3, 2))
        assert SkewShape(lam, lam).cells() == []

    def test_ordinary_shape_cells(self):
        assert skew((2, 1)).cells() == [Cell(1, 1), Cell(1, 2), Cell(2, 1)]

    def test_equality_needs_both_partitions(self):
        # same cell set, different outer/inner pairs
        a = skew((6, 4, 2, 2, 1), (4, 3, 2))
        b = skew((6, 4, 3, 2, 1), (4, 3, 3))
        assert {tuple(c) for c in a.cells()} == {tuple(c) for c in b.cells()}
        assert a != b

    def test_invalid_containment(self):
        with pytest.raises(InvalidShapeError):
            skew((2,), (3,))

    @pytest.mark.parametrize("outer,inner", [((4, 2, 1), (2, 1)), ((3, 3), (3,))])
    def test_cell_count_matches_sizes(self, outer, inner):
        shape = skew(outer, inner)
        assert len(shape.cells()) == shape.size


class TestDominoStatistics:
    # expected values frozen from the brute-force packing oracle
    @pytest.mark.parametrize(
        "parts,expected", [((1, 1), 1), ((), 0), ((2, 2), 2), ((3, 2, 1), 2)]
    )
    def test_vertical(self, parts, expected):
        assert max_vertical_domino_packing(Partition(parts)) == expected
        assert vertical_dominoes(Partition(parts)) == expected

    @pytest.mark.parametrize(
        "parts,expected", [((3, 2), 2), ((), 0), ((1, 1, 1), 0), ((4, 3), 3)]
    )
    def test_horizontal(self, parts, expected):
        assert max_horizontal_domino_packing(Partition(parts)) == expected
        assert horizontal_dominoes(Partition(parts)) == expected

    @pytest.mark.parametrize(
        "parts,expected", [((2, 2), 1), ((3, 3, 2), 1), ((1,), 0), ((4, 4, 2, 2), 3)]
    )
    def test_fourlings(self, parts, expected):
        assert max_square_packing(Partition(parts)) == expected
        assert fourlings(Partition(parts)) == expected

    def test_all_statistics_match_packing_search(self):
        for lam in partitions_up_to(8):
            assert vertical_dominoes(lam) == max_vertical_domino_packing(lam)
            assert horizontal_dominoes(lam) == max_horizontal_domino_packing(lam)
            assert fourlings(lam) == max_square_packing(lam)

    @given(small_partitions)
    @settings(max_examples=60)
    def test_fourlings_formula_matches_search(self, lam):
        assert fourlings(lam) == max_square_packing(lam)


class TestRowSign:
    def test_direct_cell_sums(self):
        assert row_sign(skew((2, 2), (1,))) == 1  # (1,2),(2,1),(2,2): sum 2
        assert row_sign(skew((1, 1))) == -1  # (1,1),(2,1): sum 1

    def test_empty_shape(self):
        lam = Partition((3, 1))
        assert row_sign(SkewShape(lam, lam)) == 1

    def test_ordinary_shapes_match_vertical_dominoes(self):
        for lam in partitions_up_to(10):
            assert row_sign(SkewShape(lam, Partition())) == (-1) ** vertical_dominoes(lam)


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(0, 1), (4, 5), (8, 22)])
    def test_partition_counts(self, n, count):
        assert partition_count(n) == count
        assert sum(1 for _ in enumerate_partitions(n)) == count

    def test_partition_order_is_decreasing_lex(self):
        got = [p.parts for p in enumerate_partitions(4)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]

    def test_no_duplicates(self):
        for n in range(9):
            ps = [p.parts for p in enumerate_partitions(n)]
            assert len(ps) == len(set(ps))

    def test_outer_extensions(self):
        got = [p.parts for p in enumerate_outer_extensions(Partition((1,)), 2)]
        assert got == [(3,), (2, 1), (1, 1, 1)]
        got = [p.parts for p in enumerate_outer_extensions(Partition((2,)), 2)]
        assert got == [(4,), (3, 1), (2, 2), (2, 1, 1)]

    def test_outer_extensions_zero(self):
        alpha = Partition((2, 1))
        assert list(enumerate_outer_extensions(alpha, 0)) == [alpha]

    def test_outer_extensions_match_containment_filter(self):
        for alpha in [Partition((2,)), Partition((2, 1)), Partition((3, 1))]:
            for n in range(4):
                expected = [
                    lam
                    for lam in enumerate_partitions(alpha.size + n)
                    if contains(alpha, lam)
                ]
                assert list(enumerate_outer_extensions(alpha, n)) == expected

    def test_inner_subshapes(self):
        got = [p.parts for p in enumerate_inner_subshapes(Partition((2, 1)), 1)]
        assert got == [(2,), (1, 1)]
        alpha = Partition((3, 2))
        assert list(enumerate_inner_subshapes(alpha, 0)) == [alpha]
        assert list(enumerate_inner_subshapes(Partition((1,)), 2)) == []
