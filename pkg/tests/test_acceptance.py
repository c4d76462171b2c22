"""Acceptance suite: every criterion checked exactly, one summary line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
criteria complete. All assertions are exact integer or polynomial
equalities; there are no tolerances anywhere.
"""
from itertools import combinations

import pytest

from skewsign import (
    PartialPermutation,
    Partition,
    SkewShape,
    Tableau,
    check_corollary_square,
    check_corollary_vanish,
    check_counting_identity,
    check_roundtrip,
    check_theorem8,
    check_theorem_inout,
    check_theorem_main,
    complete,
    enumerate_inner_subshapes,
    enumerate_partitions,
    fourlings,
    horizontal_dominoes,
    reading_word,
    row_sign,
    signed_sum_fixed_positions,
    skew,
    tableau_invsign,
    tableau_sign,
    vertical_dominoes,
)
from skewsign.tableaux import inversions

from oracles import (
    brute_signed_sum,
    max_horizontal_domino_packing,
    max_square_packing,
    max_vertical_domino_packing,
)

ANCHOR = Partition((3, 2, 1))
ANCHOR_SUBSHAPES = [
    mu for k in range(ANCHOR.size + 1) for mu in enumerate_inner_subshapes(ANCHOR, k)
]
GRID = [(alpha, n) for alpha in ANCHOR_SUBSHAPES for n in (1, 2, 3, 4)]


def report(number: int, label: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[criterion {number:2d}] {status}: {label}{suffix}")
    assert ok, f"criterion {number}: {label}{suffix}"


@pytest.fixture(scope="module")
def theorem_main_reports():
    return {
        (alpha.parts, n): check_theorem_main(alpha, n, check_ledgers=True)
        for alpha, n in GRID
    }


def test_criterion_01_worked_tableau_example():
    t = Tableau(
        skew((6, 4, 2, 2, 1), (4, 3, 2)),
        {(1, 5): 1, (1, 6): 4, (2, 4): 3, (4, 1): 2, (4, 2): 6, (5, 1): 5},
    )
    word = reading_word(t)
    ok = (
        word == (1, 4, 3, 2, 6, 5)
        and inversions(word) == 4
        and tableau_sign(t) == 1
        and tableau_invsign(t) == -1
    )
    report(1, "six-cell worked example: 4 inversions, sign +1, inverse sign -1", ok)


def test_criterion_02_completion_example():
    pi = PartialPermutation((1, 2, 4), (4, 2, 3), 5)
    ok = complete(pi, 5).images == (4, 2, 1, 3, 5)
    report(2, "completion of (124/423) with n=5 is 42135", ok)


def test_criterion_03_sign_transfer_exhaustive(theorem_main_reports):
    instances = 0
    ok = True
    for (alpha_parts, n), rep in theorem_main_reports.items():
        instances += rep.instances
        non_ledger = [v for v in rep.violations if v["kind"] != "ledger"]
        if non_ledger or rep.lhs != rep.rhs:
            ok = False
    report(
        3,
        "sign transfer over all anchors in (3,2,1), n <= 4; images distinct, "
        "counts match",
        ok,
        f"{instances} triples",
    )


def test_criterion_04_roundtrip_both_directions():
    instances = 0
    ok = True
    for alpha, n in GRID:
        rep = check_roundtrip(alpha, n)
        instances += rep.instances
        ok = ok and rep.passed
    report(4, "reverse-forward and forward-reverse are identities", ok, f"{instances} runs")


def test_criterion_05_step_ledgers(theorem_main_reports):
    failures = sum(
        1
        for rep in theorem_main_reports.values()
        for v in rep.violations
        if v["kind"] == "ledger"
    )
    report(5, "external and internal sign ledgers hold at every step", failures == 0)


def test_criterion_06_inout_identity():
    ok = True
    checked = 0
    for size in range(7):
        for alpha in enumerate_partitions(size):
            for n in range(1, 6):
                rep = check_theorem_inout(alpha, n)
                checked += 1
                ok = ok and rep.passed
    report(6, "in/out identity for all |alpha| <= 6, n <= 5", ok, f"{checked} sums")


def test_criterion_07_sign_balance_totals():
    ok = True
    for n in range(2, 8):
        rep = check_theorem_inout(Partition(), n)
        ok = ok and rep.passed and rep.lhs == 0
    report(7, "signed squared-imbalance totals vanish for 2 <= n <= 7", ok)


def test_criterion_08_corollaries():
    ok = True
    squares = vanishes = 0
    for size in range(1, 7):
        for alpha in enumerate_partitions(size):
            squares += 1
            ok = ok and check_corollary_square(alpha).passed
    for size in range(5):
        for alpha in enumerate_partitions(size):
            threshold = size + 2 if size % 2 == 0 else size
            for m in range(max(threshold, 1), 7):
                vanishes += 1
                rep = check_corollary_vanish(alpha, m)
                ok = ok and rep.passed and rep.lhs == 0
    report(
        8,
        "squared-imbalance formula (1 <= |alpha| <= 6) and vanishing sums "
        "(|alpha| <= 4, m <= 6)",
        ok,
        f"{squares} squares, {vanishes} vanishing sums",
    )


def test_criterion_09_generating_identities():
    ok = True
    for n in range(9):
        rep = check_theorem8(n)
        ok = ok and rep.passed
    report(
        9,
        "weighted imbalance polynomial equals (q+x)^floor(n/2) and signed "
        "square sums vanish, n <= 8",
        ok,
    )


def test_criterion_10_signed_sum_closed_form():
    ok = True
    checked = 0
    for n in range(1, 7):
        for k in range(n + 1):
            for subset in combinations(range(1, n + 1), k):
                checked += 1
                if signed_sum_fixed_positions(n, subset) != brute_signed_sum(n, subset):
                    ok = False
    report(10, "signed-sum closed form matches brute force for n <= 6", ok, f"{checked} subsets")


def test_criterion_11_packing_statistics():
    ok = True
    shapes = 0
    for size in range(11):
        for lam in enumerate_partitions(size):
            shapes += 1
            ok = ok and vertical_dominoes(lam) == max_vertical_domino_packing(lam)
            ok = ok and horizontal_dominoes(lam) == max_horizontal_domino_packing(lam)
            ok = ok and fourlings(lam) == max_square_packing(lam)
            ok = ok and row_sign(SkewShape(lam, Partition())) == (-1) ** vertical_dominoes(lam)
    report(11, "packing statistics match exhaustive search for |shape| <= 10", ok, f"{shapes} shapes")


def test_criterion_12_counting_identity():
    ok = True
    checked = 0
    anchors = [
        mu for k in range(4) for mu in enumerate_inner_subshapes(Partition((2, 1)), k)
    ]
    for alpha in anchors:
        for beta in anchors:
            for n in range(4):
                for m in range(4):
                    checked += 1
                    ok = ok and check_counting_identity(alpha, beta, n, m).passed
    report(12, "tableau-count identity for alpha, beta in (2,1), n, m <= 3", ok, f"{checked} cases")
