from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from golden import CELLS_16_7, CELLS_11_7, CELLS_16_11
from oracles import all_two_symbol_words, naive_period, words_on_grid
from seqapport.analysis import rle_decode
from seqapport.two_party import (
    CellIndex,
    CutpointRegion,
    RunLengths,
    backward_cell,
    decompose,
    dhondt_runs,
    enumerate_two_party,
    infer_cutpoint,
    runs_for_cell,
    runs_for_cut,
    runs_from_prefix_sums,
    validate_runs,
)

COPRIME_PAIRS = [(p1, p2) for p1 in range(1, 21) for p2 in range(1, p1 + 1) if gcd(p1, p2) == 1]
cuts = st.fractions(min_value=0, max_value=1, max_denominator=200)
pairs = st.sampled_from([pr for pr in COPRIME_PAIRS if pr[0] > pr[1]])


def cells_16_7_runs(row):
    return RunLengths.from_word(rle_decode(CELLS_16_7[row][1]))


@pytest.mark.parametrize(
    "v, expected",
    [((16, 7), (16, 7, 1, 2, 2)), ((32, 14), (16, 7, 2, 2, 2)), ((5, 5), (1, 1, 5, 1, 0))],
)
def test_decompose(v, expected):
    d = decompose(*v)
    assert (d.p1, d.p2, d.g, d.a, d.b) == expected


def test_decompose_rejects():
    with pytest.raises(ValueError):
        decompose(3, 5)
    with pytest.raises(ValueError):
        decompose(3, 0)


@pytest.mark.parametrize(
    "v, c, k, tail",
    [
        ((16, 7), 0, (1, 2, 2, 2, 3, 2, 2), 2),
        ((16, 7), 1, (2, 2, 2, 3, 2, 2, 3), 0),
        ((8, 7), Fraction(1, 2), (1,) * 7, 1),
        ((16, 7), Fraction(1, 9), (1, 2, 2, 3, 2, 2, 2), 2),
    ],
)
def test_runs_for_cut(v, c, k, tail):
    assert runs_for_cut(decompose(*v), c) == RunLengths(k, tail)


def test_runs_for_cell_16_7():
    d = decompose(16, 7)
    assert runs_for_cell(d, 0) == cells_16_7_runs(0)
    assert runs_for_cell(d, 8) == RunLengths((2, 2, 2, 3, 2, 2, 2), 1)


@pytest.mark.parametrize("a", [2, 3, 5])
@pytest.mark.parametrize("lp, positions", [(0, [5]), (1, [4]), (2, [4, 7]), (3, [3, 7]), (4, [3, 6]), (5, [2, 6]), (6, [2, 5])])
def test_runs_for_cell_seven_pattern(a, lp, positions):
    # p1 = 7a + 2: the long runs move with l' only, whatever k1 is
    d = decompose(7 * a + 2, 7)
    for nu in range(0, (d.gap - lp - 1) // 7 + 1):
        runs = runs_for_cell(d, CellIndex.of(nu * 7 + lp, 7))
        assert runs.k[0] == nu + 1
        assert [i for i in range(2, 8) if runs.k[i - 1] == a + 1] == positions


def test_runs_for_cell_rejects():
    with pytest.raises(ValueError):
        runs_for_cell(decompose(16, 7), 9)


@pytest.mark.parametrize(
    "v, k",
    [((16, 7), (2, 2, 2, 3, 2, 2, 3)), ((2, 1), (2,)), ((8, 7), (1, 1, 1, 1, 1, 1, 2)), ((1, 1), (1,))],
)
def test_dhondt_runs(v, k):
    d = decompose(*v)
    assert dhondt_runs(d) == RunLengths(k, 0)
    assert dhondt_runs(d) == runs_for_cut(d, 1)


def test_validate_examples():
    d = decompose(16, 7)
    assert validate_runs(d, cells_16_7_runs(2))
    assert not validate_runs(d, RunLengths((1, 4, 2, 2, 2, 2, 2), 1))
    assert not validate_runs(d, RunLengths((0, 2, 2, 3, 2, 2, 3), 2))
    with pytest.raises(ValueError):
        validate_runs(d, RunLengths((2, 2), 12))


@pytest.mark.parametrize("p1, p2", [pr for pr in COPRIME_PAIRS if pr[0] + pr[1] <= 15])
def test_validate_matches_exhaustive_oracle(p1, p2):
    # realizable words are exactly the periods seen on a grid fine enough to hit every cell
    seen = words_on_grid((p1, p2), 4 * max(p1 - p2, 1))
    d = decompose(p1, p2)
    for word in all_two_symbol_words(p1, p2):
        assert validate_runs(d, RunLengths.from_word(word)) == (word in seen), word


def test_infer_examples():
    d = decompose(16, 7)
    assert infer_cutpoint(d, cells_16_7_runs(1)) == CutpointRegion.interval(Fraction(1, 9), Fraction(2, 9))
    assert infer_cutpoint(d, dhondt_runs(d)) == CutpointRegion.point1()
    assert infer_cutpoint(d, RunLengths.from_word(rle_decode("2 1^2 2 1^2 2 1^3 2 1^2 2 1^2 2 1^2 2 1^3"))) is None


def test_cells_16_7():
    rows = enumerate_two_party(16, 7)
    assert len(rows) == 10
    for (region, runs), (cell, text) in zip(rows, CELLS_16_7):
        expected_region = CutpointRegion.point1() if cell is None else CutpointRegion.interval(*cell)
        assert region == expected_region
        assert runs.word() == rle_decode(text)


@pytest.mark.parametrize("v, table", [((16, 11), CELLS_16_11), ((11, 7), CELLS_11_7)])
def test_pairwise_cells_of_16_11_7(v, table):
    rows = enumerate_two_party(*v)
    assert [r for r, _ in rows] == [
        CutpointRegion.point1() if cell is None else CutpointRegion.interval(*cell) for cell, _ in table
    ]
    big, small = (1, 2) if v == (16, 11) else (2, 3)
    assert [runs.word(big, small) for _, runs in rows] == [rle_decode(text) for _, text in table]


@pytest.mark.parametrize(
    "v, expected",
    [
        ((2, 1), [(CutpointRegion.interval(0, 1), (1, 2, 1)), (CutpointRegion.point1(), (1, 1, 2))]),
        ((14, 14), [(CutpointRegion.whole(), (1, 2))]),
        ((8, 7), [(CutpointRegion.interval(0, 1), (1, 2) * 7 + (1,)), (CutpointRegion.point1(), (1, 2) * 6 + (1, 1, 2))]),
    ],
)
def test_enumerate_small(v, expected):
    assert [(r, runs.word()) for r, runs in enumerate_two_party(*v)] == expected


def test_two_one_at_half_differs_from_dhondt():
    # the definition gives 1 2 1 for every c < 1, and 1 1 2 only at c = 1
    assert naive_period((2, 1), Fraction(1, 2)) == (1, 2, 1)
    assert naive_period((2, 1), 0) == (1, 2, 1)
    assert naive_period((2, 1), 1) == (1, 1, 2)


@pytest.mark.parametrize("p1, p2", COPRIME_PAIRS)
def test_enumeration_matches_engine(p1, p2):
    rows = enumerate_two_party(p1, p2)
    words = [runs.word() for _, runs in rows]
    if p1 > p2:
        assert len(rows) == p1 - p2 + 1
    assert len(set(words)) == len(words)
    assert words == sorted(words, reverse=True)
    for region, runs in rows:
        assert runs.word() == naive_period((p1, p2), region.representative())
        if p1 > p2:
            assert (2, 2) not in zip(runs.word(), runs.word()[1:])
    # regions tile [0, 1]
    assert rows[0][0].lo == 0
    for (r1, _), (r2, _) in zip(rows, rows[1:]):
        assert r1.hi == r2.lo


@given(pairs, cuts)
def test_closed_form_matches_engine(pr, c):
    d = decompose(*pr)
    runs = runs_for_cut(d, c)
    assert runs.word() == naive_period(pr, c)
    assert runs == runs_from_prefix_sums(d, c)


@given(pairs, cuts)
def test_infer_round_trip(pr, c):
    d = decompose(*pr)
    region = infer_cutpoint(d, runs_for_cut(d, c))
    assert region is not None and c in region
    assert runs_for_cut(d, region.representative()) == runs_for_cut(d, c)


@given(pairs, cuts)
def test_cell_form_matches_cut_form(pr, c):
    d = decompose(*pr)
    if c == 1:
        return
    cell = CellIndex.of(int(c * d.gap), d.p2)
    assert runs_for_cell(d, cell) == runs_for_cut(d, c)


@given(pairs, cuts)
def test_backward_cell(pr, c):
    d = decompose(*pr)
    if c == 1:
        return
    runs = runs_for_cut(d, c)
    assert backward_cell(d, runs).l == int(c * d.gap)


@given(pairs, cuts)
def test_long_run_count(pr, c):
    d = decompose(*pr)
    if d.b == 0 or c == 1:
        return
    runs = runs_for_cut(d, c)
    assert sum(1 for k in runs.k[1:] if k == d.a + 1) <= d.b
    assert all(k in (d.a, d.a + 1) for k in runs.k[1:])


def test_region_text_round_trip():
    for region in (CutpointRegion.interval(Fraction(1, 9), Fraction(2, 9)), CutpointRegion.point1(), CutpointRegion.whole()):
        assert CutpointRegion.parse(str(region)) == region
    assert str(CutpointRegion.interval(0, Fraction(1, 9))) == "[0/1, 1/9)"


def test_region_intersection():
    a = CutpointRegion.interval(Fraction(1, 5), Fraction(2, 5))
    b = CutpointRegion.interval(Fraction(2, 9), Fraction(1, 3))
    assert a.intersect(b) == CutpointRegion.interval(Fraction(2, 9), Fraction(1, 3))
    assert CutpointRegion.interval(0, 1).intersect(CutpointRegion.point1()) is None
    assert CutpointRegion.whole().intersect(CutpointRegion.point1()) == CutpointRegion.point1()
    with pytest.raises(ValueError):
        CutpointRegion.interval(Fraction(1, 2), Fraction(1, 2))
