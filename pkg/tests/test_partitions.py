import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partition_identities.partitions import (
    ClassVector,
    Partition,
    SemigroupParams,
    class_vector,
    d0_f_values,
    d0_ok,
    gap_set,
    in_W,
    is_in_C_st,
    is_in_C_t,
    is_in_D_st,
    is_in_D_t,
    parse_partition,
)

import oracles

PI = (84, 70, 66, 46, 40, 38, 35, 14, 10, 8, 7, 4, 2)
PI3 = (101, 77, 67, 56, 47, 45, 17, 8, 4, 2)
GRID = [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)]


def test_partition_rejects_unsorted_or_repeated():
    with pytest.raises(ValueError):
        Partition((3, 5))
    with pytest.raises(ValueError):
        Partition((4, 4))
    with pytest.raises(ValueError):
        Partition((3, 0))
    assert Partition(()).weight == 0
    assert Partition.from_parts([2, 9, 5]).parts == (9, 5, 2)
    assert parse_partition("84,70,66").weight == 220


def test_in_W_examples():
    params = SemigroupParams(2, 7)
    assert in_W(0, params)
    assert not in_W(5, params)
    assert in_W(9, params)


def test_gap_set_examples():
    # expected values come from the brute-force oracle, not the package
    assert oracles.gaps(2, 7) == {1, 3, 5}
    assert gap_set(2, 7) == {1, 3, 5}
    assert oracles.gaps(2, 3) == {1}
    assert gap_set(2, 3) == {1}
    assert max(gap_set(3, 5)) == (3 - 1) * (5 - 1) - 1 == 7


@pytest.mark.parametrize("s,t", [(2, 4), (6, 9), (1, 5), (3, 1)])
def test_gap_set_rejects_bad_parameters(s, t):
    with pytest.raises(ValueError):
        gap_set(s, t)


@pytest.mark.parametrize("s,t", GRID + [(4, 7), (5, 6), (7, 9)])
def test_W_and_gaps_partition_small_integers(s, t):
    params = SemigroupParams(s, t)
    U = gap_set(s, t)
    assert U == oracles.gaps(s, t)
    assert max(U) == (s - 1) * (t - 1) - 1
    for x in range((s - 1) * (t - 1) + 1):
        assert in_W(x, params) != (x in U)
    for x in range((s - 1) * (t - 1), (s - 1) * (t - 1) + 3 * s * t):
        assert in_W(x, params)


def test_C_t_examples():
    assert is_in_C_t((9,), 3)
    assert not is_in_C_t((5, 4), 3)
    assert is_in_C_t((14, 8, 6), 7)


def test_D_t_examples():
    for p in [(9,), (7, 2), (6, 3)]:
        assert is_in_D_t(p, 3)
    assert not is_in_D_t((5, 4), 3)
    assert not is_in_D_t((21, 20), 7)
    assert not is_in_D_t((7, 1), 3)


def forbidden_pairs(t, j):
    """The eight forbidden adjacent configurations, as (smaller, larger)."""
    return [
        (j, j),
        (t * j - 1, t * j),
        (t * j - 1, t * j + t - 1),
        (t * j, t * j + 1),
        (t * j, t * j + t - 1),
        (t * j + 1, t * j + t - 1),
        (t * j + 1, t * j + t),
        (t * j + 1, t * j + t + 1),
    ]


@pytest.mark.parametrize("t", range(3, 9))
def test_forbidden_configurations_rejected(t):
    for j in range(1, 11):
        for lo, hi in forbidden_pairs(t, j):
            pair = (hi, lo)
            assert not is_in_D_t(pair, t)
            # embed under a large admissible part far above the pair
            top = t * (j + 5)
            assert is_in_D_t((top,), t)
            assert not is_in_D_t((top,) + pair, t)


@pytest.mark.parametrize("t", range(3, 8))
def test_adjacent_check_agrees_with_all_pairs(t):
    for n in range(51):
        for p in oracles.distinct_partitions(n):
            assert is_in_D_t(p, t) == is_in_D_t(p, t, all_pairs=True), p


def test_C_st_examples():
    params = SemigroupParams(2, 7)
    assert is_in_C_st(PI, params)
    assert is_in_C_st((), params)
    assert not is_in_C_st((5,), params)


def test_D_st_examples():
    assert is_in_D_st(PI3, SemigroupParams(2, 7))
    p23 = SemigroupParams(2, 3)
    assert is_in_D_st((9, 6, 3), p23)
    assert is_in_D_st((6, 3), p23)
    assert not is_in_D_st((5, 4), p23)


def test_D_st_condition_subsets():
    p25 = SemigroupParams(2, 5)
    # (10,4,2): 10 sits at position 1 of 3 and 10 > 5*2 fails
    assert not is_in_D_st((10, 4, 2), p25)
    assert is_in_D_st((10, 4, 2), p25, {"D0", "D1", "D3"})
    with pytest.raises(ValueError):
        is_in_D_st((10,), p25, {"D7"})


@pytest.mark.parametrize("s,t", GRID)
def test_D_st_matches_literal_transcription(s, t):
    params = SemigroupParams(s, t)
    for n in range(31):
        for p in oracles.distinct_partitions(n):
            assert is_in_D_st(p, params) == oracles.in_D_st(p, s, t), p
            assert is_in_C_st(p, params) == oracles.in_C_st(p, s, t), p


def test_d0_f_values_examples():
    assert d0_f_values(PI3, 7) == (87, 60, 47, 45, 17, 8, 4, 2)
    assert d0_f_values((9,), 3) == ()
    assert d0_f_values((7, 2), 3) == (7, 2)


@settings(max_examples=200)
@given(st.sets(st.integers(1, 60), max_size=10), st.integers(3, 9))
def test_d0_f_values_length(parts, t):
    p = tuple(sorted(parts, reverse=True))
    assert len(d0_f_values(p, t)) == sum(1 for x in p if x % t)


@pytest.mark.parametrize("t", [3, 5, 7])
def test_d0_trivial_when_s_is_2(t):
    for n in range(41):
        for p in oracles.distinct_partitions(n):
            if oracles.in_D_st(p, 2, t, skip=("D0",)):
                assert d0_ok(p, 2, t)


def test_class_vector_examples():
    params = SemigroupParams(2, 7)
    expected = ClassVector((1, 2, 0, 1, 3, 1), 2)
    assert class_vector(PI, params, "C") == expected
    assert class_vector(PI3, params, "D") == expected
    zero = ClassVector((0,) * 6, 0)
    assert class_vector((), params, "C") == zero
    assert class_vector((), params, "D") == zero
    with pytest.raises(ValueError):
        class_vector(PI, params, "E")


@pytest.mark.parametrize("s,t", GRID)
def test_class_vector_weight_consistency(s, t):
    params = SemigroupParams(s, t)
    for n in range(26):
        for p in oracles.distinct_partitions(n):
            for side, member in (("C", oracles.in_C_st), ("D", oracles.in_D_st)):
                if not member(p, s, t):
                    continue
                cv = class_vector(p, params, side)
                total = 0
                for h, count in enumerate(cv.counts, start=1):
                    cls = [x for x in p if x % t and (x - h * s) % (s * t if side == "C" else t) == 0]
                    if count:
                        total += count * min(cls)
                assert total <= n
