import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from partition_identities.bijection import (
    BijectionError,
    forward,
    inverse,
    rows_from_residues,
    t_fold_conjugate,
)
from partition_identities.enumeration import C_st, D_st, enumerate_partitions
from partition_identities.partitions import Partition, SemigroupParams, class_vector, is_in_D_st

PI = (84, 70, 66, 46, 40, 38, 35, 14, 10, 8, 7, 4, 2)
PI3 = (101, 77, 67, 56, 47, 45, 17, 8, 4, 2)


def test_t_fold_conjugate_examples():
    assert t_fold_conjugate((35, 14, 7), 7) == (21, 14, 7, 7, 7)
    assert t_fold_conjugate((), 7) == ()
    assert t_fold_conjugate((7,), 7) == (7,)
    with pytest.raises(ValueError):
        t_fold_conjugate((15, 7), 7)


@settings(max_examples=300)
@given(st.integers(2, 9), st.sets(st.integers(1, 10), max_size=6))
def test_t_fold_conjugate_is_an_involution(t, heights):
    blocks = tuple(sorted((t * u for u in heights), reverse=True))
    rows = t_fold_conjugate(blocks, t)
    assert sum(rows) == sum(blocks)
    assert t_fold_conjugate(rows, t) == blocks
    # distinct inputs give rows that step down by 0 or t and end at t
    steps = [rows[i] - rows[i + 1] for i in range(len(rows) - 1)]
    assert set(steps) <= {0, t}
    assert not rows or rows[-1] == t


def test_worked_example_forward():
    pi3, tr = forward(PI, 2, 7)
    assert pi3.parts == PI3
    assert tr.pi1.parts == (66, 46, 40, 38, 10, 8, 4, 2)
    assert tr.pi2.parts == (84, 70, 35, 14, 7)
    assert tr.p == 8 and tr.threshold == 56
    assert tr.pi5.parts == (84, 70) and tr.k == 2
    assert tr.pi4.parts == (35, 14, 7)
    assert tr.pi4_star == (21, 14, 7, 7, 7)
    assert tr.pi6.parts == (87, 60, 47, 45, 17, 8, 4, 2)
    assert tr.offsets == (63, 56, 49, 42, 35, 28, 21, 14, 7, 0)
    assert tr.strings == (
        (21, 14, 38, 18, 12, 17, -4, -6, -3, 2),
        (21, 38, 18, 14, 12, 17, -4, -6, -3, 2),
        (38, 21, 18, 14, 12, 17, -4, -6, -3, 2),
    )


def test_worked_example_inverse():
    pi, tr = inverse(PI3, 2, 7)
    assert pi.parts == PI
    assert tr.pi6.parts == (87, 60, 47, 45, 17, 8, 4, 2)
    assert tr.pi5.parts == (84, 70)
    assert tr.pi4_star == (21, 14, 7, 7, 7)
    assert tr.pi4.parts == (35, 14, 7)
    assert rows_from_residues((87, 60, 47, 45, 17, 8, 4, 2), 2, 7) == (21, 14, 7, 7, 7)


@pytest.mark.parametrize("s,t,pi", [(2, 7, (66, 46, 4)), (3, 5, (12, 9, 3)), (2, 3, (8, 4, 2))])
def test_no_multiples_of_t_is_a_fixed_point(s, t, pi):
    assert forward(pi, s, t)[0].parts == pi
    assert inverse(pi, s, t)[0].parts == pi


def test_equal_shifted_values_do_not_pass_each_other():
    pi3, tr = forward((6, 3), 2, 3)
    assert pi3.parts == (6, 3)
    assert tr.s0 == (3, 3) and tr.sf == (3, 3)
    assert inverse((6, 3), 2, 3)[0].parts == (6, 3)


def test_tie_with_larger_entry_behind():
    # both shifted multiples equal 6 and must slide past the 20 together
    pi3, tr = forward((20, 12, 9), 2, 3)
    assert tr.s0 == (6, 6, 20)
    assert tr.sf == (20, 6, 6)
    assert pi3.parts == (26, 9, 6)
    assert is_in_D_st(pi3, SemigroupParams(2, 3))
    assert inverse(pi3, 2, 3)[0].parts == (20, 12, 9)


def test_invalid_inputs_are_rejected():
    with pytest.raises(ValueError):
        forward((5,), 2, 7)
    with pytest.raises(ValueError):
        inverse((5, 4), 2, 3)
    with pytest.raises(ValueError):
        forward((6, 3), 2, 4)


def test_round_trip_and_image_at_2_3():
    s, t = 2, 3
    params = SemigroupParams(s, t)
    for n in range(41):
        cs = enumerate_partitions(n, C_st(s, t))
        image = {}
        for pi in cs:
            pi3, tr = forward(pi, s, t)
            assert pi3.weight == n
            assert class_vector(pi, params, "C") == class_vector(pi3, params, "D")
            assert inverse(pi3, s, t)[0] == pi
            image[pi3] = pi
        assert len(image) == len(cs)
        ds = enumerate_partitions(n, D_st(s, t))
        assert set(image) == set(ds)
        for pi3 in ds:
            assert forward(inverse(pi3, s, t)[0], s, t)[0] == pi3


@pytest.mark.parametrize("s,t", [(2, 5), (2, 7), (3, 5)])
def test_forward_is_injective_into_D(s, t):
    params = SemigroupParams(s, t)
    for n in range(31):
        seen = set()
        for pi in enumerate_partitions(n, C_st(s, t)):
            pi3, _ = forward(pi, s, t)
            assert is_in_D_st(pi3, params)
            assert class_vector(pi, params, "C") == class_vector(pi3, params, "D")
            assert inverse(pi3, s, t)[0] == pi
            assert pi3 not in seen
            seen.add(pi3)


@pytest.mark.parametrize("s,t,pi3", [(2, 5, (13, 11, 5)), (2, 7, (17, 15, 7)), (3, 5, (8, 5)), (3, 4, (7, 4))])
def test_D_members_outside_the_image(s, t, pi3):
    assert is_in_D_st(pi3, SemigroupParams(s, t))
    with pytest.raises(BijectionError):
        inverse(pi3, s, t)


def test_even_t_leaves_D():
    pi3, _ = forward((6, 3), 3, 4)
    assert pi3.parts == (6, 3)
    assert not is_in_D_st(pi3, SemigroupParams(3, 4))


@pytest.mark.parametrize("s,t", [(2, 3), (2, 5), (2, 7), (3, 4), (3, 5)])
def test_adding_rows_changes_gaps_by_multiples_of_t(s, t):
    for n in range(31):
        for pi in enumerate_partitions(n, C_st(s, t)):
            _, tr = forward(pi, s, t)
            a, a2 = tr.pi1.parts, tr.pi6.parts
            for i in range(len(a) - 1):
                assert ((a2[i] - a2[i + 1]) - (a[i] - a[i + 1])) % t == 0
            tr.check()


def test_trace_serialises():
    _, tr = forward(PI, 2, 7)
    d = tr.as_dict()
    assert d["pi3"] == list(PI3)
    assert d["strings"][0] == [21, 14, 38, 18, 12, 17, -4, -6, -3, 2]
    assert isinstance(Partition(tuple(d["pi"])), Partition)
