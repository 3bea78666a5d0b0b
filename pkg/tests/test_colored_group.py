import pytest
from hypothesis import given, settings as hypothesis_settings

from app.core.errors import CapExceededError, GroupMismatchError, TranspositionError, WindowParseError
from app.services.colored_group import (
    apply_transposition,
    coxeter_generators,
    cycle_decomposition,
    enumerate_even_signed,
    enumerate_group,
    format_window,
    from_cycles,
    identity,
    inverse,
    is_even_signed,
    latex_window,
    multiply,
    multiply_all,
    parse_window,
    reflection_generators,
    reflection_generators_D,
    reverse,
    transposition,
)
from tests.conftest import P3, colored_permutations, groups_of_three


def test_parse_window_reads_colors(p1):
    assert p1.bases == (3, 2, 1, 4)
    assert p1.colors == (2, 1, 1, 0)


def test_parse_window_signed_shorthand(p4):
    assert p4.r == 2
    assert p4.bases == (3, 2, 4, 5, 1)
    assert p4.colors == (1, 0, 0, 1, 0)


def test_parse_window_identity():
    assert parse_window("1,2,3", 1) == identity(1, 3)
    assert parse_window(" 1 , 2 ", 1) == identity(1, 2)


@pytest.mark.parametrize("text, r", [
    ("1,1", 1),
    ("1,3", 1),
    ("1^3,2", 3),
    ("-1,2", 3),
    ("1,,2", 1),
    ("a,2", 1),
])
def test_parse_window_rejects(text, r):
    with pytest.raises(WindowParseError):
        parse_window(text, r)


def test_format_window_is_canonical(p3, p4):
    assert format_window(p3) == P3
    assert format_window(p4) == "-3,2,4,-5,1"
    assert latex_window(parse_window("2^1,1", 3)) == "2^{[1]} 1"


def test_generator_word_gives_q1(q1):
    s0, s1, s2, s3 = coxeter_generators(3, 4)
    word = [s0, s1, s0, s2, s1, s0, s0, s3]
    assert multiply_all(3, 4, word) == q1


def test_inverse(p2, p3):
    assert format_window(inverse(p3)) == "4^2,6^1,3^2,5,1^2,2^1,7,9^1,8"
    assert format_window(inverse(p2)) == "3,1^2,4^2,2^1,5^2"
    assert multiply(p2, inverse(p2)).is_identity()


def test_multiply_rejects_mismatched_groups(p1, p2):
    with pytest.raises(GroupMismatchError):
        multiply(p1, p2)


def test_apply_transposition():
    pi = parse_window("2,5^2,1,4^1,3^2", 3)
    assert format_window(apply_transposition(pi, 2, 1, 5)) == "2,3^1,1,4^1,5"
    assert format_window(apply_transposition(pi, 5, 2, 5)) == "2,5^2,1,4^1,3^1"


def test_apply_transposition_rejects_bad_indices():
    with pytest.raises(TranspositionError):
        apply_transposition(identity(3, 3), 3, 0, 2)
    with pytest.raises(TranspositionError):
        apply_transposition(identity(3, 3), 1, 3, 2)


@given(colored_permutations(max_n=5))
def test_transposition_matches_right_multiplication(pi):
    for i in range(1, pi.n + 1):
        for j in range(i, pi.n + 1):
            for t in range(pi.r):
                assert multiply(pi, transposition(pi.r, pi.n, i, t, j)) == apply_transposition(pi, i, t, j)


@given(colored_permutations(max_n=5))
def test_plain_transposition_is_involution(pi):
    for i in range(1, pi.n):
        twice = apply_transposition(apply_transposition(pi, i, 0, i + 1), i, 0, i + 1)
        assert twice == pi


@given(groups_of_three())
def test_group_axioms(triple):
    a, b, c = triple
    one = identity(a.r, a.n)
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))
    assert multiply(one, a) == a == multiply(a, one)
    assert multiply(a, inverse(a)) == one


def test_cycle_decomposition(p3):
    cycles = cycle_decomposition(p3)
    assert [str(cycle) for cycle in cycles] == ["(1^1 5^1 4)", "(2^2 6^2)", "(3^1)", "(7)", "(8^2 9)"]
    assert [cycle.min_base for cycle in cycles] == [1, 2, 3, 7, 8]


def test_cycle_decomposition_color_sum():
    (cycle,) = cycle_decomposition(parse_window("2^2,1", 3))
    assert {b for b, _ in cycle.entries} == {1, 2}
    assert cycle.color_sum == 2
    assert all(c.color_sum == 0 and len(c.entries) == 1 for c in cycle_decomposition(identity(3, 4)))


@given(colored_permutations())
def test_from_cycles_inverts_decomposition(pi):
    assert from_cycles(pi.r, pi.n, cycle_decomposition(pi)) == pi


def test_reverse(p1):
    assert format_window(reverse(identity(1, 3))) == "3,2,1"
    assert format_window(reverse(p1)) == "4,1^1,2^1,3^2"
    assert reverse(reverse(p1)) == p1


def test_image_and_preimage(p3):
    assert p3.image(1) == (5, 1)
    assert p3.image(1, 2) == (5, 0)
    assert p3.preimage(*p3.image(4, 1)) == (4, 1)


def test_enumerate_group():
    elements = list(enumerate_group(3, 2))
    assert len(elements) == 18
    assert len(set(elements)) == 18
    assert [format_window(pi) for pi in elements[:3]] == ["1,2", "1,2^1", "1,2^2"]
    assert len(list(enumerate_group(1, 3))) == 6
    assert len(set(enumerate_group(2, 3))) == 48


def test_enumerate_group_respects_cap():
    with pytest.raises(CapExceededError):
        list(enumerate_group(3, 4, cap=100))


def test_enumerate_even_signed():
    elements = list(enumerate_even_signed(4))
    assert len(elements) == 192
    assert all(is_even_signed(pi) for pi in elements)


def test_generator_sets():
    assert len(coxeter_generators(3, 4)) == 4
    assert len(coxeter_generators(1, 4)) == 3
    # (r-1) n diagonal elements plus r * C(n, 2) transpositions
    assert len(reflection_generators(3, 3)) == 2 * 3 + 3 * 3
    assert len(reflection_generators_D(3)) == 2 * 3 + 2
    assert all(is_even_signed(g) for g in reflection_generators_D(4))


@hypothesis_settings(max_examples=50)
@given(colored_permutations(r=2, n=4))
def test_signed_round_trip_of_window_text(pi):
    assert parse_window(format_window(pi), 2) == pi
