import pytest

from app.core.errors import NotEvenSignedError
from app.services.colored_group import (
    ColoredLetter,
    enumerate_group,
    format_window,
    from_signed,
    identity,
    parse_window,
    reverse,
)
from app.services.permutation_codes import refl_length, sorting_index
from app.services.permutation_statistics import (
    describe,
    inversions,
    length,
    letter_key,
    lmic_word,
    set_stats,
    twisted_d_stats,
)


def letters(text, r):
    """Set of colored letters written like a window."""
    return frozenset(parse_window_letters(text, r))


def parse_window_letters(text, r):
    for entry in text.split(","):
        base, _, color = entry.partition("^")
        yield ColoredLetter(int(base), int(color or 0) % r)


# G(3,2) in enumeration order: 1^a 2^b for a, b in 0..2, then 2^a 1^b
TABLE_ELL = [0, 3, 4, 1, 4, 5, 2, 5, 6, 1, 2, 3, 2, 3, 4, 3, 4, 5]
TABLE_SOR = [0, 4, 3, 2, 6, 5, 1, 5, 4, 1, 3, 2, 5, 4, 3, 3, 2, 4]

# Per-row set columns of G(3,2); each cell lists the bases of one color, "-" for none.
# Length side: Rmil^0..2 | Lmil^0..2 | Lmal^0..2 | Lmap^0..2
TABLE_LENGTH_SETS = {
    "1,2": "12 - - | 1 - - | 12 - - | 12 - -",
    "1,2^1": "1 2 - | 1 - - | 1 2 - | 1 2 -",
    "1,2^2": "1 - 2 | 1 - - | 1 - 2 | 1 - 2",
    "1^1,2": "2 1 - | - 1 - | 2 1 - | 2 1 -",
    "1^1,2^1": "- 12 - | - 1 - | - 12 - | - 12 -",
    "1^1,2^2": "- 1 2 | - 1 - | - 1 2 | - 1 2",
    "1^2,2": "2 - 1 | - - 1 | 2 - 1 | 2 - 1",
    "1^2,2^1": "- 2 1 | - - 1 | - 2 1 | - 2 1",
    "1^2,2^2": "- - 12 | - - 1 | - - 12 | - - 12",
    "2,1": "1 - - | 12 - - | 2 - - | 1 - -",
    "2,1^1": "- 1 - | 2 1 - | 2 - - | 1 - -",
    "2,1^2": "- - 1 | 2 - 1 | 2 - - | 1 - -",
    "2^1,1": "1 - - | 1 2 - | - 2 - | - 1 -",
    "2^1,1^1": "- 1 - | - 12 - | - 2 - | - 1 -",
    "2^1,1^2": "- - 1 | - 2 1 | - 2 - | - 1 -",
    "2^2,1": "1 - - | 1 - 2 | - - 2 | - - 1",
    "2^2,1^1": "- 1 - | - 1 2 | - - 2 | - - 1",
    "2^2,1^2": "- - 1 | - - 12 | - - 2 | - - 1",
}

# Sorting side: Cyc^0..2 | Lmic^0..2. Row 2^2,1 has Lmic^1 empty: its Lmic word is 2^2,1^2,2^1,1^1,2,1.
TABLE_SORTING_SETS = {
    "1,2": "12 - - | 1 - -",
    "1,2^1": "1 2 - | 1 - -",
    "1,2^2": "1 - 2 | 1 - -",
    "1^1,2": "2 1 - | - 1 -",
    "1^1,2^1": "- 12 - | - 1 -",
    "1^1,2^2": "- 1 2 | - 1 -",
    "1^2,2": "2 - 1 | - - 1",
    "1^2,2^1": "- 2 1 | - - 1",
    "1^2,2^2": "- - 12 | - - 1",
    "2,1": "1 - - | 12 - -",
    "2,1^1": "- 1 - | 2 1 -",
    "2,1^2": "- - 1 | 2 - 1",
    "2^1,1": "- 1 - | - 12 -",
    "2^1,1^1": "- - 1 | - 2 1",
    "2^1,1^2": "1 - - | 1 2 -",
    "2^2,1": "- - 1 | - - 12",
    "2^2,1^1": "1 - - | 1 - 2",
    "2^2,1^2": "- 1 - | - 1 2",
}


def table_row(text):
    cells = [cell for group in text.split("|") for cell in group.split()]
    return [frozenset() if cell == "-" else frozenset(int(digit) for digit in cell) for cell in cells]


def refined_row(pi, names):
    bundle = set_stats(pi)
    return [bundle.refined(name, t) for name in names for t in range(3)]


def test_letter_order_chain():
    chain = ["2^2", "2^1", "1^2", "1^1", "1", "2"]
    keys = [letter_key(next(parse_window_letters(entry, 3))) for entry in chain]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_inversions(q1):
    assert inversions(q1) == 1
    assert inversions(identity(3, 4)) == 0
    assert inversions(parse_window("2^1,1^2", 3)) == 0


def test_length(q1, p1, p3):
    assert length(q1) == 8
    assert length(p1) == 7
    assert length(p3) == 39
    assert length(identity(3, 4)) == 0
    assert length(parse_window("1,2^1", 3)) == 3
    assert length(parse_window("2^1,1^2", 3)) == 4


def test_table_columns_over_g32():
    group = list(enumerate_group(3, 2))
    assert [length(pi) for pi in group] == TABLE_ELL
    assert [sorting_index(pi) for pi in group] == TABLE_SOR


@pytest.mark.parametrize("window", list(TABLE_LENGTH_SETS))
def test_length_side_sets_over_g32(window):
    pi = parse_window(window, 3)
    assert refined_row(pi, ("Rmil", "Lmil", "Lmal", "Lmap")) == table_row(TABLE_LENGTH_SETS[window])


@pytest.mark.parametrize("window", list(TABLE_SORTING_SETS))
def test_sorting_side_sets_over_g32(window):
    pi = parse_window(window, 3)
    assert refined_row(pi, ("Cyc", "Lmic")) == table_row(TABLE_SORTING_SETS[window])


def test_table_rows_follow_enumeration_order():
    windows = [format_window(pi) for pi in enumerate_group(3, 2)]
    assert windows == list(TABLE_LENGTH_SETS) == list(TABLE_SORTING_SETS)


def test_lmic_of_row_with_stray_entry():
    bundle = set_stats(parse_window("2^2,1", 3))
    assert bundle.refined("Lmic", 2) == {1, 2}
    assert bundle.refined("Lmic", 1) == frozenset()


def test_sorting_index(p2):
    assert sorting_index(p2) == 21
    assert sorting_index(parse_window("1,2^2", 3)) == 3


def test_reflection_length(p3):
    assert refl_length(identity(2, 3)) == 0
    assert refl_length(parse_window("-2,-1", 2)) == 1
    assert refl_length(p3) == 8


def test_set_stats_of_p3(p3):
    sets = set_stats(p3).sets
    assert sets["Rmil"] == letters("1^1,2^2,7,8^2", 3)
    assert sets["Rmip"] == letters("4^1,6^2,7,9^2", 3)
    assert sets["Lmil"] == letters("1^1,3^1,5^1", 3)
    assert sets["Cyc"] == letters("1^2,2^1,3^1,7,8^2", 3)
    assert sets["Lmic"] == letters("1^2,4^1,5^1", 3)
    assert sets["Lmal"] == letters("5^1,6^2,7,9", 3)
    assert sets["Lmap"] == letters("1^1,2^2,7,8", 3)


def test_set_stats_of_identity():
    bundle = set_stats(identity(3, 4))
    everything = letters("1,2,3,4", 3)
    for name in ("Cyc", "Rmil", "Rmip", "Lmal", "Lmap"):
        assert bundle.sets[name] == everything
    assert bundle.sets["Lmil"] == bundle.sets["Lmic"] == letters("1", 3)


def test_refined_sets_and_counts(p3):
    bundle = set_stats(p3)
    assert bundle.refined("Cyc", 0) == {7}
    assert bundle.refined("Cyc", 2) == {1, 8}
    assert bundle.counts["cyc"] == 5
    assert bundle.counts["cyc^1"] == 2
    assert bundle.counts["lmin"] == 3


def test_lmic_word():
    p3 = parse_window("5^1,6^2,3^1,1^1,4,2^2,7,9,8^2", 3)
    expected = list(parse_window_letters("5^1,4^1,1^2,5,4,1^1,5^2,4^2,1", 3))
    assert lmic_word(p3) == expected
    assert lmic_word(identity(3, 3)) == [(1, 0)]
    assert lmic_word(parse_window("2^2,1", 3)) == list(parse_window_letters("2^2,1^2,2^1,1^1,2,1", 3))


def test_cyc0_histogram_over_g32():
    counts = [len(set_stats(pi).refined("Cyc", 0)) for pi in enumerate_group(3, 2)]
    assert (counts.count(2), counts.count(1), counts.count(0)) == (1, 7, 10)


def test_twisted_sets():
    plain = twisted_d_stats(identity(2, 3))
    assert plain.cyc_plus == {1, 2, 3}
    assert plain.cyc_minus == frozenset()

    balanced = twisted_d_stats(from_signed([-2, -1]))
    assert balanced.cyc_plus == {1}
    assert balanced.cyc_minus == frozenset()

    unbalanced = twisted_d_stats(from_signed([-1, -2]))
    assert unbalanced.cyc_plus == {1}
    assert unbalanced.cyc_minus == {2}


def test_empty_window_has_empty_statistics():
    empty = parse_window("", 2)
    twisted = twisted_d_stats(empty)
    assert twisted.cyc_plus == frozenset()
    assert twisted.rmil_plus == frozenset()
    summary = describe(empty)["type_d"]
    assert summary["ell_d"] == summary["sor_d"] == summary["ell_tilde_d"] == 0
    assert summary["cyc_plus"] == summary["rmin_plus"] == 0
    assert all(summary[name] == [] for name in ("CycPlus", "CycMinus", "RmilPlus", "RmilMinus"))


def test_twisted_sets_need_even_signed():
    with pytest.raises(NotEvenSignedError):
        twisted_d_stats(from_signed([-1, 2]))
    with pytest.raises(NotEvenSignedError):
        twisted_d_stats(identity(3, 2))


def test_describe_adds_type_d_block(p4, p3):
    data = describe(p4)
    assert data["window"] == "-3,2,4,-5,1"
    assert data["type_d"]["sor_d"] == 10
    assert data["type_d"]["ell_d"] == 11
    assert data["type_d"]["ell_tilde_d"] == 3
    assert "type_d" not in describe(p3)
    assert "type_d" not in describe(from_signed([-1, 2]))


def test_left_minima_are_right_minima_of_reverse():
    for pi in enumerate_group(3, 3):
        assert set_stats(pi).sets["Lmil"] == set_stats(reverse(pi)).sets["Rmil"]
