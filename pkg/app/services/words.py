"""
Scans over words of colored letters. All comparisons use bases only and are strict; colors ride along.
Positions are 1-based and carry the color of the letter found there.
"""
from typing import FrozenSet, List, Sequence, Tuple

from app.services.colored_group import ColoredLetter

Word = Sequence[ColoredLetter]


def right_to_left_minima(word: Word) -> List[Tuple[int, ColoredLetter]]:
    """(position, letter) pairs whose base is smaller than every base to their right."""
    result = []
    smallest = None
    for index in range(len(word) - 1, -1, -1):
        letter = word[index]
        if smallest is None or letter.base < smallest:
            result.append((index + 1, letter))
            smallest = letter.base
    result.reverse()
    return result


def left_to_right_minima(word: Word) -> List[Tuple[int, ColoredLetter]]:
    result = []
    smallest = None
    for index, letter in enumerate(word, start=1):
        if smallest is None or letter.base < smallest:
            result.append((index, letter))
            smallest = letter.base
    return result


def left_to_right_maxima(word: Word) -> List[Tuple[int, ColoredLetter]]:
    result = []
    largest = None
    for index, letter in enumerate(word, start=1):
        if largest is None or letter.base > largest:
            result.append((index, letter))
            largest = letter.base
    return result


def letters_of(scan: List[Tuple[int, ColoredLetter]]) -> FrozenSet[ColoredLetter]:
    return frozenset(letter for _, letter in scan)


def places_of(scan: List[Tuple[int, ColoredLetter]]) -> FrozenSet[ColoredLetter]:
    return frozenset(ColoredLetter(position, letter.color) for position, letter in scan)


def refine(letters, r: int) -> Tuple[FrozenSet[int], ...]:
    """Split a set of colored letters by color: entry t holds the bases of color t."""
    buckets = [set() for _ in range(r)]
    for base, color in letters:
        buckets[color % r].add(base)
    return tuple(frozenset(bucket) for bucket in buckets)


def bases_of(letters) -> FrozenSet[int]:
    return frozenset(base for base, _ in letters)


def sorted_letters(letters) -> List[ColoredLetter]:
    return sorted(letters, key=lambda letter: (letter.base, letter.color))
