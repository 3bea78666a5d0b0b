import itertools
import logging
import math
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, List, NamedTuple, Sequence, Tuple

from app.core.config import settings
from app.core.errors import (
    CapExceededError,
    GroupMismatchError,
    NotEvenSignedError,
    TranspositionError,
    WindowParseError,
)

logger = logging.getLogger(__name__)

_ENTRY = re.compile(r"^(?:(?P<neg>-)(?P<nbase>\d+)|(?P<base>\d+)(?:\^(?P<color>\d+))?)$")


class ColoredLetter(NamedTuple):
    base: int
    color: int = 0


@dataclass(frozen=True)
class ColoredPermutation:
    """
    An element (sigma, z) of G(r,n) in window form: position i holds the letter sigma_i^{z_i}.
    """

    r: int
    bases: Tuple[int, ...]
    colors: Tuple[int, ...]

    def __post_init__(self):
        if self.r < 1:
            raise WindowParseError(f"Number of colors must be positive, got r={self.r}")
        if len(self.bases) != len(self.colors):
            raise WindowParseError("Bases and colors must have the same length.")
        if sorted(self.bases) != list(range(1, len(self.bases) + 1)):
            raise WindowParseError(f"Bases {list(self.bases)} are not a permutation of 1..{len(self.bases)}")
        for color in self.colors:
            if not 0 <= color < self.r:
                raise WindowParseError(f"Color {color} outside [0, {self.r - 1}]")

    @property
    def n(self) -> int:
        return len(self.bases)

    @property
    def window(self) -> Tuple[ColoredLetter, ...]:
        return tuple(ColoredLetter(b, c) for b, c in zip(self.bases, self.colors))

    @cached_property
    def positions(self) -> Tuple[int, ...]:
        """positions[b - 1] is the position of base b in the window."""
        result = [0] * self.n
        for index, base in enumerate(self.bases):
            result[base - 1] = index + 1
        return tuple(result)

    def image(self, base: int, color: int = 0) -> ColoredLetter:
        """pi(b^c) = sigma_b^{z_b + c}."""
        return ColoredLetter(self.bases[base - 1], (self.colors[base - 1] + color) % self.r)

    def preimage(self, base: int, color: int = 0) -> ColoredLetter:
        p = self.positions[base - 1]
        return ColoredLetter(p, (color - self.colors[p - 1]) % self.r)

    def is_identity(self) -> bool:
        return all(b == i + 1 for i, b in enumerate(self.bases)) and not any(self.colors)

    def to_dict(self) -> dict:
        return {"r": self.r, "n": self.n, "window": [[b, c] for b, c in self.window]}

    def __str__(self):
        return format_window(self)


@dataclass(frozen=True)
class ColoredCycle:
    entries: Tuple[ColoredLetter, ...]
    min_base: int
    color_sum: int

    def __str__(self):
        return "(" + " ".join(_format_letter(b, c) for b, c in self.entries) + ")"


def from_window(r: int, window: Sequence[Tuple[int, int]]) -> ColoredPermutation:
    return ColoredPermutation(r, tuple(b for b, _ in window), tuple(c % r for _, c in window))


def identity(r: int, n: int) -> ColoredPermutation:
    return ColoredPermutation(r, tuple(range(1, n + 1)), (0,) * n)


def parse_window(text: str, r: int) -> ColoredPermutation:
    """
    Parse window text such as ``3^2,2^1,1^1,4``; ``-b`` is shorthand for ``b^1`` when r = 2.
    """
    if r < 1:
        raise WindowParseError(f"Number of colors must be positive, got r={r}")
    compact = re.sub(r"\s+", "", text or "")
    if compact == "":
        return identity(r, 0)

    letters = []
    for entry in compact.split(","):
        if entry == "":
            raise WindowParseError(f"Empty entry in window {text!r}")
        match = _ENTRY.match(entry)
        if match is None:
            raise WindowParseError(f"Cannot parse window entry {entry!r}")
        if match.group("neg"):
            if r != 2:
                raise WindowParseError(f"Signed shorthand {entry!r} is only legal when r = 2 (got r={r})")
            letters.append((int(match.group("nbase")), 1))
        else:
            color = int(match.group("color") or 0)
            if color >= r:
                raise WindowParseError(f"Color {color} in entry {entry!r} must be smaller than r={r}")
            letters.append((int(match.group("base")), color))

    bases = [b for b, _ in letters]
    if len(set(bases)) != len(bases):
        raise WindowParseError(f"Duplicate base in window {text!r}")
    if any(b < 1 or b > len(bases) for b in bases):
        raise WindowParseError(f"Bases in {text!r} must lie in 1..{len(bases)}")
    return from_window(r, letters)


def _format_letter(base: int, color: int, signed: bool = False) -> str:
    if color == 0:
        return str(base)
    if signed:
        return f"-{base}"
    return f"{base}^{color}"


def format_window(pi: ColoredPermutation) -> str:
    """Canonical text; signed permutations (r = 2) print colored letters as ``-b``."""
    signed = pi.r == 2
    return ",".join(_format_letter(b, c, signed) for b, c in pi.window)


def latex_window(pi: ColoredPermutation) -> str:
    return " ".join(str(b) if c == 0 else f"{b}^{{[{c}]}}" for b, c in pi.window)


def _check_same_group(a: ColoredPermutation, b: ColoredPermutation):
    if a.r != b.r or a.n != b.n:
        raise GroupMismatchError(f"Cannot combine elements of G({a.r},{a.n}) and G({b.r},{b.n})")


def multiply(a: ColoredPermutation, b: ColoredPermutation) -> ColoredPermutation:
    """
    (sigma, z)(rho, w) = (sigma rho, w + rho(z)); b acts first, so right multiplication acts on positions.
    """
    _check_same_group(a, b)
    bases = tuple(a.bases[rho - 1] for rho in b.bases)
    colors = tuple((a.colors[rho - 1] + w) % a.r for rho, w in zip(b.bases, b.colors))
    return ColoredPermutation(a.r, bases, colors)


def multiply_all(r: int, n: int, factors: Sequence[ColoredPermutation]) -> ColoredPermutation:
    result = identity(r, n)
    for factor in factors:
        result = multiply(result, factor)
    return result


def inverse(pi: ColoredPermutation) -> ColoredPermutation:
    bases = [0] * pi.n
    colors = [0] * pi.n
    for i, (b, c) in enumerate(pi.window, start=1):
        bases[b - 1] = i
        colors[b - 1] = (-c) % pi.r
    return ColoredPermutation(pi.r, tuple(bases), tuple(colors))


def _check_transposition(n: int, r: int, i: int, t: int, j: int):
    if not 1 <= i <= j <= n:
        raise TranspositionError(f"Transposition needs 1 <= i <= j <= n, got i={i}, j={j}, n={n}")
    if not 0 <= t < r:
        raise TranspositionError(f"Transposition color {t} outside [0, {r - 1}]")


def transposition(r: int, n: int, i: int, t: int, j: int) -> ColoredPermutation:
    """The element (i^t j); for i = j it adds t to the color of i."""
    _check_transposition(n, r, i, t, j)
    bases = list(range(1, n + 1))
    colors = [0] * n
    if i == j:
        colors[i - 1] = t
    else:
        bases[i - 1], bases[j - 1] = j, i
        colors[i - 1] = (-t) % r
        colors[j - 1] = t
    return ColoredPermutation(r, tuple(bases), tuple(colors))


def apply_transposition(pi: ColoredPermutation, i: int, t: int, j: int) -> ColoredPermutation:
    """
    Right multiplication by (i^t j): pi_j becomes sigma_i^{z_i+t} and pi_i becomes sigma_j^{z_j-t}.
    """
    _check_transposition(pi.n, pi.r, i, t, j)
    bases = list(pi.bases)
    colors = list(pi.colors)
    if i == j:
        colors[i - 1] = (colors[i - 1] + t) % pi.r
    else:
        bases[i - 1], bases[j - 1] = pi.bases[j - 1], pi.bases[i - 1]
        colors[i - 1] = (pi.colors[j - 1] - t) % pi.r
        colors[j - 1] = (pi.colors[i - 1] + t) % pi.r
    return ColoredPermutation(pi.r, tuple(bases), tuple(colors))


def extend(pi: ColoredPermutation) -> ColoredPermutation:
    """Embed G(r,n) into G(r,n+1) by appending the fixed letter n+1."""
    return ColoredPermutation(pi.r, pi.bases + (pi.n + 1,), pi.colors + (0,))


def truncate(pi: ColoredPermutation) -> ColoredPermutation:
    """Drop the last letter, which must be n^0."""
    if pi.n == 0 or pi.bases[-1] != pi.n or pi.colors[-1] != 0:
        raise WindowParseError(f"Cannot truncate {format_window(pi)}: last letter is not {pi.n}")
    return ColoredPermutation(pi.r, pi.bases[:-1], pi.colors[:-1])


def cycle_decomposition(pi: ColoredPermutation) -> List[ColoredCycle]:
    """
    Colored cycles ordered by their minimal base; each cycle starts at its minimal base and every
    value v carries the color of the window letter whose base is v.
    """
    seen = set()
    cycles = []
    for start in range(1, pi.n + 1):
        if start in seen:
            continue
        entries = []
        value = start
        while value not in seen:
            seen.add(value)
            entries.append(ColoredLetter(value, pi.colors[pi.positions[value - 1] - 1]))
            value = pi.bases[value - 1]
        cycles.append(ColoredCycle(tuple(entries), start, sum(c for _, c in entries) % pi.r))
    return cycles


def from_cycles(r: int, n: int, cycles: Sequence[ColoredCycle]) -> ColoredPermutation:
    bases = [0] * n
    colors = [0] * n
    for cycle in cycles:
        entries = cycle.entries
        for index, (value, _) in enumerate(entries):
            following = entries[(index + 1) % len(entries)]
            bases[value - 1] = following.base
            colors[value - 1] = following.color % r
    if 0 in bases:
        raise WindowParseError("Cycles do not cover every base.")
    return ColoredPermutation(r, tuple(bases), tuple(colors))


def reverse(pi: ColoredPermutation) -> ColoredPermutation:
    return ColoredPermutation(pi.r, pi.bases[::-1], pi.colors[::-1])


def group_order(r: int, n: int) -> int:
    return r ** n * math.factorial(n)


def check_cap(size: int, cap: int, what: str):
    if size > cap:
        raise CapExceededError(f"{what} has {size} elements, above the configured cap of {cap}")


def enumerate_group(r: int, n: int, cap: int = None) -> Iterator[ColoredPermutation]:
    """
    Every element of G(r,n) once: base permutations in lexicographic order, colorings inside.
    """
    if r < 1 or n < 0:
        raise WindowParseError(f"Invalid group parameters r={r}, n={n}")
    check_cap(group_order(r, n), cap or settings.ENUMERATION_CAP, f"G({r},{n})")
    logger.debug(f"Enumerating G({r},{n}) with {group_order(r, n)} elements")
    colorings = list(itertools.product(range(r), repeat=n))
    for bases in itertools.permutations(range(1, n + 1)):
        for colors in colorings:
            yield ColoredPermutation(r, bases, colors)


def coxeter_generators(r: int, n: int) -> List[ColoredPermutation]:
    """s_0 adds one color to the first letter, s_i swaps positions i and i+1."""
    if n == 0:
        return []
    generators = [transposition(r, n, 1, 1 % r, 1)] if r > 1 else []
    generators.extend(transposition(r, n, i, 0, i + 1) for i in range(1, n))
    return generators


def reflection_generators(r: int, n: int) -> List[ColoredPermutation]:
    """The set T_n: (i^t j) for i < j and all colors, and (i^t i) for t > 0."""
    result = []
    for i in range(1, n + 1):
        for t in range(1, r):
            result.append(transposition(r, n, i, t, i))
        for j in range(i + 1, n + 1):
            for t in range(r):
                result.append(transposition(r, n, i, t, j))
    return result


# Signed permutations and the even-signed subgroup D(n)

def signed_window(pi: ColoredPermutation) -> Tuple[int, ...]:
    if pi.r != 2:
        raise NotEvenSignedError(f"Signed view needs r = 2, got r={pi.r}")
    return tuple(-b if c else b for b, c in pi.window)


def from_signed(window: Sequence[int]) -> ColoredPermutation:
    if any(v == 0 for v in window):
        raise WindowParseError("Signed windows cannot contain 0.")
    return ColoredPermutation(2, tuple(abs(v) for v in window), tuple(1 if v < 0 else 0 for v in window))


def is_even_signed(pi: ColoredPermutation) -> bool:
    return pi.r == 2 and sum(pi.colors) % 2 == 0


def require_even_signed(pi: ColoredPermutation):
    if pi.r != 2:
        raise NotEvenSignedError(f"Expected an even-signed permutation (r = 2), got r={pi.r}")
    if sum(pi.colors) % 2:
        raise NotEvenSignedError(f"{format_window(pi)} has an odd number of negative letters")


def even_signed_order(n: int) -> int:
    return math.factorial(n) * 2 ** max(n - 1, 0)


def enumerate_even_signed(n: int, cap: int = None) -> Iterator[ColoredPermutation]:
    check_cap(even_signed_order(n), cap or settings.ENUMERATION_CAP, f"D({n})")
    signs = [c for c in itertools.product((0, 1), repeat=n) if sum(c) % 2 == 0]
    for bases in itertools.permutations(range(1, n + 1)):
        for colors in signs:
            yield ColoredPermutation(2, bases, colors)


def d_swap(window: Sequence[int], i: int, j: int) -> List[int]:
    """Right action of t^D_{ij}: swap positions i and j."""
    result = list(window)
    result[i - 1], result[j - 1] = result[j - 1], result[i - 1]
    return result


def d_swap_negate(window: Sequence[int], i: int, j: int) -> List[int]:
    """
    Right action of t^D_{-i j}: swap positions i < j and negate both; for i = j it negates
    positions 1 and j, i.e. (-1 1)(-j j).
    """
    result = list(window)
    if i == j:
        result[0], result[j - 1] = -result[0], -result[j - 1]
    else:
        result[i - 1], result[j - 1] = -result[j - 1], -result[i - 1]
    return result


def coxeter_generators_D(n: int) -> List[ColoredPermutation]:
    """s_0^D = (-1 2) and s_1, ..., s_{n-1}."""
    if n < 2:
        return []
    start = list(range(1, n + 1))
    generators = [from_signed(d_swap_negate(start, 1, 2))]
    generators.extend(from_signed(d_swap(start, i, i + 1)) for i in range(1, n))
    return generators


def reflection_generators_D(n: int) -> List[ColoredPermutation]:
    """T_n^D: t^D_{ij} and t^D_{-i j} for i < j, plus (-1 1)(-i i) for i > 1."""
    start = list(range(1, n + 1))
    result = []
    for j in range(2, n + 1):
        for i in range(1, j):
            result.append(from_signed(d_swap(start, i, j)))
            result.append(from_signed(d_swap_negate(start, i, j)))
        result.append(from_signed(d_swap_negate(start, j, j)))
    return result
