import logging
import re
from dataclasses import dataclass
from typing import Iterator, Tuple

from app.core.config import settings
from app.core.errors import CapExceededError, InvalidBoundError
from app.services.colored_group import (
    ColoredPermutation,
    apply_transposition,
    check_cap,
    d_swap,
    d_swap_negate,
    extend,
    from_signed,
    identity,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FerrersBound:
    """
    A nondecreasing bound f with i <= f_i <= n; G(r,n,f) keeps the elements with sigma_i <= f_i.
    """

    values: Tuple[int, ...]

    def __post_init__(self):
        n = len(self.values)
        previous = 0
        for i, f in enumerate(self.values, start=1):
            if f < previous:
                raise InvalidBoundError(f"Bound {list(self.values)} is not nondecreasing")
            if f < i or f > n:
                raise InvalidBoundError(f"Bound entry f_{i}={f} must lie in [{i}, {n}]")
            previous = f

    @property
    def n(self) -> int:
        return len(self.values)

    def __str__(self):
        return ",".join(str(f) for f in self.values)


@dataclass(frozen=True)
class FerrersProfile:
    """H(f): h_i is the smallest position at which the letter i may appear."""

    values: Tuple[int, ...]


def parse_bound(text: str) -> FerrersBound:
    compact = re.sub(r"\s+", "", text or "")
    try:
        values = tuple(int(part) for part in compact.split(",")) if compact else ()
    except ValueError as e:
        raise InvalidBoundError(f"Cannot parse Ferrers bound {text!r}") from e
    return FerrersBound(values)


def full_bound(n: int) -> FerrersBound:
    return FerrersBound((n,) * n)


def profile(f: FerrersBound) -> FerrersProfile:
    """h_i = min{j : f_j >= i}."""
    return FerrersProfile(tuple(next(j for j, fj in enumerate(f.values, start=1) if fj >= i) for i in range(1, f.n + 1)))


def _check_size(pi: ColoredPermutation, f: FerrersBound):
    if pi.n != f.n:
        raise InvalidBoundError(f"Bound of size {f.n} cannot restrict an element of size {pi.n}")


def member(pi: ColoredPermutation, f: FerrersBound) -> bool:
    _check_size(pi, f)
    return all(b <= fi for b, fi in zip(pi.bases, f.values))


def min_sequence(pi: ColoredPermutation) -> FerrersBound:
    """Prefix maxima of the bases: constant between consecutive left-to-right maxima."""
    values = []
    largest = 0
    for b in pi.bases:
        largest = max(largest, b)
        values.append(largest)
    return FerrersBound(tuple(values))


def dominates(f: FerrersBound, g: FerrersBound) -> bool:
    """f <| g, i.e. f_i <= g_i for every i."""
    if f.n != g.n:
        raise InvalidBoundError(f"Cannot compare bounds of sizes {f.n} and {g.n}")
    return all(a <= b for a, b in zip(f.values, g.values))


def all_bounds(n: int, cap: int = None) -> Iterator[FerrersBound]:
    """Every valid bound of size n in lexicographic order (Catalan(n) of them)."""
    limit = cap or settings.BOUNDS_CAP
    if n > limit:
        raise CapExceededError(f"Enumerating bounds of size {n} exceeds the configured cap of {limit}")

    def grow(prefix):
        i = len(prefix) + 1
        if i > n:
            yield FerrersBound(tuple(prefix))
            return
        low = max(i, prefix[-1] if prefix else 1)
        for f in range(low, n + 1):
            yield from grow(prefix + [f])

    yield from grow([])


def restricted_count(r: int, f: FerrersBound) -> int:
    if f.n == 0:
        return 1
    h = profile(f).values
    count = r
    for j in range(2, f.n + 1):
        span = j - h[j - 1]
        count *= 1 + span + (r - 1) * (span + 1)
    return count


def restricted_count_D(f: FerrersBound) -> int:
    h = profile(f).values
    count = 1
    for j in range(2, f.n + 1):
        count *= 2 * (j - h[j - 1] + 1)
    return count


def _factor_choices(r: int, j: int, h_j: int):
    """(i, t) pairs of Psi_j: identity, (i j) for h_j <= i < j, (i^t j) for t > 0 and h_j <= i <= j."""
    yield None
    for i in range(h_j, j):
        yield (i, 0)
    for t in range(1, r):
        for i in range(h_j, j + 1):
            yield (i, t)


def enumerate_restricted(r: int, n: int, f: FerrersBound, cap: int = None) -> Iterator[ColoredPermutation]:
    """Expand the product Psi_1 Psi_2 ... Psi_n left to right."""
    if f.n != n:
        raise InvalidBoundError(f"Bound of size {f.n} does not match n={n}")
    check_cap(restricted_count(r, f), cap or settings.ENUMERATION_CAP, f"G({r},{n},{f})")
    h = profile(f).values

    def expand(partial, j):
        if j > n:
            yield partial
            return
        base = extend(partial)
        for choice in _factor_choices(r, j, h[j - 1]):
            if choice is None:
                yield from expand(base, j + 1)
            else:
                i, t = choice
                yield from expand(apply_transposition(base, i, t, j), j + 1)

    if n == 0:
        yield identity(r, 0)
        return
    for t in range(r):
        yield from expand(apply_transposition(identity(r, 1), 1, t, 1), 2)


def enumerate_restricted_D(n: int, f: FerrersBound, cap: int = None) -> Iterator[ColoredPermutation]:
    """Expand Theta_1 ... Theta_n: identity, t^D_{ij} for h_j <= i < j, t^D_{-i j} for h_j <= i <= j."""
    if f.n != n:
        raise InvalidBoundError(f"Bound of size {f.n} does not match n={n}")
    check_cap(restricted_count_D(f), cap or settings.ENUMERATION_CAP, f"D({n},{f})")
    h = profile(f).values

    def expand(window, j):
        if j > n:
            yield from_signed(window)
            return
        base = window + [j]
        yield from expand(base, j + 1)
        for i in range(h[j - 1], j):
            yield from expand(d_swap(base, i, j), j + 1)
        for i in range(h[j - 1], j + 1):
            yield from expand(d_swap_negate(base, i, j), j + 1)

    if n == 0:
        yield from_signed([])
        return
    yield from expand([1], 2)


def filter_restricted(family, f: FerrersBound) -> Iterator[ColoredPermutation]:
    """The filter-after-enumerate route, kept as an oracle for the factor expansion."""
    return (pi for pi in family if member(pi, f))
