import logging
import re
from dataclasses import dataclass
from typing import FrozenSet, Tuple

from app.core.errors import InvalidCodeError
from app.services.colored_group import (
    ColoredLetter,
    ColoredPermutation,
    apply_transposition,
    d_swap,
    d_swap_negate,
    extend,
    from_signed,
    identity,
    inverse,
    require_even_signed,
    signed_window,
    truncate,
)
from app.services.words import letters_of, places_of, refine, right_to_left_minima
from app.utils.constants import Bijection, CodeKind

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Code:
    """A sequence c_1^{e_1}, ..., c_n^{e_n} in CS(r,n): 1 <= c_i <= i and 0 <= e_i < r."""

    r: int
    entries: Tuple[ColoredLetter, ...]

    def __post_init__(self):
        for i, (c, e) in enumerate(self.entries, start=1):
            if not 1 <= c <= i:
                raise InvalidCodeError(f"Code entry {i} has value {c}, expected 1..{i}")
            if not 0 <= e < self.r:
                raise InvalidCodeError(f"Code entry {i} has color {e}, expected 0..{self.r - 1}")

    @property
    def n(self) -> int:
        return len(self.entries)

    def to_dict(self, kind: str = None) -> dict:
        data = {"entries": [[c, e] for c, e in self.entries]}
        if kind is not None:
            data = {"kind": kind, **data}
        return data

    def __str__(self):
        return format_code(self)


@dataclass(frozen=True)
class SignedCode:
    """A sequence in SE(n,D): c_1 = 1 and c_i in [-i, i] without 0."""

    entries: Tuple[int, ...]

    def __post_init__(self):
        for i, c in enumerate(self.entries, start=1):
            if i == 1 and c != 1:
                raise InvalidCodeError(f"Signed code must start with 1, got {c}")
            if c == 0 or abs(c) > i:
                raise InvalidCodeError(f"Signed code entry {i} is {c}, expected a nonzero value in [-{i}, {i}]")

    @property
    def n(self) -> int:
        return len(self.entries)

    def as_colored(self) -> Code:
        """The 2-colored word (|c_i|, sign) used for word statistics."""
        return Code(2, tuple(ColoredLetter(abs(c), 1 if c < 0 else 0) for c in self.entries))

    def to_dict(self, kind: str = None) -> dict:
        data = {"entries": list(self.entries)}
        if kind is not None:
            data = {"kind": kind, **data}
        return data

    def __str__(self):
        return format_code(self)


@dataclass(frozen=True)
class CodeStats:
    max: FrozenSet[ColoredLetter]
    min: FrozenSet[ColoredLetter]
    rmil: FrozenSet[ColoredLetter]
    rmip: FrozenSet[ColoredLetter]
    r: int

    def refined(self, name: str, t: int) -> FrozenSet[int]:
        return refine(getattr(self, name.lower()), self.r)[t % self.r]


def format_code(code) -> str:
    if isinstance(code, SignedCode):
        return "(" + ",".join(str(c) for c in code.entries) + ")"
    return "(" + ",".join(str(c) if e == 0 else f"{c}^{e}" for c, e in code.entries) + ")"


def parse_code(text: str, r: int) -> Code:
    body = re.sub(r"\s+", "", text).strip("()")
    entries = []
    for part in body.split(",") if body else []:
        match = re.fullmatch(r"(\d+)(?:\^(\d+))?", part)
        if match is None:
            raise InvalidCodeError(f"Cannot parse code entry {part!r}")
        entries.append(ColoredLetter(int(match.group(1)), int(match.group(2) or 0)))
    return Code(r, tuple(entries))


def parse_signed_code(text: str) -> SignedCode:
    body = re.sub(r"\s+", "", text).strip("()")
    try:
        return SignedCode(tuple(int(part) for part in body.split(",")) if body else ())
    except ValueError as e:
        if isinstance(e, InvalidCodeError):
            raise
        raise InvalidCodeError(f"Cannot parse signed code {text!r}") from e


# Lehmer, A-code and B-code

def lehmer(pi: ColoredPermutation) -> Code:
    """Leh(pi) = (h_1^{-z_1}, ..., h_n^{-z_n}) with h_i = #{j <= i : sigma_j <= sigma_i}."""
    entries = []
    for i in range(pi.n):
        h = sum(1 for j in range(i + 1) if pi.bases[j] <= pi.bases[i])
        entries.append(ColoredLetter(h, (-pi.colors[i]) % pi.r))
    return Code(pi.r, tuple(entries))


def a_code(pi: ColoredPermutation) -> Code:
    return lehmer(inverse(pi))


def a_code_by_deletion(pi: ColoredPermutation) -> Code:
    """Peel i = n, ..., 1: if i^t sits at position p, record p^t and delete it."""
    letters = list(pi.window)
    entries = []
    for i in range(pi.n, 0, -1):
        p = next(index for index, letter in enumerate(letters) if letter.base == i)
        entries.append(ColoredLetter(p + 1, letters[p].color))
        del letters[p]
    entries.reverse()
    return Code(pi.r, tuple(entries))


def a_code_inv(code: Code) -> ColoredPermutation:
    letters = []
    for i, (c, e) in enumerate(code.entries, start=1):
        letters.insert(c - 1, (i, e))
    return ColoredPermutation(code.r, tuple(b for b, _ in letters), tuple(e for _, e in letters))


def b_code(pi: ColoredPermutation) -> Code:
    """b_i = pi^{-k}(i) for the least k >= 1 whose base is at most i."""
    entries = []
    for i in range(1, pi.n + 1):
        letter = pi.preimage(i, 0)
        for _ in range(pi.r * pi.n):
            if letter.base <= i:
                break
            letter = pi.preimage(letter.base, letter.color)
        entries.append(letter)
    return Code(pi.r, tuple(entries))


def b_code_by_sorting(pi: ColoredPermutation) -> Code:
    """Peel i = n, ..., 1: record p^t where base i sits at p and t = -z_p, then multiply by (p^t i)."""
    current = pi
    entries = []
    for i in range(pi.n, 0, -1):
        p = current.positions[i - 1]
        t = (-current.colors[p - 1]) % pi.r
        entries.append(ColoredLetter(p, t))
        current = truncate(apply_transposition(current, p, t, i))
    entries.reverse()
    return Code(pi.r, tuple(entries))


def b_code_inv(code: Code) -> ColoredPermutation:
    current = identity(code.r, 0)
    for i, (c, e) in enumerate(code.entries, start=1):
        current = extend(current)
        if c < i:
            current = apply_transposition(current, c, e, i)
        else:
            # (i^e i) is not an involution
            current = apply_transposition(current, i, (code.r - e) % code.r, i)
    return current


def code_sum(code: Code) -> int:
    """sum of i - c_i + [e_i > 0](2(c_i - 1) + e_i)."""
    total = 0
    for i, (c, e) in enumerate(code.entries, start=1):
        total += i - c
        if e > 0:
            total += 2 * (c - 1) + e
    return total


def length_from_acode(code: Code) -> int:
    return code_sum(code)


def sorting_index(pi: ColoredPermutation) -> int:
    return code_sum(b_code(pi))


def refl_length(pi: ColoredPermutation) -> int:
    """l'(pi) = n - |Max^0(B-code)|."""
    code = b_code(pi)
    return pi.n - sum(1 for i, (c, e) in enumerate(code.entries, start=1) if c == i and e == 0)


def phi(pi: ColoredPermutation) -> ColoredPermutation:
    return b_code_inv(a_code(pi))


def code_stats(code) -> CodeStats:
    """Max, Min and the right-to-left minimum letters/places of a code read as a word."""
    if isinstance(code, SignedCode):
        code = code.as_colored()
    word = code.entries
    scan = right_to_left_minima(word)
    return CodeStats(
        max=frozenset(ColoredLetter(i, e) for i, (c, e) in enumerate(word, start=1) if c == i),
        min=frozenset(ColoredLetter(i, e) for i, (c, e) in enumerate(word, start=1) if c == 1),
        rmil=letters_of(scan),
        rmip=places_of(scan),
        r=code.r,
    )


# Type D: C-code, D-code and psi

def c_code(pi: ColoredPermutation) -> SignedCode:
    require_even_signed(pi)
    letters = list(signed_window(pi))
    entries = []
    for i in range(pi.n, 1, -1):
        p = next(index for index, value in enumerate(letters) if abs(value) == i)
        negative = letters[p] < 0
        del letters[p]
        if negative:
            entries.append(-(p + 1))
            letters[0] = -letters[0]
        else:
            entries.append(p + 1)
    if pi.n:
        entries.append(1)
    entries.reverse()
    return SignedCode(tuple(entries))


def c_code_inv(code: SignedCode) -> ColoredPermutation:
    letters = [1] if code.n else []
    for i, c in enumerate(code.entries[1:], start=2):
        if c > 0:
            letters.insert(c - 1, i)
        else:
            letters[0] = -letters[0]
            letters.insert(-c - 1, -i)
    return from_signed(letters)


def _d_step(window, d: int, i: int):
    """The involution used at step i of the D-code for entry d."""
    if d > 0:
        return d_swap(window, d, i)
    return d_swap_negate(window, -d, i)


def d_code(pi: ColoredPermutation) -> SignedCode:
    require_even_signed(pi)
    letters = list(signed_window(pi))
    entries = []
    for i in range(pi.n, 1, -1):
        p = next(index for index, value in enumerate(letters) if abs(value) == i) + 1
        d = p if letters[p - 1] > 0 else -p
        entries.append(d)
        letters = _d_step(letters, d, i)[:-1]
    if pi.n:
        entries.append(1)
    entries.reverse()
    return SignedCode(tuple(entries))


def d_code_inv(code: SignedCode) -> ColoredPermutation:
    letters = [1] if code.n else []
    for i, d in enumerate(code.entries[1:], start=2):
        letters = _d_step(letters + [i], d, i)
    return from_signed(letters)


def psi(pi: ColoredPermutation) -> ColoredPermutation:
    return d_code_inv(c_code(pi))


def sor_D(pi: ColoredPermutation) -> int:
    code = d_code(pi)
    return sum(j - d - (2 if d < 0 else 0) for j, d in enumerate(code.entries, start=1) if d != j)


def ell_tilde_D(pi: ColoredPermutation) -> int:
    code = d_code(pi)
    return pi.n - sum(1 for i, d in enumerate(code.entries, start=1) if d == i)


def length_D(pi: ColoredPermutation) -> int:
    """
    Coxeter length over {(-1 2), s_1, ..., s_{n-1}} as inversions of the signed window plus the
    pairs i < j with pi_i + pi_j < 0. The BFS oracle in the theorem checker gates this formula.
    """
    require_even_signed(pi)
    window = signed_window(pi)
    total = 0
    for i in range(len(window)):
        for j in range(i + 1, len(window)):
            if window[i] > window[j]:
                total += 1
            if window[i] + window[j] < 0:
                total += 1
    return total


ENCODERS = {
    CodeKind.Lehmer: lehmer,
    CodeKind.A: a_code,
    CodeKind.B: b_code,
    CodeKind.C: c_code,
    CodeKind.D: d_code,
}

BIJECTIONS = {
    Bijection.Phi: phi,
    Bijection.Psi: psi,
}


def encode(pi: ColoredPermutation, kind) -> Code:
    """Code of the given kind; the C- and D-codes need an even-signed element."""
    try:
        kind = CodeKind(kind)
    except ValueError as e:
        known = ", ".join(k.value for k in CodeKind)
        raise InvalidCodeError(f"Unknown code kind '{kind}'. Must be one of: {known}") from e
    return ENCODERS[kind](pi)


def apply_bijection(pi: ColoredPermutation, bijection) -> ColoredPermutation:
    try:
        bijection = Bijection(bijection)
    except ValueError as e:
        raise InvalidCodeError(f"Unknown bijection '{bijection}'. Must be phi or psi") from e
    return BIJECTIONS[bijection](pi)
