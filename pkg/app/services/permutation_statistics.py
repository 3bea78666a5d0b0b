import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Tuple

from app.services import permutation_codes
from app.services.colored_group import (
    ColoredLetter,
    ColoredPermutation,
    cycle_decomposition,
    format_window,
    is_even_signed,
    require_even_signed,
)
from app.services.words import (
    bases_of,
    left_to_right_maxima,
    left_to_right_minima,
    letters_of,
    places_of,
    refine,
    right_to_left_minima,
    sorted_letters,
)

logger = logging.getLogger(__name__)

SET_STATISTICS = ("Cyc", "Rmil", "Rmip", "Lmal", "Lmap", "Lmil", "Lmic")

# count name -> set it counts
COUNTED_SETS = {"cyc": "Cyc", "rmin": "Rmil", "lmin": "Lmil", "lmax": "Lmal", "lmic": "Lmic"}


@dataclass(frozen=True)
class StatBundle:
    r: int
    n: int
    ell: int
    inv: int
    sor: int
    refl_len: int
    sets: Dict[str, FrozenSet[ColoredLetter]] = field(hash=False)

    def refined(self, name: str, t: int) -> FrozenSet[int]:
        """Stat^t: bases of the letters of color t."""
        return refine(self.sets[name], self.r)[t % self.r]

    @property
    def counts(self) -> Dict[str, int]:
        result = {}
        for count, name in COUNTED_SETS.items():
            result[count] = len(self.sets[name])
            for t in range(self.r):
                result[f"{count}^{t}"] = len(self.refined(name, t))
        return result

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "sor": self.sor,
            "refl_len": self.refl_len,
            "inv": self.inv,
            "sets": {
                name: [[b, c] for b, c in sorted_letters(self.sets[name])] for name in SET_STATISTICS
            },
            "refined": {
                name: {str(t): sorted(self.refined(name, t)) for t in range(self.r)} for name in SET_STATISTICS
            },
            "counts": self.counts,
        }


@dataclass(frozen=True)
class TwistedDStats:
    """
    Type-D views of an even-signed permutation. The twisted sets always adjoin 1 to the
    "plus" side; the remaining sets are compared at the level of bases.
    """

    cyc_plus: FrozenSet[int]
    cyc_minus: FrozenSet[int]
    rmil_plus: FrozenSet[int]
    rmil_minus: FrozenSet[int]
    lmil: FrozenSet[int]
    lmic: FrozenSet[int]
    lmap: FrozenSet[int]
    lmal: FrozenSet[int]

    @property
    def cyc_plus_count(self) -> int:
        return len(self.cyc_plus)

    @property
    def cyc_minus_count(self) -> int:
        return len(self.cyc_minus)

    @property
    def rmin_plus(self) -> int:
        return len(self.rmil_plus)

    @property
    def rmin_minus(self) -> int:
        return len(self.rmil_minus)

    def to_dict(self) -> dict:
        return {
            "CycPlus": sorted(self.cyc_plus),
            "CycMinus": sorted(self.cyc_minus),
            "RmilPlus": sorted(self.rmil_plus),
            "RmilMinus": sorted(self.rmil_minus),
            "Lmil": sorted(self.lmil),
            "Lmic": sorted(self.lmic),
            "Lmap": sorted(self.lmap),
            "Lmal": sorted(self.lmal),
            "cyc_plus": self.cyc_plus_count,
            "cyc_minus": self.cyc_minus_count,
            "rmin_plus": self.rmin_plus,
            "rmin_minus": self.rmin_minus,
        }


def letter_key(letter: ColoredLetter) -> Tuple[int, ...]:
    """
    Sort key of the linear order n^{r-1} < ... < n^1 < ... < 1^{r-1} < ... < 1^1 < 1 < ... < n.
    """
    base, color = letter
    if color == 0:
        return (1, base)
    return (0, -base, -color)


def inversions(pi: ColoredPermutation) -> int:
    keys = [letter_key(letter) for letter in pi.window]
    return sum(1 for i in range(len(keys)) for j in range(i + 1, len(keys)) if keys[j] < keys[i])


def length(pi: ColoredPermutation) -> int:
    """l(pi) = inv(pi) + sum over colored letters of (sigma_i + z_i - 1)."""
    return inversions(pi) + sum(b + c - 1 for b, c in pi.window if c > 0)


def lmic_word(pi: ColoredPermutation) -> List[ColoredLetter]:
    """pi(1), pi^2(1), ... up to and including the first occurrence of 1^0."""
    if pi.n == 0:
        return []
    word = [pi.image(1, 0)]
    while word[-1] != (1, 0):
        word.append(pi.image(*word[-1]))
    return word


def cyc(pi: ColoredPermutation) -> FrozenSet[ColoredLetter]:
    return frozenset(ColoredLetter(cycle.min_base, cycle.color_sum) for cycle in cycle_decomposition(pi))


def set_stats(pi: ColoredPermutation) -> StatBundle:
    word = pi.window
    rl_minima = right_to_left_minima(word)
    lr_maxima = left_to_right_maxima(word)
    sets = {
        "Cyc": cyc(pi),
        "Rmil": letters_of(rl_minima),
        "Rmip": places_of(rl_minima),
        "Lmal": letters_of(lr_maxima),
        "Lmap": places_of(lr_maxima),
        "Lmil": letters_of(left_to_right_minima(word)),
        "Lmic": letters_of(left_to_right_minima(lmic_word(pi))),
    }
    return StatBundle(
        r=pi.r,
        n=pi.n,
        ell=length(pi),
        inv=inversions(pi),
        sor=permutation_codes.sorting_index(pi),
        refl_len=permutation_codes.refl_length(pi),
        sets=sets,
    )


def twisted_d_stats(pi: ColoredPermutation) -> TwistedDStats:
    require_even_signed(pi)
    bundle = set_stats(pi)
    # 1 always sits on the plus side; the empty window has no letter 1
    one = frozenset({1}) if pi.n else frozenset()
    return TwistedDStats(
        cyc_plus=bundle.refined("Cyc", 0) | one,
        cyc_minus=bundle.refined("Cyc", 1) - {1},
        rmil_plus=bundle.refined("Rmil", 0) | one,
        rmil_minus=bundle.refined("Rmil", 1) - {1},
        lmil=bases_of(bundle.sets["Lmil"]),
        lmic=bases_of(bundle.sets["Lmic"]),
        lmap=bases_of(bundle.sets["Lmap"]),
        lmal=bases_of(bundle.sets["Lmal"]),
    )


def type_d_summary(pi: ColoredPermutation) -> dict:
    """Scalar type-D statistics together with the twisted sets."""
    twisted = twisted_d_stats(pi)
    return {
        "ell_d": permutation_codes.length_D(pi),
        "sor_d": permutation_codes.sor_D(pi),
        "ell_tilde_d": permutation_codes.ell_tilde_D(pi),
        **twisted.to_dict(),
    }


def describe(pi: ColoredPermutation) -> dict:
    """Every statistic of one element; signed even elements also carry their type-D block."""
    data = {"window": format_window(pi), "r": pi.r, "n": pi.n, **set_stats(pi).to_dict()}
    if pi.r == 2 and is_even_signed(pi):
        data["type_d"] = type_d_summary(pi)
    return data
