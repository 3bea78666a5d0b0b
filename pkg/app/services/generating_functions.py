import logging
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Callable, Iterable, Iterator, Optional, Tuple

from app.core.errors import InvalidBoundError, UnknownStatisticError
from app.services import ferrers_boards, permutation_codes, permutation_statistics
from app.services.colored_group import ColoredPermutation
from app.services.ferrers_boards import FerrersBound, full_bound, profile
from app.services.polynomial import MVPoly, Q, T, Var, poly_product, poly_sum, q, q_factorial, q_int
from app.utils.constants import GfFamily

logger = logging.getLogger(__name__)

U = Var("u")
S = Var("s")


def x(t: int, i: int = -1) -> MVPoly:
    return MVPoly.variable(Var("x", t, i))


def y(t: int, i: int = -1) -> MVPoly:
    return MVPoly.variable(Var("y", t, i))


def t_var(i: int = -1) -> MVPoly:
    return MVPoly.variable(Var("t", -1, i))


def s_var(i: int = -1) -> MVPoly:
    return MVPoly.variable(Var("s", -1, i))


def _linear(constant: int, slope: int, var: Var = T) -> MVPoly:
    return MVPoly.constant(constant) + MVPoly.variable(var) * slope


# Closed forms

def gf_length_dist(r: int, n: int) -> MVPoly:
    """[n]_q! * prod_{i=1}^n (1 + q^i [r-1]_q)."""
    return q_factorial(n) * poly_product(1 + q(i) * q_int(r - 1) for i in range(1, n + 1))


def gf_cyc0_dist(r: int, n: int) -> MVPoly:
    return poly_product(_linear(r * i - 1, 1) for i in range(1, n + 1))


def gf_ellprime_dist(r: int, n: int) -> MVPoly:
    return poly_product(_linear(1, r * i - 1) for i in range(1, n + 1))


def _main_b_factor(r: int, j: int, h_j: int, xs, ys) -> MVPoly:
    """
    The image of Psi_j. xs(t, j) and ys(t, j) give the marker for color t at letter j,
    so the same code serves the refined and the aggregated variables.
    """
    if j == 1:
        return poly_sum(xs(t, 1) * ys(t, 1) * q((r - t) % r) for t in range(r))

    def weight(i, t):
        return ys(t, j) if i == 1 else MVPoly.one()

    factor = xs(0, j) + poly_sum(weight(i, 0) * q(j - i) for i in range(h_j, j))
    for t in range(1, r):
        factor = factor + xs((r - t) % r, j) * q(2 * j + t - 2)
        factor = factor + poly_sum(weight(i, (r - t) % r) * q(j + i + t - 2) for i in range(h_j, j))
    return factor


def gf_main_B(r: int, n: int, f: FerrersBound = None) -> MVPoly:
    f = f or full_bound(n)
    h = profile(f).values
    return poly_product(_main_b_factor(r, j, h[j - 1], x, y) for j in range(1, n + 1))


def _aggregate_mapping(r: int, n: int, kinds=("x", "y")) -> dict:
    return {Var(kind, t, i): MVPoly.variable(Var(kind, t)) for kind in kinds for t in range(r) for i in range(1, n + 1)}


def gf_cor_restricted(r: int, n: int, f: FerrersBound = None) -> MVPoly:
    """gf_main_B with x_{t,i} -> x_t and y_{t,i} -> y_t."""
    f = f or full_bound(n)
    h = profile(f).values
    return poly_product(
        _main_b_factor(r, j, h[j - 1], lambda t, _: x(t), lambda t, _: y(t)) for j in range(1, n + 1)
    )


def gf_cor_full(r: int, n: int) -> MVPoly:
    """
    Full-board product: for j >= 2 each factor is
    x_0 + y_0 q^{j-1} + sum_t q^{j+r-t-1}(x_t q^{j-1} + y_t) + q[j-2]_q (1 + q^j [r-1]_q).
    The first factor is the paired sum x_t y_t q^{(r-t) mod r}.
    """
    factors = [poly_sum(x(t) * y(t) * q((r - t) % r) for t in range(r))] if n else []
    for j in range(2, n + 1):
        factor = x(0) + y(0) * q(j - 1)
        factor = factor + poly_sum(q(j + r - t - 1) * (x(t) * q(j - 1) + y(t)) for t in range(1, r))
        factor = factor + q() * q_int(j - 2) * (1 + q(j) * q_int(r - 1))
        factors.append(factor)
    return poly_product(factors)


def _d_factor(j: int, h_j: int, ts, ss) -> MVPoly:
    if j == 1:
        return ts(1) * MVPoly.variable(U)

    def weight(i):
        return MVPoly.variable(U) if i == 1 else MVPoly.one()

    factor = ts(j) + ss(j) * q(2 * j - 2)
    factor = factor + poly_sum(weight(i) * q(j - i) for i in range(h_j, j))
    factor = factor + poly_sum(weight(i) * q(j + i - 2) for i in range(h_j, j))
    return factor


def gf_D(n: int, f: FerrersBound = None) -> MVPoly:
    """The image of Theta_1 ... Theta_n under q^{sor_D} u^{lmic_D} t_i s_i."""
    f = f or full_bound(n)
    h = profile(f).values
    return poly_product(_d_factor(j, h[j - 1], t_var, s_var) for j in range(1, n + 1))


def gf_cor_D(n: int, f: FerrersBound = None) -> MVPoly:
    f = f or full_bound(n)
    h = profile(f).values
    return poly_product(_d_factor(j, h[j - 1], lambda _: t_var(), lambda _: s_var()) for j in range(1, n + 1))


def gf_cyc_plus_dist_D(n: int) -> MVPoly:
    """t * prod_{i=2}^n (t + 2i - 1)."""
    if n == 0:
        return MVPoly.one()
    return MVPoly.variable(T) * poly_product(_linear(2 * i - 1, 1) for i in range(2, n + 1))


def gf_ellprime_dist_D(n: int) -> MVPoly:
    return poly_product(_linear(1, 2 * i - 1) for i in range(2, n + 1))


# Enumerative side

class MarkerMode(str, Enum):
    COLORED = "colored"
    BASES = "bases"
    COUNT = "count"


@dataclass(frozen=True)
class Marker:
    """
    Multiplies one variable per element of a statistic. Colored statistics mark x_{t,i} for each
    letter i^t (with twist, x_{t,i} marks i^{-t}); base sets mark kind_i; counts raise kind to the count.
    """

    variable: str
    statistic: str
    mode: MarkerMode = MarkerMode.COLORED
    twist: bool = False
    aggregate: bool = False


@dataclass(frozen=True)
class WeightSpec:
    exponent: Optional[str] = "ell"
    exponent_variable: str = "q"
    markers: Tuple[Marker, ...] = ()


class StatisticRow:
    """Lazily computed statistics of one element, looked up by name."""

    SCALARS = ("ell", "sor", "refl_len", "inv", "cyc0", "n_minus_refl_len", "ell_d", "sor_d", "ell_tilde_d",
               "cyc_plus_d", "lmin_d", "lmic_d")

    def __init__(self, pi: ColoredPermutation):
        self.pi = pi

    @cached_property
    def bundle(self):
        return permutation_statistics.set_stats(self.pi)

    @cached_property
    def twisted(self):
        return permutation_statistics.twisted_d_stats(self.pi)

    def scalar(self, name: str) -> int:
        if name == "ell":
            return permutation_statistics.length(self.pi)
        if name == "sor":
            return permutation_codes.sorting_index(self.pi)
        if name == "refl_len":
            return permutation_codes.refl_length(self.pi)
        if name == "inv":
            return permutation_statistics.inversions(self.pi)
        if name == "cyc0":
            return len(self.bundle.refined("Cyc", 0))
        if name == "n_minus_refl_len":
            return self.pi.n - permutation_codes.refl_length(self.pi)
        if name == "ell_d":
            return permutation_codes.length_D(self.pi)
        if name == "sor_d":
            return permutation_codes.sor_D(self.pi)
        if name == "ell_tilde_d":
            return permutation_codes.ell_tilde_D(self.pi)
        if name == "cyc_plus_d":
            return self.twisted.cyc_plus_count
        if name == "lmin_d":
            return len(self.twisted.lmil)
        if name == "lmic_d":
            return len(self.twisted.lmic)
        if name in permutation_statistics.COUNTED_SETS:
            return len(self.bundle.sets[permutation_statistics.COUNTED_SETS[name]])
        if "^" in name:
            count, _, color = name.partition("^")
            if count in permutation_statistics.COUNTED_SETS:
                return len(self.bundle.refined(permutation_statistics.COUNTED_SETS[count], int(color)))
        raise UnknownStatisticError(f"Unknown statistic '{name}'")

    def colored(self, name: str):
        if name not in permutation_statistics.SET_STATISTICS:
            raise UnknownStatisticError(f"Unknown set statistic '{name}'")
        return self.bundle.sets[name]

    def bases(self, name: str):
        twisted_sets = {
            "CycPlus": "cyc_plus",
            "CycMinus": "cyc_minus",
            "RmilPlus": "rmil_plus",
            "RmilMinus": "rmil_minus",
        }
        if name not in twisted_sets:
            raise UnknownStatisticError(f"Unknown type-D set statistic '{name}'")
        return getattr(self.twisted, twisted_sets[name])


def _validate(weighting: WeightSpec):
    known_scalars = set(StatisticRow.SCALARS) | set(permutation_statistics.COUNTED_SETS)
    if weighting.exponent is not None and weighting.exponent not in known_scalars and "^" not in weighting.exponent:
        raise UnknownStatisticError(f"Unknown statistic '{weighting.exponent}'")
    for marker in weighting.markers:
        if marker.mode == MarkerMode.COLORED and marker.statistic not in permutation_statistics.SET_STATISTICS:
            raise UnknownStatisticError(f"Unknown set statistic '{marker.statistic}'")


def weight_of(pi: ColoredPermutation, weighting: WeightSpec) -> MVPoly:
    row = StatisticRow(pi)
    powers = {}
    if weighting.exponent is not None:
        powers[Var(weighting.exponent_variable)] = row.scalar(weighting.exponent)
    for marker in weighting.markers:
        if marker.mode == MarkerMode.COUNT:
            var = Var(marker.variable)
            powers[var] = powers.get(var, 0) + row.scalar(marker.statistic)
        elif marker.mode == MarkerMode.BASES:
            for base in row.bases(marker.statistic):
                var = Var(marker.variable) if marker.aggregate else Var(marker.variable, -1, base)
                powers[var] = powers.get(var, 0) + 1
        else:
            for base, color in row.colored(marker.statistic):
                t = (-color) % pi.r if marker.twist else color
                var = Var(marker.variable, t) if marker.aggregate else Var(marker.variable, t, base)
                powers[var] = powers.get(var, 0) + 1
    return MVPoly.monomial(powers)


def enumerative_gf(family: Iterable[ColoredPermutation], weighting: WeightSpec) -> MVPoly:
    """sum over the family of the monomial named by the weighting."""
    _validate(weighting)
    return poly_sum(weight_of(pi, weighting) for pi in family)


LENGTH = WeightSpec("ell")
SORTING = WeightSpec("sor")
CYC0 = WeightSpec("cyc0", "t")
ELL_PRIME = WeightSpec("refl_len", "t")
N_MINUS_ELL_PRIME = WeightSpec("n_minus_refl_len", "t")

MAIN_B_SORTING = WeightSpec("sor", markers=(Marker("x", "Cyc"), Marker("y", "Lmic")))
MAIN_B_LENGTH = WeightSpec("ell", markers=(Marker("x", "Rmil", twist=True), Marker("y", "Lmil", twist=True)))
COR_SORTING = WeightSpec("sor", markers=(Marker("x", "Cyc", aggregate=True), Marker("y", "Lmic", aggregate=True)))
COR_LENGTH = WeightSpec(
    "ell",
    markers=(Marker("x", "Rmil", twist=True, aggregate=True), Marker("y", "Lmil", twist=True, aggregate=True)),
)

D_SORTING = WeightSpec(
    "sor_d",
    markers=(
        Marker("u", "lmic_d", MarkerMode.COUNT),
        Marker("t", "CycPlus", MarkerMode.BASES),
        Marker("s", "CycMinus", MarkerMode.BASES),
    ),
)
D_LENGTH = WeightSpec(
    "ell_d",
    markers=(
        Marker("u", "lmin_d", MarkerMode.COUNT),
        Marker("t", "RmilPlus", MarkerMode.BASES),
        Marker("s", "RmilMinus", MarkerMode.BASES),
    ),
)
D_COR_SORTING = WeightSpec(
    "sor_d",
    markers=(
        Marker("u", "lmic_d", MarkerMode.COUNT),
        Marker("t", "CycPlus", MarkerMode.BASES, aggregate=True),
        Marker("s", "CycMinus", MarkerMode.BASES, aggregate=True),
    ),
)
D_COR_LENGTH = WeightSpec(
    "ell_d",
    markers=(
        Marker("u", "lmin_d", MarkerMode.COUNT),
        Marker("t", "RmilPlus", MarkerMode.BASES, aggregate=True),
        Marker("s", "RmilMinus", MarkerMode.BASES, aggregate=True),
    ),
)
CYC_PLUS_D = WeightSpec("cyc_plus_d", "t")
ELL_TILDE_D = WeightSpec("ell_tilde_d", "t")


# Families served by the CLI and the HTTP surface

@dataclass(frozen=True)
class GfForm:
    closed_form: Callable[[int, int, Optional[FerrersBound]], MVPoly]
    sorting: WeightSpec
    length: WeightSpec
    type_d: bool = False
    restricted: bool = False


GF_FAMILIES = {
    GfFamily.Length: GfForm(lambda r, n, f: gf_length_dist(r, n), SORTING, LENGTH),
    GfFamily.Cyc0: GfForm(lambda r, n, f: gf_cyc0_dist(r, n), CYC0, CYC0),
    GfFamily.EllPrime: GfForm(lambda r, n, f: gf_ellprime_dist(r, n), ELL_PRIME, ELL_PRIME),
    GfFamily.MainB: GfForm(gf_main_B, MAIN_B_SORTING, MAIN_B_LENGTH, restricted=True),
    GfFamily.CorRestricted: GfForm(gf_cor_restricted, COR_SORTING, COR_LENGTH, restricted=True),
    GfFamily.CorFull: GfForm(lambda r, n, f: gf_cor_full(r, n), COR_SORTING, COR_LENGTH),
    GfFamily.D: GfForm(lambda r, n, f: gf_D(n, f), D_SORTING, D_LENGTH, type_d=True, restricted=True),
    GfFamily.CorD: GfForm(lambda r, n, f: gf_cor_D(n, f), D_COR_SORTING, D_COR_LENGTH, type_d=True, restricted=True),
    GfFamily.CycPlusD: GfForm(lambda r, n, f: gf_cyc_plus_dist_D(n), CYC_PLUS_D, CYC_PLUS_D, type_d=True),
    GfFamily.EllPrimeD: GfForm(lambda r, n, f: gf_ellprime_dist_D(n), ELL_TILDE_D, ELL_TILDE_D, type_d=True),
}


def parse_family(name) -> GfFamily:
    try:
        return GfFamily(name)
    except ValueError as e:
        known = ", ".join(family.value for family in GfFamily)
        raise UnknownStatisticError(f"Unknown generating function family '{name}'. Must be one of: {known}") from e


def family_members(family: GfFamily, r: int, n: int, f: FerrersBound = None, cap: int = None) -> Iterator[ColoredPermutation]:
    """The elements a family sums over: G(r,n,f) or D(n,f), with f ignored by the unrestricted families."""
    form = GF_FAMILIES[parse_family(family)]
    bound = f if form.restricted and f is not None else full_bound(n)
    if form.type_d:
        return ferrers_boards.enumerate_restricted_D(n, bound, cap)
    return ferrers_boards.enumerate_restricted(r, n, bound, cap)


def family_gf(family, r: int, n: int, f: FerrersBound = None, enumerative: str = None, cap: int = None) -> MVPoly:
    """
    Closed form of a family, or its enumerative side when enumerative is "sor" or "length".

    :param family: a GfFamily or its value
    :param f: Ferrers bound, only used by the restricted families
    :param enumerative: None for the closed form
    """
    family = parse_family(family)
    form = GF_FAMILIES[family]
    if f is not None and f.n != n:
        raise InvalidBoundError(f"Bound {f} does not have size n={n}")
    bound = f if form.restricted else None
    if enumerative is None:
        return form.closed_form(r, n, bound)
    if enumerative not in ("sor", "length"):
        raise UnknownStatisticError(f"Unknown enumerative side '{enumerative}'. Must be sor or length")
    weighting = form.sorting if enumerative == "sor" else form.length
    polynomial = enumerative_gf(family_members(family, r, n, bound, cap), weighting)
    logger.info(f"Summed the {enumerative} weighting of {family.value} for r={r}, n={n}")
    return polynomial
