import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional

from app.core.config import settings
from app.core.errors import InvalidBoundError, UnknownTheoremError
from app.services import (
    colored_group,
    ferrers_boards,
    generating_functions as gf,
    oracles,
    permutation_codes as codes,
    permutation_statistics as stats,
)
from app.services.colored_group import ColoredPermutation, format_window
from app.services.ferrers_boards import FerrersBound
from app.services.polynomial import MVPoly
from app.services.words import bases_of, refine
from app.utils.constants import FERRERS_THEOREMS, GeneratingSet, TheoremId

logger = logging.getLogger(__name__)


@dataclass
class Outcome:
    ok: bool
    checked: int
    counterexample: Optional[dict] = None


@dataclass
class Report:
    theorem: TheoremId
    r: int
    n: int
    f: Optional[FerrersBound] = None
    all_ferrers: bool = False
    status: str = "pass"
    checked: int = 0
    counterexample: Optional[dict] = None
    elapsed_ms: Optional[float] = field(default=None, compare=False)

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timing: bool = False) -> dict:
        params = {"r": self.r, "n": self.n}
        if self.all_ferrers:
            params["f"] = "all"
        elif self.f is not None:
            params["f"] = list(self.f.values)
        data = {"theorem": self.theorem.value, "params": params, "status": self.status, "checked": self.checked}
        if self.counterexample is not None:
            data["counterexample"] = self.counterexample
        if timing and self.elapsed_ms is not None:
            data["elapsed_ms"] = round(self.elapsed_ms, 3)
        return data


# Comparison helpers

def _canon(value):
    if isinstance(value, (set, frozenset)):
        return tuple(sorted(value))
    return value


def _row(values: Iterable) -> tuple:
    return tuple(_canon(v) for v in values)


def _pointwise(family: Iterable[ColoredPermutation], problem: Callable[[ColoredPermutation], Optional[dict]]) -> Outcome:
    """Stop at the first element whose check reports a problem."""
    checked = 0
    for pi in family:
        checked += 1
        detail = problem(pi)
        if detail:
            return Outcome(False, checked, {"element": format_window(pi), **detail})
    return Outcome(True, checked)


def _bijective(family: Iterable[ColoredPermutation], image: Callable, inverse: Callable, label: str) -> Outcome:
    seen = {}

    def problem(pi):
        value = image(pi)
        if value in seen:
            return {"reason": f"{label} is not injective", "collides_with": format_window(seen[value])}
        seen[value] = pi
        if inverse(value) != pi:
            return {"reason": f"{label} inverse does not recover the element", "image": str(value)}
        return None

    return _pointwise(family, problem)


def _compare_multisets(family: Iterable[ColoredPermutation], left: Callable, right: Callable) -> Outcome:
    elements = list(family)
    left_rows = [_row(left(pi)) for pi in elements]
    right_rows = [_row(right(pi)) for pi in elements]
    left_count, right_count = Counter(left_rows), Counter(right_rows)
    if left_count == right_count:
        return Outcome(True, len(elements))
    surplus_left = left_count - right_count
    surplus_right = right_count - left_count
    for pi, lrow, rrow in zip(elements, left_rows, right_rows):
        if lrow in surplus_left or rrow in surplus_right:
            return Outcome(False, len(elements), {
                "element": format_window(pi),
                "left": repr(lrow),
                "right": repr(rrow),
            })
    return Outcome(False, len(elements), {"reason": "multisets differ"})


def _compare_polys(expected: MVPoly, actual: MVPoly, checked: int, label: str) -> Outcome:
    if expected == actual:
        return Outcome(True, checked)
    return Outcome(False, checked, {
        "reason": f"{label} differs from the closed form",
        "expected": expected.to_text(),
        "actual": actual.to_text(),
    })


def _all_of(*outcomes: Callable[[], Outcome]) -> Outcome:
    """Run checks in order and stop at the first failure; checked counts the first check's elements."""
    first = None
    for make in outcomes:
        outcome = make()
        if first is None:
            first = outcome
        if not outcome.ok:
            return Outcome(False, first.checked, outcome.counterexample)
    return first


# Families

def _group(r: int, n: int, f: Optional[FerrersBound], cap: int) -> List[ColoredPermutation]:
    if f is None:
        return list(colored_group.enumerate_group(r, n, cap))
    return list(ferrers_boards.enumerate_restricted(r, n, f, cap))


def _d_group(n: int, f: Optional[FerrersBound], cap: int) -> List[ColoredPermutation]:
    if f is None:
        return list(colored_group.enumerate_even_signed(n, cap))
    return list(ferrers_boards.enumerate_restricted_D(n, f, cap))


# Statistic tuples

def _main_a_length_side(pi: ColoredPermutation) -> tuple:
    bundle = stats.set_stats(pi)
    colors = range(pi.r)
    return (
        bundle.ell,
        *[bundle.refined("Rmil", t) for t in colors],
        *[bundle.refined("Lmil", t) for t in colors],
        *[bundle.refined("Lmal", t) for t in colors],
        *[bundle.refined("Lmap", t) for t in colors],
    )


def _main_a_sorting_side(pi: ColoredPermutation) -> tuple:
    """Same shape as the length side with every color superindex reversed: t -> -t mod r."""
    bundle = stats.set_stats(pi)
    twisted = [(-t) % pi.r for t in range(pi.r)]
    return (
        bundle.sor,
        *[bundle.refined("Cyc", t) for t in twisted],
        *[bundle.refined("Lmic", t) for t in twisted],
        *[bundle.refined("Lmal", t) for t in twisted],
        *[bundle.refined("Lmap", t) for t in twisted],
    )


def _d_length_side(pi: ColoredPermutation, with_lmal: bool = False) -> tuple:
    twisted = stats.twisted_d_stats(pi)
    row = (codes.length_D(pi), twisted.rmil_plus, twisted.rmil_minus, twisted.lmil, twisted.lmap)
    return row + (twisted.lmal,) if with_lmal else row


def _d_sorting_side(pi: ColoredPermutation, with_lmal: bool = False) -> tuple:
    twisted = stats.twisted_d_stats(pi)
    row = (codes.sor_D(pi), twisted.cyc_plus, twisted.cyc_minus, twisted.lmic, twisted.lmap)
    return row + (twisted.lmal,) if with_lmal else row


# Individual checks: each takes (r, n, f, cap) and returns an Outcome

def _check_distribution(weighting: gf.WeightSpec, closed_form: Callable[[int, int], MVPoly], label: str):
    def run(r, n, f, cap):
        family = _group(r, n, None, cap)
        return _compare_polys(closed_form(r, n), gf.enumerative_gf(family, weighting), len(family), label)

    return run


def check_main_a(r, n, f, cap):
    return _compare_multisets(_group(r, n, f, cap), _main_a_length_side, _main_a_sorting_side)


def check_main_b(r, n, f, cap):
    family = _group(r, n, f, cap)
    closed = gf.gf_main_B(r, n, f)
    return _all_of(
        lambda: _compare_polys(closed, gf.enumerative_gf(family, gf.MAIN_B_SORTING), len(family), "sor/Cyc/Lmic sum"),
        lambda: _compare_polys(closed, gf.enumerative_gf(family, gf.MAIN_B_LENGTH), len(family), "ell/Rmil/Lmil sum"),
    )


def check_cor_gf_restricted(r, n, f, cap):
    family = _group(r, n, f, cap)
    closed = gf.gf_cor_restricted(r, n, f)
    checks = [
        lambda: _compare_polys(closed, gf.enumerative_gf(family, gf.COR_SORTING), len(family), "sor/Cyc/Lmic sum"),
        lambda: _compare_polys(closed, gf.enumerative_gf(family, gf.COR_LENGTH), len(family), "ell/Rmil/Lmil sum"),
    ]
    if f is None or f == ferrers_boards.full_bound(n):
        checks.append(lambda: _compare_polys(gf.gf_cor_full(r, n), closed, len(family), "full-board product"))
    return _all_of(*checks)


def check_phi_pointwise(r, n, f, cap):
    family = _group(r, n, None, cap)

    def problem(pi):
        image = codes.phi(pi)
        if _row(_main_a_length_side(pi)) != _row(_main_a_sorting_side(image)):
            return {"reason": "phi does not transport the statistics", "image": format_window(image)}
        return None

    return _all_of(
        lambda: _pointwise(family, problem),
        lambda: _bijective(family, codes.phi, lambda image: _phi_preimage(image), "phi"),
    )


def _phi_preimage(image: ColoredPermutation) -> ColoredPermutation:
    return codes.a_code_inv(codes.b_code(image))


def check_phi_ferrers(r, n, f, cap):
    def problem(pi):
        bound = ferrers_boards.min_sequence(pi)
        image = codes.phi(pi)
        if not ferrers_boards.member(image, bound):
            return {"reason": f"phi leaves the bound {bound}", "image": format_window(image)}
        return None

    return _pointwise(_group(r, n, None, cap), problem)


def check_stirling_equi(r, n, f, cap):
    family = _group(r, n, None, cap)
    rows = [gf.StatisticRow(pi) for pi in family]

    def histogram(name):
        return Counter(row.scalar(name) for row in rows)

    groups = [
        ("n_minus_refl_len", ["cyc^0", "rmin^0", "lmin^0", "lmax^0", "lmic^0"]),
        ("cyc", ["rmin", "lmin", "lmax", "lmic"]),
    ]
    for reference, names in groups:
        expected = histogram(reference)
        for name in names:
            actual = histogram(name)
            if actual != expected:
                return Outcome(False, len(family), {
                    "reason": f"{name} is not equidistributed with {reference}",
                    "expected": dict(sorted(expected.items())),
                    "actual": dict(sorted(actual.items())),
                })
    return Outcome(True, len(family))


def check_acode_ell(r, n, f, cap):
    family = _group(r, n, None, cap)

    def problem(pi):
        code = codes.a_code(pi)
        if code != codes.a_code_by_deletion(pi):
            return {"reason": "A-code routes disagree", "code": str(code)}
        if codes.length_from_acode(code) != stats.length(pi):
            return {"reason": "length differs from the A-code sum", "code": str(code)}
        return None

    return _all_of(
        lambda: _pointwise(family, problem),
        lambda: _bijective(family, codes.a_code, codes.a_code_inv, "A-code"),
    )


def check_acode_stats(r, n, f, cap):
    def problem(pi):
        bundle = stats.set_stats(pi)
        code_stats = codes.code_stats(codes.a_code(pi))
        pairs = [("Rmil", "max"), ("Lmil", "min"), ("Lmap", "rmil"), ("Lmal", "rmip")]
        for name, code_name in pairs:
            if bundle.sets[name] != getattr(code_stats, code_name):
                return {"reason": f"{name} differs from {code_name.capitalize()} of the A-code"}
        return None

    return _pointwise(_group(r, n, None, cap), problem)


def check_bcode_sor(r, n, f, cap):
    family = _group(r, n, None, cap)

    def problem(pi):
        code = codes.b_code(pi)
        if code != codes.b_code_by_sorting(pi):
            return {"reason": "B-code routes disagree", "code": str(code)}
        if codes.sorting_index(pi) != codes.code_sum(codes.b_code_by_sorting(pi)):
            return {"reason": "sorting index differs from the B-code sum", "code": str(code)}
        if codes.refl_length(pi) != pi.n - len(stats.set_stats(pi).refined("Cyc", 0)):
            return {"reason": "reflection length differs from n - cyc^0", "code": str(code)}
        return None

    return _all_of(
        lambda: _pointwise(family, problem),
        lambda: _bijective(family, codes.b_code, codes.b_code_inv, "B-code"),
    )


def check_bcode_stats(r, n, f, cap):
    def problem(pi):
        bundle = stats.set_stats(pi)
        code_stats = codes.code_stats(codes.b_code(pi))
        pairs = [("Cyc", "max"), ("Lmic", "min"), ("Lmap", "rmil"), ("Lmal", "rmip")]
        for t in range(pi.r):
            for name, code_name in pairs:
                if bundle.refined(name, t) != code_stats.refined(code_name, (-t) % pi.r):
                    return {"reason": f"{name}^{t} differs from {code_name.capitalize()}^{(-t) % pi.r} of the B-code"}
        return None

    return _pointwise(_group(r, n, None, cap), problem)


def check_sor_graph_oracle(r, n, f, cap):
    def problem(pi):
        simulated = oracles.sor_graph_oracle(pi)
        computed = codes.sorting_index(pi)
        if simulated != computed:
            return {"reason": "comb-graph distance differs", "simulated": simulated, "computed": computed}
        return None

    return _pointwise(_group(r, n, None, cap), problem)


def _check_bfs(genset: GeneratingSet, statistic: Callable, type_d: bool):
    def run(r, n, f, cap):
        distances = oracles.bfs_lengths(genset, r, n)
        family = _d_group(n, None, cap) if type_d else _group(r, n, None, cap)

        def problem(pi):
            expected = distances.get(pi)
            actual = statistic(pi)
            if expected != actual:
                return {"reason": f"BFS distance over {genset.value} differs", "bfs": expected, "computed": actual}
            return None

        outcome = _pointwise(family, problem)
        if outcome.ok and len(distances) != len(family):
            return Outcome(False, outcome.checked, {"reason": f"{genset.value} reaches {len(distances)} elements"})
        return outcome

    return run


def check_d_psi_pointwise(r, n, f, cap):
    family = _d_group(n, None, cap)

    def problem(pi):
        image = codes.psi(pi)
        if _row(_d_length_side(pi)) != _row(_d_sorting_side(image)):
            return {"reason": "psi does not transport the statistics", "image": format_window(image)}
        return None

    return _all_of(
        lambda: _pointwise(family, problem),
        lambda: _bijective(family, codes.psi, lambda image: codes.c_code_inv(codes.d_code(image)), "psi"),
    )


def check_d_main(r, n, f, cap):
    return _compare_multisets(
        _d_group(n, f, cap),
        lambda pi: _d_length_side(pi, with_lmal=True),
        lambda pi: _d_sorting_side(pi, with_lmal=True),
    )


def check_d_gf(r, n, f, cap):
    family = _d_group(n, f, cap)
    closed = gf.gf_D(n, f)
    return _all_of(
        lambda: _compare_polys(closed, gf.enumerative_gf(family, gf.D_SORTING), len(family), "sor_D/Cyc_D sum"),
        lambda: _compare_polys(closed, gf.enumerative_gf(family, gf.D_LENGTH), len(family), "ell_D/Rmil_D sum"),
    )


def check_d_cor_gf(r, n, f, cap):
    family = _d_group(n, f, cap)
    closed = gf.gf_cor_D(n, f)
    return _all_of(
        lambda: _compare_polys(closed, gf.enumerative_gf(family, gf.D_COR_SORTING), len(family), "sor_D sum"),
        lambda: _compare_polys(closed, gf.enumerative_gf(family, gf.D_COR_LENGTH), len(family), "ell_D sum"),
        lambda: _compare_polys(
            gf.gf_cyc_plus_dist_D(n),
            gf.enumerative_gf(_d_group(n, None, cap), gf.CYC_PLUS_D),
            len(family),
            "cyc_D^+ histogram",
        ),
    )


def check_d_ellprime_dist(r, n, f, cap):
    family = _d_group(n, None, cap)

    def problem(pi):
        if codes.ell_tilde_D(pi) != pi.n - stats.twisted_d_stats(pi).cyc_plus_count:
            return {"reason": "reflection length differs from n - cyc_D^+"}
        return None

    return _all_of(
        lambda: _compare_polys(
            gf.gf_ellprime_dist_D(n), gf.enumerative_gf(family, gf.ELL_TILDE_D), len(family), "histogram"
        ),
        lambda: _pointwise(family, problem),
    )


def _check_signed_code(encode: Callable, decode: Callable, label: str, pairs: List[tuple]):
    """pairs: (twisted attribute, code statistic, color or None for base-level comparison)."""

    def run(r, n, f, cap):
        family = _d_group(n, None, cap)

        def problem(pi):
            twisted = stats.twisted_d_stats(pi)
            code_stats = codes.code_stats(encode(pi))
            for attribute, code_name, color in pairs:
                expected = getattr(code_stats, code_name)
                expected = bases_of(expected) if color is None else refine(expected, 2)[color]
                if getattr(twisted, attribute) != expected:
                    return {"reason": f"{attribute} differs from {code_name.capitalize()} of the {label}"}
            return None

        return _all_of(
            lambda: _pointwise(family, problem),
            lambda: _bijective(family, encode, decode, label),
        )

    return run


CHECKS: Dict[TheoremId, Callable] = {
    TheoremId.EllDist: _check_distribution(gf.LENGTH, gf.gf_length_dist, "length histogram"),
    TheoremId.SorDist: _check_distribution(gf.SORTING, gf.gf_length_dist, "sorting index histogram"),
    TheoremId.MainA: check_main_a,
    TheoremId.MainB: check_main_b,
    TheoremId.CorGfRestricted: check_cor_gf_restricted,
    TheoremId.Cyc0Dist: _check_distribution(gf.CYC0, gf.gf_cyc0_dist, "cyc^0 histogram"),
    TheoremId.EllPrimeDist: _check_distribution(gf.ELL_PRIME, gf.gf_ellprime_dist, "reflection length histogram"),
    TheoremId.PhiPointwise: check_phi_pointwise,
    TheoremId.PhiFerrers: check_phi_ferrers,
    TheoremId.StirlingEqui: check_stirling_equi,
    TheoremId.ACodeEll: check_acode_ell,
    TheoremId.ACodeStats: check_acode_stats,
    TheoremId.BCodeSor: check_bcode_sor,
    TheoremId.BCodeStats: check_bcode_stats,
    TheoremId.SorGraphOracle: check_sor_graph_oracle,
    TheoremId.LengthBfs: _check_bfs(GeneratingSet.CoxeterG, lambda pi: stats.length(pi), type_d=False),
    TheoremId.RefLengthBfs: _check_bfs(GeneratingSet.ReflectionsT, lambda pi: codes.refl_length(pi), type_d=False),
    TheoremId.DPsiPointwise: check_d_psi_pointwise,
    TheoremId.DMain: check_d_main,
    TheoremId.DGf: check_d_gf,
    TheoremId.DCorGf: check_d_cor_gf,
    TheoremId.DEllPrimeDist: check_d_ellprime_dist,
    TheoremId.DCCodeStats: _check_signed_code(
        lambda pi: codes.c_code(pi),
        lambda code: codes.c_code_inv(code),
        "C-code",
        [("lmil", "min", None), ("lmap", "rmil", None), ("lmal", "rmip", None),
         ("rmil_plus", "max", 0), ("rmil_minus", "max", 1)],
    ),
    TheoremId.DDCodeStats: _check_signed_code(
        lambda pi: codes.d_code(pi),
        lambda code: codes.d_code_inv(code),
        "D-code",
        [("lmic", "min", None), ("lmap", "rmil", None), ("lmal", "rmip", None),
         ("cyc_plus", "max", 0), ("cyc_minus", "max", 1)],
    ),
    TheoremId.DLengthBfs: _check_bfs(GeneratingSet.CoxeterD, lambda pi: codes.length_D(pi), type_d=True),
    TheoremId.DRefLengthBfs: _check_bfs(GeneratingSet.ReflectionsTD, lambda pi: codes.ell_tilde_D(pi), type_d=True),
}


def parse_theorem(name) -> TheoremId:
    try:
        return TheoremId(name)
    except ValueError as e:
        known = ", ".join(t.value for t in TheoremId)
        raise UnknownTheoremError(f"Unknown theorem '{name}'. Must be one of: {known}") from e


def _run_single(theorem: TheoremId, r: int, n: int, f: Optional[FerrersBound], cap: int) -> Outcome:
    return CHECKS[theorem](r, n, f, cap)


def check(theorem, r: int, n: int, f: FerrersBound = None, all_f: bool = False, cap: int = None,
          jobs: int = None) -> Report:
    """
    Run one claim over G(r,n) (or D(n) for the type-D claims). With all_f the Ferrers-quantified
    claims run once per bound and the report carries the first failing bound.
    """
    theorem = parse_theorem(theorem.value if isinstance(theorem, TheoremId) else theorem)
    cap = cap or settings.ENUMERATION_CAP
    jobs = jobs or settings.JOBS
    if f is not None and f.n != n:
        raise InvalidBoundError(f"Bound {f} does not have size n={n}")

    started = time.perf_counter()
    if theorem in FERRERS_THEOREMS and all_f:
        bounds = list(ferrers_boards.all_bounds(n))
        arguments = [(theorem, r, n, bound, cap) for bound in bounds]
        if jobs > 1 and len(bounds) > 1:
            with ProcessPoolExecutor(max_workers=jobs) as executor:
                outcomes = list(executor.map(_run_single, *zip(*arguments)))
        else:
            outcomes = [_run_single(*args) for args in arguments]
        report = Report(theorem, r, n, all_ferrers=True, checked=sum(o.checked for o in outcomes))
        for bound, outcome in zip(bounds, outcomes):
            if not outcome.ok:
                report.status = "fail"
                report.counterexample = {"f": list(bound.values), **(outcome.counterexample or {})}
                break
    else:
        bound = f if theorem in FERRERS_THEOREMS else None
        outcome = _run_single(theorem, r, n, bound, cap)
        report = Report(theorem, r, n, f=bound, checked=outcome.checked,
                        status="pass" if outcome.ok else "fail", counterexample=outcome.counterexample)
    report.elapsed_ms = (time.perf_counter() - started) * 1000

    if report.passed:
        logger.info(f"Checked {theorem.value} for r={r}, n={n}: pass ({report.checked} elements)")
    else:
        logger.warning(f"Checked {theorem.value} for r={r}, n={n}: FAIL {report.counterexample}")
    return report


def check_all(r: int, n: int, f: FerrersBound = None, all_f: bool = False, cap: int = None,
              jobs: int = None) -> List[Report]:
    return [check(theorem, r, n, f, all_f, cap, jobs) for theorem in TheoremId]
