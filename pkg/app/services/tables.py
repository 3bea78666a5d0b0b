import logging
from typing import Iterable, Iterator

import pandas as pd

from app.core.errors import InvalidBoundError
from app.services import ferrers_boards, permutation_codes, permutation_statistics
from app.services.colored_group import ColoredPermutation, enumerate_even_signed, enumerate_group, format_window
from app.services.ferrers_boards import FerrersBound

logger = logging.getLogger(__name__)

REFINED_COLUMNS = permutation_statistics.SET_STATISTICS


def join_bases(bases) -> str:
    return ";".join(str(b) for b in sorted(bases))


def members(r: int, n: int, f: FerrersBound = None, type_d: bool = False, cap: int = None) -> Iterator[ColoredPermutation]:
    """G(r,n), D(n), or their restrictions to f, in enumeration order."""
    if f is not None and f.n != n:
        raise InvalidBoundError(f"Bound {f} does not have size n={n}")
    if type_d:
        if f is None:
            return enumerate_even_signed(n, cap)
        return ferrers_boards.enumerate_restricted_D(n, f, cap)
    if f is None:
        return enumerate_group(r, n, cap)
    return ferrers_boards.enumerate_restricted(r, n, f, cap)


def _type_d_record(pi: ColoredPermutation) -> dict:
    twisted = permutation_statistics.twisted_d_stats(pi)
    return {
        "window": format_window(pi),
        "ell_d": permutation_codes.length_D(pi),
        "sor_d": permutation_codes.sor_D(pi),
        "ell_tilde_d": permutation_codes.ell_tilde_D(pi),
        "CycPlus": join_bases(twisted.cyc_plus),
        "CycMinus": join_bases(twisted.cyc_minus),
        "RmilPlus": join_bases(twisted.rmil_plus),
        "RmilMinus": join_bases(twisted.rmil_minus),
    }


def _record(pi: ColoredPermutation) -> dict:
    bundle = permutation_statistics.set_stats(pi)
    record = {"window": format_window(pi), "ell": bundle.ell, "sor": bundle.sor, "refl_len": bundle.refl_len}
    for name in REFINED_COLUMNS:
        for t in range(pi.r):
            record[f"{name}^{t}"] = join_bases(bundle.refined(name, t))
    return record


def enumeration_table(family: Iterable[ColoredPermutation], type_d: bool = False) -> pd.DataFrame:
    """
    One row per element in enumeration order: window, the scalar statistics, then one column
    per refined set with its bases joined by ';'.
    """
    records = [_type_d_record(pi) if type_d else _record(pi) for pi in family]
    logger.info(f"Enumerated {len(records)} elements")
    return pd.DataFrame(records)
