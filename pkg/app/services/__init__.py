from app.services.colored_group import (
    ColoredLetter,
    ColoredPermutation,
    ColoredCycle,
    identity,
    parse_window,
    format_window,
    latex_window,
    multiply,
    inverse,
    transposition,
    apply_transposition,
    cycle_decomposition,
    from_cycles,
    enumerate_group,
    enumerate_even_signed,
    signed_window,
    from_signed,
    is_even_signed,
)
from app.services.permutation_statistics import (
    StatBundle,
    TwistedDStats,
    length,
    inversions,
    set_stats,
    twisted_d_stats,
    type_d_summary,
    describe,
)
from app.services.permutation_codes import (
    Code,
    SignedCode,
    CodeStats,
    lehmer,
    a_code,
    a_code_inv,
    b_code,
    b_code_inv,
    c_code,
    c_code_inv,
    d_code,
    d_code_inv,
    code_stats,
    sorting_index,
    refl_length,
    phi,
    psi,
    sor_D,
    ell_tilde_D,
    length_D,
    encode,
    apply_bijection,
)
from app.services.ferrers_boards import (
    FerrersBound,
    parse_bound,
    full_bound,
    profile,
    member,
    min_sequence,
    all_bounds,
    enumerate_restricted,
    enumerate_restricted_D,
)
from app.services.polynomial import MVPoly, Var, histogram
from app.services.generating_functions import (
    WeightSpec,
    Marker,
    enumerative_gf,
    gf_length_dist,
    gf_cyc0_dist,
    gf_ellprime_dist,
    gf_main_B,
    gf_cor_restricted,
    gf_cor_full,
    gf_D,
    gf_cor_D,
    gf_cyc_plus_dist_D,
    gf_ellprime_dist_D,
    parse_family,
    family_members,
    family_gf,
)
from app.services.oracles import bfs_lengths, distance_histogram, sor_graph_trace, sor_graph_oracle
from app.services.theorem_checker import Report, check, check_all, parse_theorem
from app.services.tables import enumeration_table, members

__all__ = [
    "ColoredLetter",
    "ColoredPermutation",
    "ColoredCycle",
    "identity",
    "parse_window",
    "format_window",
    "latex_window",
    "multiply",
    "inverse",
    "transposition",
    "apply_transposition",
    "cycle_decomposition",
    "from_cycles",
    "enumerate_group",
    "enumerate_even_signed",
    "signed_window",
    "from_signed",
    "is_even_signed",
    "StatBundle",
    "TwistedDStats",
    "length",
    "inversions",
    "set_stats",
    "twisted_d_stats",
    "type_d_summary",
    "describe",
    "Code",
    "SignedCode",
    "CodeStats",
    "lehmer",
    "a_code",
    "a_code_inv",
    "b_code",
    "b_code_inv",
    "c_code",
    "c_code_inv",
    "d_code",
    "d_code_inv",
    "code_stats",
    "sorting_index",
    "refl_length",
    "phi",
    "psi",
    "sor_D",
    "ell_tilde_D",
    "length_D",
    "encode",
    "apply_bijection",
    "FerrersBound",
    "parse_bound",
    "full_bound",
    "profile",
    "member",
    "min_sequence",
    "all_bounds",
    "enumerate_restricted",
    "enumerate_restricted_D",
    "MVPoly",
    "Var",
    "histogram",
    "WeightSpec",
    "Marker",
    "enumerative_gf",
    "gf_length_dist",
    "gf_cyc0_dist",
    "gf_ellprime_dist",
    "gf_main_B",
    "gf_cor_restricted",
    "gf_cor_full",
    "gf_D",
    "gf_cor_D",
    "gf_cyc_plus_dist_D",
    "gf_ellprime_dist_D",
    "parse_family",
    "family_members",
    "family_gf",
    "bfs_lengths",
    "distance_histogram",
    "sor_graph_trace",
    "sor_graph_oracle",
    "Report",
    "check",
    "check_all",
    "parse_theorem",
    "enumeration_table",
    "members",
]
