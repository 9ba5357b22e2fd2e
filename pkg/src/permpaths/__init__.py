"""
Bijections between restricted permutations and Dyck/Schroeder lattice paths.

The centerpiece is ``phi``: a bijection from permutations of {1..n+1} whose
reversed left-to-right-minima decomposition avoids 321 onto Schroeder paths
of semilength n, together with its inverse, a step-by-step trace, and
exhaustive verification machinery.
"""
from .counting import (
    MAX_PATH_SEMILENGTH,
    MAX_SWEEP_LENGTH,
    SizeGuard,
    VerificationReport,
    VerificationRow,
    catalan_number,
    count_class_members,
    enumerate_321_avoiders,
    enumerate_class_members,
    enumerate_dyck,
    enumerate_permutations,
    enumerate_schroeder,
    schroeder_number,
    schroeder_number_by_binomial_sum,
    unrank_schroeder,
    verify_bijection,
)
from .mdd import Not321Avoiding, check_peak_correspondence, mdd_forward, mdd_inverse
from .paths import (
    AscentDescentCode,
    HasFlatsteps,
    InvalidCharacter,
    InvalidCode,
    InvalidPath,
    LatticePath,
    NegativeExcursion,
    NotAPeak,
    UnbalancedPath,
    ascent_descent_code,
    flatten_peaks,
    heights,
    parse_path,
    path_from_code,
    peak_upstep_ordinals,
    render_ascii,
    semilength,
    unflatten,
)
from .permutations import (
    EmptyPermutation,
    ExcedanceTable,
    NotAPermutation,
    Perm,
    as_permutation,
    avoids_321,
    contains_pattern,
    excedance_split,
    f_map,
    f_prime,
    find_321_witness,
    format_permutation,
    is_class_member,
    left_to_right_minima,
    lr_decompose,
    parse_permutation,
    right_to_left_minima,
)
from .schroeder import BijectionTrace, NotInClass, phi, phi_inverse, phi_trace

__version__ = "0.1.0"

__all__ = [
    "AscentDescentCode",
    "BijectionTrace",
    "EmptyPermutation",
    "ExcedanceTable",
    "HasFlatsteps",
    "InvalidCharacter",
    "InvalidCode",
    "InvalidPath",
    "LatticePath",
    "MAX_PATH_SEMILENGTH",
    "MAX_SWEEP_LENGTH",
    "NegativeExcursion",
    "Not321Avoiding",
    "NotAPeak",
    "NotAPermutation",
    "NotInClass",
    "Perm",
    "SizeGuard",
    "UnbalancedPath",
    "VerificationReport",
    "VerificationRow",
    "as_permutation",
    "ascent_descent_code",
    "avoids_321",
    "catalan_number",
    "check_peak_correspondence",
    "contains_pattern",
    "count_class_members",
    "enumerate_321_avoiders",
    "enumerate_class_members",
    "enumerate_dyck",
    "enumerate_permutations",
    "enumerate_schroeder",
    "excedance_split",
    "f_map",
    "f_prime",
    "find_321_witness",
    "flatten_peaks",
    "format_permutation",
    "heights",
    "is_class_member",
    "left_to_right_minima",
    "lr_decompose",
    "mdd_forward",
    "mdd_inverse",
    "parse_path",
    "parse_permutation",
    "path_from_code",
    "peak_upstep_ordinals",
    "phi",
    "phi_inverse",
    "phi_trace",
    "render_ascii",
    "right_to_left_minima",
    "schroeder_number",
    "schroeder_number_by_binomial_sum",
    "semilength",
    "unflatten",
    "unrank_schroeder",
    "verify_bijection",
]
