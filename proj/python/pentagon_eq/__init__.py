"""Set-theoretical solutions of the pentagon equation on finite sets and groups."""

from ._core import (
    Group,
    PairMap,
    PentagonError,
    are_equivalent,
    classify,
    corpus,
    coset_solution,
    count_by_formula,
    decompose,
    dumps_group,
    dumps_pairmap,
    enumerate_by_theorem,
    enumerate_on_group,
    flip_pairmap,
    group_by_name,
    group_from_table,
    identity_pairmap,
    is_invertible,
    is_reversed,
    is_solution,
    kac_takesaki_s,
    kac_takesaki_t,
    loads_group,
    loads_pairmap,
    opposite,
    profile,
    sign_solution,
    solution_witness,
    tau_conjugate,
    theta_one,
)

__all__ = [
    "Group",
    "PairMap",
    "PentagonError",
    "are_equivalent",
    "classify",
    "corpus",
    "coset_solution",
    "count_by_formula",
    "decompose",
    "dumps_group",
    "dumps_pairmap",
    "enumerate_by_theorem",
    "enumerate_on_group",
    "flip_pairmap",
    "group_by_name",
    "group_from_table",
    "identity_pairmap",
    "is_invertible",
    "is_reversed",
    "is_solution",
    "kac_takesaki_s",
    "kac_takesaki_t",
    "loads_group",
    "loads_pairmap",
    "opposite",
    "profile",
    "sign_solution",
    "solution_witness",
    "tau_conjugate",
    "theta_one",
]
