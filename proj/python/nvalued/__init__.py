"""n-valued coset groups: growth enumeration, n-bonacci numerics, and the
cubeless-word tree."""

from ._core import (
    PrecisionRangeError,
    apply_morphism,
    apply_phi,
    canonical_word,
    closed_form_xi,
    coset_mul,
    fixed_point_prefix,
    growth,
    growth_zplus,
    invert_word,
    is_cubeless,
    nbonacci,
    nbonacci_binet,
    nbonacci_dominant_root,
    nbonacci_rnd,
    nbonacci_roots,
    new_counts,
    normal_words,
    q_count,
    q_words,
    reduce_word,
    rnd_precision_limit,
    s_counts,
    subtree_level_counts,
    theta_word,
    tree_dot,
    tree_json,
    tree_levels,
    zplus_isomorphism_check,
    zplus_mul,
    __version__,
)

__all__ = [
    "PrecisionRangeError",
    "apply_morphism",
    "apply_phi",
    "canonical_word",
    "closed_form_xi",
    "coset_mul",
    "fixed_point_prefix",
    "growth",
    "growth_zplus",
    "invert_word",
    "is_cubeless",
    "nbonacci",
    "nbonacci_binet",
    "nbonacci_dominant_root",
    "nbonacci_rnd",
    "nbonacci_roots",
    "new_counts",
    "normal_words",
    "q_count",
    "q_words",
    "reduce_word",
    "rnd_precision_limit",
    "s_counts",
    "subtree_level_counts",
    "theta_word",
    "tree_dot",
    "tree_json",
    "tree_levels",
    "zplus_isomorphism_check",
    "zplus_mul",
]
