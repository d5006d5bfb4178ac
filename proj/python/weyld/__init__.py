"""Rational Weyl group elements of odd type D.

Signed-permutation model of W(D_r), the root-poset rationality test, the
signed cyclic families c_I / d_I, recognition from one-line notation, the
rationality graph Gamma(D_r) and the exhaustive verification oracle.
"""

from ._core import (
    SignedPerm,
    arrow_count,
    brute_force_verify,
    c_element,
    d_element,
    defect_polynomial,
    deletion_word,
    family_defect,
    family_length,
    find_certificate,
    gamma_dot,
    gamma_edge_count,
    gamma_json,
    gamma_vertex_count,
    is_rational,
    longest_element,
    nu_levels,
    rational_ascents,
    recognize,
    simple_reflection,
)

__all__ = [
    "SignedPerm",
    "arrow_count",
    "brute_force_verify",
    "c_element",
    "d_element",
    "defect_polynomial",
    "deletion_word",
    "family_defect",
    "family_length",
    "find_certificate",
    "gamma_dot",
    "gamma_edge_count",
    "gamma_json",
    "gamma_vertex_count",
    "is_rational",
    "longest_element",
    "nu_levels",
    "rational_ascents",
    "recognize",
    "simple_reflection",
]
