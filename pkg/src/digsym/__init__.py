"""Permutation groups, coset and Cayley digraphs, and symmetry checks."""

from .arith import (
    FactoredInteger,
    factorize,
    half_exponent_divisor,
    is_prime,
    p_part,
    ppd,
    prime_divisors,
    primitive_prime_divisors,
    zsigmondy_has_ppd,
)
from .analyze import (
    VACUOUS,
    DigraphAction,
    TwoArcStabilizerData,
    bind_action,
    coset_two_arc_criterion,
    find_regular_subgroup,
    is_cayley,
    is_s_arc_transitive,
    is_vertex_transitive,
    lemma_rglr_brute_force,
    lemma_rglr_hypothesis_check,
    lemma_val_check,
    two_arc_stabilizer_data,
    verify_lemma_prime_factn,
)
from .blocks import BlockSystem, is_primitive, minimal_block_system
from .bounds import DEFAULT_BOUNDS, SearchBounds
from .construct import (
    CosetDigraphSpec,
    GammaCertificate,
    build_cayley_digraph,
    build_coset_digraph,
    build_diagonal_coset_digraph,
    gamma_certificate,
    product_action_digraph,
)
from .cosets import CosetAction, action_on_cosets
from .digraph import (
    Digraph,
    build_digraph,
    count_s_arcs,
    direct_product,
    enumerate_s_arcs,
    from_edge_list,
    is_directed_cycle,
    is_strongly_connected,
    power,
    to_dot,
    to_edge_list,
    valency_profile,
)
from .errors import (
    BoundExceededError,
    CosetSpecError,
    CycleFormatError,
    DegreeMismatchError,
    DigraphValidationError,
    DigsymError,
    EmptyGeneratorsError,
    IntransitiveError,
    NotAMemberError,
    NotASubgroupError,
    NotSimpleError,
    PointRangeError,
    SearchLimitError,
    UnknownCaseError,
)
from .group import (
    PermutationGroup,
    SubgroupHandle,
    group_from_generators,
    is_regular,
    is_transitive,
    membership_test,
    orbits,
    point_stabilizer,
)
from .perm import Permutation, parse_permutation
from .products import diagonal_subgroup, direct_power, embed_tuple, wreath_product_action
from .subgrp import (
    are_conjugate,
    centralizer,
    check_factorization,
    conjugate_subgroup,
    derived_series,
    is_solvable,
    normal_closure,
    perfect_core,
    socle,
    solvable_radical,
    subgroup_intersection,
    subgroups_up_to_conjugacy,
)

__version__ = "0.1.0"
