"""Digraph constructions: coset digraphs, Cayley digraphs, diagonal
coset digraphs, the symbolic diagonal-construction certificate, and
product-action embeddings.

A coset digraph Cos(G, H, g) lives on the right cosets of H with
Hx -> Hy iff y x^-1 in HgH; it is a digraph exactly when g lies outside
H (no loops) and g^-1 lies outside HgH (antisymmetry).  Double-coset
membership is decided by sifting g*h*g through H's chain for h in H,
never by materializing HgH.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bounds import DEFAULT_BOUNDS, SearchBounds
from .cosets import CosetAction
from .digraph import Digraph, build_digraph
from .errors import (
    BoundExceededError,
    CosetSpecError,
    DigraphValidationError,
    NotAMemberError,
    NotSimpleError,
    PointRangeError,
)
from .group import PermutationGroup, SubgroupHandle, trivial_subgroup
from .perm import Permutation
from .products import diagonal_subgroup, direct_power, embed_tuple, wreath_product_action
from .subgrp import is_solvable, normal_closure, _universe


@dataclass(frozen=True)
class CosetDigraphSpec:
    """A triple (G, H, g) satisfying the coset digraph validity conditions."""

    G: PermutationGroup
    H: SubgroupHandle
    g: Permutation

    def validate(self, bounds: SearchBounds = DEFAULT_BOUNDS) -> None:
        if self.g not in self.G:
            raise NotAMemberError("g must be an element of G")
        if self.g in self.H.group:
            raise CosetSpecError("g lies in H, the relation would be reflexive")
        if double_coset_contains_inverse(self.H, self.g, bounds):
            raise CosetSpecError(
                "g^-1 lies in HgH, the relation would not be antisymmetric")


def double_coset_contains_inverse(H: SubgroupHandle, g: Permutation,
                                  bounds: SearchBounds = DEFAULT_BOUNDS) -> bool:
    """Whether g^-1 in HgH, via g^-1 in HgH iff some h in H has g*h*g in H."""
    Hgrp = H.group
    if Hgrp.order > bounds.element_enumeration:
        raise BoundExceededError(
            "element_enumeration", bounds.element_enumeration, Hgrp.order)
    g_t = g.images
    from .perm import _compose
    for h in Hgrp.chain.elements():
        if Hgrp.contains_tuple(_compose(_compose(g_t, h), g_t)):
            return True
    return False


def build_coset_digraph(spec: CosetDigraphSpec,
                        bounds: SearchBounds = DEFAULT_BOUNDS):
    """(digraph, coset action of G) for a valid CosetDigraphSpec.

    Vertices are cosets labeled breadth-first from H*1 (label 0); the arc
    set is the orbital of (H, Hg) under the coset action.
    """
    spec.validate(bounds)
    action = CosetAction(spec.G, spec.H, bounds=bounds)
    n = len(action.reps)
    # out-neighbors of vertex 0 are the cosets Hgh for h in H
    out0 = set()
    Hgrp = spec.H.group
    from .perm import _compose
    g_t = spec.g.images
    for h in Hgrp.chain.elements():
        out0.add(action.label_of(Permutation._raw(_compose(g_t, h))))
    # close the seed arcs under the action generators
    arcs = {(0, t) for t in out0}
    frontier = list(arcs)
    gen_images = [p.images for p in action.image_group.generators]
    while frontier:
        nxt = []
        for (u, v) in frontier:
            for g in gen_images:
                arc = (g[u], g[v])
                if arc not in arcs:
                    arcs.add(arc)
                    nxt.append(arc)
        frontier = nxt
    digraph = build_digraph(n, arcs, bounds)
    return digraph, action.image_group


def build_cayley_digraph(R: PermutationGroup, connection,
                         bounds: SearchBounds = DEFAULT_BOUNDS):
    """(digraph, right-regular action of R) for Cay(R, S).

    Vertices are R's elements in chain-transversal order; x -> y iff
    y x^-1 in S.  S must avoid the identity and meet S^-1 trivially.
    """
    S = list(connection)
    for s in S:
        if s not in R:
            raise NotAMemberError(f"connection element {s.cycle_string()} not in R")
        if s.is_identity():
            raise DigraphValidationError("identity in connection set (loop)")
    sset = {s.images for s in S}
    for s in S:
        if s.inverse().images in sset:
            raise DigraphValidationError(
                f"connection set meets its inverses at {s.cycle_string()}")
    elements = R.element_permutations(bounds)
    index = {p.images: i for i, p in enumerate(elements)}
    arcs = []
    for i, x in enumerate(elements):
        for s in S:
            arcs.append((i, index[(s * x).images]))
    digraph = build_digraph(len(elements), arcs, bounds)
    action_gens = [Permutation([index[(x * r).images] for x in elements])
                   for r in R.generators]
    return digraph, PermutationGroup(action_gens)


def build_diagonal_coset_digraph(T: PermutationGroup, k: int, g_tuple,
                                 bounds: SearchBounds = DEFAULT_BOUNDS):
    """Coset digraph of the diagonal D inside T^k with g = (g_1, ..., g_k).

    A desk-scale analogue of the paper-scale diagonal construction, which
    would fix k = |T|; any k >= 2 with |T|^(k-1) inside the coset bound is
    accepted.
    """
    if k < 2:
        raise PointRangeError("k must be >= 2")
    if len(g_tuple) != k:
        raise PointRangeError(f"g must have {k} coordinates")
    index = T.order ** (k - 1)
    if index > bounds.coset_index:
        raise BoundExceededError("coset_index", bounds.coset_index, index)
    Tk = direct_power(T, k)
    D = diagonal_subgroup(T, k, Tk)
    g = embed_tuple(T, list(g_tuple))
    spec = CosetDigraphSpec(G=Tk, H=D, g=g)
    return build_coset_digraph(spec, bounds)


@dataclass(frozen=True)
class GammaCertificate:
    """Symbolic record of the diagonal construction over a simple group T.

    For T of order k the construction takes G = T^k, H = D the diagonal
    and g = (t_1, ..., t_k) an enumeration of T; the certificate records
    the big-integer vertex count |T|^(k-1), the regular-complement facts
    |R| * |D| = |T|^k with R meet D trivial, and the order of D meet D^g.
    """

    T_order: int
    vertex_count: int
    valency: int
    intersection_RD_trivial: bool
    product_RD_is_G: bool
    diag_self_intersection_order: int


def gamma_certificate(T: PermutationGroup,
                      enumeration: Optional[list] = None,
                      bounds: SearchBounds = DEFAULT_BOUNDS) -> GammaCertificate:
    """Certificate for the diagonal construction over nonabelian simple T.

    Computed symbolically, never materializing T^k.  The enumeration
    argument, when given, must be a permutation of T's elements; all
    certificate quantities are independent of the order chosen, and the
    default is the chain-transversal order.
    """
    _require_nonabelian_simple(T, bounds)
    k = T.order
    elements = T.element_permutations(bounds)
    if enumeration is not None:
        if sorted(p.images for p in enumeration) != sorted(p.images for p in elements):
            raise NotAMemberError("enumeration must list every element of T exactly once")
        elements = list(enumeration)

    vertex_count = T.order ** (k - 1)
    # R = {(t_1, ..., t_{k-1}, 1)}: a diagonal element (t, ..., t) lies in
    # R iff its last coordinate t is 1, so R meet D = 1 identically; the
    # arithmetic fact to reproduce is |R| * |D| = |T|^k.
    r_order = T.order ** (k - 1)
    d_order = T.order
    product_ok = r_order * d_order == T.order ** k

    # D meet D^g = {(t, ..., t) : t^{t_i} all equal}; with {t_i} all of T
    # that condition says t is central, so scan T for central elements.
    gens = [g.images for g in T.generators]
    from .perm import _compose
    central = 0
    for p in elements:
        t = p.images
        if all(_compose(t, g) == _compose(g, t) for g in gens):
            central += 1
    valency = d_order // central
    return GammaCertificate(
        T_order=k,
        vertex_count=vertex_count,
        valency=valency,
        intersection_RD_trivial=True,
        product_RD_is_G=product_ok,
        diag_self_intersection_order=central,
    )


def _require_nonabelian_simple(T: PermutationGroup, bounds: SearchBounds) -> None:
    if T.order > 10_000:
        raise BoundExceededError("element_enumeration", 10_000, T.order)
    abelian = all((a * b).images == (b * a).images
                  for i, a in enumerate(T.generators)
                  for b in T.generators[i + 1:])
    if abelian:
        raise NotSimpleError("T is abelian; a nonabelian simple group is required")
    if is_solvable(T):
        raise NotSimpleError("T is solvable, hence not nonabelian simple")
    U = _universe(T, bounds.with_(subgroup_order=max(bounds.subgroup_order, T.order)))
    for rep in U.class_reps:
        if rep == U.identity_idx:
            continue
        N = normal_closure(T, [Permutation._raw(U.elems[rep])])
        if N.order != T.order:
            raise NotSimpleError("T has a proper nontrivial normal subgroup")


def product_action_digraph(sigma: Digraph, G: PermutationGroup, m: int,
                           bounds: SearchBounds = DEFAULT_BOUNDS):
    """(sigma^m, G wr Sym_m in product action), verified to act by automorphisms."""
    from .analyze import bind_action  # local import to avoid a cycle
    from .digraph import power
    if m < 1:
        raise PointRangeError("m must be >= 1")
    bind_action(sigma, G)           # G must act on sigma by automorphisms
    if m == 1:
        return sigma, G
    product = power(sigma, m, bounds)
    wreath = wreath_product_action(G, m, bounds)
    bind_action(product, wreath)    # rechecked generator by generator
    return product, wreath
