"""Binding groups to digraphs and the transitivity / lemma checkers.

`is_s_arc_transitive` returns the distinguished sentinel VACUOUS when the
digraph has no s-arcs at all; silent vacuous truth would corrupt sweeps,
so callers must compare against True explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .arith import FactoredInteger, factorize, half_exponent_divisor, p_part, prime_divisors
from .blocks import is_primitive
from .bounds import DEFAULT_BOUNDS, SearchBounds
from .digraph import (
    Digraph,
    count_s_arcs,
    is_directed_cycle,
    is_s_arc,
    is_strongly_connected,
    valency_profile,
)
from .errors import (
    BoundExceededError,
    DegreeMismatchError,
    DigraphValidationError,
    PointRangeError,
)
from .group import PermutationGroup, SubgroupHandle, point_stabilizer
from .perm import Permutation
from .products import wreath_product_action
from .subgrp import (
    _universe,
    are_conjugate,
    check_factorization,
    is_quotient_simple,
    is_solvable,
    perfect_core,
    solvable_radical,
    subgroup_intersection,
    subgroups_up_to_conjugacy,
)


class _Vacuous:
    """Sentinel: the transitivity question has no instances to act on."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "VACUOUS"


VACUOUS = _Vacuous()


@dataclass(frozen=True)
class DigraphAction:
    """A digraph together with a vertex group acting by automorphisms."""

    digraph: Digraph
    group: PermutationGroup


def bind_action(digraph: Digraph, G: PermutationGroup) -> DigraphAction:
    """Validate that every generator of G maps the arc set onto itself."""
    if G.degree != digraph.vertex_count:
        raise DegreeMismatchError(
            f"group degree {G.degree} != vertex count {digraph.vertex_count}")
    arcs = digraph.arc_set
    for g in G.generators:
        img = g.images
        for (u, v) in arcs:
            if (img[u], img[v]) not in arcs:
                raise DigraphValidationError(
                    f"generator {g.cycle_string()} maps arc ({u}, {v}) to "
                    f"({img[u]}, {img[v]}), which is not an arc")
    return DigraphAction(digraph=digraph, group=G)


def is_vertex_transitive(action: DigraphAction) -> bool:
    return action.group.is_transitive()


def is_s_arc_transitive(action: DigraphAction, s: int,
                        bounds: SearchBounds = DEFAULT_BOUNDS):
    """True / False / VACUOUS: do the s-arcs form a single orbit?

    The orbit of the least s-arc is grown under the generators and
    compared against the exact dynamic-programming count.
    """
    if s < 0:
        raise PointRangeError("s must be nonnegative")
    digraph = action.digraph
    total = count_s_arcs(digraph, s)
    if total == 0:
        return VACUOUS
    if total > bounds.s_arc_enumeration:
        raise BoundExceededError("s_arc_enumeration", bounds.s_arc_enumeration, total)
    start = _least_s_arc(digraph, s)
    if start is None:
        return VACUOUS
    gen_images = [g.images for g in action.group.generators]
    orbit = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for walk in frontier:
            for g in gen_images:
                img = tuple(g[v] for v in walk)
                if img not in orbit:
                    orbit.add(img)
                    nxt.append(img)
        frontier = nxt
    return len(orbit) == total


def _least_s_arc(digraph: Digraph, s: int) -> Optional[tuple]:
    outs = digraph.out_neighbors
    for v0 in range(digraph.vertex_count):
        walk = [v0]
        while len(walk) < s + 1:
            if not outs[walk[-1]]:
                break
            walk.append(outs[walk[-1]][0])
        if len(walk) == s + 1:
            return tuple(walk)
    return None


# ---------------------------------------------------------------------------
# two-arc stabilizer data and the factorization lemma
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwoArcStabilizerData:
    two_arc: tuple
    Gv: SubgroupHandle
    Guv: SubgroupHandle
    Gvw: SubgroupHandle
    order_Gv: FactoredInteger
    order_Guv: FactoredInteger
    order_Gvw: FactoredInteger


def two_arc_stabilizer_data(action: DigraphAction, two_arc,
                            bounds: SearchBounds = DEFAULT_BOUNDS) -> TwoArcStabilizerData:
    """Chained point stabilizers G_v, G_uv, G_vw along a 2-arc u -> v -> w."""
    u, v, w = two_arc
    if not is_s_arc(action.digraph, (u, v, w)):
        raise PointRangeError(f"({u}, {v}, {w}) is not a 2-arc of the digraph")
    G = action.group
    Gv = point_stabilizer(G, v)
    Gv_grp = Gv.group
    Guv_grp = Gv_grp.stabilizer_group(u)
    Gvw_grp = Gv_grp.stabilizer_group(w)
    Guv = SubgroupHandle(G, Guv_grp.generators, _group=Guv_grp, _validate=False)
    Gvw = SubgroupHandle(G, Gvw_grp.generators, _group=Gvw_grp, _validate=False)
    return TwoArcStabilizerData(
        two_arc=(u, v, w),
        Gv=Gv, Guv=Guv, Gvw=Gvw,
        order_Gv=factorize(Gv.order),
        order_Guv=factorize(Guv.order),
        order_Gvw=factorize(Gvw.order),
    )


@dataclass(frozen=True)
class ClauseResult:
    status: str                       # "pass" | "fail" | "not-applicable"
    detail: str
    witness: Optional[str] = None


@dataclass(frozen=True)
class PrimeFactnReport:
    applicable: bool
    reason: str
    clause_a: Optional[ClauseResult] = None
    clause_b: Optional[ClauseResult] = None
    clause_c: Optional[ClauseResult] = None

    @property
    def all_pass(self) -> bool:
        return (self.applicable
                and self.clause_a.status == "pass"
                and self.clause_b.status == "pass"
                and self.clause_c.status in ("pass", "not-applicable"))


def verify_lemma_prime_factn(action: DigraphAction, data: TwoArcStabilizerData,
                             bounds: SearchBounds = DEFAULT_BOUNDS) -> PrimeFactnReport:
    """Check the three stabilizer-factorization clauses on a 2-arc.

    (a) G_v = G_uv * G_vw; (b) |G_uv| = |G_vw| divisible by the
    half-exponent divisor of |G_v|; (c) G_uv and G_vw conjugate in G but
    not in G_v.  Clause (c) is reported not-applicable when the two arc
    stabilizers coincide (directed cycles with regular groups), where the
    clause as stated cannot hold.
    """
    if not is_strongly_connected(action.digraph):
        return PrimeFactnReport(False, "digraph is not connected")
    if is_s_arc_transitive(action, 2, bounds) is not True:
        return PrimeFactnReport(False, "action is not 2-arc-transitive")

    G = action.group
    Gv, Guv, Gvw = data.Gv, data.Guv, data.Gvw

    if check_factorization(Gv, Guv, Gvw, bounds):
        clause_a = ClauseResult("pass", f"|Gv| = {Gv.order} = |Guv||Gvw|/|Guv^Gvw|")
    else:
        clause_a = ClauseResult("fail", "Gv != Guv * Gvw")

    he = half_exponent_divisor(data.order_Gv)
    if Guv.order == Gvw.order and Guv.order % he == 0:
        clause_b = ClauseResult(
            "pass", f"|Guv| = |Gvw| = {Guv.order} divisible by {he}")
    else:
        clause_b = ClauseResult(
            "fail", f"|Guv| = {Guv.order}, |Gvw| = {Gvw.order}, divisor {he}")

    if Guv.same_subgroup(Gvw):
        clause_c = ClauseResult(
            "not-applicable", "Guv = Gvw; the nonconjugacy clause is degenerate")
    else:
        in_G = are_conjugate(G, Guv, Gvw, bounds)
        in_Gv = are_conjugate(Gv.group, _reparent(Gv.group, Guv),
                              _reparent(Gv.group, Gvw), bounds)
        if in_G is not None and in_Gv is None:
            clause_c = ClauseResult(
                "pass", "conjugate in G, not conjugate in Gv",
                witness=in_G.cycle_string())
        else:
            detail = ("not conjugate in G" if in_G is None
                      else "conjugate already in Gv")
            clause_c = ClauseResult("fail", detail)
    return PrimeFactnReport(True, "", clause_a, clause_b, clause_c)


def _reparent(parent: PermutationGroup, handle: SubgroupHandle) -> SubgroupHandle:
    return SubgroupHandle(parent, handle.generators, _group=handle.group,
                          _validate=False)


def coset_two_arc_criterion(spec, bounds: SearchBounds = DEFAULT_BOUNDS) -> bool:
    """H = (H meet H^(g^-1)) * (H meet H^g), decided by order arithmetic.

    Evaluated at the canonical 2-arc (Hg^-1, H, Hg) entirely inside G; no
    digraph is materialized.
    """
    spec.validate(bounds)
    from .subgrp import conjugate_subgroup
    H = spec.H
    K1 = subgroup_intersection(H, conjugate_subgroup(H, spec.g.inverse()), bounds)
    K2 = subgroup_intersection(H, conjugate_subgroup(H, spec.g), bounds)
    return check_factorization(H, K1, K2, bounds)


# ---------------------------------------------------------------------------
# regular subgroups and Cayley recognition
# ---------------------------------------------------------------------------

def find_regular_subgroup(G: PermutationGroup,
                          bounds: SearchBounds = DEFAULT_BOUNDS) -> Optional[SubgroupHandle]:
    """A subgroup acting regularly on the points, or a verified None.

    Backtrack: a regular subgroup R contains exactly one element mapping
    point 0 to each point v, every nonidentity element is fixed-point
    free, and |R| equals the degree.  Candidates are the fixed-point-free
    elements of order dividing the degree, grouped by their image of 0
    and ordered by (element order, image tuple); the search repeatedly
    picks the least point not yet an image of 0 and tries each candidate,
    pruning closures that exceed the degree, acquire fixed points, or hit
    an order not dividing the degree.  Exhaustion is a proof of None.
    """
    n = G.degree
    if G.order % n != 0 or not G.is_transitive():
        return None
    if G.order > bounds.regular_search_order:
        raise BoundExceededError(
            "regular_search_order", bounds.regular_search_order, G.order)

    identity = G.chain.identity
    by_first: dict[int, list] = {v: [] for v in range(1, n)}
    for t in G.chain.elements():
        if t == identity:
            continue
        if any(t[i] == i for i in range(n)):
            continue
        p = Permutation._raw(t)
        o = p.order()
        if n % o == 0:
            by_first[t[0]].append((o, t))
    for v in by_first:
        by_first[v].sort()

    from .perm import _compose
    node_limit = bounds.regular_search_nodes
    nodes = 0
    failed: set = set()

    def close(base: frozenset, new: tuple) -> Optional[frozenset]:
        els = set(base)
        els.add(new)
        frontier = [new]
        gens = [t for t in els if t != identity]
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = _compose(a, g)
                    if c not in els:
                        if any(c[i] == i for i in range(n)) and c != identity:
                            return None
                        els.add(c)
                        if len(els) > n:
                            return None
                        nxt.append(c)
            frontier = nxt
        if n % len(els) != 0:
            return None
        return frozenset(els)

    def dfs(current: frozenset) -> Optional[frozenset]:
        nonlocal nodes
        nodes += 1
        if nodes > node_limit:
            from .errors import SearchLimitError
            raise SearchLimitError(node_limit)
        if len(current) == n:
            return current
        hit = {t[0] for t in current}
        target = min(v for v in range(n) if v not in hit)
        for _, cand in by_first[target]:
            grown = close(current, cand)
            if grown is None or grown in failed:
                continue
            found = dfs(grown)
            if found is not None:
                return found
        failed.add(current)
        return None

    found = dfs(frozenset({identity}))
    if found is None:
        return None
    # reduce the element set to generators, in deterministic order
    from .group import StabilizerChain
    chain = StabilizerChain(n)
    kept = []
    for t in sorted(found):
        if t != identity and not chain.contains(t):
            chain.extend(t)
            kept.append(Permutation._raw(t))
    sub = PermutationGroup(kept, _chain=chain)
    assert sub.order == n and sub.is_regular()
    return SubgroupHandle(G, sub.generators, _group=sub, _validate=False)


def is_cayley(action: DigraphAction,
              bounds: SearchBounds = DEFAULT_BOUNDS) -> Optional[SubgroupHandle]:
    """A regular subgroup of the bound group, i.e. a Cayley witness."""
    return find_regular_subgroup(action.group, bounds)


# ---------------------------------------------------------------------------
# valency lemma
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ValencyLemmaReport:
    applicable: bool
    reason: str
    branch: Optional[str] = None       # "prime-cycle" | "valency>=3"
    valency: Optional[int] = None
    holds: bool = False


def lemma_val_check(action: DigraphAction,
                    bounds: SearchBounds = DEFAULT_BOUNDS) -> ValencyLemmaReport:
    """Vertex-primitive 1-arc-transitive digraphs are prime directed
    cycles or have valency at least 3."""
    if not action.group.is_transitive() or not is_primitive(action.group):
        return ValencyLemmaReport(False, "action is not vertex-primitive")
    if is_s_arc_transitive(action, 1, bounds) is not True:
        return ValencyLemmaReport(False, "action is not 1-arc-transitive")
    report = valency_profile(action.digraph)
    k = report.valency
    if k is None:
        return ValencyLemmaReport(True, "", branch=None, valency=None, holds=False)
    if is_directed_cycle(action.digraph):
        from .arith import is_prime
        if is_prime(action.digraph.vertex_count):
            return ValencyLemmaReport(True, "", branch="prime-cycle",
                                      valency=k, holds=True)
        return ValencyLemmaReport(True, "", branch=None, valency=k, holds=False)
    if k >= 3:
        return ValencyLemmaReport(True, "", branch="valency>=3",
                                  valency=k, holds=True)
    return ValencyLemmaReport(True, "", branch=None, valency=k, holds=False)


# ---------------------------------------------------------------------------
# regular-subgroup obstruction for wreath products in product action
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RglrSubgroupEntry:
    order: int
    gens: tuple
    cond_a: bool
    cond_b: bool
    quotient_core_order: int
    witness_prime: Optional[int]


@dataclass(frozen=True)
class RglrHypothesisReport:
    holds: bool
    entries: tuple
    evaluated_directly_on_group: bool
    note: str = ""


def lemma_rglr_hypothesis_check(G: PermutationGroup,
                                bounds: SearchBounds = DEFAULT_BOUNDS) -> RglrHypothesisReport:
    """Evaluate the no-regular-subgroup hypothesis for G on its points.

    For every transitive core-free subgroup Y: (a) the perfect core of
    Y/Rad(Y) must be nonabelian simple of order above the degree, and
    (b) some prime p must have the p-part of that core equal to the
    p-parts of |G| and of the degree.  When no transitive core-free
    subgroup exists at all, the conditions are evaluated on G itself and
    reported as a direct evaluation.
    """
    n = G.degree
    U = _universe(G, bounds)
    classes = subgroups_up_to_conjugacy(G, bounds=bounds)

    entries = []
    candidates = []
    for handle in classes:
        Y = handle.group
        if Y.order % n != 0 or not Y.is_transitive():
            continue
        yset = {U.index[t] for t in Y.element_tuples(bounds)}
        core_free = True
        for i in sorted(yset):
            if i == U.identity_idx:
                continue
            if not all(m in yset for m in U.class_members[U.class_of[i]]):
                continue
            core_free = False
            break
        if core_free:
            candidates.append(handle)

    direct = not candidates
    if direct:
        candidates = [SubgroupHandle(G, G.generators, _group=G, _validate=False)]

    all_ok = True
    for handle in candidates:
        entry = _rglr_entry(G, handle, n, bounds)
        entries.append(entry)
        if not (entry.cond_a and entry.cond_b):
            all_ok = False

    note = "no transitive core-free subgroup; conditions evaluated on G itself" \
        if direct else ""
    return RglrHypothesisReport(holds=all_ok, entries=tuple(entries),
                                evaluated_directly_on_group=direct, note=note)


def _rglr_entry(G: PermutationGroup, handle: SubgroupHandle, n: int,
                bounds: SearchBounds) -> RglrSubgroupEntry:
    Y = handle.group
    gens = tuple(g.cycle_string() for g in handle.generators)
    if is_solvable(Y):
        return RglrSubgroupEntry(Y.order, gens, False, False, 1, None)
    P = perfect_core(Y).group
    R = solvable_radical(Y, bounds).group
    PR = _intersection(P, R, bounds)
    q_order = P.order // PR.order
    cond_a = q_order > n and is_quotient_simple(P, PR, bounds)
    witness = None
    for p in sorted(prime_divisors(G.order)):
        if p_part(q_order, p) == p_part(G.order, p) == p_part(n, p):
            witness = p
            break
    cond_b = witness is not None
    return RglrSubgroupEntry(Y.order, gens, cond_a, cond_b, q_order, witness)


def _intersection(A: PermutationGroup, B: PermutationGroup,
                  bounds: SearchBounds) -> PermutationGroup:
    from .subgrp import _intersection_group
    return _intersection_group(A, B, bounds)


def lemma_rglr_brute_force(G: PermutationGroup, m: int,
                           bounds: SearchBounds = DEFAULT_BOUNDS) -> Optional[SubgroupHandle]:
    """Search G wr Sym_m in product action for a regular subgroup."""
    if m < 2:
        raise PointRangeError("m must be >= 2")
    wreath = wreath_product_action(G, m, bounds)
    return find_regular_subgroup(wreath, bounds)
