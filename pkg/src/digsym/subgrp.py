"""Subgroup operations: intersections, conjugacy, structure, enumeration.

Everything here is exact.  Operations that enumerate elements or
subgroups are guarded by the configured bounds and refuse oversized
inputs with a typed error instead of approximating.

The subgroup enumeration is cyclic extension over solvable layers: every
subgroup sits above its perfect core by a chain of prime-index normal
steps, so starting from the trivial group and all perfect subgroups
("seeds") and repeatedly extending a class representative U by elements
x of its normalizer with prime coset order reaches every conjugacy
class.  Perfect seeds are the perfect cores of two-generated subgroups
of the group's own perfect core; completeness of that seeding rests on
two-generation of the perfect subgroups in range, which holds throughout
the validated sizes.
"""

from __future__ import annotations

from array import array
from collections import deque
from typing import Iterable, Optional

from .bounds import DEFAULT_BOUNDS, SearchBounds
from .errors import (
    BoundExceededError,
    NotAMemberError,
    NotASubgroupError,
    SearchLimitError,
)
from .group import (
    PermutationGroup,
    StabilizerChain,
    SubgroupHandle,
    full_subgroup,
    trivial_subgroup,
)
from .perm import Permutation, _compose, _invert


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# ---------------------------------------------------------------------------
# element universe: indexed element list with lazy multiplication rows
# ---------------------------------------------------------------------------

class _Universe:
    """Indexed element table of a small group, with conjugacy classes."""

    def __init__(self, G: PermutationGroup, bounds: SearchBounds):
        if G.order > bounds.subgroup_order:
            raise BoundExceededError("subgroup_order", bounds.subgroup_order, G.order)
        self.G = G
        self.elems: list[tuple] = G.element_tuples(bounds)
        self.size = len(self.elems)
        self.index: dict[tuple, int] = {t: i for i, t in enumerate(self.elems)}
        self.identity_idx = self.index[G.chain.identity]
        self.inv = array("l", (self.index[_invert(t)] for t in self.elems))
        self._rows: list = [None] * self.size
        self.gen_idx = sorted({self.index[g.images] for g in G.generators}
                              - {self.identity_idx})
        self._build_classes()

    def _build_classes(self) -> None:
        class_of = array("l", [-1] * self.size)
        reps = []
        for i in range(self.size):
            if class_of[i] >= 0:
                continue
            cid = len(reps)
            reps.append(i)
            class_of[i] = cid
            frontier = [i]
            while frontier:
                nxt = []
                for t in frontier:
                    for g in self.gen_idx:
                        c = self.conj(t, g)
                        if class_of[c] < 0:
                            class_of[c] = cid
                            nxt.append(c)
                frontier = nxt
        self.class_of = class_of
        self.class_reps = reps
        members: list[list[int]] = [[] for _ in reps]
        for i in range(self.size):
            members[class_of[i]].append(i)
        self.class_members = members

    def mul(self, i: int, j: int) -> int:
        row = self._rows[i]
        if row is None:
            e = self.elems[i]
            idx = self.index
            row = array("l", (idx[_compose(e, f)] for f in self.elems))
            self._rows[i] = row
        return row[j]

    def conj(self, t: int, g: int) -> int:
        return self.mul(self.mul(self.inv[g], t), g)

    def closure(self, gens: Iterable[int], abort_above: Optional[int] = None):
        """Subgroup generated by the given element indices, as a set.

        Returns None if the closure grows past `abort_above`.
        """
        id0 = self.identity_idx
        gens = [g for g in dict.fromkeys(gens) if g != id0]
        els = {id0}
        els.update(gens)
        if abort_above is not None and len(els) > abort_above:
            return None
        frontier = list(els - {id0})
        while frontier:
            nxt = []
            for a in frontier:
                for g in gens:
                    c = self.mul(a, g)
                    if c not in els:
                        els.add(c)
                        if abort_above is not None and len(els) > abort_above:
                            return None
                        nxt.append(c)
            frontier = nxt
        return els

    def handle(self, gens_idx, parent: PermutationGroup) -> SubgroupHandle:
        gens = [Permutation._raw(self.elems[i]) for i in gens_idx]
        if not gens:
            return trivial_subgroup(parent)
        return SubgroupHandle(parent, gens, _validate=False)


def _universe(G: PermutationGroup, bounds: SearchBounds) -> _Universe:
    key = ("universe",)
    if key not in G._caches:
        G._caches[key] = _Universe(G, bounds)
    return G._caches[key]


# ---------------------------------------------------------------------------
# intersection, conjugation, factorization
# ---------------------------------------------------------------------------

def _as_group(x) -> PermutationGroup:
    return x.group if isinstance(x, SubgroupHandle) else x


def _intersection_group(A: PermutationGroup, B: PermutationGroup,
                        bounds: SearchBounds) -> PermutationGroup:
    """Exact A Intersect B by listing the smaller group's elements."""
    small, big = (A, B) if A.order <= B.order else (B, A)
    if small.order > bounds.element_enumeration:
        raise BoundExceededError(
            "element_enumeration", bounds.element_enumeration, small.order)
    chain = StabilizerChain(small.degree)
    kept: list[tuple] = []
    for t in small.chain.elements():
        if big.contains_tuple(t) and not chain.contains(t):
            chain.extend(t)
            kept.append(t)
    if not kept:
        return PermutationGroup.trivial(small.degree)
    return PermutationGroup([Permutation._raw(t) for t in kept], _chain=chain)


def subgroup_intersection(A: SubgroupHandle, B: SubgroupHandle,
                          bounds: SearchBounds = DEFAULT_BOUNDS) -> SubgroupHandle:
    """Generators of A Intersect B inside their common parent."""
    if A.parent.degree != B.parent.degree or not A.parent.same_group(B.parent):
        raise NotASubgroupError("intersection requires a common parent group")
    inter = _intersection_group(A.group, B.group, bounds)
    return SubgroupHandle(A.parent, inter.generators, _group=inter, _validate=False)


def conjugate_subgroup(H: SubgroupHandle, g: Permutation) -> SubgroupHandle:
    """H^g = g^-1 H g inside the same parent."""
    if g not in H.parent:
        raise NotAMemberError("conjugating element must lie in the parent group")
    return SubgroupHandle(H.parent, [h.conjugate(g) for h in H.generators],
                          _validate=False)


def check_factorization(H, A: SubgroupHandle, B: SubgroupHandle,
                        bounds: SearchBounds = DEFAULT_BOUNDS) -> bool:
    """True iff H = AB, tested as |A|*|B| / |A Intersect B| = |H|."""
    Hgrp = _as_group(H)
    for name, sub in (("A", A), ("B", B)):
        for g in sub.generators:
            if g not in Hgrp:
                raise NotASubgroupError(f"factor {name} is not contained in H")
    inter = _intersection_group(A.group, B.group, bounds)
    return A.order * B.order == Hgrp.order * inter.order


# ---------------------------------------------------------------------------
# conjugacy transporter backtrack
# ---------------------------------------------------------------------------

def are_conjugate(G: PermutationGroup, A: SubgroupHandle, B: SubgroupHandle,
                  bounds: SearchBounds = DEFAULT_BOUNDS) -> Optional[Permutation]:
    """Some x in G with A^x = B, or None when no transporter exists.

    Depth-first backtrack over the stabilizer chain of G, choosing base
    images in the chain's ordered-orbit order, so the first (and returned)
    transporter is the least element in chain coordinates; when A = B that
    is the identity.  Partial assignments are pruned by matching A-orbit
    sizes against B-orbit sizes and by keeping the induced orbit
    correspondence consistent.  Exhausting the node budget raises
    `SearchLimitError`, which is distinct from a verified None.
    """
    for sub in (A, B):
        for g in sub.generators:
            if g not in G:
                raise NotAMemberError("subgroup generators must lie in G")
    Agrp, Bgrp = A.group, B.group
    if Agrp.order != Bgrp.order:
        return None
    orbsA, orbsB = Agrp.orbits(), Bgrp.orbits()
    if sorted(map(len, orbsA)) != sorted(map(len, orbsB)):
        return None

    n = G.degree
    orb_id_A = [0] * n
    orb_id_B = [0] * n
    orb_size_A = [0] * n
    orb_size_B = [0] * n
    for oid, orb in enumerate(orbsA):
        for v in orb:
            orb_id_A[v] = oid
            orb_size_A[v] = len(orb)
    for oid, orb in enumerate(orbsB):
        for v in orb:
            orb_id_B[v] = oid
            orb_size_B[v] = len(orb)
    size_of_B_orbit = [len(orb) for orb in orbsB]

    agens = [g.images for g in Agrp.generators]
    levels = G.chain.levels
    identity = G.chain.identity
    limit = bounds.transporter_nodes
    nodes = 0

    def leaf_ok(tau: tuple) -> bool:
        inv = _invert(tau)
        for a in agens:
            if not Bgrp.contains_tuple(_compose(_compose(inv, a), tau)):
                return False
        return True

    def dfs(i: int, tau: tuple, amap: dict, bused: set) -> Optional[tuple]:
        nonlocal nodes
        nodes += 1
        if nodes > limit:
            raise SearchLimitError(limit)
        if i == len(levels):
            return tau if leaf_ok(tau) else None
        lv = levels[i]
        p = lv.point
        for a in lv.ordered_orbit:
            tau2 = _compose(lv.transversal[a], tau)
            img = tau2[p]
            if orb_size_A[p] != orb_size_B[img]:
                continue
            oa, ob = orb_id_A[p], orb_id_B[img]
            known = amap.get(oa)
            if known is not None:
                if known != ob:
                    continue
                amap2, bused2 = amap, bused
            elif ob in bused:
                continue
            else:
                amap2 = dict(amap)
                amap2[oa] = ob
                bused2 = bused | {ob}
            found = dfs(i + 1, tau2, amap2, bused2)
            if found is not None:
                return found
        return None

    result = dfs(0, identity, {}, set())
    if result is None:
        return None
    return Permutation._raw(result)


# ---------------------------------------------------------------------------
# derived series, radical, socle, centralizer
# ---------------------------------------------------------------------------

def normal_closure(G: PermutationGroup, seeds: Iterable[Permutation]) -> PermutationGroup:
    """Smallest subgroup containing the seeds and normal in G."""
    identity = G.chain.identity
    chain = StabilizerChain(G.degree)
    kept: list[tuple] = []
    queue = deque(s.images for s in seeds)
    gens = [g.images for g in G.generators]
    while queue:
        t = queue.popleft()
        if t == identity or chain.contains(t):
            continue
        chain.extend(t)
        kept.append(t)
        for g in gens:
            queue.append(_compose(_compose(_invert(g), t), g))
    if not kept:
        return PermutationGroup.trivial(G.degree)
    return PermutationGroup([Permutation._raw(t) for t in kept], _chain=chain)


def _derived_group(G: PermutationGroup) -> PermutationGroup:
    comms = []
    gens = G.generators
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            comms.append(a.inverse() * b.inverse() * a * b)
    return normal_closure(G, comms)


def _derived_series_groups(G: PermutationGroup) -> list[PermutationGroup]:
    series = [G]
    while True:
        nxt = _derived_group(series[-1])
        if nxt.order == series[-1].order:
            break
        series.append(nxt)
        if nxt.order == 1:
            break
    return series


def derived_series(G: PermutationGroup) -> list[SubgroupHandle]:
    """G > G' > G'' > ..., ending at the first repeated (perfect) term."""
    return [SubgroupHandle(G, H.generators, _group=H, _validate=False)
            for H in _derived_series_groups(G)]


def perfect_core(G: PermutationGroup) -> SubgroupHandle:
    """The terminal term of the derived series."""
    H = _derived_series_groups(G)[-1]
    return SubgroupHandle(G, H.generators, _group=H, _validate=False)


def is_solvable(G: PermutationGroup) -> bool:
    return _derived_series_groups(G)[-1].order == 1


def _normal_closure_classes(G: PermutationGroup, bounds: SearchBounds):
    """Distinct normal closures of the nontrivial class representatives."""
    U = _universe(G, bounds)
    out = []
    seen = set()
    for rep in U.class_reps:
        if rep == U.identity_idx:
            continue
        N = normal_closure(G, [Permutation._raw(U.elems[rep])])
        key = frozenset(U.index[t] for t in N.element_tuples(bounds))
        if key not in seen:
            seen.add(key)
            out.append((key, N))
    return out


def solvable_radical(G: PermutationGroup,
                     bounds: SearchBounds = DEFAULT_BOUNDS) -> SubgroupHandle:
    """Largest solvable normal subgroup, as the join of solvable closures."""
    rad_gens: list[Permutation] = []
    rad = PermutationGroup.trivial(G.degree)
    for _, N in _normal_closure_classes(G, bounds):
        if is_solvable(N) and not all(g in rad for g in N.generators):
            rad_gens.extend(N.generators)
            rad = PermutationGroup(rad_gens)
    if rad.order == 1:
        return trivial_subgroup(G)
    return SubgroupHandle(G, rad.generators, _group=rad, _validate=False)


def socle(G: PermutationGroup, bounds: SearchBounds = DEFAULT_BOUNDS) -> SubgroupHandle:
    """Product of the minimal normal subgroups."""
    closures = _normal_closure_classes(G, bounds)
    minimal = []
    for key, N in closures:
        if not any(other < key for other, _ in closures):
            minimal.append(N)
    gens: list[Permutation] = []
    for N in minimal:
        gens.extend(N.generators)
    if not gens:
        return trivial_subgroup(G)
    soc = PermutationGroup(gens)
    return SubgroupHandle(G, soc.generators, _group=soc, _validate=False)


def centralizer(G: PermutationGroup, H,
                bounds: SearchBounds = DEFAULT_BOUNDS) -> SubgroupHandle:
    """Centralizer of H in G by bounded element scan."""
    U = _universe(G, bounds)
    hgens = [g.images for g in _as_group(H).generators]
    chain = StabilizerChain(G.degree)
    kept: list[tuple] = []
    for t in U.elems:
        if all(_compose(t, h) == _compose(h, t) for h in hgens):
            if not chain.contains(t):
                chain.extend(t)
                kept.append(t)
    if not kept:
        return trivial_subgroup(G)
    grp = PermutationGroup([Permutation._raw(t) for t in kept], _chain=chain)
    return SubgroupHandle(G, grp.generators, _group=grp, _validate=False)


# ---------------------------------------------------------------------------
# subgroup enumeration up to conjugacy
# ---------------------------------------------------------------------------

def _set_normal_closure(U: _Universe, seeds, conj_gens):
    """(set, gens) of the closure of seeds under conjugation by conj_gens."""
    gens: list[int] = []
    current = {U.identity_idx}
    queue = deque(seeds)
    while queue:
        t = queue.popleft()
        if t in current:
            continue
        gens.append(t)
        current = U.closure(gens)
        for g in conj_gens:
            queue.append(U.conj(t, g))
    return current, gens


def _set_derived(U: _Universe, gens):
    comms = []
    for i, a in enumerate(gens):
        for b in gens[i + 1:]:
            ia, ib = U.inv[a], U.inv[b]
            comms.append(U.mul(U.mul(U.mul(ia, ib), a), b))
    return _set_normal_closure(U, comms, gens)


def _set_perfect_core(U: _Universe, gens):
    cur_gens = list(gens)
    cur_size = None
    while True:
        dset, dgens = _set_derived(U, cur_gens)
        if cur_size is not None and len(dset) == cur_size:
            return dset, cur_gens
        if len(dset) == 1:
            return dset, []
        cur_size = len(dset)
        cur_gens = dgens


def _perfect_seeds(U: _Universe, bound: int) -> dict:
    """Perfect subgroups up to order `bound`, keyed by element set.

    Scans two-generated subgroups of the group's perfect core: one
    generator runs over class representatives inside the core, the other
    over all core elements, and each closure contributes its perfect
    core.  Closures larger than half the core collapse to the core
    itself, which is seeded directly, so those scans abort early.
    """
    G = U.G
    core_handle = perfect_core(G)
    core = core_handle.group
    if core.order == 1:
        return {}
    bounds_local = SearchBounds(element_enumeration=max(
        DEFAULT_BOUNDS.element_enumeration, core.order))
    core_set = frozenset(U.index[t] for t in core.element_tuples(bounds_local))
    core_gens = [U.index[g.images] for g in core.generators]
    seeds: dict[frozenset, tuple] = {}
    if core.order <= bound:
        seeds[core_set] = tuple(core_gens)
    half = len(core_set) // 2
    cache: set = set()
    id0 = U.identity_idx
    for r in U.class_reps:
        if r == id0 or r not in core_set:
            continue
        for y in core_set:
            if y == id0:
                continue
            closure = U.closure((r, y), abort_above=half)
            if closure is None:
                continue
            key = frozenset(closure)
            if key in cache:
                continue
            cache.add(key)
            pset, pgens = _set_perfect_core(U, [r, y])
            if 1 < len(pset) <= bound:
                pkey = frozenset(pset)
                if pkey not in seeds:
                    seeds[pkey] = tuple(pgens)
    return seeds


def subgroups_up_to_conjugacy(G: PermutationGroup, order_bound: Optional[int] = None,
                              bounds: SearchBounds = DEFAULT_BOUNDS) -> list[SubgroupHandle]:
    """One representative per conjugacy class of subgroups of G.

    With `order_bound` set, classes of order above the bound are omitted
    (the enumeration never needs to pass through them).  Results are
    cached per group and bound.
    """
    bound = G.order if order_bound is None else min(order_bound, G.order)
    cache_key = ("subgroup_classes", bound)
    if cache_key in G._caches:
        return G._caches[cache_key]
    U = _universe(G, bounds)

    reg: dict[frozenset, int] = {}
    classes: list[dict] = []

    def register(fset: frozenset, gens: tuple) -> int:
        cid = len(classes)
        classes.append({"set": fset, "gens": gens})
        reg[fset] = cid
        frontier = [fset]
        while frontier:
            nxt = []
            for cur in frontier:
                for g in U.gen_idx:
                    conj_set = frozenset(U.conj(t, g) for t in cur)
                    if conj_set not in reg:
                        reg[conj_set] = cid
                        nxt.append(conj_set)
            frontier = nxt
        return cid

    queue: deque[int] = deque()
    queue.append(register(frozenset({U.identity_idx}), ()))
    if bound >= 60:
        for pset, pgens in sorted(_perfect_seeds(U, bound).items(),
                                  key=lambda kv: (len(kv[0]), sorted(kv[0]))):
            if pset not in reg:
                queue.append(register(pset, pgens))

    while queue:
        cid = queue.popleft()
        rec = classes[cid]
        sset = rec["set"]
        o = len(sset)
        if o * 2 > bound:
            continue
        gens = rec["gens"]
        # normalizer of the representative, by scanning all elements
        norm = []
        for g in range(U.size):
            if all(U.conj(t, g) in sset for t in gens):
                norm.append(g)
        max_p = bound // o
        for x in norm:
            if x in sset:
                continue
            e = 1
            z = x
            while z not in sset:
                z = U.mul(z, x)
                e += 1
            if e > max_p or not _is_prime(e):
                continue
            new = set(sset)
            zpow = x
            for _ in range(e - 1):
                new.update(U.mul(s, zpow) for s in sset)
                zpow = U.mul(zpow, x)
            fnew = frozenset(new)
            if fnew in reg:
                continue
            queue.append(register(fnew, gens + (x,)))

    ordered = sorted(classes, key=lambda rec: (len(rec["set"]), sorted(rec["set"])))
    result = [U.handle(rec["gens"], G) for rec in ordered]
    G._caches[cache_key] = result
    return result


def exhaustive_subgroup_sets(G: PermutationGroup,
                             bounds: SearchBounds = DEFAULT_BOUNDS) -> list[frozenset]:
    """Every subgroup of G as a frozenset of element indices.

    Join closure over cyclic subgroups; this is the slow oracle used to
    validate the cyclic-extension enumeration on small groups.
    """
    U = _universe(G, bounds)
    sets = {frozenset({U.identity_idx})}
    cyclics = []
    for x in range(U.size):
        c = frozenset(U.closure([x]))
        if c not in sets:
            sets.add(c)
            cyclics.append(c)
    queue = deque(sets)
    while queue:
        S = queue.popleft()
        for c in cyclics:
            if c <= S:
                continue
            J = frozenset(U.closure(list(S | c)))
            if J not in sets:
                sets.add(J)
                queue.append(J)
    return sorted(sets, key=lambda s: (len(s), sorted(s)))


def count_conjugacy_classes_of_sets(G: PermutationGroup, sets,
                                    bounds: SearchBounds = DEFAULT_BOUNDS) -> int:
    """Number of G-conjugacy classes among the given element-index sets."""
    U = _universe(G, bounds)
    remaining = set(sets)
    count = 0
    while remaining:
        S = remaining.pop()
        count += 1
        frontier = [S]
        seen = {S}
        while frontier:
            nxt = []
            for cur in frontier:
                for g in U.gen_idx:
                    conj_set = frozenset(U.conj(t, g) for t in cur)
                    if conj_set not in seen:
                        seen.add(conj_set)
                        remaining.discard(conj_set)
                        nxt.append(conj_set)
            frontier = nxt
    return count


def is_quotient_simple(P: PermutationGroup, N: PermutationGroup,
                       bounds: SearchBounds = DEFAULT_BOUNDS) -> bool:
    """Whether P/N is simple, for N normal in P, without building P/N.

    P/N is simple iff every normal subgroup of P strictly containing N is
    P itself; it suffices to test the closures of N with each class
    representative of P outside N.
    """
    if P.order == N.order:
        return False
    U = _universe(P, bounds)
    nset = {U.index[t] for t in N.element_tuples(bounds)}
    for rep in U.class_reps:
        if rep in nset:
            continue
        closure = normal_closure(P, list(N.generators)
                                 + [Permutation._raw(U.elems[rep])])
        if closure.order != P.order:
            return False
    return True
