"""Finite permutation groups backed by deterministic stabilizer chains.

The chain is built eagerly with the classic deterministic Schreier-Sims
procedure: strip every generator, assign each nontrivial residue to the
level whose base point it moves (creating a level at the smallest moved
point when it fixes the whole current base), then verify levels bottom-up
by sifting all Schreier generators.  For a fixed generator list the whole
construction, including basic orbit orderings and transversals, is
reproducible run to run.

Orbit orderings put the base point first and the remaining orbit points
in increasing order, so the element enumeration (`elements`) starts at
the identity and is a fixed total order: the chain-transversal order.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional

from .bounds import DEFAULT_BOUNDS, SearchBounds
from .errors import (
    BoundExceededError,
    DegreeMismatchError,
    EmptyGeneratorsError,
    NotAMemberError,
    PointRangeError,
)
from .perm import Permutation, _compose, _invert


class _Level:
    __slots__ = ("point", "gens", "transversal", "ordered_orbit")

    def __init__(self, point: int, degree: int):
        self.point = point
        self.gens: list[tuple] = []
        self.transversal: dict[int, tuple] = {point: tuple(range(degree))}
        self.ordered_orbit: list[int] = [point]


class StabilizerChain:
    """Base points, strong generators and basic orbits with transversals."""

    def __init__(self, degree: int):
        if degree < 1:
            raise PointRangeError("degree must be positive")
        self.degree = degree
        self.identity = tuple(range(degree))
        self.levels: list[_Level] = []

    @classmethod
    def build(cls, degree: int, gen_tuples: Iterable[tuple]) -> "StabilizerChain":
        chain = cls(degree)
        for t in gen_tuples:
            chain._insert(t)
        chain._close()
        return chain

    def extend(self, t: tuple) -> None:
        """Add one more generator and restore the chain invariants."""
        self._insert(t)
        self._close()

    # -- chain structure ------------------------------------------------

    def order(self) -> int:
        n = 1
        for lv in self.levels:
            n *= len(lv.transversal)
        return n

    def base(self) -> list[int]:
        return [lv.point for lv in self.levels]

    def strip(self, t: tuple, start: int = 0):
        """Sift t through the chain; returns (residue, stop level)."""
        for i in range(start, len(self.levels)):
            lv = self.levels[i]
            c = t[lv.point]
            if c == lv.point:
                continue
            u = lv.transversal.get(c)
            if u is None:
                return t, i
            t = _compose(t, _invert(u))
        return t, len(self.levels)

    def contains(self, t: tuple) -> bool:
        residue, _ = self.strip(t)
        return residue == self.identity

    # -- construction ---------------------------------------------------

    def _insert(self, t: tuple) -> None:
        if t == self.identity:
            return
        residue, j = self.strip(t)
        if residue != self.identity:
            self._add_strong(residue, j)

    def _add_strong(self, t: tuple, j: int) -> None:
        # t fixes the base points of all levels before j
        if j == len(self.levels):
            point = next(i for i, x in enumerate(t) if x != i)
            self.levels.append(_Level(point, self.degree))
        for k in range(j + 1):
            self.levels[k].gens.append(t)
        for k in range(j + 1):
            self._rebuild_orbit(self.levels[k])

    def _rebuild_orbit(self, lv: _Level) -> None:
        base = lv.point
        transversal = {base: self.identity}
        frontier = [base]
        gens = lv.gens
        while frontier:
            nxt = []
            for a in frontier:
                u_a = transversal[a]
                for g in gens:
                    c = g[a]
                    if c not in transversal:
                        transversal[c] = _compose(u_a, g)
                        nxt.append(c)
            frontier = nxt
        lv.transversal = transversal
        lv.ordered_orbit = [base] + sorted(c for c in transversal if c != base)

    def _close(self) -> None:
        """Verify every level by sifting its Schreier generators."""
        identity = self.identity
        i = len(self.levels) - 1
        while i >= 0:
            lv = self.levels[i]
            restart = False
            for a in lv.ordered_orbit:
                u_a = lv.transversal[a]
                for g in lv.gens:
                    u_ag = lv.transversal[g[a]]
                    schreier = _compose(_compose(u_a, g), _invert(u_ag))
                    if schreier == identity:
                        continue
                    residue, j = self.strip(schreier, i + 1)
                    if residue != identity:
                        self._add_strong(residue, j)
                        i = j
                        restart = True
                        break
                if restart:
                    break
            if not restart:
                i -= 1

    # -- element enumeration ---------------------------------------------

    def elements(self) -> Iterator[tuple]:
        """All element image tuples in chain-transversal order.

        The identity comes first; the order is fixed by the chain and is
        the order used wherever a deterministic element listing is needed.
        """
        def rec(i: int) -> Iterator[tuple]:
            if i == len(self.levels):
                yield self.identity
                return
            lv = self.levels[i]
            for a in lv.ordered_orbit:
                u = lv.transversal[a]
                for rest in rec(i + 1):
                    yield _compose(rest, u)
        return rec(0)


def mulclose_bounded(gen_tuples, degree: int, limit: int) -> Optional[set]:
    """Closure of a generating set as a set of image tuples.

    Returns None as soon as the closure exceeds `limit` elements.
    """
    identity = tuple(range(degree))
    els = {identity}
    els.update(gen_tuples)
    if len(els) > limit:
        return None
    frontier = [t for t in els if t != identity]
    gens = [t for t in set(gen_tuples) if t != identity]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = _compose(a, g)
                if c not in els:
                    els.add(c)
                    if len(els) > limit:
                        return None
                    nxt.append(c)
        frontier = nxt
    return els


class PermutationGroup:
    """A permutation group with an eagerly built stabilizer chain.

    Immutable after construction; `order` is exact arbitrary-precision.
    """

    def __init__(self, generators: Iterable[Permutation], _chain: Optional[StabilizerChain] = None):
        gens = tuple(generators)
        if not gens:
            raise EmptyGeneratorsError("a group needs at least one generator")
        degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatchError(
                    f"mixed generator degrees: {degree} and {g.degree}")
        self.generators = gens
        self.degree = degree
        if _chain is None:
            _chain = StabilizerChain.build(degree, [g.images for g in gens])
        self.chain = _chain
        self.order: int = _chain.order()
        self._orbits: Optional[list] = None
        self._element_list: Optional[list] = None
        self._caches: dict = {}

    # -- constructors ----------------------------------------------------

    @classmethod
    def from_generators(cls, gens: Iterable[Permutation]) -> "PermutationGroup":
        return cls(gens)

    @classmethod
    def trivial(cls, degree: int) -> "PermutationGroup":
        return cls([Permutation.identity(degree)])

    # -- membership -------------------------------------------------------

    def __contains__(self, p: Permutation) -> bool:
        if p.degree != self.degree:
            raise DegreeMismatchError(
                f"degree {p.degree} element tested in degree {self.degree} group")
        return self.chain.contains(p.images)

    def contains_tuple(self, t: tuple) -> bool:
        return self.chain.contains(t)

    def contains_group(self, other: "PermutationGroup") -> bool:
        return all(g in self for g in other.generators)

    def same_group(self, other: "PermutationGroup") -> bool:
        return (self.degree == other.degree and self.order == other.order
                and self.contains_group(other))

    # -- orbits ------------------------------------------------------------

    def orbits(self) -> list:
        """Partition of the points into orbits, each sorted, ordered by minimum."""
        if self._orbits is None:
            seen = [False] * self.degree
            out = []
            gens = [g.images for g in self.generators]
            for start in range(self.degree):
                if seen[start]:
                    continue
                orb = [start]
                seen[start] = True
                frontier = [start]
                while frontier:
                    nxt = []
                    for a in frontier:
                        for g in gens:
                            c = g[a]
                            if not seen[c]:
                                seen[c] = True
                                orb.append(c)
                                nxt.append(c)
                    frontier = nxt
                out.append(sorted(orb))
            self._orbits = out
        return self._orbits

    def orbit_of(self, v: int) -> list:
        self._check_point(v)
        for orb in self.orbits():
            if v in orb:
                return orb
        raise AssertionError("unreachable")

    def is_transitive(self) -> bool:
        return len(self.orbits()) == 1

    def is_regular(self) -> bool:
        return self.is_transitive() and self.order == self.degree

    # -- stabilizers --------------------------------------------------------

    def stabilizer_group(self, v: int) -> "PermutationGroup":
        """The point stabilizer as a group, via reduced Schreier generators."""
        self._check_point(v)
        key = ("stab", v)
        if key in self._caches:
            return self._caches[key]
        gens = [g.images for g in self.generators]
        transversal = {v: self.chain.identity}
        frontier = [v]
        while frontier:
            nxt = []
            for a in frontier:
                u_a = transversal[a]
                for g in gens:
                    c = g[a]
                    if c not in transversal:
                        transversal[c] = _compose(u_a, g)
                        nxt.append(c)
            frontier = nxt
        sub = StabilizerChain(self.degree)
        kept: list[tuple] = []
        for a in [v] + sorted(set(transversal) - {v}):
            u_a = transversal[a]
            for g in gens:
                u_ag = transversal[g[a]]
                schreier = _compose(_compose(u_a, g), _invert(u_ag))
                if schreier != self.chain.identity and not sub.contains(schreier):
                    sub.extend(schreier)
                    kept.append(schreier)
        assert self.order == sub.order() * len(transversal)
        if not kept:
            result = PermutationGroup.trivial(self.degree)
        else:
            result = PermutationGroup(
                [Permutation._raw(t) for t in kept], _chain=sub)
        self._caches[key] = result
        return result

    # -- element listings ----------------------------------------------------

    def elements(self) -> Iterator[Permutation]:
        for t in self.chain.elements():
            yield Permutation._raw(t)

    def element_tuples(self, bounds: SearchBounds = DEFAULT_BOUNDS) -> list:
        if self._element_list is None:
            if self.order > bounds.element_enumeration:
                raise BoundExceededError(
                    "element_enumeration", bounds.element_enumeration, self.order)
            self._element_list = list(self.chain.elements())
        return self._element_list

    def element_permutations(self, bounds: SearchBounds = DEFAULT_BOUNDS) -> list:
        return [Permutation._raw(t) for t in self.element_tuples(bounds)]

    # -- misc -----------------------------------------------------------------

    def _check_point(self, v: int) -> None:
        if not 0 <= v < self.degree:
            raise PointRangeError(f"point {v} out of range 0..{self.degree - 1}")

    def __repr__(self) -> str:
        return (f"PermutationGroup(degree={self.degree}, order={self.order}, "
                f"ngens={len(self.generators)})")


class SubgroupHandle:
    """Generators of a subgroup, tied to the parent group they live in."""

    __slots__ = ("parent", "generators", "_group")

    def __init__(self, parent: PermutationGroup, generators: Iterable[Permutation],
                 _group: Optional[PermutationGroup] = None, _validate: bool = True):
        self.parent = parent
        gens = tuple(generators)
        if _validate:
            for g in gens:
                if g not in parent:
                    raise NotAMemberError(
                        f"subgroup generator {g.cycle_string()} is not in the parent group")
        self.generators = gens
        self._group = _group

    @property
    def group(self) -> PermutationGroup:
        if self._group is None:
            nontrivial = [g for g in self.generators if not g.is_identity()]
            if nontrivial:
                self._group = PermutationGroup(nontrivial)
            else:
                self._group = PermutationGroup.trivial(self.parent.degree)
        return self._group

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def degree(self) -> int:
        return self.parent.degree

    def __contains__(self, p: Permutation) -> bool:
        return p in self.group

    def contains_handle(self, other: "SubgroupHandle") -> bool:
        return all(g in self.group for g in other.generators)

    def same_subgroup(self, other: "SubgroupHandle") -> bool:
        return self.order == other.order and self.contains_handle(other)

    def is_trivial(self) -> bool:
        return self.order == 1

    def __repr__(self) -> str:
        gens = ", ".join(g.cycle_string() for g in self.generators) or "()"
        return f"SubgroupHandle(order={self.order}, gens=[{gens}])"


def trivial_subgroup(parent: PermutationGroup) -> SubgroupHandle:
    return SubgroupHandle(parent, (), _group=PermutationGroup.trivial(parent.degree),
                          _validate=False)


def full_subgroup(parent: PermutationGroup) -> SubgroupHandle:
    return SubgroupHandle(parent, parent.generators, _group=parent, _validate=False)


# -- spec-level operation surface -------------------------------------------

def group_from_generators(gens: Iterable[Permutation]) -> PermutationGroup:
    return PermutationGroup.from_generators(gens)


def membership_test(G: PermutationGroup, p: Permutation) -> bool:
    return p in G


def orbits(G: PermutationGroup) -> list:
    return G.orbits()


def is_transitive(G: PermutationGroup) -> bool:
    return G.is_transitive()


def is_regular(G: PermutationGroup) -> bool:
    return G.is_regular()


def point_stabilizer(G: PermutationGroup, v: int) -> SubgroupHandle:
    stab = G.stabilizer_group(v)
    return SubgroupHandle(G, stab.generators, _group=stab, _validate=False)
