"""Block systems and primitivity for transitive groups.

`minimal_block_system` computes the finest G-invariant partition fusing a
seed pair by the usual union-find refinement: whenever two points are
identified, their images under every generator are identified as well.
A transitive group is primitive exactly when every seed pair (v0, b)
fuses the whole domain.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import IntransitiveError, PointRangeError
from .group import PermutationGroup


@dataclass(frozen=True)
class BlockSystem:
    blocks: tuple          # tuple of sorted point tuples, ordered by minimum
    degree: int

    @property
    def trivial(self) -> bool:
        return len(self.blocks) == 1 or all(len(b) == 1 for b in self.blocks)

    @property
    def block_size(self) -> int:
        return len(self.blocks[0])

    def block_of(self, v: int) -> tuple:
        for b in self.blocks:
            if v in b:
                return b
        raise PointRangeError(f"point {v} not covered")


def minimal_block_system(G: PermutationGroup, seed_pair) -> BlockSystem:
    """Finest block system of transitive G fusing the two seed points."""
    a, b = seed_pair
    G._check_point(a)
    G._check_point(b)
    if a == b:
        raise PointRangeError("seed points must be distinct")
    if not G.is_transitive():
        raise IntransitiveError("block systems require a transitive group")
    n = G.degree
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    gens = [g.images for g in G.generators]
    queue = [(a, b)]
    while queue:
        x, y = queue.pop()
        rx, ry = find(x), find(y)
        if rx == ry:
            continue
        parent[max(rx, ry)] = min(rx, ry)
        for g in gens:
            queue.append((g[x], g[y]))
    cells: dict[int, list] = {}
    for v in range(n):
        cells.setdefault(find(v), []).append(v)
    blocks = tuple(tuple(sorted(c)) for c in
                   sorted(cells.values(), key=min))
    return BlockSystem(blocks=blocks, degree=n)


def is_primitive(G: PermutationGroup) -> bool:
    """True iff transitive G preserves no nontrivial partition."""
    if not G.is_transitive():
        raise IntransitiveError("primitivity is defined for transitive groups")
    if G.degree == 1:
        return True
    for b in range(1, G.degree):
        if len(minimal_block_system(G, (0, b)).blocks) != 1:
            return False
    return True
