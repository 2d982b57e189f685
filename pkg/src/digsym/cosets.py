"""Right coset actions with deterministic labeling.

Cosets Hx are identified by their canonical representative: the element
of Hx whose image tuple is lexicographically least.  The representative
is computed greedily along a chain of H-stabilizers taken through the
points 0, 1, 2, ... in order; at each point the orbit under the current
stabilizer offers the possible images, the smallest reachable image is
chosen, and because image tuples are bijections the choice is unique, so
the greedy walk yields the lex-least coset element.

Labels are then assigned by a breadth-first walk over cosets from H*1
(label 0) using the parent group's generators sorted by image tuple, so
the labeling depends only on (G, H).
"""

from __future__ import annotations

from .bounds import DEFAULT_BOUNDS, SearchBounds
from .errors import BoundExceededError, NotAMemberError
from .group import PermutationGroup, SubgroupHandle
from .perm import Permutation, _compose


class _Canon:
    """Canonical (lex-least) coset representatives for a fixed subgroup."""

    def __init__(self, H: PermutationGroup):
        self.identity = H.chain.identity
        self.layers: list[list] = []
        K = H
        for p in range(H.degree):
            if K.order == 1:
                break
            gens = [g.images for g in K.generators]
            transversal = {p: self.identity}
            frontier = [p]
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
            if len(transversal) > 1:
                self.layers.append(list(transversal.items()))
                K = K.stabilizer_group(p)

    def min_rep(self, x: tuple) -> tuple:
        y = x
        for items in self.layers:
            best_img = None
            best_u = None
            for a, u in items:
                img = y[a]
                if best_img is None or img < best_img:
                    best_img = img
                    best_u = u
            if best_u is not self.identity:
                y = _compose(best_u, y)
        return y


class CosetAction:
    """The image of G acting by right multiplication on cosets of H."""

    def __init__(self, G: PermutationGroup, H: SubgroupHandle,
                 bounds: SearchBounds = DEFAULT_BOUNDS):
        if H.parent is not G:
            for g in H.generators:
                if g not in G:
                    raise NotAMemberError(
                        "subgroup generators must lie in the acting group")
        Hgrp = H.group
        index = G.order // Hgrp.order
        if index > bounds.coset_index:
            raise BoundExceededError("coset_index", bounds.coset_index, index)
        self.G = G
        self.H = H
        canon = _Canon(Hgrp)
        self._canon = canon
        sorted_gens = sorted(g.images for g in G.generators)
        rep0 = canon.min_rep(G.chain.identity)
        labels = {rep0: 0}
        reps = [rep0]
        queue = [rep0]
        while queue:
            nxt = []
            for r in queue:
                for g in sorted_gens:
                    c = canon.min_rep(_compose(r, g))
                    if c not in labels:
                        labels[c] = len(reps)
                        reps.append(c)
                        nxt.append(c)
            queue = nxt
        assert len(reps) == index
        self.reps = reps
        self._labels = labels
        images = [Permutation._raw(tuple(
            labels[canon.min_rep(_compose(r, g.images))] for r in reps))
            for g in G.generators]
        self.image_group = PermutationGroup(images)

    def act(self, x: Permutation) -> Permutation:
        """Image of an arbitrary element of G as a coset permutation."""
        canon = self._canon
        labels = self._labels
        return Permutation._raw(tuple(
            labels[canon.min_rep(_compose(r, x.images))] for r in self.reps))

    def label_of(self, x: Permutation) -> int:
        """Label of the coset H*x."""
        return self._labels[self._canon.min_rep(x.images)]


def action_on_cosets(G: PermutationGroup, H: SubgroupHandle,
                     bounds: SearchBounds = DEFAULT_BOUNDS):
    """(image group, coset representative labels) for G on cosets of H.

    Coset H*1 is label 0; the kernel of the action is the core of H in G.
    """
    action = CosetAction(G, H, bounds=bounds)
    return action.image_group, [Permutation._raw(r) for r in action.reps]
