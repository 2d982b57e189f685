"""Direct powers, diagonal subgroups and product-action wreath groups.

Product-action domains are m-tuples over the base domain, encoded
row-major: the tuple (v_0, ..., v_{m-1}) over a degree-n domain becomes
the point sum(v_i * n^(m-1-i)).  The same encoding is used by the
digraph direct product, so groups built here act on digraph powers
coordinate for coordinate.
"""

from __future__ import annotations

from .bounds import DEFAULT_BOUNDS, SearchBounds
from .errors import BoundExceededError, DegreeMismatchError, PointRangeError
from .group import PermutationGroup, SubgroupHandle
from .perm import Permutation


def direct_power(T: PermutationGroup, k: int) -> PermutationGroup:
    """T^k acting on k disjoint copies of T's domain."""
    if k < 1:
        raise PointRangeError("k must be >= 1")
    n = T.degree
    gens = []
    for i in range(k):
        for g in T.generators:
            images = list(range(n * k))
            for pt in range(n):
                images[i * n + pt] = i * n + g.images[pt]
            gens.append(Permutation(images))
    return PermutationGroup(gens)


def embed_tuple(T: PermutationGroup, elems) -> Permutation:
    """The element (t_1, ..., t_k) of T^k on the disjoint-union domain."""
    n = T.degree
    k = len(elems)
    images = []
    for i, t in enumerate(elems):
        if t.degree != n:
            raise DegreeMismatchError("tuple entries must act on T's domain")
        images.extend(i * n + x for x in t.images)
    return Permutation(images)


def diagonal_subgroup(T: PermutationGroup, k: int, Tk: PermutationGroup) -> SubgroupHandle:
    """The diagonal {(t, ..., t)} inside the direct power T^k."""
    gens = [embed_tuple(T, [g] * k) for g in T.generators]
    return SubgroupHandle(Tk, gens)


def _tuple_index(tup, n: int) -> int:
    idx = 0
    for v in tup:
        idx = idx * n + v
    return idx


def wreath_product_action(G: PermutationGroup, m: int,
                          bounds: SearchBounds = DEFAULT_BOUNDS) -> PermutationGroup:
    """G wr Sym_m in product action on m-tuples of G's domain.

    Generated by the coordinate copies of G's generators together with
    the coordinate transposition (0 1) and the coordinate m-cycle; order
    is |G|^m * m!.  For m = 1 the group G itself is returned.
    """
    if m < 1:
        raise PointRangeError("m must be >= 1")
    if m == 1:
        return G
    n = G.degree
    size = n ** m
    if size > bounds.digraph_vertices:
        raise BoundExceededError("digraph_vertices", bounds.digraph_vertices, size)

    tuples = [[] for _ in range(size)]
    for idx in range(size):
        rem = idx
        tup = [0] * m
        for i in range(m - 1, -1, -1):
            tup[i] = rem % n
            rem //= n
        tuples[idx] = tuple(tup)

    gens = []
    for i in range(m):
        for g in G.generators:
            img = [0] * size
            gi = g.images
            for idx, tup in enumerate(tuples):
                new = list(tup)
                new[i] = gi[tup[i]]
                img[idx] = _tuple_index(new, n)
            gens.append(Permutation(img))

    def coord_perm(sigma) -> Permutation:
        # tuple entries are permuted by sigma: new[j] = old[sigma^-1(j)]
        inv = [0] * m
        for a, b in enumerate(sigma):
            inv[b] = a
        img = [0] * size
        for idx, tup in enumerate(tuples):
            new = tuple(tup[inv[j]] for j in range(m))
            img[idx] = _tuple_index(new, n)
        return Permutation(img)

    swap = list(range(m))
    swap[0], swap[1] = 1, 0
    gens.append(coord_perm(swap))
    if m > 2:
        cyc = [(i + 1) % m for i in range(m)]
        gens.append(coord_perm(cyc))
    return PermutationGroup(gens)
