"""Configured search bounds with stated defaults.

Every potentially expensive operation checks one of these limits before
it starts and raises `BoundExceededError` if the work would be larger.
"""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class SearchBounds:
    # largest |G| for subgroup-lattice style operations
    # (subgroup enumeration, radical, socle, centralizer)
    subgroup_order: int = 2000
    # largest coset index materialised by action_on_cosets
    coset_index: int = 100_000
    # node budget for the conjugacy transporter backtrack
    transporter_nodes: int = 10_000_000
    # explicit digraph size
    digraph_vertices: int = 200_000
    digraph_arcs: int = 5_000_000
    # largest s-arc list returned by enumerate_s_arcs
    s_arc_enumeration: int = 1_000_000
    # largest subgroup whose elements may be listed exhaustively
    element_enumeration: int = 200_000
    # regular-subgroup search: ambient order and node budget
    regular_search_order: int = 100_000
    regular_search_nodes: int = 10_000_000

    def with_(self, **kw) -> "SearchBounds":
        return replace(self, **kw)


DEFAULT_BOUNDS = SearchBounds()
