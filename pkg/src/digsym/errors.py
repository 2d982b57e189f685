"""Exception types shared across the package.

Bound violations and exhausted searches are distinct, typed conditions:
a `BoundExceededError` means the requested computation was refused up
front, a `SearchLimitError` means a backtrack search gave up before it
could prove anything.  Neither is ever silently converted into a wrong
answer.
"""


class DigsymError(Exception):
    """Base class for all package errors."""


class CycleFormatError(DigsymError, ValueError):
    """Malformed or inconsistent cycle-notation input."""


class DegreeMismatchError(DigsymError, ValueError):
    """Operands act on different numbers of points."""


class EmptyGeneratorsError(DigsymError, ValueError):
    """A group was requested from an empty generator list."""


class PointRangeError(DigsymError, ValueError):
    """A point lies outside {0, ..., degree-1}."""


class NotAMemberError(DigsymError, ValueError):
    """A permutation was required to lie in a group but does not."""


class NotASubgroupError(DigsymError, ValueError):
    """A subgroup argument is not contained where it must be."""


class IntransitiveError(DigsymError, ValueError):
    """The operation requires a transitive group."""


class NotSimpleError(DigsymError, ValueError):
    """The operation requires a nonabelian simple group."""


class DigraphValidationError(DigsymError, ValueError):
    """Arc data violates the digraph axioms (irreflexive, antisymmetric)."""


class CosetSpecError(DigsymError, ValueError):
    """A coset digraph triple (G, H, g) violates its validity conditions."""


class BoundExceededError(DigsymError):
    """A configured search bound would be exceeded.

    Attributes record which bound, its configured limit and the size the
    computation would have needed.
    """

    def __init__(self, bound_name, limit, needed):
        self.bound_name = bound_name
        self.limit = limit
        self.needed = needed
        super().__init__(
            f"bound '{bound_name}' exceeded: need {needed}, limit {limit}")


class SearchLimitError(DigsymError):
    """A backtrack search exhausted its node budget without an answer."""

    def __init__(self, nodes):
        self.nodes = nodes
        super().__init__(f"search node limit exhausted after {nodes} nodes")


class UnknownCaseError(DigsymError, KeyError):
    """An unregistered casebook id was requested."""
