"""Permutations of {0, ..., n-1}.

Points are 0-based internally; all cycle-notation text I/O is 1-based.
Products compose left to right: ``(p * q)(i) == q(p(i))``, so that the
exponent notation ``i^(pq) = (i^p)^q`` reads in application order.
"""

from __future__ import annotations

import re
from math import lcm

from .errors import CycleFormatError, DegreeMismatchError, PointRangeError

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _compose(p: tuple, q: tuple) -> tuple:
    """Image tuple of 'apply p, then q'."""
    return tuple(map(q.__getitem__, p))


def _invert(p: tuple) -> tuple:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


class Permutation:
    """A bijection on {0, ..., degree-1}, stored as its image tuple."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise CycleFormatError(f"not a permutation of 0..{len(images) - 1}: {images}")
        self.images = images

    @classmethod
    def _raw(cls, images: tuple) -> "Permutation":
        # internal fast path, caller guarantees a valid image tuple
        p = cls.__new__(cls)
        p.images = images
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        if degree < 1:
            raise PointRangeError("degree must be positive")
        return cls._raw(tuple(range(degree)))

    @property
    def degree(self) -> int:
        return len(self.images)

    def apply(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if len(self.images) != len(other.images):
            raise DegreeMismatchError(
                f"cannot compose degree {len(self.images)} with {len(other.images)}")
        return Permutation._raw(_compose(self.images, other.images))

    def inverse(self) -> "Permutation":
        return Permutation._raw(_invert(self.images))

    def __pow__(self, n: int) -> "Permutation":
        if n < 0:
            return self.inverse() ** (-n)
        result = tuple(range(len(self.images)))
        base = self.images
        while n:
            if n & 1:
                result = _compose(result, base)
            base = _compose(base, base)
            n >>= 1
        return Permutation._raw(result)

    def conjugate(self, g: "Permutation") -> "Permutation":
        """self^g = g^-1 * self * g."""
        return g.inverse() * self * g

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def moved_points(self) -> tuple:
        return tuple(i for i, j in enumerate(self.images) if i != j)

    def order(self) -> int:
        n = 1
        for cyc in self.cycles():
            n = lcm(n, len(cyc))
        return n

    def cycles(self) -> list:
        """Nontrivial cycles, each starting at its least point."""
        seen = [False] * len(self.images)
        out = []
        for i in range(len(self.images)):
            if seen[i] or self.images[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self.images[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        """1-based disjoint cycle notation; '()' for the identity."""
        cycs = self.cycles()
        if not cycs:
            return "()"
        return "".join("(" + " ".join(str(pt + 1) for pt in cyc) + ")" for cyc in cycs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other: "Permutation") -> bool:
        return self.images < other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({self.cycle_string()!r}, degree={self.degree})"


def parse_permutation(text: str, degree: int) -> Permutation:
    """Parse 1-based cycle notation into a permutation of the given degree.

    Accepts a product of disjoint cycles like "(1 2 3)(4 5)"; points may be
    separated by spaces or commas; "()" denotes the identity.  Points absent
    from the text are fixed.
    """
    if degree < 1:
        raise PointRangeError("degree must be positive")
    stripped = text.strip()
    if not stripped:
        raise CycleFormatError("empty permutation text")
    rest = _CYCLE_RE.sub("", stripped)
    if rest.strip():
        raise CycleFormatError(f"malformed cycle notation: {text!r}")
    images = list(range(degree))
    seen = set()
    for m in _CYCLE_RE.finditer(stripped):
        body = m.group(1).replace(",", " ").strip()
        if not body:
            continue
        try:
            pts = [int(tok) for tok in body.split()]
        except ValueError as exc:
            raise CycleFormatError(f"bad point in cycle: {body!r}") from exc
        for pt in pts:
            if not 1 <= pt <= degree:
                raise PointRangeError(
                    f"point {pt} out of range 1..{degree} in {text!r}")
            if pt in seen:
                raise CycleFormatError(f"repeated point {pt} in {text!r}")
            seen.add(pt)
        for a, b in zip(pts, pts[1:]):
            images[a - 1] = b - 1
        if len(pts) > 1:
            images[pts[-1] - 1] = pts[0] - 1
    return Permutation(images)
