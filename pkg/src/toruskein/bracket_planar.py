"""Kauffman bracket state sums over planar PD codes.

A diagram is a list of crossings, each a 4-tuple of edge labels read
counterclockwise starting from the incoming under-strand; the under-strand
runs from slot 0 to slot 2 and the over-strand occupies slots 1 and 3.  Every
edge label must occur exactly twice, which forces the edges to close into
loops.  ``free_loops`` counts extra crossing-free circles (a plain 4-tuple
encoding cannot express them).

Resolution convention: for a crossing (a, b, c, d) the A-smoothing joins
{a, d} and {b, c}, the B-smoothing joins {a, b} and {c, d}.  Every closed
circle of a state -- including the last one -- evaluates to
delta = -A^2 - A^-2 and the empty diagram evaluates to 1, so the two-crossing
clasp of two circles comes out to A^6 + A^2 + A^-2 + A^-6 exactly.

Tuples are stored canonically up to rotation by two (the same unoriented
crossing re-read from the outgoing under-strand), which makes the over/under
mirror a literal involution.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

from .laurent import LaurentPoly
from .smoothing_oracle import BudgetExceededError, DEFAULT_BUDGET

Crossing = tuple[int, int, int, int]


def _canonical_crossing(t: Crossing) -> Crossing:
    rotated = (t[2], t[3], t[0], t[1])
    return min(t, rotated)


@dataclass(frozen=True, slots=True)
class PDCode:
    """A planar link diagram as crossing tuples plus crossing-free circles."""

    crossings: tuple[Crossing, ...]
    free_loops: int = 0

    def __post_init__(self) -> None:
        if self.free_loops < 0:
            raise ValueError("free_loops must be >= 0")
        canon = []
        counts: dict[int, int] = {}
        for t in self.crossings:
            if len(t) != 4:
                raise ValueError(f"crossing {t!r} is not a 4-tuple")
            canon.append(_canonical_crossing(tuple(int(e) for e in t)))
            for e in t:
                counts[e] = counts.get(e, 0) + 1
        bad = sorted(e for e, c in counts.items() if c != 2)
        if bad:
            raise ValueError(f"edge labels must occur exactly twice; bad labels: {bad}")
        object.__setattr__(self, "crossings", tuple(canon))

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def edges(self) -> set[int]:
        return {e for t in self.crossings for e in t}

    def __str__(self) -> str:
        parts = [f"X({a},{b},{c},{d})" for a, b, c, d in self.crossings]
        parts.extend("O" for _ in range(self.free_loops))
        return " ".join(parts) if parts else "(empty)"

    @classmethod
    def parse(cls, text: str) -> "PDCode":
        """Parse the text form, e.g. ``"X(1,3,2,4) X(3,1,4,2) O"``."""
        crossings = []
        loops = 0
        pos = 0
        token = re.compile(r"\s*(X\s*\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)|O)\s*")
        while pos < len(text):
            m = token.match(text, pos)
            if not m:
                raise ValueError(f"bad PD token at position {pos}: {text[pos:pos + 12]!r}")
            if m.group(1) == "O":
                loops += 1
            else:
                crossings.append(tuple(int(m.group(i)) for i in range(2, 6)))
            pos = m.end()
        return cls(tuple(crossings), loops)

    def to_json(self) -> dict:
        data: dict = {"crossings": [list(t) for t in self.crossings]}
        if self.free_loops:
            data["free_loops"] = self.free_loops
        return data

    @classmethod
    def from_json(cls, data: Mapping) -> "PDCode":
        return cls(
            tuple(tuple(int(e) for e in t) for t in data["crossings"]),
            int(data.get("free_loops", 0)),
        )


def mirror(pd: PDCode) -> PDCode:
    """Swap over and under at every crossing."""
    return PDCode(tuple((b, c, d, a) for a, b, c, d in pd.crossings), pd.free_loops)


def disjoint_union(first: PDCode, second: PDCode) -> PDCode:
    """Place two diagrams side by side, relabeling the second to keep labels unique."""
    offset = max(first.edges(), default=0)
    shifted = tuple(tuple(e + offset for e in t) for t in second.crossings)
    return PDCode(first.crossings + shifted, first.free_loops + second.free_loops)


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[int, int] = {}

    def find(self, x: int) -> int:
        parent = self.parent
        root = parent.setdefault(x, x)
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(self, x: int, y: int) -> bool:
        """Join two classes; returns True when they were already joined
        (a circle has been closed)."""
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return True
        self.parent[rx] = ry
        return False


def kauffman_bracket(pd: PDCode, budget: int = DEFAULT_BUDGET) -> LaurentPoly:
    """Evaluate the bracket by summing A^(#A - #B) * delta^circles over all states."""
    k = pd.crossing_count
    if k > budget:
        raise BudgetExceededError(
            f"{k} crossings exceed the budget of {budget} (2^{k} states)"
        )
    deltas = [LaurentPoly.one()]
    for _ in range(k + pd.free_loops + 1):
        deltas.append(deltas[-1] * LaurentPoly.delta())
    acc: dict[int, int] = {}
    for mask in range(1 << k):
        uf = _UnionFind()
        closed = 0
        labels = set()
        for i, (a, b, c, d) in enumerate(pd.crossings):
            labels.update((a, b, c, d))
            if (mask >> i) & 1:  # B-smoothing
                pairs = ((a, b), (c, d))
            else:  # A-smoothing
                pairs = ((a, d), (b, c))
            for x, y in pairs:
                if uf.union(x, y):
                    closed += 1
        # Each label is visited at two slots, so every class closes into a
        # circle; circles = closures counted above.
        circles = closed + pd.free_loops
        exponent = k - 2 * bin(mask).count("1")
        for e, c in deltas[circles].terms():
            s = acc.get(e + exponent, 0) + c
            if s:
                acc[e + exponent] = s
            else:
                del acc[e + exponent]
    return LaurentPoly(acc)


def kauffman_bracket_recursive(pd: PDCode, budget: int = DEFAULT_BUDGET) -> LaurentPoly:
    """Same value by recursive crossing resolution; an independent code path
    used to cross-check the state sum."""
    if pd.crossing_count > budget:
        raise BudgetExceededError(
            f"{pd.crossing_count} crossings exceed the budget of {budget}"
        )

    def splice(crossings: tuple[Crossing, ...], pairs, loops: int) -> tuple[tuple[Crossing, ...], int]:
        uf = _UnionFind()
        for x, y in pairs:
            if uf.union(x, y):
                loops += 1
        renamed = tuple(
            tuple(uf.find(e) for e in t) for t in crossings
        )
        return renamed, loops

    def go(crossings: tuple[Crossing, ...], loops: int) -> LaurentPoly:
        if not crossings:
            return LaurentPoly.delta() ** loops
        (a, b, c, d), rest = crossings[0], crossings[1:]
        rest_a, loops_a = splice(rest, ((a, d), (b, c)), loops)
        rest_b, loops_b = splice(rest, ((a, b), (c, d)), loops)
        return go(rest_a, loops_a).shifted(1) + go(rest_b, loops_b).shifted(-1)

    return go(pd.crossings, pd.free_loops)


def add_reidemeister_ii(pd: PDCode, over_edge: int, under_edge: int) -> PDCode:
    """Poke the strand carrying ``over_edge`` across the one carrying
    ``under_edge``, adding a canceling pair of crossings.

    The bracket is invariant under this move; the property suite exercises it
    across the diagram corpus.
    """
    if over_edge == under_edge:
        raise ValueError("Reidemeister II needs two distinct edges")
    edges = pd.edges()
    if over_edge not in edges or under_edge not in edges:
        raise ValueError("both edges must occur in the diagram")
    fresh = max(edges) + 1
    m_mid, m_tail, n_mid, n_tail = fresh, fresh + 1, fresh + 2, fresh + 3

    def relabel_second(crossings: list[list[int]], old: int, new: int) -> None:
        seen = 0
        for t in crossings:
            for i, e in enumerate(t):
                if e == old:
                    seen += 1
                    if seen == 2:
                        t[i] = new
                        return
        raise ValueError(f"edge {old} does not occur twice")

    crossings = [list(t) for t in pd.crossings]
    relabel_second(crossings, over_edge, m_tail)
    relabel_second(crossings, under_edge, n_tail)
    crossings.append([under_edge, over_edge, n_mid, m_mid])
    crossings.append([n_mid, m_tail, n_tail, m_mid])
    return PDCode(tuple(tuple(t) for t in crossings), pd.free_loops)


# Small ready-made diagrams for tests and demos.

HOPF_LINK = PDCode(((1, 3, 2, 4), (3, 1, 4, 2)))
TREFOIL = PDCode(((1, 4, 2, 5), (3, 6, 4, 1), (5, 2, 6, 3)))
FIGURE_EIGHT = PDCode(((4, 2, 5, 1), (8, 6, 1, 5), (6, 3, 7, 4), (2, 7, 3, 8)))
UNKNOT = PDCode((), free_loops=1)
UNLINK_2 = PDCode((), free_loops=2)
KINK_POSITIVE = PDCode(((1, 2, 2, 1),))
KINK_NEGATIVE = PDCode(((1, 1, 2, 2),))
SOLOMON_LINK = PDCode(((1, 5, 2, 6), (5, 3, 6, 4), (3, 7, 4, 8), (7, 1, 8, 2)))
CINQUEFOIL = PDCode(((1, 6, 2, 7), (3, 8, 4, 9), (5, 10, 6, 1), (7, 2, 8, 3), (9, 4, 10, 5)))
