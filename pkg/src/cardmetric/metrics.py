"""Word and cardinal norms, distances, metric tables, and balls.

The cardinal norm of g is the smallest size of a subset A of the generating
sequence with g in <A>; the induced distance d(g, h) is the norm of g^-1 h.
The word norm is the usual shortest-word length over S and S^-1, computed by
breadth-first search under a mandatory radius cap so that infinite backends
terminate.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import RadiusCapExceededError
from .groups import Element, GeneratedGroup

WORD = "word"
CARDINAL = "cardinal"


@dataclass(frozen=True)
class MetricTable:
    """Symmetric integer distance matrix over an ordered vertex list."""

    vertices: tuple[Element, ...]
    kind: str
    generators: tuple[Element, ...]
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.kind not in (WORD, CARDINAL):
            raise ValueError(f"unknown metric kind {self.kind!r}")
        n = len(self.vertices)
        if len(self.matrix) != n:
            raise ValueError(f"matrix has {len(self.matrix)} rows, expected {n}")
        for i, row in enumerate(self.matrix):
            if len(row) != n:
                raise ValueError(f"matrix row {i} has length {len(row)}, expected {n}")
            for x in row:
                if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                    raise ValueError(f"matrix row {i} has invalid entry {x!r}")
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self.vertices)})

    def index_of(self, v: Element) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"{v!r} is not a vertex of this table") from None

    def entry(self, i: int, j: int) -> int:
        return self.matrix[i][j]

    def distance(self, g: Element, h: Element) -> int:
        return self.matrix[self.index_of(g)][self.index_of(h)]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class BallSpec:
    """Center, radius (rational, so 1/2 is expressible), and metric kind."""

    center: Element
    radius: Fraction
    kind: str

    def __post_init__(self):
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius < 0:
            raise ValueError("ball radius must be nonnegative")
        if self.kind not in (WORD, CARDINAL):
            raise ValueError(f"unknown metric kind {self.kind!r}")


# -- cardinal norm -----------------------------------------------------------


def cardinal_norm(group: GeneratedGroup, g: Element) -> int:
    """Smallest |A|, A a subset of S, with g in <A>.

    Subsets are scanned by increasing cardinality (lexicographic by generator
    index within each size), so the first hit is the answer; per-subset
    closures and lattices are memoized on the group.
    """
    cached = group._norm_cache.get(g)
    if cached is not None:
        return cached
    gens = group.generators
    value = None
    for k in range(len(gens) + 1):
        for combo in itertools.combinations(range(len(gens)), k):
            subset = [gens[i] for i in combo]
            if group.subgroup_contains(subset, g):
                value = k
                break
        if value is not None:
            break
    if value is None:
        # unreachable: S generates the group, so the full subset always hits
        raise ValueError(f"{g!r} is not generated by S")
    group._norm_cache[g] = value
    return value


def cardinal_distance(group: GeneratedGroup, g: Element, h: Element) -> int:
    return cardinal_norm(group, group.compose(group.inverse(g), h))


# -- word norm ---------------------------------------------------------------


def _word_steps(group: GeneratedGroup) -> list[Element]:
    steps = []
    for s in group.generators:
        for t in (s, group.inverse(s)):
            if t not in steps:
                steps.append(t)
    return steps


def word_norms_up_to(group: GeneratedGroup, radius_cap: int) -> dict[Element, int]:
    """Word norms of every element within the cap, by one BFS from the identity.

    The BFS frontier is cached on the group and extended on demand, so
    repeated table builds do not redo work.
    """
    if radius_cap < 0:
        raise ValueError("radius cap must be nonnegative")
    if group._word_norm_depth >= radius_cap:
        return group._word_norms
    norms = group._word_norms
    if not norms:
        norms[group.identity()] = 0
        group._word_norm_depth = 0
    steps = _word_steps(group)
    frontier = [g for g, d in norms.items() if d == group._word_norm_depth]
    depth = group._word_norm_depth
    while frontier and depth < radius_cap:
        depth += 1
        nxt = []
        for g in frontier:
            for s in steps:
                h = group.compose(g, s)
                if h not in norms:
                    norms[h] = depth
                    nxt.append(h)
        frontier = nxt
        group._word_norm_depth = depth
    if not frontier:
        group._word_norm_depth = max(group._word_norm_depth, radius_cap)
    return norms


def word_norm(group: GeneratedGroup, g: Element, radius_cap: int) -> int:
    """Shortest word length expressing g over S and S^-1; 0 for the identity."""
    group._check_backend(g)
    norms = word_norms_up_to(group, radius_cap)
    value = norms.get(g)
    if value is None or value > radius_cap:
        raise RadiusCapExceededError(
            f"{g!r} not reached within word radius cap {radius_cap}"
        )
    return value


def word_distance(group: GeneratedGroup, g: Element, h: Element, radius_cap: int) -> int:
    return word_norm(group, group.compose(group.inverse(g), h), radius_cap)


# -- tables, diameters, balls -------------------------------------------------


def metric_table(
    group: GeneratedGroup,
    vertices: Sequence[Element],
    kind: str,
    radius_cap: int | None = None,
) -> MetricTable:
    """Full pairwise distance table for the requested metric."""
    vertices = tuple(vertices)
    if len(set(vertices)) != len(vertices):
        raise ValueError("table vertices must be distinct")
    for v in vertices:
        group._check_backend(v)
    n = len(vertices)

    if kind == CARDINAL:
        def dist(g, h):
            return cardinal_distance(group, g, h)
    elif kind == WORD:
        if radius_cap is None:
            raise ValueError("word tables require a radius cap")

        def dist(g, h):
            return word_distance(group, g, h, radius_cap)
    else:
        raise ValueError(f"unknown metric kind {kind!r}")

    matrix = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = dist(vertices[i], vertices[j])
            matrix[i][j] = d
            matrix[j][i] = d
    return MetricTable(
        vertices=vertices,
        kind=kind,
        generators=group.generators,
        matrix=tuple(tuple(row) for row in matrix),
    )


def diameter(table: MetricTable) -> int:
    if not table.vertices:
        raise ValueError("diameter of an empty table is undefined")
    return max(max(row) for row in table.matrix)


def ball(
    group: GeneratedGroup,
    spec: BallSpec,
    universe: Sequence[Element],
    radius_cap: int | None = None,
) -> set[Element]:
    """Open ball {y in universe : d(center, y) < radius}."""
    universe = tuple(universe)
    if spec.center not in universe:
        raise ValueError("ball center must lie in the universe")
    if spec.kind == CARDINAL:
        def dist(y):
            return cardinal_distance(group, spec.center, y)
    else:
        if radius_cap is None:
            raise ValueError("word balls require a radius cap")

        def dist(y):
            return word_distance(group, spec.center, y, radius_cap)
    return {y for y in universe if dist(y) < spec.radius}


def check_metric_axioms(table: MetricTable) -> list[str]:
    """Violations of the metric-table invariants; empty means all hold.

    Checks zero diagonal, symmetry, positivity off the diagonal, the triangle
    inequality, and (cardinal tables) the |S| entry bound.
    """
    m = table.matrix
    n = len(table.vertices)
    problems = []
    for i in range(n):
        if m[i][i] != 0:
            problems.append(f"nonzero diagonal at {i}: {m[i][i]}")
    for i in range(n):
        for j in range(i + 1, n):
            if m[i][j] != m[j][i]:
                problems.append(f"asymmetry at ({i},{j}): {m[i][j]} != {m[j][i]}")
            if m[i][j] == 0:
                problems.append(f"zero distance between distinct vertices ({i},{j})")
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if m[i][k] > m[i][j] + m[j][k]:
                    problems.append(
                        f"triangle violation ({i},{j},{k}): {m[i][k]} > {m[i][j]} + {m[j][k]}"
                    )
    if table.kind == CARDINAL:
        cap = len(table.generators)
        for i in range(n):
            for j in range(n):
                if m[i][j] > cap:
                    problems.append(f"cardinal entry ({i},{j}) = {m[i][j]} exceeds |S| = {cap}")
    return problems
