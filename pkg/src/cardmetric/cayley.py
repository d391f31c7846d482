"""Cayley color digraphs and the path-color connectivity oracle.

Arcs run (g, g.s) for each generator s, colored by the generator's index.
``min_color_connectivity`` answers "how few colors suffice to join two
vertices by an undirected path" purely graph-side, by color-subset
enumeration plus BFS, so it can cross-validate the algebraic cardinal
distance without sharing code with it.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import RadiusCapExceededError, TruncationError
from .groups import FREE_ABELIAN, PERMUTATION, Element, GeneratedGroup
from .notation import format_element

# Fixed 12-color palette, cycled by generator index, keeps DOT output stable.
DOT_PALETTE = (
    "red",
    "blue",
    "forestgreen",
    "orange",
    "purple",
    "saddlebrown",
    "deeppink",
    "teal",
    "goldenrod",
    "gray40",
    "olive",
    "navy",
)


@dataclass(frozen=True, eq=False)
class ColorDigraph:
    """Vertices, arcs (tail, head, color index into S), and truncation info."""

    group: GeneratedGroup
    vertices: tuple[Element, ...]
    arcs: tuple[tuple[int, int, int], ...]
    truncated: bool = False
    radius: int | None = None
    generators: tuple[Element, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if self.generators is None:
            object.__setattr__(self, "generators", self.group.generators)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("digraph vertices must be distinct")
        index = {v: i for i, v in enumerate(self.vertices)}
        object.__setattr__(self, "_index", index)
        n = len(self.vertices)
        m = len(self.generators)
        for tail, head, color in self.arcs:
            if not (0 <= tail < n and 0 <= head < n and 0 <= color < m):
                raise ValueError(f"arc ({tail}, {head}, {color}) out of range")
            expected = self.group.compose(self.vertices[tail], self.generators[color])
            if expected != self.vertices[head]:
                raise ValueError(
                    f"arc ({tail}, {head}, {color}) is inconsistent: "
                    f"tail.S[{color}] = {expected!r}, head = {self.vertices[head]!r}"
                )

    def index_of(self, v: Element) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"{v!r} is not a vertex of this digraph") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColorDigraph):
            return NotImplemented
        return (
            self.vertices == other.vertices
            and self.arcs == other.arcs
            and self.generators == other.generators
            and self.truncated == other.truncated
            and self.radius == other.radius
        )

    def __hash__(self) -> int:
        return hash((self.vertices, self.arcs, self.generators, self.truncated, self.radius))


@dataclass(frozen=True)
class PathWitness:
    """An undirected path g0, e1, g1, ..., en, gn where each ei is an arc
    traversed forward or backward; ``colors`` is the set of colors used."""

    vertices: tuple[int, ...]
    arcs: tuple[tuple[int, int, int], ...]
    colors: frozenset[int]

    def __post_init__(self):
        if len(self.arcs) != max(len(self.vertices) - 1, 0):
            raise ValueError("a path needs exactly one arc between consecutive vertices")
        for k, (t, h, c) in enumerate(self.arcs):
            a, b = self.vertices[k], self.vertices[k + 1]
            if (t, h) != (a, b) and (t, h) != (b, a):
                raise ValueError(f"arc {k} does not join vertices {a} and {b}")
        if self.colors != frozenset(c for _, _, c in self.arcs):
            raise ValueError("color set does not match the arcs")


def build_color_digraph(
    group: GeneratedGroup,
    truncation: tuple[Element, int, int | None] | None = None,
) -> ColorDigraph:
    """The right Cayley color digraph, whole (finite backend) or ball-truncated.

    ``truncation`` is (center, radius, radius_cap); arcs are kept only inside
    the ball.  An infinite backend requires a truncation.
    """
    if not group.generators:
        raise ValueError("cannot build a color digraph: S must generate a nontrivial group")
    if truncation is None:
        if not group.is_finite:
            raise TruncationError("an infinite backend requires a truncation (center, radius, cap)")
        vertices = group.elements()
        truncated = False
        radius = None
    else:
        center, radius, radius_cap = truncation
        if radius_cap is not None and radius > radius_cap:
            raise RadiusCapExceededError(f"truncation radius {radius} exceeds cap {radius_cap}")
        vertices = tuple(group.word_ball(center, radius))
        truncated = True
    index = {v: i for i, v in enumerate(vertices)}
    arcs = []
    for i, g in enumerate(vertices):
        for c, s in enumerate(group.generators):
            h = group.compose(g, s)
            j = index.get(h)
            if j is not None:
                arcs.append((i, j, c))
    return ColorDigraph(
        group=group,
        vertices=vertices,
        arcs=tuple(arcs),
        truncated=truncated,
        radius=radius,
    )


def underlying_edges(d: ColorDigraph) -> set[tuple[int, int]]:
    """Undirected edge set {i, j} (as sorted index pairs) of the digraph."""
    edges = set()
    for t, h, _ in d.arcs:
        if t != h:
            edges.add((min(t, h), max(t, h)))
    return edges


def _adjacency_by_color(d: ColorDigraph) -> list[list[tuple[int, int]]]:
    """adj[v] = list of (neighbor, color), arcs usable in both directions."""
    adj: list[list[tuple[int, int]]] = [[] for _ in d.vertices]
    for t, h, c in d.arcs:
        adj[t].append((h, c))
        adj[h].append((t, c))
    return adj


def _reachable(adj, start: int, goal: int, colors: frozenset[int]) -> bool:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        if v == goal:
            return True
        for w, c in adj[v]:
            if c in colors and w not in seen:
                seen.add(w)
                queue.append(w)
    return False


def min_color_connectivity(
    d: ColorDigraph,
    g: Element,
    h: Element,
    allow_truncated_upper_bound: bool = False,
) -> int:
    """Minimum number of colors whose arcs connect g and h by an undirected path.

    On a truncated digraph a connecting path may leave the ball, so the
    in-ball answer can only overestimate; such digraphs are refused unless
    ``allow_truncated_upper_bound`` is set, in which case the returned value
    is an upper bound on the true distance.
    """
    if d.truncated and not allow_truncated_upper_bound:
        raise TruncationError(
            "refusing an exact color-connectivity query on a truncated digraph; "
            "pass allow_truncated_upper_bound=True for an in-ball upper bound"
        )
    gi = d.index_of(g)
    hi = d.index_of(h)
    if gi == hi:
        return 0
    adj = _adjacency_by_color(d)
    m = len(d.generators)
    for k in range(1, m + 1):
        for combo in itertools.combinations(range(m), k):
            if _reachable(adj, gi, hi, frozenset(combo)):
                return k
    raise ValueError(f"{g!r} and {h!r} are not connected in this digraph")


def color_connectivity_witness(
    d: ColorDigraph, g: Element, h: Element, colors: Iterable[int]
) -> PathWitness | None:
    """A concrete path from g to h using only the given colors, or None."""
    colors = frozenset(colors)
    gi = d.index_of(g)
    hi = d.index_of(h)
    arcs_by_pair: dict[tuple[int, int], tuple[int, int, int]] = {}
    adj: list[list[int]] = [[] for _ in d.vertices]
    for t, hd, c in d.arcs:
        if c in colors:
            arcs_by_pair.setdefault((t, hd), (t, hd, c))
            adj[t].append(hd)
            adj[hd].append(t)
    parent = {gi: None}
    queue = deque([gi])
    while queue:
        v = queue.popleft()
        if v == hi:
            break
        for w in adj[v]:
            if w not in parent:
                parent[w] = v
                queue.append(w)
    if hi not in parent:
        return None
    chain = [hi]
    while parent[chain[-1]] is not None:
        chain.append(parent[chain[-1]])
    chain.reverse()
    path_arcs = []
    for a, b in zip(chain, chain[1:]):
        arc = arcs_by_pair.get((a, b)) or arcs_by_pair.get((b, a))
        assert arc is not None
        path_arcs.append(arc)
    return PathWitness(
        vertices=tuple(chain),
        arcs=tuple(path_arcs),
        colors=frozenset(c for _, _, c in path_arcs),
    )


# -- export -------------------------------------------------------------------


def export_dot(d: ColorDigraph) -> str:
    """DOT text: one node line per vertex, one edge line per arc."""
    lines = ["digraph cayley {"]
    for i, v in enumerate(d.vertices):
        lines.append(f'  n{i} [label="{format_element(v)}"];')
    for t, h, c in d.arcs:
        lines.append(f"  n{t} -> n{h} [color={DOT_PALETTE[c % len(DOT_PALETTE)]}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def export_json(d: ColorDigraph) -> str:
    """JSON form; indices in arcs refer to the vertex order.  Parses back via
    ``cardmetric.cli.parse_color_digraph_json``."""
    backend: dict = {"type": d.group.kind}
    if d.group.kind == PERMUTATION:
        backend["degree"] = d.group.size
    else:
        backend["rank"] = d.group.size
    doc = {
        "backend": backend,
        "generators": [format_element(s) for s in d.generators],
        "vertices": [format_element(v) for v in d.vertices],
        "arcs": [[t, h, c] for t, h, c in d.arcs],
        "truncated": d.truncated,
        "radius": d.radius,
    }
    return json.dumps(doc, indent=2) + "\n"
