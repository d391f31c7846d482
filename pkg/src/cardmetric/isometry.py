"""Left translations, color-preserving/permuting automorphisms, and isometries.

Brute-force enumerations are exhaustive over all vertex bijections with
arc- or distance-consistency pruning, bounded by an explicit size limit so
runtimes stay predictable; exceeding the bound raises instead of skipping.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cayley import ColorDigraph
from .errors import BoundExceededError, DecompositionError, InfiniteEnumerationError
from .groups import DEFAULT_AUTOMORPHISM_BOUND, Element, GeneratedGroup
from .maps import ColorPermutation, GroupMap
from .metrics import CARDINAL, WORD, MetricTable, metric_table

DEFAULT_BRUTE_FORCE_BOUND = 8


def left_translation(group: GeneratedGroup, a: Element) -> GroupMap:
    """The map h -> a.h on the group's element enumeration."""
    group._check_backend(a)
    elems = group.elements()
    return GroupMap.from_function(elems, lambda h: group.compose(a, h))


def aut_setwise_S(group: GeneratedGroup, bound: int = DEFAULT_AUTOMORPHISM_BOUND) -> list[GroupMap]:
    """Automorphisms tau with tau(S) = S as a set."""
    s_set = set(group.generators)
    result = []
    for tau in group.automorphisms(bound=bound):
        if {tau.apply(s) for s in group.generators} == s_set:
            result.append(tau)
    return result


def _arc_lookup(d: ColorDigraph) -> tuple[set[tuple[int, int, int]], list[list[tuple[int, int, int]]]]:
    arc_set = set(d.arcs)
    touching: list[list[tuple[int, int, int]]] = [[] for _ in d.vertices]
    for arc in d.arcs:
        t, h, _ = arc
        touching[t].append(arc)
        if h != t:
            touching[h].append(arc)
    return arc_set, touching


def color_preserving_auts_bruteforce(
    d: ColorDigraph, bound: int = DEFAULT_BRUTE_FORCE_BOUND
) -> list[GroupMap]:
    """All vertex bijections preserving every arc with its color.

    Backtracking over images in vertex order; a partial assignment is pruned
    as soon as some arc between assigned vertices loses its colored image.
    """
    n = len(d.vertices)
    if n > bound:
        raise BoundExceededError(f"{n} vertices exceed the brute-force bound {bound}")
    arc_set, touching = _arc_lookup(d)
    image = [-1] * n
    used = [False] * n
    found: list[GroupMap] = []

    def consistent(v: int) -> bool:
        for t, h, c in touching[v]:
            it, ih = image[t], image[h]
            if it != -1 and ih != -1 and (it, ih, c) not in arc_set:
                return False
        return True

    def extend(v: int) -> None:
        if v == n:
            found.append(GroupMap(d.vertices, tuple(image)))
            return
        for w in range(n):
            if used[w]:
                continue
            image[v] = w
            used[w] = True
            if consistent(v):
                extend(v + 1)
            image[v] = -1
            used[w] = False

    extend(0)
    return found


def check_color_permuting(d: ColorDigraph, alpha: GroupMap) -> ColorPermutation | None:
    """The unique sigma with alpha(g.c) = alpha(g).sigma(c) for all arcs, or None.

    Every arc's image pair must itself be an arc, all arcs of one color must
    map to arcs of a single color, and the induced color map must be a
    bijection.
    """
    if alpha.vertices != d.vertices:
        raise ValueError("map and digraph are over different vertex lists")
    if not alpha.is_bijective:
        raise ValueError("check_color_permuting requires a bijective map")
    arc_color: dict[tuple[int, int], int] = {}
    for t, h, c in d.arcs:
        arc_color[(t, h)] = c
    sigma: dict[int, int] = {}
    for t, h, c in d.arcs:
        image_pair = (alpha.apply_index(t), alpha.apply_index(h))
        image_color = arc_color.get(image_pair)
        if image_color is None:
            return None
        if sigma.setdefault(c, image_color) != image_color:
            return None
    m = len(d.generators)
    if len(sigma) != m or sorted(sigma.values()) != list(range(m)):
        return None
    return ColorPermutation(tuple(sigma[c] for c in range(m)))


def color_permuting_auts(
    group: GeneratedGroup,
    d: ColorDigraph,
    bound: int = DEFAULT_AUTOMORPHISM_BOUND,
) -> list[tuple[GroupMap, ColorPermutation]]:
    """The constructive color-permuting family {L_a . tau : tau(S) = S}.

    sigma is read off from tau's action on the generating sequence, and each
    produced pair is re-validated against the digraph.
    """
    taus = aut_setwise_S(group, bound=bound)
    gen_index = {s: c for c, s in enumerate(group.generators)}
    result = []
    for a in group.elements():
        la = left_translation(group, a)
        for tau in taus:
            alpha = la.compose(tau)
            sigma = ColorPermutation(tuple(gen_index[tau.apply(s)] for s in group.generators))
            verified = check_color_permuting(d, alpha)
            if verified != sigma:
                raise RuntimeError(
                    f"constructed map L_{a!r}.tau failed color-permuting validation"
                )
            result.append((alpha, sigma))
    return result


def is_isometry(f: GroupMap, from_table: MetricTable, to_table: MetricTable) -> bool:
    """True iff to(f(x), f(y)) == from(x, y) for all vertex pairs."""
    if f.vertices != from_table.vertices:
        raise ValueError("map domain does not match the from-table vertices")
    to_idx = []
    for i in range(len(f.vertices)):
        to_idx.append(to_table.index_of(f.vertices[f.apply_index(i)]))
    n = len(f.vertices)
    for i in range(n):
        for j in range(i + 1, n):
            if to_table.entry(to_idx[i], to_idx[j]) != from_table.entry(i, j):
                return False
    return True


def isometry_group_bruteforce(
    table: MetricTable, bound: int = DEFAULT_BRUTE_FORCE_BOUND
) -> list[GroupMap]:
    """All self-bijections of the table's vertices preserving all distances."""
    n = len(table.vertices)
    if n > bound:
        raise BoundExceededError(f"{n} vertices exceed the brute-force bound {bound}")
    m = table.matrix
    image = [-1] * n
    used = [False] * n
    found: list[GroupMap] = []

    def extend(v: int) -> None:
        if v == n:
            found.append(GroupMap(table.vertices, tuple(image)))
            return
        for w in range(n):
            if used[w]:
                continue
            ok = True
            for u in range(v):
                if m[image[u]][w] != m[u][v]:
                    ok = False
                    break
            if not ok:
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            image[v] = -1
            used[w] = False

    extend(0)
    return found


@dataclass(frozen=True)
class DecompositionReport:
    """Outcome of splitting an isometry T as L_a . T-tilde."""

    fixes_identity: bool
    generators_into_s_or_inverses: bool
    nonexpansive: bool
    generator_images: tuple[tuple[Element, Element], ...]

    @property
    def all_pass(self) -> bool:
        return self.fixes_identity and self.generators_into_s_or_inverses and self.nonexpansive


def decompose_isometry(
    T: GroupMap, group: GeneratedGroup, radius_cap: int
) -> tuple[Element, GroupMap, DecompositionReport]:
    """Split an isometry T: (G, cardinal) -> (G, word) as L_a . T-tilde.

    The isometry precondition is validated, not assumed; the first failing
    pair is carried on the raised error.  The report records that T-tilde
    fixes the identity, sends S into S union S^-1, and is nonexpansive for
    the word metric on all pairs.
    """
    if not group.is_finite:
        raise InfiniteEnumerationError("decompose_isometry requires a finite backend")
    elems = group.elements()
    if T.vertices != elems:
        raise ValueError("map domain does not match the group's element enumeration")
    if not T.is_bijective:
        raise DecompositionError("candidate map is not a bijection")
    cardinal = metric_table(group, elems, CARDINAL)
    word = metric_table(group, elems, WORD, radius_cap=radius_cap)
    n = len(elems)
    for i in range(n):
        for j in range(i + 1, n):
            dw = word.entry(T.apply_index(i), T.apply_index(j))
            dc = cardinal.entry(i, j)
            if dw != dc:
                raise DecompositionError(
                    f"not an isometry: d_W(T{elems[i]!r}, T{elems[j]!r}) = {dw} "
                    f"but d_C = {dc}",
                    pair=(elems[i], elems[j]),
                )
    a = T.apply(group.identity())
    la_inv = left_translation(group, group.inverse(a))
    t_tilde = la_inv.compose(T)

    fixes_identity = t_tilde.apply(group.identity()) == group.identity()
    s_union_inv = set(group.generators) | {group.inverse(s) for s in group.generators}
    gen_images = tuple((s, t_tilde.apply(s)) for s in group.generators)
    gens_ok = all(img in s_union_inv for _, img in gen_images)
    nonexpansive = True
    for i in range(n):
        for j in range(i + 1, n):
            if word.entry(t_tilde.apply_index(i), t_tilde.apply_index(j)) > word.entry(i, j):
                nonexpansive = False
                break
        if not nonexpansive:
            break
    report = DecompositionReport(
        fixes_identity=fixes_identity,
        generators_into_s_or_inverses=gens_ok,
        nonexpansive=nonexpansive,
        generator_images=gen_images,
    )
    return a, t_tilde, report
