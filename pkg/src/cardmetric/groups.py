"""Group backends: finite permutation groups and free abelian lattices Z^k.

A ``GeneratedGroup`` is a backend plus an ordered, duplicate-free generating
sequence S that excludes the identity.  For the permutation backend the group
is the closure of S inside Sym(n) and its element enumeration is cached at
construction; the free abelian backend requires S to span all of Z^k and
answers membership questions by exact lattice arithmetic instead of
enumeration.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    BackendMismatchError,
    BoundExceededError,
    InfiniteEnumerationError,
)
from .lattice import IntegerMatrix, LatticeBasis, basis_from_matrix, lattice_index
from .maps import GroupMap

PERMUTATION = "permutation"
FREE_ABELIAN = "free_abelian"

DEFAULT_AUTOMORPHISM_BOUND = 24


@dataclass(frozen=True)
class Element:
    """A group element: permutation image array on 0..n-1, or an integer vector."""

    kind: str
    data: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in (PERMUTATION, FREE_ABELIAN):
            raise ValueError(f"unknown element kind {self.kind!r}")
        data = tuple(self.data)
        object.__setattr__(self, "data", data)
        if self.kind == PERMUTATION:
            if sorted(data) != list(range(len(data))):
                raise ValueError(f"{data!r} is not a permutation of 0..{len(data) - 1}")
        else:
            for x in data:
                if not isinstance(x, int) or isinstance(x, bool):
                    raise ValueError(f"vector entry {x!r} is not an integer")

    def __repr__(self) -> str:
        return f"Element({self.kind[:4]}, {self.data})"


def permutation_element(images: Sequence[int]) -> Element:
    return Element(PERMUTATION, tuple(images))


def vector_element(coords: Sequence[int]) -> Element:
    return Element(FREE_ABELIAN, tuple(coords))


class GeneratedGroup:
    """A group with a distinguished ordered generating sequence."""

    def __init__(self, kind: str, size: int, generators: Sequence[Element], name: str | None = None):
        if kind not in (PERMUTATION, FREE_ABELIAN):
            raise ValueError(f"unknown backend {kind!r}")
        if size < 0 or (kind == FREE_ABELIAN and size < 1):
            raise ValueError(f"invalid backend size {size}")
        self.kind = kind
        self.size = size  # degree n for permutations, rank k for Z^k
        self.name = name

        gens = tuple(generators)
        identity = self._identity_for(kind, size)
        seen = {}
        for i, g in enumerate(gens):
            self._check_backend(g, what=f"generator {i}")
            if g == identity:
                raise ValueError(f"generator {i} is the identity; identity generators are forbidden")
            if g in seen:
                raise ValueError(f"generator {i} duplicates generator {seen[g]}")
            seen[g] = i
        self.generators = gens

        self._elements: tuple[Element, ...] | None = None
        self._element_index: dict[Element, int] | None = None
        self._closure_cache: dict[frozenset[int], frozenset[Element]] = {}
        self._lattice_cache: dict[frozenset[int], LatticeBasis] = {}
        self._norm_cache: dict[Element, int] = {}
        self._word_norms: dict[Element, int] = {}
        self._word_norm_depth = -1

        if kind == PERMUTATION:
            self._elements = tuple(self._bfs_enumeration())
            self._element_index = {g: i for i, g in enumerate(self._elements)}
        else:
            if not gens:
                raise ValueError("free abelian backend requires a nonempty generating sequence")
            index = lattice_index(IntegerMatrix.from_columns([g.data for g in gens], rows=size))
            if index != 1:
                shown = "infinite" if index is None else str(index)
                raise ValueError(
                    f"generators do not generate Z^{size}: lattice index {shown} != 1"
                )

    # -- constructors ------------------------------------------------------

    @classmethod
    def permutation(cls, degree: int, generators: Sequence[Element], name: str | None = None) -> "GeneratedGroup":
        return cls(PERMUTATION, degree, generators, name=name)

    @classmethod
    def free_abelian(cls, rank: int, generators: Sequence[Element], name: str | None = None) -> "GeneratedGroup":
        return cls(FREE_ABELIAN, rank, generators, name=name)

    # -- basics ------------------------------------------------------------

    @property
    def is_finite(self) -> bool:
        return self.kind == PERMUTATION

    @staticmethod
    def _identity_for(kind: str, size: int) -> Element:
        if kind == PERMUTATION:
            return Element(PERMUTATION, tuple(range(size)))
        return Element(FREE_ABELIAN, (0,) * size)

    def identity(self) -> Element:
        return self._identity_for(self.kind, self.size)

    def _check_backend(self, g: Element, what: str = "element") -> None:
        if g.kind != self.kind or len(g.data) != self.size:
            raise BackendMismatchError(
                f"{what} {g!r} does not match backend {self.kind}({self.size})"
            )

    def compose(self, a: Element, b: Element) -> Element:
        """a.b under the apply-a-first convention for permutations; a+b for vectors."""
        self._check_backend(a)
        self._check_backend(b)
        if self.kind == PERMUTATION:
            return Element(PERMUTATION, tuple(b.data[x] for x in a.data))
        return Element(FREE_ABELIAN, tuple(x + y for x, y in zip(a.data, b.data)))

    def inverse(self, a: Element) -> Element:
        self._check_backend(a)
        if self.kind == PERMUTATION:
            inv = [0] * self.size
            for i, j in enumerate(a.data):
                inv[j] = i
            return Element(PERMUTATION, tuple(inv))
        return Element(FREE_ABELIAN, tuple(-x for x in a.data))

    def element_order(self, a: Element) -> int:
        """Order of a in the group; finite backend only."""
        if self.kind != PERMUTATION:
            raise InfiniteEnumerationError("element orders are infinite on the free abelian backend")
        e = self.identity()
        x, n = a, 1
        while x != e:
            x = self.compose(x, a)
            n += 1
        return n

    # -- enumeration and closure -------------------------------------------

    def _bfs_enumeration(self) -> list[Element]:
        return self._bfs_closure(self.generators)

    def _bfs_closure(self, seed: Sequence[Element]) -> list[Element]:
        """BFS order from the identity over seed and seed-inverses."""
        steps = []
        for s in seed:
            for t in (s, self.inverse(s)):
                if t not in steps:
                    steps.append(t)
        e = self.identity()
        order = [e]
        seen = {e}
        queue = deque([e])
        while queue:
            g = queue.popleft()
            for s in steps:
                h = self.compose(g, s)
                if h not in seen:
                    seen.add(h)
                    order.append(h)
                    queue.append(h)
        return order

    def elements(self) -> tuple[Element, ...]:
        """Deterministic enumeration of the whole group (finite backend only)."""
        if self._elements is None:
            raise InfiniteEnumerationError("cannot enumerate an infinite free abelian group")
        return self._elements

    @property
    def order(self) -> int:
        return len(self.elements())

    def element_index(self, g: Element) -> int:
        self._check_backend(g)
        if self._element_index is None:
            raise InfiniteEnumerationError("no element index on an infinite backend")
        try:
            return self._element_index[g]
        except KeyError:
            raise ValueError(f"{g!r} is not an element of this group") from None

    def contains(self, g: Element) -> bool:
        if g.kind != self.kind or len(g.data) != self.size:
            return False
        if self.kind == PERMUTATION:
            return g in self._element_index
        return True  # S spans Z^k by construction

    def closure(self, gens: Iterable[Element]) -> frozenset[Element]:
        """<gens> as a set; finite backend only.  <empty> = {e}."""
        if self.kind != PERMUTATION:
            raise InfiniteEnumerationError(
                "closure enumeration is unsupported on the free abelian backend; "
                "use subgroup_contains"
            )
        gens = tuple(gens)
        for g in gens:
            self._check_backend(g)
        return frozenset(self._bfs_closure(gens))

    def _generator_indices(self, subset: Iterable[Element]) -> frozenset[int]:
        positions = {g: i for i, g in enumerate(self.generators)}
        indices = set()
        for g in subset:
            if g not in positions:
                raise ValueError(f"{g!r} is not in the generating sequence")
            indices.add(positions[g])
        return frozenset(indices)

    def _closure_by_indices(self, indices: frozenset[int]) -> frozenset[Element]:
        cached = self._closure_cache.get(indices)
        if cached is None:
            cached = frozenset(self._bfs_closure([self.generators[i] for i in sorted(indices)]))
            self._closure_cache[indices] = cached
        return cached

    def _lattice_by_indices(self, indices: frozenset[int]) -> LatticeBasis:
        cached = self._lattice_cache.get(indices)
        if cached is None:
            cached = basis_from_matrix(
                IntegerMatrix.from_columns(
                    [self.generators[i].data for i in sorted(indices)], rows=self.size
                )
            )
            self._lattice_cache[indices] = cached
        return cached

    def subgroup_contains(self, subset: Iterable[Element], g: Element) -> bool:
        """True iff g lies in the subgroup generated by subset (a subset of S)."""
        self._check_backend(g)
        indices = self._generator_indices(subset)
        if self.kind == PERMUTATION:
            return g in self._closure_by_indices(indices)
        return self._lattice_by_indices(indices).contains(g.data)

    # -- automorphisms -------------------------------------------------------

    def automorphisms(self, bound: int = DEFAULT_AUTOMORPHISM_BOUND) -> list[GroupMap]:
        """All automorphisms of the group, as maps on the element enumeration.

        Candidate images for each generator are restricted to same-order
        elements; each assignment is extended over the whole group by BFS and
        kept only if it is a consistent bijective homomorphism.
        """
        elems = self.elements()
        n = len(elems)
        if n > bound:
            raise BoundExceededError(f"|G| = {n} exceeds the automorphism bound {bound}")
        if not self.generators:
            return [GroupMap(elems, (0,), known_homomorphism=True)] if n == 1 else []

        index = self._element_index
        assert index is not None
        orders = [self.element_order(g) for g in elems]
        candidates = []
        for s in self.generators:
            target = orders[index[s]]
            candidates.append([i for i, o in enumerate(orders) if o == target])

        gen_idx = [index[s] for s in self.generators]
        e_idx = index[self.identity()]
        found = []
        for images in itertools.product(*candidates):
            phi = self._extend_generator_images(gen_idx, images, e_idx)
            if phi is None:
                continue
            if len(set(phi)) != n:
                continue
            if self._is_homomorphism_table(phi):
                found.append(GroupMap(elems, phi, known_homomorphism=True))
        return found

    def _extend_generator_images(self, gen_idx, images, e_idx):
        """Extend phi(s_i) = images[i] over the group by BFS; None on conflict."""
        elems = self._elements
        index = self._element_index
        phi = [-1] * len(elems)
        phi[e_idx] = e_idx
        queue = deque([e_idx])
        while queue:
            x = queue.popleft()
            for si, ti in zip(gen_idx, images):
                y = index[self.compose(elems[x], elems[si])]
                fy = index[self.compose(elems[phi[x]], elems[ti])]
                if phi[y] == -1:
                    phi[y] = fy
                    queue.append(y)
                elif phi[y] != fy:
                    return None
        if any(v == -1 for v in phi):
            return None
        return tuple(phi)

    def _is_homomorphism_table(self, phi) -> bool:
        elems = self._elements
        index = self._element_index
        for x in range(len(elems)):
            for s in self.generators:
                y = index[self.compose(elems[x], s)]
                if phi[y] != index[self.compose(elems[phi[x]], elems[phi[index[s]]])]:
                    return False
        return True

    # -- balls ---------------------------------------------------------------

    def word_ball(self, center: Element, radius: int) -> list[Element]:
        """Vertices within word distance <= radius of center, in BFS order."""
        self._check_backend(center)
        if radius < 0:
            raise ValueError("radius must be nonnegative")
        steps = []
        for s in self.generators:
            for t in (s, self.inverse(s)):
                if t not in steps:
                    steps.append(t)
        order = [center]
        seen = {center}
        frontier = [center]
        for _ in range(radius):
            nxt = []
            for g in frontier:
                for s in steps:
                    h = self.compose(g, s)
                    if h not in seen:
                        seen.add(h)
                        order.append(h)
                        nxt.append(h)
            frontier = nxt
        return order

    def __repr__(self) -> str:
        label = self.name or f"{self.kind}({self.size})"
        return f"GeneratedGroup({label}, |S|={len(self.generators)})"
