"""Vertex-to-vertex maps over a fixed ordered vertex list, and color permutations.

A ``GroupMap`` is the common currency for automorphisms, left translations,
and candidate isometries: a function on a finite vertex list, stored as an
image array of vertex indices.  Equality and hashing are pointwise on the
image array so map sets can be compared directly.
"""

from __future__ import annotations

from typing import TYPE_CHECKING, Iterable, Sequence, Tuple

if TYPE_CHECKING:
    from .groups import Element


class GroupMap:
    """A map on a fixed tuple of vertices, image[i] = index of the image of vertices[i]."""

    __slots__ = ("vertices", "image", "known_homomorphism", "_index")

    def __init__(
        self,
        vertices: Sequence[Element],
        image: Sequence[int],
        known_homomorphism: bool = False,
    ):
        vertices = tuple(vertices)
        image = tuple(image)
        if len(image) != len(vertices):
            raise ValueError(f"image array has length {len(image)}, expected {len(vertices)}")
        for i in image:
            if not 0 <= i < len(vertices):
                raise ValueError(f"image index {i} out of range 0..{len(vertices) - 1}")
        self.vertices: Tuple[Element, ...] = vertices
        self.image: Tuple[int, ...] = image
        self.known_homomorphism = known_homomorphism
        self._index = {v: i for i, v in enumerate(vertices)}

    @classmethod
    def identity(cls, vertices: Sequence[Element]) -> "GroupMap":
        return cls(vertices, range(len(vertices)))

    @classmethod
    def from_function(cls, vertices: Sequence[Element], fn, known_homomorphism=False) -> "GroupMap":
        vertices = tuple(vertices)
        index = {v: i for i, v in enumerate(vertices)}
        image = []
        for v in vertices:
            w = fn(v)
            if w not in index:
                raise ValueError(f"image {w!r} of {v!r} is not a vertex")
            image.append(index[w])
        return cls(vertices, image, known_homomorphism=known_homomorphism)

    @property
    def is_bijective(self) -> bool:
        return len(set(self.image)) == len(self.image)

    def index_of(self, v: Element) -> int:
        try:
            return self._index[v]
        except KeyError:
            raise ValueError(f"{v!r} is not a vertex of this map") from None

    def apply_index(self, i: int) -> int:
        return self.image[i]

    def apply(self, v: Element) -> Element:
        return self.vertices[self.image[self.index_of(v)]]

    def compose(self, inner: "GroupMap") -> "GroupMap":
        """self after inner: (self . inner)(v) = self(inner(v))."""
        if inner.vertices != self.vertices:
            raise ValueError("cannot compose maps over different vertex lists")
        return GroupMap(self.vertices, tuple(self.image[j] for j in inner.image))

    def inverse(self) -> "GroupMap":
        if not self.is_bijective:
            raise ValueError("cannot invert a non-bijective map")
        inv = [0] * len(self.image)
        for i, j in enumerate(self.image):
            inv[j] = i
        return GroupMap(self.vertices, inv)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GroupMap):
            return NotImplemented
        return self.vertices == other.vertices and self.image == other.image

    def __hash__(self) -> int:
        return hash((self.vertices, self.image))

    def __repr__(self) -> str:
        return f"GroupMap(image={list(self.image)})"


class ColorPermutation:
    """A permutation of the color indices 0..m-1 of a generating sequence."""

    __slots__ = ("image",)

    def __init__(self, image: Iterable[int]):
        image = tuple(image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"{image!r} is not a permutation of 0..{len(image) - 1}")
        self.image: Tuple[int, ...] = image

    @classmethod
    def identity(cls, size: int) -> "ColorPermutation":
        return cls(range(size))

    def apply(self, color: int) -> int:
        return self.image[color]

    def __len__(self) -> int:
        return len(self.image)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ColorPermutation):
            return NotImplemented
        return self.image == other.image

    def __hash__(self) -> int:
        return hash(self.image)

    def __repr__(self) -> str:
        return f"ColorPermutation({list(self.image)})"
