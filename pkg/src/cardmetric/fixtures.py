"""Standard desk-scale groups used by the demos, the verification suite, and tests."""

from __future__ import annotations

from .groups import GeneratedGroup, permutation_element, vector_element


def _shift(n: int, k: int):
    return permutation_element([(x + k) % n for x in range(n)])


def sym3() -> GeneratedGroup:
    """S3 with S = {(1 2), (1 2 3)}."""
    return GeneratedGroup.permutation(
        3,
        [permutation_element((1, 0, 2)), permutation_element((1, 2, 0))],
        name="S3",
    )


def sym3_alt() -> GeneratedGroup:
    """S3 with T = {(1 2), (1 3), (1 2 3)}."""
    return GeneratedGroup.permutation(
        3,
        [
            permutation_element((1, 0, 2)),
            permutation_element((2, 1, 0)),
            permutation_element((1, 2, 0)),
        ],
        name="S3-T",
    )


def sym4() -> GeneratedGroup:
    """S4 with S = {(1 2), (1 2 3 4)}."""
    return GeneratedGroup.permutation(
        4,
        [permutation_element((1, 0, 2, 3)), permutation_element((1, 2, 3, 0))],
        name="S4",
    )


def sym4_alt() -> GeneratedGroup:
    """S4 with the star transpositions T = {(1 2), (1 3), (1 4)}."""
    return GeneratedGroup.permutation(
        4,
        [
            permutation_element((1, 0, 2, 3)),
            permutation_element((2, 1, 0, 3)),
            permutation_element((3, 1, 2, 0)),
        ],
        name="S4-T",
    )


def dihedral4() -> GeneratedGroup:
    """D4 (order 8) with S = {rotation (1 2 3 4), reflection (1 3)}."""
    return GeneratedGroup.permutation(
        4,
        [permutation_element((1, 2, 3, 0)), permutation_element((2, 1, 0, 3))],
        name="D4",
    )


def dihedral4_alt() -> GeneratedGroup:
    """D4 with three reflections T = {(1 3), (2 4), (1 2)(3 4)}."""
    return GeneratedGroup.permutation(
        4,
        [
            permutation_element((2, 1, 0, 3)),
            permutation_element((0, 3, 2, 1)),
            permutation_element((1, 0, 3, 2)),
        ],
        name="D4-T",
    )


def cyclic_group(n: int, steps=(1,), name: str | None = None) -> GeneratedGroup:
    """Z_n as the shift-permutation representation, generated by the given steps."""
    return GeneratedGroup.permutation(
        n,
        [_shift(n, k) for k in steps],
        name=name or f"Z{n}" + ("" if steps == (1,) else "-" + "".join(map(str, steps))),
    )


_QUATERNION_UNITS = ("1", "-1", "i", "-i", "j", "-j", "k", "-k")


def _quaternion_mul(a: str, b: str) -> str:
    def split(u):
        return (-1 if u.startswith("-") else 1, u.lstrip("-"))

    sa, xa = split(a)
    sb, xb = split(b)
    table = {
        ("1", "1"): (1, "1"),
        ("1", "i"): (1, "i"),
        ("1", "j"): (1, "j"),
        ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"),
        ("j", "1"): (1, "j"),
        ("k", "1"): (1, "k"),
        ("i", "i"): (-1, "1"),
        ("j", "j"): (-1, "1"),
        ("k", "k"): (-1, "1"),
        ("i", "j"): (1, "k"),
        ("j", "i"): (-1, "k"),
        ("j", "k"): (1, "i"),
        ("k", "j"): (-1, "i"),
        ("k", "i"): (1, "j"),
        ("i", "k"): (-1, "j"),
    }
    sign, unit = table[(xa, xb)]
    sign *= sa * sb
    return unit if sign == 1 else "-" + unit


def _quaternion_right_regular(g: str):
    # x -> x.g as a permutation of the 8 units; apply-left-first composition
    # then matches quaternion multiplication.
    return permutation_element(
        [_QUATERNION_UNITS.index(_quaternion_mul(x, g)) for x in _QUATERNION_UNITS]
    )


def quaternion() -> GeneratedGroup:
    """Q8 via its right regular permutation representation, S = {i, j}."""
    return GeneratedGroup.permutation(
        8,
        [_quaternion_right_regular("i"), _quaternion_right_regular("j")],
        name="Q8",
    )


def quaternion_alt() -> GeneratedGroup:
    """Q8 with T = {i, j, k}."""
    return GeneratedGroup.permutation(
        8,
        [
            _quaternion_right_regular("i"),
            _quaternion_right_regular("j"),
            _quaternion_right_regular("k"),
        ],
        name="Q8-T",
    )


def int_line() -> GeneratedGroup:
    """The integers with S = {1}."""
    return GeneratedGroup.free_abelian(1, [vector_element((1,))], name="Z")


def int_lattice(rank: int) -> GeneratedGroup:
    """Z^rank with the standard basis."""
    basis = [
        vector_element(tuple(1 if i == j else 0 for j in range(rank)))
        for i in range(rank)
    ]
    return GeneratedGroup.free_abelian(rank, basis, name=f"Z^{rank}")


def complete_graph_variant(group: GeneratedGroup) -> GeneratedGroup:
    """The same finite group regenerated by S = G \\ {e} (complete Cayley graph)."""
    e = group.identity()
    gens = [g for g in group.elements() if g != e]
    return GeneratedGroup.permutation(
        group.size, gens, name=f"{group.name or 'G'}-complete"
    )


def default_fixtures() -> list[GeneratedGroup]:
    return [
        sym3(),
        sym4(),
        dihedral4(),
        cyclic_group(4),
        cyclic_group(6, steps=(2, 3)),
        quaternion(),
        int_line(),
        int_lattice(3),
    ]
