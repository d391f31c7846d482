"""Textual element notation: disjoint-cycle strings and integer vectors.

Points are 1-based in text (so "(1 2 3)" means the 3-cycle on points 1, 2, 3)
and 0-based internally.  Products of cycles in one expression must be
disjoint; "e" and "()" denote the identity.
"""

from __future__ import annotations

from .errors import NotationError
from .groups import FREE_ABELIAN, PERMUTATION, Element


def parse_cycle_notation(text: str, degree: int) -> Element:
    """Parse a disjoint-cycle expression into a permutation of degree points."""
    if degree < 1:
        raise NotationError(f"degree must be at least 1, got {degree}")
    stripped = text.strip()
    if stripped in ("e", "()"):
        return Element(PERMUTATION, tuple(range(degree)))
    if not stripped:
        raise NotationError("empty permutation expression")

    images = list(range(degree))
    used: set[int] = set()
    pos = 0
    n = len(text)

    def skip_ws(i):
        while i < n and text[i] in " \t":
            i += 1
        return i

    pos = skip_ws(pos)
    saw_cycle = False
    while pos < n:
        if text[pos] != "(":
            raise NotationError(f"expected '(' but found {text[pos]!r}", position=pos)
        pos += 1
        cycle: list[int] = []
        while True:
            pos = skip_ws(pos)
            if pos >= n:
                raise NotationError("unclosed cycle", position=pos)
            if text[pos] == ")":
                pos += 1
                break
            if text[pos] == ",":
                pos += 1
                continue
            if not text[pos].isdigit():
                raise NotationError(f"unexpected character {text[pos]!r}", position=pos)
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            point = int(text[start:pos])
            if not 1 <= point <= degree:
                raise NotationError(f"point {point} out of range 1..{degree}", position=start)
            if point in used:
                raise NotationError(f"point {point} repeated", position=start)
            used.add(point)
            cycle.append(point - 1)
        if not cycle:
            raise NotationError("empty cycle in a product of cycles", position=pos - 2)
        saw_cycle = True
        for i, p in enumerate(cycle):
            images[p] = cycle[(i + 1) % len(cycle)]
        pos = skip_ws(pos)
    if not saw_cycle:
        raise NotationError("no cycles found", position=0)
    return Element(PERMUTATION, tuple(images))


def format_permutation(el: Element) -> str:
    """Canonical disjoint-cycle form: cycles by smallest point, "e" for identity."""
    seen: set[int] = set()
    parts = []
    for start in range(len(el.data)):
        if start in seen or el.data[start] == start:
            seen.add(start)
            continue
        cycle = [start]
        seen.add(start)
        x = el.data[start]
        while x != start:
            cycle.append(x)
            seen.add(x)
            x = el.data[x]
        parts.append("(" + " ".join(str(p + 1) for p in cycle) + ")")
    return "".join(parts) if parts else "e"


def parse_vector(text: str, rank: int) -> Element:
    """Parse an integer vector like "(2, -3)", "2,-3", or "e" (the zero vector)."""
    stripped = text.strip()
    if stripped == "e":
        return Element(FREE_ABELIAN, (0,) * rank)
    inner = stripped
    if inner.startswith("(") and inner.endswith(")"):
        inner = inner[1:-1]
    parts = [p.strip() for p in inner.split(",")] if inner.strip() else []
    coords = []
    for i, p in enumerate(parts):
        try:
            coords.append(int(p))
        except ValueError:
            raise NotationError(f"coordinate {i} is not an integer: {p!r}") from None
    if len(coords) != rank:
        raise NotationError(f"vector has {len(coords)} coordinates, expected {rank}")
    return Element(FREE_ABELIAN, tuple(coords))


def format_vector(el: Element) -> str:
    return "(" + ", ".join(str(x) for x in el.data) + ")"


def format_element(el: Element) -> str:
    if el.kind == PERMUTATION:
        return format_permutation(el)
    return format_vector(el)


def parse_element(text: str, kind: str, size: int) -> Element:
    if kind == PERMUTATION:
        return parse_cycle_notation(text, size)
    return parse_vector(text, size)
