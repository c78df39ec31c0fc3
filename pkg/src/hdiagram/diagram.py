"""Two-colored separated Bratteli diagrams stored as parent maps.

Every vertex below the top has exactly one blue and one red edge going up, so
a level pair is two total maps ``lower index -> upper index``. Paths are a
source vertex plus a color sequence, replayed upward.
"""

from __future__ import annotations

import enum
from array import array
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import kernels

#: Red edges from level n to n+1 record containment in h(Z) for even n and in h^-1(Z) for odd n.
PARITY_CONVENTION = "red(n): lower subset of h(upper) if n even, of h^-1(upper) if n odd"

#: validate() certifies only the necessary conditions (parent uniqueness, surjectivity, rhombi).
VALIDATION_SCOPE = "necessary-conditions-only"


class DiagramError(ValueError):
    pass


class Color(enum.Enum):
    BLUE = "blue"
    RED = "red"

    def __str__(self) -> str:
        return self.value


BLUE, RED = Color.BLUE, Color.RED


def colors(spec: str | Iterable[Color | str]) -> tuple[Color, ...]:
    """``"brr"`` or ``["blue", RED]`` -> tuple of colors."""
    if isinstance(spec, str):
        return tuple(BLUE if c == "b" else RED if c == "r" else _bad_color(c) for c in spec)
    return tuple(c if isinstance(c, Color) else Color(c) for c in spec)


def _bad_color(c):
    raise ValueError(f"unknown color {c!r}")


@dataclass(frozen=True, order=True)
class VertexRef:
    level: int
    index: int

    def __str__(self) -> str:
        return f"({self.level},{self.index})"


def _readonly(values) -> memoryview:
    if isinstance(values, memoryview) and values.readonly and values.format == "q":
        return values
    return memoryview(array("q", values)).toreadonly()


@dataclass(frozen=True, eq=False)
class DiagramLevel:
    """Edges between level n (``upper``) and level n+1 (``lower``)."""

    upper_size: int
    lower_size: int
    blue_parent: Sequence[int]
    red_parent: Sequence[int]

    def __post_init__(self):
        blue = _readonly(self.blue_parent)
        red = _readonly(self.red_parent)
        for name, parent in (("blue", blue), ("red", red)):
            if len(parent) != self.lower_size:
                raise DiagramError(
                    f"{name} parent map has {len(parent)} entries for {self.lower_size} vertices"
                )
            if len(parent) and not (0 <= min(parent) and max(parent) < self.upper_size):
                raise DiagramError(f"{name} parent out of range 0..{self.upper_size - 1}")
        object.__setattr__(self, "blue_parent", blue)
        object.__setattr__(self, "red_parent", red)

    def parent(self, color: Color) -> memoryview:
        return self.blue_parent if color is BLUE else self.red_parent

    def __eq__(self, other):
        if not isinstance(other, DiagramLevel):
            return NotImplemented
        return (
            self.upper_size == other.upper_size
            and self.lower_size == other.lower_size
            and self.blue_parent == other.blue_parent
            and self.red_parent == other.red_parent
        )

    __hash__ = None  # type: ignore[assignment]


class HDiagram:
    """A growable stack of sealed levels with per-vertex labels.

    Level ``n`` of vertices has ``size(n)`` vertices; ``levels[n]`` holds the
    edges between vertex levels n and n+1. ``depth`` counts sealed level pairs.
    """

    def __init__(self, top_labels: Sequence[str], parity_convention: str = PARITY_CONVENTION):
        if not top_labels:
            raise DiagramError("level 0 needs at least one vertex")
        self._levels: list[DiagramLevel] = []
        self._labels: list[tuple[str, ...]] = [tuple(top_labels)]
        self.parity_convention = parity_convention

    def seal_level(self, level: DiagramLevel, labels: Sequence[str]) -> None:
        if level.upper_size != self.size(self.depth):
            raise DiagramError(
                f"level upper size {level.upper_size} != current bottom size {self.size(self.depth)}"
            )
        if level.lower_size < 1:
            raise DiagramError("levels must be nonempty")
        if len(labels) != level.lower_size:
            raise DiagramError(f"{len(labels)} labels for {level.lower_size} vertices")
        self._levels.append(level)
        self._labels.append(tuple(labels))

    @property
    def levels(self) -> tuple[DiagramLevel, ...]:
        return tuple(self._levels)

    @property
    def labels(self) -> tuple[tuple[str, ...], ...]:
        return tuple(self._labels)

    @property
    def depth(self) -> int:
        return len(self._levels)

    def size(self, n: int) -> int:
        if not 0 <= n <= self.depth:
            raise DiagramError(f"level {n} outside 0..{self.depth}")
        return len(self._labels[n])

    @property
    def sizes(self) -> list[int]:
        return [len(labels) for labels in self._labels]

    def level(self, n: int) -> DiagramLevel:
        if not 0 <= n < self.depth:
            raise DiagramError(f"level pair {n} outside 0..{self.depth - 1}")
        return self._levels[n]

    def vertices(self, n: int) -> list[VertexRef]:
        return [VertexRef(n, i) for i in range(self.size(n))]

    def label(self, v: VertexRef) -> str:
        self.check_vertex(v)
        return self._labels[v.level][v.index]

    def find(self, level: int, label: str) -> VertexRef:
        try:
            return VertexRef(level, self._labels[level].index(label))
        except ValueError:
            raise DiagramError(f"no vertex labelled {label!r} at level {level}") from None

    def check_vertex(self, v: VertexRef) -> None:
        if not (0 <= v.level <= self.depth and 0 <= v.index < self.size(v.level)):
            raise DiagramError(f"vertex {v} not in diagram")

    def parent(self, v: VertexRef, color: Color) -> VertexRef:
        self.check_vertex(v)
        if v.level == 0:
            raise DiagramError("path exceeds diagram top")
        return VertexRef(v.level - 1, self._levels[v.level - 1].parent(color)[v.index])

    def __repr__(self) -> str:
        return f"<HDiagram sizes={self.sizes}>"


@dataclass(frozen=True)
class ColoredPath:
    """Upward path: start at ``source`` and follow ``edges`` one level at a time."""

    source: VertexRef
    edges: tuple[Color, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.edges)

    def range(self, diagram: HDiagram) -> VertexRef:
        return ancestor(diagram, self.source, self.edges)

    def vertices(self, diagram: HDiagram) -> list[VertexRef]:
        out = [self.source]
        for c in self.edges:
            out.append(diagram.parent(out[-1], c))
        return out

    def to_dict(self) -> dict:
        return {
            "source": [self.source.level, self.source.index],
            "edges": [c.value for c in self.edges],
        }


@dataclass(frozen=True)
class Violation:
    kind: str
    level: int
    detail: str

    def __str__(self) -> str:
        return f"level {self.level}: {self.kind} ({self.detail})"


_MAX_REPORTED = 20


def validate(diagram: HDiagram) -> list[Violation]:
    """Structural violations; empty iff parent maps are surjective and every rhombus closes.

    Totality and uniqueness of parents hold by representation (``DiagramLevel``
    rejects partial or out-of-range maps).
    """
    out: list[Violation] = []
    sizes = diagram.sizes
    if sizes[0] < 1:
        out.append(Violation("empty level", 0, "level 0 has no vertices"))
    for n, lv in enumerate(diagram.levels):
        if lv.upper_size != sizes[n] or lv.lower_size != sizes[n + 1]:
            out.append(Violation("size chain broken", n, f"{lv.upper_size}x{lv.lower_size}"))
        for color in Color:
            missing = kernels.missing_target(lv.parent(color), lv.upper_size)
            if missing >= 0:
                out.append(
                    Violation(f"{color}_parent not surjective", n, f"upper vertex {missing} unreached")
                )
    for n in range(diagram.depth - 1):
        top, mid = diagram.level(n), diagram.level(n + 1)
        bb = kernels.compose(mid.blue_parent, top.blue_parent)
        rr = kernels.compose(mid.red_parent, top.red_parent)
        bad = kernels.mismatches(bb, rr)
        for w in bad[:_MAX_REPORTED]:
            out.append(
                Violation(
                    "rhombus incomplete",
                    n,
                    f"at (w,v)=({VertexRef(n + 2, w)},{VertexRef(n, bb[w])}): red-red reaches {rr[w]}",
                )
            )
        if len(bad) > _MAX_REPORTED:
            out.append(Violation("rhombus incomplete", n, f"... and {len(bad) - _MAX_REPORTED} more"))
    return out


def ancestor(diagram: HDiagram, v: VertexRef, path_colors: Sequence[Color] | str) -> VertexRef:
    """The unique vertex reached from ``v`` by following the colors upward."""
    cs = colors(path_colors)
    diagram.check_vertex(v)
    if len(cs) > v.level:
        raise DiagramError("path exceeds diagram top")
    for c in cs:
        v = VertexRef(v.level - 1, diagram.level(v.level - 1).parent(c)[v.index])
    return v


def ancestor_map(diagram: HDiagram, bottom: int, path_colors: Sequence[Color] | str) -> array:
    """``ancestor`` for every vertex of level ``bottom`` at once."""
    cs = colors(path_colors)
    if len(cs) > bottom:
        raise DiagramError("path exceeds diagram top")
    result = array("q", range(diagram.size(bottom)))
    for k, c in enumerate(cs):
        result = kernels.compose(result, diagram.level(bottom - 1 - k).parent(c))
    return result


def reachable_mask(diagram: HDiagram, w: VertexRef, target_level: int) -> bytearray:
    diagram.check_vertex(w)
    if not 0 <= target_level <= w.level:
        raise DiagramError(f"target above diagram or below source: {target_level}")
    mask = bytearray(diagram.size(w.level))
    mask[w.index] = 1
    for n in range(w.level - 1, target_level - 1, -1):
        lv = diagram.level(n)
        mask = kernels.push_up(mask, lv.blue_parent, lv.red_parent, lv.upper_size)
    return mask


def reachable_uppers(diagram: HDiagram, w: VertexRef, target_level: int) -> set[VertexRef]:
    """Vertices at ``target_level`` that ``w`` connects to (zero-length paths included)."""
    mask = reachable_mask(diagram, w, target_level)
    return {VertexRef(target_level, i) for i, bit in enumerate(mask) if bit}


def counts(diagram: HDiagram, n: int) -> tuple[int, int, int]:
    """(vertices at level n, blue edges, red edges between levels n and n+1)."""
    lv = diagram.level(n)
    return diagram.size(n), len(lv.blue_parent), len(lv.red_parent)
