"""Partitions, h-refined partition sequences, and h-diagram construction."""

from __future__ import annotations

from array import array
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence

from .clopen import (
    BackendMismatchError,
    BitwiseNot,
    ClopenSet,
    Homeomorphism,
    IntegerAdd,
    IntegerSet,
    Odometer,
    OneSidedSet,
    Shift,
    Space,
    TwoSidedSet,
    _fills,
)
from .diagram import DiagramLevel, HDiagram


class ConstructionError(ValueError):
    pass


class NotHRefinedError(ConstructionError):
    def __init__(self, level: int, block: ClopenSet, reason: str):
        super().__init__(f"not h-refined at level {level}: block {block.label()} {reason}")
        self.level = level
        self.block = block


class NoParentError(ConstructionError):
    def __init__(self, level: int, block: ClopenSet):
        super().__init__(f"no parent found at level {level} for block {block.label()}")
        self.level = level
        self.block = block


class Partition:
    """Finite clopen partition, blocks kept in the space's canonical order."""

    def __init__(self, blocks: Iterable[ClopenSet], level: int = 0, space: Space | None = None):
        blocks = list(blocks)
        if space is None:
            if not blocks:
                raise ConstructionError("cannot infer the space of an empty partition")
            space = type(blocks[0]).space
        for b in blocks:
            space.check(b)
        self.space = space
        self.level = level
        self.blocks: tuple[ClopenSet, ...] = tuple(sorted(blocks, key=space.sort_key))

    @classmethod
    def trivial(cls, space: Space, level: int = 0) -> "Partition":
        return cls([space.whole()], level, space)

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, i: int) -> ClopenSet:
        return self.blocks[i]

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return self.space is other.space and self.blocks == other.blocks

    def __hash__(self):
        return hash(self.blocks)

    def __repr__(self) -> str:
        shown = ", ".join(self.labels[:4]) + (", ..." if len(self) > 4 else "")
        return f"Partition(level={self.level}, [{shown}])"

    @cached_property
    def labels(self) -> list[str]:
        return [b.label() for b in self.blocks]

    @cached_property
    def _index(self):
        return self.space.index(self.blocks)

    def blocks_meeting(self, z: ClopenSet) -> list[int]:
        self.space.check(z)
        return self._index.meeting(z)

    def blocks_within(self, z: ClopenSet) -> list[int]:
        return [i for i in self.blocks_meeting(z) if self.blocks[i].issubset(z)]

    def locate(self, z: ClopenSet) -> int | None:
        """Index of the unique block containing ``z``, or None."""
        hits = self.blocks_meeting(z)
        if len(hits) == 1 and z.issubset(self.blocks[hits[0]]):
            return hits[0]
        return None

    def violations(self) -> list[str]:
        return self.space.partition_violations(self.blocks)

    def image(self, h: Homeomorphism, power: int = 1) -> "Partition":
        if h.space is not self.space:
            raise BackendMismatchError(f"{h.name} does not act on the {self.space.name} space")
        return Partition((h.image(b, power) for b in self.blocks), self.level, self.space)

    def refines(self, other: "Partition") -> bool:
        return all(other.locate(b) is not None for b in self.blocks)


def wedge(parts: Sequence[Partition]) -> Partition:
    """All nonempty intersections, one block from each partition."""
    if not parts:
        raise ConstructionError("wedge of no partitions")
    space = parts[0].space
    for p in parts[1:]:
        if p.space is not space:
            raise BackendMismatchError(f"cannot wedge {space.name} with {p.space.name} partitions")
    blocks = list(parts[0].blocks)
    for p in parts[1:]:
        merged = []
        for a in blocks:
            for j in p.blocks_meeting(a):
                c = a & p.blocks[j]
                if not c.is_empty():
                    merged.append(c)
        blocks = merged
    return Partition(blocks, max(p.level for p in parts), space)


def h_refine_step(prev: Partition, next_base: Partition, h: Homeomorphism) -> Partition:
    """``next_base ^ prev ^ h(prev) ^ h^-1(prev)``, tagged one level below ``prev``."""
    result = wedge([next_base, prev, prev.image(h, 1), prev.image(h, -1)])
    result.level = prev.level + 1
    return result


class PartitionSequence:
    """Lazily realized partitions ``P_0, P_1, ...`` for one homeomorphism."""

    def __init__(self, h: Homeomorphism, generator: Callable[[int], Iterable[ClopenSet]], name: str = "external"):
        self.h = h
        self.space = h.space
        self.name = name
        self._generator = generator
        self._cache: dict[int, Partition] = {}

    @classmethod
    def h_refined(
        cls, h: Homeomorphism, bases: Callable[[int], Partition] | Sequence[Partition], name: str = "external"
    ) -> "PartitionSequence":
        """``P_0 = {X}``, ``P_{n+1} = h_refine_step(P_n, bases(n+1), h)``.

        A list of bases supplies ``P'_1, P'_2, ...``; past its end the last base repeats.
        """
        if not callable(bases):
            listed = list(bases)
            if not listed:
                raise ConstructionError("need at least one base partition")
            bases = lambda n: listed[min(n, len(listed)) - 1]  # noqa: E731

        seq = cls(h, lambda n: (), name)

        def generate(n: int):
            if n == 0:
                return [h.space.whole()]
            return h_refine_step(seq.partition(n - 1), bases(n), h).blocks

        seq._generator = generate
        return seq

    def partition(self, n: int) -> Partition:
        if n < 0:
            raise ConstructionError(f"negative level {n}")
        if n not in self._cache:
            self._cache[n] = Partition(self._generator(n), n, self.space)
        return self._cache[n]

    def __getitem__(self, n: int) -> Partition:
        return self.partition(n)

    def refinement_violations(self, n: int) -> list[str]:
        """Why ``P_{n+1}`` fails to refine ``P_n``, ``h(P_n)`` or ``h^-1(P_n)``."""
        upper, lower = self.partition(n), self.partition(n + 1)
        problems = []
        for b in lower:
            for what, z in (("P_n", b), ("h(P_n)", self.h.image(b, -1)), ("h^-1(P_n)", self.h.image(b, 1))):
                if upper.locate(z) is None:
                    problems.append(f"{b.label()} is not inside a single block of {what}")
        return problems

    def __repr__(self) -> str:
        return f"<PartitionSequence {self.name}>"


def _cylinder_sequence(set_type, width: Callable[[int], int], size: Callable[[int], int], space):
    def generate(n: int):
        if n == 0:
            return [space.whole()]
        return [set_type(size(n), frozenset([w])) for w in _fills(width(n))]

    return generate


def _zstar_blocks(n: int):
    if n == 0:
        return [IntegerSet.excluding(())]
    return [IntegerSet.finite([j]) for j in range(-(n - 1), n)] + [IntegerSet.v(n - 1)]


_SYSTEMS = {
    "shift": lambda: PartitionSequence(
        Shift(), _cylinder_sequence(TwoSidedSet, lambda n: 2 * n - 1, lambda n: n - 1, Shift.space), "shift"
    ),
    "bitwise-not": lambda: PartitionSequence(
        BitwiseNot(),
        _cylinder_sequence(TwoSidedSet, lambda n: 2 * n - 1, lambda n: n - 1, BitwiseNot.space),
        "bitwise-not",
    ),
    "odometer": lambda: PartitionSequence(
        Odometer(), _cylinder_sequence(OneSidedSet, lambda n: n, lambda n: n, Odometer.space), "odometer"
    ),
    "zstar": lambda: PartitionSequence(IntegerAdd(), _zstar_blocks, "zstar"),
}

_ALIASES = {"not": "bitwise-not", "bitwise_not": "bitwise-not", "z*": "zstar", "adding-machine": "odometer"}


def system_names() -> list[str]:
    return list(_SYSTEMS)


def canonical_sequence(name: str) -> PartitionSequence:
    key = name.strip().lower()
    key = _ALIASES.get(key, key)
    if key not in _SYSTEMS:
        raise ConstructionError(f"unknown system {name!r}; choose from {', '.join(_SYSTEMS)}")
    return _SYSTEMS[key]()


def build_diagram(seq: PartitionSequence, depth: int) -> HDiagram:
    """Vertex levels ``0..depth``; red edges use ``h`` at even levels and ``h^-1`` at odd ones.

    Every realized partition is checked, and each lower block must sit in a
    single block of ``P_n``, of ``h(P_n)`` and of ``h^-1(P_n)``.
    """
    if depth < 1:
        raise ConstructionError(f"depth must be at least 1, got {depth}")
    h = seq.h
    top = seq.partition(0)
    if problems := top.violations():
        raise ConstructionError(f"P_0 is not a partition: {problems[0]}")
    diagram = HDiagram(top.labels)
    for n in range(depth):
        upper, lower = seq.partition(n), seq.partition(n + 1)
        if problems := lower.violations():
            raise ConstructionError(f"P_{n + 1} is not a partition: {problems[0]}")
        blue, red = array("q"), array("q")
        for z in lower:
            into_h = upper_block(upper, h.image(z, -1), n, z)
            into_h_inv = upper_block(upper, h.image(z, 1), n, z)
            blue.append(upper_block(upper, z, n, z))
            red.append(into_h if n % 2 == 0 else into_h_inv)
        diagram.seal_level(DiagramLevel(len(upper), len(lower), blue, red), lower.labels)
    return diagram


def upper_block(upper: Partition, z: ClopenSet, n: int, source: ClopenSet) -> int:
    hits = upper.blocks_meeting(z)
    if not hits:
        raise NoParentError(n, source)
    if len(hits) > 1 or not z.issubset(upper.blocks[hits[0]]):
        raise NotHRefinedError(n, source, f"meets {len(hits)} blocks of P_{n} or its h-images")
    return hits[0]


def max_diameter(partition: Partition) -> Fraction:
    return max(b.diameter() for b in partition)
