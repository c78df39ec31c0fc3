"""Exact clopen sets for the three built-in spaces, and the four homeomorphisms.

Spaces
------
``TWO_SIDED``
    {0,1}^Z. A set is a radius ``r`` and a set of words of length ``2r+1``
    read over the window ``[-r, r]``.
``ONE_SIDED``
    {0,1}^N0. A set is a length ``L`` and a set of words of length ``L``.
``INTEGERS``
    Z* = Z u {inf}. A set is finite, or cofinite (stored by its excluded
    integers; cofinite sets contain ``inf``).

All sets are canonical on construction (minimal window, no duplicates), so
``==`` and ``hash`` are semantic.

Label syntax
------------
two-sided ``01[1]01`` (bracketed symbol at position 0, ``*`` wildcard, ``|``
unions), one-sided ``[1]01``, integers ``{3}``, ``{1,2}``, ``V(2)``, ``V{0,5}``.
``X`` is the whole space and ``empty`` the empty set in every backend.
"""

from __future__ import annotations

import math
import re
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import ClassVar, Iterable, Iterator

INFINITY = math.inf


class BackendMismatchError(TypeError):
    """Raised when sets, points or maps from different spaces are combined."""


class LabelError(ValueError):
    pass


def _fills(n: int) -> list[str]:
    return ["".join(p) for p in product("01", repeat=n)]


def _flip(word: str) -> str:
    return word.translate(_FLIP)


_FLIP = str.maketrans("01", "10")


class ClopenSet(ABC):
    space: ClassVar["Space"]

    def _check(self, other: object) -> None:
        if type(other) is not type(self):
            raise BackendMismatchError(
                f"cannot combine {type(self).__name__} with {type(other).__name__}"
            )

    @abstractmethod
    def __and__(self, other): ...

    @abstractmethod
    def __or__(self, other): ...

    @abstractmethod
    def __invert__(self): ...

    def __sub__(self, other):
        return self & ~other

    @abstractmethod
    def issubset(self, other) -> bool: ...

    @abstractmethod
    def is_empty(self) -> bool: ...

    @abstractmethod
    def contains_point(self, point) -> bool: ...

    @abstractmethod
    def diameter(self) -> Fraction: ...

    @abstractmethod
    def label(self) -> str: ...

    def is_whole(self) -> bool:
        return (~self).is_empty()

    def __str__(self) -> str:
        return self.label()


# ---------------------------------------------------------------------------
# cylinder unions


@dataclass(frozen=True, repr=False)
class _CylinderSet(ClopenSet):
    size: int
    words: frozenset[str]

    def __post_init__(self):
        words = frozenset(self.words)
        if any(len(w) != self._width(self.size) for w in words):
            raise ValueError(f"words must have length {self._width(self.size)}")
        size = self.size
        if not words:
            size = 0
        while size > 0:
            inner = {self._restrict(w, size, size - 1) for w in words}
            if len(inner) * self._split(size) != len(words):
                break
            words, size = frozenset(inner), size - 1
        object.__setattr__(self, "size", size)
        object.__setattr__(self, "words", words)

    # geometry hooks
    @staticmethod
    @abstractmethod
    def _width(size: int) -> int: ...

    @staticmethod
    @abstractmethod
    def _split(size: int) -> int:
        """Number of extensions of one word at ``size - 1`` to ``size``."""

    @staticmethod
    @abstractmethod
    def _restrict(word: str, size: int, to: int) -> str: ...

    @staticmethod
    @abstractmethod
    def _widen(words: Iterable[str], size: int, to: int) -> set[str]: ...

    def words_at(self, size: int) -> frozenset[str]:
        """The same set written over a larger window."""
        if size < self.size:
            raise ValueError(f"cannot narrow a window of size {self.size} to {size}")
        if size == self.size:
            return self.words
        return frozenset(self._widen(self.words, self.size, size))

    def measure(self) -> Fraction:
        """Fair-coin (Bernoulli) measure; positive on every nonempty set."""
        return Fraction(len(self.words), 2 ** self._width(self.size))

    def __and__(self, other):
        self._check(other)
        fine, coarse = (self, other) if self.size >= other.size else (other, self)
        r, s = fine.size, coarse.size
        words = {w for w in fine.words if self._restrict(w, r, s) in coarse.words}
        return type(self)(r, frozenset(words))

    def __or__(self, other):
        self._check(other)
        size = max(self.size, other.size)
        return type(self)(size, self.words_at(size) | other.words_at(size))

    def __invert__(self):
        return type(self)(self.size, frozenset(_fills(self._width(self.size))) - self.words)

    def __sub__(self, other):
        self._check(other)
        size = max(self.size, other.size)
        s = other.size
        words = {w for w in self.words_at(size) if self._restrict(w, size, s) not in other.words}
        return type(self)(size, frozenset(words))

    def issubset(self, other) -> bool:
        self._check(other)
        s = other.size
        if self.size >= s:
            return all(self._restrict(w, self.size, s) in other.words for w in self.words)
        return self.words_at(s) <= other.words

    def is_empty(self) -> bool:
        return not self.words

    def contains_point(self, point) -> bool:
        return point.window(self.size) in self.words

    def _pattern(self) -> str | None:
        """Product form with ``*`` wildcards, if the word set is a product."""
        width = self._width(self.size)
        columns = [{w[i] for w in self.words} for i in range(width)]
        if math.prod(len(c) for c in columns) != len(self.words):
            return None
        return "".join(next(iter(c)) if len(c) == 1 else "*" for c in columns)

    def label(self) -> str:
        if not self.words:
            return "empty"
        if self.size == 0 and len(self.words) == 2 ** self._width(0):
            return "X"
        pattern = self._pattern()
        if pattern is not None:
            return self._format(pattern)
        return "|".join(self._format(w) for w in sorted(self.words))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label()!r})"


@dataclass(frozen=True, repr=False)
class TwoSidedSet(_CylinderSet):
    """Union of cylinders of {0,1}^Z over the symmetric window [-size, size]."""

    @staticmethod
    def _width(size: int) -> int:
        return 2 * size + 1

    @staticmethod
    def _split(size: int) -> int:
        return 4 if size > 0 else 2

    @staticmethod
    def _restrict(word: str, size: int, to: int) -> str:
        d = size - to
        return word[d : len(word) - d]

    @staticmethod
    def _widen(words, size, to):
        fills = _fills(to - size)
        return {a + w + b for w in words for a in fills for b in fills}

    @property
    def radius(self) -> int:
        return self.size

    def _format(self, pattern: str) -> str:
        r = self.size
        return f"{pattern[:r]}[{pattern[r]}]{pattern[r + 1:]}"

    def diameter(self) -> Fraction:
        if not self.words:
            return Fraction(0)
        r = self.size
        for k in range(r + 1):
            if len({(w[r - k], w[r + k]) for w in self.words}) > 1:
                return Fraction(1, 2**k)
        return Fraction(1, 2 ** (r + 1))


@dataclass(frozen=True, repr=False)
class OneSidedSet(_CylinderSet):
    """Union of cylinders of {0,1}^N0 over the window [0, size)."""

    @staticmethod
    def _width(size: int) -> int:
        return size

    @staticmethod
    def _split(size: int) -> int:
        return 2

    @staticmethod
    def _restrict(word: str, size: int, to: int) -> str:
        return word[:to]

    @staticmethod
    def _widen(words, size, to):
        fills = _fills(to - size)
        return {w + b for w in words for b in fills}

    @property
    def length(self) -> int:
        return self.size

    def _format(self, pattern: str) -> str:
        return f"[{pattern[0]}]{pattern[1:]}"

    def diameter(self) -> Fraction:
        if not self.words:
            return Fraction(0)
        for k in range(self.size):
            if len({w[k] for w in self.words}) > 1:
                return Fraction(1, 2**k)
        return Fraction(1, 2**self.size)


# ---------------------------------------------------------------------------
# finite / cofinite subsets of Z*


@dataclass(frozen=True, repr=False)
class IntegerSet(ClopenSet):
    """A finite set of integers, or (``cofinite=True``) the complement of one, plus inf."""

    elements: frozenset[int]
    cofinite: bool = False

    def __post_init__(self):
        object.__setattr__(self, "elements", frozenset(int(e) for e in self.elements))

    @classmethod
    def finite(cls, values: Iterable[int]) -> "IntegerSet":
        return cls(frozenset(values), False)

    @classmethod
    def excluding(cls, values: Iterable[int]) -> "IntegerSet":
        return cls(frozenset(values), True)

    @classmethod
    def v(cls, n: int) -> "IntegerSet":
        """``V_n``: everything except ``-n..n``."""
        return cls.excluding(range(-n, n + 1))

    def __and__(self, other):
        self._check(other)
        a, b = self, other
        if not a.cofinite and not b.cofinite:
            return IntegerSet(a.elements & b.elements)
        if a.cofinite and b.cofinite:
            return IntegerSet(a.elements | b.elements, True)
        fin, cof = (a, b) if not a.cofinite else (b, a)
        return IntegerSet(fin.elements - cof.elements)

    def __or__(self, other):
        self._check(other)
        a, b = self, other
        if not a.cofinite and not b.cofinite:
            return IntegerSet(a.elements | b.elements)
        if a.cofinite and b.cofinite:
            return IntegerSet(a.elements & b.elements, True)
        fin, cof = (a, b) if not a.cofinite else (b, a)
        return IntegerSet(cof.elements - fin.elements, True)

    def __invert__(self):
        return IntegerSet(self.elements, not self.cofinite)

    def issubset(self, other) -> bool:
        self._check(other)
        if not self.cofinite:
            if other.cofinite:
                return self.elements.isdisjoint(other.elements)
            return self.elements <= other.elements
        return other.cofinite and other.elements <= self.elements

    def is_empty(self) -> bool:
        return not self.cofinite and not self.elements

    def contains_point(self, point) -> bool:
        if point == INFINITY:
            return self.cofinite
        return (point in self.elements) != self.cofinite

    def diameter(self) -> Fraction:
        if self.cofinite:
            bound = max((abs(e) for e in self.elements), default=0) + 1
            candidates = [j for j in range(-bound, bound + 1) if j not in self.elements]
            points = candidates + [INFINITY]
        else:
            points = sorted(self.elements)
        best = Fraction(0)
        for i, x in enumerate(points):
            for y in points[i + 1 :]:
                best = max(best, integer_distance(x, y))
        return best

    def label(self) -> str:
        if self.is_empty():
            return "empty"
        if not self.cofinite:
            return "{" + ",".join(str(e) for e in sorted(self.elements)) + "}"
        if not self.elements:
            return "X"
        n = max(abs(e) for e in self.elements)
        if self.elements == frozenset(range(-n, n + 1)):
            return f"V({n})"
        return "V{" + ",".join(str(e) for e in sorted(self.elements)) + "}"

    def __repr__(self) -> str:
        return f"IntegerSet({self.label()!r})"


def integer_distance(x, y) -> Fraction:
    """Metric on Z*: ``|n-m| / ((1+|n|)(1+|m|))`` and ``1 / (1+|n|)`` to inf."""
    if x == y:
        return Fraction(0)
    if x == INFINITY:
        x, y = y, x
    if y == INFINITY:
        return Fraction(1, 1 + abs(x))
    return Fraction(abs(x - y), (1 + abs(x)) * (1 + abs(y)))


# ---------------------------------------------------------------------------
# points (exactly representable ones, used by the semantic refuters)


@dataclass(frozen=True)
class PeriodicSequence:
    """Periodic point of {0,1}^Z with ``x_i = block[i mod len(block)]``."""

    block: str

    def __post_init__(self):
        b = self.block
        if not b or set(b) - {"0", "1"}:
            raise ValueError(f"bad block {b!r}")
        for p in range(1, len(b)):
            if len(b) % p == 0 and b == b[:p] * (len(b) // p):
                object.__setattr__(self, "block", b[:p])
                break

    def symbol(self, i: int) -> str:
        return self.block[i % len(self.block)]

    def window(self, radius: int) -> str:
        return "".join(self.symbol(i) for i in range(-radius, radius + 1))

    def __str__(self) -> str:
        return f"({self.block})^Z@{self.symbol(0)}"


@dataclass(frozen=True)
class EventuallyPeriodic:
    """Point of {0,1}^N0 of the form ``prefix`` followed by ``cycle`` repeated."""

    prefix: str
    cycle: str

    def __post_init__(self):
        prefix, cycle = self.prefix, self.cycle
        if not cycle:
            raise ValueError("cycle must be nonempty")
        for p in range(1, len(cycle)):
            if len(cycle) % p == 0 and cycle == cycle[:p] * (len(cycle) // p):
                cycle = cycle[:p]
                break
        while prefix and prefix[-1] == cycle[-1]:
            prefix, cycle = prefix[:-1], cycle[-1] + cycle[:-1]
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "cycle", cycle)

    def symbol(self, i: int) -> str:
        if i < len(self.prefix):
            return self.prefix[i]
        return self.cycle[(i - len(self.prefix)) % len(self.cycle)]

    def window(self, length: int) -> str:
        return "".join(self.symbol(i) for i in range(length))

    def __str__(self) -> str:
        return f"{self.prefix}({self.cycle})^N"


# ---------------------------------------------------------------------------
# spaces


class BlockIndex(ABC):
    """Finds the blocks of a fixed list that meet a given set."""

    @abstractmethod
    def meeting(self, z: ClopenSet) -> list[int]: ...


class Space(ABC):
    name: ClassVar[str]
    set_type: ClassVar[type]

    @abstractmethod
    def whole(self) -> ClopenSet: ...

    @abstractmethod
    def empty(self) -> ClopenSet: ...

    @abstractmethod
    def parse(self, text: str) -> ClopenSet: ...

    @abstractmethod
    def sort_key(self, z: ClopenSet): ...

    @abstractmethod
    def index(self, blocks: tuple[ClopenSet, ...]) -> BlockIndex: ...

    @abstractmethod
    def partition_violations(self, blocks: tuple[ClopenSet, ...]) -> list[str]: ...

    @abstractmethod
    def candidate_points(self, bound: int) -> Iterator: ...

    def check(self, z: ClopenSet) -> None:
        if type(z) is not self.set_type:
            raise BackendMismatchError(f"{z!r} does not live in the {self.name} space")

    def __repr__(self) -> str:
        return f"<space {self.name}>"


class _CylinderIndex(BlockIndex):
    def __init__(self, blocks):
        self._tables: dict[int, dict[str, int]] = {}
        for i, b in enumerate(blocks):
            table = self._tables.setdefault(b.size, {})
            for w in b.words:
                table[w] = i

    def meeting(self, z) -> list[int]:
        hits: set[int] = set()
        for s, table in self._tables.items():
            if z.size >= s:
                for w in z.words:
                    i = table.get(z._restrict(w, z.size, s))
                    if i is not None:
                        hits.add(i)
            elif len(z.words) << (z._width(s) - z._width(z.size)) <= len(table):
                for w in z.words_at(s):
                    i = table.get(w)
                    if i is not None:
                        hits.add(i)
            else:
                for w, i in table.items():
                    if z._restrict(w, s, z.size) in z.words:
                        hits.add(i)
        return sorted(hits)


class _CylinderSpace(Space):
    def whole(self):
        return self.set_type(0, frozenset(_fills(self.set_type._width(0))))

    def empty(self):
        return self.set_type(0, frozenset())

    def sort_key(self, z):
        return (z.size, sorted(z.words))

    def index(self, blocks):
        return _CylinderIndex(blocks)

    def partition_violations(self, blocks) -> list[str]:
        problems = []
        for i, b in enumerate(blocks):
            self.check(b)
            if b.is_empty():
                problems.append(f"block {i} is empty")
        if problems:
            return problems
        total = sum((b.measure() for b in blocks), Fraction(0))
        index = self.index(blocks)
        for i, b in enumerate(blocks):
            others = [j for j in index.meeting(b) if j != i]
            if others:
                problems.append(f"block {i} ({b.label()}) overlaps block {others[0]}")
                break
        # disjoint clopen blocks of total measure 1 leave a null, hence empty, complement
        if not problems and total != 1:
            problems.append(f"blocks do not cover the space (measure {total})")
        return problems

    def parse(self, text: str):
        text = text.strip()
        if text == "X":
            return self.whole()
        if text == "empty":
            return self.empty()
        result = self.empty()
        for term in text.split("|"):
            result = result | self._parse_term(term.strip())
        return result


class TwoSidedSpace(_CylinderSpace):
    name = "two-sided"
    set_type = TwoSidedSet

    def _parse_term(self, term: str) -> TwoSidedSet:
        m = re.fullmatch(r"([01*]*)\[([01*])\]([01*]*)", term)
        if not m:
            raise LabelError(f"not a two-sided cylinder: {term!r}")
        left, mid, right = m.groups()
        r = max(len(left), len(right))
        pattern = "*" * (r - len(left)) + left + mid + right + "*" * (r - len(right))
        return TwoSidedSet(r, frozenset(_expand(pattern)))

    def cylinder(self, text: str) -> TwoSidedSet:
        return self.parse(text)

    def candidate_points(self, bound: int) -> Iterator[PeriodicSequence]:
        seen = set()
        for n in range(1, bound + 1):
            for block in _fills(n):
                p = PeriodicSequence(block)
                if p not in seen:
                    seen.add(p)
                    yield p


class OneSidedSpace(_CylinderSpace):
    name = "one-sided"
    set_type = OneSidedSet

    def _parse_term(self, term: str) -> OneSidedSet:
        m = re.fullmatch(r"\[([01*])\]([01*]*)", term)
        if not m:
            raise LabelError(f"not a one-sided cylinder: {term!r}")
        pattern = m.group(1) + m.group(2)
        return OneSidedSet(len(pattern), frozenset(_expand(pattern)))

    def candidate_points(self, bound: int) -> Iterator[EventuallyPeriodic]:
        seen = set()
        for c in range(1, bound + 1):
            for p in range(0, bound + 1):
                for prefix in _fills(p):
                    for cycle in _fills(c):
                        x = EventuallyPeriodic(prefix, cycle)
                        if x not in seen:
                            seen.add(x)
                            yield x


def _expand(pattern: str) -> list[str]:
    slots = [("0", "1") if ch == "*" else (ch,) for ch in pattern]
    return ["".join(p) for p in product(*slots)]


class _IntegerIndex(BlockIndex):
    def __init__(self, blocks):
        self._owner: dict[int, int] = {}
        self._cofinite: list[int] = []
        self._blocks = blocks
        for i, b in enumerate(blocks):
            if b.cofinite:
                self._cofinite.append(i)
            else:
                for e in b.elements:
                    self._owner[e] = i

    def meeting(self, z) -> list[int]:
        hits: set[int] = set()
        if z.cofinite:
            hits.update(self._cofinite)
            hits.update(i for e, i in self._owner.items() if e not in z.elements)
        else:
            hits.update(self._owner[e] for e in z.elements if e in self._owner)
            for i in self._cofinite:
                if not z.elements <= self._blocks[i].elements:
                    hits.add(i)
        return sorted(hits)


class IntegerSpace(Space):
    name = "integers"
    set_type = IntegerSet

    def whole(self):
        return IntegerSet(frozenset(), True)

    def empty(self):
        return IntegerSet(frozenset(), False)

    def sort_key(self, z):
        return (z.cofinite, len(z.elements) if not z.cofinite else 0, sorted(z.elements))

    def index(self, blocks):
        return _IntegerIndex(blocks)

    def partition_violations(self, blocks) -> list[str]:
        problems = []
        seen: dict[int, int] = {}
        cofinite = []
        for i, b in enumerate(blocks):
            self.check(b)
            if b.is_empty():
                problems.append(f"block {i} is empty")
            elif b.cofinite:
                cofinite.append(i)
            else:
                for e in b.elements:
                    if e in seen:
                        problems.append(f"blocks {seen[e]} and {i} share {e}")
                    seen[e] = i
        if len(cofinite) != 1:
            problems.append(f"expected exactly one block containing inf, found {len(cofinite)}")
        elif blocks[cofinite[0]].elements != frozenset(seen):
            problems.append(
                f"cofinite block {blocks[cofinite[0]].label()} does not complement the finite blocks"
            )
        return problems

    def parse(self, text: str) -> IntegerSet:
        text = text.strip()
        if text == "X":
            return self.whole()
        if text == "empty":
            return self.empty()
        if m := re.fullmatch(r"V\((\d+)\)", text):
            return IntegerSet.v(int(m.group(1)))
        if m := re.fullmatch(r"(V?)\{\s*(-?\d+(?:\s*,\s*-?\d+)*)?\s*\}", text):
            values = [int(v) for v in m.group(2).split(",")] if m.group(2) else []
            return IntegerSet(frozenset(values), bool(m.group(1)))
        raise LabelError(f"not an integer-set label: {text!r}")

    def candidate_points(self, bound: int):
        yield INFINITY
        yield from range(-bound, bound + 1)


TWO_SIDED = TwoSidedSpace()
ONE_SIDED = OneSidedSpace()
INTEGERS = IntegerSpace()
TwoSidedSet.space = TWO_SIDED
OneSidedSet.space = ONE_SIDED
IntegerSet.space = INTEGERS


# ---------------------------------------------------------------------------
# homeomorphisms


class Homeomorphism(ABC):
    name: ClassVar[str]
    space: ClassVar[Space]

    @abstractmethod
    def image(self, z: ClopenSet, power: int = 1) -> ClopenSet:
        """``h**power (z)``."""

    @abstractmethod
    def apply(self, point, power: int = 1): ...

    def __repr__(self) -> str:
        return f"<{self.name}>"


class Shift(Homeomorphism):
    """Two-sided shift, ``shift(x)_i = x_{i+1}``."""

    name = "shift"
    space = TWO_SIDED

    def image(self, z, power=1):
        self.space.check(z)
        if power == 0 or z.is_empty():
            return z
        fills = _fills(2 * abs(power))
        # the window [-r, r] moves to [-r - power, r - power]
        if power > 0:
            words = {w + f for w in z.words for f in fills}
        else:
            words = {f + w for w in z.words for f in fills}
        return TwoSidedSet(z.size + abs(power), frozenset(words))

    def apply(self, point, power=1):
        b = point.block
        k = power % len(b)
        return PeriodicSequence(b[k:] + b[:k])


class BitwiseNot(Homeomorphism):
    """Coordinate-wise flip of {0,1}^Z; an involution."""

    name = "bitwise-not"
    space = TWO_SIDED

    def image(self, z, power=1):
        self.space.check(z)
        if power % 2 == 0:
            return z
        return TwoSidedSet(z.size, frozenset(_flip(w) for w in z.words))

    def apply(self, point, power=1):
        if power % 2 == 0:
            return point
        return PeriodicSequence(_flip(point.block))


class Odometer(Homeomorphism):
    """Binary adding machine on {0,1}^N0, ``x_0`` least significant."""

    name = "odometer"
    space = ONE_SIDED

    def image(self, z, power=1):
        self.space.check(z)
        n = z.size
        if power == 0 or n == 0:
            return z
        modulus = 1 << n
        words = set()
        for w in z.words:
            value = (int(w[::-1], 2) + power) % modulus
            words.add(format(value, f"0{n}b")[::-1])
        return OneSidedSet(n, frozenset(words))

    def apply(self, point, power=1):
        for _ in range(abs(power)):
            point = _odometer_step(point, 1 if power > 0 else -1)
        return point


def _odometer_step(x: EventuallyPeriodic, sign: int) -> EventuallyPeriodic:
    carry, target = ("1", "0") if sign > 0 else ("0", "1")
    if set(x.prefix) <= {carry} and set(x.cycle) == {carry}:
        return EventuallyPeriodic("", target)
    prefix = x.prefix
    while target not in prefix:
        prefix += x.cycle
    k = prefix.index(target)
    return EventuallyPeriodic(target * k + carry + prefix[k + 1 :], x.cycle)


class IntegerAdd(Homeomorphism):
    """``n -> n + 1`` on Z*, fixing inf."""

    name = "zstar"
    space = INTEGERS

    def image(self, z, power=1):
        self.space.check(z)
        return IntegerSet(frozenset(e + power for e in z.elements), z.cofinite)

    def apply(self, point, power=1):
        return point if point == INFINITY else point + power


# ---------------------------------------------------------------------------
# operation-style API


def intersect(a: ClopenSet, b: ClopenSet) -> ClopenSet:
    return a & b


def union(a: ClopenSet, b: ClopenSet) -> ClopenSet:
    return a | b


def image(h: Homeomorphism, z: ClopenSet, power: int = 1) -> ClopenSet:
    if type(z) is not h.space.set_type:
        raise BackendMismatchError(f"{h.name} acts on the {h.space.name} space, got {z!r}")
    return h.image(z, power)


def is_empty(z: ClopenSet) -> bool:
    return z.is_empty()


def contains(a: ClopenSet, b: ClopenSet) -> bool:
    """True when ``b`` is a subset of ``a``."""
    return b.issubset(a)


def diameter(z: ClopenSet) -> Fraction:
    return z.diameter()


def union_all(sets: Iterable[ClopenSet], space: Space) -> ClopenSet:
    """Union of many sets; cylinder unions are merged at one common window."""
    sets = list(sets)
    if not sets:
        return space.empty()
    if isinstance(sets[0], _CylinderSet):
        for z in sets:
            space.check(z)
        size = max(z.size for z in sets)
        words: set[str] = set()
        for z in sets:
            words |= z.words_at(size)
        return space.set_type(size, frozenset(words))
    result = space.empty()
    for z in sets:
        result = result | z
    return result
