"""Bounded-depth decision procedures on h-diagrams, with semantic cross-checks.

Graph-side checks only read the parent maps. Semantic checks also need the
``PartitionSequence`` the diagram was built from, so vertex ``(n, k)`` can be
mapped to its block ``seq[n][k]``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from . import kernels
from .clopen import ClopenSet, union_all
from .construction import PartitionSequence
from .diagram import (
    BLUE,
    RED,
    ColoredPath,
    DiagramError,
    HDiagram,
    VertexRef,
    ancestor_map,
    reachable_mask,
)


class Status(enum.Enum):
    HOLDS = "Holds"
    FAILS = "Fails"
    INCONCLUSIVE = "Inconclusive"


_EXIT_CODES = {Status.HOLDS: 0, Status.FAILS: 1, Status.INCONCLUSIVE: 4}


@dataclass(frozen=True)
class Verdict:
    status: Status
    check: str
    depth_checked: int
    witness: dict | None = None
    detail: str = ""

    @property
    def exit_code(self) -> int:
        return _EXIT_CODES[self.status]

    def __bool__(self) -> bool:
        return self.status is Status.HOLDS

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "status": self.status.value,
            "depth_checked": self.depth_checked,
            "witness": self.witness,
            "detail": self.detail,
        }

    def __str__(self) -> str:
        text = f"{self.check}: {self.status.value} (depth {self.depth_checked})"
        return f"{text} - {self.detail}" if self.detail else text


@dataclass(frozen=True)
class BluePathPrefix:
    """Vertex ``indices[k]`` at level k, each the blue parent of the next."""

    indices: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "indices", tuple(self.indices))
        if not self.indices:
            raise ValueError("a blue path needs at least its level-0 vertex")

    def __len__(self) -> int:
        return len(self.indices)

    @property
    def bottom_level(self) -> int:
        return len(self.indices) - 1

    def vertex(self, level: int) -> VertexRef:
        return VertexRef(level, self.indices[level])

    def vertices(self) -> list[VertexRef]:
        return [VertexRef(k, i) for k, i in enumerate(self.indices)]

    def check(self, diagram: HDiagram) -> None:
        for k in range(1, len(self.indices)):
            v = self.vertex(k)
            diagram.check_vertex(v)
            if diagram.level(k - 1).blue_parent[v.index] != self.indices[k - 1]:
                raise DiagramError(f"not a blue path: blue parent of {v} is not index {self.indices[k - 1]}")

    @classmethod
    def from_bottom(cls, diagram: HDiagram, bottom: VertexRef) -> "BluePathPrefix":
        """The unique blue path from the top down to ``bottom``."""
        chain = [bottom.index]
        v = bottom
        while v.level > 0:
            v = diagram.parent(v, BLUE)
            chain.append(v.index)
        return cls(tuple(reversed(chain)))

    def labels(self, diagram: HDiagram) -> list[str]:
        return [diagram.label(v) for v in self.vertices()]


class Connectivity:
    """Memoized downward closures: which vertices at each lower level reach a given vertex."""

    def __init__(self, diagram: HDiagram):
        self.diagram = diagram
        self._masks: dict[VertexRef, list[bytearray]] = {}

    def descendants(self, v: VertexRef, level: int) -> bytearray:
        """Mask over ``level`` of the vertices ``w`` with ``w ~> v``."""
        d = self.diagram
        d.check_vertex(v)
        if not v.level <= level <= d.depth:
            raise DiagramError(f"level {level} outside {v.level}..{d.depth}")
        masks = self._masks.get(v)
        if masks is None:
            start = bytearray(d.size(v.level))
            start[v.index] = 1
            masks = self._masks[v] = [start]
        while v.level + len(masks) - 1 < level:
            lv = d.level(v.level + len(masks) - 1)
            masks.append(kernels.push_down(masks[-1], lv.blue_parent, lv.red_parent))
        return masks[level - v.level]

    def first_full_level(self, v: VertexRef, limit: int) -> int | None:
        """Smallest ``n <= limit`` such that every vertex of level n reaches ``v``.

        Once a level is full, every deeper level is too (blue parents exist).
        """
        for n in range(v.level, limit + 1):
            if all(self.descendants(v, n)):
                return n
        return None


def connected(diagram: HDiagram, w: VertexRef, v: VertexRef) -> bool:
    """``w ~> v``: an upward path of any colors, possibly empty, from ``w`` to ``v``."""
    if v.level > w.level:
        raise DiagramError(f"{v} lies below {w}; connectivity runs upward")
    diagram.check_vertex(v)
    return bool(reachable_mask(diagram, w, v.level)[v.index])


def block(seq: PartitionSequence, v: VertexRef) -> ClopenSet:
    return seq.partition(v.level).blocks[v.index]


def _powers(i: int) -> Iterator[int]:
    yield 0
    for j in range(1, i + 1):
        yield j
        yield -j


def semantic_connected(seq: PartitionSequence, w: VertexRef, v: VertexRef) -> tuple[bool, int | None]:
    """Is ``block(w)`` inside ``h^j(block(v))`` for some ``|j| <= gap/2``? Returns the smallest such j."""
    gap = w.level - v.level
    if gap < 0 or gap % 2:
        raise ValueError(f"semantic connectivity needs an even nonnegative level gap, got {gap}")
    lower, upper = block(seq, w), block(seq, v)
    for j in _powers(gap // 2):
        if lower.issubset(seq.h.image(upper, j)):
            return True, j
    return False, None


def orbit_union(seq: PartitionSequence, z: ClopenSet, i: int) -> ClopenSet:
    """``h^-i(z) u ... u h^i(z)``."""
    return union_all((seq.h.image(z, j) for j in _powers(i)), seq.space)


def w_set(
    diagram: HDiagram, seq: PartitionSequence, v: VertexRef, i: int, conn: Connectivity | None = None
) -> tuple[ClopenSet, ClopenSet]:
    """(union of level ``v.level + 2i`` blocks that reach ``v``, orbit union of ``v``'s block)."""
    if i < 0:
        raise ValueError("i must be nonnegative")
    conn = conn or Connectivity(diagram)
    target = v.level + 2 * i
    if target > diagram.depth:
        raise DiagramError(f"level {target} not built (depth {diagram.depth})")
    mask = conn.descendants(v, target)
    blocks = seq.partition(target).blocks
    graph_union = union_all((blocks[k] for k, bit in enumerate(mask) if bit), seq.space)
    return graph_union, orbit_union(seq, block(seq, v), i)


def alternating_colors(m: int) -> str:
    """``r b r ... r`` with m reds, read from the source end."""
    return "b".join("r" * m)


def global_periodicity(diagram: HDiagram, m: int, depth: int | None = None) -> Verdict:
    """Compare each alternating path with m reds against the all-blue path of the same length."""
    if m < 1:
        raise ValueError("m must be at least 1")
    depth = diagram.depth if depth is None else depth
    if depth > diagram.depth:
        raise DiagramError(f"depth {depth} exceeds the built depth {diagram.depth}")
    length = 2 * m - 1
    if depth < 2 * m:
        raise DiagramError(f"periodicity with m={m} needs depth >= {2 * m}, got {depth}")
    alt, straight = alternating_colors(m), "b" * length
    for bottom in range(length, depth + 1):
        via_alt = ancestor_map(diagram, bottom, alt)
        via_blue = ancestor_map(diagram, bottom, straight)
        bad = kernels.mismatches(via_alt, via_blue)
        if len(bad):
            source = VertexRef(bottom, bad[0])
            top = bottom - length
            witness = {
                "source": [source.level, source.index],
                "source_label": diagram.label(source),
                "alternating": ColoredPath(source, tuple(RED if c == "r" else BLUE for c in alt)).to_dict(),
                "blue": ColoredPath(source, (BLUE,) * length).to_dict(),
                "alternating_range": [top, via_alt[bad[0]]],
                "blue_range": [top, via_blue[bad[0]]],
                "alternating_range_label": diagram.label(VertexRef(top, via_alt[bad[0]])),
                "blue_range_label": diagram.label(VertexRef(top, via_blue[bad[0]])),
            }
            return Verdict(
                Status.FAILS,
                f"periodicity(m={m})",
                depth,
                witness,
                f"from {diagram.label(source)} the alternating path ends at "
                f"{witness['alternating_range_label']}, the blue path at {witness['blue_range_label']}",
            )
    return Verdict(Status.HOLDS, f"periodicity(m={m})", depth, {"m": m})


def em_check(
    diagram: HDiagram,
    path: BluePathPrefix,
    i_max: int,
    search_depth: int,
    conn: Connectivity | None = None,
) -> Verdict:
    """For each i <= i_max, the first level n_i whose vertices all reach the path's level-i vertex.

    ``n_i`` is minimal; the witness also lists the least ``n >= n_i`` with ``n - i`` even.
    """
    if path.bottom_level < i_max:
        raise DiagramError(f"path reaches level {path.bottom_level}, need {i_max}")
    if search_depth > diagram.depth:
        raise DiagramError(f"search depth {search_depth} exceeds the built depth {diagram.depth}")
    path.check(diagram)
    conn = conn or Connectivity(diagram)
    found: dict[int, int] = {}
    even: dict[int, int | None] = {}
    missing = []
    for i in range(i_max + 1):
        n = conn.first_full_level(path.vertex(i), search_depth)
        if n is None:
            missing.append(i)
            continue
        found[i] = n
        m = n if (n - i) % 2 == 0 else n + 1
        even[i] = m if m <= search_depth else None
    witness = {"path": list(path.indices[: i_max + 1]), "n": found, "n_even_gap": even}
    if missing:
        witness["unresolved"] = missing
        return Verdict(
            Status.INCONCLUSIVE, "em", search_depth, witness, f"no full level found for i in {missing}"
        )
    return Verdict(Status.HOLDS, "em", search_depth, witness)


def minimality_check(
    diagram: HDiagram,
    i_max: int,
    search_depth: int,
    seq: PartitionSequence | None = None,
    orbit_bound: int = 4,
    point_bound: int = 4,
    conn: Connectivity | None = None,
) -> Verdict:
    """Every vertex at levels <= i_max must be reached from a whole level <= search_depth.

    With ``seq`` given, a vertex with no full level is handed to
    ``refute_minimality``; a certificate from it turns the verdict into Fails.
    """
    if i_max > search_depth:
        raise ValueError("i_max must not exceed search_depth")
    if search_depth > diagram.depth:
        raise DiagramError(f"search depth {search_depth} exceeds the built depth {diagram.depth}")
    conn = conn or Connectivity(diagram)
    table: dict[str, int] = {}
    missing: list[VertexRef] = []
    for level in range(i_max + 1):
        for v in diagram.vertices(level):
            n = conn.first_full_level(v, search_depth)
            if n is None:
                missing.append(v)
            else:
                table[f"{v.level}:{diagram.label(v)}"] = n
    if not missing:
        return Verdict(Status.HOLDS, "minimal", search_depth, {"n": table})
    if seq is not None:
        for v in missing:
            certificate = refute_minimality(seq, v, orbit_bound, point_bound)
            if certificate is not None:
                mask = conn.descendants(v, search_depth)
                certificate["unconnected"] = [search_depth, mask.find(0)]
                return Verdict(
                    Status.FAILS,
                    "minimal",
                    search_depth,
                    certificate,
                    f"{diagram.label(v)}: {certificate['kind']}",
                )
    return Verdict(
        Status.INCONCLUSIVE,
        "minimal",
        search_depth,
        {"n": table, "unresolved": [[v.level, v.index] for v in missing]},
        f"{len(missing)} vertices never reached from a whole level",
    )


def refute_minimality(
    seq: PartitionSequence, v: VertexRef, orbit_bound: int = 4, point_bound: int = 4
) -> dict | None:
    """A finite certificate that some orbit never enters ``block(v)``, or None.

    Tries, in order: the orbit unions ``U_i`` (``|j| <= i``) becoming a proper
    invariant clopen set for some ``i < orbit_bound``; a periodic point from the
    space's candidates whose whole orbit avoids the block. Either one is a
    closed invariant set missing a nonempty open set.
    """
    h, z = seq.h, block(seq, v)
    whole = seq.space.whole()
    unions = [orbit_union(seq, z, i) for i in range(orbit_bound + 1)]
    for i in range(orbit_bound):
        u = unions[i]
        if u == unions[i + 1] and u != whole and h.image(u, 1) == u:
            return {
                "kind": "proper invariant clopen set",
                "vertex": [v.level, v.index],
                "block": z.label(),
                "invariant_set": u.label(),
                "stable_from": i,
            }
    for p in seq.space.candidate_points(point_bound):
        orbit = _periodic_orbit(h, p, limit=2**point_bound)
        if orbit is None or any(z.contains_point(q) for q in orbit):
            continue
        escapes = [i for i, u in enumerate(unions) if not u.contains_point(p)]
        if len(escapes) != len(unions):
            continue
        return {
            "kind": "periodic orbit avoiding the block",
            "vertex": [v.level, v.index],
            "block": z.label(),
            "point": str(p),
            "period": len(orbit),
            "escapes": escapes,
        }
    return None


def _periodic_orbit(h, p, limit: int) -> list | None:
    orbit = [p]
    q = h.apply(p, 1)
    while q != p:
        if len(orbit) >= limit:
            return None
        orbit.append(q)
        q = h.apply(q, 1)
    return orbit


def straight_paths(diagram: HDiagram, depth: int | None = None) -> list[BluePathPrefix]:
    """Blue paths down to level ``depth - 1`` whose red edges run alongside the blue ones.

    A chain counts only if its bottom vertex has a child at ``depth`` with
    equal blue and red parents; this pins the symbols at the window edge.
    """
    depth = diagram.depth if depth is None else depth
    if not 1 <= depth <= diagram.depth:
        raise DiagramError(f"depth {depth} outside 1..{diagram.depth}")
    mask = bytearray(b"\x01" * diagram.size(0))
    for n in range(depth):
        lv = diagram.level(n)
        mask = kernels.straight_step(mask, lv.blue_parent, lv.red_parent)
    blue = diagram.level(depth - 1).blue_parent
    bottoms = sorted({blue[w] for w, bit in enumerate(mask) if bit})
    return [BluePathPrefix.from_bottom(diagram, VertexRef(depth - 1, b)) for b in bottoms]


def fixed_points_on(seq: PartitionSequence, path: BluePathPrefix, point_bound: int = 4) -> list:
    """Candidate points fixed by h lying in every block of the path."""
    blocks = [block(seq, v) for v in path.vertices()]
    return [
        p
        for p in seq.space.candidate_points(point_bound)
        if seq.h.apply(p, 1) == p and all(b.contains_point(p) for b in blocks)
    ]


@dataclass
class OracleReport:
    system: str
    pairs: int = 0
    mismatches: list[tuple] = field(default_factory=list)
    w_checks: int = 0
    w_mismatches: list[tuple] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.w_mismatches


def compare_connectivity(
    diagram: HDiagram, seq: PartitionSequence, max_half_gap: int = 3, max_level: int = 7,
    conn: Connectivity | None = None, report: OracleReport | None = None,
) -> OracleReport:
    """Graph connectivity against both semantic forms, for every pair with an even gap.

    Per upper vertex ``v`` and half-gap i, the set of lower blocks reaching
    ``v`` must equal the blocks inside some ``h^j(v)`` and also the blocks
    meeting some ``h^j(v)``, ``|j| <= i``.
    """
    conn = conn or Connectivity(diagram)
    report = report or OracleReport(seq.name)
    top_level = min(max_level, diagram.depth)
    for level in range(top_level + 1):
        for v in diagram.vertices(level):
            z = block(seq, v)
            for i in range(max_half_gap + 1):
                target = level + 2 * i
                if target > top_level:
                    break
                lower = seq.partition(target)
                graph = {k for k, bit in enumerate(conn.descendants(v, target)) if bit}
                inside: set[int] = set()
                meeting: set[int] = set()
                for j in _powers(i):
                    image = seq.h.image(z, j)
                    meeting.update(lower.blocks_meeting(image))
                    inside.update(lower.blocks_within(image))
                report.pairs += len(lower)
                if graph != inside or graph != meeting:
                    report.mismatches.append((v, target, sorted(graph ^ inside), sorted(graph ^ meeting)))
    return report


def compare_w_sets(
    diagram: HDiagram, seq: PartitionSequence, max_m: int = 3, max_i: int = 2,
    conn: Connectivity | None = None, report: OracleReport | None = None,
) -> OracleReport:
    conn = conn or Connectivity(diagram)
    report = report or OracleReport(seq.name)
    for m in range(max_m + 1):
        for v in diagram.vertices(m):
            for i in range(max_i + 1):
                if m + 2 * i > diagram.depth:
                    break
                graph_union, semantic_union = w_set(diagram, seq, v, i, conn)
                report.w_checks += 1
                if graph_union != semantic_union:
                    report.w_mismatches.append((v, i, graph_union.label(), semantic_union.label()))
    return report


def oracle_compare(seq: PartitionSequence, diagram: HDiagram, **bounds) -> OracleReport:
    """Both equivalence suites on one diagram (needs depth >= 7 for the full default bounds)."""
    conn = Connectivity(diagram)
    report = compare_connectivity(
        diagram, seq, bounds.get("max_half_gap", 3), bounds.get("max_level", 7), conn
    )
    return compare_w_sets(diagram, seq, bounds.get("max_m", 3), bounds.get("max_i", 2), conn, report)


def parse_path(diagram: HDiagram, spec: str | Sequence[int], levels: int) -> BluePathPrefix:
    """``"straight"``, or comma-separated vertex indices per level starting at level 0."""
    if isinstance(spec, str):
        if spec.strip() == "straight":
            paths = straight_paths(diagram, levels + 1)
            if not paths:
                raise DiagramError("no straight path in this diagram")
            return BluePathPrefix(paths[0].indices[: levels + 1])
        spec = [int(s) for s in spec.split(",") if s.strip()]
    path = BluePathPrefix(tuple(spec))
    path.check(diagram)
    return path
