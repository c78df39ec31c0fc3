"""Diagram documents (canonical JSON) and Graphviz export.

A document is a JSON object written with a fixed key order and one compact
line per level, so printing a parsed document reproduces it byte for byte::

    {"format":"hdiagram","version":1,"system":"shift","parity":"...",
     "levels":[
      {"labels":["X"]},
      {"labels":["[0]","[1]"],"blue":[0,0],"red":[0,0]}
     ]}

Level k >= 1 stores the parents (indices into level k-1) of its vertices.
The ``edges`` variant adds an explicit ``[lower, upper, color]`` list per level.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .diagram import (
    Color,
    PARITY_CONVENTION,
    DiagramError,
    DiagramLevel,
    HDiagram,
    validate,
)

FORMAT = "hdiagram"
VERSION = 1


class DocumentError(ValueError):
    pass


def _compact(value) -> str:
    return json.dumps(value, separators=(",", ":"), ensure_ascii=False)


@dataclass(frozen=True)
class DiagramDocument:
    system: str
    diagram: HDiagram

    def to_levels(self, edges: bool = False) -> list[dict]:
        d = self.diagram
        out = [{"labels": list(d.labels[0])}]
        for n, lv in enumerate(d.levels):
            entry = {"labels": list(d.labels[n + 1]), "blue": lv.blue_parent.tolist(), "red": lv.red_parent.tolist()}
            if edges:
                entry["edges"] = [
                    [w, parent[w], color]
                    for w in range(lv.lower_size)
                    for color, parent in (("blue", lv.blue_parent), ("red", lv.red_parent))
                ]
            out.append(entry)
        return out

    def dumps(self, edges: bool = False) -> str:
        head = [
            f'"format":{_compact(FORMAT)}',
            f'"version":{VERSION}',
            f'"system":{_compact(self.system)}',
            f'"parity":{_compact(self.diagram.parity_convention)}',
        ]
        levels = ",\n".join(" " + _compact(level) for level in self.to_levels(edges))
        return "{" + ",".join(head) + ',\n"levels":[\n' + levels + "\n]}\n"

    @classmethod
    def loads(cls, text: str) -> "DiagramDocument":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DocumentError(f"not JSON: {exc}") from None
        if not isinstance(data, dict) or data.get("format") != FORMAT:
            raise DocumentError(f"not an {FORMAT} document")
        if data.get("version") != VERSION:
            raise DocumentError(f"unsupported version {data.get('version')!r}")
        system = data.get("system")
        parity = data.get("parity", PARITY_CONVENTION)
        levels = data.get("levels")
        if not isinstance(system, str) or not isinstance(parity, str):
            raise DocumentError("system and parity must be strings")
        if not isinstance(levels, list) or not levels:
            raise DocumentError("levels must be a nonempty list")
        try:
            diagram = HDiagram(_labels(levels[0], 0), parity)
            for k, entry in enumerate(levels[1:], start=1):
                labels = _labels(entry, k)
                blue, red = _ints(entry, "blue", k), _ints(entry, "red", k)
                level = DiagramLevel(diagram.size(k - 1), len(labels), blue, red)
                if "edges" in entry:
                    _check_edges(entry["edges"], level, k)
                diagram.seal_level(level, labels)
        except DiagramError as exc:
            raise DocumentError(str(exc)) from None
        structural = [v for v in validate(diagram) if v.kind != "rhombus incomplete"]
        if structural:
            raise DocumentError(f"invalid diagram: {structural[0]}")
        return cls(system, diagram)


def _labels(entry, k: int) -> list[str]:
    labels = entry.get("labels") if isinstance(entry, dict) else None
    if not isinstance(labels, list) or not labels or not all(isinstance(s, str) for s in labels):
        raise DocumentError(f"level {k}: labels must be a nonempty list of strings")
    return labels


def _ints(entry: dict, key: str, k: int) -> list[int]:
    values = entry.get(key)
    if not isinstance(values, list) or not all(type(x) is int for x in values):
        raise DocumentError(f"level {k}: {key} must be a list of integers")
    return values


def _check_edges(edges, level: DiagramLevel, k: int) -> None:
    expected = {(w, level.parent(Color(c))[w], c) for w in range(level.lower_size) for c in ("blue", "red")}
    try:
        given = {(int(w), int(v), str(c)) for w, v, c in edges}
    except (TypeError, ValueError):
        raise DocumentError(f"level {k}: malformed edge list") from None
    if given != expected or len(edges) != len(expected):
        raise DocumentError(f"level {k}: edge list disagrees with the parent arrays")


def _dot_id(level: int, index: int) -> str:
    return f"v{level}_{index}"


def _dot_quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(diagram: HDiagram, name: str = "hdiagram") -> str:
    """Levels as ranked rows, top level first; edges point upward from source to range."""
    lines = [
        f"digraph {_dot_quote(name)} {{",
        "  rankdir=BT;",
        "  node [shape=box, fontname=monospace];",
    ]
    for n, labels in enumerate(diagram.labels):
        ids = " ".join(f"{_dot_id(n, k)} [label={_dot_quote(s)}];" for k, s in enumerate(labels))
        lines.append(f"  {{ rank=same; {ids} }}")
    for n, lv in enumerate(diagram.levels):
        for w in range(lv.lower_size):
            src = _dot_id(n + 1, w)
            lines.append(f"  {src} -> {_dot_id(n, lv.blue_parent[w])} [color=blue, style=solid];")
            lines.append(f"  {src} -> {_dot_id(n, lv.red_parent[w])} [color=red, style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"
