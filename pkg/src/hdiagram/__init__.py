"""Separated Bratteli diagrams (h-diagrams) of Cantor-type dynamical systems.

Build a diagram from one of the canonical partition sequences and query it::

    from hdiagram import build_diagram, canonical_sequence, global_periodicity

    diagram = build_diagram(canonical_sequence("bitwise-not"), 6)
    global_periodicity(diagram, 2).status   # Status.HOLDS
"""

from .analysis import (
    BluePathPrefix,
    Connectivity,
    Status,
    Verdict,
    connected,
    em_check,
    fixed_points_on,
    global_periodicity,
    minimality_check,
    oracle_compare,
    refute_minimality,
    semantic_connected,
    straight_paths,
    w_set,
)
from .clopen import (
    INTEGERS,
    ONE_SIDED,
    TWO_SIDED,
    BitwiseNot,
    IntegerAdd,
    IntegerSet,
    Odometer,
    OneSidedSet,
    Shift,
    TwoSidedSet,
    contains,
    diameter,
    image,
    intersect,
    is_empty,
    union,
)
from .construction import (
    Partition,
    PartitionSequence,
    build_diagram,
    canonical_sequence,
    h_refine_step,
    system_names,
    wedge,
)
from .diagram import (
    BLUE,
    RED,
    Color,
    ColoredPath,
    DiagramLevel,
    HDiagram,
    VertexRef,
    ancestor,
    counts,
    reachable_uppers,
    validate,
)
from .io import DiagramDocument, to_dot
from .kernels import BACKEND

__version__ = "0.1.0"
