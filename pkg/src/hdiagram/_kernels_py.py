"""Pure-Python implementations of the level-sweep kernels.

Parent maps are int buffers (``array('q')`` or read-only memoryviews of one),
vertex sets are ``bytearray`` masks with one byte per vertex.
"""

from array import array


def compose(first, second):
    """``out[w] = second[first[w]]``: follow ``first`` one level up, then ``second``."""
    return array("q", [second[i] for i in first])


def push_down(upper, blue, red):
    """Mask of lower vertices having a blue or red parent inside ``upper``."""
    return bytearray([upper[b] | upper[r] for b, r in zip(blue, red)])


def push_up(lower, blue, red, upper_size):
    """Mask of upper vertices that are a parent of some vertex in ``lower``."""
    out = bytearray(upper_size)
    for w, bit in enumerate(lower):
        if bit:
            out[blue[w]] = 1
            out[red[w]] = 1
    return out


def straight_step(upper, blue, red):
    """Lower vertices whose blue and red parents coincide and lie in ``upper``."""
    return bytearray([1 if (b == r and upper[b]) else 0 for b, r in zip(blue, red)])


def mismatches(a, b):
    """Indices where the two maps disagree."""
    return array("q", [i for i, (x, y) in enumerate(zip(a, b)) if x != y])


def missing_target(parent, upper_size):
    """First upper index not hit by ``parent``, or -1 when surjective."""
    hit = bytearray(upper_size)
    for p in parent:
        hit[p] = 1
    return hit.find(0)
