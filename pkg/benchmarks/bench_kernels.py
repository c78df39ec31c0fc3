"""Time the compiled kernels against the pure-Python fallback on real diagram levels.

Usage: python benchmarks/bench_kernels.py [--system shift] [--depth 8] [--repeat 5]
"""

import argparse
import timeit

from hdiagram import _kernels_py
from hdiagram.construction import build_diagram, canonical_sequence

try:
    from hdiagram import _kernels
except ImportError:
    _kernels = None


def workloads(diagram):
    bottom = diagram.depth
    top = diagram.level(bottom - 1)
    mid = diagram.level(bottom - 2)
    full = bytearray([1]) * top.upper_size
    lower = bytearray([1]) * top.lower_size
    bb = _kernels_py.compose(top.blue_parent, mid.blue_parent)
    rr = _kernels_py.compose(top.red_parent, mid.red_parent)
    return {
        "compose": lambda k: k.compose(top.blue_parent, mid.blue_parent),
        "push_down": lambda k: k.push_down(full, top.blue_parent, top.red_parent),
        "push_up": lambda k: k.push_up(lower, top.blue_parent, top.red_parent, top.upper_size),
        "straight_step": lambda k: k.straight_step(full, top.blue_parent, top.red_parent),
        "mismatches": lambda k: k.mismatches(bb, rr),
        "missing_target": lambda k: k.missing_target(top.red_parent, top.upper_size),
    }


def best(fn, repeat, number):
    return min(timeit.repeat(fn, repeat=repeat, number=number)) / number


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--system", default="shift")
    parser.add_argument("--depth", type=int, default=8)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=3)
    args = parser.parse_args(argv)

    diagram = build_diagram(canonical_sequence(args.system), args.depth)
    print(f"{args.system} depth {args.depth}: {diagram.size(args.depth)} bottom vertices")
    if _kernels is None:
        print("compiled kernels not built; only the Python timings are shown")
    print(f"{'kernel':<16}{'python ms':>12}{'cython ms':>12}{'speedup':>10}")
    for name, call in workloads(diagram).items():
        py = best(lambda: call(_kernels_py), args.repeat, args.number)
        if _kernels is None:
            print(f"{name:<16}{py * 1e3:>12.3f}{'-':>12}{'-':>10}")
            continue
        fast, slow = call(_kernels), call(_kernels_py)
        assert (fast == slow if isinstance(slow, int) else list(fast) == list(slow)), name
        cy = best(lambda: call(_kernels), args.repeat, args.number)
        print(f"{name:<16}{py * 1e3:>12.3f}{cy * 1e3:>12.3f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
