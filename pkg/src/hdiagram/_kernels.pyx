# cython: language_level=3, boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled level-sweep kernels. Same contracts as ``_kernels_py``.

Parent values are trusted to be in range: ``DiagramLevel`` checks that on
construction, so bounds checks are off here.
"""

from array import array


def compose(const long long[:] first, const long long[:] second):
    cdef Py_ssize_t n = first.shape[0]
    cdef Py_ssize_t i
    out = array("q", bytes(8 * n))
    cdef long long[:] o = out
    for i in range(n):
        o[i] = second[first[i]]
    return out


def push_down(const unsigned char[:] upper, const long long[:] blue, const long long[:] red):
    cdef Py_ssize_t n = blue.shape[0]
    cdef Py_ssize_t i
    out = bytearray(n)
    cdef unsigned char[:] o = out
    for i in range(n):
        o[i] = upper[blue[i]] | upper[red[i]]
    return out


def push_up(const unsigned char[:] lower, const long long[:] blue, const long long[:] red,
            Py_ssize_t upper_size):
    cdef Py_ssize_t n = blue.shape[0]
    cdef Py_ssize_t i
    out = bytearray(upper_size)
    cdef unsigned char[:] o = out
    for i in range(n):
        if lower[i]:
            o[blue[i]] = 1
            o[red[i]] = 1
    return out


def straight_step(const unsigned char[:] upper, const long long[:] blue, const long long[:] red):
    cdef Py_ssize_t n = blue.shape[0]
    cdef Py_ssize_t i
    out = bytearray(n)
    cdef unsigned char[:] o = out
    for i in range(n):
        if blue[i] == red[i] and upper[blue[i]]:
            o[i] = 1
    return out


def mismatches(const long long[:] a, const long long[:] b):
    cdef Py_ssize_t n = min(a.shape[0], b.shape[0])
    cdef Py_ssize_t i
    out = array("q")
    for i in range(n):
        if a[i] != b[i]:
            out.append(i)
    return out


def missing_target(const long long[:] parent, Py_ssize_t upper_size):
    cdef Py_ssize_t n = parent.shape[0]
    cdef Py_ssize_t i
    hit = bytearray(upper_size)
    cdef unsigned char[:] h = hit
    for i in range(n):
        h[parent[i]] = 1
    return hit.find(0)
