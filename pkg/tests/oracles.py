"""Independent oracles: closed-form routing tables and brute-force enumerations.

Nothing here calls the containment search used by the library; the routing
rules are written out per system from the block shapes.
"""

from itertools import product

from hdiagram.diagram import BLUE, RED, ancestor


def words(n):
    return ["".join(p) for p in product("01", repeat=n)]


def flip(word):
    return word.translate(str.maketrans("01", "10"))


# -- canonical levels as plain words ---------------------------------------


def two_sided_level(n):
    """Level n of the shift / NOT sequence: words of length 2n-1, index = binary value."""
    return [""] if n == 0 else words(2 * n - 1)


def one_sided_level(n):
    return [""] if n == 0 else words(n)


def zstar_level(n):
    """Level n of the Z* sequence as ('pt', j) singletons then ('V', n-1)."""
    if n == 0:
        return [("X",)]
    return [("pt", j) for j in range(-(n - 1), n)] + [("V", n - 1)]


# -- routing rules, lower level k+1 -> upper level k ------------------------


def shift_routes(k):
    lower = two_sided_level(k + 1)
    upper = {w: i for i, w in enumerate(two_sided_level(k))}
    if k == 0:
        return [0] * len(lower), [0] * len(lower)
    blue = [upper[w[1:-1]] for w in lower]
    # even pair: drop the two rightmost symbols; odd pair: drop the two leftmost
    red = [upper[w[: 2 * k - 1]] if k % 2 == 0 else upper[w[2:]] for w in lower]
    return blue, red


def not_routes(k):
    lower = two_sided_level(k + 1)
    upper = {w: i for i, w in enumerate(two_sided_level(k))}
    if k == 0:
        return [0] * len(lower), [0] * len(lower)
    blue = [upper[w[1:-1]] for w in lower]
    red = [upper[flip(w[1:-1])] for w in lower]
    return blue, red


def _add_one(word):
    """Adding machine on a finite LSB-first word: leading 1s become 0, the first 0 becomes 1."""
    k = word.find("0")
    if k < 0:
        return "0" * len(word)
    return "0" * k + "1" + word[k + 1 :]


def _sub_one(word):
    k = word.find("1")
    if k < 0:
        return "1" * len(word)
    return "1" * k + "0" + word[k + 1 :]


def odometer_routes(k):
    lower = one_sided_level(k + 1)
    upper = {w: i for i, w in enumerate(one_sided_level(k))}
    if k == 0:
        return [0] * len(lower), [0] * len(lower)
    blue = [upper[w[:k]] for w in lower]
    # lower inside ad(Z) means ad^-1(lower) inside Z, and vice versa at odd pairs
    step = _sub_one if k % 2 == 0 else _add_one
    red = [upper[step(w)[:k]] for w in lower]
    return blue, red


def zstar_routes(k):
    lower = zstar_level(k + 1)
    upper = {b: i for i, b in enumerate(zstar_level(k))}
    if k == 0:
        return [0] * len(lower), [0] * len(lower)
    v_up = upper[("V", k - 1)]
    blue, red = [], []
    for b in lower:
        if b[0] == "pt" and abs(b[1]) <= k - 1:
            blue.append(upper[b])
        else:
            blue.append(v_up)
        if b[0] == "V":
            red.append(v_up)
            continue
        j = b[1]
        if k % 2 == 0:
            red.append(upper[("pt", j - 1)] if -k + 2 <= j <= k else v_up)
        else:
            red.append(upper[("pt", j + 1)] if -k <= j <= k - 2 else v_up)
    return blue, red


ROUTES = {
    "shift": shift_routes,
    "bitwise-not": not_routes,
    "odometer": odometer_routes,
    "zstar": zstar_routes,
}

LEVEL_SIZES = {
    "shift": lambda n: 1 if n == 0 else 2 ** (2 * n - 1),
    "bitwise-not": lambda n: 1 if n == 0 else 2 ** (2 * n - 1),
    "odometer": lambda n: 2**n,
    "zstar": lambda n: 1 if n == 0 else 2 * n,
}


# -- brute force ------------------------------------------------------------


def reachable_by_enumeration(diagram, w, target_level):
    """Replay every color sequence of the right length."""
    gap = w.level - target_level
    return {ancestor(diagram, w, cs) for cs in product((BLUE, RED), repeat=gap)}


def two_sided_members(z, radius):
    """Membership oracle: the words at ``radius`` whose points lie in ``z``."""
    r = z.size
    assert r <= radius
    d = radius - r
    return frozenset(u for u in words(2 * radius + 1) if u[d : len(u) - d] in z.words)


def one_sided_members(z, length):
    return frozenset(u for u in words(length) if u[: z.size] in z.words)
