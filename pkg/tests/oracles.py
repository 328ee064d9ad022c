"""Brute-force reference implementations, independent of the library code.

Elements are plain (i, j) tuples.  Multiplication rewrites the word
b^i a^j b^k a^l with the single rule ``ab -> 1``; everything else is
exhaustive search over finite boxes.
"""

from __future__ import annotations

import itertools


def word_mul(x, y):
    word = "b" * x[0] + "a" * x[1] + "b" * y[0] + "a" * y[1]
    while "ab" in word:
        word = word.replace("ab", "", 1)
    return (word.count("b"), word.count("a"))


def in_carrier(x, carrier):
    i, j = x
    return {"FULL": True, "CPLUS": i <= j, "CMINUS": i >= j, "OMEGA": i == 0}[carrier]


def pairs(carrier, bound):
    return [x for x in itertools.product(range(bound + 1), repeat=2) if in_carrier(x, carrier)]


def right_div(v, w, carrier, bound):
    return {u for u in pairs(carrier, bound) if word_mul(v, u) == w}


def left_div(v, w, carrier, bound):
    return {u for u in pairs(carrier, bound) if word_mul(u, v) == w}


def green(rel, u, v, carrier, bound):
    """Green's relations via principal ideals truncated to witnesses in the box."""
    box = pairs(carrier, bound)

    def r(x, y):
        return any(word_mul(x, s) == y for s in box) and any(word_mul(y, s) == x for s in box)

    def l(x, y):
        return any(word_mul(s, x) == y for s in box) and any(word_mul(s, y) == x for s in box)

    def j(x, y):
        def reach(a, b):
            return any(word_mul(word_mul(s, a), t) == b for s in box for t in box)

        return reach(x, y) and reach(y, x)

    if rel == "R":
        return r(u, v)
    if rel == "L":
        return l(u, v)
    if rel == "H":
        return r(u, v) and l(u, v)
    if rel == "J":
        return j(u, v)
    return any(l(u, w) and r(w, v) for w in box)


# ---------------------------------------------------------------------------
# basic sets, as finite slices of their defining formulas


def basic_set(family, center, n, bound, p=None, carrier="FULL"):
    """Members with both exponents <= bound.  The zero of C+ is the string "0"."""
    out = {center}
    if family == "DISCRETE":
        return out
    if family == "DIAGONAL":
        i, j = center
        out |= {(i + l, j + l) for l in range(n + 1, bound + 1) if max(i + l, j + l) <= bound}
    elif family == "COFINITE":
        out |= {x for x in pairs(carrier, bound) if max(x) > n}
    elif family == "ZERO_COMPACT":
        if center == "0":
            out |= {x for x in pairs("CPLUS", bound) if x[1] >= n}
    elif family in ("PADIC_PLUS", "PADIC_OMEGA"):
        i, j = center
        out |= {(i, j + p**n * t) for t in range(bound + 1) if j + p**n * t <= bound}
    elif family == "PADIC_MINUS":
        i, j = center
        out |= {(i + p**n * t, j) for t in range(bound + 1) if i + p**n * t <= bound}
    return out


def shift(side, s, x):
    if s == "0" or x == "0":
        return "0"
    return word_mul(s, x) if side == "left" else word_mul(x, s)


def least_params(family, side, s, x, n_max, bound, p=None, carrier="FULL"):
    """For each n, the least m with shift(W_m(x)) ∩ box ⊆ W_n(shift(x)).

    Membership of the image is tested on the box only, so callers must pick
    ``bound`` large enough for the answer to stabilise.
    """
    target = shift(side, s, x)
    out = []
    for n in range(n_max + 1):
        v = basic_set(family, target, n, bound * 3, p, carrier)
        for m in range(bound):
            w = basic_set(family, x, m, bound, p, carrier)
            if all(shift(side, s, u) in v for u in w):
                out.append((n, m))
                break
        else:
            out.append((n, None))
    return tuple(out)


def diagonal_least(x, y, n, reach):
    """Lexicographically least (a, b) with O_a(x) O_b(y) ⊆ O_n(xy), translates up to ``reach``."""
    xy = word_mul(x, y)

    def inside(z):
        d = z[0] - xy[0]
        return z == xy or (d == z[1] - xy[1] and d > n)

    for a in range(reach):
        for b in range(reach):
            ls = [0] + list(range(a + 1, reach))
            ms = [0] + list(range(b + 1, reach))
            if all(inside(word_mul((x[0] + l, x[1] + l), (y[0] + m, y[1] + m))) for l in ls for m in ms):
                return (a, b)
    return None
