"""Exact arithmetic in the bicyclic monoid C(a,b) and its submonoids C+ and C-.

Every element of C(a,b) has the normal form ``b^i a^j`` and is stored as the
exponent pair ``Elem(i, j)``.  C+ holds the pairs with ``i <= j``, C- those
with ``i >= j``.  The additive monoid of non-negative integers is embedded as
the pairs ``(0, s)`` and C+ with an adjoined zero uses the ``ZERO`` sentinel.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union


class Carrier(enum.Enum):
    FULL = "FULL"
    CPLUS = "CPLUS"
    CMINUS = "CMINUS"
    OMEGA = "OMEGA"
    S_ZERO = "S_ZERO"


class GreenRelation(enum.Enum):
    R = "R"
    L = "L"
    J = "J"
    D = "D"
    H = "H"


@dataclass(frozen=True, order=True, slots=True)
class Elem:
    """The element ``b^i a^j``."""

    i: int
    j: int

    def __post_init__(self) -> None:
        if type(self.i) is not int or type(self.j) is not int:
            raise TypeError(f"exponents must be ints, got ({self.i!r}, {self.j!r})")
        if self.i < 0 or self.j < 0:
            raise ValueError(f"exponents must be non-negative, got ({self.i}, {self.j})")

    def __mul__(self, other: Elem) -> Elem:
        if not isinstance(other, Elem):
            return NotImplemented
        return mul(self, other)

    def __str__(self) -> str:
        return format_elem(self)

    @property
    def cidx(self) -> int:
        """Smallest n with this element inside the box {i, j <= n}."""
        return max(self.i, self.j)


class _Zero:
    """The zero adjoined to C+; absorbing for ``mul_ext``."""

    __slots__ = ()
    _instance: _Zero | None = None

    def __new__(cls) -> _Zero:
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "ZERO"

    def __str__(self) -> str:
        return "0"

    def __reduce__(self):
        return (_Zero, ())


ZERO = _Zero()
ExtElem = Union[Elem, _Zero]

ONE = Elem(0, 0)


def ext_key(x: ExtElem) -> tuple[int, int, int]:
    """Sort key putting ZERO before every element, elements componentwise."""
    if x is ZERO:
        return (0, 0, 0)
    return (1, x.i, x.j)


# ---------------------------------------------------------------------------
# multiplication and membership


def mul(x: Elem, y: Elem) -> Elem:
    if x.j < y.i:
        return Elem(x.i - x.j + y.i, y.j)
    if x.j == y.i:
        return Elem(x.i, y.j)
    return Elem(x.i, x.j - y.i + y.j)


def in_carrier(x: Elem, c: Carrier) -> bool:
    if c is Carrier.FULL:
        return True
    if c is Carrier.CPLUS:
        return x.i <= x.j
    if c is Carrier.CMINUS:
        return x.i >= x.j
    raise ValueError(f"in_carrier is defined on FULL, CPLUS, CMINUS only, not {c.name}")


def contains(c: Carrier, x: ExtElem) -> bool:
    """Membership for every carrier, including OMEGA and S_ZERO."""
    if c is Carrier.S_ZERO:
        return x is ZERO or (isinstance(x, Elem) and x.i <= x.j)
    if not isinstance(x, Elem):
        return False
    if c is Carrier.OMEGA:
        return x.i == 0
    return in_carrier(x, c)


def mul_closed(x: Elem, y: Elem, c: Carrier) -> Elem:
    """Product of two members of ``c``; the result is asserted to stay in ``c``."""
    if not (in_carrier(x, c) and in_carrier(y, c)):
        raise ValueError(f"{x} and {y} must both lie in {c.name}")
    z = mul(x, y)
    assert in_carrier(z, c), f"{x} * {y} = {z} left {c.name}"
    return z


def mul_ext(x: ExtElem, y: ExtElem) -> ExtElem:
    """Multiplication in C+ with an adjoined zero."""
    for e in (x, y):
        if not contains(Carrier.S_ZERO, e):
            raise ValueError(f"{e!r} is not an element of C+ with zero")
    if x is ZERO or y is ZERO:
        return ZERO
    return mul_closed(x, y, Carrier.CPLUS)


def flip(x: Elem) -> Elem:
    """The anti-isomorphism b^i a^j -> b^j a^i (swaps C+ and C-)."""
    return Elem(x.j, x.i)


def row_embed(k: int, s: int) -> Elem:
    """Isomorphism of (omega, +) onto the row {b^k a^(k+s)}."""
    return Elem(k, k + s)


def row_index(k: int, x: Elem) -> int:
    if x.i != k or x.j < k:
        raise ValueError(f"{x} is not in row {k}")
    return x.j - k


def box(c: Carrier, bound: int) -> list[ExtElem]:
    """Members of ``c`` with both exponents at most ``bound``, in sorted order."""
    if bound < 0:
        return [ZERO] if c is Carrier.S_ZERO else []
    if c is Carrier.OMEGA:
        return [Elem(0, s) for s in range(bound + 1)]
    if c is Carrier.S_ZERO:
        return [ZERO] + box(Carrier.CPLUS, bound)
    return [Elem(i, j) for i in range(bound + 1) for j in range(bound + 1) if in_carrier(Elem(i, j), c)]


# ---------------------------------------------------------------------------
# division


def _check_div_args(v: Elem, c: Carrier) -> None:
    if c not in (Carrier.FULL, Carrier.CPLUS, Carrier.CMINUS):
        raise ValueError(f"division is defined on FULL, CPLUS, CMINUS only, not {c.name}")
    if not in_carrier(v, c):
        raise ValueError(f"divisor {v} is not in {c.name}")


def solve_right_div(v: Elem, w: Elem, c: Carrier = Carrier.FULL) -> frozenset[Elem]:
    """All u in ``c`` with v * u == w.

    A target outside ``c`` simply has no solutions in ``c``.
    """
    _check_div_args(v, c)
    out = []
    if w.i > v.i:
        # v.j < u.i
        out.append(Elem(w.i - v.i + v.j, w.j))
    elif w.i == v.i:
        # v.j == u.i
        out.append(Elem(v.j, w.j))
        # v.j > u.i
        for ui in range(v.j):
            uj = w.j - v.j + ui
            if uj >= 0:
                out.append(Elem(ui, uj))
    return frozenset(u for u in out if in_carrier(u, c))


def solve_left_div(v: Elem, w: Elem, c: Carrier = Carrier.FULL) -> frozenset[Elem]:
    """All u in ``c`` with u * v == w."""
    _check_div_args(v, c)
    out = []
    if w.j > v.j:
        # u.j > v.i
        out.append(Elem(w.i, w.j - v.j + v.i))
    elif w.j == v.j:
        # u.j == v.i
        out.append(Elem(w.i, v.i))
        # u.j < v.i
        for uj in range(v.i):
            ui = w.i - v.i + uj
            if ui >= 0:
                out.append(Elem(ui, uj))
    return frozenset(u for u in out if in_carrier(u, c))


# ---------------------------------------------------------------------------
# Green's relations


@dataclass(frozen=True)
class Related:
    relation: GreenRelation
    witnesses: tuple[Elem, ...]
    exact: bool
    bound: int | None = None

    related = True


@dataclass(frozen=True)
class NotRelatedWithinBound:
    relation: GreenRelation
    exact: bool
    bound: int | None = None

    related = False


GreenVerdict = Union[Related, NotRelatedWithinBound]


@lru_cache(maxsize=None)
def _right_quotient(u: Elem, v: Elem, c: Carrier) -> Elem | None:
    """Smallest x in c with u * x == v, if any."""
    sols = solve_right_div(u, v, c)
    return min(sols) if sols else None


@lru_cache(maxsize=None)
def _left_quotient(u: Elem, v: Elem, c: Carrier) -> Elem | None:
    """Smallest x in c with x * u == v, if any."""
    sols = solve_left_div(u, v, c)
    return min(sols) if sols else None


def _r_pair(u: Elem, v: Elem, c: Carrier) -> tuple[Elem, Elem] | None:
    x = _right_quotient(u, v, c)
    y = _right_quotient(v, u, c)
    return (x, y) if x is not None and y is not None else None


def _l_pair(u: Elem, v: Elem, c: Carrier) -> tuple[Elem, Elem] | None:
    x = _left_quotient(u, v, c)
    y = _left_quotient(v, u, c)
    return (x, y) if x is not None and y is not None else None


def _two_sided(u: Elem, v: Elem, c: Carrier, bound: int) -> tuple[Elem, Elem] | None:
    """Smallest x with some y, both exponents <= bound, such that x * u * y == v."""
    for x in box(c, bound):
        y = _bounded_right_quotient(mul(x, u), v, c, bound)
        if y is not None:
            return (x, y)
    return None


@lru_cache(maxsize=None)
def _bounded_right_quotient(t: Elem, v: Elem, c: Carrier, bound: int) -> Elem | None:
    sols = [y for y in solve_right_div(t, v, c) if y.cidx <= bound]
    return min(sols) if sols else None


@lru_cache(maxsize=None)
def _class_in_box(rel: GreenRelation, u: Elem, c: Carrier, bound: int) -> tuple[Elem, ...]:
    pair = _l_pair if rel is GreenRelation.L else _r_pair
    return tuple(w for w in box(c, bound) if pair(u, w, c))


def green_related(rel: GreenRelation, u: Elem, v: Elem, c: Carrier, bound: int) -> GreenVerdict:
    """Decide ``u rel v`` in the monoid ``c``.

    R, L and H are decided exactly through the division solvers.  J and D
    search witnesses with exponents up to ``bound``; a negative answer only
    says nothing was found within that bound.
    """
    if c not in (Carrier.CPLUS, Carrier.CMINUS, Carrier.FULL):
        raise ValueError(f"Green's relations are computed on CPLUS, CMINUS or FULL, not {c.name}")
    if not (in_carrier(u, c) and in_carrier(v, c)):
        raise ValueError(f"{u} and {v} must both lie in {c.name}")

    if rel is GreenRelation.R:
        pair = _r_pair(u, v, c)
        return Related(rel, pair, True) if pair else NotRelatedWithinBound(rel, True)
    if rel is GreenRelation.L:
        pair = _l_pair(u, v, c)
        return Related(rel, pair, True) if pair else NotRelatedWithinBound(rel, True)
    if rel is GreenRelation.H:
        r, l = _r_pair(u, v, c), _l_pair(u, v, c)
        if r and l:
            return Related(rel, r + l, True)
        return NotRelatedWithinBound(rel, True)
    if rel is GreenRelation.J:
        there = _two_sided(u, v, c, bound)
        back = _two_sided(v, u, c, bound) if there else None
        if there and back:
            return Related(rel, there + back, False, bound)
        return NotRelatedWithinBound(rel, False, bound)

    # D as L∘R and as R∘L; the two must agree.
    lr = next((w for w in _class_in_box(GreenRelation.L, u, c, bound) if _r_pair(w, v, c)), None)
    rl = next((w for w in _class_in_box(GreenRelation.R, u, c, bound) if _l_pair(w, v, c)), None)
    if (lr is None) != (rl is None):
        raise AssertionError(f"L∘R and R∘L disagree on ({u}, {v}) within bound {bound}")
    if lr is not None:
        return Related(rel, (lr, rl), False, bound)
    return NotRelatedWithinBound(rel, False, bound)


def green_classes(
    rel: GreenRelation, c: Carrier, elem_bound: int, witness_bound: int
) -> list[tuple[Elem, ...]]:
    """Partition the box of ``c`` of size ``elem_bound`` into ``rel``-classes."""
    classes: list[list[Elem]] = []
    for x in box(c, elem_bound):
        for cls in classes:
            if green_related(rel, cls[0], x, c, witness_bound).related:
                cls.append(x)
                break
        else:
            classes.append([x])
    return [tuple(cls) for cls in classes]


# ---------------------------------------------------------------------------
# ideals of C+


def right_ideal(i: int, c: Carrier, trunc: int) -> frozenset[Elem]:
    """Truncation of the principal left ideal C+ * b^i a^i = {b^s a^t in C+ : t >= i}."""
    if c is not Carrier.CPLUS:
        raise ValueError("right_ideal is defined on CPLUS only")
    return frozenset(Elem(s, t) for t in range(i, trunc + 1) for s in range(t + 1))


def finite_open_nbhd(x: Elem) -> frozenset[Elem]:
    """The finite set {b^s a^t in C+ : t <= x.j}, the complement of C+ * b^(j+1) a^(j+1)."""
    if not in_carrier(x, Carrier.CPLUS):
        raise ValueError(f"{x} is not in CPLUS")
    return frozenset(Elem(s, t) for t in range(x.j + 1) for s in range(t + 1))


# ---------------------------------------------------------------------------
# text and JSON forms


def format_elem(x: ExtElem) -> str:
    if x is ZERO:
        return "0"
    parts = []
    for letter, e in (("b", x.i), ("a", x.j)):
        if e == 1:
            parts.append(letter)
        elif e > 1:
            parts.append(f"{letter}^{e}")
    return " ".join(parts) or "1"


_ELEM_RE = re.compile(r"^\s*(?:b(?:\s*\^\s*(\d+))?)?\s*(?:a(?:\s*\^\s*(\d+))?)?\s*$")


def parse_elem(text: str) -> ExtElem:
    """Inverse of ``format_elem``; also accepts explicit exponents such as ``b^1 a^0``."""
    t = text.strip()
    if t == "0":
        return ZERO
    if t == "1":
        return ONE
    m = _ELEM_RE.match(t)
    if not t or m is None:
        raise ValueError(f"not an element literal: {text!r}")
    has_b = "b" in t
    has_a = "a" in t
    i = int(m.group(1)) if m.group(1) is not None else int(has_b)
    j = int(m.group(2)) if m.group(2) is not None else int(has_a)
    return Elem(i, j)


def to_json(x: ExtElem) -> list[int] | str:
    return "0" if x is ZERO else [x.i, x.j]


def from_json(obj) -> ExtElem:
    if obj == "0":
        return ZERO
    if isinstance(obj, (list, tuple)) and len(obj) == 2:
        return Elem(int(obj[0]), int(obj[1]))
    raise ValueError(f"not a serialized element: {obj!r}")


def sorted_elems(xs: Iterable[ExtElem]) -> list[ExtElem]:
    return sorted(xs, key=ext_key)
