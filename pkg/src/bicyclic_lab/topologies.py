"""Neighbourhood-base topologies on C(a,b), C+, C-, omega and C+ with zero.

A topology is represented only through its basic open sets.  A basic set is
a triple (family, center, n) and every family gives decidable membership,
canonical enumeration and cofiniteness.  Families:

DISCRETE       singletons
DIAGONAL       {x} ∪ {b^(i+l) a^(j+l) : l > n}
COFINITE       {x} ∪ (carrier minus the box C_n = {i, j <= n})
ZERO_COMPACT   on C+ with zero: {0} ∪ {b^i a^j : j >= n} at zero, singletons elsewhere
PADIC_OMEGA    {s + p^n t : t >= 0} on omega, encoded as (0, s)
PADIC_PLUS     {b^k a^(k+s+p^n t) : t >= 0} on C+ (row k fixed)
PADIC_MINUS    the image of PADIC_PLUS under ``flip`` (column fixed)
"""

from __future__ import annotations

import enum
import itertools
import math
from dataclasses import dataclass
from typing import Iterator, Union

from .core import (
    ZERO,
    Carrier,
    Elem,
    ExtElem,
    box,
    contains,
    ext_key,
    flip,
    from_json,
    to_json,
)


class Family(enum.Enum):
    DISCRETE = "DISCRETE"
    DIAGONAL = "DIAGONAL"
    COFINITE = "COFINITE"
    ZERO_COMPACT = "ZERO_COMPACT"
    PADIC_OMEGA = "PADIC_OMEGA"
    PADIC_PLUS = "PADIC_PLUS"
    PADIC_MINUS = "PADIC_MINUS"


PADIC = frozenset({Family.PADIC_OMEGA, Family.PADIC_PLUS, Family.PADIC_MINUS})

_CARRIERS = {
    Family.DISCRETE: frozenset(Carrier),
    Family.DIAGONAL: frozenset({Carrier.FULL, Carrier.CPLUS}),
    Family.COFINITE: frozenset({Carrier.FULL, Carrier.CPLUS}),
    Family.ZERO_COMPACT: frozenset({Carrier.S_ZERO}),
    Family.PADIC_OMEGA: frozenset({Carrier.OMEGA}),
    Family.PADIC_PLUS: frozenset({Carrier.CPLUS}),
    Family.PADIC_MINUS: frozenset({Carrier.CMINUS}),
}

_DEFAULT_CARRIER = {
    Family.DISCRETE: Carrier.CPLUS,
    Family.DIAGONAL: Carrier.FULL,
    Family.COFINITE: Carrier.FULL,
    Family.ZERO_COMPACT: Carrier.S_ZERO,
    Family.PADIC_OMEGA: Carrier.OMEGA,
    Family.PADIC_PLUS: Carrier.CPLUS,
    Family.PADIC_MINUS: Carrier.CMINUS,
}


class CarrierMismatch(ValueError):
    pass


class Undecided(Exception):
    """No closed form and no witness for a subset or disjointness question."""

    def __init__(self, first: FamilyId, second: FamilyId):
        super().__init__(f"undecided: {first.family.name} vs {second.family.name}")
        self.pair = (first, second)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


@dataclass(frozen=True)
class FamilyId:
    family: Family
    p: int | None = None
    carrier: Carrier | None = None

    def __post_init__(self) -> None:
        if self.family in PADIC:
            if self.p is None or not is_prime(self.p):
                raise ValueError(f"{self.family.name} needs a prime p, got {self.p!r}")
        elif self.p is not None:
            raise ValueError(f"{self.family.name} takes no prime")
        if self.carrier is None:
            object.__setattr__(self, "carrier", _DEFAULT_CARRIER[self.family])
        if self.carrier not in _CARRIERS[self.family]:
            raise ValueError(f"{self.family.name} does not live on {self.carrier.name}")

    def __str__(self) -> str:
        extra = f", p={self.p}" if self.p is not None else ""
        return f"{self.family.name}({self.carrier.name}{extra})"

    def to_json(self) -> dict:
        d: dict = {"family": self.family.name}
        if self.p is not None:
            d["p"] = self.p
        d["carrier"] = self.carrier.name
        return d


@dataclass(frozen=True)
class BasicNbhd:
    family: FamilyId
    center: ExtElem
    n: int

    def __post_init__(self) -> None:
        if type(self.n) is not int or self.n < 0:
            raise ValueError(f"parameter must be a natural number, got {self.n!r}")
        if not contains(self.family.carrier, self.center):
            raise CarrierMismatch(f"center {self.center!r} is not in {self.family.carrier.name}")

    @property
    def modulus(self) -> int:
        return self.family.p**self.n

    def at(self, n: int) -> BasicNbhd:
        return BasicNbhd(self.family, self.center, n)

    def to_json(self) -> dict:
        d = self.family.to_json()
        d["center"] = to_json(self.center)
        d["n"] = self.n
        return d


def basic_from_json(obj: dict) -> BasicNbhd:
    fam = FamilyId(Family[obj["family"]], obj.get("p"), Carrier[obj["carrier"]])
    return BasicNbhd(fam, from_json(obj["center"]), int(obj["n"]))


# ---------------------------------------------------------------------------
# membership and enumeration


def _row_member(c: Elem, x: Elem, q: int) -> bool:
    return x.i == c.i and x.j >= c.j and (x.j - c.j) % q == 0


def nbhd_member(b: BasicNbhd, x: ExtElem) -> bool:
    fam = b.family
    if not contains(fam.carrier, x):
        raise CarrierMismatch(f"{x!r} is not in {fam.carrier.name}")
    c = b.center
    kind = fam.family
    if x == c:
        return True
    if kind is Family.DISCRETE:
        return False
    if kind is Family.DIAGONAL:
        return x.i - c.i == x.j - c.j > b.n
    if kind is Family.COFINITE:
        return x.i > b.n or x.j > b.n
    if kind is Family.ZERO_COMPACT:
        return c is ZERO and x.j >= b.n
    if kind in (Family.PADIC_OMEGA, Family.PADIC_PLUS):
        return _row_member(c, x, b.modulus)
    return _row_member(flip(c), flip(x), b.modulus)


def _shells(start: int) -> Iterator[Elem]:
    """All pairs outside the box C_(start-1), ordered by box index then componentwise."""
    for r in itertools.count(start):
        yield from sorted([Elem(i, r) for i in range(r)] + [Elem(r, j) for j in range(r + 1)])


def _iter_members(b: BasicNbhd) -> Iterator[ExtElem]:
    c = b.center
    kind = b.family.family
    yield c
    if kind is Family.DISCRETE or (kind is Family.ZERO_COMPACT and c is not ZERO):
        return
    if kind is Family.DIAGONAL:
        for l in itertools.count(b.n + 1):
            yield Elem(c.i + l, c.j + l)
    elif kind is Family.COFINITE:
        carrier = b.family.carrier
        for x in _shells(b.n + 1):
            if x != c and contains(carrier, x):
                yield x
    elif kind is Family.ZERO_COMPACT:
        for t in itertools.count(b.n):
            for s in range(t + 1):
                yield Elem(s, t)
    elif kind in (Family.PADIC_OMEGA, Family.PADIC_PLUS):
        q = b.modulus
        for t in itertools.count(1):
            yield Elem(c.i, c.j + q * t)
    else:
        q = b.modulus
        for t in itertools.count(1):
            yield Elem(c.i + q * t, c.j)


def nbhd_enumerate(b: BasicNbhd, count: int) -> list[ExtElem]:
    """The first ``count`` members in the family's canonical order.

    The center comes first.  Rays and progressions follow their defining
    parameter; COFINITE walks the shells max(i, j) = n+1, n+2, ... and
    ZERO_COMPACT walks a-exponents j = n, n+1, ...
    """
    return list(itertools.islice(_iter_members(b), count))


def finite_members(b: BasicNbhd) -> tuple[ExtElem, ...] | None:
    kind = b.family.family
    if kind is Family.DISCRETE or (kind is Family.ZERO_COMPACT and b.center is not ZERO):
        return (b.center,)
    return None


# ---------------------------------------------------------------------------
# cofiniteness


@dataclass(frozen=True)
class Cofinite:
    complement: frozenset

    def to_json(self) -> dict:
        return {
            "verdict": "Cofinite",
            "complement": [to_json(x) for x in sorted(self.complement, key=ext_key)],
        }


@dataclass(frozen=True)
class NotCofinite:
    missing: str

    def to_json(self) -> dict:
        return {"verdict": "NotCofinite", "missing": self.missing}


def nbhd_is_cofinite(b: BasicNbhd) -> Cofinite | NotCofinite:
    kind = b.family.family
    c = b.center
    carrier = b.family.carrier
    if kind is Family.COFINITE:
        return Cofinite(frozenset(x for x in box(carrier, b.n) if x != c))
    if kind is Family.ZERO_COMPACT:
        if c is ZERO:
            return Cofinite(frozenset(Elem(s, t) for t in range(b.n) for s in range(t + 1)))
        return NotCofinite("every point except the center")
    if kind is Family.PADIC_OMEGA:
        if b.n == 0:
            return Cofinite(frozenset(Elem(0, t) for t in range(c.j)))
        return NotCofinite(f"{{(0, {c.j} + 1 + {b.modulus}t) : t >= 0}}")
    if kind is Family.PADIC_PLUS:
        return NotCofinite(f"every row other than b-exponent {c.i}")
    if kind is Family.PADIC_MINUS:
        return NotCofinite(f"every column other than a-exponent {c.j}")
    if kind is Family.DIAGONAL:
        return NotCofinite(f"{{({c.i}, {c.j} + 1 + l) : l >= 0}}")
    return NotCofinite("every point except the center")


# ---------------------------------------------------------------------------
# inclusion


@dataclass(frozen=True)
class Subset:
    holds = True

    def to_json(self) -> dict:
        return {"verdict": "Subset"}


@dataclass(frozen=True)
class NotSubset:
    witness: ExtElem
    holds = False

    def to_json(self) -> dict:
        return {"verdict": "NotSubset", "witness": to_json(self.witness)}


SubsetVerdict = Union[Subset, NotSubset]


def _padic_oriented(b: BasicNbhd) -> Elem:
    return flip(b.center) if b.family.family is Family.PADIC_MINUS else b.center


def _padic_subset(inner: BasicNbhd, outer: BasicNbhd) -> SubsetVerdict:
    ci, co = _padic_oriented(inner), _padic_oriented(outer)
    qi, qo = inner.modulus, outer.modulus
    if not _row_member(co, ci, qo):
        return NotSubset(inner.center)
    if qi % qo:
        w = Elem(ci.i, ci.j + qi)
        return NotSubset(flip(w) if inner.family.family is Family.PADIC_MINUS else w)
    return Subset()


def _diagonal_subset(inner: BasicNbhd, outer: BasicNbhd) -> SubsetVerdict:
    c = inner.center
    if not nbhd_member(outer, c):
        return NotSubset(c)
    first = Elem(c.i + inner.n + 1, c.j + inner.n + 1)
    if not nbhd_member(outer, first):
        return NotSubset(first)
    # first ray point lies on outer's ray, so every later one does too
    return Subset()


def nbhd_subset(inner: BasicNbhd, outer: BasicNbhd, search_depth: int = 256) -> SubsetVerdict:
    """Decide ``inner ⊆ outer``.

    Finite inner sets and cofinite outer sets are decided by finite checks;
    same-family DIAGONAL and p-adic pairs by closed forms.  Any other pair
    needs a witness found among the first ``search_depth`` members of inner,
    otherwise ``Undecided`` is raised.
    """
    if inner.family.carrier is not outer.family.carrier:
        raise CarrierMismatch(f"{inner.family} and {outer.family} live on different carriers")
    fin = finite_members(inner)
    if fin is not None:
        for x in fin:
            if not nbhd_member(outer, x):
                return NotSubset(x)
        return Subset()
    cof = nbhd_is_cofinite(outer)
    if isinstance(cof, Cofinite):
        for y in sorted(cof.complement, key=ext_key):
            if nbhd_member(inner, y):
                return NotSubset(y)
        return Subset()
    ki, ko = inner.family.family, outer.family.family
    if ki in PADIC and ki is ko:
        return _padic_subset(inner, outer)
    if ki is Family.DIAGONAL and ko is Family.DIAGONAL:
        return _diagonal_subset(inner, outer)
    for x in nbhd_enumerate(inner, search_depth):
        if not nbhd_member(outer, x):
            return NotSubset(x)
    raise Undecided(inner.family, outer.family)


def basics_disjoint(b1: BasicNbhd, b2: BasicNbhd) -> bool:
    """Exact disjointness for finite sets and same-family pairs."""
    for a, b in ((b1, b2), (b2, b1)):
        fin = finite_members(a)
        if fin is not None:
            return not any(nbhd_member(b, x) for x in fin)
    k1, k2 = b1.family.family, b2.family.family
    if k1 is not k2:
        raise Undecided(b1.family, b2.family)
    if k1 in (Family.COFINITE, Family.ZERO_COMPACT):
        # two cofinite sets in an infinite space, or two zero basics
        return False
    if k1 is Family.DIAGONAL:
        c1, c2 = b1.center, b2.center
        if nbhd_member(b2, c1) or nbhd_member(b1, c2):
            return False
        return c1.i - c1.j != c2.i - c2.j
    c1, c2 = _padic_oriented(b1), _padic_oriented(b2)
    if c1.i != c2.i:
        return True
    # progressions unbounded above meet iff congruent modulo the gcd
    return (c1.j - c2.j) % math.gcd(b1.modulus, b2.modulus) != 0


# ---------------------------------------------------------------------------
# separation


@dataclass(frozen=True)
class SeparatedBy:
    first: BasicNbhd
    second: BasicNbhd

    def to_json(self) -> dict:
        return {"verdict": "SeparatedBy", "first": self.first.to_json(), "second": self.second.to_json()}


@dataclass(frozen=True)
class NotSeparatedWithinBound:
    bound: int

    def to_json(self) -> dict:
        return {"verdict": "NotSeparatedWithinBound", "bound": self.bound}


@dataclass(frozen=True)
class ProvablyInseparable:
    reason: str

    def to_json(self) -> dict:
        return {"verdict": "ProvablyInseparable", "reason": self.reason}


SeparationVerdict = Union[SeparatedBy, NotSeparatedWithinBound, ProvablyInseparable]


def _padic_split_param(p: int, x: Elem, y: Elem) -> int:
    """Least n with p^n > |x.j - y.j| (0 when the rows differ)."""
    if x.i != y.i:
        return 0
    diff = abs(x.j - y.j)
    n = 0
    while p**n <= diff:
        n += 1
    return n


def _check_pair(family: FamilyId, x: ExtElem, y: ExtElem) -> None:
    if x == y:
        raise ValueError("points must be distinct")
    for e in (x, y):
        if not contains(family.carrier, e):
            raise CarrierMismatch(f"{e!r} is not in {family.carrier.name}")


def separate(
    family: FamilyId, x: ExtElem, y: ExtElem, param_bound: int, prove: bool = False
) -> SeparationVerdict:
    """Look for disjoint basic neighbourhoods of two distinct points.

    p-adic families are separated in closed form.  Others are searched over
    parameters up to ``param_bound`` (by max parameter, then first, then
    second).  With ``prove=True`` the known inseparable configurations
    (any COFINITE pair, DIAGONAL pairs on one diagonal) are reported as such.
    """
    _check_pair(family, x, y)
    kind = family.family
    if kind in PADIC:
        xo, yo = (flip(x), flip(y)) if kind is Family.PADIC_MINUS else (x, y)
        n = _padic_split_param(family.p, xo, yo)
        bx, by = BasicNbhd(family, x, n), BasicNbhd(family, y, n)
        assert basics_disjoint(bx, by)
        return SeparatedBy(bx, by)
    pairs = sorted(
        itertools.product(range(param_bound + 1), repeat=2), key=lambda nm: (max(nm), nm)
    )
    for n, m in pairs:
        bx, by = BasicNbhd(family, x, n), BasicNbhd(family, y, m)
        if basics_disjoint(bx, by):
            return SeparatedBy(bx, by)
    if prove:
        if kind is Family.COFINITE:
            return ProvablyInseparable("every two basic sets share a cofinite tail")
        if kind is Family.DIAGONAL and x.i - x.j == y.i - y.j:
            return ProvablyInseparable("both rays run along the same diagonal")
    return NotSeparatedWithinBound(param_bound)


def excluding_param(family: FamilyId, x: ExtElem, y: ExtElem) -> int:
    """Least n such that the n-basic set at ``x`` does not contain ``y``."""
    _check_pair(family, x, y)
    kind = family.family
    if kind is Family.DISCRETE:
        upper = 0
    elif kind is Family.DIAGONAL:
        upper = max(0, y.i - x.i) if y.i - x.i == y.j - x.j else 0
    elif kind is Family.COFINITE:
        upper = y.cidx
    elif kind is Family.ZERO_COMPACT:
        upper = y.j + 1 if x is ZERO else 0
    elif kind is Family.PADIC_MINUS:
        upper = _padic_split_param(family.p, flip(x), flip(y))
    else:
        upper = _padic_split_param(family.p, x, y)
    for n in range(upper + 1):
        if not nbhd_member(BasicNbhd(family, x, n), y):
            return n
    raise AssertionError(f"closed-form parameter {upper} fails to exclude {y!r} from {x!r}")


def t1_check(family: FamilyId, x: ExtElem, y: ExtElem) -> bool:
    """Each of the two points has a basic neighbourhood missing the other."""
    nx = excluding_param(family, x, y)
    ny = excluding_param(family, y, x)
    return not nbhd_member(BasicNbhd(family, x, nx), y) and not nbhd_member(
        BasicNbhd(family, y, ny), x
    )


# ---------------------------------------------------------------------------
# compactness


@dataclass(frozen=True)
class CompactByCofinite:
    anchor: str
    complement_size: str
    checked_up_to: int

    def to_json(self) -> dict:
        return {
            "verdict": "CompactByCofinite",
            "anchor": self.anchor,
            "complement_size": self.complement_size,
            "checked_up_to": self.checked_up_to,
        }


@dataclass(frozen=True)
class NoCertificate:
    reason: str

    def to_json(self) -> dict:
        return {"verdict": "NoCertificate", "reason": self.reason}


def compactness_certificate(family: FamilyId, trunc: int) -> CompactByCofinite | NoCertificate:
    """Certify compactness when the basics that matter are cofinite.

    A space where every point outside one anchor is isolated and every basic
    set at the anchor is cofinite is compact; so is a space all of whose
    basic sets are cofinite.  Complement sizes are checked against their
    formulas for parameters and centers up to ``trunc``.
    """
    kind = family.family
    if kind is Family.ZERO_COMPACT:
        for n in range(trunc + 1):
            cof = nbhd_is_cofinite(BasicNbhd(family, ZERO, n))
            if not isinstance(cof, Cofinite) or len(cof.complement) != n * (n + 1) // 2:
                return NoCertificate(f"zero basic with parameter {n} has the wrong complement")
        for x in box(Carrier.CPLUS, trunc):
            if finite_members(BasicNbhd(family, x, 0)) != (x,):
                return NoCertificate(f"{x} is not isolated")
        return CompactByCofinite("0", "n(n+1)/2", trunc)
    if kind is Family.COFINITE:
        full = family.carrier is Carrier.FULL
        for c in box(family.carrier, trunc):
            for n in range(trunc + 1):
                cof = nbhd_is_cofinite(BasicNbhd(family, c, n))
                size = (n + 1) ** 2 if full else (n + 1) * (n + 2) // 2
                size -= c.cidx <= n
                if not isinstance(cof, Cofinite) or len(cof.complement) != size:
                    return NoCertificate(f"basic at {c} with parameter {n} has the wrong complement")
        formula = "(n+1)^2 - [x in C_n]" if full else "(n+1)(n+2)/2 - [x in C_n]"
        return CompactByCofinite("every point", formula, trunc)
    if kind is Family.PADIC_PLUS:
        return NoCertificate("basic sets fix the b-exponent and are never cofinite")
    if kind is Family.PADIC_MINUS:
        return NoCertificate("basic sets fix the a-exponent and are never cofinite")
    if kind is Family.PADIC_OMEGA:
        return NoCertificate("basic sets with n >= 1 miss a whole residue class")
    if kind is Family.DIAGONAL:
        return NoCertificate("basic sets are single diagonal rays")
    return NoCertificate("singletons in an infinite carrier")


def dualize_base(b: BasicNbhd) -> BasicNbhd:
    """Move a p-adic basic set between C+ and C- along ``flip``."""
    kind = b.family.family
    if kind is Family.PADIC_PLUS:
        target = Family.PADIC_MINUS
    elif kind is Family.PADIC_MINUS:
        target = Family.PADIC_PLUS
    else:
        raise ValueError(f"only p-adic C+/C- basics dualize, not {kind.name}")
    return BasicNbhd(FamilyId(target, b.family.p), flip(b.center), b.n)
