"""Continuity of shifts and of multiplication for the registered topologies.

A shift is ``x -> s*x`` (left) or ``x -> x*s`` (right).  For a point ``x``
and every target parameter ``n`` the checker looks for a parameter ``m``
whose basic set at ``x`` is carried into the n-basic set at the image point.
Per-family structural rules cover every ``n`` at once where they exist;
otherwise results are stated up to the parameter bound.
"""

from __future__ import annotations

import enum
import random
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Union

from .core import (
    ZERO,
    Carrier,
    Elem,
    ExtElem,
    box,
    contains,
    finite_open_nbhd,
    flip,
    from_json,
    mul,
    mul_ext,
    right_ideal,
    solve_left_div,
    solve_right_div,
    to_json,
)
from .topologies import (
    PADIC,
    BasicNbhd,
    Family,
    FamilyId,
    Undecided,
    basic_from_json,
    dualize_base,
    nbhd_enumerate,
    nbhd_member,
    nbhd_subset,
)


class Side(enum.Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def dual(self) -> Side:
        return Side.RIGHT if self is Side.LEFT else Side.LEFT


@dataclass(frozen=True)
class ShiftSpec:
    side: Side
    s: ExtElem
    family: FamilyId
    point: ExtElem

    def __post_init__(self) -> None:
        for e in (self.s, self.point):
            if not contains(self.family.carrier, e):
                raise ValueError(f"{e!r} is not in {self.family.carrier.name}")

    @property
    def target(self) -> ExtElem:
        return apply_shift(self.side, self.s, self.point, self.family.carrier)

    def to_json(self) -> dict:
        return {
            "side": self.side.value,
            "s": to_json(self.s),
            "family": self.family.to_json(),
            "point": to_json(self.point),
        }


def apply_shift(side: Side, s: ExtElem, x: ExtElem, carrier: Carrier) -> ExtElem:
    op = mul_ext if carrier is Carrier.S_ZERO else mul
    return op(s, x) if side is Side.LEFT else op(x, s)


# ---------------------------------------------------------------------------
# verdicts

Table = tuple[tuple[int, int], ...]


@dataclass(frozen=True)
class ContinuousExact:
    rule: str
    formula: str
    table: Table

    def to_json(self) -> dict:
        return {
            "verdict": "ContinuousExact",
            "rule": self.rule,
            "formula": self.formula,
            "table": [list(e) for e in self.table],
        }


@dataclass(frozen=True)
class ContinuousUpToBound:
    bound: int
    method: str
    table: Table

    def to_json(self) -> dict:
        return {
            "verdict": "ContinuousUpToBound",
            "bound": self.bound,
            "method": self.method,
            "table": [list(e) for e in self.table],
        }


@dataclass(frozen=True)
class Discontinuous:
    target: BasicNbhd
    escapes: tuple[tuple[int, ExtElem], ...]
    bound: int
    rule: str

    def to_json(self) -> dict:
        return {
            "verdict": "Discontinuous",
            "rule": self.rule,
            "target": self.target.to_json(),
            "bound": self.bound,
            "escapes": [[m, to_json(u)] for m, u in self.escapes],
        }


@dataclass(frozen=True)
class Inconclusive:
    bound: int
    reason: str
    table: Table = ()

    def to_json(self) -> dict:
        return {
            "verdict": "Inconclusive",
            "bound": self.bound,
            "reason": self.reason,
            "table": [list(e) for e in self.table],
        }


ContinuityVerdict = Union[ContinuousExact, ContinuousUpToBound, Discontinuous, Inconclusive]


def verdict_from_json(obj: dict) -> ContinuityVerdict:
    kind = obj["verdict"]
    table = tuple(tuple(e) for e in obj.get("table", ()))
    if kind == "ContinuousExact":
        return ContinuousExact(obj["rule"], obj["formula"], table)
    if kind == "ContinuousUpToBound":
        return ContinuousUpToBound(obj["bound"], obj["method"], table)
    if kind == "Discontinuous":
        escapes = tuple((m, from_json(u)) for m, u in obj["escapes"])
        return Discontinuous(basic_from_json(obj["target"]), escapes, obj["bound"], obj["rule"])
    return Inconclusive(obj["bound"], obj["reason"], table)


# ---------------------------------------------------------------------------
# p-adic image laws


def shift_image_padic(s: Elem, b: BasicNbhd) -> BasicNbhd:
    """The basic set s * W_n(b^k a^(k+t)) in PADIC_PLUS, in closed form."""
    if b.family.family is not Family.PADIC_PLUS:
        raise ValueError(f"expected a PADIC_PLUS basic set, got {b.family}")
    if not contains(Carrier.CPLUS, s):
        raise ValueError(f"{s} is not in CPLUS")
    k1, s1 = s.i, s.j - s.i
    k2, s2 = b.center.i, b.center.j - b.center.i
    if k1 + s1 < k2:
        center = Elem(k2 - s1, k2 + s2)
    elif k1 + s1 == k2:
        center = Elem(k1, k2 + s2)
    else:
        center = Elem(k1, k1 + s1 + s2)
    return BasicNbhd(b.family, center, b.n)


def _padic_escape(spec: ShiftSpec) -> bool:
    """True when the shift moves members of basic sets off the point's line.

    PADIC_PLUS basics fix the b-exponent; x -> x*s keeps it only when
    x.j >= s.i.  PADIC_MINUS basics fix the a-exponent; x -> s*x keeps it
    only when s.j <= x.i.  Addition on omega never escapes.
    """
    kind = spec.family.family
    s, x = spec.s, spec.point
    if kind is Family.PADIC_PLUS and spec.side is Side.RIGHT:
        return x.j < s.i
    if kind is Family.PADIC_MINUS and spec.side is Side.LEFT:
        return s.j > x.i
    return False


def _escape_point(spec: ShiftSpec, m: int) -> Elem:
    """Least non-center member of the m-basic set at the point whose image changes line."""
    q = spec.family.p**m
    s, x = spec.s, spec.point
    if spec.family.family is Family.PADIC_PLUS:
        t = max(1, -(-(s.i - x.j) // q))
        return Elem(x.i, x.j + q * t)
    t = max(1, -(-(s.j - x.i) // q))
    return Elem(x.i + q * t, x.j)


def _least_param(bound: int, ok) -> int | None:
    return next((m for m in range(bound + 1) if ok(m)), None)


def _check_padic(spec: ShiftSpec, param_bound: int) -> ContinuityVerdict:
    fam, x, target = spec.family, spec.point, spec.target
    if _padic_escape(spec):
        v = BasicNbhd(fam, target, 0)
        escapes = []
        for m in range(param_bound + 1):
            u = _escape_point(spec, m)
            assert nbhd_member(BasicNbhd(fam, x, m), u)
            assert not nbhd_member(v, apply_shift(spec.side, spec.s, u, fam.carrier))
            escapes.append((m, u))
        return Discontinuous(v, tuple(escapes), param_bound, "padic-line-escape")
    # the image of the m-basic set at x is the m-basic set at the image point
    table = []
    for n in range(param_bound + 1):
        v = BasicNbhd(fam, target, n)
        m = _least_param(param_bound, lambda m: nbhd_subset(BasicNbhd(fam, target, m), v).holds)
        if m is None:
            return Inconclusive(param_bound, f"no parameter for target {n}", tuple(table))
        table.append((n, m))
    return ContinuousExact("padic-image", "m = n", tuple(table))


# ---------------------------------------------------------------------------
# cofinite targets


def _preimages(side: Side, s: Elem, w: Elem, carrier: Carrier) -> frozenset[Elem]:
    c = Carrier.CPLUS if carrier is Carrier.S_ZERO else carrier
    return solve_right_div(s, w, c) if side is Side.LEFT else solve_left_div(s, w, c)


def _shell(kind: Family, carrier: Carrier, r: int) -> list[Elem]:
    """Points entering the complement of the n-basic set when n reaches r.

    COFINITE complements grow by the shell max(i, j) = r; zero basics of
    ZERO_COMPACT by the row of a-exponent r - 1.
    """
    if kind is Family.ZERO_COMPACT:
        return [Elem(i, r - 1) for i in range(r)] if r else []
    pts = [Elem(i, r) for i in range(r)] + [Elem(r, j) for j in range(r + 1)]
    return [w for w in pts if contains(carrier, w)]


def _exclusion(kind: Family, u: Elem) -> int:
    """Least m whose basic set at a point other than u misses u."""
    return u.j + 1 if kind is Family.ZERO_COMPACT else u.cidx


@lru_cache(maxsize=65536)
def _shell_profile(side: Side, s: Elem, kind: Family, carrier: Carrier, n_max: int):
    """Per shell r <= n_max: (w attaining the top value, top, runner-up).

    A value is the largest exclusion parameter over the preimages of w.
    """
    out = []
    for r in range(n_max + 1):
        vals = sorted(
            ((max((_exclusion(kind, u) for u in _preimages(side, s, w, carrier)), default=0), w)
             for w in _shell(kind, carrier, r)),
            key=lambda vw: (-vw[0], vw[1]),
        )
        top = vals[0] if vals else (0, None)
        second = vals[1][0] if len(vals) > 1 else 0
        out.append((top[1], top[0], second))
    return tuple(out)


def _cofinite_table(spec: ShiftSpec, param_bound: int) -> Table:
    """Least m for each target n <= param_bound, computed exactly.

    Points mapped outside the cofinite target form a finite set (division
    has finitely many solutions), and basic sets at the point shrink as m
    grows, so the least m is the largest exclusion parameter over that set.
    The image point itself is not in the complement of its own basic sets.
    """
    if spec.s is ZERO:
        return tuple((n, 0) for n in range(param_bound + 1))
    kind = spec.family.family
    profile = _shell_profile(spec.side, spec.s, kind, spec.family.carrier, param_bound)
    target = spec.target
    table, run = [], 0
    for n, (w, top, second) in enumerate(profile):
        run = max(run, second if w == target else top)
        table.append((n, run))
    return tuple(table)


def _zero_right_rule(s: Elem, n: int) -> int:
    return 0 if n <= s.j else max(s.i + 1, n + s.i - s.j)


def _check_zero_compact(spec: ShiftSpec, param_bound: int) -> ContinuityVerdict:
    full = tuple((n, 0) for n in range(param_bound + 1))
    if spec.point is not ZERO:
        return ContinuousExact("isolated-point", "m = 0", full)
    if spec.s is ZERO:
        return ContinuousExact("zero-absorbs", "m = 0", full)
    table = _cofinite_table(spec, param_bound)
    if spec.side is Side.LEFT:
        rule, formula = (lambda n: n), "m = n"
    else:
        s = spec.s
        rule = lambda n: _zero_right_rule(s, n)  # noqa: E731
        formula = f"m = 0 if n <= {s.j} else max({s.i + 1}, n - {s.j - s.i})"
    for n, m in table:
        if rule(n) < m:
            return Inconclusive(param_bound, f"rule gives {rule(n)} < least {m} at {n}", table)
    return ContinuousExact(f"zero-ideal-{spec.side.value}", formula, table)


def _check_by_enumeration(spec: ShiftSpec, param_bound: int, depth: int, witness_bound: int) -> ContinuityVerdict:
    fam, x, target = spec.family, spec.point, spec.target
    table = []
    images = {
        m: [apply_shift(spec.side, spec.s, u, fam.carrier) for u in nbhd_enumerate(BasicNbhd(fam, x, m), depth)]
        for m in range(witness_bound + 1)
    }
    for n in range(param_bound + 1):
        v = BasicNbhd(fam, target, n)
        m = _least_param(witness_bound, lambda m: all(nbhd_member(v, y) for y in images[m]))
        if m is None:
            return Inconclusive(param_bound, f"no parameter for target {n}", tuple(table))
        table.append((n, m))
    return ContinuousUpToBound(param_bound, f"enumeration-depth-{depth}", tuple(table))


def check_shift_continuity(
    spec: ShiftSpec, param_bound: int, depth: int = 50, witness_bound: int | None = None
) -> ContinuityVerdict:
    """Decide continuity of the shift at ``spec.point`` for targets n <= param_bound.

    The table lists (n, least m) pairs.  ``depth`` and ``witness_bound``
    (default: param_bound plus the box indices of s and the point) only
    matter for the DIAGONAL family, whose images are checked on enumerated
    members.
    """
    kind = spec.family.family
    try:
        if kind is Family.DISCRETE:
            return ContinuousExact("singleton", "m = 0", tuple((n, 0) for n in range(param_bound + 1)))
        if kind in PADIC:
            return _check_padic(spec, param_bound)
        if kind is Family.ZERO_COMPACT:
            return _check_zero_compact(spec, param_bound)
        if kind is Family.COFINITE:
            return ContinuousUpToBound(param_bound, "cofinite-preimage", _cofinite_table(spec, param_bound))
        if witness_bound is None:
            witness_bound = param_bound + spec.s.cidx + spec.point.cidx + 1
        return _check_by_enumeration(spec, param_bound, depth, witness_bound)
    except Undecided as exc:
        return Inconclusive(param_bound, str(exc))


def row_shift_sweep(p: int, k1: int, s1: int, k2: int, s2: int, param_bound: int) -> ContinuityVerdict:
    """Right shift by b^k2 a^(k2+s2) at the point b^k1 a^(k1+s1) in PADIC_PLUS."""
    if k1 + s1 > k2:
        raise ValueError(f"expected k1 + s1 <= k2, got {k1} + {s1} > {k2}")
    spec = ShiftSpec(Side.RIGHT, Elem(k2, k2 + s2), FamilyId(Family.PADIC_PLUS, p), Elem(k1, k1 + s1))
    return check_shift_continuity(spec, param_bound)


# ---------------------------------------------------------------------------
# sweep reports


@dataclass
class SweepReport:
    name: str
    counts: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def bump(self, key: str, by: int = 1) -> None:
        self.counts[key] = self.counts.get(key, 0) + by

    def fail(self, entry) -> None:
        # keep reports bounded; the count still reflects every failure
        self.bump("failures")
        if len(self.failures) < 20:
            self.failures.append(entry)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "counts": dict(sorted(self.counts.items())),
            "failures": self.failures,
            "notes": self.notes,
        }


def verify_zero_compact_monoid(n_bound: int, elem_bound: int) -> SweepReport:
    """Check that C+ with zero and its zero-compact topology form a topological semigroup.

    (a) U_n(0) * U_n(0) ⊆ U_n(0), (b) x * U_n(0) ⊆ U_n(0),
    (c) U_n(0) * b^i a^i ⊆ U_n(0) for n >= i (also recording the pairs n < i
    where the inclusion still holds), (d) joint continuity at every pair.
    """
    rep = SweepReport("zero-compact-monoid")
    fam = FamilyId(Family.ZERO_COMPACT)
    space = box(Carrier.S_ZERO, elem_bound)
    elems = space[1:]
    unneeded_guard = []
    for n in range(n_bound + 1):
        zero_basic = BasicNbhd(fam, ZERO, n)
        ball = [u for u in space if nbhd_member(zero_basic, u)]
        for u in ball:
            for v in ball:
                rep.bump("a")
                if not nbhd_member(zero_basic, mul_ext(u, v)):
                    rep.fail({"check": "a", "n": n, "pair": [to_json(u), to_json(v)]})
        for x in elems:
            for u in ball:
                rep.bump("b")
                if not nbhd_member(zero_basic, mul_ext(x, u)):
                    rep.fail({"check": "b", "n": n, "pair": [to_json(x), to_json(u)]})
        for i in range(elem_bound + 1):
            e = Elem(i, i)
            inside = all(nbhd_member(zero_basic, mul_ext(u, e)) for u in ball)
            if n >= i:
                rep.bump("c")
                if not inside:
                    rep.fail({"check": "c", "n": n, "i": i})
            elif inside:
                unneeded_guard.append([n, i])
    rep.counts["c-holds-without-guard"] = len(unneeded_guard)
    if unneeded_guard:
        rep.notes.append(
            "U_n(0) * b^i a^i ⊆ U_n(0) also holds for every tested n < i; the guard n >= i is not needed"
        )

    # (d) joint continuity: find basic sets at x and y whose product lies in the n-basic at xy
    for n in range(n_bound + 1):
        for x in space:
            for y in space:
                xy = mul_ext(x, y)
                v = BasicNbhd(fam, xy, n)
                rep.bump("d")
                if x is not ZERO and y is not ZERO:
                    ok = nbhd_member(v, xy)
                elif x is ZERO and y is ZERO:
                    # product a-exponent dominates both factors, so parameter n works
                    u_n = [u for u in space if nbhd_member(BasicNbhd(fam, ZERO, n), u)]
                    ok = all(nbhd_member(v, mul_ext(u, w)) for u in u_n for w in u_n)
                else:
                    side, s = (Side.RIGHT, y) if x is ZERO else (Side.LEFT, x)
                    verdict = check_shift_continuity(ShiftSpec(side, s, fam, ZERO), n)
                    ok = isinstance(verdict, ContinuousExact)
                if not ok:
                    rep.fail({"check": "d", "n": n, "pair": [to_json(x), to_json(y)]})
    return rep


def _diagonal_offsets(x: Elem, y: Elem, xs: list[Elem], ys: list[Elem]) -> tuple[list[int], list[int]]:
    """Offsets along the diagonal of xy of D_l(x)*y and x*D_m(y).

    ``xs[l]`` and ``ys[m]`` are the diagonal translates of x and y by l and m.
    """
    xy = mul(x, y)
    left = []
    for xl in xs:
        z = mul(xl, y)
        assert z.i - z.j == xy.i - xy.j
        left.append(z.i - xy.i)
    right = []
    for ym in ys:
        z = mul(x, ym)
        assert z.i - z.j == xy.i - xy.j
        right.append(z.i - xy.i)
    return left, right


def _last_bad(offsets: list[int], n_max: int) -> list[int]:
    """For n = 0..n_max, the last index l >= 1 whose offset is negative or in [1, n] (else 0)."""
    neg = max((l for l, t in enumerate(offsets) if l and t < 0), default=0)
    first_at = [0] * (n_max + 1)
    for l, t in enumerate(offsets):
        if l and 1 <= t <= n_max:
            first_at[t] = max(first_at[t], l)
    out, run = [], neg
    for n in range(n_max + 1):
        run = max(run, first_at[n])
        out.append(run)
    return out


def diagonal_joint_params(x: Elem, y: Elem, param_bound: int, scan: int | None = None) -> tuple[tuple[int, int], ...]:
    """Least (a, b) with O_a(x) * O_b(y) ⊆ O_n(xy) for n = 0..param_bound.

    Single-factor translates are scanned ``scan`` steps along each diagonal
    (default: far enough to cover the exponents of x and y).
    """
    lim = scan if scan is not None else 2 * param_bound + x.cidx + y.cidx + 2
    xs = [Elem(x.i + l, x.j + l) for l in range(lim + 1)]
    ys = [Elem(y.i + m, y.j + m) for m in range(lim + 1)]
    left, right = _diagonal_offsets(x, y, xs, ys)
    return tuple(zip(_last_bad(left, param_bound), _last_bad(right, param_bound)))


def verify_diagonal_semigroup(
    elem_bound: int, param_bound: int, witness_bound: int | None = None, depth: int = 3
) -> SweepReport:
    """Joint continuity of multiplication for the DIAGONAL topology on C(a,b) and C+.

    For each pair x, y and target n, records the least (a, b) with
    O_a(x) * O_b(y) ⊆ O_n(xy).  All products stay on the diagonal of xy, so
    membership is an offset condition; single-factor translates are scanned
    well past ``witness_bound`` and two-factor translates to ``depth`` beyond
    the chosen parameters.  Results are certified up to the bounds.
    """
    rep = SweepReport("diagonal-semigroup")
    wb = witness_bound if witness_bound is not None else param_bound + elem_bound
    lim = wb + param_bound + 2
    for carrier in (Carrier.FULL, Carrier.CPLUS):
        fam = FamilyId(Family.DIAGONAL, carrier=carrier)
        elems = box(carrier, elem_bound)
        translates = {e: [Elem(e.i + l, e.j + l) for l in range(lim + depth + 1)] for e in elems}
        for x in elems:
            for y in elems:
                xy = mul(x, y)
                xs, ys = translates[x], translates[y]
                left, right = _diagonal_offsets(x, y, xs[: lim + 1], ys[: lim + 1])
                a_of, b_of = _last_bad(left, param_bound), _last_bad(right, param_bound)
                for n in range(param_bound + 1):
                    rep.bump(f"{carrier.name}-entries")
                    a, b = a_of[n], b_of[n]
                    if a > wb or b > wb:
                        rep.bump("inconclusive")
                        rep.fail({"carrier": carrier.name, "x": to_json(x), "y": to_json(y), "n": n})
                        continue
                    v = BasicNbhd(fam, xy, n)
                    for l in range(a + 1, a + 1 + depth):
                        for m in range(b + 1, b + 1 + depth):
                            if not nbhd_member(v, mul(xs[l], ys[m])):
                                rep.fail({"carrier": carrier.name, "x": to_json(x), "y": to_json(y), "n": n, "a": a, "b": b})
                    rep.counts["max-a"] = max(rep.counts.get("max-a", 0), a)
                    rep.counts["max-b"] = max(rep.counts.get("max-b", 0), b)
    return rep


def verify_cofinite_shift_continuity(elem_bound: int, param_bound: int) -> SweepReport:
    """Both shifts continuous (up to the bound) for the COFINITE topology on C(a,b) and C+."""
    rep = SweepReport("cofinite-shift-continuity")
    for carrier in (Carrier.FULL, Carrier.CPLUS):
        fam = FamilyId(Family.COFINITE, carrier=carrier)
        elems = box(carrier, elem_bound)
        for side in Side:
            for s in elems:
                for x in elems:
                    verdict = check_shift_continuity(ShiftSpec(side, s, fam, x), param_bound)
                    rep.bump("entries")
                    if isinstance(verdict, ContinuousUpToBound):
                        rep.counts["max-m"] = max(rep.counts.get("max-m", 0), max(m for _, m in verdict.table))
                        continue
                    rep.bump("inconclusive")
                    rep.fail({"carrier": carrier.name, "side": side.value, "s": to_json(s), "x": to_json(x)})
    rep.notes.append("joint continuity is not claimed for this topology")
    return rep


def discreteness_forcing(x: Elem, trunc: int | None = None) -> SweepReport:
    """The finite skeleton of why every Hausdorff left-continuous topology on C+ is discrete.

    (a) each right shift by an idempotent b^i a^i, i <= x.j + 1, is a
    retraction; (b) its image is the set {t >= i}; (c) the complement of that
    set for i = x.j + 1 is a finite set containing x.  That such retracts are
    closed in any Hausdorff topology in which right shifts are continuous,
    which makes x isolated, is a classical fact not recomputed here.
    """
    if x.i > x.j:
        raise ValueError(f"{x} is not in CPLUS")
    t = trunc if trunc is not None else max(10, x.j + 2)
    rep = SweepReport("discreteness-forcing")
    elems = box(Carrier.CPLUS, t)
    for i in range(x.j + 2):
        e = Elem(i, i)
        for u in elems:
            rep.bump("retraction")
            once = mul(u, e)
            if mul(once, e) != once:
                rep.fail({"check": "retraction", "i": i, "u": to_json(u)})
        rep.bump("image")
        image = {mul(u, e) for u in elems}
        if {z for z in image if z.cidx <= t} != right_ideal(i, Carrier.CPLUS, t):
            rep.fail({"check": "image", "i": i})
    nbhd = finite_open_nbhd(x)
    complement = set(elems) - right_ideal(x.j + 1, Carrier.CPLUS, t)
    rep.counts["neighbourhood-size"] = len(nbhd)
    if nbhd != complement or x not in nbhd or len(nbhd) != (x.j + 1) * (x.j + 2) // 2:
        rep.fail({"check": "finite-neighbourhood", "x": to_json(x)})
    rep.notes.append("isolation of the point follows in any Hausdorff left-continuous topology")
    return rep


# ---------------------------------------------------------------------------
# p-adic shift suites and duality


@dataclass(frozen=True)
class ShiftEntry:
    spec: ShiftSpec
    verdict: ContinuityVerdict

    def to_json(self) -> dict:
        return {"spec": self.spec.to_json(), "verdict": self.verdict.to_json()}


def padic_shift_suite(p: int, elem_bound: int, param_bound: int) -> list[ShiftEntry]:
    """All left and right shifts of C+ with the p-adic topology, s and x in the box."""
    fam = FamilyId(Family.PADIC_PLUS, p)
    elems = box(Carrier.CPLUS, elem_bound)
    out = []
    for side in Side:
        for s in elems:
            for x in elems:
                spec = ShiftSpec(side, s, fam, x)
                out.append(ShiftEntry(spec, check_shift_continuity(spec, param_bound)))
    return out


def dual_spec(spec: ShiftSpec) -> ShiftSpec:
    kind = spec.family.family
    if kind not in (Family.PADIC_PLUS, Family.PADIC_MINUS):
        raise ValueError(f"only p-adic C+/C- shifts dualize, not {kind.name}")
    other = Family.PADIC_MINUS if kind is Family.PADIC_PLUS else Family.PADIC_PLUS
    return ShiftSpec(spec.side.dual, flip(spec.s), FamilyId(other, spec.family.p), flip(spec.point))


def dual_verdict(v: ContinuityVerdict) -> ContinuityVerdict:
    if isinstance(v, Discontinuous):
        return Discontinuous(dualize_base(v.target), tuple((m, flip(u)) for m, u in v.escapes), v.bound, v.rule)
    return v


@dataclass
class DualReport:
    entries: list[ShiftEntry]
    checked: list[int]
    mismatches: list[int]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def dual_report(entries: list[ShiftEntry], sample: int = 25, seed: int = 0) -> DualReport:
    """Carry a C+ shift report to C- along ``flip``, swapping left and right.

    ``sample`` entries (chosen by a seeded generator) are recomputed directly
    in C- and compared with the carried verdicts.
    """
    dual = [ShiftEntry(dual_spec(e.spec), dual_verdict(e.verdict)) for e in entries]
    idx = sorted(random.Random(seed).sample(range(len(dual)), min(sample, len(dual))))
    bad = []
    for k in idx:
        e = dual[k]
        bound = _verdict_bound(e.verdict)
        if check_shift_continuity(e.spec, bound) != e.verdict:
            bad.append(k)
    return DualReport(dual, idx, bad)


def _verdict_bound(v: ContinuityVerdict) -> int:
    if isinstance(v, (Discontinuous, ContinuousUpToBound, Inconclusive)):
        return v.bound
    return len(v.table) - 1
