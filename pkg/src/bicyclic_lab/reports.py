"""Claim runners: each checks one statement at desk scale and returns a report.

A claim report records whether every computed verdict agrees with the
predicted one, the bounds used, summary counts and a few canonical
witnesses.  Reports serialize to JSON; ``duration_ms`` is the only field
that may differ between two runs with the same configuration.
"""

from __future__ import annotations

import functools
import itertools
import time
from dataclasses import asdict, dataclass, field
from typing import Callable

from .continuity import (
    ContinuousExact,
    Discontinuous,
    ShiftSpec,
    Side,
    apply_shift,
    check_shift_continuity,
    diagonal_joint_params,
    discreteness_forcing,
    dual_report,
    padic_shift_suite,
    row_shift_sweep,
    shift_image_padic,
    verdict_from_json,
    verify_cofinite_shift_continuity,
    verify_diagonal_semigroup,
    verify_zero_compact_monoid,
)
from .core import (
    ONE,
    ZERO,
    Carrier,
    Elem,
    GreenRelation,
    box,
    finite_open_nbhd,
    flip,
    format_elem,
    from_json,
    green_classes,
    green_related,
    mul,
    mul_closed,
    parse_elem,
    right_ideal,
    row_embed,
    row_index,
    solve_left_div,
    solve_right_div,
    sorted_elems,
    to_json,
)
from .topologies import (
    BasicNbhd,
    Cofinite,
    CompactByCofinite,
    Family,
    FamilyId,
    NotSeparatedWithinBound,
    SeparatedBy,
    basic_from_json,
    compactness_certificate,
    is_prime,
    nbhd_enumerate,
    nbhd_is_cofinite,
    nbhd_member,
    nbhd_subset,
    separate,
    t1_check,
)

SCHEMA = 1


@dataclass(frozen=True)
class RunConfig:
    prime: int = 2
    elem_bound: int = 12
    param_bound: int = 8
    witness_bound: int = 16

    def __post_init__(self) -> None:
        if not is_prime(self.prime):
            raise ValueError(f"prime must be a prime >= 2, got {self.prime}")
        # an element bound of 0 is allowed: the box is just the identity
        if self.elem_bound < 0:
            raise ValueError(f"elem_bound must be >= 0, got {self.elem_bound}")
        for name in ("param_bound", "witness_bound"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be >= 1, got {getattr(self, name)}")

    def to_json(self) -> dict:
        return asdict(self)


@dataclass
class ClaimReport:
    claim: str
    anchor: str
    matches: bool
    summary: dict
    bounds: dict
    witnesses: list = field(default_factory=list)
    duration_ms: float = 0.0

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "anchor": self.anchor,
            "verdict": "matches" if self.matches else "differs",
            "summary": self.summary,
            "bounds": self.bounds,
            "witnesses": self.witnesses,
            "duration_ms": self.duration_ms,
        }


@dataclass
class _Outcome:
    """What a claim runner hands back before timing and anchoring."""

    bounds: dict
    summary: dict = field(default_factory=dict)
    witnesses: list = field(default_factory=list)
    mismatches: int = 0

    def tally(self, key: str, ok: bool, witness=None) -> None:
        self.summary[key] = self.summary.get(key, 0) + 1
        if not ok:
            self.mismatches += 1
            self.summary[f"{key}-mismatches"] = self.summary.get(f"{key}-mismatches", 0) + 1
            if witness is not None and len(self.witnesses) < 20:
                self.witnesses.append(witness)


# ---------------------------------------------------------------------------
# algebra


def _closure(cfg: RunConfig) -> _Outcome:
    b = cfg.elem_bound
    out = _Outcome({"elem_bound": b})
    for c in (Carrier.CPLUS, Carrier.CMINUS):
        elems = box(c, b)
        for x, y in itertools.product(elems, repeat=2):
            try:
                mul_closed(x, y, c)
                ok = True
            except AssertionError:
                ok = False
            out.tally(f"{c.name}-products", ok, {"carrier": c.name, "pair": [to_json(x), to_json(y)]})
    # rows b^k a^(k+s) are copies of (omega, +)
    for k, s, t in itertools.product(range(b + 1), repeat=3):
        z = mul(row_embed(k, s), row_embed(k, t))
        out.tally("row-sums", z == row_embed(k, s + t) and row_index(k, z) == s + t, {"row": k, "s": s, "t": t})
    for x in box(Carrier.FULL, b):
        out.tally("normal-forms", parse_elem(format_elem(x)) == x and from_json(to_json(x)) == x, to_json(x))
    zb = box(Carrier.S_ZERO, b)
    out.tally("box-order", sorted_elems(reversed(zb)) == zb)
    out.witnesses.insert(0, {"example": [to_json(Elem(2, 3)), to_json(Elem(1, 2)), to_json(mul(Elem(2, 3), Elem(1, 2)))]})
    return out


def _anti_isomorphism(cfg: RunConfig) -> _Outcome:
    b = cfg.elem_bound
    out = _Outcome({"elem_bound": b})
    elems = box(Carrier.FULL, b)
    for x, y in itertools.product(elems, repeat=2):
        ok = flip(mul(x, y)) == mul(flip(y), flip(x)) and (x.i - x.j) + (y.i - y.j) == mul(x, y).i - mul(x, y).j
        out.tally("pairs", ok, [to_json(x), to_json(y)])
    out.tally("bijective", sorted(map(flip, elems)) == elems)
    out.tally("involution", all(flip(flip(x)) == x for x in elems))
    swapped = {flip(x) for x in box(Carrier.CPLUS, b)} == set(box(Carrier.CMINUS, b))
    out.tally("swaps-submonoids", swapped)
    return out


def _green(cfg: RunConfig) -> _Outcome:
    b, wb = cfg.elem_bound, cfg.witness_bound
    out = _Outcome({"elem_bound": b, "witness_bound": wb})
    for c in (Carrier.CPLUS, Carrier.CMINUS):
        for rel in GreenRelation:
            classes = green_classes(rel, c, b, wb)
            for cls in classes:
                out.tally(f"{c.name}-{rel.name}-classes", len(cls) == 1, {"carrier": c.name, "relation": rel.name, "class": [to_json(x) for x in cls]})
            v = green_related(rel, ONE, ONE, c, wb)
            exact = rel in (GreenRelation.R, GreenRelation.L, GreenRelation.H)
            out.tally("reflexive-and-exactness", v.related and v.exact == exact, {"relation": rel.name})
    return out


def _division(cfg: RunConfig) -> _Outcome:
    b = cfg.elem_bound
    search = b + 5
    out = _Outcome({"elem_bound": b, "search_bound": search})
    for c in (Carrier.CPLUS, Carrier.CMINUS):
        elems = box(c, b)
        cands = box(c, search)
        right: dict = {}
        left: dict = {}
        for v in elems:
            for u in cands:
                right.setdefault((v, mul(v, u)), set()).add(u)
                left.setdefault((v, mul(u, v)), set()).add(u)
        for v, w in itertools.product(elems, repeat=2):
            r = solve_right_div(v, w, c)
            out.tally(f"{c.name}-right", r == right.get((v, w), set()), {"carrier": c.name, "side": "right", "v": to_json(v), "w": to_json(w)})
            lft = solve_left_div(v, w, c)
            out.tally(f"{c.name}-left", lft == left.get((v, w), set()), {"carrier": c.name, "side": "left", "v": to_json(v), "w": to_json(w)})
    example = solve_right_div(Elem(1, 2), Elem(1, 3))
    out.tally("example-size", len(example) == 3)
    out.witnesses.insert(0, {"v": [1, 2], "w": [1, 3], "right-solutions": [to_json(u) for u in sorted(example)]})
    return out


def _right_ideal(cfg: RunConfig) -> _Outcome:
    b = cfg.elem_bound
    trunc = b + 2
    out = _Outcome({"elem_bound": b, "trunc": trunc})
    elems = box(Carrier.CPLUS, trunc)
    for i in range(b + 1):
        image = {mul(u, Elem(i, i)) for u in elems}
        image = {z for z in image if z.cidx <= trunc}
        out.tally("ideals", image == right_ideal(i, Carrier.CPLUS, trunc), {"i": i})
    return out


def _discreteness(cfg: RunConfig) -> _Outcome:
    b = min(cfg.elem_bound, 6)
    out = _Outcome({"point_bound": b, "size_bound": 20})
    for x in box(Carrier.CPLUS, b):
        rep = discreteness_forcing(x)
        out.tally("points", rep.ok, {"x": to_json(x), "failures": rep.failures[:3]})
    for j in range(21):
        for i in range(j + 1):
            out.tally("neighbourhood-sizes", len(finite_open_nbhd(Elem(i, j))) == (j + 1) * (j + 2) // 2, [i, j])
    return out


# ---------------------------------------------------------------------------
# topologies without a prime


def _zero_compact(cfg: RunConfig) -> _Outcome:
    b, n = cfg.elem_bound, cfg.param_bound
    out = _Outcome({"elem_bound": b, "param_bound": n, "complement_bound": 20})
    rep = verify_zero_compact_monoid(n, b)
    out.tally("monoid-sweep", rep.ok, {"failures": rep.failures[:5]})
    out.summary["sweep"] = rep.to_json()["counts"]
    fam = FamilyId(Family.ZERO_COMPACT)
    for k in range(21):
        cof = nbhd_is_cofinite(BasicNbhd(fam, ZERO, k))
        out.tally("complement-sizes", isinstance(cof, Cofinite) and len(cof.complement) == k * (k + 1) // 2, k)
    cert = compactness_certificate(fam, n)
    out.tally("compact", isinstance(cert, CompactByCofinite), cert.to_json())
    small = min(b, 4)
    # zero and b^i a^j separate once the zero basic skips a-exponent j
    out.bounds["pair_bound"] = small
    pts = box(Carrier.S_ZERO, small)
    for x, y in itertools.combinations(pts, 2):
        out.tally("t1", t1_check(fam, x, y), [to_json(x), to_json(y)])
        out.tally("hausdorff", isinstance(separate(fam, x, y, small + 1), SeparatedBy), [to_json(x), to_json(y)])
    out.witnesses.extend(rep.notes)
    return out


def _diagonal(cfg: RunConfig) -> _Outcome:
    b, n = cfg.elem_bound, cfg.param_bound
    # the least parameters reach n + b, past the configured witness bound
    wb = n + b
    out = _Outcome({"elem_bound": b, "param_bound": n, "witness_bound": wb})
    rep = verify_diagonal_semigroup(b, n, wb)
    out.tally("joint-continuity", rep.ok, {"failures": rep.failures[:5]})
    out.summary["sweep"] = rep.to_json()["counts"]
    small = min(b, 4)
    for c in (Carrier.FULL, Carrier.CPLUS):
        fam = FamilyId(Family.DIAGONAL, carrier=c)
        for x, y in itertools.combinations(box(c, small), 2):
            out.tally("t1", t1_check(fam, x, y), [c.name, to_json(x), to_json(y)])
        for side in Side:
            for s, x in itertools.product(box(c, 2), repeat=2):
                v = check_shift_continuity(ShiftSpec(side, s, fam, x), 3)
                out.tally("shift-continuity", not isinstance(v, Discontinuous), [c.name, side.value, to_json(s), to_json(x)])
    # products of idempotents b^l a^l are b^max a^max, so the identity pair needs a = b = n
    table = diagonal_joint_params(ONE, ONE, n)
    out.tally("identity-pair", table == tuple((k, k) for k in range(n + 1)))
    out.witnesses.insert(0, {"x": [0, 0], "y": [0, 0], "least-a-b": [list(ab) for ab in table]})
    out.summary["not-compact"] = compactness_certificate(FamilyId(Family.DIAGONAL), n).to_json()["verdict"]
    return out


def _cofinite(cfg: RunConfig) -> _Outcome:
    b, n = cfg.elem_bound, cfg.param_bound
    small = min(b, 4)
    out = _Outcome({"elem_bound": b, "param_bound": n, "pair_bound": small})
    for c in (Carrier.FULL, Carrier.CPLUS):
        fam = FamilyId(Family.COFINITE, carrier=c)
        for x, y in itertools.combinations(box(c, small), 2):
            out.tally("t1", t1_check(fam, x, y), [c.name, to_json(x), to_json(y)])
            out.tally("not-separated", isinstance(separate(fam, x, y, n), NotSeparatedWithinBound), [c.name, to_json(x), to_json(y)])
        cert = compactness_certificate(fam, n)
        out.tally("compact", isinstance(cert, CompactByCofinite), cert.to_json())
    rep = verify_cofinite_shift_continuity(b, n)
    out.tally("shift-continuity", rep.ok and not rep.counts.get("inconclusive"), {"failures": rep.failures[:5]})
    out.summary["sweep"] = rep.to_json()["counts"]
    out.witnesses.extend(rep.notes)
    return out


# ---------------------------------------------------------------------------
# p-adic topologies


@functools.lru_cache(maxsize=8)
def _suite(p: int, elem_bound: int, param_bound: int):
    return tuple(padic_shift_suite(p, elem_bound, param_bound))


def image_law_holds(s: Elem, b: BasicNbhd, depth: int = 50) -> bool:
    """Left translates of the first ``depth`` members are the first ``depth`` members of the image basic."""
    image = shift_image_padic(s, b)
    products = [mul(s, u) for u in nbhd_enumerate(b, depth)]
    return all(nbhd_member(image, z) for z in products) and set(nbhd_enumerate(image, depth)) == set(products)


def _predicted_padic(spec: ShiftSpec) -> type:
    if spec.side is Side.RIGHT and spec.point.j < spec.s.i:
        return Discontinuous
    return ContinuousExact


def _sound(spec: ShiftSpec, verdict) -> bool:
    """Re-validate a verdict independently of the rule that produced it."""
    fam, c = spec.family, spec.family.carrier
    if isinstance(verdict, Discontinuous):
        return all(
            nbhd_member(BasicNbhd(fam, spec.point, m), u)
            and not nbhd_member(verdict.target, apply_shift(spec.side, spec.s, u, c))
            for m, u in verdict.escapes
        )
    for n, m in verdict.table:
        v = BasicNbhd(fam, spec.target, n)
        w = BasicNbhd(fam, spec.point, m)
        if spec.side is Side.LEFT and fam.family is Family.PADIC_PLUS:
            if not nbhd_subset(shift_image_padic(spec.s, w), v).holds:
                return False
        elif not all(nbhd_member(v, apply_shift(spec.side, spec.s, u, c)) for u in nbhd_enumerate(w, 20)):
            return False
    return True


def _padic_shifts(cfg: RunConfig) -> _Outcome:
    p, b, n = cfg.prime, cfg.elem_bound, cfg.param_bound
    law_bound = min(b, 8)
    out = _Outcome({"prime": p, "elem_bound": b, "param_bound": n, "image_law_bound": law_bound, "depth": 50})
    for e in _suite(p, b, n):
        kind = type(e.verdict)
        label = f"{e.spec.side.value}-{kind.__name__}"
        out.tally(label, kind is _predicted_padic(e.spec) and _sound(e.spec, e.verdict), e.to_json())
    fam = FamilyId(Family.PADIC_PLUS, p)
    for s, x in itertools.product(box(Carrier.CPLUS, law_bound), repeat=2):
        for k in range(3):
            out.tally("image-law", image_law_holds(s, BasicNbhd(fam, x, k)), [to_json(s), to_json(x), k])
    # the basic witness: right shift by b a at the identity
    spec = ShiftSpec(Side.RIGHT, Elem(1, 1), fam, ONE)
    v = check_shift_continuity(spec, n)
    expected = tuple((m, Elem(0, p**m)) for m in range(n + 1))
    out.tally("identity-witness", isinstance(v, Discontinuous) and v.escapes == expected)
    out.witnesses.insert(0, v.to_json())
    omega = FamilyId(Family.PADIC_OMEGA, p)
    for side in Side:
        for s, x in itertools.product(box(Carrier.OMEGA, b), repeat=2):
            out.tally("omega-shifts", isinstance(check_shift_continuity(ShiftSpec(side, s, omega, x), n), ContinuousExact))
    for x, y in itertools.combinations(box(Carrier.CPLUS, min(b, 4)), 2):
        out.tally("hausdorff", isinstance(separate(fam, x, y, n), SeparatedBy), [to_json(x), to_json(y)])
    out.summary["compactness"] = compactness_certificate(fam, n).to_json()["verdict"]
    return out


def _padic_row_sweep(cfg: RunConfig) -> _Outcome:
    p, n = cfg.prime, cfg.param_bound
    rows = min(cfg.elem_bound, 6)
    out = _Outcome({"prime": p, "row_bound": rows, "param_bound": n})
    fam = FamilyId(Family.PADIC_PLUS, p)
    for k2 in range(rows + 1):
        for k1 in range(k2 + 1):
            for s1 in range(k2 - k1 + 1):
                for s2 in range(rows + 1):
                    v = row_shift_sweep(p, k1, s1, k2, s2, n)
                    key = "boundary" if k1 + s1 == k2 else "strict"
                    out.tally(f"right-{key}", isinstance(v, Discontinuous), {"k1": k1, "s1": s1, "k2": k2, "s2": s2, "verdict": v.to_json()["verdict"]})
                    left = check_shift_continuity(ShiftSpec(Side.LEFT, Elem(k2, k2 + s2), fam, Elem(k1, k1 + s1)), n)
                    out.summary["left-continuous"] = out.summary.get("left-continuous", 0) + isinstance(left, ContinuousExact)
    out.witnesses.append(
        "right shifts are the ones that fail, so multiplication is not left-continuous;"
        " calling that 'not right-continuous' names the property by the shift side rather than the topology side"
    )
    return out


def _padic_dual(cfg: RunConfig) -> _Outcome:
    p, b, n = cfg.prime, cfg.elem_bound, cfg.param_bound
    out = _Outcome({"prime": p, "elem_bound": b, "param_bound": n, "sample": 25})
    suite = _suite(p, b, n)
    rep = dual_report(list(suite), sample=25)
    out.tally("spot-checks", rep.ok, {"mismatched-entries": rep.mismatches})
    out.summary["sampled"] = len(rep.checked)
    for e, d in zip(suite, rep.entries):
        same = type(e.verdict) is type(d.verdict) and d.spec.side is e.spec.side.dual
        same = same and verdict_from_json(d.verdict.to_json()) == d.verdict
        if isinstance(d.verdict, Discontinuous):
            same = same and basic_from_json(d.verdict.target.to_json()) == d.verdict.target
        out.tally("structure", same, d.to_json())
    for e in rep.entries:
        if e.spec.s == Elem(1, 1) and e.spec.point == ONE:
            out.witnesses.insert(0, e.to_json())
    return out


# ---------------------------------------------------------------------------
# registry


@dataclass(frozen=True)
class Claim:
    anchor: str
    run: Callable[[RunConfig], _Outcome]


CLAIMS: dict[str, Claim] = {
    "anti-isomorphism": Claim(
        "b^i a^j -> b^j a^i reverses products, is an involution and swaps C+ with C-", _anti_isomorphism
    ),
    "closure": Claim(
        "C+ (i <= j) and C- (i >= j) are closed under multiplication; each row b^k a^(k+s) is a copy of (omega, +)",
        _closure,
    ),
    "cofinite": Claim(
        "the cofinite-shell topology on C(a,b) and on C+ is compact, T1, not Hausdorff, with continuous shifts",
        _cofinite,
    ),
    "diagonal": Claim(
        "the diagonal-ray topology on C(a,b) and on C+ is T1 with jointly continuous multiplication",
        _diagonal,
    ),
    "discreteness": Claim(
        "in C+ the right shift by b^i a^i retracts onto {t >= i}; the complement for i = j+1 is finite and contains b^s a^j",
        _discreteness,
    ),
    "division": Claim(
        "v x = w and x v = w have finitely many solutions in C+ and C-, given by closed forms", _division
    ),
    "green": Claim("every Green relation on C+ and on C- is equality", _green),
    "padic-dual": Claim(
        "flip carries the p-adic topology of C+ to one on C- with left and right shifts exchanged", _padic_dual
    ),
    "padic-row-sweep": Claim(
        "for k1 + s1 <= k2 the right shift by b^k2 a^(k2+s2) is discontinuous at b^k1 a^(k1+s1) in the p-adic topology on C+",
        _padic_row_sweep,
    ),
    "padic-shifts": Claim(
        "in the p-adic topology on C+ every left shift is continuous and the right shift by b a is discontinuous at 1",
        _padic_shifts,
    ),
    "right-ideal": Claim("C+ * b^i a^i = {b^s a^t in C+ : t >= i}", _right_ideal),
    "zero-compact": Claim(
        "C+ with an adjoined zero, all points isolated except 0 with cofinite basics {j >= n}, is a compact Hausdorff topological semigroup",
        _zero_compact,
    ),
}

CLAIM_IDS = sorted(CLAIMS) + ["all"]


def run_claim(claim_id: str, cfg: RunConfig) -> ClaimReport:
    if claim_id not in CLAIMS:
        raise KeyError(f"unknown claim {claim_id!r}; expected one of {', '.join(CLAIM_IDS)}")
    claim = CLAIMS[claim_id]
    start = time.perf_counter()
    outcome = claim.run(cfg)
    ms = round((time.perf_counter() - start) * 1000, 1)
    summary = dict(sorted(outcome.summary.items()))
    return ClaimReport(claim_id, claim.anchor, outcome.mismatches == 0, summary, outcome.bounds, outcome.witnesses, ms)


def run_claims(claim_id: str, cfg: RunConfig) -> list[ClaimReport]:
    """Run one claim, or every claim in id order for ``all``."""
    ids = sorted(CLAIMS) if claim_id == "all" else [claim_id]
    return [run_claim(c, cfg) for c in ids]


def report_document(reports: list[ClaimReport], cfg: RunConfig) -> dict:
    return {"schema": SCHEMA, "config": cfg.to_json(), "claims": [r.to_json() for r in reports]}


def render_text(reports: list[ClaimReport]) -> str:
    lines = []
    for r in reports:
        counts = ", ".join(f"{k}={v}" for k, v in r.summary.items() if isinstance(v, int))
        lines.append(f"{r.claim:<18} {'MATCH' if r.matches else 'DIFFERS':<8} {r.duration_ms:>9.1f} ms  {counts}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# semantic diff


def _claims_of(doc) -> list[dict]:
    if isinstance(doc, dict) and "claims" in doc:
        doc = doc["claims"]
    if not isinstance(doc, list) or not all(isinstance(c, dict) and "claim" in c for c in doc):
        raise ValueError("not a claim report document")
    return doc


def _walk(a, b, path: str, out: list[str]) -> None:
    if isinstance(a, dict) and isinstance(b, dict):
        for k in sorted(set(a) | set(b)):
            if k == "duration_ms":
                continue
            if k not in a or k not in b:
                out.append(f"{path}.{k}: only in {'fresh' if k in b else 'golden'}")
            else:
                _walk(a[k], b[k], f"{path}.{k}", out)
    elif isinstance(a, list) and isinstance(b, list):
        if len(a) != len(b):
            out.append(f"{path}: length {len(a)} != {len(b)}")
        for k, (x, y) in enumerate(zip(a, b)):
            _walk(x, y, f"{path}[{k}]", out)
    elif a != b:
        out.append(f"{path}: {a!r} != {b!r}")


def diff_reports(golden, fresh) -> list[str]:
    """Differences between two report documents, ignoring durations; empty means equal."""
    g = {c["claim"]: c for c in _claims_of(golden)}
    f = {c["claim"]: c for c in _claims_of(fresh)}
    out: list[str] = []
    for cid in sorted(set(g) | set(f)):
        if cid not in g or cid not in f:
            out.append(f"{cid}: only in {'fresh' if cid in f else 'golden'}")
            continue
        _walk(g[cid], f[cid], cid, out)
    return out


__all__ = [
    "CLAIMS",
    "CLAIM_IDS",
    "ClaimReport",
    "RunConfig",
    "diff_reports",
    "image_law_holds",
    "render_text",
    "report_document",
    "run_claim",
    "run_claims",
]
