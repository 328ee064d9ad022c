import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bicyclic_lab.core import ONE, ZERO, Carrier, Elem, box, flip
from bicyclic_lab.topologies import (
    BasicNbhd,
    CarrierMismatch,
    Cofinite,
    CompactByCofinite,
    Family,
    FamilyId,
    NoCertificate,
    NotCofinite,
    NotSeparatedWithinBound,
    NotSubset,
    ProvablyInseparable,
    SeparatedBy,
    Subset,
    Undecided,
    basic_from_json,
    basics_disjoint,
    compactness_certificate,
    dualize_base,
    excluding_param,
    finite_members,
    is_prime,
    nbhd_enumerate,
    nbhd_is_cofinite,
    nbhd_member,
    nbhd_subset,
    separate,
    t1_check,
)
from strategies import primes, small, small_cplus
import oracles

PLUS2 = FamilyId(Family.PADIC_PLUS, 2)
COF = FamilyId(Family.COFINITE)
DIAG = FamilyId(Family.DIAGONAL)
ZC = FamilyId(Family.ZERO_COMPACT)

# (family id, oracle family name, carrier name, prime)
FAMILIES = [
    (FamilyId(Family.DISCRETE), "DISCRETE", "CPLUS", None),
    (DIAG, "DIAGONAL", "FULL", None),
    (FamilyId(Family.DIAGONAL, carrier=Carrier.CPLUS), "DIAGONAL", "CPLUS", None),
    (COF, "COFINITE", "FULL", None),
    (FamilyId(Family.COFINITE, carrier=Carrier.CPLUS), "COFINITE", "CPLUS", None),
    (FamilyId(Family.PADIC_OMEGA, 3), "PADIC_OMEGA", "OMEGA", 3),
    (PLUS2, "PADIC_PLUS", "CPLUS", 2),
    (FamilyId(Family.PADIC_MINUS, 3), "PADIC_MINUS", "CMINUS", 3),
]


def pair(x):
    return "0" if x is ZERO else (x.i, x.j)


@pytest.mark.parametrize("fam, name, carrier, p", FAMILIES)
def test_membership_matches_defining_sets(fam, name, carrier, p):
    pts = box(fam.carrier, 7)
    for c in pts:
        for n in range(4):
            want = oracles.basic_set(name, pair(c), n, 7, p, carrier)
            got = {pair(x) for x in pts if nbhd_member(BasicNbhd(fam, c, n), x)}
            assert got == want


def test_zero_compact_membership_matches_defining_sets():
    pts = box(Carrier.S_ZERO, 7)
    for c in pts:
        for n in range(4):
            want = oracles.basic_set("ZERO_COMPACT", pair(c), n, 7)
            assert {pair(x) for x in pts if nbhd_member(BasicNbhd(ZC, c, n), x)} == want


@pytest.mark.parametrize(
    "b, x, expected",
    [
        (BasicNbhd(PLUS2, Elem(1, 2), 1), Elem(1, 4), True),
        (BasicNbhd(PLUS2, Elem(1, 2), 1), Elem(2, 3), False),
        (BasicNbhd(COF, ONE, 3), Elem(5, 7), True),
        (BasicNbhd(ZC, ZERO, 3), Elem(0, 2), False),
    ],
)
def test_membership_examples(b, x, expected):
    assert nbhd_member(b, x) is expected


def test_membership_carrier_mismatch():
    with pytest.raises(CarrierMismatch):
        nbhd_member(BasicNbhd(PLUS2, ONE, 0), Elem(2, 1))
    with pytest.raises(CarrierMismatch):
        BasicNbhd(PLUS2, Elem(2, 1), 0)


def test_family_validation():
    with pytest.raises(ValueError):
        FamilyId(Family.PADIC_PLUS, 4)
    with pytest.raises(ValueError):
        FamilyId(Family.COFINITE, 2)
    with pytest.raises(ValueError):
        FamilyId(Family.PADIC_PLUS, 2, Carrier.FULL)
    assert FamilyId(Family.DIAGONAL).carrier is Carrier.FULL
    assert [n for n in range(12) if is_prime(n)] == [2, 3, 5, 7, 11]


@pytest.mark.parametrize(
    "b, count, expected",
    [
        (BasicNbhd(DIAG, Elem(1, 1), 0), 3, [(1, 1), (2, 2), (3, 3)]),
        (BasicNbhd(FamilyId(Family.PADIC_PLUS, 3), Elem(0, 1), 1), 3, [(0, 1), (0, 4), (0, 7)]),
        (BasicNbhd(FamilyId(Family.DISCRETE), Elem(2, 2), 0), 5, [(2, 2)]),
        (BasicNbhd(COF, Elem(1, 1), 1), 6, [(1, 1), (0, 2), (1, 2), (2, 0), (2, 1), (2, 2)]),
        (BasicNbhd(ZC, ZERO, 2), 5, ["0", (0, 2), (1, 2), (2, 2), (0, 3)]),
        (BasicNbhd(DIAG, Elem(2, 0), 1), 3, [(2, 0), (4, 2), (5, 3)]),
    ],
)
def test_enumeration_frozen(b, count, expected):
    assert [pair(x) for x in nbhd_enumerate(b, count)] == expected


@pytest.mark.parametrize("fam, name, carrier, p", FAMILIES)
def test_enumeration_consistent_with_membership(fam, name, carrier, p):
    for c in box(fam.carrier, 3):
        for n in range(3):
            b = BasicNbhd(fam, c, n)
            got = nbhd_enumerate(b, 30)
            assert got[0] == c
            assert all(nbhd_member(b, x) for x in got)
            assert len(set(got)) == len(got)


def test_cofinite_enumeration_misses_nothing_below_frontier():
    b = BasicNbhd(COF, Elem(1, 1), 1)
    got = nbhd_enumerate(b, 40)
    frontier = max(x.cidx for x in got[1:])
    below = [x for x in box(Carrier.FULL, frontier - 1) if nbhd_member(b, x)]
    assert set(below) <= set(got)


def test_cofiniteness_examples():
    cof = nbhd_is_cofinite(BasicNbhd(ZC, ZERO, 3))
    assert isinstance(cof, Cofinite) and len(cof.complement) == 6
    cof = nbhd_is_cofinite(BasicNbhd(COF, ONE, 2))
    assert isinstance(cof, Cofinite) and len(cof.complement) == 8
    assert isinstance(nbhd_is_cofinite(BasicNbhd(FamilyId(Family.DISCRETE), ONE, 0)), NotCofinite)
    for fam in (DIAG, PLUS2, FamilyId(Family.PADIC_MINUS, 2)):
        assert isinstance(nbhd_is_cofinite(BasicNbhd(fam, ONE, 1)), NotCofinite)
    omega = FamilyId(Family.PADIC_OMEGA, 2)
    assert nbhd_is_cofinite(BasicNbhd(omega, Elem(0, 3), 0)) == Cofinite(frozenset(Elem(0, t) for t in range(3)))
    assert isinstance(nbhd_is_cofinite(BasicNbhd(omega, Elem(0, 3), 1)), NotCofinite)


@pytest.mark.parametrize("n", range(21))
def test_zero_complement_size(n):
    cof = nbhd_is_cofinite(BasicNbhd(ZC, ZERO, n))
    assert len(cof.complement) == n * (n + 1) // 2
    assert all(not nbhd_member(BasicNbhd(ZC, ZERO, n), x) for x in cof.complement)


def test_subset_examples():
    assert nbhd_subset(BasicNbhd(PLUS2, Elem(1, 2), 3), BasicNbhd(PLUS2, Elem(1, 2), 1)) == Subset()
    assert nbhd_subset(BasicNbhd(DIAG, ONE, 1), BasicNbhd(COF, ONE, 0)) == Subset()
    assert nbhd_subset(BasicNbhd(PLUS2, Elem(0, 2), 1), BasicNbhd(PLUS2, ONE, 2)) == NotSubset(Elem(0, 2))
    assert nbhd_subset(BasicNbhd(PLUS2, Elem(0, 1), 1), BasicNbhd(PLUS2, Elem(0, 1), 2)) == NotSubset(Elem(0, 3))


def test_subset_cross_family_needs_a_witness():
    ray = BasicNbhd(FamilyId(Family.DIAGONAL, carrier=Carrier.CPLUS), ONE, 0)
    row = BasicNbhd(PLUS2, ONE, 0)
    assert nbhd_subset(ray, row) == NotSubset(Elem(1, 1))
    with pytest.raises(Undecided):
        nbhd_subset(ray, row, search_depth=1)


@pytest.mark.parametrize("fam, name, carrier, p", FAMILIES)
def test_chain_monotone(fam, name, carrier, p):
    for c in box(fam.carrier, 3):
        for n in range(4):
            assert nbhd_subset(BasicNbhd(fam, c, n + 1), BasicNbhd(fam, c, n)).holds


@given(small_cplus, small_cplus, small, small, primes)
def test_padic_subset_against_enumeration(x, y, n, m, p):
    fam = FamilyId(Family.PADIC_PLUS, p)
    inner, outer = BasicNbhd(fam, x, n), BasicNbhd(fam, y, m)
    verdict = nbhd_subset(inner, outer)
    sample = nbhd_enumerate(inner, 60)
    if verdict.holds:
        assert all(nbhd_member(outer, u) for u in sample)
    else:
        assert nbhd_member(inner, verdict.witness) and not nbhd_member(outer, verdict.witness)


def test_separation_examples():
    sep = separate(PLUS2, Elem(1, 2), Elem(1, 4), 8)
    assert isinstance(sep, SeparatedBy) and sep.first.n == sep.second.n == 2
    sep = separate(PLUS2, ONE, Elem(1, 1), 8)
    assert sep.first.n == sep.second.n == 0
    assert separate(COF, ONE, Elem(0, 1), 10) == NotSeparatedWithinBound(10)
    assert isinstance(separate(COF, ONE, Elem(0, 1), 3, prove=True), ProvablyInseparable)
    assert isinstance(separate(DIAG, ONE, Elem(1, 1), 3, prove=True), ProvablyInseparable)
    assert isinstance(separate(DIAG, ONE, Elem(1, 0), 3), SeparatedBy)
    with pytest.raises(ValueError):
        separate(PLUS2, ONE, ONE, 3)


@given(small_cplus, small_cplus, primes)
def test_padic_separation_disjoint_by_enumeration(x, y, p):
    if x == y:
        return
    sep = separate(FamilyId(Family.PADIC_PLUS, p), x, y, 0)
    assert basics_disjoint(sep.first, sep.second)
    assert not set(nbhd_enumerate(sep.first, 50)) & set(nbhd_enumerate(sep.second, 50))
    assert p**sep.first.n > (abs(x.j - y.j) if x.i == y.i else -1)


def test_disjointness_undecided_across_families():
    with pytest.raises(Undecided):
        basics_disjoint(BasicNbhd(COF, ONE, 0), BasicNbhd(DIAG, ONE, 0))


@pytest.mark.parametrize("fam, name, carrier, p", FAMILIES)
def test_t1_everywhere(fam, name, carrier, p):
    for x, y in itertools.combinations(box(fam.carrier, 4), 2):
        assert t1_check(fam, x, y)
        n = excluding_param(fam, x, y)
        assert not nbhd_member(BasicNbhd(fam, x, n), y)
        assert n == 0 or nbhd_member(BasicNbhd(fam, x, n - 1), y)


def test_t1_examples():
    assert t1_check(DIAG, ONE, Elem(2, 2)) and excluding_param(DIAG, ONE, Elem(2, 2)) == 2
    assert t1_check(COF, ONE, Elem(1, 1)) and excluding_param(COF, ONE, Elem(1, 1)) == 1
    assert t1_check(ZC, ZERO, Elem(0, 2)) and excluding_param(ZC, ZERO, Elem(0, 2)) == 3


def test_compactness_certificates():
    assert isinstance(compactness_certificate(ZC, 6), CompactByCofinite)
    assert compactness_certificate(ZC, 6).anchor == "0"
    for c in (Carrier.FULL, Carrier.CPLUS):
        cert = compactness_certificate(FamilyId(Family.COFINITE, carrier=c), 5)
        assert isinstance(cert, CompactByCofinite) and cert.anchor == "every point"
    for fam in (PLUS2, FamilyId(Family.PADIC_MINUS, 2), FamilyId(Family.PADIC_OMEGA, 2), DIAG, FamilyId(Family.DISCRETE)):
        assert isinstance(compactness_certificate(fam, 3), NoCertificate)


def test_finite_members():
    assert finite_members(BasicNbhd(ZC, Elem(1, 2), 4)) == (Elem(1, 2),)
    assert finite_members(BasicNbhd(ZC, ZERO, 4)) is None


def test_dualize_examples():
    b = BasicNbhd(PLUS2, Elem(1, 3), 2)
    d = dualize_base(b)
    assert d.family.family is Family.PADIC_MINUS and d.center == Elem(3, 1) and d.n == 2
    assert nbhd_member(b, Elem(1, 7)) and nbhd_member(d, Elem(7, 1))
    assert dualize_base(BasicNbhd(PLUS2, ONE, 0)).center == ONE
    assert dualize_base(d) == b
    with pytest.raises(ValueError):
        dualize_base(BasicNbhd(COF, ONE, 0))


@given(small_cplus, small_cplus, st.integers(0, 4), primes)
def test_dualize_commutes_with_membership(c, x, n, p):
    b = BasicNbhd(FamilyId(Family.PADIC_PLUS, p), c, n)
    assert nbhd_member(b, x) == nbhd_member(dualize_base(b), flip(x))


@pytest.mark.parametrize("fam, name, carrier, p", FAMILIES)
def test_basic_json_round_trip(fam, name, carrier, p):
    b = BasicNbhd(fam, box(fam.carrier, 2)[-1], 3)
    assert basic_from_json(b.to_json()) == b
    assert basic_from_json(BasicNbhd(ZC, ZERO, 1).to_json()) == BasicNbhd(ZC, ZERO, 1)
