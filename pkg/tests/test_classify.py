import itertools
import json
from fractions import Fraction

import pytest

from brunner_groups.brunner import GPresentation, abelianization
from brunner_groups.classify import (
    Condition,
    Tag,
    Verdict,
    census,
    classify_advisory,
    classify_pair,
    is_non_hopfian,
    is_residually_finite,
    is_residually_p,
)
from brunner_groups.errors import DomainError


def G(l, m, k):
    return GPresentation(l, m, k)


@pytest.mark.parametrize(
    "p1, p2, tag, condition",
    [
        ((18, 2, 2), (18, 2, 6), Tag.MUTUAL_EPI_NOT_ISO, None),
        ((7, 3, 5), (7, 3, 5), Tag.ISOMORPHIC, Condition.C2_1),
        ((4, 2, 2), (4, 2, 4), Tag.ISOMORPHIC, Condition.C2_2),
        ((2, 1, 1), (2, 1, 4), Tag.ISOMORPHIC, Condition.C2_3),
        ((2, 1, 1), (2, 1, 3), Tag.DISTINCT, None),
        ((12, 3, 3), (12, 3, 6), Tag.MUTUAL_EPI_NOT_ISO, None),
        ((18, 2, 2), (12, 3, 3), Tag.DISTINCT, None),
        ((18, 2, 4), (18, 2, 36), Tag.ISOMORPHIC, Condition.C2_2),
        ((-6, 2, 6), (-6, 2, 2), Tag.ISOMORPHIC, Condition.C2_2),
        ((12, 2, 2), (12, 2, 4), Tag.DISTINCT, None),
        ((6, 4, 2, ), (6, 4, 3), Tag.DISTINCT, None),
        ((6, 1, 2), (6, 1, 9), Tag.ISOMORPHIC, Condition.C2_3),
    ],
)
def test_classify_pair(p1, p2, tag, condition):
    verdict = classify_pair(G(*p1), G(*p2))
    assert verdict.tag is tag
    assert verdict.condition is condition
    assert verdict.reason


def test_verdict_invariant():
    with pytest.raises(ValueError):
        Verdict(Tag.DISTINCT, Condition.C2_1)
    with pytest.raises(ValueError):
        Verdict(Tag.ISOMORPHIC)


def test_classify_rejects_negative_k():
    with pytest.raises(DomainError):
        classify_pair(G(18, 2, -2), G(18, 2, 6))


def test_counterexample_groups_are_non_hopfian():
    assert is_non_hopfian(G(18, 2, 2))
    assert is_non_hopfian(G(18, 2, 6))


@pytest.mark.parametrize(
    "pres, expected", [((18, 2, 2), True), ((2, 1, 1), False), ((12, 2, 2), False),
                       ((18, 2, 3), False), ((12, 3, 3), True), ((-18, 2, 4), True)],
)
def test_is_non_hopfian(pres, expected):
    assert is_non_hopfian(G(*pres)) is expected


def test_is_residually_finite():
    assert is_residually_finite(2, 2, 1)
    assert not is_residually_finite(18, 2, 2)
    assert is_residually_finite(-2, 2, 1)
    with pytest.raises(DomainError):
        is_residually_finite(1, 2, 1)


@pytest.mark.parametrize(
    "args, expected",
    [((4, 4, 2, 2), True), ((-4, 4, 8, 2), False), ((2, 1, 1, 2), False), ((1, 1, 1, 3), True),
     ((-4, 4, 4, 2), True), ((-3, 3, 1, 3), False), ((9, 9, 6, 3), False), ((9, 9, 27, 3), True)],
)
def test_is_residually_p(args, expected):
    assert is_residually_p(*args) is expected


def test_is_residually_p_needs_prime():
    with pytest.raises(DomainError):
        is_residually_p(4, 4, 2, 4)


def test_advisory_boundary():
    assert classify_advisory((2, 2, 1), (2, 2, 3)).tag is Tag.OPEN
    assert classify_advisory((2, 2, 1), (2, 2, 1)).tag is Tag.ISOMORPHIC
    assert classify_advisory((3, 3, 1), (2, 2, 1)).tag is Tag.OPEN
    assert classify_advisory((-2, 2, 1), (2, 2, 1)).tag is Tag.DISTINCT
    assert classify_advisory((-2, 2, 1), (-3, 3, 1)).tag is Tag.DISTINCT
    assert classify_advisory((2, 2, 1), (2, 1, 1)).tag is Tag.DISTINCT
    assert classify_advisory((18, 2, 2), (18, 2, 6)).tag is Tag.MUTUAL_EPI_NOT_ISO


def _box(l_max, k_max):
    for size in range(2, l_max + 1):
        for l in (size, -size):
            for m in range(1, size):
                yield l, m, [G(l, m, k) for k in range(1, k_max + 1)]


def test_symmetry_transitivity_and_abelianization_on_box():
    for l, m, groups in _box(12, 12):
        iso = {}
        for g1, g2 in itertools.product(groups, groups):
            v12, v21 = classify_pair(g1, g2), classify_pair(g2, g1)
            assert v12.tag is v21.tag
            iso[g1.k, g2.k] = v12.tag is Tag.ISOMORPHIC
            if v12.tag is Tag.ISOMORPHIC:
                assert abelianization(g1) == abelianization(g2)
            if v12.tag is Tag.MUTUAL_EPI_NOT_ISO:
                assert m > 1
        ks = range(1, 13)
        for k in ks:
            assert iso[k, k]
        for a, b, c in itertools.product(ks, ks, ks):
            if iso[a, b] and iso[b, c]:
                assert iso[a, c]


def test_mutual_epi_requires_non_hopfian_regime():
    for row in census(12, 12).mutual_epi_rows():
        assert is_non_hopfian(G(row.l, row.m, row.k1))
        assert is_non_hopfian(G(row.l, row.m, row.k2))


def test_census_contains_counterexample():
    c = census(18, 6)
    row = c.find(18, 2, 2, 6)
    assert row is not None and row.verdict.tag is Tag.MUTUAL_EPI_NOT_ISO


def test_census_11_has_no_mutual_epimorphisms():
    assert census(11, 6).mutual_epi_rows() == []


def test_census_12_has_12_3_3_6():
    rows = census(12, 6).mutual_epi_rows()
    assert [(r.l, r.m, r.k1, r.k2) for r in rows] == [(-12, 3, 3, 6), (12, 3, 3, 6)]


def test_census_orderings_disagree_on_first_row():
    orders = census(18, 6).orderings()
    first = {name: (abs(rows[0].l), rows[0].m, rows[0].k1, rows[0].k2) for name, rows in orders.items()}
    assert first["abs_l"] == (12, 3, 3, 6)
    assert first["m_then_abs_s"] == (18, 2, 2, 6)
    assert first["k_sum"][2:] == (2, 6)


def test_census_lists_only_off_diagonal_pairs():
    c = census(4, 3)
    assert all(r.k1 < r.k2 for r in c.rows)
    # |l| in {2,3,4}, both signs: 2 * (1 + 2 + 3) = 12 (l, m) values, 3 pairs each
    assert len(c.rows) == 36
    assert all(r.verdict.condition is not Condition.C2_1 for r in c.rows)


def test_census_formats():
    c = census(12, 6)
    lines = c.to_csv().splitlines()
    assert lines[0] == "l,m,k1,k2,verdict,condition,reason"
    assert len(lines) == len(c.rows) + 1
    records = [json.loads(line) for line in c.to_jsonl().splitlines()]
    assert records[0].keys() == {"l", "m", "k1", "k2", "verdict", "condition", "reason"}
    assert c.to_csv() == census(12, 6).to_csv()


def test_census_parallel_matches_serial():
    assert census(9, 8, workers=2).rows == census(9, 8, workers=1).rows


def test_census_bounds():
    with pytest.raises(DomainError):
        census(101, 3)


def test_census_row_ratio():
    row = census(18, 6).find(18, 2, 2, 6)
    assert row.s == Fraction(9)
