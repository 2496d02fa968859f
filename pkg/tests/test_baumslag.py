import random

import pytest

from brunner_groups.baumslag import (
    BsNormalForm,
    BsPresentation,
    bs_equal,
    bs_normal_form,
    power_of_a,
    power_of_b,
    transport_exponent,
)
from brunner_groups.errors import DomainError
from brunner_groups.words import GenWord, parse

from conftest import affine_image, random_word

PRESENTATIONS = [(18, 2), (12, 3), (2, 1), (-4, 3), (6, 4), (-9, 6)]


def relator_conjugate(pres, rng):
    g = random_word(rng, gens="ab", max_syllables=4, max_exp=6)
    return g * pres.relator() ** rng.choice([1, -1]) * g.inverse()


def check_normal_form(pres, nf):
    for (eps, x), nxt in zip(nf.tail, nf.tail[1:] + ((None, None),)):
        bound = abs(pres.l) if eps == -1 else pres.m
        assert 0 <= x < bound
        if x == 0 and nxt[0] is not None:
            assert nxt[0] == eps


def test_presentation_validation():
    with pytest.raises(DomainError):
        BsPresentation(2, 2)
    with pytest.raises(DomainError):
        BsPresentation(3, 0)


def test_defining_relation():
    assert bs_normal_form(BsPresentation(2, 1), parse("b^-1 a^2 b")) == BsNormalForm(1)


def test_pinch_in_h_18_2():
    assert bs_normal_form(BsPresentation(18, 2), parse("b^-1 a^54 b")) == BsNormalForm(6)


def test_pinch_agrees_with_hand_rewriting():
    # b^-1 a^54 b = (b^-1 a^18 b)^3 = (a^2)^3, one relator application per factor
    pres = BsPresentation(18, 2)
    by_hand = (pres.relator() * parse("a^2")) ** 3
    assert by_hand == parse("b^-1 a^18 b") ** 3
    assert bs_equal(pres, parse("b^-1 a^54 b"), parse("a^6"))
    assert affine_image(18, 2, parse("b^-1 a^54 b")) == affine_image(18, 2, parse("a^6"))


def test_empty_word():
    assert bs_normal_form(BsPresentation(3, 2), GenWord()) == BsNormalForm()


def test_irreducible_word_is_its_own_normal_form():
    pres = BsPresentation(18, 2)
    nf = bs_normal_form(pres, parse("a^3 b^-1 a b a b^2"))
    assert nf == BsNormalForm(3, ((-1, 1), (1, 1), (1, 0), (1, 0)))
    assert nf.to_word() == parse("a^3 b^-1 a b a b^2")


def test_negative_l_residues():
    pres = BsPresentation(-4, 3)
    # b^-1 a^-4 b = a^3, so b^-1 a^5 = a^-3 b^-1 a
    nf = bs_normal_form(pres, parse("b^-1 a^5"))
    assert nf == BsNormalForm(-3, ((-1, 1),))
    assert bs_equal(pres, parse("b^-1 a^-4 b"), parse("a^3"))


def test_rejects_stable_letter():
    with pytest.raises(DomainError):
        bs_normal_form(BsPresentation(2, 1), parse("a t"))


def test_bs_equal_examples():
    pres = BsPresentation(18, 2)
    assert bs_equal(pres, pres.relator(), GenWord())
    assert not bs_equal(pres, parse("a"), parse("b"))


@pytest.mark.parametrize(
    "text, expected_a, expected_b",
    [("a^5", 5, None), ("b^-1 a^18 b", 2, None), ("b^-1 a b", None, None),
     ("b^3", None, 3), ("a^2 b^-2 a^-2", None, None), ("", 0, 0)],
)
def test_powers(text, expected_a, expected_b):
    pres = BsPresentation(18, 2)
    assert power_of_a(pres, parse(text)) == expected_a
    assert power_of_b(pres, parse(text)) == expected_b


def test_power_of_b_sees_through_relations():
    pres = BsPresentation(18, 2)
    assert power_of_b(pres, parse("a^18 b a^-2 b")) == 2
    assert power_of_b(pres, parse("b a^2 b^-1 b")) is None


@pytest.mark.parametrize("l, m", PRESENTATIONS)
def test_normal_form_unique_under_relator_insertion(l, m):
    rng = random.Random(l * 1000 + m)
    pres = BsPresentation(l, m)
    for _ in range(300):
        w = random_word(rng, gens="ab", max_exp=30)
        nf = bs_normal_form(pres, w)
        check_normal_form(pres, nf)
        cut = rng.randint(0, len(w))
        left, right = GenWord(w.syllables[:cut]), GenWord(w.syllables[cut:])
        padded = left * relator_conjugate(pres, rng) * right * relator_conjugate(pres, rng)
        assert bs_normal_form(pres, padded) == nf


@pytest.mark.parametrize("l, m", PRESENTATIONS)
def test_normal_form_is_idempotent_and_affine_consistent(l, m):
    rng = random.Random(7 * l + m)
    pres = BsPresentation(l, m)
    for _ in range(300):
        w = random_word(rng, gens="ab", max_exp=30)
        nf = bs_normal_form(pres, w)
        assert bs_normal_form(pres, nf.to_word()) == nf
        assert affine_image(l, m, nf.to_word()) == affine_image(l, m, w)
        assert bs_equal(pres, w * w.inverse(), GenWord())


def test_affine_faithful_when_m_is_one():
    # BS(l, 1) embeds in the affine group, so here the converse also holds
    rng = random.Random(3)
    pres = BsPresentation(3, 1)
    for _ in range(300):
        u = random_word(rng, gens="ab", max_syllables=5, max_exp=4)
        v = random_word(rng, gens="ab", max_syllables=5, max_exp=4)
        assert bs_equal(pres, u, v) == (affine_image(3, 1, u) == affine_image(3, 1, v))


@pytest.mark.parametrize(
    "l, m, p, r, expected",
    [(18, 2, 1, 54, 6), (18, 2, 0, 5, 5), (18, 2, 1, 4, None), (18, 2, 2, 162, 2),
     (18, 2, -1, 2, 18), (-4, 3, 1, -8, 6), (6, 4, 2, 18, 8)],
)
def test_transport_exponent_examples(l, m, p, r, expected):
    assert transport_exponent(BsPresentation(l, m), p, r) == expected


@pytest.mark.parametrize("l, m", [(18, 2), (12, 3), (2, 1), (-4, 3)])
def test_transport_exponent_matches_normal_forms(l, m):
    pres = BsPresentation(l, m)
    for p in range(-3, 4):
        for r in range(-200, 201):
            if r == 0:
                continue
            conj = GenWord((("b", -p), ("a", r), ("b", p)))
            assert transport_exponent(pres, p, r) == power_of_a(pres, conj)


def test_transport_exponent_rejects_zero():
    with pytest.raises(DomainError):
        transport_exponent(BsPresentation(2, 1), 1, 0)
