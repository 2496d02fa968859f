"""Baumslag-Solitar groups ``H(l, m) = <a, b | b^-1 a^l b = a^m>``.

Every element has a unique normal form

    a^x0  b^e1 a^x1  b^e2 a^x2  ...  b^en a^xn

where ``0 <= xi < |l|`` after ``b^-1``, ``0 <= xi < m`` after ``b``, and no
``b^-1 b`` or ``b b^-1`` pair survives.  It is built by reading the word
from the right and pushing a-powers leftwards with

    b^-1 a^(l q + r)  ->  a^(m q) b^-1 a^r
    b    a^(m q + r)  ->  a^(l q) b    a^r
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .errors import DomainError
from .words import GenWord

__all__ = [
    "BsPresentation",
    "BsNormalForm",
    "bs_normal_form",
    "bs_equal",
    "power_of_a",
    "power_of_b",
    "transport_exponent",
]


@dataclass(frozen=True)
class BsPresentation:
    l: int
    m: int

    def __post_init__(self):
        if not abs(self.l) > self.m > 0:
            raise DomainError(f"H(l, m) needs |l| > m > 0, got l={self.l}, m={self.m}")

    def relator(self) -> GenWord:
        return GenWord((("b", -1), ("a", self.l), ("b", 1), ("a", -self.m)))

    def __str__(self):
        return f"H({self.l},{self.m})"


@dataclass(frozen=True)
class BsNormalForm:
    head: int = 0
    tail: tuple[tuple[int, int], ...] = ()

    def is_identity(self) -> bool:
        return self.head == 0 and not self.tail

    def b_length(self) -> int:
        return len(self.tail)

    def to_word(self) -> GenWord:
        syllables = [("a", self.head)]
        for eps, x in self.tail:
            syllables += [("b", eps), ("a", x)]
        return GenWord(tuple(syllables))

    def __str__(self):
        return str(self.to_word())


def _check_base_word(w: GenWord):
    if "t" in w.generators():
        raise DomainError(f"word {w} is not a word in a and b")


def bs_normal_form(pres: BsPresentation, w: GenWord) -> BsNormalForm:
    _check_base_word(w)
    l, m = pres.l, pres.m
    modulus = {-1: abs(l), 1: m}
    # head is the running leading a-exponent; rtail holds the tail reversed
    head = 0
    rtail: list[tuple[int, int]] = []
    for gen, exp in reversed(w.syllables):
        if gen == "a":
            head += exp
            continue
        eps = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            r = head % modulus[eps]
            if eps == -1:
                q = (head - r) // l
                pushed = m * q
            else:
                q = (head - r) // m
                pushed = l * q
            if r == 0 and rtail and rtail[-1][0] == -eps:
                # b^eps b^-eps cancels once the a-power between them is gone
                head = pushed + rtail.pop()[1]
            else:
                rtail.append((eps, r))
                head = pushed
    return BsNormalForm(head, tuple(reversed(rtail)))


def bs_equal(pres: BsPresentation, w1: GenWord, w2: GenWord) -> bool:
    return bs_normal_form(pres, w1 * w2.inverse()).is_identity()


def power_of_a(pres: BsPresentation, w) -> int | None:
    """Return ``j`` with ``w = a^j`` in ``H(l, m)``, else ``None``."""
    nf = w if isinstance(w, BsNormalForm) else bs_normal_form(pres, w)
    return nf.head if not nf.tail else None


def power_of_b(pres: BsPresentation, w) -> int | None:
    """Return ``p`` with ``w = b^p`` in ``H(l, m)``, else ``None``."""
    nf = w if isinstance(w, BsNormalForm) else bs_normal_form(pres, w)
    if nf.head != 0 or any(x != 0 for _, x in nf.tail):
        return None
    signs = {eps for eps, _ in nf.tail}
    if len(signs) > 1:
        return None
    return sum(eps for eps, _ in nf.tail)


def transport_exponent(pres: BsPresentation, p: int, r: int) -> int | None:
    """The exponent ``s`` with ``b^-p a^r b^p = a^s``, or ``None``.

    With ``d = gcd(l, m)``, ``l = l1 d`` and ``m = m1 d``: for ``p > 0`` we
    need ``r = l1^p d x`` and then ``s = m1^p d x``; for ``p < 0`` the roles
    of ``l1`` and ``m1`` swap.
    """
    if r == 0:
        raise DomainError("transport_exponent needs r != 0")
    if p == 0:
        return r
    d = gcd(pres.l, pres.m)
    l1, m1 = pres.l // d, pres.m // d
    src, dst = (l1, m1) if p > 0 else (m1, l1)
    unit = src ** abs(p) * d
    if r % unit:
        return None
    return dst ** abs(p) * d * (r // unit)
