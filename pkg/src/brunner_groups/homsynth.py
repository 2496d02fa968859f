"""Explicit homomorphisms between groups ``G(l, m; k1)`` and ``G(l, m; k2)``.

All maps have the shape ``a -> a^r, t -> b^p t`` (with ``b -> b``).  Such a
map is a homomorphism exactly when ``b^-p a^(r k1) b^p = a^k2`` holds in the
target's base group, which is what the constructions below arrange.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import is_n_number_ratio, power_ratio_exponent
from .brunner import GPresentation, GroupMap
from .errors import DomainError
from .words import GenWord

__all__ = [
    "EpiRecipe",
    "synth_iso_2_2",
    "synth_epi_m1",
    "synth_epi_item3",
    "synth_epi_pair",
    "generated_exponent_fixpoint",
]


def _shape_map(source: GPresentation, target: GPresentation, r: int, p: int) -> GroupMap:
    return GroupMap(
        source,
        target,
        GenWord((("a", r),)),
        GenWord((("b", p), ("t", 1))),
    )


@dataclass(frozen=True)
class EpiRecipe:
    """``a -> a^r, t -> b^p t`` from ``G(l,m;k_source)`` to ``G(l,m;k_target)``.

    ``base`` is ``l`` when ``m = 1`` and ``l/m`` otherwise; the recipe
    satisfies ``r * k_source == base**p * k_target``.
    """

    l: int
    m: int
    k_source: int
    k_target: int
    r: int
    p: int
    base: int

    def __post_init__(self):
        if self.r == 0:
            raise DomainError("recipe exponent r must be nonzero")
        if self.r * self.k_source != self.base**self.p * self.k_target:
            raise DomainError(f"recipe {self} breaks r*k_source = base^p*k_target")

    @property
    def source(self) -> GPresentation:
        return GPresentation(self.l, self.m, self.k_source)

    @property
    def target(self) -> GPresentation:
        return GPresentation(self.l, self.m, self.k_target)

    def to_map(self) -> GroupMap:
        return _shape_map(self.source, self.target, self.r, self.p)

    def to_record(self) -> dict:
        return {
            "l": self.l,
            "m": self.m,
            "k1": self.k_source,
            "k2": self.k_target,
            "r": self.r,
            "p": self.p,
            "direction": f"{self.source} -> {self.target}",
        }


def synth_iso_2_2(l: int, m: int, k1: int, k2: int) -> tuple[GroupMap, GroupMap]:
    """Mutually inverse isomorphisms when ``k1/k2 = ±(l/m)^p``.

    Forward is ``a -> a^eps, t -> b^p t``; the inverse is
    ``a -> a^eps, t -> b^-p t``.
    """
    if m <= 1:
        raise DomainError("power-shift isomorphisms need m > 1")
    d = math.gcd(l, m)
    if k1 % d or k2 % d:
        raise DomainError(f"power-shift isomorphisms need gcd(l,m)={d} to divide k1={k1} and k2={k2}")
    found = power_ratio_exponent(Fraction(k1, k2), Fraction(l, m))
    if found is None:
        raise DomainError(f"k1/k2 = {Fraction(k1, k2)} is not a nonzero power of ±{Fraction(l, m)}")
    eps, p = found
    g1, g2 = GPresentation(l, m, k1), GPresentation(l, m, k2)
    forward = GroupMap(g1, g2, GenWord((("a", eps),)), GenWord((("b", p), ("t", 1))))
    inverse = GroupMap(g2, g1, GenWord((("a", eps),)), GenWord((("b", -p), ("t", 1))))
    return forward, inverse


def _recipe(l: int, m: int, k1: int, k2: int, base: int) -> EpiRecipe:
    # k1/k2 = y/x in lowest terms, so x*k1 = y*k2 with x, y base-numbers
    q = Fraction(k1, k2)
    x, y = q.denominator, q.numerator
    p, power = 1, base
    while power % y:
        p += 1
        power *= base
    z = power // y
    return EpiRecipe(l, m, k1, k2, r=x * z, p=p, base=base)


def _check_pair(l, m, k1, k2):
    GPresentation(l, m, k1)
    if k1 <= 0 or k2 <= 0:
        raise DomainError("k1 and k2 must be positive")


def synth_epi_m1(l: int, k1: int, k2: int) -> EpiRecipe:
    """Epimorphism ``G(l,1;k1) -> G(l,1;k2)`` when ``k1/k2`` is an l-number."""
    _check_pair(l, 1, k1, k2)
    if not is_n_number_ratio(Fraction(k1, k2), l):
        raise DomainError(f"k1/k2 = {Fraction(k1, k2)} is not an n-number for n={l}")
    return _recipe(l, 1, k1, k2, l)


def synth_epi_item3(l: int, m: int, k1: int, k2: int) -> EpiRecipe:
    """Epimorphism ``G(l,m;k1) -> G(l,m;k2)`` for ``l = m s`` with ``gcd(m, s) = 1``."""
    _check_pair(l, m, k1, k2)
    if l % m:
        raise DomainError(f"m={m} does not divide l={l}")
    s = l // m
    if math.gcd(s, m) != 1:
        raise DomainError(f"s = l/m = {s} and m = {m} are not coprime")
    if k1 % m or k2 % m:
        raise DomainError(f"m={m} must divide k1={k1} and k2={k2}")
    if not is_n_number_ratio(Fraction(k1, k2), s):
        raise DomainError(f"k1/k2 = {Fraction(k1, k2)} is not an n-number for n={s}")
    return _recipe(l, m, k1, k2, s)


def synth_epi_pair(l: int, m: int, k1: int, k2: int) -> tuple[EpiRecipe, EpiRecipe]:
    """Epimorphisms in both directions, choosing the construction by ``m``."""
    if m == 1:
        return synth_epi_m1(l, k1, k2), synth_epi_m1(l, k2, k1)
    return synth_epi_item3(l, m, k1, k2), synth_epi_item3(l, m, k2, k1)


def generated_exponent_fixpoint(l: int, m: int, r: int, trace: list | None = None) -> int:
    """Smallest ``g`` this closure rule reaches with ``a^g`` in ``<a^r, b>``.

    Starting from ``g = |r|`` the rule ``b^-1 a^lcm(g,|l|) b = a^(lcm(g,|l|) m/|l|)``
    puts a new a-power in the subgroup, and ``g`` is replaced by the gcd of
    the two.  A result of 1 means ``a^r`` and ``b`` generate ``H(l, m)``.
    """
    if not abs(l) > m > 0:
        raise DomainError(f"needs |l| > m > 0, got l={l}, m={m}")
    if r == 0:
        raise DomainError("r must be nonzero")
    g = abs(r)
    if trace is not None:
        trace.append(g)
    while True:
        nxt = math.gcd(g, math.lcm(g, abs(l)) * m // abs(l))
        if nxt == g:
            return g
        assert nxt < g
        g = nxt
        if trace is not None:
            trace.append(g)
