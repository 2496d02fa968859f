"""The groups ``G(l, m; k) = <a, t | t^-1 a^-k t a^l t^-1 a^k t = a^m>``.

Adding ``b = t^-1 a^k t`` shows ``G(l, m; k)`` is an HNN extension of
``H(l, m)`` with stable letter ``t`` and associated cyclic subgroups
``<a^k>`` and ``<b>``.  Words may use all three letters; ``b`` is read as
the base letter of ``H(l, m)``.  The word problem is solved by Britton
reduction: pinches ``t^-1 a^(kj) t -> b^j`` and ``t b^j t^-1 -> a^(kj)``
are removed until none is left, base segments being kept in normal form.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from .baumslag import BsPresentation, bs_normal_form, power_of_a, power_of_b
from .errors import DomainError
from .words import GenWord, exponent_sum

__all__ = [
    "GPresentation",
    "GroupMap",
    "AbelianInvariant",
    "relator",
    "g_reduce",
    "g_is_identity",
    "g_equal",
    "abelianization",
    "ab_image",
    "apply_map",
    "verify_homomorphism",
    "normalize_k_sign",
    "QuotientReport",
    "finite_quotient_scan",
]


@dataclass(frozen=True)
class GPresentation:
    """Parameters of ``G(l, m; k)``.

    ``|l| > m > 0`` is enforced.  ``k`` only has to be nonzero so that the
    sign normalization can talk about ``G(l, m; -k)``; :attr:`canonical`
    tells whether ``k > 0``.
    """

    l: int
    m: int
    k: int

    def __post_init__(self):
        if not abs(self.l) > self.m > 0:
            raise DomainError(f"G(l,m;k) needs |l| > m > 0, got l={self.l}, m={self.m}")
        if self.k == 0:
            raise DomainError("G(l,m;k) needs k != 0")

    @property
    def canonical(self) -> bool:
        return self.k > 0

    @property
    def base(self) -> BsPresentation:
        return BsPresentation(self.l, self.m)

    @classmethod
    def parse(cls, text: str) -> "GPresentation":
        try:
            l, m, k = (int(part) for part in text.split(","))
        except ValueError:
            raise DomainError(f"expected a triple l,m,k, got {text!r}") from None
        return cls(l, m, k)

    def __str__(self):
        return f"G({self.l},{self.m};{self.k})"


def relator(pres: GPresentation) -> GenWord:
    k, l, m = pres.k, pres.l, pres.m
    return GenWord(
        (("t", -1), ("a", -k), ("t", 1), ("a", l), ("t", -1), ("a", k), ("t", 1), ("a", -m))
    )


def _normalize_segment(pres, segment: GenWord) -> GenWord:
    return bs_normal_form(pres.base, segment).to_word()


def g_reduce(pres: GPresentation, w: GenWord) -> GenWord:
    """A t-reduced word equal to ``w`` in ``G(l, m; k)``.

    The word is scanned left to right keeping a stack of base segments
    separated by single stable letters.  Each new stable letter is checked
    against the previous one for a pinch before it is pushed, so no pinch
    survives and the output has minimal t-length.
    """
    k = pres.k
    segments: list[GenWord] = [GenWord()]
    signs: list[int] = []
    for gen, exp in w.syllables:
        if gen != "t":
            segments[-1] = segments[-1] * GenWord(((gen, exp),))
            continue
        eps = 1 if exp > 0 else -1
        for _ in range(abs(exp)):
            nf = bs_normal_form(pres.base, segments[-1])
            replacement = None
            if signs and signs[-1] == -eps:
                if eps == 1:
                    j = power_of_a(pres.base, nf)
                    if j is not None and j % k == 0:
                        replacement = GenWord((("b", j // k),))
                else:
                    j = power_of_b(pres.base, nf)
                    if j is not None:
                        replacement = GenWord((("a", k * j),))
            if replacement is not None:
                segments.pop()
                signs.pop()
                segments[-1] = segments[-1] * replacement
            else:
                segments[-1] = nf.to_word()
                signs.append(eps)
                segments.append(GenWord())
    out = _normalize_segment(pres, segments[0])
    for eps, seg in zip(signs, segments[1:]):
        out = out * GenWord((("t", eps),)) * _normalize_segment(pres, seg)
    return out


def g_is_identity(pres: GPresentation, w: GenWord) -> bool:
    # reduced output has normalized base segments, so identity reduces to ''
    return not g_reduce(pres, w)


def g_equal(pres: GPresentation, w1: GenWord, w2: GenWord) -> bool:
    return g_is_identity(pres, w1 * w2.inverse())


@dataclass(frozen=True)
class AbelianInvariant:
    """The abelianization ``Z + Z/torsion``; the free part is carried by t."""

    torsion: int

    def __str__(self):
        return f"Z + Z/{self.torsion}"


def abelianization(pres: GPresentation) -> AbelianInvariant:
    return AbelianInvariant(abs(pres.l - pres.m))


def ab_image(pres: GPresentation, w: GenWord) -> tuple[int, int]:
    """Image of ``w`` in ``Z/|l-m| + Z`` as (a-residue, t-exponent sum).

    ``b`` contributes ``k`` to the a-part since ``b = t^-1 a^k t``.
    """
    torsion = abelianization(pres).torsion
    a_part = exponent_sum(w, "a") + pres.k * exponent_sum(w, "b")
    return a_part % torsion, exponent_sum(w, "t")


@dataclass(frozen=True)
class GroupMap:
    """A candidate homomorphism given by the images of ``a`` and ``t``."""

    source: GPresentation
    target: GPresentation
    image_a: GenWord
    image_t: GenWord

    def to_record(self) -> dict:
        return {
            "source": [self.source.l, self.source.m, self.source.k],
            "target": [self.target.l, self.target.m, self.target.k],
            "image_a": str(self.image_a),
            "image_t": str(self.image_t),
        }

    @classmethod
    def from_record(cls, record: dict) -> "GroupMap":
        from .words import parse

        return cls(
            GPresentation(*record["source"]),
            GPresentation(*record["target"]),
            parse(record["image_a"]),
            parse(record["image_t"]),
        )


def apply_map(phi: GroupMap, w: GenWord) -> GenWord:
    """Image of a source word; a source ``b`` is expanded as ``t^-1 a^k t``."""
    image_b = phi.image_t.inverse() * phi.image_a ** phi.source.k * phi.image_t
    images = {"a": phi.image_a, "b": image_b, "t": phi.image_t}
    out = GenWord()
    for gen, exp in w.syllables:
        out = out * images[gen] ** exp
    return out


def relator_image(phi: GroupMap) -> GenWord:
    return g_reduce(phi.target, apply_map(phi, relator(phi.source)))


def verify_homomorphism(phi: GroupMap) -> bool:
    return not relator_image(phi)


def normalize_k_sign(l: int, m: int, k: int) -> tuple[GPresentation, GroupMap]:
    """``G(l, m; k)`` with ``k < 0`` is isomorphic to ``G(l, m; -k)``.

    Returns the canonical presentation and the witness ``a -> a^-1, t -> t``
    from the given group onto it.  The same assignment read backwards is
    the inverse map.
    """
    if k > 0:
        raise DomainError(f"k = {k} is already positive")
    source = GPresentation(l, m, k)
    target = GPresentation(l, m, -k)
    witness = GroupMap(source, target, GenWord((("a", -1),)), GenWord((("t", 1),)))
    return target, witness


# --- finite quotients -------------------------------------------------------


@dataclass
class QuotientReport:
    degree: int
    total_homs: int
    all_cyclic: bool
    witness: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def witness_cycles(self):
        if self.witness is None:
            return None
        return [cycle_string(p) for p in self.witness]

    def to_record(self) -> dict:
        return {
            "degree": self.degree,
            "total_homs": self.total_homs,
            "all_cyclic": self.all_cyclic,
            "witness": self.witness_cycles(),
        }

    def __str__(self):
        lines = [
            f"degree: {self.degree}",
            f"total_homs: {self.total_homs}",
            f"all_cyclic: {str(self.all_cyclic).lower()}",
        ]
        if self.witness is not None:
            alpha, tau = self.witness_cycles()
            lines.append(f"witness: a -> {alpha}, t -> {tau}")
        return "\n".join(lines)


def cycle_string(perm) -> str:
    """Cycle notation on points ``1..n``, e.g. ``(1 2)(3 4 5)``."""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        nxt = perm[start]
        while nxt != start:
            cycle.append(nxt)
            seen.add(nxt)
            nxt = perm[nxt]
        cycles.append("(" + " ".join(str(i + 1) for i in cycle) + ")")
    return "".join(cycles) or "()"


def _partitions(n, largest=None):
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for part in range(min(n, largest), 0, -1):
        for rest in _partitions(n - part, part):
            yield (part,) + rest


def _class_representative(partition) -> np.ndarray:
    perm = []
    start = 0
    for length in partition:
        perm += [start + (i + 1) % length for i in range(length)]
        start += length
    return np.array(perm, dtype=np.int64)


def _class_size(partition) -> int:
    n = sum(partition)
    size = math.factorial(n)
    for length, count in itertools.groupby(partition):
        c = len(list(count))
        size //= length**c * math.factorial(c)
    return size


# Permutations act on the right: (p * q)[i] = q[p[i]], so a word acts
# letter by letter from the left and evaluation is a homomorphism.
def _batch_power(perms: np.ndarray, n: int) -> np.ndarray:
    if n < 0:
        perms = np.argsort(perms, axis=-1)
        n = -n
    result = np.broadcast_to(np.arange(perms.shape[-1]), perms.shape).copy()
    base = perms
    while n:
        if n & 1:
            result = np.take_along_axis(base, result, axis=-1)
        base = np.take_along_axis(base, base, axis=-1)
        n >>= 1
    return result


def _is_cyclic_image(alpha: tuple, tau: tuple) -> bool:
    n = len(alpha)
    ident = tuple(range(n))

    def mul(p, q):
        return tuple(q[p[i]] for i in range(n))

    if mul(alpha, tau) != mul(tau, alpha):
        return False
    # abelian: the image is {alpha^i tau^j}; cyclic iff some element has full order
    elements = set()
    x = ident
    while True:
        y = x
        while True:
            elements.add(y)
            y = mul(y, tau)
            if y == x:
                break
        x = mul(x, alpha)
        if x == ident:
            break
    size = len(elements)
    for g in elements:
        order, y = 1, g
        while y != ident:
            y = mul(y, g)
            order += 1
        if order == size:
            return True
    return False


def finite_quotient_scan(pres: GPresentation, degree: int) -> QuotientReport:
    """Count homomorphisms ``G(l, m; k) -> S_degree`` and test their images.

    Every pair ``(alpha, tau)`` of permutations with trivial relator value is
    a homomorphism.  The relator condition is invariant under simultaneous
    conjugation, so ``tau`` runs over one representative per conjugacy class
    and the count for that class is scaled by the class size.
    """
    if not 1 <= degree <= 8:
        raise DomainError(f"degree must lie in 1..8, got {degree}")
    alphas = np.array(list(itertools.permutations(range(degree))), dtype=np.int64)
    identity = np.arange(degree)
    rel = relator(pres)
    alpha_powers = {e: _batch_power(alphas, e) for g, e in rel.syllables if g == "a"}

    total = 0
    witness = None
    for partition in _partitions(degree):
        tau = _class_representative(partition)
        tau_powers = {e: _batch_power(tau, e) for g, e in rel.syllables if g == "t"}
        value = np.broadcast_to(identity, alphas.shape).copy()
        for gen, exp in rel.syllables:
            if gen == "a":
                value = np.take_along_axis(alpha_powers[exp], value, axis=-1)
            else:
                value = tau_powers[exp][value]
        hits = np.flatnonzero((value == identity).all(axis=1))
        total += len(hits) * _class_size(partition)
        if witness is None:
            tau_t = tuple(int(x) for x in tau)
            for idx in hits:
                alpha_t = tuple(int(x) for x in alphas[idx])
                if not _is_cyclic_image(alpha_t, tau_t):
                    witness = (alpha_t, tau_t)
                    break
    return QuotientReport(degree, total, witness is None, witness)
