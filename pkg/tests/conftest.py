import itertools
import random
from fractions import Fraction

import pytest

from brunner_groups.words import GenWord


def random_word(rng, gens="abt", max_syllables=12, max_exp=30):
    syllables = []
    for _ in range(rng.randint(0, max_syllables)):
        exp = 0
        while exp == 0:
            exp = rng.randint(-max_exp, max_exp)
        syllables.append((rng.choice(gens), exp))
    return GenWord(tuple(syllables))


def affine_image(l, m, w):
    """Image of an a/b-word under a -> x+1, b -> (l/m) x, as (scale, shift).

    Words multiply as function composition, ``uv -> u o v``.
    """
    scale, shift = Fraction(1), Fraction(0)
    letters = {
        "a": lambda e: (Fraction(1), Fraction(e)),
        "b": lambda e: (Fraction(l, m) ** e, Fraction(0)),
    }
    for gen, exp in w.syllables:
        s, c = letters[gen](exp)
        scale, shift = scale * s, scale * c + shift
    return scale, shift


def brute_force_scan(rel, degree):
    """Try every pair of permutations; independent of the vectorized scan."""
    n = degree
    ident = tuple(range(n))

    def mul(p, q):
        return tuple(q[p[i]] for i in range(n))

    def inv(p):
        out = [0] * n
        for i, x in enumerate(p):
            out[x] = i
        return tuple(out)

    def closure(gens):
        group = {ident}
        frontier = [ident]
        while frontier:
            new = []
            for g in frontier:
                for h in gens:
                    x = mul(g, h)
                    if x not in group:
                        group.add(x)
                        new.append(x)
            frontier = new
        return group

    def order(g):
        k, x = 1, g
        while x != ident:
            x, k = mul(x, g), k + 1
        return k

    total, all_cyclic = 0, True
    perms = list(itertools.permutations(range(n)))
    for alpha, tau in itertools.product(perms, perms):
        images = {"a": alpha, "t": tau}
        value = ident
        for gen, exp in rel.syllables:
            g = images[gen] if exp > 0 else inv(images[gen])
            for _ in range(abs(exp)):
                value = mul(value, g)
        if value != ident:
            continue
        total += 1
        group = closure([alpha, tau])
        if not any(order(g) == len(group) for g in group):
            all_cyclic = False
    return total, all_cyclic


@pytest.fixture
def rng():
    return random.Random(20240917)
