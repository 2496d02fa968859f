"""
Solving the word problem in G(l, m; k)
======================================

Two levels of Britton reduction: words in ``a`` and ``b`` are brought to
a normal form in the Baumslag-Solitar group H(l, m), and pinches of the
stable letter ``t`` are removed on top of that.
"""

from brunner_groups import (
    BsPresentation,
    GPresentation,
    bs_normal_form,
    g_equal,
    g_reduce,
    parse,
    relator,
    transport_exponent,
)

# In H(18, 2) we have b^-1 a^18 b = a^2, so conjugating a^54 by b gives a^6.
H = BsPresentation(18, 2)
print("normal form of b^-1 a^54 b:", bs_normal_form(H, parse("b^-1 a^54 b")))

# A word that cannot be simplified keeps its a-exponents in the residue ranges
print("normal form of b^-1 a^20 b a^3:", bs_normal_form(H, parse("b^-1 a^20 b a^3")))

# The same conjugation computed arithmetically
print("transport of a^54 through b:", transport_exponent(H, 1, 54))

# At the G level b is the element t^-1 a^k t
G = GPresentation(18, 2, 2)
print("t^-1 a^2 t == b ?", g_equal(G, parse("t^-1 a^2 t"), parse("b")))

# The defining relator reduces to the empty word ...
print("relator:", relator(G), "->", repr(str(g_reduce(G, relator(G)))))

# ... while t^-1 a t has no pinch since 2 does not divide 1
print("t^-1 a t ->", g_reduce(G, parse("t^-1 a t")))

# Pinches can hide behind base-group relations
print("t^-1 b^-1 a^36 b t ->", g_reduce(G, parse("t^-1 b^-1 a^36 b t")))
