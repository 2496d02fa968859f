"""
Two non-isomorphic one-relator groups that are images of each other
===================================================================

G(18, 2; 2) and G(18, 2; 6) map onto each other but are not isomorphic.
We classify the pair, build both epimorphisms and check them by reducing
the image of each relator to the identity.
"""

from brunner_groups import (
    GPresentation,
    classify_pair,
    generated_exponent_fixpoint,
    is_non_hopfian,
    synth_epi_item3,
    verify_homomorphism,
)
from brunner_groups.brunner import relator_image

g1, g2 = GPresentation(18, 2, 2), GPresentation(18, 2, 6)
print(classify_pair(g1, g2))

for recipe in (synth_epi_item3(18, 2, 2, 6), synth_epi_item3(18, 2, 6, 2)):
    phi = recipe.to_map()
    print(f"{phi.source} -> {phi.target}: a -> {phi.image_a}, t -> {phi.image_t}")
    print("  relator image reduces to", repr(str(relator_image(phi))),
          "| homomorphism:", verify_homomorphism(phi))
    # a^r and b generate the whole base group, so the map is onto
    trace = []
    generated_exponent_fixpoint(18, 2, recipe.r, trace)
    print("  generated exponents:", " -> ".join(map(str, trace)))

# Both groups are non-Hopfian, which is what makes the phenomenon possible
print("non-Hopfian:", is_non_hopfian(g1), is_non_hopfian(g2))
