"""Word problem, isomorphism classification and explicit homomorphisms for
the one-relator groups ``G(l, m; k) = <a, t | t^-1 a^-k t a^l t^-1 a^k t = a^m>``.
"""

from .arith import factorize, is_n_number_int, is_n_number_ratio, power_ratio_exponent
from .baumslag import (
    BsNormalForm,
    BsPresentation,
    bs_equal,
    bs_normal_form,
    power_of_a,
    power_of_b,
    transport_exponent,
)
from .brunner import (
    AbelianInvariant,
    GPresentation,
    GroupMap,
    QuotientReport,
    ab_image,
    abelianization,
    apply_map,
    finite_quotient_scan,
    g_equal,
    g_is_identity,
    g_reduce,
    normalize_k_sign,
    relator,
    verify_homomorphism,
)
from .classify import (
    Census,
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
from .errors import DomainError, WordParseError
from .homsynth import (
    EpiRecipe,
    generated_exponent_fixpoint,
    synth_epi_item3,
    synth_epi_m1,
    synth_epi_pair,
    synth_iso_2_2,
)
from .words import GenWord, exponent_sum, format_word, invert, multiply, parse

__version__ = "0.1.0"
