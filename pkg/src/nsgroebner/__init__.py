"""Numerical semigroups through Groebner bases of ``<y_i - x^a_i>``."""

from .semigroup import (
    SemigroupSpec,
    InvariantReport,
    normalize,
    is_member,
    invariants,
    n_of_alpha,
    denumerant,
    minimal_generators,
    wilf_check,
)
from .monomials import LEX, MonomialOrder, compare, divides, lcm, mul, sub
from .groebner import (
    Binomial,
    GroebnerBasis,
    ResourceLimit,
    buchberger,
    ideal_generators,
    normal_form_of_power,
    reduce_monomial,
    s_pair,
)
from .staircase import (
    CertifiedMembership,
    StaircaseModel,
    build_staircase,
    certify,
    elements_via_staircase,
    gaps_via_staircase,
    is_standard,
)
from .bounds import (
    BoundReport,
    bound_table,
    count_p,
    count_q,
    gly_based_bound,
    gly_weak_holds,
    n_s_corollary_bound,
    prism_pyramid_high,
    prism_pyramid_low,
    shift_lemma_check,
    simple_corollary_bound,
)

__version__ = "0.1.0"
