"""Exact computations with n-cubic elements of group rings, symmetric powers
of augmentation ideals, and the Bernoulli-number invariants that bound them."""

from .groups import FiniteAbelianGroup, GroupHom
from .rings import QQ, ZZ, CoeffRing, Zmod
from .group_ring import (
    GroupRingElement,
    NotAUnit,
    augmentation,
    coordinate_embed,
    invert_unit,
    multiply,
    pushforward,
    substitute,
)
from .cubic import (
    CubicElement,
    CubicReport,
    NotCubic,
    character_oracle,
    enumerate_cubic,
    induce,
    is_cubic,
    multiextension_laws_check,
    oracle_verdict,
    theta_cocycle,
)
from .laurent import LaurentPoly
from .sym import (
    SymElement,
    build_A_B_P,
    build_phi,
    build_psi,
    evaluate_sym_at,
    flat,
    phi_closed_form,
    relation_element,
    sym_to_laurent,
    taylor_chain,
    verify_identities,
)
from .cn import alpha_well_defined, cn_presentation, cn_structure
from .bernoulli import bernoulli, bernoulli_mod_p, irregular_pairs
from .invariants import (
    Mode,
    Undetermined,
    annihilator_bounds,
    e_value,
    epsilon,
    numerator_bn_over_n,
    superfactorial,
)
from .ext import Verdict, cnpm_check, vanishing_ext

__version__ = "0.1.0"
