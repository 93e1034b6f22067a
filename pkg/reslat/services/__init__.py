"""Workbench services."""
from reslat.services.finalg import (
    build_algebra,
    check_monoid,
    check_residuated_lattice,
    derive_residuals,
    eval_term,
    induced_partial,
    validate_order,
)
from reslat.services.isomorphism import find_isomorphism, find_monoid_isomorphism, verify_mapping
from reslat.services.construct import (
    direct_product,
    godel_chain,
    make_cyclic_url,
    make_mg,
    make_rab,
    zero_cancellative_monoids,
)
from reslat.services.cocycle import bounded_product, check_cocycle, make_cocycle_extension
from reslat.services.analyze import compute_uz, decompose_mx, is_compact_url, is_discriminator, url_flags
from reslat.services.identities import check_conjugate_equations, check_knotted, check_weak_commutativity
from reslat.services.quotient import comparability_quotient, reconstruct_cocycle
from reslat.services.enumerate import enumerate_mx, rab_catalog
from reslat.services.frames import build_frame, build_galois_algebra, check_fep_embedding, check_preservation
from reslat.services.signatures import sig_leq, sig_of_invariant_factors, sig_to_algebra
from reslat.services.downsets import downset_contains, is_z_closed, pf_is_z_closed

__all__ = [
    "build_algebra",
    "check_monoid",
    "check_residuated_lattice",
    "derive_residuals",
    "eval_term",
    "induced_partial",
    "validate_order",
    "find_isomorphism",
    "find_monoid_isomorphism",
    "verify_mapping",
    "direct_product",
    "godel_chain",
    "make_cyclic_url",
    "make_mg",
    "make_rab",
    "zero_cancellative_monoids",
    "bounded_product",
    "check_cocycle",
    "make_cocycle_extension",
    "compute_uz",
    "decompose_mx",
    "is_compact_url",
    "is_discriminator",
    "url_flags",
    "check_conjugate_equations",
    "check_knotted",
    "check_weak_commutativity",
    "comparability_quotient",
    "reconstruct_cocycle",
    "enumerate_mx",
    "rab_catalog",
    "build_frame",
    "build_galois_algebra",
    "check_fep_embedding",
    "check_preservation",
    "sig_leq",
    "sig_of_invariant_factors",
    "sig_to_algebra",
    "downset_contains",
    "is_z_closed",
    "pf_is_z_closed",
]
