//! Weyl group elements, enumeration and conjugacy classes, the classical
//! regular-element catalog, eigenspaces and (L-)regularity, induction
//! configurations, coset counts and induced characters.

mod config;
mod element;
mod group;
mod induce;
mod perm;
mod regular;

pub use config::{
    block_config, case_a_config, case_a_layout, case_b_config, case_b_element, case_b_layout,
    case_b_orbits, cyclic_block_element, pi_l_for_blocks, regular_config, type_a_blocks,
    type_a_config, validate_config, CaseTag, InductionConfig, USpec,
};
pub use element::{IntMatrix, WeylElt};
pub use group::{
    centralizer_order_formula, default_bound, enumerate_group, ClassInfo, ClassLabel,
    SubgroupTable, WeylGroup, BOUND_ENV, DEFAULT_BOUND,
};
pub use induce::{
    induced_character, induced_character_naive, is_nonnegative_integer, permutation_character,
    weyl_group, ClassFunction, InductionContext,
};
pub use perm::{Perm, SignedPerm};
pub use regular::{
    char_poly, eigenspace, is_l_regular, is_l_regular_at, is_regular, is_regular_at,
    is_regular_in_lprime, lies_in_lprime, normalizes_levi, phi_multiplicity, regular_element,
    Variant,
};
