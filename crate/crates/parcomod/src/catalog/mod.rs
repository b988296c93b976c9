//! Example algebras and group-theoretic data.

pub mod algebras;
pub mod characters;
pub mod group;

pub use algebras::{
    dual_group_algebra, group_algebra, kac, kac_coideal, kac_grouplike_candidates, kac_idempotents, kac_integral, kac_symbols,
    preset_algebra, sweedler, zeta8, CatalogIdempotent, KAC_IDEMPOTENTS,
};
pub use characters::{
    central_primitive_idempotents, character_table, irreps, linear_character_exponents, linear_characters,
    CharacterTable, Irrep,
};
pub use group::{find_isomorphism, FiniteGroup, GroupJson, Subgroup};
