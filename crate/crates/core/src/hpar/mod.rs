//! The partial Hopf algebra `H_par`, built as `A_par # H` or, for group
//! algebras, from the groupoid of `G`.

pub mod apar;
pub mod build;
pub mod expected;
pub mod iso;
pub mod kpar;
pub mod partial_rep;
pub mod relations;

pub use apar::{grouplike_basis, localize, Apar, Component, ComponentPresentation, Structure};
pub use relations::{generate_epsilon_relations, linearly_implied, EpsPoly, EpsilonRelation, RelationKind};
pub use kpar::{kpar_group, Kpar};
pub use partial_rep::{check_partial_rep, eps_pi};
pub use build::{build_hpar, kpar_smash_witness, kpar_to_smash, Hpar, HparBlock};
pub use iso::{apar_multiplicity_report, conjugation_map, phi_map, phi_psi_isomorphism, psi_map, MultiplicityEntry, PhiPsiReport};
