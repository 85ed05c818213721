//! Permutation groups: deterministic Schreier–Sims, stabilizers, derived
//! subgroups, finite group tables and the wreath-product model of core quandles.

mod finite;
mod perm;
mod schreier;
pub mod wreath;

pub use finite::{dihedral_perm_group, symmetric_perm_group, FiniteGroup, GroupError};
pub use perm::{Perm, PermParseError};
pub use schreier::{effective_action_check, PermGroup, StabChain};
