//! Constructors for quandle families: Alexander, symplectic, spherical, core,
//! conjugation (Coxeter reflection), dihedral and trivial quandles.

mod alexander;
mod classical;
mod families;
mod field;
mod grid;
mod spec;

pub use alexander::AlexanderModuleSpec;
pub use classical::{
    orthogonal_group_order, spherical, symplectic, symplectic_form, symplectic_group_order,
    VectorQuandle,
};
pub use families::{
    conjugation_reflections, core, core_from_table, dihedral, trivial, ReflectionQuandle,
};
pub use field::{FiniteField, MAX_FIELD_ORDER};
pub use grid::{connected_alexander_grid, default_grid};
pub use spec::{CoxeterName, FamilySpec, GroupName};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BuildError {
    #[error("T is not invertible on the module")]
    NonInvertibleT,
    #[error("T is not well defined on the module: entry ({row}, {col}) is incompatible with the torsion orders")]
    IllDefinedT { row: usize, col: usize },
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("spherical quandles need odd characteristic")]
    EvenCharacteristic,
    #[error("no shipped field of order {q}")]
    UnsupportedField { q: u32 },
    #[error("modulus {modulus:?} is not monic irreducible over F_{p}")]
    ReducibleModulus { p: u32, modulus: Vec<u32> },
    #[error("{0}")]
    InvalidGroupTable(String),
    #[error("seed {0} is not an involution")]
    SeedNotInvolution(String),
    #[error("seed {0} is not in the group")]
    SeedNotInGroup(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("family spec: {0}")]
    Spec(String),
}
