//! Adjoint groups of connected Alexander quandles, their bar complexes, and
//! bar-complex `H_2` of small finite groups.

mod bar;
mod homotopy;
mod model;

pub use bar::{bar_boundary, group_h2_bar, BarChain, GroupLaw};
pub use homotopy::{
    chain_map_c, expected_residual, homotopy_2_defect, homotopy_h, printed_residual,
    rack_boundary_terms, residual, verify_homotopy_2, verify_homotopy_3, HomotopyReport,
    ResidualReport,
};
pub use model::{
    action_kernel, central_power_check, check_associativity, eisermann_h2, mu_relation_matrix,
    stabilizer_kernel, ActionKernel, ClauwensElement, ClauwensGroup,
};

use crate::zalg::ZalgError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AdjointError {
    #[error("quandle {0} is not connected")]
    NotConnected(String),
    #[error("{check} fails at {tuple:?}: difference {diff}")]
    IdentityFailed {
        check: String,
        tuple: Vec<u32>,
        diff: String,
    },
    #[error("group of order {needed} is above the cap of {cap}")]
    SizeCap { needed: u64, cap: u64 },
    #[error(transparent)]
    Linear(#[from] ZalgError),
}
