//! Exact computations with finite quandles.
//!
//! - [`qcore`]: multiplication tables, axiom checks, type, orbits, inner group,
//!   homomorphisms and coverings.
//! - [`qbuild`]: Alexander, symplectic, spherical, core, Coxeter, dihedral and
//!   trivial quandles from one-line family specs.
//! - [`zalg`]: integers with overflow promotion, sparse matrices, Smith normal form.
//! - [`permgrp`]: Schreier–Sims, stabilizers, derived subgroups, finite group tables.
//! - [`qhomology`]: rack and quandle chain complexes and their homology.
//! - [`adjoint`]: the adjoint group of a connected Alexander quandle as explicit
//!   triples, the bar complex, chain homotopies and Schur multipliers.
//! - [`covering`]: universal coverings of connected Alexander quandles.
//! - [`cli`]: the `qadj` command line and its report format.

pub mod adjoint;
pub mod caps;
pub mod cli;
pub mod covering;
pub mod permgrp;
pub mod qbuild;
pub mod qcore;
pub mod qhomology;
pub mod zalg;
