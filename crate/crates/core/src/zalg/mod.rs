//! Exact integer linear algebra: sparse matrices, Smith normal form,
//! cokernels and homology of integer chain complexes.

mod abelian;
mod int;
mod matrix;
mod snf;

pub use abelian::AbelianGroupInvariants;
pub use int::Int;
pub use matrix::{DenseIntMatrix, SparseIntMatrix};
pub use snf::{
    invariant_factors, normalize_chain, rank, smith_normal_form, OverflowPolicy, SmithForm,
    SnfOptions, SnfTransforms,
};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZalgError {
    #[error("entry ({row}, {col}) outside a {rows}x{cols} matrix")]
    IndexOutOfRange {
        row: usize,
        col: usize,
        rows: usize,
        cols: usize,
    },
    #[error("shape mismatch: {left:?} times {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("intermediate value exceeded the machine-word range with big integers disabled")]
    Overflow,
    #[error(
        "boundaries do not compose to zero: column {column} of the incoming map is not a cycle"
    )]
    NotAComplex { column: usize },
    #[error("matrix parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// `Z^rows / column-span(m)`.
pub fn cokernel(m: &SparseIntMatrix) -> Result<AbelianGroupInvariants, ZalgError> {
    let d = invariant_factors(m)?;
    Ok(AbelianGroupInvariants::cokernel_of(m.rows(), &d))
}

/// Checks `boundary_out * boundary_in = 0`, reporting the first offending column.
pub fn check_composes_to_zero(
    boundary_in: &SparseIntMatrix,
    boundary_out: &SparseIntMatrix,
) -> Result<(), ZalgError> {
    if boundary_out.cols() != boundary_in.rows() {
        return Err(ZalgError::ShapeMismatch {
            left: (boundary_out.rows(), boundary_out.cols()),
            right: (boundary_in.rows(), boundary_in.cols()),
        });
    }
    for c in 0..boundary_in.cols() {
        if !boundary_out
            .apply_to_column(boundary_in.column(c))
            .is_empty()
        {
            return Err(ZalgError::NotAComplex { column: c });
        }
    }
    Ok(())
}

/// `ker(boundary_out) / im(boundary_in)` where `boundary_in: C_{k+1} -> C_k` and
/// `boundary_out: C_k -> C_{k-1}`.
///
/// The torsion is read off the invariant factors of `boundary_in` alone, since
/// `C_k / ker(boundary_out)` is free.
pub fn homology_at(
    boundary_in: &SparseIntMatrix,
    boundary_out: &SparseIntMatrix,
) -> Result<AbelianGroupInvariants, ZalgError> {
    check_composes_to_zero(boundary_in, boundary_out)?;
    let mid = boundary_in.rows();
    let rank_out = rank(boundary_out)?;
    let d_in = invariant_factors(boundary_in)?;
    let free = mid - rank_out - d_in.len();
    Ok(AbelianGroupInvariants::from_diagonal(free, d_in))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cokernel_examples() {
        assert_eq!(
            cokernel(&SparseIntMatrix::zero(2, 0)).unwrap(),
            AbelianGroupInvariants::free(2)
        );
        assert_eq!(
            cokernel(&SparseIntMatrix::from_dense(&[vec![3]])).unwrap(),
            AbelianGroupInvariants::new(0, &[3])
        );
        // Z/3 (x) Z/3 modulo 2(1 (x) 1): the relation 3(1 (x) 1) comes with the tensor square
        let mu = SparseIntMatrix::from_dense(&[vec![2, 3]]);
        assert!(cokernel(&mu).unwrap().is_trivial());
    }

    #[test]
    fn homology_examples() {
        let z3 = SparseIntMatrix::zero(3, 0);
        let out = SparseIntMatrix::zero(0, 3);
        assert_eq!(
            homology_at(&z3, &out).unwrap(),
            AbelianGroupInvariants::free(3)
        );
        let two = SparseIntMatrix::from_dense(&[vec![2]]);
        assert_eq!(
            homology_at(&two, &SparseIntMatrix::zero(0, 1)).unwrap(),
            AbelianGroupInvariants::new(0, &[2])
        );
    }

    #[test]
    fn non_complex_is_rejected() {
        let a = SparseIntMatrix::from_dense(&[vec![1], vec![0]]);
        let b = SparseIntMatrix::from_dense(&[vec![1, 0]]);
        assert_eq!(
            homology_at(&a, &b),
            Err(ZalgError::NotAComplex { column: 0 })
        );
    }
}
