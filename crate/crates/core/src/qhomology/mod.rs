//! Rack and quandle chain complexes of a finite quandle, their low-degree
//! homology, and the abelianization of the adjoint group.

use std::fmt;

use rayon::prelude::*;

use crate::caps::Caps;
use crate::qcore::FiniteQuandle;
use crate::zalg::{cokernel, homology_at, AbelianGroupInvariants, SparseIntMatrix, ZalgError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ComplexMode {
    Rack,
    /// Quotient by the tuples with two equal neighbours.
    Quandle,
}

impl fmt::Display for ComplexMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            ComplexMode::Rack => "rack",
            ComplexMode::Quandle => "quandle",
        })
    }
}

impl std::str::FromStr for ComplexMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rack" => Ok(ComplexMode::Rack),
            "quandle" => Ok(ComplexMode::Quandle),
            _ => Err(format!("unknown mode {s:?}, expected rack or quandle")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomologyError {
    #[error("complex needs {needed} basis cells in degree {degree}, above the cap of {cap}")]
    SizeCap {
        degree: usize,
        needed: u64,
        cap: u64,
    },
    #[error("degree {0} is not supported (1 to 3)")]
    Degree(usize),
    #[error(transparent)]
    Linear(#[from] ZalgError),
}

/// Lexicographic numbering of `k`-tuples of `0..n`, or of the tuples without equal
/// neighbours in quandle mode.
#[derive(Clone, Copy, Debug)]
pub struct TupleBasis {
    pub n: usize,
    pub k: usize,
    pub mode: ComplexMode,
}

impl TupleBasis {
    pub fn len(&self) -> u64 {
        let n = self.n as u64;
        match (self.mode, self.k) {
            (_, 0) => 1,
            (ComplexMode::Rack, k) => n.pow(k as u32),
            (ComplexMode::Quandle, k) => n * n.saturating_sub(1).pow(k as u32 - 1),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn decode(&self, mut idx: u64, out: &mut [u32]) {
        match self.mode {
            ComplexMode::Rack => {
                for slot in out.iter_mut().rev() {
                    *slot = (idx % self.n as u64) as u32;
                    idx /= self.n as u64;
                }
            }
            ComplexMode::Quandle => {
                // digits after the first range over n - 1 values, skipping the predecessor
                let m = self.n as u64 - 1;
                let mut digits = vec![0u64; self.k];
                for d in digits.iter_mut().skip(1).rev() {
                    *d = idx % m;
                    idx /= m;
                }
                digits[0] = idx;
                out[0] = digits[0] as u32;
                for i in 1..self.k {
                    let d = digits[i] as u32;
                    out[i] = if d >= out[i - 1] { d + 1 } else { d };
                }
            }
        }
    }

    /// `None` for degenerate tuples in quandle mode.
    pub fn encode(&self, t: &[u32]) -> Option<u64> {
        match self.mode {
            ComplexMode::Rack => Some(
                t.iter()
                    .fold(0u64, |acc, &x| acc * self.n as u64 + x as u64),
            ),
            ComplexMode::Quandle => {
                let m = self.n as u64 - 1;
                let mut acc = *t.first()? as u64;
                for i in 1..t.len() {
                    if t[i] == t[i - 1] {
                        return None;
                    }
                    let d = if t[i] > t[i - 1] { t[i] - 1 } else { t[i] };
                    acc = acc * m + d as u64;
                }
                Some(acc)
            }
        }
    }
}

/// Boundary matrices `∂_2 … ∂_top` of the rack or quandle complex.
#[derive(Clone, Debug)]
pub struct RackComplexSlice {
    pub order: usize,
    pub mode: ComplexMode,
    pub top_degree: usize,
    /// `dims[k]` is the rank of `C_k`, for `k = 0..=top_degree` (`dims[0]` unused, 1).
    pub dims: Vec<u64>,
    /// `boundaries[k]` is `∂_k : C_k → C_{k-1}` for `k ≥ 2`; entries 0 and 1 are empty.
    boundaries: Vec<SparseIntMatrix>,
}

impl RackComplexSlice {
    pub fn boundary(&self, k: usize) -> &SparseIntMatrix {
        assert!(
            (2..=self.top_degree).contains(&k),
            "boundary {k} not assembled"
        );
        &self.boundaries[k]
    }

    /// `∂_1 = 0`, as a `0 × n` matrix.
    pub fn boundary_1(&self) -> SparseIntMatrix {
        SparseIntMatrix::zero(0, self.order)
    }

    /// `∂_{k-1} ∘ ∂_k = 0` for every assembled pair.
    pub fn check_composition(&self) -> Result<(), ZalgError> {
        for k in 3..=self.top_degree {
            crate::zalg::check_composes_to_zero(&self.boundaries[k], &self.boundaries[k - 1])?;
        }
        Ok(())
    }

    /// `H_k` for `1 ≤ k < top_degree`.
    pub fn homology(&self, k: usize) -> Result<AbelianGroupInvariants, HomologyError> {
        if k == 0 || k >= self.top_degree {
            return Err(HomologyError::Degree(k));
        }
        let out = if k == 1 {
            self.boundary_1()
        } else {
            self.boundaries[k].clone()
        };
        Ok(homology_at(&self.boundaries[k + 1], &out)?)
    }
}

/// One column of `∂_k`: `Σ_i (-1)^i [(x_1◁x_i, …, x_{i-1}◁x_i, x_{i+1}, …) − (…x̂_i…)]`.
fn boundary_column(q: &FiniteQuandle, target: &TupleBasis, x: &[u32]) -> Vec<(u32, i64)> {
    let k = x.len();
    let mut col = Vec::with_capacity(2 * k);
    let mut face = vec![0u32; k - 1];
    // the i = 1 faces cancel
    for i in 1..k {
        let sign = if (i + 1) % 2 == 0 { 1 } else { -1 };
        for j in 0..i {
            face[j] = q.op(x[j], x[i]);
        }
        face[i..].copy_from_slice(&x[i + 1..]);
        if let Some(r) = target.encode(&face) {
            col.push((r as u32, sign));
        }
        face[..i].copy_from_slice(&x[..i]);
        if let Some(r) = target.encode(&face) {
            col.push((r as u32, -sign));
        }
    }
    col
}

pub fn build_complex(
    q: &FiniteQuandle,
    mode: ComplexMode,
    top_degree: usize,
    caps: &Caps,
) -> Result<RackComplexSlice, HomologyError> {
    assert!(
        (2..=4).contains(&top_degree),
        "top degree must be 2, 3 or 4"
    );
    let n = q.order();
    let dims: Vec<u64> = (0..=top_degree)
        .map(|k| TupleBasis { n, k, mode }.len())
        .collect();
    if dims[top_degree] > caps.cells {
        return Err(HomologyError::SizeCap {
            degree: top_degree,
            needed: dims[top_degree],
            cap: caps.cells,
        });
    }
    let mut boundaries = vec![SparseIntMatrix::zero(0, 0), SparseIntMatrix::zero(0, n)];
    for k in 2..=top_degree {
        let source = TupleBasis { n, k, mode };
        let target = TupleBasis { n, k: k - 1, mode };
        let columns: Vec<Vec<(u32, i64)>> = (0..source.len())
            .into_par_iter()
            .map_init(
                || vec![0u32; k],
                |x, idx| {
                    source.decode(idx, x);
                    boundary_column(q, &target, x)
                },
            )
            .collect();
        boundaries.push(SparseIntMatrix::from_columns(
            target.len() as usize,
            columns,
        ));
    }
    Ok(RackComplexSlice {
        order: n,
        mode,
        top_degree,
        dims,
        boundaries,
    })
}

pub fn homology(
    q: &FiniteQuandle,
    mode: ComplexMode,
    degree: usize,
    caps: &Caps,
) -> Result<AbelianGroupInvariants, HomologyError> {
    if !(1..=3).contains(&degree) {
        return Err(HomologyError::Degree(degree));
    }
    build_complex(q, mode, degree + 1, caps)?.homology(degree)
}

pub fn quandle_h2(q: &FiniteQuandle, caps: &Caps) -> Result<AbelianGroupInvariants, HomologyError> {
    homology(q, ComplexMode::Quandle, 2, caps)
}

pub fn rack_h2(q: &FiniteQuandle, caps: &Caps) -> Result<AbelianGroupInvariants, HomologyError> {
    homology(q, ComplexMode::Rack, 2, caps)
}

/// Abelianization of `⟨e_x | e_{x◁y} = e_y⁻¹ e_x e_y⟩`: the cokernel of the
/// relation columns `e_{x◁y} − e_x`.
pub fn adjoint_abelianization(q: &FiniteQuandle) -> AbelianGroupInvariants {
    let n = q.order() as u32;
    let columns: Vec<Vec<(u32, i64)>> = (0..n)
        .flat_map(|x| (0..n).map(move |y| (x, y)))
        .filter_map(|(x, y)| {
            let xy = q.op(x, y);
            (xy != x).then(|| vec![(xy, 1), (x, -1)])
        })
        .collect();
    cokernel(&SparseIntMatrix::from_columns(n as usize, columns))
        .expect("arbitrary precision cokernel cannot fail")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qbuild::{dihedral, trivial, AlexanderModuleSpec};

    fn caps() -> Caps {
        Caps::default()
    }

    #[test]
    fn tuple_numbering_round_trips() {
        for mode in [ComplexMode::Rack, ComplexMode::Quandle] {
            let b = TupleBasis { n: 4, k: 3, mode };
            let mut t = [0u32; 3];
            let mut prev: Option<Vec<u32>> = None;
            for idx in 0..b.len() {
                b.decode(idx, &mut t);
                assert_eq!(b.encode(&t), Some(idx));
                if let Some(p) = &prev {
                    assert!(p.as_slice() < &t[..], "lexicographic order");
                }
                prev = Some(t.to_vec());
            }
        }
        assert_eq!(
            TupleBasis {
                n: 4,
                k: 3,
                mode: ComplexMode::Quandle
            }
            .encode(&[1, 1, 0]),
            None
        );
    }

    #[test]
    fn singleton_complex_has_zero_boundaries() {
        let pt = trivial(1).unwrap();
        let c = build_complex(&pt, ComplexMode::Rack, 4, &caps()).unwrap();
        for k in 2..=4 {
            assert_eq!(c.boundary(k).nnz(), 0);
        }
        assert_eq!(c.homology(2).unwrap(), AbelianGroupInvariants::free(1));
        assert_eq!(
            rack_h2(&pt, &caps()).unwrap(),
            AbelianGroupInvariants::free(1)
        );
        assert!(quandle_h2(&pt, &caps()).unwrap().is_trivial());
    }

    #[test]
    fn second_boundary_of_r3() {
        let r3 = dihedral(3).unwrap();
        let c = build_complex(&r3, ComplexMode::Quandle, 3, &caps()).unwrap();
        let d2 = c.boundary(2);
        assert_eq!((d2.rows(), d2.cols()), (3, 6));
        let basis = TupleBasis {
            n: 3,
            k: 2,
            mode: ComplexMode::Quandle,
        };
        let mut t = [0u32; 2];
        for col in 0..6 {
            basis.decode(col as u64, &mut t);
            let (x, y) = (t[0], t[1]);
            let mut expected = [0i64; 3];
            expected[r3.op(x, y) as usize] += 1;
            expected[x as usize] -= 1;
            for r in 0..3 {
                assert_eq!(d2.get(r, col).to_i64().unwrap(), expected[r]);
            }
        }
        c.check_composition().unwrap();
        let r5 = dihedral(5).unwrap();
        build_complex(&r5, ComplexMode::Rack, 4, &caps())
            .unwrap()
            .check_composition()
            .unwrap();
    }

    #[test]
    fn known_second_homology() {
        let r3 = dihedral(3).unwrap();
        assert!(quandle_h2(&r3, &caps()).unwrap().is_trivial());
        assert_eq!(
            rack_h2(&r3, &caps()).unwrap(),
            AbelianGroupInvariants::free(1)
        );
        let t2 = trivial(2).unwrap();
        assert_eq!(
            rack_h2(&t2, &caps()).unwrap(),
            AbelianGroupInvariants::free(4)
        );
        let x = AlexanderModuleSpec::new(vec![3, 3], vec![vec![-1, 0], vec![0, -1]]).unwrap();
        assert_eq!(
            quandle_h2(&x.quandle(), &caps()).unwrap(),
            AbelianGroupInvariants::new(0, &[3])
        );
    }

    #[test]
    fn abelianizations() {
        assert_eq!(
            adjoint_abelianization(&dihedral(3).unwrap()),
            AbelianGroupInvariants::free(1)
        );
        assert_eq!(
            adjoint_abelianization(&trivial(2).unwrap()),
            AbelianGroupInvariants::free(2)
        );
        assert_eq!(
            adjoint_abelianization(&dihedral(4).unwrap()),
            AbelianGroupInvariants::free(2)
        );
    }

    #[test]
    fn size_cap_is_enforced() {
        let small = Caps {
            cells: 10,
            ..Caps::default()
        };
        assert!(matches!(
            quandle_h2(&dihedral(5).unwrap(), &small),
            Err(HomologyError::SizeCap { degree: 3, .. })
        ));
    }
}
