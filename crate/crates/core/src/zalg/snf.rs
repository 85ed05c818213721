//! Smith normal form over the integers.
//!
//! Large sparse inputs go through three stages: elimination on unit pivots
//! (cheap, no coefficient growth), a column-echelon pass over the rows that
//! survive, and a dense reduction of the resulting square remainder. Small or
//! dense inputs, and any request for transforms, use the dense routine directly.

use std::collections::{BTreeMap, BTreeSet};

use super::int::Int;
use super::matrix::{DenseIntMatrix, SparseIntMatrix};
use super::ZalgError;

/// What to do when an intermediate value leaves the machine-word range.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OverflowPolicy {
    /// Promote to arbitrary precision and continue.
    #[default]
    BigInt,
    /// Fail with [`ZalgError::Overflow`] instead of promoting.
    Checked,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SnfOptions {
    pub transforms: bool,
    pub overflow: OverflowPolicy,
}

impl SnfOptions {
    pub fn with_transforms() -> Self {
        SnfOptions {
            transforms: true,
            ..Default::default()
        }
    }
}

/// Unimodular `left` (rows x rows) and `right` (cols x cols) with `left * M * right = D`.
#[derive(Clone, Debug)]
pub struct SnfTransforms {
    pub left: DenseIntMatrix,
    pub right: DenseIntMatrix,
}

#[derive(Clone, Debug)]
pub struct SmithForm {
    pub rows: usize,
    pub cols: usize,
    /// Nonzero invariant factors, positive, each dividing the next.
    pub diagonal: Vec<Int>,
    pub transforms: Option<SnfTransforms>,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.diagonal.len()
    }

    /// The full `rows x cols` diagonal matrix `D`.
    pub fn diagonal_matrix(&self) -> DenseIntMatrix {
        let mut d = DenseIntMatrix::zero(self.rows, self.cols);
        for (i, v) in self.diagonal.iter().enumerate() {
            d.set(i, i, v.clone());
        }
        d
    }
}

const DENSE_MIN_DIM: usize = 64;
const DENSE_DENSITY: f64 = 0.2;
const WIDE_RATIO: usize = 4;

pub fn smith_normal_form(m: &SparseIntMatrix, opts: SnfOptions) -> Result<SmithForm, ZalgError> {
    let (rows, cols) = (m.rows(), m.cols());
    if opts.transforms {
        let (diagonal, tr) = dense_snf(m.to_dense(), true, opts.overflow)?;
        return Ok(SmithForm {
            rows,
            cols,
            diagonal,
            transforms: tr,
        });
    }
    let diagonal = if rows.min(cols) <= DENSE_MIN_DIM || m.density() > DENSE_DENSITY {
        dense_snf(m.to_dense(), false, opts.overflow)?.0
    } else if cols > WIDE_RATIO * rows {
        ColumnStream::new(rows).run(m, opts.overflow)?
    } else {
        SparseElimination::new(m.clone()).run(opts.overflow)?
    };
    Ok(SmithForm {
        rows,
        cols,
        diagonal,
        transforms: None,
    })
}

/// Invariant factors of a matrix without transforms.
pub fn invariant_factors(m: &SparseIntMatrix) -> Result<Vec<Int>, ZalgError> {
    Ok(smith_normal_form(m, SnfOptions::default())?.diagonal)
}

pub fn rank(m: &SparseIntMatrix) -> Result<usize, ZalgError> {
    Ok(invariant_factors(m)?.len())
}

fn guard(v: &Int, policy: OverflowPolicy) -> Result<(), ZalgError> {
    if policy == OverflowPolicy::Checked && v.is_big() {
        Err(ZalgError::Overflow)
    } else {
        Ok(())
    }
}

/// Rewrites a list of nonzero diagonal entries into a positive divisibility chain
/// with the same cokernel.
pub fn normalize_chain(mut diag: Vec<Int>) -> Vec<Int> {
    for d in diag.iter_mut() {
        *d = d.abs();
    }
    diag.sort();
    let n = diag.len();
    for i in 0..n {
        for j in i + 1..n {
            if diag[j].is_divisible_by(&diag[i]) {
                continue;
            }
            let g = diag[i].gcd(&diag[j]);
            let l = diag[i].lcm(&diag[j]);
            diag[i] = g;
            diag[j] = l;
        }
    }
    diag
}

type Transforms = Option<SnfTransforms>;

fn dense_snf(
    mut a: DenseIntMatrix,
    track: bool,
    policy: OverflowPolicy,
) -> Result<(Vec<Int>, Transforms), ZalgError> {
    let (r, c) = (a.rows(), a.cols());
    let mut u = track.then(|| DenseIntMatrix::identity(r));
    let mut v = track.then(|| DenseIntMatrix::identity(c));
    let mut diag = Vec::new();
    let minus_one = Int::from(-1);

    for t in 0..r.min(c) {
        let Some((pi, pj)) = min_abs_entry(&a, t, t) else {
            break;
        };
        a.swap_rows(t, pi);
        a.swap_cols(t, pj);
        if let Some(u) = u.as_mut() {
            u.swap_rows(t, pi);
        }
        if let Some(v) = v.as_mut() {
            v.swap_cols(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..r {
                if a.get(i, t).is_zero() {
                    continue;
                }
                let q = a.get(i, t).div_round(a.get(t, t));
                a.row_sub_mul(i, &q, t);
                if let Some(u) = u.as_mut() {
                    u.row_sub_mul(i, &q, t);
                }
                if policy == OverflowPolicy::Checked {
                    a.row(i).iter().try_for_each(|x| guard(x, policy))?;
                }
                if !a.get(i, t).is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..c {
                if a.get(t, j).is_zero() {
                    continue;
                }
                let q = a.get(t, j).div_round(a.get(t, t));
                a.col_sub_mul(j, &q, t);
                if let Some(v) = v.as_mut() {
                    v.col_sub_mul(j, &q, t);
                }
                if policy == OverflowPolicy::Checked {
                    (0..r).try_for_each(|i| guard(a.get(i, j), policy))?;
                }
                if !a.get(t, j).is_zero() {
                    clean = false;
                }
            }
            if !clean {
                // bring the smallest leftover in row t / column t into the pivot
                let mut best: Option<(usize, usize)> = None;
                let cands = (t + 1..r).map(|i| (i, t)).chain((t + 1..c).map(|j| (t, j)));
                for (i, j) in cands {
                    let x = a.get(i, j);
                    if x.is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| x.cmp_abs(a.get(bi, bj)).is_lt()) {
                        best = Some((i, j));
                    }
                }
                let (i, j) = best.expect("unclean pivot row or column has a nonzero entry");
                a.swap_rows(t, i);
                a.swap_cols(t, j);
                if let Some(u) = u.as_mut() {
                    u.swap_rows(t, i);
                }
                if let Some(v) = v.as_mut() {
                    v.swap_cols(t, j);
                }
                continue;
            }
            if track {
                let p = a.get(t, t).clone();
                let bad =
                    (t + 1..r).find(|&i| (t + 1..c).any(|j| !a.get(i, j).is_divisible_by(&p)));
                if let Some(i) = bad {
                    a.row_sub_mul(t, &minus_one, i);
                    if let Some(u) = u.as_mut() {
                        u.row_sub_mul(t, &minus_one, i);
                    }
                    continue;
                }
            }
            break;
        }
        if a.get(t, t).is_negative() {
            a.negate_row(t);
            if let Some(u) = u.as_mut() {
                u.negate_row(t);
            }
        }
        diag.push(a.get(t, t).clone());
    }

    if let Some(u) = &u {
        for i in 0..u.rows() {
            for x in u.row(i) {
                guard(x, policy)?;
            }
        }
    }
    let transforms = match (u, v) {
        (Some(left), Some(right)) => Some(SnfTransforms { left, right }),
        _ => None,
    };
    let diag = if track { diag } else { normalize_chain(diag) };
    Ok((diag, transforms))
}

fn min_abs_entry(a: &DenseIntMatrix, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in r0..a.rows() {
        for j in c0..a.cols() {
            let x = a.get(i, j);
            if x.is_zero() {
                continue;
            }
            if x.is_unit() {
                return Some((i, j));
            }
            if best.is_none_or(|(bi, bj)| x.cmp_abs(a.get(bi, bj)).is_lt()) {
                best = Some((i, j));
            }
        }
    }
    best
}

/// Column-major working copy with per-row supports for pivot selection.
struct SparseElimination {
    rows: usize,
    cols: Vec<Vec<(u32, Int)>>,
    row_support: Vec<BTreeSet<u32>>,
    row_done: Vec<bool>,
}

impl SparseElimination {
    fn new(m: SparseIntMatrix) -> Self {
        let rows = m.rows();
        let cols = m.into_columns();
        let mut row_support = vec![BTreeSet::new(); rows];
        for (c, col) in cols.iter().enumerate() {
            for (r, _) in col {
                row_support[*r as usize].insert(c as u32);
            }
        }
        SparseElimination {
            rows,
            cols,
            row_support,
            row_done: vec![false; rows],
        }
    }

    fn entry(&self, c: u32, r: u32) -> Option<&Int> {
        let col = &self.cols[c as usize];
        col.binary_search_by_key(&r, |e| e.0)
            .ok()
            .map(|i| &col[i].1)
    }

    /// `cols[target] -= q * source`, keeping row supports in sync.
    fn axpy(
        &mut self,
        target: u32,
        q: &Int,
        source: &[(u32, Int)],
        policy: OverflowPolicy,
    ) -> Result<(), ZalgError> {
        let old = std::mem::take(&mut self.cols[target as usize]);
        let mut out = Vec::with_capacity(old.len() + source.len());
        let (mut i, mut j) = (0, 0);
        while i < old.len() || j < source.len() {
            let take_old = j >= source.len() || (i < old.len() && old[i].0 < source[j].0);
            let take_src = i >= old.len() || (j < source.len() && source[j].0 < old[i].0);
            if take_old {
                out.push(old[i].clone());
                i += 1;
            } else if take_src {
                let (r, s) = &source[j];
                let v = Int::ZERO.sub_mul(q, s);
                guard(&v, policy)?;
                self.row_support[*r as usize].insert(target);
                out.push((*r, v));
                j += 1;
            } else {
                let r = old[i].0;
                let v = old[i].1.sub_mul(q, &source[j].1);
                guard(&v, policy)?;
                if v.is_zero() {
                    self.row_support[r as usize].remove(&target);
                } else {
                    out.push((r, v));
                }
                i += 1;
                j += 1;
            }
        }
        self.cols[target as usize] = out;
        Ok(())
    }

    fn eliminate_unit(&mut self, r: u32, c: u32, policy: OverflowPolicy) -> Result<(), ZalgError> {
        let pivot_col = std::mem::take(&mut self.cols[c as usize]);
        let p = pivot_col
            .iter()
            .find(|e| e.0 == r)
            .map(|e| e.1.clone())
            .expect("pivot present");
        let others: Vec<u32> = self.row_support[r as usize]
            .iter()
            .copied()
            .filter(|&x| x != c)
            .collect();
        for c2 in others {
            // p is a unit, so a / p == a * p
            let f = self.entry(c2, r).expect("row support is exact").mul(&p);
            self.axpy(c2, &f, &pivot_col, policy)?;
        }
        for (row, _) in &pivot_col {
            self.row_support[*row as usize].remove(&c);
        }
        self.row_support[r as usize].clear();
        self.row_done[r as usize] = true;
        Ok(())
    }

    fn unit_phase(&mut self, policy: OverflowPolicy) -> Result<usize, ZalgError> {
        let mut units = 0;
        loop {
            let mut order: Vec<(usize, u32)> = (0..self.rows)
                .filter(|&r| !self.row_done[r] && !self.row_support[r].is_empty())
                .map(|r| (self.row_support[r].len(), r as u32))
                .collect();
            order.sort_unstable();
            let mut progress = false;
            for (_, r) in order {
                if self.row_support[r as usize].is_empty() {
                    continue;
                }
                let mut best: Option<(usize, u32)> = None;
                for &c in &self.row_support[r as usize] {
                    if self.entry(c, r).is_some_and(Int::is_unit) {
                        let len = self.cols[c as usize].len();
                        if best.is_none_or(|(bl, _)| len < bl) {
                            best = Some((len, c));
                        }
                    }
                }
                if let Some((_, c)) = best {
                    self.eliminate_unit(r, c, policy)?;
                    units += 1;
                    progress = true;
                }
            }
            if !progress {
                return Ok(units);
            }
        }
    }

    /// Reduces the surviving rows to column-echelon form; returns (rows, pivot columns).
    fn echelon_phase(&mut self, policy: OverflowPolicy) -> Result<(Vec<u32>, Vec<u32>), ZalgError> {
        let rows_left: Vec<u32> = (0..self.rows as u32)
            .filter(|&r| !self.row_support[r as usize].is_empty())
            .collect();
        let mut pivoted = vec![false; self.cols.len()];
        let mut pivots = Vec::new();
        for &r in &rows_left {
            loop {
                let cands: Vec<u32> = self.row_support[r as usize]
                    .iter()
                    .copied()
                    .filter(|&c| !pivoted[c as usize])
                    .collect();
                match cands.len() {
                    0 => break,
                    1 => {
                        pivoted[cands[0] as usize] = true;
                        pivots.push(cands[0]);
                        break;
                    }
                    _ => {}
                }
                let p = *cands
                    .iter()
                    .min_by(|&&a, &&b| {
                        let (va, vb) = (self.entry(a, r).unwrap(), self.entry(b, r).unwrap());
                        va.cmp_abs(vb)
                            .then(
                                self.cols[a as usize]
                                    .len()
                                    .cmp(&self.cols[b as usize].len()),
                            )
                            .then(a.cmp(&b))
                    })
                    .unwrap();
                let pivot_col = self.cols[p as usize].clone();
                let pv = self.entry(p, r).unwrap().clone();
                for &c2 in cands.iter().filter(|&&c2| c2 != p) {
                    let q = self.entry(c2, r).unwrap().div_round(&pv);
                    self.axpy(c2, &q, &pivot_col, policy)?;
                }
            }
        }
        Ok((rows_left, pivots))
    }

    fn run(mut self, policy: OverflowPolicy) -> Result<Vec<Int>, ZalgError> {
        let units = self.unit_phase(policy)?;
        let (rows_left, pivots) = self.echelon_phase(policy)?;
        let mut row_index = vec![usize::MAX; self.rows];
        for (i, &r) in rows_left.iter().enumerate() {
            row_index[r as usize] = i;
        }
        let mut dense = DenseIntMatrix::zero(rows_left.len(), pivots.len());
        for (j, &c) in pivots.iter().enumerate() {
            for (r, v) in &self.cols[c as usize] {
                dense.set(row_index[*r as usize], j, v.clone());
            }
        }
        let (rest, _) = dense_snf(dense, false, policy)?;
        let mut diag = vec![Int::ONE; units];
        diag.extend(rest);
        Ok(normalize_chain(diag))
    }
}

type SparseVec = Vec<(u32, Int)>;

/// `a * x + b * y` for sorted sparse vectors.
fn combine(
    a: &Int,
    x: &[(u32, Int)],
    b: &Int,
    y: &[(u32, Int)],
    policy: OverflowPolicy,
) -> Result<SparseVec, ZalgError> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let (r, v) = if j >= y.len() || (i < x.len() && x[i].0 < y[j].0) {
            i += 1;
            (x[i - 1].0, a.mul(&x[i - 1].1))
        } else if i >= x.len() || y[j].0 < x[i].0 {
            j += 1;
            (y[j - 1].0, b.mul(&y[j - 1].1))
        } else {
            i += 1;
            j += 1;
            (x[i - 1].0, a.mul(&x[i - 1].1).add(&b.mul(&y[j - 1].1)))
        };
        guard(&v, policy)?;
        if !v.is_zero() {
            out.push((r, v));
        }
    }
    Ok(out)
}

fn coefficient(v: &[(u32, Int)], r: u32) -> Option<&Int> {
    v.binary_search_by_key(&r, |e| e.0).ok().map(|i| &v[i].1)
}

/// `(g, s, t)` with `s a + t b = g` and `|g| = gcd(a, b)`.
fn xgcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (Int::ONE, Int::ZERO);
    let (mut t0, mut t1) = (Int::ZERO, Int::ONE);
    while !r1.is_zero() {
        let q = r0.div_round(&r1);
        let r2 = r0.sub_mul(&q, &r1);
        let s2 = s0.sub_mul(&q, &s1);
        let t2 = t0.sub_mul(&q, &t1);
        (r0, r1) = (r1, r2);
        (s0, s1) = (s1, s2);
        (t0, t1) = (t1, t2);
    }
    (r0, s0, t0)
}

/// Column-at-a-time reduction of the column lattice.
///
/// `units` holds vectors with a `1` at their own row and `0` at every other
/// unit row. `hard` holds the rest, supported on the remaining rows and keyed by
/// their first row with distinct keys. The matrix `[units | hard]` spans the
/// same lattice as the columns seen so far, and after row operations with the
/// unit pivots it is `I ⊕ hard`.
struct ColumnStream {
    unit_of_row: Vec<Option<u32>>,
    units: Vec<SparseVec>,
    hard: BTreeMap<u32, SparseVec>,
}

impl ColumnStream {
    fn new(rows: usize) -> Self {
        ColumnStream {
            unit_of_row: vec![None; rows],
            units: Vec::new(),
            hard: BTreeMap::new(),
        }
    }

    fn reduce(&self, mut v: SparseVec, policy: OverflowPolicy) -> Result<SparseVec, ZalgError> {
        let hits: Vec<(u32, Int)> = v
            .iter()
            .filter_map(|(r, x)| self.unit_of_row[*r as usize].map(|u| (u, x.neg())))
            .collect();
        for (u, x) in hits {
            v = combine(&Int::ONE, &v, &x, &self.units[u as usize], policy)?;
        }
        Ok(v)
    }

    fn promote(
        &mut self,
        mut v: SparseVec,
        r: u32,
        stack: &mut Vec<SparseVec>,
        policy: OverflowPolicy,
    ) -> Result<(), ZalgError> {
        if coefficient(&v, r).unwrap().is_negative() {
            for e in v.iter_mut() {
                e.1 = e.1.neg();
            }
        }
        for u in self.units.iter_mut() {
            if let Some(x) = coefficient(u, r) {
                let x = x.neg();
                *u = combine(&Int::ONE, u, &x, &v, policy)?;
            }
        }
        let touched: Vec<u32> = self
            .hard
            .iter()
            .filter(|(_, h)| coefficient(h, r).is_some())
            .map(|(k, _)| *k)
            .collect();
        for k in touched {
            stack.push(self.hard.remove(&k).unwrap());
        }
        self.unit_of_row[r as usize] = Some(self.units.len() as u32);
        self.units.push(v);
        Ok(())
    }

    fn place(
        &mut self,
        v: SparseVec,
        stack: &mut Vec<SparseVec>,
        policy: OverflowPolicy,
    ) -> Result<(), ZalgError> {
        let v = self.reduce(v, policy)?;
        if v.is_empty() {
            return Ok(());
        }
        if let Some((r, _)) = v.iter().find(|e| e.1.is_unit()) {
            let r = *r;
            return self.promote(v, r, stack, policy);
        }
        let r = v[0].0;
        let Some(h) = self.hard.remove(&r) else {
            self.hard.insert(r, v);
            return Ok(());
        };
        let (a, b) = (v[0].1.clone(), h[0].1.clone());
        if a.is_divisible_by(&b) {
            let q = a.div_round(&b).neg();
            stack.push(combine(&Int::ONE, &v, &q, &h, policy)?);
            self.hard.insert(r, h);
        } else {
            let (g, s, t) = xgcd(&a, &b);
            stack.push(combine(&s, &v, &t, &h, policy)?);
            stack.push(combine(
                &b.div_round(&g),
                &v,
                &a.div_round(&g).neg(),
                &h,
                policy,
            )?);
        }
        Ok(())
    }

    fn run(mut self, m: &SparseIntMatrix, policy: OverflowPolicy) -> Result<Vec<Int>, ZalgError> {
        let mut stack = Vec::new();
        for c in 0..m.cols() {
            stack.push(m.column(c).to_vec());
            while let Some(v) = stack.pop() {
                self.place(v, &mut stack, policy)?;
            }
        }
        let free: Vec<usize> = (0..self.unit_of_row.len())
            .filter(|&r| self.unit_of_row[r].is_none())
            .collect();
        let mut row_index = vec![usize::MAX; self.unit_of_row.len()];
        for (i, &r) in free.iter().enumerate() {
            row_index[r] = i;
        }
        let mut dense = DenseIntMatrix::zero(free.len(), self.hard.len());
        for (j, h) in self.hard.values().enumerate() {
            for (r, v) in h {
                dense.set(row_index[*r as usize], j, v.clone());
            }
        }
        let (rest, _) = dense_snf(dense, false, policy)?;
        let mut diag = vec![Int::ONE; self.units.len()];
        diag.extend(rest);
        Ok(normalize_chain(diag))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diag_of(rows: &[Vec<i64>]) -> Vec<i64> {
        let m = SparseIntMatrix::from_dense(rows);
        invariant_factors(&m)
            .unwrap()
            .iter()
            .map(|v| v.to_i64().unwrap())
            .collect()
    }

    #[test]
    fn identity_and_padded_diagonal() {
        assert_eq!(
            diag_of(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]),
            vec![1, 1, 1]
        );
        assert_eq!(diag_of(&[vec![2, 0], vec![0, 4], vec![0, 0]]), vec![2, 4]);
    }

    #[test]
    fn two_by_two_gcd_and_determinant() {
        // det = -8, gcd of entries = 2
        assert_eq!(diag_of(&[vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(diag_of(&[vec![2, 0], vec![0, 3]]), vec![1, 6]);
    }

    #[test]
    fn transforms_reconstruct_the_diagonal() {
        let m = SparseIntMatrix::from_dense(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        let f = smith_normal_form(&m, SnfOptions::with_transforms()).unwrap();
        let tr = f.transforms.as_ref().unwrap();
        let prod = tr.left.mul(&m.to_dense()).mul(&tr.right);
        assert_eq!(prod, f.diagonal_matrix());
        assert!(tr.left.determinant().is_unit());
        assert!(tr.right.determinant().is_unit());
        let d: Vec<i64> = f.diagonal.iter().map(|v| v.to_i64().unwrap()).collect();
        assert_eq!(d, vec![2, 6, 12]);
    }

    #[test]
    fn checked_policy_reports_overflow() {
        let big = 1i64 << 62;
        let m = SparseIntMatrix::from_dense(&[vec![big, 3], vec![3, big]]);
        let checked = SnfOptions {
            transforms: true,
            overflow: OverflowPolicy::Checked,
        };
        assert!(matches!(
            smith_normal_form(&m, checked),
            Err(ZalgError::Overflow)
        ));
        let f = smith_normal_form(&m, SnfOptions::with_transforms()).unwrap();
        assert_eq!(f.rank(), 2);
    }

    #[test]
    fn sparse_path_agrees_with_dense_path() {
        // 70 x 90 banded matrix forces the sparse path
        let mut triplets = Vec::new();
        for i in 0..70usize {
            triplets.push((i, i, Int::from(if i % 7 == 0 { 2 } else { 1 })));
            triplets.push((i, i + 1, Int::from(3)));
            triplets.push((i, (i * 13) % 90, Int::from(-2)));
        }
        let m = SparseIntMatrix::from_triplets(70, 90, triplets).unwrap();
        let sparse = SparseElimination::new(m.clone())
            .run(OverflowPolicy::BigInt)
            .unwrap();
        let dense = dense_snf(m.to_dense(), false, OverflowPolicy::BigInt)
            .unwrap()
            .0;
        assert_eq!(sparse, dense);
    }

    #[test]
    fn streaming_path_agrees_with_dense_path() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..40 {
            let (rows, cols) = (rng.gen_range(1..12), rng.gen_range(1..60));
            let mut triplets = Vec::new();
            for c in 0..cols {
                for _ in 0..rng.gen_range(0..4) {
                    let v = [-4i64, -2, -1, 1, 2, 3, 6][rng.gen_range(0..7)];
                    triplets.push((rng.gen_range(0..rows), c, Int::from(v)));
                }
            }
            let m = SparseIntMatrix::from_triplets(rows, cols, triplets).unwrap();
            let stream = ColumnStream::new(rows)
                .run(&m, OverflowPolicy::BigInt)
                .unwrap();
            let dense = dense_snf(m.to_dense(), false, OverflowPolicy::BigInt)
                .unwrap()
                .0;
            assert_eq!(stream, dense);
        }
    }
}
