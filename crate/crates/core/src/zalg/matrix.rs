use std::fmt::Write as _;

use super::int::Int;
use super::ZalgError;

/// Column-major sparse integer matrix. Stored entries are nonzero and each
/// column is sorted by row with no duplicates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseIntMatrix {
    rows: usize,
    cols: usize,
    columns: Vec<Vec<(u32, Int)>>,
}

impl SparseIntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        SparseIntMatrix {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    /// Builds a matrix from `(row, col, value)` triples. Repeated positions are
    /// summed and zeros dropped.
    pub fn from_triplets<I>(rows: usize, cols: usize, triplets: I) -> Result<Self, ZalgError>
    where
        I: IntoIterator<Item = (usize, usize, Int)>,
    {
        let mut columns: Vec<Vec<(u32, Int)>> = vec![Vec::new(); cols];
        for (r, c, v) in triplets {
            if r >= rows || c >= cols {
                return Err(ZalgError::IndexOutOfRange {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            columns[c].push((r as u32, v));
        }
        for col in &mut columns {
            *col = normalize_column(std::mem::take(col));
        }
        Ok(SparseIntMatrix {
            rows,
            cols,
            columns,
        })
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseIntMatrix::zero(nrows, ncols);
        for (c, col) in m.columns.iter_mut().enumerate() {
            for (r, row) in rows.iter().enumerate() {
                if row[c] != 0 {
                    col.push((r as u32, Int::from(row[c])));
                }
            }
        }
        m
    }

    /// Builds a matrix from (row, coefficient) columns, accumulating repeats.
    pub fn from_columns(rows: usize, columns: Vec<Vec<(u32, i64)>>) -> Self {
        let cols = columns.len();
        let columns = columns
            .into_iter()
            .map(|c| {
                assert!(
                    c.iter().all(|&(r, _)| (r as usize) < rows),
                    "row out of range"
                );
                normalize_column(c.into_iter().map(|(r, v)| (r, Int::from(v))).collect())
            })
            .collect();
        SparseIntMatrix {
            rows,
            cols,
            columns,
        }
    }

    /// Appends a column given as (row, coefficient) pairs, accumulating repeats.
    pub fn push_column<I>(&mut self, entries: I)
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let raw: Vec<(u32, Int)> = entries
            .into_iter()
            .map(|(r, v)| {
                assert!(r < self.rows, "row {r} out of range for {} rows", self.rows);
                (r as u32, Int::from(v))
            })
            .collect();
        self.columns.push(normalize_column(raw));
        self.cols += 1;
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn column(&self, c: usize) -> &[(u32, Int)] {
        &self.columns[c]
    }

    pub(crate) fn into_columns(self) -> Vec<Vec<(u32, Int)>> {
        self.columns
    }

    pub fn get(&self, r: usize, c: usize) -> Int {
        match self.columns[c].binary_search_by_key(&(r as u32), |e| e.0) {
            Ok(i) => self.columns[c][i].1.clone(),
            Err(_) => Int::ZERO,
        }
    }

    /// Entries in column-major order.
    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &Int)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r as usize, c, v)))
    }

    pub fn transpose(&self) -> SparseIntMatrix {
        let mut columns: Vec<Vec<(u32, Int)>> = vec![Vec::new(); self.rows];
        for (r, c, v) in self.triplets() {
            columns[r].push((c as u32, v.clone()));
        }
        SparseIntMatrix {
            rows: self.cols,
            cols: self.rows,
            columns,
        }
    }

    /// Product `self * other`.
    pub fn mul(&self, other: &SparseIntMatrix) -> Result<SparseIntMatrix, ZalgError> {
        if self.cols != other.rows {
            return Err(ZalgError::ShapeMismatch {
                left: (self.rows, self.cols),
                right: (other.rows, other.cols),
            });
        }
        let columns = other
            .columns
            .iter()
            .map(|col| self.apply_to_column(col))
            .collect();
        Ok(SparseIntMatrix {
            rows: self.rows,
            cols: other.cols,
            columns,
        })
    }

    /// `self * v` for a sparse vector `v` indexed by this matrix's columns.
    pub fn apply_to_column(&self, v: &[(u32, Int)]) -> Vec<(u32, Int)> {
        let mut acc: Vec<(u32, Int)> = Vec::new();
        for (j, coeff) in v {
            for (r, a) in &self.columns[*j as usize] {
                acc.push((*r, a.mul(coeff)));
            }
        }
        normalize_column(acc)
    }

    pub fn with_zero_columns(&self, extra: usize) -> SparseIntMatrix {
        let mut m = self.clone();
        m.columns.extend(std::iter::repeat_n(Vec::new(), extra));
        m.cols += extra;
        m
    }

    /// Reorders rows and columns: row `r` moves to `row_perm[r]`, column `c` to `col_perm[c]`.
    pub fn permuted(&self, row_perm: &[usize], col_perm: &[usize]) -> SparseIntMatrix {
        let triplets = self
            .triplets()
            .map(|(r, c, v)| (row_perm[r], col_perm[c], v.clone()))
            .collect::<Vec<_>>();
        SparseIntMatrix::from_triplets(self.rows, self.cols, triplets)
            .expect("permutation keeps indices in range")
    }

    pub fn density(&self) -> f64 {
        let cells = self.rows * self.cols;
        if cells == 0 {
            0.0
        } else {
            self.nnz() as f64 / cells as f64
        }
    }

    pub fn to_dense(&self) -> DenseIntMatrix {
        let mut d = DenseIntMatrix::zero(self.rows, self.cols);
        for (r, c, v) in self.triplets() {
            d.set(r, c, v.clone());
        }
        d
    }

    /// Serializes to the interchange format: a `rows cols nnz` header then one
    /// `r c v` line per stored entry, column-major.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {} {}", self.rows, self.cols, self.nnz());
        for (r, c, v) in self.triplets() {
            let _ = writeln!(out, "{r} {c} {v}");
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self, ZalgError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .enumerate()
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(ZalgError::Parse {
            line: 0,
            message: "missing header".into(),
        })?;
        let nums = parse_fields(header, hline)?;
        if nums.len() != 3 {
            return Err(ZalgError::Parse {
                line: hline + 1,
                message: "header must be `rows cols nnz`".into(),
            });
        }
        let (rows, cols, nnz) = (nums[0] as usize, nums[1] as usize, nums[2] as usize);
        let mut triplets = Vec::with_capacity(nnz);
        for (i, line) in lines {
            let f = parse_fields(line, i)?;
            if f.len() != 3 || f[0] < 0 || f[1] < 0 {
                return Err(ZalgError::Parse {
                    line: i + 1,
                    message: "entry must be `r c v`".into(),
                });
            }
            triplets.push((f[0] as usize, f[1] as usize, Int::from(f[2])));
        }
        if triplets.len() != nnz {
            return Err(ZalgError::Parse {
                line: 0,
                message: format!("header announces {nnz} entries, found {}", triplets.len()),
            });
        }
        SparseIntMatrix::from_triplets(rows, cols, triplets)
    }
}

fn parse_fields(line: &str, idx: usize) -> Result<Vec<i64>, ZalgError> {
    line.split_whitespace()
        .map(|t| {
            t.parse::<i64>().map_err(|e| ZalgError::Parse {
                line: idx + 1,
                message: format!("{t:?}: {e}"),
            })
        })
        .collect()
}

/// Sorts by row, merges repeated rows, drops zeros.
pub(crate) fn normalize_column(mut raw: Vec<(u32, Int)>) -> Vec<(u32, Int)> {
    raw.sort_by_key(|e| e.0);
    let mut out: Vec<(u32, Int)> = Vec::with_capacity(raw.len());
    for (r, v) in raw {
        match out.last_mut() {
            Some((lr, lv)) if *lr == r => *lv = lv.add(&v),
            _ => out.push((r, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

/// Row-major dense integer matrix, used for small eliminations and transforms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseIntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Int>,
}

impl DenseIntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        DenseIntMatrix {
            rows,
            cols,
            data: vec![Int::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, Int::ONE);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, |r| r.len());
        let data = rows.iter().flatten().map(|v| Int::from(*v)).collect();
        DenseIntMatrix {
            rows: nrows,
            cols: ncols,
            data,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Int {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Int) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Int] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for r in 0..self.rows {
                self.data.swap(r * self.cols + a, r * self.cols + b);
            }
        }
    }

    /// row[target] -= q * row[source]
    pub fn row_sub_mul(&mut self, target: usize, q: &Int, source: usize) {
        for c in 0..self.cols {
            let s = &self.data[source * self.cols + c];
            if s.is_zero() {
                continue;
            }
            let v = self.data[target * self.cols + c].sub_mul(q, s);
            self.data[target * self.cols + c] = v;
        }
    }

    /// col[target] -= q * col[source]
    pub fn col_sub_mul(&mut self, target: usize, q: &Int, source: usize) {
        for r in 0..self.rows {
            let s = &self.data[r * self.cols + source];
            if s.is_zero() {
                continue;
            }
            let v = self.data[r * self.cols + target].sub_mul(q, s);
            self.data[r * self.cols + target] = v;
        }
    }

    pub fn negate_row(&mut self, r: usize) {
        for c in 0..self.cols {
            let v = self.data[r * self.cols + c].neg();
            self.data[r * self.cols + c] = v;
        }
    }

    pub fn mul(&self, other: &DenseIntMatrix) -> DenseIntMatrix {
        assert_eq!(self.cols, other.rows, "shape mismatch");
        let mut out = DenseIntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).add(&a.mul(b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        out
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Int {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let n = self.rows;
        if n == 0 {
            return Int::ONE;
        }
        let mut a = self.clone();
        let mut sign = false;
        let mut prev = Int::ONE;
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = !sign;
                    }
                    None => return Int::ZERO,
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a
                        .get(i, j)
                        .mul(a.get(k, k))
                        .sub(&a.get(i, k).mul(a.get(k, j)));
                    let q = Int::from(num.to_big() / prev.to_big());
                    a.set(i, j, q);
                }
            }
            prev = a.get(k, k).clone();
        }
        let d = a.get(n - 1, n - 1).clone();
        if sign {
            d.neg()
        } else {
            d
        }
    }

    pub fn to_sparse(&self) -> SparseIntMatrix {
        let triplets = (0..self.rows).flat_map(|r| {
            (0..self.cols).filter_map(move |c| {
                let v = self.get(r, c);
                (!v.is_zero()).then(|| (r, c, v.clone()))
            })
        });
        SparseIntMatrix::from_triplets(self.rows, self.cols, triplets.collect::<Vec<_>>())
            .expect("indices in range")
    }
}
