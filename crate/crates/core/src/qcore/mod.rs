//! Finite quandles stored as operation tables, with axiom checking and the
//! basic invariants: type, orbits, connectivity and the inner group.

mod format;
mod iso;

pub use format::{parse_map, parse_table, write_map, write_table};
pub use iso::find_isomorphism;

use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::permgrp::{Perm, PermGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axiom {
    /// `a ◁ a = a`
    Idempotence,
    /// every right translation `• ◁ b` is a bijection
    RightInvertibility,
    /// `(a ◁ b) ◁ c = (a ◁ c) ◁ (b ◁ c)`
    SelfDistributivity,
}

impl Axiom {
    pub fn roman(self) -> &'static str {
        match self {
            Axiom::Idempotence => "i",
            Axiom::RightInvertibility => "ii",
            Axiom::SelfDistributivity => "iii",
        }
    }
}

impl fmt::Display for Axiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Axiom::Idempotence => "idempotence",
            Axiom::RightInvertibility => "right translations bijective",
            Axiom::SelfDistributivity => "right self-distributivity",
        };
        write!(f, "({}) {name}", self.roman())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuandleError {
    /// For (i) the witness is `(a, a, a)`; for (ii) two rows `a ≠ b` with the same
    /// entry in column `c`; for (iii) the failing triple.
    #[error("axiom {axiom} violated at {witness:?}")]
    AxiomViolation {
        axiom: Axiom,
        witness: (u32, u32, u32),
    },
    #[error("table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },
    #[error("entry ({row}, {col}) = {value} is outside 0..{order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: i64,
        order: usize,
    },
    #[error("empty table")]
    Empty,
    #[error("table parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("map is not surjective: {missing} has no preimage")]
    NotSurjective { missing: u32 },
    #[error("map has {len} entries but the source has order {order}")]
    MapLength { len: usize, order: usize },
}

/// An order-`n` quandle on `0..n` with a verified operation table.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    order: usize,
    /// Row-major: `table[a * n + b] = a ◁ b`.
    table: Vec<u32>,
    labels: Option<Vec<String>>,
}

impl fmt::Debug for FiniteQuandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteQuandle(order {})", self.order)
    }
}

impl FiniteQuandle {
    /// Validates a square table, reporting the first violated axiom.
    pub fn validate(rows: &[Vec<i64>]) -> Result<FiniteQuandle, QuandleError> {
        let n = rows.len();
        if n == 0 {
            return Err(QuandleError::Empty);
        }
        let mut table = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(QuandleError::NotSquare {
                    row: r,
                    len: row.len(),
                    expected: n,
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v < 0 || v as usize >= n {
                    return Err(QuandleError::EntryOutOfRange {
                        row: r,
                        col: c,
                        value: v,
                        order: n,
                    });
                }
                table.push(v as u32);
            }
        }
        Self::from_flat(n, table)
    }

    /// Validates a row-major table of length `n * n` with entries in range.
    pub fn from_flat(n: usize, table: Vec<u32>) -> Result<FiniteQuandle, QuandleError> {
        assert_eq!(table.len(), n * n);
        let q = FiniteQuandle {
            order: n,
            table,
            labels: None,
        };
        q.check_axioms()?;
        Ok(q)
    }

    /// Tabulates `op` and validates the result.
    pub fn from_fn(n: usize, op: impl Fn(u32, u32) -> u32) -> Result<FiniteQuandle, QuandleError> {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n as u32 {
            for b in 0..n as u32 {
                let v = op(a, b);
                if v as usize >= n {
                    return Err(QuandleError::EntryOutOfRange {
                        row: a as usize,
                        col: b as usize,
                        value: v as i64,
                        order: n,
                    });
                }
                table.push(v);
            }
        }
        Self::from_flat(n, table)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> FiniteQuandle {
        assert_eq!(labels.len(), self.order);
        self.labels = Some(labels);
        self
    }

    fn check_axioms(&self) -> Result<(), QuandleError> {
        let n = self.order as u32;
        for a in 0..n {
            if self.op(a, a) != a {
                return Err(QuandleError::AxiomViolation {
                    axiom: Axiom::Idempotence,
                    witness: (a, a, a),
                });
            }
        }
        for c in 0..n {
            let mut first_row = vec![u32::MAX; self.order];
            for a in 0..n {
                let v = self.op(a, c) as usize;
                if first_row[v] != u32::MAX {
                    return Err(QuandleError::AxiomViolation {
                        axiom: Axiom::RightInvertibility,
                        witness: (first_row[v], a, c),
                    });
                }
                first_row[v] = a;
            }
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.op(a, b);
                for c in 0..n {
                    if self.op(ab, c) != self.op(self.op(a, c), self.op(b, c)) {
                        return Err(QuandleError::AxiomViolation {
                            axiom: Axiom::SelfDistributivity,
                            witness: (a, b, c),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `a ◁ b`.
    #[inline]
    pub fn op(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    pub fn row(&self, a: u32) -> &[u32] {
        let n = self.order;
        &self.table[a as usize * n..(a as usize + 1) * n]
    }

    pub fn flat_table(&self) -> &[u32] {
        &self.table
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: u32) -> String {
        match &self.labels {
            Some(l) => l[a as usize].clone(),
            None => a.to_string(),
        }
    }

    /// The right translation `• ◁ b`.
    pub fn column_perm(&self, b: u32) -> Perm {
        Perm::from_images_unchecked((0..self.order as u32).map(|a| self.op(a, b)).collect())
    }

    /// `a ◁^k b`.
    pub fn op_pow(&self, mut a: u32, b: u32, k: u64) -> u32 {
        for _ in 0..k {
            a = self.op(a, b);
        }
        a
    }

    /// Smallest `t ≥ 1` with `x ◁^t y = x` for all `x, y`: the lcm of the orders of
    /// the right translations.
    pub fn quandle_type(&self) -> u64 {
        (0..self.order as u32)
            .map(|b| self.column_perm(b).order())
            .fold(1, |acc, o| acc.lcm(&o))
    }

    /// Distinct right translations in order of first appearance.
    pub fn inner_generators(&self) -> Vec<Perm> {
        let mut seen = std::collections::HashSet::new();
        let gens: Vec<Perm> = (0..self.order as u32)
            .map(|b| self.column_perm(b))
            .filter(|p| seen.insert(p.clone()))
            .collect();
        gens
    }

    pub fn inner_group(&self) -> PermGroup {
        PermGroup::new(self.order, self.inner_generators())
    }

    /// Orbits of the inner group, each sorted, ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        self.inner_group().orbits()
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn profile(&self) -> QuandleProfile {
        let inn = self.inner_group();
        let orbits = inn.orbits();
        QuandleProfile {
            type_t: self.quandle_type(),
            connected: orbits.len() == 1,
            orbits,
            inn_order: inn.order(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        (0..self.order as u32).all(|a| self.row(a).iter().all(|&v| v == a))
    }

    /// Relabels elements so that `perm[a]` becomes the new name of `a`.
    pub fn relabel(&self, perm: &[u32]) -> FiniteQuandle {
        let n = self.order;
        let mut inv = vec![0u32; n];
        for (a, &p) in perm.iter().enumerate() {
            inv[p as usize] = a as u32;
        }
        let table = (0..n as u32)
            .flat_map(|a| (0..n as u32).map(move |b| (a, b)))
            .map(|(a, b)| perm[self.op(inv[a as usize], inv[b as usize]) as usize])
            .collect();
        FiniteQuandle {
            order: n,
            table,
            labels: None,
        }
    }
}

/// Type, orbits, connectivity and inner-group order of a quandle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuandleProfile {
    pub type_t: u64,
    pub orbits: Vec<Vec<u32>>,
    pub connected: bool,
    pub inn_order: BigUint,
}

impl QuandleProfile {
    /// For connected quandles the type divides `|Inn| / |X|`; `None` otherwise.
    pub fn type_divides_inn_index(&self, order: usize) -> Option<bool> {
        if !self.connected {
            return None;
        }
        let idx = &self.inn_order / BigUint::from(order);
        Some((idx % BigUint::from(self.type_t)).to_u64() == Some(0))
    }
}

/// `f(a ◁ b) = f(a) ◁ f(b)` for all `a, b`.
pub fn is_homomorphism(
    f: &[u32],
    src: &FiniteQuandle,
    dst: &FiniteQuandle,
) -> Result<bool, QuandleError> {
    check_map(f, src, dst)?;
    let n = src.order() as u32;
    Ok((0..n)
        .all(|a| (0..n).all(|b| f[src.op(a, b) as usize] == dst.op(f[a as usize], f[b as usize]))))
}

/// Surjective homomorphism whose fibers act identically: `f(x) = f(y)` implies
/// `a ◁ x = a ◁ y` for every `a`.
pub fn is_covering(
    f: &[u32],
    src: &FiniteQuandle,
    dst: &FiniteQuandle,
) -> Result<bool, QuandleError> {
    check_map(f, src, dst)?;
    let mut hit = vec![false; dst.order()];
    for &v in f {
        hit[v as usize] = true;
    }
    if let Some(missing) = hit.iter().position(|h| !h) {
        return Err(QuandleError::NotSurjective {
            missing: missing as u32,
        });
    }
    if !is_homomorphism(f, src, dst)? {
        return Ok(false);
    }
    // one representative column per fiber
    let mut rep: Vec<Option<u32>> = vec![None; dst.order()];
    for x in 0..src.order() as u32 {
        match rep[f[x as usize] as usize] {
            None => rep[f[x as usize] as usize] = Some(x),
            Some(y) => {
                if (0..src.order() as u32).any(|a| src.op(a, x) != src.op(a, y)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

fn check_map(f: &[u32], src: &FiniteQuandle, dst: &FiniteQuandle) -> Result<(), QuandleError> {
    if f.len() != src.order() {
        return Err(QuandleError::MapLength {
            len: f.len(),
            order: src.order(),
        });
    }
    if let Some((a, &v)) = f
        .iter()
        .enumerate()
        .find(|(_, &v)| v as usize >= dst.order())
    {
        return Err(QuandleError::EntryOutOfRange {
            row: a,
            col: 0,
            value: v as i64,
            order: dst.order(),
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dihedral(n: i64) -> FiniteQuandle {
        let rows: Vec<Vec<i64>> = (0..n)
            .map(|x| (0..n).map(|y| (2 * y - x).rem_euclid(n)).collect())
            .collect();
        FiniteQuandle::validate(&rows).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert_eq!(FiniteQuandle::validate(&[vec![0]]).unwrap().order(), 1);
        assert_eq!(dihedral(3).order(), 3);
        let err = FiniteQuandle::validate(&[vec![0, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(
            err,
            QuandleError::AxiomViolation {
                axiom: Axiom::RightInvertibility,
                witness: (0, 1, 0)
            }
        ));
        let err = FiniteQuandle::validate(&[vec![1, 0], vec![0, 1]]).unwrap_err();
        assert!(matches!(
            err,
            QuandleError::AxiomViolation {
                axiom: Axiom::Idempotence,
                ..
            }
        ));
        assert!(matches!(
            FiniteQuandle::validate(&[vec![0, 2], vec![0, 1]]),
            Err(QuandleError::EntryOutOfRange { .. })
        ));
    }

    #[test]
    fn self_distributivity_failure_is_reported() {
        // idempotent, columns bijective, not self-distributive
        let rows = vec![vec![0, 2, 0], vec![2, 1, 1], vec![1, 0, 2]];
        match FiniteQuandle::validate(&rows) {
            Err(QuandleError::AxiomViolation { axiom, .. }) => {
                assert_eq!(axiom, Axiom::SelfDistributivity)
            }
            other => panic!("expected a violation, got {other:?}"),
        }
    }

    #[test]
    fn profiles() {
        let r3 = dihedral(3);
        let p = r3.profile();
        assert_eq!(p.type_t, 2);
        assert!(p.connected);
        assert_eq!(p.inn_order, BigUint::from(6u32));
        assert_eq!(p.type_divides_inn_index(3), Some(true));
        let r4 = dihedral(4);
        assert_eq!(r4.orbits(), vec![vec![0, 2], vec![1, 3]]);
        let trivial = FiniteQuandle::from_fn(2, |a, _| a).unwrap();
        assert_eq!(trivial.quandle_type(), 1);
        assert_eq!(trivial.inner_generators(), vec![Perm::identity(2)]);
        assert_eq!(trivial.orbits().len(), 2);
    }

    #[test]
    fn coverings() {
        let r3 = dihedral(3);
        let id: Vec<u32> = (0..3).collect();
        assert!(is_covering(&id, &r3, &r3).unwrap());
        let point = FiniteQuandle::from_fn(1, |_, _| 0).unwrap();
        assert!(is_homomorphism(&[0, 0, 0], &r3, &point).unwrap());
        // the three columns of R3 differ, so collapsing them is not a covering
        assert!(!is_covering(&[0, 0, 0], &r3, &point).unwrap());
        let t3 = FiniteQuandle::from_fn(3, |a, _| a).unwrap();
        assert!(is_covering(&[0, 0, 0], &t3, &point).unwrap());
        let r4 = dihedral(4);
        let t2 = FiniteQuandle::from_fn(2, |a, _| a).unwrap();
        let parity = [0, 1, 0, 1];
        assert!(is_homomorphism(&parity, &r4, &t2).unwrap());
        assert!(is_covering(&parity, &r4, &t2).unwrap());
        assert!(matches!(
            is_covering(&[0, 0, 0, 0], &r4, &t2),
            Err(QuandleError::NotSurjective { missing: 1 })
        ));
    }
}
