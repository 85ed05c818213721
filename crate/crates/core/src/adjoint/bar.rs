//! Inhomogeneous bar complex of a group.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use super::model::{ClauwensElement, ClauwensGroup};
use super::AdjointError;
use crate::caps::Caps;
use crate::permgrp::FiniteGroup;
use crate::qhomology::{ComplexMode, TupleBasis};
use crate::zalg::{homology_at, AbelianGroupInvariants, SparseIntMatrix};

pub trait GroupLaw {
    type Elem: Clone + Ord + fmt::Debug;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
}

impl GroupLaw for ClauwensGroup {
    type Elem = ClauwensElement;
    fn mul(&self, a: &ClauwensElement, b: &ClauwensElement) -> ClauwensElement {
        ClauwensGroup::mul(self, a, b)
    }
}

impl GroupLaw for FiniteGroup {
    type Elem = usize;
    fn mul(&self, a: &usize, b: &usize) -> usize {
        FiniteGroup::mul(self, *a, *b)
    }
}

/// Formal integer combination of `k`-tuples of group elements; zero terms are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct BarChain<E: Ord> {
    pub degree: usize,
    terms: BTreeMap<Vec<E>, i64>,
}

impl<E: Ord + Clone> BarChain<E> {
    pub fn zero(degree: usize) -> Self {
        BarChain {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(degree: usize, terms: impl IntoIterator<Item = (i64, Vec<E>)>) -> Self {
        let mut c = Self::zero(degree);
        for (coef, t) in terms {
            c.add_term(t, coef);
        }
        c
    }

    pub fn add_term(&mut self, tuple: Vec<E>, coef: i64) {
        assert_eq!(
            tuple.len(),
            self.degree,
            "tuple length must match the degree"
        );
        if coef == 0 {
            return;
        }
        let entry = self.terms.entry(tuple);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coef);
            }
        }
    }

    pub fn add_scaled(&mut self, other: &BarChain<E>, s: i64) {
        assert_eq!(self.degree, other.degree);
        for (t, &c) in &other.terms {
            self.add_term(t.clone(), s * c);
        }
    }

    pub fn scaled(&self, s: i64) -> Self {
        let mut out = Self::zero(self.degree);
        out.add_scaled(self, s);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, tuple: &[E]) -> i64 {
        self.terms.get(tuple).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vec<E>, i64)> {
        self.terms.iter().map(|(t, &c)| (t, c))
    }
}

impl<E: Ord + Clone> std::ops::Sub for &BarChain<E> {
    type Output = BarChain<E>;
    fn sub(self, rhs: &BarChain<E>) -> BarChain<E> {
        let mut out = self.clone();
        out.add_scaled(rhs, -1);
        out
    }
}

impl<E: Ord + fmt::Display> fmt::Display for BarChain<E> {
    /// `+1 [a|b] -2 [c|d]`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (t, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let parts: Vec<String> = t.iter().map(|e| e.to_string()).collect();
            write!(f, "{c:+} [{}]", parts.join("|"))?;
        }
        Ok(())
    }
}

impl<E: Ord + fmt::Debug> fmt::Debug for BarChain<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BarChain")
            .field("degree", &self.degree)
            .field("terms", &self.terms)
            .finish()
    }
}

/// `∂(g_1,…,g_k) = (g_2,…,g_k) + Σ_{i<k} (−1)^i (…, g_i g_{i+1}, …) + (−1)^k (g_1,…,g_{k−1})`.
pub fn bar_boundary<G: GroupLaw>(c: &BarChain<G::Elem>, group: &G) -> BarChain<G::Elem> {
    assert!(c.degree >= 1, "boundary of a degree 0 chain");
    let k = c.degree;
    let mut out = BarChain::zero(k - 1);
    for (t, coef) in c.iter() {
        out.add_term(t[1..].to_vec(), coef);
        for i in 0..k - 1 {
            let mut face = Vec::with_capacity(k - 1);
            face.extend_from_slice(&t[..i]);
            face.push(group.mul(&t[i], &t[i + 1]));
            face.extend_from_slice(&t[i + 2..]);
            out.add_term(face, if i % 2 == 0 { -coef } else { coef });
        }
        out.add_term(t[..k - 1].to_vec(), if k % 2 == 0 { coef } else { -coef });
    }
    out
}

/// `H_2` of the normalized bar complex (tuples without the identity).
pub fn group_h2_bar(
    group: &FiniteGroup,
    caps: &Caps,
) -> Result<AbelianGroupInvariants, AdjointError> {
    let n = group.order();
    if n > caps.group {
        return Err(AdjointError::SizeCap {
            needed: n as u64,
            cap: caps.group as u64,
        });
    }
    let id = group.identity();
    let elems: Vec<usize> = (0..n).filter(|&g| g != id).collect();
    let mut index = vec![u32::MAX; n];
    for (i, &g) in elems.iter().enumerate() {
        index[g] = i as u32;
    }
    let m = elems.len();
    let assemble = |k: usize| -> SparseIntMatrix {
        let source = TupleBasis {
            n: m,
            k,
            mode: ComplexMode::Rack,
        };
        let target = TupleBasis {
            n: m,
            k: k - 1,
            mode: ComplexMode::Rack,
        };
        let columns: Vec<Vec<(u32, i64)>> = (0..source.len())
            .into_par_iter()
            .map(|idx| {
                let mut t = vec![0u32; k];
                source.decode(idx, &mut t);
                let tuple: Vec<usize> = t.iter().map(|&i| elems[i as usize]).collect();
                let d = bar_boundary(&BarChain::from_terms(k, [(1, tuple)]), group);
                d.iter()
                    .filter(|(face, _)| face.iter().all(|&g| g != id))
                    .map(|(face, c)| {
                        let f: Vec<u32> = face.iter().map(|&g| index[g]).collect();
                        (target.encode(&f).unwrap() as u32, c)
                    })
                    .collect()
            })
            .collect();
        SparseIntMatrix::from_columns(target.len() as usize, columns)
    };
    let d2 = assemble(2);
    let d3 = assemble(3);
    Ok(homology_at(&d3, &d2)?)
}
