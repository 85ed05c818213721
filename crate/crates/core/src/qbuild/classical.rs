//! Symplectic quandles on `F_q^{2g} \ {0}` and spherical quandles on the unit
//! sphere of `F_q^{n+1}`. Vectors are listed lexicographically.

use num_bigint::BigUint;

use super::field::FiniteField;
use super::BuildError;
use crate::qcore::FiniteQuandle;

/// A quandle whose elements are vectors over a finite field.
#[derive(Clone, Debug)]
pub struct VectorQuandle {
    pub quandle: FiniteQuandle,
    pub vectors: Vec<Vec<u32>>,
}

fn tabulate(vectors: Vec<Vec<u32>>, op: impl Fn(&[u32], &[u32]) -> Vec<u32>) -> VectorQuandle {
    let index: std::collections::HashMap<Vec<u32>, u32> = vectors
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), i as u32))
        .collect();
    let n = vectors.len();
    let quandle = FiniteQuandle::from_fn(n, |a, b| {
        let v = op(&vectors[a as usize], &vectors[b as usize]);
        *index.get(&v).expect("operation stays in the carrier set")
    })
    .expect("vector operation satisfies the quandle axioms");
    let labels = vectors
        .iter()
        .map(|v| {
            let parts: Vec<String> = v.iter().map(u32::to_string).collect();
            format!("({})", parts.join(","))
        })
        .collect();
    VectorQuandle {
        quandle: quandle.with_labels(labels),
        vectors,
    }
}

/// `⟨x, y⟩ = Σ_i (x_i y_{g+i} − x_{g+i} y_i)`.
pub fn symplectic_form(field: &FiniteField, g: usize, x: &[u32], y: &[u32]) -> u32 {
    (0..g).fold(0, |acc, i| {
        let a = field.mul(x[i], y[g + i]);
        let b = field.mul(x[g + i], y[i]);
        field.add(acc, field.sub(a, b))
    })
}

/// `x ◁ y = ⟨x, y⟩ y + x` on the nonzero vectors of `F_q^{2g}`.
pub fn symplectic(g: usize, field: &FiniteField) -> Result<VectorQuandle, BuildError> {
    if g == 0 {
        return Err(BuildError::InvalidParameter("g must be at least 1".into()));
    }
    let vectors: Vec<Vec<u32>> = field
        .vectors(2 * g)
        .filter(|v| v.iter().any(|&c| c != 0))
        .collect();
    Ok(tabulate(vectors, |x, y| {
        let s = symplectic_form(field, g, x, y);
        x.iter()
            .zip(y)
            .map(|(&a, &b)| field.add(field.mul(s, b), a))
            .collect()
    }))
}

/// `x ◁ y = 2⟨x, y⟩ y − x` on `{x : ⟨x, x⟩ = 1}` with the sum-of-squares form.
pub fn spherical(n: usize, field: &FiniteField) -> Result<VectorQuandle, BuildError> {
    if field.p() == 2 {
        return Err(BuildError::EvenCharacteristic);
    }
    if n < 1 {
        return Err(BuildError::InvalidParameter("n must be at least 1".into()));
    }
    let vectors: Vec<Vec<u32>> = field
        .vectors(n + 1)
        .filter(|v| field.dot(v, v) == 1)
        .collect();
    let two = field.from_int(2);
    Ok(tabulate(vectors, |x, y| {
        let s = field.mul(two, field.dot(x, y));
        x.iter()
            .zip(y)
            .map(|(&a, &b)| field.sub(field.mul(s, b), a))
            .collect()
    }))
}

/// `|Sp(2g, q)| = q^{g²} Π_{i=1}^{g} (q^{2i} − 1)`.
pub fn symplectic_group_order(g: u32, q: u64) -> BigUint {
    let q = BigUint::from(q);
    let mut out = q.pow(g * g);
    for i in 1..=g {
        out *= q.pow(2 * i) - 1u32;
    }
    out
}

/// Order of the orthogonal group of the sum-of-squares form on `F_q^m`, `q` odd.
pub fn orthogonal_group_order(m: u32, q: u64) -> BigUint {
    let qb = BigUint::from(q);
    let k = m / 2;
    let mut out = BigUint::from(2u32);
    if m % 2 == 1 {
        out *= qb.pow(k * k);
        for i in 1..=k {
            out *= qb.pow(2 * i) - 1u32;
        }
    } else {
        // plus type iff the discriminant (−1)^k is a square
        let plus = k.is_multiple_of(2) || q % 4 == 1;
        out *= qb.pow(k * (k - 1));
        out = if plus {
            out * (qb.pow(k) - 1u32)
        } else {
            out * (qb.pow(k) + 1u32)
        };
        for i in 1..k {
            out *= qb.pow(2 * i) - 1u32;
        }
    }
    out
}
