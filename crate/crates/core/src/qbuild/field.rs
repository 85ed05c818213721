//! Small finite fields `F_q`, `q = p^d ≤ 121`, with fixed irreducible moduli.
//!
//! An element `c_0 + c_1 a + … + c_{d-1} a^{d-1}` is encoded as the integer
//! `c_0 + c_1 p + … + c_{d-1} p^{d-1}`, so `F_p` is encoded as itself.

use super::BuildError;

/// Shipped moduli, monic, coefficients from the constant term up.
const MODULI: &[(u32, u32, &[u32])] = &[
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (3, 2, &[2, 2, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 0, 0, 2, 1]),
    (5, 2, &[2, 4, 1]),
    (7, 2, &[3, 6, 1]),
    (11, 2, &[2, 7, 1]),
];

pub const MAX_FIELD_ORDER: u32 = 121;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u32,
    d: u32,
    q: u32,
    modulus: Vec<u32>,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    inv: Vec<u16>,
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|k| k * k <= n).all(|k| !n.is_multiple_of(k))
}

impl FiniteField {
    /// The field of order `q` with its shipped modulus.
    pub fn of_order(q: u32) -> Result<FiniteField, BuildError> {
        (2..=q)
            .filter(|&p| is_prime(p))
            .find_map(|p| {
                let mut d = 0;
                let mut r = q;
                while r.is_multiple_of(p) {
                    r /= p;
                    d += 1;
                }
                (r == 1).then_some((p, d))
            })
            .ok_or(BuildError::UnsupportedField { q })
            .and_then(|(p, d)| FiniteField::new(p, d))
    }

    pub fn new(p: u32, d: u32) -> Result<FiniteField, BuildError> {
        if !is_prime(p) || d == 0 {
            return Err(BuildError::UnsupportedField {
                q: p.saturating_pow(d),
            });
        }
        let q = p.checked_pow(d).filter(|&q| q <= MAX_FIELD_ORDER);
        let q = q.ok_or(BuildError::UnsupportedField {
            q: p.saturating_pow(d),
        })?;
        let modulus = if d == 1 {
            vec![0, 1]
        } else {
            MODULI
                .iter()
                .find(|(pp, dd, _)| *pp == p && *dd == d)
                .map(|(_, _, m)| m.to_vec())
                .ok_or(BuildError::UnsupportedField { q })?
        };
        Self::with_modulus(p, modulus)
    }

    /// Builds `F_p[a] / (modulus)`, checking that the monic modulus is irreducible.
    pub fn with_modulus(p: u32, modulus: Vec<u32>) -> Result<FiniteField, BuildError> {
        let d = modulus.len() as u32 - 1;
        let q = p.pow(d);
        if modulus.last() != Some(&1)
            || modulus.iter().any(|&c| c >= p)
            || !is_irreducible(p, &modulus)
        {
            return Err(BuildError::ReducibleModulus { p, modulus });
        }
        let mut f = FiniteField {
            p,
            d,
            q,
            modulus,
            add: Vec::new(),
            mul: Vec::new(),
            neg: Vec::new(),
            inv: Vec::new(),
        };
        let qs = q as usize;
        f.add = (0..qs * qs)
            .map(|i| {
                f.encode(&poly_add(
                    p,
                    &f.decode((i / qs) as u32),
                    &f.decode((i % qs) as u32),
                )) as u16
            })
            .collect();
        f.mul = (0..qs * qs)
            .map(|i| {
                let prod = poly_mul(p, &f.decode((i / qs) as u32), &f.decode((i % qs) as u32));
                f.encode(&poly_rem(p, &prod, &f.modulus)) as u16
            })
            .collect();
        f.neg = (0..q)
            .map(|a| (0..q).find(|&b| f.add[(a * q + b) as usize] == 0).unwrap() as u16)
            .collect();
        f.inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q)
                        .find(|&b| f.mul[(a * q + b) as usize] == 1)
                        .expect("field has inverses") as u16
                }
            })
            .collect();
        Ok(f)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.d
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    fn decode(&self, mut a: u32) -> Vec<u32> {
        (0..self.d)
            .map(|_| {
                let c = a % self.p;
                a /= self.p;
                c
            })
            .collect()
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        coeffs.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize] as u32
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize] as u32
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        self.neg[a as usize] as u32
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inv[a as usize] as u32)
    }

    /// The image of the integer `n` under `Z → F_q`.
    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn dot(&self, x: &[u32], y: &[u32]) -> u32 {
        x.iter()
            .zip(y)
            .fold(0, |acc, (&a, &b)| self.add(acc, self.mul(a, b)))
    }

    /// All vectors of `F_q^len` in lexicographic order, first coordinate most significant.
    pub fn vectors(&self, len: usize) -> impl Iterator<Item = Vec<u32>> + '_ {
        let total = (self.q as u64).pow(len as u32);
        (0..total).map(move |mut idx| {
            let mut v = vec![0u32; len];
            for slot in v.iter_mut().rev() {
                *slot = (idx % self.q as u64) as u32;
                idx /= self.q as u64;
            }
            v
        })
    }
}

fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn poly_add(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    (0..a.len().max(b.len()))
        .map(|i| (a.get(i).unwrap_or(&0) + b.get(i).unwrap_or(&0)) % p)
        .collect()
}

fn poly_mul(p: u32, a: &[u32], b: &[u32]) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Remainder modulo a monic polynomial.
fn poly_rem(p: u32, a: &[u32], m: &[u32]) -> Vec<u32> {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        for (i, &c) in m.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
        }
        r = trim(r);
    }
    r
}

/// No monic factor of degree `1..=deg/2`.
fn is_irreducible(p: u32, m: &[u32]) -> bool {
    let deg = m.len() - 1;
    for fd in 1..=deg / 2 {
        let count = p.pow(fd as u32);
        for idx in 0..count {
            let mut f: Vec<u32> = (0..fd)
                .scan(idx, |r, _| {
                    let c = *r % p;
                    *r /= p;
                    Some(c)
                })
                .collect();
            f.push(1);
            if poly_rem(p, m, &f).is_empty() {
                return false;
            }
        }
    }
    deg >= 1
}
