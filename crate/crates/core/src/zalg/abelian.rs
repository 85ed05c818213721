use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::int::Int;
use super::snf::normalize_chain;

/// A finitely generated abelian group `Z^free_rank + Z/d1 + ... + Z/dk` with
/// `d1 | d2 | ... | dk` and every `di >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct AbelianGroupInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigUint>,
}

impl AbelianGroupInvariants {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroupInvariants {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// Canonicalizes an arbitrary list of cyclic orders (zeros count as free
    /// summands, ones are dropped).
    pub fn new(free_rank: usize, cyclic_orders: &[u64]) -> Self {
        Self::from_diagonal(
            free_rank,
            cyclic_orders.iter().map(|&d| Int::from(d)).collect(),
        )
    }

    /// Group `Z^free_rank` plus `Z/d` for each entry of `diagonal`.
    pub fn from_diagonal(free_rank: usize, diagonal: Vec<Int>) -> Self {
        let (zeros, nonzero): (Vec<Int>, Vec<Int>) = diagonal.into_iter().partition(Int::is_zero);
        let torsion = normalize_chain(nonzero)
            .into_iter()
            .filter(|d| !d.is_unit())
            .map(|d| {
                d.to_big()
                    .to_biguint()
                    .expect("normalized entries are positive")
            })
            .collect();
        AbelianGroupInvariants {
            free_rank: free_rank + zeros.len(),
            torsion,
        }
    }

    /// Cokernel of a matrix with `rows` rows given its nonzero invariant factors.
    pub fn cokernel_of(rows: usize, invariant_factors: &[Int]) -> Self {
        Self::from_diagonal(rows - invariant_factors.len(), invariant_factors.to_vec())
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    /// Order of the group, `None` when it is infinite.
    pub fn order(&self) -> Option<BigUint> {
        (self.free_rank == 0).then(|| self.torsion.iter().fold(BigUint::one(), |a, d| a * d))
    }

    /// True when `n` kills every torsion element.
    pub fn torsion_annihilated_by(&self, n: u64) -> bool {
        let n = BigUint::from(n);
        self.torsion.iter().all(|d| (&n % d).is_zero())
    }

    /// True when every torsion factor divides some power of `n`.
    pub fn torsion_is_supported_on(&self, n: u64) -> bool {
        self.torsion.iter().all(|d| {
            let mut d = d.clone();
            loop {
                let g = d.gcd(&BigUint::from(n));
                if g.is_one() {
                    return d.is_one();
                }
                d /= g;
            }
        })
    }

    pub fn torsion_u64(&self) -> Vec<u64> {
        self.torsion
            .iter()
            .map(|d| d.to_u64().expect("torsion factor fits in u64"))
            .collect()
    }

    /// Invariants of a finite abelian group of order `order` from the counts
    /// `killed_by(m) = |{a : m a = 0}|`.
    ///
    /// For each prime `p`, `log_p |A[p^k]| - log_p |A[p^(k-1)]|` is the number of
    /// cyclic `p`-primary summands of order at least `p^k`.
    pub fn from_kill_counts(order: u64, mut killed_by: impl FnMut(u64) -> u64) -> Self {
        let mut cyclic = Vec::new();
        for (p, e) in factorize(order) {
            let mut at_least = Vec::new();
            let mut prev = 1u64;
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                let c = killed_by(pk);
                assert!(c.is_multiple_of(prev), "kill counts must form a chain");
                let mut ratio = c / prev;
                let mut r = 0;
                while ratio > 1 {
                    assert!(ratio.is_multiple_of(p), "kill-count ratio must be a power of p");
                    ratio /= p;
                    r += 1;
                }
                at_least.push(r);
                prev = c;
            }
            // summands of order exactly p^(k+1) = at_least[k] - at_least[k+1]
            for k in 0..at_least.len() {
                let next = at_least.get(k + 1).copied().unwrap_or(0);
                for _ in 0..at_least[k] - next {
                    cyclic.push(p.pow(k as u32 + 1));
                }
            }
        }
        Self::new(0, &cyclic)
    }
}

pub(crate) fn factorize(mut n: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            *out.entry(p).or_insert(0) += 1;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        *out.entry(n).or_insert(0) += 1;
    }
    out
}

impl fmt::Display for AbelianGroupInvariants {
    /// `0`, `Z^2`, `Z/2 + Z/6`, `Z + Z/3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_merges_coprime_factors() {
        let g = AbelianGroupInvariants::new(1, &[1, 2, 3, 0, 4]);
        assert_eq!(g.free_rank, 2);
        assert_eq!(g.torsion_u64(), vec![2, 12]);
        assert_eq!(g.to_string(), "Z^2 + Z/2 + Z/12");
        assert_eq!(AbelianGroupInvariants::trivial().to_string(), "0");
    }

    #[test]
    fn annihilation_and_support() {
        let g = AbelianGroupInvariants::new(0, &[2, 4]);
        assert!(!g.torsion_annihilated_by(2));
        assert!(g.torsion_annihilated_by(4));
        assert!(g.torsion_is_supported_on(2));
        assert!(!AbelianGroupInvariants::new(0, &[3]).torsion_is_supported_on(2));
    }

    #[test]
    fn kill_counts_recover_z2_z4() {
        // Z/2 + Z/4: |A[2]| = 4, |A[4]| = 8
        let g = AbelianGroupInvariants::from_kill_counts(8, |m| match m {
            2 => 4,
            4 | 8 => 8,
            _ => unreachable!(),
        });
        assert_eq!(g.torsion_u64(), vec![2, 4]);
    }
}
