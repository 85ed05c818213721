use std::collections::{BTreeSet, HashMap};

use super::perm::Perm;
use super::schreier::PermGroup;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("invalid group table: {0}")]
    InvalidGroupTable(String),
}

/// A finite group given by its multiplication table on `0..order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: u32,
    inverses: Vec<u32>,
    name: String,
}

impl FiniteGroup {
    /// Validates closure, identity, inverses and associativity.
    pub fn from_table(
        table: Vec<Vec<u32>>,
        name: impl Into<String>,
    ) -> Result<FiniteGroup, GroupError> {
        let n = table.len();
        let bad = |m: String| Err(GroupError::InvalidGroupTable(m));
        if n == 0 {
            return bad("empty table".into());
        }
        if let Some(i) = table.iter().position(|r| r.len() != n) {
            return bad(format!("row {i} has the wrong length"));
        }
        if table.iter().flatten().any(|&v| v as usize >= n) {
            return bad("entry out of range".into());
        }
        let flat: Vec<u32> = table.into_iter().flatten().collect();
        let m = |a: usize, b: usize| flat[a * n + b] as usize;
        let identity = match (0..n).find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a)) {
            Some(e) => e,
            None => return bad("no two-sided identity".into()),
        };
        let mut inverses = Vec::with_capacity(n);
        for a in 0..n {
            match (0..n).find(|&b| m(a, b) == identity && m(b, a) == identity) {
                Some(b) => inverses.push(b as u32),
                None => return bad(format!("element {a} has no inverse")),
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if m(m(a, b), c) != m(a, m(b, c)) {
                        return bad(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(FiniteGroup {
            order: n,
            table: flat,
            identity: identity as u32,
            inverses,
            name: name.into(),
        })
    }

    /// The group of a list of permutations closed under products, sorted.
    pub fn from_perm_group(g: &PermGroup, name: impl Into<String>) -> FiniteGroup {
        let elements = g.elements();
        Self::from_elements(&elements, |a, b| a.then(b), name)
    }

    /// Builds the table of a closed list of elements under `mul`.
    pub fn from_elements<E: Clone + Eq + std::hash::Hash>(
        elements: &[E],
        mul: impl Fn(&E, &E) -> E,
        name: impl Into<String>,
    ) -> FiniteGroup {
        let index: HashMap<&E, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, e)| (e, i as u32))
            .collect();
        let table = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index[&mul(a, b)])
                    .collect::<Vec<u32>>()
            })
            .collect();
        FiniteGroup::from_table(table, name).expect("closed set of elements forms a group")
    }

    pub fn cyclic(n: usize) -> FiniteGroup {
        let table = (0..n)
            .map(|a| (0..n).map(|b| ((a + b) % n) as u32).collect())
            .collect();
        FiniteGroup::from_table(table, format!("Z/{n}")).expect("cyclic table")
    }

    /// Pairs `(a, b)` encoded as `a * |h| + b`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> FiniteGroup {
        let (ng, nh) = (g.order, h.order);
        let table = (0..ng * nh)
            .map(|x| {
                (0..ng * nh)
                    .map(|y| (g.mul(x / nh, y / nh) * nh + h.mul(x % nh, y % nh)) as u32)
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table, format!("{} x {}", g.name, h.name)).expect("product table")
    }

    /// Symmetric group on `n` points with lexicographically sorted elements.
    pub fn symmetric(n: usize) -> FiniteGroup {
        Self::from_perm_group(&symmetric_perm_group(n), format!("S{n}"))
    }

    /// Dihedral group of the regular `m`-gon, of order `2m`, as permutations of the vertices.
    pub fn dihedral(m: usize) -> FiniteGroup {
        Self::from_perm_group(&dihedral_perm_group(m), format!("D{m}"))
    }

    /// Quaternion group `{±1, ±i, ±j, ±k}` in that order.
    pub fn quaternion() -> FiniteGroup {
        // (sign, unit) with units 1, i, j, k encoded 0..4
        let unit_mul = |a: usize, b: usize| -> (bool, usize) {
            match (a, b) {
                (0, x) | (x, 0) => (false, x),
                (x, y) if x == y => (true, 0),
                (1, 2) => (false, 3),
                (2, 1) => (true, 3),
                (2, 3) => (false, 1),
                (3, 2) => (true, 1),
                (3, 1) => (false, 2),
                (1, 3) => (true, 2),
                _ => unreachable!(),
            }
        };
        let enc = |neg: bool, u: usize| if neg { 2 * u + 1 } else { 2 * u } as u32;
        let table = (0..8)
            .map(|x| {
                (0..8)
                    .map(|y| {
                        let (neg, u) = unit_mul(x / 2, y / 2);
                        enc(neg ^ (x % 2 == 1) ^ (y % 2 == 1), u)
                    })
                    .collect()
            })
            .collect();
        FiniteGroup::from_table(table, "Q8").expect("quaternion table")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn identity(&self) -> usize {
        self.identity as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a] as usize
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// The subgroup generated by `gens`, as a sorted element set.
    pub fn subgroup_generated(&self, gens: &[usize]) -> BTreeSet<usize> {
        let mut set = BTreeSet::from([self.identity()]);
        let mut frontier = vec![self.identity()];
        while let Some(a) = frontier.pop() {
            for &g in gens {
                let b = self.mul(a, g);
                if set.insert(b) {
                    frontier.push(b);
                }
            }
        }
        set
    }

    pub fn commutator_subgroup(&self) -> BTreeSet<usize> {
        let comms: BTreeSet<usize> = (0..self.order)
            .flat_map(|a| (0..self.order).map(move |b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.subgroup_generated(&comms.into_iter().collect::<Vec<_>>())
    }

    /// Right-regular representation `x ↦ x·g`.
    pub fn right_regular(&self, g: usize) -> Perm {
        Perm::from_images_unchecked((0..self.order).map(|x| self.mul(x, g) as u32).collect())
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

pub fn symmetric_perm_group(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let cyc: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(
        n,
        vec![
            Perm::from_cycles(n, &[&[0, 1]]),
            Perm::from_cycles(n, &[&cyc]),
        ],
    )
}

/// Reflections `i ↦ -i` and `i ↦ 1 - i` on the vertices of the `m`-gon.
pub fn dihedral_perm_group(m: usize) -> PermGroup {
    let refl =
        |c: usize| Perm::from_images_unchecked((0..m).map(|i| ((c + m - i) % m) as u32).collect());
    PermGroup::new(m, vec![refl(0), refl(1)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn standard_groups_have_the_right_orders() {
        assert_eq!(FiniteGroup::cyclic(5).order(), 5);
        assert_eq!(FiniteGroup::symmetric(4).order(), 24);
        assert_eq!(FiniteGroup::dihedral(4).order(), 8);
        assert_eq!(FiniteGroup::dihedral(6).order(), 12);
        let q = FiniteGroup::quaternion();
        assert_eq!(q.order(), 8);
        assert!(!q.is_abelian());
        let klein = FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2));
        assert!(klein.is_abelian());
        assert_eq!(klein.order(), 4);
    }

    #[test]
    fn commutator_subgroups() {
        assert_eq!(FiniteGroup::symmetric(3).commutator_subgroup().len(), 3);
        assert_eq!(FiniteGroup::symmetric(4).commutator_subgroup().len(), 12);
        assert_eq!(FiniteGroup::quaternion().commutator_subgroup().len(), 2);
        assert_eq!(FiniteGroup::cyclic(4).commutator_subgroup().len(), 1);
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(FiniteGroup::from_table(vec![vec![0, 0], vec![0, 1]], "x").is_err());
        assert!(FiniteGroup::from_table(vec![vec![0, 1], vec![1, 2]], "x").is_err());
        assert!(FiniteGroup::from_table(vec![], "x").is_err());
    }
}
