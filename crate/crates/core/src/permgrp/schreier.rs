use std::collections::HashSet;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;

use super::perm::Perm;

const NOT_IN_ORBIT: i32 = -1;
const ROOT: i32 = -2;

/// One level of a stabilizer chain: the strong generators fixing all earlier
/// base points, the orbit of this level's base point and its Schreier vector.
#[derive(Clone, Debug)]
struct Level {
    base: u32,
    gens: Vec<Perm>,
    inv_gens: Vec<Perm>,
    orbit: Vec<u32>,
    /// `schreier[p]` is the index of the generator that first reached `p`.
    schreier: Vec<i32>,
    /// Schreier generators `(orbit position, generator)` already known to sift.
    checked: HashSet<(u32, u32)>,
}

impl Level {
    fn new(base: u32, degree: usize) -> Level {
        let mut schreier = vec![NOT_IN_ORBIT; degree];
        schreier[base as usize] = ROOT;
        Level {
            base,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            orbit: vec![base],
            schreier,
            checked: HashSet::new(),
        }
    }

    fn push_gen(&mut self, g: Perm) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        // existing Schreier entries are never rewritten, so checked pairs stay valid
        let mut pos = 0;
        while pos < self.orbit.len() {
            let p = self.orbit[pos];
            for (k, g) in self.gens.iter().enumerate() {
                let q = g.image(p);
                if self.schreier[q as usize] == NOT_IN_ORBIT {
                    self.schreier[q as usize] = k as i32;
                    self.orbit.push(q);
                }
            }
            pos += 1;
        }
    }

    fn contains(&self, p: u32) -> bool {
        self.schreier[p as usize] != NOT_IN_ORBIT
    }

    /// Applies `u_p^-1` to `x`, where `u_p` maps the base point to `p`.
    fn apply_transversal_inverse(&self, p: u32, g: &Perm) -> Perm {
        let mut h = g.clone();
        let mut cur = p;
        loop {
            let k = self.schreier[cur as usize];
            if k == ROOT {
                return h;
            }
            let inv = &self.inv_gens[k as usize];
            h = h.then(inv);
            cur = inv.image(cur);
        }
    }

    /// The transversal element `u_p` with `base^u_p = p`.
    fn transversal(&self, p: u32, degree: usize) -> Perm {
        self.apply_transversal_inverse(p, &Perm::identity(degree))
            .inverse()
    }
}

/// Base and strong generating set built by deterministic Schreier–Sims.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Perm], base_prefix: &[u32]) -> StabChain {
        // prefix points get a level each, even when every generator fixes them
        let mut chain = StabChain {
            degree,
            levels: base_prefix.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        for g in gens {
            chain.add_generator(g);
        }
        chain
    }

    /// Extends the group by `g` and restores the strong generating property.
    pub fn add_generator(&mut self, g: &Perm) -> bool {
        assert_eq!(g.degree(), self.degree, "generator degree mismatch");
        let (level, residue) = match self.sift(g, 0) {
            None => return false,
            Some(r) => r,
        };
        self.insert_residue(0, level, residue);
        self.complete();
        true
    }

    /// Adds `r`, which fixes the first `to` base points, to levels `from..=to`.
    fn insert_residue(&mut self, from: usize, to: usize, r: Perm) {
        if to == self.levels.len() {
            let base = self.next_base_point(&r);
            self.levels.push(Level::new(base, self.degree));
        }
        for l in from..=to {
            self.levels[l].push_gen(r.clone());
        }
    }

    fn next_base_point(&self, r: &Perm) -> u32 {
        r.first_moved_point()
            .expect("a non-identity residue moves some point")
    }

    /// Sifts `g` starting at level `from`; returns the drop-out level and residue
    /// or `None` when `g` sifts to the identity.
    fn sift(&self, g: &Perm, from: usize) -> Option<(usize, Perm)> {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let p = h.image(level.base);
            if !level.contains(p) {
                return Some((i, h));
            }
            h = level.apply_transversal_inverse(p, &h);
        }
        (!h.is_identity()).then_some((self.levels.len(), h))
    }

    fn complete(&mut self) {
        let mut i = self.levels.len();
        while i > 0 {
            let l = i - 1;
            match self.find_failing_schreier_generator(l) {
                Some((j, r)) => {
                    self.insert_residue(l + 1, j, r);
                    i = j + 1;
                }
                None => i -= 1,
            }
        }
    }

    fn find_failing_schreier_generator(&mut self, l: usize) -> Option<(usize, Perm)> {
        let mut pos = 0;
        while pos < self.levels[l].orbit.len() {
            let p = self.levels[l].orbit[pos];
            for k in 0..self.levels[l].gens.len() {
                if self.levels[l].checked.contains(&(pos as u32, k as u32)) {
                    continue;
                }
                let level = &self.levels[l];
                let s = &level.gens[k];
                let q = s.image(p);
                let u_p = level.transversal(p, self.degree);
                let h = level.apply_transversal_inverse(q, &u_p.then(s));
                let failing = self.sift(&h, l + 1);
                self.levels[l].checked.insert((pos as u32, k as u32));
                if failing.is_some() {
                    return failing;
                }
            }
            pos += 1;
        }
        None
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, g: &Perm) -> bool {
        g.degree() == self.degree && self.sift(g, 0).is_none()
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        self.levels.first().map_or(&[], |l| &l.gens)
    }

    pub fn basic_orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }
}

/// A permutation group on `0..degree` given by generators, with a lazily built
/// stabilizer-chain certificate.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    chain: OnceLock<StabChain>,
}

impl PermGroup {
    /// Identity generators are dropped, duplicates removed, order preserved.
    pub fn new(degree: usize, generators: Vec<Perm>) -> PermGroup {
        let mut seen = HashSet::new();
        let generators = generators
            .into_iter()
            .filter(|g| {
                assert_eq!(g.degree(), degree, "generator degree mismatch");
                !g.is_identity() && seen.insert(g.clone())
            })
            .collect();
        PermGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        PermGroup::new(degree, Vec::new())
    }

    /// Builds the chain with the given points first in the base.
    pub fn with_base(degree: usize, generators: Vec<Perm>, base_prefix: &[u32]) -> PermGroup {
        let g = PermGroup::new(degree, generators);
        let chain = StabChain::new(degree, &g.generators, base_prefix);
        let _ = g.chain.set(chain);
        g
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::new(self.degree, &self.generators, &[]))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn order_u64(&self) -> u64 {
        u64::try_from(self.order()).expect("group order fits in u64")
    }

    pub fn contains(&self, g: &Perm) -> bool {
        self.chain().contains(g)
    }

    pub fn orbit(&self, point: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        seen[point as usize] = true;
        let mut orbit = vec![point];
        let mut pos = 0;
        while pos < orbit.len() {
            let p = orbit[pos];
            for g in &self.generators {
                let q = g.image(p);
                if !seen[q as usize] {
                    seen[q as usize] = true;
                    orbit.push(q);
                }
            }
            pos += 1;
        }
        orbit
    }

    /// Orbits sorted by smallest element, each sorted ascending.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut done = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if done[p as usize] {
                continue;
            }
            let mut o = self.orbit(p);
            o.sort_unstable();
            for &q in &o {
                done[q as usize] = true;
            }
            out.push(o);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    /// Point stabilizer, generated by the strong generators below the first level
    /// of a chain whose base starts at `point`.
    pub fn stabilizer(&self, point: u32) -> PermGroup {
        let chain = StabChain::new(self.degree, &self.generators, &[point]);
        let gens = match chain.levels.first() {
            Some(l0) if l0.base == point => chain
                .levels
                .get(1)
                .map(|l| l.gens.clone())
                .unwrap_or_default(),
            // nothing moves the point
            _ => self.generators.clone(),
        };
        PermGroup::new(self.degree, gens)
    }

    /// Normal closure of `elements` under conjugation by this group.
    pub fn normal_closure(&self, elements: &[Perm]) -> PermGroup {
        let mut chain = StabChain::new(self.degree, &[], &[]);
        let mut gens = Vec::new();
        let mut queue: Vec<Perm> = elements.to_vec();
        while let Some(h) = queue.pop() {
            if chain.add_generator(&h) {
                for g in &self.generators {
                    queue.push(h.conjugate_by(g));
                }
                gens.push(h);
            }
        }
        let group = PermGroup::new(self.degree, gens);
        let _ = group.chain.set(chain);
        group
    }

    pub fn derived_subgroup(&self) -> PermGroup {
        let mut commutators = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                commutators.push(a.commutator(b));
            }
        }
        self.normal_closure(&commutators)
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.generators.iter().all(|h| {
            ambient
                .generators
                .iter()
                .all(|g| self.contains(&h.conjugate_by(g)))
        })
    }

    /// All elements by breadth-first closure, `None` past `limit`.
    pub fn elements_brute_force(&self, limit: usize) -> Option<Vec<Perm>> {
        let id = Perm::identity(self.degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut pos = 0;
        while pos < out.len() {
            for g in &self.generators {
                let h = out[pos].then(g);
                if seen.insert(h.clone()) {
                    if out.len() >= limit {
                        return None;
                    }
                    out.push(h);
                }
            }
            pos += 1;
        }
        Some(out)
    }

    /// Sorted list of all elements, through the chain.
    pub fn elements(&self) -> Vec<Perm> {
        let chain = self.chain();
        let mut acc = vec![Perm::identity(self.degree)];
        for level in chain.levels.iter().rev() {
            let reps: Vec<Perm> = level
                .orbit
                .iter()
                .map(|&p| level.transversal(p, self.degree))
                .collect();
            acc = acc
                .iter()
                .flat_map(|a| reps.iter().map(move |u| a.then(u)))
                .collect();
        }
        acc.sort();
        acc
    }
}

/// True iff no non-identity element of an abstract group acts trivially.
///
/// `actions[i]` is the permutation induced by element `i`; `identity` is the index
/// of the identity element.
pub fn effective_action_check(actions: &[Perm], identity: usize) -> bool {
    actions
        .iter()
        .enumerate()
        .all(|(i, p)| i == identity || !p.is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn symmetric(n: usize) -> PermGroup {
        let cyc: Vec<u32> = (0..n as u32).collect();
        PermGroup::new(
            n,
            vec![
                Perm::from_cycles(n, &[&[0, 1]]),
                Perm::from_cycles(n, &[&cyc]),
            ],
        )
    }

    #[test]
    fn symmetric_group_orders() {
        for n in 1..=7usize {
            let fact: u64 = (1..=n as u64).product();
            assert_eq!(symmetric(n.max(2)).order_u64(), fact.max(2), "S_{n}");
        }
        assert_eq!(PermGroup::trivial(5).order_u64(), 1);
    }

    #[test]
    fn stabilizer_and_derived_subgroup() {
        let s4 = symmetric(4);
        let st = s4.stabilizer(2);
        assert_eq!(st.order_u64(), 6);
        assert!(st.generators().iter().all(|g| g.image(2) == 2));
        let d = s4.derived_subgroup();
        assert_eq!(d.order_u64(), 12);
        assert!(d.is_normal_in(&s4));
        assert!(!s4.is_perfect());
        assert!(PermGroup::trivial(3).is_perfect());
    }

    #[test]
    fn membership_and_elements() {
        let s3 = symmetric(3);
        assert!(s3.contains(&Perm::from_cycles(3, &[&[0, 2]])));
        let a4 = symmetric(4).derived_subgroup();
        assert!(!a4.contains(&Perm::from_cycles(4, &[&[0, 1]])));
        let els = a4.elements();
        assert_eq!(els.len(), 12);
        let brute = a4.elements_brute_force(100).unwrap();
        let mut brute_sorted = brute.clone();
        brute_sorted.sort();
        assert_eq!(els, brute_sorted);
        assert!(symmetric(5).elements_brute_force(50).is_none());
    }

    #[test]
    fn base_prefix_is_respected() {
        let g = PermGroup::with_base(5, symmetric(5).generators().to_vec(), &[3, 1]);
        assert_eq!(&g.chain().base()[..2], &[3, 1]);
        assert_eq!(g.order_u64(), 120);
    }

    #[test]
    fn effective_action() {
        let id = Perm::identity(2);
        let sw = Perm::from_cycles(2, &[&[0, 1]]);
        assert!(effective_action_check(&[id.clone(), sw.clone()], 0));
        assert!(!effective_action_check(&[id.clone(), id.clone()], 0));
        assert!(effective_action_check(&[id], 0));
    }
}
