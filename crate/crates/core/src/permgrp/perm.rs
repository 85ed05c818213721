use std::fmt;
use std::str::FromStr;

use num_integer::Integer;

/// A permutation of `0..degree` acting on the right: `x^p = p.image(x)`.
///
/// Products compose left to right, so `p.then(q)` first applies `p`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u32>);

impl Perm {
    pub fn identity(degree: usize) -> Perm {
        Perm((0..degree as u32).collect())
    }

    /// Checks that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Option<Perm> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            let slot = seen.get_mut(i as usize)?;
            if *slot {
                return None;
            }
            *slot = true;
        }
        Some(Perm(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_some());
        Perm(images)
    }

    /// Permutation of a cycle list, e.g. `[[0, 1], [2, 3, 4]]`.
    pub fn from_cycles(degree: usize, cycles: &[&[u32]]) -> Perm {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                images[a as usize] = cycle[(k + 1) % cycle.len()];
            }
        }
        Perm::from_images(images).expect("cycles must be disjoint")
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, x: u32) -> u32 {
        self.0[x as usize]
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Perm) -> Perm {
        Perm(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Perm(inv)
    }

    /// `other^-1 self other`.
    pub fn conjugate_by(&self, other: &Perm) -> Perm {
        other.inverse().then(self).then(other)
    }

    /// `self^-1 other^-1 self other`.
    pub fn commutator(&self, other: &Perm) -> Perm {
        self.inverse().then(&other.inverse()).then(self).then(other)
    }

    pub fn pow(&self, mut e: u64) -> Perm {
        let mut base = self.clone();
        let mut acc = Perm::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        let mut seen = vec![false; self.0.len()];
        let mut ord = 1u64;
        for start in 0..self.0.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0u64;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            ord = ord.lcm(&len);
        }
        ord
    }

    pub fn first_moved_point(&self) -> Option<u32> {
        self.0
            .iter()
            .enumerate()
            .find(|(i, &x)| *i as u32 != x)
            .map(|(i, _)| i as u32)
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.0)
    }
}

impl fmt::Display for Perm {
    /// Image-list form: `1 2 0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("not a permutation in image-list form: {0}")]
pub struct PermParseError(pub String);

impl FromStr for Perm {
    type Err = PermParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split_whitespace()
            .map(|t| t.parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| PermParseError(e.to_string()))?;
        Perm::from_images(images).ok_or_else(|| PermParseError(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn right_action_composition() {
        let a = Perm::from_cycles(3, &[&[0, 1]]);
        let b = Perm::from_cycles(3, &[&[1, 2]]);
        // 0 -a-> 1 -b-> 2
        assert_eq!(a.then(&b).image(0), 2);
        assert_eq!(a.then(&b).order(), 3);
        assert!(a.then(&a.inverse()).is_identity());
        assert_eq!(a.commutator(&b), a.then(&b).then(&a).then(&b));
    }

    #[test]
    fn image_list_round_trip() {
        let p: Perm = "2 0 1".parse().unwrap();
        assert_eq!(p.to_string(), "2 0 1");
        assert!("0 0 1".parse::<Perm>().is_err());
        assert_eq!(p.pow(3), Perm::identity(3));
    }
}
