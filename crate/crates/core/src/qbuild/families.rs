use super::BuildError;
use crate::permgrp::{FiniteGroup, Perm, PermGroup};
use crate::qcore::FiniteQuandle;

/// `x ◁ y = 2y − x mod n`.
pub fn dihedral(n: usize) -> Result<FiniteQuandle, BuildError> {
    if n == 0 {
        return Err(BuildError::InvalidParameter("n must be at least 1".into()));
    }
    let n32 = n as u32;
    Ok(FiniteQuandle::from_fn(n, |x, y| (2 * y + n32 - x) % n32).expect("dihedral quandle"))
}

/// `x ◁ y = x`.
pub fn trivial(n: usize) -> Result<FiniteQuandle, BuildError> {
    if n == 0 {
        return Err(BuildError::InvalidParameter("n must be at least 1".into()));
    }
    Ok(FiniteQuandle::from_fn(n, |x, _| x).expect("trivial quandle"))
}

/// Core quandle `g ◁ h = h g⁻¹ h` on the elements of a group.
pub fn core(group: &FiniteGroup) -> FiniteQuandle {
    FiniteQuandle::from_fn(group.order(), |g, h| {
        let (g, h) = (g as usize, h as usize);
        group.mul(group.mul(h, group.inv(g)), h) as u32
    })
    .expect("core operation satisfies the quandle axioms")
}

/// Core quandle from a raw multiplication table.
pub fn core_from_table(table: Vec<Vec<u32>>) -> Result<FiniteQuandle, BuildError> {
    let g = FiniteGroup::from_table(table, "G")
        .map_err(|e| BuildError::InvalidGroupTable(e.to_string()))?;
    Ok(core(&g))
}

/// Conjugation-closed set of involutions with `a ◁ b = b⁻¹ a b`.
#[derive(Clone, Debug)]
pub struct ReflectionQuandle {
    pub quandle: FiniteQuandle,
    /// Sorted; element `i` of the quandle is `reflections[i]`.
    pub reflections: Vec<Perm>,
}

/// Closes `seeds` under conjugation by `w`; the elements are sorted.
pub fn conjugation_reflections(
    w: &PermGroup,
    seeds: &[Perm],
) -> Result<ReflectionQuandle, BuildError> {
    for s in seeds {
        if s.is_identity() || !s.then(s).is_identity() {
            return Err(BuildError::SeedNotInvolution(s.to_string()));
        }
        if !w.contains(s) {
            return Err(BuildError::SeedNotInGroup(s.to_string()));
        }
    }
    let mut set: std::collections::BTreeSet<Perm> = seeds.iter().cloned().collect();
    let mut frontier: Vec<Perm> = set.iter().cloned().collect();
    while let Some(r) = frontier.pop() {
        for g in w.generators() {
            let c = r.conjugate_by(g);
            if set.insert(c.clone()) {
                frontier.push(c);
            }
        }
    }
    let reflections: Vec<Perm> = set.into_iter().collect();
    let index: std::collections::HashMap<&Perm, u32> = reflections
        .iter()
        .enumerate()
        .map(|(i, p)| (p, i as u32))
        .collect();
    let quandle = FiniteQuandle::from_fn(reflections.len(), |a, b| {
        index[&reflections[a as usize].conjugate_by(&reflections[b as usize])]
    })
    .expect("conjugation quandle");
    let labels = reflections.iter().map(|p| format!("[{p}]")).collect();
    Ok(ReflectionQuandle {
        quandle: quandle.with_labels(labels),
        reflections,
    })
}
