//! The subgroups `G1 ⊂ (G × G) ⋊ Z/2` and `G2 ⊂ Z(G1)` describing the inner
//! automorphism group of the core quandle of `G` as `G1 / G2`.
//!
//! `(g, h, even)` acts on `x ∈ G` by `x ↦ h x g⁻¹` and `(g, h, odd)` by
//! `x ↦ g x⁻¹ h⁻¹`. The right translation `x ↦ g x⁻¹ g` of the core quandle is
//! the odd element `(g, g⁻¹, odd)`.

use std::collections::{BTreeSet, HashMap};

use super::finite::FiniteGroup;
use super::perm::Perm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WreathElement {
    pub g: usize,
    pub h: usize,
    pub odd: bool,
}

/// Action of a wreath element on `x ∈ G` (right action).
pub fn act(group: &FiniteGroup, w: WreathElement, x: usize) -> usize {
    if w.odd {
        group.mul(group.mul(w.g, group.inv(x)), group.inv(w.h))
    } else {
        group.mul(group.mul(w.h, x), group.inv(w.g))
    }
}

/// Product "first `a`, then `b`", matching composition of the right actions.
pub fn compose(group: &FiniteGroup, a: WreathElement, b: WreathElement) -> WreathElement {
    if a.odd {
        WreathElement {
            g: group.mul(b.h, a.g),
            h: group.mul(b.g, a.h),
            odd: !b.odd,
        }
    } else {
        WreathElement {
            g: group.mul(b.g, a.g),
            h: group.mul(b.h, a.h),
            odd: b.odd,
        }
    }
}

pub fn action_perm(group: &FiniteGroup, w: WreathElement) -> Perm {
    Perm::from_images_unchecked(
        (0..group.order())
            .map(|x| act(group, w, x) as u32)
            .collect(),
    )
}

/// Image of `g` under the map into `G1`, realizing the right translation by `g`.
pub fn kappa(group: &FiniteGroup, g: usize) -> WreathElement {
    WreathElement {
        g,
        h: group.inv(g),
        odd: true,
    }
}

/// `{(g, h, σ) : gh ∈ [G, G]}`, sorted.
pub fn g1(group: &FiniteGroup) -> Vec<WreathElement> {
    let comm = group.commutator_subgroup();
    let n = group.order();
    let mut out = Vec::new();
    for g in 0..n {
        for h in 0..n {
            if comm.contains(&group.mul(g, h)) {
                for odd in [false, true] {
                    out.push(WreathElement { g, h, odd });
                }
            }
        }
    }
    out.sort();
    out
}

/// `{(z, z, σ) : z² ∈ [G, G], z⁻¹ k z = k^(±1) for all k}` with the sign `+` on the
/// even component and `-` on the odd one.
pub fn g2(group: &FiniteGroup) -> Vec<WreathElement> {
    let comm = group.commutator_subgroup();
    let n = group.order();
    let mut out = Vec::new();
    for z in 0..n {
        if !comm.contains(&group.mul(z, z)) {
            continue;
        }
        let conj = |k: usize| group.mul(group.mul(group.inv(z), k), z);
        if (0..n).all(|k| conj(k) == k) {
            out.push(WreathElement {
                g: z,
                h: z,
                odd: false,
            });
        }
        if (0..n).all(|k| conj(k) == group.inv(k)) {
            out.push(WreathElement {
                g: z,
                h: z,
                odd: true,
            });
        }
    }
    out.sort();
    out
}

/// Outcome of comparing `G1 / G2` with the permutation group generated by the
/// right translations of the core quandle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreQuotientReport {
    pub g1_order: usize,
    pub g2_order: usize,
    pub quotient_order: usize,
    /// `G2` is the exact kernel of the action of `G1` on `G`.
    pub g2_is_action_kernel: bool,
    pub g2_is_central: bool,
    /// `G1` is closed under `compose` and the action respects it.
    pub action_is_homomorphism: bool,
    /// The image of `G1` equals the group generated by the `κ(g)`.
    pub image_is_generated_by_kappa: bool,
    /// Distinct images of the action (`|G1 / ker|`).
    pub image_order: usize,
}

/// Enumerates `G1` and `G2`, and checks that `G1 → Sym(G)` is a homomorphism with
/// kernel `G2` whose image is generated by the right translations. Together these
/// give a bijective homomorphism `G1 / G2 → Inn`.
pub fn core_quotient_report(group: &FiniteGroup) -> CoreQuotientReport {
    let g1 = g1(group);
    let g2 = g2(group);
    let g1_set: BTreeSet<WreathElement> = g1.iter().copied().collect();
    let perms: HashMap<WreathElement, Perm> =
        g1.iter().map(|&w| (w, action_perm(group, w))).collect();

    let action_is_homomorphism = g1.iter().all(|&a| {
        g1.iter().all(|&b| {
            let c = compose(group, a, b);
            g1_set.contains(&c) && perms[&c] == perms[&a].then(&perms[&b])
        })
    });
    let kernel: Vec<WreathElement> = g1
        .iter()
        .copied()
        .filter(|w| perms[w].is_identity())
        .collect();
    let g2_is_central = g2.iter().all(|&z| {
        g1.iter()
            .all(|&a| compose(group, z, a) == compose(group, a, z))
    });
    let image: BTreeSet<&Perm> = perms.values().collect();

    let kappa_images: Vec<Perm> = (0..group.order())
        .map(|g| action_perm(group, kappa(group, g)))
        .collect();
    let generated = super::schreier::PermGroup::new(group.order(), kappa_images);
    let image_is_generated_by_kappa = generated.order_u64() as usize == image.len()
        && image.iter().all(|p| generated.contains(p));

    CoreQuotientReport {
        g1_order: g1.len(),
        g2_order: g2.len(),
        quotient_order: g1.len() / g2.len(),
        g2_is_action_kernel: kernel == g2,
        g2_is_central,
        action_is_homomorphism,
        image_is_generated_by_kappa,
        image_order: image.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kappa_is_the_core_right_translation() {
        let s3 = FiniteGroup::symmetric(3);
        for g in 0..6 {
            for x in 0..6 {
                let expected = s3.mul(s3.mul(g, s3.inv(x)), g);
                assert_eq!(act(&s3, kappa(&s3, g), x), expected);
            }
        }
    }

    #[test]
    fn known_quotient_orders() {
        for (grp, g1, g2, inn) in [
            (FiniteGroup::cyclic(3), 6, 1, 6),
            (FiniteGroup::cyclic(4), 8, 2, 4),
            (FiniteGroup::quaternion(), 32, 2, 16),
            (FiniteGroup::symmetric(3), 36, 1, 36),
        ] {
            let r = core_quotient_report(&grp);
            assert_eq!(
                (r.g1_order, r.g2_order, r.quotient_order),
                (g1, g2, inn),
                "{}",
                grp.name()
            );
            assert!(r.g2_is_action_kernel && r.g2_is_central && r.action_is_homomorphism);
            assert!(r.image_is_generated_by_kappa);
            assert_eq!(r.image_order, inn);
        }
    }
}
