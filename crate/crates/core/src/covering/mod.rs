//! Universal coverings of connected Alexander quandles, realized on the
//! `ε = 0` slice of the adjoint group model.

use std::fs;
use std::io;
use std::path::Path;

use crate::adjoint::{AdjointError, ClauwensElement, ClauwensGroup};
use crate::caps::Caps;
use crate::qbuild::AlexanderModuleSpec;
use crate::qcore::{
    find_isomorphism, is_covering, write_map, write_table, FiniteQuandle, QuandleError,
};
use crate::qhomology::{quandle_h2, HomologyError};
use crate::zalg::AbelianGroupInvariants;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CoveringError {
    #[error("quandle {0} is not connected")]
    NotConnected(String),
    #[error("total space would have {needed} elements, above the cap of {cap}")]
    SizeCap { needed: u64, cap: u64 },
    #[error("base point {0} is not an element")]
    BasePoint(u32),
    #[error("total space is not a quandle: {0}")]
    NotAQuandle(QuandleError),
}

impl From<AdjointError> for CoveringError {
    fn from(e: AdjointError) -> Self {
        match e {
            AdjointError::NotConnected(s) => CoveringError::NotConnected(s),
            other => unreachable!("model construction only fails on connectivity: {other}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CoveringInstance {
    pub spec: AlexanderModuleSpec,
    pub base_point: u32,
    pub base: FiniteQuandle,
    pub total: FiniteQuandle,
    /// Image in `base` of each element of `total`.
    pub projection: Vec<u32>,
    /// `total[i]` is `elements[i]` in the model.
    pub elements: Vec<ClauwensElement>,
    pub coker: AbelianGroupInvariants,
}

/// `g ◁ h = e_a⁻¹ g h⁻¹ e_a h` on `{(0, x, α)}` with projection `g ↦ a · g`.
pub fn universal_covering_alexander(
    spec: &AlexanderModuleSpec,
    base_point: u32,
    caps: &Caps,
) -> Result<CoveringInstance, CoveringError> {
    if !spec.is_connected() {
        return Err(CoveringError::NotConnected(spec.to_string()));
    }
    if base_point as usize >= spec.order() {
        return Err(CoveringError::BasePoint(base_point));
    }
    let group = ClauwensGroup::new(spec)?;
    let needed = spec.order() as u64 * group.coker_order();
    if needed > caps.cells {
        return Err(CoveringError::SizeCap {
            needed,
            cap: caps.cells,
        });
    }
    let elements: Vec<ClauwensElement> = group.slice(0).collect();
    let c = group.coker_order() as u32;
    let index = |g: &ClauwensElement| g.x * c + g.alpha;
    let ea = group.e(base_point);
    let ea_inv = group.inv(&ea);
    let total = FiniteQuandle::from_fn(elements.len(), |i, j| {
        let (g, h) = (&elements[i as usize], &elements[j as usize]);
        let w = group.mul(
            &group.mul(&group.mul(&group.mul(&ea_inv, g), &group.inv(h)), &ea),
            h,
        );
        debug_assert_eq!(w.n, 0);
        index(&w)
    })
    .map_err(CoveringError::NotAQuandle)?;
    let labels = elements
        .iter()
        .map(|g| format!("({},{})", g.x, g.alpha))
        .collect();
    let projection = elements.iter().map(|g| group.act(base_point, g)).collect();
    Ok(CoveringInstance {
        spec: spec.clone(),
        base_point,
        base: spec.quandle(),
        total: total.with_labels(labels),
        projection,
        elements,
        coker: group.coker_invariants(),
    })
}

impl CoveringInstance {
    pub fn fiber_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.base.order()];
        for &p in &self.projection {
            sizes[p as usize] += 1;
        }
        sizes
    }

    /// Writes `base.qt`, `total.qt` and `projection.map` into `dir`.
    pub fn export(&self, dir: &Path) -> io::Result<()> {
        fs::create_dir_all(dir)?;
        fs::write(dir.join("base.qt"), write_table(&self.base))?;
        fs::write(dir.join("total.qt"), write_table(&self.total))?;
        fs::write(
            dir.join("projection.map"),
            write_map(&self.projection, self.base.order()),
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringProperties {
    pub is_covering: bool,
    pub fibers_constant: bool,
    pub total_connected: bool,
    pub same_type: bool,
    pub base_type: u64,
    /// `None` when the quandle complex of the total space exceeds the cap.
    pub total_h2: Option<AbelianGroupInvariants>,
    /// Torsion of `H_2^Q` of the total space involves only primes dividing the type.
    pub h2_supported_on_type: Option<bool>,
    /// Torsion of `H_2^Q` of the total space is killed by the type itself.
    pub h2_annihilated_by_type: Option<bool>,
}

impl CoveringProperties {
    pub fn all_pass(&self) -> bool {
        self.is_covering
            && self.fibers_constant
            && self.total_connected
            && self.same_type
            && self.h2_supported_on_type != Some(false)
    }
}

/// Covering checks on an arbitrary projection `total → base`.
pub fn covering_properties_of(
    base: &FiniteQuandle,
    total: &FiniteQuandle,
    projection: &[u32],
    caps: &Caps,
) -> Result<CoveringProperties, HomologyError> {
    let is_cov = is_covering(projection, total, base).unwrap_or(false);
    let mut sizes = vec![0usize; base.order()];
    for &p in projection {
        if let Some(s) = sizes.get_mut(p as usize) {
            *s += 1;
        }
    }
    let t = base.quandle_type();
    let h2 = match quandle_h2(total, caps) {
        Ok(h) => Some(h),
        Err(HomologyError::SizeCap { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(CoveringProperties {
        is_covering: is_cov,
        fibers_constant: sizes.windows(2).all(|w| w[0] == w[1]),
        total_connected: total.is_connected(),
        same_type: total.quandle_type() == t,
        base_type: t,
        h2_supported_on_type: h2.as_ref().map(|h| h.torsion_is_supported_on(t)),
        h2_annihilated_by_type: h2.as_ref().map(|h| h.torsion_annihilated_by(t)),
        total_h2: h2,
    })
}

pub fn covering_properties(
    c: &CoveringInstance,
    caps: &Caps,
) -> Result<CoveringProperties, HomologyError> {
    covering_properties_of(&c.base, &c.total, &c.projection, caps)
}

/// Total spaces built from every base point are isomorphic to the one from `0`.
/// `None` when the total space has more than `limit` elements.
pub fn base_point_independent(
    spec: &AlexanderModuleSpec,
    limit: usize,
    caps: &Caps,
) -> Result<Option<bool>, CoveringError> {
    let first = universal_covering_alexander(spec, 0, caps)?;
    if first.total.order() > limit {
        return Ok(None);
    }
    for a in 1..spec.order() as u32 {
        let other = universal_covering_alexander(spec, a, caps)?;
        if find_isomorphism(&first.total, &other.total).is_none() {
            return Ok(Some(false));
        }
    }
    Ok(Some(true))
}
