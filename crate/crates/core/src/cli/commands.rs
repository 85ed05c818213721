//! Check pipelines behind the subcommands. Each returns the checks for one input;
//! `Err` is a precondition failure (exit code 2).

use std::path::Path;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::input::{Input, InputError};
use super::report::{timed, Check, Status};
use crate::adjoint::{
    action_kernel, central_power_check, check_associativity, eisermann_h2, group_h2_bar,
    mu_relation_matrix, stabilizer_kernel, verify_homotopy_2, verify_homotopy_3, AdjointError,
    ClauwensGroup,
};
use crate::caps::Caps;
use crate::covering::{
    base_point_independent, covering_properties, universal_covering_alexander, CoveringError,
};
use crate::permgrp::wreath::core_quotient_report;
use crate::qbuild::{
    orthogonal_group_order, symplectic_group_order, AlexanderModuleSpec, FamilySpec,
};
use crate::qhomology::{adjoint_abelianization, homology, ComplexMode, HomologyError};
use crate::zalg::{cokernel, AbelianGroupInvariants};

pub type Outcome = Result<Vec<Check>, String>;

const ASSOCIATIVITY_SAMPLES: usize = 2000;
const ASSOCIATIVITY_SEED: u64 = 0x5eed;
const ISOMORPHISM_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Clauwens,
    Homotopy,
    Eisermann,
    Covering,
    Coxeter,
}

fn orbit_sizes(input: &Input) -> String {
    let sizes: Vec<String> = input
        .quandle
        .orbits()
        .iter()
        .map(|o| o.len().to_string())
        .collect();
    sizes.join(",")
}

fn connected_alexander(input: &Input) -> Result<&AlexanderModuleSpec, String> {
    let spec = input
        .family()
        .and_then(FamilySpec::alexander)
        .ok_or_else(|| format!("{}: this check needs an Alexander family spec", input.name))?;
    if !spec.is_connected() {
        return Err(format!(
            "{}: the Alexander quandle is not connected",
            input.name
        ));
    }
    Ok(spec)
}

fn model(spec: &AlexanderModuleSpec) -> Result<ClauwensGroup, String> {
    ClauwensGroup::new(spec).map_err(|e| e.to_string())
}

/// Quandle or rack `H_k`, `None` past the cap.
fn homology_or_skip(
    input: &Input,
    mode: ComplexMode,
    degree: usize,
    caps: &Caps,
) -> Result<Option<AbelianGroupInvariants>, String> {
    match homology(&input.quandle, mode, degree, caps) {
        Ok(h) => Ok(Some(h)),
        Err(HomologyError::SizeCap { .. }) => Ok(None),
        Err(e) => Err(e.to_string()),
    }
}

pub fn check(input: &Input) -> Vec<Check> {
    let q = &input.quandle;
    let profile = q.profile();
    vec![
        Check::new("axioms", "quandle axioms", Status::Pass).with("order", q.order()),
        Check::new("profile", "type, orbits and inner group", Status::Reported)
            .with("type", profile.type_t)
            .with("orbits", q.orbits().len())
            .with("orbit_sizes", orbit_sizes(input))
            .with("connected", profile.connected)
            .with("inn_order", &profile.inn_order),
    ]
}

/// A table that parsed but is not a quandle.
pub fn check_failure(err: &InputError) -> Vec<Check> {
    vec![Check::new("axioms", "quandle axioms", Status::Fail).with("error", err)]
}

fn abelianization_check(input: &Input) -> Check {
    let ab = adjoint_abelianization(&input.quandle);
    let orbits = input.quandle.orbits().len();
    Check::new(
        "abelianization",
        "adjoint group abelianizes to Z^(orbits)",
        Status::from_bool(ab.is_free() && ab.free_rank == orbits),
    )
    .with("invariants", &ab)
    .with("orbits", orbits)
}

fn family_checks(input: &Input) -> Vec<Check> {
    let Some(family) = input.family() else {
        return Vec::new();
    };
    let inn = input.quandle.profile().inn_order;
    match family {
        FamilySpec::Symplectic { g, q } => {
            let expected = symplectic_group_order(*g as u32, *q as u64);
            vec![Check::new(
                "classical-order",
                "inner group of a symplectic quandle is Sp(2g, q)",
                Status::from_bool(inn == expected),
            )
            .with("inn_order", &inn)
            .with("sp_order", expected)]
        }
        FamilySpec::Spherical { n, q } => {
            let o = orthogonal_group_order(*n as u32 + 1, *q as u64);
            let ratio = if &o % &inn == BigUint::from(0u32) {
                (&o / &inn).to_string()
            } else {
                "non-integral".into()
            };
            vec![Check::new(
                "classical-order",
                "inner group of a spherical quandle against O(n+1, q)",
                Status::Reported,
            )
            .with("inn_order", &inn)
            .with("o_order", o)
            .with("index", ratio)]
        }
        FamilySpec::Core(g) => {
            let r = core_quotient_report(&g.group());
            let ok = BigUint::from(r.quotient_order) == inn
                && r.g2_is_action_kernel
                && r.action_is_homomorphism
                && r.image_is_generated_by_kappa;
            vec![Check::new(
                "core-quotient",
                "inner group of a core quandle is G1/G2",
                Status::from_bool(ok),
            )
            .with("g1_order", r.g1_order)
            .with("g2_order", r.g2_order)
            .with("inn_order", &inn)
            .with("g2_is_kernel", r.g2_is_action_kernel)
            .with("g2_is_central", r.g2_is_central)]
        }
        _ => Vec::new(),
    }
}

pub fn invariants(input: &Input, caps: &Caps) -> Outcome {
    let q = &input.quandle;
    let mut out = check(input);
    out.push(abelianization_check(input));
    let profile = q.profile();
    if let Some(ok) = profile.type_divides_inn_index(q.order()) {
        out.push(
            Check::new(
                "type-divides-stabilizer",
                "type divides |Inn| / |X| for connected quandles",
                Status::from_bool(ok),
            )
            .with("type", profile.type_t),
        );
    }
    out.extend(family_checks(input));
    out.push(homology_check(input, ComplexMode::Quandle, 2, caps)?);
    Ok(out)
}

pub fn homology_check(
    input: &Input,
    mode: ComplexMode,
    degree: usize,
    caps: &Caps,
) -> Result<Check, String> {
    let id = format!("{mode}-h{degree}");
    let anchor = format!("{mode} homology in degree {degree}");
    Ok(match homology_or_skip(input, mode, degree, caps)? {
        Some(h) => Check::new(id, anchor, Status::Reported).with("invariants", h),
        None => Check::new(id, anchor, Status::Skipped).with("cap_cells", caps.cells),
    })
}

pub fn adjoint(input: &Input) -> Outcome {
    let spec = connected_alexander(input)?;
    let g = model(spec)?;
    let relations = g.check_relations();
    let assoc = check_associativity(&g, ASSOCIATIVITY_SAMPLES, ASSOCIATIVITY_SEED);
    let kernel = action_kernel(&g);
    let eps_ok = (0..g.module_order() as u32).all(|x| g.epsilon(&g.e(x)) == 1);
    Ok(vec![
        Check::new(
            "model",
            "explicit adjoint group on Z x X x Coker(mu)",
            Status::Reported,
        )
        .with("module_order", g.module_order())
        .with("t", g.t_order())
        .with("coker_mu", g.coker_invariants()),
        Check::new(
            "relations",
            "e(x<y) = e(y)^-1 e(x) e(y) for all pairs",
            Status::from_bool(relations.is_none()),
        )
        .with("pairs", g.module_order().pow(2))
        .with(
            "first_failure",
            relations.map_or("none".into(), |(x, y)| format!("{x},{y}")),
        ),
        Check::new(
            "associativity",
            "model product is associative",
            Status::from_bool(assoc.is_none()),
        )
        .with("samples", ASSOCIATIVITY_SAMPLES)
        .with("seed", ASSOCIATIVITY_SEED),
        Check::new("epsilon", "eps(e(x)) = 1", Status::from_bool(eps_ok)),
        Check::new(
            "central-power",
            "e(x)^t is central and independent of x",
            Status::from_bool(central_power_check(&g)),
        )
        .with("t", kernel.t),
        Check::new(
            "action-kernel",
            "kernel of As(X) -> Inn(X) is tZ x Coker(mu)",
            Status::from_bool(kernel.matches_structure),
        )
        .with("t", kernel.t)
        .with("coker_mu", &kernel.coker)
        .with("pairs_checked", kernel.pairs_checked),
    ])
}

fn clauwens_suite(input: &Input, caps: &Caps) -> Outcome {
    let spec = connected_alexander(input)?;
    let g = model(spec)?;
    let mu = cokernel(&mu_relation_matrix(spec)).map_err(|e| e.to_string())?;
    let stab = eisermann_h2(&g);
    let anchor = "H2Q of a connected Alexander quandle is Coker(mu)";
    Ok(vec![
        match homology_or_skip(input, ComplexMode::Quandle, 2, caps)? {
            Some(h2) => Check::new(
                "clauwens-h2",
                anchor,
                Status::from_bool(h2 == mu && mu == stab),
            )
            .with("quandle_h2", h2)
            .with("stabilizer", stab)
            .with("coker_mu", mu),
            None => {
                Check::new("clauwens-h2", anchor, Status::Skipped).with("cap_cells", caps.cells)
            }
        },
    ])
}

fn homotopy_suite(input: &Input) -> Outcome {
    let spec = connected_alexander(input)?;
    let g = model(spec)?;
    let two = match verify_homotopy_2(&g) {
        Ok(r) => Check::new("homotopy-2", "-h1 d2 - d h2 = t c2", Status::Pass)
            .with("t", r.t)
            .with("pairs", r.tuples_checked),
        Err(e) => failure_check("homotopy-2", "-h1 d2 - d h2 = t c2", e)?,
    };
    let three = match verify_homotopy_3(&g) {
        Ok(r) => vec![
            Check::new(
                "homotopy-3",
                "t c3 - h2 d3 - d h3 is independent of x",
                Status::Pass,
            )
            .with("t", r.t)
            .with("triples", r.tuples_checked)
            .with("degenerate_c3_vanishes", r.degenerate_c3_vanishes),
            Check::new(
                "homotopy-3-printed-signs",
                "residual against the alternative sign pattern",
                Status::Reported,
            )
            .with("matches", r.printed_form_matches),
        ],
        Err(e) => vec![failure_check(
            "homotopy-3",
            "t c3 - h2 d3 - d h3 is independent of x",
            e,
        )?],
    };
    let mut out = vec![two];
    out.extend(three);
    Ok(out)
}

fn failure_check(id: &str, anchor: &str, e: AdjointError) -> Result<Check, String> {
    match e {
        AdjointError::IdentityFailed { check, tuple, diff } => {
            Ok(Check::new(id, anchor, Status::Fail)
                .with("identity", check)
                .with("tuple", format!("{tuple:?}"))
                .with("difference", diff))
        }
        other => Err(other.to_string()),
    }
}

fn eisermann_suite(input: &Input, caps: &Caps) -> Outcome {
    let spec = connected_alexander(input)?;
    let g = model(spec)?;
    let stab = stabilizer_kernel(&g);
    let shape_ok =
        stab.iter().all(|s| s.n == 0 && s.x == 0) && stab.len() as u64 == g.coker_order();
    let inv = eisermann_h2(&g);
    let anchor = "H2Q is the abelianization of Stab(x0) in Ker(eps)";
    let mut out = vec![Check::new(
        "stabilizer-shape",
        "Stab(0) in Ker(eps) is {(0,0,a)}",
        Status::from_bool(shape_ok),
    )
    .with("elements", stab.len())
    .with("coker_order", g.coker_order())];
    out.push(
        match homology_or_skip(input, ComplexMode::Quandle, 2, caps)? {
            Some(h2) => Check::new("eisermann-h2", anchor, Status::from_bool(h2 == inv))
                .with("stabilizer", inv)
                .with("quandle_h2", h2),
            None => {
                Check::new("eisermann-h2", anchor, Status::Skipped).with("cap_cells", caps.cells)
            }
        },
    );
    Ok(out)
}

pub fn covering(input: &Input, base_point: u32, export: Option<&Path>, caps: &Caps) -> Outcome {
    let spec = connected_alexander(input)?;
    let c = match universal_covering_alexander(spec, base_point, caps) {
        Ok(c) => c,
        Err(CoveringError::SizeCap { needed, cap }) => {
            return Ok(vec![Check::new(
                "universal-covering",
                "universal covering of a connected Alexander quandle",
                Status::Skipped,
            )
            .with("total_order", needed)
            .with("cap_cells", cap)]);
        }
        Err(e) => return Err(e.to_string()),
    };
    if let Some(dir) = export {
        c.export(dir)
            .map_err(|e| format!("{}: {e}", dir.display()))?;
    }
    let p = covering_properties(&c, caps).map_err(|e| e.to_string())?;
    let sizes = c.fiber_sizes();
    let coker_order: u64 = c
        .coker
        .order()
        .and_then(|o| u64::try_from(o).ok())
        .unwrap_or(0);
    let mut out = vec![
        Check::new(
            "universal-covering",
            "universal covering of a connected Alexander quandle",
            Status::from_bool(p.is_covering),
        )
        .with("base_order", c.base.order())
        .with("total_order", c.total.order())
        .with("base_point", c.base_point)
        .with("coker_mu", &c.coker),
        Check::new(
            "fibers",
            "fibers have size |Coker(mu)|",
            Status::from_bool(sizes.iter().all(|&s| s as u64 == coker_order)),
        )
        .with("fiber_size", sizes.first().copied().unwrap_or(0)),
        Check::new(
            "covering-connected",
            "covering space is connected",
            Status::from_bool(p.total_connected),
        ),
        Check::new(
            "covering-type",
            "covering space has the type of the base",
            Status::from_bool(p.same_type),
        )
        .with("type", p.base_type),
    ];
    let anchor = "H2Q of the covering space is annihilated by the type";
    out.push(match (&p.total_h2, p.h2_annihilated_by_type) {
        (Some(h), Some(ok)) => Check::new("covering-h2", anchor, Status::from_bool(ok))
            .with("quandle_h2", h)
            .with("supported_on_type", p.h2_supported_on_type.unwrap_or(false)),
        _ => Check::new("covering-h2", anchor, Status::Skipped).with("cap_cells", caps.cells),
    });
    let anchor = "covering space does not depend on the base point";
    out.push(
        match base_point_independent(spec, ISOMORPHISM_LIMIT, caps).map_err(|e| e.to_string())? {
            Some(ok) => Check::new("base-point", anchor, Status::from_bool(ok)),
            None => Check::new("base-point", anchor, Status::Reported).with(
                "note",
                format!("isomorphism search limited to {ISOMORPHISM_LIMIT} elements"),
            ),
        },
    );
    Ok(out)
}

fn coxeter_suite(input: &Input, caps: &Caps) -> Outcome {
    let Some(FamilySpec::Coxeter(w)) = input.family() else {
        return Err(format!(
            "{}: the coxeter suite needs a coxeter family spec",
            input.name
        ));
    };
    let anchor = "H2 of a finite Coxeter group is annihilated by 2";
    Ok(vec![match group_h2_bar(&w.group(), caps) {
        Ok(h) => Check::new(
            "coxeter-h2",
            anchor,
            Status::from_bool(h.torsion_annihilated_by(2)),
        )
        .with("group_order", w.group().order())
        .with("h2", h),
        Err(AdjointError::SizeCap { needed, cap }) => {
            Check::new("coxeter-h2", anchor, Status::Skipped)
                .with("group_order", needed)
                .with("cap_group", cap)
        }
        Err(e) => return Err(e.to_string()),
    }])
}

pub fn verify(input: &Input, suite: Suite, caps: &Caps) -> Outcome {
    match suite {
        Suite::Clauwens => clauwens_suite(input, caps),
        Suite::Homotopy => homotopy_suite(input),
        Suite::Eisermann => eisermann_suite(input, caps),
        Suite::Covering => covering(input, 0, None, caps),
        Suite::Coxeter => coxeter_suite(input, caps),
    }
}

/// Per-entry checks for a census, ids prefixed by the entry's position.
pub fn census_entry(
    pos: usize,
    entry: &Result<Input, InputError>,
    caps: &Caps,
    timings: bool,
) -> Vec<Check> {
    let prefix = format!("{pos:03}");
    let body = || -> Vec<Check> {
        let input = match entry {
            Ok(i) => i,
            Err(e @ InputError::NotAQuandle { .. }) => return check_failure(e),
            Err(e) => {
                return vec![Check::new("input", "readable input", Status::Fail).with("error", e)]
            }
        };
        let mut out =
            vec![Check::new("input", "readable input", Status::Pass).with("name", &input.name)];
        out.extend(check(input));
        out.push(abelianization_check(input));
        out.extend(family_checks(input));
        match homology_check(input, ComplexMode::Quandle, 2, caps) {
            Ok(c) => out.push(c),
            Err(e) => out.push(
                Check::new("quandle-h2", "quandle homology in degree 2", Status::Fail)
                    .with("error", e),
            ),
        }
        if connected_alexander(input).is_ok() {
            match clauwens_suite(input, caps) {
                Ok(c) => out.extend(c),
                Err(e) => out.push(
                    Check::new(
                        "clauwens-h2",
                        "H2Q of a connected Alexander quandle is Coker(mu)",
                        Status::Fail,
                    )
                    .with("error", e),
                ),
            }
        }
        out
    };
    let checks = if timings { timed(body) } else { body() };
    checks.into_iter().map(|c| c.prefixed(&prefix)).collect()
}

pub fn census(entries: &[Result<Input, InputError>], caps: &Caps, timings: bool) -> Vec<Check> {
    entries
        .par_iter()
        .enumerate()
        .map(|(i, e)| census_entry(i, e, caps, timings))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}
