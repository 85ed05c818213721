//! One line per acceptance criterion; exits non-zero if any fails.

use std::collections::{HashSet, VecDeque};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use qadjoint::adjoint::{
    action_kernel, eisermann_h2, group_h2_bar, mu_relation_matrix, verify_homotopy_2,
    verify_homotopy_3, ClauwensGroup,
};
use qadjoint::caps::Caps;
use qadjoint::covering::universal_covering_alexander;
use qadjoint::permgrp::wreath::core_quotient_report;
use qadjoint::permgrp::FiniteGroup;
use qadjoint::qbuild::{
    connected_alexander_grid, core, default_grid, AlexanderModuleSpec, CoxeterName, FamilySpec,
    GroupName,
};
use qadjoint::qcore::FiniteQuandle;
use qadjoint::qhomology::{adjoint_abelianization, quandle_h2};
use qadjoint::zalg::{cokernel, AbelianGroupInvariants};

type Verdict = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn spec(s: &str) -> FamilySpec {
    s.parse().unwrap_or_else(|e| panic!("{s}: {e}"))
}

fn alexander(s: &str) -> AlexanderModuleSpec {
    spec(s).alexander().expect("Alexander spec").clone()
}

// ---- oracles ----

fn axioms_hold(q: &FiniteQuandle) -> bool {
    let n = q.order() as u32;
    (0..n).all(|a| q.op(a, a) == a)
        && (0..n).all(|b| {
            let mut seen = vec![false; n as usize];
            (0..n).all(|a| !std::mem::replace(&mut seen[q.op(a, b) as usize], true))
        })
        && (0..n).all(|a| {
            (0..n).all(|b| (0..n).all(|c| q.op(q.op(a, b), c) == q.op(q.op(a, c), q.op(b, c))))
        })
}

fn columns(q: &FiniteQuandle) -> Vec<Vec<u32>> {
    let n = q.order() as u32;
    (0..n)
        .map(|b| (0..n).map(|a| q.op(a, b)).collect())
        .collect()
}

/// Size of the group generated by `gens`, by breadth-first closure.
fn closure_order(gens: &[Vec<u32>]) -> usize {
    let id: Vec<u32> = (0..gens[0].len() as u32).collect();
    let mut seen = HashSet::from([id.clone()]);
    let mut queue = VecDeque::from([id]);
    while let Some(p) = queue.pop_front() {
        for g in gens {
            let next: Vec<u32> = p.iter().map(|&i| g[i as usize]).collect();
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.len()
}

fn orbit_count(q: &FiniteQuandle) -> usize {
    let n = q.order();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for a in 0..n {
        for b in 0..n {
            let (x, y) = (
                find(&mut parent, a),
                find(&mut parent, q.op(a as u32, b as u32) as usize),
            );
            parent[x] = y;
        }
    }
    (0..n).filter(|&x| find(&mut parent, x) == x).count()
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Least common multiple of the orders of the maps `a ↦ a ◁ b`.
fn type_of(q: &FiniteQuandle) -> u64 {
    let mut t = 1;
    for col in columns(q) {
        let mut seen = vec![false; col.len()];
        for s in 0..col.len() {
            let mut len = 0u64;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = col[x] as usize;
                len += 1;
            }
            if len > 0 {
                t = t / gcd(t, len) * len;
            }
        }
    }
    t
}

fn connected(q: &FiniteQuandle) -> bool {
    orbit_count(q) == 1
}

/// `#{c : m c = 0}` for an abelian group given by its invariants.
fn killed_by(g: &AbelianGroupInvariants, m: u64) -> Option<u64> {
    (g.free_rank == 0).then(|| g.torsion_u64().iter().map(|&d| gcd(m, d)).product())
}

/// `X ⊗ X / ⟨x ⊗ y − Ty ⊗ x⟩` by enumerating the subgroup; returns its order and
/// `m ↦ #{c : m c = 0}`.
fn coker_mu_by_enumeration(s: &AlexanderModuleSpec) -> (u64, impl Fn(u64) -> u64) {
    let d = s.torsion_orders().to_vec();
    let k = d.len();
    let moduli: Vec<u64> = (0..k * k).map(|ij| gcd(d[ij / k], d[ij % k])).collect();
    let basis = |j: usize| {
        let mut v = vec![0i64; k];
        v[j] = 1;
        s.encode(&v)
    };
    let gens: Vec<Vec<u64>> = (0..k * k)
        .map(|ij| {
            let (i, j) = (ij / k, ij % k);
            let tej = s.decode(s.apply_t(basis(j)));
            let mut g = vec![0i64; k * k];
            g[i * k + j] += 1;
            for (l, c) in tej.iter().enumerate() {
                g[l * k + i] -= c;
            }
            g.iter()
                .zip(&moduli)
                .map(|(&x, &m)| x.rem_euclid(m as i64) as u64)
                .collect()
        })
        .collect();
    let add = {
        let moduli = moduli.clone();
        move |a: &[u64], b: &[u64]| -> Vec<u64> {
            a.iter()
                .zip(b)
                .zip(&moduli)
                .map(|((x, y), m)| (x + y) % m)
                .collect()
        }
    };
    let zero = vec![0u64; k * k];
    let mut h = HashSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(v) = queue.pop_front() {
        for g in &gens {
            let w = add(&v, g);
            if h.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    let total: u64 = moduli.iter().product();
    let index = total / h.len() as u64;
    let all: Vec<Vec<u64>> = {
        let mut out = vec![vec![]];
        for &m in &moduli {
            out = out
                .into_iter()
                .flat_map(|v| {
                    (0..m).map(move |x| {
                        let mut w = v.clone();
                        w.push(x);
                        w
                    })
                })
                .collect();
        }
        out
    };
    let h_len = h.len() as u64;
    let counts = move |m: u64| {
        let hits = all
            .iter()
            .filter(|v| {
                let mv: Vec<u64> = v.iter().zip(&moduli).map(|(x, md)| (x * m) % md).collect();
                h.contains(&mv)
            })
            .count() as u64;
        hits / h_len
    };
    (index, counts)
}

// ---- criteria ----

fn c1_axioms() -> Verdict {
    let grid = default_grid();
    ensure(grid.len() >= 40, || {
        format!("grid has {} specs", grid.len())
    })?;
    let mut orders = Vec::new();
    for s in &grid {
        let q = s.build().map_err(|e| format!("{s}: {e}"))?;
        ensure(axioms_hold(&q), || format!("{s} violates an axiom"))?;
        orders.push(q.order());
    }
    let (lo, hi) = (*orders.iter().min().unwrap(), *orders.iter().max().unwrap());
    ensure(lo == 1 && hi == 64, || format!("orders span {lo}..{hi}"))?;
    Ok(format!("{} quandles, orders {lo}..{hi}", grid.len()))
}

fn c2_triple_oracle() -> Verdict {
    let specs = connected_alexander_grid();
    ensure(specs.len() >= 10, || format!("{} specs", specs.len()))?;
    for s in &specs {
        let a = s.alexander().unwrap();
        let q = a.quandle();
        let h2 = quandle_h2(&q, &Caps::default()).map_err(|e| format!("{s}: {e}"))?;
        let eis = eisermann_h2(&ClauwensGroup::new(a).map_err(|e| e.to_string())?);
        let coker = cokernel(&mu_relation_matrix(a)).map_err(|e| e.to_string())?;
        ensure(h2 == eis && eis == coker, || {
            format!("{s}: {h2} / {eis} / {coker}")
        })?;
        let (order, counts) = coker_mu_by_enumeration(a);
        ensure(h2.order() == Some(BigUint::from(order)), || {
            format!("{s}: order {order}")
        })?;
        for m in 1..=order {
            ensure(killed_by(&h2, m) == Some(counts(m)), || {
                format!("{s}: {m}-torsion")
            })?;
        }
    }
    Ok(format!("{} specs agree", specs.len()))
}

const HOMOTOPY_SPECS: &[&str] = &[
    "alexander 3 T=2",
    "alexander 5 T=4",
    "alexander 3,3 T=2,0;0,2",
    "alexander 7 T=2",
    "alexander 2,2 T=0,1;1,1",
    "alexander 5 T=2",
    "alexander 13 T=5",
    "alexander 7 T=3",
];

fn homotopy_types() -> Result<Vec<u64>, String> {
    let types: Vec<u64> = HOMOTOPY_SPECS
        .iter()
        .map(|s| type_of(&spec(s).build().unwrap()))
        .collect();
    for t in [2, 3, 4] {
        ensure(types.contains(&t), || format!("no quandle of type {t}"))?;
    }
    Ok(types)
}

fn c3_homotopy_2() -> Verdict {
    let types = homotopy_types()?;
    let mut pairs = 0;
    for (s, t) in HOMOTOPY_SPECS.iter().zip(&types) {
        let g = ClauwensGroup::new(&alexander(s)).map_err(|e| e.to_string())?;
        let r = verify_homotopy_2(&g).map_err(|e| format!("{s}: {e}"))?;
        ensure(r.t == *t, || format!("{s}: type {} vs {t}", r.t))?;
        pairs += r.tuples_checked;
    }
    Ok(format!(
        "{} quandles, types {types:?}, {pairs} pairs",
        types.len()
    ))
}

fn c4_residual() -> Verdict {
    let types = homotopy_types()?;
    let mut triples = 0;
    for s in HOMOTOPY_SPECS {
        let g = ClauwensGroup::new(&alexander(s)).map_err(|e| e.to_string())?;
        let r = verify_homotopy_3(&g).map_err(|e| format!("{s}: {e}"))?;
        ensure(r.degenerate_c3_vanishes, || {
            format!("{s}: c3(x,x,z) does not vanish")
        })?;
        triples += r.tuples_checked;
    }
    Ok(format!("{} quandles, {triples} triples", types.len()))
}

fn c5_kernel() -> Verdict {
    let specs = connected_alexander_grid();
    for s in &specs {
        let a = s.alexander().unwrap();
        let g = ClauwensGroup::new(a).map_err(|e| e.to_string())?;
        let k = action_kernel(&g);
        let t = type_of(&a.quandle());
        let coker = cokernel(&mu_relation_matrix(a)).map_err(|e| e.to_string())?;
        ensure(k.matches_structure && k.t == t && k.coker == coker, || {
            format!("{s}: {k:?}")
        })?;
        // v · (m, x, α) = T^m v + (1 − T) x fixes every v iff t | m and x = 0
        let n = a.order() as u32;
        for m in -2 * t as i64..=2 * t as i64 {
            for x in 0..n {
                let trivial = (0..n).all(|v| a.add(a.apply_t_pow(v, m), a.one_minus_t(x)) == v);
                ensure(trivial == (m % t as i64 == 0 && x == 0), || {
                    format!("{s}: ({m},{x})")
                })?;
            }
        }
    }
    Ok(format!("{} specs", specs.len()))
}

fn c6_classical() -> Verdict {
    for q in [2u64, 3, 4, 5, 7] {
        let x = spec(&format!("symplectic g=1 q={q}")).build().unwrap();
        let inn = x.inner_group().order();
        ensure(inn == BigUint::from(q * (q * q - 1)), || {
            format!("Sp q={q}: {inn}")
        })?;
    }
    let mut sizes = Vec::new();
    for q in [3u64, 5, 7] {
        let x = spec(&format!("spherical n=2 q={q}")).build().unwrap();
        let brute = closure_order(&columns(&x));
        let inn = x.inner_group().order();
        ensure(inn == BigUint::from(brute), || {
            format!("spherical q={q}: {inn} vs {brute}")
        })?;
        sizes.push(brute);
    }
    Ok(format!(
        "symplectic q(q^2-1) for q=2,3,4,5,7; spherical Inn {sizes:?}"
    ))
}

fn c7_core() -> Verdict {
    let mut out = Vec::new();
    for name in ["Z/3", "Z/4", "S3", "Q8"] {
        let g: FiniteGroup = name
            .parse::<GroupName>()
            .map_err(|e| e.to_string())?
            .group();
        let n = g.order();
        let brute = closure_order(&columns(&core(&g)));
        // [G, G] as the closure of all commutators under multiplication
        let mut comm: HashSet<usize> = HashSet::from([g.identity()]);
        loop {
            let gens: Vec<usize> = (0..n)
                .flat_map(|a| (0..n).map(move |b| (a, b)))
                .map(|(a, b)| g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))
                .collect();
            let next: HashSet<usize> = comm
                .iter()
                .flat_map(|&c| gens.iter().map(move |&k| (c, k)))
                .map(|(c, k)| g.mul(c, k))
                .chain(comm.iter().copied())
                .collect();
            if next.len() == comm.len() {
                break;
            }
            comm = next;
        }
        let g1 = 2 * n * comm.len();
        let mut g2 = 0;
        for z in 0..n {
            if !comm.contains(&g.mul(z, z)) {
                continue;
            }
            let conj = |k: usize| g.mul(g.mul(g.inv(z), k), z);
            g2 += usize::from((0..n).all(|k| conj(k) == k));
            g2 += usize::from((0..n).all(|k| conj(k) == g.inv(k)));
        }
        let r = core_quotient_report(&g);
        ensure((r.g1_order, r.g2_order) == (g1, g2), || {
            format!("{name}: {r:?}")
        })?;
        ensure(g1 / g2 == brute && r.quotient_order == brute, || {
            format!("{name}: |G1/G2| = {} but |Inn| = {brute}", g1 / g2)
        })?;
        ensure(
            r.g2_is_action_kernel && r.action_is_homomorphism && r.image_is_generated_by_kappa,
            || format!("{name}: {r:?}"),
        )?;
        out.push(format!("{name}:{brute}"));
    }
    Ok(format!("|Inn| = |G1/G2| for {}", out.join(" ")))
}

fn c8_coxeter() -> Verdict {
    let mut out = Vec::new();
    for name in ["S3", "S4", "D4", "D6"] {
        let w: CoxeterName = name
            .parse()
            .map_err(|e: qadjoint::qbuild::BuildError| e.to_string())?;
        let h2 = group_h2_bar(&w.group(), &Caps::default()).map_err(|e| e.to_string())?;
        ensure(h2.free_rank == 0 && h2.torsion_is_supported_on(2), || {
            format!("{name}: {h2}")
        })?;
        if name == "S4" {
            ensure(h2 == AbelianGroupInvariants::new(0, &[2]), || {
                format!("S4: {h2}")
            })?;
        }
        out.push(format!("{name}:{h2}"));
    }
    Ok(out.join(" "))
}

fn c9_covering() -> Verdict {
    let a = alexander("alexander 3,3 T=-1,0;0,-1");
    let c = universal_covering_alexander(&a, 0, &Caps::default()).map_err(|e| e.to_string())?;
    let (total, base, f) = (&c.total, &c.base, &c.projection);
    ensure(total.order() == 27, || {
        format!("total order {}", total.order())
    })?;
    ensure(axioms_hold(total), || "total space is not a quandle".into())?;
    ensure(connected(total), || "total space is not connected".into())?;
    let t = type_of(total);
    ensure(t == 2, || format!("type {t}"))?;
    // surjective homomorphism whose fibers carry equal columns
    let n = total.order() as u32;
    let hom = (0..n).all(|x| {
        (0..n).all(|y| f[total.op(x, y) as usize] == base.op(f[x as usize], f[y as usize]))
    });
    let onto = (0..base.order() as u32).all(|b| f.contains(&b));
    let cols = columns(total);
    let fibers =
        (0..n as usize).all(|x| (0..n as usize).all(|y| f[x] != f[y] || cols[x] == cols[y]));
    ensure(hom && onto && fibers, || {
        format!("covering: hom={hom} onto={onto} fibers={fibers}")
    })?;
    let h2 = quandle_h2(total, &Caps::default()).map_err(|e| e.to_string())?;
    ensure(h2.torsion_annihilated_by(2), || format!("H2 = {h2}"))?;
    Ok(format!("27 elements, type 2, H2^Q = {h2}"))
}

fn c10_abelianization() -> Verdict {
    let grid = default_grid();
    for s in &grid {
        let q = s.build().unwrap();
        let ab = adjoint_abelianization(&q);
        let k = orbit_count(&q);
        ensure(ab == AbelianGroupInvariants::free(k), || {
            format!("{s}: {ab} with {k} orbits")
        })?;
    }
    Ok(format!("{} quandles", grid.len()))
}

fn c11_determinism() -> Verdict {
    let a = qadjoint::cli::run(["qadj", "census"]);
    let b = qadjoint::cli::run(["qadj", "census"]);
    ensure(a.code == 0, || {
        format!("census exit code {}: {}", a.code, a.stderr)
    })?;
    ensure(a.stdout == b.stdout, || "census reports differ".into())?;
    Ok(format!("{} bytes, identical", a.stdout.len()))
}

fn main() {
    let criteria: Vec<(u32, &str, Option<u64>, fn() -> Verdict)> = vec![
        (1, "axiom suite over the grid", Some(10), c1_axioms),
        (2, "H2 triple oracle", Some(60), c2_triple_oracle),
        (3, "degree-2 homotopy identity", Some(30), c3_homotopy_2),
        (4, "degree-3 residual", Some(120), c4_residual),
        (5, "action kernel structure", None, c5_kernel),
        (6, "classical group orders", Some(30), c6_classical),
        (7, "core quandle inner groups", None, c7_core),
        (8, "Coxeter 2-annihilation", Some(120), c8_coxeter),
        (9, "universal covering suite", Some(60), c9_covering),
        (10, "abelianization", None, c10_abelianization),
        (11, "census determinism", None, c11_determinism),
    ];
    let mut failed = 0;
    for (n, title, limit, f) in criteria {
        let start = Instant::now();
        let verdict = catch_unwind(AssertUnwindSafe(f))
            .unwrap_or_else(|p| Err(format!("panicked: {:?}", p.downcast_ref::<String>())));
        let elapsed = start.elapsed();
        let verdict = match (verdict, limit) {
            (Ok(_), Some(s)) if elapsed > Duration::from_secs(s) => {
                Err(format!("took {:.1}s, limit {s}s", elapsed.as_secs_f64()))
            }
            (v, _) => v,
        };
        let (tag, detail) = match verdict {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!(
            "criterion {n:>2} {tag} {:>7.2}s  {title}: {detail}",
            elapsed.as_secs_f64()
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
