use proptest::prelude::*;

use qadjoint::adjoint::{ClauwensElement, ClauwensGroup};
use qadjoint::caps::Caps;
use qadjoint::covering::universal_covering_alexander;
use qadjoint::permgrp::FiniteGroup;
use qadjoint::permgrp::{Perm, PermGroup};
use qadjoint::qbuild::{core, dihedral, trivial, AlexanderModuleSpec};
use qadjoint::qcore::{is_covering, FiniteQuandle};
use qadjoint::qhomology::{adjoint_abelianization, build_complex, ComplexMode, TupleBasis};
use qadjoint::zalg::{
    cokernel, homology_at, invariant_factors, smith_normal_form, SnfOptions, SparseIntMatrix,
    ZalgError,
};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Every `(n, t)` with `Z/n, T = t` a connected Alexander quandle and `n <= 16`.
fn connected_cyclic() -> Vec<(u64, i64)> {
    let mut out = Vec::new();
    for n in 3..=16i64 {
        for t in 2..n {
            if gcd(t, n) == 1 && gcd(1 - t + n, n) == 1 {
                out.push((n as u64, t));
            }
        }
    }
    out
}

/// Small cyclic Alexander quandles, connected or not.
fn any_cyclic() -> impl Strategy<Value = AlexanderModuleSpec> {
    (1u64..=9, 1i64..9)
        .prop_filter("T must be a unit", |(n, t)| gcd(*t, *n as i64) == 1)
        .prop_map(|(n, t)| AlexanderModuleSpec::cyclic(n, t).unwrap())
}

fn small_quandle() -> impl Strategy<Value = FiniteQuandle> {
    prop_oneof![
        any_cyclic().prop_map(|s| s.quandle()),
        (1usize..=7).prop_map(|n| dihedral(n).unwrap()),
        (1usize..=4).prop_map(|n| trivial(n).unwrap()),
        (2usize..=6).prop_map(|n| core(&FiniteGroup::cyclic(n))),
    ]
}

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=6, 1usize..=6)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..=6, c), r))
}

fn diagonal(m: &SparseIntMatrix) -> Vec<i64> {
    invariant_factors(m)
        .unwrap()
        .iter()
        .map(|v| v.to_i64().unwrap())
        .collect()
}

fn perm_strategy(degree: usize) -> impl Strategy<Value = Perm> {
    Just((0..degree as u32).collect::<Vec<u32>>())
        .prop_shuffle()
        .prop_map(|v| Perm::from_images(v).unwrap())
}

fn perm_group() -> impl Strategy<Value = PermGroup> {
    (2usize..=7).prop_flat_map(|d| {
        prop::collection::vec(perm_strategy(d), 1..=3).prop_map(move |g| PermGroup::new(d, g))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn snf_ignores_row_and_column_order(
        rows in small_matrix(),
        seed in any::<u64>(),
    ) {
        let m = SparseIntMatrix::from_dense(&rows);
        let (r, c) = (m.rows(), m.cols());
        let mut rp: Vec<usize> = (0..r).collect();
        let mut cp: Vec<usize> = (0..c).collect();
        rp.rotate_left((seed % r as u64) as usize);
        cp.reverse();
        cp.rotate_left(((seed >> 8) % c as u64) as usize);
        prop_assert_eq!(diagonal(&m), diagonal(&m.permuted(&rp, &cp)));
    }

    #[test]
    fn snf_transforms_are_unimodular(rows in small_matrix()) {
        let m = SparseIntMatrix::from_dense(&rows);
        let f = smith_normal_form(&m, SnfOptions::with_transforms()).unwrap();
        let tr = f.transforms.as_ref().unwrap();
        prop_assert!(tr.left.determinant().is_unit());
        prop_assert!(tr.right.determinant().is_unit());
        prop_assert_eq!(tr.left.mul(&m.to_dense()).mul(&tr.right), f.diagonal_matrix());
        prop_assert_eq!(f.diagonal.clone(), invariant_factors(&m).unwrap());
    }

    #[test]
    fn zero_columns_leave_the_cokernel_alone(rows in small_matrix(), extra in 0usize..4) {
        let m = SparseIntMatrix::from_dense(&rows);
        prop_assert_eq!(cokernel(&m).unwrap(), cokernel(&m.with_zero_columns(extra)).unwrap());
    }

    #[test]
    fn homology_rejects_non_complexes(a in small_matrix(), b in small_matrix()) {
        // a: rows(a) x cols(a) is the outgoing map, b's rows are trimmed to cols(a)
        let out = SparseIntMatrix::from_dense(&a);
        let inner: Vec<Vec<i64>> = (0..out.cols()).map(|i| b[i % b.len()].clone()).collect();
        let incoming = SparseIntMatrix::from_dense(&inner);
        let product = out.mul(&incoming).unwrap();
        let result = homology_at(&incoming, &out);
        if product.nnz() > 0 {
            let is_complex_error = matches!(result, Err(ZalgError::NotAComplex { .. }));
            prop_assert!(is_complex_error);
        } else {
            prop_assert!(result.is_ok());
        }
    }

    #[test]
    fn schreier_sims_order_matches_closure(g in perm_group()) {
        let elements = g.elements_brute_force(6000).unwrap();
        prop_assert_eq!(g.order_u64(), elements.len() as u64);
        for e in &elements {
            prop_assert!(g.contains(e));
        }
    }

    #[test]
    fn orbit_times_stabilizer_is_the_order(g in perm_group()) {
        for x in 0..g.degree() as u32 {
            let orbit = g.orbit(x).len() as u64;
            prop_assert_eq!(orbit * g.stabilizer(x).order_u64(), g.order_u64());
        }
    }

    #[test]
    fn derived_subgroup_is_normal(g in perm_group()) {
        let d = g.derived_subgroup();
        prop_assert!(d.is_normal_in(&g));
        for s in g.generators() {
            for h in d.generators() {
                prop_assert!(d.contains(&h.conjugate_by(s)));
            }
        }
    }

    #[test]
    fn constructors_satisfy_the_axioms(q in small_quandle()) {
        let rows: Vec<Vec<i64>> = (0..q.order() as u32)
            .map(|a| q.row(a).iter().map(|&v| i64::from(v)).collect())
            .collect();
        let again = FiniteQuandle::validate(&rows).unwrap();
        prop_assert_eq!(again.flat_table(), q.flat_table());
    }

    #[test]
    fn orbits_are_preserved_by_columns(q in small_quandle()) {
        let orbits = q.orbits();
        let mut owner = vec![0usize; q.order()];
        for (i, o) in orbits.iter().enumerate() {
            for &x in o {
                owner[x as usize] = i;
            }
        }
        for b in 0..q.order() as u32 {
            let p = q.column_perm(b);
            for a in 0..q.order() as u32 {
                prop_assert_eq!(owner[a as usize], owner[p.image(a) as usize]);
            }
        }
    }

    #[test]
    fn connectivity_criterion_matches_orbits(s in any_cyclic()) {
        prop_assert_eq!(s.is_connected(), s.quandle().is_connected());
    }

    #[test]
    fn type_divides_inner_index(q in small_quandle()) {
        let p = q.profile();
        if let Some(ok) = p.type_divides_inn_index(q.order()) {
            prop_assert!(ok);
        }
    }

    #[test]
    fn dihedral_connected_iff_odd(n in 1usize..=30) {
        prop_assert_eq!(dihedral(n).unwrap().is_connected(), n % 2 == 1);
    }

    #[test]
    fn core_of_cyclic_has_type_dividing_two(n in 1usize..=12) {
        let t = core(&FiniteGroup::cyclic(n)).quandle_type();
        prop_assert!(t == 1 || t == 2);
    }

    #[test]
    fn boundaries_compose_to_zero(q in small_quandle(), rack in any::<bool>()) {
        prop_assume!(q.order() <= 7);
        let mode = if rack { ComplexMode::Rack } else { ComplexMode::Quandle };
        let c = build_complex(&q, mode, 4, &Caps::default()).unwrap();
        prop_assert!(c.check_composition().is_ok());
    }

    #[test]
    fn abelianization_is_free_on_orbits(q in small_quandle()) {
        let ab = adjoint_abelianization(&q);
        prop_assert!(ab.is_free());
        prop_assert_eq!(ab.free_rank, q.orbits().len());
    }

    #[test]
    fn tuple_numbering_round_trips(
        n in 1usize..=6,
        k in 1usize..=4,
        rack in any::<bool>(),
        pick in any::<u64>(),
    ) {
        let mode = if rack { ComplexMode::Rack } else { ComplexMode::Quandle };
        let basis = TupleBasis { n, k, mode };
        prop_assume!(!basis.is_empty());
        let idx = pick % basis.len();
        let mut t = vec![0u32; k];
        basis.decode(idx, &mut t);
        prop_assert!(t.iter().all(|&x| (x as usize) < n));
        if !rack {
            prop_assert!(t.windows(2).all(|w| w[0] != w[1]));
        }
        prop_assert_eq!(basis.encode(&t), Some(idx));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn coverings_have_equal_columns_on_fibers(
        (n, t) in prop::sample::select(connected_cyclic()),
        base in 0u32..3,
    ) {
        let spec = AlexanderModuleSpec::cyclic(n, t).unwrap();
        let c = universal_covering_alexander(&spec, base % n as u32, &Caps::default()).unwrap();
        let f = &c.projection;
        prop_assert!(is_covering(f, &c.total, &c.base).unwrap());
        let coker = c.coker.order().unwrap();
        for size in c.fiber_sizes() {
            prop_assert_eq!(num_bigint::BigUint::from(size), coker.clone());
        }
        for x in 0..c.total.order() {
            for y in x + 1..c.total.order() {
                if f[x] == f[y] {
                    prop_assert_eq!(c.total.column_perm(x as u32), c.total.column_perm(y as u32));
                }
            }
        }
    }

    #[test]
    fn model_is_a_group_with_additive_degree(
        (n, t) in prop::sample::select(connected_cyclic()),
        raw in prop::collection::vec((-6i64..=6, any::<u32>(), any::<u32>()), 3),
    ) {
        let g = ClauwensGroup::new(&AlexanderModuleSpec::cyclic(n, t).unwrap()).unwrap();
        let el: Vec<ClauwensElement> = raw
            .iter()
            .map(|&(k, x, a)| ClauwensElement {
                n: k,
                x: x % g.module_order() as u32,
                alpha: a % g.coker_order() as u32,
            })
            .collect();
        let (a, b, c) = (&el[0], &el[1], &el[2]);
        prop_assert_eq!(g.mul(&g.mul(a, b), c), g.mul(a, &g.mul(b, c)));
        prop_assert_eq!(g.mul(a, &g.inv(a)), g.identity());
        prop_assert_eq!(g.epsilon(&g.mul(a, b)), g.epsilon(a) + g.epsilon(b));
        for v in 0..g.module_order() as u32 {
            prop_assert_eq!(g.act(v, &g.mul(a, b)), g.act(g.act(v, a), b));
        }
    }
}
