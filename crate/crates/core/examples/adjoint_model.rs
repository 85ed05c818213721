//! The adjoint group of a connected Alexander quandle as triples (n, x, α).

use qadjoint::adjoint::{action_kernel, eisermann_h2, ClauwensGroup};
use qadjoint::qbuild::FamilySpec;

fn main() {
    let spec: FamilySpec = "alexander 3,3 T=2,0;0,2".parse().unwrap();
    let g = ClauwensGroup::new(spec.alexander().unwrap()).unwrap();
    println!("Coker(mu) = {}", g.coker_invariants());

    let (a, b) = (g.e(1), g.e(4));
    let ab = g.mul(&a, &b);
    println!("e_1 e_4 = {ab}, inverse {}", g.inv(&ab));
    println!("relations hold: {}", g.check_relations().is_none());

    let k = action_kernel(&g);
    println!(
        "kernel of the action: {}Z x {} ({})",
        k.t, k.coker, k.matches_structure
    );
    println!("H2 from the stabilizer: {}", eisermann_h2(&g));
}
