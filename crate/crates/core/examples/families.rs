//! Build one quandle from every constructor family.

use qadjoint::qbuild::FamilySpec;

fn main() {
    for s in [
        "trivial 3",
        "dihedral 5",
        "alexander 2,2 T=0,1;1,1",
        "symplectic g=1 q=3",
        "spherical n=2 q=5",
        "core S3",
        "coxeter S4",
    ] {
        let spec: FamilySpec = s.parse().unwrap();
        let q = spec.build().unwrap();
        let p = q.profile();
        println!(
            "{s:<26} |X| = {:>3}  type {:>2}  connected {:<5}  |Inn| = {}",
            q.order(),
            p.type_t,
            p.connected,
            p.inn_order
        );
    }
}
