//! Rack and quandle homology in low degrees.

use qadjoint::caps::Caps;
use qadjoint::qbuild::FamilySpec;
use qadjoint::qhomology::{homology, ComplexMode};

fn main() {
    let caps = Caps::default();
    for s in [
        "dihedral 3",
        "alexander 3,3 T=2,0;0,2",
        "alexander 2,2 T=0,1;1,1",
        "trivial 2",
    ] {
        let q = s.parse::<FamilySpec>().unwrap().build().unwrap();
        for mode in [ComplexMode::Rack, ComplexMode::Quandle] {
            let groups: Vec<String> = (1..=2)
                .map(|k| homology(&q, mode, k, &caps).unwrap().to_string())
                .collect();
            println!("{s:<26} {mode:<7} H1 = {:<6} H2 = {}", groups[0], groups[1]);
        }
    }
}
