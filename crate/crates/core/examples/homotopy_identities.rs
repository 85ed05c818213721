//! Check the chain homotopy identities in degrees 2 and 3 for a few quandles.

use qadjoint::adjoint::{verify_homotopy_2, verify_homotopy_3, ClauwensGroup};
use qadjoint::qbuild::FamilySpec;

fn main() {
    for s in ["alexander 3 T=2", "alexander 7 T=2", "alexander 5 T=2"] {
        let spec: FamilySpec = s.parse().unwrap();
        let g = ClauwensGroup::new(spec.alexander().unwrap()).unwrap();
        let two = verify_homotopy_2(&g).unwrap();
        let three = verify_homotopy_3(&g).unwrap();
        println!(
            "{s:<18} t = {}  pairs {:>3}  triples {:>4}  c3(x,x,z) = 0: {}",
            two.t, two.tuples_checked, three.tuples_checked, three.degenerate_c3_vanishes
        );
    }
}
