//! Second homology of small groups from the normalized bar complex.

use qadjoint::adjoint::group_h2_bar;
use qadjoint::caps::Caps;
use qadjoint::qbuild::GroupName;

fn main() {
    for name in ["Z/6", "Z/2xZ/2", "S3", "Q8", "D4", "S4", "Z/2xZ/2xZ/2"] {
        let g = name.parse::<GroupName>().unwrap().group();
        let h2 = group_h2_bar(&g, &Caps::default()).unwrap();
        println!("H2({name}) = {h2}");
    }
}
