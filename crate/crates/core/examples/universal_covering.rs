//! Universal covering of a connected Alexander quandle, written out as files.
//!
//!     cargo run --example universal_covering -- /tmp/cover

use qadjoint::caps::Caps;
use qadjoint::covering::{covering_properties, universal_covering_alexander};
use qadjoint::qbuild::FamilySpec;

fn main() {
    let spec: FamilySpec = "alexander 3,3 T=2,0;0,2".parse().unwrap();
    let caps = Caps::default();
    let c = universal_covering_alexander(spec.alexander().unwrap(), 0, &caps).unwrap();
    println!(
        "{} -> {} elements, fibers {:?}",
        c.total.order(),
        c.base.order(),
        c.fiber_sizes()
    );
    println!("{:?}", covering_properties(&c, &caps).unwrap());
    if let Some(dir) = std::env::args().nth(1) {
        c.export(std::path::Path::new(&dir)).unwrap();
        println!("wrote base.qt, total.qt and projection.map to {dir}");
    }
}
