//! Order, base and point stabilizers of a permutation group.

use qadjoint::permgrp::{Perm, PermGroup};

fn main() {
    // the Mathieu group M11 on 11 points
    let a = Perm::from_cycles(11, &[&[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]]);
    let b = Perm::from_cycles(11, &[&[2, 6, 10, 7], &[3, 9, 4, 5]]);
    let g = PermGroup::new(11, vec![a, b]);
    println!("|G| = {}", g.order());
    println!(
        "base {:?}, basic orbits {:?}",
        g.chain().base(),
        g.chain().basic_orbit_sizes()
    );
    println!(
        "|G_0| = {}, perfect: {}",
        g.stabilizer(0).order(),
        g.is_perfect()
    );
}
