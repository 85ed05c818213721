//! Inner groups of core quandles as a quotient of a wreath-type group.

use qadjoint::permgrp::wreath::core_quotient_report;
use qadjoint::qbuild::{core, GroupName};

fn main() {
    for name in ["Z/3", "Z/4", "S3", "Q8", "D4"] {
        let g = name.parse::<GroupName>().unwrap().group();
        let r = core_quotient_report(&g);
        let inn = core(&g).inner_group().order();
        println!(
            "{name:<4} |G1| = {:>3}  |G2| = {}  |G1/G2| = {:>3}  |Inn| = {inn}",
            r.g1_order, r.g2_order, r.quotient_order
        );
    }
}
