//! Parse a multiplication table, check the axioms and print its profile.
//!
//!     cargo run --example validate_table -- data/r3.qt

use qadjoint::qcore::parse_table;

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "data/r3.qt".into());
    let text = std::fs::read_to_string(&path).expect("readable table");
    match parse_table(&text) {
        Ok(q) => {
            let p = q.profile();
            println!("{path}: quandle of order {}", q.order());
            println!(
                "type {}, {} orbit(s), |Inn| = {}",
                p.type_t,
                p.orbits.len(),
                p.inn_order
            );
        }
        Err(e) => println!("{path}: {e}"),
    }
}
