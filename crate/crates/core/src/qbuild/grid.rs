use super::FamilySpec;

/// Connected Alexander quandles with at most 16 elements, covering types 2, 3, 4 and 6.
const CONNECTED_ALEXANDER: &[&str] = &[
    "alexander 3 T=2",
    "alexander 5 T=2",
    "alexander 5 T=3",
    "alexander 5 T=4",
    "alexander 7 T=2",
    "alexander 7 T=3",
    "alexander 7 T=6",
    "alexander 2,2 T=0,1;1,1",
    "alexander 3,3 T=2,0;0,2",
    "alexander 3,3 T=0,2;1,0",
    "alexander 9 T=2",
    "alexander 11 T=2",
    "alexander 13 T=2",
    "alexander 2,2,2,2 T=0,0,0,1;1,0,0,1;0,1,0,0;0,0,1,0",
    "alexander 2,2,2 T=0,0,1;1,0,1;0,1,0",
    "alexander 15 T=2",
];

const OTHERS: &[&str] = &[
    "trivial 1",
    "trivial 2",
    "trivial 3",
    "trivial 5",
    "dihedral 2",
    "dihedral 4",
    "dihedral 6",
    "dihedral 8",
    "dihedral 9",
    "dihedral 12",
    "dihedral 25",
    "alexander 4 T=3",
    "alexander 8 T=3",
    "alexander 8 T=5",
    "alexander 2,4 T=1,0;0,3",
    "alexander 4,4 T=0,3;1,0",
    "alexander 27 T=2",
    "alexander 64 T=3",
    "symplectic g=1 q=2",
    "symplectic g=1 q=3",
    "symplectic g=1 q=4",
    "symplectic g=1 q=5",
    "symplectic g=1 q=7",
    "symplectic g=2 q=2",
    "spherical n=1 q=5",
    "spherical n=2 q=3",
    "spherical n=2 q=5",
    "spherical n=2 q=7",
    "spherical n=3 q=3",
    "core Z/3",
    "core Z/4",
    "core Z/5",
    "core Z/2xZ/2",
    "core S3",
    "core Q8",
    "core D4",
    "core S4",
    "coxeter S3",
    "coxeter S4",
    "coxeter S5",
    "coxeter D4",
    "coxeter D5",
    "coxeter D6",
];

pub fn connected_alexander_grid() -> Vec<FamilySpec> {
    CONNECTED_ALEXANDER
        .iter()
        .map(|s| s.parse().expect("shipped spec parses"))
        .collect()
}

/// The shipped parameter grid, connected Alexander specs first.
pub fn default_grid() -> Vec<FamilySpec> {
    let mut out = connected_alexander_grid();
    out.extend(
        OTHERS
            .iter()
            .map(|s| s.parse::<FamilySpec>().expect("shipped spec parses")),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connected_grid_is_connected() {
        for spec in connected_alexander_grid() {
            let a = spec.alexander().unwrap();
            assert!(a.is_connected(), "{spec}");
            assert!(a.order() <= 16);
            assert!(spec.build().unwrap().is_connected(), "{spec}");
        }
    }

    #[test]
    fn grid_is_large_enough() {
        let grid = default_grid();
        assert!(grid.len() >= 40);
        let mut ids: Vec<String> = grid.iter().map(|s| s.to_string()).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), grid.len(), "duplicate spec in grid");
    }
}
