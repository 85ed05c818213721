//! Size limits for chain complexes and enumerated groups.

use std::env;

pub const DEFAULT_CELL_CAP: u64 = 10_000_000;
pub const DEFAULT_GROUP_CAP: usize = 30;

/// `cells` bounds the number of basis tuples in the top degree of a complex;
/// `group` bounds the order of groups whose bar complex is assembled.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub cells: u64,
    pub group: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            cells: DEFAULT_CELL_CAP,
            group: DEFAULT_GROUP_CAP,
        }
    }
}

impl Caps {
    /// Defaults overridden by `QF_CAP`, which is either a bare cell count or a
    /// comma-separated list such as `cells=100000,group=24`.
    pub fn from_env() -> Result<Self, String> {
        match env::var("QF_CAP") {
            Ok(v) => Caps::default().apply(&v),
            Err(env::VarError::NotPresent) => Ok(Caps::default()),
            Err(e) => Err(format!("QF_CAP: {e}")),
        }
    }

    pub fn apply(mut self, text: &str) -> Result<Self, String> {
        let bad = || format!("QF_CAP: cannot parse {text:?}");
        let text = text.trim();
        if let Ok(n) = text.parse::<u64>() {
            self.cells = n;
            return Ok(self);
        }
        for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, value) = part.split_once('=').ok_or_else(bad)?;
            match key.trim() {
                "cells" => self.cells = value.trim().parse().map_err(|_| bad())?,
                "group" => self.group = value.trim().parse().map_err(|_| bad())?,
                _ => return Err(bad()),
            }
        }
        Ok(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cap_strings() {
        assert_eq!(Caps::default().apply("500").unwrap().cells, 500);
        let c = Caps::default().apply("group=12, cells=7").unwrap();
        assert_eq!((c.cells, c.group), (7, 12));
        assert!(Caps::default().apply("size=3").is_err());
        assert!(Caps::default().apply("cells=x").is_err());
    }
}
