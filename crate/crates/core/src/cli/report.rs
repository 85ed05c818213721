//! Plain-text report documents.
//!
//! ```text
//! qadjoint-report 1
//! tool: qadjoint 0.1.0
//! input: dihedral 3
//!
//! [axioms]
//! anchor: quandle axioms
//! status: pass
//! order: 3
//!
//! summary: pass=1 fail=0 skipped=0 reported=0
//! ```
//!
//! Each check is a `[id]` block of `key: value` lines, `anchor` and `status` first.
//! A `time_ms` line is added only when timings are requested.

use std::collections::BTreeSet;
use std::fmt;
use std::time::Instant;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    /// Skipped because a size cap was exceeded.
    Skipped,
    /// Data only, no assertion.
    Reported,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped(size-cap)",
            Status::Reported => "reported",
        })
    }
}

impl Status {
    pub fn from_bool(ok: bool) -> Status {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub data: Vec<(String, String)>,
    pub elapsed_ms: Option<u128>,
}

impl Check {
    pub fn new(id: impl Into<String>, anchor: impl Into<String>, status: Status) -> Check {
        Check {
            id: id.into(),
            anchor: anchor.into(),
            status,
            data: Vec::new(),
            elapsed_ms: None,
        }
    }

    pub fn with(mut self, key: &str, value: impl fmt::Display) -> Check {
        self.data.push((key.to_string(), value.to_string()));
        self
    }

    pub fn prefixed(mut self, prefix: &str) -> Check {
        self.id = format!("{prefix}.{}", self.id);
        self
    }
}

/// Runs `f` and stamps the elapsed time on every check it returns.
pub fn timed(f: impl FnOnce() -> Vec<Check>) -> Vec<Check> {
    let start = Instant::now();
    let mut checks = f();
    let ms = start.elapsed().as_millis();
    for c in &mut checks {
        c.elapsed_ms = Some(ms);
    }
    checks
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportDocument {
    pub tool_version: String,
    pub input: String,
    pub checks: Vec<Check>,
    pub show_timings: bool,
}

impl ReportDocument {
    pub fn new(input: impl Into<String>) -> Self {
        ReportDocument {
            tool_version: format!("qadjoint {}", env!("CARGO_PKG_VERSION")),
            input: input.into(),
            checks: Vec::new(),
            show_timings: false,
        }
    }

    /// Panics on a repeated check id.
    pub fn extend(&mut self, checks: impl IntoIterator<Item = Check>) {
        self.checks.extend(checks);
        let mut seen = BTreeSet::new();
        for c in &self.checks {
            assert!(seen.insert(c.id.as_str()), "duplicate check id {}", c.id);
        }
    }

    pub fn count(&self, status: &Status) -> usize {
        self.checks.iter().filter(|c| &c.status == status).count()
    }

    pub fn any_failed(&self) -> bool {
        self.count(&Status::Fail) > 0
    }

    /// 0 when nothing failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(self.any_failed())
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str("qadjoint-report 1\n");
        out.push_str(&format!("tool: {}\n", self.tool_version));
        out.push_str(&format!("input: {}\n", one_line(&self.input)));
        for c in &self.checks {
            out.push_str(&format!("\n[{}]\n", c.id));
            out.push_str(&format!("anchor: {}\n", one_line(&c.anchor)));
            out.push_str(&format!("status: {}\n", c.status));
            for (k, v) in &c.data {
                out.push_str(&format!("{k}: {}\n", one_line(v)));
            }
            if self.show_timings {
                if let Some(ms) = c.elapsed_ms {
                    out.push_str(&format!("time_ms: {ms}\n"));
                }
            }
        }
        out.push_str(&format!(
            "\nsummary: pass={} fail={} skipped={} reported={}\n",
            self.count(&Status::Pass),
            self.count(&Status::Fail),
            self.count(&Status::Skipped),
            self.count(&Status::Reported),
        ));
        out
    }
}

fn one_line(s: &str) -> String {
    s.replace('\n', " ")
}
