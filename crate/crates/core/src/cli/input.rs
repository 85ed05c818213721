//! Command inputs: a table file, a `.spec` file holding a family spec, or a
//! family spec string.

use std::fs;
use std::path::{Path, PathBuf};

use crate::qbuild::{default_grid, FamilySpec};
use crate::qcore::{parse_table, FiniteQuandle, QuandleError};

#[derive(Clone, Debug)]
pub enum Source {
    Table(PathBuf),
    Family(FamilySpec),
}

#[derive(Clone, Debug)]
pub struct Input {
    pub name: String,
    pub source: Source,
    pub quandle: FiniteQuandle,
}

impl Input {
    pub fn family(&self) -> Option<&FamilySpec> {
        match &self.source {
            Source::Family(f) => Some(f),
            Source::Table(_) => None,
        }
    }

    pub fn from_spec(spec: FamilySpec) -> Result<Input, InputError> {
        let quandle = spec
            .build()
            .map_err(|e| InputError::Malformed(format!("{spec}: {e}")))?;
        Ok(Input {
            name: spec.to_string(),
            source: Source::Family(spec),
            quandle,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum InputError {
    #[error("{0}")]
    Malformed(String),
    /// Well-formed table that violates the quandle axioms.
    #[error("{name}: {error}")]
    NotAQuandle { name: String, error: QuandleError },
}

fn table_input(path: &Path, text: &str) -> Result<Input, InputError> {
    let name = path.display().to_string();
    match parse_table(text) {
        Ok(quandle) => Ok(Input {
            name,
            source: Source::Table(path.to_path_buf()),
            quandle,
        }),
        Err(e @ (QuandleError::AxiomViolation { .. } | QuandleError::EntryOutOfRange { .. })) => {
            Err(InputError::NotAQuandle { name, error: e })
        }
        Err(e) => Err(InputError::Malformed(format!("{name}: {e}"))),
    }
}

fn spec_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

fn parse_spec(s: &str) -> Result<FamilySpec, InputError> {
    s.parse::<FamilySpec>()
        .map_err(|e| InputError::Malformed(format!("{s:?}: {e}")))
}

/// An existing path is read as a file (`.spec` files hold one family spec);
/// anything else is parsed as a family spec.
pub fn resolve(arg: &str) -> Result<Input, InputError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text =
            fs::read_to_string(path).map_err(|e| InputError::Malformed(format!("{arg}: {e}")))?;
        if path.extension().is_some_and(|e| e == "spec") {
            let mut lines = spec_lines(&text);
            let first = lines
                .next()
                .ok_or_else(|| InputError::Malformed(format!("{arg}: no spec")))?;
            return Input::from_spec(parse_spec(first)?);
        }
        return table_input(path, &text);
    }
    Input::from_spec(parse_spec(arg)?)
}

/// Census entries: every spec line of every `.spec` file and every other file as a
/// table, in file-name order; the shipped grid when `dir` is `None`.
pub fn census_inputs(dir: Option<&Path>) -> Result<Vec<Result<Input, InputError>>, InputError> {
    let Some(dir) = dir else {
        return Ok(default_grid().into_iter().map(Input::from_spec).collect());
    };
    let mut paths: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| InputError::Malformed(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    paths.sort();
    let mut out = Vec::new();
    for p in paths {
        let text = fs::read_to_string(&p)
            .map_err(|e| InputError::Malformed(format!("{}: {e}", p.display())))?;
        if p.extension().is_some_and(|e| e == "spec") {
            for line in spec_lines(&text) {
                out.push(parse_spec(line).and_then(Input::from_spec));
            }
        } else {
            out.push(table_input(&p, &text));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn resolves_specs_and_files() {
        let i = resolve("alexander 3 T=-1").unwrap();
        assert_eq!(i.quandle.order(), 3);
        assert!(matches!(
            resolve("nonsense 4"),
            Err(InputError::Malformed(_))
        ));

        let dir = tempfile::tempdir().unwrap();
        let good = dir.path().join("r3.qt");
        fs::write(&good, "3\n0 2 1\n2 1 0\n1 0 2\n").unwrap();
        assert_eq!(resolve(good.to_str().unwrap()).unwrap().quandle.order(), 3);
        let bad = dir.path().join("bad.qt");
        fs::write(&bad, "3\n0 2 1\n2 1 0\n1 0 1\n").unwrap();
        assert!(matches!(
            resolve(bad.to_str().unwrap()),
            Err(InputError::NotAQuandle { .. })
        ));
        let spec = dir.path().join("x.spec");
        fs::write(&spec, "# comment\ndihedral 5\ntrivial 2\n").unwrap();
        assert_eq!(resolve(spec.to_str().unwrap()).unwrap().quandle.order(), 5);
        let all = census_inputs(Some(dir.path())).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all[0].is_err());
    }
}
