//! One-line family specs such as `alexander 2,2 T=0,1;1,1`, `symplectic g=1 q=3`,
//! `spherical n=2 q=5`, `core Q8`, `coxeter S4`, `dihedral 5`, `trivial 2`.

use std::fmt;
use std::str::FromStr;

use super::alexander::AlexanderModuleSpec;
use super::classical::{spherical, symplectic};
use super::families::{conjugation_reflections, core, dihedral, trivial};
use super::field::FiniteField;
use super::BuildError;
use crate::permgrp::{dihedral_perm_group, symmetric_perm_group, FiniteGroup, Perm, PermGroup};
use crate::qcore::FiniteQuandle;

/// Small named groups: `Z/n`, `S<n>`, `D<m>` (order `2m`), `Q8`, and products `AxB`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupName {
    Cyclic(usize),
    Symmetric(usize),
    Dihedral(usize),
    Quaternion,
    Product(Box<GroupName>, Box<GroupName>),
}

impl GroupName {
    pub fn group(&self) -> FiniteGroup {
        match self {
            GroupName::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupName::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupName::Dihedral(m) => FiniteGroup::dihedral(*m),
            GroupName::Quaternion => FiniteGroup::quaternion(),
            GroupName::Product(a, b) => FiniteGroup::direct_product(&a.group(), &b.group()),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            GroupName::Cyclic(n) => *n,
            GroupName::Symmetric(n) => (1..=*n).product(),
            GroupName::Dihedral(m) => 2 * m,
            GroupName::Quaternion => 8,
            GroupName::Product(a, b) => a.order() * b.order(),
        }
    }
}

impl fmt::Display for GroupName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupName::Cyclic(n) => write!(f, "Z/{n}"),
            GroupName::Symmetric(n) => write!(f, "S{n}"),
            GroupName::Dihedral(m) => write!(f, "D{m}"),
            GroupName::Quaternion => write!(f, "Q8"),
            GroupName::Product(a, b) => write!(f, "{a}x{b}"),
        }
    }
}

impl FromStr for GroupName {
    type Err = BuildError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BuildError::Spec(format!("unknown group {s:?}"));
        if let Some((a, b)) = s.split_once('x') {
            return Ok(GroupName::Product(
                Box::new(a.parse()?),
                Box::new(b.parse()?),
            ));
        }
        let num = |t: &str| t.parse::<usize>().ok().filter(|&n| n >= 1).ok_or_else(bad);
        if s == "Q8" {
            Ok(GroupName::Quaternion)
        } else if let Some(n) = s.strip_prefix("Z/") {
            Ok(GroupName::Cyclic(num(n)?))
        } else if let Some(n) = s.strip_prefix('S') {
            Ok(GroupName::Symmetric(num(n)?))
        } else if let Some(m) = s.strip_prefix('D') {
            let m = num(m)?;
            if m < 2 {
                return Err(bad());
            }
            Ok(GroupName::Dihedral(m))
        } else {
            Err(bad())
        }
    }
}

/// Finite Coxeter groups as permutation groups with their Coxeter generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CoxeterName {
    /// `S_n`, type `A_{n-1}`, generated by adjacent transpositions.
    Symmetric(usize),
    /// Dihedral group of order `2m`, type `I_2(m)`.
    Dihedral(usize),
}

impl CoxeterName {
    pub fn perm_group(&self) -> PermGroup {
        match self {
            CoxeterName::Symmetric(n) => symmetric_perm_group(*n),
            CoxeterName::Dihedral(m) => dihedral_perm_group(*m),
        }
    }

    pub fn coxeter_generators(&self) -> Vec<Perm> {
        match self {
            CoxeterName::Symmetric(n) => (0..n.saturating_sub(1) as u32)
                .map(|i| Perm::from_cycles(*n, &[&[i, i + 1]]))
                .collect(),
            CoxeterName::Dihedral(_) => self.perm_group().generators().to_vec(),
        }
    }

    pub fn group(&self) -> FiniteGroup {
        FiniteGroup::from_perm_group(&self.perm_group(), self.to_string())
    }
}

impl fmt::Display for CoxeterName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterName::Symmetric(n) => write!(f, "S{n}"),
            CoxeterName::Dihedral(m) => write!(f, "D{m}"),
        }
    }
}

impl FromStr for CoxeterName {
    type Err = BuildError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<GroupName>()? {
            GroupName::Symmetric(n) if n >= 2 => Ok(CoxeterName::Symmetric(n)),
            GroupName::Dihedral(m) => Ok(CoxeterName::Dihedral(m)),
            _ => Err(BuildError::Spec(format!(
                "not a supported Coxeter group: {s:?}"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Alexander(AlexanderModuleSpec),
    Symplectic { g: usize, q: u32 },
    Spherical { n: usize, q: u32 },
    Core(GroupName),
    Coxeter(CoxeterName),
    Dihedral(usize),
    Trivial(usize),
}

impl FamilySpec {
    pub fn build(&self) -> Result<FiniteQuandle, BuildError> {
        match self {
            FamilySpec::Alexander(s) => Ok(s.quandle()),
            FamilySpec::Symplectic { g, q } => {
                Ok(symplectic(*g, &FiniteField::of_order(*q)?)?.quandle)
            }
            FamilySpec::Spherical { n, q } => {
                Ok(spherical(*n, &FiniteField::of_order(*q)?)?.quandle)
            }
            FamilySpec::Core(g) => Ok(core(&g.group())),
            FamilySpec::Coxeter(w) => {
                Ok(conjugation_reflections(&w.perm_group(), &w.coxeter_generators())?.quandle)
            }
            FamilySpec::Dihedral(n) => dihedral(*n),
            FamilySpec::Trivial(n) => trivial(*n),
        }
    }

    pub fn alexander(&self) -> Option<&AlexanderModuleSpec> {
        match self {
            FamilySpec::Alexander(s) => Some(s),
            _ => None,
        }
    }

    /// Expected element count without building, where it is cheap to know.
    pub fn expected_order(&self) -> Option<usize> {
        match self {
            FamilySpec::Alexander(s) => Some(s.order()),
            FamilySpec::Symplectic { g, q } => Some((*q as usize).pow(2 * *g as u32) - 1),
            FamilySpec::Core(g) => Some(g.order()),
            FamilySpec::Dihedral(n) | FamilySpec::Trivial(n) => Some(*n),
            _ => None,
        }
    }
}

fn key_value<'a>(tok: &'a str, key: &str) -> Result<&'a str, BuildError> {
    tok.strip_prefix(key)
        .and_then(|r| r.strip_prefix('='))
        .ok_or_else(|| BuildError::Spec(format!("expected {key}=..., found {tok:?}")))
}

fn parse_num<T: FromStr>(s: &str) -> Result<T, BuildError> {
    s.parse()
        .map_err(|_| BuildError::Spec(format!("not a number: {s:?}")))
}

impl FromStr for FamilySpec {
    type Err = BuildError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let toks: Vec<&str> = s.split_whitespace().collect();
        let arity = |n: usize| {
            if toks.len() == n {
                Ok(())
            } else {
                Err(BuildError::Spec(format!(
                    "{:?} expects {} arguments",
                    toks[0],
                    n - 1
                )))
            }
        };
        match toks.first().copied() {
            Some("alexander") => {
                arity(3)?;
                let orders = toks[1]
                    .split(',')
                    .map(parse_num)
                    .collect::<Result<Vec<u64>, _>>()?;
                let t = key_value(toks[2], "T")?
                    .split(';')
                    .map(|row| {
                        row.split(',')
                            .map(parse_num)
                            .collect::<Result<Vec<i64>, _>>()
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok(FamilySpec::Alexander(AlexanderModuleSpec::new(orders, t)?))
            }
            Some("symplectic") => {
                arity(3)?;
                Ok(FamilySpec::Symplectic {
                    g: parse_num(key_value(toks[1], "g")?)?,
                    q: parse_num(key_value(toks[2], "q")?)?,
                })
            }
            Some("spherical") => {
                arity(3)?;
                Ok(FamilySpec::Spherical {
                    n: parse_num(key_value(toks[1], "n")?)?,
                    q: parse_num(key_value(toks[2], "q")?)?,
                })
            }
            Some("core") => {
                arity(2)?;
                Ok(FamilySpec::Core(toks[1].parse()?))
            }
            Some("coxeter") => {
                arity(2)?;
                Ok(FamilySpec::Coxeter(toks[1].parse()?))
            }
            Some("dihedral") => {
                arity(2)?;
                Ok(FamilySpec::Dihedral(parse_num(toks[1])?))
            }
            Some("trivial") => {
                arity(2)?;
                Ok(FamilySpec::Trivial(parse_num(toks[1])?))
            }
            Some(other) => Err(BuildError::Spec(format!("unknown family {other:?}"))),
            None => Err(BuildError::Spec("empty spec".into())),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Alexander(s) => write!(f, "{s}"),
            FamilySpec::Symplectic { g, q } => write!(f, "symplectic g={g} q={q}"),
            FamilySpec::Spherical { n, q } => write!(f, "spherical n={n} q={q}"),
            FamilySpec::Core(g) => write!(f, "core {g}"),
            FamilySpec::Coxeter(w) => write!(f, "coxeter {w}"),
            FamilySpec::Dihedral(n) => write!(f, "dihedral {n}"),
            FamilySpec::Trivial(n) => write!(f, "trivial {n}"),
        }
    }
}
