//! Explicit groups and semigroups as verified Cayley tables.

pub mod field;
pub mod matrix;
pub mod perm;
pub mod presentation;
pub mod semidirect;
pub mod semigroup;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::obstruction::Obstruction;
use crate::table::{CayleyTable, MagmaClass, TableError};

pub use semidirect::{inversion_extension, semidirect_product, ActionMap};
pub use semigroup::{left_zero, fixture, realize_cycle_centrefree, realize_semigroup, s6_example};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("bad spec: {0}")]
    BadSpec(String),
    #[error("no suitable element found in the semilinear group")]
    JNotFound,
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("cycle length {0} is not divisible by four")]
    NotDivisibleByFour(usize),
    #[error("obstructed: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Obstructed(Vec<Obstruction>),
    #[error("unknown fixture {0:?}")]
    UnknownFixture(String),
    #[error("postcondition failed: {0}")]
    PostconditionFailed(String),
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error(transparent)]
    Table(#[from] TableError),
}

/// A named group.
///
/// String forms: `Z6`, `Z2xZ4`, `D8`, `SD16`, `Q8`, `S4`, `A5`, `SL(2,5)`,
/// `GL(2,3)`, `PSL(2,7)`, `J`, `inv(<spec>)` for the inversion extension
/// of an abelian group, `Z7:Z3` for `Z_7 ⋊ Z_3` with `x ↦ 2x`,
/// `Z2^4:SL(2,4)` for the natural module extension, and `@<path>` for a
/// table file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    AbelianProduct(Vec<usize>),
    Dihedral(usize),
    Semidihedral(usize),
    GeneralizedQuaternion(usize),
    Symmetric(usize),
    Alternating(usize),
    SL2(usize),
    GL2(usize),
    PSL2(usize),
    GroupJ,
    InversionExtension(Box<GroupSpec>),
    Frobenius21,
    NaturalModuleSL24,
    FromFile(PathBuf),
}

pub fn build_group(spec: &GroupSpec) -> Result<CayleyTable, ConstructError> {
    let t = match spec {
        GroupSpec::Cyclic(n) => presentation::cyclic(*n)?,
        GroupSpec::AbelianProduct(orders) => presentation::abelian(orders)?,
        GroupSpec::Dihedral(n) => presentation::dihedral(*n)?,
        GroupSpec::Semidihedral(n) => presentation::semidihedral(*n)?,
        GroupSpec::GeneralizedQuaternion(n) => presentation::quaternion(*n)?,
        GroupSpec::Symmetric(n) => perm::symmetric(*n)?,
        GroupSpec::Alternating(n) => perm::alternating(*n)?,
        GroupSpec::SL2(q) => matrix::sl2(*q)?,
        GroupSpec::GL2(q) => matrix::gl2(*q)?,
        GroupSpec::PSL2(q) => matrix::psl2(*q)?,
        GroupSpec::GroupJ => matrix::group_j()?,
        GroupSpec::InversionExtension(inner) => inversion_extension(&build_group(inner)?)?,
        GroupSpec::Frobenius21 => semidirect::power_action(7, 3, 2)?,
        GroupSpec::NaturalModuleSL24 => semidirect::natural_module_sl24(1)?,
        GroupSpec::FromFile(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| ConstructError::Io {
                path: path.display().to_string(),
                msg: e.to_string(),
            })?;
            CayleyTable::parse(&text)?
        }
    };
    if t.classify() != MagmaClass::Group {
        return Err(ConstructError::Table(TableError::NotAGroup));
    }
    Ok(t)
}

/// The groups used throughout the verification suite, by spec string.
pub const CATALOG: &[&str] = &[
    "S3", "Q8", "D8", "SL(2,3)", "SL(2,5)", "GL(2,3)", "J", "A5", "PSL(2,7)", "D16", "SD16", "Q16", "D32",
    "SD32", "Q32", "S4", "inv(Z3)", "inv(Z5)", "inv(Z7)", "inv(Z9)", "inv(Z3xZ3)", "inv(Z15)", "Z7:Z3",
    "Z2^4:SL(2,4)", "A4", "S5", "D12", "Q12", "Z2xZ4",
];

/// Builds a table from a list of distinct elements closed under `mul`.
pub(crate) fn table_from_elements<T: Eq + Hash>(
    elems: &[T],
    mul: impl Fn(&T, &T) -> T,
    label: impl Fn(&T) -> String,
) -> Result<CayleyTable, ConstructError> {
    let index: HashMap<&T, usize> = elems.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let n = elems.len();
    let mut entries = Vec::with_capacity(n * n);
    for x in elems {
        for y in elems {
            let i = index
                .get(&mul(x, y))
                .ok_or_else(|| ConstructError::PostconditionFailed("element list is not closed".into()))?;
            entries.push(*i as u32);
        }
    }
    Ok(CayleyTable::new(n, entries)?.with_labels(elems.iter().map(label).collect())?)
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::AbelianProduct(orders) => {
                let parts: Vec<String> = orders.iter().map(|n| format!("Z{n}")).collect();
                f.write_str(&parts.join("x"))
            }
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::Semidihedral(n) => write!(f, "SD{n}"),
            GroupSpec::GeneralizedQuaternion(n) => write!(f, "Q{n}"),
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::SL2(q) => write!(f, "SL(2,{q})"),
            GroupSpec::GL2(q) => write!(f, "GL(2,{q})"),
            GroupSpec::PSL2(q) => write!(f, "PSL(2,{q})"),
            GroupSpec::GroupJ => f.write_str("J"),
            GroupSpec::InversionExtension(inner) => write!(f, "inv({inner})"),
            GroupSpec::Frobenius21 => f.write_str("Z7:Z3"),
            GroupSpec::NaturalModuleSL24 => f.write_str("Z2^4:SL(2,4)"),
            GroupSpec::FromFile(p) => write!(f, "@{}", p.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = ConstructError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ConstructError::BadSpec(format!("unrecognised group {s:?}"));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        if let Some(path) = s.strip_prefix('@') {
            return Ok(GroupSpec::FromFile(path.into()));
        }
        if let Some(inner) = s.strip_prefix("inv(").and_then(|r| r.strip_suffix(')')) {
            return Ok(GroupSpec::InversionExtension(Box::new(inner.parse()?)));
        }
        match s.as_str() {
            "J" => return Ok(GroupSpec::GroupJ),
            "Z7:Z3" => return Ok(GroupSpec::Frobenius21),
            "Z2^4:SL(2,4)" => return Ok(GroupSpec::NaturalModuleSL24),
            _ => {}
        }
        for (prefix, make) in [
            ("SL(2,", GroupSpec::SL2 as fn(usize) -> GroupSpec),
            ("GL(2,", GroupSpec::GL2),
            ("PSL(2,", GroupSpec::PSL2),
        ] {
            if let Some(q) = s.strip_prefix(prefix).and_then(|r| r.strip_suffix(')')) {
                return Ok(make(num(q)?));
            }
        }
        if s.contains('x') {
            let orders = s
                .split('x')
                .map(|part| part.strip_prefix('Z').ok_or_else(bad).and_then(num))
                .collect::<Result<Vec<_>, _>>()?;
            return Ok(GroupSpec::AbelianProduct(orders));
        }
        for (prefix, make) in [
            ("SD", GroupSpec::Semidihedral as fn(usize) -> GroupSpec),
            ("Z", GroupSpec::Cyclic),
            ("D", GroupSpec::Dihedral),
            ("Q", GroupSpec::GeneralizedQuaternion),
            ("S", GroupSpec::Symmetric),
            ("A", GroupSpec::Alternating),
        ] {
            if let Some(n) = s.strip_prefix(prefix) {
                return Ok(make(num(n)?));
            }
        }
        Err(bad())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_strings_round_trip() {
        for s in CATALOG {
            let spec: GroupSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), *s);
        }
        assert!("X5".parse::<GroupSpec>().is_err());
        assert!("SL(2,x)".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn small_catalog_entries_are_groups_of_the_right_order() {
        for (s, order) in [("S3", 6), ("Q8", 8), ("D8", 8), ("SL(2,3)", 24), ("inv(Z5)", 10), ("Z7:Z3", 21)] {
            let t = build_group(&s.parse().unwrap()).unwrap();
            assert_eq!(t.order(), order, "{s}");
        }
    }

    #[test]
    fn dihedral_8_has_five_involutions() {
        let t = build_group(&GroupSpec::Dihedral(8)).unwrap();
        let e = t.identity().unwrap();
        assert_eq!(t.elements().filter(|&x| x != e && t.mul(x, x) == e).count(), 5);
    }

    #[test]
    fn non_group_file_is_rejected() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("lz.tbl");
        std::fs::write(&path, CayleyTable::from_fn(2, |a, _| a).unwrap().to_text()).unwrap();
        assert_eq!(
            build_group(&GroupSpec::FromFile(path)).unwrap_err(),
            ConstructError::Table(TableError::NotAGroup)
        );
    }
}
