//! Finite magmas stored as Cayley tables.
//!
//! Tables are row-major with the row indexing the left factor, so
//! `mul(a, b)` is the product `ab`. Elements are 0-based indices.
//!
//! The text format is line oriented:
//!
//! ```text
//! # optional comment lines
//! magma 3
//! 0 0 0
//! 1 1 1
//! 2 2 2
//! labels a b c
//! ```

use std::fmt;
use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

/// Index of an element in its owning table, always `< order`.
pub type ElementId = usize;

/// Strongest algebraic class whose axioms a table satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum MagmaClass {
    Magma,
    Semigroup,
    Monoid,
    Group,
}

impl fmt::Display for MagmaClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            MagmaClass::Magma => "magma",
            MagmaClass::Semigroup => "semigroup",
            MagmaClass::Monoid => "monoid",
            MagmaClass::Group => "group",
        };
        f.write_str(name)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("a table needs at least one element")]
    Empty,
    #[error("table of order {order} needs {expected} entries, got {got}")]
    Shape {
        order: usize,
        expected: usize,
        got: usize,
    },
    #[error("entry {value} at ({row}, {col}) is out of range for order {order}")]
    EntryOutOfRange {
        row: usize,
        col: usize,
        value: usize,
        order: usize,
    },
    #[error("element {element} is out of range for order {order}")]
    ElementOutOfRange { element: usize, order: usize },
    #[error("bad labels: {0}")]
    BadLabels(String),
    #[error("not a semigroup: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotASemigroup { a: usize, b: usize, c: usize },
    #[error("not a group")]
    NotAGroup,
    #[error("not abelian")]
    NotAbelian,
    #[error("not a subgroup")]
    NotASubgroup,
    #[error("not a normal subgroup")]
    NotNormal,
}

/// A finite magma given by its multiplication table.
#[derive(Clone)]
pub struct CayleyTable {
    order: usize,
    entries: Vec<u32>,
    labels: Option<Vec<String>>,
    pub(crate) class: OnceLock<MagmaClass>,
}

impl fmt::Debug for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CayleyTable")
            .field("order", &self.order)
            .field("labels", &self.labels)
            .finish_non_exhaustive()
    }
}

impl PartialEq for CayleyTable {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.entries == other.entries
    }
}

impl Eq for CayleyTable {}

impl CayleyTable {
    /// Builds a table from row-major entries.
    pub fn new(order: usize, entries: Vec<u32>) -> Result<Self, TableError> {
        if order == 0 {
            return Err(TableError::Empty);
        }
        if entries.len() != order * order {
            return Err(TableError::Shape {
                order,
                expected: order * order,
                got: entries.len(),
            });
        }
        if let Some(pos) = entries.iter().position(|&v| v as usize >= order) {
            return Err(TableError::EntryOutOfRange {
                row: pos / order,
                col: pos % order,
                value: entries[pos] as usize,
                order,
            });
        }
        Ok(Self {
            order,
            entries,
            labels: None,
            class: OnceLock::new(),
        })
    }

    pub fn from_fn(
        order: usize,
        mut f: impl FnMut(ElementId, ElementId) -> ElementId,
    ) -> Result<Self, TableError> {
        let mut entries = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                entries.push(u32::try_from(f(a, b)).unwrap_or(u32::MAX));
            }
        }
        Self::new(order, entries)
    }

    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self, TableError> {
        let order = rows.len();
        let mut entries = Vec::with_capacity(order * order);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != order {
                return Err(TableError::Parse {
                    line: r + 1,
                    msg: format!("row {r} has {} entries, expected {order}", row.len()),
                });
            }
            entries.extend(row.iter().map(|&v| u32::try_from(v).unwrap_or(u32::MAX)));
        }
        Self::new(order, entries)
    }

    /// Attaches display names; each must be a non-empty token without whitespace.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, TableError> {
        if labels.len() != self.order {
            return Err(TableError::BadLabels(format!(
                "{} labels for {} elements",
                labels.len(),
                self.order
            )));
        }
        if let Some(bad) = labels
            .iter()
            .find(|l| l.is_empty() || l.chars().any(char::is_whitespace))
        {
            return Err(TableError::BadLabels(format!("invalid label {bad:?}")));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// The product `ab`.
    #[inline]
    pub fn mul(&self, a: ElementId, b: ElementId) -> ElementId {
        self.entries[a * self.order + b] as usize
    }

    #[inline]
    pub fn row(&self, a: ElementId) -> &[u32] {
        &self.entries[a * self.order..(a + 1) * self.order]
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn elements(&self) -> std::ops::Range<ElementId> {
        0..self.order
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of an element: its label, or its index.
    pub fn label(&self, e: ElementId) -> String {
        match &self.labels {
            Some(l) => l[e].clone(),
            None => e.to_string(),
        }
    }

    pub(crate) fn check_element(&self, e: ElementId) -> Result<(), TableError> {
        if e < self.order {
            Ok(())
        } else {
            Err(TableError::ElementOutOfRange {
                element: e,
                order: self.order,
            })
        }
    }

    #[inline]
    pub fn commute(&self, a: ElementId, b: ElementId) -> bool {
        self.mul(a, b) == self.mul(b, a)
    }

    /// The opposite magma, with `a·b := ba`.
    pub fn opposite(&self) -> Self {
        let n = self.order;
        let mut entries = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                entries[a * n + b] = self.entries[b * n + a];
            }
        }
        let class = OnceLock::new();
        if let Some(&c) = self.class.get() {
            let _ = class.set(c);
        }
        Self {
            order: n,
            entries,
            labels: self.labels.clone(),
            class,
        }
    }

    /// Adjoins a new identity element with index `order` (labelled `1`
    /// when the table is labelled).
    pub fn unitize(&self) -> Result<Self, TableError> {
        if let Err(v) = self.check_associativity() {
            return Err(TableError::NotASemigroup {
                a: v.a,
                b: v.b,
                c: v.c,
            });
        }
        let n = self.order;
        let one = n;
        let t = Self::from_fn(n + 1, |a, b| {
            if a == one {
                b
            } else if b == one {
                a
            } else {
                self.mul(a, b)
            }
        })?;
        match &self.labels {
            Some(labels) => {
                let mut labels = labels.clone();
                let mut name = "1".to_string();
                while labels.contains(&name) {
                    name.push('\'');
                }
                labels.push(name);
                t.with_labels(labels)
            }
            None => Ok(t),
        }
    }

    /// Relabels elements: old element `e` becomes `perm[e]`.
    pub fn relabel(&self, perm: &[ElementId]) -> Self {
        let n = self.order;
        assert_eq!(perm.len(), n, "relabeling must be a permutation of the elements");
        let mut entries = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                entries[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u32;
            }
        }
        let labels = self.labels.as_ref().map(|l| {
            let mut out = vec![String::new(); n];
            for (e, name) in l.iter().enumerate() {
                out[perm[e]] = name.clone();
            }
            out
        });
        Self {
            order: n,
            entries,
            labels,
            class: OnceLock::new(),
        }
    }

    /// Direct product; the pair `(a, b)` has index `a * other.order() + b`.
    pub fn direct_product(&self, other: &Self) -> Self {
        let m = other.order;
        Self::from_fn(self.order * m, |x, y| {
            let (a1, b1) = (x / m, x % m);
            let (a2, b2) = (y / m, y % m);
            self.mul(a1, a2) * m + other.mul(b1, b2)
        })
        .expect("product of valid tables is valid")
    }

    /// Restriction to a subset closed under the product. Element `subset[i]`
    /// becomes `i`.
    pub fn restrict(&self, subset: &[ElementId]) -> Result<Self, TableError> {
        let mut index = vec![usize::MAX; self.order];
        for (i, &e) in subset.iter().enumerate() {
            self.check_element(e)?;
            index[e] = i;
        }
        let mut entries = Vec::with_capacity(subset.len() * subset.len());
        for &a in subset {
            for &b in subset {
                let p = index[self.mul(a, b)];
                if p == usize::MAX {
                    return Err(TableError::NotASubgroup);
                }
                entries.push(p as u32);
            }
        }
        let t = Self::new(subset.len(), entries)?;
        match &self.labels {
            Some(l) => t.with_labels(subset.iter().map(|&e| l[e].clone()).collect()),
            None => Ok(t),
        }
    }

    pub fn parse(text: &str) -> Result<Self, TableError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines.next().ok_or(TableError::Parse {
            line: 0,
            msg: "missing `magma <n>` header".into(),
        })?;
        let order = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["magma", n] => n.parse::<usize>().map_err(|_| TableError::Parse {
                line: line_no,
                msg: format!("bad order {n:?}"),
            })?,
            _ => {
                return Err(TableError::Parse {
                    line: line_no,
                    msg: "expected `magma <n>`".into(),
                })
            }
        };
        if order == 0 {
            return Err(TableError::Empty);
        }
        let mut entries = Vec::with_capacity(order * order);
        for _ in 0..order {
            let (line_no, row) = lines.next().ok_or(TableError::Parse {
                line: line_no,
                msg: format!("expected {order} rows"),
            })?;
            let before = entries.len();
            for tok in row.split_whitespace() {
                let v = tok.parse::<u32>().map_err(|_| TableError::Parse {
                    line: line_no,
                    msg: format!("bad entry {tok:?}"),
                })?;
                entries.push(v);
            }
            if entries.len() - before != order {
                return Err(TableError::Parse {
                    line: line_no,
                    msg: format!("row has {} entries, expected {order}", entries.len() - before),
                });
            }
        }
        let mut table = Self::new(order, entries)?;
        if let Some((line_no, rest)) = lines.next() {
            let mut toks = rest.split_whitespace();
            if toks.next() != Some("labels") {
                return Err(TableError::Parse {
                    line: line_no,
                    msg: "unexpected content after table rows".into(),
                });
            }
            table = table.with_labels(toks.map(str::to_string).collect())?;
            if let Some((line_no, _)) = lines.next() {
                return Err(TableError::Parse {
                    line: line_no,
                    msg: "unexpected content after labels".into(),
                });
            }
        }
        Ok(table)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("magma {}\n", self.order);
        for a in 0..self.order {
            let row: Vec<String> = self.row(a).iter().map(u32::to_string).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        if let Some(labels) = &self.labels {
            out.push_str("labels ");
            out.push_str(&labels.join(" "));
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for CayleyTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> CayleyTable {
        CayleyTable::from_fn(n, |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn rejects_out_of_range_entries() {
        let err = CayleyTable::new(2, vec![0, 1, 2, 0]).unwrap_err();
        assert!(matches!(err, TableError::EntryOutOfRange { row: 1, col: 0, .. }));
        assert_eq!(CayleyTable::new(0, vec![]).unwrap_err(), TableError::Empty);
    }

    #[test]
    fn parses_comments_and_labels() {
        let text = "# left zero\nmagma 2\n0 0\n1 1\nlabels x y\n";
        let t = CayleyTable::parse(text).unwrap();
        assert_eq!(t.order(), 2);
        assert_eq!(t.mul(1, 0), 1);
        assert_eq!(t.label(1), "y");
        assert_eq!(CayleyTable::parse(&t.to_text()).unwrap().labels(), t.labels());
    }

    #[test]
    fn parse_errors_name_the_line() {
        let err = CayleyTable::parse("magma 2\n0 1\n1\n").unwrap_err();
        assert!(matches!(err, TableError::Parse { line: 3, .. }));
        let err = CayleyTable::parse("group 2\n").unwrap_err();
        assert!(matches!(err, TableError::Parse { line: 1, .. }));
        let err = CayleyTable::parse("magma 1\n0\nextra\n").unwrap_err();
        assert!(matches!(err, TableError::Parse { line: 3, .. }));
    }

    #[test]
    fn opposite_is_an_involution() {
        let t = CayleyTable::from_fn(3, |a, _| a).unwrap();
        assert_ne!(t.opposite(), t);
        assert_eq!(t.opposite().opposite(), t);
        assert_eq!(cyclic(4).opposite(), cyclic(4));
    }

    #[test]
    fn unitize_adds_identity() {
        let t = CayleyTable::from_fn(3, |a, _| a).unwrap();
        let u = t.unitize().unwrap();
        assert_eq!(u.order(), 4);
        for x in 0..4 {
            assert_eq!(u.mul(3, x), x);
            assert_eq!(u.mul(x, 3), x);
        }
        let sub = CayleyTable::from_fn(3, |a, b| (3 + a - b) % 3).unwrap();
        assert!(matches!(sub.unitize(), Err(TableError::NotASemigroup { .. })));
    }

    #[test]
    fn unitize_of_monoid_moves_identity() {
        let u = cyclic(3).unitize().unwrap();
        assert_eq!(u.order(), 4);
        // old identity 0 no longer fixes the new element
        assert_eq!(u.mul(0, 3), 0);
        assert_eq!(u.identity(), Some(3));
    }

    #[test]
    fn relabel_and_restrict() {
        let t = cyclic(4);
        let r = t.relabel(&[2, 3, 0, 1]);
        assert_eq!(r.mul(2, 2), 2);
        let sub = t.restrict(&[0, 2]).unwrap();
        assert_eq!(sub.entries(), &[0, 1, 1, 0]);
        assert_eq!(t.restrict(&[0, 1]).unwrap_err(), TableError::NotASubgroup);
    }
}
