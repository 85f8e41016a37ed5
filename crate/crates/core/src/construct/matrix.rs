//! 2×2 matrix groups over small fields, and the group J inside ΓL(2,9).

use super::field::Field;
use super::{table_from_elements, ConstructError};
use crate::table::CayleyTable;

/// Row-major `[a, b, c, d]` for `[[a, b], [c, d]]`.
pub type Mat2 = [u8; 4];

pub const IDENTITY: Mat2 = [1, 0, 0, 1];

/// Largest group table the matrix builders will produce.
const MAX_ORDER: usize = 4096;

pub fn mat_mul(f: &Field, x: &Mat2, y: &Mat2) -> Mat2 {
    let dot = |a: u8, b: u8, c: u8, d: u8| f.add(f.mul(a, b), f.mul(c, d));
    [
        dot(x[0], y[0], x[1], y[2]),
        dot(x[0], y[1], x[1], y[3]),
        dot(x[2], y[0], x[3], y[2]),
        dot(x[2], y[1], x[3], y[3]),
    ]
}

pub fn det(f: &Field, x: &Mat2) -> u8 {
    f.sub(f.mul(x[0], x[3]), f.mul(x[1], x[2]))
}

fn mat_label(x: &Mat2) -> String {
    format!("({},{};{},{})", x[0], x[1], x[2], x[3])
}

fn all_matrices(f: &Field) -> impl Iterator<Item = Mat2> + '_ {
    let q = f.order() as u8;
    (0..q).flat_map(move |a| (0..q).flat_map(move |b| (0..q).flat_map(move |c| (0..q).map(move |d| [a, b, c, d]))))
}

/// Elements of SL(2,q) in lexicographic order of their entries.
pub fn sl2_elements(f: &Field) -> Vec<Mat2> {
    all_matrices(f).filter(|m| det(f, m) == 1).collect()
}

fn field(q: usize) -> Result<Field, ConstructError> {
    Field::new(q).ok_or_else(|| ConstructError::BadSpec(format!("no field of order {q} available")))
}

pub fn sl2(q: usize) -> Result<CayleyTable, ConstructError> {
    let f = field(q)?;
    let elems = sl2_elements(&f);
    table_from_elements(&elems, |x, y| mat_mul(&f, x, y), mat_label)
}

pub fn gl2(q: usize) -> Result<CayleyTable, ConstructError> {
    let f = field(q)?;
    let order = (q * q - 1) * (q * q - q);
    if order > MAX_ORDER {
        return Err(ConstructError::BadSpec(format!("GL(2,{q}) has order {order}, above the limit {MAX_ORDER}")));
    }
    let elems: Vec<Mat2> = all_matrices(&f).filter(|m| det(&f, m) != 0).collect();
    table_from_elements(&elems, |x, y| mat_mul(&f, x, y), mat_label)
}

/// SL(2,q) modulo its centre of scalar matrices.
pub fn psl2(q: usize) -> Result<CayleyTable, ConstructError> {
    let sl = sl2(q)?;
    let centre = sl.centre();
    Ok(sl.quotient(&centre)?)
}

/// A semilinear map `v ↦ σ(v)·m` on row vectors, `σ` a power of Frobenius.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Semilinear {
    pub power: u8,
    pub m: Mat2,
}

/// Composition, first `x` then `y`: `σ_y(σ_x(v)·m_x)·m_y`.
pub fn semilinear_mul(f: &Field, x: &Semilinear, y: &Semilinear) -> Semilinear {
    let degree = if f.order() == f.characteristic() { 1 } else { 2 };
    let mut twisted = x.m;
    for _ in 0..y.power {
        twisted = twisted.map(|e| f.frobenius(e));
    }
    Semilinear {
        power: (x.power + y.power) % degree,
        m: mat_mul(f, &twisted, &y.m),
    }
}

fn closure_capped(f: &Field, gens: &[Semilinear], cap: usize) -> Vec<Semilinear> {
    let identity = Semilinear { power: 0, m: IDENTITY };
    let mut elems = vec![identity];
    let mut seen = std::collections::HashSet::from([identity]);
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        i += 1;
        for g in gens {
            let y = semilinear_mul(f, &x, g);
            if seen.insert(y) {
                elems.push(y);
                if elems.len() > cap {
                    return elems;
                }
            }
        }
    }
    elems
}

/// The non-split extension of SL(2,3) by a cyclic group of order 4 with a
/// unique involution, found inside ΓL(2,9): SL(2,3) over the prime field
/// plus the first semilinear γ for which ⟨SL(2,3), γ⟩ has order 48 and a
/// single involution. Elements are listed in sorted order.
pub fn group_j() -> Result<CayleyTable, ConstructError> {
    let f = field(9)?;
    let lin = |m: Mat2| Semilinear { power: 0, m };
    let base = [lin([1, 1, 0, 1]), lin([1, 0, 1, 1])];
    if closure_capped(&f, &base, 24).len() != 24 {
        return Err(ConstructError::PostconditionFailed("SL(2,3) generators do not give order 24".into()));
    }
    let candidates = (0..2u8).flat_map(|power| all_matrices(&f).filter(|m| det(&f, m) != 0).map(move |m| Semilinear { power, m }));
    for gamma in candidates {
        let gens = [base[0], base[1], gamma];
        let mut elems = closure_capped(&f, &gens, 48);
        if elems.len() != 48 {
            continue;
        }
        let identity = lin(IDENTITY);
        let involutions = elems
            .iter()
            .filter(|x| **x != identity && semilinear_mul(&f, x, x) == identity)
            .count();
        if involutions != 1 {
            continue;
        }
        elems.sort();
        return table_from_elements(
            &elems,
            |x, y| semilinear_mul(&f, x, y),
            |x| format!("{}{}", if x.power == 1 { "F" } else { "" }, mat_label(&x.m)),
        );
    }
    Err(ConstructError::JNotFound)
}
