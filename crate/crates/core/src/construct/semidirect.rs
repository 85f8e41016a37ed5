//! Semidirect products `N ⋊ H`.
//!
//! An action assigns each `h` a permutation `p_h` of the elements of `N`
//! and acts on the left: `p_(h1·h2) = p_h1 ∘ p_h2`. The product is
//! `(n1, h1)(n2, h2) = (n1 · p_h1(n2), h1·h2)` and the pair `(n, h)` is
//! element `h·|N| + n`.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::field::Field;
use super::matrix::{mat_mul, sl2_elements, Mat2};
use super::ConstructError;
use crate::equivalence::automorphisms;
use crate::table::{CayleyTable, ElementId, TableError};

/// Images of the elements of `H` as permutations of the elements of `N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ActionMap {
    pub images: Vec<Vec<ElementId>>,
}

impl ActionMap {
    /// Checks that every image is an automorphism of `n` and that `h -> p_h`
    /// is a homomorphism into Aut(`n`).
    pub fn validate(&self, h: &CayleyTable, n: &CayleyTable) -> Result<(), ConstructError> {
        let invalid = |msg: String| Err(ConstructError::InvalidAction(msg));
        if self.images.len() != h.order() {
            return invalid(format!("{} images for a group of order {}", self.images.len(), h.order()));
        }
        for (x, p) in self.images.iter().enumerate() {
            if p.len() != n.order() {
                return invalid(format!("image of {x} has length {}", p.len()));
            }
            let mut seen = vec![false; n.order()];
            for &y in p {
                if y >= n.order() || std::mem::replace(&mut seen[y], true) {
                    return invalid(format!("image of {x} is not a permutation"));
                }
            }
            for a in n.elements() {
                for b in n.elements() {
                    if p[n.mul(a, b)] != n.mul(p[a], p[b]) {
                        return invalid(format!("image of {x} is not an automorphism: fails on ({a}, {b})"));
                    }
                }
            }
        }
        for x in h.elements() {
            for y in h.elements() {
                let xy = &self.images[h.mul(x, y)];
                let (px, py) = (&self.images[x], &self.images[y]);
                if n.elements().any(|e| xy[e] != px[py[e]]) {
                    return invalid(format!("not a homomorphism at ({x}, {y})"));
                }
            }
        }
        Ok(())
    }

    /// `action <|H|> <|N|>` followed by one permutation per line.
    pub fn parse(text: &str) -> Result<Self, ConstructError> {
        let bad = |line: usize, msg: &str| ConstructError::Table(TableError::Parse { line, msg: msg.into() });
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines.next().ok_or_else(|| bad(0, "missing `action` header"))?;
        let (h, n) = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
            ["action", h, n] => (
                h.parse::<usize>().map_err(|_| bad(line_no, "bad |H|"))?,
                n.parse::<usize>().map_err(|_| bad(line_no, "bad |N|"))?,
            ),
            _ => return Err(bad(line_no, "expected `action <|H|> <|N|>`")),
        };
        let mut images = Vec::with_capacity(h);
        for (line_no, line) in lines {
            let row: Vec<usize> = line
                .split_whitespace()
                .map(|s| s.parse().map_err(|_| bad(line_no, "bad entry")))
                .collect::<Result<_, _>>()?;
            if row.len() != n {
                return Err(bad(line_no, "wrong number of entries"));
            }
            images.push(row);
        }
        if images.len() != h {
            return Err(bad(0, "wrong number of image lines"));
        }
        Ok(Self { images })
    }

    pub fn to_text(&self) -> String {
        let n = self.images.first().map_or(0, Vec::len);
        let mut out = format!("action {} {}\n", self.images.len(), n);
        for p in &self.images {
            let row: Vec<String> = p.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", row.join(" "));
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.images
            .iter()
            .all(|p| p.iter().enumerate().all(|(i, &j)| i == j))
    }
}

pub fn semidirect_product(n: &CayleyTable, h: &CayleyTable, action: &ActionMap) -> Result<CayleyTable, ConstructError> {
    for t in [n, h] {
        if !t.is_group() {
            return Err(ConstructError::Table(TableError::NotAGroup));
        }
    }
    action.validate(h, n)?;
    let size = n.order();
    let t = CayleyTable::from_fn(size * h.order(), |x, y| {
        let (n1, h1) = (x % size, x / size);
        let (n2, h2) = (y % size, y / size);
        h.mul(h1, h2) * size + n.mul(n1, action.images[h1][n2])
    })?;
    let labels = (0..t.order())
        .map(|x| format!("({},{})", n.label(x % size), h.label(x / size)))
        .collect();
    Ok(t.with_labels(labels)?)
}

/// `A ⋊ Z_2` with the involution acting by inversion.
pub fn inversion_extension(a: &CayleyTable) -> Result<CayleyTable, ConstructError> {
    if !a.is_group() {
        return Err(ConstructError::Table(TableError::NotAGroup));
    }
    if !a.is_abelian() {
        return Err(ConstructError::Table(TableError::NotAbelian));
    }
    let identity: Vec<ElementId> = a.elements().collect();
    let action = ActionMap {
        images: vec![identity, a.inverses()?],
    };
    semidirect_product(a, &super::presentation::cyclic(2)?, &action)
}

/// `Z_n ⋊ Z_m` where the generator of `Z_m` acts by `x ↦ k·x`.
pub fn power_action(n: usize, m: usize, k: usize) -> Result<CayleyTable, ConstructError> {
    let zn = super::presentation::cyclic(n)?;
    let zm = super::presentation::cyclic(m)?;
    let mut images = Vec::with_capacity(m);
    let mut factor = 1 % n;
    for _ in 0..m {
        images.push((0..n).map(|x| x * factor % n).collect());
        factor = factor * k % n;
    }
    semidirect_product(&zn, &zm, &ActionMap { images })
}

/// `t` copies of the natural module `GF(4)²` under SL(2,4), as
/// `(Z_2^4)^t ⋊ SL(2,4)`. A vector `(x, y)` over GF(4) has code `x + 4y`
/// and addition is bitwise exclusive or.
pub fn natural_module_sl24(t: usize) -> Result<CayleyTable, ConstructError> {
    let f = Field::new(4).expect("GF(4) is supported");
    let n_order = 16usize
        .checked_pow(t as u32)
        .filter(|&o| t >= 1 && o * 60 <= 4096)
        .ok_or_else(|| ConstructError::BadSpec(format!("{t} copies of the module give too large a group")))?;
    let module = CayleyTable::from_fn(n_order, |a, b| a ^ b)?;
    let mats: Vec<Mat2> = sl2_elements(&f);
    let h = super::matrix::sl2(4)?;
    // element i of the SL(2,4) table is mats[i]
    let act = |m: &Mat2, v: usize| -> usize {
        let (x, y) = ((v & 3) as u8, (v >> 2) as u8);
        let image = mat_mul(&f, m, &[x, 0, y, 0]);
        image[0] as usize | (image[2] as usize) << 2
    };
    let images = mats
        .iter()
        .map(|m| {
            (0..n_order)
                .map(|v| (0..t).map(|c| act(m, (v >> (4 * c)) & 15) << (4 * c)).sum())
                .collect()
        })
        .collect();
    semidirect_product(&module, &h, &ActionMap { images })
}

/// Every homomorphism `h -> Aut(n)`, as actions.
///
/// Generators of `h` are sent to automorphisms whose order divides theirs;
/// each assignment is extended over `h` and kept if consistent.
pub fn homomorphisms_to_aut(h: &CayleyTable, n: &CayleyTable) -> Result<Vec<ActionMap>, ConstructError> {
    if !h.is_group() || !n.is_group() {
        return Err(ConstructError::Table(TableError::NotAGroup));
    }
    let auts = automorphisms(n);
    let id: Vec<ElementId> = n.elements().collect();
    let compose = |p: &[ElementId], q: &[ElementId]| -> Vec<ElementId> { q.iter().map(|&x| p[x]).collect() };
    let aut_order = |p: &[ElementId]| {
        let mut power = p.to_vec();
        let mut k = 1;
        while power != id {
            power = compose(&power, p);
            k += 1;
        }
        k
    };
    let orders: Vec<usize> = auts.iter().map(|p| aut_order(p)).collect();
    let gens = h.generating_set();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&g| {
            let o = h.element_order(g).expect("h is a group");
            (0..auts.len()).filter(|&i| o % orders[i] == 0).collect()
        })
        .collect();
    let e = h.identity().expect("h is a group");
    let mut out = Vec::new();
    let mut choice = vec![0usize; gens.len()];
    'outer: loop {
        {
            let mut images: Vec<Option<Vec<ElementId>>> = vec![None; h.order()];
            images[e] = Some(id.clone());
            let mut queue = vec![e];
            let mut ok = true;
            let mut i = 0;
            while ok && i < queue.len() {
                let x = queue[i];
                i += 1;
                for (k, &g) in gens.iter().enumerate() {
                    let xg = h.mul(x, g);
                    let image = compose(images[x].as_ref().expect("queued"), &auts[candidates[k][choice[k]]]);
                    match &images[xg] {
                        Some(existing) if *existing != image => {
                            ok = false;
                            break;
                        }
                        Some(_) => {}
                        None => {
                            images[xg] = Some(image);
                            queue.push(xg);
                        }
                    }
                }
            }
            if ok {
                let action = ActionMap {
                    images: images.into_iter().map(|p| p.expect("generators reach every element")).collect(),
                };
                if action.validate(h, n).is_ok() {
                    out.push(action);
                }
            }
        }
        // odometer over the candidate lists
        for k in 0..gens.len() {
            choice[k] += 1;
            if choice[k] < candidates[k].len() {
                continue 'outer;
            }
            choice[k] = 0;
        }
        break;
    }
    let mut unique = HashSet::new();
    out.retain(|a| unique.insert(a.images.clone()));
    Ok(out)
}

/// Whether some non-identity element of `h` fixes a non-identity element of
/// `n` under `action`.
pub fn has_nontrivial_fixed_point(h: &CayleyTable, n: &CayleyTable, action: &ActionMap) -> bool {
    let (eh, en) = (h.identity(), n.identity());
    h.elements()
        .filter(|&x| Some(x) != eh)
        .any(|x| n.elements().any(|y| Some(y) != en && action.images[x][y] == y))
}
