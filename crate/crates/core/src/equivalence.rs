//! Isomorphism and anti-isomorphism of Cayley tables.
//!
//! The search maps a generating set chosen from the rarest invariant classes
//! first, and propagates every forced image `φ(xy) = φ(x)φ(y)` immediately,
//! so a complete map is reached as soon as the generators are placed.

use serde::Serialize;

use crate::table::{CayleyTable, ElementId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum EquivalenceKind {
    Isomorphism,
    AntiIsomorphism,
}

/// A bijection `map` from the elements of one table to another.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceCertificate {
    pub kind: EquivalenceKind,
    pub map: Vec<ElementId>,
}

impl EquivalenceCertificate {
    /// Re-checks the defining law on every pair.
    pub fn verify(&self, from: &CayleyTable, to: &CayleyTable) -> bool {
        let n = from.order();
        if to.order() != n || self.map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &m in &self.map {
            if m >= n || std::mem::replace(&mut seen[m], true) {
                return false;
            }
        }
        let phi = &self.map;
        (0..n).all(|a| {
            (0..n).all(|b| {
                let image = phi[from.mul(a, b)];
                match self.kind {
                    EquivalenceKind::Isomorphism => image == to.mul(phi[a], phi[b]),
                    EquivalenceKind::AntiIsomorphism => image == to.mul(phi[b], phi[a]),
                }
            })
        })
    }

    /// The certificate in the other direction, of the same kind.
    pub fn inverse(&self) -> Self {
        let mut map = vec![0; self.map.len()];
        for (a, &b) in self.map.iter().enumerate() {
            map[b] = a;
        }
        Self {
            kind: self.kind,
            map,
        }
    }
}

/// Looks for an isomorphism, then (if allowed) an anti-isomorphism, which is
/// an isomorphism onto the opposite table.
pub fn find_equivalence(
    t1: &CayleyTable,
    t2: &CayleyTable,
    allow_anti: bool,
) -> Option<EquivalenceCertificate> {
    if let Some(map) = find_isomorphism(t1, t2) {
        return Some(EquivalenceCertificate {
            kind: EquivalenceKind::Isomorphism,
            map,
        });
    }
    if allow_anti {
        if let Some(map) = find_isomorphism(t1, &t2.opposite()) {
            return Some(EquivalenceCertificate {
                kind: EquivalenceKind::AntiIsomorphism,
                map,
            });
        }
    }
    None
}

pub fn find_isomorphism(t1: &CayleyTable, t2: &CayleyTable) -> Option<Vec<ElementId>> {
    let mut out = None;
    MapSearch::new(t1, t2)?.run(&mut |m| {
        out = Some(m.to_vec());
        false
    });
    out
}

/// All automorphisms of a table, each as an element permutation.
pub fn automorphisms(t: &CayleyTable) -> Vec<Vec<ElementId>> {
    let mut out = Vec::new();
    if let Some(mut search) = MapSearch::new(t, t) {
        search.run(&mut |m| {
            out.push(m.to_vec());
            true
        });
    }
    out.sort();
    out
}

/// Per-element data preserved by every isomorphism.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
struct ElementInvariant {
    idempotent: bool,
    left_fixed: usize,
    right_fixed: usize,
    left_identity_for: usize,
    right_identity_for: usize,
    row_distinct: usize,
    col_distinct: usize,
    commuting: usize,
    power_index: usize,
    power_period: usize,
}

fn invariants(t: &CayleyTable) -> Vec<ElementInvariant> {
    let n = t.order();
    let mut seen = vec![0usize; n];
    let mut stamp = vec![usize::MAX; n];
    (0..n)
        .map(|x| {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            let (mut lf, mut rf, mut li, mut ri, mut rd, mut cd, mut com) = (0, 0, 0, 0, 0, 0, 0);
            for y in 0..n {
                let xy = t.mul(x, y);
                let yx = t.mul(y, x);
                lf += usize::from(xy == x);
                rf += usize::from(yx == x);
                li += usize::from(xy == y);
                ri += usize::from(yx == y);
                com += usize::from(xy == yx);
                if !std::mem::replace(&mut row_seen[xy], true) {
                    rd += 1;
                }
                if !std::mem::replace(&mut col_seen[yx], true) {
                    cd += 1;
                }
            }
            // x, x², x³, ... is eventually periodic
            let mut p = x;
            let mut k = 1;
            let (index, period) = loop {
                if stamp[p] == x {
                    break (seen[p], k - seen[p]);
                }
                stamp[p] = x;
                seen[p] = k;
                p = t.mul(p, x);
                k += 1;
            };
            ElementInvariant {
                idempotent: t.mul(x, x) == x,
                left_fixed: lf,
                right_fixed: rf,
                left_identity_for: li,
                right_identity_for: ri,
                row_distinct: rd,
                col_distinct: cd,
                commuting: com,
                power_index: index,
                power_period: period,
            }
        })
        .collect()
}

struct MapSearch<'a> {
    t1: &'a CayleyTable,
    t2: &'a CayleyTable,
    class1: Vec<usize>,
    class2: Vec<usize>,
    map: Vec<usize>,
    used: Vec<bool>,
    mapped: Vec<ElementId>,
    branch_order: Vec<ElementId>,
}

const UNMAPPED: usize = usize::MAX;

impl<'a> MapSearch<'a> {
    fn new(t1: &'a CayleyTable, t2: &'a CayleyTable) -> Option<Self> {
        let n = t1.order();
        if t2.order() != n {
            return None;
        }
        let inv1 = invariants(t1);
        let inv2 = invariants(t2);
        let mut sorted1 = inv1.clone();
        let mut sorted2 = inv2.clone();
        sorted1.sort();
        sorted2.sort();
        if sorted1 != sorted2 {
            return None;
        }
        sorted1.dedup();
        let class_of = |inv: &ElementInvariant| sorted1.binary_search(inv).expect("shared invariant");
        let class1: Vec<usize> = inv1.iter().map(class_of).collect();
        let class2: Vec<usize> = inv2.iter().map(class_of).collect();
        let mut class_size = vec![0usize; sorted1.len()];
        for &c in &class1 {
            class_size[c] += 1;
        }
        let mut by_rarity: Vec<ElementId> = (0..n).collect();
        by_rarity.sort_by_key(|&x| (class_size[class1[x]], x));
        let branch_order = t1.generating_set_in_order(by_rarity);
        Some(Self {
            t1,
            t2,
            class1,
            class2,
            map: vec![UNMAPPED; n],
            used: vec![false; n],
            mapped: Vec::with_capacity(n),
            branch_order,
        })
    }

    /// Calls `found` on each complete map; stops when it returns false.
    fn run(&mut self, found: &mut dyn FnMut(&[ElementId]) -> bool) {
        self.descend(0, found);
    }

    fn descend(&mut self, depth: usize, found: &mut dyn FnMut(&[ElementId]) -> bool) -> bool {
        let Some(pos) = (depth..self.branch_order.len()).find(|&i| self.map[self.branch_order[i]] == UNMAPPED)
        else {
            return found(&self.map);
        };
        let x = self.branch_order[pos];
        let n = self.t1.order();
        for y in 0..n {
            if self.used[y] || self.class2[y] != self.class1[x] {
                continue;
            }
            let mark = self.mapped.len();
            let ok = self.assign(x, y);
            if ok && self.mapped.len() == n {
                if !found(&self.map) {
                    return false;
                }
            } else if ok && !self.descend(pos + 1, found) {
                return false;
            }
            self.undo(mark);
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for x in self.mapped.drain(mark..) {
            self.used[self.map[x]] = false;
            self.map[x] = UNMAPPED;
        }
    }

    /// Maps `x -> y` and everything it forces. Returns false on conflict,
    /// leaving partial assignments for the caller to undo.
    fn assign(&mut self, x: ElementId, y: ElementId) -> bool {
        if !self.try_set(x, y) {
            return false;
        }
        let mut next = self.mapped.len() - 1;
        while next < self.mapped.len() {
            let a = self.mapped[next];
            next += 1;
            let mut i = 0;
            while i < next {
                let b = self.mapped[i];
                i += 1;
                for (p, q) in [(a, b), (b, a)] {
                    let prod = self.t1.mul(p, q);
                    let image = self.t2.mul(self.map[p], self.map[q]);
                    if self.map[prod] == UNMAPPED {
                        if !self.try_set(prod, image) {
                            return false;
                        }
                    } else if self.map[prod] != image {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn try_set(&mut self, x: ElementId, y: ElementId) -> bool {
        if self.used[y] || self.class1[x] != self.class2[y] {
            return false;
        }
        self.map[x] = y;
        self.used[y] = true;
        self.mapped.push(x);
        true
    }
}
