//! Algebraic queries on Cayley tables: associativity, classification,
//! centre, centralisers, normalisers and quotients.

use serde::Serialize;

use crate::table::{CayleyTable, ElementId, MagmaClass, TableError};

/// A triple with `(ab)c != a(bc)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub a: ElementId,
    pub b: ElementId,
    pub c: ElementId,
}

impl CayleyTable {
    /// Checks all `n³` associativity triples.
    ///
    /// On failure the lexicographically first violating triple is reported.
    /// Success is decided with Light's test over a generating set, which
    /// covers every triple because the set of "good" middle factors is
    /// closed under the product.
    pub fn check_associativity(&self) -> Result<(), Violation> {
        if let Some(&class) = self.class.get() {
            if class >= MagmaClass::Semigroup {
                return Ok(());
            }
        }
        let gens = self.generating_set();
        let n = self.order();
        let light_ok = gens.iter().all(|&b| {
            (0..n).all(|a| {
                let ab = self.mul(a, b);
                (0..n).all(|c| self.mul(ab, c) == self.mul(a, self.mul(b, c)))
            })
        });
        if light_ok {
            return Ok(());
        }
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(Violation { a, b, c });
                    }
                }
            }
        }
        unreachable!("Light's test failed but no violating triple exists")
    }

    pub fn is_semigroup(&self) -> bool {
        self.classify() >= MagmaClass::Semigroup
    }

    pub fn is_group(&self) -> bool {
        self.classify() == MagmaClass::Group
    }

    /// Strongest class whose axioms hold; cached after the first call.
    pub fn classify(&self) -> MagmaClass {
        *self.class.get_or_init(|| {
            if self.check_associativity().is_err() {
                return MagmaClass::Magma;
            }
            let Some(e) = self.identity() else {
                return MagmaClass::Semigroup;
            };
            let n = self.order();
            let invertible = (0..n).all(|x| (0..n).any(|y| self.mul(x, y) == e && self.mul(y, x) == e));
            if invertible {
                MagmaClass::Group
            } else {
                MagmaClass::Monoid
            }
        })
    }

    /// The two-sided identity, if any.
    pub fn identity(&self) -> Option<ElementId> {
        let n = self.order();
        (0..n).find(|&e| (0..n).all(|x| self.mul(e, x) == x && self.mul(x, e) == x))
    }

    fn require_group(&self) -> Result<ElementId, TableError> {
        if self.is_group() {
            Ok(self.identity().expect("groups have an identity"))
        } else {
            Err(TableError::NotAGroup)
        }
    }

    /// Inverse of every element of a group.
    pub fn inverses(&self) -> Result<Vec<ElementId>, TableError> {
        let e = self.require_group()?;
        let n = self.order();
        Ok((0..n)
            .map(|x| {
                let row = self.row(x);
                row.iter().position(|&v| v as usize == e).expect("group rows are permutations")
            })
            .collect())
    }

    /// Order of a group element.
    pub fn element_order(&self, x: ElementId) -> Result<usize, TableError> {
        let e = self.require_group()?;
        self.check_element(x)?;
        let mut k = 1;
        let mut p = x;
        while p != e {
            p = self.mul(p, x);
            k += 1;
        }
        Ok(k)
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.commute(a, b)))
    }

    /// `Z(T)`: elements commuting with every element. Defined for any magma.
    pub fn centre(&self) -> Vec<ElementId> {
        self.centraliser(&(0..self.order()).collect::<Vec<_>>())
            .expect("all elements are in range")
    }

    /// `C_T(A) = {x : xa = ax for all a in A}`.
    pub fn centraliser(&self, set: &[ElementId]) -> Result<Vec<ElementId>, TableError> {
        for &a in set {
            self.check_element(a)?;
        }
        Ok(self
            .elements()
            .filter(|&x| set.iter().all(|&a| self.commute(x, a)))
            .collect())
    }

    /// `N_G(A) = {x : x⁻¹Ax = A}` in a group.
    pub fn normaliser(&self, set: &[ElementId]) -> Result<Vec<ElementId>, TableError> {
        let inv = self.inverses()?;
        let mut member = vec![false; self.order()];
        for &a in set {
            self.check_element(a)?;
            member[a] = true;
        }
        Ok(self
            .elements()
            .filter(|&x| {
                set.iter()
                    .all(|&a| member[self.mul(self.mul(inv[x], a), x)])
            })
            .collect())
    }

    /// Smallest subset containing `seeds` and closed under the product,
    /// returned in ascending order. For finite groups this is the generated
    /// subgroup.
    pub fn closure(&self, seeds: &[ElementId]) -> Vec<ElementId> {
        let mut member = vec![false; self.order()];
        let mut list = Vec::new();
        for &s in seeds {
            self.extend_closure(&mut member, &mut list, s);
        }
        list.sort_unstable();
        list
    }

    fn extend_closure(&self, member: &mut [bool], list: &mut Vec<ElementId>, new: ElementId) {
        if member[new] {
            return;
        }
        member[new] = true;
        list.push(new);
        let mut next = list.len() - 1;
        while next < list.len() {
            let x = list[next];
            next += 1;
            // pair x with every earlier member and with itself
            let mut i = 0;
            while i < next {
                let y = list[i];
                for p in [self.mul(x, y), self.mul(y, x)] {
                    if !member[p] {
                        member[p] = true;
                        list.push(p);
                    }
                }
                i += 1;
            }
        }
    }

    /// Greedy generating set: scans elements in order and keeps each one
    /// not already generated by the earlier picks.
    pub fn generating_set(&self) -> Vec<ElementId> {
        self.generating_set_in_order(self.elements())
    }

    pub(crate) fn generating_set_in_order(
        &self,
        order: impl IntoIterator<Item = ElementId>,
    ) -> Vec<ElementId> {
        let mut member = vec![false; self.order()];
        let mut list = Vec::new();
        let mut gens = Vec::new();
        for e in order {
            if !member[e] {
                gens.push(e);
                self.extend_closure(&mut member, &mut list, e);
            }
        }
        gens
    }

    /// Checks that `set` is a subgroup of a group.
    pub fn is_subgroup(&self, set: &[ElementId]) -> Result<bool, TableError> {
        let e = self.require_group()?;
        let mut member = vec![false; self.order()];
        for &a in set {
            self.check_element(a)?;
            member[a] = true;
        }
        // finite and closed under the product suffices
        Ok(member[e] && set.iter().all(|&a| set.iter().all(|&b| member[self.mul(a, b)])))
    }

    /// Quotient of a group by a normal subgroup.
    ///
    /// Cosets are numbered by their smallest element and labelled `[r]`
    /// where `r` is the label of that representative.
    pub fn quotient(&self, normal: &[ElementId]) -> Result<CayleyTable, TableError> {
        if !self.is_subgroup(normal)? {
            return Err(TableError::NotASubgroup);
        }
        let inv = self.inverses()?;
        let mut member = vec![false; self.order()];
        for &a in normal {
            member[a] = true;
        }
        for g in self.elements() {
            if normal.iter().any(|&a| !member[self.mul(self.mul(inv[g], a), g)]) {
                return Err(TableError::NotNormal);
            }
        }
        let mut coset = vec![usize::MAX; self.order()];
        let mut reps = Vec::new();
        for g in self.elements() {
            if coset[g] == usize::MAX {
                for &a in normal {
                    coset[self.mul(g, a)] = reps.len();
                }
                reps.push(g);
            }
        }
        let q = CayleyTable::from_fn(reps.len(), |x, y| coset[self.mul(reps[x], reps[y])])?;
        let labels = reps.iter().map(|&r| format!("[{}]", self.label(r))).collect();
        let q = q.with_labels(labels)?;
        let _ = q.class.set(MagmaClass::Group);
        Ok(q)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> CayleyTable {
        CayleyTable::from_fn(n, |a, b| (a + b) % n).unwrap()
    }

    /// S_3 as permutations of {0,1,2} in lexicographic order, composed
    /// left to right.
    fn s3() -> CayleyTable {
        let perms = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        CayleyTable::from_fn(6, |a, b| {
            let p: Vec<usize> = (0..3).map(|i| perms[b][perms[a][i]]).collect();
            perms.iter().position(|q| q[..] == p[..]).unwrap()
        })
        .unwrap()
    }

    fn brute_violation(t: &CayleyTable) -> Option<Violation> {
        let n = t.order();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c)) {
                        return Some(Violation { a, b, c });
                    }
                }
            }
        }
        None
    }

    #[test]
    fn subtraction_is_not_associative() {
        let t = CayleyTable::from_fn(3, |a, b| (3 + a - b) % 3).unwrap();
        let v = t.check_associativity().unwrap_err();
        assert_eq!(Some(v), brute_violation(&t));
        // (0-0)-1 = 2 but 0-(0-1) = 1
        assert_eq!((v.a, v.b, v.c), (0, 0, 1));
        assert_ne!(t.mul(t.mul(1, 1), 1), t.mul(1, t.mul(1, 1)));
        assert_eq!(t.classify(), MagmaClass::Magma);
    }

    #[test]
    fn classify_examples() {
        let left_zero = CayleyTable::from_fn(3, |a, _| a).unwrap();
        assert_eq!(left_zero.classify(), MagmaClass::Semigroup);
        assert_eq!(cyclic(4).classify(), MagmaClass::Group);
        let mult_mod4 = CayleyTable::from_fn(4, |a, b| (a * b) % 4).unwrap();
        assert_eq!(mult_mod4.classify(), MagmaClass::Monoid);
    }

    #[test]
    fn light_test_agrees_with_brute_force_on_small_magmas() {
        // every magma on two elements
        for code in 0..16u32 {
            let entries: Vec<u32> = (0..4).map(|i| (code >> i) & 1).collect();
            let t = CayleyTable::new(2, entries).unwrap();
            assert_eq!(t.check_associativity().err(), brute_violation(&t));
        }
    }

    #[test]
    fn centraliser_of_three_cycle_in_s3() {
        let t = s3();
        // element 3 is the 3-cycle [1,2,0]
        let c = t.centraliser(&[3]).unwrap();
        assert_eq!(c, vec![0, 3, 4]);
        assert_eq!(t.centraliser(&[]).unwrap(), (0..6).collect::<Vec<_>>());
        assert_eq!(t.centre(), vec![0]);
        assert!(t.centraliser(&[6]).is_err());
    }

    #[test]
    fn normaliser_examples() {
        let t = s3();
        let all: Vec<_> = (0..6).collect();
        assert_eq!(t.normaliser(&all).unwrap(), all);
        assert_eq!(t.normaliser(&[0, 3, 4]).unwrap(), all);
        assert_eq!(t.normaliser(&[0, 1]).unwrap(), vec![0, 1]);
        let left_zero = CayleyTable::from_fn(2, |a, _| a).unwrap();
        assert_eq!(left_zero.normaliser(&[0]).unwrap_err(), TableError::NotAGroup);
    }

    #[test]
    fn quotient_examples() {
        let q = cyclic(4).quotient(&[0, 2]).unwrap();
        assert_eq!(q.order(), 2);
        assert!(q.is_group());
        assert_eq!(q.entries(), &[0, 1, 1, 0]);
        assert_eq!(s3().quotient(&[0, 1]).unwrap_err(), TableError::NotNormal);
        assert_eq!(s3().quotient(&[0, 3]).unwrap_err(), TableError::NotASubgroup);
    }

    #[test]
    fn element_orders_and_closure() {
        let t = cyclic(6);
        assert_eq!(t.element_order(2).unwrap(), 3);
        assert_eq!(t.closure(&[2]), vec![0, 2, 4]);
        assert_eq!(t.generating_set(), vec![0, 1]);
        assert_eq!(s3().closure(&[1, 3]).len(), 6);
    }
}
