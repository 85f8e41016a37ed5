//! Backtracking over table cells.
//!
//! Each cell `(a, b)` holds a bitmask of still-possible products. Fixing a
//! cell propagates through the commutation pattern and through every
//! associativity triple the cell takes part in, in any of its four roles:
//! `ab`, `bc`, and the outer products `(ab)c` and `a(bc)`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use crate::graph::{automorphisms, SimpleGraph};

const UNSET: u8 = u8::MAX;

/// How a cell relates to its transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Link {
    Diagonal,
    Equal,
    Different,
}

pub(crate) struct Problem {
    pub n: usize,
    link: Vec<Link>,
    initial: Vec<u64>,
    /// Non-identity relabelings preserving all constraints, as `(π, π⁻¹)`.
    symmetries: Vec<(Vec<u8>, Vec<u8>)>,
}

#[derive(Clone)]
pub(crate) struct State {
    dom: Vec<u64>,
    val: Vec<u8>,
    unset: usize,
}

pub(crate) struct Limits<'a> {
    pub max_nodes: u64,
    pub deadline: Option<Instant>,
    pub nodes: &'a AtomicU64,
    pub stopped: &'a AtomicBool,
}

impl Limits<'_> {
    /// Counts one node; false once a limit is hit.
    fn tick(&self) -> bool {
        if self.stopped.load(Ordering::Relaxed) {
            return false;
        }
        let done = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let out_of_time = done % 1024 == 0 && self.deadline.is_some_and(|d| Instant::now() >= d);
        if done > self.max_nodes || out_of_time {
            self.stopped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

impl Problem {
    /// Vertices of `target` are elements `0..|V|`; the remaining elements up
    /// to `n` are central.
    pub fn new(target: &SimpleGraph, n: usize, symmetry_cap: usize) -> Self {
        assert!(n < 64, "domains are 64-bit masks");
        let nv = target.order();
        let central = |x: usize| x >= nv;
        let full = (1u64 << n) - 1;
        let centre_mask = full & !((1u64 << nv) - 1);
        // elements commuting with x
        let commuting: Vec<u64> = (0..n)
            .map(|x| {
                if central(x) {
                    full
                } else {
                    target.neighbors(x).iter().fold(centre_mask | 1 << x, |m, &y| m | 1 << y)
                }
            })
            .collect();
        let mut link = vec![Link::Diagonal; n * n];
        let mut initial = vec![full; n * n];
        for a in 0..n {
            for b in 0..n {
                let cell = a * n + b;
                let commute = a == b || central(a) || central(b) || target.has_edge(a, b);
                if a != b {
                    link[cell] = if commute { Link::Equal } else { Link::Different };
                }
                if commute {
                    // ab commutes with a and with b
                    initial[cell] &= commuting[a] & commuting[b];
                }
                if central(a) && central(b) {
                    initial[cell] &= centre_mask;
                }
            }
        }
        let symmetries = symmetry_group(target, n, symmetry_cap);
        Self {
            n,
            link,
            initial,
            symmetries,
        }
    }

    /// Initial state with every singleton domain propagated; `None` if the
    /// constraints are already contradictory.
    pub fn root(&self) -> Option<State> {
        let mut s = State {
            dom: self.initial.clone(),
            val: vec![UNSET; self.n * self.n],
            unset: self.n * self.n,
        };
        let mut queue = Vec::new();
        for cell in 0..self.n * self.n {
            match s.dom[cell].count_ones() {
                0 => return None,
                1 => {
                    let v = s.dom[cell].trailing_zeros() as u8;
                    if !self.assign(&mut s, cell, v, &mut queue) {
                        return None;
                    }
                }
                _ => {}
            }
        }
        (self.propagate(&mut s, &mut queue) && self.lex_leader_possible(&s)).then_some(s)
    }

    pub fn is_complete(&self, s: &State) -> bool {
        s.unset == 0
    }

    pub fn entries(&self, s: &State) -> Vec<u32> {
        s.val.iter().map(|&v| u32::from(v)).collect()
    }

    /// Children of `s` in branching order, each already propagated. Every
    /// attempted value counts as a node.
    pub fn children(&self, s: &State, limits: &Limits) -> Option<Vec<State>> {
        let cell = self.branch_cell(s);
        let mut out = Vec::new();
        let mut values = s.dom[cell];
        while values != 0 {
            let v = values.trailing_zeros() as u8;
            values &= values - 1;
            if !limits.tick() {
                return None;
            }
            let mut child = s.clone();
            let mut queue = Vec::new();
            if self.assign(&mut child, cell, v, &mut queue)
                && self.propagate(&mut child, &mut queue)
                && self.lex_leader_possible(&child)
            {
                out.push(child);
            }
        }
        Some(out)
    }

    /// Depth-first search below `s`; returns false if stopped early.
    pub fn explore(&self, s: State, limits: &Limits, found: &mut dyn FnMut(Vec<u32>)) -> bool {
        if self.is_complete(&s) {
            found(self.entries(&s));
            return true;
        }
        let cell = self.branch_cell(&s);
        let mut values = s.dom[cell];
        while values != 0 {
            let v = values.trailing_zeros() as u8;
            values &= values - 1;
            if !limits.tick() {
                return false;
            }
            let mut child = s.clone();
            let mut queue = Vec::new();
            if self.assign(&mut child, cell, v, &mut queue)
                && self.propagate(&mut child, &mut queue)
                && self.lex_leader_possible(&child)
                && !self.explore(child, limits, found)
            {
                return false;
            }
        }
        true
    }

    /// Unset cell with the fewest candidates, first in row-major order.
    fn branch_cell(&self, s: &State) -> usize {
        (0..self.n * self.n)
            .filter(|&c| s.val[c] == UNSET)
            .min_by_key(|&c| s.dom[c].count_ones())
            .expect("called on an incomplete state")
    }

    fn assign(&self, s: &mut State, cell: usize, v: u8, queue: &mut Vec<usize>) -> bool {
        if s.val[cell] != UNSET {
            return s.val[cell] == v;
        }
        if s.dom[cell] & 1 << v == 0 {
            return false;
        }
        s.val[cell] = v;
        s.dom[cell] = 1 << v;
        s.unset -= 1;
        queue.push(cell);
        true
    }

    fn remove(&self, s: &mut State, cell: usize, v: u8, queue: &mut Vec<usize>) -> bool {
        if s.val[cell] != UNSET {
            return s.val[cell] != v;
        }
        s.dom[cell] &= !(1 << v);
        match s.dom[cell].count_ones() {
            0 => false,
            1 => {
                let only = s.dom[cell].trailing_zeros() as u8;
                self.assign(s, cell, only, queue)
            }
            _ => true,
        }
    }

    /// Makes cells `c1` and `c2` equal if either is known.
    fn unify(&self, s: &mut State, c1: usize, c2: usize, queue: &mut Vec<usize>) -> bool {
        match (s.val[c1], s.val[c2]) {
            (UNSET, UNSET) => true,
            (UNSET, v) => self.assign(s, c1, v, queue),
            (v, UNSET) => self.assign(s, c2, v, queue),
            (v, w) => v == w,
        }
    }

    fn propagate(&self, s: &mut State, queue: &mut Vec<usize>) -> bool {
        let n = self.n;
        while let Some(cell) = queue.pop() {
            let (a, b) = (cell / n, cell % n);
            let v = s.val[cell] as usize;
            let transpose = b * n + a;
            let ok = match self.link[cell] {
                Link::Diagonal => true,
                Link::Equal => self.assign(s, transpose, v as u8, queue),
                Link::Different => self.remove(s, transpose, v as u8, queue),
            };
            if !ok {
                return false;
            }
            for c in 0..n {
                // (ab)c = a(bc)
                let bc = s.val[b * n + c];
                if bc != UNSET && !self.unify(s, v * n + c, a * n + bc as usize, queue) {
                    return false;
                }
                // (ca)b = c(ab)
                let ca = s.val[c * n + a];
                if ca != UNSET && !self.unify(s, ca as usize * n + b, c * n + v, queue) {
                    return false;
                }
            }
            for x in 0..n {
                for y in 0..n {
                    let xy = s.val[x * n + y] as usize;
                    // a = xy: (xy)b = x(yb)
                    if xy == a {
                        let yb = s.val[y * n + b];
                        if yb != UNSET && !self.assign(s, x * n + yb as usize, v as u8, queue) {
                            return false;
                        }
                    }
                    // b = xy: a(xy) = (ax)y
                    if xy == b {
                        let ax = s.val[a * n + x];
                        if ax != UNSET && !self.assign(s, ax as usize * n + y, v as u8, queue) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// False if some symmetry maps the table to one that is already known
    /// to be smaller in row-major order.
    fn lex_leader_possible(&self, s: &State) -> bool {
        let n = self.n;
        'perms: for (pi, inv) in &self.symmetries {
            for i in 0..n {
                for j in 0..n {
                    let mine = s.val[i * n + j];
                    let theirs = s.val[inv[i] as usize * n + inv[j] as usize];
                    if mine == UNSET || theirs == UNSET {
                        continue 'perms;
                    }
                    let theirs = pi[theirs as usize];
                    if mine < theirs {
                        continue 'perms;
                    }
                    if mine > theirs {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Automorphisms of the target extended by permutations of the central
/// elements, without the identity, capped at `cap` elements.
fn symmetry_group(target: &SimpleGraph, n: usize, cap: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
    let nv = target.order();
    let vertex_perms = automorphisms(target, cap.max(1));
    let central: Vec<u8> = (nv as u8..n as u8).collect();
    let central_perms = permutations(&central, cap.max(1));
    let mut out = Vec::new();
    'all: for vp in &vertex_perms {
        for cp in &central_perms {
            let pi: Vec<u8> = vp.iter().map(|&x| x as u8).chain(cp.iter().copied()).collect();
            if pi.iter().enumerate().all(|(i, &x)| i == x as usize) {
                continue;
            }
            let mut inv = vec![0u8; n];
            for (i, &x) in pi.iter().enumerate() {
                inv[x as usize] = i as u8;
            }
            out.push((pi, inv));
            if out.len() + 1 >= cap {
                break 'all;
            }
        }
    }
    out
}

fn permutations(items: &[u8], cap: usize) -> Vec<Vec<u8>> {
    let mut out = vec![items.to_vec()];
    let mut current = items.to_vec();
    let k = current.len();
    while out.len() < cap {
        let Some(i) = (1..k).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..k).rev().find(|&j| current[j] > current[i - 1]).expect("a larger entry exists");
        current.swap(i - 1, j);
        current[i..].reverse();
        out.push(current.clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, GraphSpec};

    fn count(target: &str, n: usize, cap: usize) -> (usize, u64) {
        let g = build_graph(&target.parse::<GraphSpec>().unwrap()).unwrap();
        let p = Problem::new(&g, n, cap);
        let nodes = AtomicU64::new(0);
        let stopped = AtomicBool::new(false);
        let limits = Limits {
            max_nodes: u64::MAX,
            deadline: None,
            nodes: &nodes,
            stopped: &stopped,
        };
        let mut found = 0;
        if let Some(root) = p.root() {
            assert!(p.explore(root, &limits, &mut |_| found += 1));
        }
        (found, nodes.load(Ordering::Relaxed))
    }

    #[test]
    fn symmetry_breaking_keeps_every_orbit() {
        // without symmetry breaking every relabeling by an automorphism of C4
        // is found; with it, fewer tables remain but at least one
        let (all, _) = count("C4", 4, 1);
        let (leaders, _) = count("C4", 4, 1000);
        assert!(all >= 2 && leaders >= 1 && leaders < all, "{all} {leaders}");
    }

    #[test]
    fn five_cycle_has_no_centrefree_table() {
        assert_eq!(count("C5", 5, 1000).0, 0);
    }

    #[test]
    fn permutations_are_lexicographic() {
        assert_eq!(permutations(&[4, 5, 6], 10).len(), 6);
        assert_eq!(permutations(&[], 10), vec![Vec::<u8>::new()]);
    }
}
