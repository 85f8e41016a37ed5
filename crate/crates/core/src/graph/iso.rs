//! Graph isomorphism by colour refinement with individualisation.
//!
//! Both graphs are refined together, so a colour means the same thing on
//! either side. A branch is abandoned as soon as some colour class has
//! different sizes in the two graphs.

use std::collections::HashMap;

use super::{SimpleGraph, Vertex};

/// An isomorphism `g1 -> g2` as a vertex map, if one exists.
pub fn graphs_isomorphic(g1: &SimpleGraph, g2: &SimpleGraph) -> Option<Vec<Vertex>> {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        return None;
    }
    let mut d1: Vec<usize> = (0..g1.order()).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..g2.order()).map(|v| g2.degree(v)).collect();
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return None;
    }
    let mut out = None;
    Matcher::new(g1, g2).run(&mut |m| {
        out = Some(m.to_vec());
        false
    });
    out
}

/// Up to `limit` automorphisms of `g`, the identity first.
pub fn automorphisms(g: &SimpleGraph, limit: usize) -> Vec<Vec<Vertex>> {
    let mut out: Vec<Vec<Vertex>> = vec![(0..g.order()).collect()];
    if limit <= 1 {
        out.truncate(limit);
        return out;
    }
    Matcher::new(g, g).run(&mut |m| {
        if m.iter().enumerate().any(|(i, &j)| i != j) {
            out.push(m.to_vec());
        }
        out.len() < limit
    });
    out
}

struct Matcher<'a> {
    g1: &'a SimpleGraph,
    g2: &'a SimpleGraph,
    n: usize,
}

impl<'a> Matcher<'a> {
    fn new(g1: &'a SimpleGraph, g2: &'a SimpleGraph) -> Self {
        Self { g1, g2, n: g1.order() }
    }

    fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let n = self.n;
        let (g, shift) = if v < n { (self.g1, 0) } else { (self.g2, n) };
        g.neighbors(v - shift).iter().map(move |&w| w + shift)
    }

    fn run(&self, found: &mut dyn FnMut(&[Vertex]) -> bool) {
        let colours = vec![0u32; 2 * self.n];
        if let Some(c) = self.refine(colours) {
            self.search(c, found);
        }
    }

    /// Refines to a stable colouring; `None` if the two sides disagree.
    fn refine(&self, mut colours: Vec<u32>) -> Option<Vec<u32>> {
        let total = 2 * self.n;
        let mut classes = count_distinct(&colours);
        loop {
            let signatures: Vec<(u32, Vec<u32>)> = (0..total)
                .map(|v| {
                    let mut ns: Vec<u32> = self.neighbors(v).map(|w| colours[w]).collect();
                    ns.sort_unstable();
                    (colours[v], ns)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<u32>)> = signatures.iter().collect();
            distinct.sort_unstable();
            distinct.dedup();
            let ids: HashMap<&(u32, Vec<u32>), u32> =
                distinct.iter().enumerate().map(|(i, &s)| (s, i as u32)).collect();
            colours = signatures.iter().map(|s| ids[s]).collect();
            if !self.balanced(&colours) {
                return None;
            }
            if distinct.len() == classes {
                return Some(colours);
            }
            classes = distinct.len();
        }
    }

    fn balanced(&self, colours: &[u32]) -> bool {
        let mut count: HashMap<u32, isize> = HashMap::new();
        for &c in &colours[..self.n] {
            *count.entry(c).or_default() += 1;
        }
        for &c in &colours[self.n..] {
            *count.entry(c).or_default() -= 1;
        }
        count.values().all(|&c| c == 0)
    }

    fn search(&self, colours: Vec<u32>, found: &mut dyn FnMut(&[Vertex]) -> bool) -> bool {
        let n = self.n;
        let mut size: HashMap<u32, usize> = HashMap::new();
        for &c in &colours[..n] {
            *size.entry(c).or_default() += 1;
        }
        let target = size
            .iter()
            .filter(|&(_, &s)| s > 1)
            .min_by_key(|&(&c, &s)| (s, c))
            .map(|(&c, _)| c);
        let Some(cell) = target else {
            let mut where2 = HashMap::new();
            for v in 0..n {
                where2.insert(colours[n + v], v);
            }
            let map: Vec<Vertex> = (0..n).map(|v| where2[&colours[v]]).collect();
            return if self.is_isomorphism(&map) { found(&map) } else { true };
        };
        let v = (0..n).find(|&v| colours[v] == cell).expect("cell is non-empty");
        let fresh = colours.iter().copied().max().unwrap_or(0) + 1;
        for w in (n..2 * n).filter(|&w| colours[w] == cell) {
            let mut next = colours.clone();
            next[v] = fresh;
            next[w] = fresh;
            if let Some(refined) = self.refine(next) {
                if !self.search(refined, found) {
                    return false;
                }
            }
        }
        true
    }

    fn is_isomorphism(&self, map: &[Vertex]) -> bool {
        self.g1
            .edges()
            .into_iter()
            .all(|(u, v)| self.g2.has_edge(map[u], map[v]))
    }
}

fn count_distinct(colours: &[u32]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}
