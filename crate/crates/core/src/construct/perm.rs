//! Symmetric and alternating groups as permutation tables.
//!
//! Permutations are listed in lexicographic order of their one-line form
//! and composed left to right: `(p·q)(i) = q(p(i))`.

use super::{table_from_elements, ConstructError};
use crate::table::CayleyTable;

pub const MAX_DEGREE: usize = 6;

fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(current.clone());
        // next permutation in lexicographic order
        let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).expect("a larger entry exists");
        current.swap(i - 1, j);
        current[i..].reverse();
    }
}

fn is_even(p: &[u8]) -> bool {
    let inversions: usize = (0..p.len())
        .map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count())
        .sum();
    inversions % 2 == 0
}

#[allow(clippy::ptr_arg)]
fn compose(p: &Vec<u8>, q: &Vec<u8>) -> Vec<u8> {
    p.iter().map(|&i| q[i as usize]).collect()
}

#[allow(clippy::ptr_arg)]
fn label(p: &Vec<u8>) -> String {
    p.iter().map(|d| char::from(b'0' + d)).collect()
}

fn check_degree(n: usize) -> Result<(), ConstructError> {
    if (1..=MAX_DEGREE).contains(&n) {
        Ok(())
    } else {
        Err(ConstructError::BadSpec(format!("permutation degree must be in 1..={MAX_DEGREE}, got {n}")))
    }
}

pub fn symmetric(n: usize) -> Result<CayleyTable, ConstructError> {
    check_degree(n)?;
    table_from_elements(&permutations(n), compose, label)
}

pub fn alternating(n: usize) -> Result<CayleyTable, ConstructError> {
    check_degree(n)?;
    let even: Vec<Vec<u8>> = permutations(n).into_iter().filter(|p| is_even(p)).collect();
    table_from_elements(&even, compose, label)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(alternating(5).unwrap().order(), 60);
        assert_eq!(alternating(1).unwrap().order(), 1);
        assert!(symmetric(7).is_err());
    }

    #[test]
    fn lexicographic_listing() {
        let s3 = symmetric(3).unwrap();
        let labels: Vec<String> = s3.elements().map(|e| s3.label(e)).collect();
        assert_eq!(labels, ["012", "021", "102", "120", "201", "210"]);
        // 021 then 102: 0->0->1, 1->2->2, 2->1->0
        assert_eq!(s3.label(s3.mul(1, 2)), "120");
    }
}
