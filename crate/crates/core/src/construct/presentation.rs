//! Cyclic, abelian and metacyclic groups from their presentations.
//!
//! A metacyclic group `⟨a, b | a^n, b^m = a^s, b·a·b⁻¹ = a^r⟩` has normal
//! form `a^i b^j` (`i < n`, `j < m`), stored at index `i + n·j`. Then
//! `a^i b^j · a^k b^l = a^(i + k·r^j) b^(j + l)`, and `b^m` folds to `a^s`.

use super::ConstructError;
use crate::table::CayleyTable;

pub fn cyclic(n: usize) -> Result<CayleyTable, ConstructError> {
    if n == 0 {
        return Err(ConstructError::BadSpec("cyclic group of order 0".into()));
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    Ok(CayleyTable::from_fn(n, |a, b| (a + b) % n)?.with_labels(labels)?)
}

/// Direct product of cyclic groups; `(x1, ..., xk)` is indexed
/// lexicographically with the first factor most significant.
pub fn abelian(orders: &[usize]) -> Result<CayleyTable, ConstructError> {
    let Some((&first, rest)) = orders.split_first() else {
        return Err(ConstructError::BadSpec("empty list of cyclic factors".into()));
    };
    let mut t = cyclic(first)?.without_labels();
    for &n in rest {
        t = t.direct_product(&cyclic(n)?);
    }
    Ok(t)
}

fn pow_mod(base: usize, exp: usize, modulus: usize) -> usize {
    (0..exp).fold(1 % modulus, |acc, _| acc * base % modulus)
}

fn metacyclic(n: usize, m: usize, r: usize, s: usize) -> Result<CayleyTable, ConstructError> {
    if pow_mod(r, m, n) != 1 % n || (s * r) % n != s % n {
        return Err(ConstructError::BadSpec(format!("inconsistent metacyclic data n={n} m={m} r={r} s={s}")));
    }
    let twist: Vec<usize> = (0..m).map(|j| pow_mod(r, j, n)).collect();
    let order = n * m;
    let t = CayleyTable::from_fn(order, |x, y| {
        let (i, j) = (x % n, x / n);
        let (k, l) = (y % n, y / n);
        let mut a = (i + k * twist[j]) % n;
        let mut b = j + l;
        if b >= m {
            b -= m;
            a = (a + s) % n;
        }
        a + n * b
    })?;
    let labels = (0..order)
        .map(|x| {
            let (i, j) = (x % n, x / n);
            let part = |g: char, e: usize| match e {
                0 => String::new(),
                1 => g.to_string(),
                _ => format!("{g}{e}"),
            };
            let word = part('a', i) + &part('b', j);
            if word.is_empty() {
                "1".to_string()
            } else {
                word
            }
        })
        .collect();
    Ok(t.with_labels(labels)?)
}

/// `D_order`, order `2n` with `n >= 2`.
pub fn dihedral(order: usize) -> Result<CayleyTable, ConstructError> {
    if order < 4 || order % 2 != 0 {
        return Err(ConstructError::BadSpec(format!("dihedral order must be even and at least 4, got {order}")));
    }
    let n = order / 2;
    metacyclic(n, 2, n - 1, 0)
}

/// `SD_order` with `a^b = a^(n/2 - 1)`, order `2n` where `n = 2^k >= 8`.
pub fn semidihedral(order: usize) -> Result<CayleyTable, ConstructError> {
    if order < 16 || !order.is_power_of_two() {
        return Err(ConstructError::BadSpec(format!(
            "semidihedral order must be a power of two at least 16, got {order}"
        )));
    }
    let n = order / 2;
    metacyclic(n, 2, n / 2 - 1, 0)
}

/// `Q_order`, order `4n` with `n >= 2`: `a^(2n) = 1, b² = a^n, a^b = a⁻¹`.
pub fn quaternion(order: usize) -> Result<CayleyTable, ConstructError> {
    if order < 8 || order % 4 != 0 {
        return Err(ConstructError::BadSpec(format!(
            "generalised quaternion order must be a multiple of 4 and at least 8, got {order}"
        )));
    }
    let n = order / 4;
    metacyclic(2 * n, 2, 2 * n - 1, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn involutions(t: &CayleyTable) -> usize {
        let e = t.identity().unwrap();
        t.elements().filter(|&x| x != e && t.mul(x, x) == e).count()
    }

    #[test]
    fn family_orders_and_involutions() {
        let d8 = dihedral(8).unwrap();
        assert!(d8.is_group());
        assert_eq!(involutions(&d8), 5);
        let q8 = quaternion(8).unwrap();
        assert!(q8.is_group());
        assert_eq!(involutions(&q8), 1);
        let sd16 = semidihedral(16).unwrap();
        assert!(sd16.is_group());
        assert_eq!(involutions(&sd16), 5);
        assert!(!sd16.is_abelian());
        assert_eq!(quaternion(16).unwrap().centre().len(), 2);
    }

    #[test]
    fn bad_orders() {
        assert!(dihedral(3).is_err());
        assert!(semidihedral(8).is_err());
        assert!(semidihedral(24).is_err());
        assert!(quaternion(6).is_err());
        assert!(cyclic(0).is_err());
    }

    #[test]
    fn d4_is_klein() {
        let d4 = dihedral(4).unwrap();
        assert!(d4.is_abelian());
        assert_eq!(involutions(&d4), 3);
    }

    #[test]
    fn abelian_products() {
        let t = abelian(&[3, 3]).unwrap();
        assert_eq!(t.order(), 9);
        assert!(t.is_abelian());
        assert!(t.elements().all(|x| t.element_order(x).unwrap() <= 3));
    }
}
