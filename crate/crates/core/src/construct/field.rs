//! Small finite fields GF(p) and GF(p²) with full operation tables.
//!
//! GF(p²) is GF(p)[x]/(f) for the first monic irreducible quadratic `f`;
//! the element `a + b·x` has code `a + p·b`, so GF(p) sits inside as the
//! codes `0..p`.

#[derive(Debug, Clone)]
pub struct Field {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
    frobenius: Vec<u8>,
}

pub const SUPPORTED_ORDERS: [usize; 6] = [2, 3, 4, 5, 7, 9];

impl Field {
    pub fn new(q: usize) -> Option<Self> {
        let (p, degree) = match q {
            2 | 3 | 5 | 7 => (q, 1),
            4 => (2, 2),
            9 => (3, 2),
            _ => return None,
        };
        let (add, mul): (Vec<u8>, Vec<u8>) = if degree == 1 {
            let add = (0..q * q).map(|i| ((i / q + i % q) % q) as u8).collect();
            let mul = (0..q * q).map(|i| ((i / q) * (i % q) % q) as u8).collect();
            (add, mul)
        } else {
            // x² = c0 + c1·x for an irreducible x² − c1·x − c0
            let (c0, c1) = (0..p)
                .flat_map(|c0| (0..p).map(move |c1| (c0, c1)))
                .find(|&(c0, c1)| (0..p).all(|r| (r * r + p * p - c1 * r - c0) % p != 0))
                .expect("an irreducible quadratic exists");
            let split = |e: usize| (e % p, e / p);
            let mut add = vec![0; q * q];
            let mut mul = vec![0; q * q];
            for u in 0..q {
                for v in 0..q {
                    let ((a, b), (c, d)) = (split(u), split(v));
                    add[u * q + v] = ((a + c) % p + p * ((b + d) % p)) as u8;
                    // (a + bx)(c + dx) = ac + (ad + bc)x + bd·x²
                    let bd = b * d;
                    let lo = (a * c + bd * c0) % p;
                    let hi = (a * d + b * c + bd * c1) % p;
                    mul[u * q + v] = (lo + p * hi) as u8;
                }
            }
            (add, mul)
        };
        let neg = (0..q)
            .map(|a| (0..q).find(|&b| add[a * q + b] == 0).expect("additive inverse") as u8)
            .collect();
        let inv = (0..q)
            .map(|a| {
                if a == 0 {
                    0
                } else {
                    (1..q).find(|&b| mul[a * q + b] == 1).expect("multiplicative inverse") as u8
                }
            })
            .collect();
        let mut field = Self {
            q,
            p,
            add,
            mul,
            neg,
            inv,
            frobenius: Vec::new(),
        };
        field.frobenius = (0..q as u8).map(|a| field.pow(a, p)).collect();
        Some(field)
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> usize {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        self.add[a as usize * self.q + b as usize]
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        self.add(a, self.neg[b as usize])
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        self.mul[a as usize * self.q + b as usize]
    }

    /// Multiplicative inverse; zero maps to zero.
    pub fn inv(&self, a: u8) -> u8 {
        self.inv[a as usize]
    }

    pub fn pow(&self, a: u8, mut e: usize) -> u8 {
        let (mut base, mut acc) = (a, 1u8);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `a ↦ a^p`.
    pub fn frobenius(&self, a: u8) -> u8 {
        self.frobenius[a as usize]
    }

    pub fn elements(&self) -> impl Iterator<Item = u8> {
        0..self.q as u8
    }
}
