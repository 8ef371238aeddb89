//! Table-driven arithmetic in `GF(q)` for small prime powers `q`.

/// Finite field with `q = p^k <= 256` elements. Elements are `0..q`, read
/// as base-`p` digit vectors of polynomials modulo a fixed irreducible.
#[derive(Debug, Clone)]
pub struct SmallField {
    q: usize,
    p: usize,
    add: Vec<u8>,
    mul: Vec<u8>,
    neg: Vec<u8>,
    inv: Vec<u8>,
}

/// `Some((p, k))` when `q = p^k` for a prime `p` and `k >= 1`.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl SmallField {
    pub fn new(q: u64) -> Option<Self> {
        let (p, k) = prime_power(q)?;
        if q > 256 {
            return None;
        }
        let (p, k, q) = (p as usize, k as usize, q as usize);
        let modulus = find_irreducible(p, k);
        let digits = |x: usize| -> Vec<usize> { (0..k).map(|i| (x / p.pow(i as u32)) % p).collect() };
        let pack = |d: &[usize]| -> usize { d.iter().rev().fold(0, |acc, &x| acc * p + x) };

        let mut add = vec![0u8; q * q];
        let mut mul = vec![0u8; q * q];
        for x in 0..q {
            let dx = digits(x);
            for y in 0..q {
                let dy = digits(y);
                let s: Vec<usize> = dx.iter().zip(&dy).map(|(a, b)| (a + b) % p).collect();
                add[x * q + y] = pack(&s) as u8;
                // schoolbook product, then reduce by the monic modulus
                let mut prod = vec![0usize; 2 * k];
                for (i, a) in dx.iter().enumerate() {
                    for (j, b) in dy.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + a * b) % p;
                    }
                }
                for deg in (k..2 * k).rev() {
                    let c = prod[deg];
                    if c != 0 {
                        for (i, m) in modulus.iter().enumerate().take(k) {
                            let slot = deg - k + i;
                            prod[slot] = (prod[slot] + p * p - c * m % p) % p;
                        }
                        prod[deg] = 0;
                    }
                }
                mul[x * q + y] = pack(&prod[..k]) as u8;
            }
        }
        let neg = (0..q)
            .map(|x| (0..q).find(|&y| add[x * q + y] == 0).expect("additive inverse") as u8)
            .collect();
        let inv = (0..q)
            .map(|x| if x == 0 { 0 } else { (1..q).find(|&y| mul[x * q + y] == 1).expect("field") as u8 })
            .collect();
        Some(Self { q, p, add, mul, neg, inv })
    }

    pub fn order(&self) -> u64 {
        self.q as u64
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    #[inline]
    pub fn add(&self, x: u8, y: u8) -> u8 {
        self.add[x as usize * self.q + y as usize]
    }

    #[inline]
    pub fn sub(&self, x: u8, y: u8) -> u8 {
        self.add(x, self.neg[y as usize])
    }

    #[inline]
    pub fn mul(&self, x: u8, y: u8) -> u8 {
        self.mul[x as usize * self.q + y as usize]
    }

    #[inline]
    pub fn neg(&self, x: u8) -> u8 {
        self.neg[x as usize]
    }

    /// Multiplicative inverse; `x` must be nonzero.
    #[inline]
    pub fn inv(&self, x: u8) -> u8 {
        debug_assert!(x != 0);
        self.inv[x as usize]
    }
}

/// Coefficients `c_0..c_(k-1)` of a monic irreducible `x^k + ...` over `F_p`
/// (for `k = 1`, the polynomial `x`).
fn find_irreducible(p: usize, k: usize) -> Vec<usize> {
    if k == 1 {
        return vec![0];
    }
    let total = p.pow(k as u32);
    for code in 0..total {
        let low: Vec<usize> = (0..k).map(|i| (code / p.pow(i as u32)) % p).collect();
        let mut f = low.clone();
        f.push(1);
        if is_irreducible(&f, p) {
            return low;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn is_irreducible(f: &[usize], p: usize) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g: Vec<usize> = (0..d).map(|i| (code / p.pow(i as u32)) % p).collect();
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

fn poly_rem(f: &[usize], g: &[usize], p: usize) -> Vec<usize> {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    while r.len() > dg {
        let c = *r.last().expect("nonempty");
        let shift = r.len() - 1 - dg;
        for (i, gi) in g.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p * p - c * gi % p) % p;
        }
        r.pop();
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    #[test]
    fn field_axioms() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = SmallField::new(q).unwrap();
            let n = q as u8;
            for x in 0..n {
                assert_eq!(f.add(x, 0), x);
                assert_eq!(f.mul(x, 1), x);
                assert_eq!(f.add(x, f.neg(x)), 0);
                if x != 0 {
                    assert_eq!(f.mul(x, f.inv(x)), 1, "q={q} x={x}");
                }
                for y in 0..n {
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in 0..n {
                        assert_eq!(f.mul(x, f.add(y, z)), f.add(f.mul(x, y), f.mul(x, z)));
                    }
                }
            }
            // multiplicative group is cyclic of order q - 1, so x^(q-1) = 1
            for x in 1..n {
                let mut acc = 1;
                for _ in 0..q - 1 {
                    acc = f.mul(acc, x);
                }
                assert_eq!(acc, 1);
            }
        }
    }
}
