//! Submodule enumeration for finite modules over a discrete valuation ring.
//!
//! A finite module of type `lambda` is `O^r / L0` with
//! `L0 = diag(pi^lambda_1, ..., pi^lambda_r)`. Its submodules are in bijection
//! with the lattices `L0 ⊆ L ⊆ O^r`, and every such lattice has a unique
//! Hermite basis: upper triangular rows `h_i = (0, .., pi^e_i, x_(i,i+1), ..)`
//! with `x_(i,j)` a canonical residue modulo `pi^e_j`. The enumeration builds
//! these bases from the last row up and only ever visits lattices that
//! contain `L0`, so every leaf is one submodule.
//!
//! Two rings are provided: `Z / p^N` (submodules are subgroups of a finite
//! abelian p-group) and `F_q[t] / t^N` (invariant subspaces of a nilpotent
//! operator over `GF(q)`). Hall numbers agree for both when the residue
//! fields have the same size.

use std::collections::BTreeMap;

use super::field::SmallField;
use crate::kronecker_model::Partition;

/// Census key: `(type of the submodule, type of the quotient)`.
pub type TypePair = (Partition, Partition);

/// `O / pi^N` for a discrete valuation ring `O` with finite residue field.
pub trait TruncatedDvr {
    type Elem: Copy + Eq + std::fmt::Debug;

    fn residue_size(&self) -> u64;
    fn precision(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn add(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn sub(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    fn mul(&self, x: Self::Elem, y: Self::Elem) -> Self::Elem;
    /// Valuation, `precision()` for zero.
    fn valuation(&self, x: Self::Elem) -> u32;
    fn pi_pow(&self, k: u32) -> Self::Elem;
    /// `x / pi^k`; the low `k` digits of `x` must vanish.
    fn div_pi_pow(&self, x: Self::Elem, k: u32) -> Self::Elem;
    /// Inverse of a unit.
    fn unit_inverse(&self, x: Self::Elem) -> Self::Elem;
    /// Canonical residues modulo `pi^e`, each already reduced.
    fn residues(&self, e: u32) -> Vec<Self::Elem>;
    /// Canonical representative of `x mod pi^e`.
    fn reduce(&self, x: Self::Elem, e: u32) -> Self::Elem;

    fn neg(&self, x: Self::Elem) -> Self::Elem {
        self.sub(self.zero(), x)
    }
}

/// The ring `Z / p^N`.
#[derive(Debug, Clone)]
pub struct IntegersModPrimePower {
    p: u64,
    n: u32,
    modulus: u64,
}

impl IntegersModPrimePower {
    /// Panics when `p^n` does not fit comfortably in 63 bits.
    pub fn new(p: u64, n: u32) -> Self {
        let modulus = p
            .checked_pow(n)
            .filter(|m| *m < (1u64 << 62))
            .unwrap_or_else(|| panic!("{p}^{n} too large for Z/p^N arithmetic"));
        Self { p, n, modulus }
    }
}

impl TruncatedDvr for IntegersModPrimePower {
    type Elem = u64;

    fn residue_size(&self) -> u64 {
        self.p
    }

    fn precision(&self) -> u32 {
        self.n
    }

    fn zero(&self) -> u64 {
        0
    }

    fn add(&self, x: u64, y: u64) -> u64 {
        (x + y) % self.modulus
    }

    fn sub(&self, x: u64, y: u64) -> u64 {
        (x + self.modulus - y) % self.modulus
    }

    fn mul(&self, x: u64, y: u64) -> u64 {
        ((x as u128 * y as u128) % self.modulus as u128) as u64
    }

    fn valuation(&self, mut x: u64) -> u32 {
        if x == 0 {
            return self.n;
        }
        let mut v = 0;
        while x.is_multiple_of(self.p) {
            x /= self.p;
            v += 1;
        }
        v
    }

    fn pi_pow(&self, k: u32) -> u64 {
        if k >= self.n {
            0
        } else {
            self.p.pow(k)
        }
    }

    fn div_pi_pow(&self, x: u64, k: u32) -> u64 {
        debug_assert!(self.valuation(x) >= k);
        x / self.p.pow(k.min(self.n))
    }

    fn unit_inverse(&self, x: u64) -> u64 {
        // extended Euclid modulo p^N
        let (mut r0, mut r1) = (self.modulus as i128, x as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let qt = r0 / r1;
            (r0, r1) = (r1, r0 - qt * r1);
            (s0, s1) = (s1, s0 - qt * s1);
        }
        debug_assert_eq!(r0, 1, "{x} is not a unit");
        s0.rem_euclid(self.modulus as i128) as u64
    }

    fn residues(&self, e: u32) -> Vec<u64> {
        (0..self.p.pow(e)).collect()
    }

    fn reduce(&self, x: u64, e: u32) -> u64 {
        x % self.p.pow(e)
    }
}

/// Maximum precision of [`PowerSeriesMod`].
pub const MAX_SERIES_PRECISION: usize = 40;

/// The ring `GF(q)[t] / t^N`; elements are coefficient arrays, lowest first.
#[derive(Debug, Clone)]
pub struct PowerSeriesMod {
    field: SmallField,
    n: u32,
}

pub type Series = [u8; MAX_SERIES_PRECISION];

impl PowerSeriesMod {
    pub fn new(q: u64, n: u32) -> Self {
        assert!(n as usize <= MAX_SERIES_PRECISION, "series precision {n} too large");
        let field = SmallField::new(q).unwrap_or_else(|| panic!("{q} is not a small prime power"));
        Self { field, n }
    }
}

impl TruncatedDvr for PowerSeriesMod {
    type Elem = Series;

    fn residue_size(&self) -> u64 {
        self.field.order()
    }

    fn precision(&self) -> u32 {
        self.n
    }

    fn zero(&self) -> Series {
        [0; MAX_SERIES_PRECISION]
    }

    fn add(&self, x: Series, y: Series) -> Series {
        let mut out = x;
        for i in 0..self.n as usize {
            out[i] = self.field.add(x[i], y[i]);
        }
        out
    }

    fn sub(&self, x: Series, y: Series) -> Series {
        let mut out = x;
        for i in 0..self.n as usize {
            out[i] = self.field.sub(x[i], y[i]);
        }
        out
    }

    fn mul(&self, x: Series, y: Series) -> Series {
        let n = self.n as usize;
        let mut out = self.zero();
        for i in 0..n {
            if x[i] == 0 {
                continue;
            }
            for j in 0..n - i {
                out[i + j] = self.field.add(out[i + j], self.field.mul(x[i], y[j]));
            }
        }
        out
    }

    fn valuation(&self, x: Series) -> u32 {
        x[..self.n as usize].iter().position(|&c| c != 0).unwrap_or(self.n as usize) as u32
    }

    fn pi_pow(&self, k: u32) -> Series {
        let mut out = self.zero();
        if k < self.n {
            out[k as usize] = 1;
        }
        out
    }

    fn div_pi_pow(&self, x: Series, k: u32) -> Series {
        debug_assert!(self.valuation(x) >= k);
        let (n, k) = (self.n as usize, k as usize);
        let mut out = self.zero();
        if k < n {
            out[..n - k].copy_from_slice(&x[k..n]);
        }
        out
    }

    fn unit_inverse(&self, x: Series) -> Series {
        let n = self.n as usize;
        let inv0 = self.field.inv(x[0]);
        let mut out = self.zero();
        out[0] = inv0;
        // y_k = -inv0 * sum_{i=1..k} x_i y_(k-i)
        for k in 1..n {
            let mut acc = 0u8;
            for i in 1..=k {
                acc = self.field.add(acc, self.field.mul(x[i], out[k - i]));
            }
            out[k] = self.field.neg(self.field.mul(inv0, acc));
        }
        out
    }

    fn residues(&self, e: u32) -> Vec<Series> {
        let q = self.field.order() as usize;
        let e = e as usize;
        let total = q.pow(e as u32);
        (0..total)
            .map(|mut code| {
                let mut s = self.zero();
                for slot in s.iter_mut().take(e) {
                    *slot = (code % q) as u8;
                    code /= q;
                }
                s
            })
            .collect()
    }

    fn reduce(&self, x: Series, e: u32) -> Series {
        let mut out = x;
        for slot in out.iter_mut().skip(e as usize) {
            *slot = 0;
        }
        out
    }
}

/// Counts the submodules of the module of type `lambda` over `ring`,
/// grouped by `(submodule type, quotient type)`.
pub fn census<R: TruncatedDvr>(ring: &R, lambda: &Partition) -> BTreeMap<TypePair, u64> {
    let parts = lambda.parts();
    let r = parts.len();
    let needed = 2 * lambda.weight() + 2;
    assert!(ring.precision() >= needed, "ring precision {} below {needed}", ring.precision());
    let mut out = BTreeMap::new();
    if r == 0 {
        out.insert((Partition::empty(), Partition::empty()), 1);
        return out;
    }
    let mut state = Enumeration {
        ring,
        parts,
        rows: vec![vec![ring.zero(); r]; r],
        pivots: vec![0; r],
        out: &mut out,
    };
    state.place_row(r - 1);
    out
}

struct Enumeration<'a, R: TruncatedDvr> {
    ring: &'a R,
    parts: &'a [u32],
    rows: Vec<Vec<R::Elem>>,
    pivots: Vec<u32>,
    out: &'a mut BTreeMap<TypePair, u64>,
}

impl<R: TruncatedDvr> Enumeration<'_, R> {
    fn place_row(&mut self, i: usize) {
        let r = self.parts.len();
        for e in 0..=self.parts[i] {
            self.pivots[i] = e;
            let row = &mut self.rows[i];
            row.iter_mut().for_each(|x| *x = self.ring.zero());
            row[i] = self.ring.pi_pow(e);
            let k = self.parts[i] - e;
            let corrections = vec![self.ring.zero(); r];
            self.fill_entry(i, i + 1, k, corrections);
        }
    }

    /// Chooses `x_(i,j)` so that `pi^k * (x_(i,i+1), ..)` lies in the span of
    /// the rows below `i`; `corr` carries the reduction by rows `< j`.
    fn fill_entry(&mut self, i: usize, j: usize, k: u32, corr: Vec<R::Elem>) {
        let r = self.parts.len();
        if j == r {
            if i == 0 {
                self.record();
            } else {
                self.place_row(i - 1);
            }
            return;
        }
        let ring = self.ring;
        let ej = self.pivots[j];
        let c = corr[j];
        let candidates: Vec<R::Elem> = if k >= ej {
            if ring.valuation(c) < ej {
                return;
            }
            ring.residues(ej)
        } else {
            if ring.valuation(c) < k {
                return;
            }
            let base = ring.reduce(ring.neg(ring.div_pi_pow(c, k)), ej - k);
            let step = ring.pi_pow(ej - k);
            ring.residues(k)
                .into_iter()
                .map(|y| ring.add(base, ring.mul(step, y)))
                .collect()
        };
        let pk = ring.pi_pow(k);
        for x in candidates {
            self.rows[i][j] = x;
            let v = ring.add(ring.mul(pk, x), c);
            debug_assert!(ring.valuation(v) >= ej);
            let gamma = ring.div_pi_pow(v, ej);
            let mut next = corr.clone();
            for (jj, slot) in next.iter_mut().enumerate().skip(j + 1) {
                *slot = ring.sub(*slot, ring.mul(gamma, self.rows[j][jj]));
            }
            self.fill_entry(i, j + 1, k, next);
        }
        self.rows[i][j] = ring.zero();
    }

    #[allow(clippy::needless_range_loop)]
    fn record(&mut self) {
        let ring = self.ring;
        let r = self.parts.len();
        let quotient = elementary_divisors(ring, self.rows.clone());
        // Rows of L0 written in the Hermite basis: x H = pi^lambda_i e_i.
        let mut coords = vec![vec![ring.zero(); r]; r];
        for (i, row) in coords.iter_mut().enumerate() {
            row[i] = ring.pi_pow(self.parts[i] - self.pivots[i]);
            for j in i + 1..r {
                let mut acc = ring.zero();
                for kk in i..j {
                    acc = ring.sub(acc, ring.mul(row[kk], self.rows[kk][j]));
                }
                row[j] = ring.div_pi_pow(acc, self.pivots[j]);
            }
        }
        let sub = elementary_divisors(ring, coords);
        *self.out.entry((sub, quotient)).or_default() += 1;
    }
}

/// Type of `O^r / rowspan(m)` for a square matrix of full rank, read off
/// the valuations of its Smith form.
#[allow(clippy::needless_range_loop)]
fn elementary_divisors<R: TruncatedDvr>(ring: &R, mut m: Vec<Vec<R::Elem>>) -> Partition {
    let r = m.len();
    let mut vals = Vec::with_capacity(r);
    for s in 0..r {
        let mut best = (u32::MAX, s, s);
        for (i, row) in m.iter().enumerate().skip(s) {
            for (j, &x) in row.iter().enumerate().skip(s) {
                let v = ring.valuation(x);
                if v < best.0 {
                    best = (v, i, j);
                }
            }
        }
        let (v, pi, pj) = best;
        m.swap(s, pi);
        for row in m.iter_mut() {
            row.swap(s, pj);
        }
        vals.push(v);
        if v >= ring.precision() {
            continue;
        }
        let unit_inv = ring.unit_inverse(ring.div_pi_pow(m[s][s], v));
        for i in s + 1..r {
            let f = ring.mul(ring.div_pi_pow(m[i][s], v), unit_inv);
            if f == ring.zero() {
                continue;
            }
            for j in s..r {
                let t = ring.mul(f, m[s][j]);
                m[i][j] = ring.sub(m[i][j], t);
            }
        }
        for j in s + 1..r {
            let f = ring.mul(ring.div_pi_pow(m[s][j], v), unit_inv);
            if f == ring.zero() {
                continue;
            }
            for row in m.iter_mut().skip(s) {
                let t = ring.mul(f, row[s]);
                row[j] = ring.sub(row[j], t);
            }
        }
    }
    Partition::new(vals.into_iter().filter(|&v| v > 0).collect()).expect("positive parts")
}
