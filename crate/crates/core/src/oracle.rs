//! Brute-force submodule counting over prime fields.
//!
//! A descriptor is realized as an explicit pair of matrices over `F_p` and
//! submodules of a given dimension vector are counted by enumerating
//! subspaces. Nothing here uses the Gaussian coefficient code or the
//! engine, so the two can be compared.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::kronecker_model::{Indecomposable, KroneckerDescriptor};

/// Largest ambient dimension accepted by [`enumerate_subspaces`].
pub const MAX_ENUM_DIM: usize = 6;

/// Primes accepted by [`enumerate_subspaces`].
pub const ENUM_PRIMES: [u64; 3] = [2, 3, 5];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("{requested} points of degree {degree} requested but F_{p} has only {available}")]
    NotEnoughPoints {
        p: u64,
        degree: u32,
        requested: usize,
        available: usize,
    },
    #[error("subspace enumeration is limited to k <= n <= {MAX_ENUM_DIM} and p in {{2, 3, 5}} (got n={n}, k={k}, p={p})")]
    OutOfGuard { n: usize, k: usize, p: u64 },
    #[error("representations are over different fields (F_{0} and F_{1})")]
    FieldMismatch(u64, u64),
}

/// Dense matrix over `F_p`, entries kept in `0..p`.
#[derive(Clone, PartialEq, Eq)]
pub struct FpMatrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

impl FpMatrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Self {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Self::zeros(p, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Builds a matrix from row vectors; entries are reduced mod `p`.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged rows");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, x.rem_euclid(p as i64) as u64);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zeros(self.p, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let v = (out.get(i, j) + x * other.get(k, j)) % self.p;
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rank_of(self.p, (0..self.rows).map(|i| self.row(i).to_vec()).collect())
    }

    fn place(&mut self, block: &FpMatrix, r0: usize, c0: usize) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
    }
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let r: Vec<String> = self.row(i).iter().map(u64::to_string).collect();
                r.join(" ")
            })
            .collect();
        write!(f, "F{}[{}]", self.p, rows.join("; "))
    }
}

/// A representation of the Kronecker quiver over `F_p`: two maps from the
/// vertex-2 space to the vertex-1 space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRep {
    pub p: u64,
    pub dim1: usize,
    pub dim2: usize,
    /// `dim1 x dim2`
    pub alpha: FpMatrix,
    /// `dim1 x dim2`
    pub beta: FpMatrix,
}

/// Realizes `m` over `F_p` with standard matrix models.
///
/// Degree-one points are `lambda = 0, 1, ..., p - 1` and then infinity;
/// points of degree `d > 1` are monic irreducible polynomials of degree `d`
/// in lexicographic order. Distinct labels get distinct points.
pub fn build_rep(m: &KroneckerDescriptor, p: u64) -> Result<MatrixRep, OracleError> {
    build_rep_with_offset(m, p, 0)
}

/// Like [`build_rep`], but the `i`-th label of each degree gets point number
/// `i + offset` (cyclically), giving a different but isomorphic-in-count
/// realization.
pub fn build_rep_with_offset(m: &KroneckerDescriptor, p: u64, offset: usize) -> Result<MatrixRep, OracleError> {
    if !is_prime(p) {
        return Err(OracleError::NotPrime(p));
    }
    // choose points
    let mut by_degree: BTreeMap<u32, Vec<&str>> = BTreeMap::new();
    for point in m.regulars().keys() {
        by_degree.entry(point.degree()).or_default().push(point.id());
    }
    let mut chosen: BTreeMap<&str, Point> = BTreeMap::new();
    for (&degree, ids) in &by_degree {
        let available = points_of_degree(p, degree);
        if ids.len() > available.len() {
            return Err(OracleError::NotEnoughPoints {
                p,
                degree,
                requested: ids.len(),
                available: available.len(),
            });
        }
        for (i, id) in ids.iter().enumerate() {
            chosen.insert(id, available[(i + offset) % available.len()].clone());
        }
    }

    let mut blocks: Vec<(FpMatrix, FpMatrix)> = Vec::new();
    for (x, mult) in m.summands() {
        let block = match &x {
            Indecomposable::Preprojective(n) => preprojective_block(p, *n as usize),
            Indecomposable::Preinjective(n) => preinjective_block(p, *n as usize),
            Indecomposable::Regular { point, length } => regular_block(p, &chosen[point.id()], *length as usize),
        };
        for _ in 0..mult {
            blocks.push(block.clone());
        }
    }
    let dim1: usize = blocks.iter().map(|(a, _)| a.rows).sum();
    let dim2: usize = blocks.iter().map(|(a, _)| a.cols).sum();
    let mut alpha = FpMatrix::zeros(p, dim1, dim2);
    let mut beta = FpMatrix::zeros(p, dim1, dim2);
    let (mut r, mut c) = (0, 0);
    for (a, b) in &blocks {
        alpha.place(a, r, c);
        beta.place(b, r, c);
        r += a.rows;
        c += a.cols;
    }
    Ok(MatrixRep {
        p,
        dim1,
        dim2,
        alpha,
        beta,
    })
}

#[derive(Debug, Clone)]
enum Point {
    Finite(u64),
    Infinity,
    /// low-order coefficients of a monic irreducible
    Irreducible(Vec<u64>),
}

fn points_of_degree(p: u64, degree: u32) -> Vec<Point> {
    if degree == 1 {
        let mut v: Vec<Point> = (0..p).map(Point::Finite).collect();
        v.push(Point::Infinity);
        v
    } else {
        irreducibles(p, degree).into_iter().map(Point::Irreducible).collect()
    }
}

fn preprojective_block(p: u64, n: usize) -> (FpMatrix, FpMatrix) {
    let mut alpha = FpMatrix::zeros(p, n + 1, n);
    let mut beta = FpMatrix::zeros(p, n + 1, n);
    for i in 0..n {
        alpha.set(i, i, 1);
        beta.set(i + 1, i, 1);
    }
    (alpha, beta)
}

fn preinjective_block(p: u64, n: usize) -> (FpMatrix, FpMatrix) {
    let mut alpha = FpMatrix::zeros(p, n, n + 1);
    let mut beta = FpMatrix::zeros(p, n, n + 1);
    for i in 0..n {
        alpha.set(i, i, 1);
        beta.set(i, i + 1, 1);
    }
    (alpha, beta)
}

fn regular_block(p: u64, point: &Point, t: usize) -> (FpMatrix, FpMatrix) {
    match point {
        Point::Finite(lambda) => (FpMatrix::identity(p, t), jordan_block(p, &[*lambda], t)),
        Point::Infinity => (jordan_block(p, &[0], t), FpMatrix::identity(p, t)),
        Point::Irreducible(f) => {
            (FpMatrix::identity(p, f.len() * t), jordan_block(p, f, t))
        }
    }
}

/// Block Jordan matrix with `t` companion blocks on the diagonal and
/// identities above it. A one-entry `f` is read as the eigenvalue itself.
fn jordan_block(p: u64, f: &[u64], t: usize) -> FpMatrix {
    let c = if f.len() == 1 {
        FpMatrix::from_rows(p, &[vec![f[0] as i64]])
    } else {
        companion(p, f)
    };
    let d = c.rows;
    let mut j = FpMatrix::zeros(p, d * t, d * t);
    for k in 0..t {
        j.place(&c, k * d, k * d);
        if k + 1 < t {
            j.place(&FpMatrix::identity(p, d), k * d, (k + 1) * d);
        }
    }
    j
}

/// Companion matrix of `x^d + f[d-1] x^(d-1) + ... + f[0]`.
pub fn companion(p: u64, f: &[u64]) -> FpMatrix {
    let d = f.len();
    let mut c = FpMatrix::zeros(p, d, d);
    for i in 1..d {
        c.set(i, i - 1, 1);
    }
    for (i, &fi) in f.iter().enumerate() {
        c.set(i, d - 1, (p - fi % p) % p);
    }
    c
}

/// Monic irreducible polynomials of degree `d` over `F_p`, as their low
/// order coefficients `[f_0, ..., f_(d-1)]`, in lexicographic order.
pub fn irreducibles(p: u64, d: u32) -> Vec<Vec<u64>> {
    let total = p.pow(d);
    (0..total)
        .map(|code| (0..d).map(|i| code / p.pow(i) % p).collect::<Vec<u64>>())
        .filter(|low| {
            let mut f = low.clone();
            f.push(1);
            is_irreducible(&f, p)
        })
        .collect()
}

fn is_irreducible(f: &[u64], p: u64) -> bool {
    let deg = f.len() - 1;
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g: Vec<u64> = (0..d).map(|i| code / p.pow(i as u32) % p).collect();
            g.push(1);
            let mut r = f.to_vec();
            while r.len() > d {
                let lead = *r.last().expect("nonempty");
                let shift = r.len() - 1 - d;
                for (i, gi) in g.iter().enumerate() {
                    r[shift + i] = (r[shift + i] + p * p - lead * gi % p) % p;
                }
                r.pop();
            }
            if r.iter().all(|&x| x == 0) {
                return false;
            }
        }
    }
    true
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

fn inv_mod(x: u64, p: u64) -> u64 {
    let (mut base, mut e, mut acc) = (x % p, p - 2, 1u64);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

/// Row reduces in place; returns the rank.
#[allow(clippy::needless_range_loop)]
fn eliminate(p: u64, rows: &mut [Vec<u64>]) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        for x in rows[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let factor = rows[r][col];
                for c in 0..cols {
                    rows[r][c] = (rows[r][c] + p * p - factor * rows[rank][c]) % p;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn rank_of(p: u64, mut rows: Vec<Vec<u64>>) -> usize {
    eliminate(p, &mut rows)
}

/// Number of `k`-dimensional subspaces of `F_p^n`, by counting ordered
/// bases.
pub fn subspace_count(n: usize, k: usize, p: u64) -> u64 {
    if k > n {
        return 0;
    }
    let (mut num, mut den) = (1u128, 1u128);
    let pn = (p as u128).pow(n as u32);
    let pk = (p as u128).pow(k as u32);
    for i in 0..k as u32 {
        num *= pn - (p as u128).pow(i);
        den *= pk - (p as u128).pow(i);
    }
    (num / den) as u64
}

/// All `k`-dimensional subspaces of `F_p^n` as reduced row echelon basis
/// matrices (`k x n`), ordered by pivot columns and then lexicographically
/// by free entries.
pub fn enumerate_subspaces(n: usize, k: usize, p: u64) -> Result<Vec<FpMatrix>, OracleError> {
    if k > n || n > MAX_ENUM_DIM || !ENUM_PRIMES.contains(&p) {
        return Err(OracleError::OutOfGuard { n, k, p });
    }
    Ok(subspaces(n, k, p))
}

fn subspaces(n: usize, k: usize, p: u64) -> Vec<FpMatrix> {
    let mut out = Vec::new();
    let mut pivots = Vec::with_capacity(k);
    pivot_sets(n, k, 0, &mut pivots, &mut |piv| {
        // free positions: (row i, column j) with j > piv[i] and j not a pivot
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| ((piv[i] + 1)..n).filter(|j| !piv.contains(j)).map(move |j| (i, j)))
            .collect();
        let combos = p.pow(free.len() as u32);
        for code in 0..combos {
            let mut m = FpMatrix::zeros(p, k, n);
            for (i, &c) in piv.iter().enumerate() {
                m.set(i, c, 1);
            }
            let mut rest = code;
            for &(i, j) in free.iter().rev() {
                m.set(i, j, rest % p);
                rest /= p;
            }
            out.push(m);
        }
    });
    out
}

fn pivot_sets(n: usize, k: usize, start: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if acc.len() == k {
        f(acc);
        return;
    }
    for c in start..n {
        if n - c < k - acc.len() {
            break;
        }
        acc.push(c);
        pivot_sets(n, k, c + 1, acc, f);
        acc.pop();
    }
}

/// `dim (alpha(U) + beta(U))` for the subspace `U` spanned by the rows of
/// `basis`.
fn image_dim(rep: &MatrixRep, basis: &FpMatrix) -> usize {
    let mut rows = Vec::with_capacity(2 * basis.rows);
    for i in 0..basis.rows {
        for map in [&rep.alpha, &rep.beta] {
            let v: Vec<u64> = (0..rep.dim1)
                .map(|r| (0..rep.dim2).map(|c| map.get(r, c) * basis.get(i, c)).sum::<u64>() % rep.p)
                .collect();
            rows.push(v);
        }
    }
    rank_of(rep.p, rows)
}

/// Number of submodules with dimension vector `(a, b)`: pairs
/// `U1 <= F_p^dim1`, `U2 <= F_p^dim2` of those dimensions with
/// `alpha(U2) + beta(U2) <= U1`.
pub fn count_submodules(rep: &MatrixRep, a: i64, b: i64) -> u64 {
    if a < 0 || b < 0 || a as usize > rep.dim1 || b as usize > rep.dim2 {
        return 0;
    }
    let (a, b) = (a as usize, b as usize);
    subspaces(rep.dim2, b, rep.p)
        .iter()
        .map(|u2| {
            let w = image_dim(rep, u2);
            if w > a {
                0
            } else {
                subspace_count(rep.dim1 - w, a - w, rep.p)
            }
        })
        .sum()
}

/// [`count_submodules`] by enumerating both subspaces. Only for small
/// representations.
pub fn count_submodules_naive(rep: &MatrixRep, a: i64, b: i64) -> u64 {
    if a < 0 || b < 0 || a as usize > rep.dim1 || b as usize > rep.dim2 {
        return 0;
    }
    let (a, b) = (a as usize, b as usize);
    let lower = subspaces(rep.dim1, a, rep.p);
    let mut count = 0;
    for u2 in subspaces(rep.dim2, b, rep.p) {
        let images: Vec<Vec<u64>> = (0..b)
            .flat_map(|i| {
                [&rep.alpha, &rep.beta].map(|m| {
                    (0..rep.dim1)
                        .map(|r| (0..rep.dim2).map(|c| m.get(r, c) * u2.get(i, c)).sum::<u64>() % rep.p)
                        .collect::<Vec<u64>>()
                })
            })
            .collect();
        for u1 in &lower {
            let mut rows: Vec<Vec<u64>> = (0..a).map(|i| u1.row(i).to_vec()).collect();
            rows.extend(images.iter().cloned());
            if rank_of(rep.p, rows) == a {
                count += 1;
            }
        }
    }
    count
}

/// `table[a][b]` = number of submodules of dimension `(a, b)`, for all
/// `0 <= a <= dim1`, `0 <= b <= dim2`.
#[allow(clippy::needless_range_loop)]
pub fn submodule_table(rep: &MatrixRep) -> Vec<Vec<u64>> {
    let mut table = vec![vec![0u64; rep.dim2 + 1]; rep.dim1 + 1];
    for b in 0..=rep.dim2 {
        let mut by_w = vec![0u64; rep.dim1 + 1];
        for u2 in subspaces(rep.dim2, b, rep.p) {
            by_w[image_dim(rep, &u2)] += 1;
        }
        for (w, &k) in by_w.iter().enumerate() {
            if k == 0 {
                continue;
            }
            for a in w..=rep.dim1 {
                table[a][b] += k * subspace_count(rep.dim1 - w, a - w, rep.p);
            }
        }
    }
    table
}

/// `dim Hom(X, Y)`: the solution space of `f1 alpha_X = alpha_Y f2`,
/// `f1 beta_X = beta_Y f2`.
pub fn hom_dim_numeric(x: &MatrixRep, y: &MatrixRep) -> Result<u64, OracleError> {
    if x.p != y.p {
        return Err(OracleError::FieldMismatch(x.p, y.p));
    }
    let p = x.p;
    // unknowns: f1 is dimY1 x dimX1, then f2 is dimY2 x dimX2
    let n1 = y.dim1 * x.dim1;
    let unknowns = n1 + y.dim2 * x.dim2;
    let mut rows = Vec::new();
    for (mx, my) in [(&x.alpha, &y.alpha), (&x.beta, &y.beta)] {
        for i in 0..y.dim1 {
            for j in 0..x.dim2 {
                let mut eq = vec![0u64; unknowns];
                for k in 0..x.dim1 {
                    eq[i * x.dim1 + k] = (eq[i * x.dim1 + k] + mx.get(k, j)) % p;
                }
                for k in 0..y.dim2 {
                    let idx = n1 + k * x.dim2 + j;
                    eq[idx] = (eq[idx] + p - my.get(i, k)) % p;
                }
                rows.push(eq);
            }
        }
    }
    Ok((unknowns - rank_of(p, rows)) as u64)
}

/// One brute-force count, suitable as a test fixture.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleRecord {
    pub module: String,
    pub p: u64,
    pub a: i64,
    pub b: i64,
    pub count: u64,
}

/// Records for every dimension vector of `m` over `F_p`.
pub fn fixture_records(m: &KroneckerDescriptor, p: u64) -> Result<Vec<OracleRecord>, OracleError> {
    let rep = build_rep(m, p)?;
    let table = submodule_table(&rep);
    let module = m.to_string();
    Ok(table
        .iter()
        .enumerate()
        .flat_map(|(a, row)| {
            let module = module.clone();
            row.iter().enumerate().map(move |(b, &count)| OracleRecord {
                module: module.clone(),
                p,
                a: a as i64,
                b: b as i64,
                count,
            })
        })
        .collect())
}
