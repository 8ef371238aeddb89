//! Classical Hall polynomials and the diagonal count for regular modules.
//!
//! `g^lambda_(nu,mu)(x)` is the number of submodules of type `mu` with
//! quotient of type `nu` inside a module of type `lambda` over a discrete
//! valuation ring with residue field of size `x`. It is computed here by
//! exhaustive submodule enumeration at several residue field sizes followed
//! by exact interpolation; the number of samples is one more than the
//! degree bound `n(lambda) - n(mu) - n(nu)`.
//!
//! Prime sample points use finite abelian p-groups (`Z/p^N`); prime power
//! points use nilpotent operators over `GF(q)`. The prime 7 is never
//! sampled so it can serve as a held-out check.

mod field;
mod lattice;
mod naive;

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

pub use field::{prime_power, SmallField};
pub use lattice::{census, IntegersModPrimePower, PowerSeriesMod, TruncatedDvr, TypePair};
pub use naive::{naive_subgroup_census, MAX_NAIVE_ORDER};

use crate::kronecker_model::{KroneckerDescriptor, Partition};
use crate::qbinom::LaurentPoly;

/// Residue field sizes used for interpolation, in order of use.
pub const SAMPLE_POINTS: [u64; 14] = [2, 3, 4, 5, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27];

/// Prime excluded from [`SAMPLE_POINTS`].
pub const HELD_OUT_PRIME: u64 = 7;

/// Arguments of `g^lambda_(nu,mu)`: `nu` is the quotient type, `mu` the
/// submodule type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HallTriple {
    pub lambda: Partition,
    pub nu: Partition,
    pub mu: Partition,
}

impl HallTriple {
    pub fn new(lambda: Partition, nu: Partition, mu: Partition) -> Self {
        Self { lambda, nu, mu }
    }

    /// `|lambda| = |mu| + |nu|`, `mu ⊆ lambda` and `nu ⊆ lambda`; the
    /// polynomial vanishes whenever this fails.
    pub fn may_be_nonzero(&self) -> bool {
        self.lambda.weight() == self.mu.weight() + self.nu.weight()
            && self.lambda.contains(&self.mu)
            && self.lambda.contains(&self.nu)
    }

    /// `n(lambda) - n(mu) - n(nu)`.
    pub fn degree_bound(&self) -> i64 {
        self.lambda.n_value() as i64 - self.mu.n_value() as i64 - self.nu.n_value() as i64
    }
}

/// Every Hall polynomial with a fixed outer partition.
#[derive(Debug, Clone)]
pub struct HallTable {
    lambda: Partition,
    samples: Vec<u64>,
    /// keyed by `(nu, mu)`
    entries: BTreeMap<(Partition, Partition), LaurentPoly>,
}

impl HallTable {
    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    /// Residue field sizes the table was interpolated from.
    pub fn samples(&self) -> &[u64] {
        &self.samples
    }

    pub fn get(&self, nu: &Partition, mu: &Partition) -> LaurentPoly {
        self.entries
            .get(&(nu.clone(), mu.clone()))
            .cloned()
            .unwrap_or_default()
    }

    /// `((nu, mu), g^lambda_(nu,mu))` for every pair passing the vanishing
    /// precondition.
    pub fn entries(&self) -> impl Iterator<Item = (&(Partition, Partition), &LaurentPoly)> {
        self.entries.iter()
    }

    /// Compares every entry against a fresh enumeration in `Z/p^N`.
    /// Returns the mismatching `(nu, mu, expected, polynomial value)`.
    pub fn check_at_prime(&self, p: u64) -> Vec<(Partition, Partition, u64, BigInt)> {
        let counts = census_at(&self.lambda, p);
        let mut bad = Vec::new();
        for ((nu, mu), poly) in &self.entries {
            let expected = counts.get(&(mu.clone(), nu.clone())).copied().unwrap_or(0);
            let got = poly.eval_integer(p).expect("polynomial");
            if got != BigInt::from(expected) {
                bad.push((nu.clone(), mu.clone(), expected, got));
            }
        }
        bad
    }

    fn compute(lambda: &Partition) -> Self {
        let subs = lambda.sub_partitions();
        let mut pairs = Vec::new();
        for nu in &subs {
            for mu in &subs {
                let t = HallTriple::new(lambda.clone(), nu.clone(), mu.clone());
                if t.may_be_nonzero() {
                    pairs.push(t);
                }
            }
        }
        let degree = pairs.iter().map(HallTriple::degree_bound).max().unwrap_or(0).max(0) as usize;
        assert!(
            degree < SAMPLE_POINTS.len(),
            "partition {lambda} needs {} interpolation points",
            degree + 1
        );
        let samples: Vec<u64> = SAMPLE_POINTS[..=degree].to_vec();
        let counts: Vec<BTreeMap<TypePair, u64>> = samples.iter().map(|&q| census_at(lambda, q)).collect();
        for c in &counts {
            for (mu, nu) in c.keys() {
                assert!(
                    pairs.iter().any(|t| &t.mu == mu && &t.nu == nu),
                    "submodule of type {mu} with quotient {nu} violates the vanishing rule in {lambda}"
                );
            }
        }
        let entries = pairs
            .into_iter()
            .map(|t| {
                let points: Vec<(BigInt, BigInt)> = samples
                    .iter()
                    .zip(&counts)
                    .map(|(&q, c)| {
                        let v = c.get(&(t.mu.clone(), t.nu.clone())).copied().unwrap_or(0);
                        (BigInt::from(q), BigInt::from(v))
                    })
                    .collect();
                let poly = interpolate(&points).unwrap_or_else(|| {
                    panic!("Hall numbers of {lambda} do not interpolate to an integer polynomial")
                });
                ((t.nu, t.mu), poly)
            })
            .collect();
        Self {
            lambda: lambda.clone(),
            samples,
            entries,
        }
    }
}

/// Submodule census of the type-`lambda` module at residue field size `q`.
pub fn census_at(lambda: &Partition, q: u64) -> BTreeMap<TypePair, u64> {
    let (_, k) = prime_power(q).unwrap_or_else(|| panic!("{q} is not a prime power"));
    let precision = 2 * lambda.weight() + 2;
    if k == 1 {
        census(&IntegersModPrimePower::new(q, precision), lambda)
    } else {
        census(&PowerSeriesMod::new(q, precision), lambda)
    }
}

type TableCache = RwLock<HashMap<Partition, Arc<HallTable>>>;

fn tables() -> &'static TableCache {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The (memoized) table of Hall polynomials `g^lambda_(., .)`.
pub fn hall_table(lambda: &Partition) -> Arc<HallTable> {
    if let Some(t) = tables().read().expect("hall cache poisoned").get(lambda) {
        return Arc::clone(t);
    }
    let table = Arc::new(HallTable::compute(lambda));
    // A concurrent caller may have raced us; both computed the same table.
    let mut w = tables().write().expect("hall cache poisoned");
    Arc::clone(w.entry(lambda.clone()).or_insert(table))
}

/// `g^lambda_(nu,mu)(x)`.
// TODO: add the Littlewood-Richardson sequence formula as a fast path for
// partitions too large to enumerate, validated against this route.
pub fn hall_polynomial(t: &HallTriple) -> LaurentPoly {
    if !t.may_be_nonzero() {
        return LaurentPoly::zero();
    }
    hall_table(&t.lambda).get(&t.nu, &t.mu)
}

/// Unique polynomial of degree `< points.len()` through the given points,
/// or `None` if its coefficients are not all integers.
pub fn interpolate(points: &[(BigInt, BigInt)]) -> Option<LaurentPoly> {
    let n = points.len();
    let xs: Vec<BigRational> = points.iter().map(|(x, _)| BigRational::from_integer(x.clone())).collect();
    let mut dd: Vec<BigRational> = points.iter().map(|(_, y)| BigRational::from_integer(y.clone())).collect();
    // Newton divided differences in place.
    for level in 1..n {
        for i in (level..n).rev() {
            dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
        }
    }
    // Expand the Newton form into monomial coefficients (Horner).
    let mut coeffs: Vec<BigRational> = vec![BigRational::zero(); n.max(1)];
    for i in (0..n).rev() {
        // coeffs <- coeffs * (x - xs[i]) + dd[i]
        let mut next = vec![BigRational::zero(); n.max(1)];
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if k + 1 < next.len() {
                next[k + 1] += c;
            }
            next[k] -= c * &xs[i];
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    let mut terms = Vec::with_capacity(n);
    for (k, c) in coeffs.into_iter().enumerate() {
        if !c.is_integer() {
            return None;
        }
        terms.push((k as i64, c.to_integer()));
    }
    Some(LaurentPoly::from_terms(terms))
}

/// `|Gr_(a,a)(R)|` for a module `R` with only regular summands, as a sum of
/// products of Hall polynomials over the tubes with `x -> q^degree`.
/// Panics if `R` has a preprojective or preinjective summand.
pub fn regular_diagonal_count(r: &KroneckerDescriptor, a: i64) -> LaurentPoly {
    assert!(r.is_regular(), "diagonal count needs a regular module, got {r}");
    let n = r.dim_vector().a;
    if a < 0 || a > n {
        return LaurentPoly::zero();
    }
    // dimension of the submodule -> accumulated count
    let mut acc: BTreeMap<i64, LaurentPoly> = BTreeMap::from([(0, LaurentPoly::one())]);
    for (point, lambda) in r.regulars() {
        let d = point.degree() as i64;
        let table = hall_table(lambda);
        let mut by_weight: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for ((_, mu), g) in table.entries() {
            *by_weight.entry(d * mu.weight() as i64).or_default() += g.scale_exponents(d);
        }
        let mut next: BTreeMap<i64, LaurentPoly> = BTreeMap::new();
        for (dim, c) in &acc {
            for (w, g) in &by_weight {
                if dim + w <= a {
                    *next.entry(dim + w).or_default() += c * g;
                }
            }
        }
        acc = next;
    }
    acc.remove(&a).unwrap_or_default()
}

impl Default for HallTriple {
    fn default() -> Self {
        Self::new(Partition::empty(), Partition::empty(), Partition::empty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn triple(l: &[u32], nu: &[u32], mu: &[u32]) -> HallTriple {
        HallTriple::new(part(l), part(nu), part(mu))
    }

    fn x(s: &str) -> LaurentPoly {
        LaurentPoly::parse_with(s, "x").unwrap()
    }

    #[test]
    fn named_values() {
        assert_eq!(hall_polynomial(&triple(&[1, 1], &[1], &[1])), x("x + 1"));
        assert_eq!(hall_polynomial(&triple(&[2], &[1], &[1])), LaurentPoly::one());
        assert_eq!(hall_polynomial(&triple(&[2], &[2], &[1])), LaurentPoly::zero());
        for lam in [part(&[3]), part(&[2, 1]), part(&[1, 1, 1])] {
            let t = HallTriple::new(lam.clone(), Partition::empty(), lam.clone());
            assert_eq!(hall_polynomial(&t), LaurentPoly::one());
        }
        // Z/p^2 x Z/p: the socle (type (1,1)) is the only subgroup of that type.
        assert_eq!(hall_polynomial(&triple(&[2, 1], &[1], &[1, 1])), LaurentPoly::one());
        // Z/p^3 x Z/p: cyclic subgroups of order p^2 with cyclic quotient
        assert_eq!(hall_polynomial(&triple(&[3, 1], &[2], &[2])), x("x - 1"));
    }

    #[test]
    fn interpolation() {
        let pts: Vec<(BigInt, BigInt)> = [(2, 7), (3, 13), (4, 21)]
            .iter()
            .map(|&(a, b)| (BigInt::from(a), BigInt::from(b)))
            .collect();
        assert_eq!(interpolate(&pts), Some(x("x^2 + x + 1")));
        let halves: Vec<(BigInt, BigInt)> = [(0, 0), (1, 1)].iter().map(|&(a, b)| (a.into(), b.into())).collect();
        assert_eq!(interpolate(&halves), Some(x("x")));
        let frac: Vec<(BigInt, BigInt)> = [(0, 0), (2, 1)].iter().map(|&(a, b)| (a.into(), b.into())).collect();
        assert_eq!(interpolate(&frac), None);
        assert_eq!(interpolate(&[]), Some(LaurentPoly::zero()));
    }

    #[test]
    fn symmetric_in_sub_and_quotient() {
        for n in 1..=4 {
            for lam in Partition::all_of(n) {
                let table = hall_table(&lam);
                for ((nu, mu), g) in table.entries() {
                    assert_eq!(g, &table.get(mu, nu), "{lam} {nu} {mu}");
                }
            }
        }
    }

    #[test]
    fn diagonal_counts() {
        let r: KroneckerDescriptor = "R(p,[3])".parse().unwrap();
        for a in 0..=3 {
            assert_eq!(regular_diagonal_count(&r, a), LaurentPoly::one());
        }
        let two: KroneckerDescriptor = "R(p,[1]) + R(s,[1])".parse().unwrap();
        assert_eq!(regular_diagonal_count(&two, 1), LaurentPoly::constant(2));
        let deg2: KroneckerDescriptor = "R(p@2,[1])".parse().unwrap();
        assert_eq!(regular_diagonal_count(&deg2, 1), LaurentPoly::zero());
        assert_eq!(regular_diagonal_count(&deg2, 2), LaurentPoly::one());
        assert_eq!(regular_diagonal_count(&deg2, 3), LaurentPoly::zero());
        // R_p(1,1) at a degree-one point: every line of the two-dimensional
        // regular socle, q + 1 of them.
        let pair: KroneckerDescriptor = "R(p,[1,1])".parse().unwrap();
        assert_eq!(regular_diagonal_count(&pair, 1), "q + 1".parse().unwrap());
    }
}
