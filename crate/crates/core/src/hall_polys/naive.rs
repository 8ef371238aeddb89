//! Element-level subgroup enumeration for small abelian p-groups.
//!
//! Subgroups are grown one generator at a time from the trivial subgroup
//! and stored as element bitsets; types are read off element orders. Slow,
//! but shares no code with the lattice enumeration, which it cross-checks.

use std::collections::{BTreeMap, HashSet, VecDeque};

use super::lattice::TypePair;
use crate::kronecker_model::Partition;

/// Largest group order accepted by [`naive_subgroup_census`].
pub const MAX_NAIVE_ORDER: u64 = 1 << 12;

struct Group {
    p: u64,
    moduli: Vec<u64>,
    order: usize,
}

impl Group {
    fn decode(&self, mut x: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&m| {
                let d = x as u64 % m;
                x /= m as usize;
                d
            })
            .collect()
    }

    fn encode(&self, v: &[u64]) -> usize {
        v.iter()
            .zip(&self.moduli)
            .rev()
            .fold(0usize, |acc, (&d, &m)| acc * m as usize + (d % m) as usize)
    }

    fn add(&self, x: usize, y: usize) -> usize {
        let (a, b) = (self.decode(x), self.decode(y));
        let s: Vec<u64> = a.iter().zip(&b).map(|(u, v)| u + v).collect();
        self.encode(&s)
    }

    fn scale(&self, x: usize, k: u64) -> usize {
        let v: Vec<u64> = self
            .decode(x)
            .iter()
            .zip(&self.moduli)
            .map(|(&d, &m)| (d as u128 * k as u128 % m as u128) as u64)
            .collect();
        self.encode(&v)
    }

    /// Type of a finite abelian p-group from `sizes[k] = |A[p^k]|`.
    fn type_from_torsion_sizes(&self, sizes: &[u64]) -> Partition {
        let logs: Vec<u32> = sizes.iter().map(|&s| log_p(s, self.p)).collect();
        // logs[k] - logs[k-1] = number of parts >= k
        let conj: Vec<u32> = logs.windows(2).map(|w| w[1] - w[0]).filter(|&c| c > 0).collect();
        Partition::new(conj).expect("positive").conjugate()
    }
}

fn log_p(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        assert_eq!(x % p, 0, "torsion size not a power of p");
        x /= p;
        k += 1;
    }
    k
}

/// Counts subgroups of `⊕ Z/p^lambda_i` by `(subgroup type, quotient type)`.
/// Panics when the group has more than [`MAX_NAIVE_ORDER`] elements.
pub fn naive_subgroup_census(lambda: &Partition, p: u64) -> BTreeMap<TypePair, u64> {
    let moduli: Vec<u64> = lambda.parts().iter().map(|&e| p.pow(e)).collect();
    let order: u64 = moduli.iter().product();
    assert!(order <= MAX_NAIVE_ORDER, "group of order {order} too large for naive enumeration");
    let g = Group {
        p,
        moduli,
        order: order as usize,
    };
    let words = g.order.div_ceil(64);
    let exponent = lambda.part(0);

    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue = VecDeque::new();
    let mut trivial = vec![0u64; words];
    trivial[0] = 1;
    seen.insert(trivial.clone());
    queue.push_back(trivial);
    while let Some(h) = queue.pop_front() {
        let members: Vec<usize> = (0..g.order).filter(|&x| bit(&h, x)).collect();
        for gen in 0..g.order {
            if bit(&h, gen) {
                continue;
            }
            let mut k = h.clone();
            let mut multiple = gen;
            while !bit(&h, multiple) {
                for &m in &members {
                    set_bit(&mut k, g.add(m, multiple));
                }
                multiple = g.add(multiple, gen);
            }
            if seen.insert(k.clone()) {
                queue.push_back(k);
            }
        }
    }

    let mut out = BTreeMap::new();
    for h in &seen {
        let size = (0..g.order).filter(|&x| bit(h, x)).count() as u64;
        let mut sub_sizes = Vec::new();
        let mut quot_sizes = Vec::new();
        for k in 0..=exponent {
            let pk = p.pow(k);
            sub_sizes.push((0..g.order).filter(|&x| bit(h, x) && g.scale(x, pk) == 0).count() as u64);
            let lifts = (0..g.order).filter(|&x| bit(h, g.scale(x, pk))).count() as u64;
            quot_sizes.push(lifts / size);
        }
        let key = (g.type_from_torsion_sizes(&sub_sizes), g.type_from_torsion_sizes(&quot_sizes));
        *out.entry(key).or_default() += 1;
    }
    out
}

fn bit(set: &[u64], i: usize) -> bool {
    set[i / 64] >> (i % 64) & 1 == 1
}

fn set_bit(set: &mut [u64], i: usize) {
    set[i / 64] |= 1 << (i % 64);
}
