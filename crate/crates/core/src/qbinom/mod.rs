//! Gaussian (q-binomial) coefficients over the Laurent ring `Z[q, q^-1]`.
//!
//! `gauss(l, a)` is defined for every pair of integers: zero for `l < 0`,
//! one for `l = 0`, and otherwise the product
//! `(q^a - 1)(q^(a-1) - 1)...(q^(a-l+1) - 1) / ((q^l - 1)...(q - 1))`,
//! which is an ordinary polynomial for `a >= 0` and a signed Laurent
//! polynomial for `a < 0`.

mod laurent;

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

pub use laurent::{EvalError, LaurentPoly, PolyParseError};

type GaussCache = RwLock<HashMap<(i64, i64), LaurentPoly>>;

fn cache() -> &'static GaussCache {
    static CACHE: OnceLock<GaussCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The Gaussian coefficient `G^l_a(q)`.
pub fn gauss(l: i64, a: i64) -> LaurentPoly {
    if l < 0 || (a >= 0 && l > a) {
        return LaurentPoly::zero();
    }
    if l == 0 || l == a {
        return LaurentPoly::one();
    }
    if let Some(hit) = cache().read().expect("gauss cache poisoned").get(&(l, a)) {
        return hit.clone();
    }
    let value = if a >= 0 {
        // q-Pascal: G^l_a = G^(l-1)_(a-1) + q^l G^l_(a-1).
        gauss(l - 1, a - 1) + gauss(l, a - 1).shift(l)
    } else {
        // G^l_a = (-1)^l q^(la - l(l-1)/2) G^l_(l-1-a) for a < 0.
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let exp = l * a - l * (l - 1) / 2;
        let base = gauss(l, l - 1 - a).shift(exp);
        if sign < 0 {
            -base
        } else {
            base
        }
    };
    cache()
        .write()
        .expect("gauss cache poisoned")
        .insert((l, a), value.clone());
    value
}

/// Right-hand side of the q-Vandermonde convolution
/// `sum_j q^(j(a-l+j)) G^(l-j)_a G^j_b`, which equals `gauss(l, a + b)`.
///
/// Terms vanish outside `0 <= j <= l` for any upper arguments.
pub fn q_vandermonde_sum(l: i64, a: i64, b: i64) -> LaurentPoly {
    (0..=l.max(-1))
        .map(|j| (gauss(l - j, a) * gauss(j, b)).shift(j * (a - l + j)))
        .sum()
}

/// Left-hand side of the q-Nanjundiah identity
/// `sum_r q^((m-mu+nu-r)(p-r)) G^r_(m-mu+nu) G^(p-r)_(p+mu-nu) G^(m+p)_(mu+r)`,
/// which equals `gauss(m, mu) * gauss(p, nu)`. The summand vanishes outside
/// `0 <= r <= p`.
pub fn q_nanjundiah_sum(m: i64, p: i64, mu: i64, nu: i64) -> LaurentPoly {
    let top = m - mu + nu;
    (0..=p.max(-1))
        .map(|r| {
            let g = gauss(r, top) * gauss(p - r, p + mu - nu) * gauss(m + p, mu + r);
            g.shift((top - r) * (p - r))
        })
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// Direct expansion of the defining product by exact division.
    fn gauss_by_product(l: i64, a: i64) -> LaurentPoly {
        if l < 0 {
            return LaurentPoly::zero();
        }
        let mut num = LaurentPoly::one();
        let mut den = LaurentPoly::one();
        for i in 0..l {
            num = num * (LaurentPoly::monomial(1, a - i) - LaurentPoly::one());
            den = den * (LaurentPoly::monomial(1, i + 1) - LaurentPoly::one());
        }
        num.div_exact(&den).expect("Gaussian product divides exactly")
    }

    #[test]
    fn named_values() {
        assert_eq!(gauss(0, 7), LaurentPoly::one());
        assert_eq!(gauss(-2, 5), LaurentPoly::zero());
        assert_eq!(gauss(2, 1), LaurentPoly::zero());
        assert_eq!(gauss(1, 2), p("q + 1"));
        assert_eq!(gauss(2, 4), p("q^4 + q^3 + 2*q^2 + q + 1"));
        assert_eq!(gauss(1, -1), p("-q^-1"));
        assert_eq!(gauss(2, -1), p("q^-3"));
        assert_eq!(gauss(0, -3), LaurentPoly::one());
    }

    #[test]
    fn negative_upper_argument_matches_product_expansion() {
        for l in 0..=4 {
            for a in -6..=6 {
                assert_eq!(gauss(l, a), gauss_by_product(l, a), "G^{l}_{a}");
            }
        }
    }

    #[test]
    fn symmetry() {
        for a in 0..=9 {
            for l in 0..=a {
                assert_eq!(gauss(l, a), gauss(a - l, a));
            }
        }
    }

    #[test]
    fn cross_product() {
        for a in -6..=6 {
            for l in -6..=6 {
                for j in -6..=6 {
                    assert_eq!(
                        gauss(l, a) * gauss(j, l),
                        gauss(j, a) * gauss(l - j, a - j),
                        "a={a} l={l} j={j}"
                    );
                }
            }
        }
    }

    #[test]
    fn q_vandermonde() {
        for l in -6..=6 {
            for a in -6..=6 {
                for b in -6..=6 {
                    assert_eq!(gauss(l, a + b), q_vandermonde_sum(l, a, b), "l={l} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn nanjundiah_small_window() {
        for m in -3..=3 {
            for pp in -3..=3 {
                for mu in -3..=3 {
                    for nu in -3..=3 {
                        assert_eq!(q_nanjundiah_sum(m, pp, mu, nu), gauss(m, mu) * gauss(pp, nu));
                    }
                }
            }
        }
    }

    #[test]
    fn values_at_one_are_binomials() {
        assert_eq!(gauss(2, 5).eval_integer(1).unwrap(), 10.into());
        // generalized binomial C(-3, 2) = 6
        assert_eq!(gauss(2, -3).eval_integer(1).unwrap(), 6.into());
    }

    #[test]
    fn concurrent_callers_agree() {
        let handles: Vec<_> = (0..4)
            .map(|t| std::thread::spawn(move || (0..12).map(|a| gauss(3 + t % 2, a - 4)).collect::<Vec<_>>()))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(results[0], results[2]);
        assert_eq!(results[1], results[3]);
        for (a, v) in results[0].iter().enumerate() {
            assert_eq!(*v, gauss_by_product(3, a as i64 - 4));
        }
    }
}
