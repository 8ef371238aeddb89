//! Closed formulas for `|Gr_(a,b)(M)|` with `M` indecomposable, and their
//! specializations at `q = 1` (Euler characteristics of the complex
//! Grassmannians).

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::qbinom::{gauss, LaurentPoly};

/// Indecomposable families that admit a closed formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClosedFormKind {
    Preprojective,
    Preinjective,
    /// `R_p(t)` at a point of degree one.
    RegularDegreeOne,
}

/// `|Gr_(a,b)(P_n)|`.
pub fn count_preprojective(n: u32, a: i64, b: i64) -> LaurentPoly {
    let n = n as i64;
    if a < 0 || b < 0 {
        return LaurentPoly::zero();
    }
    if a == 0 && b == 0 {
        return LaurentPoly::one();
    }
    gauss(n + 1 - a, n + 1 - b) * gauss(a - b - 1, a - 1)
}

/// `|Gr_(a,b)(I_n)|`.
pub fn count_preinjective(n: u32, a: i64, b: i64) -> LaurentPoly {
    let n = n as i64;
    if a > n || b > n + 1 {
        return LaurentPoly::zero();
    }
    if a == n && b == n + 1 {
        return LaurentPoly::one();
    }
    gauss(a - b, n - b) * gauss(b, a + 1)
}

/// `|Gr_(a,b)(R_p(t))|` for a point `p` of degree one. Not valid for higher
/// degree points, which have no closed formula.
pub fn count_regular_deg1(t: u32, a: i64, b: i64) -> LaurentPoly {
    let t = t as i64;
    if a < 0 || b < 0 {
        return LaurentPoly::zero();
    }
    gauss(t - a, t - b) * gauss(a - b, a)
}

pub fn count_closed_form(kind: ClosedFormKind, index: u32, a: i64, b: i64) -> LaurentPoly {
    match kind {
        ClosedFormKind::Preprojective => count_preprojective(index, a, b),
        ClosedFormKind::Preinjective => count_preinjective(index, a, b),
        ClosedFormKind::RegularDegreeOne => count_regular_deg1(index, a, b),
    }
}

/// Generalized binomial `C(top, k)`: zero for `k < 0`, one for `k = 0`, and
/// `top (top - 1) ... (top - k + 1) / k!` otherwise (any integer `top`).
pub fn binomial(top: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(top - i) / BigInt::from(i + 1);
    }
    acc
}

/// Euler characteristic of the complex Grassmannian via binomial products.
pub fn euler_char(kind: ClosedFormKind, index: u32, a: i64, b: i64) -> BigInt {
    let n = index as i64;
    match kind {
        ClosedFormKind::Preprojective => {
            if a < 0 || b < 0 {
                BigInt::zero()
            } else if a == 0 && b == 0 {
                BigInt::one()
            } else {
                binomial(n + 1 - b, n + 1 - a) * binomial(a - 1, a - b - 1)
            }
        }
        ClosedFormKind::Preinjective => {
            if a > n || b > n + 1 {
                BigInt::zero()
            } else if a == n && b == n + 1 {
                BigInt::one()
            } else {
                binomial(n - b, a - b) * binomial(a + 1, b)
            }
        }
        ClosedFormKind::RegularDegreeOne => {
            if a < 0 || b < 0 {
                BigInt::zero()
            } else {
                binomial(n - b, n - a) * binomial(a, a - b)
            }
        }
    }
}
