//! Exact Laurent polynomials in one variable over arbitrary-precision integers.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Failure modes of evaluating a [`LaurentPoly`] at a point.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EvalError {
    #[error("cannot evaluate a negative power of q at q = 0")]
    DivisionByZero,
    #[error("value {0} is not an integer")]
    NotInteger(BigRational),
}

/// Malformed polynomial text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("polynomial parse error at byte {pos}: {message}")]
pub struct PolyParseError {
    pub pos: usize,
    pub message: String,
}

/// A Laurent polynomial `sum c_k q^k` with `k` ranging over the integers.
///
/// Only nonzero coefficients are stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable itself.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// Builds `sum_i coeffs[i] * q^(min_exp + i)`.
    pub fn from_coeffs(min_exp: i64, coeffs: &[i64]) -> Self {
        let mut out = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            out.add_term(min_exp + i as i64, BigInt::from(c));
        }
        out
    }

    /// Builds a polynomial from arbitrary `(exponent, coefficient)` pairs,
    /// summing repeated exponents.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut out = Self::zero();
        for (e, c) in terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// True when no negative power of the variable occurs.
    pub fn is_polynomial(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    pub fn has_nonnegative_coefficients(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Multiplies by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + k, c.clone())).collect(),
        }
    }

    /// Substitutes `q -> q^d` (exponent scaling), `d >= 1`.
    pub fn scale_exponents(&self, d: i64) -> Self {
        assert!(d >= 1, "exponent scale must be positive");
        Self {
            terms: self.terms.iter().map(|(e, c)| (e * d, c.clone())).collect(),
        }
    }

    fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Exact value at a rational point.
    pub fn eval_at(&self, q0: &BigRational) -> Result<BigRational, EvalError> {
        if q0.is_zero() {
            if !self.is_polynomial() {
                return Err(EvalError::DivisionByZero);
            }
            return Ok(BigRational::from_integer(self.coeff(0)));
        }
        // Horner in q over the polynomial part, times q^min.
        let (Some(lo), Some(hi)) = (self.min_exponent(), self.max_exponent()) else {
            return Ok(BigRational::zero());
        };
        let mut acc = BigRational::zero();
        for e in (lo..=hi).rev() {
            acc = acc * q0 + BigRational::from_integer(self.coeff(e));
        }
        Ok(acc * pow_rational(q0, lo))
    }

    /// Value at an integer point, required to be an integer.
    pub fn eval_integer(&self, q0: impl Into<BigInt>) -> Result<BigInt, EvalError> {
        let v = self.eval_at(&BigRational::from_integer(q0.into()))?;
        if v.is_integer() {
            Ok(v.to_integer())
        } else {
            Err(EvalError::NotInteger(v))
        }
    }

    /// Exact quotient `self / divisor` in the Laurent ring, or `None` when
    /// the division leaves a remainder (or the divisor is zero).
    pub fn div_exact(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        let (dlo, dhi) = (divisor.min_exponent()?, divisor.max_exponent()?);
        let Some(nlo) = self.min_exponent() else {
            return Some(Self::zero());
        };
        let lead = divisor.coeff(dhi);
        // Work with the ordinary polynomials obtained by clearing q^lo factors.
        let mut rem = self.shift(-nlo);
        let den = divisor.shift(-dlo);
        let ddeg = dhi - dlo;
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exponent() {
            if top < ddeg {
                return None;
            }
            let (c, r) = rem.coeff(top).div_rem(&lead);
            if !r.is_zero() {
                return None;
            }
            let step = Self::monomial(c, top - ddeg);
            rem -= &step * &den;
            quot += step;
        }
        Some(quot.shift(nlo - dlo))
    }

    /// Renders with an arbitrary variable name, e.g. `x^2 - 3*x + 1`.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            match (i, neg) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            if *e == 0 {
                out.push_str(&mag.to_string());
                continue;
            }
            if !mag.is_one() {
                out.push_str(&mag.to_string());
                out.push('*');
            }
            out.push_str(var);
            if *e != 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        out
    }

    /// Parses the grammar produced by [`LaurentPoly::display_with`]; terms
    /// may appear in any order and repeated exponents are summed.
    pub fn parse_with(s: &str, var: &str) -> Result<Self, PolyParseError> {
        Parser { src: s, pos: 0, var }.parse()
    }
}

fn pow_rational(x: &BigRational, e: i64) -> BigRational {
    let base = if e < 0 { x.recip() } else { x.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    var: &'a str,
}

impl Parser<'_> {
    fn err(&self, message: impl Into<String>) -> PolyParseError {
        PolyParseError {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, tok: &str) -> bool {
        if self.rest().starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&str> {
        let n = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if n == 0 {
            return None;
        }
        let d = &self.src[self.pos..self.pos + n];
        self.pos += n;
        Some(d)
    }

    fn parse(mut self) -> Result<LaurentPoly, PolyParseError> {
        let mut out = LaurentPoly::zero();
        self.skip_ws();
        if self.rest().is_empty() {
            return Err(self.err("empty input"));
        }
        let mut first = true;
        loop {
            self.skip_ws();
            let mut neg = false;
            if self.eat("-") {
                neg = true;
            } else if self.eat("+") {
                if first {
                    return Err(self.err("leading '+'"));
                }
            } else if !first {
                return Err(self.err("expected '+' or '-'"));
            }
            self.skip_ws();
            let (exp, mut coeff) = self.term()?;
            if neg {
                coeff = -coeff;
            }
            out.add_term(exp, coeff);
            first = false;
            self.skip_ws();
            if self.rest().is_empty() {
                return Ok(out);
            }
        }
    }

    fn term(&mut self) -> Result<(i64, BigInt), PolyParseError> {
        let coeff = match self.digits() {
            Some(d) => {
                let c: BigInt = d.parse().map_err(|_| self.err("bad coefficient"))?;
                self.skip_ws();
                if !self.eat("*") {
                    return Ok((0, c));
                }
                self.skip_ws();
                c
            }
            None => BigInt::one(),
        };
        if !self.eat(self.var) {
            return Err(self.err(format!("expected coefficient or '{}'", self.var)));
        }
        if !self.eat("^") {
            return Ok((1, coeff));
        }
        let neg = self.eat("-");
        let Some(d) = self.digits() else {
            return Err(self.err("expected exponent"));
        };
        let e: i64 = d.parse().map_err(|_| self.err("exponent out of range"))?;
        Ok((if neg { -e } else { e }, coeff))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("q"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = PolyParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse_with(s, "q")
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

impl SubAssign for LaurentPoly {
    fn sub_assign(&mut self, rhs: LaurentPoly) {
        *self -= &rhs;
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;

    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $assign:ident) => {
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$assign(rhs);
                self
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(mut self, rhs: LaurentPoly) -> LaurentPoly {
                self.$assign(&rhs);
                self
            }
        }
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(rhs);
                out
            }
        }
        impl $tr<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                let mut out = self.clone();
                out.$assign(&rhs);
                out
            }
        }
    };
}

forward_binop!(Add, add, add_assign);
forward_binop!(Sub, sub, sub_assign);

impl Mul<LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Mul<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        &self * rhs
    }
}

impl Mul<LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        self * &rhs
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::one(), |acc, x| &acc * &x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn ring_examples() {
        assert_eq!(p("q + 1") + LaurentPoly::from(-1), LaurentPoly::q());
        assert_eq!(p("q + 1") * p("q - 1"), p("q^2 - 1"));
        assert_eq!(LaurentPoly::monomial(1, -1) * LaurentPoly::q(), LaurentPoly::one());
        assert!((p("q^3 - 2*q") - p("q^3 - 2*q")).is_zero());
    }

    #[test]
    fn evaluation() {
        assert_eq!(p("q + 1").eval_at(&rat(2, 1)).unwrap(), rat(3, 1));
        assert_eq!(p("q^-1").eval_at(&rat(2, 1)).unwrap(), rat(1, 2));
        assert_eq!(p("q^2 + q + 1").eval_integer(1).unwrap(), BigInt::from(3));
        assert_eq!(p("q^-1").eval_at(&rat(0, 1)), Err(EvalError::DivisionByZero));
        assert_eq!(p("q^2 + 5").eval_integer(0).unwrap(), BigInt::from(5));
        assert!(matches!(p("q^-1").eval_integer(2), Err(EvalError::NotInteger(_))));
        assert_eq!(p("-q^-2 + 4").eval_integer(-1).unwrap(), BigInt::from(3));
    }

    #[test]
    fn rendering() {
        assert_eq!(p("q^4 + q^3 + 2*q^2 + q + 1").to_string(), "q^4 + q^3 + 2*q^2 + q + 1");
        assert_eq!(LaurentPoly::monomial(-1, -1).to_string(), "-q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(p("1 - 2*q").to_string(), "-2*q + 1");
        assert_eq!(p("x + 1".replace('x', "q").as_str()).display_with("x"), "x + 1");
        assert_eq!(p("q + q + q^0").to_string(), "2*q + 1");
    }

    #[test]
    fn parse_errors_carry_positions() {
        let e = "q^".parse::<LaurentPoly>().unwrap_err();
        assert_eq!(e.pos, 2);
        let e = "q + * 3".parse::<LaurentPoly>().unwrap_err();
        assert_eq!(e.pos, 4);
        assert!("".parse::<LaurentPoly>().is_err());
        assert!("q q".parse::<LaurentPoly>().is_err());
    }

    #[test]
    fn exact_division() {
        let num = p("q^4 - 1");
        assert_eq!(num.div_exact(&p("q - 1")).unwrap(), p("q^3 + q^2 + q + 1"));
        assert_eq!(p("q^-1 - 1").div_exact(&p("q - 1")).unwrap(), p("-q^-1"));
        assert_eq!(p("q^2 + 1").div_exact(&p("q - 1")), None);
        assert_eq!(p("2*q").div_exact(&p("3")), None);
        assert_eq!(p("q").div_exact(&LaurentPoly::zero()), None);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-6i64..6, -20i64..20), 0..6)
            .prop_map(|ts| LaurentPoly::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(x in arb_poly()) {
            prop_assert_eq!(x.to_string().parse::<LaurentPoly>().unwrap(), x);
        }

        #[test]
        fn canonical_form_has_no_zero_coefficients(x in arb_poly(), y in arb_poly()) {
            let z = &(&x * &y) - &x;
            prop_assert!(z.terms().all(|(_, c)| !c.is_zero()));
        }

        #[test]
        fn ring_laws(x in arb_poly(), y in arb_poly(), z in arb_poly()) {
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x - &x, LaurentPoly::zero());
        }

        #[test]
        fn product_divides_back(x in arb_poly(), y in arb_poly()) {
            prop_assume!(!y.is_zero());
            prop_assert_eq!((&x * &y).div_exact(&y), Some(x));
        }

        #[test]
        fn evaluation_is_a_ring_map(x in arb_poly(), y in arb_poly(), q0 in 1i64..5) {
            let q0 = BigRational::from_integer(q0.into());
            let lhs = (&x * &y).eval_at(&q0).unwrap();
            prop_assert_eq!(lhs, x.eval_at(&q0).unwrap() * y.eval_at(&q0).unwrap());
        }
    }
}
