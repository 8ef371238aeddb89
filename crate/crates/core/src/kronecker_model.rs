//! Kronecker modules as formal direct sums of indecomposables.
//!
//! A module is recorded by its Krull-Schmidt decomposition: multiplicities
//! of the preprojectives `P_n` (dimension `(n+1, n)`), of the
//! preinjectives `I_n` (dimension `(n, n+1)`), and for every regular point
//! `p` of degree `d_p` a partition `lambda` standing for
//! `R_p(lambda_1) + R_p(lambda_2) + ...`.
//!
//! Text form, used by the CLI and fixtures:
//!
//! ```text
//! summand := 'P' nat | 'I' nat | 'R(' label [ '@' nat ] ',' '[' nat (',' nat)* ']' ')'
//! module  := [nat '*'] summand (' + ' [nat '*'] summand)*
//! ```
//!
//! e.g. `2*P0 + P3 + R(p1,[2,1]) + R(p2@2,[1]) + I1`. The empty module is
//! written `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("regular summand at point {0} needs a nonempty partition")]
    EmptyPartition(String),
    #[error("point degree must be positive")]
    ZeroDegree,
    #[error("point {id} used with degrees {first} and {second}")]
    ConflictingDegree { id: String, first: u32, second: u32 },
    #[error("reflection to the right needs a module without simple projective summand P0")]
    HasSimpleProjective,
    #[error("reflection to the left needs a module without simple injective summand I0")]
    HasSimpleInjective,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("module parse error at byte {pos}: {message}")]
pub struct DescriptorParseError {
    pub pos: usize,
    pub message: String,
}

/// Dimension vector `(a, b)`: `a` at vertex 1 (the sink), `b` at vertex 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DimVector {
    pub a: i64,
    pub b: i64,
}

impl DimVector {
    pub const fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// Euler form `<x, y> = x1 y1 + x2 y2 - 2 x2 y1` of the Kronecker quiver,
    /// equal to `dim Hom(X, Y) - dim Ext(X, Y)`.
    pub fn euler_form(self, other: DimVector) -> i64 {
        self.a * other.a + self.b * other.b - 2 * self.b * other.a
    }
}

impl std::ops::Add for DimVector {
    type Output = DimVector;
    fn add(self, rhs: DimVector) -> DimVector {
        DimVector::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl std::ops::Mul<DimVector> for i64 {
    type Output = DimVector;
    fn mul(self, rhs: DimVector) -> DimVector {
        DimVector::new(self * rhs.a, self * rhs.b)
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// Weakly decreasing sequence of positive integers. The empty partition is
/// allowed (it appears as a Hall polynomial argument).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Sorts the parts into decreasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self, ModelError> {
        if parts.contains(&0) {
            return Err(ModelError::ZeroPart);
        }
        parts.sort_unstable_by(|x, y| y.cmp(x));
        Ok(Self(parts))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|lambda|`.
    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    /// `n(lambda) = sum (i - 1) lambda_i`.
    pub fn n_value(&self) -> u32 {
        self.0.iter().enumerate().map(|(i, &x)| i as u32 * x).sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// `mu ⊆ self`, i.e. `mu_i <= lambda_i` for all `i`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.0.iter().zip(&self.0).all(|(m, l)| m <= l)
    }

    pub fn conjugate(&self) -> Partition {
        let top = self.part(0);
        Partition((1..=top).map(|k| self.0.iter().filter(|&&x| x >= k).count() as u32).collect())
    }

    /// Every partition contained in `self`, including the empty one and
    /// `self`, in lexicographic order of the part sequences.
    pub fn sub_partitions(&self) -> Vec<Partition> {
        fn go(bounds: &[u32], cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(prefix.clone()));
            let Some((&b, rest)) = bounds.split_first() else { return };
            for x in 1..=b.min(cap) {
                prefix.push(x);
                go(rest, x, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, u32::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// All partitions of `n`.
    pub fn all_of(n: u32) -> Vec<Partition> {
        fn go(rem: u32, cap: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for x in (1..=rem.min(cap)).rev() {
                prefix.push(x);
                go(rem - x, x, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = DescriptorParseError;

    /// Comma-separated parts, optionally bracketed: `2,1`, `[2,1]`, `[]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in inner.split(',') {
            let part = tok.trim().parse::<u32>().map_err(|_| DescriptorParseError {
                pos: 0,
                message: format!("bad partition part {tok:?}"),
            })?;
            parts.push(part);
        }
        Partition::new(parts).map_err(|e| DescriptorParseError {
            pos: 0,
            message: e.to_string(),
        })
    }
}

/// A closed point of the projective line, named by an opaque id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointLabel {
    id: String,
    degree: u32,
}

impl PointLabel {
    pub fn new(id: impl Into<String>, degree: u32) -> Result<Self, ModelError> {
        if degree == 0 {
            return Err(ModelError::ZeroDegree);
        }
        Ok(Self { id: id.into(), degree })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

/// One indecomposable Kronecker module.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Indecomposable {
    Preprojective(u32),
    Preinjective(u32),
    Regular { point: PointLabel, length: u32 },
}

impl Indecomposable {
    pub fn dim_vector(&self) -> DimVector {
        match self {
            Self::Preprojective(n) => DimVector::new(*n as i64 + 1, *n as i64),
            Self::Preinjective(n) => DimVector::new(*n as i64, *n as i64 + 1),
            Self::Regular { point, length } => {
                let d = (point.degree * length) as i64;
                DimVector::new(d, d)
            }
        }
    }
}

impl fmt::Display for Indecomposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Preprojective(n) => write!(f, "P{n}"),
            Self::Preinjective(n) => write!(f, "I{n}"),
            Self::Regular { point, length } => {
                write!(f, "R({}", point.id)?;
                if point.degree != 1 {
                    write!(f, "@{}", point.degree)?;
                }
                write!(f, ",[{length}])")
            }
        }
    }
}

impl FromStr for Indecomposable {
    type Err = DescriptorParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let m: KroneckerDescriptor = s.parse()?;
        let summands = m.summands();
        match summands.as_slice() {
            [(x, 1)] => Ok(x.clone()),
            _ => Err(DescriptorParseError {
                pos: 0,
                message: format!("{s:?} is not a single indecomposable"),
            }),
        }
    }
}

/// `dim_k Hom(x, y)` for indecomposables.
pub fn hom_dim(x: &Indecomposable, y: &Indecomposable) -> u64 {
    use Indecomposable::*;
    match (x, y) {
        (Preprojective(n), Preprojective(m)) => {
            if n <= m {
                (m - n + 1) as u64
            } else {
                0
            }
        }
        (Preinjective(n), Preinjective(m)) => {
            if n >= m {
                (n - m + 1) as u64
            } else {
                0
            }
        }
        (Preprojective(n), Preinjective(m)) => (n + m) as u64,
        (Preprojective(_), Regular { point, length }) | (Regular { point, length }, Preinjective(_)) => {
            (point.degree * length) as u64
        }
        (Regular { point: p1, length: t1 }, Regular { point: p2, length: t2 }) => {
            if p1 == p2 {
                (p1.degree * t1.min(t2)) as u64
            } else {
                0
            }
        }
        (Preinjective(_), Preprojective(_))
        | (Preinjective(_), Regular { .. })
        | (Regular { .. }, Preprojective(_)) => 0,
    }
}

/// `dim_k Ext^1(x, y)` for indecomposables.
pub fn ext_dim(x: &Indecomposable, y: &Indecomposable) -> u64 {
    use Indecomposable::*;
    match (x, y) {
        (Preprojective(n), Preprojective(m)) => {
            if n <= m {
                0
            } else {
                (n - m - 1) as u64
            }
        }
        (Preinjective(n), Preinjective(m)) => {
            if n >= m {
                0
            } else {
                (m - n - 1) as u64
            }
        }
        (Preinjective(m), Preprojective(n)) => (m + n + 2) as u64,
        (Regular { point, length }, Preprojective(_)) | (Preinjective(_), Regular { point, length }) => {
            (point.degree * length) as u64
        }
        (Regular { point: p1, length: t1 }, Regular { point: p2, length: t2 }) => {
            if p1 == p2 {
                (p1.degree * t1.min(t2)) as u64
            } else {
                0
            }
        }
        (Preprojective(_), Preinjective(_))
        | (Preprojective(_), Regular { .. })
        | (Regular { .. }, Preinjective(_)) => 0,
    }
}

/// Direct sum of indecomposables in Krull-Schmidt form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct KroneckerDescriptor {
    preprojective: BTreeMap<u32, u32>,
    preinjective: BTreeMap<u32, u32>,
    regular: BTreeMap<PointLabel, Partition>,
}

impl KroneckerDescriptor {
    /// The zero module.
    pub fn new() -> Self {
        Self::default()
    }

    pub fn preprojective(n: u32) -> Self {
        Self::new().with_preprojective(n, 1)
    }

    pub fn preinjective(n: u32) -> Self {
        Self::new().with_preinjective(n, 1)
    }

    /// `R_p(lambda)` for a single point.
    pub fn regular(id: &str, degree: u32, parts: Vec<u32>) -> Result<Self, ModelError> {
        let mut m = Self::new();
        m.add_regular(PointLabel::new(id, degree)?, Partition::new(parts)?)?;
        Ok(m)
    }

    pub fn with_preprojective(mut self, n: u32, mult: u32) -> Self {
        self.add_preprojective(n, mult);
        self
    }

    pub fn with_preinjective(mut self, n: u32, mult: u32) -> Self {
        self.add_preinjective(n, mult);
        self
    }

    pub fn add_preprojective(&mut self, n: u32, mult: u32) {
        if mult > 0 {
            *self.preprojective.entry(n).or_default() += mult;
        }
    }

    pub fn add_preinjective(&mut self, n: u32, mult: u32) {
        if mult > 0 {
            *self.preinjective.entry(n).or_default() += mult;
        }
    }

    /// Adds `R_p(lambda)`; parts at an already present point are merged
    /// into its partition.
    pub fn add_regular(&mut self, point: PointLabel, lambda: Partition) -> Result<(), ModelError> {
        if lambda.is_empty() {
            return Err(ModelError::EmptyPartition(point.id));
        }
        if let Some(existing) = self.regular.keys().find(|k| k.id == point.id) {
            if existing.degree != point.degree {
                return Err(ModelError::ConflictingDegree {
                    id: point.id,
                    first: existing.degree,
                    second: point.degree,
                });
            }
            let slot = self.regular.get_mut(&point).expect("key present");
            let mut parts = slot.0.clone();
            parts.extend_from_slice(lambda.parts());
            *slot = Partition::new(parts)?;
            return Ok(());
        }
        self.regular.insert(point, lambda);
        Ok(())
    }

    /// Direct sum of two descriptors; point ids shared by both are taken to
    /// be the same point.
    pub fn direct_sum(&self, other: &Self) -> Result<Self, ModelError> {
        let mut out = self.clone();
        for (&n, &k) in &other.preprojective {
            out.add_preprojective(n, k);
        }
        for (&n, &k) in &other.preinjective {
            out.add_preinjective(n, k);
        }
        for (p, lam) in &other.regular {
            out.add_regular(p.clone(), lam.clone())?;
        }
        Ok(out)
    }

    pub fn preprojectives(&self) -> &BTreeMap<u32, u32> {
        &self.preprojective
    }

    pub fn preinjectives(&self) -> &BTreeMap<u32, u32> {
        &self.preinjective
    }

    pub fn regulars(&self) -> &BTreeMap<PointLabel, Partition> {
        &self.regular
    }

    pub fn is_zero(&self) -> bool {
        self.preprojective.is_empty() && self.preinjective.is_empty() && self.regular.is_empty()
    }

    pub fn is_regular(&self) -> bool {
        self.preprojective.is_empty() && self.preinjective.is_empty()
    }

    /// Indecomposable summands with multiplicities, in canonical order
    /// (preprojectives, regulars, preinjectives).
    pub fn summands(&self) -> Vec<(Indecomposable, u32)> {
        let mut out: Vec<(Indecomposable, u32)> = self
            .preprojective
            .iter()
            .map(|(&n, &k)| (Indecomposable::Preprojective(n), k))
            .collect();
        for (point, lambda) in &self.regular {
            let mut counts: BTreeMap<std::cmp::Reverse<u32>, u32> = BTreeMap::new();
            for &t in lambda.parts() {
                *counts.entry(std::cmp::Reverse(t)).or_default() += 1;
            }
            out.extend(counts.into_iter().map(|(t, k)| {
                (
                    Indecomposable::Regular {
                        point: point.clone(),
                        length: t.0,
                    },
                    k,
                )
            }));
        }
        out.extend(self.preinjective.iter().map(|(&n, &k)| (Indecomposable::Preinjective(n), k)));
        out
    }

    pub fn dim_vector(&self) -> DimVector {
        self.summands()
            .iter()
            .fold(DimVector::default(), |acc, (x, k)| acc + (*k as i64) * x.dim_vector())
    }

    /// Splits `M = s P0 + M' + t I0`, returning `(s, M', t)`.
    pub fn split_socle(&self) -> (u32, KroneckerDescriptor, u32) {
        let mut rest = self.clone();
        let s = rest.preprojective.remove(&0).unwrap_or(0);
        let t = rest.preinjective.remove(&0).unwrap_or(0);
        (s, rest, t)
    }

    /// Reflection at the sink: `P_n -> P_(n-1)`, `I_n -> I_(n+1)`, regular
    /// summands keep their point and length. Dimension `(m, n)` becomes
    /// `(n, 2n - m)`.
    pub fn reflect_plus(&self) -> Result<KroneckerDescriptor, ModelError> {
        if self.preprojective.contains_key(&0) {
            return Err(ModelError::HasSimpleProjective);
        }
        Ok(Self {
            preprojective: self.preprojective.iter().map(|(&n, &k)| (n - 1, k)).collect(),
            preinjective: self.preinjective.iter().map(|(&n, &k)| (n + 1, k)).collect(),
            regular: self.regular.clone(),
        })
    }

    /// Inverse of [`reflect_plus`](Self::reflect_plus): `P_n -> P_(n+1)`,
    /// `I_n -> I_(n-1)`. Dimension `(m, n)` becomes `(2m - n, m)`.
    pub fn reflect_minus(&self) -> Result<KroneckerDescriptor, ModelError> {
        if self.preinjective.contains_key(&0) {
            return Err(ModelError::HasSimpleInjective);
        }
        Ok(Self {
            preprojective: self.preprojective.iter().map(|(&n, &k)| (n + 1, k)).collect(),
            preinjective: self.preinjective.iter().map(|(&n, &k)| (n - 1, k)).collect(),
            regular: self.regular.clone(),
        })
    }

    /// Same module with point ids replaced by positional names assigned in
    /// `(degree, partition)` order. Counts only depend on this form.
    pub fn normalized(&self) -> KroneckerDescriptor {
        let mut tubes: Vec<(u32, Partition)> =
            self.regular.iter().map(|(p, l)| (p.degree, l.clone())).collect();
        tubes.sort();
        let regular = tubes
            .into_iter()
            .enumerate()
            .map(|(i, (degree, lambda))| {
                (
                    PointLabel {
                        id: format!("t{i:04}"),
                        degree,
                    },
                    lambda,
                )
            })
            .collect();
        Self {
            preprojective: self.preprojective.clone(),
            preinjective: self.preinjective.clone(),
            regular,
        }
    }
}

/// `dim Hom(M, N)` extended additively over summands.
pub fn hom_dim_modules(m: &KroneckerDescriptor, n: &KroneckerDescriptor) -> u64 {
    bilinear(m, n, hom_dim)
}

/// `dim Ext^1(M, N)` extended additively over summands.
pub fn ext_dim_modules(m: &KroneckerDescriptor, n: &KroneckerDescriptor) -> u64 {
    bilinear(m, n, ext_dim)
}

fn bilinear(
    m: &KroneckerDescriptor,
    n: &KroneckerDescriptor,
    f: fn(&Indecomposable, &Indecomposable) -> u64,
) -> u64 {
    let (sm, sn) = (m.summands(), n.summands());
    sm.iter()
        .flat_map(|(x, i)| sn.iter().map(move |(y, j)| (*i as u64) * (*j as u64) * f(x, y)))
        .sum()
}

impl fmt::Display for KroneckerDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut items: Vec<String> = Vec::new();
        let mult = |k: u32| if k == 1 { String::new() } else { format!("{k}*") };
        for (&n, &k) in &self.preprojective {
            items.push(format!("{}P{n}", mult(k)));
        }
        for (p, lambda) in &self.regular {
            let deg = if p.degree == 1 {
                String::new()
            } else {
                format!("@{}", p.degree)
            };
            items.push(format!("R({}{deg},{lambda})", p.id));
        }
        for (&n, &k) in &self.preinjective {
            items.push(format!("{}I{n}", mult(k)));
        }
        f.write_str(&items.join(" + "))
    }
}

impl FromStr for KroneckerDescriptor {
    type Err = DescriptorParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DescParser { src: s, pos: 0 }.module()
    }
}

struct DescParser<'a> {
    src: &'a str,
    pos: usize,
}

impl DescParser<'_> {
    fn err(&self, message: impl Into<String>) -> DescriptorParseError {
        DescriptorParseError {
            pos: self.pos,
            message: message.into(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let t = self.rest().trim_start();
        self.pos = self.src.len() - t.len();
    }

    fn eat(&mut self, c: char) -> bool {
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), DescriptorParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.err(format!("expected '{c}'")))
        }
    }

    fn nat(&mut self) -> Result<u32, DescriptorParseError> {
        let n = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if n == 0 {
            return Err(self.err("expected a number"));
        }
        let v = self.src[self.pos..self.pos + n]
            .parse()
            .map_err(|_| self.err("number out of range"))?;
        self.pos += n;
        Ok(v)
    }

    fn module(mut self) -> Result<KroneckerDescriptor, DescriptorParseError> {
        let mut out = KroneckerDescriptor::new();
        self.skip_ws();
        if self.rest().trim_end() == "0" {
            return Ok(out);
        }
        loop {
            self.skip_ws();
            self.term(&mut out)?;
            self.skip_ws();
            if self.rest().is_empty() {
                return Ok(out);
            }
            self.expect('+')?;
        }
    }

    fn term(&mut self, out: &mut KroneckerDescriptor) -> Result<(), DescriptorParseError> {
        let mut mult = 1;
        if self.rest().starts_with(|c: char| c.is_ascii_digit()) {
            mult = self.nat()?;
            self.skip_ws();
            self.expect('*')?;
            self.skip_ws();
            if mult == 0 {
                return Err(self.err("multiplicity must be positive"));
            }
        }
        if self.eat('P') {
            let n = self.nat()?;
            out.add_preprojective(n, mult);
        } else if self.eat('I') {
            let n = self.nat()?;
            out.add_preinjective(n, mult);
        } else if self.eat('R') {
            let start = self.pos;
            self.expect('(')?;
            let n = self
                .rest()
                .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
                .unwrap_or(self.rest().len());
            if n == 0 {
                return Err(self.err("expected a point label"));
            }
            let id = self.src[self.pos..self.pos + n].to_string();
            self.pos += n;
            let degree = if self.eat('@') { self.nat()? } else { 1 };
            self.expect(',')?;
            self.skip_ws();
            self.expect('[')?;
            let mut parts = Vec::new();
            loop {
                self.skip_ws();
                parts.push(self.nat()?);
                self.skip_ws();
                if !self.eat(',') {
                    break;
                }
            }
            self.expect(']')?;
            self.skip_ws();
            self.expect(')')?;
            let mut all = Vec::with_capacity(parts.len() * mult as usize);
            for _ in 0..mult {
                all.extend_from_slice(&parts);
            }
            let fail = |e: ModelError| DescriptorParseError {
                pos: start,
                message: e.to_string(),
            };
            let point = PointLabel::new(id, degree).map_err(fail)?;
            let lambda = Partition::new(all).map_err(fail)?;
            out.add_regular(point, lambda).map_err(fail)?;
        } else {
            return Err(self.err("expected 'P', 'I' or 'R('"));
        }
        Ok(())
    }
}
