//! Exterior algebra over the rationals on a finite ordered set of degree-1
//! generators.
//!
//! Elements are sparse maps from square-free monomials (bitmasks over the
//! generator indices) to exact rational coefficients. The orientation of a
//! context is the full ascending monomial, so `integrate` simply reads off
//! its coefficient.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Converts an integral rational to `i64`.
pub fn to_i64(q: &Rational) -> Result<i64> {
    if !q.is_integer() {
        return Err(Error::NonIntegral(q.to_string()));
    }
    q.to_integer()
        .to_i64()
        .ok_or_else(|| Error::NonIntegral(format!("{q} (out of range)")))
}

pub const MAX_GENERATORS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GeneratorSet {
    names: Vec<String>,
}

impl GeneratorSet {
    pub fn new<I, S>(names: I) -> Result<Arc<Self>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_GENERATORS {
            return Err(Error::TooManyGenerators(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::DuplicateGenerator(n.clone()));
            }
        }
        Ok(Arc::new(GeneratorSet { names }))
    }

    pub fn empty() -> Arc<Self> {
        Arc::new(GeneratorSet { names: Vec::new() })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The orientation monomial: every generator, ascending.
    pub fn top(&self) -> Monomial {
        Monomial::full(self.len())
    }
}

fn same_context(a: &Arc<GeneratorSet>, b: &Arc<GeneratorSet>) -> bool {
    Arc::ptr_eq(a, b) || a.names == b.names
}

/// A square-free monomial, stored as a bitmask over generator indices.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(u32);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_bits(bits: u32) -> Self {
        Monomial(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        if n >= 32 {
            Monomial(u32::MAX)
        } else {
            Monomial((1u32 << n) - 1)
        }
    }

    pub fn single(i: usize) -> Self {
        Monomial(1 << i)
    }

    /// Builds a monomial from strictly increasing indices. Returns `None` if
    /// the list is not strictly increasing.
    pub fn from_indices(indices: &[usize]) -> Option<Self> {
        let mut bits = 0u32;
        for w in indices.windows(2) {
            if w[0] >= w[1] {
                return None;
            }
        }
        for &i in indices {
            if i >= 32 {
                return None;
            }
            bits |= 1 << i;
        }
        Some(Monomial(bits))
    }

    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|i| self.0 & (1 << i) != 0).collect()
    }

    pub fn degree(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, other: Monomial) -> bool {
        self.0 & other.0 == other.0
    }

    pub fn complement(self, n: usize) -> Monomial {
        Monomial(Monomial::full(n).0 & !self.0)
    }
}

/// Product of two monomials: `None` when they share a generator, otherwise
/// the merged monomial and whether the merge permutation is odd.
pub fn merge(a: Monomial, b: Monomial) -> Option<(Monomial, bool)> {
    if a.0 & b.0 != 0 {
        return None;
    }
    let mut inversions = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        inversions += if j >= 31 { 0 } else { (a.0 >> (j + 1)).count_ones() };
    }
    Some((Monomial(a.0 | b.0), inversions % 2 == 1))
}

#[derive(Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    ctx: Arc<GeneratorSet>,
    terms: BTreeMap<Monomial, Rational>,
}

impl AlgebraElement {
    pub fn zero(ctx: &Arc<GeneratorSet>) -> Self {
        AlgebraElement {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ctx: &Arc<GeneratorSet>) -> Self {
        Self::scalar(ctx, Rational::one())
    }

    pub fn scalar(ctx: &Arc<GeneratorSet>, q: Rational) -> Self {
        Self::monomial(ctx, Monomial::ONE, q)
    }

    pub fn monomial(ctx: &Arc<GeneratorSet>, m: Monomial, q: Rational) -> Self {
        let mut e = Self::zero(ctx);
        e.add_term(m, q);
        e
    }

    pub fn generator(ctx: &Arc<GeneratorSet>, i: usize) -> Self {
        Self::monomial(ctx, Monomial::single(i), Rational::one())
    }

    /// Wedge of the named generators in the order given.
    pub fn from_names(ctx: &Arc<GeneratorSet>, names: &[&str]) -> Result<Self> {
        let mut e = Self::one(ctx);
        for n in names {
            let i = ctx
                .index_of(n)
                .ok_or_else(|| Error::NotSubset(n.to_string()))?;
            e = e.wedge(&Self::generator(ctx, i))?;
        }
        Ok(e)
    }

    /// The orientation class: coefficient 1 on the top monomial.
    pub fn top(ctx: &Arc<GeneratorSet>) -> Self {
        Self::monomial(ctx, ctx.top(), Rational::one())
    }

    pub fn context(&self) -> &Arc<GeneratorSet> {
        &self.ctx
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, Rational> {
        &self.terms
    }

    pub fn coeff(&self, m: Monomial) -> Rational {
        self.terms.get(&m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(&self) -> Rational {
        self.coeff(Monomial::ONE)
    }

    fn add_term(&mut self, m: Monomial, q: Rational) {
        if q.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += q;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch(format!(
                "[{}] vs [{}]",
                self.ctx.names.join(","),
                other.ctx.names.join(",")
            )))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, q) in &other.terms {
            out.add_term(*m, q.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        AlgebraElement {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, q)| (*m, -q.clone())).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero(&self.ctx);
        }
        AlgebraElement {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.scale(&rat(n))
    }

    /// The wedge product.
    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = Self::zero(&self.ctx);
        for (ma, qa) in &self.terms {
            for (mb, qb) in &other.terms {
                if let Some((m, odd)) = merge(*ma, *mb) {
                    let q = qa * qb;
                    out.add_term(m, if odd { -q } else { q });
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut out = Self::one(&self.ctx);
        for _ in 0..k {
            out = out.wedge(self)?;
        }
        Ok(out)
    }

    pub fn homogeneous_part(&self, k: usize) -> Self {
        AlgebraElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == k)
                .map(|(m, q)| (*m, q.clone()))
                .collect(),
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.terms.keys().map(|m| m.degree()).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn is_homogeneous(&self) -> bool {
        self.degrees().len() <= 1
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.degree() % 2 == 0)
    }

    /// Coefficient of the orientation monomial.
    pub fn integrate(&self) -> Rational {
        self.coeff(self.ctx.top())
    }

    /// `exp` of an element with zero constant term (nilpotent, so the series
    /// terminates).
    pub fn exp(&self) -> Result<Self> {
        if !self.constant().is_zero() {
            return Err(Error::pre("exp needs an element with zero constant term"));
        }
        let mut out = Self::one(&self.ctx);
        let mut power = Self::one(&self.ctx);
        let mut k: i64 = 1;
        loop {
            power = power.wedge(self)?.scale(&ratio(1, k));
            if power.is_zero() {
                break;
            }
            out = out.try_add(&power)?;
            k += 1;
        }
        Ok(out)
    }

    /// Multiplies the degree-`2k` part by `(-1)^k`. This is the Chern
    /// character of the dual on even classes.
    pub fn dual(&self) -> Result<Self> {
        if !self.is_even() {
            return Err(Error::pre("dual is only defined on even classes"));
        }
        Ok(AlgebraElement {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, q)| {
                    let q = if (m.degree() / 2) % 2 == 1 { -q.clone() } else { q.clone() };
                    (*m, q)
                })
                .collect(),
        })
    }

    /// Pulls back along `map`; `self` must live on the map's target.
    pub fn pullback(&self, map: &LinearMap) -> Result<Self> {
        if !same_context(&self.ctx, &map.target) {
            return Err(Error::ContextMismatch("pullback: element is not on the map's target".into()));
        }
        let images: Vec<AlgebraElement> = (0..map.target.len()).map(|t| map.image(t)).collect();
        let mut out = Self::zero(&map.source);
        for (m, q) in &self.terms {
            let mut prod = Self::scalar(&map.source, q.clone());
            for i in m.indices() {
                prod = prod.wedge(&images[i])?;
                if prod.is_zero() {
                    break;
                }
            }
            out = out.try_add(&prod)?;
        }
        Ok(out)
    }

    /// Integrates out the generators in `subset`: keeps only monomials that
    /// contain all of them, moves them to the right end (with sign), and drops
    /// them. The result lives on the context with `subset` removed.
    pub fn fiber_integrate(&self, subset: &[usize]) -> Result<Self> {
        let n = self.ctx.len();
        let mut s_bits = 0u32;
        for &i in subset {
            if i >= n {
                return Err(Error::NotSubset(format!("index {i} in a context of {n} generators")));
            }
            s_bits |= 1 << i;
        }
        let keep: Vec<usize> = (0..n).filter(|i| s_bits & (1 << i) == 0).collect();
        let ctx = GeneratorSet::new(keep.iter().map(|&i| self.ctx.names[i].clone()))?;
        let mut out = Self::zero(&ctx);
        for (m, q) in &self.terms {
            if m.0 & s_bits != s_bits {
                continue;
            }
            // pairs (s, t) with s in subset, t kept, s < t must be swapped
            let mut swaps = 0usize;
            for s in Monomial(s_bits).indices() {
                let above = if s >= 31 { 0 } else { (m.0 & !s_bits) >> (s + 1) };
                swaps += above.count_ones() as usize;
            }
            let mut bits = 0u32;
            for (new, &old) in keep.iter().enumerate() {
                if m.0 & (1 << old) != 0 {
                    bits |= 1 << new;
                }
            }
            let q = if swaps % 2 == 1 { -q.clone() } else { q.clone() };
            out.add_term(Monomial(bits), q);
        }
        Ok(out)
    }

    /// Poincare-dual pushforward along a map whose pullback is `map`. The
    /// element lives on the map's source; the result lives on its target and
    /// satisfies `∫ f_*(a)·b = ∫ a·f^*(b)` for every `b`.
    pub fn pushforward_along(&self, map: &LinearMap) -> Result<Self> {
        if !same_context(&self.ctx, &map.source) {
            return Err(Error::ContextMismatch("pushforward: element is not on the map's source".into()));
        }
        let nx = map.target.len();
        let ny = map.source.len();
        let present: Vec<usize> = self.degrees();
        let mut out = Self::zero(&map.target);
        for bits in 0..(1u64 << nx) {
            let mi = Monomial(bits as u32);
            let comp = mi.complement(nx);
            if !present.iter().any(|&k| k + comp.degree() == ny) {
                continue;
            }
            let beta = Self::monomial(&map.target, comp, Rational::one());
            let val = self.wedge(&beta.pullback(map)?)?.integrate();
            if val.is_zero() {
                continue;
            }
            let (_, odd) = merge(mi, comp).expect("complementary monomials are disjoint");
            out.add_term(mi, if odd { -val } else { val });
        }
        Ok(out)
    }

    /// Re-expresses the element on a larger context: generator `i` goes to
    /// `index_map[i]`. The images need not be increasing; signs are
    /// accounted for.
    pub fn embed(&self, target: &Arc<GeneratorSet>, index_map: &[usize]) -> Result<Self> {
        if index_map.len() != self.ctx.len() {
            return Err(Error::DimensionMismatch {
                expected: self.ctx.len(),
                got: index_map.len(),
            });
        }
        let map = LinearMap::from_index_map(target, &self.ctx, index_map)?;
        self.pullback(&map)
    }

    /// Same element on another context of the same size, generators matched
    /// by position.
    pub fn reinterpret(&self, ctx: &Arc<GeneratorSet>) -> Result<Self> {
        if ctx.len() != self.ctx.len() {
            return Err(Error::DimensionMismatch {
                expected: self.ctx.len(),
                got: ctx.len(),
            });
        }
        Ok(AlgebraElement {
            ctx: ctx.clone(),
            terms: self.terms.clone(),
        })
    }

    /// Terms sorted by degree, then by generator order.
    pub fn sorted_terms(&self) -> Vec<(Monomial, Rational)> {
        let mut v: Vec<(Monomial, Rational)> =
            self.terms.iter().map(|(m, q)| (*m, q.clone())).collect();
        v.sort_by_key(|(m, _)| (m.degree(), m.indices()));
        v
    }

    pub fn monomial_name(&self, m: Monomial) -> String {
        if m == Monomial::ONE {
            return "1".into();
        }
        m.indices()
            .iter()
            .map(|&i| self.ctx.names[i].as_str())
            .collect::<Vec<_>>()
            .join("^")
    }
}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, q)) in self.sorted_terms().into_iter().enumerate() {
            let neg = q.is_negative();
            let abs = q.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if m == Monomial::ONE {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", self.monomial_name(m))?;
            } else {
                write!(f, "{abs}*{}", self.monomial_name(m))?;
            }
        }
        Ok(())
    }
}

impl Add for &AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_add(rhs).expect("context mismatch in +")
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;
    fn add(self, rhs: AlgebraElement) -> AlgebraElement {
        &self + &rhs
    }
}

impl AddAssign<&AlgebraElement> for AlgebraElement {
    fn add_assign(&mut self, rhs: &AlgebraElement) {
        self.check_ctx(rhs).expect("context mismatch in +=");
        for (m, q) in &rhs.terms {
            self.add_term(*m, q.clone());
        }
    }
}

impl Sub for &AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.try_sub(rhs).expect("context mismatch in -")
    }
}

impl Sub for AlgebraElement {
    type Output = AlgebraElement;
    fn sub(self, rhs: AlgebraElement) -> AlgebraElement {
        &self - &rhs
    }
}

impl Neg for &AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

impl Neg for AlgebraElement {
    type Output = AlgebraElement;
    fn neg(self) -> AlgebraElement {
        self.neg_ref()
    }
}

impl Mul for &AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: &AlgebraElement) -> AlgebraElement {
        self.wedge(rhs).expect("context mismatch in *")
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;
    fn mul(self, rhs: AlgebraElement) -> AlgebraElement {
        &self * &rhs
    }
}

/// The pullback action of a morphism on degree-1 generators.
///
/// `rows[t][s]` is the coefficient of source generator `s` in the pullback of
/// target generator `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearMap {
    source: Arc<GeneratorSet>,
    target: Arc<GeneratorSet>,
    rows: Vec<Vec<Rational>>,
}

impl LinearMap {
    pub fn new(
        source: &Arc<GeneratorSet>,
        target: &Arc<GeneratorSet>,
        rows: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        if rows.len() != target.len() {
            return Err(Error::DimensionMismatch {
                expected: target.len(),
                got: rows.len(),
            });
        }
        for row in &rows {
            if row.len() != source.len() {
                return Err(Error::DimensionMismatch {
                    expected: source.len(),
                    got: row.len(),
                });
            }
        }
        Ok(LinearMap {
            source: source.clone(),
            target: target.clone(),
            rows,
        })
    }

    pub fn from_ints(
        source: &Arc<GeneratorSet>,
        target: &Arc<GeneratorSet>,
        rows: &[Vec<i64>],
    ) -> Result<Self> {
        Self::new(
            source,
            target,
            rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(),
        )
    }

    pub fn identity(ctx: &Arc<GeneratorSet>) -> Self {
        let n = ctx.len();
        let rows = (0..n)
            .map(|t| (0..n).map(|s| if s == t { rat(1) } else { rat(0) }).collect())
            .collect();
        LinearMap {
            source: ctx.clone(),
            target: ctx.clone(),
            rows,
        }
    }

    /// Target generator `i` pulls back to source generator `index_map[i]`.
    pub fn from_index_map(
        source: &Arc<GeneratorSet>,
        target: &Arc<GeneratorSet>,
        index_map: &[usize],
    ) -> Result<Self> {
        if index_map.len() != target.len() {
            return Err(Error::DimensionMismatch {
                expected: target.len(),
                got: index_map.len(),
            });
        }
        let mut rows = vec![vec![rat(0); source.len()]; target.len()];
        for (t, &s) in index_map.iter().enumerate() {
            if s >= source.len() {
                return Err(Error::NotSubset(format!("index {s}")));
            }
            rows[t][s] = rat(1);
        }
        Self::new(source, target, rows)
    }

    pub fn source(&self) -> &Arc<GeneratorSet> {
        &self.source
    }

    pub fn target(&self) -> &Arc<GeneratorSet> {
        &self.target
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn image(&self, t: usize) -> AlgebraElement {
        let mut e = AlgebraElement::zero(&self.source);
        for (s, q) in self.rows[t].iter().enumerate() {
            e.add_term(Monomial::single(s), q.clone());
        }
        e
    }

    /// `self: Y -> X` followed by `next: X -> W`, as a map `Y -> W`.
    pub fn then(&self, next: &LinearMap) -> Result<LinearMap> {
        if !same_context(&self.target, &next.source) {
            return Err(Error::ContextMismatch("composition: target/source differ".into()));
        }
        let rows = next
            .rows
            .iter()
            .map(|wrow| {
                (0..self.source.len())
                    .map(|y| {
                        let mut acc = Rational::zero();
                        for (x, c) in wrow.iter().enumerate() {
                            if !c.is_zero() {
                                acc += c * &self.rows[x][y];
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        LinearMap::new(&self.source, &next.target, rows)
    }

    pub fn is_integral(&self) -> bool {
        self.rows.iter().flatten().all(|q| q.is_integer())
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct TermWire {
    pub monomial: Vec<String>,
    pub coeff: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ElementWire {
    pub generators: Vec<String>,
    pub terms: Vec<TermWire>,
}

impl From<&AlgebraElement> for ElementWire {
    fn from(e: &AlgebraElement) -> Self {
        ElementWire {
            generators: e.ctx.names.clone(),
            terms: e
                .sorted_terms()
                .into_iter()
                .map(|(m, q)| TermWire {
                    monomial: m.indices().iter().map(|&i| e.ctx.names[i].clone()).collect(),
                    coeff: q.to_string(),
                })
                .collect(),
        }
    }
}

impl ElementWire {
    pub fn to_element(&self) -> Result<AlgebraElement> {
        let ctx = GeneratorSet::new(self.generators.clone())?;
        let mut out = AlgebraElement::zero(&ctx);
        for t in &self.terms {
            let q: Rational = t
                .coeff
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient `{}`", t.coeff)))?;
            let names: Vec<&str> = t.monomial.iter().map(String::as_str).collect();
            out += &AlgebraElement::from_names(&ctx, &names)?.scale(&q);
        }
        Ok(out)
    }
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ElementWire::from(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = ElementWire::deserialize(d)?;
        wire.to_element().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(names: &[&str]) -> Arc<GeneratorSet> {
        GeneratorSet::new(names.iter().copied()).unwrap()
    }

    fn el(c: &Arc<GeneratorSet>, names: &[&str]) -> AlgebraElement {
        AlgebraElement::from_names(c, names).unwrap()
    }

    #[test]
    fn duplicate_names_rejected() {
        assert_eq!(
            GeneratorSet::new(["a", "b", "a"]).unwrap_err(),
            Error::DuplicateGenerator("a".into())
        );
    }

    #[test]
    fn merge_signs() {
        let a = Monomial::from_indices(&[1]).unwrap();
        let b = Monomial::from_indices(&[0]).unwrap();
        assert_eq!(merge(a, b), Some((Monomial::from_bits(3), true)));
        assert_eq!(merge(b, a), Some((Monomial::from_bits(3), false)));
        assert_eq!(merge(a, a), None);
        // (1,3) * (0,2): inversions (1,0),(3,0),(3,2) -> odd
        let x = Monomial::from_indices(&[1, 3]).unwrap();
        let y = Monomial::from_indices(&[0, 2]).unwrap();
        assert!(merge(x, y).unwrap().1);
    }

    #[test]
    fn wedge_basic() {
        let c = ctx(&["b1", "b2", "f1", "f2"]);
        let b1 = el(&c, &["b1"]);
        let b2 = el(&c, &["b2"]);
        assert_eq!(&b1 * &b2, el(&c, &["b1", "b2"]));
        assert_eq!(&b2 * &b1, -el(&c, &["b1", "b2"]));
        assert!((&b1 * &b1).is_zero());
        let f = el(&c, &["b1", "b2"]);
        let s = el(&c, &["f1", "f2"]);
        assert_eq!((&f * &s).integrate(), rat(1));
        assert_eq!(&f * &s, &s * &f);
    }

    #[test]
    fn poincare_square() {
        let c = ctx(&["b1", "b2", "b1'", "b2'"]);
        let p = el(&c, &["b1", "b2'"]) - el(&c, &["b2", "b1'"]);
        assert_eq!(&p * &p, el(&c, &["b1", "b2", "b1'", "b2'"]).scale_int(-2));
    }

    #[test]
    fn homogeneous_parts_sum_back() {
        let c = ctx(&["b1", "b2", "f1", "f2"]);
        let s = el(&c, &["f1", "f2"]);
        let w = AlgebraElement::top(&c);
        let a = AlgebraElement::one(&c) + s.clone() + w.scale_int(3);
        assert_eq!(a.homogeneous_part(2), s);
        assert_eq!(a.homogeneous_part(0), AlgebraElement::one(&c));
        let mut total = AlgebraElement::zero(&c);
        for k in 0..=4 {
            total += &a.homogeneous_part(k);
        }
        assert_eq!(total, a);
    }

    #[test]
    fn exp_of_divisor() {
        let c = ctx(&["b1", "b2", "f1", "f2"]);
        let s = el(&c, &["f1", "f2"]);
        let f = el(&c, &["b1", "b2"]);
        let d = s.scale_int(3) + f.scale_int(4);
        let e = d.exp().unwrap();
        assert_eq!(e.integrate(), rat(12));
        assert_eq!(e.homogeneous_part(2), d);
        assert!(AlgebraElement::one(&c).exp().is_err());
    }

    #[test]
    fn pullback_multiplication_by_n() {
        let c = ctx(&["x", "y"]);
        let map = LinearMap::from_ints(&c, &c, &[vec![3, 0], vec![0, 3]]).unwrap();
        let pt = AlgebraElement::top(&c);
        assert_eq!(pt.pullback(&map).unwrap(), pt.scale_int(9));
    }

    #[test]
    fn pullback_dimension_mismatch() {
        let c = ctx(&["x", "y"]);
        assert!(LinearMap::from_ints(&c, &c, &[vec![1, 0]]).is_err());
    }

    #[test]
    fn fiber_integration_examples() {
        let c = ctx(&["b1", "b2", "f1", "f2"]);
        let s = el(&c, &["f1", "f2"]);
        let f = el(&c, &["b1", "b2"]);
        let w = &s * &f;
        let s_idx = [2, 3];
        let base = s.fiber_integrate(&s_idx).unwrap();
        assert_eq!(base.context().names(), &["b1".to_string(), "b2".to_string()]);
        assert_eq!(base, AlgebraElement::one(base.context()));
        assert_eq!(w.fiber_integrate(&s_idx).unwrap(), AlgebraElement::top(base.context()));
        assert!(f.fiber_integrate(&s_idx).unwrap().is_zero());
        assert!(s.fiber_integrate(&[7]).is_err());
    }

    #[test]
    fn fiber_integrate_poincare() {
        // p2_*(ch P) on E x E' is -pt'
        let c = ctx(&["x", "y", "x'", "y'"]);
        let p = el(&c, &["x", "y'"]).scale_int(-1) + el(&c, &["y", "x'"]);
        let ch = p.exp().unwrap();
        let out = ch.fiber_integrate(&[0, 1]).unwrap();
        assert_eq!(out, AlgebraElement::top(out.context()).scale_int(-1));
        let pt1 = el(&c, &["x", "y"]);
        let out = (&pt1 * &ch).fiber_integrate(&[0, 1]).unwrap();
        assert_eq!(out, AlgebraElement::one(out.context()));
    }

    #[test]
    fn pushforward_examples() {
        let c = ctx(&["x", "y"]);
        let a = el(&c, &["x"]) + AlgebraElement::one(&c).scale_int(2);
        let id = LinearMap::identity(&c);
        assert_eq!(a.pushforward_along(&id).unwrap(), a);

        // zero-section o -> E
        let o = GeneratorSet::empty();
        let incl = LinearMap::new(&o, &c, vec![vec![], vec![]]).unwrap();
        let pushed = AlgebraElement::one(&o).pushforward_along(&incl).unwrap();
        assert_eq!(pushed, AlgebraElement::top(&c));

        // graph of x -> (r x, x) paired with pt x 1 gives r^2
        let cc = ctx(&["x", "y", "x'", "y'"]);
        let r = 3;
        let graph = LinearMap::from_ints(
            &c,
            &cc,
            &[vec![r, 0], vec![0, r], vec![1, 0], vec![0, 1]],
        )
        .unwrap();
        let g = AlgebraElement::one(&c).pushforward_along(&graph).unwrap();
        assert_eq!((&g * &el(&cc, &["x", "y"])).integrate(), rat(r * r));
        assert_eq!((&g * &el(&cc, &["x'", "y'"])).integrate(), rat(1));
    }

    #[test]
    fn embed_and_reinterpret() {
        let small = ctx(&["x", "y"]);
        let big = ctx(&["a", "x", "b", "y"]);
        let e = el(&small, &["x", "y"]);
        assert_eq!(e.embed(&big, &[1, 3]).unwrap(), el(&big, &["x", "y"]));
        assert_eq!(e.embed(&big, &[3, 1]).unwrap(), el(&big, &["x", "y"]).scale_int(-1));
        let other = ctx(&["p", "q"]);
        assert_eq!(e.reinterpret(&other).unwrap(), el(&other, &["p", "q"]));
    }

    #[test]
    fn composition_of_maps() {
        let c = ctx(&["x", "y"]);
        let two = LinearMap::from_ints(&c, &c, &[vec![2, 0], vec![0, 2]]).unwrap();
        let swap = LinearMap::from_ints(&c, &c, &[vec![0, 1], vec![1, 0]]).unwrap();
        let comp = two.then(&swap).unwrap();
        let pt = AlgebraElement::top(&c);
        assert_eq!(
            pt.pullback(&comp).unwrap(),
            pt.pullback(&swap).unwrap().pullback(&two).unwrap()
        );
    }

    #[test]
    fn dual_flips_degree_two() {
        let c = ctx(&["b1", "b2", "f1", "f2"]);
        let d = el(&c, &["f1", "f2"]) + el(&c, &["b1", "b2"]).scale_int(2);
        let ch = d.exp().unwrap();
        assert_eq!(ch.dual().unwrap(), (-d).exp().unwrap());
        assert!(el(&c, &["b1"]).dual().is_err());
    }

    #[test]
    fn display_and_wire_round_trip() {
        let c = ctx(&["b1", "b2", "f1", "f2"]);
        let e = AlgebraElement::one(&c) - el(&c, &["f1", "f2"]).scale(&ratio(3, 2));
        assert_eq!(e.to_string(), "1 - 3/2*f1^f2");
        let json = serde_json::to_string(&e).unwrap();
        let back: AlgebraElement = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
    }

    #[test]
    fn context_mismatch_is_an_error() {
        let a = AlgebraElement::one(&ctx(&["x"]));
        let b = AlgebraElement::one(&ctx(&["y"]));
        assert!(matches!(a.wedge(&b), Err(Error::ContextMismatch(_))));
    }
}
