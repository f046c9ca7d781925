//! Mukai vectors `(r, c₁, χ)` on `B×F` and `C×F`: Euler pairings,
//! `d_v`, Verlinde counts, the rank tower, and fiber restrictions.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{rat, to_i64, AlgebraElement, ElementWire, Rational};
use crate::fm_engine::{self, Kernel};
use crate::varieties::SurfaceContext;

#[derive(Clone, Debug)]
pub struct MukaiVector {
    rank: i64,
    c1: AlgebraElement,
    chi: i64,
    surface: Arc<SurfaceContext>,
}

impl PartialEq for MukaiVector {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.chi == other.chi && self.c1 == other.c1 && self.surface == other.surface
    }
}

impl Eq for MukaiVector {}

impl MukaiVector {
    pub fn new(surface: &Arc<SurfaceContext>, rank: i64, c1: AlgebraElement, chi: i64) -> Result<Self> {
        if c1.context() != surface.context() && c1.context().names() != surface.context().names() {
            return Err(Error::ContextMismatch("c₁ is not a class on the surface".into()));
        }
        if c1.degrees().iter().any(|&k| k != 2) {
            return Err(Error::pre(format!("c₁ must be of degree 2, got {c1}")));
        }
        let v = MukaiVector {
            rank,
            c1,
            chi,
            surface: surface.clone(),
        };
        let d = surface.intersect(&v.c1, surface.fiber());
        if !d.is_integer() {
            return Err(Error::NonIntegral(format!("fiber degree {d}")));
        }
        Ok(v)
    }

    /// `(r, aσ + bf, χ)`.
    pub fn split(surface: &Arc<SurfaceContext>, rank: i64, a: i64, b: i64, chi: i64) -> Self {
        MukaiVector {
            rank,
            c1: surface.divisor(a, b),
            chi,
            surface: surface.clone(),
        }
    }

    /// `(r, aσ + bf, χ)` on the abelian surface `B×F`.
    pub fn abelian(rank: i64, a: i64, b: i64, chi: i64) -> Self {
        Self::split(&SurfaceContext::abelian(), rank, a, b, chi)
    }

    /// Mukai vector of a line bundle `O(aσ + bf)`.
    pub fn line(surface: &Arc<SurfaceContext>, a: i64, b: i64) -> Result<Self> {
        Self::from_ch(surface, &surface.divisor(a, b).exp()?)
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn c1(&self) -> &AlgebraElement {
        &self.c1
    }

    pub fn chi(&self) -> i64 {
        self.chi
    }

    pub fn surface(&self) -> &Arc<SurfaceContext> {
        &self.surface
    }

    /// `ch₂ = χ − c₁·td₁` (the surfaces here have `χ(O) = 0`).
    pub fn ch2(&self) -> Rational {
        let td1 = self.surface.todd().homogeneous_part(2);
        rat(self.chi) - self.surface.intersect(&self.c1, &td1)
    }

    pub fn ch(&self) -> AlgebraElement {
        let s = &self.surface;
        let mut ch = AlgebraElement::scalar(s.context(), rat(self.rank));
        ch += &self.c1;
        ch += &s.omega().scale(&self.ch2());
        ch
    }

    pub fn from_ch(surface: &Arc<SurfaceContext>, ch: &AlgebraElement) -> Result<Self> {
        if !ch.is_even() {
            return Err(Error::pre(format!("Chern character has odd components: {ch}")));
        }
        let ch = ch.reinterpret(surface.context())?;
        let rank = to_i64(&ch.constant())?;
        let chi = to_i64(&surface.euler_char(&ch))?;
        Self::new(surface, rank, ch.homogeneous_part(2), chi)
    }

    /// `(σ-coefficient, f-coefficient)` of `c₁`, when it is a combination of
    /// `σ` and `f` with integer coefficients.
    pub fn split_c1(&self) -> Option<(i64, i64)> {
        let (a, b) = self.surface.split_divisor(&self.c1)?;
        Some((to_i64(&a).ok()?, to_i64(&b).ok()?))
    }

    /// `d = c₁·f`.
    pub fn fiber_degree(&self) -> i64 {
        to_i64(&self.surface.intersect(&self.c1, self.surface.fiber())).expect("checked at construction")
    }

    fn same_surface(&self, other: &Self) -> Result<()> {
        if self.surface == other.surface {
            Ok(())
        } else {
            Err(Error::ContextMismatch("Mukai vectors on different surfaces".into()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_surface(other)?;
        Ok(MukaiVector {
            rank: self.rank + other.rank,
            c1: &self.c1 + &other.c1.reinterpret(self.c1.context())?,
            chi: self.chi + other.chi,
            surface: self.surface.clone(),
        })
    }

    pub fn scale(&self, k: i64) -> Self {
        MukaiVector {
            rank: self.rank * k,
            c1: self.c1.scale_int(k),
            chi: self.chi * k,
            surface: self.surface.clone(),
        }
    }

    /// The derived dual; on the abelian surface `(r, c₁, χ) ↦ (r, −c₁, χ)`.
    pub fn dual(&self) -> Result<Self> {
        Self::from_ch(&self.surface, &self.ch().dual()?)
    }

    /// `v ⊗ O(D)`.
    pub fn twist(&self, divisor: &AlgebraElement) -> Result<Self> {
        Self::from_ch(&self.surface, &(&self.ch() * &divisor.exp()?))
    }

    /// `d_v = c₁²/2 − rχ` on the abelian surface.
    pub fn d_v(&self) -> Result<i64> {
        if !self.surface.is_abelian() {
            return Err(Error::pre("d_v is defined here for the abelian surface only"));
        }
        let half = self.surface.intersect(&self.c1, &self.c1) / rat(2);
        let d = half - rat(self.rank * self.chi);
        if !d.is_integer() {
            return Err(Error::invariant("d_v", format!("non-integral value {d}")));
        }
        to_i64(&d)
    }

    /// `m = d_v + rχ`.
    pub fn m_value(&self) -> Result<i64> {
        Ok(self.d_v()? + self.rank * self.chi)
    }

    pub fn to_text(&self) -> String {
        let c1 = match self.split_c1() {
            Some((0, 0)) => "0".to_string(),
            Some((a, 0)) => format!("{a}σ"),
            Some((0, b)) => format!("{b}f"),
            Some((a, b)) if b < 0 => format!("{a}σ{b}f"),
            Some((a, b)) => format!("{a}σ+{b}f"),
            None => self.c1.to_string(),
        };
        format!("{}:({c1}):{}", self.rank, self.chi)
    }

    /// Parses `r:(aσ+bf):chi` on the given surface. `s` or `sigma` may stand
    /// for `σ`.
    pub fn parse(surface: &Arc<SurfaceContext>, text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("`{text}`: {why}"));
        let open = text.find('(').ok_or_else(|| bad("missing `(`"))?;
        let close = text.rfind(')').ok_or_else(|| bad("missing `)`"))?;
        if close < open {
            return Err(bad("unbalanced parentheses"));
        }
        let head = text[..open].trim();
        let tail = text[close + 1..].trim();
        let rank_str = head.strip_suffix(':').ok_or_else(|| bad("expected `:` before `(`"))?;
        let chi_str = tail.strip_prefix(':').ok_or_else(|| bad("expected `:` after `)`"))?;
        let rank: i64 = rank_str.trim().parse().map_err(|_| bad("rank is not an integer"))?;
        let chi: i64 = chi_str.trim().parse().map_err(|_| bad("χ is not an integer"))?;
        let (a, b) = parse_divisor(&text[open + 1..close]).map_err(|e| bad(&e))?;
        Ok(Self::split(surface, rank, a, b, chi))
    }

    pub fn to_wire(&self) -> MukaiWire {
        let (sigma, f, c1) = match self.split_c1() {
            Some((a, b)) => (Some(a.to_string()), Some(b.to_string()), None),
            None => (None, None, Some(ElementWire::from(&self.c1))),
        };
        MukaiWire {
            text: self.to_text(),
            rank: self.rank.to_string(),
            sigma,
            f,
            c1,
            chi: self.chi.to_string(),
            genus: self.surface.genus().to_string(),
        }
    }

    pub fn from_wire(w: &MukaiWire) -> Result<Self> {
        let int = |s: &str| -> Result<i64> { s.parse().map_err(|_| Error::Parse(format!("`{s}` is not an integer"))) };
        let surface = SurfaceContext::with_genus(int(&w.genus)? as usize)?;
        let rank = int(&w.rank)?;
        let chi = int(&w.chi)?;
        match (&w.sigma, &w.f, &w.c1) {
            (Some(a), Some(b), _) => Ok(Self::split(&surface, rank, int(a)?, int(b)?, chi)),
            (_, _, Some(e)) => Self::new(&surface, rank, e.to_element()?.reinterpret(surface.context())?, chi),
            _ => Err(Error::Parse("missing c₁".into())),
        }
    }
}

fn parse_divisor(s: &str) -> std::result::Result<(i64, i64), String> {
    let cleaned: String = s
        .replace("sigma", "σ")
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == 's' { 'σ' } else { c })
        .collect();
    if cleaned.is_empty() {
        return Err("empty divisor".into());
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for c in cleaned.chars() {
        if (c == '+' || c == '-') && !cur.is_empty() {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(c);
    }
    terms.push(cur);
    let (mut a, mut b) = (0i64, 0i64);
    for t in terms {
        let (coef, sym) = match t.char_indices().last() {
            Some((i, 'σ')) => (&t[..i], Some('σ')),
            Some((i, 'f')) => (&t[..i], Some('f')),
            _ => (t.as_str(), None),
        };
        let coef = coef.trim_end_matches('*');
        let k: i64 = match coef {
            "" | "+" => 1,
            "-" => -1,
            c => c.parse().map_err(|_| format!("bad coefficient `{c}`"))?,
        };
        match sym {
            Some('σ') => a += k,
            Some('f') => b += k,
            _ if k == 0 => {}
            _ => return Err(format!("term `{t}` has no divisor symbol")),
        }
    }
    Ok((a, b))
}

impl fmt::Display for MukaiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl FromStr for MukaiVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Self::parse(&SurfaceContext::abelian(), s)
    }
}

/// JSON form of a Mukai vector; numbers are strings.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct MukaiWire {
    pub text: String,
    pub rank: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub f: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub c1: Option<ElementWire>,
    pub chi: String,
    pub genus: String,
}

impl Serialize for MukaiVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_wire().serialize(s)
    }
}

impl<'de> Deserialize<'de> for MukaiVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let w = MukaiWire::deserialize(d)?;
        MukaiVector::from_wire(&w).map_err(serde::de::Error::custom)
    }
}

/// Advisory record of the polarization `H = σ + N·f`, `N ≫ 0`. It carries
/// no numerical value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolarizationRecord {
    pub description: String,
    pub n_is_symbolic: bool,
}

impl Default for PolarizationRecord {
    fn default() -> Self {
        PolarizationRecord {
            description: "H = σ + N·f, N sufficiently large".into(),
            n_is_symbolic: true,
        }
    }
}

/// Advisory stability-range predicate `⟨v,v⟩ ≥ 2(r² + r − 1)`.
pub fn in_stability_range(v: &MukaiVector) -> Result<bool> {
    let r = v.rank;
    Ok(2 * v.d_v()? >= 2 * (r * r + r - 1))
}

/// `χ(v·w) = ∫ ch(v)·ch(w)·td`.
pub fn product_chi(v: &MukaiVector, w: &MukaiVector) -> Result<i64> {
    v.same_surface(w)?;
    let s = &v.surface;
    to_i64(&s.euler_char(&(&v.ch() * &w.ch())))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Plus,
    Minus,
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plus" | "+" => Ok(Side::Plus),
            "minus" | "-" => Ok(Side::Minus),
            _ => Err(Error::Parse(format!("side must be plus or minus, got `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerlindeCount {
    pub c1_l: AlgebraElement,
    pub chi_l: i64,
    pub d_v: i64,
    pub d_w: i64,
    pub count: BigInt,
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n || n < 0 {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `c₁(L) = r_v·c₁(w) + r_w·c₁(v)`, the degree-2 part of `v·w`.
pub fn c1_of_product(v: &MukaiVector, w: &MukaiVector) -> AlgebraElement {
    &w.c1.scale_int(v.rank) + &v.c1.scale_int(w.rank)
}

fn count_from(c1_l: AlgebraElement, surface: &SurfaceContext, d_v: i64, d_w: i64) -> Result<VerlindeCount> {
    let chi_l = to_i64(&surface.euler_char(&c1_l.exp()?))?;
    let n = d_v + d_w;
    if n == 0 {
        return Err(Error::pre("d_v + d_w = 0"));
    }
    let (q, rem) = BigInt::from(chi_l).div_rem(&BigInt::from(n));
    if !rem.is_zero() {
        return Err(Error::invariant(
            "verlinde",
            format!("χ(L) = {chi_l} is not divisible by d_v + d_w = {n}"),
        ));
    }
    Ok(VerlindeCount {
        c1_l,
        chi_l,
        d_v,
        d_w,
        count: q * binomial(n, d_v),
    })
}

/// `χ(X, L±)/(d_v+d_w) · binom(d_v+d_w, d_v)`. On the minus side `c₁(L⁻)`
/// is built from the transforms of `v` and `w` under the Poincaré kernel.
pub fn verlinde_count(v: &MukaiVector, w: &MukaiVector, side: Side) -> Result<VerlindeCount> {
    v.same_surface(w)?;
    if !v.surface.is_abelian() {
        return Err(Error::pre("Verlinde counts are defined on the abelian surface"));
    }
    let pc = product_chi(v, w)?;
    if pc != 0 {
        return Err(Error::pre(format!("vectors are not orthogonal: χ(v·w) = {pc}")));
    }
    let (d_v, d_w) = (v.d_v()?, w.d_v()?);
    let c1_l = match side {
        Side::Plus => c1_of_product(v, w),
        Side::Minus => {
            let k: &Kernel = fm_engine::rs_kernel();
            let vh = fm_engine::transform(v, k)?;
            let wh = fm_engine::transform(w, k)?;
            c1_of_product(&vh, &wh)
        }
    };
    let out = count_from(c1_l, &v.surface, d_v, d_w)?;
    // the formula must not depend on the order of v and w
    let swapped = match side {
        Side::Plus => c1_of_product(w, v),
        Side::Minus => out.c1_l.clone(),
    };
    let again = count_from(swapped, &v.surface, d_w, d_v)?;
    if again.count != out.count {
        return Err(Error::invariant("verlinde", "count is not symmetric in v and w"));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiLCheck {
    pub chi_l: i64,
    pub d_v_plus_d_w: i64,
    pub pass: bool,
}

/// For `r = s`: `χ(X, O((r+s)σ − (χ+χ′)f)) = d_v + d_w`.
pub fn chi_l_equals_ell(v: &MukaiVector, w: &MukaiVector) -> Result<ChiLCheck> {
    v.same_surface(w)?;
    if v.rank != w.rank {
        return Err(Error::pre(format!("ranks differ: {} vs {}", v.rank, w.rank)));
    }
    if product_chi(v, w)? != 0 {
        return Err(Error::pre("vectors are not orthogonal"));
    }
    let s = &v.surface;
    let chi_l = s.euler_char_line(v.rank + w.rank, -(v.chi + w.chi))?;
    let ell = v.d_v()? + w.d_v()?;
    Ok(ChiLCheck {
        chi_l,
        d_v_plus_d_w: ell,
        pass: chi_l == ell,
    })
}

/// `v_1 = ch(I_Z ⊗ O(σ + m_1 f))` with `m_1 = χ + ℓ`, then
/// `v_{k+1} = v_k + ch O(χf)`. Each step is checked for `d = ℓ` and
/// `χ(v_k ⊗ O(−χf)) = 0`.
pub fn rank_tower(chi: i64, ell: i64, r_max: i64) -> Result<Vec<MukaiVector>> {
    if ell < 1 || r_max < 1 {
        return Err(Error::pre("rank_tower needs ell ≥ 1 and r_max ≥ 1"));
    }
    let s = SurfaceContext::abelian();
    let m1 = chi + ell;
    let line = MukaiVector::line(&s, 1, m1)?;
    let ideal = MukaiVector::split(&s, 0, 0, 0, -ell);
    let mut v = line.try_add(&ideal)?;
    let step = MukaiVector::line(&s, 0, chi)?;
    let test = MukaiVector::line(&s, 0, -chi)?;
    let mut out = Vec::new();
    for k in 1..=r_max {
        if v.d_v()? != ell {
            return Err(Error::invariant("rank_tower", format!("d_v at step {k} is {}", v.d_v()?)));
        }
        let t = v.twist(test.c1())?;
        if t.chi != 0 {
            return Err(Error::invariant("rank_tower", format!("χ(v_{k}(−χf)) = {}", t.chi)));
        }
        let _ = product_chi(&v, &test)?;
        out.push(v.clone());
        v = v.try_add(&step)?;
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberRestrictionClass {
    pub rank: i64,
    pub degree: i64,
    pub summands: Vec<(i64, i64)>,
    pub degenerate: bool,
}

/// Rank and degree of the restriction of the `k`-th tower member to a
/// fiber; fibers through a point of `Z` split off `O(o − z)`.
pub fn fiber_restriction(k: i64, has_point: bool) -> Result<FiberRestrictionClass> {
    if k < 1 {
        return Err(Error::pre("k must be at least 1"));
    }
    let summands = if has_point { vec![(k - 1, 1), (1, 0)] } else { vec![(k, 1)] };
    let rank = summands.iter().map(|s| s.0).sum();
    let degree = summands.iter().map(|s| s.1).sum();
    Ok(FiberRestrictionClass {
        rank,
        degree,
        degenerate: summands.iter().any(|s| s.0 == 0),
        summands,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KummerDims {
    pub kummer_dim: i64,
    pub moduli_dim: i64,
    #[serde(with = "crate::ledger::big_string")]
    pub etale_degree: BigInt,
}

pub fn kummer_dims(v: &MukaiVector) -> Result<KummerDims> {
    let d = v.d_v()?;
    if d < 1 {
        return Err(Error::pre(format!("d_v = {d} < 1")));
    }
    Ok(KummerDims {
        kummer_dim: 2 * d - 2,
        moduli_dim: 2 * d + 2,
        etale_degree: BigInt::from(d).pow(4),
    })
}

/// `rn + sm` and `(s−r)d_v − r²(χ+χ′)` for shapes `(r, σ+mf, χ)`,
/// `(s, σ+nf, χ′)`.
pub fn pb_sides(v: &MukaiVector, w: &MukaiVector) -> Result<(i64, i64)> {
    let (r, s) = (v.rank, w.rank);
    let m = v.split_c1().ok_or_else(|| Error::pre("v is not of split shape"))?.1;
    let n = w.split_c1().ok_or_else(|| Error::pre("w is not of split shape"))?.1;
    Ok((r * n + s * m, (s - r) * v.d_v()? - r * r * (v.chi + w.chi)))
}
