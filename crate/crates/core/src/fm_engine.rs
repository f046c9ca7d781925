//! Fourier–Mukai kernels as cohomology classes on products, numerical
//! transforms of Mukai vectors, kernel convolution, and the translation /
//! twist bookkeeping of the relative transforms.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock};

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exterior::{rat, to_i64, AlgebraElement, Rational};
use crate::ledger::{FGAbelianGroup, GroupElement, FixedDetNumerics, SplitSurfaceBundleLedger};
use crate::mukai::{MukaiVector, Side};
use crate::varieties::{pair_classes, AbelianModel, ProductModel, SurfaceContext};

/// A class on `source × target` (target generators primed). The class is
/// the Chern character of the underlying sheaf; `shift` records `[n]`, which
/// multiplies it by `(−1)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    name: String,
    source: ProductModel,
    target: ProductModel,
    product: ProductModel,
    class: AlgebraElement,
    shift: i64,
}

impl Kernel {
    pub fn new(name: impl Into<String>, source: &ProductModel, target: &ProductModel, class: AlgebraElement, shift: i64) -> Result<Self> {
        let product = source.concat(&target.renamed("'"))?;
        let class = class.reinterpret(product.context())?;
        if !class.is_even() {
            return Err(Error::invariant("kernel", "class has odd components"));
        }
        Ok(Kernel {
            name: name.into(),
            source: source.clone(),
            target: target.clone(),
            product,
            class,
            shift,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &ProductModel {
        &self.source
    }

    pub fn target(&self) -> &ProductModel {
        &self.target
    }

    pub fn product(&self) -> &ProductModel {
        &self.product
    }

    /// Chern character of the sheaf, ignoring the shift.
    pub fn class(&self) -> &AlgebraElement {
        &self.class
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    /// Chern character of the shifted object.
    pub fn ch(&self) -> AlgebraElement {
        if self.shift.is_odd() {
            -&self.class
        } else {
            self.class.clone()
        }
    }

    pub fn rank(&self) -> Rational {
        self.class.constant()
    }

    pub fn shifted(&self, n: i64) -> Self {
        let mut k = self.clone();
        k.shift += n;
        k.name = format!("{}[{n}]", self.name);
        k
    }

    pub fn renamed(&self, name: impl Into<String>) -> Self {
        let mut k = self.clone();
        k.name = name.into();
        k
    }

    /// Derived dual: `ch ↦ ch^∨`, `[n] ↦ [−n]`.
    pub fn dual(&self) -> Result<Self> {
        Ok(Kernel {
            name: format!("{}^∨", self.name),
            class: self.class.dual()?,
            shift: -self.shift,
            ..self.clone()
        })
    }

    /// The same kernel read in the opposite direction.
    pub fn transposed(&self) -> Result<Self> {
        let ns = self.source.context().len();
        let nt = self.target.context().len();
        let product = self.target.concat(&self.source.renamed("'"))?;
        let index_map: Vec<usize> = (0..ns).map(|i| nt + i).chain(0..nt).collect();
        let class = self.class.embed(product.context(), &index_map)?;
        Ok(Kernel {
            name: format!("{}~", self.name),
            source: self.target.clone(),
            target: self.source.clone(),
            product,
            class,
            shift: self.shift,
        })
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name)
    }
}

fn same_names(a: &ProductModel, b: &ProductModel) -> bool {
    a.context().names() == b.context().names()
}

/// `p₂⋆(p₁⋆e · ch K)`; `e` lives on the kernel's source, the result on its
/// target.
pub fn transform_class(e: &AlgebraElement, k: &Kernel) -> Result<AlgebraElement> {
    if e.context().names() != k.source.context().names() {
        return Err(Error::ContextMismatch(format!(
            "kernel `{}` acts on {:?}, element lives on {:?}",
            k.name,
            k.source.context().names(),
            e.context().names()
        )));
    }
    let ns = k.source.context().len();
    let src: Vec<usize> = (0..ns).collect();
    let lifted = e.reinterpret(k.source.context())?.embed(k.product.context(), &src)?;
    let out = (&lifted * &k.ch()).fiber_integrate(&src)?;
    out.reinterpret(k.target.context())
}

pub fn transform(v: &MukaiVector, k: &Kernel) -> Result<MukaiVector> {
    if !same_names(k.source(), v.surface().model()) || !same_names(k.target(), v.surface().model()) {
        return Err(Error::ContextMismatch(format!(
            "kernel `{}` does not act on the surface of {v}",
            k.name
        )));
    }
    let ch = transform_class(&v.ch(), k)?;
    MukaiVector::from_ch(v.surface(), &ch)
}

/// `p₁₃⋆(p₁₂⋆K1 · p₂₃⋆K2)`, the kernel of "first `K1`, then `K2`".
pub fn convolve(k1: &Kernel, k2: &Kernel) -> Result<Kernel> {
    let mid1 = k1.target.descriptor();
    let mid2 = k2.source.descriptor();
    let genera = |d: &crate::varieties::ModelDescriptor| d.factors.iter().map(|f| f.genus).collect::<Vec<_>>();
    if genera(&mid1) != genera(&mid2) {
        return Err(Error::ContextMismatch(format!(
            "cannot convolve `{}` with `{}`: middle factors differ",
            k1.name, k2.name
        )));
    }
    let (ns, nm, nt) = (
        k1.source.context().len(),
        k1.target.context().len(),
        k2.target.context().len(),
    );
    let names: Vec<String> = k1
        .source
        .context()
        .names()
        .iter()
        .cloned()
        .chain((0..nm).map(|i| format!("~m{i}")))
        .chain((0..nt).map(|i| format!("~t{i}")))
        .collect();
    let triple = crate::exterior::GeneratorSet::new(names)?;
    let first: Vec<usize> = (0..ns + nm).collect();
    let second: Vec<usize> = (ns..ns + nm + nt).collect();
    let a = k1.ch().embed(&triple, &first)?;
    let b = k2.ch().embed(&triple, &second)?;
    let middle: Vec<usize> = (ns..ns + nm).collect();
    let class = (&a * &b).fiber_integrate(&middle)?;
    let mut k = Kernel::new(format!("{}*{}", k1.name, k2.name), &k1.source, &k2.target, class, 0)?;
    // the shifts are already folded into the class
    k.shift = 0;
    Ok(k)
}

fn surface_model() -> ProductModel {
    SurfaceContext::abelian().model().clone()
}

fn fiber_model() -> ProductModel {
    ProductModel::single(AbelianModel::elliptic("F"))
}

/// `(c₁ P_F, pt_F, pt_F')` on `F×F'`.
fn fiber_pair_classes() -> Result<(AlgebraElement, AlgebraElement, AlgebraElement)> {
    let m = fiber_model();
    let pair = m.concat(&m.renamed("'"))?;
    let (c1p, _, _) = pair_classes(&pair, 0, 1)?;
    Ok((c1p, pair.pt_of(0), pair.pt_of(1)))
}

/// The Poincaré kernel on `F×F'`.
pub fn poincare_fiber_kernel() -> Result<Kernel> {
    let (c1p, _, _) = fiber_pair_classes()?;
    let f = fiber_model();
    Kernel::new("P_F", &f, &f, c1p.exp()?, 0)
}

/// Identity kernel: the diagonal class of `model × model'`.
pub fn identity_kernel(model: &ProductModel) -> Result<Kernel> {
    let pair = model.concat(&model.renamed("'"))?;
    let n = model.factors().len();
    let mut class = AlgebraElement::one(pair.context());
    for i in 0..n {
        let (_, diag, _) = pair_classes(&pair, i, n + i)?;
        class = &class * &diag;
    }
    Kernel::new("Δ", model, model, class, 0)
}

/// Multiplies a class on `F×F'` by the diagonal of the base, giving a
/// relative kernel on `X×X'` with `X = base × F`.
pub fn lift_fiber_kernel(surface: &ProductModel, fiber_kernel: &Kernel, name: &str) -> Result<Kernel> {
    let pair = surface.concat(&surface.renamed("'"))?;
    let (_, diag_b, _) = pair_classes(&pair, 0, 2)?;
    let mut idx = pair.factor_indices(1);
    idx.extend(pair.factor_indices(3));
    let fiber = fiber_kernel.class.embed(pair.context(), &idx)?;
    Kernel::new(name, surface, surface, &diag_b * &fiber, fiber_kernel.shift)
}

fn build_rs(sign: i64, shift: i64, name: &str) -> Result<Kernel> {
    let x = surface_model();
    let pair = x.concat(&x.renamed("'"))?;
    let (cb, _, _) = pair_classes(&pair, 0, 2)?;
    let (cf, _, _) = pair_classes(&pair, 1, 3)?;
    Kernel::new(name, &x, &x, (&cb + &cf).scale_int(sign).exp()?, shift)
}

static RS: OnceLock<Kernel> = OnceLock::new();
static RS_INVERSE: OnceLock<Kernel> = OnceLock::new();
static RS_DAGGER: OnceLock<Kernel> = OnceLock::new();
static RS_DAGGER_INVERSE: OnceLock<Kernel> = OnceLock::new();

/// Poincaré kernel `P = P_B ⊠ P_F` on `X×X`.
pub fn rs_kernel() -> &'static Kernel {
    RS.get_or_init(|| build_rs(1, 0, "RS").expect("standard kernel"))
}

/// `P^∨[2]`.
pub fn rs_inverse_kernel() -> &'static Kernel {
    RS_INVERSE.get_or_init(|| build_rs(-1, 2, "RS^-1").expect("standard kernel"))
}

/// Relative Poincaré kernel `[Δ_B]·exp(c₁ P_F)`.
pub fn rsdagger_kernel() -> &'static Kernel {
    RS_DAGGER.get_or_init(|| {
        let p = poincare_fiber_kernel().expect("standard kernel");
        lift_fiber_kernel(&surface_model(), &p, "RS†").expect("standard kernel")
    })
}

/// `[Δ_B]·exp(−c₁ P_F)` with shift 1.
pub fn rsdagger_inverse_kernel() -> &'static Kernel {
    RS_DAGGER_INVERSE.get_or_init(|| {
        let p = poincare_fiber_kernel().and_then(|p| p.dual()).expect("standard kernel");
        lift_fiber_kernel(&surface_model(), &p.shifted(1), "RS†^-1").expect("standard kernel")
    })
}

/// Relative Poincaré kernel on `C×F` for a base of any genus.
pub fn rsdagger_kernel_on(surface: &SurfaceContext) -> Result<Kernel> {
    lift_fiber_kernel(surface.model(), &poincare_fiber_kernel()?, "RS†")
}

/// The unique `(a, b)` with `ad + br = 1` and `0 < a < r`.
pub fn canonical_ab(r: i64, d: i64) -> Result<(i64, i64)> {
    if r < 2 {
        return Err(Error::pre(format!("need r ≥ 2 for 0 < a < r, got r = {r}")));
    }
    let g = d.extended_gcd(&r);
    if g.gcd != 1 {
        return Err(Error::pre(format!("gcd(r, d) = gcd({r}, {d}) ≠ 1")));
    }
    let a = g.x.mod_floor(&r);
    Ok((a, (1 - a * d) / r))
}

fn check_u_params(a: i64, b: i64, r: i64, d: i64) -> Result<()> {
    if a * d + b * r != 1 {
        return Err(Error::pre(format!("ad + br = {} ≠ 1", a * d + b * r)));
    }
    if !(0 < a && a < r) {
        return Err(Error::pre(format!("need 0 < a < r, got a = {a}, r = {r}")));
    }
    Ok(())
}

/// `ch U = a·exp(c₁(U)/a)` on `F×F'` with
/// `c₁(U) = b[o×F] + r[F×o] + c₁(P_F)`. Checks `χ(U) = −d` and integrality.
pub fn u_fiber_kernel(a: i64, b: i64, r: i64, d: i64) -> Result<Kernel> {
    check_u_params(a, b, r, d)?;
    let (c1p, pt1, pt2) = fiber_pair_classes()?;
    let c1u = &(&pt1.scale_int(b) + &pt2.scale_int(r)) + &c1p;
    let ch = c1u.scale(&crate::exterior::ratio(1, a)).exp()?.scale_int(a);
    if let Some((_, q)) = ch.terms().iter().find(|(_, q)| !q.is_integer()) {
        return Err(Error::NonIntegral(format!("ch U has coefficient {q}")));
    }
    let chi = ch.integrate();
    if chi != rat(-d) {
        return Err(Error::invariant("χ(U)", format!("expected {}, got {chi}", -d)));
    }
    let f = fiber_model();
    Kernel::new(format!("U({a},{b},{r},{d})"), &f, &f, ch, 0)
}

/// The relative kernel `[Δ_B]·ch U` on `X×X`.
pub fn u_kernel(a: i64, b: i64, r: i64, d: i64) -> Result<Kernel> {
    let u = u_fiber_kernel(a, b, r, d)?;
    let name = u.name.clone();
    lift_fiber_kernel(&surface_model(), &u, &name)
}

/// `[Δ_B]·ch U^∨`, the dual taken relative to the base. The derived dual on
/// all of `X×X` differs from this by a sign since `[Δ_B]` has codimension 1.
pub fn u_dual_kernel(a: i64, b: i64, r: i64, d: i64) -> Result<Kernel> {
    let u = u_fiber_kernel(a, b, r, d)?.dual()?;
    let name = u.name.clone();
    lift_fiber_kernel(&surface_model(), &u, &name)
}

/// `V = π₁₃⋆(π₁₂⋆Ũ^∨ ⊗ π₂₃⋆P_F)[1]` on `F×F'`.
pub fn v_fiber_kernel(a: i64, b: i64, r: i64, d: i64) -> Result<Kernel> {
    let u = u_fiber_kernel(a, b, r, d)?;
    let v = convolve(&u.transposed()?.dual()?, &poincare_fiber_kernel()?)?;
    Ok(v.shifted(1).renamed(format!("V({a},{b},{r},{d})")))
}

/// Kernels addressable by name.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum KernelSpec {
    Rs,
    RsInverse,
    Rsdagger,
    RsdaggerInverse,
    Identity,
    U { a: i64, b: i64, r: i64, d: i64 },
    /// Relative dual `U^∨`, the transform applied to `v^∨`.
    UDual { a: i64, b: i64, r: i64, d: i64 },
}

impl KernelSpec {
    pub fn build(&self) -> Result<Kernel> {
        Ok(match *self {
            KernelSpec::Rs => rs_kernel().clone(),
            KernelSpec::RsInverse => rs_inverse_kernel().clone(),
            KernelSpec::Rsdagger => rsdagger_kernel().clone(),
            KernelSpec::RsdaggerInverse => rsdagger_inverse_kernel().clone(),
            KernelSpec::Identity => identity_kernel(&surface_model())?,
            KernelSpec::U { a, b, r, d } => u_kernel(a, b, r, d)?,
            KernelSpec::UDual { a, b, r, d } => u_dual_kernel(a, b, r, d)?,
        })
    }
}

impl fmt::Display for KernelSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KernelSpec::Rs => write!(f, "rs"),
            KernelSpec::RsInverse => write!(f, "rs-inverse"),
            KernelSpec::Rsdagger => write!(f, "rsdagger"),
            KernelSpec::RsdaggerInverse => write!(f, "rsdagger-inverse"),
            KernelSpec::Identity => write!(f, "identity"),
            KernelSpec::U { a, b, r, d } => write!(f, "u:{a},{b},{r},{d}"),
            KernelSpec::UDual { a, b, r, d } => write!(f, "udual:{a},{b},{r},{d}"),
        }
    }
}

impl FromStr for KernelSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let four = |rest: &str| -> Result<(i64, i64, i64, i64)> {
            let nums = rest
                .split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::Parse(format!("kernel parameters `{rest}` must be integers")))?;
            match nums[..] {
                [a, b, r, d] => Ok((a, b, r, d)),
                _ => Err(Error::Parse(format!("expected a,b,r,d, got `{rest}`"))),
            }
        };
        match s.trim() {
            "rs" => Ok(KernelSpec::Rs),
            "rs-inverse" => Ok(KernelSpec::RsInverse),
            "rsdagger" => Ok(KernelSpec::Rsdagger),
            "rsdagger-inverse" => Ok(KernelSpec::RsdaggerInverse),
            "identity" => Ok(KernelSpec::Identity),
            other => {
                if let Some(rest) = other.strip_prefix("u:") {
                    let (a, b, r, d) = four(rest)?;
                    Ok(KernelSpec::U { a, b, r, d })
                } else if let Some(rest) = other.strip_prefix("udual:") {
                    let (a, b, r, d) = four(rest)?;
                    Ok(KernelSpec::UDual { a, b, r, d })
                } else {
                    Err(Error::Parse(format!(
                        "unknown kernel `{other}` (expected rs, rs-inverse, rsdagger, rsdagger-inverse, identity, u:a,b,r,d, udual:a,b,r,d)"
                    )))
                }
            }
        }
    }
}

/// One named equality checked by a suite.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteCheck {
    pub name: String,
    pub lhs: String,
    pub rhs: String,
}

impl SuiteCheck {
    fn new(name: &str, lhs: impl ToString, rhs: impl ToString) -> Self {
        SuiteCheck {
            name: name.to_string(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn pass(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FixedDetReport {
    pub r: i64,
    pub d: i64,
    pub m: i64,
    pub chi: i64,
    pub a: i64,
    pub b: i64,
    pub d_v: i64,
    pub beta: i64,
    pub length: i64,
    /// `χ(Ψ(V^∨)(σ))`.
    pub chi_twisted: i64,
    pub checks: Vec<SuiteCheck>,
}

impl FixedDetReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(SuiteCheck::pass)
    }
}

/// Transforms `v^∨` for `v = (r, dσ + mf, χ)` by the `U^∨` kernel and
/// checks rank, fiber degree, the twisted Euler characteristic, `β`, and
/// the full class against `ch(I_Z ⊗ O(βf))` with `length Z = d_v`.
pub fn fixed_det_suite(r: i64, d: i64, m: i64, chi: i64) -> Result<FixedDetReport> {
    let (a, b) = canonical_ab(r, d)?;
    let s = SurfaceContext::abelian();
    let v = MukaiVector::split(&s, r, d, m, chi);
    let d_v = v.d_v()?;
    let u = u_kernel(a, b, r, d)?;
    let psi = transform(&v.dual()?, &u_dual_kernel(a, b, r, d)?)?;
    let psi_shifted = psi.scale(-1);
    let (fiber_deg, f_coeff) = psi.split_c1().ok_or_else(|| Error::invariant("Ψ(V^∨)", "c₁ not split"))?;
    let beta = -f_coeff;
    let chi_twisted = psi.twist(s.sigma())?.chi();
    let ch = psi.ch();
    let length = to_i64(&ch.coeff(s.omega().terms().keys().next().copied().expect("ω is a monomial")))?;
    let expected = (&s.fiber().scale_int(beta).exp()? - &s.omega().scale_int(d_v)).scale_int(-1);
    let rs_dagger_u = transform(&v, &u)?;
    let target = &(&AlgebraElement::one(s.context()) + &s.fiber().scale_int(a * chi + b * m)) - &s.omega().scale_int(d_v);
    let checks = vec![
        SuiteCheck::new("rank of Ψ(V^∨)[1] = ad+br", psi_shifted.rank(), a * d + b * r),
        SuiteCheck::new("ad+br = 1", a * d + b * r, 1),
        SuiteCheck::new("fiber degree of Ψ(V^∨) = 0", fiber_deg, 0),
        SuiteCheck::new("χ(Ψ(V^∨)(σ)) = bm+aχ−χr+md", chi_twisted, b * m + a * chi - chi * r + m * d),
        SuiteCheck::new("β = −aχ−bm", beta, -a * chi - b * m),
        SuiteCheck::new("χ(Ψ(V^∨)(σ)) = −(β − d_v)", chi_twisted, -(beta - d_v)),
        SuiteCheck::new("length Z = d_v = dm − rχ", length, d * m - r * chi),
        SuiteCheck::new("ch Ψ(V^∨) = −ch(I_Z ⊗ O(βf))", &ch, &expected),
        SuiteCheck::new("ch RS†_U(V) = ch(I_Z^∨ ⊗ O((aχ+bm)f))", rs_dagger_u.ch(), &target),
    ];
    Ok(FixedDetReport {
        r,
        d,
        m,
        chi,
        a,
        b,
        d_v,
        beta,
        length,
        chi_twisted,
        checks,
    })
}

/// `(rank, degree)` of a class on a curve.
fn curve_rank_degree(e: &AlgebraElement) -> Result<(i64, i64)> {
    Ok((to_i64(&e.constant())?, to_i64(&e.integrate())?))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VKernelReport {
    pub a: i64,
    pub b: i64,
    pub r: i64,
    pub d: i64,
    pub rank: i64,
    /// Pushforward to the second factor.
    pub push: (i64, i64),
    pub checks: Vec<SuiteCheck>,
}

impl VKernelReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(SuiteCheck::pass)
    }
}

/// Rank, `c₁`, and pushforward of the convolution kernel `V`.
pub fn v_kernel_checks(a: i64, b: i64, r: i64, d: i64) -> Result<VKernelReport> {
    let v = v_fiber_kernel(a, b, r, d)?;
    let ch = v.ch();
    let (c1p, pt1, pt2) = fiber_pair_classes()?;
    let c1_expected = (&(&pt1.scale_int(d) + &pt2.scale_int(a)) + &c1p).reinterpret(v.product().context())?;
    let rank = to_i64(&ch.constant())?;
    let push = curve_rank_degree(&ch.fiber_integrate(&v.product().factor_indices(0))?)?;
    let checks = vec![
        SuiteCheck::new("rank V = b", rank, b),
        SuiteCheck::new("c₁(V) = d[o×F] + a[F×o] + c₁(P_F)", ch.homogeneous_part(2), &c1_expected),
        SuiteCheck::new("rank of the pushforward = d", push.0, d),
        SuiteCheck::new("determinant of the pushforward = −r", push.1, -r),
    ];
    Ok(VKernelReport {
        a,
        b,
        r,
        d,
        rank,
        push,
        checks,
    })
}

/// Numerical inputs for the determinant chains, read off the engine.
pub fn fixed_det_numerics(r: i64, d: i64, m: i64, chi: i64) -> Result<FixedDetNumerics> {
    let report = fixed_det_suite(r, d, m, chi)?;
    if !report.pass() {
        return Err(Error::invariant("fixed_det_numerics", "transform suite failed"));
    }
    let (a, b) = (report.a, report.b);
    let u_dual = u_fiber_kernel(a, b, r, d)?.dual()?;
    let push_u_dual = curve_rank_degree(&u_dual.ch().fiber_integrate(&u_dual.product().factor_indices(1))?)?;
    let vk = v_kernel_checks(a, b, r, d)?;
    let s = SurfaceContext::abelian();
    let v = MukaiVector::split(&s, r, d, m, chi);
    let split = |w: &MukaiVector| w.split_c1().ok_or_else(|| Error::invariant("fixed_det_numerics", "c₁ not split"));
    Ok(FixedDetNumerics {
        r,
        d,
        m,
        chi,
        a,
        b,
        d_v: report.d_v,
        beta: report.beta,
        push_u_dual,
        push_v: vk.push,
        det_v_dual: split(&v.dual()?)?,
        det_rs_v: split(&transform(&v, rs_kernel())?)?,
    })
}

/// A pair of points `(p_B, p_F)` of `B×F` (or of the dual), all symbolic in
/// one group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPoint {
    pub b: GroupElement,
    pub f: GroupElement,
}

impl SplitPoint {
    pub fn new(b: GroupElement, f: GroupElement) -> Self {
        SplitPoint { b, f }
    }

    pub fn zero(group: &Arc<FGAbelianGroup>) -> Self {
        SplitPoint {
            b: GroupElement::zero(group),
            f: GroupElement::zero(group),
        }
    }

    pub fn only_b(b: &GroupElement) -> Self {
        SplitPoint::new(b.clone(), GroupElement::zero(b.group()))
    }

    pub fn only_f(f: &GroupElement) -> Self {
        SplitPoint::new(GroupElement::zero(f.group()), f.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        SplitPoint::new(self.b.add(&o.b), self.f.add(&o.f))
    }

    pub fn sub(&self, o: &Self) -> Self {
        SplitPoint::new(self.b.sub(&o.b), self.f.sub(&o.f))
    }

    pub fn neg(&self) -> Self {
        SplitPoint::new(self.b.neg(), self.f.neg())
    }

    pub fn scale(&self, k: i64) -> Self {
        SplitPoint::new(self.b.scale(k), self.f.scale(k))
    }

    /// `(k_B·p_B, k_F·p_F)`.
    pub fn scale_each(&self, kb: i64, kf: i64) -> Self {
        SplitPoint::new(self.b.scale(kb), self.f.scale(kf))
    }

    pub fn group(&self) -> &Arc<FGAbelianGroup> {
        self.b.group()
    }

    fn to_json(&self) -> Value {
        json!({ "B": self.b.to_string(), "F": self.f.to_string() })
    }
}

impl fmt::Display for SplitPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.b, self.f)
    }
}

/// `t_T^⋆ E ⊗ Y` with `E` of Mukai vector `numeric`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecoratedVector {
    pub numeric: MukaiVector,
    pub translation: SplitPoint,
    pub twist: SplitPoint,
}

impl DecoratedVector {
    pub fn plain(numeric: MukaiVector, group: &Arc<FGAbelianGroup>) -> Self {
        DecoratedVector {
            numeric,
            translation: SplitPoint::zero(group),
            twist: SplitPoint::zero(group),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "numeric": self.numeric.to_wire(),
            "translation": self.translation.to_json(),
            "twist": self.twist.to_json(),
        })
    }
}

/// Rewrite rules for translations and twists under a relative or absolute
/// transform.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum DecorationRule {
    /// Plain relative Poincaré kernel.
    Rsdagger,
    /// Relative kernel `U(a,b,r,d)`.
    U { a: i64, b: i64, r: i64, d: i64 },
    /// Absolute Poincaré kernel.
    Rs,
}

impl DecorationRule {
    pub fn kernel(&self) -> KernelSpec {
        match *self {
            DecorationRule::Rsdagger => KernelSpec::Rsdagger,
            DecorationRule::U { a, b, r, d } => KernelSpec::U { a, b, r, d },
            DecorationRule::Rs => KernelSpec::Rs,
        }
    }

    /// `(T, Y) ↦ (T', Y')` for `K(t_T^⋆E ⊗ Y) = t_{T'}^⋆K(E) ⊗ Y'`.
    pub fn apply(&self, t: &SplitPoint, y: &SplitPoint) -> (SplitPoint, SplitPoint) {
        match *self {
            DecorationRule::Rsdagger => (
                SplitPoint::new(t.b.clone(), y.f.clone()),
                SplitPoint::new(y.b.clone(), t.f.neg()),
            ),
            DecorationRule::U { a, b, r, d } => (
                SplitPoint::new(t.b.clone(), t.f.scale(b).add(&y.f.scale(a))),
                SplitPoint::new(y.b.clone(), t.f.scale(-d).add(&y.f.scale(r))),
            ),
            DecorationRule::Rs => (y.clone(), t.neg()),
        }
    }
}

/// One replayable step of a derivation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "step", rename_all = "kebab-case")]
pub enum TraceStep {
    Dual,
    Transform { kernel: KernelSpec },
    Decorate { rule: DecorationRule },
    /// Absorbs the translation into `I_Z^∨ ⊗ O(D_σ σ + D_f f)` with
    /// `length Z = length`; moves `a(Z)` and the twist accordingly.
    Normalize { d_sigma: i64, d_f: i64, length: i64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransformResult {
    pub input: DecoratedVector,
    pub output: DecoratedVector,
    /// Change of `a(Z)` produced by normalization steps.
    pub z_shift: SplitPoint,
    pub trace: Vec<TraceStep>,
}

impl TransformResult {
    pub fn start(input: DecoratedVector) -> Self {
        let group = input.translation.group().clone();
        TransformResult {
            output: input.clone(),
            input,
            z_shift: SplitPoint::zero(&group),
            trace: Vec::new(),
        }
    }

    pub fn apply(mut self, step: TraceStep) -> Result<Self> {
        let out = &mut self.output;
        match &step {
            TraceStep::Dual => {
                out.numeric = out.numeric.dual()?;
                out.translation = out.translation.neg();
                out.twist = out.twist.neg();
            }
            TraceStep::Transform { kernel } => {
                out.numeric = transform(&out.numeric, &kernel.build()?)?;
            }
            TraceStep::Decorate { rule } => {
                out.numeric = transform(&out.numeric, &rule.kernel().build()?)?;
                let (t, y) = rule.apply(&out.translation, &out.twist);
                out.translation = t;
                out.twist = y;
            }
            TraceStep::Normalize { d_sigma, d_f, length } => {
                let expected = out.numeric.surface().divisor(*d_sigma, *d_f);
                if out.numeric.c1() != &expected || out.numeric.rank() != 1 {
                    return Err(Error::invariant(
                        "normalize",
                        format!("{} is not of the form I_Z^∨ ⊗ O({d_sigma}σ+{d_f}f)", out.numeric),
                    ));
                }
                let t = out.translation.clone();
                self.z_shift = self.z_shift.add(&t.scale(-*length));
                out.twist = out.twist.add(&t.scale_each(-*d_f, -*d_sigma));
                out.translation = SplitPoint::zero(t.group());
            }
        }
        self.trace.push(step);
        Ok(self)
    }

    /// Re-executes the trace from the input.
    pub fn replay(&self) -> Result<Self> {
        let mut r = TransformResult::start(self.input.clone());
        for s in &self.trace {
            r = r.apply(s.clone())?;
        }
        Ok(r)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "input": self.input.to_json(),
            "output": self.output.to_json(),
            "z_shift": self.z_shift.to_json(),
            "trace": self.trace,
        })
    }
}

/// Transforms a plain vector by a named kernel, keeping a trace.
pub fn transform_traced(v: &MukaiVector, kernel: KernelSpec) -> Result<TransformResult> {
    let group = FGAbelianGroup::free(["x_B", "x_F"]);
    TransformResult::start(DecoratedVector::plain(v.clone(), &group)).apply(TraceStep::Transform { kernel })
}

pub fn decorate_transform(dv: &DecoratedVector, rule: DecorationRule) -> Result<TransformResult> {
    TransformResult::start(dv.clone()).apply(TraceStep::Decorate { rule })
}

#[derive(Clone, Debug)]
pub struct PhiOutcome {
    pub side: Side,
    pub rule: DecorationRule,
    pub result: TransformResult,
    /// `a(Z') − a(Z)` as a function of the point.
    pub z_shift: SplitPoint,
    pub twist: SplitPoint,
    /// Translation multipliers `(k_B, k_F)`: the isogeny `z ↦ (k_B z_B, k_F z_F)`.
    pub isogeny: (i64, i64),
}

fn coefficient(e: &GroupElement, name: &str) -> Result<i64> {
    let c = e.coeff_of(name).ok_or_else(|| Error::pre(format!("no symbol `{name}`")))?;
    to_i64(&Rational::from_integer(c.clone()))
}

/// `Φ⁺_v(E, x) = t_{rx}^⋆E ⊗ (x_B^m ⊠ x_F)` and
/// `Φ⁻_v(E, y) = t_{(dy_B, my_F)}^⋆E ⊗ y^χ`, pushed through the relative
/// transform and normalized. `point` is expressed in the generators `p_B`,
/// `p_F` of its group.
pub fn phi_action(v: &MukaiVector, side: Side, point: &SplitPoint) -> Result<PhiOutcome> {
    let r = v.rank();
    let (d, m) = v.split_c1().ok_or_else(|| Error::pre("v must have c₁ = dσ + mf"))?;
    let chi = v.chi();
    let d_v = v.d_v()?;
    let (t, y, rule, base) = match side {
        Side::Plus => {
            if d != 1 {
                return Err(Error::pre(format!("the plus side needs fiber degree 1, got {d}")));
            }
            let t = point.scale(r);
            let y = point.scale_each(m, 1);
            (t, y, DecorationRule::Rsdagger, (-r, chi))
        }
        Side::Minus if d == 1 => {
            let t = point.scale_each(1, m);
            let y = point.scale(chi);
            (t, y, DecorationRule::Rsdagger, (-r, chi))
        }
        Side::Minus => {
            let (a, b) = canonical_ab(r, d)?;
            let t = point.scale_each(d, m);
            let y = point.scale(chi);
            (t, y, DecorationRule::U { a, b, r, d }, (0, a * chi + b * m))
        }
    };
    let input = DecoratedVector {
        numeric: v.clone(),
        translation: t,
        twist: y,
    };
    let decorated = decorate_transform(&input, rule)?;
    let translated = decorated.output.translation.clone();
    let result = decorated.apply(TraceStep::Normalize {
        d_sigma: base.0,
        d_f: base.1,
        length: d_v,
    })?;
    let isogeny = (coefficient(&translated.b, "p_B")?, coefficient(&translated.f, "p_F")?);
    Ok(PhiOutcome {
        side,
        rule,
        z_shift: result.z_shift.clone(),
        twist: result.output.twist.clone(),
        result,
        isogeny,
    })
}

/// Symbol group with generators `p_B`, `p_F` and a generic point in it.
pub fn generic_point() -> SplitPoint {
    let g = FGAbelianGroup::free(["p_B", "p_F"]);
    SplitPoint::new(GroupElement::generator(&g, 0), GroupElement::generator(&g, 1))
}

/// `det RS(Φ⁻_v(V, y))` for fiber degree 1: start from `det RS(V)`, tensor
/// with `P_{−T}^{rank}`, translate by `χy`. Returns each intermediate state.
pub fn phi_minus_det_chain(v: &MukaiVector, y: &SplitPoint) -> Result<Vec<(String, SplitSurfaceBundleLedger)>> {
    let (d, m) = v.split_c1().ok_or_else(|| Error::pre("v must have c₁ = dσ + mf"))?;
    if d != 1 {
        return Err(Error::pre("the determinant chain is stated for fiber degree 1"));
    }
    let rs_v = transform(v, rs_kernel())?;
    let (sig, f) = rs_v.split_c1().ok_or_else(|| Error::invariant("det RS(V)", "c₁ not split"))?;
    let rank = rs_v.rank();
    let group = y.group();
    let mut states = Vec::new();
    let start = SplitSurfaceBundleLedger::from_ns(group, sig, f);
    states.push(("det RS(V)".to_string(), start.clone()));
    let t = y.scale_each(1, m);
    let twisted = start.twist(&t.b.scale(-rank), &t.f.scale(-rank));
    states.push(("⊗ P_{−T}^{rank}".to_string(), twisted.clone()));
    let ty = y.scale(v.chi());
    let translated = twisted.translate(&ty.b, &ty.f);
    states.push(("t_{χy}^⋆".to_string(), translated));
    Ok(states)
}
