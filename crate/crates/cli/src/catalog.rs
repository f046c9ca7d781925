//! The identity catalog: a static table of cases, each evaluated by the
//! core engine into an [`IdentityCheck`].

use std::time::Instant;

use fmcalc::exterior::{rat, AlgebraElement, Monomial};
use fmcalc::fm_engine::{
    canonical_ab, fixed_det_numerics, fixed_det_suite, generic_point, phi_action, phi_minus_det_chain, rs_kernel,
    rsdagger_kernel, transform, transform_class, u_fiber_kernel, v_kernel_checks, SuiteCheck,
};
use fmcalc::ledger::{
    fixed_det_chains, fixed_det_symbol_group, torsion_count, FGAbelianGroup, GroupElement, SolutionSet,
    SplitSurfaceBundleLedger,
};
use fmcalc::mukai::{binomial, chi_l_equals_ell, verlinde_count, MukaiVector, Side};
use fmcalc::theta_calc::{
    alpha_family, chain_symbols, genus_g_sections, jacobian_chain, pb_match, section_decomposition,
    theta_minus_delta, CheckStatus,
};
use fmcalc::varieties::{euler_char_curve, StandardMorphism, SurfaceContext};
use fmcalc::Error;

use crate::report::{IdentityCheck, Status};

#[derive(Clone, Copy, Debug)]
pub enum Kernel {
    Rs,
    Rsdagger,
}

#[derive(Clone, Copy, Debug)]
pub enum Case {
    DetRule { kernel: Kernel, a: i64, b: i64 },
    Skyscraper,
    Inversion,
    SemiHomogeneous { r: i64, d: i64 },
    FixedDet { r: i64, d: i64, m: i64, chi: i64 },
    VKernel { r: i64, d: i64 },
    FixedDetChain { r: i64, d: i64, m: i64, chi: i64 },
    PlusShift { r: i64, m: i64, chi: i64 },
    MinusShift { r: i64, m: i64, chi: i64 },
    MinusDet { r: i64, m: i64, chi: i64 },
    PbMatch { v: (i64, i64, i64), w: (i64, i64, i64) },
    PbReject { v: (i64, i64, i64), w: (i64, i64, i64) },
    AlphaFamily { r: i64, s: i64, chi: i64, chi_p: i64 },
    Sections { r: i64, m: i64, chi: i64 },
    Verlinde { r: i64, m: i64, chi: i64 },
    VerlindeValue { r: i64, m: i64, chi: i64, count: i64 },
    JacobianChain { r: i64, g: usize },
    GenusG { g: usize, r: i64, v: (i64, i64), w: (i64, i64) },
    Torsion { g: usize, r: i64 },
    BaseCase { g: usize },
}

#[derive(Clone, Copy, Debug)]
pub struct Entry {
    pub id: &'static str,
    /// Identity family, selectable with `--identity`.
    pub family: &'static str,
    pub description: &'static str,
    pub reference: &'static str,
    pub case: Case,
}

macro_rules! entry {
    ($id:literal, $family:literal, $desc:literal, $reference:expr, $case:expr) => {
        Entry {
            id: $id,
            family: $family,
            description: $desc,
            reference: $reference,
            case: $case,
        }
    };
}

use Case::*;
use Kernel::{Rs, Rsdagger};

const DET_RS: &str = "det RS(O(aσ+bf)) = O(−bσ−af)";
const DET_RSD: &str = "det RS†(O(aσ+bf)) = O(−σ+abf)";
const FIXED: &str = "rank ad+br = 1, fiber degree 0, β = −aχ−bm, length Z = d_v";
const V_REF: &str = "rank V = b, c₁(V) = d[o×F]+a[F×o]+c₁(P_F), pushforward (d, −r)";
const CHAIN_REF: &str = "det chains force a_B(Z) = 0 and μ = 0";
const PB_REF: &str = "rn + sm = (s−r)d_v − r²(χ+χ′)";
const ALPHA_REF: &str = "α^⋆Θ_w = (r_B,1_F)^⋆L ⊗ O_B((s−r)o_B), independent of c";
const JAC_REF: &str = "r^⋆Θ + Θ + 2rΘ − (r+1)^⋆Θ + P_{−2rQ} = P_{rα}";

pub static CATALOG: &[Entry] = &[
    entry!("det/rs/1,0", "det-rules", "RS of O(σ)", DET_RS, DetRule { kernel: Rs, a: 1, b: 0 }),
    entry!("det/rs/0,1", "det-rules", "RS of O(f)", DET_RS, DetRule { kernel: Rs, a: 0, b: 1 }),
    entry!("det/rs/2,3", "det-rules", "RS of O(2σ+3f)", DET_RS, DetRule { kernel: Rs, a: 2, b: 3 }),
    entry!("det/rs/-1,4", "det-rules", "RS of O(−σ+4f)", DET_RS, DetRule { kernel: Rs, a: -1, b: 4 }),
    entry!("det/rs/5,-5", "det-rules", "RS of O(5σ−5f)", DET_RS, DetRule { kernel: Rs, a: 5, b: -5 }),
    entry!("det/rsdagger/1,0", "det-rules", "RS† of O(σ)", DET_RSD, DetRule { kernel: Rsdagger, a: 1, b: 0 }),
    entry!("det/rsdagger/1,5", "det-rules", "RS† of O(σ+5f)", DET_RSD, DetRule { kernel: Rsdagger, a: 1, b: 5 }),
    entry!("det/rsdagger/2,3", "det-rules", "RS† of O(2σ+3f)", DET_RSD, DetRule { kernel: Rsdagger, a: 2, b: 3 }),
    entry!("det/rsdagger/-3,2", "det-rules", "RS† of O(−3σ+2f)", DET_RSD, DetRule { kernel: Rsdagger, a: -3, b: 2 }),
    entry!("det/rs/skyscraper", "det-rules", "RS of a point sheaf", "RS(0, 0, 1) = (1, 0, 0)", Skyscraper),
    entry!("inversion/rs-squared", "inversion", "RS∘RS on all 16 monomials", "RS∘RS = (−1)^⋆", Inversion),
    entry!("kernel-u/2,1", "semihomogeneous", "U for (r,d) = (2,1)", "χ(U) = −d, ch U = a·exp(c₁/a)", SemiHomogeneous { r: 2, d: 1 }),
    entry!("kernel-u/3,2", "semihomogeneous", "U for (r,d) = (3,2)", "χ(U) = −d, ch U = a·exp(c₁/a)", SemiHomogeneous { r: 3, d: 2 }),
    entry!("kernel-u/5,3", "semihomogeneous", "U for (r,d) = (5,3)", "χ(U) = −d, ch U = a·exp(c₁/a)", SemiHomogeneous { r: 5, d: 3 }),
    entry!("kernel-u/7,4", "semihomogeneous", "U for (r,d) = (7,4)", "χ(U) = −d, ch U = a·exp(c₁/a)", SemiHomogeneous { r: 7, d: 4 }),
    entry!("fixed-det/3,1,3,-1", "fixed-det", "transform suite for (3, σ+3f, −1)", FIXED, FixedDet { r: 3, d: 1, m: 3, chi: -1 }),
    entry!("fixed-det/3,2,5,-1", "fixed-det", "transform suite for (3, 2σ+5f, −1)", FIXED, FixedDet { r: 3, d: 2, m: 5, chi: -1 }),
    entry!("fixed-det/2,1,2,-1", "fixed-det", "transform suite for (2, σ+2f, −1)", FIXED, FixedDet { r: 2, d: 1, m: 2, chi: -1 }),
    entry!("fixed-det/5,2,3,0", "fixed-det", "transform suite for (5, 2σ+3f, 0)", FIXED, FixedDet { r: 5, d: 2, m: 3, chi: 0 }),
    entry!("fixed-det/4,3,1,-2", "fixed-det", "transform suite for (4, 3σ+f, −2)", FIXED, FixedDet { r: 4, d: 3, m: 1, chi: -2 }),
    entry!("kernel-v/3,1", "v-kernel", "convolution kernel V for (3,1)", V_REF, VKernel { r: 3, d: 1 }),
    entry!("kernel-v/3,2", "v-kernel", "convolution kernel V for (3,2)", V_REF, VKernel { r: 3, d: 2 }),
    entry!("kernel-v/5,2", "v-kernel", "convolution kernel V for (5,2)", V_REF, VKernel { r: 5, d: 2 }),
    entry!("fixed-det-chain/3,1,3,-1", "fixed-det-chain", "solve the det constraints for (3, σ+3f, −1)", CHAIN_REF, FixedDetChain { r: 3, d: 1, m: 3, chi: -1 }),
    entry!("fixed-det-chain/3,2,5,-1", "fixed-det-chain", "solve the det constraints for (3, 2σ+5f, −1)", CHAIN_REF, FixedDetChain { r: 3, d: 2, m: 5, chi: -1 }),
    entry!("fixed-det-chain/4,3,1,-2", "fixed-det-chain", "solve the det constraints for (4, 3σ+f, −2)", CHAIN_REF, FixedDetChain { r: 4, d: 3, m: 1, chi: -2 }),
    entry!("decoration/plus/3,3,-1", "decoration", "a_B(Z⁺) shift for (3, σ+3f, −1)", "a_B(Z⁺) coefficient = −d_v·r", PlusShift { r: 3, m: 3, chi: -1 }),
    entry!("decoration/plus/2,0,-2", "decoration", "a_B(Z⁺) shift for (2, σ, −2)", "a_B(Z⁺) coefficient = −d_v·r", PlusShift { r: 2, m: 0, chi: -2 }),
    entry!("decoration/minus/3,3,-1", "decoration", "a_F(Z⁻) shift for (3, σ+3f, −1)", "a_F(Z⁻) coefficient = −χ·d_v", MinusShift { r: 3, m: 3, chi: -1 }),
    entry!("decoration/minus/4,1,-3", "decoration", "a_F(Z⁻) shift for (4, σ+f, −3)", "a_F(Z⁻) coefficient = −χ·d_v", MinusShift { r: 4, m: 1, chi: -3 }),
    entry!("decoration/minus-det/3,3,-1", "decoration", "det RS Φ⁻ for (3, σ+3f, −1)", "det RS(Φ⁻(V, y)) = O(−f−mσ)", MinusDet { r: 3, m: 3, chi: -1 }),
    entry!("decoration/minus-det/2,-1,1", "decoration", "det RS Φ⁻ for (2, σ−f, 1)", "det RS(Φ⁻(V, y)) = O(−f−mσ)", MinusDet { r: 2, m: -1, chi: 1 }),
    entry!("pb-match/3,3,-1;3,3,-1", "pb-match", "pullbacks of the theta bundle agree", PB_REF, PbMatch { v: (3, 3, -1), w: (3, 3, -1) }),
    entry!("pb-match/3,2,-1;4,5,-1", "pb-match", "pullbacks of the theta bundle agree", PB_REF, PbMatch { v: (3, 2, -1), w: (4, 5, -1) }),
    entry!("pb-match/2,5,-2;5,3,1", "pb-match", "pullbacks of the theta bundle agree", PB_REF, PbMatch { v: (2, 5, -2), w: (5, 3, 1) }),
    entry!("pb-match/reject", "pb-match", "non-orthogonal input is refused", PB_REF, PbReject { v: (3, 3, -1), w: (3, 4, -1) }),
    entry!("alpha-family/3,3,-1,-1", "alpha-family", "four-term determinant product", ALPHA_REF, AlphaFamily { r: 3, s: 3, chi: -1, chi_p: -1 }),
    entry!("alpha-family/2,4,-2,0", "alpha-family", "four-term determinant product", ALPHA_REF, AlphaFamily { r: 2, s: 4, chi: -2, chi_p: 0 }),
    entry!("alpha-family/1,5,0,-3", "alpha-family", "four-term determinant product", ALPHA_REF, AlphaFamily { r: 1, s: 5, chi: 0, chi_p: -3 }),
    entry!("sections/3,3,-1", "sections", "sections of θ⁺ split over B[r]", "r²·binom(χ(L), d_v) = Verlinde count", Sections { r: 3, m: 3, chi: -1 }),
    entry!("sections/4,8,-2", "sections", "sections of θ⁺ split over B[r]", "r²·binom(χ(L), d_v) = Verlinde count", Sections { r: 4, m: 8, chi: -2 }),
    entry!("sections/1,1,-1", "sections", "sections of θ⁺ split over B[r]", "r²·binom(χ(L), d_v) = Verlinde count", Sections { r: 1, m: 1, chi: -1 }),
    entry!("verlinde/3,3,-1/value", "verlinde", "Verlinde count for v = w = (3, σ+3f, −1)", "count = 8316", VerlindeValue { r: 3, m: 3, chi: -1, count: 8316 }),
    entry!("verlinde/3,-1", "verlinde", "χ(L⁺)/ℓ = r², χ(L) = ℓ, r²·binom = count", "Verlinde consistency", Verlinde { r: 3, m: 3, chi: -1 }),
    entry!("verlinde/3,-2", "verlinde", "χ(L⁺)/ℓ = r², χ(L) = ℓ, r²·binom = count", "Verlinde consistency", Verlinde { r: 3, m: 6, chi: -2 }),
    entry!("verlinde/4,-1", "verlinde", "χ(L⁺)/ℓ = r², χ(L) = ℓ, r²·binom = count", "Verlinde consistency", Verlinde { r: 4, m: 4, chi: -1 }),
    entry!("verlinde/4,-3", "verlinde", "χ(L⁺)/ℓ = r², χ(L) = ℓ, r²·binom = count", "Verlinde consistency", Verlinde { r: 4, m: 12, chi: -3 }),
    entry!("verlinde/5,-2", "verlinde", "χ(L⁺)/ℓ = r², χ(L) = ℓ, r²·binom = count", "Verlinde consistency", Verlinde { r: 5, m: 10, chi: -2 }),
    entry!("jacobian-chain/r1,g1", "jacobian-chain", "theta chain on an elliptic curve, r = 1", JAC_REF, JacobianChain { r: 1, g: 1 }),
    entry!("jacobian-chain/r3,g2", "jacobian-chain", "theta chain on a genus-2 Jacobian, r = 3", JAC_REF, JacobianChain { r: 3, g: 2 }),
    entry!("jacobian-chain/r6,g3", "jacobian-chain", "theta chain on a genus-3 Jacobian, r = 6", JAC_REF, JacobianChain { r: 6, g: 3 }),
    entry!("genus-g/g1", "genus-g", "χ(L) = d_v + d_w over an elliptic base", "χ(L) = d_v + d_w", GenusG { g: 1, r: 3, v: (3, -1), w: (3, -1) }),
    entry!("genus-g/g2", "genus-g", "χ(L) = d_v + d_w over a genus-2 base", "χ(L) = d_v + d_w", GenusG { g: 2, r: 3, v: (4, -2), w: (8, -2) }),
    entry!("genus-g/g3", "genus-g", "χ(L) = d_v + d_w over a genus-3 base", "χ(L) = d_v + d_w", GenusG { g: 3, r: 3, v: (4, -2), w: (8, -2) }),
    entry!("torsion/g2,r3", "torsion", "#A[3] for a genus-2 Jacobian", "#A[r] = r^{2g}", Torsion { g: 2, r: 3 }),
    entry!("torsion/g3,r2", "torsion", "#A[2] for a genus-3 Jacobian", "#A[r] = r^{2g}", Torsion { g: 3, r: 2 }),
    entry!("base-case/g2", "base-case", "χ of a degree-0 bundle on a genus-2 curve", "χ(degree g−2) = −1", BaseCase { g: 2 }),
    entry!("base-case/g5", "base-case", "χ of a degree-3 bundle on a genus-5 curve", "χ(degree g−2) = −1", BaseCase { g: 5 }),
];

pub fn families() -> Vec<&'static str> {
    let mut out: Vec<&'static str> = Vec::new();
    for e in CATALOG {
        if !out.contains(&e.family) {
            out.push(e.family);
        }
    }
    out
}

/// `(status, lhs, rhs)`.
type Outcome = (Status, String, String);

fn compare(lhs: impl ToString, rhs: impl ToString) -> Outcome {
    let (l, r) = (lhs.to_string(), rhs.to_string());
    let status = if l == r { Status::Pass } else { Status::Fail };
    (status, l, r)
}

fn suite(checks: &[SuiteCheck]) -> Outcome {
    let failing: Vec<&SuiteCheck> = checks.iter().filter(|c| !c.pass()).collect();
    match failing.first() {
        None => compare(format!("{} checks hold", checks.len()), format!("{} checks hold", checks.len())),
        Some(c) => (Status::Fail, format!("{}: {}", c.name, c.lhs), format!("{}: {}", c.name, c.rhs)),
    }
}

fn ab(v: (i64, i64, i64)) -> MukaiVector {
    MukaiVector::abelian(v.0, 1, v.1, v.2)
}

/// `O(aσ + bf)` with unit coefficients and signs folded in.
pub fn divisor_text(a: i64, b: i64) -> String {
    let term = |k: i64, sym: &str| match k {
        1 => sym.to_string(),
        -1 => format!("−{sym}"),
        k if k < 0 => format!("−{}{sym}", -k),
        k => format!("{k}{sym}"),
    };
    let body = match (a, b) {
        (0, 0) => "0".to_string(),
        (a, 0) => term(a, "σ"),
        (0, b) => term(b, "f"),
        (a, b) if b < 0 => format!("{} − {}", term(a, "σ"), term(-b, "f")),
        (a, b) => format!("{} + {}", term(a, "σ"), term(b, "f")),
    };
    format!("O({body})")
}

fn det_shape(x: Option<(i64, i64)>) -> String {
    match x {
        Some((a, b)) => divisor_text(a, b),
        None => "non-split".into(),
    }
}

fn run_case(case: Case) -> Result<Outcome, Error> {
    Ok(match case {
        DetRule { kernel, a, b } => {
            let s = SurfaceContext::abelian();
            let l = MukaiVector::line(&s, a, b)?;
            match kernel {
                Rs => compare(det_shape(transform(&l, rs_kernel())?.split_c1()), det_shape(Some((-b, -a)))),
                Rsdagger => compare(
                    det_shape(transform(&l, rsdagger_kernel())?.split_c1()),
                    det_shape(Some((-1, a * b))),
                ),
            }
        }
        Skyscraper => {
            let p = MukaiVector::abelian(0, 0, 0, 1);
            compare(transform(&p, rs_kernel())?, MukaiVector::abelian(1, 0, 0, 0))
        }
        Inversion => {
            let s = SurfaceContext::abelian();
            let minus = StandardMorphism::multiplication(s.model(), -1);
            let mut agree = 0;
            for bits in 0u32..16 {
                let e = AlgebraElement::monomial(s.context(), Monomial::from_bits(bits), rat(1));
                let twice = transform_class(&transform_class(&e, rs_kernel())?, rs_kernel())?;
                if twice == e.pullback(&minus.map)? {
                    agree += 1;
                }
            }
            compare(format!("{agree}/16 agree"), "16/16 agree")
        }
        SemiHomogeneous { r, d } => {
            let (a, b) = canonical_ab(r, d)?;
            let u = u_fiber_kernel(a, b, r, d)?;
            let ch = u.class();
            let c1 = ch.homogeneous_part(2);
            let semi = c1.scale(&fmcalc::exterior::ratio(1, a)).exp()?.scale_int(a);
            let integral = ch.terms().values().all(|q| q.is_integer());
            compare(
                format!("χ = {}, semihomogeneous = {}, integral = {integral}", ch.integrate(), *ch == semi),
                format!("χ = {}, semihomogeneous = true, integral = true", -d),
            )
        }
        FixedDet { r, d, m, chi } => suite(&fixed_det_suite(r, d, m, chi)?.checks),
        VKernel { r, d } => {
            let (a, b) = canonical_ab(r, d)?;
            suite(&v_kernel_checks(a, b, r, d)?.checks)
        }
        FixedDetChain { r, d, m, chi } => {
            let p = fixed_det_numerics(r, d, m, chi)?;
            let g = fixed_det_symbol_group(p.d_v as usize);
            let z: Vec<_> = (0..p.d_v as usize)
                .map(|i| (GroupElement::generator(&g, 2 * i), GroupElement::generator(&g, 2 * i + 1)))
                .collect();
            let mu = GroupElement::generator(&g, g.rank() - 1);
            let chains = fixed_det_chains(&p, &z, &mu)?;
            let lhs = match &chains.solution {
                SolutionSet::Unique(x) => format!("(a_B(Z), μ) = ({}, {})", x[0], x[1]),
                SolutionSet::Empty => "no solution".into(),
                SolutionSet::Coset { count, .. } => match count {
                    Some(c) => format!("{c} solutions"),
                    None => "infinitely many solutions".into(),
                },
            };
            compare(lhs, "(a_B(Z), μ) = (0, 0)")
        }
        PlusShift { r, m, chi } => {
            let v = MukaiVector::abelian(r, 1, m, chi);
            let out = phi_action(&v, Side::Plus, &generic_point())?;
            compare(out.z_shift.b.to_string(), format!("{}", generic_point().b.scale(-v.d_v()? * r)))
        }
        MinusShift { r, m, chi } => {
            let v = MukaiVector::abelian(r, 1, m, chi);
            let out = phi_action(&v, Side::Minus, &generic_point())?;
            compare(out.z_shift.f.to_string(), format!("{}", generic_point().f.scale(-chi * v.d_v()?)))
        }
        MinusDet { r, m, chi } => {
            let v = MukaiVector::abelian(r, 1, m, chi);
            let p = generic_point();
            let states = phi_minus_det_chain(&v, &p)?;
            let last = &states.last().expect("chain has states").1;
            compare(last, SplitSurfaceBundleLedger::from_ns(p.group(), -m, -1))
        }
        PbMatch { v, w } => {
            let out = pb_match(&ab(v), &ab(w))?;
            let status = if out.pass { Status::Pass } else { Status::Fail };
            (status, format!("rn + sm = {}", out.lhs), format!("(s−r)d_v − r²(χ+χ′) = {}", out.rhs))
        }
        PbReject { v, w } => match pb_match(&ab(v), &ab(w)) {
            Err(e) => (Status::Rejected, e.to_string(), "rejected".into()),
            Ok(out) => (Status::Fail, format!("accepted: {} vs {}", out.lhs, out.rhs), "rejected".into()),
        },
        AlphaFamily { r, s, chi, chi_p } => {
            let g = FGAbelianGroup::free(["c"]);
            let out = alpha_family(r, s, chi, chi_p, &GroupElement::generator(&g, 0))?;
            compare(
                format!("{}; c-exponent {}", out.chain.total, out.c_exponent),
                format!("{}; c-exponent 0", out.expected),
            )
        }
        Sections { r, m, chi } => {
            let v = MukaiVector::abelian(r, 1, m, chi);
            let d = section_decomposition(&v, &v)?;
            let status = if d.pass() { Status::Pass } else { Status::Fail };
            (
                status,
                format!("{} · {} = {}", d.tau_count, d.per_tau, d.total),
                format!("Verlinde count {}", d.verlinde),
            )
        }
        Verlinde { r, m, chi } => {
            let v = MukaiVector::abelian(r, 1, m, chi);
            let plus = verlinde_count(&v, &v, Side::Plus)?;
            let ell = plus.d_v + plus.d_w;
            let chk = chi_l_equals_ell(&v, &v)?;
            compare(
                format!("χ(L⁺) = {}, χ(L) = {}, count = {}", plus.chi_l, chk.chi_l, plus.count),
                format!(
                    "χ(L⁺) = {}, χ(L) = {ell}, count = {}",
                    r * r * ell,
                    binomial(ell, plus.d_v) * r * r
                ),
            )
        }
        VerlindeValue { r, m, chi, count } => {
            let v = MukaiVector::abelian(r, 1, m, chi);
            compare(verlinde_count(&v, &v, Side::Plus)?.count, count)
        }
        JacobianChain { r, g } => {
            let (_, kappa, q) = chain_symbols();
            let delta = theta_minus_delta(&kappa);
            let c = jacobian_chain(r, &q, &delta, g)?;
            compare(
                format!("P[{}], shadows zero = {}", c.point, c.shadow_a.is_zero() && c.shadow_pair.is_zero()),
                format!("P[{}], shadows zero = true", c.alpha.scale(r)),
            )
        }
        GenusG { g, r, v, w } => {
            let s = SurfaceContext::with_genus(g)?;
            let vv = MukaiVector::split(&s, r, 1, v.0, v.1);
            let ww = MukaiVector::split(&s, r, 1, w.0, w.1);
            let rep = genus_g_sections(&vv, &ww)?;
            let status = match rep.status {
                CheckStatus::Pass => Status::Pass,
                CheckStatus::Fail => Status::Fail,
                CheckStatus::Unresolved => Status::Unresolved,
            };
            (
                status,
                format!("χ(L) = {}", rep.chi_l),
                format!("d_v + d_w = {} ({})", rep.d_v + rep.d_w, rep.note),
            )
        }
        Torsion { g, r } => compare(torsion_count(g, r)?, r.pow(2 * g as u32)),
        BaseCase { g } => compare(euler_char_curve(g, g as i64 - 2)?, -1),
    })
}

pub fn evaluate(e: &Entry) -> IdentityCheck {
    let start = Instant::now();
    let (status, lhs, rhs) = match run_case(e.case) {
        Ok(o) => o,
        Err(err) => (Status::Fail, format!("error: {err}"), "no error".into()),
    };
    IdentityCheck {
        id: e.id.to_string(),
        description: e.description.to_string(),
        reference: e.reference.to_string(),
        status,
        lhs,
        rhs,
        runtime_us: start.elapsed().as_micros() as u64,
    }
}

/// Entries whose id matches `filter` (a glob) and whose family is
/// `identity`, in catalog order.
pub fn select(filter: Option<&glob::Pattern>, identity: Option<&str>) -> Vec<&'static Entry> {
    CATALOG
        .iter()
        .filter(|e| filter.is_none_or(|p| p.matches(e.id)))
        .filter(|e| identity.is_none_or(|f| f == e.family))
        .collect()
}
