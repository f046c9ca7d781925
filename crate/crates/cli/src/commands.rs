use std::path::Path;
use std::str::FromStr;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::Deserialize;
use serde_json::{json, Value};

use fmcalc::fm_engine::{
    decorate_transform, rsdagger_kernel_on, transform, transform_traced, DecoratedVector, DecorationRule,
    KernelSpec, SplitPoint,
};
use fmcalc::ledger::{smith, FGAbelianGroup, GroupElement, IntMatrix};
use fmcalc::mukai::{product_chi, verlinde_count, MukaiVector, Side};
use fmcalc::theta_calc::{d_v_genus, genus_g_sections, pb_match, section_decomposition, CheckStatus};
use fmcalc::varieties::{ModelDescriptor, ProductModel, SurfaceContext};

use crate::catalog::{divisor_text, evaluate, families, select};
use crate::report::{ModelInfo, Report};

/// A message plus the process exit code it maps to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<fmcalc::Error> for CliError {
    fn from(e: fmcalc::Error) -> Self {
        CliError::usage(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

#[derive(Deserialize)]
#[serde(untagged)]
enum Count {
    Number(u64),
    Text(String),
}

/// Contents of a `--model` file.
#[derive(Deserialize)]
struct ModelFile {
    base_genus: Count,
    #[serde(default)]
    descriptor: Option<ModelDescriptor>,
}

/// Surface `B×F` with `B` of the genus named in `path`; the abelian
/// surface when no file is given. A descriptor in the file must match the
/// model the engine builds for that genus.
pub fn load_surface(path: Option<&Path>) -> CliResult<Arc<SurfaceContext>> {
    let Some(path) = path else {
        return Ok(SurfaceContext::abelian());
    };
    let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let file: ModelFile =
        serde_json::from_str(&text).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let genus = match file.base_genus {
        Count::Number(n) => n,
        Count::Text(s) => s
            .parse()
            .map_err(|_| CliError::usage(format!("base_genus `{s}` is not a non-negative integer")))?,
    };
    let surface = SurfaceContext::with_genus(genus as usize)?;
    if let Some(d) = file.descriptor {
        ProductModel::from_descriptor(&d)?;
        if d != surface.model().descriptor() {
            return Err(CliError::usage(format!(
                "descriptor does not match the genus-{genus} surface model {}",
                serde_json::to_string(&surface.model().descriptor()).unwrap_or_default()
            )));
        }
    }
    Ok(surface)
}

pub fn model_info(surface: &SurfaceContext) -> ModelInfo {
    ModelInfo {
        base_genus: surface.genus() as u64,
        descriptor: surface.model().descriptor(),
    }
}

fn parse_vector(surface: &Arc<SurfaceContext>, text: &str) -> CliResult<MukaiVector> {
    Ok(MukaiVector::parse(surface, text)?)
}

fn det_text(v: &MukaiVector) -> String {
    match v.split_c1() {
        Some((a, b)) => divisor_text(a, b),
        None => format!("c₁ = {}", v.c1()),
    }
}

fn point_json(p: &SplitPoint) -> Value {
    json!({ "B": p.b.to_string(), "F": p.f.to_string() })
}

fn rule_for(spec: KernelSpec) -> Option<DecorationRule> {
    match spec {
        KernelSpec::Rs => Some(DecorationRule::Rs),
        KernelSpec::Rsdagger => Some(DecorationRule::Rsdagger),
        KernelSpec::U { a, b, r, d } => Some(DecorationRule::U { a, b, r, d }),
        _ => None,
    }
}

/// Output of `transform`: the numeric image and, for kernels with a
/// decoration rule, what happens to `t_T^⋆E ⊗ Y` for symbolic `T`, `Y`.
pub fn cmd_transform(surface: &Arc<SurfaceContext>, vector: &str, kernel: &str, as_json: bool) -> CliResult<String> {
    let v = parse_vector(surface, vector)?;
    let spec = KernelSpec::from_str(kernel)?;
    if !surface.is_abelian() {
        if spec != KernelSpec::Rsdagger {
            return Err(CliError::usage(format!(
                "only `rsdagger` is available over a base of genus {}",
                surface.genus()
            )));
        }
        let out = transform(&v, &rsdagger_kernel_on(surface)?)?;
        return Ok(if as_json {
            pretty(&json!({ "input": v.to_wire(), "kernel": spec.to_string(), "output": out.to_wire() }))
        } else {
            format!("input   {v}\nkernel  {spec}\noutput  {out}\ndet     {}\n", det_text(&out))
        });
    }
    let traced = transform_traced(&v, spec)?;
    let out = &traced.output.numeric;
    let decoration = match rule_for(spec) {
        Some(rule) => {
            let g = FGAbelianGroup::free(["t_B", "t_F", "y_B", "y_F"]);
            let gen = |i| GroupElement::generator(&g, i);
            let input = DecoratedVector {
                numeric: v.clone(),
                translation: SplitPoint::new(gen(0), gen(1)),
                twist: SplitPoint::new(gen(2), gen(3)),
            };
            let r = decorate_transform(&input, rule)?;
            Some((rule, r.output.translation, r.output.twist))
        }
        None => None,
    };
    if as_json {
        let mut doc = json!({
            "input": v.to_wire(),
            "kernel": spec.to_string(),
            "output": out.to_wire(),
            "trace": traced.to_json(),
        });
        if let Some((rule, t, y)) = &decoration {
            doc["decoration"] = json!({
                "rule": rule,
                "translation": point_json(t),
                "twist": point_json(y),
            });
        }
        return Ok(pretty(&doc));
    }
    let mut s = format!("input   {v}\nkernel  {spec}\noutput  {out}\ndet     {}\n", det_text(out));
    if let Some((_, t, y)) = decoration {
        s.push_str(&format!(
            "decoration  t_T^⋆E ⊗ Y with T = (t_B, t_F), Y = (y_B, y_F)\n  T' = {t}\n  Y' = {y}\n"
        ));
    }
    Ok(s)
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn or_message<T>(r: fmcalc::Result<T>, f: impl FnOnce(T) -> Value) -> Value {
    match r {
        Ok(x) => f(x),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

/// Every invariant of the pair `(v, w)` that applies to it.
pub fn pair_report(surface: &Arc<SurfaceContext>, v: &str, w: &str) -> CliResult<Value> {
    let v = parse_vector(surface, v)?;
    let w = parse_vector(surface, w)?;
    let mut doc = json!({
        "v": v.to_wire(),
        "w": w.to_wire(),
        "product_chi": product_chi(&v, &w)?.to_string(),
    });
    let (d_v, d_w) = if surface.is_abelian() {
        (v.d_v()?, w.d_v()?)
    } else {
        (d_v_genus(&v)?, d_v_genus(&w)?)
    };
    doc["d_v"] = json!(d_v.to_string());
    doc["d_w"] = json!(d_w.to_string());
    if !surface.is_abelian() {
        doc["genus_g"] = or_message(genus_g_sections(&v, &w), |r| {
            let status = match r.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "fail",
                CheckStatus::Unresolved => "unresolved",
            };
            json!({
                "chi_l": r.chi_l.to_string(),
                "d_v_plus_d_w": (r.d_v + r.d_w).to_string(),
                "stated_sum": r.stated_sum.to_string(),
                "torsion": r.torsion.to_string(),
                "base_case_chi": r.base_case_chi.to_string(),
                "status": status,
                "note": r.note,
            })
        });
        return Ok(doc);
    }
    doc["pb_match"] = or_message(pb_match(&v, &w), |m| {
        json!({ "pb1": m.pb1, "pb2": m.pb2, "lhs": m.lhs.to_string(),
                "rhs": m.rhs.to_string(), "pass": m.pass })
    });
    for (key, side) in [("verlinde_plus", Side::Plus), ("verlinde_minus", Side::Minus)] {
        doc[key] = or_message(verlinde_count(&v, &w, side), |c| {
            json!({ "chi_l": c.chi_l.to_string(), "count": c.count.to_string() })
        });
    }
    doc["sections"] = or_message(section_decomposition(&v, &w), |d| {
        json!({
            "tau_count": d.tau_count.to_string(),
            "per_tau": d.per_tau.to_string(),
            "total": d.total.to_string(),
            "verlinde": d.verlinde.to_string(),
            "pass": d.pass(),
        })
    });
    Ok(doc)
}

pub fn cmd_pair(surface: &Arc<SurfaceContext>, v: &str, w: &str, as_json: bool) -> CliResult<String> {
    let doc = pair_report(surface, v, w)?;
    if as_json {
        return Ok(pretty(&doc));
    }
    Ok(text_tree(&doc, 0))
}

/// Indented `key: value` rendering of a JSON object.
fn text_tree(v: &Value, depth: usize) -> String {
    let pad = "  ".repeat(depth);
    let mut out = String::new();
    if let Value::Object(map) = v {
        for (k, x) in map {
            match x {
                Value::Object(_) if k == "v" || k == "w" => {
                    out.push_str(&format!("{pad}{k}: {}\n", x["text"].as_str().unwrap_or("?")));
                }
                Value::Object(_) => {
                    out.push_str(&format!("{pad}{k}:\n"));
                    out.push_str(&text_tree(x, depth + 1));
                }
                Value::String(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                other => out.push_str(&format!("{pad}{k}: {other}\n")),
            }
        }
    }
    out
}

pub fn cmd_verlinde(surface: &Arc<SurfaceContext>, v: &str, w: &str, side: &str, as_json: bool) -> CliResult<String> {
    let side = Side::from_str(side)?;
    let v = parse_vector(surface, v)?;
    let w = parse_vector(surface, w)?;
    let c = verlinde_count(&v, &w, side)?;
    if as_json {
        return Ok(pretty(&json!({
            "v": v.to_wire(),
            "w": w.to_wire(),
            "side": side,
            "c1_l": c.c1_l.to_string(),
            "chi_l": c.chi_l.to_string(),
            "d_v": c.d_v.to_string(),
            "d_w": c.d_w.to_string(),
            "count": c.count.to_string(),
        })));
    }
    Ok(format!(
        "χ(L) = {}, d_v = {}, d_w = {}\ncount = {}\n",
        c.chi_l, c.d_v, c.d_w, c.count
    ))
}

/// Runs the catalog entries selected by `filter` (an id glob) and
/// `identity` (a family name).
pub fn run_verify(surface: &SurfaceContext, filter: Option<&str>, identity: Option<&str>) -> CliResult<Report> {
    let pattern = filter
        .map(glob::Pattern::new)
        .transpose()
        .map_err(|e| CliError::usage(format!("bad --filter pattern: {e}")))?;
    if let Some(f) = identity {
        if !families().contains(&f) {
            return Err(CliError::usage(format!(
                "unknown identity family `{f}` (known: {})",
                families().join(", ")
            )));
        }
    }
    let checks = select(pattern.as_ref(), identity).into_iter().map(evaluate).collect();
    Ok(Report::new(vec![model_info(surface)], checks))
}

/// One orthogonal pair found by `search-orthogonal`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthogonalPair {
    pub v: (i64, i64, i64),
    pub w: (i64, i64, i64),
    pub d_v: i64,
    pub d_w: i64,
    /// `None` where the plus-side count is undefined.
    pub count: Option<BigInt>,
}

/// Unordered pairs `{v, w}` of vectors `(r, σ+mf, χ)` with `1 ≤ r ≤ max_rank`,
/// `|χ| ≤ max_chi`, `|m| ≤ max_m` and `χ(v·w) = 0`, in enumeration order.
pub fn search_orthogonal(max_rank: i64, max_chi: i64, max_m: i64) -> CliResult<Vec<OrthogonalPair>> {
    if max_rank < 0 || max_chi < 0 || max_m < 0 {
        return Err(CliError::usage("bounds must be non-negative"));
    }
    let mut vectors = Vec::new();
    for r in 1..=max_rank {
        for m in -max_m..=max_m {
            for chi in -max_chi..=max_chi {
                vectors.push(((r, m, chi), MukaiVector::abelian(r, 1, m, chi)));
            }
        }
    }
    let mut out = Vec::new();
    for (i, (kv, v)) in vectors.iter().enumerate() {
        for (kw, w) in &vectors[i..] {
            if product_chi(v, w)? != 0 {
                continue;
            }
            out.push(OrthogonalPair {
                v: *kv,
                w: *kw,
                d_v: v.d_v()?,
                d_w: w.d_v()?,
                count: verlinde_count(v, w, Side::Plus).ok().map(|c| c.count),
            });
        }
    }
    Ok(out)
}

fn vec_text((r, m, chi): (i64, i64, i64)) -> String {
    MukaiVector::abelian(r, 1, m, chi).to_text()
}

pub fn cmd_search_orthogonal(max_rank: i64, max_chi: i64, max_m: i64, as_json: bool) -> CliResult<String> {
    let pairs = search_orthogonal(max_rank, max_chi, max_m)?;
    if as_json {
        let rows: Vec<Value> = pairs
            .iter()
            .map(|p| {
                json!({
                    "v": vec_text(p.v),
                    "w": vec_text(p.w),
                    "d_v": p.d_v.to_string(),
                    "d_w": p.d_w.to_string(),
                    "count": p.count.as_ref().map(ToString::to_string),
                })
            })
            .collect();
        return Ok(pretty(&json!({ "pairs": rows, "total": pairs.len().to_string() })));
    }
    let mut s = format!("{:<18} {:<18} {:>5} {:>5}  count\n", "v", "w", "d_v", "d_w");
    for p in &pairs {
        let count = p.count.as_ref().map_or("-".to_string(), ToString::to_string);
        s.push_str(&format!(
            "{:<18} {:<18} {:>5} {:>5}  {count}\n",
            vec_text(p.v),
            vec_text(p.w),
            p.d_v,
            p.d_w
        ));
    }
    s.push_str(&format!("{} pairs\n", pairs.len()));
    Ok(s)
}

/// Reads a JSON array of rows (numbers or decimal strings) or whitespace
/// separated rows, one per line.
pub fn parse_matrix(text: &str) -> CliResult<IntMatrix> {
    let bad = |e: String| CliError::usage(format!("matrix: {e}"));
    if text.trim_start().starts_with('[') {
        let rows: Vec<Vec<Value>> = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|x| match x {
                        Value::Number(n) => n.to_string().parse::<BigInt>().map_err(|e| bad(e.to_string())),
                        Value::String(s) => s.trim().parse::<BigInt>().map_err(|e| bad(format!("`{s}`: {e}"))),
                        other => Err(bad(format!("`{other}` is not an integer"))),
                    })
                    .collect()
            })
            .collect()
    } else {
        text.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| {
                l.split_whitespace()
                    .map(|t| t.parse::<BigInt>().map_err(|e| bad(format!("`{t}`: {e}"))))
                    .collect()
            })
            .collect()
    }
}

pub fn cmd_smith(path: &Path) -> CliResult<String> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::usage(format!("{}: {e}", path.display())))?;
    let m = parse_matrix(&text)?;
    let s = smith(&m)?;
    let mut doc = serde_json::to_value(&s).expect("Smith serializes");
    doc["diagonal"] = json!(s.diagonal().iter().map(ToString::to_string).collect::<Vec<_>>());
    Ok(pretty(&doc))
}
