//! Cohomology models of elliptic curves, Jacobians, the surfaces `B×F` and
//! `C×F`, and their products, with standard classes and morphisms.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{rat, to_i64, AlgebraElement, GeneratorSet, LinearMap, Monomial, Rational};

/// A principally polarized abelian variety of dimension `g`, modelled by
/// `2g` generators grouped in pairs `(x_i, y_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianModel {
    label: String,
    genus: usize,
    ctx: Arc<GeneratorSet>,
}

impl AbelianModel {
    /// Generators are the lowercased label followed by `1..=2g`.
    pub fn new(label: &str, genus: usize) -> Result<Self> {
        let stem = label.to_lowercase();
        let names: Vec<String> = (1..=2 * genus).map(|i| format!("{stem}{i}")).collect();
        Self::with_names(label, names)
    }

    pub fn elliptic(label: &str) -> Self {
        Self::new(label, 1).expect("two generators")
    }

    pub fn with_names(label: &str, names: Vec<String>) -> Result<Self> {
        if names.is_empty() || !names.len().is_multiple_of(2) {
            return Err(Error::UnrecognizedShape(format!(
                "factor `{label}` needs a positive even number of generators, got {}",
                names.len()
            )));
        }
        let genus = names.len() / 2;
        Ok(AbelianModel {
            label: label.to_string(),
            genus,
            ctx: GeneratorSet::new(names)?,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn context(&self) -> &Arc<GeneratorSet> {
        &self.ctx
    }

    pub fn pt(&self) -> AlgebraElement {
        AlgebraElement::top(&self.ctx)
    }

    /// `Θ = Σ x_i∧y_i`.
    pub fn theta(&self) -> AlgebraElement {
        let mut t = AlgebraElement::zero(&self.ctx);
        for i in 0..self.genus {
            let m = Monomial::from_indices(&[2 * i, 2 * i + 1]).unwrap();
            t += &AlgebraElement::monomial(&self.ctx, m, rat(1));
        }
        t
    }

    /// Same factor with every name and the label suffixed.
    pub fn renamed(&self, suffix: &str) -> Self {
        AbelianModel {
            label: format!("{}{suffix}", self.label),
            genus: self.genus,
            ctx: GeneratorSet::new(self.ctx.names().iter().map(|n| format!("{n}{suffix}")))
                .expect("suffixing keeps names distinct"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductModel {
    factors: Vec<AbelianModel>,
    ctx: Arc<GeneratorSet>,
    offsets: Vec<usize>,
}

impl ProductModel {
    pub fn new(factors: Vec<AbelianModel>) -> Result<Self> {
        let mut names = Vec::new();
        let mut offsets = Vec::new();
        for f in &factors {
            offsets.push(names.len());
            names.extend(f.ctx.names().iter().cloned());
        }
        let ctx = GeneratorSet::new(names)?;
        Ok(ProductModel { factors, ctx, offsets })
    }

    pub fn single(f: AbelianModel) -> Self {
        Self::new(vec![f]).expect("one factor")
    }

    pub fn factors(&self) -> &[AbelianModel] {
        &self.factors
    }

    pub fn factor(&self, i: usize) -> &AbelianModel {
        &self.factors[i]
    }

    pub fn factor_by_label(&self, label: &str) -> Option<usize> {
        self.factors.iter().position(|f| f.label == label)
    }

    pub fn context(&self) -> &Arc<GeneratorSet> {
        &self.ctx
    }

    pub fn factor_indices(&self, i: usize) -> Vec<usize> {
        let o = self.offsets[i];
        (o..o + self.factors[i].ctx.len()).collect()
    }

    /// Pulls a class on factor `i` back to the product.
    pub fn lift(&self, i: usize, e: &AlgebraElement) -> Result<AlgebraElement> {
        e.embed(&self.ctx, &self.factor_indices(i))
    }

    pub fn pt_of(&self, i: usize) -> AlgebraElement {
        self.lift(i, &self.factors[i].pt()).expect("own factor")
    }

    pub fn theta_of(&self, i: usize) -> AlgebraElement {
        self.lift(i, &self.factors[i].theta()).expect("own factor")
    }

    pub fn pt(&self) -> AlgebraElement {
        AlgebraElement::top(&self.ctx)
    }

    /// Pullback along the projection to factor `i`.
    pub fn projection(&self, i: usize) -> LinearMap {
        LinearMap::from_index_map(&self.ctx, self.factors[i].context(), &self.factor_indices(i))
            .expect("valid projection")
    }

    pub fn renamed(&self, suffix: &str) -> Self {
        Self::new(self.factors.iter().map(|f| f.renamed(suffix)).collect())
            .expect("suffixing keeps names distinct")
    }

    pub fn concat(&self, other: &ProductModel) -> Result<Self> {
        let mut factors = self.factors.clone();
        factors.extend(other.factors.iter().cloned());
        Self::new(factors)
    }

    pub fn descriptor(&self) -> ModelDescriptor {
        ModelDescriptor {
            factors: self
                .factors
                .iter()
                .map(|f| FactorDescriptor {
                    label: f.label.clone(),
                    genus: f.genus,
                    generators: f.ctx.names().to_vec(),
                })
                .collect(),
            orientation: self.ctx.names().to_vec(),
        }
    }

    pub fn from_descriptor(d: &ModelDescriptor) -> Result<Self> {
        let factors = d
            .factors
            .iter()
            .map(|f| {
                let m = AbelianModel::with_names(&f.label, f.generators.clone())?;
                if m.genus != f.genus {
                    return Err(Error::UnrecognizedShape(format!(
                        "factor `{}` declares genus {} but has {} generators",
                        f.label,
                        f.genus,
                        f.generators.len()
                    )));
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        let model = Self::new(factors)?;
        if model.ctx.names() != d.orientation.as_slice() {
            return Err(Error::UnrecognizedShape(
                "orientation must be the concatenation of the factor generators".into(),
            ));
        }
        Ok(model)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct FactorDescriptor {
    pub label: String,
    #[serde(with = "count_string")]
    pub genus: usize,
    pub generators: Vec<String>,
}

/// Writes a count as a decimal string; reads a string or a JSON number.
mod count_string {
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Either {
        Number(usize),
        Text(String),
    }

    pub fn serialize<S: Serializer>(x: &usize, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<usize, D::Error> {
        match Either::deserialize(d)? {
            Either::Number(n) => Ok(n),
            Either::Text(t) => t.parse().map_err(D::Error::custom),
        }
    }
}

/// JSON form of a product model.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
pub struct ModelDescriptor {
    pub factors: Vec<FactorDescriptor>,
    pub orientation: Vec<String>,
}

/// A morphism of abelian varieties, recorded by its pullback on degree-1
/// generators. Translations act trivially here.
#[derive(Clone, Debug)]
pub struct StandardMorphism {
    pub name: String,
    pub source: ProductModel,
    pub target: ProductModel,
    pub map: LinearMap,
}

impl StandardMorphism {
    fn build(name: String, source: ProductModel, target: ProductModel, rows: Vec<Vec<i64>>) -> Self {
        let map = LinearMap::from_ints(source.context(), target.context(), &rows)
            .expect("rows sized from the models");
        StandardMorphism { name, source, target, map }
    }

    fn scalar_rows(n: usize, scalars: impl Fn(usize) -> i64) -> Vec<Vec<i64>> {
        (0..n)
            .map(|t| (0..n).map(|s| if s == t { scalars(t) } else { 0 }).collect())
            .collect()
    }

    pub fn identity(m: &ProductModel) -> Self {
        let n = m.ctx.len();
        Self::build("id".into(), m.clone(), m.clone(), Self::scalar_rows(n, |_| 1))
    }

    /// Translation by any point: identity on cohomology.
    pub fn translation(m: &ProductModel) -> Self {
        let mut t = Self::identity(m);
        t.name = "translation".into();
        t
    }

    /// Multiplication by `n` on every factor.
    pub fn multiplication(m: &ProductModel, n: i64) -> Self {
        let len = m.ctx.len();
        Self::build(format!("[{n}]"), m.clone(), m.clone(), Self::scalar_rows(len, |_| n))
    }

    /// Multiplication by `scalars[i]` on factor `i`, e.g. `(r,1)` on `B×F`.
    pub fn factor_scaling(m: &ProductModel, scalars: &[i64]) -> Result<Self> {
        if scalars.len() != m.factors.len() {
            return Err(Error::DimensionMismatch {
                expected: m.factors.len(),
                got: scalars.len(),
            });
        }
        let mut per_gen = Vec::new();
        for (i, f) in m.factors.iter().enumerate() {
            per_gen.extend(std::iter::repeat_n(scalars[i], f.ctx.len()));
        }
        let name = format!(
            "({})",
            scalars.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",")
        );
        Ok(Self::build(name, m.clone(), m.clone(), Self::scalar_rows(per_gen.len(), |t| per_gen[t])))
    }

    /// `m: A×A' → A`, `(u, v) ↦ u + v`.
    pub fn addition(a: &AbelianModel) -> Self {
        let pair = ProductModel::new(vec![a.clone(), a.renamed("'")]).unwrap();
        let n = a.ctx.len();
        let rows = (0..n)
            .map(|t| (0..2 * n).map(|s| if s == t || s == t + n { 1 } else { 0 }).collect())
            .collect();
        Self::build("m".into(), pair, ProductModel::single(a.clone()), rows)
    }

    /// `x ↦ (r·x, x)` into `A×A'`; `r = 1` is the diagonal.
    pub fn graph(a: &AbelianModel, r: i64) -> Self {
        let pair = ProductModel::new(vec![a.clone(), a.renamed("'")]).unwrap();
        let n = a.ctx.len();
        let rows = (0..2 * n)
            .map(|t| {
                (0..n)
                    .map(|s| {
                        if t < n && s == t {
                            r
                        } else if t >= n && s == t - n {
                            1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        let name = if r == 1 { "diagonal".to_string() } else { format!("({r},1)") };
        Self::build(name, ProductModel::single(a.clone()), pair, rows)
    }

    pub fn diagonal(a: &AbelianModel) -> Self {
        Self::graph(a, 1)
    }

    /// Inclusion of the origin.
    pub fn point_inclusion(a: &AbelianModel) -> (Arc<GeneratorSet>, LinearMap) {
        let o = GeneratorSet::empty();
        let rows = vec![Vec::new(); a.ctx.len()];
        let map = LinearMap::new(&o, a.context(), rows).expect("empty source");
        (o, map)
    }

    /// `self` then `next`.
    pub fn then(&self, next: &StandardMorphism) -> Result<Self> {
        Ok(StandardMorphism {
            name: format!("{}∘{}", next.name, self.name),
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.then(&next.map)?,
        })
    }
}

/// Named standard classes of a product model.
#[derive(Clone, Debug)]
pub struct ClassTable {
    pub model: ProductModel,
    classes: BTreeMap<String, AlgebraElement>,
}

impl ClassTable {
    pub fn get(&self, name: &str) -> Result<&AlgebraElement> {
        self.classes
            .get(name)
            .ok_or_else(|| Error::Precondition(format!("no class named `{name}`")))
    }

    pub fn names(&self) -> impl Iterator<Item = &String> {
        self.classes.keys()
    }

    /// `exp` of an integer combination of named divisor classes.
    pub fn chern_line(&self, divisor: &[(&str, i64)]) -> Result<AlgebraElement> {
        let mut c1 = AlgebraElement::zero(self.model.context());
        for (name, k) in divisor {
            c1 += &self.get(name)?.scale_int(*k);
        }
        c1.exp()
    }
}

/// Classes attached to a pair of factors of equal dimension: the Poincaré
/// class `c₁(P) = −m*Θ + Θ₁ + Θ₂`, the diagonal, and `m*Θ`, all lifted to
/// `m`.
pub fn pair_classes(m: &ProductModel, i: usize, j: usize) -> Result<(AlgebraElement, AlgebraElement, AlgebraElement)> {
    let a = m.factor(i);
    if a.genus != m.factor(j).genus {
        return Err(Error::UnrecognizedShape(format!(
            "factors `{}` and `{}` have different dimensions",
            a.label,
            m.factor(j).label
        )));
    }
    let add = StandardMorphism::addition(a);
    let pair = add.source.clone();
    let m_theta = a.theta().pullback(&add.map)?;
    let c1p = &(&pair.theta_of(0) + &pair.theta_of(1)) - &m_theta;
    let diag = AlgebraElement::one(a.context()).pushforward_along(&StandardMorphism::diagonal(a).map)?;
    let diag = diag.reinterpret(pair.context())?;
    let mut idx = m.factor_indices(i);
    idx.extend(m.factor_indices(j));
    Ok((
        c1p.reinterpret(pair.context())?.embed(m.context(), &idx)?,
        diag.embed(m.context(), &idx)?,
        m_theta.embed(m.context(), &idx)?,
    ))
}

/// The class table of a recognized shape: one or more elliptic factors (up
/// to six, covering `E`, `E×E`, `B×F`, `X×X`, `X×X×X`), or one or two
/// factors of a common dimension `g` (Jacobians `A`, `A×A`).
pub fn standard_classes(m: &ProductModel) -> Result<ClassTable> {
    let n = m.factors.len();
    let all_elliptic = m.factors.iter().all(|f| f.genus == 1);
    let same_genus = m.factors.windows(2).all(|w| w[0].genus == w[1].genus);
    let recognized = n >= 1 && ((all_elliptic && n <= 6) || (same_genus && n <= 2 && m.factor(0).genus <= 3));
    if !recognized {
        return Err(Error::UnrecognizedShape(format!(
            "factors {:?}",
            m.factors.iter().map(|f| (f.label.as_str(), f.genus)).collect::<Vec<_>>()
        )));
    }
    let mut classes = BTreeMap::new();
    classes.insert("pt".to_string(), m.pt());
    for (i, f) in m.factors.iter().enumerate() {
        classes.insert(format!("pt[{}]", f.label), m.pt_of(i));
        classes.insert(format!("theta[{}]", f.label), m.theta_of(i));
    }
    if n == 1 {
        classes.insert("theta".into(), m.theta_of(0));
    }
    if n == 2 {
        classes.insert("theta1".into(), m.theta_of(0));
        classes.insert("theta2".into(), m.theta_of(1));
        if all_elliptic {
            let f = m.pt_of(0);
            let s = m.pt_of(1);
            classes.insert("omega".into(), &s * &f);
            classes.insert("sigma".into(), s);
            classes.insert("f".into(), f);
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if m.factor(i).genus != m.factor(j).genus {
                continue;
            }
            let (c1p, diag, mt) = pair_classes(m, i, j)?;
            let key = format!("{},{}", m.factor(i).label, m.factor(j).label);
            if n == 2 {
                classes.insert("c1P".into(), c1p.clone());
                classes.insert("diag".into(), diag.clone());
                classes.insert("m*theta".into(), mt.clone());
            }
            classes.insert(format!("c1P[{key}]"), c1p);
            classes.insert(format!("diag[{key}]"), diag);
            classes.insert(format!("m*theta[{key}]"), mt);
        }
    }
    Ok(ClassTable {
        model: m.clone(),
        classes,
    })
}

/// `ch` of a line bundle with first Chern class `c1`.
pub fn line_ch(c1: &AlgebraElement) -> Result<AlgebraElement> {
    c1.exp()
}

/// Euler characteristic of a line bundle of degree `e` on a curve of genus
/// `g`, evaluated as `∫ exp(e·pt)·td` with `td = 1 − (g−1)·pt`.
pub fn euler_char_curve(genus: usize, degree: i64) -> Result<i64> {
    let curve = AbelianModel::elliptic("C");
    let pt = curve.pt();
    let gbar = genus as i64 - 1;
    let td = AlgebraElement::one(curve.context()) - pt.scale_int(gbar);
    let ch = pt.scale_int(degree).exp()?;
    to_i64(&(&ch * &td).integrate())
}

/// A surface `base × F` together with its Todd data. For an elliptic base
/// this is the abelian surface `X = B×F`; for a base curve of genus `g ≥ 2`
/// only the point class of the base is modelled, which is all that even
/// classes built from `σ` and `f` need.
#[derive(Clone, Debug)]
pub struct SurfaceContext {
    model: ProductModel,
    genus: usize,
    canonical: AlgebraElement,
    todd: AlgebraElement,
    sigma: AlgebraElement,
    fiber: AlgebraElement,
}

impl PartialEq for SurfaceContext {
    fn eq(&self, other: &Self) -> bool {
        self.genus == other.genus && self.model == other.model
    }
}

impl Eq for SurfaceContext {}

impl SurfaceContext {
    pub fn abelian() -> Arc<Self> {
        let model = ProductModel::new(vec![AbelianModel::elliptic("B"), AbelianModel::elliptic("F")])
            .expect("distinct names");
        Self::build(model, 1)
    }

    pub fn with_genus(g: usize) -> Result<Arc<Self>> {
        match g {
            0 => Err(Error::pre("base genus must be at least 1")),
            1 => Ok(Self::abelian()),
            _ => {
                let model = ProductModel::new(vec![AbelianModel::elliptic("C"), AbelianModel::elliptic("F")])?;
                Ok(Self::build(model, g))
            }
        }
    }

    fn build(model: ProductModel, genus: usize) -> Arc<Self> {
        let fiber = model.pt_of(0);
        let sigma = model.pt_of(1);
        let gbar = genus as i64 - 1;
        let canonical = fiber.scale_int(2 * gbar);
        let todd = AlgebraElement::one(model.context()) - fiber.scale_int(gbar);
        Arc::new(SurfaceContext {
            model,
            genus,
            canonical,
            todd,
            sigma,
            fiber,
        })
    }

    pub fn model(&self) -> &ProductModel {
        &self.model
    }

    pub fn context(&self) -> &Arc<GeneratorSet> {
        self.model.context()
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn gbar(&self) -> i64 {
        self.genus as i64 - 1
    }

    pub fn is_abelian(&self) -> bool {
        self.genus == 1
    }

    pub fn canonical(&self) -> &AlgebraElement {
        &self.canonical
    }

    pub fn todd(&self) -> &AlgebraElement {
        &self.todd
    }

    /// `σ = base × o_F`.
    pub fn sigma(&self) -> &AlgebraElement {
        &self.sigma
    }

    /// `f = o × F`, the fiber class.
    pub fn fiber(&self) -> &AlgebraElement {
        &self.fiber
    }

    pub fn omega(&self) -> AlgebraElement {
        &self.sigma * &self.fiber
    }

    pub fn divisor(&self, a: i64, b: i64) -> AlgebraElement {
        &self.sigma.scale_int(a) + &self.fiber.scale_int(b)
    }

    /// `∫ ch·td`.
    pub fn euler_char(&self, ch: &AlgebraElement) -> Rational {
        (ch * &self.todd).integrate()
    }

    pub fn euler_char_line(&self, a: i64, b: i64) -> Result<i64> {
        to_i64(&self.euler_char(&self.divisor(a, b).exp()?))
    }

    /// Reads `c1 = aσ + bf`, returning `None` if `c1` has other components.
    pub fn split_divisor(&self, c1: &AlgebraElement) -> Option<(Rational, Rational)> {
        let a = (c1 * &self.fiber).integrate();
        let b = (c1 * &self.sigma).integrate();
        let rebuilt = &self.sigma.scale(&a) + &self.fiber.scale(&b);
        if &rebuilt == c1 {
            Some((a, b))
        } else {
            None
        }
    }

    pub fn intersect(&self, a: &AlgebraElement, b: &AlgebraElement) -> Rational {
        (a * b).integrate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::ratio;

    fn x() -> ProductModel {
        ProductModel::new(vec![AbelianModel::elliptic("B"), AbelianModel::elliptic("F")]).unwrap()
    }

    #[test]
    fn surface_intersections() {
        let t = standard_classes(&x()).unwrap();
        let s = t.get("sigma").unwrap();
        let f = t.get("f").unwrap();
        assert_eq!((s * f).integrate(), rat(1));
        assert!((s * s).is_zero());
        assert!((f * f).is_zero());
        assert_eq!(t.get("omega").unwrap().integrate(), rat(1));
        assert_eq!(s.to_string(), "f1^f2");
        assert_eq!(f.to_string(), "b1^b2");
    }

    #[test]
    fn elliptic_poincare_class() {
        let e = AbelianModel::elliptic("E");
        let ee = ProductModel::new(vec![e.clone(), e.renamed("'")]).unwrap();
        let t = standard_classes(&ee).unwrap();
        let c = t.get("c1P").unwrap();
        let diag = t.get("diag").unwrap();
        let p1 = ee.pt_of(0);
        let p2 = ee.pt_of(1);
        assert_eq!(&(diag - &p1) - &p2, *c);
        assert_eq!(c * c, ee.pt().scale_int(-2));
        assert!((c * &p1).is_zero());
        assert!((c * &p2).is_zero());
        assert!((diag * diag).is_zero());
        assert_eq!(c.to_string(), "-e1^e2' + e2^e1'");
    }

    #[test]
    fn theta_powers() {
        for g in 1..=3usize {
            let a = AbelianModel::new("A", g).unwrap();
            let th = a.theta();
            let fact: i64 = (1..=g as i64).product();
            assert_eq!(th.pow(g as u32).unwrap(), a.pt().scale_int(fact));
        }
    }

    #[test]
    fn jacobian_pair_classes() {
        for g in 1..=2usize {
            let a = AbelianModel::new("A", g).unwrap();
            let aa = ProductModel::new(vec![a.clone(), a.renamed("'")]).unwrap();
            let t = standard_classes(&aa).unwrap();
            let c = t.get("c1P").unwrap();
            let expect = &(&aa.theta_of(0) + &aa.theta_of(1)) - t.get("m*theta").unwrap();
            assert_eq!(*c, expect);
            // a correspondence with the diagonal class acts as the identity
            let diag = t.get("diag").unwrap();
            let th = aa.theta_of(0);
            let out = (&th * diag).fiber_integrate(&aa.factor_indices(0)).unwrap();
            assert_eq!(out, a.theta().reinterpret(out.context()).unwrap());
        }
    }

    #[test]
    fn pullbacks_of_points() {
        let e = ProductModel::single(AbelianModel::elliptic("E"));
        let n3 = StandardMorphism::multiplication(&e, 3);
        assert_eq!(e.pt().pullback(&n3.map).unwrap(), e.pt().scale_int(9));

        let m = x();
        let t = standard_classes(&m).unwrap();
        let r1 = StandardMorphism::factor_scaling(&m, &[4, 1]).unwrap();
        let f = t.get("f").unwrap();
        let s = t.get("sigma").unwrap();
        assert_eq!(f.pullback(&r1.map).unwrap(), f.scale_int(16));
        assert_eq!(s.pullback(&r1.map).unwrap(), *s);
        // (r+s)σ − (χ+χ')f ↦ (r+s)σ − r²(χ+χ')f with r=3, s=4, χ+χ'=-2
        let r1 = StandardMorphism::factor_scaling(&m, &[3, 1]).unwrap();
        let l = &s.scale_int(7) + &f.scale_int(2);
        assert_eq!(l.pullback(&r1.map).unwrap(), &s.scale_int(7) + &f.scale_int(18));
    }

    #[test]
    fn unrecognized_shapes() {
        let a2 = AbelianModel::new("A", 2).unwrap();
        let e = AbelianModel::elliptic("E");
        let m = ProductModel::new(vec![a2, e]).unwrap();
        assert!(matches!(standard_classes(&m), Err(Error::UnrecognizedShape(_))));
        assert!(standard_classes(&ProductModel::new(vec![]).unwrap()).is_err());
        assert!(AbelianModel::with_names("Z", vec!["z".into()]).is_err());
    }

    #[test]
    fn chern_line_shapes() {
        let t = standard_classes(&x()).unwrap();
        let ch = t.chern_line(&[("sigma", 3), ("f", 4)]).unwrap();
        assert_eq!(ch.integrate(), rat(12));
        let ch = t.chern_line(&[("sigma", 1)]).unwrap();
        assert_eq!(ch.homogeneous_part(4), AlgebraElement::zero(x().context()));
        let ch = t.chern_line(&[("sigma", 7), ("f", 2)]).unwrap();
        assert_eq!(ch.integrate(), rat(14));
    }

    #[test]
    fn euler_characteristics() {
        let x = SurfaceContext::abelian();
        assert_eq!(x.euler_char_line(3, 4).unwrap(), 12);
        assert_eq!(x.euler_char_line(6, 2).unwrap(), 12);
        assert!(x.canonical().is_zero());
        let y = SurfaceContext::with_genus(2).unwrap();
        assert_eq!(y.euler_char_line(6, 5).unwrap(), 24);
        for g in 2..=6usize {
            assert_eq!(euler_char_curve(g, g as i64 - 2).unwrap(), -1);
            let s = SurfaceContext::with_genus(g).unwrap();
            assert_eq!(s.euler_char_line(0, 0).unwrap(), 0);
            assert_eq!(s.canonical(), &s.fiber().scale_int(2 * (g as i64 - 1)));
        }
    }

    #[test]
    fn split_divisor_reads_coefficients() {
        let x = SurfaceContext::abelian();
        let d = x.divisor(2, -5);
        assert_eq!(x.split_divisor(&d), Some((rat(2), rat(-5))));
        let half = d.scale(&ratio(1, 2));
        assert_eq!(x.split_divisor(&half), Some((rat(1), ratio(-5, 2))));
    }

    #[test]
    fn descriptor_round_trip() {
        let m = x();
        let d = m.descriptor();
        let json = serde_json::to_string(&d).unwrap();
        let back: ModelDescriptor = serde_json::from_str(&json).unwrap();
        assert_eq!(ProductModel::from_descriptor(&back).unwrap(), m);
    }

    #[test]
    fn graph_degree() {
        let e = AbelianModel::elliptic("E");
        let g = StandardMorphism::graph(&e, 3);
        let cls = AlgebraElement::one(e.context()).pushforward_along(&g.map).unwrap();
        assert_eq!((&cls * &g.target.pt_of(0)).integrate(), rat(9));
        let add = StandardMorphism::addition(&e);
        let composed = g.then(&add).unwrap();
        // x ↦ rx + x = 4x
        assert_eq!(e.pt().pullback(&composed.map).unwrap(), e.pt().scale_int(16));
    }
}
