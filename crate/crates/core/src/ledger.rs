//! Finitely generated abelian groups, Smith normal form, and the
//! degree/point-sum bookkeeping of line bundles on elliptic curves and on
//! split surfaces `B×F`.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type IntMatrix = Vec<Vec<BigInt>>;

pub fn int_matrix(rows: &[Vec<i64>]) -> IntMatrix {
    rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn cols(m: &IntMatrix, fallback: usize) -> usize {
    m.first().map(|r| r.len()).unwrap_or(fallback)
}

pub fn matmul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let inner = b.len();
    let n = cols(b, 0);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| {
                    let mut acc = BigInt::zero();
                    for k in 0..inner {
                        if !row[k].is_zero() {
                            acc += &row[k] * &b[k][j];
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect()
}

/// Determinant by fraction-free elimination.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// `U·M·V = D` with `U`, `V` unimodular and `D` diagonal, `d_i | d_{i+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Smith {
    #[serde(with = "matrix_strings")]
    pub u: IntMatrix,
    #[serde(with = "matrix_strings")]
    pub d: IntMatrix,
    #[serde(with = "matrix_strings")]
    pub v: IntMatrix,
    #[serde(skip)]
    v_inv: IntMatrix,
}

impl Smith {
    pub fn diagonal(&self) -> Vec<BigInt> {
        let k = self.d.len().min(cols(&self.d, self.v.len()));
        (0..k).map(|i| self.d[i][i].clone()).collect()
    }

    pub fn v_inverse(&self) -> &IntMatrix {
        &self.v_inv
    }
}

mod matrix_strings {
    use super::IntMatrix;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &IntMatrix, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<String>> = m.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<IntMatrix, D::Error> {
        let rows: Vec<Vec<String>> = Vec::deserialize(d)?;
        rows.into_iter()
            .map(|r| {
                r.into_iter()
                    .map(|x| x.parse().map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect()
    }
}

/// Serde adapter writing a `BigInt` as a decimal string.
pub mod big_string {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Smith normal form over the integers with full pivoting. The result is
/// checked (`U·M·V = D`, `det U = ±1`, `det V = ±1`, divisibility chain)
/// before it is returned.
pub fn smith(m: &IntMatrix) -> Result<Smith> {
    let rows = m.len();
    let ncols = cols(m, 0);
    if m.iter().any(|r| r.len() != ncols) {
        return Err(Error::pre("ragged matrix"));
    }
    smith_sized(m, rows, ncols)
}

/// As [`smith`], with an explicit column count (needed for matrices with no
/// rows).
pub fn smith_sized(m: &IntMatrix, rows: usize, ncols: usize) -> Result<Smith> {
    let mut a = m.clone();
    let mut u = identity(rows);
    let mut v = identity(ncols);
    let mut vinv = identity(ncols);

    let row_sub = |a: &mut IntMatrix, i: usize, t: usize, q: &BigInt| {
        for j in 0..a[i].len() {
            let s = &a[t][j] * q;
            a[i][j] -= s;
        }
    };
    let col_sub = |a: &mut IntMatrix, j: usize, t: usize, q: &BigInt| {
        for row in a.iter_mut() {
            let s = &row[t] * q;
            row[j] -= s;
        }
    };
    let swap_cols = |a: &mut IntMatrix, i: usize, j: usize| {
        for row in a.iter_mut() {
            row.swap(i, j);
        }
    };

    for t in 0..rows.min(ncols) {
        let pivot = (t..rows)
            .flat_map(|i| (t..ncols).map(move |j| (i, j)))
            .filter(|&(i, j)| !a[i][j].is_zero())
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else { break };
        a.swap(t, pi);
        u.swap(t, pi);
        swap_cols(&mut a, t, pj);
        swap_cols(&mut v, t, pj);
        vinv.swap(t, pj);

        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = &a[i][t] / &a[t][t];
                    row_sub(&mut a, i, t, &q);
                    row_sub(&mut u, i, t, &q);
                    if !a[i][t].is_zero() {
                        clean = false;
                    }
                }
            }
            for j in t + 1..ncols {
                if !a[t][j].is_zero() {
                    let q = &a[t][j] / &a[t][t];
                    col_sub(&mut a, j, t, &q);
                    col_sub(&mut v, j, t, &q);
                    // V^{-1} = E^{-1} V^{-1}: row t += q·row j
                    for k in 0..ncols {
                        let s = &vinv[j][k] * &q;
                        vinv[t][k] += s;
                    }
                    if !a[t][j].is_zero() {
                        clean = false;
                    }
                }
            }
            if !clean {
                // bring the smallest remaining entry of row/column t to the pivot
                let mut best = (t, t);
                for i in t + 1..rows {
                    if !a[i][t].is_zero() && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..ncols {
                    if !a[t][j].is_zero() && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    a.swap(t, best.0);
                    u.swap(t, best.0);
                } else if best.1 != t {
                    swap_cols(&mut a, t, best.1);
                    swap_cols(&mut v, t, best.1);
                    vinv.swap(t, best.1);
                }
                continue;
            }
            let bad = (t + 1..rows)
                .flat_map(|i| (t + 1..ncols).map(move |j| (i, j)))
                .find(|&(i, j)| !(&a[i][j] % &a[t][t]).is_zero());
            if let Some((i, _)) = bad {
                let one = BigInt::from(-1);
                row_sub(&mut a, t, i, &one);
                row_sub(&mut u, t, i, &one);
                continue;
            }
            break;
        }
        if a[t][t].is_negative() {
            for x in a[t].iter_mut() {
                *x = -x.clone();
            }
            for x in u[t].iter_mut() {
                *x = -x.clone();
            }
        }
    }

    let s = Smith { u, d: a, v, v_inv: vinv };
    verify_smith(m, &s, rows, ncols)?;
    Ok(s)
}

fn verify_smith(m: &IntMatrix, s: &Smith, rows: usize, ncols: usize) -> Result<()> {
    let fail = |detail: &str| Err(Error::invariant("smith", detail.to_string()));
    let product = if rows == 0 {
        Vec::new()
    } else {
        matmul(&matmul(&s.u, m), &s.v)
    };
    if product != s.d {
        return fail("U·M·V differs from D");
    }
    for i in 0..rows {
        for j in 0..ncols {
            if i != j && !s.d[i][j].is_zero() {
                return fail("D is not diagonal");
            }
        }
    }
    let diag = s.diagonal();
    for w in diag.windows(2) {
        let ok = if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() };
        if !ok || w[0].is_negative() {
            return fail("diagonal is not a divisibility chain");
        }
    }
    if determinant(&s.u).abs() != BigInt::one() || determinant(&s.v).abs() != BigInt::one() {
        return fail("transformation is not unimodular");
    }
    if ncols > 0 && matmul(&s.v, &s.v_inv) != identity(ncols) {
        return fail("stored inverse of V is wrong");
    }
    Ok(())
}

/// `Z^n` modulo the row span of an integer relation matrix.
#[derive(Clone, Debug)]
pub struct FGAbelianGroup {
    names: Vec<String>,
    relations: IntMatrix,
    smith: Smith,
    moduli: Vec<BigInt>,
}

impl PartialEq for FGAbelianGroup {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names && self.relations == other.relations
    }
}

impl Eq for FGAbelianGroup {}

impl FGAbelianGroup {
    pub fn new(names: Vec<String>, relations: IntMatrix) -> Result<Arc<Self>> {
        let n = names.len();
        if relations.iter().any(|r| r.len() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: relations.iter().map(|r| r.len()).find(|&l| l != n).unwrap_or(0),
            });
        }
        let smith = smith_sized(&relations, relations.len(), n)?;
        let diag = smith.diagonal();
        let moduli = (0..n).map(|i| diag.get(i).cloned().unwrap_or_else(BigInt::zero)).collect();
        Ok(Arc::new(FGAbelianGroup {
            names,
            relations,
            smith,
            moduli,
        }))
    }

    pub fn free<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Arc<Self> {
        Self::new(names.into_iter().map(Into::into).collect(), Vec::new()).expect("no relations")
    }

    /// `⊕ Z/e_i`, with `e_i = 0` meaning a free summand.
    pub fn cyclic_product(names: Vec<String>, orders: &[i64]) -> Result<Arc<Self>> {
        let n = orders.len();
        let rows = orders
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| (0..n).map(|j| if i == j { BigInt::from(e) } else { BigInt::zero() }).collect())
            .collect();
        Self::new(names, rows)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    pub fn smith(&self) -> &Smith {
        &self.smith
    }

    /// One modulus per Smith coordinate: `1` trivial, `0` free.
    pub fn moduli(&self) -> &[BigInt] {
        &self.moduli
    }

    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.moduli.iter().filter(|e| !e.is_one()).cloned().collect()
    }

    pub fn order(&self) -> Option<BigInt> {
        let mut n = BigInt::one();
        for e in &self.moduli {
            if e.is_zero() {
                return None;
            }
            n *= e;
        }
        Some(n)
    }

    fn normal_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        let n = self.rank();
        (0..n)
            .map(|j| {
                let mut acc = BigInt::zero();
                for (i, xi) in x.iter().enumerate() {
                    if !xi.is_zero() {
                        acc += xi * &self.smith.v[i][j];
                    }
                }
                if self.moduli[j].is_zero() {
                    acc
                } else {
                    acc.mod_floor(&self.moduli[j])
                }
            })
            .collect()
    }

    fn from_normal(&self, y: &[BigInt]) -> Vec<BigInt> {
        let n = self.rank();
        let vinv = self.smith.v_inverse();
        (0..n)
            .map(|j| {
                let mut acc = BigInt::zero();
                for (i, yi) in y.iter().enumerate() {
                    if !yi.is_zero() {
                        acc += yi * &vinv[i][j];
                    }
                }
                acc
            })
            .collect()
    }
}

pub fn element(group: &Arc<FGAbelianGroup>, coords: &[i64]) -> Result<GroupElement> {
    GroupElement::new(group, coords.iter().map(|&c| BigInt::from(c)).collect())
}

#[derive(Clone)]
pub struct GroupElement {
    group: Arc<FGAbelianGroup>,
    coords: Vec<BigInt>,
}

impl GroupElement {
    pub fn new(group: &Arc<FGAbelianGroup>, coords: Vec<BigInt>) -> Result<Self> {
        if coords.len() != group.rank() {
            return Err(Error::DimensionMismatch {
                expected: group.rank(),
                got: coords.len(),
            });
        }
        let y = group.normal_coords(&coords);
        Ok(GroupElement {
            group: group.clone(),
            coords: group.from_normal(&y),
        })
    }

    pub fn zero(group: &Arc<FGAbelianGroup>) -> Self {
        GroupElement {
            group: group.clone(),
            coords: vec![BigInt::zero(); group.rank()],
        }
    }

    pub fn generator(group: &Arc<FGAbelianGroup>, i: usize) -> Self {
        let mut c = vec![BigInt::zero(); group.rank()];
        c[i] = BigInt::one();
        Self::new(group, c).expect("sized from the group")
    }

    pub fn named(group: &Arc<FGAbelianGroup>, name: &str) -> Result<Self> {
        let i = group
            .names
            .iter()
            .position(|n| n == name)
            .ok_or_else(|| Error::pre(format!("no generator named `{name}`")))?;
        Ok(Self::generator(group, i))
    }

    pub fn group(&self) -> &Arc<FGAbelianGroup> {
        &self.group
    }

    /// Canonical coordinates in the original generators.
    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    /// Coordinates in the Smith basis, reduced.
    pub fn normal_coords(&self) -> Vec<BigInt> {
        self.group.normal_coords(&self.coords)
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || self.group == other.group {
            Ok(())
        } else {
            Err(Error::ContextMismatch("elements of different groups".into()))
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let c = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        Self::new(&self.group, c)
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("same group")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        self.scale_big(&BigInt::from(k))
    }

    pub fn scale_big(&self, k: &BigInt) -> Self {
        let c = self.coords.iter().map(|a| a * k).collect();
        Self::new(&self.group, c).expect("same size")
    }

    /// Coefficient of generator `i` in the canonical coordinates.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coords[i]
    }

    pub fn coeff_of(&self, name: &str) -> Option<&BigInt> {
        self.group.names.iter().position(|n| n == name).map(|i| &self.coords[i])
    }
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.check(other).is_ok() && self.coords == other.coords
    }
}

impl Eq for GroupElement {}

impl std::hash::Hash for GroupElement {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.coords.hash(state);
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (c, name) in self.coords.iter().zip(&self.group.names) {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            if abs.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{abs}*{name}")?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Solutions of a linear system `A·x = rhs` with unknowns in a group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolutionSet {
    Empty,
    Unique(Vec<GroupElement>),
    Coset {
        particular: Vec<GroupElement>,
        kernel: Vec<Vec<GroupElement>>,
        count: Option<BigInt>,
    },
}

impl SolutionSet {
    pub fn count(&self) -> Option<BigInt> {
        match self {
            SolutionSet::Empty => Some(BigInt::zero()),
            SolutionSet::Unique(_) => Some(BigInt::one()),
            SolutionSet::Coset { count, .. } => count.clone(),
        }
    }

    /// All solutions, when there are finitely many.
    pub fn enumerate(&self) -> Option<Vec<Vec<GroupElement>>> {
        match self {
            SolutionSet::Empty => Some(Vec::new()),
            SolutionSet::Unique(x) => Some(vec![x.clone()]),
            SolutionSet::Coset { particular, kernel, count } => {
                count.as_ref()?;
                let mut seen: HashSet<Vec<GroupElement>> = HashSet::new();
                let mut frontier = vec![particular.clone()];
                seen.insert(particular.clone());
                while let Some(x) = frontier.pop() {
                    for k in kernel {
                        let y: Vec<GroupElement> = x.iter().zip(k).map(|(a, b)| a.add(b)).collect();
                        if seen.insert(y.clone()) {
                            frontier.push(y);
                        }
                    }
                }
                let mut out: Vec<_> = seen.into_iter().collect();
                out.sort_by(|a, b| {
                    let ka: Vec<&[BigInt]> = a.iter().map(|e| e.coords()).collect();
                    let kb: Vec<&[BigInt]> = b.iter().map(|e| e.coords()).collect();
                    ka.cmp(&kb)
                });
                Some(out)
            }
        }
    }
}

/// Solves `Σ_j A[i][j]·x_j = rhs[i]` for unknowns `x_j` in the group of the
/// right-hand side, one Smith coordinate at a time.
pub fn solve_in_group(
    group: &Arc<FGAbelianGroup>,
    a: &IntMatrix,
    rhs: &[GroupElement],
) -> Result<SolutionSet> {
    let k = a.len();
    if rhs.len() != k {
        return Err(Error::DimensionMismatch { expected: k, got: rhs.len() });
    }
    let p = cols(a, 0);
    if p == 0 {
        return Err(Error::pre("system without unknowns"));
    }
    for r in rhs {
        if !(Arc::ptr_eq(r.group(), group) || **r.group() == **group) {
            return Err(Error::ContextMismatch("right-hand side outside the group".into()));
        }
    }
    let s = smith_sized(a, k, p)?;
    let n = group.rank();
    let rhs_normal: Vec<Vec<BigInt>> = rhs.iter().map(|r| r.normal_coords()).collect();

    // y[j][l]: normal coordinate l of unknown j
    let mut particular = vec![vec![BigInt::zero(); n]; p];
    let mut kernel: Vec<Vec<Vec<BigInt>>> = Vec::new();
    let mut count = Some(BigInt::one());

    for l in 0..n {
        let e = &group.moduli()[l];
        if e.is_one() {
            continue;
        }
        let c: Vec<BigInt> = (0..k)
            .map(|i| {
                let mut acc = BigInt::zero();
                for t in 0..k {
                    acc += &s.u[i][t] * &rhs_normal[t][l];
                }
                acc
            })
            .collect();
        let mut z = vec![BigInt::zero(); p];
        let mut free_dirs: Vec<(usize, BigInt, Option<BigInt>)> = Vec::new();
        for i in 0..k.max(p) {
            let delta = if i < k && i < p { s.d[i][i].clone() } else { BigInt::zero() };
            let ci = if i < k { c[i].clone() } else { BigInt::zero() };
            if e.is_zero() {
                if delta.is_zero() {
                    if !ci.is_zero() {
                        return Ok(SolutionSet::Empty);
                    }
                    if i < p {
                        free_dirs.push((i, BigInt::one(), None));
                    }
                } else {
                    if !(&ci % &delta).is_zero() {
                        return Ok(SolutionSet::Empty);
                    }
                    z[i] = &ci / &delta;
                }
            } else {
                let dm = delta.mod_floor(e);
                let g = dm.gcd(e);
                let cm = ci.mod_floor(e);
                if !(&cm % &g).is_zero() {
                    return Ok(SolutionSet::Empty);
                }
                if i >= p {
                    continue;
                }
                let e_g = e / &g;
                let d_g = (&dm / &g).mod_floor(&e_g);
                let inv = mod_inverse(&d_g, &e_g).ok_or_else(|| Error::invariant("solve", "no inverse"))?;
                z[i] = ((&cm / &g) * inv).mod_floor(&e_g);
                if !g.is_one() {
                    free_dirs.push((i, e_g, Some(g)));
                }
            }
        }
        for j in 0..p {
            let mut acc = BigInt::zero();
            for i in 0..p {
                acc += &s.v[j][i] * &z[i];
            }
            particular[j][l] = acc;
        }
        for (i, step, size) in free_dirs {
            let mut gen = vec![vec![BigInt::zero(); n]; p];
            for j in 0..p {
                gen[j][l] = &s.v[j][i] * &step;
            }
            kernel.push(gen);
            count = match (count, size) {
                (Some(c), Some(sz)) => Some(c * sz),
                _ => None,
            };
        }
    }

    let to_elements = |ys: &Vec<Vec<BigInt>>| -> Vec<GroupElement> {
        ys.iter()
            .map(|y| GroupElement::new(group, group.from_normal(y)).expect("sized"))
            .collect()
    };
    let particular = to_elements(&particular);
    // sanity: the particular solution satisfies the system
    for i in 0..k {
        let mut lhs = GroupElement::zero(group);
        for (j, x) in particular.iter().enumerate() {
            lhs = lhs.add(&x.scale_big(&a[i][j]));
        }
        if lhs != rhs[i] {
            return Err(Error::invariant("solve", format!("row {i} not satisfied")));
        }
    }
    if count.as_ref().map(|c| c.is_one()).unwrap_or(false) {
        return Ok(SolutionSet::Unique(particular));
    }
    Ok(SolutionSet::Coset {
        particular,
        kernel: kernel.iter().map(to_elements).collect(),
        count,
    })
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if m.is_one() {
        return Some(BigInt::zero());
    }
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

/// Divisible model of a `g`-dimensional abelian variety for `r`-torsion
/// questions: `(Z/r²)^{2g}`, in which the `r`-torsion is fully visible.
pub fn torsion_model(g: usize, r: i64) -> Result<Arc<FGAbelianGroup>> {
    let names = (1..=2 * g).map(|i| format!("t{i}")).collect();
    FGAbelianGroup::cyclic_product(names, &vec![r * r; 2 * g])
}

/// Number of `r`-torsion points of a `g`-dimensional abelian variety,
/// counted by solving `r·x = 0` in the divisible model.
pub fn torsion_count(g: usize, r: i64) -> Result<BigInt> {
    if r < 1 {
        return Err(Error::pre("r must be positive"));
    }
    let group = torsion_model(g, r)?;
    let sol = solve_in_group(&group, &int_matrix(&[vec![r]]), &[GroupElement::zero(&group)])?;
    sol.count().ok_or_else(|| Error::invariant("torsion_count", "infinite torsion"))
}

/// The `r`-th roots `c` of a line bundle `M` on a Jacobian of genus `g`.
#[derive(Clone, Debug)]
pub struct RootLocus {
    pub count: BigInt,
    /// `true` when `M` is trivial and the roots are exactly the torsion
    /// subgroup.
    pub is_torsion_subgroup: bool,
    pub particular: String,
    pub solutions: SolutionSet,
}

/// Roots of `c^r = M_Z` with `M_Z = O(a_C(Z) − d_v·o)`. A nontrivial `M_Z`
/// is represented by a formal root `ρ` with `r·ρ = M_Z`, adjoined to the
/// divisible torsion model, so the root set is `ρ + A[r]`.
pub fn root_locus(z_sum: &GroupElement, d_v: i64, r: i64, g: usize) -> Result<RootLocus> {
    if r < 1 || g < 1 {
        return Err(Error::pre("root locus needs r ≥ 1 and g ≥ 1"));
    }
    let trivial = z_sum.is_zero() && d_v == 0;
    let mut names = vec!["rho".to_string()];
    names.extend((1..=2 * g).map(|i| format!("t{i}")));
    let mut orders = vec![0i64];
    orders.extend(std::iter::repeat_n(r * r, 2 * g));
    let group = FGAbelianGroup::cyclic_product(names, &orders)?;
    let m = if trivial {
        GroupElement::zero(&group)
    } else {
        GroupElement::generator(&group, 0).scale(r)
    };
    let solutions = solve_in_group(&group, &int_matrix(&[vec![r]]), &[m])?;
    let count = solutions
        .count()
        .ok_or_else(|| Error::invariant("root_locus", "infinitely many roots"))?;
    let particular = if trivial {
        "0".to_string()
    } else {
        format!("({z_sum} - {d_v}*o)/{r}")
    };
    Ok(RootLocus {
        count,
        is_torsion_subgroup: trivial,
        particular,
        solutions,
    })
}

/// A line bundle on an elliptic curve up to isomorphism: its degree and the
/// sum of the points of any divisor representing it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBundleOnCurve {
    pub degree: i64,
    pub sum: GroupElement,
}

impl LineBundleOnCurve {
    pub fn trivial(group: &Arc<FGAbelianGroup>) -> Self {
        LineBundleOnCurve {
            degree: 0,
            sum: GroupElement::zero(group),
        }
    }

    /// `O([p])`.
    pub fn point(p: &GroupElement) -> Self {
        LineBundleOnCurve {
            degree: 1,
            sum: p.clone(),
        }
    }

    /// `O(k·[o])`.
    pub fn origin_multiple(group: &Arc<FGAbelianGroup>, k: i64) -> Self {
        LineBundleOnCurve {
            degree: k,
            sum: GroupElement::zero(group),
        }
    }

    /// A degree-0 bundle `P_x`.
    pub fn degree_zero(x: &GroupElement) -> Self {
        LineBundleOnCurve {
            degree: 0,
            sum: x.clone(),
        }
    }

    pub fn tensor(&self, other: &Self) -> Self {
        LineBundleOnCurve {
            degree: self.degree + other.degree,
            sum: self.sum.add(&other.sum),
        }
    }

    pub fn dual(&self) -> Self {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> Self {
        LineBundleOnCurve {
            degree: self.degree * k,
            sum: self.sum.scale(k),
        }
    }

    /// `t_x^*`: degree kept, point-sum shifted by `−deg·x`.
    pub fn translate(&self, x: &GroupElement) -> Self {
        LineBundleOnCurve {
            degree: self.degree,
            sum: self.sum.sub(&x.scale(self.degree)),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.degree == 0 && self.sum.is_zero()
    }
}

impl fmt::Display for LineBundleOnCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(deg {}, sum {})", self.degree, self.sum)
    }
}

/// A line bundle `L_B ⊠ L_F` on `B×F`; `O(aσ + bf)` has F-degree `a` and
/// B-degree `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitSurfaceBundleLedger {
    pub base: LineBundleOnCurve,
    pub fiber: LineBundleOnCurve,
}

impl SplitSurfaceBundleLedger {
    pub fn trivial(group: &Arc<FGAbelianGroup>) -> Self {
        SplitSurfaceBundleLedger {
            base: LineBundleOnCurve::trivial(group),
            fiber: LineBundleOnCurve::trivial(group),
        }
    }

    pub fn new(base: LineBundleOnCurve, fiber: LineBundleOnCurve) -> Self {
        SplitSurfaceBundleLedger { base, fiber }
    }

    /// `O(aσ + bf)` with both point-sums zero.
    pub fn from_ns(group: &Arc<FGAbelianGroup>, sigma: i64, f: i64) -> Self {
        SplitSurfaceBundleLedger {
            base: LineBundleOnCurve::origin_multiple(group, f),
            fiber: LineBundleOnCurve::origin_multiple(group, sigma),
        }
    }

    /// `(σ-coefficient, f-coefficient)`.
    pub fn ns(&self) -> (i64, i64) {
        (self.fiber.degree, self.base.degree)
    }

    pub fn tensor(&self, other: &Self) -> Self {
        SplitSurfaceBundleLedger {
            base: self.base.tensor(&other.base),
            fiber: self.fiber.tensor(&other.fiber),
        }
    }

    pub fn dual(&self) -> Self {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> Self {
        SplitSurfaceBundleLedger {
            base: self.base.pow(k),
            fiber: self.fiber.pow(k),
        }
    }

    pub fn translate(&self, x_b: &GroupElement, x_f: &GroupElement) -> Self {
        SplitSurfaceBundleLedger {
            base: self.base.translate(x_b),
            fiber: self.fiber.translate(x_f),
        }
    }

    /// Tensor with the degree-0 bundle `y_B ⊠ y_F`.
    pub fn twist(&self, y_b: &GroupElement, y_f: &GroupElement) -> Self {
        SplitSurfaceBundleLedger {
            base: self.base.tensor(&LineBundleOnCurve::degree_zero(y_b)),
            fiber: self.fiber.tensor(&LineBundleOnCurve::degree_zero(y_f)),
        }
    }
}

impl fmt::Display for SplitSurfaceBundleLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O_B{} ⊠ O_F{}", self.base, self.fiber)
    }
}

/// An ordered product of ledger terms with the running total after each.
#[derive(Clone, Debug)]
pub struct DetChain {
    pub steps: Vec<(String, SplitSurfaceBundleLedger)>,
    pub total: SplitSurfaceBundleLedger,
}

impl DetChain {
    pub fn new(group: &Arc<FGAbelianGroup>) -> Self {
        DetChain {
            steps: Vec::new(),
            total: SplitSurfaceBundleLedger::trivial(group),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, term: SplitSurfaceBundleLedger) {
        self.total = self.total.tensor(&term);
        self.steps.push((label.into(), term));
    }
}

/// Numerical inputs of the two determinant chains, produced by the
/// transform engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedDetNumerics {
    pub r: i64,
    pub d: i64,
    pub m: i64,
    pub chi: i64,
    pub a: i64,
    pub b: i64,
    pub d_v: i64,
    /// `−deg M` for `L = π_B^* M^∨`.
    pub beta: i64,
    /// Rank and degree of the pushforward of `U^∨` along the second factor.
    pub push_u_dual: (i64, i64),
    /// Rank and degree of the pushforward of `V` to the second factor.
    pub push_v: (i64, i64),
    /// `c₁(V^∨)` and `c₁(RS V)` as `(σ, f)` coefficients.
    pub det_v_dual: (i64, i64),
    pub det_rs_v: (i64, i64),
}

#[derive(Clone, Debug)]
pub struct FixedDetChains {
    pub det_v_dual: DetChain,
    pub det_rs_v: DetChain,
    /// Constraints, each an element that must vanish.
    pub constraints: Vec<(String, GroupElement)>,
    /// Coefficient matrix of the two B-constraints in `(a_B(Z), μ)`.
    pub matrix: IntMatrix,
    pub solution: SolutionSet,
}

/// Symbols `z{i}_B`, `z{i}_F` for the points of `Z` and `mu`.
pub fn fixed_det_symbol_group(len: usize) -> Arc<FGAbelianGroup> {
    let mut names = Vec::new();
    for i in 1..=len {
        names.push(format!("z{i}_B"));
        names.push(format!("z{i}_F"));
    }
    names.push("mu".into());
    FGAbelianGroup::free(names)
}

/// Replays both determinant chains of the fixed-determinant argument and
/// solves the resulting system for `(a_B(Z), μ)`.
///
/// `z` holds the points of `Z` as `(B, F)` components and `mu` the point
/// fixing `M = O_B(−(β+1)[o] + [μ])`; all live in one symbol group.
pub fn fixed_det_chains(
    p: &FixedDetNumerics,
    z: &[(GroupElement, GroupElement)],
    mu: &GroupElement,
) -> Result<FixedDetChains> {
    if p.a * p.d + p.b * p.r != 1 {
        return Err(Error::pre(format!("ad + br = {} ≠ 1", p.a * p.d + p.b * p.r)));
    }
    if z.len() as i64 != p.d_v {
        return Err(Error::pre(format!("Z has {} points, expected {}", z.len(), p.d_v)));
    }
    let group = mu.group().clone();
    let m_bundle = LineBundleOnCurve {
        degree: -p.beta,
        sum: mu.clone(),
    };

    // det V^∨ = det Φ(L^∨) ⊗ ⊗_z det(U^∨|_{F×z_F} ⊠ O_{z_B}[2])^∨
    let mut c1 = DetChain::new(&group);
    let (rk_u, deg_u) = p.push_u_dual;
    c1.push(
        "det Φ(L^∨) = det p_{1!}(U^∨) ⊠ M^{rank}",
        SplitSurfaceBundleLedger::new(m_bundle.pow(rk_u), LineBundleOnCurve::origin_multiple(&group, deg_u)),
    );
    for (i, (zb, _)) in z.iter().enumerate() {
        let skyscraper = LineBundleOnCurve::point(zb);
        c1.push(
            format!("z{}: O_F ⊠ O_B(-a[z_B])", i + 1),
            SplitSurfaceBundleLedger::new(skyscraper.pow(p.a).dual(), LineBundleOnCurve::trivial(&group)),
        );
    }
    if c1.total.ns() != p.det_v_dual {
        return Err(Error::invariant(
            "det V^∨",
            format!("Néron-Severi part {:?}, engine gives {:?}", c1.total.ns(), p.det_v_dual),
        ));
    }

    // det RS(V) = (det p_{2*}V)^{rank FM(M)} ⊠ (det FM(M))^{rank p_{2*}V} ⊗ per-point terms
    let mut c2 = DetChain::new(&group);
    let (rk_v, det_v) = p.push_v;
    let fm_m_rank = -p.beta;
    let fm_m_det = LineBundleOnCurve {
        degree: -1,
        sum: m_bundle.sum.clone(),
    };
    c2.push(
        "det p_{2*}(V)^{rank FM(M)} ⊠ det FM(M)^{rank}",
        SplitSurfaceBundleLedger::new(
            fm_m_det.pow(rk_v),
            LineBundleOnCurve::origin_multiple(&group, det_v).pow(fm_m_rank),
        ),
    );
    for (i, (zb, zf)) in z.iter().enumerate() {
        let fiber = LineBundleOnCurve::point(zf)
            .tensor(&LineBundleOnCurve::origin_multiple(&group, p.a - 1))
            .dual();
        let base = LineBundleOnCurve::point(zb)
            .dual()
            .tensor(&LineBundleOnCurve::origin_multiple(&group, 1))
            .pow(p.b);
        c2.push(
            format!("z{}: det V^∨|_(z_F×F) ⊠ O_B(-[z_B]+[o])^b", i + 1),
            SplitSurfaceBundleLedger::new(base, fiber),
        );
    }
    if c2.total.ns() != p.det_rs_v {
        return Err(Error::invariant(
            "det RS(V)",
            format!("Néron-Severi part {:?}, engine gives {:?}", c2.total.ns(), p.det_rs_v),
        ));
    }

    let constraints = vec![
        ("a_F(Z) = o_F".to_string(), c2.total.fiber.sum.neg()),
        ("a·a_B(Z) + r·μ = o_B".to_string(), c1.total.base.sum.neg()),
        ("b·a_B(Z) − d·μ = o_B".to_string(), c2.total.base.sum.neg()),
    ];

    // read off coefficients on a_B(Z) = Σ z_B and on μ
    let mu_index = group.rank() - 1;
    let coefficient_row = |e: &GroupElement, label: &str| -> Result<Vec<i64>> {
        let mut zc: Option<BigInt> = None;
        for (zb, _) in z {
            let idx = zb
                .coords()
                .iter()
                .position(|c| !c.is_zero())
                .ok_or_else(|| Error::pre("symbolic point must be a generator"))?;
            let c = e.coeff(idx).clone();
            if let Some(prev) = &zc {
                if *prev != c {
                    return Err(Error::invariant(label, "points of Z enter with different coefficients"));
                }
            }
            zc = Some(c);
        }
        let zc = zc.unwrap_or_else(BigInt::zero);
        let to = |x: &BigInt| x.to_i64().ok_or_else(|| Error::NonIntegral(x.to_string()));
        Ok(vec![to(&zc)?, to(e.coeff(mu_index))?])
    };
    let rows = vec![
        coefficient_row(&constraints[1].1, "a-constraint")?,
        coefficient_row(&constraints[2].1, "b-constraint")?,
    ];
    let matrix = int_matrix(&rows);

    // solve in a stand-in for B with visible torsion and a free part
    let r2 = (p.r * p.r).max(2);
    let model = FGAbelianGroup::cyclic_product(
        vec!["e1".into(), "e2".into(), "t1".into(), "t2".into()],
        &[0, 0, r2, r2],
    )?;
    let solution = solve_in_group(&model, &matrix, &[GroupElement::zero(&model), GroupElement::zero(&model)])?;
    Ok(FixedDetChains {
        det_v_dual: c1,
        det_rs_v: c2,
        constraints,
        matrix,
        solution,
    })
}

/// Shapes of effective divisors in `|O(aσ + bf)|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectionShape {
    pub h0: i64,
    pub components: String,
    /// Point-sum condition, as the symbolic sum that must equal `o`.
    pub constraint: Option<(String, GroupElement)>,
}

pub fn section_shape(a: i64, b: i64) -> Result<SectionShape> {
    let sum_of = |prefix: &str, n: i64| -> GroupElement {
        let g = FGAbelianGroup::free((1..=n).map(|i| format!("{prefix}{i}")));
        let mut s = GroupElement::zero(&g);
        for i in 0..n as usize {
            s = s.add(&GroupElement::generator(&g, i));
        }
        s
    };
    match (a, b) {
        (0, l) if l >= 1 => Ok(SectionShape {
            h0: l,
            components: format!("⊔ z_i×F, i = 1..{l}"),
            constraint: Some(("B".into(), sum_of("z", l))),
        }),
        (l, 0) if l >= 1 => Ok(SectionShape {
            h0: l,
            components: format!("⊔ B×w_i, i = 1..{l}"),
            constraint: Some(("F".into(), sum_of("w", l))),
        }),
        (1, l) if l >= 1 => Ok(SectionShape {
            h0: l,
            components: format!("σ ∪ ⊔ z_i×F, i = 1..{l}"),
            constraint: Some(("B".into(), sum_of("z", l))),
        }),
        (a, b) if a >= 1 && b >= 1 => Ok(SectionShape {
            h0: a * b,
            components: "general".into(),
            constraint: None,
        }),
        _ => Err(Error::pre(format!("unsupported divisor shape ({a}, {b})"))),
    }
}
