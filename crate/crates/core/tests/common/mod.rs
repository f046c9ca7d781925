#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use fmcalc::exterior::{rat, ratio, AlgebraElement, GeneratorSet, LinearMap, Monomial};
use fmcalc::ledger::{solve_in_group, FGAbelianGroup, GroupElement, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rand::rngs::StdRng;
use rand::Rng;

pub fn context(prefix: &str, n: usize) -> Arc<GeneratorSet> {
    GeneratorSet::new((0..n).map(|i| format!("{prefix}{i}"))).unwrap()
}

/// `(bits, numerator, denominator)` terms on `ctx`; bits outside the
/// context are masked off.
pub fn element(ctx: &Arc<GeneratorSet>, terms: &[(u32, i64, i64)]) -> AlgebraElement {
    let mask = (1u32 << ctx.len()) - 1;
    let mut e = AlgebraElement::zero(ctx);
    for &(bits, n, d) in terms {
        e = &e + &AlgebraElement::monomial(ctx, Monomial::from_bits(bits & mask), ratio(n, d));
    }
    e
}

pub fn homogeneous(ctx: &Arc<GeneratorSet>, degree: usize, terms: &[(u32, i64)]) -> AlgebraElement {
    let n = ctx.len();
    let monos: Vec<u32> = (0u32..(1 << n)).filter(|b| b.count_ones() as usize == degree).collect();
    let mut e = AlgebraElement::zero(ctx);
    for &(pick, c) in terms {
        let m = monos[pick as usize % monos.len()];
        e = &e + &AlgebraElement::monomial(ctx, Monomial::from_bits(m), rat(c));
    }
    e
}

/// Map with pullback rows given by `entries`, read row-major.
pub fn linear_map(source: &Arc<GeneratorSet>, target: &Arc<GeneratorSet>, entries: &[i64]) -> LinearMap {
    let (ns, nt) = (source.len(), target.len());
    let rows: Vec<Vec<i64>> = (0..nt)
        .map(|t| (0..ns).map(|s| entries[(t * ns + s) % entries.len()]).collect())
        .collect();
    LinearMap::from_ints(source, target, &rows).unwrap()
}

/// Invariant-factor lists `d₁ | d₂ | …` (all `dᵢ ≥ 2`) of the nontrivial
/// finite abelian groups of order at most `max`, plus the trivial group.
pub fn abelian_groups(max: i64) -> Vec<Vec<i64>> {
    fn extend(prefix: &mut Vec<i64>, order: i64, max: i64, out: &mut Vec<Vec<i64>>) {
        out.push(prefix.clone());
        let start = prefix.last().copied().unwrap_or(2);
        let mut d = start;
        while order * d <= max {
            if prefix.last().is_none_or(|&p| d % p == 0) {
                prefix.push(d);
                extend(prefix, order * d, max, out);
                prefix.pop();
            }
            d += 1;
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::new(), 1, max, &mut out);
    out
}

/// Random unimodular matrix and its inverse, as products of elementary
/// row operations.
pub fn unimodular(n: usize, rng: &mut StdRng) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let mut q = identity(n);
    let mut qi = identity(n);
    if n < 2 {
        return (q, qi);
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        while j == i {
            j = rng.gen_range(0..n);
        }
        let k = rng.gen_range(-2..=2i64);
        // q ← E·q with E = I + k·e_ij; q⁻¹ ← q⁻¹·E⁻¹
        for c in 0..n {
            q[i][c] += k * q[j][c];
        }
        for row in qi.iter_mut() {
            row[j] -= k * row[i];
        }
    }
    (q, qi)
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// `⊕ Z/dᵢ` presented with the relation matrix `D·Q`.
pub struct Scrambled {
    pub factors: Vec<i64>,
    pub q: Vec<Vec<i64>>,
    pub qi: Vec<Vec<i64>>,
    pub group: Arc<FGAbelianGroup>,
}

impl Scrambled {
    pub fn new(factors: &[i64], rng: &mut StdRng) -> Self {
        let n = factors.len().max(1);
        let factors: Vec<i64> = if factors.is_empty() { vec![1] } else { factors.to_vec() };
        let (q, qi) = unimodular(n, rng);
        let relations: IntMatrix = (0..n)
            .map(|i| q[i].iter().map(|&x| BigInt::from(factors[i] * x)).collect())
            .collect();
        let names = (0..n).map(|i| format!("g{i}")).collect();
        let group = FGAbelianGroup::new(names, relations).unwrap();
        Scrambled { factors, q, qi, group }
    }

    pub fn order(&self) -> i64 {
        self.factors.iter().product()
    }

    /// `y ↦ y·Q`.
    pub fn element(&self, y: &[i64]) -> GroupElement {
        let n = y.len();
        let coords = (0..n).map(|j| BigInt::from((0..n).map(|i| y[i] * self.q[i][j]).sum::<i64>())).collect();
        GroupElement::new(&self.group, coords).unwrap()
    }

    /// `x ↦ x·Q⁻¹` reduced mod the factors.
    pub fn coords(&self, x: &GroupElement) -> Vec<i64> {
        let n = self.factors.len();
        let xs: Vec<BigInt> = x.coords().to_vec();
        (0..n)
            .map(|j| {
                let mut acc = BigInt::from(0);
                for (i, xi) in xs.iter().enumerate() {
                    acc += xi * BigInt::from(self.qi[i][j]);
                }
                acc.mod_floor(&BigInt::from(self.factors[j])).to_i64().unwrap()
            })
            .collect()
    }

    pub fn all(&self) -> Vec<Vec<i64>> {
        let mut out = vec![Vec::new()];
        for &d in &self.factors {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..d).map(move |k| {
                        let mut q = p.clone();
                        q.push(k);
                        q
                    })
                })
                .collect();
        }
        out
    }
}

/// Compares `solve_in_group` with exhaustive search for one random system
/// with `p` unknowns. Returns a description of the first disagreement.
pub fn solver_agrees(g: &Scrambled, p: usize, rng: &mut StdRng) -> Result<(), String> {
    let k = rng.gen_range(1..=2usize);
    let a: Vec<Vec<i64>> = (0..k).map(|_| (0..p).map(|_| rng.gen_range(-6..=6)).collect()).collect();
    let elems = g.all();
    let pick = |rng: &mut StdRng| elems[rng.gen_range(0..elems.len())].clone();
    let n = g.factors.len();
    let combine = |xs: &[Vec<i64>], row: &[i64]| -> Vec<i64> {
        (0..n)
            .map(|l| {
                let s: i64 = xs.iter().zip(row).map(|(x, c)| c * x[l]).sum();
                s.rem_euclid(g.factors[l])
            })
            .collect()
    };
    let rhs_y: Vec<Vec<i64>> = if rng.gen_bool(0.5) {
        let x: Vec<Vec<i64>> = (0..p).map(|_| pick(rng)).collect();
        a.iter().map(|row| combine(&x, row)).collect()
    } else {
        (0..k).map(|_| pick(rng)).collect()
    };

    let mut expected = BTreeSet::new();
    let mut tuple = vec![0usize; p];
    'outer: loop {
        let xs: Vec<Vec<i64>> = tuple.iter().map(|&i| elems[i].clone()).collect();
        if a.iter().zip(&rhs_y).all(|(row, r)| combine(&xs, row) == *r) {
            expected.insert(xs);
        }
        for slot in tuple.iter_mut() {
            *slot += 1;
            if *slot < elems.len() {
                continue 'outer;
            }
            *slot = 0;
        }
        break;
    }

    let matrix: IntMatrix = a.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let rhs: Vec<GroupElement> = rhs_y.iter().map(|y| g.element(y)).collect();
    let sol = solve_in_group(&g.group, &matrix, &rhs).map_err(|e| e.to_string())?;
    let listed = sol.enumerate().ok_or("finite group reported infinitely many solutions")?;
    let got: BTreeSet<Vec<Vec<i64>>> = listed
        .iter()
        .map(|xs| xs.iter().map(|x| g.coords(x)).collect())
        .collect();
    let count = sol.count().and_then(|c| c.to_usize());
    if got != expected || count != Some(expected.len()) {
        return Err(format!(
            "group {:?}, A = {a:?}, rhs = {rhs_y:?}: solver {} ({count:?}), brute force {}",
            g.factors,
            got.len(),
            expected.len()
        ));
    }
    Ok(())
}
