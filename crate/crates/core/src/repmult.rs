//! Weight multiplicities of integrable highest weight modules truncated by
//! `delta`-degree, tensor product multiplicities by the Klimyk alternating
//! sum with a finite certificate, the top shift `b_0`, and the Levi
//! reduction check.
//!
//! Weights below a highest weight `lambda` are stored as `lambda - sum m_i alpha_i`
//! keyed by `m`. For affine data `m_0` is the `delta`-degree and the tables
//! hold every weight with `m_0 <= depth`.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::root_data::{finite_positive_roots, integral_symmetrizer};
use crate::scalar::{fmt_rat, sqrt_upper, Scalar};
use crate::schubert::StructureTable;
use crate::syntax::format_weight;
use crate::weyl::{AffineWeylElt, AffineWeylGroup, ParabolicSpec};
use crate::{Rat, RootData, Weight};

/// A multiplicity that is either certified or needs a deeper table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Value(BigInt),
    Undecided { need_depth: i64 },
}

impl Outcome {
    pub fn value(&self) -> Option<&BigInt> {
        match self {
            Outcome::Value(v) => Some(v),
            Outcome::Undecided { .. } => None,
        }
    }

    pub fn is_positive(&self) -> Option<bool> {
        self.value().map(|v| v.is_positive())
    }

    pub fn to_json(&self) -> Value {
        match self {
            Outcome::Value(v) => json!({"status": "value", "value": v.to_string()}),
            Outcome::Undecided { need_depth } => json!({"status": "undecided", "need_depth": need_depth}),
        }
    }
}

/// Positive roots with multiplicities of a symmetrizable generalized Cartan
/// matrix, in simple-root coordinates. For affine data only roots with
/// `m_0 <= depth` are listed.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub cartan: Vec<Vec<i64>>,
    pub sym: Vec<i64>,
    /// `(alpha_i, alpha_j) = sym_i a_ij`, scaled to integers.
    form: Vec<Vec<i64>>,
    pub roots: Vec<(Vec<i64>, i64)>,
    pub depth: Option<i64>,
}

impl RootSystem {
    fn with_roots(cartan: Vec<Vec<i64>>, roots: Vec<(Vec<i64>, i64)>, depth: Option<i64>) -> Self {
        let sym = integral_symmetrizer(&cartan);
        let n = cartan.len();
        let form = (0..n).map(|i| (0..n).map(|j| sym[i] * cartan[i][j]).collect()).collect();
        RootSystem { cartan, sym, form, roots, depth }
    }

    /// A finite type Cartan matrix (possibly decomposable).
    pub fn finite(cartan: &[Vec<i64>]) -> Self {
        let roots = finite_positive_roots(cartan).into_iter().map(|r| (r, 1)).collect();
        Self::with_roots(cartan.to_vec(), roots, None)
    }

    /// Real roots `a + n delta` and imaginary roots `n delta` (multiplicity `l`)
    /// with `n <= depth`.
    pub fn affine(data: &RootData, depth: i64) -> Self {
        let l = data.rank();
        let marks = &data.marks;
        let fin: Vec<Vec<i64>> = data.finite.positive_roots.clone();
        let embed = |c: &[i64], n: i64, s: i64| -> Vec<i64> {
            let mut v: Vec<i64> = marks.iter().map(|&a| a * n).collect();
            for (k, &x) in c.iter().enumerate() {
                v[k + 1] += s * x;
            }
            v
        };
        let mut roots = Vec::new();
        for n in 0..=depth.max(0) {
            for c in &fin {
                roots.push((embed(c, n, 1), 1));
                if n > 0 {
                    roots.push((embed(c, n, -1), 1));
                }
            }
            if n > 0 {
                roots.push((embed(&vec![0; l], n, 0), l as i64));
            }
        }
        Self::with_roots(data.affine_cartan.clone(), roots, Some(depth))
    }

    pub fn num_nodes(&self) -> usize {
        self.cartan.len()
    }

    fn ip(&self, x: &[i64], y: &[i64]) -> i64 {
        let mut s = 0;
        for (i, &xi) in x.iter().enumerate() {
            if xi != 0 {
                for (j, &yj) in y.iter().enumerate() {
                    s += xi * self.form[i][j] * yj;
                }
            }
        }
        s
    }

    /// `(lambda, sum x_i alpha_i)` for `lambda` with the given labels.
    fn label_ip(&self, labels: &[i64], x: &[i64]) -> i64 {
        x.iter().zip(labels).zip(&self.sym).map(|((&xi, &a), &d)| xi * a * d).sum()
    }

    fn in_depth(&self, m: &[i64]) -> bool {
        self.depth.is_none_or(|d| m[0] <= d)
    }
}

/// Freudenthal's recursion for `L(lambda)` given by its labels
/// `<lambda, alpha_i^vee>`. Returns every weight multiplicity within the
/// root system's depth, keyed by `m`.
pub fn freudenthal(rs: &RootSystem, labels: &[i64]) -> Result<HashMap<Vec<i64>, BigInt>> {
    let n = rs.num_nodes();
    if labels.len() != n || labels.iter().any(|&a| a < 0) {
        return Err(Error::InvalidInput("highest weight must be dominant integral".into()));
    }
    let mut table: HashMap<Vec<i64>, BigInt> = HashMap::new();
    table.insert(vec![0; n], BigInt::one());
    let mut shell = vec![vec![0i64; n]];
    while !shell.is_empty() {
        let mut cands: BTreeSet<Vec<i64>> = BTreeSet::new();
        for m in &shell {
            for i in 0..n {
                let mut x = m.clone();
                x[i] += 1;
                if rs.in_depth(&x) {
                    cands.insert(x);
                }
            }
        }
        let cands: Vec<Vec<i64>> = cands.into_iter().collect();
        let computed: Vec<Result<(Vec<i64>, BigInt)>> =
            cands.into_par_iter().map(|b| freudenthal_step(rs, labels, &table, &b).map(|v| (b, v))).collect();
        shell.clear();
        for r in computed {
            let (b, v) = r?;
            if !v.is_zero() {
                shell.push(b.clone());
                table.insert(b, v);
            }
        }
    }
    Ok(table)
}

fn freudenthal_step(rs: &RootSystem, labels: &[i64], table: &HashMap<Vec<i64>, BigInt>, beta: &[i64]) -> Result<BigInt> {
    let mut num = BigInt::zero();
    for (alpha, mult) in &rs.roots {
        if alpha.iter().zip(beta).any(|(a, b)| a > b) {
            continue;
        }
        let la = rs.label_ip(labels, alpha);
        let mut x: Vec<i64> = beta.iter().zip(alpha).map(|(b, a)| b - a).collect();
        while x.iter().all(|&v| v >= 0) {
            if let Some(m) = table.get(&x) {
                num += BigInt::from(mult * (la - rs.ip(&x, alpha))) * m;
            }
            for (xi, a) in x.iter_mut().zip(alpha) {
                *xi -= a;
            }
        }
    }
    num *= 2;
    let shifted: Vec<i64> = labels.iter().map(|a| a + 1).collect();
    let den = 2 * rs.label_ip(&shifted, beta) - rs.ip(beta, beta);
    if den <= 0 {
        if num.is_zero() {
            return Ok(BigInt::zero());
        }
        return Err(Error::Internal(format!("vanishing Freudenthal denominator at {beta:?}")));
    }
    let (q, r) = num.div_rem(&BigInt::from(den));
    if !r.is_zero() {
        return Err(Error::Internal(format!("inexact Freudenthal quotient at {beta:?}")));
    }
    if q.is_negative() {
        return Err(Error::Internal(format!("negative weight multiplicity at {beta:?}")));
    }
    Ok(q)
}

/// Integral labels `<lambda, alpha_i^vee>` of a dominant integral weight.
pub fn dominant_labels(data: &RootData, lambda: &Weight) -> Result<Vec<i64>> {
    data.coroot_values(lambda)
        .iter()
        .map(|x| x.to_i64_exact().filter(|&v| v >= 0))
        .collect::<Option<Vec<i64>>>()
        .ok_or_else(|| Error::InvalidInput("weight is not dominant integral".into()))
}

/// Integer root coordinates of `a - b`, or `None` if it is not in the root
/// lattice `Q_dot + Z delta`.
fn root_diff(data: &RootData, a: &Weight, b: &Weight) -> Option<Vec<i64>> {
    let c = data.affine_root_coords(&a.sub(b))?;
    c.iter().map(|x| x.to_i64_exact()).collect()
}

/// Multiplicities of `L(lambda)` down to a `delta`-degree.
#[derive(Clone, Debug)]
pub struct WeightMultTable {
    pub lambda: Weight,
    pub labels: Vec<i64>,
    pub depth: i64,
    mults: HashMap<Vec<i64>, BigInt>,
}

pub fn weight_multiplicities(data: &RootData, lambda: &Weight, depth: i64) -> Result<WeightMultTable> {
    let labels = dominant_labels(data, lambda)?;
    let rs = RootSystem::affine(data, depth);
    let mults = freudenthal(&rs, &labels)?;
    Ok(WeightMultTable { lambda: lambda.clone(), labels, depth, mults })
}

impl WeightMultTable {
    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// Multiplicity of `lambda - sum m_i alpha_i`.
    pub fn mult_at(&self, m: &[i64]) -> Outcome {
        if m.iter().any(|&x| x < 0) {
            return Outcome::Value(BigInt::zero());
        }
        if m[0] > self.depth {
            return Outcome::Undecided { need_depth: m[0] };
        }
        Outcome::Value(self.mults.get(m).cloned().unwrap_or_default())
    }

    pub fn mult(&self, data: &RootData, mu: &Weight) -> Outcome {
        match root_diff(data, &self.lambda, mu) {
            Some(m) => self.mult_at(&m),
            None => Outcome::Value(BigInt::zero()),
        }
    }

    /// All stored `(m, mult)`, sorted by `m`.
    pub fn entries(&self) -> Vec<(Vec<i64>, BigInt)> {
        let mut v: Vec<_> = self.mults.iter().map(|(k, c)| (k.clone(), c.clone())).collect();
        v.sort();
        v
    }

    pub fn to_json(&self, data: &RootData) -> Value {
        let rows: Vec<Value> = self
            .entries()
            .into_iter()
            .map(|(m, c)| {
                let mu = self.lambda.sub(&data.weight_from_root_coords(&m.iter().map(|&x| Rat::from_int(x)).collect::<Vec<_>>()));
                json!({"weight": format_weight(data, &mu), "m": m, "mult": c.to_string()})
            })
            .collect();
        json!({"lambda": format_weight(data, &self.lambda), "depth": self.depth, "weights": rows})
    }
}

/// Klimyk evaluation of `c_{lambda1 lambda2}^mu` against a fixed table of
/// `L(lambda1)`.
///
/// `c = sum_w eps(w) mult_{lambda1}(w(mu + rho) - rho - lambda2)`. Nonzero terms
/// need `|w(mu + rho) - rho - lambda2|^2 <= |lambda1|^2`, which confines the
/// translation part of `w` to an ellipsoid for each finite part; the sum runs
/// over the integer points of a bounding box. Multiplicities are read at the
/// dominant conjugate, so the table depth only has to reach that conjugate.
pub struct TensorEngine<'a> {
    data: &'a RootData,
    group: AffineWeylGroup,
    finite_w: Vec<AffineWeylElt>,
    pub lambda1: Weight,
    pub lambda2: Weight,
    pub table: WeightMultTable,
    rho: Weight,
}

impl<'a> TensorEngine<'a> {
    pub fn new(data: &'a RootData, lambda1: &Weight, lambda2: &Weight, depth: i64) -> Result<Self> {
        dominant_labels(data, lambda2)?;
        let table = weight_multiplicities(data, lambda1, depth)?;
        let group = AffineWeylGroup::new(data);
        let finite_w = finite_weyl_group(&group);
        Ok(TensorEngine {
            data,
            group,
            finite_w,
            lambda1: lambda1.clone(),
            lambda2: lambda2.clone(),
            table,
            rho: data.rho(),
        })
    }

    pub fn depth(&self) -> i64 {
        self.table.depth
    }

    /// Multiplicity of `nu` in `L(lambda1)`, read at its dominant conjugate.
    pub fn mult_lambda1(&self, nu: &Weight) -> Outcome {
        let d = self.data;
        if self.lambda1.level.is_zero() {
            let v = if *nu == self.lambda1 { 1 } else { 0 };
            return Outcome::Value(BigInt::from(v));
        }
        if nu.level != self.lambda1.level {
            return Outcome::Value(BigInt::zero());
        }
        let mut x = nu.clone();
        loop {
            let vals = d.coroot_values(&x);
            match vals.iter().position(|v| v.is_negative()) {
                Some(i) => x = self.group.act_on_weight(self.group.simple(i), &x),
                None => break,
            }
        }
        self.table.mult(d, &x)
    }

    /// `c_{lambda1 lambda2}^mu`.
    pub fn multiplicity(&self, mu: &Weight) -> Result<Outcome> {
        let d = self.data;
        dominant_labels(d, mu)?;
        let (l1, l2) = (&self.lambda1, &self.lambda2);
        if mu.level != l1.level.clone() + l2.level.clone() {
            return Ok(Outcome::Value(BigInt::zero()));
        }
        let Some(beta) = root_diff(d, &l1.add(l2), mu) else {
            return Ok(Outcome::Value(BigInt::zero()));
        };
        if beta.iter().any(|&x| x < 0) {
            return Ok(Outcome::Value(BigInt::zero()));
        }
        let lam = mu.add(&self.rho);
        let cc = l2.add(&self.rho);
        let k = lam.level.clone();
        let lc = cc.level.clone();
        let kl = k.clone() * lc.clone();
        let norm_l1 = d.weight_form(l1, l1);
        let two = Rat::from_int(2);
        let rhs_const = (d.weight_form(&lam, &lam) + d.weight_form(&cc, &cc) - norm_l1.clone()) / two.clone();
        let l = d.rank();
        let fund_norms: Vec<Rat> = (0..l)
            .map(|i| {
                let mut e = vec![Rat::zero(); l];
                e[i] = Rat::one();
                d.finite.weight_form(&e, &e)
            })
            .collect();
        let mut total = BigInt::zero();
        let mut need: Option<i64> = None;
        for wd in &self.finite_w {
            let x0 = self.group.act_on_weight(wd, &lam);
            let u: Vec<Rat> = x0.dot.iter().zip(&cc.dot).map(|(a, b)| lc.clone() * a - k.clone() * b).collect();
            let r = d.weight_form(&x0, &cc) - rhs_const.clone();
            let xstar: Vec<Rat> = d.finite.nu_inverse(&u).into_iter().map(|v| -v / kl.clone()).collect();
            let qstar = -d.finite.weight_form(&u, &u) / (two.clone() * kl.clone());
            let r2 = two.clone() * (r - qstar) / kl.clone();
            if r2.is_negative() {
                continue;
            }
            let ranges: Vec<(i64, i64)> = (0..l)
                .map(|i| {
                    let rad = sqrt_upper(&(r2.clone() * fund_norms[i].clone()));
                    let lo = (xstar[i].clone() - rad.clone()).ceil().to_integer().to_i64().expect("box fits");
                    let hi = (xstar[i].clone() + rad).floor().to_integer().to_i64().expect("box fits");
                    (lo, hi)
                })
                .collect();
            for h in box_points(&ranges) {
                let w = self.group.mul(&self.group.translation(&h), wd);
                let x = self.group.act_on_weight(&w, &lam);
                let nu = x.sub(&cc);
                if d.weight_form(&nu, &nu) > norm_l1 {
                    continue;
                }
                match self.mult_lambda1(&nu) {
                    Outcome::Value(m) => {
                        if !m.is_zero() {
                            total += BigInt::from(w.sign()) * m;
                        }
                    }
                    Outcome::Undecided { need_depth } => {
                        need = Some(need.map_or(need_depth, |n: i64| n.max(need_depth)));
                    }
                }
            }
        }
        if let Some(n) = need {
            return Ok(Outcome::Undecided { need_depth: n });
        }
        if total.is_negative() {
            return Err(Error::Internal("negative tensor multiplicity".into()));
        }
        Ok(Outcome::Value(total))
    }
}

fn box_points(ranges: &[(i64, i64)]) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for &(lo, hi) in ranges {
        if lo > hi {
            return Vec::new();
        }
        out = out
            .into_iter()
            .flat_map(|p: Vec<i64>| {
                (lo..=hi).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    out
}

/// The finite Weyl group as affine Weyl group elements.
pub fn finite_weyl_group(g: &AffineWeylGroup) -> Vec<AffineWeylElt> {
    let mut seen: BTreeSet<AffineWeylElt> = BTreeSet::new();
    seen.insert(g.identity());
    let mut frontier = vec![g.identity()];
    while let Some(w) = frontier.pop() {
        for i in 1..=g.rank {
            let x = g.mul(&w, g.simple(i));
            if seen.insert(x.clone()) {
                frontier.push(x);
            }
        }
    }
    seen.into_iter().collect()
}

/// `c_{lambda1 lambda2}^mu` from a table of depth `depth`.
pub fn tensor_multiplicity(data: &RootData, l1: &Weight, l2: &Weight, mu: &Weight, depth: i64) -> Result<Outcome> {
    TensorEngine::new(data, l1, l2, depth)?.multiplicity(mu)
}

/// Dominant `mu` with `c_{lambda1 lambda2}^mu` and `delta`-degree of
/// `lambda1 + lambda2 - mu` at most `depth`.
#[derive(Clone, Debug)]
pub struct TensorMultTable {
    pub lambda1: Weight,
    pub lambda2: Weight,
    pub depth: i64,
    /// Nonzero values keyed by the root coordinates of `lambda1 + lambda2 - mu`.
    pub entries: BTreeMap<Vec<i64>, BigInt>,
    pub undecided: BTreeMap<Vec<i64>, i64>,
}

/// Every constituent `L(mu)` has `mu - lambda2` a weight of `L(lambda1)`, so
/// the candidates are read off the table of `L(lambda1)`. The table is built
/// `extra` degrees deeper than the constituents reported.
pub fn tensor_table(data: &RootData, l1: &Weight, l2: &Weight, depth: i64, extra: i64) -> Result<TensorMultTable> {
    let engine = TensorEngine::new(data, l1, l2, depth + extra)?;
    let cands: Vec<(Vec<i64>, Weight)> = engine
        .table
        .entries()
        .into_iter()
        .filter(|(m, _)| m[0] <= depth)
        .map(|(m, _)| {
            let mr: Vec<Rat> = m.iter().map(|&x| Rat::from_int(x)).collect();
            (m, l1.add(l2).sub(&data.weight_from_root_coords(&mr)))
        })
        .filter(|(_, mu)| data.is_dominant(mu))
        .collect();
    let results: Vec<Result<(Vec<i64>, Outcome)>> =
        cands.par_iter().map(|(m, mu)| engine.multiplicity(mu).map(|o| (m.clone(), o))).collect();
    let mut entries = BTreeMap::new();
    let mut undecided = BTreeMap::new();
    for r in results {
        match r? {
            (m, Outcome::Value(v)) => {
                if !v.is_zero() {
                    entries.insert(m, v);
                }
            }
            (m, Outcome::Undecided { need_depth }) => {
                undecided.insert(m, need_depth);
            }
        }
    }
    Ok(TensorMultTable { lambda1: l1.clone(), lambda2: l2.clone(), depth, entries, undecided })
}

impl TensorMultTable {
    pub fn mu_of(&self, data: &RootData, m: &[i64]) -> Weight {
        let mr: Vec<Rat> = m.iter().map(|&x| Rat::from_int(x)).collect();
        self.lambda1.add(&self.lambda2).sub(&data.weight_from_root_coords(&mr))
    }

    pub fn to_json(&self, data: &RootData) -> Value {
        let rows: Vec<Value> = self
            .entries
            .iter()
            .map(|(m, c)| json!({"mu": format_weight(data, &self.mu_of(data, m)), "c": c.to_string()}))
            .collect();
        let und: Vec<Value> = self
            .undecided
            .iter()
            .map(|(m, n)| json!({"mu": format_weight(data, &self.mu_of(data, m)), "need_depth": n}))
            .collect();
        json!({
            "lambda1": format_weight(data, &self.lambda1),
            "lambda2": format_weight(data, &self.lambda2),
            "depth": self.depth,
            "entries": rows,
            "undecided": und,
        })
    }
}

/// Shape of `{b : L(mu_bar + b delta) in L(lambda1) x L(lambda2)}` within
/// the searched window.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BSupportShape {
    /// `b <= b0`.
    Interval,
    /// `b = b0` or `b <= b0 - 2`.
    GapAtOne,
    /// Nothing found in the window.
    Empty,
    /// Some value in the window could not be certified.
    Undetermined,
    /// Neither alternative.
    Other,
}

#[derive(Clone, Debug)]
pub struct B0Report {
    pub b0: Option<i64>,
    /// Inclusive window `(lo, hi)` of scanned `b`.
    pub window: (i64, i64),
    pub support: Vec<i64>,
    pub undecided: Vec<i64>,
    pub shape: BSupportShape,
}

impl B0Report {
    pub fn to_json(&self) -> Value {
        json!({
            "b0": self.b0,
            "window": [self.window.0, self.window.1],
            "support": self.support,
            "undecided": self.undecided,
            "shape": format!("{:?}", self.shape),
        })
    }
}

/// Scans `b` downward from the largest value allowed by the root lattice
/// order, over `search_depth + 1` values.
pub fn b0(data: &RootData, l1: &Weight, l2: &Weight, mu_bar: &Weight, search_depth: i64) -> Result<B0Report> {
    for l in [l1, l2] {
        if !l.level.is_positive() {
            return Err(Error::NonPositiveLevel(fmt_rat(&l.level)));
        }
    }
    if !l1.delta.is_zero() || !l2.delta.is_zero() {
        return Err(Error::InvalidInput("lambda1 and lambda2 must vanish on d".into()));
    }
    if mu_bar.level != l1.level.clone() + l2.level.clone() {
        return Err(Error::InvalidInput("level of mu must be the sum of the levels".into()));
    }
    let m = root_diff(data, &l1.add(l2), mu_bar)
        .ok_or_else(|| Error::InvalidInput("mu - lambda1 - lambda2 is not in the root lattice".into()))?;
    // mu_bar + b delta has coordinates m - b * marks; all must be >= 0.
    let top = m.iter().zip(&data.marks).map(|(&x, &a)| Integer::div_floor(&x, &a)).min().unwrap();
    let lo = top - search_depth;
    let engine = TensorEngine::new(data, l1, l2, m[0] - lo)?;
    let bs: Vec<i64> = (lo..=top).rev().collect();
    let outs: Vec<Result<(i64, Outcome)>> = bs
        .par_iter()
        .map(|&b| {
            let mu = mu_bar.add(&data.delta().scale(&Rat::from_int(b)));
            engine.multiplicity(&mu).map(|o| (b, o))
        })
        .collect();
    let mut support = Vec::new();
    let mut undecided = Vec::new();
    for r in outs {
        match r? {
            (b, Outcome::Value(v)) => {
                if v.is_positive() {
                    support.push(b);
                }
            }
            (b, Outcome::Undecided { .. }) => undecided.push(b),
        }
    }
    support.sort_unstable_by(|a, b| b.cmp(a));
    undecided.sort_unstable_by(|a, b| b.cmp(a));
    let b0 = support.first().copied();
    let shape = classify_support(&support, &undecided, lo);
    Ok(B0Report { b0, window: (lo, top), support, undecided, shape })
}

fn classify_support(support: &[i64], undecided: &[i64], lo: i64) -> BSupportShape {
    let Some(&b0) = support.first() else {
        return if undecided.is_empty() { BSupportShape::Empty } else { BSupportShape::Undetermined };
    };
    if undecided.iter().any(|&b| b < b0) {
        return BSupportShape::Undetermined;
    }
    let set: BTreeSet<i64> = support.iter().copied().collect();
    let full_below = |from: i64| (lo..=from).all(|b| set.contains(&b));
    if full_below(b0) {
        BSupportShape::Interval
    } else if !set.contains(&(b0 - 1)) && full_below(b0 - 2) {
        BSupportShape::GapAtOne
    } else {
        BSupportShape::Other
    }
}

/// Tensor multiplicity of a finite type (possibly decomposable) Cartan
/// matrix, by Racah-Speiser over the Freudenthal weights of `lambda1`.
pub fn finite_tensor_multiplicity(cartan: &[Vec<i64>], l1: &[i64], l2: &[i64], mu: &[i64]) -> Result<BigInt> {
    let rs = RootSystem::finite(cartan);
    if l2.iter().chain(mu).any(|&x| x < 0) {
        return Err(Error::InvalidInput("weights must be dominant".into()));
    }
    let table = freudenthal(&rs, l1)?;
    let n = cartan.len();
    let mut total = BigInt::zero();
    for (m, mult) in &table {
        let mut x: Vec<i64> = (0..n)
            .map(|i| l1[i] - (0..n).map(|j| cartan[i][j] * m[j]).sum::<i64>() + l2[i] + 1)
            .collect();
        let mut sign = 1i64;
        while let Some(j) = x.iter().position(|&v| v < 0) {
            let xj = x[j];
            for (i, xi) in x.iter_mut().enumerate() {
                *xi -= xj * cartan[i][j];
            }
            sign = -sign;
        }
        if x.contains(&0) {
            continue;
        }
        if x.iter().zip(mu).all(|(a, b)| a - 1 == *b) {
            total += BigInt::from(sign) * mult;
        }
    }
    if total.is_negative() {
        return Err(Error::Internal("negative finite tensor multiplicity".into()));
    }
    Ok(total)
}

/// Multiplicity of `L_{L_i}(mu_bar)` in `L_{L_i}(l1_bar) x L_{L_i}(l2_bar)`
/// for the standard Levi subgroup `L_i` (simple roots other than `alpha_i`).
pub fn levi_multiplicity(data: &RootData, i: usize, l1: &Weight, l2: &Weight, mu: &Weight) -> Result<BigInt> {
    let n = data.rank() + 1;
    if i >= n {
        return Err(Error::InvalidInput(format!("node {i} out of range")));
    }
    let nodes: Vec<usize> = (0..n).filter(|&j| j != i).collect();
    let labels = |w: &Weight| -> Result<Vec<i64>> {
        let v = data.coroot_values(w);
        nodes
            .iter()
            .map(|&j| v[j].to_i64_exact().filter(|&x| x >= 0))
            .collect::<Option<Vec<i64>>>()
            .ok_or_else(|| Error::InvalidInput("weight is not dominant integral for the Levi subgroup".into()))
    };
    let (a, b, c) = (labels(l1)?, labels(l2)?, labels(mu)?);
    // central characters: l1 + l2 - mu must lie in the span of the Levi roots
    match root_diff(data, &l1.add(l2), mu) {
        Some(m) if m[i] == 0 => {}
        _ => return Ok(BigInt::zero()),
    }
    let sub: Vec<Vec<i64>> = nodes.iter().map(|&r| nodes.iter().map(|&s| data.affine_cartan[r][s]).collect()).collect();
    finite_tensor_multiplicity(&sub, &a, &b, &c)
}

#[derive(Clone, Debug)]
pub struct ReductionReport {
    pub affine: Outcome,
    pub levi: BigInt,
    pub lambda1_bar: Weight,
    pub lambda2_bar: Weight,
    pub mu_bar: Weight,
    /// `None` when the affine side is undecided.
    pub equal: Option<bool>,
}

impl ReductionReport {
    pub fn to_json(&self, data: &RootData) -> Value {
        json!({
            "affine": self.affine.to_json(),
            "levi": self.levi.to_string(),
            "lambda1_bar": format_weight(data, &self.lambda1_bar),
            "lambda2_bar": format_weight(data, &self.lambda2_bar),
            "mu_bar": format_weight(data, &self.mu_bar),
            "equal": self.equal,
        })
    }
}

/// `<lambda, w varpi_{alpha_i^vee}>`.
pub fn pairing_with_moved_coweight(data: &RootData, g: &AffineWeylGroup, lambda: &Weight, w: &AffineWeylElt, i: usize) -> Rat {
    data.pairing(lambda, &g.act_on_coweight(w, &data.fundamental_coweight(i)))
}

/// Compares `c_{lambda1 lambda2}^mu` with the Levi multiplicity of
/// `(u1^{-1} lambda1, u2^{-1} lambda2, v^{-1} mu)` on a face where
/// `<mu, v tau> = <lambda1, u1 tau> + <lambda2, u2 tau>` and `n_{u1 u2}^v = 1`.
#[allow(clippy::too_many_arguments)]
pub fn boundary_reduction_check(
    data: &RootData,
    table: &StructureTable,
    u1: &AffineWeylElt,
    u2: &AffineWeylElt,
    v: &AffineWeylElt,
    i: usize,
    l1: &Weight,
    l2: &Weight,
    mu: &Weight,
    depth: i64,
) -> Result<ReductionReport> {
    let g = table.group();
    let p = ParabolicSpec::maximal(i, g.rank);
    for w in [u1, u2, v] {
        if !g.is_min_rep(w, &p) {
            return Err(Error::NotMinimal(g.encode(w)));
        }
    }
    if !table.n_elt(u1, u2, v)?.is_one() {
        return Err(Error::InvalidInput("the triple does not have structure constant 1".into()));
    }
    let lhs = pairing_with_moved_coweight(data, g, mu, v, i);
    let rhs = pairing_with_moved_coweight(data, g, l1, u1, i) + pairing_with_moved_coweight(data, g, l2, u2, i);
    if lhs != rhs {
        return Err(Error::InvalidInput(format!(
            "weights are not on the face: {} != {}",
            fmt_rat(&lhs),
            fmt_rat(&rhs)
        )));
    }
    let affine = tensor_multiplicity(data, l1, l2, mu, depth)?;
    let l1b = g.act_on_weight(&g.inverse(u1), l1);
    let l2b = g.act_on_weight(&g.inverse(u2), l2);
    let mub = g.act_on_weight(&g.inverse(v), mu);
    let levi = levi_multiplicity(data, i, &l1b, &l2b, &mub)?;
    let equal = affine.value().map(|a| *a == levi);
    Ok(ReductionReport { affine, levi, lambda1_bar: l1b, lambda2_bar: l2b, mu_bar: mub, equal })
}
