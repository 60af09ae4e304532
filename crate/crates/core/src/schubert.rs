//! Schubert structure constants of affine flag varieties by equivariant
//! localisation, the shift `delta` that defines the deformed product, and
//! the related bookkeeping used by the cone module.
//!
//! Localisations `xi^w(v)` are computed with the subword formula along the
//! fixed reduced word of `v`. Structure constants come from the triangular
//! solve against the localisation matrix on `G/B`; for `u1, u2, v` in `W^P`
//! the same numbers are the structure constants of `G/P`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::scalar::Scalar;
use crate::weyl::{format_word, AffineWeylElt, AffineWeylGroup, Ball, ParabolicSpec};
use crate::RootData;

/// `xi^w(v)` for all `w <= v` in a ball.
#[derive(Clone, Debug)]
pub struct LocalizationTable {
    pub group: AffineWeylGroup,
    pub ball: Ball,
    /// Per `v`: the pairs `(w, xi^w(v))`, sorted by `w`.
    xi: Vec<Vec<(usize, IntPoly)>>,
    /// Per `v`: the roots `beta_j` along its reduced word; their product is `xi^v(v)`.
    diag: Vec<Vec<Vec<i64>>>,
}

impl LocalizationTable {
    pub fn new(group: AffineWeylGroup, max_len: usize) -> Self {
        let ball = group.ball(max_len);
        let rows: Vec<(Vec<(usize, IntPoly)>, Vec<Vec<i64>>)> =
            (0..ball.len()).into_par_iter().map(|v| Self::row(&group, &ball, v)).collect();
        let (xi, diag) = rows.into_iter().unzip();
        LocalizationTable { group, ball, xi, diag }
    }

    fn row(g: &AffineWeylGroup, ball: &Ball, v: usize) -> (Vec<(usize, IntPoly)>, Vec<Vec<i64>>) {
        let n = g.num_nodes();
        let mut states: BTreeMap<usize, IntPoly> = BTreeMap::new();
        states.insert(0, IntPoly::one(n));
        let mut prefix = g.identity();
        let mut betas = Vec::new();
        for &a in &ball.words[v] {
            let beta = g.act_on_root(&prefix, &g.simple_root_coords(a));
            debug_assert!(AffineWeylGroup::is_positive_root(&beta));
            prefix = g.mul(&prefix, g.simple(a));
            let lin = IntPoly::linear(&beta);
            let mut next = states.clone();
            for (&x, p) in &states {
                if let Some(y) = ball.right[x][a] {
                    if ball.lengths[y] == ball.lengths[x] + 1 {
                        next.entry(y).or_insert_with(|| IntPoly::zero(n)).add_assign(&p.mul(&lin));
                    }
                }
            }
            next.retain(|_, p| !p.is_zero());
            states = next;
            betas.push(beta);
        }
        (states.into_iter().collect(), betas)
    }

    pub fn max_len(&self) -> usize {
        self.ball.max_len
    }

    /// `xi^w(v)` by ball indices; `None` means zero.
    pub fn xi(&self, w: usize, v: usize) -> Option<&IntPoly> {
        let row = &self.xi[v];
        row.binary_search_by_key(&w, |(k, _)| *k).ok().map(|i| &row[i].1)
    }

    /// `xi^w(v)`; zero when `w` is not below `v`.
    pub fn billey_restriction(&self, w: &AffineWeylElt, v: &AffineWeylElt) -> Result<IntPoly> {
        let (wi, vi) = (self.index(w)?, self.index(v)?);
        Ok(self.xi(wi, vi).cloned().unwrap_or_else(|| IntPoly::zero(self.group.num_nodes())))
    }

    /// Indices `w` with `xi^w(v) != 0`, i.e. the Bruhat interval below `v`.
    pub fn lower_interval(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.xi[v].iter().map(|(w, _)| *w)
    }

    pub fn diagonal_factors(&self, v: usize) -> &[Vec<i64>] {
        &self.diag[v]
    }

    pub fn index(&self, w: &AffineWeylElt) -> Result<usize> {
        self.ball.index_of(w).ok_or(Error::TableTooSmall {
            need: self.group.length(w),
            have: self.ball.max_len,
        })
    }
}

/// Structure constants `n_{u1 u2}^v` up to a length bound.
#[derive(Clone, Debug)]
pub struct StructureTable {
    pub data: RootData,
    pub loc: LocalizationTable,
    /// Key `(a, b)` with `a <= b`; value maps `v` to the nonzero constant.
    products: HashMap<(usize, usize), BTreeMap<usize, BigInt>>,
}

impl StructureTable {
    pub fn compute(data: &RootData, max_len: usize) -> Result<Self> {
        let group = AffineWeylGroup::new(data);
        let loc = LocalizationTable::new(group, max_len);
        let ball = &loc.ball;
        let pairs: Vec<(usize, usize)> = (0..ball.len())
            .flat_map(|a| (a..ball.len()).map(move |b| (a, b)))
            .filter(|&(a, b)| ball.lengths[a] + ball.lengths[b] <= max_len)
            .collect();
        let results: Vec<Result<((usize, usize), BTreeMap<usize, BigInt>)>> =
            pairs.par_iter().map(|&(a, b)| Ok(((a, b), triangular_solve(&loc, a, b)?))).collect();
        let mut products = HashMap::new();
        for r in results {
            let (k, v) = r?;
            products.insert(k, v);
        }
        Ok(StructureTable { data: data.clone(), loc, products })
    }

    pub fn group(&self) -> &AffineWeylGroup {
        &self.loc.group
    }

    pub fn ball(&self) -> &Ball {
        &self.loc.ball
    }

    pub fn max_len(&self) -> usize {
        self.loc.max_len()
    }

    /// The product `eps_a * eps_b` as a map from `v` to `n_{ab}^v`.
    pub fn product(&self, a: usize, b: usize) -> Option<&BTreeMap<usize, BigInt>> {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.products.get(&key)
    }

    /// `n_{u1 u2}^v` by ball indices. Zero unless lengths add up; `None` if
    /// the triple lies beyond the table.
    pub fn n(&self, u1: usize, u2: usize, v: usize) -> Option<BigInt> {
        let ball = self.ball();
        if ball.lengths[u1] + ball.lengths[u2] != ball.lengths[v] {
            return Some(BigInt::zero());
        }
        self.product(u1, u2).map(|m| m.get(&v).cloned().unwrap_or_else(BigInt::zero))
    }

    pub fn n_elt(&self, u1: &AffineWeylElt, u2: &AffineWeylElt, v: &AffineWeylElt) -> Result<BigInt> {
        let (a, b, c) = (self.loc.index(u1)?, self.loc.index(u2)?, self.loc.index(v)?);
        self.n(a, b, c).ok_or(Error::TableTooSmall { need: self.ball().lengths[c], have: self.max_len() })
    }

    /// Every stored nonzero `(u1, u2, v, n)` with `u1 <= u2`.
    pub fn nonzero_entries(&self) -> Vec<(usize, usize, usize, BigInt)> {
        let mut out: Vec<_> = self
            .products
            .iter()
            .flat_map(|(&(a, b), m)| m.iter().map(move |(&v, n)| (a, b, v, n.clone())))
            .collect();
        out.sort();
        out
    }

    /// `delta_{u1 u2}^v = <-v^{-1} rho + u1^{-1} rho + u2^{-1} rho - rho, varpi_{alpha_i^vee}>`.
    pub fn delta_shift(&self, u1: usize, u2: usize, v: usize, i: usize) -> i64 {
        let g = self.group();
        let el = &self.ball().elements;
        let rho = self.data.rho();
        let tau = self.data.fundamental_coweight(i);
        let val = |w: &AffineWeylElt| self.data.pairing(&g.act_on_weight(&g.inverse(w), &rho), &tau);
        let d = -val(&el[v]) + val(&el[u1]) + val(&el[u2]) - self.data.pairing(&rho, &tau);
        d.to_i64_exact().expect("delta shift is integral")
    }

    /// The same shift, read off inversion sets.
    pub fn delta_shift_by_inversions(&self, u1: usize, u2: usize, v: usize, i: usize) -> i64 {
        let g = self.group();
        let el = &self.ball().elements;
        let s = |w: &AffineWeylElt| g.inversion_set(w).iter().map(|r| r[i]).sum::<i64>();
        -s(&el[v]) + s(&el[u1]) + s(&el[u2])
    }

    fn check_in_wp(&self, w: usize, i: usize) -> Result<()> {
        let g = self.group();
        let p = ParabolicSpec::maximal(i, g.rank);
        if g.is_min_rep(&self.ball().elements[w], &p) {
            Ok(())
        } else {
            Err(Error::NotMinimal(format_word(&self.ball().words[w])))
        }
    }

    /// Coefficient of the deformed product on `G/P_i`.
    pub fn bkb_coefficient(&self, u1: usize, u2: usize, v: usize, i: usize) -> Result<BigInt> {
        for w in [u1, u2, v] {
            self.check_in_wp(w, i)?;
        }
        let ball = self.ball();
        if ball.lengths[v] != ball.lengths[u1] + ball.lengths[u2] {
            return Err(Error::LengthCondition("l(v) must equal l(u1) + l(u2)".into()));
        }
        let n = self.n(u1, u2, v).ok_or(Error::TableTooSmall { need: ball.lengths[v], have: self.max_len() })?;
        if self.delta_shift(u1, u2, v, i) == 0 {
            Ok(n)
        } else {
            Ok(BigInt::zero())
        }
    }

    /// Counts of inversion roots of `w` grouped by their `alpha_i` coefficient.
    pub fn levi_weight_profile(&self, w: usize, i: usize) -> Result<BTreeMap<i64, usize>> {
        self.check_in_wp(w, i)?;
        Ok(levi_weight_profile(self.group(), &self.ball().elements[w], i))
    }

    /// Checks `n_{u1u2}^v = n_{bar} * n_{tilde}` for `P` contained in `Q`.
    pub fn check_multiplicativity(
        &self,
        u1: usize,
        u2: usize,
        v: usize,
        p: &ParabolicSpec,
        q: &ParabolicSpec,
    ) -> Result<MultiplicativityReport> {
        let g = self.group();
        let ball = self.ball();
        let el = &ball.elements;
        if ball.lengths[v] != ball.lengths[u1] + ball.lengths[u2] {
            return Err(Error::LengthCondition("l(v) must equal l(u1) + l(u2)".into()));
        }
        let f1 = g.coset_factorize(&el[u1], p, q)?;
        let f2 = g.coset_factorize(&el[u2], p, q)?;
        let fv = g.coset_factorize(&el[v], p, q)?;
        let len = |w: &AffineWeylElt| g.length(w);
        if len(&fv.0) != len(&f1.0) + len(&f2.0) {
            return Err(Error::LengthCondition("l(v_bar) must equal l(u1_bar) + l(u2_bar)".into()));
        }
        let n = self.n(u1, u2, v).unwrap_or_default();
        let n_bar = self.n_elt(&f1.0, &f2.0, &fv.0)?;
        let n_tilde = self.n_elt(&f1.1, &f2.1, &fv.1)?;
        let holds = n == &n_bar * &n_tilde;
        Ok(MultiplicativityReport { n, n_bar, n_tilde, holds })
    }

    /// JSON rows `{u1, u2, v, i, n, delta, bkb}` for every nonzero constant
    /// with `u1, u2, v` in `W^{P_i}`, plus the `G/B` rows with `i = null`.
    pub fn to_json(&self) -> Value {
        let ball = self.ball();
        let g = self.group();
        let mut rows = Vec::new();
        let entries = self.nonzero_entries();
        for (a, b, v, n) in &entries {
            rows.push(json!({
                "u1": format_word(&ball.words[*a]),
                "u2": format_word(&ball.words[*b]),
                "v": format_word(&ball.words[*v]),
                "i": Value::Null,
                "n": n.to_string(),
            }));
        }
        for i in 0..=g.rank {
            let p = ParabolicSpec::maximal(i, g.rank);
            for (a, b, v, n) in &entries {
                if [a, b, v].iter().all(|&&w| g.is_min_rep(&ball.elements[w], &p)) {
                    let delta = self.delta_shift(*a, *b, *v, i);
                    rows.push(json!({
                        "u1": format_word(&ball.words[*a]),
                        "u2": format_word(&ball.words[*b]),
                        "v": format_word(&ball.words[*v]),
                        "i": i,
                        "n": n.to_string(),
                        "delta": delta,
                        "bkb": if delta == 0 { n.to_string() } else { "0".to_string() },
                    }));
                }
            }
        }
        Value::Array(rows)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplicativityReport {
    pub n: BigInt,
    pub n_bar: BigInt,
    pub n_tilde: BigInt,
    pub holds: bool,
}

/// Counts of inversion roots of `w` grouped by their `alpha_i` coefficient.
pub fn levi_weight_profile(g: &AffineWeylGroup, w: &AffineWeylElt, i: usize) -> BTreeMap<i64, usize> {
    let mut out = BTreeMap::new();
    for r in g.inversion_set(w) {
        *out.entry(r[i]).or_insert(0) += 1;
    }
    out
}

/// Triangular solve for `eps_a * eps_b`; returns the top-degree constants.
fn triangular_solve(loc: &LocalizationTable, a: usize, b: usize) -> Result<BTreeMap<usize, BigInt>> {
    let ball = &loc.ball;
    let (la, lb) = (ball.lengths[a], ball.lengths[b]);
    let top = la + lb;
    let lo = la.max(lb);
    let mut solved: Vec<(usize, IntPoly)> = Vec::new();
    let mut out = BTreeMap::new();
    for len in lo..=top.min(ball.max_len) {
        for z in ball.shell(len) {
            let (Some(xa), Some(xb)) = (loc.xi(a, z), loc.xi(b, z)) else { continue };
            let mut num = xa.mul(xb);
            for (y, py) in &solved {
                if let Some(xy) = loc.xi(*y, z) {
                    num.sub_mul_assign(py, xy);
                }
            }
            let mut q = num;
            for f in loc.diagonal_factors(z) {
                q = q.div_linear(f).ok_or_else(|| {
                    Error::Internal(format!(
                        "inexact division in triangular solve for ({}, {}) at {}",
                        format_word(&ball.words[a]),
                        format_word(&ball.words[b]),
                        format_word(&ball.words[z])
                    ))
                })?;
            }
            if q.is_zero() {
                continue;
            }
            if !q.is_homogeneous() || q.degree() != Some((top - len) as u32) {
                return Err(Error::Internal("structure polynomial has the wrong degree".into()));
            }
            if len == top {
                let n = q.constant_term();
                if n.is_negative() {
                    return Err(Error::Internal("negative structure constant".into()));
                }
                out.insert(z, n);
            } else {
                solved.push((z, q));
            }
        }
    }
    Ok(out)
}

/// Divisor multiplication `eps_{s_i} * eps_u` by the Chevalley rule, as a
/// list of `(v, coefficient)` sorted by length and reduced word.
pub fn chevalley_multiply(g: &AffineWeylGroup, i: usize, u: &AffineWeylElt) -> Vec<(AffineWeylElt, i64)> {
    let lu = g.length(u);
    // l(s_beta) >= 2n - N for beta = a + n delta, and l(s_beta) <= 2 l(u) + 1.
    let nmax = (2 * lu + 1 + g.num_positive_roots()) / 2;
    let mut acc: BTreeMap<(Vec<usize>, AffineWeylElt), i64> = BTreeMap::new();
    for n in 0..=nmax as i64 {
        for beta in crate::oracle::weyl::positive_real_roots_at_degree(g, n) {
            let x = g.mul(u, &g.root_reflection(&beta));
            if g.length(&x) != lu + 1 {
                continue;
            }
            let c = g.coroot_of(&beta)[i];
            if c != 0 {
                *acc.entry((g.reduced_word(&x), x)).or_insert(0) += c;
            }
        }
    }
    acc.into_iter().filter(|(_, c)| *c != 0).map(|((_, x), c)| (x, c)).collect()
}

/// Convenience: the constant as `i64`.
pub fn to_i64(n: &BigInt) -> i64 {
    n.to_i64().expect("structure constant fits in i64")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::CartanType;

    fn a1(max_len: usize) -> StructureTable {
        StructureTable::compute(&RootData::new(CartanType::A(1)), max_len).unwrap()
    }

    #[test]
    fn billey_examples() {
        let t = a1(3);
        let g = t.group();
        let e = g.identity();
        let s1 = g.from_word(&[1]);
        let s01 = g.from_word(&[0, 1]);
        for v in &t.ball().elements {
            assert_eq!(t.loc.billey_restriction(&e, v).unwrap(), IntPoly::one(2));
        }
        assert_eq!(t.loc.billey_restriction(&s1, &s1).unwrap(), IntPoly::linear(&[0, 1]));
        assert_eq!(t.loc.billey_restriction(&s1, &s01).unwrap(), IntPoly::linear(&[2, 1]));
        assert!(t.loc.billey_restriction(&s01, &s1).unwrap().is_zero());
    }

    #[test]
    fn a1_divisor_square() {
        let t = a1(4);
        let g = t.group();
        let s1 = g.from_word(&[1]);
        let s01 = g.from_word(&[0, 1]);
        let s10 = g.from_word(&[1, 0]);
        assert_eq!(t.n_elt(&s1, &s1, &s01).unwrap(), BigInt::from(2));
        assert_eq!(t.n_elt(&s1, &s1, &s10).unwrap(), BigInt::from(0));
        let ch = chevalley_multiply(g, 1, &s1);
        assert_eq!(ch, vec![(s01, 2)]);
        // eps_{s_i} * eps_e = eps_{s_i}
        for i in 0..2 {
            assert_eq!(chevalley_multiply(g, i, &g.identity()), vec![(g.simple(i).clone(), 1)]);
        }
    }

    #[test]
    fn identity_class_is_unit() {
        let t = a1(5);
        let ball = t.ball();
        for w in 0..ball.len() {
            assert_eq!(t.n(0, w, w), Some(BigInt::from(1)));
        }
    }

    #[test]
    fn delta_examples() {
        let t = a1(4);
        for i in 0..2 {
            assert_eq!(t.delta_shift(0, 0, 0, i), 0);
            assert_eq!(t.bkb_coefficient(0, 0, 0, i).unwrap(), BigInt::from(1));
        }
        let g = t.group();
        let ball = t.ball();
        // in G/P_0 (nodes {1}) the representatives are e, s0, s1s0, ...
        let s0 = ball.index_of(&g.from_word(&[0])).unwrap();
        let s10 = ball.index_of(&g.from_word(&[1, 0])).unwrap();
        let d = t.delta_shift(s0, s0, s10, 0);
        assert_eq!(d, t.delta_shift_by_inversions(s0, s0, s10, 0));
    }

    #[test]
    fn profile_examples() {
        let t = a1(3);
        let g = t.group();
        assert!(levi_weight_profile(g, &g.identity(), 0).is_empty());
        let p = levi_weight_profile(g, g.simple(0), 0);
        assert_eq!(p, BTreeMap::from([(-1, 1)]));
    }
}
