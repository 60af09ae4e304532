//! Affine Weyl group `W = Q^vee x W_dot`.
//!
//! An element is a pair `(h, w)` read as `t_h w`: first the finite part, then
//! the translation. The finite part is stored as an integer matrix acting on
//! fundamental-weight coordinates, together with its contragredient acting on
//! simple-coroot coordinates. Real affine roots are integer vectors on the
//! basis `alpha_0..alpha_l`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{dot_i64, identity_i64, mat_mul_i64, mat_vec_i64, quad_i64, transpose};
use crate::root_data::{AffineCoweight, AffineRootData, AffineWeight};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeylElt {
    /// Translation part in simple-coroot coordinates.
    pub translation: Vec<i64>,
    /// Finite part acting on fundamental-weight coordinates.
    pub finite: Vec<Vec<i64>>,
    /// Contragredient of `finite`, acting on simple-coroot coordinates.
    pub cofinite: Vec<Vec<i64>>,
}

impl AffineWeylElt {
    pub fn is_identity(&self) -> bool {
        self.translation.iter().all(|&x| x == 0) && self.finite == identity_i64(self.finite.len())
    }

    pub fn finite_part(&self) -> AffineWeylElt {
        AffineWeylElt { translation: vec![0; self.translation.len()], ..self.clone() }
    }

    /// Determinant of the finite part, i.e. the sign `(-1)^length`.
    pub fn sign(&self) -> i64 {
        det_i64(&self.finite)
    }
}

fn det_i64(m: &[Vec<i64>]) -> i64 {
    // Bareiss elimination; exact for integer matrices.
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else { return 0 };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    (sign * a[n - 1][n - 1]) as i64
}

/// A standard parabolic subgroup, given by its set of simple-root nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicSpec {
    pub nodes: BTreeSet<usize>,
}

impl ParabolicSpec {
    pub fn new(nodes: impl IntoIterator<Item = usize>) -> Self {
        ParabolicSpec { nodes: nodes.into_iter().collect() }
    }

    pub fn borel() -> Self {
        ParabolicSpec { nodes: BTreeSet::new() }
    }

    /// The maximal parabolic `P_i` of an affine algebra of finite rank `l`.
    pub fn maximal(i: usize, l: usize) -> Self {
        ParabolicSpec { nodes: (0..=l).filter(|&j| j != i).collect() }
    }

    pub fn contains(&self, j: usize) -> bool {
        self.nodes.contains(&j)
    }

    pub fn is_subset(&self, other: &ParabolicSpec) -> bool {
        self.nodes.is_subset(&other.nodes)
    }
}

/// Integer data of the affine Weyl group of a fixed type.
#[derive(Clone, Debug)]
pub struct AffineWeylGroup {
    pub rank: usize,
    cartan: Vec<Vec<i64>>,
    pub affine_cartan: Vec<Vec<i64>>,
    pub coroot_gram: Vec<Vec<i64>>,
    theta: Vec<i64>,
    /// Positive roots: simple-root coordinates.
    roots: Vec<Vec<i64>>,
    /// Positive roots: fundamental-weight coordinates.
    roots_fund: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    lookup: HashMap<Vec<i64>, usize>,
    gens: Vec<AffineWeylElt>,
}

impl AffineWeylGroup {
    pub fn new<T: Scalar>(data: &AffineRootData<T>) -> Self {
        let f = &data.finite;
        let l = f.rank;
        let roots_fund = f.root_fund.clone();
        let lookup = roots_fund.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();
        let mut g = AffineWeylGroup {
            rank: l,
            cartan: f.cartan.clone(),
            affine_cartan: data.affine_cartan.clone(),
            coroot_gram: f.coroot_gram.clone(),
            theta: f.highest_root.clone(),
            roots: f.positive_roots.clone(),
            roots_fund,
            coroots: f.coroots.clone(),
            lookup,
            gens: Vec::new(),
        };
        let theta_idx = g.roots.len() - 1;
        let mut gens = Vec::with_capacity(l + 1);
        // s_0 = t_{theta^vee} s_theta
        let s_theta = g.finite_reflection(theta_idx);
        gens.push(AffineWeylElt { translation: f.highest_coroot.clone(), ..s_theta });
        for i in 0..l {
            let idx = g.roots.iter().position(|r| r.iter().enumerate().all(|(k, &x)| x == i64::from(k == i))).unwrap();
            gens.push(g.finite_reflection(idx));
        }
        g.gens = gens;
        g
    }

    pub fn num_nodes(&self) -> usize {
        self.rank + 1
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    /// Finite reflection in positive root `idx`.
    fn finite_reflection(&self, idx: usize) -> AffineWeylElt {
        let l = self.rank;
        let f = &self.roots_fund[idx];
        let x = &self.coroots[idx];
        let mut m = identity_i64(l);
        let mut mc = identity_i64(l);
        for i in 0..l {
            for j in 0..l {
                m[i][j] -= f[i] * x[j];
                mc[i][j] -= x[i] * f[j];
            }
        }
        AffineWeylElt { translation: vec![0; l], finite: m, cofinite: mc }
    }

    pub fn identity(&self) -> AffineWeylElt {
        let l = self.rank;
        AffineWeylElt { translation: vec![0; l], finite: identity_i64(l), cofinite: identity_i64(l) }
    }

    pub fn simple(&self, i: usize) -> &AffineWeylElt {
        &self.gens[i]
    }

    pub fn translation(&self, h: &[i64]) -> AffineWeylElt {
        AffineWeylElt { translation: h.to_vec(), ..self.identity() }
    }

    pub fn mul(&self, a: &AffineWeylElt, b: &AffineWeylElt) -> AffineWeylElt {
        let wh = mat_vec_i64(&a.cofinite, &b.translation);
        AffineWeylElt {
            translation: a.translation.iter().zip(&wh).map(|(x, y)| x + y).collect(),
            finite: mat_mul_i64(&a.finite, &b.finite),
            cofinite: mat_mul_i64(&a.cofinite, &b.cofinite),
        }
    }

    pub fn inverse(&self, a: &AffineWeylElt) -> AffineWeylElt {
        // finite^{-1} = cofinite^T
        let finv = transpose(&a.cofinite);
        let cinv = transpose(&a.finite);
        let h = mat_vec_i64(&cinv, &a.translation);
        AffineWeylElt { translation: h.iter().map(|x| -x).collect(), finite: finv, cofinite: cinv }
    }

    pub fn from_word(&self, word: &[usize]) -> AffineWeylElt {
        word.iter().fold(self.identity(), |acc, &i| self.mul(&acc, &self.gens[i]))
    }

    /// `||h||^2` for `h` in the coroot lattice.
    pub fn norm2(&self, h: &[i64]) -> i64 {
        quad_i64(&self.coroot_gram, h, h)
    }

    /// Length via the closed formula in terms of `(h, w)`.
    pub fn length(&self, w: &AffineWeylElt) -> usize {
        let inv_t = transpose(&w.cofinite); // finite^{-1}
        let mut total = 0i64;
        for f in &self.roots_fund {
            let p = dot_i64(&w.translation, f);
            let image = mat_vec_i64(&inv_t, f);
            let positive = self.lookup.contains_key(&image);
            total += if positive { p.abs() } else { (p - 1).abs() };
        }
        total as usize
    }

    /// Fundamental-weight coordinates and `delta` coefficient of a real affine
    /// root given on `alpha_0..alpha_l`.
    fn split_root(&self, m: &[i64]) -> (Vec<i64>, i64) {
        let n = m[0];
        let c: Vec<i64> = (0..self.rank).map(|k| m[k + 1] - n * self.theta[k]).collect();
        (mat_vec_i64(&self.cartan, &c), n)
    }

    fn join_root(&self, fund: &[i64], n: i64) -> Vec<i64> {
        let (idx, pos) = self.classify(fund).expect("not a finite root");
        let sgn = if pos { 1 } else { -1 };
        let mut out = vec![n];
        for k in 0..self.rank {
            out.push(sgn * self.roots[idx][k] + n * self.theta[k]);
        }
        out
    }

    fn classify(&self, fund: &[i64]) -> Option<(usize, bool)> {
        if let Some(&i) = self.lookup.get(fund) {
            return Some((i, true));
        }
        let neg: Vec<i64> = fund.iter().map(|x| -x).collect();
        self.lookup.get(&neg).map(|&i| (i, false))
    }

    /// `w(beta)` for a real affine root in `alpha_0..alpha_l` coordinates.
    pub fn act_on_root(&self, w: &AffineWeylElt, beta: &[i64]) -> Vec<i64> {
        let (f, n) = self.split_root(beta);
        let wf = mat_vec_i64(&w.finite, &f);
        let n2 = n - dot_i64(&w.translation, &wf);
        self.join_root(&wf, n2)
    }

    pub fn is_positive_root(beta: &[i64]) -> bool {
        beta.iter().all(|&x| x >= 0) && beta.iter().any(|&x| x > 0)
    }

    /// Simple reflection on root coordinates via the affine Cartan matrix.
    pub fn reflect_root(&self, i: usize, beta: &[i64]) -> Vec<i64> {
        let p: i64 = (0..beta.len()).map(|j| self.affine_cartan[i][j] * beta[j]).sum();
        let mut out = beta.to_vec();
        out[i] -= p;
        out
    }

    pub fn simple_root_coords(&self, i: usize) -> Vec<i64> {
        (0..=self.rank).map(|k| i64::from(k == i)).collect()
    }

    /// Whether `l(w s_i) < l(w)`, i.e. `w(alpha_i) < 0`.
    pub fn is_right_descent(&self, w: &AffineWeylElt, i: usize) -> bool {
        !Self::is_positive_root(&self.act_on_root(w, &self.simple_root_coords(i)))
    }

    /// Whether `l(s_i w) < l(w)`, i.e. `w^{-1}(alpha_i) < 0`.
    pub fn is_left_descent(&self, w: &AffineWeylElt, i: usize) -> bool {
        let winv = self.inverse(w);
        self.is_right_descent(&winv, i)
    }

    /// Lexicographically first reduced word, found by greedy left descents.
    pub fn reduced_word(&self, w: &AffineWeylElt) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        'outer: while !cur.is_identity() {
            for i in 0..=self.rank {
                if self.is_left_descent(&cur, i) {
                    word.push(i);
                    cur = self.mul(&self.gens[i], &cur);
                    continue 'outer;
                }
            }
            unreachable!("non-identity element without a left descent");
        }
        word
    }

    /// Bruhat order by greedy subword matching along a reduced word of `v`.
    pub fn bruhat_leq(&self, u: &AffineWeylElt, v: &AffineWeylElt) -> bool {
        let mut cur = u.clone();
        for i in self.reduced_word(v) {
            if self.is_left_descent(&cur, i) {
                cur = self.mul(&self.gens[i], &cur);
            }
        }
        cur.is_identity()
    }

    /// Reflection in the positive real root `beta` (`alpha_0..alpha_l` coordinates):
    /// `s_{a + n delta} = t_{-n a^vee} s_a`.
    pub fn root_reflection(&self, beta: &[i64]) -> AffineWeylElt {
        let (f, n) = self.split_root(beta);
        let (idx, pos) = self.classify(&f).expect("real root");
        let s = self.finite_reflection(idx);
        let sgn = if pos { 1 } else { -1 };
        let h: Vec<i64> = self.coroots[idx].iter().map(|&x| -n * sgn * x).collect();
        AffineWeylElt { translation: h, ..s }
    }

    /// Coroot `beta^vee` of a real affine root on `alpha_0^vee..alpha_l^vee`.
    pub fn coroot_of(&self, beta: &[i64]) -> Vec<i64> {
        let (f, n) = self.split_root(beta);
        let (idx, pos) = self.classify(&f).expect("real root");
        let sgn = if pos { 1 } else { -1 };
        let x = &self.coroots[idx];
        // beta^vee = a^vee + (2n / (a, a)) c with (a, a) = 2 / ||a^vee||^2 * 2
        let cn2 = self.norm2(x); // = 4 / (a, a)
        assert_eq!((n * cn2) % 2, 0);
        let m0 = n * cn2 / 2;
        // c = alpha_0^vee + theta^vee
        let theta_v = self.theta_coroot();
        let mut out = vec![m0];
        for k in 0..self.rank {
            out.push(sgn * x[k] + m0 * theta_v[k]);
        }
        out
    }

    /// Positive finite roots in simple-root coordinates.
    pub fn finite_roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    /// Positive finite roots in fundamental-weight coordinates.
    pub fn finite_roots_fund(&self) -> &[Vec<i64>] {
        &self.roots_fund
    }

    pub fn highest_root(&self) -> &[i64] {
        &self.theta
    }

    fn theta_coroot(&self) -> Vec<i64> {
        self.coroots[self.roots.len() - 1].clone()
    }

    /// Inversion set `w^{-1} Phi^+ cap Phi^-`, read off a reduced word.
    pub fn inversion_set(&self, w: &AffineWeylElt) -> Vec<Vec<i64>> {
        let word = self.reduced_word(w);
        let k = word.len();
        (0..k)
            .map(|j| {
                let mut beta = self.simple_root_coords(word[j]);
                for &a in &word[j + 1..] {
                    beta = self.reflect_root(a, &beta);
                }
                beta.iter().map(|x| -x).collect()
            })
            .collect()
    }

    pub fn act_on_weight<T: Scalar>(&self, w: &AffineWeylElt, lam: &AffineWeight<T>) -> AffineWeight<T> {
        let l = self.rank;
        let f: Vec<T> = (0..l)
            .map(|i| (0..l).fold(T::zero(), |acc, j| acc + T::from_int(w.finite[i][j]) * lam.dot[j].clone()))
            .collect();
        let nu_h = mat_vec_i64(&self.coroot_gram, &w.translation);
        let pair: T = f.iter().zip(&w.translation).fold(T::zero(), |acc, (a, &h)| acc + a.clone() * T::from_int(h));
        let hh = T::from_int(self.norm2(&w.translation));
        let dot = f.iter().zip(&nu_h).map(|(a, &n)| a.clone() + lam.level.clone() * T::from_int(n)).collect();
        let delta = lam.delta.clone() - pair - lam.level.clone() * hh / T::from_int(2);
        AffineWeight { dot, level: lam.level.clone(), delta }
    }

    pub fn act_on_coweight<T: Scalar>(&self, w: &AffineWeylElt, tau: &AffineCoweight<T>) -> AffineCoweight<T> {
        let l = self.rank;
        let x: Vec<T> = (0..l)
            .map(|i| (0..l).fold(T::zero(), |acc, j| acc + T::from_int(w.cofinite[i][j]) * tau.dot[j].clone()))
            .collect();
        let gh = mat_vec_i64(&self.coroot_gram, &w.translation);
        let xh = x.iter().zip(&gh).fold(T::zero(), |acc, (a, &g)| acc + a.clone() * T::from_int(g));
        let hh = T::from_int(self.norm2(&w.translation));
        let dot = x.iter().zip(&w.translation).map(|(a, &h)| a.clone() + tau.d.clone() * T::from_int(h)).collect();
        let c = tau.c.clone() - xh - tau.d.clone() * hh / T::from_int(2);
        AffineCoweight { dot, d: tau.d.clone(), c }
    }

    /// `w in W^P`, certified by `w(alpha_j) > 0` for all `j` in `P`.
    pub fn is_min_rep(&self, w: &AffineWeylElt, p: &ParabolicSpec) -> bool {
        p.nodes.iter().all(|&j| !self.is_right_descent(w, j))
    }

    pub fn in_parabolic(&self, w: &AffineWeylElt, p: &ParabolicSpec) -> bool {
        self.reduced_word(w).iter().all(|i| p.contains(*i))
    }

    /// All `w` in `W^P` with `l(w) <= max_len`, sorted by length then reduced word.
    ///
    /// The set is closed under taking suffixes of reduced words, so the search
    /// extends elements on the left and never leaves `W^P`.
    pub fn enumerate_min_reps(&self, p: &ParabolicSpec, max_len: usize) -> Vec<AffineWeylElt> {
        let mut out = vec![self.identity()];
        let mut layer = vec![self.identity()];
        for len in 1..=max_len {
            let mut next: BTreeSet<(Vec<usize>, AffineWeylElt)> = BTreeSet::new();
            for w in &layer {
                for i in 0..=self.rank {
                    if self.is_left_descent(w, i) {
                        continue;
                    }
                    let x = self.mul(&self.gens[i], w);
                    if self.is_min_rep(&x, p) {
                        debug_assert_eq!(self.length(&x), len);
                        next.insert((self.reduced_word(&x), x));
                    }
                }
            }
            layer = next.into_iter().map(|(_, x)| x).collect();
            out.extend(layer.iter().cloned());
        }
        out
    }

    /// Minimal representative of `w W_Q`.
    pub fn min_coset_rep(&self, w: &AffineWeylElt, q: &ParabolicSpec) -> AffineWeylElt {
        let mut cur = w.clone();
        'outer: loop {
            for &j in &q.nodes {
                if self.is_right_descent(&cur, j) {
                    cur = self.mul(&cur, &self.gens[j]);
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// Factorises `w in W^P` as `w_bar * w_tilde` with `w_bar in W^Q` and
    /// `w_tilde in W_Q` minimal in `w_tilde W_P`.
    pub fn coset_factorize(
        &self,
        w: &AffineWeylElt,
        p: &ParabolicSpec,
        q: &ParabolicSpec,
    ) -> Result<(AffineWeylElt, AffineWeylElt)> {
        if !p.is_subset(q) {
            return Err(Error::InvalidInput("coset factorisation needs P contained in Q".into()));
        }
        if !self.is_min_rep(w, p) {
            return Err(Error::NotMinimal(self.encode(w)));
        }
        let bar = self.min_coset_rep(w, q);
        let tilde = self.mul(&self.inverse(&bar), w);
        debug_assert!(self.in_parabolic(&tilde, q));
        debug_assert!(self.is_min_rep(&tilde, p));
        if self.length(&bar) + self.length(&tilde) != self.length(w) {
            return Err(Error::Internal("coset factorisation lengths do not add".into()));
        }
        Ok((bar, tilde))
    }

    /// Canonical text encoding: comma-separated reduced word, `e` for identity.
    pub fn encode(&self, w: &AffineWeylElt) -> String {
        format_word(&self.reduced_word(w))
    }

    pub fn decode(&self, s: &str) -> Result<AffineWeylElt> {
        let word = parse_word(s, self.rank)?;
        let w = self.from_word(&word);
        Ok(w)
    }

    /// All elements of length at most `max_len`.
    pub fn ball(&self, max_len: usize) -> Ball {
        Ball::new(self, max_len)
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        "e".to_string()
    } else {
        word.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let i: usize = t.trim().parse().map_err(|_| Error::Parse(format!("bad word letter `{t}`")))?;
            if i > rank {
                return Err(Error::Parse(format!("letter {i} exceeds rank {rank}")));
            }
            Ok(i)
        })
        .collect()
}

/// The set of elements of length at most `max_len`, indexed in the order
/// (length, reduced word), with multiplication tables by simple reflections.
#[derive(Clone, Debug)]
pub struct Ball {
    pub max_len: usize,
    pub elements: Vec<AffineWeylElt>,
    pub lengths: Vec<usize>,
    pub words: Vec<Vec<usize>>,
    /// `right[x][i]` is the index of `x s_i` if it lies in the ball.
    pub right: Vec<Vec<Option<usize>>>,
    /// `left[x][i]` is the index of `s_i x` if it lies in the ball.
    pub left: Vec<Vec<Option<usize>>>,
    index: HashMap<AffineWeylElt, usize>,
    /// Start offset of each length shell in `elements`.
    pub shell_start: Vec<usize>,
}

impl Ball {
    pub fn new(g: &AffineWeylGroup, max_len: usize) -> Self {
        let mut shells: Vec<Vec<AffineWeylElt>> = vec![vec![g.identity()]];
        let mut seen: std::collections::HashSet<AffineWeylElt> = std::collections::HashSet::new();
        seen.insert(g.identity());
        for _ in 1..=max_len {
            let mut next = Vec::new();
            for w in shells.last().unwrap() {
                for i in 0..=g.rank {
                    if g.is_right_descent(w, i) {
                        continue;
                    }
                    let x = g.mul(w, g.simple(i));
                    if seen.insert(x.clone()) {
                        next.push(x);
                    }
                }
            }
            shells.push(next);
        }
        let mut elements = Vec::new();
        let mut lengths = Vec::new();
        let mut words = Vec::new();
        let mut shell_start = Vec::new();
        for (len, shell) in shells.into_iter().enumerate() {
            shell_start.push(elements.len());
            let mut tagged: Vec<(Vec<usize>, AffineWeylElt)> =
                shell.into_iter().map(|w| (g.reduced_word(&w), w)).collect();
            tagged.sort();
            for (word, w) in tagged {
                debug_assert_eq!(word.len(), len);
                elements.push(w);
                lengths.push(len);
                words.push(word);
            }
        }
        shell_start.push(elements.len());
        let index: HashMap<AffineWeylElt, usize> =
            elements.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let right = elements
            .iter()
            .map(|w| (0..=g.rank).map(|i| index.get(&g.mul(w, g.simple(i))).copied()).collect())
            .collect();
        let left = elements
            .iter()
            .map(|w| (0..=g.rank).map(|i| index.get(&g.mul(g.simple(i), w)).copied()).collect())
            .collect();
        Ball { max_len, elements, lengths, words, right, left, index, shell_start }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn index_of(&self, w: &AffineWeylElt) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// Indices of elements with the given length.
    pub fn shell(&self, len: usize) -> std::ops::Range<usize> {
        if len > self.max_len {
            return 0..0;
        }
        self.shell_start[len]..self.shell_start[len + 1]
    }
}

impl fmt::Display for AffineWeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{:?}{:?}", self.translation, self.finite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::CartanType;
    use crate::scalar::big;
    use crate::{Coweight, RootData, Weight};

    fn a1() -> (RootData, AffineWeylGroup) {
        let d = RootData::new(CartanType::A(1));
        let g = AffineWeylGroup::new(&d);
        (d, g)
    }

    #[test]
    fn generators_are_involutions() {
        for t in [CartanType::A(1), CartanType::A(2), CartanType::C(2), CartanType::G2] {
            let d = RootData::new(t);
            let g = AffineWeylGroup::new(&d);
            for i in 0..=g.rank {
                let s = g.simple(i);
                assert!(g.mul(s, s).is_identity());
                assert_eq!(g.length(s), 1, "{t} s_{i}");
                assert_eq!(g.inverse(s), *s);
            }
        }
    }

    #[test]
    fn simple_reflections_match_weight_formula() {
        for t in [CartanType::A(2), CartanType::B(3), CartanType::G2] {
            let d = RootData::new(t);
            let g = AffineWeylGroup::new(&d);
            let lam = Weight::new((0..g.rank).map(|k| big(k as i64 + 2)).collect(), big(7), big(-3));
            for i in 0..=g.rank {
                let expect = lam.sub(&d.simple_root(i).scale(&d.pairing(&lam, &d.simple_coroot(i))));
                assert_eq!(g.act_on_weight(g.simple(i), &lam), expect, "{t} s_{i}");
                let tau = Coweight::new((0..g.rank).map(|k| big(1 - k as i64)).collect(), big(2), big(5));
                let expect = tau.add(&d.simple_coroot(i).scale(&-d.pairing(&d.simple_root(i), &tau)));
                assert_eq!(g.act_on_coweight(g.simple(i), &tau), expect, "{t} s_{i}");
            }
        }
    }

    #[test]
    fn a1_examples() {
        let (d, g) = a1();
        let t = g.translation(&[1]);
        assert_eq!(g.length(&t), 2);
        assert_eq!(g.reduced_word(&t), vec![0, 1]);
        assert_eq!(g.from_word(&[0, 1]), t);
        // t_{alpha^vee} s_alpha = s_0
        let s0 = g.mul(&t, g.simple(1));
        assert_eq!(&s0, g.simple(0));
        assert_eq!(g.length(&s0), 1);
        // t . d = alpha^vee + d - c
        let img = g.act_on_coweight(&t, &d.d());
        assert_eq!(img, Coweight::new(vec![big(1)], big(1), big(-1)));
        // s_0 Lambda = Lambda - alpha_0
        let img = g.act_on_weight(g.simple(0), &d.lambda());
        assert_eq!(img, d.lambda().sub(&d.simple_root(0)));
        // delta fixed, c fixed
        assert_eq!(g.act_on_weight(&t, &d.delta()), d.delta());
        assert_eq!(g.act_on_coweight(&t, &d.c()), d.c());
    }

    #[test]
    fn bruhat_a1_examples() {
        let (_, g) = a1();
        let e = g.identity();
        let s0 = g.from_word(&[0]);
        let s1 = g.from_word(&[1]);
        let s01 = g.from_word(&[0, 1]);
        let s10 = g.from_word(&[1, 0]);
        assert!(g.bruhat_leq(&e, &s01));
        assert!(g.bruhat_leq(&s0, &s01));
        assert!(g.bruhat_leq(&s1, &s01));
        assert!(!g.bruhat_leq(&s01, &s10));
        assert!(!g.bruhat_leq(&s01, &s0));
    }

    #[test]
    fn min_reps_a1() {
        let (_, g) = a1();
        // nodes {1}, i.e. the maximal parabolic P_0
        let p = ParabolicSpec::new([1]);
        assert_eq!(p, ParabolicSpec::maximal(0, 1));
        let reps: Vec<String> = g.enumerate_min_reps(&p, 2).iter().map(|w| g.encode(w)).collect();
        assert_eq!(reps, vec!["e", "0", "1,0"]);
        let p = ParabolicSpec::new([0]);
        let reps: Vec<String> = g.enumerate_min_reps(&p, 2).iter().map(|w| g.encode(w)).collect();
        assert_eq!(reps, vec!["e", "1", "0,1"]);
        assert_eq!(g.enumerate_min_reps(&p, 0).len(), 1);
    }

    #[test]
    fn inversion_set_small() {
        let (_, g) = a1();
        assert!(g.inversion_set(&g.identity()).is_empty());
        assert_eq!(g.inversion_set(g.simple(1)), vec![vec![0, -1]]);
        // s_0 s_1: { -s_1 alpha_0, -alpha_1 } = { -(alpha_0 + 2 alpha_1), -alpha_1 }
        let w = g.from_word(&[0, 1]);
        assert_eq!(g.inversion_set(&w), vec![vec![-1, -2], vec![0, -1]]);
    }

    #[test]
    fn root_reflections() {
        for t in [CartanType::A(2), CartanType::C(2), CartanType::G2] {
            let d = RootData::new(t);
            let g = AffineWeylGroup::new(&d);
            let ball = g.ball(3);
            for w in &ball.elements {
                for i in 0..=g.rank {
                    let beta = g.act_on_root(w, &g.simple_root_coords(i));
                    let beta = if AffineWeylGroup::is_positive_root(&beta) { beta } else { beta.iter().map(|x| -x).collect() };
                    let s = g.root_reflection(&beta);
                    let expect = g.mul(&g.mul(w, g.simple(i)), &g.inverse(w));
                    assert_eq!(s, expect, "{t}");
                    let neg: Vec<i64> = beta.iter().map(|x| -x).collect();
                    assert_eq!(g.act_on_root(&s, &beta), neg);
                    // <beta, beta^vee> = 2
                    let cv = g.coroot_of(&beta);
                    let p: i64 = (0..=g.rank).map(|a| (0..=g.rank).map(|b| cv[a] * g.affine_cartan[a][b] * beta[b]).sum::<i64>()).sum();
                    assert_eq!(p, 2);
                }
            }
        }
    }

    #[test]
    fn coset_factorize_examples() {
        let (_, g) = a1();
        let b = ParabolicSpec::borel();
        let q = ParabolicSpec::new([1]);
        let e = g.identity();
        assert_eq!(g.coset_factorize(&e, &b, &q).unwrap(), (e.clone(), e.clone()));
        let w = g.from_word(&[1, 0]);
        let (bar, tilde) = g.coset_factorize(&w, &b, &q).unwrap();
        assert_eq!(g.mul(&bar, &tilde), w);
        assert!(g.is_min_rep(&bar, &q));
        assert!(tilde.is_identity() || tilde == *g.simple(1));
        let s1 = g.simple(1).clone();
        assert!(g.coset_factorize(&s1, &q, &q).is_err());
    }

    #[test]
    fn encode_decode_round_trip() {
        let d = RootData::new(CartanType::C(2));
        let g = AffineWeylGroup::new(&d);
        for w in &g.ball(4).elements {
            assert_eq!(&g.decode(&g.encode(w)).unwrap(), w);
        }
        assert!(g.decode("0,5").is_err());
    }
}
