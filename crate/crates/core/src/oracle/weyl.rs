//! Brute-force Weyl group oracles.

use std::collections::{BTreeSet, HashMap, HashSet};

use crate::weyl::{AffineWeylElt, AffineWeylGroup, ParabolicSpec};

/// Word distance from the identity for every element reachable with at most
/// `radius` generators, by plain breadth-first search over words.
pub fn word_distances(g: &AffineWeylGroup, radius: usize) -> HashMap<AffineWeylElt, usize> {
    let mut dist = HashMap::new();
    dist.insert(g.identity(), 0);
    let mut frontier = vec![g.identity()];
    for r in 1..=radius {
        let mut next = Vec::new();
        for w in &frontier {
            for i in 0..=g.rank {
                let x = g.mul(w, g.simple(i));
                if !dist.contains_key(&x) {
                    dist.insert(x.clone(), r);
                    next.push(x);
                }
            }
        }
        frontier = next;
    }
    dist
}

/// All products of subwords of `word`; for a reduced word this is the lower
/// Bruhat interval.
pub fn subword_products(g: &AffineWeylGroup, word: &[usize]) -> HashSet<AffineWeylElt> {
    let mut acc: HashSet<AffineWeylElt> = HashSet::new();
    acc.insert(g.identity());
    for &i in word {
        let extended: Vec<AffineWeylElt> = acc.iter().map(|x| g.mul(x, g.simple(i))).collect();
        acc.extend(extended);
    }
    acc
}

/// `w^{-1} Phi^+ cap Phi^-` by scanning positive real roots of bounded
/// `delta`-degree and applying `w^{-1}` directly.
pub fn inversion_set_by_filter(g: &AffineWeylGroup, w: &AffineWeylElt) -> BTreeSet<Vec<i64>> {
    let winv = g.inverse(w);
    // w^{-1}(a + n delta) has delta-degree n - <w'a, h'>, which must be <= 0.
    let bound: i64 = g
        .finite_roots_fund()
        .iter()
        .map(|f| f.iter().zip(&winv.translation).map(|(a, b)| a * b).sum::<i64>().abs())
        .max()
        .unwrap_or(0);
    let mut out = BTreeSet::new();
    for n in 0..=bound {
        for beta in positive_real_roots_at_degree(g, n) {
            let img = g.act_on_root(&winv, &beta);
            if img.iter().all(|&x| x <= 0) {
                out.insert(img);
            }
        }
    }
    out
}

/// Positive real roots `a + n delta` with the given `n`, on `alpha_0..alpha_l`.
pub fn positive_real_roots_at_degree(g: &AffineWeylGroup, n: i64) -> Vec<Vec<i64>> {
    let finite = g.finite_roots();
    let theta = g.highest_root();
    let mut out = Vec::new();
    for (c, sign) in finite.iter().flat_map(|c| [(c, 1i64), (c, -1i64)]) {
        if n == 0 && sign < 0 {
            continue;
        }
        let mut m = vec![n];
        m.extend(c.iter().zip(theta).map(|(&x, &t)| sign * x + n * t));
        out.push(m);
    }
    out
}

/// `W^P` within the ball, by filtering every element with the right-descent
/// criterion on its length.
pub fn min_reps_by_filter(g: &AffineWeylGroup, p: &ParabolicSpec, max_len: usize) -> BTreeSet<Vec<usize>> {
    let dist = word_distances(g, max_len);
    dist.keys()
        .filter(|w| p.nodes.iter().all(|&j| g.length(&g.mul(w, g.simple(j))) > g.length(w)))
        .map(|w| g.reduced_word(w))
        .collect()
}
