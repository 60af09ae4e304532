//! Truncated characters by dividing the Weyl-Kac numerator by the
//! denominator, and tensor multiplicities by multiplying characters and
//! peeling off highest weights.
//!
//! Characters are maps `m -> mult` for the weight `lambda - sum m_i alpha_i`,
//! truncated at `m_0 <= depth`. Nothing here touches the Freudenthal tables.

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::oracle::weyl::positive_real_roots_at_degree;
use crate::scalar::{sqrt_upper, Scalar};
use crate::weyl::AffineWeylGroup;
use crate::{Rat, RootData, Weight};

pub type Character = BTreeMap<Vec<i64>, BigInt>;

fn weight_of_labels(data: &RootData, labels: &[i64]) -> Weight {
    let mut acc = Weight::zero(data.rank());
    for (i, &a) in labels.iter().enumerate() {
        acc = acc.add(&data.fundamental_weight(i).scale(&Rat::from_int(a)));
    }
    acc
}

fn int_coords(data: &RootData, w: &Weight) -> Vec<i64> {
    data.affine_root_coords(w)
        .expect("level zero")
        .iter()
        .map(|x| x.to_i64_exact().expect("integral root coordinates"))
        .collect()
}

/// Points `m >= 0` with `m_0 <= depth` and `|lambda - beta|^2 <= |lambda|^2`.
fn region(data: &RootData, lambda: &Weight, depth: i64) -> Vec<Vec<i64>> {
    let l = data.rank();
    let theta = &data.finite.highest_root;
    let centre = data.finite.to_root_coords(&lambda.dot);
    let lam2 = data.finite.weight_form(&lambda.dot, &lambda.dot);
    let mut out = Vec::new();
    for m0 in 0..=depth {
        let r2 = lam2.clone() + Rat::from_int(2 * m0) * lambda.level.clone();
        let mut ranges = Vec::new();
        for i in 0..l {
            let cw = data.finite.fundamental_coweight(i);
            let n2 = data.finite.coweight_form(&cw, &cw);
            let rad = sqrt_upper(&(r2.clone() * n2));
            let c = centre[i].clone() + Rat::from_int(m0 * theta[i]);
            let lo = (c.clone() - rad.clone()).ceil().to_integer().to_i64().unwrap().max(0);
            let hi = (c + rad).floor().to_integer().to_i64().unwrap();
            ranges.push((lo, hi));
        }
        let mut pts: Vec<Vec<i64>> = vec![vec![m0]];
        for (lo, hi) in ranges {
            pts = pts
                .into_iter()
                .flat_map(|p| {
                    (lo..=hi).map(move |x| {
                        let mut q = p.clone();
                        q.push(x);
                        q
                    })
                })
                .collect();
        }
        for m in pts {
            let mr: Vec<Rat> = m.iter().map(|&x| Rat::from_int(x)).collect();
            let nu = lambda.sub(&data.weight_from_root_coords(&mr));
            if data.weight_form(&nu, &nu) <= data.weight_form(lambda, lambda) {
                out.push(m);
            }
        }
    }
    out.sort_by_key(|m| (m.iter().sum::<i64>(), m.clone()));
    out
}

/// `sum_w eps(w) e^{-(Lambda - w Lambda)}` for `Lambda = lambda + rho`,
/// truncated at `m_0 <= depth`, found by breadth-first search over `W`.
fn numerator(data: &RootData, g: &AffineWeylGroup, lambda: &Weight, depth: i64) -> Character {
    let big = lambda.add(&data.rho());
    let mut out = Character::new();
    let mut seen = HashSet::new();
    seen.insert(g.identity());
    let mut frontier = vec![g.identity()];
    while let Some(w) = frontier.pop() {
        let m = int_coords(data, &big.sub(&g.act_on_weight(&w, &big)));
        *out.entry(m).or_insert_with(BigInt::zero) += BigInt::from(w.sign());
        for i in 0..g.num_nodes() {
            let x = g.mul(&w, g.simple(i));
            if seen.contains(&x) {
                continue;
            }
            let mx = int_coords(data, &big.sub(&g.act_on_weight(&x, &big)));
            if mx[0] <= depth {
                seen.insert(x.clone());
                frontier.push(x);
            }
        }
    }
    out
}

/// `prod_{alpha > 0} (1 - e^{-alpha})^{mult alpha}`, keeping exponents `<= cap`.
fn denominator(data: &RootData, g: &AffineWeylGroup, depth: i64, cap: &[i64]) -> Character {
    let l = data.rank() as i64;
    let mut factors: Vec<(Vec<i64>, i64)> = Vec::new();
    for n in 0..=depth {
        for r in positive_real_roots_at_degree(g, n) {
            factors.push((r, 1));
        }
        if n > 0 {
            factors.push((data.marks.iter().map(|&a| a * n).collect(), l));
        }
    }
    let mut acc = Character::new();
    acc.insert(vec![0; cap.len()], BigInt::one());
    for (r, mult) in factors {
        if r.iter().zip(cap).any(|(a, c)| a > c) {
            continue;
        }
        for _ in 0..mult {
            let mut next = acc.clone();
            for (m, c) in &acc {
                let e: Vec<i64> = m.iter().zip(&r).map(|(a, b)| a + b).collect();
                if e.iter().zip(cap).all(|(a, b)| a <= b) {
                    *next.entry(e).or_insert_with(BigInt::zero) -= c;
                }
            }
            next.retain(|_, c| !c.is_zero());
            acc = next;
        }
    }
    acc
}

/// Character of `L(lambda)` for dominant integral labels, truncated at
/// `m_0 <= depth`.
pub fn weyl_kac_character(data: &RootData, labels: &[i64], depth: i64) -> Character {
    let g = AffineWeylGroup::new(data);
    let lambda = weight_of_labels(data, labels);
    let pts = region(data, &lambda, depth);
    let n = labels.len();
    let cap: Vec<i64> = (0..n).map(|i| pts.iter().map(|m| m[i]).max().unwrap_or(0)).collect();
    let num = numerator(data, &g, &lambda, depth);
    let den = denominator(data, &g, depth, &cap);
    let den_terms: Vec<(&Vec<i64>, &BigInt)> = den.iter().filter(|(m, _)| m.iter().any(|&x| x != 0)).collect();
    let mut ch = Character::new();
    for m in &pts {
        let mut v = num.get(m).cloned().unwrap_or_default();
        for (d, c) in &den_terms {
            let rest: Vec<i64> = m.iter().zip(d.iter()).map(|(a, b)| a - b).collect();
            if rest.iter().any(|&x| x < 0) {
                continue;
            }
            if let Some(x) = ch.get(&rest) {
                v -= *c * x;
            }
        }
        if !v.is_zero() {
            assert!(v.is_positive(), "negative multiplicity from the Weyl-Kac division");
            ch.insert(m.clone(), v);
        }
    }
    ch
}

/// `c_{lambda1 lambda2}^mu` for every dominant `mu` with `m_0 <= depth`,
/// keyed by the coordinates of `lambda1 + lambda2 - mu`.
pub fn tensor_by_characters(data: &RootData, l1: &[i64], l2: &[i64], depth: i64) -> Character {
    let c1 = weyl_kac_character(data, l1, depth);
    let c2 = weyl_kac_character(data, l2, depth);
    let mut rem = Character::new();
    for (a, x) in &c1 {
        for (b, y) in &c2 {
            let m: Vec<i64> = a.iter().zip(b).map(|(p, q)| p + q).collect();
            if m[0] <= depth {
                *rem.entry(m).or_insert_with(BigInt::zero) += x * y;
            }
        }
    }
    let a = &data.affine_cartan;
    let n = l1.len();
    let top: Vec<i64> = l1.iter().zip(l2).map(|(x, y)| x + y).collect();
    let mut keys: Vec<Vec<i64>> = rem.keys().cloned().collect();
    keys.sort_by_key(|m| (m.iter().sum::<i64>(), m.clone()));
    let mut out = Character::new();
    for m in keys {
        let c = rem.get(&m).cloned().unwrap_or_default();
        if c.is_zero() {
            continue;
        }
        let labels: Vec<i64> = (0..n).map(|i| top[i] - (0..n).map(|j| a[i][j] * m[j]).sum::<i64>()).collect();
        if labels.iter().any(|&x| x < 0) {
            continue;
        }
        assert!(c.is_positive(), "negative remainder at a dominant weight");
        for (k, v) in weyl_kac_character(data, &labels, depth - m[0]) {
            let e: Vec<i64> = k.iter().zip(&m).map(|(p, q)| p + q).collect();
            *rem.entry(e).or_insert_with(BigInt::zero) -= &c * v;
        }
        out.insert(m, c);
    }
    out
}
