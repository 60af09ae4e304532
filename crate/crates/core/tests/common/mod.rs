//! Weight constructors and the integral grid shared by the integration tests.
#![allow(dead_code)]

use kmcone::scalar::Scalar;
use kmcone::{Rat, RootData, Weight};

/// `sum a_i Lambda_i + b delta`.
pub fn weight(data: &RootData, labels: &[i64], b: i64) -> Weight {
    let mut acc = data.delta().scale(&Rat::from_int(b));
    for (i, &a) in labels.iter().enumerate() {
        acc = acc.add(&data.fundamental_weight(i).scale(&Rat::from_int(a)));
    }
    acc
}

/// Dominant integral labels of the given level.
pub fn dominant_of_level(data: &RootData, level: i64) -> Vec<Vec<i64>> {
    fn rec(data: &RootData, i: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let c = data.comarks[i];
        for a in 0..=left / c {
            cur[i] = a;
            rec(data, i + 1, left - a * c, cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    rec(data, 0, level, &mut vec![0; data.rank() + 1], &mut out);
    out
}

/// Height of the finite part: the sum of the labels on nodes `1..=l`.
pub fn dot_height(labels: &[i64]) -> i64 {
    labels[1..].iter().sum()
}

/// Integral triples `(lambda1, lambda2, mu_bar)` as labels: levels of the
/// `lambda`s in `1..=max_level`, `mu_bar` of the summed level, every finite
/// part of height at most `max_height`, and `mu_bar - lambda1 - lambda2` in
/// the finite root lattice modulo `delta` when `root_lattice` is set.
pub fn grid(data: &RootData, max_level: i64, max_height: i64, root_lattice: bool) -> Vec<[Vec<i64>; 3]> {
    let mut out = Vec::new();
    for l1 in 1..=max_level {
        for l2 in 1..=max_level {
            for a in dominant_of_level(data, l1) {
                for b in dominant_of_level(data, l2) {
                    for m in dominant_of_level(data, l1 + l2) {
                        if [&a, &b, &m].iter().any(|x| dot_height(x) > max_height) {
                            continue;
                        }
                        if root_lattice {
                            let diff = weight(data, &m, 0).sub(&weight(data, &a, 0)).sub(&weight(data, &b, 0));
                            if !data.finite.in_root_lattice(&diff.dot) {
                                continue;
                            }
                        }
                        out.push([a.clone(), b.clone(), m]);
                    }
                }
            }
        }
    }
    out
}
