mod common;

use common::{grid, weight};
use kmcone::cone::{enumerate_inequalities, lvsnorm_constants, phi_index, phi_index_direct, Cone, ConePoint};
use kmcone::scalar::Scalar;
use kmcone::{AffineWeylGroup, CartanType, ParabolicSpec, Rat, RootData, StructureTable};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn point(data: &RootData, t: &[Vec<i64>; 3]) -> ConePoint {
    ConePoint::new(weight(data, &t[0], 0), weight(data, &t[1], 0), weight(data, &t[2], 0))
}

/// `sum_{alpha > 0} |<h, alpha>|` for `h` in coroot coordinates.
fn root_norm(g: &AffineWeylGroup, h: &[i64]) -> i64 {
    g.finite_roots_fund().iter().map(|f| h.iter().zip(f).map(|(a, b)| a * b).sum::<i64>().abs()).sum()
}

#[test]
fn lvsnorm_ray_minimum_matches_lattice_scan() {
    for t in [CartanType::A(1), CartanType::A(2), CartanType::C(2), CartanType::G2] {
        let d = RootData::new(t);
        let g = AffineWeylGroup::new(&d);
        let (k2, n) = lvsnorm_constants(&d);
        assert_eq!(n, d.finite.num_positive_roots());
        let r = 6i64;
        let l = d.rank();
        let mut best: Option<Rat> = None;
        let mut h = vec![-r; l];
        loop {
            if h.iter().any(|&x| x != 0) {
                let s = root_norm(&g, &h);
                let v = Rat::from_int(s * s) / Rat::from_int(g.norm2(&h));
                best = Some(best.map_or(v.clone(), |b: Rat| b.min(v)));
            }
            let mut k = 0;
            while k < l && h[k] == r {
                h[k] = -r;
                k += 1;
            }
            if k == l {
                break;
            }
            h[k] += 1;
        }
        assert_eq!(best.unwrap(), k2, "{t}");
    }
    let a1 = RootData::new(CartanType::A(1));
    assert_eq!(lvsnorm_constants(&a1), (Rat::from_int(2), 1));
    assert_eq!(lvsnorm_constants(&RootData::new(CartanType::A(2))).1, 3);
}

#[test]
fn lvsnorm_sandwich_on_balls() {
    for t in [CartanType::A(1), CartanType::A(2), CartanType::C(2)] {
        let d = RootData::new(t);
        let g = AffineWeylGroup::new(&d);
        let (k2, n) = lvsnorm_constants(&d);
        let n = n as i64;
        for w in &g.ball(8).elements {
            let len = g.length(w) as i64;
            let hh = Rat::from_int(g.norm2(&w.translation));
            let lo = Rat::from_int((len + n) * (len + n));
            assert!(lo >= k2.clone() * hh.clone(), "{t} {w}");
            if len > n {
                assert!(Rat::from_int((len - n) * (len - n)) <= Rat::from_int(2 * n * n) * hh, "{t} {w}");
            }
        }
    }
}

/// Independent enumeration: W^{P_i} triples from the coset enumeration,
/// constants by element lookup and the shift from inversion sets.
#[test]
fn enumeration_matches_direct_scan() {
    for (t, len) in [(CartanType::A(1), 6), (CartanType::A(2), 4)] {
        let d = RootData::new(t);
        let table = StructureTable::compute(&d, len).unwrap();
        let g = table.group();
        let ball = table.ball();
        let mut want = Vec::new();
        for i in 0..=d.rank() {
            let reps = g.enumerate_min_reps(&ParabolicSpec::maximal(i, d.rank()), len);
            for u1 in &reps {
                for u2 in &reps {
                    for v in &reps {
                        if g.length(v) != g.length(u1) + g.length(u2) {
                            continue;
                        }
                        let n = table.n_elt(u1, u2, v).unwrap();
                        let idx = [u1, u2, v].map(|w| ball.index_of(w).unwrap());
                        if n == BigInt::from(1) && table.delta_shift_by_inversions(idx[0], idx[1], idx[2], i) == 0 {
                            want.push((i, [u1, u2, v].map(|w| g.reduced_word(w))));
                        }
                    }
                }
            }
        }
        let mut got: Vec<_> = enumerate_inequalities(&table).into_iter().map(|x| (x.i, x.words)).collect();
        want.sort();
        got.sort();
        assert_eq!(got, want, "{t}");
    }
}

#[test]
fn a1_length_four_list() {
    let d = RootData::new(CartanType::A(1));
    let cone = Cone::new(&d, 4).unwrap();
    let labels: Vec<String> = cone.indices.iter().map(|x| x.label()).collect();
    assert_eq!(labels[0], "(e; e; e; 0)");
    // Up to length 4 only the identity families (e, w, w, i) and their swaps occur.
    let want = [
        "(e; e; e; 0)", "(e; e; e; 1)", "(e; 0; 0; 0)", "(0; e; 0; 0)", "(e; 1; 1; 1)", "(1; e; 1; 1)",
        "(e; 1,0; 1,0; 0)", "(1,0; e; 1,0; 0)", "(e; 0,1; 0,1; 1)", "(0,1; e; 0,1; 1)",
        "(e; 0,1,0; 0,1,0; 0)", "(0,1,0; e; 0,1,0; 0)", "(e; 1,0,1; 1,0,1; 1)", "(1,0,1; e; 1,0,1; 1)",
        "(e; 1,0,1,0; 1,0,1,0; 0)", "(1,0,1,0; e; 1,0,1,0; 0)", "(e; 0,1,0,1; 0,1,0,1; 1)",
        "(0,1,0,1; e; 0,1,0,1; 1)",
    ];
    assert_eq!(labels, want);
}

#[test]
fn routes_agree_and_levels_are_nonnegative() {
    for (t, len, lvl, ht) in [
        (CartanType::A(1), 8, 3, 4),
        (CartanType::A(2), 5, 2, 2),
        (CartanType::C(2), 4, 2, 2),
        (CartanType::G2, 4, 2, 1),
    ] {
        let d = RootData::new(t);
        let g = AffineWeylGroup::new(&d);
        let cone = Cone::new(&d, len).unwrap();
        let pts: Vec<ConePoint> = grid(&d, lvl, ht, false).iter().map(|x| point(&d, x)).collect();
        for idx in &cone.indices {
            assert!(!idx.q[0].is_negative() && !idx.q[1].is_negative(), "{t} {}", idx.label());
            for x in pts.iter().step_by(7) {
                assert_eq!(phi_index(&d, idx, x).unwrap(), phi_index_direct(&d, &g, idx, x).unwrap(), "{t} {}", idx.label());
            }
        }
    }
}

#[test]
fn values_at_the_basic_triple() {
    let d = RootData::new(CartanType::A(1));
    let cone = Cone::new(&d, 8).unwrap();
    for s in 1..=3 {
        let l = d.lambda().scale(&Rat::from_int(s));
        let x = ConePoint::new(l.clone(), l.clone(), l.scale(&Rat::from_int(2)));
        for idx in &cone.indices {
            let v = phi_index(&d, idx, &x).unwrap();
            assert!(!v.is_negative(), "{}", idx.label());
            if idx.is_trivial() {
                assert!(v.is_zero());
            }
        }
    }
}

#[test]
fn integrality_of_k_g_phi() {
    for (t, len, lvl, ht) in [(CartanType::A(1), 8, 3, 4), (CartanType::C(2), 4, 2, 2), (CartanType::G2, 4, 2, 2)] {
        let d = RootData::new(t);
        let k = Rat::from_int(d.k_g_dot() as i64);
        let cone = Cone::new(&d, len).unwrap();
        for x in grid(&d, lvl, ht, true) {
            let x = point(&d, &x);
            for idx in &cone.indices {
                let v = phi_index(&d, idx, &x).unwrap() * k.clone();
                assert!(v.is_integral(), "{t} {}", idx.label());
            }
        }
    }
}

#[test]
fn certificate_survives_two_more_shells() {
    let d = RootData::new(CartanType::A(1));
    let pts: Vec<ConePoint> = grid(&d, 2, 2, false).iter().map(|x| point(&d, x)).collect();
    let big = Cone::new(&d, 24).unwrap();
    for x in &pts {
        let r = big.phi(x).unwrap();
        let cap = r.certificate.length_cap;
        assert!(cap + 2 <= big.max_len(), "cap {cap}");
        for idx in big.indices.iter().filter(|idx| idx.length > cap && idx.length <= cap + 2) {
            assert!(phi_index(&d, idx, x).unwrap() > r.value);
        }
        let attained = &big.indices[r.attaining[0]];
        assert!(attained.length <= cap);
    }
}

#[test]
fn concave_and_homogeneous() {
    let d = RootData::new(CartanType::A(1));
    let cone = Cone::new(&d, 24).unwrap();
    let pts: Vec<ConePoint> = grid(&d, 1, 2, false).iter().map(|x| point(&d, x)).collect();
    let phi = |x: &ConePoint| cone.phi(x).unwrap().value;
    for x in &pts {
        assert_eq!(phi(&x.scale(&Rat::from_int(2))), phi(x) * Rat::from_int(2));
        for y in &pts {
            let sum = ConePoint::new(x.lambda1.add(&y.lambda1), x.lambda2.add(&y.lambda2), x.mu_bar.add(&y.mu_bar));
            assert!(phi(&sum) >= phi(x) + phi(y));
        }
    }
}

fn a2_cone() -> &'static Cone {
    use std::sync::OnceLock;
    static CONE: OnceLock<Cone> = OnceLock::new();
    CONE.get_or_init(|| Cone::new(&RootData::new(CartanType::A(2)), 5).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn routes_agree_on_random_points(
        a in proptest::collection::vec(0i64..4, 3),
        b in proptest::collection::vec(0i64..4, 3),
        m in proptest::collection::vec(0i64..4, 2),
        k in 0usize..10_000,
    ) {
        let cone = a2_cone();
        let d = cone.data();
        prop_assume!(a[0] > 0 || a[1] + a[2] > 0);
        prop_assume!(b[0] > 0 || b[1] + b[2] > 0);
        let l1 = weight(d, &a, 0);
        let l2 = weight(d, &b, 0);
        let level = l1.level.clone() + l2.level.clone();
        let mdot = weight(d, &[0, m[0], m[1]], 0);
        prop_assume!(mdot.level <= level);
        let mu = mdot.add(&d.lambda().scale(&(level - mdot.level.clone())));
        let x = ConePoint::new(l1, l2, mu);
        let idx = &cone.indices[k % cone.indices.len()];
        let g = cone.table.group();
        prop_assert_eq!(phi_index(d, idx, &x).unwrap(), phi_index_direct(d, g, idx, &x).unwrap());
    }
}
