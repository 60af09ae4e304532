use kmcone::oracle::characters::{tensor_by_characters, weyl_kac_character};
use kmcone::repmult::{levi_multiplicity, tensor_table, weight_multiplicities, Outcome};
use kmcone::scalar::Scalar;
use kmcone::{CartanType, Rat, RootData, Weight};
use num_bigint::BigInt;

fn weight(data: &RootData, labels: &[i64], b: i64) -> Weight {
    let mut acc = data.delta().scale(&Rat::from_int(b));
    for (i, &a) in labels.iter().enumerate() {
        acc = acc.add(&data.fundamental_weight(i).scale(&Rat::from_int(a)));
    }
    acc
}

/// Dominant labels of level `level` (comark-weighted sum).
fn dominant_of_level(data: &RootData, level: i64) -> Vec<Vec<i64>> {
    let n = data.rank() + 1;
    let mut out = Vec::new();
    let mut cur = vec![0i64; n];
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
    rec(data, 0, level, &mut cur, &mut out);
    out
}

#[test]
fn freudenthal_matches_weyl_kac() {
    for (t, levels, depth) in [(CartanType::A(1), 3, 6), (CartanType::A(2), 2, 3), (CartanType::C(2), 1, 3), (CartanType::G2, 1, 2)] {
        let d = RootData::new(t);
        for lvl in 0..=levels {
            for labels in dominant_of_level(&d, lvl) {
                let table = weight_multiplicities(&d, &weight(&d, &labels, 0), depth).unwrap();
                let oracle = weyl_kac_character(&d, &labels, depth);
                let got: Vec<(Vec<i64>, BigInt)> = table.entries();
                let want: Vec<(Vec<i64>, BigInt)> = oracle.into_iter().collect();
                assert_eq!(got, want, "{t} {labels:?}");
            }
        }
    }
}

#[test]
fn a1_basic_module_values() {
    let d = RootData::new(CartanType::A(1));
    let ch = weyl_kac_character(&d, &[1, 0], 4);
    assert_eq!(ch.get(&vec![1, 1]), Some(&BigInt::from(1)));
    assert_eq!(ch.get(&vec![1, 0]), Some(&BigInt::from(1)));
    let t = weight_multiplicities(&d, &weight(&d, &[1, 0], 0), 4).unwrap();
    assert_eq!(t.mult(&d, &weight(&d, &[1, 0], -1)), Outcome::Value(BigInt::from(1)));
}

fn compare_tensor(t: CartanType, max_level: i64, depth: i64) {
    let d = RootData::new(t);
    let ws: Vec<Vec<i64>> = (0..=max_level).flat_map(|l| dominant_of_level(&d, l)).collect();
    for (i, a) in ws.iter().enumerate() {
        for b in &ws[i..] {
            let table = tensor_table(&d, &weight(&d, a, 0), &weight(&d, b, 0), depth, 2).unwrap();
            assert!(table.undecided.is_empty(), "{t} {a:?} {b:?}: {:?}", table.undecided);
            let oracle = tensor_by_characters(&d, a, b, depth);
            assert_eq!(table.entries, oracle, "{t} {a:?} {b:?}");
        }
    }
}

#[test]
fn klimyk_matches_character_products_a1() {
    compare_tensor(CartanType::A(1), 3, 6);
}

#[test]
fn klimyk_matches_character_products_a2() {
    compare_tensor(CartanType::A(2), 1, 3);
}

#[test]
fn a1_tensor_example() {
    let d = RootData::new(CartanType::A(1));
    let l0 = weight(&d, &[1, 0], 0);
    let l1 = weight(&d, &[0, 1], 0);
    let table = tensor_table(&d, &l0, &l1, 4, 2).unwrap();
    let oracle = tensor_by_characters(&d, &[1, 0], &[0, 1], 4);
    assert_eq!(table.entries, oracle);
    // L0 + L1 - delta occurs in L(L0) x L(L1)
    let key = vec![1, 1];
    assert_eq!(table.entries.get(&key), Some(&BigInt::from(1)));
}

#[test]
fn levi_a2_example() {
    let d = RootData::new(CartanType::A(2));
    // Levi L_0 has semisimple part A_2 on nodes 1, 2
    let a = weight(&d, &[1, 1, 0], 0);
    let b = weight(&d, &[1, 0, 1], 0);
    let mu = weight(&d, &[0, 1, 1], 0).add(&d.fundamental_weight(0).scale(&Rat::from_int(2)));
    assert_eq!(levi_multiplicity(&d, 0, &a, &b, &mu).unwrap(), BigInt::from(1));
}
