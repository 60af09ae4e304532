//! Finite simple root systems and their untwisted affine extensions.
//!
//! Conventions:
//! * Cartan matrix entries are `a_ij = <alpha_i^vee, alpha_j>`, Bourbaki numbering.
//! * The invariant form is normalised so that long roots have norm 2. Short
//!   coroots then also have norm 2 and `||h||^2` is even on the coroot lattice.
//! * Finite weights are stored in fundamental-weight coordinates, finite
//!   coweights in simple-coroot coordinates, roots in simple-root coordinates.
//! * The integral form of the Cartan subalgebra is taken to be the lattice
//!   spanned by the finite fundamental coweights together with `c` and `d`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{self, Mat};
use crate::scalar::{fmt_rat, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CartanType {
    A(usize),
    B(usize),
    C(usize),
    D(usize),
    E(usize),
    F4,
    G2,
}

impl CartanType {
    pub fn rank(&self) -> usize {
        match *self {
            CartanType::A(n)
            | CartanType::B(n)
            | CartanType::C(n)
            | CartanType::D(n)
            | CartanType::E(n) => n,
            CartanType::F4 => 4,
            CartanType::G2 => 2,
        }
    }

    fn validate(self) -> Result<Self> {
        let ok = match self {
            CartanType::A(n) => n >= 1,
            CartanType::B(n) | CartanType::C(n) => n >= 2,
            CartanType::D(n) => n >= 4,
            CartanType::E(n) => (6..=8).contains(&n),
            CartanType::F4 | CartanType::G2 => true,
        };
        if ok {
            Ok(self)
        } else {
            Err(Error::UnknownType(self.to_string()))
        }
    }

    /// Cartan matrix with `a_ij = <alpha_i^vee, alpha_j>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut a = linalg::identity_i64(n);
        for row in a.iter_mut() {
            for x in row.iter_mut() {
                *x *= 2;
            }
        }
        let mut link = |i: usize, j: usize, aij: i64, aji: i64| {
            a[i][j] = aij;
            a[j][i] = aji;
        };
        match *self {
            CartanType::A(n) => (0..n - 1).for_each(|i| link(i, i + 1, -1, -1)),
            CartanType::B(n) => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -1, -2);
            }
            CartanType::C(n) => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 2, n - 1, -2, -1);
            }
            CartanType::D(n) => {
                (0..n - 2).for_each(|i| link(i, i + 1, -1, -1));
                link(n - 3, n - 1, -1, -1);
            }
            CartanType::E(n) => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                (2..n - 1).for_each(|i| link(i, i + 1, -1, -1));
            }
            CartanType::F4 => {
                link(0, 1, -1, -1);
                link(1, 2, -1, -2);
                link(2, 3, -1, -1);
            }
            CartanType::G2 => link(0, 1, -3, -1),
        }
        a
    }

    /// Known saturation factors of the finite type, as tabulated in the
    /// literature (two values are listed for G2).
    pub fn finite_saturation_factors(&self) -> Vec<u64> {
        match *self {
            CartanType::A(_) => vec![1],
            CartanType::B(_) => vec![2],
            CartanType::C(_) => vec![2],
            CartanType::D(4) => vec![1],
            CartanType::D(_) => vec![4],
            CartanType::E(6) => vec![36],
            CartanType::E(7) => vec![144],
            CartanType::E(_) => vec![3600],
            CartanType::F4 => vec![144],
            CartanType::G2 => vec![2, 3],
        }
    }

    /// Tabulated values of `k_s` for the affine algebra of this type
    /// (least common multiple of saturation factors of maximal Levi
    /// subalgebras). G2 carries two tabulated values.
    pub fn k_s_table(&self) -> Vec<u64> {
        match *self {
            CartanType::A(_) => vec![1],
            CartanType::B(3) | CartanType::B(4) => vec![2],
            CartanType::B(_) => vec![4],
            CartanType::C(_) => vec![2],
            CartanType::D(4) => vec![1],
            CartanType::D(_) => vec![4],
            CartanType::E(6) => vec![36],
            CartanType::E(7) => vec![144],
            CartanType::E(_) => vec![3600],
            CartanType::F4 => vec![144],
            CartanType::G2 => vec![2, 3],
        }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CartanType::A(n) => write!(f, "A{n}"),
            CartanType::B(n) => write!(f, "B{n}"),
            CartanType::C(n) => write!(f, "C{n}"),
            CartanType::D(n) => write!(f, "D{n}"),
            CartanType::E(n) => write!(f, "E{n}"),
            CartanType::F4 => write!(f, "F4"),
            CartanType::G2 => write!(f, "G2"),
        }
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Accepts labels such as `A1`, `A1~`, `c_2`, `E8~`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::UnknownType(s.to_string());
        let t: String = s
            .trim()
            .trim_end_matches('~')
            .chars()
            .filter(|c| *c != '_')
            .collect();
        let mut chars = t.chars();
        let letter = chars.next().ok_or_else(bad)?.to_ascii_uppercase();
        let n: usize = chars.as_str().parse().map_err(|_| bad())?;
        let ty = match (letter, n) {
            ('A', n) => CartanType::A(n),
            ('B', n) => CartanType::B(n),
            ('C', n) => CartanType::C(n),
            ('D', n) => CartanType::D(n),
            ('E', n) => CartanType::E(n),
            ('F', 4) => CartanType::F4,
            ('G', 2) => CartanType::G2,
            _ => return Err(bad()),
        };
        ty.validate().map_err(|_| bad())
    }
}

/// Positive roots of a finite-type Cartan matrix (possibly reducible), in
/// simple-root coordinates, sorted by height then lexicographically.
pub fn finite_positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let unit = |i: usize| (0..n).map(|j| i64::from(i == j)).collect::<Vec<_>>();
    let mut all: Vec<Vec<i64>> = (0..n).map(unit).collect();
    let mut seen: std::collections::HashSet<Vec<i64>> = all.iter().cloned().collect();
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                if *beta == unit(i) {
                    continue;
                }
                let mut p = 0;
                loop {
                    let mut g = beta.clone();
                    g[i] -= p + 1;
                    if seen.contains(&g) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                if p - pairing > 0 {
                    let mut g = beta.clone();
                    g[i] += 1;
                    if seen.insert(g.clone()) {
                        next.push(g);
                    }
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
    all
}

/// Symmetrizer `d_i = (alpha_i, alpha_i)/2` of a symmetrizable Cartan matrix,
/// normalised so that the longest simple root in each component has `d = 1`.
pub fn symmetrizer<T: Scalar>(cartan: &[Vec<i64>]) -> Vec<T> {
    let n = cartan.len();
    let mut d: Vec<Option<T>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(T::one());
        let mut comp = vec![start];
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if j != i && cartan[i][j] != 0 && d[j].is_none() {
                    let di = d[i].clone().unwrap();
                    d[j] = Some(di * T::from_int(cartan[i][j]) / T::from_int(cartan[j][i]));
                    comp.push(j);
                    stack.push(j);
                }
            }
        }
        let max = comp.iter().map(|&j| d[j].clone().unwrap()).max().unwrap();
        for &j in &comp {
            d[j] = Some(d[j].clone().unwrap() / max.clone());
        }
    }
    d.into_iter().map(Option::unwrap).collect()
}

/// Integral symmetrizer: positive integers `e_i` with `e_i a_ij = e_j a_ji`.
pub fn integral_symmetrizer(cartan: &[Vec<i64>]) -> Vec<i64> {
    let d = symmetrizer::<num_rational::BigRational>(cartan);
    let lcm = d.iter().fold(num_bigint::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    d.iter()
        .map(|x| {
            let v = x * num_rational::BigRational::from_integer(lcm.clone());
            v.to_i64_exact().expect("symmetrizer fits in i64")
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct FiniteRootData<T: Scalar> {
    pub cartan_type: CartanType,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    /// `(alpha_i, alpha_i)/2`.
    pub symmetrizer: Vec<T>,
    pub positive_roots: Vec<Vec<i64>>,
    /// Coroot of each positive root, in simple-coroot coordinates.
    pub coroots: Vec<Vec<i64>>,
    pub highest_root: Vec<i64>,
    /// Coroot of the highest root, in simple-coroot coordinates.
    pub highest_coroot: Vec<i64>,
    /// Gram matrix `(alpha_i, alpha_j)`.
    pub root_gram: Mat<T>,
    /// Gram matrix of the fundamental weights.
    pub form_matrix: Mat<T>,
    /// Gram matrix `(alpha_i^vee, alpha_j^vee)`; integral.
    pub coroot_gram: Vec<Vec<i64>>,
    pub cartan_inverse: Mat<T>,
    /// Positive roots in fundamental-weight coordinates.
    pub root_fund: Vec<Vec<i64>>,
    root_lookup: HashMap<Vec<i64>, usize>,
}

impl<T: Scalar> FiniteRootData<T> {
    pub fn new(cartan_type: CartanType) -> Self {
        let cartan = cartan_type.cartan_matrix();
        let rank = cartan.len();
        let sym: Vec<T> = symmetrizer(&cartan);
        let positive_roots = finite_positive_roots(&cartan);
        let root_gram: Mat<T> = (0..rank)
            .map(|i| (0..rank).map(|j| sym[i].clone() * T::from_int(cartan[i][j])).collect())
            .collect();
        let a = linalg::to_scalar::<T>(&cartan);
        let cartan_inverse = linalg::inverse(&a).expect("finite Cartan matrices are invertible");
        // (w_i, w_j) = (A^{-1})_{ji} d_j
        let form_matrix: Mat<T> = (0..rank)
            .map(|i| (0..rank).map(|j| cartan_inverse[j][i].clone() * sym[j].clone()).collect())
            .collect();
        let coroot_gram: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..rank)
                    .map(|j| {
                        (T::from_int(cartan[i][j]) / sym[j].clone())
                            .to_i64_exact()
                            .expect("coroot Gram matrix is integral")
                    })
                    .collect()
            })
            .collect();
        let highest_root = positive_roots.last().unwrap().clone();
        let norm_half = |c: &[i64]| -> T {
            let cs: Vec<T> = c.iter().map(|&x| T::from_int(x)).collect();
            linalg::dot(&cs, &linalg::mat_vec(&root_gram, &cs)) / T::from_int(2)
        };
        let coroot_of = |c: &[i64]| -> Vec<i64> {
            let h = norm_half(c);
            c.iter()
                .zip(&sym)
                .map(|(&ci, di)| {
                    (T::from_int(ci) * di.clone() / h.clone())
                        .to_i64_exact()
                        .expect("coroot coordinates are integral")
                })
                .collect()
        };
        let coroots: Vec<Vec<i64>> = positive_roots.iter().map(|r| coroot_of(r)).collect();
        let highest_coroot = coroot_of(&highest_root);
        let root_fund: Vec<Vec<i64>> = positive_roots.iter().map(|r| linalg::mat_vec_i64(&cartan, r)).collect();
        let root_lookup = root_fund.iter().cloned().enumerate().map(|(i, f)| (f, i)).collect();
        FiniteRootData {
            cartan_type,
            rank,
            cartan,
            symmetrizer: sym,
            positive_roots,
            coroots,
            highest_root,
            highest_coroot,
            root_gram,
            form_matrix,
            coroot_gram,
            cartan_inverse,
            root_fund,
            root_lookup,
        }
    }

    pub fn num_positive_roots(&self) -> usize {
        self.positive_roots.len()
    }

    /// Classifies a root given in fundamental-weight coordinates:
    /// `Some((index, true))` for a positive root, `Some((index, false))` for
    /// the negative of positive root `index`.
    pub fn classify_root(&self, fund: &[i64]) -> Option<(usize, bool)> {
        if let Some(&i) = self.root_lookup.get(fund) {
            return Some((i, true));
        }
        let neg: Vec<i64> = fund.iter().map(|x| -x).collect();
        self.root_lookup.get(&neg).map(|&i| (i, false))
    }

    pub fn rho_dot(&self) -> Vec<T> {
        vec![T::one(); self.rank]
    }

    /// Fundamental weight `i` in simple-root coordinates.
    pub fn fundamental_weight_in_roots(&self, i: usize) -> Vec<T> {
        (0..self.rank).map(|k| self.cartan_inverse[k][i].clone()).collect()
    }

    /// Fundamental coweight `i` in simple-coroot coordinates.
    pub fn fundamental_coweight(&self, i: usize) -> Vec<T> {
        self.cartan_inverse[i].clone()
    }

    /// `(lambda, mu)` for weights in fundamental coordinates.
    pub fn weight_form(&self, a: &[T], b: &[T]) -> T {
        linalg::dot(a, &linalg::mat_vec(&self.form_matrix, b))
    }

    /// `(x, y)` for coweights in simple-coroot coordinates.
    pub fn coweight_form(&self, x: &[T], y: &[T]) -> T {
        let g = linalg::to_scalar::<T>(&self.coroot_gram);
        linalg::dot(x, &linalg::mat_vec(&g, y))
    }

    /// `||h||^2` for an integral coweight.
    pub fn coweight_norm2_int(&self, h: &[i64]) -> i64 {
        linalg::quad_i64(&self.coroot_gram, h, h)
    }

    /// The isomorphism `nu` induced by the form: coroot coordinates to
    /// fundamental-weight coordinates.
    pub fn nu(&self, x: &[T]) -> Vec<T> {
        let g = linalg::to_scalar::<T>(&self.coroot_gram);
        linalg::mat_vec(&g, x)
    }

    /// Inverse of `nu`: fundamental-weight coordinates to coroot coordinates.
    pub fn nu_inverse(&self, f: &[T]) -> Vec<T> {
        let g = linalg::to_scalar::<T>(&self.coroot_gram);
        let inv = linalg::inverse(&g).expect("coroot Gram matrix is definite");
        linalg::mat_vec(&inv, f)
    }

    /// Fundamental-weight coordinates to simple-root coordinates.
    pub fn to_root_coords(&self, f: &[T]) -> Vec<T> {
        linalg::mat_vec(&self.cartan_inverse, f)
    }

    pub fn in_root_lattice(&self, f: &[T]) -> bool {
        self.to_root_coords(f).iter().all(|x| x.is_integral())
    }

    /// `(alpha, alpha)` for a root in simple-root coordinates.
    pub fn root_norm2(&self, c: &[i64]) -> T {
        let cs: Vec<T> = c.iter().map(|&x| T::from_int(x)).collect();
        linalg::dot(&cs, &linalg::mat_vec(&self.root_gram, &cs))
    }

    /// Pairing `<h, alpha>` of an integral coweight (coroot coordinates) with
    /// a root given in fundamental coordinates.
    pub fn pair_int(h: &[i64], fund: &[i64]) -> i64 {
        linalg::dot_i64(h, fund)
    }
}

/// An element `dot + level * Lambda + delta * delta` of the affine weight space.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineWeight<T: Scalar> {
    /// Finite part in fundamental-weight coordinates.
    pub dot: Vec<T>,
    pub level: T,
    pub delta: T,
}

/// An element `dot + d_coeff * d + c_coeff * c` of the affine Cartan subalgebra.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineCoweight<T: Scalar> {
    /// Finite part in simple-coroot coordinates.
    pub dot: Vec<T>,
    pub d: T,
    pub c: T,
}

impl<T: Scalar> AffineWeight<T> {
    pub fn new(dot: Vec<T>, level: T, delta: T) -> Self {
        AffineWeight { dot, level, delta }
    }

    pub fn zero(rank: usize) -> Self {
        AffineWeight { dot: vec![T::zero(); rank], level: T::zero(), delta: T::zero() }
    }

    pub fn from_ints(dot: &[i64], level: i64, delta: i64) -> Self {
        AffineWeight {
            dot: dot.iter().map(|&x| T::from_int(x)).collect(),
            level: T::from_int(level),
            delta: T::from_int(delta),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        AffineWeight {
            dot: self.dot.iter().zip(&o.dot).map(|(a, b)| a.clone() + b.clone()).collect(),
            level: self.level.clone() + o.level.clone(),
            delta: self.delta.clone() + o.delta.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-T::one()))
    }

    pub fn scale(&self, s: &T) -> Self {
        AffineWeight {
            dot: self.dot.iter().map(|a| a.clone() * s.clone()).collect(),
            level: self.level.clone() * s.clone(),
            delta: self.delta.clone() * s.clone(),
        }
    }

    pub fn with_delta(&self, delta: T) -> Self {
        AffineWeight { dot: self.dot.clone(), level: self.level.clone(), delta }
    }

    pub fn is_integral(&self) -> bool {
        self.dot.iter().all(|x| x.is_integral()) && self.level.is_integral() && self.delta.is_integral()
    }
}

impl<T: Scalar> AffineCoweight<T> {
    pub fn new(dot: Vec<T>, d: T, c: T) -> Self {
        AffineCoweight { dot, d, c }
    }

    pub fn add(&self, o: &Self) -> Self {
        AffineCoweight {
            dot: self.dot.iter().zip(&o.dot).map(|(a, b)| a.clone() + b.clone()).collect(),
            d: self.d.clone() + o.d.clone(),
            c: self.c.clone() + o.c.clone(),
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        AffineCoweight {
            dot: self.dot.iter().map(|a| a.clone() * s.clone()).collect(),
            d: self.d.clone() * s.clone(),
            c: self.c.clone() * s.clone(),
        }
    }
}

/// Bilinear pairing between weights and coweights.
pub fn pairing<T: Scalar>(l: &AffineWeight<T>, t: &AffineCoweight<T>) -> T {
    linalg::dot(&l.dot, &t.dot) + l.level.clone() * t.c.clone() + l.delta.clone() * t.d.clone()
}

#[derive(Clone, Debug)]
pub struct AffineRootData<T: Scalar> {
    pub finite: FiniteRootData<T>,
    pub dual_coxeter: i64,
    /// Coefficients of `delta` on `alpha_0..alpha_l`.
    pub marks: Vec<i64>,
    /// Coefficients of `c` on `alpha_0^vee..alpha_l^vee`.
    pub comarks: Vec<i64>,
    /// Generalised Cartan matrix of the affine algebra, node 0 first.
    pub affine_cartan: Vec<Vec<i64>>,
}

impl<T: Scalar> AffineRootData<T> {
    pub fn new(cartan_type: CartanType) -> Self {
        let finite = FiniteRootData::<T>::new(cartan_type);
        let l = finite.rank;
        let theta = finite.highest_root.clone();
        let theta_v = finite.highest_coroot.clone();
        let dual_coxeter = 1 + theta_v.iter().sum::<i64>();
        let mut marks = vec![1];
        marks.extend(theta.iter().copied());
        let mut comarks = vec![1];
        comarks.extend(theta_v.iter().copied());
        let a = &finite.cartan;
        let mut ac = vec![vec![0i64; l + 1]; l + 1];
        ac[0][0] = 2;
        for j in 0..l {
            ac[0][j + 1] = -(0..l).map(|k| theta_v[k] * a[k][j]).sum::<i64>();
            ac[j + 1][0] = -(0..l).map(|k| a[j][k] * theta[k]).sum::<i64>();
            for k in 0..l {
                ac[j + 1][k + 1] = a[j][k];
            }
        }
        AffineRootData { finite, dual_coxeter, marks, comarks, affine_cartan: ac }
    }

    pub fn parse(label: &str) -> Result<Self> {
        Ok(Self::new(label.parse()?))
    }

    pub fn cartan_type(&self) -> CartanType {
        self.finite.cartan_type
    }

    /// Rank `l` of the finite part; the affine algebra has `l + 1` nodes.
    pub fn rank(&self) -> usize {
        self.finite.rank
    }

    fn unit(&self, i: Option<usize>) -> Vec<T> {
        (0..self.rank()).map(|k| if Some(k) == i { T::one() } else { T::zero() }).collect()
    }

    pub fn delta(&self) -> AffineWeight<T> {
        AffineWeight::new(self.unit(None), T::zero(), T::one())
    }

    /// The weight `Lambda` (= `Lambda_0`).
    pub fn lambda(&self) -> AffineWeight<T> {
        AffineWeight::new(self.unit(None), T::one(), T::zero())
    }

    pub fn c(&self) -> AffineCoweight<T> {
        AffineCoweight::new(self.unit(None), T::zero(), T::one())
    }

    pub fn d(&self) -> AffineCoweight<T> {
        AffineCoweight::new(self.unit(None), T::one(), T::zero())
    }

    pub fn simple_root(&self, i: usize) -> AffineWeight<T> {
        if i == 0 {
            let th = linalg::mat_vec_i64(&self.finite.cartan, &self.finite.highest_root);
            AffineWeight::new(th.iter().map(|&x| T::from_int(-x)).collect(), T::zero(), T::one())
        } else {
            let col: Vec<T> = (0..self.rank()).map(|k| T::from_int(self.finite.cartan[k][i - 1])).collect();
            AffineWeight::new(col, T::zero(), T::zero())
        }
    }

    pub fn simple_coroot(&self, i: usize) -> AffineCoweight<T> {
        if i == 0 {
            let th = self.finite.highest_coroot.iter().map(|&x| T::from_int(-x)).collect();
            AffineCoweight::new(th, T::zero(), T::one())
        } else {
            AffineCoweight::new(self.unit(Some(i - 1)), T::zero(), T::zero())
        }
    }

    pub fn fundamental_weight(&self, i: usize) -> AffineWeight<T> {
        if i == 0 {
            self.lambda()
        } else {
            AffineWeight::new(self.unit(Some(i - 1)), T::from_int(self.comarks[i]), T::zero())
        }
    }

    pub fn fundamental_coweight(&self, i: usize) -> AffineCoweight<T> {
        if i == 0 {
            self.d()
        } else {
            AffineCoweight::new(self.finite.fundamental_coweight(i - 1), T::from_int(self.marks[i]), T::zero())
        }
    }

    pub fn rho(&self) -> AffineWeight<T> {
        AffineWeight::new(self.finite.rho_dot(), T::from_int(self.dual_coxeter), T::zero())
    }

    pub fn pairing(&self, l: &AffineWeight<T>, t: &AffineCoweight<T>) -> T {
        pairing(l, t)
    }

    /// Invariant form on weights: `(Lambda, delta) = 1`, `(Lambda, Lambda) = 0`.
    pub fn weight_form(&self, a: &AffineWeight<T>, b: &AffineWeight<T>) -> T {
        self.finite.weight_form(&a.dot, &b.dot)
            + a.level.clone() * b.delta.clone()
            + a.delta.clone() * b.level.clone()
    }

    /// Invariant form on coweights: `(c, d) = 1`, `(d, d) = (c, c) = 0`.
    pub fn coweight_form(&self, a: &AffineCoweight<T>, b: &AffineCoweight<T>) -> T {
        self.finite.coweight_form(&a.dot, &b.dot) + a.d.clone() * b.c.clone() + a.c.clone() * b.d.clone()
    }

    /// `<lambda, alpha_i^vee>` for `i = 0..=l`.
    pub fn coroot_values(&self, l: &AffineWeight<T>) -> Vec<T> {
        (0..=self.rank()).map(|i| pairing(l, &self.simple_coroot(i))).collect()
    }

    pub fn is_dominant(&self, l: &AffineWeight<T>) -> bool {
        self.coroot_values(l).iter().all(|x| !x.is_negative())
    }

    /// Dominant and integral on every simple coroot (the `delta` coefficient
    /// is not constrained).
    pub fn is_dominant_integral(&self, l: &AffineWeight<T>) -> bool {
        self.coroot_values(l).iter().all(|x| !x.is_negative() && x.is_integral())
    }

    /// Membership in `Q = Q_dot + Z delta`.
    pub fn in_root_lattice(&self, l: &AffineWeight<T>) -> Result<bool> {
        if !l.level.is_integral() || !l.delta.is_integral() {
            return Err(Error::InvalidInput("root lattice test needs integral level and delta coefficient".into()));
        }
        Ok(l.level.is_zero() && self.finite.in_root_lattice(&l.dot))
    }

    /// Coordinates on `alpha_0..alpha_l` of a level-zero weight.
    pub fn affine_root_coords(&self, l: &AffineWeight<T>) -> Option<Vec<T>> {
        if !l.level.is_zero() {
            return None;
        }
        let c = self.finite.to_root_coords(&l.dot);
        let m0 = l.delta.clone();
        let mut out = vec![m0.clone()];
        for (k, ck) in c.into_iter().enumerate() {
            out.push(ck + m0.clone() * T::from_int(self.finite.highest_root[k]));
        }
        Some(out)
    }

    /// The level-zero weight `sum m_i alpha_i`.
    pub fn weight_from_root_coords(&self, m: &[T]) -> AffineWeight<T> {
        let mut acc = AffineWeight::zero(self.rank());
        for (i, mi) in m.iter().enumerate() {
            acc = acc.add(&self.simple_root(i).scale(mi));
        }
        acc
    }

    /// Least common multiple of the coordinates of the highest root.
    pub fn k_g_dot(&self) -> u64 {
        self.finite.highest_root.iter().fold(1u64, |acc, &x| acc.lcm(&(x as u64)))
    }

    /// `k_s`; where two values are tabulated the smaller one is returned, see
    /// [`CartanType::k_s_table`].
    pub fn k_s(&self) -> u64 {
        *self.cartan_type().k_s_table().iter().min().unwrap()
    }

    pub fn to_json(&self) -> Value {
        let f = &self.finite;
        let mat = |m: &Mat<T>| -> Value {
            Value::Array(m.iter().map(|r| Value::Array(r.iter().map(|x| json!(fmt_rat(x))).collect())).collect())
        };
        json!({
            "type": self.cartan_type().to_string(),
            "rank": f.rank,
            "cartan_matrix": f.cartan,
            "affine_cartan_matrix": self.affine_cartan,
            "positive_roots": f.positive_roots,
            "coroots": f.coroots,
            "highest_root": f.highest_root,
            "highest_coroot": f.highest_coroot,
            "form_matrix": mat(&f.form_matrix),
            "coroot_gram": f.coroot_gram,
            "marks": self.marks,
            "comarks": self.comarks,
            "dual_coxeter": self.dual_coxeter,
            "k_g_dot": self.k_g_dot(),
            "k_s": self.cartan_type().k_s_table(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::frac;
    use num_rational::{BigRational, Rational64};

    fn all_types() -> Vec<CartanType> {
        use CartanType::*;
        vec![A(1), A(2), A(3), A(5), B(2), B(3), B(4), B(5), C(2), C(3), C(4), D(4), D(5), D(6), E(6), E(7), E(8), F4, G2]
    }

    fn classical_count(t: CartanType) -> usize {
        match t {
            CartanType::A(n) => n * (n + 1) / 2,
            CartanType::B(n) | CartanType::C(n) => n * n,
            CartanType::D(n) => n * (n - 1),
            CartanType::E(6) => 36,
            CartanType::E(7) => 63,
            CartanType::E(8) => 120,
            CartanType::F4 => 24,
            CartanType::G2 => 6,
            _ => unreachable!(),
        }
    }

    #[test]
    fn positive_root_counts() {
        for t in all_types() {
            let f = FiniteRootData::<BigRational>::new(t);
            assert_eq!(f.num_positive_roots(), classical_count(t), "{t}");
        }
    }

    #[test]
    fn parse_labels() {
        assert_eq!("A1~".parse::<CartanType>().unwrap(), CartanType::A(1));
        assert_eq!("c_2".parse::<CartanType>().unwrap(), CartanType::C(2));
        assert_eq!("G2".parse::<CartanType>().unwrap(), CartanType::G2);
        assert!("E9".parse::<CartanType>().is_err());
        assert!("D3".parse::<CartanType>().is_err());
        assert!("X".parse::<CartanType>().is_err());
        assert!("".parse::<CartanType>().is_err());
    }

    #[test]
    fn theta_has_norm_two_and_dual_pairings() {
        for t in all_types() {
            let f = FiniteRootData::<BigRational>::new(t);
            assert_eq!(f.root_norm2(&f.highest_root), frac(2, 1), "{t}");
            let l = f.rank;
            for i in 0..l {
                // <fundamental coweight i, alpha_j> = delta_ij
                let x = f.fundamental_coweight(i);
                for j in 0..l {
                    let alpha: Vec<BigRational> = (0..l).map(|k| frac(f.cartan[k][j], 1)).collect();
                    let v = linalg::dot(&x, &alpha);
                    assert_eq!(v, frac(i64::from(i == j), 1));
                }
                // <alpha_i^vee, fundamental weight j> is the unit vector by construction;
                // check through root coordinates instead.
                let w = f.fundamental_weight_in_roots(i);
                for j in 0..l {
                    let v: BigRational = (0..l).map(|k| frac(f.cartan[j][k], 1) * w[k].clone()).sum();
                    assert_eq!(v, frac(i64::from(i == j), 1));
                }
            }
        }
    }

    #[test]
    fn forms_symmetric_positive_and_invariant() {
        for t in all_types() {
            let f = FiniteRootData::<BigRational>::new(t);
            let l = f.rank;
            for i in 0..l {
                for j in 0..l {
                    assert_eq!(f.form_matrix[i][j], f.form_matrix[j][i]);
                    assert_eq!(f.coroot_gram[i][j], f.coroot_gram[j][i]);
                }
            }
            // leading principal minors positive
            for k in 1..=l {
                let sub: Mat<BigRational> = (0..k).map(|i| f.form_matrix[i][..k].to_vec()).collect();
                assert!(det(&sub) > frac(0, 1), "{t}");
            }
            // W-invariance on all pairs of fundamental weights
            for s in 0..l {
                let refl = |v: &Vec<BigRational>| -> Vec<BigRational> {
                    (0..l).map(|k| v[k].clone() - v[s].clone() * frac(f.cartan[k][s], 1)).collect()
                };
                for i in 0..l {
                    for j in 0..l {
                        let ei: Vec<BigRational> = (0..l).map(|k| frac(i64::from(k == i), 1)).collect();
                        let ej: Vec<BigRational> = (0..l).map(|k| frac(i64::from(k == j), 1)).collect();
                        assert_eq!(f.weight_form(&refl(&ei), &refl(&ej)), f.weight_form(&ei, &ej));
                    }
                }
            }
        }
    }

    fn det(m: &Mat<BigRational>) -> BigRational {
        let n = m.len();
        let mut a = m.clone();
        let mut d = frac(1, 1);
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| a[r][c] != frac(0, 1)) else { return frac(0, 1) };
            if p != c {
                a.swap(p, c);
                d = -d;
            }
            d = d * a[c][c].clone();
            for r in c + 1..n {
                let f = a[r][c].clone() / a[c][c].clone();
                for k in c..n {
                    a[r][k] = a[r][k].clone() - f.clone() * a[c][k].clone();
                }
            }
        }
        d
    }

    #[test]
    fn coroot_norms_even_on_ball() {
        for t in [CartanType::A(2), CartanType::B(2), CartanType::C(3), CartanType::G2, CartanType::F4] {
            let f = FiniteRootData::<BigRational>::new(t);
            let l = f.rank;
            let r = if l <= 2 { 4 } else { 2 };
            let mut h = vec![-r; l];
            loop {
                assert_eq!(f.coweight_norm2_int(&h) % 2, 0, "{t} {h:?}");
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
            // short coroots have norm 2
            let min = f.coroots.iter().map(|c| f.coweight_norm2_int(c)).min().unwrap();
            assert_eq!(min, 2, "{t}");
        }
    }

    #[test]
    fn nu_maps_coroots_to_rescaled_roots() {
        for t in [CartanType::B(3), CartanType::C(2), CartanType::G2] {
            let f = FiniteRootData::<BigRational>::new(t);
            for (r, cv) in f.positive_roots.iter().zip(&f.coroots) {
                let x: Vec<BigRational> = cv.iter().map(|&v| frac(v, 1)).collect();
                let image = f.nu(&x);
                let scale = frac(2, 1) / f.root_norm2(r);
                let expect: Vec<BigRational> =
                    linalg::mat_vec_i64(&f.cartan, r).iter().map(|&v| frac(v, 1) * scale.clone()).collect();
                assert_eq!(image, expect);
            }
        }
    }

    #[test]
    fn affine_constants() {
        let cases = [
            (CartanType::A(1), 2, 1),
            (CartanType::A(2), 3, 1),
            (CartanType::B(3), 5, 2),
            (CartanType::C(2), 3, 2),
            (CartanType::D(4), 6, 2),
            (CartanType::E(6), 12, 6),
            (CartanType::E(7), 18, 12),
            (CartanType::E(8), 30, 60),
            (CartanType::F4, 9, 12),
            (CartanType::G2, 4, 6),
        ];
        for (t, hv, kg) in cases {
            let a = AffineRootData::<BigRational>::new(t);
            assert_eq!(a.dual_coxeter, hv, "{t}");
            assert_eq!(a.k_g_dot(), kg, "{t}");
        }
        let g2 = AffineRootData::<BigRational>::new(CartanType::G2);
        assert_eq!(g2.finite.highest_root, vec![3, 2]);
    }

    #[test]
    fn affine_invariants() {
        for t in all_types() {
            let a = AffineRootData::<Rational64>::new(t);
            let l = a.rank();
            let rho = a.rho();
            for i in 0..=l {
                assert_eq!(a.pairing(&rho, &a.simple_coroot(i)), Rational64::from_integer(1));
                assert_eq!(a.pairing(&a.delta(), &a.simple_coroot(i)), Rational64::from_integer(0));
                for j in 0..=l {
                    let aij = a.pairing(&a.simple_root(j), &a.simple_coroot(i));
                    assert_eq!(aij, Rational64::from_integer(a.affine_cartan[i][j]));
                    let w = a.pairing(&a.fundamental_weight(j), &a.simple_coroot(i));
                    assert_eq!(w, Rational64::from_integer(i64::from(i == j)));
                    let cw = a.pairing(&a.simple_root(j), &a.fundamental_coweight(i));
                    assert_eq!(cw, Rational64::from_integer(i64::from(i == j)));
                }
            }
            // delta = sum a_i alpha_i and c = sum a_i^vee alpha_i^vee
            let mut dsum = AffineWeight::zero(l);
            let mut csum = AffineCoweight::new(vec![Rational64::from_integer(0); l], 0.into(), 0.into());
            for i in 0..=l {
                dsum = dsum.add(&a.simple_root(i).scale(&Rational64::from_integer(a.marks[i])));
                csum = csum.add(&a.simple_coroot(i).scale(&Rational64::from_integer(a.comarks[i])));
            }
            assert_eq!(dsum, a.delta());
            assert_eq!(csum, a.c());
            // alpha_0 = delta - theta
            let theta = a.weight_from_root_coords(
                &std::iter::once(0).chain(a.finite.highest_root.iter().copied()).map(Rational64::from_integer).collect::<Vec<_>>(),
            );
            assert_eq!(a.simple_root(0), a.delta().sub(&theta));
            let rho_th: i64 = a.finite.highest_coroot.iter().sum();
            assert_eq!(a.dual_coxeter, 1 + rho_th);
        }
    }

    #[test]
    fn root_lattice_membership() {
        let a = AffineRootData::<BigRational>::new(CartanType::A(1));
        assert!(a.in_root_lattice(&a.delta()).unwrap());
        assert!(!a.in_root_lattice(&a.lambda()).unwrap());
        assert!(a.in_root_lattice(&a.simple_root(1)).unwrap());
        assert!(!a.in_root_lattice(&AffineWeight::from_ints(&[1], 0, 0)).unwrap());
        let half = AffineWeight::new(vec![frac(0, 1)], frac(0, 1), frac(1, 2));
        assert!(a.in_root_lattice(&half).is_err());
    }

    #[test]
    fn k_tables() {
        use CartanType::*;
        let expect = [
            (A(3), vec![1]),
            (B(3), vec![2]),
            (B(4), vec![2]),
            (B(5), vec![4]),
            (C(2), vec![2]),
            (D(4), vec![1]),
            (D(5), vec![4]),
            (E(6), vec![36]),
            (E(7), vec![144]),
            (E(8), vec![3600]),
            (F4, vec![144]),
            (G2, vec![2, 3]),
        ];
        for (t, v) in expect {
            assert_eq!(t.k_s_table(), v, "{t}");
        }
        assert_eq!(AffineRootData::<BigRational>::new(G2).k_s(), 2);
    }

    #[test]
    fn json_export_is_stable() {
        let a = AffineRootData::<BigRational>::new(CartanType::G2);
        let s1 = serde_json::to_string(&a.to_json()).unwrap();
        let s2 = serde_json::to_string(&AffineRootData::<BigRational>::new(CartanType::G2).to_json()).unwrap();
        assert_eq!(s1, s2);
        assert!(s1.contains("\"dual_coxeter\":4"));
    }
}
