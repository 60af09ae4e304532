//! Multivariate polynomials with exact integer-like coefficients.
//!
//! Used for equivariant localisation: variables are the simple roots
//! `alpha_0..alpha_l`. Terms are stored sparsely keyed by exponent vectors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;

pub trait Coeff: Clone + fmt::Debug + fmt::Display + Integer + Signed + Send + Sync + From<i64> {}

impl<C> Coeff for C where C: Clone + fmt::Debug + fmt::Display + Integer + Signed + Send + Sync + From<i64> {}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly<C: Coeff> {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, C>,
}

pub type IntPoly = Poly<BigInt>;

impl<C: Coeff> Poly<C> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: C) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, C::one())
    }

    /// The linear form `sum coeffs[i] x_i`.
    pub fn linear(coeffs: &[i64]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, &c) in coeffs.iter().enumerate() {
            if c != 0 {
                let mut e = vec![0; n];
                e[i] = 1;
                p.terms.insert(e, C::from(c));
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn constant_term(&self) -> C {
        self.terms.get(&vec![0; self.nvars]).cloned().unwrap_or_else(C::zero)
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    fn add_term(&mut self, e: Vec<u32>, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &Self) {
        for (e, c) in &o.terms {
            self.add_term(e.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, o: &Self) {
        for (e, c) in &o.terms {
            self.add_term(e.clone(), -c.clone());
        }
    }

    /// `self -= a * b`.
    pub fn sub_mul_assign(&mut self, a: &Self, b: &Self) {
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                self.add_term(e, -(ca.clone() * cb.clone()));
            }
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }

    pub fn scale(&self, s: &C) -> Self {
        let mut out = Self::zero(self.nvars);
        if s.is_zero() {
            return out;
        }
        for (e, c) in &self.terms {
            out.terms.insert(e.clone(), c.clone() * s.clone());
        }
        out
    }

    /// Exact quotient by the linear form `sum lin[i] x_i`, or `None` when the
    /// division leaves a remainder.
    ///
    /// Works degree by degree in the pivot variable (the last variable with a
    /// nonzero coefficient), i.e. lexicographic division with that variable
    /// leading.
    pub fn div_linear(&self, lin: &[i64]) -> Option<Self> {
        let p = lin.iter().rposition(|&c| c != 0)?;
        let cp = C::from(lin[p]);
        let mut rem = self.clone();
        let mut quot = Self::zero(self.nvars);
        let max_e = rem.terms.keys().map(|e| e[p]).max().unwrap_or(0);
        for k in (1..=max_e).rev() {
            let layer: Vec<(Vec<u32>, C)> =
                rem.terms.iter().filter(|(e, _)| e[p] == k).map(|(e, c)| (e.clone(), c.clone())).collect();
            for (e, c) in layer {
                let (q, r) = c.div_rem(&cp);
                if !r.is_zero() {
                    return None;
                }
                let mut qe = e.clone();
                qe[p] -= 1;
                // subtract q * x^qe * lin from the remainder
                for (j, &lj) in lin.iter().enumerate() {
                    if lj == 0 {
                        continue;
                    }
                    let mut te = qe.clone();
                    te[j] += 1;
                    rem.add_term(te, -(q.clone() * C::from(lj)));
                }
                quot.add_term(qe, q);
            }
        }
        if rem.is_zero() {
            Some(quot)
        } else {
            None
        }
    }

    pub fn eval(&self, point: &[C]) -> C {
        let mut acc = C::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (x, &k) in point.iter().zip(e) {
                for _ in 0..k {
                    t = t * x.clone();
                }
            }
            acc = acc + t;
        }
        acc
    }
}

impl<C: Coeff> fmt::Display for Poly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(i, &k)| if k == 1 { format!("a{i}") } else { format!("a{i}^{k}") })
                .collect();
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
