//! Localisation values by the left recursion on `v`.
//!
//! If `v = s_i v'` with `l(v') = l(v) - 1`, then
//! `xi^w(v) = s_i(xi^w(v')) + [s_i w < w] alpha_i s_i(xi^{s_i w}(v'))`,
//! where `s_i` acts on polynomials by substituting `alpha_j -> s_i(alpha_j)`.
//! This peels letters off the left, so it shares no prefix products with the
//! subword recursion used by the main table.

use std::collections::HashMap;

use crate::poly::IntPoly;
use crate::weyl::{AffineWeylElt, AffineWeylGroup};

pub struct LeftRecursion<'a> {
    g: &'a AffineWeylGroup,
    memo: HashMap<(AffineWeylElt, AffineWeylElt), IntPoly>,
}

impl<'a> LeftRecursion<'a> {
    pub fn new(g: &'a AffineWeylGroup) -> Self {
        LeftRecursion { g, memo: HashMap::new() }
    }

    /// `xi^w(v)`.
    pub fn xi(&mut self, w: &AffineWeylElt, v: &AffineWeylElt) -> IntPoly {
        let n = self.g.num_nodes();
        if let Some(p) = self.memo.get(&(w.clone(), v.clone())) {
            return p.clone();
        }
        let out = if v.is_identity() {
            if w.is_identity() {
                IntPoly::one(n)
            } else {
                IntPoly::zero(n)
            }
        } else {
            let i = (0..n).find(|&i| self.g.is_left_descent(v, i)).expect("nonidentity has a descent");
            let si = self.g.simple(i).clone();
            let vp = self.g.mul(&si, v);
            let x = self.xi(w, &vp);
            let mut acc = self.reflect(i, &x);
            let sw = self.g.mul(&si, w);
            if self.g.length(&sw) < self.g.length(w) {
                let x = self.xi(&sw, &vp);
                let t = self.reflect(i, &x);
                acc.add_assign(&t.mul(&IntPoly::linear(&self.g.simple_root_coords(i))));
            }
            acc
        };
        self.memo.insert((w.clone(), v.clone()), out.clone());
        out
    }

    fn reflect(&self, i: usize, p: &IntPoly) -> IntPoly {
        let n = self.g.num_nodes();
        let images: Vec<IntPoly> =
            (0..n).map(|j| IntPoly::linear(&self.g.reflect_root(i, &self.g.simple_root_coords(j)))).collect();
        let mut out = IntPoly::zero(n);
        for (e, c) in p.terms() {
            let mut t = IntPoly::constant(n, c.clone());
            for (j, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t.mul(&images[j]);
                }
            }
            out.add_assign(&t);
        }
        out
    }
}
