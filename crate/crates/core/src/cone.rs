//! Inequalities of the saturated tensor cone, the concave functional `phi`
//! with a certified finite truncation, membership and saturation checks.
//!
//! A point of the domain is a triple `(lambda1, lambda2, mu_bar)` with
//! positive levels, dominant entries, `mu_bar(c) = lambda1(c) + lambda2(c)`
//! and zero `delta`-coefficients. For an index `(u1, u2, v, i)` write
//! `w = t_h w_dot` and `x_w = h + w_dot varpi_i / D` with `D = <varpi_i, theta>`
//! (`varpi_0 = 0`, `D = 1` for `i = 0`). Then
//!
//! `phi_idx = <l1, x_u1> + <l2, x_u2> - <mu, x_v> + l1/2 (|x_v|^2 - |x_u1|^2) + l2/2 (|x_v|^2 - |x_u2|^2)`
//!
//! on the finite parts and levels, and `b <= phi_idx` is the inequality at
//! `mu_bar + b delta`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::repmult::{tensor_multiplicity, Outcome};
use crate::scalar::{fmt_rat, sqrt_lower, sqrt_upper, Scalar};
use crate::schubert::StructureTable;
use crate::syntax::format_weight;
use crate::weyl::{format_word, AffineWeylElt, AffineWeylGroup, ParabolicSpec};
use crate::{Coweight, Rat, RootData, Weight};

/// An inequality `(u1, u2, v, i)` whose deformed coefficient is 1.
#[derive(Clone, Debug)]
pub struct InequalityIndex {
    pub i: usize,
    /// Ball indices of `u1, u2, v` in the structure table.
    pub ball: [usize; 3],
    pub elements: [AffineWeylElt; 3],
    pub words: [Vec<usize>; 3],
    pub length: usize,
    /// `x_u1, x_u2, x_v` in simple-coroot coordinates.
    pub x: [Vec<Rat>; 3],
    /// `(|x_v|^2 - |x_uk|^2) / 2`, the coefficients of the levels.
    pub q: [Rat; 2],
    /// Deformed coefficient and shift; always `1` and `0`.
    pub n: BigInt,
    pub delta: i64,
}

impl InequalityIndex {
    pub fn is_trivial(&self) -> bool {
        self.i == 0 && self.elements.iter().all(|w| w.is_identity())
    }

    pub fn label(&self) -> String {
        format!(
            "({}; {}; {}; {})",
            format_word(&self.words[0]),
            format_word(&self.words[1]),
            format_word(&self.words[2]),
            self.i
        )
    }

    pub fn to_json(&self) -> Value {
        let vec = |v: &[Rat]| Value::Array(v.iter().map(|a| json!(fmt_rat(a))).collect());
        json!({
            "i": self.i,
            "u1": format_word(&self.words[0]),
            "u2": format_word(&self.words[1]),
            "v": format_word(&self.words[2]),
            "length": self.length,
            "n": self.n.to_string(),
            "delta": self.delta,
            "coefficients": {
                "lambda1_dot": vec(&self.x[0]),
                "lambda2_dot": vec(&self.x[1]),
                "mu_dot": vec(&self.x[2].iter().map(|a| -a.clone()).collect::<Vec<_>>()),
                "level1": fmt_rat(&self.q[0]),
                "level2": fmt_rat(&self.q[1]),
            },
        })
    }
}

/// `D = <varpi_i, theta>`, the `delta`-coefficient of `w varpi_i`.
fn mark(data: &RootData, i: usize) -> i64 {
    data.marks[i]
}

/// `x_w` for `w = t_h w_dot` and node `i`.
fn shifted_translation(data: &RootData, w: &AffineWeylElt, i: usize) -> Vec<Rat> {
    let l = data.rank();
    let mut x: Vec<Rat> = w.translation.iter().map(|&h| Rat::from_int(h)).collect();
    if i > 0 {
        let cw = data.finite.fundamental_coweight(i - 1);
        let d = Rat::from_int(mark(data, i));
        for (r, xr) in x.iter_mut().enumerate() {
            let s = (0..l).fold(Rat::zero(), |acc, k| acc + Rat::from_int(w.cofinite[r][k]) * cw[k].clone());
            *xr += s / d.clone();
        }
    }
    x
}

fn norm2(data: &RootData, x: &[Rat]) -> Rat {
    data.finite.coweight_form(x, x)
}

fn dot(a: &[Rat], b: &[Rat]) -> Rat {
    a.iter().zip(b).fold(Rat::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

fn build_index(table: &StructureTable, i: usize, abv: [usize; 3], n: BigInt) -> InequalityIndex {
    let data = &table.data;
    let ball = table.ball();
    let elements = abv.map(|k| ball.elements[k].clone());
    let words = abv.map(|k| ball.words[k].clone());
    let x = [0, 1, 2].map(|k| shifted_translation(data, &elements[k], i));
    let nv = norm2(data, &x[2]);
    let half = Rat::from_frac(1, 2);
    let q = [0, 1].map(|k| (nv.clone() - norm2(data, &x[k])) * half.clone());
    InequalityIndex { i, ball: abv, elements, words, length: ball.lengths[abv[2]], x, q, n, delta: 0 }
}

/// Every `(u1, u2, v, i)` with `u1, u2, v in W^{P_i}`, `l(v) <= max_len` and
/// deformed coefficient 1, sorted by `l(v)`, node and reduced words.
pub fn enumerate_inequalities(table: &StructureTable) -> Vec<InequalityIndex> {
    let g = table.group();
    let ball = table.ball();
    let entries = table.nonzero_entries();
    let mut out: Vec<InequalityIndex> = (0..=g.rank)
        .into_par_iter()
        .flat_map_iter(|i| {
            let p = ParabolicSpec::maximal(i, g.rank);
            let in_wp: Vec<bool> = ball.elements.iter().map(|w| g.is_min_rep(w, &p)).collect();
            let mut found = Vec::new();
            for (a, b, v, n) in &entries {
                if !(in_wp[*a] && in_wp[*b] && in_wp[*v]) || !n.is_one() {
                    continue;
                }
                if table.delta_shift(*a, *b, *v, i) != 0 {
                    continue;
                }
                found.push(build_index(table, i, [*a, *b, *v], n.clone()));
                if a != b {
                    found.push(build_index(table, i, [*b, *a, *v], n.clone()));
                }
            }
            found
        })
        .collect();
    out.sort_by(|x, y| (x.length, x.i, &x.words).cmp(&(y.length, y.i, &y.words)));
    out
}

/// `(K^2, N)` for the length sandwich `K |h| - N <= l(t_h w) <= N + sqrt(2) N |h|`.
///
/// `N` is the number of positive finite roots and `K` the minimum of
/// `sum_{alpha > 0} |<h, alpha>| / |h|`. On the dominant chamber the
/// numerator is `<h, 2 rho>`, and the ratio is quasi-concave there, so
/// the minimum sits on a fundamental coweight ray.
pub fn lvsnorm_constants(data: &RootData) -> (Rat, usize) {
    let f = &data.finite;
    let k2 = (0..f.rank)
        .map(|i| {
            let cw = f.fundamental_coweight(i);
            let two_rho = cw.iter().fold(Rat::zero(), |acc, x| acc + x.clone()) * Rat::from_int(2);
            two_rho.clone() * two_rho / f.coweight_form(&cw, &cw)
        })
        .min()
        .expect("rank is positive");
    (k2, f.num_positive_roots())
}

/// A point `(lambda1, lambda2, mu_bar)` of the domain of `phi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConePoint {
    pub lambda1: Weight,
    pub lambda2: Weight,
    pub mu_bar: Weight,
}

impl ConePoint {
    pub fn new(lambda1: Weight, lambda2: Weight, mu_bar: Weight) -> Self {
        ConePoint { lambda1, lambda2, mu_bar }
    }

    pub fn scale(&self, s: &Rat) -> Self {
        ConePoint { lambda1: self.lambda1.scale(s), lambda2: self.lambda2.scale(s), mu_bar: self.mu_bar.scale(s) }
    }

    /// Rejects points outside the domain.
    pub fn validate(&self, data: &RootData) -> Result<()> {
        for l in [&self.lambda1, &self.lambda2] {
            if !l.level.is_positive() {
                return Err(Error::NonPositiveLevel(fmt_rat(&l.level)));
            }
        }
        for (name, w) in [("lambda1", &self.lambda1), ("lambda2", &self.lambda2), ("mu", &self.mu_bar)] {
            if !w.delta.is_zero() {
                return Err(Error::InvalidInput(format!("{name} must have zero delta-coefficient")));
            }
            if !data.is_dominant(w) {
                return Err(Error::InvalidInput(format!("{name} is not dominant")));
            }
        }
        if self.mu_bar.level != self.lambda1.level.clone() + self.lambda2.level.clone() {
            return Err(Error::InvalidInput("mu(c) must equal lambda1(c) + lambda2(c)".into()));
        }
        Ok(())
    }
}

/// `phi_idx(x)` from the cached coefficients.
pub fn phi_index(data: &RootData, idx: &InequalityIndex, x: &ConePoint) -> Result<Rat> {
    x.validate(data)?;
    Ok(phi_index_unchecked(idx, x))
}

fn phi_index_unchecked(idx: &InequalityIndex, x: &ConePoint) -> Rat {
    dot(&x.lambda1.dot, &idx.x[0]) + dot(&x.lambda2.dot, &idx.x[1]) - dot(&x.mu_bar.dot, &idx.x[2])
        + x.lambda1.level.clone() * idx.q[0].clone()
        + x.lambda2.level.clone() * idx.q[1].clone()
}

/// `phi_idx(x)` by pairing with `w varpi_i` directly and solving the
/// inequality for the `delta`-coefficient of `mu`.
pub fn phi_index_direct(data: &RootData, g: &AffineWeylGroup, idx: &InequalityIndex, x: &ConePoint) -> Result<Rat> {
    x.validate(data)?;
    let tau: Coweight = data.fundamental_coweight(idx.i);
    let moved: Vec<Coweight> = idx.elements.iter().map(|w| g.act_on_coweight(w, &tau)).collect();
    let rhs = data.pairing(&x.lambda1, &moved[0]) + data.pairing(&x.lambda2, &moved[1]);
    let lhs = data.pairing(&x.mu_bar, &moved[2]);
    let coeff = data.pairing(&data.delta(), &moved[2]);
    Ok((rhs - lhs) / coeff)
}

/// Proof that indices with `l(v)` above `length_cap` satisfy
/// `phi_idx(x) > threshold`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub threshold: Rat,
    /// Upper bound for `|h|` of any index with `phi_idx <= threshold`.
    pub h_star: Rat,
    pub length_cap: usize,
    pub table_len: usize,
}

impl Certificate {
    pub fn to_json(&self) -> Value {
        json!({
            "threshold": fmt_rat(&self.threshold),
            "h_star_upper": fmt_rat(&self.h_star),
            "length_cap": self.length_cap,
            "table_max_len": self.table_len,
        })
    }
}

/// Constants of the truncation bound that depend only on the root data.
#[derive(Clone, Debug)]
struct BoundConstants {
    n: Rat,
    k_lo: Rat,
    sqrt2_up: Rat,
    rho_up: Rat,
    h_dual: Rat,
    /// Upper bounds of `C_i = |varpi_i| / D_i`, with `C_0 = 0`.
    c_up: Vec<Rat>,
}

impl BoundConstants {
    fn new(data: &RootData) -> Self {
        let (k2, n) = lvsnorm_constants(data);
        let f = &data.finite;
        let rho = f.rho_dot();
        let mut c_up = vec![Rat::zero()];
        for i in 1..=data.rank() {
            let cw = f.fundamental_coweight(i - 1);
            let d = Rat::from_int(mark(data, i));
            c_up.push(sqrt_upper(&(f.coweight_form(&cw, &cw) / (d.clone() * d))));
        }
        BoundConstants {
            n: Rat::from_int(n as i64),
            k_lo: sqrt_lower(&k2),
            sqrt2_up: sqrt_upper(&Rat::from_int(2)),
            rho_up: sqrt_upper(&f.weight_form(&rho, &rho)),
            h_dual: Rat::from_int(data.dual_coxeter),
            c_up,
        }
    }
}

/// Length cap beyond which every index has `phi_idx(x) > threshold`.
///
/// With `T = |x_v|`, `Y = max |x_uk|`, `l = min(l1, l2)` and `C = C_i`, the
/// inequalities at `(l Lambda, 0, l Lambda)` give `|x_v| >= |x_uk|`, and the
/// vanishing shift gives
/// `|x_v|^2 - |x_u1|^2 - |x_u2|^2 >= -C^2 - (2 |rho| / h) (|x_u1| + |x_u2| + |x_v| + C)`.
/// Together
/// `phi_idx >= l/2 T^2 - beta T - alpha Y - gamma` with
/// `beta = l |rho| / h + |mu|`, `alpha = 2 l |rho| / h + |l1| + |l2|`,
/// `gamma = l C^2 / 2 + l |rho| C / h`. The length sandwich bounds
/// `Y <= (N / K)(2 + sqrt 2 t) + C` and `T >= t - C` in terms of
/// `t = |h_v|`, and `l(v) <= N + sqrt 2 N t` turns a bound on `t` into a
/// length cap. Every irrational constant is replaced by a rational bound
/// on the safe side.
fn length_cap(data: &RootData, consts: &BoundConstants, x: &ConePoint, threshold: &Rat) -> (Rat, usize) {
    let f = &data.finite;
    let norm_up = |w: &Weight| sqrt_upper(&f.weight_form(&w.dot, &w.dot));
    let lvl = x.lambda1.level.clone().min(x.lambda2.level.clone());
    let (l1, l2, mu) = (norm_up(&x.lambda1), norm_up(&x.lambda2), norm_up(&x.mu_bar));
    let r = consts.rho_up.clone() / consts.h_dual.clone();
    let beta = lvl.clone() * r.clone() + mu;
    let alpha = Rat::from_int(2) * lvl.clone() * r.clone() + l1 + l2;
    let b = consts.sqrt2_up.clone() * consts.n.clone() / consts.k_lo.clone();
    let two = Rat::from_int(2);
    let mut h_star = Rat::zero();
    for c in &consts.c_up {
        let a = two.clone() * consts.n.clone() / consts.k_lo.clone() + c.clone();
        let gamma = lvl.clone() * c.clone() * c.clone() / two.clone() + lvl.clone() * r.clone() * c.clone();
        // g = l/2 s^2 - p s - q with s = t - C; need g > threshold.
        let p = beta.clone() + alpha.clone() * b.clone();
        let q = alpha.clone() * (a + b.clone() * c.clone()) + gamma + threshold.clone();
        let disc = p.clone() * p.clone() + two.clone() * lvl.clone() * q;
        let root = if disc.is_negative() {
            Rat::zero()
        } else {
            (p.clone() + sqrt_upper(&disc)) / lvl.clone()
        };
        let s = root.max(beta.clone() / lvl.clone()).max(Rat::zero());
        h_star = h_star.max(s + c.clone());
    }
    let cap = consts.n.clone() + consts.sqrt2_up.clone() * consts.n.clone() * h_star.clone();
    let cap = cap.ceil().to_integer().to_usize().expect("length cap fits in usize");
    (h_star, cap)
}

/// Value of `phi` with the indices attaining it and the certificate.
#[derive(Clone, Debug)]
pub struct PhiReport {
    pub value: Rat,
    /// Positions in [`Cone::indices`] attaining the value.
    pub attaining: Vec<usize>,
    pub certificate: Certificate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    /// `mu(d) < phi`.
    Member,
    /// `mu(d) = phi`.
    Boundary,
    NotMember,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Member => "member",
            Verdict::Boundary => "boundary",
            Verdict::NotMember => "not_member",
        }
    }

    pub fn in_cone(&self) -> bool {
        !matches!(self, Verdict::NotMember)
    }
}

#[derive(Clone, Debug)]
pub struct MembershipReport {
    pub verdict: Verdict,
    /// Why the triple fails before any inequality is evaluated.
    pub reason: Option<String>,
    /// The triple with the `delta`-coefficients of `lambda1, lambda2` moved to `mu`.
    pub normalized: (Weight, Weight, Weight),
    /// `mu(d)` after normalisation.
    pub b: Rat,
    /// Least `phi_idx` over the table, when the domain conditions hold.
    pub phi: Option<Rat>,
    /// Whether `phi` is the exact infimum over all indices.
    pub phi_certified: bool,
    /// Positions in [`Cone::indices`] with `phi_idx = b`.
    pub tight: Vec<usize>,
    /// Positions in [`Cone::indices`] with `phi_idx < b`.
    pub violated: Vec<usize>,
    pub certificate: Option<Certificate>,
}

impl MembershipReport {
    pub fn to_json(&self, cone: &Cone) -> Value {
        let d = &cone.table.data;
        let labels = |v: &[usize]| Value::Array(v.iter().map(|&k| json!(cone.indices[k].label())).collect());
        json!({
            "verdict": self.verdict.as_str(),
            "reason": self.reason,
            "normalized": {
                "lambda1": format_weight(d, &self.normalized.0),
                "lambda2": format_weight(d, &self.normalized.1),
                "mu": format_weight(d, &self.normalized.2),
            },
            "b": fmt_rat(&self.b),
            "phi": self.phi.as_ref().map(fmt_rat),
            "phi_certified": self.phi_certified,
            "tight": labels(&self.tight),
            "violated": labels(&self.violated),
            "certificate": self.certificate.as_ref().map(Certificate::to_json),
        })
    }
}

/// Saturation statements checked by [`Cone::saturation_check`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SaturationMode {
    /// `L(f mu)` in `L(f lambda1) x L(f lambda2)` with `f = d k_g` when
    /// `k_s = 1` and `f = k_g k_s` otherwise.
    Stretch { d: i64 },
    /// `L(k_g k_s mu - d delta)` in `L(k_g k_s lambda1) x L(k_g k_s lambda2)`.
    Shift { d: i64 },
}

#[derive(Clone, Debug)]
pub struct SaturationReport {
    pub mode: SaturationMode,
    pub factor: i64,
    pub lambda1: Weight,
    pub lambda2: Weight,
    pub mu: Weight,
    pub membership: Verdict,
    pub outcome: Outcome,
}

impl SaturationReport {
    pub fn confirmed(&self) -> Option<bool> {
        self.outcome.is_positive()
    }

    pub fn to_json(&self, data: &RootData) -> Value {
        let (mode, d) = match self.mode {
            SaturationMode::Stretch { d } => ("stretch", d),
            SaturationMode::Shift { d } => ("shift", d),
        };
        json!({
            "mode": mode,
            "d": d,
            "factor": self.factor,
            "lambda1": format_weight(data, &self.lambda1),
            "lambda2": format_weight(data, &self.lambda2),
            "mu": format_weight(data, &self.mu),
            "membership": self.membership.as_str(),
            "multiplicity": self.outcome.to_json(),
            "confirmed": self.confirmed(),
        })
    }
}

/// A structure table with its enumerated inequalities.
pub struct Cone {
    pub table: StructureTable,
    pub indices: Vec<InequalityIndex>,
    consts: BoundConstants,
}

impl Cone {
    pub fn new(data: &RootData, max_len: usize) -> Result<Self> {
        Ok(Self::from_table(StructureTable::compute(data, max_len)?))
    }

    pub fn from_table(table: StructureTable) -> Self {
        let indices = enumerate_inequalities(&table);
        let consts = BoundConstants::new(&table.data);
        Cone { table, indices, consts }
    }

    pub fn data(&self) -> &RootData {
        &self.table.data
    }

    pub fn max_len(&self) -> usize {
        self.table.max_len()
    }

    fn values(&self, x: &ConePoint) -> Vec<Rat> {
        self.indices.par_iter().map(|idx| phi_index_unchecked(idx, x)).collect()
    }

    /// The certificate for `phi_idx(x) > threshold` beyond the table.
    pub fn certify(&self, x: &ConePoint, threshold: &Rat) -> Result<Certificate> {
        x.validate(self.data())?;
        let (h_star, cap) = length_cap(self.data(), &self.consts, x, threshold);
        if cap > self.max_len() {
            return Err(Error::TableTooSmall { need: cap, have: self.max_len() });
        }
        Ok(Certificate { threshold: threshold.clone(), h_star, length_cap: cap, table_len: self.max_len() })
    }

    /// `phi(x)`, the infimum over all indices, with a certificate that the
    /// table holds every index that could attain it.
    pub fn phi(&self, x: &ConePoint) -> Result<PhiReport> {
        x.validate(self.data())?;
        let vals = self.values(x);
        let value = vals.iter().min().cloned().expect("the trivial index is always present");
        let certificate = self.certify(x, &value)?;
        let attaining = (0..vals.len()).filter(|&k| vals[k] == value).collect();
        Ok(PhiReport { value, attaining, certificate })
    }

    /// Membership of `(lambda1, lambda2, mu)` in the closed cone.
    pub fn is_member(&self, lambda1: &Weight, lambda2: &Weight, mu: &Weight) -> Result<MembershipReport> {
        let data = self.data();
        for l in [lambda1, lambda2] {
            if !l.level.is_positive() {
                return Err(Error::NonPositiveLevel(fmt_rat(&l.level)));
            }
        }
        let l1 = lambda1.with_delta(Rat::zero());
        let l2 = lambda2.with_delta(Rat::zero());
        let b = mu.delta.clone() - lambda1.delta.clone() - lambda2.delta.clone();
        let mu_n = mu.with_delta(b.clone());
        let mut report = MembershipReport {
            verdict: Verdict::NotMember,
            reason: None,
            normalized: (l1.clone(), l2.clone(), mu_n.clone()),
            b: b.clone(),
            phi: None,
            phi_certified: false,
            tight: Vec::new(),
            violated: Vec::new(),
            certificate: None,
        };
        for (name, w) in [("lambda1", &l1), ("lambda2", &l2), ("mu", &mu_n)] {
            if !data.is_dominant(w) {
                report.reason = Some(format!("{name} is not dominant"));
                return Ok(report);
            }
        }
        if mu_n.level != l1.level.clone() + l2.level.clone() {
            report.reason = Some("mu(c) differs from lambda1(c) + lambda2(c)".into());
            return Ok(report);
        }
        let x = ConePoint::new(l1, l2, mu_n.with_delta(Rat::zero()));
        let vals = self.values(&x);
        let min = vals.iter().min().cloned().expect("the trivial index is always present");
        report.violated = (0..vals.len()).filter(|&k| vals[k] < b).collect();
        report.tight = (0..vals.len()).filter(|&k| vals[k] == b).collect();
        report.phi_certified = self.certify(&x, &min).is_ok();
        report.phi = Some(min);
        if !report.violated.is_empty() {
            report.reason = Some("an inequality is violated".into());
            return Ok(report);
        }
        report.certificate = Some(self.certify(&x, &b)?);
        report.verdict = if report.tight.is_empty() { Verdict::Member } else { Verdict::Boundary };
        Ok(report)
    }

    /// The stretched triple predicted by a saturation statement, after
    /// checking its hypotheses: `(factor, lambda1', lambda2', mu', verdict)`.
    pub fn saturation_target(
        &self,
        lambda1: &Weight,
        lambda2: &Weight,
        mu: &Weight,
        mode: SaturationMode,
    ) -> Result<(i64, Weight, Weight, Weight, Verdict)> {
        let data = self.data();
        for (name, w) in [("lambda1", lambda1), ("lambda2", lambda2), ("mu", mu)] {
            if !data.is_dominant_integral(w) || !w.delta.is_integral() {
                return Err(Error::InvalidInput(format!("{name} must be dominant integral")));
            }
        }
        let diff = mu.sub(&lambda1.add(lambda2));
        if !data.in_root_lattice(&diff)? {
            return Err(Error::InvalidInput("mu - lambda1 - lambda2 is not in the root lattice".into()));
        }
        let d = match mode {
            SaturationMode::Stretch { d } | SaturationMode::Shift { d } => d,
        };
        if d < 2 {
            return Err(Error::InvalidInput("the saturation statements need d >= 2".into()));
        }
        let verdict = self.is_member(lambda1, lambda2, mu)?.verdict;
        if !verdict.in_cone() {
            return Err(Error::InvalidInput("the triple is not in the cone".into()));
        }
        let (kg, ks) = (data.k_g_dot() as i64, data.k_s() as i64);
        let factor = match mode {
            SaturationMode::Stretch { d } if ks == 1 => d * kg,
            _ => kg * ks,
        };
        let f = Rat::from_int(factor);
        let mut sm = mu.scale(&f);
        if let SaturationMode::Shift { d } = mode {
            sm = sm.sub(&data.delta().scale(&Rat::from_int(d)));
        }
        Ok((factor, lambda1.scale(&f), lambda2.scale(&f), sm, verdict))
    }

    /// Confirms the predicted stretched constituent by a tensor multiplicity
    /// computed to the given depth.
    pub fn saturation_check(
        &self,
        lambda1: &Weight,
        lambda2: &Weight,
        mu: &Weight,
        mode: SaturationMode,
        depth: i64,
    ) -> Result<SaturationReport> {
        let (factor, s1, s2, sm, membership) = self.saturation_target(lambda1, lambda2, mu, mode)?;
        let outcome = tensor_multiplicity(self.data(), &s1, &s2, &sm, depth)?;
        Ok(SaturationReport { mode, factor, lambda1: s1, lambda2: s2, mu: sm, membership, outcome })
    }

    pub fn inequalities_json(&self) -> Value {
        Value::Array(self.indices.iter().map(InequalityIndex::to_json).collect())
    }
}

/// `k_g phi_idx(x)` is an integer for integral `x`; returns the offending
/// value otherwise.
pub fn integrality_defect(data: &RootData, value: &Rat) -> Option<Rat> {
    let k = Rat::from_int(data.k_g_dot() as i64);
    let scaled = value.clone() * k;
    if scaled.is_integer() {
        None
    } else {
        Some(scaled)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_data::CartanType;

    fn lam(data: &RootData, level: i64) -> Weight {
        data.lambda().scale(&Rat::from_int(level))
    }

    #[test]
    fn lvsnorm_a1() {
        let d = RootData::new(CartanType::A(1));
        assert_eq!(lvsnorm_constants(&d), (Rat::from_int(2), 1));
        let d = RootData::new(CartanType::A(2));
        assert_eq!(lvsnorm_constants(&d).1, 3);
    }

    #[test]
    fn trivial_index_present_and_zero() {
        let d = RootData::new(CartanType::A(1));
        let cone = Cone::new(&d, 4).unwrap();
        let first = &cone.indices[0];
        assert!(first.is_trivial());
        let x = ConePoint::new(lam(&d, 2), lam(&d, 3), lam(&d, 5));
        assert_eq!(phi_index(&d, first, &x).unwrap(), Rat::zero());
    }

    #[test]
    fn identity_families_present() {
        let d = RootData::new(CartanType::A(1));
        let cone = Cone::new(&d, 4).unwrap();
        let g = cone.table.group();
        for i in 0..2 {
            let p = ParabolicSpec::maximal(i, 1);
            for w in g.enumerate_min_reps(&p, 4) {
                let e = g.identity();
                assert!(cone
                    .indices
                    .iter()
                    .any(|idx| idx.i == i && idx.elements[0] == e && idx.elements[1] == w && idx.elements[2] == w));
            }
        }
    }

    #[test]
    fn membership_examples() {
        let d = RootData::new(CartanType::A(1));
        let cone = Cone::new(&d, 10).unwrap();
        let (l, l2) = (lam(&d, 1), lam(&d, 2));
        let r = cone.is_member(&l, &l, &l2).unwrap();
        assert_eq!(r.verdict, Verdict::Boundary);
        assert!(r.tight.iter().any(|&k| cone.indices[k].is_trivial()));
        let up = l2.add(&d.delta());
        assert_eq!(cone.is_member(&l, &l, &up).unwrap().verdict, Verdict::NotMember);
        let down = l2.sub(&d.delta());
        assert_eq!(cone.is_member(&l, &l, &down).unwrap().verdict, Verdict::Member);
        let zero = Weight::zero(1);
        assert!(matches!(cone.is_member(&zero, &l, &l), Err(Error::NonPositiveLevel(_))));
    }

    #[test]
    fn phi_of_cartan_triple() {
        let d = RootData::new(CartanType::A(1));
        let cone = Cone::new(&d, 10).unwrap();
        let x = ConePoint::new(lam(&d, 1), lam(&d, 1), lam(&d, 2));
        let r = cone.phi(&x).unwrap();
        assert_eq!(r.value, Rat::zero());
        assert!(r.attaining.iter().any(|&k| cone.indices[k].is_trivial()));
    }
}
