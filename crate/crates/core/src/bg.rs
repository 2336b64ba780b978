//! Sigma-conjugacy classes: Newton and Kottwitz points, lambda-invariant, defect.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use crate::affine::{in_subsystem, lower_interval, AffineElement};
use crate::error::{Error, Result};
use crate::linalg;
use crate::root_datum::{to_rat_vec, GammaClass, Pi1Class, RootDatum};
use crate::weyl::WeylElement;
use crate::{Rat, RatCoweight, Subset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaClass {
    pub nu: RatCoweight,
    pub kappa: Pi1Class,
    pub lambda: GammaClass,
    pub defect: usize,
    pub j1: Subset,
    pub j2: Subset,
}

impl SigmaClass {
    pub fn from_invariants(d: &RootDatum, nu: RatCoweight, kappa: Pi1Class) -> Result<SigmaClass> {
        let lambda = lambda_invariant(d, &nu, &kappa)?;
        let diff: Vec<Rat> = nu.iter().zip(&lambda.avg).map(|(a, b)| a - b).collect();
        let c = d
            .coroot_coords(&diff)
            .ok_or_else(|| Error::Internal("nu - avg(lambda) is not in the coroot span".into()))?;
        let defect = d.pairing_two_rho_rat(&diff);
        if !defect.is_integer() || defect.is_negative() {
            return Err(Error::Internal(format!("defect {defect} is not a nonnegative integer")));
        }
        let j1 = c.iter().map(|x| !x.is_zero()).collect();
        let j2 = (0..d.rank())
            .map(|i| d.pairing_rat(&nu, d.simple_root(i)).is_zero())
            .collect();
        Ok(SigmaClass {
            nu,
            kappa,
            lambda,
            defect: defect.to_integer() as usize,
            j1,
            j2,
        })
    }

    pub fn same_class(&self, other: &SigmaClass) -> bool {
        self.nu == other.nu && self.kappa == other.kappa
    }

    pub fn to_json(&self) -> Value {
        json!({
            "nu": rat_strings(&self.nu),
            "kappa": format!("{:?}", self.kappa.coords),
            "lambda": self.lambda.rep,
            "defect": self.defect,
        })
    }
}

pub fn rat_strings(v: &[Rat]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

/// Dominant representative of `(1/N) sum_{k=1..N} (sigma o w)^k mu`.
pub fn newton_point(d: &RootDatum, x: &AffineElement) -> RatCoweight {
    d.dominant_representative(&orbit_average(d, x)).0
}

/// `(1/N) sum_{k=1..N} (sigma o w)^k mu` before passing to the dominant chamber.
pub fn orbit_average(d: &RootDatum, x: &AffineElement) -> RatCoweight {
    let wg = d.weyl();
    let n = x.sigma_w_order(d);
    let mut acc = vec![0i64; d.dim()];
    let mut cur = x.mu.clone();
    for _ in 0..n {
        cur = d.sigma(&wg.act(x.w, &cur));
        for (a, c) in acc.iter_mut().zip(&cur) {
            *a += c;
        }
    }
    acc.into_iter().map(|a| Rat::new(a, n as i64)).collect()
}

pub fn kottwitz_point(d: &RootDatum, x: &AffineElement) -> Pi1Class {
    d.pi1_class(&x.mu)
}

pub fn class_of(d: &RootDatum, x: &AffineElement) -> Result<SigmaClass> {
    SigmaClass::from_invariants(d, newton_point(d, x), kottwitz_point(d, x))
}

pub fn b_leq(d: &RootDatum, b1: &SigmaClass, b2: &SigmaClass) -> bool {
    b1.kappa == b2.kappa && d.leq_coroot_cone(&b1.nu, &b2.nu)
}

/// Maximal Gamma-class `l` with `avg_sigma(l) <= nu` and Kottwitz image `kappa`.
///
/// Starts from a lift pushed far enough below `nu`, then adds simple coroots
/// while the bound holds. Adding `alpha_i^vee` lowers the simple coroot
/// coordinates of `nu - avg_sigma(l)` by `1/|O|` on the sigma-orbit `O` of `i`.
pub fn lambda_invariant(d: &RootDatum, nu: &[Rat], kappa: &Pi1Class) -> Result<GammaClass> {
    let mut lam = d.pi1_quotient().lift(&kappa.coords);
    let gap = |lam: &[i64]| -> Result<Vec<Rat>> {
        let avg = d.avg_sigma(&to_rat_vec(lam));
        let diff: Vec<Rat> = nu.iter().zip(&avg).map(|(a, b)| a - b).collect();
        d.coroot_coords(&diff)
            .ok_or_else(|| Error::Internal("Kottwitz point does not match the Newton point".into()))
    };
    let c = gap(&lam)?;
    let low = c.iter().map(|x| (-*x).ceil().to_integer()).max().unwrap_or(0).max(0);
    for i in 0..d.rank() {
        for (l, x) in lam.iter_mut().zip(d.coroot(d.simple_root(i))) {
            *l -= low * x;
        }
    }
    let mut c = gap(&lam)?;
    let orbit_of: Vec<Vec<usize>> = {
        let mut v = vec![Vec::new(); d.rank()];
        for o in d.sigma_orbits() {
            for &i in &o {
                v[i] = o.clone();
            }
        }
        v
    };
    while let Some(i) = (0..d.rank()).find(|&i| {
        let step = Rat::new(1, orbit_of[i].len() as i64);
        orbit_of[i].iter().all(|&j| c[j] >= step)
    }) {
        let step = Rat::new(1, orbit_of[i].len() as i64);
        for &j in &orbit_of[i] {
            c[j] -= step;
        }
        for (l, x) in lam.iter_mut().zip(d.coroot(d.simple_root(i))) {
            *l += x;
        }
    }
    Ok(d.gamma_class(&lam))
}

/// `min l(v^{-1} ^sigma(w v))` over `v` in `W`, or over `W_J` when `j` is given.
pub fn min_twisted_length(d: &RootDatum, w: WeylElement, j: Option<&[bool]>) -> usize {
    let wg = d.weyl();
    wg.elements()
        .filter(|&v| j.is_none_or(|j| wg.supp(v).iter().zip(j).all(|(s, t)| !s || *t)))
        .map(|v| wg.length(wg.mul(wg.inverse(v), wg.twist(wg.mul(w, v)))))
        .min()
        .unwrap_or(0)
}

pub fn defect_orbits(d: &RootDatum, b: &SigmaClass) -> usize {
    d.sigma_orbits().iter().filter(|o| b.j1[o[0]]).count()
}

/// A fundamental `y <= x` in the class `b`, the first one in the interval order.
pub fn fundamental_representative(d: &RootDatum, x: &AffineElement, b: &SigmaClass) -> Result<AffineElement> {
    lower_interval(d, x, d.config().max_interval_size)?
        .into_iter()
        .find(|y| y.is_fundamental(d) && newton_point(d, y) == b.nu && kottwitz_point(d, y) == b.kappa)
        .ok_or_else(|| Error::Internal(format!("no fundamental element below {} in the class", x.format(d))))
}

/// `min_{v' in v W_J} l(v'^{-1} ^sigma(w v'))` for the witness `(v, J)` of a
/// fundamental element.
pub fn fundamental_coset_defect(d: &RootDatum, y: &AffineElement) -> Option<usize> {
    let wg = d.weyl();
    let (v, j) = y.fundamental_witness(d)?;
    wg.elements()
        .filter(|u| wg.supp(*u).iter().zip(&j).all(|(s, t)| !s || *t))
        .map(|u| y.twisted_conjugate(d, wg.mul(v, u)))
        .map(|c| wg.length(c))
        .min()
}

/// Minimal length representative of `v W_J`.
pub fn min_coset_rep(d: &RootDatum, v: WeylElement, j: &[bool]) -> WeylElement {
    let wg = d.weyl();
    let mut v = v;
    while let Some(i) = (0..d.rank()).find(|&i| j[i] && wg.is_right_descent(v, i)) {
        v = wg.mul_simple_right(v, i);
    }
    v
}

/// `(^{sigma^{-1}} v)^{-1} y v` for the witness `(v, J)` with `v` shortened to
/// `W^J`; this lies in `W_J` times the translations and has length zero there.
pub fn levi_representative(d: &RootDatum, y: &AffineElement) -> Option<(AffineElement, Subset)> {
    let wg = d.weyl();
    let (v, j) = y.fundamental_witness(d)?;
    let v = min_coset_rep(d, v, &j);
    let left = AffineElement::finite(d, wg.twist_inv(v)).inverse(d);
    let z = left.mul(d, y).mul(d, &AffineElement::finite(d, v));
    Some((z, j))
}

/// Sigma-conjugate `(^{sigma^{-1}} v)^{-1} z v` of `z` by a finite `v` that lands
/// in the Levi for `J` with length zero there.
pub fn conjugate_into_levi(d: &RootDatum, z: &AffineElement, j: &[bool]) -> Option<AffineElement> {
    let wg = d.weyl();
    wg.elements()
        .map(|v| {
            let left = AffineElement::finite(d, wg.twist_inv(v)).inverse(d);
            left.mul(d, z).mul(d, &AffineElement::finite(d, v))
        })
        .find(|c| wg.supp(c.w).iter().zip(j).all(|(s, t)| !s || *t) && levi_length(d, c, j) == 0)
}

/// Length of `z` in the extended affine Weyl group of the Levi for `J`.
pub fn levi_length(d: &RootDatum, z: &AffineElement, j: &[bool]) -> usize {
    (0..d.num_pos())
        .filter(|&a| in_subsystem(d, a, j))
        .map(|a| z.length_functional(d, a).unsigned_abs() as usize)
        .sum()
}

/// `dim V^sigma - dim V^{sigma w}`.
pub fn fixed_space_defect(d: &RootDatum, w: WeylElement) -> usize {
    let n = d.dim();
    let fixed = |m: &[Vec<i64>]| -> usize {
        let diff: Vec<Vec<Rat>> = (0..n)
            .map(|r| (0..n).map(|c| Rat::from(m[r][c] - i64::from(r == c))).collect())
            .collect();
        n - linalg::rank(&diff)
    };
    let s = d.sigma_matrix();
    let mw: Vec<Vec<i64>> = d.weyl().matrix(w).chunks(n).map(<[i64]>::to_vec).collect();
    fixed(s) - fixed(&linalg::mat_mul_int(s, &mw))
}

/// `l(x) = <nu(x), 2 rho>`.
pub fn is_fundamental_by_length(d: &RootDatum, x: &AffineElement) -> bool {
    Rat::from(x.length(d) as i64) == d.pairing_two_rho_rat(&newton_point(d, x))
}

/// `(l(x) + l(eta_sigma(x)) - <nu(b), 2 rho> - defect(b)) / 2`
pub fn virtual_dimension(d: &RootDatum, x: &AffineElement, b: &SigmaClass) -> Rat {
    let eta = d.weyl().length(x.eta_sigma(d)) as i64;
    (Rat::from(x.length(d) as i64 + eta - b.defect as i64) - d.pairing_two_rho_rat(&b.nu)) / 2
}

/// Classes keyed by Newton and Kottwitz point; safe to share across threads.
#[derive(Debug, Default)]
pub struct ClassCache {
    map: RwLock<HashMap<(RatCoweight, Pi1Class), Arc<SigmaClass>>>,
}

impl ClassCache {
    pub fn new() -> ClassCache {
        ClassCache::default()
    }

    pub fn get(&self, d: &RootDatum, nu: RatCoweight, kappa: Pi1Class) -> Result<Arc<SigmaClass>> {
        let key = (nu, kappa);
        if let Some(b) = self.map.read().unwrap().get(&key) {
            return Ok(b.clone());
        }
        let b = Arc::new(SigmaClass::from_invariants(d, key.0.clone(), key.1.clone())?);
        Ok(self.map.write().unwrap().entry(key).or_insert(b).clone())
    }

    pub fn class_of(&self, d: &RootDatum, x: &AffineElement) -> Result<Arc<SigmaClass>> {
        self.get(d, newton_point(d, x), kottwitz_point(d, x))
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}
