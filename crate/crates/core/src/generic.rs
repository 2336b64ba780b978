//! Generic sigma-conjugacy class of `x`: closed form, Bruhat-interval oracle,
//! cordiality, and the reduction for Omega-twisted Frobenius actions.

use std::sync::Arc;

use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::affine::{lower_interval, AffineElement};
use crate::bg::{kottwitz_point, newton_point, ClassCache, SigmaClass};
use crate::error::{Error, Result};
use crate::qbg::QuantumBruhatGraph;
use crate::root_datum::{to_rat_vec, GammaClass, Pi1Class, RootDatum};
use crate::weyl::WeylElement;
use crate::{Coweight, Rat, RatCoweight, Subset};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenericResult {
    pub lambda_x: GammaClass,
    pub nu_x: RatCoweight,
    pub witness_v: WeylElement,
    pub d_min: usize,
    pub used_j: Subset,
}

/// `v^{-1} mu - wt(v => ^sigma(w v))`
pub fn candidate(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement, v: WeylElement) -> Coweight {
    let wg = d.weyl();
    let target = wg.twist(wg.mul(x.w, v));
    let wt = q.wt_coweight(d, v, target);
    wg.act(wg.inverse(v), &x.mu)
        .into_iter()
        .zip(wt)
        .map(|(a, b)| a - b)
        .collect()
}

/// `d(v => ^sigma(w v))`
pub fn twisted_distance(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement, v: WeylElement) -> usize {
    let wg = d.weyl();
    q.dist(v, wg.twist(wg.mul(x.w, v)))
}

fn require_quasi_split(d: &RootDatum) -> Result<()> {
    match d.omega_twist() {
        Some(_) => Err(Error::TwistedFrobenius),
        None => Ok(()),
    }
}

/// Unique maximum of `items` under `leq`, or `None` if the maximal elements
/// are not a single element dominating everything.
fn unique_max<T: Clone>(items: &[T], leq: impl Fn(&T, &T) -> bool) -> Option<T> {
    let top = items.iter().find(|a| items.iter().all(|b| leq(b, a)))?;
    Some(top.clone())
}

/// `max conv'` over sigma-stable `J` below `bound`, by enumerating subsets.
fn restricted_conv(d: &RootDatum, lambda: &[Rat], bound: &[bool]) -> Result<RatCoweight> {
    let r = d.rank();
    let mut values = Vec::new();
    for m in 0..1u64 << r {
        let j: Subset = (0..r).map(|i| m >> i & 1 == 1).collect();
        if (0..r).any(|i| j[i] && !bound[i]) || d.sigma_subset(&j) != j {
            continue;
        }
        values.push(d.pi_j(lambda, &j)?);
    }
    unique_max(&values, |a, b| d.leq_coroot_cone(a, b))
        .ok_or_else(|| Error::Internal("restricted projections have no maximum".into()))
}

/// Sigma-closure of the supports of positive roots `alpha` with `l(x, v alpha) = 0`.
pub fn zero_support(d: &RootDatum, x: &AffineElement, v: WeylElement) -> Subset {
    let wg = d.weyl();
    let mut j = vec![false; d.rank()];
    for a in 0..d.num_pos() {
        if x.length_functional(d, wg.act_root(v, a)) == 0 {
            for (t, c) in j.iter_mut().zip(d.root_simple_coords(a)) {
                *t |= *c != 0;
            }
        }
    }
    d.sigma_closure(&j)
}

/// Generic lambda-invariant and Newton point from a length positive `v`
/// minimizing `d(v => ^sigma(w v))`. With `check` set, also evaluates the
/// maximum over all of `W`, all minimizers, and the restricted convex hull,
/// failing on any disagreement.
pub fn generic_lambda(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement, check: bool) -> Result<GenericResult> {
    require_quasi_split(d)?;
    generic_lambda_inner(d, q, x, check)
}

fn generic_lambda_inner(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement, check: bool) -> Result<GenericResult> {
    let lp = x.lp_set(d);
    let dists: Vec<usize> = lp.iter().map(|&v| twisted_distance(d, q, x, v)).collect();
    let d_min = *dists.iter().min().expect("LP(x) is nonempty");
    let witness_v = lp[dists.iter().position(|&t| t == d_min).unwrap()];
    let lambda_x = d.gamma_class(&candidate(d, q, x, witness_v));
    let nu_x = d.conv(&lambda_x.avg);
    let used_j = zero_support(d, x, witness_v);
    if check {
        for (&v, &t) in lp.iter().zip(&dists) {
            if t == d_min && d.gamma_class(&candidate(d, q, x, v)) != lambda_x {
                return Err(Error::Internal(format!(
                    "minimizers disagree for {}",
                    x.format(d)
                )));
            }
        }
        let all: Vec<GammaClass> = d
            .weyl()
            .elements()
            .map(|v| d.gamma_class(&candidate(d, q, x, v)))
            .collect();
        match unique_max(&all, |a, b| d.leq_gamma(a, b)) {
            Some(m) if d.leq_gamma(&m, &lambda_x) && d.leq_gamma(&lambda_x, &m) => {}
            _ => {
                return Err(Error::Internal(format!(
                    "maximum over W differs from the length positive minimum for {}",
                    x.format(d)
                )))
            }
        }
        if restricted_conv(d, &lambda_x.avg, &used_j)? != nu_x {
            return Err(Error::Internal(format!(
                "restricted convex hull differs for {}",
                x.format(d)
            )));
        }
    }
    Ok(GenericResult {
        lambda_x,
        nu_x,
        witness_v,
        d_min,
        used_j,
    })
}

pub fn generic_newton(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement) -> Result<RatCoweight> {
    Ok(generic_lambda(d, q, x, false)?.nu_x)
}

/// The class with Newton point `nu_x` and the Kottwitz point of `x`.
pub fn generic_class(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement) -> Result<SigmaClass> {
    SigmaClass::from_invariants(d, generic_newton(d, q, x)?, kottwitz_point(d, x))
}

type Key = (RatCoweight, Pi1Class);

fn insert_maximal(d: &RootDatum, acc: &mut Vec<Key>, k: Key) {
    let leq = |a: &Key, b: &Key| a.1 == b.1 && d.leq_coroot_cone(&a.0, &b.0);
    if acc.iter().any(|a| leq(&k, a)) {
        return;
    }
    acc.retain(|a| !leq(a, &k));
    acc.push(k);
}

/// Largest class among `[y]` for `y <= x`, computed in parallel over the
/// Bruhat interval. Partitions keep their own maximal elements, which are
/// then merged pairwise.
pub fn oracle_generic_class(d: &RootDatum, x: &AffineElement, cache: &ClassCache) -> Result<Arc<SigmaClass>> {
    let interval = lower_interval(d, x, d.config().max_interval_size)?;
    let maxima = interval
        .par_iter()
        .fold(Vec::new, |mut acc, y| {
            insert_maximal(d, &mut acc, (newton_point(d, y), kottwitz_point(d, y)));
            acc
        })
        .reduce(Vec::new, |mut a, b| {
            for k in b {
                insert_maximal(d, &mut a, k);
            }
            a
        });
    match maxima.as_slice() {
        [(nu, kappa)] => cache.get(d, nu.clone(), kappa.clone()),
        _ => Err(Error::Internal(format!(
            "{} maximal classes below {}",
            maxima.len(),
            x.format(d)
        ))),
    }
}

/// Every distinct class `[y]` for `y <= x`, in a canonical order.
pub fn attained_classes(d: &RootDatum, x: &AffineElement, cache: &ClassCache) -> Result<Vec<Arc<SigmaClass>>> {
    let interval = lower_interval(d, x, d.config().max_interval_size)?;
    let mut keys: Vec<Key> = interval
        .par_iter()
        .map(|y| (newton_point(d, y), kottwitz_point(d, y)))
        .collect();
    keys.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1)));
    keys.dedup();
    keys.into_iter().map(|(nu, kappa)| cache.get(d, nu, kappa)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cordiality {
    pub cordial: bool,
    pub cond1: bool,
    pub cond2: bool,
    /// The element used for both conditions.
    pub v: WeylElement,
    /// `d(v => ^sigma(w v))`
    pub d: usize,
    /// `l(v^{-1} ^sigma(w v))`
    pub len: usize,
    pub d_min: usize,
}

impl Cordiality {
    pub fn failed(&self) -> Option<&'static str> {
        match (self.cond1, self.cond2) {
            (true, true) => None,
            (false, true) => Some("(1)"),
            (true, false) => Some("(2)"),
            (false, false) => Some("(1),(2)"),
        }
    }

    pub fn to_json(&self) -> Value {
        match self.failed() {
            None => json!({"cordial": true}),
            Some(f) => json!({"cordial": false, "failed": f, "d": self.d, "len": self.len}),
        }
    }
}

/// Both cordiality conditions evaluated at a given `v`.
pub fn cordiality_at(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement, v: WeylElement) -> Cordiality {
    let dv = twisted_distance(d, q, x, v);
    let d_min = x
        .lp_set(d)
        .into_iter()
        .map(|u| twisted_distance(d, q, x, u))
        .min()
        .unwrap();
    let len = d.weyl().length(x.twisted_conjugate(d, v));
    Cordiality {
        cordial: dv <= d_min && dv == len,
        cond1: dv <= d_min,
        cond2: dv == len,
        v,
        d: dv,
        len,
        d_min,
    }
}

/// Cordiality with `v` minimal such that `v^{-1} mu` is dominant.
pub fn is_cordial(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement) -> Result<Cordiality> {
    require_quasi_split(d)?;
    Ok(cordiality_at(d, q, x, x.canonical_lp(d)))
}

/// `gamma = eps^{mu_sigma} sigma_1` as an element of the extended affine Weyl group.
pub fn twist_element(d: &RootDatum) -> Result<AffineElement> {
    let t = d.omega_twist().ok_or(Error::MissingTwist)?;
    Ok(AffineElement::translation(d, &t.mu_sigma).mul(d, &AffineElement::finite(d, t.sigma1)))
}

/// `(1/#W) sum_{u in W} u mu`
pub fn weyl_average(d: &RootDatum, mu: &[i64]) -> RatCoweight {
    let wg = d.weyl();
    let mut acc = vec![Rat::zero(); d.dim()];
    for u in wg.elements() {
        for (a, c) in acc.iter_mut().zip(wg.act(u, mu)) {
            *a += c;
        }
    }
    acc.into_iter().map(|a| a / wg.order() as i64).collect()
}

/// Generic Newton point for a datum whose Frobenius carries an Omega twist,
/// via the generic Newton point of `x gamma` for the quasi-split form, shifted
/// by the Weyl average of `mu_sigma`. Without a twist this is [`generic_newton`].
pub fn generic_newton_general(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement) -> Result<RatCoweight> {
    let Some(t) = d.omega_twist() else {
        return generic_newton(d, q, x);
    };
    let qs = d.quasi_split_form();
    let xt = x.mul(d, &twist_element(d)?);
    let nu = generic_lambda_inner(&qs, q, &xt, false)?.nu_x;
    let shift = weyl_average(d, &t.mu_sigma);
    Ok(nu.iter().zip(&shift).map(|(a, b)| a - b).collect())
}

/// The maximum over all `v` in `W` of
/// `conv(v^{-1} mu - wt(sigma_1^{-1} v => ^{sigma_2}(w v)) + v^{-1} mu_sigma - avg_W(mu_sigma))`.
pub fn generic_newton_general_max(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement) -> Result<RatCoweight> {
    let t = d.omega_twist().ok_or(Error::MissingTwist)?;
    let wg = d.weyl();
    let shift = weyl_average(d, &t.mu_sigma);
    let s1inv = wg.inverse(t.sigma1);
    let values: Vec<RatCoweight> = wg
        .elements()
        .map(|v| {
            let vinv = wg.inverse(v);
            let wt = q.wt_coweight(d, wg.mul(s1inv, v), wg.twist(wg.mul(x.w, v)));
            let a = wg.act(vinv, &x.mu);
            let b = wg.act(vinv, &t.mu_sigma);
            let raw: Vec<Rat> = (0..d.dim())
                .map(|k| Rat::from(a[k] - wt[k] + b[k]) - shift[k])
                .collect();
            d.conv(&raw)
        })
        .collect();
    unique_max(&values, |a, b| d.leq_coroot_cone(a, b))
        .ok_or_else(|| Error::Internal(format!("no maximum over W for {}", x.format(d))))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralCordiality {
    pub cordiality: Cordiality,
    /// `sigma_1^{-1} v` in the quasi-split form, with `v^{-1}(mu + mu_sigma)`
    /// dominant and `sigma_1^{-1} v` of minimal length.
    pub u: WeylElement,
    /// `sigma_1^{-1} v` for the `v` of minimal length itself; differs from `u`
    /// only when `mu + mu_sigma` is singular.
    pub u_from_minimal_v: WeylElement,
    /// `x gamma` in the quasi-split form.
    pub x_tilde: AffineElement,
}

/// Cordiality for an Omega-twisted Frobenius, evaluated on `x gamma` in the
/// quasi-split form. The statement assumes the residue characteristic does not
/// divide the order of the adjoint fundamental group; that hypothesis is not
/// modeled.
pub fn is_cordial_general(d: &RootDatum, q: &QuantumBruhatGraph, x: &AffineElement) -> Result<GeneralCordiality> {
    let Some(t) = d.omega_twist() else {
        let c = is_cordial(d, q, x)?;
        return Ok(GeneralCordiality {
            u: c.v,
            u_from_minimal_v: c.v,
            cordiality: c,
            x_tilde: x.clone(),
        });
    };
    let wg = d.weyl();
    let sum: Vec<i64> = x.mu.iter().zip(&t.mu_sigma).map(|(a, b)| a + b).collect();
    let (_, v) = d.dominant_representative(&to_rat_vec(&sum));
    let qs = d.quasi_split_form();
    let x_tilde = x.mul(d, &twist_element(d)?);
    let u = x_tilde.canonical_lp(&qs);
    Ok(GeneralCordiality {
        cordiality: cordiality_at(&qs, q, &x_tilde, u),
        u,
        u_from_minimal_v: wg.mul(wg.inverse(t.sigma1), v),
        x_tilde,
    })
}
