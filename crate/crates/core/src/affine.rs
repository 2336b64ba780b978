//! Extended affine Weyl group `W ⋉ X` with elements written `x = w eps^mu`.
//!
//! Multiplication is `(w eps^mu)(w' eps^mu') = w w' eps^{w'^{-1} mu + mu'}` and
//! the action on affine roots is `(w eps^mu)(alpha, k) = (w alpha, k - <mu, alpha>)`.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weyl::{parse_simple, WeylElement};
use crate::{Coweight, Subset};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct AffineRoot {
    pub alpha: usize,
    pub k: i64,
}

impl AffineRoot {
    /// `(alpha, k)` is positive iff `k >= Phi^+(-alpha)`.
    pub fn is_positive(&self, d: &RootDatum) -> bool {
        self.k >= i64::from(!d.is_positive(self.alpha))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineElement {
    pub w: WeylElement,
    pub mu: Coweight,
}

/// Sign of `l(x, alpha)` on each positive root.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignType(pub Vec<i8>);

impl SignType {
    /// Sign on an arbitrary root, using `l(x, -alpha) = -l(x, alpha)`.
    pub fn sign(&self, d: &RootDatum, alpha: usize) -> i8 {
        let s = self.0[alpha % d.num_pos()];
        if d.is_positive(alpha) {
            s
        } else {
            -s
        }
    }
}

impl fmt::Display for SignType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.0 {
            f.write_str(match s {
                1 => "+",
                -1 => "-",
                _ => "0",
            })?;
        }
        Ok(())
    }
}

impl AffineElement {
    pub fn new(w: WeylElement, mu: Coweight) -> AffineElement {
        AffineElement { w, mu }
    }

    pub fn identity(d: &RootDatum) -> AffineElement {
        AffineElement::new(d.weyl().identity(), vec![0; d.dim()])
    }

    pub fn translation(d: &RootDatum, mu: &[i64]) -> AffineElement {
        AffineElement::new(d.weyl().identity(), mu.to_vec())
    }

    pub fn finite(d: &RootDatum, w: WeylElement) -> AffineElement {
        AffineElement::new(w, vec![0; d.dim()])
    }

    pub fn mul(&self, d: &RootDatum, other: &AffineElement) -> AffineElement {
        let wg = d.weyl();
        let shifted = wg.act(wg.inverse(other.w), &self.mu);
        AffineElement::new(
            wg.mul(self.w, other.w),
            shifted.iter().zip(&other.mu).map(|(a, b)| a + b).collect(),
        )
    }

    pub fn inverse(&self, d: &RootDatum) -> AffineElement {
        let wg = d.weyl();
        AffineElement::new(
            wg.inverse(self.w),
            wg.act(self.w, &self.mu).iter().map(|x| -x).collect(),
        )
    }

    pub fn act_affine_root(&self, d: &RootDatum, a: AffineRoot) -> AffineRoot {
        AffineRoot {
            alpha: d.weyl().act_root(self.w, a.alpha),
            k: a.k - d.pairing(&self.mu, a.alpha),
        }
    }

    /// `l(x, alpha) = <mu, alpha> + Phi^+(alpha) - Phi^+(w alpha)`
    pub fn length_functional(&self, d: &RootDatum, alpha: usize) -> i64 {
        let image = d.weyl().act_root(self.w, alpha);
        d.pairing(&self.mu, alpha) + i64::from(d.is_positive(alpha)) - i64::from(d.is_positive(image))
    }

    pub fn length(&self, d: &RootDatum) -> usize {
        (0..d.num_pos())
            .map(|a| self.length_functional(d, a).unsigned_abs() as usize)
            .sum()
    }

    /// `^sigma x = (^sigma w) eps^{sigma mu}`
    pub fn sigma_twist(&self, d: &RootDatum) -> AffineElement {
        AffineElement::new(d.weyl().twist(self.w), d.sigma(&self.mu))
    }

    /// `v` is length positive: `l(x, v alpha) >= 0` for all positive `alpha`.
    pub fn is_length_positive(&self, d: &RootDatum, v: WeylElement) -> bool {
        let wg = d.weyl();
        (0..d.num_pos()).all(|a| self.length_functional(d, wg.act_root(v, a)) >= 0)
    }

    /// Minimal `v` with `v^{-1} mu` dominant.
    pub fn canonical_lp(&self, d: &RootDatum) -> WeylElement {
        d.dominant_representative_int(&self.mu).1
    }

    /// `LP(x)` in breadth-first order from [`Self::canonical_lp`], moving along
    /// `v -> v s_i` whenever `l(x, v alpha_i) = 0`.
    pub fn lp_set(&self, d: &RootDatum) -> Vec<WeylElement> {
        let wg = d.weyl();
        let start = self.canonical_lp(d);
        let mut seen = HashSet::from([start]);
        let mut order = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for i in 0..d.rank() {
                if self.length_functional(d, wg.act_root(v, d.simple_root(i))) == 0 {
                    let next = wg.mul_simple_right(v, i);
                    if seen.insert(next) {
                        order.push(next);
                        queue.push_back(next);
                    }
                }
            }
        }
        order
    }

    pub fn sign_type(&self, d: &RootDatum) -> SignType {
        SignType(
            (0..d.num_pos())
                .map(|a| self.length_functional(d, a).signum() as i8)
                .collect(),
        )
    }

    pub fn is_shrunken(&self, d: &RootDatum) -> bool {
        (0..d.num_pos()).all(|a| self.length_functional(d, a) != 0)
    }

    /// `eta_sigma(x) = (^{sigma^{-1}} v)^{-1} w v` for `v = canonical_lp(x)`.
    pub fn eta_sigma(&self, d: &RootDatum) -> WeylElement {
        let wg = d.weyl();
        let v = self.canonical_lp(d);
        wg.mul(wg.mul(wg.inverse(wg.twist_inv(v)), self.w), v)
    }

    /// `v^{-1} ^sigma(w v)`
    pub fn twisted_conjugate(&self, d: &RootDatum, v: WeylElement) -> WeylElement {
        let wg = d.weyl();
        wg.mul(wg.inverse(v), wg.twist(wg.mul(self.w, v)))
    }

    pub fn length_additive(&self, d: &RootDatum, other: &AffineElement) -> bool {
        self.mul(d, other).length(d) == self.length(d) + other.length(d)
    }

    /// Fundamental via orbits of `sigma o w` on the roots: `l(x, .)` never
    /// takes both signs on one orbit.
    pub fn is_fundamental(&self, d: &RootDatum) -> bool {
        let wg = d.weyl();
        let mut seen = vec![false; d.num_roots()];
        for start in 0..d.num_roots() {
            if seen[start] {
                continue;
            }
            let (mut pos, mut neg) = (false, false);
            let mut a = start;
            while !seen[a] {
                seen[a] = true;
                let l = self.length_functional(d, a);
                pos |= l > 0;
                neg |= l < 0;
                a = d.sigma_root(wg.act_root(self.w, a));
            }
            if pos && neg {
                return false;
            }
        }
        true
    }

    /// Witness `(v, J)` for the Levi characterization of fundamental elements:
    /// `v` length positive, `J = supp_sigma(v^{-1} ^sigma(w v))` and
    /// `l(x, v alpha) = 0` for all roots `alpha` of `J`.
    pub fn fundamental_witness(&self, d: &RootDatum) -> Option<(WeylElement, Subset)> {
        let wg = d.weyl();
        self.lp_set(d).into_iter().find_map(|v| {
            let j = d.sigma_closure(&wg.supp(self.twisted_conjugate(d, v)));
            let flat = (0..d.num_pos())
                .filter(|&a| in_subsystem(d, a, &j))
                .all(|a| self.length_functional(d, wg.act_root(v, a)) == 0);
            flat.then_some((v, j))
        })
    }

    /// `l(x ^sigma x ... ^{sigma^{n-1}} x) = n l(x)` for `n = 1..=max_n`.
    pub fn twisted_powers_additive(&self, d: &RootDatum, max_n: usize) -> bool {
        let l = self.length(d);
        let mut prod = self.clone();
        let mut factor = self.clone();
        for n in 1..=max_n {
            if prod.length(d) != n * l {
                return false;
            }
            factor = factor.sigma_twist(d);
            prod = prod.mul(d, &factor);
        }
        true
    }

    /// Order of `sigma o w` acting on the coweight lattice.
    pub fn sigma_w_order(&self, d: &RootDatum) -> usize {
        let wg = d.weyl();
        let e: Vec<Vec<i64>> = (0..d.dim()).map(|k| crate::root_datum::unit(d.dim(), k)).collect();
        let step = |v: &[i64]| d.sigma(&wg.act(self.w, v));
        let mut cur = e.clone();
        let mut n = 0;
        loop {
            cur = cur.iter().map(|v| step(v)).collect();
            n += 1;
            if cur == e {
                return n;
            }
        }
    }

    /// Class of the translation part in `X / Z Phi^vee`; labels the Omega component.
    pub fn omega_class(&self, d: &RootDatum) -> Vec<i64> {
        d.omega_class(&self.mu)
    }

    /// Canonical textual form `w: s1 s2 ; mu: 1,0,-1`.
    pub fn format(&self, d: &RootDatum) -> String {
        let mu: Vec<String> = self.mu.iter().map(|x| x.to_string()).collect();
        format!("w: {} ; mu: {}", d.weyl().format(self.w), mu.join(","))
    }

    /// Parses `w: s1 s2 ; mu: 1,0,-1`, or `t[1,0,-1] s1 s0` meaning the
    /// product of the listed affine reflections followed by `eps^mu`.
    pub fn parse(d: &RootDatum, text: &str) -> Result<AffineElement> {
        let text = text.trim();
        if text.starts_with("w:") || text.starts_with("mu:") {
            let mut w = d.weyl().identity();
            let mut mu = vec![0; d.dim()];
            for part in text.split(';') {
                let part = part.trim();
                if let Some(rest) = part.strip_prefix("w:") {
                    w = d.weyl().parse(rest)?;
                } else if let Some(rest) = part.strip_prefix("mu:") {
                    mu = parse_coweight(d, rest)?;
                } else if !part.is_empty() {
                    return Err(Error::Parse(format!("unexpected segment `{part}`")));
                }
            }
            return Ok(AffineElement::new(w, mu));
        }
        let (mu, rest) = match text.strip_prefix("t[") {
            Some(r) => {
                let close = r
                    .find(']')
                    .ok_or_else(|| Error::Parse("missing `]` after `t[`".into()))?;
                (parse_coweight(d, &r[..close])?, &r[close + 1..])
            }
            None => (vec![0; d.dim()], text),
        };
        let simples = affine_simple_reflections(d);
        let mut x = AffineElement::identity(d);
        for tok in rest.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let s = if let Some(c) = tok.strip_prefix("s0") {
                let comp = if c.is_empty() {
                    if d.components().len() != 1 {
                        return Err(Error::Parse(
                            "`s0` is ambiguous with several components; use `s0:<c>`".into(),
                        ));
                    }
                    0
                } else {
                    let idx: usize = c
                        .strip_prefix(':')
                        .and_then(|n| n.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("bad token `{tok}`")))?;
                    if idx == 0 || idx > d.components().len() {
                        return Err(Error::Parse(format!("component in `{tok}` out of range")));
                    }
                    idx - 1
                };
                simples[d.rank() + comp].clone()
            } else {
                simples[parse_simple(tok, d.rank())?].clone()
            };
            x = x.mul(d, &s);
        }
        Ok(x.mul(d, &AffineElement::translation(d, &mu)))
    }
}

pub(crate) fn parse_coweight(d: &RootDatum, text: &str) -> Result<Coweight> {
    let mu: Vec<i64> = text
        .split(',')
        .map(|t| t.trim())
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad coweight entry `{t}`")))
        })
        .collect::<Result<_>>()?;
    if mu.len() != d.dim() {
        return Err(Error::Parse(format!(
            "coweight needs {} entries, found {}",
            d.dim(),
            mu.len()
        )));
    }
    Ok(mu)
}

/// Root `alpha` lies in the root subsystem spanned by `j`.
pub fn in_subsystem(d: &RootDatum, alpha: usize, j: &[bool]) -> bool {
    d.root_simple_coords(alpha)
        .iter()
        .enumerate()
        .all(|(i, &c)| c == 0 || j[i])
}

/// Simple affine reflections: `s_1, ..., s_r` followed by one
/// `s_0 = s_theta eps^{-theta^vee}` per irreducible component.
pub fn affine_simple_reflections(d: &RootDatum) -> Vec<AffineElement> {
    let wg = d.weyl();
    let mut out: Vec<AffineElement> = (0..d.rank())
        .map(|i| AffineElement::finite(d, wg.simple(i)))
        .collect();
    for &theta in d.highest_roots() {
        let s = d.reflection(theta).expect("highest root is a root");
        out.push(AffineElement::new(s, d.coroot(theta).iter().map(|x| -x).collect()));
    }
    out
}

pub fn affine_simple_label(d: &RootDatum, k: usize) -> String {
    if k < d.rank() {
        format!("s{}", k + 1)
    } else if d.components().len() == 1 {
        "s0".into()
    } else {
        format!("s0:{}", k - d.rank() + 1)
    }
}

/// Adjusts `v` until it is positive for the root functional `phi`, checking the
/// axioms first and the strict decrease of inversions at every step.
pub fn adjustment_descent(
    d: &RootDatum,
    phi: &dyn Fn(usize) -> i64,
    v: WeylElement,
) -> Result<WeylElement> {
    for a in 0..d.num_roots() {
        if (phi(a) + phi(d.negate(a))).abs() > 1 {
            return Err(Error::NotRootFunctional(format!("|phi(a) + phi(-a)| > 1 at root {a}")));
        }
        for b in 0..d.num_roots() {
            if let Some(s) = root_sum(d, a, b) {
                if (phi(s) - phi(a) - phi(b)).abs() > 1 {
                    return Err(Error::NotRootFunctional(format!(
                        "additivity fails at roots {a}, {b}"
                    )));
                }
            }
        }
    }
    let wg = d.weyl();
    let inversions = |v: WeylElement| -> Vec<usize> {
        (0..d.num_roots())
            .filter(|&a| {
                let p = phi(wg.act_root(v, a));
                if d.is_positive(a) {
                    p < 0
                } else {
                    p > 0
                }
            })
            .collect()
    };
    let mut v = v;
    let mut inv = inversions(v);
    while let Some(&a) = inv.first() {
        let next = wg.mul(v, d.reflection(a)?);
        let next_inv = inversions(next);
        if next_inv.len() >= inv.len() {
            return Err(Error::NotRootFunctional(
                "adjustment did not decrease the inversion count".into(),
            ));
        }
        v = next;
        inv = next_inv;
    }
    Ok(v)
}

/// Index of `alpha + beta` when it is a root.
pub fn root_sum(d: &RootDatum, a: usize, b: usize) -> Option<usize> {
    let s: Vec<i64> = d
        .root_simple_coords(a)
        .iter()
        .zip(d.root_simple_coords(b))
        .map(|(x, y)| x + y)
        .collect();
    d.root_index(&s).ok()
}

/// `x = s_{j_1} ... s_{j_k} tau` with `tau` of length zero; returns the
/// letters (indices into [`affine_simple_reflections`]) and `tau`.
pub fn reduced_word(d: &RootDatum, x: &AffineElement) -> (Vec<usize>, AffineElement) {
    let simples = affine_simple_reflections(d);
    let mut letters = Vec::new();
    let mut cur = x.clone();
    let mut len = cur.length(d);
    while len > 0 {
        let (k, next) = simples
            .iter()
            .enumerate()
            .map(|(k, s)| (k, s.mul(d, &cur)))
            .find(|(_, y)| y.length(d) < len)
            .expect("positive length element has a left descent");
        letters.push(k);
        cur = next;
        len -= 1;
    }
    (letters, cur)
}

/// Bruhat order on the extended affine Weyl group, via the lifting property.
pub fn bruhat_leq_affine(d: &RootDatum, y: &AffineElement, x: &AffineElement) -> bool {
    let simples = affine_simple_reflections(d);
    let (mut y, mut x) = (y.clone(), x.clone());
    let (mut ly, mut lx) = (y.length(d), x.length(d));
    loop {
        if ly > lx {
            return false;
        }
        if lx == 0 {
            return y == x;
        }
        let s = simples
            .iter()
            .find(|s| s.mul(d, &x).length(d) < lx)
            .expect("left descent exists");
        let sy = s.mul(d, &y);
        if sy.length(d) < ly {
            y = sy;
            ly -= 1;
        }
        x = s.mul(d, &x);
        lx -= 1;
    }
}

/// All `y <= x`, from the subword closure of a reduced word, sorted by length
/// and then lexicographically.
pub fn lower_interval(d: &RootDatum, x: &AffineElement, max_size: usize) -> Result<Vec<AffineElement>> {
    let simples = affine_simple_reflections(d);
    let (letters, tau) = reduced_word(d, x);
    let mut set: HashSet<AffineElement> = HashSet::from([tau]);
    for &k in letters.iter().rev() {
        let added: Vec<AffineElement> = set.iter().map(|y| simples[k].mul(d, y)).collect();
        set.extend(added);
        if set.len() > max_size {
            return Err(Error::Budget(format!(
                "Bruhat interval exceeds {max_size} elements"
            )));
        }
    }
    let mut out: Vec<(usize, AffineElement)> = set.into_iter().map(|y| (y.length(d), y)).collect();
    out.sort();
    Ok(out.into_iter().map(|(_, y)| y).collect())
}

/// One length-zero element per Omega component, with free coordinates of
/// `X / Z Phi^vee` ranging over `-bound..=bound`.
pub fn omega_elements(d: &RootDatum, bound: i64) -> Vec<AffineElement> {
    let q = d.omega_quotient();
    let mut classes: Vec<Vec<i64>> = vec![Vec::new()];
    for &m in q.invariant_factors() {
        let range: Vec<i64> = if m == 0 { (-bound..=bound).collect() } else { (0..m).collect() };
        classes = classes
            .into_iter()
            .flat_map(|p| {
                range.iter().map(move |&c| {
                    let mut p = p.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    let simples = affine_simple_reflections(d);
    classes
        .into_iter()
        .map(|c| {
            let mut x = AffineElement::translation(d, &q.lift(&c));
            let mut len = x.length(d);
            while len > 0 {
                x = simples
                    .iter()
                    .map(|s| s.mul(d, &x))
                    .find(|y| y.length(d) < len)
                    .expect("left descent exists");
                len -= 1;
            }
            x
        })
        .collect()
}

/// All elements of length at most `max_len` in the listed Omega components,
/// ordered by component, then length, then lexicographically.
pub fn elements_up_to_length(d: &RootDatum, max_len: usize, bound: i64) -> Vec<AffineElement> {
    let simples = affine_simple_reflections(d);
    let mut out = Vec::new();
    for tau in omega_elements(d, bound) {
        let mut level = vec![tau];
        for len in 0..=max_len {
            let mut sorted = level.clone();
            sorted.sort();
            out.extend(sorted.iter().cloned());
            if len == max_len {
                break;
            }
            let mut next: HashSet<AffineElement> = HashSet::new();
            for y in &level {
                for s in &simples {
                    let z = s.mul(d, y);
                    if z.length(d) == len + 1 {
                        next.insert(z);
                    }
                }
            }
            level = next.into_iter().collect();
        }
    }
    out
}

#[cfg(test)]
mod tests;
