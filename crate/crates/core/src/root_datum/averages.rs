use num_traits::{Signed, Zero};

use super::{to_rat_vec, RootDatum};
use crate::error::{Error, Result};
use crate::linalg;
use crate::weyl::WeylElement;
use crate::{Coweight, Rat, RatCoweight, Subset};

/// Class in `X / (Z Phi^vee + (1 - sigma) X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pi1Class {
    pub coords: Vec<i64>,
}

/// Class in `X / (1 - sigma) X` with its sigma-average.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GammaClass {
    pub coords: Vec<i64>,
    /// Canonical lift to `X`.
    pub rep: Coweight,
    pub avg: RatCoweight,
}

impl RootDatum {
    pub fn avg_sigma(&self, mu: &[Rat]) -> RatCoweight {
        let n = self.sigma_order();
        let mut acc = vec![Rat::zero(); self.dim()];
        let mut cur = mu.to_vec();
        for _ in 0..n {
            cur = self.sigma_rat(&cur);
            for (a, c) in acc.iter_mut().zip(&cur) {
                *a += c;
            }
        }
        acc.into_iter().map(|a| a / n as i64).collect()
    }

    /// Average over `W_J`, computed as the projection
    /// `mu - sum_{beta in J} c_beta beta^vee` orthogonal to the roots of `J`.
    pub fn avg_j(&self, mu: &[Rat], j: &[bool]) -> RatCoweight {
        let idx: Vec<usize> = (0..self.rank()).filter(|&i| j[i]).collect();
        if idx.is_empty() {
            return mu.to_vec();
        }
        let cartan = self.cartan();
        let sub: Vec<Vec<Rat>> = idx
            .iter()
            .map(|&b| idx.iter().map(|&a| Rat::from_integer(cartan[b][a])).collect())
            .collect();
        let inv = linalg::invert(&sub).expect("Cartan submatrix is invertible");
        let p: Vec<Rat> = idx
            .iter()
            .map(|&a| self.pairing_rat(mu, self.simple_root(a)))
            .collect();
        // solve sum_b c_b C[b][a] = p_a
        let mut out = mu.to_vec();
        for (bi, &b) in idx.iter().enumerate() {
            let c = (0..idx.len()).fold(Rat::zero(), |s, ai| s + p[ai] * inv[ai][bi]);
            let cor = self.coroot(self.simple_root(b));
            for t in 0..self.dim() {
                out[t] -= c * cor[t];
            }
        }
        out
    }

    /// `pi_J = avg_J o avg_sigma` for sigma-stable `J`.
    pub fn pi_j(&self, mu: &[Rat], j: &[bool]) -> Result<RatCoweight> {
        if self.sigma_subset(j) != j {
            return Err(Error::NotSigmaStable(
                (0..self.rank()).filter(|&i| j[i]).collect(),
            ));
        }
        Ok(self.avg_j(&self.avg_sigma(mu), j))
    }

    /// Maximally `mu`-improving subset, built greedily.
    pub fn mu_improving_max(&self, mu: &[Rat]) -> Subset {
        let mut j = vec![false; self.rank()];
        let mut cur = mu.to_vec();
        while let Some(i) = (0..self.rank())
            .find(|&i| !j[i] && self.pairing_rat(&cur, self.simple_root(i)).is_negative())
        {
            j[i] = true;
            cur = self.avg_j(mu, &j);
        }
        j
    }

    pub fn conv_prime(&self, mu: &[Rat]) -> RatCoweight {
        self.avg_j(mu, &self.mu_improving_max(mu))
    }

    pub fn conv(&self, mu: &[Rat]) -> RatCoweight {
        self.conv_prime(&self.avg_sigma(mu))
    }

    pub fn is_dominant(&self, mu: &[Rat]) -> bool {
        (0..self.rank()).all(|i| !self.pairing_rat(mu, self.simple_root(i)).is_negative())
    }

    /// Dominant `nu = v^{-1} mu` with `v` of minimal length.
    pub fn dominant_representative(&self, mu: &[Rat]) -> (RatCoweight, WeylElement) {
        let w = self.weyl();
        let mut v = w.identity();
        let mut cur = mu.to_vec();
        while let Some(i) = (0..self.rank())
            .find(|&i| self.pairing_rat(&cur, self.simple_root(i)).is_negative())
        {
            cur = w.act_rat(w.simple(i), &cur);
            v = w.mul_simple_right(v, i);
        }
        (cur, v)
    }

    pub fn dominant_representative_int(&self, mu: &[i64]) -> (Coweight, WeylElement) {
        let (nu, v) = self.dominant_representative(&to_rat_vec(mu));
        (super::to_int_vec(&nu).expect("integral"), v)
    }

    /// `mu <= mu2`: the difference is a nonnegative rational combination of
    /// simple coroots.
    pub fn leq_coroot_cone(&self, mu: &[Rat], mu2: &[Rat]) -> bool {
        let d: Vec<Rat> = mu2.iter().zip(mu).map(|(a, b)| a - b).collect();
        match self.coroot_coords(&d) {
            Some(c) => c.iter().all(|x| !x.is_negative()),
            None => false,
        }
    }

    pub fn pi1_class(&self, mu: &[i64]) -> Pi1Class {
        Pi1Class {
            coords: self.pi1_quotient().reduce(mu),
        }
    }

    pub fn gamma_class(&self, mu: &[i64]) -> GammaClass {
        let q = self.gamma_quotient();
        let coords = q.reduce(mu);
        let rep = q.lift(&coords);
        let avg = self.avg_sigma(&to_rat_vec(&rep));
        GammaClass { coords, rep, avg }
    }

    pub fn leq_gamma(&self, l1: &GammaClass, l2: &GammaClass) -> bool {
        self.leq_coroot_cone(&l1.avg, &l2.avg)
    }

    /// Image of a Gamma-class in the Kottwitz group.
    pub fn gamma_to_pi1(&self, l: &GammaClass) -> Pi1Class {
        self.pi1_class(&l.rep)
    }
}
