//! Root data with a Frobenius diagram automorphism.
//!
//! All vectors are expressed in the basis of the coweight lattice `X`:
//! coweights and coroots are integer column vectors, roots are integer
//! linear functionals on `X`, and the pairing is the dot product.

mod averages;
pub mod cartan;
pub mod config;

use std::collections::HashMap;

use num_traits::Zero;

pub use averages::{GammaClass, Pi1Class};
pub use cartan::{CartanType, Component};
pub use config::{ComponentSpec, Config, FrobeniusSpec, TwistSpec};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMat, Quotient, RatMat};
use crate::weyl::{WeylElement, WeylGroup};
use crate::{Coweight, Rat, RatCoweight, Subset};

/// Length-zero twist `gamma = eps^{mu_sigma} sigma_1` of a non quasi-split Frobenius.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaTwist {
    pub sigma1: WeylElement,
    pub mu_sigma: Coweight,
}

#[derive(Debug, Clone)]
pub struct RootDatum {
    config: Config,
    components: Vec<Component>,
    rank: usize,
    dim: usize,
    cartan: IntMat,
    cartan_inv: RatMat,
    root_simple: Vec<Vec<i64>>,
    coroot_simple: Vec<Vec<i64>>,
    roots: Vec<Vec<i64>>,
    coroots: Vec<Vec<i64>>,
    num_pos: usize,
    root_lookup: HashMap<Vec<i64>, usize>,
    simple_index: Vec<usize>,
    two_rho: Vec<i64>,
    highest: Vec<usize>,
    sigma_perm: Vec<usize>,
    sigma_roots: Vec<usize>,
    sigma_mat: IntMat,
    sigma_order: usize,
    twist: Option<OmegaTwist>,
    weyl: WeylGroup,
    reflections: Vec<WeylElement>,
    omega: Quotient,
    gamma: Quotient,
    pi1: Quotient,
}

impl RootDatum {
    pub fn from_json(text: &str) -> Result<RootDatum> {
        RootDatum::new(Config::from_json(text)?)
    }

    pub fn new(config: Config) -> Result<RootDatum> {
        let cfg_err = |field: &str, message: String| Error::InvalidConfig {
            field: field.into(),
            message,
        };
        if config.components.is_empty() {
            return Err(cfg_err("components", "at least one component is required".into()));
        }
        let mut components = Vec::new();
        let mut offset = 0;
        for spec in &config.components {
            let kind: CartanType = spec.kind.parse()?;
            cartan::cartan_matrix(kind, spec.rank)?;
            components.push(Component {
                kind,
                rank: spec.rank,
                offset,
            });
            offset += spec.rank;
        }
        let rank = offset;
        let mut cartan = vec![vec![0i64; rank]; rank];
        for c in &components {
            let block = cartan::cartan_matrix(c.kind, c.rank)?;
            for i in 0..c.rank {
                for j in 0..c.rank {
                    cartan[c.offset + i][c.offset + j] = block[i][j];
                }
            }
        }
        let cartan_inv = linalg::invert(&linalg::to_rat(&cartan))
            .ok_or_else(|| Error::InvalidDatum("singular Cartan matrix".into()))?;

        let (root_simple, coroot_simple, num_pos) = generate_roots(&cartan);
        let root_lookup: HashMap<Vec<i64>, usize> = root_simple
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let simple_index: Vec<usize> = (0..rank)
            .map(|i| root_lookup[&unit(rank, i)])
            .collect();

        // ambient space: coroots and roots as vectors with dot-product pairing
        let lattice = config.lattice.as_str();
        let (cor_amb, root_amb, basis): (RatMat, RatMat, RatMat) = match lattice {
            "gl" => {
                if components.len() != 1 || components[0].kind != CartanType::A {
                    return Err(cfg_err(
                        "lattice",
                        "`gl` requires a single component of type A".into(),
                    ));
                }
                let m = rank + 1;
                let v: RatMat = (0..rank)
                    .map(|i| {
                        (0..m)
                            .map(|t| Rat::from_integer(i64::from(t == i) - i64::from(t == i + 1)))
                            .collect()
                    })
                    .collect();
                (v.clone(), v, linalg::to_rat(&linalg::identity_int(m)))
            }
            "sc" | "simply-connected" | "adjoint" | "custom" => {
                let cor = linalg::to_rat(&linalg::identity_int(rank));
                let roots = linalg::transpose(&linalg::to_rat(&cartan));
                let basis = match lattice {
                    "adjoint" => cartan_inv.clone(),
                    "custom" => {
                        let rows = config.lattice_basis.as_ref().ok_or_else(|| {
                            cfg_err("lattice_basis", "required for `custom` lattices".into())
                        })?;
                        if rows.len() != rank || rows.iter().any(|r| r.len() != rank) {
                            return Err(cfg_err(
                                "lattice_basis",
                                format!("expected {rank} rows of length {rank}"),
                            ));
                        }
                        linalg::mat_mul_rat(&linalg::to_rat(rows), &cartan_inv)
                    }
                    _ => cor.clone(),
                };
                (cor, roots, basis)
            }
            other => {
                return Err(cfg_err(
                    "lattice",
                    format!("unknown lattice `{other}` (expected adjoint, sc, gl or custom)"),
                ))
            }
        };
        if config.lattice_basis.is_some() && lattice != "custom" {
            return Err(cfg_err(
                "lattice_basis",
                "only allowed with lattice `custom`".into(),
            ));
        }
        let dim = basis.len();
        let basis_inv = linalg::invert(&basis)
            .ok_or_else(|| cfg_err("lattice_basis", "basis is singular".into()))?;
        let x_coroots: Vec<Vec<i64>> = cor_amb
            .iter()
            .map(|c| row_times(c, &basis_inv))
            .map(|v| to_int_vec(&v))
            .collect::<Option<_>>()
            .ok_or_else(|| {
                Error::InvalidDatum("coroot lattice is not contained in the coweight lattice".into())
            })?;
        let x_roots: Vec<Vec<i64>> = root_amb
            .iter()
            .map(|a| {
                basis
                    .iter()
                    .map(|b| b.iter().zip(a).fold(Rat::zero(), |s, (x, y)| s + x * y))
                    .collect::<Vec<Rat>>()
            })
            .map(|v| to_int_vec(&v))
            .collect::<Option<_>>()
            .ok_or_else(|| Error::InvalidDatum("roots are not integral on the coweight lattice".into()))?;

        let combine = |coeffs: &[i64], gens: &[Vec<i64>]| -> Vec<i64> {
            (0..dim)
                .map(|t| coeffs.iter().zip(gens).map(|(c, g)| c * g[t]).sum())
                .collect()
        };
        let roots: Vec<Vec<i64>> = root_simple.iter().map(|r| combine(r, &x_roots)).collect();
        let coroots: Vec<Vec<i64>> = coroot_simple
            .iter()
            .map(|c| combine(c, &x_coroots))
            .collect();
        let two_rho: Vec<i64> = (0..dim)
            .map(|t| roots[..num_pos].iter().map(|r| r[t]).sum())
            .collect();
        let highest: Vec<usize> = components
            .iter()
            .map(|c| {
                (0..num_pos)
                    .filter(|&k| {
                        root_simple[k]
                            .iter()
                            .enumerate()
                            .all(|(i, &x)| x == 0 || (c.offset..c.offset + c.rank).contains(&i))
                    })
                    .max_by_key(|&k| root_simple[k].iter().sum::<i64>())
                    .expect("component has roots")
            })
            .collect();

        // Frobenius
        let frob = config.frobenius.clone().unwrap_or_default();
        let sigma_perm: Vec<usize> = match &frob.perm {
            None => (0..rank).collect(),
            Some(p) => {
                if p.len() != rank {
                    return Err(cfg_err("frobenius.perm", format!("expected {rank} entries")));
                }
                let p0: Vec<usize> = p.iter().map(|&i| i.wrapping_sub(1)).collect();
                let mut seen = vec![false; rank];
                for &i in &p0 {
                    if i >= rank || seen[i] {
                        return Err(cfg_err(
                            "frobenius.perm",
                            "must be a permutation of 1..=rank".into(),
                        ));
                    }
                    seen[i] = true;
                }
                p0
            }
        };
        for i in 0..rank {
            for j in 0..rank {
                if cartan[sigma_perm[i]][sigma_perm[j]] != cartan[i][j] {
                    return Err(cfg_err(
                        "frobenius.perm",
                        "does not preserve the Cartan matrix".into(),
                    ));
                }
            }
        }
        let is_identity = sigma_perm.iter().enumerate().all(|(i, &p)| i == p);
        let m = cor_amb[0].len();
        let ambient_sigma = |y: &[Rat]| -> Vec<Rat> {
            if lattice == "gl" {
                if is_identity {
                    y.to_vec()
                } else {
                    (0..m).map(|t| -y[m - 1 - t]).collect()
                }
            } else {
                let mut out = vec![Rat::zero(); m];
                for i in 0..m {
                    out[sigma_perm[i]] = y[i];
                }
                out
            }
        };
        if lattice == "gl" && !is_identity && sigma_perm.iter().enumerate().any(|(i, &p)| p != rank - 1 - i) {
            return Err(cfg_err("frobenius.perm", "unsupported permutation for `gl`".into()));
        }
        let mut sigma_mat = vec![vec![0i64; dim]; dim];
        for k in 0..dim {
            let image = to_int_vec(&row_times(&ambient_sigma(&basis[k]), &basis_inv)).ok_or_else(
                || cfg_err("frobenius.perm", "does not preserve the coweight lattice".into()),
            )?;
            for j in 0..dim {
                sigma_mat[j][k] = image[j];
            }
        }
        for i in 0..rank {
            let pi = sigma_perm[i];
            let mc = mat_vec(&sigma_mat, &x_coroots[i]);
            let am: Vec<i64> = (0..dim)
                .map(|k| (0..dim).map(|j| x_roots[pi][j] * sigma_mat[j][k]).sum())
                .collect();
            if mc != x_coroots[pi] || am != x_roots[i] {
                return Err(Error::InvalidDatum(
                    "Frobenius matrix incompatible with the diagram permutation".into(),
                ));
            }
        }
        let sigma_roots: Vec<usize> = root_simple
            .iter()
            .map(|r| {
                let mut img = vec![0i64; rank];
                for i in 0..rank {
                    img[sigma_perm[i]] = r[i];
                }
                root_lookup[&img]
            })
            .collect();
        let sigma_order = {
            let id = linalg::identity_int(dim);
            let mut p = sigma_mat.clone();
            let mut n = 1;
            while p != id {
                p = linalg::mat_mul_int(&sigma_mat, &p);
                n += 1;
                if n > 64 {
                    return Err(Error::InvalidDatum("Frobenius has infinite order".into()));
                }
            }
            n
        };

        // Weyl group
        let simple_perms: Vec<Vec<usize>> = (0..rank)
            .map(|i| {
                root_simple
                    .iter()
                    .map(|b| {
                        let c: i64 = (0..rank).map(|j| cartan[i][j] * b[j]).sum();
                        let mut img = b.clone();
                        img[i] -= c;
                        root_lookup[&img]
                    })
                    .collect()
            })
            .collect();
        let simple_mats: Vec<Vec<i64>> = (0..rank)
            .map(|i| {
                (0..dim * dim)
                    .map(|k| {
                        let (r, c) = (k / dim, k % dim);
                        i64::from(r == c) - x_coroots[i][r] * x_roots[i][c]
                    })
                    .collect()
            })
            .collect();
        let weyl = WeylGroup::generate(
            &simple_perms,
            &simple_mats,
            num_pos,
            dim,
            &sigma_roots,
            config.max_weyl_order,
        )?;
        let mut reflections = vec![None; num_pos];
        for w in weyl.elements() {
            for (i, &si) in simple_index.iter().enumerate() {
                let beta = weyl.act_root(w, si);
                if beta < num_pos && reflections[beta].is_none() {
                    let s = weyl.mul(weyl.mul_simple_right(w, i), weyl.inverse(w));
                    reflections[beta] = Some(s);
                }
            }
        }
        let reflections: Vec<WeylElement> = reflections.into_iter().map(|r| r.unwrap()).collect();

        let one_minus_sigma: Vec<Vec<i64>> = (0..dim)
            .map(|k| (0..dim).map(|j| i64::from(j == k) - sigma_mat[j][k]).collect())
            .collect();
        let omega = Quotient::new(dim, &x_coroots);
        let gamma = Quotient::new(dim, &one_minus_sigma);
        let mut rels = x_coroots.clone();
        rels.extend(one_minus_sigma.iter().cloned());
        let pi1 = Quotient::new(dim, &rels);

        let mut datum = RootDatum {
            config,
            components,
            rank,
            dim,
            cartan,
            cartan_inv,
            root_simple,
            coroot_simple,
            roots,
            coroots,
            num_pos,
            root_lookup,
            simple_index,
            two_rho,
            highest,
            sigma_perm,
            sigma_roots,
            sigma_mat,
            sigma_order,
            twist: None,
            weyl,
            reflections,
            omega,
            gamma,
            pi1,
        };
        if let Some(t) = frob.twist {
            datum.twist = Some(datum.build_twist(&t)?);
        }
        Ok(datum)
    }

    fn build_twist(&self, t: &TwistSpec) -> Result<OmegaTwist> {
        let field = |m: String| Error::InvalidConfig {
            field: "frobenius.twist".into(),
            message: m,
        };
        if t.mu_sigma.len() != self.dim {
            return Err(field(format!("mu_sigma must have {} entries", self.dim)));
        }
        let word: Vec<usize> = t
            .sigma1_word
            .iter()
            .map(|&i| {
                if i == 0 || i > self.rank {
                    Err(field(format!("sigma1_word letter {i} out of range")))
                } else {
                    Ok(i - 1)
                }
            })
            .collect::<Result<_>>()?;
        let sigma1 = self.weyl.from_word(&word);
        // gamma = sigma1 eps^{sigma1^{-1} mu_sigma} must have length zero
        let lam = self.weyl.act(self.weyl.inverse(sigma1), &t.mu_sigma);
        let len: i64 = (0..self.num_pos)
            .map(|a| {
                let image = self.weyl.act_root(sigma1, a);
                (self.pairing(&lam, a) + 1 - i64::from(image < self.num_pos)).abs()
            })
            .sum();
        if len != 0 {
            return Err(field(format!(
                "gamma = eps^mu_sigma sigma1 has length {len}, expected 0"
            )));
        }
        Ok(OmegaTwist {
            sigma1,
            mu_sigma: t.mu_sigma.clone(),
        })
    }

    /// Copy of this datum with the Omega twist removed (the quasi-split inner form).
    pub fn quasi_split_form(&self) -> RootDatum {
        let mut d = self.clone();
        d.twist = None;
        if let Some(f) = d.config.frobenius.as_mut() {
            f.twist = None;
        }
        d
    }

    pub fn config(&self) -> &Config {
        &self.config
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// Semisimple rank.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Rank of the coweight lattice.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn cartan(&self) -> &IntMat {
        &self.cartan
    }

    pub fn weyl(&self) -> &WeylGroup {
        &self.weyl
    }

    pub fn num_pos(&self) -> usize {
        self.num_pos
    }

    pub fn num_roots(&self) -> usize {
        2 * self.num_pos
    }

    pub fn is_positive(&self, alpha: usize) -> bool {
        alpha < self.num_pos
    }

    pub fn negate(&self, alpha: usize) -> usize {
        (alpha + self.num_pos) % (2 * self.num_pos)
    }

    /// Root index of the `i`-th simple root.
    pub fn simple_root(&self, i: usize) -> usize {
        self.simple_index[i]
    }

    /// Root as a functional on the coweight lattice basis.
    pub fn root(&self, alpha: usize) -> &[i64] {
        &self.roots[alpha]
    }

    pub fn coroot(&self, alpha: usize) -> &[i64] {
        &self.coroots[alpha]
    }

    /// Coordinates of a root in the simple roots.
    pub fn root_simple_coords(&self, alpha: usize) -> &[i64] {
        &self.root_simple[alpha]
    }

    pub fn coroot_simple_coords(&self, alpha: usize) -> &[i64] {
        &self.coroot_simple[alpha]
    }

    pub fn root_index(&self, simple_coords: &[i64]) -> Result<usize> {
        self.root_lookup
            .get(simple_coords)
            .copied()
            .ok_or_else(|| Error::UnknownRoot(format!("{simple_coords:?}")))
    }

    pub fn height(&self, alpha: usize) -> i64 {
        self.root_simple[alpha].iter().sum()
    }

    pub fn highest_roots(&self) -> &[usize] {
        &self.highest
    }

    /// Component containing the support of a root.
    pub fn component_of(&self, alpha: usize) -> usize {
        let i = self.root_simple[alpha]
            .iter()
            .position(|&c| c != 0)
            .expect("roots are nonzero");
        self.components
            .iter()
            .position(|c| (c.offset..c.offset + c.rank).contains(&i))
            .unwrap()
    }

    pub fn two_rho(&self) -> &[i64] {
        &self.two_rho
    }

    /// `<mu, alpha>` for an integral coweight.
    pub fn pairing(&self, mu: &[i64], alpha: usize) -> i64 {
        self.roots[alpha].iter().zip(mu).map(|(a, m)| a * m).sum()
    }

    pub fn pairing_rat(&self, mu: &[Rat], alpha: usize) -> Rat {
        self.roots[alpha]
            .iter()
            .zip(mu)
            .fold(Rat::zero(), |s, (&a, &m)| s + m * a)
    }

    pub fn pairing_two_rho(&self, mu: &[i64]) -> i64 {
        self.two_rho.iter().zip(mu).map(|(a, m)| a * m).sum()
    }

    pub fn pairing_two_rho_rat(&self, mu: &[Rat]) -> Rat {
        self.two_rho
            .iter()
            .zip(mu)
            .fold(Rat::zero(), |s, (&a, &m)| s + m * a)
    }

    /// `<beta^vee, alpha>`
    pub fn coroot_pairing(&self, beta: usize, alpha: usize) -> i64 {
        self.pairing(&self.coroots[beta].clone(), alpha)
    }

    /// Reflection `s_alpha`; `s_alpha = s_{-alpha}`.
    pub fn reflection(&self, alpha: usize) -> Result<WeylElement> {
        if alpha >= self.num_roots() {
            return Err(Error::UnknownRoot(format!("index {alpha}")));
        }
        Ok(self.reflections[alpha % self.num_pos])
    }

    /// Diagram permutation of the simple roots (0-based).
    pub fn sigma_perm(&self) -> &[usize] {
        &self.sigma_perm
    }

    pub fn sigma_is_trivial(&self) -> bool {
        self.sigma_order == 1
    }

    pub fn sigma_root(&self, alpha: usize) -> usize {
        self.sigma_roots[alpha]
    }

    pub fn sigma_matrix(&self) -> &IntMat {
        &self.sigma_mat
    }

    pub fn sigma_order(&self) -> usize {
        self.sigma_order
    }

    pub fn sigma(&self, mu: &[i64]) -> Coweight {
        mat_vec(&self.sigma_mat, mu)
    }

    pub fn sigma_rat(&self, mu: &[Rat]) -> RatCoweight {
        (0..self.dim)
            .map(|j| {
                (0..self.dim).fold(Rat::zero(), |s, k| s + mu[k] * self.sigma_mat[j][k])
            })
            .collect()
    }

    /// `sigma(J)`
    pub fn sigma_subset(&self, j: &[bool]) -> Subset {
        let mut out = vec![false; self.rank];
        for (i, &b) in j.iter().enumerate() {
            if b {
                out[self.sigma_perm[i]] = true;
            }
        }
        out
    }

    /// Smallest sigma-stable subset containing `j`.
    pub fn sigma_closure(&self, j: &[bool]) -> Subset {
        let mut out = j.to_vec();
        loop {
            let next: Subset = out
                .iter()
                .zip(self.sigma_subset(&out))
                .map(|(&a, b)| a || b)
                .collect();
            if next == out {
                return out;
            }
            out = next;
        }
    }

    /// Sigma-orbits on the simple roots.
    pub fn sigma_orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.rank];
        let mut orbits = Vec::new();
        for i in 0..self.rank {
            if seen[i] {
                continue;
            }
            let mut orbit = Vec::new();
            let mut j = i;
            while !seen[j] {
                seen[j] = true;
                orbit.push(j);
                j = self.sigma_perm[j];
            }
            orbits.push(orbit);
        }
        orbits
    }

    pub fn omega_twist(&self) -> Option<&OmegaTwist> {
        self.twist.as_ref()
    }

    /// Coordinates in the simple coroots, if `d` lies in `Q Phi^vee`.
    pub fn coroot_coords(&self, d: &[Rat]) -> Option<Vec<Rat>> {
        let p: Vec<Rat> = (0..self.rank)
            .map(|j| self.pairing_rat(d, self.simple_index[j]))
            .collect();
        let c: Vec<Rat> = (0..self.rank)
            .map(|i| (0..self.rank).fold(Rat::zero(), |s, j| s + p[j] * self.cartan_inv[j][i]))
            .collect();
        (self.from_coroot_coords(&c) == d).then_some(c)
    }

    pub fn from_coroot_coords(&self, c: &[Rat]) -> RatCoweight {
        (0..self.dim)
            .map(|t| {
                (0..self.rank).fold(Rat::zero(), |s, i| {
                    s + c[i] * self.coroots[self.simple_index[i]][t]
                })
            })
            .collect()
    }

    /// Class in `X / Z Phi^vee`, which labels the Omega component.
    pub fn omega_class(&self, mu: &[i64]) -> Vec<i64> {
        self.omega.reduce(mu)
    }

    pub fn omega_quotient(&self) -> &Quotient {
        &self.omega
    }

    pub fn pi1_quotient(&self) -> &Quotient {
        &self.pi1
    }

    pub fn gamma_quotient(&self) -> &Quotient {
        &self.gamma
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<i64> {
    (0..n).map(|k| i64::from(k == i)).collect()
}

pub(crate) fn to_rat_vec(v: &[i64]) -> RatCoweight {
    v.iter().map(|&x| Rat::from_integer(x)).collect()
}

pub(crate) fn to_int_vec(v: &[Rat]) -> Option<Vec<i64>> {
    v.iter()
        .map(|x| x.is_integer().then(|| x.to_integer()))
        .collect()
}

fn row_times(row: &[Rat], m: &RatMat) -> Vec<Rat> {
    (0..m[0].len())
        .map(|j| row.iter().zip(m).fold(Rat::zero(), |s, (x, r)| s + x * r[j]))
        .collect()
}

pub(crate) fn mat_vec(m: &IntMat, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// Roots in simple-root coordinates with matching coroots in simple-coroot
/// coordinates; positive roots first (by height), then their negatives in the
/// same order.
fn generate_roots(cartan: &IntMat) -> (Vec<Vec<i64>>, Vec<Vec<i64>>, usize) {
    let r = cartan.len();
    let mut seen: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut queue: Vec<(Vec<i64>, Vec<i64>)> = (0..r).map(|i| (unit(r, i), unit(r, i))).collect();
    while let Some((root, coroot)) = queue.pop() {
        if seen.contains_key(&root) {
            continue;
        }
        for i in 0..r {
            let c: i64 = (0..r).map(|j| cartan[i][j] * root[j]).sum();
            let d: i64 = (0..r).map(|j| coroot[j] * cartan[j][i]).sum();
            let mut r2 = root.clone();
            r2[i] -= c;
            let mut c2 = coroot.clone();
            c2[i] -= d;
            if !seen.contains_key(&r2) {
                queue.push((r2, c2));
            }
        }
        seen.insert(root, coroot);
    }
    let mut pos: Vec<(Vec<i64>, Vec<i64>)> = seen
        .into_iter()
        .filter(|(root, _)| root.iter().all(|&x| x >= 0))
        .collect();
    pos.sort_by(|a, b| {
        let ha: i64 = a.0.iter().sum();
        let hb: i64 = b.0.iter().sum();
        ha.cmp(&hb).then_with(|| b.0.cmp(&a.0))
    });
    let num_pos = pos.len();
    let mut roots: Vec<Vec<i64>> = pos.iter().map(|p| p.0.clone()).collect();
    let mut coroots: Vec<Vec<i64>> = pos.iter().map(|p| p.1.clone()).collect();
    for k in 0..num_pos {
        roots.push(roots[k].iter().map(|x| -x).collect());
        coroots.push(coroots[k].iter().map(|x| -x).collect());
    }
    (roots, coroots, num_pos)
}
