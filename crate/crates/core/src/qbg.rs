//! Quantum Bruhat graph with all-pairs distance and weight tables.

use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::root_datum::RootDatum;
use crate::weyl::WeylElement;
use crate::Coweight;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Edge {
    pub target: WeylElement,
    /// Positive root index.
    pub root: usize,
    pub quantum: bool,
}

#[derive(Debug, Clone)]
pub struct QuantumBruhatGraph {
    order: usize,
    rank: usize,
    adjacency: Vec<Vec<Edge>>,
    dist: Vec<u16>,
    /// Weights in simple coroot coordinates, `order * order * rank`.
    weights: Vec<i32>,
}

/// Classifies `w -> w s_alpha` for a positive root `alpha`.
pub fn edge_kind(d: &RootDatum, w: WeylElement, alpha: usize) -> Option<bool> {
    let wg = d.weyl();
    let s = d.reflection(alpha).ok()?;
    let (l, l2) = (wg.length(w) as i64, wg.length(wg.mul(w, s)) as i64);
    if l2 == l + 1 {
        Some(false)
    } else if l2 == l + 1 - d.pairing_two_rho(d.coroot(alpha)) {
        Some(true)
    } else {
        None
    }
}

impl QuantumBruhatGraph {
    /// Builds the graph and fills the tables by breadth-first search from
    /// every vertex; fails if two shortest paths disagree in weight.
    pub fn build(d: &RootDatum) -> Result<QuantumBruhatGraph> {
        let wg = d.weyl();
        let order = wg.order();
        let cap = d.config().max_qbg_order;
        if order > cap {
            return Err(Error::Budget(format!(
                "quantum Bruhat graph on {order} vertices exceeds the cap of {cap}"
            )));
        }
        let rank = d.rank();
        let adjacency: Vec<Vec<Edge>> = wg
            .elements()
            .map(|w| {
                (0..d.num_pos())
                    .filter_map(|a| {
                        edge_kind(d, w, a).map(|quantum| Edge {
                            target: wg.mul(w, d.reflection(a).unwrap()),
                            root: a,
                            quantum,
                        })
                    })
                    .collect()
            })
            .collect();
        let mut dist = vec![u16::MAX; order * order];
        let mut weights = vec![0i32; order * order * rank];
        for u in 0..order {
            let row = u * order;
            dist[row + u] = 0;
            let mut queue = VecDeque::from([u]);
            while let Some(v) = queue.pop_front() {
                let dv = dist[row + v];
                for e in &adjacency[v] {
                    let t = e.target.index();
                    let mut wt: Vec<i32> = weights[(row + v) * rank..(row + v + 1) * rank].to_vec();
                    if e.quantum {
                        for (x, c) in wt.iter_mut().zip(d.coroot_simple_coords(e.root)) {
                            *x += *c as i32;
                        }
                    }
                    let slot = &mut weights[(row + t) * rank..(row + t + 1) * rank];
                    if dist[row + t] == u16::MAX {
                        dist[row + t] = dv + 1;
                        slot.copy_from_slice(&wt);
                        queue.push_back(t);
                    } else if dist[row + t] == dv + 1 && slot != wt.as_slice() {
                        return Err(Error::Internal(format!(
                            "shortest paths {} => {} have different weights",
                            wg.format(WeylElement(u as u32)),
                            wg.format(e.target)
                        )));
                    }
                }
            }
            if dist[row..row + order].contains(&u16::MAX) {
                return Err(Error::Internal("quantum Bruhat graph is not strongly connected".into()));
            }
        }
        Ok(QuantumBruhatGraph {
            order,
            rank,
            adjacency,
            dist,
            weights,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn edges_from(&self, w: WeylElement) -> &[Edge] {
        &self.adjacency[w.index()]
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum()
    }

    /// `d(u => v)`
    pub fn dist(&self, u: WeylElement, v: WeylElement) -> usize {
        self.dist[u.index() * self.order + v.index()] as usize
    }

    /// `wt(u => v)` in simple coroot coordinates.
    pub fn wt(&self, u: WeylElement, v: WeylElement) -> Vec<i64> {
        let k = (u.index() * self.order + v.index()) * self.rank;
        self.weights[k..k + self.rank].iter().map(|&x| x as i64).collect()
    }

    /// `wt(u => v)` as a coweight in the lattice basis.
    pub fn wt_coweight(&self, d: &RootDatum, u: WeylElement, v: WeylElement) -> Coweight {
        coroot_combination(d, &self.wt(u, v))
    }

    /// Overwrites one weight entry. Exists so that verification drivers can
    /// be exercised against a deliberately broken table.
    #[doc(hidden)]
    pub fn corrupt_weight(&mut self, u: WeylElement, v: WeylElement, delta: &[i64]) {
        let k = (u.index() * self.order + v.index()) * self.rank;
        for (x, dx) in self.weights[k..k + self.rank].iter_mut().zip(delta) {
            *x += *dx as i32;
        }
    }

    /// Weight of an explicit vertex path, validating every step.
    pub fn path_weight(&self, d: &RootDatum, path: &[WeylElement]) -> Result<Vec<i64>> {
        let mut wt = vec![0i64; self.rank];
        for pair in path.windows(2) {
            let e = self.adjacency[pair[0].index()]
                .iter()
                .find(|e| e.target == pair[1])
                .ok_or_else(|| {
                    Error::InvalidPath(format!(
                        "no edge {} -> {}",
                        d.weyl().format(pair[0]),
                        d.weyl().format(pair[1])
                    ))
                })?;
            if e.quantum {
                for (x, c) in wt.iter_mut().zip(d.coroot_simple_coords(e.root)) {
                    *x += c;
                }
            }
        }
        Ok(wt)
    }

    /// Checks `<wt(p), 2 rho> = l(start) - l(end) + l(p)` for a path.
    pub fn check_weight_2rho(&self, d: &RootDatum, path: &[WeylElement]) -> Result<bool> {
        let wt = self.path_weight(d, path)?;
        let Some((first, last)) = path.first().zip(path.last()) else {
            return Ok(true);
        };
        let wg = d.weyl();
        let lhs = d.pairing_two_rho(&coroot_combination(d, &wt));
        let rhs = wg.length(*first) as i64 - wg.length(*last) as i64 + (path.len() as i64 - 1);
        Ok(lhs == rhs)
    }

    /// DOT rendering: Bruhat edges solid, quantum edges dashed with their coroot.
    pub fn to_dot(&self, d: &RootDatum) -> String {
        let wg = d.weyl();
        let mut out = String::from("digraph qbg {\n  node [shape=box];\n");
        for w in wg.elements() {
            writeln!(out, "  v{} [label=\"{}\"];", w.index(), wg.format(w)).unwrap();
        }
        for w in wg.elements() {
            for e in &self.adjacency[w.index()] {
                if e.quantum {
                    let c: Vec<String> = d
                        .coroot_simple_coords(e.root)
                        .iter()
                        .map(|x| x.to_string())
                        .collect();
                    writeln!(
                        out,
                        "  v{} -> v{} [style=dashed, label=\"[{}]\"];",
                        w.index(),
                        e.target.index(),
                        c.join(",")
                    )
                    .unwrap();
                } else {
                    writeln!(out, "  v{} -> v{};", w.index(), e.target.index()).unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Coweight `sum_i c_i alpha_i^vee` in the lattice basis.
pub fn coroot_combination(d: &RootDatum, c: &[i64]) -> Coweight {
    let mut out = vec![0i64; d.dim()];
    for (i, &ci) in c.iter().enumerate() {
        for (o, x) in out.iter_mut().zip(d.coroot(d.simple_root(i))) {
            *o += ci * x;
        }
    }
    out
}
