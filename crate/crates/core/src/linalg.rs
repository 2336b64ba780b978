//! Small exact linear algebra over `Q` and `Z`: rational inversion and Smith
//! normal form based quotient presentations of finitely generated abelian
//! groups `Z^n / L`.

use num_integer::Integer;
use num_traits::Zero;

use crate::Rat;

pub type IntMat = Vec<Vec<i64>>;
pub type RatMat = Vec<Vec<Rat>>;

pub fn identity_int(n: usize) -> IntMat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn to_rat(m: &IntMat) -> RatMat {
    m.iter()
        .map(|row| row.iter().map(|&x| Rat::from_integer(x)).collect())
        .collect()
}

pub fn mat_mul_int(a: &IntMat, b: &IntMat) -> IntMat {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| (0..inner).map(|k| row[k] * b[k][j]).sum())
                .collect()
        })
        .collect()
}

pub fn mat_mul_rat(a: &RatMat, b: &RatMat) -> RatMat {
    let inner = b.len();
    let cols = if inner == 0 { 0 } else { b[0].len() };
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    (0..inner).fold(Rat::zero(), |acc, k| acc + row[k] * b[k][j])
                })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Clone>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

/// Gauss-Jordan inverse. `None` when singular.
pub fn invert(m: &RatMat) -> Option<RatMat> {
    let n = m.len();
    let mut a: RatMat = m.clone();
    let mut inv: RatMat = to_rat(&identity_int(n));
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col];
        for j in 0..n {
            a[col][j] /= p;
            inv[col][j] /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for j in 0..n {
                    let (x, y) = (a[col][j], inv[col][j]);
                    a[r][j] -= f * x;
                    inv[r][j] -= f * y;
                }
            }
        }
    }
    Some(inv)
}

/// Rank over the rationals.
pub fn rank(m: &RatMat) -> usize {
    let mut a = m.clone();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(pivot) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, pivot);
        for i in r + 1..a.len() {
            let f = a[i][col] / a[r][col];
            for j in col..cols {
                let x = a[r][j];
                a[i][j] -= f * x;
            }
        }
        r += 1;
    }
    r
}

/// Converts a rational matrix with integral entries; `None` otherwise.
pub fn to_int(m: &RatMat) -> Option<IntMat> {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|x| x.is_integer().then(|| x.to_integer()))
                .collect()
        })
        .collect()
}

/// Presentation of `Z^n / rowspan(R)` in Smith normal form.
///
/// The coordinate change `y = x * Q` sends the relation lattice onto the
/// diagonal lattice `d_0 Z + ... + d_{k-1} Z + 0`; coordinates with `d = 1`
/// are dropped, so the stored `moduli` list the invariant factors (`0` for a
/// free summand).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    n: usize,
    /// Invariant factor per kept coordinate; 0 means a copy of `Z`.
    moduli: Vec<i64>,
    /// Indices of the kept coordinates in `0..n`.
    kept: Vec<usize>,
    q: IntMat,
    q_inv: IntMat,
}

impl Quotient {
    /// Builds the quotient of `Z^n` by the lattice spanned by `relations`.
    pub fn new(n: usize, relations: &[Vec<i64>]) -> Quotient {
        let mut a: IntMat = relations.to_vec();
        let mut q = identity_int(n);
        let mut q_inv = identity_int(n);
        let m = a.len();
        let mut diag = Vec::new();
        let mut t = 0;
        while t < m.min(n) {
            // pick the nonzero entry of least absolute value in the lower block
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if a[i][j] != 0
                        && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            a.swap(t, pi);
            swap_cols(&mut a, &mut q, &mut q_inv, t, pj);
            loop {
                let mut dirty = false;
                let p = a[t][t];
                for i in (t + 1)..m {
                    let f = Integer::div_floor(&a[i][t], &p);
                    if f != 0 {
                        for j in t..n {
                            a[i][j] -= f * a[t][j];
                        }
                    }
                    if a[i][t] != 0 {
                        dirty = true;
                    }
                }
                for j in (t + 1)..n {
                    let f = Integer::div_floor(&a[t][j], &p);
                    if f != 0 {
                        add_col(&mut a, &mut q, &mut q_inv, j, t, -f);
                    }
                    if a[t][j] != 0 {
                        dirty = true;
                    }
                }
                if !dirty {
                    // divisibility condition for the invariant factors
                    let bad = (t + 1..m)
                        .flat_map(|i| (t + 1..n).map(move |j| (i, j)))
                        .find(|&(i, j)| a[i][j] % p != 0);
                    match bad {
                        None => break,
                        Some((i, _)) => {
                            for j in t..n {
                                a[t][j] += a[i][j];
                            }
                            continue;
                        }
                    }
                }
                // move the smallest entry of row/column t into the pivot
                let mut best = (t, t);
                for i in t..m {
                    if a[i][t] != 0 && a[i][t].abs() < a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t..n {
                    if a[t][j] != 0 && a[t][j].abs() < a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                a.swap(t, best.0);
                swap_cols(&mut a, &mut q, &mut q_inv, t, best.1);
            }
            if a[t][t] < 0 {
                for j in 0..n {
                    q[j][t] = -q[j][t];
                }
                for j in 0..n {
                    q_inv[t][j] = -q_inv[t][j];
                }
                for row in a.iter_mut() {
                    row[t] = -row[t];
                }
            }
            diag.push(a[t][t]);
            t += 1;
        }
        let mut moduli = Vec::new();
        let mut kept = Vec::new();
        for (i, &d) in diag.iter().enumerate() {
            if d != 1 {
                moduli.push(d);
                kept.push(i);
            }
        }
        for i in diag.len()..n {
            moduli.push(0);
            kept.push(i);
        }
        Quotient {
            n,
            moduli,
            kept,
            q,
            q_inv,
        }
    }

    /// Invariant factors of the quotient group (`0` = free summand).
    pub fn invariant_factors(&self) -> &[i64] {
        &self.moduli
    }

    pub fn is_finite(&self) -> bool {
        self.moduli.iter().all(|&d| d != 0)
    }

    /// Canonical coordinates of the class of `x`.
    pub fn reduce(&self, x: &[i64]) -> Vec<i64> {
        debug_assert_eq!(x.len(), self.n);
        self.kept
            .iter()
            .zip(&self.moduli)
            .map(|(&k, &d)| {
                let y: i64 = (0..self.n).map(|i| x[i] * self.q[i][k]).sum();
                if d == 0 {
                    y
                } else {
                    y.rem_euclid(d)
                }
            })
            .collect()
    }

    /// Canonical lift of canonical coordinates back to `Z^n`.
    pub fn lift(&self, coords: &[i64]) -> Vec<i64> {
        let mut y = vec![0i64; self.n];
        for (&k, &c) in self.kept.iter().zip(coords) {
            y[k] = c;
        }
        (0..self.n)
            .map(|j| (0..self.n).map(|i| y[i] * self.q_inv[i][j]).sum())
            .collect()
    }

    /// All canonical classes when the group is finite.
    pub fn elements(&self) -> Option<Vec<Vec<i64>>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &d in &self.moduli {
            out = out
                .into_iter()
                .flat_map(|prefix| {
                    (0..d).map(move |c| {
                        let mut p = prefix.clone();
                        p.push(c);
                        p
                    })
                })
                .collect();
        }
        Some(out)
    }
}

fn swap_cols(a: &mut IntMat, q: &mut IntMat, q_inv: &mut IntMat, i: usize, j: usize) {
    if i == j {
        return;
    }
    for row in a.iter_mut() {
        row.swap(i, j);
    }
    for row in q.iter_mut() {
        row.swap(i, j);
    }
    q_inv.swap(i, j);
}

/// `col_dst += f * col_src`.
fn add_col(a: &mut IntMat, q: &mut IntMat, q_inv: &mut IntMat, dst: usize, src: usize, f: i64) {
    for row in a.iter_mut() {
        row[dst] += f * row[src];
    }
    for row in q.iter_mut() {
        row[dst] += f * row[src];
    }
    // inverse of the column operation acts on rows of Q^{-1}
    let n = q_inv[0].len();
    for k in 0..n {
        let v = q_inv[dst][k];
        q_inv[src][k] -= f * v;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn snf_of_coroot_in_gl2() {
        let q = Quotient::new(2, &[vec![1, -1]]);
        assert_eq!(q.invariant_factors(), &[0]);
        let a = q.reduce(&[1, 0]);
        let b = q.reduce(&[0, 1]);
        assert_eq!(a, b);
        assert_eq!(q.reduce(&[1, 1]).len(), 1);
        assert_eq!(q.reduce(&[1, 1])[0].abs(), 2 * a[0].abs());
    }

    #[test]
    fn snf_invariant_factors() {
        // A2 coroots inside the coweight lattice, in fundamental coweight coords
        let q = Quotient::new(2, &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(q.invariant_factors(), &[3]);
        let q = Quotient::new(3, &[vec![2, 0, 0], vec![0, 4, 0]]);
        assert_eq!(q.invariant_factors(), &[2, 4, 0]);
        let q = Quotient::new(2, &[vec![2, 0], vec![0, 3]]);
        assert_eq!(q.invariant_factors(), &[6]);
    }

    #[test]
    fn lift_reduces_back() {
        let q = Quotient::new(3, &[vec![2, 4, 6], vec![1, -1, 3]]);
        for x in [[1, 2, 3], [0, 0, 1], [-5, 7, 2]] {
            let c = q.reduce(&x);
            assert_eq!(q.reduce(&q.lift(&c)), c);
        }
    }

    #[test]
    fn inverse_roundtrip() {
        let m = to_rat(&vec![vec![2, -1], vec![-1, 2]]);
        let inv = invert(&m).unwrap();
        let id = mat_mul_rat(&m, &inv);
        assert_eq!(id, to_rat(&identity_int(2)));
        assert!(invert(&to_rat(&vec![vec![1, 2], vec![2, 4]])).is_none());
    }
}
