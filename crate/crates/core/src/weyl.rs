//! Finite Weyl group materialized as permutations of the root list.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::Rat;

/// Handle to an element of a materialized [`WeylGroup`].
///
/// Indices are only meaningful for the group that produced them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElement(pub(crate) u32);

impl WeylElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    rank: usize,
    dim: usize,
    n_roots: usize,
    num_pos: usize,
    perms: Vec<u16>,
    lengths: Vec<u16>,
    words: Vec<Vec<u8>>,
    right: Vec<u32>,
    left: Vec<u32>,
    inv: Vec<u32>,
    mats: Vec<i64>,
    twist: Vec<u32>,
    twist_inv: Vec<u32>,
    longest: u32,
}

impl WeylGroup {
    /// Breadth-first enumeration from the simple reflections.
    ///
    /// `simple_perms[i]` is the permutation of root indices induced by `s_i`
    /// (positive roots are `0..num_pos`), `simple_mats[i]` its matrix on the
    /// coweight lattice (row-major, `dim x dim`, acting on column vectors) and
    /// `sigma` the permutation of roots induced by the diagram automorphism.
    pub(crate) fn generate(
        simple_perms: &[Vec<usize>],
        simple_mats: &[Vec<i64>],
        num_pos: usize,
        dim: usize,
        sigma: &[usize],
        cap: usize,
    ) -> Result<WeylGroup> {
        let rank = simple_perms.len();
        let n_roots = 2 * num_pos;
        let mut index: HashMap<Vec<u16>, u32> = HashMap::new();
        let id: Vec<u16> = (0..n_roots as u16).collect();
        let mut perms = id.clone();
        let mut lengths = vec![0u16];
        let mut mats: Vec<i64> = (0..dim * dim)
            .map(|k| i64::from(k / dim == k % dim))
            .collect();
        index.insert(id, 0);
        let mut right: Vec<u32> = Vec::new();
        let mut head = 0usize;
        while head < lengths.len() {
            for i in 0..rank {
                let base = head * n_roots;
                let p: Vec<u16> = simple_perms[i]
                    .iter()
                    .map(|&k| perms[base + k])
                    .collect();
                let next = match index.get(&p) {
                    Some(&j) => j,
                    None => {
                        let j = lengths.len() as u32;
                        if lengths.len() >= cap {
                            return Err(Error::WeylOrderCap { cap });
                        }
                        perms.extend_from_slice(&p);
                        lengths.push(lengths[head] + 1);
                        let m = mat_mul(&mats[head * dim * dim..(head + 1) * dim * dim], &simple_mats[i], dim);
                        mats.extend(m);
                        index.insert(p, j);
                        j
                    }
                };
                right.push(next);
            }
            head += 1;
        }
        let order = lengths.len();
        let lookup = |p: Vec<u16>| -> u32 { index[&p] };
        let mut left = Vec::with_capacity(order * rank);
        let mut inv = Vec::with_capacity(order);
        let mut twist = Vec::with_capacity(order);
        let mut twist_inv = Vec::with_capacity(order);
        let mut sigma_inv = vec![0usize; n_roots];
        for (k, &s) in sigma.iter().enumerate() {
            sigma_inv[s] = k;
        }
        for w in 0..order {
            let pw = &perms[w * n_roots..(w + 1) * n_roots];
            for sp in simple_perms {
                left.push(lookup(pw.iter().map(|&k| sp[k as usize] as u16).collect()));
            }
            let mut pi = vec![0u16; n_roots];
            for (k, &image) in pw.iter().enumerate() {
                pi[image as usize] = k as u16;
            }
            inv.push(lookup(pi));
            twist.push(lookup(
                (0..n_roots)
                    .map(|k| sigma[pw[sigma_inv[k]] as usize] as u16)
                    .collect(),
            ));
            twist_inv.push(lookup(
                (0..n_roots)
                    .map(|k| sigma_inv[pw[sigma[k]] as usize] as u16)
                    .collect(),
            ));
        }
        let mut words: Vec<Vec<u8>> = vec![Vec::new(); order];
        for w in 1..order {
            // elements are discovered in order of length
            let i = (0..rank)
                .find(|&i| lengths[left[w * rank + i] as usize] < lengths[w])
                .expect("nonidentity element has a left descent");
            let rest = left[w * rank + i] as usize;
            let mut word = vec![i as u8];
            word.extend_from_slice(&words[rest]);
            words[w] = word;
        }
        let longest = (0..order).max_by_key(|&w| lengths[w]).unwrap_or(0) as u32;
        Ok(WeylGroup {
            rank,
            dim,
            n_roots,
            num_pos,
            perms,
            lengths,
            words,
            right,
            left,
            inv,
            mats,
            twist,
            twist_inv,
            longest,
        })
    }

    pub fn order(&self) -> usize {
        self.lengths.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement(0)
    }

    pub fn longest(&self) -> WeylElement {
        WeylElement(self.longest)
    }

    pub fn simple(&self, i: usize) -> WeylElement {
        WeylElement(self.right[i])
    }

    pub fn elements(&self) -> impl Iterator<Item = WeylElement> {
        (0..self.order() as u32).map(WeylElement)
    }

    pub fn length(&self, w: WeylElement) -> usize {
        self.lengths[w.index()] as usize
    }

    /// Lexicographically least reduced word, 0-based letters.
    pub fn word(&self, w: WeylElement) -> Vec<usize> {
        self.words[w.index()].iter().map(|&i| i as usize).collect()
    }

    pub fn from_word(&self, word: &[usize]) -> WeylElement {
        word.iter()
            .fold(self.identity(), |acc, &i| self.mul_simple_right(acc, i))
    }

    /// `w s_i`
    pub fn mul_simple_right(&self, w: WeylElement, i: usize) -> WeylElement {
        WeylElement(self.right[w.index() * self.rank + i])
    }

    /// `s_i w`
    pub fn mul_simple_left(&self, i: usize, w: WeylElement) -> WeylElement {
        WeylElement(self.left[w.index() * self.rank + i])
    }

    pub fn mul(&self, u: WeylElement, v: WeylElement) -> WeylElement {
        self.words[v.index()]
            .iter()
            .fold(u, |acc, &i| self.mul_simple_right(acc, i as usize))
    }

    pub fn inverse(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.inv[w.index()])
    }

    /// Index of the root `w(beta)`.
    pub fn act_root(&self, w: WeylElement, beta: usize) -> usize {
        self.perms[w.index() * self.n_roots + beta] as usize
    }

    pub fn is_positive_root(&self, beta: usize) -> bool {
        beta < self.num_pos
    }

    pub fn matrix(&self, w: WeylElement) -> &[i64] {
        let d2 = self.dim * self.dim;
        &self.mats[w.index() * d2..(w.index() + 1) * d2]
    }

    pub fn act(&self, w: WeylElement, mu: &[i64]) -> Vec<i64> {
        let m = self.matrix(w);
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| m[r * self.dim + c] * mu[c]).sum())
            .collect()
    }

    pub fn act_rat(&self, w: WeylElement, mu: &[Rat]) -> Vec<Rat> {
        let m = self.matrix(w);
        (0..self.dim)
            .map(|r| {
                (0..self.dim).fold(Rat::from_integer(0), |acc, c| {
                    acc + mu[c] * m[r * self.dim + c]
                })
            })
            .collect()
    }

    pub fn is_left_descent(&self, w: WeylElement, i: usize) -> bool {
        self.length(self.mul_simple_left(i, w)) < self.length(w)
    }

    pub fn is_right_descent(&self, w: WeylElement, i: usize) -> bool {
        self.length(self.mul_simple_right(w, i)) < self.length(w)
    }

    /// Bruhat order via the lifting property along left descents.
    pub fn bruhat_leq(&self, u: WeylElement, v: WeylElement) -> bool {
        let (mut u, mut v) = (u, v);
        loop {
            if self.length(u) > self.length(v) {
                return false;
            }
            if self.length(v) == 0 {
                return u == v;
            }
            let s = self.words[v.index()][0] as usize;
            if self.is_left_descent(u, s) {
                u = self.mul_simple_left(s, u);
            }
            v = self.mul_simple_left(s, v);
        }
    }

    /// Simple roots occurring in reduced words of `w`.
    pub fn supp(&self, w: WeylElement) -> Vec<bool> {
        let mut s = vec![false; self.rank];
        for &i in &self.words[w.index()] {
            s[i as usize] = true;
        }
        s
    }

    /// `^sigma w`
    pub fn twist(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.twist[w.index()])
    }

    /// `^{sigma^{-1}} w`
    pub fn twist_inv(&self, w: WeylElement) -> WeylElement {
        WeylElement(self.twist_inv[w.index()])
    }

    /// Renders `s1 s2 s1`, or `e` for the identity.
    pub fn format(&self, w: WeylElement) -> String {
        let word = &self.words[w.index()];
        if word.is_empty() {
            return "e".into();
        }
        let mut out = String::new();
        for (k, &i) in word.iter().enumerate() {
            if k > 0 {
                out.push(' ');
            }
            write!(out, "s{}", i + 1).unwrap();
        }
        out
    }

    /// Parses a word such as `s1 s2`; `e` or the empty string is the identity.
    pub fn parse(&self, text: &str) -> Result<WeylElement> {
        let mut w = self.identity();
        for tok in text.split_whitespace() {
            if tok == "e" {
                continue;
            }
            let i = parse_simple(tok, self.rank)?;
            w = self.mul_simple_right(w, i);
        }
        Ok(w)
    }
}

/// Parses `s<i>` (1-based) into a 0-based index; bare `s` is accepted in rank 1.
pub(crate) fn parse_simple(tok: &str, rank: usize) -> Result<usize> {
    let digits = tok
        .strip_prefix('s')
        .ok_or_else(|| Error::Parse(format!("expected simple reflection, found `{tok}`")))?;
    if digits.is_empty() && rank == 1 {
        return Ok(0);
    }
    let i: usize = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad reflection index in `{tok}`")))?;
    if i == 0 || i > rank {
        return Err(Error::Parse(format!("reflection `{tok}` out of range 1..={rank}")));
    }
    Ok(i - 1)
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0i64; n * n];
    for r in 0..n {
        for k in 0..n {
            let x = a[r * n + k];
            if x != 0 {
                for c in 0..n {
                    out[r * n + c] += x * b[k * n + c];
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use crate::{Config, RootDatum};

    use super::*;

    fn group(k: &str, n: usize) -> RootDatum {
        RootDatum::new(Config::new(&[(k, n)], "sc")).unwrap()
    }

    /// Elements expressible as subwords of the canonical reduced word of `v`.
    fn subword_products(w: &WeylGroup, v: WeylElement) -> HashSet<WeylElement> {
        let word = w.word(v);
        let mut out = HashSet::new();
        for mask in 0..1u32 << word.len() {
            let sub: Vec<usize> = (0..word.len())
                .filter(|&k| mask >> k & 1 == 1)
                .map(|k| word[k])
                .collect();
            out.insert(w.from_word(&sub));
        }
        out
    }

    #[test]
    fn group_axioms() {
        let d = group("A", 2);
        let w = d.weyl();
        let (s1, s2) = (w.simple(0), w.simple(1));
        assert_eq!(w.mul(s1, s1), w.identity());
        assert_eq!(w.from_word(&[0, 1, 0]), w.from_word(&[1, 0, 1]));
        // s1(alpha_2) = alpha_1 + alpha_2
        let image = w.act_root(s1, d.simple_root(1));
        assert_eq!(d.root_simple_coords(image), &[1, 1]);
        for u in w.elements() {
            assert_eq!(w.mul(u, w.inverse(u)), w.identity());
            for v in w.elements() {
                let uv = w.mul(u, v);
                assert!(w.length(uv) <= w.length(u) + w.length(v));
                for a in 0..d.num_roots() {
                    assert_eq!(w.act_root(uv, a), w.act_root(u, w.act_root(v, a)));
                }
            }
        }
        assert_eq!(w.format(w.from_word(&[1, 0])), "s2 s1");
        assert_eq!(w.parse("s2 s1").unwrap(), w.from_word(&[1, 0]));
        assert_eq!(w.parse("e").unwrap(), w.identity());
        assert!(w.parse("s3").is_err());
        let _ = s2;
    }

    #[test]
    fn action_preserves_pairing() {
        for d in [group("B", 3), group("G", 2)] {
            let w = d.weyl();
            let mu: Vec<i64> = (0..d.dim()).map(|t| t as i64 * 2 - 1).collect();
            for u in w.elements() {
                let umu = w.act(u, &mu);
                for a in 0..d.num_roots() {
                    assert_eq!(d.pairing(&umu, w.act_root(u, a)), d.pairing(&mu, a));
                }
            }
        }
    }

    #[test]
    fn lengths() {
        for d in [group("A", 3), group("B", 2), group("G", 2)] {
            let w = d.weyl();
            let w0 = w.longest();
            assert_eq!(w.length(w0), d.num_pos());
            for u in w.elements() {
                assert_eq!(w.length(u), w.length(w.inverse(u)));
                assert_eq!(w.length(w.mul(w0, u)), w.length(w0) - w.length(u));
                assert_eq!(w.word(u).len(), w.length(u));
                assert_eq!(w.from_word(&w.word(u)), u);
                let inversions = (0..d.num_pos())
                    .filter(|&a| !w.is_positive_root(w.act_root(u, a)))
                    .count();
                assert_eq!(inversions, w.length(u));
            }
        }
    }

    #[test]
    fn canonical_word_is_lex_least() {
        let d = group("A", 3);
        let w = d.weyl();
        // all reduced words by brute force over words of the right length
        for u in w.elements() {
            let l = w.length(u);
            let mut best: Option<Vec<usize>> = None;
            let total = 3usize.pow(l as u32);
            for code in 0..total {
                let word: Vec<usize> = (0..l).map(|k| code / 3usize.pow((l - 1 - k) as u32) % 3).collect();
                if w.from_word(&word) == u && best.as_ref().is_none_or(|b| word < *b) {
                    best = Some(word);
                }
            }
            assert_eq!(best.unwrap(), w.word(u));
        }
    }

    #[test]
    fn reflections() {
        let d = group("A", 2);
        let w = d.weyl();
        let theta = d.highest_roots()[0];
        assert_eq!(d.reflection(theta).unwrap(), w.from_word(&[0, 1, 0]));
        assert_eq!(w.length(d.reflection(theta).unwrap()), 3);
        for a in 0..d.num_roots() {
            let s = d.reflection(a).unwrap();
            assert_eq!(s, d.reflection(d.negate(a)).unwrap());
            assert_eq!(w.act_root(s, a), d.negate(a));
            let simple = (0..d.rank()).any(|i| d.simple_root(i) == a % d.num_pos());
            assert_eq!(w.length(s) == 1, simple);
        }
        assert!(d.reflection(99).is_err());
    }

    #[test]
    fn bruhat_examples() {
        let d = group("A", 2);
        let w = d.weyl();
        let s12 = w.from_word(&[0, 1]);
        let s21 = w.from_word(&[1, 0]);
        assert!(w.bruhat_leq(w.identity(), s12));
        assert!(w.bruhat_leq(w.simple(0), s12));
        assert!(w.bruhat_leq(w.simple(1), s12));
        assert!(!w.bruhat_leq(s12, s21));
    }

    #[test]
    fn bruhat_matches_subwords() {
        for d in [group("A", 2), group("B", 2), group("G", 2), group("A", 3)] {
            let w = d.weyl();
            for v in w.elements() {
                let below = subword_products(w, v);
                for u in w.elements() {
                    assert_eq!(w.bruhat_leq(u, v), below.contains(&u));
                }
            }
        }
    }

    #[test]
    fn support_and_twist() {
        let flip = RootDatum::new(Config::new(&[("A", 2)], "sc").with_perm(&[2, 1])).unwrap();
        let w = flip.weyl();
        assert_eq!(w.supp(w.identity()), vec![false, false]);
        assert_eq!(w.supp(w.from_word(&[0, 1])), vec![true, true]);
        assert_eq!(flip.sigma_closure(&w.supp(w.simple(0))), vec![true, true]);
        assert_eq!(w.twist(w.simple(0)), w.simple(1));
        assert_eq!(w.twist(w.from_word(&[0, 1])), w.from_word(&[1, 0]));
        for u in w.elements() {
            assert_eq!(w.twist_inv(w.twist(u)), u);
        }
        let plain = group("A", 2);
        let w = plain.weyl();
        assert!(w.elements().all(|u| w.twist(u) == u));
    }
}
