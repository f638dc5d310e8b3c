//! A few small abstract groups built as permutation groups, used to name
//! subgroups by fingerprint.

use std::collections::BTreeMap;
use std::fmt;

use rustc_hash::FxHashMap;
use serde::Serialize;

use crate::subgroup::Fingerprint;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum AbstractType {
    Cyclic(u32),
    Klein,
    S3,
    D8,
    S3xS3,
    GL23,
    /// Upper unitriangular 3x3 matrices over GF(3) extended by the
    /// determinant-one diagonal matrices.
    UpperBorel108,
}

impl fmt::Display for AbstractType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AbstractType::Cyclic(n) => write!(f, "C{n}"),
            AbstractType::Klein => write!(f, "C2^2"),
            AbstractType::S3 => write!(f, "S3"),
            AbstractType::D8 => write!(f, "D8"),
            AbstractType::S3xS3 => write!(f, "S3xS3"),
            AbstractType::GL23 => write!(f, "GL(2,3)"),
            AbstractType::UpperBorel108 => write!(f, "(C3^2:C3):C2^2"),
        }
    }
}

impl AbstractType {
    pub fn fingerprint(&self) -> Fingerprint {
        let pg = match *self {
            AbstractType::Cyclic(n) => {
                let n = n as usize;
                PermGroup::generate(n.max(1), &[(0..n).map(|i| ((i + 1) % n) as u8).collect()])
            }
            AbstractType::Klein => PermGroup::generate(4, &[vec![1, 0, 3, 2], vec![2, 3, 0, 1]]),
            AbstractType::S3 => PermGroup::generate(3, &[vec![1, 2, 0], vec![1, 0, 2]]),
            AbstractType::D8 => PermGroup::generate(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]),
            AbstractType::S3xS3 => PermGroup::generate(
                6,
                &[
                    vec![1, 2, 0, 3, 4, 5],
                    vec![1, 0, 2, 3, 4, 5],
                    vec![0, 1, 2, 4, 5, 3],
                    vec![0, 1, 2, 4, 3, 5],
                ],
            ),
            AbstractType::GL23 => PermGroup::from_matrices(2, |m| det3(2, m) != 0),
            AbstractType::UpperBorel108 => PermGroup::from_matrices(3, |m| {
                m[3] == 0 && m[6] == 0 && m[7] == 0 && det3(3, m) == 1
            }),
        };
        pg.fingerprint()
    }
}

fn det3(d: usize, m: &[u8]) -> u8 {
    let v = |i: usize| m[i] as i32;
    let det = if d == 2 {
        v(0) * v(3) - v(1) * v(2)
    } else {
        v(0) * (v(4) * v(8) - v(5) * v(7)) - v(1) * (v(3) * v(8) - v(5) * v(6))
            + v(2) * (v(3) * v(7) - v(4) * v(6))
    };
    det.rem_euclid(3) as u8
}

/// Naive permutation group: all elements listed, products by composition.
struct PermGroup {
    elems: Vec<Vec<u8>>,
    index: FxHashMap<Vec<u8>, usize>,
}

impl PermGroup {
    fn generate(n: usize, gens: &[Vec<u8>]) -> Self {
        let id: Vec<u8> = (0..n as u8).collect();
        let mut elems = vec![id.clone()];
        let mut index = FxHashMap::default();
        index.insert(id, 0);
        let mut head = 0;
        while head < elems.len() {
            for g in gens {
                let p = compose(&elems[head], g);
                if !index.contains_key(&p) {
                    index.insert(p.clone(), elems.len());
                    elems.push(p);
                }
            }
            head += 1;
        }
        PermGroup { elems, index }
    }

    /// All d x d matrices over GF(3) passing `keep`, acting on column vectors.
    fn from_matrices(d: usize, keep: impl Fn(&[u8]) -> bool) -> Self {
        let nvec = 3usize.pow(d as u32);
        let vecs: Vec<Vec<u8>> = (0..nvec)
            .map(|mut k| {
                (0..d)
                    .map(|_| {
                        let c = (k % 3) as u8;
                        k /= 3;
                        c
                    })
                    .collect()
            })
            .collect();
        let code = |v: &[u8]| v.iter().rev().fold(0usize, |a, &c| a * 3 + c as usize);
        let mut gens = Vec::new();
        for k in 0..3usize.pow((d * d) as u32) {
            let mut r = k;
            let m: Vec<u8> = (0..d * d)
                .map(|_| {
                    let c = (r % 3) as u8;
                    r /= 3;
                    c
                })
                .collect();
            if !keep(&m) {
                continue;
            }
            let perm: Vec<u8> = vecs
                .iter()
                .map(|v| {
                    let img: Vec<u8> = (0..d)
                        .map(|i| ((0..d).map(|j| m[i * d + j] as u32 * v[j] as u32).sum::<u32>() % 3) as u8)
                        .collect();
                    code(&img) as u8
                })
                .collect();
            gens.push(perm);
        }
        PermGroup::generate(nvec, &gens)
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&compose(&self.elems[a], &self.elems[b])]
    }

    fn order_of(&self, a: usize) -> u32 {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    fn inverse(&self, a: usize) -> usize {
        let mut x = a;
        loop {
            let y = self.mul(x, a);
            if y == 0 {
                return x;
            }
            x = y;
        }
    }

    /// Subgroup generated by all commutators of pairs from `set`.
    fn commutator_subgroup(&self, set: &[usize]) -> Vec<usize> {
        let mut gens = Vec::new();
        for &a in set {
            for &b in set {
                let c = self.mul(self.mul(self.inverse(a), self.inverse(b)), self.mul(a, b));
                gens.push(c);
            }
        }
        gens.sort_unstable();
        gens.dedup();
        let mut out = vec![0usize];
        let mut seen = vec![false; self.elems.len()];
        seen[0] = true;
        let mut head = 0;
        while head < out.len() {
            for &g in &gens {
                let p = self.mul(out[head], g);
                if !seen[p] {
                    seen[p] = true;
                    out.push(p);
                }
            }
            head += 1;
        }
        out
    }

    fn fingerprint(&self) -> Fingerprint {
        let n = self.elems.len();
        let mut hist = BTreeMap::new();
        for a in 0..n {
            *hist.entry(self.order_of(a)).or_insert(0usize) += 1;
        }
        let is_abelian = (0..n).all(|a| (0..n).all(|b| self.mul(a, b) == self.mul(b, a)));
        let mut cur: Vec<usize> = (0..n).collect();
        let mut len = 0;
        let derived_length = loop {
            if cur.len() == 1 {
                break Some(len);
            }
            let next = self.commutator_subgroup(&cur);
            if next.len() == cur.len() {
                break None;
            }
            cur = next;
            len += 1;
        };
        Fingerprint::from_histogram(hist, is_abelian, derived_length)
    }
}

fn compose(a: &[u8], b: &[u8]) -> Vec<u8> {
    // apply a, then b
    a.iter().map(|&i| b[i as usize]).collect()
}

/// Name a fingerprint using the catalogue, if it matches one of the listed types.
pub fn identify(fp: &Fingerprint, candidates: &[AbstractType]) -> Option<AbstractType> {
    candidates.iter().copied().find(|t| &t.fingerprint() == fp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalogue_orders() {
        let cases = [
            (AbstractType::Cyclic(3), 3),
            (AbstractType::Klein, 4),
            (AbstractType::S3, 6),
            (AbstractType::D8, 8),
            (AbstractType::S3xS3, 36),
            (AbstractType::GL23, 48),
            (AbstractType::UpperBorel108, 108),
        ];
        for (t, n) in cases {
            assert_eq!(t.fingerprint().order, n, "{t}");
        }
    }

    #[test]
    fn catalogue_histograms() {
        // hand-counted element orders
        assert_eq!(
            AbstractType::GL23.fingerprint().order_histogram,
            vec![(1, 1), (2, 13), (3, 8), (4, 6), (6, 8), (8, 12)]
        );
        assert_eq!(
            AbstractType::S3xS3.fingerprint().order_histogram,
            vec![(1, 1), (2, 15), (3, 8), (6, 12)]
        );
        assert_eq!(AbstractType::D8.fingerprint().order_histogram, vec![(1, 1), (2, 5), (4, 2)]);
        let b = AbstractType::UpperBorel108.fingerprint();
        assert_eq!(b.derived_length, Some(3));
        assert!(!b.is_abelian);
        assert_eq!(AbstractType::GL23.fingerprint().derived_length, Some(4));
        assert!(AbstractType::Klein.fingerprint().is_abelian);
    }
}
