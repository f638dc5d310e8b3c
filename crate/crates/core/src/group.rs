//! Explicit enumeration of small projective matrix groups.
//!
//! Every element is stored once as a canonical matrix. Indices are assigned
//! with the identity at 0 and all remaining elements in lexicographic order
//! of their entry codes, so index assignment is reproducible across runs.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::field::{is_prime, prime_power_parts, FieldError, FiniteField};

/// Groups larger than this are refused.
pub const MAX_GROUP_ORDER: u64 = 1 << 16;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("cannot parse group spec {0:?}; expected family:q such as psl2:7, psl3:3, psl4:2 or sz:8")]
    Parse(String),
    #[error("unsupported group {spec}: {reason}")]
    Unsupported { spec: String, reason: String },
    #[error("group {spec} has order {order}, above the limit {MAX_GROUP_ORDER}")]
    TooLarge { spec: String, order: u64 },
    #[error("enumeration of {spec} produced {found} elements, expected {expected}")]
    OrderMismatch {
        spec: String,
        expected: u64,
        found: u64,
    },
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Psl2,
    Psl3,
    Psl4,
    Sz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub family: Family,
    pub q: u64,
}

impl GroupSpec {
    pub fn new(family: Family, q: u64) -> Result<Self, GroupError> {
        let spec = GroupSpec { family, q };
        spec.validate()?;
        Ok(spec)
    }

    pub fn psl2(q: u64) -> Self {
        GroupSpec::new(Family::Psl2, q).expect("valid PSL(2,q) parameter")
    }

    fn unsupported(&self, reason: &str) -> GroupError {
        GroupError::Unsupported {
            spec: self.to_string(),
            reason: reason.to_string(),
        }
    }

    fn validate(&self) -> Result<(), GroupError> {
        let q = self.q;
        match self.family {
            Family::Psl2 => {
                let (p, n) = prime_power_parts(q)
                    .ok_or_else(|| self.unsupported("q must be a prime power"))?;
                if q < 4 {
                    return Err(self.unsupported("q must be at least 4"));
                }
                if n > 1 && p != 2 && p != 3 {
                    return Err(self.unsupported("q must be prime, a power of 2 or a power of 3"));
                }
            }
            Family::Psl3 if q != 3 => return Err(self.unsupported("only q = 3 is supported")),
            Family::Psl4 if q != 2 => return Err(self.unsupported("only q = 2 is supported")),
            Family::Sz => match prime_power_parts(q) {
                Some((2, n)) if n > 2 && is_prime(n as u64) => {}
                _ => return Err(self.unsupported("q must be 2^p for an odd prime p")),
            },
            _ => {}
        }
        let order = self.order();
        if order > MAX_GROUP_ORDER {
            return Err(GroupError::TooLarge {
                spec: self.to_string(),
                order,
            });
        }
        Ok(())
    }

    pub fn dimension(&self) -> usize {
        match self.family {
            Family::Psl2 => 2,
            Family::Psl3 => 3,
            Family::Psl4 | Family::Sz => 4,
        }
    }

    /// The order predicted by the standard formulas.
    pub fn order(&self) -> u64 {
        let q = self.q;
        match self.family {
            Family::Psl2 => q * (q * q - 1) / num_integer::gcd(2, q - 1),
            Family::Psl3 => q.pow(3) * (q * q - 1) * (q.pow(3) - 1) / num_integer::gcd(3, q - 1),
            Family::Psl4 => {
                q.pow(6) * (q * q - 1) * (q.pow(3) - 1) * (q.pow(4) - 1) / num_integer::gcd(4, q - 1)
            }
            Family::Sz => q * q * (q * q + 1) * (q - 1),
        }
    }

    /// Membership in the list of minimal simple groups.
    pub fn is_minimal_simple(&self) -> bool {
        let q = self.q;
        match self.family {
            Family::Psl2 => match prime_power_parts(q) {
                Some((2, n)) => is_prime(n as u64),
                Some((3, n)) => n % 2 == 1 && is_prime(n as u64),
                Some((p, 1)) => p > 3 && matches!(p % 5, 2 | 3),
                _ => false,
            },
            Family::Psl3 => q == 3,
            Family::Psl4 => false,
            Family::Sz => matches!(prime_power_parts(q), Some((2, n)) if n % 2 == 1 && is_prime(n as u64)),
        }
    }

    /// Order of the largest proper subgroup, for minimal simple groups; half the
    /// group order otherwise.
    pub fn proper_subgroup_bound(&self) -> u64 {
        let q = self.q;
        if !self.is_minimal_simple() {
            return self.order() / 2;
        }
        match self.family {
            Family::Psl2 if q % 2 == 0 => q * (q - 1),
            Family::Psl2 => [q * (q - 1) / 2, q + 1, q - 1, 24]
                .into_iter()
                .max()
                .unwrap_or(0),
            Family::Sz => q * q * (q - 1),
            Family::Psl3 => 432,
            Family::Psl4 => self.order() / 2,
        }
    }

    pub fn display_name(&self) -> String {
        match self.family {
            Family::Psl2 => format!("PSL(2,{})", self.q),
            Family::Psl3 => format!("PSL(3,{})", self.q),
            Family::Psl4 => format!("PSL(4,{})", self.q),
            Family::Sz => format!("Sz({})", self.q),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fam = match self.family {
            Family::Psl2 => "psl2",
            Family::Psl3 => "psl3",
            Family::Psl4 => "psl4",
            Family::Sz => "sz",
        };
        write!(f, "{fam}:{}", self.q)
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GroupError::Parse(s.to_string());
        let (fam, q) = s.trim().split_once(':').ok_or_else(bad)?;
        let family = match fam.to_ascii_lowercase().as_str() {
            "psl2" => Family::Psl2,
            "psl3" => Family::Psl3,
            "psl4" => Family::Psl4,
            "sz" => Family::Sz,
            _ => return Err(bad()),
        };
        let q: u64 = q.trim().parse().map_err(|_| bad())?;
        GroupSpec::new(family, q)
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: u32,
    /// Members in increasing index order.
    pub members: Vec<u32>,
    /// `conjugators[i]` is some g with `rep = g^-1 * members[i] * g`.
    pub conjugators: Vec<u32>,
    pub element_order: u32,
    /// Order of the normalizer of the cyclic subgroup generated by the representative.
    pub normalizer_order: u64,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Debug)]
pub struct Group {
    spec: GroupSpec,
    field: FiniteField,
    dim: usize,
    bits: u32,
    add_t: Vec<u8>,
    mul_t: Vec<u8>,
    q: usize,
    /// Nontrivial scalars identified with the identity.
    scalars: Vec<u8>,
    entries: Vec<u8>,
    index: FxHashMap<u64, u32>,
    inverse: Vec<u32>,
    orders: Vec<u32>,
    generators: Vec<u32>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<u32>,
    position_in_class: Vec<u32>,
    soluble: OnceLock<bool>,
}

impl Group {
    pub fn build(spec: GroupSpec) -> Result<Group, GroupError> {
        spec.validate()?;
        let field = FiniteField::new(spec.q)?;
        let q = field.order() as usize;
        let dim = spec.dimension();
        let bits = 32 - (q as u32 - 1).leading_zeros();
        debug_assert!(bits as usize * dim * dim <= 64);
        let mut add_t = vec![0u8; q * q];
        let mut mul_t = vec![0u8; q * q];
        for a in 0..q {
            for b in 0..q {
                add_t[a * q + b] = field.add(a as u32, b as u32) as u8;
                mul_t[a * q + b] = field.mul(a as u32, b as u32) as u8;
            }
        }
        let scalars = (2..q as u32)
            .filter(|&l| field.pow(l, dim as u64) == 1)
            .map(|l| l as u8)
            .collect();
        let mut g = Group {
            spec,
            field,
            dim,
            bits,
            add_t,
            mul_t,
            q,
            scalars,
            entries: Vec::new(),
            index: FxHashMap::default(),
            inverse: Vec::new(),
            orders: Vec::new(),
            generators: Vec::new(),
            classes: Vec::new(),
            class_of: Vec::new(),
            position_in_class: Vec::new(),
            soluble: OnceLock::new(),
        };
        let gens = g.generator_matrices();
        g.enumerate(&gens)?;
        g.compute_powers();
        g.compute_classes();
        Ok(g)
    }

    pub fn spec(&self) -> GroupSpec {
        self.spec
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.orders.len()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn generators(&self) -> &[u32] {
        &self.generators
    }

    pub fn dimension(&self) -> usize {
        self.dim
    }

    /// Matrix entries (row-major field codes) of an element.
    pub fn matrix(&self, a: u32) -> &[u8] {
        let s = self.dim * self.dim;
        &self.entries[a as usize * s..(a as usize + 1) * s]
    }

    /// Index of the element represented by a matrix, if it lies in the group.
    pub fn element_of(&self, m: &[u32]) -> Option<u32> {
        if m.len() != self.dim * self.dim || m.iter().any(|&e| e as usize >= self.q) {
            return None;
        }
        let buf: Vec<u8> = m.iter().map(|&e| e as u8).collect();
        self.lookup(&buf)
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let d = self.dim;
        let s = d * d;
        let x = &self.entries[a as usize * s..a as usize * s + s];
        let y = &self.entries[b as usize * s..b as usize * s + s];
        let mut out = [0u8; 16];
        self.matmul(x, y, &mut out[..s]);
        self.lookup(&out[..s]).expect("group is closed under multiplication")
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    /// `g^-1 * m * g`.
    #[inline]
    pub fn conj(&self, m: u32, g: u32) -> u32 {
        self.mul(self.inverse[g as usize], self.mul(m, g))
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        let k = self.orders[a as usize] as u64;
        let mut out = 0;
        for _ in 0..e % k {
            out = self.mul(out, a);
        }
        out
    }

    pub fn element_order(&self, a: u32) -> u32 {
        self.orders[a as usize]
    }

    pub fn element_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, a: u32) -> usize {
        self.class_of[a as usize] as usize
    }

    /// Some g with `rep = g^-1 * a * g`, where rep is the representative of a's class.
    pub fn conjugator_to_rep(&self, a: u32) -> u32 {
        let c = &self.classes[self.class_of(a)];
        c.conjugators[self.position_in_class[a as usize] as usize]
    }

    pub fn involutions(&self) -> Vec<u32> {
        (0..self.order() as u32)
            .filter(|&a| self.orders[a as usize] == 2)
            .collect()
    }

    pub fn involution_count(&self) -> usize {
        self.orders.iter().filter(|&&o| o == 2).count()
    }

    /// The cyclic subgroup generated by `a`, as a list starting at the identity.
    pub fn cyclic(&self, a: u32) -> Vec<u32> {
        let mut out = vec![0];
        let mut x = a;
        while x != 0 {
            out.push(x);
            x = self.mul(x, a);
        }
        out
    }

    /// Elements normalizing the cyclic subgroup generated by `a`.
    pub fn cyclic_normalizer(&self, a: u32) -> Vec<u32> {
        let cyc = self.cyclic(a);
        let mut inside = vec![false; self.order()];
        for &c in &cyc {
            inside[c as usize] = true;
        }
        (0..self.order() as u32)
            .filter(|&g| inside[self.conj(a, g) as usize])
            .collect()
    }

    pub fn centralizer(&self, a: u32) -> Vec<u32> {
        (0..self.order() as u32)
            .filter(|&g| self.mul(a, g) == self.mul(g, a))
            .collect()
    }

    pub(crate) fn soluble_cell(&self) -> &OnceLock<bool> {
        &self.soluble
    }

    fn matmul(&self, x: &[u8], y: &[u8], out: &mut [u8]) {
        let d = self.dim;
        let q = self.q;
        for i in 0..d {
            for j in 0..d {
                let mut acc = 0u8;
                for k in 0..d {
                    let p = self.mul_t[x[i * d + k] as usize * q + y[k * d + j] as usize];
                    acc = self.add_t[acc as usize * q + p as usize];
                }
                out[i * d + j] = acc;
            }
        }
    }

    fn canonical_key(&self, m: &[u8]) -> u64 {
        let mut best = self.pack(m);
        if !self.scalars.is_empty() {
            let mut tmp = [0u8; 16];
            for &l in &self.scalars {
                for (t, &e) in tmp.iter_mut().zip(m) {
                    *t = self.mul_t[l as usize * self.q + e as usize];
                }
                best = best.min(self.pack(&tmp[..m.len()]));
            }
        }
        best
    }

    #[inline]
    fn pack(&self, m: &[u8]) -> u64 {
        m.iter().fold(0u64, |k, &e| (k << self.bits) | e as u64)
    }

    fn unpack(&self, key: u64, out: &mut [u8]) {
        let mask = (1u64 << self.bits) - 1;
        let n = out.len();
        for (i, o) in out.iter_mut().enumerate() {
            *o = ((key >> (self.bits as usize * (n - 1 - i))) & mask) as u8;
        }
    }

    #[inline]
    fn lookup(&self, m: &[u8]) -> Option<u32> {
        self.index.get(&self.canonical_key(m)).copied()
    }

    fn generator_matrices(&self) -> Vec<Vec<u8>> {
        let f = &self.field;
        let d = self.dim;
        let one = 1u8;
        let neg_one = f.neg(1) as u8;
        let w = f.primitive_element();
        let ident = |m: &mut Vec<u8>| {
            for i in 0..d {
                m[i * d + i] = one;
            }
        };
        let mut gens = Vec::new();
        match self.spec.family {
            Family::Psl2 => {
                gens.push(vec![1, 1, 0, 1]);
                gens.push(vec![0, 1, neg_one, 0]);
                let wi = f.inv(w).expect("nonzero") as u8;
                gens.push(vec![w as u8, 0, 0, wi]);
            }
            Family::Psl3 | Family::Psl4 => {
                for i in 0..d - 1 {
                    for (r, c) in [(i, i + 1), (i + 1, i)] {
                        let mut m = vec![0u8; d * d];
                        ident(&mut m);
                        m[r * d + c] = one;
                        gens.push(m);
                    }
                }
            }
            Family::Sz => {
                let theta = |a: u32| f.pow(a, suzuki_theta_exponent(self.spec.q));
                gens.push(suzuki_s(f, &theta, 1, 0));
                gens.push(suzuki_s(f, &theta, 0, 1));
                gens.push(suzuki_s(f, &theta, w, 0));
                gens.push(suzuki_torus(f, self.spec.q, w));
                let mut t = vec![0u8; 16];
                for i in 0..4 {
                    t[i * 4 + (3 - i)] = 1;
                }
                gens.push(t);
            }
        }
        gens
    }

    fn enumerate(&mut self, gens: &[Vec<u8>]) -> Result<(), GroupError> {
        let s = self.dim * self.dim;
        let expected = self.spec.order();
        let mut ident = vec![0u8; s];
        for i in 0..self.dim {
            ident[i * self.dim + i] = 1;
        }
        let mut keys: Vec<u64> = vec![self.canonical_key(&ident)];
        let mut seen: FxHashMap<u64, u32> = FxHashMap::default();
        seen.insert(keys[0], 0);
        let gen_keys: Vec<u64> = gens.iter().map(|g| self.canonical_key(g)).collect();
        let mut a = vec![0u8; s];
        let mut b = vec![0u8; s];
        let mut out = vec![0u8; s];
        let mut head = 0;
        while head < keys.len() {
            self.unpack(keys[head], &mut a);
            for &gk in &gen_keys {
                self.unpack(gk, &mut b);
                self.matmul(&a, &b, &mut out);
                let k = self.canonical_key(&out);
                if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(k) {
                    e.insert(keys.len() as u32);
                    keys.push(k);
                    if keys.len() as u64 > expected {
                        return Err(GroupError::OrderMismatch {
                            spec: self.spec.to_string(),
                            expected,
                            found: keys.len() as u64,
                        });
                    }
                }
            }
            head += 1;
        }
        if keys.len() as u64 != expected {
            return Err(GroupError::OrderMismatch {
                spec: self.spec.to_string(),
                expected,
                found: keys.len() as u64,
            });
        }
        let id_key = keys[0];
        keys[1..].sort_unstable();
        debug_assert_eq!(keys[0], id_key);
        self.entries = vec![0u8; keys.len() * s];
        let mut index = FxHashMap::default();
        index.reserve(keys.len());
        for (i, &k) in keys.iter().enumerate() {
            let mut m = vec![0u8; s];
            self.unpack(k, &mut m);
            self.entries[i * s..(i + 1) * s].copy_from_slice(&m);
            index.insert(k, i as u32);
        }
        self.index = index;
        self.generators = gen_keys.iter().map(|k| self.index[k]).collect();
        self.generators.sort_unstable();
        self.generators.dedup();
        self.generators.retain(|&g| g != 0);
        Ok(())
    }

    fn compute_powers(&mut self) {
        let n = self.index.len();
        let mut orders = vec![0u32; n];
        let mut inverse = vec![0u32; n];
        for a in 0..n as u32 {
            if orders[a as usize] != 0 {
                continue;
            }
            let pows = self.cyclic(a);
            let k = pows.len() as u32;
            for (i, &p) in pows.iter().enumerate() {
                let i = i as u32;
                orders[p as usize] = k / num_integer::gcd(i, k);
                inverse[p as usize] = pows[((k - i) % k) as usize];
            }
        }
        self.orders = orders;
        self.inverse = inverse;
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![u32::MAX; n];
        let mut position = vec![0u32; n];
        let mut raw: Vec<(u32, Vec<u32>, Vec<u32>)> = Vec::new();
        for r in 0..n as u32 {
            if class_of[r as usize] != u32::MAX {
                continue;
            }
            let cid = raw.len() as u32;
            let mut members = vec![r];
            let mut witness = vec![0u32];
            class_of[r as usize] = cid;
            let mut head = 0;
            while head < members.len() {
                let (m, g) = (members[head], witness[head]);
                for &h in &self.generators {
                    let hi = self.inv(h);
                    let m2 = self.mul(hi, self.mul(m, h));
                    if class_of[m2 as usize] == u32::MAX {
                        class_of[m2 as usize] = cid;
                        members.push(m2);
                        witness.push(self.mul(hi, g));
                    }
                }
                head += 1;
            }
            raw.push((r, members, witness));
        }
        let classes: Vec<ConjugacyClass> = raw
            .into_par_iter()
            .map(|(r, members, witness)| {
                let mut pairs: Vec<(u32, u32)> = members.into_iter().zip(witness).collect();
                pairs.sort_unstable();
                let normalizer_order = self.cyclic_normalizer(r).len() as u64;
                ConjugacyClass {
                    representative: r,
                    members: pairs.iter().map(|p| p.0).collect(),
                    conjugators: pairs.iter().map(|p| p.1).collect(),
                    element_order: self.orders[r as usize],
                    normalizer_order,
                }
            })
            .collect();
        for c in &classes {
            for (i, &m) in c.members.iter().enumerate() {
                position[m as usize] = i as u32;
            }
        }
        self.classes = classes;
        self.class_of = class_of;
        self.position_in_class = position;
    }
}

/// Exponent e with theta(a) = a^e and theta^2 the Frobenius map.
fn suzuki_theta_exponent(q: u64) -> u64 {
    let n = q.trailing_zeros();
    1u64 << n.div_ceil(2)
}

fn suzuki_s(f: &FiniteField, theta: &dyn Fn(u32) -> u32, a: u32, b: u32) -> Vec<u8> {
    let at = theta(a);
    let bt = theta(b);
    let a2t = f.mul(f.mul(a, a), at);
    let a1t = f.mul(a, at);
    let r41 = f.add(f.add(a2t, f.mul(a, b)), bt);
    let r42 = f.add(a1t, b);
    let m: [u32; 16] = [1, 0, 0, 0, a, 1, 0, 0, b, at, 1, 0, r41, r42, a, 1];
    m.iter().map(|&e| e as u8).collect()
}

fn suzuki_torus(f: &FiniteField, q: u64, l: u32) -> Vec<u8> {
    let n = q.trailing_zeros();
    let half = 1u64 << (n / 2);
    let li = f.inv(l).expect("nonzero");
    let d = [
        f.pow(l, 1 + half),
        f.pow(l, half),
        f.pow(li, half),
        f.pow(li, 1 + half),
    ];
    let mut m = vec![0u8; 16];
    for i in 0..4 {
        m[i * 4 + i] = d[i] as u8;
    }
    m
}


#[cfg(test)]
mod larger_tests {
    use super::*;

    #[test]
    fn suzuki_8_enumerates() {
        let g = Group::build("sz:8".parse().unwrap()).unwrap();
        assert_eq!(g.order(), 29120);
        assert_eq!(g.classes().len(), 11);
        let mut orders: Vec<u32> = g.classes().iter().map(|c| c.element_order).collect();
        orders.sort();
        assert_eq!(orders, vec![1, 2, 4, 4, 5, 7, 7, 7, 13, 13, 13]);
    }

    #[test]
    fn odd_characteristic_projective() {
        for q in [27u64, 31] {
            let g = Group::build(GroupSpec::psl2(q)).unwrap();
            assert_eq!(g.order() as u64, GroupSpec::psl2(q).order());
            assert_eq!(g.involution_count() as u64, if q % 4 == 1 { q * (q + 1) / 2 } else { q * (q - 1) / 2 });
        }
    }
}
