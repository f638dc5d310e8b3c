//! Arithmetic in GF(p^n).
//!
//! Elements are encoded as integers `0..q`, where the code of
//! `c_0 + c_1 x + ... + c_{n-1} x^{n-1}` is `sum c_i p^i`. Prime fields use
//! plain residues. Extension fields are supported for characteristic 2 and 3.

use thiserror::Error;

/// Largest field order accepted.
pub const MAX_FIELD_ORDER: u64 = 1 << 20;

/// Full addition/multiplication tables are kept up to this order.
const FULL_TABLE_LIMIT: u32 = 256;
/// Log/antilog tables are kept up to this order.
const LOG_TABLE_LIMIT: u32 = 1 << 13;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension fields are only supported in characteristic 2 or 3 (got {0}^{1})")]
    UnsupportedCharacteristic(u64, u32),
    #[error("field order {0} exceeds the supported maximum {MAX_FIELD_ORDER}")]
    TooLarge(u64),
    #[error("zero has no multiplicative inverse")]
    DivisionByZero,
}

#[derive(Debug, Clone)]
enum Tables {
    Full { add: Vec<u32>, mul: Vec<u32> },
    Log { log: Vec<u32>, exp: Vec<u32> },
    None,
}

#[derive(Debug, Clone)]
pub struct FiniteField {
    characteristic: u32,
    degree: u32,
    order: u32,
    /// Monic modulus, coefficients from the constant term upward (length degree + 1).
    modulus: Vec<u32>,
    primitive: u32,
    inverse: Vec<u32>,
    tables: Tables,
}

/// Splits `q` as `p^n` with `p` prime, if possible.
pub fn prime_power_parts(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            break;
        }
        p += 1;
    }
    if p * p > q {
        return Some((q, 1));
    }
    let mut n = 0;
    let mut r = q;
    while r % p == 0 {
        r /= p;
        n += 1;
    }
    (r == 1).then_some((p, n))
}

pub fn is_prime(n: u64) -> bool {
    matches!(prime_power_parts(n), Some((_, 1)))
}

impl FiniteField {
    pub fn new(q: u64) -> Result<Self, FieldError> {
        if q > MAX_FIELD_ORDER {
            return Err(FieldError::TooLarge(q));
        }
        let (p, n) = prime_power_parts(q).ok_or(FieldError::NotPrimePower(q))?;
        if n > 1 && p != 2 && p != 3 {
            return Err(FieldError::UnsupportedCharacteristic(p, n));
        }
        let p = p as u32;
        let modulus = if n == 1 {
            vec![0, 1]
        } else {
            least_irreducible(p, n)
        };
        let mut field = FiniteField {
            characteristic: p,
            degree: n,
            order: q as u32,
            modulus,
            primitive: 0,
            inverse: Vec::new(),
            tables: Tables::None,
        };
        field.primitive = field.find_primitive();
        field.build_tables();
        Ok(field)
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn characteristic(&self) -> u32 {
        self.characteristic
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The defining polynomial, coefficients from the constant term upward.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The least code generating the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        self.primitive
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn one(&self) -> u32 {
        1
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Tables::Full { add, .. } => add[(a * self.order + b) as usize],
            _ => self.add_slow(a, b),
        }
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.characteristic == 2 {
            return a;
        }
        self.sub(0, a)
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if self.characteristic == 2 {
            return a ^ b;
        }
        let p = self.characteristic;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut place = 1;
        for _ in 0..self.degree {
            let d = (a % p + p - b % p) % p;
            out += d * place;
            place *= p;
            a /= p;
            b /= p;
        }
        out
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.tables {
            Tables::Full { mul, .. } => mul[(a * self.order + b) as usize],
            Tables::Log { log, exp } => {
                if a == 0 || b == 0 {
                    0
                } else {
                    let s = (log[a as usize] + log[b as usize]) % (self.order - 1);
                    exp[s as usize]
                }
            }
            Tables::None => self.mul_slow(a, b),
        }
    }

    pub fn inv(&self, a: u32) -> Result<u32, FieldError> {
        if a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        if !self.inverse.is_empty() {
            return Ok(self.inverse[a as usize]);
        }
        Ok(self.pow(a, self.order as u64 - 2))
    }

    pub fn div(&self, a: u32, b: u32) -> Result<u32, FieldError> {
        Ok(self.mul(a, self.inv(b)?))
    }

    pub fn pow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: u32) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    fn digits(&self, mut a: u32) -> Vec<u32> {
        let p = self.characteristic;
        (0..self.degree)
            .map(|_| {
                let d = a % p;
                a /= p;
                d
            })
            .collect()
    }

    fn pack_digits(&self, digits: &[u32]) -> u32 {
        digits
            .iter()
            .rev()
            .fold(0, |acc, &d| acc * self.characteristic + d)
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        if self.characteristic == 2 {
            return a ^ b;
        }
        if self.degree == 1 {
            return (a + b) % self.characteristic;
        }
        let p = self.characteristic;
        let (da, db) = (self.digits(a), self.digits(b));
        let sum: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
        self.pack_digits(&sum)
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let p = self.characteristic as u64;
        if self.degree == 1 {
            return ((a as u64 * b as u64) % p) as u32;
        }
        let n = self.degree as usize;
        let (da, db) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * n - 1];
        for (i, &x) in da.iter().enumerate() {
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // reduce by the monic modulus
        for k in (n..prod.len()).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for i in 0..n {
                let m = self.modulus[i] as u64;
                prod[k - n + i] = (prod[k - n + i] + (p - c) * m) % p;
            }
        }
        let digits: Vec<u32> = prod[..n].iter().map(|&d| d as u32).collect();
        self.pack_digits(&digits)
    }

    fn find_primitive(&self) -> u32 {
        let group_order = self.order as u64 - 1;
        let prime_factors = distinct_prime_factors(group_order);
        (1..self.order)
            .find(|&g| {
                prime_factors
                    .iter()
                    .all(|&r| self.pow_slow(g, group_order / r) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic")
    }

    fn pow_slow(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    fn build_tables(&mut self) {
        let q = self.order;
        if q <= FULL_TABLE_LIMIT {
            let mut add = vec![0; (q * q) as usize];
            let mut mul = vec![0; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    add[(a * q + b) as usize] = self.add_slow(a, b);
                    mul[(a * q + b) as usize] = self.mul_slow(a, b);
                }
            }
            self.tables = Tables::Full { add, mul };
        } else if q <= LOG_TABLE_LIMIT {
            let mut log = vec![0; q as usize];
            let mut exp = vec![0; q as usize];
            let mut x = 1;
            for k in 0..q - 1 {
                exp[k as usize] = x;
                log[x as usize] = k;
                x = self.mul_slow(x, self.primitive);
            }
            self.tables = Tables::Log { log, exp };
        }
        if q <= LOG_TABLE_LIMIT {
            let mut inverse = vec![0; q as usize];
            for a in 1..q {
                inverse[a as usize] = self.pow(a, q as u64 - 2);
            }
            self.inverse = inverse;
        }
    }
}

pub(crate) fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Least monic irreducible polynomial of degree `n` over GF(p), comparing
/// coefficient sequences from the constant term upward.
fn least_irreducible(p: u32, n: u32) -> Vec<u32> {
    let count = (p as u64).pow(n);
    for idx in 0..count {
        // idx enumerates tuples with c_0 most significant
        let mut coeffs = vec![0u32; n as usize + 1];
        let mut r = idx;
        for i in (0..n as usize).rev() {
            coeffs[i] = (r % p as u64) as u32;
            r /= p as u64;
        }
        coeffs[n as usize] = 1;
        if coeffs[0] != 0 && is_irreducible(&coeffs, p) {
            return coeffs;
        }
    }
    unreachable!("an irreducible polynomial of every degree exists")
}

fn is_irreducible(f: &[u32], p: u32) -> bool {
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        let total = (p as u64).pow(d as u32);
        for idx in 0..total {
            let mut g = vec![0u32; d + 1];
            let mut r = idx;
            for c in g.iter_mut().take(d) {
                *c = (r % p as u64) as u32;
                r /= p as u64;
            }
            g[d] = 1;
            if poly_rem_is_zero(f, &g, p) {
                return false;
            }
        }
    }
    true
}

fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let mut r: Vec<u32> = f.to_vec();
    let dg = g.len() - 1;
    for k in (dg..r.len()).rev() {
        let c = r[k];
        if c == 0 {
            continue;
        }
        for i in 0..=dg {
            r[k - dg + i] = (r[k - dg + i] + (p - c) * g[i]) % p;
        }
    }
    r[..dg].iter().all(|&c| c == 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(FiniteField::new(6).unwrap_err(), FieldError::NotPrimePower(6));
        assert!(matches!(
            FiniteField::new(25),
            Err(FieldError::UnsupportedCharacteristic(5, 2))
        ));
        assert!(matches!(FiniteField::new(1 << 21), Err(FieldError::TooLarge(_))));
        assert!(FiniteField::new(1).is_err());
    }

    #[test]
    fn moduli_are_least() {
        assert_eq!(FiniteField::new(4).unwrap().modulus(), &[1, 1, 1]);
        assert_eq!(FiniteField::new(8).unwrap().modulus(), &[1, 0, 1, 1]);
        assert_eq!(FiniteField::new(27).unwrap().modulus(), &[1, 0, 2, 1]);
        assert_eq!(FiniteField::new(9).unwrap().modulus(), &[1, 0, 1]);
    }

    #[test]
    fn gf4_multiplication() {
        let f = FiniteField::new(4).unwrap();
        // x * x = x + 1
        assert_eq!(f.mul(2, 2), 3);
        assert_eq!(f.mul(2, 3), 1);
        assert_eq!(f.inv(2).unwrap(), 3);
        assert_eq!(f.inv(0), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn table_and_slow_paths_agree() {
        for q in [4u64, 8, 9, 27, 31, 243, 512, 729, 2187, 4096] {
            let f = FiniteField::new(q).unwrap();
            let step = (q as u32 / 37).max(1);
            for a in (0..f.order()).step_by(step as usize) {
                for b in (0..f.order()).step_by(step as usize) {
                    assert_eq!(f.mul(a, b), f.mul_slow(a, b), "q={q} {a}*{b}");
                    assert_eq!(f.add(a, b), f.add_slow(a, b));
                    assert_eq!(f.sub(f.add(a, b), b), a);
                }
            }
        }
    }

    #[test]
    fn large_field_without_tables() {
        let f = FiniteField::new(1 << 16).unwrap();
        let g = f.primitive_element();
        assert_eq!(f.pow(g, (1 << 16) - 1), 1);
        let a = 12345;
        assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
    }

    #[test]
    fn primitive_elements_have_full_order() {
        for q in [4u64, 5, 7, 8, 16, 27, 31, 32] {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.element_order(f.primitive_element()), Some(q - 1));
        }
    }

    #[test]
    fn prime_power_split() {
        assert_eq!(prime_power_parts(27), Some((3, 3)));
        assert_eq!(prime_power_parts(31), Some((31, 1)));
        assert_eq!(prime_power_parts(12), None);
        assert!(is_prime(8191));
        assert!(!is_prime(1));
    }
}
