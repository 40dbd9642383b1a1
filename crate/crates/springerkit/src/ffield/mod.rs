//! Exact arithmetic in finite fields GF(p^k).
//!
//! A [`Field`] owns the characteristic, the extension degree and (for k > 1)
//! the defining modulus, which is always the least monic irreducible of its
//! degree so that two fields with the same parameters are interchangeable.
//! Elements are stored as base-p digit strings packed into a single word and
//! tagged with the field they belong to, so mixing fields is caught at run
//! time instead of producing garbage.

mod matrix;
mod poly;

pub use matrix::Matrix;
pub use poly::Poly;

use crate::error::{Error, Result};
use std::fmt;
use std::sync::Arc;

/// Largest permitted cardinality, exclusive.
pub const CARDINALITY_CAP: u64 = 1 << 31;

#[derive(Debug, PartialEq, Eq)]
struct FieldInner {
    p: u64,
    degree: u32,
    /// Non-leading coefficients c_0..c_{k-1} of the monic modulus
    /// t^k + c_{k-1} t^{k-1} + ... + c_0. Empty when degree == 1.
    modulus: Vec<u64>,
    q: u64,
    fid: u64,
}

/// A finite field GF(p^k), cheap to clone and share.
#[derive(Clone)]
pub struct Field(Arc<FieldInner>);

/// An element of a specific [`Field`], as base-p digits packed into `enc`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FieldElem {
    fid: u64,
    enc: u64,
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElem({})", self.enc)
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.fid == other.0.fid
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.degree == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(f, "GF({}^{})", self.0.p, self.0.degree)
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Field {
    /// Constructs GF(p^degree). Repeated calls yield the identical modulus.
    pub fn new(p: u64, degree: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if degree == 0 {
            return Err(Error::TooLarge { p, degree });
        }
        let mut q: u64 = 1;
        for _ in 0..degree {
            q = q.checked_mul(p).filter(|&v| v <= CARDINALITY_CAP).ok_or(Error::TooLarge { p, degree })?;
        }
        if q > CARDINALITY_CAP {
            return Err(Error::TooLarge { p, degree });
        }
        let modulus = if degree == 1 {
            Vec::new()
        } else {
            least_irreducible_modulus(p, degree)
        };
        let fid = (p << 6) | degree as u64;
        Ok(Field(Arc::new(FieldInner { p, degree, modulus, q, fid })))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.degree
    }

    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Non-leading modulus coefficients, low degree first; empty for prime fields.
    pub fn modulus_coeffs(&self) -> &[u64] {
        &self.0.modulus
    }

    /// The modulus rendered as a polynomial in `t`, or `None` for prime fields.
    pub fn modulus_string(&self) -> Option<String> {
        if self.0.degree == 1 {
            return None;
        }
        let mut terms: Vec<String> = Vec::new();
        terms.push(match self.0.degree {
            1 => "t".to_string(),
            d => format!("t^{d}"),
        });
        for i in (0..self.0.modulus.len()).rev() {
            let c = self.0.modulus[i];
            if c == 0 {
                continue;
            }
            let t = match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "t".to_string(),
                (1, c) => format!("{c}*t"),
                (i, 1) => format!("t^{i}"),
                (i, c) => format!("{c}*t^{i}"),
            };
            terms.push(t);
        }
        Some(terms.join(" + "))
    }

    pub fn zero(&self) -> FieldElem {
        FieldElem { fid: self.0.fid, enc: 0 }
    }

    pub fn one(&self) -> FieldElem {
        FieldElem { fid: self.0.fid, enc: 1 }
    }

    /// Embeds an integer into the prime subfield, reducing mod p.
    pub fn from_int(&self, n: i64) -> FieldElem {
        let p = self.0.p as i64;
        let r = n.rem_euclid(p) as u64;
        FieldElem { fid: self.0.fid, enc: r }
    }

    /// Builds an element from coefficients of 1, t, ..., t^{k-1}, reducing mod p.
    pub fn from_coeffs(&self, coeffs: &[i64]) -> Result<FieldElem> {
        if coeffs.len() > self.0.degree as usize {
            return Err(Error::Parse(format!(
                "element has {} coefficients but the field has degree {}",
                coeffs.len(),
                self.0.degree
            )));
        }
        let p = self.0.p as i64;
        let mut enc: u64 = 0;
        for (i, &c) in coeffs.iter().enumerate() {
            enc += (c.rem_euclid(p) as u64) * self.0.p.pow(i as u32);
        }
        Ok(FieldElem { fid: self.0.fid, enc })
    }

    /// Digits of the element with respect to 1, t, ..., t^{k-1}.
    pub fn coeffs(&self, a: FieldElem) -> Vec<u64> {
        self.check(a);
        let mut out = Vec::with_capacity(self.0.degree as usize);
        let mut e = a.enc;
        for _ in 0..self.0.degree {
            out.push(e % self.0.p);
            e /= self.0.p;
        }
        out
    }

    /// All field elements in canonical (encoding) order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let fid = self.0.fid;
        (0..self.0.q).map(move |enc| FieldElem { fid, enc })
    }

    /// The n-th element in canonical order; `nth(0)` is zero, `nth(1)` is one.
    pub fn nth(&self, n: u64) -> FieldElem {
        assert!(n < self.0.q, "element index {n} out of range for {self:?}");
        FieldElem { fid: self.0.fid, enc: n }
    }

    /// Canonical index of an element, the inverse of [`Field::nth`].
    pub fn index_of(&self, a: FieldElem) -> u64 {
        self.check(a);
        a.enc
    }

    fn check(&self, a: FieldElem) {
        assert_eq!(a.fid, self.0.fid, "element from {:?} used in another field", self);
    }

    /// `true` when the element belongs to this field.
    pub fn owns(&self, a: FieldElem) -> bool {
        a.fid == self.0.fid
    }

    fn digits(&self, a: FieldElem, out: &mut [u64]) {
        let mut e = a.enc;
        for d in out.iter_mut().take(self.0.degree as usize) {
            *d = e % self.0.p;
            e /= self.0.p;
        }
    }

    fn encode(&self, digits: &[u64]) -> FieldElem {
        let mut enc: u64 = 0;
        for i in (0..self.0.degree as usize).rev() {
            enc = enc * self.0.p + digits[i] % self.0.p;
        }
        FieldElem { fid: self.0.fid, enc }
    }

    pub fn is_zero(&self, a: FieldElem) -> bool {
        self.check(a);
        a.enc == 0
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        if self.0.degree == 1 {
            return FieldElem { fid: a.fid, enc: (a.enc + b.enc) % self.0.p };
        }
        let k = self.0.degree as usize;
        let mut da = [0u64; 32];
        let mut db = [0u64; 32];
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        for i in 0..k {
            da[i] = (da[i] + db[i]) % self.0.p;
        }
        self.encode(&da[..k])
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        self.check(a);
        if self.0.degree == 1 {
            return FieldElem { fid: a.fid, enc: (self.0.p - a.enc) % self.0.p };
        }
        let k = self.0.degree as usize;
        let mut da = [0u64; 32];
        self.digits(a, &mut da);
        for d in da.iter_mut().take(k) {
            *d = (self.0.p - *d) % self.0.p;
        }
        self.encode(&da[..k])
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.check(a);
        self.check(b);
        if self.0.degree == 1 {
            return FieldElem { fid: a.fid, enc: (a.enc * b.enc) % self.0.p };
        }
        let k = self.0.degree as usize;
        let p = self.0.p;
        let mut da = [0u64; 32];
        let mut db = [0u64; 32];
        self.digits(a, &mut da);
        self.digits(b, &mut db);
        // schoolbook product, then reduction by the monic modulus
        let mut prod = [0u64; 63];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for i in (k..=(2 * k - 2)).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            prod[i] = 0;
            // t^i = t^{i-k} * (-modulus tail)
            for (j, &m) in self.0.modulus.iter().enumerate() {
                let sub = (c * m) % p;
                prod[i - k + j] = (prod[i - k + j] + p * p - sub) % p;
            }
        }
        self.encode(&prod[..k])
    }

    pub fn pow(&self, a: FieldElem, mut e: u64) -> FieldElem {
        self.check(a);
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: FieldElem) -> FieldElem {
        self.check(a);
        assert!(a.enc != 0, "inverse of zero in {:?}", self);
        self.pow(a, self.0.q - 2)
    }

    /// The p-th root of an element (inverse Frobenius), used when
    /// extracting p-th powers of polynomials.
    pub fn pth_root(&self, a: FieldElem) -> FieldElem {
        // a^(p^(k-1)) since Frobenius has order k
        let mut acc = a;
        for _ in 0..(self.0.degree - 1) {
            acc = self.pow(acc, self.0.p);
        }
        acc
    }

    /// Least multiplicative generator of the unit group.
    pub fn multiplicative_generator(&self) -> FieldElem {
        let m = self.0.q - 1;
        let primes = distinct_prime_factors(m);
        for enc in 2..self.0.q {
            let g = FieldElem { fid: self.0.fid, enc };
            if primes.iter().all(|&r| self.pow(g, m / r).enc != 1) {
                return g;
            }
        }
        // q = 2: unit group is trivial
        self.one()
    }

    /// Discrete log base the canonical generator, by baby-step giant-step.
    pub fn dlog(&self, a: FieldElem) -> u64 {
        self.check(a);
        assert!(a.enc != 0, "dlog of zero");
        let m = self.0.q - 1;
        if m == 1 {
            return 0;
        }
        let g = self.multiplicative_generator();
        let step = (m as f64).sqrt().ceil() as u64;
        let mut table = std::collections::HashMap::new();
        let mut cur = self.one();
        for j in 0..step {
            table.entry(cur.enc).or_insert(j);
            cur = self.mul(cur, g);
        }
        let giant = self.inv(self.pow(g, step));
        let mut gamma = a;
        for i in 0..=step {
            if let Some(&j) = table.get(&gamma.enc) {
                return (i * step + j) % m;
            }
            gamma = self.mul(gamma, giant);
        }
        unreachable!("dlog table must contain every unit");
    }

    /// Least element of exact multiplicative order n, if one exists.
    pub fn element_of_order(&self, n: u64) -> Option<FieldElem> {
        if n == 0 || (self.0.q - 1) % n != 0 {
            return None;
        }
        (1..self.0.q)
            .map(|enc| FieldElem { fid: self.0.fid, enc })
            .find(|&x| {
                self.pow(x, n).enc == 1
                    && distinct_prime_factors(n).iter().all(|&r| self.pow(x, n / r).enc != 1)
            })
    }
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Finds the least monic irreducible of the given degree over GF(p),
/// ordering candidates by the base-p value of their non-leading coefficients.
fn least_irreducible_modulus(p: u64, degree: u32) -> Vec<u64> {
    let base = Field::new(p, 1).expect("prime field");
    let k = degree as usize;
    let q_tail = p.pow(degree);
    for m in 0..q_tail {
        let mut coeffs: Vec<FieldElem> = Vec::with_capacity(k + 1);
        let mut e = m;
        for _ in 0..k {
            coeffs.push(base.from_int((e % p) as i64));
            e /= p;
        }
        coeffs.push(base.one());
        let f = Poly::new(&base, coeffs);
        if f.is_irreducible() {
            return f.coeffs()[..k].iter().map(|c| base.coeffs(*c)[0]).collect();
        }
    }
    unreachable!("irreducible polynomials of every degree exist over GF(p)")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_construction() {
        let f = Field::new(7, 1).unwrap();
        assert_eq!(f.order(), 7);
        assert!(f.modulus_string().is_none());
    }

    #[test]
    fn composite_characteristic_rejected() {
        assert_eq!(Field::new(4, 1).unwrap_err(), Error::NotPrime(4));
    }

    #[test]
    fn cardinality_cap_enforced() {
        assert!(matches!(Field::new(2, 32), Err(Error::TooLarge { .. })));
        assert!(Field::new(2, 31).is_ok());
    }

    #[test]
    fn gf4_modulus_is_t2_t_1() {
        // oracle: t^2 + t + 1 has no root in GF(2), and it is the unique
        // monic irreducible quadratic there
        let base = Field::new(2, 1).unwrap();
        for x in 0..2i64 {
            let v = (x * x + x + 1).rem_euclid(2);
            assert_ne!(v, 0, "t^2+t+1 must have no root in GF(2)");
        }
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus_coeffs(), &[1, 1]);
        assert_eq!(f.modulus_string().as_deref(), Some("t^2 + t + 1"));
        let _ = base;
    }

    #[test]
    fn gf9_modulus() {
        // 1 and 2 both square to 1 mod 3, so t^2 + 1 is irreducible
        let f = Field::new(3, 2).unwrap();
        assert_eq!(f.modulus_coeffs(), &[1, 0]);
    }

    #[test]
    fn field_axioms_small_fields() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (3, 2), (2, 3)] {
            let f = Field::new(p, k).unwrap();
            let els: Vec<_> = f.elements().collect();
            for &a in &els {
                for &b in &els {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for &c in &els {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    }
                }
                assert_eq!(f.add(a, f.neg(a)), f.zero());
                if !f.is_zero(a) {
                    assert_eq!(f.mul(a, f.inv(a)), f.one());
                }
            }
        }
    }

    #[test]
    fn frobenius_fixes_every_element() {
        // x^(p^k) == x over the whole field, enumerated for q <= 256
        for (p, k) in [(2, 1), (2, 2), (2, 4), (2, 8), (3, 1), (3, 2), (5, 2), (7, 1), (13, 2)] {
            let f = Field::new(p, k).unwrap();
            if f.order() > 256 {
                continue;
            }
            for x in f.elements() {
                assert_eq!(f.pow(x, f.order()), x, "q = {}", f.order());
            }
        }
    }

    #[test]
    fn generator_and_dlog_agree() {
        for (p, k) in [(5, 1), (7, 1), (2, 2), (3, 2), (2, 4)] {
            let f = Field::new(p, k).unwrap();
            let g = f.multiplicative_generator();
            let mut seen = std::collections::HashSet::new();
            let mut cur = f.one();
            for _ in 0..(f.order() - 1) {
                seen.insert(cur);
                cur = f.mul(cur, g);
            }
            assert_eq!(seen.len() as u64, f.order() - 1, "generator has full order");
            for x in f.elements().skip(1) {
                assert_eq!(f.pow(g, f.dlog(x)), x);
            }
        }
    }

    #[test]
    fn element_of_order_picks_least() {
        let f = Field::new(7, 1).unwrap();
        // cube roots of unity in GF(7) are 1, 2, 4; least of order 3 is 2
        assert_eq!(f.element_of_order(3), Some(f.from_int(2)));
        assert_eq!(f.element_of_order(5), None);
        let g4 = Field::new(2, 2).unwrap();
        // t has order 3 in GF(4)
        assert_eq!(g4.element_of_order(3), Some(g4.from_coeffs(&[0, 1]).unwrap()));
    }

    #[test]
    fn from_int_reduces_negative_values() {
        let f = Field::new(5, 1).unwrap();
        assert_eq!(f.from_int(-1), f.from_int(4));
        assert_eq!(f.from_int(-7), f.from_int(3));
    }
}
