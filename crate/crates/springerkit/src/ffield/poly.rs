//! Univariate polynomials over a [`Field`], with factorization into
//! irreducibles by squarefree decomposition, distinct-degree splitting and
//! seeded equal-degree splitting.

use super::{Field, FieldElem};
use num_bigint::BigUint;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Dense polynomial; the coefficient vector never has a trailing zero.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: Field,
    coeffs: Vec<FieldElem>,
}

impl std::fmt::Debug for Poly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly[{}]", self.display())
    }
}

impl Poly {
    pub fn new(field: &Field, mut coeffs: Vec<FieldElem>) -> Poly {
        while coeffs.last().is_some_and(|&c| field.is_zero(c)) {
            coeffs.pop();
        }
        Poly { field: field.clone(), coeffs }
    }

    pub fn zero(field: &Field) -> Poly {
        Poly { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn constant(field: &Field, c: FieldElem) -> Poly {
        Poly::new(field, vec![c])
    }

    pub fn x(field: &Field) -> Poly {
        Poly::new(field, vec![field.zero(), field.one()])
    }

    /// Builds a polynomial from small integer coefficients, low degree first.
    pub fn from_ints(field: &Field, ints: &[i64]) -> Poly {
        Poly::new(field, ints.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with deg 0 for constants; panics on the zero polynomial.
    pub fn degree(&self) -> usize {
        assert!(!self.coeffs.is_empty(), "degree of the zero polynomial");
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> FieldElem {
        *self.coeffs.last().expect("leading coefficient of zero")
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        self.coeffs.get(i).copied().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == self.field.one()
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect();
        Poly::new(f, coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect();
        Poly::new(f, coeffs)
    }

    pub fn scale(&self, c: FieldElem) -> Poly {
        let f = &self.field;
        Poly::new(f, self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(&self.field);
        }
        let f = &self.field;
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if f.is_zero(a) {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(f, out)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.leading()))
    }

    /// Euclidean division, returning (quotient, remainder).
    pub fn divmod(&self, divisor: &Poly) -> (Poly, Poly) {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let f = &self.field;
        if self.is_zero() || self.degree() < divisor.degree() {
            return (Poly::zero(f), self.clone());
        }
        let dlead_inv = f.inv(divisor.leading());
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let mut quot = vec![f.zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            let c = f.mul(rem[i], dlead_inv);
            if f.is_zero(c) {
                continue;
            }
            quot[i - dd] = c;
            for (j, &m) in divisor.coeffs.iter().enumerate() {
                rem[i - dd + j] = f.sub(rem[i - dd + j], f.mul(c, m));
            }
        }
        (Poly::new(f, quot), Poly::new(f, rem))
    }

    pub fn rem(&self, divisor: &Poly) -> Poly {
        self.divmod(divisor).1
    }

    pub fn div_exact(&self, divisor: &Poly) -> Poly {
        let (q, r) = self.divmod(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    pub fn eval(&self, x: FieldElem) -> FieldElem {
        let f = &self.field;
        let mut acc = f.zero();
        for &c in self.coeffs.iter().rev() {
            acc = f.add(f.mul(acc, x), c);
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        let f = &self.field;
        if self.coeffs.len() <= 1 {
            return Poly::zero(f);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| {
                let mut acc = f.zero();
                for _ in 0..(i as u64 % f.characteristic()) {
                    acc = f.add(acc, c);
                }
                acc
            })
            .collect();
        Poly::new(f, coeffs)
    }

    /// self^e mod m with a big-integer exponent.
    pub fn modpow(&self, e: &BigUint, m: &Poly) -> Poly {
        let f = &self.field;
        let mut base = self.rem(m);
        let mut acc = Poly::constant(f, f.one());
        for i in 0..e.bits() {
            if e.bit(i) {
                acc = acc.mul(&base).rem(m);
            }
            base = base.mul(&base).rem(m);
        }
        acc
    }

    /// x^(q^iterations) mod m, by iterating the q-power Frobenius.
    fn frobenius_power(x: &Poly, m: &Poly, iterations: u32) -> Poly {
        let q = BigUint::from(x.field.order());
        let mut acc = x.rem(m);
        for _ in 0..iterations {
            acc = acc.modpow(&q, m);
        }
        acc
    }

    /// Irreducibility over the coefficient field, by the Frobenius criterion:
    /// f of degree n is irreducible iff x^(q^n) == x mod f and
    /// gcd(x^(q^(n/r)) - x, f) = 1 for every prime r dividing n.
    pub fn is_irreducible(&self) -> bool {
        if self.is_zero() || self.degree() == 0 {
            return false;
        }
        let n = self.degree() as u32;
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let x = Poly::x(&self.field);
        let xq = Poly::frobenius_power(&x, &f, n);
        if xq != x.rem(&f) {
            return false;
        }
        for r in super::distinct_prime_factors(n as u64) {
            let sub = Poly::frobenius_power(&x, &f, n / r as u32);
            if !sub.sub(&x).gcd(&f).is_one() {
                return false;
            }
        }
        true
    }

    /// Factors into monic irreducibles with multiplicities, sorted by
    /// (degree, coefficients) so the output is independent of the seed path.
    pub fn factor(&self, rng: &mut ChaCha8Rng) -> Vec<(Poly, usize)> {
        assert!(!self.is_zero(), "factoring the zero polynomial");
        let mut out: Vec<(Poly, usize)> = Vec::new();
        for (sqfree, mult) in squarefree_decomposition(&self.monic()) {
            for (d, product) in distinct_degree_split(&sqfree) {
                let mut stack = vec![product];
                while let Some(g) = stack.pop() {
                    if g.degree() == d {
                        merge_factor(&mut out, g.monic(), mult);
                    } else {
                        let (a, b) = equal_degree_split(&g, d, rng);
                        stack.push(a);
                        stack.push(b);
                    }
                }
            }
        }
        out.sort_by(|(a, _), (b, _)| {
            a.degree()
                .cmp(&b.degree())
                .then_with(|| a.coeffs.cmp(&b.coeffs))
        });
        out
    }

    pub fn display(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let f = &self.field;
        let mut terms = Vec::new();
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeffs[i];
            if f.is_zero(c) {
                continue;
            }
            let cs = coeff_string(f, c);
            let t = match i {
                0 => cs.unwrap_or_else(|| "1".to_string()),
                1 => cs.map_or("t".to_string(), |s| format!("{s}*t")),
                _ => cs.map_or(format!("t^{i}"), |s| format!("{s}*t^{i}")),
            };
            terms.push(t);
        }
        terms.join(" + ")
    }
}

fn coeff_string(f: &Field, c: FieldElem) -> Option<String> {
    if c == f.one() {
        return None;
    }
    let digits = f.coeffs(c);
    if digits.iter().skip(1).all(|&d| d == 0) {
        Some(format!("{}", digits[0]))
    } else {
        Some(format!("[{}]", digits.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")))
    }
}

/// Writes f(t) = g(t^p) as g, taking p-th roots of the coefficients.
fn pth_root_poly(f: &Poly) -> Poly {
    let field = f.field();
    let p = field.characteristic() as usize;
    let mut coeffs = Vec::with_capacity(f.degree() / p + 1);
    for i in (0..=f.degree()).step_by(p) {
        coeffs.push(field.pth_root(f.coeff(i)));
    }
    Poly::new(field, coeffs)
}

/// Monic squarefree decomposition: pairs (g, m) with f = prod g^m and the
/// g squarefree and pairwise coprime.
fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let field = f.field().clone();
    let p = field.characteristic() as usize;
    let mut out = Vec::new();
    if f.degree() == 0 {
        return out;
    }
    let df = f.derivative();
    if df.is_zero() {
        for (g, m) in squarefree_decomposition(&pth_root_poly(f)) {
            out.push((g, m * p));
        }
        return out;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let z = w.div_exact(&y);
        if !z.is_one() {
            out.push((z, i));
        }
        i += 1;
        c = c.div_exact(&y);
        w = y;
    }
    if !c.is_one() {
        for (g, m) in squarefree_decomposition(&pth_root_poly(&c)) {
            out.push((g, m * p));
        }
    }
    out
}

/// Splits a monic squarefree f into (d, product of all irreducible factors
/// of degree d), in increasing d.
fn distinct_degree_split(f: &Poly) -> Vec<(usize, Poly)> {
    let field = f.field().clone();
    let q = BigUint::from(field.order());
    let x = Poly::x(&field);
    let mut out = Vec::new();
    let mut g = f.clone();
    let mut r = x.rem(&g);
    let mut d = 0;
    while g.degree() >= 1 && 2 * (d + 1) <= g.degree() {
        d += 1;
        r = r.modpow(&q, &g);
        let h = r.sub(&x).gcd(&g);
        if !h.is_one() {
            out.push((d, h.clone()));
            g = g.div_exact(&h);
            r = r.rem(&g);
        }
    }
    if g.degree() >= 1 {
        out.push((g.degree(), g));
    }
    out
}

/// One Cantor–Zassenhaus split of a product of distinct degree-d irreducibles.
fn equal_degree_split(f: &Poly, d: usize, rng: &mut ChaCha8Rng) -> (Poly, Poly) {
    let field = f.field().clone();
    let q = field.order();
    let n = f.degree();
    loop {
        let coeffs: Vec<FieldElem> = (0..n).map(|_| field.nth(rng.gen_range(0..q))).collect();
        let h = Poly::new(&field, coeffs);
        if h.is_zero() || h.degree() == 0 {
            continue;
        }
        let g = h.gcd(f);
        if !g.is_one() && g.degree() < n {
            return (g.clone(), f.div_exact(&g));
        }
        let candidate = if q % 2 == 1 {
            // h^((q^d - 1)/2) - 1 vanishes on half the factors
            let e = (BigUint::from(q).pow(d as u32) - 1u32) / 2u32;
            let hp = h.modpow(&e, f);
            hp.sub(&Poly::constant(&field, field.one()))
        } else {
            // characteristic 2: additive trace over GF(2)
            let bits = field.degree() as usize * d;
            let mut acc = h.rem(f);
            let mut term = h.rem(f);
            let two = BigUint::from(2u32);
            for _ in 1..bits {
                term = term.modpow(&two, f);
                acc = acc.add(&term);
            }
            acc
        };
        if candidate.is_zero() {
            continue;
        }
        let g = candidate.gcd(f);
        if !g.is_one() && g.degree() < n {
            return (g.clone(), f.div_exact(&g));
        }
    }
}

fn merge_factor(out: &mut Vec<(Poly, usize)>, g: Poly, mult: usize) {
    for (h, m) in out.iter_mut() {
        if *h == g {
            *m += mult;
            return;
        }
    }
    out.push((g, mult));
}
