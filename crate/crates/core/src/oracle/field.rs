//! Exact coefficient fields for parametrized branches.
//!
//! Branches emitted by this crate have rational coefficients. Branches read
//! off binomial equations such as `x^4 + y^4` need roots of unity, so the
//! oracle is generic over [`Scalar`] and also runs over cyclotomic fields
//! `Q(ζ_m)`.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

/// Field element with enough context to build its own zero and one.
pub trait Scalar: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Multiplicative inverse; panics on zero.
    fn inverse(&self) -> Self;
    fn embed(&self, q: &Rational) -> Self;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
    fn embed(&self, q: &Rational) -> Self {
        q.clone()
    }
}

// dense polynomials over Q, coefficients low to high
mod qpoly {
    use super::*;

    pub fn trim(p: &mut Vec<Rational>) {
        while p.last().is_some_and(Zero::is_zero) {
            p.pop();
        }
    }

    pub fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if Zero::is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        trim(&mut out);
        out
    }

    pub fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let n = a.len().max(b.len());
        let mut out: Vec<Rational> = (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
                let y = b.get(i).cloned().unwrap_or_else(Rational::zero);
                x - y
            })
            .collect();
        trim(&mut out);
        out
    }

    /// Division with remainder; `b` must be nonzero.
    pub fn divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
        let mut r = a.to_vec();
        trim(&mut r);
        let db = b.len() - 1;
        let lead = b[db].clone();
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![Rational::zero(); r.len() - db];
        while r.len() >= b.len() {
            let k = r.len() - b.len();
            let c = r.last().unwrap() / &lead;
            for (i, bi) in b.iter().enumerate() {
                r[k + i] -= &c * bi;
            }
            q[k] = c;
            r.pop();
            trim(&mut r);
        }
        trim(&mut q);
        (q, r)
    }

    /// `s` with `s * a ≡ 1 (mod m)`; `a` must be coprime to `m`.
    pub fn inverse_mod(a: &[Rational], m: &[Rational]) -> Vec<Rational> {
        let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
        trim(&mut r1);
        let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
        }
        assert_eq!(r0.len(), 1, "element not invertible modulo the field polynomial");
        let c = r0[0].recip();
        let mut out: Vec<Rational> = s0.into_iter().map(|x| x * &c).collect();
        let (_, rem) = divrem(&out, m);
        out = rem;
        out
    }
}

/// `Q(ζ_m)` presented as `Q[z] / Φ_m(z)`.
#[derive(Debug, PartialEq, Eq)]
pub struct CyclotomicField {
    order: u32,
    modulus: Vec<Rational>,
}

fn cyclotomic_polynomial(m: u32) -> Vec<Rational> {
    // Φ_m = (z^m - 1) / Π_{d | m, d < m} Φ_d
    let mut num = vec![Rational::zero(); m as usize + 1];
    num[0] = -Rational::one();
    num[m as usize] = Rational::one();
    for d in 1..m {
        if m.is_multiple_of(d) {
            let (q, r) = qpoly::divrem(&num, &cyclotomic_polynomial(d));
            debug_assert!(r.is_empty());
            num = q;
        }
    }
    num
}

impl CyclotomicField {
    pub fn new(order: u32) -> Arc<CyclotomicField> {
        assert!(order >= 1);
        Arc::new(CyclotomicField {
            order,
            modulus: cyclotomic_polynomial(order),
        })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    fn reduce(&self, mut p: Vec<Rational>) -> Vec<Rational> {
        qpoly::trim(&mut p);
        let (_, mut r) = qpoly::divrem(&p, &self.modulus);
        r.resize(self.degree(), Rational::zero());
        r
    }

    pub fn element(self: &Arc<Self>, coeffs: Vec<Rational>) -> Cyclotomic {
        Cyclotomic {
            field: self.clone(),
            coeffs: self.reduce(coeffs),
        }
    }

    pub fn rational(self: &Arc<Self>, q: Rational) -> Cyclotomic {
        self.element(vec![q])
    }

    /// `ζ_m^k`.
    pub fn root(self: &Arc<Self>, k: i64) -> Cyclotomic {
        let k = k.rem_euclid(self.order as i64) as usize;
        let mut p = vec![Rational::zero(); k + 1];
        p[k] = Rational::one();
        self.element(p)
    }
}

#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.field, &other.field) || self.field == other.field) && self.coeffs == other.coeffs
    }
}

impl Cyclotomic {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    fn check(&self, other: &Self) {
        assert!(
            Arc::ptr_eq(&self.field, &other.field) || self.field == other.field,
            "mixed cyclotomic fields"
        );
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in Q(z_{})", self.field.order)
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if Zero::is_zero(c) {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let a = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (k, One::is_one(&a)) {
                (0, _) => write!(f, "{a}")?,
                (_, true) => write!(f, "z{}", if k > 1 { format!("^{k}") } else { String::new() })?,
                (_, false) => write!(f, "{a}*z{}", if k > 1 { format!("^{k}") } else { String::new() })?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Scalar for Cyclotomic {
    fn zero_like(&self) -> Self {
        self.field.rational(Rational::zero())
    }
    fn one_like(&self) -> Self {
        self.field.rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn plus(&self, other: &Self) -> Self {
        self.check(other);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
    fn minus(&self, other: &Self) -> Self {
        self.check(other);
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
    fn times(&self, other: &Self) -> Self {
        self.check(other);
        self.field.element(qpoly::mul(&self.coeffs, &other.coeffs))
    }
    fn negated(&self) -> Self {
        Cyclotomic {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
    fn inverse(&self) -> Self {
        assert!(!Scalar::is_zero(self), "inverse of zero");
        let inv = qpoly::inverse_mod(&self.coeffs, &self.field.modulus);
        self.field.element(inv)
    }
    fn embed(&self, q: &Rational) -> Self {
        self.field.rational(q.clone())
    }
}

/// Smallest `m` with `ζ_m` generating every root the caller asks for.
pub fn lcm_order(orders: impl IntoIterator<Item = u32>) -> u32 {
    orders.into_iter().fold(1, |acc, m| acc.lcm(&m))
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}
