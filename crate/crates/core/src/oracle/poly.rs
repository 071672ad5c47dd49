//! Sparse bivariate polynomials in `x`, `y`.

use std::collections::BTreeMap;
use std::fmt;

use super::field::Scalar;
use super::series::Series;

#[derive(Debug, Clone, PartialEq)]
pub struct BiPoly<F> {
    /// `(i, j) -> c` for the monomial `c x^i y^j`; zero coefficients are never stored
    terms: BTreeMap<(u32, u32), F>,
    zero: F,
}

impl<F: Scalar> BiPoly<F> {
    pub fn zero(zero: &F) -> BiPoly<F> {
        BiPoly {
            terms: BTreeMap::new(),
            zero: zero.clone(),
        }
    }

    pub fn monomial(c: F, i: u32, j: u32) -> BiPoly<F> {
        let mut p = BiPoly::zero(&c.zero_like());
        p.add_term(c, i, j);
        p
    }

    pub fn add_term(&mut self, c: F, i: u32, j: u32) {
        let entry = self.terms.entry((i, j)).or_insert_with(|| c.zero_like());
        *entry = entry.plus(&c);
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &F)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn plus(&self, other: &BiPoly<F>) -> BiPoly<F> {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(c.clone(), i, j);
        }
        out
    }

    pub fn minus(&self, other: &BiPoly<F>) -> BiPoly<F> {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(c.negated(), i, j);
        }
        out
    }

    pub fn times(&self, other: &BiPoly<F>) -> BiPoly<F> {
        let mut out = BiPoly::zero(&self.zero);
        for (&(i1, j1), a) in &self.terms {
            for (&(i2, j2), b) in &other.terms {
                out.add_term(a.times(b), i1 + i2, j1 + j2);
            }
        }
        out
    }

    pub fn square(&self) -> BiPoly<F> {
        self.times(self)
    }

    /// Univariate polynomial `Σ c_k x^k` as a bivariate one.
    pub fn in_x(coeffs: &[F]) -> BiPoly<F> {
        let zero = coeffs
            .first()
            .map(Scalar::zero_like)
            .expect("nonempty coefficient list");
        let mut p = BiPoly::zero(&zero);
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                p.add_term(c.clone(), k as u32, 0);
            }
        }
        p
    }

    /// `f(x(t), y(t))` as a series, by Horner's rule in `y` over
    /// coefficients in `x`.
    pub fn substitute(&self, x: &Series<F>, y: &Series<F>) -> Series<F> {
        let prec = x.prec().max(y.prec());
        let zero = Series::constant(self.zero.clone(), prec);
        let max_j = self.terms.keys().map(|k| k.1).max().unwrap_or(0);
        let mut acc = zero.clone();
        for j in (0..=max_j).rev() {
            let mut row: Vec<(u32, &F)> = self
                .terms
                .iter()
                .filter(|(k, _)| k.1 == j)
                .map(|(k, c)| (k.0, c))
                .collect();
            row.sort_by_key(|&(i, _)| std::cmp::Reverse(i));
            let mut a = zero.clone();
            let mut deg = row.first().map_or(0, |r| r.0);
            for (i, c) in row {
                while deg > i {
                    a = a.times(x);
                    deg -= 1;
                }
                a = a.add_constant(c);
            }
            for _ in 0..deg {
                a = a.times(x);
            }
            acc = acc.times(y).plus(&a);
        }
        acc
    }
}

fn monomial_text(i: u32, j: u32) -> String {
    let var = |name: &str, e: u32| match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(format!("{name}^{e}")),
    };
    [var("x", i), var("y", j)]
        .into_iter()
        .flatten()
        .collect::<Vec<_>>()
        .join("*")
}

impl<F: Scalar> fmt::Display for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // ascending total degree, y-heavy terms first within a degree
        let mut keys: Vec<(u32, u32)> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&(i, j)| (i + j, i));
        for (n, (i, j)) in keys.into_iter().enumerate() {
            let text = self.terms[&(i, j)].to_string();
            let (negative, coeff) = if text.contains(' ') {
                (false, format!("({text})"))
            } else if let Some(rest) = text.strip_prefix('-') {
                (true, rest.to_string())
            } else {
                (false, text)
            };
            match (n, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = monomial_text(i, j);
            match (mono.is_empty(), coeff == "1") {
                (true, _) => write!(f, "{coeff}")?,
                (false, true) => write!(f, "{mono}")?,
                (false, false) => write!(f, "{coeff}*{mono}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::field::rational;

    #[test]
    fn display_orders_by_degree() {
        let mut p = BiPoly::monomial(rational(1), 0, 2);
        p.add_term(rational(-4), 5, 0);
        p.add_term(rational(-2), 1, 1);
        assert_eq!(p.to_string(), "y^2 - 2*x*y - 4*x^5");
    }

    #[test]
    fn substitution_order() {
        // y - x^3 at (t^2, t^5): t^5 - t^6
        let mut f = BiPoly::monomial(rational(1), 0, 1);
        f.add_term(rational(-1), 3, 0);
        let zero = rational(0);
        let x = Series::from_poly(&[zero.clone(), zero.clone(), rational(1)], 12, &zero);
        let y = Series::from_poly(&[0, 0, 0, 0, 0, 1].map(rational), 12, &zero);
        assert_eq!(f.substitute(&x, &y).ord(), Some(5));
    }
}
