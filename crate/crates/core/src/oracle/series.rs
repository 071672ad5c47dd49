//! Truncated power series in one variable with tracked precision.
//!
//! A `Series` stores the coefficients of `t^0 .. t^(prec-1)`; everything
//! beyond is unknown. Products and quotients shrink the precision to what
//! is actually determined by the inputs.

use super::field::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Series<F> {
    coeffs: Vec<F>,
    zero: F,
}

impl<F: Scalar> Series<F> {
    /// Truncate (or zero-pad) an exact polynomial to `prec` known terms.
    pub fn from_poly(poly: &[F], prec: usize, zero: &F) -> Series<F> {
        let coeffs = (0..prec)
            .map(|i| poly.get(i).cloned().unwrap_or_else(|| zero.clone()))
            .collect();
        Series {
            coeffs,
            zero: zero.clone(),
        }
    }

    pub fn constant(c: F, prec: usize) -> Series<F> {
        let zero = c.zero_like();
        let mut coeffs = vec![zero.clone(); prec];
        if prec > 0 {
            coeffs[0] = c;
        }
        Series { coeffs, zero }
    }

    pub fn prec(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> &F {
        self.coeffs.get(i).unwrap_or(&self.zero)
    }

    pub fn coefficients(&self) -> &[F] {
        &self.coeffs
    }

    pub fn zero_scalar(&self) -> &F {
        &self.zero
    }

    /// Order of the first known nonzero coefficient.
    pub fn ord(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Lower bound on the order: the exact order, or the precision when
    /// every known coefficient vanishes.
    fn ord_bound(&self) -> usize {
        self.ord().unwrap_or(self.prec())
    }

    /// Divide by `t^m`; the first `m` coefficients must be (known) zero.
    pub fn shift_down(&self, m: usize) -> Series<F> {
        debug_assert!(self.coeffs.iter().take(m).all(Scalar::is_zero));
        Series {
            coeffs: self.coeffs.iter().skip(m).cloned().collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn plus(&self, other: &Series<F>) -> Series<F> {
        let prec = self.prec().min(other.prec());
        Series {
            coeffs: (0..prec).map(|i| self.coeffs[i].plus(&other.coeffs[i])).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn minus(&self, other: &Series<F>) -> Series<F> {
        let prec = self.prec().min(other.prec());
        Series {
            coeffs: (0..prec).map(|i| self.coeffs[i].minus(&other.coeffs[i])).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn scale(&self, k: &F) -> Series<F> {
        Series {
            coeffs: self.coeffs.iter().map(|c| c.times(k)).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn add_constant(&self, k: &F) -> Series<F> {
        let mut out = self.clone();
        if let Some(c0) = out.coeffs.first_mut() {
            *c0 = c0.plus(k);
        }
        out
    }

    pub fn times(&self, other: &Series<F>) -> Series<F> {
        let (oa, ob) = (self.ord_bound(), other.ord_bound());
        let prec = (self.prec() + ob).min(other.prec() + oa);
        let mut coeffs = vec![self.zero.clone(); prec];
        for i in oa..self.prec().min(prec) {
            let a = &self.coeffs[i];
            if a.is_zero() {
                continue;
            }
            for j in ob..other.prec().min(prec - i) {
                let b = &other.coeffs[j];
                if !b.is_zero() {
                    coeffs[i + j] = coeffs[i + j].plus(&a.times(b));
                }
            }
        }
        Series {
            coeffs,
            zero: self.zero.clone(),
        }
    }

    pub fn pow(&self, k: u32) -> Series<F> {
        if k == 0 {
            return Series::constant(self.zero.one_like(), self.prec());
        }
        let mut out = self.clone();
        for _ in 1..k {
            out = out.times(self);
        }
        out
    }

    /// Inverse of a unit (nonzero constant term).
    pub fn inverse(&self) -> Series<F> {
        let prec = self.prec();
        assert!(prec > 0 && !self.coeffs[0].is_zero(), "inverse of a non-unit series");
        let inv0 = self.coeffs[0].inverse();
        let mut out: Vec<F> = Vec::with_capacity(prec);
        out.push(inv0.clone());
        for n in 1..prec {
            let mut acc = self.zero.clone();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc.plus(&self.coeffs[k].times(&out[n - k]));
                }
            }
            out.push(acc.times(&inv0).negated());
        }
        Series {
            coeffs: out,
            zero: self.zero.clone(),
        }
    }

    /// Whether this is `t` to its full precision.
    pub fn is_parameter(&self) -> bool {
        self.prec() >= 2
            && self.coeffs[1].is_one()
            && self.coeffs.iter().enumerate().all(|(i, c)| i == 1 || c.is_zero())
    }

    /// `self(inner(t))` for `inner` without constant term.
    pub fn compose(&self, inner: &Series<F>) -> Series<F> {
        debug_assert!(inner.prec() == 0 || inner.coeffs[0].is_zero());
        if inner.is_parameter() {
            let mut out = self.clone();
            out.coeffs.truncate(inner.prec());
            return out;
        }
        let oi = inner.ord_bound().max(1);
        // terms of self beyond its precision contribute at order >= prec*oi
        let cap = self.prec() * oi;
        let mut acc = Series::constant(self.zero.clone(), cap);
        for c in self.coeffs.iter().rev() {
            acc = acc.times(inner).add_constant(c);
            acc.coeffs.truncate(cap);
        }
        acc.coeffs.truncate(cap);
        acc
    }

    /// Compositional inverse of a series with nonzero linear term.
    pub fn revert(&self) -> Series<F> {
        let prec = self.prec();
        assert!(prec >= 2 && self.coeffs[0].is_zero() && !self.coeffs[1].is_zero());
        if self.is_parameter() {
            return self.clone();
        }
        let inv1 = self.coeffs[1].inverse();
        let mut ident = vec![self.zero.clone(); prec];
        ident[1] = self.zero.one_like();
        let u = Series {
            coeffs: ident,
            zero: self.zero.clone(),
        };
        let mut g = u.scale(&inv1);
        for _ in 0..prec {
            let err = self.compose(&g).minus(&u);
            g = g.minus(&err.scale(&inv1));
            g.coeffs.truncate(prec);
        }
        g
    }
}
