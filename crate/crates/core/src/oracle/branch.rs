use super::field::Scalar;
use super::poly::BiPoly;
use super::series::Series;
use super::OracleError;

/// A plane branch given by an exact polynomial parametrization
/// `t -> (x(t), y(t))`, read through a finite truncation order.
#[derive(Debug, Clone, PartialEq)]
pub struct ParamBranch<F> {
    pub id: String,
    x: Vec<F>,
    y: Vec<F>,
    /// irreducible local equation, when known
    equation: Option<BiPoly<F>>,
    truncation: usize,
}

impl<F: Scalar> ParamBranch<F> {
    pub fn new(
        id: impl Into<String>,
        x: Vec<F>,
        y: Vec<F>,
        equation: Option<BiPoly<F>>,
        truncation: usize,
    ) -> Result<ParamBranch<F>, OracleError> {
        let id = id.into();
        if x.is_empty() || y.is_empty() {
            return Err(OracleError::NotAtOrigin(id));
        }
        if !x[0].is_zero() || !y[0].is_zero() {
            return Err(OracleError::NotAtOrigin(id));
        }
        if x.iter().all(Scalar::is_zero) && y.iter().all(Scalar::is_zero) {
            return Err(OracleError::NotAtOrigin(id));
        }
        Ok(ParamBranch {
            id,
            x,
            y,
            equation,
            truncation,
        })
    }

    pub fn x_coefficients(&self) -> &[F] {
        &self.x
    }

    pub fn y_coefficients(&self) -> &[F] {
        &self.y
    }

    pub fn equation(&self) -> Option<&BiPoly<F>> {
        self.equation.as_ref()
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn with_truncation(&self, truncation: usize) -> ParamBranch<F> {
        ParamBranch {
            truncation,
            ..self.clone()
        }
    }

    pub fn zero(&self) -> F {
        self.x[0].zero_like()
    }

    pub fn series_at(&self, truncation: usize) -> (Series<F>, Series<F>) {
        let zero = self.zero();
        (
            Series::from_poly(&self.x, truncation, &zero),
            Series::from_poly(&self.y, truncation, &zero),
        )
    }

    pub fn series(&self) -> (Series<F>, Series<F>) {
        self.series_at(self.truncation)
    }

    /// Same polynomials `x(t)`, `y(t)` up to trailing zeros.
    pub fn same_parametrization(&self, other: &ParamBranch<F>) -> bool {
        let trim = |p: &[F]| p.len() - p.iter().rev().take_while(|c| c.is_zero()).count();
        let same = |a: &[F], b: &[F]| a[..trim(a)] == b[..trim(b)];
        same(&self.x, &other.x) && same(&self.y, &other.y)
    }

    /// `min(ord x, ord y)`, read from the exact polynomials.
    pub fn multiplicity(&self) -> usize {
        let ord = |p: &[F]| p.iter().position(|c| !c.is_zero()).unwrap_or(usize::MAX);
        ord(&self.x).min(ord(&self.y))
    }
}
