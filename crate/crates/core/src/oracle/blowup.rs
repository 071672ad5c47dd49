//! Iterated point blow-ups of parametrized plane branches.
//!
//! Two branches through the origin share a sequence of infinitely near
//! points; at each shared point we compare tangent directions, and if they
//! agree we pass to the chart of the blow-up containing the common next
//! point and translate it to the origin. The number of shared points is the
//! contact, and summing products of multiplicities over them gives the
//! intersection multiplicity (Noether).

use std::fmt;

use super::branch::ParamBranch;
use super::field::Scalar;
use super::series::Series;
use super::OracleError;
use crate::discriminant::BranchKind;

/// Largest truncation the retry loop will try.
pub const MAX_TRUNCATION: usize = 1 << 12;

/// Local parametrization at the current infinitely near point.
#[derive(Debug, Clone)]
struct Germ<F> {
    x: Series<F>,
    y: Series<F>,
}

#[derive(Debug, Clone)]
struct Tangent<F> {
    mult: usize,
    a: F,
    b: F,
}

impl<F: Scalar> Tangent<F> {
    fn same_direction(&self, other: &Tangent<F>) -> bool {
        self.a.times(&other.b) == self.b.times(&other.a)
    }

    fn chart(&self) -> Chart<F> {
        if !self.a.is_zero() {
            Chart::DivideByX(self.b.times(&self.a.inverse()))
        } else {
            Chart::DivideByY(self.a.times(&self.b.inverse()))
        }
    }

    fn direction_text(&self) -> String {
        format!("[{} : {}]", self.a, self.b)
    }
}

/// Chart of the blow-up: `y = x (y' + slope)` or `x = y (x' + slope)`.
#[derive(Debug, Clone, PartialEq)]
pub enum Chart<F> {
    DivideByX(F),
    DivideByY(F),
}

impl<F: Scalar> fmt::Display for Chart<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chart::DivideByX(s) => write!(f, "y = x*(y' + {s})"),
            Chart::DivideByY(s) => write!(f, "x = y*(x' + {s})"),
        }
    }
}

fn exhausted(what: &str) -> OracleError {
    OracleError::TruncationExhausted(what.to_string())
}

fn tangent<F: Scalar>(g: &Germ<F>) -> Result<Tangent<F>, OracleError> {
    let (ox, oy) = (g.x.ord(), g.y.ord());
    let mult = match (ox, oy) {
        (Some(a), Some(b)) => a.min(b),
        (Some(a), None) if a < g.y.prec() => a,
        (None, Some(b)) if b < g.x.prec() => b,
        _ => return Err(exhausted("tangent direction undetermined")),
    };
    if mult == 0 {
        return Err(OracleError::NotAtOrigin("branch left the origin".into()));
    }
    Ok(Tangent {
        mult,
        a: g.x.coeff(mult).clone(),
        b: g.y.coeff(mult).clone(),
    })
}

/// `num / den` where `den` has order exactly `m` and `num` order `>= m`.
fn divide<F: Scalar>(num: &Series<F>, den: &Series<F>, m: usize) -> Result<Series<F>, OracleError> {
    if den.prec() <= m || num.prec() <= m {
        return Err(exhausted("precision lost in blow-up"));
    }
    let unit = den.shift_down(m);
    Ok(num.shift_down(m).times(&unit.inverse()))
}

fn blow_up<F: Scalar>(g: &Germ<F>, t: &Tangent<F>, chart: &Chart<F>) -> Result<Germ<F>, OracleError> {
    Ok(match chart {
        Chart::DivideByX(slope) => Germ {
            x: g.x.clone(),
            y: divide(&g.y, &g.x, t.mult)?.add_constant(&slope.negated()),
        },
        Chart::DivideByY(slope) => Germ {
            x: divide(&g.x, &g.y, t.mult)?.add_constant(&slope.negated()),
            y: g.y.clone(),
        },
    })
}

fn germ<F: Scalar>(b: &ParamBranch<F>, truncation: usize) -> Germ<F> {
    let (x, y) = b.series_at(truncation);
    Germ { x, y }
}

/// One shared infinitely near point in a pairwise trace.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceStep {
    pub multiplicities: (usize, usize),
    pub directions: (String, String),
    /// chart used to reach the next point; `None` where the branches separate
    pub chart: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ContactTrace {
    pub contact: u32,
    pub noether_sum: u64,
    pub steps: Vec<TraceStep>,
}

/// Pairwise blow-up trace at a fixed truncation.
pub fn contact_trace_at<F: Scalar>(
    b1: &ParamBranch<F>,
    b2: &ParamBranch<F>,
    truncation: usize,
) -> Result<ContactTrace, OracleError> {
    let (mut g1, mut g2) = (germ(b1, truncation), germ(b2, truncation));
    let mut steps = Vec::new();
    let mut noether_sum = 0u64;
    loop {
        let (t1, t2) = (tangent(&g1)?, tangent(&g2)?);
        noether_sum += (t1.mult * t2.mult) as u64;
        let directions = (t1.direction_text(), t2.direction_text());
        if !t1.same_direction(&t2) {
            steps.push(TraceStep {
                multiplicities: (t1.mult, t2.mult),
                directions,
                chart: None,
            });
            break;
        }
        let chart = t1.chart();
        steps.push(TraceStep {
            multiplicities: (t1.mult, t2.mult),
            directions,
            chart: Some(chart.to_string()),
        });
        g1 = blow_up(&g1, &t1, &chart)?;
        g2 = blow_up(&g2, &t2, &chart)?;
    }
    Ok(ContactTrace {
        contact: steps.len() as u32,
        noether_sum,
        steps,
    })
}

/// Run `f` at increasing truncations until it stops running out of terms.
pub fn with_retry<T>(start: usize, mut f: impl FnMut(usize) -> Result<T, OracleError>) -> Result<T, OracleError> {
    let mut truncation = start.clamp(1, MAX_TRUNCATION);
    loop {
        match f(truncation) {
            Err(OracleError::TruncationExhausted(_)) if truncation < MAX_TRUNCATION => {
                truncation = (truncation * 2).min(MAX_TRUNCATION);
            }
            Err(OracleError::TruncationExhausted(what)) => {
                return Err(OracleError::TruncationExhausted(format!(
                    "{what} (gave up at {MAX_TRUNCATION} terms)"
                )))
            }
            other => return other,
        }
    }
}

fn start_truncation<F: Scalar>(b1: &ParamBranch<F>, b2: &ParamBranch<F>) -> usize {
    b1.truncation().max(b2.truncation())
}

pub fn contact_trace<F: Scalar>(b1: &ParamBranch<F>, b2: &ParamBranch<F>) -> Result<ContactTrace, OracleError> {
    if b1.same_parametrization(b2) {
        return Err(OracleError::CoincidentBranches(b1.id.clone(), b2.id.clone()));
    }
    with_retry(start_truncation(b1, b2), |t| contact_trace_at(b1, b2, t))
}

/// Number of shared infinitely near points (origin included).
pub fn oracle_contact<F: Scalar>(b1: &ParamBranch<F>, b2: &ParamBranch<F>) -> Result<u32, OracleError> {
    Ok(contact_trace(b1, b2)?.contact)
}

/// `ord_t f_1(x_2(t), y_2(t))` using the first branch's equation.
pub fn substitution_intersection_at<F: Scalar>(
    b1: &ParamBranch<F>,
    b2: &ParamBranch<F>,
    truncation: usize,
) -> Result<Option<u64>, OracleError> {
    let Some(f) = b1.equation() else {
        return Ok(None);
    };
    let (x, y) = b2.series_at(truncation);
    match f.substitute(&x, &y).ord() {
        Some(k) => Ok(Some(k as u64)),
        None => Err(exhausted("substituted equation vanishes to working precision")),
    }
}

/// Intersection multiplicity by the Noether sum, cross-checked by
/// substitution into whichever local equations are known.
pub fn oracle_intersection<F: Scalar>(b1: &ParamBranch<F>, b2: &ParamBranch<F>) -> Result<u64, OracleError> {
    intersection_from_trace(b1, b2, &contact_trace(b1, b2)?)
}

/// The Noether sum of `trace`, checked against substitution.
pub fn intersection_from_trace<F: Scalar>(
    b1: &ParamBranch<F>,
    b2: &ParamBranch<F>,
    trace: &ContactTrace,
) -> Result<u64, OracleError> {
    let noether = trace.noether_sum;
    for (p, q) in [(b1, b2), (b2, b1)] {
        let sub = with_retry(start_truncation(b1, b2), |t| substitution_intersection_at(p, q, t))?;
        if let Some(sub) = sub {
            if sub != noether {
                return Err(OracleError::MethodDisagreement {
                    first: b1.id.clone(),
                    second: b2.id.clone(),
                    noether,
                    substitution: sub,
                });
            }
        }
    }
    Ok(noether)
}

/// Multiplicities at the first `len` infinitely near points of a branch.
pub fn multiplicity_sequence_at<F: Scalar>(
    b: &ParamBranch<F>,
    len: usize,
    truncation: usize,
) -> Result<Vec<usize>, OracleError> {
    let mut g = germ(b, truncation);
    let mut out = Vec::with_capacity(len);
    while out.len() < len {
        let t = tangent(&g)?;
        out.push(t.mult);
        if out.len() < len {
            g = blow_up(&g, &t, &t.chart())?;
        }
    }
    Ok(out)
}

pub fn multiplicity_sequence<F: Scalar>(b: &ParamBranch<F>, len: usize) -> Result<Vec<usize>, OracleError> {
    with_retry(b.truncation(), |t| multiplicity_sequence_at(b, len, t))
}

fn branch_kind_at<F: Scalar>(b: &ParamBranch<F>, truncation: usize) -> Result<BranchKind, OracleError> {
    let mut g = germ(b, truncation);
    let mut doubles = 0u32;
    loop {
        let t = tangent(&g)?;
        match t.mult {
            1 if doubles == 0 => return Ok(BranchKind::Smooth),
            1 => return Ok(BranchKind::Cusp { depth: doubles }),
            2 => {
                doubles += 1;
                g = blow_up(&g, &t, &t.chart())?;
            }
            m => {
                return Err(OracleError::UnsupportedMultiplicity {
                    branch: b.id.clone(),
                    multiplicity: m,
                })
            }
        }
    }
}

/// Smooth, or a `(2, 2s+1)` cusp with `s` points of multiplicity two.
pub fn branch_kind<F: Scalar>(b: &ParamBranch<F>) -> Result<BranchKind, OracleError> {
    with_retry(b.truncation(), |t| branch_kind_at(b, t))
}

fn smooth_difference_order_at<F: Scalar>(
    b1: &ParamBranch<F>,
    b2: &ParamBranch<F>,
    truncation: usize,
) -> Result<u32, OracleError> {
    let (g1, g2) = (germ(b1, truncation), germ(b2, truncation));
    let (t1, t2) = (tangent(&g1)?, tangent(&g2)?);
    if t1.mult != 1 || t2.mult != 1 {
        return Err(OracleError::UnsupportedMultiplicity {
            branch: if t1.mult != 1 { b1.id.clone() } else { b2.id.clone() },
            multiplicity: t1.mult.max(t2.mult),
        });
    }
    if !t1.same_direction(&t2) {
        return Ok(1);
    }
    // align parameters on the coordinate the common tangent projects onto
    let graph = |g: &Germ<F>| -> Series<F> {
        let (param, value) = if !t1.a.is_zero() { (&g.x, &g.y) } else { (&g.y, &g.x) };
        value.compose(&param.revert())
    };
    match graph(&g1).minus(&graph(&g2)).ord() {
        Some(k) => Ok(k as u32),
        None => Err(exhausted("branches agree to working precision")),
    }
}

/// Contact of two smooth branches as the order of the difference of their
/// graphs over the common tangent.
pub fn smooth_difference_order<F: Scalar>(b1: &ParamBranch<F>, b2: &ParamBranch<F>) -> Result<u32, OracleError> {
    with_retry(start_truncation(b1, b2), |t| smooth_difference_order_at(b1, b2, t))
}
