//! Products of binomials `u^a ± v^b`, split into parametrized branches over
//! a cyclotomic field.
//!
//! With `g = gcd(a, b)`, `a = g a'`, `b = g b'`, the factor `u^a + c v^b`
//! (`c = ±1`) has `g` branches `v = t^a'`, `u = ω t^b'`, where `ω` runs over
//! the roots with `ω^a'` a `g`-th root of `-c`. Every such `ω` is a power of
//! `ζ_{2 g a'}`.

use num_integer::Integer;

use super::branch::ParamBranch;
use super::field::{lcm_order, rational, Cyclotomic, CyclotomicField, Scalar};
use super::poly::BiPoly;
use super::OracleError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Var {
    X,
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Binomial {
    u: Var,
    a: u32,
    /// `+1` for `u^a + v^b`, `-1` for `u^a - v^b`
    sign: i64,
    b: u32,
}

struct Cursor<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.text.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn error(&self, what: &str) -> OracleError {
        OracleError::Parse(format!("{what} at offset {}", self.pos))
    }

    fn number(&mut self) -> Result<u32, OracleError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.text.len() && self.text[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.text[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| self.error("expected exponent"))
    }

    fn power(&mut self) -> Result<(Var, u32), OracleError> {
        let var = match self.peek() {
            Some(b'x') => Var::X,
            Some(b'y') => Var::Y,
            _ => return Err(self.error("expected x or y")),
        };
        self.pos += 1;
        let exp = if self.eat(b'^') { self.number()? } else { 1 };
        if exp == 0 {
            return Err(self.error("zero exponent"));
        }
        Ok((var, exp))
    }

    fn binomial(&mut self) -> Result<Binomial, OracleError> {
        let (u, a) = self.power()?;
        let sign = if self.eat(b'+') {
            1
        } else if self.eat(b'-') {
            -1
        } else {
            return Err(self.error("expected + or -"));
        };
        let (v, b) = self.power()?;
        if u == v {
            return Err(self.error("binomial needs one power of x and one of y"));
        }
        Ok(Binomial { u, a, sign, b })
    }
}

fn parse_factors(text: &str) -> Result<Vec<Binomial>, OracleError> {
    let text = text.trim();
    let text = text
        .strip_suffix("=0")
        .or_else(|| text.strip_suffix("= 0"))
        .unwrap_or(text);
    let mut cur = Cursor {
        text: text.as_bytes(),
        pos: 0,
    };
    let mut factors = Vec::new();
    if cur.peek() != Some(b'(') {
        factors.push(cur.binomial()?);
    } else {
        while cur.eat(b'(') {
            factors.push(cur.binomial()?);
            if !cur.eat(b')') {
                return Err(cur.error("expected )"));
            }
            cur.eat(b'*');
        }
    }
    if cur.peek().is_some() {
        return Err(cur.error("unexpected trailing input"));
    }
    if factors.is_empty() {
        return Err(OracleError::Parse("empty product".into()));
    }
    Ok(factors)
}

fn field_order(f: &Binomial) -> u32 {
    let g = f.a.gcd(&f.b);
    2 * g * (f.a / g)
}

/// Parse e.g. `(x^4+y^4)(x^2+y^6)(x^2+y^5)(y^2+x^4)` into its branches.
///
/// Branch ids are `f<i>.<k>`: factor `i`, branch `k`, both from one.
pub fn parse_binomial_product(text: &str, truncation: usize) -> Result<Vec<ParamBranch<Cyclotomic>>, OracleError> {
    let factors = parse_factors(text)?;
    let field = CyclotomicField::new(lcm_order(factors.iter().map(field_order)));
    let zero = field.rational(rational(0));
    let one = field.rational(rational(1));
    let mut out = Vec::new();
    for (i, f) in factors.iter().enumerate() {
        let g = f.a.gcd(&f.b);
        let (a1, b1) = ((f.a / g) as usize, (f.b / g) as usize);
        let step = (field.order() / field_order(f)) as i64;
        // ω^{a'} is a g-th root of -sign: angle (θ0 + k) / g with θ0 = 1/2 for sign +1
        let theta = if f.sign == 1 { 1 } else { 0 };
        for k in 0..g as i64 {
            let omega = field.root(step * (theta + 2 * k));
            let mut u = vec![zero.clone(); b1 + 1];
            u[b1] = omega.clone();
            let mut v = vec![zero.clone(); a1 + 1];
            v[a1] = one.clone();
            // u^{a'} - ω^{a'} v^{b'}
            let mut zeta = one.clone();
            for _ in 0..a1 {
                zeta = zeta.times(&omega);
            }
            let (ui, vi) = match f.u {
                Var::X => ((1, 0), (0, 1)),
                Var::Y => ((0, 1), (1, 0)),
            };
            let mut eq = BiPoly::monomial(one.clone(), ui.0 * a1 as u32, ui.1 * a1 as u32);
            eq.add_term(zeta.negated(), vi.0 * b1 as u32, vi.1 * b1 as u32);
            let (x, y) = match f.u {
                Var::X => (u, v),
                Var::Y => (v, u),
            };
            out.push(ParamBranch::new(
                format!("f{}.{}", i + 1, k + 1),
                x,
                y,
                Some(eq),
                truncation,
            )?);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splits_into_gcd_many_branches() {
        let b = parse_binomial_product("(x^4+y^4)(x^2+y^6)(x^2+y^5)(y^2+x^4)", 20).unwrap();
        assert_eq!(b.len(), 9);
        assert_eq!(b[0].x_coefficients()[0].field().order(), 8);
    }

    #[test]
    fn branches_lie_on_their_factor() {
        let b = parse_binomial_product("(x^4+y^4)(x^2-y^5)(y^2+x^4)", 24).unwrap();
        let whole = [(4u32, 0u32, 1i64), (0, 4, 1)];
        for br in &b[..4] {
            let mut f = BiPoly::zero(&br.zero());
            for &(i, j, c) in &whole {
                f.add_term(br.zero().embed(&rational(c)), i, j);
            }
            let (x, y) = br.series();
            assert!(f.substitute(&x, &y).coefficients().iter().all(Scalar::is_zero));
        }
    }

    #[test]
    fn rejects_malformed_input() {
        for bad in ["", "(x^2+x^3)", "(x^2+y^3", "x^2*y^3", "(x^0+y)"] {
            assert!(parse_binomial_product(bad, 10).is_err(), "{bad}");
        }
    }
}
