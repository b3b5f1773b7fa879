//! Dense univariate and bivariate polynomials over the integers.
//!
//! `IntPoly` stores coefficients in ascending degree order as a
//! `Vec<BigInt>`. Invariant: the vector is either empty (zero polynomial)
//! or the last element is nonzero. `BiPoly` is a polynomial in `t` whose
//! coefficients are polynomials in a second variable `x`.
//!
//! Resultants use the subresultant polynomial remainder sequence, so all
//! intermediate values stay integral without the coefficient blow-up of
//! naive rational elimination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum IntPolyError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("malformed coefficient list: {0}")]
    ParseError(String),
}

/// A dense univariate polynomial with integer coefficients.
///
/// `coeffs[i]` is the coefficient of `t^i`; the zero polynomial is the
/// empty vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    /// Builds a polynomial from ascending coefficients, stripping trailing zeros.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// `c * t^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        IntPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the convention `deg 0 = 0`.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Coefficient of `t^i` (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(|c| c.is_one())
    }

    /// Horner evaluation at an integer point.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Sign of `p(n/d)` for `d > 0`, computed as the sign of the integer
    /// `d^deg * p(n/d)`.
    pub fn sign_at_rational(&self, n: &BigInt, d: &BigInt) -> i8 {
        debug_assert!(d.is_positive());
        let mut acc = BigInt::zero();
        let mut dpow = BigInt::one();
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &dpow;
            dpow *= d;
        }
        sign_of(&acc)
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `(-1)^deg * p(-t)`: negates every root, keeps the polynomial monic.
    pub fn reflect(&self) -> IntPoly {
        let d = self.degree_or_zero();
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if (d - i) % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Positive gcd of all coefficients; 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides out the content and normalizes the leading coefficient to be
    /// positive. Zero polynomial maps to zero.
    pub fn primitive_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = self.content();
        if self.leading_coeff().unwrap().is_negative() {
            c = -c;
        }
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    /// Divides out the positive content, keeping the sign of every
    /// coefficient. Zero polynomial maps to zero.
    pub fn reduce_content(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let c = self.content();
        IntPoly::new(self.coeffs.iter().map(|a| a / &c).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiplies by `t^k`.
    pub fn shift_up(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    /// Evaluates p(t + c), shifting every root by -c.
    pub fn compose_linear(&self, c: &BigInt) -> IntPoly {
        let mut acc = IntPoly::zero();
        for a in self.coeffs.iter().rev() {
            // acc = acc * (t + c) + a
            acc = acc.shift_up(1).add(&acc.scale(c));
            acc = acc.add(&IntPoly::constant(a.clone()));
        }
        acc
    }

    pub fn pow(&self, mut e: u32) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division: returns `self / d` when `d` divides `self` in Z[t].
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let dd = d.degree().unwrap();
        let mut r = self.coeffs.clone();
        let mut deg_r = r.len() - 1;
        if deg_r < dd {
            return None;
        }
        let mut q = vec![BigInt::zero(); deg_r - dd + 1];
        let lc = d.leading_coeff().unwrap();
        loop {
            while r[deg_r].is_zero() {
                if deg_r == 0 {
                    return Some(IntPoly::new(q));
                }
                deg_r -= 1;
            }
            if deg_r < dd {
                return None;
            }
            let (qc, rem) = r[deg_r].div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            let k = deg_r - dd;
            for (i, c) in d.coeffs.iter().enumerate() {
                let v = c * &qc;
                r[k + i] -= v;
            }
            q[k] = qc;
            debug_assert!(r[deg_r].is_zero());
            if deg_r == 0 {
                break;
            }
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    /// Pseudo-division: returns `(pquo, prem)` with
    /// `lc(d)^(deg self - deg d + 1) * self = pquo * d + prem`.
    pub fn pseudo_divrem(&self, d: &IntPoly) -> (IntPoly, IntPoly) {
        let dd = d.degree().expect("pseudo-division by zero");
        let lc = d.leading_coeff().unwrap().clone();
        let da = match self.degree() {
            None => return (IntPoly::zero(), IntPoly::zero()),
            Some(da) if da < dd => {
                return (IntPoly::zero(), self.clone());
            }
            Some(da) => da,
        };
        let mut q = IntPoly::zero();
        let mut r = self.clone();
        let mut e = (da - dd + 1) as u32;
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let s = IntPoly::monomial(r.leading_coeff().unwrap().clone(), dr - dd);
            q = q.scale(&lc).add(&s);
            r = r.scale(&lc).sub(&s.mul(d));
            e -= 1;
        }
        let f = lc.pow(e);
        (q.scale(&f), r.scale(&f))
    }

    /// Gcd in Z[t] via the primitive polynomial remainder sequence; the
    /// result has positive leading coefficient.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive_part().scale(&other.content()).abs_lc();
        }
        if other.is_zero() {
            return self.primitive_part().scale(&self.content()).abs_lc();
        }
        let cg = self.content().gcd(&other.content());
        let mut f = self.primitive_part();
        let mut g = other.primitive_part();
        if f.degree_or_zero() < g.degree_or_zero() {
            std::mem::swap(&mut f, &mut g);
        }
        while !g.is_zero() {
            let (_, r) = f.pseudo_divrem(&g);
            f = g;
            g = r.primitive_part();
        }
        f.scale(&cg)
    }

    fn abs_lc(&self) -> IntPoly {
        match self.leading_coeff() {
            Some(c) if c.is_negative() => self.neg(),
            _ => self.clone(),
        }
    }

    /// `p / gcd(p, p')`: same distinct roots, squarefree.
    pub fn squarefree_part(&self) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let g = self.gcd(&self.derivative());
        if g.degree_or_zero() == 0 {
            return self.clone();
        }
        self.div_exact(&g)
            .expect("gcd(p, p') divides p")
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree_or_zero() == 0
    }

    /// Resultant of `self` and `other` via the subresultant remainder
    /// sequence. Errors on zero input.
    pub fn resultant(&self, other: &IntPoly) -> Result<BigInt, IntPolyError> {
        let (mut a, mut b) = (self.clone(), other.clone());
        let (da, db) = match (a.degree(), b.degree()) {
            (Some(da), Some(db)) => (da, db),
            _ => return Err(IntPolyError::ZeroPolynomial),
        };
        let mut sign = 1i8;
        if da < db {
            std::mem::swap(&mut a, &mut b);
            if da % 2 == 1 && db % 2 == 1 {
                sign = -sign;
            }
        }
        if b.degree() == Some(0) {
            let res = b.coeff(0).pow(a.degree().unwrap() as u32);
            return Ok(if sign < 0 { -res } else { res });
        }
        let ca = a.content();
        let cb = b.content();
        a = IntPoly::new(a.coeffs.iter().map(|c| c / &ca).collect());
        b = IntPoly::new(b.coeffs.iter().map(|c| c / &cb).collect());
        let scale = ca.pow(b.degree().unwrap() as u32) * cb.pow(a.degree().unwrap() as u32);
        let mut g = BigInt::one();
        let mut h = BigInt::one();
        loop {
            let (din, dbn) = (a.degree().unwrap(), b.degree().unwrap());
            let delta = (din - dbn) as u32;
            if din % 2 == 1 && dbn % 2 == 1 {
                sign = -sign;
            }
            let (_, r) = a.pseudo_divrem(&b);
            if r.is_zero() {
                return Ok(BigInt::zero());
            }
            a = b;
            let denom = &g * h.pow(delta);
            b = IntPoly::new(r.coeffs.iter().map(|c| c / &denom).collect());
            g = a.leading_coeff().unwrap().clone();
            h = if delta == 0 {
                h
            } else {
                let num = g.pow(delta);
                &num / h.pow(delta - 1)
            };
            if b.degree() == Some(0) {
                break;
            }
        }
        let dlast = a.degree().unwrap() as u32;
        let res = if dlast == 0 {
            BigInt::one()
        } else {
            b.coeff(0).pow(dlast) / h.pow(dlast - 1)
        };
        let res = res * scale;
        Ok(if sign < 0 { -res } else { res })
    }

    /// `(-1)^(d(d-1)/2) * resultant(p, p') / lc(p)` for `d = deg p >= 1`.
    pub fn discriminant(&self) -> Result<BigInt, IntPolyError> {
        let d = self.degree().ok_or(IntPolyError::ZeroPolynomial)?;
        if d == 0 {
            return Err(IntPolyError::ZeroPolynomial);
        }
        if d == 1 {
            return Ok(BigInt::one());
        }
        let r = self.resultant(&self.derivative())?;
        let lc = self.leading_coeff().unwrap();
        let quot = &r / lc;
        debug_assert_eq!(&quot * lc, r);
        Ok(if (d * (d - 1) / 2) % 2 == 1 { -quot } else { quot })
    }

    /// Canonical text form: comma-separated coefficients, constant term first.
    pub fn to_coeff_csv(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Parses the canonical text form.
    pub fn parse_coeff_csv(s: &str) -> Result<IntPoly, IntPolyError> {
        let mut coeffs = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            coeffs.push(
                part.parse::<BigInt>()
                    .map_err(|e| IntPolyError::ParseError(format!("{part:?}: {e}")))?,
            );
        }
        Ok(IntPoly::new(coeffs))
    }

    /// Human-readable form in the given variable, highest degree first.
    pub fn display<'a>(&'a self, var: &'a str) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, var }
    }
}

pub fn sign_of(x: &BigInt) -> i8 {
    if x.is_zero() {
        0
    } else if x.is_positive() {
        1
    } else {
        -1
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a IntPoly,
    var: &'a str,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.poly.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            first = false;
            let mag = c.abs();
            if !mag.is_one() || i == 0 {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                f.write_str(self.var)?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("t"))
    }
}

/// A polynomial in `t` whose coefficients are integer polynomials in `x`.
///
/// `rows[i]` is the coefficient of `t^i`; trailing zero rows are stripped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiPoly {
    rows: Vec<IntPoly>,
}

impl BiPoly {
    pub fn new(mut rows: Vec<IntPoly>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Degree in `t`, or `None` when zero.
    pub fn degree_t(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    /// Coefficient of `t^i` as a polynomial in `x`.
    pub fn coeff_t(&self, i: usize) -> IntPoly {
        self.rows.get(i).cloned().unwrap_or_else(IntPoly::zero)
    }

    pub fn rows(&self) -> &[IntPoly] {
        &self.rows
    }

    pub fn add(&self, other: &BiPoly) -> BiPoly {
        let n = self.rows.len().max(other.rows.len());
        BiPoly::new((0..n).map(|i| self.coeff_t(i).add(&other.coeff_t(i))).collect())
    }

    pub fn mul(&self, other: &BiPoly) -> BiPoly {
        if self.is_zero() || other.is_zero() {
            return BiPoly::zero();
        }
        let mut out = vec![IntPoly::zero(); self.rows.len() + other.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.rows.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        BiPoly::new(out)
    }

    /// Multiplies by `t^k`.
    pub fn shift_t(&self, k: usize) -> BiPoly {
        if self.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![IntPoly::zero(); k];
        rows.extend(self.rows.iter().cloned());
        BiPoly { rows }
    }

    /// Substitutes an integer for `x`, leaving a polynomial in `t`.
    pub fn specialize(&self, x: &BigInt) -> IntPoly {
        IntPoly::new(self.rows.iter().map(|r| r.eval(x)).collect())
    }

    /// The polynomial in `x` obtained by setting `t = 1` (sums the rows).
    pub fn eval_t_one(&self) -> IntPoly {
        let mut acc = IntPoly::zero();
        for r in &self.rows {
            acc = acc.add(r);
        }
        acc
    }

    /// Partial derivative in `t`.
    pub fn derivative_t(&self) -> BiPoly {
        if self.rows.len() <= 1 {
            return BiPoly::zero();
        }
        BiPoly::new(
            self.rows
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, r)| r.scale(&BigInt::from(i)))
                .collect(),
        )
    }

    /// Substitutes `-x` for `x` in every coefficient.
    pub fn negate_x(&self) -> BiPoly {
        BiPoly::new(
            self.rows
                .iter()
                .map(|r| {
                    IntPoly::new(
                        r.coeffs()
                            .iter()
                            .enumerate()
                            .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                            .collect(),
                    )
                })
                .collect(),
        )
    }
}

impl fmt::Display for BiPoly {
    /// Writes the polynomial in t with x-polynomial coefficients,
    /// e.g. "t^2+(2x-1)t+x^2".
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, row) in self.rows.iter().enumerate().rev() {
            if row.is_zero() {
                continue;
            }
            let nterms = row.coeffs().iter().filter(|c| !c.is_zero()).count();
            if nterms == 1 {
                let k = row.degree().unwrap();
                let c = row.leading_coeff().unwrap();
                if c.is_negative() {
                    f.write_str("-")?;
                } else if !first {
                    f.write_str("+")?;
                }
                let mag = c.abs();
                let has_tail = i > 0 || k > 0;
                if !mag.is_one() || !has_tail {
                    write!(f, "{mag}")?;
                }
                if k > 0 {
                    f.write_str("x")?;
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            } else {
                if !first {
                    f.write_str("+")?;
                }
                write!(f, "({})", row.display("x"))?;
            }
            if i > 0 {
                f.write_str("t")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
            first = false;
        }
        Ok(())
    }
}

/// `t^g * f((t + x)^2 / t)` for `f` of degree `g`: the product over the
/// roots `r_i` of `f` of the quadratics `t^2 + (2x - r_i) t + x^2`,
/// expanded exactly without computing any root.
pub fn compose_with_rational_map(f: &IntPoly) -> BiPoly {
    let g = f.degree().expect("nonzero polynomial");
    // (t + x)^2 as a BiPoly: rows are x^2, 2x, 1.
    let sq = BiPoly::new(vec![
        IntPoly::from_i64(&[0, 0, 1]),
        IntPoly::from_i64(&[0, 2]),
        IntPoly::one(),
    ]);
    let mut acc = BiPoly::zero();
    let mut sq_pow = BiPoly::new(vec![IntPoly::one()]);
    for k in 0..=g {
        let ak = f.coeff(k);
        if !ak.is_zero() {
            let term = sq_pow.shift_t(g - k);
            let term = BiPoly::new(term.rows.iter().map(|r| r.scale(&ak)).collect());
            acc = acc.add(&term);
        }
        if k < g {
            sq_pow = sq_pow.mul(&sq);
        }
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn eval_known_values() {
        // t^3 - 5t^2 + 6t - 1 at 4
        assert_eq!(p(&[-1, 6, -5, 1]).eval(&BigInt::from(4)), BigInt::from(7));
        assert_eq!(p(&[-1, 6, -5, 1]).eval(&BigInt::from(0)), BigInt::from(-1));
        assert_eq!(p(&[]).eval(&BigInt::from(12)), BigInt::zero());
    }

    #[test]
    fn derivative_basic() {
        assert_eq!(p(&[-1, 6, -5, 1]).derivative(), p(&[6, -10, 3]));
        assert_eq!(p(&[7]).derivative(), IntPoly::zero());
        assert_eq!(IntPoly::zero().derivative(), IntPoly::zero());
    }

    #[test]
    fn compose_linear_shifts_roots() {
        // f_3 shifted by 4: (x+4)^3 - 5(x+4)^2 + 6(x+4) - 1
        assert_eq!(
            p(&[-1, 6, -5, 1]).compose_linear(&BigInt::from(4)),
            p(&[7, 14, 7, 1])
        );
        assert_eq!(p(&[1, 1]).compose_linear(&BigInt::from(-14)), p(&[-13, 1]));
        assert_eq!(IntPoly::zero().compose_linear(&BigInt::from(3)), IntPoly::zero());
    }

    #[test]
    fn reflect_negates_roots() {
        // t - 1 -> t + 1
        assert_eq!(p(&[-1, 1]).reflect(), p(&[1, 1]));
        // t^3 - 5t^2 + 6t - 1 -> t^3 + 5t^2 + 6t + 1
        assert_eq!(p(&[-1, 6, -5, 1]).reflect(), p(&[1, 6, 5, 1]));
        let f = p(&[3, -7, 0, 2, 5]);
        assert_eq!(f.reflect().reflect(), f);
    }

    #[test]
    fn resultant_of_linear_pair_is_root_difference() {
        let r = p(&[-5, 1]).resultant(&p(&[-2, 1])).unwrap();
        assert_eq!(r, BigInt::from(3));
    }

    #[test]
    fn resultant_shares_root_gives_zero() {
        let a = p(&[-1, 1]).mul(&p(&[-3, 1]));
        let b = p(&[-1, 1]).mul(&p(&[2, 1]));
        assert_eq!(a.resultant(&b).unwrap(), BigInt::zero());
    }

    #[test]
    fn discriminant_known_quadratics_cubics() {
        // disc(at^2+bt+c) = b^2-4ac
        assert_eq!(p(&[1, -3, 1]).discriminant().unwrap(), BigInt::from(5));
        assert_eq!(p(&[4, 0, 1]).discriminant().unwrap(), BigInt::from(-16));
        // disc(t^3 - 5t^2 + 6t - 1) = 49
        assert_eq!(p(&[-1, 6, -5, 1]).discriminant().unwrap(), BigInt::from(49));
        // disc(t^2 - 2t + 1) = 0
        assert_eq!(p(&[1, -2, 1]).discriminant().unwrap(), BigInt::zero());
        assert_eq!(p(&[-1, 1]).discriminant().unwrap(), BigInt::one());
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = p(&[-1, 1]).pow(2).mul(&p(&[-3, 1]));
        let g = a.gcd(&a.derivative());
        assert_eq!(g, p(&[-1, 1]));
        assert_eq!(a.squarefree_part(), p(&[-1, 1]).mul(&p(&[-3, 1])));
        assert!(!a.is_squarefree());
        assert!(p(&[-1, 6, -5, 1]).is_squarefree());
    }

    #[test]
    fn div_exact_detects_non_divisor() {
        let a = p(&[-1, 0, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[1, 1])));
        assert_eq!(a.div_exact(&p(&[-2, 1])), None);
        assert_eq!(a.div_exact(&p(&[2])), None);
        assert_eq!(p(&[2, 4]).div_exact(&p(&[2])), Some(p(&[1, 2])));
    }

    #[test]
    fn pseudo_divrem_identity() {
        let a = p(&[3, -2, 0, 7, 1]);
        let b = p(&[1, 4, 3]);
        let (q, r) = a.pseudo_divrem(&b);
        let delta = a.degree().unwrap() - b.degree().unwrap();
        let lhs = a.scale(&b.leading_coeff().unwrap().pow(delta as u32 + 1));
        assert_eq!(lhs, q.mul(&b).add(&r));
        assert!(r.degree_or_zero() < b.degree().unwrap() || r.is_zero());
    }

    #[test]
    fn compose_quadratic_factors_for_degree_one() {
        // f = t - 1 gives t^2 + (2x - 1) t + x^2
        let h = compose_with_rational_map(&p(&[-1, 1]));
        assert_eq!(h.coeff_t(0), p(&[0, 0, 1]));
        assert_eq!(h.coeff_t(1), p(&[-1, 2]));
        assert_eq!(h.coeff_t(2), IntPoly::one());
        assert_eq!(h.degree_t(), Some(2));
    }

    #[test]
    fn compose_degree_three_coefficients() {
        // f = t^3 - 5t^2 + 6t - 1: coefficient formulas for the top half
        let h = compose_with_rational_map(&p(&[-1, 6, -5, 1]));
        assert_eq!(h.degree_t(), Some(6));
        assert_eq!(h.coeff_t(6), IntPoly::one());
        assert_eq!(h.coeff_t(5), p(&[-5, 6]));
        assert_eq!(h.coeff_t(4), p(&[6, -20, 15]));
        assert_eq!(h.coeff_t(3), p(&[-1, 12, -30, 20]));
    }

    #[test]
    fn specialize_matches_eval() {
        let h = compose_with_rational_map(&p(&[-1, 6, -5, 1]));
        let f = h.specialize(&BigInt::from(2));
        assert_eq!(f, p(&[64, 112, 104, 63, 26, 7, 1]));
    }

    #[test]
    fn coeff_csv_round_trip() {
        let f = p(&[-1, 6, -5, 1]);
        assert_eq!(f.to_coeff_csv(), "-1,6,-5,1");
        assert_eq!(IntPoly::parse_coeff_csv("-1, 6, -5, 1").unwrap(), f);
        assert_eq!(IntPoly::parse_coeff_csv("0").unwrap(), IntPoly::zero());
        assert!(IntPoly::parse_coeff_csv("1,a,3").is_err());
    }

    #[test]
    fn display_human_form() {
        assert_eq!(p(&[-1, 6, -5, 1]).to_string(), "t^3-5t^2+6t-1");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[0, 1]).to_string(), "t");
        assert_eq!(p(&[49, 13, 1]).to_string(), "t^2+13t+49");
        assert_eq!(p(&[2, -1]).display("x").to_string(), "-x+2");
    }

    #[test]
    fn display_bivariate() {
        let h = compose_with_rational_map(&p(&[-1, 1]));
        assert_eq!(h.to_string(), "t^2+(2x-1)t+x^2");
        assert_eq!(BiPoly::zero().to_string(), "0");
    }

    #[test]
    fn bipoly_eval_t_one_and_derivative() {
        // h_1(1, x) = x^2 + 2x - 1 + 1 = (x+1)^2 - 1... directly: x^2+2x
        let h = compose_with_rational_map(&p(&[-1, 1]));
        assert_eq!(h.eval_t_one(), p(&[0, 2, 1]));
        // d/dt of t^2+(2x-1)t+x^2 = 2t + 2x-1
        let d = h.derivative_t();
        assert_eq!(d.coeff_t(0), p(&[-1, 2]));
        assert_eq!(d.coeff_t(1), p(&[2]));
    }

    #[test]
    fn negate_x_flips_odd_powers() {
        let h = compose_with_rational_map(&p(&[-1, 1])).negate_x();
        // becomes t^2 + (-2x-1)t + x^2
        assert_eq!(h.coeff_t(1), p(&[-1, -2]));
        assert_eq!(h.coeff_t(0), p(&[0, 0, 1]));
    }

    #[test]
    fn sign_at_rational_matches_eval() {
        let f = p(&[-1, 6, -5, 1]);
        // f(1/2) = -1 + 3 - 5/4 + 1/8 > 0
        assert_eq!(f.sign_at_rational(&BigInt::from(1), &BigInt::from(2)), 1);
        // f(0) = -1
        assert_eq!(f.sign_at_rational(&BigInt::from(0), &BigInt::from(1)), -1);
        // root at t where f changes sign between 0 and 1/2 exists; exactness:
        let g = p(&[-1, 2]); // 2t - 1
        assert_eq!(g.sign_at_rational(&BigInt::from(1), &BigInt::from(2)), 0);
    }
}
