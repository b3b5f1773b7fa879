//! Exact real-root counting and location via Sturm sequences.
//!
//! All queries are answered over the rationals: interval endpoints are
//! `BigRational` (or infinite), sign evaluations clear denominators, and
//! `max_root` brackets the largest real root by bisection to a requested
//! rational tolerance. Chains are built with pseudo-remainders normalized
//! by positive constants only, which preserves the sign structure the
//! Sturm counting argument needs.

use crate::intpoly::{sign_of, IntPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootError {
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("invalid interval: lower endpoint exceeds upper endpoint")]
    EmptyInterval,
    #[error("tolerance must be positive")]
    BadTolerance,
}

/// An interval endpoint: finite rational or infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    NegInf,
    Finite(BigRational),
    PosInf,
}

/// An interval with rational (or infinite) endpoints and open/closed flags.
/// Infinite endpoints are always treated as open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalInterval {
    pub lo: Endpoint,
    pub hi: Endpoint,
    pub lo_open: bool,
    pub hi_open: bool,
}

impl RationalInterval {
    pub fn new(lo: Endpoint, hi: Endpoint, lo_open: bool, hi_open: bool) -> Result<Self, RootError> {
        if let (Endpoint::Finite(a), Endpoint::Finite(b)) = (&lo, &hi) {
            if a > b || (a == b && (lo_open || hi_open)) {
                return Err(RootError::EmptyInterval);
            }
        }
        if matches!(lo, Endpoint::PosInf) || matches!(hi, Endpoint::NegInf) {
            return Err(RootError::EmptyInterval);
        }
        Ok(RationalInterval { lo, hi, lo_open, hi_open })
    }

    pub fn all_reals() -> Self {
        RationalInterval {
            lo: Endpoint::NegInf,
            hi: Endpoint::PosInf,
            lo_open: true,
            hi_open: true,
        }
    }

    pub fn closed(lo: BigRational, hi: BigRational) -> Result<Self, RootError> {
        Self::new(Endpoint::Finite(lo), Endpoint::Finite(hi), false, false)
    }

    pub fn open(lo: BigRational, hi: BigRational) -> Result<Self, RootError> {
        Self::new(Endpoint::Finite(lo), Endpoint::Finite(hi), true, true)
    }

    /// `(lo, +inf)` or `[lo, +inf)`.
    pub fn above(lo: BigRational, lo_open: bool) -> Self {
        RationalInterval {
            lo: Endpoint::Finite(lo),
            hi: Endpoint::PosInf,
            lo_open,
            hi_open: true,
        }
    }

    /// `(-inf, hi)` or `(-inf, hi]`.
    pub fn below(hi: BigRational, hi_open: bool) -> Self {
        RationalInterval {
            lo: Endpoint::NegInf,
            hi: Endpoint::Finite(hi),
            lo_open: true,
            hi_open,
        }
    }
}

pub fn rational_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A Sturm chain for the squarefree part of a polynomial.
pub struct SturmChain {
    chain: Vec<IntPoly>,
}

impl SturmChain {
    /// Builds the chain of `p`'s squarefree part.
    pub fn new(p: &IntPoly) -> Result<Self, RootError> {
        if p.is_zero() {
            return Err(RootError::ZeroPolynomial);
        }
        let sf = p.squarefree_part().primitive_part();
        let mut chain = vec![sf.clone()];
        if sf.degree_or_zero() > 0 {
            chain.push(sf.derivative().reduce_content());
            loop {
                let n = chain.len();
                let (a, b) = (&chain[n - 2], &chain[n - 1]);
                if b.is_zero() || b.degree_or_zero() == 0 {
                    break;
                }
                let delta = a.degree_or_zero().saturating_sub(b.degree_or_zero());
                let (_, mut r) = a.pseudo_divrem(b);
                // pseudo_divrem multiplies by lc(b)^(delta+1); flip the
                // remainder's sign when that multiplier was negative so the
                // chain stays a positive-constant multiple of the true
                // remainder sequence.
                if b.leading_coeff().unwrap().is_negative() && (delta + 1) % 2 == 1 {
                    r = r.neg();
                }
                if r.is_zero() {
                    break;
                }
                chain.push(r.reduce_content().neg());
            }
        }
        Ok(SturmChain { chain })
    }

    /// The squarefree polynomial the chain was built from.
    pub fn squarefree(&self) -> &IntPoly {
        &self.chain[0]
    }

    fn signs_at(&self, at: &Endpoint) -> Vec<i8> {
        self.chain
            .iter()
            .map(|p| match at {
                Endpoint::NegInf => {
                    let s = p.leading_coeff().map(|c| sign_of(c)).unwrap_or(0);
                    if p.degree_or_zero() % 2 == 1 {
                        -s
                    } else {
                        s
                    }
                }
                Endpoint::PosInf => p.leading_coeff().map(|c| sign_of(c)).unwrap_or(0),
                Endpoint::Finite(x) => p.sign_at_rational(x.numer(), x.denom()),
            })
            .collect()
    }

    fn variations(signs: &[i8]) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for &s in signs {
            if s == 0 {
                continue;
            }
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Number of distinct real roots in `(a, b]` with `a < b` (Sturm's theorem).
    fn count_half_open(&self, a: &Endpoint, b: &Endpoint) -> usize {
        let va = Self::variations(&self.signs_at(a));
        let vb = Self::variations(&self.signs_at(b));
        va.saturating_sub(vb)
    }

    fn is_root(&self, x: &BigRational) -> bool {
        self.chain[0].sign_at_rational(x.numer(), x.denom()) == 0
    }

    /// Number of distinct real roots in `iv`.
    pub fn count_in(&self, iv: &RationalInterval) -> usize {
        if self.chain[0].degree_or_zero() == 0 {
            return 0;
        }
        // Degenerate single-point interval.
        if let (Endpoint::Finite(a), Endpoint::Finite(b)) = (&iv.lo, &iv.hi) {
            if a == b {
                return usize::from(self.is_root(a));
            }
        }
        let mut n = self.count_half_open(&iv.lo, &iv.hi);
        if !iv.lo_open {
            if let Endpoint::Finite(a) = &iv.lo {
                if self.is_root(a) {
                    n += 1;
                }
            }
        }
        if iv.hi_open {
            if let Endpoint::Finite(b) = &iv.hi {
                if self.is_root(b) {
                    n -= 1;
                }
            }
        }
        n
    }
}

/// Exact count of distinct real roots of `p` in `iv`.
pub fn sturm_count(p: &IntPoly, iv: &RationalInterval) -> Result<usize, RootError> {
    Ok(SturmChain::new(p)?.count_in(iv))
}

/// True iff every real root of `p` lies in `iv` and `p` has at least the
/// full count of real roots; complex roots make this false.
pub fn all_roots_in(p: &IntPoly, iv: &RationalInterval) -> Result<bool, RootError> {
    let chain = SturmChain::new(p)?;
    let d = chain.squarefree().degree_or_zero();
    Ok(chain.count_in(&RationalInterval::all_reals()) == d && chain.count_in(iv) == d)
}

/// True iff `p` is squarefree with all `deg p` roots real and strictly
/// positive.
pub fn is_totally_positive(p: &IntPoly) -> Result<bool, RootError> {
    let d = match p.degree() {
        None => return Err(RootError::ZeroPolynomial),
        Some(0) => return Ok(true),
        Some(d) => d,
    };
    if !p.is_squarefree() {
        return Ok(false);
    }
    let chain = SturmChain::new(p)?;
    Ok(chain.count_in(&RationalInterval::above(BigRational::zero(), true)) == d)
}

/// Totally real with every root strictly positive, multiple roots allowed.
/// Used as a necessary condition on derivative prefixes during search.
pub fn roots_all_real_positive(p: &IntPoly) -> Result<bool, RootError> {
    let chain = SturmChain::new(p)?;
    let d = chain.squarefree().degree_or_zero();
    if d == 0 {
        return Ok(true);
    }
    Ok(chain.count_in(&RationalInterval::above(BigRational::zero(), true)) == d)
}

/// A rational upper bound within `tol` of the largest real root of `p`,
/// or `None` when `p` has no real root.
pub fn max_root(p: &IntPoly, tol: &BigRational) -> Result<Option<BigRational>, RootError> {
    if !tol.is_positive() {
        return Err(RootError::BadTolerance);
    }
    let chain = SturmChain::new(p)?;
    if chain.squarefree().degree_or_zero() == 0 {
        return Ok(None);
    }
    let total = chain.count_in(&RationalInterval::all_reals());
    if total == 0 {
        return Ok(None);
    }
    // Cauchy bound: all roots have |r| < 1 + max|a_i| / |lc|.
    let lc = chain.squarefree().leading_coeff().unwrap().abs();
    let top = chain
        .squarefree()
        .coeffs()
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap();
    let m = BigRational::new(top, lc) + BigRational::one();
    let mut lo = -m.clone();
    let mut hi = m;
    // Invariant: the largest root lies in (lo, hi].
    debug_assert!(chain.count_half_open(&Endpoint::Finite(lo.clone()), &Endpoint::Finite(hi.clone())) >= 1);
    let two = rational_int(2);
    while &hi - &lo > *tol {
        let mid = (&hi + &lo) / &two;
        let above = chain.count_half_open(&Endpoint::Finite(mid.clone()), &Endpoint::Finite(hi.clone()));
        if above >= 1 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Some(hi))
}

/// Default bisection tolerance `2^-20` used by the search layers.
pub fn default_tol() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(1i64 << 20))
}

/// Floor of `sqrt(n)` for `n >= 0`.
pub fn isqrt(n: &BigInt) -> BigInt {
    assert!(!n.is_negative(), "isqrt of negative value");
    n.sqrt()
}

/// A rational upper bound on `sqrt(x)` for rational `x >= 0`, exact when
/// `x` is a perfect square of a rational with denominator dividing `den(x)`.
pub fn sqrt_upper(x: &BigRational) -> BigRational {
    assert!(!x.is_negative(), "sqrt of negative value");
    // sqrt(a/b) = sqrt(ab)/b <= (isqrt(ab) + 1)/b, exact when ab is square.
    let ab = x.numer() * x.denom();
    let r = isqrt(&ab);
    if &r * &r == ab {
        BigRational::new(r, x.denom().clone())
    } else {
        BigRational::new(r + 1, x.denom().clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn counts_on_simple_intervals() {
        // (t-1)(t-2)(t-3)
        let f = p(&[-1, 1]).mul(&p(&[-2, 1])).mul(&p(&[-3, 1]));
        assert_eq!(sturm_count(&f, &RationalInterval::all_reals()).unwrap(), 3);
        let iv = RationalInterval::closed(rational_int(1), rational_int(2)).unwrap();
        assert_eq!(sturm_count(&f, &iv).unwrap(), 2);
        let iv = RationalInterval::open(rational_int(1), rational_int(2)).unwrap();
        assert_eq!(sturm_count(&f, &iv).unwrap(), 0);
        let iv = RationalInterval::new(
            Endpoint::Finite(rational_int(1)),
            Endpoint::Finite(rational_int(3)),
            true,
            false,
        )
        .unwrap();
        assert_eq!(sturm_count(&f, &iv).unwrap(), 2);
    }

    #[test]
    fn counts_distinct_roots_of_non_squarefree() {
        let f = p(&[-1, 1]).pow(3).mul(&p(&[-5, 1]));
        assert_eq!(sturm_count(&f, &RationalInterval::all_reals()).unwrap(), 2);
    }

    #[test]
    fn count_with_no_real_roots() {
        let f = p(&[1, 0, 1]);
        assert_eq!(sturm_count(&f, &RationalInterval::all_reals()).unwrap(), 0);
        assert!(!all_roots_in(&f, &RationalInterval::all_reals()).unwrap());
    }

    #[test]
    fn single_point_interval() {
        let f = p(&[-1, 0, 1]);
        let iv = RationalInterval::closed(rational_int(1), rational_int(1)).unwrap();
        assert_eq!(sturm_count(&f, &iv).unwrap(), 1);
        let iv = RationalInterval::closed(rational_int(2), rational_int(2)).unwrap();
        assert_eq!(sturm_count(&f, &iv).unwrap(), 0);
    }

    #[test]
    fn totally_positive_examples() {
        assert!(is_totally_positive(&p(&[-1, 1])).unwrap());
        assert!(is_totally_positive(&p(&[1, -3, 1])).unwrap());
        assert!(is_totally_positive(&p(&[-1, 6, -5, 1])).unwrap());
        // roots 1 and -1
        assert!(!is_totally_positive(&p(&[-1, 0, 1])).unwrap());
        // double root at 1
        assert!(!is_totally_positive(&p(&[1, -2, 1])).unwrap());
        // complex roots
        assert!(!is_totally_positive(&p(&[1, 0, 1])).unwrap());
        assert!(is_totally_positive(&IntPoly::one()).unwrap());
        assert_eq!(
            is_totally_positive(&IntPoly::zero()),
            Err(RootError::ZeroPolynomial)
        );
    }

    #[test]
    fn all_roots_in_range_checks() {
        let f = p(&[1, -3, 1]); // roots (3 +- sqrt5)/2, approx 0.38 and 2.62
        let iv = RationalInterval::closed(rational_int(0), rational_int(3)).unwrap();
        assert!(all_roots_in(&f, &iv).unwrap());
        let iv = RationalInterval::closed(rational_int(1), rational_int(3)).unwrap();
        assert!(!all_roots_in(&f, &iv).unwrap());
    }

    #[test]
    fn max_root_brackets() {
        let tol = BigRational::new(BigInt::one(), BigInt::from(1 << 12));
        // largest root of t^2 - 2 is sqrt(2)
        let r = max_root(&p(&[-2, 0, 1]), &tol).unwrap().unwrap();
        let r2 = &r * &r;
        assert!(r2 >= rational_int(2));
        assert!(&r * &r <= (rational_int(2) + rational_int(4) * &tol));
        // no real roots
        assert_eq!(max_root(&p(&[1, 0, 1]), &tol).unwrap(), None);
        // exact integer root still bracketed within tol
        let r = max_root(&p(&[-6, 11, -6, 1]), &tol).unwrap().unwrap();
        assert!(r >= rational_int(3) && r <= rational_int(3) + tol.clone());
        assert_eq!(max_root(&p(&[5]), &tol).unwrap(), None);
    }

    #[test]
    fn max_root_rejects_bad_tolerance() {
        assert_eq!(
            max_root(&p(&[-2, 0, 1]), &BigRational::zero()),
            Err(RootError::BadTolerance)
        );
    }

    #[test]
    fn sqrt_upper_bounds() {
        let x = rational_int(2);
        let u = sqrt_upper(&x);
        assert!(&u * &u >= x);
        let x = rational_int(49);
        assert_eq!(sqrt_upper(&x), rational_int(7));
        let x = BigRational::new(BigInt::from(9), BigInt::from(4));
        assert_eq!(sqrt_upper(&x), BigRational::new(BigInt::from(3), BigInt::from(2)));
    }

    #[test]
    fn interval_validation() {
        assert!(RationalInterval::closed(rational_int(2), rational_int(1)).is_err());
        assert!(RationalInterval::open(rational_int(1), rational_int(1)).is_err());
        assert!(RationalInterval::closed(rational_int(1), rational_int(1)).is_ok());
    }

    #[test]
    fn roots_all_real_positive_allows_multiplicity() {
        assert!(roots_all_real_positive(&p(&[1, -2, 1])).unwrap());
        assert!(!roots_all_real_positive(&p(&[0, 1])).unwrap());
        assert!(!roots_all_real_positive(&p(&[1, 0, 1])).unwrap());
    }
}
