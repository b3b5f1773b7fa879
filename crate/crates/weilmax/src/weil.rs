//! q-Weil polynomials: structure, validation, ordinariness, point counts,
//! classification, the cyclicity criterion, and LMFDB label encoding.
//!
//! A degree-2g Weil polynomial factors as prod(t^2 + x_i*t + q) with every
//! x_i real in [-2*sqrt(q), 2*sqrt(q)]. The sign convention is fixed once:
//! the real part is prod(x - x_i), so larger point counts f(1) =
//! prod(q + 1 + x_i) correspond to larger traces sum(x_i).

use crate::arith::{self, PrimePowerQ};
use crate::intpoly::IntPoly;
use crate::realroots::{self, RationalInterval};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WeilError {
    #[error("polynomial must be monic of degree {0}")]
    BadShape(String),
    #[error("coefficient symmetry a_(2g-i) = q^(g-i) a_i fails at index {0}")]
    Symmetry(usize),
    #[error("point count f(1) must be nonzero")]
    ZeroPointCount,
    #[error("malformed label: {0}")]
    BadLabel(String),
}

/// A candidate Weil polynomial together with its recovered real part and
/// point count. Construction validates the coefficient symmetry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilCandidate {
    pub g: usize,
    pub q: PrimePowerQ,
    pub full: IntPoly,
    pub real_part: IntPoly,
    pub points: BigInt,
}

impl WeilCandidate {
    pub fn from_full(full: &IntPoly, q: &PrimePowerQ) -> Result<Self, WeilError> {
        let real_part = full_to_real(full, q)?;
        let g = real_part.degree_or_zero();
        Ok(WeilCandidate {
            g,
            q: q.clone(),
            full: full.clone(),
            real_part,
            points: full.eval(&BigInt::one()),
        })
    }

    pub fn from_real(real_part: &IntPoly, q: &PrimePowerQ) -> Result<Self, WeilError> {
        let full = real_to_full(real_part, q)?;
        let g = real_part.degree_or_zero();
        Ok(WeilCandidate {
            g,
            q: q.clone(),
            full: full.clone(),
            real_part: real_part.clone(),
            points: full.eval(&BigInt::one()),
        })
    }
}

/// Where a candidate sits in the isogeny-class landscape.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassKind {
    IrreducibleField,
    SquarefreeCommutative,
    NonSquarefree,
    NotWeil,
}

impl std::fmt::Display for ClassKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            ClassKind::IrreducibleField => "irreducible_field",
            ClassKind::SquarefreeCommutative => "squarefree_commutative",
            ClassKind::NonSquarefree => "non_squarefree",
            ClassKind::NotWeil => "not_weil",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    pub kind: ClassKind,
    pub ordinary: bool,
    /// True only for ordinary irreducible candidates, where simplicity of
    /// the isogeny class needs no further local computation.
    pub simple_certified: bool,
}

/// Expands prod(x - x_i) into prod(t^2 + x_i t + q): the full polynomial
/// is t^g * (-1)^g * P(-(t + q/t)) with denominators cleared.
pub fn real_to_full(p: &IntPoly, q: &PrimePowerQ) -> Result<IntPoly, WeilError> {
    if !p.is_monic() {
        return Err(WeilError::BadShape("real part must be monic".into()));
    }
    let g = p.degree().unwrap();
    let base = IntPoly::new(vec![q.q.clone(), BigInt::zero(), BigInt::one()]);
    let mut full = IntPoly::zero();
    let mut pw = IntPoly::one();
    for k in 0..=g {
        let mut b = p.coeff(k);
        if (g - k) % 2 == 1 {
            b = -b;
        }
        full = full.add(&pw.shift_up(g - k).scale(&b));
        pw = pw.mul(&base);
    }
    Ok(full)
}

/// Recovers prod(x - x_i) from a degree-2g polynomial satisfying the
/// coefficient symmetry a_(2g-m) matching q^m * a_(g+m) about the middle.
///
/// Uses the bivariate identity t^m + q^m t^(-m) = W_m(t + q/t) with
/// W_0 = 2, W_1 = u, W_(m+1) = u W_m - q W_(m-1).
pub fn full_to_real(f: &IntPoly, q: &PrimePowerQ) -> Result<IntPoly, WeilError> {
    let d = f.degree().unwrap_or(0);
    if d == 0 || d % 2 != 0 || !f.is_monic() {
        return Err(WeilError::BadShape(
            "expected a monic polynomial of even degree >= 2".into(),
        ));
    }
    let g = d / 2;
    for m in 1..=g {
        if f.coeff(g - m) != q.q.pow(m as u32) * f.coeff(g + m) {
            return Err(WeilError::Symmetry(g - m));
        }
    }
    // Q(u) = a_g + sum a_(g+m) W_m(u); real part is (-1)^g Q(-u).
    let mut w_prev = IntPoly::constant(BigInt::from(2));
    let mut w = IntPoly::from_i64(&[0, 1]);
    let mut acc = IntPoly::constant(f.coeff(g));
    for m in 1..=g {
        acc = acc.add(&w.scale(&f.coeff(g + m)));
        let w_next = IntPoly::from_i64(&[0, 1])
            .mul(&w)
            .sub(&w_prev.scale(&q.q));
        w_prev = std::mem::replace(&mut w, w_next);
    }
    let real = acc.reflect();
    debug_assert!(real.is_monic());
    Ok(real)
}

/// Splits p(x) = A(x^2) + x B(x^2) and returns R(y) = A(y)^2 - y B(y)^2,
/// whose roots are the squares of the roots of p.
pub(crate) fn root_square_transform(p: &IntPoly) -> IntPoly {
    let mut even = Vec::new();
    let mut odd = Vec::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if i % 2 == 0 {
            even.push(c.clone());
        } else {
            odd.push(c.clone());
        }
    }
    let a = IntPoly::new(even);
    let b = IntPoly::new(odd);
    a.mul(&a).sub(&b.mul(&b).shift_up(1))
}

/// True iff `f` is a q-Weil polynomial: the symmetry holds, the real part
/// is totally real, and every root x_i satisfies x_i^2 <= 4q.
pub fn is_weil(f: &IntPoly, q: &PrimePowerQ) -> bool {
    let Ok(real) = full_to_real(f, q) else {
        return false;
    };
    if !realroots::all_roots_in(&real, &RationalInterval::all_reals()).unwrap_or(false) {
        return false;
    }
    let squares = root_square_transform(&real);
    let four_q = BigRational::from(&q.q * 4);
    realroots::sturm_count(&squares, &RationalInterval::above(four_q, true))
        .map(|n| n == 0)
        .unwrap_or(false)
}

/// True iff the middle coefficient is coprime to the characteristic.
pub fn is_ordinary(f: &IntPoly, q: &PrimePowerQ) -> bool {
    let d = f.degree_or_zero();
    if d == 0 || d % 2 != 0 {
        return false;
    }
    f.coeff(d / 2).gcd(&q.p).is_one()
}

/// Classifies a candidate: not a Weil polynomial, repeated roots
/// (non-commutative endomorphism algebra), irreducible (field algebra),
/// or squarefree but split (commutative product algebra).
pub fn classify(f: &IntPoly, q: &PrimePowerQ) -> Classification {
    if !is_weil(f, q) {
        return Classification {
            kind: ClassKind::NotWeil,
            ordinary: false,
            simple_certified: false,
        };
    }
    let ordinary = is_ordinary(f, q);
    let kind = if !f.is_squarefree() {
        ClassKind::NonSquarefree
    } else if crate::polyfactor::is_irreducible(f).unwrap_or(false) {
        ClassKind::IrreducibleField
    } else {
        ClassKind::SquarefreeCommutative
    };
    Classification {
        kind,
        ordinary,
        simple_certified: kind == ClassKind::IrreducibleField && ordinary,
    }
}

/// Primes ell for which the class fails to be ell-cyclic: the prime
/// divisors of gcd(hat(f(1)), f'(1)), where hat(n) keeps exactly the
/// primes whose square divides n.
pub fn cyclicity_exceptions(f: &IntPoly) -> Result<Vec<BigInt>, WeilError> {
    let points = f.eval(&BigInt::one());
    if points.is_zero() {
        return Err(WeilError::ZeroPointCount);
    }
    let hat = arith::hat(&points).expect("nonzero point count");
    let deriv_at_one = f.derivative().eval(&BigInt::one());
    let g = hat.gcd(&deriv_at_one);
    if g.is_one() || g.is_zero() {
        return Ok(Vec::new());
    }
    Ok(arith::factorize(&g).expect("nonzero gcd").primes())
}

fn encode_nonneg(n: &BigInt) -> String {
    debug_assert!(!n.is_negative());
    if n.is_zero() {
        return "a".to_string();
    }
    let mut digits = Vec::new();
    let mut m = n.clone();
    let base = BigInt::from(26);
    while !m.is_zero() {
        let (quo, rem) = m.div_rem(&base);
        let d: u8 = rem.to_string().parse().unwrap();
        digits.push((b'a' + d) as char);
        m = quo;
    }
    digits.iter().rev().collect()
}

/// Base-26 coefficient encoding used in labels: digits a=0..z=25, no
/// leading zero digit; negative values prepend an "a" to the encoding of
/// the absolute value.
pub fn encode_coeff(n: &BigInt) -> String {
    if n.is_negative() {
        format!("a{}", encode_nonneg(&n.abs()))
    } else {
        encode_nonneg(n)
    }
}

/// Inverse of `encode_coeff`; rejects malformed strings.
pub fn decode_coeff(s: &str) -> Result<BigInt, WeilError> {
    let bad = || WeilError::BadLabel(format!("bad coefficient code {s:?}"));
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_lowercase()) {
        return Err(bad());
    }
    let (neg, digits) = if s.len() > 1 && s.starts_with('a') {
        (true, &s[1..])
    } else {
        (false, s)
    };
    if digits.len() > 1 && digits.starts_with('a') {
        return Err(bad());
    }
    let mut n = BigInt::zero();
    for b in digits.bytes() {
        n = n * 26 + BigInt::from(b - b'a');
    }
    if neg && n.is_zero() {
        return Err(bad());
    }
    Ok(if neg { -n } else { n })
}

/// LMFDB-style label "g.q.c1_c2_..._cg" built from the coefficients
/// a_1..a_g of the full polynomial (a_i multiplies t^(2g-i)).
pub fn lmfdb_label(f: &IntPoly, q: &PrimePowerQ, g: usize) -> String {
    let codes: Vec<String> = (1..=g)
        .map(|i| encode_coeff(&f.coeff(2 * g - i)))
        .collect();
    format!("{}.{}.{}", g, q.q, codes.join("_"))
}

/// Parses a label back into (g, q, [a_1..a_g]).
pub fn parse_label(label: &str) -> Result<(usize, BigInt, Vec<BigInt>), WeilError> {
    let bad = |m: &str| WeilError::BadLabel(format!("{m}: {label:?}"));
    let parts: Vec<&str> = label.split('.').collect();
    if parts.len() != 3 {
        return Err(bad("expected three dot-separated fields"));
    }
    let g: usize = parts[0].parse().map_err(|_| bad("bad dimension"))?;
    let q: BigInt = parts[1].parse().map_err(|_| bad("bad field size"))?;
    let coeffs: Vec<BigInt> = parts[2]
        .split('_')
        .map(decode_coeff)
        .collect::<Result<_, _>>()?;
    if coeffs.len() != g || g == 0 {
        return Err(bad("coefficient count does not match dimension"));
    }
    Ok((g, q, coeffs))
}

/// Rebuilds the full polynomial a label describes: coefficients a_1..a_g,
/// the symmetric completion, and leading 1.
pub fn label_to_full(g: usize, q: &BigInt, coeffs: &[BigInt]) -> IntPoly {
    let mut c = vec![BigInt::zero(); 2 * g + 1];
    c[2 * g] = BigInt::one();
    for (i, a) in coeffs.iter().enumerate() {
        c[2 * g - (i + 1)] = a.clone();
    }
    for m in 0..=g {
        c[g - m] = q.pow(m as u32) * &c[g + m];
    }
    IntPoly::new(c)
}

/// Serializable summary of one candidate; big integers are carried as
/// decimal strings so the schema is stable across consumers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeilRecord {
    pub g: usize,
    pub q: String,
    /// Full-polynomial coefficients, constant term first.
    pub coeffs: Vec<String>,
    pub points: String,
    pub kind: ClassKind,
    pub ordinary: bool,
    pub exceptions: Vec<String>,
    pub label: String,
}

impl WeilRecord {
    pub fn build(cand: &WeilCandidate) -> Result<Self, WeilError> {
        let class = classify(&cand.full, &cand.q);
        let exceptions = cyclicity_exceptions(&cand.full)?;
        Ok(WeilRecord {
            g: cand.g,
            q: cand.q.q.to_string(),
            coeffs: cand.full.coeffs().iter().map(|c| c.to_string()).collect(),
            points: cand.points.to_string(),
            kind: class.kind,
            ordinary: class.ordinary,
            exceptions: exceptions.iter().map(|p| p.to_string()).collect(),
            label: lmfdb_label(&cand.full, &cand.q, cand.g),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::recognize_prime_power;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn q(n: i64) -> PrimePowerQ {
        recognize_prime_power(&BigInt::from(n)).unwrap()
    }

    #[test]
    fn real_to_full_known_cases() {
        assert_eq!(real_to_full(&p(&[-13, 1]), &q(49)).unwrap(), p(&[49, 13, 1]));
        assert_eq!(real_to_full(&p(&[0, 1]), &q(4)).unwrap(), p(&[4, 0, 1]));
        // Minimal-class sextic over q=4 with (a1,a2,a3) = (-7, 26, -63).
        assert_eq!(
            real_to_full(&p(&[7, 14, 7, 1]), &q(4)).unwrap(),
            p(&[64, -112, 104, -63, 26, -7, 1])
        );
    }

    #[test]
    fn full_to_real_known_cases() {
        assert_eq!(full_to_real(&p(&[49, 13, 1]), &q(49)).unwrap(), p(&[-13, 1]));
        // q=599: t^6+142t^5+8516t^4+276053t^3+... -> cubic via
        // e1=a, e2=b-3q, e3=c-2qa.
        let f = label_to_full(
            3,
            &BigInt::from(599),
            &[BigInt::from(142), BigInt::from(8516), BigInt::from(276053)],
        );
        assert_eq!(
            full_to_real(&f, &q(599)).unwrap(),
            p(&[-105937, 6719, -142, 1])
        );
        assert_eq!(f.eval(&BigInt::one()), BigInt::from(271257337));
        assert_eq!(
            f.derivative().eval(&BigInt::one()),
            BigInt::from(62014849)
        );
    }

    #[test]
    fn round_trip_real_full() {
        let qq = q(25);
        for real in [p(&[-13, 1]), p(&[1, -3, 1]), p(&[-1, 6, -5, 1]), p(&[7, 14, 7, 1])] {
            let full = real_to_full(&real, &qq).unwrap();
            assert_eq!(full_to_real(&full, &qq).unwrap(), real);
        }
    }

    #[test]
    fn symmetry_violation_detected() {
        assert_eq!(
            full_to_real(&p(&[1, 13, 1]), &q(49)),
            Err(WeilError::Symmetry(0))
        );
    }

    #[test]
    fn is_weil_known_cases() {
        // h_3(t, 2) over q=4.
        assert!(is_weil(&p(&[64, 112, 104, 63, 26, 7, 1]), &q(4)));
        // Trace above the Hasse bound.
        assert!(!is_weil(&p(&[4, 5, 1]), &q(4)));
        // q=599 sextic.
        let f = label_to_full(
            3,
            &BigInt::from(599),
            &[BigInt::from(142), BigInt::from(8516), BigInt::from(276053)],
        );
        assert!(is_weil(&f, &q(599)));
        // Boundary multiplicity: (t^2+4)^3 is Weil over q=4.
        let ss = p(&[4, 0, 1]);
        assert!(is_weil(&ss.mul(&ss).mul(&ss), &q(4)));
        // Non-square q with irrational boundary roots: t^2 - 8 has
        // x_1 = 2*sqrt(2) exactly on the boundary... its full form over
        // q=2 is t^4 - 4t^2 + 4 = (t^2-2)^2.
        assert!(is_weil(&p(&[4, 0, -4, 0, 1]), &q(2)));
        // Just outside: real part x^2 - 9 over q=2 has roots past 2*sqrt(2).
        let f = real_to_full(&p(&[-9, 0, 1]), &q(2)).unwrap();
        assert!(!is_weil(&f, &q(2)));
    }

    #[test]
    fn ordinary_known_cases() {
        assert!(!is_ordinary(&p(&[4, 0, 1]), &q(4)));
        assert!(is_ordinary(&p(&[64, 112, 104, 63, 26, 7, 1]), &q(4)));
        let f = label_to_full(
            3,
            &BigInt::from(599),
            &[BigInt::from(142), BigInt::from(8516), BigInt::from(276053)],
        );
        assert!(is_ordinary(&f, &q(599)));
    }

    #[test]
    fn classify_known_cases() {
        let c = classify(&p(&[64, 112, 104, 63, 26, 7, 1]), &q(4));
        assert_eq!(c.kind, ClassKind::IrreducibleField);
        assert!(c.ordinary && c.simple_certified);

        let ss = p(&[4, 0, 1]);
        let c = classify(&ss.mul(&ss).mul(&ss), &q(4));
        assert_eq!(c.kind, ClassKind::NonSquarefree);
        assert!(!c.simple_certified);

        // E_max-1(4) x M_2^0(4): split product, still ordinary.
        let f = p(&[4, 3, 1]).mul(&p(&[16, 20, 13, 5, 1]));
        assert_eq!(f, p(&[64, 128, 128, 79, 32, 8, 1]));
        let c = classify(&f, &q(4));
        assert_eq!(c.kind, ClassKind::SquarefreeCommutative);
        assert!(c.ordinary && !c.simple_certified);

        let c = classify(&p(&[4, 5, 1]), &q(4));
        assert_eq!(c.kind, ClassKind::NotWeil);
    }

    #[test]
    fn cyclicity_known_cases() {
        // h_1(t, 7): f(1)=63, f'(1)=15, hat(63)=3.
        assert_eq!(
            cyclicity_exceptions(&p(&[49, 13, 1])).unwrap(),
            vec![BigInt::from(3)]
        );
        // q=599: 13 | f'(1) and 13^2 | f(1).
        let f = label_to_full(
            3,
            &BigInt::from(599),
            &[BigInt::from(142), BigInt::from(8516), BigInt::from(276053)],
        );
        assert_eq!(cyclicity_exceptions(&f).unwrap(), vec![BigInt::from(13)]);
        // Squarefree point count: no exceptions.
        assert_eq!(cyclicity_exceptions(&p(&[4, 0, 1])).unwrap(), Vec::<BigInt>::new());
    }

    #[test]
    fn labels_match_known_classes() {
        let f = real_to_full(&p(&[7, 14, 7, 1]), &q(4)).unwrap();
        assert_eq!(lmfdb_label(&f, &q(4), 3), "3.4.ah_ba_acl");
        // Second minimal class at q=4: roots x_i = s_i - 4 for s-values
        // with elementary symmetric functions (6, 5, 1).
        let f2 = real_to_full(&p(&[-13, 5, 6, 1]), &q(4)).unwrap();
        assert_eq!(f2.eval(&BigInt::one()), BigInt::from(13));
        assert_eq!(lmfdb_label(&f2, &q(4), 3), "3.4.ag_r_abj");
        assert_eq!(encode_coeff(&BigInt::zero()), "a");
        assert_eq!(lmfdb_label(&p(&[4, 0, 1]), &q(4), 1), "1.4.a");
    }

    #[test]
    fn label_round_trip() {
        for n in -800i64..=800 {
            let b = BigInt::from(n);
            assert_eq!(decode_coeff(&encode_coeff(&b)).unwrap(), b);
        }
        let (g, qv, coeffs) = parse_label("3.4.ah_ba_acl").unwrap();
        assert_eq!((g, qv), (3, BigInt::from(4)));
        assert_eq!(coeffs, vec![BigInt::from(-7), BigInt::from(26), BigInt::from(-63)]);
        let f = label_to_full(3, &BigInt::from(4), &coeffs);
        assert_eq!(f, p(&[64, -112, 104, -63, 26, -7, 1]));
        assert!(decode_coeff("aa").is_err());
        assert!(decode_coeff("ab1").is_err());
        assert!(parse_label("3.4").is_err());
    }

    #[test]
    fn candidate_construction_and_record() {
        let qq = q(4);
        let cand = WeilCandidate::from_real(&p(&[7, 14, 7, 1]), &qq).unwrap();
        assert_eq!(cand.points, BigInt::from(13));
        assert_eq!(cand.g, 3);
        let rec = WeilRecord::build(&cand).unwrap();
        assert_eq!(rec.label, "3.4.ah_ba_acl");
        assert_eq!(rec.kind, ClassKind::IrreducibleField);
        let js = serde_json::to_string(&rec).unwrap();
        assert!(js.contains("\"irreducible_field\""));
        let back: WeilRecord = serde_json::from_str(&js).unwrap();
        assert_eq!(back, rec);
    }
}
