//! Construction and verification of the extremal isogeny classes.
//!
//! `build_parameters` packages everything the trace-minimal search yields for
//! one dimension: the polynomial pair (fg, fg_minus), their bivariate lifts
//! (hg, hg_minus), and the derived invariants. `maximal_class` and
//! `minimal_class` specialize the lifts at an integer square root of q,
//! `scan_threefolds` independently re-derives the q-extremal sextic by an
//! exhaustive best-first search, and `cyclicity_report`, `verify_bezout`,
//! and `residue_tables` certify the group-structure claims.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::arith::{self, ArithError, PrimePowerQ};
use crate::intpoly::{compose_with_rational_map, BiPoly, IntPoly};
use crate::polyfactor::{self, FactorError};
use crate::realroots::{self, isqrt, sqrt_upper, RationalInterval, RootError};
use crate::tracemin::{self, MinTraceRecord, TraceError};
use crate::weil::{self, ClassKind, Classification, WeilCandidate, WeilError};

/// Degree budget used by the convenience constructors that do not take an
/// explicit budget. Matches the highest dimension with frozen reference data.
pub const DEFAULT_DEGREE_BUDGET: usize = 6;

#[derive(Debug, Error)]
pub enum MaxClassError {
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    Weil(#[from] WeilError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Factor(#[from] FactorError),
    #[error(transparent)]
    Root(#[from] RootError),
    #[error("q = {0} is not an even prime power, so sqrt(q) is not an integer")]
    OddPower(BigInt),
    #[error("q = {q} does not exceed the size threshold c_{g} = {c}")]
    TooSmall { g: usize, q: BigInt, c: BigRational },
    #[error("characteristic {p} divides the constant term {c0} of the trace-minimal polynomial")]
    SharedCharacteristic { p: BigInt, c0: BigInt },
    #[error("a root of the mirror polynomial has magnitude at least 4*sqrt(q)")]
    RootMagnitude { g: usize, q: BigInt },
    #[error("scan bounds for q = {0} exceed the supported machine range")]
    ScanRange(BigInt),
    #[error("scan found no irreducible ordinary class over q = {0}")]
    NoFieldClass(BigInt),
}

/// Everything needed to construct the extremal classes in dimension g.
#[derive(Clone, Debug)]
pub struct GClassParameters {
    pub g: usize,
    /// Monic irreducible totally positive polynomial of minimal trace,
    /// maximal under the coefficient order.
    pub fg: IntPoly,
    /// Totally negative mirror; its reflection is the minimal member.
    pub fg_minus: IntPoly,
    /// Bivariate lift with specialize(hg, sqrt(q)) the maximal-class
    /// characteristic polynomial.
    pub hg: BiPoly,
    /// Bivariate lift for the minimal class.
    pub hg_minus: BiPoly,
    /// Signed invariant fg(4) * fg(0) * disc(fg); its prime support bounds
    /// the cyclicity exceptions a priori.
    pub n_g: BigInt,
    /// Discriminant of fg.
    pub delta_g: BigInt,
    /// Size threshold: the construction applies for q > c_g.
    pub c_g: BigRational,
    /// Full output of the trace-minimal search.
    pub record: MinTraceRecord,
}

/// Runs the trace-minimal search for dimension g and derives the lifts and
/// invariants used by the class constructors.
pub fn build_parameters(g: usize, degree_budget: usize) -> Result<GClassParameters, MaxClassError> {
    let record = tracemin::min_trace_set(g, degree_budget)?;
    let fg = record.fg.clone();
    let fg_minus = record.fg_minus.clone();
    let hg = compose_with_rational_map(&fg);
    let hg_minus = compose_with_rational_map(&fg_minus).negate_x();
    let delta_g = fg.discriminant().expect("fg is nonconstant");
    let n_g = fg.eval(&BigInt::from(4)) * fg.eval(&BigInt::zero()) * &delta_g;
    Ok(GClassParameters {
        g,
        fg,
        fg_minus,
        hg,
        hg_minus,
        n_g,
        delta_g,
        c_g: record.c_g.clone(),
        record,
    })
}

fn even_power_root(q: &PrimePowerQ) -> Result<BigInt, MaxClassError> {
    q.sqrt_q.clone().ok_or_else(|| MaxClassError::OddPower(q.q.clone()))
}

fn check_size_and_characteristic(
    params: &GClassParameters,
    q: &PrimePowerQ,
) -> Result<(), MaxClassError> {
    if BigRational::from_integer(q.q.clone()) <= params.c_g {
        return Err(MaxClassError::TooSmall {
            g: params.g,
            q: q.q.clone(),
            c: params.c_g.clone(),
        });
    }
    let c0 = params.fg.coeff(0);
    if !c0.gcd(&q.p).is_one() {
        return Err(MaxClassError::SharedCharacteristic { p: q.p.clone(), c0 });
    }
    Ok(())
}

/// Builds the point-count-maximal isogeny class of dimension g over F_q.
pub fn maximal_class(g: usize, q: &BigInt) -> Result<WeilCandidate, MaxClassError> {
    let params = build_parameters(g, DEFAULT_DEGREE_BUDGET)?;
    maximal_class_with(&params, &arith::recognize_prime_power(q)?)
}

/// As `maximal_class`, reusing prebuilt parameters.
pub fn maximal_class_with(
    params: &GClassParameters,
    q: &PrimePowerQ,
) -> Result<WeilCandidate, MaxClassError> {
    let s = even_power_root(q)?;
    check_size_and_characteristic(params, q)?;
    let full = params.hg.specialize(&s);
    let cand = WeilCandidate::from_full(&full, q)?;
    assert!(weil::is_weil(&full, q), "maximal class failed the root bound");
    assert!(weil::is_ordinary(&full, q), "maximal class is not ordinary");
    assert!(
        polyfactor::is_irreducible(&full)?,
        "maximal characteristic polynomial is reducible"
    );
    let m = (&s + 1u32).pow(2);
    assert_eq!(
        cand.points,
        params.fg.eval(&m),
        "point identity f_g((sqrt(q)+1)^2) violated"
    );
    Ok(cand)
}

/// Builds the point-count-minimal isogeny class of dimension g over F_q
/// among classes with field endomorphism algebra of the mirror shape.
pub fn minimal_class(g: usize, q: &BigInt) -> Result<WeilCandidate, MaxClassError> {
    let params = build_parameters(g, DEFAULT_DEGREE_BUDGET)?;
    minimal_class_with(&params, &arith::recognize_prime_power(q)?)
}

/// As `minimal_class`, reusing prebuilt parameters.
pub fn minimal_class_with(
    params: &GClassParameters,
    q: &PrimePowerQ,
) -> Result<WeilCandidate, MaxClassError> {
    let s = even_power_root(q)?;
    check_size_and_characteristic(params, q)?;
    let mirror = params.fg_minus.reflect();
    let four_s = BigRational::from_integer(BigInt::from(4) * &s);
    if realroots::sturm_count(&mirror, &RationalInterval::above(four_s, false))? != 0 {
        return Err(MaxClassError::RootMagnitude {
            g: params.g,
            q: q.q.clone(),
        });
    }
    let full = params.hg_minus.specialize(&s);
    let cand = WeilCandidate::from_full(&full, q)?;
    assert!(weil::is_weil(&full, q), "minimal class failed the root bound");
    assert!(
        polyfactor::is_irreducible(&full)?,
        "minimal characteristic polynomial is reducible"
    );
    let m = (&s - 1u32).pow(2);
    assert_eq!(
        cand.points,
        params.fg_minus.eval(&m),
        "point identity f_g_minus((sqrt(q)-1)^2) violated"
    );
    Ok(cand)
}

/// Enumerates every point-count-minimal class of dimension g over F_q whose
/// real part splits off totally positive shifted roots, by branch and bound
/// over the trace. Ties are all returned, sorted by real-part coefficients.
pub fn minimal_candidates(
    g: usize,
    q: &BigInt,
    degree_budget: usize,
) -> Result<Vec<WeilCandidate>, MaxClassError> {
    if g > degree_budget {
        return Err(TraceError::BudgetExceeded { g, budget: degree_budget }.into());
    }
    let q = arith::recognize_prime_power(q)?;
    let s = even_power_root(&q)?;
    let m = (&s - 1u32).pow(2);
    let four_s = BigRational::from_integer(BigInt::from(4) * &s);
    let mut best: Option<BigInt> = None;
    let mut winners: Vec<IntPoly> = Vec::new();
    let mut trace = g as i64;
    loop {
        if let Some(b) = &best {
            // Every member at this trace has at least m^g + trace*m^(g-1)
            // points, so the loop is exhausted once that floor passes b.
            let floor = m.pow(g as u32) + trace * m.pow(g as u32 - 1);
            if &floor > b {
                break;
            }
        }
        for member in tracemin::enumerate_totally_positive(g, trace) {
            if realroots::sturm_count(&member, &RationalInterval::above(four_s.clone(), false))? != 0 {
                continue;
            }
            let points = member.reflect().eval(&m);
            match &best {
                Some(b) if &points > b => {}
                Some(b) if &points == b => winners.push(member),
                _ => {
                    best = Some(points);
                    winners = vec![member];
                }
            }
        }
        trace += 1;
    }
    let mut out = Vec::with_capacity(winners.len());
    for member in winners {
        let real = member.compose_linear(&(BigInt::from(2) * &s));
        let cand = WeilCandidate::from_real(&real, &q)?;
        assert!(weil::is_weil(&cand.full, &q), "minimal candidate failed the root bound");
        out.push(cand);
    }
    out.sort_by(|x, y| x.real_part.coeffs().cmp(y.real_part.coeffs()));
    Ok(out)
}

/// Exact cyclicity exceptions for one class next to the a-priori prime bound
/// coming from the dimension invariant N_g.
#[derive(Clone, Debug)]
pub struct CyclicityReport {
    /// Primes ell where the ell-part of the group can fail to be cyclic.
    pub exceptions: Vec<BigInt>,
    /// Prime support of N_g.
    pub apriori_primes: Vec<BigInt>,
    /// True when q is an even prime power, the scope of the a-priori bound.
    pub bound_applies: bool,
    /// exceptions subset of apriori_primes, when the bound applies.
    pub bound_respected: Option<bool>,
}

/// Computes the exact exceptions for `cand` and compares them with the prime
/// support of N_g. No containment is asserted: the bound is a theorem only
/// for classes produced by `maximal_class`.
pub fn cyclicity_report(
    cand: &WeilCandidate,
    params: &GClassParameters,
) -> Result<CyclicityReport, MaxClassError> {
    let exceptions = weil::cyclicity_exceptions(&cand.full)?;
    let apriori_primes = arith::factorize(&params.n_g)?.primes();
    let bound_applies = cand.q.is_even_power();
    let bound_respected = bound_applies
        .then(|| exceptions.iter().all(|e| apriori_primes.contains(e)));
    Ok(CyclicityReport {
        exceptions,
        apriori_primes,
        bound_applies,
        bound_respected,
    })
}

/// Builds the maximal class over F_q and its cyclicity report, asserting the
/// a-priori containment that is guaranteed for this construction.
pub fn maximal_cyclicity(
    g: usize,
    q: &BigInt,
) -> Result<(WeilCandidate, CyclicityReport), MaxClassError> {
    let params = build_parameters(g, DEFAULT_DEGREE_BUDGET)?;
    let cand = maximal_class_with(&params, &arith::recognize_prime_power(q)?)?;
    let report = cyclicity_report(&cand, &params)?;
    assert_eq!(
        report.bound_respected,
        Some(true),
        "maximal-class exceptions escaped the a-priori prime bound"
    );
    Ok((cand, report))
}

/// Human-readable tag for a class, naming recognized extremal pieces of its
/// real part: "E_max-k(q)" for an elliptic factor with Frobenius trace
/// 2*sqrt(q) - k and "M_d^0(q)" for a d-dimensional maximal piece.
pub fn class_tag(cand: &WeilCandidate) -> String {
    let Some(s) = cand.q.sqrt_q.clone() else {
        return format!("W_{}[{}]", cand.g, cand.real_part);
    };
    let Ok(fact) = polyfactor::factor(&cand.real_part) else {
        return format!("W_{}[{}]", cand.g, cand.real_part);
    };
    let mut factors = fact.factors;
    factors.sort_by(|x, y| {
        x.0.degree_or_zero()
            .cmp(&y.0.degree_or_zero())
            .then_with(|| x.0.coeffs().cmp(y.0.coeffs()))
    });
    let mut parts = Vec::new();
    for (piece, mult) in factors {
        let mut tag = piece_tag(&piece, &cand.q.q, &s);
        if mult > 1 {
            tag = format!("{tag}^{mult}");
        }
        parts.push(tag);
    }
    parts.join(" x ")
}

fn piece_tag(piece: &IntPoly, q: &BigInt, s: &BigInt) -> String {
    let d = piece.degree_or_zero();
    if d == 1 {
        let defect = BigInt::from(2) * s + piece.coeff(0);
        return if defect.is_zero() {
            format!("E_max({q})")
        } else {
            format!("E_max-{defect}({q})")
        };
    }
    if (2..=DEFAULT_DEGREE_BUDGET).contains(&d) {
        if let Ok(record) = tracemin::min_trace_set(d, DEFAULT_DEGREE_BUDGET) {
            let maximal_real = record.fg.reflect().compose_linear(&(-(BigInt::from(2) * s)));
            if piece == &maximal_real {
                return format!("M_{d}^0({q})");
            }
        }
    }
    format!("W_{d}[{piece}]")
}

/// Exhaustion evidence for one scan: the trace range covered, how much of
/// the tree was popped and validated, and the bound at the frontier where
/// the search stopped.
#[derive(Clone, Debug)]
pub struct ScanCertificate {
    pub a_range: (i64, i64),
    pub popped: u64,
    pub validated: u64,
    pub admissible: u64,
    pub best_points: BigInt,
    /// Largest bound still unexplored when the scan stopped; None when the
    /// whole tree was consumed. Always below best_points.
    pub frontier_bound: Option<BigInt>,
    pub q_even_power: bool,
}

/// Outcome of a threefold scan over one F_q.
#[derive(Clone, Debug)]
pub struct ScanResult {
    pub q: PrimePowerQ,
    /// The irreducible ordinary class with the most points.
    pub best: WeilCandidate,
    /// Squarefree classes with strictly more points than `best`, most points
    /// first. An irreducible non-ordinary entry here means the comparison
    /// with `best` is undetermined rather than a proper exceedance.
    pub exceeders: Vec<(WeilCandidate, Classification)>,
    /// Other irreducible ordinary classes tying `best` exactly.
    pub co_maximal: Vec<WeilCandidate>,
    pub certificate: ScanCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct ScanNode {
    bound: BigInt,
    depth: u8,
    a: BigInt,
    b: BigInt,
    c: BigInt,
    c_lo: BigInt,
}

impl Ord for ScanNode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.bound
            .cmp(&other.bound)
            .then_with(|| self.depth.cmp(&other.depth))
            .then_with(|| self.a.cmp(&other.a))
            .then_with(|| self.b.cmp(&other.b))
            .then_with(|| self.c.cmp(&other.c))
    }
}

impl PartialOrd for ScanNode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

fn ceil_div(n: &BigInt, d: u32) -> BigInt {
    let d = BigInt::from(d);
    (n + (&d - 1u32)).div_floor(&d)
}

/// Point count of the sextic with trace coefficients (a, b, c) over F_q.
fn scan_points(q: &BigInt, a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    q.pow(3) + q * q * a + q * b + c + b + a + 1u32
}

/// Arithmetic-geometric bound on points given the trace alone.
fn a_node_bound(q: &BigInt, a: &BigInt) -> BigInt {
    let sum = BigInt::from(3) * q + a + 3u32;
    ceil_div(&sum.pow(3), 27)
}

/// Tighter bound once b is fixed; None when the second symmetric function of
/// the per-factor point counts is forced nonpositive, which no candidate
/// with all Frobenius traces in range can achieve.
fn ab_node_bound(q: &BigInt, a: &BigInt, b: &BigInt) -> Option<BigInt> {
    let qp1 = q + 1u32;
    let e2 = b - BigInt::from(3) * q;
    let sym2 = BigInt::from(3) * &qp1 * &qp1 + BigInt::from(2) * &qp1 * a + e2;
    if sym2 <= BigInt::zero() {
        return None;
    }
    let bound = sqrt_upper(&BigRational::new(sym2.pow(3), BigInt::from(27)));
    Some(bound.ceil().to_integer())
}

/// Range of b compatible with three real roots of bounded square sum.
fn b_range(q: &BigInt, a: &BigInt) -> (BigInt, BigInt) {
    let a2 = a * a;
    let three_q = BigInt::from(3) * q;
    let lo = ceil_div(&(&a2 - BigInt::from(12) * q), 2) + &three_q;
    let hi = a2.div_floor(&BigInt::from(3)) + &three_q;
    (lo, hi)
}

/// Window of c values compatible with three real roots strictly inside
/// (-2 sqrt(q), 2 sqrt(q)): the discriminant parabola in e3 intersected with
/// the sign conditions at the interval endpoints.
fn c_window(q: &BigInt, a: &BigInt, b: &BigInt) -> Option<(BigInt, BigInt)> {
    let e2 = b - BigInt::from(3) * q;
    let beta = BigInt::from(18) * a * &e2 - BigInt::from(4) * a.pow(3);
    let gamma = a.pow(2) * e2.pow(2) - BigInt::from(4) * e2.pow(3);
    let dprime = beta.pow(2) + BigInt::from(108) * gamma;
    if dprime.is_negative() {
        return None;
    }
    let u = isqrt(&dprime) + 1u32;
    let two_qa = BigInt::from(2) * q * a;
    let mut c_lo = ceil_div(&(&beta - &u), 54) + &two_qa;
    let mut c_hi = (&beta + &u).div_floor(&BigInt::from(54)) + &two_qa;
    // Endpoint signs: with B = c + 2qa and A = 8q + 2e2, the candidate needs
    // B < A sqrt(q) and B > -A sqrt(q).
    let big_a = BigInt::from(8) * q + BigInt::from(2) * &e2;
    let n = big_a.pow(2) * q;
    let root = isqrt(&n);
    let square = (&root * &root) == n;
    let b_hi = if !big_a.is_negative() {
        if square {
            &root - 1u32
        } else {
            root.clone()
        }
    } else {
        -&root - 1u32
    };
    let b_lo = if big_a.is_positive() {
        if square {
            -&root + 1u32
        } else {
            -root.clone()
        }
    } else {
        &root + 1u32
    };
    c_hi = c_hi.min(b_hi - &two_qa);
    c_lo = c_lo.max(b_lo - &two_qa);
    if c_lo > c_hi {
        None
    } else {
        Some((c_lo, c_hi))
    }
}

/// Checks one (a, b, c) triple: the real part must have three distinct real
/// roots, all strictly inside the Weil interval.
fn validate_triple(
    q: &PrimePowerQ,
    a: &BigInt,
    b: &BigInt,
    c: &BigInt,
) -> Result<Option<WeilCandidate>, MaxClassError> {
    let e2 = b - BigInt::from(3) * &q.q;
    let e3 = c - BigInt::from(2) * &q.q * a;
    let real = IntPoly::new(vec![-e3, e2, -a.clone(), BigInt::one()]);
    if realroots::sturm_count(&real, &RationalInterval::all_reals())? != 3 {
        return Ok(None);
    }
    let squares = weil::root_square_transform(&real);
    let four_q = BigRational::from_integer(BigInt::from(4) * &q.q);
    if realroots::sturm_count(&squares, &RationalInterval::above(four_q, false))? != 0 {
        return Ok(None);
    }
    Ok(Some(WeilCandidate::from_real(&real, q)?))
}

/// Exhaustive best-first scan of all squarefree Weil sextics over F_q.
///
/// Every candidate is reached through ancestors whose bounds dominate its
/// exact point count, so candidates pop in nonincreasing point order until
/// the frontier bound drops below the best irreducible ordinary class. That
/// makes the returned exceeder list complete. For odd powers of p the scan
/// still runs, but `certificate.q_even_power` records that no construction
/// theorem backs the outcome.
pub fn scan_threefolds(q: &BigInt) -> Result<ScanResult, MaxClassError> {
    let q = arith::recognize_prime_power(q)?;
    let qv = q.q.clone();
    let a_max = isqrt(&(BigInt::from(36) * &qv))
        .to_i64()
        .ok_or_else(|| MaxClassError::ScanRange(qv.clone()))?;
    let mut heap: BinaryHeap<ScanNode> = BinaryHeap::new();
    for ai in -a_max..=a_max {
        let a = BigInt::from(ai);
        heap.push(ScanNode {
            bound: a_node_bound(&qv, &a),
            depth: 0,
            a,
            b: BigInt::zero(),
            c: BigInt::zero(),
            c_lo: BigInt::zero(),
        });
    }
    let mut best: Option<WeilCandidate> = None;
    let mut seen: Vec<(WeilCandidate, Classification)> = Vec::new();
    let mut co_maximal: Vec<WeilCandidate> = Vec::new();
    let mut popped = 0u64;
    let mut validated = 0u64;
    let mut admissible = 0u64;
    let mut frontier_bound = None;
    while let Some(node) = heap.pop() {
        if let Some(bc) = &best {
            if node.bound < bc.points {
                frontier_bound = Some(node.bound.clone());
                break;
            }
        }
        popped += 1;
        match node.depth {
            0 => {
                let (b_lo, b_hi) = b_range(&qv, &node.a);
                if b_lo <= b_hi {
                    if let Some(bound) = ab_node_bound(&qv, &node.a, &b_hi) {
                        heap.push(ScanNode {
                            bound,
                            depth: 1,
                            a: node.a,
                            b: b_hi,
                            c: BigInt::zero(),
                            c_lo: BigInt::zero(),
                        });
                    }
                }
            }
            1 => {
                let (b_lo, _) = b_range(&qv, &node.a);
                if node.b > b_lo {
                    let b_next = &node.b - 1u32;
                    // The bound is monotone in b, so a None here ends the
                    // whole b chain.
                    if let Some(bound) = ab_node_bound(&qv, &node.a, &b_next) {
                        heap.push(ScanNode {
                            bound,
                            depth: 1,
                            a: node.a.clone(),
                            b: b_next,
                            c: BigInt::zero(),
                            c_lo: BigInt::zero(),
                        });
                    }
                }
                if let Some((c_lo, c_hi)) = c_window(&qv, &node.a, &node.b) {
                    heap.push(ScanNode {
                        bound: scan_points(&qv, &node.a, &node.b, &c_hi),
                        depth: 2,
                        a: node.a,
                        b: node.b,
                        c: c_hi,
                        c_lo,
                    });
                }
            }
            _ => {
                if node.c > node.c_lo {
                    let c_next = &node.c - 1u32;
                    heap.push(ScanNode {
                        bound: scan_points(&qv, &node.a, &node.b, &c_next),
                        depth: 2,
                        a: node.a.clone(),
                        b: node.b.clone(),
                        c: c_next,
                        c_lo: node.c_lo.clone(),
                    });
                }
                validated += 1;
                if let Some(cand) = validate_triple(&q, &node.a, &node.b, &node.c)? {
                    let ab = ab_node_bound(&qv, &node.a, &node.b)
                        .expect("valid candidate has positive second symmetric function");
                    assert!(
                        cand.points <= a_node_bound(&qv, &node.a) && cand.points <= ab,
                        "scan admissibility violated at ({}, {}, {})",
                        node.a,
                        node.b,
                        node.c
                    );
                    admissible += 1;
                    let class = weil::classify(&cand.full, &q);
                    match &best {
                        None => {
                            if class.kind == ClassKind::IrreducibleField && class.ordinary {
                                best = Some(cand);
                            } else {
                                seen.push((cand, class));
                            }
                        }
                        Some(bc) => {
                            if cand.points == bc.points
                                && class.kind == ClassKind::IrreducibleField
                                && class.ordinary
                            {
                                co_maximal.push(cand);
                            }
                        }
                    }
                }
            }
        }
    }
    let best = best.ok_or_else(|| MaxClassError::NoFieldClass(qv))?;
    let mut exceeders: Vec<(WeilCandidate, Classification)> = seen
        .into_iter()
        .filter(|(cand, _)| cand.points > best.points)
        .collect();
    exceeders.sort_by(|x, y| {
        y.0.points
            .cmp(&x.0.points)
            .then_with(|| x.0.real_part.coeffs().cmp(y.0.real_part.coeffs()))
    });
    if let Some(fb) = &frontier_bound {
        debug_assert!(fb < &best.points);
    }
    let certificate = ScanCertificate {
        a_range: (-a_max, a_max),
        popped,
        validated,
        admissible,
        best_points: best.points.clone(),
        frontier_bound,
        q_even_power: q.is_even_power(),
    };
    Ok(ScanResult {
        q,
        best,
        exceeders,
        co_maximal,
        certificate,
    })
}

fn counterexample_pair() -> (IntPoly, IntPoly) {
    let f3 = IntPoly::from_i64(&[-1, 6, -5, 1]);
    let h3 = compose_with_rational_map(&f3);
    (h3.eval_t_one(), h3.derivative_t().eval_t_one())
}

fn bezout_combination(p: &IntPoly, q: &IntPoly) -> IntPoly {
    let (f1, fp1) = counterexample_pair();
    p.mul(&f1).add(&q.mul(&fp1))
}

/// Certifies that 7 is the only prime that can obstruct cyclicity for the
/// dimension-3 family: recomputes f(1) and f'(1) as polynomials in X from
/// the bivariate lift and checks an explicit Bezout combination equal to 7.
pub fn verify_bezout() -> bool {
    let (f1, fp1) = counterexample_pair();
    if f1 != IntPoly::from_i64(&[1, -2, -9, 0, 10, 6, 1]) {
        return false;
    }
    if fp1 != IntPoly::from_i64(&[2, -14, -18, 20, 25, 6]) {
        return false;
    }
    let p = IntPoly::from_i64(&[9, 24, -27, -44, -12]);
    let q = IntPoly::from_i64(&[-1, -10, -1, 16, 11, 2]);
    bezout_combination(&p, &q) == IntPoly::constant(BigInt::from(7))
}

/// Residues of f(1) and f'(1) modulo 7, and of f(1) modulo 49 at every X
/// with 7 | f(1), as functions of X.
#[derive(Clone, Debug)]
pub struct ResidueTables {
    /// f(1) mod 7 at X = 0..6.
    pub f_mod7: Vec<i64>,
    /// f'(1) mod 7 at X = 0..6.
    pub fprime_mod7: Vec<i64>,
    /// (X, f(1) mod 49) for every X in 0..49 with 7 | f(1).
    pub f_mod49: Vec<(i64, i64)>,
    /// True when every entry of f_mod49 equals exactly 7, so 49 never
    /// divides f(1) and the 7-part of the group stays cyclic.
    pub conclusion_holds: bool,
}

fn residue(p: &IntPoly, x: i64, m: i64) -> i64 {
    let v = p.eval(&BigInt::from(x));
    v.mod_floor(&BigInt::from(m)).to_i64().expect("residue fits")
}

/// Tabulates the mod-7 and mod-49 residues behind the cyclicity analysis of
/// the dimension-3 family and asserts they match the certified values.
pub fn residue_tables() -> ResidueTables {
    let (f1, fp1) = counterexample_pair();
    let f_mod7: Vec<i64> = (0..7).map(|x| residue(&f1, x, 7)).collect();
    let fprime_mod7: Vec<i64> = (0..7).map(|x| residue(&fp1, x, 7)).collect();
    let f_mod49: Vec<(i64, i64)> = (0..49)
        .filter(|x| f_mod7[(x % 7) as usize] == 0)
        .map(|x| (x, residue(&f1, x, 49)))
        .collect();
    assert_eq!(f_mod7, vec![1, 0, 6, 6, 0, 1, 6], "f(1) mod 7 table changed");
    assert_eq!(
        fprime_mod7,
        vec![2, 0, 3, 6, 0, 6, 4],
        "f'(1) mod 7 table changed"
    );
    let conclusion_holds = !f_mod49.is_empty() && f_mod49.iter().all(|(_, r)| *r == 7);
    assert!(conclusion_holds, "a residue escaped f(1) = 7 mod 49");
    ResidueTables {
        f_mod7,
        fprime_mod7,
        f_mod49,
        conclusion_holds,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> PrimePowerQ {
        arith::recognize_prime_power(&BigInt::from(v)).unwrap()
    }

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn parameters_expose_known_invariants() {
        let expected_n = [-3i64, 25, -343];
        let expected_delta = [1i64, 5, 49];
        for g in 1..=3usize {
            let params = build_parameters(g, 6).unwrap();
            assert_eq!(params.n_g, BigInt::from(expected_n[g - 1]), "N_{g}");
            assert_eq!(params.delta_g, BigInt::from(expected_delta[g - 1]));
        }
        let h1 = build_parameters(1, 6).unwrap().hg;
        assert_eq!(h1.specialize(&BigInt::from(7)), p(&[49, 13, 1]));
        assert_eq!(h1.specialize(&BigInt::from(2)), p(&[4, 3, 1]));
    }

    #[test]
    fn maximal_classes_match_frozen_values() {
        let m3 = maximal_class(3, &BigInt::from(4)).unwrap();
        assert_eq!(m3.full, p(&[64, 112, 104, 63, 26, 7, 1]));
        assert_eq!(m3.points, BigInt::from(377));
        let m1 = maximal_class(1, &BigInt::from(49)).unwrap();
        assert_eq!(m1.full, p(&[49, 13, 1]));
        assert_eq!(m1.points, BigInt::from(63));
        let m2 = maximal_class(2, &BigInt::from(9)).unwrap();
        assert_eq!(m2.full, p(&[81, 81, 37, 9, 1]));
        assert_eq!(m2.points, BigInt::from(209));
    }

    #[test]
    fn maximal_rejects_odd_powers() {
        assert!(matches!(
            maximal_class(3, &BigInt::from(8)),
            Err(MaxClassError::OddPower(_))
        ));
        assert!(matches!(
            maximal_class(2, &BigInt::from(7)),
            Err(MaxClassError::OddPower(_))
        ));
        assert!(matches!(
            maximal_class(3, &BigInt::from(12)),
            Err(MaxClassError::Arith(ArithError::NotPrimePower(_)))
        ));
    }

    #[test]
    fn minimal_classes_match_frozen_values() {
        let m1 = minimal_class(1, &BigInt::from(9)).unwrap();
        assert_eq!(m1.full, p(&[9, -5, 1]));
        assert_eq!(m1.points, BigInt::from(5));
        let m3 = minimal_class(3, &BigInt::from(4)).unwrap();
        assert_eq!(m3.real_part, p(&[7, 14, 7, 1]));
        assert_eq!(m3.points, BigInt::from(13));
        assert_eq!(weil::lmfdb_label(&m3.full, &m3.q, 3), "3.4.ah_ba_acl");
    }

    #[test]
    fn minimal_candidates_find_both_ties() {
        let ties = minimal_candidates(3, &BigInt::from(4), 6).unwrap();
        assert_eq!(ties.len(), 2);
        for t in &ties {
            assert_eq!(t.points, BigInt::from(13));
        }
        let labels: Vec<String> = ties
            .iter()
            .map(|t| weil::lmfdb_label(&t.full, &t.q, 3))
            .collect();
        assert!(labels.contains(&"3.4.ah_ba_acl".to_string()));
        assert!(labels.contains(&"3.4.ag_r_abj".to_string()));
        let single = minimal_candidates(1, &BigInt::from(9), 6).unwrap();
        assert_eq!(single.len(), 1);
        assert_eq!(single[0].full, p(&[9, -5, 1]));
    }

    #[test]
    fn cyclicity_reports_match_frozen_values() {
        let (m1, r1) = maximal_cyclicity(1, &BigInt::from(49)).unwrap();
        assert_eq!(m1.points, BigInt::from(63));
        assert_eq!(r1.exceptions, vec![BigInt::from(3)]);
        assert_eq!(r1.apriori_primes, vec![BigInt::from(3)]);
        assert_eq!(r1.bound_respected, Some(true));
        let (_, r3) = maximal_cyclicity(3, &BigInt::from(4)).unwrap();
        assert!(r3.exceptions.is_empty());
        assert_eq!(r3.apriori_primes, vec![BigInt::from(7)]);
    }

    #[test]
    fn odd_power_counterexample_is_outside_bound_scope() {
        let params = build_parameters(3, 6).unwrap();
        let q599 = q(599);
        let full = weil::label_to_full(
            3,
            &BigInt::from(599),
            &[BigInt::from(142), BigInt::from(8516), BigInt::from(276053)],
        );
        let cand = WeilCandidate::from_full(&full, &q599).unwrap();
        let report = cyclicity_report(&cand, &params).unwrap();
        assert_eq!(report.exceptions, vec![BigInt::from(13)]);
        assert!(!report.bound_applies);
        assert_eq!(report.bound_respected, None);
        assert!(!report.apriori_primes.contains(&BigInt::from(13)));
    }

    #[test]
    fn scan_q4_matches_reference_tables() {
        let scan = scan_threefolds(&BigInt::from(4)).unwrap();
        let maximal = maximal_class(3, &BigInt::from(4)).unwrap();
        assert_eq!(scan.best.full, maximal.full);
        assert_eq!(scan.best.points, BigInt::from(377));
        assert!(scan.co_maximal.is_empty());
        assert_eq!(scan.exceeders.len(), 2);
        let (first, fc) = &scan.exceeders[0];
        assert_eq!(first.full, p(&[64, 128, 128, 79, 32, 8, 1]));
        assert_eq!(first.points, BigInt::from(440));
        assert_eq!(fc.kind, ClassKind::SquarefreeCommutative);
        assert!(fc.ordinary);
        assert_eq!(class_tag(first), "E_max-1(4) x M_2^0(4)");
        let (second, sc) = &scan.exceeders[1];
        assert_eq!(second.points, BigInt::from(385));
        assert_eq!(second.real_part, p(&[-10, 15, -7, 1]));
        assert_eq!(sc.kind, ClassKind::SquarefreeCommutative);
        assert_eq!(class_tag(second), "E_max-2(4) x M_2^0(4)");
        let cert = &scan.certificate;
        assert!(cert.q_even_power);
        assert_eq!(cert.best_points, BigInt::from(377));
        assert!(cert.frontier_bound.as_ref().unwrap() < &BigInt::from(377));
        assert!(cert.validated <= cert.popped);
        assert!(cert.admissible >= 3);
    }

    #[test]
    fn scan_q9_matches_construction() {
        let scan = scan_threefolds(&BigInt::from(9)).unwrap();
        assert_eq!(scan.best.points, BigInt::from(2911));
        assert_eq!(
            scan.best.full,
            maximal_class(3, &BigInt::from(9)).unwrap().full
        );
        let pts: Vec<BigInt> = scan.exceeders.iter().map(|(c, _)| c.points.clone()).collect();
        assert_eq!(pts, vec![BigInt::from(3135), BigInt::from(2926)]);
        assert!(scan
            .exceeders
            .iter()
            .all(|(_, c)| c.kind == ClassKind::SquarefreeCommutative && c.ordinary));
    }

    #[test]
    fn scan_rejects_non_prime_powers() {
        assert!(scan_threefolds(&BigInt::from(12)).is_err());
        assert!(scan_threefolds(&BigInt::from(1)).is_err());
    }

    #[test]
    fn class_tags_name_extremal_pieces() {
        let m3 = maximal_class(3, &BigInt::from(4)).unwrap();
        assert_eq!(class_tag(&m3), "M_3^0(4)");
        let m2 = maximal_class(2, &BigInt::from(9)).unwrap();
        assert_eq!(class_tag(&m2), "M_2^0(9)");
        let m1 = maximal_class(1, &BigInt::from(4)).unwrap();
        assert_eq!(class_tag(&m1), "E_max-1(4)");
    }

    #[test]
    fn bezout_certificate_is_mutation_sensitive() {
        assert!(verify_bezout());
        let p_bad = IntPoly::from_i64(&[10, 24, -27, -44, -12]);
        let q_ok = IntPoly::from_i64(&[-1, -10, -1, 16, 11, 2]);
        assert_ne!(
            bezout_combination(&p_bad, &q_ok),
            IntPoly::constant(BigInt::from(7))
        );
    }

    #[test]
    fn residue_tables_certify_the_mod49_conclusion() {
        let t = residue_tables();
        assert_eq!(t.f_mod7, vec![1, 0, 6, 6, 0, 1, 6]);
        assert_eq!(t.fprime_mod7, vec![2, 0, 3, 6, 0, 6, 4]);
        assert_eq!(t.f_mod49.len(), 14);
        let xs: Vec<i64> = t.f_mod49.iter().map(|(x, _)| *x).collect();
        assert_eq!(xs, vec![1, 4, 8, 11, 15, 18, 22, 25, 29, 32, 36, 39, 43, 46]);
        assert!(t.conclusion_holds);
    }

    #[test]
    fn functional_equation_and_point_identities_hold() {
        for g in 1..=3usize {
            let params = build_parameters(g, 6).unwrap();
            for x in 2..=40i64 {
                let xb = BigInt::from(x);
                let full = params.hg.specialize(&xb);
                let x2 = &xb * &xb;
                for i in 0..g {
                    assert_eq!(
                        full.coeff(i),
                        x2.pow((g - i) as u32) * full.coeff(2 * g - i),
                        "functional equation at g={g} x={x} i={i}"
                    );
                }
                assert_eq!(
                    full.eval(&BigInt::one()),
                    params.fg.eval(&(&xb + 1u32).pow(2)),
                    "maximal point identity at g={g} x={x}"
                );
                let full_min = params.hg_minus.specialize(&xb);
                assert_eq!(
                    full_min.eval(&BigInt::one()),
                    params.fg_minus.eval(&(&xb - 1u32).pow(2)),
                    "minimal point identity at g={g} x={x}"
                );
            }
        }
    }
}
