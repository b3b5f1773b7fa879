//! Search for minimal-trace totally positive irreducible polynomials,
//! selection of f_g and f_g^-, and the derived thresholds n_g and c_g.
//!
//! The enumeration is a branch-and-bound over elementary symmetric values
//! e_2..e_g (e_1 is the fixed trace). Three necessary conditions prune the
//! tree: Maclaurin's inequalities between consecutive e_k, Newton's
//! inequalities, and total realness of the implied derivative prefix (the
//! (g-k)-th derivative of the final polynomial depends only on e_0..e_k).
//! Every filter is necessary for a totally positive polynomial, so the
//! enumeration is complete; survivors face the exact totally-positive and
//! irreducibility tests last.

use crate::intpoly::IntPoly;
use crate::polyfactor;
use crate::realroots::{self, default_tol, sqrt_upper};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::io::{BufRead, Write};
use std::path::PathBuf;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TraceError {
    #[error("degree {g} exceeds the configured search budget {budget}")]
    BudgetExceeded { g: usize, budget: usize },
    #[error("no totally positive member found for degree {0} (search bug)")]
    SearchExhausted(usize),
}

/// Everything the minimal-trace search produces for one degree.
#[derive(Clone, Debug, PartialEq)]
pub struct MinTraceRecord {
    pub g: usize,
    pub t_min: i64,
    /// Complete set of monic irreducible totally positive polynomials of
    /// degree g with trace t_min, sorted by coefficients.
    pub members: Vec<IntPoly>,
    /// The member whose difference against every other member has a
    /// positive coefficient at the highest disagreeing degree.
    pub fg: IntPoly,
    /// The totally negative mirror selected by the minimal analogue of
    /// the same order (roots of fg_minus are the negated s-values).
    pub fg_minus: IntPoly,
    /// Rational upper bound on the largest root of fg.
    pub roots_hi: BigRational,
    pub n_g: BigRational,
    pub c_g: BigRational,
}

fn binom(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

fn ipow(base: i128, e: usize) -> i128 {
    let mut acc: i128 = 1;
    for _ in 0..e {
        acc = acc.checked_mul(base).expect("filter arithmetic overflow");
    }
    acc
}

/// Maclaurin step: (e_k / C(g,k))^(1/k) must not exceed
/// (e_(k-1) / C(g,k-1))^(1/(k-1)); compared via k(k-1)-th powers.
fn maclaurin_ok(g: usize, k: usize, prev: i64, ek: i64) -> bool {
    ipow(ek as i128, k - 1) * ipow(binom(g, k - 1), k)
        <= ipow(binom(g, k), k - 1) * ipow(prev as i128, k)
}

/// Newton step at index k-1: p_(k-1)^2 >= p_(k-2) * p_k.
fn newton_ok(g: usize, k: usize, es: &[i64]) -> bool {
    let pk1 = es[k - 1] as i128;
    let pk2 = es[k - 2] as i128;
    let pk = es[k] as i128;
    pk1 * pk1 * binom(g, k - 2) * binom(g, k) >= binom(g, k - 1) * binom(g, k - 1) * pk2 * pk
}

/// The (g-k)-th derivative of the target polynomial, which is already
/// determined by e_0..e_k: sum_j (-1)^j e_j (g-j)!/(k-j)! t^(k-j).
fn derivative_prefix(g: usize, k: usize, es: &[i64]) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); k + 1];
    for (j, e) in es.iter().enumerate().take(k + 1) {
        // (g-j)(g-j-1)...(k-j+1)
        let mut ff = BigInt::one();
        for m in (k - j + 1)..=(g - j) {
            ff *= BigInt::from(m);
        }
        let signed = if j % 2 == 0 { ff } else { -ff };
        coeffs[k - j] = signed * BigInt::from(*e);
    }
    IntPoly::new(coeffs)
}

fn poly_from_es(g: usize, es: &[i64]) -> IntPoly {
    let mut coeffs = vec![BigInt::zero(); g + 1];
    for (j, e) in es.iter().enumerate().take(g + 1) {
        coeffs[g - j] = if j % 2 == 0 {
            BigInt::from(*e)
        } else {
            BigInt::from(-*e)
        };
    }
    IntPoly::new(coeffs)
}

fn dfs(g: usize, k: usize, es: &mut Vec<i64>, out: &mut Vec<IntPoly>) {
    if k > g {
        let p = poly_from_es(g, es);
        if realroots::is_totally_positive(&p).unwrap_or(false)
            && polyfactor::is_irreducible(&p).unwrap_or(false)
        {
            out.push(p);
        }
        return;
    }
    let mut ek = 1i64;
    while maclaurin_ok(g, k, es[k - 1], ek) {
        es[k] = ek;
        if newton_ok(g, k, es)
            && realroots::roots_all_real_positive(&derivative_prefix(g, k, es)).unwrap_or(false)
        {
            dfs(g, k + 1, es, out);
        }
        ek += 1;
    }
    es[k] = 0;
}

/// The complete list of monic irreducible totally positive degree-g
/// polynomials with the given root sum, sorted by coefficients. An empty
/// list is a valid outcome.
pub fn enumerate_totally_positive(g: usize, trace: i64) -> Vec<IntPoly> {
    assert!(g >= 1, "degree must be positive");
    if trace < g as i64 {
        // AM-GM: trace >= g (product of roots >= 1), so nothing exists.
        return Vec::new();
    }
    if g == 1 {
        return vec![IntPoly::new(vec![BigInt::from(-trace), BigInt::one()])];
    }
    let mut es = vec![0i64; g + 1];
    es[0] = 1;
    es[1] = trace;
    let mut out = Vec::new();
    dfs(g, 2, &mut es, &mut out);
    out.sort_by(|a, b| a.coeffs().cmp(b.coeffs()));
    out
}

/// Key for the coefficient order: the sequence a_(g-1), ..., a_0.
fn order_key(p: &IntPoly) -> Vec<BigInt> {
    let g = p.degree_or_zero();
    p.coeffs()[..g].iter().rev().cloned().collect()
}

/// The maximal member: against any other member, the difference has a
/// positive coefficient at the highest degree where they disagree.
pub fn select_fg(members: &[IntPoly]) -> IntPoly {
    members
        .iter()
        .max_by(|a, b| order_key(a).cmp(&order_key(b)))
        .expect("nonempty member set")
        .clone()
}

fn select_fg_minus_from(members: &[IntPoly]) -> IntPoly {
    members
        .iter()
        .map(|m| m.reflect())
        .min_by(|a, b| order_key(a).cmp(&order_key(b)))
        .expect("nonempty member set")
}

/// Runs the minimal-trace search for degree g and packages the complete
/// record: member set, the selected extremes, and the thresholds.
pub fn min_trace_set(g: usize, degree_budget: usize) -> Result<MinTraceRecord, TraceError> {
    if g == 0 || g > degree_budget {
        return Err(TraceError::BudgetExceeded {
            g,
            budget: degree_budget,
        });
    }
    // Trace 2g-1 is always attained (the minimal polynomial of
    // 4cos^2(pi/(2g+1)) has that trace), so the scan below terminates.
    for trace in (g as i64)..=(2 * g as i64) {
        let members = enumerate_totally_positive(g, trace);
        if members.is_empty() {
            continue;
        }
        let fg = select_fg(&members);
        let fg_minus = select_fg_minus_from(&members);
        let tol = default_tol();
        let roots_hi = realroots::max_root(&fg, &tol)
            .expect("fg is nonzero")
            .expect("fg is totally real");
        let mut rec = MinTraceRecord {
            g,
            t_min: trace,
            members,
            fg,
            fg_minus,
            roots_hi,
            n_g: BigRational::zero(),
            c_g: BigRational::zero(),
        };
        rec.n_g = compute_ng(&rec);
        rec.c_g = compute_cg(&rec);
        return Ok(rec);
    }
    Err(TraceError::SearchExhausted(g))
}

/// Searches the totally negative side and selects the minimal element:
/// for any other candidate f of the same trace, f - fg_minus has a
/// positive coefficient at the highest disagreeing degree.
pub fn select_fg_minus(g: usize, degree_budget: usize) -> Result<IntPoly, TraceError> {
    Ok(min_trace_set(g, degree_budget)?.fg_minus)
}

/// Degree-10 example beyond the enumeration budget: totally positive and
/// irreducible with trace 18, the minimum allowed in degree 10 by the
/// absolute trace bound (> 1.7836 per unit degree). Verified through its
/// values at 4 and 0 and its discriminant instead of exhaustive search.
pub fn degree_ten_witness() -> IntPoly {
    IntPoly::from_i64(&[1, -24, 206, -813, 1662, -1920, 1320, -549, 135, -18, 1])
}

/// A threshold beyond which fg dominates every competitor: past (i) the
/// largest crossing against same-trace members, (ii) the point where
/// g^g*fg(u) exceeds (g*u - (t_min+1))^g, which by AM-GM dominates any
/// totally positive competitor of larger trace whose roots all lie below
/// u, and (iii) the largest root of fg itself (so fg stays positive).
///
/// Reads g, t_min, members, and fg from the record.
pub fn compute_ng(rec: &MinTraceRecord) -> BigRational {
    let tol = default_tol();
    let mut best = rec.roots_hi.clone();
    for f in &rec.members {
        if *f == rec.fg {
            continue;
        }
        let diff = rec.fg.sub(f);
        if diff.degree_or_zero() == 0 {
            continue;
        }
        if let Ok(Some(r)) = realroots::max_root(&diff, &tol) {
            if r > best {
                best = r;
            }
        }
    }
    let gg = BigInt::from(rec.g).pow(rec.g as u32);
    let lin = IntPoly::new(vec![BigInt::from(-(rec.t_min + 1)), BigInt::from(rec.g)]);
    let dominator = rec.fg.scale(&gg).sub(&lin.pow(rec.g as u32));
    if dominator.degree_or_zero() > 0 {
        if let Ok(Some(r)) = realroots::max_root(&dominator, &tol) {
            if r > best {
                best = r;
            }
        }
    }
    best
}

/// The constant c_g with r_g <= 4*sqrt(c_g) and n_g <= (sqrt(c_g)+1)^2:
/// max(roots_hi^2/16, (sqrt(n_g)-1)^2), the second term dropped when
/// n_g <= 1 where any nonnegative c_g satisfies the constraint.
///
/// Reads roots_hi and n_g from the record.
pub fn compute_cg(rec: &MinTraceRecord) -> BigRational {
    let root_term = &rec.roots_hi * &rec.roots_hi / BigRational::from(BigInt::from(16));
    if rec.n_g <= BigRational::one() {
        return root_term;
    }
    let s = sqrt_upper(&rec.n_g) - BigRational::one();
    root_term.max(&s * &s)
}

/// One cached search result line.
#[derive(Serialize, Deserialize)]
struct CacheLine {
    g: usize,
    trace: i64,
    coeffs: Vec<String>,
}

/// JSONL cache for enumeration results, one file per (g, trace) key; an
/// existing file (even empty) counts as a hit, so reruns are incremental.
pub struct TraceCache {
    dir: PathBuf,
}

impl TraceCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        TraceCache { dir: dir.into() }
    }

    fn path(&self, g: usize, trace: i64) -> PathBuf {
        self.dir.join(format!("tpos_g{g}_t{trace}.jsonl"))
    }

    /// Cached `enumerate_totally_positive`, reading the stored lines when
    /// present and writing them after a fresh computation.
    pub fn members(&self, g: usize, trace: i64) -> std::io::Result<Vec<IntPoly>> {
        let path = self.path(g, trace);
        if path.exists() {
            let file = std::fs::File::open(&path)?;
            let mut out = Vec::new();
            for line in std::io::BufReader::new(file).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let parsed: CacheLine = serde_json::from_str(&line)
                    .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
                let coeffs: Vec<BigInt> = parsed
                    .coeffs
                    .iter()
                    .map(|s| s.parse())
                    .collect::<Result<_, _>>()
                    .map_err(|e| std::io::Error::new(std::io::ErrorKind::InvalidData, e))?;
                out.push(IntPoly::new(coeffs));
            }
            return Ok(out);
        }
        let members = enumerate_totally_positive(g, trace);
        std::fs::create_dir_all(&self.dir)?;
        let mut file = std::fs::File::create(&path)?;
        for m in &members {
            let line = CacheLine {
                g,
                trace,
                coeffs: m.coeffs().iter().map(|c| c.to_string()).collect(),
            };
            writeln!(file, "{}", serde_json::to_string(&line).unwrap())?;
        }
        Ok(members)
    }
}
