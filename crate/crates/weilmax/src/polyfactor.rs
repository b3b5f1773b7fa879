//! Factorization of integer polynomials over Q.
//!
//! Pipeline: content extraction, Yun squarefree decomposition, integer
//! root stripping, then for each squarefree part a modular attack: pick
//! small odd primes where the image stays squarefree, read off degree
//! patterns (which often certify irreducibility outright), fully factor
//! modulo the best prime, Hensel-lift past the Mignotte single-factor
//! bound, and recombine factor subsets in increasing cardinality.
//!
//! The Mignotte bound used is the classical `2^d * ||f||_2 * |lc(f)|`;
//! lifting always proceeds to the least power of the working prime
//! exceeding twice that bound, so true factors are recognized exactly from
//! their symmetric residues.

use crate::intpoly::IntPoly;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FactorError {
    #[error("cannot factor the zero polynomial")]
    ZeroPolynomial,
}

/// Content and irreducible factors with multiplicities.
///
/// Factors are primitive with positive leading coefficient, sorted by
/// degree then coefficients; `content` carries the sign, so
/// `content * prod(factor^multiplicity)` reproduces the input exactly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyFactorization {
    pub content: BigInt,
    pub factors: Vec<(IntPoly, u32)>,
}

impl PolyFactorization {
    pub fn value(&self) -> IntPoly {
        let mut acc = IntPoly::constant(self.content.clone());
        for (f, m) in &self.factors {
            acc = acc.mul(&f.pow(*m));
        }
        acc
    }

    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }
}

// ---- arithmetic mod m on ascending BigInt coefficient vectors ----

fn md(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x % m;
    if r.is_negative() {
        r + m
    } else {
        r
    }
}

fn modp_trim(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn modp_from(p: &IntPoly, m: &BigInt) -> Vec<BigInt> {
    modp_trim(p.coeffs().iter().map(|c| md(c, m)).collect())
}

fn modp_deg(v: &[BigInt]) -> usize {
    v.len().saturating_sub(1)
}

fn modp_mul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    modp_trim(out.into_iter().map(|c| md(&c, m)).collect())
}

fn modp_add(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    modp_trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
                    + b.get(i).cloned().unwrap_or_else(BigInt::zero);
                md(&x, m)
            })
            .collect(),
    )
}

fn modp_sub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let n = a.len().max(b.len());
    modp_trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).cloned().unwrap_or_else(BigInt::zero)
                    - b.get(i).cloned().unwrap_or_else(BigInt::zero);
                md(&x, m)
            })
            .collect(),
    )
}

fn modp_scale(a: &[BigInt], k: &BigInt, m: &BigInt) -> Vec<BigInt> {
    modp_trim(a.iter().map(|c| md(&(c * k), m)).collect())
}

fn inv_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one(), "inverse of non-unit mod m");
    md(&e.x, m)
}

/// Division with remainder; the divisor's leading coefficient must be a
/// unit mod m.
fn modp_divrem(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    assert!(!b.is_empty(), "modular division by zero");
    let db = modp_deg(b);
    let inv = inv_mod(b.last().unwrap(), m);
    let mut r: Vec<BigInt> = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len().saturating_sub(db)];
    while !r.is_empty() && modp_deg(&r) >= db && !(r.len() == 1 && r[0].is_zero()) {
        let dr = modp_deg(&r);
        let c = md(&(r.last().unwrap() * &inv), m);
        if !c.is_zero() {
            let k = dr - db;
            q[k] = c.clone();
            for (i, bc) in b.iter().enumerate() {
                let v = &r[k + i] - bc * &c;
                r[k + i] = md(&v, m);
            }
        }
        r.pop();
        r = modp_trim(r);
    }
    (modp_trim(q), modp_trim(r))
}

fn modp_monic(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.is_empty() {
        return Vec::new();
    }
    let inv = inv_mod(a.last().unwrap(), m);
    modp_scale(a, &inv, m)
}

fn modp_gcd(a: &[BigInt], b: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let (mut f, mut g) = (a.to_vec(), b.to_vec());
    while !g.is_empty() {
        let (_, r) = modp_divrem(&f, &g, m);
        f = g;
        g = r;
    }
    if f.is_empty() {
        f
    } else {
        modp_monic(&f, m)
    }
}

/// Extended Euclid mod p: returns (s, t) with s*a + t*b = 1; requires
/// gcd(a, b) = 1 mod p.
fn modp_bezout(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (Vec<BigInt>, Vec<BigInt>) {
    let (mut r0, mut r1) = (a.to_vec(), b.to_vec());
    let (mut s0, mut s1) = (vec![BigInt::one()], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![BigInt::one()]);
    while !r1.is_empty() {
        let (q, r) = modp_divrem(&r0, &r1, m);
        let s = modp_sub(&s0, &modp_mul(&q, &s1, m), m);
        let t = modp_sub(&t0, &modp_mul(&q, &t1, m), m);
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
        t0 = std::mem::replace(&mut t1, t);
    }
    assert_eq!(modp_deg(&r0), 0, "bezout of non-coprime polynomials");
    let inv = inv_mod(&r0[0], m);
    (modp_scale(&s0, &inv, m), modp_scale(&t0, &inv, m))
}

fn modp_deriv(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    if a.len() <= 1 {
        return Vec::new();
    }
    modp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| md(&(c * BigInt::from(i)), m))
            .collect(),
    )
}

/// `base^e mod (f, m)` by square and multiply.
fn modp_powmod(base: &[BigInt], e: &BigInt, f: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let mut acc = vec![BigInt::one()];
    let b = modp_divrem(base, f, m).1;
    for i in (0..e.bits()).rev() {
        acc = modp_divrem(&modp_mul(&acc, &acc, m), f, m).1;
        if e.bit(i) {
            acc = modp_divrem(&modp_mul(&acc, &b, m), f, m).1;
        }
    }
    acc
}

struct XorShift64 {
    s: u64,
}

impl XorShift64 {
    fn new(seed: u64) -> Self {
        XorShift64 {
            s: seed ^ 0x9e37_79b9_7f4a_7c15,
        }
    }
    fn next(&mut self) -> u64 {
        let mut x = self.s;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.s = x;
        x
    }
}

/// Distinct-degree then equal-degree factorization of a squarefree monic
/// polynomial mod the odd prime p. Randomness comes from a seed derived
/// from (p, degree), so results are reproducible.
fn modp_factor_squarefree(f: &[BigInt], p: &BigInt) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut rest = f.to_vec();
    // t^(p^d) mod f, advanced one Frobenius power per degree step.
    let t = vec![BigInt::zero(), BigInt::one()];
    let mut h = t.clone();
    let mut d = 0usize;
    while modp_deg(&rest) > 0 {
        d += 1;
        if 2 * d > modp_deg(&rest) {
            out.push(modp_monic(&rest, p));
            break;
        }
        h = modp_powmod(&h, p, &rest, p);
        let g = modp_gcd(&modp_sub(&h, &t, p), &rest, p);
        if modp_deg(&g) > 0 {
            let pu = p.to_u64().expect("small prime");
            let mut rng = XorShift64::new(pu ^ ((modp_deg(&g) as u64) << 24) ^ ((d as u64) << 48));
            equal_degree_split(&g, d, p, &mut rng, &mut out);
            rest = modp_divrem(&rest, &g, p).0;
            if modp_deg(&rest) > 0 {
                h = modp_divrem(&h, &rest, p).1;
            }
        }
    }
    out
}

/// Cantor-Zassenhaus split of a product of distinct irreducibles of equal
/// degree d mod odd p.
fn equal_degree_split(
    f: &[BigInt],
    d: usize,
    p: &BigInt,
    rng: &mut XorShift64,
    out: &mut Vec<Vec<BigInt>>,
) {
    if modp_deg(f) == d {
        out.push(modp_monic(f, p));
        return;
    }
    let n = modp_deg(f);
    let e: BigInt = (p.pow(d as u32) - BigInt::one()) / BigInt::from(2);
    loop {
        let a: Vec<BigInt> = modp_trim(
            (0..n)
                .map(|_| md(&BigInt::from(rng.next()), p))
                .collect(),
        );
        if modp_deg(&a) == 0 || a.is_empty() {
            continue;
        }
        let g0 = modp_gcd(&a, f, p);
        let g = if modp_deg(&g0) > 0 && modp_deg(&g0) < n {
            g0
        } else {
            let b = modp_powmod(&a, &e, f, p);
            let b1 = modp_sub(&b, &[BigInt::one()], p);
            if b1.is_empty() {
                continue;
            }
            let g = modp_gcd(&b1, f, p);
            if modp_deg(&g) == 0 || g.is_empty() || modp_deg(&g) == n {
                continue;
            }
            g
        };
        let rest = modp_divrem(f, &g, p).0;
        equal_degree_split(&g, d, p, rng, out);
        equal_degree_split(&rest, d, p, rng, out);
        return;
    }
}

/// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m)
/// to the same congruences mod m^2. f, g, h monic.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (Vec<BigInt>, Vec<BigInt>, Vec<BigInt>, Vec<BigInt>) {
    let m2 = m * m;
    let e = modp_sub(f, &modp_mul(g, h, &m2), &m2);
    let (q, r) = modp_divrem(&modp_mul(s, &e, &m2), h, &m2);
    let g1 = modp_add(&modp_add(g, &modp_mul(t, &e, &m2), &m2), &modp_mul(&q, g, &m2), &m2);
    let h1 = modp_add(h, &r, &m2);
    let b = modp_sub(
        &modp_add(&modp_mul(s, &g1, &m2), &modp_mul(t, &h1, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = modp_divrem(&modp_mul(s, &b, &m2), &h1, &m2);
    let s1 = modp_sub(s, &d, &m2);
    let t1 = modp_sub(
        t,
        &modp_add(&modp_mul(t, &b, &m2), &modp_mul(&c, &g1, &m2), &m2),
        &m2,
    );
    (g1, h1, s1, t1)
}

/// Lifts the factorization f = prod(factors) from mod p to mod target
/// (a power of p), recursively splitting the factor list in two.
fn hensel_lift_tree(
    f: &[BigInt],
    factors: &[Vec<BigInt>],
    p: &BigInt,
    target: &BigInt,
) -> Vec<Vec<BigInt>> {
    if factors.len() == 1 {
        return vec![modp_monic(&modp_from(
            &IntPoly::new(f.to_vec()),
            target,
        ), target)];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let mut g = vec![BigInt::one()];
    for x in left {
        g = modp_mul(&g, x, p);
    }
    let mut h = vec![BigInt::one()];
    for x in right {
        h = modp_mul(&h, x, p);
    }
    let (s, t) = modp_bezout(&g, &h, p);
    let (mut gm, mut hm, mut sm, mut tm) = (g, h, s, t);
    let mut m = p.clone();
    while m < *target {
        let fm = modp_from(&IntPoly::new(f.to_vec()), &(&m * &m));
        let (g1, h1, s1, t1) = hensel_step(&fm, &gm, &hm, &sm, &tm, &m);
        gm = g1;
        hm = h1;
        sm = s1;
        tm = t1;
        m = &m * &m;
    }
    // Reduce to the exact target modulus before recursing.
    let gt = modp_trim(gm.iter().map(|c| md(c, target)).collect());
    let ht = modp_trim(hm.iter().map(|c| md(c, target)).collect());
    let mut out = hensel_lift_tree(&gt, left, p, target);
    out.extend(hensel_lift_tree(&ht, right, p, target));
    out
}

fn symmetric_lift(v: &[BigInt], m: &BigInt) -> IntPoly {
    let half = m / 2;
    IntPoly::new(
        v.iter()
            .map(|c| {
                if c > &half {
                    c - m
                } else {
                    c.clone()
                }
            })
            .collect(),
    )
}

/// Mignotte-style single-factor coefficient bound `2^d * ||f||_2 * |lc|`.
fn mignotte_bound(f: &IntPoly) -> BigInt {
    let d = f.degree_or_zero() as u32;
    let norm_sq: BigInt = f.coeffs().iter().map(|c| c * c).sum();
    let norm = crate::realroots::isqrt(&norm_sq) + 1;
    (BigInt::one() << d) * norm * f.leading_coeff().unwrap().abs()
}

const SMALL_PRIMES: [u64; 60] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89,
    97, 101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179, 181,
    191, 193, 197, 199, 211, 223, 227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281,
    283,
];

/// Factors a primitive squarefree polynomial with no rational roots and
/// degree >= 2 into irreducibles (positive leading coefficients).
fn factor_squarefree_core(f: &IntPoly) -> Vec<IntPoly> {
    let d = f.degree().unwrap();
    if d <= 3 {
        // No rational root was found upstream, so quadratics and cubics
        // cannot split.
        return vec![f.primitive_part()];
    }
    // Work monic: F(x) = lc^(d-1) * f(x/lc); factors map back via x -> lc*x.
    let lc = f.leading_coeff().unwrap().clone();
    let fm = if lc.is_one() {
        f.clone()
    } else {
        IntPoly::new(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| {
                    if i == d {
                        BigInt::one()
                    } else {
                        c * lc.pow((d - 1 - i) as u32)
                    }
                })
                .collect(),
        )
    };
    debug_assert!(fm.is_monic());

    // Probe small odd primes where the image stays squarefree.
    let mut best: Option<(BigInt, Vec<Vec<BigInt>>)> = None;
    let mut pattern_mask = (1u128 << (d + 1)) - 1;
    let mut probed = 0;
    for &pu in SMALL_PRIMES.iter() {
        if probed >= 7 {
            break;
        }
        let p = BigInt::from(pu);
        let fp = modp_from(&fm, &p);
        if modp_deg(&fp) != d {
            continue;
        }
        let gp = modp_gcd(&fp, &modp_deriv(&fp, &p), &p);
        if modp_deg(&gp) != 0 {
            continue;
        }
        probed += 1;
        let factors = modp_factor_squarefree(&modp_monic(&fp, &p), &p);
        if factors.len() == 1 {
            return vec![f.primitive_part()];
        }
        // Subset-sum bitmask of attainable proper factor degrees.
        let mut mask: u128 = 1;
        for fac in &factors {
            let fd = modp_deg(fac);
            mask |= mask << fd;
        }
        pattern_mask &= mask;
        if pattern_mask & !(1 | (1u128 << d)) == 0 {
            // No proper degree survives every prime: irreducible.
            return vec![f.primitive_part()];
        }
        match &best {
            Some((_, b)) if b.len() <= factors.len() => {}
            _ => best = Some((p, factors)),
        }
    }
    let (p, mod_factors) = best.expect("at least one usable prime for a squarefree polynomial");

    // Hensel-lift past twice the Mignotte bound.
    let bound = mignotte_bound(&fm) * 2 + 1;
    let mut target = p.clone();
    while target < bound {
        target = &target * &target;
    }
    let fm_mod = modp_from(&fm, &target);
    let lifted = hensel_lift_tree(&fm_mod, &mod_factors, &p, &target);

    // Zassenhaus recombination in increasing subset cardinality.
    let mut pool: Vec<Vec<BigInt>> = lifted;
    let mut remaining = fm.clone();
    let mut monic_factors: Vec<IntPoly> = Vec::new();
    let mut size = 1;
    while 2 * size <= pool.len() {
        let mut advanced = false;
        let indices: Vec<usize> = (0..pool.len()).collect();
        for combo in combinations(&indices, size) {
            let mut cand = vec![BigInt::one()];
            for &i in &combo {
                cand = modp_mul(&cand, &pool[i], &target);
            }
            let cand = symmetric_lift(&cand, &target);
            if let Some(quot) = remaining.div_exact(&cand) {
                monic_factors.push(cand);
                remaining = quot;
                let keep: Vec<Vec<BigInt>> = pool
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| !combo.contains(i))
                    .map(|(_, v)| v.clone())
                    .collect();
                pool = keep;
                advanced = true;
                break;
            }
        }
        if !advanced {
            size += 1;
        }
    }
    if remaining.degree_or_zero() > 0 {
        monic_factors.push(remaining);
    }

    // Map back through the monicizing substitution.
    monic_factors
        .into_iter()
        .map(|g| {
            if lc.is_one() {
                g.primitive_part()
            } else {
                IntPoly::new(
                    g.coeffs()
                        .iter()
                        .enumerate()
                        .map(|(i, c)| c * lc.pow(i as u32))
                        .collect(),
                )
                .primitive_part()
            }
        })
        .collect()
}

fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > items.len() {
        return out;
    }
    loop {
        out.push(combo.iter().map(|&i| items[i]).collect());
        // Advance the combination.
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if combo[i] != i + items.len() - k {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

/// Positive divisors of a nonzero integer.
fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let fac = crate::arith::factorize(n).expect("nonzero integer");
    let mut divisors = vec![BigInt::one()];
    for (p, e) in &fac.prime_powers {
        let mut next = Vec::new();
        for d in &divisors {
            let mut pe = BigInt::one();
            for _ in 0..=*e {
                next.push(d * &pe);
                pe *= p;
            }
        }
        divisors = next;
    }
    divisors.sort();
    divisors
}

/// Strips every rational linear factor den*t - num from `rest`, pushing
/// the primitive factors found. Candidates come from num | rest(0),
/// den | lc(rest).
fn strip_linear_factors(rest: &mut IntPoly, out: &mut Vec<IntPoly>) {
    loop {
        if rest.degree_or_zero() < 1 || rest.coeff(0).is_zero() {
            return;
        }
        let c0 = rest.coeff(0);
        let lc = rest.leading_coeff().unwrap().clone();
        let mut found = false;
        'search: for den in positive_divisors(&lc) {
            for num in positive_divisors(&c0) {
                if !num.gcd(&den).is_one() {
                    continue;
                }
                for signed in [num.clone(), -&num] {
                    let lin = IntPoly::new(vec![-signed, den.clone()]);
                    if let Some(q) = rest.div_exact(&lin) {
                        out.push(lin);
                        *rest = q;
                        found = true;
                        break 'search;
                    }
                }
            }
        }
        if !found {
            return;
        }
    }
}

/// Factors one primitive squarefree polynomial (positive lc) completely.
fn factor_squarefree(f: &IntPoly) -> Vec<IntPoly> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    if rest.coeff(0).is_zero() && rest.degree_or_zero() > 0 {
        // Squarefree input: t divides at most once.
        out.push(IntPoly::from_i64(&[0, 1]));
        rest = rest.div_exact(&IntPoly::from_i64(&[0, 1])).unwrap();
    }
    if rest.degree_or_zero() == 0 {
        return out;
    }
    strip_linear_factors(&mut rest, &mut out);
    if rest.degree_or_zero() >= 1 {
        out.extend(factor_squarefree_core(&rest));
    }
    out
}

/// Complete factorization over Q: content times irreducible primitive
/// factors with multiplicity.
pub fn factor(p: &IntPoly) -> Result<PolyFactorization, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    let mut content = p.content();
    if p.leading_coeff().unwrap().is_negative() {
        content = -content;
    }
    let prim = p.primitive_part();
    if prim.degree_or_zero() == 0 {
        return Ok(PolyFactorization {
            content,
            factors: Vec::new(),
        });
    }
    // Yun's squarefree decomposition.
    let deriv = prim.derivative();
    let mut factors: Vec<(IntPoly, u32)> = Vec::new();
    let g = prim.gcd(&deriv);
    let mut parts: Vec<(IntPoly, u32)> = Vec::new();
    if g.degree_or_zero() == 0 {
        parts.push((prim.clone(), 1));
    } else {
        let mut c = prim.div_exact(&g).unwrap();
        let mut d = deriv.div_exact(&g).unwrap().sub(&c.derivative());
        let mut i = 1u32;
        loop {
            let a = c.gcd(&d);
            if a.degree_or_zero() > 0 {
                parts.push((a.clone(), i));
            }
            c = c.div_exact(&a).unwrap_or_else(|| c.clone());
            if c.degree_or_zero() == 0 {
                break;
            }
            d = d.div_exact(&a).unwrap().sub(&c.derivative());
            i += 1;
        }
    }
    for (part, mult) in parts {
        for irr in factor_squarefree(&part.primitive_part()) {
            factors.push((irr, mult));
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree_or_zero(), a.0.coeffs(), a.1).cmp(&(b.0.degree_or_zero(), b.0.coeffs(), b.1))
    });
    Ok(PolyFactorization { content, factors })
}

/// True iff `p` has degree >= 1 and is irreducible over Q.
pub fn is_irreducible(p: &IntPoly) -> Result<bool, FactorError> {
    if p.is_zero() {
        return Err(FactorError::ZeroPolynomial);
    }
    match p.degree() {
        Some(0) | None => return Ok(false),
        Some(1) => return Ok(true),
        Some(_) => {}
    }
    let prim = p.primitive_part();
    if prim.coeff(0).is_zero() {
        return Ok(false);
    }
    if !prim.is_squarefree() {
        return Ok(false);
    }
    Ok(factor_squarefree(&prim).len() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    #[test]
    fn irreducible_known_cases() {
        assert!(is_irreducible(&p(&[1, -3, 1])).unwrap());
        assert!(is_irreducible(&p(&[-1, 6, -5, 1])).unwrap());
        assert!(is_irreducible(&p(&[-1, 1])).unwrap());
        // (t-1)^2
        assert!(!is_irreducible(&p(&[1, -2, 1])).unwrap());
        // h_3(t, 2) specialized: irreducible sextic
        assert!(is_irreducible(&p(&[64, 112, 104, 63, 26, 7, 1])).unwrap());
        // product of two quadratics
        let f = p(&[4, 3, 1]).mul(&p(&[16, 20, 13, 5, 1]));
        assert!(!is_irreducible(&f).unwrap());
        // constants are not irreducible
        assert!(!is_irreducible(&p(&[5])).unwrap());
    }

    #[test]
    fn factor_products_of_quadratics() {
        let a = p(&[4, 3, 1]);
        let b = p(&[16, 20, 13, 5, 1]);
        let f = a.mul(&b);
        let fac = factor(&f).unwrap();
        assert_eq!(fac.content, BigInt::one());
        assert_eq!(fac.factors.len(), 2);
        assert_eq!(fac.value(), f);
        assert!(fac.factors.iter().any(|(g, m)| *g == a && *m == 1));
        assert!(fac.factors.iter().any(|(g, m)| *g == b && *m == 1));
    }

    #[test]
    fn factor_with_multiplicity_and_content() {
        let f = p(&[1, -2, 1]).scale(&BigInt::from(-6)); // -6 (t-1)^2
        let fac = factor(&f).unwrap();
        assert_eq!(fac.content, BigInt::from(-6));
        assert_eq!(fac.factors, vec![(p(&[-1, 1]), 2)]);
        assert_eq!(fac.value(), f);
    }

    #[test]
    fn factor_strips_integer_roots() {
        // t(t-2)(t+3)(t^2+1)
        let f = p(&[0, 1])
            .mul(&p(&[-2, 1]))
            .mul(&p(&[3, 1]))
            .mul(&p(&[1, 0, 1]));
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 4);
        assert_eq!(fac.value(), f);
    }

    #[test]
    fn factor_quartic_into_quadratics_needs_recombination() {
        // (t^2 - 2)(t^2 - 3): no rational roots, splits only at degree 2
        let f = p(&[-2, 0, 1]).mul(&p(&[-3, 0, 1]));
        let fac = factor(&f).unwrap();
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().all(|(_, m)| *m == 1));
        assert_eq!(fac.value(), f);
        assert!(!is_irreducible(&f).unwrap());
    }

    #[test]
    fn irreducible_quartics_and_sextics() {
        // t^4 + 1 (irreducible over Q, splits mod every prime)
        assert!(is_irreducible(&p(&[1, 0, 0, 0, 1])).unwrap());
        // t^4 - 7t^3 + 14t^2 - 8t + 1
        assert!(is_irreducible(&p(&[1, -8, 14, -7, 1])).unwrap());
        // t^6 - 11t^5 + 45t^4 - 84t^3 + 70t^2 - 21t + 1
        assert!(is_irreducible(&p(&[1, -21, 70, -84, 45, -11, 1])).unwrap());
    }

    #[test]
    fn factor_non_monic() {
        let f = p(&[-1, 2]).mul(&p(&[1, 1, 3]));
        let fac = factor(&f).unwrap();
        assert_eq!(fac.value(), f);
        assert_eq!(fac.factors.len(), 2);
        assert!(fac.factors.iter().any(|(g, _)| *g == p(&[-1, 2])));
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert_eq!(factor(&IntPoly::zero()), Err(FactorError::ZeroPolynomial));
        assert_eq!(
            is_irreducible(&IntPoly::zero()),
            Err(FactorError::ZeroPolynomial)
        );
    }
}
