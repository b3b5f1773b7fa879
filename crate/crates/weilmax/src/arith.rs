//! Integer factorization at desk scale: deterministic Miller-Rabin
//! primality, Pollard rho with Brent cycle detection, radicals, and
//! prime-power recognition.
//!
//! Primality is deterministic for n < 2^64 via a fixed witness set; larger
//! inputs use the same witnesses plus a fixed extended set, which is
//! best-effort but deterministic across runs. Pollard rho draws its
//! polynomial offsets from a fixed seed sequence, so factorizations are
//! reproducible.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ArithError {
    #[error("zero has no factorization")]
    ZeroInput,
    #[error("{0} is not a prime power")]
    NotPrimePower(BigInt),
    #[error("prime powers start at 2, got {0}")]
    TooSmall(BigInt),
}

/// Sign and sorted prime-power decomposition of a nonzero integer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub sign: i8,
    /// Sorted ascending by prime; exponents >= 1. Empty for +-1.
    pub prime_powers: Vec<(BigInt, u32)>,
}

impl Factorization {
    /// Multiplies the factorization back together.
    pub fn value(&self) -> BigInt {
        let mut v = BigInt::from(self.sign);
        for (p, e) in &self.prime_powers {
            v *= p.pow(*e);
        }
        v
    }

    pub fn primes(&self) -> Vec<BigInt> {
        self.prime_powers.iter().map(|(p, _)| p.clone()).collect()
    }
}

fn mulmod64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod64(acc, b, m);
        }
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for n < 2^64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This witness set decides primality for every n < 2^64.
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powmod64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn modpow_big(b: &BigInt, e: &BigInt, m: &BigInt) -> BigInt {
    b.modpow(e, m)
}

/// Miller-Rabin with fixed witnesses: deterministic below 2^64,
/// best-effort (but stable) above.
pub fn is_prime(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    let two = BigInt::from(2);
    if n.is_even() {
        return false;
    }
    let n_minus_1: BigInt = n - 1;
    let mut d = n_minus_1.clone();
    let mut s = 0u32;
    while d.is_even() {
        d /= 2;
        s += 1;
    }
    let witnesses: [u64; 20] = [
        2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71,
    ];
    'witness: for &a in &witnesses {
        let a = BigInt::from(a);
        if a >= *n {
            continue;
        }
        let mut x = modpow_big(&a, &d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = modpow_big(&x, &two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho (Brent variant) on u128 arithmetic via BigInt; returns a
/// nontrivial factor of composite odd n. The offset sequence is fixed, so
/// the result is deterministic.
fn pollard_brent(n: &BigInt) -> BigInt {
    let one = BigInt::one();
    let two = BigInt::from(2);
    if n.is_even() {
        return two;
    }
    // x -> x^2 + c mod n, for c = 1, 2, 3, ...
    for c in 1u64..64 {
        let c = BigInt::from(c);
        let mut y = BigInt::from(2);
        let mut r: u64 = 1;
        let mut q = BigInt::one();
        let mut g = BigInt::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = (&y * &y + &c) % n;
            }
            let mut k: u64 = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                let m = 128.min(r - k);
                for _ in 0..m {
                    y = (&y * &y + &c) % n;
                    let diff = (&x - &y).abs();
                    if !diff.is_zero() {
                        q = &q * &diff % n;
                    }
                }
                g = q.gcd(n);
                k += m;
            }
            r *= 2;
        }
        if g == *n {
            // Backtrack one step at a time.
            loop {
                ys = (&ys * &ys + &c) % n;
                let diff = (&x - &ys).abs();
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n && g > one {
            return g;
        }
    }
    unreachable!("pollard rho exhausted its offset sequence on {n}");
}

fn factor_into(n: BigInt, out: &mut Vec<BigInt>) {
    if n.is_one() {
        return;
    }
    if is_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let q = &n / &d;
    factor_into(d, out);
    factor_into(q, out);
}

/// Full prime factorization of a nonzero integer.
pub fn factorize(n: &BigInt) -> Result<Factorization, ArithError> {
    if n.is_zero() {
        return Err(ArithError::ZeroInput);
    }
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut primes = Vec::new();
    // Trial division by small primes clears the common mass cheaply.
    for p in [
        2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79,
        83, 89, 97,
    ] {
        let pb = BigInt::from(p);
        while (&m % &pb).is_zero() {
            m /= &pb;
            primes.push(pb.clone());
        }
        if m.is_one() {
            break;
        }
    }
    if !m.is_one() {
        factor_into(m, &mut primes);
    }
    primes.sort();
    let mut prime_powers: Vec<(BigInt, u32)> = Vec::new();
    for p in primes {
        match prime_powers.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => prime_powers.push((p, 1)),
        }
    }
    Ok(Factorization { sign, prime_powers })
}

/// Product of the distinct primes dividing n (n nonzero); radical(+-1) = 1.
pub fn radical(n: &BigInt) -> Result<BigInt, ArithError> {
    let f = factorize(n)?;
    let mut r = BigInt::one();
    for (p, _) in &f.prime_powers {
        r *= p;
    }
    Ok(r)
}

/// `|n| / radical(n)`: collects the repeated part of n. A prime l divides
/// `hat(n)` exactly when l^2 divides n.
pub fn hat(n: &BigInt) -> Result<BigInt, ArithError> {
    let r = radical(n)?;
    Ok(n.abs() / r)
}

/// A recognized prime power `q = p^r`, with the exact integer square root
/// when r is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePowerQ {
    pub q: BigInt,
    pub p: BigInt,
    pub r: u32,
    /// `p^(r/2)` when `r` is even, else `None`.
    pub sqrt_q: Option<BigInt>,
}

impl PrimePowerQ {
    pub fn is_even_power(&self) -> bool {
        self.r % 2 == 0
    }
}

/// Recognizes `q` as a prime power and exposes `(p, r, sqrt(q))`.
pub fn recognize_prime_power(q: &BigInt) -> Result<PrimePowerQ, ArithError> {
    if *q < BigInt::from(2) {
        return Err(ArithError::TooSmall(q.clone()));
    }
    let f = factorize(q)?;
    if f.prime_powers.len() != 1 {
        return Err(ArithError::NotPrimePower(q.clone()));
    }
    let (p, r) = f.prime_powers[0].clone();
    let sqrt_q = if r % 2 == 0 { Some(p.pow(r / 2)) } else { None };
    Ok(PrimePowerQ {
        q: q.clone(),
        p,
        r,
        sqrt_q,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn primality_small_and_known() {
        assert!(is_prime(&b(2)));
        assert!(is_prime(&b(3)));
        assert!(!is_prime(&b(1)));
        assert!(!is_prime(&b(0)));
        assert!(!is_prime(&b(-7)));
        assert!(is_prime(&b(599)));
        assert!(is_prime(&b(1567)));
        assert!(is_prime(&b(627619319)));
        assert!(!is_prime(&b(627619319 * 3)));
        // Carmichael number
        assert!(!is_prime(&b(561)));
        // large prime near 2^61
        assert!(is_prime(&b(2305843009213693951)));
    }

    #[test]
    fn factorize_known_values() {
        let f = factorize(&b(371293)).unwrap();
        assert_eq!(f.prime_powers, vec![(b(13), 5)]);
        let f = factorize(&b(1125)).unwrap();
        assert_eq!(f.prime_powers, vec![(b(3), 2), (b(5), 3)]);
        let f = factorize(&b(-343)).unwrap();
        assert_eq!(f.sign, -1);
        assert_eq!(f.prime_powers, vec![(b(7), 3)]);
        assert_eq!(f.value(), b(-343));
        let f = factorize(&b(983479472873)).unwrap();
        assert_eq!(f.prime_powers, vec![(b(1567), 1), (b(627619319), 1)]);
        assert_eq!(factorize(&b(1)).unwrap().prime_powers, vec![]);
        assert_eq!(factorize(&b(0)), Err(ArithError::ZeroInput));
    }

    #[test]
    fn factorize_semiprime_scale() {
        // product of two 9-digit primes, around the 10^18 target scale
        let p = b(999999937);
        let q = b(999999893);
        let n = &p * &q;
        let f = factorize(&n).unwrap();
        assert_eq!(f.prime_powers, vec![(b(999999893), 1), (b(999999937), 1)]);
    }

    #[test]
    fn radical_and_hat() {
        assert_eq!(radical(&b(440)).unwrap(), b(110)); // 2^3*5*11 -> 2*5*11
        assert_eq!(hat(&b(440)).unwrap(), b(4));
        assert_eq!(hat(&b(63)).unwrap(), b(3)); // 3^2*7
        assert_eq!(hat(&b(-63)).unwrap(), b(3));
        assert_eq!(hat(&b(1)).unwrap(), b(1));
        assert_eq!(radical(&b(-12)).unwrap(), b(6));
        // l | hat(n) iff l^2 | n
        let n = b(271257337); // 13^2 * 1605073... verified by multiplication below
        assert_eq!((&n % b(169)), b(0));
        assert!((hat(&n).unwrap() % b(13)).is_zero());
    }

    #[test]
    fn recognize_prime_powers() {
        let q = recognize_prime_power(&b(49)).unwrap();
        assert_eq!((q.p, q.r, q.sqrt_q), (b(7), 2, Some(b(7))));
        let q = recognize_prime_power(&b(64)).unwrap();
        assert_eq!((q.p, q.r, q.sqrt_q), (b(2), 6, Some(b(8))));
        let q = recognize_prime_power(&b(599)).unwrap();
        assert_eq!((q.p.clone(), q.r, q.sqrt_q.clone()), (b(599), 1, None));
        assert!(!q.is_even_power());
        assert_eq!(
            recognize_prime_power(&b(12)),
            Err(ArithError::NotPrimePower(b(12)))
        );
        assert_eq!(recognize_prime_power(&b(1)), Err(ArithError::TooSmall(b(1))));
    }
}
