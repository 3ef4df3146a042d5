//! Number-theoretic primitives shared by every classifier.
//!
//! Factorization is plain trial division: the classifiers work on desk-scale
//! inputs and value determinism over speed. Every product that can leave the
//! `u64` range is computed with checked arithmetic and reported as
//! [`Error::Overflow`] instead of wrapping.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// The prime factorization of a positive integer, primes strictly ascending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<(u64, u32)>", into = "Vec<(u64, u32)>")]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    /// Rebuilds a factorization from `(prime, exponent)` pairs, checking every
    /// invariant (primality, ordering, positive exponents, no overflow).
    pub fn from_factors(factors: Vec<(u64, u32)>) -> Result<Self> {
        let mut n: u64 = 1;
        let mut last = 1;
        for &(p, a) in &factors {
            if !is_prime(p) {
                return Err(Error::InvalidArgument(format!("{p} is not prime")));
            }
            if p <= last {
                return Err(Error::InvalidArgument("primes must be strictly ascending".into()));
            }
            if a == 0 {
                return Err(Error::InvalidArgument(format!("exponent of {p} is zero")));
            }
            n = checked_pow(p, a).and_then(|pa| n.checked_mul(pa)).ok_or(Error::Overflow("factorization product"))?;
            last = p;
        }
        Ok(Factorization { n, factors })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Exponent of `p` in `n` (0 when `p` does not divide `n`).
    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.iter().find(|&&(q, _)| q == p).map_or(0, |&(_, a)| a)
    }

    pub fn is_square_free(&self) -> bool {
        self.factors.iter().all(|&(_, a)| a <= 1)
    }

    pub fn is_cube_free(&self) -> bool {
        self.factors.iter().all(|&(_, a)| a <= 2)
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }
}

impl TryFrom<Vec<(u64, u32)>> for Factorization {
    type Error = Error;

    fn try_from(factors: Vec<(u64, u32)>) -> Result<Self> {
        Factorization::from_factors(factors)
    }
}

impl From<Factorization> for Vec<(u64, u32)> {
    fn from(f: Factorization) -> Self {
        f.factors
    }
}

impl fmt::Display for Factorization {
    /// Writes `2^2*3`, or `1` for the empty product.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (i, &(p, a)) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            if a == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{a}")?;
            }
        }
        Ok(())
    }
}

/// Factors `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::ZeroInput);
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut d: u64 = 2;
    while d.saturating_mul(d) <= rest {
        if rest % d == 0 {
            let mut a = 0;
            while rest % d == 0 {
                rest /= d;
                a += 1;
            }
            factors.push((d, a));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn checked_pow(base: u64, exp: u32) -> Option<u64> {
    base.checked_pow(exp)
}

/// `base^exp mod m`, exact for every `u64` input.
pub fn pow_mod(base: u64, mut exp: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut b = (base % m) as u128;
    let mut acc: u128 = 1;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> Result<u64> {
    Ok(phi_of(&factorize(n)?))
}

/// Euler's totient from a known factorization; never overflows since the
/// result is at most `n`.
pub fn phi_of(f: &Factorization) -> u64 {
    f.factors().iter().map(|&(p, a)| (p - 1) * p.pow(a - 1)).product()
}

/// `psi(p^k) = (p^k - 1)(p^(k-1) - 1)...(p - 1)`.
pub fn psi_prime_power(p: u64, k: u32) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidArgument("psi is defined for k >= 1".into()));
    }
    if !is_prime(p) {
        return Err(Error::InvalidArgument(format!("{p} is not prime")));
    }
    let mut acc: u64 = 1;
    for i in 1..=k {
        let term = checked_pow(p, i).ok_or(Error::Overflow("psi"))? - 1;
        acc = acc.checked_mul(term).ok_or(Error::Overflow("psi"))?;
    }
    Ok(acc)
}

/// `psi` extended multiplicatively: the product of `psi(p^a)` over the
/// prime-power parts of `n`. `psi(1) = 1`.
pub fn psi(n: u64) -> Result<u64> {
    factorize(n)?
        .factors()
        .iter()
        .try_fold(1u64, |acc, &(p, a)| acc.checked_mul(psi_prime_power(p, a)?).ok_or(Error::Overflow("psi")))
}

/// `psi(p^k) mod m`, computed without forming `psi(p^k)` itself.
pub fn psi_prime_power_mod(p: u64, k: u32, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let m128 = m as u128;
    let mut acc: u128 = 1 % m128;
    for i in 1..=k {
        let term = (pow_mod(p, i as u64, m) as u128 + m128 - 1) % m128;
        acc = acc * term % m128;
    }
    acc as u64
}

/// Smallest `v >= 1` with `q^v = 1 (mod m)`.
pub fn multiplicative_order(q: u64, m: u64) -> Result<u64> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!("modulus must be at least 2, got {m}")));
    }
    if gcd(q % m, m) != 1 {
        return Err(Error::NotCoprime { q, m });
    }
    let group_order = euler_phi(m)?;
    let mut order = group_order;
    for &(r, _) in factorize(group_order)?.factors() {
        while order % r == 0 && pow_mod(q, order / r, m) == 1 {
            order /= r;
        }
    }
    Ok(order)
}

/// Smallest `x` in `2..m` whose multiplicative order mod `m` is exactly `order`.
pub fn least_with_order(order: u64, m: u64) -> Option<u64> {
    (2..m).find(|&x| gcd(x, m) == 1 && multiplicative_order(x, m).ok() == Some(order))
}

/// Modular inverse of a unit.
pub fn inverse_mod(a: u64, m: u64) -> Result<u64> {
    let order = multiplicative_order(a, m)?;
    Ok(pow_mod(a, order - 1, m))
}

/// Distinct primes dividing `n` (empty for `n = 1`).
pub fn prime_divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.primes().collect())
}

/// Positive divisors of `n`, ascending.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    let f = factorize(n)?;
    let mut out = vec![1u64];
    for &(p, a) in f.factors() {
        let mut next = Vec::with_capacity(out.len() * (a as usize + 1));
        for &d in &out {
            let mut pk = 1;
            for _ in 0..=a {
                next.push(d * pk);
                pk *= p;
            }
        }
        out = next;
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(12).unwrap().factors(), &[(2, 2), (3, 1)]);
        assert_eq!(factorize(294).unwrap().factors(), &[(2, 1), (3, 1), (7, 2)]);
        assert_eq!(factorize(0), Err(Error::ZeroInput));
    }

    #[test]
    fn factorize_round_trips_to_a_million() {
        for n in 1..=1_000_000u64 {
            let f = factorize(n).unwrap();
            let back: u64 = f.factors().iter().map(|&(p, a)| p.pow(a)).product();
            assert_eq!(back, n);
        }
    }

    #[test]
    fn phi_examples() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        // units mod 15 and mod 4, counted directly
        let count = |m: u64| (1..=m).filter(|&x| gcd(x, m) == 1).count() as u64;
        assert_eq!(count(15), 8);
        assert_eq!(euler_phi(15).unwrap(), 8);
        assert_eq!(count(4), 2);
        assert_eq!(euler_phi(4).unwrap(), 2);
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi_prime_power(3, 1).unwrap(), 2);
        assert_eq!(psi_prime_power(2, 2).unwrap(), 3);
        assert_eq!(psi_prime_power(2, 3).unwrap(), 21);
        assert!(psi_prime_power(2, 0).is_err());
        assert_eq!(psi(12).unwrap(), 3 * 2);
        assert_eq!(psi(1).unwrap(), 1);
    }

    #[test]
    fn psi_overflow_is_reported() {
        assert_eq!(psi_prime_power(2, 20), Err(Error::Overflow("psi")));
    }

    #[test]
    fn psi_mod_matches_exact_value() {
        for p in [2u64, 3, 5, 7] {
            for k in 1..=5 {
                let exact = psi_prime_power(p, k).unwrap();
                for m in 1..60 {
                    assert_eq!(psi_prime_power_mod(p, k, m), exact % m, "p={p} k={k} m={m}");
                }
            }
        }
    }

    #[test]
    fn order_examples() {
        assert_eq!(multiplicative_order(1, 5).unwrap(), 1);
        assert_eq!(multiplicative_order(2, 3).unwrap(), 2);
        assert_eq!(multiplicative_order(2, 5).unwrap(), 4);
        assert_eq!(multiplicative_order(2, 4), Err(Error::NotCoprime { q: 2, m: 4 }));
    }

    #[test]
    fn display_and_serde() {
        assert_eq!(factorize(294).unwrap().to_string(), "2*3*7^2");
        assert_eq!(factorize(1).unwrap().to_string(), "1");
        assert!(Factorization::from_factors(vec![(3, 1), (2, 1)]).is_err());
        assert!(Factorization::from_factors(vec![(4, 1)]).is_err());
    }

    #[test]
    fn divisor_listing() {
        assert_eq!(divisors(12).unwrap(), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
    }

    proptest! {
        #[test]
        fn phi_is_multiplicative(a in 1u64..5000, b in 1u64..5000) {
            prop_assume!(gcd(a, b) == 1);
            prop_assert_eq!(euler_phi(a * b).unwrap(), euler_phi(a).unwrap() * euler_phi(b).unwrap());
        }

        #[test]
        fn psi_prefix_divisibility(p in prop::sample::select(vec![2u64, 3, 5, 7, 11, 13]), k in 1u32..8, j in 1u32..8) {
            prop_assume!(j <= k);
            let big = psi_prime_power(p, k);
            prop_assume!(big.is_ok());
            prop_assert_eq!(big.unwrap() % psi_prime_power(p, j).unwrap(), 0);
        }

        #[test]
        fn order_divides_phi(q in 1u64..10_000, m in 2u64..10_000) {
            prop_assume!(gcd(q, m) == 1);
            let v = multiplicative_order(q, m).unwrap();
            prop_assert_eq!(euler_phi(m).unwrap() % v, 0);
            prop_assert_eq!(pow_mod(q, v, m), 1);
            // minimality against brute force
            prop_assert!((1..v).all(|w| pow_mod(q, w, m) != 1));
        }
    }
}
