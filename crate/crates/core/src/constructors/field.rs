//! Small finite fields `F_{q^v}` as polynomials over `F_q`.
//!
//! An element `c_0 + c_1 x + ... + c_{v-1} x^{v-1}` has index
//! `c_0 + c_1 q + ... + c_{v-1} q^{v-1}`, so index order is lexicographic with
//! the top coefficient most significant. The same indexing identifies the
//! field's additive group with the vector space `F_q^v`.

use crate::arith::{checked_pow, is_prime, prime_divisors};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct Field {
    q: u64,
    degree: u32,
    size: usize,
    /// Low coefficients of the monic modulus `x^v + m_{v-1} x^{v-1} + ... + m_0`.
    modulus: Vec<u64>,
    mul: Vec<u32>,
    generator: usize,
}

impl Field {
    /// `F_{q^v}` with the least monic irreducible modulus of degree `v`.
    pub fn new(q: u64, degree: u32, size_cap: usize) -> Result<Self> {
        if !is_prime(q) || degree == 0 {
            return Err(Error::InvalidArgument(format!("no field of order {q}^{degree}")));
        }
        let size = checked_pow(q, degree).and_then(|s| usize::try_from(s).ok()).filter(|&s| s <= size_cap).ok_or(
            Error::CapExceeded { order: checked_pow(q, degree).map_or(usize::MAX, |s| s as usize), cap: size_cap },
        )?;
        for low in 0..size {
            let modulus = digits(low, q, degree);
            let mul = mul_table(q, degree, &modulus);
            // a commutative ring with no zero divisors among its nonzero elements is a field
            let domain = (1..size).all(|a| (1..size).all(|b| mul[a * size + b] != 0));
            if domain {
                let mut field = Field { q, degree, size, modulus, mul, generator: 0 };
                field.generator = (1..size)
                    .find(|&g| field.unit_order(g) == size as u64 - 1)
                    .expect("the unit group of a finite field is cyclic");
                return Ok(field);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }

    pub fn characteristic(&self) -> u64 {
        self.q
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Least index whose powers exhaust the nonzero elements.
    pub fn generator(&self) -> usize {
        self.generator
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        let q = self.q as usize;
        let (mut a, mut b, mut place, mut out) = (a, b, 1, 0);
        while a > 0 || b > 0 {
            out += ((a % q + b % q) % q) * place;
            a /= q;
            b /= q;
            place *= q;
        }
        out
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let (mut acc, mut base, mut k) = (1, a, k);
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// Multiplicative order of a nonzero element.
    pub fn unit_order(&self, a: usize) -> u64 {
        assert_ne!(a, 0, "zero is not a unit");
        let mut order = self.size as u64 - 1;
        for r in prime_divisors(order).expect("fields have at least two elements") {
            while order % r == 0 && self.pow(a, order / r) == 1 {
                order /= r;
            }
        }
        order
    }

    /// `g^((q^v - 1) / m)`, an element of order exactly `m`.
    pub fn root_of_unity(&self, m: u64) -> Result<usize> {
        let units = self.size as u64 - 1;
        if m == 0 || units % m != 0 {
            return Err(Error::InvalidArgument(format!("F_{}^{} has no element of order {m}", self.q, self.degree)));
        }
        Ok(self.pow(self.generator, units / m))
    }
}

/// Base-`q` digits of `x`, least significant first, padded to `len`.
pub fn digits(x: usize, q: u64, len: u32) -> Vec<u64> {
    let mut x = x as u64;
    (0..len)
        .map(|_| {
            let d = x % q;
            x /= q;
            d
        })
        .collect()
}

pub fn from_digits(ds: &[u64], q: u64) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * q as usize + d as usize)
}

fn mul_table(q: u64, degree: u32, modulus: &[u64]) -> Vec<u32> {
    let size = q.pow(degree) as usize;
    let v = degree as usize;
    let polys: Vec<Vec<u64>> = (0..size).map(|x| digits(x, q, degree)).collect();
    let mut table = vec![0u32; size * size];
    for a in 0..size {
        for b in a..size {
            let mut prod = vec![0u64; 2 * v];
            for (i, &ca) in polys[a].iter().enumerate() {
                for (j, &cb) in polys[b].iter().enumerate() {
                    prod[i + j] = (prod[i + j] + ca * cb) % q;
                }
            }
            // x^v = -(m_{v-1} x^{v-1} + ... + m_0)
            for top in (v..2 * v).rev() {
                let c = prod[top];
                if c == 0 {
                    continue;
                }
                prod[top] = 0;
                for (i, &m) in modulus.iter().enumerate() {
                    let idx = top - v + i;
                    prod[idx] = (prod[idx] + (q - c) * m) % q;
                }
            }
            let x = from_digits(&prod[..v], q) as u32;
            table[a * size + b] = x;
            table[b * size + a] = x;
        }
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_fields() {
        let f = Field::new(7, 1, 1000).unwrap();
        assert_eq!(f.size(), 7);
        assert_eq!(f.mul(3, 5), 1);
        assert_eq!(f.generator(), 3);
        assert_eq!(f.root_of_unity(3).unwrap(), 2);
    }

    #[test]
    fn f4_and_f9() {
        // x^2 + x + 1 is the least irreducible quadratic over F_2
        let f4 = Field::new(2, 2, 1000).unwrap();
        assert_eq!(f4.modulus(), &[1, 1]);
        assert_eq!(f4.unit_order(f4.generator()), 3);
        // x^2 + 1 is irreducible over F_3 (no square root of -1)
        let f9 = Field::new(3, 2, 1000).unwrap();
        assert_eq!(f9.modulus(), &[1, 0]);
        assert_eq!(f9.unit_order(f9.generator()), 8);
    }

    #[test]
    fn field_axioms_spot_check() {
        let f = Field::new(5, 2, 1000).unwrap();
        for a in 0..f.size() {
            for b in 0..f.size() {
                for c in [1, 7, 13, 24] {
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }

    #[test]
    fn missing_roots_of_unity() {
        let f = Field::new(2, 3, 1000).unwrap();
        assert!(f.root_of_unity(7).is_ok());
        assert!(f.root_of_unity(3).is_err());
    }

    #[test]
    fn size_cap() {
        assert!(matches!(Field::new(2, 20, 1000), Err(Error::CapExceeded { .. })));
    }
}
