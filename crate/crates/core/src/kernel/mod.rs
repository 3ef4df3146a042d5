//! Concrete finite groups as complete multiplication tables.
//!
//! Elements are the dense indices `0..order`. Every table is validated on
//! construction (identity, inverses, exhaustive associativity) and refused
//! outright above the table cap, since memory is quadratic in the order and a
//! wrong table would silently corrupt every downstream check.

mod perm;
mod product;
mod quotient;
mod series;
mod subgroup;
mod text;

pub use perm::{Permutation, DEFAULT_PERMUTATION_CAP};
pub use quotient::Quotient;
pub use subgroup::Subgroup;

use crate::par::Execution;
use crate::{Error, Result};

/// Largest order accepted for a table-backed group.
pub const DEFAULT_TABLE_CAP: usize = 512;

/// A finite group given by its Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major: `table[a * order + b]` is the index of `a * b`.
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Option<Vec<String>>,
}

impl FiniteGroup {
    /// Validates a table given as rows.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        Self::from_table_with_cap(rows, DEFAULT_TABLE_CAP)
    }

    pub fn from_table_with_cap(rows: Vec<Vec<usize>>, cap: usize) -> Result<Self> {
        let order = rows.len();
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        let mut flat = Vec::with_capacity(order * order);
        for (row, entries) in rows.iter().enumerate() {
            if entries.len() != order {
                return Err(Error::NotSquare { row, len: entries.len(), expected: order });
            }
            for (col, &value) in entries.iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange { row, col, value, order });
                }
                flat.push(value as u32);
            }
        }
        Self::from_flat(order, flat, cap)
    }

    /// Builds and validates the table `f(a, b)` for all `a, b < order`.
    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        if order > DEFAULT_TABLE_CAP {
            return Err(Error::CapExceeded { order, cap: DEFAULT_TABLE_CAP });
        }
        let mut flat = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let value = f(a, b);
                if value >= order {
                    return Err(Error::EntryOutOfRange { row: a, col: b, value, order });
                }
                flat.push(value as u32);
            }
        }
        Self::from_flat(order, flat, DEFAULT_TABLE_CAP)
    }

    fn from_flat(order: usize, table: Vec<u32>, cap: usize) -> Result<Self> {
        if order == 0 {
            return Err(Error::NoIdentity);
        }
        if order > cap {
            return Err(Error::CapExceeded { order, cap });
        }
        let at = |a: usize, b: usize| table[a * order + b] as usize;
        let identity =
            (0..order).find(|&e| (0..order).all(|x| at(e, x) == x && at(x, e) == x)).ok_or(Error::NoIdentity)?;
        let mut inverse = vec![0; order];
        for (x, slot) in inverse.iter_mut().enumerate() {
            *slot =
                (0..order).find(|&y| at(x, y) == identity && at(y, x) == identity).ok_or(Error::MissingInverse(x))?;
        }
        if let Some((a, b, c)) = associativity_violation(order, &table, Execution::default()) {
            return Err(Error::NonAssociative(a, b, c));
        }
        Ok(FiniteGroup { order, table, identity, inverse, labels: None })
    }

    /// The trivial group.
    pub fn trivial() -> Self {
        FiniteGroup { order: 1, table: vec![0], identity: 0, inverse: vec![0], labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.order {
            return Err(Error::InvalidArgument(format!("expected {} labels, got {}", self.order, labels.len())));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Human-readable name of element `a`; its index when unlabeled.
    pub fn label(&self, a: usize) -> String {
        self.labels.as_ref().map_or_else(|| a.to_string(), |l| l[a].clone())
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn row(&self, a: usize) -> impl Iterator<Item = usize> + '_ {
        self.table[a * self.order..(a + 1) * self.order].iter().map(|&x| x as usize)
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut acc = self.identity;
        let mut base = a;
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// `g * h * g^-1`.
    #[inline]
    pub fn conjugate(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inverse[g])
    }

    /// `a^-1 * b^-1 * a * b`.
    #[inline]
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inverse[a], self.inverse[b]), self.mul(a, b))
    }

    /// Least `k >= 1` with `a^k = e`.
    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The table as rows of indices.
    pub fn rows(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| self.row(a).collect()).collect()
    }

    /// Checks that `map` (indexed by elements of `self`) is a homomorphism into `target`.
    pub fn is_homomorphism(&self, target: &FiniteGroup, map: &[usize]) -> bool {
        map.len() == self.order
            && (0..self.order).all(|a| (0..self.order).all(|b| map[self.mul(a, b)] == target.mul(map[a], map[b])))
    }
}

/// First `(a, b, c)` (in index order of `a`) with `(ab)c != a(bc)`.
pub fn associativity_violation(order: usize, table: &[u32], exec: Execution) -> Option<(usize, usize, usize)> {
    let at = |a: usize, b: usize| table[a * order + b] as usize;
    exec.find_first(order, |a| {
        for b in 0..order {
            let ab = at(a, b);
            let row_ab = &table[ab * order..(ab + 1) * order];
            if let Some(c) = (0..order).find(|&c| row_ab[c] as usize != at(a, at(b, c))) {
                return Some((a, b, c));
            }
        }
        None
    })
}
