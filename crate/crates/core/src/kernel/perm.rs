use std::collections::HashMap;
use std::fmt;

use super::{FiniteGroup, DEFAULT_TABLE_CAP};
use crate::{Error, Result};

/// Default bound on the size of a permutation-group closure.
pub const DEFAULT_PERMUTATION_CAP: usize = 20160;

/// A bijection on `{0..d-1}`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(degree: usize) -> Self {
        Permutation((0..degree).collect())
    }

    /// Builds a permutation of `degree` points from disjoint cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a >= degree || b >= degree {
                    return Err(Error::InvalidPermutation(format!("point out of range in {cycle:?}")));
                }
                images[a] = b;
            }
        }
        Self::new(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self` first, then `other`: `x -> other(self(x))`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation; `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut done = vec![false; self.degree()];
        let mut wrote = false;
        for start in 0..self.degree() {
            if done[start] || self.0[start] == start {
                continue;
            }
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !done[x] {
                done[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
                first = false;
                x = self.0[x];
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

/// Elements of the group generated by `generators`, identity first, in
/// breadth-first discovery order.
pub fn closure(generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let degree = generators.first().map_or(0, Permutation::degree);
    if generators.iter().any(|g| g.degree() != degree) {
        return Err(Error::InvalidPermutation("generators act on different point sets".into()));
    }
    let id = Permutation::identity(degree);
    let mut index: HashMap<Permutation, usize> = HashMap::from([(id.clone(), 0)]);
    let mut elements = vec![id];
    let mut i = 0;
    while i < elements.len() {
        for g in generators {
            let next = elements[i].then(g);
            if !index.contains_key(&next) {
                if elements.len() == cap {
                    return Err(Error::CapExceeded { order: cap + 1, cap });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
        i += 1;
    }
    Ok(elements)
}

impl FiniteGroup {
    /// The permutation group generated by image lists, as a labeled table.
    pub fn from_permutations(generators: &[Vec<usize>]) -> Result<Self> {
        let perms = generators.iter().map(|g| Permutation::new(g.clone())).collect::<Result<Vec<_>>>()?;
        Self::from_permutation_group(&perms, DEFAULT_PERMUTATION_CAP)
    }

    /// Closure under composition (bounded by `cap`), then table conversion,
    /// which is still subject to the table cap.
    pub fn from_permutation_group(generators: &[Permutation], cap: usize) -> Result<Self> {
        let elements = closure(generators, cap)?;
        if elements.len() > DEFAULT_TABLE_CAP {
            return Err(Error::CapExceeded { order: elements.len(), cap: DEFAULT_TABLE_CAP });
        }
        let index: HashMap<&Permutation, usize> = elements.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let group = FiniteGroup::from_fn(elements.len(), |a, b| index[&elements[a].then(&elements[b])])?;
        group.with_labels(elements.iter().map(ToString::to_string).collect())
    }
}
