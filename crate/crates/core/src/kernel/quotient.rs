use super::{FiniteGroup, Subgroup};
use crate::{Error, Result};

/// `G / N` together with the natural projection.
///
/// Cosets are numbered in ascending order of their representative, which is
/// the minimal element index of the coset.
#[derive(Clone, Debug)]
pub struct Quotient {
    group: FiniteGroup,
    projection: Vec<usize>,
    representatives: Vec<usize>,
}

impl Quotient {
    pub fn group(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn into_group(self) -> FiniteGroup {
        self.group
    }

    /// The coset containing `g`.
    pub fn project(&self, g: usize) -> usize {
        self.projection[g]
    }

    pub fn projection(&self) -> &[usize] {
        &self.projection
    }

    pub fn representative(&self, coset: usize) -> usize {
        self.representatives[coset]
    }

    /// Full preimage in `G` of a subgroup of the quotient.
    pub fn lift(&self, parent: &FiniteGroup, sub: &Subgroup) -> Subgroup {
        let members: Vec<usize> = parent.elements().filter(|&g| sub.contains(self.projection[g])).collect();
        Subgroup::from_members(parent, members).expect("preimage of a subgroup is a subgroup")
    }
}

impl FiniteGroup {
    /// The quotient by a normal subgroup.
    pub fn quotient(&self, n: &Subgroup) -> Result<Quotient> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        let mut projection = vec![usize::MAX; self.order];
        let mut representatives = Vec::with_capacity(self.order / n.order());
        for g in self.elements() {
            if projection[g] != usize::MAX {
                continue;
            }
            let coset = representatives.len();
            representatives.push(g);
            for &x in n.members() {
                projection[self.mul(g, x)] = coset;
            }
        }
        let reps = representatives.clone();
        let group = FiniteGroup::from_fn(reps.len(), |a, b| projection[self.mul(reps[a], reps[b])])?;
        let labels = reps.iter().map(|&r| format!("[{}]", self.label(r))).collect();
        let group = group.with_labels(labels)?;
        Ok(Quotient { group, projection, representatives })
    }
}
