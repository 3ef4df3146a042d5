use std::collections::BTreeSet;
use std::hash::{Hash, Hasher};

use super::FiniteGroup;
use crate::{Error, Result};

/// A subgroup of a [`FiniteGroup`], stored as its sorted member indices.
///
/// Subgroups do not borrow their parent; every operation takes the parent
/// explicitly. Constructors assert Lagrange's theorem against the parent order.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: Vec<usize>,
    mask: Vec<bool>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members && self.mask.len() == other.mask.len()
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    /// Smaller subgroups first, then lexicographic by members.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.members.len(), &self.members).cmp(&(other.members.len(), &other.members))
    }
}

impl Subgroup {
    fn from_sorted(parent_order: usize, members: Vec<usize>) -> Self {
        assert_eq!(
            parent_order % members.len(),
            0,
            "subgroup order {} does not divide group order {parent_order}",
            members.len()
        );
        let mut mask = vec![false; parent_order];
        for &m in &members {
            mask[m] = true;
        }
        Subgroup { members, mask }
    }

    /// Validates an explicit member set.
    pub fn from_members(g: &FiniteGroup, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = members.into_iter().collect();
        if set.is_empty() || set.iter().any(|&m| m >= g.order()) {
            return Err(Error::NotASubgroup);
        }
        if !set.contains(&g.identity()) {
            return Err(Error::NotASubgroup);
        }
        for &a in &set {
            if !set.contains(&g.inv(a)) || set.iter().any(|&b| !set.contains(&g.mul(a, b))) {
                return Err(Error::NotASubgroup);
            }
        }
        if g.order() % set.len() != 0 {
            return Err(Error::NotASubgroup);
        }
        Ok(Self::from_sorted(g.order(), set.into_iter().collect()))
    }

    pub fn trivial(g: &FiniteGroup) -> Self {
        Self::from_sorted(g.order(), vec![g.identity()])
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Self::from_sorted(g.order(), g.elements().collect())
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn parent_order(&self) -> usize {
        self.mask.len()
    }

    pub fn index(&self) -> usize {
        self.parent_order() / self.order()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    #[inline]
    pub fn contains(&self, a: usize) -> bool {
        self.mask.get(a).copied().unwrap_or(false)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.mask.len()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.members.iter().all(|&m| other.contains(m))
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let members = self.members.iter().copied().filter(|&m| other.contains(m)).collect();
        Self::from_sorted(self.parent_order(), members)
    }
}

impl FiniteGroup {
    /// The smallest subgroup containing `seed`.
    pub fn subgroup_closure(&self, seed: &[usize]) -> Subgroup {
        let gens: Vec<usize> =
            seed.iter().copied().filter(|&s| s != self.identity).collect::<BTreeSet<_>>().into_iter().collect();
        let mut seen = vec![false; self.order];
        let mut queue = vec![self.identity];
        seen[self.identity] = true;
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &s in &gens {
                let y = self.mul(x, s);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.sort_unstable();
        Subgroup::from_sorted(self.order, queue)
    }

    /// The subgroup generated by `h` together with `extra`.
    pub fn join(&self, h: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut seed: Vec<usize> = h.members().to_vec();
        seed.extend_from_slice(extra);
        self.subgroup_closure(&seed)
    }

    /// `g H g^-1 = H` for every `g`.
    pub fn is_normal(&self, h: &Subgroup) -> bool {
        self.elements().all(|g| h.members().iter().all(|&x| h.contains(self.conjugate(g, x))))
    }

    /// The conjugate subgroup `g H g^-1`.
    pub fn conjugate_subgroup(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut members: Vec<usize> = h.members().iter().map(|&x| self.conjugate(g, x)).collect();
        members.sort_unstable();
        Subgroup::from_sorted(self.order, members)
    }

    pub fn center(&self) -> Subgroup {
        let members = self.elements().filter(|&a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a))).collect();
        Subgroup::from_sorted(self.order, members)
    }

    /// Elements commuting with every element of `set`.
    pub fn centralizer(&self, set: &[usize]) -> Subgroup {
        let members = self.elements().filter(|&a| set.iter().all(|&b| self.mul(a, b) == self.mul(b, a))).collect();
        Subgroup::from_sorted(self.order, members)
    }

    pub fn normalizer(&self, h: &Subgroup) -> Subgroup {
        let members =
            self.elements().filter(|&g| h.members().iter().all(|&x| h.contains(self.conjugate(g, x)))).collect();
        Subgroup::from_sorted(self.order, members)
    }

    /// The smallest normal subgroup containing `seed`.
    pub fn normal_closure(&self, seed: &[usize]) -> Subgroup {
        let conjugates: BTreeSet<usize> = seed
            .iter()
            .flat_map(|&x| self.elements().map(move |g| (g, x)))
            .map(|(g, x)| self.conjugate(g, x))
            .collect();
        self.subgroup_closure(&conjugates.into_iter().collect::<Vec<_>>())
    }

    /// `[H, H]`, generated by the commutators of elements of `h`.
    pub fn derived_subgroup_of(&self, h: &Subgroup) -> Subgroup {
        let comms: BTreeSet<usize> = h
            .members()
            .iter()
            .flat_map(|&a| h.members().iter().map(move |&b| (a, b)))
            .map(|(a, b)| self.commutator(a, b))
            .collect();
        self.subgroup_closure(&comms.into_iter().collect::<Vec<_>>())
    }

    pub fn commutator_subgroup(&self) -> Subgroup {
        self.derived_subgroup_of(&Subgroup::whole(self))
    }

    /// The subgroup of `self` restricted to `h`, as a group in its own right,
    /// with the embedding from new indices to old ones.
    pub fn restrict(&self, h: &Subgroup) -> Result<(FiniteGroup, Vec<usize>)> {
        let members = h.members().to_vec();
        let mut position = vec![usize::MAX; self.order];
        for (i, &m) in members.iter().enumerate() {
            position[m] = i;
        }
        let sub = FiniteGroup::from_fn(members.len(), |a, b| position[self.mul(members[a], members[b])])?;
        Ok((sub, members))
    }
}
