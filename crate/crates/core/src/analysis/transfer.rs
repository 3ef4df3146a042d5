use rand::seq::SliceRandom;
use rand::Rng;

use crate::kernel::{FiniteGroup, Subgroup};
use crate::{Error, Result};

/// The transfer `V: G -> H/H'`.
///
/// Each image is stored as the least element index of its coset `hH'`, so two
/// maps are equal exactly when they agree modulo `H'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TransferMap {
    target: Subgroup,
    derived: Subgroup,
    images: Vec<usize>,
}

impl TransferMap {
    pub fn target(&self) -> &Subgroup {
        &self.target
    }

    /// `H'`.
    pub fn derived_of_target(&self) -> &Subgroup {
        &self.derived
    }

    /// Canonical representative of `V(g) H'`.
    pub fn image(&self, g: usize) -> usize {
        self.images[g]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Number of distinct cosets hit.
    pub fn image_order(&self) -> usize {
        let mut seen = self.images.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Elements mapped to the trivial coset `H'`.
    pub fn kernel(&self, g: &FiniteGroup) -> Subgroup {
        let e = canonical(g, &self.derived, g.identity());
        Subgroup::from_members(g, g.elements().filter(|&x| self.images[x] == e))
            .expect("kernel of a homomorphism is a subgroup")
    }

    /// `V(ab) = V(a) V(b)` modulo `H'` for all pairs.
    pub fn is_homomorphism(&self, g: &FiniteGroup) -> bool {
        g.elements().all(|a| {
            g.elements()
                .all(|b| self.images[g.mul(a, b)] == canonical(g, &self.derived, g.mul(self.images[a], self.images[b])))
        })
    }
}

/// Least element of `h D` for the normal subgroup `D` of `H`.
fn canonical(g: &FiniteGroup, derived: &Subgroup, h: usize) -> usize {
    derived.members().iter().map(|&d| g.mul(h, d)).min().expect("subgroups are nonempty")
}

/// Right cosets `Hx`, each as its sorted member list, ordered by least member.
fn right_cosets(g: &FiniteGroup, h: &Subgroup) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; g.order()];
    let mut cosets = Vec::with_capacity(h.index());
    for x in g.elements() {
        if assigned[x] {
            continue;
        }
        let mut coset: Vec<usize> = h.members().iter().map(|&k| g.mul(k, x)).collect();
        coset.sort_unstable();
        for &y in &coset {
            assigned[y] = true;
        }
        cosets.push(coset);
    }
    cosets
}

/// Evaluates the transfer for an explicit choice of right-coset representatives.
pub fn transfer_with_representatives(g: &FiniteGroup, h: &Subgroup, reps: &[usize]) -> Result<TransferMap> {
    if h.parent_order() != g.order() {
        return Err(Error::NotASubgroup);
    }
    if reps.len() != h.index() {
        return Err(Error::InvalidArgument(format!(
            "expected {} coset representatives, got {}",
            h.index(),
            reps.len()
        )));
    }
    // phi as a lookup: element -> representative of its right coset
    let mut phi = vec![usize::MAX; g.order()];
    for &x in reps {
        for &k in h.members() {
            let y = g.mul(k, x);
            if phi[y] != usize::MAX {
                return Err(Error::InvalidArgument("representatives share a coset".into()));
            }
            phi[y] = x;
        }
    }
    let derived = g.derived_subgroup_of(h);
    let images = g
        .elements()
        .map(|el| {
            let product = reps.iter().fold(g.identity(), |acc, &x| {
                let xg = g.mul(x, el);
                let factor = g.mul(xg, g.inv(phi[xg]));
                debug_assert!(h.contains(factor));
                g.mul(acc, factor)
            });
            canonical(g, &derived, product)
        })
        .collect();
    Ok(TransferMap { target: h.clone(), derived, images })
}

/// Representatives chosen uniformly from each right coset.
pub fn random_representatives(g: &FiniteGroup, h: &Subgroup, rng: &mut impl Rng) -> Vec<usize> {
    let mut reps: Vec<usize> =
        right_cosets(g, h).iter().map(|c| *c.choose(rng).expect("cosets are nonempty")).collect();
    reps.shuffle(rng);
    reps
}

/// The transfer with minimal-index representatives.
///
/// The result is re-evaluated under one seeded random choice of
/// representatives and checked to be a homomorphism; a mismatch panics.
pub fn transfer(g: &FiniteGroup, h: &Subgroup) -> Result<TransferMap> {
    use rand::SeedableRng;
    let reps: Vec<usize> = right_cosets(g, h).iter().map(|c| c[0]).collect();
    let map = transfer_with_representatives(g, h, &reps)?;
    let mut rng = rand::rngs::StdRng::seed_from_u64(g.order() as u64 ^ (h.order() as u64) << 32);
    let other = transfer_with_representatives(g, h, &random_representatives(g, h, &mut rng))?;
    assert_eq!(map, other, "transfer depends on the choice of coset representatives");
    assert!(map.is_homomorphism(g), "transfer is not a homomorphism");
    Ok(map)
}

/// Outcome of the normal complement construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Complement {
    Found(Subgroup),
    /// `P` is not central in its normalizer.
    NotApplicable,
}

/// A normal complement of the Sylow subgroup `p` when `P ⊆ Z(N(P))`,
/// computed as the kernel of the transfer into `P`.
pub fn burnside_complement(g: &FiniteGroup, p: &Subgroup) -> Result<Complement> {
    let n = g.normalizer(p);
    if !p.is_subset_of(&g.centralizer(n.members())) {
        return Ok(Complement::NotApplicable);
    }
    let kernel = transfer(g, p)?.kernel(g);
    assert!(g.is_normal(&kernel));
    assert_eq!(kernel.index(), p.order(), "complement index differs from |P|");
    assert!(kernel.intersection(p).is_trivial());
    Ok(Complement::Found(kernel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::sylow_subgroup;
    use rand::SeedableRng;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
    }

    fn a4() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![0, 2, 3, 1]]).unwrap()
    }

    #[test]
    fn s3_into_a3_is_trivial() {
        let g = s3();
        let t = transfer(&g, &g.commutator_subgroup()).unwrap();
        assert_eq!(t.image_order(), 1);
    }

    #[test]
    fn a4_into_sylow3() {
        let g = a4();
        let p = sylow_subgroup(&g, 3);
        let t = transfer(&g, &p).unwrap();
        assert_eq!(t.image_order(), 3);
        assert_eq!(t.kernel(&g), sylow_subgroup(&g, 2));
    }

    #[test]
    fn abelian_into_itself_is_identity() {
        let g = FiniteGroup::from_fn(10, |a, b| (a + b) % 10).unwrap();
        let t = transfer(&g, &Subgroup::whole(&g)).unwrap();
        assert!(g.elements().all(|x| t.image(x) == x));
    }

    #[test]
    fn representative_independence() {
        let g = a4();
        let p = sylow_subgroup(&g, 3);
        let base = transfer(&g, &p).unwrap();
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..10 {
            let reps = random_representatives(&g, &p, &mut rng);
            assert_eq!(transfer_with_representatives(&g, &p, &reps).unwrap(), base);
        }
    }

    #[test]
    fn bad_representatives() {
        let g = s3();
        let p = sylow_subgroup(&g, 2);
        assert!(transfer_with_representatives(&g, &p, &[0, 0, 0]).is_err());
        assert!(transfer_with_representatives(&g, &p, &[0]).is_err());
    }

    #[test]
    fn complements() {
        let g = a4();
        assert_eq!(burnside_complement(&g, &sylow_subgroup(&g, 3)).unwrap(), Complement::Found(sylow_subgroup(&g, 2)));
        let s3 = s3();
        assert_eq!(
            burnside_complement(&s3, &sylow_subgroup(&s3, 2)).unwrap(),
            Complement::Found(s3.commutator_subgroup())
        );
        // N(P) = A4 and P = V4 is not central in it
        assert_eq!(burnside_complement(&g, &sylow_subgroup(&g, 2)).unwrap(), Complement::NotApplicable);
    }
}
