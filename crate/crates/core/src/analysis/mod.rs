//! Group-level property tests: the ground truth the arithmetic predicates are
//! checked against.

mod sylow;
mod transfer;

pub use sylow::{
    conjugates, hall_subgroup, hall_subgroup_with_cap, order_primes, sylow_conjugates, sylow_count, sylow_subgroup,
    DEFAULT_HALL_CAP,
};
pub use transfer::{
    burnside_complement, random_representatives, transfer, transfer_with_representatives, Complement, TransferMap,
};

use std::collections::BTreeSet;

use crate::classify::Property;
use crate::kernel::{FiniteGroup, Subgroup, DEFAULT_TABLE_CAP};
use crate::{Error, Result};

pub fn is_cyclic_group(g: &FiniteGroup) -> bool {
    g.elements().any(|x| g.element_order(x) == g.order())
}

pub fn is_abelian_group(g: &FiniteGroup) -> bool {
    g.is_abelian()
}

/// Every Sylow subgroup is normal.
pub fn is_nilpotent_group(g: &FiniteGroup) -> bool {
    order_primes(g).into_iter().all(|p| g.is_normal(&sylow_subgroup(g, p)))
}

/// The upper central series reaches `G`.
pub fn nilpotent_by_upper_central_series(g: &FiniteGroup) -> bool {
    g.upper_central_series().last().is_some_and(Subgroup::is_whole)
}

/// `G` is the internal direct product of one Sylow subgroup per prime:
/// elements of distinct Sylows commute and their products cover `G`.
pub fn nilpotent_by_sylow_product(g: &FiniteGroup) -> bool {
    let sylows: Vec<Subgroup> = order_primes(g).into_iter().map(|p| sylow_subgroup(g, p)).collect();
    for (i, a) in sylows.iter().enumerate() {
        for b in &sylows[i + 1..] {
            let commute = a.members().iter().all(|&x| b.members().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
            if !commute {
                return false;
            }
        }
    }
    let mut product = BTreeSet::from([g.identity()]);
    for s in &sylows {
        product =
            product.iter().flat_map(|&x| s.members().iter().map(move |&y| (x, y))).map(|(x, y)| g.mul(x, y)).collect();
    }
    product.len() == g.order()
}

/// The derived series reaches `{e}`.
pub fn is_solvable_group(g: &FiniteGroup) -> bool {
    g.derived_series().last().is_some_and(Subgroup::is_trivial)
}

/// The Sylow subgroup for the largest prime is normal, and the quotient by it
/// again has an ordered Sylow tower.
pub fn has_ordered_sylow_tower(g: &FiniteGroup) -> bool {
    let Some(&p) = order_primes(g).last() else {
        return true;
    };
    let sylow = sylow_subgroup(g, p);
    if !g.is_normal(&sylow) {
        return false;
    }
    let q = g.quotient(&sylow).expect("normality checked above");
    has_ordered_sylow_tower(q.group())
}

/// The second form of the tower condition: for primes `p_1 < ... < p_r`, each
/// product `P_i P_{i+1} ... P_r` of chosen Sylow subgroups is a normal
/// subgroup of order `p_i^{a_i} ... p_r^{a_r}`.
pub fn sylow_products_normal(g: &FiniteGroup) -> bool {
    let mut product = Subgroup::trivial(g);
    for p in order_primes(g).into_iter().rev() {
        let sylow = sylow_subgroup(g, p);
        let expected = product.order() * sylow.order();
        product = g.join(&product, sylow.members());
        if product.order() != expected || !g.is_normal(&product) {
            return false;
        }
    }
    true
}

/// Normal subgroups of prime order, ascending.
pub fn prime_order_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    g.elements()
        .filter(|&x| crate::arith::is_prime(g.element_order(x) as u64))
        .map(|x| g.subgroup_closure(&[x]))
        .filter(|h| g.is_normal(h))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Repeatedly quotient by a normal subgroup of prime order.
///
/// Any one such subgroup will do: quotients of supersolvable groups are
/// supersolvable, so a failure below one choice is a failure below all.
pub fn is_supersolvable_group(g: &FiniteGroup) -> Result<bool> {
    if g.order() > DEFAULT_TABLE_CAP {
        return Err(Error::CapExceeded { order: g.order(), cap: DEFAULT_TABLE_CAP });
    }
    let mut current = g.clone();
    while current.order() > 1 {
        let Some(n) = prime_order_normal_subgroups(&current).into_iter().next() else {
            return Ok(false);
        };
        current = current.quotient(&n)?.into_group();
    }
    Ok(true)
}

/// The group-level test matching each arithmetic predicate.
pub fn has_property(g: &FiniteGroup, property: Property) -> Result<bool> {
    Ok(match property {
        Property::Cyclic => is_cyclic_group(g),
        Property::Abelian => is_abelian_group(g),
        Property::Nilpotent => is_nilpotent_group(g),
        Property::Supersolvable => is_supersolvable_group(g)?,
        Property::OrderedSylow => has_ordered_sylow_tower(g),
    })
}

/// Abelian, and every nonidentity element has the same prime order.
pub fn is_elementary_abelian(g: &FiniteGroup, h: &Subgroup) -> bool {
    let abelian = h.members().iter().all(|&x| h.members().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
    let orders: BTreeSet<usize> =
        h.members().iter().filter(|&&x| x != g.identity()).map(|&x| g.element_order(x)).collect();
    abelian && orders.len() <= 1 && orders.iter().all(|&o| crate::arith::is_prime(o as u64))
}

/// The minimal normal subgroups, each the normal closure of any of its
/// nonidentity elements.
pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let closures: BTreeSet<Subgroup> =
        g.elements().filter(|&x| x != g.identity()).map(|x| g.normal_closure(&[x])).collect();
    closures.iter().filter(|n| !closures.iter().any(|m| m.order() < n.order() && m.is_subset_of(n))).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
    }

    fn a4() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![0, 2, 3, 1]]).unwrap()
    }

    fn a5() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]).unwrap()
    }

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn(n, |a, b| (a + b) % n).unwrap()
    }

    /// Heisenberg(p) on triples `(a, b, c)`, for tests that predate the constructors.
    fn heis(p: usize) -> FiniteGroup {
        let split = |x: usize| (x / (p * p), (x / p) % p, x % p);
        FiniteGroup::from_fn(p * p * p, |x, y| {
            let ((a, b, c), (d, e, f)) = (split(x), split(y));
            ((a + d) % p) * p * p + ((b + e + a * f) % p) * p + (c + f) % p
        })
        .unwrap()
    }

    #[test]
    fn cyclic_and_abelian() {
        assert!(is_cyclic_group(&z(15)));
        let v4 = z(2).direct_product(&z(2)).unwrap();
        assert!(is_abelian_group(&v4) && !is_cyclic_group(&v4));
        assert!(!is_abelian_group(&heis(3)));
    }

    #[test]
    fn nilpotency_three_ways() {
        for (g, expected) in [(heis(3), true), (s3(), false), (z(6), true), (a4(), false), (heis(2), true)] {
            assert_eq!(is_nilpotent_group(&g), expected);
            assert_eq!(nilpotent_by_upper_central_series(&g), expected);
            assert_eq!(nilpotent_by_sylow_product(&g), expected);
        }
    }

    #[test]
    fn heisenberg_series() {
        let g = heis(3);
        assert_eq!(g.center().order(), 3);
        let orders: Vec<usize> = g.upper_central_series().iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 3, 27]);
    }

    #[test]
    fn solvability() {
        assert!(is_solvable_group(&s3()));
        assert!(!is_solvable_group(&a5()));
        assert!(is_solvable_group(&heis(3)));
    }

    #[test]
    fn towers() {
        assert!(has_ordered_sylow_tower(&s3()));
        assert!(!has_ordered_sylow_tower(&a4()));
        assert!(has_ordered_sylow_tower(&heis(3)));
        for g in [s3(), heis(2), z(12)] {
            assert!(sylow_products_normal(&g));
        }
        assert!(!sylow_products_normal(&a4()));
    }

    #[test]
    fn supersolvability() {
        assert!(is_supersolvable_group(&s3()).unwrap());
        assert!(!is_supersolvable_group(&a4()).unwrap());
        assert!(is_supersolvable_group(&heis(3)).unwrap());
        assert!(!is_supersolvable_group(&a5()).unwrap());
    }

    #[test]
    fn minimal_normals() {
        let mins = minimal_normal_subgroups(&a4());
        assert_eq!(mins.len(), 1);
        assert_eq!(mins[0].order(), 4);
        assert!(is_elementary_abelian(&a4(), &mins[0]));
        let mins = minimal_normal_subgroups(&z(6));
        assert_eq!(mins.iter().map(Subgroup::order).collect::<Vec<_>>(), vec![2, 3]);
        assert_eq!(minimal_normal_subgroups(&a5()).len(), 1);
        assert!(!is_elementary_abelian(&a5(), &Subgroup::whole(&a5())));
    }
}
