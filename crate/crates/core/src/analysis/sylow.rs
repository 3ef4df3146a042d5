use std::collections::BTreeSet;

use crate::arith::prime_divisors;
use crate::kernel::{FiniteGroup, Subgroup};
use crate::{Error, Result};

/// Largest order `hall_subgroup` will search.
pub const DEFAULT_HALL_CAP: usize = 60;

/// `p^a` with `p^a || n`.
pub(crate) fn p_part(n: usize, p: u64) -> usize {
    let mut n = n;
    let mut part = 1;
    while n % p as usize == 0 {
        n /= p as usize;
        part *= p as usize;
    }
    part
}

/// Whether every prime divisor of `k` lies in `pi`.
fn is_pi_number(k: usize, pi: &BTreeSet<u64>) -> bool {
    prime_divisors(k as u64).expect("subgroup orders are positive").iter().all(|q| pi.contains(q))
}

/// A Sylow `p`-subgroup, grown by normalizer ascent.
///
/// Starting from the trivial subgroup, each step adjoins the least element
/// `g` of `N(P) \ P` with `g^p` in `P`; that always exists while `P` is not
/// yet Sylow (Cauchy in `N(P)/P`), and `<P, g>` has order `p |P|`.
pub fn sylow_subgroup(g: &FiniteGroup, p: u64) -> Subgroup {
    let target = p_part(g.order(), p);
    let mut current = Subgroup::trivial(g);
    while current.order() < target {
        let n = g.normalizer(&current);
        let step = n
            .members()
            .iter()
            .copied()
            .find(|&x| !current.contains(x) && current.contains(g.pow(x, p)))
            .expect("a p-subgroup below Sylow order grows inside its normalizer");
        let next = g.join(&current, &[step]);
        assert_eq!(next.order(), current.order() * p as usize, "normalizer ascent must grow by exactly p");
        current = next;
    }
    current
}

/// All conjugates of `h`, sorted.
pub fn conjugates(g: &FiniteGroup, h: &Subgroup) -> Vec<Subgroup> {
    g.elements().map(|x| g.conjugate_subgroup(h, x)).collect::<BTreeSet<_>>().into_iter().collect()
}

pub fn sylow_conjugates(g: &FiniteGroup, p: u64) -> Vec<Subgroup> {
    conjugates(g, &sylow_subgroup(g, p))
}

/// `n_p`, with `n_p ≡ 1 (mod p)` and `n_p = |G : N(P)|` asserted.
pub fn sylow_count(g: &FiniteGroup, p: u64) -> usize {
    let sylow = sylow_subgroup(g, p);
    let count = conjugates(g, &sylow).len();
    assert_eq!(count % p as usize, 1 % p as usize, "n_{p} = {count} is not 1 mod {p}");
    assert_eq!(count, g.normalizer(&sylow).index(), "n_{p} differs from the normalizer index");
    count
}

/// A subgroup of order equal to the `pi`-part of `|G|`, or `None` when no
/// such subgroup exists.
///
/// Exhaustive: every `pi`-subgroup is reached by adjoining one `pi`-element at
/// a time, so the breadth-first search visits them all before giving up.
pub fn hall_subgroup(g: &FiniteGroup, pi: &[u64]) -> Result<Option<Subgroup>> {
    hall_subgroup_with_cap(g, pi, DEFAULT_HALL_CAP)
}

pub fn hall_subgroup_with_cap(g: &FiniteGroup, pi: &[u64], cap: usize) -> Result<Option<Subgroup>> {
    if g.order() > cap {
        return Err(Error::CapExceeded { order: g.order(), cap });
    }
    let pi: BTreeSet<u64> = pi.iter().copied().collect();
    let target: usize = pi.iter().map(|&p| p_part(g.order(), p)).product();
    let trivial = Subgroup::trivial(g);
    if target == 1 {
        return Ok(Some(trivial));
    }
    let candidates: Vec<usize> =
        g.elements().filter(|&x| x != g.identity() && is_pi_number(g.element_order(x), &pi)).collect();
    let mut seen = BTreeSet::from([trivial.clone()]);
    let mut frontier = vec![trivial];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for h in &frontier {
            for &x in &candidates {
                if h.contains(x) {
                    continue;
                }
                let k = g.join(h, &[x]);
                if k.order() > target || !is_pi_number(k.order(), &pi) {
                    continue;
                }
                if k.order() == target {
                    return Ok(Some(k));
                }
                if seen.insert(k.clone()) {
                    next.push(k);
                }
            }
        }
        frontier = next;
    }
    Ok(None)
}

/// Prime divisors of the group order, ascending.
pub fn order_primes(g: &FiniteGroup) -> Vec<u64> {
    prime_divisors(g.order() as u64).expect("group orders are positive")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Permutation;

    fn s3() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
    }

    fn a4() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![0, 2, 3, 1]]).unwrap()
    }

    fn a5() -> FiniteGroup {
        FiniteGroup::from_permutations(&[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]).unwrap()
    }

    #[test]
    fn sylow_examples() {
        let g = s3();
        assert_eq!(sylow_subgroup(&g, 3), g.commutator_subgroup());
        let c12 = FiniteGroup::from_fn(12, |a, b| (a + b) % 12).unwrap();
        assert_eq!(sylow_subgroup(&c12, 2).members(), &[0, 3, 6, 9]);
        let a4 = a4();
        let v4 = sylow_subgroup(&a4, 2);
        assert_eq!(v4.order(), 4);
        assert!(v4.members().iter().all(|&x| a4.element_order(x) <= 2));
        assert!(sylow_subgroup(&a4, 5).is_trivial());
    }

    #[test]
    fn sylow_count_examples() {
        assert_eq!(sylow_count(&s3(), 2), 3);
        assert_eq!(sylow_count(&s3(), 3), 1);
        assert_eq!(sylow_count(&a4(), 3), 4);
        assert_eq!(sylow_count(&a5(), 5), 6);
    }

    #[test]
    fn hall_examples() {
        let g = s3();
        assert_eq!(hall_subgroup(&g, &[3]).unwrap(), Some(g.commutator_subgroup()));
        let a5 = a5();
        assert_eq!(hall_subgroup(&a5, &[2, 3]).unwrap().map(|h| h.order()), Some(12));
        assert_eq!(hall_subgroup(&a5, &[2, 5]).unwrap(), None);
        assert_eq!(hall_subgroup(&a5, &[3, 5]).unwrap(), None);
    }

    #[test]
    fn hall_needs_more_than_three_generators() {
        // C2^4 is its own Hall {2}-subgroup and is not 3-generated
        let c = |cycles: &[&[usize]]| Permutation::from_cycles(8, cycles).unwrap();
        let gens = [c(&[&[0, 1]]), c(&[&[2, 3]]), c(&[&[4, 5]]), c(&[&[6, 7]])];
        let g = FiniteGroup::from_permutation_group(&gens, 100).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(hall_subgroup(&g, &[2]).unwrap().map(|h| h.order()), Some(16));
    }

    #[test]
    fn hall_cap() {
        let c64 = FiniteGroup::from_fn(64, |a, b| (a + b) % 64).unwrap();
        assert!(matches!(hall_subgroup(&c64, &[2]), Err(Error::CapExceeded { .. })));
    }
}
