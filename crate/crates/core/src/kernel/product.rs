use super::{FiniteGroup, DEFAULT_TABLE_CAP};
use crate::{Error, Result};

impl FiniteGroup {
    /// `G × H`, with `(a, b)` stored at index `a * |H| + b`.
    pub fn direct_product(&self, other: &FiniteGroup) -> Result<FiniteGroup> {
        let m = other.order();
        let order = self
            .order()
            .checked_mul(m)
            .filter(|&o| o <= DEFAULT_TABLE_CAP)
            .ok_or(Error::CapExceeded { order: self.order().saturating_mul(m), cap: DEFAULT_TABLE_CAP })?;
        let product = FiniteGroup::from_fn(order, |x, y| self.mul(x / m, y / m) * m + other.mul(x % m, y % m))?;
        if self.labels().is_none() && other.labels().is_none() {
            return Ok(product);
        }
        let labels = (0..order).map(|x| format!("({},{})", self.label(x / m), other.label(x % m))).collect();
        product.with_labels(labels)
    }

    /// Index of `(a, b)` in `self.direct_product(other)`.
    pub fn pair_index(&self, other: &FiniteGroup, a: usize, b: usize) -> usize {
        a * other.order() + b
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Subgroup;

    fn z(n: usize) -> FiniteGroup {
        FiniteGroup::from_fn(n, |a, b| (a + b) % n).unwrap()
    }

    #[test]
    fn c2_times_c3_is_cyclic() {
        let (g, h) = (z(2), z(3));
        let p = g.direct_product(&h).unwrap();
        assert_eq!(p.order(), 6);
        assert_eq!(p.element_order(g.pair_index(&h, 1, 1)), 6);
    }

    #[test]
    fn trivial_factor() {
        let s3 = FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        let p = s3.direct_product(&FiniteGroup::trivial()).unwrap();
        assert_eq!(p.rows(), s3.rows());
    }

    #[test]
    fn klein_four() {
        let v = z(2).direct_product(&z(2)).unwrap();
        assert!(v.elements().filter(|&x| x != v.identity()).all(|x| v.element_order(x) == 2));
    }

    #[test]
    fn center_of_product_is_product_of_centers() {
        let s3 = FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        let c4 = z(4);
        let p = s3.direct_product(&c4).unwrap();
        let expected: Vec<usize> = s3
            .center()
            .members()
            .iter()
            .flat_map(|&a| c4.center().members().iter().map(move |&b| a * 4 + b).collect::<Vec<_>>())
            .collect();
        assert_eq!(p.center(), Subgroup::from_members(&p, expected).unwrap());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(z(30).direct_product(&z(30)), Err(Error::CapExceeded { .. })));
    }
}
