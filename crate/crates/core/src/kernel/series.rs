use super::{FiniteGroup, Subgroup};

impl FiniteGroup {
    /// `G ⊇ G' ⊇ G'' ⊇ ...`, ending at the first repeated term.
    ///
    /// The last entry is `{e}` exactly when the group is solvable; otherwise the
    /// series ends with its stable nontrivial term listed twice.
    pub fn derived_series(&self) -> Vec<Subgroup> {
        let mut series = vec![Subgroup::whole(self)];
        loop {
            let last = series.last().expect("series is never empty");
            if last.is_trivial() {
                return series;
            }
            let next = self.derived_subgroup_of(last);
            let stable = next == *last;
            series.push(next);
            if stable {
                return series;
            }
        }
    }

    /// `Z_0 = {e} ⊆ Z_1 = Z(G) ⊆ ...` with `Z_{i+1} / Z_i = Z(G / Z_i)`,
    /// ending at the first repeated term (or at `G`).
    pub fn upper_central_series(&self) -> Vec<Subgroup> {
        let mut series = vec![Subgroup::trivial(self)];
        loop {
            let last = series.last().expect("series is never empty");
            if last.is_whole() {
                return series;
            }
            let q = self.quotient(last).expect("upper central series terms are normal");
            let next = q.lift(self, &q.group().center());
            let stable = next == *last;
            series.push(next);
            if stable {
                return series;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orders(series: &[Subgroup]) -> Vec<usize> {
        series.iter().map(Subgroup::order).collect()
    }

    #[test]
    fn derived_series_examples() {
        let s3 = FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(orders(&s3.derived_series()), vec![6, 3, 1]);
        let c4 = FiniteGroup::from_fn(4, |a, b| (a + b) % 4).unwrap();
        assert_eq!(orders(&c4.derived_series()), vec![4, 1]);
        let a5 = FiniteGroup::from_permutations(&[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]).unwrap();
        assert_eq!(orders(&a5.derived_series()), vec![60, 60]);
    }

    #[test]
    fn upper_central_series_examples() {
        let c4 = FiniteGroup::from_fn(4, |a, b| (a + b) % 4).unwrap();
        assert_eq!(orders(&c4.upper_central_series()), vec![1, 4]);
        let s3 = FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap();
        assert_eq!(orders(&s3.upper_central_series()), vec![1, 1]);
    }
}
