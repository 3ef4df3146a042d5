//! Concrete groups for every counterexample family, and the recipes naming them.

mod field;
mod groups;

pub use field::Field;
pub use groups::{make_case_group, make_cyclic, make_heisenberg, make_redei, make_semidirect_elem_abelian, CaseSpec};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::arith::{checked_pow, is_prime, least_with_order, multiplicative_order};
use crate::classify::{Property, Violation, ViolationDiagnosis};
use crate::kernel::FiniteGroup;
use crate::{Error, Result};

/// The non-cyclic part of a witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WitnessBase {
    /// `C_q`, completed by a cofactor divisible by `q`.
    CyclicSquare {
        q: u64,
    },
    /// `C_q ⋊ C_p` with `p | q - 1`.
    CyclicPair {
        p: u64,
        q: u64,
    },
    /// Heisenberg group of order `p^3`.
    AbelianCube {
        p: u64,
    },
    /// `(C_p)^k ⋊ C_m` with `m | p^k - 1`.
    SemidirectElemAbelian {
        p: u64,
        k: u32,
        m: u64,
    },
    /// Skew product of `F_{q^v}` and `C_{p^u}`, `v = ord(q mod p)`.
    RedeiF1 {
        p: u64,
        q: u64,
        u: u32,
    },
    CaseF2 {
        p: u64,
        p_prime: u64,
        q: u64,
        rho: u64,
        sigma: u64,
    },
    CaseF3 {
        p: u64,
        q: u64,
        rho: u64,
    },
    CaseF4 {
        p: u64,
        q: u64,
        rho: u64,
    },
}

impl WitnessBase {
    pub fn kind(&self) -> &'static str {
        match self {
            WitnessBase::CyclicSquare { .. } => "cyclic_square",
            WitnessBase::CyclicPair { .. } => "cyclic_pair",
            WitnessBase::AbelianCube { .. } => "abelian_cube",
            WitnessBase::SemidirectElemAbelian { .. } => "semidirect_elem_abelian",
            WitnessBase::RedeiF1 { .. } => "redei_f1",
            WitnessBase::CaseF2 { .. } => "case_f2",
            WitnessBase::CaseF3 { .. } => "case_f3",
            WitnessBase::CaseF4 { .. } => "case_f4",
        }
    }

    pub fn parameters(&self) -> Vec<(&'static str, u64)> {
        match *self {
            WitnessBase::CyclicSquare { q } => vec![("q", q)],
            WitnessBase::CyclicPair { p, q } => vec![("p", p), ("q", q)],
            WitnessBase::AbelianCube { p } => vec![("p", p)],
            WitnessBase::SemidirectElemAbelian { p, k, m } => vec![("p", p), ("k", k as u64), ("m", m)],
            WitnessBase::RedeiF1 { p, q, u } => vec![("p", p), ("q", q), ("u", u as u64)],
            WitnessBase::CaseF2 { p, p_prime, q, rho, sigma } => {
                vec![("p", p), ("p_prime", p_prime), ("q", q), ("rho", rho), ("sigma", sigma)]
            }
            WitnessBase::CaseF3 { p, q, rho } | WitnessBase::CaseF4 { p, q, rho } => {
                vec![("p", p), ("q", q), ("rho", rho)]
            }
        }
    }

    fn case_spec(&self) -> Option<CaseSpec> {
        match *self {
            WitnessBase::CaseF2 { p, p_prime, q, rho, sigma } => Some(CaseSpec::F2 { p, p_prime, q, rho, sigma }),
            WitnessBase::CaseF3 { p, q, rho } => Some(CaseSpec::F3 { p, q, rho }),
            WitnessBase::CaseF4 { p, q, rho } => Some(CaseSpec::F4 { p, q, rho }),
            _ => None,
        }
    }

    /// Checks the arithmetic preconditions of the family.
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Recipe(msg));
        let primes = |ps: &[u64]| ps.iter().all(|&p| is_prime(p));
        match *self {
            WitnessBase::CyclicSquare { q } if !primes(&[q]) => bad(format!("q = {q} is not prime")),
            WitnessBase::CyclicPair { p, q } if !primes(&[p, q]) || (q - 1) % p != 0 => {
                bad(format!("cyclic_pair needs primes with p | q - 1, got p={p} q={q}"))
            }
            WitnessBase::AbelianCube { p } if !primes(&[p]) => bad(format!("p = {p} is not prime")),
            WitnessBase::SemidirectElemAbelian { p, k, m } => {
                let pk = checked_pow(p, k).ok_or(Error::Overflow("p^k"))?;
                if !primes(&[p]) || k == 0 || m < 2 || (pk - 1) % m != 0 {
                    return bad(format!(
                        "semidirect_elem_abelian needs prime p, k >= 1, 1 < m | p^k - 1; got p={p} k={k} m={m}"
                    ));
                }
                Ok(())
            }
            WitnessBase::RedeiF1 { p, q, u } => {
                if !primes(&[p, q]) || p == q || u == 0 || multiplicative_order(q, p)? < 2 {
                    return bad(format!(
                        "redei_f1 needs distinct primes with ord(q mod p) >= 2 and u >= 1; got p={p} q={q} u={u}"
                    ));
                }
                Ok(())
            }
            b @ (WitnessBase::CaseF2 { .. } | WitnessBase::CaseF3 { .. } | WitnessBase::CaseF4 { .. }) => {
                b.case_spec().expect("case kinds have a spec").validate().map_err(|e| Error::Recipe(e.to_string()))
            }
            _ => Ok(()),
        }
    }

    /// Order of the base group; `None` on overflow.
    pub fn order(&self) -> Option<u64> {
        match *self {
            WitnessBase::CyclicSquare { q } => Some(q),
            WitnessBase::CyclicPair { p, q } => p.checked_mul(q),
            WitnessBase::AbelianCube { p } => checked_pow(p, 3),
            WitnessBase::SemidirectElemAbelian { p, k, m } => checked_pow(p, k)?.checked_mul(m),
            WitnessBase::RedeiF1 { p, q, u } => {
                let v = u32::try_from(multiplicative_order(q, p).ok()?).ok()?;
                checked_pow(p, u)?.checked_mul(checked_pow(q, v)?)
            }
            b => b.case_spec().and_then(|s| s.order()),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        self.validate()?;
        match *self {
            WitnessBase::CyclicSquare { q } => make_cyclic(q),
            WitnessBase::CyclicPair { p, q } => make_semidirect_elem_abelian(q, 1, p),
            WitnessBase::AbelianCube { p } => make_heisenberg(p),
            WitnessBase::SemidirectElemAbelian { p, k, m } => make_semidirect_elem_abelian(p, k, m),
            WitnessBase::RedeiF1 { p, q, u } => make_redei(p, q, u),
            b => make_case_group(b.case_spec().expect("remaining kinds are case groups")),
        }
    }

    /// The family realizing a diagnosed violation, with the least admissible
    /// `rho` and `sigma` for the case groups.
    pub fn for_violation(property: Property, violation: Violation) -> Result<Self> {
        let least = |order: u64, m: u64| {
            least_with_order(order, m).ok_or_else(|| Error::Recipe(format!("no unit of order {order} modulo {m}")))
        };
        Ok(match violation {
            Violation::SquareFactor { q } => WitnessBase::CyclicSquare { q },
            Violation::CubeFactor { p } => WitnessBase::AbelianCube { p },
            Violation::DivisibilityPair { p, q, k: 1 } if property == Property::Cyclic => {
                WitnessBase::CyclicPair { p, q }
            }
            Violation::DivisibilityPair { p, q, k } | Violation::TowerPsi { p, q, k } => {
                WitnessBase::SemidirectElemAbelian { p: q, k, m: p }
            }
            Violation::SsF1 { p, q, .. } => WitnessBase::RedeiF1 { p, q, u: 1 },
            Violation::SsF2 { p, p_prime, q } => {
                WitnessBase::CaseF2 { p, p_prime, q, rho: least(p, p_prime)?, sigma: least(p_prime, q)? }
            }
            Violation::SsF3 { p, q } => WitnessBase::CaseF3 { p, q, rho: least(p, q)? },
            Violation::SsF4 { p, q } => WitnessBase::CaseF4 { p, q, rho: least(p * p, q)? },
        })
    }
}

/// A witness `base × C_cofactor`, serialized as a single `key=value` line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WitnessRecipe {
    pub base: WitnessBase,
    pub cofactor: u64,
}

impl WitnessRecipe {
    pub fn new(base: WitnessBase, cofactor: u64) -> Result<Self> {
        let recipe = WitnessRecipe { base, cofactor };
        recipe.validate()?;
        Ok(recipe)
    }

    pub fn validate(&self) -> Result<()> {
        self.base.validate()?;
        if self.cofactor == 0 {
            return Err(Error::Recipe("cofactor must be positive".into()));
        }
        if let WitnessBase::CyclicSquare { q } = self.base {
            if self.cofactor % q != 0 {
                return Err(Error::Recipe(format!("cyclic_square needs {q} | cofactor")));
            }
        }
        self.order().map(|_| ()).ok_or(Error::Overflow("witness order"))
    }

    pub fn base_order(&self) -> Option<u64> {
        self.base.order()
    }

    /// `base_order * cofactor`.
    pub fn order(&self) -> Option<u64> {
        self.base.order()?.checked_mul(self.cofactor)
    }

    /// The recipe completing the violation's factor to order `n`.
    pub fn from_diagnosis(n: u64, diagnosis: &ViolationDiagnosis) -> Result<Self> {
        let base = WitnessBase::for_violation(diagnosis.property, diagnosis.violation)?;
        let base_order = base.order().ok_or(Error::Overflow("witness base order"))?;
        if n % base_order != 0 {
            return Err(Error::Recipe(format!("{} does not divide {n}", base_order)));
        }
        Self::new(base, n / base_order)
    }

    /// The recipe for the first diagnosis of `property` at `n`.
    pub fn for_order(n: u64, property: Property) -> Result<Self> {
        let diagnoses = crate::classify::diagnose(n, property)?;
        let first = diagnoses.first().expect("a false verdict has a diagnosis");
        Self::from_diagnosis(n, first)
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        make_witness(self)
    }
}

/// `base × C_cofactor`, of order exactly `recipe.order()`.
pub fn make_witness(recipe: &WitnessRecipe) -> Result<FiniteGroup> {
    recipe.validate()?;
    let base = recipe.base.build()?;
    let g = if recipe.cofactor == 1 { base } else { base.direct_product(&make_cyclic(recipe.cofactor)?)? };
    debug_assert_eq!(Some(g.order() as u64), recipe.order());
    Ok(g)
}

impl fmt::Display for WitnessRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "kind={}", self.base.kind())?;
        for (name, value) in self.base.parameters() {
            write!(f, " {name}={value}")?;
        }
        write!(f, " cofactor={}", self.cofactor)
    }
}

impl FromStr for WitnessRecipe {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut fields = BTreeMap::new();
        for token in s.split_whitespace() {
            let (key, value) =
                token.split_once('=').ok_or_else(|| Error::Recipe(format!("expected key=value, got {token:?}")))?;
            if fields.insert(key, value).is_some() {
                return Err(Error::Recipe(format!("duplicate key {key:?}")));
            }
        }
        let kind = fields.remove("kind").ok_or_else(|| Error::Recipe("missing kind".into()))?;
        let mut take = |name: &str| -> Result<u64> {
            let raw = fields.remove(name).ok_or_else(|| Error::Recipe(format!("{kind} needs {name}")))?;
            raw.parse().map_err(|_| Error::Recipe(format!("{name} must be a nonnegative integer, got {raw:?}")))
        };
        let small = |x: u64| u32::try_from(x).map_err(|_| Error::Recipe(format!("{x} is too large")));
        let base = match kind {
            "cyclic_square" => WitnessBase::CyclicSquare { q: take("q")? },
            "cyclic_pair" => WitnessBase::CyclicPair { p: take("p")?, q: take("q")? },
            "abelian_cube" => WitnessBase::AbelianCube { p: take("p")? },
            "semidirect_elem_abelian" => {
                WitnessBase::SemidirectElemAbelian { p: take("p")?, k: small(take("k")?)?, m: take("m")? }
            }
            "redei_f1" => WitnessBase::RedeiF1 { p: take("p")?, q: take("q")?, u: small(take("u")?)? },
            "case_f2" => WitnessBase::CaseF2 {
                p: take("p")?,
                p_prime: take("p_prime")?,
                q: take("q")?,
                rho: take("rho")?,
                sigma: take("sigma")?,
            },
            "case_f3" => WitnessBase::CaseF3 { p: take("p")?, q: take("q")?, rho: take("rho")? },
            "case_f4" => WitnessBase::CaseF4 { p: take("p")?, q: take("q")?, rho: take("rho")? },
            other => return Err(Error::Recipe(format!("unknown kind {other:?}"))),
        };
        let cofactor = take("cofactor")?;
        if let Some(extra) = fields.keys().next() {
            return Err(Error::Recipe(format!("unexpected key {extra:?}")));
        }
        WitnessRecipe::new(base, cofactor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{has_property, is_cyclic_group, is_nilpotent_group, is_supersolvable_group, sylow_count};

    #[test]
    fn recipe_lines() {
        let r = WitnessRecipe::for_order(12, Property::Supersolvable).unwrap();
        assert_eq!(r.to_string(), "kind=redei_f1 p=3 q=2 u=1 cofactor=1");
        let r = WitnessRecipe::for_order(294, Property::Supersolvable).unwrap();
        assert_eq!(r.to_string(), "kind=case_f2 p=2 p_prime=3 q=7 rho=2 sigma=2 cofactor=1");
        let r = WitnessRecipe::for_order(200, Property::Supersolvable).unwrap();
        assert_eq!(r.to_string(), "kind=case_f4 p=2 q=5 rho=2 cofactor=1");
        let r = WitnessRecipe::for_order(4, Property::Cyclic).unwrap();
        assert_eq!(r.to_string(), "kind=cyclic_square q=2 cofactor=2");
    }

    #[test]
    fn recipe_round_trip() {
        for n in 1..=300 {
            for property in Property::ALL {
                if let Ok(diagnoses) = crate::classify::diagnose(n, property) {
                    for d in diagnoses {
                        let r = WitnessRecipe::from_diagnosis(n, &d).unwrap();
                        assert_eq!(r.order(), Some(n));
                        assert_eq!(r.to_string().parse::<WitnessRecipe>().unwrap(), r);
                    }
                }
            }
        }
    }

    #[test]
    fn malformed_recipes() {
        for bad in [
            "",
            "kind=nope cofactor=1",
            "kind=redei_f1 p=2 q=3 u=1 cofactor=1",
            "kind=cyclic_square q=2 cofactor=3",
            "kind=case_f3 p=2 q=3 rho=2",
            "kind=case_f3 p=2 q=3 rho=2 cofactor=1 extra=4",
            "kind=cyclic_pair p=3 q=5 cofactor=1",
            "kind=semidirect_elem_abelian p=2 k=2 m=5 cofactor=1",
        ] {
            assert!(bad.parse::<WitnessRecipe>().is_err(), "{bad:?} should be rejected");
        }
        assert!(WitnessRecipe::for_order(15, Property::Cyclic).is_err());
    }

    #[test]
    fn witness_examples() {
        let g = make_witness(&"kind=cyclic_square q=2 cofactor=2".parse().unwrap()).unwrap();
        assert_eq!(g.order(), 4);
        assert!(!is_cyclic_group(&g));
        let g = make_witness(&"kind=semidirect_elem_abelian p=3 k=1 m=2 cofactor=5".parse().unwrap()).unwrap();
        assert_eq!(g.order(), 30);
        assert!(!is_nilpotent_group(&g));
        assert_eq!(sylow_count(&g, 2), 3);
        let g = make_witness(&"kind=redei_f1 p=3 q=2 u=1 cofactor=5".parse().unwrap()).unwrap();
        assert_eq!(g.order(), 60);
        assert!(!is_supersolvable_group(&g).unwrap());
    }

    #[test]
    fn witnesses_fail_their_property_small() {
        for n in 1..=40 {
            for property in Property::ALL {
                if let Ok(r) = WitnessRecipe::for_order(n, property) {
                    let g = r.build().unwrap();
                    assert_eq!(g.order() as u64, n);
                    assert!(!has_property(&g, property).unwrap(), "{r} has {property}");
                }
            }
        }
    }

    #[test]
    fn redei_is_first_order_nonabelian() {
        for (p, q) in [(3, 2), (3, 5)] {
            let g = make_redei(p, q, 1).unwrap();
            assert!(!g.is_abelian());
            // a proper subgroup containing a noncommuting pair would be nonabelian
            for x in g.elements() {
                for y in x + 1..g.order() {
                    if g.mul(x, y) != g.mul(y, x) {
                        assert!(g.subgroup_closure(&[x, y]).is_whole());
                    }
                }
            }
        }
    }
}
