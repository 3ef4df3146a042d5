//! The five arithmetic predicates on `n` and the diagnosis of their failures.
//!
//! A *P number* is a positive integer `n` such that every group of order `n`
//! has property P. Each predicate here reads only the factorization of `n`.
//! When a predicate fails, [`diagnose`] names a divisor of `n` of a shape for
//! which [`crate::constructors`] can build a group lacking P.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::arith::{self, factorize, gcd, phi_of, pow_mod, psi_prime_power_mod, Factorization};
use crate::par::Execution;
use crate::{Error, Result};

/// A group property whose P numbers this crate characterizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Cyclic,
    Abelian,
    Nilpotent,
    Supersolvable,
    OrderedSylow,
}

impl Property {
    /// All properties, strongest first; the verdicts form a chain in this order.
    pub const ALL: [Property; 5] =
        [Property::Cyclic, Property::Abelian, Property::Nilpotent, Property::Supersolvable, Property::OrderedSylow];

    pub fn as_str(self) -> &'static str {
        match self {
            Property::Cyclic => "cyclic",
            Property::Abelian => "abelian",
            Property::Nilpotent => "nilpotent",
            Property::Supersolvable => "supersolvable",
            Property::OrderedSylow => "ordered_sylow",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Property::ALL
            .into_iter()
            .find(|p| p.as_str() == s || (s == "ordered-sylow" && *p == Property::OrderedSylow))
            .ok_or_else(|| Error::InvalidArgument(format!("unknown property {s:?}")))
    }
}

/// The discriminant of a [`Violation`], in diagnosis order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    SquareFactor,
    CubeFactor,
    DivisibilityPair,
    SsF1,
    SsF2,
    SsF3,
    SsF4,
    TowerPsi,
}

impl ViolationKind {
    pub const ALL: [ViolationKind; 8] = [
        ViolationKind::SquareFactor,
        ViolationKind::CubeFactor,
        ViolationKind::DivisibilityPair,
        ViolationKind::SsF1,
        ViolationKind::SsF2,
        ViolationKind::SsF3,
        ViolationKind::SsF4,
        ViolationKind::TowerPsi,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ViolationKind::SquareFactor => "square_factor",
            ViolationKind::CubeFactor => "cube_factor",
            ViolationKind::DivisibilityPair => "divisibility_pair",
            ViolationKind::SsF1 => "ss_f1",
            ViolationKind::SsF2 => "ss_f2",
            ViolationKind::SsF3 => "ss_f3",
            ViolationKind::SsF4 => "ss_f4",
            ViolationKind::TowerPsi => "tower_psi",
        }
    }
}

impl FromStr for ViolationKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ViolationKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown violation kind {s:?}")))
    }
}

/// A divisor of `n` whose shape rules out a property.
///
/// Field order matters: the derived `Ord` sorts by kind, then by ascending
/// parameters, which is the deterministic diagnosis order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Violation {
    /// `q^2 | n`.
    SquareFactor { q: u64 },
    /// `p^3 | n`.
    CubeFactor { p: u64 },
    /// `p | q^k - 1` with `q^k | n`, `p | n`, and `k` minimal.
    DivisibilityPair { p: u64, q: u64, k: u32 },
    /// `p * q^v | n` with `v = ord(q mod p) >= 2`.
    SsF1 { p: u64, q: u64, v: u32 },
    /// `p * p' * q^p | n` with `p | p' - 1` and `p' | q - 1`.
    SsF2 { p: u64, p_prime: u64, q: u64 },
    /// `p^2 * q^p | n` with `p | q - 1` and `p^2 ∤ q - 1`.
    SsF3 { p: u64, q: u64 },
    /// `p^3 * q^p | n` with `p^2 | q - 1`.
    SsF4 { p: u64, q: u64 },
    /// `p * q^k | n` with `p > q`, `p | q^k - 1`, `k` minimal.
    TowerPsi { p: u64, q: u64, k: u32 },
}

impl Violation {
    pub fn kind(&self) -> ViolationKind {
        match self {
            Violation::SquareFactor { .. } => ViolationKind::SquareFactor,
            Violation::CubeFactor { .. } => ViolationKind::CubeFactor,
            Violation::DivisibilityPair { .. } => ViolationKind::DivisibilityPair,
            Violation::SsF1 { .. } => ViolationKind::SsF1,
            Violation::SsF2 { .. } => ViolationKind::SsF2,
            Violation::SsF3 { .. } => ViolationKind::SsF3,
            Violation::SsF4 { .. } => ViolationKind::SsF4,
            Violation::TowerPsi { .. } => ViolationKind::TowerPsi,
        }
    }

    /// Named integer parameters, in a fixed order per kind.
    pub fn parameters(&self) -> Vec<(&'static str, u64)> {
        match *self {
            Violation::SquareFactor { q } => vec![("q", q)],
            Violation::CubeFactor { p } => vec![("p", p)],
            Violation::DivisibilityPair { p, q, k } => vec![("p", p), ("q", q), ("k", k as u64)],
            Violation::SsF1 { p, q, v } => vec![("p", p), ("q", q), ("v", v as u64)],
            Violation::SsF2 { p, p_prime, q } => vec![("p", p), ("p_prime", p_prime), ("q", q)],
            Violation::SsF3 { p, q } | Violation::SsF4 { p, q } => vec![("p", p), ("q", q)],
            Violation::TowerPsi { p, q, k } => vec![("p", p), ("q", q), ("k", k as u64)],
        }
    }

    pub fn from_parts(kind: ViolationKind, params: &BTreeMap<String, u64>) -> Result<Self> {
        let get = |name: &str| {
            params
                .get(name)
                .copied()
                .ok_or_else(|| Error::InvalidArgument(format!("{} needs parameter {name}", kind.as_str())))
        };
        let small = |name: &str| -> Result<u32> {
            u32::try_from(get(name)?).map_err(|_| Error::InvalidArgument(format!("{name} too large")))
        };
        Ok(match kind {
            ViolationKind::SquareFactor => Violation::SquareFactor { q: get("q")? },
            ViolationKind::CubeFactor => Violation::CubeFactor { p: get("p")? },
            ViolationKind::DivisibilityPair => {
                Violation::DivisibilityPair { p: get("p")?, q: get("q")?, k: small("k")? }
            }
            ViolationKind::SsF1 => Violation::SsF1 { p: get("p")?, q: get("q")?, v: small("v")? },
            ViolationKind::SsF2 => Violation::SsF2 { p: get("p")?, p_prime: get("p_prime")?, q: get("q")? },
            ViolationKind::SsF3 => Violation::SsF3 { p: get("p")?, q: get("q")? },
            ViolationKind::SsF4 => Violation::SsF4 { p: get("p")?, q: get("q")? },
            ViolationKind::TowerPsi => Violation::TowerPsi { p: get("p")?, q: get("q")?, k: small("k")? },
        })
    }

    /// The divisor of `n` this violation exhibits.
    pub fn factor(&self) -> u64 {
        match *self {
            Violation::SquareFactor { q } => q * q,
            Violation::CubeFactor { p } => p * p * p,
            Violation::DivisibilityPair { p, q, k } | Violation::TowerPsi { p, q, k } => p * q.pow(k),
            Violation::SsF1 { p, q, v } => p * q.pow(v),
            Violation::SsF2 { p, p_prime, q } => p * p_prime * q.pow(p as u32),
            Violation::SsF3 { p, q } => p * p * q.pow(p as u32),
            Violation::SsF4 { p, q } => p * p * p * q.pow(p as u32),
        }
    }

    /// Checks the defining relations of the kind against `n`.
    pub fn holds_for(&self, n: u64) -> bool {
        let prime = arith::is_prime;
        let shape = match *self {
            Violation::SquareFactor { q } => prime(q),
            Violation::CubeFactor { p } => prime(p),
            Violation::DivisibilityPair { p, q, k } => {
                prime(p) && prime(q) && p != q && k >= 1 && minimal_exponent(q, p) == Some(k)
            }
            Violation::SsF1 { p, q, v } => {
                prime(p) && prime(q) && p != q && v >= 2 && arith::multiplicative_order(q, p).ok() == Some(v as u64)
            }
            Violation::SsF2 { p, p_prime, q } => {
                prime(p) && prime(p_prime) && prime(q) && (p_prime - 1) % p == 0 && (q - 1) % p_prime == 0
            }
            Violation::SsF3 { p, q } => prime(p) && prime(q) && (q - 1) % p == 0 && (q - 1) % (p * p) != 0,
            Violation::SsF4 { p, q } => prime(p) && prime(q) && (q - 1) % (p * p) == 0,
            Violation::TowerPsi { p, q, k } => prime(p) && prime(q) && p > q && minimal_exponent(q, p) == Some(k),
        };
        shape && checked_factor(self).is_some_and(|f| n % f == 0)
    }
}

fn checked_factor(v: &Violation) -> Option<u64> {
    let pw = |b: u64, e: u64| u32::try_from(e).ok().and_then(|e| b.checked_pow(e));
    match *v {
        Violation::SquareFactor { q } => q.checked_mul(q),
        Violation::CubeFactor { p } => pw(p, 3),
        Violation::DivisibilityPair { p, q, k } | Violation::TowerPsi { p, q, k } => pw(q, k as u64)?.checked_mul(p),
        Violation::SsF1 { p, q, v } => pw(q, v as u64)?.checked_mul(p),
        Violation::SsF2 { p, p_prime, q } => pw(q, p)?.checked_mul(p)?.checked_mul(p_prime),
        Violation::SsF3 { p, q } => pw(q, p)?.checked_mul(p.checked_mul(p)?),
        Violation::SsF4 { p, q } => pw(q, p)?.checked_mul(pw(p, 3)?),
    }
}

/// Smallest `k >= 1` with `p | q^k - 1`, if `p` and `q` are coprime.
fn minimal_exponent(q: u64, p: u64) -> Option<u32> {
    arith::multiplicative_order(q, p).ok().and_then(|v| u32::try_from(v).ok())
}

/// One failed predicate together with the divisor that witnesses the failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "DiagnosisRepr", try_from = "DiagnosisRepr")]
pub struct ViolationDiagnosis {
    pub property: Property,
    pub violation: Violation,
}

#[derive(Serialize, Deserialize)]
struct DiagnosisRepr {
    property: Property,
    kind: String,
    parameters: BTreeMap<String, u64>,
}

impl From<ViolationDiagnosis> for DiagnosisRepr {
    fn from(d: ViolationDiagnosis) -> Self {
        DiagnosisRepr {
            property: d.property,
            kind: d.violation.kind().as_str().to_string(),
            parameters: d.violation.parameters().into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
        }
    }
}

impl TryFrom<DiagnosisRepr> for ViolationDiagnosis {
    type Error = Error;

    fn try_from(r: DiagnosisRepr) -> Result<Self> {
        let kind: ViolationKind = r.kind.parse()?;
        Ok(ViolationDiagnosis { property: r.property, violation: Violation::from_parts(kind, &r.parameters)? })
    }
}

impl fmt::Display for ViolationDiagnosis {
    /// `supersolvable:ss_f1(p=3;q=2;v=2)`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}(", self.property, self.violation.kind().as_str())?;
        for (i, (k, v)) in self.violation.parameters().into_iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{k}={v}")?;
        }
        f.write_str(")")
    }
}

/// Per-`n` verdicts for all five properties.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub n: u64,
    pub factorization: Factorization,
    pub cyclic: bool,
    pub abelian: bool,
    pub nilpotent: bool,
    pub supersolvable: bool,
    pub ordered_sylow: bool,
    pub diagnoses: Vec<ViolationDiagnosis>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub abelian_count: Option<u64>,
}

impl ClassificationReport {
    pub fn verdict(&self, property: Property) -> bool {
        match property {
            Property::Cyclic => self.cyclic,
            Property::Abelian => self.abelian,
            Property::Nilpotent => self.nilpotent,
            Property::Supersolvable => self.supersolvable,
            Property::OrderedSylow => self.ordered_sylow,
        }
    }

    /// `cyclic => abelian => nilpotent => supersolvable => ordered_sylow`.
    pub fn chain_holds(&self) -> bool {
        let v: Vec<bool> = Property::ALL.iter().map(|&p| self.verdict(p)).collect();
        v.windows(2).all(|w| !w[0] || w[1])
    }

    pub fn diagnoses_for(&self, property: Property) -> impl Iterator<Item = &ViolationDiagnosis> {
        self.diagnoses.iter().filter(move |d| d.property == property)
    }
}

// ---------------------------------------------------------------------------
// Predicates on a factorization.

/// `gcd(n, phi(n)) = 1`.
pub fn cyclic_criterion(f: &Factorization) -> bool {
    gcd(f.n(), phi_of(f)) == 1
}

/// No `p_i | p_j^k - 1` for `i != j`, `1 <= k <= a_j`.
pub fn has_nilpotent_factorization(f: &Factorization) -> bool {
    let fs = f.factors();
    fs.iter().all(|&(pi, _)| {
        fs.iter().filter(|&&(pj, _)| pj != pi).all(|&(pj, aj)| (1..=aj as u64).all(|k| pow_mod(pj, k, pi) != 1))
    })
}

/// Cube-free with nilpotent factorization.
pub fn abelian_criterion(f: &Factorization) -> bool {
    f.is_cube_free() && has_nilpotent_factorization(f)
}

/// The direct form: every `a_i <= 2` and `gcd(p_i, p_j^(a_j) - 1) = 1` for
/// `i != j`. Kept as a second, independent route to the abelian verdict.
pub fn abelian_criterion_direct(f: &Factorization) -> bool {
    let fs = f.factors();
    fs.iter().all(|&(_, a)| a <= 2)
        && fs
            .iter()
            .all(|&(pi, _)| fs.iter().filter(|&&(pj, _)| pj != pi).all(|&(pj, aj)| pow_mod(pj, aj as u64, pi) != 1))
}

/// `gcd(p_i^(a_i) ... p_r^(a_r), psi(p_i^(a_i))) = 1` for every `i`.
pub fn ordered_sylow_criterion(f: &Factorization) -> bool {
    let fs = f.factors();
    (0..fs.len()).all(|i| {
        let tail: u64 = fs[i..].iter().map(|&(p, a)| p.pow(a)).product();
        let (p, a) = fs[i];
        gcd(tail, psi_prime_power_mod(p, a, tail)) == 1
    })
}

/// The supersolvable-number conditions, read literally.
///
/// 1. For every `i`, the primes of `gcd(n, psi(p_i^(a_i)))` and of
///    `gcd(n, p_i - 1)` coincide.
/// 2. Whenever `p_i <= a_k` for some `i != k`:
///    (a) no prime `p_j | n` has `p_i | p_j - 1` and `p_j | p_k - 1`;
///    (b) `a_i <= 2`, and `a_i = 2` forces `p_i^2 | p_k - 1`.
pub fn supersolvable_criterion(f: &Factorization) -> bool {
    let n = f.n();
    let fs = f.factors();
    let primes_of = |m: u64| -> BTreeSet<u64> { factorize(m).map(|g| g.primes().collect()).unwrap_or_default() };
    for &(p, a) in fs {
        let with_psi = primes_of(gcd(n, psi_prime_power_mod(p, a, n)));
        let with_pm1 = primes_of(gcd(n, p - 1));
        if with_psi != with_pm1 {
            return false;
        }
    }
    for &(pi, ai) in fs {
        for &(pk, ak) in fs {
            if pi == pk || pi > ak as u64 {
                continue;
            }
            if fs.iter().any(|&(pj, _)| (pj - 1) % pi == 0 && (pk - 1) % pj == 0) {
                return false;
            }
            if ai > 2 || (ai == 2 && (pk - 1) % (pi * pi) != 0) {
                return false;
            }
        }
    }
    true
}

pub fn criterion(f: &Factorization, property: Property) -> bool {
    match property {
        Property::Cyclic => cyclic_criterion(f),
        Property::Abelian => abelian_criterion(f),
        Property::Nilpotent => has_nilpotent_factorization(f),
        Property::Supersolvable => supersolvable_criterion(f),
        Property::OrderedSylow => ordered_sylow_criterion(f),
    }
}

// ---------------------------------------------------------------------------
// Predicates on n.

pub fn is_cyclic_number(n: u64) -> Result<bool> {
    Ok(cyclic_criterion(&factorize(n)?))
}

pub fn is_nilpotent_number(n: u64) -> Result<bool> {
    Ok(has_nilpotent_factorization(&factorize(n)?))
}

pub fn is_abelian_number(n: u64) -> Result<bool> {
    Ok(abelian_criterion(&factorize(n)?))
}

pub fn is_ordered_sylow_number(n: u64) -> Result<bool> {
    Ok(ordered_sylow_criterion(&factorize(n)?))
}

pub fn is_supersolvable_number(n: u64) -> Result<bool> {
    Ok(supersolvable_criterion(&factorize(n)?))
}

pub fn is_p_number(n: u64, property: Property) -> Result<bool> {
    Ok(criterion(&factorize(n)?, property))
}

/// Number of groups of order `n` when `n` is an abelian number:
/// the product of `2^(a_i - 1)`.
pub fn abelian_group_count(n: u64) -> Result<u64> {
    let f = factorize(n)?;
    if !abelian_criterion(&f) {
        return Err(Error::InvalidArgument(format!("{n} is not an abelian number")));
    }
    Ok(abelian_count_of(&f))
}

fn abelian_count_of(f: &Factorization) -> u64 {
    f.factors().iter().map(|&(_, a)| 1u64 << (a - 1)).product()
}

// ---------------------------------------------------------------------------
// Diagnosis.

/// Every violation of `property` at `f`, sorted and deduplicated.
/// Empty exactly when the predicate holds.
pub fn violations(f: &Factorization, property: Property) -> Vec<Violation> {
    let fs = f.factors();
    let mut out = Vec::new();
    // (p, q, k): p | q^k - 1 with k minimal and k <= bound(a_q)
    let pairs = |bound: &dyn Fn(u32) -> u32| -> Vec<(u64, u64, u32)> {
        let mut v = Vec::new();
        for &(p, _) in fs {
            for &(q, aq) in fs {
                if p == q {
                    continue;
                }
                if let Some(k) = minimal_exponent(q, p) {
                    if k <= bound(aq) {
                        v.push((p, q, k));
                    }
                }
            }
        }
        v
    };
    match property {
        Property::Cyclic => {
            for &(q, a) in fs {
                if a >= 2 {
                    out.push(Violation::SquareFactor { q });
                }
            }
            for (p, q, k) in pairs(&|_| 1) {
                out.push(Violation::DivisibilityPair { p, q, k });
            }
        }
        Property::Abelian => {
            for &(p, a) in fs {
                if a >= 3 {
                    out.push(Violation::CubeFactor { p });
                }
            }
            for (p, q, k) in pairs(&|a| a.min(2)) {
                out.push(Violation::DivisibilityPair { p, q, k });
            }
        }
        Property::Nilpotent => {
            for (p, q, k) in pairs(&|a| a) {
                out.push(Violation::DivisibilityPair { p, q, k });
            }
        }
        Property::OrderedSylow => {
            for (p, q, k) in pairs(&|a| a) {
                if p > q {
                    out.push(Violation::TowerPsi { p, q, k });
                }
            }
        }
        Property::Supersolvable => {
            for (p, q, v) in pairs(&|a| a) {
                if v >= 2 {
                    out.push(Violation::SsF1 { p, q, v });
                }
            }
            for &(p, ap) in fs {
                for &(q, aq) in fs {
                    if p == q || p > aq as u64 {
                        continue;
                    }
                    for &(r, _) in fs {
                        if (r - 1) % p == 0 && (q - 1) % r == 0 {
                            out.push(Violation::SsF2 { p, p_prime: r, q });
                        }
                    }
                    // Without p | q - 1 an ss_f1 factor is already present.
                    if (q - 1) % p != 0 {
                        continue;
                    }
                    let p2_divides = (q - 1) % (p * p) == 0;
                    if ap >= 3 && p2_divides {
                        out.push(Violation::SsF4 { p, q });
                    } else if ap >= 2 && !p2_divides {
                        out.push(Violation::SsF3 { p, q });
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out
}

/// Structured reasons why `property` fails at `n`; errors when it holds.
pub fn diagnose(n: u64, property: Property) -> Result<Vec<ViolationDiagnosis>> {
    let f = factorize(n)?;
    if criterion(&f, property) {
        return Err(Error::PredicateHolds { n, property });
    }
    Ok(violations(&f, property).into_iter().map(|violation| ViolationDiagnosis { property, violation }).collect())
}

/// All five verdicts for `n`, with a diagnosis list for every false verdict.
pub fn classify(n: u64) -> Result<ClassificationReport> {
    let f = factorize(n)?;
    let mut diagnoses = Vec::new();
    let mut verdicts = [false; 5];
    for (slot, property) in verdicts.iter_mut().zip(Property::ALL) {
        *slot = criterion(&f, property);
        if !*slot {
            diagnoses.extend(
                violations(&f, property).into_iter().map(|violation| ViolationDiagnosis { property, violation }),
            );
        }
    }
    let abelian_count = verdicts[1].then(|| abelian_count_of(&f));
    Ok(ClassificationReport {
        n,
        factorization: f,
        cyclic: verdicts[0],
        abelian: verdicts[1],
        nilpotent: verdicts[2],
        supersolvable: verdicts[3],
        ordered_sylow: verdicts[4],
        diagnoses,
        abelian_count,
    })
}

/// Classifies every `n` in `start..=end`, ordered by `n`.
pub fn classify_range(start: u64, end: u64, exec: Execution) -> Result<Vec<ClassificationReport>> {
    if start == 0 {
        return Err(Error::ZeroInput);
    }
    if end < start {
        return Ok(Vec::new());
    }
    let end_excl = end.checked_add(1).ok_or(Error::Overflow("range bound"))?;
    exec.map(start..end_excl, classify).into_iter().collect()
}
