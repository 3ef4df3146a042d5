//! Checks every arithmetic verdict against concrete groups.
//!
//! A false verdict is confirmed by building the diagnosed witness and running
//! the group-level test on it. A true verdict is sampled against a fixed
//! battery of groups of order `n`; the battery is not exhaustive.

use std::fmt;

use crate::analysis::{has_property, is_solvable_group, nilpotent_by_sylow_product, nilpotent_by_upper_central_series};
use crate::arith::{checked_pow, divisors, least_with_order, Factorization};
use crate::classify::{classify_range, diagnose, is_p_number, ClassificationReport, Property};
use crate::constructors::{make_cyclic, WitnessBase, WitnessRecipe};
use crate::kernel::FiniteGroup;
use crate::par::Execution;
use crate::{Error, Result};

/// Default bound on the order of any group the suite builds.
pub const DEFAULT_WITNESS_CAP: u64 = 300;
/// Default number of groups sampled per positive verdict.
pub const DEFAULT_SAMPLE_BUDGET: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerificationStatus {
    ConfirmedNegative,
    SampledPositive,
    SkippedCap,
}

impl VerificationStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            VerificationStatus::ConfirmedNegative => "confirmed_negative",
            VerificationStatus::SampledPositive => "sampled_positive",
            VerificationStatus::SkippedCap => "skipped_cap",
        }
    }
}

impl fmt::Display for VerificationStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationRecord {
    pub n: u64,
    pub property: Property,
    pub predicate_verdict: bool,
    pub witness_built: Option<WitnessRecipe>,
    /// The group-level verdict on the witness (negatives only).
    pub group_verdict: Option<bool>,
    /// Number of battery groups checked (positives only).
    pub samples: usize,
    pub status: VerificationStatus,
}

impl fmt::Display for VerificationRecord {
    /// `n<TAB>property<TAB>status<TAB>recipe`, with `-` for no recipe.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}\t{}\t{}\t", self.n, self.property, self.status)?;
        match &self.witness_built {
            Some(r) => write!(f, "{r}"),
            None => f.write_str("-"),
        }
    }
}

fn failure(n: u64, property: Property, recipe: impl fmt::Display, detail: impl Into<String>) -> Error {
    Error::VerificationFailed { n, property, recipe: recipe.to_string(), detail: detail.into() }
}

/// Builds `recipe` and confirms it is a group of order `n` without `property`.
pub fn check_witness(n: u64, property: Property, recipe: WitnessRecipe, cap: u64) -> Result<VerificationRecord> {
    let mut record = VerificationRecord {
        n,
        property,
        predicate_verdict: false,
        witness_built: Some(recipe),
        group_verdict: None,
        samples: 0,
        status: VerificationStatus::SkippedCap,
    };
    if n > cap {
        return Ok(record);
    }
    let g = recipe.build()?;
    witness_checks(n, property, &recipe, &g)?;
    record.group_verdict = Some(false);
    record.status = VerificationStatus::ConfirmedNegative;
    Ok(record)
}

/// The order, the property failure, and the side conditions every witness
/// for `property` must meet.
fn witness_checks(n: u64, property: Property, recipe: &WitnessRecipe, g: &FiniteGroup) -> Result<()> {
    if g.order() as u64 != n {
        return Err(failure(n, property, recipe, format!("witness has order {}", g.order())));
    }
    if has_property(g, property)? {
        return Err(failure(n, property, recipe, "witness has the property"));
    }
    match property {
        Property::Nilpotent if nilpotent_by_upper_central_series(g) || nilpotent_by_sylow_product(g) => {
            Err(failure(n, property, recipe, "nilpotency criteria disagree on the witness"))
        }
        Property::Supersolvable if !is_solvable_group(g) => {
            Err(failure(n, property, recipe, "supersolvable witness is not solvable"))
        }
        _ => Ok(()),
    }
}

/// Confirms the first diagnosed witness of a false verdict.
pub fn verify_negative(n: u64, property: Property, cap: u64) -> Result<VerificationRecord> {
    let recipe = WitnessRecipe::for_order(n, property)?;
    check_witness(n, property, recipe, cap)
}

/// Confirms a witness for every diagnosis of a false verdict.
pub fn verify_negative_all(n: u64, property: Property, cap: u64) -> Result<Vec<VerificationRecord>> {
    let mut recipes: Vec<WitnessRecipe> =
        diagnose(n, property)?.iter().map(|d| WitnessRecipe::from_diagnosis(n, d)).collect::<Result<_>>()?;
    recipes.dedup();
    recipes.into_iter().map(|r| check_witness(n, property, r, cap)).collect()
}

/// A group in the positive-direction battery.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sample {
    Cyclic(u64),
    /// `C_d × C_e`.
    CyclicProduct(u64, u64),
    Recipe(WitnessRecipe),
}

impl Sample {
    pub fn build(&self) -> Result<FiniteGroup> {
        match *self {
            Sample::Cyclic(n) => make_cyclic(n),
            Sample::CyclicProduct(d, e) => make_cyclic(d)?.direct_product(&make_cyclic(e)?),
            Sample::Recipe(r) => r.build(),
        }
    }
}

impl fmt::Display for Sample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sample::Cyclic(n) => write!(f, "C{n}"),
            Sample::CyclicProduct(d, e) => write!(f, "C{d} x C{e}"),
            Sample::Recipe(r) => write!(f, "{r}"),
        }
    }
}

/// Every family base whose order divides `n` (case groups use the least
/// admissible parameters).
fn bases_dividing(f: &Factorization) -> Vec<WitnessBase> {
    let n = f.n();
    let primes: Vec<u64> = f.primes().collect();
    let divides = |b: &WitnessBase| b.order().is_some_and(|o| n % o == 0);
    let mut out = Vec::new();
    for &p in &primes {
        out.push(WitnessBase::AbelianCube { p });
        for k in 1..=f.exponent(p) {
            let Some(pk) = checked_pow(p, k) else { break };
            for m in divisors(pk - 1).unwrap_or_default().into_iter().filter(|&m| m > 1) {
                out.push(WitnessBase::SemidirectElemAbelian { p, k, m });
            }
        }
        for &q in &primes {
            if p == q {
                continue;
            }
            out.push(WitnessBase::CyclicPair { p, q });
            for u in 1..=f.exponent(p) {
                out.push(WitnessBase::RedeiF1 { p, q, u });
            }
            if let Some(rho) = least_with_order(p, q) {
                out.push(WitnessBase::CaseF3 { p, q, rho });
            }
            if let Some(rho) = least_with_order(p * p, q) {
                out.push(WitnessBase::CaseF4 { p, q, rho });
            }
            for &r in &primes {
                if let (Some(rho), Some(sigma)) = (least_with_order(p, r), least_with_order(r, q)) {
                    out.push(WitnessBase::CaseF2 { p, p_prime: r, q, rho, sigma });
                }
            }
        }
    }
    out.retain(|b| b.validate().is_ok() && divides(b));
    out
}

/// Deterministic groups of order `n`, at most `budget` of them.
pub fn battery(n: u64, budget: usize) -> Result<Vec<Sample>> {
    let f = crate::arith::factorize(n)?;
    let mut out = vec![Sample::Cyclic(n)];
    for d in divisors(n)? {
        if d > 1 && d * d <= n {
            out.push(Sample::CyclicProduct(d, n / d));
        }
    }
    for base in bases_dividing(&f) {
        let order = base.order().expect("filtered to orders dividing n");
        if let Ok(r) = WitnessRecipe::new(base, n / order) {
            out.push(Sample::Recipe(r));
        }
    }
    out.truncate(budget);
    Ok(out)
}

/// Checks a true verdict against the battery; every sample must have the property.
pub fn verify_positive(n: u64, property: Property, budget: usize, cap: u64) -> Result<VerificationRecord> {
    if !is_p_number(n, property)? {
        return Err(Error::InvalidArgument(format!("{n} is not a {property} number")));
    }
    let mut record = VerificationRecord {
        n,
        property,
        predicate_verdict: true,
        witness_built: None,
        group_verdict: None,
        samples: 0,
        status: VerificationStatus::SkippedCap,
    };
    if n > cap {
        return Ok(record);
    }
    for sample in battery(n, budget)? {
        let g = sample.build()?;
        if g.order() as u64 != n {
            return Err(failure(n, property, sample, format!("sample has order {}", g.order())));
        }
        if !has_property(&g, property)? {
            return Err(failure(n, property, sample, "sample lacks the property"));
        }
        record.samples += 1;
    }
    record.status = VerificationStatus::SampledPositive;
    Ok(record)
}

/// Checks the implication chain and the two factorization identities on one report.
pub fn check_report_invariants(report: &ClassificationReport) -> Result<()> {
    let n = report.n;
    let fail = |property, detail: &str| Err(failure(n, property, "-", detail));
    if !report.chain_holds() {
        return fail(Property::Cyclic, "implication chain broken");
    }
    let f = &report.factorization;
    if report.abelian != (f.is_cube_free() && report.nilpotent) {
        return fail(Property::Abelian, "abelian differs from cube-free and nilpotent");
    }
    if report.cyclic != (f.is_square_free() && report.nilpotent) {
        return fail(Property::Cyclic, "cyclic differs from square-free and nilpotent");
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_n: u64,
    pub properties: Vec<Property>,
    /// Groups above this order are recorded as skipped, not built.
    pub witness_cap: u64,
    pub sample_budget: usize,
    /// Build a witness for every diagnosis rather than only the first.
    pub all_diagnoses: bool,
    pub exec: Execution,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: DEFAULT_WITNESS_CAP,
            properties: Property::ALL.to_vec(),
            witness_cap: DEFAULT_WITNESS_CAP,
            sample_budget: DEFAULT_SAMPLE_BUDGET,
            all_diagnoses: true,
            exec: Execution::default(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    /// Ordered by `n`, then by property.
    pub records: Vec<VerificationRecord>,
}

impl SuiteReport {
    pub fn count(&self, status: VerificationStatus) -> usize {
        self.records.iter().filter(|r| r.status == status).count()
    }

    /// One line per record.
    pub fn to_lines(&self) -> String {
        self.records.iter().map(|r| format!("{r}\n")).collect()
    }
}

fn verify_one(report: &ClassificationReport, config: &SuiteConfig) -> Result<Vec<VerificationRecord>> {
    check_report_invariants(report)?;
    let mut out = Vec::new();
    for &property in &config.properties {
        let n = report.n;
        if report.verdict(property) {
            out.push(verify_positive(n, property, config.sample_budget, config.witness_cap)?);
        } else if config.all_diagnoses {
            out.extend(verify_negative_all(n, property, config.witness_cap)?);
        } else {
            out.push(verify_negative(n, property, config.witness_cap)?);
        }
    }
    Ok(out)
}

/// Runs every check over `1..=max_n`. The first failure (lowest `n`) aborts.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport> {
    if config.max_n == 0 {
        return Err(Error::ZeroInput);
    }
    let reports = classify_range(1, config.max_n, config.exec)?;
    let per_n = config.exec.map(0..reports.len() as u64, |i| verify_one(&reports[i as usize], config));
    let mut records = Vec::new();
    for result in per_n {
        records.extend(result?);
    }
    Ok(SuiteReport { records })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn negative_examples() {
        let r = verify_negative(12, Property::Supersolvable, 300).unwrap();
        assert_eq!(r.status, VerificationStatus::ConfirmedNegative);
        assert_eq!(r.witness_built.unwrap().to_string(), "kind=redei_f1 p=3 q=2 u=1 cofactor=1");
        assert_eq!(r.group_verdict, Some(false));
        let r = verify_negative(6, Property::Nilpotent, 300).unwrap();
        assert_eq!(r.status, VerificationStatus::ConfirmedNegative);
        let r = verify_negative(4, Property::Cyclic, 300).unwrap();
        assert_eq!(r.to_string(), "4\tcyclic\tconfirmed_negative\tkind=cyclic_square q=2 cofactor=2");
        assert!(verify_negative(15, Property::Cyclic, 300).is_err());
    }

    #[test]
    fn cap_is_recorded() {
        let r = verify_negative(600, Property::Cyclic, 300).unwrap();
        assert_eq!(r.status, VerificationStatus::SkippedCap);
        assert!(r.group_verdict.is_none());
    }

    #[test]
    fn all_diagnoses_cover_f3_at_36() {
        let records = verify_negative_all(36, Property::Supersolvable, 300).unwrap();
        assert!(records.iter().any(|r| r.witness_built.unwrap().base.kind() == "case_f3"));
        assert!(records.iter().all(|r| r.status == VerificationStatus::ConfirmedNegative));
    }

    #[test]
    fn positive_examples() {
        let b = battery(15, 8).unwrap();
        assert_eq!(b, vec![Sample::Cyclic(15), Sample::CyclicProduct(3, 5)]);
        assert_eq!(verify_positive(15, Property::Cyclic, 8, 300).unwrap().samples, 2);
        let b = battery(45, 8).unwrap();
        assert!(b.contains(&Sample::CyclicProduct(3, 15)));
        assert_eq!(verify_positive(45, Property::Abelian, 8, 300).unwrap().status, VerificationStatus::SampledPositive);
        let r = verify_positive(30, Property::OrderedSylow, 16, 300).unwrap();
        assert!(r.samples > 2, "order 30 has buildable semidirect products");
        assert!(verify_positive(12, Property::Supersolvable, 8, 300).is_err());
    }

    #[test]
    fn suite_small() {
        let report = run_suite(&SuiteConfig { max_n: 1, ..SuiteConfig::default() }).unwrap();
        assert!(report.records.iter().all(|r| r.status == VerificationStatus::SampledPositive));
        let report = run_suite(&SuiteConfig { max_n: 60, ..SuiteConfig::default() }).unwrap();
        assert_eq!(report.count(VerificationStatus::SkippedCap), 0);
        assert!(report.count(VerificationStatus::ConfirmedNegative) > 0);
        assert!(report.to_lines().lines().count() >= 300);
    }

    #[test]
    fn sequential_and_parallel_suites_agree() {
        let base = SuiteConfig { max_n: 40, ..SuiteConfig::default() };
        let seq = run_suite(&SuiteConfig { exec: Execution::Sequential, ..base.clone() }).unwrap();
        let par = run_suite(&SuiteConfig { exec: Execution::Parallel, ..base }).unwrap();
        assert_eq!(seq.records, par.records);
    }
}
