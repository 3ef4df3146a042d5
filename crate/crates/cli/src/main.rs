mod args;
mod cache;
mod output;

use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::Parser;
use pnum_core::analysis::{
    has_ordered_sylow_tower, is_abelian_group, is_cyclic_group, is_nilpotent_group, is_solvable_group,
    is_supersolvable_group, order_primes, sylow_count,
};
use pnum_core::classify::{classify, ClassificationReport};
use pnum_core::crosscheck::{check_witness, run_suite, SuiteConfig};
use pnum_core::{Error, Execution, FiniteGroup, Property, VerificationStatus, WitnessRecipe};

use args::{ClassifyArgs, Cli, Command, GroupCommand, VerifyArgs, WitnessArgs};

/// Largest order accepted by `classify`; trial division stays fast below it.
const MAX_N: u64 = 1_000_000_000_000;
/// Largest `--max` accepted by `verify`.
const SUITE_CEILING: u64 = 10_000;

/// A failed command and its exit code: 1 for a verification failure, 2 for bad input.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }

    pub fn verification(message: impl Into<String>) -> Self {
        Failure { code: 1, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::VerificationFailed { .. } | Error::Construction(_) => Failure::verification(e.to_string()),
            _ => Failure::usage(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let exec = if cli.sequential { Execution::Sequential } else { Execution::default() };
    let result = match cli.command {
        Command::Classify(a) => cmd_classify(a, exec),
        Command::Witness(a) => cmd_witness(a),
        Command::Verify(a) => cmd_verify(a, exec),
        Command::Group(g) => cmd_group(g),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn check_order(n: u64) -> Result<(), Failure> {
    match n {
        0 => Err(Failure::usage("orders start at 1")),
        n if n > MAX_N => Err(Failure::usage(format!("{n} exceeds the supported maximum {MAX_N}"))),
        _ => Ok(()),
    }
}

fn cmd_classify(a: ClassifyArgs, exec: Execution) -> Result<(), Failure> {
    let (start, end) = match (a.n, a.range.as_deref()) {
        (Some(n), _) => (n, n),
        (None, Some(&[lo, hi])) => (lo, hi),
        _ => return Err(Failure::usage("give N or --range A B")),
    };
    check_order(start)?;
    check_order(end)?;
    if end < start {
        return Err(Failure::usage(format!("empty range {start}..={end}")));
    }
    if end - start >= a.max_range {
        return Err(Failure::usage(format!("range of {} orders exceeds --max-range {}", end - start + 1, a.max_range)));
    }
    let reports = match &a.cache {
        Some(path) => classify_cached(path, start, end, exec)?,
        None => pnum_core::classify::classify_range(start, end, exec)?,
    };
    print!("{}", output::render(&reports, a.format));
    Ok(())
}

fn classify_cached(path: &Path, start: u64, end: u64, exec: Execution) -> Result<Vec<ClassificationReport>, Failure> {
    let mut cached = cache::load(path)?;
    let missing: Vec<u64> = (start..=end).filter(|n| !cached.contains_key(n)).collect();
    let fresh: Vec<ClassificationReport> =
        exec.map(0..missing.len() as u64, |i| classify(missing[i as usize])).into_iter().collect::<Result<_, _>>()?;
    cache::append(path, &fresh)?;
    for r in fresh {
        cached.insert(r.n, r);
    }
    Ok(cached.range(start..=end).map(|(_, r)| r.clone()).collect())
}

/// The group-level test's name, as printed in verdict lines.
fn test_name(p: Property) -> &'static str {
    match p {
        Property::Cyclic => "is_cyclic_group",
        Property::Abelian => "is_abelian_group",
        Property::Nilpotent => "is_nilpotent_group",
        Property::Supersolvable => "is_supersolvable_group",
        Property::OrderedSylow => "has_ordered_sylow_tower",
    }
}

fn cmd_witness(a: WitnessArgs) -> Result<(), Failure> {
    check_order(a.n)?;
    let recipe = WitnessRecipe::for_order(a.n, a.property)?;
    println!("{recipe}");
    if !a.build {
        return Ok(());
    }
    if a.n > a.cap {
        return Err(Failure::usage(format!("witness order {} exceeds --cap {}", a.n, a.cap)));
    }
    let record = check_witness(a.n, a.property, recipe, a.cap)?;
    debug_assert_eq!(record.status, VerificationStatus::ConfirmedNegative);
    let g = recipe.build()?;
    print!("{}", g.to_text());
    println!("{}: false", test_name(a.property));
    Ok(())
}

fn cmd_verify(a: VerifyArgs, exec: Execution) -> Result<(), Failure> {
    if a.max_n == 0 || a.max_n > SUITE_CEILING {
        return Err(Failure::usage(format!("--max must be in 1..={SUITE_CEILING}")));
    }
    let config = SuiteConfig {
        max_n: a.max_n,
        properties: Property::ALL.to_vec(),
        witness_cap: a.cap,
        sample_budget: a.budget,
        all_diagnoses: !a.first_only,
        exec,
    };
    let report = run_suite(&config)?;
    if let Some(path) = &a.report {
        fs::write(path, report.to_lines())
            .map_err(|e| Failure::usage(format!("cannot write {}: {e}", path.display())))?;
    }
    println!(
        "verified 1..={}: {} records, {} confirmed_negative, {} sampled_positive, {} skipped_cap",
        a.max_n,
        report.records.len(),
        report.count(VerificationStatus::ConfirmedNegative),
        report.count(VerificationStatus::SampledPositive),
        report.count(VerificationStatus::SkippedCap),
    );
    Ok(())
}

fn read_group(path: &Path) -> Result<Result<FiniteGroup, Error>, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(FiniteGroup::from_text(&text))
}

fn cmd_group(cmd: GroupCommand) -> Result<(), Failure> {
    match cmd {
        GroupCommand::Dump { recipe } => {
            let recipe: WitnessRecipe = recipe.join(" ").parse()?;
            print!("{}", recipe.build()?.to_text());
        }
        GroupCommand::Load { path } => {
            let g = read_group(&path)?.map_err(|e| Failure::verification(e.to_string()))?;
            println!("order: {}", g.order());
            println!("identity: {}", g.identity());
            println!("is_cyclic_group: {}", is_cyclic_group(&g));
            println!("is_abelian_group: {}", is_abelian_group(&g));
            println!("is_nilpotent_group: {}", is_nilpotent_group(&g));
            println!("is_supersolvable_group: {}", is_supersolvable_group(&g)?);
            println!("has_ordered_sylow_tower: {}", has_ordered_sylow_tower(&g));
            println!("is_solvable_group: {}", is_solvable_group(&g));
            println!("center_order: {}", g.center().order());
            println!("derived_order: {}", g.commutator_subgroup().order());
            for p in order_primes(&g) {
                println!("sylow_count({p}): {}", sylow_count(&g, p));
            }
        }
        GroupCommand::Check { path } => match read_group(&path)? {
            Ok(g) => println!("ok: group of order {}", g.order()),
            Err(e) => return Err(Failure::verification(format!("{}: {e}", path.display()))),
        },
    }
    Ok(())
}
