//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Runs without the libtest harness so every line prints even when an
//! earlier criterion fails.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use pnum_core::analysis::{
    burnside_complement, hall_subgroup, has_ordered_sylow_tower, has_property, is_nilpotent_group, is_solvable_group,
    is_supersolvable_group, nilpotent_by_sylow_product, nilpotent_by_upper_central_series, order_primes,
    random_representatives, sylow_count, sylow_subgroup, transfer, transfer_with_representatives, Complement,
};
use pnum_core::classify::{abelian_group_count, classify, classify_range, diagnose};
use pnum_core::constructors::make_heisenberg;
use pnum_core::{Execution, FiniteGroup, Property, WitnessRecipe};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

const RANGE: u64 = 100_000;
const WITNESS_MAX: u64 = 300;

fn s3() -> FiniteGroup {
    FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]]).unwrap()
}

fn a4() -> FiniteGroup {
    FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![0, 2, 3, 1]]).unwrap()
}

fn a5() -> FiniteGroup {
    FiniteGroup::from_permutations(&[vec![1, 2, 3, 4, 0], vec![1, 2, 0, 3, 4]]).unwrap()
}

/// Whether some `d >= 2` has `d^k | n`, by trial division.
fn has_power_divisor(n: u64, k: u32) -> bool {
    (2..).take_while(|d: &u64| d.pow(k) <= n).any(|d| n % d.pow(k) == 0)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let reports = classify_range(1, RANGE, Execution::default()).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let bad: Vec<u64> = reports.iter().filter(|r| !r.chain_holds()).map(|r| r.n).collect();
    ensure(bad.is_empty(), || format!("chain fails at {:?}", &bad[..bad.len().min(5)]))?;
    ensure(elapsed < Duration::from_secs(10), || format!("took {elapsed:.2?}"))?;
    Ok(format!("{} reports, 0 violations, {elapsed:.2?}", reports.len()))
}

fn criterion_2() -> Outcome {
    let reports = classify_range(1, RANGE, Execution::default()).map_err(|e| e.to_string())?;
    for r in &reports {
        let square_free = !has_power_divisor(r.n, 2);
        let cube_free = !has_power_divisor(r.n, 3);
        ensure(r.abelian == (cube_free && r.nilpotent), || format!("abelian identity fails at {}", r.n))?;
        ensure(r.cyclic == (square_free && r.nilpotent), || format!("cyclic identity fails at {}", r.n))?;
    }
    Ok(format!("both identities exact on 1..={RANGE}"))
}

/// Every witness built for criterion 3, keyed by recipe.
struct Constructed {
    groups: BTreeMap<WitnessRecipe, FiniteGroup>,
}

impl Constructed {
    /// Each witness with its recipe line as a name.
    fn all(&self) -> Vec<(String, &FiniteGroup)> {
        self.groups.iter().map(|(r, g)| (r.to_string(), g)).collect()
    }
}

fn named_groups() -> Vec<(String, FiniteGroup)> {
    vec![
        ("S3".into(), s3()),
        ("A4".into(), a4()),
        ("A5".into(), a5()),
        ("Heisenberg(2)".into(), make_heisenberg(2).unwrap()),
        ("Heisenberg(3)".into(), make_heisenberg(3).unwrap()),
    ]
}

fn criterion_3(out: &mut Constructed) -> Outcome {
    let start = Instant::now();
    let mut checked = 0usize;
    let mut families: BTreeSet<(u64, &'static str)> = BTreeSet::new();
    for n in 1..=WITNESS_MAX {
        let report = classify(n).map_err(|e| e.to_string())?;
        for property in Property::ALL {
            if report.verdict(property) {
                continue;
            }
            for d in diagnose(n, property).map_err(|e| e.to_string())? {
                let recipe = WitnessRecipe::from_diagnosis(n, &d).map_err(|e| format!("{n} {d}: {e}"))?;
                if !recipe.order().is_some_and(|o| o <= WITNESS_MAX) {
                    continue;
                }
                let g = match out.groups.entry(recipe) {
                    Entry::Occupied(e) => e.into_mut(),
                    Entry::Vacant(e) => e.insert(recipe.build().map_err(|e| format!("{recipe}: {e}"))?),
                };
                ensure(g.order() as u64 == n, || format!("{recipe} has order {} at n = {n}", g.order()))?;
                let holds = has_property(g, property).map_err(|e| e.to_string())?;
                ensure(!holds, || format!("{recipe} is {property} at n = {n}"))?;
                families.insert((n, recipe.base.kind()));
                checked += 1;
            }
        }
    }
    for required in [(12, "redei_f1"), (294, "case_f2"), (36, "case_f3"), (200, "case_f4")] {
        ensure(families.contains(&required), || format!("no {} witness at {}", required.1, required.0))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || format!("took {elapsed:.2?}"))?;
    Ok(format!("{checked} witness checks, {} distinct groups, {elapsed:.2?}", out.groups.len()))
}

fn sylow_invariants(name: &str, g: &FiniteGroup) -> Result<(), String> {
    for p in order_primes(g) {
        let sylow = sylow_subgroup(g, p);
        let n_p = sylow_count(g, p);
        ensure(n_p as u64 % p == 1, || format!("{name}: n_{p} = {n_p}"))?;
        let index = g.normalizer(&sylow).index();
        ensure(n_p == index, || format!("{name}: n_{p} = {n_p} but |G:N(P)| = {index}"))?;
        ensure((n_p == 1) == g.is_normal(&sylow), || format!("{name}: n_{p} = 1 disagrees with normality"))?;
    }
    Ok(())
}

fn criterion_4(c: &Constructed) -> Outcome {
    let named = named_groups();
    let mut count = 0;
    for (name, g) in c.all().into_iter().chain(named.iter().map(|(n, g)| (n.clone(), g))) {
        sylow_invariants(&name, g)?;
        count += 1;
    }
    Ok(format!("{count} groups"))
}

fn criterion_5(c: &Constructed) -> Outcome {
    let named = named_groups();
    let mut count = 0;
    for (name, g) in c.all().into_iter().chain(named.iter().map(|(n, g)| (n.clone(), g))) {
        let routes = [is_nilpotent_group(g), nilpotent_by_upper_central_series(g), nilpotent_by_sylow_product(g)];
        ensure(routes.iter().all(|&r| r == routes[0]), || format!("{name}: routes disagree {routes:?}"))?;
        count += 1;
    }
    Ok(format!("three routes agree on {count} groups"))
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7a5f);
    let groups = named_groups().into_iter().filter(|(n, _)| n != "A5");
    let mut maps = 0;
    for (name, g) in groups {
        let derived = g.commutator_subgroup();
        for p in order_primes(&g) {
            let sylow = sylow_subgroup(&g, p);
            let t = transfer(&g, &sylow).map_err(|e| e.to_string())?;
            ensure(t.is_homomorphism(&g), || format!("{name}, p = {p}: not a homomorphism"))?;
            for _ in 0..10 {
                let reps = random_representatives(&g, &sylow, &mut rng);
                let other = transfer_with_representatives(&g, &sylow, &reps).map_err(|e| e.to_string())?;
                ensure(other == t, || format!("{name}, p = {p}: depends on representatives {reps:?}"))?;
            }
            let expected = sylow.order() / sylow.intersection(&derived).order();
            ensure(t.image_order() == expected, || {
                format!("{name}, p = {p}: image order {} != {expected}", t.image_order())
            })?;
            maps += 1;
        }
    }
    let g = a4();
    let p3 = sylow_subgroup(&g, 3);
    match burnside_complement(&g, &p3).map_err(|e| e.to_string())? {
        Complement::Found(k) => {
            let klein = k.order() == 4 && k.members().iter().all(|&x| g.element_order(x) <= 2);
            ensure(klein && k.index() == 3, || format!("A4 complement has order {}", k.order()))?;
        }
        Complement::NotApplicable => return Err("A4 Sylow-3 complement not applicable".into()),
    }
    Ok(format!("{maps} transfers, A4 complement is V4 of index 3"))
}

fn subsets(primes: &[u64]) -> impl Iterator<Item = Vec<u64>> + '_ {
    (1..1u32 << primes.len())
        .map(move |mask| primes.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect())
}

fn criterion_7(c: &Constructed) -> Outcome {
    let g = a5();
    let found = |pi: &[u64]| hall_subgroup(&g, pi).map_err(|e| e.to_string());
    let h = found(&[2, 3])?.ok_or("A5 has no Hall {2,3}-subgroup")?;
    ensure(h.order() == 12, || format!("A5 Hall {{2,3}} has order {}", h.order()))?;
    ensure(found(&[2, 5])?.is_none(), || "A5 Hall {2,5} found".into())?;
    ensure(found(&[3, 5])?.is_none(), || "A5 Hall {3,5} found".into())?;

    let named = named_groups();
    let mut searches = 0;
    for (name, g) in c.all().into_iter().chain(named.iter().map(|(n, g)| (n.clone(), g))) {
        if g.order() > 60 || !is_solvable_group(g) {
            continue;
        }
        let primes = order_primes(g);
        for pi in subsets(&primes) {
            let hall = hall_subgroup(g, &pi).map_err(|e| e.to_string())?;
            ensure(hall.is_some(), || format!("{name}: no Hall {pi:?}-subgroup"))?;
            searches += 1;
        }
    }
    Ok(format!("A5 cases hold, {searches} solvable searches succeed"))
}

/// Multisets of prime-power cyclic factors with product `n`, counted by
/// enumerating nondecreasing sequences of prime-power divisors.
fn cyclic_factor_multisets(n: u64) -> u64 {
    fn is_prime_power(m: u64) -> bool {
        let p = (2..=m).find(|d| m % d == 0).unwrap();
        let mut m = m;
        while m % p == 0 {
            m /= p;
        }
        m == 1
    }
    fn go(rest: u64, least: u64, factors: &[u64]) -> u64 {
        if rest == 1 {
            return 1;
        }
        factors.iter().filter(|&&d| d >= least && rest % d == 0).map(|&d| go(rest / d, d, factors)).sum()
    }
    let factors: Vec<u64> = (2..=n).filter(|&d| n % d == 0 && is_prime_power(d)).collect();
    go(n, 2, &factors)
}

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for n in 1..=2000 {
        let report = classify(n).map_err(|e| e.to_string())?;
        if !report.abelian {
            continue;
        }
        let count = abelian_group_count(n).map_err(|e| e.to_string())?;
        let oracle = cyclic_factor_multisets(n);
        ensure(count == oracle, || format!("n = {n}: formula {count}, enumeration {oracle}"))?;
        checked += 1;
    }
    Ok(format!("{checked} abelian numbers match"))
}

fn criterion_9(c: &Constructed) -> Outcome {
    let named = named_groups();
    let mut supersolvable = 0;
    for (name, g) in c.all().into_iter().chain(named.iter().map(|(n, g)| (n.clone(), g))) {
        if is_supersolvable_group(g).map_err(|e| e.to_string())? {
            ensure(has_ordered_sylow_tower(g), || format!("{name}: supersolvable without a tower"))?;
            supersolvable += 1;
        }
    }
    let g = a4();
    let a4_ss = is_supersolvable_group(&g).map_err(|e| e.to_string())?;
    ensure(!a4_ss && !has_ordered_sylow_tower(&g), || "A4 passes one of the tests".into())?;
    Ok(format!("{supersolvable} supersolvable groups have towers, A4 fails both"))
}

fn main() -> ExitCode {
    let mut constructed = Constructed { groups: BTreeMap::new() };
    let mut results: Vec<Outcome> = vec![criterion_1(), criterion_2()];
    let c3 = criterion_3(&mut constructed);
    results.push(c3);
    results.push(criterion_4(&constructed));
    results.push(criterion_5(&constructed));
    results.push(criterion_6());
    results.push(criterion_7(&constructed));
    results.push(criterion_8());
    results.push(criterion_9(&constructed));

    let mut failed = 0;
    for (i, r) in results.iter().enumerate() {
        match r {
            Ok(detail) => println!("criterion {}: PASS ({detail})", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL ({detail})", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
