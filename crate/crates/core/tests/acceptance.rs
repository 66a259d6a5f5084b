//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use partseq::catalog::{identity_suite, CatalogEntry, Identity};
use partseq::exact::Rational;
use partseq::partitions::{
    diophantine, diophantine_to_partition, partition_to_diophantine, partitions,
    DEFAULT_COMPOSITION_CAP,
};
use partseq::recurrence::{
    b_recursion, cauchy_product, evaluate, random_sequence, series_reciprocal, verify_methods,
    CoefficientSequence, MethodId, TruncatedSeries,
};

const CAP: usize = DEFAULT_COMPOSITION_CAP;

/// Independent partition counter: non-increasing lists with parts <= `max`.
fn brute_partition_count(n: usize, max: usize) -> u64 {
    if n == 0 {
        return 1;
    }
    (1..=max.min(n)).map(|first| brute_partition_count(n - first, first)).sum()
}

fn bin(args: &[&str]) -> (i32, String, Duration) {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_partseq"))
        .args(args)
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap(), elapsed)
}

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg.into()) }
}

fn criterion_1() -> Check {
    let (code, out, t) =
        bin(&["compute", "--seq", "bernoulli", "--from", "4", "--to", "4", "--method", "partition"]);
    ensure(code == 0, format!("exit {code}"))?;
    ensure(out == "4  -1/720  -1/30  partition\n", format!("output {out:?}"))?;
    ensure(t < Duration::from_secs(1), format!("took {t:?}"))?;
    Ok(format!("B_4 = -1/30 in {t:?}"))
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let (code, out, _) = bin(&["compute", "--seq", "even_fibonacci", "--from", "4", "--to", "4"]);
    ensure(code == 0 && out == "4  21  21  partition\n", format!("default method: {out:?}"))?;
    for m in MethodId::ALL {
        let (code, out, _) = bin(&[
            "compute", "--seq", "even_fibonacci", "--from", "4", "--to", "4", "--method", m.name(), "--format",
            "json",
        ]);
        ensure(code == 0, format!("{m}: exit {code}"))?;
        let v: serde_json::Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
        let row = &v["rows"][0];
        ensure(row["named"] == "21" && row["b"] == "21", format!("{m}: {row}"))?;
        if m == MethodId::Composition {
            ensure(row["terms"] == "8", format!("composition terms {}", row["terms"]))?;
        }
    }
    let t = start.elapsed() / 7;
    ensure(t < Duration::from_secs(1), format!("mean run {t:?}"))?;
    Ok(format!("F_8 = 21 by all 6 methods, composition terms 8, mean run {t:?}"))
}

fn criterion_3() -> Check {
    let (code, out, _) = bin(&["enum", "--n", "4", "--kind", "partitions"]);
    ensure(code == 0, format!("exit {code}"))?;
    let want = "[4]\n[3,1]\n[2,2]\n[2,1,1]\n[1,1,1,1]\ncount 5  sum_mu 8\n";
    ensure(out == want, format!("output {out:?}"))?;
    Ok("P(4) listed in order, sum of mu = 8".into())
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut sequences: Vec<CoefficientSequence> = CatalogEntry::ALL.iter().map(|e| e.sequence()).collect();
    sequences.extend((1..=20).map(|seed| random_sequence(seed, 20)));
    let mut checked = 0;
    for a in &sequences {
        let report = verify_methods(a, 14, &MethodId::ALL[1..], CAP).map_err(|e| e.to_string())?;
        if let Some(row) = report.failures().next() {
            return Err(format!("{} n={} {}: {:?}", a.name(), row.n, row.method, row.outcome));
        }
        ensure(
            report.rows.iter().all(|r| r.outcome == partseq::recurrence::Outcome::Pass),
            format!("{}: unexpected skip", a.name()),
        )?;
        checked += report.rows.len();
        for n in 15..=20 {
            let want = b_recursion(a, n).map_err(|e| e.to_string())?;
            let got = evaluate(a, n, MethodId::Composition, CAP).map_err(|e| e.to_string())?;
            ensure(got.value == want, format!("{} n={n} composition", a.name()))?;
            ensure(got.terms == 1 << (n - 1), format!("{} n={n} term count", a.name()))?;
            checked += 1;
        }
    }
    let t = start.elapsed();
    ensure(t < Duration::from_secs(60), format!("took {t:?}"))?;
    Ok(format!("{} sequences, {checked} exact comparisons in {t:?}", sequences.len()))
}

fn criterion_5() -> Check {
    for e in CatalogEntry::ALL {
        let a = e.sequence();
        let b = series_reciprocal(&a, 30).map_err(|e| e.to_string())?;
        let product = cauchy_product(&TruncatedSeries::of(&a, 30).unwrap(), &b, 30).map_err(|e| e.to_string())?;
        ensure(product.order() == 30 && product.is_delta(), format!("{e}: {product:?}"))?;
    }
    Ok("a(x) b(x) = 1 mod x^31 for all 6 entries".into())
}

fn criterion_6() -> Check {
    let expected = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    for (i, &want) in expected.iter().enumerate() {
        ensure(brute_partition_count(i + 1, i + 1) == want, format!("brute p({})", i + 1))?;
    }
    for n in 1..=16 {
        let p_n = brute_partition_count(n, n) as usize;
        let mut seen = 0;
        for p in partitions(n).map_err(|e| e.to_string())? {
            ensure(diophantine_to_partition(&partition_to_diophantine(&p)) == p, format!("round trip {p}"))?;
            seen += 1;
        }
        ensure(seen == p_n, format!("|P({n})| = {seen}, brute {p_n}"))?;
        let mut solutions = 0;
        for s in diophantine(n).map_err(|e| e.to_string())? {
            ensure(partition_to_diophantine(&diophantine_to_partition(&s)) == s, format!("round trip {s}"))?;
            solutions += 1;
        }
        ensure(solutions == p_n, format!("n={n}: {solutions} solutions, p(n) = {p_n}"))?;
    }
    Ok("bijection is the identity for n <= 16; p(1..10) = 1,2,3,5,7,11,15,22,30,42".into())
}

fn criterion_7() -> Check {
    let report = identity_suite(15).map_err(|e| e.to_string())?;
    let mut counted = 0;
    for c in &report.checks {
        let required = match c.identity {
            Identity::FibonacciOddSum
            | Identity::FibonacciEvenSum
            | Identity::FibonacciWeightedSum
            | Identity::FibonacciOddConvolution => c.n <= 15,
            Identity::BernoulliOddVanish => c.n <= 10,
            _ => c.n <= 12,
        };
        if required {
            ensure(c.passed(), format!("{} n={}: {} != {}", c.identity, c.n, c.lhs, c.rhs))?;
            counted += 1;
        }
    }
    ensure(counted == 4 * 15 + 10 + 3 * 12, format!("{counted} checks"))?;
    ensure(report.passed(), "a check beyond the required range failed")?;
    Ok(format!("{counted} required identity checks exact"))
}

fn criterion_8() -> Check {
    let p40 = brute_partition_count(40, 40);
    ensure(p40 == 37338, format!("brute p(40) = {p40}"))?;
    let a = CatalogEntry::Bernoulli.sequence();
    let start = Instant::now();
    let e = evaluate(&a, 40, MethodId::Partition, CAP).map_err(|e| e.to_string())?;
    let t = start.elapsed();
    ensure(e.terms == p40 as u128, format!("{} terms", e.terms))?;
    let oracle = b_recursion(&CatalogEntry::Bernoulli.sequence(), 40).map_err(|e| e.to_string())?;
    ensure(e.value == oracle, "b_40 differs from recursion")?;
    ensure(t < Duration::from_secs(5), format!("took {t:?}"))?;
    let b40 = CatalogEntry::Bernoulli.transform(40, &e.value).unwrap();
    ensure(
        b40 == Rational::parse("-261082718496449122051/13530").unwrap(),
        format!("B_40 = {b40}"),
    )?;
    Ok(format!("b_40 over 37338 partitions in {t:?}"))
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 Bernoulli B_4 via compute", criterion_1),
        ("2 Fibonacci F_8 via compute, all methods", criterion_2),
        ("3 enum partitions of 4", criterion_3),
        ("4 method equivalence", criterion_4),
        ("5 convolution identity", criterion_5),
        ("6 partition/diophantine bijection", criterion_6),
        ("7 identity suite", criterion_7),
        ("8 partition sum at n = 40", criterion_8),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("criterion {name}: PASS ({detail})"),
            Err(why) => {
                failed += 1;
                println!("criterion {name}: FAIL ({why})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
