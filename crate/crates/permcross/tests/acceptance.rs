//! End-to-end acceptance run: twelve criteria, one verdict line each.
//!
//! Verdict lines are written straight to the stderr handle so they show up
//! even when the test harness captures output.

use std::io::Write;
use std::process::Command;
use std::time::{Duration, Instant};

use permcross_core::identities::{formulas, Verifier};
use permcross_core::{BruteForce, CheckReport, ClassSelector, DistributionSource, PatternSet, QPoly, Statistic};
use serde_json::Value;

struct Verdict {
    id: usize,
    title: &'static str,
    ok: bool,
    detail: String,
    elapsed: Duration,
    budget: Option<Duration>,
}

fn bin(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_permcross")).args(args).output().expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).expect("utf-8 output"))
}

fn set(s: &str) -> PatternSet {
    s.parse().unwrap()
}

fn describe(r: &CheckReport) -> String {
    match &r.counterexample {
        Some(c) => format!("{} failed at n={}: {} | lhs {} | rhs {}", r.name, c.n, c.witness, c.lhs, c.rhs),
        None => format!("{} {}", r.name, r.status.label()),
    }
}

fn criterion(
    id: usize,
    title: &'static str,
    budget: Option<Duration>,
    body: impl FnOnce() -> Result<String, String>,
) -> Verdict {
    let start = Instant::now();
    let outcome = body();
    let elapsed = start.elapsed();
    let (ok, detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Verdict { id, title, ok, detail, elapsed, budget }
}

fn require(report: CheckReport) -> Result<String, String> {
    if report.passed() {
        Ok(describe(&report))
    } else {
        Err(describe(&report))
    }
}

fn figure_two() -> Result<String, String> {
    let (code, out) = bin(&["stats", "4735126", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).map_err(|e| e.to_string())?;
    let pairs: Vec<(u64, u64)> = v["crossings"]
        .as_array()
        .ok_or("no crossing list")?
        .iter()
        .map(|c| (c["i"].as_u64().unwrap(), c["j"].as_u64().unwrap()))
        .collect();
    if code == 0 && v["crs"] == 3 && pairs == [(1, 2), (5, 6), (6, 7)] {
        Ok(format!("crs=3, pairs {pairs:?}"))
    } else {
        Err(format!("exit {code}, crs {}, pairs {pairs:?}", v["crs"]))
    }
}

fn thm12() -> Result<String, String> {
    let v = Verifier::new(&BruteForce);
    let r = v.check_thm12(10).map_err(|e| e.to_string())?;
    let row3 = BruteForce.distribution(3, &set("321,231"), ClassSelector::All, Statistic::Crs).unwrap();
    if row3 != QPoly::from_coeffs(vec![3, 1]) {
        return Err(format!("row 3 of 321,231 is {row3}"));
    }
    for n in 1..=10 {
        let row = BruteForce.distribution(n, &set("123,132"), ClassSelector::All, Statistic::Crs).unwrap();
        if row != formulas::pair_123_132_closed_form(n).unwrap() {
            return Err(format!("row {n} of 123,132 is {row}"));
        }
    }
    require(r)
}

fn thm13() -> Result<String, String> {
    let r = Verifier::new(&BruteForce).check_thm13(10).map_err(|e| e.to_string())?;
    let relations = ["gf_312", "gf_312_123", "gf_312_132_from_231_213", "gf_312_213_from_231_132"];
    for name in relations {
        match r.part(name) {
            Some(p) if p.passed() => {}
            Some(p) => return Err(describe(p)),
            None => return Err(format!("missing part {name}")),
        }
    }
    require(r)
}

fn thm11() -> Result<String, String> {
    let r = Verifier::new(&BruteForce).check_thm11(10, 22).map_err(|e| e.to_string())?;
    if r.part("continued_fraction[depth=22]").is_none_or(|p| !p.passed()) {
        return Err(describe(&r));
    }
    require(r)
}

fn cor32() -> Result<String, String> {
    let r = Verifier::new(&BruteForce).check_cor32(10).map_err(|e| e.to_string())?;
    let (code, csv) =
        bin(&["triangle", "--avoid", "123,132", "--selector", "first1@n-1", "--rows", "2..10", "--format", "csv"]);
    let expected: String = (0..=8)
        .map(|m| formulas::pascal_row(m).iter().map(i64::to_string).collect::<Vec<_>>().join(",") + "\n")
        .collect();
    if code != 0 || csv != expected {
        return Err(format!("triangle export (exit {code}):\n{csv}"));
    }
    require(r)
}

fn thm43() -> Result<String, String> {
    let r = Verifier::new(&BruteForce).check_thm43_cor44_cor45(8).map_err(|e| e.to_string())?;
    for n in [2, 4, 6, 8] {
        let f = BruteForce.distribution(n, &PatternSet::empty(), ClassSelector::All, Statistic::Crs).unwrap();
        if f.coeffs().iter().any(|c| c % 2 != 0) {
            return Err(format!("F_{n} = {f} has an odd coefficient"));
        }
    }
    require(r)
}

fn wilf() -> Result<String, String> {
    let (code, out) = bin(&["wilf", "--family", "singles3", "--stat", "crs", "--nmax", "9"]);
    let first = out.lines().next().unwrap_or_default();
    if code == 0 && first == "{132,213,321} | {123} | {231} | {312}" {
        Ok(first.to_string())
    } else {
        Err(format!("exit {code}: {first}"))
    }
}

fn mutation() -> Result<String, String> {
    let v = Verifier::new(&BruteForce).with_crossing_statistic(Statistic::CrsStrictLower);
    let mut seen = Vec::new();
    for r in [v.check_lemma_insert(8), v.check_thm12(10)] {
        let r = r.map_err(|e| e.to_string())?;
        if !r.failed() || r.counterexample.is_none() {
            return Err(format!("{} was not caught: {}", r.name, r.status.label()));
        }
        seen.push(describe(&r));
    }
    Ok(seen.join("; "))
}

fn strip_timing(out: &str) -> Vec<String> {
    out.lines()
        .map(|l| {
            let mut v: Value = serde_json::from_str(l).expect("one JSON report per line");
            v.as_object_mut().unwrap().remove("elapsed_ms");
            v.to_string()
        })
        .collect()
}

fn determinism() -> Result<String, String> {
    let (c1, one) = bin(&["verify", "--all", "--threads", "1"]);
    let (c8, eight) = bin(&["verify", "--all", "--threads", "8"]);
    let (a, b) = (strip_timing(&one), strip_timing(&eight));
    if c1 == 0 && c8 == 0 && a.len() == 13 && a == b {
        Ok(format!("{} identical reports", a.len()))
    } else {
        Err(format!("exit {c1}/{c8}, {} vs {} reports, equal: {}", a.len(), b.len(), a == b))
    }
}

#[test]
fn acceptance() {
    let v = Verifier::new(&BruteForce);
    let secs = Duration::from_secs;
    let verdicts = vec![
        criterion(1, "figure-2 crossings of 4735126", None, figure_two),
        criterion(2, "insertion law, n <= 7, every k", Some(secs(1)), || {
            require(v.check_lemma_insert(8).map_err(|e| e.to_string())?)
        }),
        criterion(3, "crs = inv - exc - 2 nes on S_8", Some(secs(2)), || {
            require(v.check_crs_inv_exc_nes(8).map_err(|e| e.to_string())?)
        }),
        criterion(4, "rational series of the 321/123 pairs to z^10", None, thm12),
        criterion(5, "312 vs 231 series relations to z^10", None, thm13),
        criterion(6, "continued fraction, Wilf triple, 31-2 statistic", Some(secs(10)), thm11),
        criterion(7, "Pascal rows and binomial coefficients, n <= 10", None, cor32),
        criterion(8, "closed form for (321,132)/(321,213), 321-avoiders nest-free", None, || {
            require(v.check_thm41(10).map_err(|e| e.to_string())?)
        }),
        criterion(9, "reverse-complement insertion bijection and parity, n <= 8", None, thm43),
        criterion(10, "Wilf classes of single patterns, n <= 9", None, wilf),
        criterion(11, "perturbed lower crossing is caught", None, mutation),
        criterion(12, "verify --all identical with 1 and 8 threads", None, determinism),
    ];

    let mut err = std::io::stderr().lock();
    let mut all_ok = true;
    for v in &verdicts {
        let in_budget = v.budget.is_none_or(|b| v.elapsed <= b);
        let ok = v.ok && in_budget;
        all_ok &= ok;
        let budget = v.budget.map(|b| format!(" (target {} ms)", b.as_millis())).unwrap_or_default();
        writeln!(
            err,
            "[{}] criterion {:>2}: {} | {} ms{} | {}",
            if ok { "PASS" } else { "FAIL" },
            v.id,
            v.title,
            v.elapsed.as_millis(),
            budget,
            v.detail
        )
        .unwrap();
    }
    assert!(all_ok, "at least one acceptance criterion failed");
}
