//! JSON shapes for permutations, polynomials, series and check reports.
//!
//! Polynomials are written as coefficient lists, lowest power first.

use permcross_core::identities::{WilfPartition, WilfSeparation};
use permcross_core::{ArcSide, CheckReport, Permutation, QPoly, QSeries, Status};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Serialize)]
pub struct PermutationJson<'a> {
    pub n: usize,
    pub word: &'a [usize],
}

impl<'a> From<&'a Permutation> for PermutationJson<'a> {
    fn from(p: &'a Permutation) -> Self {
        PermutationJson { n: p.len(), word: p.word() }
    }
}

pub fn stats_json(p: &Permutation, occurrences: Option<(&Permutation, usize)>) -> Value {
    let s = p.stat_profile();
    let crossings: Vec<Value> = p
        .crossings()
        .iter()
        .map(|c| {
            let side = match c.side {
                ArcSide::Upper => "upper",
                ArcSide::Lower => "lower",
            };
            json!({ "i": c.i, "j": c.j, "side": side })
        })
        .collect();
    let mut out = json!({
        "permutation": PermutationJson::from(p),
        "crs": s.crs,
        "inv": s.inv,
        "exc": s.exc,
        "nes": s.nes,
        "ut": s.ut,
        "lt": s.lt,
        "ddes": s.ddes,
        "dasc": s.dasc,
        "occ31_2": s.occ31_2,
        "crossings": crossings,
    });
    if let Some((tau, count)) = occurrences {
        out["occurrences"] = json!({ "pattern": tau.to_string(), "count": count });
    }
    out
}

pub fn poly_json(p: &QPoly) -> Value {
    json!(p.coeffs())
}

pub fn series_json(s: &QSeries) -> Value {
    Value::Array(s.coeffs().iter().map(poly_json).collect())
}

/// `elapsed_ms` is added only to the outermost object.
pub fn report_json(r: &CheckReport, elapsed_ms: Option<u128>) -> Value {
    let reason = match &r.status {
        Status::Skipped(why) => Value::String(why.clone()),
        _ => Value::Null,
    };
    let counterexample = match &r.counterexample {
        Some(c) => json!({ "n": c.n, "witness": c.witness, "lhs": c.lhs, "rhs": c.rhs }),
        None => Value::Null,
    };
    let mut out = json!({
        "name": r.name,
        "status": r.status.label(),
        "reason": reason,
        "n_range": [r.n_range.0, r.n_range.1],
        "counterexample": counterexample,
        "parts": r.parts.iter().map(|p| report_json(p, None)).collect::<Vec<_>>(),
    });
    if let Some(ms) = elapsed_ms {
        out["elapsed_ms"] = json!(ms);
    }
    out
}

pub fn wilf_json(p: &WilfPartition) -> Value {
    let classes: Vec<Vec<String>> = p.classes.iter().map(|c| c.iter().map(ToString::to_string).collect()).collect();
    let separations: Vec<Value> = p
        .separations
        .iter()
        .map(|WilfSeparation { a, b, n }| json!({ "a": a.to_string(), "b": b.to_string(), "n": n }))
        .collect();
    json!({ "n_max": p.n_max, "classes": classes, "separations": separations })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure_two_crossings() {
        let p: Permutation = "4735126".parse().unwrap();
        let v = stats_json(&p, None);
        assert_eq!(v["crs"], 3);
        let pairs: Vec<(u64, u64)> = v["crossings"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| (c["i"].as_u64().unwrap(), c["j"].as_u64().unwrap()))
            .collect();
        assert_eq!(pairs, [(1, 2), (5, 6), (6, 7)]);
        assert_eq!(v["permutation"]["word"], json!([4, 7, 3, 5, 1, 2, 6]));
    }

    #[test]
    fn report_shape() {
        let r = CheckReport::skipped("x", (2, 8), "guard");
        let v = report_json(&r, Some(5));
        assert_eq!(v["status"], "skipped");
        assert_eq!(v["reason"], "guard");
        assert_eq!(v["n_range"], json!([2, 8]));
        assert_eq!(v["elapsed_ms"], 5);
        assert!(v["counterexample"].is_null());
    }
}
