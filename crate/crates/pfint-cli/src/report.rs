//! Deterministic report rows: one comparison per row, rendered as TSV or
//! JSON with a fixed superset schema so every suite shares one writer.

use serde_json::json;

pub const HEADER: [&str; 9] = [
    "check", "seed", "n", "points", "index", "lhs", "rhs", "abs_diff", "verdict",
];

#[derive(Clone, Debug)]
pub struct Row {
    pub check: &'static str,
    pub seed: Option<u64>,
    pub n: Option<usize>,
    pub points: Option<usize>,
    pub index: Option<usize>,
    pub lhs: String,
    pub rhs: String,
    pub abs_diff: String,
    pub pass: bool,
}

impl Row {
    fn verdict(&self) -> &'static str {
        if self.pass {
            "pass"
        } else {
            "fail"
        }
    }
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

pub fn to_tsv(rows: &[Row]) -> String {
    let mut out = String::new();
    out.push_str(&HEADER.join("\t"));
    out.push('\n');
    for r in rows {
        let fields = [
            r.check.to_string(),
            opt(&r.seed),
            opt(&r.n),
            opt(&r.points),
            opt(&r.index),
            r.lhs.clone(),
            r.rhs.clone(),
            r.abs_diff.clone(),
            r.verdict().to_string(),
        ];
        out.push_str(&fields.join("\t"));
        out.push('\n');
    }
    out
}

pub fn to_json(rows: &[Row]) -> String {
    let arr: Vec<_> = rows
        .iter()
        .map(|r| {
            json!({
                "check": r.check,
                "seed": r.seed,
                "n": r.n,
                "points": r.points,
                "index": r.index,
                "lhs": r.lhs,
                "rhs": r.rhs,
                "abs_diff": r.abs_diff,
                "verdict": r.verdict(),
            })
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&arr).expect("report serialization");
    s.push('\n');
    s
}

pub fn summary(name: &str, rows: &[Row], seed: Option<u64>) -> String {
    let fails = rows.iter().filter(|r| !r.pass).count();
    let seed_note = seed.map(|s| format!(" (seed {s})")).unwrap_or_default();
    format!(
        "{name}: {} checks, {} pass, {fails} fail{seed_note}",
        rows.len(),
        rows.len() - fails,
    )
}
