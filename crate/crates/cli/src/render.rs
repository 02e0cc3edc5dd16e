use std::fmt::Write;

use rankcode::analysis::{CodeReport, Status};
use rankcode::audit::Audit;

use crate::claims::ClaimResult;

pub fn status_word(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skipped",
    }
}

fn tag(s: Status) -> &'static str {
    match s {
        Status::Pass => "PASS",
        Status::Fail => "FAIL",
        Status::Skipped => "SKIP",
    }
}

/// `i,A_i,A_i_dual` rows for `i = 0..=n`.
pub fn distribution_csv(r: &CodeReport) -> String {
    let mut s = String::from("i,A_i,A_i_dual\n");
    for i in 0..=r.n {
        let a = r.distribution.get(i).copied().unwrap_or(0);
        let b = r.dual_distribution.get(i).copied().unwrap_or(0);
        writeln!(s, "{i},{a},{b}").unwrap();
    }
    s
}

pub fn audit_text(a: &Audit) -> String {
    let r = &a.report;
    let mut s = String::new();
    writeln!(s, "q = {}, n = {}, m = {}, t = {}", r.q, r.n, r.m, r.t).unwrap();
    writeln!(s, "class: {}", r.label).unwrap();
    writeln!(
        s,
        "d = {}, d' = {}, rdef = {}, rdef' = {}",
        r.d, r.d_dual, r.rdef, r.rdef_dual
    )
    .unwrap();
    writeln!(s, "distribution: {:?}", r.distribution).unwrap();
    writeln!(s, "dual distribution: {:?}", r.dual_distribution).unwrap();
    if let Some(w) = &a.weights {
        writeln!(s, "weights: {:?}", w.code.weights).unwrap();
        writeln!(s, "dual weights: {:?}", w.dual.weights).unwrap();
        if let Some(e) = &w.expanded {
            writeln!(s, "expanded weights: {:?}", e.weights).unwrap();
        }
        match w.code.i_mrd {
            Some(x) => writeln!(s, "i-MRD: i = {}, degree {}", x.i, x.degree).unwrap(),
            None => writeln!(s, "i-MRD: none").unwrap(),
        }
    }
    writeln!(s).unwrap();
    for c in &a.checks {
        writeln!(s, "{}  {:<36} {}", tag(c.status), c.name, c.detail).unwrap();
    }
    s
}

pub fn claims_text(rows: &[ClaimResult]) -> String {
    let width = rows.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let mut s = String::new();
    for r in rows {
        writeln!(
            s,
            "{}  {:<width$}  {}: {}",
            tag(r.status),
            r.id,
            r.title,
            r.detail
        )
        .unwrap();
    }
    let passed = rows.iter().filter(|r| r.status == Status::Pass).count();
    writeln!(s, "{passed}/{} claims pass", rows.len()).unwrap();
    s
}
