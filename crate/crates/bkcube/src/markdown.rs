//! Human-readable rendering of derivations and reports.

use std::fmt::Write;

use bkcube_core::pipeline::Derivation;
use bkcube_core::rules::{Candidate, RuleOutcome, Term};
use bkcube_core::script::Execution;
use bkcube_core::theorems::{EvidenceKind, Report};
use bkcube_core::Degree;

/// The arithmetic of one candidate, e.g. `-1+2+2` or `1+inf`.
pub fn candidate_expr(c: &Candidate) -> String {
    match &c.term {
        Term::Labeled { label } => format!("{label}={}", c.value),
        Term::Partition {
            offset, summands, ..
        } => {
            let mut s = offset.to_string();
            for v in summands {
                match v {
                    Degree::Finite(x) if *x < 0 => write!(s, "{x}").unwrap(),
                    _ => write!(s, "+{v}").unwrap(),
                }
            }
            s
        }
    }
}

/// `hbm_cartesian d=2: minimum of (-1+inf, -1+2+2) = 3`
pub fn outcome_line(o: &RuleOutcome) -> String {
    let terms: Vec<String> = o.candidates.iter().map(candidate_expr).collect();
    format!(
        "{} d={}: minimum of ({}) = {}",
        o.rule.name(),
        o.dim,
        terms.join(", "),
        o.result
    )
}

pub fn derivation(out: &mut String, d: &Derivation) {
    writeln!(out, "initial: `{}`\n", d.initial).unwrap();
    for (i, step) in d.steps.iter().enumerate() {
        let tag = if step.iteration > 0 {
            format!("iteration {}, ", step.iteration)
        } else {
            String::new()
        };
        writeln!(
            out,
            "{}. {tag}{} -> `{}`",
            i + 1,
            step.transform,
            step.profile
        )
        .unwrap();
        for o in &step.outcomes {
            writeln!(out, "   - {}", outcome_line(o)).unwrap();
        }
    }
    match d.stabilized_at {
        Some(i) => writeln!(out, "\nstabilized at iterate {i}: `{}`", d.current()).unwrap(),
        None => writeln!(out, "\nfinal: `{}`", d.current()).unwrap(),
    }
    for note in &d.notes {
        writeln!(out, "\nnote: {note}").unwrap();
    }
}

fn status(pass: bool) -> &'static str {
    if pass {
        "PASS"
    } else {
        "FAIL"
    }
}

fn parameters(r: &Report) -> String {
    let v: Vec<String> = r
        .verdict
        .parameters
        .iter()
        .map(|p| format!("{}={}", p.name, p.value))
        .collect();
    v.join(" ")
}

pub fn report(out: &mut String, r: &Report) {
    let v = &r.verdict;
    writeln!(
        out,
        "## {} ({}): {}\n",
        v.claim_id,
        parameters(r),
        status(v.pass)
    )
    .unwrap();
    if !v.checks.is_empty() {
        writeln!(out, "| check | expected | | computed | ok |").unwrap();
        writeln!(out, "|---|---|---|---|---|").unwrap();
        for c in &v.checks {
            writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                c.label,
                c.expected,
                c.relation.symbol(),
                c.computed,
                if c.holds() { "yes" } else { "no" }
            )
            .unwrap();
        }
        out.push('\n');
    }
    for c in &v.conditions {
        writeln!(out, "- [{}] {}", if c.holds { "x" } else { " " }, c.label).unwrap();
    }
    for n in &v.notes {
        writeln!(out, "- note: {n}").unwrap();
    }
    out.push('\n');
    for ev in &r.evidence {
        writeln!(out, "### {}\n", ev.id).unwrap();
        match &ev.kind {
            EvidenceKind::Derivation(d) => derivation(out, d),
            EvidenceKind::Rules(outcomes) => {
                for o in outcomes {
                    writeln!(out, "- {}", outcome_line(o)).unwrap();
                }
            }
        }
        out.push('\n');
    }
}

pub fn reports(rs: &[Report]) -> String {
    let mut out = String::from("# bkcube verification report\n\n");
    writeln!(out, "| claim | parameters | result |\n|---|---|---|").unwrap();
    for r in rs {
        writeln!(
            out,
            "| {} | {} | {} |",
            r.verdict.claim_id,
            parameters(r),
            status(r.pass())
        )
        .unwrap();
    }
    let passed = rs.iter().filter(|r| r.pass()).count();
    writeln!(out, "\n{passed} of {} verdicts pass.\n", rs.len()).unwrap();
    for r in rs {
        report(&mut out, r);
    }
    out
}

pub fn execution(ex: &Execution) -> String {
    let mut out = String::from("# bkcube script trace\n\n");
    for run in &ex.runs {
        writeln!(out, "## profile `{}`\n", run.name).unwrap();
        derivation(&mut out, &run.derivation);
        out.push('\n');
    }
    out
}
