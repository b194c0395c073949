//! The JSON trace document: a flat list of rule applications followed by
//! the verdicts they support.

use bkcube_core::pipeline::{Derivation, Step};
use bkcube_core::rules::{Candidate, RuleOutcome, Term};
use bkcube_core::theorems::{EvidenceKind, Report, Verdict};
use bkcube_core::{Degree, Profile};
use serde::{Deserialize, Serialize};

pub const FORMAT_VERSION: &str = "1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub version: String,
    pub steps: Vec<TraceStep>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdicts: Option<Vec<Verdict>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub rule: String,
    pub dim: u32,
    pub candidates: Vec<TraceCandidate>,
    pub chosen: Degree,
    /// `null` for rules that do not act on a whole profile.
    pub profile_after: Option<Profile>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceCandidate {
    pub blocks: Vec<u32>,
    pub value: Degree,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl From<&Candidate> for TraceCandidate {
    fn from(c: &Candidate) -> Self {
        TraceCandidate {
            blocks: c.blocks().to_vec(),
            value: c.value,
            label: match &c.term {
                Term::Labeled { label } => Some(label.clone()),
                Term::Partition { .. } => None,
            },
        }
    }
}

fn outcome_step(o: &RuleOutcome, profile_after: Option<&Profile>) -> TraceStep {
    TraceStep {
        rule: o.rule.name().to_string(),
        dim: o.dim,
        candidates: o.candidates.iter().map(TraceCandidate::from).collect(),
        chosen: o.result,
        profile_after: profile_after.cloned(),
    }
}

fn derivation_step(step: &Step, out: &mut Vec<TraceStep>) {
    if step.outcomes.is_empty() {
        // suspension and loops shift degrees without a minimum
        let rule = step.transform.to_string();
        let rule = rule.split('(').next().unwrap_or_default().to_string();
        out.push(TraceStep {
            rule,
            dim: step.profile.dim(),
            candidates: Vec::new(),
            chosen: step.profile.full_cube_degree(),
            profile_after: Some(step.profile.clone()),
        });
    } else {
        out.extend(
            step.outcomes
                .iter()
                .map(|o| outcome_step(o, Some(&step.profile))),
        );
    }
}

impl TraceDocument {
    pub fn new() -> Self {
        TraceDocument {
            version: FORMAT_VERSION.to_string(),
            steps: Vec::new(),
            verdicts: None,
        }
    }

    pub fn push_derivation(&mut self, d: &Derivation) {
        for step in &d.steps {
            derivation_step(step, &mut self.steps);
        }
    }

    /// Evidence of every report in order, then the verdicts.
    pub fn from_reports(reports: &[Report]) -> Self {
        let mut doc = TraceDocument::new();
        for report in reports {
            for ev in &report.evidence {
                match &ev.kind {
                    EvidenceKind::Derivation(d) => doc.push_derivation(d),
                    EvidenceKind::Rules(outcomes) => doc
                        .steps
                        .extend(outcomes.iter().map(|o| outcome_step(o, None))),
                }
            }
        }
        doc.verdicts = Some(reports.iter().map(|r| r.verdict.clone()).collect());
        doc
    }

    /// Pretty-printed JSON with a trailing newline. Field and list order
    /// come from the data, so equal inputs give identical bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("trace documents always serialize");
        s.push('\n');
        s
    }
}

impl Default for TraceDocument {
    fn default() -> Self {
        Self::new()
    }
}
