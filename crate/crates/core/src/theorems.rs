//! Verifiers that replay the convergence arguments as degree schedules.
//!
//! Each verifier computes its values through the rule engine and compares
//! them with a closed form evaluated directly in integer arithmetic. The
//! result is a [`Report`]: the [`Verdict`] plus the derivations and rule
//! applications that produced it.
//!
//! Only numeric consequences are checked. Hypotheses such as fibrancy,
//! fibration sequences or extra codegeneracies are taken on trust.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::degree::Degree;
use crate::error::EstimateError;
use crate::params::Exponent;
use crate::pipeline::{Derivation, Step, Transform};
use crate::profile::{Mode, Profile};
use crate::rules::{self, Candidate, Rule, RuleOutcome, Rules};

/// Default bound on every iteration loop.
pub const DEFAULT_MAX_ITERS: u32 = 32;

/// Agreement constant for the order-`(n+1)` inequality
/// `k(n+2)+1 ≥ (n+2)k - c`.
pub const AGREEMENT_C: i64 = -1;
/// Least input connectivity for which the agreement inequality is claimed.
pub const AGREEMENT_KAPPA: i64 = 1;
/// Largest relative connectivity the agreement inequality is sampled at.
pub const AGREEMENT_K_MAX: u32 = 8;
/// Stage count used to approximate the colimit when folding `r = ∞`
/// comparison stages, unless the iteration bound is smaller.
pub const STABLE_COMPARISON_STAGES: u32 = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum Relation {
    /// computed = expected
    Equal,
    /// computed ≥ expected
    AtLeast,
}

impl Relation {
    pub fn holds(self, expected: Degree, computed: Degree) -> bool {
        match self {
            Relation::Equal => computed == expected,
            Relation::AtLeast => computed >= expected,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::AtLeast => ">=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Check {
    pub label: String,
    pub expected: Degree,
    pub computed: Degree,
    pub relation: Relation,
}

impl Check {
    fn new(
        label: impl Into<String>,
        expected: Degree,
        computed: Degree,
        relation: Relation,
    ) -> Self {
        Check {
            label: label.into(),
            expected,
            computed,
            relation,
        }
    }

    pub fn holds(&self) -> bool {
        self.relation.holds(self.expected, self.computed)
    }
}

/// A yes/no side condition of a verdict (stabilization, monotonicity, ...).
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Condition {
    pub label: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Param {
    pub name: String,
    pub value: String,
}

/// Outcome of a verifier. `pass` holds iff every check and every condition
/// holds.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Verdict {
    pub claim_id: String,
    pub parameters: Vec<Param>,
    pub expected: Vec<Degree>,
    pub computed: Vec<Degree>,
    pub checks: Vec<Check>,
    pub conditions: Vec<Condition>,
    pub notes: Vec<String>,
    pub pass: bool,
    pub trace_refs: Vec<String>,
}

impl Verdict {
    fn new(claim_id: &str) -> Self {
        Verdict {
            claim_id: claim_id.to_string(),
            parameters: Vec::new(),
            expected: Vec::new(),
            computed: Vec::new(),
            checks: Vec::new(),
            conditions: Vec::new(),
            notes: Vec::new(),
            pass: false,
            trace_refs: Vec::new(),
        }
    }

    fn param(mut self, name: &str, value: impl ToString) -> Self {
        self.parameters.push(Param {
            name: name.to_string(),
            value: value.to_string(),
        });
        self
    }

    fn check(&mut self, c: Check) {
        self.expected.push(c.expected);
        self.computed.push(c.computed);
        self.checks.push(c);
    }

    fn condition(&mut self, label: impl Into<String>, holds: bool) {
        self.conditions.push(Condition {
            label: label.into(),
            holds,
        });
    }

    fn finish(mut self) -> Self {
        self.pass = self.checks.iter().all(Check::holds) && self.conditions.iter().all(|c| c.holds);
        self
    }

    pub fn failing_checks(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.holds())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum EvidenceKind {
    Derivation(Derivation),
    /// Rule applications that do not act on a whole profile, such as the
    /// face-transfer chain.
    Rules(Vec<RuleOutcome>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Evidence {
    pub id: String,
    pub kind: EvidenceKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Report {
    pub verdict: Verdict,
    pub evidence: Vec<Evidence>,
}

impl Report {
    fn new(mut verdict: Verdict, evidence: Vec<Evidence>) -> Self {
        verdict.trace_refs = evidence.iter().map(|e| e.id.clone()).collect();
        Report {
            verdict: verdict.finish(),
            evidence,
        }
    }

    pub fn pass(&self) -> bool {
        self.verdict.pass
    }
}

fn fin(v: i64) -> Degree {
    Degree::Finite(v)
}

fn k_times_plus(k: Degree, m: u32, plus: i64) -> Result<Degree, EstimateError> {
    k.scale(m)?.shift(plus)
}

fn strictly_increasing(values: &[Degree]) -> bool {
    values.windows(2).all(|w| w[0] < w[1])
}

/// The `(k(id+1)+1)`-cartesian `(n+1)`-cube.
fn coface_shape(k: Degree, n: u32) -> Result<Profile, EstimateError> {
    if k < fin(1) {
        return Err(EstimateError::Parameter(format!("k must be >= 1, got {k}")));
    }
    let dim = n.checked_add(1).ok_or(EstimateError::Overflow)?;
    let conn1 = k_times_plus(k, 2, 1)?;
    let degrees = (2..=dim)
        .map(|d| k_times_plus(k, d + 1, 1))
        .collect::<Result<Vec<_>, _>>()?;
    Profile::new(dim, conn1, Mode::Cartesian, degrees)
}

/// Rule set plus iteration bound; every verifier is a method.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Engine {
    pub rules: Rules,
    pub max_iters: u32,
}

impl Default for Engine {
    fn default() -> Self {
        Engine {
            rules: Rules::STANDARD,
            max_iters: DEFAULT_MAX_ITERS,
        }
    }
}

impl Engine {
    pub fn new(rules: Rules, max_iters: u32) -> Result<Self, EstimateError> {
        if max_iters == 0 {
            return Err(EstimateError::ZeroIterations);
        }
        Ok(Engine { rules, max_iters })
    }

    /// Connectivity of the comparison `X → Ω̃ʳΣ̃ʳX` for `X` `k`-connected
    /// rel. `Z`; expected `2k + 1` for every `r`.
    ///
    /// Stage `j` is the `r = 1` comparison for `Σ̃ʲX`, computed on the
    /// pushout square and then looped `j` times; stages are folded by
    /// [`rules::compose_connectivity`]. For `r = ∞` (or `r` above the
    /// iteration bound) only the first stages are folded; later stages are
    /// more highly connected.
    pub fn verify_comparison(&self, k: Degree, r: Exponent) -> Result<Report, EstimateError> {
        if k < Degree::ZERO {
            return Err(EstimateError::Parameter(format!("k must be >= 0, got {k}")));
        }
        let stages = match r {
            Exponent::Finite(0) => return Err(EstimateError::ZeroExponent),
            Exponent::Finite(r) => r.min(self.max_iters),
            Exponent::Stable => STABLE_COMPARISON_STAGES.min(self.max_iters),
        };
        let mut verdict = Verdict::new("comparison").param("k", k).param("r", r);
        let mut evidence = Vec::new();
        let mut stage_conns = Vec::with_capacity(stages as usize);
        for j in 0..stages {
            let edge = rules::object_to_map_connectivity_traced(k.raise(j)?)?;
            let square = Profile::new(2, edge.result, Mode::Cocartesian, vec![Degree::Infinite])?;
            let mut derivation = Derivation::new(square.clone());
            let (cart, outcomes) = self.rules.cartesianize(&square)?;
            derivation.steps.push(Step {
                iteration: 0,
                transform: Transform::Cartesianize,
                outcomes,
                profile: cart.clone(),
            });
            if j > 0 {
                let looped = crate::pipeline::loops(&cart, j)?;
                derivation.steps.push(Step {
                    iteration: 0,
                    transform: Transform::Loop(j),
                    outcomes: Vec::new(),
                    profile: looped,
                });
            }
            stage_conns.push(derivation.current().full_cube_degree());
            evidence.push(Evidence {
                id: format!("comparison/k={k}/r={r}/stage{j}"),
                kind: EvidenceKind::Derivation(derivation),
            });
        }
        let composite = rules::compose_connectivity_traced(&stage_conns)?;
        let computed = composite.result;
        evidence.push(Evidence {
            id: format!("comparison/k={k}/r={r}/compose"),
            kind: EvidenceKind::Rules(vec![composite]),
        });
        if Exponent::Finite(stages) != r {
            verdict.notes.push(format!(
                "folded {stages} stages; stage j is (2k+j+1)-connected so later stages \
                 cannot lower the minimum"
            ));
        }
        let expected = k_times_plus(k, 2, 1)?;
        verdict.check(Check::new(
            "connectivity of X -> Ω̃ʳΣ̃ʳX",
            expected,
            computed,
            Relation::Equal,
        ));
        Ok(Report::new(verdict, evidence))
    }

    /// Coface `(n+1)`-cube shape `(k(id+1)+1)`-cartesian: edges
    /// `(2k+1)`-connected, `d`-faces `(k(d+1)+1)`-cartesian.
    ///
    /// The edge estimate is cross-checked against
    /// [`Engine::verify_comparison`].
    pub fn coface_profile(&self, k: Degree, n: u32, r: Exponent) -> Result<Profile, EstimateError> {
        let profile = coface_shape(k, n)?;
        let edge = self.comparison_edge(k, r)?;
        if edge != profile.conn1() {
            return Err(EstimateError::CrossCheck(format!(
                "coface edges {}-connected but the comparison map computes {edge}",
                profile.conn1()
            )));
        }
        Ok(profile)
    }

    fn comparison_edge(&self, k: Degree, r: Exponent) -> Result<Degree, EstimateError> {
        Ok(self.verify_comparison(k, r)?.verdict.computed[0])
    }

    /// Records the coface edge cross-check as a condition, so a broken rule
    /// set fails the verdict instead of aborting it.
    fn edge_condition(
        &self,
        verdict: &mut Verdict,
        k: Degree,
        r: Exponent,
    ) -> Result<(), EstimateError> {
        let edge = self.comparison_edge(k, r)?;
        let shape = coface_shape(k, 0)?.conn1();
        verdict.condition(
            format!("coface edges ({shape}) match the comparison map ({edge}) at k={k}"),
            edge == shape,
        );
        Ok(())
    }

    /// Connectivity of `X → (Ω̃ʳΣ̃ʳ)_n X` for `n = 0..=max_n`, read off the
    /// coface cubes; expected `k(n+2)+1`, strictly increasing in `n`.
    pub fn completion_schedule(
        &self,
        k: Degree,
        r: Exponent,
        max_n: u32,
    ) -> Result<Report, EstimateError> {
        if k < fin(1) {
            return Err(EstimateError::Parameter(format!("k must be >= 1, got {k}")));
        }
        let mut verdict = Verdict::new("completion-schedule")
            .param("k", k)
            .param("r", r)
            .param("N", max_n);
        for n in 0..=max_n {
            let computed = coface_shape(k, n)?.full_cube_degree();
            let expected = match k {
                Degree::Finite(k) => fin(k
                    .checked_mul(i64::from(n) + 2)
                    .and_then(|v| v.checked_add(1))
                    .ok_or(EstimateError::Overflow)?),
                Degree::Infinite => Degree::Infinite,
            };
            verdict.check(Check::new(
                format!("stage {n}"),
                expected,
                computed,
                Relation::Equal,
            ));
        }
        let increasing = strictly_increasing(&verdict.computed);
        verdict.condition("connectivity strictly increasing in n", increasing);
        self.edge_condition(&mut verdict, k, r)?;
        Ok(Report::new(verdict, Vec::new()))
    }

    /// The maps `(Ω̃ʳΣ̃ʳ)^j X → T_n^Z (Ω̃ʳΣ̃ʳ)^j X` for `X` 0-connected rel.
    /// `Z`: iterate from the strongly `∞`-cocartesian `(n+1)`-cube with
    /// 1-connected edges. Every iterate must be at least `(n+1)`-cartesian,
    /// and the iteration must stabilize at exactly `n+1`.
    pub fn verify_excisive_comparison(
        &self,
        n: u32,
        r: Exponent,
        iterate_bound: u32,
    ) -> Result<Report, EstimateError> {
        if n < 1 {
            return Err(EstimateError::Parameter("n must be >= 1".into()));
        }
        let bound = iterate_bound.min(self.max_iters);
        let edge = rules::object_to_map_connectivity(Degree::ZERO)?;
        let initial = Profile::strongly_cocartesian(n + 1, edge)?;
        let derivation = self.rules.iterate(&initial, r, bound)?;
        let target = fin(i64::from(n) + 1);
        let mut verdict = Verdict::new("excisive-comparison")
            .param("n", n)
            .param("r", r)
            .param("iterate_bound", bound);
        for (i, p) in derivation.iterates().iter().enumerate() {
            verdict.check(Check::new(
                format!("iterate {}", i + 1),
                target,
                p.full_cube_degree(),
                Relation::AtLeast,
            ));
        }
        verdict.condition(
            format!("stabilized within {bound} iterations"),
            derivation.stabilized_at.is_some(),
        );
        if derivation.stabilized_at.is_some() {
            verdict.check(Check::new(
                "stabilized",
                target,
                derivation.current().full_cube_degree(),
                Relation::Equal,
            ));
        }
        verdict.notes.extend(derivation.notes.iter().cloned());
        let evidence = vec![Evidence {
            id: format!("excisive/n={n}/r={r}"),
            kind: EvidenceKind::Derivation(derivation),
        }];
        Ok(Report::new(verdict, evidence))
    }

    /// Stabilized connectivity of the index-`n` excisive comparison, i.e. the final full-cube degree
    /// of [`Engine::verify_excisive_comparison`].
    fn excisive_connectivity(
        &self,
        n: u32,
        r: Exponent,
    ) -> Result<(Degree, Report), EstimateError> {
        let report = self.verify_excisive_comparison(n, r, self.max_iters)?;
        let conn = match &report.evidence[0].kind {
            EvidenceKind::Derivation(d) => d.current().full_cube_degree(),
            EvidenceKind::Rules(_) => unreachable!("excisive evidence is a derivation"),
        };
        Ok((conn, report))
    }

    /// `(Ω̃ʳΣ̃ʳ)_k X → P_{n+k}^Z (Ω̃ʳΣ̃ʳ)_k X` is `(n+1)`-connected.
    ///
    /// `k = 0` is the excisive comparison itself. For `k ≥ 1` the face
    /// argument runs on the `(k+2)`-cube whose `k+1` legs are excisive
    /// comparisons of index `n+k`:
    ///
    /// 1. faces spanned by legs: a square is `(m-1)`-cartesian for
    ///    `m`-connected legs, and each higher face loses one more
    ///    (`min(source, target - 1)`), reaching `n+1` at dimension `k+1`;
    /// 2. the total cube is `∞`-cartesian, so the opposite `(k+1)`-face is
    ///    at least as cartesian as that face;
    /// 3. peeling off the leg faces one dimension at a time down to a
    ///    square, then across the square to the tower map.
    pub fn tower_vs_taylor(&self, n: u32, k: u32, r: Exponent) -> Result<Report, EstimateError> {
        if n < 1 {
            return Err(EstimateError::Parameter("n must be >= 1".into()));
        }
        let top = n.checked_add(k).ok_or(EstimateError::Overflow)?;
        let (leg, excisive) = self.excisive_connectivity(top, r)?;
        let mut verdict = Verdict::new("tower-vs-taylor")
            .param("n", n)
            .param("k", k)
            .param("r", r);
        verdict.condition(
            format!("excisive comparison at {top} verified"),
            excisive.pass(),
        );
        let mut evidence = excisive.evidence;
        let result = if k == 0 {
            leg
        } else {
            let mut log = Vec::new();
            // faces spanned by the legs, indexed by dimension
            let square = rules::fr_square_from_legs_traced(leg)?;
            let mut leg_faces = vec![square.result];
            log.push(square);
            for dim in 3..=k + 1 {
                let prev = *leg_faces.last().expect("nonempty");
                let o = rules::fr_total_from_faces_traced(dim, prev, prev)?;
                leg_faces.push(o.result);
                log.push(o);
            }
            let far = *leg_faces.last().expect("nonempty");
            let across = rules::fr_source_from_total_traced(k + 1, Degree::Infinite, far)?;
            let mut current = across.result;
            log.push(across);
            // peel down to the square containing the tower map
            for dim in (2..=k).rev() {
                let target = leg_faces[(dim - 2) as usize];
                let o = rules::fr_source_from_total_traced(dim, current, target)?;
                current = o.result;
                log.push(o);
            }
            let last = rules::fr_parallel_map_traced(current, leg)?;
            let result = last.result;
            log.push(last);
            evidence.push(Evidence {
                id: format!("tower/n={n}/k={k}/r={r}/faces"),
                kind: EvidenceKind::Rules(log),
            });
            result
        };
        verdict.check(Check::new(
            format!("tower map n={n} at k={k}"),
            fin(i64::from(n) + 1),
            result,
            Relation::Equal,
        ));
        Ok(Report::new(verdict, evidence))
    }

    /// `Ω̃ʳΣ̃ʳ` preserves `(id+1)`-cartesian cubes of dimension `1..=max_dim`.
    pub fn verify_id_plus_one_preserved(
        &self,
        max_dim: u32,
        r: Exponent,
    ) -> Result<Report, EstimateError> {
        if max_dim < 1 {
            return Err(EstimateError::Parameter("max_dim must be >= 1".into()));
        }
        let mut verdict = Verdict::new("id-plus-one-preserved")
            .param("N", max_dim)
            .param("r", r);
        verdict
            .notes
            .push("0-cubes carry no estimate; the empty cube is preserved trivially".into());
        let mut evidence = Vec::new();
        for dim in 1..=max_dim {
            let p = Profile::id_plus_one(dim)?;
            let (out, steps) = self.rules.omega_sigma_step(&p, r, false, 1)?;
            verdict.check(Check::new(
                format!("{dim}-cube"),
                fin(i64::from(dim) + 1),
                out.full_cube_degree(),
                Relation::Equal,
            ));
            verdict.condition(format!("{dim}-cube profile preserved"), out == p);
            let mut derivation = Derivation::new(p.clone());
            derivation.steps = steps;
            derivation.stabilized_at = (out == p).then_some(1);
            evidence.push(Evidence {
                id: format!("id-plus-one/dim={dim}/r={r}"),
                kind: EvidenceKind::Derivation(derivation),
            });
        }
        Ok(Report::new(verdict, evidence))
    }

    /// Fiber of a map of 1-connected spaces: coface cubes of total space
    /// and base are `((id+1)+1)`-cartesian, so the fiber's are
    /// `(id+1)`-cartesian, preserved by `Ω̃ʳΣ̃ʳ`, and the maps into the
    /// partial totalizations are `(n+2)`-connected.
    pub fn verify_fibration_completion(
        &self,
        max_n: u32,
        r: Exponent,
    ) -> Result<Report, EstimateError> {
        let mut verdict = Verdict::new("fibration-completion")
            .param("N", max_n)
            .param("r", r);
        let mut transfers = Vec::new();
        for n in 0..=max_n {
            let total = coface_shape(fin(1), n)?;
            let base = total.clone();
            let fiber = rules::fiber_transfer(&total, &base)?;
            transfers.push(RuleOutcome::from_candidates(
                Rule::FiberTransfer,
                n + 1,
                vec![
                    Candidate::labeled("total-1", total.full_cube_degree().lower(1)?),
                    Candidate::labeled("base-1", base.full_cube_degree().lower(1)?),
                ],
            )?);
            verdict.condition(
                format!("fiber coface {}-cube is (id+1)-cartesian", n + 1),
                fiber == Profile::id_plus_one(n + 1)?,
            );
            verdict.check(Check::new(
                format!("stage {n}"),
                fin(i64::from(n) + 2),
                fiber.full_cube_degree(),
                Relation::Equal,
            ));
        }
        let preserved = self.verify_id_plus_one_preserved(max_n + 1, r)?;
        verdict.condition("(id+1)-cartesian cubes preserved", preserved.pass());
        let increasing = strictly_increasing(&verdict.computed);
        verdict.condition("connectivity strictly increasing in n", increasing);
        self.edge_condition(&mut verdict, fin(1), r)?;
        let mut evidence = vec![Evidence {
            id: format!("fibration/N={max_n}/r={r}/fiber"),
            kind: EvidenceKind::Rules(transfers),
        }];
        evidence.extend(preserved.evidence);
        Ok(Report::new(verdict, evidence))
    }

    /// Numeric premises of the tower-of-towers interchange.
    ///
    /// (a) horizontal: the coface estimate `k(n+2)+1` satisfies the
    ///     order-`(n+1)` agreement inequality `≥ (n+2)k - c` with
    ///     `c = `[`AGREEMENT_C`] for `k = 1..=`[`AGREEMENT_K_MAX`];
    /// (b) vertical: [`Engine::tower_vs_taylor`] gives `n+1` for every cell,
    ///     independent of `k`.
    pub fn taylor_interchange_report(
        &self,
        n_max: u32,
        k_max: u32,
        r: Exponent,
    ) -> Result<Report, EstimateError> {
        let mut verdict = Verdict::new("taylor-interchange")
            .param("n_max", n_max)
            .param("k_max", k_max)
            .param("r", r)
            .param("c", AGREEMENT_C)
            .param("kappa", AGREEMENT_KAPPA);
        verdict.notes.push(format!(
            "agreement read as connectivity >= (n+2)k - c with c = {AGREEMENT_C}, \
             for k >= {AGREEMENT_KAPPA}"
        ));
        for k in 1..=AGREEMENT_K_MAX {
            self.edge_condition(&mut verdict, fin(i64::from(k)), r)?;
        }
        for n in 0..=n_max {
            for k in 1..=AGREEMENT_K_MAX {
                let lhs = coface_shape(fin(i64::from(k)), n)?.full_cube_degree();
                let rhs = fin((i64::from(n) + 2) * i64::from(k) - AGREEMENT_C);
                verdict.check(Check::new(
                    format!("(a) n={n} k_rel={k}"),
                    rhs,
                    lhs,
                    Relation::AtLeast,
                ));
            }
        }
        let mut evidence = Vec::new();
        for n in 1..=n_max {
            for k in 0..=k_max {
                let cell = self.tower_vs_taylor(n, k, r)?;
                verdict.condition(format!("(b) cell n={n} k={k} verified"), cell.pass());
                let computed = *cell.verdict.computed.last().expect("one check");
                verdict.check(Check::new(
                    format!("(b) n={n} k={k}"),
                    fin(i64::from(n) + 1),
                    computed,
                    Relation::Equal,
                ));
                evidence.extend(
                    cell.evidence
                        .into_iter()
                        .filter(|e| matches!(e.kind, EvidenceKind::Rules(_))),
                );
            }
        }
        Ok(Report::new(verdict, evidence))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn engine() -> Engine {
        Engine::default()
    }

    const R1: Exponent = Exponent::ONE;

    #[test]
    fn comparison_examples() {
        let e = engine();
        assert_eq!(
            e.verify_comparison(fin(1), R1).unwrap().verdict.computed,
            vec![fin(3)]
        );
        assert_eq!(
            e.verify_comparison(fin(0), R1).unwrap().verdict.computed,
            vec![fin(1)]
        );
        let stable = e.verify_comparison(fin(2), Exponent::Stable).unwrap();
        assert_eq!(stable.verdict.computed, vec![fin(5)]);
        assert!(stable.pass());
        assert!(e.verify_comparison(fin(-1), R1).is_err());
        let inf = e.verify_comparison(Degree::Infinite, R1).unwrap();
        assert!(inf.pass());
    }

    #[test]
    fn comparison_stage_connectivities() {
        let report = engine()
            .verify_comparison(fin(1), Exponent::Finite(3))
            .unwrap();
        let composite = report.evidence.last().unwrap();
        match &composite.kind {
            EvidenceKind::Rules(o) => {
                let vals: Vec<_> = o[0].candidates.iter().map(|c| c.value).collect();
                assert_eq!(vals, vec![fin(3), fin(4), fin(5)]);
            }
            _ => panic!("expected rules"),
        }
    }

    #[test]
    fn coface_examples() {
        let e = engine();
        let p = e.coface_profile(fin(1), 0, R1).unwrap();
        assert_eq!((p.dim(), p.conn1()), (1, fin(3)));
        let p = e.coface_profile(fin(1), 2, R1).unwrap();
        assert_eq!(p.degrees(), &[fin(4), fin(5)]);
        assert_eq!(p.conn1(), fin(3));
        let p = e.coface_profile(fin(2), 1, R1).unwrap();
        assert_eq!((p.conn1(), p.degrees()), (fin(5), &[fin(7)][..]));
        assert!(e.coface_profile(fin(0), 1, R1).is_err());
    }

    #[test]
    fn corrupted_rules_break_the_cross_check() {
        let bad = Engine {
            rules: Rules {
                hbm_offset: 2,
                ..Rules::STANDARD
            },
            ..engine()
        };
        assert!(!bad.verify_comparison(fin(1), R1).unwrap().pass());
        assert!(matches!(
            bad.coface_profile(fin(1), 0, R1),
            Err(EstimateError::CrossCheck(_))
        ));
        let schedule = bad.completion_schedule(fin(1), R1, 3).unwrap();
        assert!(!schedule.pass());
        assert!(!bad.verify_fibration_completion(2, R1).unwrap().pass());
    }

    #[test]
    fn schedule_examples() {
        let e = engine();
        let s = e.completion_schedule(fin(1), R1, 5).unwrap();
        assert_eq!(s.verdict.computed, [3, 4, 5, 6, 7, 8].map(fin).to_vec());
        assert!(s.pass());
        let s = e.completion_schedule(fin(2), R1, 3).unwrap();
        assert_eq!(s.verdict.computed, [5, 7, 9, 11].map(fin).to_vec());
        assert!(e.completion_schedule(fin(0), R1, 3).is_err());
    }

    #[test]
    fn excisive_examples() {
        let e = engine();
        let v = e.verify_excisive_comparison(1, R1, 10).unwrap();
        assert!(v.pass());
        assert!(v.verdict.computed.iter().all(|&c| c == fin(2)));
        let v = e.verify_excisive_comparison(2, R1, 10).unwrap();
        assert!(v.pass());
        assert!(v.verdict.computed.iter().all(|&c| c == fin(3)));
        let v = e
            .verify_excisive_comparison(1, Exponent::Stable, 10)
            .unwrap();
        assert!(v.pass());
        assert_eq!(
            v.verdict.computed,
            vec![Degree::Infinite, fin(2), fin(2), fin(2)]
        );
        assert!(e.verify_excisive_comparison(0, R1, 10).is_err());
        // a bound too small to observe stabilization fails
        assert!(!e.verify_excisive_comparison(2, R1, 1).unwrap().pass());
    }

    #[test]
    fn tower_examples() {
        let e = engine();
        for n in 1..=4 {
            for k in [1, 2] {
                let t = e.tower_vs_taylor(n, k, R1).unwrap();
                assert_eq!(t.verdict.computed, vec![fin(i64::from(n) + 1)]);
                assert!(t.pass());
            }
        }
        assert_eq!(
            e.tower_vs_taylor(3, 5, R1).unwrap().verdict.computed,
            vec![fin(4)]
        );
        assert!(e.tower_vs_taylor(0, 1, R1).is_err());
    }

    #[test]
    fn tower_k1_chain() {
        let t = engine().tower_vs_taylor(1, 1, R1).unwrap();
        let log = match &t.evidence.last().unwrap().kind {
            EvidenceKind::Rules(log) => log.clone(),
            _ => panic!(),
        };
        let chain: Vec<_> = log.iter().map(|o| (o.rule, o.result)).collect();
        assert_eq!(
            chain,
            vec![
                (Rule::FrSquareFromLegs, fin(2)),
                (Rule::FrSourceFromTotal, fin(2)),
                (Rule::FrParallelMap, fin(2)),
            ]
        );
    }

    #[test]
    fn id_plus_one_examples() {
        let e = engine();
        assert!(e.verify_id_plus_one_preserved(3, R1).unwrap().pass());
        assert!(e.verify_id_plus_one_preserved(6, R1).unwrap().pass());
        assert!(e
            .verify_id_plus_one_preserved(3, Exponent::Stable)
            .unwrap()
            .pass());
        assert!(e.verify_id_plus_one_preserved(0, R1).is_err());
    }

    #[test]
    fn fibration_examples() {
        let e = engine();
        let v = e.verify_fibration_completion(4, R1).unwrap();
        assert_eq!(v.verdict.computed, [2, 3, 4, 5, 6].map(fin).to_vec());
        assert!(v.pass());
        let v = e.verify_fibration_completion(0, R1).unwrap();
        assert_eq!(v.verdict.computed, vec![fin(2)]);
        let v = e.verify_fibration_completion(4, Exponent::Stable).unwrap();
        assert_eq!(v.verdict.computed, [2, 3, 4, 5, 6].map(fin).to_vec());
        assert!(v.pass());
    }

    #[test]
    fn interchange_examples() {
        let e = engine();
        let v = e.taylor_interchange_report(4, 4, R1).unwrap();
        assert!(v.pass());
        let first = &v.verdict.checks[0];
        assert_eq!((first.expected, first.computed), (fin(3), fin(3)));
        let cell = v
            .verdict
            .checks
            .iter()
            .find(|c| c.label == "(b) n=1 k=0")
            .unwrap();
        assert_eq!(cell.computed, fin(2));
    }

    #[test]
    fn verdicts_are_reproducible() {
        let e = engine();
        assert_eq!(
            e.taylor_interchange_report(2, 2, Exponent::Stable).unwrap(),
            e.taylor_interchange_report(2, 2, Exponent::Stable).unwrap()
        );
    }
}
