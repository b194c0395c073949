//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if
//! any criterion fails. Run with `cargo test -p bkcube --test acceptance`.

#[path = "../../core/tests/common/mod.rs"]
mod oracle;

use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::ExitCode;

use bkcube::commands::{self, Streams};
use bkcube::markdown::candidate_expr;
use bkcube_core::pipeline::{Derivation, Step, Transform};
use bkcube_core::rules::{self, Rule, RuleOutcome, Rules};
use bkcube_core::script::parse;
use bkcube_core::theorems::{Engine, EvidenceKind, Report};
use bkcube_core::{Degree, Exponent, Profile};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

const EXPONENTS: [Exponent; 4] = [
    Exponent::Finite(1),
    Exponent::Finite(2),
    Exponent::Finite(3),
    Exponent::Stable,
];

fn f(v: i64) -> Degree {
    Degree::Finite(v)
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn derivation<'a>(r: &'a Report, id: &str) -> Result<&'a Derivation, String> {
    r.evidence
        .iter()
        .find(|e| e.id == id)
        .and_then(|e| match &e.kind {
            EvidenceKind::Derivation(d) => Some(d),
            EvidenceKind::Rules(_) => None,
        })
        .ok_or_else(|| format!("no derivation evidence `{id}`"))
}

fn step(d: &Derivation, iteration: u32, t: Transform) -> Result<&Step, String> {
    d.steps
        .iter()
        .find(|s| s.iteration == iteration && s.transform == t)
        .ok_or_else(|| format!("no {t} in iteration {iteration}"))
}

fn outcome(s: &Step, dim: u32) -> Result<&RuleOutcome, String> {
    s.outcomes
        .iter()
        .find(|o| o.dim == dim)
        .ok_or_else(|| format!("{} has no d={dim} outcome", s.transform))
}

/// Candidate arithmetic and minimum, e.g. `(["1+2", "1+1+1"], 3)`.
fn expect_minimum(o: &RuleOutcome, terms: &[&str], result: i64) -> Outcome {
    let got: Vec<String> = o.candidates.iter().map(candidate_expr).collect();
    ensure(got == terms && o.result == f(result), || {
        format!(
            "{} d={}: got {got:?} = {}, want {terms:?} = {result}",
            o.rule.name(),
            o.dim,
            o.result
        )
    })
}

fn expect_profile(s: &Step, want: &str) -> Outcome {
    ensure(s.profile.to_string() == want, || {
        format!("after {}: `{}`, want `{want}`", s.transform, s.profile)
    })
}

fn criterion_1() -> Outcome {
    let e = Engine::default();
    for k in 0..=6 {
        for r in EXPONENTS {
            let got = e.verify_comparison(f(k), r).map_err(|x| x.to_string())?;
            ensure(got.pass() && got.verdict.computed == [f(2 * k + 1)], || {
                format!("k={k} r={r}: {:?}", got.verdict.computed)
            })?;
        }
    }
    let r = e
        .verify_comparison(f(1), Exponent::ONE)
        .map_err(|x| x.to_string())?;
    let d = derivation(&r, "comparison/k=1/r=1/stage0")?;
    expect_minimum(
        outcome(step(d, 0, Transform::Cartesianize)?, 2)?,
        &["-1+inf", "-1+2+2"],
        3,
    )
}

fn criterion_2() -> Outcome {
    let e = Engine::default();
    let r = e
        .verify_excisive_comparison(1, Exponent::ONE, e.max_iters)
        .map_err(|x| x.to_string())?;
    ensure(r.pass(), || "verdict fails".into())?;
    let d = derivation(&r, "excisive/n=1/r=1")?;
    let dual = step(d, 2, Transform::Dualize)?;
    expect_minimum(outcome(dual, 2)?, &["1+2", "1+1+1"], 3)?;
    expect_profile(step(d, 2, Transform::Suspend(1))?, "cocart(2; 4)")?;
    let hbm = step(d, 2, Transform::Cartesianize)?;
    expect_minimum(outcome(hbm, 2)?, &["-1+4", "-1+2+2"], 3)?;
    expect_profile(step(d, 2, Transform::Loop(1))?, "cart(1; 2)")?;
    ensure(d.stabilized_at.is_some_and(|i| i <= 2), || {
        format!("stabilized at {:?}", d.stabilized_at)
    })
}

fn criterion_3() -> Outcome {
    let e = Engine::default();
    let r = e
        .verify_excisive_comparison(2, Exponent::ONE, e.max_iters)
        .map_err(|x| x.to_string())?;
    ensure(r.pass(), || "verdict fails".into())?;
    let d = derivation(&r, "excisive/n=2/r=1")?;
    let first = step(d, 1, Transform::Cartesianize)?;
    expect_minimum(outcome(first, 3)?, &["-2+inf", "-2+inf+2", "-2+2+2+2"], 4)?;
    let dual = step(d, 2, Transform::Dualize)?;
    expect_minimum(outcome(dual, 3)?, &["2+3", "2+2+1", "2+1+1+1"], 5)?;
    ensure(d.current().to_string() == "cart(1; 2, 3)", || {
        format!("stabilized profile `{}`", d.current())
    })?;
    ensure(d.stabilized_at == Some(2), || {
        format!("stabilized at {:?}", d.stabilized_at)
    })?;
    let fixed = e
        .verify_id_plus_one_preserved(3, Exponent::ONE)
        .map_err(|x| x.to_string())?;
    let d = derivation(&fixed, "id-plus-one/dim=3/r=1")?;
    expect_minimum(
        outcome(step(d, 1, Transform::Dualize)?, 3)?,
        &["2+4", "2+3+2", "2+2+2+2"],
        6,
    )
}

fn criterion_4() -> Outcome {
    let rules = Rules::STANDARD;
    for dim in 1..=6 {
        let p = Profile::id_plus_one(dim).map_err(|x| x.to_string())?;
        for r in EXPONENTS {
            let (out, _) = rules
                .omega_sigma_step(&p, r, false, 1)
                .map_err(|x| x.to_string())?;
            ensure(out == p, || format!("dim {dim} r={r}: `{p}` -> `{out}`"))?;
        }
    }
    let e = Engine::default();
    let fixed = e
        .verify_id_plus_one_preserved(3, Exponent::ONE)
        .map_err(|x| x.to_string())?;
    ensure(fixed.pass(), || "verdict fails".into())?;
    let d = derivation(&fixed, "id-plus-one/dim=3/r=1")?;
    expect_profile(step(d, 1, Transform::Dualize)?, "cocart(2; 4, 6)")?;
    expect_profile(step(d, 1, Transform::Suspend(1))?, "cocart(3; 5, 7)")?;
    let hbm = step(d, 1, Transform::Cartesianize)?;
    expect_minimum(outcome(hbm, 3)?, &["-2+7", "-2+5+3", "-2+3+3+3"], 5)?;
    expect_profile(step(d, 1, Transform::Loop(1))?, "cart(2; 3, 4)")
}

fn criterion_5() -> Outcome {
    let e = Engine::default();
    let want: Vec<Degree> = (3..=8).map(f).collect();
    for r in EXPONENTS {
        let s = e
            .completion_schedule(f(1), r, 5)
            .map_err(|x| x.to_string())?;
        ensure(s.pass() && s.verdict.computed == want, || {
            format!("r={r}: {:?}", s.verdict.computed)
        })?;
    }
    ensure(
        e.completion_schedule(f(0), Exponent::ONE, 5).is_err(),
        || "k=0 accepted".into(),
    )
}

fn criterion_6() -> Outcome {
    let e = Engine::default();
    for n in 1..=8u32 {
        for k in 0..=6u32 {
            let t = e
                .tower_vs_taylor(n, k, Exponent::ONE)
                .map_err(|x| x.to_string())?;
            ensure(
                t.pass() && t.verdict.computed == [f(i64::from(n) + 1)],
                || format!("n={n} k={k}: {:?}", t.verdict.computed),
            )?;
            if k != 1 {
                continue;
            }
            let id = format!("tower/n={n}/k=1/r=1/faces");
            let log = t
                .evidence
                .iter()
                .find_map(|ev| match &ev.kind {
                    EvidenceKind::Rules(log) if ev.id == id => Some(log),
                    _ => None,
                })
                .ok_or_else(|| format!("no evidence `{id}`"))?;
            let legs = f(i64::from(n) + 2);
            let face = f(i64::from(n) + 1);
            let square = log.first().ok_or("empty chain")?;
            // the square records `legs-1`; the final step records the leg itself
            ensure(
                square.rule == Rule::FrSquareFromLegs
                    && square
                        .candidates
                        .iter()
                        .map(candidate_expr)
                        .eq([format!("legs-1={face}")])
                    && square.result == face,
                || format!("n={n}: square step {square:?}"),
            )?;
            let map = log.last().ok_or("empty chain")?;
            let leg_term = format!("parallel_map={legs}");
            ensure(
                map.rule == Rule::FrParallelMap
                    && map
                        .candidates
                        .iter()
                        .map(candidate_expr)
                        .any(|t| t == leg_term)
                    && map.result == face,
                || format!("n={n}: map step {map:?}"),
            )?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    let e = Engine::default();
    let want: Vec<Degree> = (2..=6).map(f).collect();
    for r in [Exponent::ONE, Exponent::Stable] {
        let v = e
            .verify_fibration_completion(4, r)
            .map_err(|x| x.to_string())?;
        ensure(v.pass() && v.verdict.computed == want, || {
            format!("r={r}: {:?}", v.verdict.computed)
        })?;
    }
    Ok(())
}

fn run_cases<S: Strategy>(
    cases: u32,
    strategy: S,
    test: impl Fn(S::Value) -> Result<(), TestCaseError>,
) -> Outcome {
    let mut runner = TestRunner::new_with_rng(
        Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        },
        proptest::test_runner::TestRng::deterministic_rng(
            proptest::test_runner::RngAlgorithm::ChaCha,
        ),
    );
    runner.run(&strategy, test).map_err(|e| e.to_string())
}

fn criterion_8() -> Outcome {
    let grid = oracle::grid();
    for d in 2..=6usize {
        let input = prop::collection::vec(prop::sample::select(grid.clone()), d);
        run_cases(200, input, |v| {
            let hbm = rules::hbm_cartesian(d as u32, v[0], &v[1..])
                .unwrap()
                .result;
            prop_assert_eq!(hbm, oracle::oracle_hbm(d, v[0], &v[1..]));
            let dual = rules::dual_hbm_cocartesian(d as u32, v[0], &v[1..])
                .unwrap()
                .result;
            prop_assert_eq!(dual, oracle::oracle_dual(d, v[0], &v[1..]));
            Ok(())
        })
        .map_err(|e| format!("d={d}: {e}"))?;
    }
    Ok(())
}

/// Exhaustive over `grid^arity`: raising one input to the next grid value
/// never lowers `f`.
fn monotone(name: &str, arity: usize, f: impl Fn(&[Degree]) -> Degree) -> Outcome {
    let g = oracle::grid();
    let base = g.len();
    let decode = |mut idx: usize| -> Vec<Degree> {
        (0..arity)
            .map(|_| {
                let v = g[idx % base];
                idx /= base;
                v
            })
            .collect()
    };
    let values: Vec<Degree> = (0..base.pow(arity as u32)).map(|i| f(&decode(i))).collect();
    for (idx, &here) in values.iter().enumerate() {
        let mut stride = 1;
        for i in 0..arity {
            if (idx / stride) % base + 1 < base && values[idx + stride] < here {
                return Err(format!(
                    "{name}: raising input {i} of {:?} lowered it",
                    decode(idx)
                ));
            }
            stride *= base;
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for d in 2..=4u32 {
        let a = d as usize;
        monotone("hbm", a, |v| {
            rules::hbm_cartesian(d, v[0], &v[1..]).unwrap().result
        })?;
        monotone("dual hbm", a, |v| {
            rules::dual_hbm_cocartesian(d, v[0], &v[1..])
                .unwrap()
                .result
        })?;
    }
    for d in 1..=4u32 {
        monotone("stable cart", 1, |v| {
            rules::stable_cart_from_cocart(d, v[0]).unwrap()
        })?;
        monotone("stable cocart", 1, |v| {
            rules::stable_cocart_from_cart(d, v[0]).unwrap()
        })?;
    }
    monotone("square from legs", 1, |v| {
        rules::fr_square_from_legs(v[0]).unwrap()
    })?;
    monotone("source from total", 2, |v| {
        rules::fr_source_from_total(v[0], v[1])
    })?;
    monotone("total from faces", 2, |v| {
        rules::fr_total_from_faces(v[0], v[1]).unwrap()
    })?;
    monotone("parallel map", 2, |v| rules::fr_parallel_map(v[0], v[1]))?;
    monotone("compose", 3, |v| rules::compose_connectivity(v).unwrap())?;
    monotone("object to map", 1, |v| {
        rules::object_to_map_connectivity(v[0]).unwrap()
    })
}

fn run_script(engine: &Engine, path: &Path) -> i32 {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    commands::run(
        engine,
        path,
        None,
        &mut Streams {
            out: &mut out,
            err: &mut err,
        },
    )
}

fn criterion_10() -> Outcome {
    run_cases(1000, oracle::scripts::script(), |s| {
        let text = s.to_string();
        let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{e}\n{text}")))?;
        prop_assert_eq!(back, s);
        Ok(())
    })?;
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let fixtures = [
        (
            "pass.bkc",
            "profile p dim=3 { conn1=2, cart 2=3, cart 3=4 };\nrepeat 5 { apply step r=1; };\nassert conn1 = 2;\n",
            0,
        ),
        (
            "fail.bkc",
            "profile p dim=2 { conn1=1, cocart 2=inf };\napply step r=1;\nassert cart 2 >= 3;\n",
            1,
        ),
        ("parse.bkc", "profile p dim=2 { conn1=1, cocart 2=inf }\napply step;\n", 2),
    ];
    let engine = Engine::default();
    for (name, body, want) in fixtures {
        let path = dir.path().join(name);
        std::fs::write(&path, body).map_err(|e| e.to_string())?;
        let got = run_script(&engine, &path);
        ensure(got == want, || format!("{name}: exit {got}, want {want}"))?;
    }
    let got = run_script(&engine, &dir.path().join("missing.bkc"));
    ensure(got == 2, || format!("missing file: exit {got}"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("comparison map is (2k+1)-connected", criterion_1),
        ("excisive iterate trace, one-dimensional", criterion_2),
        ("excisive iterate trace, two-dimensional", criterion_3),
        ("(id+1) profiles are fixed points", criterion_4),
        ("completion schedule k=1", criterion_5),
        ("tower map vs Taylor stage", criterion_6),
        ("fibration completion schedule", criterion_7),
        ("set-partition oracle agrees", criterion_8),
        ("rules are monotone on the grid", criterion_9),
        ("script round-trip and run exit codes", criterion_10),
    ];
    panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let result =
            panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match result {
            Ok(()) => println!("PASS {} {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
