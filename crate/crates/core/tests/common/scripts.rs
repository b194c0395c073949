//! Generators for well-formed scripts.

use bkcube_core::script::{ApplyOp, Assertion, Cmp, Entry, ProfileDecl, Script, Stmt, Target};
use bkcube_core::{Degree, Exponent, Mode};
use proptest::prelude::*;

pub fn degree() -> impl Strategy<Value = Degree> {
    prop_oneof![
        6 => (-5i64..20).prop_map(Degree::Finite),
        1 => Just(Degree::Infinite),
    ]
}

pub fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Cartesian), Just(Mode::Cocartesian)]
}

pub fn decl() -> impl Strategy<Value = ProfileDecl> {
    let name = "[a-y][a-z0-9_]{0,6}"
        .prop_filter("keywords are reserved", |n| !KEYWORDS.contains(&n.as_str()));
    (1u32..6, degree(), mode(), name)
        .prop_flat_map(|(dim, conn1, mode, name)| {
            let faces: Vec<u32> = (2..=dim).collect();
            let n = faces.len();
            (
                Just(faces).prop_shuffle(),
                prop::collection::vec(degree(), n),
                Just((dim, conn1, mode, name)),
            )
        })
        .prop_map(|(faces, values, (dim, conn1, mode, name))| ProfileDecl {
            name,
            dim,
            conn1,
            entries: faces
                .into_iter()
                .zip(values)
                .map(|(index, value)| Entry { mode, index, value })
                .collect(),
        })
}

pub fn apply_op() -> impl Strategy<Value = ApplyOp> {
    let shift = prop::option::of(1u32..5);
    prop_oneof![
        Just(ApplyOp::Dualize),
        Just(ApplyOp::Hbm),
        Just(ApplyOp::Stable),
        shift.clone().prop_map(ApplyOp::Suspend),
        shift.prop_map(ApplyOp::Loop),
        prop::option::of(prop_oneof![
            (1u32..4).prop_map(Exponent::Finite),
            Just(Exponent::Stable)
        ])
        .prop_map(ApplyOp::Step),
    ]
}

pub fn assertion() -> impl Strategy<Value = Assertion> {
    let target = prop_oneof![
        Just(Target::Conn1),
        (mode(), 1u32..6).prop_map(|(m, d)| Target::Face(m, d)),
    ];
    let cmp = prop_oneof![Just(Cmp::Ge), Just(Cmp::Eq), Just(Cmp::Le)];
    (target, cmp, degree()).prop_map(|(target, cmp, value)| Assertion { target, cmp, value })
}

pub fn body_stmt() -> impl Strategy<Value = Stmt> {
    let leaf = prop_oneof![
        4 => apply_op().prop_map(Stmt::Apply),
        2 => assertion().prop_map(Stmt::Assert),
        1 => Just(Stmt::Print),
    ];
    leaf.prop_recursive(2, 12, 4, |inner| {
        (1u32..6, prop::collection::vec(inner, 0..4))
            .prop_map(|(count, body)| Stmt::Repeat { count, body })
    })
}

/// Valid scripts: empty, or a declaration first, unique names and any
/// statement mix.
pub fn script() -> impl Strategy<Value = Script> {
    prop_oneof![1 => Just(Script::default()), 12 => nonempty_script()]
}

pub fn nonempty_script() -> impl Strategy<Value = Script> {
    (
        decl(),
        prop::collection::vec((prop::bool::weighted(0.15), decl(), body_stmt()), 0..10),
    )
        .prop_map(|(first, rest)| {
            let mut statements = vec![Stmt::Profile(first)];
            for (declare, mut d, s) in rest {
                if declare {
                    d.name = format!("{}{}", d.name, statements.len());
                    statements.push(Stmt::Profile(d));
                } else {
                    statements.push(s);
                }
            }
            Script { statements }
        })
}

pub const KEYWORDS: &[&str] = &[
    "profile", "dim", "conn1", "cart", "cocart", "inf", "apply", "dualize", "hbm", "stable",
    "suspend", "loop", "step", "r", "assert", "repeat", "print",
];
