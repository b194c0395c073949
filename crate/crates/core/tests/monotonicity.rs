mod common;

use bkcube_core::rules::{self, Rules};
use bkcube_core::Degree;
use common::grid;

/// Checks `f(v) <= f(v')` for every `v` in `grid^arity` and every `v'`
/// that raises one coordinate of `v` to the next grid value. Monotonicity
/// along single steps gives it for every single-coordinate raise by
/// transitivity. Values are computed once and indexed in mixed radix.
fn assert_monotone(name: &str, arity: usize, f: impl Fn(&[Degree]) -> Degree) {
    let g = grid();
    let base = g.len();
    let total = base.pow(arity as u32);
    let decode = |mut idx: usize| {
        let mut v = Vec::with_capacity(arity);
        for _ in 0..arity {
            v.push(g[idx % base]);
            idx /= base;
        }
        v
    };
    let values: Vec<Degree> = (0..total).map(|i| f(&decode(i))).collect();
    for (idx, &here) in values.iter().enumerate() {
        let mut stride = 1;
        for i in 0..arity {
            // grid() is sorted, so the next value is one index up
            if (idx / stride) % base + 1 < base {
                assert!(
                    values[idx + stride] >= here,
                    "{name}: raising input {i} of {:?} lowered the result",
                    decode(idx)
                );
            }
            stride *= base;
        }
    }
}

#[test]
fn blakers_massey_rules_are_monotone() {
    for d in 2..=5u32 {
        let arity = d as usize;
        assert_monotone("hbm", arity, |v| {
            rules::hbm_cartesian(d, v[0], &v[1..]).unwrap().result
        });
        assert_monotone("dual hbm", arity, |v| {
            rules::dual_hbm_cocartesian(d, v[0], &v[1..])
                .unwrap()
                .result
        });
    }
}

#[test]
fn stable_and_face_rules_are_monotone() {
    for d in 1..=5u32 {
        assert_monotone("stable cart", 1, |v| {
            rules::stable_cart_from_cocart(d, v[0]).unwrap()
        });
        assert_monotone("stable cocart", 1, |v| {
            rules::stable_cocart_from_cart(d, v[0]).unwrap()
        });
    }
    assert_monotone("square from legs", 1, |v| {
        rules::fr_square_from_legs(v[0]).unwrap()
    });
    assert_monotone("source from total", 2, |v| {
        rules::fr_source_from_total(v[0], v[1])
    });
    assert_monotone("total from faces", 2, |v| {
        rules::fr_total_from_faces(v[0], v[1]).unwrap()
    });
    assert_monotone("parallel map", 2, |v| rules::fr_parallel_map(v[0], v[1]));
    assert_monotone("compose", 3, |v| rules::compose_connectivity(v).unwrap());
    assert_monotone("object to map", 1, |v| {
        rules::object_to_map_connectivity(v[0]).unwrap()
    });
}

#[test]
fn all_infinite_inputs_give_infinity() {
    let inf = Degree::Infinite;
    let r = Rules::STANDARD;
    for d in 2..=6u32 {
        let faces = vec![inf; d as usize - 1];
        assert_eq!(r.hbm_cartesian(d, inf, &faces).unwrap().result, inf);
        assert_eq!(r.dual_hbm_cocartesian(d, inf, &faces).unwrap().result, inf);
        assert_eq!(r.stable_cart_from_cocart(d, inf).unwrap().result, inf);
        assert_eq!(r.stable_cocart_from_cart(d, inf).unwrap().result, inf);
    }
    assert_eq!(rules::fr_square_from_legs(inf).unwrap(), inf);
    assert_eq!(rules::fr_source_from_total(inf, inf), inf);
    assert_eq!(rules::fr_total_from_faces(inf, inf).unwrap(), inf);
    assert_eq!(rules::fr_parallel_map(inf, inf), inf);
    assert_eq!(rules::compose_connectivity(&[inf, inf]).unwrap(), inf);
    assert_eq!(rules::object_to_map_connectivity(inf).unwrap(), inf);
}
