//! Brute-force oracles shared by the integration tests.
//!
//! Nothing here calls into the crate's partition or rule code: set
//! partitions come from restricted growth strings, and the Blakers-Massey
//! minima are taken over every set partition of `{1..d}` with the offsets
//! written out literally.

#![allow(dead_code)]

use bkcube_core::Degree;

pub mod scripts;

/// All set partitions of `{0..d}`, each as a list of blocks.
pub fn set_partitions(d: usize) -> Vec<Vec<Vec<usize>>> {
    // restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[..i])
    fn grow(a: &mut Vec<usize>, d: usize, out: &mut Vec<Vec<Vec<usize>>>) {
        if a.len() == d {
            let blocks = a.iter().copied().max().map_or(0, |m| m + 1);
            let mut p = vec![Vec::new(); blocks];
            for (elem, &b) in a.iter().enumerate() {
                p[b].push(elem);
            }
            out.push(p);
            return;
        }
        let top = a.iter().copied().max().map_or(0, |m| m + 1);
        for b in 0..=top {
            a.push(b);
            grow(a, d, out);
            a.pop();
        }
    }
    let mut out = Vec::new();
    if d > 0 {
        grow(&mut Vec::new(), d, &mut out);
    }
    out
}

/// Block sizes of a set partition, sorted decreasingly.
pub fn block_sizes(p: &[Vec<usize>]) -> Vec<u32> {
    let mut sizes: Vec<u32> = p.iter().map(|b| b.len() as u32).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    sizes
}

fn add(a: Degree, b: Degree) -> Degree {
    match (a, b) {
        (Degree::Finite(x), Degree::Finite(y)) => Degree::Finite(x + y),
        _ => Degree::Infinite,
    }
}

/// `min over set partitions P of {1..d}` of `offset + Σ_{B∈P} c(|B|)`,
/// where `c(1) = conn1` and `c(s) = faces[s - 2]`.
fn set_partition_minimum(d: usize, offset: i64, conn1: Degree, faces: &[Degree]) -> Degree {
    set_partitions(d)
        .iter()
        .map(|p| {
            p.iter().fold(Degree::Finite(offset), |acc, block| {
                let c = if block.len() == 1 {
                    conn1
                } else {
                    faces[block.len() - 2]
                };
                add(acc, c)
            })
        })
        .min()
        .expect("d >= 1 has a partition")
}

/// Cartesian degree of a `d`-cube from cocartesian face estimates.
pub fn oracle_hbm(d: usize, conn1: Degree, cocart: &[Degree]) -> Degree {
    set_partition_minimum(d, 1 - d as i64, conn1, cocart)
}

/// Cocartesian degree of a `d`-cube from cartesian face estimates.
pub fn oracle_dual(d: usize, conn1: Degree, cart: &[Degree]) -> Degree {
    set_partition_minimum(d, d as i64 - 1, conn1, cart)
}

/// Bell numbers `B(0..=8)`.
pub const BELL: [usize; 9] = [1, 1, 2, 5, 15, 52, 203, 877, 4140];

/// The degree grid used by the exhaustive property tests.
pub fn grid() -> Vec<Degree> {
    let mut g: Vec<Degree> = (-2..=8).map(Degree::Finite).collect();
    g.push(Degree::Infinite);
    g
}
