//! Integer partitions.
//!
//! For a cube whose estimates are uniform by dimension, the value a set
//! partition of `{1..d}` contributes to a Blakers-Massey minimum depends
//! only on its block sizes, so the rules enumerate integer partitions.

use alloc::vec::Vec;

use crate::error::EstimateError;

/// A partition of an integer: parts in non-increasing order.
pub type Partition = Vec<u32>;

/// All partitions of `d`, each exactly once, in decreasing-lexicographic
/// order (`[3], [2,1], [1,1,1]`).
pub fn integer_partitions(d: u32) -> Result<Vec<Partition>, EstimateError> {
    if d < 1 {
        return Err(EstimateError::BadPartitionSize);
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(d, d, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=remaining.min(max_part)).rev() {
        current.push(part);
        fill(remaining - part, part, current, out);
        current.pop();
    }
}

/// Renders a partition as consecutive blocks of `{1..d}`, the way the
/// estimates are usually written: `[2, 1]` becomes `[[1, 2], [3]]`.
pub fn consecutive_blocks(partition: &[u32]) -> Vec<Vec<u32>> {
    let mut next = 1;
    partition
        .iter()
        .map(|&size| {
            let block = (next..next + size).collect();
            next += size;
            block
        })
        .collect()
}
