//! Exhaustive enumerators used as ground truth for the partition-counting families.
//!
//! Unordered partitions are walked as restricted growth strings: element `i`
//! goes into an existing block or opens block `max + 1`. Distinguished
//! elements `0..r` are pinned to blocks `0..r`, which is exactly the
//! "pairwise separated" condition. Ordered (Lah-type) blocks weight each
//! partition by the number of linear orders of its blocks.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::Int;

/// Largest ground set the enumerators accept.
pub const SIZE_LIMIT: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    pub total: usize,
    pub blocks: usize,
    pub distinguished: usize,
    pub ordered_blocks: bool,
}

impl PartitionSpec {
    pub fn stirling(total: usize, blocks: usize) -> Self {
        PartitionSpec { total, blocks, distinguished: 0, ordered_blocks: false }
    }

    pub fn lah(total: usize, blocks: usize) -> Self {
        PartitionSpec { total, blocks, distinguished: 0, ordered_blocks: true }
    }

    /// Shifted r-family entry `(n, k)`: `n + r` elements, `k + r` blocks.
    pub fn shifted(n: usize, k: usize, r: usize, ordered_blocks: bool) -> Self {
        PartitionSpec { total: n + r, blocks: k + r, distinguished: r, ordered_blocks }
    }
}

fn guard(total: usize, distinguished: usize) -> Result<()> {
    if total > SIZE_LIMIT {
        return Err(Error::SizeGuard { total, limit: SIZE_LIMIT });
    }
    if distinguished > total {
        return Err(Error::InvalidParameter(format!(
            "{distinguished} distinguished elements in a {total}-set"
        )));
    }
    Ok(())
}

struct Walker {
    total: usize,
    ordered: bool,
    max_blocks: usize,
    sizes: Vec<usize>,
    tally: Vec<u64>,
}

impl Walker {
    fn weight(&self) -> u64 {
        if !self.ordered {
            return 1;
        }
        self.sizes.iter().map(|&s| (1..=s as u64).product::<u64>()).product()
    }

    fn walk(&mut self, next: usize) {
        if next == self.total {
            let w = self.weight();
            self.tally[self.sizes.len()] += w;
            return;
        }
        for b in 0..self.sizes.len() {
            self.sizes[b] += 1;
            self.walk(next + 1);
            self.sizes[b] -= 1;
        }
        if self.sizes.len() < self.max_blocks {
            self.sizes.push(1);
            self.walk(next + 1);
            self.sizes.pop();
        }
    }
}

/// Counts indexed by number of blocks, `0..=total`.
fn tally(total: usize, distinguished: usize, ordered: bool, max_blocks: usize) -> Vec<u64> {
    let mut w = Walker {
        total,
        ordered,
        max_blocks,
        sizes: vec![1; distinguished],
        tally: vec![0; total + 1],
    };
    if distinguished <= max_blocks {
        w.walk(distinguished);
    }
    w.tally
}

pub fn count_partitions(spec: PartitionSpec) -> Result<Int> {
    guard(spec.total, spec.distinguished)?;
    if spec.blocks > spec.total {
        return Ok(BigInt::from(0));
    }
    let t = tally(spec.total, spec.distinguished, spec.ordered_blocks, spec.blocks);
    Ok(BigInt::from(t[spec.blocks]))
}

/// Sum over every block count.
pub fn count_all_partitions(total: usize, distinguished: usize, ordered: bool) -> Result<Int> {
    guard(total, distinguished)?;
    let t = tally(total, distinguished, ordered, total);
    Ok(BigInt::from(t.iter().sum::<u64>()))
}

/// Permutations of a `total`-set with `cycles` cycles where elements `0..r` lie in distinct cycles.
///
/// Walks all permutations, so the guard is tighter than for partitions.
pub fn count_permutations_by_cycles(total: usize, cycles: usize, distinguished: usize) -> Result<Int> {
    const LIMIT: usize = 9;
    if total > LIMIT {
        return Err(Error::SizeGuard { total, limit: LIMIT });
    }
    guard(total, distinguished)?;
    let mut perm: Vec<usize> = (0..total).collect();
    let mut count = 0u64;
    loop {
        if cycle_check(&perm, cycles, distinguished) {
            count += 1;
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(BigInt::from(count))
}

fn cycle_check(perm: &[usize], cycles: usize, distinguished: usize) -> bool {
    let mut label = vec![usize::MAX; perm.len()];
    let mut found = 0;
    for start in 0..perm.len() {
        if label[start] != usize::MAX {
            continue;
        }
        let mut i = start;
        while label[i] == usize::MAX {
            label[i] = found;
            i = perm[i];
        }
        found += 1;
    }
    let mut seen = vec![false; found];
    for &c in &label[..distinguished] {
        if seen[c] {
            return false;
        }
        seen[c] = true;
    }
    found == cycles
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).expect("pivot has a successor");
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn stirling_and_bell_counts() {
        assert_eq!(count_partitions(PartitionSpec::stirling(4, 2)).unwrap(), int(7));
        assert_eq!(count_partitions(PartitionSpec::stirling(6, 3)).unwrap(), int(90));
        assert_eq!(count_all_partitions(6, 0, false).unwrap(), int(203));
        assert_eq!(count_all_partitions(1, 0, false).unwrap(), int(1));
        assert_eq!(count_all_partitions(0, 0, false).unwrap(), int(1));
    }

    #[test]
    fn full_block_count_is_one() {
        for n in 0..=6 {
            assert_eq!(count_partitions(PartitionSpec::stirling(n, n)).unwrap(), int(1));
            assert_eq!(count_partitions(PartitionSpec::lah(n, n)).unwrap(), int(1));
        }
    }

    #[test]
    fn lah_counts() {
        assert_eq!(count_partitions(PartitionSpec::lah(3, 1)).unwrap(), int(6));
        assert_eq!(count_partitions(PartitionSpec::lah(4, 2)).unwrap(), int(36));
    }

    #[test]
    fn distinguished_counts() {
        let spec = PartitionSpec { total: 4, blocks: 3, distinguished: 2, ordered_blocks: true };
        assert_eq!(count_partitions(spec).unwrap(), int(10));
        assert_eq!(count_all_partitions(3, 2, false).unwrap(), int(3));
        assert_eq!(count_partitions(PartitionSpec::shifted(1, 0, 2, false)).unwrap(), int(2));
        // Too few blocks to separate the distinguished elements.
        let spec = PartitionSpec { total: 4, blocks: 1, distinguished: 2, ordered_blocks: false };
        assert_eq!(count_partitions(spec).unwrap(), int(0));
    }

    #[test]
    fn size_guard() {
        assert!(matches!(
            count_partitions(PartitionSpec::stirling(13, 2)),
            Err(Error::SizeGuard { total: 13, limit: 12 })
        ));
        assert!(count_all_partitions(13, 0, true).is_err());
        assert!(count_partitions(PartitionSpec { total: 2, blocks: 2, distinguished: 3, ordered_blocks: false }).is_err());
    }

    #[test]
    fn cycle_counts() {
        // Unsigned Stirling numbers of the first kind, c(4, 2) = 11.
        assert_eq!(count_permutations_by_cycles(4, 2, 0).unwrap(), int(11));
        // Shifted r = 2: 4 elements, 3 cycles, 0 and 1 apart -> 5.
        assert_eq!(count_permutations_by_cycles(4, 3, 2).unwrap(), int(5));
        assert!(count_permutations_by_cycles(10, 2, 0).is_err());
    }
}
