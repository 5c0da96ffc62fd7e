//! Streaming enumerators for the combinatorial index sets the evaluators
//! sum over: positive and nonnegative compositions, ordered set partitions
//! with possibly empty blocks, set partitions with prescribed block sizes,
//! ordered sub-tuples of distinct indices, and cyclic shifts with
//! positional provenance.
//!
//! Every stream is lazy and restartable (construct a new iterator to
//! restart); none of the index sets is ever materialized, since the set
//! partition family alone grows as `p^n`. All streams yield in a fixed
//! deterministic (lexicographic) order and never repeat an item.

use alloc::vec;
use alloc::vec::Vec;

/// Ordered tuple of counts. Positive compositions have all parts `>= 1`;
/// nonnegative compositions allow zeros. Both sum to the `n` they were
/// generated for.
pub type Composition = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EnumerateError {
    /// `cyclic_shift` needs at least one element.
    EmptyTuple,
    /// Block sizes do not sum to the ground-set size.
    SizeMismatch { n: u64, sum: u64 },
}

impl core::fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            EnumerateError::EmptyTuple => write!(f, "cannot shift an empty tuple"),
            EnumerateError::SizeMismatch { n, sum } => {
                write!(f, "block sizes sum to {sum} but ground set has {n} elements")
            }
        }
    }
}

impl core::error::Error for EnumerateError {}

/// All `k`-tuples of nonnegative integers summing to `n`, lexicographic.
///
/// There are `C(n+k-1, k-1)` of them.
pub fn nonneg_compositions(n: u32, k: usize) -> NonnegCompositions {
    assert!(k >= 1, "composition length must be positive");
    let mut first = vec![0u32; k];
    first[k - 1] = n;
    NonnegCompositions {
        current: Some(first),
    }
}

#[derive(Debug, Clone)]
pub struct NonnegCompositions {
    current: Option<Composition>,
}

impl Iterator for NonnegCompositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        let out = self.current.clone()?;
        let c = self.current.as_mut().unwrap();
        let k = c.len();
        // Successor in lex order: bump the rightmost position that has
        // mass strictly to its right, then flush that mass to the end.
        let mut advanced = false;
        let mut suffix = 0u32;
        for j in (0..k.saturating_sub(1)).rev() {
            suffix += c[j + 1];
            if suffix > 0 {
                c[j] += 1;
                for x in &mut c[j + 1..] {
                    *x = 0;
                }
                c[k - 1] = suffix - 1;
                advanced = true;
                break;
            }
        }
        if !advanced {
            self.current = None;
        }
        Some(out)
    }
}

/// All `k`-tuples of positive integers summing to `n`, lexicographic.
///
/// There are `C(n-1, k-1)` of them; the stream is empty when `n < k`.
pub fn compositions(n: u32, k: usize) -> Compositions {
    assert!(k >= 1, "composition length must be positive");
    let inner = if n < k as u32 {
        None
    } else {
        Some(nonneg_compositions(n - k as u32, k))
    };
    Compositions { inner }
}

#[derive(Debug, Clone)]
pub struct Compositions {
    inner: Option<NonnegCompositions>,
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        // Shifting every part by one is a lex-order-preserving bijection
        // with the nonnegative compositions of n - k.
        let mut c = self.inner.as_mut()?.next()?;
        for x in &mut c {
            *x += 1;
        }
        Some(c)
    }
}

/// Ordered tuple of pairwise-disjoint index blocks covering a ground set
/// `0..n`. Blocks may be empty; block order is significant; order within a
/// block is not (blocks are kept sorted).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderedSetPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks (including empty ones).
    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }
}

/// Every assignment of the ground set `0..ground_size` to `p` labeled
/// blocks, in lexicographic order of the assignment word. There are
/// `p^ground_size` of them (one, all blocks empty, for the empty ground
/// set).
pub fn ordered_set_partitions(ground_size: usize, p: usize) -> OrderedSetPartitions {
    assert!(p >= 1, "need at least one block");
    OrderedSetPartitions {
        assignment: vec![0; ground_size],
        p,
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct OrderedSetPartitions {
    assignment: Vec<usize>,
    p: usize,
    done: bool,
}

fn blocks_from_assignment(assignment: &[usize], p: usize) -> OrderedSetPartition {
    let mut blocks = vec![Vec::new(); p];
    for (element, &block) in assignment.iter().enumerate() {
        blocks[block].push(element);
    }
    OrderedSetPartition { blocks }
}

impl Iterator for OrderedSetPartitions {
    type Item = OrderedSetPartition;

    fn next(&mut self) -> Option<OrderedSetPartition> {
        if self.done {
            return None;
        }
        let out = blocks_from_assignment(&self.assignment, self.p);
        // Base-p odometer, last element fastest.
        let mut i = self.assignment.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.assignment[i] + 1 < self.p {
                self.assignment[i] += 1;
                for x in &mut self.assignment[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Set partitions of `0..n` whose block `i` has exactly `sizes[i]`
/// elements, in lexicographic order of the assignment word. There are
/// `multinomial(n, sizes)` of them.
pub fn sized_set_partitions(n: usize, sizes: &[u32]) -> Result<SizedSetPartitions, EnumerateError> {
    let sum: u64 = sizes.iter().map(|&s| s as u64).sum();
    if sum != n as u64 {
        return Err(EnumerateError::SizeMismatch { n: n as u64, sum });
    }
    // Smallest assignment word for these block sizes: 0^sizes[0] 1^sizes[1] ...
    let mut word = Vec::with_capacity(n);
    for (block, &size) in sizes.iter().enumerate() {
        for _ in 0..size {
            word.push(block);
        }
    }
    Ok(SizedSetPartitions {
        word,
        p: sizes.len(),
        done: false,
    })
}

#[derive(Debug, Clone)]
pub struct SizedSetPartitions {
    word: Vec<usize>,
    p: usize,
    done: bool,
}

// Standard next-permutation; stepping through all distinct permutations of
// the multiset word enumerates exactly the partitions with the given sizes.
fn next_permutation(word: &mut [usize]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

impl Iterator for SizedSetPartitions {
    type Item = OrderedSetPartition;

    fn next(&mut self) -> Option<OrderedSetPartition> {
        if self.done {
            return None;
        }
        let out = blocks_from_assignment(&self.word, self.p);
        if !next_permutation(&mut self.word) {
            self.done = true;
        }
        Some(out)
    }
}

/// Ordered `d`-tuple of distinct positions into a signature.
pub type OrderedSubtuple = Vec<usize>;

/// All ordered `d`-tuples of distinct indices from `0..n`, lexicographic.
/// There are `n!/(n-d)!` of them.
pub fn ordered_subtuples(n: usize, d: usize) -> OrderedSubtuples {
    assert!(d >= 1 && d <= n, "need 1 <= d <= n");
    let current: Vec<usize> = (0..d).collect();
    let mut used = vec![false; n];
    for &i in &current {
        used[i] = true;
    }
    OrderedSubtuples {
        n,
        current,
        used,
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct OrderedSubtuples {
    n: usize,
    current: Vec<usize>,
    used: Vec<bool>,
    done: bool,
}

impl Iterator for OrderedSubtuples {
    type Item = OrderedSubtuple;

    fn next(&mut self) -> Option<OrderedSubtuple> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        // Advance the rightmost position that can move to a larger unused
        // index, then refill the tail with the smallest unused indices.
        let d = self.current.len();
        let mut pos = d;
        loop {
            if pos == 0 {
                self.done = true;
                return Some(out);
            }
            pos -= 1;
            let old = self.current[pos];
            self.used[old] = false;
            if let Some(next) = (old + 1..self.n).find(|&v| !self.used[v]) {
                self.used[next] = true;
                self.current[pos] = next;
                let mut fill = 0;
                for slot in pos + 1..d {
                    while self.used[fill] {
                        fill += 1;
                    }
                    self.used[fill] = true;
                    self.current[slot] = fill;
                }
                return Some(out);
            }
        }
    }
}

/// Left cyclic shift by `t`, keeping the original index of each element.
///
/// `result[i] = (orig, value)` where `orig = (i + t) mod len`. The
/// provenance matters because downstream bookkeeping is positional: equal
/// values at different positions must stay distinguishable through the
/// shift.
pub fn cyclic_shift<T: Clone>(
    tuple: &[T],
    t: usize,
) -> Result<Vec<(usize, T)>, EnumerateError> {
    if tuple.is_empty() {
        return Err(EnumerateError::EmptyTuple);
    }
    let len = tuple.len();
    let t = t % len;
    Ok((0..len)
        .map(|i| {
            let orig = (i + t) % len;
            (orig, tuple[orig].clone())
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::{binomial, multinomial};
    use alloc::collections::BTreeSet;
    use num_bigint::BigUint;
    use proptest::prelude::*;

    // Independent generation oracle: plain recursion, no iterator logic.
    fn brute_nonneg(n: u32, k: usize) -> Vec<Composition> {
        if k == 1 {
            return vec![vec![n]];
        }
        let mut out = Vec::new();
        for first in 0..=n {
            for mut rest in brute_nonneg(n - first, k - 1) {
                let mut c = vec![first];
                c.append(&mut rest);
                out.push(c);
            }
        }
        out
    }

    fn brute_positive(n: u32, k: usize) -> Vec<Composition> {
        brute_nonneg(n, k)
            .into_iter()
            .filter(|c| c.iter().all(|&x| x >= 1))
            .collect()
    }

    #[test]
    fn compositions_examples() {
        let got: Vec<_> = compositions(4, 2).collect();
        assert_eq!(got, vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(1, 2).count(), 0);
        let five_three: Vec<_> = compositions(5, 3).collect();
        assert_eq!(five_three.len(), 6);
        assert_eq!(five_three, brute_positive(5, 3));
    }

    #[test]
    fn nonneg_examples() {
        let got: Vec<_> = nonneg_compositions(2, 2).collect();
        assert_eq!(got, vec![vec![0, 2], vec![1, 1], vec![2, 0]]);
        let zero: Vec<_> = nonneg_compositions(0, 3).collect();
        assert_eq!(zero, vec![vec![0, 0, 0]]);
        let three_three: Vec<_> = nonneg_compositions(3, 3).collect();
        assert_eq!(three_three.len(), 10);
        assert_eq!(three_three, brute_nonneg(3, 3));
    }

    #[test]
    fn composition_counts_match_binomials() {
        for n in 0..=10u32 {
            for k in 1..=8usize {
                let pos = compositions(n, k).count();
                // |C_n(k)| = C(n-1, k-1), with the n = 0 family empty.
                let expected = if n == 0 {
                    BigUint::from(0u32)
                } else {
                    binomial((n - 1) as u64, k as i64 - 1)
                };
                assert_eq!(BigUint::from(pos), expected, "positive count n={n} k={k}");
                let nn = nonneg_compositions(n, k).count();
                assert_eq!(
                    BigUint::from(nn),
                    binomial((n as u64) + (k as u64) - 1, k as i64 - 1),
                    "nonneg count n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn set_partition_examples() {
        let got: Vec<_> = ordered_set_partitions(1, 2).collect();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].blocks(), &[vec![0], vec![]]);
        assert_eq!(got[1].blocks(), &[vec![], vec![0]]);

        let empty_ground: Vec<_> = ordered_set_partitions(0, 3).collect();
        assert_eq!(empty_ground.len(), 1);
        assert_eq!(empty_ground[0].blocks(), &[vec![], vec![], vec![]]);

        assert_eq!(ordered_set_partitions(3, 2).count(), 8);
    }

    #[test]
    fn set_partition_counts() {
        for s in 0..=6usize {
            for p in 1..=4usize {
                assert_eq!(ordered_set_partitions(s, p).count(), p.pow(s as u32));
            }
        }
    }

    #[test]
    fn sized_partition_examples() {
        let got: Vec<_> = sized_set_partitions(2, &[1, 1]).unwrap().collect();
        assert_eq!(got.len(), 2);
        assert_eq!(got[0].blocks(), &[vec![0], vec![1]]);
        assert_eq!(got[1].blocks(), &[vec![1], vec![0]]);

        assert_eq!(sized_set_partitions(4, &[2, 2]).unwrap().count(), 6);
        assert_eq!(sized_set_partitions(5, &[1, 2, 2]).unwrap().count(), 30);
        assert!(sized_set_partitions(5, &[1, 1]).is_err());
    }

    #[test]
    fn sized_partition_counts_match_multinomial() {
        for n in 0..=8u32 {
            for k in 1..=4usize {
                let mut union_total = 0u64;
                for sizes in compositions(n, k) {
                    let count = sized_set_partitions(n as usize, &sizes).unwrap().count();
                    let sizes64: Vec<u64> = sizes.iter().map(|&s| s as u64).collect();
                    assert_eq!(
                        BigUint::from(count),
                        multinomial(n as u64, &sizes64).unwrap(),
                        "n={n} sizes={sizes:?}"
                    );
                    union_total += count as u64;
                }
                // The union over all positive size profiles is exactly the
                // family of length-k partitions with nonempty blocks, i.e.
                // the surjective assignments.
                let surjections = ordered_set_partitions(n as usize, k)
                    .filter(|partition| partition.blocks().iter().all(|b| !b.is_empty()))
                    .count() as u64;
                assert_eq!(union_total, surjections, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn subtuple_examples() {
        let got: Vec<_> = ordered_subtuples(2, 2).collect();
        assert_eq!(got, vec![vec![0, 1], vec![1, 0]]);
        let singles: Vec<_> = ordered_subtuples(3, 1).collect();
        assert_eq!(singles, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(ordered_subtuples(4, 2).count(), 12);
    }

    #[test]
    fn subtuple_counts_are_falling_factorials() {
        for n in 1..=7usize {
            for d in 1..=n {
                let expected: usize = (n - d + 1..=n).product();
                assert_eq!(ordered_subtuples(n, d).count(), expected);
            }
        }
    }

    #[test]
    fn streams_yield_distinct_items() {
        let all: Vec<_> = ordered_set_partitions(5, 3).collect();
        let dedup: BTreeSet<_> = all.iter().cloned().collect();
        assert_eq!(all.len(), dedup.len());

        let tuples: Vec<_> = ordered_subtuples(5, 3).collect();
        let dedup: BTreeSet<_> = tuples.iter().cloned().collect();
        assert_eq!(tuples.len(), dedup.len());

        let comps: Vec<_> = nonneg_compositions(6, 4).collect();
        let dedup: BTreeSet<_> = comps.iter().cloned().collect();
        assert_eq!(comps.len(), dedup.len());
    }

    #[test]
    fn shift_examples() {
        let shifted = cyclic_shift(&['a', 'b', 'c'], 1).unwrap();
        let values: Vec<char> = shifted.iter().map(|&(_, v)| v).collect();
        assert_eq!(values, vec!['b', 'c', 'a']);

        let identity = cyclic_shift(&['a', 'b', 'c'], 0).unwrap();
        let values: Vec<char> = identity.iter().map(|&(_, v)| v).collect();
        assert_eq!(values, vec!['a', 'b', 'c']);

        // Equal values stay distinguishable through their original index.
        let equal = cyclic_shift(&[1, 1], 1).unwrap();
        assert_eq!(equal, vec![(1, 1), (0, 1)]);

        assert!(cyclic_shift::<u32>(&[], 1).is_err());
    }

    proptest! {
        #[test]
        fn shift_then_complement_is_identity(
            values in proptest::collection::vec(0u32..100, 1..12),
            t in 0usize..24,
        ) {
            let len = values.len();
            let once = cyclic_shift(&values, t).unwrap();
            let shifted: Vec<u32> = once.iter().map(|&(_, v)| v).collect();
            let back = cyclic_shift(&shifted, (len - t % len) % len).unwrap();
            let final_values: Vec<u32> = back.iter().map(|&(_, v)| v).collect();
            prop_assert_eq!(final_values, values);
        }

        #[test]
        fn compositions_respect_sum_and_length(n in 0u32..12, k in 1usize..6) {
            for c in compositions(n, k) {
                prop_assert_eq!(c.len(), k);
                prop_assert!(c.iter().all(|&x| x >= 1));
                prop_assert_eq!(c.iter().sum::<u32>(), n);
            }
            for c in nonneg_compositions(n, k) {
                prop_assert_eq!(c.len(), k);
                prop_assert_eq!(c.iter().sum::<u32>(), n);
            }
        }
    }
}
