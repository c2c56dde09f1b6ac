//! Concrete poset families: Boolean lattices, symmetric groups under
//! refinement, partition lattices, and exact Stirling tables.

mod perm;
mod stirling;
mod symmetric;

pub use perm::{absolute_leq, Permutation};
pub use stirling::{stirling_row, StirlingKind, StirlingTable};
pub use symmetric::{
    check_absolute_reverse_refinement, decompose_copies, symmetric_group_refinement,
    CopyDecomposition, EdgeColor, SymmetricGroup,
};

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::poset::GradedPoset;
use crate::scalar::Scalar;

const MAX_BOOLEAN_N: usize = 20;
const MAX_PARTITION_N: usize = 9;

/// The Boolean lattice `B_n`: subsets of `{1, ..., n}` ordered by inclusion,
/// unit weights, rank = cardinality. Element id is the subset bitmask.
pub fn boolean_lattice<W: Scalar>(n: usize) -> Result<GradedPoset<W>> {
    if n > MAX_BOOLEAN_N {
        return Err(Error::SizeLimit {
            what: "boolean lattice",
            value: n,
            limit: MAX_BOOLEAN_N,
        });
    }
    let size = 1usize << n;
    let mut labels = Vec::with_capacity(size);
    let mut covers = Vec::new();
    for mask in 0..size {
        labels.push(subset_label(mask, n));
        for bit in 0..n {
            if mask & (1 << bit) == 0 {
                covers.push((mask, mask | (1 << bit)));
            }
        }
    }
    GradedPoset::new(labels, covers, vec![W::one(); size])
}

fn subset_label(mask: usize, n: usize) -> String {
    let members: Vec<String> = (0..n)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| (b + 1).to_string())
        .collect();
    format!("{{{}}}", members.join(","))
}

/// The partition lattice `Π_n`: set partitions of `{1, ..., n}` ordered by
/// refinement (finer below coarser), unit weights, rank = n - #blocks.
/// Ids follow the lexicographic order of restricted growth strings.
pub fn partition_lattice<W: Scalar>(n: usize) -> Result<GradedPoset<W>> {
    if n == 0 || n > MAX_PARTITION_N {
        return Err(Error::SizeLimit {
            what: "partition lattice",
            value: n,
            limit: MAX_PARTITION_N,
        });
    }
    let rgs_list = all_restricted_growth_strings(n);
    let index: HashMap<Vec<u8>, usize> = rgs_list
        .iter()
        .enumerate()
        .map(|(i, r)| (r.clone(), i))
        .collect();

    let mut labels = Vec::with_capacity(rgs_list.len());
    let mut covers = Vec::new();
    for (id, rgs) in rgs_list.iter().enumerate() {
        let block_count = 1 + *rgs.iter().max().unwrap() as usize;
        labels.push(partition_label(rgs));
        // Merging any two blocks yields an upper cover.
        for a in 0..block_count {
            for b in a + 1..block_count {
                let merged: Vec<u8> = rgs
                    .iter()
                    .map(|&x| if x == b as u8 { a as u8 } else { x })
                    .collect();
                covers.push((id, index[&canonical_rgs(&merged)]));
            }
        }
    }
    GradedPoset::new(labels, covers, vec![W::one(); rgs_list.len()])
}

/// All restricted growth strings of length `n` in lexicographic order.
fn all_restricted_growth_strings(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut current = vec![0u8; n];
    fn rec(current: &mut Vec<u8>, pos: usize, max_used: u8, out: &mut Vec<Vec<u8>>) {
        if pos == current.len() {
            out.push(current.clone());
            return;
        }
        for value in 0..=max_used + 1 {
            current[pos] = value;
            rec(current, pos + 1, max_used.max(value), out);
        }
    }
    if n == 0 {
        return vec![Vec::new()];
    }
    current[0] = 0;
    rec(&mut current, 1, 0, &mut out);
    out
}

/// Renumbers block ids in first-appearance order.
fn canonical_rgs(assignment: &[u8]) -> Vec<u8> {
    let mut relabel: HashMap<u8, u8> = HashMap::new();
    let mut next = 0u8;
    assignment
        .iter()
        .map(|&x| {
            *relabel.entry(x).or_insert_with(|| {
                let v = next;
                next += 1;
                v
            })
        })
        .collect()
}

fn partition_label(rgs: &[u8]) -> String {
    let block_count = 1 + *rgs.iter().max().unwrap() as usize;
    let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); block_count];
    for (i, &b) in rgs.iter().enumerate() {
        blocks[b as usize].push(i + 1);
    }
    blocks.sort_by_key(|b| b[0]);
    blocks
        .iter()
        .map(|b| {
            b.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        })
        .collect::<Vec<_>>()
        .join("|")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_lattice_levels_are_binomials() {
        let b4: GradedPoset<i64> = boolean_lattice(4).unwrap();
        assert_eq!(b4.level_weights(), vec![1, 4, 6, 4, 1]);
        let b0: GradedPoset<i64> = boolean_lattice(0).unwrap();
        assert_eq!(b0.len(), 1);
        assert_eq!(b0.level_weights(), vec![1]);
    }

    #[test]
    fn boolean_two_is_the_product_of_two_chains() {
        let b2: GradedPoset<i64> = boolean_lattice(2).unwrap();
        let two = GradedPoset::chain(&[1i64, 1]).unwrap();
        let prod = two.product(&two);
        assert_eq!(b2.covers(), prod.covers());
        assert_eq!(b2.weights(), prod.weights());
    }

    #[test]
    fn boolean_size_limit() {
        assert!(matches!(
            boolean_lattice::<i64>(21),
            Err(Error::SizeLimit { .. })
        ));
    }

    #[test]
    fn partition_lattice_small_cases() {
        let p1: GradedPoset<i64> = partition_lattice(1).unwrap();
        assert_eq!(p1.len(), 1);

        let p3: GradedPoset<i64> = partition_lattice(3).unwrap();
        assert_eq!(p3.len(), 5);
        assert_eq!(p3.level_weights(), vec![1, 3, 1]);

        let p4: GradedPoset<i64> = partition_lattice(4).unwrap();
        assert_eq!(p4.level_weights(), vec![1, 6, 7, 1]);
    }

    #[test]
    fn partition_levels_match_reversed_second_kind_rows() {
        for n in 1..=9usize {
            let p: GradedPoset<i64> = partition_lattice(n).unwrap();
            let row: Vec<i64> = stirling_row(StirlingKind::Second, n);
            let weights = p.level_weights();
            assert_eq!(weights.len(), n);
            for (rank, w) in weights.iter().enumerate() {
                // rank r holds the partitions with n - r blocks.
                assert_eq!(*w, row[n - rank], "n={n} rank={rank}");
            }
        }
    }

    #[test]
    fn partition_labels_are_canonical() {
        let p3: GradedPoset<i64> = partition_lattice(3).unwrap();
        let labels: Vec<&str> = (0..p3.len()).map(|i| p3.label(i)).collect();
        assert!(labels.contains(&"1|2|3"));
        assert!(labels.contains(&"1,3|2"));
        assert!(labels.contains(&"1,2,3"));
    }
}
