//! The symmetric group under the refinement order, and its decomposition
//! into copies of the next-smaller symmetric group.

use crate::error::{Error, Result};
use crate::families::perm::{absolute_leq, next_permutation, Permutation};
use crate::poset::GradedPoset;
use crate::scalar::Scalar;

const MAX_SYMMETRIC_N: usize = 8;
const MAX_DECOMPOSE_N: usize = 7;
const MAX_DUALITY_N: usize = 6;

/// `S_n` as a graded poset together with the permutation carried by each
/// element id. Ids are lexicographic by image sequence; rank is the cycle
/// count minus one, so `n`-cycles sit at rank 0 and the identity on top.
#[derive(Debug, Clone)]
pub struct SymmetricGroup<W> {
    pub poset: GradedPoset<W>,
    pub perms: Vec<Permutation>,
}

impl<W: Scalar> SymmetricGroup<W> {
    pub fn n(&self) -> usize {
        self.perms.first().map_or(0, Permutation::n)
    }

    pub fn id_of(&self, perm: &Permutation) -> usize {
        perm.lex_rank()
    }

    pub fn copy_decomposition(&self) -> Result<CopyDecomposition> {
        CopyDecomposition::of(self)
    }
}

/// Builds `S_n` ordered by refinement: `σ` covers `π` when `σ = π·(i j)`
/// slices one cycle of `π` in two. Unit weights.
pub fn symmetric_group_refinement<W: Scalar>(n: usize) -> Result<SymmetricGroup<W>> {
    if n == 0 || n > MAX_SYMMETRIC_N {
        return Err(Error::SizeLimit {
            what: "symmetric group",
            value: n,
            limit: MAX_SYMMETRIC_N,
        });
    }
    let mut perms = Vec::new();
    let mut images: Vec<usize> = (0..n).collect();
    loop {
        perms.push(Permutation::from_images(images.clone()).expect("valid images"));
        if !next_permutation(&mut images) {
            break;
        }
    }

    let mut covers = Vec::new();
    for (id, pi) in perms.iter().enumerate() {
        for cycle in pi.cycles() {
            for s in 0..cycle.len() {
                for t in s + 1..cycle.len() {
                    let sigma = pi.times_transposition(cycle[s], cycle[t]);
                    covers.push((id, sigma.lex_rank()));
                }
            }
        }
    }

    let labels = perms.iter().map(Permutation::cycle_notation).collect();
    let weights = vec![W::one(); perms.len()];
    let poset = GradedPoset::new(labels, covers, weights)?;
    Ok(SymmetricGroup { poset, perms })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeColor {
    /// Both endpoints in the same copy.
    Blue,
    /// Exactly one endpoint in the raised copy.
    Red,
    /// Endpoints in two distinct lower copies.
    Gray,
}

/// `S_{n+1}` viewed as `n + 1` copies of `S_n`: copy `i` holds the
/// permutations with `π(n+1) = i`, and copy `n+1` (the raised copy) those
/// fixing `n+1`. Each element carries the reduction `π ↦ π'` into `S_n` and
/// each cover a color.
#[derive(Debug, Clone)]
pub struct CopyDecomposition {
    /// `S_{n+1}` is decomposed into copies of `S_n`.
    pub n: usize,
    /// Copy index per element id, in `1..=n+1`; `n + 1` is the raised copy.
    pub copy_of: Vec<usize>,
    /// Lexicographic id in `S_n` of the reduction of each element.
    pub reduction: Vec<usize>,
    /// Colors aligned with `poset.covers()`.
    pub edge_colors: Vec<EdgeColor>,
}

impl CopyDecomposition {
    pub fn of<W: Scalar>(group: &SymmetricGroup<W>) -> Result<Self> {
        let n_plus_1 = group.n();
        if !(2..=MAX_DECOMPOSE_N).contains(&n_plus_1) {
            return Err(Error::SizeLimit {
                what: "copy decomposition",
                value: n_plus_1,
                limit: MAX_DECOMPOSE_N,
            });
        }
        let n = n_plus_1 - 1;
        let top = n_plus_1 - 1; // the point written n+1 in 1-based terms

        let mut copy_of = Vec::with_capacity(group.perms.len());
        let mut reduction = Vec::with_capacity(group.perms.len());
        for pi in &group.perms {
            let i = pi.image(top);
            copy_of.push(i + 1);
            let reduced: Vec<usize> = if i == top {
                // π fixes n+1: drop the 1-cycle.
                pi.images()[..n].to_vec()
            } else {
                // Remove n+1 from its cycle: the preimage of n+1 now maps
                // straight to i.
                pi.images()[..n]
                    .iter()
                    .map(|&img| if img == top { i } else { img })
                    .collect()
            };
            reduction.push(
                Permutation::from_images(reduced)
                    .expect("removing a point keeps a permutation")
                    .lex_rank(),
            );
        }

        let raised = n_plus_1;
        let edge_colors = group
            .poset
            .covers()
            .iter()
            .map(|&(lo, hi)| {
                let (a, b) = (copy_of[lo], copy_of[hi]);
                if a == b {
                    EdgeColor::Blue
                } else if a == raised || b == raised {
                    EdgeColor::Red
                } else {
                    EdgeColor::Gray
                }
            })
            .collect();

        Ok(Self {
            n,
            copy_of,
            reduction,
            edge_colors,
        })
    }

    pub fn raised_copy(&self) -> usize {
        self.n + 1
    }

    /// Element ids belonging to one copy.
    pub fn copy_members(&self, copy: usize) -> Vec<usize> {
        (0..self.copy_of.len())
            .filter(|&id| self.copy_of[id] == copy)
            .collect()
    }
}

/// Builds `S_{n_plus_1}` and its decomposition into `n_plus_1` copies of
/// the next-smaller symmetric group in one call.
pub fn decompose_copies<W: Scalar>(
    n_plus_1: usize,
) -> Result<(SymmetricGroup<W>, CopyDecomposition)> {
    let group = symmetric_group_refinement::<W>(n_plus_1)?;
    let decomposition = group.copy_decomposition()?;
    Ok((group, decomposition))
}

/// Checks that the absolute order is the reverse of refinement on `S_n`:
/// `π ≤_T σ` holds exactly when `σ` lies below-or-equal `π` in the
/// refinement poset. Returns the first disagreeing pair, or `None`.
pub fn check_absolute_reverse_refinement(n: usize) -> Result<Option<(Permutation, Permutation)>> {
    if n == 0 || n > MAX_DUALITY_N {
        return Err(Error::SizeLimit {
            what: "absolute order duality check",
            value: n,
            limit: MAX_DUALITY_N,
        });
    }
    let group: SymmetricGroup<i64> = symmetric_group_refinement(n)?;
    let count = group.perms.len();
    let words = count.div_ceil(64);

    // Upward reachability closure over the refinement covers.
    let mut reach_up = vec![vec![0u64; words]; count];
    let levels: Vec<Vec<usize>> = (0..=group.poset.height())
        .map(|r| group.poset.level_ids(r).to_vec())
        .collect();
    for rank in (0..levels.len()).rev() {
        for &v in &levels[rank] {
            let mut mask = vec![0u64; words];
            for &u in group.poset.upper_covers(v) {
                mask[u / 64] |= 1 << (u % 64);
                for w in 0..words {
                    mask[w] |= reach_up[u][w];
                }
            }
            reach_up[v] = mask;
        }
    }
    let below_or_equal =
        |sigma: usize, pi: usize| sigma == pi || reach_up[sigma][pi / 64] & (1 << (pi % 64)) != 0;

    for pi in 0..count {
        for sigma in 0..count {
            let abs = absolute_leq(&group.perms[pi], &group.perms[sigma])?;
            if abs != below_or_equal(sigma, pi) {
                return Ok(Some((group.perms[pi].clone(), group.perms[sigma].clone())));
            }
        }
    }
    Ok(None)
}
