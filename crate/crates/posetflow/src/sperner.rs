//! Sperner verdicts: widths via MinFlow, normalized-flow checks across
//! consecutive ranks, the Erdős k-width formula, and the Stirling row
//! inequalities behind the symmetric group's Sperner property.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::families::{stirling_row, StirlingKind};
use crate::flownet::{min_flow, nmc_bruteforce, normalized_flow, Network};
use crate::poset::{AntichainWitness, GradedPoset};
use crate::scalar::{from_usize, Scalar};

/// Width of a graded poset: the maximum antichain weight, computed as the
/// minimum overflow of the Hasse network with capacities equal to weights.
pub fn width<W: Scalar>(poset: &GradedPoset<W>) -> Result<(W, AntichainWitness<W>)> {
    let outcome = min_flow(&Network::hasse(poset))?;
    let witness = AntichainWitness {
        members: outcome.antichain,
        total_weight: outcome.value.clone(),
    };
    witness.validate(poset)?;
    Ok((outcome.value, witness))
}

/// Normalized-flow feasibility for the cover graph between ranks `lower_rank`
/// and `lower_rank + 1`.
#[derive(Debug, Clone)]
pub struct NfpPair<W> {
    pub lower_rank: usize,
    pub feasible: bool,
    /// Cover edges between the two levels, as global element id pairs.
    pub edges: Vec<(usize, usize)>,
    /// Exact normalized flow per edge when feasible.
    pub witness: Option<Vec<Ratio<W>>>,
    /// Lower-level element ids violating the normalized matching condition
    /// when infeasible: the brute-force lexicographic counterexample where
    /// the level is small enough, otherwise the residual-cut trace.
    pub violating_set: Option<Vec<usize>>,
}

#[derive(Debug, Clone)]
pub struct NfpReport<W> {
    pub pairs: Vec<NfpPair<W>>,
}

impl<W> NfpReport<W> {
    pub fn all_feasible(&self) -> bool {
        self.pairs.iter().all(|p| p.feasible)
    }
}

fn check_nfp_pair<W: Scalar>(poset: &GradedPoset<W>, lower_rank: usize) -> Result<NfpPair<W>> {
    let lower = poset.level_ids(lower_rank);
    let upper = poset.level_ids(lower_rank + 1);
    let mut upper_index = vec![usize::MAX; poset.len()];
    for (j, &id) in upper.iter().enumerate() {
        upper_index[id] = j;
    }
    let s_weights: Vec<W> = lower.iter().map(|&id| poset.weight(id).clone()).collect();
    let t_weights: Vec<W> = upper.iter().map(|&id| poset.weight(id).clone()).collect();
    let mut local_edges = Vec::new();
    for (i, &id) in lower.iter().enumerate() {
        for &up in poset.upper_covers(id) {
            local_edges.push((i, upper_index[up]));
        }
    }

    let outcome = normalized_flow(&s_weights, &t_weights, &local_edges)?;
    // normalized_flow sorts its edge list; the mapped global pairs stay
    // aligned with the witness because level id lists are ascending.
    let aligned: Vec<(usize, usize)> = outcome
        .edges
        .iter()
        .map(|&(i, j)| (lower[i], upper[j]))
        .collect();
    let violating_set = if outcome.feasible {
        None
    } else {
        let cut_trace: Vec<usize> = outcome
            .violating_set
            .unwrap_or_default()
            .into_iter()
            .map(|i| lower[i])
            .collect();
        match nmc_bruteforce(&s_weights, &t_weights, &local_edges) {
            Ok(nmc) => Some(
                nmc.counterexample
                    .map(|xs| xs.into_iter().map(|i| lower[i]).collect())
                    .unwrap_or(cut_trace),
            ),
            Err(Error::TooLargeForOracle { .. }) => Some(cut_trace),
            Err(e) => return Err(e),
        }
    };
    Ok(NfpPair {
        lower_rank,
        feasible: outcome.feasible,
        edges: aligned,
        witness: outcome.witness,
        violating_set,
    })
}

/// Checks the normalized flow property: every pair of consecutive ranks must
/// accept a normalized flow.
pub fn check_nfp<W: Scalar>(poset: &GradedPoset<W>) -> Result<NfpReport<W>> {
    check_nfp_with_jobs(poset, 1)
}

/// Same as [`check_nfp`] with rank pairs checked on `jobs` threads.
pub fn check_nfp_with_jobs<W: Scalar>(poset: &GradedPoset<W>, jobs: usize) -> Result<NfpReport<W>> {
    let pair_count = poset.height();
    let jobs = jobs.max(1).min(pair_count.max(1));
    if jobs <= 1 {
        let mut pairs = Vec::with_capacity(pair_count);
        for k in 0..pair_count {
            pairs.push(check_nfp_pair(poset, k)?);
        }
        return Ok(NfpReport { pairs });
    }
    let mut slots: Vec<Option<Result<NfpPair<W>>>> = Vec::new();
    slots.resize_with(pair_count, || None);
    std::thread::scope(|scope| {
        for (worker, chunk) in slots.chunks_mut(pair_count.div_ceil(jobs)).enumerate() {
            let base = worker * pair_count.div_ceil(jobs);
            scope.spawn(move || {
                for (offset, slot) in chunk.iter_mut().enumerate() {
                    *slot = Some(check_nfp_pair(poset, base + offset));
                }
            });
        }
    });
    let mut pairs = Vec::with_capacity(pair_count);
    for slot in slots {
        pairs.push(slot.expect("every rank pair was processed")?);
    }
    Ok(NfpReport { pairs })
}

/// A full Sperner verdict for one poset.
#[derive(Debug, Clone)]
pub struct SpernerReport<W> {
    pub poset_name: String,
    pub width: W,
    pub witness: AntichainWitness<W>,
    pub max_level_rank: usize,
    pub max_level_weight: W,
    /// True exactly when the width equals the heaviest level weight.
    pub verdict: bool,
    pub nfp: NfpReport<W>,
}

/// Computes the width, the heaviest level, the Sperner verdict, and the
/// per-rank-pair normalized flow report.
pub fn is_sperner<W: Scalar>(poset: &GradedPoset<W>, name: &str) -> Result<SpernerReport<W>> {
    is_sperner_with_jobs(poset, name, 1)
}

pub fn is_sperner_with_jobs<W: Scalar>(
    poset: &GradedPoset<W>,
    name: &str,
    jobs: usize,
) -> Result<SpernerReport<W>> {
    let (width_value, witness) = width(poset)?;
    let max_level = poset
        .max_level()
        .ok_or_else(|| Error::InvalidInput("empty poset has no levels".into()))?;
    let nfp = check_nfp_with_jobs(poset, jobs)?;
    Ok(SpernerReport {
        poset_name: name.to_string(),
        verdict: width_value == max_level.weight,
        width: width_value,
        witness,
        max_level_rank: max_level.rank,
        max_level_weight: max_level.weight,
        nfp,
    })
}

/// The Erdős k-width of the Boolean lattice `B_n`: the sum of the `k`
/// largest binomial coefficients `C(n, j)`.
pub fn erdos_k_width_formula<W: Scalar>(n: usize, k: usize) -> Result<W> {
    if k > n + 1 {
        return Err(Error::InvalidInput(format!(
            "k = {k} exceeds the {} binomial coefficients of n = {n}",
            n + 1
        )));
    }
    let mut row: Vec<W> = vec![W::one()];
    for _ in 0..n {
        let mut next = vec![W::one()];
        for i in 1..row.len() {
            next.push(row[i - 1].clone() + row[i].clone());
        }
        next.push(W::one());
        row = next;
    }
    row.sort_unstable_by(|a, b| b.cmp(a));
    Ok(row.into_iter().take(k).fold(W::zero(), |acc, c| acc + c))
}

/// One value of `k` in the quotient-network inequality.
#[derive(Debug, Clone)]
pub struct ProofInequalityEntry<W> {
    pub k: usize,
    /// `s(n,k-1) / (s(n,k-1) + n·s(n,k))`.
    pub lhs: Ratio<W>,
    /// `s(n,k) / (s(n,k) + n·s(n,k+1))`.
    pub rhs: Ratio<W>,
    pub holds: bool,
    /// `s(n,k-1)·s(n,k+1) <= s(n,k)^2`.
    pub log_concave: bool,
}

#[derive(Debug, Clone)]
pub struct ProofInequalityReport<W> {
    pub n: usize,
    pub holds: bool,
    pub entries: Vec<ProofInequalityEntry<W>>,
}

/// Checks, for every k, that the collapsed two-chain network satisfies the
/// normalized matching inequality between first-kind Stirling entries, and
/// separately the row log-concavity it reduces to. Both by exact
/// cross-multiplication.
pub fn proof_inequality<W: Scalar>(n: usize) -> ProofInequalityReport<W> {
    let row: Vec<W> = stirling_row(StirlingKind::First, n);
    let at = |k: usize| -> W {
        if k <= n {
            row[k].clone()
        } else {
            W::zero()
        }
    };
    let n_scalar: W = from_usize(n);
    let mut entries = Vec::new();
    let mut holds = true;
    for k in 1..=n {
        let prev = at(k - 1);
        let here = at(k);
        let next = at(k + 1);
        let lhs_den = prev.clone() + n_scalar.clone() * here.clone();
        let rhs_den = here.clone() + n_scalar.clone() * next.clone();
        let main = prev.clone() * rhs_den.clone() <= here.clone() * lhs_den.clone();
        let log_concave = prev.clone() * next <= here.clone() * here.clone();
        // The displayed inequality follows from log-concavity; both are
        // computed independently above, so this cross-check is real.
        assert!(
            main || !log_concave,
            "log-concavity must imply the quotient inequality"
        );
        holds &= main;
        entries.push(ProofInequalityEntry {
            k,
            lhs: Ratio::new(prev, lhs_den),
            rhs: Ratio::new(here, rhs_den),
            holds: main,
            log_concave,
        });
    }
    ProofInequalityReport { n, holds, entries }
}
