//! Graded weighted posets: the data model every solver in this crate
//! consumes, plus exhaustive-search oracles and product constructions.
//!
//! A poset is stored by its cover relation (the Hasse diagram). Construction
//! validates that the cover digraph is acyclic and graded: every minimal
//! element gets rank 0 and every cover raises rank by exactly one. Inputs
//! admitting no such rank assignment are rejected.

use crate::error::{Error, Result};
use crate::scalar::{sum, Scalar};

/// Default element-count bound for the exhaustive-search oracles.
pub const DEFAULT_ORACLE_LIMIT: usize = 24;

/// Hard cap for the oracles: comparability is tracked in 64-bit masks.
const ORACLE_MASK_BITS: usize = 64;

/// A finite graded poset with strictly positive element weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedPoset<W> {
    labels: Vec<String>,
    weights: Vec<W>,
    covers: Vec<(usize, usize)>,
    ranks: Vec<usize>,
    up_adj: Vec<Vec<usize>>,
    down_adj: Vec<Vec<usize>>,
    level_members: Vec<Vec<usize>>,
}

/// One level `N_r` of a graded poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Level<W> {
    pub rank: usize,
    pub members: Vec<usize>,
    pub weight: W,
}

/// A maximum-weight antichain produced by an oracle or a flow solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntichainWitness<W> {
    pub members: Vec<usize>,
    pub total_weight: W,
}

impl<W: Scalar> AntichainWitness<W> {
    /// Checks the witness invariants against its poset: the members form an
    /// antichain and the recorded weight is their weight sum.
    pub fn validate(&self, poset: &GradedPoset<W>) -> Result<()> {
        if let Some((lower, upper)) = poset.antichain_violation(&self.members)? {
            return Err(Error::NotAntichain { lower, upper });
        }
        let total = sum(self.members.iter().map(|&m| poset.weight(m)));
        if total != self.total_weight {
            return Err(Error::InvalidInput(format!(
                "witness weight {} does not match member sum {}",
                self.total_weight, total
            )));
        }
        Ok(())
    }
}

impl<W: Scalar> GradedPoset<W> {
    /// Builds a graded poset from labels, cover pairs and weights.
    ///
    /// Ranks are always computed here (never trusted from a caller): minimal
    /// elements get rank 0 and each cover must raise rank by exactly one.
    pub fn new(labels: Vec<String>, covers: Vec<(usize, usize)>, weights: Vec<W>) -> Result<Self> {
        let n = labels.len();
        if weights.len() != n {
            return Err(Error::InvalidInput(format!(
                "{} labels but {} weights",
                n,
                weights.len()
            )));
        }
        for (element, w) in weights.iter().enumerate() {
            if !w.is_positive() {
                return Err(Error::NonPositiveWeight { element });
            }
        }
        let mut covers = covers;
        covers.sort_unstable();
        covers.dedup();
        let mut up_adj = vec![Vec::new(); n];
        let mut down_adj = vec![Vec::new(); n];
        for &(lo, hi) in &covers {
            for id in [lo, hi] {
                if id >= n {
                    return Err(Error::UnknownElement { id, count: n });
                }
            }
            if lo == hi {
                return Err(Error::CycleDetected);
            }
            up_adj[lo].push(hi);
            down_adj[hi].push(lo);
        }

        // Kahn topological pass doubling as cycle detection.
        let mut indegree: Vec<usize> = down_adj.iter().map(Vec::len).collect();
        let mut queue: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut seen = 0usize;
        let mut ranks = vec![0usize; n];
        let mut head = 0;
        while head < queue.len() {
            let v = queue[head];
            head += 1;
            seen += 1;
            for &u in &up_adj[v] {
                indegree[u] -= 1;
                if indegree[u] == 0 {
                    queue.push(u);
                }
            }
        }
        if seen != n {
            return Err(Error::CycleDetected);
        }
        // Rank propagation in topological order; every lower cover of an
        // element must agree on the rank it forces.
        for &v in &queue {
            let mut rank = 0usize;
            for (idx, &u) in down_adj[v].iter().enumerate() {
                let forced = ranks[u] + 1;
                if idx == 0 {
                    rank = forced;
                } else if forced != rank {
                    return Err(Error::NotGraded {
                        element: v,
                        rank_a: rank,
                        rank_b: forced,
                    });
                }
            }
            ranks[v] = rank;
        }

        let height = ranks.iter().copied().max().map_or(0, |m| m + 1);
        let mut level_members = vec![Vec::new(); height];
        for v in 0..n {
            level_members[ranks[v]].push(v);
        }

        Ok(Self {
            labels,
            weights,
            covers,
            ranks,
            up_adj,
            down_adj,
            level_members,
        })
    }

    /// One-element poset.
    pub fn singleton(label: impl Into<String>, weight: W) -> Result<Self> {
        Self::new(vec![label.into()], Vec::new(), vec![weight])
    }

    /// Chain with the given weights from bottom (rank 0) to top.
    pub fn chain(weights: &[W]) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidInput(
                "chain needs at least one element".into(),
            ));
        }
        let labels = (0..weights.len()).map(|i| i.to_string()).collect();
        let covers = (1..weights.len()).map(|i| (i - 1, i)).collect();
        Self::new(labels, covers, weights.to_vec())
    }

    /// Claw on `m` elements: `m - 1` unit-weight leaves all covered by a
    /// single top element. `claw(1)` is a singleton and `claw(2)` a 2-chain.
    pub fn claw(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput(
                "claw needs at least one element".into(),
            ));
        }
        let labels = (1..=m).map(|i| i.to_string()).collect();
        let covers = (0..m - 1).map(|leaf| (leaf, m - 1)).collect();
        Self::new(labels, covers, vec![W::one(); m])
    }

    /// Direct product: pairs ordered componentwise, ranks add, weights
    /// multiply. The pair `(p, q)` gets id `p * other.len() + q`.
    pub fn product(&self, other: &Self) -> Self {
        let qn = other.len();
        let mut labels = Vec::with_capacity(self.len() * qn);
        let mut weights = Vec::with_capacity(self.len() * qn);
        for p in 0..self.len() {
            for q in 0..qn {
                labels.push(format!("({},{})", self.labels[p], other.labels[q]));
                weights.push(self.weights[p].clone() * other.weights[q].clone());
            }
        }
        let mut covers =
            Vec::with_capacity(self.covers.len() * qn + other.covers.len() * self.len());
        for &(a, b) in &self.covers {
            for q in 0..qn {
                covers.push((a * qn + q, b * qn + q));
            }
        }
        for p in 0..self.len() {
            for &(c, d) in &other.covers {
                covers.push((p * qn + c, p * qn + d));
            }
        }
        Self::new(labels, covers, weights).expect("product of graded posets is graded")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: usize) -> &str {
        &self.labels[id]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weight(&self, id: usize) -> &W {
        &self.weights[id]
    }

    pub fn weights(&self) -> &[W] {
        &self.weights
    }

    pub fn rank(&self, id: usize) -> usize {
        self.ranks[id]
    }

    /// Cover pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn upper_covers(&self, id: usize) -> &[usize] {
        &self.up_adj[id]
    }

    pub fn lower_covers(&self, id: usize) -> &[usize] {
        &self.down_adj[id]
    }

    /// Height: max rank minus min rank (min rank is always 0 here).
    pub fn height(&self) -> usize {
        self.level_members.len().saturating_sub(1)
    }

    /// Elements of one rank, in id order.
    pub fn level_ids(&self, rank: usize) -> &[usize] {
        &self.level_members[rank]
    }

    /// All levels with their weights, rank 0 upward.
    pub fn levels(&self) -> Vec<Level<W>> {
        self.level_members
            .iter()
            .enumerate()
            .map(|(rank, members)| Level {
                rank,
                members: members.clone(),
                weight: sum(members.iter().map(|&m| &self.weights[m])),
            })
            .collect()
    }

    /// Weight of each level, rank 0 upward.
    pub fn level_weights(&self) -> Vec<W> {
        self.levels().into_iter().map(|l| l.weight).collect()
    }

    /// The heaviest level; ties broken by smallest rank.
    pub fn max_level(&self) -> Option<Level<W>> {
        self.levels()
            .into_iter()
            .fold(None, |best: Option<Level<W>>, lvl| match best {
                Some(b) if b.weight >= lvl.weight => Some(b),
                _ => Some(lvl),
            })
    }

    /// Returns a comparable pair `(lower, upper)` among `ids`, or `None` if
    /// the set is an antichain. Comparability is cover-path reachability,
    /// checked by one sweep over the ranks spanned by the subset.
    pub fn antichain_violation(&self, ids: &[usize]) -> Result<Option<(usize, usize)>> {
        let n = self.len();
        let mut member = vec![false; n];
        let mut min_rank = usize::MAX;
        let mut max_rank = 0usize;
        for &id in ids {
            if id >= n {
                return Err(Error::UnknownElement { id, count: n });
            }
            member[id] = true;
            min_rank = min_rank.min(self.ranks[id]);
            max_rank = max_rank.max(self.ranks[id]);
        }
        if ids.is_empty() || min_rank == max_rank {
            return Ok(None);
        }
        // ancestor[v]: some member strictly below v, if any.
        let mut ancestor: Vec<Option<usize>> = vec![None; n];
        for rank in min_rank..=max_rank {
            for &v in &self.level_members[rank] {
                let mut anc = None;
                for &u in &self.down_adj[v] {
                    if self.ranks[u] < min_rank {
                        continue;
                    }
                    if member[u] {
                        anc = Some(u);
                        break;
                    }
                    if let Some(a) = ancestor[u] {
                        anc = Some(a);
                        break;
                    }
                }
                if member[v] {
                    if let Some(a) = anc {
                        return Ok(Some((a, v)));
                    }
                    ancestor[v] = Some(v);
                } else {
                    ancestor[v] = anc;
                }
            }
        }
        Ok(None)
    }

    pub fn is_antichain(&self, ids: &[usize]) -> Result<bool> {
        Ok(self.antichain_violation(ids)?.is_none())
    }

    /// Strict upward reachability as bitmasks; only valid for `len() <= 64`.
    fn up_masks(&self) -> Vec<u64> {
        let n = self.len();
        let mut up = vec![0u64; n];
        for rank in (0..self.level_members.len()).rev() {
            for &v in &self.level_members[rank] {
                let mut mask = 0u64;
                for &u in &self.up_adj[v] {
                    mask |= (1 << u) | up[u];
                }
                up[v] = mask;
            }
        }
        up
    }

    fn check_oracle_size(&self, limit: usize) -> Result<()> {
        if self.len() > limit.min(ORACLE_MASK_BITS) {
            return Err(Error::TooLargeForOracle {
                size: self.len(),
                limit: limit.min(ORACLE_MASK_BITS),
            });
        }
        Ok(())
    }

    /// Maximum-weight antichain by exhaustive search with pruning.
    ///
    /// Ties are broken toward the lexicographically smallest member set.
    pub fn brute_force_width(&self) -> Result<AntichainWitness<W>> {
        self.brute_force_width_with_limit(DEFAULT_ORACLE_LIMIT)
    }

    pub fn brute_force_width_with_limit(&self, limit: usize) -> Result<AntichainWitness<W>> {
        self.check_oracle_size(limit)?;
        let n = self.len();
        let up = self.up_masks();
        let mut comp = up.clone();
        for (i, &bits) in up.iter().enumerate() {
            let mut m = bits;
            while m != 0 {
                let j = m.trailing_zeros() as usize;
                m &= m - 1;
                comp[j] |= 1 << i;
            }
        }
        let mut suffix = vec![W::zero(); n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1].clone() + self.weights[i].clone();
        }

        struct Search<'a, W> {
            comp: &'a [u64],
            weights: &'a [W],
            suffix: &'a [W],
            n: usize,
            best_weight: W,
            best_set: u64,
        }
        impl<W: Scalar> Search<'_, W> {
            fn dfs(&mut self, i: usize, chosen: u64, cur: W) {
                if i == self.n {
                    if cur > self.best_weight {
                        self.best_weight = cur;
                        self.best_set = chosen;
                    }
                    return;
                }
                if cur.clone() + self.suffix[i].clone() <= self.best_weight {
                    return;
                }
                // Include-first keeps the first maximum found lexicographically
                // smallest.
                if self.comp[i] & chosen == 0 {
                    self.dfs(
                        i + 1,
                        chosen | (1 << i),
                        cur.clone() + self.weights[i].clone(),
                    );
                }
                self.dfs(i + 1, chosen, cur);
            }
        }

        let mut search = Search {
            comp: &comp,
            weights: &self.weights,
            suffix: &suffix,
            n,
            best_weight: W::zero(),
            best_set: 0,
        };
        search.dfs(0, 0, W::zero());

        let members: Vec<usize> = (0..n)
            .filter(|&i| search.best_set & (1 << i) != 0)
            .collect();
        Ok(AntichainWitness {
            members,
            total_weight: search.best_weight,
        })
    }

    /// Maximum-weight subset whose longest chain has at most `k` elements,
    /// by exhaustive search over a topological element order.
    pub fn brute_force_k_width(&self, k: usize) -> Result<(W, Vec<usize>)> {
        self.brute_force_k_width_with_limit(k, DEFAULT_ORACLE_LIMIT)
    }

    pub fn brute_force_k_width_with_limit(
        &self,
        k: usize,
        limit: usize,
    ) -> Result<(W, Vec<usize>)> {
        if k == 0 {
            return Err(Error::InvalidInput("k-width needs k >= 1".into()));
        }
        self.check_oracle_size(limit)?;
        let n = self.len();
        let up = self.up_masks();
        // Elements in (rank, id) order; each new element is never below an
        // earlier one, so chain lengths extend incrementally.
        let order: Vec<usize> = self.level_members.iter().flatten().copied().collect();
        let mut suffix = vec![W::zero(); n + 1];
        for i in (0..n).rev() {
            suffix[i] = suffix[i + 1].clone() + self.weights[order[i]].clone();
        }

        struct Search<'a, W> {
            up: &'a [u64],
            order: &'a [usize],
            weights: &'a [W],
            suffix: &'a [W],
            k: usize,
            n: usize,
            chosen: Vec<usize>,
            chain_end: Vec<usize>,
            best_weight: W,
            best_set: Vec<usize>,
        }
        impl<W: Scalar> Search<'_, W> {
            fn dfs(&mut self, i: usize, cur: W) {
                if i == self.n {
                    if cur > self.best_weight {
                        self.best_weight = cur;
                        self.best_set = self.chosen.clone();
                    }
                    return;
                }
                if cur.clone() + self.suffix[i].clone() <= self.best_weight {
                    return;
                }
                let e = self.order[i];
                let mut longest_below = 0usize;
                for (idx, &c) in self.chosen.iter().enumerate() {
                    if self.up[c] & (1 << e) != 0 {
                        longest_below = longest_below.max(self.chain_end[idx]);
                    }
                }
                if longest_below < self.k {
                    self.chosen.push(e);
                    self.chain_end.push(longest_below + 1);
                    self.dfs(i + 1, cur.clone() + self.weights[e].clone());
                    self.chosen.pop();
                    self.chain_end.pop();
                }
                self.dfs(i + 1, cur);
            }
        }

        let mut search = Search {
            up: &up,
            order: &order,
            weights: &self.weights,
            suffix: &suffix,
            k,
            n,
            chosen: Vec::new(),
            chain_end: Vec::new(),
            best_weight: W::zero(),
            best_set: Vec::new(),
        };
        search.dfs(0, W::zero());
        let mut members = search.best_set;
        members.sort_unstable();
        Ok((search.best_weight, members))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn unit_weights(n: usize) -> Vec<i64> {
        vec![1; n]
    }

    fn diamond() -> GradedPoset<i64> {
        // B_2 by hand: 0 = bottom, 1 = {1}, 2 = {2}, 3 = top.
        GradedPoset::new(
            vec!["e".into(), "a".into(), "b".into(), "ab".into()],
            vec![(0, 1), (0, 2), (1, 3), (2, 3)],
            unit_weights(4),
        )
        .unwrap()
    }

    #[test]
    fn singleton_has_rank_zero() {
        let p = GradedPoset::singleton("x", 1i64).unwrap();
        assert_eq!(p.len(), 1);
        assert_eq!(p.rank(0), 0);
        assert_eq!(p.level_weights(), vec![1]);
    }

    #[test]
    fn diamond_ranks_are_forced() {
        let p = diamond();
        assert_eq!(
            (0..4).map(|i| p.rank(i)).collect::<Vec<_>>(),
            vec![0, 1, 1, 2]
        );
        assert_eq!(p.level_weights(), vec![1, 2, 1]);
    }

    #[test]
    fn inconsistent_ranks_are_rejected() {
        // a < b, a < c, b < c forces rank(c) to be both 1 and 2.
        let err = GradedPoset::new(
            vec!["a".into(), "b".into(), "c".into()],
            vec![(0, 1), (0, 2), (1, 2)],
            unit_weights(3),
        )
        .unwrap_err();
        assert!(matches!(err, Error::NotGraded { element: 2, .. }));
    }

    #[test]
    fn cycles_are_rejected() {
        let err = GradedPoset::new(
            vec!["a".into(), "b".into()],
            vec![(0, 1), (1, 0)],
            unit_weights(2),
        )
        .unwrap_err();
        assert_eq!(err, Error::CycleDetected);
    }

    #[test]
    fn nonpositive_weights_are_rejected() {
        let err = GradedPoset::new(vec!["a".into()], vec![], vec![0i64]).unwrap_err();
        assert!(matches!(err, Error::NonPositiveWeight { element: 0 }));
    }

    #[test]
    fn covers_raise_rank_by_one_in_builders() {
        let chain = GradedPoset::chain(&[3i64, 1]).unwrap();
        let claw = GradedPoset::<i64>::claw(4).unwrap();
        let prod = chain.product(&claw);
        for p in [&chain, &claw, &prod] {
            for &(lo, hi) in p.covers() {
                assert_eq!(p.rank(hi), p.rank(lo) + 1);
            }
        }
    }

    #[test]
    fn claw_shapes() {
        let c1 = GradedPoset::<i64>::claw(1).unwrap();
        assert_eq!(c1.len(), 1);
        let c2 = GradedPoset::<i64>::claw(2).unwrap();
        assert_eq!(c2.covers(), &[(0, 1)]);
        let c3 = GradedPoset::<i64>::claw(3).unwrap();
        assert_eq!(c3.covers(), &[(0, 2), (1, 2)]);
        assert_eq!(c3.level_weights(), vec![2, 1]);
    }

    #[test]
    fn antichain_checks() {
        let p = diamond();
        assert!(p.is_antichain(&[1]).unwrap());
        assert!(p.is_antichain(&[1, 2]).unwrap());
        assert_eq!(p.antichain_violation(&[0, 3]).unwrap(), Some((0, 3)));
        assert!(matches!(
            p.antichain_violation(&[7]),
            Err(Error::UnknownElement { id: 7, .. })
        ));
    }

    #[test]
    fn every_level_is_an_antichain() {
        let p = diamond().product(&GradedPoset::chain(&[1i64, 1, 1]).unwrap());
        for level in p.levels() {
            assert!(p.is_antichain(&level.members).unwrap());
        }
    }

    #[test]
    fn width_oracle_on_small_posets() {
        let p = diamond();
        let w = p.brute_force_width().unwrap();
        assert_eq!(w.total_weight, 2);
        assert_eq!(w.members, vec![1, 2]);
        w.validate(&p).unwrap();

        let chain = GradedPoset::chain(&unit_weights(5)).unwrap();
        assert_eq!(chain.brute_force_width().unwrap().total_weight, 1);

        // Witness weight dominates every level weight.
        let q = diamond().product(&diamond());
        let witness = q.brute_force_width().unwrap();
        for lw in q.level_weights() {
            assert!(witness.total_weight >= lw);
        }
    }

    #[test]
    fn width_oracle_respects_limit() {
        let p = GradedPoset::chain(&unit_weights(5)).unwrap();
        assert!(matches!(
            p.brute_force_width_with_limit(4),
            Err(Error::TooLargeForOracle { size: 5, limit: 4 })
        ));
    }

    #[test]
    fn k_width_oracle() {
        let chain = GradedPoset::chain(&unit_weights(5)).unwrap();
        // k at least height + 1 takes the whole poset.
        assert_eq!(chain.brute_force_k_width(5).unwrap().0, 5);
        assert_eq!(chain.brute_force_k_width(6).unwrap().0, 5);
        assert_eq!(chain.brute_force_k_width(2).unwrap().0, 2);

        let p = diamond();
        assert_eq!(p.brute_force_k_width(1).unwrap().0, 2);
        // No 3-element chain allowed: drop one of bottom or top.
        assert_eq!(p.brute_force_k_width(2).unwrap().0, 3);
        assert_eq!(p.brute_force_k_width(3).unwrap().0, 4);
    }

    #[test]
    fn k_width_with_k_one_matches_width() {
        for p in [
            diamond(),
            diamond().product(&diamond()),
            GradedPoset::chain(&[2i64, 5, 1]).unwrap(),
            GradedPoset::<i64>::claw(5).unwrap(),
        ] {
            let (kw, members) = p.brute_force_k_width(1).unwrap();
            assert_eq!(kw, p.brute_force_width().unwrap().total_weight);
            assert!(p.is_antichain(&members).unwrap());
        }
    }

    #[test]
    fn product_with_singleton_is_identity() {
        let p = diamond();
        let q = p.product(&GradedPoset::singleton("pt", 1i64).unwrap());
        assert_eq!(q.len(), p.len());
        assert_eq!(q.covers(), p.covers());
        assert_eq!(q.weights(), p.weights());
        assert_eq!(
            (0..q.len()).map(|i| q.rank(i)).collect::<Vec<_>>(),
            (0..p.len()).map(|i| p.rank(i)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn two_chains_multiply_to_diamond() {
        let two = GradedPoset::chain(&unit_weights(2)).unwrap();
        let prod = two.product(&two);
        let d = diamond();
        assert_eq!(prod.covers(), d.covers());
        assert_eq!(prod.level_weights(), d.level_weights());
    }

    #[test]
    fn product_is_associative_under_flattening() {
        let a = GradedPoset::chain(&[1i64, 2]).unwrap();
        let b = GradedPoset::<i64>::claw(3).unwrap();
        let c = GradedPoset::chain(&[3i64, 1]).unwrap();
        let left = a.product(&b).product(&c);
        let right = a.product(&b.product(&c));
        assert!(left.len() <= 30);
        assert_eq!(left.covers(), right.covers());
        assert_eq!(left.weights(), right.weights());
    }

    #[test]
    fn stirling_factor_product_reproduces_symmetric_levels() {
        // chain with weights s_{3,1..3} times a 2-chain weighted (3, 1).
        let chain =
            GradedPoset::chain(&[BigInt::from(2), BigInt::from(3), BigInt::from(1)]).unwrap();
        let two = GradedPoset::chain(&[BigInt::from(3), BigInt::from(1)]).unwrap();
        let prod = chain.product(&two);
        let lw: Vec<BigInt> = prod.level_weights();
        assert_eq!(
            lw,
            vec![
                BigInt::from(6),
                BigInt::from(11),
                BigInt::from(6),
                BigInt::from(1)
            ]
        );
    }

    #[test]
    fn claw_products_level_weights_match_first_kind_stirling() {
        use crate::families::{stirling_row, StirlingKind};
        for n in 1..=6usize {
            let mut prod = GradedPoset::<BigInt>::claw(1).unwrap();
            for m in 2..=n {
                prod = prod.product(&GradedPoset::claw(m).unwrap());
            }
            let row: Vec<BigInt> = stirling_row(StirlingKind::First, n);
            let lw = prod.level_weights();
            // (x+1)(x+2)...(x+n-1) = sum_k s(n,k) x^(k-1): the rank-j level
            // weight is s(n, j+1), matching the symmetric-group convention.
            assert_eq!(lw.len(), n);
            for (j, w) in lw.iter().enumerate() {
                assert_eq!(w, &row[j + 1], "n={n} rank={j}");
            }
        }
    }
}
