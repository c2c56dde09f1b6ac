//! Flow morphisms between networks: four-axiom verification, the two
//! collapsing constructions for symmetric groups, composition, and antichain
//! pullback.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::families::{
    stirling_row, symmetric_group_refinement, CopyDecomposition, StirlingKind, SymmetricGroup,
};
use crate::flownet::{normalized_flow, Network};
use crate::poset::GradedPoset;
use crate::scalar::{from_usize, sum, Scalar};

/// One verified axiom with its failures spelled out.
#[derive(Debug, Clone, Default)]
pub struct AxiomCheck {
    pub passed: bool,
    pub failures: Vec<String>,
}

impl AxiomCheck {
    fn from_failures(failures: Vec<String>) -> Self {
        Self {
            passed: failures.is_empty(),
            failures,
        }
    }
}

/// Normalized-flow verdict for the preimage of one codomain edge.
#[derive(Debug, Clone)]
pub struct EdgeFiberCheck<W> {
    pub edge: (usize, usize),
    /// Domain edges mapping onto this codomain edge.
    pub domain_edges: Vec<(usize, usize)>,
    pub feasible: bool,
    pub witness: Option<Vec<Ratio<W>>>,
}

/// Axiom-by-axiom verification report.
#[derive(Debug, Clone)]
pub struct MorphismReport<W> {
    /// Axiom 1: graph epimorphism. Domain edges must map onto a codomain
    /// edge or collapse inside a fiber; every codomain vertex and edge must
    /// be hit.
    pub epimorphism: AxiomCheck,
    /// Axiom 2: sources pull back to sources, sinks to sinks.
    pub boundaries: AxiomCheck,
    /// Axiom 3: fiber capacities sum to the image capacity.
    pub capacities: AxiomCheck,
    /// Axiom 4: every codomain edge's preimage accepts a normalized flow.
    pub edge_fibers: Vec<EdgeFiberCheck<W>>,
}

impl<W> MorphismReport<W> {
    pub fn all_pass(&self) -> bool {
        self.epimorphism.passed
            && self.boundaries.passed
            && self.capacities.passed
            && self.edge_fibers.iter().all(|e| e.feasible)
    }
}

/// A vertex map between two networks claimed to be a flow morphism.
#[derive(Debug, Clone)]
pub struct FlowMorphism<W> {
    domain: Network<W>,
    codomain: Network<W>,
    vertex_map: Vec<usize>,
    report: Option<MorphismReport<W>>,
}

impl<W: Scalar> FlowMorphism<W> {
    pub fn new(domain: Network<W>, codomain: Network<W>, vertex_map: Vec<usize>) -> Result<Self> {
        if vertex_map.len() != domain.vertex_count() {
            return Err(Error::InvalidInput(format!(
                "vertex map covers {} of {} domain vertices",
                vertex_map.len(),
                domain.vertex_count()
            )));
        }
        if let Some(&bad) = vertex_map.iter().find(|&&v| v >= codomain.vertex_count()) {
            return Err(Error::UnknownElement {
                id: bad,
                count: codomain.vertex_count(),
            });
        }
        Ok(Self {
            domain,
            codomain,
            vertex_map,
            report: None,
        })
    }

    pub fn domain(&self) -> &Network<W> {
        &self.domain
    }

    pub fn codomain(&self) -> &Network<W> {
        &self.codomain
    }

    pub fn vertex_map(&self) -> &[usize] {
        &self.vertex_map
    }

    pub fn report(&self) -> Option<&MorphismReport<W>> {
        self.report.as_ref()
    }

    pub fn is_verified(&self) -> bool {
        self.report.as_ref().is_some_and(MorphismReport::all_pass)
    }

    /// Element ids mapping to the given codomain vertex.
    pub fn fiber(&self, codomain_vertex: usize) -> Vec<usize> {
        (0..self.domain.vertex_count())
            .filter(|&v| self.vertex_map[v] == codomain_vertex)
            .collect()
    }

    /// Checks all four axioms exactly and caches the report.
    pub fn verify(&mut self) -> &MorphismReport<W> {
        self.verify_with_jobs(1)
    }

    /// Same as [`verify`](Self::verify), with the per-edge normalized-flow
    /// checks of axiom 4 run on `jobs` threads.
    pub fn verify_with_jobs(&mut self, jobs: usize) -> &MorphismReport<W> {
        if self.report.is_none() {
            let report = self.compute_report(jobs);
            self.report = Some(report);
        }
        self.report.as_ref().expect("just stored")
    }

    fn compute_report(&self, jobs: usize) -> MorphismReport<W> {
        let dom = &self.domain;
        let cod = &self.codomain;
        let map = &self.vertex_map;

        let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); cod.vertex_count()];
        for (v, &img) in map.iter().enumerate() {
            fibers[img].push(v);
        }

        // Axiom 1: epimorphism under the collapsed-edge convention.
        let mut fails = Vec::new();
        for (img, fiber) in fibers.iter().enumerate() {
            if fiber.is_empty() {
                fails.push(format!("codomain vertex {img} has an empty fiber"));
            }
        }
        let mut edge_hit = vec![false; cod.edges().len()];
        let cod_edge_index = |pair: (usize, usize)| cod.edges().binary_search(&pair).ok();
        for &(u, v) in dom.edges() {
            let image = (map[u], map[v]);
            if image.0 == image.1 {
                continue; // collapsed inside a fiber
            }
            match cod_edge_index(image) {
                Some(idx) => edge_hit[idx] = true,
                None => fails.push(format!(
                    "domain edge ({u}, {v}) maps to ({}, {}), which is neither an edge nor a single vertex",
                    image.0, image.1
                )),
            }
        }
        for (idx, hit) in edge_hit.iter().enumerate() {
            if !hit {
                let (a, b) = cod.edges()[idx];
                fails.push(format!("codomain edge ({a}, {b}) has no preimage edge"));
            }
        }
        let epimorphism = AxiomCheck::from_failures(fails);

        // Axiom 2: boundary preservation.
        let mut fails = Vec::new();
        for (v, &img) in map.iter().enumerate() {
            if dom.is_source(v) != cod.is_source(img) {
                fails.push(format!(
                    "vertex {v} is {} a source but its image {img} is {}",
                    if dom.is_source(v) { "" } else { "not" },
                    if cod.is_source(img) { "one" } else { "not" }
                ));
            }
            if dom.is_sink(v) != cod.is_sink(img) {
                fails.push(format!(
                    "vertex {v} sink status differs from its image {img}"
                ));
            }
        }
        let boundaries = AxiomCheck::from_failures(fails);

        // Axiom 3: capacity preservation fiber by fiber.
        let mut fails = Vec::new();
        for (img, fiber) in fibers.iter().enumerate() {
            let total = sum(fiber.iter().map(|&v| dom.capacity(v)));
            if total != *cod.capacity(img) {
                fails.push(format!(
                    "fiber of {img} weighs {total}, capacity is {}",
                    cod.capacity(img)
                ));
            }
        }
        let capacities = AxiomCheck::from_failures(fails);

        // Axiom 4: normalized flow on every codomain edge preimage.
        let check_edge = |&(a, b): &(usize, usize)| -> EdgeFiberCheck<W> {
            let s_side = &fibers[a];
            let t_side = &fibers[b];
            let mut s_index = vec![usize::MAX; dom.vertex_count()];
            for (i, &v) in s_side.iter().enumerate() {
                s_index[v] = i;
            }
            let mut t_index = vec![usize::MAX; dom.vertex_count()];
            for (j, &v) in t_side.iter().enumerate() {
                t_index[v] = j;
            }
            let mut local = Vec::new();
            for &(u, v) in dom.edges() {
                if map[u] == a && map[v] == b {
                    local.push((s_index[u], t_index[v]));
                }
            }
            let s_weights: Vec<W> = s_side.iter().map(|&v| dom.capacity(v).clone()).collect();
            let t_weights: Vec<W> = t_side.iter().map(|&v| dom.capacity(v).clone()).collect();
            let outcome = normalized_flow(&s_weights, &t_weights, &local)
                .expect("fiber sides are positive and edges in range");
            EdgeFiberCheck {
                edge: (a, b),
                domain_edges: outcome
                    .edges
                    .iter()
                    .map(|&(i, j)| (s_side[i], t_side[j]))
                    .collect(),
                feasible: outcome.feasible,
                witness: outcome.witness,
            }
        };

        let cod_edges = cod.edges();
        let jobs = jobs.max(1).min(cod_edges.len().max(1));
        let edge_fibers = if jobs <= 1 {
            cod_edges.iter().map(check_edge).collect()
        } else {
            let mut slots: Vec<Option<EdgeFiberCheck<W>>> = Vec::new();
            slots.resize_with(cod_edges.len(), || None);
            let chunk_len = cod_edges.len().div_ceil(jobs);
            std::thread::scope(|scope| {
                for (worker, chunk) in slots.chunks_mut(chunk_len).enumerate() {
                    let check_edge = &check_edge;
                    scope.spawn(move || {
                        for (offset, slot) in chunk.iter_mut().enumerate() {
                            *slot = Some(check_edge(&cod_edges[worker * chunk_len + offset]));
                        }
                    });
                }
            });
            slots.into_iter().map(|s| s.expect("processed")).collect()
        };

        MorphismReport {
            epimorphism,
            boundaries,
            capacities,
            edge_fibers,
        }
    }

    /// Pulls a codomain antichain back to the union of its fibers.
    ///
    /// Requires a fully verified morphism. The preimage is checked to be an
    /// antichain of the same weight, which the axioms guarantee for the
    /// collapse constructions here.
    pub fn pull_back_antichain(&self, antichain: &[usize]) -> Result<(Vec<usize>, W)> {
        if !self.is_verified() {
            return Err(Error::MorphismUnverified);
        }
        let mut wanted = antichain.to_vec();
        wanted.sort_unstable();
        wanted.dedup();
        for &v in &wanted {
            if v >= self.codomain.vertex_count() {
                return Err(Error::UnknownElement {
                    id: v,
                    count: self.codomain.vertex_count(),
                });
            }
        }
        if let Some((lower, upper)) = self.codomain.antichain_violation(&wanted)? {
            return Err(Error::NotAntichain { lower, upper });
        }
        let preimage: Vec<usize> = (0..self.domain.vertex_count())
            .filter(|&v| wanted.binary_search(&self.vertex_map[v]).is_ok())
            .collect();
        if let Some((lower, upper)) = self.domain.antichain_violation(&preimage)? {
            return Err(Error::NotAntichain { lower, upper });
        }
        let weight = sum(preimage.iter().map(|&v| self.domain.capacity(v)));
        let image_weight = sum(wanted.iter().map(|&v| self.codomain.capacity(v)));
        debug_assert_eq!(weight, image_weight, "capacity axiom");
        Ok((preimage, weight))
    }

    /// Composes `self: M -> N` with `next: N -> P`. The intermediate
    /// networks must agree structurally.
    pub fn compose(&self, next: &FlowMorphism<W>) -> Result<FlowMorphism<W>> {
        if self.codomain != next.domain {
            return Err(Error::InvalidInput(
                "codomain of the first morphism differs from the domain of the second".into(),
            ));
        }
        FlowMorphism::new(
            self.domain.clone(),
            next.codomain.clone(),
            self.vertex_map
                .iter()
                .map(|&v| next.vertex_map[v])
                .collect(),
        )
    }
}

/// The collapse of `S_{n+1}` onto the two-chain network: the `n` lower
/// copies of `S_n` merge into a left chain with capacities `n·s(n,k)`, the
/// raised copy becomes a right chain with capacities `s(n,k-1)`, and the red
/// edges collapse to the diagonal `left_k -> right_{k+1}`.
///
/// Codomain ids: `left_k` is `k - 1` for `k = 1..=n`, `right_k` is
/// `n + k - 2` for `k = 2..=n+1`.
#[derive(Debug, Clone)]
pub struct TwoChainCollapse<W> {
    pub group: SymmetricGroup<W>,
    pub decomposition: CopyDecomposition,
    pub morphism: FlowMorphism<W>,
}

pub fn collapse_to_two_chain<W: Scalar>(n: usize) -> Result<TwoChainCollapse<W>> {
    if n == 0 || n + 1 > 7 {
        return Err(Error::SizeLimit {
            what: "two-chain collapse",
            value: n + 1,
            limit: 7,
        });
    }
    let group: SymmetricGroup<W> = symmetric_group_refinement(n + 1)?;
    let decomposition = group.copy_decomposition()?;
    let row: Vec<W> = stirling_row(StirlingKind::First, n);
    let n_scalar: W = from_usize(n);

    let left = |k: usize| k - 1;
    let right = |k: usize| n + k - 2;
    let mut capacities = Vec::with_capacity(2 * n);
    for entry in &row[1..=n] {
        capacities.push(n_scalar.clone() * entry.clone());
    }
    capacities.extend(row[1..=n].iter().cloned());
    let mut edges = Vec::new();
    for k in 1..n {
        edges.push((left(k), left(k + 1)));
    }
    for k in 2..=n {
        edges.push((right(k), right(k + 1)));
    }
    for k in 1..=n {
        edges.push((left(k), right(k + 1)));
    }
    let codomain = Network::new(capacities, edges)?;

    let raised = decomposition.raised_copy();
    let vertex_map = group
        .perms
        .iter()
        .enumerate()
        .map(|(id, pi)| {
            let cycles = pi.cycle_count();
            if decomposition.copy_of[id] == raised {
                right(cycles)
            } else {
                left(cycles)
            }
        })
        .collect();

    let morphism = FlowMorphism::new(Network::hasse(&group.poset), codomain, vertex_map)?;
    Ok(TwoChainCollapse {
        group,
        decomposition,
        morphism,
    })
}

/// Collapses a graded poset's Hasse network onto a chain by rank: one
/// codomain vertex per rank, capacity equal to the level weight.
pub fn collapse_to_chain<W: Scalar>(poset: &GradedPoset<W>) -> FlowMorphism<W> {
    let capacities = poset.level_weights();
    let edges = (1..capacities.len()).map(|r| (r - 1, r)).collect();
    let codomain = Network::new(capacities, edges).expect("levels form a chain");
    let vertex_map = (0..poset.len()).map(|v| poset.rank(v)).collect();
    FlowMorphism::new(Network::hasse(poset), codomain, vertex_map)
        .expect("rank map is total and in range")
}

/// Rank-collapse for a bare network whose edges admit a graded rank
/// assignment (as the two-chain codomains do).
pub fn collapse_network_to_chain<W: Scalar>(network: &Network<W>) -> Result<FlowMorphism<W>> {
    let ranks = network.rank_assignment()?;
    let height = ranks.iter().copied().max().map_or(0, |m| m + 1);
    let mut capacities = vec![W::zero(); height];
    for (v, &r) in ranks.iter().enumerate() {
        capacities[r] = capacities[r].clone() + network.capacity(v).clone();
    }
    let edges = (1..height).map(|r| (r - 1, r)).collect();
    let codomain = Network::new(capacities, edges)?;
    FlowMorphism::new(network.clone(), codomain, ranks)
}
