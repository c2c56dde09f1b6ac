//! Vertex-capacitated flow networks with exact arithmetic: underflow and
//! overflow classification, MaxFlow/MinCut, MinFlow/MaxAntichain, and
//! normalized-flow feasibility on bipartite networks.

mod engine;

use std::collections::VecDeque;

use num_rational::Ratio;
use num_traits::Zero;

use engine::FlowEngine;

use crate::error::{Error, Result};
use crate::poset::GradedPoset;
use crate::scalar::{sum, Scalar};

/// An acyclic digraph with a positive capacity on every vertex.
///
/// Sources are the vertices with no incoming edge, sinks those with no
/// outgoing edge; a vertex with no edges at all counts as both.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network<W> {
    capacities: Vec<W>,
    edges: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
    topo: Vec<usize>,
}

impl<W: Scalar> Network<W> {
    pub fn new(capacities: Vec<W>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = capacities.len();
        for (element, c) in capacities.iter().enumerate() {
            if !c.is_positive() {
                return Err(Error::NonPositiveWeight { element });
            }
        }
        let mut edges = edges;
        edges.sort_unstable();
        edges.dedup();
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for (idx, &(tail, head)) in edges.iter().enumerate() {
            for id in [tail, head] {
                if id >= n {
                    return Err(Error::UnknownElement { id, count: n });
                }
            }
            if tail == head {
                return Err(Error::CycleDetected);
            }
            out_adj[tail].push(idx);
            in_adj[head].push(idx);
        }
        let mut indegree: Vec<usize> = in_adj.iter().map(Vec::len).collect();
        let mut topo: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut head = 0;
        while head < topo.len() {
            let v = topo[head];
            head += 1;
            for &e in &out_adj[v] {
                let u = edges[e].1;
                indegree[u] -= 1;
                if indegree[u] == 0 {
                    topo.push(u);
                }
            }
        }
        if topo.len() != n {
            return Err(Error::CycleDetected);
        }
        Ok(Self {
            capacities,
            edges,
            out_adj,
            in_adj,
            topo,
        })
    }

    /// The Hasse network of a graded poset: one vertex per element with
    /// capacity equal to its weight, one edge per cover.
    pub fn hasse(poset: &GradedPoset<W>) -> Self {
        Self::new(poset.weights().to_vec(), poset.covers().to_vec())
            .expect("a graded poset is a valid network")
    }

    pub fn vertex_count(&self) -> usize {
        self.capacities.len()
    }

    pub fn capacity(&self, v: usize) -> &W {
        &self.capacities[v]
    }

    pub fn capacities(&self) -> &[W] {
        &self.capacities
    }

    /// Edges as `(tail, head)` pairs, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_source(&self, v: usize) -> bool {
        self.in_adj[v].is_empty()
    }

    pub fn is_sink(&self, v: usize) -> bool {
        self.out_adj[v].is_empty()
    }

    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.is_source(v))
            .collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.is_sink(v))
            .collect()
    }

    pub fn intermediates(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| !self.is_source(v) && !self.is_sink(v))
            .collect()
    }

    /// Graded rank per vertex (sources rank 0, each edge raising rank by
    /// one), when such an assignment exists.
    pub fn rank_assignment(&self) -> Result<Vec<usize>> {
        let mut ranks = vec![0usize; self.vertex_count()];
        for &v in &self.topo {
            let mut rank = 0usize;
            for (idx, &e) in self.in_adj[v].iter().enumerate() {
                let forced = ranks[self.edges[e].0] + 1;
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
        Ok(ranks)
    }

    /// Returns a comparable pair among `ids` in the path order of the
    /// digraph, or `None` if they form an antichain.
    pub fn antichain_violation(&self, ids: &[usize]) -> Result<Option<(usize, usize)>> {
        let n = self.vertex_count();
        let mut member = vec![false; n];
        for &id in ids {
            if id >= n {
                return Err(Error::UnknownElement { id, count: n });
            }
            member[id] = true;
        }
        let mut ancestor: Vec<Option<usize>> = vec![None; n];
        for &v in &self.topo {
            let mut anc = None;
            for &e in &self.in_adj[v] {
                let u = self.edges[e].0;
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
        Ok(None)
    }

    fn total_capacity(&self) -> W {
        sum(self.capacities.iter())
    }
}

/// An exact nonnegative rational flow value per edge, aligned with
/// [`Network::edges`].
#[derive(Debug, Clone)]
pub struct FlowAssignment<W> {
    values: Vec<Ratio<W>>,
}

impl<W: Scalar> FlowAssignment<W> {
    pub fn new(network: &Network<W>, values: Vec<Ratio<W>>) -> Result<Self> {
        if values.len() != network.edges().len() {
            return Err(Error::EdgeMismatch);
        }
        if values.iter().any(|v| v < &Ratio::zero()) {
            return Err(Error::InvalidInput(
                "flow values must be nonnegative".into(),
            ));
        }
        Ok(Self { values })
    }

    pub fn zero(network: &Network<W>) -> Self {
        Self {
            values: vec![Ratio::zero(); network.edges().len()],
        }
    }

    pub fn values(&self) -> &[Ratio<W>] {
        &self.values
    }

    pub fn value(&self, edge_index: usize) -> &Ratio<W> {
        &self.values[edge_index]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FlowClass {
    Underflow,
    Overflow,
    Both,
    Neither,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FlowViolation {
    /// Inflow differs from outflow at an intermediate vertex (breaks both
    /// classifications).
    NotConserved { vertex: usize },
    /// Throughput exceeds the capacity (breaks the underflow inequalities).
    ExceedsCapacity { vertex: usize },
    /// Throughput falls short of the capacity (breaks the overflow
    /// inequalities).
    BelowCapacity { vertex: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowClassification {
    pub class: FlowClass,
    pub violations: Vec<FlowViolation>,
}

fn vertex_throughputs<W: Scalar>(
    network: &Network<W>,
    flow: &FlowAssignment<W>,
) -> (Vec<Ratio<W>>, Vec<Ratio<W>>) {
    let n = network.vertex_count();
    let mut inflow: Vec<Ratio<W>> = vec![Ratio::zero(); n];
    let mut outflow: Vec<Ratio<W>> = vec![Ratio::zero(); n];
    for (idx, &(tail, head)) in network.edges().iter().enumerate() {
        let v = flow.value(idx).clone();
        outflow[tail] = outflow[tail].clone() + v.clone();
        inflow[head] = inflow[head].clone() + v;
    }
    (inflow, outflow)
}

/// Checks the underflow and overflow inequalities exactly, reporting every
/// violated constraint.
pub fn classify_flow<W: Scalar>(
    network: &Network<W>,
    flow: &FlowAssignment<W>,
) -> Result<FlowClassification> {
    if flow.values().len() != network.edges().len() {
        return Err(Error::EdgeMismatch);
    }
    let (inflow, outflow) = vertex_throughputs(network, flow);
    let mut violations = Vec::new();
    let mut under = true;
    let mut over = true;
    for v in 0..network.vertex_count() {
        let source = network.is_source(v);
        let sink = network.is_sink(v);
        if !source && !sink && inflow[v] != outflow[v] {
            violations.push(FlowViolation::NotConserved { vertex: v });
            under = false;
            over = false;
            continue;
        }
        // For sources the binding quantity is the outflow, for sinks the
        // inflow; for conserved intermediates they coincide.
        let through = if source { &outflow[v] } else { &inflow[v] };
        let cap = Ratio::from_integer(network.capacity(v).clone());
        if *through > cap {
            violations.push(FlowViolation::ExceedsCapacity { vertex: v });
            under = false;
        }
        if *through < cap {
            violations.push(FlowViolation::BelowCapacity { vertex: v });
            over = false;
        }
    }
    let class = match (under, over) {
        (true, true) => FlowClass::Both,
        (true, false) => FlowClass::Underflow,
        (false, true) => FlowClass::Overflow,
        (false, false) => FlowClass::Neither,
    };
    Ok(FlowClassification { class, violations })
}

/// Net S-T flow: the total flow leaving sources. Requires conservation at
/// every intermediate vertex, which also makes it the total entering sinks.
pub fn net_flow<W: Scalar>(network: &Network<W>, flow: &FlowAssignment<W>) -> Result<Ratio<W>> {
    if flow.values().len() != network.edges().len() {
        return Err(Error::EdgeMismatch);
    }
    let (inflow, outflow) = vertex_throughputs(network, flow);
    for v in 0..network.vertex_count() {
        if !network.is_source(v) && !network.is_sink(v) && inflow[v] != outflow[v] {
            return Err(Error::ConservationViolated { vertex: v });
        }
    }
    let from_sources = network
        .sources()
        .into_iter()
        .fold(Ratio::zero(), |acc: Ratio<W>, s| acc + outflow[s].clone());
    let into_sinks = network
        .sinks()
        .into_iter()
        .fold(Ratio::zero(), |acc: Ratio<W>, t| acc + inflow[t].clone());
    debug_assert_eq!(from_sources, into_sinks);
    Ok(from_sources)
}

#[derive(Debug, Clone)]
pub struct MaxFlowOutcome<W> {
    pub value: W,
    pub flow: FlowAssignment<W>,
    /// A minimum-weight vertex set meeting every source-to-sink path.
    pub min_cut: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct MinFlowOutcome<W> {
    pub value: W,
    pub flow: FlowAssignment<W>,
    /// A maximum-weight antichain in the path order of the network.
    pub antichain: Vec<usize>,
}

/// Maximum net S-T underflow, with a witness flow and a minimum vertex cut.
///
/// Vertex capacities are handled by splitting each vertex `v` into an
/// internal arc `v_in -> v_out` of capacity `ν(v)`; a super-source feeds all
/// sources, all sinks drain into a super-sink.
pub fn max_flow<W: Scalar>(network: &Network<W>) -> Result<MaxFlowOutcome<W>> {
    let n = network.vertex_count();
    if n == 0 {
        return Err(Error::NoSourceOrSink);
    }
    let inf = network.total_capacity() + W::one();
    let alpha = 2 * n;
    let omega = 2 * n + 1;
    let mut engine: FlowEngine<W> = FlowEngine::new(2 * n + 2);
    for v in 0..n {
        engine.add_edge(2 * v, 2 * v + 1, network.capacity(v).clone());
    }
    let mut edge_arcs = Vec::with_capacity(network.edges().len());
    for &(tail, head) in network.edges() {
        edge_arcs.push(engine.add_edge(2 * tail + 1, 2 * head, inf.clone()));
    }
    for s in network.sources() {
        engine.add_edge(alpha, 2 * s, inf.clone());
    }
    for t in network.sinks() {
        engine.add_edge(2 * t + 1, omega, inf.clone());
    }

    let value = engine.max_flow(alpha, omega);
    let witness = FlowAssignment::new(
        network,
        edge_arcs
            .iter()
            .map(|&e| Ratio::from_integer(engine.flow(e)))
            .collect(),
    )?;

    let reach = engine.reachable(alpha);
    let min_cut: Vec<usize> = (0..n)
        .filter(|&v| reach[2 * v] && !reach[2 * v + 1])
        .collect();
    let cut_weight = sum(min_cut.iter().map(|&v| network.capacity(v)));
    debug_assert_eq!(cut_weight, value, "max-flow / min-cut mismatch");
    if cut_weight != value {
        return Err(Error::InvalidInput(
            "internal error: min cut weight differs from max flow value".into(),
        ));
    }
    Ok(MaxFlowOutcome {
        value,
        flow: witness,
        min_cut,
    })
}

/// Minimum net S-T overflow, with a witness flow and a maximum-weight
/// antichain.
///
/// Every vertex carries the lower bound `ν(v)` on its internal arc. A
/// feasible overflow is built by routing each vertex's residual demand along
/// a source-to-sink path through it, then reduced to a minimum by a max-flow
/// computation in the reduction-residual network. The antichain is read off
/// the final residual cut: the vertices whose internal arc crosses it at
/// exactly its lower bound.
pub fn min_flow<W: Scalar>(network: &Network<W>) -> Result<MinFlowOutcome<W>> {
    let n = network.vertex_count();
    if n == 0 {
        return Err(Error::NoSourceOrSink);
    }
    let alpha = 2 * n;
    let omega = 2 * n + 1;
    let node_count = 2 * n + 2;

    // Arc list of the split network: (from, to, lower bound).
    let mut arcs: Vec<(usize, usize, W)> = Vec::new();
    let mut internal_arc = Vec::with_capacity(n);
    for v in 0..n {
        internal_arc.push(arcs.len());
        arcs.push((2 * v, 2 * v + 1, network.capacity(v).clone()));
    }
    let mut edge_arc = Vec::with_capacity(network.edges().len());
    for &(tail, head) in network.edges() {
        edge_arc.push(arcs.len());
        arcs.push((2 * tail + 1, 2 * head, W::zero()));
    }
    for s in network.sources() {
        arcs.push((alpha, 2 * s, W::zero()));
    }
    for t in network.sinks() {
        arcs.push((2 * t + 1, omega, W::zero()));
    }

    let mut out: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    let mut into: Vec<Vec<usize>> = vec![Vec::new(); node_count];
    for (i, &(from, to, _)) in arcs.iter().enumerate() {
        out[from].push(i);
        into[to].push(i);
    }

    // Static path trees found by one breadth-first search each:
    // toward_alpha[u] is an arc (v, u) on a path from alpha, toward_omega[v]
    // an arc (v, u) on a path to omega.
    let mut toward_alpha: Vec<Option<usize>> = vec![None; node_count];
    let mut queue = VecDeque::from([alpha]);
    let mut seen = vec![false; node_count];
    seen[alpha] = true;
    while let Some(v) = queue.pop_front() {
        for &a in &out[v] {
            let u = arcs[a].1;
            if !seen[u] {
                seen[u] = true;
                toward_alpha[u] = Some(a);
                queue.push_back(u);
            }
        }
    }
    let mut toward_omega: Vec<Option<usize>> = vec![None; node_count];
    let mut queue = VecDeque::from([omega]);
    let mut seen = vec![false; node_count];
    seen[omega] = true;
    while let Some(u) = queue.pop_front() {
        for &a in &into[u] {
            let v = arcs[a].0;
            if !seen[v] {
                seen[v] = true;
                toward_omega[v] = Some(a);
                queue.push_back(v);
            }
        }
    }
    for v in 0..n {
        if toward_alpha[2 * v].is_none() || toward_omega[2 * v + 1].is_none() {
            return Err(Error::UnsatisfiableLowerBound { vertex: v });
        }
    }

    // Feasible overflow: cover each vertex's remaining demand with one
    // source-to-sink path through it, in topological order.
    let mut flow: Vec<W> = vec![W::zero(); arcs.len()];
    let mut net = W::zero();
    for &v in &network.topo {
        let have = flow[internal_arc[v]].clone();
        if have >= *network.capacity(v) {
            continue;
        }
        let deficit = network.capacity(v).clone() - have;
        let mut node = 2 * v;
        while node != alpha {
            let arc = toward_alpha[node].expect("checked above");
            flow[arc] = flow[arc].clone() + deficit.clone();
            node = arcs[arc].0;
        }
        flow[internal_arc[v]] = flow[internal_arc[v]].clone() + deficit.clone();
        let mut node = 2 * v + 1;
        while node != omega {
            let arc = toward_omega[node].expect("checked above");
            flow[arc] = flow[arc].clone() + deficit.clone();
            node = arcs[arc].1;
        }
        net = net + deficit;
    }

    // Reduce to the minimum: push flow from omega back to alpha in the
    // residual network. Increases are unbounded; a finite stand-in larger
    // than any simple-path total is enough.
    let inf = net.clone() + W::one();
    let mut engine: FlowEngine<W> = FlowEngine::new(node_count);
    let mut dec_edge = Vec::with_capacity(arcs.len());
    let mut inc_edge = Vec::with_capacity(arcs.len());
    for (i, &(from, to, ref lower)) in arcs.iter().enumerate() {
        dec_edge.push(engine.add_edge(to, from, flow[i].clone() - lower.clone()));
        inc_edge.push(engine.add_edge(from, to, inf.clone()));
    }
    let reduction = engine.max_flow(omega, alpha);
    let value = net - reduction;

    let final_flow =
        |i: usize| -> W { flow[i].clone() - engine.flow(dec_edge[i]) + engine.flow(inc_edge[i]) };
    let witness = FlowAssignment::new(
        network,
        edge_arc
            .iter()
            .map(|&i| Ratio::from_integer(final_flow(i)))
            .collect(),
    )?;

    let reach = engine.reachable(omega);
    let antichain: Vec<usize> = (0..n)
        .filter(|&v| reach[2 * v + 1] && !reach[2 * v])
        .collect();
    let antichain_weight = sum(antichain.iter().map(|&v| network.capacity(v)));
    if antichain_weight != value {
        return Err(Error::InvalidInput(
            "internal error: antichain weight differs from min flow value".into(),
        ));
    }
    if let Some((lower, upper)) = network.antichain_violation(&antichain)? {
        return Err(Error::NotAntichain { lower, upper });
    }
    Ok(MinFlowOutcome {
        value,
        flow: witness,
        antichain,
    })
}

/// Outcome of a normalized-flow feasibility check on a bipartite network.
#[derive(Debug, Clone)]
pub struct NormalizedFlowOutcome<W> {
    pub feasible: bool,
    /// Deduplicated, sorted edges the check ran on.
    pub edges: Vec<(usize, usize)>,
    /// Exact flow per edge when feasible; row sums are `ω(x)/ω(S)` and
    /// column sums `ω(y)/ω(T)`.
    pub witness: Option<Vec<Ratio<W>>>,
    /// An S-side set `X` with `ω(X)·ω(T) > ω(D(X))·ω(S)` when infeasible,
    /// extracted from the residual cut.
    pub violating_set: Option<Vec<usize>>,
}

/// Decides whether the bipartite network accepts a normalized flow.
///
/// Feasibility is an integer max-flow on the scaled network: the super
/// source feeds `x` with capacity `ω(x)·ω(T)`, `y` drains with capacity
/// `ω(y)·ω(S)`, middle edges are effectively unbounded. Feasible exactly
/// when the flow reaches `ω(S)·ω(T)`; the witness divides the scaled flow
/// back down.
pub fn normalized_flow<W: Scalar>(
    s_weights: &[W],
    t_weights: &[W],
    edges: &[(usize, usize)],
) -> Result<NormalizedFlowOutcome<W>> {
    for (i, w) in s_weights.iter().enumerate() {
        if !w.is_positive() {
            return Err(Error::NonPositiveWeight { element: i });
        }
    }
    for (j, w) in t_weights.iter().enumerate() {
        if !w.is_positive() {
            return Err(Error::NonPositiveWeight {
                element: s_weights.len() + j,
            });
        }
    }
    let mut edges: Vec<(usize, usize)> = edges.to_vec();
    edges.sort_unstable();
    edges.dedup();
    for &(tail, head) in &edges {
        if tail >= s_weights.len() || head >= t_weights.len() {
            return Err(Error::NotBipartite { tail, head });
        }
    }
    if s_weights.is_empty() || t_weights.is_empty() {
        // With one side empty the other side's equalities are unsatisfiable;
        // with both empty the flow is vacuously the empty one.
        let feasible = s_weights.is_empty() && t_weights.is_empty();
        return Ok(NormalizedFlowOutcome {
            feasible,
            edges,
            witness: feasible.then(Vec::new),
            violating_set: None,
        });
    }
    let s_total = sum(s_weights.iter());
    let t_total = sum(t_weights.iter());
    let target = s_total.clone() * t_total.clone();

    let s_len = s_weights.len();
    let t_len = t_weights.len();
    let alpha = 0usize;
    let omega = 1 + s_len + t_len;
    let mut engine: FlowEngine<W> = FlowEngine::new(omega + 1);
    for (i, w) in s_weights.iter().enumerate() {
        engine.add_edge(alpha, 1 + i, w.clone() * t_total.clone());
    }
    let mut mid = Vec::with_capacity(edges.len());
    for &(x, y) in &edges {
        mid.push(engine.add_edge(1 + x, 1 + s_len + y, target.clone()));
    }
    for (j, w) in t_weights.iter().enumerate() {
        engine.add_edge(1 + s_len + j, omega, w.clone() * s_total.clone());
    }

    let value = engine.max_flow(alpha, omega);
    if value == target {
        let witness = mid
            .iter()
            .map(|&e| Ratio::new(engine.flow(e), target.clone()))
            .collect();
        Ok(NormalizedFlowOutcome {
            feasible: true,
            edges,
            witness: Some(witness),
            violating_set: None,
        })
    } else {
        let reach = engine.reachable(alpha);
        let violating: Vec<usize> = (0..s_len).filter(|&i| reach[1 + i]).collect();
        debug_assert!(!violating.is_empty());
        Ok(NormalizedFlowOutcome {
            feasible: false,
            edges,
            witness: None,
            violating_set: Some(violating),
        })
    }
}

const MIN_CUT_ORACLE_LIMIT: usize = 20;

/// Minimum-weight vertex set meeting every source-to-sink path, found by
/// enumerating all vertex subsets. Independent oracle for
/// [`max_flow`]'s MinCut witness; a vertex with no edges is itself a
/// trivial source-to-sink path and must be cut.
pub fn brute_force_min_vertex_cut<W: Scalar>(network: &Network<W>) -> Result<W> {
    let n = network.vertex_count();
    if n > MIN_CUT_ORACLE_LIMIT {
        return Err(Error::TooLargeForOracle {
            size: n,
            limit: MIN_CUT_ORACLE_LIMIT,
        });
    }
    let mut best: Option<W> = None;
    'masks: for mask in 0..(1u32 << n) {
        let cut = |v: usize| mask & (1 << v) != 0;
        for v in 0..n {
            if network.is_source(v) && network.is_sink(v) && !cut(v) {
                continue 'masks;
            }
        }
        let mut seen = vec![false; n];
        let mut stack: Vec<usize> = network.sources().into_iter().filter(|&s| !cut(s)).collect();
        for &s in &stack {
            seen[s] = true;
        }
        while let Some(v) = stack.pop() {
            if network.is_sink(v) {
                continue 'masks;
            }
            for &e in &network.out_adj[v] {
                let head = network.edges[e].1;
                if !cut(head) && !seen[head] {
                    seen[head] = true;
                    stack.push(head);
                }
            }
        }
        let weight = sum((0..n).filter(|&v| cut(v)).map(|v| network.capacity(v)));
        if best.as_ref().is_none_or(|b| weight < *b) {
            best = Some(weight);
        }
    }
    Ok(best.expect("the full vertex set is always a cut"))
}

/// Outcome of the brute-force normalized matching condition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NmcOutcome {
    pub holds: bool,
    /// First failing `X` in lexicographic order, when the condition fails.
    pub counterexample: Option<Vec<usize>>,
}

const NMC_ORACLE_LIMIT: usize = 20;
const NMC_MASK_BITS: usize = 64;

/// Checks `ω(X)·ω(T) ≤ ω(D(X))·ω(S)` for every `X` on the S side by
/// exhaustive enumeration in lexicographic order.
pub fn nmc_bruteforce<W: Scalar>(
    s_weights: &[W],
    t_weights: &[W],
    edges: &[(usize, usize)],
) -> Result<NmcOutcome> {
    let s_len = s_weights.len();
    let t_len = t_weights.len();
    if s_len > NMC_ORACLE_LIMIT {
        return Err(Error::TooLargeForOracle {
            size: s_len,
            limit: NMC_ORACLE_LIMIT,
        });
    }
    if t_len > NMC_MASK_BITS {
        return Err(Error::TooLargeForOracle {
            size: t_len,
            limit: NMC_MASK_BITS,
        });
    }
    let mut nbr = vec![0u64; s_len];
    for &(tail, head) in edges {
        if tail >= s_len || head >= t_len {
            return Err(Error::NotBipartite { tail, head });
        }
        nbr[tail] |= 1 << head;
    }
    let s_total = sum(s_weights.iter());
    let t_total = sum(t_weights.iter());

    struct Search<'a, W> {
        s_weights: &'a [W],
        t_weights: &'a [W],
        nbr: &'a [u64],
        s_total: W,
        t_total: W,
        members: Vec<usize>,
    }
    impl<W: Scalar> Search<'_, W> {
        // Visits subsets in lexicographic order of their ascending member
        // lists; the first failure found is the one reported.
        fn visit(&mut self, next: usize, d_mask: u64, wx: W, wd: W) -> Option<Vec<usize>> {
            if wx.clone() * self.t_total.clone() > wd.clone() * self.s_total.clone() {
                return Some(self.members.clone());
            }
            for j in next..self.s_weights.len() {
                let added = self.nbr[j] & !d_mask;
                let mut wd_next = wd.clone();
                let mut bits = added;
                while bits != 0 {
                    let y = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    wd_next = wd_next + self.t_weights[y].clone();
                }
                self.members.push(j);
                let hit = self.visit(
                    j + 1,
                    d_mask | self.nbr[j],
                    wx.clone() + self.s_weights[j].clone(),
                    wd_next,
                );
                self.members.pop();
                if hit.is_some() {
                    return hit;
                }
            }
            None
        }
    }

    let mut search = Search {
        s_weights,
        t_weights,
        nbr: &nbr,
        s_total,
        t_total,
        members: Vec::new(),
    };
    let counterexample = search.visit(0, 0, W::zero(), W::zero());
    Ok(NmcOutcome {
        holds: counterexample.is_none(),
        counterexample,
    })
}
