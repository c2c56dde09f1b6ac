//! Integer augmenting-path max-flow core used by every solver in this
//! module. Edges are stored in residual pairs (`e ^ 1` is the reverse of
//! `e`); augmenting paths are shortest-first via breadth-first search, so
//! results are deterministic given the edge insertion order.

use std::collections::VecDeque;

use crate::scalar::Scalar;

pub(crate) struct FlowEngine<W> {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    residual: Vec<W>,
}

impl<W: Scalar> FlowEngine<W> {
    pub fn new(nodes: usize) -> Self {
        Self {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            residual: Vec::new(),
        }
    }

    /// Adds a directed edge with the given capacity; returns its index.
    /// The paired reverse edge is `index ^ 1`.
    pub fn add_edge(&mut self, from: usize, to: usize, cap: W) -> usize {
        let idx = self.to.len();
        self.adj[from].push(idx);
        self.to.push(to);
        self.residual.push(cap);
        self.adj[to].push(idx + 1);
        self.to.push(from);
        self.residual.push(W::zero());
        idx
    }

    /// Flow currently assigned to a forward edge.
    pub fn flow(&self, edge: usize) -> W {
        self.residual[edge ^ 1].clone()
    }

    /// Shortest-augmenting-path max flow from `source` to `sink`.
    pub fn max_flow(&mut self, source: usize, sink: usize) -> W {
        let mut total = W::zero();
        let mut parent: Vec<Option<usize>> = vec![None; self.adj.len()];
        loop {
            parent.fill(None);
            let mut queue = VecDeque::new();
            queue.push_back(source);
            parent[source] = Some(usize::MAX);
            while let Some(v) = queue.pop_front() {
                if v == sink {
                    break;
                }
                for &e in &self.adj[v] {
                    let u = self.to[e];
                    if parent[u].is_none() && self.residual[e].is_positive() {
                        parent[u] = Some(e);
                        queue.push_back(u);
                    }
                }
            }
            if parent[sink].is_none() {
                return total;
            }
            // Bottleneck along the path, then apply it.
            let mut bottleneck: Option<W> = None;
            let mut v = sink;
            while v != source {
                let e = parent[v].expect("path edge");
                let r = &self.residual[e];
                bottleneck = Some(match bottleneck {
                    Some(b) if b <= *r => b,
                    _ => r.clone(),
                });
                v = self.to[e ^ 1];
            }
            let delta = bottleneck.expect("nonempty path");
            let mut v = sink;
            while v != source {
                let e = parent[v].expect("path edge");
                self.residual[e] = self.residual[e].clone() - delta.clone();
                self.residual[e ^ 1] = self.residual[e ^ 1].clone() + delta.clone();
                v = self.to[e ^ 1];
            }
            total = total + delta;
        }
    }

    /// Vertices reachable from `start` through strictly positive residuals.
    pub fn reachable(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        let mut queue = VecDeque::new();
        seen[start] = true;
        queue.push_back(start);
        while let Some(v) = queue.pop_front() {
            for &e in &self.adj[v] {
                let u = self.to[e];
                if !seen[u] && self.residual[e].is_positive() {
                    seen[u] = true;
                    queue.push_back(u);
                }
            }
        }
        seen
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_max_flow() {
        // Classic diamond with a bottleneck.
        let mut engine: FlowEngine<i64> = FlowEngine::new(4);
        let sa = engine.add_edge(0, 1, 3);
        let sb = engine.add_edge(0, 2, 2);
        engine.add_edge(1, 3, 2);
        engine.add_edge(2, 3, 3);
        engine.add_edge(1, 2, 1);
        assert_eq!(engine.max_flow(0, 3), 5);
        assert_eq!(engine.flow(sa) + engine.flow(sb), 5);
        let reach = engine.reachable(0);
        assert!(reach[0]);
        assert!(!reach[3]);
    }
}
