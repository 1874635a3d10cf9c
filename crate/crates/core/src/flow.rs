//! Min-cost max-flow by successive shortest paths with Johnson potentials.
//! Arc costs must be non-negative.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    cap: u64,
    cost: u64,
}

#[derive(Debug, Clone)]
pub(crate) struct MinCostFlow {
    arcs: Vec<Arc>,
    adj: Vec<Vec<usize>>,
    original_cap: Vec<u64>,
}

impl MinCostFlow {
    pub fn new(nodes: usize) -> Self {
        MinCostFlow { arcs: Vec::new(), adj: vec![Vec::new(); nodes], original_cap: Vec::new() }
    }

    /// Adds a forward arc and returns its handle for [`Self::flow_on`].
    pub fn add_arc(&mut self, from: usize, to: usize, cap: u64, cost: u64) -> usize {
        let id = self.arcs.len();
        self.arcs.push(Arc { to, cap, cost });
        self.arcs.push(Arc { to: from, cap: 0, cost: 0 });
        self.adj[from].push(id);
        self.adj[to].push(id + 1);
        self.original_cap.push(cap);
        self.original_cap.push(0);
        id
    }

    pub fn flow_on(&self, arc: usize) -> u64 {
        self.original_cap[arc] - self.arcs[arc].cap
    }

    fn reduced(&self, id: usize, from: usize, pot: &[i64]) -> i64 {
        let a = &self.arcs[id];
        let cost = if id.is_multiple_of(2) { a.cost as i64 } else { -(self.arcs[id - 1].cost as i64) };
        cost + pot[from] - pot[a.to]
    }

    /// Pushes as much flow as possible from `s` to `t` at minimum cost.
    /// Returns `(flow, cost)`.
    pub fn run(&mut self, s: usize, t: usize) -> (u64, u64) {
        let n = self.adj.len();
        let mut pot = vec![0i64; n];
        let (mut flow, mut cost) = (0u64, 0u64);
        loop {
            let mut dist = vec![i64::MAX; n];
            let mut prev: Vec<Option<usize>> = vec![None; n];
            dist[s] = 0;
            let mut heap = BinaryHeap::new();
            heap.push(Reverse((0i64, s)));
            while let Some(Reverse((d, u))) = heap.pop() {
                if d > dist[u] {
                    continue;
                }
                for &id in &self.adj[u] {
                    if self.arcs[id].cap == 0 {
                        continue;
                    }
                    let v = self.arcs[id].to;
                    let nd = d + self.reduced(id, u, &pot);
                    if nd < dist[v] {
                        dist[v] = nd;
                        prev[v] = Some(id);
                        heap.push(Reverse((nd, v)));
                    }
                }
            }
            if dist[t] == i64::MAX {
                break;
            }
            for v in 0..n {
                if dist[v] != i64::MAX {
                    pot[v] += dist[v];
                }
            }
            let mut push = u64::MAX;
            let mut v = t;
            while let Some(id) = prev[v] {
                push = push.min(self.arcs[id].cap);
                v = self.arcs[id ^ 1].to;
            }
            let mut v = t;
            while let Some(id) = prev[v] {
                self.arcs[id].cap -= push;
                self.arcs[id ^ 1].cap += push;
                let unit = if id % 2 == 0 { self.arcs[id].cost as i64 } else { -(self.arcs[id - 1].cost as i64) };
                cost = (cost as i64 + unit * push as i64) as u64;
                v = self.arcs[id ^ 1].to;
            }
            flow += push;
        }
        (flow, cost)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn picks_cheaper_route_and_respects_capacity() {
        // s=0, a=1, b=2, t=3
        let mut g = MinCostFlow::new(4);
        let sa = g.add_arc(0, 1, 2, 1);
        let sb = g.add_arc(0, 2, 2, 5);
        g.add_arc(1, 3, 1, 0);
        g.add_arc(2, 3, 3, 0);
        g.add_arc(1, 2, 1, 1);
        let (f, c) = g.run(0, 3);
        assert_eq!(f, 4);
        // a->t (1), a->b->t (2), then s->b->t (5) twice
        assert_eq!(c, 1 + 2 + 5 + 5);
        assert_eq!(g.flow_on(sa), 2);
        assert_eq!(g.flow_on(sb), 2);
    }

    #[test]
    fn uses_residual_reversal() {
        // classic case where the greedy first path must be undone
        let mut g = MinCostFlow::new(4);
        g.add_arc(0, 1, 1, 0);
        g.add_arc(0, 2, 1, 0);
        g.add_arc(1, 3, 1, 10);
        g.add_arc(1, 2, 1, 0);
        g.add_arc(2, 3, 1, 0);
        let (f, c) = g.run(0, 3);
        assert_eq!((f, c), (2, 10));
    }
}
