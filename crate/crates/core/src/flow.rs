//! Dinic max-flow on integer capacities, with the source side of a minimum
//! cut.

use std::collections::VecDeque;

use num_traits::PrimInt;

#[derive(Clone, Debug)]
struct Arc<T> {
    to: usize,
    cap: T,
    rev: usize,
}

#[derive(Clone, Debug)]
pub struct FlowNetwork<T> {
    graph: Vec<Vec<Arc<T>>>,
    level: Vec<usize>,
    iter: Vec<usize>,
}

impl<T: PrimInt> FlowNetwork<T> {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            graph: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            iter: vec![0; nodes],
        }
    }

    pub fn num_nodes(&self) -> usize {
        self.graph.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: T) {
        assert!(cap >= T::zero(), "capacities are nonnegative");
        let (rf, rt) = (self.graph[to].len(), self.graph[from].len());
        self.graph[from].push(Arc { to, cap, rev: rf });
        self.graph[to].push(Arc {
            to: from,
            cap: T::zero(),
            rev: rt,
        });
    }

    fn bfs(&mut self, s: usize) {
        self.level.fill(usize::MAX);
        self.level[s] = 0;
        let mut q = VecDeque::from([s]);
        while let Some(u) = q.pop_front() {
            for a in &self.graph[u] {
                if a.cap > T::zero() && self.level[a.to] == usize::MAX {
                    self.level[a.to] = self.level[u] + 1;
                    q.push_back(a.to);
                }
            }
        }
    }

    fn dfs(&mut self, u: usize, t: usize, limit: T) -> T {
        if u == t {
            return limit;
        }
        while self.iter[u] < self.graph[u].len() {
            let i = self.iter[u];
            let Arc { to, cap, rev } = self.graph[u][i];
            if cap > T::zero() && self.level[u] < self.level[to] {
                let d = self.dfs(to, t, limit.min(cap));
                if d > T::zero() {
                    self.graph[u][i].cap = cap - d;
                    self.graph[to][rev].cap = self.graph[to][rev].cap + d;
                    return d;
                }
            }
            self.iter[u] += 1;
        }
        T::zero()
    }

    /// Saturates the network and returns the flow value. Capacities are
    /// consumed; call [`FlowNetwork::source_side`] afterwards for the cut.
    ///
    /// The total flow must fit in `T`.
    pub fn max_flow(&mut self, s: usize, t: usize) -> T {
        assert_ne!(s, t);
        let mut flow = T::zero();
        loop {
            self.bfs(s);
            if self.level[t] == usize::MAX {
                return flow;
            }
            self.iter.fill(0);
            loop {
                let f = self.dfs(s, t, T::max_value());
                if f == T::zero() {
                    break;
                }
                flow = flow + f;
            }
        }
    }

    /// Nodes reachable from `s` in the residual network: the source side of
    /// a minimum cut once [`FlowNetwork::max_flow`] has run.
    pub fn source_side(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.graph.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for a in &self.graph[u] {
                if a.cap > T::zero() && !seen[a.to] {
                    seen[a.to] = true;
                    stack.push(a.to);
                }
            }
        }
        seen
    }
}
