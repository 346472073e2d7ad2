use std::collections::{BTreeMap, BTreeSet};

use crate::complex::{Edge, VertexId};

/// A finite simple graph. Endpoints of edges are always in the vertex set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph1 {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
}

impl Graph1 {
    pub fn new(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Self {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        let mut vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        vertices.extend(edges.iter().flat_map(|e| e.endpoints()));
        Graph1 { vertices, edges }
    }

    /// Builds from raw label pairs. Panics on a loop or a zero label.
    pub fn from_pairs(pairs: &[(u32, u32)]) -> Self {
        Self::new(
            [],
            pairs
                .iter()
                .map(|&(a, b)| Edge::from_labels(a, b).expect("simple edge")),
        )
    }

    /// Cycle on `1..=n`.
    pub fn cycle(n: u32) -> Self {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        let pairs: Vec<(u32, u32)> = (1..=n).map(|i| (i, i % n + 1)).collect();
        Self::from_pairs(&pairs)
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64
    }

    pub fn degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut deg: BTreeMap<VertexId, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            for v in e.endpoints() {
                *deg.get_mut(&v).unwrap() += 1;
            }
        }
        deg
    }

    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let index: BTreeMap<VertexId, usize> =
            self.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut parent: Vec<usize> = (0..index.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in &self.edges {
            let [a, b] = e.endpoints();
            let (ra, rb) = (find(&mut parent, index[&a]), find(&mut parent, index[&b]));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: BTreeMap<usize, BTreeSet<VertexId>> = BTreeMap::new();
        for (&v, &i) in &index {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().insert(v);
        }
        groups.into_values().collect()
    }

    /// True for a connected 2-regular graph, i.e. one simple cycle.
    pub fn is_single_cycle(&self) -> bool {
        !self.vertices.is_empty()
            && self.degrees().values().all(|&d| d == 2)
            && self.components().len() == 1
    }
}
