//! Canonical representation of finite 2-complexes and the combinatorial
//! queries the rest of the crate builds on.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::graph::Graph1;
use crate::scalar::{count, ExactInt};

/// A vertex label. Labels are positive; label spaces of different complexes
/// are independent.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn new(label: u32) -> Result<Self> {
        if label == 0 {
            return Err(Error::ZeroVertex);
        }
        Ok(VertexId(label))
    }

    pub fn label(self) -> u32 {
        self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An edge with endpoints stored in increasing order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge([VertexId; 2]);

impl Edge {
    pub fn new(a: VertexId, b: VertexId) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge([a, b])),
            std::cmp::Ordering::Greater => Ok(Edge([b, a])),
            std::cmp::Ordering::Equal => Err(Error::DegenerateEdge(a.0)),
        }
    }

    /// Shorthand for tests and generators working with raw labels.
    pub fn from_labels(a: u32, b: u32) -> Result<Self> {
        Edge::new(VertexId::new(a)?, VertexId::new(b)?)
    }

    pub fn endpoints(&self) -> [VertexId; 2] {
        self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0[0] == v || self.0[1] == v
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0[0], self.0[1])
    }
}

/// A 2-simplex with corners stored in strictly increasing order.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face([VertexId; 3]);

impl Face {
    pub fn new(a: VertexId, b: VertexId, c: VertexId) -> Result<Self> {
        let mut corners = [a, b, c];
        corners.sort_unstable();
        if corners[0] == corners[1] || corners[1] == corners[2] {
            return Err(Error::DegenerateFace(a.0, b.0, c.0));
        }
        Ok(Face(corners))
    }

    pub fn from_labels(a: u32, b: u32, c: u32) -> Result<Self> {
        Face::new(VertexId::new(a)?, VertexId::new(b)?, VertexId::new(c)?)
    }

    pub fn corners(&self) -> [VertexId; 3] {
        self.0
    }

    /// The three sub-edges in lexicographic order: `{a,b}`, `{a,c}`, `{b,c}`.
    pub fn edges(&self) -> [Edge; 3] {
        let [a, b, c] = self.0;
        [Edge([a, b]), Edge([a, c]), Edge([b, c])]
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }

    /// The corner opposite to `e`, if `e` is an edge of this face.
    pub fn opposite(&self, e: &Edge) -> Option<VertexId> {
        let [a, b] = e.0;
        if !self.contains(a) || !self.contains(b) {
            return None;
        }
        self.0.iter().copied().find(|&v| v != a && v != b)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}, {}}}", self.0[0], self.0[1], self.0[2])
    }
}

/// Dual diameter of a set of faces: finite for a single strong component.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Diameter {
    Finite(usize),
    Infinite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassifyFlags {
    pub pure: bool,
    pub closed: bool,
    pub strongly_connected: bool,
    pub pseudo_surface: bool,
    pub diameter: Diameter,
}

/// Vertex and edge degrees with their exact averages.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeProfile<T: ExactInt> {
    pub vertex_degrees: BTreeMap<VertexId, usize>,
    pub edge_degrees: BTreeMap<Edge, usize>,
    pub avg_vertex_degree: Ratio<T>,
    pub avg_edge_degree: Ratio<T>,
}

/// A finite simplicial complex of dimension at most 2, closed under faces.
///
/// Immutable once built; every constructor recomputes the closure.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Complex2 {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
    faces: BTreeSet<Face>,
}

impl Complex2 {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Closure of the given simplexes. A face listed twice is rejected.
    pub fn from_faces(
        faces: impl IntoIterator<Item = Face>,
        extra_edges: impl IntoIterator<Item = Edge>,
        extra_vertices: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self> {
        let mut face_set = BTreeSet::new();
        for f in faces {
            if !face_set.insert(f) {
                let [a, b, c] = f.0;
                return Err(Error::DuplicateFace(a.0, b.0, c.0));
            }
        }
        Ok(Self::closure(face_set, extra_edges, extra_vertices))
    }

    /// Builds from raw label triples, rejecting degenerate and repeated ones.
    pub fn from_triples(triples: &[[u32; 3]]) -> Result<Self> {
        let faces = triples
            .iter()
            .map(|t| Face::from_labels(t[0], t[1], t[2]))
            .collect::<Result<Vec<_>>>()?;
        Self::from_faces(faces, [], [])
    }

    /// Closure with set semantics: repeated simplexes are merged silently.
    pub fn closure(
        faces: impl IntoIterator<Item = Face>,
        extra_edges: impl IntoIterator<Item = Edge>,
        extra_vertices: impl IntoIterator<Item = VertexId>,
    ) -> Self {
        let faces: BTreeSet<Face> = faces.into_iter().collect();
        let mut edges: BTreeSet<Edge> = extra_edges.into_iter().collect();
        edges.extend(faces.iter().flat_map(|f| f.edges()));
        let mut vertices: BTreeSet<VertexId> = extra_vertices.into_iter().collect();
        vertices.extend(edges.iter().flat_map(|e| e.0));
        Complex2 {
            vertices,
            edges,
            faces,
        }
    }

    /// Full 1-skeleton on `{1, ..., n}` with the given faces on top.
    pub fn with_skeleton(n: u32, faces: impl IntoIterator<Item = Face>) -> Self {
        let vertices: BTreeSet<VertexId> = (1..=n).map(VertexId).collect();
        let mut edges = BTreeSet::new();
        for a in 1..=n {
            for b in a + 1..=n {
                edges.insert(Edge([VertexId(a), VertexId(b)]));
            }
        }
        Self::closure(faces, edges, vertices)
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn faces(&self) -> &BTreeSet<Face> {
        &self.faces
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn num_faces(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn max_label(&self) -> u32 {
        self.vertices.iter().next_back().map_or(0, |v| v.0)
    }

    /// `|V| - |E| + |F|`.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertices.len() as i64 - self.edges.len() as i64 + self.faces.len() as i64
    }

    /// Number of faces containing each edge; edges outside every face map to 0.
    pub fn edge_degrees(&self) -> BTreeMap<Edge, usize> {
        let mut deg: BTreeMap<Edge, usize> = self.edges.iter().map(|&e| (e, 0)).collect();
        for f in &self.faces {
            for e in f.edges() {
                *deg.get_mut(&e).expect("closure invariant") += 1;
            }
        }
        deg
    }

    /// Number of edges incident to each vertex.
    pub fn vertex_degrees(&self) -> BTreeMap<VertexId, usize> {
        let mut deg: BTreeMap<VertexId, usize> = self.vertices.iter().map(|&v| (v, 0)).collect();
        for e in &self.edges {
            for v in e.0 {
                *deg.get_mut(&v).expect("closure invariant") += 1;
            }
        }
        deg
    }

    /// Edges contained in exactly one face. Their union is the boundary.
    pub fn free_edges(&self) -> BTreeSet<Edge> {
        self.edge_degrees()
            .into_iter()
            .filter_map(|(e, d)| (d == 1).then_some(e))
            .collect()
    }

    pub fn degree_profile<T: ExactInt>(&self) -> Result<DegreeProfile<T>> {
        if self.vertices.is_empty() || self.edges.is_empty() {
            return Err(Error::EmptyComplex);
        }
        let vertex_degrees = self.vertex_degrees();
        let edge_degrees = self.edge_degrees();
        let vsum: usize = vertex_degrees.values().sum();
        let esum: usize = edge_degrees.values().sum();
        Ok(DegreeProfile {
            avg_vertex_degree: Ratio::new(count(vsum), count(self.vertices.len())),
            avg_edge_degree: Ratio::new(count(esum), count(self.edges.len())),
            vertex_degrees,
            edge_degrees,
        })
    }

    /// Faces containing `u`, in sorted order.
    pub fn star_faces(&self, u: VertexId) -> impl Iterator<Item = &Face> + '_ {
        self.faces.iter().filter(move |f| f.contains(u))
    }

    /// The link of `u`: one edge `{a,b}` per face `{u,a,b}`, on the vertex set
    /// of all neighbours of `u`.
    pub fn link_graph(&self, u: VertexId) -> Result<Graph1> {
        if !self.vertices.contains(&u) {
            return Err(Error::UnknownVertex(u));
        }
        let vertices = self
            .edges
            .iter()
            .filter(|e| e.contains(u))
            .map(|e| if e.0[0] == u { e.0[1] } else { e.0[0] });
        let edges = self.star_faces(u).map(|f| {
            let [a, b] = {
                let mut it = f.0.iter().copied().filter(|&v| v != u);
                [it.next().unwrap(), it.next().unwrap()]
            };
            Edge([a, b])
        });
        Ok(Graph1::new(vertices, edges))
    }

    /// Edge to incident faces (indices into the sorted face list).
    pub(crate) fn edge_face_incidence(&self) -> BTreeMap<Edge, Vec<usize>> {
        let mut inc: BTreeMap<Edge, Vec<usize>> = BTreeMap::new();
        for (i, f) in self.faces.iter().enumerate() {
            for e in f.edges() {
                inc.entry(e).or_default().push(i);
            }
        }
        inc
    }

    fn dual_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.faces.len()];
        for fs in self.edge_face_incidence().values() {
            for (k, &i) in fs.iter().enumerate() {
                for &j in &fs[k + 1..] {
                    adj[i].push(j);
                    adj[j].push(i);
                }
            }
        }
        for a in &mut adj {
            a.sort_unstable();
            a.dedup();
        }
        adj
    }

    /// Strong components (faces linked through shared edges) with the dual
    /// diameter of each component.
    pub fn strong_components(&self) -> Vec<(BTreeSet<Face>, usize)> {
        let faces: Vec<Face> = self.faces.iter().copied().collect();
        let adj = self.dual_adjacency();
        let mut comp = vec![usize::MAX; faces.len()];
        let mut out = Vec::new();
        for start in 0..faces.len() {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = out.len();
            let mut members = vec![start];
            comp[start] = id;
            let mut q = VecDeque::from([start]);
            while let Some(i) = q.pop_front() {
                for &j in &adj[i] {
                    if comp[j] == usize::MAX {
                        comp[j] = id;
                        members.push(j);
                        q.push_back(j);
                    }
                }
            }
            let diameter = members
                .iter()
                .map(|&s| eccentricity(&adj, s))
                .max()
                .unwrap_or(0);
            out.push((members.iter().map(|&i| faces[i]).collect(), diameter));
        }
        out
    }

    pub fn classify(&self) -> ClassifyFlags {
        let degrees = self.edge_degrees();
        let closed = degrees.values().all(|&d| d != 1);
        let pure = if self.faces.is_empty() {
            self.vertices.is_empty() && self.edges.is_empty()
        } else {
            let covered: BTreeSet<VertexId> = self.faces.iter().flat_map(|f| f.0).collect();
            degrees.values().all(|&d| d > 0) && covered.len() == self.vertices.len()
        };
        let comps = self.strong_components();
        let (strongly_connected, diameter) = match comps.as_slice() {
            [(_, d)] => (true, Diameter::Finite(*d)),
            _ => (false, Diameter::Infinite),
        };
        let pseudo_surface = pure && strongly_connected && degrees.values().all(|&d| d <= 2);
        ClassifyFlags {
            pure,
            closed,
            strongly_connected,
            pseudo_surface,
            diameter,
        }
    }

    /// Union of all faces with their closure.
    pub fn pure_part(&self) -> Complex2 {
        Self::closure(self.faces.iter().copied(), [], [])
    }

    /// Connected components of the underlying space, as vertex sets.
    pub fn connected_components(&self) -> Vec<BTreeSet<VertexId>> {
        Graph1::new(self.vertices.iter().copied(), self.edges.iter().copied()).components()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    pub fn is_subcomplex_of(&self, other: &Complex2) -> bool {
        self.vertices.is_subset(&other.vertices)
            && self.edges.is_subset(&other.edges)
            && self.faces.is_subset(&other.faces)
    }

    /// Checks the closure invariant by re-deriving it.
    pub fn is_closed_under_faces(&self) -> bool {
        self.faces
            .iter()
            .flat_map(|f| f.edges())
            .all(|e| self.edges.contains(&e))
            && self
                .edges
                .iter()
                .flat_map(|e| e.0)
                .all(|v| self.vertices.contains(&v))
    }

    /// Applies an injective relabeling. Panics if `map` is not injective on
    /// the vertex set or yields label 0.
    pub fn relabel(&self, mut map: impl FnMut(VertexId) -> VertexId) -> Complex2 {
        let table: BTreeMap<VertexId, VertexId> =
            self.vertices.iter().map(|&v| (v, map(v))).collect();
        let image: BTreeSet<VertexId> = table.values().copied().collect();
        assert_eq!(image.len(), table.len(), "relabeling must be injective");
        assert!(!image.contains(&VertexId(0)), "labels must be positive");
        let faces = self
            .faces
            .iter()
            .map(|f| Face::new(table[&f.0[0]], table[&f.0[1]], table[&f.0[2]]).unwrap());
        let edges = self
            .edges
            .iter()
            .map(|e| Edge::new(table[&e.0[0]], table[&e.0[1]]).unwrap());
        Self::closure(faces, edges, image)
    }

    /// Shifts every label by `offset`.
    pub fn shifted(&self, offset: u32) -> Complex2 {
        self.relabel(|v| VertexId(v.0 + offset))
    }

    /// Set union of two complexes over a shared label space.
    pub fn union(&self, other: &Complex2) -> Complex2 {
        Complex2 {
            vertices: self.vertices.union(&other.vertices).copied().collect(),
            edges: self.edges.union(&other.edges).copied().collect(),
            faces: self.faces.union(&other.faces).copied().collect(),
        }
    }

    /// Set intersection of two complexes over a shared label space.
    pub fn intersection(&self, other: &Complex2) -> Complex2 {
        Complex2 {
            vertices: self.vertices.intersection(&other.vertices).copied().collect(),
            edges: self.edges.intersection(&other.edges).copied().collect(),
            faces: self.faces.intersection(&other.faces).copied().collect(),
        }
    }

    /// Removes the given faces and edges. The caller guarantees that no
    /// remaining face uses a removed edge.
    pub(crate) fn without(&self, faces: &BTreeSet<Face>, edges: &BTreeSet<Edge>) -> Complex2 {
        Complex2 {
            vertices: self.vertices.clone(),
            edges: self.edges.difference(edges).copied().collect(),
            faces: self.faces.difference(faces).copied().collect(),
        }
    }
}

fn eccentricity(adj: &[Vec<usize>], start: usize) -> usize {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[start] = 0;
    let mut q = VecDeque::from([start]);
    let mut far = 0;
    while let Some(i) = q.pop_front() {
        far = far.max(dist[i]);
        for &j in &adj[i] {
            if dist[j] == usize::MAX {
                dist[j] = dist[i] + 1;
                q.push_back(j);
            }
        }
    }
    far
}

/// Dual distance between two faces: the least `k` such that a chain of `k+1`
/// faces, consecutive ones sharing an edge, joins them. `None` if no chain
/// exists or either face is missing.
pub fn dual_distance(s: &Complex2, a: &Face, b: &Face) -> Option<usize> {
    let faces: Vec<Face> = s.faces.iter().copied().collect();
    let ia = faces.binary_search(a).ok()?;
    let ib = faces.binary_search(b).ok()?;
    let adj = s.dual_adjacency();
    let mut dist = vec![usize::MAX; faces.len()];
    dist[ia] = 0;
    let mut q = VecDeque::from([ia]);
    while let Some(i) = q.pop_front() {
        if i == ib {
            return Some(dist[i]);
        }
        for &j in &adj[i] {
            if dist[j] == usize::MAX {
                dist[j] = dist[i] + 1;
                q.push_back(j);
            }
        }
    }
    None
}
