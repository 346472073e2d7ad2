//! Simplicial immersions and embeddings of a pattern complex into a host.
//!
//! An embedding is an injective vertex map sending every pattern face onto a
//! host face. An immersion drops injectivity but requires each face to land
//! on three distinct host vertices spanning a face, and distinct pattern faces
//! to land on distinct host faces.
//!
//! The search is plain backtracking over vertex assignments. Pattern vertices
//! are placed in an order that starts from the face of largest total degree
//! and then greedily prefers vertices closing the most faces, so that each
//! new vertex is usually drawn from the third vertices of a single host edge.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::complex::{Complex2, VertexId};
use crate::error::{Error, Result};
use crate::scalar::{real, Float};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum MapKind {
    Immersion,
    Embedding,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    pub assignment: BTreeMap<VertexId, VertexId>,
    pub kind: MapKind,
}

impl VertexMap {
    /// Checks the defining conditions directly against both complexes.
    pub fn is_valid(&self, pattern: &Complex2, host: &Complex2) -> bool {
        if !pattern.vertices().iter().all(|v| {
            self.assignment
                .get(v)
                .is_some_and(|w| host.vertices().contains(w))
        }) {
            return false;
        }
        if self.kind == MapKind::Embedding {
            let images: BTreeSet<_> = pattern.vertices().iter().map(|v| self.assignment[v]).collect();
            if images.len() != pattern.num_vertices() {
                return false;
            }
        }
        let mut seen = BTreeSet::new();
        for f in pattern.faces() {
            let [a, b, c] = f.corners().map(|v| self.assignment[&v]);
            let Ok(img) = crate::complex::Face::new(a, b, c) else {
                return false;
            };
            if !host.faces().contains(&img) || !seen.insert(img) {
                return false;
            }
        }
        true
    }

    /// Restriction to the vertices of a subcomplex.
    pub fn restrict(&self, sub: &Complex2) -> VertexMap {
        VertexMap {
            assignment: sub.vertices().iter().map(|v| (*v, self.assignment[v])).collect(),
            kind: self.kind,
        }
    }
}

struct HostIndex {
    labels: Vec<VertexId>,
    n: u64,
    faces: HashSet<u64>,
    by_edge: HashMap<(u32, u32), Vec<u32>>,
    face_neighbours: Vec<Vec<u32>>,
    in_some_face: Vec<u32>,
}

impl HostIndex {
    fn new(host: &Complex2) -> Self {
        let labels: Vec<VertexId> = host.vertices().iter().copied().collect();
        let idx: HashMap<VertexId, u32> =
            labels.iter().enumerate().map(|(i, &v)| (v, i as u32)).collect();
        let n = labels.len() as u64;
        let mut faces = HashSet::with_capacity(host.num_faces());
        let mut by_edge: HashMap<(u32, u32), Vec<u32>> = HashMap::new();
        let mut nb: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); labels.len()];
        for f in host.faces() {
            let [a, b, c] = f.corners().map(|v| idx[&v]);
            faces.insert(key(n, a, b, c));
            for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
                by_edge.entry((x, y)).or_default().push(z);
                nb[x as usize].extend([y, z]);
                nb[z as usize].extend([x, y]);
            }
        }
        let in_some_face = (0..labels.len() as u32).filter(|&i| !nb[i as usize].is_empty()).collect();
        HostIndex {
            labels,
            n,
            faces,
            by_edge,
            face_neighbours: nb.into_iter().map(|s| s.into_iter().collect()).collect(),
            in_some_face,
        }
    }

    fn has_face(&self, a: u32, b: u32, c: u32) -> bool {
        self.faces.contains(&key(self.n, a, b, c))
    }

    fn third_vertices(&self, a: u32, b: u32) -> &[u32] {
        let k = if a < b { (a, b) } else { (b, a) };
        self.by_edge.get(&k).map_or(&[], Vec::as_slice)
    }
}

/// Sorted-triple key. Callers guarantee distinct entries.
fn key(n: u64, a: u32, b: u32, c: u32) -> u64 {
    let mut t = [a as u64, b as u64, c as u64];
    t.sort_unstable();
    (t[0] * n + t[1]) * n + t[2]
}

#[derive(Clone, Debug)]
enum Source {
    /// Any host vertex lying in a face.
    Any,
    /// Host face-neighbours of an assigned vertex.
    Near(usize),
    /// Third vertices over the host edge spanned by two assigned vertices.
    Over(usize, usize),
}

#[derive(Clone, Debug)]
struct Step {
    vertex: usize,
    source: Source,
    /// Other corners of the faces completed by this step.
    closes: Vec<[usize; 2]>,
}

struct Plan {
    labels: Vec<VertexId>,
    steps: Vec<Step>,
    /// Pattern vertices outside every face.
    loose: usize,
}

fn plan(pattern: &Complex2) -> Plan {
    let covered: BTreeSet<VertexId> = pattern.faces().iter().flat_map(|f| f.corners()).collect();
    let labels: Vec<VertexId> = covered.iter().copied().collect();
    let idx: BTreeMap<VertexId, usize> = labels.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let faces: Vec<[usize; 3]> = pattern
        .faces()
        .iter()
        .map(|f| f.corners().map(|v| idx[&v]))
        .collect();
    let degree = pattern.vertex_degrees();
    let k = labels.len();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, f) in faces.iter().enumerate() {
        for &v in f {
            incident[v].push(i);
        }
    }
    let others = |f: &[usize; 3], v: usize| -> [usize; 2] {
        let mut it = f.iter().copied().filter(|&x| x != v);
        [it.next().unwrap(), it.next().unwrap()]
    };

    let mut placed = vec![false; k];
    let mut steps: Vec<Step> = Vec::with_capacity(k);
    let place = |v: usize, placed: &mut Vec<bool>, steps: &mut Vec<Step>| {
        let mut source = Source::Any;
        let mut closes = Vec::new();
        for &fi in &incident[v] {
            let [a, b] = others(&faces[fi], v);
            match (placed[a], placed[b]) {
                (true, true) => {
                    closes.push([a, b]);
                    source = Source::Over(a, b);
                }
                (true, false) if matches!(source, Source::Any) => source = Source::Near(a),
                (false, true) if matches!(source, Source::Any) => source = Source::Near(b),
                _ => {}
            }
        }
        placed[v] = true;
        steps.push(Step {
            vertex: v,
            source,
            closes,
        });
    };
    let face_degree = |f: &[usize; 3]| f.iter().map(|&x| degree[&labels[x]]).sum::<usize>();
    while steps.len() < k {
        // rank by (faces closed, faces touched, degree)
        let (score, v) = (0..k)
            .filter(|&v| !placed[v])
            .map(|v| {
                let (mut closing, mut touching) = (0, 0);
                for &fi in &incident[v] {
                    let [a, b] = others(&faces[fi], v);
                    match (placed[a], placed[b]) {
                        (true, true) => closing += 1,
                        (false, false) => {}
                        _ => touching += 1,
                    }
                }
                ((closing, touching, degree[&labels[v]]), v)
            })
            .max_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)))
            .unwrap();
        if score.0 > 0 || score.1 > 0 {
            place(v, &mut placed, &mut steps);
            continue;
        }
        // new strong component: seed on its face of largest total degree
        let seed = faces
            .iter()
            .filter(|f| f.iter().all(|&x| !placed[x]))
            .max_by_key(|f| face_degree(f))
            .copied()
            .expect("an unplaced vertex lies in an unplaced face");
        for x in seed {
            place(x, &mut placed, &mut steps);
        }
    }
    Plan {
        labels,
        steps,
        loose: pattern.num_vertices() - k,
    }
}

enum Goal {
    Find,
    Count,
}

struct Search<'a> {
    plan: &'a Plan,
    host: &'a HostIndex,
    kind: MapKind,
    goal: Goal,
    image: Vec<u32>,
    used_vertex: Vec<bool>,
    used_faces: HashSet<u64>,
    count: u128,
    found: bool,
}

impl Search<'_> {
    fn run(&mut self, depth: usize) {
        if depth == self.plan.steps.len() {
            self.count += 1;
            self.found = true;
            return;
        }
        let step = &self.plan.steps[depth];
        let candidates: &[u32] = match step.source {
            Source::Any => &self.host.in_some_face,
            Source::Near(a) => &self.host.face_neighbours[self.image[a] as usize],
            Source::Over(a, b) => self.host.third_vertices(self.image[a], self.image[b]),
        };
        for &c in candidates {
            if self.kind == MapKind::Embedding && self.used_vertex[c as usize] {
                continue;
            }
            let mut ok = true;
            let mut claimed: Vec<u64> = Vec::new();
            for &[a, b] in &step.closes {
                let (ga, gb) = (self.image[a], self.image[b]);
                if ga == gb || ga == c || gb == c || !self.host.has_face(ga, gb, c) {
                    ok = false;
                    break;
                }
                if self.kind == MapKind::Immersion {
                    let k = key(self.host.n, ga, gb, c);
                    if !self.used_faces.insert(k) {
                        ok = false;
                        break;
                    }
                    claimed.push(k);
                }
            }
            if ok {
                self.image[step.vertex] = c;
                self.used_vertex[c as usize] = true;
                self.run(depth + 1);
                self.used_vertex[c as usize] = false;
            }
            for k in claimed {
                self.used_faces.remove(&k);
            }
            if self.found && matches!(self.goal, Goal::Find) {
                return;
            }
        }
    }
}

fn search(pattern: &Complex2, host: &Complex2, kind: MapKind, goal: Goal) -> (u128, Option<VertexMap>) {
    assert!(pattern.num_faces() > 0, "pattern must have at least one face");
    let plan = plan(pattern);
    let index = HostIndex::new(host);
    let mut s = Search {
        plan: &plan,
        host: &index,
        kind,
        goal,
        image: vec![0; plan.labels.len()],
        used_vertex: vec![false; index.labels.len()],
        used_faces: HashSet::new(),
        count: 0,
        found: false,
    };
    s.run(0);
    let face_maps = s.count;
    let host_n = index.labels.len() as u128;
    let k = plan.labels.len() as u128;
    let loose = plan.loose as u128;
    let count = match kind {
        MapKind::Embedding => {
            let free = host_n.saturating_sub(k);
            face_maps * (0..loose).map(|i| free.saturating_sub(i)).product::<u128>()
        }
        MapKind::Immersion => face_maps * host_n.pow(loose as u32),
    };
    if count == 0 || !s.found {
        return (count, None);
    }
    let image = s.image.clone();
    let mut assignment: BTreeMap<VertexId, VertexId> = plan
        .labels
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, index.labels[image[i] as usize]))
        .collect();
    let taken: BTreeSet<VertexId> = assignment.values().copied().collect();
    let mut spare = index.labels.iter().filter(|v| !taken.contains(v));
    for &v in pattern.vertices() {
        assignment.entry(v).or_insert_with(|| match kind {
            MapKind::Embedding => *spare.next().expect("counted spare host vertices"),
            MapKind::Immersion => index.labels[0],
        });
    }
    (count, Some(VertexMap { assignment, kind }))
}

/// A simplicial immersion of `pattern` into `host`, if one exists.
/// Panics if the pattern has no faces.
pub fn find_immersion(pattern: &Complex2, host: &Complex2) -> Option<VertexMap> {
    search(pattern, host, MapKind::Immersion, Goal::Find).1
}

/// A simplicial embedding of `pattern` into `host`, if one exists.
/// Panics if the pattern has no faces.
pub fn find_embedding(pattern: &Complex2, host: &Complex2) -> Option<VertexMap> {
    search(pattern, host, MapKind::Embedding, Goal::Find).1
}

/// Number of labeled embeddings (no symmetry reduction).
pub fn count_embeddings(pattern: &Complex2, host: &Complex2) -> u128 {
    search(pattern, host, MapKind::Embedding, Goal::Count).0
}

/// Number of labeled immersions.
pub fn count_immersions(pattern: &Complex2, host: &Complex2) -> u128 {
    search(pattern, host, MapKind::Immersion, Goal::Count).0
}

/// `C(n, v) v! p^f`, the mean number of labeled embeddings of `s` into a
/// random 2-complex on `n` vertices. Zero when `n < v`.
pub fn expected_embedding_count<F: Float>(s: &Complex2, n: u64, p: F) -> F {
    let v = s.num_vertices() as u64;
    if n < v {
        return F::zero();
    }
    let falling = (0..v).fold(F::one(), |acc, i| acc * real::<F>((n - i) as f64));
    falling * p.powi(s.num_faces() as i32)
}

/// `n^v p^f`, the first-moment bound on the probability of an immersion.
pub fn immersion_first_moment_bound<F: Float>(s: &Complex2, n: u64, p: F) -> F {
    real::<F>(n as f64).powi(s.num_vertices() as i32) * p.powi(s.num_faces() as i32)
}

/// `sum over nonempty face sets H of (n^{v_H} p^{f_H})^{-1}`, the curve that
/// bounds the probability of non-embeddability up to a constant factor.
pub fn non_embeddability_sum<F: Float>(s: &Complex2, n: u64, p: F) -> Result<F> {
    const LIMIT: usize = 24;
    let f = s.num_faces();
    if f == 0 {
        return Err(Error::NoFaces);
    }
    if f > LIMIT {
        return Err(Error::TooLargeForOracle { faces: f, limit: LIMIT });
    }
    let faces: Vec<_> = s.faces().iter().collect();
    let nf = real::<F>(n as f64);
    let mut total = F::zero();
    for mask in 1u32..(1 << f) {
        let vs: BTreeSet<VertexId> = (0..f)
            .filter(|&i| mask >> i & 1 == 1)
            .flat_map(|i| faces[i].corners())
            .collect();
        let fh = mask.count_ones() as i32;
        total = total + (nf.powi(vs.len() as i32) * p.powi(fh)).recip();
    }
    Ok(total)
}
