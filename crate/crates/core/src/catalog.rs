//! Deterministic generators for the named complexes used as fixtures.
//!
//! Labels are consecutive from 1 unless a generator extends an existing
//! complex, in which case fresh labels continue above its largest label.

use crate::complex::{Complex2, Edge, Face, VertexId};
use crate::error::{Error, Result};
use crate::graph::Graph1;

fn face(a: u32, b: u32, c: u32) -> Face {
    Face::from_labels(a, b, c).expect("generator emits nondegenerate faces")
}

fn build(faces: impl IntoIterator<Item = Face>) -> Complex2 {
    Complex2::from_faces(faces, [], []).expect("generator emits distinct faces")
}

/// Cone over `g` with a fresh apex above the largest label of `g`.
pub fn cone_over_graph(g: &Graph1) -> Complex2 {
    let apex = VertexId(g.vertices().iter().next_back().map_or(1, |v| v.0 + 1));
    let faces = g.edges().iter().map(|e| {
        let [a, b] = e.endpoints();
        Face::new(a, b, apex).unwrap()
    });
    Complex2::closure(faces, [], g.vertices().iter().copied().chain([apex]))
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum GammaKind {
    /// Two cycles of `x` and `y` edges joined by a path of `z` edges
    /// (`z = 0`: the cycles share a vertex).
    TwoCircles,
    /// Two branch vertices joined by three disjoint paths of `x`, `y`, `z`
    /// edges.
    Theta,
}

/// The graphs `Γ_{x,y,z}` and `Γ'_{x,y,z}`, both with Euler characteristic -1.
pub fn gamma_graph(kind: GammaKind, x: u32, y: u32, z: u32) -> Result<Graph1> {
    if x < 3 || y < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle lengths must be at least 3, got x={x}, y={y}"
        )));
    }
    let mut pairs = Vec::new();
    let mut next = 1u32;
    let mut fresh = || {
        let v = next;
        next += 1;
        v
    };
    match kind {
        GammaKind::TwoCircles => {
            let left: Vec<u32> = (0..x).map(|_| fresh()).collect();
            for i in 0..x as usize {
                pairs.push((left[i], left[(i + 1) % x as usize]));
            }
            // path of z edges from left[0] to the right cycle's base vertex
            let mut tail = left[0];
            for _ in 0..z {
                let v = fresh();
                pairs.push((tail, v));
                tail = v;
            }
            let mut right = vec![tail];
            right.extend((1..y).map(|_| fresh()));
            for i in 0..y as usize {
                pairs.push((right[i], right[(i + 1) % y as usize]));
            }
        }
        GammaKind::Theta => {
            if z < 1 {
                return Err(Error::InvalidParameter(
                    "theta graph needs a third arc of at least one edge".into(),
                ));
            }
            let (a, b) = (fresh(), fresh());
            for len in [x, y, z] {
                let mut prev = a;
                for _ in 1..len {
                    let v = fresh();
                    pairs.push((prev, v));
                    prev = v;
                }
                pairs.push((prev, b));
            }
        }
    }
    Ok(Graph1::from_pairs(&pairs))
}

/// The disk `L_{x,y}`: two adjacent interior vertices of degrees `x` and `y`.
/// `L_{3,3}` is the tetrahedron. Panics if `x < 3` or `y < 3`.
///
/// Labels: interior vertices 1 and 2, the shared link vertices 3 and 4, then
/// the fan vertices around 1 followed by those around 2.
pub fn l_xy(x: u32, y: u32) -> Complex2 {
    assert!(x >= 3 && y >= 3, "L_xy needs x, y >= 3");
    let (v, w, a, b) = (1, 2, 3, 4);
    let mut faces = vec![face(v, w, a), face(v, w, b)];
    let mut next = 5;
    for (centre, degree) in [(v, x), (w, y)] {
        let mut path = vec![a];
        for _ in 0..degree - 3 {
            path.push(next);
            next += 1;
        }
        path.push(b);
        faces.extend(path.windows(2).map(|p| face(centre, p[0], p[1])));
    }
    build(faces)
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum DiskKind {
    Ngon,
    ImplantedNgon,
}

pub fn disk(kind: DiskKind, n: u32) -> Complex2 {
    match kind {
        DiskKind::Ngon => ngon_disk(n),
        DiskKind::ImplantedNgon => implanted_ngon_disk(n),
    }
}

/// Cone over an `n`-cycle: rim `1..=n`, apex `n + 1`. Panics if `n < 3`.
pub fn ngon_disk(n: u32) -> Complex2 {
    cone_over_graph(&Graph1::cycle(n))
}

/// A square with an implanted `n`-gon: boundary square `1..=4`, inner cycle
/// `5..=n+4` coned to the centre `n + 5`, and an annulus between the square
/// and the inner cycle with no interior vertices. Panics if `n < 3`.
pub fn implanted_ngon_disk(n: u32) -> Complex2 {
    assert!(n >= 3, "inner polygon needs at least 3 sides");
    let square = [1, 2, 3, 4];
    let inner = |i: u32| 5 + i % n;
    let centre = n + 5;
    let mut faces: Vec<Face> = (0..n).map(|i| face(centre, inner(i), inner(i + 1))).collect();
    // square corner j covers inner vertices arc[j]..=arc[j+1]
    let arc: Vec<u32> = (0..=4).map(|j| j * n / 4).collect();
    for j in 0..4 {
        for i in arc[j]..arc[j + 1] {
            faces.push(face(square[j], inner(i), inner(i + 1)));
        }
        faces.push(face(square[j], square[(j + 1) % 4], inner(arc[j + 1])));
    }
    build(faces)
}

/// Boundary edge of [`implanted_ngon_disk`] used for the pendant construction.
pub fn implanted_boundary_edge() -> Edge {
    Edge::from_labels(1, 2).unwrap()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum SurfaceKind {
    Sphere4,
    Torus7,
    Rp2_6,
    Klein8,
}

impl SurfaceKind {
    pub const ALL: [SurfaceKind; 4] = [
        SurfaceKind::Sphere4,
        SurfaceKind::Torus7,
        SurfaceKind::Rp2_6,
        SurfaceKind::Klein8,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SurfaceKind::Sphere4 => "sphere4",
            SurfaceKind::Torus7 => "torus7",
            SurfaceKind::Rp2_6 => "rp2_6",
            SurfaceKind::Klein8 => "klein8",
        }
    }

    pub fn orientable(self) -> bool {
        matches!(self, SurfaceKind::Sphere4 | SurfaceKind::Torus7)
    }
}

/// Small vertex-minimal triangulations of closed surfaces.
pub fn closed_surface(kind: SurfaceKind) -> Complex2 {
    match kind {
        SurfaceKind::Sphere4 => build([face(1, 2, 3), face(1, 2, 4), face(1, 3, 4), face(2, 3, 4)]),
        SurfaceKind::Torus7 => build((0..7).flat_map(|i| {
            let l = |k: u32| 1 + (i + k) % 7;
            [face(l(0), l(1), l(3)), face(l(0), l(2), l(3))]
        })),
        SurfaceKind::Rp2_6 => build(
            [
                [1, 2, 3],
                [1, 3, 4],
                [1, 4, 5],
                [1, 5, 6],
                [1, 6, 2],
                [2, 3, 5],
                [3, 4, 6],
                [4, 5, 2],
                [5, 6, 3],
                [6, 2, 4],
            ]
            .map(|[a, b, c]| face(a, b, c)),
        ),
        SurfaceKind::Klein8 => build(
            [
                [2, 3, 8],
                [2, 3, 5],
                [1, 2, 5],
                [1, 2, 8],
                [1, 4, 5],
                [1, 4, 6],
                [1, 3, 6],
                [1, 3, 7],
                [1, 7, 8],
                [3, 5, 6],
                [3, 4, 7],
                [3, 4, 8],
                [4, 5, 8],
                [4, 6, 7],
                [5, 6, 8],
                [6, 7, 8],
            ]
            .map(|[a, b, c]| face(a, b, c)),
        ),
    }
}

/// `k = 0`: three triangles on the common edge `{1,2}` with apexes 3, 4, 5.
/// `k >= 1`: the common edge is split into `k + 1` segments by the vertices
/// `6..=k+5`, each segment joined to all three apexes.
pub fn triod(k: u32) -> Complex2 {
    let mut path = vec![1];
    path.extend(6..6 + k);
    path.push(2);
    build(
        path.windows(2)
            .flat_map(|p| [3, 4, 5].map(|apex| face(p[0], p[1], apex))),
    )
}

/// Glues a new triangle onto the edge `e` of `s` through one fresh vertex.
pub fn attach_triangle(s: &Complex2, e: Edge) -> Result<Complex2> {
    if !s.edges().contains(&e) {
        return Err(Error::EdgeNotInComplex(e));
    }
    let [a, b] = e.endpoints();
    let u = VertexId(s.max_label() + 1);
    let mut faces: Vec<Face> = s.faces().iter().copied().collect();
    faces.push(Face::new(a, b, u).unwrap());
    Ok(Complex2::closure(
        faces,
        s.edges().iter().copied(),
        s.vertices().iter().copied(),
    ))
}

/// Every named fixture with its parameters, used across the test suites.
pub fn fixtures() -> Vec<(String, Complex2)> {
    let mut out: Vec<(String, Complex2)> = SurfaceKind::ALL
        .iter()
        .map(|&k| (k.name().to_string(), closed_surface(k)))
        .collect();
    for k in [0, 1, 2, 8, 10] {
        out.push((format!("triod {k}"), triod(k)));
    }
    for (x, y) in [(3, 3), (4, 3), (4, 4), (5, 4), (6, 6)] {
        out.push((format!("lxy {x} {y}"), l_xy(x, y)));
    }
    for n in [3, 4, 5, 6, 8] {
        out.push((format!("ngon {n}"), ngon_disk(n)));
    }
    for n in [3, 4, 5, 8] {
        out.push((format!("implanted {n}"), implanted_ngon_disk(n)));
    }
    out.push((
        "pendant 8".into(),
        attach_triangle(&implanted_ngon_disk(8), implanted_boundary_edge()).unwrap(),
    ));
    for (kind, tag, x, y, z) in [
        (GammaKind::TwoCircles, "cone-gamma", 3, 3, 0),
        (GammaKind::TwoCircles, "cone-gamma", 3, 3, 1),
        (GammaKind::TwoCircles, "cone-gamma", 4, 3, 2),
        (GammaKind::Theta, "cone-theta", 3, 3, 1),
        (GammaKind::Theta, "cone-theta", 3, 3, 3),
    ] {
        let g = gamma_graph(kind, x, y, z).unwrap();
        out.push((format!("{tag} {x} {y} {z}"), cone_over_graph(&g)));
    }
    out
}

/// Resolves a fixture by name and integer parameters, e.g. `("lxy", [5, 4])`.
pub fn by_name(name: &str, params: &[u32]) -> Result<Complex2> {
    let want = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!(
                "{name} expects {n} parameter(s), got {}",
                params.len()
            )))
        }
    };
    let at_least_3 = |v: u32| -> Result<u32> {
        if v >= 3 {
            Ok(v)
        } else {
            Err(Error::InvalidParameter(format!("{name}: parameter {v} must be >= 3")))
        }
    };
    if let Some(kind) = SurfaceKind::ALL.iter().find(|k| k.name() == name) {
        want(0)?;
        return Ok(closed_surface(*kind));
    }
    match name {
        "tetrahedron" => {
            want(0)?;
            Ok(closed_surface(SurfaceKind::Sphere4))
        }
        "triangle" => {
            want(0)?;
            Ok(build([face(1, 2, 3)]))
        }
        "triod" => {
            want(1)?;
            Ok(triod(params[0]))
        }
        "lxy" => {
            want(2)?;
            Ok(l_xy(at_least_3(params[0])?, at_least_3(params[1])?))
        }
        "ngon" => {
            want(1)?;
            Ok(ngon_disk(at_least_3(params[0])?))
        }
        "implanted" => {
            want(1)?;
            Ok(implanted_ngon_disk(at_least_3(params[0])?))
        }
        "pendant" => {
            want(1)?;
            attach_triangle(
                &implanted_ngon_disk(at_least_3(params[0])?),
                implanted_boundary_edge(),
            )
        }
        "cone-gamma" | "cone-theta" => {
            want(3)?;
            let kind = if name == "cone-gamma" {
                GammaKind::TwoCircles
            } else {
                GammaKind::Theta
            };
            Ok(cone_over_graph(&gamma_graph(kind, params[0], params[1], params[2])?))
        }
        _ => Err(Error::InvalidParameter(format!("unknown catalog complex {name:?}"))),
    }
}
