//! Center-point subdivision: each face `{a,b,c}` is replaced by the three
//! faces through a new interior vertex.

use crate::complex::{Complex2, Face, VertexId};

/// Applies the center subdivision `rounds` times.
///
/// In each round the center of the `k`-th face in sorted order (counting
/// from 1) gets label `max_label + k`. Edges and vertices of the input are
/// kept; a face-free complex is returned unchanged.
pub fn center_subdivide(s: &Complex2, rounds: u32) -> Complex2 {
    let mut current = s.clone();
    for _ in 0..rounds {
        current = subdivide_once(&current);
    }
    current
}

fn subdivide_once(s: &Complex2) -> Complex2 {
    let base = s.max_label();
    let faces = s.faces().iter().enumerate().flat_map(|(k, f)| {
        let centre = VertexId(base + 1 + k as u32);
        let [a, b, c] = f.corners();
        [
            Face::new(a, b, centre).unwrap(),
            Face::new(a, c, centre).unwrap(),
            Face::new(b, c, centre).unwrap(),
        ]
    });
    Complex2::closure(faces, s.edges().iter().copied(), s.vertices().iter().copied())
}
