//! Iterated simplicial collapse: every round removes all free faces together
//! with one free edge of each, until either no faces or no free faces remain.

use std::collections::BTreeSet;

use crate::complex::{Complex2, Edge, Face};
use crate::error::{Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum CollapseKind {
    /// Every face was collapsed away; the remainder is a graph.
    Graph,
    /// Faces remain and none of them is free.
    ClosedCore,
}

impl CollapseKind {
    pub fn as_str(self) -> &'static str {
        match self {
            CollapseKind::Graph => "graph",
            CollapseKind::ClosedCore => "closed_core",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseOutcome {
    pub kind: CollapseKind,
    pub steps: usize,
    pub core: Complex2,
    /// Face count before the first step and after each step.
    pub face_counts_per_step: Vec<usize>,
    /// Euler characteristic before the first step and after each step.
    pub chi_per_step: Vec<i64>,
}

/// Faces with at least one free edge.
pub fn free_faces(s: &Complex2) -> BTreeSet<Face> {
    let free = s.free_edges();
    s.faces()
        .iter()
        .filter(|f| f.edges().iter().any(|e| free.contains(e)))
        .copied()
        .collect()
}

/// One collapse round.
///
/// Free faces are visited in sorted order and each takes its smallest free
/// edge not already taken in this round; a face left without an available
/// free edge waits for the next round.
pub fn collapse_step(s: &Complex2) -> Result<Complex2> {
    let free = s.free_edges();
    let mut removed_faces = BTreeSet::new();
    let mut removed_edges: BTreeSet<Edge> = BTreeSet::new();
    for f in s.faces() {
        let pick = f
            .edges()
            .into_iter()
            .find(|e| free.contains(e) && !removed_edges.contains(e));
        if let Some(e) = pick {
            removed_faces.insert(*f);
            removed_edges.insert(e);
        }
    }
    if removed_faces.is_empty() {
        return Err(Error::NothingToCollapse);
    }
    Ok(s.without(&removed_faces, &removed_edges))
}

/// Collapses until a graph or a closed core remains.
pub fn collapse_to_core(s: &Complex2) -> CollapseOutcome {
    let mut current = s.clone();
    let mut face_counts = vec![current.num_faces()];
    let mut chis = vec![current.euler_characteristic()];
    let mut steps = 0;
    while current.num_faces() > 0 {
        match collapse_step(&current) {
            Ok(next) => {
                current = next;
                steps += 1;
                face_counts.push(current.num_faces());
                chis.push(current.euler_characteristic());
            }
            Err(Error::NothingToCollapse) => break,
            Err(e) => unreachable!("collapse_step only fails when nothing is free: {e}"),
        }
    }
    CollapseOutcome {
        kind: if current.num_faces() == 0 {
            CollapseKind::Graph
        } else {
            CollapseKind::ClosedCore
        },
        steps,
        core: current,
        face_counts_per_step: face_counts,
        chi_per_step: chis,
    }
}
