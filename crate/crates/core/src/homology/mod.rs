//! Simplicial chain complex of a 2-complex and its homology over the
//! integers, the rationals and the two-element field.

mod matrix;
mod mod2;
mod snf;

use std::collections::BTreeMap;

pub use matrix::IntMatrix;
pub use mod2::{rank_mod2, BitMatrix};
pub use snf::{smith_normal_form, SmithForm};

use crate::complex::{Complex2, Edge, VertexId};
use crate::error::{Error, Result};
use crate::scalar::ExactInt;

/// Boundary maps with rows and columns indexed by the sorted simplex lists.
///
/// `d2` is edges x faces, `d1` is vertices x edges. A face `[a,b,c]` with
/// `a < b < c` has boundary `[b,c] - [a,c] + [a,b]`; an edge `[a,b]` has
/// boundary `b - a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrices<T> {
    pub d2: IntMatrix<T>,
    pub d1: IntMatrix<T>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    /// Rational Betti numbers `b0, b1, b2`.
    pub betti: [usize; 3],
    /// Betti numbers over the two-element field.
    pub betti_mod2: [usize; 3],
    /// Invariant factors `>= 2` of the torsion subgroup of `H_1`.
    pub torsion_h1: Vec<u64>,
    pub chi: i64,
}

pub fn boundary_matrices<T: ExactInt>(s: &Complex2) -> BoundaryMatrices<T> {
    let vidx: BTreeMap<VertexId, usize> =
        s.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let eidx: BTreeMap<Edge, usize> = s.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();

    let mut d1 = IntMatrix::zeros(s.num_vertices(), s.num_edges());
    for (j, e) in s.edges().iter().enumerate() {
        let [a, b] = e.endpoints();
        d1[(vidx[&a], j)] = -T::one();
        d1[(vidx[&b], j)] = T::one();
    }
    let mut d2 = IntMatrix::zeros(s.num_edges(), s.num_faces());
    for (j, f) in s.faces().iter().enumerate() {
        let [ab, ac, bc] = f.edges();
        d2[(eidx[&ab], j)] = T::one();
        d2[(eidx[&ac], j)] = -T::one();
        d2[(eidx[&bc], j)] = T::one();
    }
    BoundaryMatrices { d2, d1 }
}

fn mod2_boundaries(s: &Complex2) -> (BitMatrix, BitMatrix) {
    let vidx: BTreeMap<VertexId, usize> =
        s.vertices().iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let eidx: BTreeMap<Edge, usize> = s.edges().iter().enumerate().map(|(i, &e)| (e, i)).collect();
    // stored transposed: one row per simplex, one column per boundary simplex
    let mut d1 = BitMatrix::zeros(s.num_edges(), s.num_vertices());
    for (i, e) in s.edges().iter().enumerate() {
        for v in e.endpoints() {
            d1.set(i, vidx[&v]);
        }
    }
    let mut d2 = BitMatrix::zeros(s.num_faces(), s.num_edges());
    for (i, f) in s.faces().iter().enumerate() {
        for e in f.edges() {
            d2.set(i, eidx[&e]);
        }
    }
    (d1, d2)
}

/// Homology computed with `i64` entries.
pub fn homology_profile(s: &Complex2) -> Result<HomologyProfile> {
    homology_profile_in::<i64>(s)
}

/// Homology with boundary matrices over the integer type `T`.
pub fn homology_profile_in<T: ExactInt>(s: &Complex2) -> Result<HomologyProfile> {
    let bm = boundary_matrices::<T>(s);
    let snf1 = smith_normal_form(&bm.d1)?;
    let snf2 = smith_normal_form(&bm.d2)?;
    let (v, e, f) = (s.num_vertices(), s.num_edges(), s.num_faces());
    let betti = [v - snf1.rank, e - snf1.rank - snf2.rank, f - snf2.rank];

    let (m1, m2) = mod2_boundaries(s);
    let (r1, r2) = (rank_mod2(m1), rank_mod2(m2));
    let betti_mod2 = [v - r1, e - r1 - r2, f - r2];

    let torsion_h1 = snf2
        .factors
        .iter()
        .filter(|d| !d.is_one())
        .map(|d| d.to_u64().ok_or(Error::Overflow))
        .collect::<Result<Vec<_>>>()?;
    Ok(HomologyProfile {
        betti,
        betti_mod2,
        torsion_h1,
        chi: s.euler_characteristic(),
    })
}

/// Rank of `d2` over the two-element field.
pub fn d2_rank_mod2(s: &Complex2) -> usize {
    rank_mod2(mod2_boundaries(s).1)
}

/// Whether a closed surface is orientable, decided by `b2 = 1` over the
/// rationals.
///
/// The input must be a pseudo-surface in which every edge lies in exactly two
/// faces and every vertex link is a single cycle.
pub fn is_orientable_closed_surface(s: &Complex2) -> Result<bool> {
    let flags = s.classify();
    if !flags.pseudo_surface {
        return Err(Error::NotAClosedSurface("not a pseudo-surface"));
    }
    if s.edge_degrees().values().any(|&d| d != 2) {
        return Err(Error::NotAClosedSurface("edge degree differs from 2"));
    }
    for &v in s.vertices() {
        if !s.link_graph(v)?.is_single_cycle() {
            return Err(Error::NotAClosedSurface("vertex link is not a single cycle"));
        }
    }
    let snf = smith_normal_form(&boundary_matrices::<i64>(s).d2)?;
    Ok(s.num_faces() - snf.rank == 1)
}
