//! Closed forms and upper bounds for `mu` on structured complexes.
//!
//! Each function returns the exact value (or bound) as a fraction so that
//! callers can compare it with [`super::mu`] without rounding.

use num_rational::Ratio;
use num_traits::One;

use crate::graph::Graph1;
use crate::scalar::{count, ExactInt};

fn half<T: ExactInt>() -> Ratio<T> {
    Ratio::new(T::one(), T::one() + T::one())
}

fn int<T: ExactInt>(x: i64) -> T {
    T::from_i64(x).expect("value fits the scalar type")
}

/// Strongly connected complexes satisfy `mu <= 1 + 2/f`.
pub fn strongly_connected_upper_bound<T: ExactInt>(faces: usize) -> Ratio<T> {
    Ratio::one() + Ratio::new(int(2), count(faces))
}

/// Connected, pure, closed complexes with `chi = 1` and at least three edges
/// of degree `>= 3` satisfy `mu <= 1/2 - 1/(2f)`.
pub fn closed_chi_one_upper_bound<T: ExactInt>(faces: usize) -> Ratio<T> {
    half::<T>() - Ratio::new(T::one(), count::<T>(2 * faces))
}

/// `mu` of a closed orientable surface of the given genus with `f` faces.
pub fn orientable_surface_mu<T: ExactInt>(genus: u32, faces: usize) -> Ratio<T> {
    half::<T>() + Ratio::new(int(2 - 2 * genus as i64), count(faces))
}

/// `mu` of a closed nonorientable surface of genus `g >= 1` with `f` faces.
pub fn nonorientable_surface_mu<T: ExactInt>(genus: u32, faces: usize) -> Ratio<T> {
    half::<T>() + Ratio::new(int(2 - genus as i64), count(faces))
}

/// `mu` of a triangulated disk with `boundary_edges` free edges and `f` faces.
pub fn disk_mu<T: ExactInt>(boundary_edges: usize, faces: usize) -> Ratio<T> {
    half::<T>()
        + Ratio::new(count(boundary_edges), count(2 * faces))
        + Ratio::new(T::one(), count(faces))
}

/// `mu` of a connected pure subcomplex with vanishing `b2`, expressed through
/// its first Betti number and its count of free edges.
pub fn mu_from_first_betti<T: ExactInt>(b1: usize, boundary_edges: usize, faces: usize) -> Ratio<T> {
    half::<T>()
        + Ratio::new(T::one() - count::<T>(b1), count(faces))
        + Ratio::new(count(boundary_edges), count(2 * faces))
}

/// `mu` of the cone over a graph: `(v + 1) / e`. Panics on an edgeless graph.
pub fn cone_mu<T: ExactInt>(g: &Graph1) -> Ratio<T> {
    assert!(g.num_edges() > 0, "cone over an edgeless graph has no faces");
    Ratio::new(count(g.num_vertices() + 1), count(g.num_edges()))
}

/// What the union bound guarantees for `S1 ∪ S2` with both parts strongly
/// connected and meeting in a complex of dimension at most one.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum UnionBound {
    /// Fewer than four common vertices: no conclusion.
    None,
    /// Exactly four common vertices: `mu <= 1`.
    AtMostOne,
    /// Five or more common vertices: `mu < 1`.
    BelowOne,
}

impl UnionBound {
    pub fn from_common_vertices(v0: usize) -> Self {
        match v0 {
            0..=3 => UnionBound::None,
            4 => UnionBound::AtMostOne,
            _ => UnionBound::BelowOne,
        }
    }

    pub fn holds<T: ExactInt>(self, mu: Ratio<T>) -> bool {
        match self {
            UnionBound::None => true,
            UnionBound::AtMostOne => mu <= Ratio::one(),
            UnionBound::BelowOne => mu < Ratio::one(),
        }
    }
}
