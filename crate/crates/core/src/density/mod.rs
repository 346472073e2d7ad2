//! The density `mu(S) = v/f`, its minimum `mu~` over pure subcomplexes, and
//! balancedness.
//!
//! `mu~` is computed two ways: an exhaustive enumeration of face subsets for
//! small inputs, and a Dinkelbach iteration whose inner step is a minimum cut
//! on a project-selection network (faces are projects, vertices are the
//! resources they require). The two are kept independent so each can check
//! the other.

pub mod bounds;

use std::collections::{BTreeMap, BTreeSet};

use num_rational::Ratio;

use crate::complex::{Complex2, Face, VertexId};
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::scalar::{count, ExactInt};

/// Largest face count accepted by [`mu_tilde_oracle`].
pub const ORACLE_FACE_LIMIT: usize = 22;

/// Sign of `mu~ - 1/2`.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Negative => -1,
            Sign::Zero => 0,
            Sign::Positive => 1,
        }
    }

    pub fn of<T: ExactInt>(mu_tilde: Ratio<T>) -> Self {
        let half = Ratio::new(T::one(), T::one() + T::one());
        match mu_tilde.cmp(&half) {
            std::cmp::Ordering::Less => Sign::Negative,
            std::cmp::Ordering::Equal => Sign::Zero,
            std::cmp::Ordering::Greater => Sign::Positive,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DensityReport<T: ExactInt> {
    pub mu: Ratio<T>,
    pub mu_tilde: Ratio<T>,
    /// A face set attaining `mu_tilde`.
    pub witness_faces: BTreeSet<Face>,
    pub balanced: bool,
    pub sign: Sign,
}

/// `v / f` for the whole complex, isolated vertices included.
pub fn mu<T: ExactInt>(s: &Complex2) -> Result<Ratio<T>> {
    if s.num_faces() == 0 {
        return Err(Error::NoFaces);
    }
    Ok(Ratio::new(count(s.num_vertices()), count(s.num_faces())))
}

/// `|V(F)| / |F|` for a nonempty face set.
pub fn face_set_mu<T: ExactInt>(faces: &BTreeSet<Face>) -> Result<Ratio<T>> {
    if faces.is_empty() {
        return Err(Error::NoFaces);
    }
    let covered: BTreeSet<VertexId> = faces.iter().flat_map(|f| f.corners()).collect();
    Ok(Ratio::new(count(covered.len()), count(faces.len())))
}

struct Incidence {
    faces: Vec<Face>,
    /// Per face, indices into the covered-vertex list.
    corners: Vec<[usize; 3]>,
    num_vertices: usize,
}

fn incidence(s: &Complex2) -> Incidence {
    let faces: Vec<Face> = s.faces().iter().copied().collect();
    let covered: BTreeSet<VertexId> = faces.iter().flat_map(|f| f.corners()).collect();
    let idx: BTreeMap<VertexId, usize> = covered.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let corners = faces
        .iter()
        .map(|f| f.corners().map(|v| idx[&v]))
        .collect();
    Incidence {
        faces,
        corners,
        num_vertices: covered.len(),
    }
}

/// Exhaustive minimum of `|V(F)| / |F|` over all nonempty face subsets,
/// visited in Gray-code order. Limited to [`ORACLE_FACE_LIMIT`] faces.
pub fn mu_tilde_oracle<T: ExactInt>(s: &Complex2) -> Result<(Ratio<T>, BTreeSet<Face>)> {
    let f = s.num_faces();
    if f == 0 {
        return Err(Error::NoFaces);
    }
    if f > ORACLE_FACE_LIMIT {
        return Err(Error::TooLargeForOracle {
            faces: f,
            limit: ORACLE_FACE_LIMIT,
        });
    }
    let inc = incidence(s);
    let mut uses = vec![0u32; inc.num_vertices];
    let (mut covered, mut chosen) = (0u64, 0u64);
    let mut mask = 0u64;
    // best ratio as (vertices, faces)
    let mut best: Option<(u64, u64, u64)> = None;
    for step in 1u64..(1 << f) {
        let k = step.trailing_zeros() as usize;
        mask ^= 1 << k;
        if mask & (1 << k) != 0 {
            chosen += 1;
            for &c in &inc.corners[k] {
                uses[c] += 1;
                if uses[c] == 1 {
                    covered += 1;
                }
            }
        } else {
            chosen -= 1;
            for &c in &inc.corners[k] {
                uses[c] -= 1;
                if uses[c] == 0 {
                    covered -= 1;
                }
            }
        }
        let better = match best {
            None => true,
            Some((bv, bf, _)) => covered * bf < bv * chosen,
        };
        if better {
            best = Some((covered, chosen, mask));
        }
    }
    let (bv, bf, bmask) = best.expect("at least one face");
    let witness = (0..f)
        .filter(|&i| bmask >> i & 1 == 1)
        .map(|i| inc.faces[i])
        .collect();
    Ok((
        Ratio::new(count(bv as usize), count(bf as usize)),
        witness,
    ))
}

/// Exact `mu~` by Dinkelbach iteration over minimum cuts.
///
/// Starting from `lambda = mu(S)`, each round minimises
/// `q |V(F)| - p |F|` for `lambda = p/q` on the network
/// `source -> face (p)`, `face -> corner (inf)`, `vertex -> sink (q)`. A
/// strictly negative minimum yields a face set with smaller ratio, which
/// becomes the next `lambda`; a zero minimum certifies optimality.
pub fn mu_tilde_flow<T: ExactInt>(s: &Complex2) -> Result<(Ratio<T>, BTreeSet<Face>)> {
    let start = mu::<T>(s)?;
    let inc = incidence(s);
    let f = inc.faces.len();
    let nv = inc.num_vertices;
    let (source, sink) = (0, f + nv + 1);

    let mut lambda = start;
    let mut witness: Vec<usize> = (0..f).collect();
    loop {
        let (p, q) = (*lambda.numer(), *lambda.denom());
        let vertex_side = q.checked_mul(&count(nv)).ok_or(Error::Overflow)?;
        let infinite = vertex_side.checked_add(&T::one()).ok_or(Error::Overflow)?;
        let all_faces = p.checked_mul(&count(f)).ok_or(Error::Overflow)?;

        let mut net = FlowNetwork::new(f + nv + 2);
        for (i, corners) in inc.corners.iter().enumerate() {
            net.add_arc(source, 1 + i, p);
            for &c in corners {
                net.add_arc(1 + i, 1 + f + c, infinite);
            }
        }
        for c in 0..nv {
            net.add_arc(1 + f + c, sink, q);
        }
        let cut = net.max_flow(source, sink);
        // min over F of (q|V(F)| - p|F|) = cut - p f
        if (cut - all_faces).is_zero() {
            break;
        }
        debug_assert!(cut < all_faces);
        let side = net.source_side(source);
        let selected: Vec<usize> = (0..f).filter(|&i| side[1 + i]).collect();
        let used: BTreeSet<usize> = selected.iter().flat_map(|&i| inc.corners[i]).collect();
        let used = used.len();
        assert!(!selected.is_empty(), "negative cut value needs a nonempty face set");
        let next = Ratio::new(count(used), count(selected.len()));
        assert!(next < lambda, "Dinkelbach iterate must strictly decrease");
        lambda = next;
        witness = selected;
    }
    Ok((lambda, witness.into_iter().map(|i| inc.faces[i]).collect()))
}

/// Whether `mu(S) = mu~(S)`.
pub fn is_balanced(s: &Complex2) -> Result<bool> {
    let (mt, _) = mu_tilde_flow::<i64>(s)?;
    Ok(mt == mu::<i64>(s)?)
}

pub fn density_report<T: ExactInt>(s: &Complex2) -> Result<DensityReport<T>> {
    let mu = mu::<T>(s)?;
    let (mu_tilde, witness_faces) = mu_tilde_flow::<T>(s)?;
    Ok(DensityReport {
        balanced: mu_tilde == mu,
        sign: Sign::of(mu_tilde),
        mu,
        mu_tilde,
        witness_faces,
    })
}
