//! Seeded sampler for the Linial-Meshulam random 2-complex: the full
//! 1-skeleton on `{1..n}` with each of the `C(n,3)` triangles kept
//! independently with probability `p`.
//!
//! Two exact samplers of the same law are used. For `p >= 0.05` every triple
//! gets one uniform draw in lexicographic order. Below that, the face count
//! is drawn from the binomial law and that many distinct triple indices are
//! sampled uniformly and unranked.
//!
//! Randomness comes from ChaCha8 seeded through [`trial_seed`], so a trial is
//! reproducible from its own seed regardless of scheduling.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Binomial, Distribution};

use crate::complex::{Complex2, Face, VertexId};
use crate::error::{Error, Result};

/// Threshold between the per-triple and the binomial-count samplers.
pub const DENSE_THRESHOLD: f64 = 0.05;

#[derive(Copy, Clone, Debug, PartialEq)]
pub struct SampleSpec {
    pub n: u32,
    pub p: f64,
    pub seed: u64,
}

impl SampleSpec {
    pub fn new(n: u32, p: f64, seed: u64) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("n must be at least 3, got {n}")));
        }
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidParameter(format!("p must lie in [0, 1], got {p}")));
        }
        Ok(SampleSpec { n, p, seed })
    }
}

/// SplitMix64 finaliser.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of the `index`-th stream derived from `master`.
pub fn trial_seed(master: u64, index: u64) -> u64 {
    mix(mix(master) ^ index.wrapping_mul(0xd6e8_feb8_6659_fd93))
}

pub fn num_triples(n: u32) -> u64 {
    let n = n as u64;
    n * n.saturating_sub(1) * n.saturating_sub(2) / 6
}

/// The `rank`-th 3-subset of `{1..n}` in colexicographic order.
fn unrank_triple(mut rank: u64) -> [u32; 3] {
    let mut out = [0u32; 3];
    for k in (1..=3u64).rev() {
        // largest c with C(c, k) <= rank
        let mut c = k - 1;
        while binom(c + 1, k) <= rank {
            c += 1;
        }
        rank -= binom(c, k);
        out[k as usize - 1] = c as u32 + 1;
    }
    out
}

fn binom(n: u64, k: u64) -> u64 {
    match k {
        1 => n,
        2 => n * n.saturating_sub(1) / 2,
        3 => n * n.saturating_sub(1) * n.saturating_sub(2) / 6,
        _ => unreachable!(),
    }
}

/// Draws one complex. Identical specs give identical complexes.
pub fn sample_complex(spec: &SampleSpec) -> Complex2 {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    Complex2::with_skeleton(spec.n, sample_faces(spec, &mut rng))
}

fn sample_faces(spec: &SampleSpec, rng: &mut ChaCha8Rng) -> Vec<Face> {
    let n = spec.n;
    if spec.p >= DENSE_THRESHOLD {
        let mut faces = Vec::new();
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    if rng.gen::<f64>() < spec.p {
                        faces.push(Face::new(VertexId(a), VertexId(b), VertexId(c)).unwrap());
                    }
                }
            }
        }
        return faces;
    }
    let total = num_triples(n);
    if spec.p <= 0.0 || total == 0 {
        return Vec::new();
    }
    let f2 = Binomial::new(total, spec.p).expect("valid binomial").sample(rng);
    rand::seq::index::sample(rng, total as usize, f2 as usize)
        .into_iter()
        .map(|r| {
            let [a, b, c] = unrank_triple(r as u64);
            Face::new(VertexId(a), VertexId(b), VertexId(c)).unwrap()
        })
        .collect()
}
