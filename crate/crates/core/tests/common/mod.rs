#![allow(dead_code)]

use std::collections::BTreeSet;

use complex2::random::{sample_complex, trial_seed, SampleSpec};
use complex2::{Complex2, Face};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Pure part of a seeded random complex.
pub fn random_pure(n: u32, p: f64, seed: u64) -> Complex2 {
    sample_complex(&SampleSpec::new(n, p, seed).unwrap()).pure_part()
}

/// A random face subset of a seeded random complex, kept with probability `keep`.
pub fn random_subsample(n: u32, p: f64, keep: f64, seed: u64) -> Complex2 {
    let s = sample_complex(&SampleSpec::new(n, p, seed).unwrap());
    let mut rng = ChaCha8Rng::seed_from_u64(trial_seed(seed, 1));
    let faces: Vec<Face> = s.faces().iter().copied().filter(|_| rng.gen::<f64>() < keep).collect();
    Complex2::closure(faces, [], [])
}

/// Every nonempty face subset as a closed complex.
pub fn face_subsets(s: &Complex2) -> impl Iterator<Item = Complex2> + '_ {
    let faces: Vec<Face> = s.faces().iter().copied().collect();
    assert!(faces.len() < 24);
    (1u32..(1 << faces.len())).map(move |mask| {
        let chosen: BTreeSet<Face> = (0..faces.len())
            .filter(|&i| mask >> i & 1 == 1)
            .map(|i| faces[i])
            .collect();
        Complex2::closure(chosen, [], [])
    })
}
