mod common;

use std::collections::BTreeSet;

use complex2::catalog::{self, GammaKind, SurfaceKind};
use complex2::density::bounds::{self, UnionBound};
use complex2::density::{self, mu, mu_tilde_flow, mu_tilde_oracle, Sign};
use complex2::{Complex2, Face, Rational, WideRational};
use num_rational::Ratio;
use proptest::prelude::*;

fn r(a: i64, b: i64) -> Rational {
    Rational::new(a, b)
}

#[test]
fn degree_identity_on_catalog_and_random() {
    let mut checked = 0;
    let catalog = catalog::fixtures().into_iter().map(|(_, s)| s);
    let random = (0..60).map(|i| {
        let p = [0.1, 0.3, 0.5][i % 3];
        common::random_pure(6 + (i as u32 % 10), p, 1000 + i as u64)
    });
    for s in catalog.chain(random).filter(|s| s.num_faces() > 0) {
        let d = s.degree_profile::<i64>().unwrap();
        assert_eq!(mu::<i64>(&s).unwrap() * d.avg_vertex_degree * d.avg_edge_degree, r(6, 1));
        checked += 1;
    }
    assert!(checked > 80);
}

#[test]
fn flow_matches_oracle_on_catalog() {
    for (name, s) in catalog::fixtures() {
        if s.num_faces() > density::ORACLE_FACE_LIMIT {
            continue;
        }
        let (a, wa) = mu_tilde_oracle::<i64>(&s).unwrap();
        let (b, wb) = mu_tilde_flow::<i64>(&s).unwrap();
        assert_eq!(a, b, "{name}");
        assert_eq!(density::face_set_mu::<i64>(&wa).unwrap(), a, "{name}");
        assert_eq!(density::face_set_mu::<i64>(&wb).unwrap(), b, "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flow_matches_oracle_on_subsamples(n in 4u32..=10, keep in 0.2f64..0.9, seed in any::<u64>()) {
        let s = common::random_subsample(n, 0.4, keep, seed);
        prop_assume!(s.num_faces() > 0 && s.num_faces() <= 18);
        let (a, _) = mu_tilde_oracle::<i64>(&s).unwrap();
        let (b, w) = mu_tilde_flow::<i64>(&s).unwrap();
        prop_assert_eq!(a, b);
        prop_assert!(w.is_subset(s.faces()));
        prop_assert!(b <= mu::<i64>(&s).unwrap());
    }

    #[test]
    fn mu_tilde_is_monotone(n in 4u32..=9, seed in any::<u64>()) {
        let big = common::random_subsample(n, 0.5, 0.8, seed);
        let small = common::random_subsample(n, 0.5, 0.5, seed);
        let small = big.intersection(&small);
        prop_assume!(small.num_faces() > 0);
        prop_assert!(mu_tilde_flow::<i64>(&big).unwrap().0 <= mu_tilde_flow::<i64>(&small).unwrap().0);
    }

    #[test]
    fn disjoint_union_takes_the_minimum(a in 4u32..=8, b in 4u32..=8, seed in any::<u64>()) {
        let s1 = common::random_subsample(a, 0.5, 0.7, seed);
        let s2 = common::random_subsample(b, 0.5, 0.7, seed ^ 1).shifted(20);
        prop_assume!(s1.num_faces() > 0 && s2.num_faces() > 0);
        let m1 = mu_tilde_flow::<i64>(&s1).unwrap().0;
        let m2 = mu_tilde_flow::<i64>(&s2).unwrap().0;
        prop_assert_eq!(mu_tilde_flow::<i64>(&s1.union(&s2)).unwrap().0, m1.min(m2));
    }
}

#[test]
fn generic_scalars_agree() {
    for (_, s) in catalog::fixtures() {
        let (a, _) = mu_tilde_flow::<i64>(&s).unwrap();
        let (b, _) = mu_tilde_flow::<i128>(&s).unwrap();
        let (c, _) = mu_tilde_flow::<i32>(&s).unwrap();
        assert_eq!(WideRational::new(*a.numer() as i128, *a.denom() as i128), b);
        assert_eq!(Ratio::new(*a.numer() as i32, *a.denom() as i32), c);
    }
}

#[test]
fn closed_surfaces_are_balanced_with_closed_form_mu() {
    let cases = [
        (SurfaceKind::Sphere4, r(1, 1), bounds::orientable_surface_mu::<i64>(0, 4)),
        (SurfaceKind::Torus7, r(1, 2), bounds::orientable_surface_mu::<i64>(1, 14)),
        (SurfaceKind::Rp2_6, r(3, 5), bounds::nonorientable_surface_mu::<i64>(1, 10)),
        (SurfaceKind::Klein8, r(1, 2), bounds::nonorientable_surface_mu::<i64>(2, 16)),
    ];
    for (kind, expected, closed_form) in cases {
        let s = catalog::closed_surface(kind);
        assert_eq!(mu::<i64>(&s).unwrap(), expected);
        assert_eq!(closed_form, expected);
        assert!(density::is_balanced(&s).unwrap(), "{}", kind.name());
        assert_eq!(mu_tilde_oracle::<i64>(&s).unwrap().0, expected);
    }
    let s = complex2::subdivision::center_subdivide(&catalog::closed_surface(SurfaceKind::Sphere4), 1);
    assert_eq!(mu::<i64>(&s).unwrap(), r(2, 3));
    assert_eq!(mu_tilde_oracle::<i64>(&s).unwrap().0, r(2, 3));
}

#[test]
fn strongly_connected_bound() {
    for (name, s) in catalog::fixtures() {
        if s.classify().strongly_connected {
            let f = s.num_faces();
            assert!(mu::<i64>(&s).unwrap() <= bounds::strongly_connected_upper_bound::<i64>(f), "{name}");
        }
    }
    // a fan attains it
    let fan = catalog::ngon_disk(6);
    let path = Complex2::closure(fan.faces().iter().copied().skip(1), [], []);
    assert_eq!(mu::<i64>(&path).unwrap(), bounds::strongly_connected_upper_bound::<i64>(5));
}

#[test]
fn closed_chi_one_bound_with_equality() {
    // torus plus one extra triangle on three of its vertices
    let torus = catalog::closed_surface(SurfaceKind::Torus7);
    let extra = (1..=7)
        .flat_map(|a| (a + 1..=7).flat_map(move |b| (b + 1..=7).map(move |c| (a, b, c))))
        .map(|(a, b, c)| Face::from_labels(a, b, c).unwrap())
        .find(|f| !torus.faces().contains(f))
        .unwrap();
    let s = torus.union(&Complex2::closure([extra], [], []));
    assert_eq!(s.euler_characteristic(), 1);
    assert!(s.free_edges().is_empty());
    let deg3 = s.edge_degrees().values().filter(|&&d| d >= 3).count();
    assert_eq!(deg3, 3);
    assert_eq!(mu::<i64>(&s).unwrap(), r(7, 15));
    assert_eq!(bounds::closed_chi_one_upper_bound::<i64>(15), r(7, 15));
}

#[test]
fn union_bound_on_glued_surfaces() {
    let sphere = catalog::closed_surface(SurfaceKind::Sphere4);
    let torus = catalog::closed_surface(SurfaceKind::Torus7);
    for shift in 0..=7u32 {
        let other = torus.shifted(shift);
        let s = sphere.union(&other);
        let common = sphere.vertices().intersection(other.vertices()).count();
        // meeting in at most the 1-skeleton
        if s.num_faces() != sphere.num_faces() + other.num_faces() {
            continue;
        }
        assert!(UnionBound::from_common_vertices(common).holds(mu::<i64>(&s).unwrap()), "shift {shift}");
    }
    let two = sphere.union(&sphere.shifted(4));
    assert!(UnionBound::None.holds(mu::<i64>(&two).unwrap()));
    assert_eq!(UnionBound::from_common_vertices(4), UnionBound::AtMostOne);
}

#[test]
fn disk_and_betti_formulas() {
    for n in 3..=9 {
        let d = catalog::ngon_disk(n);
        let f = d.num_faces();
        assert_eq!(mu::<i64>(&d).unwrap(), bounds::disk_mu::<i64>(d.free_edges().len(), f));
        assert_eq!(mu::<i64>(&d).unwrap(), bounds::mu_from_first_betti::<i64>(0, n as usize, f));
        let imp = catalog::implanted_ngon_disk(n);
        assert_eq!(mu::<i64>(&imp).unwrap(), bounds::disk_mu::<i64>(4, imp.num_faces()));
    }
}

#[test]
fn cone_formula() {
    for (kind, x, y, z) in [
        (GammaKind::TwoCircles, 3, 3, 0),
        (GammaKind::TwoCircles, 4, 5, 2),
        (GammaKind::Theta, 3, 3, 1),
        (GammaKind::Theta, 4, 3, 3),
    ] {
        let g = catalog::gamma_graph(kind, x, y, z).unwrap();
        let cone = catalog::cone_over_graph(&g);
        assert_eq!(mu::<i64>(&cone).unwrap(), bounds::cone_mu::<i64>(&g));
        assert!(mu::<i64>(&cone).unwrap() <= r(1, 1));
    }
}

#[test]
fn pendant_triangle_unbalances_the_implanted_disk() {
    let disk = catalog::implanted_ngon_disk(8);
    assert!(density::is_balanced(&disk).unwrap());
    let s = catalog::attach_triangle(&disk, catalog::implanted_boundary_edge()).unwrap();
    let (mt, w) = mu_tilde_flow::<i64>(&s).unwrap();
    assert!(mt < mu::<i64>(&s).unwrap());
    assert_eq!(mt, mu::<i64>(&disk).unwrap());
    assert_eq!(density::face_set_mu::<i64>(&w).unwrap(), mt);
}

#[test]
fn triod_family_values() {
    assert_eq!(mu_tilde_flow::<i64>(&catalog::triod(0)).unwrap().0, r(5, 3));
    for k in [1i64, 2, 8, 10] {
        let y = catalog::triod(k as u32);
        assert_eq!(mu::<i64>(&y).unwrap(), r(k + 5, 3 * k + 3));
    }
    assert_eq!(density::density_report::<i64>(&catalog::triod(0)).unwrap().sign, Sign::Positive);
    assert_eq!(density::density_report::<i64>(&catalog::triod(8)).unwrap().sign, Sign::Negative);
}

/// Exhaustive minimum over the 2^27 face subsets of Y_8, past the library
/// oracle's size limit.
#[test]
fn y8_mu_tilde_by_enumeration() {
    let y = catalog::triod(8);
    let faces: Vec<Face> = y.faces().iter().copied().collect();
    assert_eq!(faces.len(), 27);
    let labels: Vec<_> = y.vertices().iter().copied().collect();
    let corners: Vec<[usize; 3]> = faces
        .iter()
        .map(|f| f.corners().map(|v| labels.binary_search(&v).unwrap()))
        .collect();
    let mut uses = vec![0u8; labels.len()];
    let (mut covered, mut chosen) = (0i64, 0i64);
    let mut in_set = vec![false; faces.len()];
    let mut best = (i64::MAX, 1i64);
    for step in 1u64..(1 << faces.len()) {
        let k = step.trailing_zeros() as usize;
        in_set[k] = !in_set[k];
        for &c in &corners[k] {
            if in_set[k] {
                uses[c] += 1;
                covered += (uses[c] == 1) as i64;
            } else {
                uses[c] -= 1;
                covered -= (uses[c] == 0) as i64;
            }
        }
        chosen += if in_set[k] { 1 } else { -1 };
        if chosen > 0 && covered * best.1 < best.0 * chosen {
            best = (covered, chosen);
        }
    }
    let brute = r(best.0, best.1);
    let (flow, w) = mu_tilde_flow::<i64>(&y).unwrap();
    assert_eq!(flow, brute);
    assert!(flow <= r(13, 27));
    assert_eq!(Sign::of(flow), Sign::Negative);
    let wv: BTreeSet<_> = w.iter().flat_map(|f| f.corners()).collect();
    assert_eq!(r(wv.len() as i64, w.len() as i64), flow);
}
