mod common;

use iepg::matrix::{permute_symmetric, scale_shift};
use iepg::realize::{build_family, Family};
use iepg::strong::{
    has_property, ssp_edge_lower_bound, ts_block_structure_check, verification_matrix, verification_rows_commutator,
    RankOptions,
};
use iepg::{PatternedMatrix, PropertyKind};
use nalgebra::DMatrix;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn matrix_strategy(max_n: usize) -> impl Strategy<Value = PatternedMatrix> {
    (2..=max_n, any::<u64>(), 0.2f64..0.8).prop_map(|(n, seed, p)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = common::random_graph(&mut rng, n, p);
        common::random_matrix(&mut rng, &g)
    })
}

fn shifted(a: &PatternedMatrix, lambda: f64) -> PatternedMatrix {
    let n = a.order();
    PatternedMatrix::with_pattern(a.matrix() - DMatrix::identity(n, n) * lambda, a.graph(), 1e-12).unwrap()
}

/// Matrices with repeated eigenvalues, where the properties can fail.
fn structured_corpus() -> Vec<PatternedMatrix> {
    let mut v = Vec::new();
    for f in [
        Family::C4Table,
        Family::K13Table { a: 1.0, b: 1.0 },
        Family::M1 { t: 0.5 },
        Family::M2 { a: 1.0 },
        Family::M3 { a: 1.0 },
        Family::M4 { a: 1.0, b: 1.0, c: 0.5 },
        Family::M5 { a: 1.0 },
        Family::M5 { a: 2.0 },
        Family::B12,
        Family::K16Table,
        Family::S21111Table,
        Family::S2211Table,
    ] {
        v.push(build_family(f).unwrap().matrix);
    }
    // star with a triple eigenvalue: no SSP
    let mut s = DMatrix::zeros(5, 5);
    for i in 1..5 {
        s[(0, i)] = 1.0;
        s[(i, 0)] = 1.0;
    }
    v.push(PatternedMatrix::new(s).unwrap());
    // disjoint triangles sharing an eigenvalue: no SSP
    let j = DMatrix::from_element(3, 3, 1.0);
    v.push(PatternedMatrix::new(iepg::matrix::direct_sum(&j, &j)).unwrap());
    v
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn both_verification_constructions_agree(a in matrix_strategy(7)) {
        for kind in PropertyKind::ALL {
            let q = Some(a.spectrum().clusters.len());
            let x = verification_matrix(&a, kind, q);
            let y = verification_rows_commutator(&a, kind, q);
            prop_assert_eq!(x.shape(), y.shape());
            prop_assert!((x - y).amax() <= 1e-12);
        }
    }

    #[test]
    fn rank_test_matches_the_definition(a in matrix_strategy(6), pick in 0usize..6) {
        let lambda = a.eigenvalues()[pick % a.order()];
        for m in [a.clone(), shifted(&a, lambda)] {
            for kind in PropertyKind::ALL {
                prop_assert_eq!(has_property(&m, kind, &RankOptions::default()).holds, common::property_by_definition(&m, kind));
            }
        }
    }

    #[test]
    fn properties_survive_relabelling(a in matrix_strategy(7), seed in any::<u64>()) {
        let p = common::permutation(&mut ChaCha8Rng::seed_from_u64(seed), a.order());
        let b = PatternedMatrix::new(permute_symmetric(a.matrix(), &p)).unwrap();
        for kind in PropertyKind::ALL {
            prop_assert_eq!(
                has_property(&a, kind, &RankOptions::default()).holds,
                has_property(&b, kind, &RankOptions::default()).holds
            );
        }
    }

    #[test]
    fn ts_has_the_block_form(a in matrix_strategy(6), lambda in -5.0f64..5.0) {
        prop_assert!(ts_block_structure_check(a.matrix(), lambda).max_deviation <= 1e-12);
    }
}

#[test]
fn definition_agrees_on_structured_matrices() {
    for a in structured_corpus() {
        for lambda in a.spectrum().distinct() {
            for m in [a.clone(), shifted(&a, lambda)] {
                for kind in PropertyKind::ALL {
                    assert_eq!(
                        has_property(&m, kind, &RankOptions::default()).holds,
                        common::property_by_definition(&m, kind),
                        "{kind:?} on {:?}",
                        m.rows()
                    );
                }
            }
        }
    }
}

#[test]
fn ssp_is_unchanged_by_affine_maps() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let corpus = structured_corpus();
    for i in 0..100 {
        let a = if i % 2 == 0 {
            corpus[i / 2 % corpus.len()].clone()
        } else {
            let n = rng.gen_range(3..=7);
            let g = common::random_graph(&mut rng, n, 0.5);
            common::random_matrix(&mut rng, &g)
        };
        let e = a.eigenvalues();
        let (l1, l2) = (e[0], e[e.len() - 1]);
        if l2 - l1 < 1e-6 {
            continue;
        }
        let m1 = rng.gen_range(-3.0..3.0);
        let m2 = m1 + if rng.gen_bool(0.5) { 1.0 } else { -1.0 } * rng.gen_range(0.5..4.0);
        let b = PatternedMatrix::new(scale_shift(a.matrix(), l1, l2, m1, m2).unwrap()).unwrap();
        assert_eq!(
            has_property(&a, PropertyKind::Ssp, &RankOptions::default()).holds,
            has_property(&b, PropertyKind::Ssp, &RankOptions::default()).holds
        );
    }
}

#[test]
fn ssp_implies_smp_implies_sap_at_every_eigenvalue() {
    let mut rng = ChaCha8Rng::seed_from_u64(32);
    let mut corpus = structured_corpus();
    for _ in 0..100 {
        let n = rng.gen_range(2..=7);
        let g = common::random_graph(&mut rng, n, 0.5);
        corpus.push(common::random_matrix(&mut rng, &g));
    }
    for a in corpus {
        let ssp = has_property(&a, PropertyKind::Ssp, &RankOptions::default()).holds;
        let smp = has_property(&a, PropertyKind::Smp, &RankOptions::default()).holds;
        assert!(!ssp || smp);
        if smp {
            for lambda in a.spectrum().distinct() {
                assert!(has_property(&shifted(&a, lambda), PropertyKind::Sap, &RankOptions::default()).holds);
            }
        }
    }
}

#[test]
fn ssp_matrices_respect_the_edge_bound() {
    let mut rng = ChaCha8Rng::seed_from_u64(33);
    let mut corpus = structured_corpus();
    for _ in 0..200 {
        let n = rng.gen_range(2..=7);
        let g = common::random_graph(&mut rng, n, 0.6);
        corpus.push(common::random_matrix(&mut rng, &g));
    }
    for a in corpus {
        if has_property(&a, PropertyKind::Ssp, &RankOptions::default()).holds {
            assert!(a.graph().size() >= ssp_edge_lower_bound(&a.oml()));
        }
    }
}

#[test]
fn certificates_report_their_threshold() {
    let a = build_family(Family::B12).unwrap().matrix;
    let c = has_property(&a, PropertyKind::Ssp, &RankOptions::default());
    assert!(!c.holds && c.sigma_p.unwrap() <= c.threshold);
    let forced = has_property(&a, PropertyKind::Smp, &RankOptions { rank_tol: Some(1e3), cluster_tol: None });
    assert!(!forced.holds && forced.threshold == 1e3);
}
