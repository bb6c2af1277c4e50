//! Checks over every family in small dimensions.

use lopsided::ample::{cross_check_only, family_from_index};
use lopsided::convexity::upward_closed_convexity_report;
use lopsided::oracle;
use lopsided::prelude::*;

fn all_families(n: usize) -> impl Iterator<Item = SignFamily> {
    (0..1u64 << (1u64 << n)).map(move |i| family_from_index(n, i))
}

/// Every subfamily of `{±1,0}^n`.
fn all_partial_families(n: usize) -> Vec<PartialFamily> {
    let ground = GroundSet::new(n).unwrap();
    let grid: Vec<PartialSignVector> = PartialFamily::everything(ground.clone()).iter().copied().collect();
    (0..1u64 << grid.len())
        .map(|bits| {
            let members = grid.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, t)| *t);
            PartialFamily::new(ground.clone(), members).unwrap()
        })
        .collect()
}

#[test]
fn every_characterization_agrees_up_to_dimension_three() {
    for n in 0..=3 {
        for l in all_families(n) {
            let report = cross_check(&l);
            assert!(report.disagreements().is_empty(), "{:?}: {:?}", l.to_strings(), report.disagreements());
            assert!(report.agree);
        }
    }
}

#[test]
fn ample_counts_match_oracle() {
    for n in 0..=3 {
        let fast = all_families(n).filter(is_ample).count() as u64;
        assert_eq!(fast, oracle::count_ample(n), "n = {n}");
    }
}

#[test]
fn invariants_match_oracle_in_dimension_three() {
    for l in all_families(3) {
        let inv = oracle::invariants(&l);
        assert_eq!(dress_pajor(&l), (inv.strongly_shattered, inv.members, inv.shattered));
        assert_eq!(barycentric_completion(&l).len(), inv.barycenters);
    }
}

#[test]
fn closure_under_complement_projection_restriction() {
    for n in 0..=3 {
        for l in all_families(n).filter(is_ample) {
            assert!(is_ample(&complement(&l)));
            for bits in 0..1u64 << n {
                let a = Subset::new(n, bits).unwrap();
                assert!(is_ample(&project(&l, &a).unwrap()));
                assert!(is_ample(&restrict(&l, &a).unwrap()));
            }
        }
    }
}

#[test]
fn cocircuit_reconstruction_in_the_plane() {
    let mut tested = 0;
    for j in all_partial_families(2) {
        if !satisfies_sca(&j) || minima(&j) != j {
            continue;
        }
        let l = upward_closure(&j).full_vectors();
        assert!(is_ample(&l), "{:?}", j.to_strings());
        assert_eq!(cocircuits(&l), j);
        tested += 1;
    }
    assert!(tested > 0);
}

#[test]
fn upward_closed_convexity_in_the_plane() {
    for j in all_partial_families(2) {
        assert_eq!(satisfies_sca(&j), satisfies_sca(&upward_closure(&j)));
        if !j.is_upward_closed() {
            continue;
        }
        let r = upward_closed_convexity_report(&j).unwrap();
        assert!(r.agree(), "{:?}", j.to_strings());
        if r.sign_convex {
            assert!(is_grid_isometric(&j));
        }
    }
}

#[test]
fn realization_identity_up_to_dimension_four() {
    for n in 0..=4 {
        for l in all_families(n) {
            assert_eq!(orthant_pattern_of_complex(&l), l);
        }
    }
}

#[test]
fn sampled_dimension_four_agreement() {
    let ids = [
        Characterization::Count,
        Characterization::Sparse,
        Characterization::ScaCocirc,
        Characterization::GridIso,
        Characterization::Superconnectivity,
        Characterization::Euler,
        Characterization::ProjDim,
    ];
    for i in (0..1u64 << 16).step_by(97) {
        let l = family_from_index(4, i);
        let report = cross_check_only(&l, &ids);
        assert!(report.agree, "{:?}", l.to_strings());
    }
}
