use lopsided::ample::family_from_index;
use lopsided::convexity::closure_satisfies_sca;
use lopsided::cubihedron::{grid_edges, is_connected, is_isometric};
use lopsided::oracle;
use lopsided::prelude::*;
use proptest::prelude::*;

fn family_n(n: usize) -> impl Strategy<Value = SignFamily> {
    let size = 1usize << n;
    prop::collection::vec(any::<bool>(), size).prop_map(move |keep| {
        let members = (0..size as u64).filter(|&s| keep[s as usize]);
        SignFamily::from_encodings(GroundSet::new(n).unwrap(), members).unwrap()
    })
}

fn family(max_n: usize) -> impl Strategy<Value = SignFamily> {
    (0..=max_n).prop_flat_map(family_n)
}

fn partial_vector(n: usize) -> impl Strategy<Value = PartialSignVector> {
    let mask = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    (any::<u64>(), any::<u64>())
        .prop_map(move |(support, signs)| PartialSignVector::new(n, support & mask, signs).unwrap())
}

fn partial_family(max_n: usize, max_len: usize) -> impl Strategy<Value = PartialFamily> {
    (0..=max_n).prop_flat_map(move |n| {
        prop::collection::vec(partial_vector(n), 0..=max_len)
            .prop_map(move |v| PartialFamily::new(GroundSet::new(n).unwrap(), v).unwrap())
    })
}

fn subset_of(n: usize) -> impl Strategy<Value = Subset> {
    let mask = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
    any::<u64>().prop_map(move |b| Subset::new(n, b & mask).unwrap())
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |c, i| c * (n - i) / (i + 1))
}

fn binomial_sum(n: u64, d: i32) -> u64 {
    (0..=d).map(|i| binomial(n, i as u64)).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dress_pajor_inequality(l in family(6)) {
        let (lo, mid, hi) = dress_pajor(&l);
        prop_assert!(lo <= mid && mid <= hi);
        prop_assert_eq!(lo == mid, mid == hi);
    }

    #[test]
    fn shattered_families_are_downward_closed(l in family(6)) {
        prop_assert!(shattered(&l).is_downward_closed());
        prop_assert!(strongly_shattered(&l).is_downward_closed());
        for a in strongly_shattered(&l).iter() {
            prop_assert!(shattered(&l).contains(&a));
        }
    }

    #[test]
    fn sauer_shelah_perles(l in family(7)) {
        let d = vc_dimension(&l);
        prop_assert!(l.len() as u64 <= binomial_sum(l.dim() as u64, d));
    }

    #[test]
    fn counts_match_oracle(l in family(4)) {
        let inv = oracle::invariants(&l);
        prop_assert_eq!(dress_pajor(&l), (inv.strongly_shattered, inv.members, inv.shattered));
        prop_assert_eq!(vc_dimension(&l), inv.vc_dimension);
        prop_assert_eq!(is_ample(&l), inv.ample);
        prop_assert_eq!(barycentric_completion(&l).len(), inv.barycenters);
    }

    #[test]
    fn restriction_inside_projection(l in family(5), seed in any::<u64>()) {
        let n = l.dim();
        let a = Subset::new(n, seed & ((1u64 << n) - 1)).unwrap();
        let p = project(&l, &a).unwrap();
        let r = restrict(&l, &a).unwrap();
        for s in r.iter() {
            prop_assert!(p.contains(&s));
        }
        prop_assert!(p.len() <= l.len());
        prop_assert!(r.len() << a.len() <= l.len());
    }

    #[test]
    fn complement_is_an_involution(l in family(6)) {
        let c = complement(&l);
        prop_assert_eq!(c.len() + l.len(), 1usize << l.dim());
        prop_assert_eq!(complement(&c), l);
    }

    #[test]
    fn text_round_trip(l in family(6)) {
        prop_assert_eq!(SignFamily::parse(&l.to_text()).unwrap(), l);
    }

    #[test]
    fn partial_text_round_trip(j in partial_family(5, 12)) {
        prop_assert_eq!(PartialFamily::parse(&j.to_text()).unwrap(), j);
    }

    #[test]
    fn upward_closure_and_minima(j in partial_family(4, 8)) {
        let up = upward_closure(&j);
        prop_assert!(up.is_upward_closed());
        prop_assert_eq!(&upward_closure(&up), &up);
        let min = minima(&j);
        prop_assert_eq!(&upward_closure(&min), &up);
        prop_assert_eq!(minima(&min), min.clone());
        for t in min.iter() {
            prop_assert!(j.contains(t));
        }
    }

    #[test]
    fn sign_order_is_a_partial_order(
        (a, b, c) in (0..=5usize).prop_flat_map(|n| (partial_vector(n), partial_vector(n), partial_vector(n)))
    ) {
        prop_assert!(precedes(&a, &a).unwrap());
        if precedes(&a, &b).unwrap() && precedes(&b, &a).unwrap() {
            prop_assert_eq!(a, b);
        }
        if precedes(&a, &b).unwrap() && precedes(&b, &c).unwrap() {
            prop_assert!(precedes(&a, &c).unwrap());
        }
        let d = |x: &PartialSignVector, y: &PartialSignVector| l1_distance_partial(x, y).unwrap();
        prop_assert_eq!(d(&a, &b), d(&b, &a));
        prop_assert!(d(&a, &c) <= d(&a, &b) + d(&b, &c));
        prop_assert_eq!(d(&a, &b) == 0, a == b);
    }

    #[test]
    fn barycenters_are_upward_closed(l in family(5)) {
        let bary = barycentric_completion(&l);
        prop_assert!(bary.barycenters().is_upward_closed());
        prop_assert_eq!(bary.vertices(), l.clone());
        prop_assert_eq!(&upward_closure(&cocircuits(&l)), bary.barycenters());
        prop_assert_eq!(cocircuits(&l), minima(bary.barycenters()));
        prop_assert_eq!(bary.dimension(), complex_dimension(&l));
    }

    #[test]
    fn euler_matches_oracle(l in family_n(3), face in partial_vector(3)) {
        let naive = oracle::euler_characteristic(
            &oracle::from_family(&l),
            3,
            &(0..3).map(|e| face.get(e).value()).collect::<Vec<_>>(),
        );
        prop_assert_eq!(euler_characteristic(&l, &face).unwrap(), naive);
    }

    #[test]
    fn grid_isometry_local_test_matches_bfs(j in partial_family(3, 14)) {
        let members: Vec<PartialSignVector> = j.iter().copied().collect();
        let mut isometric = true;
        for a in &members {
            for b in &members {
                let d = grid_distance(&j, a, b).unwrap();
                if d != Some(l1_distance_partial(a, b).unwrap()) {
                    isometric = false;
                }
            }
        }
        prop_assert_eq!(is_grid_isometric(&j), isometric);
    }

    #[test]
    fn grid_edges_have_unit_length(j in partial_family(4, 20)) {
        for (a, b) in grid_edges(&j) {
            prop_assert_eq!(l1_distance_partial(&a, &b).unwrap(), 1);
        }
    }

    #[test]
    fn sca_ignores_upward_closure(j in partial_family(3, 8)) {
        prop_assert_eq!(satisfies_sca(&j), closure_satisfies_sca(&j));
    }

    #[test]
    fn sign_convexity_implies_sca(j in partial_family(3, 10)) {
        if is_sign_convex(&j) {
            prop_assert!(satisfies_sca(&j));
        }
    }

    #[test]
    fn upward_closed_conditions_agree(j in partial_family(3, 6)) {
        let up = upward_closure(&j);
        let r = lopsided::convexity::upward_closed_convexity_report(&up).unwrap();
        prop_assert!(r.agree());
        if r.sign_convex {
            prop_assert!(is_grid_isometric(&up));
        }
    }

    #[test]
    fn orthant_pattern_from_regions(
        points in (1..=4usize).prop_flat_map(|n| prop::collection::vec(
            prop::collection::vec(prop_oneof![Just(0.0), -3.0..3.0f64], n), 0..8))
    ) {
        let cloud = PointCloud::from_rows(points).unwrap();
        let j = region_pattern(&cloud);
        let expected = upward_closure(&j).full_vectors();
        prop_assert_eq!(orthant_pattern(&cloud), expected);
    }

    #[test]
    fn realization_identity(l in family(5)) {
        prop_assert_eq!(orthant_pattern_of_complex(&l), l);
    }

    #[test]
    fn projected_complex_of_nothing_is_the_complex(l in family_n(3), t in partial_vector(3)) {
        let none = Subset::empty(3).unwrap();
        prop_assert_eq!(
            projected_complex_contains(&l, &none, &t).unwrap(),
            barycentric_completion(&l).barycenters().contains(&t)
        );
    }

    #[test]
    fn projected_complex_is_smaller(l in family(5), a in (0u64..32)) {
        let n = l.dim();
        let a = Subset::new(n, a & ((1u64 << n) - 1)).unwrap();
        let (p, q) = projection_dimensions(&l, &a).unwrap();
        prop_assert!(p <= q);
    }

    #[test]
    fn ample_implies_isometric_and_closure(l in family(4), a in (0u64..16)) {
        if is_ample(&l) {
            prop_assert!(is_isometric(&l));
            prop_assert!(is_connected(&l));
            prop_assert!(is_ample(&complement(&l)));
            let n = l.dim();
            let a = Subset::new(n, a & ((1u64 << n) - 1)).unwrap();
            prop_assert!(is_ample(&project(&l, &a).unwrap()));
            prop_assert!(is_ample(&restrict(&l, &a).unwrap()));
        }
    }

    #[test]
    fn count_and_sparse_coincide(l in family(5)) {
        prop_assert_eq!(
            check(&l, Characterization::Count).holds,
            check(&l, Characterization::Sparse).holds
        );
    }

    #[test]
    fn core_predicates_agree_at_random(index in any::<u64>()) {
        let l = family_from_index(4, index & 0xffff);
        let ample = is_ample(&l);
        for c in [
            Characterization::Sparse,
            Characterization::ScaCocirc,
            Characterization::GridIso,
            Characterization::Superconnectivity,
            Characterization::Euler,
            Characterization::Lopsided,
            Characterization::SignconvBaryc,
        ] {
            prop_assert_eq!(check(&l, c).holds, ample, "{} on {:?}", c, l.to_strings());
        }
    }

    #[test]
    fn subset_text_round_trip(a in (0..=6usize).prop_flat_map(subset_of)) {
        prop_assert_eq!(a.to_string().parse::<Subset>().unwrap(), a);
    }
}
