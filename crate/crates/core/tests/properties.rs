//! Property-based invariants for the tensor, interval, and spectra layers.

use itc_core::certify::{check_interval_pd, check_interval_pd_via_symmetrization, CheckOptions};
use itc_core::interval::{enumerate_sign_vectors, IntervalTensor, SignVector, VertexMode};
use itc_core::spectra::{extreme_z_eigen, SolverOptions};
use itc_core::tensor::DenseTensor;
use itc_core::{Mode, Status};
use proptest::prelude::*;

fn entries(order: usize, dim: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-2.0..2.0f64, dim.pow(order as u32))
}

fn tensor(order: usize, dim: usize) -> impl Strategy<Value = DenseTensor> {
    entries(order, dim).prop_map(move |e| DenseTensor::from_entries(order, dim, e).unwrap())
}

fn symmetric_tensor(order: usize, dim: usize) -> impl Strategy<Value = DenseTensor> {
    tensor(order, dim).prop_map(|t| t.symmetrize())
}

fn interval(order: usize, dim: usize) -> impl Strategy<Value = IntervalTensor> {
    (entries(order, dim), entries(order, dim)).prop_map(move |(c, r)| {
        let center = DenseTensor::from_entries(order, dim, c).unwrap();
        let radius = DenseTensor::from_entries(order, dim, r).unwrap().abs_tensor();
        IntervalTensor::new(center, radius).unwrap()
    })
}

fn unit_vector(dim: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-1.0..1.0f64, dim).prop_filter_map("nonzero", |x| {
        let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        (norm > 1e-3).then(|| x.iter().map(|v| v / norm).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn symmetrize_is_idempotent(a in tensor(4, 3)) {
        let s = a.symmetrize();
        let ss = s.symmetrize();
        for (x, y) in s.entries().iter().zip(ss.entries()) {
            prop_assert!((x - y).abs() <= 1e-12);
        }
        prop_assert!(s.is_symmetric());
    }

    #[test]
    fn symmetrize_preserves_form(a in tensor(4, 3), x in unit_vector(3)) {
        let fa = a.apply_xm(&x).unwrap();
        let fs = a.symmetrize().apply_xm(&x).unwrap();
        prop_assert!((fa - fs).abs() <= 1e-12 * (1.0 + fa.abs()));
    }

    #[test]
    fn contraction_dot_identity(a in tensor(4, 3), x in unit_vector(3)) {
        let f = a.apply_xm(&x).unwrap();
        let y = a.apply_xm1(&x).unwrap();
        let dot: f64 = x.iter().zip(&y).map(|(a, b)| a * b).sum();
        prop_assert!((f - dot).abs() <= 1e-12 * (1.0 + f.abs()));
    }

    #[test]
    fn even_order_sign_symmetry(a in tensor(4, 2), flips in prop::collection::vec(any::<bool>(), 2)) {
        let z = SignVector::new(
            flips.iter().map(|&b| if b { -1 } else { 1 }).collect(),
        ).unwrap();
        let pos = a.mode_product_signs(&z).unwrap();
        let neg = a.mode_product_signs(&z.negated()).unwrap();
        prop_assert_eq!(pos.entries(), neg.entries());
    }

    #[test]
    fn vertices_and_members_are_contained(i in interval(4, 2), seed in any::<u64>()) {
        let lower = i.lower();
        let upper = i.upper();
        for z in enumerate_sign_vectors(2, false) {
            for mode in [VertexMode::Minus, VertexMode::Plus] {
                let v = i.vertex_tensor(&z, mode).unwrap();
                prop_assert!(lower.leq(&v).unwrap());
                prop_assert!(v.leq(&upper).unwrap());
            }
        }
        let member = i.sample_member(seed);
        prop_assert!(lower.leq(&member).unwrap());
        prop_assert!(member.leq(&upper).unwrap());
    }

    #[test]
    fn worst_case_matches_sign_vertex(i in interval(4, 3), x in unit_vector(3)) {
        let wc = i.worst_case_value(&x).unwrap();
        let z = SignVector::from_orthant(&x);
        let at_vertex = i.vertex_tensor(&z, VertexMode::Minus).unwrap().apply_xm(&x).unwrap();
        prop_assert!((wc - at_vertex).abs() <= 1e-12 * (1.0 + wc.abs()));
    }

    #[test]
    fn worst_case_dominated_by_members(i in interval(4, 2), x in unit_vector(2), seed in any::<u64>()) {
        let wc = i.worst_case_value(&x).unwrap();
        let member = i.sample_member(seed);
        prop_assert!(wc <= member.apply_xm(&x).unwrap() + 1e-12);
    }

    #[test]
    fn vertex_map_injective_for_positive_radius(c in entries(4, 3), r in prop::collection::vec(0.1..2.0f64, 81)) {
        let center = DenseTensor::from_entries(4, 3, c).unwrap();
        let radius = DenseTensor::from_entries(4, 3, r).unwrap();
        let i = IntervalTensor::new(center, radius).unwrap();
        let zs = enumerate_sign_vectors(3, true);
        prop_assert_eq!(zs.len(), 4);
        let images: Vec<DenseTensor> = zs
            .iter()
            .map(|z| i.vertex_tensor(z, VertexMode::Minus).unwrap())
            .collect();
        for a in 0..images.len() {
            for b in a + 1..images.len() {
                prop_assert_ne!(images[a].entries(), images[b].entries());
            }
        }
    }

    #[test]
    fn symmetrization_commutes_with_vertices(i in interval(4, 2)) {
        let sym = i.symmetrized();
        for z in enumerate_sign_vectors(2, true) {
            let a = sym.vertex_tensor(&z, VertexMode::Minus).unwrap();
            let b = i.vertex_tensor(&z, VertexMode::Minus).unwrap().symmetrize();
            for (x, y) in a.entries().iter().zip(b.entries()) {
                prop_assert!((x - y).abs() <= 1e-12);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn z_extremes_are_ordered_and_residuals_recompute(a in symmetric_tensor(4, 3)) {
        let opts = SolverOptions::default();
        let lo = extreme_z_eigen(&a, itc_core::Extremum::Min, &opts).unwrap();
        let hi = extreme_z_eigen(&a, itc_core::Extremum::Max, &opts).unwrap();
        prop_assert!(lo.value <= hi.value + 1e-9);
        for est in [&lo, &hi] {
            prop_assert!((est.residual - est.recompute_residual(&a).unwrap()).abs() <= 1e-12);
        }
    }

    #[test]
    fn symmetrization_route_agrees_on_sound_statuses(i in interval(4, 2)) {
        let opts = CheckOptions::default();
        let direct = check_interval_pd(&i, Mode::Psd, &opts).unwrap();
        let routed = check_interval_pd_via_symmetrization(&i, Mode::Psd, &opts).unwrap();
        if direct.sound && routed.sound {
            let both_yes = |s: Status| matches!(s, Status::Pd | Status::PsdNotPd);
            prop_assert_eq!(both_yes(direct.status), both_yes(routed.status));
        }
    }
}

#[test]
fn canonical_enumeration_counts() {
    for n in 1..=6 {
        assert_eq!(enumerate_sign_vectors(n, true).len(), 1 << (n - 1));
        assert_eq!(enumerate_sign_vectors(n, false).len(), 1 << n);
    }
}
