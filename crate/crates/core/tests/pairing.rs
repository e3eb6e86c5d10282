use hopf_planar::family;
use hopf_planar::pairing::{
    collapsed_w_tangle, depth_two_gram, depth_two_gram_with, dual_bases, exchange_w_tangle, gram, gram_report,
    reconstruct_structure, Budget, PairingError, PairingTemplate,
};
use hopf_planar::tangle::Tangle;
use hopf_planar::{Field, Hopf, Scalar};

#[test]
fn dual_bases_examples() {
    let z2: Hopf = family::z2();
    let pair = dual_bases(&z2);
    assert_eq!(pair.dual, pair.primal);
    let s3: Hopf = family::s3();
    let pair = dual_bases(&s3);
    // The dual of g is g⁻¹; (12), (01), (02) are involutions, (012) and (021) swap.
    let inverse = [0, 1, 2, 4, 3, 5];
    for (g, d) in pair.dual.iter().enumerate() {
        assert_eq!(*d, s3.basis(inverse[g]));
    }
    for (name, h) in family::standard::<Scalar>() {
        let pair = dual_bases(&h);
        let d2 = h.delta_inv().clone() * h.delta_inv();
        for i in 0..h.dim() {
            for j in 0..h.dim() {
                let v = h.phi(&h.mul(&pair.primal[i], &pair.dual[j])) * &d2;
                assert_eq!(v, Scalar::from_i64(i64::from(i == j)), "{name}");
            }
        }
    }
}

#[test]
fn k2_template_is_trace_form() {
    let t = PairingTemplate::new(2).unwrap();
    for (name, h) in family::standard::<Scalar>() {
        let d2 = h.delta_inv().clone() * h.delta_inv();
        for a in 0..h.dim() {
            for b in 0..h.dim() {
                let (ea, eb) = (h.basis(a), h.basis(b));
                let v = t.network(std::slice::from_ref(&ea), std::slice::from_ref(&eb)).evaluate(&h).unwrap() * &d2;
                assert_eq!(v, h.phi(&h.mul(&ea, &eb)) * &d2, "{name}");
                let w = t.network(std::slice::from_ref(&eb), std::slice::from_ref(&ea)).evaluate(&h).unwrap() * &d2;
                assert_eq!(v, w, "{name}: trace property");
            }
        }
    }
}

#[test]
fn template_wiring_is_planar() {
    for k in 2..=5 {
        let t = PairingTemplate::new(k).unwrap();
        assert!(t.tangle.is_planar());
        assert_eq!(t.tangle.slots.len(), 2 * (k - 1));
    }
    assert_eq!(PairingTemplate::new(1), Err(PairingError::Colour(1)));
}

#[test]
fn gram_is_identity_k2_k3() {
    for (name, h) in family::standard::<Scalar>() {
        for k in 2..=3 {
            let r = gram_report(&h, k, &Budget::default()).unwrap();
            assert!(r.passed && r.gram_is_identity, "{name} k={k}: {r:?}");
            assert_eq!(r.rank, h.dim().pow(k as u32 - 1));
        }
    }
}

#[test]
fn gram_is_identity_k4_k5_for_z2() {
    let h: Hopf = family::z2();
    for k in 4..=5 {
        assert!(gram(&h, k, &Budget::default()).unwrap().is_identity(), "k={k}");
    }
}

#[test]
fn gram_budget_is_enforced() {
    let h: Hopf = family::s3();
    let err = gram(&h, 4, &Budget::default()).unwrap_err();
    assert_eq!(err, PairingError::Budget { requested: 46656, cap: 10_000 });
}

#[test]
fn depth_two_ranks() {
    for (name, h) in family::standard::<Scalar>() {
        let n = h.dim();
        assert_eq!(depth_two_gram(&h).unwrap().rank(), n * n, "{name}");
    }
    let z2: Hopf = family::z2();
    assert_eq!(depth_two_gram_with(&z2, &exchange_w_tangle()).unwrap().rank(), 4);
}

#[test]
fn collapsed_wiring_loses_rank_on_s3() {
    let h: Hopf = family::s3();
    let r = depth_two_gram_with(&h, &collapsed_w_tangle()).unwrap().rank();
    assert!(r <= h.dim(), "rank {r}");
}

#[test]
fn reconstruction_roundtrip() {
    for (name, h) in family::standard::<Scalar>() {
        let report = reconstruct_structure(&h).unwrap();
        assert!(report.passed(), "{name}: {report:?}");
        assert_eq!(report.depth_two_rank, h.dim() * h.dim());
    }
}

#[test]
fn face_free_three_tangle_counts() {
    // Temperley–Lieb: Catalan numbers; one box: 6 cap positions × 2 stars.
    assert_eq!(Tangle::enumerate_face_free(3, 0).len(), 5);
    assert_eq!(Tangle::enumerate_face_free(3, 1).len(), 12);
    assert_eq!(Tangle::enumerate_face_free(2, 1).len(), 2);
}
