use hopf_planar::duality::{dual_network, verify_duality_on_network, verify_duality_with, verify_generator_map};
use hopf_planar::family;
use hopf_planar::network::random_planar_network;
use hopf_planar::{DeltaSign, Hopf, HopfAlgebra, Network, Pass, Scalar, Shading};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn generator_identities_on_family() {
    for (name, h) in family::standard::<Scalar>() {
        let r = verify_generator_map(&h);
        assert!(r.all_passed(), "{name}: {:?}", r.failed());
    }
}

#[test]
fn trivial_cases() {
    let h: Hopf = family::z2();
    let o = verify_duality_on_network(&h, &Network::free_loop()).unwrap();
    assert_eq!((o.lhs.clone(), o.rhs.clone()), (h.delta().clone(), h.delta().clone()));
    let o = verify_duality_on_network(&h, &Network::closure(h.basis(1))).unwrap();
    assert!(o.equal());
    assert_eq!(o.lhs, *h.delta());
}

#[test]
fn four_box_network_over_s3() {
    let h: Hopf = family::s3();
    let mut rng = ChaCha8Rng::seed_from_u64(55);
    let loops = vec![
        vec![Pass::star("c"), Pass::other("d"), Pass::star("a")],
        vec![Pass::other("a"), Pass::other("b"), Pass::other("c")],
        vec![Pass::star("d"), Pass::star("b")],
    ];
    for _ in 0..5 {
        let boxes = ["a", "b", "c", "d"].iter().map(|k| (k.to_string(), h.basis(rng.gen_range(0..6)))).collect();
        let n = Network::new(Shading::Plus, boxes, loops.clone());
        assert!(verify_duality_on_network(&h, &n).unwrap().equal());
    }
}

#[test]
fn duality_on_random_networks() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for (name, h) in family::standard::<Scalar>() {
        for _ in 0..20 {
            let n = random_planar_network(&h, rng.gen_range(0..=3), &mut rng);
            for shading in [Shading::Plus, Shading::Minus] {
                let o = verify_duality_on_network(&h, &n.with_shading(shading)).unwrap();
                assert!(o.equal(), "{name}: {n} gives {} vs {}", o.lhs, o.rhs);
            }
        }
    }
}

#[test]
fn applying_duality_twice_matches_antipode() {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let h: Hopf = family::s3();
    for _ in 0..10 {
        let n = random_planar_network(&h, rng.gen_range(1..=3), &mut rng);
        let twice = dual_network(h.dual(), &dual_network(&h, &n));
        let mut relabelled = n.swap_all_sides();
        for a in relabelled.boxes.values_mut() {
            *a = h.antipode(a);
        }
        assert_eq!(twice.evaluate(&h).unwrap(), relabelled.evaluate(&h).unwrap());
        assert_eq!(twice.evaluate(&h).unwrap(), n.evaluate(&h).unwrap());
    }
}

#[test]
fn wrong_delta_sign_on_dual_side_breaks_duality() {
    let h: Hopf = family::s3();
    let flipped: Hopf = HopfAlgebra::from_constants(h.dual().constants().clone(), DeltaSign::Minus).unwrap();
    // The minus side of a closure has two loops, so a sign flip of δ cancels
    // there; a network with an odd number of loops exposes it.
    let o = verify_duality_with(&h, &flipped, &Network::closure(h.basis(0))).unwrap();
    assert!(o.equal());
    let mut odd = Network::closure(h.basis(2));
    odd.loops.push(vec![]);
    let o = verify_duality_with(&h, &flipped, &odd).unwrap();
    assert!(!o.equal(), "{} vs {}", o.lhs, o.rhs);
}
