use std::collections::BTreeMap;

use hopf_planar::family;
use hopf_planar::network::{apply_move, enumerate_sites, evaluate_naive, random_planar_network, NetworkError};
use hopf_planar::{Element, Field, Hopf, Move, Network, NetworkSum, Pass, Scalar, Shading, Side};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn net(boxes: &[(&str, Element<Scalar>)], loops: Vec<Vec<Pass>>) -> Network {
    let boxes: BTreeMap<String, Element<Scalar>> = boxes.iter().map(|(k, v)| (k.to_string(), v.clone())).collect();
    Network::new(Shading::Plus, boxes, loops)
}

fn st(id: &str) -> Pass {
    Pass::star(id)
}

fn ot(id: &str) -> Pass {
    Pass::other(id)
}

#[test]
fn validation_errors() {
    let h: Hopf = family::z2();
    assert!(Network::free_loop().validate().is_ok());
    let twice = net(&[("b", h.basis(1))], vec![vec![st("b"), st("b")]]);
    assert_eq!(twice.validate(), Err(NetworkError::DuplicatePass("b".into(), Side::Star)));
    let unknown = net(&[], vec![vec![st("z")]]);
    assert_eq!(unknown.validate(), Err(NetworkError::UnknownBox("z".into())));
    let missing = net(&[("b", h.basis(1))], vec![vec![st("b")]]);
    assert_eq!(missing.validate(), Err(NetworkError::MissingPass("b".into(), Side::Other)));
}

#[test]
fn golden_values_on_family() {
    for (name, h) in family::standard::<Scalar>() {
        let d = h.delta().clone();
        assert_eq!(Network::free_loop().evaluate(&h).unwrap(), d, "{name}");
        assert_eq!(Network::empty().evaluate(&h).unwrap(), Scalar::from_i64(1));
        let hh = h.dual_integral().clone();
        for i in 0..h.dim() {
            let a = h.basis(i);
            let eps = h.counit(&a);
            assert_eq!(Network::closure(a.clone()).evaluate(&h).unwrap(), d.clone() * &eps, "{name} closure");
            let t1 = net(&[("h", hh.clone()), ("a", a.clone())], vec![vec![st("h"), st("a")], vec![ot("h"), ot("a")]]);
            assert!(t1.is_planar());
            assert_eq!(t1.evaluate(&h).unwrap(), d.square() * &eps, "{name} T1");
        }
        let cap = net(&[("h", hh)], vec![vec![st("h"), ot("h")]]);
        assert_eq!(cap.evaluate(&h).unwrap(), d.square() * &d, "{name} h-cap");
    }
}

#[test]
fn four_box_network_matches_hand_formula() {
    let loops = vec![vec![st("c"), ot("d"), st("a")], vec![ot("a"), ot("b"), ot("c")], vec![st("d"), st("b")]];
    for (name, h) in family::standard::<Scalar>() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..4 {
            let labels: Vec<Element<Scalar>> = (0..4).map(|_| h.basis(rng.gen_range(0..h.dim()))).collect();
            let n = net(
                &[
                    ("a", labels[0].clone()),
                    ("b", labels[1].clone()),
                    ("c", labels[2].clone()),
                    ("d", labels[3].clone()),
                ],
                loops.clone(),
            );
            assert!(n.is_planar(), "{name}");
            // δ⁻³ φ(a₁ S(d₂) c₁) φ(S(c₂) S(b₂) S(a₂)) φ(b₁ d₁), summed term by term.
            let mut expected = Scalar::from_i64(0);
            let co: Vec<_> = labels.iter().map(|l| h.coproduct(l)).collect();
            for (a1, a2, ca) in &co[0] {
                for (b1, b2, cb) in &co[1] {
                    for (c1, c2, cc) in &co[2] {
                        for (d1, d2, cd) in &co[3] {
                            let e = |i: &usize| h.basis(*i);
                            let s = |i: &usize| h.antipode(&h.basis(*i));
                            let f1 = h.phi(&h.mul(&h.mul(&e(a1), &s(d2)), &e(c1)));
                            let f2 = h.phi(&h.mul(&h.mul(&s(c2), &s(b2)), &s(a2)));
                            let f3 = h.phi(&h.mul(&e(b1), &e(d1)));
                            expected += &(ca.clone() * cb * cc * cd * &f1 * &f2 * &f3);
                        }
                    }
                }
            }
            let di = h.delta_inv().clone();
            expected = expected * &di * &di * &di;
            assert_eq!(n.evaluate(&h).unwrap(), expected, "{name}");
        }
    }
}

#[test]
fn fast_and_naive_agree_on_random_networks() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, h) in family::standard::<Scalar>() {
        for _ in 0..10 {
            let g = rng.gen_range(0..=3);
            let n = random_planar_network(&h, g, &mut rng);
            assert_eq!(n.evaluate(&h).unwrap(), evaluate_naive(&n, &h).unwrap(), "{name}: {n}");
        }
    }
}

fn check_moves(h: &Hopf, seed: u64, trials: usize) -> BTreeMap<Move, usize> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut done = BTreeMap::new();
    for mv in Move::ALL {
        let mut count = 0;
        let mut attempts = 0;
        while count < trials && attempts < trials * 50 {
            attempts += 1;
            let g = rng.gen_range(1..=4);
            let x = NetworkSum::single(random_planar_network(h, g, &mut rng));
            let sites = enumerate_sites(&x, mv, h);
            if sites.is_empty() {
                continue;
            }
            let site = &sites[rng.gen_range(0..sites.len())];
            let y = apply_move(&x, mv, site, h).unwrap();
            for (_, t) in &y.terms {
                assert!(t.is_planar(), "{mv} broke planarity: {} -> {t}", x.terms[0].1);
            }
            assert_eq!(x.evaluate(h).unwrap(), y.evaluate(h).unwrap(), "{mv} at {site:?} on {}", x.terms[0].1);
            count += 1;
        }
        done.insert(mv, count);
    }
    done
}

#[test]
fn moves_preserve_value_on_s3_and_dual() {
    let h: Hopf = family::s3();
    let counts = check_moves(&h, 1, 25);
    assert!(counts.values().all(|&c| c == 25), "{counts:?}");
    let counts = check_moves(h.dual(), 2, 25);
    assert!(counts.values().all(|&c| c == 25), "{counts:?}");
}

#[test]
fn move_examples() {
    let h: Hopf = family::z2();
    let d = h.delta().clone();
    let x = h.basis(1);
    // M: free loop next to a closure.
    let mut n = Network::closure(x.clone());
    n.loops.push(vec![]);
    let sum = NetworkSum::single(n.clone());
    let sites = enumerate_sites(&sum, Move::M, &h);
    assert_eq!(sites.len(), 1);
    let out = apply_move(&sum, Move::M, &sites[0], &h).unwrap();
    assert_eq!(out.terms[0].0, d);
    assert_eq!(out.terms[0].1, Network::closure(x.clone()));
    assert_eq!(out.evaluate(&h).unwrap(), sum.evaluate(&h).unwrap());
    // A on the closure of x: S(x) = x, value δ.
    let sum = NetworkSum::single(Network::closure(x.clone()));
    let site = enumerate_sites(&sum, Move::A, &h).remove(0);
    let out = apply_move(&sum, Move::A, &site, &h).unwrap();
    assert_eq!(out.evaluate(&h).unwrap(), d);
    // C on e − x: ε(e − x) = 0.
    let ex = h.basis(0).sub(&x);
    let sum = NetworkSum::single(Network::closure(ex));
    let site = enumerate_sites(&sum, Move::C, &h).remove(0);
    let out = apply_move(&sum, Move::C, &site, &h).unwrap();
    assert_eq!(out.terms[0].0, Scalar::from_i64(0));
    assert_eq!(out.evaluate(&h).unwrap(), sum.evaluate(&h).unwrap());
}

#[test]
fn pattern_mismatch_is_reported() {
    let h: Hopf = family::z2();
    let sum = NetworkSum::single(Network::closure(h.basis(1)));
    let site = hopf_planar::network::Site { term: 0, locus: hopf_planar::network::Locus::Box("a".into()) };
    assert!(matches!(apply_move(&sum, Move::U, &site, &h), Err(NetworkError::Pattern(Move::U, _))));
    assert!(matches!(apply_move(&sum, Move::I, &site, &h), Err(NetworkError::Pattern(Move::I, _))));
    let bad = hopf_planar::network::Site { term: 3, locus: hopf_planar::network::Locus::Loop(0) };
    assert_eq!(apply_move(&sum, Move::M, &bad, &h), Err(NetworkError::NoSuchTerm(3)));
}

#[test]
fn minus_transform_examples() {
    let h: Hopf = family::s3();
    let free = Network::free_loop();
    let m = free.minus_transform();
    assert_eq!(m.shading, Shading::Minus);
    assert_eq!(m.evaluate(&h).unwrap(), *h.delta());
    for i in 0..h.dim() {
        let a = h.basis(i);
        let closure = Network::closure(a.clone());
        let twice = closure.minus_transform().minus_transform();
        assert_eq!(twice.canonical(), closure.swap_all_sides().canonical());
        let relabelled = Network::closure(h.antipode(&a));
        assert_eq!(twice.evaluate(&h).unwrap(), relabelled.evaluate(&h).unwrap());
    }
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn algebra(i: usize) -> Hopf {
        let all = family::standard::<Scalar>();
        all.into_iter().nth(i % 6).unwrap().1
    }

    fn sample(alg: usize, seed: u64, g: usize) -> (Hopf, Network) {
        let h = algebra(alg);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = random_planar_network(&h, g, &mut rng);
        (h, n)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn base_point_invariance(alg in 0usize..6, seed in any::<u64>(), g in 1usize..4, r in 0usize..8) {
            let (h, n) = sample(alg, seed, g);
            let mut m = n.clone();
            for lp in &mut m.loops {
                if !lp.is_empty() {
                    let k = r % lp.len();
                    lp.rotate_left(k);
                }
            }
            prop_assert_eq!(n.evaluate(&h).unwrap(), m.evaluate(&h).unwrap());
        }

        #[test]
        fn shading_does_not_change_value(alg in 0usize..6, seed in any::<u64>(), g in 0usize..4) {
            let (h, n) = sample(alg, seed, g);
            let t = n.with_shading(n.shading.toggled());
            prop_assert_eq!(n.evaluate(&h).unwrap(), t.evaluate(&h).unwrap());
        }

        #[test]
        fn linearity(alg in 0usize..6, seed in any::<u64>(), g in 0usize..3, c1 in -5i64..5, c2 in -5i64..5) {
            let (h, n1) = sample(alg, seed, g);
            let (_, n2) = sample(alg, seed.wrapping_add(1), g);
            let (s1, s2) = (Scalar::from_i64(c1), Scalar::from_i64(c2));
            let sum = NetworkSum { terms: vec![(s1.clone(), n1.clone()), (s2.clone(), n2.clone())] };
            let expected = s1 * &n1.evaluate(&h).unwrap() + s2 * &n2.evaluate(&h).unwrap();
            prop_assert_eq!(sum.evaluate(&h).unwrap(), expected);
        }

        #[test]
        fn disjoint_union_multiplies(alg in 0usize..6, seed in any::<u64>(), g in 0usize..3) {
            let (h, n1) = sample(alg, seed, g);
            let (_, n2) = sample(alg, seed ^ 0x9e37, 3 - g);
            let u = n1.disjoint_union(&n2, "r");
            prop_assert!(u.is_planar());
            prop_assert_eq!(u.evaluate(&h).unwrap(), n1.evaluate(&h).unwrap() * &n2.evaluate(&h).unwrap());
        }

        #[test]
        fn fast_path_matches_reference(alg in 0usize..6, seed in any::<u64>(), g in 0usize..4) {
            let (h, n) = sample(alg, seed, g);
            prop_assert_eq!(n.evaluate(&h).unwrap(), evaluate_naive(&n, &h).unwrap());
        }

        #[test]
        fn double_minus_swaps_sides(alg in 0usize..6, seed in any::<u64>(), g in 0usize..5) {
            let (h, n) = sample(alg, seed, g);
            let m = n.minus_transform();
            prop_assert!(m.is_planar());
            prop_assert!(m.validate().is_ok());
            prop_assert_eq!(m.shading, n.shading.toggled());
            prop_assert_eq!(m.minus_transform().canonical(), n.swap_all_sides().canonical());
            // Swapping sides is the A move on every box.
            let mut relabelled = n.clone();
            for a in relabelled.boxes.values_mut() {
                *a = h.antipode(a);
            }
            prop_assert_eq!(n.swap_all_sides().evaluate(&h).unwrap(), relabelled.evaluate(&h).unwrap());
        }
    }
}
