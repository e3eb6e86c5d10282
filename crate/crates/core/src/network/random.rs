use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::Rng;

use super::ports::{PortGraph, IN_OTHER, IN_STAR, OUT_OTHER, OUT_STAR};
use super::{LabeledNetwork, Shading};
use crate::hopf::{Element, HopfAlgebra};
use crate::scalars::Field;

/// A random label: a basis element, 1, h, or a small integer combination of
/// two basis elements.
pub fn random_label<F: Field, R: Rng + ?Sized>(h: &HopfAlgebra<F>, rng: &mut R) -> Element<F> {
    let n = h.dim();
    match rng.gen_range(0..10) {
        0..=3 => h.basis(rng.gen_range(0..n)),
        4 | 5 => h.one().clone(),
        6 | 7 => h.dual_integral().clone(),
        _ => {
            let a = h.basis(rng.gen_range(0..n)).scale(&F::from_i64(rng.gen_range(1..=3)));
            let b = h.basis(rng.gen_range(0..n)).scale(&F::from_i64(rng.gen_range(-2..=2)));
            a.add(&b)
        }
    }
}

/// A uniformly random planar wiring of `g` boxes: out-ports are paired with
/// in-ports at random until Euler's formula certifies planarity.
pub fn random_planar_wiring<R: Rng + ?Sized>(g: usize, rng: &mut R) -> PortGraph {
    let ids: Vec<String> = (1..=g).map(|i| format!("b{i}")).collect();
    let outs: Vec<usize> = (0..g).flat_map(|b| [4 * b + OUT_STAR, 4 * b + OUT_OTHER]).collect();
    let mut ins: Vec<usize> = (0..g).flat_map(|b| [4 * b + IN_STAR, 4 * b + IN_OTHER]).collect();
    loop {
        ins.shuffle(rng);
        let graph = PortGraph {
            ids: ids.clone(),
            link: outs.iter().copied().zip(ins.iter().copied()).collect(),
            free_loops: 0,
        };
        if graph.is_planar() {
            return graph;
        }
    }
}

/// A random planar network with `g` boxes and random labels, plus up to one
/// free loop.
pub fn random_planar_network<F: Field, R: Rng + ?Sized>(
    h: &HopfAlgebra<F>,
    g: usize,
    rng: &mut R,
) -> LabeledNetwork<F> {
    let mut wiring = random_planar_wiring(g, rng);
    wiring.free_loops = usize::from(rng.gen_bool(0.25));
    let boxes: BTreeMap<String, Element<F>> = wiring.ids.iter().map(|id| (id.clone(), random_label(h, rng))).collect();
    let shading = if rng.gen_bool(0.5) { Shading::Plus } else { Shading::Minus };
    let mut n = wiring.into_network(shading, boxes);
    for lp in &mut n.loops {
        if !lp.is_empty() {
            let r = rng.gen_range(0..lp.len());
            lp.rotate_left(r);
        }
    }
    n.loops.shuffle(rng);
    n
}
