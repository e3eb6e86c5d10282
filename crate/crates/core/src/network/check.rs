use rand::Rng;
use serde::Serialize;

use super::moves::{apply_move, enumerate_sites, Move};
use super::random::random_planar_network;
use super::NetworkSum;
use crate::hopf::HopfAlgebra;
use crate::scalars::Field;

/// Outcome of a seeded run of one relation on random planar networks.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MoveCheck {
    pub relation: String,
    pub requested: usize,
    pub applied: usize,
    pub attempts: usize,
    /// Networks (as text) on which the value or planarity changed.
    pub failures: Vec<String>,
}

impl MoveCheck {
    pub fn passed(&self) -> bool {
        self.applied == self.requested && self.failures.is_empty()
    }
}

/// Applies `mv` at a random site of `trials` random planar networks with
/// 1..=`max_boxes` boxes, comparing exact values before and after. Networks
/// without a site for `mv` are redrawn, up to 50 draws per trial.
pub fn check_move_invariance<F: Field, R: Rng + ?Sized>(
    h: &HopfAlgebra<F>,
    mv: Move,
    trials: usize,
    max_boxes: usize,
    rng: &mut R,
) -> MoveCheck {
    let mut out =
        MoveCheck { relation: mv.to_string(), requested: trials, applied: 0, attempts: 0, failures: Vec::new() };
    while out.applied < trials && out.attempts < trials * 50 {
        out.attempts += 1;
        let g = rng.gen_range(1..=max_boxes.max(1));
        let x = NetworkSum::single(random_planar_network(h, g, rng));
        let sites = enumerate_sites(&x, mv, h);
        if sites.is_empty() {
            continue;
        }
        let site = &sites[rng.gen_range(0..sites.len())];
        out.applied += 1;
        let ok = match (apply_move(&x, mv, site, h), x.evaluate(h)) {
            (Ok(y), Ok(before)) => {
                y.terms.iter().all(|(_, t)| t.is_planar()) && y.evaluate(h).is_ok_and(|after| after == before)
            }
            _ => false,
        };
        if !ok {
            out.failures.push(x.terms[0].1.to_string());
        }
    }
    out
}
