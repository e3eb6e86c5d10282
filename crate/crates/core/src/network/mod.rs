//! Closed labelled networks of 2-boxes, stored as loop/pass data after box
//! removal, together with the λ evaluator and the relation moves.
//!
//! Port conventions for a box: ports `p0..p3` run clockwise from the top-left
//! corner, and the starred (white) corner sits between `p3` and `p0`. The star
//! pass enters at `p3` and leaves at `p0`; the other pass enters at `p1` and
//! leaves at `p2`. Strands are oriented with the black region on their right.

mod check;
mod eval;
mod moves;
mod ports;
mod random;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::hopf::Element;
use crate::scalars::Field;

pub use check::{check_move_invariance, MoveCheck};
pub use eval::{evaluate, evaluate_naive};
pub use moves::{apply_move, enumerate_sites, Locus, Move, Site};
pub use ports::{PortGraph, IN_OTHER, IN_STAR, OUT_OTHER, OUT_STAR};
pub use random::{random_label, random_planar_network, random_planar_wiring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error("box {0} is missing its {1} pass")]
    MissingPass(String, Side),
    #[error("box {0} has more than one {1} pass")]
    DuplicatePass(String, Side),
    #[error("loop references unknown box {0}")]
    UnknownBox(String),
    #[error("label of box {id} has dimension {found}, expected {expected}")]
    LabelDimension { id: String, expected: usize, found: usize },
    #[error("move {0} does not match at the given site: {1}")]
    Pattern(Move, String),
    #[error("no term {0} in the network sum")]
    NoSuchTerm(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Star,
    Other,
}

impl Side {
    pub fn flipped(self) -> Side {
        match self {
            Side::Star => Side::Other,
            Side::Other => Side::Star,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Star => "star",
            Side::Other => "other",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Shading {
    #[default]
    Plus,
    Minus,
}

impl Shading {
    pub fn toggled(self) -> Shading {
        match self {
            Shading::Plus => Shading::Minus,
            Shading::Minus => Shading::Plus,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Pass {
    #[serde(rename = "box")]
    pub box_id: String,
    pub side: Side,
}

impl Pass {
    pub fn new(box_id: impl Into<String>, side: Side) -> Pass {
        Pass { box_id: box_id.into(), side }
    }

    pub fn star(box_id: impl Into<String>) -> Pass {
        Pass::new(box_id, Side::Star)
    }

    pub fn other(box_id: impl Into<String>) -> Pass {
        Pass::new(box_id, Side::Other)
    }
}

impl fmt::Display for Pass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.side == Side::Star { "*" } else { "°" };
        write!(f, "{}{}", self.box_id, mark)
    }
}

/// A closed network: labelled boxes plus loops, each loop a cyclic sequence
/// of passes in orientation order. An empty loop is a free circle.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledNetwork<F> {
    pub shading: Shading,
    pub boxes: BTreeMap<String, Element<F>>,
    pub loops: Vec<Vec<Pass>>,
}

impl<F: Field> LabeledNetwork<F> {
    pub fn new(shading: Shading, boxes: BTreeMap<String, Element<F>>, loops: Vec<Vec<Pass>>) -> Self {
        LabeledNetwork { shading, boxes, loops }
    }

    pub fn empty() -> Self {
        LabeledNetwork { shading: Shading::Plus, boxes: BTreeMap::new(), loops: Vec::new() }
    }

    pub fn free_loop() -> Self {
        LabeledNetwork { loops: vec![Vec::new()], ..Self::empty() }
    }

    /// A single box whose two passes lie on one loop in the order (other, star).
    pub fn closure(label: Element<F>) -> Self {
        let mut boxes = BTreeMap::new();
        boxes.insert("a".to_string(), label);
        LabeledNetwork { shading: Shading::Plus, boxes, loops: vec![vec![Pass::other("a"), Pass::star("a")]] }
    }

    pub fn num_boxes(&self) -> usize {
        self.boxes.len()
    }

    pub fn validate(&self) -> Result<(), NetworkError> {
        let mut seen: BTreeMap<&str, [usize; 2]> = self.boxes.keys().map(|k| (k.as_str(), [0, 0])).collect();
        for pass in self.loops.iter().flatten() {
            let slot =
                seen.get_mut(pass.box_id.as_str()).ok_or_else(|| NetworkError::UnknownBox(pass.box_id.clone()))?;
            let i = pass.side as usize;
            slot[i] += 1;
            if slot[i] > 1 {
                return Err(NetworkError::DuplicatePass(pass.box_id.clone(), pass.side));
            }
        }
        for (id, [star, other]) in seen {
            if star == 0 {
                return Err(NetworkError::MissingPass(id.to_string(), Side::Star));
            }
            if other == 0 {
                return Err(NetworkError::MissingPass(id.to_string(), Side::Other));
            }
        }
        Ok(())
    }

    pub fn check_labels(&self, dim: usize) -> Result<(), NetworkError> {
        for (id, label) in &self.boxes {
            if label.dim() != dim {
                return Err(NetworkError::LabelDimension { id: id.clone(), expected: dim, found: label.dim() });
            }
        }
        Ok(())
    }

    /// Location of a pass as (loop index, position).
    pub fn locate(&self, pass: &Pass) -> Option<(usize, usize)> {
        self.loops.iter().enumerate().find_map(|(l, lp)| lp.iter().position(|p| p == pass).map(|i| (l, i)))
    }

    /// Disjoint union; box ids of `other` are prefixed to avoid clashes.
    pub fn disjoint_union(&self, other: &Self, prefix: &str) -> Self {
        let mut out = self.clone();
        for (id, label) in &other.boxes {
            out.boxes.insert(format!("{prefix}{id}"), label.clone());
        }
        for lp in &other.loops {
            out.loops.push(lp.iter().map(|p| Pass::new(format!("{prefix}{}", p.box_id), p.side)).collect());
        }
        out
    }

    pub fn with_shading(&self, shading: Shading) -> Self {
        LabeledNetwork { shading, ..self.clone() }
    }

    /// Exchanges the two passes of every box, leaving labels untouched.
    pub fn swap_all_sides(&self) -> Self {
        let mut out = self.clone();
        for p in out.loops.iter_mut().flatten() {
            p.side = p.side.flipped();
        }
        out
    }

    /// Rotates the star of every box back by one port and inverts shading.
    pub fn minus_transform(&self) -> Self {
        PortGraph::from_network(self).rotated_back().into_network(self.shading.toggled(), self.boxes.clone())
    }

    pub fn is_planar(&self) -> bool {
        PortGraph::from_network(self).is_planar()
    }

    /// Same network with the loops written in a canonical form: each loop
    /// rotated to start at its least pass, loops sorted.
    pub fn canonical(&self) -> Self {
        let mut loops: Vec<Vec<Pass>> = self
            .loops
            .iter()
            .map(|lp| {
                let start = (0..lp.len()).min_by(|&a, &b| lp[a].cmp(&lp[b])).unwrap_or(0);
                lp[start..].iter().chain(&lp[..start]).cloned().collect()
            })
            .collect();
        loops.sort();
        LabeledNetwork { loops, ..self.clone() }
    }
}

impl<F: Field> fmt::Display for LabeledNetwork<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let loops: Vec<String> = self
            .loops
            .iter()
            .map(|lp| format!("[{}]", lp.iter().map(Pass::to_string).collect::<Vec<_>>().join(" ")))
            .collect();
        write!(f, "{:?} {}", self.shading, loops.join(" "))
    }
}

/// A formal linear combination of networks.
#[derive(Debug, Clone, PartialEq)]
pub struct NetworkSum<F> {
    pub terms: Vec<(F, LabeledNetwork<F>)>,
}

impl<F: Field> NetworkSum<F> {
    pub fn single(n: LabeledNetwork<F>) -> Self {
        NetworkSum { terms: vec![(F::one(), n)] }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: Field> From<LabeledNetwork<F>> for NetworkSum<F> {
    fn from(n: LabeledNetwork<F>) -> Self {
        NetworkSum::single(n)
    }
}
