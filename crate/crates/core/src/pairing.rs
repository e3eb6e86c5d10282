//! Trace pairings in P_k: dual bases, the X_k/X_k* pairing template, Gram
//! matrices, the depth-two check, and reconstruction of Δ, ε and S from
//! tangle evaluations.

use serde::Serialize;
use thiserror::Error;

use crate::hopf::{Element, HopfAlgebra};
use crate::linalg::Matrix;
use crate::network::{LabeledNetwork, NetworkError};
use crate::scalars::{Field, ScalarError};
use crate::tangle::{bottom, top, End, StarCorner, Tangle};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error("budget exceeded: {requested} Gram entries requested, cap is {cap}")]
    Budget { requested: usize, cap: usize },
    #[error("colour k = {0} is out of range (need k ≥ 2)")]
    Colour(usize),
    #[error(transparent)]
    Network(#[from] NetworkError),
    #[error("W-tangle map is singular: {0}")]
    Singular(#[from] ScalarError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_gram_entries: usize,
    pub max_boxes: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_gram_entries: 10_000, max_boxes: 8 }
    }
}

impl Budget {
    pub fn check_entries(&self, requested: usize) -> Result<(), PairingError> {
        if requested > self.max_gram_entries {
            return Err(PairingError::Budget { requested, cap: self.max_gram_entries });
        }
        Ok(())
    }
}

/// The standard basis e_i and the basis e^i dual to it under δ⁻²φ.
#[derive(Debug, Clone, PartialEq)]
pub struct DualBasisPair<F> {
    pub primal: Vec<Element<F>>,
    pub dual: Vec<Element<F>>,
}

pub fn dual_bases<F: Field>(h: &HopfAlgebra<F>) -> DualBasisPair<F> {
    DualBasisPair { primal: (0..h.dim()).map(|i| h.basis(i)).collect(), dual: h.dual_basis() }
}

/// Multi-indices in I^len, first index most significant.
pub fn multi_index(mut code: usize, n: usize, len: usize) -> Vec<usize> {
    let mut v = vec![0; len];
    for slot in v.iter_mut().rev() {
        *slot = code % n;
        code /= n;
    }
    v
}

/// X_k: boxes on (0,1), (1,2), …, (k−2,k−1) from top to bottom; slot `x{t}`
/// sits on positions (t, t+1).
pub fn x_k(k: usize) -> Tangle {
    let parts: Vec<Tangle> = (0..k - 1).map(|t| Tangle::standard_box(k, t, format!("x{t}"))).collect();
    Tangle::stack(&parts)
}

/// X_k*: the mirror image of X_k; slot `y{t}` sits on positions (t, t+1).
pub fn x_k_star(k: usize) -> Tangle {
    let parts: Vec<Tangle> = (0..k - 1).rev().map(|t| Tangle::reflected_box(k, t, format!("y{t}"))).collect();
    Tangle::stack(&parts)
}

/// Labels for the slots of `t`, looked up by the position encoded in the
/// slot name (`x{t}` / `y{t}`) or in order for other names.
fn slot_labels<F: Field>(t: &Tangle, by_position: &[Element<F>], prefix: char) -> Vec<Element<F>> {
    t.slots
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let pos = s.strip_prefix(prefix).and_then(|r| r.parse::<usize>().ok()).unwrap_or(i);
            by_position[pos].clone()
        })
        .collect()
}

/// The closed network Tr(k)[X_k(·) X_k*(·)] with open slots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairingTemplate {
    pub k: usize,
    pub tangle: Tangle,
}

impl PairingTemplate {
    pub fn new(k: usize) -> Result<Self, PairingError> {
        if k < 2 {
            return Err(PairingError::Colour(k));
        }
        Ok(PairingTemplate { k, tangle: x_k(k).compose(&x_k_star(k)) })
    }

    /// The network with `upper[t]` in the X_k slot on (t,t+1) and `lower[t]`
    /// in the X_k* slot on (t,t+1).
    pub fn network<F: Field>(&self, upper: &[Element<F>], lower: &[Element<F>]) -> LabeledNetwork<F> {
        let mut labels = Vec::with_capacity(self.tangle.slots.len());
        for s in &self.tangle.slots {
            let (side, pos) = s.split_at(1);
            let pos: usize = pos.parse().expect("template slot");
            labels.push(if side == "x" { upper[pos].clone() } else { lower[pos].clone() });
        }
        self.tangle.closed_network(&labels)
    }
}

fn delta_power<F: Field>(h: &HopfAlgebra<F>, k: usize) -> F {
    (0..k).fold(F::one(), |acc, _| acc * h.delta_inv())
}

/// Coordinates in P_k of the element represented by tangle `x` with the given
/// slot labels, along the basis X_k(e_𝐢): the 𝐢-th entry is τ_k(x·X_k*(e^𝐢)).
pub fn coordinates<F: Field>(h: &HopfAlgebra<F>, x: &Tangle, labels: &[Element<F>]) -> Result<Vec<F>, PairingError> {
    let k = x.k;
    let n = h.dim();
    let dual = h.dual_basis();
    let star = x_k_star(k);
    let closed = x.compose(&star);
    let scale = delta_power(h, k);
    let count = n.pow((k - 1) as u32);
    (0..count)
        .map(|code| {
            let idx = multi_index(code, n, k - 1);
            let lower: Vec<Element<F>> = idx.iter().map(|&j| dual[j].clone()).collect();
            let mut all = labels.to_vec();
            all.extend(slot_labels(&star, &lower, 'y'));
            Ok(closed.closed_network(&all).evaluate(h)? * &scale)
        })
        .collect()
}

/// Gram matrix δ^{-k}·Tr(X_k(e_𝐢)·X_k*(e^𝐣)) over I^{k−1} × I^{k−1}.
pub fn gram<F: Field>(h: &HopfAlgebra<F>, k: usize, budget: &Budget) -> Result<Matrix<F>, PairingError> {
    if k < 2 {
        return Err(PairingError::Colour(k));
    }
    let m = h.dim().pow((k - 1) as u32);
    budget.check_entries(m * m)?;
    let x = x_k(k);
    let rows = (0..m)
        .map(|code| {
            let upper: Vec<Element<F>> = multi_index(code, h.dim(), k - 1).iter().map(|&i| h.basis(i)).collect();
            coordinates(h, &x, &slot_labels(&x, &upper, 'x'))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GramReport {
    pub k: usize,
    pub gram_is_identity: bool,
    pub rank: usize,
    pub dim_claim: String,
    pub passed: bool,
}

pub fn gram_report<F: Field>(h: &HopfAlgebra<F>, k: usize, budget: &Budget) -> Result<GramReport, PairingError> {
    let g = gram(h, k, budget)?;
    let rank = g.rank();
    let is_identity = g.is_identity();
    Ok(GramReport {
        k,
        gram_is_identity: is_identity,
        rank,
        dim_claim: "n^{k-1}".into(),
        passed: is_identity && rank == h.dim().pow((k - 1) as u32),
    })
}

/// W: the 3-tangle X₃ viewed as a map P₂ ⊗ P₂ → P₃ (slot `x0` first).
pub fn w_tangle() -> Tangle {
    x_k(3)
}

/// a·e₂·b: a on (0,1), the Jones cup-cap on (1,2), then b on (0,1).
pub fn exchange_w_tangle() -> Tangle {
    let k = 3;
    Tangle::from_strands(
        k,
        vec!["x0".into(), "x1".into()],
        &[
            (End::Port(0, 0), End::Boundary(top(0))),
            (End::Port(0, 1), End::Boundary(top(1))),
            (End::Port(0, 2), End::Boundary(top(2))),
            (End::Port(1, 0), End::Port(0, 3)),
            (End::Port(1, 1), End::Boundary(bottom(k, 2))),
            (End::Port(1, 2), End::Boundary(bottom(k, 1))),
            (End::Port(1, 3), End::Boundary(bottom(k, 0))),
        ],
    )
}

/// Negative control: both boxes stacked on (0,1), i.e. the product a·b in
/// P₂ ⊂ P₃, which cannot reach all of P₃.
pub fn collapsed_w_tangle() -> Tangle {
    Tangle::stack(&[Tangle::standard_box(3, 0, "x0"), Tangle::standard_box(3, 0, "x1")])
}

/// F: one box with p0 at top 0 and p1, p2, p3 at bottom 2, 1, 0, and a cap
/// joining top 1 and top 2. Z_W⁻¹ Z_F (a) = Δ(a).
pub fn f_tangle() -> Tangle {
    let k = 3;
    Tangle::from_strands(
        k,
        vec!["a".into()],
        &[
            (End::Port(0, 0), End::Boundary(top(0))),
            (End::Port(0, 1), End::Boundary(bottom(k, 2))),
            (End::Port(0, 2), End::Boundary(bottom(k, 1))),
            (End::Port(0, 3), End::Boundary(bottom(k, 0))),
            (End::Boundary(top(1)), End::Boundary(top(2))),
        ],
    )
}

/// R₂: the 2-box turned through two quarter turns (* on the right).
pub fn r2_tangle() -> Tangle {
    Tangle::single_box(2, 0, StarCorner::Right, "a")
}

/// Rows indexed by (p, q): coordinates of Z_W(e_p ⊗ e_q) in P₃.
pub fn depth_two_gram_with<F: Field>(h: &HopfAlgebra<F>, w: &Tangle) -> Result<Matrix<F>, PairingError> {
    let n = h.dim();
    let rows =
        (0..n * n).map(|pq| coordinates(h, w, &[h.basis(pq / n), h.basis(pq % n)])).collect::<Result<Vec<_>, _>>()?;
    Ok(Matrix::from_rows(rows))
}

pub fn depth_two_gram<F: Field>(h: &HopfAlgebra<F>) -> Result<Matrix<F>, PairingError> {
    depth_two_gram_with(h, &w_tangle())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapCheck {
    pub name: &'static str,
    /// Pass/fail per basis element.
    pub per_basis: Vec<bool>,
}

impl MapCheck {
    pub fn passed(&self) -> bool {
        self.per_basis.iter().all(|&b| b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub depth_two_rank: usize,
    pub maps: Vec<MapCheck>,
}

impl ReconstructionReport {
    pub fn passed(&self) -> bool {
        self.maps.iter().all(MapCheck::passed)
    }

    pub fn get(&self, name: &str) -> Option<&MapCheck> {
        self.maps.iter().find(|m| m.name == name)
    }
}

/// Δ from the W and F tangles, ε from the closure, S from R₂, each compared
/// entrywise with the input structure maps.
pub fn reconstruct_structure<F: Field>(h: &HopfAlgebra<F>) -> Result<ReconstructionReport, PairingError> {
    let n = h.dim();
    let w = depth_two_gram(h)?;
    let rank = w.rank();
    let wt = w.transpose().inverse()?;
    let f = f_tangle();
    let r2 = r2_tangle();
    let mut coproduct = Vec::with_capacity(n);
    let mut counit = Vec::with_capacity(n);
    let mut antipode = Vec::with_capacity(n);
    for a in 0..n {
        let ea = h.basis(a);
        let target = coordinates(h, &f, std::slice::from_ref(&ea))?;
        let delta: Vec<F> =
            (0..n * n).map(|r| (0..n * n).fold(F::zero(), |acc, c| acc + wt[(r, c)].clone() * &target[c])).collect();
        let mut expected = vec![F::zero(); n * n];
        for (i, j, c) in h.coproduct(&ea) {
            expected[i * n + j] = c;
        }
        coproduct.push(delta == expected);
        let eps = LabeledNetwork::closure(ea.clone()).evaluate(h)? * h.delta_inv();
        counit.push(eps == h.counit(&ea));
        let s = coordinates(h, &r2, std::slice::from_ref(&ea))?;
        antipode.push(s == h.antipode(&ea).coeffs);
    }
    Ok(ReconstructionReport {
        depth_two_rank: rank,
        maps: vec![
            MapCheck { name: "coproduct", per_basis: coproduct },
            MapCheck { name: "counit", per_basis: counit },
            MapCheck { name: "antipode", per_basis: antipode },
        ],
    })
}
