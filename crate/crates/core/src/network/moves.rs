use std::fmt;
use std::str::FromStr;

use super::{LabeledNetwork, NetworkError, NetworkSum, Pass, Side};
use crate::hopf::HopfAlgebra;
use crate::scalars::Field;

/// The defining relations, each read as a left-to-right rewrite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    /// Remove a free loop, coefficient ×δ.
    M,
    /// Erase a box labelled 1.
    U,
    /// Replace a box labelled h by a cup-cap, coefficient ×δ.
    I,
    /// Cancel adjacent (other b, star b) passes, coefficient ×ε(b).
    C,
    /// Remove a loop holding a single pass of b, coefficient ×δ⁻¹φ(b).
    T,
    /// Exchange: adjacent (other a, other b) become a sum over Δ(a).
    E,
    /// Swap the sides of a box and apply the antipode to its label.
    A,
}

impl Move {
    pub const ALL: [Move; 7] = [Move::M, Move::U, Move::I, Move::C, Move::T, Move::E, Move::A];
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Move {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Move::ALL
            .into_iter()
            .find(|m| m.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown move {s:?} (expected one of M U I C T E A)"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Locus {
    Loop(usize),
    Box(String),
    /// Passes at `position` and `position + 1` (cyclically) of a loop.
    Adjacent {
        loop_idx: usize,
        position: usize,
    },
}

/// Where a move applies: a term of a network sum and a place in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Site {
    pub term: usize,
    pub locus: Locus,
}

fn adjacent<F>(n: &LabeledNetwork<F>, loop_idx: usize, position: usize) -> Option<(&Pass, &Pass)> {
    let lp = n.loops.get(loop_idx)?;
    if position >= lp.len() {
        return None;
    }
    Some((&lp[position], &lp[(position + 1) % lp.len()]))
}

fn sites_in<F: Field>(n: &LabeledNetwork<F>, mv: Move, h: &HopfAlgebra<F>) -> Vec<Locus> {
    let boxes_where = |pred: &dyn Fn(&crate::hopf::Element<F>) -> bool| {
        n.boxes.iter().filter(|(_, a)| pred(a)).map(|(id, _)| Locus::Box(id.clone())).collect::<Vec<_>>()
    };
    let adjacent_where = |pred: &dyn Fn(&Pass, &Pass) -> bool| {
        let mut out = Vec::new();
        for (l, lp) in n.loops.iter().enumerate() {
            for i in 0..lp.len() {
                let (p, q) = (&lp[i], &lp[(i + 1) % lp.len()]);
                if pred(p, q) {
                    out.push(Locus::Adjacent { loop_idx: l, position: i });
                }
            }
        }
        out
    };
    match mv {
        Move::M => (0..n.loops.len()).filter(|&l| n.loops[l].is_empty()).map(Locus::Loop).collect(),
        Move::T => (0..n.loops.len()).filter(|&l| n.loops[l].len() == 1).map(Locus::Loop).collect(),
        Move::U => boxes_where(&|a| a == h.one()),
        Move::I => boxes_where(&|a| a == h.dual_integral()),
        Move::A => boxes_where(&|_| true),
        Move::C => adjacent_where(&|p, q| p.box_id == q.box_id && p.side == Side::Other && q.side == Side::Star),
        Move::E => adjacent_where(&|p, q| p.box_id != q.box_id && p.side == Side::Other && q.side == Side::Other),
    }
}

/// Every site at which `mv` applies in `x`.
pub fn enumerate_sites<F: Field>(x: &NetworkSum<F>, mv: Move, h: &HopfAlgebra<F>) -> Vec<Site> {
    x.terms
        .iter()
        .enumerate()
        .flat_map(|(term, (_, n))| sites_in(n, mv, h).into_iter().map(move |locus| Site { term, locus }))
        .collect()
}

fn remove_pass<F>(n: &mut LabeledNetwork<F>, pass: &Pass) {
    for lp in &mut n.loops {
        if let Some(i) = lp.iter().position(|p| p == pass) {
            lp.remove(i);
            return;
        }
    }
}

fn rotated(lp: &[Pass], start: usize) -> Vec<Pass> {
    lp[start..].iter().chain(&lp[..start]).cloned().collect()
}

fn rewrite<F: Field>(
    n: &LabeledNetwork<F>,
    mv: Move,
    locus: &Locus,
    h: &HopfAlgebra<F>,
) -> Result<Vec<(F, LabeledNetwork<F>)>, NetworkError> {
    let mismatch = |msg: &str| NetworkError::Pattern(mv, msg.to_string());
    let box_label = |id: &str| n.boxes.get(id).ok_or_else(|| NetworkError::UnknownBox(id.to_string()));
    let mut out = n.clone();
    match (mv, locus) {
        (Move::M, Locus::Loop(l)) => {
            if n.loops.get(*l).is_none_or(|lp| !lp.is_empty()) {
                return Err(mismatch("loop is not free"));
            }
            out.loops.remove(*l);
            Ok(vec![(h.delta().clone(), out)])
        }
        (Move::U, Locus::Box(id)) => {
            if box_label(id)? != h.one() {
                return Err(mismatch("box is not labelled 1"));
            }
            remove_pass(&mut out, &Pass::star(id.as_str()));
            remove_pass(&mut out, &Pass::other(id.as_str()));
            out.boxes.remove(id);
            Ok(vec![(F::one(), out)])
        }
        (Move::I, Locus::Box(id)) => {
            if box_label(id)? != h.dual_integral() {
                return Err(mismatch("box is not labelled h"));
            }
            let star = Pass::star(id.as_str());
            let other = Pass::other(id.as_str());
            let (ls, is) = n.locate(&star).ok_or_else(|| mismatch("star pass not found"))?;
            let (lo, io) = n.locate(&other).ok_or_else(|| mismatch("other pass not found"))?;
            let mut new_loops = Vec::new();
            if ls == lo {
                let lp = rotated(&n.loops[ls], is);
                let k = lp.iter().position(|p| *p == other).expect("same loop");
                new_loops.push(lp[1..k].to_vec());
                new_loops.push(lp[k + 1..].to_vec());
            } else {
                let mut merged = rotated(&n.loops[ls], is)[1..].to_vec();
                merged.extend_from_slice(&rotated(&n.loops[lo], io)[1..]);
                new_loops.push(merged);
            }
            out.loops =
                n.loops.iter().enumerate().filter(|&(l, _)| l != ls && l != lo).map(|(_, lp)| lp.clone()).collect();
            out.loops.extend(new_loops);
            out.boxes.remove(id);
            Ok(vec![(h.delta().clone(), out)])
        }
        (Move::C, Locus::Adjacent { loop_idx, position }) => {
            let (p, q) = adjacent(n, *loop_idx, *position).ok_or_else(|| mismatch("no such position"))?;
            if p.box_id != q.box_id || p.side != Side::Other || q.side != Side::Star {
                return Err(mismatch("passes are not (other b, star b)"));
            }
            let id = p.box_id.clone();
            let eps = h.counit(box_label(&id)?);
            remove_pass(&mut out, &Pass::star(id.as_str()));
            remove_pass(&mut out, &Pass::other(id.as_str()));
            out.boxes.remove(&id);
            Ok(vec![(eps, out)])
        }
        (Move::T, Locus::Loop(l)) => {
            let lp = n.loops.get(*l).ok_or_else(|| mismatch("no such loop"))?;
            if lp.len() != 1 {
                return Err(mismatch("loop does not hold exactly one pass"));
            }
            let p = lp[0].clone();
            let value = h.loop_trace(box_label(&p.box_id)?);
            out.loops.remove(*l);
            remove_pass(&mut out, &Pass::new(p.box_id.as_str(), p.side.flipped()));
            out.boxes.remove(&p.box_id);
            Ok(vec![(value, out)])
        }
        (Move::A, Locus::Box(id)) => {
            let s = h.antipode(box_label(id)?);
            for p in out.loops.iter_mut().flatten() {
                if p.box_id == *id {
                    p.side = p.side.flipped();
                }
            }
            out.boxes.insert(id.clone(), s);
            Ok(vec![(F::one(), out)])
        }
        (Move::E, Locus::Adjacent { loop_idx, position }) => {
            let (p, q) = adjacent(n, *loop_idx, *position).ok_or_else(|| mismatch("no such position"))?;
            if p.box_id == q.box_id || p.side != Side::Other || q.side != Side::Other {
                return Err(mismatch("passes are not (other a, other b) with a ≠ b"));
            }
            let (a, b) = (p.box_id.clone(), q.box_id.clone());
            let (la, lb) = (box_label(&a)?, box_label(&b)?);
            let a_other = Pass::other(a.as_str());
            let b_star = Pass::star(b.as_str());
            let mut wired = n.clone();
            wired.loops[*loop_idx].remove(*position);
            let (l, i) = wired.locate(&b_star).expect("valid network");
            wired.loops[l].insert(i + 1, a_other);
            Ok(h.coproduct(la)
                .into_iter()
                .map(|(i, j, c)| {
                    let mut t = wired.clone();
                    t.boxes.insert(a.clone(), h.basis(i));
                    t.boxes.insert(b.clone(), h.mul(&h.basis(j), lb));
                    (c, t)
                })
                .collect())
        }
        _ => Err(mismatch("site kind does not fit this move")),
    }
}

/// Rewrites one term of `x` at `site`; all other terms are kept as they are.
pub fn apply_move<F: Field>(
    x: &NetworkSum<F>,
    mv: Move,
    site: &Site,
    h: &HopfAlgebra<F>,
) -> Result<NetworkSum<F>, NetworkError> {
    let (coef, n) = x.terms.get(site.term).ok_or(NetworkError::NoSuchTerm(site.term))?;
    let replaced = rewrite(n, mv, &site.locus, h)?;
    let mut terms = Vec::with_capacity(x.terms.len() + replaced.len());
    terms.extend(x.terms[..site.term].iter().cloned());
    terms.extend(replaced.into_iter().map(|(c, t)| (coef.clone() * &c, t)));
    terms.extend(x.terms[site.term + 1..].iter().cloned());
    Ok(NetworkSum { terms })
}

impl<F: Field> NetworkSum<F> {
    pub fn apply_move(&self, mv: Move, site: &Site, h: &HopfAlgebra<F>) -> Result<NetworkSum<F>, NetworkError> {
        apply_move(self, mv, site, h)
    }
}
