use std::collections::BTreeMap;

use super::{Element, HopfAlgebra};
use crate::scalars::Field;

/// Iterated coproduct Δ_k(a) as a sum of coefficient · (e_{i₁}⊗⋯⊗e_{i_k}).
///
/// Terms are kept sorted by index tuple with duplicates merged and zeros
/// dropped, so two expansions compare equal iff they are equal tensors.
#[derive(Debug, Clone, PartialEq)]
pub struct SweedlerExpansion<F> {
    pub order: usize,
    pub terms: Vec<(F, Vec<usize>)>,
}

impl<F: Field> SweedlerExpansion<F> {
    fn normalized(order: usize, terms: impl IntoIterator<Item = (F, Vec<usize>)>) -> Self {
        let mut merged: BTreeMap<Vec<usize>, F> = BTreeMap::new();
        for (c, idx) in terms {
            *merged.entry(idx).or_insert_with(F::zero) += &c;
        }
        SweedlerExpansion {
            order,
            terms: merged.into_iter().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (c, i)).collect(),
        }
    }

    /// For order 0 the expansion is the scalar ε(a).
    pub fn scalar(&self) -> Option<F> {
        (self.order == 0).then(|| self.terms.first().map_or_else(F::zero, |t| t.0.clone()))
    }
}

impl<F: Field> HopfAlgebra<F> {
    /// Δ_k(a), expanding the last tensor factor at each step.
    pub fn sweedler_expand(&self, a: &Element<F>, k: usize) -> SweedlerExpansion<F> {
        self.sweedler_expand_at(a, k, |len| len - 1)
    }

    /// Δ_k(a), expanding the first tensor factor at each step. Coassociativity
    /// makes this agree with [`HopfAlgebra::sweedler_expand`].
    pub fn sweedler_expand_left(&self, a: &Element<F>, k: usize) -> SweedlerExpansion<F> {
        self.sweedler_expand_at(a, k, |_| 0)
    }

    fn sweedler_expand_at(&self, a: &Element<F>, k: usize, slot: impl Fn(usize) -> usize) -> SweedlerExpansion<F> {
        if k == 0 {
            return SweedlerExpansion::normalized(0, [(self.counit(a), vec![])]);
        }
        let mut terms: Vec<(F, Vec<usize>)> = a.nonzero().map(|(i, c)| (c.clone(), vec![i])).collect();
        for _ in 1..k {
            let mut next = Vec::new();
            for (c, idx) in &terms {
                let s = slot(idx.len());
                for (p, q, d) in self.comult_terms(idx[s]) {
                    let mut new_idx = Vec::with_capacity(idx.len() + 1);
                    new_idx.extend_from_slice(&idx[..s]);
                    new_idx.push(*p);
                    new_idx.push(*q);
                    new_idx.extend_from_slice(&idx[s + 1..]);
                    next.push((c.clone() * d, new_idx));
                }
            }
            terms = SweedlerExpansion::normalized(0, next).terms;
        }
        SweedlerExpansion::normalized(k, terms)
    }
}
