//! The Hopf identities behind the invariance of the state sum under the
//! (C), (T), (E) and (A) moves, checked on basis elements.

use serde::Serialize;

use super::{Element, HopfAlgebra};
use crate::scalars::Field;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub passed: bool,
    /// Offending basis pairs `(a, b)`; single-element identities use `b = a`.
    pub failures: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &'static str, failures: Vec<(usize, usize)>) -> IdentityCheck {
    IdentityCheck { name, passed: failures.is_empty(), failures }
}

struct Tensor<F> {
    n: usize,
    data: Vec<F>,
}

impl<F: Field> Tensor<F> {
    fn new(n: usize, rank: u32) -> Self {
        Tensor { n, data: vec![F::zero(); n.pow(rank)] }
    }

    /// Adds c · (x ⊗ y ⊗ ...) for vectors given as elements.
    fn add_product(&mut self, c: &F, factors: &[&Element<F>]) {
        let mut partial: Vec<(usize, F)> = vec![(0, c.clone())];
        for f in factors {
            let mut next = Vec::new();
            for (pos, coef) in &partial {
                for (i, x) in f.nonzero() {
                    next.push((pos * self.n + i, coef.clone() * x));
                }
            }
            partial = next;
        }
        for (pos, coef) in partial {
            self.data[pos] += &coef;
        }
    }
}

/// Checks, for every basis element (or pair), the identities
///
/// * (C) a₁S(a₂) = ε(a)1
/// * (T) a₁φ(S(a₂)) = φ(a)1
/// * (E) a₁ ⊗ b₁ ⊗ S(b₂)S(a₂) = a₁ ⊗ S(a₂)(a₃b₁) ⊗ S(a₄b₂)
/// * (A) (Sa)₁ ⊗ S((Sa)₂) = S(a₂) ⊗ a₁
pub fn verify_relation_identities<F: Field>(h: &HopfAlgebra<F>) -> IdentityReport {
    let n = h.dim();
    let basis: Vec<Element<F>> = (0..n).map(|i| h.basis(i)).collect();
    let s_basis: Vec<Element<F>> = basis.iter().map(|e| h.antipode(e)).collect();

    let mut c_fail = Vec::new();
    let mut t_fail = Vec::new();
    let mut a_fail = Vec::new();
    for a in 0..n {
        let mut c_lhs = h.zero();
        let mut t_lhs = h.zero();
        for (i, j, c) in h.comult_terms(a) {
            c_lhs = c_lhs.add(&h.mul(&basis[*i], &s_basis[*j]).scale(c));
            t_lhs = t_lhs.add(&basis[*i].scale(&(c.clone() * &h.phi(&s_basis[*j]))));
        }
        if c_lhs != h.one().scale(&h.counit(&basis[a])) {
            c_fail.push((a, a));
        }
        if t_lhs != h.one().scale(&h.phi(&basis[a])) {
            t_fail.push((a, a));
        }

        let mut lhs = Tensor::new(n, 2);
        for (i, j, c) in h.coproduct(&s_basis[a]) {
            lhs.add_product(&c, &[&basis[i], &s_basis[j]]);
        }
        let mut rhs = Tensor::new(n, 2);
        for (i, j, c) in h.comult_terms(a) {
            rhs.add_product(c, &[&s_basis[*j], &basis[*i]]);
        }
        if lhs.data != rhs.data {
            a_fail.push((a, a));
        }
    }

    let mut e_fail = Vec::new();
    for a in 0..n {
        let delta3 = h.sweedler_expand(&basis[a], 3);
        for b in 0..n {
            let mut lhs = Tensor::new(n, 3);
            for (i, j, c) in h.comult_terms(a) {
                for (p, q, d) in h.comult_terms(b) {
                    let tail = h.mul(&s_basis[*q], &s_basis[*j]);
                    lhs.add_product(&(c.clone() * d), &[&basis[*i], &basis[*p], &tail]);
                }
            }
            let mut rhs = Tensor::new(n, 3);
            for (c, idx) in &delta3.terms {
                let (i1, i2, i3) = (idx[0], idx[1], idx[2]);
                let x = h.mul(&basis[i3], &basis[b]);
                for (p, q, d) in h.coproduct(&x) {
                    let mid = h.mul(&s_basis[i2], &basis[p]);
                    rhs.add_product(&(c.clone() * &d), &[&basis[i1], &mid, &s_basis[q]]);
                }
            }
            if lhs.data != rhs.data {
                e_fail.push((a, b));
            }
        }
    }

    IdentityReport { checks: vec![check("C", c_fail), check("T", t_fail), check("E", e_fail), check("A", a_fail)] }
}

/// The integral laws: ε(h) = φ(h) = φ(1) = n and hx = xh = ε(x)h on basis
/// elements x.
pub fn verify_integral_laws<F: Field>(h: &HopfAlgebra<F>) -> IdentityReport {
    let n = h.dim();
    let dim = F::from_i64(n as i64);
    let int = h.dual_integral();
    let scalar = |name, ok: bool| check(name, if ok { vec![] } else { vec![(0, 0)] });
    let mut left = Vec::new();
    let mut right = Vec::new();
    for x in 0..n {
        let target = int.scale(&h.counit(&h.basis(x)));
        if h.mul(int, &h.basis(x)) != target {
            left.push((x, x));
        }
        if h.mul(&h.basis(x), int) != target {
            right.push((x, x));
        }
    }
    IdentityReport {
        checks: vec![
            scalar("ε(h) = n", h.counit(int) == dim),
            scalar("φ(h) = n", h.phi(int) == dim),
            scalar("φ(1) = n", h.phi(h.one()) == dim),
            check("hx = ε(x)h", left),
            check("xh = ε(x)h", right),
        ],
    }
}
