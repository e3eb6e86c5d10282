//! Fourier transform F: H → H*, F(a) = δ⁻¹φ(a ·).

use serde::Serialize;

use super::{Element, Functional, HopfAlgebra};
use crate::linalg::Matrix;
use crate::scalars::Field;

impl<F: Field> HopfAlgebra<F> {
    /// F(a): the functional b ↦ δ⁻¹φ(ab).
    pub fn fourier(&self, a: &Element<F>) -> Functional<F> {
        Functional::new((0..self.dim()).map(|j| self.loop_trace(&self.mul(a, &self.basis(j)))).collect())
    }

    /// Fourier transform of H* applied to ψ, landing in H** = H.
    pub fn fourier_dual(&self, psi: &Functional<F>) -> Element<F> {
        self.dual().fourier(&psi.as_element()).into_element()
    }
}

/// Matrix of F_H : H → H* with column j = F(e_j).
pub fn fourier_matrix<F: Field>(h: &HopfAlgebra<F>) -> Matrix<F> {
    let n = h.dim();
    let cols: Vec<Functional<F>> = (0..n).map(|j| h.fourier(&h.basis(j))).collect();
    Matrix::from_fn(n, n, |r, c| cols[c].coeffs[r].clone())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LawCheck {
    pub name: &'static str,
    pub passed: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FourierReport {
    pub laws: Vec<LawCheck>,
}

impl FourierReport {
    pub fn all_passed(&self) -> bool {
        self.laws.iter().all(|l| l.passed)
    }

    pub fn get(&self, name: &str) -> Option<&LawCheck> {
        self.laws.iter().find(|l| l.name == name)
    }
}

/// F² = S, FS = SF, F(SF) = id = (SF)F, SF(1) = δ⁻¹φ and SF(h) = δε,
/// using the dual of `h`.
pub fn verify_fourier_laws<F: Field>(h: &HopfAlgebra<F>) -> FourierReport {
    verify_fourier_laws_with(h, h.dual())
}

/// Same laws with an explicitly supplied dual; `dual` must carry the
/// transposed constants of `h` (its δ may differ, which the laws detect).
pub fn verify_fourier_laws_with<F: Field>(h: &HopfAlgebra<F>, dual: &HopfAlgebra<F>) -> FourierReport {
    let n = h.dim();
    let f = fourier_matrix(h);
    let f_dual = fourier_matrix(dual);
    let s = h.antipode_matrix();
    let s_dual = dual.antipode_matrix();
    let id = Matrix::identity(n);
    let sf = s_dual.mul(&f);
    let law = |name, passed| LawCheck { name, passed };
    let apply = |m: &Matrix<F>, v: &[F]| -> Vec<F> {
        (0..n).map(|r| (0..n).fold(F::zero(), |acc, c| acc + m[(r, c)].clone() * &v[c])).collect()
    };
    let phi_scaled: Vec<F> = h.regular_trace().coeffs.iter().map(|x| x.clone() * h.delta_inv()).collect();
    let eps_scaled: Vec<F> = h.counit_vector().iter().map(|x| x.clone() * h.delta()).collect();
    FourierReport {
        laws: vec![
            law("F^2 = S", f_dual.mul(&f) == s && f.mul(&f_dual) == s_dual),
            law("FS = SF", f.mul(&s) == s_dual.mul(&f) && f_dual.mul(&s_dual) == s.mul(&f_dual)),
            law("F(SF) = id", f_dual.mul(&sf) == id),
            law("(SF)F = id", sf.mul(&f_dual) == id),
            law("SF(1) = δ⁻¹φ", apply(&sf, &h.one().coeffs) == phi_scaled),
            law("SF(h) = δε", apply(&sf, &h.dual_integral().coeffs) == eps_scaled),
        ],
    }
}
