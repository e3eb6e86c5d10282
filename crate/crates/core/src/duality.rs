//! The duality between P(H,δ) and P(H*,δ): generator identities for SF and
//! the partition-function identity Z_N = Z_{N⁻} ∘ F^{⊗g}.

use serde::Serialize;

use crate::hopf::{Element, HopfAlgebra, LawCheck};
use crate::network::{LabeledNetwork, NetworkError};
use crate::scalars::Field;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GeneratorReport {
    pub checks: Vec<LawCheck>,
}

impl GeneratorReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }
}

impl<F: Field> HopfAlgebra<F> {
    /// SF(a) = S_{H*}(F(a)) as an element of H*.
    pub fn sf(&self, a: &Element<F>) -> Element<F> {
        self.dual().antipode(&self.fourier(a).into_element())
    }
}

/// Checks the identities satisfied by the generator map a ↦ SF(a).
pub fn verify_generator_map<F: Field>(h: &HopfAlgebra<F>) -> GeneratorReport {
    let d = h.dual();
    let phi = h.regular_trace().as_element().scale(h.delta_inv());
    let eps = Element::new(h.counit_vector().to_vec());
    let basis: Vec<Element<F>> = (0..h.dim()).map(|i| h.basis(i)).collect();
    let check = |name, passed| LawCheck { name, passed };
    GeneratorReport {
        checks: vec![
            check("SF(1) = δ⁻¹φ", h.sf(h.one()) == phi),
            check("SF(h) = δε", h.sf(h.dual_integral()) == eps.scale(h.delta())),
            check(
                "δ⁻¹SF(a)(h) = ε(a)",
                basis.iter().all(|a| h.sf(a).pair(&h.dual_integral().coeffs) * h.delta_inv() == h.counit(a)),
            ),
            check("F(a)(1) = δ⁻¹φ(a)", basis.iter().all(|a| h.fourier(a).eval(h.one()) == h.loop_trace(a))),
            check(
                "SFS = F",
                basis
                    .iter()
                    .all(|a| d.antipode(&h.fourier(&h.antipode(a)).into_element()) == h.fourier(a).into_element()),
            ),
        ],
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DualityOutcome<F> {
    pub lhs: F,
    pub rhs: F,
}

impl<F: Field> DualityOutcome<F> {
    pub fn equal(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The network over H* obtained from `n` by one minus transform and
/// relabelling every box by F.
pub fn dual_network<F: Field>(h: &HopfAlgebra<F>, n: &LabeledNetwork<F>) -> LabeledNetwork<F> {
    let mut m = n.minus_transform();
    for a in m.boxes.values_mut() {
        *a = h.fourier(a).into_element();
    }
    m
}

/// Evaluates both sides of Z_N = Z_{N⁻} ∘ F^{⊗g}.
pub fn verify_duality_on_network<F: Field>(
    h: &HopfAlgebra<F>,
    n: &LabeledNetwork<F>,
) -> Result<DualityOutcome<F>, NetworkError> {
    verify_duality_with(h, h.dual(), n)
}

/// As [`verify_duality_on_network`] with an explicitly supplied dual.
pub fn verify_duality_with<F: Field>(
    h: &HopfAlgebra<F>,
    dual: &HopfAlgebra<F>,
    n: &LabeledNetwork<F>,
) -> Result<DualityOutcome<F>, NetworkError> {
    let lhs = n.evaluate(h)?;
    let rhs = dual_network(h, n).evaluate(dual)?;
    Ok(DualityOutcome { lhs, rhs })
}
