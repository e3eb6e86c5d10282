//! Finite-dimensional Hopf algebras given by structure constants.
//!
//! Structure constants are rational; all axioms are checked over ℚ before an
//! algebra is handed out. Quantities that involve δ (the Fourier transform,
//! normalized traces) are computed in the coefficient field `F`.

mod element;
mod fourier;
mod identities;
mod sweedler;

use std::sync::OnceLock;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::linalg::Matrix;
use crate::scalars::{DeltaSign, Field, ScalarError};

pub use element::{Element, Functional};
pub use fourier::{fourier_matrix, verify_fourier_laws, verify_fourier_laws_with, FourierReport, LawCheck};
pub use identities::{verify_integral_laws, verify_relation_identities, IdentityCheck, IdentityReport};
pub use sweedler::SweedlerExpansion;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HopfError {
    #[error("inconsistent structure constants: {0}")]
    Shape(String),
    #[error("axiom `{axiom}` fails: {detail}")]
    Axiom { axiom: &'static str, detail: String },
    #[error("not a group: `{axiom}` fails: {detail}")]
    NotAGroup { axiom: &'static str, detail: String },
    #[error("not semisimple over ℚ(δ): the φ-Gram matrix is singular")]
    NotSemisimple,
    #[error("not cosemisimple over ℚ(δ): the h-Gram matrix of the dual is singular")]
    NotCosemisimple,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

impl HopfError {
    /// Short name of the failed check, used in reports and CLI diagnostics.
    pub fn check_name(&self) -> &'static str {
        match self {
            HopfError::Shape(_) => "shape",
            HopfError::Axiom { axiom, .. } | HopfError::NotAGroup { axiom, .. } => axiom,
            HopfError::NotSemisimple => "semisimplicity",
            HopfError::NotCosemisimple => "cosemisimplicity",
            HopfError::Scalar(_) => "scalar",
        }
    }
}

/// Checks run on structure constants, in the order they are tried.
pub const AXIOMS: [&str; 10] = [
    "associativity",
    "unit",
    "coassociativity",
    "counit",
    "comultiplicativity",
    "counit multiplicativity",
    "antipode",
    "involutive antipode",
    "semisimplicity",
    "cosemisimplicity",
];

type Tensor3 = Vec<Vec<Vec<BigRational>>>;

/// Rational structure constants, row-major, indices in basis order.
///
/// * `mult[i][j][k]`: coefficient of e_k in e_i·e_j
/// * `comult[k][i][j]`: coefficient of e_i⊗e_j in Δ(e_k)
/// * `antipode[i][j]`: coefficient of e_j in S(e_i)
#[derive(Debug, Clone, PartialEq)]
pub struct HopfConstants {
    pub basis: Vec<String>,
    pub mult: Tensor3,
    pub unit: Vec<BigRational>,
    pub comult: Tensor3,
    pub counit: Vec<BigRational>,
    pub antipode: Vec<Vec<BigRational>>,
}

impl HopfConstants {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    fn check_shape(&self) -> Result<(), HopfError> {
        let n = self.dim();
        if n == 0 {
            return Err(HopfError::Shape("empty basis".into()));
        }
        let cube = |t: &Tensor3, name: &str| -> Result<(), HopfError> {
            if t.len() != n || t.iter().any(|m| m.len() != n || m.iter().any(|r| r.len() != n)) {
                return Err(HopfError::Shape(format!("{name} must be {n}x{n}x{n}")));
            }
            Ok(())
        };
        cube(&self.mult, "mult")?;
        cube(&self.comult, "comult")?;
        if self.unit.len() != n || self.counit.len() != n {
            return Err(HopfError::Shape(format!("unit and counit must have length {n}")));
        }
        if self.antipode.len() != n || self.antipode.iter().any(|r| r.len() != n) {
            return Err(HopfError::Shape(format!("antipode must be {n}x{n}")));
        }
        Ok(())
    }

    /// Constants of H*, written against the dual basis.
    pub fn transposed(&self) -> HopfConstants {
        let n = self.dim();
        HopfConstants {
            basis: self
                .basis
                .iter()
                .map(|b| b.strip_prefix("δ_").map_or_else(|| format!("δ_{b}"), str::to_string))
                .collect(),
            mult: (0..n)
                .map(|i| (0..n).map(|j| (0..n).map(|k| self.comult[k][i][j].clone()).collect()).collect())
                .collect(),
            unit: self.counit.clone(),
            comult: (0..n)
                .map(|k| (0..n).map(|i| (0..n).map(|j| self.mult[i][j][k].clone()).collect()).collect())
                .collect(),
            counit: self.unit.clone(),
            antipode: (0..n).map(|i| (0..n).map(|j| self.antipode[j][i].clone()).collect()).collect(),
        }
    }

    /// Group algebra ℚ[G] from a multiplication table `table[i][j] = index of g_i g_j`.
    pub fn group_algebra(table: &[Vec<usize>], names: Option<Vec<String>>) -> Result<HopfConstants, HopfError> {
        let n = table.len();
        let fail = |axiom, detail: String| Err(HopfError::NotAGroup { axiom, detail });
        if n == 0 {
            return fail("closure", "empty table".into());
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return fail("closure", format!("row {i} has length {} (expected {n})", row.len()));
            }
            if let Some(&bad) = row.iter().find(|&&v| v >= n) {
                return fail("closure", format!("entry {bad} in row {i} is out of range"));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return fail("associativity", format!("(g{a}·g{b})·g{c} ≠ g{a}·(g{b}·g{c})"));
                    }
                }
            }
        }
        let Some(e) = (0..n).find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g)) else {
            return fail("identity", "no two-sided identity element".into());
        };
        let mut inverse = vec![0; n];
        for g in 0..n {
            match (0..n).find(|&x| table[g][x] == e && table[x][g] == e) {
                Some(x) => inverse[g] = x,
                None => return fail("inverses", format!("g{g} has no inverse")),
            }
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(v) => return Err(HopfError::Shape(format!("{} names for {n} elements", v.len()))),
            None => (0..n).map(|i| format!("g{i}")).collect(),
        };
        let zero = BigRational::zero;
        let one = BigRational::one;
        let kron = |a: usize, b: usize| if a == b { one() } else { zero() };
        Ok(HopfConstants {
            basis: names,
            mult: (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| kron(table[i][j], k)).collect()).collect()).collect(),
            unit: (0..n).map(|k| kron(e, k)).collect(),
            comult: (0..n)
                .map(|k| {
                    (0..n).map(|i| (0..n).map(|j| if i == k && j == k { one() } else { zero() }).collect()).collect()
                })
                .collect(),
            counit: vec![one(); n],
            antipode: (0..n).map(|i| (0..n).map(|j| kron(inverse[i], j)).collect()).collect(),
        })
    }
}

/// Sparse view of a rational tensor, used for all axiom checks.
struct Sparse {
    n: usize,
    // mult[i][j] = [(k, c)]
    mult: Vec<Vec<Vec<(usize, BigRational)>>>,
    // comult[k] = [(i, j, c)]
    comult: Vec<Vec<(usize, usize, BigRational)>>,
    // antipode[i] = [(j, c)]
    antipode: Vec<Vec<(usize, BigRational)>>,
}

impl Sparse {
    fn new(c: &HopfConstants) -> Self {
        let n = c.dim();
        let nz = |v: &Vec<BigRational>| -> Vec<(usize, BigRational)> {
            v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(k, x)| (k, x.clone())).collect()
        };
        Sparse {
            n,
            mult: c.mult.iter().map(|row| row.iter().map(nz).collect()).collect(),
            comult: c
                .comult
                .iter()
                .map(|m| {
                    let mut out = Vec::new();
                    for (i, row) in m.iter().enumerate() {
                        for (j, x) in row.iter().enumerate() {
                            if !x.is_zero() {
                                out.push((i, j, x.clone()));
                            }
                        }
                    }
                    out
                })
                .collect(),
            antipode: c.antipode.iter().map(nz).collect(),
        }
    }

    fn mul_vec(&self, a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.n];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let xy = x * y;
                for (k, c) in &self.mult[i][j] {
                    out[*k] += &xy * c;
                }
            }
        }
        out
    }

    fn basis(&self, i: usize) -> Vec<BigRational> {
        let mut v = vec![BigRational::zero(); self.n];
        v[i] = BigRational::one();
        v
    }

    fn antipode_vec(&self, a: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.n];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, c) in &self.antipode[i] {
                out[*j] += x * c;
            }
        }
        out
    }
}

fn fail(axiom: &'static str, detail: String) -> Result<(), HopfError> {
    Err(HopfError::Axiom { axiom, detail })
}

fn verify_axioms(c: &HopfConstants) -> Result<(), HopfError> {
    c.check_shape()?;
    let sp = Sparse::new(c);
    let n = c.dim();
    let zero = BigRational::zero();

    // associativity
    for i in 0..n {
        for j in 0..n {
            let ij = sp.mul_vec(&sp.basis(i), &sp.basis(j));
            for k in 0..n {
                let left = sp.mul_vec(&ij, &sp.basis(k));
                let jk = sp.mul_vec(&sp.basis(j), &sp.basis(k));
                let right = sp.mul_vec(&sp.basis(i), &jk);
                if left != right {
                    return fail("associativity", format!("(e{i}·e{j})·e{k} ≠ e{i}·(e{j}·e{k})"));
                }
            }
        }
    }
    // unit
    for j in 0..n {
        let e = sp.basis(j);
        if sp.mul_vec(&c.unit, &e) != e || sp.mul_vec(&e, &c.unit) != e {
            return fail("unit", format!("1·e{j} or e{j}·1 differs from e{j}"));
        }
    }
    // coassociativity: (Δ⊗id)Δ = (id⊗Δ)Δ
    for k in 0..n {
        let mut left = vec![zero.clone(); n * n * n];
        let mut right = vec![zero.clone(); n * n * n];
        for (l, r, x) in &sp.comult[k] {
            for (p, q, y) in &sp.comult[*l] {
                left[(p * n + q) * n + r] += x * y;
            }
        }
        for (p, l, x) in &sp.comult[k] {
            for (q, r, y) in &sp.comult[*l] {
                right[(p * n + q) * n + r] += x * y;
            }
        }
        if left != right {
            return fail("coassociativity", format!("(Δ⊗id)Δ(e{k}) ≠ (id⊗Δ)Δ(e{k})"));
        }
    }
    // counit
    for k in 0..n {
        let mut left = vec![zero.clone(); n];
        let mut right = vec![zero.clone(); n];
        for (i, j, x) in &sp.comult[k] {
            left[*j] += &c.counit[*i] * x;
            right[*i] += &c.counit[*j] * x;
        }
        let e = sp.basis(k);
        if left != e || right != e {
            return fail("counit", format!("(ε⊗id)Δ(e{k}) or (id⊗ε)Δ(e{k}) differs from e{k}"));
        }
    }
    // Δ and ε are algebra maps
    let coproduct_of = |v: &[BigRational]| -> Vec<BigRational> {
        let mut out = vec![zero.clone(); n * n];
        for (k, x) in v.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (p, q, y) in &sp.comult[k] {
                out[p * n + q] += x * y;
            }
        }
        out
    };
    for i in 0..n {
        for j in 0..n {
            let prod = sp.mul_vec(&sp.basis(i), &sp.basis(j));
            let left = coproduct_of(&prod);
            let mut right = vec![zero.clone(); n * n];
            for (a, b, x) in &sp.comult[i] {
                for (cc, d, y) in &sp.comult[j] {
                    let xy = x * y;
                    for (p, u) in &sp.mult[*a][*cc] {
                        for (q, v) in &sp.mult[*b][*d] {
                            right[p * n + q] += &xy * u * v;
                        }
                    }
                }
            }
            if left != right {
                return fail("comultiplicativity", format!("Δ(e{i}·e{j}) ≠ Δ(e{i})Δ(e{j})"));
            }
            let eps: BigRational = prod.iter().zip(&c.counit).map(|(x, y)| x * y).sum();
            if eps != &c.counit[i] * &c.counit[j] {
                return fail("counit multiplicativity", format!("ε(e{i}·e{j}) ≠ ε(e{i})ε(e{j})"));
            }
        }
    }
    let unit_cop = coproduct_of(&c.unit);
    let unit_tensor: Vec<BigRational> = (0..n * n).map(|pq| &c.unit[pq / n] * &c.unit[pq % n]).collect();
    if unit_cop != unit_tensor {
        return fail("comultiplicativity", "Δ(1) ≠ 1⊗1".into());
    }
    let eps_one: BigRational = c.unit.iter().zip(&c.counit).map(|(x, y)| x * y).sum();
    if !eps_one.is_one() {
        return fail("counit multiplicativity", "ε(1) ≠ 1".into());
    }
    // antipode
    for k in 0..n {
        let mut left = vec![zero.clone(); n];
        let mut right = vec![zero.clone(); n];
        for (a, b, x) in &sp.comult[k] {
            let sa = sp.antipode_vec(&sp.basis(*a));
            let sb = sp.antipode_vec(&sp.basis(*b));
            for (t, v) in sp.mul_vec(&sa, &sp.basis(*b)).iter().enumerate() {
                left[t] += x * v;
            }
            for (t, v) in sp.mul_vec(&sp.basis(*a), &sb).iter().enumerate() {
                right[t] += x * v;
            }
        }
        let target: Vec<BigRational> = c.unit.iter().map(|u| u * &c.counit[k]).collect();
        if left != target || right != target {
            return fail("antipode", format!("S(e{k}₁)e{k}₂ or e{k}₁S(e{k}₂) differs from ε(e{k})1"));
        }
    }
    for i in 0..n {
        if sp.antipode_vec(&sp.antipode_vec(&sp.basis(i))) != sp.basis(i) {
            return fail("involutive antipode", format!("S(S(e{i})) ≠ e{i}"));
        }
    }
    Ok(())
}

/// φ-Gram matrix `[φ(e_i e_j) / n]` over ℚ (δ² = n makes it rational).
fn phi_gram(c: &HopfConstants) -> Matrix<BigRational> {
    let n = c.dim();
    let phi: Vec<BigRational> = (0..n).map(|i| (0..n).map(|k| c.mult[i][k][k].clone()).sum()).collect();
    let nn = BigRational::from_integer(n.into());
    Matrix::from_fn(n, n, |i, j| {
        let s: BigRational = (0..n).map(|k| &c.mult[i][j][k] * &phi[k]).sum();
        s / &nn
    })
}

/// A verified Hopf algebra over the coefficient field `F`.
#[derive(Clone)]
pub struct HopfAlgebra<F> {
    constants: HopfConstants,
    delta_sign: DeltaSign,
    delta: F,
    delta_inv: F,
    mult: Vec<Vec<Vec<(usize, F)>>>,
    comult: Vec<Vec<(usize, usize, F)>>,
    counit: Vec<F>,
    antipode: Vec<Vec<(usize, F)>>,
    unit: Element<F>,
    phi: Functional<F>,
    integral: Element<F>,
    gram_inverse: Matrix<F>,
    dual: OnceLock<Box<HopfAlgebra<F>>>,
}

impl<F: Field> std::fmt::Debug for HopfAlgebra<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("HopfAlgebra")
            .field("basis", &self.constants.basis)
            .field("delta", &self.delta)
            .finish_non_exhaustive()
    }
}

fn to_field<F: Field>(r: &BigRational) -> F {
    F::from_rational(r)
}

impl<F: Field> HopfAlgebra<F> {
    /// Verifies every axiom and builds the algebra, with δ = ±√n.
    pub fn from_constants(constants: HopfConstants, delta_sign: DeltaSign) -> Result<Self, HopfError> {
        verify_axioms(&constants)?;
        let n = constants.dim();
        let gram = phi_gram(&constants);
        let gram_inv = gram.inverse().map_err(|_| HopfError::NotSemisimple)?;
        let dual_gram = phi_gram(&constants.transposed());
        if dual_gram.rank() < n {
            return Err(HopfError::NotCosemisimple);
        }
        let delta = F::delta(n as u64, delta_sign)?;
        let delta_inv = delta.try_inv()?;
        let sparse = Sparse::new(&constants);
        let conv = |v: &Vec<(usize, BigRational)>| v.iter().map(|(k, x)| (*k, to_field::<F>(x))).collect();
        let phi = Functional::new(
            (0..n).map(|i| to_field(&(0..n).map(|k| constants.mult[i][k][k].clone()).sum::<BigRational>())).collect(),
        );
        let integral = Element::new(
            (0..n).map(|k| to_field(&(0..n).map(|l| constants.comult[l][k][l].clone()).sum::<BigRational>())).collect(),
        );
        Ok(HopfAlgebra {
            delta_sign,
            delta,
            delta_inv,
            mult: sparse.mult.iter().map(|row| row.iter().map(conv).collect()).collect(),
            comult: sparse.comult.iter().map(|t| t.iter().map(|(i, j, x)| (*i, *j, to_field(x))).collect()).collect(),
            counit: constants.counit.iter().map(to_field).collect(),
            antipode: sparse.antipode.iter().map(conv).collect(),
            unit: Element::new(constants.unit.iter().map(to_field).collect()),
            phi,
            integral,
            gram_inverse: Matrix::from_fn(n, n, |i, j| to_field(&gram_inv[(i, j)])),
            constants,
            dual: OnceLock::new(),
        })
    }

    pub fn group_algebra(table: &[Vec<usize>], delta_sign: DeltaSign) -> Result<Self, HopfError> {
        Self::from_constants(HopfConstants::group_algebra(table, None)?, delta_sign)
    }

    /// H* with multiplication dual to Δ, comultiplication dual to μ, and the
    /// same choice of δ.
    pub fn build_dual(&self) -> Result<Self, HopfError> {
        Self::from_constants(self.constants.transposed(), self.delta_sign)
    }

    /// Cached dual with the same δ.
    pub fn dual(&self) -> &HopfAlgebra<F> {
        self.dual.get_or_init(|| Box::new(self.build_dual().expect("dual of a verified Hopf algebra is verified")))
    }

    pub fn dim(&self) -> usize {
        self.constants.dim()
    }

    pub fn constants(&self) -> &HopfConstants {
        &self.constants
    }

    pub fn basis_names(&self) -> &[String] {
        &self.constants.basis
    }

    pub fn delta(&self) -> &F {
        &self.delta
    }

    pub fn delta_inv(&self) -> &F {
        &self.delta_inv
    }

    pub fn delta_sign(&self) -> DeltaSign {
        self.delta_sign
    }

    pub fn basis(&self, i: usize) -> Element<F> {
        Element::basis(self.dim(), i)
    }

    pub fn zero(&self) -> Element<F> {
        Element::zero(self.dim())
    }

    pub fn one(&self) -> &Element<F> {
        &self.unit
    }

    /// φ: the trace of the left regular representation.
    pub fn regular_trace(&self) -> &Functional<F> {
        &self.phi
    }

    /// h: the element of H representing the regular trace of H*.
    pub fn dual_integral(&self) -> &Element<F> {
        &self.integral
    }

    pub fn mul(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        let mut out = self.zero();
        for (i, x) in a.nonzero() {
            for (j, y) in b.nonzero() {
                let xy = x.clone() * y;
                for (k, c) in &self.mult[i][j] {
                    out.coeffs[*k] += &(xy.clone() * c);
                }
            }
        }
        out
    }

    /// Structure constants of e_i·e_j.
    pub fn mult_terms(&self, i: usize, j: usize) -> &[(usize, F)] {
        &self.mult[i][j]
    }

    /// Terms (i, j, c) of Δ(e_k).
    pub fn comult_terms(&self, k: usize) -> &[(usize, usize, F)] {
        &self.comult[k]
    }

    /// Terms (j, c) of S(e_i).
    pub fn antipode_terms(&self, i: usize) -> &[(usize, F)] {
        &self.antipode[i]
    }

    pub fn antipode(&self, a: &Element<F>) -> Element<F> {
        let mut out = self.zero();
        for (i, x) in a.nonzero() {
            for (j, c) in &self.antipode[i] {
                out.coeffs[*j] += &(x.clone() * c);
            }
        }
        out
    }

    pub fn counit(&self, a: &Element<F>) -> F {
        a.pair(&self.counit)
    }

    pub fn counit_vector(&self) -> &[F] {
        &self.counit
    }

    pub fn phi(&self, a: &Element<F>) -> F {
        self.phi.eval(a)
    }

    /// δ⁻¹φ, the loop weight of the state sum.
    pub fn loop_trace(&self, a: &Element<F>) -> F {
        self.phi(a) * &self.delta_inv
    }

    /// Δ(a) as a normalized list of (i, j, coefficient).
    pub fn coproduct(&self, a: &Element<F>) -> Vec<(usize, usize, F)> {
        let n = self.dim();
        let mut dense = vec![F::zero(); n * n];
        for (k, x) in a.nonzero() {
            for (i, j, c) in &self.comult[k] {
                dense[i * n + j] += &(x.clone() * c);
            }
        }
        dense.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(ij, c)| (ij / n, ij % n, c)).collect()
    }

    /// Inverse of the Gram matrix `[δ⁻²φ(e_i e_j)]`.
    pub fn gram_inverse(&self) -> &Matrix<F> {
        &self.gram_inverse
    }

    /// Elements e^j with δ⁻²φ(e_i e^j) = [i = j].
    pub fn dual_basis(&self) -> Vec<Element<F>> {
        (0..self.dim()).map(|j| Element::new(self.gram_inverse.column(j))).collect()
    }

    /// Matrix of S, column j = S(e_j).
    pub fn antipode_matrix(&self) -> Matrix<F> {
        let n = self.dim();
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            for (j, c) in &self.antipode[i] {
                m[(*j, i)] = c.clone();
            }
        }
        m
    }

    /// Copy of `self` whose antipode is replaced without any verification.
    /// Only useful for negative controls of the identity checks.
    pub fn with_unverified_antipode(&self, antipode: Vec<Vec<BigRational>>) -> Self {
        let mut out = self.clone();
        out.constants.antipode = antipode;
        out.antipode = Sparse::new(&out.constants)
            .antipode
            .iter()
            .map(|v| v.iter().map(|(k, x)| (*k, to_field(x))).collect())
            .collect();
        out.dual = OnceLock::new();
        out
    }

    pub fn is_commutative(&self) -> bool {
        let c = &self.constants.mult;
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| c[i][j] == c[j][i]))
    }

    pub fn is_cocommutative(&self) -> bool {
        let c = &self.constants.comult;
        let n = self.dim();
        (0..n).all(|k| (0..n).all(|i| (0..n).all(|j| c[k][i][j] == c[k][j][i])))
    }
}

/// Verifies constants without building an algebra; `Ok` iff every axiom holds.
pub fn verify_constants(c: &HopfConstants) -> Result<(), HopfError> {
    verify_axioms(c)?;
    if phi_gram(c).rank() < c.dim() {
        return Err(HopfError::NotSemisimple);
    }
    if phi_gram(&c.transposed()).rank() < c.dim() {
        return Err(HopfError::NotCosemisimple);
    }
    Ok(())
}

/// Multiplication tables for the standard test family.
pub mod groups {
    /// ℤ/m, element i ↦ i.
    pub fn cyclic(m: usize) -> Vec<Vec<usize>> {
        (0..m).map(|i| (0..m).map(|j| (i + j) % m).collect()).collect()
    }

    /// ℤ/2 × ℤ/2 as bit pairs.
    pub fn klein_four() -> Vec<Vec<usize>> {
        (0..4).map(|i| (0..4).map(|j| i ^ j).collect()).collect()
    }

    /// The six permutations of {0,1,2} in lexicographic order; entry
    /// `[i][j]` is the composite "apply j, then i".
    pub fn symmetric3() -> Vec<Vec<usize>> {
        let perms = permutations3();
        let index = |p: [usize; 3]| perms.iter().position(|q| *q == p).expect("closed");
        perms.iter().map(|a| perms.iter().map(|b| index([a[b[0]], a[b[1]], a[b[2]]])).collect()).collect()
    }

    pub fn permutations3() -> Vec<[usize; 3]> {
        vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]]
    }
}
