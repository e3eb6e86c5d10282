use num_traits::Zero;

use crate::scalars::Field;

/// Coefficient vector over the basis of H.
#[derive(Debug, Clone, PartialEq)]
pub struct Element<F> {
    pub coeffs: Vec<F>,
}

/// Coefficient vector over the dual basis of H*.
#[derive(Debug, Clone, PartialEq)]
pub struct Functional<F> {
    pub coeffs: Vec<F>,
}

impl<F: Field> Element<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        Element { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Element { coeffs: vec![F::zero(); n] }
    }

    pub fn basis(n: usize, i: usize) -> Self {
        let mut e = Self::zero(n);
        e.coeffs[i] = F::one();
        e
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (usize, &F)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    pub fn scale(&self, s: &F) -> Self {
        Element { coeffs: self.coeffs.iter().map(|c| c.clone() * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-F::one()))
    }

    /// Σ coeffs[i]·v[i].
    pub fn pair(&self, v: &[F]) -> F {
        let mut acc = F::zero();
        for (i, c) in self.nonzero() {
            if !v[i].is_zero() {
                acc += &(c.clone() * &v[i]);
            }
        }
        acc
    }

    /// Reinterpret as a functional on H* (H ≅ H**).
    pub fn into_functional(self) -> Functional<F> {
        Functional { coeffs: self.coeffs }
    }
}

impl<F: Field> Functional<F> {
    pub fn new(coeffs: Vec<F>) -> Self {
        Functional { coeffs }
    }

    pub fn eval(&self, a: &Element<F>) -> F {
        a.pair(&self.coeffs)
    }

    pub fn scale(&self, s: &F) -> Self {
        Functional { coeffs: self.coeffs.iter().map(|c| c.clone() * s).collect() }
    }

    /// The same vector seen as an element of the dual Hopf algebra.
    pub fn into_element(self) -> Element<F> {
        Element { coeffs: self.coeffs }
    }

    pub fn as_element(&self) -> Element<F> {
        Element { coeffs: self.coeffs.clone() }
    }
}
