//! Exact planar-algebra computations for semisimple and cosemisimple Hopf
//! algebras: structure-constant algebras, the state-sum partition function
//! on labeled planar networks, trace pairings in P_k, Fourier duality, and
//! quadrangulation flip graphs.
//!
//! The algebraic core is generic over the coefficient [`Field`]; the aliases
//! below fix it to the exact quadratic field ℚ(δ).

pub mod duality;
pub mod family;
pub mod hopf;
pub mod io;
pub mod linalg;
pub mod network;
pub mod pairing;
pub mod scalars;
pub mod tangle;
pub mod tilings;

pub use hopf::{Element, Functional, HopfAlgebra, HopfConstants, HopfError};
pub use network::{LabeledNetwork, Move, NetworkSum, Pass, Shading, Side};
pub use scalars::{DeltaSign, Field, QuadraticScalar, ScalarError};

/// Coefficients in ℚ(δ), δ² = dim H.
pub type Scalar = QuadraticScalar;
/// Hopf algebra over ℚ(δ).
pub type Hopf = HopfAlgebra<Scalar>;
/// Hopf algebra over ℚ, for square dimensions.
pub type RationalHopf = HopfAlgebra<num_rational::BigRational>;
/// Labeled network over ℚ(δ).
pub type Network = network::LabeledNetwork<Scalar>;
