//! The standard family of small test algebras: ℚ[ℤ/2], ℚ[ℤ/2×ℤ/2], ℚ[S₃]
//! and their duals.

use crate::hopf::{groups, HopfAlgebra, HopfConstants};
use crate::scalars::{DeltaSign, Field};

pub fn z2<F: Field>() -> HopfAlgebra<F> {
    named_group(&groups::cyclic(2), &["e", "x"])
}

pub fn klein<F: Field>() -> HopfAlgebra<F> {
    named_group(&groups::klein_four(), &["e", "a", "b", "ab"])
}

pub fn s3<F: Field>() -> HopfAlgebra<F> {
    named_group(&groups::symmetric3(), &["e", "(12)", "(01)", "(012)", "(021)", "(02)"])
}

fn named_group<F: Field>(table: &[Vec<usize>], names: &[&str]) -> HopfAlgebra<F> {
    let names = names.iter().map(|s| s.to_string()).collect();
    let c = HopfConstants::group_algebra(table, Some(names)).expect("standard group table");
    HopfAlgebra::from_constants(c, DeltaSign::Plus).expect("group algebras are Hopf algebras")
}

/// The six algebras every acceptance check runs on, with display names.
pub fn standard<F: Field>() -> Vec<(&'static str, HopfAlgebra<F>)> {
    let mut out = Vec::new();
    for (name, dual_name, h) in
        [("Q[Z2]", "Q[Z2]*", z2::<F>()), ("Q[Z2xZ2]", "Q[Z2xZ2]*", klein::<F>()), ("Q[S3]", "Q[S3]*", s3::<F>())]
    {
        let d = h.build_dual().expect("dual of a group algebra");
        out.push((name, h));
        out.push((dual_name, d));
    }
    out
}
