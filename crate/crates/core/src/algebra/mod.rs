//! Exact arithmetic: rationals, sparse bivariate and dense univariate
//! polynomials, and univariate real-root analysis.

pub mod integer;
pub mod rational;
pub mod roots;
pub mod sparse;
pub mod univariate;

pub use integer::extended_gcd;
pub use rational::Rational;
pub use roots::{
    count_real_roots, has_real_root, isolate_real_roots, odd_order_real_roots, sturm_count,
    yun_squarefree, Bound, OddOrderRoots, RootError, RootInterval, SquarefreeDecomposition,
    SturmSequence,
};
pub use sparse::{Exponent, SparsePoly};
pub use univariate::{uni_gcd, UniPoly};
