//! Compactness certificates for real affine plane curves `p(x, y) = 0`, read
//! off the Newton polygon of `p`.
//!
//! The curve is certified compact when `p` has no factor `x` or `y` and no
//! outer edge polynomial has a real root. It is certified noncompact when `p`
//! has such a factor or some outer edge polynomial has a real root of odd
//! order; in that case [`witness`] produces explicit curve points of growing
//! norm. Everything in between is reported as [`Status::Unknown`].
//!
//! ```
//! use newtonbound::{decide, parse_polynomial, Status};
//!
//! let circle = parse_polynomial("x^2 + y^2 - 1").unwrap();
//! assert_eq!(decide(&circle).status, Status::CompactCertified);
//!
//! let hyperbola = parse_polynomial("x*y - 1").unwrap();
//! assert_eq!(decide(&hyperbola).status, Status::NoncompactCertified);
//! ```

pub mod algebra;
pub mod corpus;
pub mod decision;
pub mod newton;
pub mod oracle;
pub mod parser;
pub mod witness;

pub use algebra::{Rational, SparsePoly, UniPoly};
pub use decision::{check_necessary, check_sufficient, decide, Status, Verdict, Violation};
pub use newton::{EdgeData, NewtonPolygon};
pub use parser::{parse_polynomial, parse_source, ParseError};
