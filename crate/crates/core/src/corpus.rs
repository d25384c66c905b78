//! Golden inputs shipped with the repository.

use crate::algebra::{Rational, SparsePoly};
use crate::parser::parse_source;

pub const WAVE_SOURCE: &str = include_str!("../../../corpus/wave.poly");
pub const OCTIC_C3_SOURCE: &str = include_str!("../../../corpus/octic_c3.poly");

/// `x^8 - 4x^6y^2 + 6x^4y^4 - 4x^2y^6 + y^8 + c x^2y^2 + 1`; compact iff `c >= 0`.
pub fn octic(c: &Rational) -> SparsePoly {
    let mut p = parse_source("x^8 - 4*x^6*y^2 + 6*x^4*y^4 - 4*x^2*y^6 + y^8 + 1")
        .expect("valid literal");
    p.add_term((2, 2), c.clone());
    p
}

/// The degree-18 wave-propagation curve.
pub fn wave_curve() -> SparsePoly {
    parse_source(WAVE_SOURCE).expect("corpus file parses")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::int;

    #[test]
    fn octic_file_matches_builder() {
        assert_eq!(parse_source(OCTIC_C3_SOURCE).unwrap(), octic(&int(3)));
    }

    #[test]
    fn wave_curve_transcription() {
        // spot values from an independent expansion of the printed form
        let p = wave_curve();
        assert_eq!(p.len(), 53);
        assert_eq!(p.total_degree(), 18);
        for ((k, l), c) in [
            ((14, 0), 72),
            ((13, 2), -432),
            ((12, 0), 1947),
            ((9, 0), -1536),
            ((8, 8), 57803),
            ((7, 2), 4608),
            ((4, 8), -33769),
            ((1, 14), 972),
            ((1, 16), -3888),
            ((0, 16), -81),
            ((0, 18), 324),
        ] {
            assert_eq!(p.coeff(k, l), int(c), "({k},{l})");
        }
        assert_eq!(p.coeff(0, 0), int(0));
    }
}
