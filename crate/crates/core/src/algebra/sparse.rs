use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::rational::{pow_i64, Rational};

/// Exponent pair `(k, l)` of the monomial `x^k y^l`.
pub type Exponent = (u32, u32);

/// Sparse bivariate polynomial over the rationals.
///
/// The zero polynomial is representable (it arises mid-computation) but the
/// public constructors used by the pipeline reject it. No stored coefficient
/// is ever zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Exponent, Rational>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial(c: Rational, k: u32, l: u32) -> Self {
        let mut p = Self::zero();
        p.add_term((k, l), c);
        p
    }

    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(Rational::one(), 0, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (Exponent, Rational)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: Exponent, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, k: u32, l: u32) -> Rational {
        self.terms.get(&(k, l)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Rational)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Maximum of `k + l` over the support; 0 for the zero polynomial.
    pub fn total_degree(&self) -> u64 {
        self.terms
            .keys()
            .map(|&(k, l)| k as u64 + l as u64)
            .max()
            .unwrap_or(0)
    }

    /// True iff every monomial has `k >= 1`.
    pub fn divisible_by_x(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|&(k, _)| k >= 1)
    }

    pub fn divisible_by_y(&self) -> bool {
        !self.is_zero() && self.terms.keys().all(|&(_, l)| l >= 1)
    }

    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(k, l), c) in &self.terms {
            acc += c * pow_i64(x, k as i64) * pow_i64(y, l as i64);
        }
        acc
    }

    pub fn scale(&self, lambda: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, c)| (e, c * lambda)))
    }

    /// Multiply by `x^dk y^dl`.
    pub fn shift(&self, dk: u32, dl: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(k, l), c)| ((k + dk, l + dl), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(Rational::one());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Add for &SparsePoly {
    type Output = SparsePoly;
    fn add(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &SparsePoly {
    type Output = SparsePoly;
    fn sub(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c);
        }
        out
    }
}

impl Mul for &SparsePoly {
    type Output = SparsePoly;
    fn mul(self, rhs: &SparsePoly) -> SparsePoly {
        let mut out = SparsePoly::zero();
        for (&(k1, l1), c1) in &self.terms {
            for (&(k2, l2), c2) in &rhs.terms {
                out.add_term((k1 + k2, l1 + l2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &SparsePoly {
    type Output = SparsePoly;
    fn neg(self) -> SparsePoly {
        SparsePoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl fmt::Display for SparsePoly {
    /// Canonical text: descending total degree, then descending power of x.
    /// The output is accepted by the expression parser.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut order: Vec<_> = self.terms.iter().collect();
        order.sort_by(|((k1, l1), _), ((k2, l2), _)| {
            (k2 + l2, k2).cmp(&(k1 + l1, k1))
        });
        for (i, (&(k, l), c)) in order.into_iter().enumerate() {
            let mag = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            if !mag.is_one() || (k == 0 && l == 0) {
                factors.push(mag.to_string());
            }
            match k {
                0 => {}
                1 => factors.push("x".to_string()),
                _ => factors.push(format!("x^{k}")),
            }
            match l {
                0 => {}
                1 => factors.push("y".to_string()),
                _ => factors.push(format!("y^{l}")),
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};

    fn circle() -> SparsePoly {
        SparsePoly::from_terms([((2, 0), int(1)), ((0, 2), int(1)), ((0, 0), int(-1))])
    }

    #[test]
    fn divisibility() {
        let p = SparsePoly::from_terms([((1, 1), int(1)), ((1, 0), int(2))]);
        assert!(p.divisible_by_x());
        assert!(!p.divisible_by_y());
        assert!(!circle().divisible_by_x());
        assert!(!circle().divisible_by_y());
        let y = SparsePoly::y();
        assert!(!y.divisible_by_x());
        assert!(y.divisible_by_y());
    }

    #[test]
    fn evaluation() {
        assert_eq!(circle().evaluate(&int(1), &int(0)), int(0));
        assert_eq!(circle().evaluate(&int(0), &int(0)), int(-1));
        let hyperbola = SparsePoly::from_terms([((1, 1), int(1)), ((0, 0), int(-1))]);
        assert_eq!(hyperbola.evaluate(&int(2), &frac(1, 2)), int(0));
    }

    #[test]
    fn cancellation_removes_terms() {
        let p = &SparsePoly::x() - &SparsePoly::x();
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn power_expands() {
        let s = &SparsePoly::x() + &SparsePoly::y();
        let cube = s.pow(3);
        assert_eq!(cube.coeff(2, 1), int(3));
        assert_eq!(cube.coeff(0, 3), int(1));
        assert_eq!(cube.len(), 4);
    }

    #[test]
    fn canonical_text() {
        assert_eq!(circle().to_string(), "x^2 + y^2 - 1");
        let p = SparsePoly::from_terms([((1, 1), frac(-1, 2)), ((0, 0), int(3))]);
        assert_eq!(p.to_string(), "-1/2*x*y + 3");
    }
}
