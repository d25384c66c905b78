//! Real-root analysis of univariate polynomials: Sturm sequences, Yun's
//! square-free decomposition, and root isolation by Sturm bisection.

use std::cmp::Ordering;

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::rational::{sign, Rational};
use super::univariate::{uni_gcd, UniPoly};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("interval endpoint {0} is a root")]
    EndpointIsRoot(Rational),
    #[error("empty interval: lower bound is not below upper bound")]
    EmptyInterval,
    #[error("zero polynomial has no finite root count")]
    ZeroPolynomial,
}

/// A point of the extended rational line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bound {
    NegInf,
    Finite(Rational),
    PosInf,
}

impl Bound {
    fn rank(&self) -> i8 {
        match self {
            Bound::NegInf => -1,
            Bound::Finite(_) => 0,
            Bound::PosInf => 1,
        }
    }

    fn below(&self, other: &Bound) -> bool {
        match (self, other) {
            (Bound::Finite(a), Bound::Finite(b)) => a < b,
            _ => self.rank() < other.rank(),
        }
    }
}

impl From<Rational> for Bound {
    fn from(q: Rational) -> Self {
        Bound::Finite(q)
    }
}

/// Open-closed rational interval `(lo, hi]` isolating one real root. Both
/// endpoints are non-roots, so the root lies strictly inside.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn contains(&self, t: &Rational) -> bool {
        &self.lo < t && t < &self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Sturm sequence `u, u', -rem(..), ...`, each term scaled to a primitive
/// integer polynomial with a positive factor so signs are preserved.
#[derive(Clone, Debug)]
pub struct SturmSequence {
    chain: Vec<UniPoly>,
}

impl SturmSequence {
    pub fn new(u: &UniPoly) -> Self {
        let mut chain = Vec::new();
        if u.is_zero() {
            return Self { chain };
        }
        let mut a = u.primitive();
        let mut b = u.derivative().primitive();
        chain.push(a.clone());
        while !b.is_zero() {
            chain.push(b.clone());
            let r = (-&a.rem(&b)).primitive();
            a = b;
            b = r;
        }
        Self { chain }
    }

    pub fn len(&self) -> usize {
        self.chain.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chain.is_empty()
    }

    fn variations_at(&self, at: &Bound) -> usize {
        let signs = self.chain.iter().map(|p| match at {
            Bound::Finite(t) => sign(&p.eval(t)),
            Bound::PosInf => sign(p.leading().unwrap()),
            Bound::NegInf => {
                let s = sign(p.leading().unwrap());
                if p.degree().unwrap() % 2 == 1 {
                    s.reverse()
                } else {
                    s
                }
            }
        });
        let mut last = Ordering::Equal;
        let mut count = 0;
        for s in signs.filter(|s| *s != Ordering::Equal) {
            if last != Ordering::Equal && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Distinct real roots in `(lo, hi]`; finite endpoints must not be roots.
    pub fn count(&self, lo: &Bound, hi: &Bound) -> Result<usize, RootError> {
        let head = self.chain.first().ok_or(RootError::ZeroPolynomial)?;
        if !lo.below(hi) {
            return Err(RootError::EmptyInterval);
        }
        for b in [lo, hi] {
            if let Bound::Finite(t) = b {
                if head.eval(t).is_zero() {
                    return Err(RootError::EndpointIsRoot(t.clone()));
                }
            }
        }
        let vlo = self.variations_at(lo);
        let vhi = self.variations_at(hi);
        Ok(vlo.saturating_sub(vhi))
    }
}

/// Number of distinct real roots of `u` in `(lo, hi]`.
pub fn sturm_count(u: &UniPoly, lo: &Bound, hi: &Bound) -> Result<usize, RootError> {
    SturmSequence::new(u).count(lo, hi)
}

pub fn count_real_roots(u: &UniPoly) -> usize {
    if u.degree().unwrap_or(0) == 0 {
        return 0;
    }
    sturm_count(u, &Bound::NegInf, &Bound::PosInf).expect("infinite bounds are never roots")
}

pub fn has_real_root(u: &UniPoly) -> bool {
    count_real_roots(u) > 0
}

/// `u = unit * prod(factor^multiplicity)` with monic, square-free, pairwise
/// coprime factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub unit: Rational,
    pub factors: Vec<(u32, UniPoly)>,
}

impl SquarefreeDecomposition {
    pub fn expand(&self) -> UniPoly {
        self.factors
            .iter()
            .fold(UniPoly::constant(self.unit.clone()), |acc, (m, f)| {
                (0..*m).fold(acc, |acc, _| &acc * f)
            })
    }

    /// Product of the factors with odd multiplicity. Its real roots are exactly
    /// the odd-order real roots of the decomposed polynomial.
    pub fn odd_part(&self) -> UniPoly {
        self.factors
            .iter()
            .filter(|(m, _)| m % 2 == 1)
            .fold(UniPoly::one(), |acc, (_, f)| &acc * f)
    }
}

/// Yun's algorithm over the rationals. A constant input yields no factors.
pub fn yun_squarefree(u: &UniPoly) -> SquarefreeDecomposition {
    let unit = u.leading().cloned().unwrap_or_else(Rational::zero);
    let mut factors = Vec::new();
    if u.degree().unwrap_or(0) == 0 {
        return SquarefreeDecomposition { unit, factors };
    }
    let f = u.monic();
    let df = f.derivative();
    let a0 = uni_gcd(&f, &df);
    let mut b = f.exact_div(&a0);
    let c = df.exact_div(&a0);
    let mut d = &c - &b.derivative();
    let mut mult = 1u32;
    while b.degree().unwrap_or(0) > 0 {
        let a = uni_gcd(&b, &d);
        let nb = b.exact_div(&a);
        let c = d.exact_div(&a);
        d = &c - &nb.derivative();
        if a.degree().unwrap_or(0) > 0 {
            factors.push((mult, a));
        }
        b = nb;
        mult += 1;
    }
    SquarefreeDecomposition { unit, factors }
}

/// Cauchy bound: every complex root satisfies `|t| < 1 + max |a_i / a_n|`.
pub fn cauchy_bound(u: &UniPoly) -> Rational {
    let lc = u.leading().expect("nonzero polynomial").abs();
    let n = u.degree().unwrap();
    let m = u.coeffs()[..n]
        .iter()
        .map(|c| c.abs() / &lc)
        .max()
        .unwrap_or_else(Rational::zero);
    Rational::one() + m
}

/// A non-root of `u` strictly inside `(lo, hi)`, near the midpoint.
fn split_point(u: &UniPoly, lo: &Rational, hi: &Rational) -> Rational {
    let mid = (lo + hi) / Rational::from_integer(2.into());
    if !u.eval(&mid).is_zero() {
        return mid;
    }
    let mut step = (hi - lo) / Rational::from_integer(4.into());
    loop {
        let cand = &mid + &step;
        if !u.eval(&cand).is_zero() {
            return cand;
        }
        step /= Rational::from_integer(2.into());
    }
}

/// Isolating intervals for the distinct real roots of `u`, in increasing
/// order. When 0 is not a root, no interval contains or touches 0.
pub fn isolate_real_roots(u: &UniPoly) -> Vec<RootInterval> {
    if u.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let sq = SturmSequence::new(u);
    let bound = cauchy_bound(u);
    let zero_is_root = u.coeffs()[0].is_zero();
    let mut pending = if zero_is_root {
        vec![(-bound.clone(), bound)]
    } else {
        vec![(Rational::zero(), bound.clone()), (-bound, Rational::zero())]
    };
    let mut found = Vec::new();
    while let Some((lo, hi)) = pending.pop() {
        let n = sq
            .count(&Bound::Finite(lo.clone()), &Bound::Finite(hi.clone()))
            .expect("split points avoid roots");
        match n {
            0 => {}
            1 if !(lo.is_zero() || hi.is_zero()) || zero_is_root => {
                found.push(RootInterval { lo, hi })
            }
            _ => {
                let mid = split_point(u, &lo, &hi);
                pending.push((mid.clone(), hi));
                pending.push((lo, mid));
            }
        }
    }
    found.sort_by(|a, b| a.lo.cmp(&b.lo));
    found
}

/// Shrinks an isolating interval of a square-free `u` until narrower than `width`.
pub fn refine_root(u: &UniPoly, iv: &RootInterval, width: &Rational) -> RootInterval {
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let slo = sign(&u.eval(&lo));
    while &(&hi - &lo) >= width {
        let mid = split_point(u, &lo, &hi);
        if sign(&u.eval(&mid)) == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    RootInterval { lo, hi }
}

/// Odd-order real roots of `u`: count and isolating intervals (roots of the
/// odd-multiplicity part of the Yun decomposition).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddOrderRoots {
    pub count: usize,
    pub intervals: Vec<RootInterval>,
    /// Square-free polynomial whose real roots are the odd-order roots.
    pub odd_part: UniPoly,
}

pub fn odd_order_real_roots(u: &UniPoly) -> OddOrderRoots {
    let odd_part = yun_squarefree(u).odd_part();
    let intervals = isolate_real_roots(&odd_part);
    OddOrderRoots {
        count: intervals.len(),
        intervals,
        odd_part,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{frac, int};

    fn all(u: &UniPoly) -> usize {
        sturm_count(u, &Bound::NegInf, &Bound::PosInf).unwrap()
    }

    fn octic_edge() -> UniPoly {
        UniPoly::from_ints(&[1, 0, -4, 0, 6, 0, -4, 0, 1])
    }

    #[test]
    fn sturm_examples() {
        assert_eq!(all(&UniPoly::from_ints(&[-2, 0, 1])), 2);
        assert_eq!(all(&UniPoly::from_ints(&[1, 0, 1])), 0);
        assert_eq!(all(&octic_edge()), 2);
    }

    #[test]
    fn sturm_on_finite_intervals() {
        let u = UniPoly::from_ints(&[-2, 0, 1]);
        let c = sturm_count(&u, &Bound::Finite(int(0)), &Bound::Finite(int(2))).unwrap();
        assert_eq!(c, 1);
        let c = sturm_count(&u, &Bound::NegInf, &Bound::Finite(int(0))).unwrap();
        assert_eq!(c, 1);
        // (t-1)^2: double root counted once
        let sq = UniPoly::from_ints(&[1, -2, 1]);
        assert_eq!(sturm_count(&sq, &Bound::Finite(int(0)), &Bound::Finite(int(3))).unwrap(), 1);
    }

    #[test]
    fn sturm_rejects_root_endpoints() {
        let u = UniPoly::from_ints(&[-1, 1]);
        assert_eq!(
            sturm_count(&u, &Bound::Finite(int(1)), &Bound::PosInf),
            Err(RootError::EndpointIsRoot(int(1)))
        );
        assert_eq!(
            sturm_count(&u, &Bound::Finite(int(2)), &Bound::Finite(int(0))),
            Err(RootError::EmptyInterval)
        );
    }

    #[test]
    fn has_real_root_examples() {
        assert!(!has_real_root(&UniPoly::from_ints(&[1, 0, 1])));
        assert!(has_real_root(&UniPoly::from_ints(&[-1, 1])));
        assert!(has_real_root(&octic_edge()));
        assert!(!has_real_root(&UniPoly::from_ints(&[7])));
    }

    #[test]
    fn yun_examples() {
        let d = yun_squarefree(&UniPoly::from_ints(&[1, -1, -1, 1]));
        assert_eq!(
            d.factors,
            vec![(1, UniPoly::from_ints(&[1, 1])), (2, UniPoly::from_ints(&[-1, 1]))]
        );
        assert_eq!(d.expand(), UniPoly::from_ints(&[1, -1, -1, 1]));

        let d = yun_squarefree(&UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(d.factors, vec![(1, UniPoly::from_ints(&[1, 0, 1]))]);

        let d = yun_squarefree(&octic_edge());
        assert_eq!(d.factors, vec![(4, UniPoly::from_ints(&[-1, 0, 1]))]);
        assert_eq!(d.expand(), octic_edge());
    }

    #[test]
    fn yun_keeps_unit() {
        let u = UniPoly::from_ints(&[-3, 6, -3]); // -3 (t-1)^2
        let d = yun_squarefree(&u);
        assert_eq!(d.unit, int(-3));
        assert_eq!(d.factors, vec![(2, UniPoly::from_ints(&[-1, 1]))]);
        assert_eq!(d.expand(), u);
    }

    #[test]
    fn odd_order_examples() {
        assert_eq!(odd_order_real_roots(&octic_edge()).count, 0);

        let r = odd_order_real_roots(&UniPoly::from_ints(&[-1, 1]));
        assert_eq!(r.count, 1);
        assert!(r.intervals[0].contains(&int(1)));

        // (t-1)^3 (t^2+1)
        let cube = UniPoly::from_ints(&[-1, 3, -3, 1]);
        let u = &cube * &UniPoly::from_ints(&[1, 0, 1]);
        assert_eq!(u, UniPoly::from_ints(&[-1, 3, -4, 4, -3, 1]));
        let r = odd_order_real_roots(&u);
        assert_eq!(r.count, 1);
        assert!(r.intervals[0].contains(&int(1)));
    }

    #[test]
    fn isolation_avoids_zero() {
        let u = UniPoly::from_ints(&[-1, 0, 1]); // roots at +-1, symmetric about 0
        let ivs = isolate_real_roots(&u);
        assert_eq!(ivs.len(), 2);
        for iv in &ivs {
            assert!(!iv.lo.is_zero() && !iv.hi.is_zero());
            assert_eq!(iv.lo.is_positive(), iv.hi.is_positive());
        }
        // zero root is isolated like any other
        let ivs = isolate_real_roots(&UniPoly::from_ints(&[0, -1, 0, 1]));
        assert_eq!(ivs.len(), 3);
        assert!(ivs[1].contains(&int(0)));
    }

    #[test]
    fn refinement_narrows() {
        let u = UniPoly::from_ints(&[-2, 0, 1]);
        let iv = isolate_real_roots(&u).pop().unwrap();
        let r = refine_root(&u, &iv, &frac(1, 1 << 20));
        assert!(r.width() < frac(1, 1 << 20));
        assert!(&r.lo * &r.lo < int(2) && &r.hi * &r.hi > int(2));
    }
}
