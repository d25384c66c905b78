//! Explicit unbounded point families for certified noncompact curves.
//!
//! Along the monomial path `x = t^r n^a`, `y = t^s n^b` the terms of an outer
//! edge collapse to `t^(r k' + s l') n^h e(t)`, which dominates the rest of
//! the polynomial for large `n`. A sign change of the edge polynomial then
//! forces a sign change of `p` along the path, hence a curve point, at every
//! large enough scale `n`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::algebra::rational::{pow_i64, sign, simplest_between};
use crate::algebra::{extended_gcd, yun_squarefree, Rational, RootInterval, SparsePoly, UniPoly};
use crate::decision::{Status, Verdict, Violation};
use crate::newton::{edge_polynomial, EdgeData};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WitnessError {
    #[error("cannot bracket a sign change: {0}")]
    BracketFailure(String),
    #[error("edge is not outer")]
    NotOuter,
    #[error("scales must be positive and strictly increasing")]
    InvalidScales,
    #[error("bisection width must be positive")]
    InvalidWidth,
    #[error("no sign change at any of the given scales; try larger scales")]
    NoSignChangeAtAllScales,
    #[error("verdict is not NoncompactCertified")]
    NotNoncompact,
}

pub fn default_scales() -> Vec<u64> {
    vec![2, 4, 16, 256, 65536]
}

/// 2^-32
pub fn default_width() -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << 32)
}

/// Two same-signed points where the edge polynomial is negative and positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignBracket {
    pub t_minus: Rational,
    pub t_plus: Rational,
}

/// Narrows `interval`, which must isolate one odd-order root of `e` and
/// exclude 0, until `e` is nonzero at both ends.
pub fn find_sign_bracket(e: &UniPoly, interval: &RootInterval) -> Result<SignBracket, WitnessError> {
    let fail = |why: &str| Err(WitnessError::BracketFailure(why.to_string()));
    let (mut lo, mut hi) = (interval.lo.clone(), interval.hi.clone());
    if lo >= hi {
        return fail("empty interval");
    }
    if !(lo.is_positive() && hi.is_positive() || lo.is_negative() && hi.is_negative()) {
        return fail("interval touches or contains 0");
    }
    let odd = yun_squarefree(e).odd_part();
    let slo = sign(&odd.eval(&lo));
    let shi = sign(&odd.eval(&hi));
    if slo == std::cmp::Ordering::Equal || shi == std::cmp::Ordering::Equal || slo == shi {
        return fail("interval does not isolate an odd-order root");
    }
    let two = Rational::from_integer(2.into());
    for _ in 0..4096 {
        let (elo, ehi) = (e.eval(&lo), e.eval(&hi));
        if !elo.is_zero() && !ehi.is_zero() {
            if elo.is_positive() == ehi.is_positive() {
                return fail("edge polynomial keeps its sign");
            }
            let (t_minus, t_plus) = if elo.is_negative() { (lo, hi) } else { (hi, lo) };
            return Ok(SignBracket { t_minus, t_plus });
        }
        // an even-order root sits on an endpoint; close in on the odd root
        let mid = (&lo + &hi) / &two;
        let smid = sign(&odd.eval(&mid));
        if smid == std::cmp::Ordering::Equal {
            let quarter = (&hi - &lo) / Rational::from_integer(4.into());
            lo = &mid - &quarter;
            hi = &mid + &quarter;
        } else if smid == slo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    fail("no bracket after 4096 bisections")
}

/// Monomial path `x = t^r n^a`, `y = t^s n^b` through an outer edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPath {
    pub edge: EdgeData,
    pub r: i64,
    pub s: i64,
    pub a: i64,
    pub b: i64,
    pub bracket: SignBracket,
    /// Maximum of `a k + b l` over the Newton polygon, attained on the edge.
    pub h: i64,
}

impl WitnessPath {
    pub fn point(&self, t: &Rational, n: u64) -> (Rational, Rational) {
        let n = Rational::from_integer(n.into());
        (
            pow_i64(t, self.r) * pow_i64(&n, self.a),
            pow_i64(t, self.s) * pow_i64(&n, self.b),
        )
    }

    /// `g_n(t) = p(x_n(t), y_n(t))` as a Laurent polynomial in `t`.
    pub fn compose(&self, p: &SparsePoly, n: u64) -> LaurentPoly {
        let n = Rational::from_integer(n.into());
        let mut terms: BTreeMap<i64, Rational> = BTreeMap::new();
        for (&(k, l), c) in p.terms() {
            let (k, l) = (k as i64, l as i64);
            let coeff = c * pow_i64(&n, self.a * k + self.b * l);
            *terms.entry(self.r * k + self.s * l).or_insert_with(Rational::zero) += coeff;
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentPoly { terms }
    }
}

/// Finite sum of `c t^e` with integer (possibly negative) exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    pub terms: BTreeMap<i64, Rational>,
}

impl LaurentPoly {
    /// Panics at `t = 0` when a negative exponent is present.
    pub fn eval(&self, t: &Rational) -> Rational {
        self.terms
            .iter()
            .map(|(&e, c)| c * pow_i64(t, e))
            .fold(Rational::zero(), |acc, v| acc + v)
    }
}

/// Chooses the path for an outer edge with a bracketed odd-order root.
pub fn build_path(edge: &EdgeData, bracket: SignBracket) -> Result<WitnessPath, WitnessError> {
    let (a, b) = edge.outer_normal().ok_or(WitnessError::NotOuter)?;
    let (g, r, s) = extended_gcd(edge.p, edge.q);
    debug_assert_eq!(g, 1);
    debug_assert_eq!(a * edge.p + b * edge.q, 0);
    Ok(WitnessPath {
        edge: edge.clone(),
        r,
        s,
        a,
        b,
        bracket,
        h: a * edge.start.0 + b * edge.start.1,
    })
}

/// A certified sign change of `p` along the path at scale `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPoint {
    pub n: u64,
    /// `g_n` has strictly opposite signs at the ends, or `lo == hi` and
    /// `g_n` vanishes there exactly.
    pub t_lo: Rational,
    pub t_hi: Rational,
    /// Path image of the interval midpoint.
    pub x: Rational,
    pub y: Rational,
    /// `|p(x, y)|`
    pub residual: Rational,
}

impl WitnessPoint {
    pub fn max_norm(&self) -> Rational {
        self.x.abs().max(self.y.abs())
    }

    pub fn is_exact(&self) -> bool {
        self.t_lo == self.t_hi
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathWitnesses {
    pub points: Vec<WitnessPoint>,
    /// Scales at which the sign change had not yet appeared.
    pub skipped_scales: Vec<u64>,
}

fn check_scales(scales: &[u64]) -> Result<(), WitnessError> {
    let increasing = scales.windows(2).all(|w| w[0] < w[1]);
    if scales.is_empty() || scales[0] == 0 || !increasing {
        return Err(WitnessError::InvalidScales);
    }
    Ok(())
}

pub fn generate_witnesses(
    p: &SparsePoly,
    path: &WitnessPath,
    scales: &[u64],
    width: &Rational,
) -> Result<PathWitnesses, WitnessError> {
    check_scales(scales)?;
    if !width.is_positive() {
        return Err(WitnessError::InvalidWidth);
    }
    let mut out = PathWitnesses {
        points: Vec::new(),
        skipped_scales: Vec::new(),
    };
    let (t0, t1) = (&path.bracket.t_minus, &path.bracket.t_plus);
    let (lo, hi) = if t0 < t1 { (t0, t1) } else { (t1, t0) };
    for &n in scales {
        let g = path.compose(p, n);
        match bisect(&g, lo.clone(), hi.clone(), width) {
            Some((t_lo, t_hi)) => {
                let mid = (&t_lo + &t_hi) / Rational::from_integer(2.into());
                let (x, y) = path.point(&mid, n);
                let residual = p.evaluate(&x, &y).abs();
                out.points.push(WitnessPoint {
                    n,
                    t_lo,
                    t_hi,
                    x,
                    y,
                    residual,
                });
            }
            None => out.skipped_scales.push(n),
        }
    }
    if out.points.is_empty() {
        return Err(WitnessError::NoSignChangeAtAllScales);
    }
    Ok(out)
}

/// Bisects a sign change of `g` on `[lo, hi]` down to `width`. Split points
/// are the simplest rationals in the middle half, which lands exactly on
/// small rational roots. Returns `None` when `g` has equal nonzero signs at
/// the ends.
fn bisect(g: &LaurentPoly, mut lo: Rational, mut hi: Rational, width: &Rational) -> Option<(Rational, Rational)> {
    let glo = g.eval(&lo);
    let ghi = g.eval(&hi);
    if glo.is_zero() {
        return Some((lo.clone(), lo));
    }
    if ghi.is_zero() {
        return Some((hi.clone(), hi));
    }
    if glo.is_positive() == ghi.is_positive() {
        return None;
    }
    let lo_positive = glo.is_positive();
    let four = Rational::from_integer(4.into());
    while &(&hi - &lo) > width {
        let quarter = (&hi - &lo) / &four;
        let c = simplest_between(&(&lo + &quarter), &(&hi - &quarter));
        let gc = g.eval(&c);
        if gc.is_zero() {
            return Some((c.clone(), c));
        }
        if gc.is_positive() == lo_positive {
            lo = c;
        } else {
            hi = c;
        }
    }
    assert!(
        g.eval(&lo).is_positive() != g.eval(&hi).is_positive(),
        "bisection lost its sign change"
    );
    Some((lo, hi))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    /// `p` divisible by `x`: the line `x = 0` lies on the curve.
    YAxis,
    /// `p` divisible by `y`: the line `y = 0` lies on the curve.
    XAxis,
}

/// Points `(0, n)` or `(n, 0)`, exact curve points when `p` has the axis as a factor.
pub fn axis_witnesses(p: &SparsePoly, axis: Axis, scales: &[u64]) -> Result<Vec<WitnessPoint>, WitnessError> {
    check_scales(scales)?;
    Ok(scales
        .iter()
        .map(|&n| {
            let t = Rational::from_integer(n.into());
            let (x, y) = match axis {
                Axis::YAxis => (Rational::zero(), t.clone()),
                Axis::XAxis => (t.clone(), Rational::zero()),
            };
            let residual = p.evaluate(&x, &y).abs();
            WitnessPoint {
                n,
                t_lo: t.clone(),
                t_hi: t,
                x,
                y,
                residual,
            }
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Axis { axis: Axis, points: Vec<WitnessPoint> },
    Path { path: WitnessPath, witnesses: PathWitnesses },
}

/// Witness for the primary violation of a noncompact verdict.
pub fn witness_for_verdict(
    p: &SparsePoly,
    verdict: &Verdict,
    scales: &[u64],
    width: &Rational,
) -> Result<Witness, WitnessError> {
    if verdict.status != Status::NoncompactCertified {
        return Err(WitnessError::NotNoncompact);
    }
    match verdict.primary_violation().ok_or(WitnessError::NotNoncompact)? {
        Violation::DivisibleByX => Ok(Witness::Axis {
            axis: Axis::YAxis,
            points: axis_witnesses(p, Axis::YAxis, scales)?,
        }),
        Violation::DivisibleByY => Ok(Witness::Axis {
            axis: Axis::XAxis,
            points: axis_witnesses(p, Axis::XAxis, scales)?,
        }),
        Violation::OddOrderRoot { edge_index, interval } => {
            let edge = &verdict.polygon.edges[*edge_index];
            let e = edge_polynomial(p, edge);
            let bracket = find_sign_bracket(&e.poly, interval)?;
            let path = build_path(edge, bracket)?;
            let witnesses = generate_witnesses(p, &path, scales, width)?;
            Ok(Witness::Path { path, witnesses })
        }
    }
}
