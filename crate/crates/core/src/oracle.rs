//! One-sided numerical boundedness probe: sample `p` at exact rational points
//! of circles `x^2 + y^2 = R^2` and look for sign changes between neighbours.
//!
//! A sign change between two adjacent samples proves a curve point of norm
//! exactly `R` on the arc between them. No sign change proves nothing.

use std::cmp::Ordering;
use std::f64::consts::PI;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::algebra::rational::{denominator_lcm, sign, Rational};
use crate::algebra::SparsePoly;

pub fn default_radii() -> Vec<Rational> {
    [10, 100, 1_000, 10_000]
        .into_iter()
        .map(|r: i64| Rational::from_integer(r.into()))
        .collect()
}

pub const DEFAULT_SAMPLES: usize = 512;

/// Position on the circle in half-angle form: `u = tan(theta / 2)`.
/// `Infinity` is the point `(-R, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ArcParam {
    Finite(Rational),
    Infinity,
}

impl ArcParam {
    /// Point on the circle of radius `r`.
    pub fn point(&self, r: &Rational) -> (Rational, Rational) {
        match self {
            ArcParam::Infinity => (-r.clone(), Rational::zero()),
            ArcParam::Finite(u) => {
                let u2 = u * u;
                let den = Rational::one() + &u2;
                (r * (Rational::one() - u2) / &den, r * Rational::from_integer(2.into()) * u / den)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProbeOutcome {
    /// All samples strictly positive or all strictly negative.
    ConstantSign,
    /// Some adjacent pair has strictly opposite signs.
    SignChange,
    /// Zeros among the samples, but no strict sign change.
    Contact,
    /// Every sample is zero.
    AllZero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CircleProbe {
    pub radius: Rational,
    pub samples: usize,
    /// Sample parameters in angular order, starting at `Infinity`.
    pub params: Vec<ArcParam>,
    /// Indices `(i, (i + 1) % samples)` with opposite signs.
    pub sign_changes: Vec<(usize, usize)>,
    pub zero_samples: Vec<usize>,
    pub outcome: ProbeOutcome,
}

/// Integer form of `p` used for exact sign evaluation.
struct IntegerForm {
    terms: Vec<(u32, u32, BigInt)>,
    degree: u32,
}

impl IntegerForm {
    fn new(p: &SparsePoly) -> Self {
        let lcm = denominator_lcm(p.terms().map(|(_, c)| c));
        let terms = p
            .terms()
            .map(|(&(k, l), c)| (k, l, (c * Rational::from_integer(lcm.clone())).to_integer()))
            .collect();
        Self {
            terms,
            degree: p.total_degree() as u32,
        }
    }

    /// Sign of `p(X/D, Y/D)` for integers `X, Y` and `D > 0`.
    fn sign_at(&self, x: &BigInt, y: &BigInt, d: &BigInt) -> Ordering {
        let mut acc = BigInt::zero();
        for (k, l, c) in &self.terms {
            let scale = num_traits::pow(d.clone(), (self.degree - k - l) as usize);
            acc += c * num_traits::pow(x.clone(), *k as usize) * num_traits::pow(y.clone(), *l as usize) * scale;
        }
        int_sign(&acc)
    }

    fn sign_on_circle(&self, param: &ArcParam, r: &Rational) -> Ordering {
        let (rn, rd) = (r.numer(), r.denom());
        match param {
            ArcParam::Infinity => self.sign_at(&-rn, &BigInt::zero(), rd),
            ArcParam::Finite(u) => {
                let (pn, qd) = (u.numer(), u.denom());
                let (p2, q2) = (pn * pn, qd * qd);
                let x = rn * (&q2 - &p2);
                let y = rn * BigInt::from(2) * pn * qd;
                let d = rd * (q2 + p2);
                self.sign_at(&x, &y, &d)
            }
        }
    }
}

fn int_sign(n: &BigInt) -> Ordering {
    n.cmp(&BigInt::zero())
}

/// Sample parameters: `Infinity`, then `tan(theta_j / 2)` rounded to a
/// multiple of 2^-24 for `theta_j = -pi + 2 pi j / samples`.
pub fn sample_params(samples: usize) -> Vec<ArcParam> {
    let scale: BigInt = BigInt::one() << 24;
    let mut params = vec![ArcParam::Infinity];
    for j in 1..samples {
        let theta = -PI + 2.0 * PI * j as f64 / samples as f64;
        let u = ((theta / 2.0).tan() * (1u64 << 24) as f64).round();
        params.push(ArcParam::Finite(Rational::new(BigInt::from(u as i64), scale.clone())));
    }
    params
}

pub fn probe_circle(p: &SparsePoly, radius: &Rational, samples: usize) -> CircleProbe {
    assert!(samples >= 8, "at least 8 samples");
    assert!(radius.is_positive(), "radius must be positive");
    let form = IntegerForm::new(p);
    let params = sample_params(samples);
    let signs: Vec<Ordering> = params.iter().map(|u| form.sign_on_circle(u, radius)).collect();
    let sign_changes: Vec<(usize, usize)> = (0..samples)
        .map(|i| (i, (i + 1) % samples))
        .filter(|&(i, j)| {
            signs[i] != Ordering::Equal && signs[j] != Ordering::Equal && signs[i] != signs[j]
        })
        .collect();
    let zero_samples: Vec<usize> = (0..samples).filter(|&i| signs[i] == Ordering::Equal).collect();
    let outcome = if zero_samples.len() == samples {
        ProbeOutcome::AllZero
    } else if !sign_changes.is_empty() {
        ProbeOutcome::SignChange
    } else if !zero_samples.is_empty() {
        ProbeOutcome::Contact
    } else {
        ProbeOutcome::ConstantSign
    };
    CircleProbe {
        radius: radius.clone(),
        samples,
        params,
        sign_changes,
        zero_samples,
        outcome,
    }
}

/// Parameter along the arc between two adjacent samples. Pairs touching
/// `Infinity` use `v = 1/u`, which is 0 at the point `(-R, 0)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArcCrossing {
    pub lo: (Rational, Rational),
    pub hi: (Rational, Rational),
}

fn arc_point(v_form: bool, w: &Rational, r: &Rational) -> (Rational, Rational) {
    if v_form {
        // u = 1/w, written so w = 0 is valid
        let w2 = w * w;
        let den = Rational::one() + &w2;
        (r * (w2 - Rational::one()) / &den, r * Rational::from_integer(2.into()) * w / den)
    } else {
        ArcParam::Finite(w.clone()).point(r)
    }
}

/// Bisects the arc between sign-change samples `(i, j)` of `probe` for
/// `steps` rounds. Both returned points lie exactly on the circle and `p`
/// has strictly opposite signs at them.
pub fn refine_crossing(p: &SparsePoly, probe: &CircleProbe, (i, j): (usize, usize), steps: usize) -> ArcCrossing {
    let r = &probe.radius;
    let (v_form, mut a, mut b) = match (&probe.params[i], &probe.params[j]) {
        (ArcParam::Finite(u), ArcParam::Finite(w)) => (false, u.clone(), w.clone()),
        (ArcParam::Finite(u), ArcParam::Infinity) => (true, u.recip(), Rational::zero()),
        (ArcParam::Infinity, ArcParam::Finite(w)) => (true, Rational::zero(), w.recip()),
        _ => unreachable!("one Infinity sample"),
    };
    let sign_of = |w: &Rational| {
        let (x, y) = arc_point(v_form, w, r);
        sign(&p.evaluate(&x, &y))
    };
    let sa = sign_of(&a);
    for _ in 0..steps {
        let mid = (&a + &b) / Rational::from_integer(2.into());
        let sm = sign_of(&mid);
        if sm == Ordering::Equal {
            a = mid.clone();
            b = mid;
            break;
        }
        if sm == sa {
            a = mid;
        } else {
            b = mid;
        }
    }
    ArcCrossing {
        lo: arc_point(v_form, &a, r),
        hi: arc_point(v_form, &b, r),
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvidenceReport {
    pub probes: Vec<CircleProbe>,
    /// The largest radius shows a sign change.
    pub unbounded_evidence: bool,
}

pub fn unboundedness_evidence(p: &SparsePoly, radii: &[Rational], samples: usize) -> EvidenceReport {
    assert!(!radii.is_empty(), "at least one radius");
    let probes: Vec<CircleProbe> = radii.iter().map(|r| probe_circle(p, r, samples)).collect();
    let unbounded_evidence = probes
        .iter()
        .max_by(|a, b| a.radius.cmp(&b.radius))
        .is_some_and(|pr| pr.outcome == ProbeOutcome::SignChange);
    EvidenceReport {
        probes,
        unbounded_evidence,
    }
}
