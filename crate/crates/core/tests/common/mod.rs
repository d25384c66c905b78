//! Independent oracles and random generators shared by the integration suites.
//! Nothing here calls the root-finding or hull code under test.
#![allow(dead_code)]

use std::collections::BTreeSet;

use newtonbound::algebra::rational::int;
use newtonbound::{Rational, SparsePoly, UniPoly};
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

// ---- plain coefficient-vector polynomials for the root oracle ----

type Coeffs = Vec<Rational>;

fn trim(mut a: Coeffs) -> Coeffs {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn eval(a: &[Rational], t: &Rational) -> Rational {
    a.iter().rev().fold(Rational::zero(), |acc, c| acc * t + c)
}

fn rem(a: &[Rational], b: &[Rational]) -> Coeffs {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    while r.len() > db && !r.is_empty() {
        let q = r.last().unwrap() / b.last().unwrap();
        let shift = r.len() - 1 - db;
        for (j, c) in b.iter().enumerate() {
            r[shift + j] -= &q * c;
        }
        r = trim(r);
    }
    r
}

fn quot(a: &[Rational], b: &[Rational]) -> Coeffs {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![Rational::zero(); a.len().saturating_sub(db)];
    while r.len() > db {
        let c = r.last().unwrap() / b.last().unwrap();
        let shift = r.len() - 1 - db;
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &c * bc;
        }
        q[shift] = c;
        r.pop();
    }
    q
}

fn gcd(a: &[Rational], b: &[Rational]) -> Coeffs {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    a
}

fn deriv(a: &[Rational]) -> Coeffs {
    trim(a.iter().enumerate().skip(1).map(|(i, c)| c * int(i as i64)).collect())
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Coeffs {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_pow(a: &[Rational], n: usize) -> Coeffs {
    (0..n).fold(vec![Rational::one()], |acc, _| poly_mul(&acc, a))
}

/// Sign variations of `(1+y)^n f((lo + hi*y)/(1+y))`; by Descartes' rule this
/// bounds the roots of `f` in `(lo, hi)`, and is exact when it is 0 or 1.
fn descartes(f: &[Rational], lo: &Rational, hi: &Rational) -> usize {
    let n = f.len() - 1;
    let num = vec![lo.clone(), hi.clone()];
    let den = vec![Rational::one(), Rational::one()];
    let mut g = vec![Rational::zero(); n + 1];
    for (i, c) in f.iter().enumerate() {
        let term = poly_mul(&poly_pow(&num, i), &poly_pow(&den, n - i));
        for (j, t) in term.iter().enumerate() {
            g[j] += c * t;
        }
    }
    let signs: Vec<bool> = g.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots, by bisection with Descartes' rule inside the
/// Cauchy bound. Independent of the Sturm code under test.
pub fn bisection_root_count(coeffs: &[Rational]) -> usize {
    let f = trim(coeffs.to_vec());
    if f.len() <= 1 {
        return 0;
    }
    let g = gcd(&f, &deriv(&f));
    let sf = quot(&f, &g);
    if sf.len() <= 1 {
        return 0;
    }
    let lc = sf.last().unwrap().abs();
    let bound = Rational::one()
        + sf[..sf.len() - 1].iter().map(|c| c.abs() / &lc).max().unwrap();
    let mut stack = vec![(-bound.clone(), bound)];
    let mut count = 0;
    while let Some((lo, hi)) = stack.pop() {
        match descartes(&sf, &lo, &hi) {
            0 => {}
            1 => count += 1,
            _ => {
                let mid = (&lo + &hi) / int(2);
                if eval(&sf, &mid).is_zero() {
                    count += 1;
                }
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    count
}

// ---- generators ----

pub fn random_int_uni(rng: &mut TestRng, max_degree: usize, max_coeff: i64) -> UniPoly {
    let deg = rng.gen_range(0..=max_degree);
    let mut c: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-max_coeff..=max_coeff)).collect();
    while c[deg] == 0 {
        c[deg] = rng.gen_range(-max_coeff..=max_coeff);
    }
    UniPoly::from_ints(&c)
}

/// Up to `max_terms` terms of total degree at most `max_degree`, integer
/// coefficients in `[-20, 20] \ {0}`.
pub fn random_sparse(rng: &mut TestRng, max_terms: usize, max_degree: u32) -> SparsePoly {
    loop {
        let n = rng.gen_range(1..=max_terms);
        let mut p = SparsePoly::zero();
        for _ in 0..n {
            let k = rng.gen_range(0..=max_degree);
            let l = rng.gen_range(0..=max_degree - k);
            let mut c = 0;
            while c == 0 {
                c = rng.gen_range(-20..=20);
            }
            p.add_term((k, l), int(c));
        }
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random polynomial plus positive even powers of x and y that tend to make
/// the outer edges root-free.
pub fn random_compact_candidate(rng: &mut TestRng) -> SparsePoly {
    let m = rng.gen_range(1..=4u32);
    let mut p = random_sparse(rng, 8, 2 * m - 1);
    p.add_term((2 * m, 0), int(rng.gen_range(1..=20)));
    p.add_term((0, 2 * m), int(rng.gen_range(1..=20)));
    if rng.gen_bool(0.5) {
        p.add_term((m, m), int(rng.gen_range(1..=20)));
    }
    p
}

// ---- brute-force geometry ----

/// Points of `pts` that are not convex combinations of the others.
pub fn brute_force_extreme_points(pts: &BTreeSet<(i64, i64)>) -> BTreeSet<(i64, i64)> {
    let v: Vec<_> = pts.iter().copied().collect();
    v.iter()
        .copied()
        .filter(|&p| {
            let others: Vec<_> = v.iter().copied().filter(|&q| q != p).collect();
            !in_hull_of(p, &others)
        })
        .collect()
}

fn in_hull_of(p: (i64, i64), others: &[(i64, i64)]) -> bool {
    // on a segment between two others
    for (i, &a) in others.iter().enumerate() {
        for &b in &others[i + 1..] {
            let cross = (b.0 - a.0) * (p.1 - a.1) - (b.1 - a.1) * (p.0 - a.0);
            let dot = (p.0 - a.0) * (b.0 - a.0) + (p.1 - a.1) * (b.1 - a.1);
            let len2 = (b.0 - a.0).pow(2) + (b.1 - a.1).pow(2);
            if cross == 0 && dot >= 0 && dot <= len2 {
                return true;
            }
        }
    }
    // inside a triangle of three others (barycentric coordinates, exact)
    let q = |n: i64| Rational::from_integer(n.into());
    for (i, &a) in others.iter().enumerate() {
        for (j, &b) in others.iter().enumerate().skip(i + 1) {
            for &c in &others[j + 1..] {
                let det = (b.0 - a.0) * (c.1 - a.1) - (c.0 - a.0) * (b.1 - a.1);
                if det == 0 {
                    continue;
                }
                let det = q(det);
                let l1 = q((p.0 - a.0) * (c.1 - a.1) - (c.0 - a.0) * (p.1 - a.1)) / &det;
                let l2 = q((b.0 - a.0) * (p.1 - a.1) - (p.0 - a.0) * (b.1 - a.1)) / &det;
                let l0 = Rational::one() - &l1 - &l2;
                if !l0.is_negative() && !l1.is_negative() && !l2.is_negative() {
                    return true;
                }
            }
        }
    }
    false
}

pub fn x_times(p: &SparsePoly) -> SparsePoly {
    p.shift(1, 0)
}

pub fn y_times(p: &SparsePoly) -> SparsePoly {
    p.shift(0, 1)
}
