//! Newton polygon of a bivariate polynomial: hull of the support, oriented
//! edges with outward normals, and edge polynomials.

use std::collections::BTreeSet;

use num_integer::Integer;
use num_traits::Zero;

use crate::algebra::{Rational, SparsePoly, UniPoly};

pub type LatticePoint = (i64, i64);

pub fn support(p: &SparsePoly) -> BTreeSet<LatticePoint> {
    p.terms()
        .map(|(&(k, l), _)| (k as i64, l as i64))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HullKind {
    Point,
    Segment,
    Polygon,
}

/// Oriented hull edge from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeData {
    pub start: LatticePoint,
    pub end: LatticePoint,
    /// Number of lattice steps along the edge.
    pub d: i64,
    /// Primitive direction `(p, q)`, so `end = start + d * (p, q)`.
    pub p: i64,
    pub q: i64,
    /// Primitive outward normals, preferred qualifying normal first. Polygon
    /// edges have one; a segment hull has two.
    pub normals: Vec<LatticePoint>,
    pub is_outer: bool,
    /// `a*k + b*l` on the edge, for the first normal.
    pub support_value: i64,
}

impl EdgeData {
    fn new(start: LatticePoint, end: LatticePoint, mut normals: Vec<LatticePoint>) -> Self {
        let (dk, dl) = (end.0 - start.0, end.1 - start.1);
        let d = dk.gcd(&dl);
        // qualifying (a > 0 or b > 0) first, then a > 0, then lexicographically largest
        normals.sort_by_key(|&(a, b)| std::cmp::Reverse((qualifies((a, b)), a > 0, (a, b))));
        let is_outer = normals.iter().any(|&n| qualifies(n));
        let (a, b) = normals[0];
        Self {
            start,
            end,
            d,
            p: dk / d,
            q: dl / d,
            support_value: a * start.0 + b * start.1,
            normals,
            is_outer,
        }
    }

    /// Preferred normal with a positive component, if any.
    pub fn outer_normal(&self) -> Option<LatticePoint> {
        self.normals.iter().copied().find(|&n| qualifies(n))
    }

    /// The `i`-th lattice point along the edge, `0 <= i <= d`.
    pub fn lattice_point(&self, i: i64) -> LatticePoint {
        (self.start.0 + i * self.p, self.start.1 + i * self.q)
    }

    pub fn reversed(&self) -> Self {
        Self::new(self.end, self.start, self.normals.clone())
    }
}

fn qualifies((a, b): LatticePoint) -> bool {
    a > 0 || b > 0
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonPolygon {
    /// Hull vertices, counterclockwise; a segment lists its lexicographically
    /// smaller endpoint first.
    pub vertices: Vec<LatticePoint>,
    pub edges: Vec<EdgeData>,
    pub kind: HullKind,
}

impl NewtonPolygon {
    pub fn of(p: &SparsePoly) -> Self {
        classify_edges(convex_hull(&support(p)))
    }

    pub fn outer_edges(&self) -> impl Iterator<Item = (usize, &EdgeData)> {
        self.edges.iter().enumerate().filter(|(_, e)| e.is_outer)
    }
}

fn cross(o: LatticePoint, a: LatticePoint, b: LatticePoint) -> i128 {
    let (ax, ay) = ((a.0 - o.0) as i128, (a.1 - o.1) as i128);
    let (bx, by) = ((b.0 - o.0) as i128, (b.1 - o.1) as i128);
    ax * by - ay * bx
}

/// Monotone-chain hull. Collinear boundary points are dropped; the edge list
/// is left empty for [`classify_edges`] to fill.
pub fn convex_hull(points: &BTreeSet<LatticePoint>) -> NewtonPolygon {
    assert!(!points.is_empty(), "hull of an empty point set");
    let pts: Vec<LatticePoint> = points.iter().copied().collect();
    let kind_for = |v: &Vec<LatticePoint>| match v.len() {
        1 => HullKind::Point,
        2 => HullKind::Segment,
        _ => HullKind::Polygon,
    };
    if pts.len() < 3 {
        let vertices = vec![pts[0], *pts.last().unwrap()];
        let vertices = if pts.len() == 1 { vec![pts[0]] } else { vertices };
        return NewtonPolygon {
            kind: kind_for(&vertices),
            vertices,
            edges: Vec::new(),
        };
    }
    let mut lower: Vec<LatticePoint> = Vec::new();
    for &pt in &pts {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], pt) <= 0 {
            lower.pop();
        }
        lower.push(pt);
    }
    let mut upper: Vec<LatticePoint> = Vec::new();
    for &pt in pts.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], pt) <= 0 {
            upper.pop();
        }
        upper.push(pt);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    let mut vertices = lower;
    if vertices.len() == 2 && vertices[0] > vertices[1] {
        vertices.swap(0, 1);
    }
    NewtonPolygon {
        kind: kind_for(&vertices),
        vertices,
        edges: Vec::new(),
    }
}

/// Fills in oriented edges with primitive outward normals and the outer flag.
pub fn classify_edges(mut hull: NewtonPolygon) -> NewtonPolygon {
    let v = &hull.vertices;
    hull.edges = match hull.kind {
        HullKind::Point => Vec::new(),
        HullKind::Segment => {
            let (dk, dl) = (v[1].0 - v[0].0, v[1].1 - v[0].1);
            let d = dk.gcd(&dl);
            let n = (dl / d, -dk / d);
            vec![EdgeData::new(v[0], v[1], vec![n, (-n.0, -n.1)])]
        }
        HullKind::Polygon => (0..v.len())
            .map(|i| {
                let (s, e) = (v[i], v[(i + 1) % v.len()]);
                let (dk, dl) = (e.0 - s.0, e.1 - s.1);
                let d = dk.gcd(&dl);
                // right-hand normal points outward for a counterclockwise boundary
                EdgeData::new(s, e, vec![(dl / d, -dk / d)])
            })
            .collect(),
    };
    hull
}

/// Edge polynomial: coefficient of `t^i` is the coefficient of `p` at the
/// `i`-th lattice point of the edge (zero where absent).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgePolynomial {
    pub edge: EdgeData,
    pub poly: UniPoly,
}

pub fn edge_polynomial(p: &SparsePoly, edge: &EdgeData) -> EdgePolynomial {
    let coeffs: Vec<Rational> = (0..=edge.d)
        .map(|i| {
            let (k, l) = edge.lattice_point(i);
            if k < 0 || l < 0 {
                Rational::zero()
            } else {
                p.coeff(k as u32, l as u32)
            }
        })
        .collect();
    let poly = UniPoly::new(coeffs);
    debug_assert_eq!(poly.degree(), Some(edge.d as usize));
    debug_assert!(!poly.coeffs()[0].is_zero());
    EdgePolynomial {
        edge: edge.clone(),
        poly,
    }
}
