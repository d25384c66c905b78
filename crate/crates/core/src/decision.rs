//! Three-valued compactness verdict from divisibility and outer edge
//! polynomials.

use crate::algebra::{count_real_roots, odd_order_real_roots, RootInterval, SparsePoly, UniPoly};
use crate::newton::{edge_polynomial, EdgeData, NewtonPolygon};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    CompactCertified,
    NoncompactCertified,
    Unknown,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::CompactCertified => "CompactCertified",
            Status::NoncompactCertified => "NoncompactCertified",
            Status::Unknown => "Unknown",
        }
    }
}

/// Root summary for one outer edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeReport {
    /// Index into [`NewtonPolygon::edges`].
    pub edge_index: usize,
    pub edge: EdgeData,
    pub poly: UniPoly,
    /// Distinct real roots.
    pub real_roots: usize,
    pub odd_order_roots: usize,
    /// Isolating intervals of the odd-order roots.
    pub odd_root_intervals: Vec<RootInterval>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DivisibleByX,
    DivisibleByY,
    OddOrderRoot {
        edge_index: usize,
        interval: RootInterval,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evidence {
    pub divisible_by_x: bool,
    pub divisible_by_y: bool,
    pub edges: Vec<EdgeReport>,
    pub sufficient_holds: bool,
    pub necessary_holds: bool,
    /// Every violated necessary condition, in canonical order: divisibility
    /// first, then edges in hull order. The first entry is the primary one.
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub polygon: NewtonPolygon,
    pub evidence: Evidence,
}

impl Verdict {
    pub fn primary_violation(&self) -> Option<&Violation> {
        self.evidence.violations.first()
    }
}

/// Analyses every outer edge polynomial of `p`.
pub fn outer_edge_reports(p: &SparsePoly, polygon: &NewtonPolygon) -> Vec<EdgeReport> {
    polygon
        .outer_edges()
        .map(|(edge_index, edge)| {
            let poly = edge_polynomial(p, edge).poly;
            let odd = odd_order_real_roots(&poly);
            EdgeReport {
                edge_index,
                edge: edge.clone(),
                real_roots: count_real_roots(&poly),
                odd_order_roots: odd.count,
                odd_root_intervals: odd.intervals,
                poly,
            }
        })
        .collect()
}

fn sufficient(p: &SparsePoly, reports: &[EdgeReport]) -> bool {
    !p.divisible_by_x() && !p.divisible_by_y() && reports.iter().all(|r| r.real_roots == 0)
}

fn violations(p: &SparsePoly, reports: &[EdgeReport]) -> Vec<Violation> {
    let mut out = Vec::new();
    if p.divisible_by_x() {
        out.push(Violation::DivisibleByX);
    }
    if p.divisible_by_y() {
        out.push(Violation::DivisibleByY);
    }
    for r in reports {
        out.extend(r.odd_root_intervals.iter().map(|iv| Violation::OddOrderRoot {
            edge_index: r.edge_index,
            interval: iv.clone(),
        }));
    }
    out
}

/// Sufficient condition: not divisible by `x` or `y`, and no outer edge
/// polynomial has a real root.
pub fn check_sufficient(p: &SparsePoly) -> (bool, Vec<EdgeReport>) {
    let reports = outer_edge_reports(p, &NewtonPolygon::of(p));
    (sufficient(p, &reports), reports)
}

/// Necessary condition: not divisible by `x` or `y`, and no outer edge
/// polynomial has a real root of odd order. Returns the first violation.
pub fn check_necessary(p: &SparsePoly) -> (bool, Option<Violation>) {
    let reports = outer_edge_reports(p, &NewtonPolygon::of(p));
    let v = violations(p, &reports);
    (v.is_empty(), v.into_iter().next())
}

pub fn decide(p: &SparsePoly) -> Verdict {
    assert!(!p.is_zero(), "decide on the zero polynomial");
    let polygon = NewtonPolygon::of(p);
    let edges = outer_edge_reports(p, &polygon);
    let sufficient_holds = sufficient(p, &edges);
    let violations = violations(p, &edges);
    let necessary_holds = violations.is_empty();
    let status = if sufficient_holds {
        Status::CompactCertified
    } else if !necessary_holds {
        Status::NoncompactCertified
    } else {
        Status::Unknown
    };
    Verdict {
        status,
        polygon,
        evidence: Evidence {
            divisible_by_x: p.divisible_by_x(),
            divisible_by_y: p.divisible_by_y(),
            edges,
            sufficient_holds,
            necessary_holds,
            violations,
        },
    }
}
