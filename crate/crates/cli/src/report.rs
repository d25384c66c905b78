//! Report model shared by the text and JSON renderers. Every rational is a
//! `"numerator/denominator"` string.

use std::fmt::Write as _;

use newtonbound::algebra::rational::to_ratio_string;
use newtonbound::algebra::RootInterval;
use newtonbound::newton::{EdgeData, HullKind};
use newtonbound::oracle::{EvidenceReport, ProbeOutcome};
use newtonbound::witness::{Axis, Witness, WitnessPoint};
use newtonbound::{Rational, SparsePoly, Verdict, Violation};
use serde::Serialize;

#[derive(Serialize)]
pub struct Report {
    pub input: String,
    pub support_size: usize,
    pub hull: HullReport,
    pub edges: Vec<EdgeReport>,
    pub outer_edges: Vec<OuterEdgeReport>,
    pub verdict: VerdictReport,
    pub witness: Option<WitnessReport>,
    pub oracle: Option<OracleReport>,
    pub timing: Timing,
}

#[derive(Serialize)]
pub struct HullReport {
    pub kind: &'static str,
    pub vertices: Vec<[i64; 2]>,
}

#[derive(Serialize)]
pub struct EdgeReport {
    pub index: usize,
    pub start: [i64; 2],
    pub end: [i64; 2],
    pub d: i64,
    pub p: i64,
    pub q: i64,
    pub normals: Vec<[i64; 2]>,
    pub outer: bool,
    pub support_value: i64,
}

#[derive(Serialize)]
pub struct OuterEdgeReport {
    pub edge: usize,
    pub coefficients: Vec<String>,
    pub real_roots: usize,
    pub odd_order_roots: usize,
    pub odd_root_intervals: Vec<[String; 2]>,
}

#[derive(Serialize)]
pub struct VerdictReport {
    pub status: &'static str,
    pub sufficient: bool,
    pub necessary: bool,
    pub divisible_by_x: bool,
    pub divisible_by_y: bool,
    pub violations: Vec<ViolationReport>,
    /// Index into `violations`, present when noncompact.
    pub primary_violation: Option<usize>,
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationReport {
    DivisibleByX,
    DivisibleByY,
    OddOrderRoot { edge: usize, interval: [String; 2] },
}

#[derive(Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum WitnessReport {
    Axis {
        /// `"x=0"` or `"y=0"`: the line contained in the curve.
        line: &'static str,
        points: Vec<PointReport>,
    },
    Path {
        edge: usize,
        r: i64,
        s: i64,
        a: i64,
        b: i64,
        h: i64,
        t_minus: String,
        t_plus: String,
        points: Vec<PointReport>,
        skipped_scales: Vec<u64>,
    },
    Error {
        message: String,
    },
}

#[derive(Serialize)]
pub struct PointReport {
    pub n: u64,
    pub t_interval: [String; 2],
    pub exact: bool,
    pub x: String,
    pub y: String,
    pub residual: String,
}

#[derive(Serialize)]
pub struct OracleReport {
    pub samples: usize,
    pub evidence: &'static str,
    pub probes: Vec<ProbeReport>,
}

#[derive(Serialize)]
pub struct ProbeReport {
    pub radius: String,
    pub outcome: &'static str,
    pub sign_changes: Vec<[usize; 2]>,
    pub zero_samples: usize,
}

#[derive(Serialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

fn interval(iv: &RootInterval) -> [String; 2] {
    [to_ratio_string(&iv.lo), to_ratio_string(&iv.hi)]
}

fn pair(p: (i64, i64)) -> [i64; 2] {
    [p.0, p.1]
}

fn edge_index(verdict: &Verdict, edge: &EdgeData) -> usize {
    verdict
        .polygon
        .edges
        .iter()
        .position(|e| e == edge)
        .expect("witness edge belongs to the polygon")
}

fn point(w: &WitnessPoint) -> PointReport {
    PointReport {
        n: w.n,
        t_interval: [to_ratio_string(&w.t_lo), to_ratio_string(&w.t_hi)],
        exact: w.is_exact(),
        x: to_ratio_string(&w.x),
        y: to_ratio_string(&w.y),
        residual: to_ratio_string(&w.residual),
    }
}

impl Report {
    pub fn new(p: &SparsePoly, verdict: &Verdict) -> Self {
        let ev = &verdict.evidence;
        let polygon = &verdict.polygon;
        Report {
            input: p.to_string(),
            support_size: p.len(),
            hull: HullReport {
                kind: match polygon.kind {
                    HullKind::Point => "point",
                    HullKind::Segment => "segment",
                    HullKind::Polygon => "polygon",
                },
                vertices: polygon.vertices.iter().copied().map(pair).collect(),
            },
            edges: polygon
                .edges
                .iter()
                .enumerate()
                .map(|(index, e)| EdgeReport {
                    index,
                    start: pair(e.start),
                    end: pair(e.end),
                    d: e.d,
                    p: e.p,
                    q: e.q,
                    normals: e.normals.iter().copied().map(pair).collect(),
                    outer: e.is_outer,
                    support_value: e.support_value,
                })
                .collect(),
            outer_edges: ev
                .edges
                .iter()
                .map(|r| OuterEdgeReport {
                    edge: r.edge_index,
                    coefficients: r.poly.coeffs().iter().map(to_ratio_string).collect(),
                    real_roots: r.real_roots,
                    odd_order_roots: r.odd_order_roots,
                    odd_root_intervals: r.odd_root_intervals.iter().map(interval).collect(),
                })
                .collect(),
            verdict: VerdictReport {
                status: verdict.status.as_str(),
                sufficient: ev.sufficient_holds,
                necessary: ev.necessary_holds,
                divisible_by_x: ev.divisible_by_x,
                divisible_by_y: ev.divisible_by_y,
                violations: ev
                    .violations
                    .iter()
                    .map(|v| match v {
                        Violation::DivisibleByX => ViolationReport::DivisibleByX,
                        Violation::DivisibleByY => ViolationReport::DivisibleByY,
                        Violation::OddOrderRoot { edge_index, interval: iv } => {
                            ViolationReport::OddOrderRoot {
                                edge: *edge_index,
                                interval: interval(iv),
                            }
                        }
                    })
                    .collect(),
                primary_violation: (!ev.violations.is_empty()).then_some(0),
            },
            witness: None,
            oracle: None,
            timing: Timing { elapsed_us: 0 },
        }
    }

    pub fn set_witness(&mut self, verdict: &Verdict, w: Result<Witness, String>) {
        self.witness = Some(match w {
            Err(message) => WitnessReport::Error { message },
            Ok(Witness::Axis { axis, points }) => WitnessReport::Axis {
                line: match axis {
                    Axis::YAxis => "x=0",
                    Axis::XAxis => "y=0",
                },
                points: points.iter().map(point).collect(),
            },
            Ok(Witness::Path { path, witnesses }) => WitnessReport::Path {
                edge: edge_index(verdict, &path.edge),
                r: path.r,
                s: path.s,
                a: path.a,
                b: path.b,
                h: path.h,
                t_minus: to_ratio_string(&path.bracket.t_minus),
                t_plus: to_ratio_string(&path.bracket.t_plus),
                points: witnesses.points.iter().map(point).collect(),
                skipped_scales: witnesses.skipped_scales,
            },
        });
    }

    pub fn set_oracle(&mut self, samples: usize, ev: &EvidenceReport) {
        self.oracle = Some(OracleReport {
            samples,
            evidence: if ev.unbounded_evidence {
                "evidence of unboundedness"
            } else {
                "no evidence"
            },
            probes: ev
                .probes
                .iter()
                .map(|pr| ProbeReport {
                    radius: to_ratio_string(&pr.radius),
                    outcome: match pr.outcome {
                        ProbeOutcome::ConstantSign => "constant_sign",
                        ProbeOutcome::SignChange => "sign_change",
                        ProbeOutcome::Contact => "contact",
                        ProbeOutcome::AllZero => "all_zero",
                    },
                    sign_changes: pr.sign_changes.iter().map(|&(i, j)| [i, j]).collect(),
                    zero_samples: pr.zero_samples.len(),
                })
                .collect(),
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable rendering. Rationals are shown exactly, with a decimal
    /// approximation for witness coordinates.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "polynomial: {}", self.input);
        let _ = writeln!(w, "support: {} terms", self.support_size);
        let verts: Vec<String> = self.hull.vertices.iter().map(|v| format!("({},{})", v[0], v[1])).collect();
        let _ = writeln!(w, "newton polygon ({}): {}", self.hull.kind, verts.join(" "));
        for e in &self.edges {
            let normals: Vec<String> = e.normals.iter().map(|n| format!("({},{})", n[0], n[1])).collect();
            let _ = writeln!(
                w,
                "  edge {}: ({},{}) -> ({},{})  d={} dir=({},{}) normal {}{}",
                e.index,
                e.start[0],
                e.start[1],
                e.end[0],
                e.end[1],
                e.d,
                e.p,
                e.q,
                normals.join(" "),
                if e.outer { "  [outer]" } else { "" }
            );
        }
        for o in &self.outer_edges {
            let _ = writeln!(
                w,
                "  outer edge {}: e(t) coefficients [{}]; real roots {}, odd-order {}",
                o.edge,
                o.coefficients.join(", "),
                o.real_roots,
                o.odd_order_roots
            );
        }
        let v = &self.verdict;
        let _ = writeln!(w, "divisible by x: {}, by y: {}", v.divisible_by_x, v.divisible_by_y);
        let _ = writeln!(w, "sufficient condition: {}", if v.sufficient { "holds" } else { "fails" });
        let _ = writeln!(w, "necessary condition: {}", if v.necessary { "holds" } else { "fails" });
        if let Some(first) = v.violations.first() {
            let desc = match first {
                ViolationReport::DivisibleByX => "p is divisible by x".to_string(),
                ViolationReport::DivisibleByY => "p is divisible by y".to_string(),
                ViolationReport::OddOrderRoot { edge, interval } => format!(
                    "odd-order root of edge {edge} polynomial in ({}, {})",
                    interval[0], interval[1]
                ),
            };
            let _ = writeln!(w, "primary violation: {desc} ({} total)", v.violations.len());
        }
        let _ = writeln!(w, "verdict: {}", v.status);
        match &self.witness {
            None => {}
            Some(WitnessReport::Error { message }) => {
                let _ = writeln!(w, "witness: unavailable ({message})");
            }
            Some(WitnessReport::Axis { line, points }) => {
                let _ = writeln!(w, "witness: the line {line} lies on the curve");
                write_points(w, points);
            }
            Some(WitnessReport::Path { edge, r, s, a, b, points, skipped_scales, .. }) => {
                let _ = writeln!(w, "witness path on edge {edge}: x = t^{r} n^{a}, y = t^{s} n^{b}");
                write_points(w, points);
                if !skipped_scales.is_empty() {
                    let sk: Vec<String> = skipped_scales.iter().map(u64::to_string).collect();
                    let _ = writeln!(w, "  no sign change yet at n = {}", sk.join(", "));
                }
            }
        }
        if let Some(o) = &self.oracle {
            let _ = writeln!(w, "oracle ({} samples): {}", o.samples, o.evidence);
            for pr in &o.probes {
                let _ = writeln!(
                    w,
                    "  radius {}: {} ({} sign changes)",
                    pr.radius,
                    pr.outcome,
                    pr.sign_changes.len()
                );
            }
        }
        let _ = writeln!(w, "elapsed: {} us", self.timing.elapsed_us);
        out
    }
}

fn approx(s: &str) -> String {
    let q: Rational = s.parse().expect("ratio string");
    let f = num_traits::ToPrimitive::to_f64(&q).unwrap_or(f64::NAN);
    format!("{f:.6e}")
}

fn write_points(w: &mut String, points: &[PointReport]) {
    for p in points {
        let _ = writeln!(
            w,
            "  n={}: (x, y) ~ ({}, {}) residual {}{}",
            p.n,
            approx(&p.x),
            approx(&p.y),
            approx(&p.residual),
            if p.exact { " (exact curve point)" } else { "" }
        );
    }
}
