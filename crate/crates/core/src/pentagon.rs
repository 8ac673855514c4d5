//! Pentagon construction from an anchor point and the brute-force simplicity oracle.

use std::f64::consts::{FRAC_PI_3, PI};
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::projection::{ChartId, Solid};
use crate::sphere::{angular_distance, arc_intersect, minor_arc, GreatArc, Rotation, UnitVec, ANGLE_TOL};

/// Pentagon edges in boundary order V → A → W → C → E → B → V.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Edge {
    A1,
    A2,
    C1,
    C2,
    B2,
    B1,
}

impl Edge {
    pub const ALL: [Edge; 6] = [Edge::A1, Edge::A2, Edge::C1, Edge::C2, Edge::B2, Edge::B1];

    pub fn name(self) -> &'static str {
        match self {
            Edge::A1 => "a1",
            Edge::A2 => "a2",
            Edge::C1 => "c1",
            Edge::C2 => "c2",
            Edge::B2 => "b2",
            Edge::B1 => "b1",
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct Pentagon {
    pub solid: Solid,
    pub v: UnitVec,
    pub a: UnitVec,
    /// End of a2.
    pub w: UnitVec,
    /// Junction of c1 and c2.
    pub c: UnitVec,
    /// End of b2.
    pub e: UnitVec,
    pub b: UnitVec,
    edges: [GreatArc; 6],
}

impl Pentagon {
    pub fn edge(&self, e: Edge) -> &GreatArc {
        &self.edges[e as usize]
    }

    pub fn edges(&self) -> &[GreatArc; 6] {
        &self.edges
    }

    /// Edge lengths a, b, c with c = |c1| + |c2|.
    pub fn edge_lengths(&self) -> (f64, f64, f64) {
        (
            self.edge(Edge::A1).length(),
            self.edge(Edge::B1).length(),
            self.edge(Edge::C1).length() + self.edge(Edge::C2).length(),
        )
    }

    /// The pentagon carried by a rotation (used for the other tiles of the face).
    pub fn rotated(&self, r: &Rotation) -> Pentagon {
        let map = |p: &UnitVec| r.apply(p);
        let edges = self.edges.map(|arc| minor_arc(map(&arc.u()), map(&arc.v())).expect("rotation preserves arcs"));
        Pentagon {
            solid: self.solid,
            v: map(&self.v),
            a: map(&self.a),
            w: map(&self.w),
            c: map(&self.c),
            e: map(&self.e),
            b: map(&self.b),
            edges,
        }
    }
}

/// Builds the subdivision pentagon determined by the anchor `v`.
pub fn anchor_pentagon(solid: Solid, v: UnitVec) -> Result<Pentagon> {
    let g = solid.geometry();
    if angular_distance(&v, &g.a) < ANGLE_TOL || angular_distance(&v, &g.b) < ANGLE_TOL {
        return Err(Error::DegenerateAnchor);
    }
    let w = g.frame(ChartId::A).turn(-2.0 * FRAC_PI_3).apply(&v);
    let e = g.frame(ChartId::B).turn(2.0 * PI / solid.n() as f64).apply(&v);
    let arc = |u: UnitVec, t: UnitVec| {
        minor_arc(u, t).map_err(|err| match err {
            Error::AntipodalEndpoints => Error::AntipodalConstruction,
            _ => Error::DegenerateAnchor,
        })
    };
    let edges = [arc(v, g.a)?, arc(g.a, w)?, arc(w, g.c)?, arc(g.c, e)?, arc(e, g.b)?, arc(g.b, v)?];
    Ok(Pentagon { solid, v, a: g.a, w, c: g.c, e, b: g.b, edges })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    Crossing,
    Overlap,
    EndpointDegenerate,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub edges: (Edge, Edge),
    pub kind: ViolationKind,
    pub witness: [f64; 3],
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimplicityReport {
    pub simple: bool,
    pub violations: Vec<Violation>,
}

/// Tests all 15 edge pairs. Adjacent edges may only share their common vertex.
pub fn is_simple(p: &Pentagon, tol: f64) -> SimplicityReport {
    let mut violations = Vec::new();
    for i in 0..6 {
        for j in i + 1..6 {
            let (s, t) = (&p.edges[i], &p.edges[j]);
            let pair = (Edge::ALL[i], Edge::ALL[j]);
            let hit = arc_intersect(s, t, tol);
            let shared = if j == i + 1 {
                Some((s.v(), s.u(), t.v()))
            } else if i == 0 && j == 5 {
                Some((s.u(), s.v(), t.u()))
            } else {
                None
            };
            match shared {
                Some((x, s_far, t_far)) => {
                    if hit.overlap {
                        if folds_back(&x, &s_far, &t_far) {
                            let witness = if s.length() < t.length() { s_far } else { t_far };
                            violations.push(Violation {
                                edges: pair,
                                kind: ViolationKind::Overlap,
                                witness: witness.to_array(),
                            });
                        }
                    } else if let Some(q) = hit.points.iter().find(|q| angular_distance(q, &x) > tol) {
                        violations.push(Violation {
                            edges: pair,
                            kind: ViolationKind::Crossing,
                            witness: q.to_array(),
                        });
                    }
                }
                None => {
                    if let Some(q) = hit.points.first() {
                        let kind = if hit.overlap {
                            ViolationKind::Overlap
                        } else if [s.u(), s.v(), t.u(), t.v()].iter().any(|e| angular_distance(e, q) <= tol) {
                            ViolationKind::EndpointDegenerate
                        } else {
                            ViolationKind::Crossing
                        };
                        violations.push(Violation { edges: pair, kind, witness: q.to_array() });
                    }
                }
            }
        }
    }
    SimplicityReport { simple: violations.is_empty(), violations }
}

/// Two coplanar arcs leaving `x` toward `a` and `b` run back over each other.
fn folds_back(x: &UnitVec, a: &UnitVec, b: &UnitVec) -> bool {
    match (x.tangent_toward(a), x.tangent_toward(b)) {
        (Ok(ta), Ok(tb)) => ta.dot(&tb) > 0.0,
        _ => true,
    }
}

/// Ground-truth membership: the anchor yields a simple pentagon.
pub fn oracle_in_moduli(solid: Solid, v: &UnitVec) -> bool {
    match anchor_pentagon(solid, *v) {
        Ok(p) => is_simple(&p, ANGLE_TOL).simple,
        Err(_) => false,
    }
}
