//! The topological graph model: drawings, validation, crossing graphs,
//! pairwise-crossing cliques, quasi-planarity, and bisection width.

mod bisection;
mod clique;

pub use bisection::{
    bisection_width, check_bisection_inequality, BisectionCertificate, BisectionInequalityReport,
    BisectionMode, SimpleGraph, DEFAULT_EXACT_BISECTION_LIMIT,
};
pub use clique::{has_clique_of_size, has_clique_of_size_in, max_clique};

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::geometry::{
    curve_crossings, intersection_count, is_x_monotone, on_segment, CrossingPoint, GeometryError,
    Point, PolylineCurve,
};
use crate::{Error, Result};

/// A drawn vertex: id plus exact location.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vertex {
    pub id: u32,
    pub location: Point,
}

/// A drawn edge: unordered endpoint pair plus its curve.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub endpoints: (u32, u32),
    pub curve: PolylineCurve,
}

/// A topological graph: vertices at exact points, edges as polyline curves.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Drawing {
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
}

/// A single validation failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "kebab-case")]
pub enum Violation {
    DuplicateVertexId { id: u32 },
    CoincidentVertices { a: u32, b: u32 },
    DanglingVertexId { edge: usize, id: u32 },
    SelfLoop { edge: usize },
    ParallelEdges { first: usize, second: usize },
    EndpointMismatch { edge: usize },
    CurveThroughVertex { edge: usize, vertex: u32 },
    InvalidCurve { edge: usize, reason: String },
    Tangency { first: usize, second: usize, detail: String },
    Overlap { first: usize, second: usize, detail: String },
    CoincidentCrossings { detail: String },
}

/// Outcome of validating a drawing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub simple: bool,
    pub x_monotone: bool,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl Drawing {
    pub fn new(vertices: Vec<Vertex>, edges: Vec<Edge>) -> Self {
        Drawing { vertices, edges }
    }

    pub fn vertex(&self, id: u32) -> Option<&Vertex> {
        self.vertices.iter().find(|v| v.id == id)
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// Checks every structural and geometric invariant, reporting all
    /// violations rather than stopping at the first.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();

        let mut seen_ids = BTreeSet::new();
        for v in &self.vertices {
            if !seen_ids.insert(v.id) {
                violations.push(Violation::DuplicateVertexId { id: v.id });
            }
        }
        for (i, a) in self.vertices.iter().enumerate() {
            for b in &self.vertices[i + 1..] {
                if a.location == b.location && a.id != b.id {
                    violations.push(Violation::CoincidentVertices { a: a.id, b: b.id });
                }
            }
        }

        let mut pairs = BTreeSet::new();
        let mut pair_first: BTreeMap<(u32, u32), usize> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            let (u, v) = e.endpoints;
            if u == v {
                violations.push(Violation::SelfLoop { edge: i });
                continue;
            }
            let key = (u.min(v), u.max(v));
            if !pairs.insert(key) {
                violations.push(Violation::ParallelEdges {
                    first: pair_first[&key],
                    second: i,
                });
            } else {
                pair_first.insert(key, i);
            }
            let (vu, vv) = (self.vertex(u), self.vertex(v));
            if vu.is_none() {
                violations.push(Violation::DanglingVertexId { edge: i, id: u });
            }
            if vv.is_none() {
                violations.push(Violation::DanglingVertexId { edge: i, id: v });
            }
            if let (Some(vu), Some(vv)) = (vu, vv) {
                let s = e.curve.start();
                let t = e.curve.end();
                let matches = (s == &vu.location && t == &vv.location)
                    || (s == &vv.location && t == &vu.location);
                if !matches {
                    violations.push(Violation::EndpointMismatch { edge: i });
                }
            }
            // The curve may not pass through any vertex other than its endpoints.
            for w in &self.vertices {
                if w.id == u || w.id == v {
                    continue;
                }
                if e.curve.contains_point(&w.location) {
                    violations.push(Violation::CurveThroughVertex { edge: i, vertex: w.id });
                }
            }
        }

        // Pairwise curve checks and general position.
        let mut crossing_locs: Vec<(usize, usize, Point)> = Vec::new();
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                match curve_crossings(&self.edges[i].curve, &self.edges[j].curve) {
                    Ok(cs) => {
                        for c in cs {
                            crossing_locs.push((i, j, c.location));
                        }
                    }
                    Err(GeometryError::Tangency { at }) => violations.push(Violation::Tangency {
                        first: i,
                        second: j,
                        detail: at,
                    }),
                    Err(GeometryError::Overlap { at }) => violations.push(Violation::Overlap {
                        first: i,
                        second: j,
                        detail: at,
                    }),
                    Err(e) => violations.push(Violation::InvalidCurve {
                        edge: i,
                        reason: e.to_string(),
                    }),
                }
            }
        }
        for (a, (i1, j1, p1)) in crossing_locs.iter().enumerate() {
            for (i2, j2, p2) in &crossing_locs[a + 1..] {
                if p1 == p2 {
                    violations.push(Violation::CoincidentCrossings {
                        detail: format!(
                            "edges ({i1},{j1}) and ({i2},{j2}) cross at the same point {p1}"
                        ),
                    });
                }
            }
        }

        let simple = violations.is_empty() && self.is_simple().unwrap_or(false);
        let x_monotone = self.is_x_monotone_drawing();
        ValidationReport {
            simple,
            x_monotone,
            violations,
        }
    }

    /// True iff every pair of edges intersects at most once.
    pub fn is_simple(&self) -> Result<bool> {
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                if intersection_count(&self.edges[i].curve, &self.edges[j].curve)? > 1 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// True iff every curve is x-monotone and vertex x-coordinates are distinct.
    pub fn is_x_monotone_drawing(&self) -> bool {
        let mut xs: Vec<_> = self.vertices.iter().map(|v| &v.location.x).collect();
        xs.sort();
        let distinct = xs.windows(2).all(|w| w[0] != w[1]);
        distinct && self.edges.iter().all(|e| is_x_monotone(&e.curve))
    }

    /// Crossings of edge pair `(i, j)`, ordered along edge `i`.
    pub fn edge_pair_crossings(&self, i: usize, j: usize) -> Result<Vec<CrossingPoint>> {
        Ok(curve_crossings(&self.edges[i].curve, &self.edges[j].curve)?)
    }

    /// Total crossing count of the drawing, an upper bound on the crossing
    /// number of the underlying abstract graph.
    pub fn crossing_count(&self) -> Result<usize> {
        let mut total = 0;
        for i in 0..self.edges.len() {
            for j in i + 1..self.edges.len() {
                total += self.edge_pair_crossings(i, j)?.len();
            }
        }
        Ok(total)
    }

    /// The abstract graph underlying this drawing, with vertices renumbered
    /// `0..n` in id order.
    pub fn abstract_graph(&self) -> SimpleGraph {
        let mut ids: Vec<u32> = self.vertices.iter().map(|v| v.id).collect();
        ids.sort_unstable();
        let index = |id: u32| ids.binary_search(&id).unwrap();
        let edges = self
            .edges
            .iter()
            .map(|e| (index(e.endpoints.0), index(e.endpoints.1)))
            .collect();
        SimpleGraph::new(ids.len(), edges)
    }

    /// Sorted vertex ids.
    pub fn sorted_ids(&self) -> Vec<u32> {
        let mut ids: Vec<u32> = self.vertices.iter().map(|v| v.id).collect();
        ids.sort_unstable();
        ids
    }
}

/// Graph on the edges of a drawing; adjacency means "the curves cross".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossingGraph {
    /// Number of nodes (= edges of the drawing, in input order).
    pub nodes: usize,
    /// Crossing pairs `(i, j)` with `i < j`.
    pub adjacency: Vec<(usize, usize)>,
}

impl CrossingGraph {
    pub fn are_adjacent(&self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        self.adjacency.contains(&key)
    }

    /// Neighbor bitsets, one per node. Panics if there are more than 128 nodes.
    pub fn neighbor_masks(&self) -> Vec<u128> {
        assert!(self.nodes <= 128, "crossing graph too large for bitsets");
        let mut masks = vec![0u128; self.nodes];
        for &(i, j) in &self.adjacency {
            masks[i] |= 1 << j;
            masks[j] |= 1 << i;
        }
        masks
    }
}

/// Builds the crossing graph of a drawing. Node order equals edge input order.
pub fn crossing_graph(d: &Drawing) -> Result<CrossingGraph> {
    let mut adjacency = Vec::new();
    for i in 0..d.edges.len() {
        for j in i + 1..d.edges.len() {
            if !d.edge_pair_crossings(i, j)?.is_empty() {
                adjacency.push((i, j));
            }
        }
    }
    Ok(CrossingGraph {
        nodes: d.edges.len(),
        adjacency,
    })
}

/// Exact maximum set of pairwise crossing edges, with the
/// lexicographically smallest witness (by edge index).
pub fn max_pairwise_crossing(d: &Drawing) -> Result<(usize, Vec<usize>)> {
    let g = crossing_graph(d)?;
    if g.nodes == 0 {
        return Ok((0, Vec::new()));
    }
    Ok(max_clique(&g.neighbor_masks()))
}

/// True iff the drawing has no `k` pairwise crossing edges; when false,
/// also returns `k` such edges.
pub fn is_k_quasiplanar(d: &Drawing, k: u32) -> Result<(bool, Option<Vec<usize>>)> {
    if k < 2 {
        return Err(Error::InvalidK(k));
    }
    let (size, witness) = max_pairwise_crossing(d)?;
    if size < k as usize {
        Ok((true, None))
    } else {
        Ok((false, Some(witness[..k as usize].to_vec())))
    }
}
