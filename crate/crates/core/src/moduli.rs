//! Dual graphs of stable marked curves, balanced twist assignments, Euler
//! characteristics of spin bundles and deformation dimensions.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::spin::twist::{index_from_twist, TwistData};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub id: String,
    pub genus: u32,
}

/// A leg carrying marking `marking` (1-based) on vertex index `vertex`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Leg {
    pub vertex: usize,
    pub marking: u32,
}

/// Connected dual graph; edges are pairs of vertex indices and may be loops.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualGraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
    legs: Vec<Leg>,
}

impl DualGraph {
    /// Builds a graph from vertex ids, checking ids, markings `1..=n` and
    /// connectivity.
    pub fn new(
        vertices: Vec<Vertex>,
        edges: &[(&str, &str)],
        legs: &[(&str, u32)],
    ) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (n, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), n).is_some() {
                return Err(Error::Graph(format!("duplicate vertex id `{}`", v.id)));
            }
        }
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| Error::Graph(format!("unknown vertex `{id}`")))
        };
        let edges = edges
            .iter()
            .map(|(a, b)| Ok((lookup(a)?, lookup(b)?)))
            .collect::<Result<Vec<_>>>()?;
        let legs = legs
            .iter()
            .map(|(v, m)| {
                Ok(Leg {
                    vertex: lookup(v)?,
                    marking: *m,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_indices(vertices, edges, legs)
    }

    pub fn from_indices(
        vertices: Vec<Vertex>,
        edges: Vec<(usize, usize)>,
        mut legs: Vec<Leg>,
    ) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::Graph("graph has no vertices".into()));
        }
        let nv = vertices.len();
        if let Some((a, b)) = edges.iter().find(|(a, b)| *a >= nv || *b >= nv) {
            return Err(Error::Graph(format!(
                "edge ({a}, {b}) refers to a missing vertex"
            )));
        }
        if let Some(leg) = legs.iter().find(|l| l.vertex >= nv) {
            return Err(Error::Graph(format!(
                "leg {} refers to a missing vertex",
                leg.marking
            )));
        }
        let markings: BTreeSet<u32> = legs.iter().map(|l| l.marking).collect();
        let n = legs.len() as u32;
        if markings.len() != legs.len() || markings.iter().any(|&m| m == 0 || m > n) {
            return Err(Error::Graph(format!(
                "markings must be a permutation of 1..={n}"
            )));
        }
        legs.sort_by_key(|l| l.marking);
        let graph = DualGraph {
            vertices,
            edges,
            legs,
        };
        if !graph.is_connected() {
            return Err(Error::Graph("graph is not connected".into()));
        }
        Ok(graph)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                for (from, to) in [(a, b), (b, a)] {
                    if from == v && !seen[to] {
                        seen[to] = true;
                        stack.push(to);
                    }
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Legs sorted by marking.
    pub fn legs(&self) -> &[Leg] {
        &self.legs
    }

    /// Same graph with every edge read in the opposite direction.
    pub fn reversed(&self) -> DualGraph {
        DualGraph {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|&(a, b)| (b, a)).collect(),
            legs: self.legs.clone(),
        }
    }

    pub fn n(&self) -> u32 {
        self.legs.len() as u32
    }

    /// Legs plus edge ends at `v`; a loop counts twice.
    pub fn valence(&self, v: usize) -> u32 {
        let legs = self.legs.iter().filter(|l| l.vertex == v).count();
        let ends: usize = self
            .edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum();
        (legs + ends) as u32
    }

    /// Arithmetic genus `Σ g_v + #E - #V + 1`.
    pub fn genus(&self) -> u32 {
        let sum: u32 = self.vertices.iter().map(|v| v.genus).sum();
        sum + self.edges.len() as u32 + 1 - self.vertices.len() as u32
    }

    /// Every vertex has `2g_v - 2 + val > 0`, and `2g - 2 + n > 0`.
    pub fn is_stable(&self) -> bool {
        let local = (0..self.vertices.len())
            .all(|v| 2 * self.vertices[v].genus as i64 - 2 + self.valence(v) as i64 > 0);
        local && 2 * self.genus() as i64 - 2 + self.n() as i64 > 0
    }
}

pub fn graph_genus(graph: &DualGraph) -> u32 {
    graph.genus()
}

pub fn stability_check(graph: &DualGraph) -> bool {
    graph.is_stable()
}

/// Twists on legs (indexed by marking - 1) and on the two half-edges of
/// each edge, in edge order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwistAssignment {
    pub leg_twists: Vec<u32>,
    pub edge_twists: Vec<(u32, u32)>,
}

impl TwistAssignment {
    /// Local data `(l, a, b)` at both branches of every node.
    pub fn node_data(&self, r: u32) -> Result<Vec<(TwistData, TwistData)>> {
        self.edge_twists
            .iter()
            .map(|&(k1, k2)| Ok((index_from_twist(k1, r)?, index_from_twist(k2, r)?)))
            .collect()
    }

    pub fn leg_data(&self, r: u32) -> Result<Vec<TwistData>> {
        self.leg_twists
            .iter()
            .map(|&k| index_from_twist(k, r))
            .collect()
    }

    /// Same assignment with every edge read in the opposite direction.
    pub fn reversed(&self) -> TwistAssignment {
        TwistAssignment {
            leg_twists: self.leg_twists.clone(),
            edge_twists: self.edge_twists.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    pub fn is_balanced(&self, r: u32) -> bool {
        self.edge_twists.iter().all(|&(a, b)| (a + b) % r == 0)
    }
}

/// `r | 2g_v - 2 + val(v) - Σ incident twists`.
pub fn vertex_degree_test(
    graph: &DualGraph,
    v: usize,
    assignment: &TwistAssignment,
    r: u32,
) -> Result<bool> {
    if v >= graph.vertices.len() {
        return Err(Error::Graph(format!("no vertex with index {v}")));
    }
    if assignment.leg_twists.len() != graph.legs.len()
        || assignment.edge_twists.len() != graph.edges.len()
    {
        return Err(Error::Graph(
            "assignment does not cover every leg and edge".into(),
        ));
    }
    let mut twist_sum: i64 = 0;
    for leg in graph.legs.iter().filter(|l| l.vertex == v) {
        twist_sum += assignment.leg_twists[leg.marking as usize - 1] as i64;
    }
    for (&(a, b), &(k1, k2)) in graph.edges.iter().zip(&assignment.edge_twists) {
        if a == v {
            twist_sum += k1 as i64;
        }
        if b == v {
            twist_sum += k2 as i64;
        }
    }
    let value = 2 * graph.vertices[v].genus as i64 - 2 + graph.valence(v) as i64 - twist_sum;
    Ok(value.rem_euclid(r as i64) == 0)
}

/// The Euler characteristic `1 - g + (2g - 2 + n - Σm)/r`, when integral.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Chi {
    Integral(i64),
    NonIntegral { numerator: i64, r: u32 },
}

impl fmt::Display for Chi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Chi::Integral(c) => write!(f, "{c}"),
            Chi::NonIntegral { numerator, r } => {
                write!(f, "non-integral ({r} does not divide {numerator})")
            }
        }
    }
}

fn check_stable(g: u32, n: u32) -> Result<()> {
    let e = 2 * g as i64 - 2 + n as i64;
    if e <= 0 {
        return Err(Error::Unstable(e));
    }
    Ok(())
}

pub fn chi(g: u32, n: u32, r: u32, m: &[i64]) -> Result<Chi> {
    check_stable(g, n)?;
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    if m.len() != n as usize {
        return Err(Error::InvalidArgument(format!(
            "{} type entries for {n} markings",
            m.len()
        )));
    }
    let numerator = 2 * g as i64 - 2 + n as i64 - m.iter().sum::<i64>();
    if numerator.rem_euclid(r as i64) != 0 {
        return Ok(Chi::NonIntegral { numerator, r });
    }
    Ok(Chi::Integral(1 - g as i64 + numerator / r as i64))
}

/// `3g - 3 + n - u`.
pub fn deformation_dimension(g: u32, n: u32, u: u32) -> Result<i64> {
    check_stable(g, n)?;
    let d = 3 * g as i64 - 3 + n as i64;
    if u as i64 > d {
        return Err(Error::InvalidArgument(format!(
            "{u} unbalanced nodes exceed dimension {d}"
        )));
    }
    Ok(d - u as i64)
}

/// A type entry in both conventions: the residue `m mod r`, and the shifted
/// value `m - 1` brought into `[-1, r - 1)`.
pub fn type_conventions(m: i64, r: u32) -> (u32, i64) {
    let r = r as i64;
    (m.rem_euclid(r) as u32, m.rem_euclid(r) - 1)
}

/// All balanced assignments with leg twists `m_i mod r` passing every vertex
/// test, in lexicographic order of the edge twists `k` (edge `e` gets
/// `(k_e, -k_e mod r)`).
pub fn enumerate_assignments(graph: &DualGraph, r: u32, m: &[i64]) -> Result<Vec<TwistAssignment>> {
    if r == 0 {
        return Err(Error::InvalidArgument("r must be positive".into()));
    }
    if !graph.is_stable() {
        return Err(Error::Graph("graph is not stable".into()));
    }
    if m.len() != graph.legs.len() {
        return Err(Error::InvalidArgument(format!(
            "{} type entries for {} markings",
            m.len(),
            graph.legs.len()
        )));
    }
    let leg_twists: Vec<u32> = m.iter().map(|&x| x.rem_euclid(r as i64) as u32).collect();
    let edges = graph.edges.len() as u32;
    let total = (r as u64)
        .checked_pow(edges)
        .ok_or_else(|| Error::InvalidArgument("too many edge-twist vectors".into()))?;
    let found: Vec<Option<TwistAssignment>> = (0..total)
        .into_par_iter()
        .map(|code| {
            // most significant digit = first edge, so `code` order is lexicographic
            let mut digits = vec![0u32; edges as usize];
            let mut c = code;
            for slot in digits.iter_mut().rev() {
                *slot = (c % r as u64) as u32;
                c /= r as u64;
            }
            let a = TwistAssignment {
                leg_twists: leg_twists.clone(),
                edge_twists: digits.iter().map(|&k| (k, (r - k) % r)).collect(),
            };
            let ok = (0..graph.vertices.len())
                .all(|v| vertex_degree_test(graph, v, &a, r).expect("complete assignment"));
            ok.then_some(a)
        })
        .collect();
    Ok(found.into_iter().flatten().collect())
}
