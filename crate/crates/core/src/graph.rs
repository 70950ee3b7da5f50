//! Simple graphs and their edge and cover ideals.

use std::collections::{BTreeSet, VecDeque};

use crate::arith::intersect;
use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, MonomialPrime};
use crate::monomial::{Monomial, Ring, RingContext};

/// A finite simple graph with labelled vertices.
///
/// Edges are stored as index pairs `(a, b)` with `a < b` into `vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSpec {
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl GraphSpec {
    pub fn new<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let distinct: BTreeSet<&String> = vertices.iter().collect();
        if distinct.len() != vertices.len() {
            return Err(Error::domain("duplicate vertex label"));
        }
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for (a, b) in edges {
            if a >= vertices.len() || b >= vertices.len() {
                return Err(Error::domain(format!(
                    "edge ({a}, {b}) references a missing vertex"
                )));
            }
            if a == b {
                return Err(Error::domain(format!("loop at vertex {}", vertices[a])));
            }
            let e = (a.min(b), a.max(b));
            if !seen.insert(e) {
                return Err(Error::domain(format!(
                    "duplicate edge {}-{}",
                    vertices[e.0], vertices[e.1]
                )));
            }
            out.push(e);
        }
        Ok(GraphSpec {
            vertices,
            edges: out,
        })
    }

    /// Builds a graph from labelled edges; vertices are taken in order of
    /// first appearance.
    pub fn from_labelled_edges<S: AsRef<str>>(edges: &[(S, S)]) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let index = |label: &str, vertices: &mut Vec<String>| -> usize {
            match vertices.iter().position(|v| v == label) {
                Some(i) => i,
                None => {
                    vertices.push(label.to_string());
                    vertices.len() - 1
                }
            }
        };
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let ia = index(a.as_ref(), &mut vertices);
            let ib = index(b.as_ref(), &mut vertices);
            pairs.push((ia, ib));
        }
        GraphSpec::new(vertices, pairs)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// A ring with one variable per vertex, in declaration order, named
    /// `x<label>`.
    pub fn default_ring(&self) -> Result<Ring> {
        RingContext::new(self.vertices.iter().map(|v| format!("x{v}")))
    }

    /// Maps every vertex label to a variable of `ring`: the variable named
    /// exactly like the label, or else `x<label>`.
    pub fn vertex_variables(&self, ring: &Ring) -> Result<Vec<usize>> {
        self.vertices
            .iter()
            .map(|label| {
                ring.index_of(label)
                    .or_else(|| ring.index_of(&format!("x{label}")))
                    .ok_or_else(|| {
                        Error::domain(format!("vertex `{label}` has no variable in the ring"))
                    })
            })
            .collect()
    }

    /// Breadth-first 2-colouring.
    pub fn is_bipartite(&self) -> bool {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for start in 0..n {
            if colour[start].is_some() {
                continue;
            }
            colour[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                let c = colour[v].expect("coloured when queued");
                for &w in &adj[v] {
                    match colour[w] {
                        None => {
                            colour[w] = Some(!c);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == c => return false,
                        Some(_) => {}
                    }
                }
            }
        }
        true
    }

    /// No cycles: a forest has at most `|V| - components` edges.
    pub fn is_forest(&self) -> bool {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], v: usize) -> usize {
            let mut r = v;
            while parent[r] != r {
                r = parent[r];
            }
            parent[v] = r;
            r
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return false;
            }
            parent[ra] = rb;
        }
        true
    }

    pub fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &(a, b) in &self.edges {
                let w = if a == v {
                    b
                } else if b == v {
                    a
                } else {
                    continue;
                };
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.is_connected()
    }
}

/// `(x_a x_b : ab ∈ E)`.
pub fn edge_ideal(g: &GraphSpec, ring: &Ring) -> Result<MonomialIdeal> {
    let vars = g.vertex_variables(ring)?;
    let n = ring.nvars();
    let gens = g
        .edges
        .iter()
        .map(|&(a, b)| Monomial::product_of_vars(n, [vars[a], vars[b]]));
    MonomialIdeal::new(ring, gens)
}

/// `∩_{ab ∈ E} (x_a, x_b)`, whose generators are the minimal vertex covers.
pub fn cover_ideal(g: &GraphSpec, ring: &Ring) -> Result<MonomialIdeal> {
    let vars = g.vertex_variables(ring)?;
    let mut acc = MonomialIdeal::unit(ring);
    for &(a, b) in &g.edges {
        let p = MonomialPrime::new(ring, [vars[a], vars[b]])?.to_ideal();
        acc = intersect(&acc, &p)?;
    }
    Ok(acc)
}

/// The graph whose edges are the generators of a square-free quadratic
/// ideal, or `None` if some generator is not of the form `x_a x_b`.
pub fn graph_of_edge_ideal(i: &MonomialIdeal) -> Option<GraphSpec> {
    let ring = i.ring();
    let mut edges = Vec::new();
    for g in i.gens() {
        if !g.is_squarefree() || g.degree() != 2 {
            return None;
        }
        let s: Vec<usize> = g.support_iter().collect();
        edges.push((s[0], s[1]));
    }
    GraphSpec::new(ring.names().iter().cloned(), edges).ok()
}
