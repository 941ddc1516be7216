use std::collections::BTreeSet;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::ClosedFormError;
use crate::concavity::convolve;

/// A simple undirected graph on vertices `1..=N`, given by its edges.
///
/// Construction checks endpoints; acyclicity is checked by
/// [`independence_poly`], which only accepts forests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

impl DynkinGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Self, ClosedFormError> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &edges {
            if u == v {
                return Err(ClosedFormError::InvalidGraph(format!("loop at vertex {u}")));
            }
            if u == 0 || v == 0 || u > vertices || v > vertices {
                return Err(ClosedFormError::InvalidGraph(format!(
                    "edge ({u}, {v}) outside vertices 1..={vertices}"
                )));
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(ClosedFormError::InvalidGraph(format!("duplicate edge ({u}, {v})")));
            }
        }
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Degree of each vertex `1..=N`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertices];
        for &(u, v) in &self.edges {
            d[u - 1] += 1;
            d[v - 1] += 1;
        }
        d
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.vertices];
        for &(u, v) in &self.edges {
            adj[u - 1].push(v - 1);
            adj[v - 1].push(u - 1);
        }
        adj
    }
}

impl FromStr for DynkinGraph {
    type Err = ClosedFormError;

    /// Edge-list text: one `u v` pair per line, vertices numbered from 1.
    /// The vertex count is the largest endpoint, unless a line holding a
    /// single integer `N` declares it (needed for isolated vertices). Blank
    /// lines and lines starting with `#` are ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut edges = Vec::new();
        let mut declared = None;
        for (lineno, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let nums = line
                .split_whitespace()
                .map(str::parse::<usize>)
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| ClosedFormError::InvalidGraph(format!("line {}: {e}", lineno + 1)))?;
            match nums.as_slice() {
                [n] => declared = Some(*n),
                [u, v] => edges.push((*u, *v)),
                _ => {
                    return Err(ClosedFormError::InvalidGraph(format!(
                        "line {}: expected 'u v'",
                        lineno + 1
                    )))
                }
            }
        }
        let max_vertex = edges.iter().map(|&(u, v)| u.max(v)).max().unwrap_or(0);
        Self::new(declared.unwrap_or(max_vertex), edges)
    }
}

/// Counts `m_k` of independent vertex sets of each size `k`.
///
/// Rooted-tree DP per component: for each vertex the polynomials of its
/// subtree with the vertex excluded (`out`) and included (`in`), with
/// `out_v = prod (out_c + in_c)` and `in_v = x prod out_c`. Components
/// multiply.
pub fn independence_poly(g: &DynkinGraph) -> Result<Vec<BigInt>, ClosedFormError> {
    if g.edges.len() >= g.vertices && g.vertices > 0 {
        return Err(ClosedFormError::NotAForest);
    }
    let adj = g.adjacency();
    let n = g.vertices;
    let mut parent = vec![usize::MAX; n];
    let mut visited = vec![false; n];
    let mut total = vec![BigInt::one()];
    for root in 0..n {
        if visited[root] {
            continue;
        }
        // iterative DFS preorder; a non-parent visited neighbour is a cycle
        let mut order = Vec::new();
        let mut stack = vec![root];
        visited[root] = true;
        while let Some(v) = stack.pop() {
            order.push(v);
            for &w in &adj[v] {
                if w == parent[v] {
                    continue;
                }
                if visited[w] {
                    return Err(ClosedFormError::NotAForest);
                }
                visited[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
        let mut out_poly: Vec<Vec<BigInt>> = vec![Vec::new(); n];
        let mut in_poly: Vec<Vec<BigInt>> = vec![Vec::new(); n];
        for &v in order.iter().rev() {
            let mut ex = vec![BigInt::one()];
            let mut inc = vec![BigInt::zero(), BigInt::one()];
            for &c in &adj[v] {
                if c == parent[v] {
                    continue;
                }
                let either = add(&out_poly[c], &in_poly[c]);
                ex = convolve(&ex, &either);
                inc = convolve(&inc, &out_poly[c]);
                out_poly[c] = Vec::new();
                in_poly[c] = Vec::new();
            }
            out_poly[v] = ex;
            in_poly[v] = inc;
        }
        total = convolve(&total, &add(&out_poly[root], &in_poly[root]));
    }
    while total.len() > 1 && total.last().is_some_and(Zero::is_zero) {
        total.pop();
    }
    Ok(total)
}

fn add(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}
