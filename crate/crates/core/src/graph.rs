//! Immutable simple-graph values on at most 64 vertices.
//!
//! Adjacency is stored as one `u64` bit row per vertex, so neighborhood
//! intersections and unions are single word operations. That constant-time
//! set arithmetic is what the book-number and search hot paths are built on.

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count; one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

/// Errors from graph construction.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("edge endpoint {endpoint} out of range for order {order}")]
    BadEndpoint { endpoint: usize, order: usize },
    #[error("loop ({0},{0}) rejected")]
    LoopRejected(usize),
    #[error("bad builder parameter: {0}")]
    BadParameter(String),
}

/// An undirected simple graph with dense 0-based vertex labels.
///
/// Invariants maintained by every constructor:
/// - row symmetry: bit `u` of row `v` equals bit `v` of row `u`,
/// - zero diagonal,
/// - no bits at positions `>= order`.
///
/// Values are immutable after construction; all operations are pure.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    rows: Vec<u64>,
}

/// Vertex degrees reported in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(pub Vec<usize>);

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

#[inline(always)]
fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline(always)]
pub(crate) fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

impl Graph {
    fn check_order(order: usize) -> Result<(), GraphError> {
        if order > MAX_ORDER {
            Err(GraphError::OrderTooLarge(order))
        } else {
            Ok(())
        }
    }

    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Result<Self, GraphError> {
        Self::check_order(order)?;
        Ok(Graph {
            order,
            rows: vec![0; order],
        })
    }

    /// Builds a graph from an explicit edge list; duplicate edges collapse.
    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(order)?;
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopRejected(u));
            }
            for e in [u, v] {
                if e >= order {
                    return Err(GraphError::BadEndpoint { endpoint: e, order });
                }
            }
            g.rows[u] |= bit(v);
            g.rows[v] |= bit(u);
        }
        Ok(g)
    }

    /// Internal constructor from rows already known to satisfy the invariants.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        let order = rows.len();
        debug_assert!(order <= MAX_ORDER);
        debug_assert!(rows.iter().all(|r| r & !low_mask(order) == 0));
        debug_assert!((0..order).all(|v| rows[v] & bit(v) == 0));
        debug_assert!((0..order)
            .all(|v| (0..order).all(|u| (rows[v] >> u) & 1 == (rows[u] >> v) & 1)));
        Graph { order, rows }
    }

    /// Complete graph `K_n`.
    pub fn complete(order: usize) -> Result<Self, GraphError> {
        Self::check_order(order)?;
        let mask = low_mask(order);
        Ok(Graph {
            order,
            rows: (0..order).map(|v| mask & !bit(v)).collect(),
        })
    }

    /// Cycle `C_n`, requires `n >= 3`.
    pub fn cycle(order: usize) -> Result<Self, GraphError> {
        if order < 3 {
            return Err(GraphError::BadParameter(format!(
                "cycle needs at least 3 vertices, got {order}"
            )));
        }
        let edges: Vec<_> = (0..order).map(|v| (v, (v + 1) % order)).collect();
        Self::from_edges(order, &edges)
    }

    /// Path `P_n` on `n` vertices (`n - 1` edges).
    pub fn path(order: usize) -> Result<Self, GraphError> {
        Self::check_order(order)?;
        let edges: Vec<_> = (1..order).map(|v| (v - 1, v)).collect();
        Self::from_edges(order, &edges)
    }

    /// Complete bipartite graph `K_{s,t}` with parts `0..s` and `s..s+t`.
    pub fn complete_bipartite(s: usize, t: usize) -> Result<Self, GraphError> {
        let order = s
            .checked_add(t)
            .ok_or(GraphError::OrderTooLarge(usize::MAX))?;
        Self::check_order(order)?;
        let mut edges = Vec::with_capacity(s * t);
        for u in 0..s {
            for v in s..order {
                edges.push((u, v));
            }
        }
        Self::from_edges(order, &edges)
    }

    /// `K_n - PM`: the complete graph of even order minus the perfect
    /// matching that pairs vertex `2i` with `2i+1`.
    pub fn complete_minus_pm(order: usize) -> Result<Self, GraphError> {
        if order % 2 != 0 {
            return Err(GraphError::BadParameter(format!(
                "K_n - PM needs an even order, got {order}"
            )));
        }
        let mut g = Self::complete(order)?;
        for i in 0..order / 2 {
            let (u, v) = (2 * i, 2 * i + 1);
            g.rows[u] &= !bit(v);
            g.rows[v] &= !bit(u);
        }
        Ok(g)
    }

    /// The complement: `uv` is an edge iff `u != v` and `uv` is not one here.
    pub fn complement(&self) -> Self {
        let mask = low_mask(self.order);
        Graph {
            order: self.order,
            rows: (0..self.order)
                .map(|v| mask & !self.rows[v] & !bit(v))
                .collect(),
        }
    }

    /// Disjoint union of any number of graphs, block-diagonal adjacency.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Self, GraphError> {
        let order: usize = parts.iter().map(|g| g.order).sum();
        Self::check_order(order)?;
        let mut rows = Vec::with_capacity(order);
        let mut offset = 0;
        for g in parts {
            for &row in &g.rows {
                rows.push(row << offset);
            }
            offset += g.order;
        }
        Ok(Graph { order, rows })
    }

    /// Join: disjoint union plus all edges between the two parts.
    pub fn join(&self, other: &Graph) -> Result<Self, GraphError> {
        let order = self.order + other.order;
        Self::check_order(order)?;
        let left_mask = low_mask(self.order);
        let right_mask = low_mask(order) & !left_mask;
        let mut rows = Vec::with_capacity(order);
        for &row in &self.rows {
            rows.push(row | right_mask);
        }
        for &row in &other.rows {
            rows.push((row << self.order) | left_mask);
        }
        Ok(Graph { order, rows })
    }

    /// `m` disjoint copies of `g`.
    pub fn repeated(g: &Graph, m: usize) -> Result<Self, GraphError> {
        let copies = vec![g.clone(); m];
        Self::disjoint_union(&copies)
    }

    #[inline(always)]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline(always)]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.order && v < self.order);
        self.rows[u] & bit(v) != 0
    }

    #[inline(always)]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones() as usize
    }

    /// Neighborhood of `v` as a bit mask.
    #[inline(always)]
    pub fn row(&self, v: usize) -> u64 {
        self.rows[v]
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        mask_to_vertices(self.rows[v])
    }

    /// Edges in lexicographic order of `(u, v)` with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order {
            let mut rest = self.rows[u] & !low_mask(u + 1);
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                out.push((u, v));
            }
        }
        out
    }

    /// Degrees in non-increasing order.
    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut degs: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(degs)
    }

    /// Connected components as sorted vertex sets, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = 0u64;
        let all = low_mask(self.order);
        let mut comps = Vec::new();
        while seen != all {
            let start = (!seen & all).trailing_zeros() as usize;
            let mut comp = bit(start);
            loop {
                let mut grown = comp;
                let mut rest = comp;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    grown |= self.rows[v];
                }
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            seen |= comp;
            comps.push(mask_to_vertices(comp));
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.components().len() == 1
    }

    /// The graph with vertex `v` relabeled to `perm[v]`.
    ///
    /// `perm` must be a permutation of `0..order`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.order);
        let mut rows = vec![0u64; self.order];
        for u in 0..self.order {
            let mut rest = self.rows[u];
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                rows[perm[u]] |= bit(perm[v]);
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    /// The induced subgraph on the vertices of `mask`, relabeled densely
    /// in increasing original order.
    pub fn induced(&self, mask: u64) -> Self {
        let verts = mask_to_vertices(mask);
        let mut rows = vec![0u64; verts.len()];
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    rows[i] |= bit(j);
                }
            }
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Extends by one fresh vertex whose neighborhood is `mask`.
    pub(crate) fn extend_with_vertex(&self, mask: u64) -> Self {
        debug_assert!(self.order < MAX_ORDER);
        debug_assert_eq!(mask & !low_mask(self.order), 0);
        let mut rows = self.rows.clone();
        let new = self.order;
        for v in 0..self.order {
            if mask & bit(v) != 0 {
                rows[v] |= bit(new);
            }
        }
        rows.push(mask);
        Graph {
            order: new + 1,
            rows,
        }
    }
}

/// Expands a bit mask into the sorted list of set positions.
pub(crate) fn mask_to_vertices(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order, self.edges())
    }
}
