//! Book numbers and B_p-freeness decisions.
//!
//! The book B_p is p triangles sharing one common edge, so it has order
//! p + 2. The book number bk(G) is the largest p with B_p a subgraph of
//! G, which equals the maximum over edges xy of |N(x) ∩ N(y)|. The dual
//! test `cobook_criterion` decides freeness from the complement side:
//! G is B_p-free iff every edge xy satisfies |N_Ḡ(x) ∪ N_Ḡ(y)| ≥ n-p-1.

use thiserror::Error;

use crate::graph::{low_mask, mask_to_vertices, Graph};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BookError {
    #[error("({0},{1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("graph has no edges")]
    NoEdges,
    #[error("order {order} is below the required minimum {min}")]
    OrderTooSmall { order: usize, min: usize },
}

/// An edge together with the common neighborhood it carries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BookWitness {
    pub edge: (usize, usize),
    /// Sorted vertex set N(x) ∩ N(y).
    pub common: Vec<usize>,
    pub pages: usize,
}

/// Pages carried by the edge `xy`: the common neighborhood of its ends.
pub fn edge_book_count(g: &Graph, x: usize, y: usize) -> Result<BookWitness, BookError> {
    if x >= g.order() || y >= g.order() || !g.has_edge(x, y) {
        return Err(BookError::NotAnEdge(x, y));
    }
    let common_mask = g.row(x) & g.row(y);
    let common = mask_to_vertices(common_mask);
    Ok(BookWitness {
        edge: (x.min(y), x.max(y)),
        pages: common.len(),
        common,
    })
}

/// bk(g): the largest page count over all edges; 0 for edgeless or
/// triangle-free graphs.
pub fn book_number(g: &Graph) -> usize {
    let mut best = 0usize;
    for v in 1..g.order() {
        let row = g.row(v) & low_mask(v);
        let mut rest = row;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let pages = (g.row(u) & g.row(v)).count_ones() as usize;
            if pages > best {
                best = pages;
            }
        }
    }
    best
}

/// True iff g contains no B_p, i.e. bk(g) ≤ p-1. Vacuously true whenever
/// |g| < p+2, since B_p has order p+2.
pub fn is_book_free(g: &Graph, p: usize) -> bool {
    debug_assert!(p >= 1);
    book_number(g) <= p - 1
}

/// Complement-side freeness test: for every edge xy of g the union of
/// co-neighborhoods must have size at least n-p-1. Requires |g| ≥ p+2.
pub fn cobook_criterion(g: &Graph, p: usize) -> Result<bool, BookError> {
    let n = g.order();
    if n < p + 2 {
        return Err(BookError::OrderTooSmall {
            order: n,
            min: p + 2,
        });
    }
    let gbar = g.complement();
    let need = n - p - 1;
    for (x, y) in g.edges() {
        let union = (gbar.row(x) | gbar.row(y)).count_ones() as usize;
        if union < need {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A witness achieving bk(g); ties broken by the lexicographically
/// smallest edge. Errors on edgeless graphs.
pub fn max_book_witness(g: &Graph) -> Result<BookWitness, BookError> {
    let mut best: Option<BookWitness> = None;
    for (x, y) in g.edges() {
        let w = edge_book_count(g, x, y)?;
        let better = match &best {
            None => true,
            Some(b) => w.pages > b.pages,
        };
        if better {
            best = Some(w);
        }
    }
    best.ok_or(BookError::NoEdges)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent page counter: plain triple loop, no bit tricks.
    fn pages_oracle(g: &Graph, x: usize, y: usize) -> usize {
        (0..g.order())
            .filter(|&z| z != x && z != y && g.has_edge(x, z) && g.has_edge(y, z))
            .count()
    }

    fn bk_oracle(g: &Graph) -> usize {
        g.edges()
            .into_iter()
            .map(|(x, y)| pages_oracle(g, x, y))
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn edge_book_count_examples() {
        let k5 = Graph::complete(5).unwrap();
        assert_eq!(edge_book_count(&k5, 0, 1).unwrap().pages, 3);

        let k6pm = Graph::complete_minus_pm(6).unwrap();
        for (x, y) in k6pm.edges() {
            let w = edge_book_count(&k6pm, x, y).unwrap();
            assert_eq!(w.pages, pages_oracle(&k6pm, x, y));
            assert_eq!(w.pages, 2);
        }

        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(edge_book_count(&c5, 0, 1).unwrap().pages, 0);
        assert_eq!(
            edge_book_count(&c5, 0, 2),
            Err(BookError::NotAnEdge(0, 2))
        );
    }

    #[test]
    fn pages_plus_counion_identity() {
        // pages + |N_Ḡ(x) ∪ N_Ḡ(y)| = n - 2 on every edge.
        for g in [
            Graph::complete_minus_pm(8).unwrap(),
            Graph::cycle(7).unwrap(),
            Graph::complete_bipartite(3, 4).unwrap(),
        ] {
            let gbar = g.complement();
            let n = g.order();
            for (x, y) in g.edges() {
                let w = edge_book_count(&g, x, y).unwrap();
                let union = (gbar.row(x) | gbar.row(y)).count_ones() as usize;
                assert_eq!(w.pages + union, n - 2);
            }
        }
    }

    #[test]
    fn book_number_examples() {
        assert_eq!(book_number(&Graph::complete_bipartite(3, 3).unwrap()), 0);
        assert_eq!(book_number(&Graph::complete(4).unwrap()), 2);

        // Complement of K_2 + C_7 has book number 4.
        let g = Graph::disjoint_union(&[Graph::complete(2).unwrap(), Graph::cycle(7).unwrap()])
            .unwrap()
            .complement();
        assert_eq!(book_number(&g), bk_oracle(&g));
        assert_eq!(book_number(&g), 4);
    }

    #[test]
    fn bk_of_complete_graphs() {
        for n in 3..=16 {
            let kn = Graph::complete(n).unwrap();
            assert_eq!(book_number(&kn), n - 2);
        }
    }

    #[test]
    fn freeness_examples() {
        assert!(is_book_free(&Graph::complete_minus_pm(6).unwrap(), 3));
        assert!(!is_book_free(&Graph::complete(5).unwrap(), 3));
        // Any graph of order ≤ p+1 is trivially free.
        assert!(is_book_free(&Graph::complete(5).unwrap(), 9));
    }

    #[test]
    fn cobook_examples() {
        let k222 = Graph::complete_minus_pm(6).unwrap();
        assert_eq!(cobook_criterion(&k222, 4), Ok(true));

        let g = Graph::repeated(&Graph::complete(3).unwrap(), 3)
            .unwrap()
            .complement();
        assert_eq!(cobook_criterion(&g, 4), Ok(true));
        // Every edge meets the bound exactly: union size 4 = n-p-1.
        let gbar = g.complement();
        for (x, y) in g.edges() {
            assert_eq!((gbar.row(x) | gbar.row(y)).count_ones(), 4);
        }

        assert_eq!(cobook_criterion(&Graph::complete(5).unwrap(), 3), Ok(false));
        assert!(matches!(
            cobook_criterion(&Graph::complete(4).unwrap(), 3),
            Err(BookError::OrderTooSmall { .. })
        ));
    }

    #[test]
    fn lemma1_equivalence_spot() {
        for g in [
            Graph::complete_minus_pm(8).unwrap(),
            Graph::cycle(9).unwrap(),
            Graph::complete_bipartite(4, 4).unwrap(),
            Graph::complete(7).unwrap(),
        ] {
            for p in 1..=g.order().saturating_sub(2) {
                assert_eq!(
                    is_book_free(&g, p),
                    cobook_criterion(&g, p).unwrap(),
                    "disagreement at p={p} on {g:?}"
                );
            }
        }
    }

    #[test]
    fn witness_examples() {
        let w = max_book_witness(&Graph::complete(4).unwrap()).unwrap();
        assert_eq!(w.edge, (0, 1));
        assert_eq!(w.common, vec![2, 3]);

        let w = max_book_witness(&Graph::cycle(5).unwrap()).unwrap();
        assert_eq!(w.edge, (0, 1));
        assert!(w.common.is_empty());

        let star = Graph::complete_bipartite(1, 4).unwrap();
        let w = max_book_witness(&star).unwrap();
        assert_eq!(w.pages, 0);

        assert_eq!(
            max_book_witness(&Graph::empty(3).unwrap()),
            Err(BookError::NoEdges)
        );
    }

    #[test]
    fn monotone_in_p_and_under_edge_deletion() {
        let g = Graph::complete_minus_pm(8).unwrap();
        for p in 1..8 {
            if is_book_free(&g, p) {
                assert!(is_book_free(&g, p + 1));
            }
        }
        let bk = book_number(&g);
        for (u, v) in g.edges() {
            let mut edges = g.edges();
            edges.retain(|&e| e != (u, v));
            let h = Graph::from_edges(g.order(), &edges).unwrap();
            assert!(book_number(&h) <= bk);
        }
    }
}
