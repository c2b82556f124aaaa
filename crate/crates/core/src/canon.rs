//! Exact canonical labeling by iterated refinement and backtracking.
//!
//! The canonical code of a graph is its order byte followed by the
//! lexicographically smallest packed upper-triangle bit string over all
//! labelings the search explores. The explored tree depends only on the
//! ismorphism class (cell selection is by partition shape, not labels),
//! so equal codes characterize isomorphic graphs. Exactness holds at any
//! order; performance is tuned for orders up to 16.

use crate::graph::Graph;

/// Relabeling-invariant identifier of an isomorphism class.
///
/// Layout: `[order]` then the upper-triangle bits of the canonical
/// labeling in column order, packed eight per byte, MSB first. The code
/// is a complete description of the graph; see [`CanonicalCode::to_graph`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }

    /// Rebuilds the canonically labeled graph the code describes.
    pub fn to_graph(&self) -> Graph {
        let n = self.order();
        let mut edges = Vec::new();
        let mut k = 0usize;
        for v in 1..n {
            for u in 0..v {
                if (self.0[1 + k / 8] >> (7 - k % 8)) & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        Graph::from_edges(n, &edges).expect("codes only store valid graphs")
    }

    pub fn to_hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalCode({})", self.to_hex())
    }
}

/// Canonical code of `g`; equal codes iff isomorphic graphs.
pub fn canonical_code(g: &Graph) -> CanonicalCode {
    let n = g.order();
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(8);
    if n <= 1 {
        let mut code = vec![n as u8];
        code.extend(std::iter::repeat(0).take(nbytes));
        return CanonicalCode(code);
    }
    let size = g.size();
    if size == 0 || size == nbits {
        // Edgeless and complete graphs admit every labeling; the packed
        // bits are constant, so skip the search entirely.
        let fill = if size == 0 { 0u8 } else { 0xffu8 };
        let mut bits = vec![fill; nbytes];
        if size != 0 && nbits % 8 != 0 {
            bits[nbytes - 1] = 0xff << (8 - nbits % 8);
        }
        let mut code = vec![n as u8];
        code.extend(bits);
        return CanonicalCode(code);
    }

    let mut search = Canonizer {
        g,
        n,
        nbits,
        best_bits: Vec::new(),
        best_perm: Vec::new(),
        have_best: false,
        generators: Vec::new(),
    };
    let init = vec![(0..n as u8).collect::<Vec<u8>>()];
    search.descend(init, &mut Vec::new());

    let mut code = Vec::with_capacity(1 + nbytes);
    code.push(n as u8);
    code.extend_from_slice(&search.best_bits);
    CanonicalCode(code)
}

/// True iff the two graphs are isomorphic (equal canonical codes).
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    g.order() == h.order() && g.size() == h.size() && canonical_code(g) == canonical_code(h)
}

/// Most automorphism generators retained for branch pruning.
const MAX_GENERATORS: usize = 96;

struct Canonizer<'a> {
    g: &'a Graph,
    n: usize,
    nbits: usize,
    best_bits: Vec<u8>,
    /// Vertex placed at each canonical label for the current best.
    best_perm: Vec<u8>,
    have_best: bool,
    /// Automorphisms discovered at tied leaves, as vertex maps. At each
    /// branch point, generators fixing every individualized vertex of
    /// the current path identify equivalent siblings to skip.
    generators: Vec<Vec<u8>>,
}

impl<'a> Canonizer<'a> {
    fn descend(&mut self, mut cells: Vec<Vec<u8>>, path: &mut Vec<u8>) {
        self.refine(&mut cells);

        if self.have_best {
            match self.compare_prefix(&cells) {
                std::cmp::Ordering::Greater => return,
                std::cmp::Ordering::Less | std::cmp::Ordering::Equal => {}
            }
        }

        if cells.iter().all(|c| c.len() == 1) {
            let perm: Vec<u8> = cells.iter().map(|c| c[0]).collect();
            let bits = self.pack(&perm);
            if !self.have_best || bits < self.best_bits {
                self.best_bits = bits;
                self.best_perm = perm;
                self.have_best = true;
            } else if bits == self.best_bits {
                // The two labelings compose to an automorphism.
                if self.generators.len() < MAX_GENERATORS {
                    let mut sigma = vec![0u8; self.n];
                    for i in 0..self.n {
                        sigma[self.best_perm[i] as usize] = perm[i];
                    }
                    if sigma.iter().enumerate().any(|(v, &w)| v as u8 != w) {
                        self.generators.push(sigma);
                    }
                }
            }
            return;
        }

        // First smallest non-singleton cell is the branching target.
        let target = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .expect("non-discrete partition has a splittable cell");
        let members = cells[target].clone();
        let mut tried: Vec<u8> = Vec::with_capacity(members.len());
        for &v in &members {
            // Skip vertices equivalent to an already-expanded sibling
            // under the stabilizer of the current path.
            if !tried.is_empty() {
                let orbit = self.path_orbits(path);
                let rv = uf_find(&orbit, v);
                if tried.iter().any(|&u| uf_find(&orbit, u) == rv) {
                    continue;
                }
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(members.iter().copied().filter(|&u| u != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            path.push(v);
            self.descend(child, path);
            path.pop();
        }
    }

    /// Union-find orbit partition generated by the automorphisms that fix
    /// every vertex on `path` pointwise.
    fn path_orbits(&self, path: &[u8]) -> Vec<u8> {
        let mut parent: Vec<u8> = (0..self.n as u8).collect();
        for sigma in &self.generators {
            if !path.iter().all(|&v| sigma[v as usize] == v) {
                continue;
            }
            for v in 0..self.n as u8 {
                let (a, b) = (uf_find(&parent, v), uf_find(&parent, sigma[v as usize]));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        parent
    }

    /// Equitable refinement: repeatedly split cells whose members see
    /// different neighbor counts in some cell, ordering sub-cells by the
    /// count signature. Signatures are label-invariant, so the resulting
    /// ordered partition is too.
    fn refine(&self, cells: &mut Vec<Vec<u8>>) {
        loop {
            let masks: Vec<u64> = cells
                .iter()
                .map(|c| c.iter().fold(0u64, |m, &v| m | (1 << v)))
                .collect();
            let mut split_at = None;
            'scan: for (i, cell) in cells.iter().enumerate() {
                if cell.len() <= 1 {
                    continue;
                }
                let first_sig = self.signature(cell[0], &masks);
                for &v in &cell[1..] {
                    if self.signature(v, &masks) != first_sig {
                        split_at = Some(i);
                        break 'scan;
                    }
                }
            }
            let Some(i) = split_at else { break };
            let mut keyed: Vec<(Vec<u8>, u8)> = cells[i]
                .iter()
                .map(|&v| (self.signature(v, &masks), v))
                .collect();
            keyed.sort();
            let mut groups: Vec<Vec<u8>> = Vec::new();
            for (sig, v) in keyed {
                match groups.last_mut() {
                    Some(last) if self.signature(last[0], &masks) == sig => last.push(v),
                    _ => groups.push(vec![v]),
                }
            }
            cells.splice(i..=i, groups);
        }
    }

    #[inline]
    fn signature(&self, v: u8, masks: &[u64]) -> Vec<u8> {
        let row = self.g.row(v as usize);
        masks.iter().map(|&m| (row & m).count_ones() as u8).collect()
    }

    fn pack(&self, perm: &[u8]) -> Vec<u8> {
        let mut bits = vec![0u8; self.nbits.div_ceil(8)];
        let mut k = 0usize;
        for v in 1..self.n {
            let row = self.g.row(perm[v] as usize);
            for u in 0..v {
                if row & (1 << perm[u]) != 0 {
                    bits[k / 8] |= 1 << (7 - k % 8);
                }
                k += 1;
            }
        }
        bits
    }

    /// Compares the bits determined by the leading singleton cells with the
    /// current best. `Greater` means no completion of this node can win.
    fn compare_prefix(&self, cells: &[Vec<u8>]) -> std::cmp::Ordering {
        let mut leading = Vec::new();
        for c in cells {
            if c.len() == 1 {
                leading.push(c[0]);
            } else {
                break;
            }
        }
        let s = leading.len();
        let mut k = 0usize;
        for v in 1..s {
            let row = self.g.row(leading[v] as usize);
            for u in 0..v {
                let ours = u8::from(row & (1 << leading[u]) != 0);
                let best = (self.best_bits[k / 8] >> (7 - k % 8)) & 1;
                match ours.cmp(&best) {
                    std::cmp::Ordering::Equal => {}
                    other => return other,
                }
                k += 1;
            }
        }
        std::cmp::Ordering::Equal
    }
}

fn uf_find(parent: &[u8], mut v: u8) -> u8 {
    while parent[v as usize] != v {
        v = parent[v as usize];
    }
    v
}
