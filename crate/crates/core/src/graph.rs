//! Labeled simple graphs on at most 32 vertices with bit-packed rows.

use core::fmt;
use core::str::FromStr;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 32;

/// A set of vertex indices below 32.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// `{0, …, n−1}`.
    pub fn full(n: usize) -> VertexSet {
        debug_assert!(n <= MAX_VERTICES);
        VertexSet(if n == MAX_VERTICES { u32::MAX } else { (1u32 << n) - 1 })
    }

    pub fn singleton(v: usize) -> VertexSet {
        VertexSet(1 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(it: I) -> VertexSet {
        VertexSet(it.into_iter().fold(0, |m, v| m | 1 << v))
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, v: usize) -> VertexSet {
        VertexSet(self.0 | 1 << v)
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

/// Iterator over set bits, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Bits(pub u32);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Bits {}

/// A simple labeled graph. Row `i` of `adj` is the neighborhood of `i`.
///
/// Rows are symmetric, irreflexive and zero above bit `n − 1`; every
/// constructor maintains this, so derived equality is labeled equality.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { n: n as u8, adj: [0; MAX_VERTICES] })
    }

    pub fn complete(n: usize) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for v in 0..n {
            g.adj[v] = all & !(1 << v);
        }
        Ok(g)
    }

    /// The graph on `n` vertices with exactly the given edges; duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(i, j) in edges {
            for v in [i, j] {
                if v >= n {
                    return Err(Error::Bounds { what: "edge endpoint", value: v, limit: n });
                }
            }
            if i == j {
                return Err(Error::Loop(i));
            }
            g.adj[i] |= 1 << j;
            g.adj[j] |= 1 << i;
        }
        Ok(g)
    }

    /// Builds a graph from raw rows, validating symmetry and loops.
    pub fn from_rows(rows: &[u32]) -> Result<Graph> {
        let n = rows.len();
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n).0;
        for (i, &r) in rows.iter().enumerate() {
            if r & !all != 0 {
                return Err(Error::Bounds { what: "row bit", value: (31 - r.leading_zeros()) as usize, limit: n });
            }
            if r >> i & 1 == 1 {
                return Err(Error::Loop(i));
            }
            g.adj[i] = r;
        }
        for i in 0..n {
            for j in Bits(g.adj[i]) {
                if g.adj[j] >> i & 1 == 0 {
                    return Err(Error::Parse(format!("asymmetric rows at ({i}, {j})")));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.order()]
    }

    #[inline]
    pub(crate) fn raw_rows(&self) -> &[u32; MAX_VERTICES] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] >> j & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order()).flat_map(move |i| Bits(self.adj[i] & ((1u32 << i).wrapping_sub(1))).map(move |j| (j, i)))
    }

    pub fn is_regular(&self) -> bool {
        let n = self.order();
        n == 0 || (1..n).all(|v| self.degree(v) == self.degree(0))
    }

    fn check_subset(&self, set: VertexSet) -> Result<()> {
        if set.0 & !self.vertices().0 != 0 {
            return Err(Error::Bounds {
                what: "vertex set element",
                value: (31 - set.0.leading_zeros()) as usize,
                limit: self.order(),
            });
        }
        Ok(())
    }

    /// `G^U`: toggle adjacency between `U` and its complement.
    pub fn switch(&self, set: VertexSet) -> Result<Graph> {
        self.check_subset(set)?;
        Ok(self.switch_unchecked(set))
    }

    #[inline]
    pub(crate) fn switch_unchecked(&self, set: VertexSet) -> Graph {
        let n = self.order();
        let all = VertexSet::full(n).0;
        let u = set.0;
        let outside = all & !u;
        let mut g = *self;
        for v in 0..n {
            g.adj[v] ^= if u >> v & 1 == 1 { outside } else { u };
        }
        g
    }

    /// `G_U^+`: a new vertex with index `n` adjacent to exactly `U`.
    pub fn add_vertex(&self, set: VertexSet) -> Result<Graph> {
        let n = self.order();
        if n == MAX_VERTICES {
            return Err(Error::Bounds { what: "vertex count", value: n + 1, limit: MAX_VERTICES });
        }
        self.check_subset(set)?;
        Ok(self.add_vertex_unchecked(set))
    }

    #[inline]
    pub(crate) fn add_vertex_unchecked(&self, set: VertexSet) -> Graph {
        let n = self.order();
        let mut g = *self;
        g.n += 1;
        g.adj[n] = set.0;
        for v in set.iter() {
            g.adj[v] |= 1 << n;
        }
        g
    }

    /// Induced subgraph on `W`, relabeled in ascending order.
    pub fn induced_subgraph(&self, set: VertexSet) -> Result<Graph> {
        self.check_subset(set)?;
        let mut g = Graph { n: set.len() as u8, adj: [0; MAX_VERTICES] };
        for (new_i, old_i) in set.iter().enumerate() {
            g.adj[new_i] = compress(self.adj[old_i] & set.0, set.0);
        }
        Ok(g)
    }

    /// `G − v`.
    pub fn remove_vertex(&self, v: usize) -> Result<Graph> {
        if v >= self.order() {
            return Err(Error::Bounds { what: "vertex", value: v, limit: self.order() });
        }
        self.induced_subgraph(VertexSet(self.vertices().0 & !(1 << v)))
    }

    /// `G ⊔ H` with `H` shifted past the vertices of `G`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let (n, m) = (self.order(), other.order());
        check_order(n + m)?;
        let mut g = *self;
        g.n = (n + m) as u8;
        for v in 0..m {
            g.adj[n + v] = other.adj[v] << n;
        }
        Ok(g)
    }

    pub fn complement(&self) -> Graph {
        let n = self.order();
        let all = VertexSet::full(n).0;
        let mut g = *self;
        for v in 0..n {
            g.adj[v] = !self.adj[v] & all & !(1 << v);
        }
        g
    }

    /// Relabels so that vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.order();
        let mut seen = 0u32;
        if perm.len() != n {
            return Err(Error::Bounds { what: "permutation length", value: perm.len(), limit: n });
        }
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::Bounds { what: "permutation image", value: p, limit: n });
            }
            seen |= 1 << p;
        }
        let mut g = Graph { n: self.n, adj: [0; MAX_VERTICES] };
        for v in 0..n {
            for w in Bits(self.adj[v]) {
                g.adj[perm[v]] |= 1 << perm[w];
            }
        }
        Ok(g)
    }

    /// Vertex sets of the connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices().0;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = left & left.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let mut next = 0;
                for v in Bits(frontier) {
                    next |= self.adj[v];
                }
                frontier = next & !comp;
                comp |= next;
            }
            left &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.order();
        let mut best: Option<usize> = None;
        for root in 0..n {
            let mut dist = [usize::MAX; MAX_VERTICES];
            let mut parent = [usize::MAX; MAX_VERTICES];
            let mut queue = [0usize; MAX_VERTICES];
            let (mut head, mut tail) = (0, 1);
            queue[0] = root;
            dist[root] = 0;
            while head < tail {
                let v = queue[head];
                head += 1;
                for w in Bits(self.adj[v]) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[v] + 1;
                        parent[w] = v;
                        queue[tail] = w;
                        tail += 1;
                    } else if parent[v] != w {
                        let len = dist[v] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// The text form `<n>:<m1>,…,<m(n−1)>`; `mk` has bit `j` set iff `k ∼ j`, `j < k`.
    pub fn encode(&self) -> String {
        let mut s = format!("{}:", self.order());
        for k in 1..self.order() {
            if k > 1 {
                s.push(',');
            }
            let lower = self.adj[k] & ((1u32 << k) - 1);
            s.push_str(&format!("{lower}"));
        }
        s
    }

    pub fn decode(text: &str) -> Result<Graph> {
        let text = text.trim();
        let (n_str, rows) = text
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("missing ':' in `{text}`")))?;
        let n: usize = n_str
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex count `{n_str}`")))?;
        check_order(n).map_err(|_| Error::Parse(format!("vertex count {n} exceeds {MAX_VERTICES}")))?;
        let mut g = Graph::empty(n)?;
        let fields: Vec<&str> = if rows.is_empty() { Vec::new() } else { rows.split(',').collect() };
        if fields.len() != n.saturating_sub(1) {
            return Err(Error::Parse(format!("expected {} rows, found {}", n.saturating_sub(1), fields.len())));
        }
        for (i, field) in fields.iter().enumerate() {
            let k = i + 1;
            let mask: u32 = field
                .parse()
                .map_err(|_| Error::Parse(format!("bad row `{field}` for vertex {k}")))?;
            if mask >> k != 0 {
                return Err(Error::Parse(format!("row {mask} of vertex {k} has bits at or above {k}")));
            }
            for j in Bits(mask) {
                g.adj[k] |= 1 << j;
                g.adj[j] |= 1 << k;
            }
        }
        Ok(g)
    }
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::Bounds { what: "vertex count", value: n, limit: MAX_VERTICES });
    }
    Ok(())
}

/// Packs the bits of `x` selected by `mask` into the low bits (software `pext`).
#[inline]
fn compress(x: u32, mask: u32) -> u32 {
    let mut out = 0;
    for (k, v) in Bits(mask).enumerate() {
        out |= (x >> v & 1) << k;
    }
    out
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.encode())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.encode())
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Graph> {
        Graph::decode(s)
    }
}
