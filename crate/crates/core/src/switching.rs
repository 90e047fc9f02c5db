//! Switching equivalence and deduplicated sets of switching classes.
//!
//! Two graphs are compared by isolating a base vertex: switching `G` on
//! `N_G(v₀)` makes `v₀` isolated, and once `v₀` is isolated only the trivial
//! switchings keep it so. Hence `G` and `H` are switching equivalent iff the
//! normalized `G` is isomorphic to `H` normalized at some vertex `w`, with
//! `v₀ ↦ w`. The isomorphism search only pairs vertices with equal third
//! Seidel degree, which switching preserves vertex by vertex.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use crate::graph::{Bits, Graph, VertexSet, MAX_VERTICES};
use crate::spectra::third_degrees_per_vertex;

/// Sorted third Seidel degrees. Equal for switching-equivalent graphs; the
/// converse does not hold.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SwitchKey(pub Vec<i32>);

impl SwitchKey {
    pub fn of(g: &Graph) -> SwitchKey {
        key_from_degrees(&third_degrees_per_vertex(g), g.order())
    }
}

fn key_from_degrees(deg: &[i32; MAX_VERTICES], n: usize) -> SwitchKey {
    let mut d = deg[..n].to_vec();
    d.sort_unstable();
    SwitchKey(d)
}

/// Vertex colors of a normalized graph: third Seidel degree, degree and the
/// sum of neighbor degrees.
fn colors(g: &Graph, deg3: &[i32; MAX_VERTICES]) -> [u32; MAX_VERTICES] {
    let n = g.order();
    let rows = g.rows();
    let mut degree = [0u32; MAX_VERTICES];
    for v in 0..n {
        degree[v] = rows[v].count_ones();
    }
    let mut out = [0u32; MAX_VERTICES];
    for v in 0..n {
        let nbr: u32 = Bits(rows[v]).map(|w| degree[w]).sum();
        out[v] = ((deg3[v] + 2048) as u32) << 20 | degree[v] << 12 | nbr;
    }
    out
}

fn sorted_colors(c: &[u32; MAX_VERTICES], n: usize) -> [u32; MAX_VERTICES] {
    let mut s = *c;
    s[..n].sort_unstable();
    s
}

/// A graph prepared for repeated comparisons against stored classes.
struct Probe {
    n: usize,
    deg3: [i32; MAX_VERTICES],
    base: usize,
    normalized: Graph,
    colors: [u32; MAX_VERTICES],
    sorted: [u32; MAX_VERTICES],
}

impl Probe {
    fn new(g: &Graph, deg3: [i32; MAX_VERTICES]) -> Probe {
        let n = g.order();
        // Base vertex: rarest third degree, lowest index on ties.
        let base = (0..n)
            .min_by_key(|&v| ((0..n).filter(|&u| deg3[u] == deg3[v]).count(), v))
            .unwrap_or(0);
        let normalized = if n == 0 { *g } else { g.switch_unchecked(g.neighbors(base)) };
        let colors = colors(&normalized, &deg3);
        let sorted = sorted_colors(&colors, n);
        Probe { n, deg3, base, normalized, colors, sorted }
    }

    /// Whether `h` (with per-vertex third degrees `h_deg3`) is in the same
    /// switching class. Orders and sorted degrees must already agree.
    fn matches(&self, h: &Graph, h_deg3: &[i32; MAX_VERTICES]) -> bool {
        let n = self.n;
        if n <= 1 {
            return true;
        }
        let target = self.deg3[self.base];
        for w in 0..n {
            if h_deg3[w] != target {
                continue;
            }
            let h0 = h.switch_unchecked(h.neighbors(w));
            let hc = colors(&h0, h_deg3);
            if sorted_colors(&hc, n)[..n] != self.sorted[..n] {
                continue;
            }
            if self.isomorphic_rooted(&h0, &hc, w) {
                return true;
            }
        }
        false
    }

    fn isomorphic_rooted(&self, h: &Graph, hc: &[u32; MAX_VERTICES], root: usize) -> bool {
        let n = self.n;
        let mut cand = [0u32; MAX_VERTICES];
        for u in 0..n {
            let mut m = 0u32;
            for x in 0..n {
                if hc[x] == self.colors[u] {
                    m |= 1 << x;
                }
            }
            cand[u] = m;
        }
        cand[self.base] = 1 << root;
        let unmapped = VertexSet::full(n).0 & !(1 << self.base);
        let g_rows = self.normalized.raw_rows();
        let h_rows = h.raw_rows();
        // Apply the base pairing to every other vertex.
        let gb = g_rows[self.base];
        let hb = h_rows[root];
        for u in Bits(unmapped) {
            cand[u] &= if gb >> u & 1 == 1 { hb } else { !hb };
            cand[u] &= !(1 << root);
        }
        extend_mapping(g_rows, h_rows, &cand, unmapped, 1 << root)
    }
}

/// Forward-checking backtracking: `cand[u]` holds the images still
/// consistent with every pair fixed so far.
fn extend_mapping(
    g: &[u32; MAX_VERTICES],
    h: &[u32; MAX_VERTICES],
    cand: &[u32; MAX_VERTICES],
    unmapped: u32,
    used: u32,
) -> bool {
    if unmapped == 0 {
        return true;
    }
    let mut pick = usize::MAX;
    let mut fewest = u32::MAX;
    for u in Bits(unmapped) {
        let c = (cand[u] & !used).count_ones();
        if c == 0 {
            return false;
        }
        if c < fewest {
            fewest = c;
            pick = u;
            if c == 1 {
                break;
            }
        }
    }
    let u = pick;
    let rest = unmapped & !(1 << u);
    let gu = g[u];
    'image: for x in Bits(cand[u] & !used) {
        let now_used = used | 1 << x;
        let hx = h[x];
        let mut next = *cand;
        for w in Bits(rest) {
            let side = if gu >> w & 1 == 1 { hx } else { !hx };
            let c = cand[w] & side & !now_used;
            if c == 0 {
                continue 'image;
            }
            next[w] = c;
        }
        if extend_mapping(g, h, &next, rest, now_used) {
            return true;
        }
    }
    false
}

/// True iff some switching of `g` is isomorphic to `h`.
pub fn switching_equivalent(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() {
        return false;
    }
    let gd = third_degrees_per_vertex(g);
    let hd = third_degrees_per_vertex(h);
    if key_from_degrees(&gd, g.order()) != key_from_degrees(&hd, h.order()) {
        return false;
    }
    Probe::new(g, gd).matches(h, &hd)
}

/// Outcome of [`ClassSet::insert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Insertion {
    Inserted(usize),
    DuplicateOf(usize),
}

impl Insertion {
    pub fn is_inserted(self) -> bool {
        matches!(self, Insertion::Inserted(_))
    }

    pub fn index(self) -> usize {
        match self {
            Insertion::Inserted(i) | Insertion::DuplicateOf(i) => i,
        }
    }
}

#[derive(Clone, Debug)]
struct Member<P> {
    graph: Graph,
    deg3: [i32; MAX_VERTICES],
    payload: P,
}

/// Pairwise switching-inequivalent graphs, each with a payload, bucketed by
/// [`SwitchKey`]. Members keep their insertion order.
#[derive(Clone, Debug)]
pub struct ClassSet<P> {
    members: Vec<Member<P>>,
    buckets: BTreeMap<SwitchKey, Vec<usize>>,
}

impl<P> Default for ClassSet<P> {
    fn default() -> Self {
        ClassSet { members: Vec::new(), buckets: BTreeMap::new() }
    }
}

impl<P> ClassSet<P> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn bucket_count(&self) -> usize {
        self.buckets.len()
    }

    pub fn graph(&self, i: usize) -> &Graph {
        &self.members[i].graph
    }

    pub fn payload(&self, i: usize) -> &P {
        &self.members[i].payload
    }

    pub fn payload_mut(&mut self, i: usize) -> &mut P {
        &mut self.members[i].payload
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = (&Graph, &P)> + '_ {
        self.members.iter().map(|m| (&m.graph, &m.payload))
    }

    pub fn graphs(&self) -> impl ExactSizeIterator<Item = &Graph> + '_ {
        self.members.iter().map(|m| &m.graph)
    }

    /// Index of the stored class of `g`, consulting only `g`'s bucket.
    pub fn find(&self, g: &Graph) -> Option<usize> {
        let deg3 = third_degrees_per_vertex(g);
        let key = key_from_degrees(&deg3, g.order());
        self.find_in_bucket(g, deg3, &key)
    }

    fn find_in_bucket(&self, g: &Graph, deg3: [i32; MAX_VERTICES], key: &SwitchKey) -> Option<usize> {
        let bucket = self.buckets.get(key)?;
        let probe = Probe::new(g, deg3);
        bucket.iter().copied().find(|&i| {
            let m = &self.members[i];
            probe.matches(&m.graph, &m.deg3)
        })
    }

    pub fn contains(&self, g: &Graph) -> bool {
        self.find(g).is_some()
    }

    /// Stores `g` unless an equivalent graph is already present.
    pub fn insert(&mut self, g: Graph, payload: P) -> Insertion {
        let deg3 = third_degrees_per_vertex(&g);
        let key = key_from_degrees(&deg3, g.order());
        if let Some(i) = self.find_in_bucket(&g, deg3, &key) {
            return Insertion::DuplicateOf(i);
        }
        let i = self.members.len();
        self.members.push(Member { graph: g, deg3, payload });
        self.buckets.entry(key).or_default().push(i);
        Insertion::Inserted(i)
    }

    pub fn into_entries(self) -> Vec<(Graph, P)> {
        self.members.into_iter().map(|m| (m.graph, m.payload)).collect()
    }
}

impl<P> FromIterator<(Graph, P)> for ClassSet<P> {
    fn from_iter<I: IntoIterator<Item = (Graph, P)>>(iter: I) -> Self {
        let mut set = ClassSet::new();
        for (g, p) in iter {
            set.insert(g, p);
        }
        set
    }
}
