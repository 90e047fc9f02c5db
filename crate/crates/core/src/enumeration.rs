//! Level-by-level generation of switching classes satisfying the spectral
//! condition.
//!
//! Every class at order `n + 1` is obtained from a class at order `n` by
//! adding a vertex adjacent to some subset `U`. Each stored class carries the
//! list of subsets still worth trying: for every `U` that passed at the
//! parent, both `U` and `U ∪ {n}` are forwarded to the child.

use alloc::sync::Arc;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::forbidden::minimal_forbidden;
use crate::graph::{Graph, VertexSet, MAX_VERTICES};
use crate::named::NamedGraph;
use crate::ring::QuadInt;
use crate::spectra::{psd_rank_tracked, Magnitude};
use crate::switching::{switching_equivalent, ClassSet};
use crate::Family;

/// A stored class ready to be extended.
#[derive(Clone, Debug)]
pub struct EnumNode {
    pub graph: Graph,
    pub rank: usize,
    pub possible_subsets: Arc<Vec<VertexSet>>,
}

/// Per-class payload kept in a [`LevelStore`].
#[derive(Clone, Debug)]
pub struct NodeData {
    pub rank: usize,
    /// Dropped once the level has been extended.
    pub possible_subsets: Option<Arc<Vec<VertexSet>>>,
}

/// Outcome of extending one node by every subset in its list.
#[derive(Clone, Debug)]
pub struct Extension {
    /// Children passing the test, with their ranks, in subset order.
    pub children: Vec<(Graph, usize)>,
    /// Subset list shared by all children.
    pub possible_subsets: Arc<Vec<VertexSet>>,
    pub tests: u64,
    pub magnitude: Magnitude,
}

/// Extends `node` by one vertex for every subset in its list.
pub fn extend_node(node: &EnumNode, shift: QuadInt) -> Result<Extension> {
    let n = node.graph.order();
    if n + 1 > MAX_VERTICES {
        return Err(Error::Bounds { what: "order", value: n + 1, limit: MAX_VERTICES });
    }
    let new_vertex = VertexSet::singleton(n);
    let mut magnitude = Magnitude::default();
    let mut children = Vec::new();
    let mut next = Vec::new();
    for &u in node.possible_subsets.iter() {
        let child = node.graph.add_vertex_unchecked(u);
        let verdict = psd_rank_tracked(&child, shift, &mut magnitude)?;
        if verdict.psd {
            children.push((child, verdict.rank));
            next.push(u);
            next.push(u.union(new_vertex));
        }
    }
    Ok(Extension {
        children,
        possible_subsets: Arc::new(next),
        tests: node.possible_subsets.len() as u64,
        magnitude,
    })
}

/// Switching classes found so far, one [`ClassSet`] per order.
#[derive(Debug)]
pub struct LevelStore {
    family: Family,
    levels: Vec<ClassSet<NodeData>>,
    seeds: Vec<Graph>,
    seed_passed: Vec<bool>,
    magnitude: Magnitude,
    tests: u64,
    terminal: Option<usize>,
}

/// Seeds the store with the minimal forbidden subgraphs that satisfy the
/// spectral condition. Their subset lists contain every nonempty subset.
pub fn seed_nodes(family: Family) -> Result<LevelStore> {
    let shift = family.shift();
    let seeds = minimal_forbidden(family, family.forbidden_order_bound());
    let mut store = LevelStore {
        family,
        levels: (0..=MAX_VERTICES).map(|_| ClassSet::new()).collect(),
        seeds: seeds.clone(),
        seed_passed: Vec::with_capacity(seeds.len()),
        magnitude: Magnitude::default(),
        tests: 0,
        terminal: None,
    };
    for g in seeds {
        let verdict = psd_rank_tracked(&g, shift, &mut store.magnitude)?;
        store.tests += 1;
        store.seed_passed.push(verdict.psd);
        if verdict.psd {
            let n = g.order();
            let all: Vec<VertexSet> = (1..1u32 << n).map(VertexSet).collect();
            store.levels[n].insert(g, NodeData { rank: verdict.rank, possible_subsets: Some(Arc::new(all)) });
        }
    }
    Ok(store)
}

impl LevelStore {
    pub fn family(&self) -> Family {
        self.family
    }

    /// Minimal forbidden subgraphs, with whether each one passed the test.
    pub fn seeds(&self) -> impl Iterator<Item = (&Graph, bool)> + '_ {
        self.seeds.iter().zip(self.seed_passed.iter().copied())
    }

    pub fn level(&self, n: usize) -> &ClassSet<NodeData> {
        &self.levels[n]
    }

    /// Orders holding at least one class.
    pub fn orders(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.levels.len()).filter(|&n| !self.levels[n].is_empty())
    }

    pub fn total(&self) -> usize {
        self.levels.iter().map(ClassSet::len).sum()
    }

    pub fn magnitude(&self) -> Magnitude {
        self.magnitude
    }

    pub fn tests(&self) -> u64 {
        self.tests
    }

    /// First empty order reached by [`LevelStore::run_with`], once finished.
    pub fn terminal_order(&self) -> Option<usize> {
        self.terminal
    }

    fn max_seed_order(&self) -> usize {
        self.seeds.iter().map(Graph::order).max().unwrap_or(0)
    }

    /// Nodes of order `n` that still carry a subset list.
    pub fn nodes(&self, n: usize) -> Vec<EnumNode> {
        self.levels[n]
            .iter()
            .filter_map(|(g, d)| {
                d.possible_subsets.as_ref().map(|s| EnumNode { graph: *g, rank: d.rank, possible_subsets: Arc::clone(s) })
            })
            .collect()
    }

    /// Inserts the children of one extension into the next level.
    pub fn merge(&mut self, ext: Extension) {
        self.tests += ext.tests;
        self.magnitude.merge(ext.magnitude);
        for (g, rank) in ext.children {
            let n = g.order();
            self.levels[n].insert(g, NodeData { rank, possible_subsets: Some(Arc::clone(&ext.possible_subsets)) });
        }
    }

    pub fn release_subsets(&mut self, n: usize) {
        for i in 0..self.levels[n].len() {
            self.levels[n].payload_mut(i).possible_subsets = None;
        }
    }

    /// Processes levels in increasing order until an empty level beyond the
    /// seeds is reached. `extend_batch` must return one extension per node,
    /// in order; batches are merged in the order they are produced.
    pub fn run_with<F>(mut self, batch_size: usize, mut extend_batch: F) -> Result<LevelStore>
    where
        F: FnMut(&[EnumNode], QuadInt) -> Result<Vec<Extension>>,
    {
        let shift = self.family.shift();
        let start = self.orders().next().unwrap_or(0);
        for n in start..=MAX_VERTICES {
            let nodes = self.nodes(n);
            if nodes.is_empty() && self.levels[n].is_empty() && n > self.max_seed_order() {
                self.terminal = Some(n);
                return Ok(self);
            }
            if n == MAX_VERTICES {
                break;
            }
            for batch in nodes.chunks(batch_size.max(1)) {
                let exts = extend_batch(batch, shift)?;
                debug_assert_eq!(exts.len(), batch.len());
                for ext in exts {
                    self.merge(ext);
                }
            }
            self.release_subsets(n);
        }
        Err(Error::Bounds { what: "order", value: MAX_VERTICES + 1, limit: MAX_VERTICES })
    }
}

/// Runs the full enumeration on the current thread.
pub fn enumerate_levels(family: Family) -> Result<LevelStore> {
    seed_nodes(family)?.run_with(4096, |batch, shift| batch.iter().map(|node| extend_node(node, shift)).collect())
}

/// Summary of one order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderStats {
    pub order: usize,
    pub count: usize,
    pub min_rank: usize,
    /// Indices (within the level) of the classes attaining `min_rank`.
    pub achievers: Vec<usize>,
    /// Reference graphs switching equivalent to the unique achiever.
    pub identified: Vec<NamedGraph>,
    /// For a unique achiever: whether some switching of it is regular.
    pub regular_switching: Option<bool>,
}

impl OrderStats {
    pub fn unique(&self) -> bool {
        self.achievers.len() == 1
    }
}

#[derive(Clone, Debug)]
pub struct LevelStats {
    pub family: Family,
    pub orders: Vec<OrderStats>,
    pub total: usize,
    pub magnitude: Magnitude,
    pub tests: u64,
    pub terminal_order: Option<usize>,
}

impl LevelStats {
    pub fn at(&self, n: usize) -> Option<&OrderStats> {
        self.orders.iter().find(|o| o.order == n)
    }

    /// `(order, min_rank)` for every nonempty order.
    pub fn min_ranks(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.orders.iter().map(|o| (o.order, o.min_rank))
    }
}

/// Minimum rank, its achievers and, for a unique achiever, identification
/// against the reference graphs and a search for a regular switching.
/// `members` lists `(graph, rank)` in level order.
pub fn order_stats(order: usize, members: &[(Graph, usize)]) -> OrderStats {
    let min_rank = members.iter().map(|&(_, r)| r).min().unwrap_or(0);
    let achievers: Vec<usize> = (0..members.len()).filter(|&i| members[i].1 == min_rank).collect();
    let (identified, regular) = if achievers.len() == 1 {
        let g = &members[achievers[0]].0;
        let identified: Vec<NamedGraph> = NamedGraph::ALL
            .into_iter()
            .filter(|named| {
                let h = named.graph();
                h.order() == order && switching_equivalent(g, &h)
            })
            .collect();
        let regular = identified.iter().any(|named| named.graph().is_regular()) || regular_switching(g).is_some();
        (identified, Some(regular))
    } else {
        (Vec::new(), None)
    };
    OrderStats { order, count: members.len(), min_rank, achievers, identified, regular_switching: regular }
}

/// Counts, minimum ranks and identification of unique minimum-rank classes.
pub fn summarize(store: &LevelStore) -> LevelStats {
    let orders = store
        .orders()
        .map(|n| {
            let members: Vec<(Graph, usize)> = store.level(n).iter().map(|(g, d)| (*g, d.rank)).collect();
            order_stats(n, &members)
        })
        .collect();
    LevelStats {
        family: store.family(),
        orders,
        total: store.total(),
        magnitude: store.magnitude(),
        tests: store.tests(),
        terminal_order: store.terminal_order(),
    }
}

/// A set `U` with `G^U` regular, if any. Vertex 0 is kept outside `U`
/// since `G^U = G^{V∖U}`; the search walks the remaining subsets in Gray
/// code order while maintaining the degree sum and the sum of squares.
pub fn regular_switching(g: &Graph) -> Option<VertexSet> {
    let n = g.order();
    if n <= 2 {
        return Some(VertexSet::EMPTY);
    }
    let mut rows: [u32; MAX_VERTICES] = [0; MAX_VERTICES];
    rows[..n].copy_from_slice(g.rows());
    let mut deg: [i64; MAX_VERTICES] = [0; MAX_VERTICES];
    for v in 0..n {
        deg[v] = rows[v].count_ones() as i64;
    }
    let mut sum: i64 = deg[..n].iter().sum();
    let mut sq: i64 = deg[..n].iter().map(|d| d * d).sum();
    let nn = n as i64;
    let mut set = 0u32;
    let steps: u64 = 1 << (n - 1);
    for step in 0..steps {
        if step > 0 {
            let x = step.trailing_zeros() as usize + 1;
            set ^= 1 << x;
            // Every other vertex gains or loses the edge to x.
            for y in 0..n {
                if y == x {
                    continue;
                }
                let delta = if rows[y] >> x & 1 == 1 { -1 } else { 1 };
                sum += delta;
                sq += 2 * delta * deg[y] + 1;
                deg[y] += delta;
                rows[y] ^= 1 << x;
            }
            let old = deg[x];
            let new = nn - 1 - old;
            sum += new - old;
            sq += new * new - old * old;
            deg[x] = new;
            rows[x] ^= VertexSet::full(n).0 & !(1 << x);
        }
        if nn * sq == sum * sum {
            return Some(VertexSet(set));
        }
    }
    None
}
