//! Closure membership for the cherry and single-edge families, and the
//! brute-force search for minimal forbidden subgraphs of their switching
//! closures.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{Graph, VertexSet};
use crate::named::NamedGraph;
use crate::switching::ClassSet;
use crate::Family;

/// Sizes of the connected components allowed in `cl{F}`.
fn allowed_component_orders(family: Family) -> &'static [usize] {
    match family {
        Family::Cherry => &[1, 2, 3],
        Family::Edge => &[1, 2],
    }
}

/// True iff every connected component of `g` is `K1`, `K2`, or (cherry only) `P3`.
pub fn in_closure(g: &Graph, family: Family) -> bool {
    g.components().into_iter().all(|comp| {
        let k = comp.len();
        if !allowed_component_orders(family).contains(&k) {
            return false;
        }
        // Connected on at most three vertices: only K3 is excluded.
        let edges: usize = comp.iter().map(|v| g.neighbors(v).intersection(comp).len()).sum::<usize>() / 2;
        k < 3 || edges == 2
    })
}

/// All graphs of `cl{F}` up to isomorphism, by order.
#[derive(Clone, Debug)]
pub struct BaseFamily {
    pub family: Family,
    /// `by_order[n]` lists one graph per multiset of components of total order `n`.
    pub by_order: Vec<Vec<Graph>>,
}

impl BaseFamily {
    pub fn max_order(&self) -> usize {
        self.by_order.len() - 1
    }

    pub fn at(&self, n: usize) -> &[Graph] {
        self.by_order.get(n).map_or(&[], Vec::as_slice)
    }
}

/// Disjoint unions `c·P3 ⊔ b·K2 ⊔ a·K1` (`c = 0` for the edge family) for
/// every order up to `n_max`.
pub fn closure_base(family: Family, n_max: usize) -> BaseFamily {
    let cherry = NamedGraph::Cherry.graph();
    let edge = NamedGraph::Edge.graph();
    let k1 = Graph::empty(1).expect("K1");
    let max_cherries = |n: usize| if family == Family::Cherry { n / 3 } else { 0 };
    let mut by_order = vec![Vec::new(); n_max + 1];
    for (n, slot) in by_order.iter_mut().enumerate() {
        for c in (0..=max_cherries(n)).rev() {
            for b in (0..=(n - 3 * c) / 2).rev() {
                let a = n - 3 * c - 2 * b;
                let mut g = Graph::empty(0).expect("empty graph");
                for (count, part) in [(c, &cherry), (b, &edge), (a, &k1)] {
                    for _ in 0..count {
                        g = g.disjoint_union(part).expect("order bound checked by caller");
                    }
                }
                slot.push(g);
            }
        }
    }
    BaseFamily { family, by_order }
}

/// Minimal forbidden subgraphs for the switching closure `⟨F⟩`, one per
/// switching class, in discovery order.
///
/// Candidates are built by attaching a new vertex to a nonempty subset of a
/// base graph of order `n − 1 < order_bound`. A candidate `G` is kept when no
/// base graph of order `n` is switching equivalent to it while every `G − v`
/// is switching equivalent to a base graph of order `n − 1`.
pub fn minimal_forbidden(family: Family, order_bound: usize) -> Vec<Graph> {
    let base = closure_base(family, order_bound);
    let classes: Vec<ClassSet<()>> = base
        .by_order
        .iter()
        .map(|graphs| graphs.iter().map(|g| (*g, ())).collect())
        .collect();
    let mut found: ClassSet<()> = ClassSet::new();
    for m in 1..order_bound {
        for b in base.at(m) {
            for mask in 1..1u32 << m {
                let g = b.add_vertex_unchecked(VertexSet(mask));
                if classes[m + 1].contains(&g) {
                    continue;
                }
                let minimal = (0..=m).all(|v| {
                    let sub = g.remove_vertex(v).expect("vertex in range");
                    classes[m].contains(&sub)
                });
                if minimal {
                    found.insert(g, ());
                }
            }
        }
    }
    found.graphs().copied().collect()
}
