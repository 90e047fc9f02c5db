//! Reference values for both enumerations and the derived table of maximum
//! numbers of equiangular lines.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::named::NamedGraph;
use crate::Family;

/// Frozen results of a complete enumeration for one family.
#[derive(Clone, Copy, Debug)]
pub struct ExpectedTables {
    pub family: Family,
    pub first_order: usize,
    /// Number of switching classes at orders `first_order..`.
    pub counts: &'static [usize],
    /// Minimum rank of `S + sI` at the same orders.
    pub min_ranks: &'static [usize],
    pub total: usize,
    /// Orders with a unique minimum-rank class.
    pub unique_orders: &'static [usize],
    pub identified: &'static [(usize, NamedGraph)],
    /// Orders whose unique minimum-rank class has no regular switching.
    pub non_regular: &'static [usize],
    /// First empty order.
    pub terminal_order: usize,
}

pub const CHERRY: ExpectedTables = ExpectedTables {
    family: Family::Cherry,
    first_order: 5,
    counts: &[
        1, 6, 25, 82, 294, 1047, 3533, 8929, 14921, 15799, 10555, 5030, 2034, 831, 325, 140, 63, 31, 13, 6, 3, 2, 2, 1,
    ],
    min_ranks: &[5, 6, 6, 6, 7, 7, 8, 8, 8, 8, 9, 10, 11, 12, 13, 13, 14, 14, 15, 15, 25, 26, 27, 28],
    total: 63673,
    unique_orders: &[5, 7, 8, 13, 14, 22, 24, 28],
    identified: &[
        (5, NamedGraph::C5),
        (8, NamedGraph::C8),
        (14, NamedGraph::Heawood),
        (24, NamedGraph::HeawoodHubs24),
        (28, NamedGraph::ComplementLineK8),
    ],
    non_regular: &[7, 13, 22, 24],
    terminal_order: 29,
};

pub const EDGE: ExpectedTables = ExpectedTables {
    family: Family::Edge,
    first_order: 5,
    counts: &[2, 5, 12, 20, 35, 52, 69, 89, 101, 103, 101, 90, 70, 54, 37, 23, 16, 10, 5, 3, 2, 1, 1, 1],
    min_ranks: &[5, 5, 5, 5, 5, 5, 6, 6, 6, 6, 6, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7],
    total: 902,
    unique_orders: &[8, 9, 10, 14, 15, 16, 26, 27, 28],
    identified: &[
        (9, NamedGraph::LineK33),
        (10, NamedGraph::Petersen),
        (15, NamedGraph::ComplementLineK6),
        (16, NamedGraph::Clebsch),
        (27, NamedGraph::ComplementSchlafli),
        (28, NamedGraph::ComplementLineK8),
    ],
    non_regular: &[],
    terminal_order: 29,
};

/// `N(d)` for `d = 2..=14`; beyond that `max(24, ⌊3(d−1)/2⌋)`.
pub const N_ALPHA_SMALL: [usize; 13] = [2, 3, 4, 6, 8, 10, 14, 15, 16, 17, 18, 20, 22];

impl ExpectedTables {
    pub fn for_family(family: Family) -> &'static ExpectedTables {
        match family {
            Family::Cherry => &CHERRY,
            Family::Edge => &EDGE,
        }
    }

    pub fn orders(&self) -> impl Iterator<Item = usize> {
        self.first_order..self.first_order + self.counts.len()
    }

    pub fn count(&self, n: usize) -> Option<usize> {
        n.checked_sub(self.first_order).and_then(|i| self.counts.get(i).copied())
    }

    pub fn min_rank(&self, n: usize) -> Option<usize> {
        n.checked_sub(self.first_order).and_then(|i| self.min_ranks.get(i).copied())
    }
}

/// Expected `N(d)` for the cherry angle.
pub fn expected_n_alpha(d: usize) -> usize {
    match d {
        0 | 1 => d,
        2..=14 => N_ALPHA_SMALL[d - 2],
        _ => cherry_bound(d).max(24),
    }
}

fn graph(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("hand-entered graph")
}

/// Minimal forbidden subgraphs for the switching closure, one
/// representative per class.
pub fn expected_minimal_forbidden(family: Family) -> Vec<Graph> {
    // Vertices a, b, c, ... are 0, 1, 2, ...
    let p4_k1 = graph(5, &[(0, 1), (1, 2), (2, 3)]);
    let k3_k2 = graph(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]);
    match family {
        Family::Cherry => alloc::vec![
            p4_k1,
            k3_k2,
            graph(6, &[(1, 2), (0, 2), (2, 3), (4, 5)]),
            graph(6, &[(1, 2), (0, 2), (2, 3), (3, 5), (3, 4)]),
            graph(7, &[(0, 1), (0, 2), (0, 3)]),
        ],
        Family::Edge => alloc::vec![
            graph(5, &[(0, 1), (1, 2)]),
            graph(5, &[(0, 1), (1, 2), (3, 4)]),
            p4_k1,
            k3_k2,
        ],
    }
}

/// Lower bound `max(d, ⌊3(d−1)/2⌋)` on `N(d)` from graphs in the switching
/// closure of the cherry.
pub fn cherry_bound(d: usize) -> usize {
    d.max(3 * d.saturating_sub(1) / 2)
}

/// Largest order of a class outside the closure whose minimum rank is at
/// most `d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOrderProfile {
    min_ranks: Vec<(usize, usize)>,
    complete: bool,
}

impl RankOrderProfile {
    /// `complete` states that every order beyond those listed is empty.
    pub fn new(min_ranks: impl IntoIterator<Item = (usize, usize)>, complete: bool) -> RankOrderProfile {
        let mut min_ranks: Vec<_> = min_ranks.into_iter().collect();
        min_ranks.sort_unstable();
        RankOrderProfile { min_ranks, complete }
    }

    pub fn from_expected(t: &ExpectedTables) -> RankOrderProfile {
        RankOrderProfile::new(t.orders().zip(t.min_ranks.iter().copied()), true)
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Largest `n` with `minrank(n) ≤ d`, or 0.
    pub fn max_order(&self, d: usize) -> usize {
        self.min_ranks.iter().filter(|&&(_, r)| r <= d).map(|&(n, _)| n).max().unwrap_or(0)
    }
}

/// `(d, N(d))` for `d = 2..=dmax`, where `N(d)` is the larger of
/// [`cherry_bound`] and the profile value.
pub fn n_alpha_table(profile: &RankOrderProfile, dmax: usize) -> Result<Vec<(usize, usize)>> {
    if !profile.is_complete() {
        return Err(Error::IncompleteProfile);
    }
    Ok((2..=dmax).map(|d| (d, cherry_bound(d).max(profile.max_order(d)))).collect())
}
