//! Fixed labeled representatives of the reference graphs used for
//! identification of minimum-rank classes.

use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NamedGraph {
    Cherry,
    Edge,
    C5,
    C8,
    Heawood,
    Petersen,
    LineK33,
    LineK6,
    ComplementLineK6,
    Clebsch,
    ComplementSchlafli,
    ComplementLineK8,
    /// Heawood graph with four hubs on one side of the bipartition and six
    /// vertices attached to the pairs of hubs (24 vertices).
    HeawoodHubs24,
}

impl NamedGraph {
    pub const ALL: [NamedGraph; 13] = [
        NamedGraph::Cherry,
        NamedGraph::Edge,
        NamedGraph::C5,
        NamedGraph::C8,
        NamedGraph::Heawood,
        NamedGraph::Petersen,
        NamedGraph::LineK33,
        NamedGraph::LineK6,
        NamedGraph::ComplementLineK6,
        NamedGraph::Clebsch,
        NamedGraph::ComplementSchlafli,
        NamedGraph::ComplementLineK8,
        NamedGraph::HeawoodHubs24,
    ];

    pub fn name(self) -> &'static str {
        match self {
            NamedGraph::Cherry => "cherry",
            NamedGraph::Edge => "edge",
            NamedGraph::C5 => "C5",
            NamedGraph::C8 => "C8",
            NamedGraph::Heawood => "heawood",
            NamedGraph::Petersen => "petersen",
            NamedGraph::LineK33 => "L_K33",
            NamedGraph::LineK6 => "L_K6",
            NamedGraph::ComplementLineK6 => "compl_L_K6",
            NamedGraph::Clebsch => "clebsch",
            NamedGraph::ComplementSchlafli => "compl_schlafli",
            NamedGraph::ComplementLineK8 => "compl_L_K8",
            NamedGraph::HeawoodHubs24 => "paper_n24",
        }
    }

    pub fn graph(self) -> Graph {
        let built = match self {
            NamedGraph::Cherry => Graph::from_edges(3, &[(0, 1), (1, 2)]),
            NamedGraph::Edge => Graph::from_edges(2, &[(0, 1)]),
            NamedGraph::C5 => cycle(5),
            NamedGraph::C8 => cycle(8),
            NamedGraph::Heawood => Graph::from_edges(14, &heawood_edges()),
            NamedGraph::Petersen => {
                let mut edges = Vec::new();
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                Graph::from_edges(10, &edges)
            }
            // Rook's graph on a 3×3 board.
            NamedGraph::LineK33 => adjacency_by(9, |x, y| x / 3 == y / 3 || x % 3 == y % 3),
            NamedGraph::LineK6 => {
                let pairs = pairs(6);
                adjacency_by(pairs.len(), |x, y| shares(pairs[x], pairs[y]))
            }
            NamedGraph::ComplementLineK6 => {
                let pairs = pairs(6);
                adjacency_by(pairs.len(), |x, y| !shares(pairs[x], pairs[y]))
            }
            // Folded 5-cube: 4-bit words at Hamming distance 1 or 4.
            NamedGraph::Clebsch => adjacency_by(16, |x, y| matches!((x ^ y).count_ones(), 1 | 4)),
            NamedGraph::ComplementSchlafli => complement_schlafli(),
            NamedGraph::ComplementLineK8 => {
                let pairs = pairs(8);
                adjacency_by(pairs.len(), |x, y| !shares(pairs[x], pairs[y]))
            }
            NamedGraph::HeawoodHubs24 => {
                let mut edges = heawood_edges();
                // Hubs 14..18 see every odd Heawood vertex.
                for hub in 14..18 {
                    for b in (1..14).step_by(2) {
                        edges.push((hub, b));
                    }
                }
                for (k, (x, y)) in pairs(4).into_iter().enumerate() {
                    edges.push((18 + k, 14 + x));
                    edges.push((18 + k, 14 + y));
                }
                Graph::from_edges(24, &edges)
            }
        };
        built.expect("named graph constructions are within bounds")
    }
}

fn cycle(n: usize) -> Result<Graph> {
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Rim `i ∼ i+1` plus chords `i ∼ i+5` from every even `i`, all mod 14.
fn heawood_edges() -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for i in 0..14 {
        edges.push((i, (i + 1) % 14));
        if i % 2 == 0 {
            edges.push((i, (i + 5) % 14));
        }
    }
    edges
}

fn pairs(m: usize) -> Vec<(usize, usize)> {
    (0..m).flat_map(|x| (x + 1..m).map(move |y| (x, y))).collect()
}

fn shares(p: (usize, usize), q: (usize, usize)) -> bool {
    p.0 == q.0 || p.0 == q.1 || p.1 == q.0 || p.1 == q.1
}

fn adjacency_by(n: usize, adjacent: impl Fn(usize, usize) -> bool) -> Result<Graph> {
    let mut edges = Vec::new();
    for x in 0..n {
        for y in x + 1..n {
            if adjacent(x, y) {
                edges.push((x, y));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Intersection graph of the 27 lines on a smooth cubic surface:
/// `a_i` (0..6), `b_j` (6..12), `c_ij` (12..27).
fn complement_schlafli() -> Result<Graph> {
    #[derive(Clone, Copy)]
    enum Line {
        A(usize),
        B(usize),
        C((usize, usize)),
    }
    let mut lines = Vec::with_capacity(27);
    lines.extend((0..6).map(Line::A));
    lines.extend((0..6).map(Line::B));
    lines.extend(pairs(6).into_iter().map(Line::C));
    let meets = |x: usize, y: usize| match (lines[x], lines[y]) {
        (Line::A(i), Line::B(j)) | (Line::B(j), Line::A(i)) => i != j,
        (Line::A(i), Line::C(p)) | (Line::C(p), Line::A(i)) => p.0 == i || p.1 == i,
        (Line::B(i), Line::C(p)) | (Line::C(p), Line::B(i)) => p.0 == i || p.1 == i,
        (Line::C(p), Line::C(q)) => !shares(p, q),
        _ => false,
    };
    adjacency_by(27, meets)
}

impl fmt::Display for NamedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for NamedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<NamedGraph> {
        NamedGraph::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Graph for a catalog name such as `heawood` or `compl_L_K8`.
pub fn named_graph(name: &str) -> Result<Graph> {
    name.parse::<NamedGraph>().map(NamedGraph::graph)
}
