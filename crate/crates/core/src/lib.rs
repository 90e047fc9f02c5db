//! Exact enumeration of graphs whose Seidel matrix satisfies `S + sI ⪰ 0`
//! for `s = 1 + 2√2` (the cherry family) or `s = 3` (the single-edge
//! family), up to switching equivalence.
//!
//! Everything here is pure computation over `core` + `alloc`: arithmetic in
//! ℤ[√2], bit-packed graphs on at most 32 vertices, Faddeev–LeVerrier
//! characteristic polynomials, switching-class deduplication and the
//! level-by-level generator. File formats and the command-line front end
//! live in the `eqlines` crate.
#![cfg_attr(not(test), no_std)]
#![deny(rust_2018_idioms, unused_must_use)]

extern crate alloc;

pub mod enumeration;
pub mod error;
pub mod forbidden;
pub mod graph;
pub mod jacobi;
pub mod named;
pub mod ring;
pub mod spectra;
pub mod switching;
pub mod tables;

pub use enumeration::{
    enumerate_levels, extend_node, order_stats, regular_switching, seed_nodes, summarize, EnumNode, Extension,
    LevelStats, LevelStore, NodeData, OrderStats,
};
pub use error::{Error, Result};
pub use forbidden::{closure_base, in_closure, minimal_forbidden, BaseFamily};
pub use graph::{Graph, VertexSet, MAX_VERTICES};
pub use named::{named_graph, NamedGraph};
pub use ring::QuadInt;
pub use spectra::{
    charpoly_fl, psd_rank, psd_rank_tracked, seidel_matrix, taylor_shift, third_seidel_degrees,
    IntPolynomial, Magnitude, QuadPolynomial, SeidelMatrix, SpectralVerdict,
};
pub use switching::{switching_equivalent, ClassSet, Insertion, SwitchKey};
pub use tables::{
    cherry_bound, expected_minimal_forbidden, expected_n_alpha, n_alpha_table, ExpectedTables,
    RankOrderProfile,
};

/// The seed graph whose switching closure is excluded from the enumeration.
///
/// Each family fixes the spectral threshold: `S + sI ⪰ 0` with
/// `s = 1 + 2√2` for [`Family::Cherry`] and `s = 3` for [`Family::Edge`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// The path on three vertices.
    Cherry,
    /// A single edge.
    Edge,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::Cherry, Family::Edge];

    /// The shift `s` such that the spectral condition is `S + sI ⪰ 0`.
    pub fn shift(self) -> QuadInt {
        match self {
            Family::Cherry => QuadInt::new(1, 2),
            Family::Edge => QuadInt::new(3, 0),
        }
    }

    /// Catalog file prefix (`cherry-<n>.txt`, `single-edge-<n>.txt`).
    pub fn file_prefix(self) -> &'static str {
        match self {
            Family::Cherry => "cherry",
            Family::Edge => "single-edge",
        }
    }

    /// Order bound used when searching for minimal forbidden subgraphs.
    pub fn forbidden_order_bound(self) -> usize {
        8
    }
}

impl core::fmt::Display for Family {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Family::Cherry => "cherry",
            Family::Edge => "single-edge",
        })
    }
}
