use eqlines_core::{extend_node, seed_nodes, EnumNode, Extension, Family, LevelStore, QuadInt};
use rayon::prelude::*;

use crate::error::Result;

const BATCH: usize = 4096;

/// Runs the enumeration for `family`. With `threads > 1` each batch of nodes
/// is extended on a rayon pool; results are merged in node order, so the
/// store is identical to the single-threaded one.
pub fn enumerate(family: Family, threads: usize) -> Result<LevelStore> {
    let store = seed_nodes(family)?;
    if threads <= 1 {
        return Ok(store.run_with(BATCH, sequential)?);
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    Ok(pool.install(|| store.run_with(BATCH, parallel))?)
}

fn sequential(batch: &[EnumNode], shift: QuadInt) -> eqlines_core::Result<Vec<Extension>> {
    batch.iter().map(|node| extend_node(node, shift)).collect()
}

fn parallel(batch: &[EnumNode], shift: QuadInt) -> eqlines_core::Result<Vec<Extension>> {
    batch.par_iter().map(|node| extend_node(node, shift)).collect()
}
