//! Catalog files: `<prefix>-<n>.txt` holds one class per line as
//! `<graph-text> rank=<r>`, in insertion order.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use eqlines_core::{Family, Graph, LevelStats, LevelStore};

use crate::error::{AppError, Result};

/// Classes read back from catalog files, by order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Catalog {
    pub family: Family,
    pub levels: BTreeMap<usize, Vec<(Graph, usize)>>,
}

impl Catalog {
    pub fn from_store(store: &LevelStore) -> Catalog {
        let levels = store
            .orders()
            .map(|n| (n, store.level(n).iter().map(|(g, d)| (*g, d.rank)).collect()))
            .collect();
        Catalog { family: store.family(), levels }
    }

    pub fn total(&self) -> usize {
        self.levels.values().map(Vec::len).sum()
    }
}

pub fn level_path(dir: &Path, family: Family, n: usize) -> PathBuf {
    dir.join(format!("{}-{n}.txt", family.file_prefix()))
}

pub fn summary_path(dir: &Path, family: Family) -> PathBuf {
    match family {
        Family::Cherry => dir.join("summary.txt"),
        Family::Edge => dir.join(format!("{}-summary.txt", family.file_prefix())),
    }
}

pub fn format_level(members: &[(Graph, usize)]) -> String {
    let mut out = String::new();
    for (g, rank) in members {
        writeln!(out, "{g} rank={rank}").expect("write to string");
    }
    out
}

fn parse_line(line: &str) -> std::result::Result<(Graph, usize), String> {
    let (text, rank) = line.split_once(' ').ok_or("expected `<graph> rank=<r>`")?;
    let rank = rank.strip_prefix("rank=").ok_or("missing `rank=`")?;
    let rank = rank.parse::<usize>().map_err(|e| format!("bad rank: {e}"))?;
    let g = text.parse::<Graph>().map_err(|e| e.to_string())?;
    Ok((g, rank))
}

pub fn read_level(path: &Path) -> Result<Vec<(Graph, usize)>> {
    let text = fs::read_to_string(path).map_err(|e| AppError::io(path, e))?;
    text.lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| {
            parse_line(line.trim()).map_err(|message| AppError::Malformed { path: path.to_path_buf(), line: i + 1, message })
        })
        .collect()
}

/// Orders `n` with a file `<prefix>-<n>.txt` in `dir`.
fn catalog_orders(dir: &Path, family: Family) -> Result<Vec<usize>> {
    let prefix = format!("{}-", family.file_prefix());
    let mut orders = Vec::new();
    for entry in fs::read_dir(dir).map_err(|e| AppError::io(dir, e))? {
        let entry = entry.map_err(|e| AppError::io(dir, e))?;
        let name = entry.file_name();
        let Some(name) = name.to_str() else { continue };
        let order = name.strip_prefix(&prefix).and_then(|r| r.strip_suffix(".txt")).and_then(|r| r.parse::<usize>().ok());
        orders.extend(order);
    }
    orders.sort_unstable();
    Ok(orders)
}

pub fn read_catalog(dir: &Path, family: Family) -> Result<Catalog> {
    let mut levels = BTreeMap::new();
    for n in catalog_orders(dir, family)? {
        let path = level_path(dir, family, n);
        let members = read_level(&path)?;
        if let Some((g, _)) = members.iter().find(|(g, _)| g.order() != n) {
            return Err(AppError::Malformed {
                path,
                line: 0,
                message: format!("graph {g} has order {} in level {n}", g.order()),
            });
        }
        levels.insert(n, members);
    }
    Ok(Catalog { family, levels })
}

/// Writes one file per nonempty order, replacing any level files of the same
/// family already in `dir`.
pub fn write_catalog(dir: &Path, catalog: &Catalog) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir).map_err(|e| AppError::io(dir, e))?;
    for n in catalog_orders(dir, catalog.family)? {
        let path = level_path(dir, catalog.family, n);
        fs::remove_file(&path).map_err(|e| AppError::io(&path, e))?;
    }
    let mut written = Vec::new();
    for (&n, members) in &catalog.levels {
        let path = level_path(dir, catalog.family, n);
        fs::write(&path, format_level(members)).map_err(|e| AppError::io(&path, e))?;
        written.push(path);
    }
    Ok(written)
}

fn yes_no(flag: Option<bool>) -> &'static str {
    match flag {
        Some(true) => "yes",
        Some(false) => "no",
        None => "-",
    }
}

pub fn format_summary(stats: &LevelStats) -> String {
    let mut out = String::new();
    let w = &mut out;
    writeln!(w, "family {}", stats.family).unwrap();
    writeln!(w, "order count min_rank achievers identified regular_switching").unwrap();
    for o in &stats.orders {
        let names: Vec<&str> = o.identified.iter().map(|g| g.name()).collect();
        let names = if names.is_empty() { "-".to_string() } else { names.join(",") };
        writeln!(w, "{} {} {} {} {} {}", o.order, o.count, o.min_rank, o.achievers.len(), names, yes_no(o.regular_switching))
            .unwrap();
    }
    writeln!(w, "total {}", stats.total).unwrap();
    match stats.terminal_order {
        Some(n) => writeln!(w, "empty_level {n}").unwrap(),
        None => writeln!(w, "empty_level -").unwrap(),
    }
    writeln!(w, "psd_tests {}", stats.tests).unwrap();
    writeln!(w, "max_magnitude {}", stats.magnitude.max).unwrap();
    out
}

pub fn write_summary(dir: &Path, stats: &LevelStats) -> Result<PathBuf> {
    let path = summary_path(dir, stats.family);
    fs::write(&path, format_summary(stats)).map_err(|e| AppError::io(&path, e))?;
    Ok(path)
}

/// The `empty_level` entry of a summary file, if the run terminated.
pub fn read_terminal_order(dir: &Path, family: Family) -> Result<Option<usize>> {
    let path = summary_path(dir, family);
    let text = fs::read_to_string(&path).map_err(|e| AppError::io(&path, e))?;
    Ok(text.lines().find_map(|line| line.strip_prefix("empty_level ")).and_then(|v| v.trim().parse().ok()))
}
