//! Recomputes everything checkable from catalog files and compares it with
//! the reference tables.

use std::collections::BTreeSet;
use std::fmt;

use eqlines_core::tables::ExpectedTables;
use eqlines_core::{
    closure_base, expected_n_alpha, n_alpha_table, order_stats, psd_rank, ClassSet, Family, Insertion, Graph, RankOrderProfile,
    MAX_VERTICES,
};

use crate::catalog::Catalog;
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub ok: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub family: Family,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| !c.ok)
    }

    fn push(&mut self, name: impl Into<String>, ok: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), ok, detail: detail.into() });
    }

    fn expect_eq<T: PartialEq + fmt::Debug>(&mut self, name: impl Into<String>, expected: T, found: T) {
        let ok = expected == found;
        let detail = if ok { format!("{found:?}") } else { format!("expected {expected:?}, found {found:?}") };
        self.push(name, ok, detail);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}: {}", if c.ok { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        let failed = self.failures().count();
        if failed == 0 {
            writeln!(f, "verify {}: PASS ({} checks)", self.family, self.checks.len())
        } else {
            writeln!(f, "verify {}: FAIL ({failed} of {} checks)", self.family, self.checks.len())
        }
    }
}

/// Ranks and PSD flags recomputed for every line; first offending line, if any.
fn recheck_ranks(family: Family, members: &[(Graph, usize)]) -> Result<Option<String>> {
    for (i, (g, rank)) in members.iter().enumerate() {
        let v = psd_rank(g, family)?;
        if !v.psd {
            return Ok(Some(format!("line {}: {g} fails the spectral condition", i + 1)));
        }
        if v.rank != *rank {
            return Ok(Some(format!("line {}: {g} stored rank {rank}, computed {}", i + 1, v.rank)));
        }
    }
    Ok(None)
}

pub fn verify_catalog(catalog: &Catalog) -> Result<Report> {
    let family = catalog.family;
    let expected = ExpectedTables::for_family(family);
    let mut report = Report { family, checks: Vec::new() };
    let base = closure_base(family, MAX_VERTICES);

    let mut unique = Vec::new();
    let mut stats = Vec::new();
    for (&n, members) in &catalog.levels {
        let bad = recheck_ranks(family, members)?;
        report.push(format!("ranks n={n}"), bad.is_none(), bad.unwrap_or_else(|| format!("{} classes", members.len())));

        let mut seen: ClassSet<usize> = ClassSet::new();
        let mut duplicate = None;
        for (i, (g, _)) in members.iter().enumerate() {
            if let Insertion::DuplicateOf(j) = seen.insert(*g, i + 1) {
                duplicate.get_or_insert(format!("lines {} and {} are switching equivalent", seen.payload(j), i + 1));
            }
        }
        report.push(format!("distinct n={n}"), duplicate.is_none(), duplicate.unwrap_or_else(|| "no duplicates".into()));

        let closure: ClassSet<()> = base.at(n).iter().map(|g| (*g, ())).collect();
        let inside = members.iter().position(|(g, _)| closure.contains(g));
        report.push(
            format!("outside closure n={n}"),
            inside.is_none(),
            inside.map_or_else(|| "ok".into(), |i| format!("line {} lies in the switching closure", i + 1)),
        );

        let s = order_stats(n, members);
        if s.achievers.len() == 1 {
            unique.push(n);
        }
        stats.push(s);
    }

    let orders: BTreeSet<usize> = expected.orders().chain(catalog.levels.keys().copied()).collect();
    for &n in &orders {
        let found = stats.iter().find(|s| s.order == n);
        report.expect_eq(format!("count n={n}"), expected.count(n), found.map(|s| s.count));
        report.expect_eq(format!("min_rank n={n}"), expected.min_rank(n), found.map(|s| s.min_rank));
    }
    report.expect_eq("total", expected.total, catalog.total());
    report.expect_eq("unique minimum-rank orders", expected.unique_orders.to_vec(), unique);

    for &(n, named) in expected.identified {
        let s = stats.iter().find(|s| s.order == n);
        let ok = s.is_some_and(|s| s.identified.contains(&named));
        let detail = match s {
            Some(s) if s.achievers.len() == 1 => format!("identified {:?}", s.identified.iter().map(|g| g.name()).collect::<Vec<_>>()),
            Some(s) => format!("{} minimum-rank classes", s.achievers.len()),
            None => "order missing".into(),
        };
        report.push(format!("identify n={n} {named}"), ok, detail);
    }
    for &n in expected.non_regular {
        let flag = stats.iter().find(|s| s.order == n).and_then(|s| s.regular_switching);
        report.push(
            format!("no regular switching n={n}"),
            flag == Some(false),
            match flag {
                Some(false) => "none of the switchings is regular".to_string(),
                Some(true) => "a regular switching exists".to_string(),
                None => "no unique minimum-rank class".to_string(),
            },
        );
    }
    let beyond: Vec<usize> = catalog.levels.keys().copied().filter(|&n| n >= expected.terminal_order).collect();
    report.push(
        format!("empty level {}", expected.terminal_order),
        beyond.is_empty(),
        if beyond.is_empty() { "absent".to_string() } else { format!("levels present: {beyond:?}") },
    );

    if family == Family::Cherry {
        let profile = RankOrderProfile::new(stats.iter().map(|s| (s.order, s.min_rank)), beyond.is_empty());
        match n_alpha_table(&profile, 100) {
            Ok(table) => {
                for (d, n) in table {
                    report.expect_eq(format!("N(d) d={d}"), expected_n_alpha(d), n);
                }
            }
            Err(e) => report.push("N(d)", false, e.to_string()),
        }
    }
    Ok(report)
}
