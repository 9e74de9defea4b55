//! Exhaustive scans over connection sets containing the identity.

use std::path::PathBuf;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use haar_core::haar::{haar_graph, Role};
use haar_core::symmetry::{haar_verdict, CayleyStatus, CayleyVerdict, Method, NonCayleyReason};
use haar_core::{ConnectionSet, Error, FiniteGroup, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cache::Cache;

/// Most connection sets a single scan may enumerate.
pub const MAX_SCAN_SETS: u64 = 1 << 24;
/// Work items handed to the pool at once.
const CHUNK: u64 = 4096;

/// Shared state for verdict computations: optional cache and counters.
pub struct Context {
    cache: Option<Cache>,
    pool: rayon::ThreadPool,
    aut_computations: AtomicU64,
    cache_hits: AtomicU64,
}

impl Context {
    pub fn new(cache: Option<Cache>, jobs: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        Context {
            cache,
            pool,
            aut_computations: AtomicU64::new(0),
            cache_hits: AtomicU64::new(0),
        }
    }

    pub fn cache(&self) -> Option<&Cache> {
        self.cache.as_ref()
    }

    /// Number of verdicts computed from scratch (each computes `Aut`).
    pub fn aut_computations(&self) -> u64 {
        self.aut_computations.load(Ordering::Relaxed)
    }

    pub fn cache_hits(&self) -> u64 {
        self.cache_hits.load(Ordering::Relaxed)
    }

    /// Verdict for `H(group, s)`, through the cache.
    pub fn verdict(&self, group: &Arc<FiniteGroup>, s: &ConnectionSet) -> Result<CayleyVerdict> {
        let names = s.names(group);
        if let Some(c) = &self.cache {
            if let Some(v) = c.get(group.name(), &names) {
                self.cache_hits.fetch_add(1, Ordering::Relaxed);
                return Ok(v);
            }
        }
        self.aut_computations.fetch_add(1, Ordering::Relaxed);
        let v = haar_verdict(group, s)?;
        if let Some(c) = &self.cache {
            c.insert(group.name(), &names, &v)
                .map_err(|e| Error::ScaleExceeded(format!("cache write failed: {e}")))?;
        }
        Ok(v)
    }

    pub fn flush(&self) {
        if let Some(c) = &self.cache {
            let _ = c.flush();
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ScanOptions {
    pub connected_only: bool,
    pub max_size: Option<usize>,
    pub find_non_cayley: bool,
    pub export_graph6: Option<PathBuf>,
}

/// One scanned connection set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub group: String,
    #[serde(rename = "S")]
    pub s: Vec<String>,
    #[serde(flatten)]
    pub verdict: CayleyVerdict,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub group: String,
    pub order: usize,
    /// Sets enumerated (containing the identity, within the size bound).
    pub total: u64,
    pub connected: u64,
    pub disconnected: u64,
    /// Sets classified; equals `connected` for connected-only scans.
    pub classified: u64,
    pub cayley: u64,
    pub not_cayley: u64,
    pub unknown: u64,
    pub not_vertex_transitive: u64,
    pub no_regular_subgroup: u64,
    pub shortcut_resolved: u64,
    pub search_resolved: u64,
    pub regular_aut_resolved: u64,
    /// Cayley verdicts lifted from one component of a disconnected graph.
    pub lifted: u64,
    /// Disconnected sets whose generated subgroup is non-abelian.
    pub disconnected_nonabelian_span: u64,
    pub witnesses: Vec<Vec<String>>,
    pub unknown_sets: Vec<Vec<String>>,
}

/// How many witnesses a summary keeps.
const KEEP_WITNESSES: usize = 10;

fn binomial(n: u64, k: u64) -> u64 {
    let mut r: u64 = 1;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// Connection sets `{1} ∪ T` for `T ⊆ H \ {1}`, by increasing bitmask.
fn set_of(mask: u64, n: usize) -> Vec<usize> {
    let mut s = vec![0];
    s.extend((1..n).filter(|&i| mask >> (i - 1) & 1 == 1));
    s
}

fn is_abelian_subset(g: &FiniteGroup, elems: &[usize]) -> bool {
    elems
        .iter()
        .all(|&x| elems.iter().all(|&y| g.mul(x, y) == g.mul(y, x)))
}

/// Scans all connection sets of `group` containing the identity.
pub fn scan(
    ctx: &Context,
    group: &Arc<FiniteGroup>,
    opts: &ScanOptions,
) -> Result<(ScanSummary, Vec<ScanRecord>)> {
    let n = group.order();
    if n > 64 {
        return Err(Error::ScaleExceeded(format!("|H| = {n} too large to scan")));
    }
    let free = (n - 1) as u64;
    let count = match opts.max_size {
        Some(k) => (0..k.min(n) as u64).map(|j| binomial(free, j)).sum(),
        None => 1u64.checked_shl(free as u32).unwrap_or(u64::MAX),
    };
    if count > MAX_SCAN_SETS {
        return Err(Error::ScaleExceeded(format!(
            "{count} connection sets exceed the scan limit {MAX_SCAN_SETS}"
        )));
    }
    let limit = 1u64 << free;
    let max_size = opts.max_size.unwrap_or(n);
    let mut summary = ScanSummary {
        group: group.name().to_string(),
        order: n,
        ..Default::default()
    };
    let mut records = Vec::new();
    let mut export: Vec<(String, String)> = Vec::new();
    let mut start = 0u64;
    'outer: while start < limit {
        let end = (start + CHUNK).min(limit);
        let chunk: Vec<Result<Option<(Vec<usize>, bool, Option<CayleyVerdict>)>>> =
            ctx.pool.install(|| {
                (start..end)
                    .into_par_iter()
                    .map(|mask| {
                        if mask.count_ones() as usize + 1 > max_size {
                            return Ok(None);
                        }
                        let s = set_of(mask, n);
                        let span = group.closure(&s);
                        let connected = span.len() == n;
                        if opts.connected_only && !connected {
                            return Ok(Some((s, connected, None)));
                        }
                        let cs = ConnectionSet::new(group, &s, Role::S)?;
                        Ok(Some((s, connected, Some(ctx.verdict(group, &cs)?))))
                    })
                    .collect()
            });
        for item in chunk {
            let Some((s, connected, verdict)) = item? else {
                continue;
            };
            summary.total += 1;
            if connected {
                summary.connected += 1;
            } else {
                summary.disconnected += 1;
                if !is_abelian_subset(group, &group.closure(&s)) {
                    summary.disconnected_nonabelian_span += 1;
                }
            }
            let Some(v) = verdict else { continue };
            let cs = ConnectionSet::new(group, &s, Role::S)?;
            let names = cs.names(group);
            summary.classified += 1;
            match v.status {
                CayleyStatus::Cayley => {
                    summary.cayley += 1;
                    match v.method {
                        Some(Method::DeltaShortcut) => summary.shortcut_resolved += 1,
                        Some(Method::Search) => summary.search_resolved += 1,
                        Some(Method::RegularAut) => summary.regular_aut_resolved += 1,
                        None => {}
                    }
                    if v.components > 1 {
                        summary.lifted += 1;
                    }
                }
                CayleyStatus::NotCayley => {
                    summary.not_cayley += 1;
                    match v.reason {
                        Some(NonCayleyReason::NotVertexTransitive) => {
                            summary.not_vertex_transitive += 1
                        }
                        Some(NonCayleyReason::NoRegularSubgroup) => {
                            summary.no_regular_subgroup += 1
                        }
                        None => {}
                    }
                    if summary.witnesses.len() < KEEP_WITNESSES {
                        summary.witnesses.push(names.clone());
                    }
                }
                CayleyStatus::UnknownBudget => {
                    summary.unknown += 1;
                    summary.unknown_sets.push(names.clone());
                }
            }
            if opts.export_graph6.is_some() {
                let g6 = haar_graph(Arc::clone(group), &cs)?.graph().to_graph6();
                let status = serde_json::to_value(v.status)
                    .ok()
                    .and_then(|x| x.as_str().map(str::to_lowercase))
                    .unwrap_or_default();
                export.push((status, g6));
            }
            let stop = opts.find_non_cayley && v.status == CayleyStatus::NotCayley;
            records.push(ScanRecord {
                group: group.name().to_string(),
                s: names,
                verdict: v,
            });
            if stop {
                break 'outer;
            }
        }
        start = end;
    }
    ctx.flush();
    if let Some(dir) = &opts.export_graph6 {
        write_graph6(dir, group.name(), &export)
            .map_err(|e| Error::ScaleExceeded(format!("graph6 export failed: {e}")))?;
    }
    Ok((summary, records))
}

/// Writes `<dir>/<group>.g6` with every graph and `<dir>/<group>_<status>.g6`
/// per verdict status.
fn write_graph6(
    dir: &std::path::Path,
    group: &str,
    graphs: &[(String, String)],
) -> std::io::Result<()> {
    use std::collections::BTreeMap;
    use std::io::Write;
    std::fs::create_dir_all(dir)?;
    let safe: String = group
        .chars()
        .map(|c| {
            if c.is_alphanumeric() || c == '_' {
                c
            } else {
                '_'
            }
        })
        .collect();
    let mut all = std::fs::File::create(dir.join(format!("{safe}.g6")))?;
    let mut by_status: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
    for (status, g6) in graphs {
        writeln!(all, "{g6}")?;
        by_status.entry(status).or_default().push(g6);
    }
    for (status, lines) in by_status {
        let mut f = std::fs::File::create(dir.join(format!("{safe}_{status}.g6")))?;
        for l in lines {
            writeln!(f, "{l}")?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use haar_core::atlas;

    #[test]
    fn counts_subsets_by_size() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(set_of(0b101, 4), vec![0, 1, 3]);
        let g = Arc::new(atlas("Z4").unwrap());
        let ctx = Context::new(None, 1);
        let opts = ScanOptions {
            max_size: Some(2),
            ..Default::default()
        };
        let (s, records) = scan(&ctx, &g, &opts).unwrap();
        assert_eq!(s.total, 4);
        assert_eq!(records.len(), 4);
        assert_eq!(s.cayley, 4);
        // {1} and {1, a^2} are disconnected
        assert_eq!(s.disconnected, 2);
    }

    #[test]
    fn connected_only_skips_disconnected_sets() {
        let g = Arc::new(atlas("Z2xZ2").unwrap());
        let ctx = Context::new(None, 2);
        let opts = ScanOptions {
            connected_only: true,
            ..Default::default()
        };
        let (s, records) = scan(&ctx, &g, &opts).unwrap();
        assert_eq!(s.total, 8);
        assert_eq!(s.classified, s.connected);
        assert_eq!(records.len() as u64, s.connected);
        assert_eq!(ctx.aut_computations(), s.connected);
    }

    #[test]
    fn rejects_oversized_scans() {
        let g = Arc::new(atlas("Z2xZ2xZ2xZ2xZ2").unwrap());
        assert!(scan(&Context::new(None, 1), &g, &ScanOptions::default()).is_err());
    }
}
