//! Depth-first tidset search shared by the balanced and stable miners.
//!
//! Patterns grow in ascending item order. Each equivalence class holds the
//! extensions of one prefix together with their tidsets; children of a node
//! are formed by intersecting its tidset with those of its right siblings.
//! A measure decides per candidate whether the branch survives, so it must
//! be anti-monotone for the search to be complete.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::transactions::{Item, Tidset, TransactionDatabase};

pub(crate) trait Measure: Sync {
    /// Data computed by the prune test and reused when reporting.
    type Node: Send + Sync;
    type Output: Send;

    /// `None` prunes the candidate and its whole subtree.
    fn evaluate(&self, tids: &Tidset) -> Option<Self::Node>;

    /// Output for a surviving pattern, or `None` if it is not reported.
    fn report(&self, items: &[Item], tids: &Tidset, node: &Self::Node) -> Option<Self::Output>;
}

/// Counters collected while searching.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchStats {
    /// Candidates whose measure was computed.
    pub evaluated: usize,
    /// Candidates cut by the prune test.
    pub pruned: usize,
}

impl SearchStats {
    fn merge(mut self, other: SearchStats) -> SearchStats {
        self.evaluated += other.evaluated;
        self.pruned += other.pruned;
        self
    }
}

struct Candidate<N> {
    item: Item,
    tids: Tidset,
    node: N,
}

pub(crate) struct SearchOptions {
    pub max_pattern_size: Option<usize>,
    /// 1 runs on the calling thread, 0 uses every available core.
    pub threads: usize,
}

pub(crate) fn run<M: Measure>(
    db: &TransactionDatabase,
    measure: &M,
    options: &SearchOptions,
) -> Result<(Vec<M::Output>, SearchStats)> {
    if options.max_pattern_size == Some(0) {
        return Ok((Vec::new(), SearchStats::default()));
    }
    let mut stats = SearchStats::default();
    let roots: Vec<Candidate<M::Node>> = db
        .vertical()
        .into_iter()
        .filter_map(|(item, tids)| candidate(measure, item, tids, &mut stats))
        .collect();

    let branch = |i: usize| {
        let mut out = Vec::new();
        let mut branch_stats = SearchStats::default();
        let mut prefix = Vec::new();
        visit(measure, &roots, i, &mut prefix, options, &mut out, &mut branch_stats);
        (out, branch_stats)
    };

    let parts: Vec<(Vec<M::Output>, SearchStats)> = if options.threads == 1 {
        (0..roots.len()).map(branch).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(options.threads)
            .build()
            .map_err(|e| Error::param(format!("cannot start worker pool: {e}")))?;
        pool.install(|| (0..roots.len()).into_par_iter().map(branch).collect())
    };

    let mut results = Vec::new();
    for (out, s) in parts {
        results.extend(out);
        stats = stats.merge(s);
    }
    Ok((results, stats))
}

fn candidate<M: Measure>(
    measure: &M,
    item: Item,
    tids: Tidset,
    stats: &mut SearchStats,
) -> Option<Candidate<M::Node>> {
    stats.evaluated += 1;
    match measure.evaluate(&tids) {
        Some(node) => Some(Candidate { item, tids, node }),
        None => {
            stats.pruned += 1;
            None
        }
    }
}

fn visit<M: Measure>(
    measure: &M,
    class: &[Candidate<M::Node>],
    index: usize,
    prefix: &mut Vec<Item>,
    options: &SearchOptions,
    out: &mut Vec<M::Output>,
    stats: &mut SearchStats,
) {
    let current = &class[index];
    prefix.push(current.item);

    if let Some(result) = measure.report(prefix, &current.tids, &current.node) {
        out.push(result);
    }

    let may_grow = options.max_pattern_size.is_none_or(|max| prefix.len() < max);
    if may_grow {
        let children: Vec<Candidate<M::Node>> = class[index + 1..]
            .iter()
            .filter_map(|sibling| {
                let tids = current.tids.intersect(&sibling.tids);
                candidate(measure, sibling.item, tids, stats)
            })
            .collect();
        for i in 0..children.len() {
            visit(measure, &children, i, prefix, options, out, stats);
        }
    }

    prefix.pop();
}
