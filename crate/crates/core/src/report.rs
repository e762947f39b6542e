//! Human-readable and CSV reports of mining runs.

use std::io::Write;

use crate::error::Result;
use crate::miner::{BalancedPatternResult, MiningParams};
use crate::names::ItemNames;
use crate::stability::{StabilityParams, StablePatternResult};
use crate::transactions::Item;

/// One mining run: echoed parameters, one row per pattern in mining order,
/// and the wall-clock time of the mining call.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: &'static str,
    pub params: Vec<(&'static str, String)>,
    pub n_transactions: usize,
    /// Column names after the leading `items` column.
    pub columns: Vec<&'static str>,
    pub rows: Vec<ReportRow>,
    pub wall_ms: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportRow {
    pub items: Vec<String>,
    pub cells: Vec<String>,
}

fn labels(items: &[Item], names: Option<&ItemNames>) -> Vec<String> {
    items
        .iter()
        .map(|&i| names.map_or_else(|| i.to_string(), |n| n.display(i)))
        .collect()
}

impl RunReport {
    /// Successive-distance bins with fewer than `report_min_count` entries are
    /// left out of the `succdists` column. Mining results are unaffected.
    pub fn balanced(
        params: &MiningParams,
        n_transactions: usize,
        results: &[BalancedPatternResult],
        report_min_count: usize,
        names: Option<&ItemNames>,
        wall_ms: f64,
    ) -> Self {
        let rows = results
            .iter()
            .map(|r| {
                let bins: Vec<String> = r
                    .succ_histogram
                    .iter()
                    .filter(|&(_, c)| c >= report_min_count)
                    .map(|(d, c)| format!("{d}:{c}"))
                    .collect();
                ReportRow {
                    items: labels(&r.items, names),
                    cells: vec![
                        r.stats.support.to_string(),
                        r.stats.balance_value.to_string(),
                        format!("{:.4}", r.stats.avgdist),
                        format!("{:.4}", r.stats.stdev),
                        bins.join(", "),
                    ],
                }
            })
            .collect();
        RunReport {
            command: "mine",
            params: vec![
                ("minnumber", params.minnumber.to_string()),
                ("maxstdev", params.maxstdev.to_string()),
                ("minavg", params.minavg.to_string()),
                ("max_distance", params.ell.to_string()),
                ("mindistfreq", params.mindistfreq.to_string()),
                ("report_min_count", report_min_count.to_string()),
            ],
            n_transactions,
            columns: vec!["support", "t", "avgdist", "stdev", "succdists"],
            rows,
            wall_ms,
        }
    }

    pub fn stable(
        params: &StabilityParams,
        n_transactions: usize,
        results: &[StablePatternResult],
        names: Option<&ItemNames>,
        wall_ms: f64,
    ) -> Self {
        let rows = results
            .iter()
            .map(|r| ReportRow {
                items: labels(&r.items, names),
                cells: vec![
                    r.support.to_string(),
                    r.score.value.to_string(),
                    r.score.triples.to_string(),
                    r.score.left_endpoints.to_string(),
                    r.score.right_endpoints.to_string(),
                ],
            })
            .collect();
        RunReport {
            command: "stable",
            params: vec![
                ("w", params.w.to_string()),
                ("minstable", params.minstable.to_string()),
                ("minsup", params.minsup.to_string()),
            ],
            n_transactions,
            columns: vec!["support", "value", "triples", "left", "right"],
            rows,
            wall_ms,
        }
    }

    pub fn write_text<W: Write>(&self, mut out: W) -> Result<()> {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        writeln!(out, "# {} {}", self.command, params.join(" "))?;
        writeln!(
            out,
            "# transactions={} patterns={} wall_ms={:.3}",
            self.n_transactions,
            self.rows.len(),
            self.wall_ms
        )?;
        for row in &self.rows {
            write!(out, "{{{}}}", row.items.join(" "))?;
            for (col, cell) in self.columns.iter().zip(&row.cells) {
                write!(out, "  {col}={cell}")?;
            }
            writeln!(out)?;
        }
        Ok(())
    }

    /// One header row, then one row per pattern. Items are space separated.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut writer = csv::Writer::from_writer(out);
        let mut header = vec!["items"];
        header.extend(&self.columns);
        writer.write_record(&header)?;
        for row in &self.rows {
            let mut record = vec![row.items.join(" ")];
            record.extend(row.cells.iter().cloned());
            writer.write_record(&record)?;
        }
        writer.flush()?;
        Ok(())
    }
}
