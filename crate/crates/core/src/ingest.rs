//! Turning timestamped events into an ordered transaction database.
//!
//! Window `k` covers `[start + k * w, start + (k + 1) * w)` and becomes
//! transaction `k`. Windows without events between the first and the last
//! event are kept as empty transactions, since distances are counted in
//! windows.

use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;

use crate::error::{Error, Result};
use crate::names::ItemNames;
use crate::transactions::{parse_item, Item, Transaction, TransactionDatabase};

pub const HALF_HOUR: u64 = 1800;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Event {
    pub timestamp: u64,
    pub item: Item,
}

impl Event {
    pub fn new(timestamp: u64, item: impl Into<Item>) -> Self {
        Event {
            timestamp,
            item: item.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BucketConfig {
    pub window_seconds: u64,
    /// First window boundary. Defaults to the earliest event rounded down to
    /// a multiple of `window_seconds`.
    pub start: Option<u64>,
}

impl Default for BucketConfig {
    fn default() -> Self {
        BucketConfig {
            window_seconds: HALF_HOUR,
            start: None,
        }
    }
}

impl BucketConfig {
    pub fn with_window(window_seconds: u64) -> Self {
        BucketConfig {
            window_seconds,
            start: None,
        }
    }
}

pub fn bucket(events: &[Event], config: &BucketConfig) -> Result<TransactionDatabase> {
    let w = config.window_seconds;
    if w == 0 {
        return Err(Error::param("window_seconds must be at least 1"));
    }
    let Some(earliest) = events.iter().map(|e| e.timestamp).min() else {
        return Ok(TransactionDatabase::default());
    };
    let start = config.start.unwrap_or(earliest / w * w);
    if let Some((index, e)) = events.iter().enumerate().find(|(_, e)| e.timestamp < start) {
        return Err(Error::EventBeforeStart {
            index,
            timestamp: e.timestamp,
            item: e.item.0,
            start,
        });
    }
    let latest = events.iter().map(|e| e.timestamp).max().unwrap_or(start);
    let n_windows = ((latest - start) / w + 1) as usize;

    let mut windows: Vec<BTreeSet<Item>> = vec![BTreeSet::new(); n_windows];
    for e in events {
        windows[((e.timestamp - start) / w) as usize].insert(e.item);
    }
    Ok(TransactionDatabase::new(
        windows.into_iter().map(Transaction::new).collect(),
    ))
}

/// Reads `timestamp item_id` lines. Blank lines are skipped.
pub fn parse_events<R: BufRead>(reader: R) -> Result<Vec<Event>> {
    let mut events = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let Some((ts, rest)) = split_event_line(&line, line_no)? else {
            continue;
        };
        let mut tokens = rest.split_whitespace();
        let item = match (tokens.next(), tokens.next()) {
            (Some(token), None) => parse_item(token, line_no)?,
            _ => return Err(Error::parse(line_no, "expected `timestamp item_id`")),
        };
        events.push(Event::new(ts, item));
    }
    Ok(events)
}

/// Reads `timestamp key` lines where the key is any string without line
/// breaks (a URL, say). Keys are numbered from 1 in sorted order, so the
/// numbering does not depend on the order of the lines.
pub fn parse_keyed_events<R: BufRead>(reader: R) -> Result<(Vec<Event>, ItemNames)> {
    let mut raw: Vec<(u64, String)> = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let line_no = idx + 1;
        let Some((ts, rest)) = split_event_line(&line, line_no)? else {
            continue;
        };
        let key = rest.trim();
        if key.is_empty() {
            return Err(Error::parse(line_no, "missing key after timestamp"));
        }
        raw.push((ts, key.to_owned()));
    }

    let keys: BTreeSet<&str> = raw.iter().map(|(_, k)| k.as_str()).collect();
    if keys.len() > u32::MAX as usize {
        return Err(Error::param("too many distinct keys"));
    }
    let ids: BTreeMap<&str, Item> = keys
        .into_iter()
        .enumerate()
        .map(|(i, k)| (k, Item(i as u32 + 1)))
        .collect();
    let mut names = ItemNames::default();
    for (&k, &id) in &ids {
        names.insert(id, k);
    }
    let events = raw.iter().map(|(ts, k)| Event::new(*ts, ids[k.as_str()])).collect();
    Ok((events, names))
}

fn split_event_line(line: &str, line_no: usize) -> Result<Option<(u64, &str)>> {
    let trimmed = line.trim();
    if trimmed.is_empty() {
        return Ok(None);
    }
    let (ts, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
    let ts = ts
        .parse::<u64>()
        .map_err(|_| Error::parse(line_no, format!("`{ts}` is not a non-negative integer timestamp")))?;
    Ok(Some((ts, rest)))
}
