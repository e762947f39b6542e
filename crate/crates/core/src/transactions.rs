//! Ordered transaction databases.
//!
//! A database is a sequence of itemsets whose index is its time position.
//! All distances in this crate are counted in positions of the *original*
//! database: the distance between positions `a < b` is the number of
//! transactions strictly in between, `b - a - 1`.
//!
//! The text format is one transaction per line, items as whitespace
//! separated non-negative integers. A blank line is an empty transaction.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};

/// An item identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Item(pub u32);

impl Item {
    pub fn id(self) -> u32 {
        self.0
    }
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl From<u32> for Item {
    fn from(id: u32) -> Self {
        Item(id)
    }
}

/// A deduplicated itemset, iterated in ascending id order. May be empty.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Transaction {
    items: Vec<Item>,
}

impl Transaction {
    pub fn new<I: IntoIterator<Item = Item>>(items: I) -> Self {
        let mut items: Vec<Item> = items.into_iter().collect();
        items.sort_unstable();
        items.dedup();
        Transaction { items }
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        Self::new(ids.into_iter().map(Item))
    }

    pub fn items(&self) -> &[Item] {
        &self.items
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn contains(&self, item: Item) -> bool {
        self.items.binary_search(&item).is_ok()
    }

    /// True when every item of `pattern` is present. `pattern` need not be sorted.
    pub fn contains_all(&self, pattern: &[Item]) -> bool {
        pattern.iter().all(|&item| self.contains(item))
    }
}

impl FromIterator<Item> for Transaction {
    fn from_iter<T: IntoIterator<Item = Item>>(iter: T) -> Self {
        Transaction::new(iter)
    }
}

/// Transactions in temporal order. Immutable once built.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransactionDatabase {
    transactions: Vec<Transaction>,
}

impl TransactionDatabase {
    pub fn new(transactions: Vec<Transaction>) -> Self {
        TransactionDatabase { transactions }
    }

    /// Convenience constructor from raw id lists, mostly for tests and examples.
    pub fn from_id_lists<T, I>(lists: T) -> Self
    where
        T: IntoIterator<Item = I>,
        I: IntoIterator<Item = u32>,
    {
        Self::new(lists.into_iter().map(Transaction::from_ids).collect())
    }

    pub fn len(&self) -> usize {
        self.transactions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transactions.is_empty()
    }

    pub fn transactions(&self) -> &[Transaction] {
        &self.transactions
    }

    pub fn get(&self, position: usize) -> Option<&Transaction> {
        self.transactions.get(position)
    }

    /// The same transactions in reverse temporal order.
    pub fn reversed(&self) -> Self {
        Self::new(self.transactions.iter().rev().cloned().collect())
    }

    /// Distinct items that occur somewhere, ascending.
    pub fn item_universe(&self) -> Vec<Item> {
        let mut items: Vec<Item> = self
            .transactions
            .iter()
            .flat_map(|t| t.items().iter().copied())
            .collect();
        items.sort_unstable();
        items.dedup();
        items
    }

    /// Vertical layout: every occurring item with its tidset, ascending by item.
    pub fn vertical(&self) -> Vec<(Item, Tidset)> {
        let mut index: BTreeMap<Item, Vec<usize>> = BTreeMap::new();
        for (pos, t) in self.transactions.iter().enumerate() {
            for &item in t.items() {
                index.entry(item).or_default().push(pos);
            }
        }
        index
            .into_iter()
            .map(|(item, positions)| (item, Tidset::from_sorted_unchecked(positions)))
            .collect()
    }

    /// Writes ascending ids separated by single spaces, one transaction per line.
    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for t in &self.transactions {
            let mut first = true;
            for item in t.items() {
                if !first {
                    out.write_all(b" ")?;
                }
                write!(out, "{}", item.0)?;
                first = false;
            }
            out.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn to_text(&self) -> String {
        let mut buf = Vec::new();
        self.write_to(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("serialized database is ASCII")
    }
}

/// Reads a database in the line-per-transaction text format.
pub fn parse_database<R: BufRead>(reader: R) -> Result<TransactionDatabase> {
    let mut transactions = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        transactions.push(parse_transaction_line(&line, idx + 1)?);
    }
    Ok(TransactionDatabase::new(transactions))
}

pub fn parse_database_str(text: &str) -> Result<TransactionDatabase> {
    parse_database(text.as_bytes())
}

fn parse_transaction_line(line: &str, line_no: usize) -> Result<Transaction> {
    let mut items = Vec::new();
    for token in line.split_whitespace() {
        items.push(parse_item(token, line_no)?);
    }
    Ok(Transaction::new(items))
}

pub(crate) fn parse_item(token: &str, line_no: usize) -> Result<Item> {
    if token.starts_with('-') && token[1..].parse::<u64>().is_ok() {
        return Err(Error::parse(line_no, format!("negative item id `{token}`")));
    }
    token
        .parse::<u32>()
        .map(Item)
        .map_err(|_| Error::parse(line_no, format!("`{token}` is not a valid item id")))
}

/// Number of transactions strictly between positions `a` and `b`.
pub fn distance(a: usize, b: usize) -> Result<usize> {
    if a >= b {
        return Err(Error::DistanceOrder { a, b });
    }
    Ok(b - a - 1)
}

/// Positions (0-based, in the original database) of a pattern's occurrences.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Tidset {
    positions: Vec<usize>,
}

impl Tidset {
    /// Builds a tidset from arbitrary positions, sorting and deduplicating them.
    pub fn new(mut positions: Vec<usize>) -> Self {
        positions.sort_unstable();
        positions.dedup();
        Tidset { positions }
    }

    pub(crate) fn from_sorted_unchecked(positions: Vec<usize>) -> Self {
        debug_assert!(positions.windows(2).all(|w| w[0] < w[1]));
        Tidset { positions }
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn support(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, position: usize) -> bool {
        self.positions.binary_search(&position).is_ok()
    }

    /// Merge-style intersection. Positions stay in original-database coordinates.
    pub fn intersect(&self, other: &Tidset) -> Tidset {
        let (a, b) = (&self.positions, &other.positions);
        let mut out = Vec::with_capacity(a.len().min(b.len()));
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(a[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Tidset { positions: out }
    }
}

/// Positions of the transactions containing every item of `pattern`.
/// The empty pattern occurs everywhere.
pub fn tidset_of(db: &TransactionDatabase, pattern: &[Item]) -> Tidset {
    let positions = db
        .transactions()
        .iter()
        .enumerate()
        .filter(|(_, t)| t.contains_all(pattern))
        .map(|(pos, _)| pos)
        .collect();
    Tidset::from_sorted_unchecked(positions)
}
