//! Optional id-to-label dictionaries for reports.
//!
//! File format: one `id label` pair per line, separated by the first run of
//! whitespace. Labels may contain spaces. Blank lines are ignored.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use crate::error::{Error, Result};
use crate::transactions::{parse_item, Item};

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ItemNames {
    labels: BTreeMap<Item, String>,
}

impl ItemNames {
    pub fn insert(&mut self, item: Item, label: impl Into<String>) {
        self.labels.insert(item, label.into());
    }

    pub fn get(&self, item: Item) -> Option<&str> {
        self.labels.get(&item).map(String::as_str)
    }

    /// The label of `item`, or its numeric id when it has none.
    pub fn display(&self, item: Item) -> String {
        self.get(item).map_or_else(|| item.to_string(), str::to_owned)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let mut names = ItemNames::default();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let line_no = idx + 1;
            let trimmed = line.trim();
            if trimmed.is_empty() {
                continue;
            }
            let (id, label) = trimmed
                .split_once(char::is_whitespace)
                .ok_or_else(|| Error::parse(line_no, "expected `id label`"))?;
            names.insert(parse_item(id, line_no)?, label.trim());
        }
        Ok(names)
    }

    pub fn write_to<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for (item, label) in &self.labels {
            writeln!(out, "{item} {label}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reads_labels_with_spaces() {
        let names = ItemNames::read("1 /index.html\n\n2 staff page\n".as_bytes()).unwrap();
        assert_eq!(names.get(Item(2)), Some("staff page"));
        assert_eq!(names.display(Item(1)), "/index.html");
        assert_eq!(names.display(Item(7)), "7");
        let mut out = Vec::new();
        names.write_to(&mut out).unwrap();
        assert_eq!(ItemNames::read(out.as_slice()).unwrap(), names);
    }

    #[test]
    fn missing_label_is_an_error() {
        assert!(matches!(ItemNames::read("1\n".as_bytes()), Err(Error::Parse { line: 1, .. })));
    }
}
