//! Text multiplication-table format.
//!
//! Line 1: the order n. Optional line 2: n element names. Then n lines of
//! n indices each, row i column j holding the index of i*j. Index 0 must
//! be the identity.

use super::FiniteGroup;
use crate::error::NcError;
use std::path::Path;

pub fn parse_table(text: &str) -> Result<FiniteGroup, NcError> {
    let lines: Vec<&str> = text
        .lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .collect();
    if lines.is_empty() {
        return Err(NcError::Malformed("empty table file".into()));
    }
    let n: usize = lines[0]
        .parse()
        .map_err(|_| NcError::Malformed(format!("line 1 is not an integer: {:?}", lines[0])))?;
    if n == 0 {
        return Err(NcError::Malformed("group order must be positive".into()));
    }
    let body = &lines[1..];
    let (names, rows): (Option<Vec<String>>, &[&str]) = match body.len() {
        len if len == n => (None, body),
        len if len == n + 1 => {
            let names: Vec<String> = body[0].split_whitespace().map(String::from).collect();
            if names.len() != n {
                return Err(NcError::Malformed(format!(
                    "names line has {} entries, expected {n}",
                    names.len()
                )));
            }
            (Some(names), &body[1..])
        }
        len => {
            return Err(NcError::Malformed(format!(
                "expected {n} table rows (plus optional names line), found {len} lines"
            )))
        }
    };
    let mut table = Vec::with_capacity(n);
    for (i, line) in rows.iter().enumerate() {
        let row: Result<Vec<usize>, _> = line
            .split_whitespace()
            .map(|tok| tok.parse::<usize>())
            .collect();
        let row = row.map_err(|_| {
            NcError::Malformed(format!("table row {i} contains a non-integer token"))
        })?;
        if row.len() != n {
            return Err(NcError::Malformed(format!(
                "table row {i} has {} entries, expected {n}",
                row.len()
            )));
        }
        table.push(row);
    }
    let name = match &names {
        Some(ns) => format!("table[{}]", ns.join(",")),
        None => format!("table(order {n})"),
    };
    FiniteGroup::from_table(&name, table)
}

pub fn load_table(path: &Path) -> Result<FiniteGroup, NcError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| NcError::Malformed(format!("cannot read {}: {e}", path.display())))?;
    parse_table(&text)
}
