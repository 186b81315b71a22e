// Copyright 2026 The abelsq Authors
// SPDX-License-Identifier: Apache-2.0

//! Reference values of `f_d(t)` for `d = 1..=6`, `t = 0..=7`.

use abelsq_core::BigUint;

use crate::error::CliError;

const VALUES: [[u64; 8]; 6] = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [1, 2, 6, 20, 70, 252, 924, 3432],
    [1, 3, 15, 93, 639, 4653, 35169, 272835],
    [1, 4, 28, 256, 2716, 31504, 387136, 4951552],
    [1, 5, 45, 545, 7885, 127905, 2241225, 41467725],
    [1, 6, 66, 996, 18306, 384156, 8848236, 218040696],
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    pub d: u32,
    pub t: usize,
    pub expected: BigUint,
}

/// All 48 cells, row-major by `d` then `t`.
pub fn cells() -> Vec<Cell> {
    VALUES
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter().enumerate().map(move |(t, &v)| Cell {
                d: i as u32 + 1,
                t,
                expected: BigUint::from(v),
            })
        })
        .collect()
}

/// Reads a fixture CSV with header `d,t,expected`.
pub fn parse_fixture(text: &str) -> Result<Vec<Cell>, CliError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|e| CliError::Usage(format!("bad fixture header: {e}")))?
        .clone();
    if headers.iter().collect::<Vec<_>>() != ["d", "t", "expected"] {
        return Err(CliError::Usage(format!(
            "fixture header must be d,t,expected, got {}",
            headers.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut cells = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let bad = || CliError::Usage(format!("bad fixture row {}", line + 1));
        let record = record.map_err(|_| bad())?;
        cells.push(Cell {
            d: record[0].trim().parse().map_err(|_| bad())?,
            t: record[1].trim().parse().map_err(|_| bad())?,
            expected: record[2].trim().parse().map_err(|_| bad())?,
        });
    }
    Ok(cells)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn layout() {
        let cells = cells();
        assert_eq!(cells.len(), 48);
        assert_eq!(
            cells[3 * 8 - 8 + 3],
            Cell {
                d: 3,
                t: 3,
                expected: 93u32.into()
            }
        );
        assert_eq!(
            cells.last().unwrap().expected,
            BigUint::from(218_040_696u32)
        );
    }

    #[test]
    fn fixture_parsing() {
        let cells = parse_fixture("d,t,expected\n3,3,93\n6,7,218040696\n").unwrap();
        assert_eq!(cells.len(), 2);
        assert_eq!(cells[1].t, 7);
        assert!(parse_fixture("d,t\n1,2\n").is_err());
        assert!(parse_fixture("d,t,expected\n1,x,1\n").is_err());
    }
}
