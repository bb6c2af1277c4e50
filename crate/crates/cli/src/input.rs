use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use lopsided::convexity::PointCloud;
use lopsided::prelude::*;

/// Optional header labels and the rows.
type Table = (Option<Vec<String>>, Vec<Vec<f64>>);

pub fn read_text(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

pub fn read_family(path: &Path) -> Result<SignFamily> {
    let text = read_text(path)?;
    SignFamily::parse(&text).with_context(|| format!("{}", path.display()))
}

/// Loads a cloud from JSON (an array of arrays) or CSV (one point per row,
/// optional header of coordinate labels, `#` comments).
pub fn read_cloud(path: &Path, tolerance: f64) -> Result<PointCloud> {
    let text = read_text(path)?;
    let is_json = path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
        || text.trim_start().starts_with('[');
    let (labels, rows) = if is_json { parse_json(&text)? } else { parse_csv(&text)? };
    let cloud = match labels {
        Some(labels) => PointCloud::new(GroundSet::with_labels(labels)?, rows)?,
        None => PointCloud::from_rows(rows)?,
    };
    Ok(cloud.with_tolerance(tolerance)?)
}

fn parse_json(text: &str) -> Result<Table> {
    let rows: Vec<Vec<f64>> =
        serde_json::from_str(text).context("expected a JSON array of numeric arrays")?;
    check_rectangular(rows.iter().map(Vec::len).enumerate().map(|(i, n)| (i + 1, n)))?;
    Ok((None, rows))
}

fn parse_csv(text: &str) -> Result<Table> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut labels = None;
    let mut rows = Vec::new();
    let mut lengths = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record?;
        let line = record.position().map_or(i + 1, |p| p.line() as usize);
        let parsed: Result<Vec<f64>, _> = record.iter().map(str::parse::<f64>).collect();
        match parsed {
            Ok(row) => {
                lengths.push((line, row.len()));
                rows.push(row);
            }
            Err(_) if i == 0 && labels.is_none() => {
                let header: Vec<String> = record.iter().map(str::to_string).collect();
                lengths.push((line, header.len()));
                labels = Some(header);
            }
            Err(e) => bail!("line {line}: {e}"),
        }
    }
    check_rectangular(lengths.into_iter())?;
    Ok((labels, rows))
}

fn check_rectangular(mut lengths: impl Iterator<Item = (usize, usize)>) -> Result<()> {
    let Some((_, n)) = lengths.next() else { return Ok(()) };
    for (line, len) in lengths {
        if len != n {
            return Err(anyhow!("line {line}: expected {n} coordinates, found {len}"));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_with_header_and_comments() {
        let (labels, rows) = parse_csv("# cloud\nx, y\n0.5, 0.5\n-1, 0\n").unwrap();
        assert_eq!(labels.unwrap(), vec!["x", "y"]);
        assert_eq!(rows, vec![vec![0.5, 0.5], vec![-1.0, 0.0]]);
    }

    #[test]
    fn ragged_rows_are_rejected() {
        let err = parse_csv("1,2\n3\n").unwrap_err().to_string();
        assert!(err.contains("line 2"), "{err}");
        assert!(parse_json("[[1,2],[3]]").is_err());
        assert!(parse_csv("1,2\n3,x\n").is_err());
    }

    #[test]
    fn json_rows() {
        let (labels, rows) = parse_json("[[0, 1], [2, -3]]").unwrap();
        assert!(labels.is_none());
        assert_eq!(rows.len(), 2);
    }
}
