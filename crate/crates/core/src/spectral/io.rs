//! CSV interchange for signals. Floats are written in Rust's shortest
//! round-trip form, so values survive a text round trip exactly.

use std::io::{BufRead, Write};

use num_complex::Complex64;

use crate::error::{Error, Result};

use super::grid::SpectralGrid;
use super::signal::Signal;

const SAMPLES_HEADER: &str = "index,x,re,im";
const COEFFICIENTS_HEADER: &str = "j,re,im";

pub fn write_samples_csv(signal: &Signal, out: &mut impl Write) -> Result<()> {
    writeln!(out, "{SAMPLES_HEADER}")?;
    let grid = signal.grid();
    for (i, value) in signal.samples().iter().enumerate() {
        writeln!(out, "{},{},{},{}", i, grid.point(i), value.re, value.im)?;
    }
    Ok(())
}

pub fn write_coefficients_csv(signal: &Signal, out: &mut impl Write) -> Result<()> {
    writeln!(out, "{COEFFICIENTS_HEADER}")?;
    for (j, value) in signal.coefficients_by_frequency() {
        writeln!(out, "{},{},{}", j, value.re, value.im)?;
    }
    Ok(())
}

fn parse_f64(field: &str, line_no: usize) -> Result<f64> {
    field
        .trim()
        .parse()
        .map_err(|_| Error::Malformed(format!("line {line_no}: bad float {field:?}")))
}

fn split_fields(line: &str, expected: usize, line_no: usize) -> Result<Vec<&str>> {
    let fields: Vec<&str> = line.split(',').collect();
    if fields.len() != expected {
        return Err(Error::Malformed(format!(
            "line {line_no}: expected {expected} fields, got {}",
            fields.len()
        )));
    }
    Ok(fields)
}

/// Rebuild a signal from `index,x,re,im` rows; the grid size is the row
/// count.
pub fn read_samples_csv(input: &mut impl BufRead) -> Result<Signal> {
    let mut lines = input.lines();
    let header = lines.next().transpose()?.unwrap_or_default();
    if header.trim() != SAMPLES_HEADER {
        return Err(Error::Malformed(format!(
            "expected header {SAMPLES_HEADER:?}"
        )));
    }
    let mut samples = Vec::new();
    for (row, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields = split_fields(&line, 4, row + 2)?;
        let index: usize = fields[0]
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(format!("line {}: bad index", row + 2)))?;
        if index != samples.len() {
            return Err(Error::Malformed(format!(
                "line {}: index {index} out of order",
                row + 2
            )));
        }
        let re = parse_f64(fields[2], row + 2)?;
        let im = parse_f64(fields[3], row + 2)?;
        samples.push(Complex64::new(re, im));
    }
    let grid = SpectralGrid::new(samples.len())?;
    Signal::from_samples(grid, samples)
}

/// Rebuild a signal from `j,re,im` rows covering every represented
/// frequency; the grid size is the row count.
pub fn read_coefficients_csv(input: &mut impl BufRead) -> Result<Signal> {
    let mut lines = input.lines();
    let header = lines.next().transpose()?.unwrap_or_default();
    if header.trim() != COEFFICIENTS_HEADER {
        return Err(Error::Malformed(format!(
            "expected header {COEFFICIENTS_HEADER:?}"
        )));
    }
    let mut rows: Vec<(i64, Complex64)> = Vec::new();
    for (row, line) in lines.enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let fields = split_fields(&line, 3, row + 2)?;
        let j: i64 = fields[0]
            .trim()
            .parse()
            .map_err(|_| Error::Malformed(format!("line {}: bad frequency", row + 2)))?;
        let re = parse_f64(fields[1], row + 2)?;
        let im = parse_f64(fields[2], row + 2)?;
        rows.push((j, Complex64::new(re, im)));
    }
    let grid = SpectralGrid::new(rows.len())?;
    Signal::from_coefficients(grid, &rows)
}
