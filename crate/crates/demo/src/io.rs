use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use crate::Result;

/// Write a `[0, 1]` image as binary 8-bit PGM (magic `P5`). Values are
/// clamped and rounded to the nearest of 256 gray levels.
pub fn write_pgm(path: &Path, img: &[f64], rows: usize, cols: usize) -> Result<()> {
    assert_eq!(img.len(), rows * cols, "write_pgm: shape mismatch");
    let mut w = BufWriter::new(File::create(path)?);
    write!(w, "P5\n{cols} {rows}\n255\n")?;
    let bytes: Vec<u8> = img
        .iter()
        .map(|&v| (v.clamp(0.0, 1.0) * 255.0).round() as u8)
        .collect();
    w.write_all(&bytes)?;
    Ok(())
}

/// Write an objective trace as CSV with an `iteration,objective` header
/// and 1-based iteration numbers.
pub fn write_trace_csv(path: &Path, trace: &[f64]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "iteration,objective")?;
    for (k, value) in trace.iter().enumerate() {
        writeln!(w, "{},{}", k + 1, value)?;
    }
    Ok(())
}

/// Write `key=value` lines in the given order.
pub fn write_summary(path: &Path, entries: &[(String, String)]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    for (key, value) in entries {
        writeln!(w, "{key}={value}")?;
    }
    Ok(())
}
