//! Field files: a `# nx,ny,t` header followed by `ny` rows of `nx` values.
//!
//! Values are written in the shortest decimal form that parses back to the
//! same `f64` (at most 17 significant digits), so a round trip is exact.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::spectral::{GridSpec, PhysicalField};

#[derive(Debug, Error)]
pub enum FieldFileError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

fn format_err(line: usize, message: impl Into<String>) -> FieldFileError {
    FieldFileError::Format {
        line,
        message: message.into(),
    }
}

pub fn field_to_csv(f: &PhysicalField, t: f64) -> String {
    let g = f.grid();
    let mut out = String::with_capacity(g.len() * 20);
    writeln!(out, "# {},{},{}", g.nx(), g.ny(), t).unwrap();
    for row in f.values().chunks(g.nx()) {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            write!(out, "{v}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn write_field_csv(f: &PhysicalField, t: f64, path: impl AsRef<Path>) -> Result<(), FieldFileError> {
    fs::write(path, field_to_csv(f, t))?;
    Ok(())
}

pub fn field_from_csv(text: &str) -> Result<(PhysicalField, f64), FieldFileError> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or_else(|| format_err(1, "empty file"))?;
    let header = header
        .strip_prefix('#')
        .ok_or_else(|| format_err(1, "header must start with '#'"))?;
    let parts: Vec<&str> = header.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format_err(1, "header must be '# nx,ny,t'"));
    }
    let nx: usize = parts[0].parse().map_err(|_| format_err(1, "bad nx"))?;
    let ny: usize = parts[1].parse().map_err(|_| format_err(1, "bad ny"))?;
    let t: f64 = parts[2].parse().map_err(|_| format_err(1, "bad t"))?;
    let grid = GridSpec::new(nx, ny).map_err(|e| format_err(1, e.to_string()))?;

    let mut values = Vec::with_capacity(grid.len());
    let mut rows = 0;
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        if rows == ny {
            return Err(format_err(lineno, format!("more than {ny} data rows")));
        }
        let before = values.len();
        for item in line.split(',') {
            let v: f64 = item
                .trim()
                .parse()
                .map_err(|_| format_err(lineno, format!("'{}' is not a number", item.trim())))?;
            values.push(v);
        }
        let count = values.len() - before;
        if count != nx {
            return Err(format_err(
                lineno,
                format!("row {} has {count} values, expected {nx}", rows + 1),
            ));
        }
        rows += 1;
    }
    if rows != ny {
        return Err(format_err(
            text.lines().count() + 1,
            format!("file ends after {rows} of {ny} rows"),
        ));
    }
    let field = PhysicalField::new(grid, values).map_err(|e| format_err(1, e.to_string()))?;
    Ok((field, t))
}

pub fn read_field_csv(path: impl AsRef<Path>) -> Result<(PhysicalField, f64), FieldFileError> {
    field_from_csv(&fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_field_layout() {
        let f = PhysicalField::zeros(GridSpec::square(4).unwrap());
        assert_eq!(field_to_csv(&f, 0.0), "# 4,4,0\n0,0,0,0\n0,0,0,0\n0,0,0,0\n0,0,0,0\n");
    }

    #[test]
    fn truncated_file_names_short_row() {
        let g = GridSpec::square(4).unwrap();
        let f = PhysicalField::from_fn(g, |x, y| x + y);
        let text = field_to_csv(&f, 1.5);
        let cut = &text[..text.trim_end().rfind(',').unwrap()];
        match field_from_csv(cut) {
            Err(FieldFileError::Format { line, message }) => {
                assert_eq!(line, 5);
                assert!(message.contains("row 4"), "{message}");
            }
            other => panic!("expected format error, got {other:?}"),
        }
        let missing_rows: String = text.lines().take(3).map(|l| format!("{l}\n")).collect();
        assert!(matches!(
            field_from_csv(&missing_rows),
            Err(FieldFileError::Format { .. })
        ));
    }

    #[test]
    fn rejects_bad_header_and_values() {
        assert!(field_from_csv("").is_err());
        assert!(field_from_csv("4,4,0\n").is_err());
        assert!(field_from_csv("# 5,4,0\n").is_err());
        assert!(field_from_csv("# 4,4,0\n1,2,x,4\n").is_err());
    }

    #[test]
    fn closed_form_round_trip() {
        use crate::exact::{lookup_sample, Sample};
        let Some(Sample::Exact(sol)) = lookup_sample("theta1", 0.001, 0.001) else { panic!() };
        let f = sol.eval_theta(0.0, GridSpec::square(64).unwrap()).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("theta1.csv");
        write_field_csv(&f, 0.0, &path).unwrap();
        let (back, t) = read_field_csv(&path).unwrap();
        assert_eq!(t, 0.0);
        assert_eq!(back, f);
    }

    #[test]
    fn extreme_values_survive() {
        let g = GridSpec::square(4).unwrap();
        let vals = vec![
            1e-300,
            -0.0,
            f64::MAX,
            f64::MIN_POSITIVE,
            0.1,
            1.0 / 3.0,
            -2.5e17,
            5e-324,
            7.0,
            8.0,
            9.0,
            10.0,
            11.0,
            12.0,
            13.0,
            14.0,
        ];
        let f = PhysicalField::new(g, vals).unwrap();
        let (back, t) = field_from_csv(&field_to_csv(&f, 0.3)).unwrap();
        assert_eq!(t, 0.3);
        for (a, b) in back.values().iter().zip(f.values()) {
            assert_eq!(a.to_bits(), b.to_bits());
        }
    }
}
