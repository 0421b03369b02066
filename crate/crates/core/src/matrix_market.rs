//! Matrix Market reader and writer for dense matrices.
//!
//! Reads both `array` and `coordinate` formats with `real`, `double`,
//! `integer` or `complex` fields and `general`, `symmetric`, `hermitian` or
//! `skew-symmetric` storage. Symmetric storage lists only the lower triangle
//! and is expanded to full storage. Indices are 1-based, array data is
//! column-major, and coordinate duplicates are summed.

use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::matrix::{DenseMatrix, Scalar};

#[derive(Debug, Error)]
pub enum MatrixMarketError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Format {
    Array,
    Coordinate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Field {
    Real,
    Integer,
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Symmetry {
    General,
    Symmetric,
    Hermitian,
    SkewSymmetric,
}

fn err(line: usize, message: impl Into<String>) -> MatrixMarketError {
    MatrixMarketError::Parse {
        line,
        message: message.into(),
    }
}

/// Non-comment, non-blank lines with their 1-based line numbers.
struct DataLines<R> {
    inner: io::Lines<R>,
    line_no: usize,
}

impl<R: BufRead> DataLines<R> {
    fn next_data(&mut self) -> Result<Option<(usize, String)>, MatrixMarketError> {
        for line in self.inner.by_ref() {
            self.line_no += 1;
            let line = line?;
            let trimmed = line.trim();
            if trimmed.is_empty() || trimmed.starts_with('%') {
                continue;
            }
            return Ok(Some((self.line_no, trimmed.to_string())));
        }
        Ok(None)
    }
}

fn parse_header(line: &str) -> Result<(Format, Field, Symmetry), MatrixMarketError> {
    let tokens: Vec<String> = line
        .split_whitespace()
        .map(str::to_ascii_lowercase)
        .collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" {
        return Err(err(
            1,
            "expected '%%MatrixMarket matrix <format> <field> <symmetry>'",
        ));
    }
    if tokens[1] != "matrix" {
        return Err(err(1, format!("unsupported object '{}'", tokens[1])));
    }
    let format = match tokens[2].as_str() {
        "array" => Format::Array,
        "coordinate" => Format::Coordinate,
        other => return Err(err(1, format!("unsupported format '{other}'"))),
    };
    let field = match tokens[3].as_str() {
        "real" | "double" => Field::Real,
        "integer" => Field::Integer,
        "complex" => Field::Complex,
        other => return Err(err(1, format!("unsupported field '{other}'"))),
    };
    let symmetry = match tokens[4].as_str() {
        "general" => Symmetry::General,
        "symmetric" => Symmetry::Symmetric,
        "hermitian" => Symmetry::Hermitian,
        "skew-symmetric" => Symmetry::SkewSymmetric,
        other => return Err(err(1, format!("unsupported symmetry '{other}'"))),
    };
    if symmetry == Symmetry::Hermitian && field != Field::Complex {
        return Err(err(1, "hermitian symmetry requires the complex field"));
    }
    Ok((format, field, symmetry))
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize, MatrixMarketError> {
    tok.parse::<usize>()
        .map_err(|_| err(line, format!("invalid {what} '{tok}'")))
}

fn parse_value<'a>(
    tokens: &mut impl Iterator<Item = &'a str>,
    field: Field,
    line: usize,
) -> Result<Scalar, MatrixMarketError> {
    let mut number = |what: &str| -> Result<f64, MatrixMarketError> {
        let tok = tokens
            .next()
            .ok_or_else(|| err(line, format!("missing {what}")))?;
        let v = match field {
            Field::Integer => tok
                .parse::<i64>()
                .map(|i| i as f64)
                .map_err(|_| err(line, format!("invalid integer '{tok}'")))?,
            _ => tok
                .parse::<f64>()
                .map_err(|_| err(line, format!("invalid number '{tok}'")))?,
        };
        if v.is_finite() {
            Ok(v)
        } else {
            Err(err(line, format!("non-finite value '{tok}'")))
        }
    };
    match field {
        Field::Complex => {
            let re = number("real part")?;
            let im = number("imaginary part")?;
            Ok(Scalar::new(re, im))
        }
        _ => Ok(Scalar::new(number("value")?, 0.0)),
    }
}

fn mirror(value: Scalar, symmetry: Symmetry) -> Scalar {
    match symmetry {
        Symmetry::General | Symmetry::Symmetric => value,
        Symmetry::Hermitian => value.conj(),
        Symmetry::SkewSymmetric => -value,
    }
}

/// Parse a Matrix Market stream into a dense matrix.
pub fn parse_matrix_market<R: BufRead>(reader: R) -> Result<DenseMatrix, MatrixMarketError> {
    let mut lines = DataLines {
        inner: reader.lines(),
        line_no: 0,
    };
    let header = match lines.inner.next() {
        Some(line) => line?,
        None => return Err(err(1, "empty input")),
    };
    lines.line_no = 1;
    let (format, field, symmetry) = parse_header(&header)?;

    let (size_line, size) = lines
        .next_data()?
        .ok_or_else(|| err(lines.line_no, "missing size line"))?;
    let dims: Vec<&str> = size.split_whitespace().collect();
    let expected_tokens = if format == Format::Array { 2 } else { 3 };
    if dims.len() != expected_tokens {
        return Err(err(
            size_line,
            format!("size line must have {expected_tokens} integers"),
        ));
    }
    let rows = parse_usize(dims[0], size_line, "row count")?;
    let cols = parse_usize(dims[1], size_line, "column count")?;
    if rows == 0 || cols == 0 {
        return Err(err(size_line, "matrix dimensions must be positive"));
    }
    if symmetry != Symmetry::General && rows != cols {
        return Err(err(size_line, "symmetric storage requires a square matrix"));
    }
    let mut data = vec![Scalar::new(0.0, 0.0); rows * cols];

    let mut place =
        |i: usize, j: usize, v: Scalar, line: usize, add: bool| -> Result<(), MatrixMarketError> {
            if symmetry != Symmetry::General && j > i {
                return Err(err(
                    line,
                    format!(
                        "entry ({}, {}) above the diagonal in symmetric storage",
                        i + 1,
                        j + 1
                    ),
                ));
            }
            if i == j {
                match symmetry {
                    Symmetry::Hermitian if v.im != 0.0 => {
                        return Err(err(line, "hermitian diagonal entry must be real"))
                    }
                    Symmetry::SkewSymmetric => {
                        return Err(err(line, "skew-symmetric storage excludes the diagonal"))
                    }
                    _ => {}
                }
            }
            let slot = &mut data[i * cols + j];
            *slot = if add { *slot + v } else { v };
            if i != j && symmetry != Symmetry::General {
                let m = mirror(v, symmetry);
                let slot = &mut data[j * cols + i];
                *slot = if add { *slot + m } else { m };
            }
            Ok(())
        };

    match format {
        Format::Array => {
            // Column-major positions actually stored for this symmetry.
            let positions: Vec<(usize, usize)> = (0..cols)
                .flat_map(|j| (0..rows).map(move |i| (i, j)))
                .filter(|&(i, j)| match symmetry {
                    Symmetry::General => true,
                    Symmetry::SkewSymmetric => i > j,
                    _ => i >= j,
                })
                .collect();
            for &(i, j) in &positions {
                let (line, text) = lines.next_data()?.ok_or_else(|| {
                    err(
                        lines.line_no,
                        format!("expected {} entries, input ended early", positions.len()),
                    )
                })?;
                let mut tokens = text.split_whitespace();
                let v = parse_value(&mut tokens, field, line)?;
                if tokens.next().is_some() {
                    return Err(err(line, "trailing tokens after entry"));
                }
                place(i, j, v, line, false)?;
            }
        }
        Format::Coordinate => {
            let nnz = parse_usize(dims[2], size_line, "entry count")?;
            for _ in 0..nnz {
                let (line, text) = lines.next_data()?.ok_or_else(|| {
                    err(
                        lines.line_no,
                        format!("expected {nnz} entries, input ended early"),
                    )
                })?;
                let mut tokens = text.split_whitespace();
                let i = parse_usize(tokens.next().unwrap_or(""), line, "row index")?;
                let j = parse_usize(tokens.next().unwrap_or(""), line, "column index")?;
                if i == 0 || i > rows || j == 0 || j > cols {
                    return Err(err(
                        line,
                        format!("index ({i}, {j}) out of range for {rows}x{cols} matrix"),
                    ));
                }
                let v = parse_value(&mut tokens, field, line)?;
                if tokens.next().is_some() {
                    return Err(err(line, "trailing tokens after entry"));
                }
                place(i - 1, j - 1, v, line, true)?;
            }
        }
    }
    if let Some((line, _)) = lines.next_data()? {
        return Err(err(line, "unexpected extra entry"));
    }
    DenseMatrix::new(rows, cols, data).map_err(|e| err(lines.line_no, e.to_string()))
}

/// Convenience wrapper around [`parse_matrix_market`] for in-memory text.
pub fn parse_matrix_market_str(text: &str) -> Result<DenseMatrix, MatrixMarketError> {
    parse_matrix_market(text.as_bytes())
}

/// Write `a` in `array general` format, as `real` when every imaginary part
/// is zero and `complex` otherwise. Values use the shortest representation
/// that parses back to the same bits.
pub fn write_matrix_market<W: Write>(a: &DenseMatrix, mut out: W) -> io::Result<()> {
    let complex = !a.is_real();
    writeln!(
        out,
        "%%MatrixMarket matrix array {} general",
        if complex { "complex" } else { "real" }
    )?;
    writeln!(out, "{} {}", a.rows(), a.cols())?;
    for j in 0..a.cols() {
        for i in 0..a.rows() {
            let z = a[(i, j)];
            if complex {
                writeln!(out, "{:e} {:e}", z.re, z.im)?;
            } else {
                writeln!(out, "{:e}", z.re)?;
            }
        }
    }
    Ok(())
}
