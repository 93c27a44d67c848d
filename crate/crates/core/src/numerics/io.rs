//! Matrix serialisation: JSON `{"rows","cols","re","im"}` and CSV with `a+bi` cells.

use serde::{Deserialize, Serialize};

use super::matrix::{ComplexMatrix, C64};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub rows: usize,
    pub cols: usize,
    pub re: Vec<f64>,
    pub im: Vec<f64>,
}

impl From<&ComplexMatrix> for MatrixJson {
    fn from(m: &ComplexMatrix) -> Self {
        Self {
            rows: m.rows(),
            cols: m.cols(),
            re: m.as_slice().iter().map(|z| z.re).collect(),
            im: m.as_slice().iter().map(|z| z.im).collect(),
        }
    }
}

impl TryFrom<MatrixJson> for ComplexMatrix {
    type Error = Error;

    fn try_from(j: MatrixJson) -> Result<Self> {
        if j.re.len() != j.im.len() {
            return Err(Error::Parse(format!(
                "re has {} entries but im has {}",
                j.re.len(),
                j.im.len()
            )));
        }
        let data =
            j.re.iter()
                .zip(&j.im)
                .map(|(&r, &i)| C64::new(r, i))
                .collect();
        ComplexMatrix::new(j.rows, j.cols, data)
    }
}

pub fn matrix_to_json(m: &ComplexMatrix) -> String {
    serde_json::to_string(&MatrixJson::from(m)).expect("plain numeric struct")
}

pub fn matrix_from_json(text: &str) -> Result<ComplexMatrix> {
    let j: MatrixJson = serde_json::from_str(text)?;
    j.try_into()
}

fn format_cell(z: C64) -> String {
    // `{}` on f64 prints the shortest string that parses back to the same bits
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", z.re, sign, z.im.abs())
}

fn parse_cell(cell: &str) -> Result<C64> {
    let s = cell.trim();
    let body = s
        .strip_suffix('i')
        .ok_or_else(|| Error::Parse(format!("cell `{s}` does not end in `i`")))?;
    // split at the last sign that is not a leading sign or an exponent sign
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'))
        .ok_or_else(|| Error::Parse(format!("cell `{s}` has no imaginary part")))?;
    let re: f64 = body[..split]
        .parse()
        .map_err(|e| Error::Parse(format!("real part of `{s}`: {e}")))?;
    let im: f64 = body[split..]
        .parse()
        .map_err(|e| Error::Parse(format!("imaginary part of `{s}`: {e}")))?;
    Ok(C64::new(re, im))
}

pub fn matrix_to_csv(m: &ComplexMatrix) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let line: Vec<String> = m.row(i).iter().map(|&z| format_cell(z)).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

pub fn matrix_from_csv(text: &str) -> Result<ComplexMatrix> {
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| l.split(',').map(parse_cell).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    ComplexMatrix::from_rows(&rows)
}
