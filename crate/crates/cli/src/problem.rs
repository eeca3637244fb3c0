//! Problem and result documents: JSON with complex values written either as
//! `[re, im]` pairs or as `"a+bi"` strings, matrices as rows of numbers.

use centro_core::{
    ComplexVal, DenseMatrix, Partition, RealizationKind, RealizationReport, SpectrumList,
    SplitParity, SubRealizers,
};
use serde::{Deserialize, Serialize};

#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum SpectrumEntry {
    Real(f64),
    Pair([f64; 2]),
    Text(String),
}

impl SpectrumEntry {
    pub fn to_complex(&self) -> Result<ComplexVal, String> {
        match self {
            SpectrumEntry::Real(re) => Ok(ComplexVal::real(*re)),
            SpectrumEntry::Pair([re, im]) => Ok(ComplexVal::new(*re, *im)),
            SpectrumEntry::Text(s) => parse_complex(s),
        }
    }
}

/// Parses "a", "bi", "a+bi", "a-bi", "i", "-i" with optional exponents.
pub fn parse_complex(input: &str) -> Result<ComplexVal, String> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err("empty value".into());
    }
    if !s.ends_with('i') {
        let re: f64 = s.parse().map_err(|_| format!("bad real value '{input}'"))?;
        return Ok(ComplexVal::real(re));
    }
    let body = &s[..s.len() - 1];
    let parse_signed_unit = |t: &str| -> Result<f64, String> {
        match t {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            other => other
                .parse()
                .map_err(|_| format!("bad imaginary part '{input}'")),
        }
    };
    // find the sign splitting real and imaginary parts: not leading, not an
    // exponent sign
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let c = bytes[idx] as char;
        if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
            split = Some(idx);
            break;
        }
    }
    match split {
        Some(idx) => {
            let re: f64 = body[..idx]
                .parse()
                .map_err(|_| format!("bad real part '{input}'"))?;
            let im = parse_signed_unit(&body[idx..])?;
            Ok(ComplexVal::new(re, im))
        }
        None => Ok(ComplexVal::new(0.0, parse_signed_unit(body)?)),
    }
}

/// Parses a comma-separated spectrum such as "4,-2+2i,-2-2i".
pub fn parse_spectrum_csv(csv: &str) -> Result<Vec<ComplexVal>, String> {
    csv.split(',').map(parse_complex).collect()
}

#[derive(Debug, Deserialize)]
pub struct PartitionFile {
    pub central: Vec<SpectrumEntry>,
    #[serde(default)]
    pub sides: Vec<Vec<SpectrumEntry>>,
    #[serde(default)]
    pub middle: Option<Vec<SpectrumEntry>>,
    pub anchors: Vec<f64>,
    /// Optional caller-supplied realizing matrices.
    #[serde(default)]
    pub side_matrices: Vec<Option<Vec<Vec<f64>>>>,
    #[serde(default)]
    pub middle_matrix: Option<Vec<Vec<f64>>>,
    #[serde(default)]
    pub center_matrix: Option<Vec<Vec<f64>>>,
}

#[derive(Debug, Deserialize)]
pub struct ProblemFile {
    pub spectrum: Vec<SpectrumEntry>,
    #[serde(default = "default_method")]
    pub method: String,
    #[serde(default)]
    pub diagonal: Option<Vec<f64>>,
    #[serde(default)]
    pub partition: Option<PartitionFile>,
    #[serde(default)]
    pub tolerance: Option<f64>,
}

fn default_method() -> String {
    "auto".into()
}

impl ProblemFile {
    pub fn spectrum_values(&self) -> Result<Vec<ComplexVal>, String> {
        if self.spectrum.is_empty() {
            return Err("spectrum must not be empty".into());
        }
        self.spectrum.iter().map(|e| e.to_complex()).collect()
    }
}

fn entries_to_list(entries: &[SpectrumEntry]) -> Result<SpectrumList, String> {
    let vals: Result<Vec<ComplexVal>, String> = entries.iter().map(|e| e.to_complex()).collect();
    SpectrumList::new(&vals?).map_err(|e| e.to_string())
}

fn rows_to_matrix(rows: &[Vec<f64>]) -> Result<DenseMatrix, String> {
    if rows.is_empty() {
        return Err("matrix has no rows".into());
    }
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err("matrix must be square".into());
    }
    let m = DenseMatrix::from_rows(rows);
    if !m.all_finite() {
        return Err("matrix has non-finite entries".into());
    }
    Ok(m)
}

impl PartitionFile {
    pub fn to_partition(&self) -> Result<(Partition, SubRealizers), String> {
        let central = entries_to_list(&self.central)?;
        let parity = if central.len() % 2 == 0 {
            SplitParity::Even
        } else {
            SplitParity::Odd
        };
        let mut sublists = vec![central];
        for side in &self.sides {
            sublists.push(entries_to_list(side)?);
        }
        if let Some(mid) = &self.middle {
            sublists.push(entries_to_list(mid)?);
        }
        let partition = Partition {
            sublists,
            anchors: self.anchors.clone(),
            parity,
        };

        let mut side_overrides = Vec::new();
        for slot in &self.side_matrices {
            side_overrides.push(match slot {
                Some(rows) => Some(rows_to_matrix(rows)?),
                None => None,
            });
        }
        let realizers = SubRealizers {
            side: side_overrides,
            middle: match &self.middle_matrix {
                Some(rows) => Some(rows_to_matrix(rows)?),
                None => None,
            },
            center: match &self.center_matrix {
                Some(rows) => Some(rows_to_matrix(rows)?),
                None => None,
            },
        };
        Ok((partition, realizers))
    }
}

/// Matrix document: either bare rows or wrapped in an object, so result
/// files re-read directly.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
pub enum MatrixFile {
    Bare(Vec<Vec<f64>>),
    Wrapped { matrix: MatrixDoc },
}

#[derive(Debug, Deserialize)]
pub struct MatrixDoc {
    pub entries: Vec<Vec<f64>>,
}

impl MatrixFile {
    pub fn to_matrix(&self) -> Result<DenseMatrix, String> {
        match self {
            MatrixFile::Bare(rows) => rows_to_matrix(rows),
            MatrixFile::Wrapped { matrix } => rows_to_matrix(&matrix.entries),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct MatrixOut {
    pub order: usize,
    pub entries: Vec<Vec<f64>>,
}

impl MatrixOut {
    pub fn from_matrix(m: &DenseMatrix) -> Self {
        let n = m.order();
        Self {
            order: n,
            entries: (0..n).map(|i| m.row(i).to_vec()).collect(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ProvenanceOut {
    pub construction: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partition: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ReportOut {
    pub matched: bool,
    pub max_distance: f64,
    pub centro_residual: f64,
    pub nonneg_margin: f64,
    pub kind: String,
    pub accepted: bool,
    pub provenance: ProvenanceOut,
}

pub fn kind_label(kind: RealizationKind) -> &'static str {
    match kind {
        RealizationKind::RealCentro => "real",
        RealizationKind::NonnegCentro => "nonnegative",
        RealizationKind::PositiveCentro => "positive",
    }
}

impl ReportOut {
    pub fn from_report(report: &RealizationReport, kind: RealizationKind) -> Self {
        Self {
            matched: report.spectrum.matched,
            max_distance: report.spectrum.max_distance,
            centro_residual: report.centro_residual,
            nonneg_margin: report.nonneg_margin,
            kind: kind_label(kind).to_string(),
            accepted: report.accepted,
            provenance: ProvenanceOut {
                construction: report.provenance.construction.clone(),
                partition: report.provenance.partition.clone(),
            },
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ResultFile {
    pub matrix: MatrixOut,
    pub report: ReportOut,
}

#[derive(Debug, Serialize)]
pub struct CheckResult {
    pub matched: bool,
    pub max_distance: f64,
    pub centro_residual: f64,
    pub nonneg_margin: f64,
}

#[derive(Debug, Serialize)]
pub struct FixtureMatrixOut {
    pub label: String,
    pub matrix: MatrixOut,
    pub check: CheckResult,
}

#[derive(Debug, Serialize)]
pub struct FixtureOut {
    pub name: String,
    pub reference: Vec<FixtureMatrixOut>,
    pub pipeline: ResultFile,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_complex_forms() {
        let cases = [
            ("4", (4.0, 0.0)),
            ("-2+2i", (-2.0, 2.0)),
            ("-2-2i", (-2.0, -2.0)),
            ("i", (0.0, 1.0)),
            ("-i", (0.0, -1.0)),
            ("3.5i", (0.0, 3.5)),
            ("1e2+0.5i", (100.0, 0.5)),
            ("2.5e-1-1e-2i", (0.25, -0.01)),
            (" 1 + 1i ", (1.0, 1.0)),
        ];
        for (s, (re, im)) in cases {
            let v = parse_complex(s).unwrap();
            assert_eq!((v.re, v.im), (re, im), "{s}");
        }
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_complex("abc").is_err());
        assert!(parse_complex("1+2j").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn csv_roundtrip() {
        let vals = parse_spectrum_csv("4,-2+2i,-2-2i").unwrap();
        assert_eq!(vals.len(), 3);
        assert_eq!(vals[1].im, 2.0);
    }
}
