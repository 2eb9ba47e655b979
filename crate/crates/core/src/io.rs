//! JSON documents for graphs, gluing specifications, matrices,
//! polynomials, spectra and wave functions, plus a plain-text rendering of
//! each result.
//!
//! Integers are written as bare JSON numbers with every digit, however
//! large. Reals in spectra use 12 significant digits.
//!
//! ```json
//! {"name": "P3", "vertices": 3, "edges": [[0, 1], [1, 2]]}
//! {"mode": "interface", "vertices_1": [2], "vertices_2": [0]}
//! {"mode": "bridge", "pairs": [[1, 0], [2, 3]]}
//! ```

use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use serde_json::{json, Number, Value};

use crate::error::Error;
use crate::gluing::{BridgeSpec, InterfaceSpec};
use crate::graph::OrientedGraph;
use crate::matrix::IntMatrix;
use crate::poly::IntPoly;
use crate::quantum::WaveFunction;
use crate::spectral::Spectrum;

#[derive(Debug, thiserror::Error)]
pub enum DocumentError {
    /// Not a well-formed document of the expected kind.
    #[error("parse error: {0}")]
    Parse(String),
    /// Well-formed but describes an invalid object.
    #[error("invalid: {0}")]
    Invalid(#[from] Error),
}

impl From<serde_json::Error> for DocumentError {
    fn from(e: serde_json::Error) -> Self {
        DocumentError::Parse(e.to_string())
    }
}

pub type DocResult<T> = std::result::Result<T, DocumentError>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub vertices: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDocument {
    pub fn from_graph(g: &OrientedGraph, name: Option<String>) -> Self {
        GraphDocument {
            name,
            vertices: g.n_vertices(),
            edges: g.edges().iter().map(|e| [e.tail, e.head]).collect(),
        }
    }

    pub fn to_graph(&self) -> crate::Result<OrientedGraph> {
        OrientedGraph::new(self.vertices, self.edges.iter().map(|&[t, h]| (t, h)))
    }
}

pub fn parse_graph(text: &str) -> DocResult<OrientedGraph> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    Ok(doc.to_graph()?)
}

pub fn graph_to_json(g: &OrientedGraph, name: Option<String>) -> Value {
    serde_json::to_value(GraphDocument::from_graph(g, name)).expect("graph documents serialize")
}

/// Gluing specification. Interface edges may be omitted, in which case
/// they are completed from Γ1 so that every Γ1 edge between interface
/// vertices belongs to the interface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase", deny_unknown_fields)]
pub enum GlueDocument {
    Interface {
        vertices_1: Vec<usize>,
        vertices_2: Vec<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        edges_1: Option<Vec<usize>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        edges_2: Option<Vec<usize>>,
    },
    Bridge {
        pairs: Vec<[usize; 2]>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GlueSpec {
    Interface(InterfaceSpec),
    Bridge(BridgeSpec),
}

impl GlueDocument {
    pub fn from_interface(spec: &InterfaceSpec) -> Self {
        GlueDocument::Interface {
            vertices_1: spec.vertices_1.clone(),
            vertices_2: spec.vertices_2.clone(),
            edges_1: Some(spec.edges_1.clone()),
            edges_2: Some(spec.edges_2.clone()),
        }
    }

    pub fn from_bridge(spec: &BridgeSpec) -> Self {
        GlueDocument::Bridge {
            pairs: spec.pairs.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    /// Turns the document into a validated specification for `g1`, `g2`.
    pub fn resolve(&self, g1: &OrientedGraph, g2: &OrientedGraph) -> crate::Result<GlueSpec> {
        match self {
            GlueDocument::Interface {
                vertices_1,
                vertices_2,
                edges_1,
                edges_2,
            } => {
                let spec = match (edges_1, edges_2) {
                    (None, None) => {
                        InterfaceSpec::closed_over(g1, g2, vertices_1.clone(), vertices_2.clone())?
                    }
                    (e1, e2) => InterfaceSpec {
                        vertices_1: vertices_1.clone(),
                        vertices_2: vertices_2.clone(),
                        edges_1: e1.clone().unwrap_or_default(),
                        edges_2: e2.clone().unwrap_or_default(),
                    },
                };
                spec.validate(g1, g2)?;
                Ok(GlueSpec::Interface(spec))
            }
            GlueDocument::Bridge { pairs } => {
                let spec = BridgeSpec::new(pairs.iter().map(|&[a, b]| (a, b)).collect());
                spec.validate(g1, g2)?;
                Ok(GlueSpec::Bridge(spec))
            }
        }
    }
}

pub fn parse_glue(text: &str) -> DocResult<GlueDocument> {
    Ok(serde_json::from_str(text)?)
}

fn bigint_value(x: &BigInt) -> Value {
    Value::Number(Number::from_str(&x.to_string()).expect("decimal integers are JSON numbers"))
}

fn value_bigint(v: &Value) -> DocResult<BigInt> {
    match v {
        Value::Number(n) => BigInt::from_str(&n.to_string())
            .map_err(|_| DocumentError::Parse(format!("{n} is not an integer"))),
        other => Err(DocumentError::Parse(format!("expected an integer, found {other}"))),
    }
}

fn value_usize(doc: &Value, key: &str) -> DocResult<usize> {
    doc.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| DocumentError::Parse(format!("missing or invalid `{key}`")))
}

fn value_array<'a>(doc: &'a Value, key: &str) -> DocResult<&'a Vec<Value>> {
    doc.get(key)
        .and_then(Value::as_array)
        .ok_or_else(|| DocumentError::Parse(format!("missing or invalid `{key}`")))
}

/// `{"rows": r, "cols": c, "entries": [[...], ...]}`.
pub fn matrix_to_json(m: &IntMatrix) -> Value {
    let entries: Vec<Value> = (0..m.rows())
        .map(|i| Value::Array(m.row(i).iter().map(bigint_value).collect()))
        .collect();
    json!({ "rows": m.rows(), "cols": m.cols(), "entries": entries })
}

pub fn parse_matrix(text: &str) -> DocResult<IntMatrix> {
    let doc: Value = serde_json::from_str(text)?;
    let rows = value_usize(&doc, "rows")?;
    let cols = value_usize(&doc, "cols")?;
    let raw = value_array(&doc, "entries")?;
    if raw.len() != rows {
        return Err(DocumentError::Parse(format!("{} rows listed, {rows} declared", raw.len())));
    }
    let mut entries = Vec::with_capacity(rows * cols);
    for row in raw {
        let row = row
            .as_array()
            .ok_or_else(|| DocumentError::Parse("matrix rows must be arrays".into()))?;
        if row.len() != cols {
            return Err(DocumentError::Parse(format!("row of length {}, {cols} declared", row.len())));
        }
        for v in row {
            entries.push(value_bigint(v)?);
        }
    }
    Ok(IntMatrix::from_entries(rows, cols, entries)?)
}

/// `{"coefficients": [c0, c1, ...], "degree": d}`, ascending powers of λ.
/// The zero polynomial has no coefficients and a null degree.
pub fn poly_to_json(p: &IntPoly) -> Value {
    json!({
        "coefficients": Value::Array(p.coeffs().iter().map(bigint_value).collect()),
        "degree": p.degree(),
    })
}

pub fn parse_poly(text: &str) -> DocResult<IntPoly> {
    let doc: Value = serde_json::from_str(text)?;
    let coeffs = value_array(&doc, "coefficients")?
        .iter()
        .map(value_bigint)
        .collect::<DocResult<Vec<_>>>()?;
    let p = IntPoly::new(coeffs);
    if let Some(d) = doc.get("degree") {
        if d.as_u64().map(|d| d as usize) != p.degree() {
            return Err(DocumentError::Parse(format!("declared degree {d} does not match")));
        }
    }
    Ok(p)
}

/// Fixed-point rendering with 12 significant digits for |x| ≥ 1 and
/// eleven decimals below that; negative zero prints as zero.
pub fn format_real(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    let magnitude = x.abs().max(1.0).log10().floor() as i32;
    let decimals = (11 - magnitude).max(0) as usize;
    let s = format!("{x:.decimals$}");
    if s.starts_with('-') && s[1..].chars().all(|c| c == '0' || c == '.') {
        s[1..].to_string()
    } else {
        s
    }
}

fn real_value(x: f64) -> Value {
    Number::from_str(&format_real(x))
        .map(Value::Number)
        .unwrap_or(Value::Null)
}

/// `{"eigenvalues": [...], "zero_count": k}`.
pub fn spectrum_to_json(s: &Spectrum) -> Value {
    json!({
        "eigenvalues": Value::Array(s.eigenvalues.iter().map(|&x| real_value(x)).collect()),
        "zero_count": s.zero_count,
    })
}

pub fn real_to_json(x: f64) -> Value {
    real_value(x)
}

/// `{"amplitudes": [[re, im], ...], "norm": ‖ψ‖}`.
pub fn wave_to_json(psi: &WaveFunction) -> Value {
    let amps: Vec<Value> = psi
        .amplitudes
        .iter()
        .map(|z| Value::Array(vec![real_value(z.re), real_value(z.im)]))
        .collect();
    json!({ "amplitudes": amps, "norm": real_value(psi.norm()) })
}

/// Reads `{"amplitudes": [[re, im], ...]}`; a `norm` field is ignored.
pub fn parse_wave(text: &str) -> DocResult<WaveFunction> {
    let doc: Value = serde_json::from_str(text)?;
    let amps = value_array(&doc, "amplitudes")?
        .iter()
        .map(|pair| match pair.as_array().map(|p| p.as_slice()) {
            Some([re, im]) => match (re.as_f64(), im.as_f64()) {
                (Some(re), Some(im)) => Ok(Complex64::new(re, im)),
                _ => Err(DocumentError::Parse(format!("amplitude {pair} is not numeric"))),
            },
            _ => Err(DocumentError::Parse(format!("amplitude {pair} is not a [re, im] pair"))),
        })
        .collect::<DocResult<Vec<_>>>()?;
    Ok(WaveFunction::new(amps))
}

pub fn matrix_plain(m: &IntMatrix) -> String {
    let mut out = format!("{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn poly_plain(p: &IntPoly) -> String {
    format!("{p}\n")
}

pub fn spectrum_plain(s: &Spectrum) -> String {
    let mut out = format!("zero_count {}\n", s.zero_count);
    for &x in &s.eigenvalues {
        out.push_str(&format_real(x));
        out.push('\n');
    }
    out
}

pub fn wave_plain(psi: &WaveFunction) -> String {
    let mut out = String::new();
    for z in &psi.amplitudes {
        out.push_str(&format!("{} {}\n", format_real(z.re), format_real(z.im)));
    }
    out.push_str(&format!("norm {}\n", format_real(psi.norm())));
    out
}

pub fn graph_plain(g: &OrientedGraph) -> String {
    let mut out = format!("{} {}\n", g.n_vertices(), g.n_edges());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.tail, e.head));
    }
    out
}
