//! Labelings and the definitional validity check: a labeling is valid when
//! labels differ by at least `j` across directed distance 1 and by at least
//! `k` across directed distance 2.

use std::fmt::Write as _;

use thiserror::Error;

use crate::classify::distance_pairs;
use crate::digraph::{Digraph, Vertex};

/// A vertex labeling together with its separation parameters `j >= k >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Labeling {
    values: Vec<u32>,
    j: u32,
    k: u32,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelingError {
    #[error("parameters must satisfy j >= k >= 1, got j={j}, k={k}")]
    BadParams { j: u32, k: u32 },
    #[error("vertex {0} has no label")]
    MissingLabel(Vertex),
    #[error("vertex {0} labeled twice")]
    DuplicateVertex(Vertex),
    #[error("vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("labeling covers {found} vertices, digraph has {expected}")]
    VertexCountMismatch { expected: usize, found: usize },
}

impl Labeling {
    pub fn new(values: Vec<u32>, j: u32, k: u32) -> Result<Self, LabelingError> {
        if k == 0 || j < k {
            return Err(LabelingError::BadParams { j, k });
        }
        Ok(Labeling { values, j, k })
    }

    /// Builds a labeling for a digraph on `n` vertices from sparse
    /// `(vertex, label)` assignments; every vertex must appear exactly once.
    pub fn from_assignments(
        n: usize,
        assignments: &[(Vertex, u32)],
        j: u32,
        k: u32,
    ) -> Result<Self, LabelingError> {
        if k == 0 || j < k {
            return Err(LabelingError::BadParams { j, k });
        }
        let mut values = vec![None; n];
        for &(v, label) in assignments {
            if v >= n {
                return Err(LabelingError::VertexOutOfRange { id: v, n });
            }
            if values[v].replace(label).is_some() {
                return Err(LabelingError::DuplicateVertex(v));
            }
        }
        let values = values
            .into_iter()
            .enumerate()
            .map(|(v, label)| label.ok_or(LabelingError::MissingLabel(v)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Labeling { values, j, k })
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn get(&self, v: Vertex) -> u32 {
        self.values[v]
    }

    pub fn j(&self) -> u32 {
        self.j
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Span: maximum label minus minimum label (0 for the empty labeling).
    pub fn span(&self) -> u32 {
        match (self.values.iter().max(), self.values.iter().min()) {
            (Some(max), Some(min)) => max - min,
            _ => 0,
        }
    }

    /// Shifts all labels so the minimum becomes 0. Span and validity are
    /// unchanged since only label differences matter.
    pub fn normalize(&self) -> Labeling {
        let min = self.values.iter().copied().min().unwrap_or(0);
        Labeling {
            values: self.values.iter().map(|&x| x - min).collect(),
            j: self.j,
            k: self.k,
        }
    }

    /// Serializes to the labeling text format (`v: label` lines).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, label) in self.values.iter().enumerate() {
            let _ = writeln!(out, "{v}: {label}");
        }
        out
    }
}

/// One broken separation constraint: the ordered pair, its directed
/// distance, the required gap, and the actual gap (always smaller).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Violation {
    pub x: Vertex,
    pub y: Vertex,
    pub distance: u8,
    pub required: u32,
    pub actual: u32,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({}, {}): distance {}, required {}, actual {}",
            self.x, self.y, self.distance, self.required, self.actual
        )
    }
}

/// Checks `f` against every distance-1 and distance-2 constraint of `d` and
/// returns all violations; the empty list means `f` is an L(j,k)-labeling.
pub fn verify(d: &Digraph, f: &Labeling) -> Result<Vec<Violation>, LabelingError> {
    if f.len() != d.n() {
        return Err(LabelingError::VertexCountMismatch {
            expected: d.n(),
            found: f.len(),
        });
    }
    let (d1, d2) = distance_pairs(d);
    let mut violations = Vec::new();
    for (pairs, distance, required) in [(d1, 1u8, f.j()), (d2, 2u8, f.k())] {
        for (x, y) in pairs {
            let actual = f.get(x).abs_diff(f.get(y));
            if actual < required {
                violations.push(Violation { x, y, distance, required, actual });
            }
        }
    }
    violations.sort_unstable_by_key(|v| (v.distance, v.x, v.y));
    Ok(violations)
}

/// Labeling text parse failure.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LabelParseError {
    #[error("line {line}, col {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: vertex {vertex} labeled twice")]
    DuplicateVertex { line: usize, vertex: Vertex },
}

/// Parses the labeling text format: lines `v: label`, any order, `#`
/// comments allowed. Returns sparse assignments; binding them to a digraph
/// (and detecting missing vertices) is `Labeling::from_assignments`.
pub fn parse_labeling(input: &[u8]) -> Result<Vec<(Vertex, u32)>, LabelParseError> {
    if let Some(pos) = input.iter().position(|b| !b.is_ascii()) {
        let prefix = &input[..pos];
        let line = prefix.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = pos - prefix.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1) + 1;
        return Err(LabelParseError::Syntax {
            line,
            col,
            msg: "non-ASCII byte".to_string(),
        });
    }
    let text = std::str::from_utf8(input).expect("ascii is valid utf-8");
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let data = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if data.trim().is_empty() {
            continue;
        }
        let colon = data.find(':').ok_or_else(|| LabelParseError::Syntax {
            line: line_no,
            col: data.len(),
            msg: "expected `vertex: label`".to_string(),
        })?;
        let (vtx, rest) = data.split_at(colon);
        let vertex: Vertex = vtx.trim().parse().map_err(|_| LabelParseError::Syntax {
            line: line_no,
            col: 1,
            msg: format!("expected vertex id, got `{}`", vtx.trim()),
        })?;
        let label_str = rest[1..].trim();
        let label: u32 = label_str.parse().map_err(|_| LabelParseError::Syntax {
            line: line_no,
            col: colon + 2,
            msg: format!("expected nonnegative label, got `{label_str}`"),
        })?;
        if !seen.insert(vertex) {
            return Err(LabelParseError::DuplicateVertex { line: line_no, vertex });
        }
        out.push((vertex, label));
    }
    Ok(out)
}
