//! Result type for minimum-span queries: an exact value or an interval,
//! the method that produced it, and an optional witness labeling.

use crate::labeling::Labeling;

/// The minimum span, exactly or bracketed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaValue {
    Exact(u32),
    Interval { lo: u32, hi: u32 },
}

impl LambdaValue {
    pub fn lo(self) -> u32 {
        match self {
            LambdaValue::Exact(x) => x,
            LambdaValue::Interval { lo, .. } => lo,
        }
    }

    pub fn hi(self) -> u32 {
        match self {
            LambdaValue::Exact(x) => x,
            LambdaValue::Interval { hi, .. } => hi,
        }
    }

    pub fn exact(self) -> Option<u32> {
        match self {
            LambdaValue::Exact(x) => Some(x),
            LambdaValue::Interval { .. } => None,
        }
    }

    /// Collapses `Interval { lo, hi }` with `lo == hi` to `Exact`.
    pub fn simplified(self) -> LambdaValue {
        match self {
            LambdaValue::Interval { lo, hi } if lo == hi => LambdaValue::Exact(lo),
            other => other,
        }
    }
}

impl std::fmt::Display for LambdaValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LambdaValue::Exact(x) => write!(f, "{x}"),
            LambdaValue::Interval { lo, hi } => write!(f, "[{lo}, {hi}]"),
        }
    }
}

/// Which closed form produced a value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FormulaKind {
    /// No edge: span 0.
    NoEdge,
    /// Every vertex a source or a sink: span j.
    L1,
    /// Bipartite, longest dipath 2: span j+k.
    L2Bipartite,
    /// Non-bipartite, longest dipath 2: span 2j.
    L2NonBipartite,
    /// Bipartite, longest dipath 3: span in [j+k, j+2k].
    L3Bipartite,
    /// Ditree with a dipath of length 4: span min{2j, j+2k}.
    DitreeMin,
}

impl FormulaKind {
    pub fn name(self) -> &'static str {
        match self {
            FormulaKind::NoEdge => "no-edge",
            FormulaKind::L1 => "l1",
            FormulaKind::L2Bipartite => "l2-bipartite",
            FormulaKind::L2NonBipartite => "l2-nonbipartite",
            FormulaKind::L3Bipartite => "l3-bipartite",
            FormulaKind::DitreeMin => "ditree-min",
        }
    }
}

/// How a `LambdaResult` was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Formula(FormulaKind),
    Dp,
    Oracle,
    /// Oracle stopped by the node budget; value is an interval.
    OraclePartial,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Method::Formula(kind) => write!(f, "formula: {}", kind.name()),
            Method::Dp => write!(f, "dp"),
            Method::Oracle => write!(f, "oracle"),
            Method::OraclePartial => write!(f, "oracle-partial"),
        }
    }
}

/// A minimum-span answer. When a witness is present it is a valid labeling
/// whose span equals `value.hi()`.
#[derive(Debug, Clone)]
pub struct LambdaResult {
    pub value: LambdaValue,
    pub method: Method,
    pub witness: Option<Labeling>,
}

impl LambdaResult {
    pub fn exact(value: u32, method: Method, witness: Option<Labeling>) -> Self {
        LambdaResult {
            value: LambdaValue::Exact(value),
            method,
            witness,
        }
    }
}
