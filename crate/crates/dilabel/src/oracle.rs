//! Exact minimum-span solver for small digraphs: iterative deepening on the
//! candidate span with a backtracking feasibility search per span. Ground
//! truth for everything else in the crate.

use thiserror::Error;

use crate::classify::{components, distance_pairs};
use crate::digraph::{Digraph, Vertex};
use crate::labeling::Labeling;
use crate::lambda::{LambdaResult, LambdaValue, Method};

/// Guards for the exponential search.
#[derive(Debug, Clone, Copy)]
pub struct SolverLimits {
    /// Refuse digraphs with more vertices than this.
    pub max_n: usize,
    /// Optional budget on label-assignment attempts across all span probes.
    pub max_nodes: Option<u64>,
}

pub const DEFAULT_MAX_N: usize = 12;

impl Default for SolverLimits {
    fn default() -> Self {
        SolverLimits { max_n: DEFAULT_MAX_N, max_nodes: None }
    }
}

impl SolverLimits {
    /// Limits that accept any vertex count (the node budget still applies).
    pub fn unbounded() -> Self {
        SolverLimits { max_n: usize::MAX, max_nodes: None }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolverError {
    #[error("digraph has {n} vertices, oracle limit is {max_n}")]
    TooLarge { n: usize, max_n: usize },
    #[error("parameters must satisfy j >= k >= 1, got j={j}, k={k}")]
    BadParams { j: u32, k: u32 },
}

/// Pairwise separation requirements, symmetric in the two vertices.
struct Constraints {
    /// `required[u * n + v]`: minimum |f(u) - f(v)| (0 when unconstrained).
    required: Vec<u32>,
    n: usize,
}

impl Constraints {
    fn build(d: &Digraph, j: u32, k: u32) -> Self {
        let n = d.n();
        let mut required = vec![0u32; n * n];
        let (d1, d2) = distance_pairs(d);
        // Distance 2 first so that distance 1 (j >= k) wins on overlap of
        // the two directions.
        for (x, y) in d2 {
            required[x * n + y] = required[x * n + y].max(k);
            required[y * n + x] = required[y * n + x].max(k);
        }
        for (x, y) in d1 {
            required[x * n + y] = required[x * n + y].max(j);
            required[y * n + x] = required[y * n + x].max(j);
        }
        Constraints { required, n }
    }

    fn required(&self, u: Vertex, v: Vertex) -> u32 {
        self.required[u * self.n + v]
    }
}

struct Search<'a> {
    constraints: &'a Constraints,
    /// Vertices in assignment order (decreasing degree, ties by id).
    order: &'a [Vertex],
    labels: Vec<u32>,
    nodes: u64,
    budget: Option<u64>,
}

enum Outcome {
    Feasible,
    Infeasible,
    BudgetExceeded,
}

impl<'a> Search<'a> {
    /// Tries to label `order[pos..]` with labels in `0..=span`.
    fn assign(&mut self, pos: usize, span: u32) -> Outcome {
        if pos == self.order.len() {
            return Outcome::Feasible;
        }
        let v = self.order[pos];
        // Reflection f -> span - f maps valid labelings to valid labelings,
        // so the first vertex only needs labels up to span/2.
        let max_label = if pos == 0 { span / 2 } else { span };
        'labels: for label in 0..=max_label {
            if let Some(budget) = self.budget {
                if self.nodes >= budget {
                    return Outcome::BudgetExceeded;
                }
            }
            self.nodes += 1;
            for &u in &self.order[..pos] {
                let req = self.constraints.required(u, v);
                if req > 0 && self.labels[u].abs_diff(label) < req {
                    continue 'labels;
                }
            }
            self.labels[v] = label;
            match self.assign(pos + 1, span) {
                Outcome::Infeasible => {}
                done => return done,
            }
        }
        Outcome::Infeasible
    }
}

/// Computes the exact minimum span of `d`, searching spans upward from the
/// trivial lower bound. On budget exhaustion returns the interval of spans
/// not yet excluded, with `Method::OraclePartial` and no witness.
pub fn exact_lambda(
    d: &Digraph,
    j: u32,
    k: u32,
    limits: &SolverLimits,
) -> Result<LambdaResult, SolverError> {
    if k == 0 || j < k {
        return Err(SolverError::BadParams { j, k });
    }
    if d.n() > limits.max_n {
        return Err(SolverError::TooLarge { n: d.n(), max_n: limits.max_n });
    }
    if d.m() == 0 {
        let witness = Labeling::new(vec![0; d.n()], j, k).expect("params validated");
        return Ok(LambdaResult::exact(0, Method::Oracle, Some(witness)));
    }

    let n = d.n();
    let constraints = Constraints::build(d, j, k);
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_unstable_by_key(|&v| (std::cmp::Reverse(d.degree(v)), v));

    // Labeling vertex i with i*j is always valid, so the search terminates.
    let upper = j.saturating_mul(n as u32 - 1);
    let mut nodes_used = 0u64;
    let mut span = j;
    loop {
        let mut search = Search {
            constraints: &constraints,
            order: &order,
            labels: vec![0; n],
            nodes: nodes_used,
            budget: limits.max_nodes,
        };
        let outcome = search.assign(0, span);
        nodes_used = search.nodes;
        match outcome {
            Outcome::Feasible => {
                let witness = Labeling::new(search.labels, j, k).expect("params validated");
                debug_assert_eq!(witness.span(), span);
                return Ok(LambdaResult::exact(span, Method::Oracle, Some(witness)));
            }
            Outcome::Infeasible => {
                span += 1;
                debug_assert!(span <= upper, "span {span} exceeded trivial upper bound {upper}");
            }
            Outcome::BudgetExceeded => {
                return Ok(LambdaResult {
                    value: LambdaValue::Interval { lo: span, hi: upper },
                    method: Method::OraclePartial,
                    witness: None,
                });
            }
        }
    }
}

/// Solves each weak component independently and combines by maximum. The
/// witness is assembled per component when every component is exact.
pub fn exact_lambda_components(
    d: &Digraph,
    j: u32,
    k: u32,
    limits: &SolverLimits,
) -> Result<LambdaResult, SolverError> {
    if k == 0 || j < k {
        return Err(SolverError::BadParams { j, k });
    }
    if d.n() == 0 {
        let witness = Labeling::new(Vec::new(), j, k).expect("params validated");
        return Ok(LambdaResult::exact(0, Method::Oracle, Some(witness)));
    }
    let comps = components(d);
    // Guard on the largest component, not the whole digraph: the search
    // space factors over components.
    if let Some(worst) = comps.iter().map(|c| c.digraph.n()).max() {
        if worst > limits.max_n {
            return Err(SolverError::TooLarge { n: worst, max_n: limits.max_n });
        }
    }

    let mut labels = vec![0u32; d.n()];
    let mut lo = 0u32;
    let mut hi = 0u32;
    let mut all_exact = true;
    let mut any_partial = false;
    for comp in &comps {
        let result = exact_lambda(&comp.digraph, j, k, limits)?;
        lo = lo.max(result.value.lo());
        hi = hi.max(result.value.hi());
        match (&result.value, &result.witness) {
            (LambdaValue::Exact(_), Some(w)) => {
                for (new, &orig) in comp.to_original.iter().enumerate() {
                    labels[orig] = w.get(new);
                }
            }
            _ => {
                all_exact = false;
                any_partial = true;
            }
        }
    }
    if all_exact {
        let witness = Labeling::new(labels, j, k).expect("params validated");
        debug_assert_eq!(witness.span(), hi);
        Ok(LambdaResult::exact(hi, Method::Oracle, Some(witness)))
    } else {
        Ok(LambdaResult {
            value: LambdaValue::Interval { lo, hi }.simplified(),
            method: if any_partial { Method::OraclePartial } else { Method::Oracle },
            witness: None,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dicycle, dipath};
    use crate::labeling::verify;

    fn lambda(d: &Digraph, j: u32, k: u32) -> u32 {
        exact_lambda(d, j, k, &SolverLimits::default())
            .unwrap()
            .value
            .exact()
            .unwrap()
    }

    #[test]
    fn p5_with_j2_k1() {
        assert_eq!(lambda(&dipath(5), 2, 1), 4);
    }

    #[test]
    fn edgeless_is_zero() {
        assert_eq!(lambda(&Digraph::edgeless(4), 3, 2), 0);
    }

    #[test]
    fn c4_with_j3_k2() {
        assert_eq!(lambda(&dicycle(4), 3, 2), 7);
    }

    #[test]
    fn witness_verifies_with_matching_span() {
        let d = dicycle(5);
        let result = exact_lambda(&d, 3, 2, &SolverLimits::default()).unwrap();
        let witness = result.witness.unwrap();
        assert!(verify(&d, &witness).unwrap().is_empty());
        assert_eq!(witness.span(), result.value.exact().unwrap());
    }

    #[test]
    fn union_takes_component_maximum() {
        // Dipath on 3 vertices plus a lone edge.
        let d = Digraph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let whole = exact_lambda(&d, 2, 1, &SolverLimits::default()).unwrap();
        let by_comp = exact_lambda_components(&d, 2, 1, &SolverLimits::default()).unwrap();
        assert_eq!(whole.value.exact(), Some(3));
        assert_eq!(by_comp.value.exact(), Some(3));
        let witness = by_comp.witness.unwrap();
        assert!(verify(&d, &witness).unwrap().is_empty());
        assert_eq!(witness.span(), 3);
    }

    #[test]
    fn two_disjoint_edges() {
        let d = Digraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let result = exact_lambda_components(&d, 4, 1, &SolverLimits::default()).unwrap();
        assert_eq!(result.value.exact(), Some(4));
    }

    #[test]
    fn empty_digraph() {
        let d = Digraph::edgeless(0);
        let result = exact_lambda_components(&d, 2, 1, &SolverLimits::default()).unwrap();
        assert_eq!(result.value.exact(), Some(0));
    }

    #[test]
    fn budget_exhaustion_returns_interval() {
        let d = dicycle(5);
        let limits = SolverLimits { max_n: 12, max_nodes: Some(1) };
        let result = exact_lambda(&d, 2, 1, &limits).unwrap();
        assert_eq!(result.method, Method::OraclePartial);
        assert_eq!(result.value, LambdaValue::Interval { lo: 2, hi: 8 });
        assert!(result.witness.is_none());
    }

    #[test]
    fn vertex_guard() {
        let d = Digraph::edgeless(13);
        // Edgeless short-circuits before the guard only when it passes the
        // guard; build one with edges.
        let d2 = dipath(13);
        assert!(matches!(
            exact_lambda(&d2, 2, 1, &SolverLimits::default()),
            Err(SolverError::TooLarge { n: 13, max_n: 12 })
        ));
        assert!(matches!(
            exact_lambda(&d, 2, 1, &SolverLimits::default()),
            Err(SolverError::TooLarge { .. })
        ));
        assert!(exact_lambda(&d2, 2, 1, &SolverLimits::unbounded()).is_ok());
    }

    #[test]
    fn rejects_bad_params() {
        assert!(matches!(
            exact_lambda(&dipath(2), 1, 2, &SolverLimits::default()),
            Err(SolverError::BadParams { j: 1, k: 2 })
        ));
    }
}
