//! Strongly simple digraphs: no loops, no duplicate edges, and never both
//! `u -> v` and `v -> u`. Vertices are dense ids `0..n`.

use std::fmt::Write as _;

use thiserror::Error;

/// Vertex id, always in `0..n` for the owning digraph.
pub type Vertex = usize;

/// An immutable strongly simple digraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    out_adj: Vec<Vec<Vertex>>,
    in_adj: Vec<Vec<Vertex>>,
}

/// Structural violation raised when assembling a digraph from edges.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("duplicate edge {0} -> {1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("anti-parallel pair: both {0} -> {1} and {1} -> {0}")]
    AntiParallel(Vertex, Vertex),
    #[error("vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { id: usize, n: usize },
}

impl Digraph {
    /// Builds a digraph from an edge list, validating all invariants.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (Vertex, Vertex)>) -> Result<Self, GraphError> {
        let mut g = Digraph {
            n,
            edges: Vec::new(),
            out_adj: vec![Vec::new(); n],
            in_adj: vec![Vec::new(); n],
        };
        for (u, v) in edges {
            g.push_edge(u, v)?;
        }
        g.finish();
        Ok(g)
    }

    /// The empty digraph on `n` vertices.
    pub fn edgeless(n: usize) -> Self {
        Digraph::new(n, []).expect("edgeless digraph is always valid")
    }

    fn push_edge(&mut self, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { id: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { id: v, n: self.n });
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.out_adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        if self.out_adj[v].contains(&u) {
            return Err(GraphError::AntiParallel(u, v));
        }
        self.out_adj[u].push(v);
        self.in_adj[v].push(u);
        self.edges.push((u, v));
        Ok(())
    }

    fn finish(&mut self) {
        self.edges.sort_unstable();
        for list in self.out_adj.iter_mut().chain(self.in_adj.iter_mut()) {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn out_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.out_adj[v]
    }

    pub fn in_neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.in_adj[v]
    }

    pub fn out_degree(&self, v: Vertex) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: Vertex) -> usize {
        self.in_adj[v].len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.out_degree(v) + self.in_degree(v)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.out_adj[u].binary_search(&v).is_ok()
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.in_adj[v].is_empty()
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.out_adj[v].is_empty()
    }

    /// Underlying (undirected) neighbors of `v`: out- followed by in-neighbors.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.out_adj[v].iter().chain(self.in_adj[v].iter()).copied()
    }

    /// Serializes to the edge-list text format; `parse_digraph` inverts this.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{} {}", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

/// Edge-list parse failure. Structural violations carry the offending line.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}, col {col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("line {line}: loop at vertex {vertex}")]
    Loop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u} -> {v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: anti-parallel pair: {u} -> {v} but {v} -> {u} is already present")]
    AntiParallel { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: vertex id {id} out of range for n = {n}")]
    VertexOutOfRange { line: usize, id: usize, n: usize },
    #[error("expected {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
}

/// Splits a line into whitespace-separated tokens with their 1-based
/// starting columns. A `#` starts a comment.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let data = match line.find('#') {
        Some(pos) => &line[..pos],
        None => line,
    };
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in data.char_indices() {
        if ch.is_ascii_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &data[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &data[s..]));
    }
    out
}

fn parse_uint(line_no: usize, col: usize, tok: &str, what: &str) -> Result<usize, ParseError> {
    tok.parse::<usize>().map_err(|_| ParseError::Syntax {
        line: line_no,
        col,
        msg: format!("expected {what}, got `{tok}`"),
    })
}

/// Parses the edge-list text format.
///
/// Format: optional `#`-comment lines; first data line `n m`; then exactly
/// `m` lines `u v` meaning a directed edge `u -> v`, 0-based. ASCII only.
pub fn parse_digraph(input: &[u8]) -> Result<Digraph, ParseError> {
    if let Some(pos) = input.iter().position(|b| !b.is_ascii()) {
        let prefix = &input[..pos];
        let line = prefix.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = pos - prefix.iter().rposition(|&b| b == b'\n').map_or(0, |p| p + 1) + 1;
        return Err(ParseError::Syntax {
            line,
            col,
            msg: "non-ASCII byte".to_string(),
        });
    }
    let text = std::str::from_utf8(input).expect("ascii is valid utf-8");

    let mut header: Option<(usize, usize)> = None;
    let mut graph: Option<Digraph> = None;
    let mut found = 0usize;
    let mut last_line = 0usize;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let toks = tokens(raw);
        if toks.is_empty() {
            continue;
        }
        if toks.len() == 1 {
            let (col, tok) = toks[0];
            return Err(ParseError::Syntax {
                line: line_no,
                col: col + tok.len(),
                msg: "expected two integers per line, got one".to_string(),
            });
        }
        if toks.len() > 2 {
            let (col, tok) = toks[2];
            return Err(ParseError::Syntax {
                line: line_no,
                col,
                msg: format!("unexpected extra token `{tok}`"),
            });
        }
        let (c0, t0) = toks[0];
        let (c1, t1) = toks[1];
        match header {
            None => {
                let n = parse_uint(line_no, c0, t0, "vertex count")?;
                let m = parse_uint(line_no, c1, t1, "edge count")?;
                header = Some((n, m));
                graph = Some(Digraph {
                    n,
                    edges: Vec::with_capacity(m),
                    out_adj: vec![Vec::new(); n],
                    in_adj: vec![Vec::new(); n],
                });
            }
            Some((_, m)) => {
                let u = parse_uint(line_no, c0, t0, "vertex id")?;
                let v = parse_uint(line_no, c1, t1, "vertex id")?;
                found += 1;
                if found > m {
                    return Err(ParseError::EdgeCountMismatch {
                        expected: m,
                        found,
                    });
                }
                let g = graph.as_mut().expect("graph allocated with header");
                g.push_edge(u, v).map_err(|e| match e {
                    GraphError::Loop(vertex) => ParseError::Loop { line: line_no, vertex },
                    GraphError::DuplicateEdge(u, v) => ParseError::DuplicateEdge { line: line_no, u, v },
                    GraphError::AntiParallel(u, v) => ParseError::AntiParallel { line: line_no, u, v },
                    GraphError::VertexOutOfRange { id, n } => {
                        ParseError::VertexOutOfRange { line: line_no, id, n }
                    }
                })?;
            }
        }
    }

    let (_, m) = header.ok_or(ParseError::Syntax {
        line: last_line.max(1),
        col: 1,
        msg: "missing `n m` header line".to_string(),
    })?;
    if found != m {
        return Err(ParseError::EdgeCountMismatch {
            expected: m,
            found,
        });
    }
    let mut g = graph.expect("graph allocated with header");
    g.finish();
    Ok(g)
}

/// The subdigraph induced by `keep` (original ids, deduplicated), with vertex
/// ids remapped to `0..keep.len()`. Returns the digraph and the table mapping
/// new ids back to original ids.
pub fn induced_subdigraph(d: &Digraph, keep: &[Vertex]) -> (Digraph, Vec<Vertex>) {
    let mut to_original: Vec<Vertex> = keep.to_vec();
    to_original.sort_unstable();
    to_original.dedup();
    let mut to_new = vec![usize::MAX; d.n()];
    for (new, &orig) in to_original.iter().enumerate() {
        to_new[orig] = new;
    }
    let edges = d
        .edges()
        .iter()
        .filter(|(u, v)| to_new[*u] != usize::MAX && to_new[*v] != usize::MAX)
        .map(|&(u, v)| (to_new[u], to_new[v]));
    let g = Digraph::new(to_original.len(), edges).expect("induced subdigraph of a valid digraph is valid");
    (g, to_original)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_single_edge() {
        let g = parse_digraph(b"2 1\n0 1\n").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn parses_c3() {
        let g = parse_digraph(b"3 3\n0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(g.out_neighbors(2), &[0]);
        assert_eq!(g.in_neighbors(0), &[2]);
    }

    #[test]
    fn comments_and_missing_trailing_newline() {
        let g = parse_digraph(b"# a dipath\n3 2\n0 1 # first\n1 2").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_anti_parallel_pair() {
        let err = parse_digraph(b"2 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(err, ParseError::AntiParallel { line: 3, u: 1, v: 0 });
    }

    #[test]
    fn rejects_loop() {
        let err = parse_digraph(b"2 1\n1 1\n").unwrap_err();
        assert_eq!(err, ParseError::Loop { line: 2, vertex: 1 });
    }

    #[test]
    fn rejects_duplicate_edge() {
        let err = parse_digraph(b"3 2\n0 1\n0 1\n").unwrap_err();
        assert_eq!(err, ParseError::DuplicateEdge { line: 3, u: 0, v: 1 });
    }

    #[test]
    fn rejects_vertex_out_of_range() {
        let err = parse_digraph(b"2 1\n0 2\n").unwrap_err();
        assert_eq!(err, ParseError::VertexOutOfRange { line: 2, id: 2, n: 2 });
    }

    #[test]
    fn rejects_syntax_error_with_position() {
        let err = parse_digraph(b"2 1\n0 x\n").unwrap_err();
        assert_eq!(
            err,
            ParseError::Syntax {
                line: 2,
                col: 3,
                msg: "expected vertex id, got `x`".to_string()
            }
        );
    }

    #[test]
    fn rejects_edge_count_mismatch() {
        assert!(matches!(
            parse_digraph(b"3 2\n0 1\n"),
            Err(ParseError::EdgeCountMismatch { expected: 2, found: 1 })
        ));
        assert!(matches!(
            parse_digraph(b"3 1\n0 1\n1 2\n"),
            Err(ParseError::EdgeCountMismatch { expected: 1, found: 2 })
        ));
    }

    #[test]
    fn rejects_missing_header() {
        assert!(matches!(parse_digraph(b""), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_digraph(b"# only comments\n"), Err(ParseError::Syntax { .. })));
    }

    #[test]
    fn round_trips_through_edge_list() {
        let g = parse_digraph(b"4 3\n2 3\n0 1\n1 2\n").unwrap();
        let again = parse_digraph(g.to_edge_list().as_bytes()).unwrap();
        assert_eq!(g, again);
    }

    #[test]
    fn induced_subdigraph_remaps_ids() {
        let g = Digraph::new(5, [(0, 1), (1, 2), (3, 4)]).unwrap();
        let (sub, back) = induced_subdigraph(&g, &[1, 2, 4]);
        assert_eq!(back, vec![1, 2, 4]);
        assert_eq!(sub.n(), 3);
        assert_eq!(sub.edges(), &[(0, 1)]);
    }
}
