//! Structural analysis: bipartiteness, acyclicity, longest dipath length,
//! sources/sinks, weak components, ditree detection.

use std::collections::VecDeque;

use crate::digraph::{induced_subdigraph, Digraph, Vertex};

/// Length of a longest directed simple path, exact or a lower bound.
///
/// Exact whenever the digraph is acyclic; for cyclic digraphs the search is
/// depth-limited to `cap`, so values `>= cap` collapse to `AtLeast(cap)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LongestDipath {
    Exact(u32),
    AtLeast(u32),
}

impl LongestDipath {
    /// The proven lower bound on the longest dipath length.
    pub fn lower_bound(self) -> u32 {
        match self {
            LongestDipath::Exact(x) | LongestDipath::AtLeast(x) => x,
        }
    }

    pub fn exact(self) -> Option<u32> {
        match self {
            LongestDipath::Exact(x) => Some(x),
            LongestDipath::AtLeast(_) => None,
        }
    }
}

impl std::fmt::Display for LongestDipath {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LongestDipath::Exact(x) => write!(f, "{x}"),
            LongestDipath::AtLeast(x) => write!(f, ">={x}"),
        }
    }
}

/// Per-component structural facts, enough to pick the applicable theorem.
#[derive(Debug, Clone)]
pub struct ComponentInfo {
    /// Original vertex ids, sorted.
    pub vertices: Vec<Vertex>,
    pub edge_count: usize,
    pub bipartite: bool,
    pub longest_dipath: LongestDipath,
    pub is_ditree: bool,
    /// True when every vertex of the component is a source or a sink.
    pub all_source_or_sink: bool,
}

/// Structural facts of a digraph that gate theorem applicability.
#[derive(Debug, Clone)]
pub struct ClassReport {
    pub n: usize,
    pub m: usize,
    pub strongly_simple: bool,
    /// A bipartition of the underlying graph, when one exists. The part
    /// containing the lowest vertex id of each component goes to `A`.
    pub bipartition: Option<(Vec<Vertex>, Vec<Vertex>)>,
    pub acyclic: bool,
    pub longest_dipath: LongestDipath,
    pub sources: Vec<Vertex>,
    pub sinks: Vec<Vertex>,
    pub is_ditree: bool,
    pub components: Vec<ComponentInfo>,
}

pub const DEFAULT_DIPATH_CAP: u32 = 5;

/// A weak component as an induced subdigraph plus the id remapping table.
#[derive(Debug, Clone)]
pub struct Component {
    pub digraph: Digraph,
    /// `to_original[new_id] = original_id`.
    pub to_original: Vec<Vertex>,
}

/// Weakly-connected components, each an induced subdigraph with dense ids.
pub fn components(d: &Digraph) -> Vec<Component> {
    let n = d.n();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut verts = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in d.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    verts.push(w);
                    queue.push_back(w);
                }
            }
        }
        let (digraph, to_original) = induced_subdigraph(d, &verts);
        out.push(Component { digraph, to_original });
    }
    out
}

/// 2-colors the underlying graph. Returns `(A, B)` with the lowest id of
/// each component in `A`, or `None` if some component has an odd cycle.
fn bipartition(d: &Digraph) -> Option<(Vec<Vertex>, Vec<Vertex>)> {
    let n = d.n();
    let mut color = vec![u8::MAX; n];
    for start in 0..n {
        if color[start] != u8::MAX {
            continue;
        }
        color[start] = 0;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for w in d.neighbors(v) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
    }
    let a = (0..n).filter(|&v| color[v] == 0).collect();
    let b = (0..n).filter(|&v| color[v] == 1).collect();
    Some((a, b))
}

/// Topological order of the vertices, or `None` if the digraph has a dicycle.
fn topological_order(d: &Digraph) -> Option<Vec<Vertex>> {
    let n = d.n();
    let mut indeg: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    let mut queue: VecDeque<Vertex> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in d.out_neighbors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// Longest dipath length (edge count) in an acyclic digraph, by dynamic
/// programming over a topological order.
fn longest_dipath_acyclic(d: &Digraph, order: &[Vertex]) -> u32 {
    let mut best = vec![0u32; d.n()];
    let mut overall = 0;
    for &v in order.iter().rev() {
        for &w in d.out_neighbors(v) {
            best[v] = best[v].max(best[w] + 1);
        }
        overall = overall.max(best[v]);
    }
    overall
}

/// Depth-limited longest simple dipath search for cyclic digraphs. Exact when
/// the true value is below `cap`; otherwise reports `AtLeast(cap)`.
///
/// Worst case `O(n * max_degree^(cap-1))`; acceptable because cyclic inputs
/// of interest are small and acyclic inputs never take this path.
fn longest_dipath_limited(d: &Digraph, cap: u32) -> LongestDipath {
    if cap == 0 {
        return LongestDipath::AtLeast(0);
    }
    let n = d.n();
    let mut on_path = vec![false; n];
    let mut best = 0u32;

    fn dfs(d: &Digraph, v: Vertex, len: u32, cap: u32, on_path: &mut [bool], best: &mut u32) -> bool {
        if len > *best {
            *best = len;
            if *best >= cap {
                return true;
            }
        }
        for &w in d.out_neighbors(v) {
            if !on_path[w] {
                on_path[w] = true;
                let done = dfs(d, w, len + 1, cap, on_path, best);
                on_path[w] = false;
                if done {
                    return true;
                }
            }
        }
        false
    }

    for start in 0..n {
        on_path[start] = true;
        let done = dfs(d, start, 0, cap, &mut on_path, &mut best);
        on_path[start] = false;
        if done {
            return LongestDipath::AtLeast(cap);
        }
    }
    LongestDipath::Exact(best)
}

fn longest_dipath(d: &Digraph, cap: u32) -> (LongestDipath, bool) {
    match topological_order(d) {
        Some(order) => (LongestDipath::Exact(longest_dipath_acyclic(d, &order)), true),
        None => (longest_dipath_limited(d, cap), false),
    }
}

/// Computes the full structural report. Total: never fails on a valid digraph.
pub fn classify(d: &Digraph, cap: u32) -> ClassReport {
    let n = d.n();
    let (global_dipath, acyclic) = longest_dipath(d, cap);
    let comps = components(d);

    let mut infos = Vec::with_capacity(comps.len());
    for comp in &comps {
        let g = &comp.digraph;
        let (ld, _) = longest_dipath(g, cap);
        let all_source_or_sink = (0..g.n()).all(|v| g.is_source(v) || g.is_sink(v));
        infos.push(ComponentInfo {
            vertices: comp.to_original.clone(),
            edge_count: g.m(),
            bipartite: bipartition(g).is_some(),
            longest_dipath: ld,
            is_ditree: g.m() + 1 == g.n(),
            all_source_or_sink,
        });
    }

    ClassReport {
        n,
        m: d.m(),
        strongly_simple: true,
        bipartition: bipartition(d),
        acyclic,
        longest_dipath: global_dipath,
        sources: (0..n).filter(|&v| d.is_source(v)).collect(),
        sinks: (0..n).filter(|&v| d.is_sink(v)).collect(),
        is_ditree: comps.len() == 1 && d.m() + 1 == n,
        components: infos,
    }
}

/// Ordered vertex pairs at directed distance exactly 1 and exactly 2,
/// computed by a depth-2 out-neighborhood sweep from each vertex.
pub fn distance_pairs(d: &Digraph) -> (Vec<(Vertex, Vertex)>, Vec<(Vertex, Vertex)>) {
    let n = d.n();
    let mut d1 = Vec::with_capacity(d.m());
    let mut d2 = Vec::new();
    let mut mark = vec![false; n];
    for x in 0..n {
        for &w in d.out_neighbors(x) {
            mark[w] = true;
            d1.push((x, w));
        }
        let mut seen2 = Vec::new();
        for &w in d.out_neighbors(x) {
            for &z in d.out_neighbors(w) {
                if z != x && !mark[z] {
                    mark[z] = true;
                    seen2.push(z);
                }
            }
        }
        seen2.sort_unstable();
        d2.extend(seen2.iter().map(|&z| (x, z)));
        for &w in d.out_neighbors(x) {
            mark[w] = false;
        }
        for &z in &seen2 {
            mark[z] = false;
        }
    }
    (d1, d2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{dicycle, dipath, t2};

    #[test]
    fn classify_p4() {
        let r = classify(&dipath(4), DEFAULT_DIPATH_CAP);
        assert_eq!(r.longest_dipath, LongestDipath::Exact(3));
        assert!(r.bipartition.is_some());
        assert!(r.is_ditree);
        assert!(r.acyclic);
        assert_eq!(r.sources, vec![0]);
        assert_eq!(r.sinks, vec![3]);
    }

    #[test]
    fn classify_c3() {
        let r = classify(&dicycle(3), DEFAULT_DIPATH_CAP);
        assert_eq!(r.longest_dipath, LongestDipath::Exact(2));
        assert!(r.bipartition.is_none());
        assert!(!r.acyclic);
        assert!(!r.is_ditree);
    }

    #[test]
    fn classify_c4() {
        let r = classify(&dicycle(4), DEFAULT_DIPATH_CAP);
        assert_eq!(r.longest_dipath, LongestDipath::Exact(3));
        assert!(r.bipartition.is_some());
    }

    #[test]
    fn classify_t2_is_ditree() {
        let r = classify(&t2(), DEFAULT_DIPATH_CAP);
        assert!(r.is_ditree);
        assert_eq!(r.longest_dipath, LongestDipath::Exact(3));
    }

    #[test]
    fn long_cycle_hits_cap() {
        let r = classify(&dicycle(8), DEFAULT_DIPATH_CAP);
        assert_eq!(r.longest_dipath, LongestDipath::AtLeast(5));
        assert!(!r.acyclic);
    }

    #[test]
    fn distance_pairs_p3() {
        let (d1, d2) = distance_pairs(&dipath(3));
        assert_eq!(d1, vec![(0, 1), (1, 2)]);
        assert_eq!(d2, vec![(0, 2)]);
    }

    #[test]
    fn distance_pairs_c3() {
        let (d1, d2) = distance_pairs(&dicycle(3));
        assert_eq!(d1, vec![(0, 1), (1, 2), (2, 0)]);
        assert_eq!(d2, vec![(0, 2), (1, 0), (2, 1)]);
    }

    #[test]
    fn distance_pairs_single_edge() {
        let g = Digraph::new(2, [(0, 1)]).unwrap();
        let (d1, d2) = distance_pairs(&g);
        assert_eq!(d1, vec![(0, 1)]);
        assert!(d2.is_empty());
    }

    #[test]
    fn components_two_disjoint_edges() {
        let g = Digraph::new(4, [(0, 1), (2, 3)]).unwrap();
        let comps = components(&g);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_original, vec![0, 1]);
        assert_eq!(comps[1].to_original, vec![2, 3]);
        assert_eq!(comps[1].digraph.edges(), &[(0, 1)]);
    }

    #[test]
    fn components_c3_is_single() {
        assert_eq!(components(&dicycle(3)).len(), 1);
    }

    #[test]
    fn components_edgeless() {
        let comps = components(&Digraph::edgeless(3));
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.digraph.n() == 1));
    }

    #[test]
    fn sources_and_sinks_isolated_vertex() {
        let g = Digraph::new(3, [(0, 1)]).unwrap();
        let r = classify(&g, DEFAULT_DIPATH_CAP);
        assert_eq!(r.sources, vec![0, 2]);
        assert_eq!(r.sinks, vec![1, 2]);
    }
}
