//! Built-in digraphs: dipaths, dicycles, and the two reference ditrees that
//! separate span j+1 from span j+2.

use crate::digraph::Digraph;

/// The dipath on `n` vertices: `0 -> 1 -> ... -> n-1` (n-1 edges).
pub fn dipath(n: usize) -> Digraph {
    Digraph::new(n, (1..n).map(|v| (v - 1, v))).expect("dipath is strongly simple")
}

/// The dicycle on `n >= 3` vertices: `0 -> 1 -> ... -> n-1 -> 0`.
pub fn dicycle(n: usize) -> Digraph {
    assert!(n >= 3, "a strongly simple dicycle needs at least 3 vertices");
    Digraph::new(n, (0..n).map(|v| (v, (v + 1) % n))).expect("dicycle is strongly simple")
}

/// The 8-vertex ditree with edges 0->1, 1->2, 2->3, 4->3, 4->5, 5->6, 6->7.
///
/// Longest dipath has length 3, yet no span-(j+1) L(j,1)-labeling exists for
/// j >= 2; the companion example with span j+1 is `t1()`.
pub fn t2() -> Digraph {
    Digraph::new(8, [(0, 1), (1, 2), (2, 3), (4, 3), (4, 5), (5, 6), (6, 7)])
        .expect("t2 is strongly simple")
}

/// The 4-vertex dipath, the smallest ditree of dipath length 3 with a
/// span-(j+1) L(j,1)-labeling.
pub fn t1() -> Digraph {
    dipath(4)
}

/// Resolves a `fixture:` pseudo-path: `p<N>`, `c<N>` (N >= 3), `t1`, `t2`.
pub fn fixture(name: &str) -> Option<Digraph> {
    match name {
        "t1" => return Some(t1()),
        "t2" => return Some(t2()),
        _ => {}
    }
    if let Some(num) = name.strip_prefix('p') {
        let n: usize = num.parse().ok()?;
        return (n >= 1).then(|| dipath(n));
    }
    if let Some(num) = name.strip_prefix('c') {
        let n: usize = num.parse().ok()?;
        return (n >= 3).then(|| dicycle(n));
    }
    None
}
