//! Small abstract multigraphs whose edges stand for walk segments.
//!
//! Cycles of such a skeleton, read back through the segments, are closed
//! walks of the star-graph; the extraction engines look among them for a
//! pair crossing exactly once.

use crate::chord::transversal_count;
use crate::star::StarGraph;
use crate::walk::{ClosedWalk, Step};

/// A sequence of edge traversals; `(e, true)` runs from the first endpoint
/// of `e` to the second.
pub type Route = Vec<(usize, bool)>;

fn incidence(n: usize, edges: &[(usize, usize)]) -> Vec<Vec<(usize, usize, bool)>> {
    let mut inc = vec![Vec::new(); n];
    for (e, &(a, b)) in edges.iter().enumerate() {
        if a != b {
            inc[a].push((e, b, true));
            inc[b].push((e, a, false));
        }
    }
    inc
}

/// Every simple cycle once, loops included. Cycles are listed by their
/// least vertex, and each is traversed so that its first edge has the
/// smaller id of the two edges at that vertex. Fails with the number of
/// cycles found once more than `cap` exist.
pub(crate) fn simple_cycles(n: usize, edges: &[(usize, usize)], cap: usize) -> Result<Vec<Route>, usize> {
    struct Search<'a> {
        inc: &'a [Vec<(usize, usize, bool)>],
        on_path: Vec<bool>,
        route: Route,
        out: Vec<Route>,
        cap: usize,
    }
    fn dfs(s: &mut Search, start: usize, x: usize) -> Result<(), usize> {
        for &(e, y, fwd) in &s.inc[x] {
            if y == start {
                if let Some(&(first, _)) = s.route.first() {
                    if first < e {
                        let mut r = s.route.clone();
                        r.push((e, fwd));
                        s.out.push(r);
                        if s.out.len() > s.cap {
                            return Err(s.out.len());
                        }
                    }
                }
            } else if y > start && !s.on_path[y] {
                s.on_path[y] = true;
                s.route.push((e, fwd));
                dfs(s, start, y)?;
                s.route.pop();
                s.on_path[y] = false;
            }
        }
        Ok(())
    }
    let inc = incidence(n, edges);
    let mut s = Search { inc: &inc, on_path: vec![false; n], route: Vec::new(), out: Vec::new(), cap };
    for start in 0..n {
        for (e, &(a, b)) in edges.iter().enumerate() {
            if a == start && b == start {
                s.out.push(vec![(e, true)]);
                if s.out.len() > cap {
                    return Err(s.out.len());
                }
            }
        }
        s.on_path[start] = true;
        dfs(&mut s, start, start)?;
        s.on_path[start] = false;
    }
    Ok(s.out)
}

/// Every simple path from `a` to `b`, `a != b`, in depth-first order.
pub(crate) fn simple_paths(n: usize, edges: &[(usize, usize)], a: usize, b: usize) -> Vec<Route> {
    fn dfs(
        inc: &[Vec<(usize, usize, bool)>],
        x: usize,
        b: usize,
        on_path: &mut Vec<bool>,
        route: &mut Route,
        out: &mut Vec<Route>,
    ) {
        for &(e, y, fwd) in &inc[x] {
            if on_path[y] {
                continue;
            }
            route.push((e, fwd));
            if y == b {
                out.push(route.clone());
            } else {
                on_path[y] = true;
                dfs(inc, y, b, on_path, route, out);
                on_path[y] = false;
            }
            route.pop();
        }
    }
    let inc = incidence(n, edges);
    let mut on_path = vec![false; n];
    on_path[a] = true;
    let mut out = Vec::new();
    dfs(&inc, a, b, &mut on_path, &mut Vec::new(), &mut out);
    out
}

pub(crate) fn reversed_steps(steps: &[Step]) -> Vec<Step> {
    steps.iter().rev().map(|s| s.reversed()).collect()
}

/// A walk segment joining two skeleton nodes.
#[derive(Debug, Clone)]
pub(crate) struct Segment {
    pub from: usize,
    pub to: usize,
    pub steps: Vec<Step>,
}

pub(crate) fn realize(segments: &[Segment], route: &Route) -> Vec<Step> {
    let mut out = Vec::new();
    for &(e, fwd) in route {
        if fwd {
            out.extend_from_slice(&segments[e].steps);
        } else {
            out.extend(reversed_steps(&segments[e].steps));
        }
    }
    out
}

/// First pair `i < j` of edge-disjoint walks crossing exactly once.
pub(crate) fn first_crossing_pair(g: &StarGraph, walks: &[ClosedWalk]) -> Option<(ClosedWalk, ClosedWalk)> {
    for i in 0..walks.len() {
        for j in i + 1..walks.len() {
            if transversal_count(g, &walks[i], &walks[j]) == Ok(1) {
                return Some((walks[i].clone(), walks[j].clone()));
            }
        }
    }
    None
}

/// Searches the cycles of the skeleton spanned by `segments` on `nodes`
/// nodes for a pair crossing exactly once.
pub(crate) fn search(g: &StarGraph, nodes: usize, segments: &[Segment]) -> Option<(ClosedWalk, ClosedWalk)> {
    let ends: Vec<(usize, usize)> = segments.iter().map(|s| (s.from, s.to)).collect();
    let cycles = simple_cycles(nodes, &ends, usize::MAX).ok()?;
    let walks: Vec<ClosedWalk> = cycles
        .iter()
        .filter_map(|r| ClosedWalk::new(g, realize(segments, r)).ok())
        .collect();
    first_crossing_pair(g, &walks)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycles_of_small_multigraphs() {
        // Triangle with one doubled side and a loop.
        let edges = [(0, 1), (1, 2), (2, 0), (1, 0), (2, 2)];
        let cycles = simple_cycles(3, &edges, 100).unwrap();
        assert_eq!(cycles.len(), 4);
        assert!(cycles.contains(&vec![(0, true), (3, true)]));
        assert!(cycles.contains(&vec![(4, true)]));
        assert_eq!(simple_cycles(3, &edges, 2), Err(3));
    }

    #[test]
    fn complete_graphs() {
        let k5: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
        assert_eq!(simple_cycles(5, &k5, 1000).unwrap().len(), 37);
        assert_eq!(simple_paths(5, &k5, 0, 1).len(), 16);
        let k33: Vec<(usize, usize)> = (0..3).flat_map(|a| (3..6).map(move |b| (a, b))).collect();
        assert_eq!(simple_cycles(6, &k33, 1000).unwrap().len(), 15);
    }
}
