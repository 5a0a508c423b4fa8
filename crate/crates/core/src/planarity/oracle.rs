//! Brute-force search for K5 or K3,3 topological minors in small graphs.
//! Shares no code with the embedding algorithm.

use std::collections::BTreeSet;

use super::kuratowski::KuratowskiKind;
use crate::graph::OrdinaryGraph;

/// Classifies an edge set that suppresses to K5 or K3,3.
fn suppresses_to(n: usize, edges: &[(usize, usize)]) -> Option<KuratowskiKind> {
    let mut adj = vec![Vec::new(); n];
    for (i, &(a, b)) in edges.iter().enumerate() {
        adj[a].push((b, i));
        adj[b].push((a, i));
    }
    if adj.iter().any(|l| l.len() == 1) {
        return None;
    }
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();
    let mut used = vec![false; edges.len()];
    let mut pairs = BTreeSet::new();
    let mut walked = 0;
    for &b in &branch {
        for &(first, e0) in &adj[b] {
            if used[e0] {
                continue;
            }
            used[e0] = true;
            walked += 1;
            let (mut at, mut via) = (first, e0);
            while adj[at].len() == 2 {
                let &(next, e) = adj[at].iter().find(|&&(_, e)| e != via)?;
                used[e] = true;
                walked += 1;
                at = next;
                via = e;
            }
            if at == b || !pairs.insert((b.min(at), b.max(at))) {
                return None;
            }
        }
    }
    if walked != edges.len() {
        return None;
    }
    let deg = |v: usize| pairs.iter().filter(|p| p.0 == v || p.1 == v).count();
    if branch.len() == 5 && pairs.len() == 10 && branch.iter().all(|&v| deg(v) == 4) {
        return Some(KuratowskiKind::K5);
    }
    if branch.len() == 6 && pairs.len() == 9 && branch.iter().all(|&v| deg(v) == 3) {
        // Bipartite with sides of three.
        let b0 = branch[0];
        let side: BTreeSet<usize> = branch
            .iter()
            .copied()
            .filter(|&v| v == b0 || !pairs.contains(&(b0.min(v), b0.max(v))))
            .collect();
        if side.len() == 3 && pairs.iter().all(|&(a, b)| side.contains(&a) != side.contains(&b)) {
            return Some(KuratowskiKind::K33);
        }
    }
    None
}

fn combinations(m: usize, k: usize, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, m: usize, k: usize, acc: &mut Vec<usize>, f: &mut impl FnMut(&[usize]) -> bool) -> bool {
        if acc.len() == k {
            return f(acc);
        }
        for i in start..m {
            if m - i < k - acc.len() {
                break;
            }
            acc.push(i);
            if rec(i + 1, m, k, acc, f) {
                return true;
            }
            acc.pop();
        }
        false
    }
    rec(0, m, k, &mut Vec::new(), f)
}

/// A K5 or K3,3 topological minor, if any. Exponential; meant for graphs
/// with at most a dozen or so distinct edges.
pub fn find_topological_minor(g: &OrdinaryGraph) -> Option<KuratowskiKind> {
    let mut simple = BTreeSet::new();
    for &(a, b) in g.edge_list() {
        if a != b {
            simple.insert((a.min(b), a.max(b)));
        }
    }
    let edges: Vec<(usize, usize)> = simple.into_iter().collect();
    let used_vertices: BTreeSet<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    let n = used_vertices.len();
    if n < 5 {
        return None;
    }
    // A subdivision with s subdividing vertices has 10 + s or 9 + s edges.
    let max_size = (10 + (n - 5)).min(edges.len());
    let mut found = None;
    for size in 9..=max_size {
        combinations(edges.len(), size, &mut |idx| {
            let sub: Vec<(usize, usize)> = idx.iter().map(|&i| edges[i]).collect();
            found = suppresses_to(g.vertex_count(), &sub);
            found.is_some()
        });
        if found.is_some() {
            break;
        }
    }
    found
}

pub fn oracle_is_planar(g: &OrdinaryGraph) -> bool {
    find_topological_minor(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recognizes_the_two_graphs() {
        let mut k5 = OrdinaryGraph::new(5);
        for a in 0..5 {
            for b in a + 1..5 {
                k5.add_edge(a, b);
            }
        }
        assert_eq!(find_topological_minor(&k5), Some(KuratowskiKind::K5));
        let mut k33 = OrdinaryGraph::new(6);
        for a in 0..3 {
            for b in 3..6 {
                k33.add_edge(a, b);
            }
        }
        assert_eq!(find_topological_minor(&k33), Some(KuratowskiKind::K33));
        let mut k4 = OrdinaryGraph::new(4);
        for a in 0..4 {
            for b in a + 1..4 {
                k4.add_edge(a, b);
            }
        }
        assert_eq!(find_topological_minor(&k4), None);
    }

    #[test]
    fn k5_minus_edge_is_planar() {
        let mut g = OrdinaryGraph::new(5);
        for a in 0..5 {
            for b in a + 1..5 {
                if (a, b) != (0, 1) {
                    g.add_edge(a, b);
                }
            }
        }
        assert!(oracle_is_planar(&g));
    }
}
