//! Oriented rotation systems on ordinary multigraphs and face tracing.

use thiserror::Error;

use crate::graph::OrdinaryGraph;

/// End `end` of edge `edge`; as a dart it leaves from that end.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeEnd {
    pub edge: usize,
    pub end: usize,
}

impl EdgeEnd {
    pub fn twin(self) -> EdgeEnd {
        EdgeEnd { edge: self.edge, end: 1 - self.end }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationSystem {
    pub rotation: Vec<Vec<EdgeEnd>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EmbeddingError {
    #[error("rotation system has {0} vertices, graph has {1}")]
    VertexCount(usize, usize),
    #[error("edge-end {0:?} is listed at vertex {1} but does not belong there")]
    Misplaced(EdgeEnd, usize),
    #[error("edge-end {0:?} is listed more than once")]
    Repeated(EdgeEnd),
    #[error("edge-end {0:?} is missing")]
    Missing(EdgeEnd),
}

/// Successor lookup: `succ[e][k]` is the edge-end after `(e, k)` at its vertex.
fn successors(g: &OrdinaryGraph, rs: &RotationSystem) -> Result<Vec<[EdgeEnd; 2]>, EmbeddingError> {
    if rs.rotation.len() != g.vertex_count() {
        return Err(EmbeddingError::VertexCount(rs.rotation.len(), g.vertex_count()));
    }
    let unset = EdgeEnd { edge: usize::MAX, end: 0 };
    let mut succ = vec![[unset; 2]; g.edge_count()];
    for (v, rot) in rs.rotation.iter().enumerate() {
        for (i, &x) in rot.iter().enumerate() {
            if x.edge >= g.edge_count() || x.end > 1 || g.end_vertex(x.edge, x.end) != v {
                return Err(EmbeddingError::Misplaced(x, v));
            }
            if succ[x.edge][x.end] != unset {
                return Err(EmbeddingError::Repeated(x));
            }
            succ[x.edge][x.end] = rot[(i + 1) % rot.len()];
        }
    }
    for (edge, s) in succ.iter().enumerate() {
        for end in 0..2 {
            if s[end] == unset {
                return Err(EmbeddingError::Missing(EdgeEnd { edge, end }));
            }
        }
    }
    Ok(succ)
}

/// Face orbits: the dart after `d` is the successor of `d`'s twin.
pub fn faces(g: &OrdinaryGraph, rs: &RotationSystem) -> Result<Vec<Vec<EdgeEnd>>, EmbeddingError> {
    let succ = successors(g, rs)?;
    let mut seen = vec![[false; 2]; g.edge_count()];
    let mut out = Vec::new();
    for e in 0..g.edge_count() {
        for k in 0..2 {
            if seen[e][k] {
                continue;
            }
            let mut face = Vec::new();
            let mut d = EdgeEnd { edge: e, end: k };
            while !seen[d.edge][d.end] {
                seen[d.edge][d.end] = true;
                face.push(d);
                let t = d.twin();
                d = succ[t.edge][t.end];
            }
            out.push(face);
        }
    }
    Ok(out)
}

/// Genus-0 check: `V - E + F = 2` on every connected component.
pub fn verify_embedding(g: &OrdinaryGraph, rs: &RotationSystem) -> Result<bool, EmbeddingError> {
    let fs = faces(g, rs)?;
    let comp = g.components();
    let k = g.component_count();
    let mut chi = vec![0i64; k];
    for v in 0..g.vertex_count() {
        chi[comp[v]] += 1;
    }
    for &(a, _) in g.edge_list() {
        chi[comp[a]] -= 1;
    }
    let mut has_face = vec![false; k];
    for f in &fs {
        let c = comp[g.end_vertex(f[0].edge, f[0].end)];
        chi[c] += 1;
        has_face[c] = true;
    }
    for c in 0..k {
        if !has_face[c] {
            chi[c] += 1;
        }
    }
    Ok(chi.iter().all(|&x| x == 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ends(list: &[(usize, usize)]) -> Vec<EdgeEnd> {
        list.iter().map(|&(edge, end)| EdgeEnd { edge, end }).collect()
    }

    #[test]
    fn single_loop() {
        let g = OrdinaryGraph::from_edges(1, &[(0, 0)]);
        let rs = RotationSystem { rotation: vec![ends(&[(0, 0), (0, 1)])] };
        assert_eq!(faces(&g, &rs).unwrap().len(), 2);
        assert_eq!(verify_embedding(&g, &rs), Ok(true));
    }

    #[test]
    fn trees_are_always_planar() {
        let g = OrdinaryGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (3, 4)]);
        for rot in [[(0, 0), (1, 0), (2, 0)], [(2, 0), (1, 0), (0, 0)]] {
            let rs = RotationSystem {
                rotation: vec![ends(&rot), ends(&[(0, 1)]), ends(&[(1, 1)]), ends(&[(2, 1), (3, 0)]), ends(&[(3, 1)])],
            };
            assert_eq!(faces(&g, &rs).unwrap().len(), 1);
            assert_eq!(verify_embedding(&g, &rs), Ok(true));
        }
    }

    #[test]
    fn isolated_vertices_count_one_face() {
        let g = OrdinaryGraph::new(3);
        let rs = RotationSystem { rotation: vec![vec![]; 3] };
        assert_eq!(verify_embedding(&g, &rs), Ok(true));
    }

    fn k4() -> OrdinaryGraph {
        OrdinaryGraph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    }

    fn permutations(items: &[EdgeEnd]) -> Vec<Vec<EdgeEnd>> {
        // Cyclic orders of three items: fix the first.
        vec![items.to_vec(), vec![items[0], items[2], items[1]]]
    }

    #[test]
    fn k4_has_both_planar_and_toroidal_rotations() {
        let g = k4();
        let inc = g.incidence();
        let options: Vec<Vec<Vec<EdgeEnd>>> = inc
            .iter()
            .map(|l| permutations(&l.iter().map(|&(edge, end)| EdgeEnd { edge, end }).collect::<Vec<_>>()))
            .collect();
        let mut planar = 0;
        let mut two_faces = 0;
        for mask in 0..16usize {
            let rotation = (0..4).map(|v| options[v][(mask >> v) & 1].clone()).collect();
            let rs = RotationSystem { rotation };
            let f = faces(&g, &rs).unwrap().len();
            if f == 2 {
                two_faces += 1;
                assert_eq!(verify_embedding(&g, &rs), Ok(false));
            }
            if verify_embedding(&g, &rs).unwrap() {
                assert_eq!(f, 4);
                planar += 1;
            }
        }
        assert_eq!(planar, 2);
        assert!(two_faces > 0);
    }

    #[test]
    fn structural_mismatch_is_an_error() {
        let g = OrdinaryGraph::from_edges(2, &[(0, 1)]);
        let rs = RotationSystem { rotation: vec![ends(&[(0, 0)]), vec![]] };
        assert_eq!(verify_embedding(&g, &rs), Err(EmbeddingError::Missing(EdgeEnd { edge: 0, end: 1 })));
        let rs = RotationSystem { rotation: vec![ends(&[(0, 1)]), ends(&[(0, 0)])] };
        assert!(matches!(verify_embedding(&g, &rs), Err(EmbeddingError::Misplaced(..))));
        let rs = RotationSystem { rotation: vec![ends(&[(0, 0), (0, 0)]), ends(&[(0, 1)])] };
        assert!(matches!(verify_embedding(&g, &rs), Err(EmbeddingError::Repeated(..))));
    }
}
