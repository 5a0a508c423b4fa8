//! Ordinary undirected multigraphs (loops and parallel edges allowed).
//!
//! Vertices and edges are dense indices. Edge `e` has ends `0` and `1`,
//! attached to `endpoints(e).0` and `endpoints(e).1` respectively.

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrdinaryGraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl OrdinaryGraph {
    pub fn new(vertex_count: usize) -> Self {
        OrdinaryGraph { vertex_count, edges: Vec::new() }
    }

    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = OrdinaryGraph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn add_vertex(&mut self) -> usize {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> usize {
        assert!(u < self.vertex_count && v < self.vertex_count, "edge endpoint out of range");
        self.edges.push((u, v));
        self.edges.len() - 1
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edge_list(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn end_vertex(&self, e: usize, end: usize) -> usize {
        if end == 0 {
            self.edges[e].0
        } else {
            self.edges[e].1
        }
    }

    /// Given one endpoint of `e`, the other (for a loop, the same vertex).
    pub fn opposite(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Degree counting a loop twice.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .map(|&(a, b)| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    /// Incident `(edge, end)` pairs per vertex, in edge order.
    pub fn incidence(&self) -> Vec<Vec<(usize, usize)>> {
        let mut inc = vec![Vec::new(); self.vertex_count];
        for (e, &(a, b)) in self.edges.iter().enumerate() {
            inc[a].push((e, 0));
            inc[b].push((e, 1));
        }
        inc
    }

    /// Component label per vertex, labels assigned in order of first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut parent: Vec<usize> = (0..self.vertex_count).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut label = vec![usize::MAX; self.vertex_count];
        let mut next = 0;
        for v in 0..self.vertex_count {
            let r = find(&mut parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[v] = label[r];
        }
        label
    }

    pub fn component_count(&self) -> usize {
        self.components().into_iter().max().map_or(0, |m| m + 1)
    }

    pub fn subgraph(&self, edges: &[usize]) -> OrdinaryGraph {
        let mut g = OrdinaryGraph::new(self.vertex_count);
        for &e in edges {
            let (a, b) = self.edges[e];
            g.add_edge(a, b);
        }
        g
    }
}

/// A walk in an ordinary graph. Step `(e, k)` leaves through end `k` of `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphWalk {
    pub start: usize,
    pub steps: Vec<(usize, usize)>,
}

impl GraphWalk {
    /// Checks that consecutive steps are incident.
    pub fn new(g: &OrdinaryGraph, start: usize, steps: Vec<(usize, usize)>) -> Option<GraphWalk> {
        let mut at = start;
        for &(e, k) in &steps {
            if e >= g.edge_count() || k > 1 || g.end_vertex(e, k) != at {
                return None;
            }
            at = g.end_vertex(e, 1 - k);
        }
        Some(GraphWalk { start, steps })
    }

    /// Walk along a vertex sequence, using for each hop the first edge
    /// joining the two vertices.
    pub fn along(g: &OrdinaryGraph, vertices: &[usize]) -> Option<GraphWalk> {
        let mut steps = Vec::new();
        for w in vertices.windows(2) {
            let (e, k) = g
                .edge_list()
                .iter()
                .enumerate()
                .find_map(|(e, &(a, b))| {
                    if a == w[0] && b == w[1] {
                        Some((e, 0))
                    } else if b == w[0] && a == w[1] {
                        Some((e, 1))
                    } else {
                        None
                    }
                })?;
            steps.push((e, k));
        }
        GraphWalk::new(g, *vertices.first()?, steps)
    }

    pub fn vertices(&self, g: &OrdinaryGraph) -> Vec<usize> {
        let mut out = vec![self.start];
        for &(e, k) in &self.steps {
            out.push(g.end_vertex(e, 1 - k));
        }
        out
    }

    pub fn end(&self, g: &OrdinaryGraph) -> usize {
        self.steps.last().map_or(self.start, |&(e, k)| g.end_vertex(e, 1 - k))
    }

    /// No vertex repeats, except that the end may equal the start.
    pub fn is_path(&self, g: &OrdinaryGraph) -> bool {
        let vs = self.vertices(g);
        let n = vs.len();
        let body = if n > 1 && vs[0] == vs[n - 1] { &vs[..n - 1] } else { &vs[..] };
        let mut seen = std::collections::BTreeSet::new();
        body.iter().all(|v| seen.insert(*v))
    }

    pub fn reversed(&self, g: &OrdinaryGraph) -> GraphWalk {
        GraphWalk {
            start: self.end(g),
            steps: self.steps.iter().rev().map(|&(e, k)| (e, 1 - k)).collect(),
        }
    }

    pub fn interior(&self, g: &OrdinaryGraph) -> Vec<usize> {
        let vs = self.vertices(g);
        if vs.len() <= 2 {
            Vec::new()
        } else {
            vs[1..vs.len() - 1].to_vec()
        }
    }
}
