//! Path-addition embedding of simple graphs, block by block.
//!
//! A biconnected block is grown from a cycle. At each round the fragments of
//! the block relative to the embedded part are listed together with the
//! faces that contain all of their attachment vertices. A fragment with no
//! such face proves nonplanarity; otherwise a path through the most
//! constrained fragment is drawn across one of its faces.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

/// Simple undirected graph given by adjacency sets.
pub(crate) struct Simple {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub adj: Vec<Vec<(usize, usize)>>,
}

impl Simple {
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Simple {
        let mut adj = vec![Vec::new(); n];
        for (i, &(a, b)) in edges.iter().enumerate() {
            adj[a].push((b, i));
            adj[b].push((a, i));
        }
        Simple { n, edges, adj }
    }
}

/// Edge sets of the biconnected blocks (bridges are blocks of one edge).
pub(crate) fn blocks(g: &Simple) -> Vec<Vec<usize>> {
    struct State<'a> {
        g: &'a Simple,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<usize>,
        out: Vec<Vec<usize>>,
    }
    fn dfs(s: &mut State, v: usize, parent_edge: Option<usize>) {
        s.time += 1;
        s.disc[v] = s.time;
        s.low[v] = s.time;
        for &(u, e) in &s.g.adj[v] {
            if Some(e) == parent_edge {
                continue;
            }
            if s.disc[u] == 0 {
                s.stack.push(e);
                dfs(s, u, Some(e));
                s.low[v] = s.low[v].min(s.low[u]);
                if s.low[u] >= s.disc[v] {
                    let mut block = Vec::new();
                    while let Some(x) = s.stack.pop() {
                        block.push(x);
                        if x == e {
                            break;
                        }
                    }
                    block.sort();
                    s.out.push(block);
                }
            } else if s.disc[u] < s.disc[v] {
                s.stack.push(e);
                s.low[v] = s.low[v].min(s.disc[u]);
            }
        }
    }
    let mut s = State { g, disc: vec![0; g.n], low: vec![0; g.n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..g.n {
        if s.disc[v] == 0 {
            dfs(&mut s, v, None);
        }
    }
    s.out
}

/// Faces of a planar embedding of a biconnected block, as cyclic vertex
/// sequences, or `None` if the block is nonplanar.
pub(crate) fn embed_block(g: &Simple, block: &[usize]) -> Option<Vec<Vec<usize>>> {
    if block.len() == 1 {
        let (a, b) = g.edges[block[0]];
        return Some(vec![vec![a, b]]);
    }
    let in_block: BTreeSet<usize> = block.iter().copied().collect();
    let mut vertices = BTreeSet::new();
    for &e in block {
        vertices.insert(g.edges[e].0);
        vertices.insert(g.edges[e].1);
    }
    if block.len() > 3 * vertices.len() - 6 {
        return None;
    }
    let adj = |v: usize| g.adj[v].iter().filter(|(_, e)| in_block.contains(e));

    // Initial cycle through the first edge.
    let (u0, v0) = g.edges[block[0]];
    let mut prev = BTreeMap::new();
    let mut queue = VecDeque::from([v0]);
    prev.insert(v0, v0);
    while let Some(x) = queue.pop_front() {
        if x == u0 {
            break;
        }
        for &(y, e) in adj(x) {
            if e != block[0] && !prev.contains_key(&y) {
                prev.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    let mut cycle = vec![u0];
    let mut x = u0;
    while x != v0 {
        x = prev[&x];
        cycle.push(x);
    }
    let mut embedded_v: BTreeSet<usize> = cycle.iter().copied().collect();
    let mut embedded_e: BTreeSet<usize> = BTreeSet::new();
    for i in 0..cycle.len() {
        let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
        let e = adj(a).find(|&&(y, _)| y == b).unwrap().1;
        embedded_e.insert(e);
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    while embedded_e.len() < block.len() {
        // Fragments: (attachments, path-finder seed).
        let mut fragments: Vec<(BTreeSet<usize>, Fragment)> = Vec::new();
        for &e in block {
            let (a, b) = g.edges[e];
            if !embedded_e.contains(&e) && embedded_v.contains(&a) && embedded_v.contains(&b) {
                fragments.push((BTreeSet::from([a, b]), Fragment::Chord(e)));
            }
        }
        let mut comp_seen = BTreeSet::new();
        for &v in &vertices {
            if embedded_v.contains(&v) || comp_seen.contains(&v) {
                continue;
            }
            let mut members = BTreeSet::from([v]);
            let mut attach = BTreeSet::new();
            let mut queue = VecDeque::from([v]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in adj(x) {
                    if embedded_v.contains(&y) {
                        attach.insert(y);
                    } else if members.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            comp_seen.extend(members.iter().copied());
            fragments.push((attach, Fragment::Component(members)));
        }

        let mut choice: Option<(usize, usize, usize)> = None;
        for (fi, (attach, _)) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| attach.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return None;
            }
            let better = match choice {
                None => true,
                Some((_, _, count)) => admissible.len() < count && count > 1,
            };
            if better {
                choice = Some((fi, admissible[0], admissible.len()));
            }
        }
        let (fi, face_index, _) = choice.expect("an unembedded edge leaves a fragment");
        let (attach, fragment) = &fragments[fi];
        let path = match fragment {
            Fragment::Chord(e) => {
                let (a, b) = g.edges[*e];
                vec![a, b]
            }
            Fragment::Component(members) => {
                let a = *attach.iter().next().unwrap();
                let mut prev: BTreeMap<usize, usize> = BTreeMap::new();
                let mut queue = VecDeque::new();
                for &(y, _) in adj(a) {
                    if members.contains(&y) && !prev.contains_key(&y) {
                        prev.insert(y, a);
                        queue.push_back(y);
                    }
                }
                let mut end = None;
                'search: while let Some(x) = queue.pop_front() {
                    for &(y, _) in adj(x) {
                        if members.contains(&y) {
                            if let std::collections::btree_map::Entry::Vacant(e) = prev.entry(y) {
                                e.insert(x);
                                queue.push_back(y);
                            }
                        } else if y != a && embedded_v.contains(&y) {
                            end = Some((y, x));
                            break 'search;
                        }
                    }
                }
                let (b, last) = end.expect("a fragment of a biconnected block has two attachments");
                let mut path = vec![b, last];
                let mut x = last;
                while x != a {
                    x = prev[&x];
                    path.push(x);
                }
                path.reverse();
                path
            }
        };
        for w in path.windows(2) {
            let e = adj(w[0]).find(|&&(y, _)| y == w[1]).unwrap().1;
            embedded_e.insert(e);
        }
        embedded_v.extend(path.iter().copied());

        let face = faces.swap_remove(face_index);
        let (a, b) = (path[0], path[path.len() - 1]);
        let i = face.iter().position(|&x| x == a).unwrap();
        let j = face.iter().position(|&x| x == b).unwrap();
        let m = face.len();
        let interior = &path[1..path.len() - 1];
        let mut f1 = Vec::new();
        let mut k = i;
        loop {
            f1.push(face[k]);
            if k == j {
                break;
            }
            k = (k + 1) % m;
        }
        f1.extend(interior.iter().rev());
        let mut f2 = Vec::new();
        let mut k = j;
        loop {
            f2.push(face[k]);
            if k == i {
                break;
            }
            k = (k + 1) % m;
        }
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
    }
    Some(faces)
}

enum Fragment {
    Chord(usize),
    Component(BTreeSet<usize>),
}

/// Whole-graph test without building a rotation system.
pub(crate) fn simple_is_planar(g: &Simple) -> bool {
    blocks(g).iter().all(|b| embed_block(g, b).is_some())
}

/// Rotation (as neighbour-edge lists) of a planar simple graph.
pub(crate) fn simple_rotation(g: &Simple) -> Option<Vec<Vec<usize>>> {
    let mut rotation: Vec<Vec<usize>> = vec![Vec::new(); g.n];
    let edge_of: BTreeMap<(usize, usize), usize> = g
        .edges
        .iter()
        .enumerate()
        .map(|(i, &(a, b))| ((a.min(b), a.max(b)), i))
        .collect();
    let key = |a: usize, b: usize| edge_of[&(a.min(b), a.max(b))];
    for block in blocks(g) {
        let faces = embed_block(g, &block)?;
        if block.len() == 1 {
            let (a, b) = g.edges[block[0]];
            rotation[a].push(block[0]);
            rotation[b].push(block[0]);
            continue;
        }
        // next[v][u] = w for consecutive u, v, w on a face.
        let mut next: BTreeMap<usize, BTreeMap<usize, usize>> = BTreeMap::new();
        for f in &faces {
            let m = f.len();
            for i in 0..m {
                let (u, v, w) = (f[i], f[(i + 1) % m], f[(i + 2) % m]);
                next.entry(v).or_default().insert(u, w);
            }
        }
        for (v, succ) in next {
            let start = *succ.keys().next().unwrap();
            let mut u = start;
            loop {
                rotation[v].push(key(v, u));
                u = succ[&u];
                if u == start {
                    break;
                }
            }
        }
    }
    Some(rotation)
}
