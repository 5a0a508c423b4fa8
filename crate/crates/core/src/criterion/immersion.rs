//! K3,3 immersions in a star-graph: six branch vertices joined by nine
//! edge-disjoint walks that never cross, though they may pass through each
//! other's vertices. Rewiring them until no vertex is shared ends either in
//! an embedded K3,3 or at a pair of cycles crossing once.

use crate::chord::{crossings, self_crossings};
use crate::star::{StarGraph, VertexId};
use crate::walk::{ClosedWalk, OpenWalk, Step, WalkLike};

use super::skeleton::{self, reversed_steps, Segment};
use super::{CriterionError, EmbeddedK33};

/// Skeleton nodes of path `idx`: side A node first.
pub(crate) fn ends_of(idx: usize) -> (usize, usize) {
    (idx / 3, 3 + idx % 3)
}

pub(crate) fn paths_at(node: usize) -> [usize; 3] {
    if node < 3 {
        [3 * node, 3 * node + 1, 3 * node + 2]
    } else {
        [node - 3, node, node + 3]
    }
}

/// A path passing through a branch vertex with the ends of the three paths
/// there on both sides of its chord; returns `(path, node)`.
pub(crate) fn branch_split(g: &StarGraph, branch: &[VertexId], paths: &[OpenWalk]) -> Option<(usize, usize)> {
    for (node, &b) in branch.iter().enumerate() {
        let ends: Vec<usize> = paths_at(node)
            .iter()
            .map(|&idx| {
                let steps = paths[idx].steps();
                g.position(if node < 3 { steps[0].from } else { steps[steps.len() - 1].to })
            })
            .collect();
        for (idx, p) in paths.iter().enumerate() {
            for x in p.visits(g) {
                if x.vertex == b {
                    let (a, d) = (g.position(x.arrive), g.position(x.depart));
                    if ends.iter().any(|&e| inside(a, d, e) != inside(a, d, ends[0])) {
                        return Some((idx, node));
                    }
                }
            }
        }
    }
    None
}

pub(crate) fn walk_from(g: &StarGraph, steps: Vec<Step>) -> OpenWalk {
    let start = g.vertex_of(steps[0].from);
    OpenWalk::new(g, start, steps).expect("segments of edge-simple walks")
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Immersion {
    pub branch: Vec<VertexId>,
    pub paths: Vec<OpenWalk>,
}

/// One interior visit of a path: its chord at the visited vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Pass {
    path: usize,
    visit: usize,
    arrive: usize,
    depart: usize,
}

fn inside(lo: usize, hi: usize, p: usize) -> bool {
    lo.min(hi) < p && p < lo.max(hi)
}

/// Whether chord `c` has `x` and `y` on opposite sides.
fn splits(c: &Pass, x: usize, y: usize) -> bool {
    inside(c.arrive, c.depart, x) != inside(c.arrive, c.depart, y)
}

fn separates(c: &Pass, a: &Pass, b: &Pass) -> bool {
    !splits(c, a.arrive, a.depart) && !splits(c, b.arrive, b.depart) && splits(c, a.arrive, b.arrive)
}

/// Whether two disjoint chords, each read from arrival to departure, run
/// side by side in the same direction.
fn same_direction(n: usize, x: (usize, usize), y: (usize, usize)) -> bool {
    let r = |p: usize| (p + n - x.0) % n;
    if r(y.0) < r(x.1) {
        r(y.0) < r(y.1)
    } else {
        r(y.1) < r(y.0)
    }
}

pub(crate) enum Untangled {
    Crossing(ClosedWalk, ClosedWalk),
    Embedded(Immersion),
}

impl Immersion {
    pub fn edge_count(&self) -> usize {
        self.paths.iter().map(|p| p.len()).sum()
    }

    pub fn check(&self, g: &StarGraph) -> Result<(), String> {
        let distinct: std::collections::BTreeSet<_> = self.branch.iter().collect();
        if self.branch.len() != 6 || distinct.len() != 6 || self.paths.len() != 9 {
            return Err("immersion does not have six distinct branch vertices and nine paths".into());
        }
        for (idx, p) in self.paths.iter().enumerate() {
            let (a, b) = ends_of(idx);
            if p.is_empty() || p.start() != self.branch[a] || p.end(g) != self.branch[b] {
                return Err(format!("immersion path {idx} has wrong ends"));
            }
            if !self_crossings(g, p).is_empty() {
                return Err(format!("immersion path {idx} crosses itself"));
            }
            for q in idx + 1..9 {
                match crossings(g, p, &self.paths[q]) {
                    Err(_) => return Err(format!("immersion paths {idx} and {q} share an edge")),
                    Ok(x) if !x.is_empty() => return Err(format!("immersion paths {idx} and {q} cross")),
                    Ok(_) => {}
                }
            }
        }
        if let Some((idx, node)) = branch_split(g, &self.branch, &self.paths) {
            return Err(format!("immersion path {idx} separates the ends at branch vertex {node}"));
        }
        Ok(())
    }

    pub fn to_witness(&self) -> EmbeddedK33 {
        EmbeddedK33 { branch_vertices: self.branch.clone(), paths: self.paths.clone() }
    }

    /// Steps of path `idx` read away from its end at skeleton node `node`.
    fn away_from(&self, idx: usize, node: usize) -> Vec<Step> {
        let steps = self.paths[idx].steps();
        if node == ends_of(idx).0 {
            steps.to_vec()
        } else {
            reversed_steps(steps)
        }
    }

    fn set_away_from(&mut self, g: &StarGraph, idx: usize, node: usize, steps: Vec<Step>) {
        let steps = if node == ends_of(idx).0 { steps } else { reversed_steps(&steps) };
        self.paths[idx] = walk_from(g, steps);
    }

    /// The paths cut at the given visits, each cut landing on a skeleton
    /// node; `cuts` holds `(path, visit, node)`.
    pub fn segments(&self, cuts: &[(usize, usize, usize)]) -> Vec<Segment> {
        let mut out = Vec::new();
        for idx in 0..9 {
            let (a, b) = ends_of(idx);
            let steps = self.paths[idx].steps();
            let mut mine: Vec<(usize, usize)> =
                cuts.iter().filter(|c| c.0 == idx).map(|&(_, t, node)| (t, node)).collect();
            mine.sort();
            let (mut from, mut lo) = (a, 0);
            for (t, node) in mine {
                out.push(Segment { from, to: node, steps: steps[lo..=t].to_vec() });
                from = node;
                lo = t + 1;
            }
            out.push(Segment { from, to: b, steps: steps[lo..].to_vec() });
        }
        out
    }

    fn passes(&self, g: &StarGraph, v: VertexId) -> Vec<Pass> {
        let mut out = Vec::new();
        for (path, p) in self.paths.iter().enumerate() {
            for x in p.visits(g) {
                if x.vertex == v {
                    out.push(Pass { path, visit: x.index, arrive: g.position(x.arrive), depart: g.position(x.depart) });
                }
            }
        }
        out
    }

    /// Least vertex met twice, counting a branch vertex as one meeting.
    fn crowded_vertex(&self, g: &StarGraph) -> Option<VertexId> {
        let mut count = vec![0usize; g.vertex_count()];
        for b in &self.branch {
            count[b.0] += 1;
        }
        for p in &self.paths {
            for x in p.visits(g) {
                count[x.vertex.0] += 1;
            }
        }
        count.iter().position(|&c| c >= 2).map(VertexId)
    }
}

enum Move {
    Cut { path: usize, node: usize, visit: usize },
    Splice { path: usize, t1: usize, t2: usize },
    Relocate { node: usize, keep: (usize, usize), drop: (usize, usize) },
    Search { cuts: Vec<(usize, usize, usize)> },
}

fn apply(g: &StarGraph, imm: &Immersion, mv: &Move) -> Option<Result<Immersion, (ClosedWalk, ClosedWalk)>> {
    match mv {
        Move::Search { cuts } => {
            let segs = imm.segments(cuts);
            skeleton::search(g, 7, &segs).map(Err)
        }
        Move::Cut { path, node, visit } => {
            let steps = imm.away_from(*path, *node);
            let mut next = imm.clone();
            next.set_away_from(g, *path, *node, steps[visit + 1..].to_vec());
            Some(Ok(next))
        }
        Move::Splice { path, t1, t2 } => {
            let steps = imm.paths[*path].steps();
            let mut joined = steps[..=*t1].to_vec();
            joined.extend_from_slice(&steps[t2 + 1..]);
            let mut next = imm.clone();
            next.paths[*path] = walk_from(g, joined);
            Some(Ok(next))
        }
        Move::Relocate { node, keep, drop } => {
            // The branch vertex moves to the shared vertex; the kept path's
            // first part, read backwards, extends the third path.
            let third = paths_at(*node).into_iter().find(|&p| p != keep.0 && p != drop.0)?;
            let k = imm.away_from(keep.0, *node);
            let d = imm.away_from(drop.0, *node);
            let mut z = reversed_steps(&k[..=keep.1]);
            z.extend(imm.away_from(third, *node));
            let mut next = imm.clone();
            next.branch[*node] = g.vertex_of(k[keep.1].to);
            next.set_away_from(g, keep.0, *node, k[keep.1 + 1..].to_vec());
            next.set_away_from(g, drop.0, *node, d[drop.1 + 1..].to_vec());
            next.set_away_from(g, third, *node, z);
            Some(Ok(next))
        }
    }
}

/// Moves for a vertex that is the branch vertex `node` and is passed by
/// other paths.
fn branch_moves(g: &StarGraph, imm: &Immersion, node: usize, passes: &[Pass]) -> Vec<Move> {
    let mut moves = Vec::new();
    let own = paths_at(node);
    for &idx in &own {
        let steps = imm.away_from(idx, node);
        let w = walk_from(g, steps);
        if let Some(x) = w.visits(g).iter().rev().find(|x| x.vertex == imm.branch[node]) {
            moves.push(Move::Cut { path: idx, node, visit: x.index });
        }
    }
    let end = g.position(imm.away_from(own[0], node)[0].from);
    let mut others: Vec<(usize, Pass)> = passes
        .iter()
        .filter(|p| !own.contains(&p.path))
        .map(|p| (passes.iter().filter(|c| *c != p && splits(c, p.arrive, end)).count(), *p))
        .collect();
    others.sort_by_key(|x| x.0);
    for (_, p) in others {
        moves.push(Move::Search { cuts: vec![(p.path, p.visit, node)] });
    }
    moves
}

fn shared_node(a: usize, b: usize) -> Option<usize> {
    let (a0, a1) = ends_of(a);
    let (b0, b1) = ends_of(b);
    if a0 == b0 {
        Some(a0)
    } else if a1 == b1 {
        Some(a1)
    } else {
        None
    }
}

/// Moves for a vertex outside the branch set passed at least twice.
fn passage_moves(g: &StarGraph, imm: &Immersion, v: VertexId, passes: &[Pass]) -> Vec<Move> {
    let n = g.degree(v);
    let mut pairs = Vec::new();
    for i in 0..passes.len() {
        for j in i + 1..passes.len() {
            let (x, y) = (passes[i], passes[j]);
            let between = passes.iter().filter(|c| **c != x && **c != y && separates(c, &x, &y)).count();
            pairs.push((between, x, y));
        }
    }
    pairs.sort_by_key(|p| p.0);
    let mut moves = Vec::new();
    for (_, x, y) in pairs {
        let search = Move::Search { cuts: vec![(x.path, x.visit, 6), (y.path, y.visit, 6)] };
        if x.path == y.path {
            let (t1, t2) = (x.visit.min(y.visit), x.visit.max(y.visit));
            let splice = Move::Splice { path: x.path, t1, t2 };
            if same_direction(n, (x.arrive, x.depart), (y.arrive, y.depart)) {
                moves.extend([search, splice]);
            } else {
                moves.extend([splice, search]);
            }
        } else if let Some(node) = shared_node(x.path, y.path) {
            let away = |p: &Pass| {
                let m = imm.paths[p.path].len();
                if node == ends_of(p.path).0 {
                    ((p.arrive, p.depart), p.visit)
                } else {
                    ((p.depart, p.arrive), m - 2 - p.visit)
                }
            };
            let ((cx, tx), (cy, ty)) = (away(&x), away(&y));
            let relocate = [
                Move::Relocate { node, keep: (x.path, tx), drop: (y.path, ty) },
                Move::Relocate { node, keep: (y.path, ty), drop: (x.path, tx) },
            ];
            if same_direction(n, cx, cy) {
                moves.extend(relocate);
                moves.push(search);
            } else {
                moves.push(search);
                moves.extend(relocate);
            }
        } else {
            moves.push(search);
        }
    }
    moves
}

/// Reduces the immersion until no vertex is shared or a crossing pair of
/// cycles shows up. Every rewiring removes edges, so this terminates.
pub(crate) fn untangle(g: &StarGraph, mut imm: Immersion) -> Result<Untangled, CriterionError> {
    imm.check(g).map_err(CriterionError::Internal)?;
    while let Some(v) = imm.crowded_vertex(g) {
        let passes = imm.passes(g, v);
        let moves = match imm.branch.iter().position(|&b| b == v) {
            Some(node) => branch_moves(g, &imm, node, &passes),
            None => passage_moves(g, &imm, v, &passes),
        };
        let before = imm.edge_count();
        let mut progressed = false;
        for mv in &moves {
            match apply(g, &imm, mv) {
                None => {}
                Some(Err((c1, c2))) => return Ok(Untangled::Crossing(c1, c2)),
                Some(Ok(next)) if next.edge_count() < before && next.check(g).is_ok() => {
                    imm = next;
                    progressed = true;
                    break;
                }
                Some(Ok(_)) => {}
            }
        }
        if !progressed {
            return Err(CriterionError::Internal(format!("no rewiring applies at vertex {}", v.0)));
        }
    }
    Ok(Untangled::Embedded(imm))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::criterion::validate_k33;
    use crate::simplify::simplify_obstruction;
    use crate::star::{EdgeId, RawStarGraph};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// K3,3 whose edges are subdivided through shared vertices, with the
    /// immersion following the original edges.
    fn tangled(ops: usize, seed: u64) -> (StarGraph, Immersion) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rot: Vec<Vec<usize>> = vec![Vec::new(); 6];
        let mut ends: Vec<(usize, usize)> = Vec::new();
        let mut half = 0;
        let mut paths: Vec<Vec<usize>> = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                rot[a].push(half);
                rot[b].push(half + 1);
                ends.push((half, half + 1));
                paths.push(vec![ends.len() - 1]);
                half += 2;
            }
        }
        for _ in 0..ops {
            let m = ends.len();
            let w = if rng.gen_bool(0.5) {
                rot.push(Vec::new());
                rot.len() - 1
            } else {
                rng.gen_range(0..rot.len())
            };
            let times = if rng.gen_bool(0.7) { 2 } else { 1 };
            let mut chosen = Vec::new();
            while chosen.len() < times {
                let e = rng.gen_range(0..m);
                if !chosen.contains(&e) {
                    chosen.push(e);
                }
            }
            for e in chosen {
                let (x, y) = ends[e];
                let (p, q) = (half, half + 1);
                half += 2;
                ends[e] = (x, p);
                ends.push((q, y));
                for h in [p, q] {
                    let i = rng.gen_range(0..=rot[w].len());
                    rot[w].insert(i, h);
                }
                let path = paths.iter_mut().find(|p| p.contains(&e)).unwrap();
                let at = path.iter().position(|&x| x == e).unwrap();
                path.insert(at + 1, ends.len() - 1);
            }
        }
        let mut raw = RawStarGraph::default();
        for (v, r) in rot.iter().enumerate() {
            let names: Vec<String> = r.iter().map(|h| format!("h{h}")).collect();
            let refs: Vec<&str> = names.iter().map(String::as_str).collect();
            raw = raw.vertex(&format!("v{v}"), &refs);
        }
        for &(x, y) in &ends {
            raw = raw.edge(&format!("h{x}"), &format!("h{y}"));
        }
        let g = raw.build().unwrap();
        let paths = paths
            .iter()
            .map(|p| walk_from(&g, p.iter().map(|&e| Step::departing(&g, g.ends(EdgeId(e))[0])).collect()))
            .collect();
        (g, Immersion { branch: (0..6).map(VertexId).collect(), paths })
    }

    #[test]
    fn untangling_reaches_an_embedding_or_a_crossing_pair() {
        let (mut embedded, mut crossing, mut tried) = (0, 0, 0);
        for seed in 0..6000 {
            let (g, imm) = tangled(1 + (seed % 8) as usize, seed);
            if imm.check(&g).is_err() {
                continue;
            }
            tried += 1;
            match untangle(&g, imm) {
                Ok(Untangled::Embedded(k)) => {
                    assert_eq!(k.crowded_vertex(&g), None);
                    assert_eq!(validate_k33(&g, &k.to_witness()), Ok(()));
                    embedded += 1;
                }
                Ok(Untangled::Crossing(a, b)) => {
                    assert!(simplify_obstruction(&g, &a, &b).is_ok());
                    crossing += 1;
                }
                Err(e) => panic!("seed {seed}: {e}"),
            }
        }
        assert!(tried > 500 && embedded > 50 && crossing > 50, "{tried} {embedded} {crossing}");
    }
}
