//! Random and word-based star-graphs for tests and experiments.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::GraphWalk;
use crate::star::{EdgeId, RawStarGraph, StarGraph};
use crate::web::WebGraph;

pub const CONNECT_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("degree menu is empty")]
    EmptyMenu,
    #[error("degree {0} is odd")]
    OddDegree(usize),
    #[error("no connected sample within {0} attempts")]
    Disconnected(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GaussError {
    #[error("word is empty")]
    Empty,
    #[error("symbol {symbol:?} occurs {count} times")]
    Count { symbol: char, count: usize },
}

fn build(rotations: Vec<Vec<usize>>, pairs: &[(usize, usize)]) -> StarGraph {
    let mut raw = RawStarGraph::default();
    for (v, rot) in rotations.iter().enumerate() {
        let names: Vec<String> = rot.iter().map(|h| format!("h{h}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        raw = raw.vertex(&format!("v{v}"), &refs);
    }
    for &(a, b) in pairs {
        raw = raw.edge(&format!("h{a}"), &format!("h{b}"));
    }
    raw.build().expect("generated star-graphs are valid")
}

/// Configuration model: every vertex draws its degree from `degree_menu`,
/// half-edges are paired uniformly, and each rotation is a uniform random
/// order. Disconnected samples are redrawn.
pub fn random_even_star_graph(n_vertices: usize, degree_menu: &[usize], seed: u64) -> Result<StarGraph, GenError> {
    if degree_menu.is_empty() {
        return Err(GenError::EmptyMenu);
    }
    if let Some(&d) = degree_menu.iter().find(|&&d| d % 2 == 1) {
        return Err(GenError::OddDegree(d));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..CONNECT_ATTEMPTS {
        let degrees: Vec<usize> = (0..n_vertices).map(|_| *degree_menu.choose(&mut rng).unwrap()).collect();
        let mut rotations = Vec::new();
        let mut next = 0;
        for &d in &degrees {
            let mut rot: Vec<usize> = (next..next + d).collect();
            next += d;
            rot.shuffle(&mut rng);
            rotations.push(rot);
        }
        let mut halves: Vec<usize> = (0..next).collect();
        halves.shuffle(&mut rng);
        let pairs: Vec<(usize, usize)> = halves.chunks(2).map(|c| (c[0], c[1])).collect();
        let g = build(rotations, &pairs);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(GenError::Disconnected(CONNECT_ATTEMPTS))
}

/// Plane map grown from a single loop by drawing edges across faces and
/// attaching pendant vertices, until it has `n_faces_budget` faces. The
/// stored rotations are the plane ones.
pub fn random_planar_star_graph(n_faces_budget: usize, seed: u64) -> StarGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // Half-edge h lies at vertex[h]; its twin is h ^ 1.
    let mut vertex: Vec<usize> = vec![0, 0];
    let mut rotations: Vec<Vec<usize>> = vec![vec![0, 1]];
    let faces_of = |rotations: &Vec<Vec<usize>>, vertex: &Vec<usize>| -> Vec<Vec<usize>> {
        let succ = |h: usize| {
            let rot = &rotations[vertex[h]];
            let i = rot.iter().position(|&x| x == h).unwrap();
            rot[(i + 1) % rot.len()]
        };
        let mut seen = vec![false; vertex.len()];
        let mut out = Vec::new();
        for h in 0..vertex.len() {
            let mut face = Vec::new();
            let mut x = h;
            while !seen[x] {
                seen[x] = true;
                face.push(x);
                x = succ(x ^ 1);
            }
            if !face.is_empty() {
                out.push(face);
            }
        }
        out
    };
    let insert_before = |rotations: &mut Vec<Vec<usize>>, v: usize, h: usize, new: usize| {
        let i = rotations[v].iter().position(|&x| x == h).unwrap();
        rotations[v].insert(i, new);
    };
    loop {
        let faces = faces_of(&rotations, &vertex);
        if faces.len() >= n_faces_budget.max(1) {
            break;
        }
        let face = faces.choose(&mut rng).unwrap().clone();
        let h1 = *face.choose(&mut rng).unwrap();
        let (x, y) = (vertex.len(), vertex.len() + 1);
        if rotations.len() <= n_faces_budget && rng.gen_bool(0.3) {
            let u = rotations.len();
            rotations.push(vec![y]);
            vertex.extend([vertex[h1], u]);
            insert_before(&mut rotations, vertex[h1], h1, x);
            continue;
        }
        let h2 = *face.choose(&mut rng).unwrap();
        vertex.extend([vertex[h1], vertex[h2]]);
        insert_before(&mut rotations, vertex[h1], h1, x);
        insert_before(&mut rotations, vertex[h2], h2, y);
    }
    let pairs: Vec<(usize, usize)> = (0..vertex.len() / 2).map(|e| (2 * e, 2 * e + 1)).collect();
    build(rotations, &pairs)
}

/// Every edge doubled by a parallel copy next to it at both ends. The copy
/// of the first end of an edge goes after it in the stored rotation and the
/// copy of the second end before it; `flips[v]` swaps the two at `v`. With
/// the reversal flags of a planar embedding, the copies run alongside the
/// originals without crossing.
pub fn evenize(g: &StarGraph, flips: &[bool]) -> StarGraph {
    let copy = |h: usize| format!("{}'", g.half_edge_name(crate::star::HalfEdgeId(h)));
    let mut raw = g.to_raw();
    for v in g.vertices() {
        let flip = flips.get(v.0).copied().unwrap_or(false);
        let mut rot = Vec::new();
        for &h in g.rotation(v) {
            let name = g.half_edge_name(h).to_string();
            let after = (g.side_of(h) == 0) != flip;
            if after {
                rot.push(name);
                rot.push(copy(h.0));
            } else {
                rot.push(copy(h.0));
                rot.push(name);
            }
        }
        raw.vertices[v.0].1 = rot;
    }
    for e in g.edges() {
        let [a, b] = g.ends(EdgeId(e.0));
        raw.edges.push((copy(a.0), copy(b.0)));
    }
    StarGraph::from_raw(&raw).expect("doubling keeps the star-graph valid")
}

/// The framed four-valent graph of a closed curve with the given crossing
/// sequence. Symbol `s` becomes a vertex with rotation `[s1, s2, s3, s4]`;
/// the first passage enters at `s1` and leaves at `s3`, the second enters
/// at `s2` and leaves at `s4`.
pub fn from_gauss_word(word: &str) -> Result<StarGraph, GaussError> {
    let symbols: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
    if symbols.is_empty() {
        return Err(GaussError::Empty);
    }
    let mut order: Vec<char> = Vec::new();
    for &c in &symbols {
        if !order.contains(&c) {
            order.push(c);
        }
    }
    for &c in &order {
        let count = symbols.iter().filter(|&&x| x == c).count();
        if count != 2 {
            return Err(GaussError::Count { symbol: c, count });
        }
    }
    let mut raw = RawStarGraph::default();
    for &c in &order {
        let names: Vec<String> = (1..=4).map(|k| format!("{c}{k}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        raw = raw.vertex(&c.to_string(), &refs);
    }
    // (entry, exit) half-edge numbers of each passage.
    let passages: Vec<(char, usize, usize)> = symbols
        .iter()
        .enumerate()
        .map(|(i, &c)| if symbols[..i].contains(&c) { (c, 2, 4) } else { (c, 1, 3) })
        .collect();
    let n = passages.len();
    for i in 0..n {
        let (c, _, out) = passages[i];
        let (d, inn, _) = passages[(i + 1) % n];
        raw = raw.edge(&format!("{c}{out}"), &format!("{d}{inn}"));
    }
    Ok(raw.build().expect("every symbol yields four paired half-edges"))
}

/// Random self-avoiding walk from `start` that never enters `blocked` and
/// stops at a vertex of `stop_at` or by chance.
fn random_path(
    w: &WebGraph,
    inc: &[Vec<(usize, usize)>],
    start: usize,
    blocked: &[usize],
    stop_at: &[usize],
    used: &[usize],
    rng: &mut ChaCha8Rng,
) -> GraphWalk {
    let g = &w.graph;
    let mut seen = vec![start];
    let mut steps = Vec::new();
    let mut at = start;
    loop {
        let mut options: Vec<(usize, usize)> = inc[at]
            .iter()
            .copied()
            .filter(|&(e, k)| {
                let to = g.end_vertex(e, 1 - k);
                let (a, b) = g.endpoints(e);
                a != b
                    && !used.contains(&e)
                    && !blocked.contains(&to)
                    && (!seen.contains(&to) || (to == start && steps.len() >= 2))
            })
            .collect();
        options.shuffle(rng);
        let Some(&(e, k)) = options.first() else { break };
        steps.push((e, k));
        at = g.end_vertex(e, 1 - k);
        if at == start || stop_at.contains(&at) {
            break;
        }
        seen.push(at);
        let left = steps.iter().any(|s| w.is_through(s.0));
        let closes = left && w.vertex_map(at) == w.vertex_map(start) && rng.gen_bool(0.5);
        if closes || (left && rng.gen_bool(0.05)) {
            break;
        }
    }
    GraphWalk { start, steps }
}

/// Extends `p` by a shortest route back into the web it started from,
/// avoiding its own vertices, `blocked` and the `used` edges.
fn close_up(w: &WebGraph, inc: &[Vec<(usize, usize)>], p: &mut GraphWalk, blocked: &[usize], used: &[usize]) {
    let g = &w.graph;
    let home = w.vertex_map(p.start);
    let on_path = p.vertices(g);
    let from = p.end(g);
    if !p.steps.iter().any(|s| w.is_through(s.0)) || w.vertex_map(from) == home {
        return;
    }
    let mut prev: Vec<Option<(usize, usize)>> = vec![None; g.vertex_count()];
    let mut seen = vec![false; g.vertex_count()];
    seen[from] = true;
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x != from && w.vertex_map(x) == home {
            let mut route = Vec::new();
            let mut y = x;
            while let Some((e, k)) = prev[y] {
                route.push((e, k));
                y = g.end_vertex(e, k);
            }
            route.reverse();
            p.steps.extend(route);
            return;
        }
        for &(e, k) in &inc[x] {
            let y = g.end_vertex(e, 1 - k);
            let fresh = !on_path.contains(&y) || (y == p.start && w.vertex_map(y) == home);
            if !seen[y] && fresh && !blocked.contains(&y) && !used.contains(&e) && !p.steps.iter().any(|s| s.0 == e) {
                seen[y] = true;
                prev[y] = Some((e, k));
                queue.push_back(y);
            }
        }
    }
}

/// Two random web-graph paths that meet at most in their endpoints and
/// share no edge. Returns `None` when the sampled pair is degenerate.
pub fn random_disjoint_paths(w: &WebGraph, seed: u64) -> Option<(GraphWalk, GraphWalk)> {
    let g = &w.graph;
    if g.vertex_count() == 0 {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let inc = g.incidence();
    let s1 = rng.gen_range(0..g.vertex_count());
    let mut p1 = random_path(w, &inc, s1, &[], &[], &[], &mut rng);
    if rng.gen_bool(0.5) {
        close_up(w, &inc, &mut p1, &[], &[]);
    }
    if p1.steps.is_empty() {
        return None;
    }
    let interior = p1.interior(g);
    let ends = [p1.start, p1.end(g)];
    // Starting where the first path passes makes crossings likely.
    let home = w.vertex_map(p1.start);
    let webs: Vec<_> = if home == w.vertex_map(p1.end(g)) && rng.gen_bool(0.7) {
        vec![home]
    } else {
        p1.vertices(g).iter().map(|&x| w.vertex_map(x)).collect()
    };
    let near = rng.gen_bool(0.8);
    let free: Vec<usize> = (0..g.vertex_count())
        .filter(|x| !interior.contains(x) && (!near || webs.contains(&w.vertex_map(*x))))
        .collect();
    let s2 = *free.choose(&mut rng)?;
    let stop_at: Vec<usize> = ends.iter().copied().filter(|&x| x != s2).collect();
    let used: Vec<usize> = p1.steps.iter().map(|s| s.0).collect();
    let mut p2 = random_path(w, &inc, s2, &interior, &stop_at, &used, &mut rng);
    if rng.gen_bool(0.5) && !stop_at.contains(&p2.end(g)) {
        let mut avoid = interior.clone();
        avoid.extend(ends);
        close_up(w, &inc, &mut p2, &avoid, &used);
    }
    if p2.steps.is_empty() {
        return None;
    }
    Some((p1, p2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_vertex_of_degree_four() {
        let g = random_even_star_graph(1, &[4], 3).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.edges().all(|e| g.is_loop(e)));
    }

    #[test]
    fn seeds_reproduce() {
        assert_eq!(random_even_star_graph(2, &[4, 4], 9), random_even_star_graph(2, &[4, 4], 9));
        assert_eq!(random_planar_star_graph(6, 1), random_planar_star_graph(6, 1));
        assert_eq!(random_even_star_graph(3, &[3], 1), Err(GenError::OddDegree(3)));
    }

    #[test]
    fn budget_one_is_a_loop() {
        let g = random_planar_star_graph(1, 5);
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 1));
    }

    #[test]
    fn gauss_words() {
        let g = from_gauss_word("abab").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert!(g.vertices().all(|v| g.degree(v) == 4));
        let aa = from_gauss_word("aa").unwrap();
        let raw = aa.to_raw();
        assert!(raw.edges.contains(&("a3".into(), "a2".into())));
        assert!(raw.edges.contains(&("a4".into(), "a1".into())));
        assert_eq!(from_gauss_word("aba"), Err(GaussError::Count { symbol: 'b', count: 1 }));
        assert_eq!(from_gauss_word(""), Err(GaussError::Empty));
    }

    #[test]
    fn evenize_doubles() {
        let g = from_gauss_word("abcabc").unwrap();
        let d = evenize(&g, &[]);
        assert_eq!(d.edge_count(), 2 * g.edge_count());
        assert!(d.vertices().all(|v| d.degree(v) == 8));
    }
}
