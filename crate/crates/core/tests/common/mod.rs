#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use starplan_core::{ClosedWalk, RawStarGraph, StarGraph, Step, WalkLike};

pub fn infinity() -> StarGraph {
    RawStarGraph::default().vertex("v", &["1", "2", "3", "4"]).edge("1", "3").edge("2", "4").build().unwrap()
}

pub fn alpha() -> StarGraph {
    RawStarGraph::default().vertex("v", &["1", "2", "3", "4"]).edge("2", "3").edge("4", "1").build().unwrap()
}

pub fn loop_walk(g: &StarGraph, a: &str) -> ClosedWalk {
    let h = g.half_edge_by_name(a).unwrap();
    ClosedWalk::around_loop(g, g.edge_of(h)).unwrap()
}

/// Closed walk leaving through the named half-edges in turn.
pub fn walk(g: &StarGraph, departures: &[&str]) -> ClosedWalk {
    let hs: Vec<_> = departures.iter().map(|n| g.half_edge_by_name(n).unwrap()).collect();
    ClosedWalk::from_departures(g, &hs).unwrap()
}

/// The same walk in a relabelled copy of the graph with equal half-edge names.
pub fn transport(from: &StarGraph, to: &StarGraph, w: &ClosedWalk) -> ClosedWalk {
    let steps = w
        .steps()
        .iter()
        .map(|s| Step::departing(to, to.half_edge_by_name(from.half_edge_name(s.from)).unwrap()))
        .collect();
    ClosedWalk::new(to, steps).unwrap()
}

/// K3,3 with uniformly random rotations.
pub fn k33_star(seed: u64) -> StarGraph {
    complete_star(&[(0..3).collect(), (3..6).collect()], seed)
}

pub fn k5_star(seed: u64) -> StarGraph {
    complete_star(&[(0..5).collect()], seed)
}

/// Complete graph (one part) or complete bipartite graph (two parts) with
/// random rotations.
fn complete_star(parts: &[Vec<usize>], seed: u64) -> StarGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = parts.iter().map(|p| p.len()).sum();
    let mut rots: Vec<Vec<String>> = vec![Vec::new(); n];
    let mut edges = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let joined = if parts.len() == 1 { true } else { parts[0].contains(&a) != parts[0].contains(&b) };
            if joined {
                let (x, y) = (format!("e{a}_{b}a"), format!("e{a}_{b}b"));
                rots[a].push(x.clone());
                rots[b].push(y.clone());
                edges.push((x, y));
            }
        }
    }
    let mut raw = RawStarGraph::default();
    for (v, r) in rots.iter_mut().enumerate() {
        r.shuffle(&mut rng);
        let refs: Vec<&str> = r.iter().map(String::as_str).collect();
        raw = raw.vertex(&format!("v{v}"), &refs);
    }
    for (x, y) in edges {
        raw = raw.edge(&x, &y);
    }
    raw.build().unwrap()
}

/// Connected star-graph with degrees drawn from `1..=max_degree`, odd
/// degrees allowed.
pub fn random_star(n: usize, max_degree: usize, seed: u64) -> StarGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let degrees: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=max_degree)).collect();
        if degrees.iter().sum::<usize>() % 2 == 1 {
            continue;
        }
        let mut raw = RawStarGraph::default();
        let mut halves = Vec::new();
        for (v, &d) in degrees.iter().enumerate() {
            let mut r: Vec<String> = (0..d).map(|k| format!("h{v}_{k}")).collect();
            halves.extend(r.clone());
            r.shuffle(&mut rng);
            let refs: Vec<&str> = r.iter().map(String::as_str).collect();
            raw = raw.vertex(&format!("v{v}"), &refs);
        }
        halves.shuffle(&mut rng);
        for c in halves.chunks(2) {
            raw = raw.edge(&c[0], &c[1]);
        }
        let g = raw.build().unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// Random double-occurrence word on `symbols` letters.
pub fn gauss_word(symbols: usize, seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w: Vec<char> = (0..symbols).flat_map(|i| [(b'a' + i as u8) as char; 2]).collect();
    w.shuffle(&mut rng);
    w.into_iter().collect()
}

/// K3,3 whose edges are subdivided, several at a time, through new or
/// existing vertices.
pub fn tangled_k33(ops: usize, seed: u64) -> StarGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); 6];
    let mut ends: Vec<(usize, usize)> = Vec::new();
    let mut half = 0;
    for a in 0..3 {
        for b in 3..6 {
            rot[a].push(half);
            rot[b].push(half + 1);
            ends.push((half, half + 1));
            half += 2;
        }
    }
    for _ in 0..ops {
        let fresh = rng.gen_bool(0.5);
        let w = if fresh {
            rot.push(Vec::new());
            rot.len() - 1
        } else {
            rng.gen_range(0..rot.len())
        };
        let m = ends.len();
        let first = rng.gen_range(0..m);
        let mut chosen = vec![first];
        if fresh {
            chosen.push((first + rng.gen_range(1..m)) % m);
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
        }
    }
    let mut raw = RawStarGraph::default();
    for (v, r) in rot.iter().enumerate() {
        let names: Vec<String> = r.iter().map(|h| format!("h{h}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        raw = raw.vertex(&format!("v{v}"), &refs);
    }
    for (x, y) in ends {
        raw = raw.edge(&format!("h{x}"), &format!("h{y}"));
    }
    raw.build().unwrap()
}
