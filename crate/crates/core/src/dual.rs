//! Dual cube complex of a finite wallspace: vertices are consistent
//! orientations, edges single-wall flips, cubes sets of pairwise crossing
//! walls flippable together.

use std::collections::{HashMap, VecDeque};

use fixedbitset::FixedBitSet;
use petgraph::graph::UnGraph;
use serde::{Deserialize, Serialize};

use crate::clique::max_clique;
use crate::error::{Error, Result};
use crate::hyp::Side;
use crate::wallspace::FiniteWallspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualLimits {
    pub max_walls: usize,
    /// Bound on cube visits while filling the histogram.
    pub max_cubes: u64,
}

impl Default for DualLimits {
    fn default() -> Self {
        DualLimits {
            max_walls: 20,
            max_cubes: 50_000_000,
        }
    }
}

/// An orientation: bit `k` set means the positive side of wall `k`.
pub type Orientation = u64;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubeComplexSkeleton {
    pub walls: Vec<String>,
    pub vertices: Vec<Orientation>,
    pub edges: Vec<(usize, usize)>,
    /// `cube_count_by_dim[d]` = number of `d`-cubes.
    pub cube_count_by_dim: Vec<u64>,
}

impl CubeComplexSkeleton {
    pub fn dimension(&self) -> usize {
        self.cube_count_by_dim.len().saturating_sub(1)
    }

    pub fn graph(&self) -> UnGraph<String, ()> {
        let mut g = UnGraph::new_undirected();
        let width = self.walls.len();
        let nodes: Vec<_> = self
            .vertices
            .iter()
            .map(|&v| g.add_node((0..width).map(|k| if v >> k & 1 == 1 { '+' } else { '-' }).collect()))
            .collect();
        for &(a, b) in &self.edges {
            g.add_edge(nodes[a], nodes[b], ());
        }
        g
    }
}

fn compatibility(ws: &FiniteWallspace) -> Vec<[u64; 2]> {
    // compat[2i + s][j] bit t: halfspace (i, s) meets halfspace (j, t)
    let n = ws.wall_count();
    let half = |k: usize, s: usize| ws.halfspace(k, if s == 1 { Side::Pos } else { Side::Neg });
    let mut out = vec![[0u64; 2]; 2 * n * n];
    for i in 0..n {
        for s in 0..2 {
            let hi = half(i, s);
            for j in 0..n {
                for (t, cell) in out[(2 * i + s) * n + j].iter_mut().enumerate() {
                    let mut x = hi.clone();
                    x.intersect_with(&half(j, t));
                    if x.count_ones(..) > 0 {
                        *cell = 1;
                    }
                }
            }
        }
    }
    out
}

pub fn dual_complex(ws: &FiniteWallspace) -> Result<CubeComplexSkeleton> {
    dual_complex_with(ws, DualLimits::default())
}

pub fn dual_complex_with(ws: &FiniteWallspace, limits: DualLimits) -> Result<CubeComplexSkeleton> {
    let n = ws.wall_count();
    if n > limits.max_walls.min(63) {
        return Err(Error::Resource {
            what: "walls in the dual construction".into(),
            limit: limits.max_walls.min(63) as u64,
            needed: n as u64,
        });
    }
    let compat = compatibility(ws);
    let ok = |i: usize, s: usize, j: usize, t: usize| compat[(2 * i + s) * n + j][t] == 1;
    // depth-first enumeration with pairwise pruning
    let mut vertices = Vec::new();
    let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
    while let Some((k, v)) = stack.pop() {
        if k == n {
            vertices.push(v);
            continue;
        }
        for s in [1usize, 0] {
            if (0..k).all(|j| ok(k, s, j, (v >> j & 1) as usize)) {
                stack.push((k + 1, v | (s as u64) << k));
            }
        }
    }
    vertices.sort_unstable();
    let index: HashMap<Orientation, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let mut edges = Vec::new();
    for (a, &v) in vertices.iter().enumerate() {
        for k in 0..n {
            if v >> k & 1 == 0 {
                if let Some(&b) = index.get(&(v | 1 << k)) {
                    edges.push((a, b));
                }
            }
        }
    }
    let crossing = ws.crossing_matrix();
    let mut hist: Vec<u64> = vec![0];
    let mut visits = 0u64;
    for &v in &vertices {
        let up: Vec<usize> = (0..n)
            .filter(|&k| v >> k & 1 == 0 && index.contains_key(&(v | 1 << k)))
            .collect();
        // every clique of `up` spans a cube with minimal corner v
        let mut chosen: Vec<usize> = Vec::new();
        count_cliques(&up, &crossing, 0, &mut chosen, &mut hist, &mut visits, limits.max_cubes)?;
    }
    Ok(CubeComplexSkeleton {
        walls: ws.walls().iter().map(|w| w.id.clone()).collect(),
        vertices,
        edges,
        cube_count_by_dim: hist,
    })
}

fn count_cliques(
    up: &[usize],
    crossing: &[Vec<bool>],
    start: usize,
    chosen: &mut Vec<usize>,
    hist: &mut Vec<u64>,
    visits: &mut u64,
    budget: u64,
) -> Result<()> {
    let d = chosen.len();
    if hist.len() <= d {
        hist.resize(d + 1, 0);
    }
    hist[d] += 1;
    *visits += 1;
    if *visits > budget {
        return Err(Error::Resource {
            what: "cubes in the dual complex".into(),
            limit: budget,
            needed: *visits,
        });
    }
    for k in start..up.len() {
        let w = up[k];
        if chosen.iter().all(|&c| crossing[c][w]) {
            chosen.push(w);
            count_cliques(up, crossing, k + 1, chosen, hist, visits, budget)?;
            chosen.pop();
        }
    }
    Ok(())
}

/// Size of a largest pairwise-crossing set of walls.
pub fn dimension(ws: &FiniteWallspace) -> usize {
    let m = ws.crossing_matrix();
    let adj = crate::clique::adjacency(ws.wall_count(), |i, j| m[i][j]);
    max_clique(&adj).len()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MedianViolation {
    pub triple: [usize; 3],
    /// All medians of the triple (empty or more than one).
    pub medians: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MedianVerdict {
    pub connected: bool,
    /// Graph distance equals Hamming distance of orientations.
    pub isometric: bool,
    pub violation: Option<MedianViolation>,
}

impl MedianVerdict {
    pub fn holds(&self) -> bool {
        self.connected && self.violation.is_none()
    }
}

/// Vertex count up to which distances are computed exactly.
pub const MEDIAN_DISTANCE_BUDGET: usize = 4096;
/// Vertex count up to which non-isometric skeletons are checked triple by
/// triple through the distance matrix.
pub const MEDIAN_BRUTE_BUDGET: usize = 160;

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<u32> {
    let mut d = vec![u32::MAX; adj.len()];
    d[s] = 0;
    let mut q = VecDeque::from([s]);
    while let Some(v) = q.pop_front() {
        for &w in &adj[v] {
            if d[w] == u32::MAX {
                d[w] = d[v] + 1;
                q.push_back(w);
            }
        }
    }
    d
}

/// Checks that every vertex triple has exactly one median.
pub fn median_check(skel: &CubeComplexSkeleton) -> Result<MedianVerdict> {
    let n = skel.vertices.len();
    if n > MEDIAN_DISTANCE_BUDGET {
        return Err(Error::Resource {
            what: "vertices for the median check".into(),
            limit: MEDIAN_DISTANCE_BUDGET as u64,
            needed: n as u64,
        });
    }
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in &skel.edges {
        adj[a].push(b);
        adj[b].push(a);
    }
    let dist: Vec<Vec<u32>> = (0..n).map(|s| bfs(&adj, s)).collect();
    let connected = n == 0 || dist[0].iter().all(|&d| d != u32::MAX);
    let v = &skel.vertices;
    let isometric = connected && (0..n).all(|a| (0..n).all(|b| dist[a][b] == (v[a] ^ v[b]).count_ones()));
    if !connected {
        return Ok(MedianVerdict {
            connected,
            isometric,
            violation: None,
        });
    }
    if isometric {
        // in an isometric subgraph of a cube the only candidate median is
        // the coordinatewise majority
        let width = skel.walls.len();
        let mut present = FixedBitSet::with_capacity(1usize << width);
        for &o in v {
            present.insert(o as usize);
        }
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    let m = (v[a] & v[b]) | (v[b] & v[c]) | (v[a] & v[c]);
                    if !present.contains(m as usize) {
                        return Ok(MedianVerdict {
                            connected,
                            isometric,
                            violation: Some(MedianViolation {
                                triple: [a, b, c],
                                medians: Vec::new(),
                            }),
                        });
                    }
                }
            }
        }
        return Ok(MedianVerdict {
            connected,
            isometric,
            violation: None,
        });
    }
    if n > MEDIAN_BRUTE_BUDGET {
        return Err(Error::Resource {
            what: "vertices for a brute-force median check".into(),
            limit: MEDIAN_BRUTE_BUDGET as u64,
            needed: n as u64,
        });
    }
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let medians: Vec<usize> = (0..n)
                    .filter(|&m| {
                        dist[a][m] + dist[m][b] == dist[a][b]
                            && dist[b][m] + dist[m][c] == dist[b][c]
                            && dist[a][m] + dist[m][c] == dist[a][c]
                    })
                    .collect();
                if medians.len() != 1 {
                    return Ok(MedianVerdict {
                        connected,
                        isometric,
                        violation: Some(MedianViolation {
                            triple: [a, b, c],
                            medians,
                        }),
                    });
                }
            }
        }
    }
    Ok(MedianVerdict {
        connected,
        isometric,
        violation: None,
    })
}
