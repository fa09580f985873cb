//! Finite wallspaces: a finite point set and walls given as bipartitions.
//!
//! Every higher layer is cross-checked against the predicates here, so
//! they are computed straight from point sets with no caching.

use std::collections::{HashMap, HashSet};

use fixedbitset::FixedBitSet;
use petgraph::graph::UnGraph;

use crate::error::{Error, Result};
use crate::hyp::{Relation, Side};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wall {
    pub id: String,
    /// Indices into the owning wallspace's point list.
    pub positive: FixedBitSet,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteWallspace {
    points: Vec<String>,
    walls: Vec<Wall>,
    wall_index: HashMap<String, usize>,
}

impl FiniteWallspace {
    /// Builds a wallspace from point ids and `(wall id, positive point ids)`.
    ///
    /// Rejects duplicate point or wall ids, empty or full positive sides and
    /// repeated bipartitions (`W` and its complement count as the same wall).
    pub fn new<P, W, I>(points: P, walls: W) -> Result<Self>
    where
        P: IntoIterator,
        P::Item: Into<String>,
        W: IntoIterator<Item = (String, I)>,
        I: IntoIterator,
        I::Item: AsRef<str>,
    {
        let points: Vec<String> = points.into_iter().map(Into::into).collect();
        let mut point_index = HashMap::new();
        for (k, p) in points.iter().enumerate() {
            if point_index.insert(p.clone(), k).is_some() {
                return Err(Error::input(
                    format!("points[{k}]"),
                    format!("duplicate point id `{p}`"),
                ));
            }
        }
        let n = points.len();
        let mut built = Vec::new();
        let mut wall_index = HashMap::new();
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        for (w, (id, members)) in walls.into_iter().enumerate() {
            let mut positive = FixedBitSet::with_capacity(n);
            for (m, p) in members.into_iter().enumerate() {
                let p = p.as_ref();
                let k = *point_index
                    .get(p)
                    .ok_or_else(|| Error::input(format!("walls[{w}].positive[{m}]"), format!("unknown point `{p}`")))?;
                positive.insert(k);
            }
            let count = positive.count_ones(..);
            if count == 0 || count == n {
                return Err(Error::input(
                    format!("walls[{w}]"),
                    format!("wall `{id}` does not split the point set"),
                ));
            }
            if wall_index.insert(id.clone(), w).is_some() {
                return Err(Error::input(
                    format!("walls[{w}].id"),
                    format!("duplicate wall id `{id}`"),
                ));
            }
            // normalise so that point 0 is on the negative side
            let mut key = positive.clone();
            if key.contains(0) {
                key.toggle_range(..);
            }
            if !seen.insert(key.as_slice().to_vec()) {
                return Err(Error::input(
                    format!("walls[{w}]"),
                    format!("wall `{id}` repeats an earlier bipartition"),
                ));
            }
            built.push(Wall { id, positive });
        }
        Ok(FiniteWallspace {
            points,
            walls: built,
            wall_index,
        })
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn walls(&self) -> &[Wall] {
        &self.walls
    }

    pub fn wall_count(&self) -> usize {
        self.walls.len()
    }

    pub fn index_of(&self, id: &str) -> Result<usize> {
        self.wall_index
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownWall(id.to_string()))
    }

    /// Point set of the halfspace `wall^side`.
    pub fn halfspace(&self, wall: usize, side: Side) -> FixedBitSet {
        let mut h = self.walls[wall].positive.clone();
        if side == Side::Neg {
            h.toggle_range(..);
        }
        h
    }

    fn quarter_empty(&self, a: usize, x: Side, b: usize, y: Side) -> bool {
        let ha = self.halfspace(a, x);
        let hb = self.halfspace(b, y);
        ha.is_disjoint(&hb)
    }

    /// Relation of walls `a` and `b` (by index), read off the four quarters.
    pub fn relation_at(&self, a: usize, b: usize) -> Relation {
        for x in [Side::Pos, Side::Neg] {
            for y in [Side::Pos, Side::Neg] {
                if self.quarter_empty(a, x, b, y) {
                    return Relation::Disjoint { a: x, b: y };
                }
            }
        }
        Relation::Cross
    }

    /// Halfspace of `w` containing the wall `a`, or `None` if they cross.
    pub fn side_at(&self, w: usize, a: usize) -> Option<Side> {
        self.relation_at(a, w).side_of_first_in_second()
    }

    pub fn crosses_at(&self, a: usize, b: usize) -> bool {
        a != b && self.relation_at(a, b).is_cross()
    }

    pub fn separates_at(&self, w: usize, a: usize, b: usize) -> bool {
        if w == a || w == b {
            return false;
        }
        match (self.side_at(w, a), self.side_at(w, b)) {
            (Some(sa), Some(sb)) => sa != sb,
            _ => false,
        }
    }

    pub fn facing_triple_at(&self, a: usize, b: usize, c: usize) -> bool {
        if self.crosses_at(a, b) || self.crosses_at(a, c) || self.crosses_at(b, c) {
            return false;
        }
        !self.separates_at(a, b, c) && !self.separates_at(b, a, c) && !self.separates_at(c, a, b)
    }

    fn distinct(&self, ids: &[&str]) -> Result<Vec<usize>> {
        let idx = ids.iter().map(|id| self.index_of(id)).collect::<Result<Vec<_>>>()?;
        for i in 0..idx.len() {
            for j in i + 1..idx.len() {
                if idx[i] == idx[j] {
                    return Err(Error::input(
                        format!("argument {j}"),
                        format!("wall `{}` repeated", ids[j]),
                    ));
                }
            }
        }
        Ok(idx)
    }

    pub fn crosses(&self, a: &str, b: &str) -> Result<bool> {
        let i = self.distinct(&[a, b])?;
        Ok(self.crosses_at(i[0], i[1]))
    }

    pub fn separates(&self, w: &str, a: &str, b: &str) -> Result<bool> {
        let i = self.distinct(&[w, a, b])?;
        Ok(self.separates_at(i[0], i[1], i[2]))
    }

    pub fn facing_triple(&self, a: &str, b: &str, c: &str) -> Result<bool> {
        let i = self.distinct(&[a, b, c])?;
        Ok(self.facing_triple_at(i[0], i[1], i[2]))
    }

    /// Undirected graph on wall ids with an edge for every crossing pair.
    pub fn crossing_graph(&self) -> UnGraph<String, ()> {
        let mut g = UnGraph::new_undirected();
        let nodes: Vec<_> = self.walls.iter().map(|w| g.add_node(w.id.clone())).collect();
        for a in 0..self.walls.len() {
            for b in a + 1..self.walls.len() {
                if self.crosses_at(a, b) {
                    g.add_edge(nodes[a], nodes[b], ());
                }
            }
        }
        g
    }

    /// Crossing adjacency as a boolean matrix, indexed by wall position.
    pub fn crossing_matrix(&self) -> Vec<Vec<bool>> {
        let n = self.walls.len();
        (0..n)
            .map(|a| (0..n).map(|b| self.crosses_at(a, b)).collect())
            .collect()
    }
}
