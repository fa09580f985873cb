//! Point-set realisations of abstract wall relations.
//!
//! A relation table (cross, or one empty quarter per pair) that satisfies
//! the halfspace-nesting axioms on every triple is realised by taking as
//! points consistent orientations: one halfspace per wall, no two chosen
//! halfspaces disjoint.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hyp::{HypRef, Relation, Side};
use crate::wallspace::FiniteWallspace;

/// Limits for [`realize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RealizeLimits {
    /// Above this many consistent orientations, fall back to witness points.
    pub full_enumeration_points: usize,
    /// Refuse to realise more walls than this.
    pub max_walls: usize,
}

impl Default for RealizeLimits {
    fn default() -> Self {
        RealizeLimits {
            full_enumeration_points: 4096,
            max_walls: 400,
        }
    }
}

/// First triple violating transitivity of halfspace inclusion.
pub fn inconsistent_triple<F>(walls: &[HypRef], rel: F) -> Result<Option<[HypRef; 3]>>
where
    F: Fn(HypRef, HypRef) -> Result<Relation>,
{
    let n = walls.len();
    let mut table = vec![Relation::Cross; n * n];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                table[a * n + b] = rel(walls[a], walls[b])?;
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a == b || table[a * n + b].is_cross() {
                continue;
            }
            for x in [Side::Pos, Side::Neg] {
                for y in [Side::Pos, Side::Neg] {
                    if !table[a * n + b].includes(x, y) {
                        continue;
                    }
                    for c in 0..n {
                        if c == a || c == b {
                            continue;
                        }
                        for z in [Side::Pos, Side::Neg] {
                            if table[b * n + c].includes(y, z) && !table[a * n + c].includes(x, z) {
                                return Ok(Some([walls[a], walls[b], walls[c]]));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

struct Table {
    n: usize,
    rel: Vec<Relation>,
}

impl Table {
    fn get(&self, a: usize, b: usize) -> Relation {
        self.rel[a * self.n + b]
    }

    /// Whether `a^x` and `b^y` may both be chosen.
    fn compatible(&self, a: usize, x: Side, b: usize, y: Side) -> bool {
        a == b && x == y || a != b && self.get(a, b) != (Relation::Disjoint { a: x, b: y })
    }

    /// Adds `w^s` and everything it forces; `false` on conflict.
    fn force(&self, orient: &mut [Option<Side>], w: usize, s: Side) -> bool {
        let mut stack = vec![(w, s)];
        while let Some((w, s)) = stack.pop() {
            match orient[w] {
                Some(t) if t == s => continue,
                Some(_) => return false,
                None => orient[w] = Some(s),
            }
            for v in 0..self.n {
                if v == w {
                    continue;
                }
                for t in [Side::Pos, Side::Neg] {
                    if self.get(w, v).includes(s, t) {
                        stack.push((v, t));
                    }
                }
            }
        }
        true
    }

    fn extend(&self, seed: &[(usize, Side)]) -> Option<Vec<Side>> {
        let mut orient = vec![None; self.n];
        for &(w, s) in seed {
            if !self.force(&mut orient, w, s) {
                return None;
            }
        }
        for w in 0..self.n {
            if orient[w].is_none() && !self.force(&mut orient, w, Side::Neg) {
                return None;
            }
        }
        Some(orient.into_iter().map(Option::unwrap).collect())
    }

    /// All consistent orientations, or `None` once `limit` is exceeded.
    fn enumerate(&self, limit: usize) -> Option<Vec<Vec<Side>>> {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(self.n);
        if self.backtrack(&mut cur, &mut out, limit) {
            Some(out)
        } else {
            None
        }
    }

    fn backtrack(&self, cur: &mut Vec<Side>, out: &mut Vec<Vec<Side>>, limit: usize) -> bool {
        let w = cur.len();
        if w == self.n {
            out.push(cur.clone());
            return out.len() <= limit;
        }
        for s in [Side::Neg, Side::Pos] {
            if (0..w).all(|v| self.compatible(v, cur[v], w, s)) {
                cur.push(s);
                let ok = self.backtrack(cur, out, limit);
                cur.pop();
                if !ok {
                    return false;
                }
            }
        }
        true
    }
}

/// Realises the relations among `walls` as a finite wallspace whose walls
/// are named `H{family}_{index}` in the given order.
pub fn realize<F>(walls: &[HypRef], rel: F, limits: RealizeLimits) -> Result<FiniteWallspace>
where
    F: Fn(HypRef, HypRef) -> Result<Relation>,
{
    let n = walls.len();
    if n > limits.max_walls {
        return Err(Error::Resource {
            what: "walls to realise".into(),
            limit: limits.max_walls as u64,
            needed: n as u64,
        });
    }
    if let Some(triple) = inconsistent_triple(walls, &rel)? {
        return Err(Error::Realization { triple });
    }
    let mut rel_table = vec![Relation::Cross; n * n];
    for a in 0..n {
        for b in 0..n {
            if a != b {
                rel_table[a * n + b] = rel(walls[a], walls[b])?;
            }
        }
    }
    let table = Table { n, rel: rel_table };
    let orientations = match table.enumerate(limits.full_enumeration_points) {
        Some(all) => all,
        None => witness_orientations(&table, walls)?,
    };
    let points: Vec<String> = (0..orientations.len()).map(|k| format!("p{k}")).collect();
    let wall_defs = (0..n).map(|w| {
        let pos: Vec<&str> = orientations
            .iter()
            .enumerate()
            .filter(|(_, o)| o[w] == Side::Pos)
            .map(|(k, _)| points[k].as_str())
            .collect();
        (format!("{}", walls[w]), pos)
    });
    FiniteWallspace::new(points.iter().cloned(), wall_defs.collect::<Vec<_>>())
}

/// One orientation per allowed quarter of every wall pair (and per side of
/// every wall), which suffices to reproduce every relation.
fn witness_orientations(table: &Table, walls: &[HypRef]) -> Result<Vec<Vec<Side>>> {
    let mut set = BTreeSet::new();
    let fail = |a: usize, b: usize| Error::Realization {
        triple: [walls[a], walls[b], walls[b]],
    };
    for a in 0..table.n {
        for x in [Side::Pos, Side::Neg] {
            set.insert(table.extend(&[(a, x)]).ok_or_else(|| fail(a, a))?);
            for b in a + 1..table.n {
                for y in [Side::Pos, Side::Neg] {
                    if table.compatible(a, x, b, y) {
                        set.insert(table.extend(&[(a, x), (b, y)]).ok_or_else(|| fail(a, b))?);
                    }
                }
            }
        }
    }
    Ok(set.into_iter().collect())
}
