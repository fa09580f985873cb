//! The space a hyperplane set lives in: a finite wallspace or a symbolic
//! family system.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::clique::{adjacency, max_clique};
use crate::error::{Error, Result};
use crate::family::{FamilyCount, FamilySystem, PairPattern};
use crate::hyp::{HypRef, Relation, Side, TailSide};
use crate::hypset::HypSet;
use crate::realize::{realize, RealizeLimits};
use crate::wallspace::FiniteWallspace;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Dimension {
    Finite(u32),
    Infinite,
}

impl Dimension {
    pub fn is_finite(self) -> bool {
        matches!(self, Dimension::Finite(_))
    }

    pub fn bound(self) -> Option<u32> {
        match self {
            Dimension::Finite(d) => Some(d),
            Dimension::Infinite => None,
        }
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Dimension::Finite(d) => write!(f, "{d}"),
            Dimension::Infinite => f.write_str("infinite"),
        }
    }
}

/// Largest pairwise-crossing set found at a horizon.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionWitness {
    pub horizon: u32,
    pub size: u32,
    pub clique: Vec<HypRef>,
}

/// Walls of a finite wallspace are addressed as `HypRef::wall(k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Ambient {
    Finite(FiniteWallspace),
    Symbolic(FamilySystem),
}

impl Ambient {
    pub fn is_symbolic(&self) -> bool {
        matches!(self, Ambient::Symbolic(_))
    }

    pub fn system(&self) -> Option<&FamilySystem> {
        match self {
            Ambient::Symbolic(s) => Some(s),
            Ambient::Finite(_) => None,
        }
    }

    fn wall_slot(ws: &FiniteWallspace, h: HypRef) -> Result<usize> {
        if h.family != 0 || h.index as usize >= ws.wall_count() {
            return Err(Error::OutOfBounds {
                hyp: h,
                bound: format!("{} walls", ws.wall_count()),
            });
        }
        Ok(h.index as usize)
    }

    pub fn relation(&self, a: HypRef, b: HypRef) -> Result<Relation> {
        match self {
            Ambient::Symbolic(s) => s.relation(a, b),
            Ambient::Finite(ws) => {
                let (x, y) = (Self::wall_slot(ws, a)?, Self::wall_slot(ws, b)?);
                if x == y {
                    return Err(Error::input("arguments", format!("{a} compared with itself")));
                }
                Ok(ws.relation_at(x, y))
            }
        }
    }

    pub fn crosses(&self, a: HypRef, b: HypRef) -> Result<bool> {
        Ok(self.relation(a, b)?.is_cross())
    }

    /// Halfspace of `w` containing `a`, `None` when they cross.
    pub fn side(&self, w: HypRef, a: HypRef) -> Result<Option<Side>> {
        Ok(self.relation(a, w)?.side_of_first_in_second())
    }

    pub fn separates(&self, w: HypRef, a: HypRef, b: HypRef) -> Result<bool> {
        if w == a || w == b || a == b {
            return Err(Error::input("arguments", "separates needs three distinct hyperplanes"));
        }
        Ok(match (self.side(w, a)?, self.side(w, b)?) {
            (Some(x), Some(y)) => x != y,
            _ => false,
        })
    }

    /// Eventual position of family `fam` relative to `h`; finite ambients
    /// have no infinite families.
    pub fn tail_side(&self, h: HypRef, fam: u32) -> Result<TailSide> {
        match self {
            Ambient::Symbolic(s) => s.tail_side(h, fam),
            Ambient::Finite(_) => Err(Error::input("fam", "finite wallspaces have no family tails")),
        }
    }

    /// Every hyperplane of the ambient.
    pub fn universe(&self) -> HypSet {
        match self {
            Ambient::Finite(ws) => HypSet::rect((0, Some(1)), (0, Some(ws.wall_count() as u32))),
            Ambient::Symbolic(s) => HypSet::families(s.family_count().as_option()),
        }
    }

    pub fn contains(&self, h: HypRef) -> bool {
        self.universe().contains(h)
    }

    /// Hyperplanes below `horizon`, in canonical order.
    pub fn members_below(&self, horizon: u32) -> Vec<HypRef> {
        match self {
            Ambient::Finite(ws) => (0..ws.wall_count() as u32).map(HypRef::wall).collect(),
            Ambient::Symbolic(s) => s.members_below(horizon),
        }
    }

    /// Exact dimension where the rule determines it.
    pub fn dimension(&self) -> Result<Dimension> {
        match self {
            Ambient::Finite(_) => Ok(Dimension::Finite(self.dimension_at(2)?.size)),
            Ambient::Symbolic(FamilySystem::Grid { dim }) => Ok(Dimension::Finite(*dim)),
            Ambient::Symbolic(FamilySystem::Corrigendum { families }) => Ok(match families {
                FamilyCount::Finite(n) => Dimension::Finite(*n),
                FamilyCount::Unbounded => Dimension::Infinite,
            }),
            Ambient::Symbolic(s @ FamilySystem::Table(t)) => {
                // past every threshold the pattern is uniform, so one
                // generous horizon settles it
                let declared = t.declared();
                if declared
                    .iter()
                    .any(|(_, _, p)| matches!(p, PairPattern::Windowed { .. }))
                {
                    let cutoff = s.index_bound().unwrap_or(2).max(2);
                    return Ok(Dimension::Finite(self.dimension_at(cutoff)?.size));
                }
                let horizon = (2 * s.max_param() + 2 * t.families() + 4).max(4);
                Ok(Dimension::Finite(self.dimension_at(horizon)?.size))
            }
        }
    }

    /// Maximum pairwise-crossing set among the hyperplanes below `horizon`.
    pub fn dimension_at(&self, horizon: u32) -> Result<DimensionWitness> {
        let walls = self.members_below(horizon);
        let n = walls.len();
        let mut cross = vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                let c = self.crosses(walls[i], walls[j])?;
                cross[i * n + j] = c;
                cross[j * n + i] = c;
            }
        }
        let adj = adjacency(n, |i, j| cross[i * n + j]);
        let clique: Vec<HypRef> = max_clique(&adj).into_iter().map(|k| walls[k]).collect();
        Ok(DimensionWitness {
            horizon,
            size: clique.len() as u32,
            clique,
        })
    }

    /// Finite wallspace realizing every relation below `horizon`.
    pub fn realize_truncation(&self, horizon: u32) -> Result<FiniteWallspace> {
        self.realize_truncation_with(horizon, RealizeLimits::default())
    }

    pub fn realize_truncation_with(&self, horizon: u32, limits: RealizeLimits) -> Result<FiniteWallspace> {
        if horizon < 2 {
            return Err(Error::input("horizon", "horizon must be at least 2"));
        }
        match self {
            Ambient::Finite(ws) => Ok(ws.clone()),
            Ambient::Symbolic(s) => realize(&s.members_below(horizon), |a, b| s.relation(a, b), limits),
        }
    }

    pub fn describe(&self) -> String {
        match self {
            Ambient::Finite(ws) => format!("wallspace:{}x{}", ws.points().len(), ws.wall_count()),
            Ambient::Symbolic(s) => s.to_string(),
        }
    }
}
