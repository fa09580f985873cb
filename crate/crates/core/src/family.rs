//! Symbolic systems of countably many hyperplanes arranged in chain
//! families, with exact rule-based answers to crossing, separation and
//! eventual ("all but finitely many") queries.
//!
//! Every family `n` is a chain `H^n_0, H^n_1, ...` with `(H^n_j)^+ ⊂ (H^n_i)^+`
//! for `i < j`: the positive side points towards larger indices. The
//! relation between two different families is described by a
//! [`PairPattern`], which fixes both the crossing pattern and the nesting of
//! non-crossing pairs.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyp::{HypRef, Relation, Side, TailSide};

/// How the members of a higher family `hi` meet the members of a lower
/// family `lo` (`lo < hi`). Below, `hi_i` is `H^hi_i` and `lo_j` is `H^lo_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "pattern", rename_all = "snake_case")]
pub enum PairPattern {
    /// Every `hi_i` crosses every `lo_j`.
    Tied,
    /// `hi_i` crosses `lo_j` iff `j > threshold`; otherwise `hi_i^+ ⊂ lo_j^+`.
    Above { threshold: u32 },
    /// `hi_i` crosses `lo_j` iff `j <= i + offset`; otherwise `lo_j^+ ⊂ hi_i^+`.
    Staircase { offset: u32 },
    /// `hi_i` crosses `lo_j` iff `j <= threshold` (never, if `threshold` is
    /// negative); otherwise `lo_j^+ ⊂ hi_i^+`.
    Initial { threshold: i64 },
    /// No crossings, `hi_i^+ ∩ lo_j^+ = ∅`.
    Facing,
    /// Explicit crossing matrix `cross[i][j]` for `i, j < cutoff`; nothing is
    /// declared beyond the window.
    Windowed { cutoff: u32, cross: Vec<Vec<bool>> },
}

impl PairPattern {
    fn threshold_bound(&self) -> u32 {
        match self {
            PairPattern::Above { threshold } => threshold + 1,
            PairPattern::Initial { threshold } => (*threshold + 1).max(0) as u32,
            _ => 0,
        }
    }

    fn param(&self) -> u32 {
        match self {
            PairPattern::Above { threshold } => *threshold,
            PairPattern::Staircase { offset } => *offset,
            PairPattern::Initial { threshold } => (*threshold).max(0) as u32,
            _ => 0,
        }
    }

    /// Relation between `hi_i` (first) and `lo_j` (second).
    fn relation(&self, i: u32, j: u32) -> Option<Relation> {
        // hi^+ ⊂ lo^+ / lo^+ ⊂ hi^+, written from hi's perspective
        let hi_inside = Relation::inclusion(Side::Pos, Side::Pos);
        let lo_inside = Relation::inclusion(Side::Pos, Side::Pos).flip();
        Some(match self {
            PairPattern::Tied => Relation::Cross,
            PairPattern::Above { threshold } => {
                if j > *threshold {
                    Relation::Cross
                } else {
                    hi_inside
                }
            }
            PairPattern::Staircase { offset } => {
                if (j as u64) <= i as u64 + *offset as u64 {
                    Relation::Cross
                } else {
                    lo_inside
                }
            }
            PairPattern::Initial { threshold } => {
                if (j as i64) <= *threshold {
                    Relation::Cross
                } else {
                    lo_inside
                }
            }
            PairPattern::Facing => Relation::Disjoint {
                a: Side::Pos,
                b: Side::Pos,
            },
            PairPattern::Windowed { cutoff, cross } => {
                if i >= *cutoff || j >= *cutoff {
                    return None;
                }
                let (i, j) = (i as usize, j as usize);
                if cross[i][j] {
                    return Some(Relation::Cross);
                }
                // hi_i sits on the side of lo_j holding the lo members it crosses
                let hi_in_lo = if cross[i][..j].iter().any(|&c| c) {
                    Side::Neg
                } else {
                    Side::Pos
                };
                let lo_in_hi = if cross[..i].iter().any(|row| row[j]) {
                    Side::Neg
                } else if cross[i + 1..].iter().any(|row| row[j]) {
                    Side::Pos
                } else {
                    Side::Neg
                };
                Relation::Disjoint {
                    a: -lo_in_hi,
                    b: -hi_in_lo,
                }
            }
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyCount {
    Finite(u32),
    Unbounded,
}

impl FamilyCount {
    pub fn as_option(self) -> Option<u32> {
        match self {
            FamilyCount::Finite(n) => Some(n),
            FamilyCount::Unbounded => None,
        }
    }
}

/// Explicit per-pair patterns for user-described instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableTailRule {
    families: u32,
    /// `pairs[k]` describes `(lo, hi)` for the k-th pair in `lo < hi`
    /// lexicographic order.
    pairs: Vec<PairPattern>,
    index_bound: Option<u32>,
}

impl TableTailRule {
    /// Pair patterns default to [`PairPattern::Tied`].
    pub fn new(families: u32, patterns: impl IntoIterator<Item = (u32, u32, PairPattern)>) -> Result<Self> {
        if families == 0 {
            return Err(Error::input("families", "a table rule needs at least one family"));
        }
        let n = families as usize;
        let mut pairs = vec![PairPattern::Tied; n * (n - 1) / 2];
        for (k, (a, b, p)) in patterns.into_iter().enumerate() {
            let (lo, hi) = (a.min(b), a.max(b));
            if lo == hi || hi >= families {
                return Err(Error::input(
                    format!("pairs[{k}]"),
                    format!("invalid family pair ({a}, {b})"),
                ));
            }
            if let PairPattern::Windowed { cutoff, cross } = &p {
                if cross.len() != *cutoff as usize || cross.iter().any(|r| r.len() != *cutoff as usize) {
                    return Err(Error::input(
                        format!("pairs[{k}].cross"),
                        "matrix must be cutoff x cutoff",
                    ));
                }
            }
            pairs[pair_slot(n, lo as usize, hi as usize)] = p;
        }
        let index_bound = pairs
            .iter()
            .filter_map(|p| match p {
                PairPattern::Windowed { cutoff, .. } => Some(*cutoff),
                _ => None,
            })
            .min();
        Ok(TableTailRule {
            families,
            pairs,
            index_bound,
        })
    }

    pub fn families(&self) -> u32 {
        self.families
    }

    pub fn pattern(&self, lo: u32, hi: u32) -> &PairPattern {
        &self.pairs[pair_slot(self.families as usize, lo as usize, hi as usize)]
    }

    /// All `(lo, hi, pattern)` triples that are not the default.
    pub fn declared(&self) -> Vec<(u32, u32, PairPattern)> {
        let mut out = Vec::new();
        for lo in 0..self.families {
            for hi in lo + 1..self.families {
                let p = self.pattern(lo, hi);
                if *p != PairPattern::Tied {
                    out.push((lo, hi, p.clone()));
                }
            }
        }
        out
    }
}

fn pair_slot(n: usize, lo: usize, hi: usize) -> usize {
    lo * (2 * n - lo - 1) / 2 + (hi - lo - 1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum FamilySystem {
    /// Standard cubulation of Euclidean `dim`-space: one chain per axis,
    /// different axes always cross.
    Grid {
        dim: u32,
    },
    /// `H^m_i` crosses `H^n_j` (`n < m`) iff `j > m`.
    Corrigendum {
        families: FamilyCount,
    },
    Table(TableTailRule),
}

impl fmt::Display for FamilySystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySystem::Grid { dim } => write!(f, "grid:{dim}"),
            FamilySystem::Corrigendum {
                families: FamilyCount::Finite(n),
            } => write!(f, "corrigendum:{n}"),
            FamilySystem::Corrigendum {
                families: FamilyCount::Unbounded,
            } => write!(f, "corrigendum:inf"),
            FamilySystem::Table(t) => write!(f, "table:{}", t.families),
        }
    }
}

impl FamilySystem {
    pub fn family_count(&self) -> FamilyCount {
        match self {
            FamilySystem::Grid { dim } => FamilyCount::Finite(*dim),
            FamilySystem::Corrigendum { families } => *families,
            FamilySystem::Table(t) => FamilyCount::Finite(t.families),
        }
    }

    pub fn index_bound(&self) -> Option<u32> {
        match self {
            FamilySystem::Table(t) => t.index_bound,
            _ => None,
        }
    }

    pub fn check(&self, h: HypRef) -> Result<()> {
        let fam_ok = match self.family_count() {
            FamilyCount::Finite(n) => h.family < n,
            FamilyCount::Unbounded => true,
        };
        let idx_ok = self.index_bound().is_none_or(|b| h.index < b);
        if fam_ok && idx_ok {
            Ok(())
        } else {
            Err(Error::OutOfBounds {
                hyp: h,
                bound: format!("{self}"),
            })
        }
    }

    /// Pattern between families `lo < hi`.
    pub fn pattern(&self, lo: u32, hi: u32) -> PairPattern {
        debug_assert!(lo < hi);
        match self {
            FamilySystem::Grid { .. } => PairPattern::Tied,
            FamilySystem::Corrigendum { .. } => PairPattern::Above { threshold: hi },
            FamilySystem::Table(t) => t.pattern(lo, hi).clone(),
        }
    }

    /// Relation between two distinct hyperplanes.
    pub fn relation(&self, a: HypRef, b: HypRef) -> Result<Relation> {
        self.check(a)?;
        self.check(b)?;
        if a == b {
            return Err(Error::input("arguments", format!("{a} compared with itself")));
        }
        if a.family == b.family {
            // a_i, b_j with i < j: b^+ ⊂ a^+
            return Ok(if a.index < b.index {
                Relation::inclusion(Side::Pos, Side::Pos).flip()
            } else {
                Relation::inclusion(Side::Pos, Side::Pos)
            });
        }
        let (hi, lo, swapped) = if a.family > b.family {
            (a, b, false)
        } else {
            (b, a, true)
        };
        let r = self
            .pattern(lo.family, hi.family)
            .relation(hi.index, lo.index)
            .ok_or_else(|| Error::OutOfBounds {
                hyp: if hi.index >= lo.index { hi } else { lo },
                bound: "declared window".into(),
            })?;
        Ok(if swapped { r.flip() } else { r })
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

    /// Index from which the members of `fam` all stand in the same relation
    /// to `h`, or `None` if the rule does not declare it.
    pub fn tail_stabilization(&self, h: HypRef, fam: u32) -> Option<u32> {
        if h.family == fam {
            return Some(h.index + 1);
        }
        let (lo, hi) = (h.family.min(fam), h.family.max(fam));
        let p = self.pattern(lo, hi);
        match p {
            PairPattern::Windowed { .. } => None,
            PairPattern::Staircase { offset } if h.family == hi => Some(h.index.saturating_add(offset) + 1),
            PairPattern::Staircase { offset } => Some(h.index.saturating_sub(offset)),
            _ => Some(p.threshold_bound()),
        }
    }

    /// Eventual position of the members of family `fam` relative to `h`.
    pub fn tail_side(&self, h: HypRef, fam: u32) -> Result<TailSide> {
        self.check(h)?;
        self.check(HypRef::new(fam, 0))?;
        let Some(k) = self.tail_stabilization(h, fam) else {
            return Ok(TailSide::Unknown);
        };
        Ok(match self.relation(HypRef::new(fam, k), h)? {
            Relation::Cross => TailSide::Cross,
            r => TailSide::Side(r.side_of_first_in_second().expect("non-crossing")),
        })
    }

    /// Whether `h` crosses all but finitely many members of `fam`.
    pub fn cofinitely_crosses(&self, h: HypRef, fam: u32) -> Result<crate::hyp::Decided> {
        if h.family == fam {
            return Err(Error::input("h", format!("{h} belongs to family {fam}")));
        }
        Ok(match self.tail_side(h, fam)? {
            TailSide::Cross => crate::hyp::Decided::True,
            TailSide::Side(_) => crate::hyp::Decided::False,
            TailSide::Unknown => crate::hyp::Decided::Unknown,
        })
    }

    /// `(k, t)` such that `tail_side(H^g_i, f) = t` for every `i >= k`, or
    /// `None` if undeclared.
    pub fn family_tail_behavior(&self, g: u32, f: u32) -> Result<Option<(u32, TailSide)>> {
        if g == f {
            return Ok(Some((0, TailSide::Side(Side::Pos))));
        }
        let (lo, hi) = (g.min(f), g.max(f));
        let p = self.pattern(lo, hi);
        if matches!(p, PairPattern::Windowed { .. }) {
            return Ok(None);
        }
        let k = p.threshold_bound();
        let t = self.tail_side(HypRef::new(g, k), f)?;
        Ok(Some((k, t)))
    }

    /// Largest threshold parameter in the rule; indices beyond a few times
    /// this value behave uniformly.
    pub fn max_param(&self) -> u32 {
        match self {
            FamilySystem::Grid { .. } => 0,
            FamilySystem::Corrigendum { families } => families.as_option().unwrap_or(0),
            FamilySystem::Table(t) => t.pairs.iter().map(PairPattern::param).max().unwrap_or(0),
        }
    }

    /// Hyperplanes with index below `horizon` in every family (the first
    /// `horizon` families when there are infinitely many), in
    /// `(family, index)` order.
    pub fn members_below(&self, horizon: u32) -> Vec<HypRef> {
        let fams = match self.family_count() {
            FamilyCount::Finite(n) => n,
            FamilyCount::Unbounded => horizon,
        };
        let idx = self.index_bound().map_or(horizon, |b| b.min(horizon));
        (0..fams)
            .flat_map(|n| (0..idx).map(move |i| HypRef::new(n, i)))
            .collect()
    }

    /// Checks the halfspace-nesting axioms on every triple of hyperplanes
    /// below `window`; returns the first conflicting triple.
    pub fn consistency_conflict(&self, window: u32) -> Result<Option<[HypRef; 3]>> {
        let walls = self.members_below(window);
        crate::realize::inconsistent_triple(&walls, |a, b| self.relation(a, b))
    }
}
