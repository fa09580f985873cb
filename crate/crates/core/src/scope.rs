//! A horizon-bounded view of an ambient: the finite window of hyperplanes
//! every set computation runs on, with its pairwise relations cached as
//! bitsets.

use fixedbitset::FixedBitSet;

use crate::ambient::Ambient;
use crate::error::{Error, Result};
use crate::family::FamilyCount;
use crate::hyp::{HypRef, Side};
use crate::hypset::HypSet;

/// Hard cap on the number of window members.
pub const MAX_WINDOW: usize = 20_000;

/// Target member count when the family count is unbounded and the family
/// range of the window has to be chosen.
pub const FAMILY_BUDGET: u32 = 4096;

#[derive(Debug)]
pub struct Scope<'a> {
    ambient: &'a Ambient,
    horizon: u32,
    fams: u32,
    idx: u32,
    fam_cap: Option<u32>,
    idx_cap: Option<u32>,
    // trailing indices whose membership may depend on members past the window
    margin: u32,
    members: Vec<HypRef>,
    pos: Vec<FixedBitSet>,
    neg: Vec<FixedBitSet>,
    cross: Vec<FixedBitSet>,
}

impl<'a> Scope<'a> {
    pub fn new(ambient: &'a Ambient, horizon: u32) -> Result<Self> {
        Self::with_family_budget(ambient, horizon, FAMILY_BUDGET)
    }

    pub fn with_family_budget(ambient: &'a Ambient, horizon: u32, budget: u32) -> Result<Self> {
        if horizon < 2 {
            return Err(Error::input("horizon", "horizon must be at least 2"));
        }
        let (fams, idx, fam_cap, idx_cap, margin) = match ambient {
            Ambient::Finite(ws) => (1, ws.wall_count() as u32, None, None, 0),
            Ambient::Symbolic(s) => {
                let (idx, idx_cap, margin) = match s.index_bound() {
                    Some(b) if b <= horizon => (b, Some(b), 0),
                    _ => (horizon, Some(horizon), (s.max_param() + 2).min(horizon / 4)),
                };
                let (fams, fam_cap) = match s.family_count() {
                    FamilyCount::Finite(n) if n <= horizon => (n, None),
                    FamilyCount::Finite(_) => (horizon, Some(horizon)),
                    FamilyCount::Unbounded => {
                        let f = horizon.min((budget / idx.max(1)).max(4));
                        (f, Some(f))
                    }
                };
                (fams, idx, fam_cap, idx_cap, margin)
            }
        };
        let n = fams as usize * idx as usize;
        if n > MAX_WINDOW {
            return Err(Error::Resource {
                what: "window members".into(),
                limit: MAX_WINDOW as u64,
                needed: n as u64,
            });
        }
        let members: Vec<HypRef> = (0..fams)
            .flat_map(|f| (0..idx).map(move |i| HypRef::new(f, i)))
            .collect();
        let mut pos = vec![FixedBitSet::with_capacity(n); n];
        let mut neg = vec![FixedBitSet::with_capacity(n); n];
        let mut cross = vec![FixedBitSet::with_capacity(n); n];
        for a in 0..n {
            for b in a + 1..n {
                let r = ambient.relation(members[a], members[b])?;
                match r.side_of_first_in_second() {
                    None => {
                        cross[a].insert(b);
                        cross[b].insert(a);
                    }
                    Some(s) => {
                        let s_back = r.flip().side_of_first_in_second().expect("non-crossing");
                        if s == Side::Pos {
                            pos[b].insert(a)
                        } else {
                            neg[b].insert(a)
                        }
                        if s_back == Side::Pos {
                            pos[a].insert(b)
                        } else {
                            neg[a].insert(b)
                        }
                    }
                }
            }
        }
        Ok(Scope {
            ambient,
            horizon,
            fams,
            idx,
            fam_cap,
            idx_cap,
            margin,
            members,
            pos,
            neg,
            cross,
        })
    }

    pub fn ambient(&self) -> &'a Ambient {
        self.ambient
    }

    pub fn horizon(&self) -> u32 {
        self.horizon
    }

    /// `(families, indices)` covered by the window.
    pub fn limits(&self) -> (u32, u32) {
        (self.fams, self.idx)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[HypRef] {
        &self.members
    }

    pub fn member(&self, k: usize) -> HypRef {
        self.members[k]
    }

    pub fn slot(&self, h: HypRef) -> Option<usize> {
        (h.family < self.fams && h.index < self.idx).then(|| (h.family * self.idx + h.index) as usize)
    }

    /// Window members on the `side` halfspace of member `w`.
    pub fn side_bits(&self, w: usize, side: Side) -> &FixedBitSet {
        match side {
            Side::Pos => &self.pos[w],
            Side::Neg => &self.neg[w],
        }
    }

    pub fn cross_bits(&self, w: usize) -> &FixedBitSet {
        &self.cross[w]
    }

    pub fn crosses_at(&self, a: usize, b: usize) -> bool {
        self.cross[a].contains(b)
    }

    /// Side of `w` holding `a`, `None` when they cross (or `a == w`).
    pub fn side_at(&self, w: usize, a: usize) -> Option<Side> {
        if self.pos[w].contains(a) {
            Some(Side::Pos)
        } else if self.neg[w].contains(a) {
            Some(Side::Neg)
        } else {
            None
        }
    }

    pub fn separates_at(&self, w: usize, a: usize, b: usize) -> bool {
        matches!((self.side_at(w, a), self.side_at(w, b)), (Some(x), Some(y)) if x != y)
    }

    /// Window members of `set`.
    pub fn bits(&self, set: &HypSet) -> FixedBitSet {
        let mut out = FixedBitSet::with_capacity(self.len());
        for h in set.members_below(self.fams, self.idx) {
            out.insert(self.slot(h).expect("inside window"));
        }
        out
    }

    pub fn refs(&self, bits: &FixedBitSet) -> Vec<HypRef> {
        bits.ones().map(|k| self.members[k]).collect()
    }

    /// The set of window members, without lifting.
    pub fn raw_set(&self, bits: &FixedBitSet) -> HypSet {
        HypSet::from_refs(self.refs(bits))
    }

    /// Reads window members as the symbolic set they sample: runs reaching
    /// the window edge continue forever. The last few indices before the
    /// edge are not trusted, since a member there may be pulled in only by
    /// members past the window.
    pub fn lift(&self, bits: &FixedBitSet) -> HypSet {
        let raw = self.raw_set(bits);
        match self.idx_cap {
            Some(cap) => {
                let edge = cap - self.margin;
                raw.intersection(&HypSet::rect((0, None), (0, Some(edge))))
                    .lift_boundary(self.fam_cap, Some(edge))
            }
            None => raw.lift_boundary(self.fam_cap, None),
        }
    }

    /// Families of the window, with the part of the family range that
    /// continues past the window (`Some(cap)` for unbounded rows).
    pub fn family_cap(&self) -> Option<u32> {
        self.fam_cap
    }

    pub fn index_cap(&self) -> Option<u32> {
        self.idx_cap
    }

    /// Restriction of `set` to the window, as a set.
    pub fn clip(&self, set: &HypSet) -> HypSet {
        set.intersection(&HypSet::rect((0, Some(self.fams)), (0, Some(self.idx))))
    }
}
