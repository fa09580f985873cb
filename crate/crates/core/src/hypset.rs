//! Hyperplane sets with exact finite/infinite structure.
//!
//! A [`HypSet`] is a finite union of rectangles `families × indices` where
//! either interval may be unbounded. It is stored as a grid of break points
//! in each direction, the last interval running to infinity, with one
//! membership bit per cell. The normalised grid (no redundant breaks) is the
//! canonical form: two sets are equal iff their canonical forms are equal,
//! and almost-equivalence (finite symmetric difference) is read off the
//! unbounded cells.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::hyp::HypRef;

/// `(families, indices)` half-open intervals; `None` is unbounded.
pub type Rect = ((u32, Option<u32>), (u32, Option<u32>));

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HypSet {
    fam_breaks: Vec<u32>,
    idx_breaks: Vec<u32>,
    cells: Vec<bool>,
}

impl Default for HypSet {
    fn default() -> Self {
        HypSet::empty()
    }
}

fn interval_of(breaks: &[u32], x: u32) -> usize {
    breaks.partition_point(|&b| b <= x) - 1
}

fn merged(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v.dedup();
    v
}

impl HypSet {
    pub fn empty() -> Self {
        HypSet {
            fam_breaks: vec![0],
            idx_breaks: vec![0],
            cells: vec![false],
        }
    }

    /// `families × indices` with half-open intervals; `None` ends are
    /// unbounded.
    pub fn rect(families: (u32, Option<u32>), indices: (u32, Option<u32>)) -> Self {
        let (f0, f1) = families;
        let (i0, i1) = indices;
        if f1.is_some_and(|e| e <= f0) || i1.is_some_and(|e| e <= i0) {
            return HypSet::empty();
        }
        let mut fb = vec![0, f0];
        fb.extend(f1);
        let mut ib = vec![0, i0];
        ib.extend(i1);
        fb.dedup();
        ib.dedup();
        let (nf, ni) = (fb.len(), ib.len());
        let mut cells = vec![false; nf * ni];
        for r in 0..nf {
            for c in 0..ni {
                let in_f = fb[r] >= f0 && f1.is_none_or(|e| fb[r] < e);
                let in_i = ib[c] >= i0 && i1.is_none_or(|e| ib[c] < e);
                cells[r * ni + c] = in_f && in_i;
            }
        }
        HypSet {
            fam_breaks: fb,
            idx_breaks: ib,
            cells,
        }
        .normalized()
    }

    /// `{H^family_i : i >= from}`.
    pub fn family_tail(family: u32, from: u32) -> Self {
        HypSet::rect((family, Some(family + 1)), (from, None))
    }

    pub fn family(family: u32) -> Self {
        HypSet::family_tail(family, 0)
    }

    /// Whole families `0..count` (all families when `None`).
    pub fn families(count: Option<u32>) -> Self {
        HypSet::rect((0, count), (0, None))
    }

    pub fn single(h: HypRef) -> Self {
        HypSet::rect((h.family, Some(h.family + 1)), (h.index, Some(h.index + 1)))
    }

    pub fn from_refs<I: IntoIterator<Item = HypRef>>(refs: I) -> Self {
        let mut refs: Vec<HypRef> = refs.into_iter().collect();
        refs.sort_unstable();
        refs.dedup();
        let mut fb = vec![0];
        let mut ib = vec![0];
        for h in &refs {
            fb.extend([h.family, h.family + 1]);
            ib.extend([h.index, h.index + 1]);
        }
        fb.sort_unstable();
        fb.dedup();
        ib.sort_unstable();
        ib.dedup();
        let ni = ib.len();
        let mut cells = vec![false; fb.len() * ni];
        for h in &refs {
            cells[interval_of(&fb, h.family) * ni + interval_of(&ib, h.index)] = true;
        }
        HypSet {
            fam_breaks: fb,
            idx_breaks: ib,
            cells,
        }
        .normalized()
    }

    fn cell(&self, r: usize, c: usize) -> bool {
        self.cells[r * self.idx_breaks.len() + c]
    }

    fn row(&self, r: usize) -> &[bool] {
        let ni = self.idx_breaks.len();
        &self.cells[r * ni..(r + 1) * ni]
    }

    fn normalized(mut self) -> Self {
        // drop column breaks that separate identical columns
        let mut c = self.idx_breaks.len();
        while c > 1 {
            c -= 1;
            let ni = self.idx_breaks.len();
            let nf = self.fam_breaks.len();
            if (0..nf).all(|r| self.cells[r * ni + c] == self.cells[r * ni + c - 1]) {
                self.idx_breaks.remove(c);
                for r in (0..nf).rev() {
                    self.cells.remove(r * ni + c);
                }
            }
        }
        let mut r = self.fam_breaks.len();
        while r > 1 {
            r -= 1;
            if self.row(r) == self.row(r - 1) {
                let ni = self.idx_breaks.len();
                self.fam_breaks.remove(r);
                self.cells.drain(r * ni..(r + 1) * ni);
            }
        }
        self
    }

    fn combine(&self, other: &HypSet, op: impl Fn(bool, bool) -> bool) -> HypSet {
        let fb = merged(&self.fam_breaks, &other.fam_breaks);
        let ib = merged(&self.idx_breaks, &other.idx_breaks);
        let ni = ib.len();
        let mut cells = Vec::with_capacity(fb.len() * ni);
        for &f in &fb {
            let (ra, rb) = (interval_of(&self.fam_breaks, f), interval_of(&other.fam_breaks, f));
            for &i in &ib {
                let (ca, cb) = (interval_of(&self.idx_breaks, i), interval_of(&other.idx_breaks, i));
                cells.push(op(self.cell(ra, ca), other.cell(rb, cb)));
            }
        }
        HypSet {
            fam_breaks: fb,
            idx_breaks: ib,
            cells,
        }
        .normalized()
    }

    pub fn union(&self, other: &HypSet) -> HypSet {
        self.combine(other, |a, b| a || b)
    }

    pub fn intersection(&self, other: &HypSet) -> HypSet {
        self.combine(other, |a, b| a && b)
    }

    pub fn difference(&self, other: &HypSet) -> HypSet {
        self.combine(other, |a, b| a && !b)
    }

    pub fn symmetric_difference(&self, other: &HypSet) -> HypSet {
        self.combine(other, |a, b| a != b)
    }

    pub fn contains(&self, h: HypRef) -> bool {
        self.cell(
            interval_of(&self.fam_breaks, h.family),
            interval_of(&self.idx_breaks, h.index),
        )
    }

    pub fn is_empty(&self) -> bool {
        self.cells.iter().all(|&c| !c)
    }

    pub fn is_subset(&self, other: &HypSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn is_disjoint(&self, other: &HypSet) -> bool {
        self.intersection(other).is_empty()
    }

    /// Whether the set has infinitely many members.
    pub fn is_infinite(&self) -> bool {
        let (nf, ni) = (self.fam_breaks.len(), self.idx_breaks.len());
        (0..nf).any(|r| self.cell(r, ni - 1)) || (0..ni).any(|c| self.cell(nf - 1, c))
    }

    /// Finite symmetric difference.
    pub fn almost_equivalent(&self, other: &HypSet) -> bool {
        !self.symmetric_difference(other).is_infinite()
    }

    /// `self − other` is finite.
    pub fn almost_subset(&self, other: &HypSet) -> bool {
        !self.difference(other).is_infinite()
    }

    /// Number of members, if finite.
    pub fn len(&self) -> Option<u64> {
        if self.is_infinite() {
            return None;
        }
        let (nf, ni) = (self.fam_breaks.len(), self.idx_breaks.len());
        let mut total = 0u64;
        for r in 0..nf - 1 {
            for c in 0..ni - 1 {
                if self.cell(r, c) {
                    let h = (self.fam_breaks[r + 1] - self.fam_breaks[r]) as u64;
                    let w = (self.idx_breaks[c + 1] - self.idx_breaks[c]) as u64;
                    total += h * w;
                }
            }
        }
        Some(total)
    }

    /// Members with family `< fam_limit` and index `< idx_limit`, in
    /// `(family, index)` order.
    pub fn members_below(&self, fam_limit: u32, idx_limit: u32) -> Vec<HypRef> {
        let mut out = Vec::new();
        for f in 0..fam_limit {
            let r = interval_of(&self.fam_breaks, f);
            for (c, &start) in self.idx_breaks.iter().enumerate() {
                if start >= idx_limit {
                    break;
                }
                if self.cell(r, c) {
                    let end = self.idx_breaks.get(c + 1).copied().unwrap_or(u32::MAX).min(idx_limit);
                    out.extend((start..end).map(|i| HypRef::new(f, i)));
                }
            }
        }
        out
    }

    /// Families (in a bounded range of rows) containing a whole tail, with
    /// the start of the longest tail; `None` in the second slot if infinitely
    /// many families carry tails.
    pub fn tails(&self) -> (Vec<(u32, u32)>, bool) {
        let (nf, ni) = (self.fam_breaks.len(), self.idx_breaks.len());
        let unbounded_rows = (0..ni).any(|c| self.cell(nf - 1, c));
        let mut out = Vec::new();
        for r in 0..nf - 1 {
            if !self.cell(r, ni - 1) {
                continue;
            }
            let mut c = ni - 1;
            while c > 0 && self.cell(r, c - 1) {
                c -= 1;
            }
            for f in self.fam_breaks[r]..self.fam_breaks[r + 1] {
                out.push((f, self.idx_breaks[c]));
            }
        }
        (out, unbounded_rows)
    }

    /// `Some((family, from))` when the infinite part of the set is a single
    /// family tail.
    pub fn single_family_tail(&self) -> Option<(u32, u32)> {
        match self.tails() {
            (t, false) if t.len() == 1 => Some(t[0]),
            _ => None,
        }
    }

    /// Restriction to family `f` as `(finite members, tail start)`.
    pub fn family_slice(&self, f: u32) -> (Vec<u32>, Option<u32>) {
        let r = interval_of(&self.fam_breaks, f);
        let ni = self.idx_breaks.len();
        let tail = if self.cell(r, ni - 1) {
            let mut c = ni - 1;
            while c > 0 && self.cell(r, c - 1) {
                c -= 1;
            }
            Some(self.idx_breaks[c])
        } else {
            None
        };
        let limit = tail.unwrap_or(u32::MAX);
        let mut finite = Vec::new();
        for c in 0..ni - 1 {
            if self.cell(r, c) && self.idx_breaks[c] < limit {
                finite.extend(self.idx_breaks[c]..self.idx_breaks[c + 1].min(limit));
            }
        }
        (finite, tail)
    }

    /// `(family, tail start)` for every family below `fam_limit` that
    /// contains a whole tail.
    pub fn tail_families_below(&self, fam_limit: u32) -> Vec<(u32, u32)> {
        (0..fam_limit)
            .filter_map(|f| self.family_slice(f).1.map(|t| (f, t)))
            .collect()
    }

    /// Whether infinitely many families meet the set.
    pub fn has_unbounded_rows(&self) -> bool {
        self.tails().1
    }

    /// Index intervals of the last (unbounded) family row.
    pub fn unbounded_row_intervals(&self) -> Vec<(u32, Option<u32>)> {
        let nf = self.fam_breaks.len();
        (0..self.idx_breaks.len())
            .filter(|&c| self.cell(nf - 1, c))
            .map(|c| (self.idx_breaks[c], self.idx_breaks.get(c + 1).copied()))
            .collect()
    }

    /// Extends every rectangle ending exactly at a capped boundary to
    /// infinity. Used to read a finite computation at a horizon as the
    /// symbolic set it samples.
    pub fn lift_boundary(&self, fam_cap: Option<u32>, idx_cap: Option<u32>) -> HypSet {
        self.rects()
            .into_iter()
            .map(|((f0, f1), (i0, i1))| {
                let f1 = if f1.is_some() && f1 == fam_cap { None } else { f1 };
                let i1 = if i1.is_some() && i1 == idx_cap { None } else { i1 };
                HypSet::rect((f0, f1), (i0, i1))
            })
            .fold(HypSet::empty(), |acc, r| acc.union(&r))
    }

    /// Largest break point; every structural change of the set happens
    /// below it.
    pub fn extent(&self) -> (u32, u32) {
        (*self.fam_breaks.last().unwrap(), *self.idx_breaks.last().unwrap())
    }

    /// Rectangles of the canonical grid, runs within a family band merged:
    /// `(families, indices)` half-open intervals, `None` meaning unbounded.
    pub fn rects(&self) -> Vec<Rect> {
        let (nf, ni) = (self.fam_breaks.len(), self.idx_breaks.len());
        let mut out = Vec::new();
        for r in 0..nf {
            let fams = (self.fam_breaks[r], self.fam_breaks.get(r + 1).copied());
            let mut c = 0;
            while c < ni {
                if !self.cell(r, c) {
                    c += 1;
                    continue;
                }
                let start = c;
                while c < ni && self.cell(r, c) {
                    c += 1;
                }
                out.push((fams, (self.idx_breaks[start], self.idx_breaks.get(c).copied())));
            }
        }
        out
    }
}

fn fmt_interval(f: &mut fmt::Formatter<'_>, (a, b): (u32, Option<u32>)) -> fmt::Result {
    match b {
        Some(b) if b == a + 1 => write!(f, "{a}"),
        Some(b) => write!(f, "{a}..{b}"),
        None => write!(f, "{a}.."),
    }
}

impl fmt::Display for HypSet {
    /// Canonical text form, e.g. `{fam 0 idx 0.. | fam 1..3 idx 2}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, (fams, idx)) in self.rects().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" | ")?;
            }
            f.write_str("fam ")?;
            fmt_interval(f, fams)?;
            f.write_str(" idx ")?;
            fmt_interval(f, idx)?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn h(n: u32, i: u32) -> HypRef {
        HypRef::new(n, i)
    }

    #[test]
    fn tails_and_corrections() {
        let s = HypSet::family(0).difference(&HypSet::from_refs((0..7).map(|i| h(0, i))));
        assert_eq!(s, HypSet::family_tail(0, 7));
        assert!(s.almost_equivalent(&HypSet::family(0)));
        assert!(!HypSet::family(0).almost_equivalent(&HypSet::family(1)));
        assert_eq!(s.single_family_tail(), Some((0, 7)));
        let with_noise = s.union(&HypSet::from_refs([h(0, 2), h(3, 1)]));
        assert_eq!(with_noise.family_slice(0), (vec![2], Some(7)));
        assert_eq!(with_noise.single_family_tail(), Some((0, 7)));
    }

    #[test]
    fn diagonal_meets_each_family_once() {
        let diag = HypSet::rect((0, None), (1, Some(2)));
        assert!(diag.is_infinite());
        assert_eq!(diag.single_family_tail(), None);
        for n in 0..5 {
            let meet = diag.intersection(&HypSet::family(n));
            assert_eq!(meet.len(), Some(1));
            assert!(!diag.almost_equivalent(&HypSet::family(n)));
        }
        assert_eq!(diag.tails(), (vec![], true));
    }

    #[test]
    fn lifting_extends_boundary_runs() {
        let sampled = HypSet::from_refs((3..10).map(|i| h(1, i)).chain([h(0, 2)]));
        let lifted = sampled.lift_boundary(None, Some(10));
        assert_eq!(lifted, HypSet::family_tail(1, 3).union(&HypSet::single(h(0, 2))));
        let rows = HypSet::from_refs((0..10).map(|n| h(n, 1))).lift_boundary(Some(10), Some(10));
        assert_eq!(rows, HypSet::rect((0, None), (1, Some(2))));
    }

    #[test]
    fn display_is_canonical() {
        let a = HypSet::family_tail(0, 3).union(&HypSet::single(h(2, 5)));
        let b = HypSet::single(h(2, 5)).union(&HypSet::family(0).difference(&HypSet::rect((0, Some(1)), (0, Some(3)))));
        assert_eq!(a, b);
        assert_eq!(a.to_string(), b.to_string());
        assert_eq!(HypSet::empty().to_string(), "{}");
        assert_eq!(HypSet::family_tail(1, 4).to_string(), "{fam 1 idx 4..}");
    }

    fn arb_set() -> impl Strategy<Value = HypSet> {
        let rect = (0u32..4, prop::option::of(1u32..4), 0u32..6, prop::option::of(1u32..6))
            .prop_map(|(f0, df, i0, di)| HypSet::rect((f0, df.map(|d| f0 + d)), (i0, di.map(|d| i0 + d))));
        prop::collection::vec((rect, any::<bool>()), 0..5).prop_map(|parts| {
            parts.into_iter().fold(
                HypSet::empty(),
                |acc, (r, add)| {
                    if add {
                        acc.union(&r)
                    } else {
                        acc.difference(&r)
                    }
                },
            )
        })
    }

    proptest! {
        #[test]
        fn set_algebra_matches_pointwise_model(a in arb_set(), b in arb_set()) {
            let window = |s: &HypSet| s.members_below(12, 12);
            for (got, op) in [
                (a.union(&b), 0),
                (a.intersection(&b), 1),
                (a.difference(&b), 2),
            ] {
                for f in 0..12 {
                    for i in 0..12 {
                        let (x, y) = (a.contains(h(f, i)), b.contains(h(f, i)));
                        let want = match op { 0 => x || y, 1 => x && y, _ => x && !y };
                        prop_assert_eq!(got.contains(h(f, i)), want);
                    }
                }
            }
            // canonical form: equal membership implies equal representation
            let rebuilt = a.union(&b).difference(&b.difference(&a)).union(&a.intersection(&b));
            prop_assert_eq!(&rebuilt, &a);
            prop_assert_eq!(window(&rebuilt), window(&a));
        }

        #[test]
        fn almost_equivalence_is_an_equivalence(a in arb_set(), b in arb_set(), c in arb_set()) {
            prop_assert!(a.almost_equivalent(&a));
            prop_assert_eq!(a.almost_equivalent(&b), b.almost_equivalent(&a));
            if a.almost_equivalent(&b) && b.almost_equivalent(&c) {
                prop_assert!(a.almost_equivalent(&c));
            }
            let finite = HypSet::from_refs([h(1, 2), h(3, 0)]);
            prop_assert!(a.almost_equivalent(&a.symmetric_difference(&finite)));
        }
    }
}
