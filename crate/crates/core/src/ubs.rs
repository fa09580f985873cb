//! Chains, inextensibility, inseparable closure and the UBS predicates,
//! plus the almost-crossing relation between hyperplane sets.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use fixedbitset::FixedBitSet;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ambient::Ambient;
use crate::error::{Error, Result};
use crate::hyp::{Decided, HypRef, Side, TailSide};
use crate::hypset::HypSet;
use crate::scope::Scope;

/// Default number of members scanned for facing triples.
pub const FACING_SCAN_BUDGET: usize = 1500;

/// A tail `H^family_from, H^family_{from+1}, ...` closing off a chain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChainTail {
    pub family: u32,
    pub from: u32,
}

/// A chain `U_0, U_1, ...`: an explicit prefix, optionally followed by a
/// whole family tail.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Chain {
    pub prefix: Vec<HypRef>,
    pub tail: Option<ChainTail>,
}

impl Chain {
    pub fn explicit(elements: Vec<HypRef>) -> Self {
        Chain {
            prefix: elements,
            tail: None,
        }
    }

    pub fn from_tail(family: u32, from: u32) -> Self {
        Chain {
            prefix: Vec::new(),
            tail: Some(ChainTail { family, from }),
        }
    }

    pub fn first(&self) -> Option<HypRef> {
        self.prefix
            .first()
            .copied()
            .or_else(|| self.tail.map(|t| HypRef::new(t.family, t.from)))
    }

    /// The first `n` elements (fewer if the chain is finite and shorter).
    pub fn head(&self, n: usize) -> Vec<HypRef> {
        let mut out: Vec<HypRef> = self.prefix.iter().take(n).copied().collect();
        if let Some(t) = self.tail {
            let more = n.saturating_sub(out.len()) as u32;
            out.extend((t.from..t.from.saturating_add(more)).map(|i| HypRef::new(t.family, i)));
        }
        out
    }

    /// Elements whose index is below `idx_limit` (all prefix elements are
    /// kept).
    pub fn elements_below(&self, idx_limit: u32) -> Vec<HypRef> {
        let mut out = self.prefix.clone();
        if let Some(t) = self.tail {
            out.extend((t.from..idx_limit.max(t.from)).map(|i| HypRef::new(t.family, i)));
        }
        out
    }

    pub fn as_set(&self) -> HypSet {
        let mut s = HypSet::from_refs(self.prefix.iter().copied());
        if let Some(t) = self.tail {
            s = s.union(&HypSet::family_tail(t.family, t.from));
        }
        s
    }

    pub fn is_infinite(&self) -> bool {
        self.tail.is_some()
    }

    pub fn contains(&self, h: HypRef) -> bool {
        self.prefix.contains(&h) || self.tail.is_some_and(|t| t.family == h.family && h.index >= t.from)
    }
}

impl fmt::Display for Chain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, h) in self.prefix.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{h}")?;
        }
        if let Some(t) = self.tail {
            if !self.prefix.is_empty() {
                f.write_str(", ")?;
            }
            write!(f, "H{}_{}..", t.family, t.from)?;
        }
        f.write_str("]")
    }
}

/// Whether every interior element separates its two neighbours.
pub fn is_chain(seq: &[HypRef], ambient: &Ambient) -> Result<bool> {
    if seq.len() < 3 {
        return Err(Error::input("seq", "a chain needs at least three elements"));
    }
    let mut seen = BTreeSet::new();
    for (k, h) in seq.iter().enumerate() {
        if !seen.insert(*h) {
            return Err(Error::input(format!("seq[{k}]"), format!("{h} repeated")));
        }
    }
    for w in seq.windows(3) {
        if !ambient.separates(w[1], w[0], w[2])? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn ensure_within(set: &HypSet, ambient: &Ambient) -> Result<()> {
    let outside = set.difference(&ambient.universe());
    if outside.is_empty() {
        return Ok(());
    }
    let (f, i) = outside.extent();
    let hyp = outside
        .members_below(f.max(1), i.max(1))
        .first()
        .copied()
        .unwrap_or(HypRef::new(f, i));
    Err(Error::OutOfBounds {
        hyp,
        bound: ambient.describe(),
    })
}

/// Longest chain among the members of `set` inside the window: a longest
/// path of strictly nested halfspaces. Returns `None` if no chain of length
/// three exists. A final run `H^n_i, ..., H^n_{T-1}` reaching the window edge
/// is reported as a family tail.
pub fn find_chain(set: &HypSet, scope: &Scope) -> Result<Option<Chain>> {
    ensure_within(set, scope.ambient())?;
    let facing = check_facing_triple_free(set, scope, FACING_SCAN_BUDGET);
    if let Some(t) = facing.witness {
        return Err(Error::precondition("set contains a facing triple", t.to_vec()));
    }
    let uni = check_unidirectional(set, scope)?;
    if let Some(h) = uni.witness {
        return Err(Error::precondition("set is not unidirectional", vec![h]));
    }
    Ok(find_chain_unchecked(set, scope))
}

/// [`find_chain`] without the precondition checks.
pub fn find_chain_unchecked(set: &HypSet, scope: &Scope) -> Option<Chain> {
    let bits = scope.bits(set);
    let slots: Vec<usize> = bits.ones().collect();
    let m = slots.len();
    // node 2k + 0: positive halfspace of slots[k], 2k + 1: negative
    let node_of = |k: usize, s: Side| 2 * k + usize::from(s == Side::Neg);
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); 2 * m];
    let mut indeg = vec![0usize; 2 * m];
    for (a, &sa) in slots.iter().enumerate() {
        for (b, &sb) in slots.iter().enumerate() {
            if a == b {
                continue;
            }
            let (Some(b_in_a), Some(a_in_b)) = (scope.side_at(sa, sb), scope.side_at(sb, sa)) else {
                continue;
            };
            // b's halfspace away from a sits inside a's halfspace holding b
            let from = node_of(a, b_in_a);
            let to = node_of(b, -a_in_b);
            succ[from].push(to);
            indeg[to] += 1;
        }
    }
    let mut order = Vec::with_capacity(2 * m);
    let mut queue: VecDeque<usize> = (0..2 * m).filter(|&v| indeg[v] == 0).collect();
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    if order.len() < 2 * m {
        // inconsistent nesting; cannot happen for genuine wallspaces
        return None;
    }
    let mut best = vec![1usize; 2 * m];
    let mut next = vec![usize::MAX; 2 * m];
    for &v in order.iter().rev() {
        let mut succs = succ[v].clone();
        succs.sort_unstable();
        for w in succs {
            if best[w] + 1 > best[v] {
                best[v] = best[w] + 1;
                next[v] = w;
            }
        }
    }
    let start = (0..2 * m).max_by_key(|&v| (best[v], std::cmp::Reverse(v)))?;
    if best[start] < 3 {
        return None;
    }
    let mut seq = Vec::new();
    let mut v = start;
    loop {
        seq.push(scope.member(slots[v / 2]));
        if next[v] == usize::MAX {
            break;
        }
        v = next[v];
    }
    Some(with_edge_tail(seq, scope))
}

fn with_edge_tail(seq: Vec<HypRef>, scope: &Scope) -> Chain {
    let Some(cap) = scope.index_cap() else {
        return Chain::explicit(seq);
    };
    let last = *seq.last().expect("nonempty");
    if last.index + 1 != cap {
        return Chain::explicit(seq);
    }
    let mut start = seq.len() - 1;
    while start > 0 && seq[start - 1].family == last.family && seq[start - 1].index + 1 == seq[start].index {
        start -= 1;
    }
    if seq.len() - start < 2 {
        return Chain::explicit(seq);
    }
    let from = seq[start].index;
    let mut prefix = seq;
    prefix.truncate(start);
    Chain {
        prefix,
        tail: Some(ChainTail {
            family: last.family,
            from,
        }),
    }
}

/// Members of `set` (inside the window, outside the chain) having every
/// chain element in one halfspace.
pub fn extenders(chain: &Chain, set: &HypSet, scope: &Scope) -> Result<Vec<HypRef>> {
    let amb = scope.ambient();
    let mut out = Vec::new();
    for w in scope.refs(&scope.bits(set)) {
        if chain.contains(w) {
            continue;
        }
        let mut side: Option<Side> = None;
        let mut agree = |s: Option<Side>| -> bool {
            match (s, side) {
                (None, _) => false,
                (Some(s), None) => {
                    side = Some(s);
                    true
                }
                (Some(s), Some(t)) => s == t,
            }
        };
        let mut all = chain.prefix.iter().all(|&p| agree(amb.side(w, p).ok().flatten()));
        if all {
            if let Some(t) = chain.tail {
                match amb.tail_side(w, t.family)? {
                    TailSide::Cross => all = false,
                    TailSide::Unknown => {
                        return Err(Error::precondition(
                            format!("tail of family {} relative to {w} is undeclared", t.family),
                            vec![w],
                        ))
                    }
                    TailSide::Side(s) => {
                        let k = amb
                            .system()
                            .and_then(|sys| sys.tail_stabilization(w, t.family))
                            .unwrap_or(t.from)
                            .max(t.from);
                        all = agree(Some(s))
                            && (t.from..k).all(|i| agree(amb.side(w, HypRef::new(t.family, i)).ok().flatten()));
                    }
                }
            }
        }
        if all {
            out.push(w);
        }
    }
    Ok(out)
}

pub fn is_inextensible(chain: &Chain, set: &HypSet, scope: &Scope) -> Result<bool> {
    Ok(extenders(chain, set, scope)?.is_empty())
}

/// Builds a chain in `set` that is inextensible in `set`: starts from a
/// family tail of `set` (the lowest family for seed 0, a seeded choice
/// otherwise) and inserts extenders into its prefix until none is left.
pub fn inextensible_chain(set: &HypSet, scope: &Scope, seed: u64) -> Result<Chain> {
    inextensible_chain_from(set, scope, seeded_tails(set, scope, seed)?[0])
}

/// Family tails of `set` inside the window, rotated so that the one picked
/// by `seed` comes first (seed 0 keeps the lowest family first).
pub fn seeded_tails(set: &HypSet, scope: &Scope, seed: u64) -> Result<Vec<(u32, u32)>> {
    let (fams, _) = scope.limits();
    let mut tails = set.tail_families_below(fams);
    if tails.is_empty() {
        return Err(Error::precondition(
            format!("{set} has no family tail inside the window"),
            Vec::new(),
        ));
    }
    if seed != 0 {
        let pick = ChaCha8Rng::seed_from_u64(seed).gen_range(0..tails.len());
        tails.rotate_left(pick);
    }
    Ok(tails)
}

/// Grows the chain `{H^family_i}_{i >= from}` by extenders of `set` until
/// it is inextensible.
pub fn inextensible_chain_from(set: &HypSet, scope: &Scope, (family, from): (u32, u32)) -> Result<Chain> {
    let mut chain = Chain::from_tail(family, from);
    let amb = scope.ambient();
    for _ in 0..=scope.len() {
        let ext = extenders(&chain, set, scope)?;
        let Some(&first) = ext.first() else {
            return Ok(chain);
        };
        let mut placed = false;
        'outer: for &x in &ext {
            for p in 0..=chain.prefix.len() {
                let mut prefix = chain.prefix.clone();
                prefix.insert(p, x);
                let cand = Chain {
                    prefix,
                    tail: chain.tail,
                };
                let head = cand.head(cand.prefix.len() + 3);
                if is_chain(&head, amb)? {
                    chain = cand;
                    placed = true;
                    break 'outer;
                }
            }
        }
        if !placed {
            return Err(Error::precondition(
                format!("extender {first} of chain {chain} cannot be absorbed into it"),
                vec![first],
            ));
        }
    }
    Err(Error::consistency("chain extension did not terminate", Vec::new()))
}

/// Least superset of `set` containing every window hyperplane that
/// separates two of its members.
pub fn inseparable_closure(set: &HypSet, scope: &Scope) -> HypSet {
    let cur = closure_bits(scope.bits(set), scope);
    set.union(&scope.lift(&cur))
}

fn closure_bits(mut cur: FixedBitSet, scope: &Scope) -> FixedBitSet {
    loop {
        let add: Vec<usize> = (0..scope.len())
            .filter(|&w| {
                !cur.contains(w)
                    && !scope.side_bits(w, Side::Pos).is_disjoint(&cur)
                    && !scope.side_bits(w, Side::Neg).is_disjoint(&cur)
            })
            .collect();
        if add.is_empty() {
            return cur;
        }
        for w in add {
            cur.insert(w);
        }
    }
}

/// A window hyperplane outside `set` separating two members of `set`, as
/// `[separator, a, b]`.
pub fn check_inseparable(set: &HypSet, scope: &Scope) -> Option<[HypRef; 3]> {
    let cur = scope.bits(set);
    (0..scope.len()).filter(|&w| !cur.contains(w)).find_map(|w| {
        let mut p = scope.side_bits(w, Side::Pos).clone();
        p.intersect_with(&cur);
        let mut n = scope.side_bits(w, Side::Neg).clone();
        n.intersect_with(&cur);
        let (a, b) = (p.ones().next()?, n.ones().next()?);
        let (a, b) = (a.min(b), a.max(b));
        Some([scope.member(w), scope.member(a), scope.member(b)])
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnidirectionalCheck {
    pub witness: Option<HypRef>,
    pub horizon_checked: u32,
}

impl UnidirectionalCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Looks for a member with infinitely many members of `set` on both sides.
/// Family tails are decided by the rule; rows continuing past the window
/// are read off the upper half of the window.
pub fn check_unidirectional(set: &HypSet, scope: &Scope) -> Result<UnidirectionalCheck> {
    let horizon_checked = scope.horizon();
    let amb = scope.ambient();
    if !amb.is_symbolic() || !set.is_infinite() {
        return Ok(UnidirectionalCheck {
            witness: None,
            horizon_checked,
        });
    }
    let (fams, idx) = scope.limits();
    let tails = set.tail_families_below(fams);
    let bits = scope.bits(set);
    let rows = scope.family_cap().is_some() && set.has_unbounded_rows();
    let upper_rows: FixedBitSet = if rows {
        let upper = HypSet::rect((fams / 2, Some(fams)), (0, Some(idx)));
        scope.bits(&set.intersection(&upper))
    } else {
        FixedBitSet::with_capacity(scope.len())
    };
    for h in bits.ones() {
        let href = scope.member(h);
        let mut infinite = [false, false];
        let mut mark = |s: Side| infinite[usize::from(s == Side::Neg)] = true;
        for &(f, _) in &tails {
            match amb.tail_side(href, f)? {
                TailSide::Side(s) => mark(s),
                TailSide::Cross => {}
                TailSide::Unknown => {
                    let upper = HypSet::rect((f, Some(f + 1)), (idx / 2, Some(idx)));
                    for k in scope.bits(&set.intersection(&upper)).ones() {
                        if let Some(s) = scope.side_at(h, k) {
                            mark(s);
                        }
                    }
                }
            }
        }
        if rows && href.family < fams / 2 {
            for k in upper_rows.ones() {
                if let Some(s) = scope.side_at(h, k) {
                    mark(s);
                }
            }
        }
        if infinite[0] && infinite[1] {
            return Ok(UnidirectionalCheck {
                witness: Some(href),
                horizon_checked,
            });
        }
    }
    Ok(UnidirectionalCheck {
        witness: None,
        horizon_checked,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FacingCheck {
    pub witness: Option<[HypRef; 3]>,
    pub horizon_checked: u32,
}

impl FacingCheck {
    pub fn holds(&self) -> bool {
        self.witness.is_none()
    }
}

/// Scans triples of window members of `set` for a facing triple. When more
/// than `budget` members are present, the scan shrinks to a smaller horizon
/// and reports it.
pub fn check_facing_triple_free(set: &HypSet, scope: &Scope, budget: usize) -> FacingCheck {
    let (fams, idx) = scope.limits();
    let mut t = scope.horizon().max(fams).max(idx);
    let mut bits = scope.bits(set);
    while bits.count_ones(..) > budget && t > 2 {
        t -= 1;
        bits = scope.bits(&set.intersection(&HypSet::rect((0, Some(t)), (0, Some(t)))));
    }
    let horizon_checked = t.min(scope.horizon());
    let members: Vec<usize> = bits.ones().collect();
    for (x, &a) in members.iter().enumerate() {
        for &b in &members[x + 1..] {
            let (Some(b_in_a), Some(a_in_b)) = (scope.side_at(a, b), scope.side_at(b, a)) else {
                continue;
            };
            let mut cand = bits.clone();
            cand.difference_with(scope.cross_bits(a));
            cand.difference_with(scope.cross_bits(b));
            cand.intersect_with(scope.side_bits(a, b_in_a));
            cand.intersect_with(scope.side_bits(b, a_in_b));
            for c in cand.ones().filter(|&c| c > b) {
                if !scope.separates_at(c, a, b) {
                    return FacingCheck {
                        witness: Some([scope.member(a), scope.member(b), scope.member(c)]),
                        horizon_checked,
                    };
                }
            }
        }
    }
    FacingCheck {
        witness: None,
        horizon_checked,
    }
}

/// The four UBS conditions checked on one set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UbsCertificate {
    pub subject: HypSet,
    pub infinite: bool,
    pub unidirectional: bool,
    pub inseparable: bool,
    pub facing_triple_free: bool,
    pub horizon_checked: u32,
    pub bidirectional_witness: Option<HypRef>,
    pub separation_witness: Option<[HypRef; 3]>,
    pub facing_witness: Option<[HypRef; 3]>,
}

impl UbsCertificate {
    pub fn is_ubs(&self) -> bool {
        self.infinite && self.unidirectional && self.inseparable && self.facing_triple_free
    }

    /// First failed condition with its witness, for error reporting.
    pub fn failure(&self) -> Option<(String, Vec<HypRef>)> {
        if !self.infinite {
            return Some((format!("{} is finite", self.subject), Vec::new()));
        }
        if let Some(h) = self.bidirectional_witness {
            return Some((format!("{h} has infinitely many members on both sides"), vec![h]));
        }
        if let Some([w, a, b]) = self.separation_witness {
            return Some((format!("{w} separates {a} from {b} but is not a member"), vec![w, a, b]));
        }
        if let Some(t) = self.facing_witness {
            return Some((format!("{} / {} / {} is a facing triple", t[0], t[1], t[2]), t.to_vec()));
        }
        None
    }
}

pub fn certify_ubs(set: &HypSet, scope: &Scope) -> Result<UbsCertificate> {
    ensure_within(set, scope.ambient())?;
    let uni = check_unidirectional(set, scope)?;
    let sep = check_inseparable(set, scope);
    let facing = check_facing_triple_free(set, scope, FACING_SCAN_BUDGET);
    Ok(UbsCertificate {
        subject: set.clone(),
        infinite: scope.ambient().is_symbolic() && set.is_infinite(),
        unidirectional: uni.holds(),
        inseparable: sep.is_none(),
        facing_triple_free: facing.holds(),
        horizon_checked: uni.horizon_checked.min(facing.horizon_checked),
        bidirectional_witness: uni.witness,
        separation_witness: sep,
        facing_witness: facing.witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalityCertificate {
    pub ubs: UbsCertificate,
    /// The family tail carrying the infinite part, if it is a single one.
    pub single_tail: Option<(u32, u32)>,
    pub minimal: bool,
    /// Set when the answer is only a horizon approximation.
    pub approximate: bool,
}

/// Symbolic sets are minimal UBSs iff they are UBSs whose infinite part is
/// one family tail. For finite wallspaces the answer is the horizon
/// approximation "the closure of a longest chain covers the set".
pub fn is_minimal_ubs(set: &HypSet, scope: &Scope) -> Result<MinimalityCertificate> {
    let ubs = certify_ubs(set, scope)?;
    if scope.ambient().is_symbolic() {
        let single_tail = set.single_family_tail();
        return Ok(MinimalityCertificate {
            minimal: ubs.is_ubs() && single_tail.is_some(),
            ubs,
            single_tail,
            approximate: false,
        });
    }
    let covered = find_chain_unchecked(set, scope)
        .map(|c| set.is_subset(&inseparable_closure(&c.as_set(), scope)))
        .unwrap_or(false);
    Ok(MinimalityCertificate {
        minimal: covered,
        ubs,
        single_tail: None,
        approximate: true,
    })
}

/// Whether `h` crosses all but finitely many members of `set`.
pub fn cofinitely_crosses_set(h: HypRef, set: &HypSet, scope: &Scope) -> Result<Decided> {
    if !set.is_infinite() {
        return Ok(Decided::True);
    }
    let amb = scope.ambient();
    let (fams, idx) = scope.limits();
    let mut out = Decided::True;
    for (f, _) in set.tail_families_below(fams) {
        let d = if f == h.family {
            Decided::False
        } else {
            match amb.tail_side(h, f)? {
                TailSide::Cross => Decided::True,
                TailSide::Side(_) => Decided::False,
                TailSide::Unknown => Decided::Unknown,
            }
        };
        out = out.and(d);
        if out == Decided::False {
            return Ok(out);
        }
    }
    if scope.family_cap().is_some() && set.has_unbounded_rows() {
        let Some(hs) = scope.slot(h) else {
            return Ok(out.and(Decided::Unknown));
        };
        if h.family >= fams / 2 {
            return Ok(out.and(Decided::Unknown));
        }
        let upper = scope.bits(&set.intersection(&HypSet::rect((fams / 2, Some(fams)), (0, Some(idx)))));
        if upper.ones().any(|k| k != hs && !scope.crosses_at(hs, k)) {
            return Ok(Decided::False);
        }
    }
    Ok(out)
}

/// `a ≺ b`: every member of `b` crosses all but finitely many members of
/// `a`. Members of `b` are checked inside the window; tails of `b` are
/// checked through the rule's eventual behaviour.
pub fn prec(a: &HypSet, b: &HypSet, scope: &Scope) -> Result<Decided> {
    if !a.is_infinite() {
        return Ok(Decided::True);
    }
    let amb = scope.ambient();
    let (fams, _) = scope.limits();
    let mut out = Decided::True;
    if let Some(sys) = amb.system() {
        let a_tails = a.tail_families_below(fams);
        for (g, _) in b.tail_families_below(fams) {
            for &(f, _) in &a_tails {
                let d = if f == g {
                    Decided::False
                } else {
                    match sys.family_tail_behavior(g, f)? {
                        Some((_, TailSide::Cross)) => Decided::True,
                        Some((_, TailSide::Side(_))) => Decided::False,
                        _ => Decided::Unknown,
                    }
                };
                out = out.and(d);
                if out == Decided::False {
                    return Ok(out);
                }
            }
        }
    }
    for h in scope.refs(&scope.bits(b)) {
        out = out.and(cofinitely_crosses_set(h, a, scope)?);
        if out == Decided::False {
            return Ok(out);
        }
    }
    Ok(out)
}

/// `a ≺ b` and `b ≺ a`; a set is tied to itself by convention.
pub fn tied(a: &HypSet, b: &HypSet, scope: &Scope) -> Result<Decided> {
    if a == b {
        return Ok(Decided::True);
    }
    Ok(prec(a, b, scope)?.and(prec(b, a, scope)?))
}

pub fn almost_equivalent(a: &HypSet, b: &HypSet) -> bool {
    a.almost_equivalent(b)
}

/// Almost-containment order on almost-equivalence classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Poset {
    /// Class of every input set.
    pub class_of: Vec<usize>,
    /// Input position of each class representative (first member).
    pub representatives: Vec<usize>,
    /// Strict relations `(lower class, upper class)`.
    pub below: Vec<(usize, usize)>,
}

impl Poset {
    pub fn is_below(&self, a: usize, b: usize) -> bool {
        self.below.contains(&(a, b))
    }

    pub fn comparable(&self, a: usize, b: usize) -> bool {
        a == b || self.is_below(a, b) || self.is_below(b, a)
    }
}

pub fn almost_containment_poset(classes: &[HypSet]) -> Poset {
    let mut class_of = Vec::with_capacity(classes.len());
    let mut representatives: Vec<usize> = Vec::new();
    for (k, s) in classes.iter().enumerate() {
        match representatives.iter().position(|&r| classes[r].almost_equivalent(s)) {
            Some(c) => class_of.push(c),
            None => {
                class_of.push(representatives.len());
                representatives.push(k);
            }
        }
    }
    let mut below = Vec::new();
    for (i, &ri) in representatives.iter().enumerate() {
        for (j, &rj) in representatives.iter().enumerate() {
            if i != j && classes[ri].almost_subset(&classes[rj]) {
                below.push((i, j));
            }
        }
    }
    Poset {
        class_of,
        representatives,
        below,
    }
}

/// Outcome of checking one instance of a structural fact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum FactCheck {
    Holds,
    /// Hypotheses not met.
    Vacuous,
    Undecided,
    Violated(String),
}

impl FactCheck {
    pub fn is_violation(&self) -> bool {
        matches!(self, FactCheck::Violated(_))
    }
}

/// Fact (i): for `a ⊆ b`, `b ≺ c` implies `a ≺ c` and `c ≺ b` implies
/// `c ≺ a`.
pub fn check_fact_i(a: &HypSet, b: &HypSet, c: &HypSet, scope: &Scope) -> Result<FactCheck> {
    if !a.is_subset(b) {
        return Ok(FactCheck::Vacuous);
    }
    let mut applied = false;
    let bc = prec(b, c, scope)?;
    if bc == Decided::True {
        applied = true;
        match prec(a, c, scope)? {
            Decided::True => {}
            Decided::False => return Ok(FactCheck::Violated(format!("{b} ≺ {c} but not {a} ≺ {c}"))),
            Decided::Unknown => return Ok(FactCheck::Undecided),
        }
    }
    let cb = prec(c, b, scope)?;
    if cb == Decided::True {
        applied = true;
        match prec(c, a, scope)? {
            Decided::True => {}
            Decided::False => return Ok(FactCheck::Violated(format!("{c} ≺ {b} but not {c} ≺ {a}"))),
            Decided::Unknown => return Ok(FactCheck::Undecided),
        }
    }
    if bc == Decided::Unknown || cb == Decided::Unknown {
        return Ok(FactCheck::Undecided);
    }
    Ok(if applied { FactCheck::Holds } else { FactCheck::Vacuous })
}

/// Fact (ii): for minimal UBSs with `a ≺ b` and `b ≺ c`, either `a ≺ c` or
/// `a, b` are tied and `c ≺ a`.
pub fn check_fact_ii(a: &HypSet, b: &HypSet, c: &HypSet, scope: &Scope) -> Result<FactCheck> {
    let (ab, bc) = (prec(a, b, scope)?, prec(b, c, scope)?);
    if ab == Decided::Unknown || bc == Decided::Unknown {
        return Ok(FactCheck::Undecided);
    }
    if !(ab.is_true() && bc.is_true()) {
        return Ok(FactCheck::Vacuous);
    }
    let ac = prec(a, c, scope)?;
    if ac.is_true() {
        return Ok(FactCheck::Holds);
    }
    let alt = tied(a, b, scope)?.and(prec(c, a, scope)?);
    Ok(match (ac, alt) {
        (_, Decided::True) => FactCheck::Holds,
        (Decided::Unknown, _) | (_, Decided::Unknown) => FactCheck::Undecided,
        _ => FactCheck::Violated(format!("{a} ≺ {b} ≺ {c} without {a} ≺ {c} or the tied alternative")),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{FamilyCount, FamilySystem};

    fn h(n: u32, i: u32) -> HypRef {
        HypRef::new(n, i)
    }

    fn corrigendum(n: u32) -> Ambient {
        Ambient::Symbolic(FamilySystem::Corrigendum {
            families: FamilyCount::Finite(n),
        })
    }

    #[test]
    fn chains_in_a_family() {
        let amb = corrigendum(3);
        let seq: Vec<_> = (0..10).map(|i| h(0, i)).collect();
        assert!(is_chain(&seq, &amb).unwrap());
        let mut scrambled = seq.clone();
        scrambled.swap(2, 7);
        assert!(!is_chain(&scrambled, &amb).unwrap());
        assert!(is_chain(&seq[..2], &amb).is_err());
        assert!(is_chain(&[h(0, 1), h(0, 2), h(0, 1)], &amb).is_err());
    }

    #[test]
    fn diagonal_is_a_chain() {
        let amb = Ambient::Symbolic(FamilySystem::Corrigendum {
            families: FamilyCount::Unbounded,
        });
        let seq: Vec<_> = (0..10).map(|n| h(n, 1)).collect();
        assert!(is_chain(&seq, &amb).unwrap());
    }

    #[test]
    fn grid_chain_stays_in_family() {
        let amb = Ambient::Symbolic(FamilySystem::Grid { dim: 2 });
        let sc = Scope::new(&amb, 10).unwrap();
        let c = find_chain(&HypSet::families(Some(2)), &sc).unwrap().unwrap();
        assert_eq!(c, Chain::from_tail(0, 0));
        let fam = HypSet::rect((0, Some(1)), (0, Some(10)));
        let c = find_chain_unchecked(&fam, &sc).unwrap();
        assert_eq!(c.elements_below(10).len(), 10);
    }

    #[test]
    fn inextensibility() {
        let amb = Ambient::Symbolic(FamilySystem::Grid { dim: 2 });
        let sc = Scope::new(&amb, 12).unwrap();
        let all = HypSet::families(Some(2));
        assert!(is_inextensible(&Chain::from_tail(0, 0), &all, &sc).unwrap());
        assert!(!is_inextensible(&Chain::from_tail(0, 5), &all, &sc).unwrap());
        assert_eq!(
            extenders(&Chain::from_tail(0, 5), &all, &sc).unwrap(),
            (0..5).map(|i| h(0, i)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn chain_absorbs_lower_families() {
        let amb = corrigendum(5);
        let sc = Scope::new(&amb, 30).unwrap();
        let all = HypSet::families(Some(5));
        let c = inextensible_chain(&all, &sc, 0).unwrap();
        assert_eq!(c, Chain::from_tail(0, 0));
        // starting from family 3 pulls in H^n_j, n < 3, j <= 3
        let v = HypSet::rect((3, Some(5)), (0, None)).union(&HypSet::rect((0, Some(3)), (0, Some(4))));
        let v = v.union(&HypSet::rect((0, Some(3)), (4, None)));
        let c = (1..50)
            .map(|s| inextensible_chain(&v, &sc, s).unwrap())
            .find(|c| c.tail.unwrap().family == 3)
            .unwrap();
        assert_eq!(c.prefix, vec![h(0, 0)], "{c}");
        assert!(is_inextensible(&c, &v, &sc).unwrap());
        let closure = inseparable_closure(&c.as_set(), &sc);
        assert_eq!(
            closure,
            HypSet::family(3).union(&HypSet::rect((0, Some(3)), (0, Some(4))))
        );
    }

    #[test]
    fn closure_of_nested_walls() {
        let amb = corrigendum(2);
        let sc = Scope::new(&amb, 10).unwrap();
        let s = HypSet::from_refs([h(0, 2), h(0, 4)]);
        assert_eq!(
            inseparable_closure(&s, &sc),
            HypSet::from_refs([h(0, 2), h(0, 3), h(0, 4)])
        );
        assert_eq!(inseparable_closure(&HypSet::family(0), &sc), HypSet::family(0));
    }

    #[test]
    fn certificates() {
        let amb = corrigendum(5);
        let sc = Scope::new(&amb, 30).unwrap();
        let v = HypSet::families(Some(5));
        let cert = certify_ubs(&v, &sc).unwrap();
        assert!(cert.is_ubs(), "{cert:?}");
        for n in 0..5 {
            assert!(is_minimal_ubs(&HypSet::family(n), &sc).unwrap().minimal);
        }
        assert!(!is_minimal_ubs(&v, &sc).unwrap().minimal);
    }

    #[test]
    fn diagonal_is_separable() {
        let amb = Ambient::Symbolic(FamilySystem::Corrigendum {
            families: FamilyCount::Unbounded,
        });
        let sc = Scope::new(&amb, 20).unwrap();
        let vp = HypSet::rect((0, None), (1, Some(2)));
        let cert = certify_ubs(&vp, &sc).unwrap();
        assert!(cert.infinite && cert.unidirectional && cert.facing_triple_free);
        assert!(!cert.inseparable);
        let [w, a, b] = cert.separation_witness.unwrap();
        assert!(amb.separates(w, a, b).unwrap());
        assert_eq!((w, a, b), (h(0, 2), h(0, 1), h(2, 1)));
    }

    #[test]
    fn prec_examples() {
        let grid = Ambient::Symbolic(FamilySystem::Grid { dim: 2 });
        let sc = Scope::new(&grid, 10).unwrap();
        let (v, hz) = (HypSet::family(0), HypSet::family(1));
        assert_eq!(prec(&v, &hz, &sc).unwrap(), Decided::True);
        assert_eq!(tied(&v, &hz, &sc).unwrap(), Decided::True);
        assert_eq!(tied(&v, &v, &sc).unwrap(), Decided::True);
        let amb = corrigendum(6);
        let sc = Scope::new(&amb, 20).unwrap();
        let (f0, f5) = (HypSet::family(0), HypSet::family(5));
        assert_eq!(prec(&f0, &f5, &sc).unwrap(), Decided::True);
        assert_eq!(prec(&f5, &f0, &sc).unwrap(), Decided::False);
        assert_eq!(tied(&f0, &f5, &sc).unwrap(), Decided::False);
    }

    #[test]
    fn poset_of_classes() {
        let f0 = HypSet::family(0);
        let both = f0.union(&HypSet::family(1));
        let p = almost_containment_poset(&[f0.clone(), both, f0.difference(&HypSet::single(h(0, 3)))]);
        assert_eq!(p.representatives, vec![0, 1]);
        assert_eq!(p.class_of, vec![0, 1, 0]);
        assert_eq!(p.below, vec![(0, 1)]);
    }
}
