//! Decomposition of a UBS into minimal UBSs: extraction by chains and
//! closures, the split by crossing behaviour, the ≺ graph and its order,
//! and comparison of decompositions.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap};
use std::fmt;

use petgraph::algo::maximum_matching;
use petgraph::graph::{DiGraph, UnGraph};
use serde::{Deserialize, Serialize};

use crate::ambient::Dimension;
use crate::error::{Error, Result};
use crate::family::FamilySystem;
use crate::hyp::{Decided, HypRef};
use crate::hypset::HypSet;
use crate::scope::Scope;
use crate::ubs::{
    certify_ubs, check_inseparable, inextensible_chain_from, inseparable_closure, is_minimal_ubs, prec, seeded_tails,
    Chain, MinimalityCertificate,
};

pub const DEFAULT_MAX_COMPONENTS: usize = 64;

/// Which side of the split was finite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SplitCase {
    /// `V⁻` finite: absorbed into `U1`, continue with `V⁺`.
    MinusFinite = 1,
    /// `V⁺` finite: absorbed into `U1`, continue with `V⁻`.
    PlusFinite = 2,
    /// Both infinite: continue with `V⁻`, then `V⁺`.
    BothInfinite = 3,
}

impl SplitCase {
    pub fn number(self) -> u8 {
        self as u8
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FiberGrowth {
    pub fiber: u32,
    pub count_half: u32,
    pub count_full: u32,
    pub witness: HypRef,
}

/// `f(V)` = position of the last chain element crossed by `V`, for the
/// members of `V⁻` inside the window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FMapReport {
    pub values: Vec<(HypRef, Option<u32>)>,
    pub fibers: BTreeMap<u32, u32>,
    pub violation: Option<FiberGrowth>,
    /// `V⁻ ≺ U1`, evaluated against the chain.
    pub prec_minus_chain: Decided,
    pub horizon: u32,
}

impl FMapReport {
    pub fn verdict(&self) -> bool {
        self.violation.is_none() && self.prec_minus_chain.is_true()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitResult {
    /// `U1` after absorbing the finite side.
    pub u1: HypSet,
    pub vplus: HypSet,
    pub vminus: HypSet,
    pub case: SplitCase,
    /// What the absorption added to `U1`.
    pub absorbed: HypSet,
    pub fmap: FMapReport,
}

impl SplitResult {
    /// The part(s) left to decompose, in processing order.
    pub fn remaining(&self) -> Vec<HypSet> {
        let rest = |s: &HypSet| s.difference(&self.u1);
        match self.case {
            SplitCase::MinusFinite => vec![rest(&self.vplus)],
            SplitCase::PlusFinite => vec![rest(&self.vminus)],
            SplitCase::BothInfinite => vec![rest(&self.vminus), rest(&self.vplus)],
        }
    }
}

/// Chain and its closure: the first minimal UBS of `v`.
pub fn extract_minimal(v: &HypSet, scope: &Scope, seed: u64) -> Result<(HypSet, Chain)> {
    let cert = certify_ubs(v, scope)?;
    if let Some((msg, witness)) = cert.failure() {
        return Err(Error::precondition(format!("input is not a UBS: {msg}"), witness));
    }
    extract_minimal_unchecked(v, scope, seed)
}

/// Closure of an inextensible chain, starting from the seeded family tail.
/// Making a chain inextensible can add hyperplanes whose closure drags in
/// a second family tail; the remaining tails are then tried in turn.
fn extract_minimal_unchecked(v: &HypSet, scope: &Scope, seed: u64) -> Result<(HypSet, Chain)> {
    let mut first = None;
    for tail in seeded_tails(v, scope, seed)? {
        let chain = inextensible_chain_from(v, scope, tail)?;
        let u1 = inseparable_closure(&chain.as_set(), scope);
        contained(&u1, v, "closure of the chain leaves the set")?;
        if u1.single_family_tail().is_some() {
            return Ok((u1, chain));
        }
        first.get_or_insert((u1, chain));
    }
    Ok(first.expect("at least one tail"))
}

fn contained(inner: &HypSet, outer: &HypSet, what: &str) -> Result<()> {
    let extra = inner.difference(outer);
    if extra.is_empty() {
        return Ok(());
    }
    let (f, i) = extra.extent();
    Err(Error::consistency(
        format!("{what}: {extra}"),
        extra.members_below(f.max(1), i.max(1)).into_iter().take(3).collect(),
    ))
}

/// Splits `v − u1` into `V⁺` (members crossing all but finitely many of
/// `u1`) and `V⁻`, verifies the facts the existence argument derives about
/// them, and absorbs a finite side into `u1`.
pub fn split(v: &HypSet, u1: &HypSet, chain: &Chain, scope: &Scope) -> Result<SplitResult> {
    let v1 = v.difference(u1);
    let mut plus = fixedbitset::FixedBitSet::with_capacity(scope.len());
    let mut minus = plus.clone();
    for k in scope.bits(&v1).ones() {
        match crate::ubs::cofinitely_crosses_set(scope.member(k), u1, scope)? {
            Decided::True => plus.insert(k),
            Decided::False => minus.insert(k),
            Decided::Unknown => {
                return Err(Error::precondition(
                    format!("cannot decide whether {} crosses almost all of {u1}", scope.member(k)),
                    vec![scope.member(k)],
                ))
            }
        }
    }
    let vplus = scope.lift(&plus).intersection(&v1);
    let vminus = v1.difference(&vplus);

    let u0 = chain
        .first()
        .ok_or_else(|| Error::consistency("empty chain", Vec::new()))?;
    let amb = scope.ambient();
    for h in scope.refs(&scope.bits(&vminus)) {
        if !amb.crosses(h, u0)? {
            return Err(Error::consistency(
                format!("{h} crosses finitely many chain elements but not the first one {u0}"),
                vec![h, u0],
            ));
        }
    }
    if let Some([w, a, b]) = check_inseparable(&vminus, scope) {
        return Err(Error::consistency(
            format!("V⁻ is separable: {w} separates {a} from {b}"),
            vec![w, a, b],
        ));
    }
    if let Some([w, a, b]) = check_inseparable(&vplus, scope) {
        return Err(Error::consistency(
            format!("V⁺ is separable: {w} separates {a} from {b}"),
            vec![w, a, b],
        ));
    }
    let fmap = f_map_check(&vminus, chain, scope)?;
    if let Some(g) = &fmap.violation {
        return Err(Error::precondition(
            format!(
                "fiber f⁻¹({}) grows from {} to {} members between horizons: input is not unidirectional",
                g.fiber, g.count_half, g.count_full
            ),
            vec![g.witness],
        ));
    }

    let case = if !vminus.is_infinite() {
        SplitCase::MinusFinite
    } else if !vplus.is_infinite() {
        SplitCase::PlusFinite
    } else {
        SplitCase::BothInfinite
    };
    let finite_side = match case {
        SplitCase::MinusFinite => vminus.clone(),
        SplitCase::PlusFinite => vplus.clone(),
        SplitCase::BothInfinite => HypSet::empty(),
    };
    let grown = if finite_side.is_empty() {
        u1.clone()
    } else {
        let g = inseparable_closure(&u1.union(&finite_side), scope);
        contained(&g, v, "absorbing the finite side leaves the set")?;
        g
    };
    Ok(SplitResult {
        absorbed: grown.difference(u1),
        u1: grown,
        vplus,
        vminus,
        case,
        fmap,
    })
}

/// Computes `f` on the window and compares fiber sizes at half the window
/// against the full window; a fiber that keeps growing is infinite.
pub fn f_map_check(vminus: &HypSet, chain: &Chain, scope: &Scope) -> Result<FMapReport> {
    let amb = scope.ambient();
    let (fams, idx) = scope.limits();
    let elems = chain.elements_below(idx);
    let half = |h: HypRef| h.index < idx / 2 && (scope.family_cap().is_none() || h.family < fams / 2);
    let stable_positions = elems
        .iter()
        .take_while(|e| e.index < idx / 4 || scope.index_cap().is_none())
        .count();
    let mut values = Vec::new();
    let mut fibers: BTreeMap<u32, u32> = BTreeMap::new();
    let mut half_fibers: BTreeMap<u32, u32> = BTreeMap::new();
    let mut late: BTreeMap<u32, HypRef> = BTreeMap::new();
    for h in scope.refs(&scope.bits(vminus)) {
        let mut f = None;
        for (j, e) in elems.iter().enumerate() {
            if *e != h && amb.crosses(h, *e)? {
                f = Some(j as u32);
            }
        }
        values.push((h, f));
        if let Some(j) = f {
            *fibers.entry(j).or_default() += 1;
            if half(h) {
                *half_fibers.entry(j).or_default() += 1;
            } else {
                late.entry(j).or_insert(h);
            }
        }
    }
    let violation = fibers.iter().find_map(|(&j, &full)| {
        let h = half_fibers.get(&j).copied().unwrap_or(0);
        ((j as usize) < stable_positions && scope.index_cap().is_some() && full > h && h > 0).then(|| FiberGrowth {
            fiber: j,
            count_half: h,
            count_full: full,
            witness: late[&j],
        })
    });
    Ok(FMapReport {
        values,
        fibers,
        violation,
        prec_minus_chain: prec(vminus, &chain.as_set(), scope)?,
        horizon: scope.horizon(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub set: HypSet,
    pub chain: Option<Chain>,
    pub certificate: MinimalityCertificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub input: HypSet,
    pub chain: Chain,
    pub closure: HypSet,
    pub vplus: HypSet,
    pub vminus: HypSet,
    pub case: u8,
    pub absorbed: HypSet,
    pub fibers: BTreeMap<u32, u32>,
    pub component: usize,
}

/// Γ: an edge `i → j` when `U_i ≺ U_j` but not `U_j ≺ U_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrecGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
    /// Pairs whose relation could not be decided.
    pub unknown: Vec<(usize, usize)>,
}

impl PrecGraph {
    pub fn to_graph(&self) -> DiGraph<usize, ()> {
        let mut g = DiGraph::new();
        let nodes: Vec<_> = (0..self.vertices).map(|k| g.add_node(k)).collect();
        for &(a, b) in &self.edges {
            g.add_edge(nodes[a], nodes[b], ());
        }
        g
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a, b))
    }
}

pub fn build_prec_graph(components: &[HypSet], scope: &Scope) -> Result<PrecGraph> {
    let n = components.len();
    let mut rel = vec![Decided::True; n * n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                rel[i * n + j] = prec(&components[i], &components[j], scope)?;
            }
        }
    }
    let mut edges = Vec::new();
    let mut unknown = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            match (rel[i * n + j], rel[j * n + i]) {
                (Decided::True, Decided::False) => edges.push((i, j)),
                (Decided::Unknown, _) | (_, Decided::Unknown) if i < j => unknown.push((i, j)),
                _ => {}
            }
        }
    }
    Ok(PrecGraph {
        vertices: n,
        edges,
        unknown,
    })
}

/// Topological order, smallest available index first.
pub fn topo_order(g: &PrecGraph) -> Result<Vec<usize>> {
    if let Some(&(a, b)) = g.unknown.first() {
        return Err(Error::Undecided(a, b));
    }
    let n = g.vertices;
    let mut indeg = vec![0usize; n];
    let mut succ = vec![Vec::new(); n];
    for &(a, b) in &g.edges {
        succ[a].push(b);
        indeg[b] += 1;
    }
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                heap.push(Reverse(w));
            }
        }
    }
    if order.len() == n {
        return Ok(order);
    }
    // every leftover vertex has a leftover predecessor: walk back to a repeat
    let mut pred = vec![usize::MAX; n];
    for &(a, b) in &g.edges {
        if indeg[a] > 0 && indeg[b] > 0 && pred[b] == usize::MAX {
            pred[b] = a;
        }
    }
    let start = (0..n).find(|&v| indeg[v] > 0).expect("leftover vertex");
    let mut seen = vec![usize::MAX; n];
    let mut walk = Vec::new();
    let mut v = start;
    while seen[v] == usize::MAX {
        seen[v] = walk.len();
        walk.push(v);
        v = pred[v];
    }
    let mut cycle = walk[seen[v]..].to_vec();
    cycle.reverse();
    Err(Error::Cycle(cycle))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecomposeOptions {
    pub seed: u64,
    pub max_components: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            seed: 0,
            max_components: DEFAULT_MAX_COMPONENTS,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub ambient: String,
    pub input: HypSet,
    pub horizon: u32,
    pub seed: u64,
    pub dimension: Dimension,
    pub components: Vec<Component>,
    pub residue: HypSet,
    /// Part left undecomposed once the component budget ran out.
    pub continuation: Option<HypSet>,
    pub prec_graph: PrecGraph,
    pub linear_order: Option<Vec<usize>>,
    pub trace: Vec<TraceStep>,
}

impl Decomposition {
    pub fn sets(&self) -> Vec<HypSet> {
        self.components.iter().map(|c| c.set.clone()).collect()
    }

    pub fn truncated(&self) -> bool {
        self.continuation.is_some()
    }

    /// Assembles a decomposition from given components (no extraction),
    /// e.g. to compare an alternative splitting of the same set.
    pub fn from_components(
        input: &HypSet,
        sets: Vec<HypSet>,
        continuation: Option<HypSet>,
        scope: &Scope,
    ) -> Result<Self> {
        let mut components = Vec::new();
        for s in sets {
            components.push(Component {
                certificate: is_minimal_ubs(&s, scope)?,
                chain: None,
                set: s,
            });
        }
        let covered = components
            .iter()
            .map(|c| &c.set)
            .chain(continuation.iter())
            .fold(HypSet::empty(), |acc, s| acc.union(s));
        let prec_graph = build_prec_graph(&components.iter().map(|c| c.set.clone()).collect::<Vec<_>>(), scope)?;
        let linear_order = topo_order(&prec_graph).ok();
        Ok(Decomposition {
            ambient: scope.ambient().describe(),
            input: input.clone(),
            horizon: scope.horizon(),
            seed: 0,
            dimension: scope.ambient().dimension()?,
            residue: input.difference(&covered),
            components,
            continuation,
            prec_graph,
            linear_order,
            trace: Vec::new(),
        })
    }
}

fn step_seed(seed: u64, step: usize) -> u64 {
    if seed == 0 {
        0
    } else {
        seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(step as u64) | 1
    }
}

/// Component budget inside a family window: tail queries past half the
/// window come back undecided.
fn window_budget(scope: &Scope, max_components: usize) -> usize {
    scope
        .family_cap()
        .map_or(max_components, |c| max_components.min((c / 2).max(1) as usize))
}

/// Decomposes the UBS `v` into minimal UBSs plus a finite residue.
pub fn decompose(v: &HypSet, scope: &Scope, opts: DecomposeOptions) -> Result<Decomposition> {
    let cert = certify_ubs(v, scope)?;
    if let Some((msg, witness)) = cert.failure() {
        return Err(Error::precondition(format!("input is not a UBS: {msg}"), witness));
    }
    let mut components: Vec<Component> = Vec::new();
    let mut residue = HypSet::empty();
    let mut continuation: Option<HypSet> = None;
    let mut trace = Vec::new();
    let budget = window_budget(scope, opts.max_components);
    let mut stack = vec![v.clone()];
    while let Some(w) = stack.pop() {
        if w.is_empty() {
            continue;
        }
        if !w.is_infinite() {
            residue = residue.union(&w);
            continue;
        }
        if components.len() >= budget {
            continuation = Some(continuation.map_or(w.clone(), |c| c.union(&w)));
            continue;
        }
        let (u1, chain) = extract_minimal_unchecked(&w, scope, step_seed(opts.seed, trace.len()))?;
        let sp = split(&w, &u1, &chain, scope)?;
        let certificate = is_minimal_ubs(&sp.u1, scope)?;
        if !certificate.minimal {
            let (msg, witness) = certificate
                .ubs
                .failure()
                .unwrap_or_else(|| (format!("{} has more than one family tail", sp.u1), Vec::new()));
            return Err(Error::consistency(
                format!("extracted component is not a minimal UBS ({msg}); try a larger horizon"),
                witness,
            ));
        }
        trace.push(TraceStep {
            input: w.clone(),
            chain: chain.clone(),
            closure: u1,
            vplus: sp.vplus.clone(),
            vminus: sp.vminus.clone(),
            case: sp.case.number(),
            absorbed: sp.absorbed.clone(),
            fibers: sp.fmap.fibers.clone(),
            component: components.len(),
        });
        // the stack pops from the back: push the part processed last first
        for rest in sp.remaining().into_iter().rev() {
            stack.push(rest);
        }
        components.push(Component {
            set: sp.u1,
            chain: Some(chain),
            certificate,
        });
    }
    let sets: Vec<HypSet> = components.iter().map(|c| c.set.clone()).collect();
    let prec_graph = build_prec_graph(&sets, scope)?;
    let linear_order = match topo_order(&prec_graph) {
        Ok(o) => Some(o),
        Err(Error::Undecided(..)) => None,
        Err(e) => return Err(e),
    };
    Ok(Decomposition {
        ambient: scope.ambient().describe(),
        input: v.clone(),
        horizon: scope.horizon(),
        seed: opts.seed,
        dimension: scope.ambient().dimension()?,
        components,
        residue,
        continuation,
        prec_graph,
        linear_order,
        trace,
    })
}

/// Re-checks every postcondition of a decomposition with independent
/// predicate calls; returns the violations found.
pub fn verify_decomposition(d: &Decomposition, scope: &Scope) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let sets = d.sets();
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !sets[i].is_disjoint(&sets[j]) {
                out.push(format!("components {i} and {j} overlap"));
            }
        }
        if !sets[i].is_disjoint(&d.residue) {
            out.push(format!("component {i} meets the residue"));
        }
    }
    if d.residue.is_infinite() {
        out.push(format!("residue {} is infinite", d.residue));
    }
    let union = sets
        .iter()
        .chain(d.continuation.iter())
        .fold(d.residue.clone(), |acc, s| acc.union(s));
    if union != d.input {
        out.push(format!(
            "components, residue and continuation give {union}, not {}",
            d.input
        ));
    }
    for (i, s) in sets.iter().enumerate() {
        let cert = is_minimal_ubs(s, scope)?;
        if !cert.ubs.is_ubs() {
            out.push(format!("component {i} is not a UBS: {:?}", cert.ubs.failure()));
        } else if !cert.minimal {
            out.push(format!("component {i} is not minimal"));
        }
    }
    let g = build_prec_graph(&sets, scope)?;
    if g != d.prec_graph {
        out.push("stored prec graph differs from a recomputation".into());
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            let (a, b) = (prec(&sets[i], &sets[j], scope)?, prec(&sets[j], &sets[i], scope)?);
            if a == Decided::False && b == Decided::False {
                out.push(format!("components {i} and {j} are ≺-incomparable"));
            }
        }
    }
    if let Some(order) = &d.linear_order {
        let mut pos = vec![usize::MAX; sets.len()];
        for (k, &v) in order.iter().enumerate() {
            if v < pos.len() {
                pos[v] = k;
            }
        }
        if pos.contains(&usize::MAX) || order.len() != sets.len() {
            out.push("linear order is not a permutation".into());
        } else {
            for &(a, b) in &d.prec_graph.edges {
                if pos[a] > pos[b] {
                    out.push(format!("linear order puts {b} before {a} against edge {a} -> {b}"));
                }
            }
            for x in 0..order.len() {
                for y in x + 1..order.len() {
                    if !prec(&sets[order[x]], &sets[order[y]], scope)?.is_true() {
                        out.push(format!("U{} ≺ U{} fails along the linear order", order[x], order[y]));
                    }
                }
            }
        }
    } else if d.prec_graph.unknown.is_empty() {
        out.push("linear order missing".into());
    }
    if let Dimension::Finite(dim) = d.dimension {
        if sets.len() > dim as usize {
            out.push(format!("{} components exceed dimension {dim}", sets.len()));
        }
    }
    Ok(out)
}

/// Matching of two decompositions by almost-equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub equal: bool,
    pub left_count: usize,
    pub right_count: usize,
    pub matching: Vec<(usize, usize)>,
    pub unmatched_left: Vec<usize>,
    pub unmatched_right: Vec<usize>,
    pub finite_dimensional: bool,
    /// Set when a finite-dimensional pair fails to match, contradicting
    /// uniqueness.
    pub uniqueness_violation: bool,
}

impl fmt::Display for Comparison {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} ({} vs {} components, {} matched",
            if self.equal { "equal" } else { "different" },
            self.left_count,
            self.right_count,
            self.matching.len()
        )?;
        if !self.unmatched_left.is_empty() {
            write!(f, ", unmatched left {:?}", self.unmatched_left)?;
        }
        if !self.unmatched_right.is_empty() {
            write!(f, ", unmatched right {:?}", self.unmatched_right)?;
        }
        f.write_str(")")
    }
}

pub fn compare_components(left: &[HypSet], right: &[HypSet], finite_dimensional: bool) -> Comparison {
    let mut g: UnGraph<(), ()> = UnGraph::default();
    let l: Vec<_> = left.iter().map(|_| g.add_node(())).collect();
    let r: Vec<_> = right.iter().map(|_| g.add_node(())).collect();
    for (i, a) in left.iter().enumerate() {
        for (j, b) in right.iter().enumerate() {
            if a.almost_equivalent(b) {
                g.add_edge(l[i], r[j], ());
            }
        }
    }
    let m = maximum_matching(&g);
    let mut matching: Vec<(usize, usize)> = (0..left.len())
        .filter_map(|i| m.mate(l[i]).map(|x| (i, x.index() - left.len())))
        .collect();
    matching.sort_unstable();
    let unmatched_left: Vec<usize> = (0..left.len()).filter(|i| m.mate(l[*i]).is_none()).collect();
    let unmatched_right: Vec<usize> = (0..right.len()).filter(|j| m.mate(r[*j]).is_none()).collect();
    let equal = left.len() == right.len() && unmatched_left.is_empty();
    Comparison {
        equal,
        left_count: left.len(),
        right_count: right.len(),
        matching,
        unmatched_left,
        unmatched_right,
        finite_dimensional,
        uniqueness_violation: finite_dimensional && !equal,
    }
}

pub fn compare_decompositions(d1: &Decomposition, d2: &Decomposition) -> Comparison {
    compare_components(
        &d1.sets(),
        &d2.sets(),
        d1.dimension.is_finite() && d2.dimension.is_finite(),
    )
}

/// The competing splitting of the counterexample system: every family
/// from index 1 on, plus the diagonal `{H^n_1}`. Families from
/// `max_components` on are left as continuation.
pub fn corrigendum_alternative(scope: &Scope, max_components: usize) -> Result<Decomposition> {
    let Some(FamilySystem::Corrigendum { families }) = scope.ambient().system() else {
        return Err(Error::input(
            "ambient",
            "the alternative splitting needs the corrigendum system",
        ));
    };
    let count = families.as_option();
    let budget = window_budget(scope, max_components) as u32;
    let listed = count.map_or(budget, |n| n.min(budget));
    let mut sets: Vec<HypSet> = (0..listed).map(|n| HypSet::family_tail(n, 1)).collect();
    sets.push(diagonal(count));
    let continuation = match count {
        Some(n) if n <= listed => None,
        _ => Some(HypSet::rect((listed, count), (1, None))),
    };
    Decomposition::from_components(&HypSet::families(count), sets, continuation, scope)
}

/// `V′ = {H^n_1}` over all families.
pub fn diagonal(families: Option<u32>) -> HypSet {
    HypSet::rect((0, families), (1, Some(2)))
}
