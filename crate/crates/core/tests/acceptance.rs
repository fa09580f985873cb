//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if
//! any criterion fails.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use ubs_core::decompose::{
    compare_components, corrigendum_alternative, decompose, diagonal, verify_decomposition, DecomposeOptions,
    Decomposition,
};
use ubs_core::dual::{self, dual_complex, median_check};
use ubs_core::family::{FamilyCount, FamilySystem};
use ubs_core::generators::{gen_planted, Plant};
use ubs_core::realize::RealizeLimits;
use ubs_core::ubs::{certify_ubs, check_fact_i, check_fact_ii, inseparable_closure, FactCheck};
use ubs_core::wallspace::FiniteWallspace;
use ubs_core::{Ambient, Decided, HypRef, HypSet, Scope};

// pinned tolerances and budgets
const COUNTEREXAMPLE_HORIZON: u32 = 100;
const COUNTEREXAMPLE_RUNTIME: Duration = Duration::from_secs(10);
const UNIQUENESS_HORIZON: u32 = 60;
const TIE_BREAK_SEEDS: [u64; 5] = [0, 1, 7, 42, 1234];
const MIN_PLANTED: usize = 20;
const MAX_PLANTED_DIM: u32 = 5;
const MIN_FACT_TRIPLES: usize = 100;
const ORACLE_WALLS: usize = 20;
const CLOSURE_WALLS: usize = 12;
const STABILITY_HORIZONS: (u32, u32) = (50, 100);
const BRUTE_PREC_WINDOW: u32 = 100;
const UNBOUNDED_COMPONENTS: usize = 8;

type Outcome = Result<String, String>;

fn corrigendum(n: u32) -> Ambient {
    Ambient::Symbolic(FamilySystem::Corrigendum {
        families: FamilyCount::Finite(n),
    })
}

fn grid(d: u32) -> Ambient {
    Ambient::Symbolic(FamilySystem::Grid { dim: d })
}

fn planted_ubs() -> Vec<(String, Ambient)> {
    let mut out = vec![
        ("planted:tied".to_string(), gen_planted(&Plant::TiedPair, 0).unwrap()),
        ("planted:both".to_string(), gen_planted(&Plant::BothSides, 0).unwrap()),
        (
            "planted:empty:3".to_string(),
            gen_planted(&Plant::Empty { dim: 3 }, 0).unwrap(),
        ),
        ("planted:skew".to_string(), gen_planted(&Plant::Skew, 0).unwrap()),
    ];
    for f in 2..=5 {
        for seed in 0..6 {
            out.push((
                format!("planted:random:{f} seed {seed}"),
                gen_planted(&Plant::Random { families: f }, seed).unwrap(),
            ));
        }
    }
    out
}

fn rule_instances() -> Vec<(String, Ambient)> {
    let mut out: Vec<(String, Ambient)> = (1..=4).map(|d| (format!("grid:{d}"), grid(d))).collect();
    out.extend((2..=5).map(|n| (format!("corrigendum:{n}"), corrigendum(n))));
    out.extend(planted_ubs());
    out
}

fn run_decompose(amb: &Ambient, horizon: u32, seed: u64) -> Result<Decomposition, String> {
    let scope = Scope::new(amb, horizon).map_err(|e| e.to_string())?;
    decompose(
        &amb.universe(),
        &scope,
        DecomposeOptions {
            seed,
            ..Default::default()
        },
    )
    .map_err(|e| e.to_string())
}

fn names(hs: &[HypRef]) -> String {
    hs.iter().map(|h| h.to_string()).collect::<Vec<_>>().join(" ")
}

fn family_of(set: &HypSet, families: u32) -> Option<u32> {
    (0..families).find(|&f| set.almost_equivalent(&HypSet::family(f)))
}

fn criterion_1() -> Outcome {
    let amb = corrigendum(5);
    let scope = Scope::new(&amb, COUNTEREXAMPLE_HORIZON).map_err(|e| e.to_string())?;
    let start = Instant::now();
    let d = decompose(&amb.universe(), &scope, DecomposeOptions::default()).map_err(|e| e.to_string())?;
    let issues = verify_decomposition(&d, &scope).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    if d.components.len() != 5 {
        return Err(format!("{} components", d.components.len()));
    }
    let fams: Vec<Option<u32>> = d.components.iter().map(|c| family_of(&c.set, 5)).collect();
    if fams.iter().copied().collect::<BTreeSet<_>>() != (0..5).map(Some).collect() {
        return Err(format!("components are not one per family: {fams:?}"));
    }
    if let Some(c) = d.components.iter().find(|c| !c.certificate.minimal) {
        return Err(format!("{} not certified minimal", c.set));
    }
    let fam = |k: usize| fams[k].unwrap();
    let edges: BTreeSet<(u32, u32)> = d.prec_graph.edges.iter().map(|&(a, b)| (fam(a), fam(b))).collect();
    let path: BTreeSet<(u32, u32)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    if edges != path {
        return Err(format!("prec edges {edges:?}"));
    }
    let order: Vec<u32> = d
        .linear_order
        .as_ref()
        .ok_or("no linear order")?
        .iter()
        .map(|&k| fam(k))
        .collect();
    if order != [0, 1, 2, 3, 4] {
        return Err(format!("order {order:?}"));
    }
    if !issues.is_empty() || d.residue.is_infinite() {
        return Err(format!("verification issues {issues:?}, residue {}", d.residue));
    }
    if elapsed > COUNTEREXAMPLE_RUNTIME {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!(
        "5 components one per family, transitive path 0->4, order 0..4, {elapsed:.2?}"
    ))
}

fn criterion_2() -> Outcome {
    let amb = Ambient::Symbolic(FamilySystem::Corrigendum {
        families: FamilyCount::Unbounded,
    });
    let scope = Scope::new(&amb, COUNTEREXAMPLE_HORIZON).map_err(|e| e.to_string())?;
    let mut failures = Vec::new();

    let alt = corrigendum_alternative(&scope, UNBOUNDED_COMPONENTS).map_err(|e| e.to_string())?;
    let v_prime = diagonal(None);
    for c in &alt.components {
        if !c.certificate.minimal {
            let why = c
                .certificate
                .ubs
                .failure()
                .map(|(m, w)| format!("{m}; witness {}", names(&w)))
                .unwrap_or_else(|| "not minimal".into());
            failures.push(format!("part {} is not a certified minimal UBS ({why})", c.set));
        }
    }
    let all_tails = HypSet::rect((0, None), (1, None));
    let union = all_tails.union(&v_prime);
    if !union.almost_equivalent(&amb.universe()) {
        let missing = amb.universe().difference(&union);
        failures.push(format!("union of the parts misses the infinite set {missing}"));
    }

    let ours = decompose(
        &amb.universe(),
        &scope,
        DecomposeOptions {
            seed: 0,
            max_components: UNBOUNDED_COMPONENTS,
        },
    )
    .map_err(|e| e.to_string())?;
    let (l, r) = (ours.sets(), alt.sets());
    let cmp = compare_components(&l, &r, false);
    let v_prime_unmatched = cmp.unmatched_right.iter().any(|&k| r[k] == v_prime);
    if cmp.equal || !v_prime_unmatched {
        failures.push(format!("comparison did not single out V' ({cmp})"));
    }

    // context for the ledger: the other diagonal is no better
    let d0 = HypSet::rect((0, None), (0, Some(1)));
    let cert0 = certify_ubs(&d0, &scope).map_err(|e| e.to_string())?;
    println!(
        "  info: comparison {cmp}; diagonal {{H^n_0}} inseparable: {} {}",
        cert0.inseparable,
        cert0.separation_witness.map(|w| names(&w)).unwrap_or_default()
    );

    if failures.is_empty() {
        Ok("alternative parts certified, union almost-equivalent, V' unmatched".into())
    } else {
        Err(failures.join("; "))
    }
}

fn criterion_3() -> Outcome {
    let mut instances: Vec<(String, Ambient, bool)> = (1..=4).map(|d| (format!("grid:{d}"), grid(d), true)).collect();
    let planted = planted_ubs();
    if planted.len() < MIN_PLANTED {
        return Err(format!("only {} planted instances", planted.len()));
    }
    instances.extend(planted.into_iter().map(|(n, a)| (n, a, false)));
    let mut pairs = 0;
    for (name, amb, is_grid) in &instances {
        let dim = amb.dimension().map_err(|e| e.to_string())?;
        let dim = dim
            .bound()
            .filter(|&d| d <= MAX_PLANTED_DIM)
            .ok_or(format!("{name}: dimension {dim}"))?;
        let runs: Vec<Decomposition> = TIE_BREAK_SEEDS
            .iter()
            .map(|&s| run_decompose(amb, UNIQUENESS_HORIZON, s).map_err(|e| format!("{name} seed {s}: {e}")))
            .collect::<Result<_, _>>()?;
        for (i, a) in runs.iter().enumerate() {
            let k = a.components.len() as u32;
            if k > dim || (*is_grid && k != dim) {
                return Err(format!("{name}: k = {k}, dimension {dim}"));
            }
            for b in &runs[i + 1..] {
                let cmp = compare_components(&a.sets(), &b.sets(), true);
                if !cmp.equal {
                    return Err(format!("{name}: seeds {} and {} differ ({cmp})", a.seed, b.seed));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!(
        "{} instances ({} planted), {} seeds, {pairs} equal pairs",
        instances.len(),
        instances.len() - 4,
        TIE_BREAK_SEEDS.len()
    ))
}

/// `a ≺ b` read off raw crossing counts: for every member of `b` in the
/// lower half of the window, the members of `a` it fails to cross are the
/// same in the window and in the doubled window.
fn brute_prec(a: &HypSet, b: &HypSet, amb: &Ambient, families: u32) -> bool {
    let t = BRUTE_PREC_WINDOW;
    let a_small = a.members_below(families, t);
    let a_large = a.members_below(families, 2 * t);
    b.members_below(families, t / 2).into_iter().all(|y| {
        let count = |xs: &[HypRef]| xs.iter().filter(|&&x| x != y && !amb.crosses(x, y).unwrap()).count();
        count(&a_small) == count(&a_large)
    })
}

fn criterion_4() -> Outcome {
    let mut triples = 0;
    let mut violations = Vec::new();
    let mut library_violations = Vec::new();
    let mut undecided = 0;
    let mut disagreements = Vec::new();
    for (name, amb) in rule_instances() {
        let families = amb.system().unwrap().family_count().as_option().unwrap();
        let scope = Scope::new(&amb, UNIQUENESS_HORIZON).map_err(|e| e.to_string())?;
        let d = run_decompose(&amb, UNIQUENESS_HORIZON, 0).map_err(|e| format!("{name}: {e}"))?;
        let sets = d.sets();
        let n = sets.len();
        let mut prec_of = vec![vec![false; n]; n];
        for i in 0..n {
            for j in 0..n {
                if i == j {
                    continue;
                }
                let sym = ubs_core::ubs::prec(&sets[i], &sets[j], &scope).map_err(|e| e.to_string())?;
                let brute = brute_prec(&sets[i], &sets[j], &amb, families);
                if sym != Decided::from_bool(brute) {
                    disagreements.push(format!("{name}: prec(U{i}, U{j}) {sym:?} vs brute {brute}"));
                }
                prec_of[i][j] = brute;
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if a == b || b == c || a == c {
                        continue;
                    }
                    triples += 1;
                    // brute-force reading of both facts
                    let ii = !(prec_of[a][b] && prec_of[b][c])
                        || prec_of[a][c]
                        || (prec_of[a][b] && prec_of[b][a] && prec_of[c][a]);
                    if !ii {
                        violations.push(format!(
                            "{name}: brute force: fact (ii) fails on {} < {} < {}",
                            sets[a], sets[b], sets[c]
                        ));
                    }
                    let ab = sets[a].union(&sets[b]);
                    let big_c = brute_prec(&ab, &sets[c], &amb, families);
                    let c_big = brute_prec(&sets[c], &ab, &amb, families);
                    if (big_c && !prec_of[a][c]) || (c_big && !prec_of[c][a]) {
                        violations.push(format!(
                            "{name}: brute force: fact (i) fails on {} in {ab}, {}",
                            sets[a], sets[c]
                        ));
                    }
                    // and the library's own checks
                    for check in [
                        check_fact_i(&sets[a], &ab, &sets[c], &scope).map_err(|e| e.to_string())?,
                        check_fact_ii(&sets[a], &sets[b], &sets[c], &scope).map_err(|e| e.to_string())?,
                    ] {
                        match check {
                            FactCheck::Violated(m) => library_violations.push(format!("{name}: {m}")),
                            FactCheck::Undecided => undecided += 1,
                            _ => {}
                        }
                    }
                }
            }
        }
    }
    if triples < MIN_FACT_TRIPLES {
        return Err(format!("only {triples} triples"));
    }
    if !violations.is_empty() || !library_violations.is_empty() || !disagreements.is_empty() || undecided > 0 {
        for v in violations.iter().chain(&library_violations).chain(&disagreements) {
            println!("  {v}");
        }
        return Err(format!(
            "{triples} triples: {} brute-force violations, {} library violations, {undecided} undecided, {} prec disagreements",
            violations.len(),
            library_violations.len(),
            disagreements.len(),
        ));
    }
    Ok(format!(
        "{triples} component triples, zero violations, symbolic prec = brute force"
    ))
}

fn truncation(amb: &Ambient, max_walls: usize) -> Option<(u32, FiniteWallspace)> {
    let families = amb.system()?.family_count().as_option()? as usize;
    let h = (max_walls / families) as u32;
    if h < 2 {
        return None;
    }
    let limits = RealizeLimits {
        max_walls,
        ..RealizeLimits::default()
    };
    Some((h, amb.realize_truncation_with(h, limits).unwrap()))
}

fn oracle_instances() -> Vec<(String, Ambient)> {
    let mut out = rule_instances();
    out.push((
        "planted:low:3".into(),
        gen_planted(&Plant::LowFamily { up_to: 3 }, 0).unwrap(),
    ));
    out.push(("planted:mirrored".into(), gen_planted(&Plant::Mirrored, 0).unwrap()));
    out
}

fn closure_oracle(ws: &FiniteWallspace) -> Result<usize, String> {
    let n = ws.wall_count();
    assert!(n <= CLOSURE_WALLS);
    let mut sep = vec![vec![0u32; n]; n];
    for (a, row) in sep.iter_mut().enumerate() {
        for (b, mask) in row.iter_mut().enumerate() {
            for w in 0..n {
                if ws.separates_at(w, a, b) {
                    *mask |= 1 << w;
                }
            }
        }
    }
    let full = 1u32 << n;
    let inseparable: Vec<bool> = (0..full)
        .map(|m| (0..n).all(|a| m >> a & 1 == 0 || (0..n).all(|b| m >> b & 1 == 0 || sep[a][b] & !m == 0)))
        .collect();
    let amb = Ambient::Finite(ws.clone());
    let scope = Scope::new(&amb, 2).map_err(|e| e.to_string())?;
    for s in 0..full {
        // smallest inseparable superset by exhaustive search
        let mut best: Option<u32> = None;
        let free = !s & (full - 1);
        let mut sub = free;
        loop {
            let t = s | sub;
            if inseparable[t as usize] && best.is_none_or(|b| t.count_ones() < b.count_ones()) {
                best = Some(t);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & free;
        }
        let best = best.expect("the full set is inseparable");
        let set = HypSet::from_refs((0..n as u32).filter(|k| s >> k & 1 == 1).map(HypRef::wall));
        let closure = inseparable_closure(&set, &scope);
        let mask = closure
            .members_below(1, n as u32)
            .iter()
            .fold(0u32, |m, h| m | 1 << h.index);
        if mask != best {
            return Err(format!("closure of {s:#b} is {mask:#b}, search found {best:#b}"));
        }
    }
    Ok(full as usize)
}

fn criterion_5() -> Outcome {
    let (mut pairs, mut triples, mut instances) = (0usize, 0usize, 0usize);
    for (name, amb) in oracle_instances() {
        let Some((h, ws)) = truncation(&amb, ORACLE_WALLS) else {
            continue;
        };
        instances += 1;
        let walls = amb.members_below(h);
        if walls.len() != ws.wall_count() {
            return Err(format!("{name}: {} walls realized of {}", ws.wall_count(), walls.len()));
        }
        for (a, &x) in walls.iter().enumerate() {
            if ws.walls()[a].id != x.to_string() {
                return Err(format!("{name}: wall {a} named {}", ws.walls()[a].id));
            }
            for (b, &y) in walls.iter().enumerate() {
                if a == b {
                    continue;
                }
                pairs += 1;
                if amb.crosses(x, y).unwrap() != ws.crosses_at(a, b) {
                    return Err(format!("{name}: crosses({x}, {y}) disagrees"));
                }
                for (w, &z) in walls.iter().enumerate() {
                    if w == a || w == b {
                        continue;
                    }
                    triples += 1;
                    if amb.separates(z, x, y).unwrap() != ws.separates_at(w, a, b) {
                        return Err(format!("{name}: separates({z}, {x}, {y}) disagrees"));
                    }
                }
            }
        }
    }
    let mut subsets = 0;
    let mut closure_instances = 0;
    for (name, amb) in oracle_instances() {
        if let Some((_, ws)) = truncation(&amb, CLOSURE_WALLS) {
            subsets += closure_oracle(&ws).map_err(|e| format!("{name}: {e}"))?;
            closure_instances += 1;
        }
    }
    for seed in 0..8 {
        let ws = ubs_core::generators::gen_random_wallspace(6, 12, seed).map_err(|e| e.to_string())?;
        subsets += closure_oracle(&ws).map_err(|e| format!("random seed {seed}: {e}"))?;
        closure_instances += 1;
    }
    Ok(format!(
        "{instances} truncations: {pairs} pairs, {triples} triples agree; closure = exhaustive search on {subsets} subsets of {closure_instances} wallspaces"
    ))
}

fn crossing_walls(n: usize) -> FiniteWallspace {
    let points: Vec<String> = (0..1usize << n).map(|p| format!("p{p}")).collect();
    let walls = (0..n).map(|k| {
        let pos: Vec<String> = (0..1usize << n)
            .filter(|p| p >> k & 1 == 1)
            .map(|p| format!("p{p}"))
            .collect();
        (format!("w{k}"), pos)
    });
    FiniteWallspace::new(points, walls.collect::<Vec<_>>()).unwrap()
}

fn chain_walls(k: usize) -> FiniteWallspace {
    let points: Vec<String> = (0..=k).map(|p| format!("p{p}")).collect();
    let walls = (0..k).map(|j| {
        (
            format!("w{j}"),
            (j + 1..=k).map(|p| format!("p{p}")).collect::<Vec<_>>(),
        )
    });
    FiniteWallspace::new(points, walls.collect::<Vec<_>>()).unwrap()
}

fn median_ok(ws: &FiniteWallspace, what: &str) -> Result<ubs_core::dual::CubeComplexSkeleton, String> {
    let sk = dual_complex(ws).map_err(|e| format!("{what}: {e}"))?;
    let m = median_check(&sk).map_err(|e| format!("{what}: {e}"))?;
    if !m.holds() {
        return Err(format!("{what}: median check failed {:?}", m.violation));
    }
    Ok(sk)
}

fn criterion_6() -> Outcome {
    let mut duals = 0;
    for n in 1..=10 {
        let sk = median_ok(&crossing_walls(n), &format!("{n} crossing walls"))?;
        if sk.vertices.len() != 1 << n {
            return Err(format!("{n} crossing walls: {} vertices", sk.vertices.len()));
        }
        duals += 1;
    }
    for k in 1..=15 {
        let sk = median_ok(&chain_walls(k), &format!("{k}-chain"))?;
        let mut degree = vec![0; sk.vertices.len()];
        for &(a, b) in &sk.edges {
            degree[a] += 1;
            degree[b] += 1;
        }
        if sk.vertices.len() != k + 1 || sk.edges.len() != k || degree.iter().any(|&d| d > 2) {
            return Err(format!(
                "{k}-chain: {} vertices, {} edges",
                sk.vertices.len(),
                sk.edges.len()
            ));
        }
        duals += 1;
    }
    for (name, amb) in oracle_instances() {
        if let Some((_, ws)) = truncation(&amb, 12) {
            median_ok(&ws, &name)?;
            duals += 1;
        }
    }
    for f in 2..=6u32 {
        let ws = corrigendum(f).realize_truncation(f + 1).map_err(|e| e.to_string())?;
        let d = dual::dimension(&ws);
        if d != f as usize {
            return Err(format!("corrigendum:{f} truncation has dimension {d}"));
        }
    }
    Ok(format!(
        "{duals} duals median, cube and path counts exact, corrigendum dimensions 2..6 exact"
    ))
}

fn canonical(d: &Decomposition) -> Vec<String> {
    let mut v: Vec<String> = d.sets().iter().map(|s| s.to_string()).collect();
    v.sort();
    v.extend(d.continuation.as_ref().map(|c| format!("continuation {c}")));
    v
}

fn criterion_7() -> Outcome {
    let mut instances = rule_instances();
    instances.push((
        "corrigendum:inf".into(),
        Ambient::Symbolic(FamilySystem::Corrigendum {
            families: FamilyCount::Unbounded,
        }),
    ));
    let (lo, hi) = STABILITY_HORIZONS;
    for (name, amb) in &instances {
        let run = |h: u32| -> Result<Decomposition, String> {
            let scope = Scope::new(amb, h).map_err(|e| e.to_string())?;
            decompose(
                &amb.universe(),
                &scope,
                DecomposeOptions {
                    seed: 0,
                    max_components: UNBOUNDED_COMPONENTS,
                },
            )
            .map_err(|e| format!("{name} at {h}: {e}"))
        };
        let (a, b) = (canonical(&run(lo)?), canonical(&run(hi)?));
        if a != b {
            return Err(format!("{name}: {a:?} at {lo} vs {b:?} at {hi}"));
        }
    }
    Ok(format!(
        "{} rule-based systems identical at horizons {lo} and {hi}",
        instances.len()
    ))
}

fn criterion_8() -> Outcome {
    let runs: [&[&str]; 6] = [
        &["decompose", "--gen", "corrigendum:5", "--horizon", "100"],
        &[
            "decompose",
            "--gen",
            "planted:random:4",
            "--seed",
            "3",
            "--horizon",
            "60",
        ],
        &[
            "compare",
            "--gen",
            "corrigendum:inf",
            "--alternative",
            "--horizon",
            "60",
            "--max-components",
            "6",
        ],
        &["certify", "--gen", "planted:both", "--horizon", "40"],
        &["dual", "--gen", "grid:3", "--horizon", "2"],
        &["gen", "--gen", "random:8:12", "--seed", "5"],
    ];
    for args in runs {
        let once = || {
            Command::new(env!("CARGO_BIN_EXE_ubs"))
                .args(args)
                .args(["--format", "json"])
                .output()
                .map_err(|e| e.to_string())
        };
        let (a, b) = (once()?, once()?);
        if a.stdout != b.stdout || a.status.code() != b.status.code() {
            return Err(format!("`{}` differs between runs", args.join(" ")));
        }
        if a.stdout.is_empty() {
            return Err(format!("`{}` printed nothing", args.join(" ")));
        }
    }
    Ok(format!("{} commands byte-identical across two runs", runs.len()))
}

type Criterion = fn() -> Outcome;

fn main() -> ExitCode {
    let criteria: [(&str, Criterion); 8] = [
        ("counterexample reproduction", criterion_1),
        ("non-uniqueness reproduction", criterion_2),
        ("finite-dimensional uniqueness", criterion_3),
        ("almost-crossing facts", criterion_4),
        ("oracle equivalence", criterion_5),
        ("dual complex sanity", criterion_6),
        ("horizon stability", criterion_7),
        ("determinism", criterion_8),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(m) => println!("criterion {} {name}: PASS ({m}) [{secs:.1}s]", k + 1),
            Err(m) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({m}) [{secs:.1}s]", k + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
