//! Seeded instance factories.

use std::collections::HashSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ambient::Ambient;
use crate::error::{Error, Result};
use crate::family::{FamilyCount, FamilySystem, PairPattern, TableTailRule};
use crate::hypset::HypSet;
use crate::realize::RealizeLimits;
use crate::scope::Scope;
use crate::ubs::certify_ubs;
use crate::wallspace::FiniteWallspace;

/// Planted structure for table-rule instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "plant", rename_all = "snake_case")]
pub enum Plant {
    /// All pairs tied: the grid of this dimension.
    Empty { dim: u32 },
    /// Family 1 crosses exactly `H^0_0, ..., H^0_j` and nests past them.
    LowFamily { up_to: u32 },
    /// Two families crossing completely.
    TiedPair,
    /// A chain and its mirror image, nested away from each other.
    Mirrored,
    /// Three families where the split has two infinite sides: family 1
    /// crosses finitely many members of family 0, family 2 almost all.
    BothSides,
    /// Family 1 crosses almost all of family 0, family 2 is tied with
    /// family 1 but each of its members crosses only finitely many of
    /// family 0, while family 0 crosses almost all of family 2.
    Skew,
    /// Random tail patterns, kept only if the union of all families is a
    /// UBS.
    Random { families: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum InstanceSpec {
    Grid {
        dim: u32,
    },
    Corrigendum {
        families: FamilyCount,
    },
    Table {
        rule: TableTailRule,
    },
    Random {
        points: u32,
        walls: u32,
        seed: u64,
    },
    Planted {
        #[serde(flatten)]
        plant: Plant,
        seed: u64,
    },
}

impl InstanceSpec {
    /// Parses the short form `kind:param[:param]`, e.g. `grid:3`,
    /// `corrigendum:5`, `corrigendum:inf`, `random:8:12`, `planted:low:3`.
    pub fn parse_short(s: &str, seed: u64) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |k: usize| -> Result<u32> {
            parts
                .get(k)
                .ok_or_else(|| Error::input("gen", format!("`{s}` needs parameter {k}")))?
                .parse()
                .map_err(|_| Error::input("gen", format!("`{}` is not a number", parts[k])))
        };
        Ok(match parts[0] {
            "grid" => InstanceSpec::Grid { dim: num(1)? },
            "corrigendum" => InstanceSpec::Corrigendum {
                families: match parts.get(1) {
                    Some(&"inf") | Some(&"unbounded") => FamilyCount::Unbounded,
                    _ => FamilyCount::Finite(num(1)?),
                },
            },
            "random" => InstanceSpec::Random {
                points: num(1)?,
                walls: num(2)?,
                seed,
            },
            "planted" => {
                let plant = match parts.get(1).copied() {
                    Some("empty") => Plant::Empty { dim: num(2)? },
                    Some("low") => Plant::LowFamily { up_to: num(2)? },
                    Some("tied") => Plant::TiedPair,
                    Some("mirrored") => Plant::Mirrored,
                    Some("both") => Plant::BothSides,
                    Some("skew") => Plant::Skew,
                    Some("random") => Plant::Random { families: num(2)? },
                    other => return Err(Error::input("gen", format!("unknown plant {other:?}"))),
                };
                InstanceSpec::Planted { plant, seed }
            }
            other => return Err(Error::input("gen", format!("unknown instance kind `{other}`"))),
        })
    }
}

/// A generated ambient with its designated hyperplane set and, when small
/// enough, a realized truncation.
#[derive(Debug, Clone)]
pub struct Instance {
    pub spec: InstanceSpec,
    pub ambient: Ambient,
    pub designated: HypSet,
    pub truncation: Option<FiniteWallspace>,
}

pub fn gen_grid(dim: u32) -> Result<Ambient> {
    if dim == 0 {
        return Err(Error::input("dim", "dimension must be positive"));
    }
    Ok(Ambient::Symbolic(FamilySystem::Grid { dim }))
}

pub fn gen_corrigendum(families: FamilyCount) -> Result<Ambient> {
    if matches!(families, FamilyCount::Finite(n) if n < 2) {
        return Err(Error::input(
            "families",
            "the counterexample needs at least two families",
        ));
    }
    Ok(Ambient::Symbolic(FamilySystem::Corrigendum { families }))
}

/// `walls` distinct random bipartitions of `points` points.
pub fn gen_random_wallspace(points: u32, walls: u32, seed: u64) -> Result<FiniteWallspace> {
    if points < 2 {
        return Err(Error::input("points", "need at least two points"));
    }
    let max = if points > 64 {
        u64::MAX
    } else {
        (1u64 << (points - 1)) - 1
    };
    if walls as u64 > max {
        return Err(Error::input(
            "walls",
            format!("{points} points carry at most {max} distinct walls, {walls} requested"),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let p = points as usize;
    // a wall is identified by its side avoiding point 0
    let sides: Vec<Vec<usize>> = if points <= 21 {
        sample(&mut rng, max as usize, walls as usize)
            .into_iter()
            .map(|m| (1..p).filter(|k| (m + 1) >> (k - 1) & 1 == 1).collect())
            .collect()
    } else {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        while out.len() < walls as usize {
            let s: Vec<usize> = (1..p).filter(|_| rng.gen_bool(0.5)).collect();
            if !s.is_empty() && seen.insert(s.clone()) {
                out.push(s);
            }
        }
        out
    };
    let ids: Vec<String> = (0..p).map(|k| format!("p{k}")).collect();
    FiniteWallspace::new(
        ids.clone(),
        sides.into_iter().enumerate().map(|(w, s)| {
            (
                format!("w{w}"),
                s.into_iter().map(|k| ids[k].clone()).collect::<Vec<_>>(),
            )
        }),
    )
}

/// Horizon used to validate planted rules.
pub const PLANT_CHECK_HORIZON: u32 = 24;
const PLANT_ATTEMPTS: u32 = 200;

fn table(families: u32, pairs: Vec<(u32, u32, PairPattern)>) -> Result<Ambient> {
    let sys = FamilySystem::Table(TableTailRule::new(families, pairs)?);
    let window = (2 * sys.max_param() + 4).max(6);
    if let Some(t) = sys.consistency_conflict(window)? {
        return Err(Error::Realization { triple: t });
    }
    Ok(Ambient::Symbolic(sys))
}

fn random_pattern(rng: &mut ChaCha8Rng) -> PairPattern {
    match rng.gen_range(0..3) {
        0 => PairPattern::Tied,
        1 => PairPattern::Above {
            threshold: rng.gen_range(0..4),
        },
        _ => PairPattern::Staircase {
            offset: rng.gen_range(0..3),
        },
    }
}

pub fn gen_planted(plant: &Plant, seed: u64) -> Result<Ambient> {
    match plant {
        Plant::Empty { dim } => table((*dim).max(1), Vec::new()),
        Plant::LowFamily { up_to } => table(
            2,
            vec![(
                0,
                1,
                PairPattern::Initial {
                    threshold: *up_to as i64,
                },
            )],
        ),
        Plant::TiedPair => table(2, Vec::new()),
        Plant::Mirrored => table(2, vec![(0, 1, PairPattern::Facing)]),
        Plant::BothSides => table(
            3,
            vec![
                (0, 1, PairPattern::Staircase { offset: 0 }),
                (0, 2, PairPattern::Above { threshold: 1 }),
                (1, 2, PairPattern::Above { threshold: 0 }),
            ],
        ),
        Plant::Skew => table(
            3,
            vec![
                (0, 1, PairPattern::Above { threshold: 1 }),
                (0, 2, PairPattern::Staircase { offset: 1 }),
                (1, 2, PairPattern::Tied),
            ],
        ),
        Plant::Random { families } => {
            if *families == 0 || *families > 5 {
                return Err(Error::input("families", "random plants use 1 to 5 families"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            for _ in 0..PLANT_ATTEMPTS {
                let mut pairs = Vec::new();
                for lo in 0..*families {
                    for hi in lo + 1..*families {
                        pairs.push((lo, hi, random_pattern(&mut rng)));
                    }
                }
                let Ok(amb) = table(*families, pairs) else {
                    continue;
                };
                let scope = Scope::new(&amb, PLANT_CHECK_HORIZON)?;
                if certify_ubs(&amb.universe(), &scope)?.is_ubs() {
                    return Ok(amb);
                }
            }
            Err(Error::input(
                "plant",
                format!("no consistent UBS found in {PLANT_ATTEMPTS} attempts"),
            ))
        }
    }
}

/// Builds the instance; the truncation is realized at `horizon` when it
/// has at most `max_truncation_walls` walls.
pub fn generate(spec: &InstanceSpec, horizon: u32, max_truncation_walls: usize) -> Result<Instance> {
    let ambient = match spec {
        InstanceSpec::Grid { dim } => gen_grid(*dim)?,
        InstanceSpec::Corrigendum { families } => gen_corrigendum(*families)?,
        InstanceSpec::Table { rule } => {
            let sys = FamilySystem::Table(rule.clone());
            let window = (2 * sys.max_param() + 4)
                .max(6)
                .min(sys.index_bound().unwrap_or(u32::MAX));
            if let Some(t) = sys.consistency_conflict(window)? {
                return Err(Error::Realization { triple: t });
            }
            Ambient::Symbolic(sys)
        }
        InstanceSpec::Random { points, walls, seed } => Ambient::Finite(gen_random_wallspace(*points, *walls, *seed)?),
        InstanceSpec::Planted { plant, seed } => gen_planted(plant, *seed)?,
    };
    let truncation = match &ambient {
        Ambient::Finite(ws) => Some(ws.clone()),
        Ambient::Symbolic(s) if s.members_below(horizon).len() <= max_truncation_walls && horizon >= 2 => {
            let limits = RealizeLimits {
                max_walls: max_truncation_walls,
                ..RealizeLimits::default()
            };
            Some(ambient.realize_truncation_with(horizon, limits)?)
        }
        Ambient::Symbolic(_) => None,
    };
    Ok(Instance {
        spec: spec.clone(),
        designated: ambient.universe(),
        ambient,
        truncation,
    })
}
