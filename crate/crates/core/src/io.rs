//! Instance files and set literals.
//!
//! An instance file is a JSON object holding either a generator spec or an
//! explicit wallspace, plus an optional designated set:
//!
//! ```json
//! { "spec": { "kind": "corrigendum", "families": { "finite": 5 } },
//!   "set": { "minus": ["all", { "family": 0 }] } }
//! { "wallspace": { "points": ["a", "b", "c"],
//!                  "walls": [{ "id": "w", "positive": ["a"] }] },
//!   "set": ["w"] }
//! ```
//!
//! Set literals: `"all"`, a list of references (`"H2_5"` or wall ids),
//! `{"family": f}`, `{"tail": {"family": f, "from": i}}`,
//! `{"rect": {"families": [lo, hi], "indices": [lo, null]}}`,
//! `{"union": [...]}`, `{"intersection": [...]}`, `{"minus": [a, b]}`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::ambient::Ambient;
use crate::error::{Error, Result};
use crate::generators::{generate, Instance, InstanceSpec};
use crate::hyp::HypRef;
use crate::hypset::HypSet;
use crate::wallspace::FiniteWallspace;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallDoc {
    pub id: String,
    pub positive: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WallspaceDoc {
    pub points: Vec<String>,
    pub walls: Vec<WallDoc>,
}

impl WallspaceDoc {
    pub fn from_wallspace(ws: &FiniteWallspace) -> Self {
        WallspaceDoc {
            points: ws.points().to_vec(),
            walls: ws
                .walls()
                .iter()
                .map(|w| WallDoc {
                    id: w.id.clone(),
                    positive: w.positive.ones().map(|k| ws.points()[k].clone()).collect(),
                })
                .collect(),
        }
    }

    pub fn build(&self) -> Result<FiniteWallspace> {
        FiniteWallspace::new(
            self.points.clone(),
            self.walls.iter().map(|w| (w.id.clone(), w.positive.clone())),
        )
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<InstanceSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wallspace: Option<WallspaceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub set: Option<Value>,
}

fn json_error(e: serde_json::Error) -> Error {
    let at = format!("line {} column {}", e.line(), e.column());
    let msg = e.to_string();
    let msg = msg.strip_suffix(&format!(" at {at}")).unwrap_or(&msg).to_string();
    Error::input(at, msg)
}

pub fn parse_instance_doc(text: &str) -> Result<InstanceDoc> {
    serde_json::from_str(text).map_err(json_error)
}

/// Loads an instance document; the designated set defaults to everything.
pub fn load_instance(text: &str, horizon: u32, max_truncation_walls: usize) -> Result<Instance> {
    let doc = parse_instance_doc(text)?;
    let mut inst = match (&doc.spec, &doc.wallspace) {
        (Some(spec), None) => generate(spec, horizon, max_truncation_walls)?,
        (None, Some(ws)) => {
            let ws = ws.build()?;
            Instance {
                spec: InstanceSpec::Random {
                    points: ws.points().len() as u32,
                    walls: ws.wall_count() as u32,
                    seed: 0,
                },
                designated: HypSet::rect((0, Some(1)), (0, Some(ws.wall_count() as u32))),
                truncation: Some(ws.clone()),
                ambient: Ambient::Finite(ws),
            }
        }
        _ => return Err(Error::input("$", "exactly one of `spec` and `wallspace` is required")),
    };
    if let Some(v) = &doc.set {
        inst.designated = parse_set(v, &inst.ambient, "$.set")?;
    }
    Ok(inst)
}

/// Reads `H<family>_<index>`, or a wall id of a finite ambient.
pub fn parse_ref(s: &str, ambient: &Ambient, at: &str) -> Result<HypRef> {
    if let Ambient::Finite(ws) = ambient {
        if let Ok(k) = ws.index_of(s) {
            return Ok(HypRef::wall(k as u32));
        }
    }
    let parsed = s
        .strip_prefix('H')
        .and_then(|r| r.split_once('_'))
        .and_then(|(f, i)| Some(HypRef::new(f.parse().ok()?, i.parse().ok()?)));
    let h = parsed.ok_or_else(|| Error::input(at, format!("`{s}` is neither a wall id nor of the form H<f>_<i>")))?;
    if !ambient.contains(h) {
        return Err(Error::input(
            at,
            format!("{h} is not a hyperplane of {}", ambient.describe()),
        ));
    }
    Ok(h)
}

fn num(v: &Value, at: &str) -> Result<u32> {
    v.as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| Error::input(at, "expected a non-negative integer"))
}

fn interval(v: &Value, at: &str) -> Result<(u32, Option<u32>)> {
    match v.as_array().map(Vec::as_slice) {
        Some([lo, hi]) => Ok((num(lo, at)?, if hi.is_null() { None } else { Some(num(hi, at)?) })),
        _ => Err(Error::input(at, "expected [lo, hi] with hi possibly null")),
    }
}

fn field<'v>(v: &'v Value, key: &str, at: &str) -> Result<&'v Value> {
    v.get(key).ok_or_else(|| Error::input(at, format!("missing `{key}`")))
}

pub fn parse_set(v: &Value, ambient: &Ambient, at: &str) -> Result<HypSet> {
    match v {
        Value::String(s) if s == "all" => Ok(ambient.universe()),
        Value::String(s) => Ok(HypSet::single(parse_ref(s, ambient, at)?)),
        Value::Array(items) => {
            let mut refs = Vec::new();
            for (k, item) in items.iter().enumerate() {
                let at = format!("{at}[{k}]");
                let s = item
                    .as_str()
                    .ok_or_else(|| Error::input(&at, "expected a reference string"))?;
                refs.push(parse_ref(s, ambient, &at)?);
            }
            Ok(HypSet::from_refs(refs))
        }
        Value::Object(map) if map.len() == 1 => {
            let (key, body) = map.iter().next().expect("one entry");
            let at = format!("{at}.{key}");
            let set = match key.as_str() {
                "family" => HypSet::family(num(body, &at)?),
                "tail" => HypSet::family_tail(
                    num(field(body, "family", &at)?, &at)?,
                    num(field(body, "from", &at)?, &at)?,
                ),
                "rect" => HypSet::rect(
                    interval(field(body, "families", &at)?, &at)?,
                    interval(field(body, "indices", &at)?, &at)?,
                ),
                "union" | "intersection" => {
                    let parts = body.as_array().ok_or_else(|| Error::input(&at, "expected a list"))?;
                    let mut acc: Option<HypSet> = None;
                    for (k, p) in parts.iter().enumerate() {
                        let s = parse_set(p, ambient, &format!("{at}[{k}]"))?;
                        acc = Some(match acc {
                            None => s,
                            Some(a) if key == "union" => a.union(&s),
                            Some(a) => a.intersection(&s),
                        });
                    }
                    acc.unwrap_or_else(HypSet::empty)
                }
                "minus" => match body.as_array().map(Vec::as_slice) {
                    Some([a, b]) => parse_set(a, ambient, &format!("{at}[0]"))?.difference(&parse_set(
                        b,
                        ambient,
                        &format!("{at}[1]"),
                    )?),
                    _ => return Err(Error::input(&at, "expected [set, set]")),
                },
                other => return Err(Error::input(&at, format!("unknown set form `{other}`"))),
            };
            Ok(set.intersection(&ambient.universe()))
        }
        _ => Err(Error::input(at, "unrecognised set literal")),
    }
}

pub fn parse_set_text(text: &str, ambient: &Ambient) -> Result<HypSet> {
    let v: Value = serde_json::from_str(text).map_err(json_error)?;
    parse_set(&v, ambient, "$")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{FamilyCount, FamilySystem};

    #[test]
    fn set_literals() {
        let amb = Ambient::Symbolic(FamilySystem::Corrigendum {
            families: FamilyCount::Finite(3),
        });
        let s = parse_set_text(r#"{"minus": ["all", {"family": 0}]}"#, &amb).unwrap();
        assert_eq!(s, HypSet::rect((1, Some(3)), (0, None)));
        let t = parse_set_text(r#"{"tail": {"family": 2, "from": 4}}"#, &amb).unwrap();
        assert_eq!(t, HypSet::family_tail(2, 4));
        let r = parse_set_text(r#"["H0_1", "H2_1"]"#, &amb).unwrap();
        assert_eq!(r.len(), Some(2));
        match parse_set_text(r#"["H0_1", "H7_1"]"#, &amb) {
            Err(Error::Input { position, .. }) => assert_eq!(position, "$[1]"),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn documents() {
        let inst = load_instance(
            r#"{"wallspace": {"points": ["a", "b", "c"], "walls": [{"id": "x", "positive": ["a"]},
                {"id": "y", "positive": ["b"]}]}, "set": ["y"]}"#,
            4,
            20,
        )
        .unwrap();
        assert_eq!(inst.designated, HypSet::single(HypRef::wall(1)));
        let ws = inst.truncation.unwrap();
        assert_eq!(WallspaceDoc::from_wallspace(&ws).build().unwrap(), ws);

        let inst = load_instance(r#"{"spec": {"kind": "grid", "dim": 2}}"#, 4, 20).unwrap();
        assert_eq!(inst.designated, HypSet::families(Some(2)));
        match load_instance("{\n \"spec\": 3 }", 4, 20) {
            Err(Error::Input { position, .. }) => assert!(position.starts_with("line 2")),
            other => panic!("{other:?}"),
        }
        assert!(load_instance("{}", 4, 20).is_err());
    }
}
