//! Workspace files: one structure line, then named relations.
//!
//! ```text
//! # comment
//! structure grid m=4 h=3
//! rel S   = preset separation
//! rel A11 = preset codir n=1
//! rel B2  = formula "B(x,y,z) := (x<y & y<z) | (x>y & y>z)"
//! ```

use std::collections::BTreeMap;

use reductlab_core::logic::evaluate;
use reductlab_core::{parse, FiniteStructure, GridStructure, Relation, RelationPreset};

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum StructureSpec {
    Linear(usize),
    Grid(usize, usize),
}

impl StructureSpec {
    pub fn build(&self) -> Result<FiniteStructure, CliError> {
        Ok(match *self {
            StructureSpec::Linear(n) => FiniteStructure::linear(n)?,
            StructureSpec::Grid(m, h) => FiniteStructure::grid(GridStructure::new(m, h)?),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelSource {
    Preset(RelationPreset),
    Formula(String),
}

#[derive(Clone, Debug, Default)]
pub struct WorkspaceFile {
    pub structure: Option<StructureSpec>,
    pub relations: Vec<(String, RelSource)>,
}

fn err(line: usize, msg: impl Into<String>) -> CliError {
    CliError::Usage(format!("workspace line {line}: {}", msg.into()))
}

fn key_value(line: usize, tok: &str, key: &str) -> Result<usize, CliError> {
    tok.strip_prefix(key)
        .and_then(|v| v.strip_prefix('='))
        .and_then(|v| v.parse().ok())
        .ok_or_else(|| err(line, format!("expected {key}=<number>, found `{tok}`")))
}

pub fn parse_workspace(text: &str) -> Result<WorkspaceFile, CliError> {
    let mut ws = WorkspaceFile::default();
    for (i, raw) in text.lines().enumerate() {
        let ln = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (head, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match head {
            "structure" => {
                if ws.structure.is_some() {
                    return Err(err(ln, "structure given twice"));
                }
                let toks: Vec<&str> = rest.split_whitespace().collect();
                ws.structure = Some(match toks.as_slice() {
                    ["linear", n] => StructureSpec::Linear(key_value(ln, n, "n")?),
                    ["grid", m, h] => {
                        StructureSpec::Grid(key_value(ln, m, "m")?, key_value(ln, h, "h")?)
                    }
                    _ => {
                        return Err(err(
                            ln,
                            "expected `structure linear n=N` or `structure grid m=M h=H`",
                        ))
                    }
                });
            }
            "rel" => {
                let (name, def) = rest
                    .split_once('=')
                    .ok_or_else(|| err(ln, "expected `rel NAME = ...`"))?;
                let name = name.trim();
                if name.is_empty() || !name.chars().all(|c| c.is_alphanumeric() || c == '_') {
                    return Err(err(ln, format!("bad relation name `{name}`")));
                }
                if ws.relations.iter().any(|(n, _)| n == name) {
                    return Err(err(ln, format!("relation `{name}` defined twice")));
                }
                let def = def.trim();
                let (kind, body) = def.split_once(char::is_whitespace).unwrap_or((def, ""));
                let body = body.trim();
                let src = match kind {
                    "preset" => RelSource::Preset(parse_preset(ln, body)?),
                    "formula" => {
                        let text = body
                            .strip_prefix('"')
                            .and_then(|b| b.strip_suffix('"'))
                            .ok_or_else(|| err(ln, "formula text must be double-quoted"))?;
                        RelSource::Formula(text.to_string())
                    }
                    _ => {
                        return Err(err(
                            ln,
                            format!("expected `preset` or `formula`, found `{kind}`"),
                        ))
                    }
                };
                ws.relations.push((name.to_string(), src));
            }
            _ => return Err(err(ln, format!("unknown directive `{head}`"))),
        }
    }
    Ok(ws)
}

/// `separation`, `codir n=1` or `codir_1`.
fn parse_preset(line: usize, body: &str) -> Result<RelationPreset, CliError> {
    let toks: Vec<&str> = body.split_whitespace().collect();
    let text = match toks.as_slice() {
        [name] => name.to_string(),
        [name, param] => format!("{name}_{}", key_value(line, param, "n")?),
        _ => return Err(err(line, format!("bad preset `{body}`"))),
    };
    text.parse().map_err(|e| err(line, format!("{e}")))
}

/// A loaded structure with its named relations resolved.
pub struct Workspace {
    pub structure: FiniteStructure,
    named: BTreeMap<String, Relation>,
}

impl Workspace {
    pub fn load(file: WorkspaceFile, default: StructureSpec) -> Result<Self, CliError> {
        let spec = file.structure.unwrap_or(default);
        let mut structure = spec.build()?;
        let mut named = BTreeMap::new();
        for (name, src) in file.relations {
            let rel = match src {
                RelSource::Preset(p) => p.build(&structure)?,
                RelSource::Formula(text) => evaluate(&parse(&text)?, &structure)?,
            }
            .with_name(name.clone());
            structure.add_relation(rel.clone())?;
            named.insert(name, rel);
        }
        Ok(Self { structure, named })
    }

    /// Workspace names first, then preset names.
    pub fn resolve(&self, name: &str) -> Result<Relation, CliError> {
        if let Some(r) = self.named.get(name) {
            return Ok(r.clone());
        }
        let preset: RelationPreset = name
            .parse()
            .map_err(|_| CliError::Usage(format!("unknown relation `{name}`")))?;
        Ok(preset.build(&self.structure)?)
    }

    /// Resolves a comma-separated list.
    pub fn resolve_set(&self, names: &str) -> Result<Vec<Relation>, CliError> {
        names
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|n| self.resolve(n))
            .collect::<Result<Vec<_>, _>>()
            .and_then(|v| {
                if v.is_empty() {
                    Err(CliError::Usage("empty relation list".into()))
                } else {
                    Ok(v)
                }
            })
    }
}
