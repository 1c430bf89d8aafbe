//! Direct constructors for the named relations.
//!
//! The order-only relations work on any structure (they only use the index
//! order). The difference-based ones (`neighbor`, `dist_n`, `succ_n`,
//! `codir_n`) need a grid.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid::{ExtendedInt, GridStructure};
use crate::structure::{FiniteStructure, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationPreset {
    Equality,
    Order,
    Between,
    Cycle,
    Separation,
    Equipollence,
    /// Same as `Dist(1)`.
    Neighbor,
    /// `|x - y| = n`.
    Dist(u32),
    /// `y - x = n`.
    Succ(u32),
    /// `x - y = z - t` and `|x - y| = n`.
    Codir(u32),
}

impl RelationPreset {
    pub const ORDER_PRESETS: [RelationPreset; 6] = [
        RelationPreset::Equality,
        RelationPreset::Order,
        RelationPreset::Between,
        RelationPreset::Cycle,
        RelationPreset::Separation,
        RelationPreset::Equipollence,
    ];

    pub fn requires_grid(self) -> bool {
        matches!(
            self,
            RelationPreset::Neighbor
                | RelationPreset::Dist(_)
                | RelationPreset::Succ(_)
                | RelationPreset::Codir(_)
        )
    }

    pub fn arity(self) -> usize {
        match self {
            RelationPreset::Equality
            | RelationPreset::Order
            | RelationPreset::Neighbor
            | RelationPreset::Dist(_)
            | RelationPreset::Succ(_) => 2,
            RelationPreset::Between | RelationPreset::Cycle => 3,
            RelationPreset::Separation
            | RelationPreset::Equipollence
            | RelationPreset::Codir(_) => 4,
        }
    }

    /// Order-signature formula defining the preset, for the order-only ones.
    pub fn defining_formula(self) -> Option<&'static str> {
        Some(match self {
            RelationPreset::Equality => "equality(x,y) := x=y",
            RelationPreset::Order => "order(x,y) := x<y",
            RelationPreset::Between => "between(a,b,c) := (a<b & b<c) | (a>b & b>c)",
            RelationPreset::Cycle => "cycle(a,b,c) := (a<b & b<c) | (b<c & c<a) | (c<a & a<b)",
            RelationPreset::Separation => {
                "separation(a,b,c,d) := \
                 (((a<b & b<c) | (a>b & b>c)) | ((a<d & d<c) | (a>d & d>c))) & \
                 (((b<a & a<d) | (b>a & a>d)) | ((b<c & c<d) | (b>c & c>d)))"
            }
            RelationPreset::Equipollence => "equipollence(a,b,c,d) := (a<b & c<d) | (a>b & c>d)",
            _ => return None,
        })
    }

    /// Grid formula using `diff` atoms, for the difference-based presets.
    pub fn grid_formula(self) -> Option<String> {
        Some(match self {
            RelationPreset::Neighbor => "neighbor(x,y) := diff(x,y,1) | diff(x,y,-1)".into(),
            RelationPreset::Dist(n) => format!("dist_{n}(x,y) := diff(x,y,{n}) | diff(x,y,-{n})"),
            RelationPreset::Succ(n) => format!("succ_{n}(x,y) := diff(y,x,{n})"),
            RelationPreset::Codir(n) => format!(
                "codir_{n}(x,y,z,t) := (diff(x,y,{n}) & diff(z,t,{n})) | (diff(x,y,-{n}) & diff(z,t,-{n}))"
            ),
            _ => return None,
        })
    }

    pub fn build(self, s: &FiniteStructure) -> Result<Relation> {
        let n = s.size();
        let name = self.to_string();
        match self {
            RelationPreset::Equality => Relation::from_predicate(name, 2, n, |t| t[0] == t[1]),
            RelationPreset::Order => Relation::from_predicate(name, 2, n, |t| t[0] < t[1]),
            RelationPreset::Between => between(s),
            RelationPreset::Cycle => cycle(s),
            RelationPreset::Separation => separation(s),
            RelationPreset::Equipollence => equipollence(s),
            _ => {
                let g = s
                    .as_grid()
                    .ok_or_else(|| Error::RequiresGrid(name.clone()))?;
                grid_relation(g, self)
            }
        }
    }
}

impl fmt::Display for RelationPreset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationPreset::Equality => write!(f, "equality"),
            RelationPreset::Order => write!(f, "order"),
            RelationPreset::Between => write!(f, "between"),
            RelationPreset::Cycle => write!(f, "cycle"),
            RelationPreset::Separation => write!(f, "separation"),
            RelationPreset::Equipollence => write!(f, "equipollence"),
            RelationPreset::Neighbor => write!(f, "neighbor"),
            RelationPreset::Dist(n) => write!(f, "dist_{n}"),
            RelationPreset::Succ(n) => write!(f, "succ_{n}"),
            RelationPreset::Codir(n) => write!(f, "codir_{n}"),
        }
    }
}

impl FromStr for RelationPreset {
    type Err = Error;

    /// Accepts the canonical names (`codir_2`) and a few aliases (`=`, `<`,
    /// `B`, `C`, `S`, `E`).
    fn from_str(s: &str) -> Result<Self> {
        let param = |rest: &str| -> Result<u32> {
            match rest.parse::<u32>() {
                Ok(n) if n >= 1 => Ok(n),
                _ => Err(Error::Input(format!("bad preset parameter in `{s}`"))),
            }
        };
        Ok(match s {
            "equality" | "eq" | "=" => RelationPreset::Equality,
            "order" | "lt" | "<" => RelationPreset::Order,
            "between" | "B" => RelationPreset::Between,
            "cycle" | "C" => RelationPreset::Cycle,
            "separation" | "S" => RelationPreset::Separation,
            "equipollence" | "E" => RelationPreset::Equipollence,
            "neighbor" => RelationPreset::Neighbor,
            _ => {
                if let Some(rest) = s.strip_prefix("dist_") {
                    RelationPreset::Dist(param(rest)?)
                } else if let Some(rest) = s.strip_prefix("succ_") {
                    RelationPreset::Succ(param(rest)?)
                } else if let Some(rest) = s.strip_prefix("codir_") {
                    RelationPreset::Codir(param(rest)?)
                } else {
                    return Err(Error::UnknownRelation(s.to_string()));
                }
            }
        })
    }
}

fn b(a: usize, x: usize, c: usize) -> bool {
    (a < x && x < c) || (a > x && x > c)
}

pub fn between(s: &FiniteStructure) -> Result<Relation> {
    Relation::from_predicate("between", 3, s.size(), |t| b(t[0], t[1], t[2]))
}

pub fn cycle(s: &FiniteStructure) -> Result<Relation> {
    Relation::from_predicate("cycle", 3, s.size(), |t| {
        let (a, x, c) = (t[0], t[1], t[2]);
        (a < x && x < c) || (x < c && c < a) || (c < a && a < x)
    })
}

pub fn separation(s: &FiniteStructure) -> Result<Relation> {
    Relation::from_predicate("separation", 4, s.size(), |t| {
        let (a, x, c, d) = (t[0], t[1], t[2], t[3]);
        (b(a, x, c) || b(a, d, c)) && (b(x, a, d) || b(x, c, d))
    })
}

pub fn equipollence(s: &FiniteStructure) -> Result<Relation> {
    Relation::from_predicate("equipollence", 4, s.size(), |t| {
        (t[0] < t[1] && t[2] < t[3]) || (t[0] > t[1] && t[2] > t[3])
    })
}

/// Difference-based relations on a grid. Pairs on distinct verticals have
/// infinite difference and never qualify. A parameter at or above the
/// height gives an empty relation.
pub fn grid_relation(g: &GridStructure, preset: RelationPreset) -> Result<Relation> {
    let name = preset.to_string();
    let n = g.size();
    let fin = |k: u32| ExtendedInt::Finite(k as i64);
    let neg = |k: u32| ExtendedInt::Finite(-(k as i64));
    match preset {
        RelationPreset::Neighbor => {
            grid_relation(g, RelationPreset::Dist(1)).map(|r| r.with_name(name))
        }
        RelationPreset::Dist(k) => Relation::from_predicate(name, 2, n, |t| {
            let d = g.diff(t[0], t[1]);
            d == fin(k) || d == neg(k)
        }),
        RelationPreset::Succ(k) => {
            Relation::from_predicate(name, 2, n, |t| g.diff(t[1], t[0]) == fin(k))
        }
        RelationPreset::Codir(k) => Relation::from_predicate(name, 4, n, |t| {
            let d = g.diff(t[0], t[1]);
            (d == fin(k) || d == neg(k)) && g.diff(t[2], t[3]) == d
        }),
        other => Err(Error::Input(format!("`{other}` is not a grid preset"))),
    }
}
