//! First-order formulas over the order signature: AST, parser, printer and
//! evaluator.
//!
//! Grammar (whitespace-insensitive, `!` binds tighter than `&`, then `|`,
//! then right-associative `->`; a quantifier body extends as far right as
//! possible):
//!
//! ```text
//! def    := NAME "(" vars ")" ":=" form
//! form   := "exists" VAR "." form | "forall" VAR "." form | imp
//! imp    := or ("->" imp)?
//! or     := and ("|" and)*
//! and    := unary ("&" unary)*
//! unary  := "!" unary | atom | "(" form ")"
//! atom   := VAR "<" VAR | VAR ">" VAR | VAR "=" VAR
//!         | NAME "(" vars ")" | "diff" "(" VAR "," VAR "," INT ")"
//! ```
//!
//! `x > y` is read as `y < x`. Quantifiers are also accepted where a
//! `unary` is expected, with the same maximal scope.

mod eval;
mod parser;

use std::collections::BTreeSet;
use std::fmt;

pub use eval::evaluate;
pub use parser::parse;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Lt(String, String),
    Eq(String, String),
    Rel(String, Vec<String>),
    /// Grid difference `v - w = k`.
    Diff(String, String, i64),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

impl Formula {
    pub fn lt(a: &str, b: &str) -> Self {
        Formula::Lt(a.into(), b.into())
    }

    pub fn eq(a: &str, b: &str) -> Self {
        Formula::Eq(a.into(), b.into())
    }

    pub fn and(a: Formula, b: Formula) -> Self {
        Formula::And(Box::new(a), Box::new(b))
    }

    pub fn or(a: Formula, b: Formula) -> Self {
        Formula::Or(Box::new(a), Box::new(b))
    }

    pub fn negate(a: Formula) -> Self {
        Formula::Not(Box::new(a))
    }

    pub fn exists(v: &str, body: Formula) -> Self {
        Formula::Exists(v.into(), Box::new(body))
    }

    pub fn forall(v: &str, body: Formula) -> Self {
        Formula::Forall(v.into(), Box::new(body))
    }

    /// Variables occurring free.
    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_free(&mut Vec::new(), &mut out);
        out
    }

    fn collect_free<'a>(&'a self, bound: &mut Vec<&'a str>, out: &mut BTreeSet<String>) {
        let mut note = |v: &String, bound: &Vec<&str>| {
            if !bound.contains(&v.as_str()) {
                out.insert(v.clone());
            }
        };
        match self {
            Formula::Lt(a, b) | Formula::Eq(a, b) | Formula::Diff(a, b, _) => {
                note(a, bound);
                note(b, bound);
            }
            Formula::Rel(_, vs) => vs.iter().for_each(|v| note(v, bound)),
            Formula::Not(f) => f.collect_free(bound, out),
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                a.collect_free(bound, out);
                b.collect_free(bound, out);
            }
            Formula::Exists(v, f) | Formula::Forall(v, f) => {
                bound.push(v);
                f.collect_free(bound, out);
                bound.pop();
            }
        }
    }

    fn is_binary(&self) -> bool {
        matches!(
            self,
            Formula::And(..) | Formula::Or(..) | Formula::Implies(..)
        )
    }

    fn is_quantifier(&self) -> bool {
        matches!(self, Formula::Exists(..) | Formula::Forall(..))
    }

    fn fmt_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_quantifier() {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }
}

/// Fully parenthesized canonical form; `parse` reads it back to the same AST.
impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Lt(a, b) => write!(f, "{a}<{b}"),
            Formula::Eq(a, b) => write!(f, "{a}={b}"),
            Formula::Rel(name, vs) => write!(f, "{name}({})", vs.join(",")),
            Formula::Diff(a, b, k) => write!(f, "diff({a},{b},{k})"),
            Formula::Not(inner) => {
                write!(f, "!")?;
                inner.fmt_operand(f)
            }
            Formula::And(a, b) | Formula::Or(a, b) | Formula::Implies(a, b) => {
                let op = match self {
                    Formula::And(..) => "&",
                    Formula::Or(..) => "|",
                    _ => "->",
                };
                write!(f, "(")?;
                a.fmt_operand(f)?;
                write!(f, " {op} ")?;
                b.fmt_operand(f)?;
                write!(f, ")")
            }
            Formula::Exists(v, body) | Formula::Forall(v, body) => {
                let q = if matches!(self, Formula::Exists(..)) {
                    "exists"
                } else {
                    "forall"
                };
                if body.is_binary() {
                    write!(f, "{q} {v}. {body}")
                } else {
                    write!(f, "{q} {v}. ({body})")
                }
            }
        }
    }
}

/// A named formula with an ordered list of free variables; evaluating it
/// yields a relation of arity `free_vars.len()`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefinedRelation {
    pub name: String,
    pub free_vars: Vec<String>,
    pub body: Formula,
}

impl DefinedRelation {
    pub fn arity(&self) -> usize {
        self.free_vars.len()
    }
}

impl fmt::Display for DefinedRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}({}) := {}",
            self.name,
            self.free_vars.join(","),
            self.body
        )
    }
}

/// Canonical printed form of a definition.
pub fn print(d: &DefinedRelation) -> String {
    d.to_string()
}
