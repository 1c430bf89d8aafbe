//! Bottom-up evaluation: every subformula becomes a dense truth table over
//! its free variables, so quantifiers are projections and connectives are
//! pointwise joins.

use super::{DefinedRelation, Formula};
use crate::error::{Error, Result};
use crate::grid::ExtendedInt;
use crate::structure::{FiniteStructure, Relation};

/// Truth table over `vars` (sorted, distinct); cell index is
/// `sum(value[k] * n^k)`.
struct Table {
    vars: Vec<String>,
    cells: Vec<bool>,
}

struct Ctx<'a> {
    s: &'a FiniteStructure,
    n: usize,
}

fn cell_count(n: usize, k: usize) -> Result<usize> {
    n.checked_pow(k as u32)
        .filter(|&c| c <= 1 << 28)
        .ok_or_else(|| Error::Input(format!("subformula table too large: {n}^{k} cells")))
}

/// Calls `f(values, index)` for every assignment of `k` variables.
fn for_each_assignment(n: usize, k: usize, mut f: impl FnMut(&[usize], usize)) {
    let mut vals = vec![0usize; k];
    let total = n.pow(k as u32);
    for idx in 0..total {
        f(&vals, idx);
        for v in vals.iter_mut() {
            *v += 1;
            if *v < n {
                break;
            }
            *v = 0;
        }
    }
}

impl Ctx<'_> {
    /// Table for an atom whose arguments are `args`, via `pred` on the
    /// argument values.
    fn atom(&self, args: &[&String], pred: impl Fn(&[usize]) -> bool) -> Result<Table> {
        let mut vars: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        vars.sort();
        vars.dedup();
        let pos: Vec<usize> = args
            .iter()
            .map(|a| vars.iter().position(|v| v == *a).unwrap())
            .collect();
        let mut cells = vec![false; cell_count(self.n, vars.len())?];
        let mut argv = vec![0; args.len()];
        for_each_assignment(self.n, vars.len(), |vals, idx| {
            for (slot, &p) in argv.iter_mut().zip(&pos) {
                *slot = vals[p];
            }
            cells[idx] = pred(&argv);
        });
        Ok(Table { vars, cells })
    }

    fn join(&self, a: Table, b: Table, op: impl Fn(bool, bool) -> bool) -> Result<Table> {
        let mut vars: Vec<String> = a.vars.iter().chain(&b.vars).cloned().collect();
        vars.sort();
        vars.dedup();
        let strides = |t: &Table| -> Vec<usize> {
            vars.iter()
                .map(|v| match t.vars.iter().position(|w| w == v) {
                    Some(k) => self.n.pow(k as u32),
                    None => 0,
                })
                .collect()
        };
        let (sa, sb) = (strides(&a), strides(&b));
        let mut cells = vec![false; cell_count(self.n, vars.len())?];
        for_each_assignment(self.n, vars.len(), |vals, idx| {
            let ia: usize = vals.iter().zip(&sa).map(|(v, s)| v * s).sum();
            let ib: usize = vals.iter().zip(&sb).map(|(v, s)| v * s).sum();
            cells[idx] = op(a.cells[ia], b.cells[ib]);
        });
        Ok(Table { vars, cells })
    }

    fn project(&self, t: Table, var: &str, exists: bool) -> Table {
        let Some(k) = t.vars.iter().position(|v| v == var) else {
            // the universe is non-empty, so a vacuous quantifier is a no-op
            return t;
        };
        let low = self.n.pow(k as u32);
        let high_stride = low * self.n;
        let mut vars = t.vars.clone();
        vars.remove(k);
        let mut cells = vec![!exists; t.cells.len() / self.n];
        for (idx, &b) in t.cells.iter().enumerate() {
            let out = idx % low + (idx / high_stride) * low;
            if exists {
                cells[out] |= b;
            } else {
                cells[out] &= b;
            }
        }
        Table { vars, cells }
    }

    fn eval(&self, f: &Formula) -> Result<Table> {
        match f {
            Formula::Lt(a, b) => self.atom(&[a, b], |v| v[0] < v[1]),
            Formula::Eq(a, b) => self.atom(&[a, b], |v| v[0] == v[1]),
            Formula::Diff(a, b, k) => {
                let g = *self
                    .s
                    .as_grid()
                    .ok_or_else(|| Error::RequiresGrid("diff".into()))?;
                let k = *k;
                self.atom(&[a, b], move |v| {
                    g.diff(v[0], v[1]) == ExtendedInt::Finite(k)
                })
            }
            Formula::Rel(name, args) => {
                let rel = self
                    .s
                    .relation(name)
                    .ok_or_else(|| Error::UnknownRelation(name.clone()))?;
                if rel.arity() != args.len() {
                    return Err(Error::ArityMismatch {
                        expected: rel.arity(),
                        got: args.len(),
                    });
                }
                let refs: Vec<&String> = args.iter().collect();
                self.atom(&refs, |v| rel.contains_unchecked(v))
            }
            Formula::Not(inner) => {
                let mut t = self.eval(inner)?;
                t.cells.iter_mut().for_each(|b| *b = !*b);
                Ok(t)
            }
            Formula::And(a, b) => self.join(self.eval(a)?, self.eval(b)?, |x, y| x && y),
            Formula::Or(a, b) => self.join(self.eval(a)?, self.eval(b)?, |x, y| x || y),
            Formula::Implies(a, b) => self.join(self.eval(a)?, self.eval(b)?, |x, y| !x || y),
            Formula::Exists(v, body) => Ok(self.project(self.eval(body)?, v, true)),
            Formula::Forall(v, body) => Ok(self.project(self.eval(body)?, v, false)),
        }
    }
}

/// Evaluates a definition on a structure: the extension is the set of
/// tuples (in free-variable order) satisfying the body, with quantifiers
/// ranging over the whole universe.
pub fn evaluate(d: &DefinedRelation, s: &FiniteStructure) -> Result<Relation> {
    let ctx = Ctx { s, n: s.size() };
    let table = ctx.eval(&d.body)?;
    let strides: Vec<usize> = d
        .free_vars
        .iter()
        .map(|v| match table.vars.iter().position(|w| w == v) {
            Some(k) => ctx.n.pow(k as u32),
            None => 0,
        })
        .collect();
    if let Some(v) = table.vars.iter().find(|v| !d.free_vars.contains(v)) {
        return Err(Error::UnboundVariable(v.clone()));
    }
    Relation::from_predicate(d.name.clone(), d.arity(), s.size(), |t| {
        let idx: usize = t.iter().zip(&strides).map(|(v, s)| v * s).sum();
        table.cells[idx]
    })
}
