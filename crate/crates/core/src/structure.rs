//! Finite universes with a built-in total order and named relations.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grid::GridStructure;

/// A tuple of elements, each an index into the universe.
pub type Tuple = Vec<usize>;

/// Odometer over all tuples in `{0..n}^arity`, in lexicographic order.
pub(crate) struct TupleIter {
    n: usize,
    current: Option<Vec<usize>>,
}

impl TupleIter {
    pub(crate) fn new(n: usize, arity: usize) -> Self {
        let current = if n == 0 && arity > 0 {
            None
        } else {
            Some(vec![0; arity])
        };
        Self { n, current }
    }
}

impl Iterator for TupleIter {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        let mut k = cur.len();
        loop {
            if k == 0 {
                self.current = None;
                break;
            }
            k -= 1;
            cur[k] += 1;
            if cur[k] < self.n {
                break;
            }
            cur[k] = 0;
        }
        Some(out)
    }
}

/// All tuples of the given arity over a universe of size `n`, lexicographic.
pub fn all_tuples(n: usize, arity: usize) -> impl Iterator<Item = Tuple> {
    TupleIter::new(n, arity)
}

/// A named relation given by its extension.
///
/// The extension is stored as a dense membership table indexed by the
/// big-endian base-`n` encoding of the tuple, so iteration order is
/// lexicographic and duplicates cannot occur.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    name: String,
    arity: usize,
    universe: usize,
    table: Vec<bool>,
}

impl Relation {
    pub fn empty(name: impl Into<String>, arity: usize, universe: usize) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Input("relation arity must be at least 1".into()));
        }
        let cells = universe
            .checked_pow(arity as u32)
            .filter(|&c| c <= 1 << 28)
            .ok_or_else(|| {
                Error::Input(format!(
                    "relation table too large: {universe}^{arity} tuples"
                ))
            })?;
        Ok(Self {
            name: name.into(),
            arity,
            universe,
            table: vec![false; cells],
        })
    }

    pub fn from_tuples<I>(
        name: impl Into<String>,
        arity: usize,
        universe: usize,
        tuples: I,
    ) -> Result<Self>
    where
        I: IntoIterator<Item = Tuple>,
    {
        let mut rel = Self::empty(name, arity, universe)?;
        for t in tuples {
            rel.insert(&t)?;
        }
        Ok(rel)
    }

    /// Builds the relation `{ t : pred(t) }` over all tuples of the arity.
    pub fn from_predicate<F>(
        name: impl Into<String>,
        arity: usize,
        universe: usize,
        mut pred: F,
    ) -> Result<Self>
    where
        F: FnMut(&[usize]) -> bool,
    {
        let mut rel = Self::empty(name, arity, universe)?;
        for (idx, t) in all_tuples(universe, arity).enumerate() {
            rel.table[idx] = pred(&t);
        }
        Ok(rel)
    }

    pub fn insert(&mut self, t: &[usize]) -> Result<()> {
        let idx = self.index_of(t)?;
        self.table[idx] = true;
        Ok(())
    }

    fn index_of(&self, t: &[usize]) -> Result<usize> {
        if t.len() != self.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                got: t.len(),
            });
        }
        let mut idx = 0;
        for &e in t {
            if e >= self.universe {
                return Err(Error::OutOfRange {
                    element: e,
                    size: self.universe,
                });
            }
            idx = idx * self.universe + e;
        }
        Ok(idx)
    }

    #[inline]
    pub(crate) fn contains_unchecked(&self, t: &[usize]) -> bool {
        let mut idx = 0;
        for &e in t {
            idx = idx * self.universe + e;
        }
        self.table[idx]
    }

    /// Membership test. Tuples of the wrong length or with out-of-range
    /// elements are never members.
    pub fn contains(&self, t: &[usize]) -> bool {
        self.index_of(t).map(|i| self.table[i]).unwrap_or(false)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.table.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.table.iter().any(|&b| b)
    }

    /// The extension in lexicographic order.
    pub fn tuples(&self) -> impl Iterator<Item = Tuple> + '_ {
        all_tuples(self.universe, self.arity)
            .zip(self.table.iter())
            .filter_map(|(t, &b)| b.then_some(t))
    }

    /// Same extension, ignoring the name.
    pub fn same_extension(&self, other: &Relation) -> bool {
        self.arity == other.arity && self.universe == other.universe && self.table == other.table
    }
}

impl fmt::Debug for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Relation")
            .field("name", &self.name)
            .field("arity", &self.arity)
            .field("size", &self.len())
            .finish()
    }
}

/// What kind of universe a structure sits on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureKind {
    /// A window `0 < 1 < .. < n-1` of the integers.
    Linear,
    /// `m` verticals of height `h`, ordered lexicographically.
    Grid(GridStructure),
}

/// A finite universe `{0..size}` ordered by index, with named relations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteStructure {
    size: usize,
    kind: StructureKind,
    relations: BTreeMap<String, Relation>,
}

impl FiniteStructure {
    pub fn linear(size: usize) -> Result<Self> {
        if size == 0 {
            return Err(Error::Input("structure size must be at least 1".into()));
        }
        Ok(Self {
            size,
            kind: StructureKind::Linear,
            relations: BTreeMap::new(),
        })
    }

    pub fn grid(grid: GridStructure) -> Self {
        Self {
            size: grid.size(),
            kind: StructureKind::Grid(grid),
            relations: BTreeMap::new(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn kind(&self) -> StructureKind {
        self.kind
    }

    pub fn as_grid(&self) -> Option<&GridStructure> {
        match &self.kind {
            StructureKind::Grid(g) => Some(g),
            StructureKind::Linear => None,
        }
    }

    /// The grid view used for differences: the grid itself, or a single
    /// vertical for a linear window.
    pub fn difference_view(&self) -> GridStructure {
        match self.kind {
            StructureKind::Grid(g) => g,
            StructureKind::Linear => GridStructure::window(self.size),
        }
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        a < b
    }

    /// Adds or replaces a relation under its own name.
    pub fn add_relation(&mut self, rel: Relation) -> Result<()> {
        if rel.universe() != self.size {
            return Err(Error::SizeMismatch {
                left: self.size,
                right: rel.universe(),
            });
        }
        self.relations.insert(rel.name().to_string(), rel);
        Ok(())
    }

    pub fn relation(&self, name: &str) -> Option<&Relation> {
        self.relations.get(name)
    }

    pub fn relations(&self) -> impl Iterator<Item = &Relation> {
        self.relations.values()
    }

    /// Renders a point: an integer on linear orders, `v:z` on grids.
    pub fn render_point(&self, p: usize) -> String {
        match &self.kind {
            StructureKind::Linear => p.to_string(),
            StructureKind::Grid(g) => {
                let (v, z) = g.coords(p);
                format!("{v}:{z}")
            }
        }
    }

    pub fn render_tuple(&self, t: &[usize]) -> String {
        t.iter()
            .map(|&p| self.render_point(p))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuple_order_is_lexicographic() {
        let all: Vec<_> = all_tuples(2, 2).collect();
        assert_eq!(all, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(all_tuples(3, 0).count(), 1);
        assert_eq!(all_tuples(4, 3).count(), 64);
    }

    #[test]
    fn relation_membership_and_errors() {
        let mut r = Relation::empty("R", 2, 3).unwrap();
        r.insert(&[2, 0]).unwrap();
        r.insert(&[0, 1]).unwrap();
        r.insert(&[0, 1]).unwrap();
        assert_eq!(r.tuples().collect::<Vec<_>>(), vec![vec![0, 1], vec![2, 0]]);
        assert!(r.contains(&[2, 0]));
        assert!(!r.contains(&[2, 0, 1]));
        assert!(!r.contains(&[3, 0]));
        assert!(matches!(
            r.insert(&[0]),
            Err(Error::ArityMismatch {
                expected: 2,
                got: 1
            })
        ));
        assert!(matches!(r.insert(&[0, 5]), Err(Error::OutOfRange { .. })));
        assert!(Relation::empty("Z", 0, 3).is_err());
    }

    #[test]
    fn structure_rejects_foreign_relations() {
        let mut s = FiniteStructure::linear(3).unwrap();
        assert!(s.add_relation(Relation::empty("R", 1, 4).unwrap()).is_err());
        s.add_relation(Relation::empty("R", 1, 3).unwrap()).unwrap();
        assert!(s.relation("R").is_some());
        assert!(FiniteStructure::linear(0).is_err());
    }

    #[test]
    fn order_is_strict_total() {
        let s = FiniteStructure::linear(5).unwrap();
        for a in 0..5 {
            assert!(!s.less(a, a));
            for b in 0..5 {
                if a != b {
                    assert!(s.less(a, b) ^ s.less(b, a));
                }
                for c in 0..5 {
                    if s.less(a, b) && s.less(b, c) {
                        assert!(s.less(a, c));
                    }
                }
            }
        }
    }
}
