//! Finite grids of vertical chains.
//!
//! A grid `G(m, h)` has `m` verticals `0..m`, each a chain of `h` levels.
//! Point `(v, z)` has index `v*h + z`, so the index order is the
//! lexicographic order (vertical first, then level). Two points on the same
//! vertical have a finite difference; points on distinct verticals are
//! infinitely far apart.
//!
//! A linear window `0..n` is treated as the one-vertical grid `G(1, n)`
//! whenever differences are needed.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::structure::{all_tuples, Relation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GridStructure {
    m: usize,
    h: usize,
}

impl GridStructure {
    pub fn new(m: usize, h: usize) -> Result<Self> {
        if m == 0 || h == 0 {
            return Err(Error::Input(format!(
                "grid needs at least one vertical and one level, got m={m} h={h}"
            )));
        }
        Ok(Self { m, h })
    }

    /// A window of `n` consecutive integers.
    pub fn window(n: usize) -> Self {
        Self { m: 1, h: n.max(1) }
    }

    pub fn verticals(&self) -> usize {
        self.m
    }

    pub fn height(&self) -> usize {
        self.h
    }

    pub fn size(&self) -> usize {
        self.m * self.h
    }

    #[inline]
    pub fn point(&self, v: usize, z: usize) -> usize {
        debug_assert!(v < self.m && z < self.h);
        v * self.h + z
    }

    #[inline]
    pub fn coords(&self, p: usize) -> (usize, usize) {
        (p / self.h, p % self.h)
    }

    /// `a - b`: the level difference on a shared vertical, infinite
    /// otherwise.
    #[inline]
    pub fn diff(&self, a: usize, b: usize) -> ExtendedInt {
        let (va, za) = self.coords(a);
        let (vb, zb) = self.coords(b);
        if va == vb {
            ExtendedInt::Finite(za as i64 - zb as i64)
        } else {
            ExtendedInt::Infinite
        }
    }

    fn check_perm(&self, p: &Permutation) -> Result<()> {
        if p.size() != self.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: p.size(),
            });
        }
        Ok(())
    }

    /// Classifies a permutation of the grid's points.
    pub fn classify(&self, p: &Permutation) -> Result<PermClass> {
        self.check_perm(p)?;
        let Some(q) = self.vertical_map(p) else {
            return Ok(PermClass::default());
        };
        let chain_order = |reversed: bool| {
            (0..self.m).all(|v| {
                (1..self.h).all(|z| {
                    let lo = self.coords(p.image(self.point(v, z - 1))).1;
                    let hi = self.coords(p.image(self.point(v, z))).1;
                    if reversed {
                        lo > hi
                    } else {
                        lo < hi
                    }
                })
            })
        };
        let positive = chain_order(false);
        let negative = chain_order(true);
        let fixes_verticals = q.is_identity();
        Ok(PermClass {
            systemic: true,
            positive,
            negative,
            // an increasing bijection of finitely many verticals is the identity
            shift: positive && fixes_verticals,
            vertical_shift: positive && fixes_verticals,
        })
    }

    /// The induced permutation of verticals, if every vertical is mapped
    /// onto a vertical.
    fn vertical_map(&self, p: &Permutation) -> Option<Permutation> {
        let mut images = Vec::with_capacity(self.m);
        for v in 0..self.m {
            let target = self.coords(p.image(self.point(v, 0))).0;
            if (1..self.h).any(|z| self.coords(p.image(self.point(v, z))).0 != target) {
                return None;
            }
            images.push(target);
        }
        Some(Permutation::from_images_unchecked(images))
    }

    /// The permutation of verticals initiated by a systemic permutation.
    pub fn initiate(&self, p: &Permutation) -> Result<Permutation> {
        self.check_perm(p)?;
        self.vertical_map(p).ok_or(Error::NotSystemic)
    }

    /// The unique grid permutation initiating `q` with the given
    /// orientation on each vertical.
    pub fn lift(&self, q: &Permutation, orientation: &Orientation) -> Result<Permutation> {
        if q.size() != self.m {
            return Err(Error::SizeMismatch {
                left: self.m,
                right: q.size(),
            });
        }
        let flips: Vec<bool> = match orientation {
            Orientation::AllPositive => vec![false; self.m],
            Orientation::AllNegative => vec![true; self.m],
            Orientation::PerVertical(f) if f.len() == self.m => f.clone(),
            Orientation::PerVertical(f) => {
                return Err(Error::SizeMismatch {
                    left: self.m,
                    right: f.len(),
                })
            }
        };
        let images = (0..self.size())
            .map(|i| {
                let (v, z) = self.coords(i);
                let z2 = if flips[v] { self.h - 1 - z } else { z };
                self.point(q.image(v), z2)
            })
            .collect();
        Ok(Permutation::from_images_unchecked(images))
    }

    /// Whether `a` and `b` are `m`-indistinguishable: they have the same
    /// order type, and every pair difference of magnitude at most `m` in
    /// either tuple is the same difference in the other.
    pub fn m_indistinguishable(&self, a: &[usize], b: &[usize], m: usize) -> Result<bool> {
        if a.len() != b.len() {
            return Err(Error::ArityMismatch {
                expected: a.len(),
                got: b.len(),
            });
        }
        if let Some(&e) = a.iter().chain(b).find(|&&e| e >= self.size()) {
            return Err(Error::OutOfRange {
                element: e,
                size: self.size(),
            });
        }
        let bound = ExtendedInt::Finite(m as i64);
        for i in 0..a.len() {
            for j in 0..a.len() {
                if (a[i] < a[j]) != (b[i] < b[j]) {
                    return Ok(false);
                }
                let da = self.diff(a[i], a[j]);
                let db = self.diff(b[i], b[j]);
                if (da.abs() <= bound || db.abs() <= bound) && da != db {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Canonical profile of a tuple at depth `m`: two tuples are
    /// `m`-indistinguishable exactly when their profiles coincide.
    fn profile(&self, t: &[usize], m: usize, out: &mut Vec<i64>) {
        out.clear();
        for i in 0..t.len() {
            for j in i + 1..t.len() {
                let ord = match t[i].cmp(&t[j]) {
                    Ordering::Less => -1,
                    Ordering::Equal => 0,
                    Ordering::Greater => 1,
                };
                out.push(ord);
                out.push(match self.diff(t[i], t[j]) {
                    ExtendedInt::Finite(d) if d.unsigned_abs() <= m as u64 => d,
                    _ => i64::MAX,
                });
            }
        }
    }

    /// Whether every pair of `m`-indistinguishable tuples agrees on `r`.
    pub fn is_boundary(&self, r: &Relation, m: usize) -> Result<bool> {
        if r.universe() != self.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: r.universe(),
            });
        }
        let mut seen: HashMap<Vec<i64>, bool> = HashMap::new();
        let mut key = Vec::new();
        for t in all_tuples(self.size(), r.arity()) {
            self.profile(&t, m, &mut key);
            let member = r.contains_unchecked(&t);
            match seen.get(&key) {
                Some(&prev) if prev != member => return Ok(false),
                Some(_) => {}
                None => {
                    seen.insert(key.clone(), member);
                }
            }
        }
        Ok(true)
    }

    /// Least `m <= cap` that is a boundary for `r`.
    ///
    /// Each candidate is checked exhaustively over all tuples of the
    /// relation's arity, grouped by indistinguishability profile.
    pub fn boundary(&self, r: &Relation, cap: usize) -> Result<usize> {
        for m in 0..=cap {
            if self.is_boundary(r, m)? {
                return Ok(m);
            }
        }
        Err(Error::ExceedsCap { cap })
    }

    /// Levels a vertical needs to hold `blocks` in sequence with at least
    /// `gap + 1` between adjacent blocks.
    fn levels_needed(&self, spans: impl Iterator<Item = usize>, gap: usize) -> usize {
        let mut total = 0;
        for (k, s) in spans.enumerate() {
            if k > 0 {
                total += gap;
            }
            total += s + 1;
        }
        total
    }

    /// Embeds a block vector: block `i` goes to vertical `assignment[i]`,
    /// blocks sharing a vertical are stacked in index order from level 0,
    /// and adjacent blocks on one vertical are more than `gap` apart. The
    /// tuple lists block 0's points, then block 1's, and so on.
    pub fn place_blocks(
        &self,
        bv: &BlockVector,
        assignment: &[usize],
        gap: usize,
    ) -> Result<Vec<usize>> {
        if assignment.len() != bv.len() {
            return Err(Error::ArityMismatch {
                expected: bv.len(),
                got: assignment.len(),
            });
        }
        if let Some(&v) = assignment.iter().find(|&&v| v >= self.m) {
            return Err(Error::OutOfRange {
                element: v,
                size: self.m,
            });
        }
        let required = (0..self.m)
            .map(|v| {
                self.levels_needed(
                    bv.blocks
                        .iter()
                        .zip(assignment)
                        .filter(|(_, &a)| a == v)
                        .map(|(b, _)| b.span()),
                    gap,
                )
            })
            .max()
            .unwrap_or(0);
        if required > self.h {
            return Err(Error::GridTooSmall {
                required,
                height: self.h,
            });
        }
        let mut cursor = vec![0usize; self.m];
        let mut out = Vec::with_capacity(bv.arity());
        for (block, &v) in bv.blocks.iter().zip(assignment) {
            let base = cursor[v];
            out.extend(block.offsets().iter().map(|&o| self.point(v, base + o)));
            cursor[v] = base + block.span() + 1 + gap;
        }
        Ok(out)
    }
}

/// An integer or infinity; infinity exceeds every integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedInt {
    Finite(i64),
    Infinite,
}

impl ExtendedInt {
    pub fn abs(self) -> ExtendedInt {
        match self {
            ExtendedInt::Finite(k) => ExtendedInt::Finite(k.abs()),
            ExtendedInt::Infinite => ExtendedInt::Infinite,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtendedInt::Finite(_))
    }
}

impl fmt::Display for ExtendedInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedInt::Finite(k) => write!(f, "{k}"),
            ExtendedInt::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PermClass {
    /// Every vertical is mapped onto a vertical.
    pub systemic: bool,
    /// Systemic and order-preserving on every vertical.
    pub positive: bool,
    /// Systemic and order-reversing on every vertical.
    pub negative: bool,
    /// Positive and increasing on verticals.
    pub shift: bool,
    /// Positive and fixing every vertical.
    pub vertical_shift: bool,
}

impl fmt::Display for PermClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "systemic={} positive={} negative={} shift={} vertical_shift={}",
            self.systemic, self.positive, self.negative, self.shift, self.vertical_shift
        )
    }
}

/// Per-vertical orientation of a lift.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Orientation {
    AllPositive,
    AllNegative,
    /// `true` reverses the chain on that vertical.
    PerVertical(Vec<bool>),
}

/// A run of levels destined for one vertical, stored as offsets from its
/// lowest level.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    offsets: Vec<usize>,
}

impl Block {
    /// Builds a block from strictly increasing levels; they are shifted so
    /// the lowest is 0.
    pub fn new(levels: Vec<usize>) -> Result<Self> {
        if levels.is_empty() || levels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Input(format!(
                "block levels must be non-empty and strictly increasing: {levels:?}"
            )));
        }
        let base = levels[0];
        Ok(Self {
            offsets: levels.into_iter().map(|l| l - base).collect(),
        })
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// Difference between the highest and lowest level.
    pub fn span(&self) -> usize {
        *self.offsets.last().unwrap()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BlockVector {
    pub blocks: Vec<Block>,
}

impl BlockVector {
    pub fn new(blocks: Vec<Block>) -> Self {
        Self { blocks }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.blocks.iter().map(|b| b.offsets.len()).sum()
    }

    pub fn total_span(&self) -> usize {
        self.blocks.iter().map(Block::span).sum()
    }
}

/// Split of a finite order `0..n` into a prefix `0..split` and a suffix
/// `split..n`; either part may be empty.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Section {
    pub split: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SectionCondition {
    /// Decreasing on both parts, keeping the parts in order.
    Decreasing,
    /// Increasing on both parts, swapping the parts.
    Increasing,
}

impl fmt::Display for SectionCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SectionCondition::Decreasing => write!(f, "(i)"),
            SectionCondition::Increasing => write!(f, "(ii)"),
        }
    }
}

/// How section matches translate into membership of the finite
/// separation-automorphism analogue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SectionConvention {
    /// Any match counts; conditions on an empty part are vacuous.
    Vacuous,
    /// Only matches with both parts non-empty count, and monotone maps are
    /// added explicitly.
    ProperWithMonotone,
    /// Only matches with both parts non-empty count.
    ProperOnly,
}

impl SectionConvention {
    pub const ALL: [SectionConvention; 3] = [
        SectionConvention::Vacuous,
        SectionConvention::ProperWithMonotone,
        SectionConvention::ProperOnly,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SectionConvention::Vacuous => "vacuous-empty-part",
            SectionConvention::ProperWithMonotone => "proper-sections+monotone",
            SectionConvention::ProperOnly => "proper-sections-only",
        }
    }
}

fn monotone(vals: &[usize], increasing: bool) -> bool {
    vals.windows(2)
        .all(|w| if increasing { w[0] < w[1] } else { w[0] > w[1] })
}

/// All sections under which `q` satisfies one of the two section
/// conditions, in order of split point.
pub fn section_classify(q: &Permutation) -> Vec<(Section, SectionCondition)> {
    let n = q.size();
    let img = q.images();
    let mut out = Vec::new();
    for split in 0..=n {
        let (first, second) = img.split_at(split);
        let first_max = first.iter().max();
        let second_min = second.iter().min();
        let first_min = first.iter().min();
        let second_max = second.iter().max();
        let parts_kept = match (first_max, second_min) {
            (Some(a), Some(b)) => a < b,
            _ => true,
        };
        let parts_swapped = match (first_min, second_max) {
            (Some(a), Some(b)) => a > b,
            _ => true,
        };
        if monotone(first, false) && monotone(second, false) && parts_kept {
            out.push((Section { split }, SectionCondition::Decreasing));
        }
        if monotone(first, true) && monotone(second, true) && parts_swapped {
            out.push((Section { split }, SectionCondition::Increasing));
        }
    }
    out
}

/// Membership of `q` in the separation-automorphism analogue under
/// `convention`.
pub fn section_member(q: &Permutation, convention: SectionConvention) -> bool {
    let n = q.size();
    let matches = section_classify(q);
    let proper = matches.iter().any(|(s, _)| s.split > 0 && s.split < n);
    match convention {
        SectionConvention::Vacuous => !matches.is_empty(),
        SectionConvention::ProperWithMonotone => {
            proper || monotone(q.images(), true) || monotone(q.images(), false)
        }
        SectionConvention::ProperOnly => proper,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::relations::{grid_relation, RelationPreset};
    use crate::structure::FiniteStructure;
    use itertools::Itertools;

    fn g(m: usize, h: usize) -> GridStructure {
        GridStructure::new(m, h).unwrap()
    }

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn diff_examples() {
        let grid = g(2, 4);
        assert_eq!(
            grid.diff(grid.point(0, 3), grid.point(0, 1)),
            ExtendedInt::Finite(2)
        );
        assert_eq!(
            grid.diff(grid.point(0, 1), grid.point(1, 1)),
            ExtendedInt::Infinite
        );
        assert_eq!(grid.diff(5, 5), ExtendedInt::Finite(0));
        assert!(ExtendedInt::Infinite > ExtendedInt::Finite(i64::MAX));
        assert_eq!(ExtendedInt::Infinite.abs(), ExtendedInt::Infinite);
    }

    #[test]
    fn classify_examples() {
        let grid = g(3, 2);
        let swap01 = perm(&[2, 3, 0, 1, 4, 5]);
        let c = grid.classify(&swap01).unwrap();
        assert!(c.systemic && c.positive && !c.negative && !c.shift);

        let full_flip = perm(&(0..6).rev().collect::<Vec<_>>());
        let c = grid.classify(&full_flip).unwrap();
        assert!(c.systemic && c.negative && !c.positive);

        let c = grid.classify(&Permutation::identity(6)).unwrap();
        assert!(c.systemic && c.positive && c.shift && c.vertical_shift && !c.negative);

        let cross = perm(&[0, 2, 1, 3, 4, 5]);
        assert_eq!(grid.classify(&cross).unwrap(), PermClass::default());

        let one_flip = perm(&[1, 0, 2, 3, 4, 5]);
        let c = grid.classify(&one_flip).unwrap();
        assert!(c.systemic && !c.positive && !c.negative);
    }

    #[test]
    fn class_flags_are_consistent() {
        let grid = g(3, 2);
        for images in (0..6).permutations(6) {
            let c = grid.classify(&perm(&images)).unwrap();
            assert!(!c.positive || c.systemic);
            assert!(!c.negative || c.systemic);
            assert!(!c.shift || c.positive);
            assert!(!c.vertical_shift || c.shift);
            assert!(!(c.positive && c.negative));
        }
    }

    #[test]
    fn initiate_examples() {
        let grid = g(3, 2);
        let swap01 = perm(&[2, 3, 0, 1, 4, 5]);
        assert_eq!(grid.initiate(&swap01).unwrap(), perm(&[1, 0, 2]));
        assert!(grid
            .initiate(&Permutation::identity(6))
            .unwrap()
            .is_identity());
        let cross = perm(&[0, 2, 1, 3, 4, 5]);
        assert_eq!(grid.initiate(&cross).unwrap_err(), Error::NotSystemic);
    }

    #[test]
    fn initiation_is_a_homomorphism() {
        let grid = g(3, 2);
        let systemic: Vec<_> = (0..6)
            .permutations(6)
            .map(|v| perm(&v))
            .filter(|p| grid.classify(p).unwrap().systemic)
            .collect();
        assert_eq!(systemic.len(), 48);
        for p in &systemic {
            for q in &systemic {
                let pq = p.compose(q).unwrap();
                assert_eq!(
                    grid.initiate(&pq).unwrap(),
                    grid.initiate(p)
                        .unwrap()
                        .compose(&grid.initiate(q).unwrap())
                        .unwrap()
                );
            }
        }
    }

    #[test]
    fn lift_examples() {
        let grid = g(3, 3);
        let flipped = grid
            .lift(&Permutation::identity(3), &Orientation::AllNegative)
            .unwrap();
        assert_eq!(flipped.images(), &[2, 1, 0, 5, 4, 3, 8, 7, 6]);
        let rot = grid
            .lift(&Permutation::rotation(3, 1), &Orientation::AllPositive)
            .unwrap();
        assert_eq!(rot.images(), &[3, 4, 5, 6, 7, 8, 0, 1, 2]);
        assert!(grid
            .lift(&Permutation::identity(3), &Orientation::AllPositive)
            .unwrap()
            .is_identity());
        assert!(grid
            .lift(
                &Permutation::identity(3),
                &Orientation::PerVertical(vec![true])
            )
            .is_err());
    }

    #[test]
    fn lifts_are_sections_of_initiation() {
        for m in 1..=4 {
            let grid = g(m, 3);
            for q in (0..m).permutations(m).map(|v| perm(&v)) {
                let pos = grid.lift(&q, &Orientation::AllPositive).unwrap();
                let neg = grid.lift(&q, &Orientation::AllNegative).unwrap();
                assert_eq!(grid.initiate(&pos).unwrap(), q);
                assert_eq!(grid.initiate(&neg).unwrap(), q);
                assert!(grid.classify(&pos).unwrap().positive);
                assert!(grid.classify(&neg).unwrap().negative);
            }
        }
    }

    #[test]
    fn two_lifts_exactly() {
        let grid = g(3, 2);
        let all: Vec<_> = (0..6).permutations(6).map(|v| perm(&v)).collect();
        for q in (0..3).permutations(3).map(|v| perm(&v)) {
            let positive: Vec<_> = all
                .iter()
                .filter(|p| {
                    let c = grid.classify(p).unwrap();
                    c.positive && grid.initiate(p).unwrap() == q
                })
                .collect();
            let negative: Vec<_> = all
                .iter()
                .filter(|p| {
                    let c = grid.classify(p).unwrap();
                    c.negative && grid.initiate(p).unwrap() == q
                })
                .collect();
            assert_eq!(
                positive,
                vec![&grid.lift(&q, &Orientation::AllPositive).unwrap()]
            );
            assert_eq!(
                negative,
                vec![&grid.lift(&q, &Orientation::AllNegative).unwrap()]
            );
        }
    }

    #[test]
    fn m_indistinguishable_examples() {
        let w = GridStructure::window(21);
        assert!(w.m_indistinguishable(&[0, 1, 5], &[0, 1, 9], 1).unwrap());
        assert!(!w.m_indistinguishable(&[0, 1, 5], &[0, 1, 9], 4).unwrap());
        for m in 0..6 {
            assert!(w.m_indistinguishable(&[3, 7, 7], &[3, 7, 7], m).unwrap());
        }
        assert!(w.m_indistinguishable(&[0], &[0, 1], 1).is_err());
    }

    #[test]
    fn profile_matches_definition() {
        let grid = g(2, 4);
        let tuples: Vec<_> = all_tuples(8, 3).collect();
        let mut ka = Vec::new();
        let mut kb = Vec::new();
        for m in 0..4 {
            for a in &tuples {
                grid.profile(a, m, &mut ka);
                for b in &tuples {
                    grid.profile(b, m, &mut kb);
                    let direct = grid.m_indistinguishable(a, b, m).unwrap();
                    assert_eq!(direct, ka == kb, "m={m} a={a:?} b={b:?}");
                    if direct {
                        for k in 0..m {
                            assert!(grid.m_indistinguishable(a, b, k).unwrap());
                        }
                    }
                }
            }
        }
    }

    fn brute_boundary(grid: &GridStructure, r: &Relation, cap: usize) -> Option<usize> {
        let tuples: Vec<_> = all_tuples(grid.size(), r.arity()).collect();
        (0..=cap).find(|&m| {
            tuples.iter().all(|a| {
                tuples.iter().all(|b| {
                    !grid.m_indistinguishable(a, b, m).unwrap() || r.contains(a) == r.contains(b)
                })
            })
        })
    }

    #[test]
    fn boundary_examples() {
        let grid = g(2, 6);
        let s = FiniteStructure::grid(grid);
        let order = RelationPreset::Order.build(&s).unwrap();
        let succ = grid_relation(&grid, RelationPreset::Succ(1)).unwrap();
        let dist2 = grid_relation(&grid, RelationPreset::Dist(2)).unwrap();
        assert_eq!(grid.boundary(&order, 5).unwrap(), 0);
        assert_eq!(grid.boundary(&succ, 5).unwrap(), 1);
        assert_eq!(grid.boundary(&dist2, 5).unwrap(), 2);
        assert_eq!(brute_boundary(&grid, &order, 5), Some(0));
        assert_eq!(brute_boundary(&grid, &succ, 5), Some(1));
        assert_eq!(brute_boundary(&grid, &dist2, 5), Some(2));
        assert_eq!(
            grid.boundary(&succ, 0).unwrap_err(),
            Error::ExceedsCap { cap: 0 }
        );
    }

    #[test]
    fn codir_boundary_matches_pairwise_oracle() {
        let grid = GridStructure::window(6);
        let codir2 = grid_relation(&grid, RelationPreset::Codir(2)).unwrap();
        assert_eq!(brute_boundary(&grid, &codir2, 5), Some(2));
        assert_eq!(grid.boundary(&codir2, 5).unwrap(), 2);
    }

    #[test]
    fn place_blocks_examples() {
        let grid = g(1, 6);
        let two = BlockVector::new(vec![
            Block::new(vec![0, 1]).unwrap(),
            Block::new(vec![3, 4]).unwrap(),
        ]);
        assert_eq!(
            grid.place_blocks(&two, &[0, 0], 2).unwrap(),
            vec![0, 1, 4, 5]
        );

        let single = BlockVector::new(vec![Block::new(vec![2, 3, 5]).unwrap()]);
        for gap in [0, 3, 10] {
            assert_eq!(
                grid.place_blocks(&single, &[0], gap).unwrap(),
                vec![0, 1, 3]
            );
        }

        let three = BlockVector::new(vec![
            Block::new(vec![0, 1]).unwrap(),
            Block::new(vec![0, 1]).unwrap(),
            Block::new(vec![0]).unwrap(),
        ]);
        assert_eq!(
            grid.place_blocks(&three, &[0, 0, 0], 2).unwrap_err(),
            Error::GridTooSmall {
                required: 9,
                height: 6
            }
        );
        assert!(Block::new(vec![1, 1]).is_err());
    }

    #[test]
    fn placements_with_same_shape_are_gap_indistinguishable() {
        let grid = g(3, 12);
        let bv = BlockVector::new(vec![
            Block::new(vec![0, 2]).unwrap(),
            Block::new(vec![0]).unwrap(),
            Block::new(vec![0, 1]).unwrap(),
        ]);
        let a = grid.place_blocks(&bv, &[0, 0, 1], 2).unwrap();
        let b = grid.place_blocks(&bv, &[1, 1, 2], 2).unwrap();
        assert!(grid.m_indistinguishable(&a, &b, 2).unwrap());
        // different stacking: blocks 0,1 on separate verticals
        let c = grid.place_blocks(&bv, &[0, 1, 2], 2).unwrap();
        assert!(grid.m_indistinguishable(&a, &c, 2).unwrap());
        assert!(!grid.m_indistinguishable(&a, &c, 3).unwrap());
    }

    #[test]
    fn section_examples() {
        let rot = Permutation::rotation(4, 1);
        let m = section_classify(&rot);
        assert!(m.contains(&(Section { split: 3 }, SectionCondition::Increasing)));

        let rev = Permutation::reversal(4);
        let m = section_classify(&rev);
        assert!(m.contains(&(Section { split: 4 }, SectionCondition::Decreasing)));

        let swap = perm(&[1, 0, 2, 3]);
        assert!(section_classify(&swap).is_empty());
    }

    #[test]
    fn section_conventions_on_small_orders() {
        let id = Permutation::identity(4);
        assert!(section_member(&id, SectionConvention::Vacuous));
        assert!(section_member(&id, SectionConvention::ProperWithMonotone));
        assert!(!section_member(&id, SectionConvention::ProperOnly));
    }
}
