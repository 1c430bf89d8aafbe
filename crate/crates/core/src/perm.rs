//! Permutations of a finite universe and the groups they generate.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `{0, .., n-1}`, stored as its image sequence.
///
/// The derived ordering is lexicographic on the images, which is the
/// canonical order used for every member list and witness search.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || seen[i] {
                return Err(Error::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Self { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::new(images.clone()).is_ok());
        Self { images }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).collect(),
        }
    }

    /// Order reversal `i -> n-1-i`.
    pub fn reversal(n: usize) -> Self {
        Self {
            images: (0..n).rev().collect(),
        }
    }

    /// Cyclic rotation `i -> i+k mod n`.
    pub fn rotation(n: usize, k: usize) -> Self {
        Self {
            images: (0..n).map(|i| (i + k) % n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self ∘ other`, i.e. `i -> self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&j| self.images[j]).collect(),
        }
    }

    pub fn invert(&self) -> Permutation {
        let mut images = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Permutation { images }
    }

    /// Pointwise image of a tuple.
    pub fn apply_to_tuple(&self, tuple: &[usize]) -> Result<Vec<usize>> {
        tuple
            .iter()
            .map(|&e| {
                self.images.get(e).copied().ok_or(Error::OutOfRange {
                    element: e,
                    size: self.size(),
                })
            })
            .collect()
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "]")
    }
}

/// A finite permutation group with its members in canonical order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PermutationGroup {
    degree: usize,
    members: Vec<Permutation>,
}

impl PermutationGroup {
    /// Wraps a member list that is already known to be a group.
    pub(crate) fn from_members(degree: usize, mut members: Vec<Permutation>) -> Self {
        members.sort_unstable();
        members.dedup();
        Self { degree, members }
    }

    pub fn trivial(degree: usize) -> Self {
        Self {
            degree,
            members: vec![Permutation::identity(degree)],
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Permutation] {
        &self.members
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.members.binary_search(p).is_ok()
    }

    pub fn is_subgroup_of(&self, other: &PermutationGroup) -> bool {
        self.order() <= other.order() && self.members.iter().all(|p| other.contains(p))
    }

    /// Checks closure under composition and inverse, and that identity is
    /// present.
    pub fn is_closed(&self) -> bool {
        self.contains(&Permutation::identity(self.degree))
            && self.members.iter().all(|a| {
                self.contains(&a.invert())
                    && self
                        .members
                        .iter()
                        .all(|b| self.contains(&a.compose_unchecked(b)))
            })
    }
}

/// Smallest group on `degree` points containing `generators`.
///
/// Closure is by breadth-first right multiplication with the generators;
/// inverses come for free in a finite group.
pub fn generate_group(degree: usize, generators: &[Permutation]) -> Result<PermutationGroup> {
    if let Some(g) = generators.iter().find(|g| g.size() != degree) {
        return Err(Error::SizeMismatch {
            left: degree,
            right: g.size(),
        });
    }
    let identity = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::from([identity.clone()]);
    let mut frontier = vec![identity];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for p in &frontier {
            for g in generators {
                let q = p.compose_unchecked(g);
                if seen.insert(q.clone()) {
                    next.push(q);
                }
            }
        }
        frontier = next;
    }
    Ok(PermutationGroup::from_members(
        degree,
        seen.into_iter().collect(),
    ))
}
