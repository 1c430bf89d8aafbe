//! Exhaustive reference computations, used as oracles for the search-based
//! routines.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::galois::preserves;
use crate::perm::{Permutation, PermutationGroup};
use crate::structure::Relation;

/// Largest universe the exhaustive filter accepts (9! permutations).
pub const MAX_EXHAUSTIVE: usize = 9;

/// Every permutation of `0..n` in lexicographic order.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (0..n)
        .permutations(n)
        .map(Permutation::from_images_unchecked)
}

/// Automorphism group by filtering all `n!` permutations.
pub fn aut_group_exhaustive(n: usize, rels: &[Relation]) -> Result<PermutationGroup> {
    if n > MAX_EXHAUSTIVE {
        return Err(Error::Input(format!(
            "exhaustive filter limited to {MAX_EXHAUSTIVE} points, got {n}"
        )));
    }
    let mut members = Vec::new();
    for p in all_permutations(n) {
        let mut keep = true;
        for r in rels {
            if !preserves(&p, r)?.is_preserved() {
                keep = false;
                break;
            }
        }
        if keep {
            members.push(p);
        }
    }
    Ok(PermutationGroup::from_members(n, members))
}
