//! Automorphism groups, definability and lattices of definability spaces.
//!
//! On a finite structure a relation is definable from a base set exactly
//! when every automorphism of the base preserves it, so definability spaces
//! are compared through their automorphism groups: a larger space has a
//! smaller group.

use std::cmp::Reverse;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup};
use crate::structure::{all_tuples, FiniteStructure, Relation, Tuple};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preservation {
    Preserved,
    /// Lexicographically least tuple whose membership differs from that of
    /// its image.
    Broken(Tuple),
}

impl Preservation {
    pub fn is_preserved(&self) -> bool {
        matches!(self, Preservation::Preserved)
    }
}

fn check_universe(p: &Permutation, r: &Relation) -> Result<()> {
    if p.size() != r.universe() {
        return Err(Error::SizeMismatch {
            left: p.size(),
            right: r.universe(),
        });
    }
    Ok(())
}

fn image(p: &Permutation, t: &[usize], buf: &mut Vec<usize>) {
    buf.clear();
    buf.extend(t.iter().map(|&e| p.image(e)));
}

/// Whether `p` maps `r` onto itself.
pub fn preserves(p: &Permutation, r: &Relation) -> Result<Preservation> {
    check_universe(p, r)?;
    let mut buf = Vec::with_capacity(r.arity());
    // p is a bijection on tuples, so mapping the extension into itself is
    // enough
    let ok = r.tuples().all(|t| {
        image(p, &t, &mut buf);
        r.contains_unchecked(&buf)
    });
    if ok {
        return Ok(Preservation::Preserved);
    }
    let t = all_tuples(r.universe(), r.arity())
        .find(|t| {
            image(p, t, &mut buf);
            r.contains_unchecked(t) != r.contains_unchecked(&buf)
        })
        .expect("a non-preserving permutation has a breaking tuple");
    Ok(Preservation::Broken(t))
}

fn preserves_fast(p: &Permutation, r: &Relation, buf: &mut Vec<usize>) -> bool {
    r.tuples().all(|t| {
        image(p, &t, buf);
        r.contains_unchecked(buf)
    })
}

struct Search<'a> {
    n: usize,
    rels: &'a [Relation],
}

impl Search<'_> {
    /// Checks every tuple over the placed points `0..=k` that contains `k`.
    fn consistent(&self, images: &[usize], t: &mut Vec<usize>, u: &mut Vec<usize>) -> bool {
        let k = images.len() - 1;
        for r in self.rels {
            let a = r.arity();
            t.clear();
            t.resize(a, 0);
            loop {
                if t.contains(&k) {
                    u.clear();
                    u.extend(t.iter().map(|&e| images[e]));
                    if r.contains_unchecked(t) != r.contains_unchecked(u) {
                        return false;
                    }
                }
                // odometer over {0..=k}^a
                let mut pos = a;
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    t[pos] += 1;
                    if t[pos] <= k {
                        break;
                    }
                    t[pos] = 0;
                }
                if t.iter().all(|&e| e == 0) {
                    break;
                }
            }
        }
        true
    }

    fn extend(
        &self,
        images: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Permutation>,
        t: &mut Vec<usize>,
        u: &mut Vec<usize>,
    ) {
        if !self.consistent(images, t, u) {
            return;
        }
        if images.len() == self.n {
            out.push(Permutation::from_images_unchecked(images.clone()));
            return;
        }
        for c in 0..self.n {
            if used[c] {
                continue;
            }
            used[c] = true;
            images.push(c);
            self.extend(images, used, out, t, u);
            images.pop();
            used[c] = false;
        }
    }

    fn branch(&self, first: usize) -> Vec<Permutation> {
        let mut images = vec![first];
        let mut used = vec![false; self.n];
        used[first] = true;
        let mut out = Vec::new();
        let (mut t, mut u) = (Vec::new(), Vec::new());
        self.extend(&mut images, &mut used, &mut out, &mut t, &mut u);
        out
    }
}

/// All permutations of the universe preserving every relation in `rels`.
///
/// Backtracking places points in universe order and tries images in
/// ascending order, rejecting a partial map as soon as some tuple over the
/// placed points changes membership. The branches for the image of point 0
/// run in parallel on the current rayon pool; member order is canonical
/// either way.
pub fn aut_group(s: &FiniteStructure, rels: &[Relation]) -> Result<PermutationGroup> {
    let n = s.size();
    if let Some(r) = rels.iter().find(|r| r.universe() != n) {
        return Err(Error::SizeMismatch {
            left: n,
            right: r.universe(),
        });
    }
    let search = Search { n, rels };
    let members: Vec<Permutation> = (0..n)
        .into_par_iter()
        .map(|first| search.branch(first))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    Ok(PermutationGroup::from_members(n, members))
}

/// Certificate that a permutation preserves one side and breaks the other.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub permutation: Permutation,
    /// Generators the permutation preserves.
    pub preserved: Vec<String>,
    /// The relation it breaks.
    pub broken: String,
    pub tuple: Tuple,
    pub image: Tuple,
}

impl Witness {
    /// Re-checks the certificate against the relations it names.
    pub fn verify(&self, preserved: &[Relation], broken: &Relation) -> bool {
        let p = &self.permutation;
        preserved
            .iter()
            .all(|r| matches!(preserves(p, r), Ok(Preservation::Preserved)))
            && p.apply_to_tuple(&self.tuple).as_ref() == Ok(&self.image)
            && broken.contains(&self.tuple) != broken.contains(&self.image)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "witness={} breaks={} tuple=({})",
            self.permutation,
            self.broken,
            self.tuple
                .iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        )
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Definability {
    Yes,
    No(Witness),
}

/// Least member of `group` that breaks some relation of `targets`,
/// together with the first relation broken and its least breaking tuple.
fn least_breaker(
    group: &PermutationGroup,
    preserved: &[Relation],
    targets: &[Relation],
) -> Result<Option<Witness>> {
    let mut buf = Vec::new();
    for p in group.members() {
        for r in targets {
            check_universe(p, r)?;
            if preserves_fast(p, r, &mut buf) {
                continue;
            }
            let Preservation::Broken(tuple) = preserves(p, r)? else {
                unreachable!()
            };
            let image = p.apply_to_tuple(&tuple)?;
            return Ok(Some(Witness {
                permutation: p.clone(),
                preserved: preserved.iter().map(|r| r.name().to_string()).collect(),
                broken: r.name().to_string(),
                tuple,
                image,
            }));
        }
    }
    Ok(None)
}

/// Decides whether `target` is definable from `base` on `s`.
pub fn definable(
    target: &Relation,
    base: &[Relation],
    s: &FiniteStructure,
) -> Result<Definability> {
    let group = aut_group(s, base)?;
    Ok(
        match least_breaker(&group, base, std::slice::from_ref(target))? {
            None => Definability::Yes,
            Some(w) => Definability::No(w),
        },
    )
}

/// The definability space generated by a set of relations, represented by
/// its automorphism group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinabilitySpace {
    generators: Vec<Relation>,
    group: PermutationGroup,
}

impl DefinabilitySpace {
    pub fn new(s: &FiniteStructure, generators: Vec<Relation>) -> Result<Self> {
        let group = aut_group(s, &generators)?;
        Ok(Self { generators, group })
    }

    pub fn from_parts(generators: Vec<Relation>, group: PermutationGroup) -> Self {
        Self { generators, group }
    }

    pub fn generators(&self) -> &[Relation] {
        &self.generators
    }

    pub fn group(&self) -> &PermutationGroup {
        &self.group
    }

    pub fn names(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|r| r.name().to_string())
            .collect()
    }

    /// Generator names joined with `+`.
    pub fn label(&self) -> String {
        let names = self.names();
        if names.is_empty() {
            "(none)".into()
        } else {
            names.join("+")
        }
    }
}

/// Relative position of two spaces, read as spaces (not groups).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Inclusion {
    Equal,
    /// The first space is strictly contained in the second.
    Subset,
    /// The second space is strictly contained in the first.
    Superset,
    Incomparable,
}

impl fmt::Display for Inclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inclusion::Equal => "equal",
            Inclusion::Subset => "subset",
            Inclusion::Superset => "superset",
            Inclusion::Incomparable => "incomparable",
        })
    }
}

/// Compares spaces by reverse inclusion of their groups.
pub fn space_compare(a: &DefinabilitySpace, b: &DefinabilitySpace) -> Result<Inclusion> {
    if a.group.degree() != b.group.degree() {
        return Err(Error::SizeMismatch {
            left: a.group.degree(),
            right: b.group.degree(),
        });
    }
    let a_in_b = a.group.is_subgroup_of(&b.group);
    let b_in_a = b.group.is_subgroup_of(&a.group);
    Ok(match (a_in_b, b_in_a) {
        (true, true) => Inclusion::Equal,
        (false, true) => Inclusion::Subset,
        (true, false) => Inclusion::Superset,
        (false, false) => Inclusion::Incomparable,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseNode {
    /// One label per generator set merged into this node.
    pub labels: Vec<String>,
    pub space: DefinabilitySpace,
}

impl HasseNode {
    pub fn order(&self) -> usize {
        self.space.group.order()
    }
}

/// Covering graph of a finite family of spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub nodes: Vec<HasseNode>,
    /// `(lower, upper)` node indices: the lower space is covered by the
    /// upper one.
    pub edges: Vec<(usize, usize)>,
}

impl HasseDiagram {
    /// Strict inclusion `lower ⊂ upper` between node spaces.
    pub fn below(&self, lower: usize, upper: usize) -> bool {
        let (a, b) = (
            &self.nodes[lower].space.group,
            &self.nodes[upper].space.group,
        );
        b.order() < a.order() && b.is_subgroup_of(a)
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| n.labels.iter().any(|l| l == label))
    }

    /// Whether `(lower, upper)` is in the transitive closure of the edges.
    pub fn reachable(&self, lower: usize, upper: usize) -> bool {
        let mut stack = vec![lower];
        let mut seen = vec![false; self.nodes.len()];
        while let Some(x) = stack.pop() {
            if x == upper {
                return true;
            }
            if std::mem::replace(&mut seen[x], true) {
                continue;
            }
            stack.extend(self.edges.iter().filter(|e| e.0 == x).map(|e| e.1));
        }
        false
    }
}

/// Builds the Hasse diagram: equal spaces are merged (labels collected in
/// input order), nodes are ordered by decreasing group order with ties in
/// input order, and only covering pairs become edges.
pub fn hasse(spaces: Vec<DefinabilitySpace>) -> Result<HasseDiagram> {
    let mut nodes: Vec<HasseNode> = Vec::new();
    for space in spaces {
        if let Some(first) = nodes.first() {
            if first.space.group.degree() != space.group.degree() {
                return Err(Error::SizeMismatch {
                    left: first.space.group.degree(),
                    right: space.group.degree(),
                });
            }
        }
        let label = space.label();
        match nodes.iter_mut().find(|n| n.space.group == space.group) {
            Some(node) => node.labels.push(label),
            None => nodes.push(HasseNode {
                labels: vec![label],
                space,
            }),
        }
    }
    nodes.sort_by_key(|n| Reverse(n.order()));
    let mut d = HasseDiagram {
        nodes,
        edges: Vec::new(),
    };
    let k = d.nodes.len();
    for a in 0..k {
        for b in 0..k {
            if d.below(a, b) && !(0..k).any(|c| d.below(a, c) && d.below(c, b)) {
                d.edges.push((a, b));
            }
        }
    }
    Ok(d)
}

/// Least certificate that `upper` strictly contains `lower` as a space: a
/// member of the lower group breaking one of the upper generators. `None`
/// when every lower automorphism preserves the upper generators.
pub fn inclusion_witness(
    lower: &DefinabilitySpace,
    upper: &DefinabilitySpace,
) -> Result<Option<Witness>> {
    least_breaker(&lower.group, &lower.generators, &upper.generators)
}

/// For every edge, the least permutation of the lower group outside the
/// upper group, with the upper generator it breaks.
pub fn strictness_witnesses(d: &HasseDiagram) -> Result<Vec<((usize, usize), Witness)>> {
    d.edges
        .iter()
        .map(|&(lo, up)| {
            let lower = &d.nodes[lo].space;
            let upper = &d.nodes[up].space;
            let w = inclusion_witness(lower, upper)?
                .ok_or_else(|| Error::Input(format!("edge {lo}->{up} is not strict")))?;
            Ok(((lo, up), w))
        })
        .collect()
}
