//! Reproduction suite: finite analogues of the lattice results, each checked
//! against an exhaustive or structural oracle.
//!
//! Every criterion returns a [`CriterionReport`]; [`run`] collects them and
//! adds a determinism check that repeats the suite on one and on eight
//! worker threads. Report lines contain no timings, so rendered reports are
//! byte-comparable across runs.

use std::collections::BTreeSet;
use std::fmt::Write;

use itertools::Itertools;

use crate::brute::{all_permutations, aut_group_exhaustive, MAX_EXHAUSTIVE};
use crate::error::Result;
use crate::galois::{
    aut_group, definable, hasse, inclusion_witness, Definability, DefinabilitySpace, HasseDiagram,
};
use crate::grid::{
    section_member, Block, BlockVector, GridStructure, Orientation, SectionConvention,
};
use crate::perm::{generate_group, Permutation};
use crate::relations::RelationPreset;
use crate::structure::{FiniteStructure, Relation};
use crate::with_jobs;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Linear order for the five-node lattice.
    pub linear_n: usize,
    /// Grid small enough for exhaustive filtering.
    pub small_grid: GridStructure,
    /// Grid for the seven-node lattice.
    pub lattice_grid: GridStructure,
    pub boundary_grid: GridStructure,
    pub block_grid: GridStructure,
    /// Defaults to `boundary_grid` height minus one.
    pub boundary_cap: Option<usize>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        let grid = |m, h| GridStructure::new(m, h).unwrap();
        Self {
            linear_n: 6,
            small_grid: grid(3, 2),
            lattice_grid: grid(4, 3),
            boundary_grid: grid(3, 8),
            block_grid: grid(4, 12),
            boundary_cap: None,
        }
    }
}

impl VerifyConfig {
    pub fn cap(&self) -> usize {
        self.boundary_cap
            .unwrap_or(self.boundary_grid.height().saturating_sub(1))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub id: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl CriterionReport {
    fn new(id: &'static str, name: &'static str, passed: bool, detail: String) -> Self {
        Self {
            id,
            name,
            passed,
            detail,
        }
    }

    pub fn line(&self) -> String {
        format!(
            "{} {} {}: {}",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub warnings: Vec<String>,
    pub criteria: Vec<CriterionReport>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for w in &self.warnings {
            writeln!(out, "WARN {w}").unwrap();
        }
        for c in &self.criteria {
            writeln!(out, "{}", c.line()).unwrap();
        }
        let passed = self.criteria.iter().filter(|c| c.passed).count();
        writeln!(out, "SUMMARY {passed}/{} passed", self.criteria.len()).unwrap();
        out
    }
}

fn lin(n: usize) -> Result<FiniteStructure> {
    FiniteStructure::linear(n)
}

fn build(s: &FiniteStructure, presets: &[RelationPreset]) -> Result<Vec<Relation>> {
    presets.iter().map(|p| p.build(s)).collect()
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).join(",")
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// The five order spaces on a linear order, as a Hasse diagram.
pub fn order_diagram(s: &FiniteStructure) -> Result<HasseDiagram> {
    use RelationPreset::*;
    let spaces = [Equality, Separation, Between, Cycle, Order]
        .iter()
        .map(|&p| DefinabilitySpace::new(s, vec![p.build(s)?]))
        .collect::<Result<Vec<_>>>()?;
    hasse(spaces)
}

/// Generator sets for the seven grid spaces, with node labels.
pub fn grid_generators() -> Vec<(&'static str, Vec<RelationPreset>)> {
    use RelationPreset::*;
    vec![
        ("neighbor", vec![Neighbor]),
        ("codir_1", vec![Codir(1)]),
        ("succ_1", vec![Succ(1)]),
        ("codir_1+separation", vec![Codir(1), Separation]),
        ("codir_1+cycle", vec![Codir(1), Cycle]),
        ("codir_1+between", vec![Codir(1), Between]),
        ("order", vec![Order]),
    ]
}

pub fn grid_spaces(s: &FiniteStructure, include_neighbor: bool) -> Result<Vec<DefinabilitySpace>> {
    grid_generators()
        .into_iter()
        .filter(|(label, _)| include_neighbor || *label != "neighbor")
        .map(|(_, ps)| DefinabilitySpace::new(s, build(s, &ps)?))
        .collect()
}

/// The seven grid spaces (or six without `neighbor`) as a Hasse diagram.
pub fn grid_diagram(s: &FiniteStructure, include_neighbor: bool) -> Result<HasseDiagram> {
    hasse(grid_spaces(s, include_neighbor)?)
}

pub fn a1_order_lattice(cfg: &VerifyConfig) -> Result<CriterionReport> {
    let n = cfg.linear_n;
    let s = lin(n)?;
    let d = order_diagram(&s)?;
    let mut ok = d.nodes.len() == 5;
    let orders: Vec<usize> = d.nodes.iter().map(|x| x.order()).collect();
    let expected_orders = {
        let mut v = vec![factorial(n), 2 * n, n, 2, 1];
        v.sort_by(|a, b| b.cmp(a));
        v
    };
    ok &= orders == expected_orders;
    let mut shape_ok = false;
    if let (Some(eq), Some(sep), Some(bet), Some(cyc), Some(ord)) = (
        d.index_of("equality"),
        d.index_of("separation"),
        d.index_of("between"),
        d.index_of("cycle"),
        d.index_of("order"),
    ) {
        let mut expected = vec![(eq, sep), (sep, bet), (sep, cyc), (bet, ord), (cyc, ord)];
        expected.sort();
        let mut edges = d.edges.clone();
        edges.sort();
        shape_ok = edges == expected && !d.below(bet, cyc) && !d.below(cyc, bet);
    }
    ok &= shape_ok;
    let oracle = if n <= MAX_EXHAUSTIVE {
        let mut same = true;
        for node in &d.nodes {
            let brute = aut_group_exhaustive(n, node.space.generators())?;
            same &= &brute == node.space.group();
        }
        if same {
            "exhaustive=match"
        } else {
            "exhaustive=MISMATCH"
        }
    } else {
        "exhaustive=skipped"
    };
    ok &= oracle != "exhaustive=MISMATCH";
    Ok(CriterionReport::new(
        "A1",
        "order-lattice",
        ok,
        format!(
            "L{n} nodes={} orders={} edges={} shape={} {oracle}",
            d.nodes.len(),
            join(&orders),
            d.edges.len(),
            if shape_ok { "ok" } else { "wrong" }
        ),
    ))
}

pub fn a2_equipollence(_cfg: &VerifyConfig) -> Result<CriterionReport> {
    let mut ok = true;
    let mut parts = Vec::new();
    for n in 4..=6 {
        let s = lin(n)?;
        let b = RelationPreset::Between.build(&s)?;
        let e = RelationPreset::Equipollence.build(&s)?;
        let fwd = definable(&e, std::slice::from_ref(&b), &s)? == Definability::Yes;
        let back = definable(&b, std::slice::from_ref(&e), &s)? == Definability::Yes;
        ok &= fwd && back;
        parts.push(format!(
            "L{n}:{}",
            if fwd && back { "both" } else { "FAILED" }
        ));
    }
    Ok(CriterionReport::new(
        "A2",
        "equipollence-equals-between",
        ok,
        parts.join(" "),
    ))
}

/// All-positive and all-negative lifts of every vertical permutation.
pub fn lifts(g: &GridStructure, orientation: Orientation) -> Result<Vec<Permutation>> {
    let m = g.verticals();
    let mut out = all_permutations(m)
        .map(|q| g.lift(&q, &orientation))
        .collect::<Result<Vec<_>>>()?;
    out.sort();
    Ok(out)
}

pub fn a3_grid_groups(cfg: &VerifyConfig) -> Result<CriterionReport> {
    let g = cfg.small_grid;
    let s = FiniteStructure::grid(g);
    let n = g.size();
    if n > MAX_EXHAUSTIVE {
        return Ok(CriterionReport::new(
            "A3",
            "grid-group-identification",
            false,
            format!(
                "G({},{}) too large for exhaustive filter",
                g.verticals(),
                g.height()
            ),
        ));
    }
    let systemic: Vec<Permutation> = all_permutations(n)
        .filter(|p| g.classify(p).map(|c| c.systemic).unwrap_or(false))
        .collect();
    let pos = lifts(&g, Orientation::AllPositive)?;
    let neg = lifts(&g, Orientation::AllNegative)?;
    let pos_or_neg: Vec<Permutation> = pos
        .iter()
        .chain(&neg)
        .cloned()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let cases: [(RelationPreset, Vec<Permutation>); 4] = [
        (RelationPreset::Neighbor, systemic),
        (RelationPreset::Codir(1), pos_or_neg),
        (RelationPreset::Succ(1), pos),
        (RelationPreset::Order, vec![Permutation::identity(n)]),
    ];
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, expected) in cases {
        let grp = aut_group_exhaustive(n, &[p.build(&s)?])?;
        let same = grp.members() == expected.as_slice();
        ok &= same;
        parts.push(format!(
            "{p}={}{}",
            grp.order(),
            if same { "" } else { "(MISMATCH)" }
        ));
    }
    Ok(CriterionReport::new(
        "A3",
        "grid-group-identification",
        ok,
        format!("G({},{}) {}", g.verticals(), g.height(), parts.join(" ")),
    ))
}

fn grid_presets() -> Vec<RelationPreset> {
    use RelationPreset::*;
    let mut v = RelationPreset::ORDER_PRESETS.to_vec();
    v.extend([
        Neighbor,
        Dist(1),
        Dist(2),
        Succ(1),
        Succ(2),
        Codir(1),
        Codir(2),
    ]);
    v
}

pub fn a4_backtracking(cfg: &VerifyConfig) -> Result<CriterionReport> {
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let mut structures: Vec<(String, FiniteStructure, Vec<RelationPreset>)> = (4..=7)
        .map(|n| {
            Ok((
                format!("L{n}"),
                lin(n)?,
                RelationPreset::ORDER_PRESETS.to_vec(),
            ))
        })
        .collect::<Result<_>>()?;
    let g = cfg.small_grid;
    if g.size() <= MAX_EXHAUSTIVE {
        structures.push((
            format!("G({},{})", g.verticals(), g.height()),
            FiniteStructure::grid(g),
            grid_presets(),
        ));
    }
    for (label, s, presets) in &structures {
        for p in presets {
            let r = p.build(s)?;
            let fast = aut_group(s, std::slice::from_ref(&r))?;
            let slow = aut_group_exhaustive(s.size(), std::slice::from_ref(&r))?;
            checked += 1;
            if fast != slow {
                mismatches.push(format!("{label}/{p}"));
            }
        }
    }
    let ok = mismatches.is_empty() && g.size() <= MAX_EXHAUSTIVE;
    Ok(CriterionReport::new(
        "A4",
        "backtracking-equals-exhaustive",
        ok,
        format!(
            "structures={} groups={checked} mismatches={}",
            structures.iter().map(|x| x.0.as_str()).join(","),
            if mismatches.is_empty() {
                "none".to_string()
            } else {
                mismatches.join(",")
            }
        ),
    ))
}

/// Group orders of the seven grid spaces predicted for `m >= 3`, `h >= 2`.
pub fn expected_fig2_orders(g: &GridStructure) -> [usize; 7] {
    let m = g.verticals();
    let mf = factorial(m);
    [mf << m, 2 * mf, mf, 2 * m, m, 2, 1]
}

/// Warnings for grids too small to keep the seven spaces apart.
pub fn degeneracy_warnings(g: &GridStructure) -> Vec<String> {
    let mut w = Vec::new();
    if g.verticals() < 3 {
        w.push(format!(
            "degenerate grid G({},{}): fewer than 3 verticals, separation and cycle nodes may collapse",
            g.verticals(),
            g.height()
        ));
    }
    if g.height() < 2 {
        w.push(format!(
            "degenerate grid G({},{}): height 1 has no neighbor pairs",
            g.verticals(),
            g.height()
        ));
    }
    w
}

pub fn a5_grid_lattice(cfg: &VerifyConfig) -> Result<CriterionReport> {
    let g = cfg.lattice_grid;
    let s = FiniteStructure::grid(g);
    let gens = grid_generators();
    let spaces = grid_spaces(&s, true)?;
    let orders: Vec<usize> = spaces.iter().map(|x| x.group().order()).collect();
    let mut ok = orders == expected_fig2_orders(&g);

    let mut collapsed = Vec::new();
    for i in 0..spaces.len() {
        for j in i + 1..spaces.len() {
            if spaces[i].group() == spaces[j].group() {
                collapsed.push(format!("{}={}", gens[i].0, gens[j].0));
            }
        }
    }
    ok &= collapsed.is_empty();

    // (lower space, upper space) by index into the generator list
    let (nb, cd, sc, sep, cyc, bet, ord) = (0, 1, 2, 3, 4, 5, 6);
    let chain = [
        (bet, ord),
        (sep, bet),
        (cd, sep),
        (cyc, ord),
        (sep, cyc),
        (sc, cyc),
        (cd, sc),
        (nb, cd),
    ];
    let mut strict = 0;
    let mut witnessed = 0;
    for &(lo, up) in &chain {
        let (gl, gu) = (spaces[lo].group(), spaces[up].group());
        if gu.is_subgroup_of(gl) && gu.order() < gl.order() {
            strict += 1;
        }
        if let Some(w) = inclusion_witness(&spaces[lo], &spaces[up])? {
            let broken = spaces[up]
                .generators()
                .iter()
                .find(|r| r.name() == w.broken);
            if broken.is_some_and(|b| w.verify(spaces[lo].generators(), b)) {
                witnessed += 1;
            }
        }
    }
    ok &= strict == chain.len() && witnessed == chain.len();

    let d = hasse(spaces.clone())?;
    let closure_ok = collapsed.is_empty()
        && chain.iter().all(
            |&(lo, up)| match (d.index_of(gens[lo].0), d.index_of(gens[up].0)) {
                (Some(a), Some(b)) => d.reachable(a, b),
                _ => false,
            },
        );
    ok &= closure_ok;
    let edge_witnesses = crate::galois::strictness_witnesses(&d)
        .map(|w| w.len())
        .unwrap_or(0);
    ok &= edge_witnesses == d.edges.len();

    let range = grid_diagram(&s, false)?;

    let cross = if cfg.small_grid.size() <= MAX_EXHAUSTIVE {
        let ss = FiniteStructure::grid(cfg.small_grid);
        let mut same = true;
        for sp in grid_spaces(&ss, true)? {
            same &= &aut_group_exhaustive(ss.size(), sp.generators())? == sp.group();
        }
        ok &= same;
        format!(
            "cross-check G({},{})={}",
            cfg.small_grid.verticals(),
            cfg.small_grid.height(),
            if same { "match" } else { "MISMATCH" }
        )
    } else {
        ok = false;
        "cross-check=unavailable".to_string()
    };

    Ok(CriterionReport::new(
        "A5",
        "grid-lattice",
        ok,
        format!(
            "G({},{}) orders={} strict={strict}/{n} witnesses={witnessed}/{n} closure={} nodes={} edges={} edge-witnesses={edge_witnesses} range-nodes={} collapsed={} {cross}",
            g.verticals(),
            g.height(),
            join(&orders),
            if closure_ok { "ok" } else { "broken" },
            d.nodes.len(),
            d.edges.len(),
            range.nodes.len(),
            if collapsed.is_empty() { "none".to_string() } else { collapsed.join(",") },
            n = chain.len(),
        ),
    ))
}

pub fn a6_negative_closure(cfg: &VerifyConfig) -> Result<CriterionReport> {
    let g = cfg.small_grid;
    let pos = lifts(&g, Orientation::AllPositive)?;
    let neg = lifts(&g, Orientation::AllNegative)?;
    let mut ok = true;
    for single in &neg {
        let mut gens = pos.clone();
        gens.push(single.clone());
        let grp = generate_group(g.size(), &gens)?;
        ok &= neg.iter().all(|x| grp.contains(x));
    }
    Ok(CriterionReport::new(
        "A6",
        "one-negative-gives-all",
        ok,
        format!(
            "G({},{}) positives={} negatives={} choices={}",
            g.verticals(),
            g.height(),
            pos.len(),
            neg.len(),
            neg.len()
        ),
    ))
}

pub fn a7_sections(_cfg: &VerifyConfig) -> Result<CriterionReport> {
    let mut matched: Vec<(SectionConvention, bool)> =
        SectionConvention::ALL.iter().map(|&c| (c, true)).collect();
    let mut dihedral = true;
    for n in 4..=7 {
        let s = lin(n)?;
        let grp = aut_group_exhaustive(n, &[RelationPreset::Separation.build(&s)?])?;
        dihedral &= grp.order() == 2 * n;
        for (conv, still) in matched.iter_mut() {
            let by_sections: Vec<Permutation> = all_permutations(n)
                .filter(|q| section_member(q, *conv))
                .collect();
            *still &= by_sections.as_slice() == grp.members();
        }
    }
    let chosen = matched
        .iter()
        .find(|(c, _)| *c == SectionConvention::Vacuous)
        .map(|x| x.1)
        .unwrap_or(false);
    Ok(CriterionReport::new(
        "A7",
        "section-classifier",
        chosen && dihedral,
        format!(
            "L4..L7 dihedral={} {}",
            if dihedral { "yes" } else { "no" },
            matched
                .iter()
                .map(|(c, m)| format!("{}={}", c.name(), if *m { "match" } else { "mismatch" }))
                .join(" ")
        ),
    ))
}

pub fn a8_boundaries(cfg: &VerifyConfig) -> Result<CriterionReport> {
    use RelationPreset::*;
    let g = cfg.boundary_grid;
    let s = FiniteStructure::grid(g);
    let cap = cfg.cap();
    let mut ok = true;
    let mut parts = Vec::new();
    for (p, expected) in [(Order, 0), (Succ(1), 1), (Dist(1), 1), (Codir(2), 2)] {
        let r = p.build(&s)?;
        match g.boundary(&r, cap) {
            Ok(b) => {
                ok &= b == expected;
                parts.push(format!("{p}={b}"));
            }
            Err(_) => {
                ok = false;
                parts.push(format!("{p}=exceeds-cap"));
            }
        }
    }
    Ok(CriterionReport::new(
        "A8",
        "boundaries",
        ok,
        format!(
            "G({},{}) cap={cap} {}",
            g.verticals(),
            g.height(),
            parts.join(" ")
        ),
    ))
}

/// Strictly increasing level sets starting at 0 with `size` elements and
/// span at most `max_span`.
fn blocks_of(size: usize, max_span: usize) -> Vec<Block> {
    if size == 1 {
        return vec![Block::new(vec![0]).unwrap()];
    }
    (1..=max_span)
        .combinations(size - 1)
        .map(|rest| {
            let mut levels = vec![0];
            levels.extend(rest);
            Block::new(levels).unwrap()
        })
        .collect()
}

/// Every block vector with `arity` points in total and total span at most
/// `max_span`.
pub fn block_vectors(arity: usize, max_span: usize) -> Vec<BlockVector> {
    fn go(remaining: usize, budget: usize, acc: &mut Vec<Block>, out: &mut Vec<BlockVector>) {
        if remaining == 0 {
            out.push(BlockVector::new(acc.clone()));
            return;
        }
        for size in 1..=remaining {
            for b in blocks_of(size, budget) {
                let span = b.span();
                acc.push(b);
                go(remaining - size, budget - span, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(arity, max_span, &mut Vec::new(), &mut out);
    out
}

/// Counts for the block reshuffle check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ReshuffleStats {
    pub vectors: usize,
    pub comparisons: usize,
    pub changed: usize,
    pub skipped: usize,
}

/// Places every block vector in three ways (one block per vertical; the
/// four groups `1..=k`, `k+1..=l`, `l+1..=m`, `m+1..=n` on verticals 0..3;
/// the same groups on verticals 3..0) and compares the truth value of `r`
/// on each placement under every reordering of the tuple positions.
pub fn block_reshuffle(
    g: &GridStructure,
    r: &Relation,
    gap: usize,
    max_span: usize,
) -> Result<ReshuffleStats> {
    let mut stats = ReshuffleStats::default();
    let arity = r.arity();
    let orders: Vec<Vec<usize>> = (0..arity).permutations(arity).collect();
    for bv in block_vectors(arity, max_span) {
        let n = bv.len();
        if n > g.verticals() || g.verticals() < 4 {
            stats.skipped += 1;
            continue;
        }
        stats.vectors += 1;
        let spread: Vec<usize> = (0..n).collect();
        let Ok(base) = g.place_blocks(&bv, &spread, gap) else {
            stats.skipped += 1;
            continue;
        };
        for k in 1..=n {
            for l in k..=n {
                for m in l..=n {
                    let group = |i: usize| {
                        let i = i + 1;
                        if i <= k {
                            0
                        } else if i <= l {
                            1
                        } else if i <= m {
                            2
                        } else {
                            3
                        }
                    };
                    let forward: Vec<usize> = (0..n).map(group).collect();
                    let backward: Vec<usize> = forward.iter().map(|v| 3 - v).collect();
                    let (Ok(a), Ok(b)) = (
                        g.place_blocks(&bv, &forward, gap),
                        g.place_blocks(&bv, &backward, gap),
                    ) else {
                        stats.skipped += 1;
                        continue;
                    };
                    for ord in &orders {
                        let pick = |t: &[usize]| ord.iter().map(|&i| t[i]).collect::<Vec<_>>();
                        let (t0, ta, tb) = (pick(&base), pick(&a), pick(&b));
                        stats.comparisons += 1;
                        let v = r.contains(&t0);
                        if r.contains(&ta) != v || r.contains(&tb) != v {
                            stats.changed += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(stats)
}

pub fn a9_block_reshuffle(cfg: &VerifyConfig) -> Result<CriterionReport> {
    use RelationPreset::*;
    let g = cfg.block_grid;
    let s = FiniteStructure::grid(g);
    let bs = FiniteStructure::grid(cfg.boundary_grid);
    let cap = cfg.cap();
    let mut ok = g.verticals() >= 4;
    let mut parts = Vec::new();
    for p in [Succ(1), Codir(1)] {
        let Ok(beta) = cfg.boundary_grid.boundary(&p.build(&bs)?, cap) else {
            ok = false;
            parts.push(format!("{p}:boundary-exceeds-cap"));
            continue;
        };
        let st = block_reshuffle(&g, &p.build(&s)?, beta, 6)?;
        ok &= st.changed == 0 && st.skipped == 0 && st.comparisons > 0;
        parts.push(format!(
            "{p}:beta={beta} vectors={} comparisons={} changed={}",
            st.vectors, st.comparisons, st.changed
        ));
    }
    // the order relation is not preserved by reshuffles; the check must see it
    let control = block_reshuffle(&g, &Order.build(&s)?, 0, 6)?;
    ok &= control.changed > 0;
    parts.push(format!("control order changed={}", control.changed));
    Ok(CriterionReport::new(
        "A9",
        "block-reshuffle",
        ok,
        format!("G({},{}) {}", g.verticals(), g.height(), parts.join(" ")),
    ))
}

/// A1 through A9, in order.
pub fn run_core(cfg: &VerifyConfig) -> Result<Report> {
    let checks: [fn(&VerifyConfig) -> Result<CriterionReport>; 9] = [
        a1_order_lattice,
        a2_equipollence,
        a3_grid_groups,
        a4_backtracking,
        a5_grid_lattice,
        a6_negative_closure,
        a7_sections,
        a8_boundaries,
        a9_block_reshuffle,
    ];
    let criteria = checks.iter().map(|c| c(cfg)).collect::<Result<Vec<_>>>()?;
    Ok(Report {
        warnings: degeneracy_warnings(&cfg.lattice_grid),
        criteria,
    })
}

/// The full suite: A1 through A9, then A10 comparing renders of the core
/// suite on one and on eight worker threads.
pub fn run(cfg: &VerifyConfig) -> Result<Report> {
    let mut report = run_core(cfg)?;
    let single = with_jobs(1, || run_core(cfg))??.render();
    let multi = with_jobs(8, || run_core(cfg))??.render();
    let same = single == multi && single == report.render();
    report.criteria.push(CriterionReport::new(
        "A10",
        "determinism",
        same,
        format!(
            "jobs=1 vs jobs=8 reports {}",
            if same { "identical" } else { "DIFFER" }
        ),
    ));
    Ok(report)
}
