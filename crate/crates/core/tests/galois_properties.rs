use std::collections::BTreeSet;

use proptest::prelude::*;
use reductlab_core::brute::aut_group_exhaustive;
use reductlab_core::grid::Orientation;
use reductlab_core::logic::evaluate;
use reductlab_core::verify::lifts;
use reductlab_core::{
    aut_group, definable, generate_group, parse, Definability, FiniteStructure, GridStructure,
    Permutation, PermutationGroup, Relation, RelationPreset,
};

fn orbit_relation(group: &PermutationGroup) -> Relation {
    let n = group.degree();
    let tuples = group.members().iter().map(|p| p.images().to_vec());
    Relation::from_tuples("orbit", n, n, tuples).unwrap()
}

#[test]
fn every_subgroup_of_the_separation_group_is_recovered_from_its_orbit() {
    let s = FiniteStructure::linear(6).unwrap();
    let sep = RelationPreset::Separation.build(&s).unwrap();
    let d = aut_group(&s, &[sep]).unwrap();
    assert_eq!(d.order(), 12);
    let mut subgroups = BTreeSet::new();
    for a in d.members() {
        for b in d.members() {
            let h = generate_group(6, &[a.clone(), b.clone()]).unwrap();
            subgroups.insert(h.members().to_vec());
        }
    }
    // the dihedral group of order 12 has 16 subgroups
    assert_eq!(subgroups.len(), 16);
    for members in subgroups {
        let h = generate_group(6, &members).unwrap();
        let back = aut_group(&s, &[orbit_relation(&h)]).unwrap();
        assert_eq!(back, h);
    }
}

#[test]
fn grid_groups_match_lift_descriptions() {
    let g = GridStructure::new(4, 3).unwrap();
    let s = FiniteStructure::grid(g);
    let pos = lifts(&g, Orientation::AllPositive).unwrap();
    let neg = lifts(&g, Orientation::AllNegative).unwrap();
    let succ = aut_group(&s, &[RelationPreset::Succ(1).build(&s).unwrap()]).unwrap();
    assert_eq!(succ.members(), pos.as_slice());
    let codir = aut_group(&s, &[RelationPreset::Codir(1).build(&s).unwrap()]).unwrap();
    let both: BTreeSet<Permutation> = pos.iter().chain(&neg).cloned().collect();
    assert_eq!(
        codir.members().iter().cloned().collect::<BTreeSet<_>>(),
        both
    );
    let bet = aut_group(
        &s,
        &[
            RelationPreset::Codir(1).build(&s).unwrap(),
            RelationPreset::Between.build(&s).unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(
        bet.members(),
        &[Permutation::identity(12), Permutation::reversal(12)]
    );
}

#[test]
fn presets_agree_with_their_formulas_on_a_tall_grid() {
    let s = FiniteStructure::grid(GridStructure::new(2, 5).unwrap());
    for p in [
        RelationPreset::Dist(2),
        RelationPreset::Succ(3),
        RelationPreset::Codir(2),
    ] {
        let text = p.grid_formula().unwrap();
        let by_formula = evaluate(&parse(&text).unwrap(), &s).unwrap();
        assert!(by_formula.same_extension(&p.build(&s).unwrap()), "{p}");
    }
}

#[test]
fn definability_follows_group_inclusion() {
    let s = FiniteStructure::linear(5).unwrap();
    let all: Vec<Relation> = RelationPreset::ORDER_PRESETS
        .iter()
        .map(|p| p.build(&s).unwrap())
        .collect();
    for t in &all {
        for b in &all {
            let gt = aut_group(&s, std::slice::from_ref(t)).unwrap();
            let gb = aut_group(&s, std::slice::from_ref(b)).unwrap();
            let yes = definable(t, std::slice::from_ref(b), &s).unwrap() == Definability::Yes;
            assert_eq!(
                yes,
                gb.is_subgroup_of(&gt),
                "{} from {}",
                t.name(),
                b.name()
            );
            if let Definability::No(w) = definable(t, std::slice::from_ref(b), &s).unwrap() {
                assert!(w.verify(std::slice::from_ref(b), t));
            }
        }
    }
}

fn relation_strategy(n: usize) -> impl Strategy<Value = Relation> {
    (1usize..=3).prop_flat_map(move |arity| {
        proptest::collection::vec(any::<bool>(), n.pow(arity as u32)).prop_map(move |cells| {
            let tuples = reductlab_core::structure::all_tuples(n, arity)
                .zip(cells)
                .filter(|(_, c)| *c)
                .map(|(t, _)| t);
            Relation::from_tuples("r", arity, n, tuples).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn backtracking_matches_exhaustive_on_random_relations(
        rels in (2usize..=5).prop_flat_map(|n| proptest::collection::vec(relation_strategy(n), 1..=2))
    ) {
        let n = rels[0].universe();
        let s = FiniteStructure::linear(n).unwrap();
        prop_assert_eq!(aut_group(&s, &rels).unwrap(), aut_group_exhaustive(n, &rels).unwrap());
    }

    #[test]
    fn aut_group_is_closed_and_preserves(
        rels in (2usize..=5).prop_flat_map(|n| proptest::collection::vec(relation_strategy(n), 1..=2))
    ) {
        let n = rels[0].universe();
        let s = FiniteStructure::linear(n).unwrap();
        let g = aut_group(&s, &rels).unwrap();
        prop_assert!(g.is_closed());
        for p in g.members() {
            for r in &rels {
                prop_assert!(reductlab_core::preserves(p, r).unwrap().is_preserved());
            }
        }
    }
}
