use hook_specht::combinatorics::{
    binomial, enumerate_standard_hook, leg_word, residue_sequence, residue_sequence_hook,
    BipartitionShape, Charge, Node, Permutation, Tableau,
};
use hook_specht::{LegSet, Params, ResidueSeq};
use proptest::prelude::*;

fn shape_5_3_221() -> BipartitionShape {
    BipartitionShape::General(vec![5, 3], vec![2, 2, 1])
}

#[test]
fn column_initial_residues_of_two_component_shape() {
    let charge = Charge::new(3, (0, 1)).unwrap();
    let t = Tableau::column_initial(shape_5_3_221()).unwrap();
    assert_eq!(t.entry_at(Node::new(1, 1, 2).unwrap()), Some(1));
    assert_eq!(t.entry_at(Node::new(1, 1, 1).unwrap()), Some(6));
    assert_eq!(t.entry_at(Node::new(1, 5, 1).unwrap()), Some(13));
    assert_eq!(
        residue_sequence(&t, &charge),
        ResidueSeq(vec![1, 0, 2, 2, 1, 0, 2, 1, 0, 2, 1, 0, 1])
    );
}

#[test]
fn permuted_tableau_residues() {
    let charge = Charge::new(3, (0, 1)).unwrap();
    let t = Tableau::column_initial(shape_5_3_221()).unwrap();
    let w = Permutation::from_cycles(13, &[vec![4, 5, 6], vec![11, 13, 12]]).unwrap();
    let s = t.permuted(&w).unwrap();

    // s drawn row by row: (4 8 10 11 12 / 7 9 13) over (1 5 / 2 6 / 3)
    let rows = [
        (1, vec![4, 8, 10, 11, 12]),
        (1, vec![7, 9, 13]),
        (2, vec![1, 5]),
        (2, vec![2, 6]),
        (2, vec![3]),
    ];
    let mut row_in_comp = [0, 0];
    for (comp, entries) in rows {
        row_in_comp[comp - 1] += 1;
        for (c, k) in entries.iter().enumerate() {
            let node = Node::new(row_in_comp[comp - 1], c + 1, comp).unwrap();
            assert_eq!(s.entry_at(node), Some(*k));
        }
    }
    assert_eq!(
        residue_sequence(&s, &charge),
        ResidueSeq(vec![1, 0, 2, 0, 2, 1, 2, 1, 0, 2, 0, 1, 1])
    );
}

#[test]
fn hook_residue_examples() {
    let p = Params::new(3, (0, 1), 5, 3).unwrap();
    assert_eq!(
        residue_sequence_hook(&p, &LegSet::initial(3)).unwrap(),
        ResidueSeq(vec![1, 0, 2, 0, 1])
    );
    let p = Params::new(3, (0, 0), 4, 1).unwrap();
    assert_eq!(
        residue_sequence_hook(&p, &LegSet::new(vec![2], 4, 1).unwrap()).unwrap(),
        ResidueSeq(vec![0, 0, 1, 2])
    );
    let p = Params::new(4, (1, 3), 6, 0).unwrap();
    assert_eq!(
        residue_sequence_hook(&p, &LegSet::initial(0)).unwrap(),
        ResidueSeq(vec![1, 2, 3, 0, 1, 2])
    );
}

#[test]
fn enumeration_sizes() {
    let p = Params::new(3, (0, 2), 6, 3).unwrap();
    assert_eq!(enumerate_standard_hook(&p).len(), 20);
    assert_eq!(enumerate_standard_hook(&p.with_m(0).unwrap()).len(), 1);
}

#[test]
fn leg_sets_reject_bad_input() {
    assert!(LegSet::new(vec![1, 3], 5, 2).is_ok());
    // leg entries increase down the column
    assert!(LegSet::new(vec![3, 1], 5, 2).is_err());
    assert!(LegSet::new(vec![1, 1], 5, 2).is_err());
    assert!(LegSet::new(vec![1, 6], 5, 2).is_err());
    assert!(LegSet::new(vec![1], 5, 2).is_err());
}

fn params_strategy() -> impl Strategy<Value = Params> {
    (3u32..6, -6i64..6, -6i64..6, 1usize..9)
        .prop_flat_map(|(e, k1, k2, n)| (Just((e, k1, k2, n)), 0..=n))
        .prop_map(|((e, k1, k2, n), m)| Params::new(e, (k1, k2), n, m).unwrap())
}

fn params_and_legs() -> impl Strategy<Value = (Params, LegSet)> {
    params_strategy().prop_flat_map(|p| {
        let all = enumerate_standard_hook(&p);
        (Just(p), prop::sample::select(all))
    })
}

proptest! {
    #[test]
    fn enumeration_counts_binomial(p in params_strategy()) {
        let all = enumerate_standard_hook(&p);
        prop_assert_eq!(all.len(), binomial(p.n, p.m));
        prop_assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn closed_form_residues_match_tableau((p, legs) in params_and_legs()) {
        let t = Tableau::hook(p.n, &legs).unwrap();
        prop_assert!(t.is_standard());
        prop_assert_eq!(residue_sequence_hook(&p, &legs).unwrap(), residue_sequence(&t, &p.charge()));
    }

    #[test]
    fn leg_word_carries_initial_tableau((p, legs) in params_and_legs()) {
        let word = leg_word(&legs);
        prop_assert!(word.is_reduced());
        let t0 = Tableau::column_initial(BipartitionShape::Hook { n: p.n, m: p.m }).unwrap();
        let t = t0.permuted(&word.permutation(p.n)).unwrap();
        prop_assert_eq!(t.leg_set().unwrap(), legs);
    }

    #[test]
    fn residues_are_in_range((p, legs) in params_and_legs()) {
        let r = residue_sequence_hook(&p, &legs).unwrap();
        prop_assert_eq!(r.len(), p.n);
        prop_assert!(r.0.iter().all(|&x| x < p.e));
    }
}
