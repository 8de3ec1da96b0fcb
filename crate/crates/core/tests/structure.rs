use std::collections::BTreeMap;

use hook_specht::combinatorics::{binomial, enumerate_standard_hook};
use hook_specht::homs::{chi_applies, predicted_subspace, PredictedKind, Subquotient};
use hook_specht::linalg::{SparseVec, Subspace};
use hook_specht::structure::*;
use hook_specht::{Field, HookSpechtModule, LegSet, Params, PrimeField, Rationals};
use proptest::prelude::*;

fn all_params(es: std::ops::RangeInclusive<u32>, ns: std::ops::RangeInclusive<usize>) -> Vec<Params> {
    let mut out = Vec::new();
    for e in es {
        for k1 in 0..e as i64 {
            for k2 in 0..e as i64 {
                for n in ns.clone() {
                    for m in 0..=n {
                        out.push(Params::new(e, (k1, k2), n, m).unwrap());
                    }
                }
            }
        }
    }
    out
}

#[test]
fn irr_words_land_on_target_with_coefficient_one() {
    let q = Rationals;
    let mut words = 0;
    let mut no_word = BTreeMap::new();
    for p in all_params(3..=5, 2..=8) {
        if p.m == 0 {
            continue;
        }
        let module = HookSpechtModule::new(q, p);
        for legs in module.basis() {
            for i in 1..=p.m {
                if (1..i).any(|j| legs.a(j) != j) || legs.a(i) <= i {
                    continue;
                }
                match irr_word(i, legs, &p).unwrap() {
                    IrrWord::Word { word, target } => {
                        let low = if chi_applies(&p) && i == 1 { 2 } else { i };
                        assert_eq!(target, legs.replaced(legs.a(i), low));
                        // the matrix action, not the symbolic one
                        let got = module.apply_word(&word, &module.vector(legs).unwrap()).unwrap();
                        assert_eq!(got, module.vector(&target).unwrap(), "{p} i={i} {legs} via {word:?}");
                        words += 1;
                    }
                    IrrWord::NoWord(why) => {
                        let a = legs.a(i);
                        let expected = (chi_applies(&p) && i == 1 && a == 2)
                            || (i == p.m && a == p.n);
                        assert!(expected, "{p} i={i} {legs}: {why}");
                        *no_word.entry(why).or_insert(0) += 1;
                    }
                }
            }
        }
    }
    assert!(words > 10_000);
    assert_eq!(no_word.len(), 3, "{no_word:?}");
}

#[test]
fn irr_word_rejects_bad_prefix() {
    let p = Params::new(3, (0, 0), 6, 3).unwrap();
    let legs = LegSet::new(vec![1, 3, 5], 6, 3).unwrap();
    assert!(irr_word(3, &legs, &p).is_err());
    assert!(irr_word(1, &legs, &p).is_err());
    assert!(irr_word(2, &legs, &p).is_ok());
}

#[test]
fn separators_exist_for_all_pairs() {
    let q = Rationals;
    let mut routes = BTreeMap::new();
    for p in all_params(3..=4, 2..=7) {
        let module = HookSpechtModule::new(q, p);
        let basis = module.basis();
        for (x, s) in basis.iter().enumerate() {
            for t in &basis[x + 1..] {
                let sep = separator(s, t, &p).unwrap();
                let (vs, vt) = (module.vector(s).unwrap(), module.vector(t).unwrap());
                let (xs, xt) = match &sep.element {
                    SeparatingElement::Idempotent(i) => {
                        let e = module.idempotent(i).unwrap();
                        (e.apply(&q, &vs).unwrap(), e.apply(&q, &vt).unwrap())
                    }
                    SeparatingElement::Word(w) => {
                        (module.apply_word(w, &vs).unwrap(), module.apply_word(w, &vt).unwrap())
                    }
                };
                match sep.survivor {
                    Side::S => assert!(!xs.is_zero() && xt.is_zero()),
                    Side::T => assert!(xs.is_zero() && !xt.is_zero()),
                }
                *routes.entry(format!("{:?}", sep.route)).or_insert(0usize) += 1;
            }
        }
    }
    assert!(routes["Idempotent"] > 0 && routes["CaseAnalysis"] > 0, "{routes:?}");
}

#[test]
fn separator_rejects_equal_vectors() {
    let p = Params::new(3, (0, 0), 4, 2).unwrap();
    let s = LegSet::initial(2);
    assert!(separator(&s, &s, &p).is_err());
}

#[test]
fn case_detection_examples() {
    let tag = |e, kappa, n, m| detect_case(&Params::new(e, kappa, n, m).unwrap());
    assert_eq!(tag(3, (0, 0), 5, 2), CaseTag::I);
    assert_eq!(tag(3, (0, 1), 5, 3), CaseTag::II);
    assert_eq!(tag(3, (0, 2), 5, 2), CaseTag::III);
    assert_eq!(tag(3, (0, 2), 6, 1), CaseTag::IVEdgeLow);
    assert_eq!(tag(3, (0, 2), 6, 3), CaseTag::IVMiddle);
    assert_eq!(tag(3, (0, 2), 6, 5), CaseTag::IVEdgeHigh);
    assert_eq!(tag(3, (0, 2), 6, 0), CaseTag::OneDim);
    assert_eq!(tag(3, (0, 2), 6, 6), CaseTag::OneDim);
    assert_eq!(CaseTag::IVEdgeLow.to_string(), "IV-edge-low");
}

#[test]
fn case_one_module_is_irreducible() {
    let q = Rationals;
    let p = Params::new(3, (0, 0), 5, 2).unwrap();
    let r = composition_series(&q, &p, 1).unwrap();
    assert_eq!(r.factor_dims, vec![10]);
    assert!(r.passed());
    assert!(r.factors[0].irreducibility.oracle_trials >= 20);
}

#[test]
fn case_two_example() {
    let p = Params::new(3, (0, 1), 5, 3).unwrap();
    let r = composition_series(&Rationals, &p, 2).unwrap();
    assert_eq!(r.case, CaseTag::II);
    assert_eq!(r.chain_dims, vec![6, 10]);
    assert_eq!(r.factor_dims, vec![6, 4]);
    assert!(r.passed(), "{r:?}");
}

#[test]
fn case_three_example() {
    let p = Params::new(3, (0, 2), 5, 2).unwrap();
    let r = composition_series(&Rationals, &p, 3).unwrap();
    assert_eq!(r.case, CaseTag::III);
    assert_eq!(r.factor_dims, vec![6, 4]);
    assert!(r.isomorphisms.iter().any(|c| c.id.starts_with("chi_2")));
    assert!(r.isomorphisms.iter().any(|c| c.id.starts_with("tau_2")));
    assert!(r.passed(), "{r:?}");
}

#[test]
fn case_four_examples() {
    let f = PrimeField::new(5).unwrap();
    let p = Params::new(3, (0, 2), 6, 3).unwrap();
    let r = composition_series(&f, &p, 4).unwrap();
    assert_eq!(r.factor_dims, vec![6, 4, 4, 6]);
    assert_eq!(r.chain_dims, vec![6, 10, 14, 20]);
    assert!(r.passed(), "{r:?}");
    for m in [1, 5] {
        let r = composition_series(&f, &p.with_m(m).unwrap(), 4).unwrap();
        assert_eq!(r.factor_dims, vec![1, 4, 1]);
        assert!(r.passed(), "{r:?}");
    }
}

#[test]
fn factor_dims_sum_to_module_dim() {
    for p in all_params(3..=5, 1..=9) {
        let dims = predicted_factor_dims(&p);
        assert_eq!(dims.iter().sum::<usize>(), binomial(p.n, p.m), "{p}");
        assert!(dims.iter().all(|&d| d > 0), "{p}");
    }
}

#[test]
fn composition_series_grid() {
    let f = PrimeField::new(7).unwrap();
    let mut per_case = BTreeMap::new();
    for p in all_params(3..=4, 1..=7) {
        let r = composition_series(&f, &p, 9).unwrap();
        assert!(r.passed(), "{p}: {r:?}");
        *per_case.entry(r.case.to_string()).or_insert(0usize) += 1;
    }
    assert_eq!(per_case.len(), 7, "{per_case:?}");
}

#[test]
fn reducible_module_is_flagged() {
    let q = Rationals;
    let p = Params::new(3, (0, 1), 5, 3).unwrap();
    let module = HookSpechtModule::new(q, p);
    let sq = Subquotient::whole(&q, module.dim());
    let r = is_irreducible(&q, &module.generators(), &sq, 5).unwrap();
    assert!(!r.irreducible);
    let (_, spun) = r.witness.unwrap();
    assert_eq!(spun, 6);
    assert!(r.consistent());
}

#[test]
fn im_phi_is_irreducible() {
    let q = Rationals;
    let p = Params::new(3, (0, 2), 6, 3).unwrap();
    let module = HookSpechtModule::new(q, p);
    let sub = predicted_subspace(&q, PredictedKind::ImPhi, 3, &p).unwrap();
    let r = is_irreducible(&q, &module.generators(), &Subquotient::submodule(sub), 11).unwrap();
    assert_eq!(r.dim, 6);
    assert!(r.irreducible && r.consistent());
    assert_eq!(r.oracle_split, None);
}

#[test]
fn zero_quotient_is_not_irreducible() {
    let q = Rationals;
    let module = HookSpechtModule::new(q, Params::new(3, (0, 0), 3, 1).unwrap());
    let full = Subspace::full(&q, 3);
    let sq = Subquotient::new(&q, full.clone(), full).unwrap();
    let r = is_irreducible(&q, &module.generators(), &sq, 0).unwrap();
    assert!(!r.irreducible);
    assert_eq!(r.oracle_trials, 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn series_passes_over_rationals(e in 3u32..6, k1 in 0i64..5, k2 in 0i64..5, n in 1usize..8, seed in 0u64..1000) {
        let m = (seed as usize) % (n + 1);
        let p = Params::new(e, (k1, k2), n, m).unwrap();
        let r = composition_series(&Rationals, &p, seed).unwrap();
        prop_assert!(r.passed(), "{:?}", r);
        prop_assert_eq!(r.factor_dims.len(), r.chain.len());
    }

    #[test]
    fn separator_is_symmetric_up_to_side(e in 3u32..5, k in 0i64..4, n in 2usize..7, x in 0usize..100, y in 0usize..100) {
        let p = Params::new(e, (0, k), n, n / 2).unwrap();
        let basis = enumerate_standard_hook(&p);
        let (s, t) = (&basis[x % basis.len()], &basis[y % basis.len()]);
        prop_assume!(s != t);
        let a = separator(s, t, &p).unwrap();
        let b = separator(t, s, &p).unwrap();
        prop_assert_eq!(a.route == Route::Idempotent, b.route == Route::Idempotent);
    }

    #[test]
    fn lifts_generate_in_case_one(e in 3u32..6, n in 2usize..7, seed in 0u64..50) {
        let q = Rationals;
        // κ = (0,0) with n ≢ 1 is Case I
        prop_assume!(n % e as usize != 1);
        let p = Params::new(e, (0, 0), n, (seed as usize) % (n + 1)).unwrap();
        let module = HookSpechtModule::new(q, p);
        let v = SparseVec::unit(&q, module.dim(), seed as usize % module.dim()).scale(&q, &q.from_i64(3));
        let spun = hook_specht::linalg::spin(&q, &[v], &module.generators()).unwrap();
        prop_assert!(spun.is_full());
    }
}
